//! Game values and turn order.

use core::fmt;

/// The player to move.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Turn {
    Dominator,
    Staller,
}

impl Turn {
    #[inline]
    pub fn other(self) -> Turn {
        match self {
            Turn::Dominator => Turn::Staller,
            Turn::Staller => Turn::Dominator,
        }
    }
}

/// Number of moves remaining under optimal play, or `Infinite` when Staller
/// can steer the game into a dead end with undominated vertices left.
///
/// The derived order puts `Finite(a) < Finite(b)` for `a < b` and every
/// finite value below `Infinite`, which is exactly the order the minimax
/// search needs.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GameValue {
    Finite(u32),
    Infinite,
}

impl GameValue {
    /// Value after prepending one move: `Finite(k) + 1`, with `Infinite`
    /// absorbing.
    #[inline]
    pub fn succ(self) -> GameValue {
        match self {
            GameValue::Finite(k) => GameValue::Finite(k + 1),
            GameValue::Infinite => GameValue::Infinite,
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }

    /// The finite count, if any.
    #[inline]
    pub fn finite(self) -> Option<u32> {
        match self {
            GameValue::Finite(k) => Some(k),
            GameValue::Infinite => None,
        }
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(k) => write!(f, "{k}"),
            GameValue::Infinite => write!(f, "infinity"),
        }
    }
}
