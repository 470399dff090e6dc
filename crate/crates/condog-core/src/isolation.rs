//! Deciding whether the Staller-start game on a graph with one predominated
//! vertex can run forever: the isolation game around a vertex, the
//! cut-vertex characterization built on it, and the closed-form test for
//! trees.

use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::bits::{VertexId, VertexSet, Word};
use crate::engine::legal_moves_raw;
use crate::error::Error;
use crate::graph::Graph;
use crate::value::Turn;

/// Whether `x` counts as predominated in the auxiliary isolation game.
///
/// `Predominated` is the default: it is the convention that agrees with the
/// direct solver. Under `Plain`, a move of the opponent that covers nothing
/// but `x` breaks the isolation even though the corresponding move in the
/// real game on `G|x` is illegal (it dominates nothing new), so `Plain`
/// undercounts Staller's isolation wins. The cycle with one pendant vertex,
/// with `x` the attachment vertex, separates the two.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub enum IsolationConvention {
    Plain,
    #[default]
    Predominated,
}

/// Boolean AND/OR game: can `for_player` force a position where every
/// vertex at distance 1 or 2 from `x` is dominated while no vertex of N[x]
/// has been played? Any play of a vertex in N[x] loses immediately for
/// `for_player`, as does the game ending first.
struct IsolationGame<'g, W: Word> {
    graph: &'g Graph<W>,
    predominated: VertexSet<W>,
    goal: VertexSet<W>,
    forbidden: VertexSet<W>,
    for_player: Turn,
    memo: HashMap<(VertexSet<W>, Turn), bool>,
}

impl<'g, W: Word> IsolationGame<'g, W> {
    fn new(graph: &'g Graph<W>, x: VertexId, for_player: Turn, convention: IsolationConvention) -> Self {
        let predominated = match convention {
            IsolationConvention::Plain => VertexSet::empty(),
            IsolationConvention::Predominated => VertexSet::singleton(x),
        };
        IsolationGame {
            graph,
            predominated,
            goal: graph.vertices_at_distance(x, 1, 2),
            forbidden: graph.closed_neighborhood(x),
            for_player,
            memo: HashMap::new(),
        }
    }

    fn win(&mut self, frontier: VertexSet<W>, turn: Turn) -> bool {
        let dominated = self.predominated.union(frontier);
        if self.goal.is_subset(dominated) {
            return true;
        }
        let moves = legal_moves_raw(self.graph, self.predominated, frontier);
        if moves.is_empty() {
            return false;
        }
        if let Some(&w) = self.memo.get(&(frontier, turn)) {
            return w;
        }
        let step = |this: &mut Self, v: VertexId| {
            if this.forbidden.contains(v) {
                // isolation is broken for good, whoever played it
                return false;
            }
            let child = frontier.union(this.graph.closed_neighborhood(v));
            this.win(child, turn.other())
        };
        let result = if turn == self.for_player {
            moves.iter().any(|v| step(self, v))
        } else {
            moves.iter().all(|v| step(self, v))
        };
        self.memo.insert((frontier, turn), result);
        result
    }

    /// One principal line of a won game: `for_player` picks the lowest
    /// winning move, the opponent the lowest legal move.
    fn line(&mut self, first: Turn) -> Option<Vec<VertexId>> {
        let mut frontier = VertexSet::empty();
        let mut turn = first;
        if !self.win(frontier, turn) {
            return None;
        }
        let mut moves_played = Vec::new();
        loop {
            if self.goal.is_subset(self.predominated.union(frontier)) {
                return Some(moves_played);
            }
            let moves = legal_moves_raw(self.graph, self.predominated, frontier);
            let chosen = if turn == self.for_player {
                moves.iter().find(|&v| {
                    !self.forbidden.contains(v)
                        && self.win(frontier.union(self.graph.closed_neighborhood(v)), turn.other())
                })
            } else {
                moves.first()
            };
            let v = chosen.expect("winning state must have a continuation");
            moves_played.push(v);
            frontier = frontier.union(self.graph.closed_neighborhood(v));
            turn = turn.other();
        }
    }
}

/// True iff `for_player` has an x-isolation strategy in the game on `g`
/// with the given first player.
pub fn x_isolation_winner<W: Word>(
    g: &Graph<W>,
    x: VertexId,
    first: Turn,
    for_player: Turn,
    convention: IsolationConvention,
) -> bool {
    let mut game = IsolationGame::new(g, x, for_player, convention);
    game.win(VertexSet::empty(), first)
}

/// Like [`x_isolation_winner`], additionally returning one winning line
/// when the answer is positive.
pub fn x_isolation_line<W: Word>(
    g: &Graph<W>,
    x: VertexId,
    first: Turn,
    for_player: Turn,
    convention: IsolationConvention,
) -> Option<Vec<VertexId>> {
    let mut game = IsolationGame::new(g, x, for_player, convention);
    game.line(first)
}

/// The cut-vertex characterization of an unbounded Staller-start game on
/// `G|x`: `x` must be a cut vertex and some component of `G - x` must give
/// Staller an x-isolation strategy on the piece plus `x`.
pub fn sgame_infinite_by_characterization<W: Word>(g: &Graph<W>, x: VertexId) -> bool {
    sgame_infinite_by_characterization_with(g, x, IsolationConvention::default())
}

pub fn sgame_infinite_by_characterization_with<W: Word>(
    g: &Graph<W>,
    x: VertexId,
    convention: IsolationConvention,
) -> bool {
    if !g.is_cut_vertex(x) {
        return false;
    }
    g.components_after_removal(x).into_iter().any(|comp| {
        let piece = comp.union(VertexSet::singleton(x));
        let (sub, old_of_new) = g.induced_subgraph(piece);
        let sub_x = VertexId(old_of_new.iter().position(|&v| v == x).unwrap());
        x_isolation_winner(&sub, sub_x, Turn::Staller, Turn::Staller, convention)
    })
}

/// Closed-form test on trees: the Staller-start game on `T|x` is unbounded
/// iff `x` is not a leaf and has a neighbor of degree exactly 2.
pub fn tree_sgame_infinite<W: Word>(t: &Graph<W>, x: VertexId) -> Result<bool, Error> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(t.degree(x) >= 2 && t.neighbors(x).iter().any(|v| t.degree(v) == 2))
}
