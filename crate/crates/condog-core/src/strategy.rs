//! Scripted and derived strategies, and a playout engine to run them
//! against each other.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::bits::{VertexId, Word};
use crate::engine::{GameState, SolveContext};
use crate::error::Error;
use crate::graph::LabeledGraph;
use crate::value::{GameValue, Turn};

/// A deterministic move chooser, consulted only when a legal move exists.
pub trait Strategy<W: Word> {
    fn choose(
        &mut self,
        ctx: &SolveContext<'_, W>,
        st: &GameState<W>,
        history: &[VertexId],
    ) -> Result<VertexId, Error>;
}

/// Result of running a game to its end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Playout {
    pub moves: Vec<VertexId>,
    pub outcome: PlayoutOutcome,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PlayoutOutcome {
    /// All vertices dominated.
    Finished,
    /// No legal move but undominated vertices remain.
    DeadEnd,
}

impl Playout {
    /// Move count as a game value, `Infinite` for a dead end.
    pub fn value(&self) -> GameValue {
        match self.outcome {
            PlayoutOutcome::Finished => GameValue::Finite(self.moves.len() as u32),
            PlayoutOutcome::DeadEnd => GameValue::Infinite,
        }
    }
}

/// Runs the game to termination with `dom` choosing Dominator's moves and
/// `sta` Staller's. A strategy returning an illegal move is an error.
pub fn play_out<W: Word>(
    ctx: &SolveContext<'_, W>,
    dom: &mut dyn Strategy<W>,
    sta: &mut dyn Strategy<W>,
    first: Turn,
) -> Result<Playout, Error> {
    let full = ctx.graph().vertices();
    let mut st = GameState::initial(first);
    let mut moves = Vec::new();
    loop {
        if ctx.predominated().union(st.frontier) == full {
            return Ok(Playout { moves, outcome: PlayoutOutcome::Finished });
        }
        let legal = ctx.legal_moves(&st);
        if legal.is_empty() {
            return Ok(Playout { moves, outcome: PlayoutOutcome::DeadEnd });
        }
        let chooser: &mut dyn Strategy<W> = match st.turn {
            Turn::Dominator => dom,
            Turn::Staller => sta,
        };
        let v = chooser.choose(ctx, &st, &moves)?;
        if !legal.contains(v) {
            return Err(Error::StrategyIllegalMove(v));
        }
        st = ctx.apply_move(&st, v)?;
        moves.push(v);
    }
}

/// Dominator's scripted opening on the `H` family: play `u_n` first, after
/// which every remaining move of the game is forced.
pub struct FastStrategy {
    opening: VertexId,
}

impl FastStrategy {
    /// `h` must come from the `H` family generator.
    pub fn new<W: Word>(h: &LabeledGraph<W>) -> Result<Self, Error> {
        let n = h.graph.order() / 3;
        let opening = h
            .vertex(&alloc::format!("u{n}"))
            .ok_or(Error::BadFamilyParams("expected an H-family graph"))?;
        Ok(FastStrategy { opening })
    }
}

impl<W: Word> Strategy<W> for FastStrategy {
    fn choose(
        &mut self,
        ctx: &SolveContext<'_, W>,
        st: &GameState<W>,
        _history: &[VertexId],
    ) -> Result<VertexId, Error> {
        if st.frontier.is_empty() {
            return Ok(self.opening);
        }
        let legal = ctx.legal_moves(st);
        assert_eq!(
            legal.len(),
            1,
            "opening on u_n must force the rest of the game"
        );
        Ok(legal.first().unwrap())
    }
}

/// Staller's scripted strategy on the `H` family: open on `u_0`, then play
/// the lowest-index playable `x_i`, falling back to the lowest legal move.
pub struct SlowStrategy {
    opening: VertexId,
    gadget_order: Vec<VertexId>,
}

impl SlowStrategy {
    /// `h` must come from the `H` family generator.
    pub fn new<W: Word>(h: &LabeledGraph<W>) -> Result<Self, Error> {
        let n = h.graph.order() / 3;
        let opening = h
            .vertex("u0")
            .ok_or(Error::BadFamilyParams("expected an H-family graph"))?;
        let gadget_order = (1..n)
            .map(|i| {
                h.vertex(&alloc::format!("x{i}"))
                    .ok_or(Error::BadFamilyParams("expected an H-family graph"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SlowStrategy { opening, gadget_order })
    }
}

impl<W: Word> Strategy<W> for SlowStrategy {
    fn choose(
        &mut self,
        ctx: &SolveContext<'_, W>,
        st: &GameState<W>,
        _history: &[VertexId],
    ) -> Result<VertexId, Error> {
        if st.frontier.is_empty() {
            return Ok(self.opening);
        }
        let legal = ctx.legal_moves(st);
        if let Some(&x) = self.gadget_order.iter().find(|x| legal.contains(**x)) {
            return Ok(x);
        }
        Ok(legal.first().unwrap())
    }
}

/// Plays the lowest-index move achieving the solve value. Owns its own
/// solver context over the same graph and predominated set.
pub struct OptimalStrategy<'g, W: Word> {
    solver: SolveContext<'g, W>,
}

impl<'g, W: Word> OptimalStrategy<'g, W> {
    /// Builds an optimal player for the position `ctx` describes.
    pub fn new(ctx: &SolveContext<'g, W>) -> Self {
        OptimalStrategy { solver: SolveContext::new(ctx.graph(), ctx.predominated()) }
    }
}

impl<'g, W: Word> Strategy<W> for OptimalStrategy<'g, W> {
    fn choose(
        &mut self,
        ctx: &SolveContext<'_, W>,
        st: &GameState<W>,
        _history: &[VertexId],
    ) -> Result<VertexId, Error> {
        let target = self.solver.solve(*st)?;
        for v in ctx.legal_moves(st).iter() {
            let child = self.solver.apply_move(st, v)?;
            if self.solver.solve(child)?.succ() == target {
                return Ok(v);
            }
        }
        unreachable!("some legal move must achieve the solve value")
    }
}

/// Uniform-ish random legal play from a fixed seed (xorshift); used as a
/// reproducible opponent in tests.
pub struct RandomStrategy {
    state: u64,
}

impl RandomStrategy {
    pub fn new(seed: u64) -> Self {
        RandomStrategy { state: seed.max(1) }
    }

    fn next(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }
}

impl<W: Word> Strategy<W> for RandomStrategy {
    fn choose(
        &mut self,
        ctx: &SolveContext<'_, W>,
        st: &GameState<W>,
        _history: &[VertexId],
    ) -> Result<VertexId, Error> {
        let legal: Vec<VertexId> = ctx.legal_moves(st).iter().collect();
        Ok(legal[(self.next() % legal.len() as u64) as usize])
    }
}

/// Convenience: optimal-vs-optimal playout for the position in `ctx`.
pub fn optimal_playout<W: Word>(ctx: &SolveContext<'_, W>, first: Turn) -> Result<Playout, Error> {
    let mut dom = OptimalStrategy::new(ctx);
    let mut sta = OptimalStrategy::new(ctx);
    play_out(ctx, &mut dom, &mut sta, first)
}

// Box<dyn Strategy> convenience for callers assembling matchups at runtime.
impl<W: Word> Strategy<W> for Box<dyn Strategy<W> + '_> {
    fn choose(
        &mut self,
        ctx: &SolveContext<'_, W>,
        st: &GameState<W>,
        history: &[VertexId],
    ) -> Result<VertexId, Error> {
        (**self).choose(ctx, st, history)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::VertexSet;
    use crate::families::{make_h, FamilySpec};
    use crate::value::GameValue;
    use alloc::borrow::ToOwned;

    #[test]
    fn fast_on_h_beats_every_staller() {
        for n in 2..=6 {
            let h = make_h::<u64>(n).unwrap();
            let ctx = SolveContext::new(&h.graph, VertexSet::empty());
            let mut fast = FastStrategy::new(&h).unwrap();
            let mut optimal = OptimalStrategy::new(&ctx);
            let p = play_out(&ctx, &mut fast, &mut optimal, Turn::Dominator).unwrap();
            assert_eq!(p.value(), GameValue::Finite(n as u32));
            if n == 6 {
                // exactly u_1..u_6 are played
                let mut played: Vec<_> = p
                    .moves
                    .iter()
                    .map(|&v| h.label_of(v).unwrap().to_owned())
                    .collect();
                played.sort();
                assert_eq!(played, ["u1", "u2", "u3", "u4", "u5", "u6"]);
            }
        }
        // random opposition cannot change the forced length either
        let h4 = make_h::<u64>(4).unwrap();
        let ctx = SolveContext::new(&h4.graph, VertexSet::empty());
        for seed in 0..100 {
            let mut fast = FastStrategy::new(&h4).unwrap();
            let mut random = RandomStrategy::new(seed);
            let p = play_out(&ctx, &mut fast, &mut random, Turn::Dominator).unwrap();
            assert_eq!(p.value(), GameValue::Finite(4));
        }
    }

    #[test]
    fn slow_on_h_forces_two_n() {
        for n in 2..=5 {
            let h = make_h::<u64>(n).unwrap();
            let ctx = SolveContext::new(&h.graph, VertexSet::empty());
            let mut optimal = OptimalStrategy::new(&ctx);
            let mut slow = SlowStrategy::new(&h).unwrap();
            let p = play_out(&ctx, &mut optimal, &mut slow, Turn::Staller).unwrap();
            match p.value() {
                GameValue::Finite(len) => assert!(len >= 2 * n as u32, "n={n} len={len}"),
                GameValue::Infinite => panic!("D-game side cannot dead-end on H_n"),
            }
        }
        // against the optimal Dominator the bound is met exactly
        let h3 = make_h::<u64>(3).unwrap();
        let ctx = SolveContext::new(&h3.graph, VertexSet::empty());
        let mut optimal = OptimalStrategy::new(&ctx);
        let mut slow = SlowStrategy::new(&h3).unwrap();
        let p = play_out(&ctx, &mut optimal, &mut slow, Turn::Staller).unwrap();
        assert_eq!(p.value(), GameValue::Finite(6));
    }

    #[test]
    fn slow_forces_unique_replies() {
        // every Dominator reply to Slow's gadget moves is forced to the
        // next chain vertex
        let h5 = make_h::<u64>(5).unwrap();
        let ctx = SolveContext::new(&h5.graph, VertexSet::empty());
        let mut slow = SlowStrategy::new(&h5).unwrap();
        let mut st = GameState::initial(Turn::Staller);
        let mut history = Vec::new();
        for k in 1..5u32 {
            let s = slow.choose(&ctx, &st, &history).unwrap();
            st = ctx.apply_move(&st, s).unwrap();
            history.push(s);
            let legal = ctx.legal_moves(&st);
            assert_eq!(legal.len(), 1, "reply after Staller move {k} is forced");
            let d = legal.first().unwrap();
            assert_eq!(h5.label_of(d), Some(alloc::format!("u{k}").as_str()));
            st = ctx.apply_move(&st, d).unwrap();
            history.push(d);
        }
    }

    #[test]
    fn trivial_playouts() {
        let k3 = FamilySpec::parse("complete:3").unwrap().build::<u64>().unwrap();
        let ctx = SolveContext::new(&k3.graph, VertexSet::empty());
        for seed in [1, 2] {
            let mut a = RandomStrategy::new(seed);
            let mut b = RandomStrategy::new(seed + 10);
            let p = play_out(&ctx, &mut a, &mut b, Turn::Dominator).unwrap();
            assert_eq!(p.value(), GameValue::Finite(1));
        }

        // P_4 | v2, Staller opens on v4: dead end after one move
        let p4 = FamilySpec::parse("path:4").unwrap().build::<u64>().unwrap();
        let pred = VertexSet::singleton(p4.vertex("v2").unwrap());
        let ctx = SolveContext::new(&p4.graph, pred);
        struct Scripted(VertexId);
        impl<W: Word> Strategy<W> for Scripted {
            fn choose(
                &mut self,
                _ctx: &SolveContext<'_, W>,
                _st: &GameState<W>,
                _h: &[VertexId],
            ) -> Result<VertexId, Error> {
                Ok(self.0)
            }
        }
        let mut sta = Scripted(p4.vertex("v4").unwrap());
        let mut dom = Scripted(p4.vertex("v1").unwrap());
        let p = play_out(&ctx, &mut dom, &mut sta, Turn::Staller).unwrap();
        assert_eq!(p.outcome, PlayoutOutcome::DeadEnd);
        assert_eq!(p.moves.len(), 1);

        // an illegal scripted move is reported distinctly
        // v4 is outside the frontier after Dominator opens on v1
        let mut sta = Scripted(p4.vertex("v4").unwrap());
        let mut dom = Scripted(p4.vertex("v1").unwrap());
        let err = play_out(&ctx, &mut dom, &mut sta, Turn::Dominator).unwrap_err();
        assert!(matches!(err, Error::StrategyIllegalMove(_)));
    }

    #[test]
    fn optimal_playout_matches_solve_value() {
        for spec in ["path:5", "cycle:6", "star:5", "complete:4"] {
            let g = FamilySpec::parse(spec).unwrap().build::<u64>().unwrap();
            for first in [Turn::Dominator, Turn::Staller] {
                let mut ctx = SolveContext::new(&g.graph, VertexSet::empty());
                let value = ctx.game_value(first).unwrap();
                let p = optimal_playout(&ctx, first).unwrap();
                assert_eq!(p.value(), value, "{spec} {first:?}");
            }
        }
    }
}
