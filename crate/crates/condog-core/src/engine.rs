//! Exact game solver: legal-move logic, the memoized minimax search over
//! frontier states, continuation values, legal orderings, and the connected
//! domination number.
//!
//! The search state is the pair `(N[played], turn)`. Legality and move
//! effects depend only on the closed neighborhood of the played set, so all
//! played sets with the same closed neighborhood share one memo entry.

use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::bits::{VertexId, VertexSet, Word};
use crate::error::Error;
use crate::graph::Graph;
use crate::value::{GameValue, Turn};

/// A search state: the closed neighborhood of the played set (empty before
/// the first move) and the player to move.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct GameState<W: Word> {
    pub frontier: VertexSet<W>,
    pub turn: Turn,
}

impl<W: Word> GameState<W> {
    /// The pre-first-move state with the given first player.
    pub fn initial(turn: Turn) -> Self {
        GameState { frontier: VertexSet::empty(), turn }
    }
}

/// Legal moves when `frontier` is the closed neighborhood of the played set
/// and `dominated` the full dominated set (predominated plus frontier).
///
/// Before the first move every vertex dominating something new is legal;
/// afterwards a move must additionally lie in the frontier, which makes it
/// adjacent to a played vertex. Played vertices fail the new-domination test
/// automatically.
#[inline]
fn legal_moves_in<W: Word>(
    g: &Graph<W>,
    frontier: VertexSet<W>,
    dominated: VertexSet<W>,
) -> VertexSet<W> {
    let candidates = if frontier.is_empty() { g.vertices() } else { frontier };
    let mut out = VertexSet::empty();
    for v in candidates.iter() {
        if !g.closed_neighborhood(v).is_subset(dominated) {
            out.insert(v);
        }
    }
    out
}

pub(crate) fn legal_moves_raw<W: Word>(
    g: &Graph<W>,
    predominated: VertexSet<W>,
    frontier: VertexSet<W>,
) -> VertexSet<W> {
    legal_moves_in(g, frontier, predominated.union(frontier))
}

// Internal value scale: finite counts, with INF as the absorbing dead-end
// value. i64 leaves room for the window arithmetic below.
const INF: i64 = 1 << 40;

#[inline]
fn add_move(v: i64) -> i64 {
    if v >= INF {
        INF
    } else {
        v + 1
    }
}

fn to_game_value(v: i64) -> GameValue {
    if v >= INF {
        GameValue::Infinite
    } else {
        GameValue::Finite(v as u32)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
enum Bound {
    Exact,
    Lower,
    Upper,
}

#[derive(Copy, Clone, Debug)]
struct Entry {
    value: i64,
    bound: Bound,
}

type Key<W> = (VertexSet<W>, Turn);

/// Transposition table. Unbounded by default; with a capacity cap it becomes
/// a fixed-size replace-always table, trading recomputation for memory.
enum MemoTable<W: Word> {
    Unbounded(HashMap<Key<W>, Entry>),
    Fixed(Vec<Option<(Key<W>, Entry)>>),
}

impl<W: Word> MemoTable<W> {
    fn slot(key: &Key<W>, len: usize) -> usize {
        let h = key.0 .0.mix64() ^ if key.1 == Turn::Staller { 0x9e3779b97f4a7c15 } else { 0 };
        (h % len as u64) as usize
    }

    fn get(&self, key: &Key<W>) -> Option<Entry> {
        match self {
            MemoTable::Unbounded(m) => m.get(key).copied(),
            MemoTable::Fixed(slots) => {
                let i = Self::slot(key, slots.len());
                match &slots[i] {
                    Some((k, e)) if k == key => Some(*e),
                    _ => None,
                }
            }
        }
    }

    fn insert(&mut self, key: Key<W>, entry: Entry) {
        match self {
            MemoTable::Unbounded(m) => {
                m.insert(key, entry);
            }
            MemoTable::Fixed(slots) => {
                let i = Self::slot(&key, slots.len());
                slots[i] = Some((key, entry));
            }
        }
    }

    fn len(&self) -> usize {
        match self {
            MemoTable::Unbounded(m) => m.len(),
            MemoTable::Fixed(slots) => slots.iter().filter(|s| s.is_some()).count(),
        }
    }
}

/// Solver context: one graph, one predominated set, one memo table.
pub struct SolveContext<'g, W: Word> {
    graph: &'g Graph<W>,
    predominated: VertexSet<W>,
    memo: MemoTable<W>,
    node_budget: Option<u64>,
    nodes: u64,
    pruning: bool,
}

impl<'g, W: Word> SolveContext<'g, W> {
    pub fn new(graph: &'g Graph<W>, predominated: VertexSet<W>) -> Self {
        SolveContext {
            graph,
            predominated,
            memo: MemoTable::Unbounded(HashMap::new()),
            node_budget: None,
            nodes: 0,
            pruning: false,
        }
    }

    /// Hard cap on expanded nodes; the solve reports `BudgetExceeded`
    /// instead of running away on oversized instances.
    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.node_budget = Some(nodes);
        self
    }

    /// Enables dominated-move pruning: a legal move whose newly dominated
    /// set is contained in another legal move's is dropped at Dominator's
    /// turn, and conversely at Staller's. Values are unchanged (this is
    /// exercised directly by the test suites).
    pub fn with_pruning(mut self, on: bool) -> Self {
        self.pruning = on;
        self
    }

    /// Caps the memo at a fixed number of slots with replace-always
    /// eviction. Entries stay exact; eviction only costs recomputation.
    pub fn with_memo_capacity(mut self, entries: usize) -> Self {
        self.memo = MemoTable::Fixed(alloc::vec![None; entries.max(1)]);
        self
    }

    pub fn graph(&self) -> &'g Graph<W> {
        self.graph
    }

    pub fn predominated(&self) -> VertexSet<W> {
        self.predominated
    }

    pub fn nodes_expanded(&self) -> u64 {
        self.nodes
    }

    pub fn memo_entries(&self) -> usize {
        self.memo.len()
    }

    /// Legal moves in `st`: vertices dominating something new, adjacent to a
    /// played vertex once the game has started.
    pub fn legal_moves(&self, st: &GameState<W>) -> VertexSet<W> {
        legal_moves_raw(self.graph, self.predominated, st.frontier)
    }

    /// Plays `v`, growing the frontier by N[v] and flipping the turn.
    pub fn apply_move(&self, st: &GameState<W>, v: VertexId) -> Result<GameState<W>, Error> {
        if !self.legal_moves(st).contains(v) {
            return Err(Error::IllegalMove(v));
        }
        Ok(GameState {
            frontier: st.frontier.union(self.graph.closed_neighborhood(v)),
            turn: st.turn.other(),
        })
    }

    /// Number of moves remaining from `st` under optimal play, `Infinite`
    /// if Staller can force a dead end with undominated vertices left.
    pub fn solve(&mut self, st: GameState<W>) -> Result<GameValue, Error> {
        self.search(st.frontier, st.turn, -1, INF + 1).map(to_game_value)
    }

    /// Game value from the empty state; rejects disconnected graphs.
    pub fn game_value(&mut self, first: Turn) -> Result<GameValue, Error> {
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        self.solve(GameState::initial(first))
    }

    /// Value of the continuation game seeded with the connected set `d`,
    /// counting further moves only.
    pub fn continuation(&mut self, d: VertexSet<W>, next: Turn) -> Result<GameValue, Error> {
        if d.is_empty() {
            return Err(Error::EmptySeed);
        }
        if !self.graph.is_connected_subset(d) {
            return Err(Error::SeedDisconnected);
        }
        let frontier = self.graph.closed_neighborhood_set(d);
        self.solve(GameState { frontier, turn: next })
    }

    fn search(&mut self, frontier: VertexSet<W>, turn: Turn, alpha: i64, beta: i64) -> Result<i64, Error> {
        self.nodes += 1;
        if let Some(b) = self.node_budget {
            if self.nodes > b {
                return Err(Error::BudgetExceeded);
            }
        }
        let dominated = self.predominated.union(frontier);
        if dominated == self.graph.vertices() {
            return Ok(0);
        }
        let moves = legal_moves_in(self.graph, frontier, dominated);
        if moves.is_empty() {
            return Ok(INF);
        }

        let key = (frontier, turn);
        let mut alpha = alpha;
        let mut beta = beta;
        if let Some(e) = self.memo.get(&key) {
            match e.bound {
                Bound::Exact => return Ok(e.value),
                Bound::Lower => {
                    if e.value >= beta {
                        return Ok(e.value);
                    }
                    alpha = alpha.max(e.value);
                }
                Bound::Upper => {
                    if e.value <= alpha {
                        return Ok(e.value);
                    }
                    beta = beta.min(e.value);
                }
            }
        }
        let (alpha0, beta0) = (alpha, beta);

        let ordered = self.order_moves(moves, frontier, dominated, turn);
        let mut best;
        if turn == Turn::Dominator {
            best = i64::MAX;
            for &(v, _) in &ordered {
                let child = frontier.union(self.graph.closed_neighborhood(v));
                let val = add_move(self.search(child, turn.other(), alpha - 1, beta - 1)?);
                if val < best {
                    best = val;
                }
                if best < beta {
                    beta = best;
                }
                if best <= alpha {
                    break;
                }
            }
        } else {
            best = -1;
            for &(v, _) in &ordered {
                let child = frontier.union(self.graph.closed_neighborhood(v));
                let val = add_move(self.search(child, turn.other(), alpha - 1, beta - 1)?);
                if val > best {
                    best = val;
                }
                if best > alpha {
                    alpha = best;
                }
                if best >= beta {
                    break;
                }
            }
        }

        let bound = if best <= alpha0 {
            Bound::Upper
        } else if best >= beta0 {
            Bound::Lower
        } else {
            Bound::Exact
        };
        self.memo.insert(key, Entry { value: best, bound });
        Ok(best)
    }

    /// Moves paired with their newly-dominated sets, best-first for the
    /// player to move; with pruning enabled, dominated moves are dropped.
    fn order_moves(
        &self,
        moves: VertexSet<W>,
        frontier: VertexSet<W>,
        dominated: VertexSet<W>,
        turn: Turn,
    ) -> Vec<(VertexId, VertexSet<W>)> {
        let mut list: Vec<(VertexId, VertexSet<W>)> = moves
            .iter()
            .map(|v| (v, self.graph.closed_neighborhood(v).difference(dominated)))
            .collect();
        // Move pruning is only sound once every predominated vertex lies in
        // the frontier: from such positions the game can never dead-end (the
        // frontier only grows, and a connected graph with frontier-closed
        // neighborhoods is fully covered), so all continuation values are
        // finite and the seed-growth monotonicity behind the dominated-move
        // argument holds. With a predominated vertex still outside, a move
        // covering fewer vertices can be strictly better for either player
        // by steering toward or away from a dead end.
        if self.pruning && self.predominated.is_subset(frontier) {
            list = prune_dominated_moves(self.graph, list, frontier, turn);
        }
        // Dominator prefers covering more new vertices, Staller fewer.
        match turn {
            Turn::Dominator => list.sort_by_key(|&(v, nd)| (usize::MAX - nd.len(), v)),
            Turn::Staller => list.sort_by_key(|&(v, nd)| (nd.len(), v)),
        }
        list
    }
}

/// Drops moves that another move provably dominates. Moves are compared by
/// their coverage beyond the current frontier, `N[v] \ frontier`: when that
/// of `v` is contained in that of `v'`, the move `v'` is at least as good
/// for Dominator and `v` at least as good for Staller. Equal coverage
/// yields an identical child frontier, hence an identical value, so ties
/// keep the lowest index.
///
/// The comparison is relative to the frontier, not to the dominated set: two
/// moves that newly dominate the same vertices can still leave different
/// frontiers when predominated vertices are present, and those positions can
/// have different values.
fn prune_dominated_moves<W: Word>(
    g: &Graph<W>,
    list: Vec<(VertexId, VertexSet<W>)>,
    frontier: VertexSet<W>,
    turn: Turn,
) -> Vec<(VertexId, VertexSet<W>)> {
    let cover = |v: VertexId| g.closed_neighborhood(v).difference(frontier);
    let keep = |&(v, _): &(VertexId, VertexSet<W>)| {
        let cv = cover(v);
        !list.iter().any(|&(u, _)| {
            if u == v {
                return false;
            }
            let cu = cover(u);
            let better = match turn {
                Turn::Dominator => cv.is_subset(cu),
                Turn::Staller => cu.is_subset(cv),
            };
            better && (cu != cv || u < v)
        })
    };
    list.iter().copied().filter(keep).collect()
}

/// Game value of the connected domination game on `g` with the given
/// predominated set and first player. Covers all four invariants: both
/// start players, with or without predomination.
pub fn game_connected_domination<W: Word>(
    g: &Graph<W>,
    predominated: VertexSet<W>,
    first: Turn,
) -> Result<GameValue, Error> {
    SolveContext::new(g, predominated).game_value(first)
}

/// Continuation value seeded with the connected set `d`, next mover `next`.
/// Counts further moves only; add the legal-subset length to compare with
/// total-move counts.
pub fn continuation_value<W: Word>(
    g: &Graph<W>,
    predominated: VertexSet<W>,
    d: VertexSet<W>,
    next: Turn,
) -> Result<GameValue, Error> {
    SolveContext::new(g, predominated).continuation(d, next)
}

/// Reference solver: plain recursive minimax, no memo, no pruning, no move
/// ordering. Only suitable for small graphs; kept as an independent oracle
/// for the memoized search.
pub fn solve_unmemoized<W: Word>(
    g: &Graph<W>,
    predominated: VertexSet<W>,
    st: GameState<W>,
) -> GameValue {
    let dominated = predominated.union(st.frontier);
    if dominated == g.vertices() {
        return GameValue::Finite(0);
    }
    let moves = legal_moves_in(g, st.frontier, dominated);
    if moves.is_empty() {
        return GameValue::Infinite;
    }
    let children = moves.iter().map(|v| {
        solve_unmemoized(
            g,
            predominated,
            GameState {
                frontier: st.frontier.union(g.closed_neighborhood(v)),
                turn: st.turn.other(),
            },
        )
        .succ()
    });
    match st.turn {
        Turn::Dominator => children.min().unwrap(),
        Turn::Staller => children.max().unwrap(),
    }
}

/// A greedy legal ordering of `s` starting at `v`: every prefix induces a
/// connected subgraph, every move dominates a new vertex, and the closed
/// neighborhood of the output equals N[s]. The output may be shorter than
/// `s`.
pub fn legal_ordering<W: Word>(
    g: &Graph<W>,
    s: VertexSet<W>,
    v: VertexId,
) -> Result<Vec<VertexId>, Error> {
    if !s.contains(v) {
        return Err(Error::SeedMissingStart(v));
    }
    if !g.is_connected_subset(s) {
        return Err(Error::SeedDisconnected);
    }
    let target = g.closed_neighborhood_set(s);
    let mut seq = alloc::vec![v];
    let mut frontier = g.closed_neighborhood(v);
    while frontier != target {
        // Some vertex of s in the frontier still dominates a new vertex;
        // this is exactly the legal-subset existence argument.
        let next = s
            .intersection(frontier)
            .iter()
            .find(|&u| !g.closed_neighborhood(u).is_subset(frontier));
        match next {
            Some(u) => {
                seq.push(u);
                frontier = frontier.union(g.closed_neighborhood(u));
            }
            None => unreachable!("legal ordering stalled before covering N[s]"),
        }
    }
    Ok(seq)
}

/// Minimum size of a connected dominating set of `g` given `predominated`
/// (vertices that need no domination); 0 when everything is predominated.
///
/// Computed as a shortest legal-move sequence in frontier space: a shortest
/// sequence's played set is a connected dominating set, and conversely any
/// minimum connected dominating set admits a legal ordering of at most its
/// size, so breadth-first search over frontiers is exact.
pub fn connected_domination_number<W: Word>(
    g: &Graph<W>,
    predominated: VertexSet<W>,
) -> Result<usize, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let full = g.vertices();
    if predominated == full {
        return Ok(0);
    }
    let mut dist: HashMap<VertexSet<W>, usize> = HashMap::new();
    let mut queue: alloc::collections::VecDeque<VertexSet<W>> = alloc::collections::VecDeque::new();
    dist.insert(VertexSet::empty(), 0);
    queue.push_back(VertexSet::empty());
    while let Some(frontier) = queue.pop_front() {
        let d = dist[&frontier];
        if predominated.union(frontier) == full {
            return Ok(d);
        }
        for v in legal_moves_raw(g, predominated, frontier).iter() {
            let child = frontier.union(g.closed_neighborhood(v));
            dist.entry(child).or_insert_with(|| {
                queue.push_back(child);
                d + 1
            });
        }
    }
    unreachable!("a connected graph always admits a connected dominating sequence")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_h, FamilySpec};

    fn build(spec: &str) -> crate::graph::LabeledGraph<u64> {
        FamilySpec::parse(spec).unwrap().build().unwrap()
    }

    fn labels_to_set(
        lg: &crate::graph::LabeledGraph<u64>,
        labels: &[&str],
    ) -> VertexSet<u64> {
        labels.iter().map(|l| lg.vertex(l).unwrap()).collect()
    }

    #[test]
    fn legal_moves_examples() {
        // K_n from the empty state: every vertex is legal
        let k4 = build("complete:4");
        let ctx = SolveContext::new(&k4.graph, VertexSet::empty());
        assert_eq!(
            ctx.legal_moves(&GameState::initial(Turn::Dominator)),
            k4.graph.vertices()
        );

        // P_4 | v2, Staller opens on v4: Dominator is stuck with v1 undominated
        let p4 = build("path:4");
        let pred = labels_to_set(&p4, &["v2"]);
        let ctx = SolveContext::new(&p4.graph, pred);
        let st = ctx
            .apply_move(&GameState::initial(Turn::Staller), p4.vertex("v4").unwrap())
            .unwrap();
        assert!(ctx.legal_moves(&st).is_empty());
        // ... while v1 is still undominated
        assert!(!pred.union(st.frontier).contains(p4.vertex("v1").unwrap()));

        // H_6: after Dominator opens on u_6, Staller's only reply is u_5
        let h6 = make_h::<u64>(6).unwrap();
        let ctx = SolveContext::new(&h6.graph, VertexSet::empty());
        let st = ctx
            .apply_move(&GameState::initial(Turn::Dominator), h6.vertex("u6").unwrap())
            .unwrap();
        assert_eq!(
            ctx.legal_moves(&st),
            VertexSet::singleton(h6.vertex("u5").unwrap())
        );
    }

    #[test]
    fn apply_move_rules() {
        let p4 = build("path:4");
        let ctx = SolveContext::new(&p4.graph, VertexSet::empty());
        let v2 = p4.vertex("v2").unwrap();
        let v3 = p4.vertex("v3").unwrap();
        let st = ctx.apply_move(&GameState::initial(Turn::Dominator), v2).unwrap();
        assert_eq!(st.frontier, labels_to_set(&p4, &["v1", "v2", "v3"]));
        assert_eq!(st.turn, Turn::Staller);
        // replaying v2 is illegal: its neighborhood is already dominated
        assert_eq!(ctx.apply_move(&st, v2), Err(Error::IllegalMove(v2)));
        let st = ctx.apply_move(&st, v3).unwrap();
        assert_eq!(st.frontier, p4.graph.vertices());
    }

    #[test]
    fn solve_small_examples() {
        let k5 = build("complete:5");
        assert_eq!(
            game_connected_domination(&k5.graph, VertexSet::empty(), Turn::Dominator).unwrap(),
            GameValue::Finite(1)
        );

        let h6 = make_h::<u64>(6).unwrap();
        assert_eq!(
            game_connected_domination(&h6.graph, VertexSet::empty(), Turn::Dominator).unwrap(),
            GameValue::Finite(6)
        );

        let h3 = make_h::<u64>(3).unwrap();
        assert_eq!(
            game_connected_domination(&h3.graph, VertexSet::empty(), Turn::Staller).unwrap(),
            GameValue::Finite(6)
        );

        let p4 = build("path:4");
        let pred = labels_to_set(&p4, &["v2"]);
        assert_eq!(
            game_connected_domination(&p4.graph, pred, Turn::Staller).unwrap(),
            GameValue::Infinite
        );
    }

    #[test]
    fn degenerate_inputs() {
        let k1 = build("complete:1");
        assert_eq!(
            game_connected_domination(&k1.graph, VertexSet::empty(), Turn::Dominator).unwrap(),
            GameValue::Finite(1)
        );
        assert_eq!(
            game_connected_domination(&k1.graph, k1.graph.vertices(), Turn::Dominator).unwrap(),
            GameValue::Finite(0)
        );
        let p4 = build("path:4");
        assert_eq!(
            game_connected_domination(&p4.graph, p4.graph.vertices(), Turn::Staller).unwrap(),
            GameValue::Finite(0)
        );
        // disconnected input rejected
        let g = Graph::<u64>::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            game_connected_domination(&g, VertexSet::empty(), Turn::Dominator),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let h5 = make_h::<u64>(5).unwrap();
        let mut ctx = SolveContext::new(&h5.graph, VertexSet::empty()).with_budget(10);
        assert_eq!(ctx.game_value(Turn::Staller), Err(Error::BudgetExceeded));
    }

    #[test]
    fn bounded_memo_matches_unbounded() {
        let h4 = make_h::<u64>(4).unwrap();
        let full = game_connected_domination(&h4.graph, VertexSet::empty(), Turn::Staller).unwrap();
        let mut tiny = SolveContext::new(&h4.graph, VertexSet::empty()).with_memo_capacity(17);
        assert_eq!(tiny.game_value(Turn::Staller).unwrap(), full);
    }

    #[test]
    fn continuation_examples() {
        let p4 = build("path:4");
        let v2 = p4.vertex("v2").unwrap();
        // d = {v2}: v3 finishes
        assert_eq!(
            continuation_value(
                &p4.graph,
                VertexSet::empty(),
                VertexSet::singleton(v2),
                Turn::Dominator
            )
            .unwrap(),
            GameValue::Finite(1)
        );
        // a connected dominating set leaves nothing to do
        let d = labels_to_set(&p4, &["v2", "v3"]);
        assert_eq!(
            continuation_value(&p4.graph, VertexSet::empty(), d, Turn::Staller).unwrap(),
            GameValue::Finite(0)
        );
        assert_eq!(
            continuation_value(&p4.graph, VertexSet::empty(), VertexSet::empty(), Turn::Dominator),
            Err(Error::EmptySeed)
        );
        let disconnected = labels_to_set(&p4, &["v1", "v3"]);
        assert_eq!(
            continuation_value(&p4.graph, VertexSet::empty(), disconnected, Turn::Dominator),
            Err(Error::SeedDisconnected)
        );
    }

    #[test]
    fn legal_ordering_examples() {
        let p4 = build("path:4");
        let v2 = p4.vertex("v2").unwrap();
        let v3 = p4.vertex("v3").unwrap();
        assert_eq!(
            legal_ordering(&p4.graph, VertexSet::singleton(v2), v2).unwrap(),
            [v2]
        );
        let s = labels_to_set(&p4, &["v2", "v3"]);
        assert_eq!(legal_ordering(&p4.graph, s, v2).unwrap(), [v2, v3]);

        let p5 = build("path:5");
        let s = labels_to_set(&p5, &["v2", "v3", "v4"]);
        let v3 = p5.vertex("v3").unwrap();
        let seq = legal_ordering(&p5.graph, s, v3).unwrap();
        assert_eq!(seq[0], v3);
        let played: VertexSet<u64> = seq.iter().copied().collect();
        assert_eq!(
            p5.graph.closed_neighborhood_set(played),
            p5.graph.closed_neighborhood_set(s)
        );
        // prefix connectivity and per-move new domination
        let mut frontier = VertexSet::<u64>::empty();
        let mut prefix = VertexSet::<u64>::empty();
        for &u in &seq {
            assert!(frontier.is_empty() || frontier.contains(u));
            assert!(!p5.graph.closed_neighborhood(u).is_subset(frontier));
            prefix.insert(u);
            assert!(p5.graph.is_connected_subset(prefix));
            frontier = frontier.union(p5.graph.closed_neighborhood(u));
        }

        assert!(matches!(
            legal_ordering(&p4.graph, s, p4.vertex("v1").unwrap()),
            Err(Error::SeedMissingStart(_))
        ));
    }

    #[test]
    fn connected_domination_number_examples() {
        for n in 1..6 {
            let kn = build(&alloc::format!("complete:{n}"));
            assert_eq!(connected_domination_number(&kn.graph, VertexSet::empty()).unwrap(), 1);
        }
        for n in 2..=6 {
            let hn = make_h::<u64>(n).unwrap();
            assert_eq!(connected_domination_number(&hn.graph, VertexSet::empty()).unwrap(), n);
        }
        let p4 = build("path:4");
        assert_eq!(
            connected_domination_number(&p4.graph, p4.graph.vertices()).unwrap(),
            0
        );
        let g = Graph::<u64>::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(connected_domination_number(&g, VertexSet::empty()).is_err());
    }

    #[test]
    fn pruned_solver_matches_on_families() {
        for n in 2..=4 {
            let h = make_h::<u64>(n).unwrap();
            for first in [Turn::Dominator, Turn::Staller] {
                let plain = game_connected_domination(&h.graph, VertexSet::empty(), first).unwrap();
                let mut pruned =
                    SolveContext::new(&h.graph, VertexSet::empty()).with_pruning(true);
                assert_eq!(pruned.game_value(first).unwrap(), plain);
            }
        }
    }

    #[test]
    fn memoized_matches_reference_on_families() {
        for n in 2..=3 {
            let h = make_h::<u64>(n).unwrap();
            for first in [Turn::Dominator, Turn::Staller] {
                let reference =
                    solve_unmemoized(&h.graph, VertexSet::empty(), GameState::initial(first));
                let memoized =
                    game_connected_domination(&h.graph, VertexSet::empty(), first).unwrap();
                assert_eq!(memoized, reference);
            }
        }
    }
}
