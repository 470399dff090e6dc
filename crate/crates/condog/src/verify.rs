//! Named verification suites: each one checks a universally quantified
//! claim about game values over a corpus of graphs or a fixed family sweep,
//! and reports every violation with a reproducible witness.

use std::time::Instant;

use rayon::prelude::*;

use condog_core::{
    connected_domination_number, sgame_infinite_by_characterization_with, tree_sgame_infinite,
    FamilySpec, GameValue, IsolationConvention, LabeledGraph, SolveContext, Turn, VertexId,
    VertexSet, Word,
};

use crate::formats::AnyLabeledGraph;
use crate::report::{SuiteReport, Violation};
use crate::with_graph;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    /// With a game value of at least 3, predominating any vertex keeps the
    /// game value at most twice the original minus 3.
    UpperBound,
    /// Predominating any vertex keeps at least half of the game value.
    LowerBound,
    /// The game value sits between the connected domination number and
    /// twice that number minus 1.
    CdsSandwich,
    /// The Staller-start value is at most twice the Dominator-start value.
    SgameDouble,
    /// Growing the seeded connected set never increases the continuation
    /// value.
    ContinuationMonotone,
    /// Dominated-move pruning preserves game values.
    PruningSound,
    /// The modified chain family meets the doubled upper bound exactly.
    HprimeSharpness,
    /// The double-ring family: predominating the far rim vertex costs at
    /// least l - 2 extra moves.
    C2Gap,
    /// The pendant-cycle family loses exactly 2 moves when c_2 starts
    /// dominated.
    DDrop,
    /// The fan-chain family meets the halving lower bound exactly.
    GnrSharpness,
    /// Direct detection of unbounded Staller-start games agrees with the
    /// cut-vertex isolation characterization.
    InfiniteCharacterization,
    /// On trees, unbounded Staller-start games are exactly the non-leaf
    /// vertices with a degree-2 neighbor.
    TreeInfinite,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::UpperBound,
        Suite::LowerBound,
        Suite::CdsSandwich,
        Suite::SgameDouble,
        Suite::ContinuationMonotone,
        Suite::PruningSound,
        Suite::HprimeSharpness,
        Suite::C2Gap,
        Suite::DDrop,
        Suite::GnrSharpness,
        Suite::InfiniteCharacterization,
        Suite::TreeInfinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::UpperBound => "upper-bound",
            Suite::LowerBound => "lower-bound",
            Suite::CdsSandwich => "cds-sandwich",
            Suite::SgameDouble => "sgame-double",
            Suite::ContinuationMonotone => "continuation-monotone",
            Suite::PruningSound => "pruning-sound",
            Suite::HprimeSharpness => "hprime-sharpness",
            Suite::C2Gap => "c2-gap",
            Suite::DDrop => "d-drop",
            Suite::GnrSharpness => "gnr-sharpness",
            Suite::InfiniteCharacterization => "infinite-characterization",
            Suite::TreeInfinite => "tree-infinite",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Family-sweep suites bring their own instances and ignore the corpus.
    pub fn is_family_sweep(self) -> bool {
        matches!(
            self,
            Suite::HprimeSharpness | Suite::C2Gap | Suite::DDrop | Suite::GnrSharpness
        )
    }

    /// Largest corpus order this suite is meant for.
    pub fn order_cap(self) -> usize {
        match self {
            Suite::ContinuationMonotone | Suite::PruningSound => 6,
            Suite::TreeInfinite => 10,
            _ => 7,
        }
    }
}

struct Instance {
    violations: Vec<Violation>,
    skipped: u64,
}

fn instance_ok() -> Instance {
    Instance { violations: Vec::new(), skipped: 0 }
}

fn skipped() -> Instance {
    Instance { violations: Vec::new(), skipped: 1 }
}

fn violation(id: &str, detail: String) -> Instance {
    Instance {
        violations: vec![Violation { graph: id.to_string(), detail }],
        skipped: 0,
    }
}

/// Per-context solve helper carrying the optional node budget.
fn ctx<'g, W: Word>(
    g: &'g condog_core::Graph<W>,
    pred: VertexSet<W>,
    budget: Option<u64>,
) -> SolveContext<'g, W> {
    let c = SolveContext::new(g, pred);
    match budget {
        Some(b) => c.with_budget(b),
        None => c,
    }
}

fn value<W: Word>(
    g: &condog_core::Graph<W>,
    pred: VertexSet<W>,
    first: Turn,
    budget: Option<u64>,
) -> Result<GameValue, condog_core::Error> {
    ctx(g, pred, budget).game_value(first)
}

fn label<W: Word>(g: &LabeledGraph<W>, v: VertexId) -> String {
    g.label_of(v).map(str::to_string).unwrap_or_else(|| v.0.to_string())
}

fn check_instance<W: Word>(
    suite: Suite,
    id: &str,
    g: &LabeledGraph<W>,
    budget: Option<u64>,
) -> Instance {
    match run_checks(suite, id, g, budget) {
        Ok(inst) => inst,
        Err(condog_core::Error::BudgetExceeded) => skipped(),
        Err(e) => violation(id, format!("solver error: {e}")),
    }
}

fn run_checks<W: Word>(
    suite: Suite,
    id: &str,
    lg: &LabeledGraph<W>,
    budget: Option<u64>,
) -> Result<Instance, condog_core::Error> {
    let g = &lg.graph;
    if !g.is_connected() || g.order() > suite.order_cap() {
        return Ok(instance_ok());
    }
    let mut inst = instance_ok();
    let mut fail = |detail: String| {
        inst.violations.push(Violation { graph: id.to_string(), detail });
    };
    match suite {
        Suite::UpperBound => {
            let gcg = value(g, VertexSet::empty(), Turn::Dominator, budget)?;
            if let GameValue::Finite(gcg) = gcg {
                if gcg < 3 {
                    return Ok(inst);
                }
                for x in g.vertices().iter() {
                    let gx = value(g, VertexSet::singleton(x), Turn::Dominator, budget)?;
                    if gx > GameValue::Finite(2 * gcg - 3) {
                        fail(format!("x={}: value {gx} exceeds {}", label(lg, x), 2 * gcg - 3));
                    }
                }
            }
        }
        Suite::LowerBound => {
            if g.order() < 2 {
                return Ok(inst);
            }
            let gcg = value(g, VertexSet::empty(), Turn::Dominator, budget)?;
            if let GameValue::Finite(gcg) = gcg {
                for x in g.vertices().iter() {
                    let gx = value(g, VertexSet::singleton(x), Turn::Dominator, budget)?;
                    if gx < GameValue::Finite(gcg.div_ceil(2)) {
                        fail(format!(
                            "x={}: value {gx} below {}",
                            label(lg, x),
                            gcg.div_ceil(2)
                        ));
                    }
                }
            }
        }
        Suite::CdsSandwich => {
            let gc = connected_domination_number(g, VertexSet::empty())? as u32;
            let gcg = value(g, VertexSet::empty(), Turn::Dominator, budget)?;
            let lo = GameValue::Finite(gc);
            let hi = GameValue::Finite(2 * gc - 1);
            if gcg < lo || gcg > hi {
                fail(format!("game value {gcg} outside [{gc}, {}]", 2 * gc - 1));
            }
        }
        Suite::SgameDouble => {
            let d = value(g, VertexSet::empty(), Turn::Dominator, budget)?;
            let s = value(g, VertexSet::empty(), Turn::Staller, budget)?;
            match (d, s) {
                (GameValue::Finite(d), GameValue::Finite(s)) => {
                    if s > 2 * d {
                        fail(format!("Staller-start {s} exceeds twice {d}"));
                    }
                }
                _ => fail(format!("unexpected unbounded value: D {d}, S {s}")),
            }
        }
        Suite::ContinuationMonotone => {
            let n = g.order();
            let mut solver = ctx(g, VertexSet::empty(), budget);
            let connected: Vec<VertexSet<W>> = (1u64..1 << n)
                .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(VertexId).collect())
                .filter(|&s| g.is_connected_subset(s))
                .collect();
            for &d in &connected {
                for &e in &connected {
                    if !d.is_subset(e) || d == e {
                        continue;
                    }
                    for t in [Turn::Dominator, Turn::Staller] {
                        let big = solver.continuation(e, t)?;
                        let small = solver.continuation(d, t)?;
                        if big > small {
                            fail(format!(
                                "seed {d:?} grown to {e:?}, next {t:?}: {big} > {small}"
                            ));
                        }
                    }
                }
            }
        }
        Suite::PruningSound => {
            let mut preds = vec![VertexSet::empty()];
            preds.extend(g.vertices().iter().map(VertexSet::singleton));
            for pred in preds {
                for t in [Turn::Dominator, Turn::Staller] {
                    let plain = ctx(g, pred, budget).game_value(t)?;
                    let pruned = ctx(g, pred, budget).with_pruning(true).game_value(t)?;
                    if plain != pruned {
                        fail(format!(
                            "pred {pred:?}, first {t:?}: pruned {pruned} != plain {plain}"
                        ));
                    }
                }
            }
        }
        Suite::InfiniteCharacterization => {
            for x in g.vertices().iter() {
                let direct = value(g, VertexSet::singleton(x), Turn::Staller, budget)?
                    == GameValue::Infinite;
                let by_char =
                    sgame_infinite_by_characterization_with(g, x, IsolationConvention::default());
                if direct != by_char {
                    fail(format!(
                        "x={}: direct {direct} vs characterization {by_char}",
                        label(lg, x)
                    ));
                }
            }
        }
        Suite::TreeInfinite => {
            if !g.is_tree() {
                return Ok(inst);
            }
            for x in g.vertices().iter() {
                let direct = value(g, VertexSet::singleton(x), Turn::Staller, budget)?
                    == GameValue::Infinite;
                let by_test = tree_sgame_infinite(g, x)?;
                if direct != by_test {
                    fail(format!(
                        "x={}: direct {direct} vs degree test {by_test}",
                        label(lg, x)
                    ));
                }
            }
        }
        // family sweeps are dispatched in run_suite, not per corpus graph
        Suite::HprimeSharpness | Suite::C2Gap | Suite::DDrop | Suite::GnrSharpness => {
            unreachable!("family sweep routed through family_instances")
        }
    }
    Ok(inst)
}

/// One family-sweep case: builds its instance and checks the claim.
fn check_family_case(suite: Suite, case: &str, budget: Option<u64>) -> Instance {
    let result = (|| -> Result<Instance, condog_core::Error> {
        let mut inst = instance_ok();
        let mut fail = |detail: String| {
            inst.violations.push(Violation { graph: case.to_string(), detail });
        };
        match suite {
            Suite::HprimeSharpness => {
                let n: u32 = case.split(':').nth(1).unwrap().parse().unwrap();
                let h = FamilySpec::parse(case)?.build::<u64>()?;
                let plain = value(&h.graph, VertexSet::empty(), Turn::Dominator, budget)?;
                if plain != GameValue::Finite(n) {
                    fail(format!("plain value {plain}, expected {n}"));
                }
                let u1 = VertexSet::singleton(h.vertex("u1").unwrap());
                let with_u1 = ctx(&h.graph, u1, budget)
                    .with_pruning(true)
                    .game_value(Turn::Dominator)?;
                if with_u1 != GameValue::Finite(2 * n - 3) {
                    fail(format!("value with u1 {with_u1}, expected {}", 2 * n - 3));
                }
            }
            Suite::C2Gap => {
                let l: u32 = case.split(&[':', ',']).nth(2).unwrap().parse().unwrap();
                let c = FamilySpec::parse(case)?.build::<u64>()?;
                let plain = ctx(&c.graph, VertexSet::empty(), budget)
                    .with_pruning(true)
                    .game_value(Turn::Dominator)?;
                let w = VertexSet::singleton(c.vertex("w").unwrap());
                let with_w = ctx(&c.graph, w, budget)
                    .with_pruning(true)
                    .game_value(Turn::Dominator)?;
                match (plain, with_w) {
                    (GameValue::Finite(p), GameValue::Finite(q)) => {
                        if (q as i64) - (p as i64) < (l as i64) - 2 {
                            fail(format!("gap {} below {}", q as i64 - p as i64, l as i64 - 2));
                        }
                    }
                    _ => fail(format!("unbounded value: plain {plain}, with w {with_w}")),
                }
            }
            Suite::DDrop => {
                let d = FamilySpec::parse(case)?.build::<u64>()?;
                let plain = ctx(&d.graph, VertexSet::empty(), budget)
                    .with_pruning(true)
                    .game_value(Turn::Dominator)?;
                let c2 = VertexSet::singleton(d.vertex("c2").unwrap());
                let with_c2 = ctx(&d.graph, c2, budget)
                    .with_pruning(true)
                    .game_value(Turn::Dominator)?;
                match (plain, with_c2) {
                    (GameValue::Finite(p), GameValue::Finite(q)) => {
                        if q != p - 2 {
                            fail(format!("value dropped from {p} to {q}, expected {}", p - 2));
                        }
                    }
                    _ => fail(format!("unbounded value: plain {plain}, with c2 {with_c2}")),
                }
            }
            Suite::GnrSharpness => {
                let mut it = case.split(&[':', ',']).skip(1);
                let n: u32 = it.next().unwrap().parse().unwrap();
                let g = FamilySpec::parse(case)?.build::<u64>()?;
                let plain = ctx(&g.graph, VertexSet::empty(), budget)
                    .with_pruning(true)
                    .game_value(Turn::Dominator)?;
                if plain != GameValue::Finite(2 * n - 1) {
                    fail(format!("plain value {plain}, expected {}", 2 * n - 1));
                }
                let vx = VertexSet::singleton(g.vertex(&format!("v{}", n + 1)).unwrap());
                let with_v = ctx(&g.graph, vx, budget)
                    .with_pruning(true)
                    .game_value(Turn::Dominator)?;
                if with_v != GameValue::Finite(n) {
                    fail(format!("value with v{} {with_v}, expected {n}", n + 1));
                }
            }
            _ => unreachable!(),
        }
        Ok(inst)
    })();
    match result {
        Ok(inst) => inst,
        Err(condog_core::Error::BudgetExceeded) => skipped(),
        Err(e) => violation(case, format!("solver error: {e}")),
    }
}

fn family_cases(suite: Suite) -> Vec<String> {
    match suite {
        Suite::HprimeSharpness => (3..=5).map(|n| format!("Hprime:{n}")).collect(),
        Suite::C2Gap => vec!["C2:1,2".to_string(), "C2:1,3".to_string()],
        Suite::DDrop => (3..=4).map(|n| format!("D:{n}")).collect(),
        Suite::GnrSharpness => [(1, 1), (2, 2), (2, 3), (3, 3)]
            .iter()
            .map(|(n, r)| format!("Gnr:{n},{r}"))
            .collect(),
        _ => Vec::new(),
    }
}

/// Runs one suite over the corpus (ignored by family sweeps), in parallel
/// across instances.
pub fn run_suite(
    suite: Suite,
    corpus: &[(String, AnyLabeledGraph)],
    budget: Option<u64>,
) -> SuiteReport {
    let start = Instant::now();
    let outcomes: Vec<Instance> = if suite.is_family_sweep() {
        family_cases(suite)
            .par_iter()
            .map(|case| check_family_case(suite, case, budget))
            .collect()
    } else {
        corpus
            .par_iter()
            .map(|(id, any)| with_graph!(any, g => check_instance(suite, id, g, budget)))
            .collect()
    };
    let instances = if suite.is_family_sweep() {
        family_cases(suite).len() as u64
    } else {
        corpus.len() as u64
    };
    let mut violations = Vec::new();
    let mut skips = 0;
    for o in outcomes {
        violations.extend(o.violations);
        skips += o.skipped;
    }
    SuiteReport {
        suite: suite.name().to_string(),
        instances_checked: instances - skips,
        skipped: skips,
        violations,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// For every graph and vertex: the pair of plain and predominated game
/// values, tagged with the extremal phenomena it witnesses. TSV output.
pub fn sharpness_census(corpus: &[(String, AnyLabeledGraph)], budget: Option<u64>) -> String {
    let mut rows: Vec<String> = corpus
        .par_iter()
        .flat_map_iter(|(id, any)| {
            with_graph!(any, g => census_rows(id, g, budget))
        })
        .collect();
    rows.sort();
    let mut out = String::from("graph\tx\tvalue\tvalue_predominated\ttags\n");
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}

fn census_rows<W: Word>(id: &str, lg: &LabeledGraph<W>, budget: Option<u64>) -> Vec<String> {
    let g = &lg.graph;
    if !g.is_connected() {
        return Vec::new();
    }
    let Ok(GameValue::Finite(gcg)) = value(g, VertexSet::empty(), Turn::Dominator, budget) else {
        return Vec::new();
    };
    g.vertices()
        .iter()
        .filter_map(|x| {
            let gx = value(g, VertexSet::singleton(x), Turn::Dominator, budget).ok()?;
            let GameValue::Finite(gx) = gx else { return None };
            let mut tags = Vec::new();
            if gcg >= 3 && gx == 2 * gcg - 3 {
                tags.push("upper-sharp");
            }
            if gx == gcg.div_ceil(2) {
                tags.push("lower-sharp");
            }
            if gcg >= 1 && gx + 1 == gcg {
                tags.push("drop-1");
            }
            if gcg >= 2 && gx + 2 == gcg {
                tags.push("drop-2");
            }
            Some(format!("{id}\t{}\t{gcg}\t{gx}\t{}", label(lg, x), tags.join(",")))
        })
        .collect()
}
