//! Acceptance gate: thirteen end-to-end criteria over family instances,
//! exhaustive small-graph corpora, and the strategy playouts. Each test
//! prints one `criterion N: pass` line when it succeeds.

use std::path::PathBuf;

use condog::formats::{load_corpus, AnyLabeledGraph};
use condog::verify::{run_suite, Suite};
use condog::with_graph;
use condog_core::{
    game_connected_domination, solve_unmemoized, strategy, FamilySpec, GameState, GameValue,
    LabeledGraph, SolveContext, Turn, VertexSet,
};

fn corpus(name: &str) -> Vec<(String, AnyLabeledGraph)> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpora")
        .join(name);
    load_corpus(&path).unwrap()
}

fn family(spec: &str) -> LabeledGraph<u64> {
    FamilySpec::parse(spec).unwrap().build().unwrap()
}

fn value(g: &LabeledGraph<u64>, pred: &[&str], first: Turn) -> GameValue {
    let pred = pred.iter().map(|l| g.vertex(l).unwrap()).collect();
    game_connected_domination(&g.graph, pred, first).unwrap()
}

fn finite(v: GameValue) -> u32 {
    v.finite().expect("expected a finite value")
}

fn suite_passes(suite: Suite, corpus_name: &str) {
    let graphs = corpus(corpus_name);
    let report = run_suite(suite, &graphs, None);
    assert_eq!(report.skipped, 0, "{}: instances skipped", suite.name());
    assert!(
        report.violations.is_empty(),
        "{}: {:?}",
        suite.name(),
        report.violations
    );
}

#[test]
fn criterion_01_chain_family_values() {
    for n in 2..=5u32 {
        let h = family(&format!("H:{n}"));
        assert_eq!(finite(value(&h, &[], Turn::Dominator)), n, "H_{n} D-game");
        assert_eq!(finite(value(&h, &[], Turn::Staller)), 2 * n, "H_{n} S-game");
    }
    println!("criterion 1: pass");
}

#[test]
fn criterion_02_upper_sharpness_family() {
    for n in 3..=5u32 {
        let h = family(&format!("Hprime:{n}"));
        assert_eq!(finite(value(&h, &[], Turn::Dominator)), n, "H'_{n}");
        assert_eq!(
            finite(value(&h, &["u1"], Turn::Dominator)),
            2 * n - 3,
            "H'_{n} with u1 predominated"
        );
    }
    println!("criterion 2: pass");
}

#[test]
fn criterion_03_computer_verified_double_ring() {
    let c = family("C2:1,3");
    assert_eq!(finite(value(&c, &[], Turn::Dominator)), 14);
    assert_eq!(finite(value(&c, &["w"], Turn::Dominator)), 16);
    println!("criterion 3: pass");
}

#[test]
fn criterion_04_two_connected_gap() {
    let c12 = family("C2:1,2");
    let plain = finite(value(&c12, &[], Turn::Dominator)) as i64;
    let with_w = finite(value(&c12, &["w"], Turn::Dominator)) as i64;
    assert!(with_w - plain >= 0, "C_(1,2) gap {}", with_w - plain);

    let c13 = family("C2:1,3");
    let plain = finite(value(&c13, &[], Turn::Dominator)) as i64;
    let with_w = finite(value(&c13, &["w"], Turn::Dominator)) as i64;
    assert_eq!(with_w - plain, 2, "C_(1,3) gap");
    assert!(with_w - plain >= 3 - 2);
    println!("criterion 4: pass");
}

#[test]
fn criterion_05_drop_of_two() {
    for n in 3..=4 {
        let d = family(&format!("D:{n}"));
        let plain = finite(value(&d, &[], Turn::Dominator));
        let with_c2 = finite(value(&d, &["c2"], Turn::Dominator));
        assert_eq!(with_c2, plain - 2, "D_{n}");
    }
    println!("criterion 5: pass");
}

#[test]
fn criterion_06_lower_sharpness_family() {
    for (n, r) in [(1u32, 1), (2, 2), (2, 3), (3, 3)] {
        let g = family(&format!("Gnr:{n},{r}"));
        assert_eq!(finite(value(&g, &[], Turn::Dominator)), 2 * n - 1, "G_({n},{r})");
        assert_eq!(
            finite(value(&g, &[&format!("v{}", n + 1)], Turn::Dominator)),
            n,
            "G_({n},{r}) with v_(n+1) predominated"
        );
    }
    println!("criterion 6: pass");
}

#[test]
fn criterion_07_infinite_s_game() {
    let p4 = family("path:4");
    assert_eq!(value(&p4, &["v2"], Turn::Staller), GameValue::Infinite);
    println!("criterion 7: pass");
}

#[test]
fn criterion_08_bound_suites() {
    suite_passes(Suite::UpperBound, "connected_upto7.g6");
    suite_passes(Suite::LowerBound, "connected_upto7.g6");
    suite_passes(Suite::CdsSandwich, "connected_upto7.g6");
    suite_passes(Suite::SgameDouble, "connected_upto7.g6");
    println!("criterion 8: pass");
}

#[test]
fn criterion_09_continuation_monotonicity() {
    suite_passes(Suite::ContinuationMonotone, "connected_upto7.g6");
    println!("criterion 9: pass");
}

#[test]
fn criterion_10_pruning_soundness() {
    suite_passes(Suite::PruningSound, "connected_upto7.g6");
    println!("criterion 10: pass");
}

#[test]
fn criterion_11_characterization_agreement() {
    suite_passes(Suite::InfiniteCharacterization, "connected_upto7.g6");
    suite_passes(Suite::TreeInfinite, "trees_upto10.g6");
    println!("criterion 11: pass");
}

#[test]
fn criterion_12_strategy_playouts() {
    let h6 = family("H:6");
    let ctx = SolveContext::new(&h6.graph, VertexSet::empty());
    let mut fast = strategy::FastStrategy::new(&h6).unwrap();
    let mut optimal = strategy::OptimalStrategy::new(&ctx);
    let p = strategy::play_out(&ctx, &mut fast, &mut optimal, Turn::Dominator).unwrap();
    let mut played: Vec<String> = p
        .moves
        .iter()
        .map(|&v| h6.label_of(v).unwrap().to_string())
        .collect();
    played.sort();
    assert_eq!(played, ["u1", "u2", "u3", "u4", "u5", "u6"]);

    let h3 = family("H:3");
    let ctx = SolveContext::new(&h3.graph, VertexSet::empty());
    let mut optimal = strategy::OptimalStrategy::new(&ctx);
    let mut slow = strategy::SlowStrategy::new(&h3).unwrap();
    let p = strategy::play_out(&ctx, &mut optimal, &mut slow, Turn::Staller).unwrap();
    assert_eq!(p.value(), GameValue::Finite(6));
    println!("criterion 12: pass");
}

#[test]
fn criterion_13_oracle_equivalence() {
    for (id, any) in corpus("connected_upto7.g6") {
        if any.order() > 6 {
            continue;
        }
        with_graph!(&any, g => {
            for first in [Turn::Dominator, Turn::Staller] {
                let mut ctx = SolveContext::new(&g.graph, VertexSet::empty());
                let memoized = ctx.game_value(first).unwrap();
                let reference =
                    solve_unmemoized(&g.graph, VertexSet::empty(), GameState::initial(first));
                assert_eq!(memoized, reference, "{id} {first:?}");
                let playout = strategy::optimal_playout(&ctx, first).unwrap();
                assert_eq!(playout.value(), memoized, "{id} {first:?} playout");
            }
        });
    }
    println!("criterion 13: pass");
}
