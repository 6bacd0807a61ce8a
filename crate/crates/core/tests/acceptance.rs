//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria 5 and 6 cannot hold as stated (see the notes printed with them);
//! they are run unchanged and reported as failures. The process exits non-zero
//! only if some criterion's outcome differs from that expectation.

mod common;

use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

use common::{cap, small_corpus};
use lattice_wiring::analysis::{
    format_decimal, format_ratio, marginal_volume, rat, recurrence_table, spiral_leaf_index,
    spiral_plan, vsn_closed_form, vsn_sum, wired_ratio, Rational, RecurrenceTable,
};
use lattice_wiring::oracle::{exhaustive_vr, optimal_wiring, OracleConfig};
use lattice_wiring::wiring::json::to_json;
use lattice_wiring::wiring::{check_half_plane, check_quadrants};
use lattice_wiring::{validate_k_wiring, wire, GridWiring, OrderedTree, SubdivisionPlan};

const UNATTAINABLE: [u8; 2] = [5, 6];

struct Outcome {
    id: u8,
    pass: bool,
    detail: String,
}

fn outcome(id: u8, pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        id,
        pass,
        detail: detail.into(),
    }
}

/// Criteria 1 to 3 share one pass over the corpus.
fn corpus_criteria() -> [Outcome; 3] {
    let start = Instant::now();
    let mut trees = 0u64;
    let mut bound: Vec<String> = Vec::new();
    let mut valid: Vec<String> = Vec::new();
    let mut formula: Vec<String> = Vec::new();
    let mut check = |t: &OrderedTree| {
        trees += 1;
        let w = wire(t);
        let vol = w.volume();
        if vol > cap(t.len()) {
            bound.push(t.to_text());
        }
        let ok = validate_k_wiring(&w, 1).is_valid()
            && check_quadrants(t, &w).is_ok()
            && check_half_plane(&w).is_ok();
        if !ok {
            valid.push(t.to_text());
        }
        if vol != w.volume_by_formula(t) {
            formula.push(t.to_text());
        }
    };
    for t in small_corpus(12) {
        check(&t);
    }
    for n in [100usize, 1_000, 10_000] {
        for i in 0..1_000u64 {
            check(&OrderedTree::random(n, n as u64 * 1_000_003 + i).unwrap());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let report = |failures: &[String], what: &str| {
        if failures.is_empty() {
            format!("{trees} trees, {what} ({secs:.1} s)")
        } else {
            format!(
                "{} of {trees} trees fail, first: {}",
                failures.len(),
                failures[0]
            )
        }
    };
    [
        outcome(
            1,
            bound.is_empty() && secs < 120.0,
            report(&bound, "volume <= ceil(7n/3)"),
        ),
        outcome(
            2,
            valid.is_empty(),
            report(&valid, "1-wirings with quadrant separation"),
        ),
        outcome(
            3,
            formula.is_empty(),
            report(&formula, "volume equals 1 + sum of edge lengths"),
        ),
    ]
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let r = OrderedTree::spiral(4).unwrap().reduce();
    let plan = spiral_plan(4).unwrap();
    let target = rat(21, 16);
    let mut gaps: Vec<Rational> = Vec::new();
    for k in 10..=16 {
        let p = plan.realize(&r, 1 << k).unwrap();
        let ratio = wired_ratio(&r, &p).unwrap().ratio;
        let gap = &target - &ratio;
        gaps.push(if gap < Rational::from_integer(0.into()) {
            -gap
        } else {
            gap
        });
    }
    let last = gaps.last().unwrap();
    let shrinking = gaps.windows(2).all(|w| w[1] < w[0]);
    let secs = start.elapsed().as_secs_f64();
    outcome(
        4,
        *last < rat(1, 100) && shrinking && secs < 30.0,
        format!(
            "|ratio - 21/16| at N = 2^10..2^16: {} ({secs:.1} s)",
            gaps.iter()
                .map(|g| format_decimal(g, 6))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    )
}

fn spiral_support_ok(plan: &SubdivisionPlan) -> bool {
    let allowed: BTreeSet<usize> = [
        0,
        1,
        spiral_leaf_index(0),
        spiral_leaf_index(2),
        spiral_leaf_index(3),
    ]
    .into();
    plan.counts[spiral_leaf_index(1)] == 0 && plan.support().iter().all(|i| allowed.contains(i))
}

fn criterion_5() -> Outcome {
    let r = OrderedTree::spiral(4).unwrap().reduce();
    let mut failures = Vec::new();
    for n in 0..=16 {
        match exhaustive_vr(&r, n, 1_000_000) {
            Ok(e) if spiral_support_ok(&e.plan) => {}
            Ok(e) => failures.push(format!("N={n}: argmax {:?}", e.plan.counts)),
            Err(e) => failures.push(format!("N={n}: {e}")),
        }
    }
    // The smallest budgets that admit a legal plan, for context.
    let mut feasible = Vec::new();
    for n in (20..=52).step_by(8) {
        let e = exhaustive_vr(&r, n, 1_000_000).unwrap();
        feasible.push(format!(
            "N={n} argmax {:?} {} support {}",
            e.plan.counts,
            format_ratio(&e.ratio),
            if spiral_support_ok(&e.plan) {
                "ok"
            } else {
                "off"
            }
        ));
    }
    outcome(
        5,
        failures.is_empty(),
        format!(
            "{} of 17 budgets fail (first: {}); reduce(S4) needs N >= {} for any legal plan; feasible budgets: {}",
            failures.len(),
            failures.first().map_or("none", String::as_str),
            r.minimal_legal_plan().total(),
            feasible.join("; ")
        ),
    )
}

fn criterion_6() -> Outcome {
    let t = recurrence_table(30).unwrap();
    let v = &t.values;
    let limit = RecurrenceTable::limit();
    let monotone = RecurrenceTable::is_monotone(v);
    let bounded = v.iter().all(|x| *x <= limit);
    let initial = v[0] == rat(1, 1) && v[1] == rat(1, 1) && v[2] == rat(4, 3);
    let gap = &limit - &v[30];
    let close = gap < rat(1, 1000);
    let longer = recurrence_table(40).unwrap();
    let first_close = (0..=40).find(|&n| &limit - &longer.values[n] < rat(1, 1000));
    outcome(
        6,
        monotone && bounded && initial && close,
        format!(
            "monotone {monotone}, bounded {bounded}, initial values {initial}, 7/3 - V(30) = {} (< 0.001: {close}; first n with gap < 0.001 is {:?})",
            format_decimal(&gap, 7),
            first_close
        ),
    )
}

fn criterion_7() -> Outcome {
    let bound = rat(4, 3);
    let within = (3..=20).all(|n| vsn_sum(n).unwrap() <= bound);
    let sum4 = vsn_sum(4).unwrap();
    let closed4 = vsn_closed_form(4).unwrap();
    let differing = (3..=20)
        .filter(|&n| vsn_sum(n).unwrap() != vsn_closed_form(n).unwrap())
        .count();
    outcome(
        7,
        within && sum4 == rat(21, 16) && closed4 == rat(61, 48),
        format!(
            "sum <= 4/3 for n = 3..20: {within}; n = 4: sum {} vs printed closed form {} (DISCREPANCY); forms differ at {differing} of 18 n",
            format_ratio(&sum4),
            format_ratio(&closed4)
        ),
    )
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let config = OracleConfig::default();
    let wider = OracleConfig {
        box_half_width: Some(9),
        ..config
    };
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut explored = 0;
    for t in small_corpus(6) {
        let n = t.len() as u64;
        let constructed = wire(&t).volume();
        match optimal_wiring(&t, &config) {
            Ok(o) => {
                explored += o.explored;
                let again = optimal_wiring(&t, &wider).map(|w| w.best_volume);
                let ok = n <= o.best_volume
                    && o.best_volume <= constructed
                    && constructed <= cap(t.len())
                    && validate_k_wiring(&o.witness, 1).is_valid()
                    && o.witness.volume() == o.best_volume
                    && again == Ok(o.best_volume);
                if !ok {
                    failures.push(t.to_text());
                }
            }
            Err(e) => failures.push(format!("{t}: {e}")),
        }
        checked += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        8,
        failures.is_empty() && secs < 600.0,
        format!(
            "{checked} trees, {} failures, {explored} search nodes ({secs:.2} s)",
            failures.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let r = OrderedTree::spiral(4).unwrap().reduce();
    let leaf1 = spiral_leaf_index(1);
    let leaf2 = spiral_leaf_index(2);
    // Spiral leaves (10, 2, 6, 0) and (10, 6, 2, 0) with long enough paths.
    let more_on_2 = SubdivisionPlan::new(vec![60, 30, 10, 2, 6, 0]);
    let more_on_1 = SubdivisionPlan::new(vec![60, 30, 10, 6, 2, 0]);
    let v1 = marginal_volume(&r, leaf1, &more_on_2);
    let v2 = marginal_volume(&r, leaf2, &more_on_1);
    let one = Ok(rat(1, 1));
    outcome(
        9,
        v1 == one && v2 == one,
        format!(
            "v1 with leaf 2 ahead: {}; v2 with leaf 1 ahead: {}",
            v1.as_ref().map_or_else(|e| e.to_string(), format_ratio),
            v2.as_ref().map_or_else(|e| e.to_string(), format_ratio)
        ),
    )
}

fn inside(w: &GridWiring, keep: impl Fn(i64, i64) -> bool) -> bool {
    w.points().all(|p| keep(p.x, p.y))
}

/// The wiring of the subtree at `v`, without the connector into `v`, relative
/// to the image of `top`.
fn subtree_image(
    t: &OrderedTree,
    w: &GridWiring,
    top: lattice_wiring::NodeId,
    v: lattice_wiring::NodeId,
) -> GridWiring {
    let mut inside = vec![false; t.len()];
    inside[v.0] = true;
    for u in t.nodes().skip(v.0 + 1) {
        if let Some(p) = t.parent(u) {
            inside[u.0] = inside[p.0];
        }
    }
    let origin = w.vertices[&top];
    GridWiring {
        vertices: w
            .vertices
            .iter()
            .filter(|(u, _)| inside[u.0])
            .map(|(&u, &p)| (u, p))
            .collect(),
        edges: w
            .edges
            .iter()
            .filter(|e| inside[e.to.0] && e.to != v)
            .cloned()
            .collect(),
    }
    .translate(-origin)
}

fn criterion_10() -> Outcome {
    let t = OrderedTree::perfect_planted(4);
    let w = wire(&t);
    let distinct: BTreeSet<_> = w.vertices.values().collect();
    let top = t.children(t.root())[0];
    let [first, second] = *t.children(top) else {
        unreachable!()
    };
    let upper = |x: i64, y: i64| x >= 0 && y >= 1;
    let lower = |x: i64, y: i64| x >= 1 && y <= 0;
    let root_ok = inside(&subtree_image(&t, &w, t.root(), top), upper);
    let top_ok = inside(&subtree_image(&t, &w, top, first), upper)
        && inside(&subtree_image(&t, &w, top, second), lower);
    let levels_ok = check_quadrants(&t, &w).is_ok();
    let golden_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/b4.json");
    let golden = std::fs::read_to_string(golden_path).unwrap_or_default();
    let golden_ok = golden.trim_end() == to_json(&w);
    outcome(
        10,
        distinct.len() == 32 && root_ok && top_ok && levels_ok && golden_ok,
        format!(
            "{} distinct vertex images, quadrants at the top {}, at every level {levels_ok}, golden JSON {golden_ok}",
            distinct.len(),
            root_ok && top_ok
        ),
    )
}

fn main() {
    let mut outcomes: Vec<Outcome> = corpus_criteria().into();
    outcomes.push(criterion_4());
    outcomes.push(criterion_5());
    outcomes.push(criterion_6());
    outcomes.push(criterion_7());
    outcomes.push(criterion_8());
    outcomes.push(criterion_9());
    outcomes.push(criterion_10());

    let mut surprises = 0;
    for o in &outcomes {
        let expected_fail = UNATTAINABLE.contains(&o.id);
        let tag = match (o.pass, expected_fail) {
            (true, false) => "PASS",
            (false, true) => "FAIL (unattainable as stated)",
            (true, true) => "PASS (expected to fail)",
            (false, false) => "FAIL",
        };
        if o.pass == expected_fail {
            surprises += 1;
        }
        println!("criterion {:>2}: {tag}: {}", o.id, o.detail);
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("acceptance: {passed} of {} criteria pass", outcomes.len());
    if surprises > 0 {
        println!("acceptance: {surprises} outcome(s) differ from the recorded expectation");
        std::process::exit(1);
    }
}
