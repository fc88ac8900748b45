//! Acceptance suite: one test per criterion, each asserting the exact
//! expected values and printing a `[criterion N] PASS` line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use locdom::checker::{self, CodeKind};
use locdom::construct;
use locdom::formulas;
use locdom::graph::{random_connected, Graph, GraphFamily};
use locdom::solver::{self, gamma, SolveOutcome};

type CacheKey = (usize, Vec<(usize, usize)>, CodeKind);
static SOLVES: Lazy<Mutex<HashMap<CacheKey, Option<usize>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Exact value, `None` when the instance admits no such code. Panics on
/// budget exhaustion: acceptance instances must solve within the default
/// budget. Memoized because the criteria revisit the same instances.
fn value(g: &Graph, kind: CodeKind) -> Option<usize> {
    let key = (g.n(), g.edges(), kind);
    if let Some(&hit) = SOLVES.lock().unwrap().get(&key) {
        return hit;
    }
    let result = match gamma(g, kind).outcome {
        SolveOutcome::Solved { value, .. } => Some(value),
        SolveOutcome::Inadmissible(_) => None,
        SolveOutcome::BudgetExhausted => {
            panic!("budget exhausted on {:?} {kind}", g.label())
        }
    };
    SOLVES.lock().unwrap().insert(key, result);
    result
}

fn must(g: &Graph, kind: CodeKind) -> usize {
    value(g, kind).unwrap_or_else(|| panic!("{:?} admits no {kind}-set", g.label()))
}

fn path(n: usize) -> Graph {
    Graph::path(n).unwrap()
}

fn cycle(n: usize) -> Graph {
    Graph::cycle(n).unwrap()
}

fn star(n: usize) -> Graph {
    Graph::star(n).unwrap()
}

fn myc(g: &Graph) -> Graph {
    g.mycielski().unwrap()
}

#[test]
fn criterion_01_small_value_table() {
    let p2 = path(2);
    assert_eq!(must(&p2, CodeKind::Ld), 1);
    assert_eq!(must(&p2, CodeKind::Ltd), 2);
    assert_eq!(must(&p2, CodeKind::Old), 2);

    let c5 = cycle(5);
    assert_eq!(must(&c5, CodeKind::Ld), 2);
    assert_eq!(must(&c5, CodeKind::Ltd), 3);
    assert_eq!(must(&c5, CodeKind::Old), 4);

    for kind in [CodeKind::Ld, CodeKind::Ltd] {
        assert_eq!(must(&path(3), kind), 2, "P_3 {kind}");
        assert_eq!(must(&cycle(4), kind), 2, "C_4 {kind}");
        assert_eq!(must(&myc(&path(3)), kind), 4, "M(P_3) {kind}");
        assert_eq!(must(&myc(&cycle(4)), kind), 4, "M(C_4) {kind}");
        assert_eq!(must(&cycle(3), kind), 2, "C_3 {kind}");
        assert_eq!(must(&myc(&cycle(3)), kind), 3, "M(C_3) {kind}");
    }
    println!("[criterion 1] PASS: small-value table reproduced exactly");
}

#[test]
fn criterion_02_total_domination_increases_by_one() {
    let mut checked = 0usize;
    let mut check = |g: &Graph| {
        let base = must(g, CodeKind::Tdom);
        let lifted = must(&myc(g), CodeKind::Tdom);
        assert_eq!(lifted, base + 1, "{:?}", g.label());
        checked += 1;
    };
    for n in 3..=10 {
        check(&path(n));
        check(&cycle(n));
    }
    for n in 3..=6 {
        check(&star(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0002);
    for _ in 0..200 {
        let n = rng.gen_range(2..=9);
        let g = random_connected(&mut rng, n, 0.35);
        check(&g);
    }
    println!(
        "[criterion 2] PASS: total domination number rises by exactly 1 on {checked} instances"
    );
}

#[test]
fn criterion_03_mycielski_lower_bound() {
    let mut checked = 0usize;
    for n in 3..=12 {
        for (family, g) in [(GraphFamily::Path, path(n)), (GraphFamily::Cycle, cycle(n))] {
            for kind in CodeKind::LOCATING {
                if kind == CodeKind::Old {
                    let skip = match family {
                        GraphFamily::Path => n == 3 || n == 4,
                        _ => n == 4,
                    };
                    if skip {
                        continue;
                    }
                }
                let base = must(&g, kind);
                let lifted = must(&myc(&g), kind);
                assert!(lifted > base, "{:?} {kind}: {lifted} < {base}+1", g.label());
                checked += 1;
            }
        }
    }
    println!("[criterion 3] PASS: gamma_X(M(G)) >= gamma_X(G)+1 on {checked} path/cycle instances");
}

#[test]
fn criterion_04_old_cycles_exact() {
    for n in (3..=30).filter(|&n| n != 4) {
        let out = construct::old_set_cycle(n).unwrap();
        assert!(out.validated, "n={n}");
        assert_eq!(
            out.set.len(),
            formulas::old_cycle(n).unwrap().value,
            "n={n}"
        );
    }
    for n in (3..=14).filter(|&n| n != 4) {
        assert_eq!(
            must(&cycle(n), CodeKind::Old),
            formulas::old_cycle(n).unwrap().value,
            "gamma_OLD(C_{n})"
        );
    }
    assert_eq!(must(&cycle(10), CodeKind::Old), 8);
    println!("[criterion 4] PASS: OLD cycle construction and numbers match the closed form (incl. C_10 = 8)");
}

#[test]
fn criterion_05_doubling_and_stars() {
    let mut lifted_sets = 0usize;
    let mut check_all_minimum_sets = |g: &Graph| {
        for kind in CodeKind::LOCATING {
            let Some(opt) = value(g, kind) else { continue };
            for witness in solver::codes_of_size(g, kind, opt) {
                let out = construct::doubling_lift(g, &witness, kind).unwrap();
                assert!(out.validated);
                assert_eq!(out.set.len(), 2 * witness.len());
                lifted_sets += 1;
            }
        }
    };
    for n in 2..=10 {
        check_all_minimum_sets(&path(n));
        if n >= 3 {
            check_all_minimum_sets(&cycle(n));
        }
        check_all_minimum_sets(&star(n));
    }
    for n in 3..=6 {
        for kind in [CodeKind::Ld, CodeKind::Ltd] {
            assert_eq!(must(&myc(&star(n)), kind), 2 * n, "M(K_1,{n}) {kind}");
        }
    }
    println!("[criterion 5] PASS: doubling lift validated on {lifted_sets} minimum sets; star numbers equal 2n");
}

#[test]
fn criterion_06_old_mycielski_values() {
    for n in (2..=10).filter(|&n| n != 3) {
        let expected = formulas::old_path(n).unwrap().value + 2;
        assert_eq!(must(&myc(&path(n)), CodeKind::Old), expected, "M(P_{n})");
    }
    let mut plus_one_cycles = Vec::new();
    for n in (3..=12).filter(|&n| n != 4) {
        let base = formulas::old_cycle(n).unwrap().value;
        assert_eq!(must(&cycle(n), CodeKind::Old), base, "C_{n}");
        let lifted = must(&myc(&cycle(n)), CodeKind::Old);
        let gap = lifted - base;
        assert!((1..=2).contains(&gap), "M(C_{n}): gap {gap} outside [1,2]");
        if gap == 1 {
            plus_one_cycles.push(n);
        }
    }
    println!(
        "[criterion 6] PASS: OLD path equality holds; OLD cycle gap in {{1,2}}; cycles attaining +1: {:?}",
        plus_one_cycles
    );
}

#[test]
fn criterion_07_ld_upper_bounds() {
    for n in 6..=8 {
        let bound = formulas::ub_ld_mycielski(n, GraphFamily::Path)
            .unwrap()
            .value;
        assert_eq!(must(&myc(&path(n)), CodeKind::Ld), bound, "M(P_{n})");
    }
    for n in [3, 6, 7] {
        let bound = formulas::ub_ld_mycielski(n, GraphFamily::Cycle)
            .unwrap()
            .value;
        assert_eq!(must(&myc(&cycle(n)), CodeKind::Ld), bound, "M(C_{n})");
    }
    for n in [4, 5] {
        let bound = formulas::ub_ld_mycielski(n, GraphFamily::Cycle)
            .unwrap()
            .value;
        assert!(
            must(&myc(&cycle(n)), CodeKind::Ld) < bound,
            "M(C_{n}) should be strictly below"
        );
    }
    for n in 6..=12 {
        let out = construct::ld_set_mycielski_path(n).unwrap();
        assert!(out.validated, "n={n}");
        assert_eq!(
            out.set.len(),
            formulas::ub_ld_mycielski(n, GraphFamily::Path)
                .unwrap()
                .value,
            "n={n}"
        );
    }
    println!("[criterion 7] PASS: LD bounds tight on M(P_6..8) and M(C_3/6/7), strict on M(C_4/5); path construction validates for n=6..12");
}

#[test]
fn criterion_08_ltd_upper_bounds_and_cover_discrepancy() {
    let mut failed_claims: Vec<String> = Vec::new();

    // claimed equalities at n in {6, 9}
    for n in [6, 9] {
        let bound = formulas::ub_ltd_mycielski(n, GraphFamily::Cycle)
            .unwrap()
            .value;
        let exact = must(&myc(&cycle(n)), CodeKind::Ltd);
        if exact != bound {
            failed_claims.push(format!(
                "equality claim fails at n={n}: exact gamma_LTD(M(C_{n})) = {exact} != bound {bound} \
                 (value confirmed by the independent subset-enumeration oracle)"
            ));
        }
    }
    // claimed strict inequalities at n in {3, 4, 5, 7, 8}
    for n in [3, 4, 5, 7, 8] {
        let bound = formulas::ub_ltd_mycielski(n, GraphFamily::Cycle)
            .unwrap()
            .value;
        let exact = must(&myc(&cycle(n)), CodeKind::Ltd);
        if exact >= bound {
            failed_claims.push(format!(
                "strictness claim fails at n={n}: exact {exact} >= bound {bound}"
            ));
        }
    }
    for n in 5..=12 {
        let out = construct::ltd_set_mycielski_cycle(n).unwrap();
        assert!(out.validated, "n={n}");
    }

    // the n=9 cover-size question, settled empirically: the tabulated
    // odd-multiple-of-3 case says 7, the true minimum cover of the
    // distance-(1,2) circulant is 6, and cover+2 = 8 matches both the cycle
    // bound n - floor(n/3) + 2 and the exact LTD-number of M(C_9)
    let tabulated = formulas::aux_vertex_cover_size(9).unwrap().value;
    let (exact_cover, _) = solver::min_vertex_cover(&Graph::aux_circulant(9).unwrap()).unwrap();
    let exact_ltd = must(&myc(&cycle(9)), CodeKind::Ltd);
    assert_eq!(tabulated, 7);
    assert_eq!(exact_cover, 6);
    assert_eq!(exact_ltd, exact_cover + 2);
    assert_eq!(
        exact_ltd,
        formulas::ub_ltd_mycielski(9, GraphFamily::Cycle)
            .unwrap()
            .value
    );
    println!(
        "[criterion 8] n=9 cover discrepancy resolved: exact circulant cover {exact_cover} \
         (tabulated case value {tabulated}); exact cover + 2 = {exact_ltd} equals the cycle bound and the exact LTD-number"
    );

    if failed_claims.is_empty() {
        println!(
            "[criterion 8] PASS: LTD bound tight on M(C_6/9), strict on M(C_3/4/5/7/8); construction validates for n=5..12"
        );
    } else {
        println!("[criterion 8] FAIL: {}", failed_claims.join("; "));
        panic!(
            "criterion 8: {} (every other sub-claim of this criterion holds; \
             exhaustive search shows the expected equality is not attainable)",
            failed_claims.join("; ")
        );
    }
}

#[test]
fn criterion_09_oracle_equivalence() {
    let mut instances: Vec<Graph> = Vec::new();
    instances.extend((1..=12).map(path));
    instances.extend((3..=12).map(cycle));
    instances.extend((1..=11).map(star));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0009);
    for _ in 0..100 {
        let n = rng.gen_range(2..=10);
        instances.push(random_connected(&mut rng, n, 0.4));
    }

    let mut agreements = 0usize;
    for g in &instances {
        for kind in CodeKind::ALL {
            let fast = gamma(g, kind);
            let slow = solver::gamma_oracle(g, kind).unwrap();
            match (&fast.outcome, &slow.outcome) {
                (
                    SolveOutcome::Solved {
                        value: a,
                        witness: wa,
                    },
                    SolveOutcome::Solved {
                        value: b,
                        witness: wb,
                    },
                ) => {
                    assert_eq!(a, b, "{:?} {kind}", g.label());
                    assert_eq!(wa, wb, "{:?} {kind}: witness divergence", g.label());
                }
                (SolveOutcome::Inadmissible(_), SolveOutcome::Inadmissible(_)) => {}
                other => panic!("{:?} {kind}: outcome mismatch {other:?}", g.label()),
            }
            agreements += 1;
        }
    }
    println!("[criterion 9] PASS: solver and oracle agree on {agreements} (instance, kind) pairs");
}

#[test]
fn criterion_10_structural_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0010);
    for trial in 0..500 {
        let n = rng.gen_range(2..=8);
        let g = random_connected(&mut rng, n, 0.4);
        let m = myc(&g);

        // twin correspondence, both directions
        let base_twins = g.false_twin_pairs();
        let lifted_twins = m.false_twin_pairs();
        for &(a, b) in &base_twins {
            assert!(lifted_twins.contains(&(a, b)), "trial {trial}: originals");
            assert!(
                lifted_twins.contains(&(n + a, n + b)),
                "trial {trial}: shadows"
            );
        }
        for &(a, b) in &lifted_twins {
            if b < n {
                assert!(
                    base_twins.contains(&(a, b)),
                    "trial {trial}: spurious original twins"
                );
            }
            if a >= n && b < 2 * n {
                assert!(
                    base_twins.contains(&(a - n, b - n)),
                    "trial {trial}: spurious shadow twins"
                );
            }
        }
        assert!(
            m.true_twin_pairs().is_empty(),
            "trial {trial}: true twins in M(G)"
        );

        // LD-sets of M(G) project to LD-sets of G
        let solve = gamma(&m, CodeKind::Ld);
        let witness = solve.witness().expect("LD always admissible");
        let projected = construct::down_projection(&m, witness).unwrap();
        assert!(
            checker::is_code(&g, &projected, CodeKind::Ld).unwrap().ok(),
            "trial {trial}: projection is not an LD-set"
        );
    }
    println!("[criterion 10] PASS: twin correspondence, true-twin absence and LD projection hold on 500 random graphs");
}
