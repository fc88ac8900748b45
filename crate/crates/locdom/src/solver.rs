//! Exact X-number computation.
//!
//! [`gamma`] runs a pruned branch-and-bound: iterative deepening over the code
//! size with a depth-first search that extends candidate sets in increasing
//! vertex order ("in the code" is tried before "skip"). The first complete set
//! found at the optimal size is therefore the lexicographically smallest
//! optimum, matching [`gamma_oracle`], the naive subset-enumeration oracle
//! kept as an independent cross-check.
//!
//! Pruning is conservative: a branch is cut only when no completion can
//! dominate every vertex or repair a permanently unseparated pair, so
//! exhaustiveness (and thereby optimality) is preserved.

use num_rational::Ratio;
use thiserror::Error;

use crate::checker::{self, CodeKind, Separation};
use crate::graph::Graph;
use crate::set::{mask_below, VertexSet};

/// Default cap on explored search nodes before a solve gives up.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Default ceiling on the order of instances the oracle accepts.
pub const DEFAULT_ORACLE_CEILING: usize = 16;

/// Why no code of the requested kind exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InadmissibleReason {
    /// Open domination is impossible at an isolated vertex.
    IsolatedVertex(usize),
    /// False twins can never be total-separated, so no OLD-set exists.
    FalseTwins(usize, usize),
}

impl std::fmt::Display for InadmissibleReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InadmissibleReason::IsolatedVertex(v) => write!(f, "isolated vertex {v}"),
            InadmissibleReason::FalseTwins(a, b) => write!(f, "false twins ({a},{b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved {
        value: usize,
        witness: VertexSet,
    },
    Inadmissible(InadmissibleReason),
    /// The node budget ran out before the value was settled. Deliberately
    /// distinct from a value: callers must not treat it as one.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub outcome: SolveOutcome,
    pub nodes_explored: u64,
}

impl SolveResult {
    pub fn value(&self) -> Option<usize> {
        match &self.outcome {
            SolveOutcome::Solved { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match &self.outcome {
            SolveOutcome::Solved { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("oracle ceiling exceeded: n={n} > {ceiling}")]
    OracleCeiling { n: usize, ceiling: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph admits no OLD-set")]
    OldInadmissible,
    #[error("instance too large for exhaustive search: n={n} > {max}")]
    TooLarge { n: usize, max: usize },
}

fn inadmissible_reason(g: &Graph, kind: CodeKind) -> Option<InadmissibleReason> {
    if g.n() == 0 {
        return None;
    }
    match kind {
        CodeKind::Dom | CodeKind::Ld => None,
        CodeKind::Tdom | CodeKind::Ltd => {
            g.isolated_vertex().map(InadmissibleReason::IsolatedVertex)
        }
        CodeKind::Old => g
            .isolated_vertex()
            .map(InadmissibleReason::IsolatedVertex)
            .or_else(|| {
                g.false_twin_pairs()
                    .first()
                    .map(|&(a, b)| InadmissibleReason::FalseTwins(a, b))
            }),
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// A lower bound on the size of any `kind`-set of `g`, used to seed the
/// iterative deepening. Combines the coverage bound (one pick dominates at
/// most max-degree(+1) vertices), the trace-counting bound (distinct nonempty
/// traces are subsets of the code), and for OLD on regular twin-free graphs
/// the `2n/(1+r)` bound.
pub fn search_lower_bound(g: &Graph, kind: CodeKind) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let max_cov = (0..n)
        .map(|v| {
            let m = if kind.open_domination() {
                g.adjacency_mask(v)
            } else {
                g.closed_mask(v)
            };
            m.count_ones() as usize
        })
        .max()
        .unwrap_or(0);
    let mut lb = if max_cov == 0 {
        n
    } else {
        ceil_div(n, max_cov)
    };
    match kind.separation() {
        Separation::None => {}
        Separation::OutsideCode => {
            // n - k vertices outside the code carry distinct nonempty traces
            let mut k = 0usize;
            while n.saturating_sub(k) > (1usize << k.min(63)).saturating_sub(1) {
                k += 1;
            }
            lb = lb.max(k);
        }
        Separation::AllPairs => {
            let mut k = 0usize;
            while n > (1usize << k.min(63)).saturating_sub(1) {
                k += 1;
            }
            lb = lb.max(k);
        }
    }
    if kind == CodeKind::Old {
        if let Ok(bound) = regular_old_lower_bound(g) {
            lb = lb.max(bound.ceil().to_integer());
        }
    }
    lb
}

/// The `2n/(1+r)` lower bound on OLD-numbers of `r`-regular graphs without
/// false twins, as an exact rational.
pub fn regular_old_lower_bound(g: &Graph) -> Result<Ratio<usize>, SolveError> {
    let r = g.regular_degree().ok_or(SolveError::NotRegular)?;
    if !checker::admits_old(g) {
        return Err(SolveError::OldInadmissible);
    }
    Ok(Ratio::new(2 * g.n(), 1 + r))
}

/// One pair constraint. `ext` collects every vertex whose membership in the
/// code satisfies the pair: the open-neighborhood symmetric difference, plus
/// (for LD/LTD) the endpoints themselves, since a pair with an endpoint in
/// the code is exempt.
struct PairConstraint {
    ext: u128,
}

fn pair_constraints(g: &Graph, kind: CodeKind) -> Vec<PairConstraint> {
    let n = g.n();
    let mut out = Vec::new();
    match kind.separation() {
        Separation::None => {}
        sep => {
            for a in 0..n {
                for b in a + 1..n {
                    let diff = g.adjacency_mask(a) ^ g.adjacency_mask(b);
                    let ext = match sep {
                        Separation::OutsideCode => diff | (1u128 << a) | (1u128 << b),
                        Separation::AllPairs => diff,
                        Separation::None => unreachable!(),
                    };
                    out.push(PairConstraint { ext });
                }
            }
        }
    }
    out
}

enum LayerOutcome {
    Found(u128),
    Exhausted,
    Budget,
}

struct LayerSearch<'a> {
    n: usize,
    k: usize,
    all: u128,
    cov: &'a [u128],
    unreachable_at: &'a [u128],
    top_cov: &'a [Vec<u32>],
    pairs: &'a [PairConstraint],
    nodes: &'a mut u64,
    budget: u64,
}

impl LayerSearch<'_> {
    fn dive(&mut self, first: usize, depth: usize, chosen: u128, dominated: u128) -> LayerOutcome {
        let remaining = self.k - depth;
        for c in first..=(self.n - remaining) {
            *self.nodes += 1;
            if *self.nodes > self.budget {
                return LayerOutcome::Budget;
            }
            let chosen2 = chosen | (1u128 << c);
            let dominated2 = dominated | self.cov[c];
            if remaining == 1 {
                if dominated2 == self.all && self.pairs.iter().all(|p| chosen2 & p.ext != 0) {
                    return LayerOutcome::Found(chosen2);
                }
                continue;
            }
            // some vertex can no longer be dominated by any pick > c
            let undominated = self.all & !dominated2;
            if undominated & self.unreachable_at[c] != 0 {
                continue;
            }
            // the remaining picks cannot cover that many vertices
            if undominated.count_ones() > self.top_cov[c][remaining - 1] {
                continue;
            }
            // a pair neither satisfied nor repairable by any pick > c
            let available = chosen2 | (self.all & !mask_below(c + 1));
            if self.pairs.iter().any(|p| available & p.ext == 0) {
                continue;
            }
            match self.dive(c + 1, depth + 1, chosen2, dominated2) {
                LayerOutcome::Exhausted => {}
                other => return other,
            }
        }
        LayerOutcome::Exhausted
    }
}

/// Exact `kind`-number of `g` with the default node budget.
pub fn gamma(g: &Graph, kind: CodeKind) -> SolveResult {
    gamma_budgeted(g, kind, DEFAULT_NODE_BUDGET)
}

/// Exact `kind`-number of `g`, giving up with
/// [`SolveOutcome::BudgetExhausted`] after `max_nodes` search nodes.
///
/// The witness is the lexicographically smallest optimal set; the certificate
/// is re-validated through [`checker::is_code`] before being returned.
pub fn gamma_budgeted(g: &Graph, kind: CodeKind, max_nodes: u64) -> SolveResult {
    let n = g.n();
    if n == 0 {
        return SolveResult {
            outcome: SolveOutcome::Solved {
                value: 0,
                witness: VertexSet::empty(0),
            },
            nodes_explored: 0,
        };
    }
    if let Some(reason) = inadmissible_reason(g, kind) {
        return SolveResult {
            outcome: SolveOutcome::Inadmissible(reason),
            nodes_explored: 0,
        };
    }

    let all = mask_below(n);
    let cov: Vec<u128> = (0..n)
        .map(|v| {
            if kind.open_domination() {
                g.adjacency_mask(v)
            } else {
                g.closed_mask(v)
            }
        })
        .collect();
    let unreachable_at: Vec<u128> = (0..n)
        .map(|l| {
            let future = all & !mask_below(l + 1);
            (0..n)
                .filter(|&v| cov[v] & future == 0)
                .fold(0u128, |m, v| m | (1u128 << v))
        })
        .collect();
    let top_cov: Vec<Vec<u32>> = (0..n)
        .map(|l| {
            let mut sizes: Vec<u32> = (l + 1..n).map(|w| cov[w].count_ones()).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let mut sums = Vec::with_capacity(sizes.len() + 1);
            sums.push(0u32);
            for s in sizes {
                sums.push(sums.last().unwrap() + s);
            }
            sums
        })
        .collect();
    let pairs = pair_constraints(g, kind);

    let mut nodes = 0u64;
    for k in search_lower_bound(g, kind)..=n {
        if k == 0 {
            continue; // n >= 1 here, the empty set never dominates
        }
        let mut layer = LayerSearch {
            n,
            k,
            all,
            cov: &cov,
            unreachable_at: &unreachable_at,
            top_cov: &top_cov,
            pairs: &pairs,
            nodes: &mut nodes,
            budget: max_nodes,
        };
        match layer.dive(0, 0, 0, 0) {
            LayerOutcome::Found(bits) => {
                let witness = VertexSet::from_mask(n, bits);
                let verdict = checker::is_code(g, &witness, kind).expect("universe matches");
                assert!(
                    verdict.ok(),
                    "search produced an invalid certificate: {:?}",
                    verdict.failure()
                );
                return SolveResult {
                    outcome: SolveOutcome::Solved { value: k, witness },
                    nodes_explored: nodes,
                };
            }
            LayerOutcome::Exhausted => {}
            LayerOutcome::Budget => {
                return SolveResult {
                    outcome: SolveOutcome::BudgetExhausted,
                    nodes_explored: nodes,
                };
            }
        }
    }
    unreachable!("an admissible instance always admits the full vertex set")
}

/// Naive oracle: enumerates subsets in increasing cardinality (lexicographic
/// within each size) and tests each through [`checker::is_code`]. The first
/// hit is the lexicographically smallest optimum. `nodes_explored` counts the
/// subsets tested.
pub fn gamma_oracle(g: &Graph, kind: CodeKind) -> Result<SolveResult, SolveError> {
    gamma_oracle_with_ceiling(g, kind, DEFAULT_ORACLE_CEILING)
}

pub fn gamma_oracle_with_ceiling(
    g: &Graph,
    kind: CodeKind,
    ceiling: usize,
) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n > ceiling {
        return Err(SolveError::OracleCeiling { n, ceiling });
    }
    let mut tested = 0u64;
    for k in 0..=n {
        let mut found: Option<VertexSet> = None;
        for_each_combination(n, k, |combo| {
            tested += 1;
            let set = VertexSet::from_indices(n, combo.iter().copied()).expect("in range");
            if checker::is_code(g, &set, kind)
                .expect("universe matches")
                .ok()
            {
                found = Some(set);
                true
            } else {
                false
            }
        });
        if let Some(witness) = found {
            return Ok(SolveResult {
                outcome: SolveOutcome::Solved { value: k, witness },
                nodes_explored: tested,
            });
        }
    }
    let reason = inadmissible_reason(g, kind).expect("exhaustion implies inadmissibility");
    Ok(SolveResult {
        outcome: SolveOutcome::Inadmissible(reason),
        nodes_explored: tested,
    })
}

/// Every `kind`-set of `g` with exactly `size` vertices, in lexicographic
/// order. Plain enumeration; meant for small analysis and test corpora.
pub fn codes_of_size(g: &Graph, kind: CodeKind, size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_combination(g.n(), size, |combo| {
        let set = VertexSet::from_indices(g.n(), combo.iter().copied()).expect("in range");
        if checker::is_code(g, &set, kind)
            .expect("universe matches")
            .ok()
        {
            out.push(set);
        }
        false
    });
    out
}

const COVER_SEARCH_MAX: usize = 20;

/// Exact minimum vertex cover by increasing-cardinality enumeration; the
/// witness is the lexicographically smallest minimum cover. Guarded to small
/// orders, which covers every auxiliary circulant this crate works with.
pub fn min_vertex_cover(g: &Graph) -> Result<(usize, VertexSet), SolveError> {
    let n = g.n();
    if n > COVER_SEARCH_MAX {
        return Err(SolveError::TooLarge {
            n,
            max: COVER_SEARCH_MAX,
        });
    }
    let edge_masks: Vec<u128> = g
        .edges()
        .iter()
        .map(|&(a, b)| (1u128 << a) | (1u128 << b))
        .collect();
    for k in 0..=n {
        let mut found = None;
        for_each_combination(n, k, |combo| {
            let mask = combo.iter().fold(0u128, |m, &v| m | (1u128 << v));
            if edge_masks.iter().all(|&e| mask & e != 0) {
                found = Some(VertexSet::from_mask(n, mask));
                true
            } else {
                false
            }
        });
        if let Some(cover) = found {
            return Ok((k, cover));
        }
    }
    unreachable!("the full vertex set covers every edge")
}

/// All minimum vertex covers, in lexicographic order.
pub fn minimum_vertex_covers(g: &Graph) -> Result<Vec<VertexSet>, SolveError> {
    let (size, _) = min_vertex_cover(g)?;
    let edge_masks: Vec<u128> = g
        .edges()
        .iter()
        .map(|&(a, b)| (1u128 << a) | (1u128 << b))
        .collect();
    let mut out = Vec::new();
    for_each_combination(g.n(), size, |combo| {
        let mask = combo.iter().fold(0u128, |m, &v| m | (1u128 << v));
        if edge_masks.iter().all(|&e| mask & e != 0) {
            out.push(VertexSet::from_mask(g.n(), mask));
        }
        false
    });
    Ok(out)
}

/// Calls `f` on each k-combination of `0..n` in lexicographic order; `f`
/// returns `true` to stop early. Returns whether the walk stopped early.
fn for_each_combination<F: FnMut(&[usize]) -> bool>(n: usize, k: usize, mut f: F) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        if k == 0 {
            return false;
        }
        let mut i = k - 1;
        while idx[i] == n - k + i {
            if i == 0 {
                return false;
            }
            i -= 1;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{random_connected, Graph};
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn value(g: &Graph, kind: CodeKind) -> usize {
        gamma(g, kind).value().expect("solvable")
    }

    #[test]
    fn small_path_and_cycle_values() {
        assert_eq!(value(&Graph::path(2).unwrap(), CodeKind::Ld), 1);
        assert_eq!(value(&Graph::cycle(5).unwrap(), CodeKind::Old), 4);
        let mc4 = Graph::cycle(4).unwrap().mycielski().unwrap();
        assert_eq!(value(&mc4, CodeKind::Ltd), 4);
        assert_eq!(value(&Graph::cycle(10).unwrap(), CodeKind::Old), 8);
    }

    #[test]
    fn oracle_examples() {
        let r = gamma_oracle(&Graph::path(3).unwrap(), CodeKind::Ld).unwrap();
        assert_eq!(r.value(), Some(2));
        let r = gamma_oracle(&Graph::cycle(3).unwrap(), CodeKind::Tdom).unwrap();
        assert_eq!(r.value(), Some(2));
        let r = gamma_oracle(&Graph::star(4).unwrap(), CodeKind::Ld).unwrap();
        assert_eq!(r.value(), Some(4));
    }

    #[test]
    fn oracle_rejects_large_instances() {
        let g = Graph::path(17).unwrap();
        assert_eq!(
            gamma_oracle(&g, CodeKind::Dom).unwrap_err(),
            SolveError::OracleCeiling { n: 17, ceiling: 16 }
        );
        assert!(gamma_oracle_with_ceiling(&g, CodeKind::Dom, 17).is_ok());
    }

    #[test]
    fn old_inadmissibility_is_reported() {
        let c4 = Graph::cycle(4).unwrap();
        let r = gamma(&c4, CodeKind::Old);
        assert_eq!(
            r.outcome,
            SolveOutcome::Inadmissible(InadmissibleReason::FalseTwins(0, 2))
        );
        let o = gamma_oracle(&c4, CodeKind::Old).unwrap();
        assert!(matches!(o.outcome, SolveOutcome::Inadmissible(_)));

        let p1 = Graph::path(1).unwrap();
        let r = gamma(&p1, CodeKind::Tdom);
        assert_eq!(
            r.outcome,
            SolveOutcome::Inadmissible(InadmissibleReason::IsolatedVertex(0))
        );
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let g = Graph::cycle(12).unwrap().mycielski().unwrap();
        let r = gamma_budgeted(&g, CodeKind::Old, 5);
        assert_eq!(r.outcome, SolveOutcome::BudgetExhausted);
        assert!(r.nodes_explored >= 5);
    }

    #[test]
    fn regular_bound_values() {
        let c9 = Graph::cycle(9).unwrap();
        assert_eq!(
            regular_old_lower_bound(&c9).unwrap(),
            Ratio::from_integer(6)
        );
        let c10 = Graph::cycle(10).unwrap();
        let b = regular_old_lower_bound(&c10).unwrap();
        assert_eq!(b, Ratio::new(20, 3));
        assert_eq!(b.ceil().to_integer(), 7);
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(
            regular_old_lower_bound(&c3).unwrap(),
            Ratio::from_integer(2)
        );
        assert_eq!(
            regular_old_lower_bound(&Graph::path(3).unwrap()).unwrap_err(),
            SolveError::NotRegular
        );
        assert_eq!(
            regular_old_lower_bound(&Graph::cycle(4).unwrap()).unwrap_err(),
            SolveError::OldInadmissible
        );
    }

    #[test]
    fn vertex_cover_small_cases() {
        let k5 = Graph::aux_circulant(5).unwrap();
        assert_eq!(min_vertex_cover(&k5).unwrap().0, 4);
        let c6 = Graph::aux_circulant(6).unwrap();
        assert_eq!(min_vertex_cover(&c6).unwrap().0, 4);
        let p4 = Graph::path(4).unwrap();
        let (size, cover) = min_vertex_cover(&p4).unwrap();
        assert_eq!(size, 2);
        assert_eq!(cover.to_vec(), vec![0, 2]); // lexicographically smallest
        let covers = minimum_vertex_covers(&p4).unwrap();
        assert!(covers.len() >= 2);
        assert_eq!(covers[0].to_vec(), vec![0, 2]);
    }

    #[test]
    fn codes_of_size_enumerates_optima() {
        let c5 = Graph::cycle(5).unwrap();
        let optima = codes_of_size(&c5, CodeKind::Old, 4);
        assert!(!optima.is_empty());
        assert!(optima.contains(&VertexSet::from_indices(5, [0, 1, 2, 3]).unwrap()));
        assert!(codes_of_size(&c5, CodeKind::Old, 3).is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn solver_matches_oracle(n in 2usize..8, seed in 0u64..200) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = random_connected(&mut rng, n, 0.4);
            for kind in CodeKind::ALL {
                let fast = gamma(&g, kind);
                let slow = gamma_oracle(&g, kind).unwrap();
                match (&fast.outcome, &slow.outcome) {
                    (
                        SolveOutcome::Solved { value: a, witness: wa },
                        SolveOutcome::Solved { value: b, witness: wb },
                    ) => {
                        prop_assert_eq!(a, b);
                        prop_assert_eq!(wa, wb, "witnesses must both be the lex-min optimum");
                    }
                    (SolveOutcome::Inadmissible(_), SolveOutcome::Inadmissible(_)) => {}
                    other => prop_assert!(false, "outcome mismatch: {:?}", other),
                }
            }
        }

        #[test]
        fn kind_chain_on_values(n in 2usize..8, seed in 0u64..200) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = random_connected(&mut rng, n, 0.4);
            let v = |kind| gamma(&g, kind).value();
            let (dom, tdom) = (v(CodeKind::Dom).unwrap(), v(CodeKind::Tdom).unwrap());
            prop_assert!(dom <= tdom);
            let (ld, ltd) = (v(CodeKind::Ld).unwrap(), v(CodeKind::Ltd).unwrap());
            prop_assert!(ld <= ltd);
            if let Some(old) = v(CodeKind::Old) {
                prop_assert!(ltd <= old);
            }
        }

        #[test]
        fn mycielski_raises_domination_by_one(n in 2usize..8, seed in 0u64..200) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = random_connected(&mut rng, n, 0.4);
            let m = g.mycielski().unwrap();
            for kind in [CodeKind::Dom, CodeKind::Tdom] {
                prop_assert_eq!(
                    gamma(&m, kind).value().unwrap(),
                    gamma(&g, kind).value().unwrap() + 1
                );
            }
        }
    }
}
