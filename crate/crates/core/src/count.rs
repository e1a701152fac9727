//! Induced 4-cycle counters.
//!
//! Two unrelated algorithms are provided so that each can check the other:
//!
//! * [`count_induced_c4_enum`] visits every 4-subset and applies the literal
//!   membership test (exactly four induced edges, every induced degree two).
//! * [`count_induced_c4_diagonal`] sums, over every non-edge `{u, v}`, the
//!   number of non-adjacent pairs inside `N(u) ∩ N(v)`. An induced 4-cycle
//!   has exactly two non-adjacent diagonals, so the sum is twice the count.
//!
//! Both split their outer loop across the current rayon pool and combine
//! integer partial sums, so the result does not depend on the worker count.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::CountError;
use crate::graph::Graph;

/// Default refusal threshold for the enumeration counter, in 4-subsets.
pub const DEFAULT_SUBSET_CAP: u128 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Enumeration,
    Diagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountResult {
    pub value: u128,
    pub method: Method,
    pub elapsed: Duration,
}

/// Outcome of running both counters on the same graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AgreedCount {
    pub value: u128,
    pub enumeration: CountResult,
    pub diagonal: CountResult,
}

/// `C(n, 4)` without overflow for any `usize` input.
pub fn four_subsets(n: usize) -> u128 {
    let n = n as u128;
    if n < 4 {
        return 0;
    }
    n * (n - 1) / 2 * (n - 2) / 3 * (n - 3) / 4
}

/// Literal membership test on the six pair indicators of `{a, b, c, d}`.
///
/// Bit layout of `pairs`: ab, ac, bc, ad, bd, cd (bit 0 first).
const fn is_induced_c4(pairs: u8) -> bool {
    let p = pairs as u32;
    let (ab, ac, bc) = (p & 1, p >> 1 & 1, p >> 2 & 1);
    let (ad, bd, cd) = (p >> 3 & 1, p >> 4 & 1, p >> 5 & 1);
    let edges = ab + ac + bc + ad + bd + cd;
    edges == 4 && ab + ac + ad == 2 && ab + bc + bd == 2 && ac + bc + cd == 2 && ad + bd + cd == 2
}

const C4_TABLE: [bool; 64] = {
    let mut table = [false; 64];
    let mut i = 0;
    while i < 64 {
        table[i] = is_induced_c4(i as u8);
        i += 1;
    }
    table
};

/// For a triple with pair bits `tri` (ab, ac, bc), the `(ad, bd, cd)`
/// patterns that close an induced 4-cycle.
fn closing_patterns(tri: u8) -> ([u8; 8], usize) {
    let mut out = [0u8; 8];
    let mut len = 0;
    for k in 0u8..8 {
        if C4_TABLE[(tri | k << 3) as usize] {
            out[len] = k;
            len += 1;
        }
    }
    (out, len)
}

/// Counts induced 4-cycles by checking every 4-subset.
///
/// The fourth vertex is handled 64 candidates at a time: for a fixed triple
/// the membership test depends only on the three adjacency bits of `d`, so
/// it is evaluated word-wise over rows `a`, `b` and `c`.
pub fn count_induced_c4_enum(g: &Graph, subset_cap: u128) -> Result<CountResult, CountError> {
    let subsets = four_subsets(g.order());
    if subsets > subset_cap {
        return Err(CountError::SubsetCapExceeded {
            subsets,
            cap: subset_cap,
        });
    }
    let start = Instant::now();
    let n = g.order();
    let value = if n < 4 {
        0
    } else {
        (0..n - 3)
            .into_par_iter()
            .map(|a| enum_from(g, a))
            .sum::<u128>()
    };
    Ok(CountResult {
        value,
        method: Method::Enumeration,
        elapsed: start.elapsed(),
    })
}

/// 4-subsets with smallest element `a`.
fn enum_from(g: &Graph, a: usize) -> u128 {
    let n = g.order();
    let words = g.words_per_row();
    let tail_mask = match n % 64 {
        0 => !0u64,
        r => (1u64 << r) - 1,
    };
    let row_a = g.row(a);
    let closing: [([u8; 8], usize); 8] = std::array::from_fn(|tri| closing_patterns(tri as u8));
    let mut total = 0u128;
    for b in a + 1..n - 2 {
        let row_b = g.row(b);
        let ab = g.has_edge(a, b) as u8;
        for c in b + 1..n - 1 {
            let tri = ab | (g.has_edge(a, c) as u8) << 1 | (g.has_edge(b, c) as u8) << 2;
            let (patterns, len) = &closing[tri as usize];
            if *len == 0 {
                continue;
            }
            let patterns = &patterns[..*len];
            let row_c = g.row(c);
            let first = (c + 1) / 64;
            for w in first..words {
                let (x, y, z) = (row_a[w], row_b[w], row_c[w]);
                let mut hits = 0u64;
                for &k in patterns {
                    let sel = |bits: u64, on: bool| if on { bits } else { !bits };
                    hits |= sel(x, k & 1 != 0) & sel(y, k & 2 != 0) & sel(z, k & 4 != 0);
                }
                if w == first {
                    hits &= !0u64 << ((c + 1) % 64);
                }
                if w == words - 1 {
                    hits &= tail_mask;
                }
                total += hits.count_ones() as u128;
            }
        }
    }
    total
}

/// `Σ_{non-edges {u,v}}` (non-adjacent pairs in `N(u) ∩ N(v)`), before halving.
///
/// Always even for a simple graph.
pub fn diagonal_raw_sum(g: &Graph) -> u128 {
    let n = g.order();
    (0..n)
        .into_par_iter()
        .map_init(
            || vec![0u64; g.words_per_row()],
            |common, u| {
                let row_u = g.row(u);
                let mut sum = 0u128;
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut size = 0u64;
                    for ((c, &x), &y) in common.iter_mut().zip(row_u).zip(g.row(v)) {
                        *c = x & y;
                        size += c.count_ones() as u64;
                    }
                    if size < 2 {
                        continue;
                    }
                    // Each edge inside the common neighbourhood is seen from both ends.
                    let mut twice_edges = 0u64;
                    for w in crate::graph::iter_bits(common) {
                        twice_edges += g
                            .row(w)
                            .iter()
                            .zip(common.iter())
                            .map(|(a, b)| (a & b).count_ones() as u64)
                            .sum::<u64>();
                    }
                    debug_assert!(twice_edges.is_multiple_of(2));
                    let all_pairs = size * (size - 1) / 2;
                    sum += (all_pairs - twice_edges / 2) as u128;
                }
                sum
            },
        )
        .sum()
}

/// Counts induced 4-cycles via their non-adjacent diagonal pairs.
pub fn count_induced_c4_diagonal(g: &Graph) -> CountResult {
    let start = Instant::now();
    let raw = diagonal_raw_sum(g);
    assert!(raw.is_multiple_of(2), "diagonal sum {raw} is odd");
    CountResult {
        value: raw / 2,
        method: Method::Diagonal,
        elapsed: start.elapsed(),
    }
}

/// Runs both counters and insists that they agree.
pub fn count_both_and_check(g: &Graph, subset_cap: u128) -> Result<AgreedCount, CountError> {
    let enumeration = count_induced_c4_enum(g, subset_cap)?;
    let diagonal = count_induced_c4_diagonal(g);
    if enumeration.value != diagonal.value {
        return Err(CountError::Disagreement {
            enumeration: enumeration.value,
            diagonal: diagonal.value,
        });
    }
    Ok(AgreedCount {
        value: enumeration.value,
        enumeration,
        diagonal,
    })
}

/// Runs `f` on a dedicated pool of `workers` threads (`0` picks rayon's
/// default).
pub fn with_workers<R, F>(workers: usize, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("failed to start worker pool")
        .install(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, nested_blowup, theta_222, BaseGraph, BlowupSpec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Scalar reference: one adjacency lookup per pair, no word tricks.
    fn naive(g: &Graph) -> u128 {
        let n = g.order();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let s = [a, b, c, d];
                        let deg: Vec<usize> = s
                            .iter()
                            .map(|&x| s.iter().filter(|&&y| y != x && g.has_edge(x, y)).count())
                            .collect();
                        if deg.iter().sum::<usize>() == 8 && deg.iter().all(|&k| k == 2) {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn table_has_three_c4_labelings() {
        // A labelled 4-set carries exactly three distinct 4-cycles.
        assert_eq!(C4_TABLE.iter().filter(|&&x| x).count(), 3);
    }

    #[test]
    fn base_cases() {
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(count_induced_c4_enum(&c4, DEFAULT_SUBSET_CAP).unwrap().value, 1);
        assert_eq!(count_induced_c4_diagonal(&c4).value, 1);
        assert_eq!(diagonal_raw_sum(&c4), 2);
        let t = theta_222();
        assert_eq!(count_induced_c4_enum(&t, DEFAULT_SUBSET_CAP).unwrap().value, 3);
        assert_eq!(count_induced_c4_diagonal(&t).value, 3);
        assert_eq!(count_induced_c4_diagonal(&Graph::complete(4)).value, 0);
    }

    #[test]
    fn tiny_graphs_count_zero() {
        for n in 0..4 {
            assert_eq!(count_induced_c4_enum(&Graph::complete(n), 10).unwrap().value, 0);
            assert_eq!(count_induced_c4_diagonal(&Graph::empty(n)).value, 0);
        }
    }

    #[test]
    fn complete_and_empty_graphs() {
        for n in 0..=16 {
            for g in [Graph::complete(n), Graph::empty(n)] {
                assert_eq!(count_both_and_check(&g, DEFAULT_SUBSET_CAP).unwrap().value, 0);
            }
        }
    }

    #[test]
    fn removing_a_cycle_edge_kills_the_cycle() {
        let c4 = cycle_graph(4).unwrap();
        for skip in 0..4 {
            let edges = c4.edges().enumerate().filter(|(i, _)| *i != skip).map(|(_, e)| e);
            let g = Graph::from_edges(4, edges).unwrap();
            assert_eq!(count_both_and_check(&g, DEFAULT_SUBSET_CAP).unwrap().value, 0);
        }
    }

    #[test]
    fn word_sliced_enumeration_matches_scalar_loop() {
        // Orders around the 64-bit word boundary exercise the masks.
        for (i, n) in [5, 9, 13, 63, 64, 65, 70].into_iter().enumerate() {
            let g = random_graph(n, 0.5, i as u64);
            let expected = naive(&g);
            assert_eq!(count_induced_c4_enum(&g, DEFAULT_SUBSET_CAP).unwrap().value, expected, "n={n}");
            assert_eq!(count_induced_c4_diagonal(&g).value, expected, "n={n}");
        }
    }

    #[test]
    fn c4_level_one_matches_scalar_loop() {
        let g = nested_blowup(&BlowupSpec::new(BaseGraph::C4, 1).unwrap(), 1 << 10).unwrap();
        assert_eq!(naive(&g), 404);
        assert_eq!(count_both_and_check(&g, DEFAULT_SUBSET_CAP).unwrap().value, 404);
    }

    #[test]
    fn subset_cap_refuses() {
        let g = Graph::complete(16);
        assert_eq!(four_subsets(16), 1820);
        assert_eq!(
            count_induced_c4_enum(&g, 1819),
            Err(CountError::SubsetCapExceeded { subsets: 1820, cap: 1819 })
        );
        assert!(count_induced_c4_enum(&g, 1820).is_ok());
    }

    #[test]
    fn four_subsets_is_binomial() {
        assert_eq!(four_subsets(3), 0);
        assert_eq!(four_subsets(4), 1);
        assert_eq!(four_subsets(64), 635_376);
        assert_eq!(four_subsets(256), 174_792_640);
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let g = random_graph(40, 0.4, 99);
        let one = with_workers(1, || count_both_and_check(&g, DEFAULT_SUBSET_CAP).unwrap().value);
        let four = with_workers(4, || count_both_and_check(&g, DEFAULT_SUBSET_CAP).unwrap().value);
        assert_eq!(one, four);
    }

    #[test]
    fn raw_diagonal_sum_is_even() {
        for seed in 0..200 {
            let g = random_graph(3 + (seed as usize % 20), (seed % 9 + 1) as f64 / 10.0, seed);
            assert_eq!(diagonal_raw_sum(&g) % 2, 0);
        }
    }
}
