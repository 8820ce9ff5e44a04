//! Named graph families and the two surgeries (merge, stretch) with
//! closed-form effects on connected-subgraph counts.
//!
//! Families build with fixed, documented labelings so generated output is
//! byte-stable. The surgery constructors don't just build their result: they
//! assert the exact counting identities that describe how the surgery moves
//! `eta` and its complement, so every call is a machine check of those
//! identities on a fresh instance.

use crate::eta::{eta_extension_with_limit, eta_rooted};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use std::fmt;
use std::str::FromStr;

// ============================================================================
// errors
// ============================================================================

/// Errors from family construction and surgeries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    /// The textual family form could not be parsed.
    Parse(String),
    /// A parameter is outside its family's valid range.
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
    /// A surgery needs connected input graphs.
    DisconnectedInput,
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::Parse(msg) => write!(f, "bad family spec: {msg}"),
            FamilyError::InvalidParameter { family, reason } => {
                write!(f, "invalid {family} parameters: {reason}")
            }
            FamilyError::DisconnectedInput => write!(f, "input graph must be connected"),
        }
    }
}

impl std::error::Error for FamilyError {}

// ============================================================================
// FamilySpec
// ============================================================================

/// A named graph family instance.
///
/// Textual forms (used by the CLI): `star:7`, `complete:5`, `path:4`,
/// `cycle:6`, `double_star:2,3` (t, then s), `r:6,2` (order, pendant count),
/// `u:8` (order).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Star of order `n`: one center adjacent to `n - 1` leaves.
    Star { n: usize },
    /// Complete graph of order `n`.
    Complete { n: usize },
    /// Path on `n` vertices (`n = 1` gives a single vertex).
    Path { n: usize },
    /// Cycle on `n >= 3` vertices.
    Cycle { n: usize },
    /// Double star of order `t + s + 2`: two adjacent centers, one carrying
    /// `s` leaves, the other `t`. Degree sequence `(s+1, t+1, 1, ..., 1)`.
    DoubleStar { t: usize, s: usize },
    /// Complete graph on `n - k` vertices with `k` pendant vertices attached
    /// to one clique vertex; requires `n > 4` and `1 <= k < n - 2`.
    RGraph { n: usize, k: usize },
    /// Triangle sharing one vertex with the center of a star on `n - 2`
    /// vertices, i.e. a triangle vertex carrying `n - 3` pendant leaves;
    /// requires `n >= 4`.
    UGraph { n: usize },
}

impl FamilySpec {
    fn check(cond: bool, family: &'static str, reason: &str) -> Result<(), FamilyError> {
        if cond {
            Ok(())
        } else {
            Err(FamilyError::InvalidParameter {
                family,
                reason: reason.to_string(),
            })
        }
    }

    /// Builds the labeled instance of the family.
    ///
    /// Labelings are deterministic: centers/clique vertices first, then
    /// leaves in ascending order. See each variant's documentation.
    pub fn build(self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Star { n } => {
                Self::check((1..=MAX_VERTICES).contains(&n), "star", "need 1 <= n <= 32")?;
                let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
                Ok(Graph::from_edges(n, &edges))
            }
            FamilySpec::Complete { n } => {
                Self::check((1..=MAX_VERTICES).contains(&n), "complete", "need 1 <= n <= 32")?;
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in (u + 1)..n {
                        edges.push((u, v));
                    }
                }
                Ok(Graph::from_edges(n, &edges))
            }
            FamilySpec::Path { n } => {
                Self::check((1..=MAX_VERTICES).contains(&n), "path", "need 1 <= n <= 32")?;
                let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                Ok(Graph::from_edges(n, &edges))
            }
            FamilySpec::Cycle { n } => {
                Self::check((3..=MAX_VERTICES).contains(&n), "cycle", "need 3 <= n <= 32")?;
                let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
                edges.push((n - 1, 0));
                Ok(Graph::from_edges(n, &edges))
            }
            FamilySpec::DoubleStar { t, s } => {
                let n = t + s + 2;
                Self::check(
                    t >= 1 && s >= 1 && n <= MAX_VERTICES,
                    "double_star",
                    "need t >= 1, s >= 1, t + s + 2 <= 32",
                )?;
                // centers 0 (s leaves: 2..=s+1) and 1 (t leaves: s+2..=s+t+1)
                let mut edges = vec![(0, 1)];
                for leaf in 2..(s + 2) {
                    edges.push((0, leaf));
                }
                for leaf in (s + 2)..n {
                    edges.push((1, leaf));
                }
                Ok(Graph::from_edges(n, &edges))
            }
            FamilySpec::RGraph { n, k } => {
                Self::check(
                    n > 4 && n <= MAX_VERTICES && k >= 1 && k < n - 2,
                    "r",
                    "need 4 < n <= 32 and 1 <= k < n - 2",
                )?;
                // clique 0..n-k-1, pendants n-k..n-1 on clique vertex 0
                let clique = n - k;
                let mut edges = Vec::new();
                for u in 0..clique {
                    for v in (u + 1)..clique {
                        edges.push((u, v));
                    }
                }
                for p in clique..n {
                    edges.push((0, p));
                }
                Ok(Graph::from_edges(n, &edges))
            }
            FamilySpec::UGraph { n } => {
                Self::check((4..=MAX_VERTICES).contains(&n), "u", "need 4 <= n <= 32")?;
                // triangle 0,1,2; leaves 3..n-1 on vertex 0
                let mut edges = vec![(0, 1), (0, 2), (1, 2)];
                for leaf in 3..n {
                    edges.push((0, leaf));
                }
                Ok(Graph::from_edges(n, &edges))
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Star { n } => write!(f, "star:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::DoubleStar { t, s } => write!(f, "double_star:{t},{s}"),
            FamilySpec::RGraph { n, k } => write!(f, "r:{n},{k}"),
            FamilySpec::UGraph { n } => write!(f, "u:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<FamilySpec, FamilyError> {
        let (tag, params) = match text.split_once(':') {
            Some((tag, params)) => (tag, params),
            None => {
                return Err(FamilyError::Parse(format!(
                    "'{text}' has no parameters; expected e.g. 'star:7'"
                )))
            }
        };
        let nums: Result<Vec<usize>, _> = params.split(',').map(|p| p.trim().parse()).collect();
        let nums = nums.map_err(|_| {
            FamilyError::Parse(format!("'{params}' is not a comma-separated integer list"))
        })?;
        let arity = |want: usize| -> Result<(), FamilyError> {
            if nums.len() == want {
                Ok(())
            } else {
                Err(FamilyError::Parse(format!(
                    "family '{tag}' takes {want} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        match tag {
            "star" => {
                arity(1)?;
                Ok(FamilySpec::Star { n: nums[0] })
            }
            "complete" => {
                arity(1)?;
                Ok(FamilySpec::Complete { n: nums[0] })
            }
            "path" => {
                arity(1)?;
                Ok(FamilySpec::Path { n: nums[0] })
            }
            "cycle" => {
                arity(1)?;
                Ok(FamilySpec::Cycle { n: nums[0] })
            }
            "double_star" => {
                arity(2)?;
                Ok(FamilySpec::DoubleStar {
                    t: nums[0],
                    s: nums[1],
                })
            }
            "r" => {
                arity(2)?;
                Ok(FamilySpec::RGraph {
                    n: nums[0],
                    k: nums[1],
                })
            }
            "u" => {
                arity(1)?;
                Ok(FamilySpec::UGraph { n: nums[0] })
            }
            other => Err(FamilyError::Parse(format!(
                "unknown family '{other}' (expected star, complete, path, cycle, double_star, r, or u)"
            ))),
        }
    }
}

// ============================================================================
// surgeries
// ============================================================================

fn eta_of(g: &Graph) -> u64 {
    eta_extension_with_limit(g, MAX_VERTICES)
        .expect("order is bounded by the construction")
        .total()
}

/// Merges vertex `u` of `g` with vertex `v` of `h` and appends one isolated
/// vertex, producing a graph of order `|g| + |h|`.
///
/// Labeling: `g`'s vertices keep their labels (the merged vertex is `u`);
/// `h`'s remaining vertices follow in ascending order of their original
/// labels; the isolated vertex is last.
///
/// Two exact identities are asserted on every call. With `B` the merged graph
/// and `B + K1` the result:
///
/// * `eta(B + K1) = eta(g) + eta(h) + (eta_rooted(g, u) - 1) * (eta_rooted(h, v) - 1)` —
///   a connected subgraph of `B` lives in `g`'s side, `h`'s side, or crosses
///   through the merged vertex;
/// * `eta(complement(B + K1)) = eta(complement(g ∪ h)) - (2^deg_g(u) - 1) * (2^deg_h(v) - 1)`.
pub fn merge_with_k1(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Graph, FamilyError> {
    assert!(u < g.n() && v < h.n(), "merge vertices out of range");
    if !g.is_connected_graph() || !h.is_connected_graph() {
        return Err(FamilyError::DisconnectedInput);
    }
    let gn = g.n();
    let hn = h.n();
    let n = gn + hn;
    assert!(n <= MAX_VERTICES, "merged order {n} exceeds {MAX_VERTICES}");

    // map h's vertices into the result: v joins u, the rest follow g's block
    let mut map = [0usize; MAX_VERTICES];
    let mut next = gn;
    for (w, slot) in map.iter_mut().enumerate().take(hn) {
        if w == v {
            *slot = u;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = g.edges();
    for (a, b) in h.edges() {
        edges.push((map[a], map[b]));
    }
    let merged = Graph::from_edges(n, &edges); // vertex n-1 is the isolated K1

    let eta_merged = eta_of(&merged);
    let eta_g = eta_of(g);
    let eta_h = eta_of(h);
    let rooted_u = eta_rooted(g, VertexSet::single(u)).expect("nonempty roots");
    let rooted_v = eta_rooted(h, VertexSet::single(v)).expect("nonempty roots");
    assert_eq!(
        eta_merged,
        eta_g + eta_h + (rooted_u - 1) * (rooted_v - 1),
        "merge identity violated for eta"
    );

    let eta_merged_bar = eta_of(&merged.complement());
    let eta_union_bar = eta_of(&g.disjoint_union(h).complement());
    let du = g.degree(u) as u32;
    let dv = h.degree(v) as u32;
    assert_eq!(
        eta_merged_bar,
        eta_union_bar - ((1u64 << du) - 1) * ((1u64 << dv) - 1),
        "merge identity violated for the complement"
    );

    Ok(merged)
}

/// Builds the two ways of attaching a star with `k + 1` edges to vertex `v`
/// of connected `g`, both of order `n = |g| + k + 1`:
///
/// * `H`: a new vertex `c` adjacent to `v`, with `k` further leaves on `c`
///   (the star is glued by one of its leaves);
/// * `K`: `k + 1` new leaves directly on `v` (the star is glued by its
///   center).
///
/// Labeling: `g` keeps its labels; in `H`, `c` is vertex `|g|` and the leaves
/// are `|g|+1 ..= |g|+k`; in `K` the new leaves are `|g| ..= |g|+k`.
///
/// Asserted on every call, with `r = deg(v in complement(g))`:
///
/// * `eta(K) - eta(H) = (2^k - 1) * (eta_rooted(g, v) - 1)`;
/// * `2^r * (eta(complement(K)) - eta(complement(H))) = 2^(r+1) * (2^k - 1) + 2^(n-k-1) - 2^(n-1)`
///   (the power-of-two form keeps everything in integers; `r <= n - k - 2`
///   makes the underlying division exact);
/// * when `r >= 2`, the combined move is strictly up:
///   `eta(K) + eta(complement(K)) > eta(H) + eta(complement(H))`.
pub fn stretch_pair(g: &Graph, v: usize, k: usize) -> Result<(Graph, Graph), FamilyError> {
    assert!(v < g.n(), "stretch vertex out of range");
    if !g.is_connected_graph() {
        return Err(FamilyError::DisconnectedInput);
    }
    if k < 1 {
        return Err(FamilyError::InvalidParameter {
            family: "stretch",
            reason: "need k >= 1".to_string(),
        });
    }
    let gn = g.n();
    let n = gn + k + 1;
    if n > MAX_VERTICES {
        return Err(FamilyError::InvalidParameter {
            family: "stretch",
            reason: format!("stretched order {n} exceeds {MAX_VERTICES}"),
        });
    }

    let mut h_edges = g.edges();
    let c = gn;
    h_edges.push((v, c));
    for leaf in (gn + 1)..n {
        h_edges.push((c, leaf));
    }
    let h = Graph::from_edges(n, &h_edges);

    let mut k_edges = g.edges();
    for leaf in gn..n {
        k_edges.push((v, leaf));
    }
    let kg = Graph::from_edges(n, &k_edges);

    let eta_h = eta_of(&h);
    let eta_k = eta_of(&kg);
    let rooted_v = eta_rooted(g, VertexSet::single(v)).expect("nonempty roots");
    assert_eq!(
        eta_k - eta_h,
        ((1u64 << k) - 1) * (rooted_v - 1),
        "stretch identity violated for eta"
    );

    let eta_h_bar = eta_of(&h.complement());
    let eta_k_bar = eta_of(&kg.complement());
    let r = (gn - 1) - g.degree(v);
    debug_assert!(r <= n - k - 2, "complement degree bound");
    debug_assert!(
        ((1i128 << (n - k - 1)) - (1i128 << (n - 1))) % (1i128 << r) == 0,
        "power-of-two division must be exact"
    );
    let lhs = (1i128 << r) * (eta_k_bar as i128 - eta_h_bar as i128);
    let rhs = (1i128 << (r + 1)) * ((1i128 << k) - 1) + (1i128 << (n - k - 1)) - (1i128 << (n - 1));
    assert_eq!(lhs, rhs, "stretch identity violated for the complement");

    if r >= 2 {
        assert!(
            eta_k + eta_k_bar > eta_h + eta_h_bar,
            "stretch must strictly increase the complement sum when r >= 2"
        );
    }

    Ok((h, kg))
}

// ============================================================================
// tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eta::{eta_subset_scan, ng_report};

    fn degrees_sorted(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for text in [
            "star:7",
            "complete:5",
            "path:1",
            "cycle:6",
            "double_star:2,3",
            "r:6,2",
            "u:8",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            spec.build().unwrap();
        }
    }

    #[test]
    fn parse_rejects_malformed_specs() {
        assert!(matches!(
            "star".parse::<FamilySpec>(),
            Err(FamilyError::Parse(_))
        ));
        assert!(matches!(
            "frob:3".parse::<FamilySpec>(),
            Err(FamilyError::Parse(_))
        ));
        assert!(matches!(
            "double_star:2".parse::<FamilySpec>(),
            Err(FamilyError::Parse(_))
        ));
        assert!(matches!(
            "r:6,2,1".parse::<FamilySpec>(),
            Err(FamilyError::Parse(_))
        ));
        assert!(matches!(
            "star:x".parse::<FamilySpec>(),
            Err(FamilyError::Parse(_))
        ));
    }

    #[test]
    fn build_validates_parameter_ranges() {
        assert!(FamilySpec::Cycle { n: 2 }.build().is_err());
        assert!(FamilySpec::RGraph { n: 4, k: 1 }.build().is_err());
        assert!(FamilySpec::RGraph { n: 6, k: 4 }.build().is_err());
        assert!(FamilySpec::UGraph { n: 3 }.build().is_err());
        assert!(FamilySpec::DoubleStar { t: 0, s: 3 }.build().is_err());
        assert!(FamilySpec::Star { n: 0 }.build().is_err());
    }

    #[test]
    fn double_star_shape() {
        let g = FamilySpec::DoubleStar { t: 1, s: 2 }.build().unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(degrees_sorted(&g), vec![3, 2, 1, 1, 1]);
        assert_eq!(eta_subset_scan(&g).unwrap().total(), 17);
        assert_eq!(ng_report(&g).unwrap().sum, 39);
    }

    #[test]
    fn r_graph_shape() {
        let g = FamilySpec::RGraph { n: 6, k: 2 }.build().unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6 + 2);
        assert_eq!(degrees_sorted(&g), vec![5, 3, 3, 3, 1, 1]);
        assert!(g.is_p4_free());
    }

    #[test]
    fn u_graph_shape() {
        let u4 = FamilySpec::UGraph { n: 4 }.build().unwrap();
        assert_eq!(degrees_sorted(&u4), vec![3, 2, 2, 1]);
        let u8 = FamilySpec::UGraph { n: 8 }.build().unwrap();
        assert_eq!(u8.edge_count(), 3 + 5);
        assert!(u8.is_p4_free());
        // exactly one cycle
        assert_eq!(u8.edge_count(), u8.n());
        assert!(u8.is_connected_graph());
    }

    #[test]
    fn p4_free_families_hit_the_lower_bound_sum() {
        let mut specs = vec![FamilySpec::Star { n: 7 }];
        specs.push(FamilySpec::RGraph { n: 7, k: 3 });
        specs.push(FamilySpec::UGraph { n: 7 });
        for spec in specs {
            let g = spec.build().unwrap();
            let n = g.n() as u64;
            assert!(g.is_p4_free(), "{spec}");
            assert_eq!(ng_report(&g).unwrap().sum, (1 << n) + n - 1, "{spec}");
        }
    }

    #[test]
    fn double_star_sum_closed_form() {
        for n in 4..=12usize {
            for t in 1..=((n - 2) / 2) {
                let s = n - 2 - t;
                let g = FamilySpec::DoubleStar { t, s }.build().unwrap();
                let want =
                    (1u64 << n) + (1u64 << (n - 2)) - (1u64 << t) - (1u64 << s) + n as u64;
                assert_eq!(ng_report(&g).unwrap().sum, want, "n={n} t={t} s={s}");
            }
        }
    }

    #[test]
    fn merge_two_edges_gives_path_plus_isolated() {
        let k2 = FamilySpec::Complete { n: 2 }.build().unwrap();
        let merged = merge_with_k1(&k2, 0, &k2, 0).unwrap();
        assert_eq!(merged.n(), 4);
        assert_eq!(eta_subset_scan(&merged).unwrap().total(), 7);
        assert_eq!(
            eta_subset_scan(&merged.complement()).unwrap().total(),
            12,
            "one less than eta(C4)"
        );
        // vertex 3 is the appended isolated vertex
        assert_eq!(merged.degree(3), 0);
    }

    #[test]
    fn merge_rejects_disconnected_input() {
        let k2 = FamilySpec::Complete { n: 2 }.build().unwrap();
        let e2 = Graph::empty(2);
        assert_eq!(
            merge_with_k1(&e2, 0, &k2, 0),
            Err(FamilyError::DisconnectedInput)
        );
        assert_eq!(
            merge_with_k1(&k2, 1, &e2, 1),
            Err(FamilyError::DisconnectedInput)
        );
    }

    #[test]
    fn merge_with_singleton_matches_union_count() {
        // order-1 side: merged graph = h plus one isolated vertex, so
        // eta(merged) = eta(h) + 1 = eta(K1 ∪ h)
        let k1 = Graph::empty(1);
        let h = FamilySpec::Cycle { n: 5 }.build().unwrap();
        let merged = merge_with_k1(&k1, 0, &h, 2).unwrap();
        let union = k1.disjoint_union(&h);
        assert_eq!(
            eta_subset_scan(&merged).unwrap().total(),
            eta_subset_scan(&union).unwrap().total()
        );
    }

    #[test]
    fn stretch_k2_gives_path_and_star() {
        let k2 = FamilySpec::Complete { n: 2 }.build().unwrap();
        let (h, k) = stretch_pair(&k2, 0, 1).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(eta_subset_scan(&h).unwrap().total(), 10, "H is a path");
        assert_eq!(eta_subset_scan(&k).unwrap().total(), 11, "K is a star");
        assert_eq!(degrees_sorted(&k), vec![3, 1, 1, 1]);
    }

    #[test]
    fn stretch_with_large_complement_degree_increases_sum() {
        // endpoint of P4: degree 1 of 3 possible, so r = 2
        let p4 = FamilySpec::Path { n: 4 }.build().unwrap();
        let (h, k) = stretch_pair(&p4, 0, 2).unwrap();
        let sum = |g: &Graph| {
            eta_subset_scan(g).unwrap().total()
                + eta_subset_scan(&g.complement()).unwrap().total()
        };
        assert!(sum(&k) > sum(&h));
    }

    #[test]
    fn stretch_rejects_bad_input() {
        let k2 = FamilySpec::Complete { n: 2 }.build().unwrap();
        assert_eq!(
            stretch_pair(&Graph::empty(3), 0, 1),
            Err(FamilyError::DisconnectedInput)
        );
        assert!(matches!(
            stretch_pair(&k2, 0, 0),
            Err(FamilyError::InvalidParameter { .. })
        ));
    }

    #[test]
    fn union_sum_identity_on_named_pairs() {
        let pairs = [
            (FamilySpec::Path { n: 4 }, FamilySpec::Cycle { n: 5 }),
            (FamilySpec::Star { n: 6 }, FamilySpec::Complete { n: 3 }),
            (FamilySpec::DoubleStar { t: 1, s: 2 }, FamilySpec::Path { n: 3 }),
        ];
        for (a, b) in pairs {
            let (ga, gb) = (a.build().unwrap(), b.build().unwrap());
            let union_sum = ng_report(&ga.disjoint_union(&gb)).unwrap().sum;
            let expect = ng_report(&ga).unwrap().sum
                + ng_report(&gb).unwrap().sum
                + ((1u64 << ga.n()) - 1) * ((1u64 << gb.n()) - 1);
            assert_eq!(union_sum, expect, "{a} + {b}");
        }
    }
}
