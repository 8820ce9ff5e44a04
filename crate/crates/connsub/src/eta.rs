//! Counting connected induced subgraphs.
//!
//! The central quantity is `eta(G)`: the number of nonempty vertex subsets
//! that induce a connected subgraph. This module computes it three independent
//! ways (full subset scan, extension enumeration, tree DP), together with the
//! per-size profile, rooted counts, the complement-sum record
//! [`NgReport`], and the two-sided subset counters [`s_count`] / [`r_count`].
//! The redundant algorithms exist to cross-validate each other; tests hold
//! them to exact agreement.

use crate::graph::{Graph, VertexSet};
use std::fmt;

/// Default cap for full-subset sweeps: 2^26 connectivity checks is the upper
/// end of what finishes interactively.
pub const SCAN_LIMIT: usize = 26;

// ============================================================================
// errors
// ============================================================================

/// Errors raised by counting operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EtaError {
    /// A full-subset sweep was requested above the configured limit.
    OrderAboveLimit { n: usize, limit: usize },
    /// The tree DP was handed a graph that is not a tree.
    NotATree,
    /// A rooted count needs at least one root.
    EmptyRoots,
    /// The two-sided counters need both sides nonempty.
    EmptySide,
    /// The two-sided counters need disjoint sides.
    OverlappingSides,
}

impl fmt::Display for EtaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EtaError::OrderAboveLimit { n, limit } => {
                write!(f, "order {n} exceeds the subset-scan limit {limit}")
            }
            EtaError::NotATree => write!(f, "graph is not a tree"),
            EtaError::EmptyRoots => write!(f, "root set must be nonempty"),
            EtaError::EmptySide => write!(f, "both sides must be nonempty"),
            EtaError::OverlappingSides => write!(f, "sides must be disjoint"),
        }
    }
}

impl std::error::Error for EtaError {}

// ============================================================================
// EtaProfile
// ============================================================================

/// Connected-induced-subgraph counts broken down by size.
///
/// `counts[k-1]` is the number of connected induced subgraphs on exactly `k`
/// vertices; `total` is their sum, i.e. `eta(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaProfile {
    counts: Vec<u64>,
    total: u64,
}

impl EtaProfile {
    fn new(counts: Vec<u64>) -> EtaProfile {
        let total = counts.iter().sum();
        let p = EtaProfile { counts, total };
        p.debug_check();
        p
    }

    fn debug_check(&self) {
        let n = self.counts.len() as u64;
        debug_assert!(n >= 1);
        debug_assert_eq!(self.counts[0], n, "every singleton is connected");
        debug_assert!(self.counts[self.counts.len() - 1] <= 1);
        debug_assert!(n >= 64 || self.total < (1u64 << n));
    }

    /// Order of the underlying graph.
    pub fn order(&self) -> usize {
        self.counts.len()
    }

    /// Count of connected induced subgraphs on exactly `k` vertices,
    /// `1 <= k <= n` (zero outside that range).
    pub fn count_of_size(&self, k: usize) -> u64 {
        if k >= 1 && k <= self.counts.len() {
            self.counts[k - 1]
        } else {
            0
        }
    }

    /// Per-size counts, index `k-1` for size `k`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Total number of connected induced subgraphs, `eta(G)`.
    pub fn total(&self) -> u64 {
        self.total
    }
}

// ============================================================================
// NgReport
// ============================================================================

/// The complement-sum record for one graph: `eta(G)`, `eta(complement(G))`,
/// their sum, and the number of vertex sets of size at least 2 that are
/// connected in both `G` and its complement.
///
/// These quantities are tied together by an exact identity — every vertex set
/// is either a singleton, disconnected in one of the two graphs, or counted by
/// `ng_set_size` — giving `sum = 2^n - 1 + n + ng_set_size`. [`ng_report`]
/// asserts it on every call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NgReport {
    pub eta_g: u64,
    pub eta_gbar: u64,
    pub sum: u64,
    pub ng_set_size: u64,
}

// ============================================================================
// eta by full subset scan
// ============================================================================

/// Per-size connected-subgraph counts by sweeping all `2^n - 1` nonempty
/// subsets with a flood-fill connectivity check each. Exact and simple; the
/// reference the other algorithms are measured against.
pub fn eta_subset_scan(g: &Graph) -> Result<EtaProfile, EtaError> {
    eta_subset_scan_with_limit(g, SCAN_LIMIT)
}

/// [`eta_subset_scan`] with an explicit order cap.
pub fn eta_subset_scan_with_limit(g: &Graph, limit: usize) -> Result<EtaProfile, EtaError> {
    let n = g.n();
    if n > limit {
        return Err(EtaError::OrderAboveLimit { n, limit });
    }
    let mut counts = vec![0u64; n];
    let top: u64 = 1u64 << n;
    for mask in 1..top {
        let mask = mask as u32;
        if g.connected_mask(mask) {
            counts[mask.count_ones() as usize - 1] += 1;
        }
    }
    Ok(EtaProfile::new(counts))
}

// ============================================================================
// eta by extension enumeration
// ============================================================================

/// Per-size connected-subgraph counts by direct enumeration: for each vertex
/// `r` in ascending order, every connected set whose minimum vertex is `r` is
/// generated exactly once by growing through neighbors above `r`. Independent
/// of [`eta_subset_scan`]; the two must agree bit for bit.
pub fn eta_extension(g: &Graph) -> Result<EtaProfile, EtaError> {
    eta_extension_with_limit(g, SCAN_LIMIT)
}

/// [`eta_extension`] with an explicit order cap.
pub fn eta_extension_with_limit(g: &Graph, limit: usize) -> Result<EtaProfile, EtaError> {
    let n = g.n();
    if n > limit {
        return Err(EtaError::OrderAboveLimit { n, limit });
    }
    let mut counts = vec![0u64; n];

    // Binary branching on the lowest frontier vertex: include it in the set
    // or ban it from the whole subtree. Every connected superset of `set`
    // reachable through `frontier` is produced at exactly one include step.
    fn grow(
        g: &Graph,
        allowed: u32,
        set: u32,
        frontier: u32,
        banned: u32,
        size: usize,
        counts: &mut [u64],
    ) {
        if frontier == 0 {
            return;
        }
        let v = frontier.trailing_zeros() as usize;
        let vbit = 1u32 << v;
        // include v
        let new_set = set | vbit;
        let new_frontier =
            (frontier & !vbit) | (g.neighbors(v).bits() & allowed & !new_set & !banned);
        counts[size] += 1;
        grow(g, allowed, new_set, new_frontier, banned, size + 1, counts);
        // ban v
        grow(g, allowed, set, frontier & !vbit, banned | vbit, size, counts);
    }

    let full = g.full_set().bits();
    for r in 0..n {
        let rbit = 1u32 << r;
        // vertices strictly above r
        let allowed = full & !(rbit | (rbit - 1));
        counts[0] += 1;
        let frontier = g.neighbors(r).bits() & allowed;
        grow(g, allowed, rbit, frontier, 0, 1, &mut counts);
    }
    Ok(EtaProfile::new(counts))
}

// ============================================================================
// eta on trees
// ============================================================================

/// `eta` of a tree in linear time: root anywhere, let
/// `f(v) = prod over children c of (1 + f(c))` count the subtrees containing
/// `v` within `v`'s branch, and sum `f(v)` over all `v`. Each connected
/// subgraph is counted once at its vertex nearest the root.
pub fn eta_tree_dp(t: &Graph) -> Result<u64, EtaError> {
    let n = t.n();
    if t.edge_count() != n - 1 || !t.is_connected_graph() {
        return Err(EtaError::NotATree);
    }
    // BFS order from vertex 0, tracking parents
    let mut order = Vec::with_capacity(n);
    let mut parent = [usize::MAX; crate::graph::MAX_VERTICES];
    let mut seen = 1u32;
    order.push(0usize);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let mut rest = t.neighbors(v).bits() & !seen;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            seen |= 1 << u;
            parent[u] = v;
            order.push(u);
        }
    }
    debug_assert_eq!(order.len(), n);

    let mut f = [1u64; crate::graph::MAX_VERTICES];
    for &v in order.iter().rev() {
        if v != 0 {
            f[parent[v]] *= 1 + f[v];
        }
    }
    Ok(f[..n].iter().sum())
}

// ============================================================================
// rooted counts
// ============================================================================

/// Number of connected induced subgraphs containing every vertex of `roots`,
/// by scanning all supersets of `roots`.
pub fn eta_rooted(g: &Graph, roots: VertexSet) -> Result<u64, EtaError> {
    if roots.is_empty() {
        return Err(EtaError::EmptyRoots);
    }
    debug_assert!(roots.is_subset_of(g.full_set()));
    let base = roots.bits();
    let free = g.full_set().bits() & !base;
    let free_count = free.count_ones();
    let mut count = 0u64;
    // enumerate all subsets of `free` by walking its bits positionally
    let free_bits: Vec<u32> = {
        let mut v = Vec::with_capacity(free_count as usize);
        let mut rest = free;
        while rest != 0 {
            v.push(rest & rest.wrapping_neg());
            rest &= rest - 1;
        }
        v
    };
    for choice in 0u64..1u64 << free_count {
        let mut mask = base;
        let mut c = choice;
        let mut i = 0;
        while c != 0 {
            if c & 1 != 0 {
                mask |= free_bits[i];
            }
            c >>= 1;
            i += 1;
        }
        if g.connected_mask(mask) {
            count += 1;
        }
    }
    Ok(count)
}

// ============================================================================
// complement-sum record
// ============================================================================

/// Computes `eta(G)`, `eta(complement(G))`, and the size of the set of vertex
/// subsets (of size > 1) connected in both, in a single joint sweep, then
/// asserts the identity `sum = 2^n - 1 + n + ng_set_size`.
pub fn ng_report(g: &Graph) -> Result<NgReport, EtaError> {
    ng_report_with_limit(g, SCAN_LIMIT)
}

/// [`ng_report`] with an explicit order cap.
pub fn ng_report_with_limit(g: &Graph, limit: usize) -> Result<NgReport, EtaError> {
    let n = g.n();
    if n > limit {
        return Err(EtaError::OrderAboveLimit { n, limit });
    }
    let gbar = g.complement();
    let mut eta_g = 0u64;
    let mut eta_gbar = 0u64;
    let mut ng_set_size = 0u64;
    let top: u64 = 1u64 << n;
    for mask in 1..top {
        let mask = mask as u32;
        let cg = g.connected_mask(mask);
        let cb = gbar.connected_mask(mask);
        eta_g += cg as u64;
        eta_gbar += cb as u64;
        ng_set_size += (cg && cb && mask.count_ones() > 1) as u64;
    }
    let report = NgReport {
        eta_g,
        eta_gbar,
        sum: eta_g + eta_gbar,
        ng_set_size,
    };
    // Every nonempty subset is a singleton (connected in both, counted twice),
    // connected in exactly one graph, connected in both (size > 1), or
    // connected in neither; a size > 1 set disconnected in G is connected in
    // the complement, so "neither" is empty. Totalling gives the identity.
    assert_eq!(
        report.sum,
        (1u64 << n) - 1 + n as u64 + report.ng_set_size,
        "complement-sum identity violated; counting bug"
    );
    Ok(report)
}

// ============================================================================
// two-sided subset counters
// ============================================================================

fn check_sides(g: &Graph, x: VertexSet, y: VertexSet) -> Result<(), EtaError> {
    if x.is_empty() || y.is_empty() {
        return Err(EtaError::EmptySide);
    }
    if !x.intersection(y).is_empty() {
        return Err(EtaError::OverlappingSides);
    }
    debug_assert!(x.union(y).is_subset_of(g.full_set()));
    Ok(())
}

/// Number of sets `Z` inside `x ∪ y`, meeting both `x` and `y`, such that
/// `{apex} ∪ Z` is connected in the auxiliary graph formed by the subgraph
/// induced on `x ∪ y` plus a new apex vertex adjacent to all of `x`.
///
/// Always at most [`r_count`] on the same arguments: a path from a `y` vertex
/// to the apex must cross an `x`–`y` edge.
pub fn s_count(g: &Graph, x: VertexSet, y: VertexSet) -> Result<u64, EtaError> {
    check_sides(g, x, y)?;
    let ground: Vec<usize> = x.union(y).iter().collect();
    let t = ground.len();

    // auxiliary graph: induced subgraph on x ∪ y, apex vertex t adjacent to
    // the images of x
    let mut aux = g.induced(x.union(y)).disjoint_union(&Graph::empty(1));
    let mut x_img = VertexSet::EMPTY;
    let mut y_img = VertexSet::EMPTY;
    for (i, &v) in ground.iter().enumerate() {
        if x.contains(v) {
            aux = aux.with_edge(i, t);
            x_img = x_img.with(i);
        } else {
            y_img = y_img.with(i);
        }
    }

    let apex = 1u32 << t;
    let mut count = 0u64;
    for z in 1u32..1 << t {
        if z & x_img.bits() != 0
            && z & y_img.bits() != 0
            && aux.connected_mask(z | apex)
        {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of sets `Z` inside `x ∪ y`, meeting both `x` and `y`, whose induced
/// subgraph contains at least one edge between `Z ∩ x` and `Z ∩ y`.
///
/// Symmetric in `x` and `y`.
pub fn r_count(g: &Graph, x: VertexSet, y: VertexSet) -> Result<u64, EtaError> {
    check_sides(g, x, y)?;
    let ground: Vec<usize> = x.union(y).iter().collect();
    let t = ground.len();
    let mut count = 0u64;
    for z in 1u32..1 << t {
        let mut zx = 0u32; // members of z on the x side, in g's labeling
        let mut zy = 0u32;
        for (i, &v) in ground.iter().enumerate() {
            if z >> i & 1 != 0 {
                if x.contains(v) {
                    zx |= 1 << v;
                } else {
                    zy |= 1 << v;
                }
            }
        }
        if zx == 0 || zy == 0 {
            continue;
        }
        let mut rest = zx;
        let mut hit = false;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if g.neighbors(v).bits() & zy != 0 {
                hit = true;
                break;
            }
        }
        if hit {
            count += 1;
        }
    }
    Ok(count)
}

// ============================================================================
// tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges)
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn scan_on_small_named_graphs() {
        let p4 = eta_subset_scan(&path(4)).unwrap();
        assert_eq!(p4.counts(), &[4, 3, 2, 1]);
        assert_eq!(p4.total(), 10);

        let k5 = eta_subset_scan(&complete(5)).unwrap();
        assert_eq!(k5.total(), 31);
        assert_eq!(k5.counts(), &[5, 10, 10, 5, 1]);

        let s5 = eta_subset_scan(&star(5)).unwrap();
        assert_eq!(s5.total(), 20, "4 leaf singletons plus 2^4 center sets");

        let c5 = eta_subset_scan(&cycle(5)).unwrap();
        assert_eq!(c5.counts(), &[5, 5, 5, 5, 1]);
        assert_eq!(c5.total(), 21);
    }

    #[test]
    fn extension_matches_scan_on_all_small_graphs() {
        for n in 1..=5usize {
            let m = n * (n - 1) / 2;
            for mask in 0u64..1 << m {
                let g = Graph::from_upper_triangle(n, mask);
                assert_eq!(
                    eta_extension(&g).unwrap(),
                    eta_subset_scan(&g).unwrap(),
                    "n={n} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn extension_on_edgeless_graph_counts_singletons() {
        for n in 1..=8usize {
            let g = Graph::empty(n);
            assert_eq!(eta_extension(&g).unwrap().total(), n as u64);
        }
    }

    #[test]
    fn scan_limit_is_enforced() {
        let g = Graph::empty(27);
        assert_eq!(
            eta_subset_scan(&g),
            Err(EtaError::OrderAboveLimit { n: 27, limit: 26 })
        );
        assert_eq!(
            eta_extension(&g),
            Err(EtaError::OrderAboveLimit { n: 27, limit: 26 })
        );
        assert!(eta_subset_scan_with_limit(&Graph::empty(5), 4).is_err());
        assert!(ng_report_with_limit(&Graph::empty(5), 4).is_err());
    }

    #[test]
    fn tree_dp_matches_scan_on_paths_and_stars() {
        for n in 1..=10usize {
            let p = if n == 1 { Graph::empty(1) } else { path(n) };
            assert_eq!(
                eta_tree_dp(&p).unwrap(),
                eta_subset_scan(&p).unwrap().total()
            );
            let s = if n == 1 { Graph::empty(1) } else { star(n) };
            assert_eq!(
                eta_tree_dp(&s).unwrap(),
                (1u64 << (n - 1)) + n as u64 - 1,
                "star closed form"
            );
        }
        assert_eq!(eta_tree_dp(&Graph::empty(1)).unwrap(), 1);
    }

    #[test]
    fn tree_dp_rejects_non_trees() {
        assert_eq!(eta_tree_dp(&cycle(4)), Err(EtaError::NotATree));
        // triangle plus isolated vertex: n-1 edges but disconnected
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(eta_tree_dp(&g), Err(EtaError::NotATree));
        assert_eq!(eta_tree_dp(&Graph::empty(3)), Err(EtaError::NotATree));
    }

    #[test]
    fn rooted_counts() {
        // path a-m-b with m = vertex 1
        let p3 = path(3);
        assert_eq!(eta_rooted(&p3, VertexSet::single(1)).unwrap(), 4);
        assert_eq!(
            eta_rooted(&p3, VertexSet::from_vertices(&[0, 2])).unwrap(),
            1,
            "only the full path contains both endpoints"
        );
        // star on 4 vertices, rooted at a leaf
        assert_eq!(eta_rooted(&star(4), VertexSet::single(1)).unwrap(), 5);
        assert_eq!(
            eta_rooted(&p3, VertexSet::EMPTY),
            Err(EtaError::EmptyRoots)
        );
        // sum over singleton roots counts each subgraph once per vertex
        let g = cycle(5);
        let by_roots: u64 = (0..5)
            .map(|v| eta_rooted(&g, VertexSet::single(v)).unwrap())
            .sum();
        let by_sizes: u64 = eta_subset_scan(&g)
            .unwrap()
            .counts()
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64 + 1) * c)
            .sum();
        assert_eq!(by_roots, by_sizes);
    }

    #[test]
    fn ng_reports_on_named_graphs() {
        let p4 = ng_report(&path(4)).unwrap();
        assert_eq!(
            p4,
            NgReport {
                eta_g: 10,
                eta_gbar: 10,
                sum: 20,
                ng_set_size: 1
            }
        );

        let c4 = ng_report(&cycle(4)).unwrap();
        assert_eq!(c4.eta_g, 13);
        assert_eq!(c4.eta_gbar, 6, "complement of C4 is 2K2");
        assert_eq!(c4.sum, 19);
        assert_eq!(c4.ng_set_size, 0);

        let c5 = ng_report(&cycle(5)).unwrap();
        assert_eq!((c5.eta_g, c5.eta_gbar, c5.sum, c5.ng_set_size), (21, 21, 42, 6));

        for n in 2..=8usize {
            let s = ng_report(&star(n)).unwrap();
            assert_eq!(s.sum, (1u64 << n) + n as u64 - 1, "star sum closed form");
        }
    }

    #[test]
    fn two_sided_counters_on_p4() {
        let p4 = path(4);
        let (a, b, c, _d) = (0, 1, 2, 3);
        assert_eq!(
            s_count(&p4, VertexSet::single(b), VertexSet::single(c)).unwrap(),
            1
        );
        assert_eq!(
            r_count(&p4, VertexSet::single(b), VertexSet::single(c)).unwrap(),
            1
        );
        assert_eq!(
            s_count(&p4, VertexSet::single(a), VertexSet::single(c)).unwrap(),
            0
        );
        assert_eq!(
            r_count(&p4, VertexSet::single(a), VertexSet::single(c)).unwrap(),
            0
        );
    }

    #[test]
    fn two_sided_counters_on_complete_ground_set() {
        let k6 = complete(6);
        let x = VertexSet::from_vertices(&[0, 2]);
        let y = VertexSet::from_vertices(&[1, 3, 5]);
        let expect = (4 - 1) * (8 - 1);
        assert_eq!(s_count(&k6, x, y).unwrap(), expect);
        assert_eq!(r_count(&k6, x, y).unwrap(), expect);
    }

    #[test]
    fn two_sided_counters_validate_sides() {
        let g = path(4);
        assert_eq!(
            s_count(&g, VertexSet::EMPTY, VertexSet::single(0)),
            Err(EtaError::EmptySide)
        );
        assert_eq!(
            r_count(&g, VertexSet::single(0), VertexSet::EMPTY),
            Err(EtaError::EmptySide)
        );
        assert_eq!(
            s_count(
                &g,
                VertexSet::from_vertices(&[0, 1]),
                VertexSet::from_vertices(&[1, 2])
            ),
            Err(EtaError::OverlappingSides)
        );
    }

    #[test]
    fn s_at_most_r_and_r_symmetric_exhaustively() {
        // all graphs on 4 vertices, all disjoint nonempty side pairs
        for mask in 0u64..64 {
            let g = Graph::from_upper_triangle(4, mask);
            for xb in 1u32..16 {
                for yb in 1u32..16 {
                    if xb & yb != 0 {
                        continue;
                    }
                    let (x, y) = (VertexSet::from_bits(xb), VertexSet::from_bits(yb));
                    let s = s_count(&g, x, y).unwrap();
                    let r = r_count(&g, x, y).unwrap();
                    assert!(s <= r, "mask={mask} x={x:?} y={y:?}");
                    assert_eq!(r, r_count(&g, y, x).unwrap());
                }
            }
        }
    }
}
