//! Small simple undirected graphs stored as per-vertex adjacency bitmasks.
//!
//! Everything in this crate runs on [`Graph`]: an immutable graph on at most
//! [`MAX_VERTICES`] vertices whose rows are `u32` bitmasks, so connectivity
//! checks are a handful of word operations. Vertex subsets travel as
//! [`VertexSet`] masks. Isomorphism questions on tiny graphs are answered
//! through [`CanonicalForm`], an exact canonical labeling.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::hash::{BuildHasher, Hasher};

/// Hard cap on the number of vertices; adjacency rows are `u32` masks.
pub const MAX_VERTICES: usize = 32;

/// Canonical forms are produced by exhaustive search over relabelings and are
/// only meant for tiny certificate sets; larger orders are refused.
pub const MAX_CANONICAL_VERTICES: usize = 10;

/// Position of the unordered pair `(i, j)`, `i < j`, in the column-major
/// upper-triangle order: all pairs of column `j` (i.e. `(0,j)..(j-1,j)`) come
/// before those of column `j+1`. This is also the bit order of the graph6
/// encoding, so canonical forms compare the same way graph6 strings do.
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

// ============================================================================
// fast hashing for canonical-search states
// ============================================================================

/// Multiply-fold hasher for the canonical search's dedup map. The keys are
/// tiny fixed-size integers, where the default hasher's per-call overhead
/// dominates the whole search.
struct SeenHasher(u64);

impl SeenHasher {
    #[inline]
    fn add(&mut self, word: u64) {
        self.0 = (self.0.rotate_left(5) ^ word).wrapping_mul(0x517c_c1b7_2722_0a95);
    }
}

impl Hasher for SeenHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.add(b as u64);
        }
    }
    fn write_u16(&mut self, x: u16) {
        self.add(x as u64);
    }
    fn write_u32(&mut self, x: u32) {
        self.add(x as u64);
    }
    fn write_u64(&mut self, x: u64) {
        self.add(x);
    }
    fn write_usize(&mut self, x: usize) {
        self.add(x as u64);
    }
}

#[derive(Default, Clone, Copy)]
struct BuildSeenHasher;

impl BuildHasher for BuildSeenHasher {
    type Hasher = SeenHasher;
    fn build_hasher(&self) -> SeenHasher {
        SeenHasher(0)
    }
}

// ============================================================================
// errors
// ============================================================================

/// Errors raised by structural operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An operation that needs a nonempty vertex set was given an empty one.
    EmptyVertexSet,
    /// Canonical forms are gated to [`MAX_CANONICAL_VERTICES`] vertices.
    OrderTooLargeForCanonical { n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyVertexSet => write!(f, "vertex set must be nonempty"),
            GraphError::OrderTooLargeForCanonical { n } => write!(
                f,
                "canonical form needs order <= {MAX_CANONICAL_VERTICES}, got {n}"
            ),
        }
    }
}

impl std::error::Error for GraphError {}

// ============================================================================
// VertexSet
// ============================================================================

/// A subset of the vertices `0..n` of some graph, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{v}`.
    pub fn single(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        if n == MAX_VERTICES {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    /// Builds a set from a raw bitmask.
    pub fn from_bits(bits: u32) -> VertexSet {
        VertexSet(bits)
    }

    /// Builds the set containing exactly the listed vertices.
    pub fn from_vertices(vs: &[usize]) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for &v in vs {
            s = s.with(v);
        }
        s
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of vertices in the set.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.0 & (1 << v) != 0
    }

    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1 << v))
    }

    /// Smallest vertex in the set, if any.
    pub fn lowest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates the vertices in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

/// Ascending iterator over the vertices of a [`VertexSet`].
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

// ============================================================================
// Graph
// ============================================================================

/// An immutable simple undirected graph on `1..=MAX_VERTICES` vertices.
///
/// Invariants enforced at construction: adjacency is symmetric, irreflexive,
/// and every row's bits lie below the order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(
            (1..=MAX_VERTICES).contains(&n),
            "graph order must be in 1..={MAX_VERTICES}, got {n}"
        );
        Graph {
            n,
            adj: [0; MAX_VERTICES],
        }
    }

    /// Builds a graph from an edge list. Parallel edges are tolerated (they
    /// collapse), loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for order {n}");
            assert!(u != v, "loops are not allowed");
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g.debug_check();
        g
    }

    /// Builds a graph of order `n` from its upper-triangle bitmask in
    /// column-major pair order (bit [`pair_index`]`(i, j)` set iff `ij` is an
    /// edge). Inverse of [`Graph::upper_triangle`].
    pub fn from_upper_triangle(n: usize, mask: u64) -> Graph {
        let m = n * (n - 1) / 2;
        assert!(m <= 64, "upper-triangle mask requires order <= 11");
        let mut g = Graph::empty(n);
        debug_assert!(m == 0 || m == 64 || mask >> m == 0);
        for j in 1..n {
            for i in 0..j {
                if mask >> pair_index(i, j) & 1 != 0 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// Upper-triangle bitmask of the adjacency matrix in column-major pair
    /// order.
    pub fn upper_triangle(&self) -> u64 {
        assert!(
            self.n * (self.n - 1) / 2 <= 64,
            "upper-triangle mask requires order <= 11"
        );
        let mut mask = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << pair_index(i, j);
                }
            }
        }
        mask
    }

    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            let full = VertexSet::full(self.n).bits();
            for v in 0..self.n {
                debug_assert!(self.adj[v] & !full == 0, "row bits above order");
                debug_assert!(self.adj[v] & (1 << v) == 0, "loop at {v}");
                for u in (v + 1)..self.n {
                    debug_assert!(
                        self.adj[v] >> u & 1 == self.adj[u] >> v & 1,
                        "asymmetric adjacency at ({v},{u})"
                    );
                }
            }
            for v in self.n..MAX_VERTICES {
                debug_assert!(self.adj[v] == 0);
            }
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Iterates `0..n`.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// The full vertex set.
    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 != 0
    }

    /// Neighborhood of `v` as a set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        let mut twice = 0;
        for v in 0..self.n {
            twice += self.adj[v].count_ones() as usize;
        }
        twice / 2
    }

    /// All edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] & !((1u32 << u) | ((1u32 << u) - 1));
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// The graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u < self.n && v < self.n && u != v);
        let mut g = *self;
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        g
    }

    /// The graph with edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u < self.n && v < self.n);
        let mut g = *self;
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    /// The complement graph: `uv` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        g.debug_check();
        g
    }

    /// Flood fill over `mask` from its lowest vertex; true iff the induced
    /// subgraph on `mask` is connected. Callers guarantee `mask != 0`.
    #[inline]
    pub(crate) fn connected_mask(&self, mask: u32) -> bool {
        debug_assert!(mask != 0);
        let mut comp = mask & mask.wrapping_neg();
        loop {
            let mut frontier = 0u32;
            let mut t = comp;
            while t != 0 {
                frontier |= self.adj[t.trailing_zeros() as usize];
                t &= t - 1;
            }
            let grown = (comp | frontier) & mask;
            if grown == comp {
                return comp == mask;
            }
            comp = grown;
        }
    }

    /// Whether the subgraph induced by `s` is connected. `s` must be nonempty.
    pub fn is_connected(&self, s: VertexSet) -> Result<bool, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        debug_assert!(s.is_subset_of(self.full_set()));
        Ok(self.connected_mask(s.bits()))
    }

    /// Whether the whole graph is connected.
    pub fn is_connected_graph(&self) -> bool {
        self.connected_mask(self.full_set().bits())
    }

    /// The connected component of `v` inside the induced subgraph on `within`.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(v));
        let mask = within.bits();
        let mut comp = 1u32 << v;
        loop {
            let mut frontier = 0u32;
            let mut t = comp;
            while t != 0 {
                frontier |= self.adj[t.trailing_zeros() as usize];
                t &= t - 1;
            }
            let grown = (comp | frontier) & mask;
            if grown == comp {
                return VertexSet(comp);
            }
            comp = grown;
        }
    }

    /// Number of connected components of the induced subgraph on `within`
    /// (zero for the empty set).
    pub fn component_count(&self, within: VertexSet) -> usize {
        let mut rest = within;
        let mut count = 0;
        while let Some(v) = rest.lowest() {
            rest = rest.difference(self.component_of(v, rest));
            count += 1;
        }
        count
    }

    /// Largest distance between two vertices, or [`Diameter::Infinite`] when
    /// the graph is disconnected. Single-vertex graphs have diameter 0.
    pub fn diameter(&self) -> Diameter {
        let full = self.full_set().bits();
        let mut max_ecc = 0u32;
        for v in 0..self.n {
            let mut reached = 1u32 << v;
            let mut frontier = reached;
            let mut dist = 0u32;
            while reached != full {
                let mut next = 0u32;
                let mut t = frontier;
                while t != 0 {
                    next |= self.adj[t.trailing_zeros() as usize];
                    t &= t - 1;
                }
                next &= !reached & full;
                if next == 0 {
                    return Diameter::Infinite;
                }
                reached |= next;
                frontier = next;
                dist += 1;
            }
            max_ecc = max_ecc.max(dist);
        }
        Diameter::Finite(max_ecc)
    }

    /// Vertices whose deletion increases the number of components.
    pub fn cut_vertices(&self) -> VertexSet {
        if self.n == 1 {
            return VertexSet::EMPTY;
        }
        let base = self.component_count(self.full_set());
        let mut cuts = VertexSet::EMPTY;
        for v in 0..self.n {
            if self.component_count(self.full_set().without(v)) > base {
                cuts = cuts.with(v);
            }
        }
        cuts
    }

    /// Vertices of degree exactly 1.
    pub fn pendant_vertices(&self) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in 0..self.n {
            if self.degree(v) == 1 {
                out = out.with(v);
            }
        }
        out
    }

    /// True iff no 4 vertices induce a path on 4 vertices. Checked by scanning
    /// all 4-subsets: an induced path is the unique 4-vertex graph with 3
    /// edges and maximum degree 2 whose degrees are not all even.
    pub fn is_p4_free(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        let sub = (1u32 << a) | (1 << b) | (1 << c) | (1 << d);
                        let mut deg_sum = 0;
                        let mut max_deg = 0;
                        let mut min_deg = 4;
                        for v in [a, b, c, d] {
                            let deg = (self.adj[v] & sub).count_ones();
                            deg_sum += deg;
                            max_deg = max_deg.max(deg);
                            min_deg = min_deg.min(deg);
                        }
                        // Degree multiset (2,2,1,1) — the only 3-edge graph on
                        // 4 vertices with no isolated vertex and max degree 2,
                        // i.e. the induced path. (K3+K1 has a degree-0 vertex,
                        // the star a degree-3 one.)
                        if deg_sum == 6 && max_deg == 2 && min_deg == 1 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The graph in which vertex `perm[v]` plays the role `v` plays here.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    let (pu, pv) = (perm[u], perm[v]);
                    g.adj[pu] |= 1 << pv;
                    g.adj[pv] |= 1 << pu;
                }
            }
        }
        g.debug_check();
        g
    }

    /// The induced subgraph on `s`, with vertices renumbered `0..|s|` in
    /// ascending order of their labels here.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let verts: Vec<usize> = s.iter().collect();
        assert!(!verts.is_empty(), "induced subgraph needs a nonempty set");
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES, "union order {n} exceeds {MAX_VERTICES}");
        let mut g = Graph::empty(n);
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        g.debug_check();
        g
    }

    /// Exact canonical form: the lexicographically smallest upper-triangle
    /// bitstring over all relabelings. Two graphs have equal forms iff they
    /// are isomorphic. Only available for orders up to
    /// [`MAX_CANONICAL_VERTICES`].
    pub fn canonical_form(&self) -> Result<CanonicalForm, GraphError> {
        if self.n > MAX_CANONICAL_VERTICES {
            return Err(GraphError::OrderTooLargeForCanonical { n: self.n });
        }
        let n = self.n;
        let m = n * (n - 1) / 2;
        if n == 1 {
            return Ok(CanonicalForm { n: 1, bits: 0 });
        }

        // Backtracking over vertex placements. A placement of vertices at
        // positions 0..d fixes the first pair_index prefix of the bitstring,
        // and each unplaced vertex is summarized by its adjacency signature
        // against the placed sequence; column d of the candidate placed next
        // contributes the next d bits (its signature). Only candidates whose
        // signature is minimal at this node can start a lexicographically
        // minimal completion; ties are explored. Subtrees are skipped when
        // strictly worse than the best completed value, and when the same
        // search state — same placed set, same signature per unplaced vertex,
        // which together determine every reachable completion — was already
        // explored with a prefix at least as good.
        struct Search<'a> {
            g: &'a Graph,
            n: usize,
            m: usize,
            best: u64,
            seen: HashMap<(u32, [u16; MAX_CANONICAL_VERTICES]), u64, BuildSeenHasher>,
        }

        impl Search<'_> {
            /// Signature bits of `sig` as the next column value: bit of
            /// placed[0] most significant, matching pair order.
            fn column_of(sig: u16, depth: usize) -> u64 {
                if depth == 0 {
                    0
                } else {
                    u64::from((sig as u32).reverse_bits() >> (32 - depth))
                }
            }

            fn run(
                &mut self,
                used: u32,
                sigs: [u16; MAX_CANONICAL_VERTICES],
                prefix: u64,
                prefix_len: usize,
            ) {
                let depth = used.count_ones() as usize;
                if depth == self.n {
                    debug_assert_eq!(prefix_len, self.m);
                    if prefix < self.best {
                        self.best = prefix;
                    }
                    return;
                }
                let mut min_col = u64::MAX;
                for (v, &sig) in sigs.iter().enumerate().take(self.n) {
                    if used >> v & 1 == 0 {
                        min_col = min_col.min(Self::column_of(sig, depth));
                    }
                }
                let new_prefix = (prefix << depth) | min_col;
                let new_len = prefix_len + depth;
                if self.best != u64::MAX && new_prefix > self.best >> (self.m - new_len) {
                    return;
                }
                for v in 0..self.n {
                    if used >> v & 1 != 0 || Self::column_of(sigs[v], depth) != min_col {
                        continue;
                    }
                    let new_used = used | (1 << v);
                    let mut new_sigs = [u16::MAX; MAX_CANONICAL_VERTICES];
                    let vn = self.g.adj[v];
                    for u in 0..self.n {
                        if new_used >> u & 1 == 0 {
                            new_sigs[u] = sigs[u] | (((vn >> u & 1) as u16) << depth);
                        }
                    }
                    match self.seen.entry((new_used, new_sigs)) {
                        Entry::Occupied(mut e) => {
                            if *e.get() <= new_prefix {
                                continue;
                            }
                            e.insert(new_prefix);
                        }
                        Entry::Vacant(e) => {
                            e.insert(new_prefix);
                        }
                    }
                    self.run(new_used, new_sigs, new_prefix, new_len);
                }
            }
        }

        let mut search = Search {
            g: self,
            n,
            m,
            best: u64::MAX,
            seen: HashMap::with_capacity_and_hasher(64, BuildSeenHasher),
        };
        let mut start_sigs = [u16::MAX; MAX_CANONICAL_VERTICES];
        start_sigs[..n].fill(0);
        search.run(0, start_sigs, 0, 0);
        debug_assert!(search.best < 1 << m);
        Ok(CanonicalForm {
            n: n as u8,
            bits: search.best,
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ============================================================================
// Diameter
// ============================================================================

/// Diameter of a graph; disconnected graphs get an explicit marker instead of
/// a sentinel value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Diameter {
    pub fn is_finite(self) -> bool {
        matches!(self, Diameter::Finite(_))
    }

    /// True iff the diameter is finite and at most `d`.
    pub fn is_at_most(self, d: u32) -> bool {
        match self {
            Diameter::Finite(x) => x <= d,
            Diameter::Infinite => false,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "infinite"),
        }
    }
}

// ============================================================================
// CanonicalForm
// ============================================================================

/// Canonical labeling certificate: the order together with the minimal
/// upper-triangle bitstring over all relabelings. The bitstring is stored so
/// that the first pair is the most significant bit, hence the derived order
/// compares bitstrings lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The canonical bitstring as `0`/`1` characters in pair order.
    pub fn bit_string(&self) -> String {
        let m = self.order() * (self.order() - 1) / 2;
        (0..m)
            .map(|k| {
                if self.bits >> (m - 1 - k) & 1 != 0 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    /// Reconstructs the canonically labeled representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let m = n * (n - 1) / 2;
        let mut mask = 0u64;
        for k in 0..m {
            if self.bits >> (m - 1 - k) & 1 != 0 {
                mask |= 1 << k;
            }
        }
        Graph::from_upper_triangle(n, mask)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(n={}, bits={})", self.n, self.bit_string())
    }
}

// ============================================================================
// tests
// ============================================================================
