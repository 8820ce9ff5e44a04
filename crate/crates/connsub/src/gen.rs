//! Graph class generators: the search domains.
//!
//! Four classes are understood: all labeled graphs of a given order, free
//! trees (one representative per isomorphism class, via level-sequence
//! successor generation), unicyclic graphs (tree plus chord, deduplicated by
//! canonical form), and externally supplied graph6 streams. A Prüfer-sequence
//! tree oracle exists purely to cross-check the tree generator.

use crate::graph::{CanonicalForm, Graph, MAX_VERTICES};
use crate::io::parse_graph6;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// Free trees with more vertices than this are refused (the level-sequence
/// generator is fine beyond, but every consumer here is desk-scale).
pub const MAX_TREE_VERTICES: usize = 18;

/// Labeled enumeration cap: 2^28 graphs for n = 8 is the practical ceiling.
pub const MAX_LABELED_VERTICES: usize = 8;

/// Unicyclic generation relies on canonical forms, capped at order 10.
pub const MAX_UNICYCLIC_VERTICES: usize = 10;

/// The Prüfer oracle decodes all n^(n-2) labeled trees; 9 is plenty.
pub const MAX_PRUFER_VERTICES: usize = 9;

// ============================================================================
// errors
// ============================================================================

/// Errors from generators and class specs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    /// A class was requested outside its supported order range.
    OrderOutOfRange {
        class: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
    /// The textual class form could not be parsed.
    Parse(String),
    /// A graph6 stream record failed to decode.
    Malformed { line: usize, msg: String },
    /// The stream source could not be read.
    Io(String),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::OrderOutOfRange { class, n, min, max } => {
                write!(f, "class {class} supports orders {min}..={max}, got {n}")
            }
            GenError::Parse(msg) => write!(f, "bad class spec: {msg}"),
            GenError::Malformed { line, msg } => write!(f, "line {line}: {msg}"),
            GenError::Io(msg) => write!(f, "stream error: {msg}"),
        }
    }
}

impl std::error::Error for GenError {}

// ============================================================================
// GraphClassSpec
// ============================================================================

/// A search domain.
///
/// Textual forms (used by the CLI): `all_labeled:6`, `trees:14`,
/// `unicyclic:8`, `stream:PATH`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphClassSpec {
    /// All `2^(n(n-1)/2)` labeled graphs of order `n <= 8`, by ascending
    /// upper-triangle bitmask.
    AllLabeled { n: usize },
    /// One representative per isomorphism class of trees, `n <= 18`.
    Trees { n: usize },
    /// One representative per isomorphism class of connected graphs with
    /// exactly one cycle, `4 <= n <= 10`.
    Unicyclic { n: usize },
    /// Graphs read from a graph6 file, in file order.
    Stream { path: PathBuf },
}

impl GraphClassSpec {
    /// Materializes the class into a vector, in the class's defining order.
    pub fn collect(&self) -> Result<Vec<Graph>, GenError> {
        match self {
            GraphClassSpec::AllLabeled { n } => Ok(labeled_graphs(*n)?.collect()),
            GraphClassSpec::Trees { n } => Ok(free_trees(*n)?.collect()),
            GraphClassSpec::Unicyclic { n } => unicyclic_graphs(*n),
            GraphClassSpec::Stream { path } => read_graph6_file(path),
        }
    }
}

impl fmt::Display for GraphClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClassSpec::AllLabeled { n } => write!(f, "all_labeled:{n}"),
            GraphClassSpec::Trees { n } => write!(f, "trees:{n}"),
            GraphClassSpec::Unicyclic { n } => write!(f, "unicyclic:{n}"),
            GraphClassSpec::Stream { path } => write!(f, "stream:{}", path.display()),
        }
    }
}

impl FromStr for GraphClassSpec {
    type Err = GenError;

    fn from_str(text: &str) -> Result<GraphClassSpec, GenError> {
        let (tag, rest) = text.split_once(':').ok_or_else(|| {
            GenError::Parse(format!(
                "'{text}' has no parameter; expected e.g. 'all_labeled:6' or 'stream:FILE'"
            ))
        })?;
        if tag == "stream" {
            if rest.is_empty() {
                return Err(GenError::Parse("stream needs a file path".to_string()));
            }
            return Ok(GraphClassSpec::Stream {
                path: PathBuf::from(rest),
            });
        }
        let n: usize = rest
            .trim()
            .parse()
            .map_err(|_| GenError::Parse(format!("'{rest}' is not an integer order")))?;
        match tag {
            "all_labeled" => Ok(GraphClassSpec::AllLabeled { n }),
            "trees" => Ok(GraphClassSpec::Trees { n }),
            "unicyclic" => Ok(GraphClassSpec::Unicyclic { n }),
            other => Err(GenError::Parse(format!(
                "unknown class '{other}' (expected all_labeled, trees, unicyclic, or stream)"
            ))),
        }
    }
}

// ============================================================================
// labeled enumeration
// ============================================================================

/// All labeled graphs of order `n`, by ascending upper-triangle bitmask.
pub fn labeled_graphs(n: usize) -> Result<LabeledGraphs, GenError> {
    if !(1..=MAX_LABELED_VERTICES).contains(&n) {
        return Err(GenError::OrderOutOfRange {
            class: "all_labeled",
            n,
            min: 1,
            max: MAX_LABELED_VERTICES,
        });
    }
    Ok(LabeledGraphs {
        n,
        next_mask: 0,
        end: 1u64 << (n * (n - 1) / 2),
    })
}

/// Iterator over all labeled graphs of a fixed order.
pub struct LabeledGraphs {
    n: usize,
    next_mask: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next_mask == self.end {
            return None;
        }
        let g = Graph::from_upper_triangle(self.n, self.next_mask);
        self.next_mask += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = (self.end - self.next_mask) as usize;
        (rest, Some(rest))
    }
}

// ============================================================================
// free trees
// ============================================================================

/// One representative per isomorphism class of trees on `n` vertices.
///
/// Rooted trees are enumerated by canonical level sequences (each class's
/// lexicographically greatest depth sequence) using the classic
/// successor rule, then filtered to centroid rootings so every free tree
/// survives exactly once: a tree with a single centroid is kept iff rooted
/// there, and a tree with two centroids is kept iff rooted at the one whose
/// rooted encoding is at least the other's (equal encodings mean the two
/// rootings are the same rooted tree, hence a single level sequence).
pub fn free_trees(n: usize) -> Result<FreeTrees, GenError> {
    if !(1..=MAX_TREE_VERTICES).contains(&n) {
        return Err(GenError::OrderOutOfRange {
            class: "trees",
            n,
            min: 1,
            max: MAX_TREE_VERTICES,
        });
    }
    Ok(FreeTrees {
        levels: (0..n).collect(),
        done: false,
    })
}

/// Iterator over isomorphism-class representatives of free trees.
pub struct FreeTrees {
    levels: Vec<usize>,
    done: bool,
}

impl FreeTrees {
    /// Advances to the next canonical rooted level sequence.
    fn advance(&mut self) {
        // rightmost vertex of depth >= 2
        let p = match self.levels.iter().rposition(|&d| d >= 2) {
            Some(p) => p,
            None => {
                self.done = true;
                return;
            }
        };
        // its parent: rightmost earlier vertex one level up
        let q = self.levels[..p]
            .iter()
            .rposition(|&d| d == self.levels[p] - 1)
            .expect("a vertex of depth >= 2 has a parent in the prefix");
        // replace the tail with cyclic copies of the block starting at q
        for i in p..self.levels.len() {
            self.levels[i] = self.levels[i - (p - q)];
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while !self.done {
            let keep = centroid_rooted(&self.levels);
            let g = keep.then(|| tree_from_levels(&self.levels));
            self.advance();
            if g.is_some() {
                return g;
            }
        }
        None
    }
}

/// Builds the preorder-labeled tree of a level sequence: each vertex attaches
/// to the most recent vertex one level shallower.
fn tree_from_levels(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut latest_at_depth = [0usize; MAX_VERTICES];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (v, &d) in levels.iter().enumerate() {
        if v > 0 {
            edges.push((latest_at_depth[d - 1], v));
        }
        latest_at_depth[d] = v;
    }
    Graph::from_edges(n, &edges)
}

/// Whether the root of this level sequence (vertex 0) is the chosen centroid.
fn centroid_rooted(levels: &[usize]) -> bool {
    let n = levels.len();
    if n <= 2 {
        return true; // K1 and K2 each have one sequence
    }
    // parents in preorder
    let mut parent = vec![usize::MAX; n];
    let mut latest_at_depth = vec![0usize; n];
    for (v, &d) in levels.iter().enumerate() {
        if v > 0 {
            parent[v] = latest_at_depth[d - 1];
        }
        latest_at_depth[d] = v;
    }
    // subtree sizes (children come after parents in preorder)
    let mut size = vec![1usize; n];
    for v in (1..n).rev() {
        size[parent[v]] += size[v];
    }
    // max component left by deleting v: the part above v, or a child branch
    let mut max_comp = vec![0usize; n];
    for v in 0..n {
        max_comp[v] = n - size[v];
    }
    for v in 1..n {
        let p = parent[v];
        max_comp[p] = max_comp[p].max(size[v]);
    }
    let best = *max_comp.iter().min().expect("nonempty");
    if max_comp[0] != best {
        return false;
    }
    let mut centroids = (0..n).filter(|&v| max_comp[v] == best);
    let first = centroids.next().expect("argmin exists");
    let second = centroids.next();
    debug_assert!(centroids.next().is_none(), "a tree has at most 2 centroids");
    match second {
        None => true,
        Some(other) => {
            debug_assert_eq!(first, 0);
            // two centroids: keep the rooting with the greater encoding
            let adj: Vec<Vec<usize>> = {
                let mut a = vec![Vec::new(); n];
                for v in 1..n {
                    a[v].push(parent[v]);
                    a[parent[v]].push(v);
                }
                a
            };
            rooted_encoding(&adj, 0, usize::MAX) >= rooted_encoding(&adj, other, usize::MAX)
        }
    }
}

/// Nested-parenthesis encoding of a rooted tree, children ordered by
/// descending encoding; equal encodings iff isomorphic as rooted trees.
fn rooted_encoding(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut child_codes: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| rooted_encoding(adj, c, v))
        .collect();
    child_codes.sort_unstable_by(|a, b| b.cmp(a));
    let mut code = Vec::with_capacity(2 + child_codes.iter().map(Vec::len).sum::<usize>());
    code.push(b'(');
    for c in child_codes {
        code.extend_from_slice(&c);
    }
    code.push(b')');
    code
}

// ============================================================================
// unicyclic graphs
// ============================================================================

/// One representative per isomorphism class of unicyclic graphs (connected,
/// exactly `n` edges): every free tree of order `n` plus every possible
/// chord, deduplicated by canonical form and emitted in canonical order.
pub fn unicyclic_graphs(n: usize) -> Result<Vec<Graph>, GenError> {
    if !(4..=MAX_UNICYCLIC_VERTICES).contains(&n) {
        return Err(GenError::OrderOutOfRange {
            class: "unicyclic",
            n,
            min: 4,
            max: MAX_UNICYCLIC_VERTICES,
        });
    }
    let mut classes: BTreeSet<CanonicalForm> = BTreeSet::new();
    for tree in free_trees(n)? {
        for u in 0..n {
            for v in (u + 1)..n {
                if !tree.has_edge(u, v) {
                    let g = tree.with_edge(u, v);
                    classes.insert(
                        g.canonical_form()
                            .expect("unicyclic order is within the canonical cap"),
                    );
                }
            }
        }
    }
    Ok(classes.into_iter().map(|form| form.to_graph()).collect())
}

// ============================================================================
// graph6 streams
// ============================================================================

/// Decodes a line-oriented graph6 stream; graphs come out in input order.
/// Blank lines are skipped; a `>>graph6<<` header is tolerated at the start.
pub fn stream_graph6<R: BufRead>(reader: R) -> Graph6Stream<R> {
    Graph6Stream { reader, line: 0 }
}

/// Reads a whole graph6 file into memory.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, GenError> {
    let file = File::open(path)
        .map_err(|e| GenError::Io(format!("{}: {e}", path.display())))?;
    stream_graph6(BufReader::new(file)).collect()
}

/// Streaming decoder for graph6 records.
pub struct Graph6Stream<R> {
    reader: R,
    line: usize,
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<Graph, GenError>;

    fn next(&mut self) -> Option<Result<Graph, GenError>> {
        loop {
            let mut buf = String::new();
            match self.reader.read_line(&mut buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(GenError::Io(e.to_string()))),
            }
            self.line += 1;
            let mut record = buf.trim_end_matches(['\n', '\r']).trim();
            if self.line == 1 {
                record = record.strip_prefix(">>graph6<<").unwrap_or(record).trim();
            }
            if record.is_empty() {
                continue;
            }
            return Some(parse_graph6(record).map_err(|e| GenError::Malformed {
                line: self.line,
                msg: e.to_string(),
            }));
        }
    }
}

// ============================================================================
// Prüfer oracle
// ============================================================================

/// Canonical forms of every isomorphism class of trees on `n` vertices,
/// computed the slow, independent way: decode all `n^(n-2)` Prüfer sequences
/// into labeled trees and deduplicate up to isomorphism. Exists to
/// cross-check [`free_trees`]; sorted ascending.
///
/// Deduplication runs in two stages: labeled trees are first bucketed by
/// their centroid-rooted encoding (an exact tree invariant, cheap enough for
/// millions of calls), then one representative per bucket goes through
/// [`Graph::canonical_form`], which remains the final authority — distinct
/// buckets must yield distinct canonical forms or the oracle panics.
pub fn prufer_tree_classes(n: usize) -> Result<Vec<CanonicalForm>, GenError> {
    if !(1..=MAX_PRUFER_VERTICES).contains(&n) {
        return Err(GenError::OrderOutOfRange {
            class: "prufer",
            n,
            min: 1,
            max: MAX_PRUFER_VERTICES,
        });
    }
    if n <= 2 {
        let g = if n == 1 {
            Graph::empty(1)
        } else {
            Graph::from_edges(2, &[(0, 1)])
        };
        return Ok(vec![g.canonical_form().expect("tiny order")]);
    }
    let len = n - 2;
    let mut buckets: HashMap<Vec<u8>, Graph> = HashMap::new();
    let mut seq = vec![0usize; len];
    'sweep: loop {
        let tree = prufer_decode(n, &seq);
        buckets.entry(free_tree_key(&tree)).or_insert(tree);
        // odometer step over {0..n-1}^len
        let mut i = 0;
        loop {
            if i == len {
                break 'sweep;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
    let classes: BTreeSet<CanonicalForm> = buckets
        .values()
        .map(|g| g.canonical_form().expect("order is within prufer cap"))
        .collect();
    assert_eq!(
        classes.len(),
        buckets.len(),
        "encoding buckets disagree with canonical forms"
    );
    Ok(classes.into_iter().collect())
}

/// Exact isomorphism key for a free tree: the greater centroid-rooted
/// encoding (a tree has one or two centroids).
fn free_tree_key(tree: &Graph) -> Vec<u8> {
    debug_assert!(tree.edge_count() == tree.n() - 1 && tree.is_connected_graph());
    let (a, b) = tree_centroids(tree);
    let code_a = graph_rooted_encoding(tree, a, usize::MAX);
    match b {
        None => code_a,
        Some(b) => {
            let code_b = graph_rooted_encoding(tree, b, usize::MAX);
            code_a.max(code_b)
        }
    }
}

/// The one or two centroids of a tree (vertices minimizing the largest
/// component left by their deletion).
fn tree_centroids(tree: &Graph) -> (usize, Option<usize>) {
    let n = tree.n();
    let mut parent = [usize::MAX; MAX_VERTICES];
    let mut order = Vec::with_capacity(n);
    let mut seen = 1u32;
    order.push(0usize);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let mut rest = tree.neighbors(v).bits() & !seen;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            seen |= 1 << u;
            parent[u] = v;
            order.push(u);
        }
    }
    debug_assert_eq!(order.len(), n);
    let mut size = [1usize; MAX_VERTICES];
    let mut max_comp = [0usize; MAX_VERTICES];
    for &v in order.iter().skip(1).rev() {
        max_comp[parent[v]] = max_comp[parent[v]].max(size[v]);
        size[parent[v]] += size[v];
    }
    for v in 0..n {
        max_comp[v] = max_comp[v].max(n - size[v]);
    }
    let best = (0..n).map(|v| max_comp[v]).min().expect("nonempty");
    let mut centroids = (0..n).filter(|&v| max_comp[v] == best);
    let first = centroids.next().expect("argmin exists");
    let second = centroids.next();
    debug_assert!(centroids.next().is_none());
    (first, second)
}

/// [`rooted_encoding`] working directly on a [`Graph`].
fn graph_rooted_encoding(tree: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut child_codes: Vec<Vec<u8>> = tree
        .neighbors(v)
        .iter()
        .filter(|&c| c != parent)
        .map(|c| graph_rooted_encoding(tree, c, v))
        .collect();
    child_codes.sort_unstable_by(|a, b| b.cmp(a));
    let mut code = Vec::with_capacity(2 + child_codes.iter().map(Vec::len).sum::<usize>());
    code.push(b'(');
    for c in child_codes {
        code.extend_from_slice(&c);
    }
    code.push(b')');
    code
}

/// Standard Prüfer decoding: the sequence lists each internal vertex once per
/// child pruned; rebuilding joins the smallest current leaf to the next label.
fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1u32; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a tree always has a leaf");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (
        last.next().expect("two vertices remain"),
        last.next().expect("two vertices remain"),
    );
    edges.push((a, b));
    Graph::from_edges(n, &edges)
}

// ============================================================================
// tests
// ============================================================================
