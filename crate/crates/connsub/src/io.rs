//! graph6 codec and the command-line interface.
//!
//! Only the short graph6 form (orders up to 62) is implemented, with the
//! stricter cap of [`MAX_VERTICES`] on top; the long forms are rejected
//! explicitly. Encoding is bit-exact: byte `n + 63`, then the column-major
//! upper-triangle adjacency bits packed six per byte, most significant bit
//! first, with zero padding.

use crate::eta::{eta_subset_scan_with_limit, ng_report_with_limit, EtaError, SCAN_LIMIT};
use crate::families::FamilySpec;
use crate::gen::{stream_graph6, GenError, Graph6Stream, GraphClassSpec};
use crate::graph::{Graph, MAX_VERTICES};
use crate::laws::{
    check_conjecture, check_maximal_properties, check_min_bound, check_p4_c4_example,
    check_pair_lemma, check_per_size_bound, check_tree_theorems, check_twin_edge,
    check_vertex_lemma, search_extremal, LawError, LawReport, SearchOptions,
};
use clap::Parser as _;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

// ============================================================================
// graph6 codec
// ============================================================================

/// Errors from graph6 decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// Empty record.
    Empty,
    /// A byte outside the printable graph6 range 63..=126.
    BadByte(u8),
    /// The record starts with `~`, the long-form marker.
    LongForm,
    /// Order 0 records are not representable as a [`Graph`].
    OrderZero,
    /// Order above the crate cap.
    OrderAboveCap { n: usize },
    /// Wrong number of edge bytes for the declared order.
    WrongLength { expected: usize, got: usize },
    /// Unused bits in the final byte must be zero.
    NonzeroPadding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 record"),
            Graph6Error::BadByte(b) => write!(f, "byte 0x{b:02x} outside graph6 range 63..=126"),
            Graph6Error::LongForm => {
                write!(f, "long-form graph6 (order > 62) is not supported")
            }
            Graph6Error::OrderZero => write!(f, "order-0 graph6 records are not supported"),
            Graph6Error::OrderAboveCap { n } => {
                write!(f, "order {n} exceeds the cap of {MAX_VERTICES}")
            }
            Graph6Error::WrongLength { expected, got } => {
                write!(f, "record should be {expected} bytes, got {got}")
            }
            Graph6Error::NonzeroPadding => write!(f, "nonzero padding bits in final byte"),
        }
    }
}

impl std::error::Error for Graph6Error {}

/// Decodes one graph6 record (no surrounding whitespace, no header).
pub fn parse_graph6(record: &str) -> Result<Graph, Graph6Error> {
    let bytes = record.as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first == 126 {
        return Err(Graph6Error::LongForm);
    }
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::BadByte(first));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::OrderZero);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::OrderAboveCap { n });
    }
    let m = n * (n - 1) / 2;
    let expected = 1 + m.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            got: bytes.len(),
        });
    }
    let data = &bytes[1..];
    for &byte in data {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte(byte));
        }
    }
    let bit = |pos: usize| (data[pos / 6] - 63) >> (5 - pos % 6) & 1;
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) != 0 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    for pad in m..data.len() * 6 {
        if bit(pad) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Encodes a graph as one graph6 record.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= 62, "short graph6 form requires order <= 62");
    let m = n * (n - 1) / 2;
    let mut out = vec![0u8; 1 + m.div_ceil(6)];
    out[0] = n as u8 + 63;
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                out[1 + pos / 6] |= 1 << (5 - pos % 6);
            }
            pos += 1;
        }
    }
    for byte in &mut out[1..] {
        *byte += 63;
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

// ============================================================================
// command-line surface
// ============================================================================

/// Output format for CLI reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One JSON object per record; all numerics as decimal strings.
    Json,
    /// Tab-separated summaries; diagnostics on stderr.
    Tsv,
    /// Raw graph6 records (generation only).
    Graph6,
}

#[derive(Debug, clap::Subcommand)]
enum Command {
    /// Count connected induced subgraphs of each input graph.
    Eta {
        /// graph6 input file (defaults to stdin).
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Per-size connected-subgraph counts of each input graph.
    Profile {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Complement-sum report for each input graph.
    Ng {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Emit a named family (e.g. `star:7`, `double_star:2,3`) or a whole
    /// class (e.g. `trees:9`, `all_labeled:5`).
    Gen { spec: String },
    /// Sweep a class for the extreme complement sums with certificates.
    Search { class: String },
    /// Check one law (or `all`) over the class selected by `--order` /
    /// `--input`.
    Check {
        /// One of: min_bound, per_size_bound, pair_lemma, vertex_lemma,
        /// twin_edge, maximal_properties, conjecture, tree_theorems,
        /// p4_c4_example, all.
        law: String,
        /// Order of the built-in labeled domain.
        #[arg(long)]
        order: Option<usize>,
        /// graph6 stream to check instead of the built-in domain.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check that every maximal graph of the given order has diameter 2.
    Conjecture {
        n: usize,
        /// graph6 stream of candidates for orders above the built-in range.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

/// Parsed command line: subcommand plus the global tuning flags.
#[derive(Debug, clap::Parser)]
#[command(
    name = "connsub",
    version,
    about = "Exact connected-induced-subgraph counts and complement-sum laws"
)]
pub struct CliConfig {
    #[command(subcommand)]
    command: Command,
    /// Largest order accepted by the counting scans (hard cap 26).
    #[arg(long, global = true, default_value_t = SCAN_LIMIT)]
    scan_limit: usize,
    /// Worker threads for search and check (results never depend on this).
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Cap on counterexamples retained per law report.
    #[arg(long, global = true, default_value_t = 100)]
    max_counterexamples: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

const EXIT_PASS: i32 = 0;
const EXIT_COUNTEREXAMPLE: i32 = 1;
const EXIT_USAGE: i32 = 2;

/// Everything that aborts a CLI run: usage problems and input problems both
/// exit 2; a law counterexample is not an error (exit 1 via the report path).
#[derive(Debug)]
enum CliError {
    Usage(String),
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Input(msg) => write!(f, "input error: {msg}"),
        }
    }
}

impl From<LawError> for CliError {
    fn from(e: LawError) -> CliError {
        CliError::Input(e.to_string())
    }
}

impl From<EtaError> for CliError {
    fn from(e: EtaError) -> CliError {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Input(e.to_string())
    }
}

/// Runs the CLI against explicit argument and output streams. Returns the
/// process exit code: 0 pass, 1 law counterexample, 2 usage or input error.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(config) => config,
        Err(e) => {
            // help and version requests are successful displays, not errors
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let target: &mut dyn Write = if e.use_stderr() { &mut *err } else { &mut *out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    if config.scan_limit > SCAN_LIMIT {
        let _ = writeln!(
            err,
            "usage error: --scan-limit {} exceeds the hard cap {SCAN_LIMIT}",
            config.scan_limit
        );
        return EXIT_USAGE;
    }
    if config.workers == 0 {
        let _ = writeln!(err, "usage error: --workers must be at least 1");
        return EXIT_USAGE;
    }
    match dispatch(&config, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(
    config: &CliConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let opts = SearchOptions {
        workers: config.workers,
        max_counterexamples: config.max_counterexamples,
    };
    match &config.command {
        Command::Eta { input } => {
            for g in read_input_graphs(input.as_deref())? {
                let profile = eta_subset_scan_with_limit(&g, config.scan_limit)?;
                emit_record(config.format, out, |format, out| match format {
                    Format::Json => writeln!(
                        out,
                        "{{\"graph6\":{},\"order\":\"{}\",\"eta\":\"{}\"}}",
                        json_string(&emit_graph6(&g)),
                        g.n(),
                        profile.total()
                    ),
                    Format::Tsv => writeln!(out, "{}\t{}", emit_graph6(&g), profile.total()),
                    Format::Graph6 => unreachable!("rejected above"),
                })?;
            }
            Ok(EXIT_PASS)
        }
        Command::Profile { input } => {
            for g in read_input_graphs(input.as_deref())? {
                let profile = eta_subset_scan_with_limit(&g, config.scan_limit)?;
                let counts: Vec<String> =
                    profile.counts().iter().map(|c| c.to_string()).collect();
                emit_record(config.format, out, |format, out| match format {
                    Format::Json => writeln!(
                        out,
                        "{{\"graph6\":{},\"order\":\"{}\",\"counts\":[{}],\"total\":\"{}\"}}",
                        json_string(&emit_graph6(&g)),
                        g.n(),
                        counts
                            .iter()
                            .map(|c| format!("\"{c}\""))
                            .collect::<Vec<_>>()
                            .join(","),
                        profile.total()
                    ),
                    Format::Tsv => writeln!(
                        out,
                        "{}\t{}\t{}",
                        emit_graph6(&g),
                        profile.total(),
                        counts.join(",")
                    ),
                    Format::Graph6 => unreachable!("rejected above"),
                })?;
            }
            Ok(EXIT_PASS)
        }
        Command::Ng { input } => {
            for g in read_input_graphs(input.as_deref())? {
                let report = ng_report_with_limit(&g, config.scan_limit)?;
                emit_record(config.format, out, |format, out| match format {
                    Format::Json => writeln!(
                        out,
                        "{{\"graph6\":{},\"eta_g\":\"{}\",\"eta_gbar\":\"{}\",\"sum\":\"{}\",\"ng_set_size\":\"{}\"}}",
                        json_string(&emit_graph6(&g)),
                        report.eta_g,
                        report.eta_gbar,
                        report.sum,
                        report.ng_set_size
                    ),
                    Format::Tsv => writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}",
                        emit_graph6(&g),
                        report.eta_g,
                        report.eta_gbar,
                        report.sum,
                        report.ng_set_size
                    ),
                    Format::Graph6 => unreachable!("rejected above"),
                })?;
            }
            Ok(EXIT_PASS)
        }
        Command::Gen { spec } => {
            let graphs = resolve_gen_spec(spec)?;
            for g in graphs {
                match config.format {
                    Format::Graph6 => writeln!(out, "{}", emit_graph6(&g))?,
                    Format::Tsv => writeln!(out, "{}\t{}", emit_graph6(&g), g.n())?,
                    Format::Json => writeln!(
                        out,
                        "{{\"graph6\":{},\"order\":\"{}\"}}",
                        json_string(&emit_graph6(&g)),
                        g.n()
                    )?,
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Search { class } => {
            if config.format == Format::Graph6 {
                return Err(CliError::Usage(
                    "--format graph6 applies to `gen` only".to_string(),
                ));
            }
            let class: GraphClassSpec = class
                .parse()
                .map_err(|e: GenError| CliError::Usage(e.to_string()))?;
            let report = search_extremal(&class, &opts)?;
            match config.format {
                Format::Json => {
                    let json = serde_json::to_string(&report)
                        .expect("report serialization is infallible");
                    writeln!(out, "{json}")?;
                }
                Format::Tsv => {
                    writeln!(
                        out,
                        "summary\t{}\t{}\t{}\t{}\t{}",
                        report.class, report.order, report.scanned, report.min, report.max
                    )?;
                    for cert in &report.argmin {
                        writeln!(out, "argmin\t{}", cert.graph6)?;
                    }
                    for cert in &report.argmax {
                        writeln!(out, "argmax\t{}", cert.graph6)?;
                    }
                }
                Format::Graph6 => unreachable!("rejected above"),
            }
            Ok(EXIT_PASS)
        }
        Command::Check { law, order, input } => {
            if config.format == Format::Graph6 {
                return Err(CliError::Usage(
                    "--format graph6 applies to `gen` only".to_string(),
                ));
            }
            let reports = run_checks(law, *order, input.as_deref(), &opts, err)?;
            let mut all_pass = true;
            for report in &reports {
                all_pass &= report.pass;
                emit_law_report(config.format, out, err, report)?;
            }
            Ok(if all_pass { EXIT_PASS } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Conjecture { n, input } => {
            if config.format == Format::Graph6 {
                return Err(CliError::Usage(
                    "--format graph6 applies to `gen` only".to_string(),
                ));
            }
            let report = check_conjecture(*n, input.as_deref(), &opts)?;
            emit_law_report(config.format, out, err, &report)?;
            Ok(if report.pass { EXIT_PASS } else { EXIT_COUNTEREXAMPLE })
        }
    }
}

/// Reads graph6 records from a file or stdin, failing fast on the first
/// malformed record.
fn read_input_graphs(path: Option<&Path>) -> Result<Vec<Graph>, CliError> {
    fn collect<R: std::io::BufRead>(iter: Graph6Stream<R>) -> Result<Vec<Graph>, CliError> {
        iter.collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Input(e.to_string()))
    }
    match path {
        Some(p) => {
            let file = std::fs::File::open(p)
                .map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            collect(stream_graph6(std::io::BufReader::new(file)))
        }
        None => collect(stream_graph6(std::io::stdin().lock())),
    }
}

/// `gen` accepts either a family spec or a class spec.
fn resolve_gen_spec(spec: &str) -> Result<Vec<Graph>, CliError> {
    if let Ok(family) = spec.parse::<FamilySpec>() {
        let g = family
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok(vec![g]);
    }
    match spec.parse::<GraphClassSpec>() {
        Ok(class) => class
            .collect()
            .map_err(|e| CliError::Input(e.to_string())),
        Err(e) => Err(CliError::Usage(format!(
            "`{spec}` is neither a family nor a class: {e}"
        ))),
    }
}

fn emit_record(
    format: Format,
    out: &mut dyn Write,
    write: impl Fn(Format, &mut dyn Write) -> std::io::Result<()>,
) -> Result<(), CliError> {
    if format == Format::Graph6 {
        return Err(CliError::Usage(
            "--format graph6 applies to `gen` only".to_string(),
        ));
    }
    write(format, out)?;
    Ok(())
}

fn emit_law_report(
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
    report: &LawReport,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let json =
                serde_json::to_string(report).expect("report serialization is infallible");
            writeln!(out, "{json}")?;
        }
        Format::Tsv => {
            writeln!(
                out,
                "{}\t{}\t{}\t{}",
                report.law,
                report.checked,
                if report.pass { "pass" } else { "FAIL" },
                report.counterexamples_total
            )?;
            for v in &report.counterexamples {
                writeln!(err, "counterexample {}: {}", v.graph6, v.detail)?;
            }
        }
        Format::Graph6 => unreachable!("rejected by callers"),
    }
    Ok(())
}

/// Laws that quantify over a plain graph class.
const CLASS_LAWS: [&str; 5] = [
    "min_bound",
    "per_size_bound",
    "pair_lemma",
    "vertex_lemma",
    "twin_edge",
];

fn class_for(order: Option<usize>, input: Option<&Path>) -> Result<GraphClassSpec, CliError> {
    match (order, input) {
        (_, Some(path)) => Ok(GraphClassSpec::Stream {
            path: path.to_path_buf(),
        }),
        (Some(n), None) => Ok(GraphClassSpec::AllLabeled { n }),
        (None, None) => Err(CliError::Usage(
            "this law needs --order or --input to fix its domain".to_string(),
        )),
    }
}

fn run_class_law(
    law: &str,
    class: &GraphClassSpec,
    opts: &SearchOptions,
) -> Result<LawReport, LawError> {
    match law {
        "min_bound" => check_min_bound(class, opts),
        "per_size_bound" => check_per_size_bound(class, opts),
        "pair_lemma" => check_pair_lemma(class, opts),
        "vertex_lemma" => check_vertex_lemma(class, opts),
        "twin_edge" => check_twin_edge(class, opts),
        _ => unreachable!("filtered by caller"),
    }
}

fn run_checks(
    law: &str,
    order: Option<usize>,
    input: Option<&Path>,
    opts: &SearchOptions,
    err: &mut dyn Write,
) -> Result<Vec<LawReport>, CliError> {
    let mut reports = Vec::new();
    match law {
        _ if CLASS_LAWS.contains(&law) => {
            reports.push(run_class_law(law, &class_for(order, input)?, opts)?);
        }
        "maximal_properties" => {
            let n = order.ok_or_else(|| {
                CliError::Usage("maximal_properties needs --order".to_string())
            })?;
            reports.push(check_maximal_properties(n, input, opts)?);
        }
        "conjecture" => {
            let n = order
                .ok_or_else(|| CliError::Usage("conjecture needs --order".to_string()))?;
            reports.push(check_conjecture(n, input, opts)?);
        }
        "tree_theorems" => {
            let n = order
                .ok_or_else(|| CliError::Usage("tree_theorems needs --order".to_string()))?;
            reports.push(check_tree_theorems(n, opts)?);
        }
        "p4_c4_example" => reports.push(check_p4_c4_example()?),
        "all" => {
            let n = order
                .ok_or_else(|| CliError::Usage("`check all` needs --order".to_string()))?;
            let class = class_for(Some(n), input)?;
            for law in CLASS_LAWS {
                reports.push(run_class_law(law, &class, opts)?);
            }
            match check_maximal_properties(n, input, opts) {
                Ok(report) => reports.push(report),
                Err(LawError::UnsupportedOrder { law, n }) => {
                    let _ = writeln!(err, "skipping {law}: not defined at order {n}");
                }
                Err(e) => return Err(e.into()),
            }
            match check_conjecture(n, input, opts) {
                Ok(report) => reports.push(report),
                Err(LawError::UnsupportedOrder { law, n }) => {
                    let _ = writeln!(err, "skipping {law}: not defined at order {n}");
                }
                Err(e) => return Err(e.into()),
            }
            match check_tree_theorems(n, opts) {
                Ok(report) => reports.push(report),
                Err(LawError::UnsupportedOrder { law, n }) => {
                    let _ = writeln!(err, "skipping {law}: not defined at order {n}");
                }
                Err(e) => return Err(e.into()),
            }
            reports.push(check_p4_c4_example()?);
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown law `{other}`; known: {}, maximal_properties, conjecture, \
                 tree_theorems, p4_c4_example, all",
                CLASS_LAWS.join(", ")
            )));
        }
    }
    Ok(reports)
}

/// Minimal JSON string escaping for graph6 payloads (printable ASCII with
/// possible backslashes and quotes).
fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

// ============================================================================
// tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::labeled_graphs;

    #[test]
    fn named_records() {
        let k1 = Graph::empty(1);
        assert_eq!(emit_graph6(&k1), "@");
        assert_eq!(parse_graph6("@").unwrap(), k1);

        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(emit_graph6(&k3), "Bw");

        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(emit_graph6(&p4), "Ch");
        assert_eq!(parse_graph6("Ch").unwrap(), p4);
    }

    #[test]
    fn roundtrip_all_labeled_graphs_up_to_five() {
        for n in 1..=5usize {
            for g in labeled_graphs(n).unwrap() {
                let text = emit_graph6(&g);
                assert_eq!(parse_graph6(&text).unwrap(), g, "{text}");
            }
        }
    }

    #[test]
    fn roundtrip_beyond_mask_width() {
        // Orders whose pair count exceeds 64 bits must still encode exactly.
        for n in [12usize, 16, 20, 32] {
            let path: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
            let sparse = Graph::from_edges(n, &path);
            assert_eq!(parse_graph6(&emit_graph6(&sparse)).unwrap(), sparse);

            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .collect();
            let dense = Graph::from_edges(n, &pairs);
            assert_eq!(parse_graph6(&emit_graph6(&dense)).unwrap(), dense);
        }
    }

    #[test]
    fn rejects_malformed_records() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("\u{1}"), Err(Graph6Error::BadByte(1)));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::LongForm));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::OrderZero));
        // order 40 > 32: byte 103 = 'g'
        assert_eq!(parse_graph6("g"), Err(Graph6Error::OrderAboveCap { n: 40 }));
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::WrongLength {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            parse_graph6("Chh"),
            Err(Graph6Error::WrongLength {
                expected: 2,
                got: 3
            })
        );
        // order 2 has 1 edge bit; byte with lower bits set is bad padding
        assert_eq!(parse_graph6("A?"), Ok(Graph::empty(2)));
        assert_eq!(parse_graph6("AO"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn padding_is_zeroed_on_emit() {
        // orders whose bit counts are not multiples of 6
        for n in [2usize, 4, 5, 8] {
            let g = Graph::empty(n);
            let text = emit_graph6(&g);
            assert!(text.bytes().skip(1).all(|b| b == 63), "{text}");
        }
    }

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let full: Vec<String> = std::iter::once("connsub".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn cli_gen_emits_stable_family_record() {
        let (code, out, _) = run_cli(&["gen", "double_star:2,3", "--format", "graph6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "Fs`A?\n");
    }

    #[test]
    fn cli_check_passes_at_order_four() {
        let (code, out, _) = run_cli(&["check", "min_bound", "--order", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"pass\":true"), "{out}");
    }

    #[test]
    fn cli_search_reports_string_numerics() {
        let (code, out, _) = run_cli(&["search", "all_labeled:4", "--workers", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"min\":\"19\""), "{out}");
        assert!(out.contains("\"max\":\"20\""), "{out}");
        assert!(out.contains("\"scanned\":\"64\""), "{out}");
    }

    #[test]
    fn cli_rejects_bad_usage() {
        let (code, _, err) = run_cli(&["check", "nosuchlaw", "--order", "4"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown law"), "{err}");

        let (code, _, err) = run_cli(&["gen", "star:7", "--scan-limit", "99"]);
        assert_eq!(code, 2);
        assert!(err.contains("hard cap"), "{err}");

        let (code, _, err) = run_cli(&["gen", "star:7", "--workers", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("at least 1"), "{err}");

        let (code, _, err) = run_cli(&["search", "all_labeled:4", "--format", "graph6"]);
        assert_eq!(code, 2);
        assert!(err.contains("gen"), "{err}");
    }

    #[test]
    fn cli_help_is_a_successful_display() {
        let (code, out, _) = run_cli(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Usage"), "{out}");
    }

    #[test]
    fn cli_counterexample_exit_code_on_synthetic_stream() {
        // the complete graph has diameter 1 and a disconnected complement, so
        // neither side has diameter 2 — driving the counterexample exit path
        let dir = std::env::temp_dir().join("connsub-io-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("k5.g6");
        let k5 = Graph::from_upper_triangle(5, (1 << 10) - 1);
        std::fs::write(&path, format!("{}\n", emit_graph6(&k5))).unwrap();
        let (code, out, _) = run_cli(&[
            "conjecture",
            "5",
            "--input",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("\"pass\":false"), "{out}");
    }
}
