//! Graph file formats: a line-oriented edge list with optional labels, and
//! graph6 (bit-packed upper triangle, offset-63 bytes).

use std::fmt::Write as _;
use std::path::Path;

use condog_core::{Graph, LabeledGraph, VertexId, Word};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Edgelist { line: usize, msg: String },
    #[error("byte {byte}: {msg}")]
    Graph6 { byte: usize, msg: String },
    #[error("graph of order {0} exceeds the supported maximum of 128")]
    TooLarge(usize),
    #[error("{0}")]
    Graph(condog_core::Error),
}

impl From<condog_core::Error> for FormatError {
    fn from(e: condog_core::Error) -> Self {
        FormatError::Graph(e)
    }
}

/// A labeled graph at whichever bitset width its order requires.
pub enum AnyLabeledGraph {
    Small(LabeledGraph<u64>),
    Large(LabeledGraph<u128>),
}

/// Runs `$body` with `$g` bound to the `LabeledGraph` inside, at either
/// width.
#[macro_export]
macro_rules! with_graph {
    ($any:expr, $g:ident => $body:expr) => {
        match $any {
            $crate::formats::AnyLabeledGraph::Small($g) => $body,
            $crate::formats::AnyLabeledGraph::Large($g) => $body,
        }
    };
}

impl AnyLabeledGraph {
    pub fn order(&self) -> usize {
        with_graph!(self, g => g.graph.order())
    }

    fn from_parts(
        n: usize,
        edges: &[(usize, usize)],
        labels: &[(String, usize)],
    ) -> Result<Self, FormatError> {
        if n > 128 {
            return Err(FormatError::TooLarge(n));
        }
        Ok(if n <= 64 {
            AnyLabeledGraph::Small(build_labeled::<u64>(n, edges, labels)?)
        } else {
            AnyLabeledGraph::Large(build_labeled::<u128>(n, edges, labels)?)
        })
    }
}

fn build_labeled<W: Word>(
    n: usize,
    edges: &[(usize, usize)],
    labels: &[(String, usize)],
) -> Result<LabeledGraph<W>, FormatError> {
    let g = Graph::from_edges(n, edges)?;
    let mut lg = LabeledGraph::new(g);
    for (name, idx) in labels {
        lg.add_label(name.clone(), VertexId(*idx))?;
    }
    Ok(lg)
}

/// Parses the edge-list format: a header `n <order>`, then one `u v` edge
/// per line (0-based), then optional `label <name> <index>` lines. Blank
/// lines and `#` comments are ignored.
pub fn parse_edgelist(input: &str) -> Result<AnyLabeledGraph, FormatError> {
    let err = |line: usize, msg: String| FormatError::Edgelist { line, msg };
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(String, usize)> = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (n.is_some(), fields.as_slice()) {
            (false, ["n", count]) => {
                let c: usize = count
                    .parse()
                    .map_err(|_| err(lineno, format!("bad order {count:?}")))?;
                if c == 0 {
                    return Err(err(lineno, "order must be positive".into()));
                }
                n = Some(c);
            }
            (false, _) => {
                return Err(err(lineno, "expected header \"n <order>\" first".into()));
            }
            (true, ["n", _]) => {
                return Err(err(lineno, "duplicate header".into()));
            }
            (true, ["label", name, idx]) => {
                let v: usize = idx
                    .parse()
                    .map_err(|_| err(lineno, format!("bad label index {idx:?}")))?;
                if v >= n.unwrap() {
                    return Err(err(lineno, format!("label index {v} out of range")));
                }
                labels.push((name.to_string(), v));
            }
            (true, [a, b]) => {
                let order = n.unwrap();
                let u: usize = a.parse().map_err(|_| err(lineno, format!("bad vertex {a:?}")))?;
                let v: usize = b.parse().map_err(|_| err(lineno, format!("bad vertex {b:?}")))?;
                if u >= order || v >= order {
                    return Err(err(lineno, format!("edge {u} {v} out of range")));
                }
                if u == v {
                    return Err(err(lineno, format!("self-loop at {u}")));
                }
                let e = (u.min(v), u.max(v));
                if edges.contains(&e) {
                    return Err(err(lineno, format!("duplicate edge {u} {v}")));
                }
                edges.push(e);
            }
            (true, _) => {
                return Err(err(lineno, format!("unrecognized line {line:?}")));
            }
        }
    }
    let n = n.ok_or_else(|| err(input.lines().count() + 1, "missing header".into()))?;
    AnyLabeledGraph::from_parts(n, &edges, &labels)
}

/// Emits the edge-list format; parsing the output reproduces the graph and
/// its labels.
pub fn emit_edgelist<W: Word>(g: &LabeledGraph<W>) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.graph.order()).unwrap();
    for (u, v) in g.graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    let mut labels: Vec<(VertexId, &str)> = g.labels().map(|(s, v)| (v, s)).collect();
    labels.sort();
    for (v, name) in labels {
        writeln!(out, "label {name} {}", v.0).unwrap();
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line; vertices get canonical labels `v0..v(n-1)`.
pub fn parse_graph6(line: &str) -> Result<AnyLabeledGraph, FormatError> {
    let err = |byte: usize, msg: String| FormatError::Graph6 { byte, msg };
    let line = line.trim_end();
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input".into()));
    }
    // order: one byte n+63 for n < 63, or 126 then three bytes of an
    // 18-bit big-endian value
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(err(0, "truncated order field".into()));
        }
        if bytes[1] == 126 {
            return Err(err(1, "orders above 258047 are unsupported".into()));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(err(1 + i, format!("byte {b} outside graph6 range")));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if !(63..126).contains(&bytes[0]) {
            return Err(err(0, format!("byte {} outside graph6 range", bytes[0])));
        }
        ((bytes[0] - 63) as usize, 1)
    };
    if n > 128 {
        return Err(FormatError::TooLarge(n));
    }
    if n == 0 {
        return Err(err(0, "order must be positive".into()));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(err(
            pos,
            format!("expected {nbytes} adjacency bytes, found {}", bytes.len() - pos),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    'outer: for j in 1..n {
        for i in 0..j {
            let b = bytes[pos + bit / 6];
            if !(63..127).contains(&b) {
                return Err(err(pos + bit / 6, format!("byte {b} outside graph6 range")));
            }
            if (b - 63) >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // trailing padding bits must be zero
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(err(bytes.len() - 1, "nonzero padding bits".into()));
        }
    }
    pos += nbytes;
    let _ = pos;
    let labels: Vec<(String, usize)> = (0..n).map(|i| (format!("v{i}"), i)).collect();
    AnyLabeledGraph::from_parts(n, &edges, &labels)
}

/// Encodes a graph as one graph6 line (no header).
pub fn emit_graph6<W: Word>(g: &Graph<W>) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(VertexId(i), VertexId(j)) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

/// Parses a graph file, guessing the format: edge lists start with their
/// `n <order>` header (possibly after comments), anything else is graph6.
pub fn parse_auto(input: &str) -> Result<AnyLabeledGraph, FormatError> {
    let first = input
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("n ") => parse_edgelist(input),
        Some(l) => parse_graph6(l),
        None => parse_edgelist(input),
    }
}

/// Reads every graph of a graph6 corpus file, with the source line kept as
/// the graph id.
pub fn load_corpus(path: &Path) -> Result<Vec<(String, AnyLabeledGraph)>, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|e| FormatError::Graph6 {
        byte: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| Ok((l.to_string(), parse_graph6(l)?)))
        .collect()
}
