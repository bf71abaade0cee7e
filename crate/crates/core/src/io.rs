//! The plain-text graph format.
//!
//! ```text
//! # comment lines start with '#'
//! <n_a> <n_b> <m>
//! <a> <b>        (m lines, 0-indexed, file order is stream order)
//! ```

use std::io::{self, BufRead, BufWriter, Write};
use std::path::Path;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Edge, GraphError};
use crate::stream::EdgeSource;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: u64, found: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn parse_fields<const N: usize>(text: &str, line: usize) -> Result<[u64; N], ParseError> {
    let mut out = [0u64; N];
    let mut fields = text.split_ascii_whitespace();
    for slot in out.iter_mut() {
        let f = fields.next().ok_or_else(|| syntax(line, format!("expected {N} fields")))?;
        *slot = f.parse().map_err(|_| syntax(line, format!("not a non-negative integer: {f:?}")))?;
    }
    if fields.next().is_some() {
        return Err(syntax(line, format!("expected {N} fields")));
    }
    Ok(out)
}

fn to_u32(v: u64, line: usize) -> Result<u32, ParseError> {
    u32::try_from(v).map_err(|_| syntax(line, format!("{v} exceeds the u32 vertex range")))
}

/// Reads a graph. Duplicate edges and out-of-range endpoints are errors.
pub fn read_graph<R: BufRead>(reader: R) -> Result<BipartiteGraph, ParseError> {
    let mut header: Option<(u32, u32, u64)> = None;
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let [n_a, n_b, m] = parse_fields::<3>(text, lineno)?;
                header = Some((to_u32(n_a, lineno)?, to_u32(n_b, lineno)?, m));
                edges.reserve(m.min(1 << 24) as usize);
            }
            Some((_, _, m)) => {
                if edges.len() as u64 == m {
                    return Err(ParseError::EdgeCount { expected: m, found: m + 1 });
                }
                let [a, b] = parse_fields::<2>(text, lineno)?;
                edges.push(Edge::new(to_u32(a, lineno)?, to_u32(b, lineno)?));
            }
        }
    }
    let (n_a, n_b, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() as u64 != m {
        return Err(ParseError::EdgeCount { expected: m, found: edges.len() as u64 });
    }
    Ok(BipartiteGraph::new(n_a, n_b, edges)?)
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    read_graph(text.as_bytes())
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<BipartiteGraph, ParseError> {
    let f = std::fs::File::open(path)?;
    read_graph(io::BufReader::with_capacity(1 << 20, f))
}

/// Writes any edge source in the text format, streaming its edges.
pub fn write_source<W: Write, S: EdgeSource + ?Sized>(writer: W, source: &S) -> io::Result<()> {
    let mut w = BufWriter::with_capacity(1 << 20, writer);
    writeln!(w, "{} {} {}", source.n_a(), source.n_b(), source.edge_count())?;
    let mut buf = itoa_buf();
    for e in source.edges() {
        write_edge_line(&mut w, e, &mut buf)?;
    }
    w.flush()
}

pub fn write_graph<W: Write>(writer: W, g: &BipartiteGraph) -> io::Result<()> {
    write_source(writer, g)
}

pub fn write_graph_file(path: impl AsRef<Path>, g: &BipartiteGraph) -> io::Result<()> {
    write_source(std::fs::File::create(path)?, g)
}

pub fn to_text(g: &BipartiteGraph) -> String {
    let mut out = Vec::new();
    write_graph(&mut out, g).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("format is ASCII")
}

// Edge lines dominate output for the quadratic-size generators, so skip the
// formatting machinery.
fn itoa_buf() -> [u8; 24] {
    [0; 24]
}

fn write_edge_line<W: Write>(w: &mut W, e: Edge, buf: &mut [u8; 24]) -> io::Result<()> {
    let mut pos = buf.len();
    buf[pos - 1] = b'\n';
    pos -= 1;
    pos = push_decimal(buf, pos, e.b);
    pos -= 1;
    buf[pos] = b' ';
    pos = push_decimal(buf, pos, e.a);
    w.write_all(&buf[pos..])
}

fn push_decimal(buf: &mut [u8; 24], mut pos: usize, mut v: u32) -> usize {
    loop {
        pos -= 1;
        buf[pos] = b'0' + (v % 10) as u8;
        v /= 10;
        if v == 0 {
            return pos;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_graph("# a path\n2 2 3\n0 0\n# mid\n0 1\n1 1\n").unwrap();
        assert_eq!(g.n_a(), 2);
        assert_eq!(g.edges(), &[Edge::new(0, 0), Edge::new(0, 1), Edge::new(1, 1)]);
    }

    #[test]
    fn writes_exact_text() {
        let g = BipartiteGraph::new(3, 12, vec![Edge::new(2, 11), Edge::new(0, 0)]).unwrap();
        assert_eq!(to_text(&g), "3 12 2\n2 11\n0 0\n");
    }

    #[test]
    fn roundtrip() {
        let g = BipartiteGraph::new(5, 4, vec![Edge::new(4, 3), Edge::new(1, 0), Edge::new(0, 3)]).unwrap();
        assert_eq!(parse_graph(&to_text(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_graph(""), Err(ParseError::MissingHeader)));
        assert!(matches!(parse_graph("1 1 2\n0 0\n"), Err(ParseError::EdgeCount { expected: 2, found: 1 })));
        assert!(matches!(parse_graph("1 1 1\n0 0\n0 0\n"), Err(ParseError::EdgeCount { .. })));
        assert!(matches!(parse_graph("1 1 1\n0 x\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("1 1 1\n0 0 0\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("2 2 2\n0 1\n0 1\n"), Err(ParseError::Graph(GraphError::Duplicate { .. }))));
        assert!(matches!(parse_graph("2 2 1\n2 0\n"), Err(ParseError::Graph(GraphError::OutOfRange { .. }))));
        assert!(matches!(parse_graph("-1 2 0\n"), Err(ParseError::Syntax { line: 1, .. })));
    }
}
