//! Line-oriented text formats for polygons, graphs, matrices, DS sequences
//! and boundary sites.
//!
//! Every format starts with a header line naming the kind and its sizes.
//! Blank lines and `#` comments are ignored. Indices are 0-based, letters of
//! DS sequences are 1-based.

use std::fmt::Write as _;

use polyvis_core::ds::{DsError, DsSequence};
use polyvis_core::geometry::{validate_polygon, GeometryError, Point, Polygon, Rational};
use polyvis_core::graph::{Graph, GraphError};
use polyvis_core::matrix::BitMatrix;
use polyvis_core::visibility::BoundarySite;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input, expected a `{expected}` header")]
    Empty { expected: &'static str },
    #[error("line {line}: expected `{expected}`")]
    Header { line: usize, expected: &'static str },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} {what}, found {found}")]
    Count { what: &'static str, expected: usize, found: usize },
}

/// A polygon file either fails to parse or describes a non-simple polygon.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolygonFileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid polygon: {0}")]
    Invalid(#[from] GeometryError),
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }

    /// Next non-blank line as (1-based line number, tokens).
    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, raw) in self.inner.by_ref() {
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if !tokens.is_empty() {
                return Some((i + 1, tokens));
            }
        }
        None
    }

    fn header(&mut self, keyword: &'static str, expected: &'static str) -> Result<(usize, Vec<&'a str>), ParseError> {
        let (line, tokens) = self.next().ok_or(ParseError::Empty { expected })?;
        if tokens[0] != keyword {
            return Err(ParseError::Header { line, expected });
        }
        Ok((line, tokens[1..].to_vec()))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.next() {
            Some((line, _)) => Err(syntax(line, "unexpected content after the declared entries")),
            None => Ok(()),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn number(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| syntax(line, format!("invalid {what} `{token}`")))
}

fn arity(line: usize, tokens: &[&str], k: usize) -> Result<(), ParseError> {
    if tokens.len() != k {
        return Err(syntax(line, format!("expected {k} fields, found {}", tokens.len())));
    }
    Ok(())
}

fn rational(line: usize, token: &str) -> Result<Rational, ParseError> {
    token.parse().map_err(|_| syntax(line, format!("invalid number `{token}`")))
}

pub fn parse_polygon(text: &str) -> Result<Polygon, PolygonFileError> {
    let mut lines = Lines::new(text);
    let (line, h) = lines.header("polygon", "polygon <n>")?;
    arity(line, &h, 1)?;
    let n = number(line, h[0], "vertex count")?;
    let mut points = Vec::with_capacity(n);
    for found in 0..n {
        let (line, t) = lines.next().ok_or(ParseError::Count { what: "vertices", expected: n, found })?;
        arity(line, &t, 2)?;
        points.push(Point::new(rational(line, t[0])?, rational(line, t[1])?));
    }
    lines.finish()?;
    Ok(validate_polygon(points)?)
}

pub fn write_polygon(p: &Polygon) -> String {
    let mut s = format!("polygon {}\n", p.len());
    for v in p.vertices() {
        writeln!(s, "{} {}", v.x, v.y).expect("writing to a string");
    }
    s
}

/// A graph together with the order it is read in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub cyclic: bool,
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut lines = Lines::new(text);
    let (line, h) = lines.header("graph", "graph <n> <cyclic|ordered>")?;
    arity(line, &h, 2)?;
    let n = number(line, h[0], "vertex count")?;
    let cyclic = match h[1] {
        "cyclic" => true,
        "ordered" => false,
        other => return Err(syntax(line, format!("unknown order `{other}`, expected cyclic or ordered"))),
    };
    let mut graph = Graph::empty(n);
    while let Some((line, t)) = lines.next() {
        if t[0] != "e" {
            return Err(syntax(line, format!("expected an edge line `e i j`, found `{}`", t[0])));
        }
        arity(line, &t, 3)?;
        let (a, b) = (number(line, t[1], "vertex")?, number(line, t[2], "vertex")?);
        graph.add_edge(a, b).map_err(|e: GraphError| syntax(line, e.to_string()))?;
    }
    Ok(GraphFile { graph, cyclic })
}

pub fn write_graph(g: &Graph, cyclic: bool) -> String {
    let mut s = format!("graph {} {}\n", g.n(), if cyclic { "cyclic" } else { "ordered" });
    for e in g.edges() {
        writeln!(s, "e {} {}", e.lo, e.hi).expect("writing to a string");
    }
    s
}

pub fn parse_matrix(text: &str) -> Result<BitMatrix, ParseError> {
    let mut lines = Lines::new(text);
    let (line, h) = lines.header("matrix", "matrix <r> <c>")?;
    arity(line, &h, 2)?;
    let (r, c) = (number(line, h[0], "row count")?, number(line, h[1], "column count")?);
    let mut m = BitMatrix::zeros(r, c);
    // Rows of an r x 0 matrix are empty and therefore not written.
    let rows = if c == 0 { 0 } else { r };
    for i in 0..rows {
        let (line, t) = lines.next().ok_or(ParseError::Count { what: "rows", expected: r, found: i })?;
        arity(line, &t, 1)?;
        let row = t[0].as_bytes();
        if row.len() != c {
            return Err(syntax(line, format!("row has {} entries, expected {c}", row.len())));
        }
        for (j, &ch) in row.iter().enumerate() {
            match ch {
                b'0' => {}
                b'1' => m.set(i, j, true),
                _ => return Err(syntax(line, format!("invalid entry `{}`", ch as char))),
            }
        }
    }
    lines.finish()?;
    Ok(m)
}

pub fn write_matrix(m: &BitMatrix) -> String {
    let mut s = format!("matrix {} {}\n", m.rows(), m.cols());
    if m.cols() > 0 {
        s.push_str(&m.to_string());
        if m.rows() > 0 {
            s.push('\n');
        }
    }
    s
}

pub fn parse_dsseq(text: &str) -> Result<DsSequence, ParseError> {
    let mut lines = Lines::new(text);
    let (line, h) = lines.header("dsseq", "dsseq <n> <length>")?;
    arity(line, &h, 2)?;
    let (n, len) = (number(line, h[0], "alphabet size")?, number(line, h[1], "length")?);
    let mut letters = Vec::with_capacity(len);
    let mut last_line = line;
    while letters.len() < len {
        let (line, t) =
            lines.next().ok_or(ParseError::Count { what: "letters", expected: len, found: letters.len() })?;
        last_line = line;
        for tok in t {
            letters.push(number(line, tok, "letter")?);
        }
    }
    if letters.len() != len {
        return Err(ParseError::Count { what: "letters", expected: len, found: letters.len() });
    }
    lines.finish()?;
    DsSequence::new(n, letters).map_err(|e: DsError| syntax(last_line, e.to_string()))
}

pub fn write_dsseq(seq: &DsSequence) -> String {
    let letters: Vec<String> = seq.letters().iter().map(|l| l.to_string()).collect();
    format!("dsseq {} {}\n{}\n", seq.n(), seq.len(), letters.join(" "))
}

/// Sites file: `sites <m>`, then `m` lines `edge t` with `t` in `[0, 1)`.
pub fn parse_sites(text: &str) -> Result<Vec<BoundarySite>, ParseError> {
    let mut lines = Lines::new(text);
    let (line, h) = lines.header("sites", "sites <m>")?;
    arity(line, &h, 1)?;
    let m = number(line, h[0], "site count")?;
    let mut sites = Vec::with_capacity(m);
    for found in 0..m {
        let (line, t) = lines.next().ok_or(ParseError::Count { what: "sites", expected: m, found })?;
        arity(line, &t, 2)?;
        sites.push(BoundarySite::new(number(line, t[0], "edge index")?, rational(line, t[1])?));
    }
    lines.finish()?;
    Ok(sites)
}

pub fn write_sites(sites: &[BoundarySite]) -> String {
    let mut s = format!("sites {}\n", sites.len());
    for site in sites {
        writeln!(s, "{} {}", site.edge_index, site.t).expect("writing to a string");
    }
    s
}
