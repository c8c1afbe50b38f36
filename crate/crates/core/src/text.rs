//! Plain-text formats for ideals, complexes and graphs.
//!
//! Each format accepts `#` comments and blank lines, and an optional
//! `kind: ideal|complex|graph` header so a single front end can dispatch.
//!
//! * ideal: one monomial per line such as `x1^2*x3`, or `1` for the unit.
//!   A `vars: a b c` header fixes the variable order; otherwise variables are
//!   numbered in order of first appearance.
//! * complex: one facet per line, vertices separated by commas, `-` for the
//!   empty facet. A `vertices: a b c` header fixes the ground set.
//! * graph: an `n <count>` header, then one `u v` edge per line.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::complex::{SimplicialComplex, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Ideal,
    Complex,
    Graph,
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ideal" => Ok(Kind::Ideal),
            "complex" => Ok(Kind::Complex),
            "graph" => Ok(Kind::Graph),
            other => Err(Error::InvalidParameter(format!("unknown kind '{other}'"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedIdeal {
    pub ideal: MonomialIdeal,
    pub names: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedComplex {
    pub complex: SimplicialComplex,
    pub names: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Parsed {
    Ideal(NamedIdeal),
    Complex(NamedComplex),
    Graph(Graph),
}

/// `x0 … x{n-1}`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// `x*y^2*z`, or `1` for the unit monomial.
pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let parts: Vec<String> = m
        .support()
        .map(|i| match m.exponent(i) {
            1 => names[i].clone(),
            e => format!("{}^{e}", names[i]),
        })
        .collect();
    parts.join("*")
}

/// Comma-separated vertex names, or `-` for the empty face.
pub fn format_face(face: VertexSet, names: &[String]) -> String {
    if face.is_empty() {
        return "-".to_string();
    }
    face.iter().map(|v| names[v].as_str()).collect::<Vec<_>>().join(",")
}

/// Significant lines with their 1-based numbers, comments stripped.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn header<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(key)?.trim_start();
    rest.strip_prefix(':').map(str::trim)
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Name table that either is fixed by a header or grows on first use.
struct Names {
    list: Vec<String>,
    index: HashMap<String, usize>,
    fixed: bool,
}

impl Names {
    fn open() -> Self {
        Self { list: Vec::new(), index: HashMap::new(), fixed: false }
    }

    fn declare(&mut self, line: usize, declared: &str) -> Result<()> {
        if self.fixed || !self.list.is_empty() {
            return Err(parse_error(line, "names must be declared once, before any data"));
        }
        for name in declared.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
            if !valid_name(name) {
                return Err(parse_error(line, format!("invalid name '{name}'")));
            }
            if self.index.insert(name.to_string(), self.list.len()).is_some() {
                return Err(parse_error(line, format!("duplicate name '{name}'")));
            }
            self.list.push(name.to_string());
        }
        self.fixed = true;
        Ok(())
    }

    fn lookup(&mut self, line: usize, name: &str) -> Result<usize> {
        if let Some(&i) = self.index.get(name) {
            return Ok(i);
        }
        if self.fixed {
            return Err(parse_error(line, format!("undeclared name '{name}'")));
        }
        if !valid_name(name) {
            return Err(parse_error(line, format!("invalid name '{name}'")));
        }
        self.index.insert(name.to_string(), self.list.len());
        self.list.push(name.to_string());
        Ok(self.list.len() - 1)
    }
}

fn check_kind(line: usize, found: &str, expected: Kind) -> Result<()> {
    let kind: Kind = found.parse().map_err(|_| parse_error(line, format!("unknown kind '{found}'")))?;
    if kind != expected {
        return Err(parse_error(line, format!("expected kind {expected:?}, found {kind:?}")));
    }
    Ok(())
}

/// Reads the `kind:` header, if present.
pub fn detect_kind(text: &str) -> Result<Option<Kind>> {
    match lines(text).next() {
        Some((line, first)) => match header(first, "kind") {
            Some(k) => k.parse().map(Some).map_err(|_| parse_error(line, format!("unknown kind '{k}'"))),
            None => Ok(None),
        },
        None => Ok(None),
    }
}

/// Parses a file carrying a `kind:` header.
pub fn parse_any(text: &str) -> Result<Parsed> {
    match detect_kind(text)? {
        Some(Kind::Ideal) => parse_ideal(text).map(Parsed::Ideal),
        Some(Kind::Complex) => parse_complex(text).map(Parsed::Complex),
        Some(Kind::Graph) => parse_graph(text).map(Parsed::Graph),
        None => Err(parse_error(1, "missing 'kind:' header")),
    }
}

pub fn parse_ideal(text: &str) -> Result<NamedIdeal> {
    let mut names = Names::open();
    let mut raw: Vec<(usize, Vec<(usize, u32)>)> = Vec::new();
    for (line, content) in lines(text) {
        if let Some(k) = header(content, "kind") {
            check_kind(line, k, Kind::Ideal)?;
            continue;
        }
        if let Some(v) = header(content, "vars") {
            names.declare(line, v)?;
            continue;
        }
        if content == "0" {
            continue;
        }
        let mut factors = Vec::new();
        for factor in content.split('*').map(str::trim) {
            if factor == "1" {
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e.trim().parse().map_err(|_| parse_error(line, format!("bad exponent in '{factor}'")))?;
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            if name.is_empty() {
                return Err(parse_error(line, format!("empty factor in '{content}'")));
            }
            factors.push((names.lookup(line, name)?, exp));
        }
        raw.push((line, factors));
    }
    let n = names.list.len();
    let mut gens = Vec::with_capacity(raw.len());
    for (line, factors) in raw {
        let mut exps = vec![0u32; n];
        for (i, e) in factors {
            exps[i] = exps[i].checked_add(e).ok_or_else(|| parse_error(line, "exponent overflow"))?;
        }
        gens.push(Monomial::new(exps));
    }
    Ok(NamedIdeal { ideal: MonomialIdeal::minimalize(n, gens)?, names: names.list })
}

pub fn format_ideal(ideal: &MonomialIdeal, names: &[String]) -> String {
    let mut out = String::from("kind: ideal\n");
    writeln!(out, "vars: {}", names.join(" ")).unwrap();
    if ideal.is_zero() {
        out.push_str("0\n");
    }
    for g in ideal.generators() {
        writeln!(out, "{}", format_monomial(g, names)).unwrap();
    }
    out
}

pub fn parse_complex(text: &str) -> Result<NamedComplex> {
    let mut names = Names::open();
    let mut facets = Vec::new();
    for (line, content) in lines(text) {
        if let Some(k) = header(content, "kind") {
            check_kind(line, k, Kind::Complex)?;
            continue;
        }
        if let Some(v) = header(content, "vertices") {
            names.declare(line, v)?;
            continue;
        }
        let mut face = VertexSet::EMPTY;
        if content != "-" {
            for name in content.split(',').map(str::trim) {
                let v = names.lookup(line, name)?;
                if v >= MAX_VERTICES {
                    return Err(parse_error(line, format!("more than {MAX_VERTICES} vertices")));
                }
                face = face.with(v);
            }
        }
        facets.push(face);
    }
    if facets.is_empty() {
        return Err(parse_error(0, "no facets"));
    }
    let complex = SimplicialComplex::from_facets(names.list.len(), facets)?;
    Ok(NamedComplex { complex, names: names.list })
}

pub fn format_complex(complex: &SimplicialComplex, names: &[String]) -> String {
    let mut out = String::from("kind: complex\n");
    let ground: Vec<&str> = complex.ground().iter().map(|v| names[v].as_str()).collect();
    writeln!(out, "vertices: {}", ground.join(" ")).unwrap();
    for f in complex.facets() {
        writeln!(out, "{}", format_face(*f, names)).unwrap();
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (line, content) in lines(text) {
        if let Some(k) = header(content, "kind") {
            check_kind(line, k, Kind::Graph)?;
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number = |s: &str| s.parse::<usize>().map_err(|_| parse_error(line, format!("not a vertex index: '{s}'")));
        match fields.as_slice() {
            ["n", count] if n.is_none() => n = Some(number(count)?),
            [u, v] if n.is_some() => edges.push((line, number(u)?, number(v)?)),
            _ if n.is_none() => return Err(parse_error(line, "expected header 'n <count>'")),
            _ => return Err(parse_error(line, "expected an edge 'u v'")),
        }
    }
    let n = n.ok_or_else(|| parse_error(0, "missing header 'n <count>'"))?;
    for &(line, u, v) in &edges {
        if u >= n || v >= n {
            return Err(parse_error(line, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_error(line, "loops are not allowed"));
        }
    }
    Graph::new(n, edges.into_iter().map(|(_, u, v)| (u, v)))
}

pub fn format_graph(graph: &Graph) -> String {
    let mut out = String::from("kind: graph\n");
    writeln!(out, "n {}", graph.num_vertices()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
