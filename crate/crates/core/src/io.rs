//! Line-oriented text format for the three models, and DOT export.
//!
//! ```text
//! # comments run to end of line
//! format: tau            # sigma | tau | colored
//! n: 6                   # half-edges / flags / graph vertices
//! tau0: (1 2)(3 5)(4 6)
//! tau1: (1 2)(3 4)(5 6)
//! tau2: (1 6)(2 3)(4 5)
//! ```
//!
//! A sigma document has `sigma_v:`, `sigma_e:` and an optional `sigma_f:`
//! (checked against `(sigma_e sigma_v)^-1` when present). An optional
//! `halfedges:` line lists the half-edge labels when they are not all of
//! `1..n`. A colored document has `colors: <D+1>` followed by one
//! `edge: u v c` line per edge.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::colored::ColoredGraph;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::sigma::OrientedHypermap;
use crate::tau::FlagHypermap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Sigma(OrientedHypermap),
    Tau(FlagHypermap),
    Colored(ColoredGraph),
}

impl Document {
    pub fn format_name(&self) -> &'static str {
        match self {
            Document::Sigma(_) => "sigma",
            Document::Tau(_) => "tau",
            Document::Colored(_) => "colored",
        }
    }
}

impl From<OrientedHypermap> for Document {
    fn from(hm: OrientedHypermap) -> Self {
        Document::Sigma(hm)
    }
}

impl From<FlagHypermap> for Document {
    fn from(hm: FlagHypermap) -> Self {
        Document::Tau(hm)
    }
}

impl From<ColoredGraph> for Document {
    fn from(g: ColoredGraph) -> Self {
        Document::Colored(g)
    }
}

struct Line<'a> {
    number: usize,
    key: &'a str,
    value: &'a str,
    /// 1-based column where `value` starts.
    value_column: usize,
}

fn split_lines(text: &str) -> Result<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let content = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let colon = content.find(':').ok_or_else(|| {
            let col = content.len() - content.trim_start().len() + 1;
            Error::parse(number, col, "expected `key: value`")
        })?;
        let key = content[..colon].trim();
        let rest = &content[colon + 1..];
        let lead = rest.len() - rest.trim_start().len();
        out.push(Line {
            number,
            key,
            value: rest.trim(),
            value_column: colon + 2 + lead,
        });
    }
    Ok(out)
}

fn parse_usize(line: &Line<'_>) -> Result<usize> {
    line.value.parse().map_err(|_| {
        Error::parse(
            line.number,
            line.value_column,
            format!("expected an integer, found `{}`", line.value),
        )
    })
}

fn parse_perm(line: &Line<'_>, n: usize) -> Result<Permutation> {
    Permutation::parse(line.value, n).map_err(|e| match e {
        Error::Parse {
            column, message, ..
        } => Error::parse(line.number, line.value_column + column - 1, message),
        other => Error::Validation {
            line: line.number,
            message: other.to_string(),
        },
    })
}

fn validation(line: usize, e: Error) -> Error {
    Error::Validation {
        line,
        message: e.to_string(),
    }
}

/// Parses a document. Syntax problems are [`Error::Parse`]; well-formed text
/// describing an invalid structure is [`Error::Validation`].
pub fn parse(text: &str) -> Result<Document> {
    let lines = split_lines(text)?;
    let last_line = text.lines().count().max(1);
    let mut iter = lines.into_iter();
    let format = iter
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty document"))?;
    if format.key != "format" {
        return Err(Error::parse(
            format.number,
            1,
            "first line must be `format:`",
        ));
    }
    let size = iter
        .next()
        .ok_or_else(|| Error::parse(last_line, 1, "missing `n:` line"))?;
    if size.key != "n" {
        return Err(Error::parse(size.number, 1, "second line must be `n:`"));
    }
    let n = parse_usize(&size)?;
    if n == 0 {
        return Err(Error::parse(
            size.number,
            size.value_column,
            "n must be positive",
        ));
    }
    let body: Vec<Line<'_>> = iter.collect();
    match format.value {
        "tau" => parse_tau(n, &body, last_line).map(Document::Tau),
        "sigma" => parse_sigma(n, &body, last_line).map(Document::Sigma),
        "colored" => parse_colored(n, &body, last_line).map(Document::Colored),
        other => Err(Error::parse(
            format.number,
            format.value_column,
            format!("unknown format `{other}`"),
        )),
    }
}

fn keyed<'a, 'b>(body: &'b [Line<'a>], allowed: &[&str]) -> Result<HashMap<&'a str, &'b Line<'a>>> {
    let mut map = HashMap::new();
    for line in body {
        if !allowed.contains(&line.key) {
            return Err(Error::parse(
                line.number,
                1,
                format!("unexpected key `{}`", line.key),
            ));
        }
        if map.insert(line.key, line).is_some() {
            return Err(Error::parse(
                line.number,
                1,
                format!("duplicate key `{}`", line.key),
            ));
        }
    }
    Ok(map)
}

fn required<'a, 'b>(
    map: &HashMap<&str, &'b Line<'a>>,
    key: &str,
    last_line: usize,
) -> Result<&'b Line<'a>> {
    map.get(key)
        .copied()
        .ok_or_else(|| Error::parse(last_line, 1, format!("missing `{key}:` line")))
}

fn parse_tau(n: usize, body: &[Line<'_>], last_line: usize) -> Result<FlagHypermap> {
    let map = keyed(body, &["tau0", "tau1", "tau2"])?;
    let mut taus = Vec::with_capacity(3);
    for key in ["tau0", "tau1", "tau2"] {
        let line = required(&map, key, last_line)?;
        let t = parse_perm(line, n)?;
        if !t.is_involution() || !t.is_fixed_point_free() {
            return Err(Error::Validation {
                line: line.number,
                message: format!("{key} is not a fixed-point-free involution"),
            });
        }
        taus.push(t);
    }
    let [t0, t1, t2]: [Permutation; 3] = taus.try_into().expect("three taus");
    FlagHypermap::new(t0, t1, t2).map_err(|e| validation(last_line, e))
}

fn parse_sigma(n: usize, body: &[Line<'_>], last_line: usize) -> Result<OrientedHypermap> {
    let map = keyed(body, &["halfedges", "sigma_v", "sigma_e", "sigma_f"])?;
    let labels = match map.get("halfedges") {
        Some(line) => {
            let mut labels = Vec::new();
            let mut col = line.value_column;
            for token in line.value.split(' ') {
                if !token.is_empty() {
                    let x: usize = token.parse().map_err(|_| {
                        Error::parse(
                            line.number,
                            col,
                            format!("expected an integer, found `{token}`"),
                        )
                    })?;
                    labels.push(x);
                }
                col += token.len() + 1;
            }
            if labels.is_empty() {
                return Err(Error::parse(
                    line.number,
                    line.value_column,
                    "no half-edges listed",
                ));
            }
            labels
        }
        None => (1..=n).collect(),
    };
    let v_line = required(&map, "sigma_v", last_line)?;
    let e_line = required(&map, "sigma_e", last_line)?;
    let sv = parse_perm(v_line, n)?;
    let se = parse_perm(e_line, n)?;
    match map.get("sigma_f") {
        Some(f_line) => {
            let sf = parse_perm(f_line, n)?;
            OrientedHypermap::from_parts(labels, sv, se, sf)
                .map_err(|e| validation(f_line.number, e))
        }
        None => {
            OrientedHypermap::with_labels(labels, sv, se).map_err(|e| validation(e_line.number, e))
        }
    }
}

fn parse_colored(n: usize, body: &[Line<'_>], last_line: usize) -> Result<ColoredGraph> {
    let (first, edges) = body
        .split_first()
        .ok_or_else(|| Error::parse(last_line, 1, "missing `colors:` line"))?;
    if first.key != "colors" {
        return Err(Error::parse(first.number, 1, "expected `colors:` line"));
    }
    let colors = parse_usize(first)?;
    if colors < 2 {
        return Err(Error::Validation {
            line: first.number,
            message: "at least 2 colors are required".into(),
        });
    }
    // partner[c][v]
    let mut partner = vec![vec![0usize; n + 1]; colors];
    for line in edges {
        if line.key != "edge" {
            return Err(Error::parse(
                line.number,
                1,
                format!("unexpected key `{}`", line.key),
            ));
        }
        let fields: Vec<&str> = line.value.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::parse(
                line.number,
                line.value_column,
                "expected `edge: u v c`",
            ));
        }
        let mut nums = [0usize; 3];
        for (k, f) in fields.iter().enumerate() {
            nums[k] = f.parse().map_err(|_| {
                Error::parse(
                    line.number,
                    line.value_column,
                    format!("expected an integer, found `{f}`"),
                )
            })?;
        }
        let [u, v, c] = nums;
        let bad = |message: String| Error::Validation {
            line: line.number,
            message,
        };
        if c >= colors {
            return Err(bad(format!("color {c} out of range 0..{colors}")));
        }
        if u == 0 || u > n || v == 0 || v > n {
            return Err(bad(format!("vertex out of range 1..={n}")));
        }
        if u == v {
            return Err(bad(format!("loop at vertex {u}")));
        }
        for x in [u, v] {
            if partner[c][x] != 0 {
                return Err(bad(format!("vertex {x} has two edges of color {c}")));
            }
        }
        partner[c][u] = v;
        partner[c][v] = u;
    }
    let mut matchings = Vec::with_capacity(colors);
    for (c, row) in partner.iter().enumerate() {
        if let Some(x) = (1..=n).find(|&x| row[x] == 0) {
            return Err(Error::Validation {
                line: last_line,
                message: format!("vertex {x} has no edge of color {c}"),
            });
        }
        matchings.push(
            Permutation::from_images(row[1..].to_vec()).map_err(|e| validation(last_line, e))?,
        );
    }
    ColoredGraph::new(matchings).map_err(|e| validation(last_line, e))
}

/// Canonical text form.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Tau(hm) => {
            let _ = writeln!(out, "format: tau");
            let _ = writeln!(out, "n: {}", hm.n_flags());
            for (i, t) in hm.taus().iter().enumerate() {
                let _ = writeln!(out, "tau{i}: {t}");
            }
        }
        Document::Sigma(hm) => {
            let _ = writeln!(out, "format: sigma");
            let _ = writeln!(out, "n: {}", hm.degree());
            if !hm.has_compact_labels() {
                let labels: Vec<String> = hm.labels().iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "halfedges: {}", labels.join(" "));
            }
            let _ = writeln!(out, "sigma_v: {}", hm.sigma_v());
            let _ = writeln!(out, "sigma_e: {}", hm.sigma_e());
            let _ = writeln!(out, "sigma_f: {}", hm.sigma_f());
        }
        Document::Colored(g) => {
            let _ = writeln!(out, "format: colored");
            let _ = writeln!(out, "n: {}", g.n_vertices());
            let _ = writeln!(out, "colors: {}", g.n_colors());
            for (u, v, c) in g.edges() {
                let _ = writeln!(out, "edge: {u} {v} {c}");
            }
        }
    }
    out
}

const PALETTE: [&str; 8] = [
    "red", "blue", "green3", "orange", "purple", "brown", "magenta", "cyan4",
];

/// Deterministic DOT rendering: nodes `1..n`, then one edge per matched pair
/// per color, sorted by color then smaller endpoint. The color index is the
/// edge label; the stroke color comes from a fixed palette.
pub fn export_dot(g: &ColoredGraph) -> String {
    let mut out = String::new();
    out.push_str("graph colored {\n");
    let _ = writeln!(out, "  // colors: {}", g.n_colors());
    out.push_str("  node [shape=circle];\n");
    for v in 1..=g.n_vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v, c) in g.edges() {
        let _ = writeln!(
            out,
            "  {u} -- {v} [color=\"{}\", label=\"{c}\"];",
            PALETTE[c % PALETTE.len()]
        );
    }
    out.push_str("}\n");
    out
}
