//! Line-oriented text formats. Vertices and edge indices are 1-based on disk.
//!
//! Instance:
//! ```text
//! p cfc <n> <m> <k>
//! e <u> <v>      (m lines, edge index = order of appearance)
//! x <i> <j>      (k lines, conflicting edge indices)
//! ```
//! Cut certificate: `cut <size>` followed by the edge indices, or `nocut`.
//! Plain graph: `p edge <n> <m>` followed by `e` lines.
//! Classes: the class count, then one line of vertex ids per class.
//!
//! Blank lines, lines whose first token is `c`, and everything after a `#`
//! are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{ConflictGraph, Cut, Edge, Instance, MultiGraph};

/// Non-comment lines with their 1-based line numbers, split into tokens.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

fn number(line: usize, tok: Option<&&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("{what} `{tok}` is not a non-negative integer")))
}

fn one_based(line: usize, tok: Option<&&str>, what: &str, bound: usize) -> Result<usize> {
    let x = number(line, tok, what)?;
    if x == 0 || x > bound {
        return Err(Error::parse(line, format!("{what} {x} outside 1..={bound}")));
    }
    Ok(x - 1)
}

fn expect_len(line: usize, tokens: &[&str], len: usize) -> Result<()> {
    if tokens.len() != len {
        return Err(Error::parse(
            line,
            format!("expected {len} fields, found {}", tokens.len()),
        ));
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty input, expected `p cfc` header"))?;
    if header.len() != 5 || header[0] != "p" || header[1] != "cfc" {
        return Err(Error::parse(hl, "expected header `p cfc <n> <m> <k>`"));
    }
    let n = number(hl, header.get(2), "vertex count")?;
    let m = number(hl, header.get(3), "edge count")?;
    let k = number(hl, header.get(4), "conflict count")?;

    let mut edges = Vec::with_capacity(m);
    let mut pairs = Vec::with_capacity(k);
    let mut last_line = hl;
    for (ln, tokens) in lines {
        last_line = ln;
        match tokens[0] {
            "e" => {
                expect_len(ln, &tokens, 3)?;
                if edges.len() == m {
                    return Err(Error::parse(ln, format!("more than the declared {m} edges")));
                }
                let u = one_based(ln, tokens.get(1), "vertex", n)?;
                let v = one_based(ln, tokens.get(2), "vertex", n)?;
                if u == v {
                    return Err(Error::parse(ln, format!("loop at vertex {}", u + 1)));
                }
                edges.push(Edge::new(u, v));
            }
            "x" => {
                expect_len(ln, &tokens, 3)?;
                if pairs.len() == k {
                    return Err(Error::parse(ln, format!("more than the declared {k} conflicts")));
                }
                let i = one_based(ln, tokens.get(1), "edge index", m)?;
                let j = one_based(ln, tokens.get(2), "edge index", m)?;
                if i == j {
                    return Err(Error::parse(ln, format!("edge {} conflicts with itself", i + 1)));
                }
                pairs.push((i, j));
            }
            other => return Err(Error::parse(ln, format!("unknown line type `{other}`"))),
        }
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    if pairs.len() != k {
        return Err(Error::parse(
            last_line,
            format!("declared {k} conflicts, found {}", pairs.len()),
        ));
    }
    let graph = MultiGraph::new(n, edges)?;
    let conflicts = ConflictGraph::new(m, pairs)?;
    Instance::new(graph, conflicts)
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let g = inst.graph();
    let c = inst.conflicts();
    writeln!(
        out,
        "p cfc {} {} {}",
        g.vertex_count(),
        g.edge_count(),
        c.pair_count()
    )
    .unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {}", e.u + 1, e.v + 1).unwrap();
    }
    for &(i, j) in c.pairs() {
        writeln!(out, "x {} {}", i + 1, j + 1).unwrap();
    }
    out
}

/// Parses a cut certificate. `Ok(None)` stands for `nocut`.
pub fn parse_cut(text: &str) -> Result<Option<Cut>> {
    let mut tokens = content_lines(text).flat_map(|(ln, toks)| toks.into_iter().map(move |t| (ln, t)));
    let (ln, head) = tokens
        .next()
        .ok_or_else(|| Error::parse(0, "empty certificate"))?;
    match head {
        "nocut" => Ok(None),
        "cut" => {
            let (ln, size) = tokens
                .next()
                .ok_or_else(|| Error::parse(ln, "missing cut size"))?;
            let size = number(ln, Some(&size), "cut size")?;
            let mut edges = Vec::with_capacity(size);
            let mut last = ln;
            for (ln, tok) in tokens {
                last = ln;
                edges.push(one_based(ln, Some(&tok), "edge index", usize::MAX)?);
            }
            if edges.len() != size {
                return Err(Error::parse(
                    last,
                    format!("declared {size} edges, found {}", edges.len()),
                ));
            }
            Ok(Some(Cut::new(edges)))
        }
        other => Err(Error::parse(ln, format!("expected `cut` or `nocut`, found `{other}`"))),
    }
}

pub fn write_cut(cut: Option<&Cut>) -> String {
    match cut {
        None => "nocut\n".to_string(),
        Some(cut) => {
            let indices: Vec<String> = cut.edges().iter().map(|e| (e + 1).to_string()).collect();
            format!("cut {}\n{}\n", cut.len(), indices.join(" "))
        }
    }
}

/// Parses a plain graph in `p edge <n> <m>` form.
pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty input, expected `p edge` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "edge" {
        return Err(Error::parse(hl, "expected header `p edge <n> <m>`"));
    }
    let n = number(hl, header.get(2), "vertex count")?;
    let m = number(hl, header.get(3), "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hl;
    for (ln, tokens) in lines {
        last_line = ln;
        if tokens[0] != "e" {
            return Err(Error::parse(ln, format!("unknown line type `{}`", tokens[0])));
        }
        expect_len(ln, &tokens, 3)?;
        let u = one_based(ln, tokens.get(1), "vertex", n)?;
        let v = one_based(ln, tokens.get(2), "vertex", n)?;
        if u == v {
            return Err(Error::parse(ln, format!("loop at vertex {}", u + 1)));
        }
        edges.push(Edge::new(u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    MultiGraph::new(n, edges)
}

pub fn write_graph(graph: &MultiGraph) -> String {
    let mut out = format!("p edge {} {}\n", graph.vertex_count(), graph.edge_count());
    for e in graph.edges() {
        writeln!(out, "e {} {}", e.u + 1, e.v + 1).unwrap();
    }
    out
}

/// Parses a vertex partition: the class count, then one line per class with
/// 1-based vertex ids. Vertex bounds are checked by the consumer.
pub fn parse_classes(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty input, expected class count"))?;
    expect_len(hl, &header, 1)?;
    let k = number(hl, header.first(), "class count")?;
    let mut classes = Vec::with_capacity(k);
    let mut last_line = hl;
    for (ln, tokens) in lines {
        last_line = ln;
        let class = tokens
            .iter()
            .map(|t| one_based(ln, Some(t), "vertex", usize::MAX))
            .collect::<Result<Vec<_>>>()?;
        classes.push(class);
    }
    if classes.len() != k {
        return Err(Error::parse(
            last_line,
            format!("declared {k} classes, found {}", classes.len()),
        ));
    }
    Ok(classes)
}

pub fn write_classes(classes: &[Vec<usize>]) -> String {
    let mut out = format!("{}\n", classes.len());
    for class in classes {
        let ids: Vec<String> = class.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "{}", ids.join(" ")).unwrap();
    }
    out
}
