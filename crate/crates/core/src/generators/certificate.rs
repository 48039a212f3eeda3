//! Sidecar maps from source objects of a reduction to instance objects.
//!
//! Text form, all numbers 1-based:
//! ```text
//! cert clean3sat | mis | gadget
//! terminals <s> <t>
//! flip <var>
//! var <i> pos1 <e> pos2 <e> nega <e> negb <e>
//! clause <j> <e>...
//! mis <class> <vertex> <edge>
//! gadget <orig-vertex> <lo> <hi>
//! ```

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::model::{Cut, Instance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertKind {
    Clean3Sat,
    Mis,
    Gadget,
}

impl CertKind {
    pub fn name(self) -> &'static str {
        match self {
            CertKind::Clean3Sat => "clean3sat",
            CertKind::Mis => "mis",
            CertKind::Gadget => "gadget",
        }
    }
}

impl fmt::Display for CertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The four decision edges of one variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarEdges {
    /// Path edges of the two positive occurrences.
    pub pos1: usize,
    pub pos2: usize,
    /// `a_i v` and `b_i v` of the negative occurrence.
    pub nega: usize,
    pub negb: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MisEntry {
    pub class: usize,
    pub vertex: usize,
    pub edge: usize,
}

/// Vertices `lo..=hi` replace original vertex `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetRange {
    pub vertex: usize,
    pub lo: usize,
    pub hi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub kind: CertKind,
    pub terminals: Option<(usize, usize)>,
    /// Variables whose literals were negated during normalization.
    pub flipped: Vec<usize>,
    pub vars: Vec<VarEdges>,
    /// Path edges per clause, from `s` to `t`.
    pub clauses: Vec<Vec<usize>>,
    pub mis: Vec<MisEntry>,
    pub gadgets: Vec<GadgetRange>,
}

impl ReductionCertificate {
    pub fn new(kind: CertKind) -> Self {
        ReductionCertificate {
            kind,
            terminals: None,
            flipped: Vec::new(),
            vars: Vec::new(),
            clauses: Vec::new(),
            mis: Vec::new(),
            gadgets: Vec::new(),
        }
    }

    /// Checks that every map lands in range and is injective.
    pub fn validate(&self, inst: &Instance) -> Result<()> {
        let n = inst.vertex_count();
        let m = inst.edge_count();
        let bad = |msg: String| Err(Error::InvalidParameter(format!("certificate: {msg}")));
        if let Some((s, t)) = self.terminals {
            if s >= n || t >= n || s == t {
                return bad(format!("terminals {} {} out of range", s + 1, t + 1));
            }
        }
        let mut seen = HashSet::new();
        let decision = self
            .vars
            .iter()
            .flat_map(|v| [v.pos1, v.pos2, v.nega, v.negb])
            .chain(self.mis.iter().map(|e| e.edge));
        for e in decision {
            if e >= m || !seen.insert(e) {
                return bad(format!("edge {} out of range or mapped twice", e + 1));
            }
        }
        let mut path_edges = HashSet::new();
        for e in self.clauses.iter().flatten() {
            if *e >= m || !path_edges.insert(*e) {
                return bad(format!("clause edge {} out of range or repeated", e + 1));
            }
        }
        let mut next = 0;
        for g in &self.gadgets {
            if g.lo != next || g.hi < g.lo || g.hi >= n {
                return bad(format!("gadget range {}..{} invalid", g.lo + 1, g.hi + 1));
            }
            next = g.hi + 1;
        }
        Ok(())
    }

    /// Truth assignment of the source formula read off a conflict-free cut:
    /// a variable is false exactly when both of its `a v` and `b v` edges are
    /// cut. Flipped variables are flipped back.
    pub fn decode_assignment(&self, cut: &Cut) -> Result<Vec<bool>> {
        if self.kind != CertKind::Clean3Sat {
            return Err(Error::InvalidParameter(format!(
                "cannot decode an assignment from a {} certificate",
                self.kind
            )));
        }
        let mut values: Vec<bool> = self
            .vars
            .iter()
            .map(|v| !(cut.contains(v.nega) && cut.contains(v.negb)))
            .collect();
        for &x in &self.flipped {
            values[x] = !values[x];
        }
        Ok(values)
    }

    /// `(class, vertex)` for every cut path edge.
    pub fn decode_selection(&self, cut: &Cut) -> Result<Vec<(usize, usize)>> {
        if self.kind != CertKind::Mis {
            return Err(Error::InvalidParameter(format!(
                "cannot decode a selection from a {} certificate",
                self.kind
            )));
        }
        Ok(self
            .mis
            .iter()
            .filter(|e| cut.contains(e.edge))
            .map(|e| (e.class, e.vertex))
            .collect())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("cert {}\n", self.kind);
        if let Some((s, t)) = self.terminals {
            writeln!(out, "terminals {} {}", s + 1, t + 1).unwrap();
        }
        for x in &self.flipped {
            writeln!(out, "flip {}", x + 1).unwrap();
        }
        for (i, v) in self.vars.iter().enumerate() {
            writeln!(
                out,
                "var {} pos1 {} pos2 {} nega {} negb {}",
                i + 1,
                v.pos1 + 1,
                v.pos2 + 1,
                v.nega + 1,
                v.negb + 1
            )
            .unwrap();
        }
        for (j, edges) in self.clauses.iter().enumerate() {
            let list: Vec<String> = edges.iter().map(|e| (e + 1).to_string()).collect();
            writeln!(out, "clause {} {}", j + 1, list.join(" ")).unwrap();
        }
        for e in &self.mis {
            writeln!(out, "mis {} {} {}", e.class + 1, e.vertex + 1, e.edge + 1).unwrap();
        }
        for g in &self.gadgets {
            writeln!(out, "gadget {} {} {}", g.vertex + 1, g.lo + 1, g.hi + 1).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cert: Option<ReductionCertificate> = None;
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
            let Some(&head) = toks.first() else {
                continue;
            };
            let num = |t: &str| -> Result<usize> {
                match t.parse::<usize>() {
                    Ok(x) if x > 0 => Ok(x - 1),
                    _ => Err(Error::parse(ln, format!("expected a 1-based index, got `{t}`"))),
                }
            };
            let nums = |from: usize| -> Result<Vec<usize>> {
                toks[from..].iter().map(|t| num(t)).collect()
            };
            let arity = |want: usize| -> Result<()> {
                if toks.len() == want {
                    Ok(())
                } else {
                    Err(Error::parse(ln, format!("`{head}` line needs {} fields", want - 1)))
                }
            };
            if head == "cert" {
                arity(2)?;
                if cert.is_some() {
                    return Err(Error::parse(ln, "second `cert` header"));
                }
                let kind = match toks[1] {
                    "clean3sat" => CertKind::Clean3Sat,
                    "mis" => CertKind::Mis,
                    "gadget" => CertKind::Gadget,
                    other => return Err(Error::parse(ln, format!("unknown kind `{other}`"))),
                };
                cert = Some(ReductionCertificate::new(kind));
                continue;
            }
            let c = cert
                .as_mut()
                .ok_or_else(|| Error::parse(ln, "entry before `cert` header"))?;
            match head {
                "terminals" => {
                    arity(3)?;
                    let v = nums(1)?;
                    c.terminals = Some((v[0], v[1]));
                }
                "flip" => {
                    arity(2)?;
                    c.flipped.push(nums(1)?[0]);
                }
                "var" => {
                    arity(10)?;
                    let labels = [(2, "pos1"), (4, "pos2"), (6, "nega"), (8, "negb")];
                    if labels.iter().any(|&(at, name)| toks[at] != name) {
                        return Err(Error::parse(ln, "expected `var i pos1 e pos2 e nega e negb e`"));
                    }
                    if num(toks[1])? != c.vars.len() {
                        return Err(Error::parse(ln, "variables must be listed in order"));
                    }
                    c.vars.push(VarEdges {
                        pos1: num(toks[3])?,
                        pos2: num(toks[5])?,
                        nega: num(toks[7])?,
                        negb: num(toks[9])?,
                    });
                }
                "clause" => {
                    if toks.len() < 2 {
                        return Err(Error::parse(ln, "`clause` line needs an index"));
                    }
                    let v = nums(1)?;
                    if v[0] != c.clauses.len() {
                        return Err(Error::parse(ln, "clauses must be listed in order"));
                    }
                    c.clauses.push(v[1..].to_vec());
                }
                "mis" => {
                    arity(4)?;
                    let v = nums(1)?;
                    c.mis.push(MisEntry {
                        class: v[0],
                        vertex: v[1],
                        edge: v[2],
                    });
                }
                "gadget" => {
                    arity(4)?;
                    let v = nums(1)?;
                    c.gadgets.push(GadgetRange {
                        vertex: v[0],
                        lo: v[1],
                        hi: v[2],
                    });
                }
                other => return Err(Error::parse(ln, format!("unknown line type `{other}`"))),
            }
        }
        cert.ok_or_else(|| Error::parse(0, "missing `cert` header"))
    }
}
