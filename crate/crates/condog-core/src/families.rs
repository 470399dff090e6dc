//! Constructors for the graph families the solver is exercised on, with
//! labeled special vertices.
//!
//! The `H`-family is a chain `u_0 .. u_{n+1}` where each interior chain edge
//! `u_i u_{i+1}` (for `i` in `1..n`) carries a gadget pair `x_i, y_i` with
//! edges `u_i x_i`, `x_i y_i`, `y_i u_{i+1}`, `u_{i+1} x_i`. The remaining
//! families are assembled from it or defined directly below.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::{VertexId, VertexSet, Word};
use crate::error::Error;
use crate::graph::{Graph, LabeledGraph};

/// A parsed family request, e.g. `H:6` or `C2:1,3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub params: Vec<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FamilyName {
    H,
    Hprime,
    C2,
    D,
    Gnr,
    Path,
    Cycle,
    Complete,
    Star,
}

impl FamilySpec {
    /// Parses `NAME:p1,p2,..` (name matched case-insensitively).
    pub fn parse(s: &str) -> Result<Self, Error> {
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n, p),
            None => (s, ""),
        };
        let name = match name.to_ascii_lowercase().as_str() {
            "h" => FamilyName::H,
            "hprime" | "h'" => FamilyName::Hprime,
            "c2" => FamilyName::C2,
            "d" => FamilyName::D,
            "gnr" | "g" => FamilyName::Gnr,
            "path" => FamilyName::Path,
            "cycle" => FamilyName::Cycle,
            "complete" => FamilyName::Complete,
            "star" => FamilyName::Star,
            _ => return Err(Error::BadFamilyParams("unknown family name")),
        };
        let params = params
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::BadFamilyParams("parameters must be naturals"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FamilySpec { name, params })
    }

    pub fn build<W: Word>(&self) -> Result<LabeledGraph<W>, Error> {
        let one = |spec: &Self| -> Result<usize, Error> {
            match spec.params[..] {
                [a] => Ok(a),
                _ => Err(Error::BadFamilyParams("expected one parameter")),
            }
        };
        let two = |spec: &Self| -> Result<(usize, usize), Error> {
            match spec.params[..] {
                [a, b] => Ok((a, b)),
                _ => Err(Error::BadFamilyParams("expected two parameters")),
            }
        };
        match self.name {
            FamilyName::H => make_h(one(self)?),
            FamilyName::Hprime => make_h_prime(one(self)?),
            FamilyName::C2 => {
                let (k, l) = two(self)?;
                make_c2(k, l)
            }
            FamilyName::D => make_d(one(self)?),
            FamilyName::Gnr => {
                let (n, r) = two(self)?;
                make_gnr(n, r)
            }
            FamilyName::Path | FamilyName::Cycle | FamilyName::Complete | FamilyName::Star => {
                make_standard(self)
            }
        }
    }
}

struct Builder {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { names: Vec::new(), edges: Vec::new() }
    }

    fn vertex(&mut self, name: String) -> usize {
        self.names.push(name);
        self.names.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn finish<W: Word>(self) -> Result<LabeledGraph<W>, Error> {
        let graph = Graph::from_edges(self.names.len(), &self.edges)?;
        LabeledGraph::with_labels(graph, self.names.into_iter().zip(0..).map(|(n, i)| (n, i)))
    }
}

/// The chain-with-gadgets graph on `3n` vertices (`n >= 2`).
pub fn make_h<W: Word>(n: usize) -> Result<LabeledGraph<W>, Error> {
    if n < 2 {
        return Err(Error::BadFamilyParams("H requires n >= 2"));
    }
    let mut b = Builder::new();
    let u: Vec<usize> = (0..=n + 1).map(|i| b.vertex(format!("u{i}"))).collect();
    let x: Vec<usize> = (1..n).map(|i| b.vertex(format!("x{i}"))).collect();
    let y: Vec<usize> = (1..n).map(|i| b.vertex(format!("y{i}"))).collect();
    for i in 0..=n {
        b.edge(u[i], u[i + 1]);
    }
    for i in 1..n {
        b.edge(u[i], x[i - 1]);
        b.edge(x[i - 1], y[i - 1]);
        b.edge(y[i - 1], u[i + 1]);
        b.edge(u[i + 1], x[i - 1]);
    }
    b.finish()
}

/// `H_n` with the first gadget pair `x_1, y_1` removed; `3n - 2` vertices
/// (`n >= 3`).
pub fn make_h_prime<W: Word>(n: usize) -> Result<LabeledGraph<W>, Error> {
    if n < 3 {
        return Err(Error::BadFamilyParams("Hprime requires n >= 3"));
    }
    let h = make_h::<W>(n)?;
    let mut keep = h.graph.vertices();
    keep.remove(h.vertex("x1").unwrap());
    keep.remove(h.vertex("y1").unwrap());
    let (graph, old_of_new) = h.graph.induced_subgraph(keep);
    let mut out = LabeledGraph::new(graph);
    for (new, old) in old_of_new.iter().enumerate() {
        if let Some(name) = h.label_of(*old) {
            out.add_label(name.into(), VertexId(new))?;
        }
    }
    Ok(out)
}

/// The 2-connected double-ring graph on `6k + 6l + 8` vertices
/// (`k, l >= 1`): an inner cycle `C0` through `s, a_*, w, c_*, t, d_*, y,
/// b_*` with a triangle gadget on every interior edge of the four arms.
pub fn make_c2<W: Word>(k: usize, l: usize) -> Result<LabeledGraph<W>, Error> {
    if k < 1 || l < 1 {
        return Err(Error::BadFamilyParams("C2 requires k >= 1 and l >= 1"));
    }
    let mut b = Builder::new();
    // Rim in cycle order: s, a_1..a_{k+1}, w, c_1..c_{l+1}, t, d_{l+1}..d_1,
    // y, b_{k+1}..b_1, back to s.
    let _s = b.vertex("s".into());
    let a: Vec<usize> = (1..=k + 1).map(|i| b.vertex(format!("a{i}"))).collect();
    let _w = b.vertex("w".into());
    let c: Vec<usize> = (1..=l + 1).map(|i| b.vertex(format!("c{i}"))).collect();
    let _t = b.vertex("t".into());
    let mut d: Vec<usize> = (1..=l + 1).rev().map(|i| b.vertex(format!("d{i}"))).collect();
    let _y = b.vertex("y".into());
    let mut bb: Vec<usize> = (1..=k + 1).rev().map(|i| b.vertex(format!("b{i}"))).collect();
    d.reverse(); // now d[i] is d_{i+1}
    bb.reverse();
    let rim = b.names.len();
    for i in 0..rim {
        b.edge(i, (i + 1) % rim);
    }
    // One gadget per interior arm edge; the degree-2 vertex of each triangle
    // attaches at the lower-indexed arm vertex.
    let gadget = |b: &mut Builder, arm: &str, i: usize, lo: usize, hi: usize| {
        let p = b.vertex(format!("{arm}'{i}"));
        let pp = b.vertex(format!("{arm}''{i}"));
        b.edge(p, lo);
        b.edge(p, pp);
        b.edge(pp, lo);
        b.edge(pp, hi);
    };
    for i in 1..=k {
        gadget(&mut b, "a", i, a[i - 1], a[i]);
        gadget(&mut b, "b", i, bb[i - 1], bb[i]);
    }
    for i in 1..=l {
        gadget(&mut b, "c", i, c[i - 1], c[i]);
        gadget(&mut b, "d", i, d[i - 1], d[i]);
    }
    let mut out = b.finish()?;
    let c0: VertexSet<W> = (0..rim).map(VertexId).collect();
    out.add_set("C0".into(), c0);
    Ok(out)
}

/// Cycle `C_{2n+2}` with a pendant vertex and a small attachment rig on
/// opposite sides; `2n + 8` vertices (`n >= 3`).
pub fn make_d<W: Word>(n: usize) -> Result<LabeledGraph<W>, Error> {
    if n < 3 {
        return Err(Error::BadFamilyParams("D requires n >= 3"));
    }
    let mut b = Builder::new();
    // Cycle in order: a_0, c_1..c_n, b_0, c'_n..c'_1.
    let a0 = b.vertex("a0".into());
    let c: Vec<usize> = (1..=n).map(|i| b.vertex(format!("c{i}"))).collect();
    let b0 = b.vertex("b0".into());
    let mut cp: Vec<usize> = (1..=n).rev().map(|i| b.vertex(format!("c'{i}"))).collect();
    cp.reverse();
    let cyc = b.names.len();
    for i in 0..cyc {
        b.edge(i, (i + 1) % cyc);
    }
    let b1 = b.vertex("b1".into());
    let a1 = b.vertex("a1".into());
    let a2 = b.vertex("a2".into());
    let a3 = b.vertex("a3".into());
    let a0p = b.vertex("a0'".into());
    let a1p = b.vertex("a1'".into());
    b.edge(b0, b1);
    b.edge(a0, a1);
    b.edge(a1, a2);
    b.edge(a2, a3);
    b.edge(a0, a0p);
    b.edge(a0p, a1p);
    b.edge(a1p, a1);
    let _ = (c, cp);
    b.finish()
}

/// Ring of `n` gadget blocks closed through a hub `z`; `n + 2 + 2nr`
/// vertices (`n, r >= 1`). Gadget vertices are labeled `x{i}_{j}` and
/// `y{i}_{j}` for block `i` and repetition `j`.
pub fn make_gnr<W: Word>(n: usize, r: usize) -> Result<LabeledGraph<W>, Error> {
    if n < 1 || r < 1 {
        return Err(Error::BadFamilyParams("Gnr requires n >= 1 and r >= 1"));
    }
    let mut b = Builder::new();
    let z = b.vertex("z".into());
    let v: Vec<usize> = (1..=n + 1).map(|i| b.vertex(format!("v{i}"))).collect();
    b.edge(z, v[0]);
    b.edge(z, v[n]);
    for i in 0..n {
        b.edge(v[i], v[i + 1]);
    }
    for i in 1..=n {
        for j in 1..=r {
            let x = b.vertex(format!("x{i}_{j}"));
            let y = b.vertex(format!("y{i}_{j}"));
            b.edge(v[i - 1], x);
            b.edge(v[i - 1], y);
            b.edge(x, y);
            b.edge(x, v[i]);
        }
    }
    b.finish()
}

/// Paths, cycles, complete graphs, and stars with canonical labels.
pub fn make_standard<W: Word>(spec: &FamilySpec) -> Result<LabeledGraph<W>, Error> {
    let n = match spec.params[..] {
        [n] => n,
        _ => return Err(Error::BadFamilyParams("expected one parameter")),
    };
    let mut b = Builder::new();
    match spec.name {
        FamilyName::Path => {
            if n < 1 {
                return Err(Error::BadFamilyParams("path requires n >= 1"));
            }
            for i in 1..=n {
                b.vertex(format!("v{i}"));
            }
            for i in 0..n.saturating_sub(1) {
                b.edge(i, i + 1);
            }
        }
        FamilyName::Cycle => {
            if n < 3 {
                return Err(Error::BadFamilyParams("cycle requires n >= 3"));
            }
            for i in 1..=n {
                b.vertex(format!("v{i}"));
            }
            for i in 0..n {
                b.edge(i, (i + 1) % n);
            }
        }
        FamilyName::Complete => {
            if n < 1 {
                return Err(Error::BadFamilyParams("complete requires n >= 1"));
            }
            for i in 1..=n {
                b.vertex(format!("v{i}"));
            }
            for i in 0..n {
                for j in i + 1..n {
                    b.edge(i, j);
                }
            }
        }
        FamilyName::Star => {
            if n < 2 {
                return Err(Error::BadFamilyParams("star requires n >= 2"));
            }
            b.vertex("center".into());
            for i in 1..n {
                b.vertex(format!("v{i}"));
                b.edge(0, i);
            }
        }
        _ => unreachable!(),
    }
    b.finish()
}
