//! Network graph, Laplacian and algebraic connectivity.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::channel::{uav_uav_snr_db, ue_uav_snr_db};
use crate::error::{Error, Result};
use crate::linalg::{
    eig_sym, eig_sym_fast, eigenvalues_sym, inverse_iteration, Matrix, SymmetricEigen,
};
use crate::scenario::{ensure_valid, Scenario};

/// Eigenvalues below this are treated as zero when reading off λ₂.
pub const CONNECTIVITY_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    UeUav,
    UavUav,
    Ris,
}

impl EdgeKind {
    pub fn tag(self) -> &'static str {
        match self {
            EdgeKind::UeUav => "ue-uav",
            EdgeKind::UavUav => "uav-uav",
            EdgeKind::Ris => "ris",
        }
    }
}

impl FromStr for EdgeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ue-uav" => Ok(EdgeKind::UeUav),
            "uav-uav" => Ok(EdgeKind::UavUav),
            "ris" => Ok(EdgeKind::Ris),
            other => Err(Error::Parse(format!("unknown edge tag {other:?}"))),
        }
    }
}

/// Undirected edge between zero-based nodes `n < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub n: usize,
    pub m: usize,
    pub kind: EdgeKind,
}

/// `a = e_n − e_m` for the edge `(n, m)` in a graph of `len` nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidenceVector {
    pub n: usize,
    pub m: usize,
    pub len: usize,
}

impl IncidenceVector {
    pub fn new(n: usize, m: usize, len: usize) -> Result<Self> {
        if n == m || n >= len || m >= len {
            return Err(Error::domain(format!(
                "invalid incidence pair ({n}, {m}) for {len} nodes"
            )));
        }
        Ok(IncidenceVector { n, m, len })
    }

    pub fn dense(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.len];
        a[self.n] = 1.0;
        a[self.m] = -1.0;
        a
    }

    /// `target += weight · a aᵀ`.
    pub fn add_outer_to(&self, target: &mut Matrix, weight: f64) {
        target.add_edge_term(self.n, self.m, weight);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    num_nodes: usize,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(num_nodes: usize) -> Self {
        Graph {
            num_nodes,
            edges: Vec::new(),
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (n, m) = (a.min(b), a.max(b));
        self.edges.iter().any(|e| e.n == n && e.m == m)
    }

    /// Appends an edge; endpoints may come in either order.
    pub fn add_edge(&mut self, a: usize, b: usize, kind: EdgeKind) -> Result<()> {
        if a == b {
            return Err(Error::domain(format!("self-loop on node {a}")));
        }
        if a >= self.num_nodes || b >= self.num_nodes {
            return Err(Error::domain(format!(
                "edge ({a}, {b}) out of range for {} nodes",
                self.num_nodes
            )));
        }
        if self.has_edge(a, b) {
            return Err(Error::domain(format!("duplicate edge ({a}, {b})")));
        }
        self.edges.push(Edge {
            n: a.min(b),
            m: a.max(b),
            kind,
        });
        Ok(())
    }

    pub fn with_edge(&self, a: usize, b: usize, kind: EdgeKind) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(a, b, kind)?;
        Ok(g)
    }

    pub fn incidence(&self, edge: &Edge) -> IncidenceVector {
        IncidenceVector {
            n: edge.n,
            m: edge.m,
            len: self.num_nodes,
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_nodes];
        for e in &self.edges {
            deg[e.n] += 1;
            deg[e.m] += 1;
        }
        deg
    }

    /// Connected components by breadth-first search, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_nodes];
        for e in &self.edges {
            adj[e.n].push(e.m);
            adj[e.m].push(e.n);
        }
        let mut seen = vec![false; self.num_nodes];
        let mut out = Vec::new();
        for start in 0..self.num_nodes {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Edge-list text: `V E` on the first line, then `n m tag` per edge with
    /// 1-based node indices.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.num_nodes, self.edges.len());
        for e in &self.edges {
            s.push_str(&format!("{} {} {}\n", e.n + 1, e.m + 1, e.kind.tag()));
        }
        s
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let (v, e) = match header.split_whitespace().collect::<Vec<_>>()[..] {
            [v, e] => (parse_count(v)?, parse_count(e)?),
            _ => return Err(Error::Parse(format!("bad header line {header:?}"))),
        };
        let mut g = Graph::new(v);
        for line in lines.by_ref() {
            let (n, m, kind) = match line.split_whitespace().collect::<Vec<_>>()[..] {
                [n, m, tag] => (parse_count(n)?, parse_count(m)?, tag.parse::<EdgeKind>()?),
                _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
            };
            if n == 0 || m == 0 {
                return Err(Error::Parse(format!("node indices are 1-based: {line:?}")));
            }
            g.add_edge(n - 1, m - 1, kind)
                .map_err(|err| Error::Parse(err.to_string()))?;
        }
        if g.num_edges() != e {
            return Err(Error::Parse(format!(
                "header announces {e} edges, found {}",
                g.num_edges()
            )));
        }
        Ok(g)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

fn parse_count(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("expected a non-negative integer, got {s:?}")))
}

/// Graph of direct links: UE–UAV and UAV–UAV pairs whose SNR meets the
/// corresponding threshold. The RIS is not a node.
pub fn build_graph(sc: &Scenario) -> Result<Graph> {
    ensure_valid(sc)?;
    let radio = &sc.radio;
    let mut g = Graph::new(sc.num_nodes());
    for (u, &ue) in sc.ue_positions.iter().enumerate() {
        for (a, &uav) in sc.uav_positions.iter().enumerate() {
            if ue_uav_snr_db(ue, uav, radio)? >= radio.gamma0_ue_db {
                g.add_edge(u, sc.uav_node(a), EdgeKind::UeUav)?;
            }
        }
    }
    for (a, &first) in sc.uav_positions.iter().enumerate() {
        for (b, &second) in sc.uav_positions.iter().enumerate().skip(a + 1) {
            if uav_uav_snr_db(first, second, radio)? >= radio.gamma0_uav_db {
                g.add_edge(sc.uav_node(a), sc.uav_node(b), EdgeKind::UavUav)?;
            }
        }
    }
    Ok(g)
}

/// `L = Σ_k a_k a_kᵀ`.
pub fn laplacian(g: &Graph) -> Matrix {
    let mut l = Matrix::zeros(g.num_nodes());
    for e in g.edges() {
        g.incidence(e).add_outer_to(&mut l, 1.0);
    }
    l
}

/// λ₂ and a unit Fiedler vector of a (weighted) Laplacian.
///
/// λ₂ below [`CONNECTIVITY_EPS`] is reported as exactly 0. The vector's first
/// component with magnitude above 1e-12 is made positive.
pub fn fiedler(l: &Matrix) -> Result<(f64, Vec<f64>)> {
    let eig = eig_sym(l)?;
    fiedler_from(&eig)
}

pub(crate) fn fiedler_from(eig: &SymmetricEigen) -> Result<(f64, Vec<f64>)> {
    if eig.eigenvalues.len() < 2 {
        return Err(Error::domain("λ₂ needs at least two nodes"));
    }
    let raw = eig.eigenvalues[1];
    let value = if raw < CONNECTIVITY_EPS { 0.0 } else { raw };
    let mut v = eig.eigenvector(1);
    orient(&mut v);
    Ok((value, v))
}

/// Same result as [`fiedler`] without a full decomposition: eigenvalues by
/// tridiagonal QL, then one inverse-iteration solve at σ = λ₂ deflated
/// against `1`. Falls back to the full decomposition when the vector's
/// residual exceeds `1e-9·max(1, ‖L‖_F)`.
pub fn fiedler_fast(l: &Matrix) -> Result<(f64, Vec<f64>)> {
    let n = l.dim();
    if n < 2 {
        return Err(Error::domain("λ₂ needs at least two nodes"));
    }
    let values = eigenvalues_sym(l)?;
    let raw = values[1];
    let ones = vec![1.0 / (n as f64).sqrt(); n];
    // fixed start vector with no symmetry a Laplacian could share
    let start: Vec<f64> = (0..n)
        .map(|i| ((i as f64 + 1.0) * 0.618_033_988_749_895).fract() - 0.5)
        .collect();
    let mut v = inverse_iteration(l, raw, &start, &[&ones], 2);

    let lv = l.mul_vec(&v);
    let residual = lv
        .iter()
        .zip(&v)
        .map(|(a, b)| (a - raw * b).powi(2))
        .sum::<f64>()
        .sqrt();
    if !(residual <= 1e-9 * l.frobenius_norm().max(1.0)) {
        return fiedler_from(&eig_sym_fast(l)?);
    }
    let value = if raw < CONNECTIVITY_EPS { 0.0 } else { raw };
    orient(&mut v);
    Ok((value, v))
}

fn orient(v: &mut [f64]) {
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-12) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// λ₂ of a Laplacian, clamped at [`CONNECTIVITY_EPS`].
pub fn lambda2_of(l: &Matrix) -> Result<f64> {
    fiedler(l).map(|(value, _)| value)
}

pub fn lambda2(g: &Graph) -> Result<(f64, Vec<f64>)> {
    if g.num_nodes() < 2 {
        return Err(Error::domain("λ₂ needs at least two nodes"));
    }
    fiedler(&laplacian(g))
}
