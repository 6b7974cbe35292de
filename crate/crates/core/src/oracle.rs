//! Brute-force reference implementations, written straight from the
//! definitions and sharing no code with the DP solvers. Exceeding a budget
//! is an explicit error, never a silent wrong answer.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    /// Backtracking Hamiltonicity: max vertices.
    pub max_vertices: usize,
    /// Subset enumeration: max edges (2^|E| candidates).
    pub max_edges: usize,
    /// Iterated line graphs: max edges of any intermediate graph.
    pub max_line_graph: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 14,
            max_edges: 22,
            max_line_graph: 2000,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle out of budget: {0}")]
    Budget(String),
}

fn budget_err(what: &str, have: usize, cap: usize) -> OracleError {
    OracleError::Budget(format!("{what}: {have} > {cap}"))
}

/// Hamiltonian cycle by backtracking over vertex orderings. On two
/// vertices a cycle needs two parallel edges; smaller graphs have none.
pub fn brute_hamiltonian(g: &Graph, budget: &OracleBudget) -> Result<bool, OracleError> {
    let n = g.num_vertices();
    if n > budget.max_vertices {
        return Err(budget_err("hamiltonian backtracking vertices", n, budget.max_vertices));
    }
    if n <= 1 {
        return Ok(false);
    }
    let verts = g.vertices();
    if n == 2 {
        let cnt = g
            .edges()
            .iter()
            .filter(|&&(u, v)| (u, v) == (verts[0], verts[1]) || (u, v) == (verts[1], verts[0]))
            .count();
        return Ok(cnt >= 2);
    }
    // Simple adjacency is enough for n >= 3.
    let mut adj: HashSet<(VertexId, VertexId)> = HashSet::new();
    for &(u, v) in g.edges() {
        adj.insert((u, v));
        adj.insert((v, u));
    }
    fn rec(
        verts: &[VertexId],
        adj: &HashSet<(VertexId, VertexId)>,
        path: &mut Vec<VertexId>,
        used: &mut HashSet<VertexId>,
    ) -> bool {
        if path.len() == verts.len() {
            return adj.contains(&(*path.last().unwrap(), path[0]));
        }
        let last = *path.last().unwrap();
        for &w in verts {
            if !used.contains(&w) && adj.contains(&(last, w)) {
                path.push(w);
                used.insert(w);
                if rec(verts, adj, path, used) {
                    return true;
                }
                path.pop();
                used.remove(&w);
            }
        }
        false
    }
    let start = verts[0];
    let mut path = vec![start];
    let mut used = HashSet::from([start]);
    Ok(rec(verts, &adj, &mut path, &mut used))
}

/// Subgraph induced by an edge subset: covered vertices plus those edges.
fn edge_subset_graph(g: &Graph, mask: u64) -> Graph {
    let mut verts: Vec<VertexId> = Vec::new();
    let mut pairs = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            verts.push(u);
            verts.push(v);
            pairs.push((u, v));
        }
    }
    Graph::with_vertices(verts, pairs).unwrap()
}

fn check_edge_budget(g: &Graph, budget: &OracleBudget) -> Result<(), OracleError> {
    if g.num_edges() > budget.max_edges {
        return Err(budget_err("edge subset enumeration", g.num_edges(), budget.max_edges));
    }
    Ok(())
}

/// Eulerian subgraph containing every terminal of `k`, by enumerating all
/// edge subsets. An Eulerian graph with edges has no isolated vertices, so
/// the only extra candidates are single vertices (usable when |k| <= 1).
pub fn brute_eulerian_steiner(
    g: &Graph,
    k: &[VertexId],
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    check_edge_budget(g, budget)?;
    if k.len() <= 1 {
        // The empty graph or the terminal alone is an Eulerian subgraph.
        return Ok(true);
    }
    let kset: HashSet<VertexId> = k.iter().copied().collect();
    for mask in 1u64..(1 << g.num_edges()) {
        let sub = edge_subset_graph(g, mask);
        if sub.is_eulerian() && kset.iter().all(|t| sub.has_vertex(*t)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Spanning Eulerian subgraph (supereulerian). Graphs with at most one
/// vertex count as yes.
pub fn brute_ses(g: &Graph, budget: &OracleBudget) -> Result<bool, OracleError> {
    check_edge_budget(g, budget)?;
    if g.num_vertices() <= 1 {
        return Ok(true);
    }
    for mask in 1u64..(1 << g.num_edges()) {
        let sub = edge_subset_graph(g, mask);
        if sub.num_vertices() == g.num_vertices() && sub.is_eulerian() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Eulerian subgraph whose vertex set is a vertex cover (the DES problem).
/// Edgeless inputs are yes (the empty cover works).
pub fn brute_des(g: &Graph, budget: &OracleBudget) -> Result<bool, OracleError> {
    check_edge_budget(g, budget)?;
    if g.num_edges() == 0 {
        return Ok(true);
    }
    let is_cover = |vs: &dyn Fn(VertexId) -> bool| {
        g.edges().iter().all(|&(u, v)| vs(u) || vs(v))
    };
    // Single-vertex candidates.
    for &v in g.vertices() {
        if is_cover(&|w| w == v) {
            return Ok(true);
        }
    }
    for mask in 1u64..(1 << g.num_edges()) {
        let sub = edge_subset_graph(g, mask);
        if sub.is_eulerian() && is_cover(&|w| sub.has_vertex(w)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Hamiltonian index by iterating the line graph and testing each stage.
pub fn brute_hindex(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    let mut cur = g.clone();
    let cap = std::cmp::max(4, g.num_vertices());
    for r in 0..=cap {
        if brute_hamiltonian(&cur, budget)? {
            return Ok(r);
        }
        if cur.num_edges() > budget.max_line_graph {
            return Err(budget_err("line graph size", cur.num_edges(), budget.max_line_graph));
        }
        cur = cur.line_graph();
    }
    Err(OracleError::Budget(format!(
        "hamiltonian index iteration cap {cap} reached"
    )))
}

/// Cyclic ordering of all edges with consecutive edges sharing a vertex
/// (an edge Hamiltonian cycle). Factorial enumeration with the first edge
/// fixed; |E| <= 9.
pub fn brute_edge_hamiltonian_cycle(g: &Graph, _budget: &OracleBudget) -> Result<bool, OracleError> {
    let m = g.num_edges();
    if m > 9 {
        return Err(budget_err("edge permutation enumeration", m, 9));
    }
    if m < 3 {
        return Ok(false); // L(G) is simple with < 3 vertices: no cycle
    }
    let shares = |a: usize, b: usize| {
        let (u1, v1) = g.endpoints(crate::graph::EdgeId(a));
        let (u2, v2) = g.endpoints(crate::graph::EdgeId(b));
        u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2
    };
    fn rec(order: &mut Vec<usize>, rest: &mut Vec<usize>, shares: &dyn Fn(usize, usize) -> bool) -> bool {
        if rest.is_empty() {
            return shares(*order.last().unwrap(), order[0]);
        }
        for i in 0..rest.len() {
            if shares(*order.last().unwrap(), rest[i]) {
                let e = rest.remove(i);
                order.push(e);
                if rec(order, rest, shares) {
                    return true;
                }
                order.pop();
                rest.insert(i, e);
            }
        }
        false
    }
    let mut order = vec![0usize];
    let mut rest: Vec<usize> = (1..m).collect();
    Ok(rec(&mut order, &mut rest, &shares))
}

/// All labeled connected simple graphs on vertex set 0..n. Test plumbing
/// for the exhaustive suites.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}
