//! Undirected multigraphs with stable vertex and edge identifiers.
//!
//! Parallel edges are first-class (they show up as soon as we start
//! contracting lanes); self-loops are rejected everywhere.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Identifier of a vertex. Dense non-negative integers; survives edge
/// deletions but is re-indexed by contractions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Identifier of an edge: an index into the graph's edge list. Two parallel
/// edges have the same endpoint pair but distinct `EdgeId`s.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(VertexId),
    #[error("edge {0:?}-{1:?} has an endpoint outside the vertex set")]
    DanglingEndpoint(VertexId, VertexId),
    #[error("self-loops are not supported (vertex {0:?})")]
    SelfLoop(VertexId),
    #[error("subgraph to contract is empty")]
    EmptyContraction,
    #[error("subgraph to contract is not connected")]
    DisconnectedContraction,
    #[error("iterated line graph exceeded size cap: {size} > {cap} vertices")]
    SizeCapExceeded { size: usize, cap: usize },
}

/// A finite undirected multigraph. Immutable once constructed.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    verts: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    adj: HashMap<VertexId, Vec<(VertexId, EdgeId)>>,
    /// For graphs produced by contraction: the input-graph vertices each
    /// vertex stands for. Identity for freshly built graphs.
    origins: HashMap<VertexId, Vec<VertexId>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("verts", &self.verts)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Graph on vertices `0..n` with the given endpoint pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let verts: Vec<VertexId> = (0..n).map(VertexId).collect();
        let pairs: Vec<(VertexId, VertexId)> = edges
            .iter()
            .map(|&(u, v)| (VertexId(u), VertexId(v)))
            .collect();
        Self::with_vertices(verts, pairs)
    }

    /// Graph on an explicit (not necessarily contiguous) vertex set.
    pub fn with_vertices(
        mut verts: Vec<VertexId>,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        verts.sort_unstable();
        verts.dedup();
        let vset: HashSet<VertexId> = verts.iter().copied().collect();
        for &(u, v) in &edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !vset.contains(&u) || !vset.contains(&v) {
                return Err(GraphError::DanglingEndpoint(u, v));
            }
        }
        let mut adj: HashMap<VertexId, Vec<(VertexId, EdgeId)>> =
            verts.iter().map(|&v| (v, Vec::new())).collect();
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj.get_mut(&u).unwrap().push((v, EdgeId(i)));
            adj.get_mut(&v).unwrap().push((u, EdgeId(i)));
        }
        let origins = verts.iter().map(|&v| (v, vec![v])).collect();
        Ok(Graph {
            verts,
            edges,
            adj,
            origins,
        })
    }

    pub fn empty() -> Self {
        Graph::new(0, &[]).unwrap()
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    /// Endpoint pairs indexed by `EdgeId`.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    /// Neighbors of `v` as `(other endpoint, edge)` pairs, one entry per
    /// incident edge slot.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        self.adj.get(&v).map(|x| x.as_slice()).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.adj
            .get(&v)
            .map(|a| a.len())
            .ok_or(GraphError::UnknownVertex(v))
    }

    /// Input-graph vertices this vertex stands for (identity unless the
    /// graph came out of a contraction).
    pub fn origin_of(&self, v: VertexId) -> &[VertexId] {
        self.origins.get(&v).map(|x| x.as_slice()).unwrap_or(&[])
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen: HashSet<VertexId> = HashSet::new();
        let mut comps = Vec::new();
        for &start in &self.verts {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in self.incident(v) {
                    if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True iff the graph has at most one connected component. The empty
    /// graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices of odd degree, ascending.
    pub fn odd_vertices(&self) -> Vec<VertexId> {
        self.verts
            .iter()
            .copied()
            .filter(|&v| self.incident(v).len() % 2 == 1)
            .collect()
    }

    /// Connected with all degrees even. A single vertex with no edges is
    /// Eulerian; so is the empty graph.
    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && self.odd_vertices().is_empty()
    }

    /// The line graph: one vertex per edge of `self`, a simple edge between
    /// two of them iff the underlying edges share an endpoint. Parallel
    /// edges of a multigraph share both endpoints and become adjacent
    /// vertices joined by one simple edge.
    pub fn line_graph(&self) -> Graph {
        let m = self.edges.len();
        let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &v in &self.verts {
            let inc = self.incident(v);
            for i in 0..inc.len() {
                for j in (i + 1)..inc.len() {
                    let (a, b) = (inc[i].1 .0, inc[j].1 .0);
                    if a != b {
                        pairs.insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
        let edges: Vec<(usize, usize)> = pairs.into_iter().collect();
        Graph::new(m, &edges).unwrap()
    }

    /// `r`-fold line graph, failing with a size error if an intermediate
    /// graph grows past `size_cap` vertices.
    pub fn iterated_line_graph(&self, r: usize, size_cap: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for _ in 0..r {
            if g.num_edges() > size_cap {
                return Err(GraphError::SizeCapExceeded {
                    size: g.num_edges(),
                    cap: size_cap,
                });
            }
            g = g.line_graph();
        }
        Ok(g)
    }

    /// Subgraph on the given vertices and edges. Every listed edge must
    /// have both endpoints among the listed vertices.
    pub fn subgraph(&self, vertices: &[VertexId], edges: &[EdgeId]) -> Result<Graph, GraphError> {
        let pairs: Vec<(VertexId, VertexId)> = edges.iter().map(|&e| self.endpoints(e)).collect();
        Graph::with_vertices(vertices.to_vec(), pairs)
    }

    /// Union by identifier: vertex sets are merged, and edges (identified by
    /// their endpoint pair) are set-unioned.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut verts: Vec<VertexId> = self.verts.clone();
        verts.extend_from_slice(&other.verts);
        let mut pairs: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        for g in [self, other] {
            for &(u, v) in &g.edges {
                pairs.insert((u.min(v), u.max(v)));
            }
        }
        Graph::with_vertices(verts, pairs.into_iter().collect()).unwrap()
    }

    /// Contract the connected subgraph induced by `h_vertices` to a single
    /// fresh supervertex. Vertices are re-indexed densely; edges between the
    /// contracted set and the rest survive (parallel edges preserved),
    /// internal edges are dropped. Returns the new graph and the
    /// supervertex, with origin labels tracking the input vertices.
    pub fn contract_subgraph(
        &self,
        h_vertices: &BTreeSet<VertexId>,
    ) -> Result<(Graph, VertexId), GraphError> {
        if h_vertices.is_empty() {
            return Err(GraphError::EmptyContraction);
        }
        for &v in h_vertices {
            if !self.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        // Connectivity of the induced subgraph.
        let mut seen: HashSet<VertexId> = HashSet::new();
        let start = *h_vertices.iter().next().unwrap();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in self.incident(v) {
                if h_vertices.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        if seen.len() != h_vertices.len() {
            return Err(GraphError::DisconnectedContraction);
        }

        let outside: Vec<VertexId> = self
            .verts
            .iter()
            .copied()
            .filter(|v| !h_vertices.contains(v))
            .collect();
        let mut remap: HashMap<VertexId, VertexId> = HashMap::new();
        for (i, &v) in outside.iter().enumerate() {
            remap.insert(v, VertexId(i));
        }
        let supervertex = VertexId(outside.len());
        for &v in h_vertices {
            remap.insert(v, supervertex);
        }
        let mut pairs = Vec::new();
        for &(u, v) in &self.edges {
            let (nu, nv) = (remap[&u], remap[&v]);
            if nu != nv {
                pairs.push((nu, nv));
            }
        }
        let mut g = Graph::with_vertices((0..=outside.len()).map(VertexId).collect(), pairs)?;
        let mut origins: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
        for (i, &v) in outside.iter().enumerate() {
            origins.insert(VertexId(i), self.origin_of(v).to_vec());
        }
        let mut merged: Vec<VertexId> = h_vertices
            .iter()
            .flat_map(|&v| self.origin_of(v).iter().copied())
            .collect();
        merged.sort_unstable();
        origins.insert(supervertex, merged);
        g.origins = origins;
        Ok((g, supervertex))
    }

    /// Connected, with `n - 1` edges and maximum degree at most two. Counts
    /// the one-vertex graph as a path.
    pub fn is_path(&self) -> bool {
        let n = self.num_vertices();
        n > 0
            && self.num_edges() == n - 1
            && self.is_connected()
            && self.verts.iter().all(|&v| self.incident(v).len() <= 2)
    }
}
