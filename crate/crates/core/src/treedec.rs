//! Tree decompositions: validation, a min-fill heuristic, nice-ification,
//! the pinning transform, and rebuilds after contractions.

use std::collections::{BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreedecError {
    #[error("decomposition is not a tree ({bags} bags, {edges} tree edges)")]
    NotATree { bags: usize, edges: usize },
    #[error("tree edge references unknown bag {0}")]
    UnknownBag(usize),
    #[error("vertex {0:?} appears in a bag but not in the graph")]
    ForeignVertex(VertexId),
    #[error("vertex {0:?} is not covered by any bag")]
    VertexUncovered(VertexId),
    #[error("edge {0:?}-{1:?} has no bag containing both endpoints")]
    EdgeUncovered(VertexId, VertexId),
    #[error("bags containing {0:?} do not form a connected subtree")]
    DisconnectedOccurrences(VertexId),
    #[error("graph has vertices but the decomposition has no bags")]
    NoBags,
    #[error("vertex {0:?} appears in more than one contracted pair")]
    OverlappingContractions(VertexId),
}

/// A plain (not nice) tree decomposition: bags plus tree edges between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<VertexId>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(mut bags: Vec<Vec<VertexId>>, edges: Vec<(usize, usize)>) -> Self {
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        TreeDecomposition { bags, edges }
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Check the three tree-decomposition conditions against `g`; returns
    /// the width on success.
    pub fn validate(&self, g: &Graph) -> Result<usize, TreedecError> {
        let nb = self.bags.len();
        if nb == 0 {
            return if g.num_vertices() == 0 {
                Ok(0)
            } else {
                Err(TreedecError::NoBags)
            };
        }
        for &(a, b) in &self.edges {
            if a >= nb || b >= nb {
                return Err(TreedecError::UnknownBag(a.max(b)));
            }
        }
        // Tree shape: connected and exactly nb - 1 edges.
        let mut parent: Vec<usize> = (0..nb).collect();
        fn find(p: &mut Vec<usize>, mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let mut merges = 0;
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                merges += 1;
            }
        }
        if self.edges.len() != nb - 1 || merges != nb - 1 {
            return Err(TreedecError::NotATree {
                bags: nb,
                edges: self.edges.len(),
            });
        }

        let mut occurrences: HashMap<VertexId, Vec<usize>> = HashMap::new();
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if !g.has_vertex(v) {
                    return Err(TreedecError::ForeignVertex(v));
                }
                occurrences.entry(v).or_default().push(i);
            }
        }
        for &v in g.vertices() {
            if !occurrences.contains_key(&v) {
                return Err(TreedecError::VertexUncovered(v));
            }
        }
        for &(u, v) in g.edges() {
            let covered = self
                .bags
                .iter()
                .any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok());
            if !covered {
                return Err(TreedecError::EdgeUncovered(u, v));
            }
        }
        // Per-vertex connectivity: count, within each occurrence set, the
        // tree edges staying inside it; connected iff a spanning tree.
        for (&v, occ) in &occurrences {
            let inside: HashSet<usize> = occ.iter().copied().collect();
            let internal = self
                .edges
                .iter()
                .filter(|&&(a, b)| inside.contains(&a) && inside.contains(&b))
                .count();
            if internal + 1 != occ.len() {
                return Err(TreedecError::DisconnectedOccurrences(v));
            }
        }
        Ok(self.width())
    }
}

/// Min-fill elimination heuristic. Valid for every graph; width is an upper
/// bound on the treewidth with no optimality promise.
pub fn heuristic_decompose(g: &Graph) -> TreeDecomposition {
    let n = g.num_vertices();
    if n == 0 {
        return TreeDecomposition::new(vec![], vec![]);
    }
    // Simple-graph adjacency over vertex positions.
    let verts = g.vertices().to_vec();
    let pos: HashMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in g.edges() {
        adj[pos[&u]].insert(pos[&v]);
        adj[pos[&v]].insert(pos[&u]);
    }
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut bags: Vec<Vec<VertexId>> = Vec::with_capacity(n);
    let mut clique_at_elim: Vec<Vec<usize>> = Vec::with_capacity(n);
    while !alive.is_empty() {
        let pick = alive
            .iter()
            .copied()
            .min_by_key(|&v| {
                let nb: Vec<usize> = adj[v].iter().copied().collect();
                let mut fill = 0usize;
                for i in 0..nb.len() {
                    for j in (i + 1)..nb.len() {
                        if !adj[nb[i]].contains(&nb[j]) {
                            fill += 1;
                        }
                    }
                }
                (fill, v)
            })
            .unwrap();
        let nb: Vec<usize> = adj[pick].iter().copied().collect();
        let mut bag: Vec<VertexId> = nb.iter().map(|&i| verts[i]).collect();
        bag.push(verts[pick]);
        bag.sort_unstable();
        bags.push(bag);
        clique_at_elim.push(nb.clone());
        for i in 0..nb.len() {
            for j in (i + 1)..nb.len() {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        }
        for &w in &nb {
            adj[w].remove(&pick);
        }
        adj[pick].clear();
        alive.remove(&pick);
        order.push(pick);
    }
    // Bag i connects to the bag of the earliest-eliminated surviving
    // neighbor; isolated remainders chain to the next bag.
    let elim_index: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        if let Some(&j) = clique_at_elim[i].iter().map(|v| &elim_index[v]).min() {
            edges.push((i, j));
        } else if i + 1 < n {
            edges.push((i, i + 1));
        }
    }
    let td = TreeDecomposition::new(bags, edges);
    debug_assert!(td.validate(g).is_ok());
    td
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    IntroduceVertex(VertexId),
    IntroduceEdge(EdgeId),
    Forget(VertexId),
    Join,
}

#[derive(Clone, Debug)]
pub struct NiceNode {
    pub kind: NodeKind,
    pub bag: Vec<VertexId>, // sorted
    pub children: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Node ids in post-order (children before parents).
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                out.push(id);
            } else {
                stack.push((id, true));
                for &c in &self.nodes[id].children {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// Forget the nice structure, keeping bags and tree edges.
    pub fn as_plain(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let mut edges = Vec::new();
        for (i, n) in self.nodes.iter().enumerate() {
            for &c in &n.children {
                edges.push((i, c));
            }
        }
        TreeDecomposition::new(bags, edges)
    }

    /// Internal sanity check: bag relations per kind, each edge introduced
    /// exactly once, and (pre-pinning) empty root and leaf bags.
    pub fn check(&self, g: &Graph, pinned: Option<VertexId>) -> Result<(), String> {
        let mut introduced: HashMap<EdgeId, usize> = HashMap::new();
        for (id, n) in self.nodes.iter().enumerate() {
            if let Some(p) = pinned {
                if n.bag.binary_search(&p).is_err() {
                    return Err(format!("pinned vertex missing from bag of node {id}"));
                }
            }
            match &n.kind {
                NodeKind::Leaf => {
                    if !n.children.is_empty() {
                        return Err(format!("leaf {id} has children"));
                    }
                    let expect: Vec<VertexId> = pinned.into_iter().collect();
                    if n.bag != expect {
                        return Err(format!("leaf {id} bag is {:?}", n.bag));
                    }
                }
                NodeKind::IntroduceVertex(v) => {
                    let [c] = n.children[..] else {
                        return Err(format!("introduce-vertex {id} child count"));
                    };
                    let mut want = self.nodes[c].bag.clone();
                    want.push(*v);
                    want.sort_unstable();
                    if self.nodes[c].bag.binary_search(v).is_ok() || n.bag != want {
                        return Err(format!("introduce-vertex {id} bag relation"));
                    }
                }
                NodeKind::IntroduceEdge(e) => {
                    let [c] = n.children[..] else {
                        return Err(format!("introduce-edge {id} child count"));
                    };
                    if n.bag != self.nodes[c].bag {
                        return Err(format!("introduce-edge {id} bag relation"));
                    }
                    let (u, v) = g.endpoints(*e);
                    if n.bag.binary_search(&u).is_err() || n.bag.binary_search(&v).is_err() {
                        return Err(format!("introduce-edge {id} endpoints not in bag"));
                    }
                    if let Some(prev) = introduced.insert(*e, id) {
                        return Err(format!("edge {e:?} introduced at {prev} and {id}"));
                    }
                }
                NodeKind::Forget(v) => {
                    let [c] = n.children[..] else {
                        return Err(format!("forget {id} child count"));
                    };
                    let want: Vec<VertexId> = self.nodes[c]
                        .bag
                        .iter()
                        .copied()
                        .filter(|w| w != v)
                        .collect();
                    if self.nodes[c].bag.binary_search(v).is_err() || n.bag != want {
                        return Err(format!("forget {id} bag relation"));
                    }
                }
                NodeKind::Join => {
                    let [a, b] = n.children[..] else {
                        return Err(format!("join {id} child count"));
                    };
                    if n.bag != self.nodes[a].bag || n.bag != self.nodes[b].bag {
                        return Err(format!("join {id} bag relation"));
                    }
                }
            }
        }
        for e in 0..g.num_edges() {
            if !introduced.contains_key(&EdgeId(e)) {
                return Err(format!("edge {:?} never introduced", EdgeId(e)));
            }
        }
        let root_expect: Vec<VertexId> = pinned.into_iter().collect();
        if self.nodes[self.root].bag != root_expect {
            return Err(format!("root bag is {:?}", self.nodes[self.root].bag));
        }
        Ok(())
    }
}

struct NiceBuilder {
    nodes: Vec<NiceNode>,
    /// Remaining unintroduced edges per vertex: (edge, other endpoint).
    pending_edges: HashMap<VertexId, Vec<(EdgeId, VertexId)>>,
    introduced: HashSet<EdgeId>,
}

impl NiceBuilder {
    fn push(&mut self, kind: NodeKind, bag: Vec<VertexId>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    /// Introduce-edge chain for all pending edges at `v` whose other
    /// endpoint is also in the bag of node `top`.
    fn introduce_edges_at(&mut self, v: VertexId, mut top: usize) -> usize {
        let bag = self.nodes[top].bag.clone();
        let Some(pending) = self.pending_edges.get(&v) else {
            return top;
        };
        let fire: Vec<EdgeId> = pending
            .iter()
            .filter(|&&(e, w)| !self.introduced.contains(&e) && bag.binary_search(&w).is_ok())
            .map(|&(e, _)| e)
            .collect();
        for e in fire {
            self.introduced.insert(e);
            top = self.push(NodeKind::IntroduceEdge(e), bag.clone(), vec![top]);
        }
        top
    }

    /// Chain transforming a node with bag `from` into bag `to`: forgets
    /// first (with edge introduction just below each forget), then
    /// introduces.
    fn morph(&mut self, mut top: usize, to: &[VertexId]) -> usize {
        let from = self.nodes[top].bag.clone();
        for &v in from.iter().filter(|v| to.binary_search(v).is_err()) {
            top = self.introduce_edges_at(v, top);
            let bag: Vec<VertexId> = self.nodes[top]
                .bag
                .iter()
                .copied()
                .filter(|&w| w != v)
                .collect();
            top = self.push(NodeKind::Forget(v), bag, vec![top]);
        }
        for &v in to.iter().filter(|v| from.binary_search(v).is_err()) {
            let mut bag = self.nodes[top].bag.clone();
            bag.push(v);
            bag.sort_unstable();
            top = self.push(NodeKind::IntroduceVertex(v), bag, vec![top]);
        }
        top
    }
}

/// Turn a validated decomposition into a nice one: empty root and leaf
/// bags, join nodes binary, each edge introduced exactly once (just below
/// the forget of its first-forgotten endpoint).
pub fn make_nice(td: &TreeDecomposition, g: &Graph) -> Result<NiceTreeDecomposition, TreedecError> {
    td.validate(g)?;
    let mut pending_edges: HashMap<VertexId, Vec<(EdgeId, VertexId)>> = HashMap::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        pending_edges.entry(u).or_default().push((EdgeId(i), v));
        pending_edges.entry(v).or_default().push((EdgeId(i), u));
    }
    let mut b = NiceBuilder {
        nodes: Vec::new(),
        pending_edges,
        introduced: HashSet::new(),
    };
    if td.bags.is_empty() {
        let root = b.push(NodeKind::Leaf, vec![], vec![]);
        return Ok(NiceTreeDecomposition {
            nodes: b.nodes,
            root,
        });
    }

    // Root the bag tree at 0 and process bags in post-order, iteratively.
    let nb = td.bags.len();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); nb];
    for &(x, y) in &td.edges {
        nbrs[x].push(y);
        nbrs[y].push(x);
    }
    let mut post = Vec::with_capacity(nb);
    let mut stack = vec![(0usize, usize::MAX, false)];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nb];
    while let Some((bag, parent, expanded)) = stack.pop() {
        if expanded {
            post.push(bag);
            continue;
        }
        stack.push((bag, parent, true));
        for &c in &nbrs[bag] {
            if c != parent {
                children[bag].push(c);
                stack.push((c, bag, false));
            }
        }
    }

    let mut built: Vec<usize> = vec![usize::MAX; nb];
    for &bag in &post {
        let target = td.bags[bag].clone();
        let mut tops: Vec<usize> = Vec::new();
        for &c in &children[bag] {
            tops.push(b.morph(built[c], &target));
        }
        if tops.is_empty() {
            let leaf = b.push(NodeKind::Leaf, vec![], vec![]);
            tops.push(b.morph(leaf, &target));
        }
        let mut top = tops[0];
        for &other in &tops[1..] {
            top = b.push(NodeKind::Join, target.clone(), vec![top, other]);
        }
        built[bag] = top;
    }
    let root = b.morph(built[0], &[]);
    let out = NiceTreeDecomposition {
        nodes: b.nodes,
        root,
    };
    debug_assert_eq!(out.check(g, None), Ok(()));
    Ok(out)
}

/// Add `v` to every bag, splicing out its introduce and forget nodes. Root
/// and leaf bags become {v}; width grows by at most one.
pub fn pin_vertex(ntd: &NiceTreeDecomposition, v: VertexId) -> NiceTreeDecomposition {
    // Resolve splices: a node introducing or forgetting v is replaced by
    // its child, transitively.
    let n = ntd.nodes.len();
    let mut replacement: Vec<usize> = (0..n).collect();
    for &id in &ntd.post_order() {
        match ntd.nodes[id].kind {
            NodeKind::IntroduceVertex(w) | NodeKind::Forget(w) if w == v => {
                replacement[id] = replacement[ntd.nodes[id].children[0]];
            }
            _ => {}
        }
    }
    let mut nodes: Vec<NiceNode> = Vec::with_capacity(n);
    let mut remap: Vec<usize> = vec![usize::MAX; n];
    for &id in &ntd.post_order() {
        if replacement[id] != id {
            remap[id] = remap[replacement[id]];
            continue;
        }
        let old = &ntd.nodes[id];
        let mut bag = old.bag.clone();
        if bag.binary_search(&v).is_err() {
            bag.push(v);
            bag.sort_unstable();
        }
        let children = old
            .children
            .iter()
            .map(|&c| remap[replacement[c]])
            .collect();
        nodes.push(NiceNode {
            kind: old.kind.clone(),
            bag,
            children,
        });
        remap[id] = nodes.len() - 1;
    }
    NiceTreeDecomposition {
        root: remap[replacement[ntd.root]],
        nodes,
    }
}

/// Replace each contracted pair {x, y} by its supervertex in every bag.
/// The pairs must be pairwise vertex-disjoint; width never grows.
pub fn contract_decomposition(
    td: &TreeDecomposition,
    contracted: &[((VertexId, VertexId), VertexId)],
) -> Result<TreeDecomposition, TreedecError> {
    let mut map: HashMap<VertexId, VertexId> = HashMap::new();
    for &((x, y), vxy) in contracted {
        for old in [x, y] {
            if map.insert(old, vxy).is_some() {
                return Err(TreedecError::OverlappingContractions(old));
            }
        }
    }
    let bags = td
        .bags
        .iter()
        .map(|bag| bag.iter().map(|v| *map.get(v).unwrap_or(v)).collect())
        .collect();
    Ok(TreeDecomposition::new(bags, td.edges.clone()))
}

/// Rebuild a decomposition for a quotient graph: bags mapped through
/// `vmap` (vertices absent from the map are dropped), then validated
/// against `target`; falls back to the min-fill heuristic when mapping
/// breaks a condition.
pub fn quotient_decomposition(
    td: &TreeDecomposition,
    vmap: &HashMap<VertexId, VertexId>,
    target: &Graph,
) -> TreeDecomposition {
    let bags: Vec<Vec<VertexId>> = td
        .bags
        .iter()
        .map(|bag| bag.iter().filter_map(|v| vmap.get(v)).copied().collect())
        .collect();
    let mapped = TreeDecomposition::new(bags, td.edges.clone());
    if mapped.validate(target).is_ok() {
        mapped
    } else {
        heuristic_decompose(target)
    }
}
