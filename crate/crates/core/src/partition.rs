//! Canonical partitions of an ordered ground set and the lattice operations
//! (join, refinement, elide) the DP states are made of.
//!
//! Encoding: restricted growth string over the sorted ground set. Block ids
//! appear in first-occurrence order, so two values compare equal iff they
//! denote the same set-partition, and hashing is O(|X|).

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partitions have different ground sets")]
    GroundMismatch,
    #[error("{0:?} is not in the ground set")]
    NotInGround(VertexId),
    #[error("{0:?} is already in the ground set")]
    AlreadyInGround(VertexId),
    #[error("ground set of size {0} exceeds the enumeration cap {1}")]
    EnumerationCap(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    ground: Vec<VertexId>,
    block_ids: Vec<u32>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<Vec<VertexId>> = self.blocks();
        write!(f, "{:?}", blocks)
    }
}

fn canonicalize(ids: &mut [u32]) {
    // Relabel so ids appear in first-occurrence order starting at 0.
    let mut map: Vec<Option<u32>> = vec![None; ids.len()];
    let mut next = 0u32;
    for id in ids.iter_mut() {
        let slot = &mut map[*id as usize];
        if slot.is_none() {
            *slot = Some(next);
            next += 1;
        }
        *id = slot.unwrap();
    }
}

impl Partition {
    /// Partition from an explicit element -> block-label assignment. Labels
    /// are arbitrary; only the induced grouping matters.
    pub fn from_labels(mut pairs: Vec<(VertexId, u32)>) -> Self {
        pairs.sort_unstable_by_key(|&(v, _)| v);
        let ground: Vec<VertexId> = pairs.iter().map(|&(v, _)| v).collect();
        debug_assert!(ground.windows(2).all(|w| w[0] < w[1]));
        // Labels may be sparse; compress via a sorted label list.
        let mut labels: Vec<u32> = pairs.iter().map(|&(_, b)| b).collect();
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        for l in labels.iter_mut() {
            *l = sorted.binary_search(l).unwrap() as u32;
        }
        canonicalize(&mut labels);
        Partition {
            ground,
            block_ids: labels,
        }
    }

    /// Partition from explicit blocks (must cover a duplicate-free ground).
    pub fn from_blocks(blocks: &[Vec<VertexId>]) -> Self {
        let mut pairs = Vec::new();
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                pairs.push((v, i as u32));
            }
        }
        Partition::from_labels(pairs)
    }

    /// All-singleton partition of `x`.
    pub fn bottom(x: &[VertexId]) -> Self {
        Partition::from_labels(x.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect())
    }

    /// Single-block partition {x}; the empty partition when `x` is empty.
    pub fn top(x: &[VertexId]) -> Self {
        Partition::from_labels(x.iter().map(|&v| (v, 0)).collect())
    }

    pub fn ground(&self) -> &[VertexId] {
        &self.ground
    }

    pub fn num_blocks(&self) -> usize {
        self.block_ids.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// True for the single-block partition (and the empty partition).
    pub fn is_top(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// Blocks sorted by minimum element.
    pub fn blocks(&self) -> Vec<Vec<VertexId>> {
        let mut out: Vec<Vec<VertexId>> = vec![Vec::new(); self.num_blocks()];
        for (i, &v) in self.ground.iter().enumerate() {
            out[self.block_ids[i] as usize].push(v);
        }
        out
    }

    fn index_of(&self, v: VertexId) -> Result<usize, PartitionError> {
        self.ground
            .binary_search(&v)
            .map_err(|_| PartitionError::NotInGround(v))
    }

    /// The block containing `v`, sorted.
    pub fn block_of(&self, v: VertexId) -> Result<Vec<VertexId>, PartitionError> {
        let id = self.block_ids[self.index_of(v)?];
        Ok(self
            .ground
            .iter()
            .zip(&self.block_ids)
            .filter(|&(_, &b)| b == id)
            .map(|(&w, _)| w)
            .collect())
    }

    pub fn same_block(&self, u: VertexId, v: VertexId) -> Result<bool, PartitionError> {
        Ok(self.block_ids[self.index_of(u)?] == self.block_ids[self.index_of(v)?])
    }

    /// Least upper bound in the partition lattice, by union-find over
    /// co-blocked elements.
    pub fn join(&self, other: &Partition) -> Result<Partition, PartitionError> {
        if self.ground != other.ground {
            return Err(PartitionError::GroundMismatch);
        }
        let n = self.ground.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for ids in [&self.block_ids, &other.block_ids] {
            let mut first_of_block: Vec<Option<usize>> = vec![None; n];
            for (i, &b) in ids.iter().enumerate() {
                match first_of_block[b as usize] {
                    None => first_of_block[b as usize] = Some(i),
                    Some(j) => {
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        parent[ri] = rj;
                    }
                }
            }
        }
        let mut ids = vec![0u32; n];
        for i in 0..n {
            ids[i] = find(&mut parent, i) as u32;
        }
        canonicalize(&mut ids);
        Ok(Partition {
            ground: self.ground.clone(),
            block_ids: ids,
        })
    }

    /// True iff every block of `self` is a subset of a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> Result<bool, PartitionError> {
        if self.ground != coarser.ground {
            return Err(PartitionError::GroundMismatch);
        }
        // Q refines P iff joining changes nothing about P.
        Ok(self.join(coarser)? == *coarser)
    }

    /// Remove `v` from its block (dropping the block if it empties); the
    /// ground set shrinks by `v`.
    pub fn elide(&self, v: VertexId) -> Result<Partition, PartitionError> {
        let pos = self.index_of(v)?;
        let pairs = self
            .ground
            .iter()
            .zip(&self.block_ids)
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, (&w, &b))| (w, b))
            .collect();
        Ok(Partition::from_labels(pairs))
    }

    /// Add `v` as a new singleton block.
    pub fn insert_singleton(&self, v: VertexId) -> Result<Partition, PartitionError> {
        if self.ground.binary_search(&v).is_ok() {
            return Err(PartitionError::AlreadyInGround(v));
        }
        let fresh = self.num_blocks() as u32;
        let mut pairs: Vec<(VertexId, u32)> = self
            .ground
            .iter()
            .zip(&self.block_ids)
            .map(|(&w, &b)| (w, b))
            .collect();
        pairs.push((v, fresh));
        Ok(Partition::from_labels(pairs))
    }

    /// Merge the blocks of `u` and `v` (no-op if already co-blocked).
    pub fn merge_blocks(&self, u: VertexId, v: VertexId) -> Result<Partition, PartitionError> {
        let bu = self.block_ids[self.index_of(u)?];
        let bv = self.block_ids[self.index_of(v)?];
        if bu == bv {
            return Ok(self.clone());
        }
        let pairs = self
            .ground
            .iter()
            .zip(&self.block_ids)
            .map(|(&w, &b)| (w, if b == bv { bu } else { b }))
            .collect();
        Ok(Partition::from_labels(pairs))
    }

    /// The partition of `x` defined by `g`: blocks are intersections of
    /// connected components of `g` with `x`.
    pub fn of_graph(g: &Graph, x: &[VertexId]) -> Result<Partition, PartitionError> {
        for &v in x {
            if !g.has_vertex(v) {
                return Err(PartitionError::NotInGround(v));
            }
        }
        let comps = g.components();
        let mut pairs = Vec::new();
        for &v in x {
            let c = comps
                .iter()
                .position(|comp| comp.binary_search(&v).is_ok())
                .unwrap();
            pairs.push((v, c as u32));
        }
        Ok(Partition::from_labels(pairs))
    }

    /// All Bell(|x|) partitions of `x`, canonical, no duplicates.
    pub fn enumerate_all(x: &[VertexId], cap: usize) -> Result<Vec<Partition>, PartitionError> {
        if x.len() > cap {
            return Err(PartitionError::EnumerationCap(x.len(), cap));
        }
        let mut out = Vec::new();
        let n = x.len();
        let mut ids = vec![0u32; n];
        fn rec(x: &[VertexId], ids: &mut Vec<u32>, i: usize, maxid: u32, out: &mut Vec<Partition>) {
            if i == x.len() {
                out.push(Partition {
                    ground: x.to_vec(),
                    block_ids: ids.clone(),
                });
                return;
            }
            for b in 0..=maxid {
                ids[i] = b;
                let newmax = if b == maxid { maxid + 1 } else { maxid };
                rec(x, ids, i + 1, newmax, out);
            }
        }
        if n == 0 {
            out.push(Partition::top(x));
        } else {
            let mut sorted = x.to_vec();
            sorted.sort_unstable();
            rec(&sorted, &mut ids, 0, 0, &mut out);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn vs(ids: &[usize]) -> Vec<VertexId> {
        ids.iter().map(|&i| VertexId(i)).collect()
    }

    fn p(blocks: &[&[usize]]) -> Partition {
        Partition::from_blocks(&blocks.iter().map(|b| vs(b)).collect::<Vec<_>>())
    }

    #[test]
    fn bottom_top() {
        assert_eq!(Partition::bottom(&vs(&[0, 1])), p(&[&[0], &[1]]));
        assert_eq!(Partition::top(&vs(&[0, 1, 2])), p(&[&[0, 1, 2]]));
        let empty = Partition::top(&[]);
        assert_eq!(empty.num_blocks(), 0);
        assert_eq!(empty, Partition::bottom(&[]));
        assert!(empty.is_top());
    }

    #[test]
    fn join_examples() {
        let bot = p(&[&[0], &[1]]);
        let top = p(&[&[0, 1]]);
        assert_eq!(bot.join(&top).unwrap(), top);
        assert_eq!(
            p(&[&[0, 1], &[2]]).join(&p(&[&[0], &[1, 2]])).unwrap(),
            p(&[&[0, 1, 2]])
        );
        assert!(bot.join(&Partition::top(&vs(&[0, 1, 2]))).is_err());
    }

    #[test]
    fn refines_examples() {
        let x = vs(&[0, 1, 2]);
        for q in Partition::enumerate_all(&x, 8).unwrap() {
            assert!(Partition::bottom(&x).refines(&q).unwrap());
            assert!(q.refines(&q).unwrap());
            assert!(q.refines(&Partition::top(&x)).unwrap());
        }
        assert!(!p(&[&[0, 1]]).refines(&p(&[&[0], &[1]])).unwrap());
    }

    #[test]
    fn elide_examples() {
        assert_eq!(p(&[&[0, 1], &[2]]).elide(VertexId(0)).unwrap(), p(&[&[1], &[2]]));
        assert_eq!(p(&[&[0]]).elide(VertexId(0)).unwrap(), Partition::top(&[]));
        assert_eq!(p(&[&[0, 1, 2]]).elide(VertexId(1)).unwrap(), p(&[&[0, 2]]));
        assert!(p(&[&[0]]).elide(VertexId(9)).is_err());
    }

    #[test]
    fn insert_merge_block_of() {
        assert_eq!(
            p(&[&[0]]).insert_singleton(VertexId(1)).unwrap(),
            p(&[&[0], &[1]])
        );
        assert!(p(&[&[0]]).insert_singleton(VertexId(0)).is_err());
        assert_eq!(
            p(&[&[0], &[1]]).merge_blocks(VertexId(0), VertexId(1)).unwrap(),
            p(&[&[0, 1]])
        );
        assert_eq!(
            p(&[&[0, 1]]).merge_blocks(VertexId(0), VertexId(1)).unwrap(),
            p(&[&[0, 1]])
        );
        assert_eq!(p(&[&[0, 2], &[1]]).block_of(VertexId(2)).unwrap(), vs(&[0, 2]));
    }

    #[test]
    fn of_graph_examples() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            Partition::of_graph(&path, &vs(&[0, 2])).unwrap(),
            p(&[&[0, 2]])
        );
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            Partition::of_graph(&two, &vs(&[0, 2])).unwrap(),
            p(&[&[0], &[2]])
        );
        assert_eq!(
            Partition::of_graph(&two, &[]).unwrap(),
            Partition::top(&[])
        );
        assert!(Partition::of_graph(&two, &vs(&[9])).is_err());
    }

    #[test]
    fn enumerate_bell_numbers() {
        for (n, bell) in [(0usize, 1usize), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)] {
            let x = vs(&(0..n).collect::<Vec<_>>());
            let all = Partition::enumerate_all(&x, 8).unwrap();
            assert_eq!(all.len(), bell);
            let uniq: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(uniq.len(), bell);
        }
        assert!(Partition::enumerate_all(&vs(&(0..9).collect::<Vec<_>>()), 8).is_err());
    }

    #[test]
    fn join_lattice_laws() {
        let x = vs(&[0, 1, 2, 3]);
        let all = Partition::enumerate_all(&x, 8).unwrap();
        let bot = Partition::bottom(&x);
        let top = Partition::top(&x);
        for a in &all {
            assert_eq!(a.join(a).unwrap(), *a);
            assert_eq!(a.join(&bot).unwrap(), *a);
            assert_eq!(a.join(&top).unwrap(), top);
            for b in &all {
                assert_eq!(a.join(b).unwrap(), b.join(a).unwrap());
                for c in &all {
                    assert_eq!(
                        a.join(b).unwrap().join(c).unwrap(),
                        a.join(&b.join(c).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn join_matches_graph_union() {
        // Random edge-disjoint H_P, H_Q on a shared vertex set where every
        // component touches X: the partition of the union is the join, and
        // the union is connected iff the join is the single-block partition.
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut done = 0;
        while done < 300 {
            // Vertices 0..xsize are X; the rest are split between the two
            // graphs so that V(H_P) ∩ V(H_Q) = X, the hypothesis this relies on.
            let n = rng.gen_range(2..7);
            let xsize = rng.gen_range(1..=n);
            let x: Vec<VertexId> = vs(&(0..xsize).collect::<Vec<_>>());
            let side: Vec<bool> = (0..n).map(|v| v < xsize || rng.gen_bool(0.5)).collect();
            let in_p = |v: usize| v < xsize || side[v];
            let in_q = |v: usize| v < xsize || !side[v];
            let mut ep = Vec::new();
            let mut eq = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if in_p(u) && in_p(v) && rng.gen_bool(0.5) {
                        ep.push((u, v));
                    } else if in_q(u) && in_q(v) && rng.gen_bool(0.5) {
                        eq.push((u, v));
                    }
                }
            }
            let pvs: Vec<VertexId> = (0..n).filter(|&v| in_p(v)).map(VertexId).collect();
            let qvs: Vec<VertexId> = (0..n).filter(|&v| in_q(v)).map(VertexId).collect();
            let to_pairs = |es: &[(usize, usize)]| {
                es.iter()
                    .map(|&(u, v)| (VertexId(u), VertexId(v)))
                    .collect::<Vec<_>>()
            };
            let hp = Graph::with_vertices(pvs, to_pairs(&ep)).unwrap();
            let hq = Graph::with_vertices(qvs, to_pairs(&eq)).unwrap();
            let touches_x = |g: &Graph| {
                g.components()
                    .iter()
                    .all(|c| c.iter().any(|v| v.0 < xsize))
            };
            if !touches_x(&hp) || !touches_x(&hq) {
                continue;
            }
            done += 1;
            let union = hp.union(&hq);
            let joined = Partition::of_graph(&hp, &x)
                .unwrap()
                .join(&Partition::of_graph(&hq, &x).unwrap())
                .unwrap();
            assert_eq!(Partition::of_graph(&union, &x).unwrap(), joined);
            assert_eq!(union.is_connected(), joined.is_top());
        }
    }
}
