//! Rank-based reduction of partition sets to representative subsets.
//!
//! The cut matrix has one row per partition and one column per subset
//! S of the ground set containing the anchor (minimum) element; the entry is
//! 1 iff every block lies inside S or inside its complement. Gaussian
//! elimination over GF(2) on bit-packed rows keeps a row basis, which is a
//! representative subset of size at most 2^{|X|-1}.

use thiserror::Error;

use crate::partition::{Partition, PartitionError};

/// Columns double per ground element, so widths past this are a resource
/// problem, not an input problem.
pub const DEFAULT_WIDTH_CAP: usize = 30;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepsetError {
    #[error("ground set of size {0} exceeds the representative-set width cap {1}")]
    WidthCap(usize, usize),
    #[error("partitions in the set have different ground sets")]
    GroundMismatch,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Bit-packed cut-matrix row of a partition: bit j set iff the partition
/// "fits" the subset with mask (2j+1) (anchor always in S).
fn cut_row(p: &Partition, words: usize) -> Vec<u64> {
    let n = p.ground().len();
    debug_assert!(n >= 1);
    // Block mask per ground position index.
    let blocks = p.blocks();
    let mut block_masks: Vec<u64> = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let mut m = 0u64;
        for v in b {
            let pos = p.ground().binary_search(v).unwrap();
            m |= 1u64 << pos;
        }
        block_masks.push(m);
    }
    let mut row = vec![0u64; words];
    let ncols = 1usize << (n - 1);
    for j in 0..ncols {
        let s: u64 = ((j as u64) << 1) | 1; // anchor = position 0 always in S
        let fits = block_masks
            .iter()
            .all(|&bm| (bm & s) == bm || (bm & s) == 0);
        if fits {
            row[j >> 6] |= 1u64 << (j & 63);
        }
    }
    row
}

/// Representative subset of `a`: the returned set is a
/// subset of the input, has size at most max(1, 2^{|X|-1}), and for every
/// P in the input and every R with P ⊔ R = top, some member Q also has
/// Q ⊔ R = top. First-seen rows win, so the result is deterministic given
/// the input order.
pub fn reduce(a: &[Partition], width_cap: usize) -> Result<Vec<Partition>, RepsetError> {
    let mut seen = std::collections::HashSet::new();
    let deduped: Vec<&Partition> = a.iter().filter(|p| seen.insert((*p).clone())).collect();
    let Some(first) = deduped.first() else {
        return Ok(Vec::new());
    };
    let ground = first.ground().to_vec();
    if deduped.iter().any(|p| p.ground() != ground) {
        return Err(RepsetError::GroundMismatch);
    }
    if ground.len() > width_cap {
        return Err(RepsetError::WidthCap(ground.len(), width_cap));
    }
    if ground.is_empty() {
        // Only the empty partition exists; dedup already handled it.
        return Ok(deduped.into_iter().cloned().collect());
    }

    let ncols = 1usize << (ground.len() - 1);
    let words = ncols.div_ceil(64);
    // Standard row elimination with a pivot table; a row that survives with
    // a fresh pivot joins the basis.
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new(); // (pivot bit, reduced row)
    let mut basis = Vec::new();
    for p in deduped {
        let mut row = cut_row(p, words);
        for (piv, prow) in &pivots {
            if row[piv >> 6] >> (piv & 63) & 1 == 1 {
                for (r, q) in row.iter_mut().zip(prow) {
                    *r ^= q;
                }
            }
        }
        if let Some(piv) = (0..ncols).find(|&j| row[j >> 6] >> (j & 63) & 1 == 1) {
            pivots.push((piv, row));
            basis.push(p.clone());
        }
    }
    debug_assert!(basis.len() <= ncols);
    Ok(basis)
}

/// Exhaustive check of the representative-subset property; test oracle only.
pub fn represents(b: &[Partition], a: &[Partition], cap: usize) -> Result<bool, RepsetError> {
    let bset: std::collections::HashSet<&Partition> = b.iter().collect();
    if !b.iter().all(|q| a.contains(q)) {
        return Ok(false);
    }
    let Some(first) = a.first() else {
        return Ok(b.is_empty());
    };
    let ground = first.ground().to_vec();
    let all_r = Partition::enumerate_all(&ground, cap)?;
    for p in a {
        for r in &all_r {
            if p.join(r)?.is_top() && !bset.iter().any(|q| q.join(r).unwrap().is_top()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;
    use rand::{seq::SliceRandom, Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn vs(n: usize) -> Vec<VertexId> {
        (0..n).map(VertexId).collect()
    }

    #[test]
    fn reduce_trivia() {
        assert!(reduce(&[], DEFAULT_WIDTH_CAP).unwrap().is_empty());

        // X = {a,b}: only the single-block partition completes R = bottom.
        let x = vs(2);
        let bot = Partition::bottom(&x);
        let top = Partition::top(&x);
        let b = reduce(&[bot.clone(), top.clone()], DEFAULT_WIDTH_CAP).unwrap();
        assert!(b.contains(&top));
        assert!(represents(&b, &[bot, top], 8).unwrap());

        // All 5 partitions of a 3-set reduce to at most 4.
        let x = vs(3);
        let all = Partition::enumerate_all(&x, 8).unwrap();
        let b = reduce(&all, DEFAULT_WIDTH_CAP).unwrap();
        assert!(b.len() <= 4);
        assert!(represents(&b, &all, 8).unwrap());
    }

    #[test]
    fn represents_trivia() {
        let x = vs(2);
        let all = Partition::enumerate_all(&x, 8).unwrap();
        assert!(represents(&all, &all, 8).unwrap());
        assert!(!represents(&[], &[Partition::top(&x)], 8).unwrap());
    }

    #[test]
    fn empty_ground_set() {
        let e = Partition::top(&[]);
        let b = reduce(&[e.clone(), e.clone()], DEFAULT_WIDTH_CAP).unwrap();
        assert_eq!(b, vec![e]);
    }

    #[test]
    fn width_cap_error() {
        let x = vs(31);
        let a = [Partition::top(&x)];
        assert!(matches!(
            reduce(&a, DEFAULT_WIDTH_CAP),
            Err(RepsetError::WidthCap(31, 30))
        ));
    }

    #[test]
    fn reduce_random_is_representative_and_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=4usize {
            let x = vs(n);
            let all = Partition::enumerate_all(&x, 8).unwrap();
            for _ in 0..200 {
                let k = rng.gen_range(0..=all.len());
                let mut a: Vec<Partition> = all
                    .choose_multiple(&mut rng, k)
                    .cloned()
                    .collect();
                a.shuffle(&mut rng);
                let b = reduce(&a, DEFAULT_WIDTH_CAP).unwrap();
                assert!(b.iter().all(|q| a.contains(q)));
                assert!(b.len() <= std::cmp::max(1, 1 << (n - 1)));
                assert!(represents(&b, &a, 8).unwrap());
                let b2 = reduce(&b, DEFAULT_WIDTH_CAP).unwrap();
                assert_eq!(b2, b);
            }
        }
    }

    #[test]
    fn reduce_random_wider_grounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for n in [5usize, 6] {
            let x = vs(n);
            let all = Partition::enumerate_all(&x, 8).unwrap();
            for _ in 0..20 {
                let k = rng.gen_range(1..=60.min(all.len()));
                let a: Vec<Partition> = all.choose_multiple(&mut rng, k).cloned().collect();
                let b = reduce(&a, DEFAULT_WIDTH_CAP).unwrap();
                assert!(b.len() <= 1 << (n - 1));
                assert!(represents(&b, &a, 8).unwrap());
            }
        }
    }
}
