use super::{low_bits, VertexSubset};
use crate::error::{Error, Result};

/// All `k`-subsets of `0..n` in increasing order of their bitmask.
#[derive(Clone, Debug)]
pub struct KSubsets {
    n: usize,
    next: Option<u64>,
}

pub fn k_subsets(n: usize, k: usize) -> Result<KSubsets> {
    if k > n {
        return Err(Error::KOutOfRange { k, min: 0, max: n });
    }
    if n > 63 {
        return Err(Error::UnsupportedSize(format!("subsets of {n} elements")));
    }
    Ok(KSubsets {
        n,
        next: Some(low_bits(k)),
    })
}

impl Iterator for KSubsets {
    type Item = VertexSubset;

    fn next(&mut self) -> Option<VertexSubset> {
        let cur = self.next?;
        let limit = 1u64 << self.n;
        // Gosper's hack: next larger integer with the same popcount.
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < limit).then_some(nxt)
        };
        Some(VertexSubset::from_mask(self.n, cur).expect("mask within range"))
    }
}

/// Masks of all `k`-subsets of `0..n`, collected.
pub(crate) fn k_subset_masks(n: usize, k: usize) -> Result<Vec<u64>> {
    Ok(k_subsets(n, k)?.map(|s| s.mask()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let v: Vec<_> = k_subsets(3, 2).unwrap().map(|s| s.to_vec()).collect();
        assert_eq!(v, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(k_subsets(4, 4).unwrap().count(), 1);
        let empty: Vec<_> = k_subsets(5, 0).unwrap().collect();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
        assert!(k_subsets(3, 4).is_err());
    }

    #[test]
    fn counts_are_binomial() {
        let mut row = vec![1u64];
        for n in 1..=12usize {
            let mut next = vec![1u64; n + 1];
            for k in 1..n {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(k_subsets(n, k).unwrap().count() as u64, c, "C({n},{k})");
            }
        }
    }
}
