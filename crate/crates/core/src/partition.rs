//! Set partitions as restricted-growth strings.
//!
//! A partition of `0..n` is stored as `a[0..n]` with `a[0] = 0` and
//! `a[i] <= 1 + max(a[..i])`; block ids are therefore dense and in order of
//! first appearance, so each partition has exactly one encoding.

/// All restricted-growth strings of length `n` with exactly `blocks` distinct
/// values, in lexicographic order.
pub fn partitions_with_blocks(n: usize, blocks: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if blocks > n || (n > 0 && blocks == 0) {
        return out;
    }
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur = vec![0u8; n];
    fill(&mut cur, 1, 1, blocks, &mut out);
    out
}

fn fill(cur: &mut [u8], pos: usize, used: usize, blocks: usize, out: &mut Vec<Vec<u8>>) {
    let n = cur.len();
    if pos == n {
        if used == blocks {
            out.push(cur.to_vec());
        }
        return;
    }
    // Each remaining position can open at most one new block.
    if blocks - used > n - pos {
        return;
    }
    let top = used.min(blocks - 1);
    for v in 0..=top {
        cur[pos] = v as u8;
        fill(cur, pos + 1, used.max(v + 1), blocks, out);
    }
}

/// Every set partition of `0..n`, grouped by ascending block count.
pub fn all_partitions(n: usize) -> Vec<Vec<u8>> {
    (0..=n).flat_map(|b| partitions_with_blocks(n, b)).collect()
}

/// Relabels arbitrary block ids into restricted-growth form.
pub fn canonicalize(labels: &[usize]) -> Vec<usize> {
    let mut map: Vec<(usize, usize)> = Vec::new();
    labels
        .iter()
        .map(|&l| match map.iter().find(|(k, _)| *k == l) {
            Some(&(_, v)) => v,
            None => {
                let v = map.len();
                map.push((l, v));
                v
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(all_partitions(n).len(), b, "Bell({n})");
        }
    }

    #[test]
    fn stirling_numbers_of_the_second_kind() {
        // S(n,k) = k S(n-1,k) + S(n-1,k-1)
        let mut s = vec![vec![0usize; 11]; 11];
        s[0][0] = 1;
        for n in 1..=10 {
            for k in 1..=n {
                s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
            }
        }
        for (n, row) in s.iter().enumerate() {
            for (k, &count) in row.iter().enumerate().take(n + 1) {
                assert_eq!(partitions_with_blocks(n, k).len(), count, "S({n},{k})");
            }
        }
    }

    #[test]
    fn strings_are_restricted_growth_and_sorted() {
        let ps = partitions_with_blocks(6, 3);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        for p in &ps {
            let mut max = 0;
            assert_eq!(p[0], 0);
            for &x in &p[1..] {
                assert!(x <= max + 1);
                max = max.max(x);
            }
        }
    }

    #[test]
    fn canonicalize_relabels_by_first_appearance() {
        assert_eq!(canonicalize(&[7, 3, 7, 9]), vec![0, 1, 0, 2]);
        assert!(canonicalize(&[]).is_empty());
    }
}
