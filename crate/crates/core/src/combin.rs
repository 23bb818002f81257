//! Binomial coefficients and colexicographic ranking of r-subsets.
//!
//! Edge sets of a coloring are stored as flat arrays indexed by colex rank:
//! the rank of `{a_1 < a_2 < ... < a_r}` is `sum C(a_i, i)`. All counts stay
//! within `u64` because hosts are capped at [`MAX_ORDER`] vertices.

/// Largest supported host order; `C(64, 32)` still fits in a `u64`.
pub const MAX_ORDER: usize = 64;

/// `C(n, k)` with `C(n, k) = 0` whenever `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    debug_assert!(n <= MAX_ORDER, "binomial argument {n} beyond supported cap");
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc holds C(n, i) here
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial within u64 under MAX_ORDER cap")
}

/// Colex rank of a strictly increasing r-subset.
pub fn colex_rank(subset: &[usize]) -> u64 {
    let mut rank = 0u64;
    for (i, &a) in subset.iter().enumerate() {
        rank += binomial(a, i + 1);
    }
    rank
}

/// Inverse of [`colex_rank`] for subsets of size `r`.
pub fn colex_unrank(mut rank: u64, r: usize) -> Vec<usize> {
    let mut out = vec![0usize; r];
    for i in (1..=r).rev() {
        // largest a with C(a, i) <= rank
        let mut a = i - 1;
        while binomial(a + 1, i) <= rank {
            a += 1;
        }
        out[i - 1] = a;
        rank -= binomial(a, i);
    }
    debug_assert_eq!(rank, 0);
    out
}

/// Iterator over all r-subsets of `{0, .., n-1}` in colex order.
pub struct ColexSubsets {
    n: usize,
    r: usize,
    current: Option<Vec<usize>>,
}

pub fn colex_subsets(n: usize, r: usize) -> ColexSubsets {
    let current = if r <= n {
        Some((0..r).collect())
    } else {
        None
    };
    ColexSubsets { n, r, current }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.clone()?;
        // advance in place: bump the lowest position that has headroom,
        // resetting everything below it
        let mut advanced = false;
        if let Some(next) = self.current.as_mut() {
            for i in 0..self.r {
                let limit = if i + 1 < self.r {
                    next[i + 1]
                } else {
                    self.n
                };
                if next[i] + 1 < limit {
                    next[i] += 1;
                    for (j, slot) in next.iter_mut().enumerate().take(i) {
                        *slot = j;
                    }
                    advanced = true;
                    break;
                }
            }
        }
        if !advanced {
            self.current = None;
        }
        Some(cur)
    }
}

/// All permutations of `0..k` in lexicographic order; `k` is tiny (≤ 4 in
/// practice, the uniformity of an edge).
pub fn small_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        out.push(perm.clone());
        // next_permutation
        if k < 2 {
            break;
        }
        let mut i = k - 1;
        while i > 0 && perm[i - 1] >= perm[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = k - 1;
        while perm[j] <= perm[i - 1] {
            j -= 1;
        }
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn colex_rank_first_and_last() {
        assert_eq!(colex_rank(&[0, 1, 2]), 0);
        assert_eq!(colex_rank(&[0, 1, 3]), 1);
        assert_eq!(colex_rank(&[4, 5, 6]), binomial(7, 3) - 1);
    }

    #[test]
    fn unrank_is_inverse_of_rank() {
        for rank in 0..binomial(9, 3) {
            let s = colex_unrank(rank, 3);
            assert_eq!(colex_rank(&s), rank);
        }
        for rank in 0..binomial(8, 2) {
            let s = colex_unrank(rank, 2);
            assert_eq!(colex_rank(&s), rank);
        }
    }

    #[test]
    fn subsets_enumerate_in_rank_order() {
        let all: Vec<_> = colex_subsets(6, 3).collect();
        assert_eq!(all.len(), 20);
        for (i, s) in all.iter().enumerate() {
            assert_eq!(colex_rank(s), i as u64);
        }
        assert_eq!(colex_subsets(2, 3).count(), 0);
        assert_eq!(colex_subsets(4, 0).count(), 1);
    }

    #[test]
    fn permutations_cover_factorial() {
        assert_eq!(small_permutations(3).len(), 6);
        assert_eq!(small_permutations(4).len(), 24);
        assert_eq!(small_permutations(1), vec![vec![0]]);
    }
}
