//! Krull dimension from leading monomials.
//!
//! `dim R/I` is the largest size of a variable set `S` such that no leading
//! monomial of a Gröbner basis of `I` is supported inside `S`. The search is
//! exhaustive (branch and bound over subsets), which is fine for the small
//! variable counts this crate targets but exponential in general.

use crate::polyarith::Monomial;

/// Dimension of `k[x_1..x_n] / I` given the leading monomials of a Gröbner
/// basis of `I`. Returns `-1` when a leading monomial is `1`.
pub fn dimension_from_leads(nvars: usize, leads: &[Monomial]) -> i64 {
    if leads.iter().any(|m| m.is_one()) {
        return -1;
    }
    let masks: Vec<u64> = leads.iter().map(|m| m.support_mask()).collect();
    let mut best = 0usize;
    search(nvars, &masks, 0, 0, 0, &mut best);
    best as i64
}

fn independent(masks: &[u64], set: u64) -> bool {
    masks.iter().all(|m| m & !set != 0)
}

fn search(n: usize, masks: &[u64], i: usize, set: u64, size: usize, best: &mut usize) {
    if size + (n - i) <= *best {
        return;
    }
    if i == n {
        *best = size;
        return;
    }
    let with = set | (1 << i);
    if independent(masks, with) {
        search(n, masks, i + 1, with, size + 1, best);
    }
    search(n, masks, i + 1, set, size, best);
}
