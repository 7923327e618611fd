//! Minimal and associated primes of monomial ideals, by pure combinatorics.

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::polyarith::{Field, Monomial};

/// Primes of a monomial ideal, each given as a sorted set of variable indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPrimes {
    pub minimal: Vec<Vec<usize>>,
    pub associated: Vec<Vec<usize>>,
}

fn minimal_generators(ideal_gens: &[Monomial]) -> Vec<Monomial> {
    let mut gens = ideal_gens.to_vec();
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn sort_primes(mut primes: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    primes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    primes.dedup();
    primes
}

/// Minimal variable sets meeting the support of every generator.
pub fn minimal_vertex_covers(gens: &[Monomial]) -> Vec<Vec<usize>> {
    let edges: Vec<u64> = minimal_generators(gens).iter().map(|m| m.support_mask()).collect();
    if edges.iter().any(|&e| e == 0) {
        return Vec::new();
    }
    let mut covers: Vec<u64> = Vec::new();
    branch(&edges, 0, &mut covers);
    covers.sort_by_key(|c| c.count_ones());
    let mut minimal: Vec<u64> = Vec::new();
    for c in covers {
        if !minimal.iter().any(|&m| m & c == m) {
            minimal.push(c);
        }
    }
    sort_primes(minimal.into_iter().map(to_indices).collect())
}

fn branch(edges: &[u64], chosen: u64, out: &mut Vec<u64>) {
    match edges.iter().find(|&&e| e & chosen == 0) {
        None => out.push(chosen),
        Some(&e) => {
            for v in to_indices(e) {
                branch(edges, chosen | 1 << v, out);
            }
        }
    }
}

/// `(I : f)` for monomial `I`, minimally generated.
pub fn monomial_quotient(gens: &[Monomial], f: &Monomial) -> Vec<Monomial> {
    let q: Vec<Monomial> = gens.iter().map(|g| f.gcd(g).quotient_of(g)).collect();
    minimal_generators(&q)
}

/// Variable primes `p` with `(I : f) = p` for some monomial `f`.
///
/// Exponents above the largest exponent of a variable among the generators do
/// not change `(I : f)`, so searching that box is exhaustive.
pub fn monomial_associated_primes(gens: &[Monomial], nvars: usize) -> Vec<Vec<usize>> {
    let gens = minimal_generators(gens);
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let bounds: Vec<u32> =
        (0..nvars).map(|i| gens.iter().map(|g| g.exponents()[i]).max().unwrap_or(0)).collect();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let f = Monomial::new(exps.clone());
        let q = monomial_quotient(&gens, &f);
        if !q.iter().any(|m| m.is_one()) && q.iter().all(|m| m.degree() == 1) {
            let mut p: Vec<usize> = q.iter().map(|m| m.support().next().unwrap()).collect();
            p.sort_unstable();
            found.push(p);
        }
        let mut i = 0;
        while i < nvars && exps[i] == bounds[i] {
            exps[i] = 0;
            i += 1;
        }
        if i == nvars {
            break;
        }
        exps[i] += 1;
    }
    sort_primes(found)
}

/// Minimal and associated primes of a monomial ideal.
pub fn monomial_primes_oracle<F: Field>(ideal: &Ideal<F>) -> Result<MonomialPrimes> {
    if !ideal.is_monomial() {
        return Err(AlgebraError::NonMonomial);
    }
    let gens = ideal.lead_monomials();
    let n = ideal.ring().nvars();
    if ideal.is_zero() {
        return Ok(MonomialPrimes { minimal: vec![vec![]], associated: vec![vec![]] });
    }
    Ok(MonomialPrimes { minimal: minimal_vertex_covers(&gens), associated: monomial_associated_primes(&gens, n) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{parse_polynomial, Rational, Ring};
    use std::sync::Arc;

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal<Rational> {
        Ideal::new(ring, gens.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect()).unwrap()
    }

    #[test]
    fn two_planes() {
        let r = Ring::grevlex(&["x", "y", "z", "w"]).unwrap();
        let p = monomial_primes_oracle(&ideal(&r, &["xz", "xw", "yz", "yw"])).unwrap();
        assert_eq!(p.minimal, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(p.associated, p.minimal);
    }

    #[test]
    fn embedded_prime() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let p = monomial_primes_oracle(&ideal(&r, &["x^2", "x*y"])).unwrap();
        assert_eq!(p.minimal, vec![vec![0]]);
        assert_eq!(p.associated, vec![vec![0], vec![0, 1]]);
    }

    #[test]
    fn principal() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let p = monomial_primes_oracle(&ideal(&r, &["x"])).unwrap();
        assert_eq!(p.minimal, vec![vec![0]]);
        assert_eq!(p.associated, vec![vec![0]]);
    }

    #[test]
    fn non_monomial_is_rejected() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        assert_eq!(monomial_primes_oracle(&ideal(&r, &["x + y"])).unwrap_err(), AlgebraError::NonMonomial);
    }
}
