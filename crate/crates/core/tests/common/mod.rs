#![allow(dead_code)]

use std::sync::Arc;

use cmlocus::{Ideal, Monomial, Polynomial, PresentedModule, Rational, Ring};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = Rational;

pub fn ring(vars: &[&str]) -> Arc<Ring> {
    Ring::grevlex(vars).unwrap()
}

pub fn poly(ring: &Arc<Ring>, s: &str) -> Polynomial<Q> {
    cmlocus::polyarith::parse_polynomial(s, ring).unwrap()
}

pub fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal<Q> {
    Ideal::new(ring, gens.iter().map(|s| poly(ring, s)).collect()).unwrap()
}

pub fn quotient(ring: &Arc<Ring>, gens: &[&str]) -> PresentedModule<Q> {
    PresentedModule::quotient(&ideal(ring, gens))
}

/// Dimension of `R/I` from the leading monomials by trying every variable
/// subset: the largest set containing no variable support of a lead.
pub fn brute_force_dim(nvars: usize, leads: &[Monomial]) -> i64 {
    if leads.iter().any(|m| m.is_one()) {
        return -1;
    }
    let masks: Vec<u64> = leads.iter().map(|m| m.support_mask()).collect();
    (0u64..1 << nvars)
        .filter(|s| masks.iter().all(|m| m & !s != 0))
        .map(|s| s.count_ones() as i64)
        .max()
        .unwrap_or(0)
}

/// A monomial quotient `R/I` on named variables, given by exponent vectors.
#[derive(Clone, Debug)]
pub struct MonomialCase {
    pub name: &'static str,
    pub vars: Vec<&'static str>,
    pub gens: Vec<&'static str>,
}

impl MonomialCase {
    pub fn new(name: &'static str, vars: &[&'static str], gens: &[&'static str]) -> Self {
        MonomialCase { name, vars: vars.to_vec(), gens: gens.to_vec() }
    }

    pub fn ring(&self) -> Arc<Ring> {
        ring(&self.vars)
    }

    pub fn ideal(&self) -> Ideal<Q> {
        ideal(&self.ring(), &self.gens)
    }

    pub fn module(&self) -> PresentedModule<Q> {
        PresentedModule::quotient(&self.ideal())
    }

    fn monomials(&self) -> Vec<Monomial> {
        let r = self.ring();
        self.gens.iter().map(|g| poly(&r, g).lead_monomial().unwrap().clone()).collect()
    }
}

pub fn monomial_suite() -> Vec<MonomialCase> {
    vec![
        MonomialCase::new("two planes", &["x", "y", "z", "w"], &["xz", "xw", "yz", "yw"]),
        MonomialCase::new("embedded point", &["x", "y", "z"], &["x^2", "x*y"]),
        MonomialCase::new("plane and line", &["x", "y", "z", "w"], &["x*y", "x*z"]),
        MonomialCase::new("coordinate axes", &["x", "y", "z"], &["x*y", "x*z", "y*z"]),
        MonomialCase::new("four cycle", &["a", "b", "c", "d"], &["a*b", "b*c", "c*d", "d*a"]),
        MonomialCase::new("path", &["a", "b", "c", "d", "e"], &["a*b", "b*c", "c*d", "d*e"]),
        MonomialCase::new("two three-planes", &["a", "b", "c", "d", "e", "f"], &[
            "a*d", "a*e", "a*f", "b*d", "b*e", "b*f", "c*d", "c*e", "c*f",
        ]),
        MonomialCase::new("mixed powers", &["x", "y", "z"], &["x^2*y", "x*y^2", "z^3"]),
    ]
}

/// Depth of `(R/I)_p` for monomial `I` and the variable prime `p`, or `None`
/// when `p` is outside the support.
///
/// Localizing at `p` sets the other variables to 1. The resulting graded
/// quotient of `k[p]` is then probed for regular linear forms until the socle
/// test `(J : m) != J` shows that the maximal ideal is associated.
pub fn localized_depth(case: &MonomialCase, p: &[usize], seed: u64) -> Option<i64> {
    let gens = case.monomials();
    if p.is_empty() {
        return if gens.is_empty() { Some(0) } else { None };
    }
    let vars: Vec<&str> = p.iter().map(|&i| case.vars[i]).collect();
    let s = ring(&vars);
    let local: Vec<Polynomial<Q>> = gens
        .iter()
        .map(|g| {
            let exps: Vec<u32> = p.iter().map(|&i| g.exponents()[i]).collect();
            Polynomial::monomial(&s, Monomial::new(exps), Q::one())
        })
        .collect();
    let mut j = Ideal::new(&s, local).unwrap();
    if j.is_unit() {
        return None;
    }
    let m = Ideal::maximal(&s);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut depth = 0;
    loop {
        if j.quotient(&m).unwrap() != j {
            return Some(depth);
        }
        let mut found = None;
        for _ in 0..200 {
            let mut l = Polynomial::zero(&s);
            for v in 0..vars.len() {
                let c: i64 = rng.gen_range(1..=50);
                l = &l + &Polynomial::variable(&s, v).scale(&Q::from_integer(c.into()));
            }
            if j.quotient_by(&l).unwrap() == j {
                found = Some(l);
                break;
            }
        }
        let l = found.expect("a regular linear form exists when the socle vanishes");
        let mut g = j.generators().to_vec();
        g.push(l);
        j = Ideal::new(&s, g).unwrap();
        depth += 1;
    }
}

/// All subsets of `0..n` as sorted index vectors.
pub fn variable_subsets(n: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n).map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect()).collect()
}
