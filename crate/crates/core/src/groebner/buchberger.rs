//! Division algorithm and Buchberger's algorithm for polynomial ideals.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::polyarith::{Field, Monomial, Polynomial, Ring};
use crate::polyarith::ring::check_same;

/// Fully reduces `f` modulo `divisors`.
///
/// At every step the leading term of the remaining part is rewritten by the
/// first divisor (in list order) whose leading monomial divides it; otherwise
/// it moves to the remainder. The result has no term divisible by any
/// divisor's leading monomial and `f - r` lies in the ideal they generate.
pub fn normal_form<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    for g in divisors {
        check_same(f.ring(), g.ring())?;
    }
    let divisors: Vec<&Polynomial<F>> = divisors.iter().filter(|g| !g.is_zero()).collect();
    let inv: Vec<F> = divisors.iter().map(|g| g.lead_coeff().unwrap().inverse()).collect::<Result<_>>()?;
    Ok(reduce(f, &divisors, &inv))
}

fn reduce<F: Field>(f: &Polynomial<F>, divisors: &[&Polynomial<F>], inv: &[F]) -> Polynomial<F> {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, F)> = Vec::new();
    while let Some((m, c)) = p.leading_term() {
        let hit = divisors.iter().zip(inv).find(|(g, _)| g.lead_monomial().unwrap().divides(m));
        match hit {
            Some((g, gi)) => {
                let q = g.lead_monomial().unwrap().quotient_of(m);
                let coef = c.clone() * gi;
                p = p.sub_mul_term(&coef, &q, g);
            }
            None => {
                let mut terms = p.into_terms();
                let head = terms.remove(0);
                rem.push(head);
                p = Polynomial::from_sorted(&ring, terms);
            }
        }
    }
    Polynomial::from_sorted(&ring, rem)
}

/// S-polynomial `lcm/lt(f) * f - lcm/lt(g) * g` with monic normalization of the leads.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    check_same(f.ring(), g.ring())?;
    let (fm, fc) = f.leading_term().ok_or(AlgebraError::DivisionByZero)?;
    let (gm, gc) = g.leading_term().ok_or(AlgebraError::DivisionByZero)?;
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&lcm), &fc.inverse()?);
    Ok(a.sub_mul_term(&gc.inverse()?, &gm.quotient_of(&lcm), g))
}

#[derive(Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Counts S-pair reductions against the ring's step limit.
pub(crate) struct StepCounter {
    limit: Option<u64>,
    used: u64,
}

impl StepCounter {
    pub(crate) fn new(ring: &Ring) -> Self {
        StepCounter { limit: ring.step_limit(), used: 0 }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(AlgebraError::BudgetExceeded(l)),
            _ => Ok(()),
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// descending leading monomial. The zero ideal has the empty basis and the
/// unit ideal the basis `{1}`.
pub fn reduced_basis<F: Field>(ring: &Arc<Ring>, gens: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
    for g in gens {
        check_same(ring, g.ring())?;
    }
    let unit = || vec![Polynomial::one(ring)];
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if g.is_constant() {
            return Ok(unit());
        }
        basis.push(g.monic());
    }
    basis.dedup();

    let order = ring.order();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            add_pair(&basis, &mut pairs, &mut pending, i, j);
        }
    }
    let mut steps = StepCounter::new(ring);

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.lcm
                    .degree()
                    .cmp(&pb.lcm.degree())
                    .then_with(|| order.compare(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
            })
            .unwrap();
        let Pair { i, j, lcm } = pairs.swap_remove(best);
        pending.remove(&(i, j));

        let (li, lj) = (basis[i].lead_monomial().unwrap(), basis[j].lead_monomial().unwrap());
        if li.is_coprime(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead_monomial().unwrap().divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        steps.tick()?;
        let s = s_polynomial(&basis[i], &basis[j])?;
        let refs: Vec<&Polynomial<F>> = basis.iter().collect();
        let ones: Vec<F> = vec![F::one(); refs.len()];
        let r = reduce(&s, &refs, &ones);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit());
        }
        basis.push(r.monic());
        let n = basis.len() - 1;
        for k in 0..n {
            add_pair(&basis, &mut pairs, &mut pending, k, n);
        }
    }

    let mut out = interreduce(basis);
    out.sort_by(|a, b| order.compare(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()));
    Ok(out)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn add_pair<F: Field>(
    basis: &[Polynomial<F>],
    pairs: &mut Vec<Pair>,
    pending: &mut HashSet<(usize, usize)>,
    i: usize,
    j: usize,
) {
    let lcm = basis[i].lead_monomial().unwrap().lcm(basis[j].lead_monomial().unwrap());
    pairs.push(Pair { i, j, lcm });
    pending.insert((i, j));
}

/// Removes elements whose leading monomial is divisible by another's, then
/// reduces every tail. Inputs must be monic and nonzero.
fn interreduce<F: Field>(mut polys: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    if polys.is_empty() {
        return polys;
    }
    let order = polys[0].ring().order();
    // ascending leads: a divisor always comes before its multiples
    polys.sort_by(|a, b| order.compare(a.lead_monomial().unwrap(), b.lead_monomial().unwrap()));
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for p in polys {
        let lm = p.lead_monomial().unwrap();
        if !minimal.iter().any(|q| q.lead_monomial().unwrap().divides(lm)) {
            minimal.push(p);
        }
    }
    let ones: Vec<F> = vec![F::one(); minimal.len()];
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Polynomial<F>> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p).collect();
        let r = reduce(&minimal[k], &others, &ones[..others.len()]);
        out.push(r.monic());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{parse_polynomial, MonomialOrder, Rational};

    fn lex_xy() -> Arc<Ring> {
        Ring::new(&["x", "y"], MonomialOrder::Lex).unwrap()
    }

    fn ps(ring: &Arc<Ring>, items: &[&str]) -> Vec<Polynomial<Rational>> {
        items.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect()
    }

    #[test]
    fn one_division_step() {
        let r = lex_xy();
        let g = ps(&r, &["x*y - 1"]);
        let f = parse_polynomial("x^2*y", &r).unwrap();
        assert_eq!(normal_form(&f, &g).unwrap().to_string(), "x");
    }

    #[test]
    fn member_of_divisors_reduces_to_zero() {
        let r = lex_xy();
        let g = ps(&r, &["x^2 - y", "x*y - 1"]);
        assert!(normal_form(&g[1], &g).unwrap().is_zero());
    }

    #[test]
    fn no_head_divides() {
        let r = lex_xy();
        let g = ps(&r, &["x"]);
        let f = parse_polynomial("y", &r).unwrap();
        assert_eq!(normal_form(&f, &g).unwrap(), f);
    }

    #[test]
    fn lex_basis_of_hyperbola_parabola() {
        let r = lex_xy();
        let basis = reduced_basis(&r, &ps(&r, &["x^2 - y", "x*y - 1"])).unwrap();
        let shown: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["x - y^2", "y^3 - 1"]);
    }

    #[test]
    fn already_reduced_and_monic() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let b = reduced_basis(&r, &ps(&r, &["x", "y"])).unwrap();
        assert_eq!(b, ps(&r, &["x", "y"]));
        let b = reduced_basis(&r, &ps(&r, &["2*x"])).unwrap();
        assert_eq!(b, ps(&r, &["x"]));
    }

    #[test]
    fn unit_and_zero() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        assert_eq!(reduced_basis(&r, &ps(&r, &["x", "x + 1"])).unwrap(), ps(&r, &["1"]));
        assert!(reduced_basis(&r, &ps(&r, &["0"])).unwrap().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let r = lex_xy().with_step_limit(Some(0));
        let err = reduced_basis(&r, &ps(&r, &["x^2 - y", "x*y - 1"])).unwrap_err();
        assert_eq!(err, AlgebraError::BudgetExceeded(0));
    }
}
