//! Gröbner bases of submodules of free modules.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::groebner::buchberger::StepCounter;
use crate::modres::free::{pot_compare, FreeElement};
use crate::polyarith::{Field, Monomial, Ring};

/// Full normal form of `v` modulo `divisors` (leading term first, divisors in
/// list order, only divisors with the same leading component apply).
pub fn module_normal_form<F: Field>(v: &FreeElement<F>, divisors: &[FreeElement<F>]) -> Result<FreeElement<F>> {
    let divs: Vec<&FreeElement<F>> = divisors.iter().filter(|d| !d.is_zero()).collect();
    for d in &divs {
        if d.rank() != v.rank() {
            return Err(AlgebraError::RankMismatch { expected: v.rank(), found: d.rank() });
        }
    }
    let inv: Vec<F> = divs.iter().map(|d| d.lead().unwrap().2.inverse()).collect::<Result<_>>()?;
    Ok(reduce(v, &divs, &inv))
}

fn reduce<F: Field>(v: &FreeElement<F>, divs: &[&FreeElement<F>], inv: &[F]) -> FreeElement<F> {
    let mut p = v.clone();
    let mut rem = FreeElement::zero(v.ring(), v.rank());
    loop {
        let Some((comp, m, c)) = p.lead() else { break };
        let hit = divs.iter().zip(inv).find(|(d, _)| {
            let (dc, dm, _) = d.lead().unwrap();
            dc == comp && dm.divides(m)
        });
        match hit {
            Some((d, di)) => {
                let q = d.lead().unwrap().1.quotient_of(m);
                let coef = c.clone() * di;
                p = p.sub_mul_term(&coef, &q, d);
            }
            None => {
                let (head, rest) = p.tail();
                rem.push_sorted(head.unwrap());
                p = rest;
            }
        }
    }
    rem
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Reduced Gröbner basis of the submodule of `R^rank` generated by `gens`,
/// under the position-over-term order. Sorted by descending leading term.
pub fn module_buchberger<F: Field>(ring: &Arc<Ring>, rank: usize, gens: &[FreeElement<F>]) -> Result<Vec<FreeElement<F>>> {
    for g in gens {
        if g.rank() != rank {
            return Err(AlgebraError::RankMismatch { expected: rank, found: g.rank() });
        }
    }
    let mut basis: Vec<FreeElement<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    basis.dedup();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |basis: &[FreeElement<F>], pairs: &mut Vec<Pair>, pending: &mut HashSet<(usize, usize)>, j: usize| {
        let (cj, mj, _) = basis[j].lead().unwrap();
        for i in 0..j {
            let (ci, mi, _) = basis[i].lead().unwrap();
            if ci == cj {
                pairs.push(Pair { i, j, lcm: mi.lcm(mj) });
                pending.insert((i, j));
            }
        }
    };
    for j in 0..basis.len() {
        push_pairs(&basis, &mut pairs, &mut pending, j);
    }
    let mut steps = StepCounter::new(ring);
    let order = ring.order();

    while !pairs.is_empty() {
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
        let comp = basis[i].lead_component().unwrap();
        let (mi, mj) = (basis[i].lead().unwrap().1.clone(), basis[j].lead().unwrap().1.clone());

        // coprime leads only guarantee a zero S-pair for rank one
        if rank == 1 && mi.is_coprime(&mj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let (ck, mk, _) = basis[k].lead().unwrap();
            ck == comp && mk.divides(&lcm) && !pending.contains(&key(i, k)) && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        steps.tick()?;
        let (ci_inv, cj_inv) = (basis[i].lead().unwrap().2.inverse()?, basis[j].lead().unwrap().2.inverse()?);
        let s = basis[i]
            .mul_term(&mi.quotient_of(&lcm), &ci_inv)
            .sub_mul_term(&cj_inv, &mj.quotient_of(&lcm), &basis[j]);
        let refs: Vec<&FreeElement<F>> = basis.iter().collect();
        let ones = vec![F::one(); refs.len()];
        let r = reduce(&s, &refs, &ones);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let n = basis.len() - 1;
        push_pairs(&basis, &mut pairs, &mut pending, n);
    }
    Ok(interreduce(ring, basis))
}

fn interreduce<F: Field>(ring: &Arc<Ring>, mut elems: Vec<FreeElement<F>>) -> Vec<FreeElement<F>> {
    let lead_cmp = |a: &FreeElement<F>, b: &FreeElement<F>| {
        let (ca, ma, _) = a.lead().unwrap();
        let (cb, mb, _) = b.lead().unwrap();
        pot_compare(ring, (ca, ma), (cb, mb))
    };
    elems.sort_by(lead_cmp);
    let mut minimal: Vec<FreeElement<F>> = Vec::new();
    for e in elems {
        let (c, m, _) = e.lead().unwrap();
        let redundant = minimal.iter().any(|q| {
            let (qc, qm, _) = q.lead().unwrap();
            qc == c && qm.divides(m)
        });
        if !redundant {
            minimal.push(e);
        }
    }
    let ones = vec![F::one(); minimal.len()];
    let mut out: Vec<FreeElement<F>> = (0..minimal.len())
        .map(|k| {
            let others: Vec<&FreeElement<F>> =
                minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, e)| e).collect();
            reduce(&minimal[k], &others, &ones[..others.len()]).monic()
        })
        .collect();
    out.sort_by(|a, b| lead_cmp(b, a));
    out
}

/// Whether `v` lies in the submodule with Gröbner basis `basis`.
pub fn module_contains<F: Field>(basis: &[FreeElement<F>], v: &FreeElement<F>) -> Result<bool> {
    Ok(module_normal_form(v, basis)?.is_zero())
}
