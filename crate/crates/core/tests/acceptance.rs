mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use cmlocus::duality::{deficiency_modules, ext_module};
use cmlocus::groebner::{normal_form, reduced_basis, s_polynomial};
use cmlocus::locus::{
    depth_dim_at_prime, is_cm_at_prime, monomial_primes_oracle, ncm_a_ideal, ncm_t_ideal, psupp_ideal,
    serre_condition, shallow_locus_ideal, PrimeIdeal,
};
use cmlocus::modres::free_resolution;
use cmlocus::{Ideal, Monomial, MonomialOrder, Polynomial, PresentedModule, Ring};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn two_planes_golden() -> Outcome {
    let start = Instant::now();
    let r = ring(&["x", "y", "z", "w"]);
    let m = quotient(&r, &["xz", "xw", "yz", "yw"]);
    let d = deficiency_modules(&m, false).map_err(|e| e.to_string())?;
    let maximal = Ideal::maximal(&r);
    ensure((d.depth(), d.dim()) == (1, 2), || format!("depth/dim = {}/{}", d.depth(), d.dim()))?;
    ensure(psupp_ideal(&d, 1).unwrap().same_radical(&maximal).unwrap(), || "rad a_1 != m".into())?;
    ensure(ncm_t_ideal(&d).unwrap().same_radical(&maximal).unwrap(), || "rad T(M) != m".into())?;
    ensure(ncm_a_ideal(&d).unwrap().same_radical(&maximal).unwrap(), || "rad a(M) != m".into())?;
    ensure(serre_condition(&d, 1).unwrap() && !serre_condition(&d, 2).unwrap(), || "Serre flags".into())?;
    let p = PrimeIdeal::variables(&r, &[0, 1]);
    ensure(depth_dim_at_prime(&d, &p).unwrap() == (0, 0), || "at (x,y)".into())?;
    ensure(is_cm_at_prime(&d, &p).unwrap(), || "not CM at (x,y)".into())?;

    // independent oracles
    let case = MonomialCase::new("two planes", &["x", "y", "z", "w"], &["xz", "xw", "yz", "yw"]);
    let oracle_depth = localized_depth(&case, &[0, 1, 2, 3], 7);
    ensure(oracle_depth == Some(1), || format!("regular sequence oracle gives {oracle_depth:?}"))?;
    let i = case.ideal();
    let witness = i.sum(&ideal(&r, &["x + z"])).unwrap();
    ensure(i.quotient_by(&poly(&r, "x + z")).unwrap() == i, || "x+z is a zero divisor".into())?;
    ensure(witness.quotient(&maximal).unwrap() != witness, || "socle after x+z vanishes".into())?;
    let bf = brute_force_dim(4, &d.annihilator().lead_monomials());
    ensure(bf == 2, || format!("independent-set dimension {bf}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("depth 1, dim 2, loci and flags match; {elapsed:.2?}"))
}

fn cm_controls() -> Outcome {
    let r = ring(&["x", "y"]);
    let modules =
        [("R", PresentedModule::free(&r, 1)), ("R/(x)", quotient(&r, &["x"])), ("R/(x,y)", quotient(&r, &["x", "y"]))];
    for (name, m) in &modules {
        let d = deficiency_modules(m, true).map_err(|e| e.to_string())?;
        for i in 0..d.dim() {
            ensure(psupp_ideal(&d, i).unwrap().is_unit(), || format!("{name}: Psupp^{i} nonempty"))?;
        }
        ensure(ncm_t_ideal(&d).unwrap().is_unit(), || format!("{name}: T(M) proper"))?;
        ensure(ncm_a_ideal(&d).unwrap().is_unit(), || format!("{name}: a(M) proper"))?;
        for s in 0..=d.dim() {
            ensure(serre_condition(&d, s).unwrap(), || format!("{name}: S_{s} fails"))?;
        }
    }
    Ok("R, R/(x), R/(x,y) are CM with empty lower pseudo supports".into())
}

fn shallow_locus_exhaustive() -> Outcome {
    let start = Instant::now();
    let suite = monomial_suite();
    let mut checks = 0;
    for (k, case) in suite.iter().enumerate() {
        let r = case.ring();
        let n = case.vars.len();
        let d = deficiency_modules(&case.module(), false).map_err(|e| e.to_string())?;
        let shallow: Vec<Ideal<Q>> = (0..=d.dim()).map(|s| shallow_locus_ideal(&d, s).unwrap()).collect();
        for p in variable_subsets(n) {
            let prime = Ideal::variables(&r, &p);
            let depth = localized_depth(case, &p, 1000 + k as u64);
            let coheight = (n - p.len()) as i64;
            for (s, ideal) in shallow.iter().enumerate() {
                let in_variety = prime.contains_ideal(ideal).unwrap();
                let expected = depth.is_some_and(|t| t + coheight <= s as i64);
                ensure(in_variety == expected, || {
                    format!("{}: p = {p:?}, s = {s}: variety {in_variety}, oracle depth {depth:?}", case.name)
                })?;
                checks += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("{} modules, {checks} (prime, s) pairs, 0 discrepancies; {elapsed:.2?}", suite.len()))
}

fn pseudo_supports_vs_associated_primes() -> Outcome {
    let suite = monomial_suite();
    for case in &suite {
        let r = case.ring();
        let n = case.vars.len();
        let d = deficiency_modules(&case.module(), false).map_err(|e| e.to_string())?;
        let ass = monomial_primes_oracle(&case.ideal()).map_err(|e| e.to_string())?.associated;
        for i in 0..=n {
            let from_a: BTreeSet<Vec<usize>> = variable_subsets(n)
                .into_iter()
                .filter(|p| n - p.len() == i)
                .filter(|p| Ideal::variables(&r, p).contains_ideal(d.a(i).unwrap()).unwrap())
                .collect();
            let from_ass: BTreeSet<Vec<usize>> = ass.iter().filter(|p| n - p.len() == i).cloned().collect();
            ensure(from_a == from_ass, || format!("{} level {i}: {from_a:?} vs {from_ass:?}", case.name))?;
        }
    }
    Ok(format!("{} modules, every level agrees", suite.len()))
}

fn random_poly(r: &std::sync::Arc<Ring>, rng: &mut ChaCha8Rng) -> Polynomial<Q> {
    let n = r.nvars();
    let terms = rng.gen_range(1..=3);
    let mut f = Polynomial::zero(r);
    for _ in 0..terms {
        let deg = rng.gen_range(0..=3u32);
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[rng.gen_range(0..n)] += 1;
        }
        let c: i64 = rng.gen_range(-3..=3);
        f = &f + &Polynomial::monomial(r, Monomial::new(exps), Q::from_integer(c.into()));
    }
    f
}

fn groebner_engine() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let names = ["a", "b", "c", "d"];
    let mut count = 0;
    while count < 240 {
        let n = rng.gen_range(1..=4);
        let order = if rng.gen_bool(0.5) { MonomialOrder::Grevlex } else { MonomialOrder::Lex };
        let r = Ring::new(&names[..n], order).unwrap();
        let k = rng.gen_range(1..=4);
        let gens: Vec<Polynomial<Q>> = (0..k).map(|_| random_poly(&r, &mut rng)).collect();
        let basis = reduced_basis(&r, &gens).map_err(|e| e.to_string())?;
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let s = s_polynomial(&basis[i], &basis[j]).unwrap();
                ensure(normal_form(&s, &basis).unwrap().is_zero(), || format!("S-pair of {gens:?} not reduced"))?;
            }
        }
        for g in &gens {
            ensure(normal_form(g, &basis).unwrap().is_zero(), || "generator outside the basis span".into())?;
        }
        let mut shuffled = gens.clone();
        shuffled.reverse();
        shuffled.rotate_left(rng.gen_range(0..k));
        let again = reduced_basis(&r, &shuffled).unwrap();
        ensure(again == basis, || format!("order dependence on {gens:?}"))?;
        count += 1;
    }
    let r = Ring::new(&["x", "y"], MonomialOrder::Lex).unwrap();
    let lex = reduced_basis(&r, &[poly(&r, "x^2 - y"), poly(&r, "x*y - 1")]).unwrap();
    let shown: Vec<String> = lex.iter().map(|p| p.to_string()).collect();
    ensure(shown == ["x - y^2", "y^3 - 1"], || format!("lex basis {shown:?}"))?;
    Ok(format!("{count} random ideals, S-pairs reduce to zero, order invariant; lex example exact"))
}

fn resolution_properties() -> Outcome {
    let mut checked = 0;
    for (k, case) in monomial_suite().iter().enumerate() {
        let n = case.vars.len();
        let res = free_resolution(&case.module(), n + 1).map_err(|e| e.to_string())?;
        ensure(res.is_complex().unwrap(), || format!("{}: A_i A_(i+1) != 0", case.name))?;
        ensure(res.is_complete() && res.len() <= n, || format!("{}: length {}", case.name, res.len()))?;
        let depth = localized_depth(case, &(0..n).collect::<Vec<_>>(), 77 + k as u64).unwrap();
        ensure(res.len() as i64 == n as i64 - depth, || {
            format!("{}: length {} but depth {depth}", case.name, res.len())
        })?;
        checked += 1;
    }
    let r = ring(&["x", "y", "z", "w"]);
    let m = quotient(&r, &["xz", "xw", "yz", "yw"]);
    let nonzero: Vec<usize> = (0..=4).filter(|&j| !ext_module(&m, j).unwrap().is_zero_module().unwrap()).collect();
    ensure(nonzero.last() == Some(&3), || format!("nonvanishing Ext at {nonzero:?}"))?;
    Ok(format!("{checked} resolutions exact with length n - depth; two-planes Ext vanishes above j = 3"))
}

fn vanishing_range() -> Outcome {
    let mut modules: Vec<(String, PresentedModule<Q>)> =
        monomial_suite().iter().map(|c| (c.name.to_string(), c.module())).collect();
    let r = ring(&["a", "b", "c", "d"]);
    modules.push(("twisted cubic".into(), quotient(&r, &["a*c - b^2", "b*d - c^2", "a*d - b*c"])));
    let r3 = ring(&["x", "y", "z"]);
    let mixed = quotient(&r3, &["x"]).direct_sum(&quotient(&r3, &["x", "y", "z"])).unwrap();
    modules.push(("R/(x) + R/(x,y,z)".into(), mixed));
    let rows = vec![vec![poly(&r3, "x"), poly(&r3, "y")], vec![poly(&r3, "0"), poly(&r3, "x")]];
    modules.push(("coker [[x, y], [0, x]]".into(), PresentedModule::coker(cmlocus::PolyMatrix::from_rows(&r3, rows).unwrap())));
    modules.push(("hypersurface".into(), quotient(&r3, &["x^2 + y*z - z^2"])));
    for (name, m) in &modules {
        let d = deficiency_modules(m, true).map_err(|e| format!("{name}: {e}"))?;
        for i in 0..=d.top() {
            let zero = d.deficiency_module(i).unwrap().is_zero_module().unwrap();
            let inside = d.depth() <= i && i <= d.dim();
            ensure(inside || zero, || format!("{name}: K^{i} nonzero outside [depth, dim]"))?;
        }
        ensure(!d.deficiency_module(d.depth()).unwrap().is_zero_module().unwrap(), || format!("{name}: K^depth = 0"))?;
        ensure(!d.deficiency_module(d.dim()).unwrap().is_zero_module().unwrap(), || format!("{name}: K^dim = 0"))?;
        let ann = m.annihilator().unwrap();
        let bf = brute_force_dim(m.ring().nvars(), &ann.lead_monomials());
        ensure(d.dim() as i64 == ann.krull_dim() && bf == ann.krull_dim(), || format!("{name}: dimension mismatch"))?;
    }
    Ok(format!("{} modules, all deficiency modules computed and checked", modules.len()))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_cmlocus");
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/sessions");
    let mut files: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    ensure(!files.is_empty(), || "no session files shipped".into())?;
    for f in &files {
        let run = || {
            let out = Command::new(bin).arg("--input").arg(f).arg("--json").arg("report").output().unwrap();
            (out.status.success(), out.stdout)
        };
        let (ok1, a) = run();
        let (ok2, b) = run();
        ensure(ok1 && ok2, || format!("{} failed", f.display()))?;
        ensure(a == b, || format!("{} output differs between runs", f.display()))?;
    }
    Ok(format!("{} session files byte-identical across runs", files.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("two-planes golden example", two_planes_golden),
        ("Cohen-Macaulay controls", cm_controls),
        ("shallow locus versus localized depth", shallow_locus_exhaustive),
        ("pseudo supports versus associated primes", pseudo_supports_vs_associated_primes),
        ("Groebner engine properties", groebner_engine),
        ("resolution properties", resolution_properties),
        ("vanishing range and dimension", vanishing_range),
        ("determinism of report --json", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
