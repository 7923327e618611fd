//! Building a session's objects over a concrete field and running commands.

use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::duality::{deficiency_modules, ext_module, DeficiencyData};
use crate::error::AlgebraError;
use crate::groebner::Ideal;
use crate::locus::{
    depth_dim_at_prime, is_cm_at_prime, locus_report, ncm_a_ideal, ncm_t_ideal, psd, psupp_ideal,
    serre_condition, shallow_locus_ideal, Equidimensionality, LocusReport, PrimeIdeal,
};
use crate::modres::{PolyMatrix, PresentedModule};
use crate::polyarith::{parse_polynomial, Field, Polynomial, Ring};
use crate::session::parse::{Command, CommandKind, ModuleSource, Pos, SessionError, SessionFile, Spanned};

type SResult<T> = Result<T, SessionError>;

/// Output of one command: a JSON fragment and a human-readable rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub json: Value,
    pub text: String,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub max_steps: Option<u64>,
    pub verify: bool,
}

pub struct Session<F: Field> {
    file: SessionFile,
    ring: Arc<Ring>,
    ideals: HashMap<String, Ideal<F>>,
    modules: HashMap<String, PresentedModule<F>>,
    primes: Vec<(String, PrimeIdeal<F>)>,
    deficiency: HashMap<String, DeficiencyData<F>>,
    verify: bool,
}

/// Canonical generator strings of the reduced basis.
pub fn ideal_json<F: Field>(ideal: &Ideal<F>) -> Value {
    if ideal.is_zero() {
        return json!(["0"]);
    }
    Value::Array(ideal.basis().iter().map(|g| Value::String(g.to_string())).collect())
}

fn polys<F: Field>(ring: &Arc<Ring>, items: &[Spanned<String>]) -> SResult<Vec<Polynomial<F>>> {
    items
        .iter()
        .map(|it| parse_polynomial(&it.value, ring).map_err(|e| SessionError::algebra(it.pos, e)))
        .collect()
}

impl<F: Field> Session<F> {
    pub fn build(file: SessionFile, options: Options) -> SResult<Self> {
        let ring = file.ring().with_step_limit(options.max_steps);
        let mut ideals = HashMap::new();
        for d in &file.ideals {
            let gens = polys(&ring, &d.body)?;
            let ideal = Ideal::new(&ring, gens).map_err(|e| SessionError::algebra(d.pos, e))?;
            ideals.insert(d.name.clone(), ideal);
        }
        let mut modules: HashMap<String, PresentedModule<F>> = HashMap::new();
        for d in &file.modules {
            let m = match &d.body {
                ModuleSource::Quotient(i) => PresentedModule::quotient(&ideals[&i.value]),
                ModuleSource::Free(n) => PresentedModule::free(&ring, *n),
                ModuleSource::Coker(rows) => {
                    let rows = rows.iter().map(|r| polys(&ring, r)).collect::<SResult<Vec<_>>>()?;
                    let a = if rows.is_empty() {
                        PolyMatrix::zero(&ring, 0, 0)
                    } else {
                        PolyMatrix::from_rows(&ring, rows).map_err(|e| SessionError::algebra(d.pos, e))?
                    };
                    PresentedModule::coker(a)
                }
                ModuleSource::Sum(parts) => {
                    let mut acc = PresentedModule::zero(&ring);
                    for p in parts {
                        acc = acc.direct_sum(&modules[&p.value]).map_err(|e| SessionError::algebra(p.pos, e))?;
                    }
                    acc
                }
            };
            modules.insert(d.name.clone(), m);
        }
        let mut primes = Vec::new();
        for d in &file.primes {
            let gens = polys(&ring, &d.body)?;
            let ideal = Ideal::new(&ring, gens).map_err(|e| SessionError::algebra(d.pos, e))?;
            let p = if file.asserted_primes.contains(&d.name) {
                PrimeIdeal::asserted(ideal)
            } else {
                PrimeIdeal::verified(ideal).map_err(|e| match e {
                    AlgebraError::NotPrime(m) => {
                        AlgebraError::NotPrime(format!("{m}; use `assert-prime {}` to accept it", d.name))
                    }
                    e => e,
                })
            }
            .map_err(|e| SessionError::algebra(d.pos, e))?;
            primes.push((d.name.clone(), p));
        }
        Ok(Session { file, ring, ideals, modules, primes, deficiency: HashMap::new(), verify: options.verify })
    }

    pub fn file(&self) -> &SessionFile {
        &self.file
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    fn describe_ring(&self) -> String {
        self.ring.describe(&self.file.field.to_string())
    }

    fn deficiency(&mut self, name: &str, pos: Pos) -> SResult<&DeficiencyData<F>> {
        if !self.deficiency.contains_key(name) {
            let d = deficiency_modules(&self.modules[name], self.verify).map_err(|e| SessionError::algebra(pos, e))?;
            self.deficiency.insert(name.to_string(), d);
        }
        Ok(&self.deficiency[name])
    }

    fn prime(&self, name: &str) -> &PrimeIdeal<F> {
        &self.primes.iter().find(|(n, _)| n == name).expect("checked by the parser").1
    }

    /// Runs every command listed in the session file.
    pub fn run_all(&mut self) -> SResult<Vec<Output>> {
        let cmds = self.file.commands.clone();
        cmds.iter().map(|c| self.run_command(c)).collect()
    }

    pub fn run_command(&mut self, cmd: &Command) -> SResult<Output> {
        let pos = cmd.pos;
        let at = |e: AlgebraError| SessionError::algebra(pos, e);
        let target = cmd.target.clone();
        let base = |kind: CommandKind| {
            let mut m = Map::new();
            m.insert("command".into(), json!(kind.keyword()));
            m
        };
        let mut obj = base(cmd.kind);
        let text;
        match cmd.kind {
            CommandKind::Gb => {
                let ideal = &self.ideals[&target];
                obj.insert("ideal".into(), json!(target));
                obj.insert("basis".into(), ideal_json(ideal));
                text = format!("gb {target} = {ideal}");
            }
            CommandKind::Dim => {
                let d = match self.ideals.get(&target) {
                    Some(i) => i.krull_dim(),
                    None => self.modules[&target].annihilator().map_err(at)?.krull_dim(),
                };
                obj.insert("target".into(), json!(target));
                obj.insert("dim".into(), json!(d));
                text = format!("dim {target} = {d}");
            }
            CommandKind::Ext => {
                let j = cmd.index();
                let e = ext_module(&self.modules[&target], j).map_err(at)?;
                let ann = e.annihilator().map_err(at)?;
                let zero = ann.is_unit();
                obj.insert("module".into(), json!(target));
                obj.insert("j".into(), json!(j));
                obj.insert("zero".into(), json!(zero));
                obj.insert("generators".into(), json!(e.rank()));
                obj.insert("presentation".into(), json!(e.presentation().to_string()));
                obj.insert("annihilator".into(), ideal_json(&ann));
                text = if zero {
                    format!("Ext^{j}({target}, R) = 0")
                } else {
                    format!("Ext^{j}({target}, R) = {e}, annihilator {ann}")
                };
            }
            CommandKind::Deficiency => {
                let d = self.deficiency(&target, pos)?;
                let a: Vec<Value> = d.a_all().iter().map(ideal_json).collect();
                let nonzero: Vec<usize> = (0..=d.top()).filter(|&i| d.is_nonzero(i)).collect();
                let mut lines = vec![format!("depth {} dim {}", d.depth(), d.dim())];
                for (i, ai) in d.a_all().iter().enumerate() {
                    lines.push(format!("a_{i} = {ai}"));
                }
                obj.insert("module".into(), json!(target));
                obj.insert("depth".into(), json!(d.depth()));
                obj.insert("dim".into(), json!(d.dim()));
                obj.insert("a".into(), Value::Array(a));
                obj.insert("nonzero".into(), json!(nonzero));
                text = lines.join("\n");
            }
            CommandKind::Psupp => {
                let i = cmd.index();
                let a = psupp_ideal(self.deficiency(&target, pos)?, i).map_err(at)?;
                obj.insert("module".into(), json!(target));
                obj.insert("i".into(), json!(i));
                obj.insert("ideal".into(), ideal_json(&a));
                text = format!("Psupp^{i}({target}) = V{a}");
            }
            CommandKind::Psd => {
                let i = cmd.index();
                let v = psd(self.deficiency(&target, pos)?, i).map_err(at)?;
                obj.insert("module".into(), json!(target));
                obj.insert("i".into(), json!(i));
                obj.insert("psd".into(), json!(v));
                text = format!("psd^{i}({target}) = {v}");
            }
            CommandKind::Ncm => {
                let d = self.deficiency(&target, pos)?;
                let t = ncm_t_ideal(d).map_err(at)?;
                let a = ncm_a_ideal(d).map_err(at)?;
                obj.insert("module".into(), json!(target));
                obj.insert("ncm_T".into(), ideal_json(&t));
                obj.insert("ncm_a".into(), ideal_json(&a));
                text = format!("T({target}) = {t}\na({target}) = {a}");
            }
            CommandKind::Serre => {
                let r = cmd.index();
                let v = serre_condition(self.deficiency(&target, pos)?, r).map_err(at)?;
                obj.insert("module".into(), json!(target));
                obj.insert("r".into(), json!(r));
                obj.insert("holds".into(), json!(v));
                text = format!("S_{r}({target}) = {v}");
            }
            CommandKind::AtPrime => {
                let pname = cmd.arg.as_ref().unwrap().value.clone();
                let p = self.prime(&pname).clone();
                let d = self.deficiency(&target, pos)?;
                let (depth, dim) = depth_dim_at_prime(d, &p).map_err(at)?;
                let cm = is_cm_at_prime(d, &p).map_err(at)?;
                obj.insert("module".into(), json!(target));
                obj.insert("prime".into(), json!(pname));
                obj.insert("depth".into(), json!(depth));
                obj.insert("dim".into(), json!(dim));
                obj.insert("cm".into(), json!(cm));
                text = format!("at {pname}: depth {depth} dim {dim} cm {cm}");
            }
            CommandKind::Shallow => {
                let s = cmd.index();
                let a = shallow_locus_ideal(self.deficiency(&target, pos)?, s).map_err(at)?;
                obj.insert("module".into(), json!(target));
                obj.insert("s".into(), json!(s));
                obj.insert("ideal".into(), ideal_json(&a));
                text = format!("shallow_{s}({target}) = V{a}");
            }
            CommandKind::Report => {
                let ring = self.describe_ring();
                let asserted = self.file.asserted_equidimensional.contains(&target);
                let primes = self.primes.clone();
                let verify = self.verify;
                let d = self.deficiency(&target, pos)?;
                let report = locus_report(d, &primes).map_err(at)?;
                if verify && report.equidimensional == Equidimensionality::True {
                    let same = report.ncm_t.same_radical(&report.ncm_a).map_err(at)?;
                    if !same {
                        return Err(at(AlgebraError::Inconsistent("T(M) and a(M) have different radicals".into())));
                    }
                }
                return Ok(report_output(&ring, &target, &report, asserted));
            }
        }
        Ok(Output { json: Value::Object(obj), text })
    }
}

fn equidimensional_json(v: Equidimensionality, asserted: bool) -> Value {
    match v {
        Equidimensionality::True => json!(true),
        Equidimensionality::False => json!(false),
        Equidimensionality::Unknown if asserted => json!("asserted"),
        Equidimensionality::Unknown => json!("unknown"),
    }
}

/// The `report` schema: keys sorted, polynomials in canonical form.
pub fn report_output<F: Field>(ring: &str, module: &str, r: &LocusReport<F>, asserted: bool) -> Output {
    let serre: Map<String, Value> = r.serre.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    let primes: Vec<Value> = r
        .primes
        .iter()
        .map(|p| match p.local {
            Some((depth, dim, cm)) => json!({"name": p.name, "depth": depth, "dim": dim, "cm": cm}),
            None => json!({"name": p.name, "depth": null, "dim": null, "cm": null}),
        })
        .collect();
    let equi = equidimensional_json(r.equidimensional, asserted);
    let json = json!({
        "ring": ring,
        "module": module,
        "depth": r.depth,
        "dim": r.dim,
        "a": r.a.iter().map(ideal_json).collect::<Vec<_>>(),
        "psd": r.psd,
        "ncm_T": ideal_json(&r.ncm_t),
        "ncm_a": ideal_json(&r.ncm_a),
        "serre": serre,
        "primes": primes,
        "equidimensional": equi,
    });
    let mut lines = vec![
        format!("module {module} over {ring}"),
        format!("depth {} dim {}", r.depth, r.dim),
    ];
    for (i, (a, p)) in r.a.iter().zip(&r.psd).enumerate() {
        lines.push(format!("a_{i} = {a}  psd {p}"));
    }
    lines.push(format!("T = {}", r.ncm_t));
    lines.push(format!("a = {}", r.ncm_a));
    for (k, v) in &r.serre {
        lines.push(format!("S_{k}: {v}"));
    }
    for p in &r.primes {
        match p.local {
            Some((depth, dim, cm)) => lines.push(format!("at {}: depth {depth} dim {dim} cm {cm}", p.name)),
            None => lines.push(format!("at {}: not in support", p.name)),
        }
    }
    lines.push(format!("equidimensional: {}", equi.to_string().trim_matches('"')));
    Output { json, text: lines.join("\n") }
}
