//! Executes parsed scripts against the ring library and collects a
//! structured run report.

use std::collections::HashMap;
use std::time::Instant;

use biamalg_core::{
    amalg, biamalg, duplicate, is_arithmetical, is_gaussian, is_local, is_prufer,
    is_total_quotient_ring, make_monomial_quotient, make_product, make_zmod, quotient_ring, span,
    trivext, verify_cor_2_2, verify_cor_2_3, verify_prop_2_4, verify_prop_2_6, verify_prop_5_7,
    verify_theorem_2_1, BiAmalgConfig, Elem, FiniteModule, FiniteRing, Ideal, RingHom,
    TheoremReport, TheoremStatus, TrivialExtension, Verdict,
};
use biamalg_core::modules::ModuleId;
use biamalg_core::ring::RingId;
use serde::Serialize;

use crate::script::{
    CheckProp, HomExpr, Located, RingExpr, Script, Statement, VerifyKind,
};

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Defined {
        what: String,
        name: String,
        size: usize,
        detail: String,
    },
    Check {
        property: String,
        ring: String,
        verdict: Verdict,
    },
    Verify {
        theorem: String,
        report: TheoremReport,
    },
    VerifyVerdict {
        theorem: String,
        verdict: Verdict,
    },
    Error {
        message: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct StatementResult {
    pub line: usize,
    pub text: String,
    pub outcome: Outcome,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub version: String,
    pub seed: u64,
    pub statements: Vec<StatementResult>,
    pub errors: usize,
    pub violations: usize,
    pub ok: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct ExecOptions {
    pub seed: u64,
    pub fail_fast: bool,
}

impl Default for ExecOptions {
    fn default() -> Self {
        ExecOptions { seed: 0, fail_fast: false }
    }
}

enum Binding {
    Ring(FiniteRing),
    Module(FiniteModule),
    Ideal(Ideal),
    Hom(RingHom),
}

#[derive(Default)]
struct Env {
    names: HashMap<String, Binding>,
    trivexts_by_parts: HashMap<(RingId, ModuleId), TrivialExtension>,
    trivexts_by_ring: HashMap<RingId, TrivialExtension>,
}

type ExecResult<T> = Result<T, String>;

impl Env {
    fn ring(&self, name: &str) -> ExecResult<&FiniteRing> {
        match self.names.get(name) {
            Some(Binding::Ring(r)) => Ok(r),
            _ => Err(format!("`{name}` is not a ring")),
        }
    }

    fn module(&self, name: &str) -> ExecResult<&FiniteModule> {
        match self.names.get(name) {
            Some(Binding::Module(m)) => Ok(m),
            _ => Err(format!("`{name}` is not a module")),
        }
    }

    fn ideal(&self, name: &str) -> ExecResult<&Ideal> {
        match self.names.get(name) {
            Some(Binding::Ideal(i)) => Ok(i),
            _ => Err(format!("`{name}` is not an ideal")),
        }
    }

    fn hom(&self, name: &str) -> ExecResult<&RingHom> {
        match self.names.get(name) {
            Some(Binding::Hom(h)) => Ok(h),
            _ => Err(format!("`{name}` is not a homomorphism")),
        }
    }

    fn elem(&self, ring: &FiniteRing, literal: &str) -> ExecResult<Elem> {
        ring.by_label(literal).ok_or_else(|| {
            let mut sample: Vec<&str> = ring.labels().iter().take(4).map(|s| s.as_str()).collect();
            if ring.size() > 4 {
                sample.push("...");
            }
            format!(
                "no element `{literal}` in this ring; labels look like {}",
                sample.join(", ")
            )
        })
    }

    fn config(
        &self,
        f: &str,
        g: &str,
        j: &str,
        j_prime: &str,
    ) -> ExecResult<BiAmalgConfig> {
        BiAmalgConfig::new(
            self.hom(f)?.clone(),
            self.hom(g)?.clone(),
            self.ideal(j)?.clone(),
            self.ideal(j_prime)?.clone(),
        )
        .map_err(|e| e.to_string())
    }
}

fn exec_statement(env: &mut Env, located: &Located) -> ExecResult<Outcome> {
    match &located.statement {
        Statement::Ring { name, expr } => {
            let (ring, detail) = match expr {
                RingExpr::Zmod { n } => {
                    (make_zmod(*n).map_err(|e| e.to_string())?, format!("Z/{n}"))
                }
                RingExpr::PolyQuo { p, vars, relations } => {
                    // pure powers become the nilpotency bounds, the rest
                    // stay as extra monomial relations
                    let mut nilpotency = vec![0usize; vars.len()];
                    let mut extra = Vec::new();
                    for rel in relations {
                        let support: Vec<usize> = rel
                            .iter()
                            .enumerate()
                            .filter(|(_, &e)| e > 0)
                            .map(|(i, _)| i)
                            .collect();
                        if support.len() == 1 {
                            let v = support[0];
                            let e = rel[v];
                            if nilpotency[v] == 0 || e < nilpotency[v] {
                                nilpotency[v] = e;
                            }
                        } else {
                            extra.push(rel.clone());
                        }
                    }
                    let var_refs: Vec<&str> = vars.iter().map(|v| v.as_str()).collect();
                    let ring = make_monomial_quotient(*p, &var_refs, &nilpotency, &extra)
                        .map_err(|e| e.to_string())?;
                    let detail = ring.desc().to_string();
                    (ring, detail)
                }
                RingExpr::Product { left, right } => {
                    let l = env.ring(left)?;
                    let r = env.ring(right)?;
                    (
                        make_product(l, r).map_err(|e| e.to_string())?,
                        format!("{left} x {right}"),
                    )
                }
                RingExpr::Quotient { ring, ideal } => {
                    let r = env.ring(ring)?;
                    let i = env.ideal(ideal)?;
                    let (q, _) = quotient_ring(r, i).map_err(|e| e.to_string())?;
                    (q, format!("{ring}/{ideal}"))
                }
                RingExpr::TrivExt { ring, module } => {
                    let r = env.ring(ring)?.clone();
                    let m = env.module(module)?.clone();
                    let te = trivext(&r, &m).map_err(|e| e.to_string())?;
                    env.trivexts_by_parts.insert((r.id(), m.id()), te.clone_parts());
                    env.trivexts_by_ring.insert(te.ring.id(), te.clone_parts());
                    (te.ring, format!("{ring} ⋉ {module}"))
                }
                RingExpr::BiAmalg { f, g, j, j_prime } => {
                    let cfg = env.config(f, g, j, j_prime)?;
                    let d = biamalg(cfg).map_err(|e| e.to_string())?;
                    (d.ring, format!("bi-amalgamation along ({j}, {j_prime})"))
                }
                RingExpr::Amalg { f, j } => {
                    let d = amalg(env.hom(f)?, env.ideal(j)?).map_err(|e| e.to_string())?;
                    (d.ring, format!("amalgamation along {j}"))
                }
                RingExpr::Duplicate { ring, ideal } => {
                    let d = duplicate(env.ring(ring)?, env.ideal(ideal)?)
                        .map_err(|e| e.to_string())?;
                    (d.ring, format!("duplication of {ring} along {ideal}"))
                }
            };
            let size = ring.size();
            env.names.insert(name.clone(), Binding::Ring(ring));
            Ok(Outcome::Defined {
                what: "ring".into(),
                name: name.clone(),
                size,
                detail,
            })
        }
        Statement::Module { name, ring, ideal, copies } => {
            let r = env.ring(ring)?;
            let i = env.ideal(ideal)?;
            let module = biamalg_core::make_module(r, &[i.clone()], *copies)
                .map_err(|e| e.to_string())?;
            let size = module.size();
            env.names.insert(name.clone(), Binding::Module(module));
            Ok(Outcome::Defined {
                what: "module".into(),
                name: name.clone(),
                size,
                detail: format!("({ring}/{ideal})^{copies}"),
            })
        }
        Statement::Ideal { name, ring, gens } => {
            let r = env.ring(ring)?.clone();
            let mut elems = Vec::new();
            for g in gens {
                elems.push(env.elem(&r, g)?);
            }
            let ideal = span(&r, &elems);
            let size = ideal.len();
            env.names.insert(name.clone(), Binding::Ideal(ideal));
            Ok(Outcome::Defined {
                what: "ideal".into(),
                name: name.clone(),
                size,
                detail: format!("span of {} generator(s) in {ring}", gens.len()),
            })
        }
        Statement::Hom { name, expr } => {
            let (hom, detail) = match expr {
                HomExpr::Id { ring } => {
                    (RingHom::identity(env.ring(ring)?), format!("id on {ring}"))
                }
                HomExpr::QuoMap { ring, ideal } => {
                    let r = env.ring(ring)?;
                    let i = env.ideal(ideal)?;
                    let (_, map) = quotient_ring(r, i).map_err(|e| e.to_string())?;
                    (map, format!("{ring} → {ring}/{ideal}"))
                }
                HomExpr::InjectTrivext { ring, module } => {
                    let r = env.ring(ring)?;
                    let m = env.module(module)?;
                    let te = env
                        .trivexts_by_parts
                        .get(&(r.id(), m.id()))
                        .ok_or_else(|| {
                            format!(
                                "no trivial extension of `{ring}` by `{module}` has been \
                                 defined yet; add `ring <name> = trivext {ring} {module}` first"
                            )
                        })?;
                    (te.inclusion.clone(), format!("{ring} ↪ {ring} ⋉ {module}"))
                }
                HomExpr::ProjectTrivext { ring } => {
                    let r = env.ring(ring)?;
                    let te = env.trivexts_by_ring.get(&r.id()).ok_or_else(|| {
                        format!("`{ring}` was not defined as a trivial extension")
                    })?;
                    (te.projection.clone(), format!("{ring} ↠ its base"))
                }
                HomExpr::Compose { second, first } => {
                    let h = RingHom::compose(env.hom(second)?, env.hom(first)?)
                        .map_err(|e| e.to_string())?;
                    (h, format!("{second} ∘ {first}"))
                }
                HomExpr::Table { domain, codomain, pairs } => {
                    let d = env.ring(domain)?.clone();
                    let c = env.ring(codomain)?.clone();
                    let mut images: Vec<Option<Elem>> = vec![None; d.size()];
                    for (from, to) in pairs {
                        let fe = env.elem(&d, from)?;
                        let te = env.elem(&c, to)?;
                        if images[fe.index()].is_some() {
                            return Err(format!("element `{from}` is mapped twice"));
                        }
                        images[fe.index()] = Some(te);
                    }
                    let table: Vec<Elem> = images
                        .into_iter()
                        .enumerate()
                        .map(|(i, img)| {
                            img.ok_or_else(|| {
                                format!(
                                    "no image given for element `{}`",
                                    d.labels()[i].clone()
                                )
                            })
                        })
                        .collect::<Result<_, _>>()?;
                    let h = RingHom::from_table(&d, &c, &table).map_err(|e| e.to_string())?;
                    (h, format!("table {domain} → {codomain}"))
                }
            };
            let size = hom.domain().size();
            env.names.insert(name.clone(), Binding::Hom(hom));
            Ok(Outcome::Defined {
                what: "hom".into(),
                name: name.clone(),
                size,
                detail,
            })
        }
        Statement::Check { prop, ring } => {
            let r = env.ring(ring)?;
            let verdict = match prop {
                CheckProp::Local => is_local(r).0,
                CheckProp::Gaussian => is_gaussian(r),
                CheckProp::Arithmetical => is_arithmetical(r),
                CheckProp::Prufer => is_prufer(r),
                CheckProp::TotalQuotients => is_total_quotient_ring(r),
            };
            Ok(Outcome::Check {
                property: prop.name().into(),
                ring: ring.clone(),
                verdict,
            })
        }
        Statement::Verify { kind } => {
            let theorem = kind.id();
            match kind {
                VerifyKind::Thm21 { mode, f, g, j, j_prime } => {
                    let cfg = env.config(f, g, j, j_prime)?;
                    let report = verify_theorem_2_1(&cfg, *mode).map_err(|e| e.to_string())?;
                    Ok(Outcome::Verify { theorem, report })
                }
                VerifyKind::Cor22 { mode, f, j } => {
                    let report = verify_cor_2_2(env.hom(f)?, env.ideal(j)?, *mode)
                        .map_err(|e| e.to_string())?;
                    Ok(Outcome::Verify { theorem, report })
                }
                VerifyKind::Cor23 { mode, ring, ideal } => {
                    let report = verify_cor_2_3(env.ring(ring)?, env.ideal(ideal)?, *mode)
                        .map_err(|e| e.to_string())?;
                    Ok(Outcome::Verify { theorem, report })
                }
                VerifyKind::Prop24 { part, f, g, j, j_prime } => {
                    let cfg = env.config(f, g, j, j_prime)?;
                    let report = verify_prop_2_4(*part, &cfg).map_err(|e| e.to_string())?;
                    Ok(Outcome::Verify { theorem, report })
                }
                VerifyKind::Prop26 { f, g, j, j_prime } => {
                    let cfg = env.config(f, g, j, j_prime)?;
                    let report = verify_prop_2_6(&cfg).map_err(|e| e.to_string())?;
                    Ok(Outcome::Verify { theorem, report })
                }
                VerifyKind::Prop57 { f, g, j, j_prime, p } => {
                    let cfg = env.config(f, g, j, j_prime)?;
                    let verdict = verify_prop_5_7(&cfg, env.ideal(p)?)
                        .map_err(|e| e.to_string())?;
                    Ok(Outcome::VerifyVerdict { theorem, verdict })
                }
            }
        }
    }
}

/// Runs a parsed script. Failing statements do not abort the remaining
/// independent statements unless `fail_fast` is set.
pub fn run_script(script: &Script, options: &ExecOptions) -> RunReport {
    let mut env = Env::default();
    let mut statements = Vec::new();
    let mut errors = 0usize;
    let mut violations = 0usize;
    for located in &script.statements {
        let started = Instant::now();
        let outcome = match exec_statement(&mut env, located) {
            Ok(outcome) => outcome,
            Err(message) => {
                errors += 1;
                Outcome::Error { message }
            }
        };
        if let Outcome::Verify { report, .. } = &outcome {
            if report.status == TheoremStatus::Violation {
                violations += 1;
            }
        }
        let failed = matches!(outcome, Outcome::Error { .. });
        statements.push(StatementResult {
            line: located.line,
            text: crate::script::render_statement(&located.statement),
            outcome,
            millis: started.elapsed().as_millis(),
        });
        if failed && options.fail_fast {
            break;
        }
    }
    RunReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: options.seed,
        statements,
        errors,
        violations,
        ok: errors == 0 && violations == 0,
    }
}
