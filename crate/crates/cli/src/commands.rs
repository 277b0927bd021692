//! One function per command. Each fills in a report's result, witnesses and
//! exit hint; errors are turned into reports by the caller.

use mvcomp::completion::{
    check_boolean_center_preservation, check_mac_criterion, check_product_preservation,
    check_self_iso, inverse_limit_profinite_with, macneille_mv, profinite_product_with, regularity,
    verify_main_theorem_with, CompletionReport,
};
use mvcomp::ideals::{
    all_ideals_with, is_maximal, is_prime, is_principal, max_ideals_with, radical, rank,
};
use mvcomp::signatures::{
    divisibility_decision, sig_equal, sig_mac_criterion, sig_macneille, sig_of_finite_algebra,
    sig_profinite, Divisibility, SpectralSignature,
};
use mvcomp::{FiniteMvAlgebra, Ideal, Limits, MvError};
use serde_json::{json, Value};

use crate::description::{describe_signature, Description, Subject};
use crate::report::{ExitHint, Report, WitnessEntry};
use crate::{CheckKind, Method, SignatureKind};

type Result<T> = std::result::Result<T, MvError>;

pub struct Context {
    pub limits: Limits,
    pub divisibility: Divisibility,
}

fn algebra_of(subject: Subject, command: &str) -> Result<FiniteMvAlgebra> {
    match subject {
        Subject::Algebra(a) => Ok(a),
        Subject::Signature(_) => Err(MvError::InvalidArgument(format!(
            "`{command}` needs a finite algebra, not a signature"
        ))),
    }
}

fn signature_of(subject: Subject) -> Result<SpectralSignature> {
    match subject {
        Subject::Algebra(a) => sig_of_finite_algebra(&a),
        Subject::Signature(s) => Ok(s),
    }
}

fn signature_value(s: &SpectralSignature) -> Value {
    serde_json::to_value(describe_signature(s)).expect("descriptions serialize")
}

fn ideal_value(a: &FiniteMvAlgebra, i: &Ideal) -> Value {
    json!(i.names(a))
}

fn passes(report: &mut Report, holds: bool) {
    if !holds {
        report.escalate(ExitHint::CheckFailed);
    }
}

pub fn validate(report: &mut Report, description: &Description, ctx: &Context) -> Result<()> {
    let (names, axioms) = match description.raw_tables(&ctx.limits)? {
        Some((names, tables)) => (names, tables.validate()),
        None => match description.build(&ctx.limits)? {
            Subject::Algebra(a) => (a.names().to_vec(), a.validate_axioms()),
            Subject::Signature(s) => {
                report.result = json!({ "valid": true, "signature": signature_value(&s) });
                return Ok(());
            }
        },
    };
    let labels = ["x", "y", "z"];
    let checks: Vec<Value> = axioms
        .checks
        .iter()
        .map(|c| match &c.witness {
            None => json!({ "axiom": c.axiom.id(), "status": "pass" }),
            Some(w) => {
                let witness: serde_json::Map<String, Value> = w
                    .iter()
                    .zip(labels)
                    .map(|(&x, l)| (l.to_string(), json!(names[x])))
                    .collect();
                json!({ "axiom": c.axiom.id(), "status": "fail", "witness": witness })
            }
        })
        .collect();
    for c in axioms.failures() {
        let at: Vec<&str> = c.witness.iter().flatten().map(|&x| names[x].as_str()).collect();
        report
            .diagnostics
            .push(format!("axiom `{}` fails at ({})", c.axiom.id(), at.join(", ")));
    }
    report.result = json!({ "valid": axioms.is_valid(), "size": names.len(), "axioms": checks });
    passes(report, axioms.is_valid());
    Ok(())
}

pub fn spectrum(report: &mut Report, subject: Subject, ctx: &Context) -> Result<()> {
    let a = match subject {
        Subject::Signature(s) => {
            report.result = json!({
                "ranks": s.ranks.to_string(),
                "infinite_rank_count": s.infinite_rank_count.to_string(),
                "signature": signature_value(&s),
            });
            return Ok(());
        }
        Subject::Algebra(a) => a,
    };
    let maximal = max_ideals_with(&a, &ctx.limits)?;
    let mut entries = Vec::new();
    let mut ranks = Vec::new();
    for m in &maximal {
        let r = rank(&a, m)?;
        ranks.push(r);
        entries.push(json!({ "members": ideal_value(&a, m), "rank": r }));
    }
    ranks.sort_unstable();
    let rad = radical(&a)?;
    report.result = json!({
        "size": a.size(),
        "maximal_ideals": entries,
        "ranks": ranks,
        "radical": ideal_value(&a, &rad),
        "semisimple": rad.len() == 1,
    });
    Ok(())
}

pub fn ideals(report: &mut Report, subject: Subject, ctx: &Context) -> Result<()> {
    let a = algebra_of(subject, "ideals")?;
    let all = all_ideals_with(&a, &ctx.limits)?;
    let entries = all
        .iter()
        .map(|i| {
            let principal = is_principal(&a, i)?.map(|g| a.name(g).to_string());
            Ok(json!({
                "members": ideal_value(&a, i),
                "prime": i.is_proper() && is_prime(&a, i)?,
                "maximal": i.is_proper() && is_maximal(&a, i)?,
                "generator": principal,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    report.result = json!({ "size": a.size(), "count": all.len(), "ideals": entries });
    Ok(())
}

fn completion_value(r: &CompletionReport, size: usize) -> Value {
    json!({
        "method": r.method.id(),
        "multiset": r.multiset.sizes(),
        "size": size,
        "isomorphic_to_subject": r.witness.is_some(),
        "diagnostics": r.diagnostics,
    })
}

pub fn complete(report: &mut Report, subject: Subject, method: Method, ctx: &Context) -> Result<()> {
    let a = match subject {
        Subject::Signature(s) => {
            let completed = match method {
                Method::Macneille => sig_macneille(&s)?,
                _ => sig_profinite(&s),
            };
            report.result = json!({ "method": method.id(), "signature": signature_value(&completed) });
            return Ok(());
        }
        Subject::Algebra(a) => a,
    };
    let mut completions = Vec::new();
    let mut profinite = |report: &mut Report, inverse: bool| -> Result<()> {
        let (algebra, r) = if inverse {
            inverse_limit_profinite_with(&a, &ctx.limits)?
        } else {
            profinite_product_with(&a, &ctx.limits)?
        };
        completions.push(completion_value(&r, algebra.size()));
        if let Some(w) = &r.witness {
            let name = format!("subject-to-{}", r.method.id());
            report.witnesses.push(WitnessEntry::new(&name, "subject", r.method.id(), w));
        }
        Ok(())
    };
    match method {
        Method::InverseLimit => profinite(report, true)?,
        Method::MaxfProduct => profinite(report, false)?,
        Method::Both => {
            profinite(report, true)?;
            profinite(report, false)?;
            let w = verify_main_theorem_with(&a, &ctx.limits)?;
            report
                .witnesses
                .push(WitnessEntry::new("main-theorem", "inverse-limit", "maxf-product", &w));
        }
        Method::Macneille => {
            let mac = macneille_mv(&a)?;
            completions.push(completion_value(&mac.report, mac.algebra.size()));
            if let Some(w) = &mac.report.witness {
                report
                    .witnesses
                    .push(WitnessEntry::new("subject-to-macneille", "subject", "macneille", w));
            }
        }
    }
    report.result = json!({ "method": method.id(), "completions": completions });
    Ok(())
}

pub fn check(
    report: &mut Report,
    kind: CheckKind,
    subject: Subject,
    other: Option<Subject>,
    ctx: &Context,
) -> Result<()> {
    if kind == CheckKind::MacCriterion {
        if let Subject::Signature(s) = subject {
            let v = sig_mac_criterion(&s)?;
            report.result = json!({ "holds": v.holds, "diagnostic": v.diagnostic });
            passes(report, v.holds);
            return Ok(());
        }
    }
    let a = algebra_of(subject, kind.id())?;
    match kind {
        CheckKind::MainTheorem => {
            let w = verify_main_theorem_with(&a, &ctx.limits)?;
            report.result = json!({ "holds": true, "size": w.source().size() });
            report
                .witnesses
                .push(WitnessEntry::new("main-theorem", "inverse-limit", "maxf-product", &w));
        }
        CheckKind::SelfIso => {
            let s = check_self_iso(&a)?;
            let generators: Vec<Value> = s
                .generators
                .iter()
                .map(|(m, g)| json!({ "ideal": ideal_value(&a, m), "generator": g.map(|g| a.name(g)) }))
                .collect();
            report.result = json!({ "holds": s.holds, "maximal_ideals": generators });
            if let Some(w) = &s.witness {
                report
                    .witnesses
                    .push(WitnessEntry::new("self-iso", "subject", "maxf-product", w));
            }
            passes(report, s.holds);
        }
        CheckKind::MacCriterion => {
            let m = check_mac_criterion(&a)?;
            let tau: Option<Vec<Value>> = m.tau.as_ref().map(|t| {
                t.iter()
                    .map(|(x, i, r)| json!({ "atom": a.name(*x), "ideal": ideal_value(&a, i), "rank": r }))
                    .collect()
            });
            report.result = json!({
                "holds": m.holds,
                "atomic": m.atomic,
                "atom_multiset": m.atom_multiset.sizes(),
                "rank_multiset": m.rank_multiset.sizes(),
                "tau": tau,
            });
            if let Some(w) = &m.witness {
                report
                    .witnesses
                    .push(WitnessEntry::new("profinite-to-macneille", "maxf-product", "macneille", w));
            }
            passes(report, m.holds);
        }
        CheckKind::ProductPreservation => {
            let other = other.ok_or_else(|| {
                MvError::InvalidArgument("`product-preservation` needs --other FILE".into())
            })?;
            let b = algebra_of(other, kind.id())?;
            let p = check_product_preservation(&a, &b, &ctx.limits)?;
            report.result = json!({
                "holds": true,
                "product_size": p.product.size(),
                "multiset": p.multiset.sizes(),
            });
            report.witnesses.push(WitnessEntry::new(
                "product-preservation",
                "completion-of-product",
                "product-of-completions",
                &p.witness,
            ));
        }
        CheckKind::Regularity => {
            let r = regularity(&a)?;
            let primes: Vec<Value> = r
                .primes
                .iter()
                .map(|(n, g, prime)| {
                    json!({
                        "center_prime": ideal_value(&r.center.algebra, n),
                        "generated": ideal_value(&a, g),
                        "prime": prime,
                    })
                })
                .collect();
            report.result = json!({
                "holds": r.regular,
                "center_size": r.center.algebra.size(),
                "center_primes": primes,
            });
            passes(report, r.regular);
        }
        CheckKind::CenterPreservation => {
            let c = check_boolean_center_preservation(&a)?;
            report.result = json!({
                "holds": true,
                "center_of_completion_size": c.center_of_completion.size(),
                "completion_of_center_size": c.completion_of_center.size(),
            });
            report.witnesses.push(WitnessEntry::new(
                "center-preservation",
                "center-of-completion",
                "completion-of-center",
                &c.witness,
            ));
        }
    }
    Ok(())
}

pub fn signature(
    report: &mut Report,
    kind: SignatureKind,
    subject: Subject,
    other: Option<Subject>,
    ctx: &Context,
) -> Result<()> {
    let s = signature_of(subject)?;
    report.result = match kind {
        SignatureKind::Profinite => json!({ "signature": signature_value(&sig_profinite(&s)) }),
        SignatureKind::Macneille => json!({ "signature": signature_value(&sig_macneille(&s)?) }),
        SignatureKind::MacCriterion => {
            let v = sig_mac_criterion(&s)?;
            passes(report, v.holds);
            json!({ "holds": v.holds, "diagnostic": v.diagnostic })
        }
        SignatureKind::Divisibility => {
            let d = divisibility_decision(&s, ctx.divisibility);
            let mode = match ctx.divisibility {
                Divisibility::Subalgebra => "subalgebra",
                Divisibility::Literal => "literal",
            };
            json!({
                "verdict": d.verdict.id(),
                "n0": d.n0,
                "exceptional": d.exceptional,
                "divisibility": mode,
            })
        }
        SignatureKind::Equal => {
            let other = other
                .ok_or_else(|| MvError::InvalidArgument("`equal` needs --other FILE".into()))?;
            let t = signature_of(other)?;
            let equal = sig_equal(&s, &t);
            passes(report, equal);
            json!({ "equal": equal, "other": signature_value(&t) })
        }
    };
    Ok(())
}

