//! Command dispatch and report re-verification.

use frobsep_core::algebra::{validate_algebra, validate_morphism, Algebra};
use frobsep_core::exactlin::RatMatrix;
use frobsep_core::extension::{
    check_char_frob_ext_equation, check_frobenius_extension, check_nakayama_compat, check_separable_extension,
    find_compatible_structure, sep_from_frob_ext_alpha0, verify_alpha0, verify_ext_frobenius, verify_ext_separable,
    verify_no_compatible_structure, verify_non_frobenius_extension, Alpha0Witness, AlgebraExtension, BimodAlgebraView,
    BimodAlgebraWitness, CompatRoute, ExtFrobeniusCertificate, ExtSeparabilityCertificate,
};
use frobsep_core::frobsep::{
    find_frobenius, frobenius_from_functional, frobenius_to_separable_alpha, induced_idempotent, is_separable,
    verify_frobenius, verify_nakayama, verify_non_frobenius, verify_separable, FrobeniusCertificate, FrobeniusDecision,
    NonFrobeniusProof, SeparabilityCertificate,
};
use frobsep_core::sampling::SearchOptions;
use frobsep_core::symbolic::SearchError;
use frobsep_core::wreath::{
    frobenius_wreath_witness, separable_wreath_witness, validate_wreath, verify_non_frobenius_wreath,
    verify_separable_wreath_witness, verify_wreath_frobenius_witness, wreath_product, WreathData, WreathFrobeniusWitness,
    WreathProduct,
};

use crate::error::CliError;
use crate::rational::{from_q, matrix_to_rows, rows_to_matrix, to_q};
use crate::report::{Check, Report, Verdict, Witness};
use crate::spec::{Kind, SpecBody, SpecFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    CheckFrobenius,
    CheckSeparable,
    Nakayama,
    CheckExtension,
    CheckWreath,
    Crosscheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckFrobenius => "check-frobenius",
            Command::CheckSeparable => "check-separable",
            Command::Nakayama => "nakayama",
            Command::CheckExtension => "check-extension",
            Command::CheckWreath => "check-wreath",
            Command::Crosscheck => "crosscheck",
        }
    }

    fn accepts(self, kind: Kind) -> bool {
        match self {
            Command::CheckFrobenius | Command::CheckSeparable | Command::Nakayama => kind == Kind::Algebra,
            Command::CheckExtension => kind == Kind::Extension,
            Command::CheckWreath => kind == Kind::Wreath,
            Command::Crosscheck => true,
        }
    }
}

/// Search settings after applying the precedence flag > spec > default.
pub fn resolve_options(spec: &SpecFile, trials: Option<usize>, seed: Option<u64>, cap: Option<usize>) -> SearchOptions {
    let d = SearchOptions::default();
    SearchOptions {
        trials: trials.unwrap_or(d.trials),
        seed: seed.or(spec.seed).unwrap_or(d.seed),
        symbolic_cap: cap.unwrap_or(d.symbolic_cap),
    }
}

pub fn run_command(cmd: Command, spec: &SpecFile, opts: &SearchOptions) -> Result<Report, CliError> {
    if !cmd.accepts(spec.kind()) {
        return Err(CliError::Validation(format!("`{}` does not accept a spec of kind `{:?}`", cmd.name(), spec.kind()).to_lowercase()));
    }
    let mut checks = Vec::new();
    match (&spec.body, cmd) {
        (SpecBody::Algebra { algebra, .. }, Command::CheckFrobenius) => {
            checks.push(laws_check(algebra));
            frobenius_checks(algebra, spec, opts, &mut checks)?;
        }
        (SpecBody::Algebra { algebra, .. }, Command::CheckSeparable | Command::Crosscheck) => {
            checks.push(laws_check(algebra));
            separable_checks(algebra, opts, &mut checks)?;
        }
        (SpecBody::Algebra { algebra, functional }, Command::Nakayama) => {
            checks.push(laws_check(algebra));
            nakayama_checks(algebra, functional.as_deref(), opts, &mut checks)?;
        }
        (SpecBody::Extension(ext), Command::CheckExtension) => {
            checks.push(morphism_check(ext));
            extension_checks(ext, opts, &mut checks)?;
        }
        (SpecBody::Extension(ext), Command::Crosscheck) => {
            checks.push(morphism_check(ext));
            crosscheck_extension(ext, opts, &mut checks)?;
        }
        (SpecBody::Wreath(w), Command::CheckWreath | Command::Crosscheck) => wreath_checks(w, opts, &mut checks)?,
        _ => unreachable!("kind checked above"),
    }
    Ok(Report {
        subject: spec.name.clone(),
        command: cmd.name().into(),
        seed: opts.seed,
        trials: opts.trials,
        symbolic_cap: opts.symbolic_cap,
        checks,
        elapsed_ms: None,
    })
}

fn check(id: &str, verdict: Verdict, statement: &str) -> Check {
    Check { id: id.into(), verdict, statement: statement.into(), detail: String::new(), witness: None }
}

fn with(mut c: Check, detail: impl Into<String>, witness: Option<Witness>) -> Check {
    c.detail = detail.into();
    c.witness = witness;
    c
}

fn search_err(what: &str, e: SearchError) -> CliError {
    CliError::Internal(format!("{what}: {e}"))
}

fn laws_check(a: &Algebra) -> Check {
    check("algebra.laws", Verdict::from_bool(validate_algebra(a).is_empty()), "structure constants are associative and unital")
}

fn morphism_check(ext: &AlgebraExtension) -> Check {
    check(
        "extension.morphism",
        Verdict::from_bool(validate_morphism(ext.morphism()).is_empty()),
        "the inclusion map is a unital algebra morphism",
    )
}

fn frobenius_witness(c: &FrobeniusCertificate) -> Witness {
    Witness::FrobeniusPair { functional: to_q(&c.theta), casimir: to_q(&c.casimir), nakayama: matrix_to_rows(&c.nakayama) }
}

fn decision_check<C>(id: &str, statement: &str, d: &FrobeniusDecision<C>, positive: impl Fn(&C) -> Witness) -> Check {
    match d {
        FrobeniusDecision::Frobenius(c) => with(check(id, Verdict::Yes, statement), "", Some(positive(c))),
        FrobeniusDecision::NotFrobenius(p) => with(check(id, Verdict::No, statement), p.to_string(), Some(Witness::from_proof(p))),
    }
}

fn frobenius_checks(
    a: &Algebra,
    spec: &SpecFile,
    opts: &SearchOptions,
    checks: &mut Vec<Check>,
) -> Result<Option<FrobeniusCertificate>, CliError> {
    let d = find_frobenius(a, opts).map_err(|e| search_err("Frobenius search", e))?;
    checks.push(decision_check(
        "frobenius",
        "a functional with nondegenerate form and a dual Casimir element exists",
        &d,
        frobenius_witness,
    ));
    if let SpecBody::Algebra { functional: Some(theta), .. } = &spec.body {
        let c = frobenius_from_functional(a, theta);
        let detail = if c.is_some() { "" } else { "the form of the given functional is degenerate" };
        checks.push(with(
            check("frobenius.given_functional", Verdict::decision(c.is_some()), "the given functional is a Frobenius functional"),
            detail,
            c.as_ref().map(frobenius_witness),
        ));
    }
    Ok(d.witness().cloned())
}

fn separable_checks(a: &Algebra, opts: &SearchOptions, checks: &mut Vec<Check>) -> Result<(), CliError> {
    let sep = is_separable(a);
    let detail = if sep.is_some() { "" } else { "the linear system for a separability idempotent is inconsistent" };
    checks.push(with(
        check("separable", Verdict::decision(sep.is_some()), "an idempotent e with a·e = e·a and m(e) = 1 exists"),
        detail,
        sep.as_ref().map(|s| Witness::SeparabilityIdempotent { idempotent: to_q(&s.idempotent) }),
    ));
    let d = find_frobenius(a, opts).map_err(|e| search_err("Frobenius search", e))?;
    checks.push(decision_check(
        "frobenius",
        "a functional with nondegenerate form and a dual Casimir element exists",
        &d,
        frobenius_witness,
    ));
    if let Some(cert) = d.witness() {
        let alpha = frobenius_to_separable_alpha(cert);
        checks.push(with(
            check("separable.alpha", Verdict::decision(alpha.is_some()), "an element α with Σ e′αe″ = 1 exists for the Casimir element"),
            "",
            alpha.as_ref().map(|w| Witness::AlphaElement { alpha: to_q(&w.alpha), idempotent: to_q(&w.separability.idempotent) }),
        ));
        checks.push(check(
            "separable.alpha_agrees",
            Verdict::from_bool(alpha.is_some() == sep.is_some()),
            "the α criterion and the direct idempotent search agree",
        ));
    }
    Ok(())
}

fn nakayama_checks(a: &Algebra, given: Option<&[frobsep_core::exactlin::Rational]>, opts: &SearchOptions, checks: &mut Vec<Check>) -> Result<(), CliError> {
    let cert = match given {
        Some(theta) => match frobenius_from_functional(a, theta) {
            Some(c) => c,
            None => {
                checks.push(with(
                    check("frobenius.given_functional", Verdict::No, "the given functional is a Frobenius functional"),
                    "the form of the given functional is degenerate",
                    None,
                ));
                return Ok(());
            }
        },
        None => {
            let d = find_frobenius(a, opts).map_err(|e| search_err("Frobenius search", e))?;
            checks.push(decision_check(
                "frobenius",
                "a functional with nondegenerate form and a dual Casimir element exists",
                &d,
                frobenius_witness,
            ));
            match d {
                FrobeniusDecision::Frobenius(c) => c,
                FrobeniusDecision::NotFrobenius(_) => return Ok(()),
            }
        }
    };
    let n = &cert.nakayama;
    let detail = if n.is_identity() { "identity" } else { "not the identity" };
    checks.push(with(
        check("nakayama", Verdict::Pass, "the automorphism N with ϑ(N(a)·b) = ϑ(b·a)"),
        detail,
        Some(Witness::NakayamaAutomorphism { functional: to_q(&cert.theta), matrix: matrix_to_rows(n) }),
    ));
    checks.push(check(
        "nakayama.defining_identity",
        Verdict::from_bool(verify_nakayama(a, &cert.theta, n).is_empty()),
        "ϑ(N(a)·b) = ϑ(b·a) on all basis pairs",
    ));
    checks.push(check("nakayama.unital", Verdict::from_bool(n.apply(a.unit()) == a.unit()), "N(1) = 1"));
    let mult = (0..a.dim()).all(|i| {
        (0..a.dim()).all(|j| n.apply(a.basis_product(i, j)) == a.product(&n.column(i), &n.column(j)))
    });
    checks.push(check("nakayama.multiplicative", Verdict::from_bool(mult), "N(ab) = N(a)N(b)"));
    checks.push(check("nakayama.invertible", Verdict::from_bool(n.inverse().is_some()), "N is invertible"));
    Ok(())
}

fn ext_frobenius_witness(c: &ExtFrobeniusCertificate) -> Witness {
    Witness::ExtensionFrobenius { functional: matrix_to_rows(&c.theta), e: to_q(&c.e) }
}

fn extension_checks(ext: &AlgebraExtension, opts: &SearchOptions, checks: &mut Vec<Check>) -> Result<(), CliError> {
    let sep = check_separable_extension(ext);
    checks.push(with(
        check("extension.separable", Verdict::decision(sep.is_some()), "an element e of S⊗_R S commuting with S with m(e) = 1 exists"),
        if sep.is_some() { "" } else { "the linear system for e is inconsistent" },
        sep.as_ref().map(|c| Witness::ExtensionSeparability { e: to_q(&c.e) }),
    ));
    let frob = check_frobenius_extension(ext, opts).map_err(|e| search_err("Frobenius extension search", e))?;
    checks.push(decision_check(
        "extension.frobenius",
        "an R-bimodule map ϑ: S → R with a dual element e of S⊗_R S exists",
        &frob,
        ext_frobenius_witness,
    ));
    if let Some(cert) = frob.witness() {
        let a0 = sep_from_frob_ext_alpha0(ext, cert);
        checks.push(with(
            check("extension.alpha0", Verdict::decision(a0.is_some()), "an element α₀ centralizing R with Σ e′α₀e″ = 1 exists"),
            "",
            a0.as_ref().map(|w| Witness::Alpha0 { alpha0: to_q(&w.alpha0), e: to_q(&w.separability.e) }),
        ));
        checks.push(check(
            "extension.alpha0_agrees",
            Verdict::from_bool(a0.is_some() == sep.is_some()),
            "the α₀ criterion and the direct separability check agree",
        ));
    }
    Ok(())
}

fn crosscheck_extension(ext: &AlgebraExtension, opts: &SearchOptions, checks: &mut Vec<Check>) -> Result<(), CliError> {
    let view = BimodAlgebraView::new(ext).map_err(|e| CliError::Internal(e.to_string()))?;
    let fa = check_frobenius_extension(ext, opts).map_err(|e| search_err("Frobenius extension search", e))?;
    let fb = view.find_frobenius(opts).map_err(|e| search_err("bimodule algebra search", e))?;
    let sa = check_separable_extension(ext);
    let sb = view.find_separable();
    let bimod_witness = |w: &BimodAlgebraWitness| Witness::BimoduleAlgebra {
        functional: w.theta.as_ref().map(matrix_to_rows),
        unit_map: matrix_to_rows(&w.frak_e),
    };
    checks.push(decision_check("frobenius.extension_route", "Frobenius extension via ϑ and e", &fa, ext_frobenius_witness));
    checks.push(decision_check("frobenius.bimodule_algebra_route", "Frobenius algebra in R-bimodules", &fb, bimod_witness));
    checks.push(check(
        "frobenius.routes_agree",
        Verdict::from_bool(fa.is_frobenius() == fb.is_frobenius()),
        "both Frobenius routes give the same verdict",
    ));
    checks.push(with(
        check("separable.extension_route", Verdict::decision(sa.is_some()), "separable extension via e"),
        "",
        sa.as_ref().map(|c| Witness::ExtensionSeparability { e: to_q(&c.e) }),
    ));
    checks.push(with(
        check("separable.bimodule_algebra_route", Verdict::decision(sb.is_some()), "separable algebra in R-bimodules"),
        "",
        sb.as_ref().map(bimod_witness),
    ));
    checks.push(check(
        "separable.routes_agree",
        Verdict::from_bool(sa.is_some() == sb.is_some()),
        "both separability routes give the same verdict",
    ));
    let one = |m: &RatMatrix| m.apply(ext.base().unit());
    let mut transfer = true;
    if let Some(c) = fa.witness() {
        transfer &= view.verify_frobenius(&BimodAlgebraWitness { theta: Some(c.theta.clone()), frak_e: view.frak_e_from(&c.e) }).is_empty();
    }
    if let Some(w) = fb.witness() {
        let c = ExtFrobeniusCertificate { theta: w.theta.clone().expect("Frobenius witnesses carry ϑ"), e: one(&w.frak_e) };
        transfer &= verify_ext_frobenius(ext, &c).is_empty();
    }
    if let Some(c) = &sa {
        transfer &= view.verify_separable(&BimodAlgebraWitness { theta: None, frak_e: view.frak_e_from(&c.e) }).is_empty();
    }
    if let Some(w) = &sb {
        transfer &= verify_ext_separable(ext, &ExtSeparabilityCertificate { e: one(&w.frak_e) }).is_empty();
    }
    checks.push(check("witnesses.transfer", Verdict::from_bool(transfer), "each route's witness verifies in the other route via e = 𝔢(1)"));

    // routes through a fixed Frobenius separable structure on R
    let base = find_frobenius(ext.base(), opts).map_err(|e| search_err("Frobenius search on R", e))?;
    let Some(cert_r) = base.witness().filter(|c| frobenius_to_separable_alpha(c).is_some()) else {
        checks.push(with(
            check("compat.base", Verdict::No, "R is Frobenius and separable"),
            "compatibility routes skipped",
            None,
        ));
        return Ok(());
    };
    checks.push(with(check("compat.base", Verdict::Yes, "R is Frobenius and separable"), "", Some(frobenius_witness(cert_r))));
    let by_eq = find_compatible_structure(ext, cert_r, CompatRoute::CasimirEquation, opts).map_err(|e| CliError::Internal(e.to_string()))?;
    let by_nak = find_compatible_structure(ext, cert_r, CompatRoute::Nakayama, opts).map_err(|e| CliError::Internal(e.to_string()))?;
    checks.push(decision_check(
        "compat.casimir_equation_route",
        "a Frobenius functional on S satisfying the Casimir equation with R exists",
        &by_eq,
        frobenius_witness,
    ));
    checks.push(decision_check(
        "compat.nakayama_route",
        "a Frobenius functional on S whose Nakayama automorphism extends that of R exists",
        &by_nak,
        frobenius_witness,
    ));
    let mut both = true;
    for c in [by_eq.witness(), by_nak.witness()].into_iter().flatten() {
        both &= check_char_frob_ext_equation(ext, cert_r, c).unwrap_or(false);
        both &= check_nakayama_compat(ext, cert_r, c).unwrap_or(false);
    }
    checks.push(check(
        "compat.routes_agree",
        Verdict::from_bool(by_eq.is_frobenius() == by_nak.is_frobenius() && by_eq.is_frobenius() == fa.is_frobenius() && both),
        "both compatibility routes and the direct extension check agree",
    ));
    Ok(())
}

fn wreath_extension(wp: &WreathProduct) -> Result<AlgebraExtension, CliError> {
    AlgebraExtension::new(wp.iota.clone()).map_err(|e| CliError::Internal(e.to_string()))
}

fn wreath_checks(w: &WreathData, opts: &SearchOptions, checks: &mut Vec<Check>) -> Result<(), CliError> {
    let report = validate_wreath(w);
    let laws = [
        ("wr1a", "ψ respects multiplication in A"),
        ("wr1b", "ψ respects the unit of A"),
        ("wr2", "σ commutes with A through ψ"),
        ("wr3", "ζ is compatible with ψ"),
        ("wr4", "ζ is associative"),
        ("wr5", "σ is a left unit for ζ"),
        ("wr6", "σ is a right unit for ζ"),
    ];
    for (id, statement) in laws {
        let failed = report.violations.iter().any(|v| v.law.starts_with(&format!("{id}:")));
        checks.push(check(&format!("wreath.{id}"), Verdict::from_bool(!failed), statement));
    }
    let wp = wreath_product(w).map_err(|e| CliError::Validation(e.to_string()))?;
    checks.push(check(
        "wreath.product_laws",
        Verdict::from_bool(validate_algebra(&wp.product).is_empty()),
        "the wreath product is associative and unital",
    ));
    checks.push(check(
        "wreath.iota_morphism",
        Verdict::from_bool(validate_morphism(&wp.iota).is_empty()),
        "ι: A → A#X is a unital algebra morphism",
    ));
    let ext = wreath_extension(&wp)?;
    let fe = check_frobenius_extension(&ext, opts).map_err(|e| search_err("Frobenius extension search", e))?;
    let fw = frobenius_wreath_witness(&wp, opts).map_err(|e| search_err("wreath witness search", e))?;
    checks.push(decision_check("frobenius.extension_route", "ι is a Frobenius extension", &fe, ext_frobenius_witness));
    checks.push(decision_check(
        "frobenius.wreath_route",
        "ς: X → A and κ in A⊗X⊗X satisfying the wreath Frobenius identities exist",
        &fw,
        |c: &WreathFrobeniusWitness| Witness::WreathFrobenius { varsigma: matrix_to_rows(&c.varsigma), kappa: to_q(&c.kappa) },
    ));
    checks.push(check(
        "frobenius.routes_agree",
        Verdict::from_bool(fe.is_frobenius() == fw.is_frobenius()),
        "both Frobenius routes give the same verdict",
    ));
    let sw = separable_wreath_witness(w);
    let se = check_separable_extension(&ext);
    checks.push(with(
        check("separable.wreath_route", Verdict::decision(sw.is_some()), "e in A⊗X⊗X satisfying the wreath separability identities exists"),
        "",
        sw.as_ref().map(|e| Witness::WreathSeparability { e: to_q(e) }),
    ));
    checks.push(with(
        check("separable.extension_route", Verdict::decision(se.is_some()), "ι is a separable extension"),
        "",
        se.as_ref().map(|c| Witness::ExtensionSeparability { e: to_q(&c.e) }),
    ));
    checks.push(check(
        "separable.routes_agree",
        Verdict::from_bool(sw.is_some() == se.is_some()),
        "both separability routes give the same verdict",
    ));
    Ok(())
}

/// Outcome of re-verifying one witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reverified {
    pub id: String,
    pub ok: bool,
}

/// Re-verifies every witness in `report` against `spec` from scratch.
pub fn verify_report(spec: &SpecFile, report: &Report) -> Result<Vec<Reverified>, CliError> {
    let mut out = Vec::new();
    let wreath_ctx = match &spec.body {
        SpecBody::Wreath(w) => {
            let wp = wreath_product(w).map_err(|e| CliError::Validation(e.to_string()))?;
            let ext = wreath_extension(&wp)?;
            Some((wp, ext))
        }
        _ => None,
    };
    for c in &report.checks {
        let Some(w) = &c.witness else { continue };
        let ok = verify_witness(spec, report, wreath_ctx.as_ref(), &c.id, c.verdict, w)?;
        out.push(Reverified { id: c.id.clone(), ok });
    }
    Ok(out)
}

fn frobenius_cert(a: &Algebra, w: &Witness) -> Option<FrobeniusCertificate> {
    let Witness::FrobeniusPair { functional, casimir, nakayama } = w else { return None };
    Some(FrobeniusCertificate {
        algebra: a.clone(),
        theta: from_q(functional),
        casimir: from_q(casimir),
        nakayama: rows_to_matrix(nakayama, "nakayama").ok()?,
    })
}

fn witness_of<'a>(report: &'a Report, id: &str) -> Option<&'a Witness> {
    report.check(id).and_then(|c| c.witness.as_ref())
}

fn verify_witness(
    spec: &SpecFile,
    report: &Report,
    wreath_ctx: Option<&(WreathProduct, AlgebraExtension)>,
    id: &str,
    verdict: Verdict,
    w: &Witness,
) -> Result<bool, CliError> {
    let negative = verdict == Verdict::No;
    if negative != w.to_proof().is_some() {
        return Ok(false);
    }
    let ok = match (&spec.body, w) {
        (SpecBody::Algebra { algebra, .. }, Witness::FrobeniusPair { .. }) => {
            frobenius_cert(algebra, w).is_some_and(|c| verify_frobenius(&c).is_empty())
        }
        (SpecBody::Algebra { algebra, .. }, Witness::SeparabilityIdempotent { idempotent }) => {
            verify_separable(&SeparabilityCertificate { algebra: algebra.clone(), idempotent: from_q(idempotent) }).is_empty()
        }
        (SpecBody::Algebra { algebra, .. }, Witness::AlphaElement { alpha, idempotent }) => {
            let cert = witness_of(report, "frobenius").and_then(|f| frobenius_cert(algebra, f));
            cert.is_some_and(|cert| {
                let induced = induced_idempotent(&cert, &from_q(alpha));
                induced.idempotent == from_q(idempotent) && verify_separable(&induced).is_empty()
            })
        }
        (SpecBody::Algebra { algebra, .. }, Witness::NakayamaAutomorphism { functional, matrix }) => {
            let theta = from_q(functional);
            match rows_to_matrix(matrix, "matrix") {
                Ok(n) => frobenius_from_functional(algebra, &theta).is_some() && verify_nakayama(algebra, &theta, &n).is_empty(),
                Err(_) => false,
            }
        }
        (SpecBody::Algebra { algebra, .. }, _) if negative && id == "frobenius" => {
            verify_non_frobenius(algebra, &w.to_proof().expect("negative"))
        }
        (SpecBody::Extension(ext), Witness::FrobeniusPair { .. }) => {
            let on = if id == "compat.base" { ext.base() } else { ext.top() };
            frobenius_cert(on, w).is_some_and(|c| verify_frobenius(&c).is_empty())
        }
        (SpecBody::Extension(ext), _) if negative && id.starts_with("compat.") => {
            let route = if id == "compat.nakayama_route" { CompatRoute::Nakayama } else { CompatRoute::CasimirEquation };
            let cert_r = witness_of(report, "compat.base").and_then(|b| frobenius_cert(ext.base(), b));
            cert_r.is_some_and(|c| verify_no_compatible_structure(ext, &c, route, &w.to_proof().expect("negative")))
        }
        (SpecBody::Extension(ext), _) if negative && id == "frobenius.bimodule_algebra_route" => {
            let view = BimodAlgebraView::new(ext).map_err(|e| CliError::Internal(e.to_string()))?;
            view.verify_non_frobenius(&w.to_proof().expect("negative"))
        }
        (SpecBody::Extension(ext), _) => verify_extension_witness(ext, report, id, w)?,
        (SpecBody::Wreath(data), Witness::WreathSeparability { e }) => verify_separable_wreath_witness(data, &from_q(e)).is_empty(),
        (SpecBody::Wreath(data), Witness::WreathFrobenius { varsigma, kappa }) => match rows_to_matrix(varsigma, "varsigma") {
            Ok(vs) => verify_wreath_frobenius_witness(data, &WreathFrobeniusWitness { varsigma: vs, kappa: from_q(kappa) }).is_empty(),
            Err(_) => false,
        },
        (SpecBody::Wreath(_), _) if negative && id == "frobenius.wreath_route" => {
            let (wp, _) = wreath_ctx.expect("wreath context");
            verify_non_frobenius_wreath(wp, &w.to_proof().expect("negative"))
        }
        (SpecBody::Wreath(_), _) => verify_extension_witness(&wreath_ctx.expect("wreath context").1, report, id, w)?,
        _ => false,
    };
    Ok(ok)
}

fn verify_extension_witness(ext: &AlgebraExtension, report: &Report, id: &str, w: &Witness) -> Result<bool, CliError> {
    let ext_cert = |w: &Witness| match w {
        Witness::ExtensionFrobenius { functional, e } => {
            rows_to_matrix(functional, "functional").ok().map(|theta| ExtFrobeniusCertificate { theta, e: from_q(e) })
        }
        _ => None,
    };
    Ok(match w {
        Witness::ExtensionSeparability { e } => verify_ext_separable(ext, &ExtSeparabilityCertificate { e: from_q(e) }).is_empty(),
        Witness::ExtensionFrobenius { .. } => ext_cert(w).is_some_and(|c| verify_ext_frobenius(ext, &c).is_empty()),
        Witness::Alpha0 { alpha0, e } => {
            let cert = witness_of(report, "extension.frobenius").and_then(ext_cert);
            let a0 = Alpha0Witness { alpha0: from_q(alpha0), separability: ExtSeparabilityCertificate { e: from_q(e) } };
            cert.is_some_and(|c| verify_alpha0(ext, &c, &a0))
        }
        Witness::BimoduleAlgebra { functional, unit_map } => {
            let view = BimodAlgebraView::new(ext).map_err(|e| CliError::Internal(e.to_string()))?;
            let Ok(frak_e) = rows_to_matrix(unit_map, "unit_map") else { return Ok(false) };
            match functional {
                Some(f) => match rows_to_matrix(f, "functional") {
                    Ok(theta) => view.verify_frobenius(&BimodAlgebraWitness { theta: Some(theta), frak_e }).is_empty(),
                    Err(_) => false,
                },
                None => view.verify_separable(&BimodAlgebraWitness { theta: None, frak_e }).is_empty(),
            }
        }
        _ => match w.to_proof() {
            Some(p) if id.ends_with("frobenius") || id == "frobenius.extension_route" => verify_non_frobenius_extension(ext, &p),
            _ => false,
        },
    })
}

/// Proofs that appear in `No` verdicts, for callers that want to inspect them.
pub fn proof_of(check: &Check) -> Option<NonFrobeniusProof> {
    check.witness.as_ref().and_then(Witness::to_proof)
}
