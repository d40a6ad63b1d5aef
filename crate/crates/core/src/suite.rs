//! Named property checks and the bundled corpus run.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::checks;
use crate::closure::{check_join_meet_density, complete_with_cap, DmLattice};
use crate::constructors::hsum::completion_isomorphism;
use crate::corpus;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;
use crate::report::{CheckReport, RunReport};
use crate::residuation::{
    bdm_transform, is_relatively_pseudocomplemented, operator_pair, verify_left_residuated_lattice,
    verify_operator_left_residuation, OperatorKind,
};

/// Every property accepted by [`Evaluator::evaluate`], in report order.
pub const PROPERTIES: &[&str] = &[
    "antitone-involution",
    "complementation",
    "lattice",
    "atomic",
    "atomistic",
    "orthocomplete",
    "distributive",
    "boolean",
    "orthomodular-poset",
    "orthomodular-lattice",
    "pseudo-orthomodular",
    "relatively-pseudocomplemented",
    "strongly-d-continuous",
    "finch",
    "density",
    "completion-orthomodular",
    "completion-boolean",
];

/// Evaluates properties of one poset, computing its completion at most once.
pub struct Evaluator<'a> {
    poset: &'a FinitePoset,
    cap: usize,
    completion: OnceLock<Result<DmLattice>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(poset: &'a FinitePoset, cap: usize) -> Self {
        Evaluator {
            poset,
            cap,
            completion: OnceLock::new(),
        }
    }

    pub fn completion(&self) -> Result<&DmLattice> {
        self.completion
            .get_or_init(|| complete_with_cap(self.poset, self.cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Runs one named check. Errors mean a precondition of the check does
    /// not hold (or the completion exceeded the cap).
    pub fn evaluate(&self, property: &str) -> Result<CheckReport> {
        let p = self.poset;
        let mut report = match property {
            "antitone-involution" => p.is_antitone_involution()?,
            "complementation" => p.is_complementation()?,
            "lattice" => p.is_lattice(),
            "atomic" => p.is_atomic()?,
            "atomistic" => p.is_atomistic()?,
            "orthocomplete" => p.is_orthocomplete()?,
            "distributive" => checks::is_distributive_poset(p)?,
            "boolean" => checks::is_boolean_poset(p)?,
            "orthomodular-poset" => checks::is_orthomodular_poset(p)?,
            "orthomodular-lattice" => checks::is_orthomodular_lattice(p)?,
            "pseudo-orthomodular" => checks::is_pseudo_orthomodular(p)?,
            "relatively-pseudocomplemented" => is_relatively_pseudocomplemented(p),
            "strongly-d-continuous" => checks::strongly_d_continuous_on(p, self.completion()?)?,
            "finch" => checks::finch_criterion_on(p, self.completion()?)?,
            "density" => check_join_meet_density(p, self.completion()?),
            "completion-orthomodular" => checks::completion_is_orthomodular(self.completion()?)?,
            "completion-boolean" => checks::is_boolean_poset(&self.completion()?.to_poset())?,
            other => return Err(Error::UnknownProperty(other.to_string())),
        };
        report.property = property.to_string();
        Ok(report)
    }

    /// All properties, evaluated in parallel and returned in report order.
    pub fn evaluate_all(&self) -> Vec<(&'static str, Result<CheckReport>)> {
        if self.poset.involution().is_some() {
            // warm the shared completion before fanning out
            let _ = self.completion();
        }
        PROPERTIES
            .par_iter()
            .map(|&name| (name, self.evaluate(name)))
            .collect()
    }
}

/// A check whose precondition failed, reported as not holding.
pub fn not_applicable(property: &str, err: &Error) -> CheckReport {
    CheckReport::fail(property, Vec::new(), format!("not applicable: {err}"))
}

/// Checks each recorded expectation of a document against the evaluator.
/// Unrecorded properties are added as informational entries when `all` is set.
pub fn check_expectations(
    run: &mut RunReport,
    ev: &Evaluator<'_>,
    expect: &[(String, bool)],
    all: bool,
    prefix: &str,
) {
    let results = ev.evaluate_all();
    for (name, _) in expect {
        if !PROPERTIES.contains(&name.as_str()) {
            let mut r = not_applicable(name, &Error::UnknownProperty(name.clone()));
            r.property = format!("{prefix}{name}");
            run.push(r, None);
        }
    }
    for (name, result) in results {
        let mut report = result.unwrap_or_else(|e| not_applicable(name, &e));
        report.property = format!("{prefix}{name}");
        match expect.iter().find(|(k, _)| k == name) {
            Some((_, expected)) => run.push(report, Some(*expected)),
            None if all => run.push_info(report),
            None => {}
        }
    }
}

fn claim(name: &str, holds: bool, details: impl Into<String>) -> CheckReport {
    if holds {
        CheckReport::pass(name)
    } else {
        CheckReport::fail(name, Vec::new(), details)
    }
}

fn from_result(name: &str, r: Result<CheckReport>) -> CheckReport {
    match r {
        Ok(mut r) => {
            r.property = name.to_string();
            r
        }
        Err(e) => CheckReport::fail(name, Vec::new(), e.to_string()),
    }
}

/// Statements about the bundled figures beyond the per-file expectations.
pub fn figure_claims(cap: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();

    for name in ["fig1a", "fig1b"] {
        let p = corpus::poset(name).expect("bundled");
        out.push(from_result(
            &format!("{name}/operator-residuation[boolean]"),
            operator_pair(&p, OperatorKind::Boolean)
                .and_then(|pair| verify_operator_left_residuation(&p, &pair)),
        ));
        out.push(from_result(
            &format!("{name}/completion-residuated[boolean]"),
            complete_with_cap(&p, cap).and_then(|d| {
                let ops = bdm_transform(&d, OperatorKind::Boolean)?;
                let r = verify_left_residuated_lattice(&d.to_poset(), &ops)?;
                Ok(CheckReport::all("", [r.left_residuated, r.commutative]))
            }),
        ));
    }

    let fig2 = corpus::fig2();
    out.push(from_result(
        "fig2/completion-nonmodular",
        complete_with_cap(&fig2, cap).and_then(|d| {
            let lat = d.to_poset();
            let l = FiniteLattice::new(&lat)?;
            Ok(match l.modular_violation() {
                Some((a, b, c)) => CheckReport::pass("").with_details(format!(
                    "modular law fails at ({}, {}, {})",
                    lat.name(a),
                    lat.name(b),
                    lat.name(c)
                )),
                None => CheckReport::fail("", Vec::new(), "completion is modular"),
            })
        }),
    ));
    out.push(from_result(
        "fig2/completion-left-residuated[pseudo_om]",
        complete_with_cap(&fig2, cap).and_then(|d| {
            let ops = bdm_transform(&d, OperatorKind::PseudoOm)?;
            Ok(verify_left_residuated_lattice(&d.to_poset(), &ops)?.left_residuated)
        }),
    ));
    out.push(from_result(
        "fig2/completion-of-sum",
        completion_isomorphism(
            &[corpus::fig1b(), corpus::poset("ba4").expect("bundled")],
            cap,
        )
        .map(|iso| CheckReport::pass("").with_details(format!("{} closed sets", iso.map.len()))),
    ));

    let fig3 = corpus::fig3();
    out.push(claim(
        "fig3/eighteen-elements",
        fig3.len() == 18,
        format!("{} elements", fig3.len()),
    ));
    out.push(from_result("fig3/gap-witness", fig3_gap_witness(&fig3)));

    for name in corpus::POSET_NAMES.iter().chain(corpus::GREECHIE_NAMES) {
        let p = corpus::poset(name).expect("bundled");
        for kind in OperatorKind::BUILT_IN {
            let natural = match kind {
                OperatorKind::Boolean => checks::is_boolean_poset(&p).is_ok_and(|r| r.holds),
                OperatorKind::RelPseudo => is_relatively_pseudocomplemented(&p).holds,
                _ => checks::is_pseudo_orthomodular(&p).is_ok_and(|r| r.holds),
            };
            if natural {
                out.push(from_result(
                    &format!("{name}/operator-residuation[{kind}]"),
                    operator_pair(&p, kind)
                        .and_then(|pair| verify_operator_left_residuation(&p, &pair)),
                ));
            }
        }
    }
    out
}

/// `L(s',x')` meets the atoms in `{v,z}` and `U(L(s',x'),x) = {1}`.
pub fn fig3_gap_witness(p: &FinitePoset) -> Result<CheckReport> {
    let l = p.lower_cone(&p.set_of(&["s'", "x'"])?);
    let on_atoms = l.intersection(&p.atoms()?);
    let mut with_x = l.clone();
    with_x.insert(
        p.index_of("x")
            .ok_or_else(|| Error::UnknownElement("x".into()))?,
    );
    let u = p.upper_cone(&with_x);
    let ok = on_atoms == p.set_of(&["v", "z"])? && u == p.set_of(&["1"])?;
    let details = format!(
        "L(s',x') ∩ atoms = {}, U(L(s',x'),x) = {}",
        p.render_set(&on_atoms),
        p.render_set(&u)
    );
    Ok(if ok {
        CheckReport::pass("fig3/gap-witness").with_details(details)
    } else {
        CheckReport::fail("fig3/gap-witness", vec!["s'".into(), "x'".into()], details)
    })
}

/// Every bundled file against its expectations, then the figure claims.
pub fn corpus_report(cap: usize) -> RunReport {
    let mut digest_input = String::new();
    for name in corpus::names() {
        digest_input.push_str(corpus::text(name).expect("bundled"));
    }
    let mut run = RunReport::new("corpus", crate::format::digest(&digest_input));
    for name in corpus::names() {
        let p = corpus::poset(name).expect("bundled");
        let expect = corpus::expectations(name).expect("bundled");
        let ev = Evaluator::new(&p, cap);
        check_expectations(&mut run, &ev, &expect, false, &format!("{name}/"));
    }
    for report in figure_claims(cap) {
        run.push(report, None);
    }
    run
}
