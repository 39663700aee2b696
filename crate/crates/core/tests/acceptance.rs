//! Acceptance gate: runs every suite at the default configuration, with the
//! planted-error controls, and prints one verdict line per criterion.
//!
//! All comparisons are exact over the rationals. A criterion listed in
//! `KNOWN_UNMET` is a claim that is false as stated; the gate checks that it
//! still fails, and only through the identities named there.

use cychains::suite::{run_suite, IdentityRecord, SuiteConfig, SuiteReport};
use std::sync::OnceLock;

struct Criterion {
    number: usize,
    what: &'static str,
    /// Every record whose id starts with one of these prefixes belongs here.
    prefixes: &'static [&'static str],
    /// Ids that must be present.
    required: &'static [&'static str],
}

const CRITERIA: [Criterion; 7] = [
    Criterion {
        number: 1,
        what: "Cartan calculus, Schouten bracket and divergence identities",
        prefixes: &["cartan.", "ring."],
        required: &[
            "cartan.schouten_contraction_commutator",
            "cartan.divergence_bv_generator",
            "cartan.schouten_jacobi",
            "cartan.divergence_squared",
        ],
    },
    Criterion {
        number: 2,
        what: "Hochschild chains, cochains, Connes B and HKR",
        prefixes: &["hochschild."],
        required: &[
            "hochschild.chain_boundary_squared",
            "hochschild.mixed_complex",
            "hochschild.hkr_kills_boundary",
            "hochschild.hkr_intertwines_connes_b",
            "hochschild.action_respects_bracket",
        ],
    },
    Criterion {
        number: 3,
        what: "extended complex: b, ∇, σ and the embedding of cochains",
        prefixes: &["extended."],
        required: &[
            "extended.b_squared",
            "extended.nabla_squared",
            "extended.b_nabla_anticommute",
            "extended.sigma_commutes_with_b",
            "extended.sigma_commutes_with_nabla",
            "extended.embedding_chain_map",
            "extended.projection_kills_exact",
        ],
    },
    Criterion {
        number: 4,
        what: "Koszul symbol complex ranks",
        prefixes: &["koszul."],
        required: &["koszul.cohomology_concentrated", "koszul.line_dimensions_d2"],
    },
    Criterion {
        number: 5,
        what: "u-dependent actions, homotopies and the sign channel",
        prefixes: &["uactions."],
        required: &[
            "uactions.two_formulas_agree",
            "uactions.compatible_with_differentials",
            "uactions.h_first_equation",
            "uactions.h_second_equation",
            "uactions.dual_action_adjoint",
            "uactions.h1_sign_channel",
        ],
    },
    Criterion {
        number: 6,
        what: "L∞ structures, modules, morphisms, adjoints and transport",
        prefixes: &["linfty."],
        required: &[
            "linfty.polyvector_square_zero",
            "linfty.cochain_square_zero",
            "linfty.trivial_module",
            "linfty.adjoint_action_module",
            "linfty.forms_module",
            "linfty.dual_module",
            "linfty.chains_over_cochains",
            "linfty.pullback_u_zero",
            "linfty.adjoint_is_dual",
            "linfty.transport_of_zero_morphism",
            "linfty.transport_of_toy_morphism",
            "linfty.toy_dual_reading",
        ],
    },
    Criterion {
        number: 7,
        what: "planted errors are detected",
        prefixes: &[".control."],
        required: &[
            "linfty.control.bracket_without_parity",
            "extended.control.flipped_wrap_sign",
            "uactions.control.lt_without_divergence",
        ],
    },
];

/// Criteria that fail because the claim is false, with the identities that
/// carry the failure.
const KNOWN_UNMET: [(usize, &[&str]); 1] = [(3, &["extended.sigma_commutes_with_b"])];

fn belongs(c: &Criterion, r: &IdentityRecord) -> bool {
    let is_control = r.id.contains(".control.");
    if c.number == 7 {
        return is_control;
    }
    !is_control && c.prefixes.iter().any(|p| r.id.starts_with(p))
}

fn report() -> &'static SuiteReport {
    static REPORT: OnceLock<SuiteReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        let cfg = SuiteConfig { with_controls: true, ..SuiteConfig::default() };
        run_suite(&cfg).expect("suites run")
    })
}

#[test]
fn acceptance() {
    let report = report();
    let mut problems = Vec::new();
    for c in &CRITERIA {
        let records: Vec<&IdentityRecord> = report.records.iter().filter(|r| belongs(c, r)).collect();
        for id in c.required {
            if !records.iter().any(|r| r.id == *id) {
                problems.push(format!("criterion {}: {id} missing", c.number));
            }
        }
        let failing: Vec<&str> = records.iter().filter(|r| !r.ok).map(|r| r.id.as_str()).collect();
        let pass = failing.is_empty() && !records.is_empty();
        let verdict = if pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict}  {} ({} identities)", c.number, c.what, records.len());
        for id in &failing {
            println!("    not as expected: {id}");
        }
        match KNOWN_UNMET.iter().find(|(n, _)| *n == c.number) {
            Some((_, ids)) => {
                let mut want: Vec<&str> = ids.to_vec();
                let mut got = failing.clone();
                want.sort();
                got.sort();
                if got != want {
                    problems.push(format!("criterion {}: expected exactly {want:?} to fail, got {got:?}", c.number));
                }
            }
            None if !pass => problems.push(format!("criterion {} failed: {failing:?}", c.number)),
            None => {}
        }
    }
    assert!(problems.is_empty(), "{problems:#?}");
}

#[test]
fn sign_channel_is_recorded() {
    let report = report();
    let r = report.record("uactions.h1_sign_channel").expect("present");
    assert!(r.ok);
    assert_eq!(r.detail.as_deref(), Some("passing channel: [-1]"));
}

#[test]
fn every_record_is_classified() {
    let report = report();
    for r in &report.records {
        let n = CRITERIA.iter().filter(|c| belongs(c, r)).count();
        assert_eq!(n, 1, "{} belongs to {n} criteria", r.id);
    }
}
