use std::path::Path;

use centra::isotopy::{self, Findings, Shape};
use centra::representation::{self, PowerClosure, Side};
use centra::{regular, CayleyTable, Error};
use clap::ValueEnum;
use serde::Serialize;

use crate::corpus::{self, Item};
use crate::{exit, json, Failure, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    LcAuto,
    RcAuto,
    CMu,
    ClosureLcrc,
    ClosureC,
    Power,
    IsoLcrc,
    IsoC,
    IsoCc,
    CentralSquare,
}

impl Theorem {
    fn id(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    fn is_sampled(self) -> bool {
        matches!(
            self,
            Theorem::IsoLcrc | Theorem::IsoC | Theorem::IsoCc | Theorem::CentralSquare
        )
    }

    fn default_corpus(self) -> &'static str {
        if self.is_sampled() {
            "c12"
        } else {
            "exhaustive:5"
        }
    }
}

#[derive(Serialize)]
struct Disagreement {
    item: String,
    source: String,
    check: String,
    detail: String,
}

#[derive(Serialize)]
struct AgreementReport {
    theorem: String,
    corpus: String,
    seed: u64,
    items: usize,
    checks: usize,
    /// Power closure only: loops failing the precondition.
    #[serde(skip_serializing_if = "Option::is_none")]
    vacuous: Option<usize>,
    disagreements: Vec<Disagreement>,
}

#[derive(Serialize)]
struct ItemFindings {
    item: String,
    #[serde(flatten)]
    findings: Findings,
}

#[derive(Serialize)]
struct FindingsReport {
    theorem: String,
    corpus: String,
    seed: u64,
    budget: usize,
    counterexamples: usize,
    findings: Vec<ItemFindings>,
}

type Check = fn(&CayleyTable) -> centra::Result<bool>;

fn agreement_checks(theorem: Theorem) -> Vec<(String, Check)> {
    let both = |name: &str, l: Check, r: Check| {
        vec![(format!("{name}:left"), l), (format!("{name}:right"), r)]
    };
    match theorem {
        Theorem::LcAuto => vec![("lc-auto".into(), regular::check_theorem_lc_auto as Check)],
        Theorem::RcAuto => vec![("rc-auto".into(), regular::check_theorem_rc_auto as Check)],
        Theorem::CMu => vec![("c-mu".into(), regular::check_theorem_c_mu as Check)],
        Theorem::ClosureLcrc => both(
            "closure-lcrc",
            |t| representation::check_closure_lcrc(t, Side::Left),
            |t| representation::check_closure_lcrc(t, Side::Right),
        ),
        Theorem::ClosureC => both(
            "closure-c",
            |t| representation::check_closure_c(t, Side::Left),
            |t| representation::check_closure_c(t, Side::Right),
        ),
        _ => Vec::new(),
    }
}

fn run_agreement(theorem: Theorem, corpus_spec: &str, items: &[Item], seed: u64) -> Outcome {
    let mut report = AgreementReport {
        theorem: theorem.id(),
        corpus: corpus_spec.to_string(),
        seed,
        items: items.len(),
        checks: 0,
        vacuous: None,
        disagreements: Vec::new(),
    };
    for it in items {
        let mut record = |check: String, detail: String| {
            report.disagreements.push(Disagreement {
                item: it.label.clone(),
                source: it.table.digest(),
                check,
                detail,
            })
        };
        if theorem == Theorem::Power {
            for side in Side::BOTH {
                report.checks += 1;
                match representation::check_power_closure(&it.table, side, -6..=6)? {
                    PowerClosure::Holds => {}
                    PowerClosure::VacuouslyTrue => *report.vacuous.get_or_insert(0) += 1,
                    PowerClosure::Fails { element, exponent } => record(
                        format!("power:{side}"),
                        format!(
                            "translation of {element} to the power {exponent} is not a translation"
                        ),
                    ),
                }
            }
            report.vacuous.get_or_insert(0);
            continue;
        }
        for (name, check) in agreement_checks(theorem) {
            report.checks += 1;
            match check(&it.table) {
                Ok(true) => {}
                Ok(false) => record(name, "checks disagree".into()),
                Err(Error::InternalInconsistency(detail)) => record(name, detail),
                Err(e) => return Err(Failure::from(e).with_context(&it.label)),
            }
        }
    }
    let code = if report.disagreements.is_empty() {
        exit::CLEAN
    } else {
        exit::FINDING
    };
    Ok((json(&report), code))
}

fn run_sampled(
    theorem: Theorem,
    corpus_spec: &str,
    items: &[Item],
    shapes: &[Shape],
    seed: u64,
    budget: usize,
) -> Outcome {
    let mut findings = Vec::new();
    if theorem == Theorem::CentralSquare {
        for &shape in shapes {
            for (name, f) in isotopy::verify_central_square_fixtures(shape, budget, seed)? {
                findings.push(ItemFindings {
                    item: name.to_string(),
                    findings: f,
                });
            }
        }
    } else {
        let verifier = match theorem {
            Theorem::IsoLcrc => isotopy::verify_iso_invariance_lcrc,
            Theorem::IsoC => isotopy::verify_iso_c,
            _ => isotopy::verify_iso_cc,
        };
        for it in items {
            for &shape in shapes {
                let f = verifier(&it.table, shape, budget, seed)
                    .map_err(|e| Failure::from(e).with_context(&it.label))?;
                findings.push(ItemFindings {
                    item: it.label.clone(),
                    findings: f,
                });
            }
        }
    }
    let counterexamples = findings
        .iter()
        .map(|f| f.findings.counterexamples.len())
        .sum();
    let report = FindingsReport {
        theorem: theorem.id(),
        corpus: if theorem == Theorem::CentralSquare {
            "central-square-fixtures".into()
        } else {
            corpus_spec.to_string()
        },
        seed,
        budget,
        counterexamples,
        findings,
    };
    let code = if counterexamples == 0 {
        exit::CLEAN
    } else {
        exit::FINDING
    };
    Ok((json(&report), code))
}

pub fn run(
    theorem: Theorem,
    corpus_spec: Option<&str>,
    input: Option<&Path>,
    shape: Option<Shape>,
    seed: u64,
    budget: usize,
) -> Outcome {
    let spec = match (corpus_spec, input) {
        (Some(s), _) => s,
        (None, Some(_)) => "",
        (None, None) => theorem.default_corpus(),
    };
    let shapes: Vec<Shape> = match shape {
        Some(s) => vec![s],
        None => Shape::BOTH.to_vec(),
    };
    if theorem.is_sampled() {
        let items = if theorem == Theorem::CentralSquare {
            Vec::new()
        } else {
            corpus::build(spec, input, seed)?
        };
        run_sampled(theorem, spec, &items, &shapes, seed, budget)
    } else {
        let items = corpus::build(spec, input, seed)?;
        run_agreement(theorem, spec, &items, seed)
    }
}
