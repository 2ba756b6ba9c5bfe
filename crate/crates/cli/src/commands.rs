use std::path::Path;

use serde_json::{json, Value};

use brim::theorems::{builtin_corpus, run_corpus, CheckConfig, NamedFamily, CHECK_IDS};
use brim::{
    br_multiplicity_sequence_with, br_multiplicity_with, hs_multiplicity_with, in_region,
    lambda_pq_brute, lambda_pq_fast, mixed_multiplicities_with, EvalPolicy, ExtractOptions,
};

use crate::family_file::{parse_family, ParsedFamily};
use crate::Failure;

fn width_of(s: &str) -> usize {
    s.chars().count()
}

pub fn load_family(path: &Path, allow_non_primary: bool) -> Result<ParsedFamily, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    parse_family(&text, allow_non_primary).map_err(|e| Failure::Parse(path.display().to_string(), e))
}

fn label(parsed: &ParsedFamily, i: usize) -> String {
    match parsed.names[i].as_deref() {
        Some(name) => name.to_string(),
        None => format!("I{}", i + 1),
    }
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report values serialize")
    );
}

fn family_json(parsed: &ParsedFamily) -> Value {
    json!({
        "vars": parsed.family.dim(),
        "ideals": parsed
            .family
            .ideals()
            .iter()
            .enumerate()
            .map(|(i, ideal)| {
                json!({
                    "index": i + 1,
                    "name": parsed.names[i],
                    "generators": ideal
                        .gens()
                        .iter()
                        .map(|g| g.exponents().to_vec())
                        .collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn cmd_colength(parsed: &ParsedFamily, json_out: bool) -> Result<(), Failure> {
    let values = parsed
        .family
        .ideals()
        .iter()
        .enumerate()
        .map(|(i, ideal)| {
            ideal.colength_box().map_err(|source| Failure::ComputeAt {
                context: format!("ideal at line {}", parsed.ideal_lines[i]),
                source,
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    if json_out {
        print_json(&json!({
            "command": "colength",
            "family": family_json(parsed),
            "colengths": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }));
    } else {
        println!(
            "family: {} variables, {} ideal(s)",
            parsed.family.dim(),
            parsed.family.count()
        );
        for (i, (ideal, v)) in parsed.family.ideals().iter().zip(&values).enumerate() {
            println!("  {} = {}: colength {}", label(parsed, i), ideal, v);
        }
    }
    Ok(())
}

pub fn cmd_multiplicity(parsed: &ParsedFamily, budget: u64, json_out: bool) -> Result<(), Failure> {
    let per_ideal = parsed
        .family
        .ideals()
        .iter()
        .enumerate()
        .map(|(i, ideal)| {
            hs_multiplicity_with(ideal, budget).map_err(|source| Failure::ComputeAt {
                context: format!("ideal at line {}", parsed.ideal_lines[i]),
                source,
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let br = br_multiplicity_with(&parsed.family, budget).map_err(Failure::Compute)?;
    if json_out {
        print_json(&json!({
            "command": "multiplicity",
            "family": family_json(parsed),
            "hilbert_samuel": per_ideal
                .iter()
                .enumerate()
                .map(|(i, s)| json!({
                    "index": i + 1,
                    "value": s.value.to_string(),
                    "bases": [s.bases.0, s.bases.1],
                }))
                .collect::<Vec<_>>(),
            "buchsbaum_rim": json!({
                "value": br.value.to_string(),
                "bases": [br.bases.0, br.bases.1],
            }),
        }));
    } else {
        for (i, s) in per_ideal.iter().enumerate() {
            println!(
                "  e({}) = {}   (stabilized at bases {}, {})",
                label(parsed, i),
                s.value,
                s.bases.0,
                s.bases.1
            );
        }
        println!(
            "  e(C)  = {}   Buchsbaum-Rim multiplicity of the family (bases {}, {})",
            br.value, br.bases.0, br.bases.1
        );
    }
    Ok(())
}

pub fn cmd_mixed(parsed: &ParsedFamily, budget: u64, json_out: bool) -> Result<(), Failure> {
    let table = mixed_multiplicities_with(&parsed.family, budget).map_err(Failure::Compute)?;
    if json_out {
        print_json(&json!({
            "command": "mixed",
            "family": family_json(parsed),
            "entries": table
                .entries
                .iter()
                .map(|e| json!({
                    "type": e.index,
                    "value": e.value.to_string(),
                    "bases": [e.bases.0, e.bases.1],
                }))
                .collect::<Vec<_>>(),
            "total": table.total().to_string(),
        }));
    } else {
        for e in &table.entries {
            let tag: Vec<String> = e.index.iter().map(|v| v.to_string()).collect();
            println!("  e_({}) = {}", tag.join(","), e.value);
        }
        println!("  total = {}", table.total());
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMethod {
    Brute,
    Fast,
    Both,
}

impl TableMethod {
    fn name(self) -> &'static str {
        match self {
            TableMethod::Brute => "brute",
            TableMethod::Fast => "fast",
            TableMethod::Both => "both",
        }
    }
}

pub fn cmd_br_function(
    parsed: &ParsedFamily,
    p_max: u64,
    q_max: u64,
    method: TableMethod,
    json_out: bool,
) -> Result<(), Failure> {
    let family = &parsed.family;
    let r = family.count();
    let mut cells = Vec::new();
    let mut mismatches = Vec::new();
    for p in 0..=p_max {
        for q in 0..=q_max {
            let brute = match method {
                TableMethod::Fast => None,
                _ => Some(lambda_pq_brute(family, p, q).map_err(Failure::Compute)?),
            };
            let fast = if method != TableMethod::Brute && in_region(p, q, r) {
                Some(lambda_pq_fast(family, p, q).map_err(Failure::Compute)?)
            } else {
                None
            };
            if let (Some(b), Some(f)) = (&brute, &fast) {
                if b != f {
                    mismatches.push(format!("(p={p}, q={q}): brute {b} != stratified {f}"));
                }
            }
            cells.push((p, q, brute, fast));
        }
    }

    if json_out {
        print_json(&json!({
            "command": "br-function",
            "family": family_json(parsed),
            "method": method.name(),
            "p_max": p_max,
            "q_max": q_max,
            "cells": cells
                .iter()
                .map(|(p, q, b, f)| json!({
                    "p": p,
                    "q": q,
                    "brute": b.as_ref().map(|v| v.to_string()),
                    "stratified": f.as_ref().map(|v| v.to_string()),
                }))
                .collect::<Vec<_>>(),
            "mismatches": mismatches,
        }));
    } else {
        println!("Lambda(p, q), method {}", method.name());
        let shown: Vec<String> = cells
            .iter()
            .map(|(_, _, b, f)| match (b, f) {
                (Some(v), _) => v.to_string(),
                (None, Some(v)) => v.to_string(),
                (None, None) => "-".to_string(),
            })
            .collect();
        let head_width = width_of(&format!("p={p_max}"));
        let mut col_width = width_of(&format!("q={q_max}"));
        for s in &shown {
            col_width = col_width.max(width_of(s));
        }
        print!("{:>head_width$}", "");
        for q in 0..=q_max {
            print!("  {:>col_width$}", format!("q={q}"));
        }
        println!();
        for p in 0..=p_max {
            print!("{:>head_width$}", format!("p={p}"));
            for q in 0..=q_max {
                let idx = (p * (q_max + 1) + q) as usize;
                print!("  {:>col_width$}", shown[idx]);
            }
            println!();
        }
    }

    if !mismatches.is_empty() {
        return Err(Failure::Verification(format!(
            "{} evaluator mismatch(es): {}",
            mismatches.len(),
            mismatches.join("; ")
        )));
    }
    Ok(())
}

pub fn cmd_br_sequence(
    parsed: &ParsedFamily,
    budget: u64,
    brute_force: bool,
    json_out: bool,
) -> Result<(), Failure> {
    let opts = ExtractOptions {
        budget,
        policy: if brute_force {
            EvalPolicy::BruteForce
        } else {
            EvalPolicy::Auto
        },
    };
    let report = br_multiplicity_sequence_with(&parsed.family, &opts).map_err(Failure::Compute)?;
    if json_out {
        print_json(&json!({
            "command": "br-sequence",
            "family": family_json(parsed),
            "entries": report
                .entries()
                .iter()
                .map(|e| json!({
                    "j": e.j,
                    "value": e.value.to_string(),
                    "p_bases": [e.bases.0, e.bases.1],
                }))
                .collect::<Vec<_>>(),
        }));
    } else {
        for e in report.entries() {
            println!(
                "e^{} = {}   (stabilized at p-bases {}, {})",
                e.j, e.value, e.bases.0, e.bases.1
            );
        }
        println!("(consecutive-base agreement; bases recorded for audit)");
    }
    Ok(())
}

pub struct VerifyArgs {
    pub p_max: u64,
    pub q_max: u64,
    pub samples: usize,
    pub budget: u64,
    pub checks: Vec<String>,
    pub json: bool,
}

pub fn cmd_verify(source: Option<&ParsedFamily>, name: &str, args: &VerifyArgs) -> Result<(), Failure> {
    for id in &args.checks {
        if !CHECK_IDS.contains(&id.as_str()) {
            return Err(Failure::Usage(format!(
                "unknown check `{id}` (known: {})",
                CHECK_IDS.join(", ")
            )));
        }
    }
    let corpus: Vec<NamedFamily> = match source {
        Some(parsed) => vec![NamedFamily {
            name: name.to_string(),
            family: parsed.family.clone(),
        }],
        None => builtin_corpus(),
    };
    let cfg = CheckConfig {
        p_max: args.p_max,
        q_max: args.q_max,
        min_samples: args.samples,
        budget: args.budget,
        checks: args.checks.clone(),
        ..CheckConfig::default()
    };
    let reports = run_corpus(&corpus, &cfg).map_err(Failure::Compute)?;
    let failures = brim::theorems::failures(&reports);
    if args.json {
        print_json(&json!({
            "command": "verify",
            "reports": reports
                .iter()
                .map(|r| json!({
                    "check": r.check,
                    "subject": r.subject,
                    "verdict": r.verdict.to_string(),
                    "details": r.details,
                }))
                .collect::<Vec<_>>(),
            "failures": failures,
        }));
    } else {
        for r in &reports {
            println!("[{}] {} :: {}", r.verdict, r.check, r.subject);
            for d in &r.details {
                println!("    {d}");
            }
        }
        println!("{} report(s), {} failure(s)", reports.len(), failures);
    }
    if failures > 0 {
        return Err(Failure::Verification(format!(
            "{failures} verification failure(s)"
        )));
    }
    Ok(())
}
