use std::fmt::Write as _;

use anyhow::anyhow;
use egk_core::bubbles::{extract_sub_bubble, recognize_bubble};
use egk_core::census::{map_ordered, with_threads};
use egk_core::certificate::{CertificateDocument, SCHEMA_VERSION};
use egk_core::exact::{
    alpha_exact_with, verify_independent, verify_matching, OracleConfig, MAX_ALPHA_BOUND,
};
use egk_core::formats::serialize_graph6;
use egk_core::matching::blossom_maximum_matching;
use egk_core::recognition::{
    build_witnesses, check_inequality, is_extremal, proof_trace, recognize_special,
    BiregularFailure, Evidence, RecognitionError, Verdict,
};
use egk_core::Graph;
use serde_json::json;

use crate::input::read_graphs;
use crate::InputArgs;

#[derive(Debug, Clone, Copy)]
pub enum Kind {
    Check,
    Extremal,
    Bubble,
    Witness,
    Trace,
    Oracle,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VIOLATION: u8 = 2;
pub const EXIT_NOT_TIGHT: u8 = 3;
pub const EXIT_ORACLE_ONLY: u8 = 4;

/// Result of one graph: printed text and exit code, or an error message and
/// its exit code.
type Outcome = Result<(String, u8), (String, u8)>;

fn error(e: impl std::fmt::Display) -> (String, u8) {
    (e.to_string(), EXIT_USAGE)
}

fn violation(e: impl std::fmt::Display) -> (String, u8) {
    (e.to_string(), EXIT_VIOLATION)
}

fn recognition_error(e: RecognitionError) -> (String, u8) {
    match e {
        RecognitionError::InequalityViolated { .. } | RecognitionError::Inconsistent(_) => {
            violation(e)
        }
        e => error(e),
    }
}

/// Prints a document after checking it, so nothing unverified is emitted.
fn emit(
    doc: &CertificateDocument,
    json: bool,
    human: impl FnOnce() -> String,
) -> Result<String, (String, u8)> {
    doc.verify()
        .map_err(|e| violation(format!("refusing to print an unverified certificate: {e}")))?;
    Ok(if json {
        serde_json::to_string(doc).expect("documents serialize")
    } else {
        human()
    })
}

pub fn run(args: &InputArgs, kind: Kind) -> u8 {
    if args.max_oracle > MAX_ALPHA_BOUND {
        eprintln!("error: --max-oracle is at most {MAX_ALPHA_BOUND}");
        return EXIT_USAGE;
    }
    let graphs = match read_graphs(args.input.as_deref(), args.format) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e:#}");
            return EXIT_USAGE;
        }
    };
    let cfg = OracleConfig::with_max_vertices(args.max_oracle);
    let outcomes = with_threads(args.jobs, || {
        map_ordered(&graphs, |g| run_one(g, kind, args.json, &cfg))
    });
    let mut codes = Vec::new();
    for (i, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok((text, code)) => {
                println!("{text}");
                codes.push(code);
            }
            Err((message, code)) => {
                let label = if graphs.len() > 1 {
                    format!("graph {}: ", i + 1)
                } else {
                    String::new()
                };
                eprintln!("error: {label}{message}");
                codes.push(code);
            }
        }
    }
    combine(&codes)
}

/// A violation anywhere wins, then errors, then the largest verdict code.
fn combine(codes: &[u8]) -> u8 {
    if codes.contains(&EXIT_VIOLATION) {
        EXIT_VIOLATION
    } else if codes.contains(&EXIT_USAGE) {
        EXIT_USAGE
    } else {
        codes.iter().copied().max().unwrap_or(EXIT_OK)
    }
}

fn run_one(g: &Graph, kind: Kind, json: bool, cfg: &OracleConfig) -> Outcome {
    match kind {
        Kind::Check => check(g, json, cfg),
        Kind::Extremal => extremal(g, json, cfg),
        Kind::Bubble => bubble(g, json),
        Kind::Witness => witness(g, json),
        Kind::Trace => trace(g, json, cfg),
        Kind::Oracle => oracle(g, json, cfg),
    }
}

fn check(g: &Graph, json: bool, cfg: &OracleConfig) -> Outcome {
    let report = check_inequality(g, cfg).map_err(recognition_error)?;
    let doc = CertificateDocument::inequality(g, report.clone());
    let text = emit(&doc, json, || {
        let relation = if report.tight { "=" } else { "<" };
        format!(
            "{}\tδ={} Δ={} α={} μ={}\tδα={} {relation} Δμ={}\t{}",
            doc.input,
            report.delta,
            report.max_degree,
            report.alpha,
            report.mu,
            report.lhs,
            report.rhs,
            if report.tight { "tight" } else { "strict" }
        )
    })?;
    Ok((text, EXIT_OK))
}

fn extremal(g: &Graph, json: bool, cfg: &OracleConfig) -> Outcome {
    let v = is_extremal(g, cfg).map_err(recognition_error)?;
    let code = match v.verdict {
        Verdict::Tight => EXIT_OK,
        Verdict::OracleOnly => EXIT_ORACLE_ONLY,
        Verdict::Strict | Verdict::NotApplicable => EXIT_NOT_TIGHT,
    };
    let detail = match &v.evidence {
        Evidence::Edgeless => "no edges".to_string(),
        Evidence::PerfectMatching { matching } => format!("{} disjoint edges", matching.len()),
        Evidence::Cycles { cover } => format!("{} cycles", cover.cycles.len()),
        Evidence::Biregular { certificate } => {
            let c = certificate.components.len();
            let plural = if c == 1 { "" } else { "s" };
            format!(
                "bipartite ({}, {})-biregular, {c} component{plural}",
                certificate.delta, certificate.max_degree
            )
        }
        Evidence::BiregularFailure { failure } => match failure {
            BiregularFailure::DegreeOutside { vertex, degree } => {
                format!("vertex {vertex} has degree {degree}, neither δ nor Δ")
            }
            BiregularFailure::SameClassEdge { u, v, degree } => {
                format!("edge {u}-{v} joins two vertices of degree {degree}")
            }
        },
        Evidence::Special { components } => components
            .iter()
            .map(|c| {
                let d = &c.decomposition;
                format!("core {} + {} bubbles", d.core.len(), d.ell)
            })
            .collect::<Vec<_>>()
            .join(", "),
        Evidence::NotSpecial { component } => {
            format!(
                "component of {} vertices has no special decomposition",
                component.len()
            )
        }
        Evidence::Oracle { .. } => "δ = Δ ≥ 4 has no structural characterization".to_string(),
    };
    let q = v.quantities.clone();
    let doc = CertificateDocument::extremal(g, v);
    let text = emit(&doc, json, || {
        let lhs = q.lhs.map_or("?".to_string(), |l| l.to_string());
        format!(
            "{}\t{}\t{}\tδα={lhs} Δμ={}\t{detail}",
            doc.input,
            doc.verdict.as_str(),
            doc.certificate.kind(),
            q.rhs
        )
    })?;
    Ok((text, code))
}

fn bubble(g: &Graph, json: bool) -> Outcome {
    let Some(cert) = recognize_bubble(g).map_err(error)? else {
        let input = serialize_graph6(g);
        let text = if json {
            json!({ "schema_version": SCHEMA_VERSION, "input": input, "bubble": false }).to_string()
        } else {
            format!("{input}\tnot a bubble")
        };
        return Ok((text, EXIT_NOT_TIGHT));
    };
    let sub = extract_sub_bubble(g, &cert).map_err(violation)?;
    let doc = CertificateDocument::bubble(g, cert.clone());
    let text = emit(&doc, json, || {
        let mut s = format!(
            "{}\tbubble\tz={} I={:?} R={:?} xy={}-{}",
            doc.input, cert.contact, cert.i_part, cert.r_part, cert.r_edge.0, cert.r_edge.1
        );
        if let Some(sub) = sub {
            let _ = write!(
                s,
                "\tnot 2-connected, sub-bubble {:?} with contact {}",
                sub.vertices, sub.certificate.contact
            );
        }
        s
    })?;
    Ok((text, EXIT_OK))
}

fn witness(g: &Graph, json: bool) -> Outcome {
    let Some(d) = recognize_special(g).map_err(recognition_error)? else {
        let input = serialize_graph6(g);
        let text = if json {
            json!({ "schema_version": SCHEMA_VERSION, "input": input, "special": false })
                .to_string()
        } else {
            format!("{input}\tnot special: α < μ")
        };
        return Ok((text, EXIT_NOT_TIGHT));
    };
    let pair = build_witnesses(g, &d).map_err(recognition_error)?;
    let doc = CertificateDocument::witness(g, pair.clone());
    let text = emit(&doc, json, || {
        format!(
            "{}\tα = μ = {}\tI={:?}\tM={:?}",
            doc.input,
            pair.size(),
            pair.independent_set.vertices,
            pair.matching.edges()
        )
    })?;
    Ok((text, EXIT_OK))
}

fn trace(g: &Graph, json: bool, cfg: &OracleConfig) -> Outcome {
    let t = proof_trace(g, None, cfg).map_err(recognition_error)?;
    let doc = CertificateDocument::trace(g, t.clone());
    let text = emit(&doc, json, || {
        let c = t.count_chain;
        let b = t.bound_chain;
        [
            doc.input.clone(),
            format!("  I = {:?} (α = {})", t.independent_set.vertices, t.alpha),
            format!(
                "  H: {} edges between I and R, |M| = |U| = {}",
                t.h_edges.len(),
                t.mu_h
            ),
            format!(
                "  U = {:?}, k = |I ∩ U| = {}, m = {}",
                t.h_cover.vertices, t.k, t.cross_edges
            ),
            format!(
                "  δ(α−k) = {} ≤ m = {} ≤ Δ(μ(H)−k) = {} ≤ Δ(μ(G)−k) = {}",
                c[0], c[1], c[2], c[3]
            ),
            format!(
                "  δα = {} ≤ δα+(Δ−δ)k = {} ≤ Δμ(H) = {} ≤ Δμ(G) = {}",
                b[0], b[1], b[2], b[3]
            ),
        ]
        .join("\n")
    })?;
    Ok((text, EXIT_OK))
}

fn oracle(g: &Graph, json: bool, cfg: &OracleConfig) -> Outcome {
    let (alpha, set) = alpha_exact_with(g, cfg).map_err(error)?;
    let matching = blossom_maximum_matching(g);
    if !verify_independent(g, &set) || set.len() != alpha || !verify_matching(g, &matching) {
        return Err(violation(anyhow!("oracle output fails its own check")));
    }
    let input = serialize_graph6(g);
    let text = if json {
        json!({
            "schema_version": SCHEMA_VERSION,
            "input": input,
            "alpha": alpha,
            "mu": matching.len(),
            "independent_set": set,
            "matching": matching,
        })
        .to_string()
    } else {
        format!(
            "{input}\tα={alpha} μ={}\tI={:?}\tM={:?}",
            matching.len(),
            set.vertices,
            matching.edges()
        )
    };
    Ok((text, EXIT_OK))
}
