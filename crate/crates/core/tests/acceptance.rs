//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use egk_core::bubbles::{
    bubble_matching_avoiding, extract_sub_bubble, generate_bubble, verify_bubble,
    verify_embedded_bubble, BubbleSpec, CatalogBubble,
};
use egk_core::census::{cubic_sweep, map_ordered, sweep_connected, sweep_graphs, SweepSummary};
use egk_core::exact::{
    alpha_exact, alpha_exact_with, alpha_subsets, mu_exact, verify_matching, OracleConfig,
};
use egk_core::formats::{parse_graph6, serialize_graph6};
use egk_core::generators::{
    alpha_ten_spec, compose_special, generate_biregular, random_compose_spec, random_graph,
};
use egk_core::graph::named;
use egk_core::matching::blossom_maximum_matching;
use egk_core::recognition::{
    build_witnesses, is_extremal, recognize_biregular_extremal, recognize_special,
    BiregularOutcome, Evidence, Verdict,
};
use egk_core::structure::{is_connected, is_two_connected};
use egk_core::Graph;

const FIXTURES: &str = include_str!("fixtures/corpus.csv");
const RANDOM_GRAPHS: u64 = 10_000;
const COMPOSED: u64 = 1_000;

struct Fixture {
    name: String,
    line: String,
    graph: Graph,
    alpha: usize,
    mu: usize,
}

fn fixtures() -> Vec<Fixture> {
    FIXTURES
        .lines()
        .skip(1)
        .map(|row| {
            let f: Vec<&str> = row.split(',').collect();
            Fixture {
                name: f[0].to_string(),
                line: f[1].to_string(),
                graph: parse_graph6(f[1]).unwrap_or_else(|e| panic!("fixture {}: {e}", f[0])),
                alpha: f[4].parse().unwrap(),
                mu: f[5].parse().unwrap(),
            }
        })
        .collect()
}

fn random_corpus() -> Vec<Graph> {
    (0..RANDOM_GRAPHS)
        .map(|seed| {
            let n = 1 + (seed % 16) as usize;
            let p = [0.1, 0.25, 0.4, 0.6, 0.8][(seed / 16 % 5) as usize];
            random_graph(n, p, seed)
        })
        .collect()
}

struct Composed {
    graph: Graph,
    truth_ell: usize,
    truth_bubbles: Vec<Vec<usize>>,
    found: Option<(usize, Vec<Vec<usize>>)>,
    witnesses_ok: bool,
    alpha_ok: bool,
}

fn composed_corpus() -> Vec<Composed> {
    let seeds: Vec<u64> = (0..COMPOSED).collect();
    map_ordered(&seeds, |&seed| {
        let spec = random_compose_spec(seed).expect("random spec");
        let (graph, truth) = compose_special(&spec, seed).expect("valid spec composes");
        let mut truth_bubbles: Vec<Vec<usize>> =
            truth.bubbles.iter().map(|b| b.vertices.clone()).collect();
        truth_bubbles.sort();
        let d = recognize_special(&graph).expect("composed graphs are connected and cubic");
        let mu = blossom_maximum_matching(&graph).len();
        let witnesses_ok = d.as_ref().is_some_and(|d| {
            build_witnesses(&graph, d)
                .is_ok_and(|w| w.verify(&graph) && w.size() == mu && w.size() == d.witness_size())
        });
        let alpha_ok = graph.n() > 36 || alpha_exact(&graph).is_ok_and(|(a, _)| a == mu);
        let found = d.map(|d| {
            let mut bubbles: Vec<Vec<usize>> =
                d.bubbles.iter().map(|b| b.vertices.clone()).collect();
            bubbles.sort();
            (d.ell, bubbles)
        });
        Composed {
            graph,
            truth_ell: truth.ell,
            truth_bubbles,
            found,
            witnesses_ok,
            alpha_ok,
        }
    })
}

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: u32, title: &str, ok: bool, detail: String, started: Instant) {
        let status = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {id} [{status}] {title}: {detail} ({:.1?})",
            started.elapsed()
        );
        self.failures += usize::from(!ok);
    }
}

fn describe(s: &SweepSummary) -> String {
    format!(
        "{} graphs, {} tight, {} violations, {} with δ<Δ, {} biregular, {} equality mismatches{}",
        s.graphs,
        s.tight,
        s.violations,
        s.unequal_degrees,
        s.biregular,
        s.equality_mismatches,
        if s.examples.is_empty() {
            String::new()
        } else {
            format!(", e.g. {:?}", s.examples)
        }
    )
}

fn main() -> ExitCode {
    let mut report = Report { failures: 0 };
    let fixtures = fixtures();

    // 1 and 2 share the exhaustive and random corpora
    let t = Instant::now();
    let exhaustive = (1..=7)
        .map(sweep_connected)
        .fold(SweepSummary::default(), SweepSummary::merge);
    let random = sweep_graphs(&random_corpus()).expect("n <= 16 is within oracle scale");
    let fixture_graphs: Vec<Graph> = fixtures
        .iter()
        .filter(|f| f.graph.n() <= 40)
        .map(|f| f.graph.clone())
        .collect();
    let fixture_sweep = sweep_graphs(&fixture_graphs).expect("fixtures within oracle scale");
    let all = exhaustive
        .clone()
        .merge(random.clone())
        .merge(fixture_sweep);
    report.line(
        1,
        "δα ≤ Δμ on all connected graphs n ≤ 7, 10⁴ random graphs n ≤ 16 and the fixtures",
        all.violations == 0 && exhaustive.graphs == 1 + 1 + 4 + 38 + 728 + 26_704 + 1_866_256,
        format!(
            "exhaustive: {}; random: {}",
            describe(&exhaustive),
            describe(&random)
        ),
        t,
    );

    let t = Instant::now();
    let mut biregular_failures = Vec::new();
    let mut generated = 0;
    for (delta, max_degree) in [
        (1, 2),
        (1, 3),
        (2, 3),
        (2, 4),
        (3, 4),
        (2, 5),
        (3, 5),
        (4, 6),
    ] {
        for scale in 1..=4 {
            for seed in 0..5 {
                let Ok(g) = generate_biregular(delta, max_degree, scale, seed) else {
                    continue;
                };
                generated += 1;
                let recognized = matches!(
                    recognize_biregular_extremal(&g),
                    Ok(BiregularOutcome::Extremal(_))
                );
                let tight = g.n() > 40
                    || delta * alpha_exact(&g).unwrap().0
                        == max_degree * blossom_maximum_matching(&g).len();
                if !recognized || !tight {
                    biregular_failures.push(serialize_graph6(&g));
                }
            }
        }
    }
    report.line(
        2,
        "for δ<Δ, δα = Δμ ⟺ bipartite (δ,Δ)-biregular",
        all.equality_mismatches == 0 && all.biregular > 0 && biregular_failures.is_empty(),
        format!(
            "{} mismatches over {} graphs with δ<Δ ({} tight); {generated} generated biregular graphs, {} failures",
            all.equality_mismatches,
            all.unequal_degrees,
            all.biregular,
            biregular_failures.len()
        ),
        t,
    );

    // 3: special ⟺ α = μ on every connected cubic graph n <= 12, plus cubic fixtures up to n = 20
    let t = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    let mut recognized_total = 0;
    let mut witness_failures = 0;
    for (n, classes) in [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)] {
        let s = cubic_sweep(n, true).expect("n in range");
        ok &= s.classes == Some(classes) && s.mismatches == 0;
        recognized_total += s.special;
        witness_failures += s.witness_failures;
        parts.push(format!(
            "n={n}: {} labeled, {} classes, {} special, {} mismatches",
            s.graphs,
            s.classes.unwrap(),
            s.special,
            s.mismatches
        ));
    }
    let mut fixture_cubic = 0;
    for f in fixtures
        .iter()
        .filter(|f| f.graph.n() >= 4 && f.graph.is_regular(3) && is_connected(&f.graph))
    {
        fixture_cubic += 1;
        let special = recognize_special(&f.graph).unwrap();
        if special.is_some() != (f.alpha == f.mu) {
            ok = false;
            parts.push(format!("mismatch on fixture {}", f.name));
        }
        if let Some(d) = special {
            recognized_total += 1;
            witness_failures +=
                u64::from(!build_witnesses(&f.graph, &d).is_ok_and(|w| w.size() == f.mu));
        }
    }
    parts.push(format!("{fixture_cubic} cubic fixtures"));
    report.line(
        3,
        "connected cubic: special ⟺ α = μ",
        ok,
        parts.join("; "),
        t,
    );

    let t = Instant::now();
    let composed = composed_corpus();
    let composed_witness_failures = composed
        .iter()
        .filter(|c| !c.witnesses_ok || !c.alpha_ok)
        .count();
    let largest = composed.iter().map(|c| c.graph.n()).max().unwrap_or(0);
    report.line(
        4,
        "witness pairs of equal size μ on every special graph",
        witness_failures == 0 && composed_witness_failures == 0,
        format!(
            "{recognized_total} enumerated/fixture special graphs with {witness_failures} failures; \
             {COMPOSED} composed graphs (up to n = {largest}) with {composed_witness_failures} failures"
        ),
        t,
    );

    // 5: bubble invariants
    let t = Instant::now();
    let mut specs: Vec<(BubbleSpec, u64)> = CatalogBubble::ALL
        .iter()
        .map(|&c| (BubbleSpec::Catalog(c), 0))
        .collect();
    for n in (5..=21).step_by(2) {
        for seed in 0..8 {
            specs.push((
                BubbleSpec::Random {
                    n,
                    two_connected: false,
                },
                seed,
            ));
            specs.push((
                BubbleSpec::Random {
                    n,
                    two_connected: true,
                },
                seed,
            ));
            if n >= 11 {
                specs.push((BubbleSpec::Nested { n }, seed));
            }
        }
    }
    let outcomes = map_ordered(&specs, |&(spec, seed)| -> Result<bool, String> {
        let (b, cert) = generate_bubble(spec, seed).map_err(|e| format!("{spec:?}/{seed}: {e}"))?;
        if !verify_bubble(&b, &cert).is_ok() {
            return Err(format!("{spec:?}/{seed}: certificate fails"));
        }
        let half = (b.n() - 1) / 2;
        let without_z = b.without_vertices(&[cert.contact]).graph;
        let values = [
            alpha_exact(&b).unwrap().0,
            alpha_exact(&without_z).unwrap().0,
            mu_exact(&b).unwrap(),
            mu_exact(&without_z).unwrap(),
            blossom_maximum_matching(&b).len(),
        ];
        if values.iter().any(|&v| v != half) {
            return Err(format!(
                "{spec:?}/{seed}: values {values:?}, expected {half}"
            ));
        }
        for u in [cert.contact, cert.r_edge.0, cert.r_edge.1] {
            let m = bubble_matching_avoiding(&b, &cert, u)
                .map_err(|e| format!("{spec:?}/{seed}: {e}"))?;
            let saturated = cert.i_part.iter().all(|&v| m.covers(v));
            if !verify_matching(&b, &m) || m.covers(u) || !saturated || m.len() != half {
                return Err(format!("{spec:?}/{seed}: matching avoiding {u} fails"));
            }
        }
        let two_connected = is_two_connected(&b);
        match extract_sub_bubble(&b, &cert).map_err(|e| format!("{spec:?}/{seed}: {e}"))? {
            None if two_connected => Ok(false),
            Some(sub) if !two_connected => {
                if !verify_embedded_bubble(&b, &sub.certificate).is_ok()
                    || sub.vertices.len() >= b.n()
                {
                    return Err(format!("{spec:?}/{seed}: sub-bubble fails"));
                }
                Ok(true)
            }
            _ => Err(format!(
                "{spec:?}/{seed}: sub-bubble presence does not match 2-connectivity"
            )),
        }
    });
    let errors: Vec<&String> = outcomes.iter().filter_map(|o| o.as_ref().err()).collect();
    let with_sub = outcomes.iter().filter(|o| matches!(o, Ok(true))).count();
    report.line(
        5,
        "bubbles: α(B)=α(B−z)=μ(B)=μ(B−z)=(n−1)/2, matchings avoiding x, y, z, sub-bubbles",
        errors.is_empty(),
        format!(
            "{} bubbles (n ≤ 21), {with_sub} not 2-connected with verified sub-bubbles, {} failures{}",
            specs.len(),
            errors.len(),
            errors.first().map(|e| format!(", first: {e}")).unwrap_or_default()
        ),
        t,
    );

    // 6: concrete values
    let t = Instant::now();
    let cfg = OracleConfig::default();
    let mut problems = Vec::new();
    for n in 3..=20 {
        let v = is_extremal(&named::cycle(n), &cfg).unwrap();
        if v.verdict != Verdict::Tight || !v.verify(&named::cycle(n)) {
            problems.push(format!("C{n} not tight"));
        }
    }
    let star = named::star(3);
    let v = is_extremal(&star, &cfg).unwrap();
    if v.verdict != Verdict::Tight || !matches!(v.evidence, Evidence::Biregular { .. }) {
        problems.push("K1,3 not biregular-tight".into());
    }
    let (g, _) = compose_special(&alpha_ten_spec(), 0).unwrap();
    let alpha = alpha_exact(&g).unwrap().0;
    let mu = blossom_maximum_matching(&g).len();
    let recognized = recognize_special(&g).unwrap();
    let v = is_extremal(&g, &cfg).unwrap();
    if (alpha, mu) != (10, 10) || recognized.is_none() || v.verdict != Verdict::Tight {
        problems.push(format!(
            "composed graph: α = {alpha}, μ = {mu}, recognized = {}",
            recognized.is_some()
        ));
    }
    report.line(
        6,
        "cycles C3..C20 tight, K1,3 biregular, a special cubic graph with α = μ = 10",
        problems.is_empty(),
        if problems.is_empty() {
            format!("18 cycles tight; K1,3 tight; {}-vertex special graph {} recognized with α = μ = 10", g.n(), serialize_graph6(&g))
        } else {
            problems.join("; ")
        },
        t,
    );

    let t = Instant::now();
    let bad_lines: Vec<&str> = fixtures
        .iter()
        .filter(|f| serialize_graph6(&f.graph) != f.line)
        .map(|f| f.name.as_str())
        .collect();
    let recovered = composed
        .iter()
        .filter(|c| c.found.as_ref() == Some(&(c.truth_ell, c.truth_bubbles.clone())))
        .count();
    let ells: std::collections::BTreeSet<usize> = composed.iter().map(|c| c.truth_ell).collect();
    report.line(
        7,
        "graph6 byte-exact round trips; compose → recognize recovers ℓ and bubbles",
        bad_lines.is_empty() && recovered == composed.len(),
        format!(
            "{} fixture lines, {} mismatches; {recovered}/{} compositions recovered (ℓ ∈ {ells:?})",
            fixtures.len(),
            bad_lines.len(),
            composed.len()
        ),
        t,
    );

    let t = Instant::now();
    let checks = map_ordered(&fixtures, |f| {
        let g = &f.graph;
        let mut bad = Vec::new();
        let blossom = blossom_maximum_matching(g).len();
        if blossom != f.mu {
            bad.push(format!("{}: blossom μ {blossom} ≠ {}", f.name, f.mu));
        }
        if g.n() <= 14 && mu_exact(g).unwrap() != blossom {
            bad.push(format!("{}: exhaustive μ disagrees", f.name));
        }
        if g.n() <= 64 {
            let bb = alpha_exact_with(g, &OracleConfig::with_max_vertices(64))
                .unwrap()
                .0;
            if bb != f.alpha {
                bad.push(format!("{}: branch-and-bound α {bb} ≠ {}", f.name, f.alpha));
            }
            if g.n() <= 18 && alpha_subsets(g).unwrap() != bb {
                bad.push(format!("{}: subset α disagrees", f.name));
            }
        }
        bad
    });
    let problems: Vec<String> = checks.into_iter().flatten().collect();
    report.line(
        8,
        "blossom vs exhaustive μ (n ≤ 14), branch-and-bound vs subset α (n ≤ 18), both vs independent values",
        problems.is_empty(),
        format!(
            "{} fixtures, {} disagreements{}",
            fixtures.len(),
            problems.len(),
            problems.first().map(|p| format!(", first: {p}")).unwrap_or_default()
        ),
        t,
    );

    if report.failures == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", report.failures);
        ExitCode::FAILURE
    }
}
