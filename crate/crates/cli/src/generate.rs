use std::io::{self, Write};

use anyhow::{bail, Result};
use clap::{Args, Subcommand, ValueEnum};
use egk_core::bubbles::{generate_bubble, BubbleSpec};
use egk_core::certificate::CertificateDocument;
use egk_core::generators::{
    alpha_ten_spec, compose_special, enumerate_cubic_connected, generate_biregular,
    random_compose_spec, random_cubic, random_graph, smallest_special_spec,
};
use egk_core::iso::IsoClasses;
use egk_core::recognition::build_witnesses;
use egk_core::Graph;
use serde_json::json;

use crate::commands::{EXIT_OK, EXIT_USAGE};
use crate::input::{write_graph, Format};

#[derive(Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    what: Generator,
    /// Seed for every random choice; equal seeds give equal output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Subcommand)]
enum Generator {
    /// Bipartite graph with one side of degree δ and the other of degree Δ.
    Biregular {
        delta: usize,
        max_degree: usize,
        /// Multiplier on the smallest side sizes Δ/g and δ/g.
        #[arg(long, default_value_t = 1)]
        scale: usize,
    },
    /// Uniform-ish random cubic graph on n vertices.
    Cubic { n: usize },
    /// Every connected cubic graph on n vertices in breadth-first labelings.
    Enumerate {
        n: usize,
        /// Print one graph per isomorphism class.
        #[arg(long)]
        classes: bool,
    },
    /// A bubble: k4-subdivision, fig2-7, fig2-9, fig2-nested, random:N, random2c:N or nested:N.
    Bubble {
        spec: String,
        /// Print the certificate document instead of the graph.
        #[arg(long)]
        json: bool,
    },
    /// A special cubic graph: bipartite core plus bubbles.
    Special {
        #[arg(long, value_enum, default_value_t = Preset::Random)]
        preset: Preset,
        /// Print the witness certificate document instead of the graph.
        #[arg(long)]
        json: bool,
    },
    /// Erdős–Rényi G(n, p).
    Gnp { n: usize, p: f64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Smallest,
    AlphaTen,
    Random,
}

pub fn run(args: &GenerateArgs) -> u8 {
    match generate(args) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn generate(args: &GenerateArgs) -> Result<()> {
    let out = io::stdout();
    let mut out = out.lock();
    let mut graph =
        |g: &Graph| -> Result<()> { Ok(out.write_all(write_graph(g, args.format).as_bytes())?) };
    match &args.what {
        Generator::Biregular {
            delta,
            max_degree,
            scale,
        } => {
            graph(&generate_biregular(*delta, *max_degree, *scale, args.seed)?)?;
        }
        Generator::Cubic { n } => graph(&random_cubic(*n, args.seed)?)?,
        Generator::Gnp { n, p } => {
            if !(0.0..=1.0).contains(p) {
                bail!("p must lie in [0, 1], got {p}");
            }
            graph(&random_graph(*n, *p, args.seed))?;
        }
        Generator::Enumerate { n, classes } => {
            if args.format == Format::Edgelist {
                bail!("enumeration writes many graphs and needs --format graph6");
            }
            let mut seen = IsoClasses::new();
            for g in enumerate_cubic_connected(*n)? {
                if !*classes || seen.insert(&g) {
                    graph(&g)?;
                }
            }
        }
        Generator::Bubble { spec, json } => {
            let spec: BubbleSpec = spec.parse()?;
            let (g, cert) = generate_bubble(spec, args.seed)?;
            if *json {
                let doc = CertificateDocument::bubble(&g, cert);
                doc.verify()?;
                println!("{}", doc.to_json());
            } else {
                graph(&g)?;
            }
        }
        Generator::Special { preset, json } => {
            let spec = match preset {
                Preset::Smallest => smallest_special_spec(),
                Preset::AlphaTen => alpha_ten_spec(),
                Preset::Random => random_compose_spec(args.seed)?,
            };
            let (g, d) = compose_special(&spec, args.seed)?;
            if *json {
                let doc = CertificateDocument::witness(&g, build_witnesses(&g, &d)?);
                doc.verify()?;
                let mut value = serde_json::to_value(&doc)?;
                value["decomposition"] = json!(d);
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                graph(&g)?;
            }
        }
    }
    Ok(())
}
