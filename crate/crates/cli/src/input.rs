use std::fs;
use std::io::{self, Read};
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use clap::ValueEnum;
use egk_core::formats::{parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6};
use egk_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

impl Format {
    /// `.el` and `.txt` files are edge lists; everything else is graph6.
    fn infer(path: Option<&Path>) -> Format {
        match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some("el" | "txt") => Format::Edgelist,
            _ => Format::Graph6,
        }
    }
}

/// Reads one edge list or any number of graph6 lines from `path` (stdin for
/// `None` or `-`).
pub fn read_graphs(path: Option<&Path>, format: Option<Format>) -> Result<Vec<Graph>> {
    let path = path.filter(|p| p.as_os_str() != "-");
    let text = match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("cannot read stdin")?;
            s
        }
    };
    let source = path.map_or_else(|| "<stdin>".to_string(), |p| p.display().to_string());
    match format.unwrap_or_else(|| Format::infer(path)) {
        Format::Edgelist => Ok(vec![parse_edge_list(&text).with_context(|| source.clone())?]),
        Format::Graph6 => {
            let graphs = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| {
                    parse_graph6(l.trim_end()).with_context(|| format!("{source}, line {}", i + 1))
                })
                .collect::<Result<Vec<_>>>()?;
            if graphs.is_empty() {
                return Err(anyhow!("{source}: no graphs"));
            }
            Ok(graphs)
        }
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => serialize_graph6(g) + "\n",
        Format::Edgelist => serialize_edge_list(g),
    }
}
