//! Graph selection shared by the ideal-producing subcommands: family flags,
//! edge-list files, and the short graph names accepted by `verify --graph`.

use std::path::{Path, PathBuf};

use clap::Args;
use coverlab_core::graph::SimpleGraph;

use crate::{usage_error, CliError};

/// Exactly one of the selectors must be given.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSelect {
    /// Crown graph on 2n vertices (n >= 3 for the family computations)
    #[arg(long, value_name = "N")]
    pub crown: Option<usize>,
    /// Complete multipartite graph with the given part sizes
    #[arg(long, value_name = "P1,P2,..", value_delimiter = ',')]
    pub multipartite: Option<Vec<u32>>,
    /// Complete graph on n vertices
    #[arg(long, value_name = "N")]
    pub complete: Option<usize>,
    /// Graph from an edge-list file (one edge per line, '#' comments)
    #[arg(long, value_name = "FILE")]
    pub edge_file: Option<PathBuf>,
}

impl GraphSelect {
    /// Build the graph. Family computations pin the crown range to n >= 3
    /// and complete graphs to n >= 2, reported as usage errors.
    pub fn resolve(&self) -> Result<SimpleGraph, CliError> {
        if let Some(n) = self.crown {
            if n < 3 {
                return Err(usage_error(format!(
                    "--crown {n}: the crown family computations require n >= 3"
                )));
            }
            return SimpleGraph::crown(n).map_err(CliError::from);
        }
        if let Some(parts) = &self.multipartite {
            if parts.len() < 2 {
                return Err(usage_error(
                    "--multipartite: at least two parts are required (k >= 2)".to_string(),
                ));
            }
            if parts.contains(&0) {
                return Err(usage_error(
                    "--multipartite: every part size must be >= 1".to_string(),
                ));
            }
            return SimpleGraph::complete_multipartite(parts).map_err(CliError::from);
        }
        if let Some(n) = self.complete {
            if n < 2 {
                return Err(usage_error(format!(
                    "--complete {n}: a complete graph needs n >= 2 vertices"
                )));
            }
            return SimpleGraph::complete(n).map_err(CliError::from);
        }
        let path = self.edge_file.as_ref().expect("clap enforces one selector");
        load_edge_file(path)
    }
}

pub fn load_edge_file(path: &Path) -> Result<SimpleGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError {
        code: 1,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    SimpleGraph::from_edge_list(&text).map_err(CliError::from)
}

/// Short graph names for `verify --graph`: `triangle`, `crown<N>`,
/// `complete<N>`, or `k<p1>,<p2>,..` (e.g. `k2,2` or `k2,1,1`).
pub fn named_graph(name: &str) -> Result<SimpleGraph, CliError> {
    if name == "triangle" {
        return SimpleGraph::new(
            vec!["x", "y", "z"],
            vec![(0, 1), (0, 2), (1, 2)],
        )
        .map_err(CliError::from);
    }
    if let Some(rest) = name.strip_prefix("crown") {
        let n: usize = rest
            .parse()
            .map_err(|_| usage_error(format!("bad crown size in graph name '{name}'")))?;
        if n < 3 {
            return Err(usage_error(format!("graph '{name}': crown requires n >= 3")));
        }
        return SimpleGraph::crown(n).map_err(CliError::from);
    }
    if let Some(rest) = name.strip_prefix("complete") {
        let n: usize = rest
            .parse()
            .map_err(|_| usage_error(format!("bad size in graph name '{name}'")))?;
        return SimpleGraph::complete(n).map_err(CliError::from);
    }
    if let Some(rest) = name.strip_prefix('k') {
        let parts: Result<Vec<u32>, _> = rest.split(',').map(str::parse).collect();
        if let Ok(parts) = parts {
            if parts.len() >= 2 && parts.iter().all(|&p| p >= 1) {
                return SimpleGraph::complete_multipartite(&parts).map_err(CliError::from);
            }
        }
    }
    Err(usage_error(format!(
        "unknown graph name '{name}'; use triangle, crown<N>, complete<N>, or k<p1>,<p2>,.."
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_parse() {
        assert_eq!(named_graph("triangle").unwrap().edge_count(), 3);
        assert_eq!(named_graph("crown3").unwrap().edge_count(), 6);
        assert_eq!(named_graph("k2,2").unwrap().edge_count(), 4);
        assert_eq!(named_graph("k2,1,1").unwrap().edge_count(), 5);
        assert_eq!(named_graph("complete4").unwrap().edge_count(), 6);
        assert!(named_graph("nonsense").is_err());
        assert_eq!(named_graph("crown2").unwrap_err().code, 2);
    }
}
