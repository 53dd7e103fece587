//! Cayley graph construction for export.

use grr_core::cayley::{build_cayley, gamma_k_connection_set};
use grr_core::{ConnectionSet, Graph, GroupTable, Permutation};

use crate::groups::{parse_element, GroupSpec};
use crate::report::CliError;

/// `Cay(C_n, {±a : a ∈ jumps})` from a spec such as `7:1,2`.
pub fn circulant(spec: &str) -> Result<Graph, CliError> {
    let bad = || CliError::Usage(format!("bad circulant {spec:?}; expected e.g. 7:1,2"));
    let (n, jumps) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n < 2 {
        return Err(bad());
    }
    let mut edges = Vec::new();
    for j in jumps.split(',') {
        let j: usize = j.trim().parse().map_err(|_| bad())?;
        if j.is_multiple_of(n) {
            return Err(CliError::Usage(format!("jump {j} is 0 mod {n}")));
        }
        for v in 0..n {
            let w = (v + j) % n;
            edges.push((v.min(w), v.max(w)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges).map_err(|e| CliError::Usage(e.to_string()))
}

/// `Cay(G, S)` with `S` given as `;`-separated elements, closed under inverses.
pub fn cayley_from_elements(
    table: &GroupTable,
    group: &GroupSpec,
    list: &str,
) -> Result<Graph, CliError> {
    let mut members = Vec::new();
    for text in list.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let g: Permutation = parse_element(text, group.degree())?;
        let i = table
            .index_of(&g)
            .ok_or_else(|| CliError::Usage(format!("{g} is not an element of {}", group.label)))?;
        members.push(i);
        members.push(table.inverse(i));
    }
    members.sort_unstable();
    members.dedup();
    let s = ConnectionSet::new(table, &members).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(build_cayley(table, &s).graph().clone())
}

pub fn gamma_k(
    table: &GroupTable,
    group: &GroupSpec,
    x: &str,
    y: &str,
    k: usize,
) -> Result<Graph, CliError> {
    let index = |text: &str| -> Result<usize, CliError> {
        let g = parse_element(text, group.degree())?;
        table
            .index_of(&g)
            .ok_or_else(|| CliError::Usage(format!("{g} is not an element of {}", group.label)))
    };
    let s = gamma_k_connection_set(table, index(x)?, index(y)?, k)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(build_cayley(table, &s).graph().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_c7() {
        let g = circulant("7:1,2").unwrap();
        assert_eq!(g.edge_count(), 14);
        assert_eq!(g.regular_degree(), Some(4));
        assert!(circulant("7:7").is_err());
        assert!(circulant("7").is_err());
    }
}
