//! Simple undirected graphs in compressed sparse row form, with graph6 and
//! DIMACS encoders.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("malformed graph6 input: {0}")]
    Graph6(&'static str),
}

/// Undirected simple graph; neighbor lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Builds from symmetric adjacency lists (sorted and deduplicated here).
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<u32>>) -> Self {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        Graph { offsets, neighbors }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            neighbors: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n as u32).filter(|&v| v as usize != u).collect())
            .collect();
        Self::from_adjacency(adj)
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, &edges).expect("valid petersen")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v as usize > u)
                .map(move |&v| (u, v as usize))
        })
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n == 0 {
            return Some(0);
        }
        let k = self.degree(0);
        (1..n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v as usize);
                }
            }
        }
        count == n
    }

    /// True iff `perm` (vertex images) maps edges onto edges.
    pub fn is_automorphism(&self, perm: &[u32]) -> bool {
        if perm.len() != self.vertex_count() {
            return false;
        }
        (0..self.vertex_count()).all(|u| {
            let pu = perm[u] as usize;
            self.degree(u) == self.degree(pu)
                && self
                    .neighbors(u)
                    .iter()
                    .all(|&v| self.has_edge(pu, perm[v as usize] as usize))
        })
    }

    /// graph6 encoding (no trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.vertex_count();
        let mut out: Vec<u8> = Vec::new();
        if n <= 62 {
            out.push(63 + n as u8);
        } else if n <= 258_047 {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(63 + ((n >> shift) & 63) as u8);
            }
        } else {
            out.push(126);
            out.push(126);
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push(63 + ((n >> shift) & 63) as u8);
            }
        }
        let mut acc = 0u8;
        let mut bits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                bits += 1;
                if bits == 6 {
                    out.push(63 + acc);
                    acc = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            out.push(63 + (acc << (6 - bits)));
        }
        String::from_utf8(out).expect("graph6 is printable ASCII")
    }

    pub fn from_graph6(text: &str) -> Result<Self, GraphError> {
        let bytes = text.trim_end().as_bytes();
        let value = |b: u8| -> Result<usize, GraphError> {
            if (63..=126).contains(&b) {
                Ok((b - 63) as usize)
            } else {
                Err(GraphError::Graph6("byte outside 63..=126"))
            }
        };
        let (n, mut pos) = match bytes {
            [] => return Err(GraphError::Graph6("empty input")),
            [126, 126, rest @ ..] => {
                if rest.len() < 6 {
                    return Err(GraphError::Graph6("truncated header"));
                }
                let mut n = 0;
                for &b in &rest[..6] {
                    n = (n << 6) | value(b)?;
                }
                (n, 8)
            }
            [126, rest @ ..] => {
                if rest.len() < 3 {
                    return Err(GraphError::Graph6("truncated header"));
                }
                let mut n = 0;
                for &b in &rest[..3] {
                    n = (n << 6) | value(b)?;
                }
                (n, 4)
            }
            [b, ..] => (value(*b)?, 1),
        };
        let mut edges = Vec::new();
        let mut bit = 0;
        let mut current = 0usize;
        for j in 1..n {
            for i in 0..j {
                if bit == 0 {
                    current = value(*bytes.get(pos).ok_or(GraphError::Graph6("truncated body"))?)?;
                    pos += 1;
                    bit = 6;
                }
                bit -= 1;
                if (current >> bit) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(n, &edges)
    }

    /// DIMACS edge format, 1-indexed.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p edge {} {}", self.vertex_count(), self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn graph6_known_values() {
        // K_2 is "A_", the path P_3 with edges 01,12 is "Bg" in the standard tables.
        assert_eq!(Graph::complete(2).to_graph6(), "A_");
        assert_eq!(Graph::path(3).to_graph6(), "Bg");
        assert_eq!(Graph::empty(0).to_graph6(), "?");
        // n = 7: one header byte and ceil(21 / 6) = 4 body bytes.
        let g = Graph::cycle(7);
        let s = g.to_graph6();
        assert_eq!(s.as_bytes()[0], 70);
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn graph6_long_header() {
        let g = Graph::cycle(100);
        let s = g.to_graph6();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn dimacs_header() {
        let d = Graph::petersen().to_dimacs();
        assert!(d.starts_with("p edge 10 15\ne 1 2\n"));
        assert_eq!(d.lines().count(), 16);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..80, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut s = seed;
            for j in 1..n {
                for i in 0..j {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 62 == 0 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
        }
    }
}
