//! Connection sets, Cayley graphs `Cay(G, S)`, right-coset partitions and
//! quotient graphs.
//!
//! Vertices are element indices of a [`GroupTable`]; vertex 0 is the
//! identity. `g` is adjacent to `s·g` for every `s` in the connection set, so
//! right translations `v ↦ v·h` are automorphisms.

use thiserror::Error;

use crate::graph::Graph;
use crate::grouptab::GroupTable;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("connection set is not closed under inversion (element {0})")]
    NotInverseClosed(usize),
    #[error("element index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("valency k = {0} is below 5")]
    ValencyTooSmall(usize),
    #[error("|x| = {order} must exceed 2⌊(k-1)/2⌋ = {bound}")]
    GeneratorOrderTooSmall { order: usize, bound: usize },
    #[error("y has order {0}, expected an involution")]
    NotInvolution(usize),
    #[error(
        "x^-1 y x = y, so yxy = x lies in <x> and the even-k set would have fewer than k members"
    )]
    ConjugateCoincides,
    #[error("connection set has a repeated member: {0}")]
    DuplicateMember(String),
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("block ids must be distinct")]
    SameBlock,
    #[error("block {0} does not exist")]
    NoSuchBlock(usize),
}

/// An inverse-closed subset of `G \ {1}`, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    members: Vec<usize>,
}

impl ConnectionSet {
    pub fn new(table: &GroupTable, members: &[usize]) -> Result<Self, CayleyError> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &s in &sorted {
            if s >= table.order() {
                return Err(CayleyError::IndexOutOfRange(s));
            }
            if s == 0 {
                return Err(CayleyError::ContainsIdentity);
            }
        }
        for &s in &sorted {
            if sorted.binary_search(&table.inverse(s)).is_err() {
                return Err(CayleyError::NotInverseClosed(s));
            }
        }
        Ok(ConnectionSet { members: sorted })
    }

    /// All non-identity elements.
    pub fn everything(table: &GroupTable) -> Self {
        ConnectionSet {
            members: (1..table.order()).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.members.binary_search(&s).is_ok()
    }
}

/// Which elements make up `S` in `Γ_k(G, x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaKParts {
    /// `x^{±1}, …, x^{±⌊(k-1)/2⌋}`.
    pub cyclic_part: Vec<usize>,
    /// `y`, and `x^{-1} y x` for even `k`.
    pub involution_part: Vec<usize>,
}

/// The connection set of `Γ_k(G, x, y)`.
pub fn gamma_k_connection_set(
    table: &GroupTable,
    x: usize,
    y: usize,
    k: usize,
) -> Result<ConnectionSet, CayleyError> {
    let parts = gamma_k_parts(table, x, y, k)?;
    let mut all: Vec<usize> = parts.cyclic_part.clone();
    all.extend(&parts.involution_part);
    ConnectionSet::new(table, &all)
}

pub fn gamma_k_parts(
    table: &GroupTable,
    x: usize,
    y: usize,
    k: usize,
) -> Result<GammaKParts, CayleyError> {
    for i in [x, y] {
        if i >= table.order() {
            return Err(CayleyError::IndexOutOfRange(i));
        }
    }
    if k < 5 {
        return Err(CayleyError::ValencyTooSmall(k));
    }
    let half = (k - 1) / 2;
    let x_order = table.element_order(x);
    if x_order <= 2 * half {
        return Err(CayleyError::GeneratorOrderTooSmall {
            order: x_order,
            bound: 2 * half,
        });
    }
    let y_order = table.element_order(y);
    if y_order != 2 {
        return Err(CayleyError::NotInvolution(y_order));
    }
    let mut cyclic_part = Vec::with_capacity(2 * half);
    for i in 1..=half as i64 {
        cyclic_part.push(table.power(x, i));
        cyclic_part.push(table.power(x, -i));
    }
    let mut involution_part = vec![y];
    if k.is_multiple_of(2) {
        let conj = table.conjugate(y, x);
        if conj == y {
            return Err(CayleyError::ConjugateCoincides);
        }
        involution_part.push(conj);
    }
    let mut all: Vec<usize> = cyclic_part
        .iter()
        .chain(&involution_part)
        .copied()
        .collect();
    all.sort_unstable();
    if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
        return Err(CayleyError::DuplicateMember(
            table.element(w[0]).to_string(),
        ));
    }
    Ok(GammaKParts {
        cyclic_part,
        involution_part,
    })
}

/// `Cay(G, S)` together with its connection set.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    graph: Graph,
    connection: ConnectionSet,
}

impl CayleyGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.connection
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }
}

pub fn build_cayley(table: &GroupTable, s: &ConnectionSet) -> CayleyGraph {
    let n = table.order();
    let mut adj: Vec<Vec<u32>> = vec![Vec::with_capacity(s.len()); n];
    for &member in s.members() {
        let elem = table.element(member);
        for (g, list) in adj.iter_mut().enumerate() {
            let h = table
                .index_of(&elem.mul(table.element(g)))
                .expect("closed under multiplication");
            list.push(h as u32);
        }
    }
    CayleyGraph {
        graph: Graph::from_adjacency(adj),
        connection: s.clone(),
    }
}

/// The right translation `v ↦ v·h` as a permutation of vertices.
pub fn right_translation(table: &GroupTable, h: usize) -> Permutation {
    let images = (0..table.order()).map(|v| table.mul(v, h) as u32).collect();
    Permutation::from_images(images).expect("translation is a bijection")
}

/// A partition of the vertex set into blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    block_of: Vec<u32>,
    blocks: Vec<Vec<u32>>,
}

impl CosetPartition {
    /// Any partition given as blocks; blocks are re-sorted and ordered by least member.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<u32>>) -> Option<Self> {
        let mut blocks: Vec<Vec<u32>> = blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        let mut block_of = vec![u32::MAX; n];
        for (id, b) in blocks.iter().enumerate() {
            for &v in b {
                if v as usize >= n || block_of[v as usize] != u32::MAX {
                    return None;
                }
                block_of[v as usize] = id as u32;
            }
        }
        if block_of.contains(&u32::MAX) {
            return None;
        }
        Some(CosetPartition { block_of, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_blocks(n, (0..n as u32).map(|v| vec![v]).collect()).expect("valid")
    }

    pub fn single_block(n: usize) -> Self {
        Self::from_blocks(n, vec![(0..n as u32).collect()]).expect("valid")
    }

    #[inline]
    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v] as usize
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.block_of.len()
    }
}

/// Right cosets `Hg` of the subgroup `H` given by its element indices.
pub fn coset_partition(
    table: &GroupTable,
    subgroup: &[usize],
) -> Result<CosetPartition, CayleyError> {
    let n = table.order();
    let mut members = vec![false; n];
    for &h in subgroup {
        if h >= n {
            return Err(CayleyError::IndexOutOfRange(h));
        }
        members[h] = true;
    }
    if !members[0] {
        return Err(CayleyError::NotSubgroup);
    }
    let list: Vec<usize> = (0..n).filter(|&i| members[i]).collect();
    for &a in &list {
        if !members[table.inverse(a)] {
            return Err(CayleyError::NotSubgroup);
        }
        for &b in &list {
            if !members[table.mul(a, b)] {
                return Err(CayleyError::NotSubgroup);
            }
        }
    }
    let mut assigned = vec![false; n];
    let mut blocks = Vec::new();
    for g in 0..n {
        if assigned[g] {
            continue;
        }
        let block: Vec<u32> = list.iter().map(|&h| table.mul(h, g) as u32).collect();
        for &v in &block {
            assigned[v as usize] = true;
        }
        blocks.push(block);
    }
    Ok(CosetPartition::from_blocks(n, blocks).expect("cosets partition G"))
}

/// The quotient graph: blocks adjacent iff some edge joins them; loops dropped.
pub fn quotient_graph(graph: &Graph, partition: &CosetPartition) -> Graph {
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); partition.block_count()];
    for (u, v) in graph.edges() {
        let (a, b) = (partition.block_of(u), partition.block_of(v));
        if a != b {
            adj[a].push(b as u32);
            adj[b].push(a as u32);
        }
    }
    Graph::from_adjacency(adj)
}

/// Number of edges with one end in each of two distinct blocks.
pub fn edges_between_blocks(
    graph: &Graph,
    partition: &CosetPartition,
    a: usize,
    b: usize,
) -> Result<usize, CayleyError> {
    if a == b {
        return Err(CayleyError::SameBlock);
    }
    for id in [a, b] {
        if id >= partition.block_count() {
            return Err(CayleyError::NoSuchBlock(id));
        }
    }
    Ok(partition.blocks()[a]
        .iter()
        .map(|&u| {
            graph
                .neighbors(u as usize)
                .iter()
                .filter(|&&v| partition.block_of(v as usize) == b)
                .count()
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn a7() -> (GroupTable, usize, usize) {
        let x = p("(1,2,3,4,5,6,7)", 7);
        let y = p("(1,2)(3,4)", 7);
        let t = GroupTable::enumerate(&[x.clone(), y.clone()], 10_000).unwrap();
        let (xi, yi) = (t.index_of(&x).unwrap(), t.index_of(&y).unwrap());
        (t, xi, yi)
    }

    fn cyclic(n: usize) -> (GroupTable, usize) {
        let c: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let x = p(&format!("({})", c.join(",")), n);
        let t = GroupTable::enumerate(std::slice::from_ref(&x), 1000).unwrap();
        let xi = t.index_of(&x).unwrap();
        (t, xi)
    }

    #[test]
    fn gamma_sets() {
        let (t, x, y) = a7();
        let s5 = gamma_k_connection_set(&t, x, y, 5).unwrap();
        let mut expect = [x, t.inverse(x), t.power(x, 2), t.power(x, -2), y];
        expect.sort_unstable();
        assert_eq!(s5.members(), &expect[..]);
        let s6 = gamma_k_connection_set(&t, x, y, 6).unwrap();
        assert_eq!(s6.len(), 6);
        assert!(s6.contains(t.conjugate(y, x)));

        let (c7, cx) = cyclic(7);
        assert!(matches!(
            gamma_k_connection_set(&c7, cx, 0, 5),
            Err(CayleyError::NotInvolution(1))
        ));
        assert!(matches!(
            gamma_k_connection_set(&t, x, y, 4),
            Err(CayleyError::ValencyTooSmall(4))
        ));
    }

    #[test]
    fn even_k_requires_noncommuting_conjugate() {
        // x = (1..5), y = (6,7) commutes with x.
        let x = p("(1,2,3,4,5)", 7);
        let y = p("(6,7)", 7);
        let t = GroupTable::enumerate(&[x.clone(), y.clone()], 100).unwrap();
        let r = gamma_k_connection_set(&t, t.index_of(&x).unwrap(), t.index_of(&y).unwrap(), 6);
        assert_eq!(r, Err(CayleyError::ConjugateCoincides));
    }

    #[test]
    fn circulant_and_complete() {
        let (t, x) = cyclic(7);
        let s = ConnectionSet::new(&t, &[x, t.inverse(x), t.power(x, 2), t.power(x, -2)]).unwrap();
        let g = build_cayley(&t, &s);
        assert_eq!(g.graph().regular_degree(), Some(4));
        assert_eq!(g.graph().edge_count(), 14);
        for v in 0..7 {
            for d in [1i64, 2] {
                let w = t.mul(t.power(x, d), v);
                assert!(g.graph().has_edge(v, w));
            }
        }
        let k = build_cayley(&t, &ConnectionSet::everything(&t));
        assert_eq!(k.graph(), &Graph::complete(7));
    }

    #[test]
    fn connectivity() {
        let (t, x) = cyclic(7);
        let s = ConnectionSet::new(&t, &[x, t.inverse(x)]).unwrap();
        assert!(build_cayley(&t, &s).is_connected());
        let (t6, x6) = cyclic(6);
        let s = ConnectionSet::new(&t6, &[t6.power(x6, 2), t6.power(x6, -2)]).unwrap();
        assert!(!build_cayley(&t6, &s).is_connected());
        let (a, x, y) = a7();
        let s = gamma_k_connection_set(&a, x, y, 5).unwrap();
        assert!(build_cayley(&a, &s).is_connected());
    }

    #[test]
    fn connection_set_validation() {
        let (t, x) = cyclic(7);
        assert_eq!(
            ConnectionSet::new(&t, &[0]),
            Err(CayleyError::ContainsIdentity)
        );
        assert_eq!(
            ConnectionSet::new(&t, &[x]),
            Err(CayleyError::NotInverseClosed(x))
        );
    }

    #[test]
    fn right_translations_are_automorphisms() {
        let (t, x, y) = a7();
        let g = build_cayley(&t, &gamma_k_connection_set(&t, x, y, 6).unwrap());
        for h in (0..t.order()).step_by(127).take(20) {
            let rho = right_translation(&t, h);
            assert!(g.graph().is_automorphism(rho.images()));
        }
    }

    #[test]
    fn cosets() {
        let a5 = GroupTable::enumerate(&[p("(1,2,3,4,5)", 5), p("(1,2)(3,4)", 5)], 100).unwrap();
        let x = a5.index_of(&p("(1,2,3,4,5)", 5)).unwrap();
        let h = a5.closure_of(&[x]);
        let part = coset_partition(&a5, &h).unwrap();
        assert_eq!(part.block_count(), 12);
        assert!(part.blocks().iter().all(|b| b.len() == 5));
        assert_eq!(coset_partition(&a5, &[0]).unwrap().block_count(), 60);
        let all: Vec<usize> = (0..60).collect();
        assert_eq!(coset_partition(&a5, &all).unwrap().block_count(), 1);
        assert_eq!(coset_partition(&a5, &[0, x]), Err(CayleyError::NotSubgroup));
    }

    #[test]
    fn quotient_by_cyclic_cosets() {
        let (t, x, y) = a7();
        let h = t.closure_of(&[x]);
        for (k, per_pair) in [(5, 1), (6, 2)] {
            let g = build_cayley(&t, &gamma_k_connection_set(&t, x, y, k).unwrap());
            let part = coset_partition(&t, &h).unwrap();
            let q = quotient_graph(g.graph(), &part);
            assert_eq!(q.vertex_count(), 360);
            assert_eq!(q.regular_degree(), Some(7));
            assert!(q.is_connected());
            for (a, b) in q.edges().take(50) {
                assert_eq!(
                    edges_between_blocks(g.graph(), &part, a, b).unwrap(),
                    per_pair
                );
            }
            // non-adjacent pair
            let far = (0..360).find(|&b| b != 0 && !q.has_edge(0, b)).unwrap();
            assert_eq!(edges_between_blocks(g.graph(), &part, 0, far).unwrap(), 0);
            assert_eq!(
                edges_between_blocks(g.graph(), &part, 3, 3),
                Err(CayleyError::SameBlock)
            );

            // neighbors of the block H are the blocks H y h
            let hb = part.block_of(0);
            let expected: std::collections::BTreeSet<usize> =
                h.iter().map(|&hh| part.block_of(t.mul(y, hh))).collect();
            let actual: std::collections::BTreeSet<usize> =
                q.neighbors(hb).iter().map(|&b| b as usize).collect();
            assert_eq!(actual, expected);
        }
    }

    #[test]
    fn trivial_quotients() {
        let g = Graph::petersen();
        assert_eq!(quotient_graph(&g, &CosetPartition::singletons(10)), g);
        let one = quotient_graph(&g, &CosetPartition::single_block(10));
        assert_eq!(one.vertex_count(), 1);
        assert_eq!(one.edge_count(), 0);
    }
}
