//! Automorphism groups of simple graphs by equitable refinement and
//! individualization, with orbit pruning of the search tree.
//!
//! The search follows one path to a discrete leaf, then revisits the levels
//! of that path from the bottom up. At each level every vertex of the target
//! cell that is not already known to be equivalent to the path vertex is
//! tried; a leaf whose induced map is an automorphism contributes a
//! generator. The group order is the product of the orbit lengths found at
//! each level, and is cross-checked against a Schreier–Sims chain.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::cayley::CosetPartition;
use crate::graph::Graph;
use crate::grouptab::GroupTable;
use crate::perm::{orbit, Permutation, StabilizerChain, UnionFind};

pub const DEFAULT_VERTEX_LIMIT: usize = 10_000;
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
/// Largest `|A| / |G|` accepted by [`AutGroup::normalizer_order_of_regular_subgroup`].
pub const NORMALIZER_GUARD: u64 = 64;
pub const BRUTE_FORCE_LIMIT: usize = 10;
/// Random products sifted to confirm a base and strong generating set.
const BSGS_CHECKS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("graph has {n} vertices, limit is {limit}")]
    VertexLimit { n: usize, limit: usize },
    #[error("search exceeded the node budget of {0}")]
    NodeBudget(u64),
    #[error("brute force needs at most {BRUTE_FORCE_LIMIT} vertices, graph has {0}")]
    TooManyVertices(usize),
    #[error("|A|/|G| = {ratio} exceeds the enumeration guard {guard}")]
    GuardExceeded { ratio: String, guard: u64 },
    #[error("coloring is invalid: {0}")]
    InvalidColoring(&'static str),
    #[error("{0}")]
    Precondition(&'static str),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// An ordered partition of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    color_of: Vec<u32>,
    cells: Vec<Vec<u32>>,
}

impl Coloring {
    pub fn unit(n: usize) -> Self {
        let cells = if n == 0 {
            Vec::new()
        } else {
            vec![(0..n as u32).collect()]
        };
        Coloring {
            color_of: vec![0; n],
            cells,
        }
    }

    /// Cells in the given order; each cell is stored sorted.
    pub fn from_cells(n: usize, cells: Vec<Vec<u32>>) -> Result<Self, AutError> {
        let mut color_of = vec![u32::MAX; n];
        let mut out = Vec::with_capacity(cells.len());
        for (c, mut cell) in cells.into_iter().enumerate() {
            if cell.is_empty() {
                return Err(AutError::InvalidColoring("empty cell"));
            }
            cell.sort_unstable();
            for &v in &cell {
                let slot = color_of
                    .get_mut(v as usize)
                    .ok_or(AutError::InvalidColoring("vertex out of range"))?;
                if *slot != u32::MAX {
                    return Err(AutError::InvalidColoring("vertex in two cells"));
                }
                *slot = c as u32;
            }
            out.push(cell);
        }
        if color_of.contains(&u32::MAX) {
            return Err(AutError::InvalidColoring("vertex without a cell"));
        }
        Ok(Coloring {
            color_of,
            cells: out,
        })
    }

    /// Colors given per vertex; cells are ordered by color value.
    pub fn from_colors(colors: &[u32]) -> Self {
        let mut values: Vec<u32> = colors.to_vec();
        values.sort_unstable();
        values.dedup();
        let mut cells = vec![Vec::new(); values.len()];
        for (v, c) in colors.iter().enumerate() {
            let idx = values.binary_search(c).expect("present");
            cells[idx].push(v as u32);
        }
        Coloring::from_cells(colors.len(), cells).expect("partition by construction")
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.color_of[v] as usize
    }

    pub fn cells(&self) -> &[Vec<u32>] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.color_of.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.len() == self.color_of.len()
    }

    /// True iff `perm` maps every cell onto itself.
    pub fn is_preserved_by(&self, perm: &[u32]) -> bool {
        perm.iter()
            .enumerate()
            .all(|(v, &w)| self.color_of[v] == self.color_of[w as usize])
    }
}

/// The coarsest equitable refinement of `coloring`.
pub fn refine_equitable(graph: &Graph, coloring: &Coloring) -> Coloring {
    let mut state = Partition::from_coloring(coloring);
    let mut scratch = Scratch::new(graph.vertex_count());
    let all: Vec<u32> = state.cell_starts();
    state.refine(graph, &mut scratch, all);
    state.to_coloring()
}

/// Ordered partition stored as a vertex sequence cut into contiguous cells.
#[derive(Clone)]
struct Partition {
    order: Vec<u32>,
    pos: Vec<u32>,
    /// Start position of the cell containing each vertex.
    cell_of: Vec<u32>,
    /// Length of the cell starting at each position (0 elsewhere).
    cell_len: Vec<u32>,
    cells: usize,
    trace: u64,
}

struct Scratch {
    count: Vec<u32>,
    touched_vertices: Vec<u32>,
    touched_cells: Vec<u32>,
    cell_touched: Vec<bool>,
    in_queue: Vec<bool>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            count: vec![0; n],
            touched_vertices: Vec::new(),
            touched_cells: Vec::new(),
            cell_touched: vec![false; n],
            in_queue: vec![false; n],
        }
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(5) ^ x).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95)
}

impl Partition {
    fn from_coloring(c: &Coloring) -> Self {
        let n = c.vertex_count();
        let mut p = Partition {
            order: Vec::with_capacity(n),
            pos: vec![0; n],
            cell_of: vec![0; n],
            cell_len: vec![0; n],
            cells: c.cell_count(),
            trace: 0,
        };
        for cell in c.cells() {
            let start = p.order.len() as u32;
            p.cell_len[start as usize] = cell.len() as u32;
            for &v in cell {
                p.pos[v as usize] = p.order.len() as u32;
                p.cell_of[v as usize] = start;
                p.order.push(v);
            }
        }
        p
    }

    fn to_coloring(&self) -> Coloring {
        let cells = self
            .cell_starts()
            .into_iter()
            .map(|s| self.cell(s).to_vec())
            .collect();
        Coloring::from_cells(self.order.len(), cells).expect("valid partition")
    }

    fn cell_starts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.order.len() {
            out.push(s as u32);
            s += self.cell_len[s] as usize;
        }
        out
    }

    fn cell(&self, start: u32) -> &[u32] {
        let s = start as usize;
        &self.order[s..s + self.cell_len[s] as usize]
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.order.len()
    }

    /// First non-singleton cell of minimum size.
    fn target_cell(&self) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        let mut s = 0;
        while s < self.order.len() {
            let len = self.cell_len[s];
            if len > 1 && best.is_none_or(|(_, l)| len < l) {
                best = Some((s as u32, len));
            }
            s += len as usize;
        }
        best.map(|(s, _)| s)
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.order.swap(a, b);
        self.pos[self.order[a] as usize] = a as u32;
        self.pos[self.order[b] as usize] = b as u32;
    }

    /// Splits `v` off the front of its cell and returns the new singleton's start.
    fn individualize(&mut self, v: u32) -> u32 {
        let start = self.cell_of[v as usize];
        let len = self.cell_len[start as usize];
        debug_assert!(len > 1);
        self.swap(start as usize, self.pos[v as usize] as usize);
        self.cell_len[start as usize] = 1;
        let rest = start + 1;
        self.cell_len[rest as usize] = len - 1;
        for i in rest..start + len {
            let w = self.order[i as usize];
            self.cell_of[w as usize] = rest;
        }
        self.cells += 1;
        self.trace = mix(self.trace, 0xA5A5 ^ start as u64);
        start
    }

    fn refine(&mut self, graph: &Graph, sc: &mut Scratch, initial: Vec<u32>) {
        let mut queue: VecDeque<u32> = VecDeque::new();
        for s in initial {
            if !sc.in_queue[s as usize] {
                sc.in_queue[s as usize] = true;
                queue.push_back(s);
            }
        }
        while let Some(splitter) = queue.pop_front() {
            sc.in_queue[splitter as usize] = false;
            if self.cells == self.order.len() {
                continue;
            }
            let s = splitter as usize;
            let len = self.cell_len[s] as usize;
            for i in s..s + len {
                let u = self.order[i] as usize;
                for &v in graph.neighbors(u) {
                    let v = v as usize;
                    if sc.count[v] == 0 {
                        sc.touched_vertices.push(v as u32);
                        let c = self.cell_of[v];
                        if !sc.cell_touched[c as usize] {
                            sc.cell_touched[c as usize] = true;
                            sc.touched_cells.push(c);
                        }
                    }
                    sc.count[v] += 1;
                }
            }
            sc.touched_cells.sort_unstable();
            let touched_cells = std::mem::take(&mut sc.touched_cells);
            for &c in &touched_cells {
                sc.cell_touched[c as usize] = false;
                self.split_cell(c, sc, &mut queue);
            }
            sc.touched_cells = touched_cells;
            sc.touched_cells.clear();
            for &v in &sc.touched_vertices {
                sc.count[v as usize] = 0;
            }
            sc.touched_vertices.clear();
            self.trace = mix(self.trace, 0x5EED ^ (splitter as u64) << 20);
        }
    }

    fn split_cell(&mut self, c: u32, sc: &mut Scratch, queue: &mut VecDeque<u32>) {
        let start = c as usize;
        let len = self.cell_len[start] as usize;
        let end = start + len;
        if len == 1 {
            return;
        }
        // Move the touched vertices (count > 0) to the end of the cell.
        let mut p = end;
        let mut i = end;
        while i > start {
            i -= 1;
            let v = self.order[i] as usize;
            if sc.count[v] > 0 {
                p -= 1;
                self.swap(i, p);
            }
        }
        let count = &sc.count;
        self.order[p..end].sort_unstable_by_key(|&v| (count[v as usize], v));
        for i in p..end {
            self.pos[self.order[i] as usize] = i as u32;
        }
        // Fragment boundaries, ascending by count; untouched vertices first.
        let mut bounds: Vec<usize> = vec![start];
        for i in p.max(start + 1)..end {
            if i == p || sc.count[self.order[i] as usize] != sc.count[self.order[i - 1] as usize] {
                bounds.push(i);
            }
        }
        if bounds.len() == 1 {
            self.trace = mix(
                self.trace,
                (c as u64) << 32 | sc.count[self.order[start] as usize] as u64,
            );
            return;
        }
        bounds.push(end);
        let in_queue = sc.in_queue[start];
        let mut largest = 0;
        for f in 0..bounds.len() - 1 {
            let size = bounds[f + 1] - bounds[f];
            self.cell_len[bounds[f]] = size as u32;
            if size > bounds[largest + 1] - bounds[largest] {
                largest = f;
            }
            let cnt = sc.count[self.order[bounds[f]] as usize];
            self.trace = mix(
                self.trace,
                (c as u64) << 40 ^ (size as u64) << 20 ^ cnt as u64,
            );
            if f > 0 {
                for i in bounds[f]..bounds[f + 1] {
                    self.cell_of[self.order[i] as usize] = bounds[f] as u32;
                }
            }
        }
        self.cells += bounds.len() - 2;
        for (f, &s) in bounds[..bounds.len() - 1].iter().enumerate() {
            if (in_queue || f != largest) && !sc.in_queue[s] {
                sc.in_queue[s] = true;
                queue.push_back(s as u32);
            }
        }
    }
}

/// Limits for [`automorphism_group_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub vertex_limit: usize,
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            vertex_limit: DEFAULT_VERTEX_LIMIT,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Generators and exact order of a graph automorphism group.
#[derive(Debug, Clone)]
pub struct AutGroup {
    vertex_count: usize,
    generators: Vec<Permutation>,
    chain: StabilizerChain,
    order: BigUint,
    nodes: u64,
}

impl AutGroup {
    fn from_generators(vertex_count: usize, generators: Vec<Permutation>, nodes: u64) -> Self {
        Self::from_search(vertex_count, generators, &[], nodes)
    }

    /// As [`AutGroup::from_generators`], trusting `base` and the generators as
    /// a base and strong generating set when random sifting confirms them.
    fn from_search(
        vertex_count: usize,
        generators: Vec<Permutation>,
        base: &[u32],
        nodes: u64,
    ) -> Self {
        let mut input = generators.clone();
        input.push(Permutation::identity(vertex_count));
        let known = if base.is_empty() {
            None
        } else {
            StabilizerChain::from_strong_generators(&input, base, BSGS_CHECKS)
                .expect("uniform degree")
        };
        let chain =
            known.unwrap_or_else(|| StabilizerChain::build(&input).expect("uniform degree"));
        let order = chain.order().clone();
        AutGroup {
            vertex_count,
            generators,
            chain,
            order,
            nodes,
        }
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Search-tree nodes visited (0 for brute force).
    pub fn nodes_visited(&self) -> u64 {
        self.nodes
    }

    pub fn contains(&self, perm: &Permutation) -> bool {
        self.chain.contains(perm).unwrap_or(false)
    }

    /// `|A_v| = |A| / |v^A|`.
    pub fn vertex_stabilizer_order(&self, v: usize) -> BigUint {
        let orbit_len = orbit(&self.generators, v as u32).len().max(1);
        &self.order / BigUint::from(orbit_len)
    }

    /// True iff every generator maps blocks onto blocks.
    pub fn is_partition_invariant(&self, partition: &CosetPartition) -> bool {
        if partition.vertex_count() != self.vertex_count {
            return false;
        }
        self.generators.iter().all(|g| {
            partition.blocks().iter().all(|block| {
                let target = partition.block_of(g.image(block[0]) as usize);
                block
                    .iter()
                    .all(|&v| partition.block_of(g.image(v) as usize) == target)
            })
        })
    }

    /// `|N_A(G)|` for the right regular representation of the table's group.
    ///
    /// Since `G` is regular, `N_A(G) = G ⋊ N_{A_1}(G)`, so it suffices to count
    /// elements of the identity stabilizer that normalize `G`.
    pub fn normalizer_order_of_regular_subgroup(
        &self,
        table: &GroupTable,
    ) -> Result<BigUint, AutError> {
        let n = table.order();
        if n != self.vertex_count {
            return Err(AutError::Precondition("vertex set is not the group"));
        }
        let ratio = &self.order / BigUint::from(n);
        if ratio > BigUint::from(NORMALIZER_GUARD) {
            return Err(AutError::GuardExceeded {
                ratio: ratio.to_string(),
                guard: NORMALIZER_GUARD,
            });
        }
        let translations: Vec<Vec<u32>> = table
            .generator_indices()
            .iter()
            .map(|&h| (0..n).map(|v| table.mul(v, h) as u32).collect())
            .collect();
        for t in &translations {
            let perm = Permutation::from_images(t.clone()).expect("bijection");
            if !self.contains(&perm) {
                return Err(AutError::Precondition(
                    "right translations are not automorphisms",
                ));
            }
        }
        let mut input = self.generators.clone();
        input.push(Permutation::identity(n));
        let chain = StabilizerChain::build_with_base(&input, &[0]).expect("uniform degree");
        let from = usize::from(chain.base().first() == Some(&0));
        let stabilizer = chain.elements_from_level(from);
        let normalizing = stabilizer
            .iter()
            .filter(|a| {
                translations.iter().all(|t| {
                    // a^-1 t a maps v to a(t(a^-1(v))); it is a right translation
                    // by h = image of 0 iff it agrees with v ↦ v·h everywhere.
                    let inv = a.inverse();
                    let img = |v: usize| a.image(t[inv.image(v as u32) as usize]) as usize;
                    let h = img(0);
                    (0..n).all(|v| img(v) == table.mul(v, h))
                })
            })
            .count();
        Ok(BigUint::from(n) * BigUint::from(normalizing))
    }
}

pub fn automorphism_group(graph: &Graph, initial: Option<&Coloring>) -> Result<AutGroup, AutError> {
    automorphism_group_with(graph, initial, SearchConfig::default())
}

pub fn automorphism_group_with(
    graph: &Graph,
    initial: Option<&Coloring>,
    config: SearchConfig,
) -> Result<AutGroup, AutError> {
    let n = graph.vertex_count();
    if n > config.vertex_limit {
        return Err(AutError::VertexLimit {
            n,
            limit: config.vertex_limit,
        });
    }
    let unit;
    let coloring = match initial {
        Some(c) => {
            if c.vertex_count() != n {
                return Err(AutError::InvalidColoring(
                    "coloring has the wrong vertex count",
                ));
            }
            c
        }
        None => {
            unit = Coloring::unit(n);
            &unit
        }
    };
    let mut search = Search {
        graph,
        scratch: Scratch::new(n),
        nodes: 0,
        budget: config.node_budget,
        first_traces: Vec::new(),
        first_leaf: Vec::new(),
    };
    let (generators, product, base) = search.run(coloring)?;
    let aut = AutGroup::from_search(n, generators, &base, search.nodes);
    if aut.order != product {
        return Err(AutError::Internal(format!(
            "orbit product {product} differs from chain order {}",
            aut.order
        )));
    }
    Ok(aut)
}

struct Search<'g> {
    graph: &'g Graph,
    scratch: Scratch,
    nodes: u64,
    budget: u64,
    /// Invariant (cell count, trace) at each depth of the first path.
    first_traces: Vec<(usize, u64)>,
    first_leaf: Vec<u32>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<(), AutError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(AutError::NodeBudget(self.budget));
        }
        Ok(())
    }

    fn child(&mut self, parent: &Partition, v: u32) -> Result<Partition, AutError> {
        self.tick()?;
        let mut p = parent.clone();
        p.trace = 0;
        let s = p.individualize(v);
        p.refine(self.graph, &mut self.scratch, vec![s]);
        Ok(p)
    }

    /// Returns generators, the orbit-size product and the first path's
    /// individualized vertices, which form a base.
    fn run(
        &mut self,
        coloring: &Coloring,
    ) -> Result<(Vec<Permutation>, BigUint, Vec<u32>), AutError> {
        let n = self.graph.vertex_count();
        self.tick()?;
        let mut root = Partition::from_coloring(coloring);
        let starts = root.cell_starts();
        root.refine(self.graph, &mut self.scratch, starts);
        root.trace = 0;

        // First path: always the first vertex of the target cell.
        let mut path: Vec<(Partition, u32, u32)> = Vec::new();
        let mut node = root;
        self.first_traces.push((node.cells, 0));
        while let Some(cell) = node.target_cell() {
            let v = node.order[cell as usize];
            let next = self.child(&node, v)?;
            self.first_traces.push((next.cells, next.trace));
            path.push((node, cell, v));
            node = next;
        }
        self.first_leaf = node.order.clone();

        let mut generators: Vec<Permutation> = Vec::new();
        let mut orbits = UnionFind::new(n);
        let mut product = BigUint::one();
        for depth in (0..path.len()).rev() {
            let (parent, cell, v) = &path[depth];
            let targets: Vec<u32> = parent.cell(*cell).to_vec();
            let mut failed: Vec<u32> = Vec::new();
            for &w in &targets {
                if w == *v || orbits.find(w as usize) == orbits.find(*v as usize) {
                    continue;
                }
                let rw = orbits.find(w as usize);
                if failed.iter().any(|&f| orbits.find(f as usize) == rw) {
                    continue;
                }
                let child = self.child(parent, w)?;
                match self.search_equivalent(child, depth + 1)? {
                    Some(perm) => {
                        for (a, &b) in perm.iter().enumerate() {
                            orbits.union(a, b as usize);
                        }
                        generators.push(Permutation::from_images(perm).expect("bijection"));
                    }
                    None => failed.push(w),
                }
            }
            product *= BigUint::from(orbits.class_size(*v as usize));
        }
        let base = path.iter().map(|&(_, _, v)| v).collect();
        Ok((generators, product, base))
    }

    /// Looks for a leaf below `node` that maps the first leaf by an automorphism.
    fn search_equivalent(
        &mut self,
        node: Partition,
        depth: usize,
    ) -> Result<Option<Vec<u32>>, AutError> {
        if (node.cells, node.trace) != self.first_traces[depth] {
            return Ok(None);
        }
        if node.is_discrete() {
            let mut perm = vec![0u32; node.order.len()];
            for (i, &u) in self.first_leaf.iter().enumerate() {
                perm[u as usize] = node.order[i];
            }
            return Ok(self.graph.is_automorphism(&perm).then_some(perm));
        }
        if depth + 1 >= self.first_traces.len() {
            return Ok(None);
        }
        let cell = node.target_cell().expect("not discrete");
        let candidates: Vec<u32> = node.cell(cell).to_vec();
        for w in candidates {
            let child = self.child(&node, w)?;
            if let Some(found) = self.search_equivalent(child, depth + 1)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Exhaustive scan of all vertex permutations; a testing oracle.
pub fn brute_force_automorphisms(graph: &Graph) -> Result<AutGroup, AutError> {
    let n = graph.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(AutError::TooManyVertices(n));
    }
    let mut generators: Vec<Permutation> = Vec::new();
    let mut chain = StabilizerChain::build(&[Permutation::identity(n)]).expect("identity");
    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut c = vec![0usize; n];
    let consider =
        |perm: &[u32], generators: &mut Vec<Permutation>, chain: &mut StabilizerChain| {
            if graph.is_automorphism(perm) {
                let p = Permutation::from_images(perm.to_vec()).expect("bijection");
                if !chain.contains(&p).expect("same degree") {
                    generators.push(p);
                    *chain = StabilizerChain::build(generators).expect("same degree");
                }
            }
        };
    consider(&perm, &mut generators, &mut chain);
    // Heap's algorithm.
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            consider(&perm, &mut generators, &mut chain);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(AutGroup::from_generators(n, generators, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells_as_sets(c: &Coloring) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = c.cells().to_vec();
        v.sort();
        v
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn circulant(n: usize, dists: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for &d in dists {
                edges.push((i, (i + d) % n));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn refinement_examples() {
        let c = Graph::cycle(6);
        assert_eq!(refine_equitable(&c, &Coloring::unit(6)), Coloring::unit(6));
        let p = refine_equitable(&Graph::path(3), &Coloring::unit(3));
        assert_eq!(cells_as_sets(&p), vec![vec![0, 2], vec![1]]);
        let s = refine_equitable(&star(4), &Coloring::unit(5));
        assert_eq!(cells_as_sets(&s), vec![vec![0], vec![1, 2, 3, 4]]);
    }

    #[test]
    fn refinement_is_equitable_and_idempotent() {
        let g = Graph::path(7);
        let r = refine_equitable(&g, &Coloring::unit(7));
        assert_eq!(r.cell_count(), 4);
        assert_eq!(refine_equitable(&g, &r), r);
        for a in r.cells() {
            for b in r.cells() {
                let counts: Vec<usize> = a
                    .iter()
                    .map(|&u| {
                        b.iter()
                            .filter(|&&v| g.has_edge(u as usize, v as usize))
                            .count()
                    })
                    .collect();
                assert!(counts.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }

    #[test]
    fn orders_of_small_graphs() {
        let cases: Vec<(Graph, u64)> = vec![
            (Graph::complete(5), 120),
            (circulant(7, &[1, 2]), 14),
            (Graph::petersen(), 120),
            (Graph::cycle(6), 12),
            (Graph::empty(4), 24),
            (Graph::path(3), 2),
            (Graph::empty(1), 1),
            (Graph::empty(0), 1),
        ];
        for (g, expected) in cases {
            let a = automorphism_group(&g, None).unwrap();
            assert_eq!(a.order(), &BigUint::from(expected), "{}", g.to_graph6());
            for gen in a.generators() {
                assert!(g.is_automorphism(gen.images()));
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_automorphisms(&Graph::empty(4)).unwrap().order(),
            &BigUint::from(24u32)
        );
        assert_eq!(
            brute_force_automorphisms(&Graph::path(3)).unwrap().order(),
            &BigUint::from(2u32)
        );
        assert_eq!(
            brute_force_automorphisms(&Graph::cycle(6)).unwrap().order(),
            &BigUint::from(12u32)
        );
        assert_eq!(
            brute_force_automorphisms(&Graph::petersen())
                .unwrap()
                .order(),
            &BigUint::from(120u32)
        );
        assert_eq!(
            brute_force_automorphisms(&circulant(7, &[1, 2]))
                .unwrap()
                .order(),
            &BigUint::from(14u32)
        );
        assert_eq!(
            brute_force_automorphisms(&Graph::empty(11)).unwrap_err(),
            AutError::TooManyVertices(11)
        );
    }

    #[test]
    fn stabilizers() {
        let k5 = automorphism_group(&Graph::complete(5), None).unwrap();
        for v in 0..5 {
            assert_eq!(k5.vertex_stabilizer_order(v), BigUint::from(24u32));
        }
        let pet = automorphism_group(&Graph::petersen(), None).unwrap();
        assert_eq!(pet.vertex_stabilizer_order(3), BigUint::from(12u32));
    }

    #[test]
    fn coloring_restricts_group() {
        let g = Graph::cycle(6);
        let colors = Coloring::from_cells(6, vec![vec![0], vec![1, 2, 3, 4, 5]]).unwrap();
        let a = automorphism_group(&g, Some(&colors)).unwrap();
        assert_eq!(a.order(), &BigUint::from(2u32));
        for gen in a.generators() {
            assert!(colors.is_preserved_by(gen.images()));
        }
    }

    #[test]
    fn partition_invariance() {
        let g = Graph::cycle(6);
        let a = automorphism_group(&g, None).unwrap();
        assert!(a.is_partition_invariant(&CosetPartition::singletons(6)));
        assert!(a.is_partition_invariant(&CosetPartition::single_block(6)));
        let antipodal =
            CosetPartition::from_blocks(6, vec![vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        assert!(a.is_partition_invariant(&antipodal));
        let bad = CosetPartition::from_blocks(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert!(!a.is_partition_invariant(&bad));
    }

    #[test]
    fn limits() {
        let g = Graph::empty(20);
        let cfg = SearchConfig {
            vertex_limit: 10,
            node_budget: 10,
        };
        assert_eq!(
            automorphism_group_with(&g, None, cfg).unwrap_err(),
            AutError::VertexLimit { n: 20, limit: 10 }
        );
        let cfg = SearchConfig {
            vertex_limit: 100,
            node_budget: 5,
        };
        assert_eq!(
            automorphism_group_with(&g, None, cfg).unwrap_err(),
            AutError::NodeBudget(5)
        );
    }
}
