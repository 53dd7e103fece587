//! Exhaustively enumerated permutation groups with indexed multiplication.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::perm::{PermError, Permutation};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group exceeds the enumeration cap of {cap} elements ({partial} found so far)")]
    CapExceeded { cap: usize, partial: usize },
    #[error("the source elements do not generate the group")]
    NotGenerating,
    #[error("source and target lists differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("element index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("permutation is not an element of the group")]
    NotAnElement,
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A group stored as an indexed list of its elements; index 0 is the identity.
#[derive(Debug, Clone)]
pub struct GroupTable {
    elements: Vec<Permutation>,
    index_of: HashMap<Permutation, u32>,
    generator_indices: Vec<usize>,
    /// `left_mul[s][i]` is the index of `generator_s · elements[i]`.
    left_mul: Vec<Vec<u32>>,
    inverses: Vec<u32>,
}

impl GroupTable {
    /// Breadth-first closure of `generators` under left multiplication.
    pub fn enumerate(generators: &[Permutation], cap: usize) -> Result<Self, GroupError> {
        let degree = generators
            .first()
            .ok_or(GroupError::Perm(PermError::NoGenerators))?
            .degree();
        for g in generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                }
                .into());
            }
        }
        let cap = cap.max(1);
        let mut elements = vec![Permutation::identity(degree)];
        let mut index_of = HashMap::new();
        index_of.insert(elements[0].clone(), 0u32);
        let mut left_mul: Vec<Vec<u32>> = vec![Vec::new(); generators.len()];
        let mut head = 0;
        while head < elements.len() {
            for (s, gen) in generators.iter().enumerate() {
                let h = gen.mul(&elements[head]);
                let idx = match index_of.get(&h) {
                    Some(&i) => i,
                    None => {
                        if elements.len() == cap {
                            return Err(GroupError::CapExceeded {
                                cap,
                                partial: elements.len(),
                            });
                        }
                        let i = elements.len() as u32;
                        index_of.insert(h.clone(), i);
                        elements.push(h);
                        i
                    }
                };
                left_mul[s].push(idx);
            }
            head += 1;
        }
        let generator_indices = generators.iter().map(|g| index_of[g] as usize).collect();
        let inverses = elements.iter().map(|g| index_of[&g.inverse()]).collect();
        Ok(GroupTable {
            elements,
            index_of,
            generator_indices,
            left_mul,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index_of.get(g).map(|&i| i as usize)
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn generator_count(&self) -> usize {
        self.left_mul.len()
    }

    /// Index of `generator_s · elements[i]`.
    #[inline]
    pub fn left_mul_generator(&self, s: usize, i: usize) -> usize {
        self.left_mul[s][i] as usize
    }

    /// Index of `elements[a] · elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let h = self.elements[a].mul(&self.elements[b]);
        self.index_of[&h] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn power(&self, a: usize, e: i64) -> usize {
        self.index_of[&self.elements[a].pow(e)] as usize
    }

    /// `b^{-1} a b`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.index_of[&self.elements[a].conjugate_by(&self.elements[b])] as usize
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.elements[a]
            .cycle_lengths()
            .into_iter()
            .fold(1usize, num_integer::lcm)
    }

    fn check_index(&self, i: usize) -> Result<(), GroupError> {
        if i < self.order() {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange(i))
        }
    }

    /// Indices reachable from the identity by left multiplication with `sources`.
    pub fn closure_of(&self, sources: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut head = 0;
        while head < out.len() {
            let g = out[head];
            head += 1;
            for &s in sources {
                let h = self.mul(s, g);
                if !seen[h] {
                    seen[h] = true;
                    out.push(h);
                }
            }
        }
        out
    }

    pub fn generates(&self, sources: &[usize]) -> bool {
        self.closure_of(sources).len() == self.order()
    }

    /// True iff `g` is a power of `x`.
    pub fn cyclic_membership(&self, x: usize, g: usize) -> bool {
        let mut cur = 0;
        loop {
            if cur == g {
                return true;
            }
            cur = self.mul(cur, x);
            if cur == 0 {
                return false;
            }
        }
    }

    /// Number of elements of order exactly two.
    pub fn count_involutions(&self) -> usize {
        (1..self.order()).filter(|&i| self.mul(i, i) == 0).count()
    }

    /// Conjugacy classes; the identity class comes first and classes are
    /// ordered by their least index.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut class = vec![start];
            let mut head = 0;
            while head < class.len() {
                let a = class[head];
                head += 1;
                for &s in &self.generator_indices {
                    let b = self.conjugate(a, s);
                    if class_of[b] == usize::MAX {
                        class_of[b] = id;
                        class.push(b);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Extends `sources[i] ↦ targets[i]` to a homomorphism by propagating along
    /// words; returns it only if it is well defined and bijective.
    pub fn extend_generator_map(
        &self,
        sources: &[usize],
        targets: &[usize],
    ) -> Result<Option<ElementAutomorphism>, GroupError> {
        if sources.len() != targets.len() {
            return Err(GroupError::LengthMismatch(sources.len(), targets.len()));
        }
        for &i in sources.iter().chain(targets) {
            self.check_index(i)?;
        }
        let n = self.order();
        let mut images = vec![u32::MAX; n];
        images[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        let mut consistent = true;
        let mut visited = 1;
        while let Some(g) = queue.pop_front() {
            let phi_g = images[g] as usize;
            for (&s, &t) in sources.iter().zip(targets) {
                let h = self.mul(s, g);
                let value = self.mul(t, phi_g) as u32;
                if images[h] == u32::MAX {
                    images[h] = value;
                    visited += 1;
                    queue.push_back(h);
                } else if images[h] != value {
                    consistent = false;
                }
            }
        }
        if visited != n {
            return Err(GroupError::NotGenerating);
        }
        if !consistent {
            return Ok(None);
        }
        let mut hit = vec![false; n];
        for &v in &images {
            hit[v as usize] = true;
        }
        if hit.iter().all(|&b| b) {
            Ok(Some(ElementAutomorphism { images }))
        } else {
            Ok(None)
        }
    }

    /// The automorphism induced by conjugation with `g` (which must normalize the group).
    pub fn conjugation_automorphism(
        &self,
        g: &Permutation,
    ) -> Result<ElementAutomorphism, GroupError> {
        let mut images = Vec::with_capacity(self.order());
        for e in &self.elements {
            let c = e.conjugate_by(g);
            images.push(
                self.index_of
                    .get(&c)
                    .copied()
                    .ok_or(GroupError::NotAnElement)?,
            );
        }
        Ok(ElementAutomorphism { images })
    }

    /// Decides whether the group has a proper subgroup of index 2 or 3.
    ///
    /// A subgroup of index 3 whose core has quotient `S_3` also yields one of
    /// index 2, so it suffices to look for surjections onto `C_2` or `C_3`.
    /// These are the nonzero solutions of a linear system over `GF(m)` read off
    /// a spanning tree of the Cayley graph on the table generators. The witness
    /// is the kernel, a normal subgroup of index 2 (preferred) or 3.
    pub fn subgroup_of_index_lt4(&self) -> Option<SmallIndexWitness> {
        for m in [2u32, 3] {
            if let Some(values) = self.cyclic_quotient_values(m) {
                let subgroup = (0..self.order()).filter(|&i| values[i] == 0).collect();
                return Some(SmallIndexWitness {
                    index: m as usize,
                    subgroup,
                });
            }
        }
        None
    }

    pub fn has_subgroup_of_index_lt4(&self) -> bool {
        self.subgroup_of_index_lt4().is_some()
    }

    /// Values of a surjection onto `Z/m` (m prime), if one exists.
    fn cyclic_quotient_values(&self, m: u32) -> Option<Vec<u32>> {
        let gens = self.generator_count();
        if gens == 0 || self.order() == 1 {
            return None;
        }
        // word[g] expresses the value of element g as a combination of the
        // generator values a_s.
        let n = self.order();
        let mut word: Vec<Vec<u32>> = vec![Vec::new(); n];
        word[0] = vec![0; gens];
        let mut visited = vec![false; n];
        visited[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut rows: Vec<Vec<u32>> = Vec::new();
        while let Some(g) = queue.pop_front() {
            for s in 0..gens {
                let h = self.left_mul_generator(s, g);
                let mut w = word[g].clone();
                w[s] = (w[s] + 1) % m;
                if !visited[h] {
                    visited[h] = true;
                    word[h] = w;
                    queue.push_back(h);
                } else {
                    let eq: Vec<u32> = w
                        .iter()
                        .zip(&word[h])
                        .map(|(a, b)| (a + m - b) % m)
                        .collect();
                    insert_row(&mut rows, eq, m);
                }
            }
        }
        let solution = nullspace_vector(&rows, gens, m)?;
        Some(
            word.iter()
                .map(|w| w.iter().zip(&solution).map(|(a, b)| a * b).sum::<u32>() % m)
                .collect(),
        )
    }
}

/// Reduced-row insertion over GF(m); rows are kept with distinct pivot columns.
fn insert_row(rows: &mut Vec<Vec<u32>>, mut row: Vec<u32>, m: u32) {
    for r in rows.iter() {
        let pivot = r.iter().position(|&v| v != 0).expect("nonzero row");
        if row[pivot] != 0 {
            let factor = row[pivot];
            for (x, &y) in row.iter_mut().zip(r) {
                *x = (*x + m * m - factor * y) % m;
            }
        }
    }
    if let Some(pivot) = row.iter().position(|&v| v != 0) {
        let inv = mod_inverse(row[pivot], m);
        for x in row.iter_mut() {
            *x = (*x * inv) % m;
        }
        for r in rows.iter_mut() {
            if r[pivot] != 0 {
                let factor = r[pivot];
                for (x, &y) in r.iter_mut().zip(&row) {
                    *x = (*x + m * m - factor * y) % m;
                }
            }
        }
        rows.push(row);
    }
}

fn mod_inverse(a: u32, m: u32) -> u32 {
    (1..m).find(|&b| a * b % m == 1).expect("m prime")
}

fn nullspace_vector(rows: &[Vec<u32>], cols: usize, m: u32) -> Option<Vec<u32>> {
    let pivots: Vec<usize> = rows
        .iter()
        .map(|r| r.iter().position(|&v| v != 0).expect("nonzero row"))
        .collect();
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![0u32; cols];
    v[free] = 1;
    for (r, &p) in rows.iter().zip(&pivots) {
        v[p] = (m - r[free] % m) % m;
    }
    Some(v)
}

/// A proper subgroup of index 2 or 3 (always normal here).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallIndexWitness {
    pub index: usize,
    pub subgroup: Vec<usize>,
}

/// An automorphism of a [`GroupTable`], as a permutation of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementAutomorphism {
    images: Vec<u32>,
}

impl ElementAutomorphism {
    pub fn identity(order: usize) -> Self {
        ElementAutomorphism {
            images: (0..order as u32).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &ElementAutomorphism) -> ElementAutomorphism {
        ElementAutomorphism {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> ElementAutomorphism {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        ElementAutomorphism { images: inv }
    }

    /// Checks `φ(ab) = φ(a)φ(b)` on the given index pairs.
    pub fn respects_products(
        &self,
        table: &GroupTable,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> bool {
        pairs
            .into_iter()
            .all(|(a, b)| self.apply(table.mul(a, b)) == table.mul(self.apply(a), self.apply(b)))
    }
}
