//! Permutations on `{0, …, n-1}` and the permutation-group primitives built
//! on them: orbits, block systems and a deterministic Schreier–Sims chain.
//!
//! Points act on the right and products compose left to right, so
//! `i^(ab) = (i^a)^b`. All textual I/O uses 1-indexed cycle notation.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest degree accepted by the cycle-notation parser.
pub const DEFAULT_DEGREE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("malformed cycle notation at byte {at}: {reason}")]
    Syntax { at: usize, reason: &'static str },
    #[error("point {point} repeated within one cycle")]
    RepeatedPoint { point: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image list is not a bijection")]
    NotBijective,
    #[error("the generated group is not transitive")]
    Intransitive,
    #[error("empty generator list")]
    NoGenerators,
}

/// A bijection of `{0, …, degree-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(PermError::NotBijective);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-indexed cycles without validation beyond bounds.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, PermError> {
        let mut p = Permutation::identity(degree);
        for cycle in cycles {
            let c = Self::single_cycle(degree, cycle)?;
            p = p.mul(&c);
        }
        Ok(p)
    }

    fn single_cycle(degree: usize, cycle: &[u32]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = std::collections::HashSet::new();
        for (i, &a) in cycle.iter().enumerate() {
            if a as usize >= degree {
                return Err(PermError::PointOutOfRange {
                    point: a as usize + 1,
                    degree,
                });
            }
            if !seen.insert(a) {
                return Err(PermError::RepeatedPoint {
                    point: a as usize + 1,
                });
            }
            images[a as usize] = cycle[(i + 1) % cycle.len()];
        }
        Ok(Permutation { images })
    }

    /// Parses 1-indexed cycle notation such as `(1,2,3)(4,5)`. Cycles are
    /// multiplied left to right; the empty string is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        if degree > DEFAULT_DEGREE_CAP {
            return Err(PermError::DegreeTooLarge {
                degree,
                cap: DEFAULT_DEGREE_CAP,
            });
        }
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut result = Permutation::identity(degree);
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        loop {
            skip_ws(&mut pos);
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(PermError::Syntax {
                    at: pos,
                    reason: "expected '('",
                });
            }
            pos += 1;
            let mut cycle = Vec::new();
            loop {
                skip_ws(&mut pos);
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(PermError::Syntax {
                        at: pos,
                        reason: "expected a point",
                    });
                }
                let point: usize = text[start..pos].parse().map_err(|_| PermError::Syntax {
                    at: start,
                    reason: "point does not fit in an integer",
                })?;
                if point == 0 || point > degree {
                    return Err(PermError::PointOutOfRange { point, degree });
                }
                cycle.push((point - 1) as u32);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    Some(_) => {
                        return Err(PermError::Syntax {
                            at: pos,
                            reason: "expected ',' or ')'",
                        })
                    }
                    None => {
                        return Err(PermError::Syntax {
                            at: pos,
                            reason: "unbalanced parenthesis",
                        })
                    }
                }
            }
            let c = Self::single_cycle(degree, &cycle)?;
            result = result.mul(&c);
        }
        Ok(result)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }

    /// `i ↦ other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked product; panics on degree mismatch.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g^{-1} self g`, the image of `self` under conjugation by `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        assert_eq!(self.degree(), g.degree(), "degree mismatch");
        let mut images = vec![0u32; self.degree()];
        for i in 0..self.degree() {
            images[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &j)| i as u32 != j)
            .map(|(i, _)| i as u32)
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        (0..self.degree() as u32)
            .filter(|&i| self.images[i as usize] == i)
            .collect()
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// Least `m ≥ 1` with `self^m = 1`.
    pub fn order(&self) -> BigUint {
        self.cycle_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, l| acc.lcm(&BigUint::from(l)))
    }

    /// Order as a machine integer; `None` if it overflows `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }

    /// `self^e` for a signed exponent.
    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        base.pow_big(&BigUint::from(e.unsigned_abs()))
    }

    /// `self^e` computed cycle by cycle, so huge exponents are cheap.
    pub fn pow_big(&self, e: &BigUint) -> Permutation {
        let mut images: Vec<u32> = (0..self.degree() as u32).collect();
        for cycle in self.cycles() {
            let len = cycle.len();
            let shift = (e % BigUint::from(len)).to_usize().unwrap_or(0);
            for (k, &a) in cycle.iter().enumerate() {
                images[a as usize] = cycle[(k + shift) % len];
            }
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, a) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", a + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Orbit of `point` under the group generated by `generators`, in BFS order.
pub fn orbit(generators: &[Permutation], point: u32) -> Vec<u32> {
    let degree = generators
        .first()
        .map_or(point as usize + 1, Permutation::degree);
    let mut seen = vec![false; degree.max(point as usize + 1)];
    let mut out = vec![point];
    seen[point as usize] = true;
    let mut head = 0;
    while head < out.len() {
        let a = out[head];
        head += 1;
        for g in generators {
            let b = g.image(a);
            if !seen[b as usize] {
                seen[b as usize] = true;
                out.push(b);
            }
        }
    }
    out
}

pub fn is_transitive(generators: &[Permutation]) -> bool {
    match generators.first() {
        None => false,
        Some(g) => orbit(generators, 0).len() == g.degree(),
    }
}

/// Outcome of a primitivity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    /// A nontrivial block system (0-indexed blocks, each sorted, sorted by first point).
    Imprimitive(Vec<Vec<u32>>),
}

/// Tests primitivity of a transitive group by computing, for every `β ≠ 0`,
/// the finest block system in which `0` and `β` share a block.
pub fn is_primitive(generators: &[Permutation]) -> Result<Primitivity, PermError> {
    let degree = generators.first().ok_or(PermError::NoGenerators)?.degree();
    if !is_transitive(generators) {
        return Err(PermError::Intransitive);
    }
    for beta in 1..degree as u32 {
        let blocks = minimal_blocks(generators, degree, beta);
        if blocks.len() > 1 {
            return Ok(Primitivity::Imprimitive(blocks));
        }
    }
    Ok(Primitivity::Primitive)
}

fn minimal_blocks(generators: &[Permutation], degree: usize, beta: u32) -> Vec<Vec<u32>> {
    let mut uf = UnionFind::new(degree);
    let mut queue = VecDeque::new();
    uf.union(0, beta as usize);
    queue.push_back((0u32, beta));
    while let Some((a, b)) = queue.pop_front() {
        for g in generators {
            let (ga, gb) = (g.image(a) as usize, g.image(b) as usize);
            if uf.union(ga, gb) {
                queue.push_back((ga as u32, gb as u32));
            }
        }
    }
    uf.classes()
}

/// Disjoint-set forest over `0..n`.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] as usize != a {
            let p = self.parent[a] as usize;
            self.parent[a] = self.parent[p];
            a = p;
        }
        a
    }

    /// Returns `true` if two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn class_size(&mut self, a: usize) -> usize {
        let r = self.find(a);
        self.size[r] as usize
    }

    pub fn classes(&mut self) -> Vec<Vec<u32>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<u32>> = vec![Vec::new(); n];
        for i in 0..n {
            let r = self.find(i);
            by_root[r].push(i as u32);
        }
        let mut out: Vec<Vec<u32>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
        out.sort_by_key(|c| c[0]);
        out
    }
}

#[derive(Debug, Clone)]
struct Level {
    base_point: u32,
    generators: Vec<Permutation>,
    orbit: Vec<u32>,
    /// Index into `reps` for each point, `u32::MAX` outside the orbit.
    rep_index: Vec<u32>,
    reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
    /// For each orbit position, how many generators have had their Schreier
    /// generator verified.
    verified: Vec<usize>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Self {
        let mut rep_index = vec![u32::MAX; degree];
        rep_index[base_point as usize] = 0;
        Level {
            base_point,
            generators: Vec::new(),
            orbit: vec![base_point],
            rep_index,
            reps: vec![Permutation::identity(degree)],
            inv_reps: vec![Permutation::identity(degree)],
            verified: vec![0],
        }
    }

    /// Extends the orbit and transversal; existing representatives never change.
    fn extend_orbit(&mut self) {
        let mut head = 0;
        while head < self.orbit.len() {
            let a = self.orbit[head];
            let ua = self.rep_index[a as usize] as usize;
            for g in &self.generators {
                let b = g.image(a);
                if self.rep_index[b as usize] == u32::MAX {
                    let rep = self.reps[ua].mul(g);
                    self.rep_index[b as usize] = self.reps.len() as u32;
                    self.inv_reps.push(rep.inverse());
                    self.reps.push(rep);
                    self.orbit.push(b);
                    self.verified.push(0);
                }
            }
            head += 1;
        }
    }

    fn add_generator(&mut self, g: Permutation) {
        self.generators.push(g);
        self.extend_orbit();
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
    strong_generators: Vec<Permutation>,
    order: BigUint,
}

impl StabilizerChain {
    /// Deterministic Schreier–Sims. New base points are the first point moved
    /// by the permutation that requires them.
    pub fn build(generators: &[Permutation]) -> Result<Self, PermError> {
        Self::build_with_base(generators, &[])
    }

    /// As [`StabilizerChain::build`], with the base starting at `prefix`.
    pub fn build_with_base(generators: &[Permutation], prefix: &[u32]) -> Result<Self, PermError> {
        let degree = generators.first().ok_or(PermError::NoGenerators)?.degree();
        for g in generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        for &b in prefix {
            if b as usize >= degree {
                return Err(PermError::PointOutOfRange {
                    point: b as usize + 1,
                    degree,
                });
            }
        }
        let mut chain = Builder::new(degree, generators, prefix);
        chain.run(None);
        Ok(chain.finish())
    }

    /// Chain for a base and strong generating set that are already known, as
    /// produced by a backtrack search: the generators fixing the first `i`
    /// base points must generate that pointwise stabilizer.
    ///
    /// Schreier–Sims is skipped. Instead `checks` seeded random products of
    /// the generators are sifted, and `None` is returned if one fails.
    pub fn from_strong_generators(
        generators: &[Permutation],
        base: &[u32],
        checks: usize,
    ) -> Result<Option<Self>, PermError> {
        let degree = generators.first().ok_or(PermError::NoGenerators)?.degree();
        for g in generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let chain = Builder::new(degree, generators, base).finish();
        if chain.levels.len() > base.len() {
            return Ok(None);
        }
        let gens = chain.strong_generators.clone();
        if gens.is_empty() {
            return Ok(Some(chain));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..checks {
            let mut g = Permutation::identity(degree);
            for _ in 0..2 * gens.len() + 10 {
                g = g.mul(&gens[rng.gen_range(0..gens.len())]);
            }
            let (h, level) = chain.sift(&g);
            if level != chain.levels.len() || !h.is_identity() {
                return Ok(None);
            }
        }
        Ok(Some(chain))
    }

    /// Returns `true` iff `⟨generators⟩` has order at least `target`.
    ///
    /// The product of the orbit lengths of a partial chain never exceeds the
    /// order of the group, so the search stops as soon as `target` is reached.
    pub fn order_reaches(generators: &[Permutation], target: &BigUint) -> Result<bool, PermError> {
        let degree = generators.first().ok_or(PermError::NoGenerators)?.degree();
        let mut chain = Builder::new(degree, generators, &[]);
        chain.run(Some(target));
        Ok(&chain.current_order() >= target)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_generators
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Sifts `g`; the residue is the identity iff `g` belongs to the group.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        sift_levels(&self.levels, 0, g.clone())
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool, PermError> {
        if g.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        let (h, level) = self.sift(g);
        Ok(level == self.levels.len() && h.is_identity())
    }

    /// All elements of the pointwise stabilizer of the first `from` base points.
    pub fn elements_from_level(&self, from: usize) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels[from.min(self.levels.len())..].iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.reps.len());
            for g in &out {
                for u in &level.reps {
                    next.push(g.mul(u));
                }
            }
            out = next;
        }
        out
    }

    /// Order of the pointwise stabilizer of the first `from` base points.
    pub fn order_from_level(&self, from: usize) -> BigUint {
        self.levels[from.min(self.levels.len())..]
            .iter()
            .map(|l| BigUint::from(l.orbit.len()))
            .product()
    }
}

/// Chain of the normal closure of `subset` in `⟨group⟩`.
pub fn normal_closure(
    group: &[Permutation],
    subset: &[Permutation],
) -> Result<StabilizerChain, PermError> {
    let degree = group.first().ok_or(PermError::NoGenerators)?.degree();
    let mut gens: Vec<Permutation> = vec![Permutation::identity(degree)];
    let mut chain = StabilizerChain::build(&gens)?;
    let mut pending: Vec<Permutation> = subset.to_vec();
    while let Some(h) = pending.pop() {
        if chain.contains(&h)? {
            continue;
        }
        for g in group {
            pending.push(h.conjugate_by(g));
        }
        gens.push(h);
        chain = StabilizerChain::build(&gens)?;
    }
    Ok(chain)
}

/// Chain of the derived subgroup `[G, G]`.
pub fn derived_subgroup(group: &[Permutation]) -> Result<StabilizerChain, PermError> {
    let mut commutators = Vec::new();
    for (i, a) in group.iter().enumerate() {
        for b in &group[i + 1..] {
            commutators.push(a.inverse().mul(&b.inverse()).mul(a).mul(b));
        }
    }
    normal_closure(group, &commutators)
}

fn sift_levels(levels: &[Level], start: usize, mut g: Permutation) -> (Permutation, usize) {
    for (i, level) in levels.iter().enumerate().skip(start) {
        let beta = g.image(level.base_point);
        let idx = level.rep_index[beta as usize];
        if idx == u32::MAX {
            return (g, i);
        }
        g = g.mul(&level.inv_reps[idx as usize]);
    }
    (g, levels.len())
}

struct Builder {
    degree: usize,
    levels: Vec<Level>,
}

impl Builder {
    fn new(degree: usize, generators: &[Permutation], prefix: &[u32]) -> Self {
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        let mut base: Vec<u32> = Vec::new();
        for &b in prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        for g in &gens {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.first_moved_point().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(b, degree)).collect();
        for (i, level) in levels.iter_mut().enumerate() {
            for g in &gens {
                if base[..i].iter().all(|&b| g.image(b) == b) {
                    level.generators.push(g.clone());
                }
            }
            level.extend_orbit();
        }
        Builder { degree, levels }
    }

    fn current_order(&self) -> BigUint {
        self.levels
            .iter()
            .map(|l| BigUint::from(l.orbit.len()))
            .product()
    }

    fn run(&mut self, target: Option<&BigUint>) {
        if self.levels.is_empty() {
            return;
        }
        if let Some(t) = target {
            if &self.current_order() >= t {
                return;
            }
        }
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            match self.find_unsifted(li) {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let b = h.first_moved_point().expect("non-identity residue");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in li + 1..=j {
                        self.levels[l].add_generator(h.clone());
                    }
                    if let Some(t) = target {
                        if &self.current_order() >= t {
                            return;
                        }
                    }
                    i = j as isize;
                }
            }
        }
    }

    /// Checks the pending Schreier generators of level `li`; returns the first
    /// residue that does not sift, together with the level where sifting stopped.
    fn find_unsifted(&mut self, li: usize) -> Option<(Permutation, usize)> {
        let mut pos = 0;
        while pos < self.levels[li].orbit.len() {
            loop {
                let level = &self.levels[li];
                let k = level.verified[pos];
                if k >= level.generators.len() {
                    break;
                }
                let beta = level.orbit[pos];
                let gen = &level.generators[k];
                let u = &level.reps[pos_rep(level, beta)];
                let image = gen.image(beta);
                let v_inv = &level.inv_reps[level.rep_index[image as usize] as usize];
                let schreier = u.mul(gen).mul(v_inv);
                let residue = if schreier.is_identity() {
                    None
                } else {
                    let (h, j) = sift_levels(&self.levels, li + 1, schreier);
                    if j == self.levels.len() && h.is_identity() {
                        None
                    } else {
                        Some((h, j))
                    }
                };
                match residue {
                    None => self.levels[li].verified[pos] = k + 1,
                    Some(found) => return Some(found),
                }
            }
            pos += 1;
        }
        None
    }

    fn finish(self) -> StabilizerChain {
        let order = self.current_order();
        let mut strong_generators: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.generators {
                if !strong_generators.contains(g) {
                    strong_generators.push(g.clone());
                }
            }
        }
        StabilizerChain {
            degree: self.degree,
            levels: self.levels,
            strong_generators,
            order,
        }
    }
}

#[inline]
fn pos_rep(level: &Level, beta: u32) -> usize {
    level.rep_index[beta as usize] as usize
}
