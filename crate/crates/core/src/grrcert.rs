//! Certification of `Γ_k(G, x, y) = Cay(G, R ∪ T)` as a graphical regular
//! representation, where `R = {x^{±1}, …, x^{±⌊(k-1)/2⌋}}` and `T = {y}` for
//! odd `k`, `T = {y, x^{-1} y x}` for even `k`.
//!
//! When `G = ⟨x, y⟩` with `|x| = p` prime, `|y| = 2`, `yxy ∉ ⟨x⟩`,
//! `p ≥ 3⌈k/2⌉ - 2` and no proper subgroup of index below 4, the graph is a GRR
//! exactly when `Aut(G, S)` is trivial. Certificates check those hypotheses
//! and compute `Aut(G, S)` group-theoretically; the graph is never built.
//!
//! `Aut(G, S)` needs at most four candidates: an automorphism preserving `S`
//! preserves its elements of order `p`, which are exactly `R`, hence `⟨x⟩`;
//! its restriction to `⟨x⟩` is `x ↦ x^u` with `uR = R`, and under the bound on
//! `p` only `u = ±1` qualify. So `x ↦ x^{±1}` and `y` goes to an involution of
//! `S`, i.e. to `y` or (even `k`) `x^{-1} y x`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::autgraph::{automorphism_group, AutError};
use crate::cayley::{gamma_k_connection_set, CayleyError};
use crate::graph::Graph;
use crate::grouptab::{ElementAutomorphism, GroupError, GroupTable};
use crate::numtheory;
use crate::perm::{derived_subgroup, PermError, Permutation, StabilizerChain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("n = {0} is below 14")]
    DegreeTooSmall(usize),
    #[error("p = {p} is not a prime in the window ((n+4)/2, n-3] = {window:?} for n = {n}")]
    OutsideWindow {
        n: usize,
        p: usize,
        window: Vec<usize>,
    },
    #[error("m = {0} must be odd and at least 5")]
    BadModulusWidth(usize),
    #[error("l = {l} is below (3m-1)/2 for m = {m}")]
    ModulusTooSmall { m: usize, l: usize },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("fixed-point self-check failed: {0}")]
    SelfCheck(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Aut(#[from] AutError),
}

/// Primes `p` with `(n+4)/2 < p ≤ n-3`, ascending.
pub fn prime_window(n: usize) -> Result<Vec<usize>, CertError> {
    if n < 14 {
        return Err(CertError::DegreeTooSmall(n));
    }
    // 2p > n + 4  <=>  p > floor((n + 4) / 2)
    let lo = (n + 4) / 2;
    Ok(numtheory::primes_in(lo as u64, (n - 3) as u64)
        .into_iter()
        .map(|p| p as usize)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityBranch {
    Odd,
    Even,
}

/// The pair `x = (1, …, p)` and `y` of the alternating-group construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnConstruction {
    pub n: usize,
    pub p: usize,
    pub x: Permutation,
    pub y: Permutation,
    pub parity_branch: ParityBranch,
}

impl AnConstruction {
    /// `x^{-1} y x`.
    pub fn conjugated_y(&self) -> Permutation {
        self.y.conjugate_by(&self.x)
    }
}

/// Builds the pair for `A_n`; `p` defaults to the largest window prime.
///
/// Generation of `A_n` is confirmed by the chain order `n!/2`.
pub fn construct_an(n: usize, p: Option<usize>) -> Result<AnConstruction, CertError> {
    let window = prime_window(n)?;
    let p = match p {
        Some(p) if window.contains(&p) => p,
        Some(p) => return Err(CertError::OutsideWindow { n, p, window }),
        None => *window.last().expect("window is nonempty for n >= 14"),
    };
    let x = Permutation::from_cycles(n, &[(0..p as u32).collect()])?;
    // 1-indexed transpositions, shifted to 0-indexed points below.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let parity_branch = if n % 2 == 1 {
        ParityBranch::Odd
    } else {
        pairs.push((p - 2, p - 1));
        ParityBranch::Even
    };
    pairs.push((p, p + 1));
    for i in 2..=n - p {
        pairs.push((i, i + p));
    }
    let cycles: Vec<Vec<u32>> = pairs
        .iter()
        .map(|&(a, b)| vec![a as u32 - 1, b as u32 - 1])
        .collect();
    let y = Permutation::from_cycles(n, &cycles)?;
    let chain = StabilizerChain::build(&[x.clone(), y.clone()])?;
    let half_factorial: BigUint = (3..=n).map(BigUint::from).product();
    if chain.order() != &half_factorial {
        return Err(CertError::SelfCheck(format!(
            "<x, y> has order {} instead of n!/2",
            chain.order()
        )));
    }
    Ok(AnConstruction {
        n,
        p,
        x,
        y,
        parity_branch,
    })
}

/// `(Fix(y), Fix(x^{-1} y x))` as ascending 1-indexed point lists, checked
/// against their closed forms.
pub fn fixed_point_sets(c: &AnConstruction) -> Result<(Vec<u32>, Vec<u32>), CertError> {
    let one_indexed = |perm: &Permutation| -> Vec<u32> {
        perm.fixed_points().into_iter().map(|v| v + 1).collect()
    };
    let fix_y = one_indexed(&c.y);
    let fix_conj = one_indexed(&c.conjugated_y());
    let (n, p) = (c.n as u32, c.p as u32);
    let top = match c.parity_branch {
        ParityBranch::Odd => 0,
        ParityBranch::Even => 2,
    };
    let closed = |first: u32, from: u32, to: u32| -> Vec<u32> {
        std::iter::once(first).chain(from..=to).collect()
    };
    let expect_y = closed(1, n - p + 1, p - 1 - top);
    let expect_conj = closed(2, n - p + 2, p - top);
    if fix_y != expect_y {
        return Err(CertError::SelfCheck(format!(
            "Fix(y) = {fix_y:?}, expected {expect_y:?}"
        )));
    }
    if fix_conj != expect_conj {
        return Err(CertError::SelfCheck(format!(
            "Fix(x^-1 y x) = {fix_conj:?}, expected {expect_conj:?}"
        )));
    }
    Ok((fix_y, fix_conj))
}

/// `|{u ∈ (Z/l)^× : uR = R}|` for `R = {±1, …, ±(m-1)/2} mod l`.
pub fn lemma6_multiplier_count(m: usize, l: usize) -> Result<usize, CertError> {
    if m < 5 || m.is_multiple_of(2) {
        return Err(CertError::BadModulusWidth(m));
    }
    if 2 * l < 3 * m - 1 {
        return Err(CertError::ModulusTooSmall { m, l });
    }
    Ok(stabilizing_multipliers(l, (m - 1) / 2).len())
}

/// Units `u` mod `l` with `u·{±1, …, ±h} = {±1, …, ±h}` (mod `l`).
pub fn stabilizing_multipliers(l: usize, h: usize) -> Vec<usize> {
    let mut in_r = vec![false; l];
    for i in 1..=h {
        in_r[i % l] = true;
        in_r[(l - i % l) % l] = true;
    }
    (1..l)
        .filter(|&u| u.gcd(&l) == 1)
        .filter(|&u| (0..l).all(|r| !in_r[r] || in_r[(u * r) % l]))
        .collect()
}

/// The named hypothesis checks, in serialization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Checks {
    pub two_p_generated: bool,
    pub y_is_involution: bool,
    pub x_has_order_p: bool,
    pub yxy_outside_cyclic: bool,
    pub p_large_enough: bool,
    pub no_small_index_subgroup: bool,
    pub connection_set_size_k: bool,
}

impl Theorem1Checks {
    pub fn all(&self) -> bool {
        self.two_p_generated
            && self.y_is_involution
            && self.x_has_order_p
            && self.yxy_outside_cyclic
            && self.p_large_enough
            && self.no_small_index_subgroup
            && self.connection_set_size_k
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "GRR_certified")]
    GrrCertified,
    #[serde(rename = "not_GRR_autgs_nontrivial")]
    NotGrrAutGsNontrivial,
    #[serde(rename = "hypotheses_failed")]
    HypothesesFailed,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::GrrCertified => "GRR_certified",
            Verdict::NotGrrAutGsNontrivial => "not_GRR_autgs_nontrivial",
            Verdict::HypothesesFailed => "hypotheses_failed",
        }
    }
}

/// A nontrivial element of `Aut(G, S)`, given by the images of `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateWitness {
    pub x_image: String,
    pub y_image: String,
    /// Conjugating permutation, when the automorphism is known to be one.
    pub conjugator: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrrCertificate {
    /// Decimal, since orders of large alternating groups exceed 64 bits.
    pub group_order: String,
    pub k: usize,
    pub p: usize,
    pub checks: Theorem1Checks,
    pub aut_gs_order: Option<u64>,
    pub verdict: Verdict,
    pub witness: Option<CertificateWitness>,
}

fn p_bound(k: usize) -> usize {
    3 * k.div_ceil(2) - 2
}

fn verdict_for(checks: &Theorem1Checks, aut_gs_order: Option<u64>) -> Verdict {
    match (checks.all(), aut_gs_order) {
        (true, Some(1)) => Verdict::GrrCertified,
        (true, Some(_)) => Verdict::NotGrrAutGsNontrivial,
        _ => Verdict::HypothesesFailed,
    }
}

fn table_checks(table: &GroupTable, x: usize, y: usize, k: usize) -> Theorem1Checks {
    let p = table.element_order(x);
    let yxy = table.mul(table.mul(y, x), y);
    Theorem1Checks {
        two_p_generated: table.generates(&[x, y]),
        y_is_involution: table.element_order(y) == 2,
        x_has_order_p: numtheory::is_prime(p as u64),
        yxy_outside_cyclic: !table.cyclic_membership(x, yxy),
        p_large_enough: p >= p_bound(k),
        no_small_index_subgroup: !table.has_subgroup_of_index_lt4(),
        connection_set_size_k: gamma_k_connection_set(table, x, y, k).is_ok_and(|s| s.len() == k),
    }
}

/// `Aut(G, S)` for Theorem-1-shaped `S`, identity first.
pub fn aut_gs_theorem1(
    table: &GroupTable,
    x: usize,
    y: usize,
    k: usize,
) -> Result<Vec<ElementAutomorphism>, CertError> {
    let checks = table_checks(table, x, y, k);
    for (ok, what) in [
        (checks.two_p_generated, "G = <x, y>"),
        (checks.y_is_involution, "y is an involution"),
        (checks.x_has_order_p, "|x| is prime"),
        (checks.p_large_enough, "p >= 3*ceil(k/2) - 2"),
        (checks.connection_set_size_k, "|S| = k"),
    ] {
        if !ok {
            return Err(CertError::Hypothesis(what.to_string()));
        }
    }
    let s = gamma_k_connection_set(table, x, y, k)?;
    let mut y_targets = vec![y];
    if k.is_multiple_of(2) {
        y_targets.push(table.conjugate(y, x));
    }
    let mut found: Vec<ElementAutomorphism> = Vec::new();
    for x_target in [x, table.inverse(x)] {
        for &y_target in &y_targets {
            if let Some(sigma) = table.extend_generator_map(&[x, y], &[x_target, y_target])? {
                if s.members().iter().all(|&m| s.contains(sigma.apply(m))) {
                    found.push(sigma);
                }
            }
        }
    }
    for a in &found {
        for b in &found {
            if !found.contains(&a.then(b)) {
                return Err(CertError::SelfCheck(
                    "Aut(G, S) candidates are not closed".into(),
                ));
            }
        }
    }
    Ok(found)
}

/// The automorphism `x ↦ x^{-1}, y ↦ y`, if one exists; it is then an involution.
pub fn inverting_involution_witness(
    table: &GroupTable,
    x: usize,
    y: usize,
) -> Result<Option<ElementAutomorphism>, CertError> {
    let alpha = table.extend_generator_map(&[x, y], &[table.inverse(x), y])?;
    if let Some(a) = &alpha {
        if !a.then(a).is_identity() {
            return Err(CertError::SelfCheck(
                "inverting automorphism is not an involution".into(),
            ));
        }
    }
    Ok(alpha)
}

/// Runs every hypothesis check on table elements `x`, `y` and, when they all
/// hold, decides GRR-ness from `Aut(G, S)`.
pub fn certify_theorem1(table: &GroupTable, x: usize, y: usize, k: usize) -> GrrCertificate {
    let checks = table_checks(table, x, y, k);
    let mut aut_gs_order = None;
    let mut witness = None;
    if checks.all() {
        if let Ok(auts) = aut_gs_theorem1(table, x, y, k) {
            aut_gs_order = Some(auts.len() as u64);
            witness = auts
                .iter()
                .find(|a| !a.is_identity())
                .map(|a| CertificateWitness {
                    x_image: table.element(a.apply(x)).to_string(),
                    y_image: table.element(a.apply(y)).to_string(),
                    conjugator: None,
                });
        }
    }
    GrrCertificate {
        group_order: table.order().to_string(),
        k,
        p: table.element_order(x),
        checks,
        aut_gs_order,
        verdict: verdict_for(&checks, aut_gs_order),
        witness,
    }
}

/// True iff `|Aut(graph)| = |G|`, i.e. the Cayley graph is a GRR.
pub fn verify_grr_exhaustive(graph: &Graph, table: &GroupTable) -> Result<bool, AutError> {
    let aut = automorphism_group(graph, None)?;
    Ok(aut.order() == &BigUint::from(table.order()))
}

/// `x^i` for `i` in `±1..=±h`, then `y`, then `x^{-1} y x` for even `k`.
fn connection_perms(x: &Permutation, y: &Permutation, k: usize) -> Vec<Permutation> {
    let h = (k - 1) / 2;
    let mut out = Vec::with_capacity(k);
    for i in 1..=h as i64 {
        out.push(x.pow(i));
        out.push(x.pow(-i));
    }
    out.push(y.clone());
    if k.is_multiple_of(2) {
        out.push(y.conjugate_by(x));
    }
    out
}

/// `Aut(G, S)` for `G ∈ {A_n, S_n}`, `n ≥ 7`, `x = (1, …, p)`, as the list of
/// conjugating permutations `g ∈ S_n` with `S^g = S`, identity first.
///
/// Such `g` normalizes `⟨x⟩`, so it acts on `{1, …, p}` as `i ↦ ai + b` (mod p)
/// and arbitrarily on `{p+1, …, n}`; the latter part is found by backtracking
/// on `g y' = y g` for each admissible image `y'` of `y`.
pub fn aut_gs_alternating(
    x: &Permutation,
    y: &Permutation,
    k: usize,
) -> Result<Vec<Permutation>, CertError> {
    let n = x.degree();
    if n == 6 {
        return Err(CertError::Unsupported(
            "n = 6 has outer automorphisms".into(),
        ));
    }
    if n < 7 {
        return Err(CertError::Unsupported(format!("n = {n} is below 7")));
    }
    if y.degree() != n {
        return Err(PermError::DegreeMismatch {
            left: n,
            right: y.degree(),
        }
        .into());
    }
    let cycles = x.cycles();
    let p = x.cycle_lengths().first().copied().unwrap_or(0);
    if cycles.len() != 1 || cycles[0] != (0..p as u32).collect::<Vec<u32>>() {
        return Err(CertError::Hypothesis(
            "x must be the cycle (1, ..., p)".into(),
        ));
    }
    if !numtheory::is_prime(p as u64) {
        return Err(CertError::Hypothesis(format!("|x| = {p} is not prime")));
    }
    if y.order_u64() != Some(2) {
        return Err(CertError::Hypothesis("y must be an involution".into()));
    }
    if k < 5 {
        return Err(CayleyError::ValencyTooSmall(k).into());
    }
    let h = (k - 1) / 2;
    if p <= 2 * h {
        return Err(CayleyError::GeneratorOrderTooSmall {
            order: p,
            bound: 2 * h,
        }
        .into());
    }
    let s = connection_perms(x, y, k);
    let mut sorted: Vec<&[u32]> = s.iter().map(|q| q.images()).collect();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return Err(CertError::Hypothesis(
            "S has fewer than k distinct members".into(),
        ));
    }
    let y_targets: Vec<&Permutation> = s[2 * h..].iter().collect();
    let mut found = Vec::new();
    for a in stabilizing_multipliers(p, h) {
        for b in 0..p {
            let mut partial = vec![u32::MAX; n];
            for (c, slot) in partial.iter_mut().enumerate().take(p) {
                *slot = ((a * c + b) % p) as u32;
            }
            for target in &y_targets {
                let mut solutions = Vec::new();
                extend_conjugator(y, target, partial.clone(), &mut solutions);
                for g in solutions {
                    let g = Permutation::from_images(g).expect("bijection");
                    let preserved = s.iter().all(|m| {
                        let c = m.conjugate_by(&g);
                        sorted.binary_search(&c.images()).is_ok()
                    });
                    if preserved {
                        found.push(g);
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| {
        b.is_identity()
            .cmp(&a.is_identity())
            .then_with(|| a.images().cmp(b.images()))
    });
    found.dedup();
    Ok(found)
}

/// Completes `g` (entries `u32::MAX` unassigned) to all bijections with
/// `g(y(i)) = t(g(i))`, i.e. `g^{-1} y g = t`.
fn extend_conjugator(y: &Permutation, t: &Permutation, mut g: Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let n = g.len();
    let mut used = vec![false; n];
    for &v in &g {
        if v != u32::MAX {
            used[v as usize] = true;
        }
    }
    // Propagate g(y(i)) = t(g(i)) to a fixed point.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            if g[i] == u32::MAX {
                continue;
            }
            let yi = y.image(i as u32) as usize;
            let want = t.image(g[i]);
            if g[yi] == u32::MAX {
                if used[want as usize] {
                    return;
                }
                g[yi] = want;
                used[want as usize] = true;
                changed = true;
            } else if g[yi] != want {
                return;
            }
        }
    }
    match g.iter().position(|&v| v == u32::MAX) {
        None => out.push(g),
        Some(j) => {
            for target in 0..n as u32 {
                if !used[target as usize] {
                    let mut next = g.clone();
                    next[j] = target;
                    extend_conjugator(y, t, next, out);
                }
            }
        }
    }
}

/// Certifies from permutation generators of `G` without enumerating it.
///
/// `Aut(G, S)` is computed only for `G = A_n` or `S_n` with `n ≥ 7`, after
/// conjugating `x` to `(1, …, p)`.
pub fn certify_theorem1_perm(
    group: &[Permutation],
    x: &Permutation,
    y: &Permutation,
    k: usize,
) -> Result<GrrCertificate, CertError> {
    let chain = StabilizerChain::build(group)?;
    let order = chain.order().clone();
    let n = chain.degree();
    let x_order = x.order();
    let p = x_order.to_usize().unwrap_or(usize::MAX);
    let members = chain.contains(x)? && chain.contains(y)?;
    let sub = StabilizerChain::build(&[x.clone(), y.clone()])?;
    let cyclic = StabilizerChain::build(std::slice::from_ref(x))?;
    let yxy = y.mul(x).mul(y);
    let derived = derived_subgroup(group)?;
    let abelian_quotient = &order / derived.order();
    let six = BigUint::from(6u32);
    let s = connection_perms(x, y, k.max(1));
    let mut distinct: Vec<&[u32]> = s.iter().map(|q| q.images()).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let size_ok = k >= 5 && distinct.len() == k && s.iter().all(|q| !q.is_identity());
    let checks = Theorem1Checks {
        two_p_generated: members && sub.order() == &order,
        y_is_involution: y.order_u64() == Some(2),
        x_has_order_p: numtheory::is_prime(p as u64),
        yxy_outside_cyclic: !cyclic.contains(&yxy)?,
        p_large_enough: p >= p_bound(k),
        no_small_index_subgroup: abelian_quotient.gcd(&six).is_one(),
        connection_set_size_k: size_ok,
    };
    let mut aut_gs_order = None;
    let mut witness = None;
    if checks.all() {
        let half_factorial: BigUint = (3..=n).map(BigUint::from).product();
        let symmetric = &half_factorial * BigUint::from(2u32);
        if n < 7 || (order != half_factorial && order != symmetric) {
            return Err(CertError::Unsupported(format!(
                "group of order {order} on {n} points is not A_n or S_n with n >= 7; enumerate it as a table"
            )));
        }
        let cycles = x.cycles();
        if cycles.len() != 1 {
            return Err(CertError::Unsupported("x is not a single p-cycle".into()));
        }
        // h relabels the cycle of x as 0..p and the remaining points after it.
        let mut h = vec![u32::MAX; n];
        for (j, &c) in cycles[0].iter().enumerate() {
            h[c as usize] = j as u32;
        }
        let mut next = p as u32;
        for slot in h.iter_mut() {
            if *slot == u32::MAX {
                *slot = next;
                next += 1;
            }
        }
        let h = Permutation::from_images(h)?;
        let auts = aut_gs_alternating(&x.conjugate_by(&h), &y.conjugate_by(&h), k)?;
        aut_gs_order = Some(auts.len() as u64);
        let h_inv = h.inverse();
        witness = auts.iter().find(|g| !g.is_identity()).map(|g| {
            let original = h.mul(g).mul(&h_inv);
            CertificateWitness {
                x_image: x.conjugate_by(&original).to_string(),
                y_image: y.conjugate_by(&original).to_string(),
                conjugator: Some(original.to_string()),
            }
        });
    }
    Ok(GrrCertificate {
        group_order: order.to_string(),
        k,
        p,
        checks,
        aut_gs_order,
        verdict: verdict_for(&checks, aut_gs_order),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn windows() {
        assert_eq!(prime_window(14).unwrap(), vec![11]);
        assert_eq!(prime_window(20).unwrap(), vec![13, 17]);
        assert_eq!(prime_window(15).unwrap(), vec![11]);
        assert_eq!(prime_window(13), Err(CertError::DegreeTooSmall(13)));
    }

    #[test]
    fn constructions_match_the_formulas() {
        let c = construct_an(14, Some(11)).unwrap();
        assert_eq!(c.y, perm("(9,10)(11,12)(2,13)(3,14)", 14));
        assert_eq!(c.x, perm("(1,2,3,4,5,6,7,8,9,10,11)", 14));
        assert_eq!(c.parity_branch, ParityBranch::Even);
        let c = construct_an(15, Some(11)).unwrap();
        assert_eq!(c.y, perm("(11,12)(2,13)(3,14)(4,15)", 15));
        assert_eq!(c.parity_branch, ParityBranch::Odd);
        assert!(matches!(
            construct_an(14, Some(7)),
            Err(CertError::OutsideWindow { .. })
        ));
        assert_eq!(construct_an(20, None).unwrap().p, 17);
        assert!(c.y.is_even());
    }

    #[test]
    fn fixed_points() {
        let c = construct_an(15, Some(11)).unwrap();
        let (fy, fc) = fixed_point_sets(&c).unwrap();
        assert_eq!(fy, vec![1, 5, 6, 7, 8, 9, 10]);
        assert_eq!(fc, vec![2, 6, 7, 8, 9, 10, 11]);
        let c = construct_an(14, Some(11)).unwrap();
        assert_eq!(fixed_point_sets(&c).unwrap().0, vec![1, 4, 5, 6, 7, 8]);
        let mut broken = c.clone();
        broken.y = perm("(9,10)(11,12)(2,13)", 14);
        assert!(matches!(
            fixed_point_sets(&broken),
            Err(CertError::SelfCheck(_))
        ));
    }

    #[test]
    fn lemma6_examples() {
        assert_eq!(lemma6_multiplier_count(5, 7).unwrap(), 2);
        assert_eq!(lemma6_multiplier_count(5, 8).unwrap(), 2);
        assert_eq!(lemma6_multiplier_count(7, 10).unwrap(), 2);
        assert_eq!(
            lemma6_multiplier_count(5, 6),
            Err(CertError::ModulusTooSmall { m: 5, l: 6 })
        );
        assert_eq!(
            lemma6_multiplier_count(6, 20),
            Err(CertError::BadModulusWidth(6))
        );
        // Below the bound more multipliers appear: m = 5, l = 5 gives all four units.
        assert_eq!(stabilizing_multipliers(5, 2).len(), 4);
    }

    #[test]
    fn bound_matches_lemma6_width() {
        for k in 5..=40usize {
            let m = 2 * ((k - 1) / 2) + 1;
            assert_eq!((3 * m - 1) / 2, p_bound(k), "k = {k}");
            assert_eq!((3 * m - 1) % 2, 0);
        }
    }

    fn a5() -> (GroupTable, usize, usize) {
        let x = perm("(1,2,3,4,5)", 5);
        let y = perm("(1,2)(3,4)", 5);
        let t = GroupTable::enumerate(&[x.clone(), y.clone()], 1000).unwrap();
        let (xi, yi) = (t.index_of(&x).unwrap(), t.index_of(&y).unwrap());
        (t, xi, yi)
    }

    #[test]
    fn inverting_witness_in_a5() {
        let (t, x, y) = a5();
        let w = inverting_involution_witness(&t, x, y).unwrap().unwrap();
        let conj = t.conjugation_automorphism(&perm("(1,4)(2,3)", 5)).unwrap();
        assert_eq!(w, conj);
    }

    #[test]
    fn certify_reports_failed_hypotheses() {
        // A_5 has p = 5 < 3*3 - 2 = 7 for k = 5.
        let (t, x, y) = a5();
        let c = certify_theorem1(&t, x, y, 5);
        assert!(!c.checks.p_large_enough);
        assert_eq!(c.verdict, Verdict::HypothesesFailed);
        assert_eq!(c.aut_gs_order, None);

        // y centralizing x: yxy = x.
        let x = perm("(1,2,3,4,5,6,7)", 9);
        let y = perm("(8,9)", 9);
        let t = GroupTable::enumerate(&[x.clone(), y.clone()], 1000).unwrap();
        let c = certify_theorem1(&t, t.index_of(&x).unwrap(), t.index_of(&y).unwrap(), 5);
        assert!(!c.checks.yxy_outside_cyclic);
        assert!(!c.checks.no_small_index_subgroup);
        assert_eq!(c.verdict, Verdict::HypothesesFailed);
    }

    #[test]
    fn verdict_serialization() {
        assert_eq!(
            serde_json::to_string(&Verdict::GrrCertified).unwrap(),
            "\"GRR_certified\""
        );
        assert_eq!(
            serde_json::to_string(&Verdict::NotGrrAutGsNontrivial).unwrap(),
            "\"not_GRR_autgs_nontrivial\""
        );
        assert_eq!(Verdict::HypothesesFailed.as_str(), "hypotheses_failed");
    }

    #[test]
    fn alternating_construction_is_rigid() {
        for (n, k) in [(14, 5), (15, 5), (14, 6), (16, 7)] {
            let c = construct_an(n, None).unwrap();
            let auts = aut_gs_alternating(&c.x, &c.y, k).unwrap();
            assert_eq!(auts.len(), 1, "n = {n}, k = {k}");
            assert!(auts[0].is_identity());
        }
    }

    #[test]
    fn alternating_symmetric_instance() {
        // On {1, ..., 7} the reflection i -> 2 - i (mod 7) inverts x and
        // commutes with y, so it lies in Aut(G, S).
        let x = perm("(1,2,3,4,5,6,7)", 9);
        let y = perm("(2,7)(3,6)(4,5)(8,9)", 9);
        let auts = aut_gs_alternating(&x, &y, 5).unwrap();
        assert!(auts.len() >= 2);
        assert!(auts[0].is_identity());
        for g in &auts {
            assert_eq!(y.conjugate_by(g), y);
        }
    }

    #[test]
    fn rejects_degree_six() {
        let x = perm("(1,2,3,4,5)", 6);
        let y = perm("(1,2)(3,6)", 6);
        assert!(matches!(
            aut_gs_alternating(&x, &y, 5),
            Err(CertError::Unsupported(_))
        ));
    }

    #[test]
    fn perm_path_certifies_construction() {
        let c = construct_an(14, None).unwrap();
        let cert = certify_theorem1_perm(&[c.x.clone(), c.y.clone()], &c.x, &c.y, 5).unwrap();
        assert!(cert.checks.all(), "{:?}", cert.checks);
        assert_eq!(cert.verdict, Verdict::GrrCertified);
        assert_eq!(cert.aut_gs_order, Some(1));
        assert_eq!(cert.group_order, "43589145600");
    }
}
