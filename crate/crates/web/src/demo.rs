//! The demo computations, independent of the JavaScript glue.

use grr_core::autgraph::automorphism_group;
use grr_core::grrcert::{aut_gs_alternating, construct_an, fixed_point_sets, prime_window};
use grr_core::numtheory::factorize;
use grr_core::sampler::primitive_prime_divisors;
use grr_core::Graph;
use num_integer::Integer;
use serde::Serialize;

/// Largest circulant the page will draw and search.
pub const MAX_CIRCULANT: usize = 400;
/// Largest degree for the alternating construction.
pub const MAX_DEGREE: usize = 200;

#[derive(Debug, Clone, Serialize)]
pub struct AlternatingView {
    pub n: usize,
    pub p: usize,
    pub window: Vec<usize>,
    pub x: String,
    pub y: String,
    /// 1-indexed transpositions of `y`.
    pub transpositions: Vec<[u32; 2]>,
    pub fix_y: Vec<u32>,
    pub fix_conjugated_y: Vec<u32>,
    pub k: usize,
    /// Whether `(n, k)` meets `n ≥ 6⌈k/2⌉ − 12` and `p > 2⌊(k−1)/2⌋`.
    pub admissible: bool,
    pub aut_gs_order: usize,
}

pub fn construct_alternating(n: usize, k: usize) -> Result<AlternatingView, String> {
    if n > MAX_DEGREE {
        return Err(format!("n = {n} exceeds the demo limit of {MAX_DEGREE}"));
    }
    if k < 5 {
        return Err(format!("k = {k}: valency k >= 5 is required"));
    }
    let c = construct_an(n, None).map_err(|e| e.to_string())?;
    let window = prime_window(n).map_err(|e| e.to_string())?;
    let (fix_y, fix_conjugated_y) = fixed_point_sets(&c).map_err(|e| e.to_string())?;
    let half = (k - 1) / 2;
    if c.p <= 2 * half {
        return Err(format!("p = {} is too small for k = {k}", c.p));
    }
    let aut = aut_gs_alternating(&c.x, &c.y, k).map_err(|e| e.to_string())?;
    let transpositions =
        c.y.cycles()
            .into_iter()
            .map(|t| [t[0] + 1, t[1] + 1])
            .collect();
    Ok(AlternatingView {
        n,
        p: c.p,
        window,
        x: c.x.to_string(),
        y: c.y.to_string(),
        transpositions,
        fix_y,
        fix_conjugated_y,
        k,
        admissible: n + 12 >= 6 * k.div_ceil(2),
        aut_gs_order: aut.len(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CirculantView {
    pub n: usize,
    pub connection_set: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub aut_order: String,
    /// Units `u` with `uS = S`; for prime `n` these give all of `Aut(C_n, S)`.
    pub multipliers: Vec<usize>,
    pub is_grr: bool,
}

pub fn circulant(n: usize, jumps: &str) -> Result<CirculantView, String> {
    if !(3..=MAX_CIRCULANT).contains(&n) {
        return Err(format!("n must be in 3..={MAX_CIRCULANT}"));
    }
    let mut set = Vec::new();
    for j in jumps.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let j: usize = j.parse().map_err(|_| format!("bad jump {j:?}"))?;
        let j = j % n;
        if j == 0 {
            return Err("jumps must be nonzero mod n".into());
        }
        set.push(j);
        set.push(n - j);
    }
    set.sort_unstable();
    set.dedup();
    let mut edges = Vec::new();
    for v in 0..n {
        for &s in &set {
            let w = (v + s) % n;
            if v < w {
                edges.push([v, w]);
            }
        }
    }
    let pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e[0], e[1])).collect();
    let graph = Graph::from_edges(n, &pairs).map_err(|e| e.to_string())?;
    let aut = automorphism_group(&graph, None).map_err(|e| e.to_string())?;
    let in_set = |r: usize| set.contains(&r);
    let multipliers = (1..n)
        .filter(|&u| u.gcd(&n) == 1 && set.iter().all(|&s| in_set(u * s % n)))
        .collect();
    Ok(CirculantView {
        n,
        connection_set: set,
        edges,
        aut_order: aut.order().to_string(),
        multipliers,
        is_grr: aut.order() == &n.into(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PpdView {
    pub r: u64,
    pub m: u32,
    pub value: String,
    pub factorization: Vec<(u64, u32)>,
    pub ppd: Vec<u64>,
}

pub fn ppd(r: u64, m: u32) -> Result<PpdView, String> {
    let ppd = primitive_prime_divisors(r, m).map_err(|e| e.to_string())?;
    let value = r
        .checked_pow(m)
        .ok_or_else(|| format!("{r}^{m} does not fit in 64 bits"))?
        - 1;
    Ok(PpdView {
        r,
        m,
        value: value.to_string(),
        factorization: factorize(value),
        ppd,
    })
}
