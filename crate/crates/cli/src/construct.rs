//! The alternating-group pair `(x, y)` and its `Aut(G, S)` over a range of `k`.

use grr_core::grrcert::{aut_gs_alternating, construct_an, fixed_point_sets, prime_window};
use num_bigint::BigUint;
use serde::Serialize;

use crate::report::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct ValencyResult {
    pub k: usize,
    pub admissible: bool,
    pub aut_gs_order: Option<usize>,
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Construction {
    pub n: usize,
    pub p: usize,
    pub window: Vec<usize>,
    pub parity_branch: String,
    pub group_order: String,
    pub x: String,
    pub y: String,
    pub conjugated_y: String,
    pub fix_y: Vec<u32>,
    pub fix_conjugated_y: Vec<u32>,
    pub valencies: Vec<ValencyResult>,
}

/// Largest `k` with `n ≥ 6⌈k/2⌉ − 12`.
pub fn k_max(n: usize) -> usize {
    let mut k = 5usize;
    while n + 12 >= 6 * (k + 1).div_ceil(2) {
        k += 1;
    }
    k
}

/// Parses `a..b` or `a..=b` (both inclusive) or a single `k`.
pub fn parse_k_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad k range {text:?}; expected e.g. 5..9"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let k = num(text)?;
            (k, k)
        }
    };
    if lo < 5 {
        return Err(CliError::Usage(format!(
            "k = {lo}: valency k >= 5 is required"
        )));
    }
    if hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn construct(
    n: usize,
    p: Option<usize>,
    ks: Option<(usize, usize)>,
) -> Result<Construction, CliError> {
    let c = construct_an(n, p)?;
    let window = prime_window(n)?;
    let (fix_y, fix_conjugated_y) = fixed_point_sets(&c)?;
    let (lo, hi) = ks.unwrap_or((5, k_max(n)));
    let mut valencies = Vec::new();
    for k in lo..=hi {
        let reason = if n + 12 < 6 * k.div_ceil(2) {
            Some(format!("n = {n} < 6*ceil(k/2) - 12"))
        } else if c.p <= 2 * ((k - 1) / 2) {
            Some(format!("p = {} <= 2*floor((k-1)/2)", c.p))
        } else {
            None
        };
        // Outside the theorem the computation is still informative when S is well formed.
        let aut_gs_order = if c.p > 2 * ((k - 1) / 2) {
            Some(aut_gs_alternating(&c.x, &c.y, k)?.len())
        } else {
            None
        };
        if reason.is_none() && aut_gs_order != Some(1) {
            return Err(CliError::Inconsistent(format!(
                "n = {n}, p = {}, k = {k}: |Aut(G,S)| = {aut_gs_order:?}, expected 1",
                c.p
            )));
        }
        valencies.push(ValencyResult {
            k,
            admissible: reason.is_none(),
            aut_gs_order,
            skipped: reason,
        });
    }
    let group_order: BigUint = (3..=n).map(BigUint::from).product();
    Ok(Construction {
        n,
        p: c.p,
        window,
        parity_branch: serde_json::to_value(c.parity_branch)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default(),
        group_order: group_order.to_string(),
        x: c.x.to_string(),
        y: c.y.to_string(),
        conjugated_y: c.conjugated_y().to_string(),
        fix_y,
        fix_conjugated_y,
        valencies,
    })
}

pub fn print_construction(c: &Construction) {
    println!(
        "n = {}, p = {} (window {:?}, {} branch)",
        c.n, c.p, c.window, c.parity_branch
    );
    println!("|G| = n!/2 = {}", c.group_order);
    println!("x            {}", c.x);
    println!("y            {}", c.y);
    println!("Fix(y)       {:?}", c.fix_y);
    println!("Fix(x^-1yx)  {:?}", c.fix_conjugated_y);
    for v in &c.valencies {
        match (&v.skipped, v.aut_gs_order) {
            (None, Some(a)) => println!("k = {:<3} |Aut(G,S)| = {a}", v.k),
            (Some(why), Some(a)) => println!(
                "k = {:<3} |Aut(G,S)| = {a} (outside the theorem: {why})",
                v.k
            ),
            (Some(why), None) => println!("k = {:<3} skipped: {why}", v.k),
            (None, None) => unreachable!("admissible k always has a result"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_ranges() {
        assert_eq!(parse_k_range("5..9").unwrap(), (5, 9));
        assert_eq!(parse_k_range("5..=9").unwrap(), (5, 9));
        assert_eq!(parse_k_range("6").unwrap(), (6, 6));
        assert!(parse_k_range("4..9").is_err());
        assert!(parse_k_range("9..5").is_err());
        assert!(parse_k_range("a..b").is_err());
    }

    #[test]
    fn k_max_values() {
        // 6*ceil(k/2) - 12 <= 14 iff ceil(k/2) <= 4.
        assert_eq!(k_max(14), 8);
        assert_eq!(k_max(17), 8);
        assert_eq!(k_max(18), 10);
        assert_eq!(k_max(30), 14);
    }
}
