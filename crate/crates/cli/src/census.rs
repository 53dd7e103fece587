//! Batch certification over a list of `(group, x, y)` entries.
//!
//! Each non-comment line reads `label | group | x | y`; a missing `y` is
//! sampled as a random involution of the group.

use grr_core::sampler::SamplerError;
use grr_core::{GroupSampler, Permutation, SamplerConfig};
use rayon::prelude::*;
use serde::Serialize;

use crate::certify::{certify, CertifyOptions, CertifyOutcome};
use crate::groups::{parse_element, parse_group};
use crate::report::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub line: usize,
    pub label: String,
    pub group: String,
    pub x: String,
    pub y: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub label: String,
    pub group: String,
    pub x: String,
    pub y: Option<String>,
    pub y_sampled: bool,
    /// `ok`, `no_involution` or `error`.
    pub status: &'static str,
    pub error: Option<String>,
    pub outcome: Option<CertifyOutcome>,
}

pub fn parse_census(text: &str) -> Result<Vec<CensusEntry>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if !(3..=4).contains(&fields.len()) || fields[..3].iter().any(|f| f.is_empty()) {
            return Err(CliError::Usage(format!(
                "census line {}: expected `label | group | x | y`",
                i + 1
            )));
        }
        out.push(CensusEntry {
            line: i + 1,
            label: fields[0].to_string(),
            group: fields[1].to_string(),
            x: fields[2].to_string(),
            y: fields
                .get(3)
                .filter(|y| !y.is_empty())
                .map(|y| y.to_string()),
        });
    }
    Ok(out)
}

fn run_entry(
    entry: &CensusEntry,
    stream: u64,
    k: usize,
    seed: u64,
    opts: CertifyOptions,
) -> CensusRow {
    let mut row = CensusRow {
        label: entry.label.clone(),
        group: entry.group.clone(),
        x: entry.x.clone(),
        y: entry.y.clone(),
        y_sampled: entry.y.is_none(),
        status: "ok",
        error: None,
        outcome: None,
    };
    let result = (|| -> Result<Option<CertifyOutcome>, CliError> {
        let group = parse_group(&entry.group)?;
        let x = parse_element(&entry.x, group.degree())?;
        let sampler =
            GroupSampler::new(&group.generators).map_err(|e| CliError::Usage(e.to_string()))?;
        let y: Permutation = match &entry.y {
            Some(y) => parse_element(y, group.degree())?,
            None => {
                if sampler.order().bit(0) {
                    return Ok(None);
                }
                let config = SamplerConfig {
                    seed,
                    ..SamplerConfig::default()
                };
                match sampler.random_involution(&config, stream) {
                    Ok(y) => y,
                    Err(SamplerError::NoInvolution(_)) => return Ok(None),
                    Err(e) => return Err(CliError::Usage(e.to_string())),
                }
            }
        };
        row.y = Some(y.to_string());
        let small = sampler.order() <= &num_bigint::BigUint::from(opts.search.vertex_limit);
        let opts = CertifyOptions {
            exhaustive: opts.exhaustive && small,
            ..opts
        };
        certify(&group, &x, &y, k, opts).map(Some)
    })();
    match result {
        Ok(Some(outcome)) => row.outcome = Some(outcome),
        Ok(None) => row.status = "no_involution",
        Err(e) => {
            row.status = "error";
            row.error = Some(e.to_string());
        }
    }
    row
}

/// Runs every entry, in parallel when `jobs > 1`; rows keep file order.
pub fn run_census(
    entries: &[CensusEntry],
    k: usize,
    seed: u64,
    opts: CertifyOptions,
    jobs: usize,
) -> Result<Vec<CensusRow>, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(pool.install(|| {
        entries
            .par_iter()
            .enumerate()
            .map(|(i, e)| run_entry(e, i as u64, k, seed, opts))
            .collect()
    }))
}

pub fn print_rows(rows: &[CensusRow]) {
    println!(
        "{:<12} {:>12} {:>4} {:<26} {:>10} {:>14}",
        "label", "|G|", "p", "verdict", "|Aut(G,S)|", "exhaustive"
    );
    for r in rows {
        match (&r.outcome, r.status) {
            (Some(o), _) => {
                let c = &o.certificate;
                let aut = c.aut_gs_order.map_or("-".to_string(), |a| a.to_string());
                let ex = o.exhaustive.as_ref().map_or("-".to_string(), |e| {
                    format!(
                        "{}{}",
                        if e.is_grr { "GRR" } else { "not GRR" },
                        if e.agrees { "" } else { "!" }
                    )
                });
                println!(
                    "{:<12} {:>12} {:>4} {:<26} {:>10} {:>14}",
                    r.label,
                    c.group_order,
                    c.p,
                    c.verdict.as_str(),
                    aut,
                    ex
                );
            }
            (None, status) => println!(
                "{:<12} {:>12} {:>4} {:<26} {}",
                r.label,
                "-",
                "-",
                status,
                r.error.as_deref().unwrap_or("")
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lines() {
        let text = "# header\n\nA5 | A5 | (1,2,3,4,5) | (1,2)(3,4)\nC7 | C7 | (1,2,3,4,5,6,7)\n";
        let e = parse_census(text).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[0].y.as_deref(), Some("(1,2)(3,4)"));
        assert_eq!(e[1].y, None);
        assert_eq!(e[1].line, 4);
        assert!(parse_census("only | two").is_err());
        assert!(parse_census("").unwrap().is_empty());
    }
}
