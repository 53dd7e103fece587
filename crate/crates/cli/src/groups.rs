//! Group specifications: named families, generator lists and fixture files.
//!
//! Accepted forms:
//! - `A<n>`, `S<n>`, `C<n>`;
//! - generators in cycle notation separated by `;`, optionally prefixed by an
//!   explicit degree as in `9:(1,2,3);(4,5)` (otherwise the largest point);
//! - `file:<path>` for a generator file (`degree n` line, one permutation per line).

use grr_core::sampler::parse_generators;
use grr_core::Permutation;

use crate::report::CliError;

#[derive(Debug, Clone)]
pub struct GroupSpec {
    pub label: String,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn degree(&self) -> usize {
        self.generators[0].degree()
    }
}

fn cycle(points: impl IntoIterator<Item = u32>) -> String {
    let body: Vec<String> = points.into_iter().map(|p| p.to_string()).collect();
    format!("({})", body.join(","))
}

fn named(family: char, n: usize) -> Result<Vec<String>, CliError> {
    let n32 = n as u32;
    match family {
        'C' if n >= 2 => Ok(vec![cycle(1..=n32)]),
        'S' if n >= 2 => Ok(vec![cycle(1..=n32), "(1,2)".into()]),
        'A' if n >= 3 && n % 2 == 1 => Ok(vec![cycle(1..=n32), "(1,2,3)".into()]),
        'A' if n >= 4 => Ok(vec![cycle(2..=n32), "(1,2,3)".into()]),
        _ => Err(CliError::Usage(format!("{family}{n} is too small"))),
    }
}

fn largest_point(text: &str) -> usize {
    text.split(|c: char| !c.is_ascii_digit())
        .filter_map(|s| s.parse::<usize>().ok())
        .max()
        .unwrap_or(1)
}

pub fn parse_group(text: &str) -> Result<GroupSpec, CliError> {
    let text = text.trim();
    if let Some(path) = text.strip_prefix("file:") {
        let body =
            std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
        let generators =
            parse_generators(&body).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
        if generators.is_empty() {
            return Err(CliError::Usage(format!("{path}: no generators")));
        }
        return Ok(GroupSpec {
            label: text.to_string(),
            generators,
        });
    }
    let mut chars = text.chars();
    if let (Some(family @ ('A' | 'S' | 'C')), rest) = (chars.next(), chars.as_str()) {
        if let Ok(n) = rest.parse::<usize>() {
            let gens = named(family, n)?;
            let generators = gens
                .iter()
                .map(|g| parse_element(g, n))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(GroupSpec {
                label: text.to_string(),
                generators,
            });
        }
    }
    let (degree, list) = match text.split_once(':') {
        Some((d, list)) => {
            let d = d
                .trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad degree prefix in {text:?}")))?;
            (d, list)
        }
        None => (largest_point(text), text),
    };
    let generators = list
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|g| parse_element(g, degree))
        .collect::<Result<Vec<_>, _>>()?;
    if generators.is_empty() {
        return Err(CliError::Usage(format!("no generators in {text:?}")));
    }
    Ok(GroupSpec {
        label: text.to_string(),
        generators,
    })
}

pub fn parse_element(text: &str, degree: usize) -> Result<Permutation, CliError> {
    Permutation::parse_cycles(text, degree).map_err(|e| CliError::Usage(format!("{text:?}: {e}")))
}
