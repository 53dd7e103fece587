//! Primitive prime divisors and seeded Monte Carlo sampling in permutation
//! groups.
//!
//! Random elements are words of fixed length in the generators and their
//! inverses. Every draw is driven by a ChaCha8 stream selected by
//! `(seed, stream_id)`, so trials can run on any number of threads and still
//! reproduce bit for bit.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numtheory;
use crate::perm::{PermError, Permutation, StabilizerChain};

pub const DEFAULT_WORD_LENGTH: usize = 64;
pub const INVOLUTION_DRAW_CAP: usize = 10_000;
pub const ORDER_DRAW_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SamplerError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent m = {0} must be at least 2")]
    ExponentTooSmall(u32),
    #[error("{r}^{m} - 1 does not fit in 64 bits")]
    TooLarge { r: u64, m: u32 },
    #[error("no element of even order in {0} draws; the group may have odd order")]
    NoInvolution(usize),
    #[error("element is not in the group")]
    NotMember,
    #[error("trials must be positive")]
    NoTrials,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("malformed generator file, line {line}: {reason}")]
    Fixture { line: usize, reason: String },
}

/// All primes `p | r^m - 1` such that `r` has multiplicative order `m` mod `p`.
pub fn primitive_prime_divisors(r: u64, m: u32) -> Result<Vec<u64>, SamplerError> {
    if !numtheory::is_prime(r) {
        return Err(SamplerError::NotPrime(r));
    }
    if m < 2 {
        return Err(SamplerError::ExponentTooSmall(m));
    }
    let value = r.checked_pow(m).ok_or(SamplerError::TooLarge { r, m })? - 1;
    Ok(numtheory::factorize(value)
        .into_iter()
        .map(|(p, _)| p)
        .filter(|&p| numtheory::multiplicative_order(r % p, p) == Some(m as u64))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub trials: usize,
    pub word_length: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            seed: 0,
            trials: 200,
            word_length: DEFAULT_WORD_LENGTH,
        }
    }
}

/// A permutation group given by generators, with its stabilizer chain.
#[derive(Debug, Clone)]
pub struct GroupSampler {
    letters: Vec<Permutation>,
    generators: Vec<Permutation>,
    chain: StabilizerChain,
}

/// Outcome of [`GroupSampler::estimate_generation_probability`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationEstimate {
    pub successes: usize,
    pub trials: usize,
    pub estimate: f64,
}

impl GroupSampler {
    pub fn new(generators: &[Permutation]) -> Result<Self, SamplerError> {
        let chain = StabilizerChain::build(generators)?;
        let mut letters = Vec::with_capacity(2 * generators.len());
        for g in generators {
            letters.push(g.clone());
            letters.push(g.inverse());
        }
        Ok(GroupSampler {
            letters,
            generators: generators.to_vec(),
            chain,
        })
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn order(&self) -> &BigUint {
        self.chain.order()
    }

    pub fn degree(&self) -> usize {
        self.chain.degree()
    }

    fn rng(config: &SamplerConfig, stream_id: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(stream_id);
        rng
    }

    fn draw(&self, rng: &mut ChaCha8Rng, word_length: usize) -> Permutation {
        let mut images: Vec<u32> = (0..self.degree() as u32).collect();
        for _ in 0..word_length {
            let letter = &self.letters[rng.gen_range(0..self.letters.len())];
            for v in images.iter_mut() {
                *v = letter.image(*v);
            }
        }
        Permutation::from_images(images).expect("product of permutations")
    }

    /// A random word of `config.word_length` letters.
    pub fn random_element(&self, config: &SamplerConfig, stream_id: u64) -> Permutation {
        self.draw(&mut Self::rng(config, stream_id), config.word_length)
    }

    /// `g^(|g|/2)` for the first drawn `g` of even order.
    pub fn random_involution(
        &self,
        config: &SamplerConfig,
        stream_id: u64,
    ) -> Result<Permutation, SamplerError> {
        let mut rng = Self::rng(config, stream_id);
        let two = BigUint::from(2u32);
        for _ in 0..INVOLUTION_DRAW_CAP {
            let g = self.draw(&mut rng, config.word_length);
            let order = g.order();
            if order.is_even() {
                return Ok(g.pow_big(&(order / &two)));
            }
        }
        Err(SamplerError::NoInvolution(INVOLUTION_DRAW_CAP))
    }

    /// An element of order `p`, from the first drawn `g` with `p | |g|`.
    pub fn element_of_order(&self, p: u64, config: &SamplerConfig) -> Option<Permutation> {
        let mut rng = Self::rng(config, 0);
        let p_big = BigUint::from(p);
        for _ in 0..ORDER_DRAW_CAP {
            let g = self.draw(&mut rng, config.word_length);
            let order = g.order();
            if (&order % &p_big).is_zero() {
                return Some(g.pow_big(&(order / &p_big)));
            }
        }
        None
    }

    /// Fraction of `config.trials` random involutions `y` with `⟨x, y⟩ = G`.
    /// Trial `t` draws its involution from stream `t`.
    pub fn estimate_generation_probability(
        &self,
        x: &Permutation,
        config: &SamplerConfig,
    ) -> Result<GenerationEstimate, SamplerError> {
        if config.trials == 0 {
            return Err(SamplerError::NoTrials);
        }
        if !self.chain.contains(x)? {
            return Err(SamplerError::NotMember);
        }
        let outcomes: Vec<Result<bool, SamplerError>> = (0..config.trials as u64)
            .into_par_iter()
            .map(|t| {
                let y = self.random_involution(config, t)?;
                Ok(StabilizerChain::order_reaches(
                    &[x.clone(), y],
                    self.order(),
                )?)
            })
            .collect();
        let mut successes = 0;
        for o in outcomes {
            successes += usize::from(o?);
        }
        Ok(GenerationEstimate {
            successes,
            trials: config.trials,
            estimate: successes as f64 / config.trials as f64,
        })
    }
}

/// Parses the generator file format: a `degree n` line, then one
/// permutation per line in cycle notation. Blank lines and `#` comments
/// are skipped.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>, SamplerError> {
    let mut degree: Option<usize> = None;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fail = |reason: String| SamplerError::Fixture {
            line: i + 1,
            reason,
        };
        match degree {
            None => {
                let n = line
                    .strip_prefix("degree")
                    .map(str::trim)
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| fail("expected `degree n`".into()))?;
                degree = Some(n);
            }
            Some(n) => {
                out.push(Permutation::parse_cycles(line, n).map_err(|e| fail(e.to_string()))?)
            }
        }
    }
    if degree.is_none() {
        return Err(SamplerError::Fixture {
            line: 0,
            reason: "missing `degree n` line".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn a5() -> GroupSampler {
        GroupSampler::new(&[perm("(1,2,3,4,5)", 5), perm("(1,2)(3,4)", 5)]).unwrap()
    }

    #[test]
    fn ppd_examples() {
        assert_eq!(primitive_prime_divisors(2, 4).unwrap(), vec![5]);
        assert_eq!(primitive_prime_divisors(2, 6).unwrap(), Vec::<u64>::new());
        assert_eq!(primitive_prime_divisors(3, 5).unwrap(), vec![11]);
        assert_eq!(primitive_prime_divisors(2, 9).unwrap(), vec![73]);
        assert_eq!(
            primitive_prime_divisors(4, 3),
            Err(SamplerError::NotPrime(4))
        );
        assert_eq!(
            primitive_prime_divisors(2, 64),
            Err(SamplerError::TooLarge { r: 2, m: 64 })
        );
    }

    #[test]
    fn word_sampling_covers_a5() {
        let s = a5();
        let cfg = SamplerConfig::default();
        let seen: HashSet<Permutation> = (0..10_000).map(|t| s.random_element(&cfg, t)).collect();
        assert_eq!(seen.len(), 60);
    }

    #[test]
    fn two_element_group() {
        let g = perm("(1,2)", 3);
        let s = GroupSampler::new(std::slice::from_ref(&g)).unwrap();
        let cfg = SamplerConfig::default();
        for t in 0..20 {
            let e = s.random_element(&cfg, t);
            assert!(e.is_identity() || e == g);
        }
        let id = GroupSampler::new(&[Permutation::identity(4)]).unwrap();
        assert!(id.random_element(&cfg, 3).is_identity());
    }

    #[test]
    fn involutions() {
        let s = a5();
        let cfg = SamplerConfig::default();
        let mut seen = HashSet::new();
        for t in 0..1000 {
            let v = s.random_involution(&cfg, t).unwrap();
            assert_eq!(v.order_u64(), Some(2));
            assert!(s.chain().contains(&v).unwrap());
            seen.insert(v);
        }
        assert_eq!(seen.len(), 15);
        let c7 = GroupSampler::new(&[perm("(1,2,3,4,5,6,7)", 7)]).unwrap();
        assert_eq!(
            c7.random_involution(&cfg, 0),
            Err(SamplerError::NoInvolution(INVOLUTION_DRAW_CAP))
        );
    }

    #[test]
    fn elements_of_given_order() {
        let s = a5();
        let cfg = SamplerConfig::default();
        let five = s.element_of_order(5, &cfg).unwrap();
        assert_eq!(five.cycle_lengths(), vec![5]);
        assert_eq!(s.element_of_order(7, &cfg), None);
    }

    #[test]
    fn determinism_and_streams() {
        let s = a5();
        let cfg = SamplerConfig {
            seed: 9,
            ..SamplerConfig::default()
        };
        assert_eq!(s.random_element(&cfg, 4), s.random_element(&cfg, 4));
        let firsts: HashSet<Permutation> = (0..50).map(|t| s.random_element(&cfg, t)).collect();
        assert!(firsts.len() > 10);
    }

    #[test]
    fn estimate_errors() {
        let c7 = GroupSampler::new(&[perm("(1,2,3,4,5,6,7)", 7)]).unwrap();
        let x = perm("(1,2,3,4,5,6,7)", 7);
        assert!(matches!(
            c7.estimate_generation_probability(&x, &SamplerConfig::default()),
            Err(SamplerError::NoInvolution(_))
        ));
        let s = a5();
        assert_eq!(
            s.estimate_generation_probability(&perm("(1,2)", 5), &SamplerConfig::default()),
            Err(SamplerError::NotMember)
        );
    }

    #[test]
    fn fixture_format() {
        let g = parse_generators("# test\ndegree 5\n(1,2,3,4,5)\n\n(1,2)(3,4)\n").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[1], perm("(1,2)(3,4)", 5));
        assert!(parse_generators("(1,2)\n").is_err());
        assert!(matches!(
            parse_generators("degree 3\n(1,4)\n"),
            Err(SamplerError::Fixture { line: 2, .. })
        ));
    }
}
