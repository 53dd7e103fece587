//! Small integer number theory on `u64`: primality, factorization and
//! multiplicative orders.

use num_integer::Integer;

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in `(lo, hi]`, ascending, by a sieve of Eratosthenes up to `hi`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    let hi = hi as usize;
    if hi < 2 || lo as usize >= hi {
        return Vec::new();
    }
    let mut composite = vec![false; hi + 1];
    let mut i = 2;
    while i * i <= hi {
        if !composite[i] {
            for j in (i * i..=hi).step_by(i) {
                composite[j] = true;
            }
        }
        i += 1;
    }
    (lo as usize + 1..=hi)
        .filter(|&n| n >= 2 && !composite[n])
        .map(|n| n as u64)
        .collect()
}

fn pollard_brent(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
    let m = 128;
    let mut g = 1;
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += m;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13] {
        while n.is_multiple_of(p) {
            primes.push(p);
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            primes.push(m);
            continue;
        }
        let d = (1..)
            .find_map(|c| pollard_brent(m, c))
            .expect("composite has a factor");
        stack.push(d);
        stack.push(m / d);
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Least `d ≥ 1` with `a^d ≡ 1 (mod m)`; `None` unless `gcd(a, m) = 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m < 2 || a.gcd(&m) != 1 {
        return None;
    }
    let phi = euler_phi(m);
    let mut d = phi;
    for (p, _) in factorize(phi) {
        while d.is_multiple_of(p) && pow_mod(a, d / p, m) == 1 {
            d /= p;
        }
    }
    Some(d)
}

pub fn euler_phi(m: u64) -> u64 {
    factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn primes() {
        assert_eq!(primes_in(0, 30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_in(9, 11), vec![11]);
        assert!(primes_in(11, 11).is_empty());
        let sieved = primes_in(1000, 5000);
        let tested: Vec<u64> = (1001..=5000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, tested);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(1));
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(511), vec![(7, 1), (73, 1)]);
        assert_eq!(factorize(242), vec![(2, 1), (11, 2)]);
        assert_eq!(factorize(1), vec![]);
        // 7^20 - 1
        let n = 79_792_266_297_612_000u64;
        let f = factorize(n);
        assert_eq!(f.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
        assert!(f.iter().all(|&(p, _)| is_prime(p)));
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(2, 5), Some(4));
        assert_eq!(multiplicative_order(3, 11), Some(5));
        assert_eq!(multiplicative_order(2, 73), Some(9));
        assert_eq!(multiplicative_order(2, 6), None);
    }

    proptest! {
        #[test]
        fn factorize_matches_trial_division(n in 1u64..5_000_000) {
            prop_assert_eq!(factorize(n), trial_division(n));
        }

        #[test]
        fn order_is_minimal(a in 1u64..200, m in 2u64..500) {
            if let Some(d) = multiplicative_order(a, m) {
                prop_assert_eq!(pow_mod(a, d, m), 1);
                for e in 1..d {
                    prop_assert_ne!(pow_mod(a, e, m), 1);
                }
            } else {
                prop_assert_ne!(a.gcd(&m), 1);
            }
        }
    }
}
