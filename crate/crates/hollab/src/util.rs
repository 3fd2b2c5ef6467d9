//! Small shared helpers: deterministic RNG, primality, factorization.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Default enumeration budget: exhaustive up to this many elements, sampled beyond.
pub const EXHAUSTIVE_BUDGET: usize = 10_000;

/// Sample size used when a check falls back from exhaustive to sampled.
pub const SAMPLE_SIZE: usize = 500;

/// Deterministic RNG for sampled checks. Same seed, same stream.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize(0) undefined");
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Writes n = p^r if possible.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

pub fn pow_u64(base: u64, exp: u32, modulus: u64) -> u64 {
    assert!(modulus > 0);
    let mut acc: u128 = 1;
    let b: u128 = (base % modulus) as u128;
    let m = modulus as u128;
    let mut b2 = b;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b2 % m;
        }
        b2 = b2 * b2 % m;
        e >>= 1;
    }
    acc as u64
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Multiplicative order of a unit mod m. Panics if (a, m) != 1.
pub fn unit_order(a: u64, m: u64) -> u64 {
    assert!(m >= 1 && gcd_u64(a % m, m) == 1, "not a unit mod m");
    let mut x = a % m;
    let mut k = 1u64;
    while x != 1 % m {
        x = (x as u128 * a as u128 % m as u128) as u64;
        k += 1;
    }
    k
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}
