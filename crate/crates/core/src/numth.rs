//! Small-integer number theory used throughout: primality, divisors, Möbius.

/// Primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

/// Positive divisors of `n >= 1` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Möbius function by trial factorization.
pub fn mobius(mut n: u64) -> i8 {
    assert!(n >= 1);
    let mut sign = 1i8;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `p^g`, or `None` on overflow.
pub fn checked_pow(p: u64, g: u32) -> Option<u64> {
    p.checked_pow(g)
}

/// Base-`p` digits of `n`, least significant first, padded to `len`.
pub fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(n % p);
        n /= p;
    }
    out
}

/// All `(p, g)` with `p` from `primes`, `g >= 1` and `p^g <= q_cap`, in
/// increasing `(p, g)` order.
pub fn prime_power_grid(primes: &[u64], q_cap: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for &p in primes {
        let mut g = 1;
        while checked_pow(p, g).is_some_and(|q| q <= q_cap) {
            out.push((p, g));
            g += 1;
        }
    }
    out.sort_unstable();
    out
}
