//! Small integer helpers: primality, prime powers, factorization.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Prime-power factorization `[(p, k), ...]` in increasing order of `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `(p, k)` with `q = p^k` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power(q).is_some()
}

/// Least prime power `>= m`.
pub fn prime_power_at_least(m: u64) -> u64 {
    let mut q = m.max(2);
    while !is_prime_power(q) {
        q += 1;
    }
    q
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `base^exp` as `u128`, `None` on overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u128> {
    (base as u128).checked_pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power_at_least(25), 25);
        assert_eq!(prime_power_at_least(20), 23);
        assert_eq!(prime_power_at_least(42), 43);
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(15), vec![3, 5]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(9, 3), 84);
    }
}
