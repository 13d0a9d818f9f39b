//! Integer factorization at desk scale: trial division below 10^6, then
//! Brent's variant of Pollard rho. Inputs above 2^96 are refused.

use crate::error::{Error, Result};

/// Refusal threshold for [`factor_u128`].
pub const FACTOR_LIMIT_BITS: u32 = 96;

const TRIAL_BOUND: u64 = 1_000_000;

fn addmod(a: u128, b: u128, m: u128) -> u128 {
    ((a % m) + (b % m)) % m
}

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return (a % m) * (b % m) % m;
    }
    // peasant multiplication keeps every intermediate below 2^97
    let mut r = 0u128;
    let mut a = a % m;
    let mut b = b % m;
    while b > 0 {
        if b & 1 == 1 {
            r = addmod(r, a, m);
        }
        a = addmod(a, a, m);
        b >>= 1;
    }
    r
}

fn powmod(mut a: u128, mut e: u128, m: u128) -> u128 {
    let mut r = 1u128 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Miller–Rabin with a fixed witness set; deterministic for every input
/// below 3.3·10^24 and overwhelmingly reliable up to the 2^96 guard.
pub fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho; returns a nontrivial factor of a composite n.
fn pollard_brent(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let gcd = |mut a: u128, mut b: u128| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    for c in 1u128.. {
        let f = |x: u128| addmod(mulmod(x, x, n), c, n);
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        let mut power = 1u64;
        let mut lam = 0u64;
        while d == 1 {
            if power == lam {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = f(y);
            lam += 1;
            let diff = if x > y { x - y } else { y - x };
            if diff == 0 {
                break; // cycle without a factor: retry with the next c
            }
            d = gcd(diff, n);
        }
        if d != 1 && d != n {
            return d;
        }
    }
    unreachable!("pollard rho exhausted the parameter space")
}

/// Full factorization as sorted (prime, exponent) pairs.
pub fn factor_u128(n: u128) -> Result<Vec<(u128, u32)>> {
    if n == 0 {
        return Err(Error::ZeroInput("factor_u128(0)"));
    }
    if n >> FACTOR_LIMIT_BITS != 0 {
        return Err(Error::Refused(format!(
            "integer factorization refused above 2^{FACTOR_LIMIT_BITS}"
        )));
    }
    let mut out: Vec<(u128, u32)> = Vec::new();
    let push = |p: u128, out: &mut Vec<(u128, u32)>| {
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => out.push((p, 1)),
        }
    };
    let mut rest = n;
    let mut d = 2u64;
    while d <= TRIAL_BOUND && (d as u128) * (d as u128) <= rest {
        while rest % d as u128 == 0 {
            push(d as u128, &mut out);
            rest /= d as u128;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = Vec::new();
    if rest > 1 {
        stack.push(rest);
    }
    while let Some(m) = stack.pop() {
        if is_prime_u128(m) {
            push(m, &mut out);
        } else {
            let f = pollard_brent(m);
            stack.push(f);
            stack.push(m / f);
        }
    }
    out.sort();
    // the reassembled product must equal the input
    let mut check: u128 = 1;
    for &(p, e) in &out {
        for _ in 0..e {
            check = check.checked_mul(p).ok_or_else(|| {
                Error::Internal("factorization product overflowed".into())
            })?;
        }
    }
    if check != n {
        return Err(Error::Internal("factorization does not reassemble".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorizations() {
        assert_eq!(factor_u128(1).unwrap(), vec![]);
        assert_eq!(factor_u128(12).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(factor_u128(97).unwrap(), vec![(97, 1)]);
        assert_eq!(factor_u128(2u128.pow(12) - 1).unwrap(), vec![(3, 2), (5, 1), (7, 1), (13, 1)]);
    }

    #[test]
    fn large_semiprime_via_rho() {
        // both factors exceed the trial bound
        let p = 1_000_003u128;
        let q = 1_000_033u128;
        assert_eq!(factor_u128(p * q).unwrap(), vec![(p, 1), (q, 1)]);
    }

    #[test]
    fn primality_checks() {
        assert!(is_prime_u128(2));
        assert!(is_prime_u128((1u128 << 61) - 1)); // Mersenne prime
        assert!(!is_prime_u128(1));
        assert!(!is_prime_u128((1u128 << 61) + 1));
    }

    #[test]
    fn size_guard() {
        assert!(factor_u128(1u128 << 100).is_err());
    }
}
