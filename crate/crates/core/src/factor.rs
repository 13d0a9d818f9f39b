//! Complete factorization over finite fields: squarefree decomposition
//! (with p-th-root extraction for the inseparable parts), distinct-degree
//! splitting by Frobenius towers, and randomized equal-degree splitting.
//! Splitting takes an explicit seed, so runs are reproducible.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{poly_sort_key, powmod, powmod_big, Polynomial};

/// `unit · ∏ factorᵐ` reproduces the input exactly; factors are monic,
/// irreducible, pairwise distinct, and sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    /// Reassemble the factored polynomial.
    pub fn product(&self) -> Polynomial {
        let mut acc = Polynomial::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m as u64));
        }
        acc
    }
}

fn require_finite(f: &Polynomial, op: &'static str) -> Result<u128> {
    f.field().order().ok_or(Error::UnsupportedField(op))
}

/// Complete factorization of a nonzero polynomial over a finite field.
pub fn factor(f: &Polynomial, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroInput("factor(0)"));
    }
    require_finite(f, "factorization over the rationals")?;
    let unit = f.leading_coeff().unwrap().clone();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_parts(&monic)? {
        for (prod, d) in distinct_degree(&part)? {
            for irr in equal_degree(&prod, d, &mut rng)? {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by_cached_key(|(p, _)| poly_sort_key(p));
    Ok(Factorization { unit, factors })
}

/// Monic squarefree parts with multiplicities; the parts are pairwise
/// coprime and their weighted product is the input.
fn squarefree_parts(f: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    let mut out = Vec::new();
    squarefree_rec(f, 1, &mut out)?;
    Ok(out)
}

fn squarefree_rec(f: &Polynomial, scale: u32, out: &mut Vec<(Polynomial, u32)>) -> Result<()> {
    if f.is_constant() {
        return Ok(());
    }
    let p = f.field().characteristic();
    let d = f.derivative();
    if d.is_zero() {
        // f ∈ F[X^p]: every multiplicity is divisible by p
        let scale = scale
            .checked_mul(p as u32)
            .ok_or_else(|| Error::Refused("multiplicity overflow in squarefree split".into()))?;
        return squarefree_rec(&f.pth_root()?, scale, out);
    }
    let mut c = f.gcd(&d)?;
    let mut w = f.exact_div(&c)?.monic();
    let mut i: u32 = 1;
    while !w.is_constant() {
        let y = w.gcd(&c)?;
        let z = w.exact_div(&y)?.monic();
        if !z.is_constant() {
            out.push((z, scale * i));
        }
        c = c.exact_div(&y)?.monic();
        w = y;
        i += 1;
    }
    if !c.is_constant() {
        // remaining multiplicities are all divisible by p
        let scale = scale
            .checked_mul(p as u32)
            .ok_or_else(|| Error::Refused("multiplicity overflow in squarefree split".into()))?;
        squarefree_rec(&c.pth_root()?, scale, out)?;
    }
    Ok(())
}

/// Distinct-degree split of a monic squarefree polynomial: returns
/// (product of the degree-d irreducible factors, d) pairs.
fn distinct_degree(f: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    let q = require_finite(f, "distinct-degree factorization")?;
    let x = Polynomial::x(f.field());
    let mut out = Vec::new();
    let mut rem = f.clone();
    let mut h = x.rem(&rem)?;
    let mut d = 0usize;
    while rem.degree().map_or(false, |n| n > 0) {
        d += 1;
        if 2 * d > rem.degree().unwrap() {
            // what is left is a single irreducible
            out.push((rem.clone(), rem.degree().unwrap()));
            break;
        }
        h = powmod(&h, q, &rem)?;
        let g = rem.gcd(&h.sub(&x))?;
        if !g.is_constant() {
            out.push((g.clone(), d));
            rem = rem.exact_div(&g)?.monic();
            if rem.degree().map_or(false, |n| n > 0) {
                h = h.rem(&rem)?;
            }
        }
    }
    Ok(out)
}

fn random_poly_below(field: &FieldSpec, deg_bound: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let q = field.order().unwrap();
    let coeffs = (0..deg_bound)
        .map(|_| field.element_from_index(rng.gen_range(0..q)).unwrap())
        .collect();
    Polynomial::from_coeffs(field, coeffs)
}

/// Cantor–Zassenhaus equal-degree splitting of a monic product of distinct
/// irreducibles, all of degree d. Odd characteristic uses the power map
/// r^((q^d−1)/2) − 1; characteristic 2 uses the additive trace.
fn equal_degree(f: &Polynomial, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Polynomial>> {
    let n = match f.degree() {
        None | Some(0) => return Ok(Vec::new()),
        Some(n) => n,
    };
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field().clone();
    let q = field.order().unwrap();
    loop {
        let r = random_poly_below(&field, n, rng);
        if r.is_constant() {
            continue;
        }
        let g1 = f.gcd(&r)?;
        let split = if !g1.is_constant() && g1.degree() < f.degree() {
            Some(g1)
        } else {
            let s = if field.characteristic() == 2 {
                // trace of r from F_{q^d} down to F_2
                let bits = d as u32 * field.ext_degree();
                let mut t = r.rem(f)?;
                let mut acc = t.clone();
                for _ in 1..bits {
                    t = powmod(&t, 2, f)?;
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (BigUint::from(q).pow(d as u32) - BigUint::from(1u32)) / BigUint::from(2u32);
                powmod_big(&r, &e, f)?.sub(&Polynomial::one(&field))
            };
            let g = f.gcd(&s)?;
            if !g.is_constant() && g.degree() < f.degree() {
                Some(g)
            } else {
                None
            }
        };
        if let Some(g) = split {
            let rest = f.exact_div(&g)?.monic();
            let mut parts = equal_degree(&g, d, rng)?;
            parts.extend(equal_degree(&rest, d, rng)?);
            return Ok(parts);
        }
    }
}

/// Rabin test over F_q.
pub fn is_irreducible(f: &Polynomial) -> Result<bool> {
    let q = require_finite(f, "irreducibility over the rationals")?;
    let n = match f.degree() {
        None | Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(n) => n,
    };
    let x = Polynomial::x(f.field()).rem(f)?;
    let frob_tower = |steps: usize| -> Result<Polynomial> {
        let mut t = x.clone();
        for _ in 0..steps {
            t = powmod(&t, q, f)?;
        }
        Ok(t)
    };
    if frob_tower(n)? != x {
        return Ok(false);
    }
    let mut rest = n;
    let mut r = 2usize;
    let mut prime_divs = Vec::new();
    while r * r <= rest {
        if rest % r == 0 {
            prime_divs.push(r);
            while rest % r == 0 {
                rest /= r;
            }
        }
        r += 1;
    }
    if rest > 1 {
        prime_divs.push(rest);
    }
    for r in prime_divs {
        let t = frob_tower(n / r)?;
        if !f.gcd(&t.sub(&x))?.is_constant() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One monic irreducible factor of degree exactly n, if any exists: the
/// lexicographically smallest by coefficient sequence, for determinism.
/// Short-circuits through the Frobenius tower gcds instead of factoring
/// completely.
pub fn irreducible_factor_of_degree(f: &Polynomial, n: usize) -> Result<Option<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroInput("irreducible_factor_of_degree(0)"));
    }
    let q = require_finite(f, "irreducible_factor_of_degree over the rationals")?;
    if n == 0 || f.degree().unwrap() < n {
        return Ok(None);
    }
    // same factor support, multiplicities dropped
    let mut rem = f.radical()?;
    let x = Polynomial::x(f.field());
    let mut h = x.rem(&rem)?;
    let mut component = Polynomial::one(f.field());
    for i in 1..=n {
        if rem.degree().map_or(true, |dr| dr < i) {
            break;
        }
        h = powmod(&h, q, &rem)?;
        let g = rem.gcd(&h.sub(&x))?;
        if i == n {
            component = g;
            break;
        }
        if !g.is_constant() {
            rem = rem.exact_div(&g)?.monic();
            if rem.degree().map_or(false, |dr| dr > 0) {
                h = h.rem(&rem)?;
            }
        }
    }
    if component.is_constant() {
        // the whole remainder may itself be a single degree-n irreducible
        if rem.degree() == Some(n) && is_irreducible(&rem)? {
            return Ok(Some(rem));
        }
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut parts = equal_degree(&component, n, &mut rng)?;
    parts.sort_by_cached_key(poly_sort_key);
    Ok(parts.into_iter().next())
}
