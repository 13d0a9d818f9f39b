//! Construction of high-order elements of F_{q^n}: a coprime pair (g, h) of
//! degree at most d = ⌈2 log_q n⌉ whose composite X^m·h − g has an
//! irreducible factor of degree n gives a root α with α^(m^i) = f^(i)(α),
//! and the count of distinct power products of iterates bounds ord(α) from
//! below. All logarithms are integer-exact; the lower bound is carried as
//! an exact rational and its ceiling.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factor::irreducible_factor_of_degree;
use crate::field::FieldSpec;
use crate::intfactor::factor_u128;
use crate::iterinv::classify_exceptional;
use crate::poly::{powmod, Polynomial};
use crate::ratfunc::RationalFunction;

/// Derived parameters of the construction at (q, n).
#[derive(Debug, Clone)]
pub struct HighOrderParams {
    pub q: u128,
    pub n: u64,
    /// ⌈2 log_q n⌉, the degree budget for g and h.
    pub d: u64,
    /// q^⌈log_q n⌉, the least power of q that is ≥ n.
    pub m: u128,
    /// ⌊log_d n⌋.
    pub t: u64,
    /// binom(n+t−1, t) · ∏ d^(−i), kept exact.
    pub lambe_bound: BigRational,
    /// ⌈lambe_bound⌉, the certified order lower bound.
    pub order_bound: BigUint,
}

pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Integer-exact logs: d is the least k with q^k ≥ n², m the least power
/// of q that is ≥ n, t the greatest k with d^k ≤ n.
pub fn derive_params(q: u128, n: u64) -> Result<HighOrderParams> {
    if q < 2 {
        return Err(Error::Domain("q must be a prime power >= 2".into()));
    }
    if n < 2 {
        return Err(Error::Domain("high-order construction needs n >= 2".into()));
    }
    let n_sq = (n as u128) * (n as u128);
    let mut d = 0u64;
    let mut pw: u128 = 1;
    while pw < n_sq {
        pw = pw
            .checked_mul(q)
            .ok_or_else(|| Error::Refused("q^d overflows while deriving d".into()))?;
        d += 1;
    }
    if d < 2 {
        return Err(Error::Domain(format!(
            "degenerate parameters: d = ceil(2 log_q n) = {d} < 2 (q too large relative to n)"
        )));
    }
    let mut m: u128 = 1;
    while m < n as u128 {
        m = m
            .checked_mul(q)
            .ok_or_else(|| Error::Refused("q^k overflows while deriving m".into()))?;
    }
    let mut t = 0u64;
    let mut dp: u128 = 1;
    loop {
        dp = match dp.checked_mul(d as u128) {
            Some(v) if v <= n as u128 => v,
            _ => break,
        };
        t += 1;
    }
    let numer = binomial(n + t - 1, t);
    let denom = BigUint::from(d).pow((t * (t.saturating_sub(1)) / 2) as u32);
    let lambe_bound = BigRational::new(numer.into(), denom.into());
    let order_bound = lambe_bound.ceil().to_integer().magnitude().clone();
    Ok(HighOrderParams { q, n, d, m, t, lambe_bound, order_bound })
}

/// Lambe's lower bound binom(m+r, r)·∏ 1/x_i on the number of non-negative
/// solutions of Σ a_i x_i ≤ m; requires gcd(x) = 1.
pub fn lambe_lower_bound(m: u64, x: &[u64]) -> Result<BigRational> {
    if x.is_empty() || x.iter().any(|&v| v == 0) {
        return Err(Error::Domain("lambe bound needs positive weights".into()));
    }
    let g = x.iter().fold(0u64, |acc, &v| num_integer::gcd(acc, v));
    if g != 1 {
        return Err(Error::Domain(format!("lambe bound requires gcd(x) = 1, got {g}")));
    }
    let r = x.len() as u64;
    let mut denom = BigUint::one();
    for &xi in x {
        denom *= BigUint::from(xi);
    }
    Ok(BigRational::new(binomial(m + r, r).into(), denom.into()))
}

/// Exact count of non-negative solutions of Σ a_i x_i ≤ m by dynamic
/// programming over prefix sums.
pub fn dio_exact_count(m: u64, x: &[u64]) -> u128 {
    assert!(x.iter().all(|&v| v > 0), "weights must be positive");
    let m = m as usize;
    let mut ways = vec![0u128; m + 1];
    ways[0] = 1;
    for &xi in x {
        let xi = xi as usize;
        for s in xi..=m {
            ways[s] += ways[s - xi];
        }
    }
    ways.iter().sum()
}

/// Build F_q for a prime power q.
pub fn field_for_q(q: u128) -> Result<FieldSpec> {
    let fact = factor_u128(q)?;
    match fact.as_slice() {
        [(p, 1)] => {
            let p = p
                .to_u64()
                .ok_or_else(|| Error::Refused("prime exceeds the supported bound".into()))?;
            FieldSpec::prime(p)
        }
        [(p, k)] => {
            let p = p
                .to_u64()
                .ok_or_else(|| Error::Refused("prime exceeds the supported bound".into()))?;
            FieldSpec::extension_default(p, *k)
        }
        _ => Err(Error::Domain(format!("{q} is not a prime power"))),
    }
}

fn poly_from_index(field: &FieldSpec, mut idx: u128, len: usize) -> Polynomial {
    let q = field.order().unwrap();
    let mut coeffs = Vec::with_capacity(len);
    for _ in 0..len {
        coeffs.push(field.element_from_index(idx % q).unwrap());
        idx /= q;
    }
    Polynomial::from_coeffs(field, coeffs)
}

/// The membership test for the candidate set T: coprime, degree ≥ 2 after
/// reduction, and no excluded shape.
pub fn pair_admissible(g: &Polynomial, h: &Polynomial) -> Result<Option<RationalFunction>> {
    if g.is_zero() || h.is_zero() {
        return Ok(None);
    }
    if !g.gcd(h)?.is_constant() {
        return Ok(None);
    }
    let f = RationalFunction::reduce(g.clone(), h.clone())?;
    if f.degree() < 2 {
        return Ok(None);
    }
    if classify_exceptional(&f)?.shape.excludes_psi_bound() {
        return Ok(None);
    }
    Ok(Some(f))
}

/// Deterministic stream of admissible pairs (g, h), both of degree ≤ d,
/// enumerated by coefficient vectors read as base-q integers (g major).
pub struct CandidatePairs {
    field: FieldSpec,
    len: usize,
    space: u128,
    g_idx: u128,
    h_idx: u128,
}

pub fn candidate_pairs(field: &FieldSpec, d: u64) -> Result<CandidatePairs> {
    let q = field.order().ok_or(Error::UnsupportedField("candidate_pairs"))?;
    let len = d as usize + 1;
    let mut space: u128 = 1;
    for _ in 0..len {
        space = space
            .checked_mul(q)
            .ok_or_else(|| Error::Refused("candidate space exceeds u128".into()))?;
    }
    Ok(CandidatePairs { field: field.clone(), len, space, g_idx: 1, h_idx: 0 })
}

impl Iterator for CandidatePairs {
    type Item = (Polynomial, Polynomial, RationalFunction);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.h_idx += 1;
            if self.h_idx >= self.space {
                self.h_idx = 1;
                self.g_idx += 1;
            }
            if self.g_idx >= self.space {
                return None;
            }
            let g = poly_from_index(&self.field, self.g_idx, self.len);
            let h = poly_from_index(&self.field, self.h_idx, self.len);
            if let Ok(Some(f)) = pair_admissible(&g, &h) {
                return Some((g, h, f));
            }
        }
    }
}

/// A self-checking record of one successful construction.
#[derive(Debug, Clone)]
pub struct HighOrderCertificate {
    pub params: HighOrderParams,
    pub g: Polynomial,
    pub h: Polynomial,
    pub composite: Polynomial,
    pub factor: Polynomial,
    pub order_bound: BigUint,
    pub verified_order: Option<u128>,
    pub frobenius_ok: bool,
}

#[derive(Debug, Clone)]
pub enum ConstructOutcome {
    Certificate(Box<HighOrderCertificate>),
    /// No candidate within the limit worked; evidence against the
    /// conjecture at this (q, n), reported rather than treated as an error.
    Exhausted { pairs_tried: u64 },
}

/// X^m·h − g.
fn composite_poly(g: &Polynomial, h: &Polynomial, m: u128) -> Result<Polynomial> {
    let m = m
        .to_usize()
        .filter(|&v| v <= (1usize << 20))
        .ok_or_else(|| Error::Refused("composite degree exceeds the cap".into()))?;
    Ok(h.shift_up(m).sub(g))
}

/// Check α^(m^i) = f^(i)(α) in F_q\[X\]/(factor) for 0 ≤ i ≤ t.
fn frobenius_checks(
    f: &RationalFunction,
    factor: &Polynomial,
    m: u128,
    t: u64,
) -> Result<bool> {
    let x = Polynomial::x(f.field());
    let mut m_pow: u128 = 1;
    for i in 0..=t {
        let lhs = powmod(&x, m_pow, factor)?;
        let it = f.iterate(i as usize)?;
        let gi = it.numer().rem(factor)?;
        let hi = it.denom().rem(factor)?;
        let (gcd, inv, _) = hi.extended_gcd(factor)?;
        if !gcd.is_one() {
            return Err(Error::Internal(
                "iterate denominator shares a factor with the modulus".into(),
            ));
        }
        let rhs = gi.mul(&inv).rem(factor)?;
        if lhs != rhs {
            return Ok(false);
        }
        if i < t {
            m_pow = m_pow
                .checked_mul(m)
                .ok_or_else(|| Error::Refused("m^i overflows".into()))?;
        }
    }
    Ok(true)
}

/// Search candidate pairs in deterministic order for one whose composite
/// has an irreducible factor of degree n.
pub fn construct(q: u128, n: u64, pair_limit: u64) -> Result<ConstructOutcome> {
    let params = derive_params(q, n)?;
    let field = field_for_q(q)?;
    let mut tried = 0u64;
    for (g, h, f) in candidate_pairs(&field, params.d)? {
        if tried >= pair_limit {
            return Ok(ConstructOutcome::Exhausted { pairs_tried: tried });
        }
        tried += 1;
        let composite = composite_poly(&g, &h, params.m)?;
        if composite.is_zero() {
            continue;
        }
        if let Some(factor) = irreducible_factor_of_degree(&composite, n as usize)? {
            let frobenius_ok = frobenius_checks(&f, &factor, params.m, params.t)?;
            if !frobenius_ok {
                return Err(Error::Internal(
                    "Frobenius identity failed on a constructed certificate".into(),
                ));
            }
            let order_bound = params.order_bound.clone();
            return Ok(ConstructOutcome::Certificate(Box::new(HighOrderCertificate {
                params,
                g,
                h,
                composite,
                factor,
                order_bound,
                verified_order: None,
                frobenius_ok,
            })));
        }
    }
    Ok(ConstructOutcome::Exhausted { pairs_tried: tried })
}

/// Exact multiplicative order of α = X mod factor in F_{q^n}; asserts the
/// certified lower bound. A violation would falsify the order theorem and
/// is surfaced as an internal error.
pub fn verify_order(cert: &HighOrderCertificate) -> Result<u128> {
    let field = cert.factor.field();
    let q = field.order().unwrap();
    let n = cert.params.n;
    let mut group: u128 = 1;
    for _ in 0..n {
        group = group
            .checked_mul(q)
            .ok_or_else(|| Error::Refused("q^n exceeds u128".into()))?;
    }
    let group = group - 1;
    let fact = factor_u128(group)?;
    let x = Polynomial::x(field);
    let one = Polynomial::one(field);
    let mut order = group;
    for &(l, _) in &fact {
        while order % l == 0 && powmod(&x, order / l, &cert.factor)? == one {
            order /= l;
        }
    }
    if powmod(&x, order, &cert.factor)? != one {
        return Err(Error::Internal("order computation failed its own check".into()));
    }
    if order == 1 {
        return Err(Error::Internal(
            "root of a degree >= 2 irreducible factor cannot have order 1".into(),
        ));
    }
    if BigUint::from(order) < cert.order_bound {
        return Err(Error::Internal(format!(
            "verified order {order} falls below the certified bound {}",
            cert.order_bound
        )));
    }
    Ok(order)
}

/// Enumerate the exponent set S = {Σ a_i m^i : Σ a_i d^i ≤ n−1} and check
/// that the powers α^a are pairwise distinct in F_q\[X\]/(factor).
pub fn power_set_distinct(cert: &HighOrderCertificate) -> Result<bool> {
    let p = &cert.params;
    let mut exponents = vec![0u128];
    let mut stack = vec![(0u64, 0u128, 0u128)]; // (i, Σ a_j d^j so far, Σ a_j m^j so far)
    while let Some((i, wsum, esum)) = stack.pop() {
        if i == p.t {
            continue;
        }
        let weight = (p.d as u128).pow(i as u32);
        let step = p.m.pow(i as u32);
        let mut a = 1u128;
        while wsum + a * weight <= (p.n - 1) as u128 {
            exponents.push(esum + a * step);
            stack.push((i + 1, wsum + a * weight, esum + a * step));
            a += 1;
        }
        stack.push((i + 1, wsum, esum));
    }
    exponents.sort();
    exponents.dedup();
    let x = Polynomial::x(cert.factor.field());
    let mut seen: Vec<Polynomial> = Vec::with_capacity(exponents.len());
    for &a in &exponents {
        let v = powmod(&x, a, &cert.factor)?;
        if seen.contains(&v) {
            return Ok(false);
        }
        seen.push(v);
    }
    Ok(true)
}

/// One row of the empirical conjecture scan.
#[derive(Debug, Clone)]
pub struct ScanRow {
    pub n: u64,
    pub d: u64,
    pub m: u128,
    /// admissible pairs examined (all of T when exhaustive)
    pub pairs_examined: u64,
    pub exhaustive: bool,
    pub successes: u64,
    pub first_success: Option<(Polynomial, Polynomial)>,
    /// (q−1)³/q² · n⁴, the coarse lower bound on |T|
    pub t_lower_bound: BigRational,
    pub coprime_samples: u64,
    pub coprime_hits: u64,
}

impl ScanRow {
    pub fn success_fraction(&self) -> BigRational {
        if self.pairs_examined == 0 {
            return BigRational::zero();
        }
        BigRational::new(self.successes.into(), self.pairs_examined.into())
    }

    pub fn coprime_fraction(&self) -> BigRational {
        if self.coprime_samples == 0 {
            return BigRational::zero();
        }
        BigRational::new(self.coprime_hits.into(), self.coprime_samples.into())
    }
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub q: u128,
    pub seed: u64,
    pub sample_size: Option<u64>,
    pub rows: Vec<ScanRow>,
}

/// Fraction of coprime pairs among `samples` random (deg a, deg b) pairs.
pub fn coprime_fraction_sample(
    field: &FieldSpec,
    deg_a: u64,
    deg_b: u64,
    samples: u64,
    rng: &mut ChaCha8Rng,
) -> Result<(u64, u64)> {
    let q = field.order().ok_or(Error::UnsupportedField("coprime sampling"))?;
    let mut hits = 0u64;
    for _ in 0..samples {
        let a = random_poly_of_degree(field, deg_a, q, rng);
        let b = random_poly_of_degree(field, deg_b, q, rng);
        if a.gcd(&b)?.is_constant() {
            hits += 1;
        }
    }
    Ok((hits, samples))
}

fn random_poly_of_degree(field: &FieldSpec, deg: u64, q: u128, rng: &mut ChaCha8Rng) -> Polynomial {
    let mut coeffs: Vec<_> = (0..deg)
        .map(|_| field.element_from_index(rng.gen_range(0..q)).unwrap())
        .collect();
    coeffs.push(field.element_from_index(rng.gen_range(1..q)).unwrap());
    Polynomial::from_coeffs(field, coeffs)
}

/// Does the composite have an irreducible factor of degree exactly n?
fn pair_succeeds(g: &Polynomial, h: &Polynomial, m: u128, n: u64) -> Result<bool> {
    let composite = composite_poly(g, h, m)?;
    if composite.is_zero() {
        return Ok(false);
    }
    Ok(irreducible_factor_of_degree(&composite, n as usize)?.is_some())
}

/// Empirical test of the existence conjecture across a range of n:
/// exhaustive when the pair space is within the sample budget, seeded
/// sampling otherwise. Also gathers the coprime-pair statistic at degrees
/// (d, d−1) for comparison with 1 − 1/q.
pub fn conjecture_scan(
    q: u128,
    n_from: u64,
    n_to: u64,
    sample_size: Option<u64>,
    coprime_samples: u64,
    seed: u64,
) -> Result<ScanReport> {
    let field = field_for_q(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for n in n_from..=n_to {
        let params = derive_params(q, n)?;
        let len = params.d as usize + 1;
        let mut space: u128 = 1;
        for _ in 0..len {
            space = space
                .checked_mul(field.order().unwrap())
                .ok_or_else(|| Error::Refused("candidate space exceeds u128".into()))?;
        }
        let raw_pairs = (space - 1) * (space - 1);
        let exhaustive = match sample_size {
            None => true,
            Some(s) => raw_pairs <= s as u128,
        };
        let mut examined = 0u64;
        let mut successes = 0u64;
        let mut first_success = None;
        if exhaustive {
            for (g, h, _f) in candidate_pairs(&field, params.d)? {
                examined += 1;
                if pair_succeeds(&g, &h, params.m, n)? {
                    successes += 1;
                    if first_success.is_none() {
                        first_success = Some((g, h));
                    }
                }
            }
        } else {
            let budget = sample_size.unwrap();
            let mut drawn = 0u64;
            // draw raw pairs and keep the admissible ones
            while examined < budget && drawn < budget.saturating_mul(64) {
                drawn += 1;
                let gi = rng.gen_range(1..space);
                let hi = rng.gen_range(1..space);
                let g = poly_from_index(&field, gi, len);
                let h = poly_from_index(&field, hi, len);
                if pair_admissible(&g, &h)?.is_none() {
                    continue;
                }
                examined += 1;
                if pair_succeeds(&g, &h, params.m, n)? {
                    successes += 1;
                    if first_success.is_none() {
                        first_success = Some((g, h));
                    }
                }
            }
        }
        let q_rat = BigRational::from_integer(BigUint::from(q).into());
        let one = BigRational::one();
        let n_rat = BigRational::from_integer(BigUint::from(n).into());
        let t_lower_bound =
            (&q_rat - &one).pow(3) / q_rat.pow(2) * n_rat.pow(4);
        let (coprime_hits, coprime_samples) = if params.d >= 1 {
            coprime_fraction_sample(&field, params.d, params.d - 1, coprime_samples, &mut rng)?
        } else {
            (0, 0)
        };
        rows.push(ScanRow {
            n,
            d: params.d,
            m: params.m,
            pairs_examined: examined,
            exhaustive,
            successes,
            first_success,
            t_lower_bound,
            coprime_samples,
            coprime_hits,
        });
    }
    Ok(ScanReport { q, seed, sample_size, rows })
}
