//! Orbit invariants of an iterated rational function (the first-return
//! indices e, ε, μ, ν of 0 and ∞, the degree gap δ, the pole valuation T),
//! the exceptional-shape classifier, and the iterate-degree lower bound
//! Ψ(n) ≥ d^(n−j).
//!
//! Invariants come from projective orbits rather than explicit iterates:
//! deg g_k < deg h_k exactly when f^(k)(∞) = 0, h_k(0) = 0 exactly when the
//! orbit of 0 hits ∞, and so on. Over a finite field the orbit lives in
//! P^1(F_q), so cycle detection makes every answer exact. Over Q a repeat
//! or a polynomial escape certificate proves infinitude; otherwise the
//! honest answer is "unknown at this cutoff".

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::Polynomial;
use crate::ratfunc::{ProjectivePoint, RationalFunction};

/// Explicit iterates are refused above this degree.
pub const DEGREE_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantValue {
    Finite(u64),
    ProvenInfinite,
    UnknownAtCutoff(u64),
}

impl InvariantValue {
    pub fn as_finite(&self) -> Option<u64> {
        match self {
            InvariantValue::Finite(v) => Some(*v),
            _ => None,
        }
    }

    pub fn is_proven_infinite(&self) -> bool {
        matches!(self, InvariantValue::ProvenInfinite)
    }

    /// Smallest value consistent with what is known; None means infinite.
    fn lower_bound(&self) -> Option<u64> {
        match self {
            InvariantValue::Finite(v) => Some(*v),
            InvariantValue::ProvenInfinite => None,
            InvariantValue::UnknownAtCutoff(c) => Some(c + 1),
        }
    }

    /// Some(true)/Some(false) when the strict order against `other` is
    /// determined by the available information, None when it is not.
    fn definitely_less(&self, other: &InvariantValue) -> Option<bool> {
        use InvariantValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Some(a < b),
            (Finite(_), ProvenInfinite) => Some(true),
            (Finite(a), UnknownAtCutoff(c)) => {
                if c >= a {
                    Some(true)
                } else {
                    None
                }
            }
            (ProvenInfinite, Finite(_)) => Some(false),
            (ProvenInfinite, ProvenInfinite) => Some(false),
            (UnknownAtCutoff(c), Finite(b)) => {
                if c >= b {
                    Some(false)
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

impl std::fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InvariantValue::Finite(v) => write!(f, "{v}"),
            InvariantValue::ProvenInfinite => write!(f, "inf"),
            InvariantValue::UnknownAtCutoff(_) => write!(f, "unknown"),
        }
    }
}

/// The orbit invariants of one function: e, ε from the orbit of 0 (first
/// return to 0, first hit of ∞), μ, ν from the orbit of ∞ (first hit of 0,
/// first return to ∞), the degree gap δ at iterate min(μ,ν), and T, the
/// valuation at 0 of the denominator of iterate ε.
#[derive(Debug, Clone)]
pub struct IterateProfile {
    pub e: InvariantValue,
    pub epsilon: InvariantValue,
    pub mu: InvariantValue,
    pub nu: InvariantValue,
    pub delta: Option<u64>,
    pub t_val: Option<u64>,
    pub d: u64,
}

fn orbit_step(f: &RationalFunction, p: &ProjectivePoint) -> ProjectivePoint {
    f.eval_projective(p)
}

/// First k ≥ 1 with orbit point 0, and first k ≥ 1 with orbit point ∞,
/// starting from `start`.
fn orbit_first_hits(
    f: &RationalFunction,
    start: ProjectivePoint,
    cutoff: u64,
) -> (InvariantValue, InvariantValue) {
    if f.field().is_finite() {
        orbit_hits_finite_field(f, start)
    } else {
        orbit_hits_rationals(f, start, cutoff)
    }
}

/// Exact over a finite field: Floyd cycle detection bounds the number of
/// distinct orbit points by tail + cycle, so walking that far decides both
/// targets.
fn orbit_hits_finite_field(
    f: &RationalFunction,
    start: ProjectivePoint,
) -> (InvariantValue, InvariantValue) {
    let mut tort = orbit_step(f, &start);
    let mut hare = orbit_step(f, &tort);
    while tort != hare {
        tort = orbit_step(f, &tort);
        hare = orbit_step(f, &orbit_step(f, &hare));
    }
    let mut tail = 0u64;
    let mut a = start.clone();
    while a != tort {
        a = orbit_step(f, &a);
        tort = orbit_step(f, &tort);
        tail += 1;
    }
    let mut cycle = 1u64;
    let mut c = orbit_step(f, &a);
    while c != a {
        c = orbit_step(f, &c);
        cycle += 1;
    }
    let mut first_zero = None;
    let mut first_inf = None;
    let mut z = start;
    for k in 1..=(tail + cycle) {
        z = orbit_step(f, &z);
        if first_zero.is_none() && z.is_zero() {
            first_zero = Some(k);
        }
        if first_inf.is_none() && z.is_infinity() {
            first_inf = Some(k);
        }
    }
    (
        first_zero.map_or(InvariantValue::ProvenInfinite, InvariantValue::Finite),
        first_inf.map_or(InvariantValue::ProvenInfinite, InvariantValue::Finite),
    )
}

/// Escape radius for a polynomial over Q: |x| > R implies |f(x)| > |x|,
/// so an orbit leaving [−R, R] never returns.
fn escape_radius(g: &Polynomial) -> BigRational {
    let d = g.degree().unwrap();
    let lead = g.coeff(d).as_rational().unwrap().abs();
    let mut tail_sum = BigRational::from_integer(1.into());
    for i in 0..d {
        tail_sum += g.coeff(i).as_rational().unwrap().abs();
    }
    let one = BigRational::from_integer(1.into());
    let r = tail_sum / lead;
    if r > one {
        r
    } else {
        one
    }
}

/// Orbit points over Q whose numerator or denominator exceeds this many
/// bits stop the walk; heights grow doubly exponentially for wandering
/// orbits, so walking further is hopeless anyway.
const ORBIT_HEIGHT_BITS: u64 = 1 << 14;

fn orbit_hits_rationals(
    f: &RationalFunction,
    start: ProjectivePoint,
    cutoff: u64,
) -> (InvariantValue, InvariantValue) {
    let escape = if f.is_polynomial() {
        Some(escape_radius(f.numer()))
    } else {
        None
    };
    let mut first_zero = None;
    let mut first_inf = None;
    let mut seen = vec![start.clone()];
    let mut z = start;
    let mut proven = false;
    let mut steps = cutoff;
    for k in 1..=cutoff {
        z = orbit_step(f, &z);
        if first_zero.is_none() && z.is_zero() {
            first_zero = Some(k);
        }
        if first_inf.is_none() && z.is_infinity() {
            first_inf = Some(k);
        }
        if first_zero.is_some() && first_inf.is_some() {
            break;
        }
        if seen.contains(&z) {
            // eventually periodic: every reachable point has been listed
            proven = true;
            break;
        }
        if let ProjectivePoint::Finite(x) = &z {
            let r = x.as_rational().unwrap();
            if let Some(radius) = &escape {
                if r.abs() > *radius {
                    proven = true;
                    break;
                }
            }
            if r.numer().bits() > ORBIT_HEIGHT_BITS || r.denom().bits() > ORBIT_HEIGHT_BITS {
                steps = k;
                break;
            }
        }
        seen.push(z.clone());
    }
    let close = |hit: Option<u64>| match hit {
        Some(k) => InvariantValue::Finite(k),
        None if proven => InvariantValue::ProvenInfinite,
        None => InvariantValue::UnknownAtCutoff(steps),
    };
    (close(first_zero), close(first_inf))
}

/// Iterate explicitly, guarded by [`DEGREE_CAP`].
fn iterate_capped(f: &RationalFunction, k: u64) -> Result<Option<RationalFunction>> {
    let d = f.degree() as u64;
    let mut bound = 1u64;
    for _ in 0..k {
        bound = match bound.checked_mul(d) {
            Some(b) if b <= DEGREE_CAP => b,
            _ => return Ok(None),
        };
    }
    Ok(Some(f.iterate(k as usize)?))
}

/// Compute the full invariant profile of f (degree ≥ 1). The cutoff only
/// limits the orbit walks over Q; finite-field orbits are always exact.
pub fn orbit_invariants(f: &RationalFunction, cutoff: u64) -> Result<IterateProfile> {
    if f.is_constant() {
        return Err(Error::Domain("orbit invariants of a constant function".into()));
    }
    let field = f.field().clone();
    let (e, epsilon) = orbit_first_hits(f, ProjectivePoint::zero(&field), cutoff);
    let (mu, nu) = orbit_first_hits(f, ProjectivePoint::Infinity, cutoff);
    if let (Some(eps_v), Some(mu_v)) = (epsilon.as_finite(), mu.as_finite()) {
        match e {
            InvariantValue::Finite(e_v) if e_v == eps_v + mu_v => {}
            other => {
                return Err(Error::Internal(format!(
                    "e = {other} but epsilon + mu = {}",
                    eps_v + mu_v
                )))
            }
        }
    }
    // δ at iterate min(μ, ν), when that index is determined and reachable
    let min_mu_nu = match (mu.as_finite(), nu.as_finite()) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) => match nu.lower_bound() {
            None => Some(a),
            Some(lb) if lb > a => Some(a),
            _ => None,
        },
        (None, Some(b)) => match mu.lower_bound() {
            None => Some(b),
            Some(lb) if lb > b => Some(b),
            _ => None,
        },
        (None, None) => None,
    };
    let delta = match min_mu_nu {
        Some(j) => iterate_capped(f, j)?.map(|it| {
            let dg = it.numer().degree().unwrap_or(0) as i64;
            let dh = it.denom().degree().unwrap() as i64;
            (dg - dh).unsigned_abs()
        }),
        None => None,
    };
    let t_val = match epsilon.as_finite() {
        Some(eps_v) => iterate_capped(f, eps_v)?
            .map(|it| it.denom().valuation_at_zero().unwrap() as u64),
        None => None,
    };
    Ok(IterateProfile {
        e,
        epsilon,
        mu,
        nu,
        delta,
        t_val,
        d: f.degree() as u64,
    })
}

/// (S_k, T_k), the valuations at 0 of the numerator and denominator of
/// the k-th iterate, for 1 ≤ k ≤ k_max, by direct iteration.
pub fn lowest_term_profile(f: &RationalFunction, k_max: u64) -> Result<Vec<(u64, u64)>> {
    if f.is_constant() {
        return Err(Error::Domain("lowest_term_profile of a constant function".into()));
    }
    let mut out = Vec::with_capacity(k_max as usize);
    let mut cur = RationalFunction::identity(f.field());
    for k in 1..=k_max {
        if (f.degree() as u64).checked_pow(k as u32).map_or(true, |b| b > DEGREE_CAP) {
            return Err(Error::Refused(format!(
                "iterate degree d^{k} exceeds the cap {DEGREE_CAP}"
            )));
        }
        cur = RationalFunction::compose(f, &cur)?.0;
        let s = cur.numer().valuation_at_zero().map(|v| v as u64).unwrap_or(0);
        let t = cur.denom().valuation_at_zero().unwrap() as u64;
        out.push((s, t));
    }
    Ok(out)
}

/// The two-point cycle witnessing conjugacy to 1/X^d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoCycle {
    /// {α, ∞}
    WithInfinity(FieldElement),
    /// both points in the base field
    Split(FieldElement, FieldElement),
    /// a conjugate pair: the roots of this monic irreducible quadratic
    Conjugate(Polynomial),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExceptionalShape {
    /// aX^d with d ≥ 2
    Monomial,
    /// aX^(p^ℓ) + b with b ≠ 0
    FrobeniusBinomial { a: FieldElement, b: FieldElement, l: u32 },
    /// L(X^(p^ℓ)) with deg L = 1
    FrobeniusMoebius { l_map: RationalFunction, l: u32 },
    /// totally ramified on a 2-cycle, hence conjugate to 1/X^d over the
    /// algebraic closure
    ConjugateToInvPower(TwoCycle),
    /// a polynomial that is none of the above
    PolynomialType,
    None,
}

impl ExceptionalShape {
    pub fn tag(&self) -> &'static str {
        match self {
            ExceptionalShape::Monomial => "Monomial",
            ExceptionalShape::FrobeniusBinomial { .. } => "FrobeniusBinomial",
            ExceptionalShape::FrobeniusMoebius { .. } => "FrobeniusMoebius",
            ExceptionalShape::ConjugateToInvPower(_) => "ConjugateToInvPower",
            ExceptionalShape::PolynomialType => "PolynomialType",
            ExceptionalShape::None => "None",
        }
    }

    /// Shapes excluded by the degree lower bound's hypotheses.
    pub fn excludes_psi_bound(&self) -> bool {
        !matches!(self, ExceptionalShape::PolynomialType | ExceptionalShape::None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalStatus {
    pub shape: ExceptionalShape,
    pub separable: bool,
}

/// If d = p^ℓ for the field characteristic p ≥ 2, return ℓ.
fn prime_power_log(d: usize, p: u64) -> Option<u32> {
    if p < 2 {
        return None;
    }
    let mut v = d as u64;
    let mut l = 0u32;
    while v > 1 {
        if v % p != 0 {
            return None;
        }
        v /= p;
        l += 1;
    }
    if l >= 1 {
        Some(l)
    } else {
        None
    }
}

fn support_within(p: &Polynomial, allowed: &[usize]) -> bool {
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| c.is_zero() || allowed.contains(&i))
}

/// Syntactic and ramification-based detection of every shape excluded by
/// the iterate-degree theorem. Requires deg f ≥ 2.
pub fn classify_exceptional(f: &RationalFunction) -> Result<ExceptionalStatus> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::Domain("classification requires degree at least 2".into()));
    }
    let separable = !f.wronskian().is_zero();
    let g = f.numer();
    let h = f.denom();
    let p = f.field().characteristic();

    let shape = 'shape: {
        if f.is_polynomial() {
            let terms = g.coeffs().iter().filter(|c| !c.is_zero()).count();
            if terms == 1 {
                break 'shape ExceptionalShape::Monomial;
            }
            if p > 0 && terms == 2 {
                if let Some(l) = prime_power_log(d, p) {
                    if !g.coeff(0).is_zero() {
                        break 'shape ExceptionalShape::FrobeniusBinomial {
                            a: g.coeff(d),
                            b: g.coeff(0),
                            l,
                        };
                    }
                }
            }
        }
        if p > 0 {
            if let Some(l) = prime_power_log(d, p) {
                if support_within(g, &[0, d]) && support_within(h, &[0, d]) {
                    let field = f.field();
                    let l_num = Polynomial::from_coeffs(field, vec![g.coeff(0), g.coeff(d)]);
                    let l_den = Polynomial::from_coeffs(field, vec![h.coeff(0), h.coeff(d)]);
                    let l_map = RationalFunction::reduce(l_num, l_den)?;
                    break 'shape ExceptionalShape::FrobeniusMoebius { l_map, l };
                }
            }
        }
        if let Some(cycle) = detect_inv_power_cycle(f)? {
            break 'shape ExceptionalShape::ConjugateToInvPower(cycle);
        }
        if f.is_polynomial() {
            ExceptionalShape::PolynomialType
        } else {
            ExceptionalShape::None
        }
    };
    Ok(ExceptionalStatus { shape, separable })
}

const CONJUGACY_FIELD_CAP: u128 = 1 << 13;

/// Detect a 2-cycle {α, β} with f totally ramified at both points.
///
/// The cycle is Galois-stable, so either ∞ is in it (a syntactic check on
/// h and g), or both points are roots of a monic quadratic s over the base
/// field. A candidate s is confirmed by the single identity
/// (g − βh)(g − αh) = g² + s₁gh + s₀h² = c·s^d together with the swap
/// conditions f(α) = β, f(β) = α read off g mod s and h mod s.
fn detect_inv_power_cycle(f: &RationalFunction) -> Result<Option<TwoCycle>> {
    let d = f.degree();
    let g = f.numer();
    let h = f.denom();
    let field = f.field().clone();

    // cycle through ∞: h = (X−α)^d with α = f(∞), and g − αh constant
    if h.degree() == Some(d) {
        let alpha = match g.degree() {
            Some(dg) if dg == d => g.coeff(d),
            _ => field.zero(),
        };
        let lin = Polynomial::from_coeffs(&field, vec![alpha.neg(), field.one()]);
        if lin.pow(d as u64) == *h {
            let resid = g.sub(&h.mul_scalar(&alpha));
            if !resid.is_zero() && resid.is_constant() {
                return Ok(Some(TwoCycle::WithInfinity(alpha)));
            }
        }
    }

    // finite 2-cycle: enumerate candidate quadratics over a finite field,
    // or read them off the Wronskian in characteristic 0
    let candidates: Vec<(FieldElement, FieldElement)> = if field.is_finite() {
        let q = field.order().unwrap();
        if q > CONJUGACY_FIELD_CAP {
            return Err(Error::Refused(format!(
                "conjugacy detection enumerates q^2 quadratics; field order {q} exceeds the cap"
            )));
        }
        let mut v = Vec::new();
        for i in 0..q {
            for j in 0..q {
                v.push((
                    field.element_from_index(i).unwrap(),
                    field.element_from_index(j).unwrap(),
                ));
            }
        }
        v
    } else {
        // in characteristic 0 a totally ramified finite 2-cycle forces
        // W = c((X−α)(X−β))^(d−1)
        let w = f.wronskian();
        if w.is_zero() {
            return Err(Error::Internal("vanishing Wronskian in characteristic 0".into()));
        }
        let wm = w.monic();
        if wm.degree() != Some(2 * (d - 1)) {
            return Ok(None);
        }
        let s = wm.radical()?;
        if s.degree() != Some(2) || s.pow((d - 1) as u64) != wm {
            return Ok(None);
        }
        vec![(s.coeff(0), s.coeff(1))]
    };

    for (s0, s1) in candidates {
        let s = Polynomial::from_coeffs(&field, vec![s0.clone(), s1.clone(), field.one()]);
        // α ≠ β
        if !s.gcd(&s.derivative()).map_or(false, |g| g.is_constant()) {
            continue;
        }
        // (g − βh)(g − αh) = g² + s₁gh + s₀h² must equal c·s^d
        let lhs = g
            .mul(g)
            .add(&g.mul(h).mul_scalar(&s1))
            .add(&h.mul(h).mul_scalar(&s0));
        if lhs.degree() != Some(2 * d) || lhs.monic() != s.pow(d as u64) {
            continue;
        }
        // swap conditions from g, h mod s with β = −s₁ − α:
        // g₁ = −h₀ and g₀ = s₀h₁ − s₁h₀
        let rg = g.rem(&s)?;
        let rh = h.rem(&s)?;
        let (g1, g0) = (rg.coeff(1), rg.coeff(0));
        let (h1, h0) = (rh.coeff(1), rh.coeff(0));
        if g1 != h0.neg() || g0 != s0.mul(&h1).sub(&s1.mul(&h0)) {
            continue;
        }
        return Ok(Some(split_cycle(&s, &field)));
    }
    Ok(None)
}

/// Express the cycle as two base-field points when the quadratic splits.
fn split_cycle(s: &Polynomial, field: &FieldSpec) -> TwoCycle {
    if field.is_finite() {
        let roots: Vec<FieldElement> = field
            .elements()
            .unwrap()
            .filter(|x| s.eval(x).is_zero())
            .collect();
        if roots.len() == 2 {
            return TwoCycle::Split(roots[0].clone(), roots[1].clone());
        }
        return TwoCycle::Conjugate(s.clone());
    }
    // over Q: rational roots exist exactly when the discriminant is a square
    let s1 = s.coeff(1).as_rational().unwrap().clone();
    let s0 = s.coeff(0).as_rational().unwrap().clone();
    let disc = &s1 * &s1 - BigRational::from_integer(4.into()) * &s0;
    if !disc.is_negative() {
        let num = disc.numer().sqrt();
        let den = disc.denom().sqrt();
        if &(&num * &num) == disc.numer() && &(&den * &den) == disc.denom() {
            let root = BigRational::new(num, den);
            let two = BigRational::from_integer(2.into());
            let a = (-&s1 + &root) / &two;
            let b = (-&s1 - &root) / &two;
            return TwoCycle::Split(
                field.from_rational(&a).unwrap(),
                field.from_rational(&b).unwrap(),
            );
        }
    }
    TwoCycle::Conjugate(s.clone())
}

/// The emitted bound Ψ(n) ≥ d^(n−j) with its branch provenance.
#[derive(Debug, Clone)]
pub struct PsiBound {
    pub n: u64,
    pub branch: String,
    pub j: u64,
    pub bound: BigUint,
}

/// Branch table reconstructed from the theorem's proof. Refuses (rather
/// than guesses) whenever a needed invariant is unknown at the cutoff, and
/// reports the exceptional tag when the hypotheses fail.
pub fn psi_lower_bound(f: &RationalFunction, n: u64, profile: &IterateProfile) -> Result<PsiBound> {
    if n < 1 {
        return Err(Error::Domain("psi bound needs n >= 1".into()));
    }
    let status = classify_exceptional(f)?;
    if status.shape.excludes_psi_bound() {
        return Err(Error::Exceptional(status.shape.tag().to_string()));
    }
    let d = profile.d;
    let done = |j: u64, branch: &str| -> Result<PsiBound> {
        Ok(PsiBound {
            n,
            branch: branch.to_string(),
            j,
            bound: BigUint::from(d).pow((n - j) as u32),
        })
    };

    if f.is_polynomial() {
        return match profile.e {
            InvariantValue::ProvenInfinite => done(0, "case-i, n<=e"),
            InvariantValue::Finite(e) if n <= e => done(0, "case-i, n<=e"),
            InvariantValue::Finite(e) => done(e, "case-i, n>e"),
            InvariantValue::UnknownAtCutoff(_) => {
                Err(Error::UnknownInvariant("e is unknown at the cutoff".into()))
            }
        };
    }

    let dg = f.numer().degree().unwrap_or(0);
    let dh = f.denom().degree().unwrap();
    if dg > dh {
        return done(1, "case-ii, nu=1");
    }
    if (1..dh).contains(&dg) {
        return done(1, "case-ii, mu=1");
    }

    // case (iii): deg g = 0 < deg h, or deg g = deg h
    let min_lb = match (profile.mu.lower_bound(), profile.nu.lower_bound()) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (None, None) => None,
    };
    if min_lb.map_or(true, |lb| n < lb) {
        return done(0, "case-iii, n<min(mu,nu)");
    }
    if profile.nu.definitely_less(&profile.mu) == Some(true) {
        let nu = profile.nu.as_finite().unwrap();
        return done(nu, "case-iii, nu<mu");
    }
    if profile.mu.definitely_less(&profile.nu) == Some(true) {
        let mu = profile.mu.as_finite().unwrap();
        return match profile.epsilon {
            InvariantValue::ProvenInfinite => done(0, "case-iii, eps=inf"),
            InvariantValue::Finite(eps) if n <= eps => done(0, "case-iii, n<=eps"),
            InvariantValue::Finite(eps) => {
                let it = iterate_capped(f, mu)?.ok_or_else(|| {
                    Error::Refused(format!("iterate degree d^{mu} exceeds the cap {DEGREE_CAP}"))
                })?;
                match it.numer().degree() {
                    Some(dgm) if dgm >= 1 => done(mu, "case-iii, deg-g-mu>=1"),
                    _ => done(eps, "case-iii, deg-g-mu=0"),
                }
            }
            InvariantValue::UnknownAtCutoff(_) => {
                Err(Error::UnknownInvariant("epsilon is unknown at the cutoff".into()))
            }
        };
    }
    Err(Error::UnknownInvariant(
        "the order of mu and nu is unknown at the cutoff".into(),
    ))
}

/// Shared-factor predicates between iterates: entry (ℓ, k), 1 ≤ ℓ < k ≤ n,
/// of each matrix reports whether the named pair of numerators/denominators
/// has a nonconstant gcd.
#[derive(Debug, Clone)]
pub struct SharedFactorMatrices {
    pub zero_zero: Vec<Vec<bool>>,
    pub pole_pole: Vec<Vec<bool>>,
    pub pole_zero: Vec<Vec<bool>>,
    pub zero_pole: Vec<Vec<bool>>,
}

pub fn shared_factor_matrix(f: &RationalFunction, n: u64) -> Result<SharedFactorMatrices> {
    if f.degree() < 2 {
        return Err(Error::Domain("shared_factor_matrix requires degree at least 2".into()));
    }
    let mut iterates = Vec::with_capacity(n as usize);
    let mut cur = RationalFunction::identity(f.field());
    for k in 1..=n {
        if (f.degree() as u64).checked_pow(k as u32).map_or(true, |b| b > DEGREE_CAP) {
            return Err(Error::Refused(format!(
                "iterate degree d^{k} exceeds the cap {DEGREE_CAP}"
            )));
        }
        cur = RationalFunction::compose(f, &cur)?.0;
        iterates.push(cur.clone());
    }
    let nz = n as usize;
    let mut m = SharedFactorMatrices {
        zero_zero: vec![vec![false; nz]; nz],
        pole_pole: vec![vec![false; nz]; nz],
        pole_zero: vec![vec![false; nz]; nz],
        zero_pole: vec![vec![false; nz]; nz],
    };
    let nonconst_gcd = |a: &Polynomial, b: &Polynomial| -> Result<bool> {
        if a.is_zero() || b.is_zero() {
            return Ok(false);
        }
        Ok(!a.gcd(b)?.is_constant())
    };
    for l in 0..nz {
        for k in (l + 1)..nz {
            let (fl, fk) = (&iterates[l], &iterates[k]);
            m.zero_zero[l][k] = nonconst_gcd(fl.numer(), fk.numer())?;
            m.pole_pole[l][k] = nonconst_gcd(fl.denom(), fk.denom())?;
            m.pole_zero[l][k] = nonconst_gcd(fl.denom(), fk.numer())?;
            m.zero_pole[l][k] = nonconst_gcd(fl.numer(), fk.denom())?;
        }
    }
    Ok(m)
}
