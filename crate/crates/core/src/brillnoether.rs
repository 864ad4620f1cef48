//! Exact Chern-number evaluation on the variety `W^r_d(C)` of special
//! linear series, through the Harris-Tu determinant formula, together with
//! the graded ring of `C x Pic^d(C)`.
//!
//! The ring carries the point class `eta` from the curve factor, the cross
//! class `gamma`, the theta class, and the Chern classes `c_1, ..., c_r` of
//! the dual tautological bundle, subject to
//! `eta^2 = 0`, `gamma * eta = 0`, `gamma^2 = -2 eta theta`.
//!
//! Integration convention, used everywhere: a pure `theta^(g-1)` class on
//! `Pic` integrates to `(g-1)!`, and an `eta` factor consumes the curve
//! direction, so integrating `eta * Q` over the product equals integrating
//! `Q` over `Pic`. Terms carrying a bare `gamma` are odd and integrate to
//! zero. A term with neither `eta` nor `gamma` has no curve-direction
//! content and also integrates to zero.

use crate::combinat::{elementary_to_monomials, Partition};
use crate::numeric::{binomial, factorial, Rational, RationalMatrix};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BrillNoetherError {
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("term of Chern-theta degree {got} cannot pair to top degree {expected}")]
    DegreeMismatch { expected: i64, got: i64 },
    #[error("input carries eta or gamma where a pure theta/Chern polynomial is required")]
    NotChernTheta,
}

/// Parameters of the Brill-Noether evaluation: a general curve of genus
/// `rs + s - 1` carrying the `r`-dimensional family `W^r_d` with
/// `d = rs + r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BNSetup {
    r: usize,
    s: i64,
}

impl BNSetup {
    pub fn new(r: usize, s: i64) -> Result<Self, BrillNoetherError> {
        if r < 1 || s < 1 {
            return Err(BrillNoetherError::ParameterRange(format!(
                "need r >= 1 and s >= 1, got r = {r}, s = {s}"
            )));
        }
        Ok(BNSetup { r, s })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// Genus of the curve carrying `W^r_d`.
    pub fn curve_genus(&self) -> i64 {
        self.r as i64 * self.s + self.s - 1
    }

    /// Genus of the nodal curves one level up, `rs + s`.
    pub fn big_genus(&self) -> i64 {
        self.r as i64 * self.s + self.s
    }

    pub fn degree(&self) -> i64 {
        self.r as i64 * self.s + self.r as i64
    }

    /// `dim W^r_d = rho(g-1, r, d) = r`.
    pub fn dim_w(&self) -> i64 {
        self.r as i64
    }
}

/// Monomial key of the product ring, in normal form: `eta, gamma <= 1`,
/// never both, `gamma^2` already rewritten to `-2 eta theta`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CPicKey {
    pub eta: u8,
    pub gamma: u8,
    pub theta: u32,
    /// Multiset of Chern indices, stored as a partition.
    pub chern: Partition,
}

/// Exact polynomial in `eta, gamma, theta, c_1..c_r` modulo the ring
/// relations.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CPicElement {
    terms: BTreeMap<CPicKey, Rational>,
}

impl CPicElement {
    pub fn zero() -> Self {
        CPicElement::default()
    }

    pub fn one() -> Self {
        CPicElement::monomial(0, 0, 0, Partition::empty(), Rational::one())
    }

    pub fn eta() -> Self {
        CPicElement::monomial(1, 0, 0, Partition::empty(), Rational::one())
    }

    pub fn gamma() -> Self {
        CPicElement::monomial(0, 1, 0, Partition::empty(), Rational::one())
    }

    pub fn theta() -> Self {
        CPicElement::monomial(0, 0, 1, Partition::empty(), Rational::one())
    }

    /// `c_i`; index zero is the unit.
    pub fn chern(i: u32) -> Self {
        if i == 0 {
            return CPicElement::one();
        }
        CPicElement::monomial(0, 0, 0, Partition::new(vec![i]), Rational::one())
    }

    pub fn monomial(eta: u8, gamma: u8, theta: u32, chern: Partition, coeff: Rational) -> Self {
        let mut e = CPicElement::zero();
        if let Some((key, c)) = normalize(eta, gamma, theta, chern, coeff) {
            if !c.is_zero() {
                e.terms.insert(key, c);
            }
        }
        e
    }

    pub fn terms(&self) -> &BTreeMap<CPicKey, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &CPicElement) -> CPicElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            let e = out.terms.entry(k.clone()).or_insert_with(Rational::zero);
            *e += v;
            if e.is_zero() {
                out.terms.remove(k);
            }
        }
        out
    }

    pub fn sub(&self, other: &CPicElement) -> CPicElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CPicElement {
        self.scale(&Rational::from_int(-1))
    }

    pub fn scale(&self, k: &Rational) -> CPicElement {
        if k.is_zero() {
            return CPicElement::zero();
        }
        let terms = self.terms.iter().map(|(key, v)| (key.clone(), v * k)).collect();
        CPicElement { terms }
    }

    pub fn scale_int(&self, k: i64) -> CPicElement {
        self.scale(&Rational::from_int(k))
    }

    /// Product reduced to normal form through the ring relations.
    pub fn mul(&self, other: &CPicElement) -> CPicElement {
        let mut out = CPicElement::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let mut chern: Vec<u32> = ka.chern.parts().to_vec();
                chern.extend_from_slice(kb.chern.parts());
                chern.sort_unstable_by(|a, b| b.cmp(a));
                let coeff = va * vb;
                if let Some((key, c)) = normalize(
                    ka.eta + kb.eta,
                    ka.gamma + kb.gamma,
                    ka.theta + kb.theta,
                    Partition::new(chern),
                    coeff,
                ) {
                    let e = out.terms.entry(key.clone()).or_insert_with(Rational::zero);
                    *e += &c;
                    if e.is_zero() {
                        out.terms.remove(&key);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for CPicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, v) in &self.terms {
            let mut s = format!("{v}");
            if k.eta == 1 {
                s.push_str("*eta");
            }
            if k.gamma == 1 {
                s.push_str("*gamma");
            }
            if k.theta > 0 {
                s.push_str(&format!("*theta^{}", k.theta));
            }
            for &i in k.chern.parts() {
                s.push_str(&format!("*c{i}"));
            }
            parts.push(s);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rewrite `eta^e gamma^c theta^t` to normal form:
/// `eta^2 -> 0`, `gamma eta -> 0`, `gamma^2 -> -2 eta theta`.
fn normalize(
    eta: u8,
    gamma: u8,
    theta: u32,
    chern: Partition,
    coeff: Rational,
) -> Option<(CPicKey, Rational)> {
    let (mut eta, mut gamma, mut theta, mut coeff) = (eta, gamma, theta, coeff);
    if gamma >= 1 && eta >= 1 {
        return None;
    }
    if gamma >= 3 {
        return None;
    }
    if gamma == 2 {
        gamma = 0;
        eta += 1;
        theta += 1;
        coeff = coeff * Rational::from_int(-2);
    }
    if eta >= 2 {
        return None;
    }
    Some((CPicKey { eta, gamma, theta, chern }, coeff))
}

/// Evaluation of a monomial in the Chern roots of the dual tautological
/// bundle: returns `(theta_degree, coefficient)` such that the monomial
/// pushes forward to `coefficient * theta^theta_degree` on `Pic`.
/// Reciprocal factorials of negative integers contribute zero entries.
pub fn harris_tu_monomial(exponents: &[u32], setup: BNSetup) -> (i64, Rational) {
    let r = setup.r();
    assert_eq!(exponents.len(), r + 1, "one exponent per Chern root");
    let s = setup.s();
    let a: Vec<i64> = exponents
        .iter()
        .enumerate()
        .map(|(j, &ij)| s - 1 + ij as i64 - j as i64)
        .collect();
    let matrix = RationalMatrix::reciprocal_factorials(&a);
    let det = matrix.determinant().expect("square by construction");
    let total: i64 = exponents.iter().map(|&e| e as i64).sum();
    let theta_deg = (r as i64 + 1) * (s - 1) + total;
    (theta_deg, det)
}

/// Integral over `Pic` of a polynomial in theta and the Chern classes,
/// through the root expansion and the determinant formula. Every term must
/// have Chern-plus-theta degree equal to `dim W`, so that the resulting
/// theta power is exactly `g - 1`.
pub fn chern_number(poly: &CPicElement, setup: BNSetup) -> Result<Rational, BrillNoetherError> {
    let g1 = setup.curve_genus();
    let num_vars = setup.r() + 1;
    let mut acc = Rational::zero();
    for (key, coeff) in poly.terms() {
        if key.eta != 0 || key.gamma != 0 {
            return Err(BrillNoetherError::NotChernTheta);
        }
        let degree = key.chern.weight() as i64 + key.theta as i64;
        if degree != setup.dim_w() {
            return Err(BrillNoetherError::DegreeMismatch {
                expected: setup.dim_w(),
                got: degree,
            });
        }
        let expansion = elementary_to_monomials(&key.chern, num_vars)
            .map_err(|e| BrillNoetherError::ParameterRange(e.to_string()))?;
        let mut term = Rational::zero();
        for (mono, mult) in expansion {
            let (theta_deg, det) = harris_tu_monomial(&mono, setup);
            debug_assert_eq!(theta_deg + key.theta as i64, g1);
            term += &(Rational::from_bigint(mult) * det);
        }
        acc += &(coeff * &term * Rational::from_bigint(factorial(g1 as u64)));
    }
    Ok(acc)
}

/// Integral over the product of the curve and `Pic`, with the conventions
/// from the module documentation: `gamma` terms vanish, terms without
/// `eta` vanish, and the `eta` factor of the rest is consumed by the curve
/// direction. Eta terms of Chern-theta degree above `dim W` vanish as
/// classes; degree below `dim W` is a caller error.
pub fn integrate(poly: &CPicElement, setup: BNSetup) -> Result<Rational, BrillNoetherError> {
    let mut acc = Rational::zero();
    for (key, coeff) in poly.terms() {
        if key.gamma != 0 || key.eta == 0 {
            continue;
        }
        let degree = key.chern.weight() as i64 + key.theta as i64;
        if degree > setup.dim_w() {
            continue;
        }
        if degree < setup.dim_w() {
            return Err(BrillNoetherError::DegreeMismatch {
                expected: setup.dim_w(),
                got: degree,
            });
        }
        let bare = CPicElement::monomial(0, 0, key.theta, key.chern.clone(), coeff.clone());
        acc += &chern_number(&bare, setup)?;
    }
    Ok(acc)
}

/// The count of linear series in the family: the integral of `c_r`.
pub fn cr_value(setup: BNSetup) -> Result<Rational, BrillNoetherError> {
    chern_number(&CPicElement::chern(setup.r() as u32), setup)
}

/// One identity check, both sides evaluated independently.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Both sides zero proves nothing about the class-level identity.
    pub fn inconclusive(&self) -> bool {
        self.lhs.is_zero() && self.rhs.is_zero()
    }
}

/// The five intersection identities on `W^r_d` used by every divisor-class
/// computation downstream, each checked by evaluating both sides.
pub fn verify_vandermonde(setup: BNSetup) -> Result<Vec<IdentityCheck>, BrillNoetherError> {
    let r = setup.r() as i64;
    let s = setup.s();
    if r < 2 {
        return Err(BrillNoetherError::ParameterRange(format!(
            "identities involve c_(r-2); need r >= 2, got r = {r}"
        )));
    }
    let ru = setup.r() as u32;
    let theta = CPicElement::theta();
    let cr = CPicElement::chern(ru);
    let cr1 = CPicElement::chern(ru - 1);
    let cr2 = CPicElement::chern(ru - 2);
    let c1 = CPicElement::chern(1);
    let cr_num = chern_number(&cr, setup)?;

    let mut checks = Vec::new();

    let lhs = chern_number(&cr1.mul(&theta), setup)?;
    let rhs = Rational::ratio(r * (s + 1), 2) * cr_num.clone();
    checks.push(IdentityCheck { name: "c_(r-1) theta", lhs, rhs });

    let lhs = chern_number(&cr2.mul(&theta).mul(&theta), setup)?;
    let rhs = Rational::ratio(r * (r - 1) * (s + 1) * (s + 2), 6) * cr_num.clone();
    checks.push(IdentityCheck { name: "c_(r-2) theta^2", lhs, rhs });

    let lhs = chern_number(&cr2.mul(&c1).mul(&theta), setup)?;
    let factor =
        Rational::one() + Rational::ratio((r - 2) * (r + 2) * (s + 2), 3 * (s + r + 1));
    let rhs = Rational::ratio(r * (s + 1), 2) * factor * cr_num.clone();
    checks.push(IdentityCheck { name: "c_(r-2) c_1 theta", lhs, rhs });

    let lhs = chern_number(&cr1.mul(&c1), setup)?;
    let factor =
        Rational::one() + Rational::ratio((r - 1) * (r + 2) * (s + 1), 2 * (s + r + 1));
    let rhs = factor * cr_num.clone();
    checks.push(IdentityCheck { name: "c_(r-1) c_1", lhs, rhs });

    let mut coeff = Rational::one();
    for k in 1..r {
        coeff = coeff * Rational::from_bigint(factorial(k as u64));
    }
    coeff = coeff * Rational::from_bigint(factorial(r as u64 + 1));
    coeff = coeff / Rational::from_bigint(factorial(s as u64 - 1));
    for k in 1..=r {
        coeff = coeff / Rational::from_bigint(factorial((s + k) as u64));
    }
    let rhs = coeff * Rational::from_bigint(factorial(setup.curve_genus() as u64));
    checks.push(IdentityCheck { name: "c_r against theta^(g-1)", lhs: cr_num, rhs });

    Ok(checks)
}

/// Which of the two test-curve cycles a restriction refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TestCycle {
    /// Cusp cycle: pairs `(y, L)` with a section vanishing doubly at `y`.
    X,
    /// Node cycle: pairs `(y, L)` with a section vanishing at `y` and at a
    /// fixed general point.
    Y,
}

/// Class of the cusp cycle inside the product of the curve and `W^r_d`.
pub fn class_x(setup: BNSetup) -> Result<CPicElement, BrillNoetherError> {
    let r = setup.r() as u32;
    if r < 2 {
        return Err(BrillNoetherError::ParameterRange("need r >= 2".into()));
    }
    let d = setup.degree();
    let g = setup.big_genus();
    let linear = CPicElement::gamma()
        .scale_int(2)
        .add(&CPicElement::eta().scale_int(2 * d + 2 * g - 4));
    Ok(CPicElement::chern(r)
        .add(&CPicElement::chern(r - 1).mul(&linear))
        .add(
            &CPicElement::chern(r - 2)
                .mul(&CPicElement::eta())
                .mul(&CPicElement::theta())
                .scale_int(-6),
        ))
}

/// Class of the node cycle inside the product of the curve and `W^r_d`.
pub fn class_y(setup: BNSetup) -> Result<CPicElement, BrillNoetherError> {
    let r = setup.r() as u32;
    if r < 2 {
        return Err(BrillNoetherError::ParameterRange("need r >= 2".into()));
    }
    let d = setup.degree();
    let linear = CPicElement::gamma().add(&CPicElement::eta().scale_int(d - 1));
    Ok(CPicElement::chern(r)
        .add(&CPicElement::chern(r - 1).mul(&linear))
        .add(
            &CPicElement::chern(r - 2)
                .mul(&CPicElement::eta())
                .mul(&CPicElement::theta())
                .scale_int(-2),
        ))
}

/// First Chern class of the bundle of `b`-th power sections, restricted to
/// the chosen test cycle. For `b = 1` the bundle is the restricted
/// tautological bundle on both cycles, with first Chern class `-c_1`.
pub fn g0b_restriction(b: i64, which: TestCycle, setup: BNSetup) -> CPicElement {
    assert!(b >= 1);
    if b == 1 {
        return CPicElement::chern(1).neg();
    }
    let theta_part = CPicElement::theta().scale_int(-b * b);
    match which {
        TestCycle::X => {
            let d = setup.degree();
            let g = setup.big_genus();
            theta_part
                .add(&CPicElement::eta().scale_int(-(2 * g - 4)))
                .add(
                    &CPicElement::eta()
                        .scale_int(d)
                        .add(&CPicElement::gamma())
                        .scale_int(-b),
                )
        }
        TestCycle::Y => theta_part.add(&CPicElement::eta()),
    }
}

/// First Chern class of the degree-two syzygy bundle difference restricted
/// to a test cycle, assembled from the alternating exterior-power
/// expansion.
fn syzygy_difference_restriction(
    s: i64,
    i: i64,
    which: TestCycle,
    setup: BNSetup,
) -> CPicElement {
    let r = setup.r() as i64;
    let d = setup.degree();
    let g = setup.big_genus();
    let mut acc = CPicElement::zero();
    // multiplier of the section-bundle class accumulated from both bundles
    let mut m01 = BigInt::zero();
    for l in 0..=i {
        let sign = if l % 2 == 0 { 1i64 } else { -1 };
        let outer = binomial(r + 1, i - l) * BigInt::from(sign);
        acc = acc
            .add(&g0b_restriction(l + 2, which, setup).scale(&Rational::from_bigint(outer)));
        m01 += BigInt::from(sign) * BigInt::from((l + 2) * d + 1 - g) * binomial(r, i - l - 1);
    }
    m01 -= binomial(r, i) * BigInt::from((s + 1) * (i + 2));
    acc.add(&g0b_restriction(1, which, setup).scale(&Rational::from_bigint(m01)))
}

/// Both sides of the binomial identity that collapses the alternating sum
/// for the symmetric-power bundle; requires `r = 2s + si + i`.
pub fn syzygy_h_rank_identity(s: i64, i: i64) -> (BigInt, BigInt) {
    let r = 2 * s + s * i + i;
    let mut lhs = BigInt::zero();
    for l in 0..=i {
        let sign = if l % 2 == 0 { 1i64 } else { -1 };
        lhs += BigInt::from(sign)
            * (binomial(r, i - l - 1) * binomial(r + l + 2, l + 2)
                + binomial(r + 1, i - l) * binomial(r + l + 2, r + 1));
    }
    let rhs = binomial(r, i) * BigInt::from((s + 1) * (i + 2));
    (lhs, rhs)
}

/// The three leading coefficients of the syzygy-divisor class, solved from
/// the two test-curve pairings and the pencil relation `a - 12 b0 + b1 = 0`.
#[derive(Clone, Debug)]
pub struct KoszulCoefficients {
    pub a: Rational,
    pub b0: Rational,
    pub b1: Rational,
}

impl KoszulCoefficients {
    pub fn slope(&self) -> Rational {
        &self.a / &self.b0
    }
}

pub fn koszul_abb(s: i64, i: i64) -> Result<KoszulCoefficients, BrillNoetherError> {
    if s < 1 || i < 0 {
        return Err(BrillNoetherError::ParameterRange(format!(
            "need s >= 1 and i >= 0, got s = {s}, i = {i}"
        )));
    }
    let r = 2 * s + s * i + i;
    let setup = BNSetup::new(r as usize, s)?;
    let g = setup.big_genus();

    let expr_x = syzygy_difference_restriction(s, i, TestCycle::X, setup);
    let paired_x = integrate(&class_x(setup)?.mul(&expr_x), setup)?;
    let b1 = paired_x / Rational::from_int(2 * g - 4);

    let expr_y = syzygy_difference_restriction(s, i, TestCycle::Y, setup);
    let paired_y = integrate(&class_y(setup)?.mul(&expr_y), setup)?;
    let b0 = (paired_y + b1.clone()) / Rational::from_int(2 * g - 2);

    let a = Rational::from_int(12) * b0.clone() - b1.clone();
    Ok(KoszulCoefficients { a, b0, b1 })
}

/// A coefficient computed along its test-curve chain together with its
/// closed form; the two must agree.
#[derive(Clone, Debug)]
pub struct ChainValue {
    pub chain: Rational,
    pub closed_form: Rational,
}

impl ChainValue {
    pub fn agree(&self) -> bool {
        self.chain == self.closed_form
    }
}

fn gp_guard(r: usize, s: i64) -> Result<BNSetup, BrillNoetherError> {
    if r < 2 || s < 2 {
        return Err(BrillNoetherError::ParameterRange(format!(
            "need r >= 2 and s >= 2, got r = {r}, s = {s}"
        )));
    }
    BNSetup::new(r, s)
}

/// Elliptic-tail coefficient of the Petri-failure divisor from its
/// intersection chain, against the closed form.
pub fn gp_b1(r: usize, s: i64) -> Result<ChainValue, BrillNoetherError> {
    let setup = gp_guard(r, s)?;
    let ri = r as i64;
    let g = setup.big_genus();
    let d = setup.degree();
    let x = class_x(setup)?;
    let c1 = CPicElement::chern(1);
    let theta = CPicElement::theta();
    let cr_eta = CPicElement::chern(r as u32).mul(&CPicElement::eta());
    let ker = cr_eta.scale_int(2 * d + 2 * g - 4).add(
        &CPicElement::chern(r as u32 - 1)
            .mul(&CPicElement::eta())
            .mul(&theta)
            .scale_int(-6),
    );
    let total = cr_eta
        .scale_int(-(2 * g - 4))
        .add(&c1.mul(&x).scale_int(-(ri + 1 - s)))
        .add(&theta.mul(&x).scale_int(ri + 1))
        .add(&ker.scale_int(ri + 1));
    let chain = integrate(&total, setup)? / Rational::from_int(2 * g - 4);

    let cr = cr_value(setup)?;
    let closed = cr
        * Rational::ratio(ri * (s - 1), (s + ri + 1) * (ri * s + s - 2))
        * Rational::from_int(
            3 * ri * s * s
                + 2 * s * s
                + ri * ri * s * s
                + 7 * s
                + 6 * ri * s
                + ri * ri * s
                + 2 * ri
                + 2,
        );
    Ok(ChainValue { chain, closed_form: closed })
}

/// Irreducible-node coefficient of the Petri-failure divisor from its
/// intersection chain, against the closed form. The chain computes
/// `(2g-2) b0 - b1`, so the elliptic-tail chain feeds into it.
pub fn gp_b0(r: usize, s: i64) -> Result<ChainValue, BrillNoetherError> {
    let setup = gp_guard(r, s)?;
    let ri = r as i64;
    let g = setup.big_genus();
    let d = setup.degree();
    let y = class_y(setup)?;
    let c1 = CPicElement::chern(1);
    let theta = CPicElement::theta();
    let cr_eta = CPicElement::chern(r as u32).mul(&CPicElement::eta());
    let ker = cr_eta.scale_int(d - 1).add(
        &CPicElement::chern(r as u32 - 1)
            .mul(&CPicElement::eta())
            .mul(&theta)
            .scale_int(-2),
    );
    let total = cr_eta
        .add(&c1.mul(&y).scale_int(-(ri + 1 - s)))
        .add(&theta.mul(&y).scale_int(ri + 1))
        .add(&ker.scale_int(ri + 1));
    let paired = integrate(&total, setup)?;
    let b1 = gp_b1(r, s)?.chain;
    let chain = (paired + b1) / Rational::from_int(2 * g - 2);

    let cr = cr_value(setup)?;
    let closed = cr
        * Rational::ratio(
            ri * (ri + 1) * (ri + 2) * (s - 1) * s * (s + 1),
            6 * (ri + s + 1) * (ri * s + s - 2),
        )
        * Rational::ratio(ri * s + s + 4, ri * s + s - 1);
    Ok(ChainValue { chain, closed_form: closed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(r: usize, s: i64) -> BNSetup {
        BNSetup::new(r, s).unwrap()
    }

    #[test]
    fn ring_relations() {
        let g = CPicElement::gamma();
        let e = CPicElement::eta();
        let t = CPicElement::theta();
        // gamma^2 = -2 eta theta
        assert_eq!(g.mul(&g), e.mul(&t).scale_int(-2));
        // eta^2 = 0
        assert!(e.mul(&e).is_zero());
        // gamma eta = 0
        assert!(g.mul(&e).is_zero());
        // (2 gamma + 3 eta) gamma = -4 eta theta
        let lhs = g.scale_int(2).add(&e.scale_int(3)).mul(&g);
        assert_eq!(lhs, e.mul(&t).scale_int(-4));
        // gamma^3 = 0
        assert!(g.mul(&g).mul(&g).is_zero());
    }

    #[test]
    fn normal_form_idempotent() {
        // squaring a mixed element keeps every key in normal form
        let x = CPicElement::gamma()
            .scale_int(2)
            .add(&CPicElement::eta().scale_int(3))
            .add(&CPicElement::theta())
            .add(&CPicElement::chern(1));
        let sq = x.mul(&x);
        for key in sq.terms().keys() {
            assert!(key.eta <= 1);
            assert!(key.gamma <= 1);
            assert!(!(key.eta == 1 && key.gamma == 1));
        }
        // multiplying by one changes nothing
        assert_eq!(sq.mul(&CPicElement::one()), sq);
    }

    #[test]
    fn harris_tu_basic() {
        // r = 1, s = 2: genus-3 curve, degree 3, dim W = 1
        let st = setup(1, 2);
        let (deg, det) = harris_tu_monomial(&[0, 0], st);
        assert_eq!(deg, 2);
        assert_eq!(det, Rational::ratio(1, 2));
        // Vandermonde closed form on a = (1, 0): (a_0 - a_1)/((a_0+1)! (a_1+1)!)
        let (deg, det) = harris_tu_monomial(&[1, 0], st);
        assert_eq!(deg, 3);
        assert_eq!(det, Rational::ratio(1, 3));
        // repeated vanishing order: two equal rows, zero determinant
        let st2 = setup(2, 2);
        let (_, det) = harris_tu_monomial(&[0, 1, 0], st2);
        assert!(det.is_zero());
    }

    #[test]
    fn harris_tu_top_monomials_are_integral() {
        // every weight-r monomial evaluates to an integer times 1/(g-1)!
        let st = setup(3, 2);
        let g1 = st.curve_genus() as u64;
        for mono in [[3, 0, 0, 0], [1, 1, 1, 0], [2, 1, 0, 0], [0, 1, 1, 1]] {
            let (deg, det) = harris_tu_monomial(&mono, st);
            assert_eq!(deg, g1 as i64);
            let scaled = det * Rational::from_bigint(factorial(g1));
            assert!(scaled.is_integer(), "monomial {mono:?}");
        }
    }

    #[test]
    fn chern_number_cr_matches_count() {
        // r = 1, s = 2 is the two-pencil case; theta pairs to 3
        let st = setup(1, 2);
        assert_eq!(cr_value(st).unwrap(), Rational::from_int(2));
        assert_eq!(chern_number(&CPicElement::theta(), st).unwrap(), Rational::from_int(3));
        // r = 4, s = 2 is the 42-series case
        let st = setup(4, 2);
        assert_eq!(cr_value(st).unwrap(), Rational::from_int(42));
    }

    #[test]
    fn chern_number_degree_mismatch() {
        let st = setup(2, 2);
        let err = chern_number(&CPicElement::chern(1), st).unwrap_err();
        assert_eq!(err, BrillNoetherError::DegreeMismatch { expected: 2, got: 1 });
    }

    #[test]
    fn integrate_conventions() {
        let st = setup(2, 2);
        // a bare gamma term integrates to zero
        let odd = CPicElement::gamma().mul(&CPicElement::chern(2));
        assert!(integrate(&odd, st).unwrap().is_zero());
        // no eta, no contribution
        let even = CPicElement::chern(2);
        assert!(integrate(&even, st).unwrap().is_zero());
        // eta consumes the curve direction
        let with_eta = CPicElement::eta().mul(&CPicElement::chern(2));
        assert_eq!(integrate(&with_eta, st).unwrap(), cr_value(st).unwrap());
    }

    #[test]
    fn vandermonde_identities_hold() {
        for (r, s) in [(2usize, 2i64), (3, 2), (4, 2), (2, 3)] {
            for check in verify_vandermonde(setup(r, s)).unwrap() {
                assert!(check.holds(), "r={r} s={s}: {} {:?}", check.name, check);
                assert!(!check.inconclusive(), "r={r} s={s}: {}", check.name);
            }
        }
    }

    #[test]
    fn class_x_y_coefficients() {
        let st = setup(2, 2); // d = 6, big genus 6
        let x = class_x(st).unwrap();
        let cr1_eta =
            CPicKey { eta: 1, gamma: 0, theta: 0, chern: Partition::new(vec![1]) };
        // eta-part of the c_(r-1) term is 2d + 2g - 4 = 20
        assert_eq!(x.terms()[&cr1_eta], Rational::from_int(20));
        let y = class_y(st).unwrap();
        assert_eq!(y.terms()[&cr1_eta], Rational::from_int(5));
        // both carry c_r with coefficient one
        let cr = CPicKey { eta: 0, gamma: 0, theta: 0, chern: Partition::new(vec![2]) };
        assert_eq!(x.terms()[&cr], Rational::one());
        assert_eq!(y.terms()[&cr], Rational::one());
        // gamma-coefficient of c_(r-1) in the node cycle class is one
        let cr1_gamma =
            CPicKey { eta: 0, gamma: 1, theta: 0, chern: Partition::new(vec![1]) };
        assert_eq!(y.terms()[&cr1_gamma], Rational::one());
    }

    #[test]
    fn g0b_values() {
        let st = setup(2, 2); // d = 6, big genus 6
        let on_y = g0b_restriction(2, TestCycle::Y, st);
        let expected = CPicElement::theta().scale_int(-4).add(&CPicElement::eta());
        assert_eq!(on_y, expected);

        let on_x = g0b_restriction(2, TestCycle::X, st);
        let expected = CPicElement::theta()
            .scale_int(-4)
            .add(&CPicElement::eta().scale_int(-(2 * 6 - 4)))
            .add(&CPicElement::eta().scale_int(6).add(&CPicElement::gamma()).scale_int(-2));
        assert_eq!(on_x, expected);

        assert_eq!(g0b_restriction(1, TestCycle::X, st), CPicElement::chern(1).neg());
    }

    #[test]
    fn h_rank_identity() {
        for s in 1..=3 {
            for i in 0..=3 {
                let (lhs, rhs) = syzygy_h_rank_identity(s, i);
                assert_eq!(lhs, rhs, "s={s} i={i}");
            }
        }
    }

    #[test]
    fn koszul_abb_slope_values() {
        let k = koszul_abb(2, 0).unwrap();
        assert_eq!(k.slope(), Rational::from_int(7));
        assert_eq!(&k.a - &(Rational::from_int(12) * &k.b0 - &k.b1), Rational::zero());

        let k = koszul_abb(1, 1).unwrap();
        assert_eq!(k.slope(), Rational::from_int(8));
    }

    #[test]
    fn gp_chains_match_closed_forms() {
        for (r, s) in [(2usize, 2i64), (3, 2)] {
            let b1 = gp_b1(r, s).unwrap();
            assert!(b1.agree(), "b1 at r={r} s={s}: {:?}", b1);
            let b0 = gp_b0(r, s).unwrap();
            assert!(b0.agree(), "b0 at r={r} s={s}: {:?}", b0);
        }
    }
}
