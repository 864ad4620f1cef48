//! The cohomology ring of the Grassmannian `G(r, d)` of `r`-planes in
//! projective `d`-space, in the ramification-sequence convention for
//! Schubert indices.
//!
//! Two independent evaluation routes exist for intersection numbers against
//! powers of the cusp class `sigma_(0,1,...,1)`: Littlewood-Richardson
//! multiplication followed by the Poincare pairing, and the closed-form
//! factorial formula [`schubert_number_closed`]. Neither is trusted alone;
//! the test suites check them against each other over every ambient of
//! dimension up to 16.

use crate::combinat::{enumerate_ramseqs, enumerate_ramseqs_bounded, Partition, RamSeq};

use crate::numeric::{factorial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("classes live in different ambient Grassmannians")]
    AmbientMismatch,
    #[error("codimensions {a} + {b} do not fill the ambient dimension {dim}")]
    DegreeMismatch { a: u64, b: u64, dim: u64 },
    #[error("class mixes terms of different codimension")]
    MixedDegree,
    #[error("dimension condition rg + sum(alpha) = (r+1)(d-r) fails: {lhs} != {dim}")]
    DimensionCondition { lhs: i64, dim: i64 },
    #[error("sequence is not weakly increasing: {0:?}")]
    InvalidSequence(Vec<i64>),
    #[error("rho(g, r, d) = {rho} is nonzero for (g, r, d) = ({g}, {r}, {d})")]
    NonzeroRho { g: i64, r: i64, d: i64, rho: i64 },
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
}

/// The Grassmannian `G(r, d)` of `r`-planes in `P^d`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GrassmannianAmbient {
    r: usize,
    d: i64,
}

impl GrassmannianAmbient {
    pub fn new(r: usize, d: i64) -> Result<Self, GrassmannError> {
        if (r as i64) >= d {
            return Err(GrassmannError::ParameterRange(format!(
                "need 0 <= r < d, got r = {r}, d = {d}"
            )));
        }
        Ok(GrassmannianAmbient { r, d })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Width of the partition box, `d - r`.
    pub fn width(&self) -> i64 {
        self.d - self.r as i64
    }

    /// Complex dimension `(r+1)(d-r)`.
    pub fn dim(&self) -> u64 {
        (self.r as u64 + 1) * self.width() as u64
    }

    fn rows(&self) -> usize {
        self.r + 1
    }
}

/// An integer combination of Schubert classes, indexed by partitions in the
/// `(r+1) x (d-r)` box.
#[derive(Clone, PartialEq, Eq)]
pub struct GrassClass {
    ambient: GrassmannianAmbient,
    terms: BTreeMap<Partition, BigInt>,
}

impl GrassClass {
    pub fn zero(ambient: GrassmannianAmbient) -> Self {
        GrassClass { ambient, terms: BTreeMap::new() }
    }

    /// The fundamental class `sigma_empty`.
    pub fn one(ambient: GrassmannianAmbient) -> Self {
        GrassClass::sigma_partition(ambient, Partition::empty())
    }

    /// A single Schubert class. Partitions outside the box give the zero
    /// class, since the corresponding cycle vanishes.
    pub fn sigma_partition(ambient: GrassmannianAmbient, p: Partition) -> Self {
        let mut c = GrassClass::zero(ambient);
        if p.fits_in_box(ambient.rows(), ambient.width() as u32) {
            c.terms.insert(p, BigInt::one());
        }
        c
    }

    /// Schubert class from a ramification sequence `(alpha_0, ..., alpha_r)`.
    /// Sequences with negative entries or entries beyond the box give the
    /// zero class; non-monotone input is rejected.
    pub fn sigma(ambient: GrassmannianAmbient, alpha: &[i64]) -> Result<Self, GrassmannError> {
        if alpha.len() != ambient.rows() {
            return Err(GrassmannError::ParameterRange(format!(
                "sequence length {} does not match r + 1 = {}",
                alpha.len(),
                ambient.rows()
            )));
        }
        if !alpha.windows(2).all(|w| w[0] <= w[1]) {
            return Err(GrassmannError::InvalidSequence(alpha.to_vec()));
        }
        if alpha[0] < 0 || *alpha.last().unwrap() > ambient.width() {
            return Ok(GrassClass::zero(ambient));
        }
        let seq = RamSeq::new(alpha.to_vec(), ambient.width()).unwrap();
        Ok(GrassClass::sigma_partition(ambient, seq.to_partition()))
    }

    /// The cusp class `sigma_(0,1,...,1)`, i.e. the partition `1^r`.
    pub fn cusp(ambient: GrassmannianAmbient) -> Self {
        GrassClass::sigma_partition(ambient, Partition::rect(1, ambient.r()))
    }

    pub fn ambient(&self) -> GrassmannianAmbient {
        self.ambient
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common codimension of the terms; `None` for the zero class.
    pub fn codim(&self) -> Result<Option<u64>, GrassmannError> {
        let mut it = self.terms.keys().map(|p| p.weight());
        match it.next() {
            None => Ok(None),
            Some(w) => {
                if it.all(|v| v == w) {
                    Ok(Some(w))
                } else {
                    Err(GrassmannError::MixedDegree)
                }
            }
        }
    }

    pub fn add(&self, other: &GrassClass) -> Result<GrassClass, GrassmannError> {
        if self.ambient != other.ambient {
            return Err(GrassmannError::AmbientMismatch);
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            let e = out.terms.entry(p.clone()).or_insert_with(BigInt::zero);
            *e += c;
            if e.is_zero() {
                out.terms.remove(p);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> GrassClass {
        if k.is_zero() {
            return GrassClass::zero(self.ambient);
        }
        let terms = self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect();
        GrassClass { ambient: self.ambient, terms }
    }

    /// Product in `H*(G(r, d))` by the Littlewood-Richardson rule;
    /// partitions leaving the box are discarded.
    pub fn lr_multiply(&self, other: &GrassClass) -> Result<GrassClass, GrassmannError> {
        if self.ambient != other.ambient {
            return Err(GrassmannError::AmbientMismatch);
        }
        let rows = self.ambient.rows();
        let width = self.ambient.width() as u32;
        let mut out = GrassClass::zero(self.ambient);
        for (lambda, ca) in &self.terms {
            for (mu, cb) in &other.terms {
                let c = ca * cb;
                if mu.parts().iter().all(|&p| p == 1) && !mu.is_empty() {
                    // dual Pieri: add a vertical strip of |mu| boxes
                    for nu in vertical_strips(lambda, mu.len(), rows, width) {
                        let e = out.terms.entry(nu).or_insert_with(BigInt::zero);
                        *e += &c;
                    }
                } else {
                    let target = lambda.weight() + mu.weight();
                    for nu in partitions_over(lambda, target, rows, width) {
                        let m = lr_coeff(lambda, mu, &nu);
                        if m > 0 {
                            let e = out.terms.entry(nu).or_insert_with(BigInt::zero);
                            *e += &c * BigInt::from(m);
                        }
                    }
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// `self^g` by repeated multiplication with intermediate box truncation.
    pub fn pow(&self, g: u64) -> Result<GrassClass, GrassmannError> {
        let mut acc = GrassClass::one(self.ambient);
        for _ in 0..g {
            acc = acc.lr_multiply(self)?;
        }
        Ok(acc)
    }

    /// Poincare pairing: sum over partitions of `coeff_a(lambda) *
    /// coeff_b(complement(lambda))`.
    pub fn pairing(&self, other: &GrassClass) -> Result<BigInt, GrassmannError> {
        if self.ambient != other.ambient {
            return Err(GrassmannError::AmbientMismatch);
        }
        let dim = self.ambient.dim();
        let (ca, cb) = (self.codim()?, other.codim()?);
        if let (Some(a), Some(b)) = (ca, cb) {
            if a + b != dim {
                return Err(GrassmannError::DegreeMismatch { a, b, dim });
            }
        }
        let mut acc = BigInt::zero();
        for (lambda, c) in &self.terms {
            acc += c * other.coeff(&box_complement(lambda, self.ambient));
        }
        Ok(acc)
    }
}

impl fmt::Debug for GrassClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(p, c)| format!("{c}*s{p:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Complement of a partition in the ambient box, reversed.
fn box_complement(p: &Partition, ambient: GrassmannianAmbient) -> Partition {
    let rows = ambient.rows();
    let w = ambient.width() as u32;
    let parts: Vec<u32> = (0..rows).rev().map(|i| w - p.part(i)).collect();
    Partition::new(parts)
}

/// All partitions obtained from `lambda` by adding a vertical strip of `k`
/// boxes inside the box.
fn vertical_strips(lambda: &Partition, k: usize, rows: usize, width: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; rows];
    fn rec(
        row: usize,
        rows: usize,
        width: u32,
        lambda: &Partition,
        left: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        if left > rows - row {
            return; // at most one box per remaining row
        }
        for add in [0u32, 1] {
            if add as usize > left {
                continue;
            }
            let v = lambda.part(row) + add;
            if v > width {
                continue;
            }
            if row > 0 && v > cur[row - 1] {
                continue;
            }
            cur[row] = v;
            rec(row + 1, rows, width, lambda, left - add as usize, cur, out);
        }
        cur[row] = 0;
    }
    rec(0, rows, width, lambda, k, &mut cur, &mut out);
    out
}

/// All partitions of weight `target` containing `lambda` inside the box.
fn partitions_over(lambda: &Partition, target: u64, rows: usize, width: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; rows];
    fn rec(
        row: usize,
        rows: usize,
        width: u32,
        lambda: &Partition,
        left: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let hi = if row == 0 { width } else { cur[row - 1] };
        let lo = lambda.part(row);
        for v in lo..=hi {
            let v64 = v as u64;
            if v64 > left {
                break;
            }
            // remaining rows can hold at most (rows - row - 1) * v more
            if left - v64 > (rows - row - 1) as u64 * v64 {
                continue;
            }
            cur[row] = v;
            rec(row + 1, rows, width, lambda, left - v64, cur, out);
        }
        cur[row] = 0;
    }
    rec(0, rows, width, lambda, target, &mut cur, &mut out);
    out
}

/// Littlewood-Richardson coefficient `c^nu_{lambda,mu}`: the number of
/// skew semistandard tableaux of shape `nu/lambda` and content `mu` whose
/// reverse reading word is a ballot word.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    let nrows = nu.len();
    let nvals = mu.len();
    // cells in reverse reading order: top to bottom, right to left
    let mut cells = Vec::new();
    for i in 0..nrows {
        for j in (lambda.part(i)..nu.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut grid: BTreeMap<(usize, u32), usize> = BTreeMap::new();
    let mut used = vec![0u32; nvals + 1];
    fn rec(
        k: usize,
        cells: &[(usize, u32)],
        lambda: &Partition,
        mu: &Partition,
        grid: &mut BTreeMap<(usize, u32), usize>,
        used: &mut Vec<u32>,
        count: &mut u64,
    ) {
        if k == cells.len() {
            *count += 1;
            return;
        }
        let (i, j) = cells[k];
        let nvals = mu.len();
        for v in 1..=nvals {
            if used[v] >= mu.part(v - 1) {
                continue; // content exhausted
            }
            if v > 1 && used[v - 1] <= used[v] {
                continue; // ballot condition
            }
            // row weakly increasing: the cell to the right was filled before
            if let Some(&right) = grid.get(&(i, j + 1)) {
                if v > right {
                    continue;
                }
            }
            // column strictly increasing against the cell above
            if i > 0 && j >= lambda.part(i - 1) {
                match grid.get(&(i - 1, j)) {
                    Some(&above) if v <= above => continue,
                    _ => {}
                }
            }
            grid.insert((i, j), v);
            used[v] += 1;
            rec(k + 1, cells, lambda, mu, grid, used, count);
            used[v] -= 1;
            grid.remove(&(i, j));
        }
    }
    let mut count = 0;
    rec(0, &cells, lambda, mu, &mut grid, &mut used, &mut count);
    count
}

pub fn rho(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// `sigma_alpha . sigma_(0,1,...,1)^g` in `H*(G(r, d))` by the closed
/// factorial formula. Requires the dimension condition
/// `rg + sum(alpha) = (r+1)(d-r)`; vanishing cases (a negative factorial
/// argument, or a sequence leaving the box) give zero.
pub fn schubert_number_closed(
    alpha: &[i64],
    g: u64,
    ambient: GrassmannianAmbient,
) -> Result<BigInt, GrassmannError> {
    let r = ambient.r() as i64;
    let d = ambient.d();
    if alpha.len() != ambient.rows() {
        return Err(GrassmannError::ParameterRange(format!(
            "sequence length {} does not match r + 1 = {}",
            alpha.len(),
            ambient.rows()
        )));
    }
    if !alpha.windows(2).all(|w| w[0] <= w[1]) {
        return Err(GrassmannError::InvalidSequence(alpha.to_vec()));
    }
    let total: i64 = alpha.iter().sum();
    let lhs = r * g as i64 + total;
    let dim = ambient.dim() as i64;
    if lhs != dim {
        return Err(GrassmannError::DimensionCondition { lhs, dim });
    }
    if alpha[0] < 0 || *alpha.last().unwrap() > ambient.width() {
        return Ok(BigInt::zero());
    }
    let mut value = Rational::from_bigint(factorial(g));
    for i in 0..alpha.len() {
        for j in i + 1..alpha.len() {
            value = value * Rational::from_int(alpha[j] - alpha[i] + (j - i) as i64);
        }
    }
    for (i, &a) in alpha.iter().enumerate() {
        let arg = g as i64 - d + i as i64 + a + r;
        if arg < 0 {
            return Ok(BigInt::zero());
        }
        value = value / Rational::from_bigint(factorial(arg as u64));
    }
    Ok(value.to_bigint().expect("closed-form Schubert number must be an integer"))
}

/// The same number through the ring: `pairing(cusp^g, sigma_alpha)`.
/// Kept as the independent oracle for [`schubert_number_closed`].
pub fn schubert_number_lr(
    alpha: &[i64],
    g: u64,
    ambient: GrassmannianAmbient,
) -> Result<BigInt, GrassmannError> {
    let sigma = GrassClass::sigma(ambient, alpha)?;
    if sigma.is_zero() {
        return Ok(BigInt::zero());
    }
    let power = GrassClass::cusp(ambient).pow(g)?;
    if power.is_zero() {
        return Ok(BigInt::zero());
    }
    power.pairing(&sigma)
}

/// The number of `g^r_d` on a general genus-`g` curve when `rho = 0`.
pub fn castelnuovo(g: i64, r: i64, d: i64) -> Result<BigInt, GrassmannError> {
    let rh = rho(g, r, d);
    if rh != 0 {
        return Err(GrassmannError::NonzeroRho { g, r, d, rho: rh });
    }
    let ambient = GrassmannianAmbient::new(r as usize, d)?;
    schubert_number_closed(&vec![0; r as usize + 1], g as u64, ambient)
}

/// Total ramification weight over all `g^r_d` on a general curve:
/// `N (r+1) (d + r(g-1))`.
pub fn lin_one_total_ramification(g: i64, r: i64, d: i64) -> Result<BigInt, GrassmannError> {
    let n = castelnuovo(g, r, d)?;
    Ok(n * BigInt::from(r + 1) * BigInt::from(d + r * (g - 1)))
}

/// One row of the test-curve pullback table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub seq: RamSeq,
    pub count: BigInt,
}

/// The three enumeration strata for a test curve of type `(j, g-j)`.
#[derive(Clone, Debug, Default)]
pub struct LimitLinjTable {
    pub n_rows: Vec<CountRow>,
    pub m_rows: Vec<CountRow>,
    pub q_rows: Vec<CountRow>,
}

/// The index set `{0 <= alpha_0 <= ... <= alpha_r <= s, sum = j}`.
pub fn p1_set(r: usize, s: i64, j: i64) -> Vec<RamSeq> {
    enumerate_ramseqs(r, 0, s, j)
}

/// `{0 <= beta_0 <= ... <= beta_r <= s+1, sum = j+1, beta_(r-1) <= s}`.
pub fn p2_set(r: usize, s: i64, j: i64) -> Vec<RamSeq> {
    enumerate_ramseqs(r, 0, s + 1, j + 1)
        .into_iter()
        .filter(|seq| seq.alpha()[r.saturating_sub(1)] <= s)
        .collect()
}

/// `{0 = beta_0 < beta_1 <= ... <= beta_r <= s+1, sum = r+1+j}`:
/// the strict first step is the tail enumeration with lower bound one.
pub fn p3_set(r: usize, s: i64, j: i64) -> Vec<RamSeq> {
    if r == 0 {
        return Vec::new();
    }
    enumerate_ramseqs_bounded(&vec![1; r], s + 1, r as i64 + 1 + j)
        .into_iter()
        .map(|tail| {
            let mut alpha = vec![0];
            alpha.extend_from_slice(tail.alpha());
            RamSeq::new(alpha, s + 1).unwrap()
        })
        .collect()
}

/// Count tables for the pullback of the type-`(j, g-j)` test curve, for
/// `g = rs+s`, `d = rs+r`, `[g/2] <= j <= g-2`.
///
/// The first and third strata are genuine intersection numbers in
/// `G(r, d)` and are evaluated in closed form. The middle stratum pairs
/// the cusp power against `sigma_beta` in `H*(G(r, r+j))`; entries whose
/// total codimension exceeds the ambient dimension are zero.
pub fn limitlinj_counts(r: usize, s: i64, j: i64) -> Result<LimitLinjTable, GrassmannError> {
    let g = r as i64 * s + s;
    let d = r as i64 * s + r as i64;
    if !(g / 2 <= j && j <= g - 2) {
        return Err(GrassmannError::ParameterRange(format!(
            "need [g/2] <= j <= g-2, got j = {j} for g = {g}"
        )));
    }
    let ambient = GrassmannianAmbient::new(r, d)?;
    let mut table = LimitLinjTable::default();

    for seq in p1_set(r, s, j) {
        let reversed: Vec<i64> = seq.alpha().iter().rev().map(|&a| j - a).collect();
        let count = schubert_number_closed(&reversed, (g - j) as u64, ambient)?;
        table.n_rows.push(CountRow { seq, count });
    }
    let small = GrassmannianAmbient::new(r, r as i64 + j)?;
    for seq in p2_set(r, s, j) {
        let sigma = GrassClass::sigma(small, seq.alpha())?;
        let product = GrassClass::cusp(small).pow(j as u64)?.lr_multiply(&sigma)?;
        let point = Partition::rect(small.width() as u32, small.rows());
        table.m_rows.push(CountRow { seq, count: product.coeff(&point) });
    }
    for seq in p3_set(r, s, j) {
        let beta = seq.alpha();
        let mut arg: Vec<i64> = beta[1..].iter().rev().map(|&b| j + 1 - b).collect();
        arg.push(j + 1);
        let count = schubert_number_closed(&arg, (g - j) as u64, ambient)?;
        table.q_rows.push(CountRow { seq, count });
    }
    Ok(table)
}

/// Result of evaluating the one-pointed ramification pullback along the
/// elliptic-tail test curve in both available ways.
#[derive(Clone, Debug)]
pub struct BarC1Pairing {
    /// Sum of the three torsion-weighted Schubert contributions.
    pub schubert_sum: BigInt,
    /// `N r (r+1) (r+2) (rs + 2s^2 + s - 4) / (s+r+1)`.
    pub closed_form: Rational,
}

impl BarC1Pairing {
    pub fn agree(&self) -> bool {
        Rational::from_bigint(self.schubert_sum.clone()) == self.closed_form
    }
}

/// The three-contribution Schubert sum against its closed form, for
/// `g = rs+s >= 3`, `r >= 2`.
pub fn barc1_lin_pairing(r: usize, s: i64) -> Result<BarC1Pairing, GrassmannError> {
    let g = r as i64 * s + s;
    let d = r as i64 * s + r as i64;
    if r < 2 || g < 3 {
        return Err(GrassmannError::ParameterRange(format!(
            "need r >= 2 and g >= 3, got r = {r}, g = {g}"
        )));
    }
    let ambient = GrassmannianAmbient::new(r, d)?;
    let ambient_down = GrassmannianAmbient::new(r, d - 1)?;

    // ramification (0, 1, 2, ..., 2, 3)
    let mut cusp_type = vec![0i64, 1];
    cusp_type.extend(std::iter::repeat_n(2, r - 2));
    cusp_type.push(3);
    // ramification (0, 2, ..., 2)
    let mut flex_type = vec![0i64];
    flex_type.extend(std::iter::repeat_n(2, r));
    // ramification (0, 0, 1, ..., 1) in G(r, d-1)
    let mut base_type = vec![0i64, 0];
    base_type.extend(std::iter::repeat_n(1, r - 1));

    let gm1 = BigInt::from(g - 1);
    let power = (g - 2) as u64;
    let a = BigInt::from(3) * &gm1 * schubert_number_closed(&cusp_type, power, ambient)?;
    let b = &gm1
        * BigInt::from((r as i64 + 2) * (r as i64 + 2) - 1)
        * schubert_number_closed(&flex_type, power, ambient)?;
    let c = &gm1
        * BigInt::from(r as i64 * r as i64 - 1)
        * schubert_number_closed(&base_type, power, ambient_down)?;

    let n = castelnuovo(g, r as i64, d)?;
    let closed = Rational::from_bigint(n)
        * Rational::from_int(r as i64)
        * Rational::from_int(r as i64 + 1)
        * Rational::from_int(r as i64 + 2)
        * Rational::from_int(r as i64 * s + 2 * s * s + s - 4)
        / Rational::from_int(s + r as i64 + 1);

    Ok(BarC1Pairing { schubert_sum: a + b + c, closed_form: closed })
}

/// Which sum constraint the two-aspect Schubert sum runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumConstraint {
    /// `sum(alpha) = r j` — the constraint forced by codimension
    /// bookkeeping on the two aspects.
    RTimesJ,
    /// `sum(alpha) = j` — the displayed variant, kept for the
    /// verification report.
    PlainJ,
}

impl fmt::Display for SumConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumConstraint::RTimesJ => write!(f, "sum(alpha) = r*j"),
            SumConstraint::PlainJ => write!(f, "sum(alpha) = j"),
        }
    }
}

/// Sequences `0 <= alpha_0 <= ... <= alpha_r <= j` with the requested sum.
/// The upper bound `j` costs nothing: for `alpha_r > j` the complementary
/// aspect count vanishes through a negative factorial argument.
fn two_aspect_sequences(r: usize, j: i64, constraint: SumConstraint) -> Vec<RamSeq> {
    let total = match constraint {
        SumConstraint::RTimesJ => r as i64 * j,
        SumConstraint::PlainJ => j,
    };
    enumerate_ramseqs(r, 0, j, total)
}

/// Product of the two aspect counts for a single sequence.
fn two_aspect_product(
    alpha: &RamSeq,
    r: usize,
    s: i64,
    j: i64,
    ambient: GrassmannianAmbient,
) -> Result<BigInt, GrassmannError> {
    let g = r as i64 * s + s;
    let first = schubert_number_closed(alpha.alpha(), (g - j) as u64, ambient)?;
    if first.is_zero() {
        return Ok(BigInt::zero());
    }
    let complement: Vec<i64> =
        alpha.alpha().iter().rev().map(|&a| r as i64 * s - a).collect();
    let second = schubert_number_closed(&complement, j as u64, ambient)?;
    Ok(first * second)
}

/// Both sides of the two-aspect count identity: the number of linear
/// series on a general curve against the sum over split ramification
/// sequences.
#[derive(Clone, Debug)]
pub struct SchubertSumIdentity {
    pub n: BigInt,
    pub rhs: BigInt,
    pub constraint: SumConstraint,
}

pub fn schubert_sum_identity(
    r: usize,
    s: i64,
    j: i64,
    t: i64,
    constraint: SumConstraint,
) -> Result<SchubertSumIdentity, GrassmannError> {
    let g = r as i64 * s + s;
    let d = r as i64 * s + r as i64;
    if !(1 <= t && t <= r as i64 + 1 && 1 <= j && j < g) {
        return Err(GrassmannError::ParameterRange(format!(
            "need 1 <= t <= r+1 and 1 <= j <= g-1, got t = {t}, j = {j}"
        )));
    }
    let ambient = GrassmannianAmbient::new(r, d)?;
    let mut rhs = BigInt::zero();
    for alpha in two_aspect_sequences(r, j, constraint) {
        rhs += two_aspect_product(&alpha, r, s, j, ambient)?;
    }
    Ok(SchubertSumIdentity { n: castelnuovo(g, r as i64, d)?, rhs, constraint })
}

/// The `alpha_(t-1)`-weighted two-aspect Schubert sum.
pub fn barcjt_lin_pairing(r: usize, s: i64, j: i64, t: i64) -> Result<BigInt, GrassmannError> {
    let g = r as i64 * s + s;
    let d = r as i64 * s + r as i64;
    if !(1 <= t && t <= r as i64 + 1 && 0 <= j && j < g) {
        return Err(GrassmannError::ParameterRange(format!(
            "need 1 <= t <= r+1 and 0 <= j <= g-1, got t = {t}, j = {j}"
        )));
    }
    let ambient = GrassmannianAmbient::new(r, d)?;
    let mut total = BigInt::zero();
    for alpha in two_aspect_sequences(r, j, SumConstraint::RTimesJ) {
        let weight = alpha.alpha()[(t - 1) as usize];
        if weight == 0 {
            continue;
        }
        total += BigInt::from(weight) * two_aspect_product(&alpha, r, s, j, ambient)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn g13() -> GrassmannianAmbient {
        GrassmannianAmbient::new(1, 3).unwrap()
    }

    #[test]
    fn lr_unit() {
        let amb = g13();
        let one = GrassClass::one(amb);
        let c = GrassClass::sigma(amb, &[0, 2]).unwrap();
        assert_eq!(one.lr_multiply(&c).unwrap(), c);
    }

    #[test]
    fn lr_sigma1_squared_in_g13() {
        let amb = g13();
        let s1 = GrassClass::sigma(amb, &[0, 1]).unwrap();
        let sq = s1.lr_multiply(&s1).unwrap();
        assert_eq!(sq.coeff(&Partition::new(vec![2])), BigInt::from(1));
        assert_eq!(sq.coeff(&Partition::new(vec![1, 1])), BigInt::from(1));
        assert_eq!(sq.terms().len(), 2);
    }

    #[test]
    fn lr_sigma1_fourth_power_is_twice_point() {
        let amb = g13();
        let s1 = GrassClass::sigma(amb, &[0, 1]).unwrap();
        let p4 = s1.pow(4).unwrap();
        assert_eq!(p4.coeff(&Partition::new(vec![2, 2])), BigInt::from(2));
        assert_eq!(p4.terms().len(), 1);
    }

    #[test]
    fn pairing_examples() {
        let amb = g13();
        let point = GrassClass::sigma_partition(amb, Partition::new(vec![2, 2]));
        let one = GrassClass::one(amb);
        assert_eq!(point.pairing(&one).unwrap(), BigInt::from(1));

        let s1 = GrassClass::sigma(amb, &[0, 1]).unwrap();
        let cube = s1.pow(3).unwrap();
        assert_eq!(cube.pairing(&s1).unwrap(), BigInt::from(2));

        let err = s1.pairing(&s1).unwrap_err();
        assert_eq!(err, GrassmannError::DegreeMismatch { a: 1, b: 1, dim: 4 });
    }

    #[test]
    fn ambient_mismatch() {
        let a = GrassClass::one(g13());
        let b = GrassClass::one(GrassmannianAmbient::new(1, 4).unwrap());
        assert_eq!(a.lr_multiply(&b).unwrap_err(), GrassmannError::AmbientMismatch);
    }

    #[test]
    fn closed_form_examples() {
        // two g^1_3 on a general genus-4 curve
        assert_eq!(
            schubert_number_closed(&[0, 0], 4, g13()).unwrap(),
            BigInt::from(2)
        );
        // g = 0 against the point class
        let amb = GrassmannianAmbient::new(2, 5).unwrap();
        assert_eq!(
            schubert_number_closed(&[3, 3, 3], 0, amb).unwrap(),
            BigInt::from(1)
        );
        // the unique pencil of degree 2 on a genus-2 curve
        let g12 = GrassmannianAmbient::new(1, 2).unwrap();
        assert_eq!(schubert_number_closed(&[0, 0], 2, g12).unwrap(), BigInt::from(1));
    }

    #[test]
    fn closed_form_dimension_condition() {
        let err = schubert_number_closed(&[0, 1], 4, g13()).unwrap_err();
        assert_eq!(err, GrassmannError::DimensionCondition { lhs: 5, dim: 4 });
    }

    #[test]
    fn castelnuovo_values() {
        assert_eq!(castelnuovo(4, 1, 3).unwrap(), BigInt::from(2));
        assert_eq!(castelnuovo(6, 1, 4).unwrap(), BigInt::from(5));
        assert_eq!(castelnuovo(10, 4, 12).unwrap(), BigInt::from(42));
        assert!(matches!(
            castelnuovo(5, 1, 3),
            Err(GrassmannError::NonzeroRho { .. })
        ));
    }

    #[test]
    fn castelnuovo_agrees_with_lr() {
        for (g, r, d) in [(4i64, 1i64, 3i64), (6, 1, 4)] {
            let amb = GrassmannianAmbient::new(r as usize, d).unwrap();
            let lr = schubert_number_lr(&vec![0; r as usize + 1], g as u64, amb).unwrap();
            assert_eq!(castelnuovo(g, r, d).unwrap(), lr);
        }
    }

    #[test]
    fn closed_form_equals_lr_small_grid() {
        // every ambient of dimension <= 10, every valid (alpha, g)
        for r in 0usize..4 {
            for d in (r as i64 + 1)..=(r as i64 + 11) {
                let amb = GrassmannianAmbient::new(r, d).unwrap();
                let dim = amb.dim();
                if dim > 10 {
                    continue;
                }
                for g in 0..=(if r == 0 { 3 } else { dim / r as u64 }) {
                    let rest = dim as i64 - (r as i64) * g as i64;
                    if rest < 0 {
                        continue;
                    }
                    for seq in enumerate_ramseqs(r, 0, amb.width(), rest) {
                        let closed =
                            schubert_number_closed(seq.alpha(), g, amb).unwrap();
                        let lr = schubert_number_lr(seq.alpha(), g, amb).unwrap();
                        assert_eq!(closed, lr, "r={r} d={d} g={g} alpha={:?}", seq.alpha());
                    }
                }
            }
        }
    }

    #[test]
    fn total_ramification_examples() {
        assert_eq!(lin_one_total_ramification(4, 1, 3).unwrap(), BigInt::from(24));
        assert_eq!(lin_one_total_ramification(2, 1, 2).unwrap(), BigInt::from(6));
        assert_eq!(lin_one_total_ramification(10, 4, 12).unwrap(), BigInt::from(10080));
    }

    #[test]
    fn limitlinj_smallest_case() {
        // r = 2, s = 1: g = 3, d = 4, j = 1
        let table = limitlinj_counts(2, 1, 1).unwrap();
        assert_eq!(table.n_rows.len(), 1);
        assert_eq!(table.n_rows[0].seq.alpha(), &[0, 0, 1]);
        assert_eq!(table.n_rows[0].count, BigInt::from(1));
    }

    #[test]
    fn limitlinj_n_rows_match_lr() {
        let (r, s, j) = (1usize, 3i64, 3i64);
        let g = r as i64 * s + s;
        let d = r as i64 * s + r as i64;
        let amb = GrassmannianAmbient::new(r, d).unwrap();
        let table = limitlinj_counts(r, s, j).unwrap();
        assert!(!table.n_rows.is_empty());
        for row in &table.n_rows {
            let reversed: Vec<i64> = row.seq.alpha().iter().rev().map(|&a| j - a).collect();
            let lr = schubert_number_lr(&reversed, (g - j) as u64, amb).unwrap();
            assert_eq!(row.count, lr);
        }
        for row in &table.q_rows {
            let beta = row.seq.alpha();
            let mut arg: Vec<i64> = beta[1..].iter().rev().map(|&b| j + 1 - b).collect();
            arg.push(j + 1);
            let lr = schubert_number_lr(&arg, (g - j) as u64, amb).unwrap();
            assert_eq!(row.count, lr);
        }
    }

    #[test]
    fn limitlinj_rejects_bad_j() {
        assert!(matches!(
            limitlinj_counts(2, 1, 17),
            Err(GrassmannError::ParameterRange(_))
        ));
    }

    #[test]
    fn barc1_paths_agree() {
        for (r, s) in [(2usize, 1i64), (2, 2), (3, 2)] {
            let res = barc1_lin_pairing(r, s).unwrap();
            assert!(res.agree(), "r={r} s={s}: {:?}", res);
        }
    }

    #[test]
    fn schubert_sum_reproduces_n() {
        // r = 1, s = 3: N = 5
        for j in 1..=5 {
            for t in 1..=2 {
                let id = schubert_sum_identity(1, 3, j, t, SumConstraint::RTimesJ).unwrap();
                assert_eq!(id.n, BigInt::from(5));
                assert_eq!(id.rhs, id.n, "j={j} t={t}");
            }
        }
        // r = 2, s = 1, j = 1, t = 1
        let id = schubert_sum_identity(2, 1, 1, 1, SumConstraint::RTimesJ).unwrap();
        assert_eq!(id.rhs, id.n);
        // j = g-1 with t = r+1
        let id = schubert_sum_identity(2, 2, 5, 3, SumConstraint::RTimesJ).unwrap();
        assert_eq!(id.rhs, id.n);
    }

    #[test]
    fn barcjt_known_values() {
        let (r, s) = (2usize, 2i64);
        let n = castelnuovo(6, 2, 6).unwrap();
        assert_eq!(barcjt_lin_pairing(r, s, 0, 3).unwrap(), BigInt::zero());
        assert_eq!(barcjt_lin_pairing(r, s, 1, 2).unwrap(), n);
        assert_eq!(barcjt_lin_pairing(r, s, 1, 1).unwrap(), BigInt::zero());
    }

    #[test]
    fn barcjt_lower_bound() {
        // alpha_(t-1) >= (t-1) j / t forces the sum >= N (t-1) j / t for j >= 2
        let (r, s) = (2usize, 2i64);
        let n = castelnuovo(6, 2, 6).unwrap();
        for j in 2..=4i64 {
            for t in 1..=3i64 {
                let value = barcjt_lin_pairing(r, s, j, t).unwrap();
                let bound = Rational::from_bigint(n.clone())
                    * Rational::from_int(t - 1)
                    * Rational::from_int(j)
                    / Rational::from_int(t);
                assert!(
                    Rational::from_bigint(value.clone()) >= bound,
                    "j={j} t={t}: {value} < {bound}"
                );
            }
        }
    }

    fn arb_box_partition() -> impl Strategy<Value = Partition> {
        // partitions in a 4-row, width-4 box
        proptest::collection::vec(0u32..=4, 4).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn lr_commutative(a in arb_box_partition(), b in arb_box_partition()) {
            let amb = GrassmannianAmbient::new(3, 7).unwrap();
            let ca = GrassClass::sigma_partition(amb, a);
            let cb = GrassClass::sigma_partition(amb, b);
            prop_assert_eq!(ca.lr_multiply(&cb).unwrap(), cb.lr_multiply(&ca).unwrap());
        }

        #[test]
        fn lr_associative(a in arb_box_partition(), b in arb_box_partition(), c in arb_box_partition()) {
            let amb = GrassmannianAmbient::new(3, 7).unwrap();
            let ca = GrassClass::sigma_partition(amb, a);
            let cb = GrassClass::sigma_partition(amb, b);
            let cc = GrassClass::sigma_partition(amb, c);
            let left = ca.lr_multiply(&cb).unwrap().lr_multiply(&cc).unwrap();
            let right = ca.lr_multiply(&cb.lr_multiply(&cc).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn lr_coefficients_nonnegative(a in arb_box_partition(), b in arb_box_partition()) {
            let amb = GrassmannianAmbient::new(3, 7).unwrap();
            let ca = GrassClass::sigma_partition(amb, a);
            let cb = GrassClass::sigma_partition(amb, b);
            let prod = ca.lr_multiply(&cb).unwrap();
            for coeff in prod.terms().values() {
                prop_assert!(!coeff.is_negative());
            }
        }
    }
}
