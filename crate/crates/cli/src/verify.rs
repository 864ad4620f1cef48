//! The cross-check suites: every identity the library can test against an
//! independent route, each reported as one pass/fail line. Checks marked
//! informational document known discrepancies between printed displays and
//! the arbitrated values; they never fail a run.

use mgslope::brillnoether::{self, BNSetup};
use mgslope::combinat::enumerate_ramseqs;
use mgslope::formulas;
use mgslope::grassmann::{
    self, barc1_lin_pairing, barcjt_lin_pairing, castelnuovo, schubert_number_closed,
    schubert_number_lr, GrassmannianAmbient, SumConstraint,
};
use mgslope::moduli::{self, pair_mg, TestCurve};
use mgslope::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridSize {
    Small,
    Default,
    Large,
}

impl GridSize {
    pub fn parse(name: &str) -> Option<GridSize> {
        Some(match name {
            "small" => GridSize::Small,
            "default" => GridSize::Default,
            "large" => GridSize::Large,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Documents a known discrepancy or an unverified route; never fails
    /// the run.
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        detail: detail.into(),
    }
}

fn info(name: impl Into<String>, detail: impl Into<String>) -> Check {
    Check { name: name.into(), status: Status::Info, detail: detail.into() }
}

/// Oracle equivalence of the closed factorial formula and the ring
/// pairing, over every ambient Grassmannian of dimension up to the bound.
pub fn schubert_suite(grid: GridSize) -> Vec<Check> {
    let dim_bound = match grid {
        GridSize::Small => 12,
        GridSize::Default => 16,
        GridSize::Large => 18,
    };
    let mut cases = 0u64;
    let mut failures = Vec::new();
    for r in 0usize..(dim_bound as usize) {
        for d in (r as i64 + 1)..=(r as i64 + dim_bound) {
            let ambient = match GrassmannianAmbient::new(r, d) {
                Ok(a) => a,
                Err(_) => continue,
            };
            let dim = ambient.dim();
            if dim > dim_bound as u64 {
                continue;
            }
            let g_top = if r == 0 { 2 } else { dim / r as u64 };
            for g in 0..=g_top {
                let rest = dim as i64 - r as i64 * g as i64;
                if rest < 0 {
                    continue;
                }
                for seq in enumerate_ramseqs(r, 0, ambient.width(), rest) {
                    cases += 1;
                    let closed = schubert_number_closed(seq.alpha(), g, ambient).unwrap();
                    let lr = schubert_number_lr(seq.alpha(), g, ambient).unwrap();
                    if closed != lr {
                        failures.push(format!(
                            "G({r},{d}) g={g} alpha={:?}: {closed} vs {lr}",
                            seq.alpha()
                        ));
                    }
                }
            }
        }
    }
    let mut checks = vec![check(
        format!("schubert closed form = ring pairing (dim <= {dim_bound})"),
        failures.is_empty(),
        if failures.is_empty() {
            format!("{cases} cases agree")
        } else {
            format!("{} of {cases} cases disagree; first: {}", failures.len(), failures[0])
        },
    )];

    let series_counts =
        [(4i64, 1i64, 3i64, 2i64), (6, 1, 4, 5), (10, 4, 12, 42), (2, 1, 2, 1)];
    let ok = series_counts
        .iter()
        .all(|&(g, r, d, n)| castelnuovo(g, r, d).unwrap() == BigInt::from(n));
    checks.push(check("series counts on general curves", ok, "(4,1,3), (6,1,4), (10,4,12), (2,1,2)"));

    let lr_ok = [(4i64, 1i64, 3i64), (6, 1, 4)].iter().all(|&(g, r, d)| {
        let amb = GrassmannianAmbient::new(r as usize, d).unwrap();
        let zeros = vec![0i64; r as usize + 1];
        schubert_number_lr(&zeros, g as u64, amb).unwrap() == castelnuovo(g, r, d).unwrap()
    });
    checks.push(check("series counts agree with ring pairing", lr_ok, "(4,1,3), (6,1,4)"));

    let ram = [
        (4i64, 1i64, 3i64, 24i64),
        (2, 1, 2, 6),
        (10, 4, 12, 10080),
    ]
    .iter()
    .all(|&(g, r, d, v)| {
        grassmann::lin_one_total_ramification(g, r, d).unwrap() == BigInt::from(v)
    });
    checks.push(check("total ramification counts", ram, "N (r+1) (d + r(g-1))"));

    // the split-curve count tables against the ring pairing
    let mut rows = 0u64;
    let mut table_ok = true;
    for (r, s) in [(2usize, 1i64), (1, 3), (2, 2), (3, 1)] {
        let g = r as i64 * s + s;
        let d = r as i64 * s + r as i64;
        let ambient = GrassmannianAmbient::new(r, d).unwrap();
        for j in (g / 2)..=(g - 2) {
            let table = grassmann::limitlinj_counts(r, s, j).unwrap();
            for row in &table.n_rows {
                rows += 1;
                let arg: Vec<i64> = row.seq.alpha().iter().rev().map(|&a| j - a).collect();
                table_ok &=
                    row.count == schubert_number_lr(&arg, (g - j) as u64, ambient).unwrap();
            }
            for row in &table.q_rows {
                rows += 1;
                let beta = row.seq.alpha();
                let mut arg: Vec<i64> =
                    beta[1..].iter().rev().map(|&b| j + 1 - b).collect();
                arg.push(j + 1);
                table_ok &=
                    row.count == schubert_number_lr(&arg, (g - j) as u64, ambient).unwrap();
            }
        }
    }
    checks.push(check(
        "split-curve count tables against the ring pairing",
        table_ok,
        format!("{rows} rows across four parameter sets"),
    ));
    checks
}

/// The five intersection identities, the reciprocal-factorial determinant
/// identity, and the determinant cross-check.
pub fn vandermonde_suite(grid: GridSize) -> Vec<Check> {
    let (r_hi, s_hi) = match grid {
        GridSize::Small => (4usize, 3i64),
        GridSize::Default => (5, 4),
        GridSize::Large => (6, 5),
    };
    let mut checks = Vec::new();
    let mut all_ok = true;
    let mut none_inconclusive = true;
    let mut count = 0;
    for r in 2..=r_hi {
        for s in 2..=s_hi {
            let setup = BNSetup::new(r, s).unwrap();
            for c in brillnoether::verify_vandermonde(setup).unwrap() {
                count += 1;
                all_ok &= c.holds();
                none_inconclusive &= !c.inconclusive();
            }
        }
    }
    checks.push(check(
        format!("intersection identities on W (2<=r<={r_hi}, 2<=s<={s_hi})"),
        all_ok,
        format!("{count} identity evaluations"),
    ));
    checks.push(check(
        "no identity check was 0 = 0",
        none_inconclusive,
        "all comparisons involve nonzero values",
    ));

    use mgslope::numeric::{factorial, RationalMatrix};
    let mut det_ok = true;
    let mut tuple = Vec::new();
    fn rec(start: i64, tuple: &mut Vec<i64>, ok: &mut bool) {
        if !tuple.is_empty() {
            let n = tuple.len();
            let m = RationalMatrix::reciprocal_factorials(tuple);
            let det = m.determinant().unwrap();
            let mut num = Rational::one();
            for j in 0..n {
                for l in 0..j {
                    num = num * Rational::from_int(tuple[l] - tuple[j]);
                }
            }
            let mut den = Rational::one();
            for &aj in tuple.iter() {
                den = den * Rational::from_bigint(factorial((aj + n as i64 - 1) as u64));
            }
            *ok &= det == &num / &den;
            *ok &= m.determinant_bareiss().unwrap() == det;
        }
        if tuple.len() == 6 {
            return;
        }
        for v in start..=6 {
            tuple.push(v);
            rec(v + 1, tuple, ok);
            tuple.pop();
        }
    }
    rec(0, &mut tuple, &mut det_ok);
    checks.push(check(
        "reciprocal-factorial determinants up to 6x6",
        det_ok,
        "closed product form, Gaussian and fraction-free elimination all agree",
    ));
    checks
}

/// Slope formulas of the syzygy family with their specialisations, the
/// bound window, the rank identity, and the independent re-derivation of
/// the three leading coefficients.
pub fn koszul_suite(_grid: GridSize) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(check(
        "slope at (s, i) = (2, 0)",
        formulas::koszul_slope(2, 0).unwrap() == Rational::from_int(7),
        "equals 7",
    ));

    let pencil = (0..=30).all(|i| {
        formulas::koszul_slope(1, i).unwrap() == Rational::ratio(6 * (i + 3), i + 2)
    });
    checks.push(check("pencil family slope, i <= 30", pencil, "6(i+3)/(i+2)"));

    let hurwitz = (0..=30).all(|i| {
        formulas::koszul_slope(2, i).unwrap()
            == Rational::ratio(
                3 * (4 * i + 7) * (6 * i * i + 19 * i + 12),
                (12 * i * i + 31 * i + 18) * (i + 2),
            )
    });
    checks.push(check("two-sheet family slope, i <= 30", hurwitz, "degree-two specialisation"));

    let quadric = (2..=10)
        .all(|s| formulas::koszul_slope(s, 0).unwrap() == formulas::khosla_class(s).unwrap().slope);
    checks.push(check("i = 0 slope equals the quadric-rank slope, s <= 10", quadric, ""));

    let mut bound = true;
    for s in 2..=10 {
        for i in 0..=10 {
            bound &= formulas::koszul_bound_check(s, i).unwrap();
        }
    }
    checks.push(check("6 < slope < 6 + 12/(g+1) on s in 2..10, i in 0..10", bound, "99 points"));

    let mut rank = true;
    for s in 1..=4 {
        for i in 0..=4 {
            let (lhs, rhs) = formulas::rank_identity_check(s, i).unwrap();
            rank &= lhs == rhs;
        }
    }
    checks.push(check("bundle rank identity sweep s <= 4, i <= 4", rank, ""));

    let mut hcollapse = true;
    for s in 1..=3 {
        for i in 0..=3 {
            let (lhs, rhs) = brillnoether::syzygy_h_rank_identity(s, i);
            hcollapse &= lhs == rhs;
        }
    }
    checks.push(check("alternating binomial collapse for the symmetric bundle", hcollapse, ""));

    for (s, i) in [(2i64, 0i64), (2, 1), (3, 0)] {
        let abb = brillnoether::koszul_abb(s, i).unwrap();
        let slope = formulas::koszul_slope(s, i).unwrap();
        let ok = abb.slope() == slope
            && &abb.a - &(Rational::from_int(12) * &abb.b0 - &abb.b1) == Rational::zero();
        checks.push(check(
            format!("test-curve re-derivation at (s, i) = ({s}, {i})"),
            ok,
            format!("a/b0 = {}", abb.slope()),
        ));
    }
    checks
}

/// Petri-divisor slope identities and the chain re-derivations.
pub fn gp_suite(grid: GridSize) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut identity = true;
    let mut floor_ok = true;
    for r in 1..=6 {
        for s in 2..=5 {
            let gp = formulas::gp_class(r, s).unwrap();
            identity &= gp.slope_identity_holds();
            let g = r * s + s;
            floor_ok &= gp.slope >= Rational::from_int(6) + Rational::ratio(12, g + 1);
        }
    }
    checks.push(check("three-term slope identity on r <= 6, s <= 5", identity, ""));
    checks.push(check("slope >= 6 + 12/(g+1) on the same grid", floor_ok, ""));

    let hurwitz =
        (2..=8).all(|r| formulas::gp_class(r, 2).unwrap().slope == formulas::gp_slope_hurwitz(r));
    checks.push(check("s = 2 slope equals (6r^2+25r+20)/((r+1)(r+2)), r <= 8", hurwitz, ""));

    checks.push(check(
        "slope at (r, s) = (1, 2)",
        formulas::gp_class(1, 2).unwrap().slope == Rational::ratio(17, 2),
        "equals 17/2",
    ));

    let chain_grid: &[(usize, i64)] = match grid {
        GridSize::Small => &[(2, 2), (3, 2)],
        _ => &[(2, 2), (3, 2), (2, 3), (3, 3), (4, 2), (4, 3)],
    };
    for &(r, s) in chain_grid {
        let b1 = brillnoether::gp_b1(r, s).unwrap();
        let b0 = brillnoether::gp_b0(r, s).unwrap();
        checks.push(check(
            format!("chain = closed form for b1, b0 at (r, s) = ({r}, {s})"),
            b1.agree() && b0.agree(),
            format!("b1 = {}, b0 = {}", b1.chain, b0.chain),
        ));
    }
    checks
}

/// The pointed-ramification family: specialisations, the two-aspect count
/// identity, the boundary recursion, and the quadric-rank boundary
/// coefficients; plus informational reports on the printed displays.
pub fn lin_suite(grid: GridSize) -> Vec<Check> {
    let mut checks = Vec::new();

    let logan = (2..=8).all(|r| {
        let lin = formulas::lin_class(r, 1).unwrap();
        lin.prefactor == Rational::one()
            && lin.class.lambda().exact() == Some(&Rational::from_int(-1))
            && lin.class.psi().exact() == Some(&Rational::one())
            && (2..=(r + 1)).all(|t| {
                lin.class.boundary(0, t).exact()
                    == Some(&-mgslope::numeric::binomial_rat(t + 1, 2))
            })
    });
    checks.push(check("s = 1 reproduces the classical pointed-pencil class, r <= 8", logan, ""));

    let mut pointed2 = true;
    let mut b02_note = String::new();
    for r in 1..=5 {
        let chk = formulas::lin_pointed2_check(r).unwrap();
        pointed2 &= chk.lambda_ok && chk.psi_ok && chk.d_irr_ok;
        if r == 1 {
            b02_note = format!(
                "two-point boundary: emitted {} vs display {}",
                chk.b02_emitted, chk.b02_display
            );
        }
    }
    checks.push(check("s = 2 display matches lambda, psi, delta_irr, r <= 5", pointed2, ""));
    checks.push(info("s = 2 display two-point boundary coefficient", b02_note));

    let mut barc1 = true;
    for r in 2..=4usize {
        for s in 1..=3i64 {
            barc1 &= barc1_lin_pairing(r, s).unwrap().agree();
        }
    }
    checks.push(check(
        "elliptic-tail Schubert sum equals its closed form, 2 <= r <= 4, s <= 3",
        barc1,
        "three torsion-weighted contributions",
    ));

    let mut recursion = true;
    for r in 1..=3i64 {
        for s in 1..=3i64 {
            if r * s + s < 3 {
                continue;
            }
            for j in [0i64, 1] {
                for t in 1..=(r + 1) {
                    if j == 0 && t == 1 {
                        continue;
                    }
                    recursion &= formulas::lin_recursion_check(r, s, j, t).unwrap().holds();
                }
            }
        }
    }
    checks.push(check("boundary recursion at j in {0, 1}, r <= 3, s <= 3", recursion, ""));

    let (display, logan_style) = formulas::lin_b1t_displays(2, 2, 2);
    checks.push(info(
        "elliptic-tail pointed coefficients",
        format!(
            "recursion-derived b_(1:2) = {} at (r,s) = (2,2); printed variants give {} and {}",
            formulas::lin_b1t(2, 2, 2),
            display,
            logan_style
        ),
    ));

    let mut sum_ok = true;
    let mut plain_fails = 0u32;
    let mut plain_total = 0u32;
    for r in 1..=2usize {
        for s in 1..=3i64 {
            let g = r as i64 * s + s;
            if g < 3 {
                continue;
            }
            for j in 1..=(g - 1) {
                for t in 1..=(r as i64 + 1) {
                    let id = grassmann::schubert_sum_identity(r, s, j, t, SumConstraint::RTimesJ)
                        .unwrap();
                    sum_ok &= id.n == id.rhs;
                    plain_total += 1;
                    match grassmann::schubert_sum_identity(r, s, j, t, SumConstraint::PlainJ) {
                        Ok(alt) if alt.n == alt.rhs => {}
                        // ill-formed summands (dimension condition) or a
                        // plain numerical mismatch
                        _ => plain_fails += 1,
                    }
                }
            }
        }
    }
    checks.push(check(
        "two-aspect count identity under sum(alpha) = r*j, r <= 2, s <= 3, all (j, t)",
        sum_ok,
        "reproduces the series count",
    ));
    checks.push(info(
        "two-aspect count identity under the displayed sum(alpha) = j",
        format!(
            "fails or is ill-formed at {plain_fails} of {plain_total} points \
             (for r >= 2 the summands violate the dimension condition); \
             the r*j constraint is the correct one"
        ),
    ));

    let cusp_values = {
        let n = castelnuovo(6, 2, 6).unwrap();
        barcjt_lin_pairing(2, 2, 0, 3).unwrap().is_zero()
            && barcjt_lin_pairing(2, 2, 1, 2).unwrap() == n
            && barcjt_lin_pairing(2, 2, 1, 1).unwrap().is_zero()
    };
    checks.push(check(
        "weighted two-aspect sums at j = 0, 1",
        cusp_values,
        "0, N and 0 as required",
    ));

    let mut bridge = true;
    for r in 1..=4i64 {
        for s in 1..=3i64 {
            if r * s + s == 2 {
                continue;
            }
            bridge &= moduli::lin_one_class(r, s).unwrap().normalisations_agree();
        }
    }
    checks.push(check("one-pointed class normalisation bridge, r <= 4, s <= 3", bridge, ""));

    let s_hi = match grid {
        GridSize::Small => 3,
        _ => 4,
    };
    let mut khosla_ok = true;
    let mut khosla_bound = true;
    for s in 2..=s_hi {
        let g = s * (2 * s + 1);
        let b0 = moduli::khosla_b0(s).unwrap();
        let lo = std::cmp::max(2, (g + 1) / 2);
        for j in lo..=(s * (2 * s - 1)) {
            let bj = moduli::khosla_bj_via_pairing(s, j).unwrap();
            khosla_ok &= bj.agree();
            khosla_bound &= bj.pairing >= b0;
        }
    }
    checks.push(check(
        format!("quadric-rank boundary pairing equals closed form, s <= {s_hi}"),
        khosla_ok,
        "closed form carries the leading factor s",
    ));
    checks.push(check(
        format!("quadric-rank boundary coefficients dominate b0, s <= {s_hi}"),
        khosla_bound,
        "",
    ));
    checks.push(info(
        "quadric-rank boundary display",
        "the printed closed form is smaller than the pairing by exactly a factor s",
    ));
    checks.push(check(
        "b0 per series equals 1 at s = 2",
        moduli::khosla_b0(2).unwrap() == Rational::one(),
        "",
    ));
    checks
}

/// The minimal-resolution family vectors.
pub fn mrc_suite(_grid: GridSize) -> Vec<Check> {
    let mut checks = Vec::new();
    let m = formulas::mrc_class(4, 2, 0).unwrap();
    checks.push(check(
        "quoted vector at (g, r, i) = (4, 2, 0)",
        m.class.lambda().exact() == Some(&Rational::from_int(-37))
            && m.class.psi().exact() == Some(&Rational::from_int(3))
            && m.class.d_irr().exact() == Some(&Rational::from_int(3))
            && m.class.boundary(0, 2).exact() == Some(&Rational::from_int(-7)),
        "(-37, 3, +3, -7, ...)",
    ));
    let m = formulas::mrc_class(5, 1, 0).unwrap();
    checks.push(check(
        "quoted vector at (g, r, i) = (5, 1, 0)",
        m.class.lambda().exact() == Some(&Rational::from_int(-13))
            && m.class.psi().exact() == Some(&Rational::from_int(2))
            && m.class.d_irr().exact() == Some(&Rational::from_int(1))
            && m.class.boundary(0, 2).exact() == Some(&Rational::from_int(-5)),
        "(-13, 2, +1, -5, ...)",
    ));
    let mut family = true;
    for g in 3..=8 {
        for r in 1..=3 {
            let m = formulas::mrc_class(g, r, 0).unwrap();
            family &= m.class.lambda().exact() == Some(&Rational::from_int(-(6 * r * r + 6 * r + 1)))
                && m.class.psi().exact() == Some(&Rational::from_int(r + 1))
                && m.class.d_irr().exact() == Some(&mgslope::numeric::binomial_rat(r + 1, 2))
                && m.class.boundary(0, 2).exact() == Some(&Rational::from_int(-(2 * r + 3)));
        }
    }
    checks.push(check("i = 0 family coefficients, g <= 8, r <= 3", family, ""));
    checks
}

/// Global consistency identities across the emitted classes.
pub fn identities_suite(_grid: GridSize) -> Vec<Check> {
    let mut checks = Vec::new();

    let mut pencil = true;
    for (s, i) in [(2i64, 0i64), (1, 1), (1, 2)] {
        let cls = formulas::koszul_class_from_abb(s, i).unwrap();
        pencil &= pair_mg(TestCurve::R, &cls).unwrap().is_zero();
    }
    for (r, s) in [(1i64, 2i64), (2, 2), (3, 2), (2, 3)] {
        let cls = formulas::gp_class(r, s).unwrap().class;
        pencil &= pair_mg(TestCurve::R, &cls).unwrap().is_zero();
    }
    for s in [2i64, 3] {
        let cls = formulas::khosla_class(s).unwrap().class;
        pencil &= pair_mg(TestCurve::R, &cls).unwrap().is_zero();
    }
    checks.push(check(
        "cubic-pencil pairing vanishes on every emitted unpointed class",
        pencil,
        "b1 = 12 b0 - a throughout",
    ));

    let mut slopes = true;
    let k = formulas::khosla_class(2).unwrap();
    slopes &= moduli::slope(&k.class).unwrap().over_b0 == Rational::from_int(7);
    let gp = formulas::gp_class(1, 2).unwrap();
    slopes &= moduli::slope(&gp.class).unwrap().over_b0 == Rational::ratio(17, 2);
    checks.push(check("slope accessors on the quoted classes", slopes, "7 and 17/2"));

    let f = formulas::nfold_class(19, 7).unwrap();
    let g = 19i64;
    let lam_route = &f.mu * &Rational::from_int(g + 3) - &f.nu;
    let irr_route = -(&f.mu * &Rational::ratio(g + 1, 6));
    let lam_ok = Some(&lam_route) == f.class.lambda().exact()
        && Some(&irr_route) == f.class.d_irr().exact();
    checks.push(check(
        "n-fold class lambda and delta_irr agree with the reference-combination route",
        lam_ok,
        "(g, n) = (19, 7)",
    ));
    let psi_route = &f.nu * &mgslope::numeric::binomial_rat(g + 1, 2);
    checks.push(info(
        "n-fold class psi coefficient",
        format!(
            "reference-combination route gives {}, printed value {}; the printed value is emitted",
            psi_route,
            f.class.psi().exact().unwrap()
        ),
    ));

    let mut rank = true;
    for s in 1..=4 {
        for i in 0..=4 {
            let (lhs, rhs) = formulas::rank_identity_check(s, i).unwrap();
            rank &= lhs == rhs;
        }
    }
    checks.push(check("bundle rank identity, s <= 4, i <= 4", rank, ""));
    checks
}

pub fn run_suite(suite: &str, grid: GridSize) -> Option<Vec<Check>> {
    let mut checks = Vec::new();
    match suite {
        "schubert" => checks.extend(schubert_suite(grid)),
        "vandermonde" => checks.extend(vandermonde_suite(grid)),
        "koszul" => checks.extend(koszul_suite(grid)),
        "gp" => checks.extend(gp_suite(grid)),
        "lin" => checks.extend(lin_suite(grid)),
        "mrc" => checks.extend(mrc_suite(grid)),
        "identities" => checks.extend(identities_suite(grid)),
        "all" => {
            checks.extend(schubert_suite(grid));
            checks.extend(vandermonde_suite(grid));
            checks.extend(koszul_suite(grid));
            checks.extend(gp_suite(grid));
            checks.extend(lin_suite(grid));
            checks.extend(mrc_suite(grid));
            checks.extend(identities_suite(grid));
        }
        _ => return None,
    }
    Some(checks)
}

#[derive(Serialize)]
pub struct Summary<'a> {
    pub version: &'a str,
    pub suite: &'a str,
    pub grid: String,
    pub passed: usize,
    pub failed: usize,
    pub informational: usize,
    pub checks: &'a [Check],
}
