//! Per-family evaluation of one parameter point into an output record.

use crate::record::OutputRecord;
use mgslope::formulas::{self};
use mgslope::moduli::Coefficient;
use mgslope::Rational;

/// The divisor families the command line exposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Koszul,
    Khosla,
    Gp,
    Lin,
    Mrc,
    Nfold,
    Syz,
    Wahl,
}

impl Family {
    pub fn parse(name: &str) -> Option<Family> {
        Some(match name {
            "koszul" => Family::Koszul,
            "khosla" => Family::Khosla,
            "gp" => Family::Gp,
            "lin" => Family::Lin,
            "mrc" => Family::Mrc,
            "nfold" => Family::Nfold,
            "syz" => Family::Syz,
            "wahl" => Family::Wahl,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Koszul => "koszul",
            Family::Khosla => "khosla",
            Family::Gp => "gp",
            Family::Lin => "lin",
            Family::Mrc => "mrc",
            Family::Nfold => "nfold",
            Family::Syz => "syz",
            Family::Wahl => "wahl",
        }
    }

    /// Parameters the family needs, in grid order.
    pub fn required_params(&self) -> &'static [&'static str] {
        match self {
            Family::Koszul => &["s", "i"],
            Family::Khosla => &["s"],
            Family::Gp => &["r", "s"],
            Family::Lin => &["r", "s"],
            Family::Mrc => &["g", "r", "i"],
            Family::Nfold => &["g", "n"],
            Family::Syz => &["g", "i"],
            Family::Wahl => &["g"],
        }
    }

    /// Column order for tables: required parameters plus derived ones.
    pub fn param_columns(&self) -> &'static [&'static str] {
        match self {
            Family::Koszul => &["s", "i", "r", "g", "d"],
            Family::Khosla => &["s", "r", "g", "d"],
            Family::Gp => &["r", "s", "g", "d"],
            Family::Lin => &["r", "s", "g", "d", "n"],
            Family::Mrc => &["g", "r", "i", "n"],
            Family::Nfold => &["g", "n", "d"],
            Family::Syz => &["g", "i", "n"],
            Family::Wahl => &["g", "n"],
        }
    }
}

fn coeff_entry(rec: &mut OutputRecord, name: &str, c: &Coefficient) {
    match c {
        Coefficient::Exact(v) => {
            rec.value(name, v);
        }
        Coefficient::LowerBoundOnly(b) => {
            rec.value_with_status(name, Some(b), "lower_bound");
        }
        Coefficient::Unknown => {
            rec.value_with_status(name, None, "unknown");
        }
    }
}

fn get(params: &[(String, i64)], key: &str) -> Result<i64, String> {
    params
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| format!("missing parameter --{key}"))
}

/// Evaluates one parameter point. `Ok(None)` means the point is outside
/// the family's domain in a way a sweep should skip (an integrality miss);
/// `Err` is a genuine usage error.
pub fn evaluate(family: Family, params: &[(String, i64)]) -> Result<Option<OutputRecord>, String> {
    let mut rec = OutputRecord::new();
    match family {
        Family::Koszul => {
            let (s, i) = (get(params, "s")?, get(params, "i")?);
            let setup = formulas::KoszulSetup::new(s, i).map_err(|e| e.to_string())?;
            let slope = formulas::koszul_slope(s, i).map_err(|e| e.to_string())?;
            rec.param("s", s)
                .param("i", i)
                .param("r", setup.r())
                .param("g", setup.g())
                .param("d", setup.d());
            rec.value("slope", &slope);
            let six = Rational::from_int(6);
            let upper = &six + &Rational::ratio(12, setup.g() + 1);
            rec.flag("bound_ok", six < slope && slope < upper);
        }
        Family::Khosla => {
            let s = get(params, "s")?;
            let k = formulas::khosla_class(s).map_err(|e| e.to_string())?;
            rec.param("s", s)
                .param("r", 2 * s)
                .param("g", s * (2 * s + 1))
                .param("d", 2 * s * (s + 1));
            rec.value("slope", &k.slope);
            rec.value("b0", &k.b0);
            rec.value("b1", &k.class.b(1).map_err(|e| e.to_string())?);
        }
        Family::Gp => {
            let (r, s) = (get(params, "r")?, get(params, "s")?);
            let gp = formulas::gp_class(r, s).map_err(|e| e.to_string())?;
            let g = r * s + s;
            rec.param("r", r).param("s", s).param("g", g).param("d", r * s + r);
            rec.value("slope", &gp.slope);
            rec.value("lambda", gp.class.lambda());
            rec.value("b0", &gp.class.b(0).map_err(|e| e.to_string())?);
            rec.value("b1", &gp.class.b(1).map_err(|e| e.to_string())?);
            let floor = Rational::from_int(6) + Rational::ratio(12, g + 1);
            rec.flag("slope_identity_ok", gp.slope_identity_holds());
            rec.flag("meets_slope_bound", gp.slope >= floor);
        }
        Family::Lin => {
            let (r, s) = (get(params, "r")?, get(params, "s")?);
            let lin = formulas::lin_class(r, s).map_err(|e| e.to_string())?;
            rec.param("r", r)
                .param("s", s)
                .param("g", r * s + s)
                .param("d", r * s + r)
                .param("n", r + 1);
            coeff_entry(&mut rec, "lambda", lin.class.lambda());
            coeff_entry(&mut rec, "psi", lin.class.psi());
            coeff_entry(&mut rec, "delta_irr", lin.class.d_irr());
            coeff_entry(&mut rec, "delta_0_2", &lin.class.boundary(0, 2));
        }
        Family::Mrc => {
            let (g, r, i) = (get(params, "g")?, get(params, "r")?, get(params, "i")?);
            let m = formulas::mrc_class(g, r, i).map_err(|e| e.to_string())?;
            rec.param("g", g).param("r", r).param("i", i).param("n", m.n);
            coeff_entry(&mut rec, "lambda", m.class.lambda());
            coeff_entry(&mut rec, "psi", m.class.psi());
            coeff_entry(&mut rec, "delta_irr", m.class.d_irr());
            coeff_entry(&mut rec, "delta_0_2", &m.class.boundary(0, 2));
        }
        Family::Nfold => {
            let (g, n) = (get(params, "g")?, get(params, "n")?);
            match formulas::nfold_class(g, n) {
                Ok(f) => {
                    rec.param("g", g).param("n", n).param("d", f.d);
                    coeff_entry(&mut rec, "lambda", f.class.lambda());
                    coeff_entry(&mut rec, "psi", f.class.psi());
                    coeff_entry(&mut rec, "delta_irr", f.class.d_irr());
                    rec.value("mu", &f.mu);
                    rec.value("nu", &f.nu);
                }
                Err(formulas::FormulaError::NonIntegral(_)) => return Ok(None),
                Err(e) => return Err(e.to_string()),
            }
        }
        Family::Syz => {
            let (g, i) = (get(params, "g")?, get(params, "i")?);
            match formulas::syz_class(g, i) {
                Ok(s) => {
                    rec.param("g", g).param("i", i).param("n", s.n);
                    coeff_entry(&mut rec, "lambda", s.class.lambda());
                    coeff_entry(&mut rec, "psi", s.class.psi());
                    coeff_entry(&mut rec, "delta_irr", s.class.d_irr());
                }
                Err(formulas::FormulaError::NonIntegral(_)) => return Ok(None),
                Err(e) => return Err(e.to_string()),
            }
        }
        Family::Wahl => {
            let g = get(params, "g")?;
            match formulas::wahl_class(g) {
                Ok(w) => {
                    rec.param("g", g).param("n", w.n);
                    coeff_entry(&mut rec, "lambda", w.class.lambda());
                    coeff_entry(&mut rec, "psi", w.class.psi());
                    coeff_entry(&mut rec, "delta_irr", w.class.d_irr());
                }
                Err(formulas::FormulaError::NonIntegral(_)) => return Ok(None),
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(Some(rec))
}
