use serde::Serialize;

use crate::error::{Error, Result};
use crate::gb::field::FieldSpec;
use crate::gb::groebner::{buchberger_truncated, derivative_ideal, pairwise_products};
use crate::gb::poly::Polynomial;
use crate::monomial::Monomial;
use crate::parse::{parse_polynomial, parse_polynomials};
use crate::ring::Ring;

pub const NAMED_EXAMPLES: [&str; 3] = ["gorenstein-char2", "gr-depth-zero", "derivative-remark"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub statement: String,
    pub expected: bool,
    pub observed: bool,
    pub passed: bool,
}

impl Verdict {
    fn new(statement: impl Into<String>, expected: bool, observed: bool) -> Self {
        Verdict {
            statement: statement.into(),
            expected,
            observed,
            passed: expected == observed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadrupleReport {
    pub f_not_in_i: bool,
    pub f_not_in_i2: bool,
    pub products_in_i2: Vec<(String, bool)>,
    pub all_products_in_i2: bool,
}

impl QuadrupleReport {
    pub fn passed(&self) -> bool {
        self.f_not_in_i && self.f_not_in_i2 && self.all_products_in_i2
    }
}

/// Decide `f ∉ I`, `f ∉ I2` and `f·x ∈ I2` for every variable `x`.
pub fn check_quadruple(
    f: &Polynomial,
    i_gens: &[Polynomial],
    i2_gens: &[Polynomial],
    dmax: u32,
) -> Result<QuadrupleReport> {
    if f.is_zero() {
        return Err(Error::Domain("zero polynomial".into()));
    }
    if !f.is_homogeneous() {
        return Err(Error::Domain(format!("inhomogeneous polynomial {f}")));
    }
    if f.degree() + 1 > dmax as u64 {
        return Err(Error::Truncation {
            degree: (f.degree() + 1) as u32,
            limit: dmax,
        });
    }
    let gb_i = buchberger_truncated(i_gens, dmax)?;
    let gb_i2 = buchberger_truncated(i2_gens, dmax)?;
    let ring = f.ring().clone();
    let mut products = Vec::with_capacity(ring.nvars());
    for v in 0..ring.nvars() {
        let fx = f.mul_term(&Monomial::var(ring.nvars(), v), 1)?;
        products.push((ring.var(v).to_string(), gb_i2.contains(&fx)?));
    }
    Ok(QuadrupleReport {
        f_not_in_i: !gb_i.contains(f)?,
        f_not_in_i2: !gb_i2.contains(f)?,
        all_products_in_i2: products.iter().all(|(_, b)| *b),
        products_in_i2: products,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedExampleReport {
    pub name: String,
    pub characteristic: u32,
    /// Set when a large prime stands in for characteristic zero.
    pub char_proxy: bool,
    pub dmax: u32,
    pub generator_count: Option<usize>,
    pub verdicts: Vec<Verdict>,
    pub all_pass: bool,
}

const PROXY_PRIME: u64 = 32003;

/// Run a registered example. `characteristic` and `dmax` override the defaults.
pub fn named_example(
    name: &str,
    characteristic: Option<u64>,
    dmax: Option<u32>,
) -> Result<NamedExampleReport> {
    let (default_p, default_d, proxy) = match name {
        "gorenstein-char2" => (2, 5, false),
        "gr-depth-zero" => (PROXY_PRIME, 10, true),
        "derivative-remark" => (PROXY_PRIME, 7, true),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    let field = FieldSpec::new(characteristic.unwrap_or(default_p))?;
    let dmax = dmax.unwrap_or(default_d);
    let (generator_count, verdicts) = match name {
        "gorenstein-char2" => gorenstein_char2(field, dmax)?,
        "gr-depth-zero" => (None, gr_depth_zero(field, dmax)?),
        _ => (None, derivative_remark(field, dmax)?),
    };
    Ok(NamedExampleReport {
        name: name.to_string(),
        characteristic: field.characteristic(),
        char_proxy: proxy && characteristic.is_none_or(|p| p != 0),
        dmax,
        generator_count,
        all_pass: verdicts.iter().all(|v| v.passed),
        verdicts,
    })
}

fn product_by_var(f: &Polynomial, v: usize) -> Result<Polynomial> {
    f.mul_term(&Monomial::var(f.ring().nvars(), v), 1)
}

fn gorenstein_char2(field: FieldSpec, dmax: u32) -> Result<(Option<usize>, Vec<Verdict>)> {
    let names = ["x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"];
    let ring = Ring::new(&names)?;
    let rows = [["x1", "x2", "x3"], ["y1", "y2", "y3"], ["z1", "z2", "z3"]];
    let mut text = Vec::new();
    for r in 0..3 {
        for s in r + 1..3 {
            for a in 0..3 {
                for b in a + 1..3 {
                    text.push(format!(
                        "{}*{} - {}*{}",
                        rows[r][a], rows[s][b], rows[r][b], rows[s][a]
                    ));
                }
            }
        }
    }
    let mut square_of = |vars: [&str; 3]| {
        for (i, u) in vars.iter().enumerate() {
            for w in &vars[i..] {
                text.push(format!("{u}*{w}"));
            }
        }
    };
    for ((&x, y), z) in rows[0].iter().zip(rows[1]).zip(rows[2]) {
        square_of([x, y, z]);
    }
    for row in rows {
        square_of(row);
    }
    let gens = parse_polynomials(&ring, field, &text.join(", "))?;
    let gb_i = buchberger_truncated(&gens, dmax)?;
    let count = gb_i.count_of_degree(2);
    let i2 = pairwise_products(&gens)?;
    let gb_i2 = buchberger_truncated(&i2, dmax)?;
    let f = parse_polynomial(&ring, field, "x1*y2*z3 + x2*y3*z1 + x3*y1*z2")?;
    let f_text = "x1*y2*z3+x2*y3*z1+x3*y1*z2";
    let mut verdicts = vec![
        Verdict::new("degree-2 part of I has dimension 36", true, count == 36),
        Verdict::new(format!("{f_text} in I"), false, gb_i.contains(&f)?),
        Verdict::new(format!("{f_text} in I^2"), false, gb_i2.contains(&f)?),
    ];
    for (v, name) in names.iter().enumerate() {
        let observed = gb_i2.contains(&product_by_var(&f, v)?)?;
        verdicts.push(Verdict::new(
            format!("{name}*({f_text}) in I^2"),
            true,
            observed,
        ));
    }
    Ok((Some(count), verdicts))
}

fn gr_depth_zero(field: FieldSpec, dmax: u32) -> Result<Vec<Verdict>> {
    let ring = Ring::new(&["x", "y", "z", "t"])?;
    let gens_text = ["x^4 + y^3*z", "x^3*y", "x^2*t^2", "y^4", "y^2*z^2"];
    let gens = parse_polynomials(&ring, field, &gens_text.join(", "))?;
    let gb_i = buchberger_truncated(&gens, dmax)?;
    let gb_i2 = buchberger_truncated(&pairwise_products(&gens)?, dmax)?;
    let u = parse_polynomial(&ring, field, "x^2*y^3*z")?;
    let w = parse_polynomial(&ring, field, "x^2*y^3*z*t")?;
    let mut verdicts = Vec::new();
    for (g, text) in gens.iter().zip(gens_text) {
        let observed = gb_i2.contains(&u.mul(g)?)?;
        verdicts.push(Verdict::new(
            format!("x^2*y^3*z*({text}) in I^2"),
            true,
            observed,
        ));
    }
    verdicts.push(Verdict::new("x^2*y^3*z in I", false, gb_i.contains(&u)?));
    for v in 0..ring.nvars() {
        let observed = gb_i.contains(&product_by_var(&w, v)?)?;
        verdicts.push(Verdict::new(
            format!("x^2*y^3*z*t*{} in I", ring.var(v)),
            true,
            observed,
        ));
    }
    verdicts.push(Verdict::new("x^2*y^3*z*t in I", false, gb_i.contains(&w)?));
    Ok(verdicts)
}

fn derivative_remark(field: FieldSpec, dmax: u32) -> Result<Vec<Verdict>> {
    let ring = Ring::new(&["x", "y", "z"])?;
    let f = parse_polynomial(&ring, field, "x^5 + x^4*y + y^4*z")?;
    let gens = [product_by_var(&f, 0)?, product_by_var(&f, 1)?];
    let partials = derivative_ideal(&gens)?;
    let gb = buchberger_truncated(&partials, dmax)?;
    let mut verdicts = Vec::new();
    for (v, expected) in [(0, true), (1, true), (2, false)] {
        let observed = gb.contains(&product_by_var(&f, v)?)?;
        verdicts.push(Verdict::new(
            format!("{}*f in d(I)", ring.var(v)),
            expected,
            observed,
        ));
    }
    verdicts.push(Verdict::new("f in d(I)", false, gb.contains(&f)?));
    Ok(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_name() {
        assert_eq!(
            named_example("nope", None, None),
            Err(Error::UnknownName("nope".into()))
        );
    }

    #[test]
    fn derivative_remark_passes() {
        let r = named_example("derivative-remark", None, None).unwrap();
        assert!(r.all_pass, "{r:?}");
        assert!(r.char_proxy);
        assert_eq!(r.verdicts.len(), 4);
    }

    #[test]
    fn gr_depth_zero_passes() {
        let r = named_example("gr-depth-zero", None, None).unwrap();
        assert!(r.all_pass, "{r:?}");
        assert_eq!(r.verdicts.len(), 11);
    }

    #[test]
    fn quadruple_preconditions() {
        let ring = Ring::new(&["x", "y"]).unwrap();
        let field = FieldSpec::new(7).unwrap();
        let gens = parse_polynomials(&ring, field, "x^2, y^2").unwrap();
        let i2 = pairwise_products(&gens).unwrap();
        let zero = Polynomial::zero(ring.clone(), field);
        assert!(matches!(
            check_quadruple(&zero, &gens, &i2, 4),
            Err(Error::Domain(_))
        ));
        let r = check_quadruple(&gens[0], &gens, &i2, 4).unwrap();
        assert!(!r.f_not_in_i && !r.passed());
        let xy = parse_polynomial(&ring, field, "x*y").unwrap();
        let r = check_quadruple(&xy, &gens, &i2, 4).unwrap();
        assert!(r.f_not_in_i && r.f_not_in_i2 && !r.all_products_in_i2);
    }

    #[test]
    fn gorenstein_example_depends_on_characteristic() {
        let r = named_example("gorenstein-char2", None, None).unwrap();
        assert!(r.all_pass && !r.char_proxy);
        assert_eq!(r.generator_count, Some(36));
        let r3 = named_example("gorenstein-char2", Some(3), None).unwrap();
        assert!(!r3.all_pass);
    }
}
