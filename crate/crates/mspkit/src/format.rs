//! Text, JSON, LaTeX and CSV encodings.

use mspkit_core::poly::{LaurentX1, MPoly, Monomial};
use mspkit_core::stirling::NumberTable;
use mspkit_core::{BigInt, BigRational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("cannot parse polynomial term `{0}`")]
    Term(String),
    #[error("cannot parse number `{0}`")]
    Number(String),
    #[error("empty polynomial text")]
    Empty,
    #[error("invalid JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x1_den: Option<u32>,
}

fn terms_json(p: &MPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            exponents: m.exponents().to_vec(),
        })
        .collect()
}

/// `{"terms":[{"coeff":"<dec>","exponents":[...]}]}` in graded-lex order.
pub fn poly_to_value(p: &MPoly) -> serde_json::Value {
    serde_json::to_value(PolyJson {
        terms: terms_json(p),
        x1_den: None,
    })
    .expect("plain data serializes")
}

/// As [`poly_to_value`] with an extra `"x1_den"` field.
pub fn laurent_to_value(l: &LaurentX1) -> serde_json::Value {
    serde_json::to_value(PolyJson {
        terms: terms_json(l.numerator()),
        x1_den: Some(l.x1_den()),
    })
    .expect("plain data serializes")
}

pub fn poly_to_json(p: &MPoly) -> String {
    poly_to_value(p).to_string()
}

pub fn laurent_to_json(l: &LaurentX1) -> String {
    laurent_to_value(l).to_string()
}

fn parse_poly_json(s: &str) -> Result<(MPoly, u32), FormatError> {
    let raw: PolyJson = serde_json::from_str(s).map_err(|e| FormatError::Json(e.to_string()))?;
    let mut terms = Vec::with_capacity(raw.terms.len());
    for t in raw.terms {
        let c: BigInt = t
            .coeff
            .parse()
            .map_err(|_| FormatError::Number(t.coeff.clone()))?;
        terms.push((Monomial::new(t.exponents), c));
    }
    Ok((MPoly::from_terms(terms), raw.x1_den.unwrap_or(0)))
}

pub fn poly_from_json(s: &str) -> Result<MPoly, FormatError> {
    let (p, den) = parse_poly_json(s)?;
    if den != 0 {
        return Err(FormatError::Json(
            "polynomial carries a nonzero x1_den".into(),
        ));
    }
    Ok(p)
}

pub fn laurent_from_json(s: &str) -> Result<LaurentX1, FormatError> {
    let (p, den) = parse_poly_json(s)?;
    Ok(LaurentX1::new(p, den))
}

fn parse_term(t: &str) -> Result<(Monomial, BigInt), FormatError> {
    let bad = || FormatError::Term(t.to_string());
    let mut coeff = BigInt::from(1);
    let mut exps: Vec<u32> = Vec::new();
    for (i, piece) in t.split('*').enumerate() {
        if let Some(rest) = piece.strip_prefix('X') {
            let (idx, e) = match rest.split_once('^') {
                Some((idx, e)) => (idx, e.parse::<u32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx == 0 {
                return Err(bad());
            }
            if exps.len() < idx {
                exps.resize(idx, 0);
            }
            exps[idx - 1] += e;
        } else if i == 0 && !piece.is_empty() && piece.bytes().all(|b| b.is_ascii_digit()) {
            coeff = piece.parse().map_err(|_| bad())?;
        } else {
            return Err(bad());
        }
    }
    Ok((Monomial::new(exps), coeff))
}

/// Parses the `c*X1^a*X2^b + ...` text form. Terms may come in any order.
pub fn parse_poly(s: &str) -> Result<MPoly, FormatError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(FormatError::Empty);
    }
    let mut terms = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let negative = rest.starts_with('-');
        if negative || rest.starts_with('+') {
            rest = &rest[1..];
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (m, c) = parse_term(&rest[..end])?;
        terms.push((m, if negative { -c } else { c }));
        rest = &rest[end..];
    }
    Ok(MPoly::from_terms(terms))
}

/// Parses the text form of [`LaurentX1`]: a polynomial, `(p)/X1^d` or `1/X1^d`.
pub fn parse_laurent(s: &str) -> Result<LaurentX1, FormatError> {
    let s = s.trim();
    let Some((num, den)) = s.rsplit_once("/X1") else {
        return Ok(LaurentX1::from_poly(parse_poly(s)?));
    };
    let d: u32 = match den.strip_prefix('^') {
        Some(e) => e.parse().map_err(|_| FormatError::Number(e.to_string()))?,
        None if den.is_empty() => 1,
        None => return Err(FormatError::Term(s.to_string())),
    };
    let num = num
        .strip_prefix('(')
        .and_then(|n| n.strip_suffix(')'))
        .unwrap_or(num);
    Ok(LaurentX1::new(parse_poly(num)?, d))
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational, FormatError> {
    let s = s.trim();
    let bad = || FormatError::Number(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Comma-separated rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<BigRational>, FormatError> {
    s.split(',').map(parse_rational).collect()
}

pub fn rationals_to_strings(v: &[BigRational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn latex_monomial(m: &Monomial) -> String {
    let mut out = String::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => out.push_str(&format!("X_{{{}}}", i + 1)),
            _ => out.push_str(&format!("X_{{{}}}^{{{}}}", i + 1, e)),
        }
    }
    out
}

/// LaTeX body of a polynomial, e.g. `3X_{2}^{2}-X_{1}X_{3}`.
pub fn latex_poly(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let one = BigInt::from(1);
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let neg = c < &BigInt::from(0);
        let abs = if neg { -c } else { c.clone() };
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        if m.is_one() || abs != one {
            out.push_str(&abs.to_string());
        }
        out.push_str(&latex_monomial(m));
    }
    out
}

pub fn latex_laurent(l: &LaurentX1) -> String {
    match l.x1_den() {
        0 => latex_poly(l.numerator()),
        d => format!(
            "X_{{1}}^{{-{d}}}\\left({}\\right)",
            latex_poly(l.numerator())
        ),
    }
}

/// Two-column table of `S(n,k)` and `B(n,k)` for generations `1..=rows.len()`,
/// one `\hline` between generations. `rows[n-1][k-1] = (S(n,k), B(n,k))`.
pub fn latex_table(rows: &[Vec<(MPoly, MPoly)>]) -> String {
    let mut out = String::new();
    out.push_str("\\begin{tabular}{| l | l |}\n\\hline\n");
    out.push_str("$S_{n,k}$ & $B_{n,k}$ \\\\ \\hline\\hline\n");
    for (i, gen) in rows.iter().enumerate() {
        let n = i + 1;
        for (j, (s, b)) in gen.iter().enumerate() {
            let k = j + 1;
            out.push_str(&format!(
                "$S_{{{n},{k}}}={}$ & $B_{{{n},{k}}}={}$ \\\\\n",
                latex_poly(s),
                latex_poly(b)
            ));
        }
        out.push_str("\\hline\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

/// `n,k,value` lines with a header.
pub fn table_csv(t: &NumberTable) -> String {
    let mut out = String::from("n,k,value\n");
    for (n, row) in t.rows().iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            out.push_str(&format!("{n},{k},{v}\n"));
        }
    }
    out
}

/// One row per line, entries separated by single spaces.
pub fn table_text(t: &NumberTable) -> String {
    let mut out = String::new();
    for row in t.rows() {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn table_json(t: &NumberTable) -> serde_json::Value {
    let rows: Vec<Vec<String>> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    serde_json::json!({ "kind": t.kind().to_string(), "n": t.size(), "rows": rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_parse_round_trip() {
        let p = parse_poly("-945*X2^5 + 1260*X1*X2^3*X3 - X1^4*X6").unwrap();
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        assert_eq!(
            parse_poly("4*X1*X3 + 3*X2^2").unwrap().to_string(),
            "3*X2^2 + 4*X1*X3"
        );
        assert_eq!(parse_poly("1").unwrap(), MPoly::one());
        assert_eq!(parse_poly("0").unwrap(), MPoly::zero());
        assert!(parse_poly("3*Y2").is_err());
        assert!(parse_poly("X0").is_err());
    }

    #[test]
    fn laurent_text() {
        let l = LaurentX1::new(-MPoly::var(2), 3);
        assert_eq!(parse_laurent(&l.to_string()).unwrap(), l);
        let u = LaurentX1::x1_pow(-2);
        assert_eq!(parse_laurent(&u.to_string()).unwrap(), u);
    }

    #[test]
    fn json_shape() {
        let p = parse_poly("3*X2^2 - X1*X3").unwrap();
        assert_eq!(
            poly_to_json(&p),
            r#"{"terms":[{"coeff":"3","exponents":[0,2]},{"coeff":"-1","exponents":[1,0,1]}]}"#
        );
        assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
        let l = LaurentX1::new(p, 5);
        assert!(laurent_to_json(&l).ends_with(r#""x1_den":5}"#));
        assert_eq!(laurent_from_json(&laurent_to_json(&l)).unwrap(), l);
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("-3/6").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_rational_list("1, -2,3").unwrap().len(), 3);
    }

    #[test]
    fn latex_entry() {
        let p = parse_poly("3*X2^2 - X1*X3").unwrap();
        assert_eq!(latex_poly(&p), "3X_{2}^{2}-X_{1}X_{3}");
        assert_eq!(latex_poly(&MPoly::one()), "1");
    }
}
