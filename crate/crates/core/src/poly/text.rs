//! Human-readable and list text formats shared by [`IntPoly`] and
//! [`SymLaurent`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, SymLaurent};
use crate::error::{Error, Result};

/// Writes `terms` (already in the desired order, nonzero coefficients) as
/// `c*v^e + ...`, eliding unit coefficients and exponent 1.
fn write_terms<'a>(
    out: &mut impl fmt::Write,
    var: char,
    terms: impl Iterator<Item = (i64, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => out.write_char('-')?,
            (true, false) => {}
            (false, true) => out.write_str(" - ")?,
            (false, false) => out.write_str(" + ")?,
        }
        first = false;
        let mag = c.abs();
        if e == 0 {
            write!(out, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            write!(out, "{mag}*")?;
        }
        out.write_char(var)?;
        if e != 1 {
            write!(out, "^{e}")?;
        }
    }
    if first {
        out.write_char('0')?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, c));
        write_terms(f, 'x', terms)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl IntPoly {
    /// List form `[c0,c1,...,cd]`.
    pub fn to_list_string(&self) -> String {
        let body: Vec<String> = self.coeffs().iter().map(ToString::to_string).collect();
        format!("[{}]", body.join(","))
    }
}

impl fmt::Display for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, 't', self.terms().rev())
    }
}

impl fmt::Debug for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymLaurent({self})")
    }
}

/// Parses a sum of terms `[-]c`, `[-][c*]v`, `[-][c*]v^e` in the variable
/// `var`. Whitespace may separate tokens; repeated exponents are summed.
pub(crate) fn parse_terms(s: &str, var: char, allow_negative_exp: bool) -> Result<Vec<(i64, BigInt)>> {
    let chars: Vec<char> = s.chars().collect();
    if s.trim().is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let err = |pos: usize, what: &str| Error::Parse(format!("{what} at position {pos} in {s:?}"));
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>()
    };

    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };

    let mut terms = Vec::new();
    let mut i = 0;
    skip_ws(&mut i);
    let start = i;
    while i < chars.len() {
        let negative = match chars[i] {
            '+' if i > start => {
                i += 1;
                false
            }
            '-' => {
                i += 1;
                true
            }
            _ if i == start => false,
            _ => return Err(err(i, "expected '+' or '-'")),
        };
        skip_ws(&mut i);
        let coef_digits = digits(&mut i);
        let has_coef = !coef_digits.is_empty();
        let mut coef: BigInt = if has_coef {
            coef_digits.parse().map_err(|_| err(i, "bad integer"))?
        } else {
            BigInt::one()
        };
        skip_ws(&mut i);
        if has_coef && i < chars.len() && chars[i] == '*' {
            i += 1;
            skip_ws(&mut i);
            if i >= chars.len() || chars[i] != var {
                return Err(err(i, &format!("expected '{var}' after '*'")));
            }
        }
        let exp = if i < chars.len() && chars[i] == var {
            i += 1;
            skip_ws(&mut i);
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                skip_ws(&mut i);
                let neg_exp = i < chars.len() && chars[i] == '-';
                if neg_exp {
                    if !allow_negative_exp {
                        return Err(err(i, "negative exponent"));
                    }
                    i += 1;
                }
                let e = digits(&mut i);
                if e.is_empty() {
                    return Err(err(i, "expected exponent"));
                }
                let e: i64 = e.parse().map_err(|_| err(i, "exponent out of range"))?;
                if neg_exp {
                    -e
                } else {
                    e
                }
            } else {
                1
            }
        } else if has_coef {
            0
        } else {
            return Err(err(i, "expected a term"));
        };
        if negative {
            coef = -coef;
        }
        terms.push((exp, coef));
        skip_ws(&mut i);
    }
    Ok(terms)
}

fn parse_list(s: &str) -> Result<IntPoly> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [c0,c1,...] in {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(IntPoly::zero());
    }
    let coeffs = inner
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Accepts both the human form `x^4 - 4*x^2 + 2` and the list form
    /// `[2,0,-4,0,1]`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            return parse_list(s);
        }
        let terms = parse_terms(s, 'x', false)?;
        let deg = terms.iter().map(|(e, _)| *e).max().unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (e, c) in terms {
            coeffs[e as usize] += c;
        }
        Ok(IntPoly::new(coeffs))
    }
}

impl FromStr for SymLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SymLaurent::from_terms(parse_terms(s, 't', true)?)
    }
}
