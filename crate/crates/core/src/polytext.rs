//! Text format for univariate polynomials: `t^3 - t^2 - 2*t - 8`.
//!
//! Whitespace is ignored, `*` between a coefficient and the variable is
//! optional, and any single ASCII letter may serve as the variable as long as
//! it is used consistently. The printer always emits the `2*t` form so that
//! `parse(print(f)) == f` and `print(parse(s)) == s` for printed strings.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Parses `s` into ascending coefficients. When `var` is `None` the variable
/// letter is inferred from the input.
pub fn parse_coeffs(s: &str, var: Option<char>) -> Result<(Vec<BigInt>, Option<char>)> {
    let raw: Vec<char> = s.chars().collect();
    for (k, w) in raw.windows(3).enumerate() {
        if w[0].is_ascii_digit() && w[1].is_whitespace() {
            if let Some(next) = raw[k + 1..].iter().find(|c| !c.is_whitespace()) {
                if next.is_ascii_digit() {
                    return Err(Error::Parse(format!("digits separated by whitespace in {s:?}")));
                }
            }
        }
    }
    let chars: Vec<char> = raw.into_iter().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let err = |msg: &str, at: usize| Error::Parse(format!("{msg} at position {at} in {s:?}"));
    let mut var = var;
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut i = 0;
    let mut first = true;
    while i < chars.len() {
        let mut negative = false;
        match chars[i] {
            '+' => i += 1,
            '-' => {
                negative = true;
                i += 1
            }
            _ if first => {}
            _ => return Err(err("expected '+' or '-'", i)),
        }
        first = false;

        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: Option<BigInt> = if i > start {
            let digits: String = chars[start..i].iter().collect();
            Some(digits.parse().map_err(|_| err("bad number", start))?)
        } else {
            None
        };
        let mut exponent = 0usize;
        let star = i < chars.len() && chars[i] == '*';
        if star {
            if coeff.is_none() {
                return Err(err("'*' without a coefficient", i));
            }
            i += 1;
        }
        if i < chars.len() && chars[i].is_ascii_alphabetic() {
            let c = chars[i];
            match var {
                Some(v) if v != c => return Err(err(&format!("unexpected variable {c:?}"), i)),
                _ => var = Some(c),
            }
            i += 1;
            exponent = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let es = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if es == i {
                    return Err(err("missing exponent", es));
                }
                let digits: String = chars[es..i].iter().collect();
                exponent = digits.parse().map_err(|_| err("bad exponent", es))?;
                if exponent > 1 << 16 {
                    return Err(err("exponent too large", es));
                }
            }
        } else if star || coeff.is_none() {
            return Err(err("expected a term", i));
        }
        let mut c = coeff.unwrap_or_else(BigInt::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, BigInt::zero());
        }
        coeffs[exponent] += c;
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Ok((coeffs, var))
}

/// Formats ascending integer coefficients as `t^2 - 2*t + 1`.
pub fn format_coeffs(coeffs: &[BigInt], var: char) -> String {
    let mut out = String::new();
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = match deg {
            0 => String::new(),
            1 => var.to_string(),
            d => format!("{var}^{d}"),
        };
        if deg == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
