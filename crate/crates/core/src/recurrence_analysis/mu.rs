//! The comparison sequence `mu_n` used by the `mu`-interlacing criterion.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::scalar::{rat_int, rat_to_string};
use crate::exact_arith::{Rat, RatPoly};

/// `mu_n`, either a rational function `p(n) / q(n)` or a table indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mu {
    RatFn { num: RatPoly, den: RatPoly },
    /// `values[0]` is `mu_1`.
    Table(Vec<Rat>),
}

impl Mu {
    pub fn ratfn(num: RatPoly, den: RatPoly) -> Self {
        Mu::RatFn { num, den }
    }

    /// `None` off the end of a table or at a pole.
    pub fn at(&self, n: usize) -> Option<Rat> {
        match self {
            Mu::RatFn { num, den } => {
                let x = rat_int(n as i64);
                let d = den.eval(&x);
                (d != Rat::from_integer(0.into())).then(|| num.eval(&x) / d)
            }
            Mu::Table(v) => n.checked_sub(1).and_then(|i| v.get(i)).cloned(),
        }
    }

    /// Parses `"(2n+5)/2"`, `"6n/(2n+1)"`, `"n+10"`: integer-coefficient
    /// polynomials in `n` with an optional top-level `/`.
    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |m: &str| Error::Validation {
            field: "mu".into(),
            message: format!("`{text}`: {m}"),
        };
        if s.is_empty() {
            return Err(bad("empty"));
        }
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => {
                    if split.is_some() {
                        return Err(bad("more than one top-level `/`"));
                    }
                    split = Some(i);
                }
                _ => {}
            }
            if depth < 0 {
                return Err(bad("unbalanced parentheses"));
            }
        }
        if depth != 0 {
            return Err(bad("unbalanced parentheses"));
        }
        let (num, den) = match split {
            Some(i) => (&s[..i], &s[i + 1..]),
            None => (s.as_str(), "1"),
        };
        let num = parse_poly(strip_parens(num)).map_err(|m| bad(&m))?;
        let den = parse_poly(strip_parens(den)).map_err(|m| bad(&m))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(Mu::RatFn { num, den })
    }
}

impl fmt::Display for Mu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mu::RatFn { num, den } => write!(f, "({})/({})", show_poly(num), show_poly(den)),
            Mu::Table(v) => {
                let parts: Vec<String> = v.iter().map(rat_to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

fn show_poly(p: &RatPoly) -> String {
    p.to_string().replace('q', "n")
}

fn strip_parens(s: &str) -> &str {
    if s.starts_with('(') && s.ends_with(')') {
        // only when the outer pair encloses everything
        let mut depth = 0;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if depth == 0 && i < s.len() - 1 {
                return s;
            }
        }
        return &s[1..s.len() - 1];
    }
    s
}

/// Sum of terms `[+-] [c][*] [n[^k]]`.
fn parse_poly(s: &str) -> std::result::Result<RatPoly, String> {
    if s.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut coeffs: Vec<Rat> = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut negative = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            negative = bytes[i] == b'-';
            i += 1;
        } else if i > 0 {
            return Err(format!("unexpected `{}`", bytes[i] as char));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: Option<i64> = if i > start {
            Some(s[start..i].parse().map_err(|_| "coefficient too large".to_string())?)
        } else {
            None
        };
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        let mut power = 0usize;
        if i < bytes.len() && bytes[i] == b'n' {
            i += 1;
            power = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let ps = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                power = s[ps..i].parse().map_err(|_| "bad exponent".to_string())?;
            }
        } else if coeff.is_none() {
            return Err(format!("expected a term at position {start}"));
        }
        let c = coeff.unwrap_or(1) * if negative { -1 } else { 1 };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rat::from_integer(0.into()));
        }
        coeffs[power] = &coeffs[power] + rat_int(c);
    }
    Ok(RatPoly::new(coeffs))
}
