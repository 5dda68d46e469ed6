//! JSON sequence spec files.
//!
//! ```json
//! {"kind":"recurrence3","sign":"minus","alpha":[2,1],"beta":[3,6],"gamma":[-1,1],
//!  "initial":[1,1],"start":1}
//! {"kind":"named","name":"motzkin"}
//! ```
//!
//! Coefficient lists `[c0, c1, ...]` mean `c0 + c1 n + ...`; entries may be
//! integers or `"p/q"` strings.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact_arith::scalar::parse_rat;
use crate::exact_arith::{Rat, RatPoly};

use super::catalogue::{named_recurrence, SEQUENCE_NAMES};
use super::recurrence::{Recurrence3, Sign};

/// Coefficient positivity is validated on `[start, start + DEFAULT_VALIDATE_SPAN]`
/// unless the file sets `validate_to`.
pub const DEFAULT_VALIDATE_SPAN: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqSpec {
    Named { name: String, offset: usize },
    Recurrence(Recurrence3),
}

impl SeqSpec {
    /// The recurrence behind the spec, resolving catalogue names.
    pub fn recurrence(&self) -> Option<Recurrence3> {
        match self {
            SeqSpec::Recurrence(r) => Some(r.clone()),
            SeqSpec::Named { name, .. } => named_recurrence(name),
        }
    }

    pub fn label(&self) -> String {
        match self {
            SeqSpec::Named { name, .. } => name.clone(),
            SeqSpec::Recurrence(r) => r.name.clone().unwrap_or_else(|| "recurrence3".into()),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    kind: String,
    name: Option<String>,
    sign: Option<String>,
    alpha: Option<Vec<Number>>,
    beta: Option<Vec<Number>>,
    gamma: Option<Vec<Number>>,
    initial: Option<Vec<Number>>,
    start: Option<usize>,
    offset: Option<usize>,
    validate_to: Option<usize>,
}

fn field_error(field: &str, message: impl Into<String>) -> Error {
    Error::Validation {
        field: field.to_string(),
        message: message.into(),
    }
}

fn missing(field: &str) -> Error {
    Error::Parse {
        line: 1,
        column: 1,
        message: format!("missing field `{field}`"),
    }
}

fn to_rats(field: &str, values: Vec<Number>) -> Result<Vec<Rat>> {
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| match v {
            Number::Int(x) => Ok(Rat::from_integer(x.into())),
            Number::Text(s) => parse_rat(&s).ok_or_else(|| Error::Parse {
                line: 1,
                column: 1,
                message: format!("field `{field}[{i}]`: `{s}` is not an integer or p/q rational"),
            }),
        })
        .collect()
}

/// Parses and validates a spec document.
pub fn parse_seq_spec(text: &str) -> Result<SeqSpec> {
    let raw: RawSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    match raw.kind.as_str() {
        "named" => {
            let name = raw.name.ok_or_else(|| missing("name"))?;
            if !SEQUENCE_NAMES.contains(&name.as_str()) {
                return Err(Error::UnknownSequence(name));
            }
            Ok(SeqSpec::Named {
                name,
                offset: raw.offset.unwrap_or(0),
            })
        }
        "recurrence3" => {
            let sign = match raw.sign.as_deref() {
                Some("plus") => Sign::Plus,
                Some("minus") => Sign::Minus,
                Some(other) => {
                    return Err(field_error("sign", format!("expected plus or minus, got `{other}`")))
                }
                None => return Err(missing("sign")),
            };
            let alpha = to_rats("alpha", raw.alpha.ok_or_else(|| missing("alpha"))?)?;
            let beta = to_rats("beta", raw.beta.ok_or_else(|| missing("beta"))?)?;
            let gamma = to_rats("gamma", raw.gamma.ok_or_else(|| missing("gamma"))?)?;
            let initial = to_rats("initial", raw.initial.ok_or_else(|| missing("initial"))?)?;
            let start = raw.start.unwrap_or(1);
            if start == 0 {
                return Err(field_error("start", "must be at least 1"));
            }
            if initial.len() < start + 1 {
                return Err(field_error(
                    "initial",
                    format!("need {} values for start = {start}", start + 1),
                ));
            }
            let mut rec = Recurrence3::new(
                RatPoly::new(alpha),
                RatPoly::new(beta),
                RatPoly::new(gamma),
                sign,
                initial,
            )
            .with_start(start)
            .with_offset(raw.offset.unwrap_or(0));
            if let Some(name) = raw.name {
                rec = rec.with_name(name);
            }
            let to = raw.validate_to.unwrap_or(start + DEFAULT_VALIDATE_SPAN);
            rec.check_coefficients(start, to).map_err(|e| match e {
                Error::NonPositiveCoefficient { which, n } => field_error(
                    match which {
                        "a" => "alpha",
                        "b" => "beta",
                        _ => "gamma",
                    },
                    format!("coefficient not positive at n = {n}"),
                ),
                other => other,
            })?;
            Ok(SeqSpec::Recurrence(rec))
        }
        other => Err(field_error("kind", format!("expected named or recurrence3, got `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::recurrence::gen_from_recurrence3;

    #[test]
    fn little_schroder_document() {
        let spec = parse_seq_spec(
            r#"{"kind":"recurrence3","sign":"minus","alpha":[2,1],"beta":[3,6],"gamma":[-1,1],"initial":[1,1],"start":1}"#,
        )
        .unwrap();
        let rec = spec.recurrence().unwrap();
        let expected = named_recurrence("little_schroder").unwrap();
        assert_eq!((&rec.alpha, &rec.beta, &rec.gamma, rec.sign), (&expected.alpha, &expected.beta, &expected.gamma, expected.sign));
        let terms = gen_from_recurrence3(&rec, 4).unwrap().terms.to_int().unwrap();
        assert_eq!(terms.values(), [1, 1, 3, 11, 45].map(crate::exact_arith::Int::from));
    }

    #[test]
    fn named_document() {
        assert_eq!(
            parse_seq_spec(r#"{"kind":"named","name":"motzkin"}"#).unwrap(),
            SeqSpec::Named { name: "motzkin".into(), offset: 0 }
        );
    }

    #[test]
    fn missing_initial() {
        let err = parse_seq_spec(r#"{"kind":"recurrence3","sign":"plus","alpha":[1],"beta":[1],"gamma":[1]}"#)
            .unwrap_err();
        assert!(matches!(err, Error::Parse { ref message, .. } if message.contains("initial")), "{err:?}");
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_seq_spec("{\n \"kind\": \"named\",\n \"name\": }").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn rational_coefficients_and_validation() {
        let spec = parse_seq_spec(
            r#"{"kind":"recurrence3","sign":"plus","alpha":["1/2"],"beta":[1],"gamma":[1],"initial":[1,1]}"#,
        );
        assert!(spec.is_ok());
        let err = parse_seq_spec(
            r#"{"kind":"recurrence3","sign":"plus","alpha":[1],"beta":[5,-1],"gamma":[1],"initial":[1,1]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Validation { ref field, .. } if field == "beta"), "{err:?}");
    }
}
