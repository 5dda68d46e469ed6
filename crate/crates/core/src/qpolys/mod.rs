//! Polynomial sequences and coefficientwise (q-) log-convexity.
//!
//! `P_{n-1} P_{n+1} - P_n^2` must have nonnegative coefficients for every
//! interior `n` (reversed for the concave dual).

mod curvature;
mod families;
mod triangle_rec;

pub use curvature::{
    check_c1_c2, curvature_table, run_conjecture, transform_preserves_lcx_probe, C2Status,
    ConjectureReport, CurvatureTable, ProbeFailure, ProbeReport, CONJECTURE_NAMES,
};
pub use families::{gen_poly_seq, FAMILY_NAMES};
pub use triangle_rec::{check_thm_t_qlcx, TriangleRec};

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::convexity::{Mode, Status};
use crate::error::{Error, Result};
use crate::exact_arith::{Int, IntPoly};

/// `polys[n]` is `P_n(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeq {
    pub polys: Vec<IntPoly>,
    pub name: Option<String>,
}

impl PolySeq {
    pub fn new(polys: Vec<IntPoly>) -> Self {
        PolySeq { polys, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// `P_{n-1} P_{n+1} - P_n^2`.
    pub fn difference(&self, n: usize) -> IntPoly {
        let p = &self.polys;
        p[n - 1].mul(&p[n + 1]).sub(&p[n].mul(&p[n]))
    }
}

/// The first `n` whose difference polynomial has a coefficient of the wrong
/// sign, the smallest such power, and that coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QViolation {
    pub n: usize,
    pub power: usize,
    pub coefficient: Int,
}

impl Serialize for QViolation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QViolation", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("power", &self.power)?;
        st.serialize_field("coefficient", &self.coefficient.to_string())?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QCheckReport {
    pub status: Status,
    pub first_violation: Option<QViolation>,
    /// Interior `n` examined.
    pub range_checked: (usize, usize),
}

impl QCheckReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

fn q_check(ps: &PolySeq, mode: Mode) -> Result<QCheckReport> {
    if ps.len() < 3 {
        return Err(Error::TooShort {
            needed: 3,
            have: ps.len(),
        });
    }
    let last = ps.len() - 2;
    let first_violation = (1..=last).into_par_iter().find_map_first(|n| {
        let d = ps.difference(n);
        let bad = match mode {
            Mode::Convex => d.coeffs().iter().position(|c| c.is_negative()),
            Mode::Concave => d.coeffs().iter().position(|c| c.is_positive()),
        };
        bad.map(|power| QViolation {
            n,
            power,
            coefficient: d.coeff(power),
        })
    });
    Ok(QCheckReport {
        status: if first_violation.is_some() {
            Status::Fails
        } else {
            Status::Holds
        },
        first_violation,
        range_checked: (1, last),
    })
}

pub fn q_log_convex_check(ps: &PolySeq) -> Result<QCheckReport> {
    q_check(ps, Mode::Convex)
}

pub fn q_log_concave_check(ps: &PolySeq) -> Result<QCheckReport> {
    q_check(ps, Mode::Concave)
}
