//! Sufficient conditions for log-convexity of three-term recurrences, checked
//! per index with exact arithmetic and recorded as [`Certificate`]s.

mod certificate;
mod minus;
mod mu;
mod plus;

pub use certificate::{Certificate, Hypothesis, Verdict, Witness};
pub use minus::{
    abc_identity_holds, bisection_analysis, bisection_shapes, check_thm_c_minus, compute_abc,
    AbcTriple, BisectionShape,
};
pub use mu::Mu;
pub use plus::{
    c_plus_residual, check_interlacing, check_thm_c_plus, check_thm_crit_plus, check_thm_lc_plus,
    eq8_residual, lambda_n, lambda_residual, lc_plus_fixture, search_lc_plus_fixture, suggest_mu,
    LambdaSeq, MuSuggestion,
};

use num_traits::Zero;

use crate::convexity::{log_check, Mode};
use crate::error::{Error, Result};
use crate::exact_arith::Rat;
use crate::sequences::{gen_from_recurrence3, Recurrence3, Seq, Sign};

fn label(rec: &Recurrence3) -> String {
    rec.name.clone().unwrap_or_else(|| "recurrence3".into())
}

fn require_sign(rec: &Recurrence3, sign: Sign) -> Result<()> {
    if rec.sign != sign {
        return Err(Error::WrongSign {
            expected: sign.as_str(),
        });
    }
    Ok(())
}

/// `z_0 ..= z_n` in local indices.
fn terms_to(rec: &Recurrence3, n: usize) -> Result<Vec<Rat>> {
    Ok(gen_from_recurrence3(rec, n)?.terms.into_values())
}

/// `z_from .. z_{from+count-1}` log-convex (or log-concave).
fn seeds_hypothesis(z: &[Rat], from: usize, count: usize, mode: Mode) -> Hypothesis {
    let name = match mode {
        Mode::Convex => "seeds_log_convex",
        Mode::Concave => "seeds_log_concave",
    };
    let last = from + count - 1;
    let seq = Seq::new(z[from..=last].to_vec()).with_offset(from);
    let h = Hypothesis::new(name, true).over(from, last);
    match log_check(&seq, mode, false) {
        Ok(r) => match r.first_violation {
            None => h,
            Some(v) => h.failing_at(
                v.indices[1],
                format!("z_(k-1) z_(k+1) = {}, z_k^2 = {} at {:?}", v.outer, v.inner, v.indices),
            ),
        },
        Err(e) => h.failing_at(from, e.to_string()),
    }
}

/// Lists the indices in `[from, to]` where `c_n = 0`; such indices are
/// admissible and only strengthen each inequality.
fn zero_c_note(cert: &mut Certificate, rec: &Recurrence3, from: usize, to: usize) {
    let zeros: Vec<String> = (from..=to)
        .filter(|&n| rec.c(n).is_zero())
        .map(|n| n.to_string())
        .collect();
    if !zeros.is_empty() && zeros.len() <= 8 {
        cert.note(format!("c_n = 0 at n = {} (admissible)", zeros.join(", ")));
    } else if !zeros.is_empty() {
        cert.note(format!("c_n = 0 at {} indices (admissible)", zeros.len()));
    }
}
