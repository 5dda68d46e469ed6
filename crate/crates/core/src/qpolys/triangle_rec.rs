//! Triangles from `T(n,k) = (a1 n + a2 k + a3) T(n-1,k) + (b1 n + b2 k + b3) T(n-1,k-1)`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{q_log_convex_check, PolySeq};
use crate::error::{Error, Result};
use crate::exact_arith::scalar::{rat_int, rat_to_int, rat_to_string};
use crate::exact_arith::{Int, IntPoly, Rat};
use crate::recurrence_analysis::{Certificate, Hypothesis, Verdict};
use crate::sequences::Triangle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleRec {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub b1: Rat,
    pub b2: Rat,
    pub b3: Rat,
}

impl TriangleRec {
    pub fn from_i64(a: [i64; 3], b: [i64; 3]) -> Self {
        TriangleRec {
            a1: rat_int(a[0]),
            a2: rat_int(a[1]),
            a3: rat_int(a[2]),
            b1: rat_int(b[0]),
            b2: rat_int(b[1]),
            b3: rat_int(b[2]),
        }
    }

    pub fn stirling2() -> Self {
        Self::from_i64([0, 1, 0], [0, 0, 1])
    }

    pub fn eulerian() -> Self {
        Self::from_i64([0, 1, 0], [1, -1, 1])
    }

    pub fn label(&self) -> String {
        let s = |r: &Rat| rat_to_string(r);
        format!(
            "a=({},{},{}),b=({},{},{})",
            s(&self.a1),
            s(&self.a2),
            s(&self.a3),
            s(&self.b1),
            s(&self.b2),
            s(&self.b3)
        )
    }

    /// Nonnegativity of both linear coefficients on the triangle.
    pub fn check_admissible(&self) -> Result<()> {
        let conditions = [
            ("a1", self.a1.clone()),
            ("a1+a2", &self.a1 + &self.a2),
            ("a1+a3", &self.a1 + &self.a3),
            ("b1", self.b1.clone()),
            ("b1+b2", &self.b1 + &self.b2),
            ("b1+b2+b3", &self.b1 + &self.b2 + &self.b3),
        ];
        for (name, v) in conditions {
            if v.is_negative() {
                return Err(Error::InadmissibleRecurrence(format!(
                    "{name} = {} < 0",
                    rat_to_string(&v)
                )));
            }
        }
        Ok(())
    }

    /// `a2 b1 - a1 b2`, `a2 (b1 + b2) - a1 b2`, `a2 (b1 + b2 + b3) - (a1 + a3) b2`.
    pub fn quantities(&self) -> [Rat; 3] {
        let a1b2 = &self.a1 * &self.b2;
        [
            &self.a2 * &self.b1 - &a1b2,
            &self.a2 * (&self.b1 + &self.b2) - &a1b2,
            &self.a2 * (&self.b1 + &self.b2 + &self.b3) - (&self.a1 + &self.a3) * &self.b2,
        ]
    }

    /// `(p, r, s)` with the condition reading `p n + r k + s >= 0`.
    pub fn linear_condition(&self) -> [Rat; 3] {
        [
            &self.a2 * &self.b1 - &self.a1 * &self.b2,
            &self.a2 * &self.b2,
            &self.a2 * &self.b3 - &self.a3 * &self.b2,
        ]
    }

    /// Rows `0..=n_max`, `T(0,0) = 1`.
    pub fn rows(&self, n_max: usize) -> Vec<Vec<Rat>> {
        let mut rows = vec![vec![Rat::one()]];
        for n in 1..=n_max {
            let nr = rat_int(n as i64);
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let kr = rat_int(k as i64);
                    let mut v = Rat::zero();
                    if let Some(same) = prev.get(k) {
                        v += (&self.a1 * &nr + &self.a2 * &kr + &self.a3) * same;
                    }
                    if k > 0 {
                        v += (&self.b1 * &nr + &self.b2 * &kr + &self.b3) * &prev[k - 1];
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
        rows
    }

    /// The generated triangle when every entry is an integer.
    pub fn triangle(&self, n_max: usize) -> Option<Triangle> {
        let rows = self
            .rows(n_max)
            .iter()
            .map(|r| r.iter().map(rat_to_int).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(Triangle::new(rows))
    }

    /// Row polynomials scaled by `D^n`, `D` the lcm of the coefficient
    /// denominators. The geometric factor cancels in
    /// `P_{n-1} P_{n+1} - P_n^2`, so q-log-convexity is unchanged.
    pub fn row_poly_seq(&self, n_max: usize) -> PolySeq {
        let d = [&self.a1, &self.a2, &self.a3, &self.b1, &self.b2, &self.b3]
            .iter()
            .fold(Int::one(), |acc, r| acc.lcm(r.denom()));
        let mut scale = Int::one();
        let polys = self
            .rows(n_max)
            .into_iter()
            .map(|row| {
                let coeffs = row
                    .iter()
                    .map(|v| rat_to_int(&(v * Rat::from_integer(scale.clone()))).expect("D^n clears denominators"))
                    .collect();
                scale *= &d;
                IntPoly::new(coeffs)
            })
            .collect();
        PolySeq::new(polys).with_name(self.label())
    }
}

/// The three quantities decide the linear condition on all of `0 < k <= n`:
/// writing it as `p (n - k) + (p + r)(k - 1) + (p + r + s)`, they are the
/// coefficients `p`, `p + r`, `p + r + s`. Rows through `n_max` are also
/// generated and checked directly.
pub fn check_thm_t_qlcx(tr: &TriangleRec, n_max: usize) -> Result<Certificate> {
    tr.check_admissible()?;
    let n_max = n_max.max(2);
    let mut cert = Certificate::new("t_qlcx", &tr.label(), (0, n_max));
    let qs = tr.quantities();
    for (i, v) in qs.iter().enumerate() {
        cert.value(&format!("quantity_{}", i + 1), rat_to_string(v));
    }
    let [p, r, s] = tr.linear_condition();
    cert.value(
        "condition",
        format!("({}) n + ({}) k + ({})", rat_to_string(&p), rat_to_string(&r), rat_to_string(&s)),
    );

    let mut h = Hypothesis::new("quantities_nonneg", true);
    if let Some(i) = qs.iter().position(|v| v.is_negative()) {
        h = h.failing_at(i + 1, format!("quantity_{} = {}", i + 1, rat_to_string(&qs[i])));
    }
    cert.push(h);

    let mut scan = Hypothesis::new("condition_scan", true).over(1, n_max);
    'outer: for n in 1..=n_max {
        for k in 1..=n {
            let v = &p * rat_int(n as i64) + &r * rat_int(k as i64) + &s;
            if v.is_negative() {
                scan = scan.failing_at(n, format!("k = {k}: {}", rat_to_string(&v)));
                break 'outer;
            }
        }
    }
    cert.push(scan);

    let report = q_log_convex_check(&tr.row_poly_seq(n_max))?;
    let mut rows = Hypothesis::new("rows_q_log_convex", true).over(report.range_checked.0, report.range_checked.1);
    if let Some(v) = report.first_violation {
        rows = rows.failing_at(v.n, format!("coefficient {} at q^{}", v.coefficient, v.power));
    }
    cert.push(rows);
    Ok(cert.conclude(Verdict::LogConvex))
}
