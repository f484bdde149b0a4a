//! Jackson q-integrals: weighted sums over geometric lattices `c q^(+-j)`,
//! with relative-tail truncation and divergence monitoring.

use super::{Error, QParam, TAIL_WINDOW};

/// Which Jackson integral family a sum belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QFlavor {
    /// Lattices descending by powers of q.
    Q,
    /// Lattices ascending by powers of 1/q.
    QInverse,
}

/// Supported integration intervals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum QInterval {
    /// (0, a) with a > 0.
    ZeroTo(f64),
    /// (a, 0) with a < 0.
    ToZero(f64),
    /// (a, b) with 0 < a < b.
    PositivePair(f64, f64),
    /// (a, b) with a < 0 < b.
    Straddling(f64, f64),
    /// (0, inf): bilateral exponent lattice q^j, j in Z.
    ZeroToInfinity,
    /// (-inf, inf): both signs of the bilateral lattice.
    RealLine,
    /// (a, inf) with a > 0; only the 1/q flavor reaches this shape.
    ToInfinity(f64),
}

/// Which side of a two-sided support a lattice point belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeBranch {
    /// Points generated from the lower endpoint `a`.
    FromA,
    /// Points generated from the upper endpoint `b`.
    FromB,
    PositiveAxis,
    NegativeAxis,
}

impl LatticeBranch {
    pub fn label(&self) -> &'static str {
        match self {
            LatticeBranch::FromA => "a-branch",
            LatticeBranch::FromB => "b-branch",
            LatticeBranch::PositiveAxis => "positive-axis",
            LatticeBranch::NegativeAxis => "negative-axis",
        }
    }
}

/// One support point `generator * q^k` (k may be negative on 1/q branches).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatticePoint {
    pub value: f64,
    pub exponent: i64,
    pub branch: LatticeBranch,
}

/// A truncated lattice sum with its tail estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatticeSum {
    pub value: f64,
    /// Magnitude of the last window of dropped/settled terms, as an estimate.
    pub tail_bound: f64,
    pub terms: usize,
}

/// Neumaier compensated accumulator; lattice sums mix wildly scaled terms.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Sum `sum_{j>=0} term(j)` where `term` decays along a geometric lattice.
/// Stops after `TAIL_WINDOW` consecutive terms below `eps_tail * |running|`;
/// reports divergence if terms grow over a full window.
pub(crate) fn sum_lattice_terms(
    mut term: impl FnMut(i64) -> f64,
    point: impl Fn(i64) -> f64,
    p: &QParam,
) -> Result<LatticeSum, Error> {
    let mut acc = Accumulator::default();
    let mut small_run = 0usize;
    let mut grow_run = 0usize;
    let mut prev_mag = f64::INFINITY;
    let mut j: i64 = 0;
    loop {
        let t = term(j);
        if !t.is_finite() {
            return Err(Error::Divergence {
                lattice_point: point(j),
            });
        }
        acc.add(t);
        let mag = t.abs();
        if mag > prev_mag {
            grow_run += 1;
            if grow_run >= TAIL_WINDOW {
                return Err(Error::Divergence {
                    lattice_point: point(j),
                });
            }
        } else {
            grow_run = 0;
        }
        prev_mag = mag;
        if mag < p.eps_tail() * acc.total().abs().max(f64::MIN_POSITIVE) {
            small_run += 1;
            if small_run >= TAIL_WINDOW {
                return Ok(LatticeSum {
                    value: acc.total(),
                    tail_bound: mag * TAIL_WINDOW as f64,
                    terms: (j + 1) as usize,
                });
            }
        } else {
            small_run = 0;
        }
        j += 1;
        if j as usize > p.max_terms() {
            return Err(Error::Nonconvergence {
                terms: p.max_terms(),
            });
        }
    }
}

/// `(1-q) |a| sum_{j>=0} q^j f(q^j a)`: the Jackson integral from 0 to `a`
/// (or from `a` to 0 when `a < 0`).
fn jackson_to_zero(f: &dyn Fn(f64) -> f64, a: f64, p: &QParam) -> Result<LatticeSum, Error> {
    let q = p.q();
    let w = (1.0 - q) * a.abs();
    sum_lattice_terms(
        |j| w * q.powi(j as i32) * f(q.powi(j as i32) * a),
        |j| q.powi(j as i32) * a,
        p,
    )
}

/// `(1-q) sum_{j in Z} q^j f(q^j)`: the improper integral over (0, inf).
fn jackson_zero_to_infinity(f: &dyn Fn(f64) -> f64, p: &QParam) -> Result<LatticeSum, Error> {
    let q = p.q();
    let w = 1.0 - q;
    let down = sum_lattice_terms(
        |j| w * q.powi(j as i32) * f(q.powi(j as i32)),
        |j| q.powi(j as i32),
        p,
    )?;
    // j = -1, -2, ... : points growing towards infinity
    let up = sum_lattice_terms(
        |j| {
            let e = -(j + 1) as i32;
            w * q.powi(e) * f(q.powi(e))
        },
        |j| q.powi(-(j + 1) as i32),
        p,
    )?;
    Ok(LatticeSum {
        value: down.value + up.value,
        tail_bound: down.tail_bound + up.tail_bound,
        terms: down.terms + up.terms,
    })
}

/// `(q^{-1}-1) a sum_{j>=0} q^{-j} f(q^{-j} a)` for a > 0, the 1/q-flavor
/// integral over (a, inf). Requires the summand to decay; monitored.
fn jackson_q_inverse_to_infinity(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    p: &QParam,
) -> Result<LatticeSum, Error> {
    let q = p.q();
    let w = (1.0 / q - 1.0) * a;
    sum_lattice_terms(
        |j| w * q.powi(-(j as i32)) * f(q.powi(-(j as i32)) * a),
        |j| q.powi(-(j as i32)) * a,
        p,
    )
}

/// Jackson q-integral of `f` over `interval` in the requested flavor.
///
/// The q flavor covers the six finite/improper shapes built from descending
/// lattices; the 1/q flavor covers `(a, inf)` with `a > 0`. Lattice sums stop
/// by the relative-tail rule and report growth as a divergence error carrying
/// the offending lattice point.
pub fn qintegral(
    f: impl Fn(f64) -> f64,
    interval: QInterval,
    flavor: QFlavor,
    p: &QParam,
) -> Result<LatticeSum, Error> {
    let f: &dyn Fn(f64) -> f64 = &f;
    match (flavor, interval) {
        (QFlavor::Q, QInterval::ZeroTo(a)) => {
            if !(a > 0.0) {
                return Err(Error::BadInterval("(0,a) needs a > 0"));
            }
            jackson_to_zero(f, a, p)
        }
        (QFlavor::Q, QInterval::ToZero(a)) => {
            if !(a < 0.0) {
                return Err(Error::BadInterval("(a,0) needs a < 0"));
            }
            jackson_to_zero(f, a, p)
        }
        (QFlavor::Q, QInterval::PositivePair(a, b)) => {
            if !(0.0 < a && a < b) {
                return Err(Error::BadInterval("(a,b) needs 0 < a < b"));
            }
            let hi = jackson_to_zero(f, b, p)?;
            let lo = jackson_to_zero(f, a, p)?;
            Ok(LatticeSum {
                value: hi.value - lo.value,
                tail_bound: hi.tail_bound + lo.tail_bound,
                terms: hi.terms + lo.terms,
            })
        }
        (QFlavor::Q, QInterval::Straddling(a, b)) => {
            if !(a < 0.0 && 0.0 < b) {
                return Err(Error::BadInterval("(a,b) needs a < 0 < b"));
            }
            let neg = jackson_to_zero(f, a, p)?;
            let pos = jackson_to_zero(f, b, p)?;
            Ok(LatticeSum {
                value: neg.value + pos.value,
                tail_bound: neg.tail_bound + pos.tail_bound,
                terms: neg.terms + pos.terms,
            })
        }
        (QFlavor::Q, QInterval::ZeroToInfinity) => jackson_zero_to_infinity(f, p),
        (QFlavor::Q, QInterval::RealLine) => {
            let pos = jackson_zero_to_infinity(f, p)?;
            let neg = jackson_zero_to_infinity(&|x| f(-x), p)?;
            Ok(LatticeSum {
                value: pos.value + neg.value,
                tail_bound: pos.tail_bound + neg.tail_bound,
                terms: pos.terms + neg.terms,
            })
        }
        (QFlavor::QInverse, QInterval::ToInfinity(a)) => {
            if !(a > 0.0) {
                return Err(Error::BadInterval("(a,inf) needs a > 0"));
            }
            jackson_q_inverse_to_infinity(f, a, p)
        }
        _ => Err(Error::BadInterval("flavor does not reach this shape")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: f64) -> QParam {
        QParam::new(q).unwrap()
    }

    #[test]
    fn constant_over_unit_interval() {
        // (1-q) sum q^j = 1
        let p = params(0.5);
        let r = qintegral(|_| 1.0, QInterval::ZeroTo(1.0), QFlavor::Q, &p).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identity_over_unit_interval() {
        // integral of x over (0,1) = 1/(1+q)
        let p = params(0.5);
        let r = qintegral(|x| x, QInterval::ZeroTo(1.0), QFlavor::Q, &p).unwrap();
        assert!((r.value - 1.0 / 1.5).abs() < 1e-12);
    }

    #[test]
    fn odd_function_over_symmetric_interval() {
        let p = params(0.5);
        let r = qintegral(|x| x, QInterval::Straddling(-1.0, 1.0), QFlavor::Q, &p).unwrap();
        assert!(r.value.abs() < 1e-14);
    }

    #[test]
    fn additivity_on_positive_pair() {
        let p = params(0.7);
        let f = |x: f64| x * x - 0.3 * x + 1.0;
        let ab = qintegral(f, QInterval::PositivePair(0.25, 1.5), QFlavor::Q, &p).unwrap();
        let b = qintegral(f, QInterval::ZeroTo(1.5), QFlavor::Q, &p).unwrap();
        let a = qintegral(f, QInterval::ZeroTo(0.25), QFlavor::Q, &p).unwrap();
        let expect = b.value - a.value;
        assert!((ab.value - expect).abs() <= 1e-12 * expect.abs().max(1.0));
    }

    #[test]
    fn improper_integral_of_gaussian_like_weight() {
        // f(q^j) = q^{j^2} decays in both lattice directions.
        let p = params(0.5);
        let f = |x: f64| {
            let j = x.ln() / 0.5f64.ln();
            0.5f64.powf(j * j)
        };
        let r = qintegral(f, QInterval::ZeroToInfinity, QFlavor::Q, &p).unwrap();
        assert!(r.value.is_finite() && r.value > 0.0);
    }

    #[test]
    fn q_inverse_integral_detects_divergence() {
        let p = params(0.5);
        let r = qintegral(|_| 1.0, QInterval::ToInfinity(1.0), QFlavor::QInverse, &p);
        assert!(matches!(r, Err(Error::Divergence { .. })));
    }

    #[test]
    fn q_inverse_integral_of_decaying_summand() {
        // f(x) = q^{2 j} at x = q^{-j}: sum (q^{-1}-1) q^{-j} q^{2j} converges.
        let p = params(0.5);
        let q = 0.5f64;
        let f = move |x: f64| {
            let j = -(x.ln() / q.ln());
            q.powf(2.0 * j)
        };
        let r = qintegral(f, QInterval::ToInfinity(1.0), QFlavor::QInverse, &p).unwrap();
        // (q^{-1}-1) * sum_j q^j = (q^{-1}-1)/(1-q) = 1/q = 2
        assert!((r.value - 2.0).abs() < 1e-10);
    }

    #[test]
    fn interval_shape_validation() {
        let p = params(0.5);
        assert!(qintegral(|_| 1.0, QInterval::ZeroTo(-1.0), QFlavor::Q, &p).is_err());
        assert!(qintegral(|_| 1.0, QInterval::ZeroTo(1.0), QFlavor::QInverse, &p).is_err());
    }
}
