//! Double-precision q-arithmetic: q-brackets, q-Pochhammer symbols, Jackson
//! q-derivatives of polynomials, and q-integrals over geometric lattices.
//!
//! Everything here is a pure function of its inputs. Truncation of infinite
//! products and lattice sums is governed by [`QParam`], and truncated results
//! carry a first-order tail bound so callers can track the accuracy budget.

pub mod jackson;
pub mod poly;

pub use jackson::{qintegral, LatticeBranch, LatticePoint, LatticeSum, QFlavor, QInterval};
pub use poly::{qderivative, RealPolynomial};

use std::fmt;

/// Default infinite-product cutoff: stop once `|a q^k| < eps_product`.
pub const EPS_PRODUCT_DEFAULT: f64 = 1e-16;
/// Default relative tail threshold for lattice sums.
pub const EPS_TAIL_DEFAULT: f64 = 1e-15;
/// Default cap on the number of product factors / lattice terms.
pub const MAX_TERMS_DEFAULT: usize = 20_000;
/// A lattice sum stops only after this many consecutive sub-threshold terms,
/// so sign-alternating summands cannot trigger a premature cutoff.
pub const TAIL_WINDOW: usize = 8;

/// Errors from q-arithmetic evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `q` outside (0,1).
    InvalidQ(f64),
    /// A truncation threshold outside (0,1), or `max_terms` = 0.
    InvalidThreshold(&'static str),
    /// `[n]_q` requested at q = 1 where the defining ratio is undefined.
    QBracketAtOne,
    /// Jackson derivative base in {0, 1, -1}.
    ZetaDegenerate(f64),
    /// Infinite q-Pochhammer with |q| >= 1 does not converge.
    InfiniteProductModulus(f64),
    /// Product or sum failed to reach its threshold within `max_terms`.
    Nonconvergence { terms: usize },
    /// A lattice sum kept growing; the offending lattice point is carried.
    Divergence { lattice_point: f64 },
    /// Interval endpoints incompatible with the requested integral shape.
    BadInterval(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidQ(q) => write!(f, "q = {q} is not inside (0,1)"),
            Error::InvalidThreshold(which) => write!(f, "invalid threshold: {which}"),
            Error::QBracketAtOne => write!(f, "q-bracket undefined at q = 1"),
            Error::ZetaDegenerate(z) => write!(f, "Jackson derivative base {z} must not be 0 or +-1"),
            Error::InfiniteProductModulus(q) => {
                write!(f, "infinite q-Pochhammer needs |q| < 1, got {q}")
            }
            Error::Nonconvergence { terms } => {
                write!(f, "did not converge within {terms} terms")
            }
            Error::Divergence { lattice_point } => {
                write!(f, "lattice sum diverges near x = {lattice_point}")
            }
            Error::BadInterval(msg) => write!(f, "bad integration interval: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Numeric policy for q-series evaluation: the base `q` together with the
/// truncation thresholds used by infinite products and lattice sums.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QParam {
    q: f64,
    eps_product: f64,
    eps_tail: f64,
    max_terms: usize,
}

impl QParam {
    /// Policy with default thresholds. Requires `0 < q < 1`.
    pub fn new(q: f64) -> Result<Self, Error> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::InvalidQ(q));
        }
        Ok(QParam {
            q,
            eps_product: EPS_PRODUCT_DEFAULT,
            eps_tail: EPS_TAIL_DEFAULT,
            max_terms: MAX_TERMS_DEFAULT,
        })
    }

    pub fn with_eps_product(mut self, eps: f64) -> Result<Self, Error> {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::InvalidThreshold("eps_product"));
        }
        self.eps_product = eps;
        Ok(self)
    }

    pub fn with_eps_tail(mut self, eps: f64) -> Result<Self, Error> {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::InvalidThreshold("eps_tail"));
        }
        self.eps_tail = eps;
        Ok(self)
    }

    pub fn with_max_terms(mut self, n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidThreshold("max_terms"));
        }
        self.max_terms = n;
        Ok(self)
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn eps_product(&self) -> f64 {
        self.eps_product
    }

    pub fn eps_tail(&self) -> f64 {
        self.eps_tail
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

/// The q-bracket `[n]_q = (1 - q^n)/(1 - q)`, exact 0 at n = 0.
///
/// `q` may lie in (0,1) or (1,inf); the latter serves `[n]_{1/q}`.
pub fn qbracket(n: i64, q: f64) -> Result<f64, Error> {
    if q == 1.0 {
        return Err(Error::QBracketAtOne);
    }
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::InvalidQ(q));
    }
    if n == 0 {
        return Ok(0.0);
    }
    Ok((1.0 - q.powi(n as i32)) / (1.0 - q))
}

/// First argument of a q-Pochhammer symbol: a real number, or a conjugate
/// pair `(z, conj(z))` consumed together so the product stays real.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PochArg {
    Real(f64),
    /// The pair z = re + i im and its conjugate; the k-th factor is
    /// `(1 - z q^k)(1 - conj(z) q^k) = 1 - 2 re q^k + |z|^2 q^{2k}`.
    ConjugatePair { re: f64, im: f64 },
}

/// Number of factors in a q-Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochCount {
    Finite(u32),
    Infinite,
}

/// A truncated product/sum value with a first-order bound on the dropped tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Truncated {
    pub value: f64,
    /// Absolute bound on the truncation error; 0 for exact finite results.
    pub tail_bound: f64,
    /// Number of factors or lattice terms consumed.
    pub terms: usize,
}

/// The q-Pochhammer symbol `(a; q)_n`.
///
/// Finite counts are exact products of `n` factors. The infinite case stops
/// once `|a q^k| < eps_product` and reports `sum_{k>=K} |a q^k| / (1-q)`
/// (scaled by the partial product) as the tail bound. A conjugate-pair
/// argument multiplies both factors of the pair at each level, so the result
/// is real in every case.
pub fn qpochhammer(a: PochArg, n: PochCount, p: &QParam) -> Result<Truncated, Error> {
    let q = p.q();
    let factor = |k: u32| -> f64 {
        let qk = q.powi(k as i32);
        match a {
            PochArg::Real(a) => 1.0 - a * qk,
            PochArg::ConjugatePair { re, im } => {
                1.0 - 2.0 * re * qk + (re * re + im * im) * qk * qk
            }
        }
    };
    let modulus = match a {
        PochArg::Real(a) => a.abs(),
        PochArg::ConjugatePair { re, im } => (re * re + im * im).sqrt(),
    };
    match n {
        PochCount::Finite(n) => {
            let mut prod = 1.0;
            for k in 0..n {
                prod *= factor(k);
            }
            Ok(Truncated {
                value: prod,
                tail_bound: 0.0,
                terms: n as usize,
            })
        }
        PochCount::Infinite => {
            if !(q.abs() < 1.0) {
                return Err(Error::InfiniteProductModulus(q));
            }
            let mut prod = 1.0;
            let mut k: u32 = 0;
            loop {
                if modulus * q.powi(k as i32) < p.eps_product() {
                    let tail = modulus * q.powi(k as i32) / (1.0 - q);
                    return Ok(Truncated {
                        value: prod,
                        tail_bound: prod.abs() * tail,
                        terms: k as usize,
                    });
                }
                prod *= factor(k);
                if prod == 0.0 {
                    // An exactly vanishing factor (a = q^{-m}) zeroes the product.
                    return Ok(Truncated {
                        value: 0.0,
                        tail_bound: 0.0,
                        terms: k as usize + 1,
                    });
                }
                k += 1;
                if k as usize > p.max_terms() {
                    return Err(Error::Nonconvergence {
                        terms: p.max_terms(),
                    });
                }
            }
        }
    }
}

/// Convenience: `(a; q)_n` for a real `a`, returning only the value.
pub fn poch(a: f64, n: PochCount, p: &QParam) -> Result<f64, Error> {
    Ok(qpochhammer(PochArg::Real(a), n, p)?.value)
}

/// Product of `(a_i; q)_n` over a list of real arguments, same count for all.
pub fn poch_list(args: &[f64], n: PochCount, p: &QParam) -> Result<f64, Error> {
    let mut prod = 1.0;
    for &a in args {
        prod *= poch(a, n, p)?;
    }
    Ok(prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params(q: f64) -> QParam {
        QParam::new(q).unwrap()
    }

    #[test]
    fn qbracket_small_values() {
        assert_eq!(qbracket(0, 0.5).unwrap(), 0.0);
        assert_eq!(qbracket(2, 0.5).unwrap(), 1.5);
        assert_eq!(qbracket(3, 0.5).unwrap(), 1.75);
        // base 2 serves [n]_{1/q} at q = 1/2
        assert_eq!(qbracket(3, 2.0).unwrap(), 7.0);
        assert!(matches!(qbracket(1, 1.0), Err(Error::QBracketAtOne)));
    }

    #[test]
    fn qbracket_negative_order() {
        // (1 - q^{-1})/(1 - q) at q = 0.5: (1-2)/(0.5) = -2
        assert_eq!(qbracket(-1, 0.5).unwrap(), -2.0);
    }

    #[test]
    fn pochhammer_empty_product_is_one() {
        let p = params(0.5);
        let r = qpochhammer(PochArg::Real(123.456), PochCount::Finite(0), &p).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.tail_bound, 0.0);
    }

    #[test]
    fn pochhammer_half_infinite() {
        // Oracle: multiply factors (1 - 0.5 * 0.5^k) until the factor is
        // within 1e-17 of 1, then freeze the value.
        let mut oracle = 1.0f64;
        let mut k = 0i32;
        loop {
            let t = 0.5 * 0.5f64.powi(k);
            if t < 1e-17 {
                break;
            }
            oracle *= 1.0 - t;
            k += 1;
        }
        const FROZEN: f64 = 0.2887880950866024;
        assert!((oracle - FROZEN).abs() < 1e-15);

        let p = params(0.5).with_eps_product(1e-17).unwrap();
        let r = qpochhammer(PochArg::Real(0.5), PochCount::Infinite, &p).unwrap();
        assert!((r.value - FROZEN).abs() < 1e-15);
        assert!(r.tail_bound < 1e-15);
    }

    #[test]
    fn pochhammer_vanishes_at_inverse_power() {
        // a = q^{-3}: the k = 3 factor is exactly zero.
        let p = params(0.5);
        let a = 0.5f64.powi(-3);
        let r = qpochhammer(PochArg::Real(a), PochCount::Infinite, &p).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn pochhammer_conjugate_pair_matches_real_expansion() {
        // (i; q)_inf (-i; q)_inf = prod (1 + q^{2k})
        let p = params(0.5);
        let pair = qpochhammer(
            PochArg::ConjugatePair { re: 0.0, im: 1.0 },
            PochCount::Infinite,
            &p,
        )
        .unwrap();
        let mut direct = 1.0;
        for k in 0..60 {
            direct *= 1.0 + 0.25f64.powi(k);
        }
        assert!((pair.value - direct).abs() / direct < 1e-14);
    }

    #[test]
    fn pochhammer_rejects_infinite_with_bad_modulus() {
        let p = params(0.5);
        // force q >= 1 through the raw constructor path is impossible; check
        // instead that the finite case accepts any a and the bracket guards q.
        assert!(qpochhammer(PochArg::Real(3.0), PochCount::Finite(4), &p).is_ok());
    }

    proptest! {
        // (a;q)_{n+1} = (a;q)_n * (1 - a q^n) must hold bit-for-bit: the
        // (n+1)-factor loop performs exactly the same multiplications plus one.
        #[test]
        fn pochhammer_product_consistency(a in -4.0f64..4.0, q in 0.05f64..0.95, n in 0u32..40) {
            let p = params(q);
            let shorter = qpochhammer(PochArg::Real(a), PochCount::Finite(n), &p).unwrap().value;
            let longer = qpochhammer(PochArg::Real(a), PochCount::Finite(n + 1), &p).unwrap().value;
            prop_assert_eq!(longer, shorter * (1.0 - a * q.powi(n as i32)));
        }

        #[test]
        fn qbracket_matches_geometric_sum(n in 1i64..30, q in 0.05f64..0.95) {
            let direct: f64 = (0..n).map(|k| q.powi(k as i32)).sum();
            let b = qbracket(n, q).unwrap();
            prop_assert!((b - direct).abs() <= 1e-12 * direct.abs().max(1.0));
        }
    }
}
