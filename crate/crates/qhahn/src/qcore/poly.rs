//! Real polynomials in one variable with ascending coefficient storage, and
//! the Jackson q-derivative acting on them.

use super::{qbracket, Error};

/// A real polynomial stored by ascending-degree coefficients. Trailing zero
/// coefficients are trimmed on construction, so the leading coefficient is
/// nonzero unless the polynomial is identically zero.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        RealPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RealPolynomial { coeffs: vec![0.0] }
    }

    pub fn constant(c: f64) -> Self {
        RealPolynomial::new(vec![c])
    }

    /// The monomial x^k.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0.0; k + 1];
        c[k] = 1.0;
        RealPolynomial { coeffs: c }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of x^k (0 beyond the stored degree).
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: f64) -> Self {
        RealPolynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0.0; n];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = self.coeff(k) + other.coeff(k);
        }
        RealPolynomial::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPolynomial::new(out)
    }

    /// Multiply by (x - c); used by the Stieltjes recurrence.
    pub fn mul_linear(&self, c: f64) -> Self {
        let mut out = vec![0.0; self.coeffs.len() + 1];
        for (k, &a) in self.coeffs.iter().enumerate() {
            out[k + 1] += a;
            out[k] -= c * a;
        }
        RealPolynomial::new(out)
    }

    /// Coefficientwise reflection x -> -x.
    pub fn reflect(&self) -> Self {
        RealPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 0 { c } else { -c })
                .collect(),
        )
    }

    /// Largest coefficient magnitude; 0 only for the zero polynomial.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// Cancellation-free magnitude evaluation: sum |c_k| |x|^k. Bounds the
    /// rounding scale of a Horner evaluation at `x`.
    pub fn eval_magnitude(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x.abs() + c.abs();
        }
        acc
    }
}

/// Jackson derivative D_zeta applied to a polynomial:
/// `D_zeta x^k = [k]_zeta x^{k-1}`, with `D_zeta p(0) = p'(0)` holding
/// automatically for polynomials. `zeta` must avoid {0, 1, -1}.
pub fn qderivative(p: &RealPolynomial, zeta: f64) -> Result<RealPolynomial, Error> {
    if zeta == 0.0 || zeta == 1.0 || zeta == -1.0 {
        return Err(Error::ZetaDegenerate(zeta));
    }
    if p.degree() == 0 {
        return Ok(RealPolynomial::zero());
    }
    let mut out = vec![0.0; p.degree()];
    for k in 1..=p.degree() {
        out[k - 1] = p.coeff(k) * qbracket(k as i64, zeta)?;
    }
    Ok(RealPolynomial::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn qderivative_of_square() {
        // D_q x^2 = (1+q) x
        let p = RealPolynomial::monomial(2);
        let d = qderivative(&p, 0.5).unwrap();
        assert_eq!(d.coeffs(), &[0.0, 1.5]);
    }

    #[test]
    fn qderivative_of_constant_is_zero() {
        let p = RealPolynomial::constant(3.0);
        assert!(qderivative(&p, 0.5).unwrap().is_zero());
    }

    #[test]
    fn qderivative_inverse_base() {
        // D_{1/q} x^3 = [3]_2 x^2 = 7 x^2 at q = 0.5
        let p = RealPolynomial::monomial(3);
        let d = qderivative(&p, 2.0).unwrap();
        assert_eq!(d.coeffs(), &[0.0, 0.0, 7.0]);
    }

    #[test]
    fn qderivative_rejects_degenerate_base() {
        let p = RealPolynomial::monomial(1);
        assert!(qderivative(&p, 0.0).is_err());
        assert!(qderivative(&p, 1.0).is_err());
        assert!(qderivative(&p, -1.0).is_err());
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = RealPolynomial::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.leading(), 2.0);
    }

    fn arb_poly() -> impl Strategy<Value = RealPolynomial> {
        proptest::collection::vec(-3.0f64..3.0, 1..9).prop_map(RealPolynomial::new)
    }

    proptest! {
        #[test]
        fn qderivative_is_linear(p in arb_poly(), r in arb_poly(),
                                 a in -2.0f64..2.0, b in -2.0f64..2.0,
                                 q in 0.05f64..0.95) {
            let lhs = qderivative(&p.scale(a).add(&r.scale(b)), q).unwrap();
            let rhs = qderivative(&p, q).unwrap().scale(a)
                .add(&qderivative(&r, q).unwrap().scale(b));
            let scale = rhs.coeff_scale().max(1.0);
            for k in 0..=lhs.degree().max(rhs.degree()) {
                prop_assert!((lhs.coeff(k) - rhs.coeff(k)).abs() <= 1e-14 * scale);
            }
        }

        // D_q p = D_{1/q} p + (q-1) x D_q D_{1/q} p, coefficientwise.
        #[test]
        fn jackson_bases_interchange(p in arb_poly(), q in 0.05f64..0.95) {
            let dq = qderivative(&p, q).unwrap();
            let dqi = qderivative(&p, 1.0 / q).unwrap();
            let cross = qderivative(&dqi, q).unwrap();
            let shifted = cross.mul_linear(0.0).scale(q - 1.0);
            let rhs = dqi.add(&shifted);
            // the two sides cancel heavily at small q; measure against the
            // magnitudes entering the sum
            let scale = dqi.coeff_scale().max(shifted.coeff_scale()).max(1.0);
            for k in 0..=dq.degree().max(rhs.degree()) {
                prop_assert!((dq.coeff(k) - rhs.coeff(k)).abs() <= 1e-13 * scale);
            }
        }

        // D_q D_{1/q} p = q^{-1} D_{1/q} D_q p.
        #[test]
        fn mixed_derivatives_commute_up_to_q(p in arb_poly(), q in 0.05f64..0.95) {
            let a = qderivative(&qderivative(&p, 1.0 / q).unwrap(), q).unwrap();
            let b = qderivative(&qderivative(&p, q).unwrap(), 1.0 / q).unwrap().scale(1.0 / q);
            let scale = a.coeff_scale().max(b.coeff_scale()).max(1.0);
            for k in 0..=a.degree().max(b.degree()) {
                prop_assert!((a.coeff(k) - b.coeff(k)).abs() <= 1e-13 * scale);
            }
        }
    }
}
