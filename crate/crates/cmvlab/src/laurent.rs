//! Complex Laurent polynomial algebra.
//!
//! A [`LaurentPoly`] is a finitely supported map from integer exponents to
//! coefficients, trimmed so that stored extremal coefficients are nonzero.
//! [`PreparedLaurent`] is the factored form `L(z) = L_n z^{-n} Π (z - ζ_i)^{m_i}`
//! with equal extreme degrees and no zero at the origin; it is always built
//! from its zeros, never by root finding.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<T> {
    coeffs: BTreeMap<i64, T>,
}

/// z^k for integer k, with k < 0 going through the inverse.
pub fn int_pow<T: Scalar>(z: &T, k: i64) -> T {
    let base = if k >= 0 { z.clone() } else { T::one() / z.clone() };
    let mut acc = T::one();
    for _ in 0..k.unsigned_abs() {
        acc = acc * base.clone();
    }
    acc
}

/// Falling factorial e(e-1)...(e-r+1) as a scalar.
fn falling<T: Scalar>(e: i64, r: u32) -> T {
    let mut acc = T::one();
    for i in 0..r as i64 {
        acc = acc * T::from_int(e - i);
    }
    acc
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_terms([(0, c)])
    }

    pub fn monomial(k: i64, c: T) -> Self {
        Self::from_terms([(k, c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut coeffs: BTreeMap<i64, T> = BTreeMap::new();
        for (k, c) in terms {
            let entry = coeffs.entry(k).or_insert_with(T::zero);
            *entry = entry.clone() + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> T {
        self.coeffs.get(&k).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Largest stored exponent, `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest stored exponent.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Positive degree n = max(max_exp, 0).
    pub fn pos_degree(&self) -> i64 {
        self.max_exp().map_or(0, |e| e.max(0))
    }

    /// Negative depth m ≥ 0 such that z^{-m} is the lowest stored power.
    pub fn neg_degree(&self) -> i64 {
        self.min_exp().map_or(0, |e| (-e).max(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .map(|(k, c)| (k, c.clone()))
                .chain(other.terms().map(|(k, c)| (k, c.clone()))),
        )
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k, -c.clone())))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k, c.clone() * s.clone())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                terms.push((a + b, ca.clone() * cb.clone()));
            }
        }
        Self::from_terms(terms)
    }

    /// Multiply by z^k.
    pub fn shifted(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + k, c.clone())))
    }

    /// Coefficient-wise conjugate: L̄(z) = Σ conj(L_k) z^k.
    pub fn conj_coeffs(&self) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k, c.conj())))
    }

    /// Reciprocal polynomial L_*(z) = L̄(z^{-1}).
    pub fn reciprocal_star(&self) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (-k, c.conj())))
    }

    /// Formal derivative (still a Laurent polynomial).
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(k, _)| *k != 0)
                .map(|(k, c)| (k - 1, c.clone() * T::from_int(k))),
        )
    }

    /// d^order/dz^order at z ≠ 0.
    pub fn eval_deriv(&self, z: &T, order: u32) -> Result<T> {
        if z.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let mut acc = T::zero();
        for (k, c) in self.terms() {
            let f: T = falling(k, order);
            if f.is_zero() {
                continue;
            }
            acc = acc + c.clone() * f * int_pow(z, k - order as i64);
        }
        Ok(acc)
    }

    pub fn eval(&self, z: &T) -> Result<T> {
        self.eval_deriv(z, 0)
    }
}

/// Zero/multiplicity list of a prepared Laurent polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData<T> {
    zeros: Vec<(T, usize)>,
}

impl<T: Scalar> SpectralData<T> {
    pub fn new(zeros: Vec<(T, usize)>) -> Result<Self> {
        for (z, m) in &zeros {
            if z.is_zero() {
                return Err(Error::ZeroRoot);
            }
            assert!(*m > 0, "multiplicities must be positive");
        }
        for i in 0..zeros.len() {
            for j in (i + 1)..zeros.len() {
                assert!(zeros[i].0 != zeros[j].0, "zeros must be pairwise distinct");
            }
        }
        Ok(SpectralData { zeros })
    }

    pub fn zeros(&self) -> &[(T, usize)] {
        &self.zeros
    }

    /// Σ m_i.
    pub fn total_multiplicity(&self) -> usize {
        self.zeros.iter().map(|(_, m)| m).sum()
    }

    /// Points conjugated, multiplicities kept: the spectrum of L̄.
    pub fn conjugated(&self) -> Self {
        SpectralData {
            zeros: self.zeros.iter().map(|(z, m)| (z.conj(), *m)).collect(),
        }
    }

    /// Index pairs (zero index, derivative order) in jet order.
    pub fn jet_index(&self) -> Vec<(usize, usize)> {
        let mut idx = Vec::with_capacity(self.total_multiplicity());
        for (i, (_, m)) in self.zeros.iter().enumerate() {
            for r in 0..*m {
                idx.push((i, r));
            }
        }
        idx
    }
}

/// Prepared Laurent polynomial: equal extreme degrees ±n and L_n L_{-n} ≠ 0,
/// held together with its spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct PreparedLaurent<T> {
    poly: LaurentPoly<T>,
    spectral: SpectralData<T>,
    leading: T,
    half_degree: usize,
}

impl<T: Scalar> PreparedLaurent<T> {
    /// Builds L(z) = leading · z^{-n} Π (z - ζ_i)^{m_i} with 2n = Σ m_i.
    pub fn from_zeros(leading: T, spectral: SpectralData<T>) -> Result<Self> {
        assert!(!leading.is_zero(), "leading coefficient must be nonzero");
        let total = spectral.total_multiplicity();
        if total % 2 != 0 {
            return Err(Error::OddDegree(total));
        }
        let n = total / 2;
        let mut poly = LaurentPoly::constant(leading.clone());
        for (zeta, m) in spectral.zeros() {
            let factor = LaurentPoly::from_terms([(1, T::one()), (0, -zeta.clone())]);
            for _ in 0..*m {
                poly = poly.mul(&factor);
            }
        }
        poly = poly.shifted(-(n as i64));
        Ok(PreparedLaurent { poly, spectral, leading, half_degree: n })
    }

    /// A constant treated as the degenerate prepared polynomial (n = 0).
    pub fn constant(c: T) -> Self {
        assert!(!c.is_zero());
        PreparedLaurent {
            poly: LaurentPoly::constant(c.clone()),
            spectral: SpectralData { zeros: Vec::new() },
            leading: c,
            half_degree: 0,
        }
    }

    pub fn poly(&self) -> &LaurentPoly<T> {
        &self.poly
    }

    pub fn spectral(&self) -> &SpectralData<T> {
        &self.spectral
    }

    pub fn leading(&self) -> &T {
        &self.leading
    }

    /// n, with deg range [-n, n] and Σ m_i = 2n.
    pub fn half_degree(&self) -> usize {
        self.half_degree
    }

    /// L_{(-1)^l n}: the outer band coefficient selected by the parity of l.
    pub fn band_coeff(&self, l: usize) -> T {
        let n = self.half_degree as i64;
        if l % 2 == 0 {
            self.poly.coeff(n)
        } else {
            self.poly.coeff(-n)
        }
    }

    /// L_{[i]}: the polynomial with the full (z - ζ_i)^{m_i} factor removed,
    /// keeping the z^{-n} prefactor and the leading coefficient.
    pub fn with_zero_removed(&self, i: usize) -> LaurentPoly<T> {
        let mut poly = LaurentPoly::constant(self.leading.clone());
        for (j, (zeta, m)) in self.spectral.zeros().iter().enumerate() {
            if j == i {
                continue;
            }
            let factor = LaurentPoly::from_terms([(1, T::one()), (0, -zeta.clone())]);
            for _ in 0..*m {
                poly = poly.mul(&factor);
            }
        }
        poly.shifted(-(self.half_degree as i64))
    }

    /// L_*(z) = L̄(z^{-1}) as a prepared polynomial: leading conj(L_{-n}),
    /// zeros 1/conj(ζ_i).
    pub fn reciprocal_star(&self) -> Self {
        let n = self.half_degree as i64;
        let leading = self.poly.coeff(-n).conj();
        let zeros = self
            .spectral
            .zeros()
            .iter()
            .map(|(z, m)| (T::one() / z.conj(), *m))
            .collect();
        PreparedLaurent {
            poly: self.poly.reciprocal_star(),
            spectral: SpectralData { zeros },
            leading,
            half_degree: self.half_degree,
        }
    }

    pub fn eval_deriv(&self, z: &T, order: u32) -> Result<T> {
        self.poly.eval_deriv(z, order)
    }
}

/// Bivariate divided difference δL(z1,z2) = (L(z1) - L(z2))/(z1 - z2),
/// stored through its symmetric-polynomial expansion so the diagonal
/// z1 = z2 needs no limit.
#[derive(Debug, Clone)]
pub struct DividedDifference<T> {
    /// Terms (e1, e2, coeff) of the bivariate Laurent polynomial.
    terms: Vec<(i64, i64, T)>,
}

impl<T: Scalar> DividedDifference<T> {
    pub fn new(p: &LaurentPoly<T>) -> Self {
        let mut terms = Vec::new();
        // Σ_{j≥1} L_j h_{j-1}(z1,z2) - Σ_{j≥1} L_{-j} h*_{j-1}(z1,z2)
        for (k, c) in p.terms() {
            if k > 0 {
                let j = k;
                for a in 0..j {
                    terms.push((a, j - 1 - a, c.clone()));
                }
            } else if k < 0 {
                let j = -k;
                for a in 0..j {
                    terms.push((-a - 1, -(j - 1 - a) - 1, -c.clone()));
                }
            }
        }
        DividedDifference { terms }
    }

    fn needs_inverse(&self) -> bool {
        self.terms.iter().any(|(a, b, _)| *a < 0 || *b < 0)
    }

    pub fn eval(&self, z1: &T, z2: &T) -> Result<T> {
        self.deriv(z1, z2, 0, 0)
    }

    /// ∂₁^{r1} ∂₂^{r2} δL at (z1, z2).
    pub fn deriv(&self, z1: &T, z2: &T, r1: u32, r2: u32) -> Result<T> {
        if (z1.is_zero() || z2.is_zero()) && self.needs_inverse() {
            return Err(Error::ZeroArgument);
        }
        let mut acc = T::zero();
        for (e1, e2, c) in &self.terms {
            let f1: T = falling(*e1, r1);
            let f2: T = falling(*e2, r2);
            if f1.is_zero() || f2.is_zero() {
                continue;
            }
            acc = acc
                + c.clone()
                    * f1
                    * f2
                    * int_pow(z1, e1 - r1 as i64)
                    * int_pow(z2, e2 - r2 as i64);
        }
        Ok(acc)
    }
}
