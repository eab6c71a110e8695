//! CMV basis bookkeeping and the shift operator Υ.
//!
//! The CMV order is 1, z^{-1}, z, z^{-2}, z^2, …; Υ represents multiplication
//! by z in that basis and is a real orthogonal permutation matrix with
//! bandwidth 2. All semi-infinite products are formed at inflated size and
//! truncated back, and every truncation carries `exact_leading` so that
//! downstream code can refuse contaminated rows.

use crate::laurent::LaurentPoly;
use crate::mat::Mat;
use crate::scalar::Scalar;

/// CMV exponent map: e(2k) = k, e(2k+1) = -k-1.
pub fn cmv_exponent(l: usize) -> i64 {
    if l % 2 == 0 {
        (l / 2) as i64
    } else {
        -((l / 2) as i64) - 1
    }
}

/// Index of z·χ^{(l)} in the CMV basis (Υ as a permutation of ℕ).
fn shift_up(l: usize) -> usize {
    if l % 2 == 0 {
        l + 2
    } else if l == 1 {
        0
    } else {
        l - 2
    }
}

/// Index of z^{-1}·χ^{(l)} (the inverse permutation).
fn shift_down(l: usize) -> usize {
    if l == 0 {
        1
    } else if l % 2 == 0 {
        l - 2
    } else {
        l + 2
    }
}

/// χ(z) truncated to length `len`, entrywise differentiated `order` times.
pub fn chi<T: Scalar>(z: &T, len: usize, order: u32) -> crate::error::Result<Vec<T>> {
    (0..len)
        .map(|l| LaurentPoly::monomial(cmv_exponent(l), T::one()).eval_deriv(z, order))
        .collect()
}

/// Finite truncation of a banded semi-infinite operator.
#[derive(Debug, Clone)]
pub struct BandedTruncation<T> {
    pub data: Mat<T>,
    /// Entries with |row - col| > bandwidth are exactly zero.
    pub bandwidth: usize,
    /// Leading rows/cols that agree with the semi-infinite operator.
    pub exact_leading: usize,
}

/// Leading M×M block of Υ. Exact at any size (Υ is a permutation).
pub fn upsilon<T: Scalar>(m: usize) -> BandedTruncation<T> {
    let mut data: Mat<T> = Mat::zeros(m, m);
    for l in 0..m {
        let j = shift_up(l);
        if j < m {
            data[(l, j)] = T::one();
        }
    }
    BandedTruncation { data, bandwidth: 2, exact_leading: m }
}

/// Leading M×M block of Υ^T = Υ^{-1}.
pub fn upsilon_transpose<T: Scalar>(m: usize) -> BandedTruncation<T> {
    let mut data: Mat<T> = Mat::zeros(m, m);
    for l in 0..m {
        let j = shift_down(l);
        if j < m {
            data[(l, j)] = T::one();
        }
    }
    BandedTruncation { data, bandwidth: 2, exact_leading: m }
}

/// Exact leading M×M block of the semi-infinite L(Υ).
///
/// Powers of Υ and Υ^T are formed at inflated size M + 2·max(n, m) and the
/// result truncated back, which leaves the leading block uncontaminated.
pub fn laurent_of_upsilon<T: Scalar>(l: &LaurentPoly<T>, m: usize) -> BandedTruncation<T> {
    let n_pos = l.pos_degree() as usize;
    let n_neg = l.neg_degree() as usize;
    let reach = n_pos.max(n_neg);
    let inflated = m + 2 * reach;

    let mut acc = Mat::zeros(inflated, inflated);
    let c0 = l.coeff(0);
    if !c0.is_zero() {
        for i in 0..inflated {
            acc[(i, i)] = c0.clone();
        }
    }

    let up = upsilon::<T>(inflated).data;
    let mut pow = Mat::identity(inflated);
    for k in 1..=n_pos as i64 {
        pow = pow.mul(&up);
        let ck = l.coeff(k);
        if ck.is_zero() {
            continue;
        }
        for i in 0..inflated {
            for j in 0..inflated {
                let v = pow[(i, j)].clone();
                if !v.is_zero() {
                    acc[(i, j)] = acc[(i, j)].clone() + ck.clone() * v;
                }
            }
        }
    }

    let down = upsilon_transpose::<T>(inflated).data;
    let mut pow = Mat::identity(inflated);
    for k in 1..=n_neg as i64 {
        pow = pow.mul(&down);
        let ck = l.coeff(-k);
        if ck.is_zero() {
            continue;
        }
        for i in 0..inflated {
            for j in 0..inflated {
                let v = pow[(i, j)].clone();
                if !v.is_zero() {
                    acc[(i, j)] = acc[(i, j)].clone() + ck.clone() * v;
                }
            }
        }
    }

    BandedTruncation {
        data: acc.block(m, m),
        bandwidth: 2 * reach,
        exact_leading: m,
    }
}

/// Independent construction of L(Υ) through the permutation action of Υ:
/// entry (l, j) collects L_k over every k with shift^k(l) = j. Used as an
/// oracle in tests.
pub fn laurent_of_upsilon_by_permutation<T: Scalar>(
    l: &LaurentPoly<T>,
    m: usize,
) -> Mat<T> {
    let mut data: Mat<T> = Mat::zeros(m, m);
    for row in 0..m {
        for (k, c) in l.terms() {
            let mut idx = row;
            if k >= 0 {
                for _ in 0..k {
                    idx = shift_up(idx);
                }
            } else {
                for _ in 0..(-k) {
                    idx = shift_down(idx);
                }
            }
            if idx < m {
                data[(row, idx)] = data[(row, idx)].clone() + c.clone();
            }
        }
    }
    data
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn exponent_map() {
        assert_eq!(cmv_exponent(0), 0);
        assert_eq!(cmv_exponent(1), -1);
        assert_eq!(cmv_exponent(2), 1);
        assert_eq!(cmv_exponent(3), -2);
        assert_eq!(cmv_exponent(4), 2);
    }

    #[test]
    fn chi_examples() {
        let v = chi(&c(2.0, 0.0), 3, 0).unwrap();
        assert_eq!(v, vec![c(1.0, 0.0), c(0.5, 0.0), c(2.0, 0.0)]);
        let v = chi(&c(1.0, 0.0), 4, 0).unwrap();
        assert!(v.iter().all(|x| (*x - c(1.0, 0.0)).norm() < 1e-15));
        let v = chi(&c(2.0, 0.0), 2, 1).unwrap();
        assert_eq!(v, vec![c(0.0, 0.0), c(-0.25, 0.0)]);
    }

    #[test]
    fn upsilon_displayed_block() {
        let u = upsilon::<Complex64>(3);
        let rows: Vec<Vec<f64>> = (0..3)
            .map(|i| (0..3).map(|j| u.data[(i, j)].re).collect())
            .collect();
        assert_eq!(rows, vec![vec![0.0, 0.0, 1.0], vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 0.0]]);
    }

    #[test]
    fn upsilon_eigen_relation() {
        let m = 12;
        let u = upsilon::<Complex64>(m);
        for &z in &[c(0.7, 0.2), c(1.0, 0.0), c(-1.3, 0.8)] {
            let x = chi(&z, m, 0).unwrap();
            let lhs = u.data.matvec(&x);
            for l in 0..m - 2 {
                assert!((lhs[l] - z * x[l]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn upsilon_orthogonality() {
        let m = 10;
        let u = upsilon::<Complex64>(m);
        let prod = u.data.transpose().mul(&u.data);
        for i in 0..m - 2 {
            for j in 0..m - 2 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((prod[(i, j)].re - expect).abs() < 1e-15);
                assert!(prod[(i, j)].im.abs() < 1e-15);
            }
        }
    }

    #[test]
    fn laurent_of_upsilon_cases() {
        let one = LaurentPoly::constant(c(1.0, 0.0));
        let id = laurent_of_upsilon(&one, 6);
        assert!(id.data.sub(&Mat::identity(6)).max_mag() < 1e-15);

        let z = LaurentPoly::monomial(1, c(1.0, 0.0));
        let lz = laurent_of_upsilon(&z, 6);
        assert!(lz.data.sub(&upsilon::<Complex64>(6).data).max_mag() < 1e-15);
    }

    #[test]
    fn laurent_of_upsilon_matches_permutation_oracle() {
        let l = LaurentPoly::from_terms([
            (2, c(0.3, 0.1)),
            (1, c(1.0, 0.0)),
            (0, c(-2.5, 0.0)),
            (-1, c(1.0, 0.0)),
            (-3, c(0.2, -0.4)),
        ]);
        let m = 9;
        let built = laurent_of_upsilon(&l, m);
        let oracle = laurent_of_upsilon_by_permutation(&l, m);
        assert!(built.data.sub(&oracle).max_mag() < 1e-15);
        assert_eq!(built.bandwidth, 6);
    }

    #[test]
    fn spectral_property_on_exact_rows() {
        let l = LaurentPoly::from_terms([(1, c(1.0, 0.0)), (0, c(-2.5, 0.0)), (-1, c(1.0, 0.0))]);
        let m = 14;
        let op = laurent_of_upsilon(&l, m);
        let band = op.bandwidth;
        for &z in &[c(0.5, 0.0), c(2.0, 0.0), c(0.9, 0.9), c(-1.1, 0.4)] {
            let x = chi(&z, m, 0).unwrap();
            let lhs = op.data.matvec(&x);
            let lz = l.eval(&z).unwrap();
            for row in 0..m - band {
                assert!(
                    (lhs[row] - lz * x[row]).norm() < 1e-12 * (1.0 + lz.norm()),
                    "row {row}"
                );
            }
        }
    }

    #[test]
    fn inflate_then_truncate_stability() {
        let l = LaurentPoly::from_terms([(1, c(1.0, 0.0)), (0, c(-4.0, 0.0)), (-1, c(4.0, 0.0))]);
        let a = laurent_of_upsilon(&l, 8);
        let b = laurent_of_upsilon(&l, 18);
        assert_eq!(a.data, b.data.block(8, 8));
    }

    #[test]
    fn bandwidth_is_respected() {
        let l = LaurentPoly::from_terms([(2, c(1.0, 0.0)), (-2, c(0.5, 0.5))]);
        let op = laurent_of_upsilon(&l, 12);
        for i in 0..12 {
            for j in 0..12 {
                if (i as i64 - j as i64).unsigned_abs() as usize > op.bandwidth {
                    assert!(op.data[(i, j)].norm() < 1e-14);
                }
            }
        }
    }
}
