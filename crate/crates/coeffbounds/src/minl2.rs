use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use polycore::{IntPoly, UpperReal};

use crate::BoundError;

/// The unique monic rational cofactor of prescribed degree minimizing the
/// l2 norm of the product.
#[derive(Debug, Clone)]
pub struct MinL2Result {
    /// Ascending coefficients of the monic minimizer (last entry is 1).
    pub cofactor: Vec<BigRational>,
    /// Exact squared l2 norm of `f * cofactor`.
    pub achieved_sq: BigRational,
    /// Certified upper bound on the achieved l2 norm.
    pub achieved: UpperReal,
}

/// Minimizes `|f h|_2` over monic `h` of degree `dhat` in `Q[x]`.
///
/// Writing `h = x^m + sum_{j<m} c_j x^j`, the squared norm is a positive
/// definite quadratic in the `c_j`, so the minimizer solves the normal
/// equations `sum_j G[i][j] c_j = -G[i][m]` with
/// `G[i][j] = sum_k f_(k-i) f_(k-j)`, the autocorrelation of `f` at lag
/// `|i - j|`.
pub fn min_l2_multiple(f: &IntPoly, dhat: usize) -> Result<MinL2Result, BoundError> {
    if f.is_zero() {
        return Err(BoundError::ZeroPolynomial);
    }
    if dhat == 0 {
        return Err(BoundError::DeltaOutOfRange { delta: 0, max: usize::MAX });
    }
    let m = dhat;
    // autocorrelation of f at lags 0..=m
    let coeffs = f.coeffs();
    let autocorr: Vec<BigInt> = (0..=m)
        .map(|lag| {
            coeffs
                .iter()
                .enumerate()
                .filter_map(|(k, a)| coeffs.get(k + lag).map(|b| a * b))
                .sum()
        })
        .collect();

    // solve G c = -g where G[i][j] = autocorr[|i-j|], g[i] = autocorr[m-i]
    let mut mat: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            (0..=m)
                .map(|j| {
                    let lag = if j == m { m - i } else { i.abs_diff(j) };
                    let sign = if j == m { -1 } else { 1 };
                    BigRational::from(&autocorr[lag] * BigInt::from(sign))
                })
                .collect()
        })
        .collect();

    // Gaussian elimination with partial pivoting over the rationals
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&a, &b| mat[a][col].abs().cmp(&mat[b][col].abs()))
            .unwrap();
        assert!(
            !mat[pivot][col].is_zero(),
            "normal equations are positive definite for nonzero input"
        );
        mat.swap(col, pivot);
        let inv = mat[col][col].clone();
        for j in col..=m {
            mat[col][j] = &mat[col][j] / &inv;
        }
        for row in 0..m {
            if row != col && !mat[row][col].is_zero() {
                let factor = mat[row][col].clone();
                for j in col..=m {
                    let sub = &factor * &mat[col][j];
                    mat[row][j] = &mat[row][j] - sub;
                }
            }
        }
    }
    let mut cofactor: Vec<BigRational> = (0..m).map(|i| mat[i][m].clone()).collect();
    cofactor.push(BigRational::one());

    let achieved_sq = product_l2_sq(f, &cofactor);
    let achieved = UpperReal::sqrt_rational(&achieved_sq);
    Ok(MinL2Result {
        cofactor,
        achieved_sq,
        achieved,
    })
}

/// Exact squared l2 norm of `f * h` for rational `h`.
pub fn product_l2_sq(f: &IntPoly, h: &[BigRational]) -> BigRational {
    let fc = f.coeffs();
    let n = fc.len() + h.len() - 1;
    let mut total = BigRational::zero();
    for k in 0..n {
        let mut c = BigRational::zero();
        for (j, hj) in h.iter().enumerate() {
            if k >= j && k - j < fc.len() {
                c += hj * BigRational::from(fc[k - j].clone());
            }
        }
        total += &c * &c;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::parse;

    #[test]
    fn linear_case_solved_by_calculus() {
        // |(x-1)(x+c)|_2^2 = 1 + (c-1)^2 + c^2 is minimized at c = 1/2
        let f = parse("x-1").unwrap();
        let r = min_l2_multiple(&f, 1).unwrap();
        assert_eq!(
            r.cofactor,
            vec![
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                BigRational::one()
            ]
        );
        // achieved value: 1 + 1/4 + 1/4 = 3/2
        assert_eq!(
            r.achieved_sq,
            BigRational::new(BigInt::from(3), BigInt::from(2))
        );
    }

    #[test]
    fn never_worse_than_trivial_cofactor() {
        // h = x^dhat is feasible, so the achieved norm is at most |f|_2
        for s in ["x-1", "3x^2-2x+5", "x^4+x^3-x^2-1"] {
            let f = parse(s).unwrap();
            for dhat in 1..=3 {
                let r = min_l2_multiple(&f, dhat).unwrap();
                let l2sq = BigRational::from(f.l2_norm_sq());
                assert!(r.achieved_sq <= l2sq, "{s} dhat={dhat}");
            }
        }
    }

    #[test]
    fn perturbations_increase_the_norm() {
        let f = parse("2x^3-x+4").unwrap();
        let r = min_l2_multiple(&f, 2).unwrap();
        let eps = BigRational::new(BigInt::from(1), BigInt::from(1_000_000));
        for j in 0..2 {
            for sign in [1, -1] {
                let mut h = r.cofactor.clone();
                h[j] += &eps * BigRational::from(BigInt::from(sign));
                assert!(product_l2_sq(&f, &h) > r.achieved_sq);
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(min_l2_multiple(&IntPoly::zero(), 1).is_err());
        assert!(min_l2_multiple(&parse("x+1").unwrap(), 0).is_err());
    }
}
