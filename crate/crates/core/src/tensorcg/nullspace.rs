use crate::modrep::Coefficient;

use super::TensorError;

/// Exact nullspace basis of a dense `rows x ncols` matrix over an integral domain.
///
/// Forward elimination is Bareiss fraction-free: every division is exact, so entries
/// stay in the ring (Laurent polynomials never become rational functions). Pivots are
/// the first nonzero entry in column order, so results are reproducible. Back
/// substitution rescales the partial solution by each pivot instead of dividing.
/// Each returned vector is normalized with [`Coefficient::normalize_line`] and checked
/// against the original matrix before being returned.
pub fn nullspace<S: Coefficient>(
    matrix: &[Vec<S>],
    ncols: usize,
) -> Result<Vec<Vec<S>>, TensorError> {
    let mut a: Vec<Vec<S>> = matrix.to_vec();
    let nrows = a.len();
    let mut prev = S::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;

    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let t = a[r][c]
                    .mul_ref(&a[i][j])
                    .sub_ref(&a[i][c].mul_ref(&a[r][j]));
                a[i][j] = t.div_exact(&prev)?;
            }
            a[i][c] = S::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }

    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![S::zero(); ncols];
        x[free] = S::one();
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let s =
                (pc + 1..ncols).fold(S::zero(), |acc, j| acc.add_ref(&a[row][j].mul_ref(&x[j])));
            let pivot = &a[row][pc];
            for xj in x.iter_mut() {
                *xj = xj.mul_ref(pivot);
            }
            x[pc] = s.neg_ref();
        }
        S::normalize_line(&mut x);
        certify(matrix, &x)?;
        basis.push(x);
    }
    Ok(basis)
}

fn certify<S: Coefficient>(matrix: &[Vec<S>], x: &[S]) -> Result<(), TensorError> {
    for row in matrix {
        let dot = row
            .iter()
            .zip(x)
            .fold(S::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)));
        if !dot.is_zero() {
            return Err(TensorError::Certificate(format!("{x:?}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::{q_int, ratio, rational, LaurentPoly, Rational};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational(x)).collect()
    }

    #[test]
    fn rational_rank_one() {
        let m = vec![r(&[1, 2, 3]), r(&[2, 4, 6])];
        let ns = nullspace(&m, 3).unwrap();
        // first nonzero coordinate normalized to 1
        assert_eq!(
            ns,
            vec![
                vec![rational(1), ratio(-1, 2), rational(0)],
                vec![rational(1), rational(0), ratio(-1, 3)]
            ]
        );
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let m = vec![r(&[1, 2]), r(&[3, 4])];
        assert!(nullspace(&m, 2).unwrap().is_empty());
    }

    #[test]
    fn no_rows_means_everything_is_free() {
        let ns = nullspace::<Rational>(&[], 2).unwrap();
        assert_eq!(ns, vec![r(&[1, 0]), r(&[0, 1])]);
    }

    #[test]
    fn zero_leading_column() {
        let m = vec![r(&[0, 1, 1]), r(&[0, 2, 5])];
        assert_eq!(nullspace(&m, 3).unwrap(), vec![r(&[1, 0, 0])]);
    }

    #[test]
    fn laurent_single_equation() {
        // alpha + v beta = 0  ->  (1, -v^-1)
        let m = vec![vec![LaurentPoly::one(), LaurentPoly::v_pow(1)]];
        let ns = nullspace(&m, 2).unwrap();
        assert_eq!(ns, vec![vec![LaurentPoly::one(), -LaurentPoly::v_pow(-1)]]);
    }

    #[test]
    fn laurent_three_by_four_needs_exact_division() {
        let q = |n| q_int(n);
        let m = vec![
            vec![q(2), q(3), LaurentPoly::v_pow(1), q(1)],
            vec![q(3), q(2), q(4), LaurentPoly::v_pow(-2)],
            vec![q(1), q(5), q(2), q(3)],
        ];
        let ns = nullspace(&m, 4).unwrap();
        assert_eq!(ns.len(), 1);
        // certified inside; also check it is nonzero and primitive
        assert!(ns[0].iter().any(|x| !x.is_zero()));
    }
}
