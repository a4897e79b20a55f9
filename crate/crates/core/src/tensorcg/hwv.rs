use std::collections::BTreeMap;

use crate::modrep::{BasisLabel, Coefficient, Generator, Vector, WeightModule};
use crate::qarith::{rational, Rational};

use super::{nullspace, TensorError};

/// Basis positions grouped by weight, each group in ambient basis order.
pub fn weight_space_indices<S: Coefficient>(m: &WeightModule<S>) -> BTreeMap<Rational, Vec<usize>> {
    let mut out: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
    for (i, w) in m.weights().iter().enumerate() {
        out.entry(w.clone()).or_default().push(i);
    }
    out
}

pub fn weight_spaces<S: Coefficient>(m: &WeightModule<S>) -> BTreeMap<Rational, Vec<BasisLabel>> {
    weight_space_indices(m)
        .into_iter()
        .map(|(w, idx)| (w, idx.into_iter().map(|i| m.label(i).clone()).collect()))
        .collect()
}

/// Basis of `ker(e)` (resp. `ker(E)`) on every weight space, in descending weight order.
///
/// The raising operator maps weight `w` into weight `w + 2`; its block between those two
/// weight spaces is passed to [`nullspace`]. Each returned vector is re-checked against
/// the full raising matrix.
pub fn highest_weight_vectors<S: Coefficient>(
    m: &WeightModule<S>,
) -> Result<Vec<(Rational, Vector<S>)>, TensorError> {
    let spaces = weight_space_indices(m);
    let raise = m.matrix(Generator::E)?;
    let mut out = Vec::new();
    for (w, cols) in spaces.iter().rev() {
        let targets = spaces
            .get(&(w + rational(2)))
            .map(Vec::as_slice)
            .unwrap_or(&[]);
        let block: Vec<Vec<S>> = targets
            .iter()
            .map(|&r| cols.iter().map(|&c| raise.get(r, c)).collect())
            .collect();
        for coords in nullspace(&block, cols.len())? {
            let v = Vector::from_entries(cols.iter().copied().zip(coords));
            let image = m.apply(Generator::E, &v)?;
            if !image.is_zero() {
                return Err(TensorError::Certificate(m.format_vector(&v)));
            }
            out.push((w.clone(), v));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{finite_dim_classical, finite_dim_quantum};
    use crate::qarith::LaurentPoly;
    use crate::tensorcg::{tensor_classical, tensor_quantum};

    fn pair(i: usize, j: usize) -> BasisLabel {
        BasisLabel::tensor(BasisLabel::FinDim(i), BasisLabel::FinDim(j))
    }

    #[test]
    fn weight_space_shapes() {
        let f1 = finite_dim_classical(1).unwrap();
        let t = tensor_classical(&f1, &f1).unwrap();
        let ws = weight_spaces(&t);
        let dims: Vec<(Rational, usize)> = ws.iter().map(|(w, v)| (w.clone(), v.len())).collect();
        assert_eq!(
            dims,
            vec![(rational(-2), 1), (rational(0), 2), (rational(2), 1)]
        );
        assert_eq!(ws[&rational(0)], vec![pair(0, 1), pair(1, 0)]);

        let f5 = finite_dim_classical(5).unwrap();
        assert!(weight_spaces(&f5).values().all(|v| v.len() == 1));

        let f2 = finite_dim_classical(2).unwrap();
        let t = tensor_classical(&f2, &f2).unwrap();
        assert_eq!(weight_spaces(&t)[&rational(0)].len(), 3);
    }

    #[test]
    fn classical_singlet() {
        let f1 = finite_dim_classical(1).unwrap();
        let t = tensor_classical(&f1, &f1).unwrap();
        let hw = highest_weight_vectors(&t).unwrap();
        assert_eq!(hw.len(), 2);
        assert_eq!(
            hw[0],
            (rational(2), Vector::basis(t.index_of(&pair(0, 0)).unwrap()))
        );
        let expected = Vector::from_entries([
            (t.index_of(&pair(0, 1)).unwrap(), rational(1)),
            (t.index_of(&pair(1, 0)).unwrap(), rational(-1)),
        ]);
        assert_eq!(hw[1], (rational(0), expected));
    }

    #[test]
    fn quantum_singlet_exponent() {
        // E(a w0⊗w1 + b w1⊗w0) = (a + v b) w0⊗w0, so the line is w0⊗w1 - v^-1 w1⊗w0
        let f1 = finite_dim_quantum(1).unwrap();
        let t = tensor_quantum(&f1, &f1).unwrap();
        let hw = highest_weight_vectors(&t).unwrap();
        let expected = Vector::from_entries([
            (t.index_of(&pair(0, 1)).unwrap(), LaurentPoly::one()),
            (t.index_of(&pair(1, 0)).unwrap(), -LaurentPoly::v_pow(-1)),
        ]);
        assert_eq!(hw[1], (rational(0), expected));
    }

    #[test]
    fn top_vector_is_pair_of_tops() {
        for (m, n) in [(0, 0), (3, 2), (1, 4)] {
            let t = tensor_quantum(
                &finite_dim_quantum(m).unwrap(),
                &finite_dim_quantum(n).unwrap(),
            )
            .unwrap();
            let hw = highest_weight_vectors(&t).unwrap();
            assert_eq!(hw[0].0, rational(m + n));
            assert_eq!(hw[0].1, Vector::basis(0));
        }
    }
}
