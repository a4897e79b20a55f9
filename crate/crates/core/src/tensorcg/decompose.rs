use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::modrep::{Coefficient, WeightModule};
use crate::qarith::format_rational;

use super::TensorError;

/// Direct sum `⊕ F_w^{mult(w)}`, keyed by highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    summands: BTreeMap<i64, usize>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, weight: i64, mult: usize) {
        if mult > 0 {
            *self.summands.entry(weight).or_default() += mult;
        }
    }

    /// One summand per listed highest weight.
    pub fn from_weights<I: IntoIterator<Item = i64>>(weights: I) -> Self {
        let mut d = Self::new();
        for w in weights {
            d.add(w, 1);
        }
        d
    }

    pub fn multiplicity(&self, weight: i64) -> usize {
        self.summands.get(&weight).copied().unwrap_or(0)
    }

    /// `(weight, multiplicity)` pairs, highest weight first.
    pub fn pairs(&self) -> Vec<(i64, usize)> {
        self.summands.iter().rev().map(|(w, m)| (*w, *m)).collect()
    }

    /// `sum mult(w) (w + 1)`.
    pub fn total_dim(&self) -> usize {
        self.summands
            .iter()
            .map(|(w, m)| m * (*w as usize + 1))
            .sum()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.summands.values().all(|&m| m == 1)
    }
}

/// `F_m ⊗ F_n = F_{m+n} ⊕ F_{m+n-2} ⊕ ... ⊕ F_{|m-n|}`.
pub fn cg_decompose(m: usize, n: usize) -> Decomposition {
    let (m, n) = (m as i64, n as i64);
    Decomposition::from_weights(((m - n).abs()..=m + n).rev().step_by(2))
}

/// Decomposes a module from its weight multiplicities alone by peeling off the
/// character of `F_w` for the largest remaining weight `w`.
pub fn decompose_by_character<S: Coefficient>(
    module: &WeightModule<S>,
) -> Result<Decomposition, TensorError> {
    let mut mult: BTreeMap<i64, i64> = BTreeMap::new();
    for w in module.weights() {
        let wi = w
            .is_integer()
            .then(|| w.to_integer().to_i64())
            .flatten()
            .ok_or_else(|| {
                TensorError::NotDecomposable(format!("non-integer weight {}", format_rational(w)))
            })?;
        *mult.entry(wi).or_default() += 1;
    }
    peel(mult)
}

fn peel(mut mult: BTreeMap<i64, i64>) -> Result<Decomposition, TensorError> {
    let mut out = Decomposition::new();
    while let Some((&top, _)) = mult.iter().rev().find(|(_, &c)| c > 0) {
        if top < 0 {
            return Err(TensorError::NotDecomposable(format!(
                "residual weight {top} has no finite-dimensional summand"
            )));
        }
        for w in (-top..=top).step_by(2) {
            let c = mult.entry(w).or_default();
            *c -= 1;
            if *c < 0 {
                return Err(TensorError::NotDecomposable(format!(
                    "peeling F_{top} needs weight {w}, which is exhausted"
                )));
            }
        }
        out.add(top, 1);
        mult.retain(|_, c| *c != 0);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{finite_dim_classical, verma_classical};
    use crate::qarith::rational;
    use crate::tensorcg::tensor_classical;

    #[test]
    fn cg_small_cases() {
        assert_eq!(cg_decompose(1, 1).pairs(), vec![(2, 1), (0, 1)]);
        assert_eq!(cg_decompose(4, 0).pairs(), vec![(4, 1)]);
        assert_eq!(cg_decompose(2, 3).pairs(), vec![(5, 1), (3, 1), (1, 1)]);
        assert_eq!(cg_decompose(3, 2), cg_decompose(2, 3));
        assert_eq!(cg_decompose(0, 0).pairs(), vec![(0, 1)]);
    }

    #[test]
    fn character_peeling() {
        let f1 = finite_dim_classical(1).unwrap();
        let t = tensor_classical(&f1, &f1).unwrap();
        assert_eq!(
            decompose_by_character(&t).unwrap().pairs(),
            vec![(2, 1), (0, 1)]
        );
        for n in 0..6 {
            assert_eq!(
                decompose_by_character(&finite_dim_classical(n).unwrap())
                    .unwrap()
                    .pairs(),
                vec![(n, 1)]
            );
        }
    }

    #[test]
    fn truncated_verma_is_rejected() {
        let v = verma_classical(&rational(2), 3).unwrap();
        assert!(matches!(
            decompose_by_character(&v),
            Err(TensorError::NotDecomposable(_))
        ));
        let v = verma_classical(&rational(1), 6).unwrap();
        assert!(decompose_by_character(&v).is_err());
    }

    #[test]
    fn non_integer_weights_are_rejected() {
        let v = verma_classical(&crate::qarith::ratio(5, 2), 4).unwrap();
        assert!(decompose_by_character(&v).is_err());
    }

    #[test]
    fn gap_in_string_is_rejected() {
        let mut mult = BTreeMap::new();
        mult.insert(2, 1);
        mult.insert(-2, 1);
        assert!(peel(mult).is_err());
    }
}
