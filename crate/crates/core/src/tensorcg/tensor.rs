use crate::modrep::{BasisLabel, Coefficient, Generator, SparseMatrix, WeightModule};
use crate::qarith::{LaurentPoly, Rational};

use super::TensorError;

/// One summand `a ⊗ b` of a coproduct; `None` is the identity.
type Term = (Option<Generator>, Option<Generator>);

/// Classical coproduct `x -> x⊗1 + 1⊗x`.
pub fn tensor_classical(
    a: &WeightModule<Rational>,
    b: &WeightModule<Rational>,
) -> Result<WeightModule<Rational>, TensorError> {
    tensor_with(
        a,
        b,
        &[
            (
                Generator::E,
                &[(Some(Generator::E), None), (None, Some(Generator::E))],
            ),
            (
                Generator::F,
                &[(Some(Generator::F), None), (None, Some(Generator::F))],
            ),
            (
                Generator::H,
                &[(Some(Generator::H), None), (None, Some(Generator::H))],
            ),
        ],
    )
}

/// Quantum coproduct `E -> E⊗K + 1⊗E`, `F -> F⊗1 + K^-1⊗F`, `K -> K⊗K`.
pub fn tensor_quantum(
    a: &WeightModule<LaurentPoly>,
    b: &WeightModule<LaurentPoly>,
) -> Result<WeightModule<LaurentPoly>, TensorError> {
    use Generator::*;
    tensor_with(
        a,
        b,
        &[
            (E, &[(Some(E), Some(K)), (None, Some(E))]),
            (F, &[(Some(F), None), (Some(KInv), Some(F))]),
            (K, &[(Some(K), Some(K))]),
            (KInv, &[(Some(KInv), Some(KInv))]),
        ],
    )
}

/// Basis is the ordered pairs `(i, j)` at position `i * dim(b) + j`.
fn tensor_with<S: Coefficient>(
    a: &WeightModule<S>,
    b: &WeightModule<S>,
    coproduct: &[(Generator, &[Term])],
) -> Result<WeightModule<S>, TensorError> {
    let db = b.dim();
    let mut basis = Vec::with_capacity(a.dim() * db);
    for i in 0..a.dim() {
        for j in 0..db {
            basis.push((
                BasisLabel::tensor(a.label(i).clone(), b.label(j).clone()),
                a.weight(i) + b.weight(j),
            ));
        }
    }
    let mut out = WeightModule::new(format!("{} ⊗ {}", a.name(), b.name()), basis)?;

    for &(g, terms) in coproduct {
        let mut mat = SparseMatrix::zeros(out.dim());
        for &(ga, gb) in terms {
            let ma = ga.map(|g| a.matrix(g)).transpose()?;
            let mb = gb.map(|g| b.matrix(g)).transpose()?;
            kron_accumulate(&mut mat, ma, mb, a.dim(), db);
        }
        out.replace_matrix(g, mat);

        for i in 0..a.dim() {
            for j in 0..db {
                let hit = terms.iter().any(|&(ga, gb)| {
                    ga.is_some_and(|g| a.is_clipped(g, i)) || gb.is_some_and(|g| b.is_clipped(g, j))
                });
                if hit {
                    out.mark_clipped(g, i * db + j);
                }
            }
        }
    }
    Ok(out)
}

fn kron_accumulate<S: Coefficient>(
    out: &mut SparseMatrix<S>,
    ma: Option<&SparseMatrix<S>>,
    mb: Option<&SparseMatrix<S>>,
    da: usize,
    db: usize,
) {
    let entries = |m: Option<&SparseMatrix<S>>, d: usize| -> Vec<(usize, usize, S)> {
        match m {
            Some(m) => m.triplets().map(|(r, c, x)| (r, c, x.clone())).collect(),
            None => (0..d).map(|i| (i, i, S::one())).collect(),
        }
    };
    let ea = entries(ma, da);
    let eb = entries(mb, db);
    for (ra, ca, xa) in &ea {
        for (rb, cb, xb) in &eb {
            out.add_to(ra * db + rb, ca * db + cb, &xa.mul_ref(xb));
        }
    }
}
