use std::fmt;

use crate::modrep::{finite_dim_quantum, BasisLabel, Generator, Vector, WeightModule};
use crate::qarith::{q_fact, rational, LaurentPoly, RationalFunction};

use super::{highest_weight_vectors, tensor_quantum, TensorError};

/// How the index pair of the `k`-th term of `Phi` is read.
///
/// `positions(m, n, p, k)` returns `(a, b)` meaning the term sits on `w_a ⊗ w_b` in
/// `F_m ⊗ F_n` (indices by lowering depth, `w_a` has weight `m - 2a`). Out-of-range
/// positions are reported as errors, not clamped.
#[derive(Clone, Copy)]
pub struct Interpretation {
    pub id: &'static str,
    pub description: &'static str,
    positions: fn(i64, i64, i64, i64) -> (i64, i64),
}

impl Interpretation {
    /// Second factor at position `n-p+k` counted up from the lowest-weight vector of `F_n`
    /// (the `v_n, v_{n-2}, ..., v_{-n}` list read bottom-up), i.e. `w_{p-k}`; first factor
    /// fixed by requiring total weight `m+n-2p`, which gives `w_k`.
    pub const ASCENDING_SECOND: Interpretation = Interpretation {
        id: "ascending-second/weight-matched-first",
        description: "second factor at position n-p+k from the lowest weight (w_{p-k}); \
                      first factor weight-matched (w_k)",
        positions: |_m, _n, p, k| (k, p - k),
    };

    /// Second factor at `w_{n-p+k}` counted down from the top; first factor weight-matched,
    /// which forces `w_{2p-n-k}` and leaves the basis for many `(m, n, p, k)`.
    pub const DESCENDING_SECOND: Interpretation = Interpretation {
        id: "descending-second/weight-matched-first",
        description: "second factor at position n-p+k from the highest weight (w_{n-p+k}); \
                      first factor weight-matched (w_{2p-n-k})",
        positions: |_m, n, p, k| (2 * p - n - k, n - p + k),
    };

    pub fn all() -> [Interpretation; 2] {
        [Self::ASCENDING_SECOND, Self::DESCENDING_SECOND]
    }

    pub fn by_id(id: &str) -> Option<Interpretation> {
        Self::all().into_iter().find(|i| i.id == id)
    }

    pub fn positions(&self, m: usize, n: usize, p: usize, k: usize) -> (i64, i64) {
        (self.positions)(m as i64, n as i64, p as i64, k as i64)
    }
}

impl Default for Interpretation {
    fn default() -> Self {
        Self::ASCENDING_SECOND
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Interpretation").field(&self.id).finish()
    }
}

impl PartialEq for Interpretation {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

/// `Phi(m, n, p)` as an element of `F_m ⊗ F_n` over the fraction field: each coordinate
/// is `numerators[i] / denominator` with the common denominator `[n-p]! [m]!`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiVector {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub interpretation: &'static str,
    pub numerators: Vector<LaurentPoly>,
    pub denominator: LaurentPoly,
}

impl PhiVector {
    pub fn weight(&self) -> i64 {
        (self.m + self.n) as i64 - 2 * self.p as i64
    }

    pub fn coefficient(&self, index: usize) -> RationalFunction {
        RationalFunction::new(self.numerators.get(index), self.denominator.clone())
            .expect("denominator is a product of q-factorials")
    }

    /// Coordinates in tensor basis order, reduced.
    pub fn coefficients(&self) -> Vec<(usize, RationalFunction)> {
        self.numerators
            .support()
            .map(|i| (i, self.coefficient(i)))
            .collect()
    }
}

/// Evaluates
/// `sum_{k=0}^{p} (-1)^{n-p} [n-p+k]! [m-k]! / ([n-p]! [m]!) v^{(k-p)(2+m)+p^2-k^2+n}`
/// times the basis pair chosen by `interp`, with the sign constant in `k` as written.
pub fn phi_vector(
    m: usize,
    n: usize,
    p: usize,
    interp: Interpretation,
) -> Result<PhiVector, TensorError> {
    if p > m.min(n) {
        return Err(TensorError::PhiRange { m, n, p });
    }
    let (mi, ni, pi) = (m as i64, n as i64, p as i64);
    let sign = if (ni - pi) % 2 == 0 {
        rational(1)
    } else {
        rational(-1)
    };
    let denominator = &q_fact(ni - pi)? * &q_fact(mi)?;
    let mut numerators = Vector::zero();
    for k in 0..=p {
        let ki = k as i64;
        let (a, b) = interp.positions(m, n, p, k);
        if a < 0 || a > mi || b < 0 || b > ni {
            return Err(TensorError::PhiTermOutOfRange {
                m,
                n,
                p,
                k,
                first: a,
                second: b,
                interpretation: interp.id,
            });
        }
        let exponent = (ki - pi) * (2 + mi) + pi * pi - ki * ki + ni;
        let coeff = (&q_fact(ni - pi + ki)? * &q_fact(mi - ki)?)
            .shift(exponent)
            .scale(&sign);
        let index = a as usize * (n + 1) + b as usize;
        numerators.add_entry(index, &coeff);
    }
    Ok(PhiVector {
        m,
        n,
        p,
        interpretation: interp.id,
        numerators,
        denominator,
    })
}

/// A coordinate where `phi` differs from `scale * oracle`, the scale being fixed at
/// `reference` (the first coordinate of the oracle vector).
#[derive(Debug, Clone, PartialEq)]
pub struct MismatchWitness {
    pub label: BasisLabel,
    pub reference: BasisLabel,
    pub phi_coefficient: RationalFunction,
    pub expected_coefficient: RationalFunction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub interpretation: &'static str,
    pub proportional: bool,
    /// `phi = scalar * oracle` when proportional.
    pub scalar: Option<RationalFunction>,
    pub witness: Option<MismatchWitness>,
    /// Normalized nullspace vector of `E` at weight `m+n-2p`.
    pub oracle: Vec<(BasisLabel, LaurentPoly)>,
    pub phi: Vec<(BasisLabel, RationalFunction)>,
    /// `E x = 0` and `K x = v^(m+n-2p) x` for the oracle vector `x`, checked exactly.
    pub oracle_certified: bool,
}

impl ComparisonReport {
    pub fn weight(&self) -> i64 {
        (self.m + self.n) as i64 - 2 * self.p as i64
    }
}

/// Compares `phi_vector(m, n, p)` with the highest-weight vector of weight `m+n-2p`
/// computed by exact nullspace elimination in `F_m ⊗ F_n` under the quantum coproduct.
pub fn phi_vs_oracle(
    m: usize,
    n: usize,
    p: usize,
    interp: Interpretation,
) -> Result<ComparisonReport, TensorError> {
    let phi = phi_vector(m, n, p, interp)?;
    let module = tensor_quantum(
        &finite_dim_quantum(m as i64)?,
        &finite_dim_quantum(n as i64)?,
    )?;
    let weight = phi.weight();
    let (oracle, oracle_certified) = oracle_vector(&module, weight)?;

    let reference = oracle.support().next().expect("oracle vector is nonzero");
    let ratio = phi
        .coefficient(reference)
        .div(&RationalFunction::from(oracle.get(reference)))?;

    let mut witness = None;
    let mut support: Vec<usize> = oracle.support().chain(phi.numerators.support()).collect();
    support.sort_unstable();
    support.dedup();
    for i in support {
        let expected = ratio.mul(&RationalFunction::from(oracle.get(i)));
        let actual = phi.coefficient(i);
        if actual != expected {
            witness = Some(MismatchWitness {
                label: module.label(i).clone(),
                reference: module.label(reference).clone(),
                phi_coefficient: actual,
                expected_coefficient: expected,
            });
            break;
        }
    }
    let proportional = witness.is_none();

    Ok(ComparisonReport {
        m,
        n,
        p,
        interpretation: interp.id,
        proportional,
        scalar: proportional.then_some(ratio),
        witness,
        oracle: oracle
            .iter()
            .map(|(i, c)| (module.label(i).clone(), c.clone()))
            .collect(),
        phi: phi
            .coefficients()
            .into_iter()
            .map(|(i, c)| (module.label(i).clone(), c))
            .collect(),
        oracle_certified,
    })
}

fn oracle_vector(
    module: &WeightModule<LaurentPoly>,
    weight: i64,
) -> Result<(Vector<LaurentPoly>, bool), TensorError> {
    let mut hits: Vec<Vector<LaurentPoly>> = highest_weight_vectors(module)?
        .into_iter()
        .filter(|(w, _)| *w == rational(weight))
        .map(|(_, v)| v)
        .collect();
    if hits.len() != 1 {
        return Err(TensorError::OracleDimension {
            weight,
            found: hits.len(),
        });
    }
    let x = hits.pop().expect("one vector");
    let killed = module.apply(Generator::E, &x)?.is_zero();
    let eigen = module.apply(Generator::K, &x)? == x.scale(&LaurentPoly::v_pow(weight));
    Ok((x, killed && eigen))
}
