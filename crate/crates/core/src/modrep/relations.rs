use std::fmt;

use num_traits::ToPrimitive;

use super::{BasisLabel, Coefficient, Flavor, Generator, Scalar, Vector, WeightModule};
use crate::qarith::{q_int, rational, LaurentPoly};

/// Defining relations checked on each basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `[h, e] = 2e`
    HE,
    /// `[h, f] = -2f`
    HF,
    /// `[e, f] = h`
    EF,
    /// `K K^-1 = 1`
    KKInv,
    /// `K E K^-1 = v^2 E`
    KEKInv,
    /// `K F K^-1 = v^-2 F`
    KFKInv,
    /// `EF - FE = (K - K^-1)/(v - v^-1)`, evaluated as `[weight]` on the `K`-eigenbasis
    EFQuantum,
}

impl Relation {
    pub fn for_flavor(flavor: Flavor) -> &'static [Relation] {
        match flavor {
            Flavor::Classical => &[Relation::HE, Relation::HF, Relation::EF],
            Flavor::Quantum => &[
                Relation::KKInv,
                Relation::KEKInv,
                Relation::KFKInv,
                Relation::EFQuantum,
            ],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Relation::HE => "[h,e]=2e",
            Relation::HF => "[h,f]=-2f",
            Relation::EF => "[e,f]=h",
            Relation::KKInv => "KKinv=1",
            Relation::KEKInv => "KEKinv=v^2E",
            Relation::KFKInv => "KFKinv=v^-2F",
            Relation::EFQuantum => "EF-FE=[K;0]",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of one relation on one basis vector. `defect` is `lhs - rhs`, `None` when zero.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationOutcome {
    pub relation: Relation,
    pub basis: BasisLabel,
    pub defect: Option<Vec<(BasisLabel, Scalar)>>,
}

impl RelationOutcome {
    pub fn passed(&self) -> bool {
        self.defect.is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationReport {
    pub module: String,
    pub flavor: Flavor,
    pub dim: usize,
    pub relations: Vec<Relation>,
    /// Every `(relation, basis vector)` pair that was evaluated, in basis order.
    pub outcomes: Vec<RelationOutcome>,
    /// Basis vectors skipped because some relation would use a clipped image.
    pub excluded: Vec<BasisLabel>,
    /// Matrix entries `(generator, row label, column label)` breaking the weight grading.
    pub weight_violations: Vec<(Generator, BasisLabel, BasisLabel)>,
}

impl RelationReport {
    pub fn failures(&self) -> impl Iterator<Item = &RelationOutcome> + '_ {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }

    /// Basis vectors with at least one failing relation, in basis order, deduplicated.
    pub fn failing_vectors(&self) -> Vec<BasisLabel> {
        let mut out: Vec<BasisLabel> = Vec::new();
        for o in self.failures() {
            if !out.contains(&o.basis) {
                out.push(o.basis.clone());
            }
        }
        out
    }

    pub fn checked_vectors(&self) -> usize {
        self.dim - self.excluded.len()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0 && self.weight_violations.is_empty()
    }
}

/// Verifies the defining relations exactly on every basis vector whose evaluation never
/// touches a clipped generator image.
pub fn check_relations<S: Coefficient>(m: &WeightModule<S>) -> RelationReport {
    let relations = Relation::for_flavor(S::FLAVOR);
    let mut outcomes = Vec::new();
    let mut excluded = Vec::new();

    for i in 0..m.dim() {
        let x = Vector::<S>::basis(i);
        let defects: Option<Vec<Vector<S>>> = relations
            .iter()
            .map(|&r| relation_defect(m, r, i, &x))
            .collect();
        match defects {
            None => excluded.push(m.label(i).clone()),
            Some(ds) => {
                for (&relation, d) in relations.iter().zip(ds) {
                    outcomes.push(RelationOutcome {
                        relation,
                        basis: m.label(i).clone(),
                        defect: (!d.is_zero()).then(|| {
                            d.iter()
                                .map(|(j, c)| (m.label(j).clone(), c.clone().into_scalar()))
                                .collect()
                        }),
                    });
                }
            }
        }
    }

    let weight_violations = m
        .weight_violations()
        .into_iter()
        .map(|(g, r, c)| (g, m.label(r).clone(), m.label(c).clone()))
        .collect();

    RelationReport {
        module: m.name().to_string(),
        flavor: S::FLAVOR,
        dim: m.dim(),
        relations: relations.to_vec(),
        outcomes,
        excluded,
        weight_violations,
    }
}

/// `lhs - rhs` of one relation applied to `x = w_i`; `None` if a clipped image is needed.
fn relation_defect<S: Coefficient>(
    m: &WeightModule<S>,
    relation: Relation,
    i: usize,
    x: &Vector<S>,
) -> Option<Vector<S>> {
    // g1 (g2 x)
    let word = |g1: Generator, g2: Generator| -> Option<Vector<S>> {
        let y = m.apply_unclipped(g2, x)?;
        m.apply_unclipped(g1, &y)
    };
    let word3 = |g1: Generator, g2: Generator, g3: Generator| -> Option<Vector<S>> {
        let y = m.apply_unclipped(g3, x)?;
        let y = m.apply_unclipped(g2, &y)?;
        m.apply_unclipped(g1, &y)
    };
    use Generator::*;
    let d = match relation {
        Relation::HE => {
            let lhs = word(H, E)?.sub(&word(E, H)?);
            lhs.sub(
                &m.apply_unclipped(E, x)?
                    .scale(&S::from_rational(rational(2))),
            )
        }
        Relation::HF => {
            let lhs = word(H, F)?.sub(&word(F, H)?);
            lhs.add(
                &m.apply_unclipped(F, x)?
                    .scale(&S::from_rational(rational(2))),
            )
        }
        Relation::EF => word(E, F)?.sub(&word(F, E)?).sub(&m.apply_unclipped(H, x)?),
        Relation::KKInv => word(K, KInv)?.sub(x),
        Relation::KEKInv => word3(K, E, KInv)?.sub(&m.apply_unclipped(E, x)?.scale(&S::v_power(2))),
        Relation::KFKInv => {
            word3(K, F, KInv)?.sub(&m.apply_unclipped(F, x)?.scale(&S::v_power(-2)))
        }
        Relation::EFQuantum => {
            let w = m
                .weight(i)
                .to_integer()
                .to_i64()
                .expect("quantum weights are integers");
            word(E, F)?
                .sub(&word(F, E)?)
                .sub(&x.scale(&lift_quantum::<S>(&q_int(w))))
        }
    };
    Some(d)
}

/// Embeds a Laurent polynomial into the module's scalar ring (classical: `v = 1`).
fn lift_quantum<S: Coefficient>(p: &LaurentPoly) -> S {
    p.terms().fold(S::zero(), |acc, (e, c)| {
        acc.add_ref(&S::v_power(e).mul_ref(&S::from_rational(c.clone())))
    })
}
