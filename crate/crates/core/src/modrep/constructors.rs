use super::{BasisLabel, Coefficient, Generator, ModRepError, WeightModule};
use crate::qarith::{format_rational, q_int, rational, LaurentPoly, Rational};

fn check_dim(n: i64) -> Result<usize, ModRepError> {
    usize::try_from(n).map_err(|_| ModRepError::NegativeDimension(n))
}

/// Classical `F_n`: basis `w_0..w_n`, weight `n - 2k`,
/// `e w_k = (n-k+1) w_{k-1}`, `f w_k = (k+1) w_{k+1}`.
pub fn finite_dim_classical(n: i64) -> Result<WeightModule<Rational>, ModRepError> {
    let dim = check_dim(n)?;
    let mut m = WeightModule::new(
        format!("F_{n}"),
        (0..=dim)
            .map(|k| (BasisLabel::FinDim(k), rational(n - 2 * k as i64)))
            .collect(),
    )?;
    for k in 0..=dim {
        let ki = k as i64;
        if k > 0 {
            m.set_entry(Generator::E, k - 1, k, rational(n - ki + 1));
        }
        if k < dim {
            m.set_entry(Generator::F, k + 1, k, rational(ki + 1));
        }
    }
    Ok(m)
}

/// Quantum `F_n`: `K w_k = v^(n-2k) w_k`, `E w_k = [n-k+1] w_{k-1}`, `F w_k = [k+1] w_{k+1}`.
pub fn finite_dim_quantum(n: i64) -> Result<WeightModule<LaurentPoly>, ModRepError> {
    let dim = check_dim(n)?;
    let mut m = WeightModule::new(
        format!("F_{n}"),
        (0..=dim)
            .map(|k| (BasisLabel::FinDim(k), rational(n - 2 * k as i64)))
            .collect(),
    )?;
    for k in 0..=dim {
        let ki = k as i64;
        if k > 0 {
            m.set_entry(Generator::E, k - 1, k, q_int(n - ki + 1));
        }
        if k < dim {
            m.set_entry(Generator::F, k + 1, k, q_int(ki + 1));
        }
    }
    Ok(m)
}

/// Verma module with highest weight `hw`, truncated to `w_0..w_depth`.
///
/// `f w_k = w_{k+1}` (clipped at `w_depth`), `e w_k = k (hw - k + 1) w_{k-1}`.
pub fn verma_classical(hw: &Rational, depth: i64) -> Result<WeightModule<Rational>, ModRepError> {
    if depth < 1 {
        return Err(ModRepError::InvalidParams(format!(
            "Verma depth must be >= 1, got {depth}"
        )));
    }
    let depth = depth as usize;
    let mut m = WeightModule::new(
        format!("M({})[depth {depth}]", format_rational(hw)),
        (0..=depth)
            .map(|k| (BasisLabel::Verma(k), hw - rational(2 * k as i64)))
            .collect(),
    )?;
    for k in 0..=depth {
        let kr = rational(k as i64);
        if k > 0 {
            let c = &kr * (hw - &kr + rational(1));
            m.set_entry(Generator::E, k - 1, k, c);
        }
        if k < depth {
            m.set_entry(Generator::F, k + 1, k, rational(1));
        } else {
            m.mark_clipped(Generator::F, k);
        }
    }
    Ok(m)
}

/// Parameters of Rasskazova's module `V(beta, lambda, n)`, with the `Z`-graded basis
/// kept on the window `-window <= j <= window`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasskazovaParams {
    pub beta: Rational,
    pub lambda: Rational,
    pub n: usize,
    pub window: usize,
}

impl RasskazovaParams {
    pub fn new(
        beta: Rational,
        lambda: Rational,
        n: usize,
        window: usize,
    ) -> Result<Self, ModRepError> {
        if n < 1 || window < 1 {
            return Err(ModRepError::InvalidParams(format!(
                "Rasskazova module needs n >= 1 and window >= 1, got n={n}, window={window}"
            )));
        }
        Ok(Self {
            beta,
            lambda,
            n,
            window,
        })
    }

    /// `lambda + j beta + j (j+1)`: the `e` coefficient on `w^i_j` for `j < 0`, and
    /// (shifted by one) minus the `f` coefficient on `w^i_{j+1}` for `j+1 > 0`.
    fn chain_coeff(&self, j: i64) -> Rational {
        &self.lambda + rational(j) * &self.beta + rational(j * (j + 1))
    }
}

/// Rasskazova's `V(beta, lambda, n)` on the window `|j| <= J`, basis ordered by `i`
/// then `j`. `w^0_j` is taken to be zero.
///
/// ```text
/// h w^i_j = (2j + beta) w^i_j
/// e w^i_j = w^i_{j+1}                                            j >= 0
/// e w^i_j = (lambda + j beta + j(j+1)) w^i_{j+1} + w^{i-1}_{j+1}  j < 0
/// f w^i_j = -(lambda + (j-1) beta + j(j-1)) w^i_{j-1} - w^{i-1}_{j-1}  j > 0
/// f w^i_j = -w^i_{j-1}                                           j <= 0
/// ```
pub fn rasskazova(p: &RasskazovaParams) -> Result<WeightModule<Rational>, ModRepError> {
    let jmax = p.window as i64;
    let mut basis = Vec::new();
    for i in 1..=p.n {
        for j in -jmax..=jmax {
            basis.push((BasisLabel::Rasskazova { i, j }, rational(2 * j) + &p.beta));
        }
    }
    let mut m = WeightModule::new(
        format!(
            "V(beta={}, lambda={}, n={})[|j| <= {}]",
            format_rational(&p.beta),
            format_rational(&p.lambda),
            p.n,
            p.window
        ),
        basis,
    )?;
    let pos = |i: usize, j: i64| (i - 1) * (2 * p.window + 1) + (j + jmax) as usize;

    for i in 1..=p.n {
        for j in -jmax..=jmax {
            let col = pos(i, j);

            if j + 1 > jmax {
                m.mark_clipped(Generator::E, col);
            } else if j >= 0 {
                m.set_entry(Generator::E, pos(i, j + 1), col, rational(1));
            } else {
                m.set_entry(Generator::E, pos(i, j + 1), col, p.chain_coeff(j));
                if i > 1 {
                    m.set_entry(Generator::E, pos(i - 1, j + 1), col, rational(1));
                }
            }

            if j - 1 < -jmax {
                m.mark_clipped(Generator::F, col);
            } else if j > 0 {
                m.set_entry(Generator::F, pos(i, j - 1), col, -p.chain_coeff(j - 1));
                if i > 1 {
                    m.set_entry(Generator::F, pos(i - 1, j - 1), col, rational(-1));
                }
            } else {
                m.set_entry(Generator::F, pos(i, j - 1), col, rational(-1));
            }
        }
    }
    Ok(m)
}

/// Entry `g[row, col]` addressed by labels; zero when absent.
pub fn entry<S: Coefficient>(
    m: &WeightModule<S>,
    g: Generator,
    row: &BasisLabel,
    col: &BasisLabel,
) -> S {
    match (m.index_of(row), m.index_of(col), m.matrix(g)) {
        (Some(r), Some(c), Ok(mat)) => mat.get(r, c),
        _ => S::zero(),
    }
}
