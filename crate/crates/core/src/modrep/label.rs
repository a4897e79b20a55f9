use std::fmt;

/// Name of a basis vector.
///
/// `FinDim(k)` and `Verma(k)` index by lowering depth: `w_k` has weight `top - 2k`.
/// `Rasskazova { i, j }` is `w^i_j` with `1 <= i <= n`. Tensor labels pair the
/// constituent labels in factor order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    FinDim(usize),
    Verma(usize),
    Rasskazova { i: usize, j: i64 },
    Tensor(Box<BasisLabel>, Box<BasisLabel>),
}

impl BasisLabel {
    pub fn tensor(a: BasisLabel, b: BasisLabel) -> Self {
        BasisLabel::Tensor(Box::new(a), Box::new(b))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            BasisLabel::FinDim(_) => "findim",
            BasisLabel::Verma(_) => "verma",
            BasisLabel::Rasskazova { .. } => "rasskazova",
            BasisLabel::Tensor(..) => "tensor",
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::FinDim(k) | BasisLabel::Verma(k) => write!(f, "w_{k}"),
            BasisLabel::Rasskazova { i, j } => write!(f, "w^{i}_{j}"),
            BasisLabel::Tensor(a, b) => write!(f, "{a}⊗{b}"),
        }
    }
}
