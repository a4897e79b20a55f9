use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::ToPrimitive;

use super::{BasisLabel, Coefficient, Flavor, ModRepError};
use crate::qarith::{format_rational, rational, rational_is_integer, LaurentPoly, Rational};

/// Algebra generators. Classical modules use `E, F, H` (printed `e, f, h`); quantum
/// modules use `E, F, K, KInv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E,
    F,
    H,
    K,
    KInv,
}

impl Generator {
    pub fn for_flavor(flavor: Flavor) -> &'static [Generator] {
        match flavor {
            Flavor::Classical => &[Generator::E, Generator::F, Generator::H],
            Flavor::Quantum => &[Generator::E, Generator::F, Generator::K, Generator::KInv],
        }
    }

    /// Weight change of a nonzero matrix entry.
    pub fn weight_shift(self) -> i64 {
        match self {
            Generator::E => 2,
            Generator::F => -2,
            Generator::H | Generator::K | Generator::KInv => 0,
        }
    }

    pub fn symbol(self, flavor: Flavor) -> &'static str {
        match (self, flavor) {
            (Generator::E, Flavor::Classical) => "e",
            (Generator::F, Flavor::Classical) => "f",
            (Generator::E, Flavor::Quantum) => "E",
            (Generator::F, Flavor::Quantum) => "F",
            (Generator::H, _) => "h",
            (Generator::K, _) => "K",
            (Generator::KInv, _) => "Kinv",
        }
    }

    /// Accepts `e/E`, `f/F`, `h`, `K`, `Kinv` (also `K^-1`).
    pub fn parse(s: &str) -> Option<Generator> {
        match s {
            "e" | "E" => Some(Generator::E),
            "f" | "F" => Some(Generator::F),
            "h" | "H" => Some(Generator::H),
            "K" | "k" => Some(Generator::K),
            "Kinv" | "K^-1" | "kinv" => Some(Generator::KInv),
            _ => None,
        }
    }
}

/// Square sparse matrix stored by columns: `columns[c]` maps row index to a nonzero entry.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix<S> {
    columns: Vec<BTreeMap<usize, S>>,
}

impl<S: Coefficient> SparseMatrix<S> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            columns: vec![BTreeMap::new(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, row: usize, col: usize) -> S {
        self.columns[col].get(&row).cloned().unwrap_or_else(S::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        if value.is_zero() {
            self.columns[col].remove(&row);
        } else {
            self.columns[col].insert(row, value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &S) {
        let cur = self.get(row, col);
        self.set(row, col, cur.add_ref(value));
    }

    pub fn column(&self, col: usize) -> &BTreeMap<usize, S> {
        &self.columns[col]
    }

    /// Nonzero entries as `(row, col, value)`, column-major.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &S)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (*r, c, x)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    pub fn mul_vec(&self, x: &Vector<S>) -> Vector<S> {
        let mut out = Vector::zero();
        for (c, xc) in x.iter() {
            for (r, a) in &self.columns[c] {
                out.add_entry(*r, &a.mul_ref(xc));
            }
        }
        out
    }

    pub fn map<T: Coefficient>(&self, f: impl Fn(&S) -> T) -> SparseMatrix<T> {
        let mut out = SparseMatrix::zeros(self.dim());
        for (r, c, x) in self.triplets() {
            out.set(r, c, f(x));
        }
        out
    }
}

/// Sparse vector in a module, keyed by basis position. No zero entries are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<S> {
    entries: BTreeMap<usize, S>,
}

impl<S: Coefficient> Vector<S> {
    pub fn zero() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn basis(index: usize) -> Self {
        Self::from_entries([(index, S::one())])
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, S)>>(entries: I) -> Self {
        let mut v = Self::zero();
        for (i, x) in entries {
            v.add_entry(i, &x);
        }
        v
    }

    pub fn add_entry(&mut self, index: usize, value: &S) {
        if value.is_zero() {
            return;
        }
        let next = match self.entries.get(&index) {
            Some(cur) => cur.add_ref(value),
            None => value.clone(),
        };
        if next.is_zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, next);
        }
    }

    pub fn get(&self, index: usize) -> S {
        self.entries.get(&index).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &S)> + '_ {
        self.entries.iter().map(|(i, x)| (*i, x))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_entries(self.entries.iter().map(|(i, x)| (*i, x.mul_ref(c))))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, x) in other.iter() {
            out.add_entry(i, x);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, x) in other.iter() {
            out.add_entry(i, &x.neg_ref());
        }
        out
    }
}

/// A weight module with a finite (possibly truncated) basis and sparse generator action.
///
/// `clipped[g]` lists the basis vectors whose image under `g` left the retained basis
/// and was dropped; those images are wrong and relation checks must avoid them.
#[derive(Debug, Clone)]
pub struct WeightModule<S> {
    name: String,
    basis: Vec<BasisLabel>,
    index: BTreeMap<BasisLabel, usize>,
    weights: Vec<Rational>,
    action: BTreeMap<Generator, SparseMatrix<S>>,
    clipped: BTreeMap<Generator, BTreeSet<usize>>,
}

impl<S: Coefficient> WeightModule<S> {
    /// Creates a module with the given weighted basis. The Cartan generators (`h`, or
    /// `K`/`K^-1`) are filled in from the weights; `e`/`f` start at zero.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<(BasisLabel, Rational)>,
    ) -> Result<Self, ModRepError> {
        let dim = basis.len();
        let mut index = BTreeMap::new();
        let mut labels = Vec::with_capacity(dim);
        let mut weights = Vec::with_capacity(dim);
        for (pos, (label, w)) in basis.into_iter().enumerate() {
            if index.insert(label.clone(), pos).is_some() {
                return Err(ModRepError::DuplicateLabel(label.to_string()));
            }
            if S::FLAVOR == Flavor::Quantum && !rational_is_integer(&w) {
                return Err(ModRepError::NonIntegerWeight(format_rational(&w)));
            }
            labels.push(label);
            weights.push(w);
        }
        let mut action = BTreeMap::new();
        for &g in Generator::for_flavor(S::FLAVOR) {
            let mut m = SparseMatrix::zeros(dim);
            for (i, w) in weights.iter().enumerate() {
                match g {
                    Generator::H => m.set(i, i, S::from_rational(w.clone())),
                    Generator::K | Generator::KInv => {
                        let e = w.to_integer().to_i64().expect("weight fits in i64");
                        let e = if g == Generator::K { e } else { -e };
                        m.set(i, i, S::v_power(e));
                    }
                    _ => {}
                }
            }
            action.insert(g, m);
        }
        Ok(Self {
            name: name.into(),
            basis: labels,
            index,
            weights,
            action,
            clipped: BTreeMap::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn flavor(&self) -> Flavor {
        S::FLAVOR
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn label(&self, index: usize) -> &BasisLabel {
        &self.basis[index]
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn weight(&self, index: usize) -> &Rational {
        &self.weights[index]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn generators(&self) -> &'static [Generator] {
        Generator::for_flavor(S::FLAVOR)
    }

    pub fn matrix(&self, g: Generator) -> Result<&SparseMatrix<S>, ModRepError> {
        self.action.get(&g).ok_or(ModRepError::GeneratorFlavor {
            generator: g,
            flavor: S::FLAVOR,
        })
    }

    pub(crate) fn matrix_mut(&mut self, g: Generator) -> &mut SparseMatrix<S> {
        self.action
            .get_mut(&g)
            .expect("generator belongs to flavor")
    }

    pub(crate) fn replace_matrix(&mut self, g: Generator, m: SparseMatrix<S>) {
        assert_eq!(m.dim(), self.dim());
        *self.matrix_mut(g) = m;
    }

    pub fn set_entry(&mut self, g: Generator, row: usize, col: usize, value: S) {
        self.matrix_mut(g).set(row, col, value);
    }

    pub fn mark_clipped(&mut self, g: Generator, col: usize) {
        self.clipped.entry(g).or_default().insert(col);
    }

    pub fn clipped(&self, g: Generator) -> impl Iterator<Item = usize> + '_ {
        self.clipped.get(&g).into_iter().flatten().copied()
    }

    pub fn is_clipped(&self, g: Generator, index: usize) -> bool {
        self.clipped.get(&g).is_some_and(|s| s.contains(&index))
    }

    /// Basis vectors with at least one clipped generator image, in basis order.
    pub fn boundary(&self) -> BTreeSet<usize> {
        self.clipped.values().flatten().copied().collect()
    }

    /// Sparse matrix-vector product `g . x`.
    pub fn apply(&self, g: Generator, x: &Vector<S>) -> Result<Vector<S>, ModRepError> {
        let m = self.matrix(g)?;
        if let Some(bad) = x.support().find(|&i| i >= self.dim()) {
            return Err(ModRepError::IndexOutOfRange {
                index: bad,
                dim: self.dim(),
            });
        }
        Ok(m.mul_vec(x))
    }

    /// Like [`apply`](Self::apply) but `None` when the result would use a clipped image.
    pub(crate) fn apply_unclipped(&self, g: Generator, x: &Vector<S>) -> Option<Vector<S>> {
        if x.support().any(|i| self.is_clipped(g, i)) {
            return None;
        }
        Some(self.action[&g].mul_vec(x))
    }

    /// Copy with `delta` added to one matrix entry; used for fault injection.
    pub fn perturbed(
        &self,
        g: Generator,
        row: usize,
        col: usize,
        delta: &S,
    ) -> Result<Self, ModRepError> {
        self.matrix(g)?;
        for idx in [row, col] {
            if idx >= self.dim() {
                return Err(ModRepError::IndexOutOfRange {
                    index: idx,
                    dim: self.dim(),
                });
            }
        }
        let mut out = self.clone();
        out.name = format!(
            "{} (perturbed {}[{row},{col}])",
            self.name,
            g.symbol(S::FLAVOR)
        );
        out.matrix_mut(g).add_to(row, col, delta);
        Ok(out)
    }

    /// Nonzero entries `(g, row, col)` that violate the weight grading: off-diagonal
    /// Cartan entries, wrong Cartan eigenvalues, or `e`/`f` entries whose weights do not
    /// differ by exactly `+2`/`-2`.
    pub fn weight_violations(&self) -> Vec<(Generator, usize, usize)> {
        let mut out = Vec::new();
        for (&g, m) in &self.action {
            for (r, c, x) in m.triplets() {
                let diff = &self.weights[r] - &self.weights[c];
                let ok = diff == rational(g.weight_shift())
                    && match g {
                        Generator::H | Generator::K | Generator::KInv => {
                            r == c && *x == self.cartan_entry(g, c)
                        }
                        _ => true,
                    };
                if !ok {
                    out.push((g, r, c));
                }
            }
            if matches!(g, Generator::H | Generator::K | Generator::KInv) {
                for c in 0..self.dim() {
                    if m.column(c).is_empty() && !self.cartan_entry(g, c).is_zero() {
                        out.push((g, c, c));
                    }
                }
            }
        }
        out
    }

    fn cartan_entry(&self, g: Generator, i: usize) -> S {
        let w = &self.weights[i];
        match g {
            Generator::H => S::from_rational(w.clone()),
            Generator::K | Generator::KInv => {
                let e = w.to_integer().to_i64().expect("weight fits in i64");
                S::v_power(if g == Generator::K { e } else { -e })
            }
            _ => S::zero(),
        }
    }

    /// Human-readable form of a vector in this module.
    pub fn format_vector(&self, x: &Vector<S>) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.iter()
            .map(|(i, c)| format!("({c})·{}", self.basis[i]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl WeightModule<LaurentPoly> {
    /// Generator matrix with every entry evaluated at `v = 1`.
    pub fn specialized_matrix(&self, g: Generator) -> Result<SparseMatrix<Rational>, ModRepError> {
        Ok(self.matrix(g)?.map(|x| x.specialize_one()))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::E => "E",
            Generator::F => "F",
            Generator::H => "h",
            Generator::K => "K",
            Generator::KInv => "Kinv",
        })
    }
}
