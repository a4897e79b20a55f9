use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{format_rational, QArithError, Rational};

/// Laurent polynomial in `v` with exact rational coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map and
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(super::rational(c))
    }

    /// `c * v^exp`.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Integer-coefficient shorthand used heavily in tests and tables.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, super::rational(c))))
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `v`.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// A single nonzero term `c v^k`; these are exactly the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluation at `v = 1`: the sum of all coefficients.
    pub fn specialize_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Evaluation at a nonzero rational point.
    pub fn eval(&self, x: &Rational) -> Result<Rational, QArithError> {
        if x.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        let (shift, dense) = self.to_dense();
        let horner = dense
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c);
        Ok(horner * pow_rational(x, shift))
    }

    /// Exact quotient `a / b` in `Q[v, v^-1]`.
    ///
    /// Since `v` is a unit, `b | a` iff the `v`-free parts divide in `Q[v]`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, QArithError> {
        if divisor.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = divisor.to_dense();
        let (q, r) = dense_divrem(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return Err(QArithError::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(Self::from_dense(sa - sb, q))
    }

    /// Canonical associate: lowest exponent 0 and leading coefficient 1.
    pub fn normalize_unit(&self) -> LaurentPoly {
        match (self.min_exp(), self.leading_coeff()) {
            (Some(lo), Some(lead)) => self.shift(-lo).scale(&lead.recip()),
            _ => Self::zero(),
        }
    }

    /// Greatest common divisor in `Q[v, v^-1]`, returned as its canonical associate
    /// (see [`normalize_unit`](Self::normalize_unit)). `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let (_, mut a) = self.to_dense();
        let (_, mut b) = other.to_dense();
        while b.iter().any(|c| !c.is_zero()) {
            let (_, r) = dense_divrem(&a, &b);
            a = b;
            b = trim(r);
        }
        Self::from_dense(0, a).normalize_unit()
    }

    /// `(shift, coeffs)` with `self = v^shift * sum coeffs[i] v^i` and `coeffs[0] != 0`.
    fn to_dense(&self) -> (i64, Vec<Rational>) {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return (0, Vec::new());
        };
        let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    fn from_dense(shift: i64, coeffs: Vec<Rational>) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c)),
        )
    }
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Schoolbook division of dense ascending coefficient vectors over `Q`.
fn dense_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let c = &r[dr] / lead;
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &c * bc;
        }
        q[off] = c;
        r = trim(r);
        if r.len() < b.len() {
            break;
        }
    }
    (q, r)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            if *e == 0 {
                f.write_str(&format_rational(&mag))?;
                continue;
            }
            if !unit {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({})", format_rational(&mag))?;
                }
            }
            match e {
                1 => f.write_str("v")?,
                _ => write!(f, "v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);
