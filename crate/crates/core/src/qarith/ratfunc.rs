use std::fmt;

use num_traits::Zero;

use super::{LaurentPoly, QArithError, Rational};

/// Reduced quotient of Laurent polynomials, used for the ratio between the `Phi`
/// formula and the oracle vector (the formula's coefficients are not Laurent in general).
///
/// The denominator is kept as a canonical associate: lowest exponent 0 and leading
/// coefficient 1. Numerator and denominator are coprime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

impl RationalFunction {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self, QArithError> {
        if denominator.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(Self::from(LaurentPoly::zero()));
        }
        let g = numerator.gcd(&denominator);
        let num = numerator.div_exact(&g)?;
        let den = denominator.div_exact(&g)?;
        // move the unit part of the denominator into the numerator
        let canon = den.normalize_unit();
        let unit = den.div_exact(&canon)?;
        Ok(Self {
            numerator: num.div_exact(&unit)?,
            denominator: canon,
        })
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `Some(p)` when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.denominator.is_one().then_some(&self.numerator)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
        .expect("product of nonzero denominators is nonzero")
    }

    pub fn div(&self, other: &Self) -> Result<Self, QArithError> {
        if other.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        Self::new(
            &self.numerator * &other.denominator,
            &self.denominator * &other.numerator,
        )
    }

    /// Value at `v = 1`, when the denominator does not vanish there.
    pub fn specialize_one(&self) -> Option<Rational> {
        let d = self.denominator.specialize_one();
        (!d.is_zero()).then(|| self.numerator.specialize_one() / d)
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self {
            numerator: p,
            denominator: LaurentPoly::one(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
