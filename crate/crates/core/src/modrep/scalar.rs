use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::qarith::{format_rational, LaurentPoly, QArithError, Rational};

/// Which algebra acts: `U(sl2)` with `e, f, h`, or `U_v(sl2)` with `E, F, K, K^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Classical,
    Quantum,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Classical => "classical",
            Flavor::Quantum => "quantum",
        })
    }
}

/// A type-erased scalar, used where classical and quantum results meet (reports, output).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Classical(Rational),
    Quantum(LaurentPoly),
}

impl Scalar {
    pub fn flavor(&self) -> Flavor {
        match self {
            Scalar::Classical(_) => Flavor::Classical,
            Scalar::Quantum(_) => Flavor::Quantum,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Classical(r) => f.write_str(&format_rational(r)),
            Scalar::Quantum(p) => write!(f, "{p}"),
        }
    }
}

/// Exact ring of matrix entries for one module flavor.
///
/// `Rational` is the classical scalar field; `LaurentPoly` is the quantum scalar ring.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Send + Sync + 'static
{
    const FLAVOR: Flavor;

    fn from_rational(r: Rational) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn div_exact(&self, other: &Self) -> Result<Self, QArithError>;

    /// `v^e`; the classical ring is the specialization `v = 1`, so this is 1 there.
    fn v_power(e: i64) -> Self;

    /// Rescales a nonzero vector to the canonical representative of its line.
    fn normalize_line(entries: &mut [Self]);

    /// Value at `v = 1` (identity for classical scalars).
    fn specialize(&self) -> Rational;

    fn into_scalar(self) -> Scalar;
}

impl Coefficient for Rational {
    const FLAVOR: Flavor = Flavor::Classical;

    fn from_rational(r: Rational) -> Self {
        r
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Result<Self, QArithError> {
        if Zero::is_zero(other) {
            return Err(QArithError::DivisionByZero);
        }
        Ok(self / other)
    }

    fn v_power(_e: i64) -> Self {
        One::one()
    }

    /// First nonzero coordinate becomes 1.
    fn normalize_line(entries: &mut [Self]) {
        let Some(pivot) = entries.iter().find(|c| !Zero::is_zero(*c)).cloned() else {
            return;
        };
        for c in entries.iter_mut() {
            *c /= &pivot;
        }
    }

    fn specialize(&self) -> Rational {
        self.clone()
    }

    fn into_scalar(self) -> Scalar {
        Scalar::Classical(self)
    }
}

impl Coefficient for LaurentPoly {
    const FLAVOR: Flavor = Flavor::Quantum;

    fn from_rational(r: Rational) -> Self {
        LaurentPoly::constant(r)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Result<Self, QArithError> {
        LaurentPoly::div_exact(self, other)
    }

    fn v_power(e: i64) -> Self {
        LaurentPoly::v_pow(e)
    }

    /// Divides out the polynomial gcd, makes all coefficients coprime integers, then
    /// fixes the unit so the first nonzero entry has lowest exponent 0 and a positive
    /// leading coefficient.
    fn normalize_line(entries: &mut [Self]) {
        let g = entries
            .iter()
            .fold(LaurentPoly::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return;
        }
        for c in entries.iter_mut() {
            *c = c.div_exact(&g).expect("gcd divides every entry");
        }

        let mut lcm = BigInt::one();
        let mut content = BigInt::zero();
        for c in entries.iter() {
            for (_, x) in c.terms() {
                lcm = lcm.lcm(x.denom());
            }
        }
        for c in entries.iter() {
            for (_, x) in c.terms() {
                let scaled = x * Rational::from_integer(lcm.clone());
                content = content.gcd(scaled.numer());
            }
        }
        let factor = Rational::new(lcm, content);

        let first = entries.iter().find(|c| !c.is_zero()).expect("nonzero line");
        let shift = -first.min_exp().expect("nonzero");
        let sign = if first.leading_coeff().expect("nonzero").is_negative() {
            -factor
        } else {
            factor
        };
        for c in entries.iter_mut() {
            *c = c.shift(shift).scale(&sign);
        }
    }

    fn specialize(&self) -> Rational {
        self.specialize_one()
    }

    fn into_scalar(self) -> Scalar {
        Scalar::Quantum(self)
    }
}
