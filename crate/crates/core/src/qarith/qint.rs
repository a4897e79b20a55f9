use super::{LaurentPoly, QArithError};

/// Balanced quantum integer `[n] = v^(n-1) + v^(n-3) + ... + v^(1-n)`, with `[0] = 0`
/// and `[-n] = -[n]`.
pub fn q_int(n: i64) -> LaurentPoly {
    let m = n.abs();
    let sum = LaurentPoly::from_int_terms(&(0..m).map(|i| (m - 1 - 2 * i, 1)).collect::<Vec<_>>());
    if n < 0 {
        -sum
    } else {
        sum
    }
}

/// `[n]! = [n][n-1]...[1]`, `[0]! = 1`.
pub fn q_fact(n: i64) -> Result<LaurentPoly, QArithError> {
    if n < 0 {
        return Err(QArithError::NegativeFactorial(n));
    }
    Ok((1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &q_int(k)))
}

/// Quantum binomial `[n]! / ([k]! [n-k]!)`, zero outside `0 <= k <= n`.
pub fn q_binom(n: i64, k: i64) -> Result<LaurentPoly, QArithError> {
    if n < 0 {
        return Err(QArithError::NegativeFactorial(n));
    }
    if k < 0 || k > n {
        return Ok(LaurentPoly::zero());
    }
    let den = &q_fact(k)? * &q_fact(n - k)?;
    q_fact(n)?.div_exact(&den)
}
