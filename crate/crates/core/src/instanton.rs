//! Instanton characters on P³ and the monad wall.

use crate::chern::ChernCharacter;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::walls::enumerate;

fn check_charge(c: i64) -> Result<()> {
    if c < 1 {
        return Err(Error::Parameter(format!("instanton charge must be at least 1, got {c}")));
    }
    Ok(())
}

/// `(2, 0, −c, 0)`.
pub fn instanton_char(c: i64) -> Result<ChernCharacter> {
    check_charge(c)?;
    Ok(ChernCharacter::from_ints([2, 0, -c, 0]))
}

/// Character of `K[1]` for the monad kernel: `(−2−c, c, c/2, c/6)`.
pub fn kernel_char(c: i64) -> Result<ChernCharacter> {
    check_charge(c)?;
    Ok(ChernCharacter::from_fracs([(-2 - c, 1), (c, 1), (c, 2), (c, 6)]))
}

/// α² on the monad wall `(6s+1)α² = 1`.
pub fn monad_wall_alpha2(s: &Rational) -> Result<Rational> {
    if !s.is_positive() {
        return Err(Error::Parameter(format!("s must be positive, got {s}")));
    }
    Ok(Rational::one() / (s * 6 + 1))
}

/// Whether `kernel_char(c)` appears in the `w = 1/6` family for `(−2, 0, c, 0)`.
pub fn monad_crosscheck(c: i64) -> Result<bool> {
    let k = kernel_char(c)?;
    let sixth = Rational::new(1, 6);
    let families = enumerate(2, &Rational::from_integer(c))?;
    Ok(families
        .iter()
        .filter(|f| f.wall_constant == sixth)
        .any(|f| f.contains(&k)))
}

/// Compares 1-dimensional slopes `x/d ≤ S/D` for `A = (0,0,d,x)` and `E = (0,0,D,S)`.
pub fn gieseker_outer_check(a: &ChernCharacter, e: &ChernCharacter) -> Result<bool> {
    let one_dim = |v: &ChernCharacter| v.ch0.is_zero() && v.ch1.is_zero() && v.ch2.is_positive();
    if !one_dim(a) || !one_dim(e) {
        return Err(Error::Precondition(format!(
            "both {a} and {e} must have the shape (0, 0, d, x) with d > 0"
        )));
    }
    Ok(&a.ch3 / &a.ch2 <= &e.ch3 / &e.ch2)
}
