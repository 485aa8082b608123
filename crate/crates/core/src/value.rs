//! Overflow-checked Euler characteristic values.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reduced Euler characteristic. Arithmetic fails with
/// [`Error::Overflow`] instead of wrapping.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct EulerValue(pub i64);

impl EulerValue {
    pub const ZERO: EulerValue = EulerValue(0);

    pub fn get(self) -> i64 {
        self.0
    }

    pub fn checked_add(self, rhs: EulerValue) -> Result<EulerValue> {
        self.0
            .checked_add(rhs.0)
            .map(EulerValue)
            .ok_or(Error::Overflow)
    }

    pub fn checked_sub(self, rhs: EulerValue) -> Result<EulerValue> {
        self.0
            .checked_sub(rhs.0)
            .map(EulerValue)
            .ok_or(Error::Overflow)
    }

    pub fn checked_mul(self, rhs: EulerValue) -> Result<EulerValue> {
        self.0
            .checked_mul(rhs.0)
            .map(EulerValue)
            .ok_or(Error::Overflow)
    }

    pub fn checked_neg(self) -> Result<EulerValue> {
        self.0.checked_neg().map(EulerValue).ok_or(Error::Overflow)
    }
}

impl From<i64> for EulerValue {
    fn from(v: i64) -> Self {
        EulerValue(v)
    }
}

impl PartialEq<i64> for EulerValue {
    fn eq(&self, other: &i64) -> bool {
        self.0 == *other
    }
}

impl fmt::Display for EulerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_an_error() {
        let big = EulerValue(i64::MAX);
        assert!(matches!(
            big.checked_add(EulerValue(1)),
            Err(Error::Overflow)
        ));
        assert!(matches!(
            EulerValue(i64::MIN).checked_sub(EulerValue(1)),
            Err(Error::Overflow)
        ));
        assert!(matches!(
            big.checked_mul(EulerValue(2)),
            Err(Error::Overflow)
        ));
        assert!(matches!(
            EulerValue(i64::MIN).checked_neg(),
            Err(Error::Overflow)
        ));
        assert_eq!(EulerValue(3).checked_mul(EulerValue(-4)).unwrap(), -12);
    }
}
