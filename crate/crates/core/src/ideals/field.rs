use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{factor, is_prime, kronecker};
use crate::error::{Error, Result};

/// `Q(√d)` for squarefree `d ∉ {0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticField {
    d: i64,
    discriminant: i64,
}

impl QuadraticField {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::InvalidField(d));
        }
        if !factor(d.unsigned_abs())?.is_squarefree() {
            return Err(Error::InvalidField(d));
        }
        let discriminant = if d.rem_euclid(4) == 1 {
            d
        } else {
            d.checked_mul(4).ok_or(Error::InvalidField(d))?
        };
        Ok(Self { d, discriminant })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `Δ_K`: `d` when `d ≡ 1 (mod 4)`, otherwise `4d`.
    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    pub fn degree(&self) -> u32 {
        2
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

pub fn make_field(d: i64) -> Result<QuadraticField> {
    QuadraticField::new(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RamificationKind {
    Split,
    Inert,
    Ramified,
}

impl fmt::Display for RamificationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Split => "split",
            Self::Inert => "inert",
            Self::Ramified => "ramified",
        })
    }
}

/// Decomposition type of a rational prime: `pO_K = (P_1 ⋯ P_g)^e`, each `P_i`
/// of residue degree `f`, with `efg = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RamificationData {
    pub kind: RamificationKind,
    pub e: u32,
    pub f: u32,
    pub g: u32,
}

impl From<RamificationKind> for RamificationData {
    fn from(kind: RamificationKind) -> Self {
        let (e, f, g) = match kind {
            RamificationKind::Split => (1, 1, 2),
            RamificationKind::Inert => (1, 2, 1),
            RamificationKind::Ramified => (2, 1, 1),
        };
        Self { kind, e, f, g }
    }
}

/// Splitting of `p` in `O_K`: the Kronecker symbol `(Δ_K | p)` for odd `p`,
/// `d mod 8` for `p = 2`.
pub fn ramification(field: &QuadraticField, p: u64) -> Result<RamificationData> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let kind = if p == 2 {
        match field.d.rem_euclid(8) {
            1 => RamificationKind::Split,
            5 => RamificationKind::Inert,
            _ => RamificationKind::Ramified,
        }
    } else {
        match kronecker(field.discriminant, p) {
            1 => RamificationKind::Split,
            -1 => RamificationKind::Inert,
            _ => RamificationKind::Ramified,
        }
    };
    Ok(kind.into())
}
