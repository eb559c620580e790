//! The cohomology ring of a single curve: letters `1`, `α_1..α_{2g}`, `ω`
//! with the standard symplectic intersection form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Genus of the curve together with its symplectic basis of `H^1`.
///
/// `α_i ∪ α_{i+g} = ω` for `i ≤ g`; all other products of degree-one
/// classes vanish except the antisymmetric partners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenusContext {
    genus: u32,
}

impl GenusContext {
    pub fn new(genus: u32) -> Self {
        GenusContext { genus }
    }

    pub fn genus(self) -> u32 {
        self.genus
    }

    /// Number of degree-one basis classes, `2g`.
    pub fn h1_rank(self) -> u16 {
        (2 * self.genus) as u16
    }

    /// `∫_X α_i ∪ α_j`, for `1 ≤ i, j ≤ 2g`.
    pub fn pairing(self, i: u16, j: u16) -> i32 {
        let g = self.genus as u16;
        if i <= g && j == i + g {
            1
        } else if j <= g && i == j + g {
            -1
        } else {
            0
        }
    }

    /// Symplectic partner `α̃_i` as `(sign, index)` with `α_i ∪ sign·α_index = ω`.
    pub fn partner(self, i: u16) -> (i32, u16) {
        let g = self.genus as u16;
        if i <= g {
            (1, i + g)
        } else {
            (-1, i - g)
        }
    }

    /// All letters of `H^*(X)` in canonical order.
    pub fn letters(self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(2 * self.genus as usize + 2);
        out.push(Letter::Unit);
        out.extend((1..=self.h1_rank()).map(Letter::Alpha));
        out.push(Letter::Omega);
        out
    }

    pub fn check_letter(self, letter: Letter) -> Result<()> {
        if let Letter::Alpha(i) = letter {
            if i == 0 || i > self.h1_rank() {
                return Err(Error::IndexOutOfRange {
                    what: "alpha index",
                    value: i as usize,
                    min: 1,
                    max: self.h1_rank() as usize,
                });
            }
        }
        Ok(())
    }

    /// Product of two letters in `H^*(X)`: `Some((coeff, letter))` or `None` if zero.
    pub fn multiply(self, a: Letter, b: Letter) -> Option<(i32, Letter)> {
        match (a, b) {
            (Letter::Unit, x) | (x, Letter::Unit) => Some((1, x)),
            (Letter::Omega, _) | (_, Letter::Omega) => None,
            (Letter::Alpha(i), Letter::Alpha(j)) => match self.pairing(i, j) {
                0 => None,
                s => Some((s, Letter::Omega)),
            },
        }
    }
}

/// A basis element of `H^*(X; Z)`.
///
/// The derived order `Unit < Alpha(1) < … < Alpha(2g) < Omega` is the
/// canonical monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Unit,
    Alpha(u16),
    Omega,
}

impl Letter {
    pub fn degree(self) -> u32 {
        match self {
            Letter::Unit => 0,
            Letter::Alpha(_) => 1,
            Letter::Omega => 2,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Letter::Alpha(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Unit => f.write_str("1"),
            Letter::Alpha(i) => write!(f, "a{i}"),
            Letter::Omega => f.write_str("w"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(Letter::Unit),
            "w" => Ok(Letter::Omega),
            _ => s
                .strip_prefix('a')
                .and_then(|rest| rest.parse::<u16>().ok())
                .filter(|&i| i >= 1)
                .map(Letter::Alpha)
                .ok_or_else(|| Error::Precondition(format!("unrecognised letter {s:?}"))),
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
