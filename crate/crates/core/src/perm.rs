use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation of `n` tensor slots, stored 0-based as the image of each slot.
///
/// Acting on a monomial, the letter at slot `p` moves to slot `self.image(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// 1-based constructor, matching slot numbering in the rest of the crate.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Precondition("slot 0 in a 1-based permutation".into()));
        }
        Self::new(images.iter().map(|&i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Transposition of 0-based slots `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::Precondition(format!("transposition ({a} {b}) outside 0..{n}")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, slot: usize) -> usize {
        self.images[slot]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    /// All `n!` permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(|images| Permutation { images })
    }
}
