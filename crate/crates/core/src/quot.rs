//! Betti numbers of the Quot scheme `Q(r, d)` from its torus-fixed-point
//! decomposition.
//!
//! Fixed components are indexed by *ordered* weak compositions
//! `m = (m_1, …, m_r)` of `d` (the literature calls them partitions, but the
//! order of the parts matters). The component over `m` is
//! `Sym^{m_1}X × … × Sym^{m_r}X`, its attracting cell is an affine bundle of
//! rank `d_m = Σ (i−1)·m_i`, and
//!
//! `b_i(Q(r,d)) = Σ_m b_{i − 2 d_m}(Sym^{m_1}X × … × Sym^{m_r}X)`.
//!
//! Note on [`cell_dimension`]: it returns `d + d_m` verbatim, which makes the
//! cell over `(d, 0, …, 0)` the *smallest* one (dimension `d`), while the
//! open cell of the rd-dimensional `Q(r,d)` has dimension `rd`, attained at
//! `(0, …, 0, d)`. The two descriptions correspond to opposite choices of
//! one-parameter subgroup; the Betti sum is the same for either.

use serde::{Deserialize, Serialize};

use crate::combi::binomial;
use crate::error::{Error, Result};
use crate::sym::sym_betti_sequence;

/// An ordered weak composition of `total` into `r` parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Precondition("a composition needs at least one part".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `d_m = Σ_i (i−1)·m_i`.
    pub fn shift(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, m)| i * m).sum()
    }
}

/// All weak compositions of `d` into `r` parts, in descending lexicographic
/// order: `(d,0,…,0)` first, `(0,…,0,d)` last.
pub fn compositions(r: usize, d: usize) -> Result<Vec<Composition>> {
    if r == 0 {
        return Err(Error::Precondition("compositions need r ≥ 1".into()));
    }
    fn go(slots: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(left);
            out.push(Composition { parts: cur.clone() });
            cur.pop();
            return;
        }
        for first in (0..=left).rev() {
            cur.push(first);
            go(slots - 1, left - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, d, &mut Vec::with_capacity(r), &mut out);
    Ok(out)
}

/// Dimension `d + d_m` of the attracting cell over the fixed component `m`.
pub fn cell_dimension(m: &Composition, d: usize) -> Result<usize> {
    if m.total() != d {
        return Err(Error::Precondition(format!(
            "composition {:?} sums to {}, not {d}",
            m.parts,
            m.total()
        )));
    }
    Ok(d + m.shift())
}

/// Betti numbers `b_0..b_{2·dim}` of a smooth projective variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincarePolynomial {
    pub dim: usize,
    pub betti: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn new(dim: usize, betti: Vec<u64>) -> Result<Self> {
        if betti.len() != 2 * dim + 1 {
            return Err(Error::Precondition(format!(
                "complex dimension {dim} needs {} Betti numbers, got {}",
                2 * dim + 1,
                betti.len()
            )));
        }
        Ok(PoincarePolynomial { dim, betti })
    }

    pub fn is_palindromic(&self) -> bool {
        self.betti.iter().eq(self.betti.iter().rev())
    }

    pub fn euler_characteristic(&self) -> i128 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i128 } else { -(b as i128) })
            .sum()
    }

    /// Product polynomial (Künneth over torsion-free factors).
    pub fn product(&self, other: &PoincarePolynomial) -> Result<PoincarePolynomial> {
        let betti = convolve(&self.betti, &other.betti)?;
        PoincarePolynomial::new(self.dim + other.dim, betti)
    }
}

fn convolve(a: &[u64], b: &[u64]) -> Result<Vec<u64>> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = x
                .checked_mul(y)
                .and_then(|p| out[i + j].checked_add(p))
                .ok_or_else(|| Error::Overflow("Künneth convolution".into()))?;
        }
    }
    Ok(out)
}

/// Poincaré sequence of `Sym^{m_1}X × … × Sym^{m_r}X`.
pub fn fixed_component_betti(genus: u32, m: &Composition) -> Result<Vec<u64>> {
    m.parts
        .iter()
        .try_fold(vec![1u64], |acc, &mi| convolve(&acc, &sym_betti_sequence(genus, mi)?))
}

pub fn poincare_quot(genus: u32, r: usize, d: usize) -> Result<PoincarePolynomial> {
    let comps = compositions(r, d)?;
    let dim = r * d;
    let mut betti = vec![0u64; 2 * dim + 1];
    for m in &comps {
        let offset = 2 * m.shift();
        for (j, b) in fixed_component_betti(genus, m)?.into_iter().enumerate() {
            let slot = &mut betti[j + offset];
            *slot = slot
                .checked_add(b)
                .ok_or_else(|| Error::Overflow("Quot Betti number".into()))?;
        }
    }
    PoincarePolynomial::new(dim, betti)
}

/// `b_i(Q(r, d))`.
pub fn betti_quot(genus: u32, r: usize, d: usize, i: usize) -> Result<u64> {
    if i > 2 * r * d {
        return Err(Error::IndexOutOfRange {
            what: "i",
            value: i,
            min: 0,
            max: 2 * r * d,
        });
    }
    Ok(poincare_quot(genus, r, d)?.betti[i])
}

/// Labels of the standard `H^2(Q(r,d))` basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum H2BasisLabel {
    /// Restriction of `c_1` of the universal subsheaf to a point of `X`.
    C,
    /// Slant of `c_2` of the universal subsheaf with `[X]`.
    Gamma2,
    /// `η`, used in place of `C` when `r = 1`.
    Eta,
    /// `ᾱ_i ∪ ᾱ_j` with `1 ≤ i < j ≤ 2g`.
    AlphaPair { i: u16, j: u16 },
}

pub fn h2_basis_labels(genus: u32, r: usize, d: usize) -> Result<Vec<H2BasisLabel>> {
    if d < 2 || r < 1 {
        return Err(Error::Precondition(format!(
            "H^2 basis labels need d ≥ 2 and r ≥ 1, got r = {r}, d = {d}"
        )));
    }
    let mut out = if r == 1 {
        vec![H2BasisLabel::Eta]
    } else {
        vec![H2BasisLabel::C, H2BasisLabel::Gamma2]
    };
    let n = (2 * genus) as u16;
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(H2BasisLabel::AlphaPair { i, j });
        }
    }
    debug_assert_eq!(
        out.len() as u64,
        binomial(2 * genus as u64, 2).unwrap_or(0) + if r == 1 { 1 } else { 2 }
    );
    Ok(out)
}
