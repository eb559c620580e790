//! Brauer-group rank bookkeeping for `Pic^d X`, `Sym^d X` and `Q(r, d)`.
//!
//! For each of these spaces `H^3(·; Z)` is torsion-free, so the cohomological
//! Brauer group is `(H^2/NS) ⊗ Q/Z ≅ (Q/Z)^{b_2 − ρ}`. The Néron–Severi rank
//! `ρ` of `Pic^d X` is an input; the other two follow from it:
//! `NS(Sym^d X)` adds the class `η`, and `NS(Q(r, d))` adds `γ_2` on top of
//! the pullback of `NS(Sym^d X)`.
//!
//! The comparison maps on `H^2` that carry Néron–Severi groups onto each
//! other are computed from the cohomology ring rather than assumed:
//! `f_d : Sym^d X → Sym^{d+1} X`, `D ↦ D + x_0`, and the iterate
//! `D ↦ D + r·x_0` both pull back to the identity in the `η, λ_iλ_j` basis.

use std::fmt;

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::class::{coordinate_rows, CohomClass};
use crate::combi::binomial;
use crate::error::{Error, Result};
use crate::linalg::solve_in_basis;
use crate::quot::betti_quot;
use crate::sym::{betti_sym_closed, macdonald_generators};

/// `(Q/Z)^free_rank`, extended by a finite group of order `torsion_order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BrauerShape {
    pub free_rank: u64,
    pub torsion_order: u64,
}

impl BrauerShape {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_order == 1
    }
}

impl fmt::Display for BrauerShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.free_rank, self.torsion_order) {
            (0, 1) => f.write_str("0"),
            (k, 1) => write!(f, "(Q/Z)^{k}"),
            (0, t) => write!(f, "finite of order {t}"),
            (k, t) => write!(f, "(Q/Z)^{k} by finite of order {t}"),
        }
    }
}

pub fn brauer_shape(b2: u64, ns_rank: u64, h3_torsion_order: u64) -> Result<BrauerShape> {
    if ns_rank > b2 {
        return Err(Error::Precondition(format!(
            "Néron–Severi rank {ns_rank} exceeds b_2 = {b2}"
        )));
    }
    if h3_torsion_order == 0 {
        return Err(Error::Precondition("torsion order must be at least 1".into()));
    }
    Ok(BrauerShape {
        free_rank: b2 - ns_rank,
        torsion_order: h3_torsion_order,
    })
}

/// Néron–Severi ranks derived from the Picard number `ρ` of `Pic^d X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NsModel {
    pub genus: u32,
    pub rho_pic: u64,
}

impl NsModel {
    /// Valid range: `1 ≤ ρ ≤ g²` for `g ≥ 1`; for `g = 0`, `Pic^d X` is a point
    /// and `ρ = 0`.
    pub fn new(genus: u32, rho_pic: u64) -> Result<Self> {
        let max = u64::from(genus) * u64::from(genus);
        let min = u64::from(genus > 0);
        if rho_pic < min || rho_pic > max {
            return Err(Error::IndexOutOfRange {
                what: "rho",
                value: rho_pic as usize,
                min: min as usize,
                max: max as usize,
            });
        }
        Ok(NsModel { genus, rho_pic })
    }

    pub fn ns_sym(&self) -> u64 {
        self.rho_pic + 1
    }

    pub fn ns_quot(&self) -> u64 {
        self.rho_pic + 2
    }
}

/// Label of the standard basis of `H^2(Sym^d X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum SymH2Label {
    Eta,
    /// `λ_i ∪ λ_j` with `i < j`.
    LambdaPair {
        i: u16,
        j: u16,
    },
}

impl fmt::Display for SymH2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymH2Label::Eta => f.write_str("eta"),
            SymH2Label::LambdaPair { i, j } => write!(f, "l{i}.l{j}"),
        }
    }
}

/// The labelled basis `η, λ_iλ_j (i < j)` of `H^2(Sym^d X)`, realised on `X^d`.
pub fn sym_h2_basis(genus: u32, d: usize) -> Result<Vec<(SymH2Label, CohomClass)>> {
    let (lambdas, eta) = macdonald_generators(genus, d)?;
    let mut out = vec![(SymH2Label::Eta, eta)];
    for (a, la) in lambdas.iter().enumerate() {
        for (b, lb) in lambdas.iter().enumerate().skip(a + 1) {
            out.push((
                SymH2Label::LambdaPair {
                    i: a as u16 + 1,
                    j: b as u16 + 1,
                },
                la.cup(lb)?,
            ));
        }
    }
    Ok(out)
}

/// Matrix of a pullback `H^2(Sym^{m} X) → H^2(Sym^d X)` in the labelled bases:
/// `entries[a][b]` is the coefficient of target basis vector `b` in the image
/// of source basis vector `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackMatrix {
    pub labels: Vec<SymH2Label>,
    pub entries: Vec<Vec<i64>>,
}

impl PullbackMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(a, row)| row.iter().enumerate().all(|(b, &v)| v == i64::from(a == b)))
    }
}

/// Pullback along `D ↦ D + steps·x_0`, computed by restricting the last
/// `steps` factors of `X^{d+steps}` to the base point.
fn restriction_matrix(genus: u32, d: usize, steps: usize) -> Result<PullbackMatrix> {
    if d == 0 {
        return Err(Error::Precondition("pullback matrices need d ≥ 1".into()));
    }
    let source = sym_h2_basis(genus, d + steps)?;
    let target = sym_h2_basis(genus, d)?;
    let images = source
        .iter()
        .map(|(_, c)| (0..steps).try_fold(c.clone(), |acc, _| acc.point_restrict(acc.factors())))
        .collect::<Result<Vec<_>>>()?;
    let mut all: Vec<CohomClass> = target.iter().map(|(_, c)| c.clone()).collect();
    all.extend(images);
    let (_, rows) = coordinate_rows(&all);
    let (basis_rows, image_rows) = rows.split_at(target.len());
    let solved = solve_in_basis(basis_rows, image_rows).ok_or_else(|| {
        Error::ChangeOfBasis(format!(
            "restricted classes are not uniquely expressible in the H^2 basis of X^{d} (genus {genus})"
        ))
    })?;
    let entries = solved
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|q| {
                    if !q.denom().is_one() {
                        return Err(Error::ChangeOfBasis(format!("non-integral coefficient {q}")));
                    }
                    q.numer()
                        .to_i64()
                        .ok_or_else(|| Error::Overflow(format!("coefficient {q}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PullbackMatrix {
        labels: source.into_iter().map(|(l, _)| l).collect(),
        entries,
    })
}

/// `f_d^*: H^2(Sym^{d+1} X) → H^2(Sym^d X)` for `f_d(D) = D + x_0`.
///
/// Fails with [`Error::ChangeOfBasis`] when the target labels are not a
/// basis, which happens for `d = 1` and `g ≥ 1` (there `λ_iλ_j` is a
/// multiple of `η`).
pub fn f_d_pullback_matrix(genus: u32, d: usize) -> Result<PullbackMatrix> {
    restriction_matrix(genus, d, 1)
}

/// `h^*` for `h(D) = D + r·x_0`, `Sym^d X → Sym^{d+r} X`.
pub fn shift_pullback_matrix(genus: u32, d: usize, r: usize) -> Result<PullbackMatrix> {
    restriction_matrix(genus, d, r)
}

/// The three Brauer shapes for `Pic^d X`, `Sym^d X` and `Q(r, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerRanksReport {
    pub rank_pic: u64,
    pub rank_sym: u64,
    pub rank_quot: u64,
    pub pass: bool,
    pub rho: u64,
}

fn check_rd(r: usize, d: usize) -> Result<()> {
    if d < 2 || r < 2 {
        return Err(Error::Precondition(format!(
            "the comparison needs r ≥ 2 and d ≥ 2, got r = {r}, d = {d}"
        )));
    }
    Ok(())
}

fn quot_shape(genus: u32, r: usize, d: usize, ns: &NsModel) -> Result<BrauerShape> {
    brauer_shape(betti_quot(genus, r, d, 2)?, ns.ns_quot(), 1)
}

/// Computes all three shapes and checks that they agree, with common free
/// rank `C(2g, 2) − ρ`.
pub fn verify_brauer_ranks(genus: u32, r: usize, d: usize, rho: u64) -> Result<BrauerRanksReport> {
    check_rd(r, d)?;
    let ns = NsModel::new(genus, rho)?;
    let wedge = binomial(2 * u64::from(genus), 2)?;
    let pic = brauer_shape(wedge, ns.rho_pic, 1)?;
    let sym = brauer_shape(betti_sym_closed(genus, d, 2)?, ns.ns_sym(), 1)?;
    let quot = quot_shape(genus, r, d, &ns)?;
    let pass = pic == sym && sym == quot && pic.free_rank == wedge - rho;
    Ok(BrauerRanksReport {
        rank_pic: pic.free_rank,
        rank_sym: sym.free_rank,
        rank_quot: quot.free_rank,
        pass,
        rho,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftReport {
    pub size: usize,
    pub pullback_is_identity: bool,
    pub rank_quot_d: u64,
    pub rank_quot_d_plus_r: u64,
    pub pass: bool,
}

/// Checks that `D ↦ D + r·x_0` pulls back to the identity on `H^2` and that
/// `Q(r, d)` and `Q(r, d + r)` have the same Brauer shape.
pub fn verify_shift_square(genus: u32, r: usize, d: usize, rho: u64) -> Result<ShiftReport> {
    check_rd(r, d)?;
    let ns = NsModel::new(genus, rho)?;
    let matrix = shift_pullback_matrix(genus, d, r)?;
    let small = quot_shape(genus, r, d, &ns)?;
    let large = quot_shape(genus, r, d + r, &ns)?;
    let identity = matrix.is_identity();
    Ok(ShiftReport {
        size: matrix.size(),
        pullback_is_identity: identity,
        rank_quot_d: small.free_rank,
        rank_quot_d_plus_r: large.free_rank,
        pass: identity && small == large,
    })
}
