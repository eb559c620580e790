//! The universal divisor of `Sym^d X`, pulled back to `X^{d+1}`.
//!
//! `D^univ ⊂ Sym^d X × X` pulls back under `q_d × id` to the union of the
//! diagonals `{x_k = x_{d+1}}`, so its class is `Σ_k Δ_{k,d+1}`. This module
//! builds that class, tabulates its pairings against a dual basis of
//! `H^2(X^{d+1})`, and checks the closed formula
//!
//! `[D^univ] = η⊗1 + d·(1⊗ω) + Σ_{i≤g} λ_i⊗α_{i+g} − Σ_{i>g} λ_i⊗α_{i−g}`
//!
//! together with its two corollaries: restricting to a point of the second
//! factor gives `η`, and slanting with the Poincaré dual cycle of `α_i`
//! gives `λ_i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::class::{diagonal_class, CohomClass, CurveCycle, JsonInt, TensorMonomial};
use crate::error::{Error, Result};
use crate::genus::{GenusContext, Letter};
use crate::perm::Permutation;
use crate::sym::macdonald_generators;

fn check_d(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::Precondition("the universal divisor needs d ≥ 1".into()));
    }
    Ok(())
}

/// `(q_d × id)^*[D^univ] = Σ_{k=1}^d Δ_{k,d+1}` on `X^{d+1}`.
pub fn universal_divisor_pullback(genus: u32, d: usize) -> Result<CohomClass> {
    check_d(d)?;
    let ctx = GenusContext::new(genus);
    let diagonals = (1..=d)
        .map(|k| diagonal_class(ctx, d + 1, k, d + 1))
        .collect::<Result<Vec<_>>>()?;
    CohomClass::sum(ctx, d + 1, &diagonals)
}

/// Label of a Künneth basis vector of `H^2(X^n)`.
///
/// The basis is `η^j` (`1 ≤ j ≤ n`) together with `λ_i^j ∪ λ_{i'}^{j'}` for
/// `j < j'` and *all* `1 ≤ i, i' ≤ 2g`. Pairs with `j = j'` are not needed:
/// they are multiples of `η^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegreeTwoLabel {
    Eta { j: usize },
    LambdaPair { i: u16, j: usize, i2: u16, j2: usize },
}

impl fmt::Display for DegreeTwoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DegreeTwoLabel::Eta { j } => write!(f, "eta{j}"),
            DegreeTwoLabel::LambdaPair { i, j, i2, j2 } => write!(f, "l{i}_{j}.l{i2}_{j2}"),
        }
    }
}

impl FromStr for DegreeTwoLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("unrecognised degree-two label {s:?}"));
        if let Some(j) = s.strip_prefix("eta") {
            return Ok(DegreeTwoLabel::Eta {
                j: j.parse().map_err(|_| bad())?,
            });
        }
        let (a, b) = s.split_once('.').ok_or_else(bad)?;
        let parse = |part: &str| -> Result<(u16, usize)> {
            let (i, j) = part.strip_prefix('l').and_then(|p| p.split_once('_')).ok_or_else(bad)?;
            Ok((i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?))
        };
        let (i, j) = parse(a)?;
        let (i2, j2) = parse(b)?;
        Ok(DegreeTwoLabel::LambdaPair { i, j, i2, j2 })
    }
}

impl Serialize for DegreeTwoLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DegreeTwoLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// All degree-two basis labels on `X^n`: the `η^j` first, then the
/// `λλ` pairs ordered by `(j, j', i, i')`.
pub fn degree_two_labels(genus: u32, n: usize) -> Vec<DegreeTwoLabel> {
    let h1 = GenusContext::new(genus).h1_rank();
    let mut out: Vec<_> = (1..=n).map(|j| DegreeTwoLabel::Eta { j }).collect();
    for j in 1..=n {
        for j2 in j + 1..=n {
            for i in 1..=h1 {
                for i2 in 1..=h1 {
                    out.push(DegreeTwoLabel::LambdaPair { i, j, i2, j2 });
                }
            }
        }
    }
    out
}

fn check_label(ctx: GenusContext, n: usize, label: DegreeTwoLabel) -> Result<()> {
    match label {
        DegreeTwoLabel::Eta { j } => crate::error::check_range("j", j, 1, n),
        DegreeTwoLabel::LambdaPair { i, j, i2, j2 } => {
            ctx.check_letter(Letter::Alpha(i))?;
            ctx.check_letter(Letter::Alpha(i2))?;
            crate::error::check_range("j", j, 1, n)?;
            crate::error::check_range("j'", j2, 1, n)?;
            if j >= j2 {
                return Err(Error::Precondition(format!("label {label} needs j < j'")));
            }
            Ok(())
        }
    }
}

/// The basis class named by `label`.
pub fn basis_class(ctx: GenusContext, n: usize, label: DegreeTwoLabel) -> Result<CohomClass> {
    check_label(ctx, n, label)?;
    match label {
        DegreeTwoLabel::Eta { j } => CohomClass::eta(ctx, n, j),
        DegreeTwoLabel::LambdaPair { i, j, i2, j2 } => {
            CohomClass::lambda(ctx, n, i, j)?.cup(&CohomClass::lambda(ctx, n, i2, j2)?)
        }
    }
}

/// `α̃_i` as a signed letter: `α_i ∪ α̃_i = ω`.
fn tilde(ctx: GenusContext, i: u16) -> (i32, Letter) {
    let (sign, idx) = ctx.partner(i);
    (sign, Letter::Alpha(idx))
}

/// `∫_X α̃_a ∪ α̃_b`.
pub fn tilde_pairing(ctx: GenusContext, a: u16, b: u16) -> i32 {
    let (sa, la) = tilde(ctx, a);
    let (sb, lb) = tilde(ctx, b);
    match ctx.multiply(la, lb) {
        Some((s, Letter::Omega)) => sa * sb * s,
        _ => 0,
    }
}

/// The declared dual class `β^∨` of a basis label:
/// `η^{j∨} = ω⊗…⊗1_{(j)}⊗…⊗ω` and
/// `(λ_i^j ∪ λ_{i'}^{j'})^∨ = ω⊗…⊗α̃_i{}_{(j)}⊗…⊗α̃_{i'}{}_{(j')}⊗…⊗ω`.
///
/// Contract: `∫ β ∪ γ^∨ = δ_{βγ}` over the whole basis (see [`dual_contract`]).
pub fn declared_dual(ctx: GenusContext, n: usize, label: DegreeTwoLabel) -> Result<CohomClass> {
    check_label(ctx, n, label)?;
    let mut letters = vec![Letter::Omega; n];
    let mut coeff = 1;
    match label {
        DegreeTwoLabel::Eta { j } => letters[j - 1] = Letter::Unit,
        DegreeTwoLabel::LambdaPair { i, j, i2, j2 } => {
            let (s1, l1) = tilde(ctx, i);
            let (s2, l2) = tilde(ctx, i2);
            letters[j - 1] = l1;
            letters[j2 - 1] = l2;
            coeff = s1 * s2;
        }
    }
    CohomClass::monomial(ctx, letters, coeff)
}

/// Outcome of checking `∫ β ∪ γ^∨ = δ_{βγ}` over the degree-two basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualContractReport {
    pub genus: u32,
    pub n: usize,
    pub size: usize,
    /// `(β, γ, ∫ β ∪ γ^∨)` for every entry that differs from `δ_{βγ}`.
    pub mismatches: Vec<(DegreeTwoLabel, DegreeTwoLabel, i64)>,
    pub pass: bool,
}

pub fn dual_contract(genus: u32, n: usize) -> Result<DualContractReport> {
    let ctx = GenusContext::new(genus);
    let labels = degree_two_labels(genus, n);
    let basis = labels
        .iter()
        .map(|&l| basis_class(ctx, n, l))
        .collect::<Result<Vec<_>>>()?;
    let duals = labels
        .iter()
        .map(|&l| declared_dual(ctx, n, l))
        .collect::<Result<Vec<_>>>()?;
    let mut mismatches = Vec::new();
    for (a, beta) in labels.iter().zip(&basis) {
        for (b, dual) in labels.iter().zip(&duals) {
            let v = small(beta.cup(dual)?.integrate())?;
            if v != i64::from(a == b) {
                mismatches.push((*a, *b, v));
            }
        }
    }
    Ok(DualContractReport {
        genus,
        n,
        size: labels.len(),
        pass: mismatches.is_empty(),
        mismatches,
    })
}

fn small(v: BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::Overflow(format!("integral {v} does not fit in i64")))
}

/// `∫_{D_k} β^∨` for `k = 1..d` and `β` over the degree-two basis of
/// `X^{d+1}`, where `D_k = {x_k = x_{d+1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingTable {
    pub genus: u32,
    pub d: usize,
    /// Column `c` holds pairings against the dual of `columns[c]`.
    pub columns: Vec<DegreeTwoLabel>,
    /// `entries[k-1][c]`.
    pub entries: Vec<Vec<i64>>,
}

impl PairingTable {
    pub fn entry(&self, k: usize, label: DegreeTwoLabel) -> Option<i64> {
        let c = self.columns.iter().position(|&l| l == label)?;
        self.entries.get(k.checked_sub(1)?).map(|row| row[c])
    }

    /// What the case analysis predicts for row `k`, column `label`:
    /// `η^{j∨}` pairs to 1 iff `j ∈ {k, d+1}`; a `λλ` dual pairs to
    /// `∫_X α̃_{i'} ∪ α̃_i` when `(j, j') = (k, d+1)` and to 0 otherwise.
    pub fn predicted(&self, k: usize, label: DegreeTwoLabel) -> i64 {
        let ctx = GenusContext::new(self.genus);
        match label {
            DegreeTwoLabel::Eta { j } => i64::from(j == k || j == self.d + 1),
            DegreeTwoLabel::LambdaPair { i, j, i2, j2 } => {
                if j == k && j2 == self.d + 1 {
                    i64::from(tilde_pairing(ctx, i2, i))
                } else {
                    0
                }
            }
        }
    }

    /// Every `(k, label, actual, predicted)` where the table departs from the
    /// case analysis. Exhaustive over all entries.
    pub fn case_analysis_mismatches(&self) -> Vec<(usize, DegreeTwoLabel, i64, i64)> {
        let mut out = Vec::new();
        for (row, values) in self.entries.iter().enumerate() {
            let k = row + 1;
            for (&label, &v) in self.columns.iter().zip(values) {
                let p = self.predicted(k, label);
                if v != p || !(-1..=1).contains(&v) {
                    out.push((k, label, v, p));
                }
            }
        }
        out
    }

    /// `Σ_β entry(k, β)·β`, which equals `Δ_{k,d+1}` by duality.
    pub fn reconstruct_row(&self, k: usize) -> Result<CohomClass> {
        crate::error::check_range("k", k, 1, self.d)?;
        let ctx = GenusContext::new(self.genus);
        let n = self.d + 1;
        let mut acc = CohomClass::zero(ctx, n);
        for (&label, &v) in self.columns.iter().zip(&self.entries[k - 1]) {
            if v != 0 {
                acc = acc.add(&basis_class(ctx, n, label)?.scale(&BigInt::from(v)))?;
            }
        }
        Ok(acc)
    }

    /// CSV with header `k,<label>,…` and one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k");
        for c in &self.columns {
            out.push(',');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        for (row, values) in self.entries.iter().enumerate() {
            out.push_str(&(row + 1).to_string());
            for v in values {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Rows are independent and computed on scoped threads.
pub fn pairing_table(genus: u32, d: usize) -> Result<PairingTable> {
    check_d(d)?;
    let ctx = GenusContext::new(genus);
    let n = d + 1;
    let columns = degree_two_labels(genus, n);
    let duals = columns
        .iter()
        .map(|&l| declared_dual(ctx, n, l))
        .collect::<Result<Vec<_>>>()?;
    let row = |k: usize| -> Result<Vec<i64>> {
        duals
            .iter()
            .map(|dual| small(dual.insertion_pullback(k)?.integrate()))
            .collect()
    };
    let entries = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=d).map(|k| s.spawn(move || row(k))).collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(Error::Internal("pairing row worker panicked".into())))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(PairingTable {
        genus,
        d,
        columns,
        entries,
    })
}

/// A monomial whose coefficient differs between two sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDiscrepancy {
    pub letters: Vec<Letter>,
    pub expected: JsonInt,
    pub actual: JsonInt,
}

fn discrepancies(expected: &CohomClass, actual: &CohomClass) -> Result<Vec<TermDiscrepancy>> {
    let diff = actual.sub(expected)?;
    Ok(diff
        .terms()
        .map(|(m, _)| TermDiscrepancy {
            letters: m.letters().to_vec(),
            expected: JsonInt(expected.coefficient(m)),
            actual: JsonInt(actual.coefficient(m)),
        })
        .collect())
}

/// The closed formula with an arbitrary coefficient `n` on `1⊗ω`, expanded
/// through `q_d^* ⊗ id` into monomials on `X^{d+1}`.
pub fn closed_formula(genus: u32, d: usize, n: i64) -> Result<CohomClass> {
    check_d(d)?;
    let ctx = GenusContext::new(genus);
    let g = genus as u16;
    let mut terms: Vec<(Vec<Letter>, BigInt)> = Vec::new();
    let at = |pairs: &[(usize, Letter)]| {
        let mut letters = vec![Letter::Unit; d + 1];
        for &(slot, l) in pairs {
            letters[slot - 1] = l;
        }
        letters
    };
    for j in 1..=d {
        terms.push((at(&[(j, Letter::Omega)]), BigInt::from(1)));
    }
    terms.push((at(&[(d + 1, Letter::Omega)]), BigInt::from(n)));
    for i in 1..=ctx.h1_rank() {
        let (partner, sign) = if i <= g { (i + g, 1) } else { (i - g, -1) };
        for j in 1..=d {
            terms.push((
                at(&[(j, Letter::Alpha(i)), (d + 1, Letter::Alpha(partner))]),
                BigInt::from(sign),
            ));
        }
    }
    CohomClass::from_terms(ctx, d + 1, terms)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormulaReport {
    pub genus: u32,
    pub d: usize,
    /// The coefficient tried on `1⊗ω`.
    pub n: i64,
    /// The coefficient of `1⊗…⊗1⊗ω` in the actual class: the only `n` that can work.
    pub forced_n: JsonInt,
    pub discrepancies: Vec<TermDiscrepancy>,
    pub pass: bool,
}

/// Compares [`closed_formula`] with coefficient `n` against the pullback.
pub fn verify_closed_formula(genus: u32, d: usize, n: i64) -> Result<ClosedFormulaReport> {
    let actual = universal_divisor_pullback(genus, d)?;
    let expected = closed_formula(genus, d, n)?;
    let mut point_slot = vec![Letter::Unit; d + 1];
    point_slot[d] = Letter::Omega;
    let forced_n = actual.coefficient(&TensorMonomial::new(point_slot));
    let discrepancies = discrepancies(&expected, &actual)?;
    Ok(ClosedFormulaReport {
        genus,
        d,
        n,
        forced_n: JsonInt(forced_n),
        pass: discrepancies.is_empty(),
        discrepancies,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlantCheck {
    pub i: u16,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesReport {
    pub genus: u32,
    pub d: usize,
    /// Restriction to `Sym^d X × {x}` equals `η`.
    pub restriction: bool,
    /// Slant with `α_i^∨` equals `λ_i`, one entry per `i` (empty for `g = 0`).
    pub slants: Vec<SlantCheck>,
    pub pass: bool,
}

pub fn verify_divisor_classes(genus: u32, d: usize) -> Result<ClassesReport> {
    let ctx = GenusContext::new(genus);
    let u = universal_divisor_pullback(genus, d)?;
    let (lambdas, eta) = macdonald_generators(genus, d)?;
    let restriction = u.point_restrict(d + 1)? == eta;
    let slants = (1..=ctx.h1_rank())
        .zip(&lambdas)
        .map(|(i, lambda)| {
            let cycle = CurveCycle::poincare_dual(ctx, Letter::Alpha(i));
            Ok(SlantCheck {
                i,
                pass: &u.slant_last(&cycle)? == lambda,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = restriction && slants.iter().all(|s| s.pass);
    Ok(ClassesReport {
        genus,
        d,
        restriction,
        slants,
        pass,
    })
}

/// Invariance of the pullback under every permutation of the first `d` slots.
pub fn is_symmetric_in_first_factors(c: &CohomClass) -> Result<bool> {
    let n = c.factors();
    if n == 0 {
        return Ok(true);
    }
    let d = n - 1;
    for a in 0..d.saturating_sub(1) {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, a + 1);
        if &c.permute(&Permutation::new(images)?)? != c {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{Alpha as A, Omega as W, Unit as U};

    fn ctx(g: u32) -> GenusContext {
        GenusContext::new(g)
    }

    #[test]
    fn pullback_examples() {
        let u = universal_divisor_pullback(0, 1).unwrap();
        let expected = CohomClass::from_terms(ctx(0), 2, [(vec![W, U], 1), (vec![U, W], 1)]).unwrap();
        assert_eq!(u, expected);

        let u = universal_divisor_pullback(1, 2).unwrap();
        let expected = CohomClass::from_terms(
            ctx(1),
            3,
            [
                (vec![W, U, U], 1),
                (vec![U, W, U], 1),
                (vec![U, U, W], 2),
                (vec![A(1), U, A(2)], 1),
                (vec![U, A(1), A(2)], 1),
                (vec![A(2), U, A(1)], -1),
                (vec![U, A(2), A(1)], -1),
            ],
        )
        .unwrap();
        assert_eq!(u, expected);
        assert!(universal_divisor_pullback(1, 0).is_err());
    }

    #[test]
    fn pullback_is_symmetric_and_pins_n() {
        for g in 0..=2 {
            for d in 1..=4 {
                let u = universal_divisor_pullback(g, d).unwrap();
                assert_eq!(u.homogeneous_degree(), Some(2));
                assert!(is_symmetric_in_first_factors(&u).unwrap());
                let mut letters = vec![U; d + 1];
                letters[d] = W;
                assert_eq!(u.coefficient(&TensorMonomial::new(letters)), BigInt::from(d));
            }
        }
    }

    #[test]
    fn labels_span_h2() {
        for g in 0..=2u32 {
            for n in 1..=4 {
                let count = n + n * (n - 1) / 2 * (4 * g * g) as usize;
                assert_eq!(degree_two_labels(g, n).len(), count);
            }
        }
        for l in degree_two_labels(2, 3) {
            assert_eq!(l.to_string().parse::<DegreeTwoLabel>().unwrap(), l);
        }
        assert!("eta".parse::<DegreeTwoLabel>().is_err());
        assert!("l1_2".parse::<DegreeTwoLabel>().is_err());
    }

    #[test]
    fn dual_contract_holds() {
        for g in 0..=2 {
            for n in 1..=3 {
                let r = dual_contract(g, n).unwrap();
                assert!(r.pass, "g={g} n={n}: {:?}", &r.mismatches[..r.mismatches.len().min(5)]);
            }
        }
    }

    #[test]
    fn table_examples() {
        let t = pairing_table(1, 2).unwrap();
        assert_eq!(t.entry(1, DegreeTwoLabel::Eta { j: 1 }), Some(1));
        assert_eq!(t.entry(1, DegreeTwoLabel::Eta { j: 2 }), Some(0));
        assert_eq!(t.entry(1, DegreeTwoLabel::Eta { j: 3 }), Some(1));
        let col = DegreeTwoLabel::LambdaPair {
            i: 1,
            j: 1,
            i2: 2,
            j2: 3,
        };
        // ∫ α̃_2 ∪ α̃_1 = ∫ (−α_1) ∪ α_2 = −1.
        assert_eq!(tilde_pairing(ctx(1), 2, 1), -1);
        assert_eq!(t.entry(1, col), Some(-1));
        assert_eq!(t.entry(2, col), Some(0));
        assert_eq!(t.entry(3, col), None);
    }

    #[test]
    fn table_matches_case_analysis_and_reconstructs_the_diagonal() {
        for g in 0..=2 {
            for d in 1..=3 {
                let t = pairing_table(g, d).unwrap();
                assert!(t.case_analysis_mismatches().is_empty(), "g={g} d={d}");
                for k in 1..=d {
                    assert_eq!(
                        t.reconstruct_row(k).unwrap(),
                        diagonal_class(ctx(g), d + 1, k, d + 1).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn table_csv_and_json() {
        let t = pairing_table(0, 2).unwrap();
        assert_eq!(t.to_csv(), "k,eta1,eta2,eta3\n1,1,0,1\n2,0,1,1\n");
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<PairingTable>(&json).unwrap(), t);
        let t = pairing_table(1, 1).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.contains("\"l1_1.l2_2\""));
        assert_eq!(serde_json::from_str::<PairingTable>(&json).unwrap(), t);
    }

    #[test]
    fn closed_formula_examples() {
        let r = verify_closed_formula(0, 3, 3).unwrap();
        assert!(r.pass);
        assert_eq!(r.forced_n, JsonInt(BigInt::from(3)));
        assert!(verify_closed_formula(1, 1, 1).unwrap().pass);
        assert!(verify_closed_formula(2, 2, 2).unwrap().pass);
        let bad = verify_closed_formula(2, 2, 1).unwrap();
        assert!(!bad.pass);
        assert_eq!(bad.discrepancies.len(), 1);
        assert_eq!(bad.discrepancies[0].letters, vec![U, U, W]);
        assert_eq!(bad.discrepancies[0].expected, JsonInt(BigInt::from(1)));
        assert_eq!(bad.discrepancies[0].actual, JsonInt(BigInt::from(2)));
    }

    #[test]
    fn divisor_classes() {
        let r = verify_divisor_classes(2, 2).unwrap();
        assert!(r.pass && r.restriction && r.slants.len() == 4);
        let r = verify_divisor_classes(0, 3).unwrap();
        assert!(r.pass && r.slants.is_empty());
        assert!(verify_divisor_classes(1, 3).unwrap().pass);
    }

    #[test]
    fn kronecker_slant_is_not_lambda_for_every_index() {
        let u = universal_divisor_pullback(1, 1).unwrap();
        let (lambdas, _) = macdonald_generators(1, 1).unwrap();
        let s = u.slant_last(&CurveCycle::kronecker_dual(A(2))).unwrap();
        assert_eq!(s, lambdas[0]);
        let s = u.slant_last(&CurveCycle::kronecker_dual(A(1))).unwrap();
        assert_eq!(s, lambdas[1].neg());
    }
}
