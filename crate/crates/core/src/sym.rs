//! `H^*(Sym^d X)` as the signed `S_d`-invariants of `H^*(X^d)`.
//!
//! Ranks are counted on canonical orbit representatives (non-decreasing
//! letter words): the orbit sum of a word vanishes exactly when some
//! stabilizing permutation acts on it by `−1`. Literal orbit sums are still
//! available through [`symmetrize`] and [`invariant_basis`], and the tests
//! cross-check the two.
//!
//! Ranks are taken over `Q`. Whether the integral image of `q_d^*` is the
//! whole signed-invariant lattice or a finite-index sublattice is not
//! decided here; nothing downstream depends on it.

use num_bigint::BigInt;

use crate::class::{coordinate_rows, CohomClass};
use crate::combi::binomial;
use crate::error::{check_range, Error, Result};
use crate::genus::{GenusContext, Letter};
use crate::linalg::rank;
use crate::perm::Permutation;

pub const DEFAULT_MAX_BASIS: u64 = 2_000_000;
pub const DEFAULT_MAX_SYMMETRIZE_FACTORS: usize = 7;

/// Resource guard shared by every enumeration over the Künneth basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Refuse when `(2g+2)^d` exceeds this.
    pub max_basis: u64,
    /// Refuse literal `n!`-term orbit sums beyond this many factors.
    pub max_symmetrize_factors: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis: DEFAULT_MAX_BASIS,
            max_symmetrize_factors: DEFAULT_MAX_SYMMETRIZE_FACTORS,
        }
    }
}

impl Limits {
    pub fn check_basis(&self, genus: u32, d: usize) -> Result<()> {
        let base = 2 * genus as u64 + 2;
        let size = u32::try_from(d).ok().and_then(|e| base.checked_pow(e));
        match size {
            Some(s) if s <= self.max_basis => Ok(()),
            _ => Err(Error::ResourceLimit(format!(
                "Künneth basis of X^{d} for genus {genus} has (2g+2)^d = {base}^{d} monomials, above the limit {}",
                self.max_basis
            ))),
        }
    }
}

/// `Σ_{σ ∈ S_n} σ·c`.
pub fn symmetrize(c: &CohomClass, limits: &Limits) -> Result<CohomClass> {
    let n = c.factors();
    if n > limits.max_symmetrize_factors {
        return Err(Error::ResourceLimit(format!(
            "symmetrizing over S_{n} exceeds the limit of {} factors",
            limits.max_symmetrize_factors
        )));
    }
    let mut acc = CohomClass::zero(c.context(), n);
    for sigma in Permutation::all(n) {
        acc = acc.add(&c.permute(&sigma)?)?;
    }
    Ok(acc)
}

/// Non-decreasing words of length `d` and total degree `k` in the letters of `H^*(X)`.
pub fn canonical_words(ctx: GenusContext, d: usize, k: u32) -> Vec<Vec<Letter>> {
    fn go(
        letters: &[Letter],
        start: usize,
        left: usize,
        deg_left: u32,
        cur: &mut Vec<Letter>,
        out: &mut Vec<Vec<Letter>>,
    ) {
        if left == 0 {
            if deg_left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // Every remaining letter has degree ≤ 2.
        if deg_left > 2 * left as u32 {
            return;
        }
        for (idx, &l) in letters.iter().enumerate().skip(start) {
            if l.degree() > deg_left {
                continue;
            }
            cur.push(l);
            go(letters, idx, left - 1, deg_left - l.degree(), cur, out);
            cur.pop();
        }
    }
    let letters = ctx.letters();
    let mut out = Vec::new();
    go(&letters, 0, d, k, &mut Vec::with_capacity(d), &mut out);
    out
}

/// True when the orbit sum of this sorted word is non-zero: no adjacent
/// transposition of equal letters (these generate the stabilizer) acts by `−1`.
fn orbit_survives(ctx: GenusContext, word: &[Letter]) -> Result<bool> {
    let d = word.len();
    let mono = CohomClass::monomial(ctx, word.to_vec(), 1)?;
    for p in 0..d.saturating_sub(1) {
        if word[p] == word[p + 1] {
            let swapped = mono.permute(&Permutation::transposition(d, p, p + 1)?)?;
            if swapped != mono {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `b_k(Sym^d X)`: rank of the signed-invariant part of `H^k(X^d)`.
pub fn invariant_rank(genus: u32, d: usize, k: u32, limits: &Limits) -> Result<u64> {
    check_range("k", k as usize, 0, 2 * d)?;
    limits.check_basis(genus, d)?;
    let ctx = GenusContext::new(genus);
    let mut count = 0u64;
    for word in canonical_words(ctx, d, k) {
        if orbit_survives(ctx, &word)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Closed form `Σ_{q=max(0,k−d)}^{⌊k/2⌋} C(2g, k−2q)`; agrees with
/// [`invariant_rank`] wherever both run.
pub fn betti_sym_closed(genus: u32, d: usize, k: u32) -> Result<u64> {
    check_range("k", k as usize, 0, 2 * d)?;
    let k = k as u64;
    let lo = k.saturating_sub(d as u64);
    let mut total = 0u64;
    for q in lo..=k / 2 {
        total = total
            .checked_add(binomial(2 * genus as u64, k - 2 * q)?)
            .ok_or_else(|| Error::Overflow("Betti number of Sym^d X".into()))?;
    }
    Ok(total)
}

/// Poincaré sequence `b_0..b_{2d}` of `Sym^d X` from the closed form.
pub fn sym_betti_sequence(genus: u32, d: usize) -> Result<Vec<u64>> {
    (0..=2 * d as u32).map(|k| betti_sym_closed(genus, d, k)).collect()
}

/// Orbit-sum basis of the invariants in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBasis {
    pub genus: u32,
    pub d: usize,
    pub degree: u32,
    pub vectors: Vec<CohomClass>,
}

impl InvariantBasis {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }
}

/// Signed sum over the distinct rearrangements of a sorted word. Equals the
/// full `S_d` orbit sum divided by the stabilizer order.
fn primitive_orbit_sum(ctx: GenusContext, word: &[Letter]) -> Result<CohomClass> {
    let d = word.len();
    let base = CohomClass::monomial(ctx, word.to_vec(), 1)?;
    let mut acc = CohomClass::zero(ctx, d);
    let mut seen = std::collections::BTreeSet::new();
    for sigma in Permutation::all(d) {
        let moved = base.permute(&sigma)?;
        let (mono, _) = moved.terms().next().expect("monomial stays a monomial");
        if seen.insert(mono.clone()) {
            acc = acc.add(&moved)?;
        }
    }
    Ok(acc)
}

pub fn invariant_basis(genus: u32, d: usize, k: u32, limits: &Limits) -> Result<InvariantBasis> {
    check_range("k", k as usize, 0, 2 * d)?;
    limits.check_basis(genus, d)?;
    if d > limits.max_symmetrize_factors {
        return Err(Error::ResourceLimit(format!(
            "materialising orbit sums on X^{d} exceeds the limit of {} factors",
            limits.max_symmetrize_factors
        )));
    }
    let ctx = GenusContext::new(genus);
    let mut vectors = Vec::new();
    for word in canonical_words(ctx, d, k) {
        if orbit_survives(ctx, &word)? {
            vectors.push(primitive_orbit_sum(ctx, &word)?);
        }
    }
    Ok(InvariantBasis {
        genus,
        d,
        degree: k,
        vectors,
    })
}

/// The generators `λ_i = Σ_j λ_i^j` (`i = 1..2g`) and `η = Σ_j η^j` on `X^d`.
pub fn macdonald_generators(genus: u32, d: usize) -> Result<(Vec<CohomClass>, CohomClass)> {
    if d == 0 {
        return Err(Error::Precondition("macdonald generators need d ≥ 1".into()));
    }
    let ctx = GenusContext::new(genus);
    let lambdas = (1..=ctx.h1_rank())
        .map(|i| {
            let parts = (1..=d)
                .map(|j| CohomClass::lambda(ctx, d, i, j))
                .collect::<Result<Vec<_>>>()?;
            CohomClass::sum(ctx, d, &parts)
        })
        .collect::<Result<Vec<_>>>()?;
    let etas = (1..=d)
        .map(|j| CohomClass::eta(ctx, d, j))
        .collect::<Result<Vec<_>>>()?;
    let eta = CohomClass::sum(ctx, d, &etas)?;
    Ok((lambdas, eta))
}

/// One degree of a generation check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DegreeCheck {
    pub k: u32,
    pub span_rank: u64,
    pub invariant_rank: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GenerationReport {
    pub genus: u32,
    pub d: usize,
    pub degrees: Vec<DegreeCheck>,
    pub pass: bool,
}

/// All cup monomials `λ_{i_1}⋯λ_{i_s} η^e` (`i_1 < … < i_s`) of total degree `k`.
pub fn generator_monomials(lambdas: &[CohomClass], eta: &CohomClass, k: u32) -> Result<Vec<CohomClass>> {
    let ctx = eta.context();
    let d = eta.factors();
    let mut out = Vec::new();
    for e in 0..=k / 2 {
        let s = (k - 2 * e) as usize;
        if s > lambdas.len() {
            continue;
        }
        let eta_pow = eta.power(e)?;
        for subset in itertools::Itertools::combinations(0..lambdas.len(), s) {
            let mut prod = CohomClass::one(ctx, d);
            for i in subset {
                prod = prod.cup(&lambdas[i])?;
            }
            out.push(prod.cup(&eta_pow)?);
        }
    }
    Ok(out)
}

/// For each `k ≤ k_max`, compares the rank of the span of generator
/// monomials of degree `k` with `b_k(Sym^d X)`.
pub fn generation_check(genus: u32, d: usize, k_max: u32, limits: &Limits) -> Result<GenerationReport> {
    if k_max as usize > 2 * d {
        return Err(Error::Precondition(format!("k_max = {k_max} exceeds 2d = {}", 2 * d)));
    }
    limits.check_basis(genus, d)?;
    let (lambdas, eta) = macdonald_generators(genus, d)?;
    let mut degrees = Vec::new();
    for k in 0..=k_max {
        let products = generator_monomials(&lambdas, &eta, k)?;
        let (_, rows) = coordinate_rows(&products);
        let span_rank = rank(&rows) as u64;
        let inv = invariant_rank(genus, d, k, limits)?;
        degrees.push(DegreeCheck {
            k,
            span_rank,
            invariant_rank: inv,
            pass: span_rank == inv,
        });
    }
    let pass = degrees.iter().all(|c| c.pass);
    Ok(GenerationReport {
        genus,
        d,
        degrees,
        pass,
    })
}

/// `Σ_k (−1)^k b_k(Sym^d X)` from invariant ranks.
pub fn euler_characteristic(genus: u32, d: usize, limits: &Limits) -> Result<BigInt> {
    let mut chi = BigInt::from(0);
    for k in 0..=2 * d as u32 {
        let b = BigInt::from(invariant_rank(genus, d, k, limits)?);
        if k % 2 == 0 {
            chi += b;
        } else {
            chi -= b;
        }
    }
    Ok(chi)
}
