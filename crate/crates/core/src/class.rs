//! Exact graded-commutative arithmetic in `H^*(X^n; Z)` for a curve `X`.
//!
//! # Sign convention
//!
//! A monomial `a_1 ⊗ … ⊗ a_n` stands for the class
//! `π_n^*a_n ∪ π_{n-1}^*a_{n-1} ∪ … ∪ π_1^*a_1`. Every Koszul sign in this
//! module follows from that reading:
//!
//! * cup: `(a_1⊗…⊗a_n)(b_1⊗…⊗b_n) = (−1)^{Σ_{p<q}|a_p||b_q|} (a_1b_1)⊗…⊗(a_nb_n)`;
//! * slot permutation: the sign of the induced reordering of odd letters;
//! * insertion pullback `ι_k^*`: the last letter travels left past slots
//!   `k+1..d` and lands to the *left* of the letter in slot `k`.
//!
//! With this reading the degree-two class
//! `ω_j + ω_k + Σ_{i≤g} α_i(j)α_{i+g}(k) − Σ_{i>g} α_i(j)α_{i−g}(k)` is exactly
//! the Poincaré dual of the diagonal `{x_j = x_k}` (see [`diagonal_class`]);
//! the tests check `∫ Δ ∪ c = ∫ ι^*c` on every monomial.
//!
//! # Slant normalization
//!
//! [`CohomClass::slant_last`] contracts the last factor against a homology
//! class of `X` written in the Kronecker-dual basis, with no extra sign:
//! `(A ⊗ b) / z = ⟨b, z⟩·A`. The Poincaré dual cycle of a letter `a` is
//! the cycle with `⟨b, a^∨⟩ = ∫_X a ∪ b`; in particular `1^∨ = [X]`,
//! `ω^∨ = [pt]`, and `⟨ω, 1^∨⟩ = 1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_range, Error, Result};
use crate::genus::{GenusContext, Letter};
use crate::perm::Permutation;

/// A Künneth basis element of `H^*(X^n; Z)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorMonomial(Vec<Letter>);

impl TensorMonomial {
    pub fn new(letters: Vec<Letter>) -> Self {
        TensorMonomial(letters)
    }

    /// `ω` in every slot.
    pub fn top(n: usize) -> Self {
        TensorMonomial(vec![Letter::Omega; n])
    }

    pub fn unit(n: usize) -> Self {
        TensorMonomial(vec![Letter::Unit; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|l| l.degree()).sum()
    }
}

impl fmt::Display for TensorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("⊗")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A homology class of the curve, as coefficients on the Kronecker-dual basis
/// `{1^*, α_1^*, …, α_{2g}^*, ω^*}` (so `⟨a, b^*⟩ = δ_{ab}` for letters).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveCycle {
    coeffs: BTreeMap<Letter, i64>,
}

impl CurveCycle {
    /// The cycle `a^*` with `⟨b, a^*⟩ = δ_{ab}`.
    pub fn kronecker_dual(letter: Letter) -> Self {
        CurveCycle {
            coeffs: BTreeMap::from([(letter, 1)]),
        }
    }

    /// The Poincaré dual cycle `a^∨`, characterised by `⟨b, a^∨⟩ = ∫_X a ∪ b`.
    pub fn poincare_dual(ctx: GenusContext, letter: Letter) -> Self {
        let mut coeffs = BTreeMap::new();
        for b in ctx.letters() {
            if let Some((s, Letter::Omega)) = ctx.multiply(letter, b) {
                coeffs.insert(b, s as i64);
            }
        }
        CurveCycle { coeffs }
    }

    /// The fundamental class `[X]`.
    pub fn fundamental() -> Self {
        Self::kronecker_dual(Letter::Omega)
    }

    /// The class of a point.
    pub fn point() -> Self {
        Self::kronecker_dual(Letter::Unit)
    }

    /// Kronecker pairing `⟨letter, self⟩`.
    pub fn evaluate(&self, letter: Letter) -> i64 {
        self.coeffs.get(&letter).copied().unwrap_or(0)
    }
}

/// A finite integer combination of tensor monomials on `X^n`.
///
/// Always canonical: no stored zero coefficients, every monomial has
/// length `n`, terms kept in monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomClass {
    ctx: GenusContext,
    n: usize,
    terms: BTreeMap<TensorMonomial, BigInt>,
}

fn accumulate(terms: &mut BTreeMap<TensorMonomial, BigInt>, mono: TensorMonomial, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(mono) {
        Entry::Vacant(e) => {
            e.insert(coeff);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl CohomClass {
    pub fn zero(ctx: GenusContext, n: usize) -> Self {
        CohomClass {
            ctx,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: GenusContext, n: usize) -> Self {
        Self::zero(ctx, n).with_term(TensorMonomial::unit(n), BigInt::one())
    }

    fn with_term(mut self, mono: TensorMonomial, coeff: BigInt) -> Self {
        accumulate(&mut self.terms, mono, coeff);
        self
    }

    /// A single monomial with the given coefficient.
    pub fn monomial(ctx: GenusContext, letters: Vec<Letter>, coeff: impl Into<BigInt>) -> Result<Self> {
        for &l in &letters {
            ctx.check_letter(l)?;
        }
        let n = letters.len();
        Ok(Self::zero(ctx, n).with_term(TensorMonomial(letters), coeff.into()))
    }

    /// Builds a class from `(letters, coefficient)` pairs; all must have length `n`.
    pub fn from_terms<I, C>(ctx: GenusContext, n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<Letter>, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(ctx, n);
        for (letters, c) in terms {
            if letters.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: letters.len(),
                });
            }
            for &l in &letters {
                ctx.check_letter(l)?;
            }
            accumulate(&mut out.terms, TensorMonomial(letters), c.into());
        }
        Ok(out)
    }

    /// `letter` at 1-based `slot`, `1` elsewhere.
    pub fn single(ctx: GenusContext, n: usize, slot: usize, letter: Letter) -> Result<Self> {
        check_range("slot", slot, 1, n)?;
        let mut letters = vec![Letter::Unit; n];
        letters[slot - 1] = letter;
        Self::monomial(ctx, letters, 1)
    }

    /// `λ_i^j`: `α_i` in slot `j`.
    pub fn lambda(ctx: GenusContext, n: usize, i: u16, slot: usize) -> Result<Self> {
        Self::single(ctx, n, slot, Letter::Alpha(i))
    }

    /// `η^j`: `ω` in slot `j`.
    pub fn eta(ctx: GenusContext, n: usize, slot: usize) -> Result<Self> {
        Self::single(ctx, n, slot, Letter::Omega)
    }

    pub fn context(&self) -> GenusContext {
        self.ctx
    }

    pub fn genus(&self) -> u32 {
        self.ctx.genus()
    }

    /// Number of curve factors `n`.
    pub fn factors(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &TensorMonomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// `Some(k)` if every term has degree `k` (the zero class reports `None`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(TensorMonomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::GenusMismatch {
                left: self.genus(),
                right: other.genus(),
            });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.ctx, self.n);
        }
        CohomClass {
            ctx: self.ctx,
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Sum of a sequence of classes on `X^n`.
    pub fn sum<'a>(ctx: GenusContext, n: usize, classes: impl IntoIterator<Item = &'a CohomClass>) -> Result<Self> {
        classes.into_iter().try_fold(Self::zero(ctx, n), |acc, c| acc.add(c))
    }

    /// The cup product.
    pub fn cup(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.ctx, self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, letters)) = multiply_monomials(self.ctx, a, b) {
                    let c = ca * cb;
                    accumulate(&mut out.terms, TensorMonomial(letters), if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// `self^k`, with `self^0 = 1`.
    pub fn power(&self, k: u32) -> Result<Self> {
        (0..k).try_fold(Self::one(self.ctx, self.n), |acc, _| acc.cup(self))
    }

    /// Integral over the fundamental class of `X^n`: the coefficient of `ω⊗…⊗ω`.
    pub fn integrate(&self) -> BigInt {
        self.coefficient(&TensorMonomial::top(self.n))
    }

    /// Moves the letter in slot `p` to slot `σ(p)`, with the Koszul sign of
    /// the induced reordering of odd letters.
    pub fn permute(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: sigma.len(),
            });
        }
        let mut out = Self::zero(self.ctx, self.n);
        for (m, c) in &self.terms {
            let (sign, letters) = permute_monomial(m, sigma);
            accumulate(
                &mut out.terms,
                TensorMonomial(letters),
                if sign < 0 { -c } else { c.clone() },
            );
        }
        Ok(out)
    }

    /// Pullback along `ι_k : X^d → X^{d+1}`, which copies coordinate `k`
    /// into the last slot (1 ≤ k ≤ d).
    pub fn insertion_pullback(&self, k: usize) -> Result<Self> {
        if self.n < 2 {
            return Err(Error::Precondition(format!(
                "insertion pullback needs at least two factors, got {}",
                self.n
            )));
        }
        let d = self.n - 1;
        check_range("k", k, 1, d)?;
        let mut out = Self::zero(self.ctx, d);
        for (m, c) in &self.terms {
            let letters = m.letters();
            let last = letters[d];
            let mut sign = 1;
            if last.is_odd() && letters[k..d].iter().filter(|l| l.is_odd()).count() % 2 == 1 {
                sign = -sign;
            }
            let Some((s, merged)) = self.ctx.multiply(last, letters[k - 1]) else {
                continue;
            };
            sign *= s;
            let mut new_letters = letters[..d].to_vec();
            new_letters[k - 1] = merged;
            accumulate(
                &mut out.terms,
                TensorMonomial(new_letters),
                if sign < 0 { -c } else { c.clone() },
            );
        }
        Ok(out)
    }

    /// Restriction to `{x_0}` in the given slot: terms with `1` there survive
    /// with the slot removed.
    pub fn point_restrict(&self, slot: usize) -> Result<Self> {
        check_range("slot", slot, 1, self.n)?;
        let mut out = Self::zero(self.ctx, self.n - 1);
        for (m, c) in &self.terms {
            if m.letters()[slot - 1] == Letter::Unit {
                let mut letters = m.letters().to_vec();
                letters.remove(slot - 1);
                accumulate(&mut out.terms, TensorMonomial(letters), c.clone());
            }
        }
        Ok(out)
    }

    /// Slant product with a homology class of the last factor.
    pub fn slant_last(&self, cycle: &CurveCycle) -> Result<Self> {
        if self.n == 0 {
            return Err(Error::Precondition("slant product on X^0".into()));
        }
        let mut out = Self::zero(self.ctx, self.n - 1);
        for (m, c) in &self.terms {
            let (rest, last) = m.letters().split_at(self.n - 1);
            let w = cycle.evaluate(last[0]);
            if w != 0 {
                accumulate(&mut out.terms, TensorMonomial(rest.to_vec()), c * w);
            }
        }
        Ok(out)
    }

    /// The exterior tensor `A ⊗ B` on `X^{m+n}` (letter concatenation).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.ctx != other.ctx {
            return Err(Error::GenusMismatch {
                left: self.genus(),
                right: other.genus(),
            });
        }
        let mut out = Self::zero(self.ctx, self.n + other.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut letters = a.0.clone();
                letters.extend_from_slice(&b.0);
                accumulate(&mut out.terms, TensorMonomial(letters), ca * cb);
            }
        }
        Ok(out)
    }

    /// JSON term list `[{"letters": [...], "coeff": int}]` in monomial order.
    pub fn to_terms(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(m, c)| TermRecord {
                letters: m.0.clone(),
                coeff: JsonInt(c.clone()),
            })
            .collect()
    }

    pub fn from_records(ctx: GenusContext, n: usize, records: &[TermRecord]) -> Result<Self> {
        Self::from_terms(ctx, n, records.iter().map(|r| (r.letters.clone(), r.coeff.0.clone())))
    }
}

impl fmt::Display for CohomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}·")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

fn multiply_monomials(ctx: GenusContext, a: &TensorMonomial, b: &TensorMonomial) -> Option<(i32, Vec<Letter>)> {
    let mut sign = 1;
    let mut odd_a_before = 0usize;
    let mut letters = Vec::with_capacity(a.len());
    for (&x, &y) in a.0.iter().zip(&b.0) {
        if y.is_odd() && odd_a_before % 2 == 1 {
            sign = -sign;
        }
        let (s, l) = ctx.multiply(x, y)?;
        sign *= s;
        letters.push(l);
        if x.is_odd() {
            odd_a_before += 1;
        }
    }
    Some((sign, letters))
}

fn permute_monomial(m: &TensorMonomial, sigma: &Permutation) -> (i32, Vec<Letter>) {
    let mut letters = vec![Letter::Unit; m.len()];
    let odd_targets: Vec<usize> =
        m.0.iter()
            .enumerate()
            .filter(|(_, l)| l.is_odd())
            .map(|(p, _)| sigma.image(p))
            .collect();
    for (p, &l) in m.0.iter().enumerate() {
        letters[sigma.image(p)] = l;
    }
    let mut inversions = 0usize;
    for i in 0..odd_targets.len() {
        for j in i + 1..odd_targets.len() {
            if odd_targets[i] > odd_targets[j] {
                inversions += 1;
            }
        }
    }
    (if inversions.is_multiple_of(2) { 1 } else { -1 }, letters)
}

/// The diagonal `{x_j = x_k}` in `X^n` (1 ≤ j < k ≤ n):
/// `ω_j + ω_k + Σ_{i≤g} α_i(j)α_{i+g}(k) − Σ_{i>g} α_i(j)α_{i−g}(k)`.
pub fn diagonal_class(ctx: GenusContext, n: usize, j: usize, k: usize) -> Result<CohomClass> {
    if j == k {
        return Err(Error::Precondition(format!("slot collision: j = k = {j}")));
    }
    check_range("j", j, 1, n)?;
    check_range("k", k, 1, n)?;
    if j > k {
        return Err(Error::Precondition(format!(
            "diagonal slots must satisfy j < k, got ({j}, {k})"
        )));
    }
    let mut out = CohomClass::eta(ctx, n, j)?.add(&CohomClass::eta(ctx, n, k)?)?;
    let g = ctx.genus() as u16;
    for i in 1..=ctx.h1_rank() {
        let (partner, sign) = if i <= g { (i + g, 1) } else { (i - g, -1) };
        let mut letters = vec![Letter::Unit; n];
        letters[j - 1] = Letter::Alpha(i);
        letters[k - 1] = Letter::Alpha(partner);
        accumulate(&mut out.terms, TensorMonomial(letters), BigInt::from(sign));
    }
    Ok(out)
}

/// Dense integer rows for a list of classes over the union of their supports.
pub fn coordinate_rows(classes: &[CohomClass]) -> (Vec<TensorMonomial>, Vec<Vec<BigInt>>) {
    let mut index: BTreeMap<&TensorMonomial, usize> = BTreeMap::new();
    for c in classes {
        for m in c.terms.keys() {
            index.entry(m).or_insert(0);
        }
    }
    for (i, v) in index.values_mut().enumerate() {
        *v = i;
    }
    let columns: Vec<TensorMonomial> = index.keys().map(|m| (*m).clone()).collect();
    let rows = classes
        .iter()
        .map(|c| {
            let mut row = vec![BigInt::zero(); columns.len()];
            for (m, v) in &c.terms {
                row[index[m]] = v.clone();
            }
            row
        })
        .collect();
    (columns, rows)
}

/// An integer that serialises as a JSON number when it fits in `i64` and
/// as a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.collect_str(&self.0),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(v) => Ok(JsonInt(BigInt::from(v))),
            Repr::Text(s) => s.parse().map(JsonInt).map_err(serde::de::Error::custom),
        }
    }
}

/// One entry of the JSON term list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub letters: Vec<Letter>,
    pub coeff: JsonInt,
}
