//! Chern-character arithmetic on `P^1 × X`.
//!
//! `H^*(P^1 × X; Z)` has basis `{1, h} ⊗ {1, α_1, …, α_{2g}, w}`, where `h`
//! is the point class of `P^1` and `w` the point class of `X`. Relations:
//! `h² = 0`, `w² = 0`, `w·α_i = 0`, `α_i·α_j = ⟨α_i, α_j⟩·w`; `∫ h·w = 1`.
//! Since `h` has even degree no Koszul signs arise beyond those of `X`.
//!
//! The sheaf studied is the restriction of the universal quotient to a
//! rational curve `P^1 ⊂ Q(r, d)`:
//! `0 → W → O² → Q̃ → 0` with `Q̃ = (O ⊠ Q) ⊕ (O(1) ⊠ O_p)` and `Q` a
//! torsion sheaf of length `d − 1` on `X`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::class::CurveCycle;
use crate::error::{Error, Result};
use crate::genus::{GenusContext, Letter};

/// A basis class of `H^*(P^1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum P1Letter {
    One,
    H,
}

impl P1Letter {
    fn degree(self) -> u32 {
        match self {
            P1Letter::One => 0,
            P1Letter::H => 2,
        }
    }
}

/// An integral class on `P^1 × X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P1XClass {
    ctx: GenusContext,
    terms: BTreeMap<(P1Letter, Letter), i64>,
}

impl P1XClass {
    pub fn zero(ctx: GenusContext) -> Self {
        P1XClass {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(ctx: GenusContext, p: P1Letter, x: Letter, coeff: i64) -> Result<Self> {
        ctx.check_letter(x)?;
        let mut out = Self::zero(ctx);
        out.add_term(p, x, coeff);
        Ok(out)
    }

    pub fn one(ctx: GenusContext) -> Self {
        Self::constant(ctx, 1)
    }

    pub fn constant(ctx: GenusContext, c: i64) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(P1Letter::One, Letter::Unit, c);
        out
    }

    /// The point class of `P^1`.
    pub fn h(ctx: GenusContext) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(P1Letter::H, Letter::Unit, 1);
        out
    }

    /// The point class of `X`.
    pub fn w(ctx: GenusContext) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(P1Letter::One, Letter::Omega, 1);
        out
    }

    fn add_term(&mut self, p: P1Letter, x: Letter, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((p, x)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(p, x));
        }
    }

    pub fn coefficient(&self, p: P1Letter, x: Letter) -> i64 {
        self.terms.get(&(p, x)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::GenusMismatch {
                left: self.ctx.genus(),
                right: other.ctx.genus(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&(p, x), &c) in &other.terms {
            out.add_term(p, x, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.ctx);
        for (&(p, x), &c) in &self.terms {
            out.add_term(p, x, c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.ctx);
        for (&(p, a), &c) in &self.terms {
            for (&(q, b), &e) in &other.terms {
                let pq = match (p, q) {
                    (P1Letter::H, P1Letter::H) => continue,
                    (P1Letter::One, P1Letter::One) => P1Letter::One,
                    _ => P1Letter::H,
                };
                if let Some((s, ab)) = self.ctx.multiply(a, b) {
                    out.add_term(pq, ab, i64::from(s) * c * e);
                }
            }
        }
        Ok(out)
    }

    /// The part of cohomological degree `2k`.
    pub fn graded(&self, k: u32) -> Self {
        self.part(|deg| deg == 2 * k)
    }

    fn part(&self, keep: impl Fn(u32) -> bool) -> Self {
        let mut out = Self::zero(self.ctx);
        for (&(p, x), &c) in &self.terms {
            if keep(p.degree() + x.degree()) {
                out.add_term(p, x, c);
            }
        }
        out
    }

    /// `∫_{P^1 × X}`: the coefficient of `h·w`.
    pub fn integrate(&self) -> i64 {
        self.coefficient(P1Letter::H, Letter::Omega)
    }

    /// Divides every coefficient by `k`, failing unless the division is exact.
    pub fn div_exact(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero(self.ctx);
        for (&(p, x), &c) in &self.terms {
            if c % k != 0 {
                return Err(Error::Internal(format!(
                    "coefficient {c} of {} is not divisible by {k}",
                    display_term(p, x)
                )));
            }
            out.add_term(p, x, c / k);
        }
        Ok(out)
    }

    fn nilpotent_part(&self) -> Result<Self> {
        if self.coefficient(P1Letter::One, Letter::Unit) != 1 {
            return Err(Error::Precondition(format!("{self} does not have constant term 1")));
        }
        self.sub(&Self::one(self.ctx))
    }

    /// Multiplicative inverse of a class `1 + N` with `N` nilpotent.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.nilpotent_part()?;
        // N has no degree-0 part and the top degree is 4, so N^5 = 0.
        let mut out = Self::one(self.ctx);
        let mut power = Self::one(self.ctx);
        for k in 1..=4 {
            power = power.mul(&n)?;
            out = out.add(&power.scale(if k % 2 == 0 { 1 } else { -1 }))?;
        }
        Ok(out)
    }

    /// `exp(x) = Σ x^k / k!` for a class without constant term; fails if a
    /// coefficient is not integral.
    pub fn exp(&self) -> Result<Self> {
        if self.coefficient(P1Letter::One, Letter::Unit) != 0 {
            return Err(Error::Precondition("exp needs a class without constant term".into()));
        }
        let mut out = Self::one(self.ctx);
        let mut power = Self::one(self.ctx);
        let mut factorial = 1;
        for k in 1..=4 {
            power = power.mul(self)?;
            factorial *= k;
            out = out.add(&power.div_exact(factorial)?)?;
        }
        Ok(out)
    }

    /// Restriction to `P^1 × {x}`.
    pub fn restrict_to_p1(&self) -> P1Class {
        P1Class {
            one: self.coefficient(P1Letter::One, Letter::Unit),
            h: self.coefficient(P1Letter::H, Letter::Unit),
        }
    }

    /// Slant product with a cycle on `X`, landing in `H^*(P^1)`.
    pub fn slant_x(&self, cycle: &CurveCycle) -> P1Class {
        let mut out = P1Class { one: 0, h: 0 };
        for (&(p, x), &c) in &self.terms {
            let v = c * cycle.evaluate(x);
            match p {
                P1Letter::One => out.one += v,
                P1Letter::H => out.h += v,
            }
        }
        out
    }
}

fn display_term(p: P1Letter, x: Letter) -> String {
    match (p, x) {
        (P1Letter::One, Letter::Unit) => "1".into(),
        (P1Letter::One, x) => x.to_string(),
        (P1Letter::H, Letter::Unit) => "h".into(),
        (P1Letter::H, x) => format!("h·{x}"),
    }
}

impl fmt::Display for P1XClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(p, x), &c)) in self.terms.iter().enumerate() {
            let sep = match (i, c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            f.write_str(sep)?;
            if c.abs() != 1 {
                write!(f, "{}·", c.abs())?;
            }
            f.write_str(&display_term(p, x))?;
        }
        Ok(())
    }
}

/// A class `one·1 + h·h` on `P^1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct P1Class {
    pub one: i64,
    pub h: i64,
}

impl P1Class {
    pub fn is_zero(&self) -> bool {
        self.one == 0 && self.h == 0
    }

    pub fn integrate(&self) -> i64 {
        self.h
    }
}

fn check_d(d: usize) -> Result<i64> {
    if d == 0 {
        return Err(Error::Precondition("the quotient sheaf needs d ≥ 1".into()));
    }
    i64::try_from(d).map_err(|_| Error::Overflow(format!("degree {d}")))
}

/// `ch(Q̃)` computed summand by summand:
/// `ch(O ⊠ Q) + ch(O(1))·ch(O_p) = (d−1)·w + (1 + h)·w`.
pub fn quotient_chern_character(genus: u32, d: usize) -> Result<P1XClass> {
    let d = check_d(d)?;
    let ctx = GenusContext::new(genus);
    let w = P1XClass::w(ctx);
    let torsion = w.scale(d - 1);
    let line = P1XClass::h(ctx).exp()?;
    // ch(O_p) = 1 − exp(−w).
    let point = P1XClass::one(ctx).sub(&w.scale(-1).exp()?)?;
    torsion.add(&line.mul(&point)?)
}

/// Total Chern class of `Q̃` from those of its summands:
/// `c(O ⊠ Q) = c(O_p)^{d−1}`, `c(O_p) = 1 / c(O(−p))`,
/// `c(O(1) ⊠ O_p) = c(O(1)) / c(O(1) ⊠ O(−p))`.
pub fn quotient_total_chern_class(genus: u32, d: usize) -> Result<P1XClass> {
    let d = check_d(d)?;
    let ctx = GenusContext::new(genus);
    let one = P1XClass::one(ctx);
    let h = P1XClass::h(ctx);
    let w = P1XClass::w(ctx);
    let c_point = one.sub(&w)?.inverse()?;
    let mut c_torsion = one.clone();
    for _ in 1..d {
        c_torsion = c_torsion.mul(&c_point)?;
    }
    let twisted = one.add(&h)?.mul(&one.add(&h)?.sub(&w)?.inverse()?)?;
    c_torsion.mul(&twisted)
}

/// `ch` of a rank-`rank` sheaf from its total Chern class on the surface
/// `P^1 × X`: `ch_1 = c_1`, `ch_2 = (c_1² − 2c_2)/2`.
pub fn character_from_chern(rank: i64, total: &P1XClass) -> Result<P1XClass> {
    let c1 = total.graded(1);
    let c2 = total.graded(2);
    let ch2 = c1.mul(&c1)?.sub(&c2.scale(2))?.div_exact(2)?;
    P1XClass::constant(total.ctx, rank).add(&c1)?.add(&ch2)
}

/// `(c_1(W), c_2(W))` for the kernel `W` of `O² → Q̃`.
pub fn kernel_chern_classes(genus: u32, d: usize) -> Result<(P1XClass, P1XClass)> {
    let ch_q = quotient_chern_character(genus, d)?;
    let ctx = GenusContext::new(genus);
    let ch_w = P1XClass::constant(ctx, 2).sub(&ch_q)?;
    let c1 = ch_w.graded(1);
    let c2 = c1.mul(&c1)?.sub(&ch_w.graded(2).scale(2))?.div_exact(2)?;
    Ok((c1, c2))
}

/// Outcome of the three intersection identities for `W`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernReport {
    /// `∫_{P^1} c_1(W)|_{P^1 × {x}}`.
    #[serde(rename = "C1")]
    pub c1: i64,
    /// `∫_{P^1} c_1(W) / α_i^∨`, one entry per `i`.
    #[serde(rename = "C2")]
    pub c2: Vec<i64>,
    /// `∫_{P^1} c_2(W) / [X]`.
    #[serde(rename = "C4")]
    pub c4: i64,
    pub pass: bool,
}

pub fn verify_c_identities(genus: u32, d: usize) -> Result<ChernReport> {
    let ctx = GenusContext::new(genus);
    let (c1, c2) = kernel_chern_classes(genus, d)?;
    let restricted = c1.restrict_to_p1();
    let slants: Vec<P1Class> = (1..=ctx.h1_rank())
        .map(|i| c1.slant_x(&CurveCycle::poincare_dual(ctx, Letter::Alpha(i))))
        .collect();
    let top = c2.slant_x(&CurveCycle::fundamental());
    let pass = restricted.is_zero() && slants.iter().all(P1Class::is_zero) && top == (P1Class { one: 0, h: 1 });
    Ok(ChernReport {
        c1: restricted.integrate(),
        c2: slants.iter().map(P1Class::integrate).collect(),
        c4: top.integrate(),
        pass,
    })
}

/// Compares `ch(Q̃)` computed summand by summand with `ch` recovered from
/// the product of the summands' total Chern classes.
pub fn whitney_consistent(genus: u32, d: usize) -> Result<bool> {
    let direct = quotient_chern_character(genus, d)?;
    let via_chern = character_from_chern(0, &quotient_total_chern_class(genus, d)?)?;
    Ok(direct == via_chern)
}
