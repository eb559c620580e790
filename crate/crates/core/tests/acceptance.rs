//! Acceptance suite: every criterion runs at exact (integer) tolerance and
//! prints one PASS/FAIL line. The process exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRng, TestRunner};

use symquot::brauer::{f_d_pullback_matrix, verify_brauer_ranks, verify_shift_square};
use symquot::chern::verify_c_identities;
use symquot::combi::binomial;
use symquot::divisor::{dual_contract, pairing_table, verify_closed_formula, verify_divisor_classes};
use symquot::quot::{betti_quot, poincare_quot, PoincarePolynomial};
use symquot::sym::{betti_sym_closed, generation_check, invariant_rank, sym_betti_sequence, Limits};
use symquot::{diagonal_class, CohomClass, GenusContext, Letter, Permutation};

mod common;
use common::{class, coefficient_of_power, monomial, permutation, shape};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `(g, d)` with `g ≤ 3`, `d ≤ 5` inside the default basis guard.
fn sym_grid() -> Vec<(u32, usize)> {
    let limits = Limits::default();
    (0..=3)
        .flat_map(|g| (1..=5).map(move |d| (g, d)))
        .filter(|&(g, d)| limits.check_basis(g, d).is_ok())
        .collect()
}

fn wedge2(g: u32) -> u64 {
    binomial(2 * u64::from(g), 2).unwrap()
}

fn betti_agreement() -> Outcome {
    let start = Instant::now();
    let limits = Limits::default();
    let mut checked = 0;
    for (g, d) in sym_grid() {
        for k in 0..=2 * d as u32 {
            let orbit = invariant_rank(g, d, k, &limits).map_err(err)?;
            let closed = betti_sym_closed(g, d, k).map_err(err)?;
            ensure(orbit == closed, || {
                format!("g={g} d={d} k={k}: invariant rank {orbit}, closed form {closed}")
            })?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} degrees, {elapsed:.2?}"))
}

fn second_betti_of_sym() -> Outcome {
    let limits = Limits::default();
    let mut checked = 0;
    for (g, d) in sym_grid().into_iter().filter(|&(_, d)| d >= 2) {
        let b2 = invariant_rank(g, d, 2, &limits).map_err(err)?;
        ensure(b2 == wedge2(g) + 1, || format!("g={g} d={d}: b_2 = {b2}"))?;
        checked += 1;
    }
    Ok(format!("{checked} (g, d) pairs"))
}

fn generation() -> Outcome {
    let limits = Limits::default();
    let mut checked = 0;
    for g in 0..=2 {
        for d in 1..=4 {
            let report = generation_check(g, d, 2 * d as u32, &limits).map_err(err)?;
            for c in &report.degrees {
                ensure(c.pass, || {
                    format!(
                        "g={g} d={d} k={}: span rank {} vs invariant rank {}",
                        c.k, c.span_rank, c.invariant_rank
                    )
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} degrees"))
}

fn quot_second_betti() -> Outcome {
    for g in 0..=3 {
        for r in 2..=3 {
            for d in 2..=4 {
                let b2 = betti_quot(g, r, d, 2).map_err(err)?;
                ensure(b2 == wedge2(g) + 2, || format!("g={g} r={r} d={d}: b_2 = {b2}"))?;
            }
        }
    }
    let p = poincare_quot(2, 2, 2).map_err(err)?;
    ensure(p.betti == [1, 4, 8, 12, 20, 12, 8, 4, 1], || {
        format!("(2,2,2): {:?}", p.betti)
    })?;
    Ok("24 triples and the (2,2,2) polynomial".into())
}

fn quot_consistency() -> Outcome {
    let mut checked = 0;
    for g in 0..=3u32 {
        let curve = PoincarePolynomial::new(1, vec![1, 2 * u64::from(g), 1]).map_err(err)?;
        for r in 1..=3 {
            let mut projective = vec![0u64; 2 * r - 1];
            for j in 0..r {
                projective[2 * j] = 1;
            }
            let pr = PoincarePolynomial::new(r - 1, projective).map_err(err)?;
            let expected = curve.product(&pr).map_err(err)?;
            let actual = poincare_quot(g, r, 1).map_err(err)?;
            ensure(actual == expected, || {
                format!("g={g} r={r}: {:?} vs {:?}", actual.betti, expected.betti)
            })?;
            for d in 0..=4 {
                let p = poincare_quot(g, r, d).map_err(err)?;
                ensure(
                    p.dim == r * d && p.betti.len() == 2 * r * d + 1 && p.is_palindromic(),
                    || format!("g={g} r={r} d={d}: {:?}", p.betti),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("12 product checks, {checked} palindromes"))
}

fn pairing_tables() -> Outcome {
    let mut entries = 0;
    for g in 0..=2 {
        for d in 1..=4 {
            let table = pairing_table(g, d).map_err(err)?;
            let mismatches = table.case_analysis_mismatches();
            ensure(mismatches.is_empty(), || {
                format!("g={g} d={d}: first mismatch {:?}", mismatches[0])
            })?;
            let ctx = GenusContext::new(g);
            for k in 1..=d {
                let diag = diagonal_class(ctx, d + 1, k, d + 1).map_err(err)?;
                ensure(table.reconstruct_row(k).map_err(err)? == diag, || {
                    format!("g={g} d={d}: row {k} does not reconstruct the diagonal")
                })?;
            }
            let contract = dual_contract(g, d + 1).map_err(err)?;
            ensure(contract.pass, || {
                format!("g={g} n={}: dual basis contract fails", d + 1)
            })?;
            entries += table.entries.len() * table.columns.len();
        }
    }
    Ok(format!("{entries} entries, exhaustive"))
}

fn closed_formula() -> Outcome {
    for g in 0..=2 {
        for d in 1..=4 {
            let ok = verify_closed_formula(g, d, d as i64).map_err(err)?;
            ensure(ok.pass, || {
                format!("g={g} d={d}: {} discrepant monomials", ok.discrepancies.len())
            })?;
            ensure(ok.forced_n.0 == BigInt::from(d), || {
                format!("g={g} d={d}: forced n = {}", ok.forced_n.0)
            })?;
            for n in (-2..=2 * d as i64 + 2).filter(|&n| n != d as i64) {
                let bad = verify_closed_formula(g, d, n).map_err(err)?;
                ensure(!bad.pass, || format!("g={g} d={d}: n = {n} was accepted"))?;
            }
        }
    }
    Ok("n = d accepted, every other n in range rejected".into())
}

fn divisor_classes() -> Outcome {
    let mut slants = 0;
    for g in 0..=2 {
        for d in 1..=4 {
            let r = verify_divisor_classes(g, d).map_err(err)?;
            ensure(r.restriction, || format!("g={g} d={d}: restriction is not η"))?;
            ensure(r.pass, || format!("g={g} d={d}: slant mismatch {:?}", r.slants))?;
            slants += r.slants.len();
        }
    }
    Ok(format!("12 restrictions, {slants} slants"))
}

fn chern_identities() -> Outcome {
    for g in 0..=3 {
        for d in 1..=5 {
            let r = verify_c_identities(g, d).map_err(err)?;
            ensure(r.pass && r.c1 == 0 && r.c2.iter().all(|&v| v == 0) && r.c4 == 1, || {
                format!("g={g} d={d}: {r:?}")
            })?;
            ensure(r.c2.len() == 2 * g as usize, || format!("g={g}: {} slants", r.c2.len()))?;
        }
    }
    Ok("20 (g, d) pairs".into())
}

fn pullback_matrices() -> Outcome {
    for g in 0..=2 {
        for d in 2..=3 {
            let m = f_d_pullback_matrix(g, d).map_err(err)?;
            ensure(m.size() as u64 == wedge2(g) + 1 && m.is_identity(), || {
                format!("g={g} d={d}: {:?}", m.entries)
            })?;
        }
    }
    Ok("6 matrices".into())
}

fn brauer_ranks() -> Outcome {
    let mut reports = 0;
    for g in 0..=5u32 {
        let rhos: Vec<u64> = if g == 0 {
            vec![0]
        } else {
            (1..=u64::from(g * g)).collect()
        };
        for r in 2..=3 {
            for d in 2..=4 {
                for &rho in &rhos {
                    let t = verify_brauer_ranks(g, r, d, rho).map_err(err)?;
                    let common = wedge2(g) - rho;
                    ensure(
                        t.pass && t.rank_pic == common && t.rank_sym == common && t.rank_quot == common,
                        || format!("g={g} r={r} d={d} rho={rho}: {t:?}"),
                    )?;
                    let s = verify_shift_square(g, r, d, rho).map_err(err)?;
                    ensure(s.pass && s.rank_quot_d == common, || {
                        format!("g={g} r={r} d={d} rho={rho}: {s:?}")
                    })?;
                    reports += 1;
                }
            }
        }
    }
    Ok(format!("{reports} parameter points"))
}

fn sign_of(a: &CohomClass, b: &CohomClass) -> BigInt {
    let p = a.homogeneous_degree().unwrap_or(0) * b.homogeneous_degree().unwrap_or(0);
    BigInt::from(if p % 2 == 1 { -1 } else { 1 })
}

fn all_monomials(g: u32, n: usize) -> Vec<CohomClass> {
    let ctx = GenusContext::new(g);
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<Letter>| {
                ctx.letters().into_iter().map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|w| CohomClass::monomial(ctx, w, 1).unwrap())
        .collect()
}

fn property_suite() -> Outcome {
    // Exhaustive on small shapes.
    for g in 0..=2 {
        for n in 1..=2 {
            let ms = all_monomials(g, n);
            for a in &ms {
                for b in &ms {
                    let ab = a.cup(b).map_err(err)?;
                    ensure(ab == b.cup(a).map_err(err)?.scale(&sign_of(a, b)), || {
                        format!("commutativity: {a} · {b}")
                    })?;
                }
            }
        }
        let ms = all_monomials(g, 2);
        for a in ms.iter().step_by(3) {
            for b in &ms {
                for c in ms.iter().step_by(2) {
                    let l = a.cup(b).and_then(|x| x.cup(c)).map_err(err)?;
                    let r = b.cup(c).and_then(|x| a.cup(&x)).map_err(err)?;
                    ensure(l == r, || format!("associativity: {a}, {b}, {c}"))?;
                }
            }
        }
        let perms: Vec<Permutation> = Permutation::all(3).collect();
        for m in all_monomials(g, 3).iter().step_by(5) {
            for s in &perms {
                for t in &perms {
                    let lhs = m.permute(&s.compose(t).map_err(err)?).map_err(err)?;
                    let rhs = m.permute(t).and_then(|x| x.permute(s)).map_err(err)?;
                    ensure(lhs == rhs, || format!("action composition on {m}"))?;
                }
            }
        }
    }
    // Randomised (deterministic seed) on the full shape range.
    let config = Config {
        failure_persistence: None,
        ..Config::with_cases(200)
    };
    let mut runner = TestRunner::new_with_rng(config.clone(), TestRng::deterministic_rng(config.rng_algorithm));
    runner
        .run(
            &shape().prop_flat_map(|(g, n)| (monomial(g, n), monomial(g, n))),
            |(a, b)| {
                prop_assert_eq!(a.cup(&b).unwrap(), b.cup(&a).unwrap().scale(&sign_of(&a, &b)));
                Ok(())
            },
        )
        .map_err(|e| format!("commutativity: {e}"))?;
    runner
        .run(
            &shape().prop_flat_map(|(g, n)| (class(g, n), class(g, n), class(g, n))),
            |(a, b, c)| {
                prop_assert_eq!(a.cup(&b).unwrap().cup(&c).unwrap(), a.cup(&b.cup(&c).unwrap()).unwrap());
                Ok(())
            },
        )
        .map_err(|e| format!("associativity: {e}"))?;
    runner
        .run(
            &shape().prop_flat_map(|(g, n)| (class(g, n), permutation(n), permutation(n))),
            |(c, s, t)| {
                prop_assert_eq!(
                    c.permute(&s.compose(&t).unwrap()).unwrap(),
                    c.permute(&t).unwrap().permute(&s).unwrap()
                );
                Ok(())
            },
        )
        .map_err(|e| format!("action composition: {e}"))?;
    // Poincaré duality and Euler characteristic over the rank grid.
    let limits = Limits::default();
    for (g, d) in sym_grid() {
        let b: Vec<u64> = (0..=2 * d as u32)
            .map(|k| invariant_rank(g, d, k, &limits))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        ensure(b.iter().eq(b.iter().rev()), || {
            format!("duality fails for g={g} d={d}: {b:?}")
        })?;
        let chi: i128 = b
            .iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 0 { x as i128 } else { -(x as i128) })
            .sum();
        let expected = coefficient_of_power(2 * i64::from(g) - 2, d);
        ensure(chi == expected, || {
            format!("g={g} d={d}: χ = {chi}, generating function gives {expected}")
        })?;
        ensure(b == sym_betti_sequence(g, d).map_err(err)?, || {
            format!("g={g} d={d}: sequence mismatch")
        })?;
    }
    Ok("exhaustive small shapes + 600 seeded cases + rank grid".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (
            "Sym^d Betti numbers: closed form equals invariant rank",
            betti_agreement,
        ),
        ("b_2(Sym^d X) = C(2g,2) + 1", second_betti_of_sym),
        ("H^*(Sym^d X) generated by eta and lambda_i", generation),
        (
            "b_2(Q(r,d)) = C(2g,2) + 2 and the (2,2,2) polynomial",
            quot_second_betti,
        ),
        ("Q(r,1) = X x P^{r-1}; Quot polynomials palindromic", quot_consistency),
        (
            "Universal divisor pairing table matches the case analysis",
            pairing_tables,
        ),
        ("Universal divisor closed formula, n forced to d", closed_formula),
        (
            "Universal divisor restricts to eta and slants to lambda_i",
            divisor_classes,
        ),
        ("Chern identities on P^1 x X: C1 = 0, C2 = 0, C4 = 1", chern_identities),
        ("f_d pulls back to the identity on H^2", pullback_matrices),
        ("Brauer ranks agree across Pic, Sym and Quot", brauer_ranks),
        ("Ring and rank property suite", property_suite),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {name} ({detail})", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL [{:>2}] {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
