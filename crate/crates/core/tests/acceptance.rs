//! Acceptance suite: each criterion runs against its full grid, is timed
//! against its budget and reports one PASS/FAIL line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use k0ring::analysis::{m_at_one_expected, small_rational_roots, sturm_real_count};
use k0ring::characters::{brauer_equal, char_of_elt};
use k0ring::family::{f_base, f_g_closed, f_iter, m_shared};
use k0ring::modp::{fiber_report, twist_congruence, twist_power_congruence, EXACT_ITERATE_CAP};
use k0ring::numth::{prime_power_grid, primes_up_to};
use k0ring::ring::{identity_sweep, unreduced_sides, Identity};
use k0ring::sample::{near_miss, SymCombo};
use k0ring::steinberg::{basis_elt, decompose, jh_sym, unitriangular_determinant, SteinbergIndex, SteinbergVector};
use k0ring::{GroundField, IntPoly};

const SEED: u64 = 20_240_601;

fn ring_grid() -> Vec<GroundField> {
    prime_power_grid(&[2, 3, 5, 7, 11, 13], 2200)
        .into_iter()
        .map(|(p, g)| GroundField::new(p, g).unwrap())
        .collect()
}

fn modp_grid() -> Vec<GroundField> {
    prime_power_grid(&primes_up_to(50), 100_000)
        .into_iter()
        .map(|(p, g)| GroundField::new(p, g).unwrap())
        .collect()
}

fn tag(f: &GroundField) -> String {
    format!("p={},g={}", f.p(), f.g())
}

/// `Ok(summary)` on success, `Err(first failure)` otherwise.
type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_closed_form() -> Outcome {
    let grid = ring_grid();
    for f in &grid {
        let (p, g) = (f.p(), f.g());
        ensure(f_iter(p, g).unwrap() == f_g_closed(p, g).unwrap(), || {
            format!("f^[g] differs from the closed form at {}", tag(f))
        })?;
    }
    Ok(format!("{} fields", grid.len()))
}

fn c2_specific_polynomials() -> Outcome {
    let cases = [
        (2, 1, vec![-2, 0, 1]),
        (3, 1, vec![0, -3, 0, 1]),
        (5, 1, vec![0, 5, 0, -5, 0, 1]),
        (2, 2, vec![2, 0, -4, 0, 1]),
    ];
    for (p, g, c) in cases {
        let want = IntPoly::from_i64s(&c);
        ensure(f_iter(p, g).unwrap() == want, || format!("f^[{g}] for p={p}"))?;
        ensure(f_g_closed(p, g).unwrap() == want, || format!("closed form for p={p}, g={g}"))?;
    }
    for p in [2, 3, 5] {
        ensure(f_base(p).unwrap() == f_iter(p, 1).unwrap(), || format!("f for p={p}"))?;
    }
    Ok("4 polynomials".into())
}

fn c3_identities() -> Outcome {
    let grid = ring_grid();
    let mut checked = 0;
    for f in &grid {
        let r = identity_sweep(f, &Identity::ALL, 500, SEED);
        checked += r.checked;
        if let Some(c) = r.counterexamples.first() {
            return Err(format!("{} fails at {} k={} h={}", c.which, tag(f), c.k, c.h));
        }
    }
    // Pre-reduction behaviour in Z[x].
    let mut sigma_failures = 0;
    for f in grid.iter().filter(|f| f.q() <= 64) {
        let (p, q) = (f.p(), f.q());
        let lo = 2 * p as i64;
        for k in lo..lo + 40 {
            for h in [-7, -3, -1, 0, 1, 2, 4, 9, 17] {
                let (l, r) = unreduced_sides(Identity::Pi, k, h, p, q).unwrap();
                ensure(l == r, || format!("pi pre-reduction at {} k={k} h={h}", tag(f)))?;
            }
            let (l, r) = unreduced_sides(Identity::Phi, k, 0, p, q).unwrap();
            ensure(l == r, || format!("phi pre-reduction at {} k={k}", tag(f)))?;
            let (l, r) = unreduced_sides(Identity::Sigma, k, 0, p, q).unwrap();
            if l != r {
                sigma_failures += 1;
            }
        }
    }
    ensure(sigma_failures > 0, || "sigma held in Z[x] for every tested k".into())?;
    Ok(format!(
        "{} fields, {checked} reduced checks, sigma fails before reduction {sigma_failures} times",
        grid.len()
    ))
}

fn unit(f: &GroundField, digits: Vec<i64>) -> SteinbergVector {
    SteinbergVector::unit(&SteinbergIndex::new(digits, f).unwrap(), f)
}

fn c4_steinberg() -> Outcome {
    let grid = ring_grid();
    for f in &grid {
        for k in 0..=200 {
            // jh_sym itself enforces nonnegativity and the dimension identity.
            jh_sym(k, f).map_err(|e| format!("{} k={k}: {e}", tag(f)))?;
        }
    }
    let f21 = GroundField::new(2, 1).unwrap();
    let want = unit(&f21, vec![1]).checked_add(&unit(&f21, vec![0])).unwrap();
    ensure(jh_sym(2, &f21).unwrap() == want, || "M_2 = M_1 + M_0 at p=2,g=1".into())?;
    let f31 = GroundField::new(3, 1).unwrap();
    let m1 = unit(&f31, vec![1]);
    ensure(jh_sym(3, &f31).unwrap() == m1.checked_add(&m1).unwrap(), || "M_3 = 2 M_1".into())?;
    let f22 = GroundField::new(2, 2).unwrap();
    let want = unit(&f22, vec![0, 1]).checked_add(&unit(&f22, vec![0, 0])).unwrap();
    ensure(jh_sym(2, &f22).unwrap() == want, || "M_2 = M_1^[1] + M_0 at p=2,g=2".into())?;
    let mut golden = 3;
    for f in grid.iter().filter(|f| f.p() >= 3) {
        let g = f.g() as usize;
        let p = f.p() as i64;
        let mut twisted = vec![0; g];
        twisted[1 % g] = 1;
        let mut low = vec![0; g];
        low[0] = p - 2;
        let want = unit(f, twisted).checked_add(&unit(f, low)).unwrap();
        ensure(jh_sym(p, f).unwrap() == want, || format!("M_p golden at {}", tag(f)))?;
        golden += 1;
    }
    Ok(format!("{} fields x 201 powers, {golden} golden cases", grid.len()))
}

fn c5_oracle() -> Outcome {
    let grid = ring_grid();
    let mut equal_pairs = 0;
    for f in &grid {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (f.p() << 8 | f.g() as u64));
        for t in 0..200 {
            let combo = SymCombo::random(f, &mut rng);
            let a = combo.eval(f);
            let (kind, b) = match t % 4 {
                0 => ("near-miss", near_miss(&a, &mut rng)),
                1 => ("rewritten", combo.eval_rewritten(f)),
                _ => ("random", SymCombo::random(f, &mut rng).eval(f)),
            };
            let same = a == b;
            equal_pairs += same as usize;
            let oracle = brauer_equal(&char_of_elt(&a), &char_of_elt(&b), f);
            ensure(same == oracle, || {
                format!("{} {kind} pair #{t}: residues equal {same}, characters equal {oracle}", tag(f))
            })?;
        }
    }
    Ok(format!(
        "{} fields x 200 pairs (50 near-miss each), {equal_pairs} equal pairs",
        grid.len()
    ))
}

fn c6_modp() -> Outcome {
    let grid = modp_grid();
    for f in &grid {
        let r = fiber_report(f);
        ensure(r.all_pass(), || format!("fiber checks at {}: {:?}", tag(f), r.checks))?;
    }
    Ok(format!("{} fields, q up to 10^5", grid.len()))
}

fn c7_frobenius() -> Outcome {
    let grid = modp_grid();
    for f in &grid {
        for i in 0..=f.g() {
            ensure(twist_power_congruence(f, i).unwrap(), || format!("f^[{i}] at {}", tag(f)))?;
        }
    }
    let small: Vec<&GroundField> = grid
        .iter()
        .filter(|f| f.p() <= 7 && f.q() <= EXACT_ITERATE_CAP)
        .collect();
    for f in &small {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (f.p() << 8 | f.g() as u64));
        for t in 0..100 {
            let a = SymCombo::random(f, &mut rng).eval(f);
            let i = rng.gen_range(1..=f.g());
            ensure(twist_congruence(&a, i), || format!("element #{t} at {} i={i}", tag(f)))?;
        }
    }
    Ok(format!(
        "{} fields for f^[i], {} fields x 100 elements for a^[i] (p <= 7, q <= {EXACT_ITERATE_CAP})",
        grid.len(),
        small.len()
    ))
}

fn c8_roots() -> Outcome {
    for p in primes_up_to(200).into_iter().filter(|&p| p >= 3) {
        let a = &f_base(p).unwrap() - &IntPoly::x();
        let roots = small_rational_roots(&a, 2).unwrap();
        let want: &[i64] = if p == 3 { &[-2, 0, 2] } else { &[-2, -1, 0, 1, 2] };
        ensure(want.iter().all(|r| roots.contains(r)), || format!("roots {roots:?} at p={p}"))?;
    }
    for p in primes_up_to(50) {
        let a = &f_base(p).unwrap() - &IntPoly::x();
        let n = sturm_real_count(&a).map_err(|e| format!("p={p}: {e}"))?;
        ensure(n == p as usize, || format!("{n} real roots at p={p}"))?;
    }
    for n in 0..=1000u64 {
        let m = m_shared(n as usize);
        ensure(m.eval_i64(2) == BigInt::from(n + 1), || format!("m_{n}(2)"))?;
        ensure(m.eval_i64(1) == BigInt::from(m_at_one_expected(n)), || format!("m_{n}(1)"))?;
    }
    Ok("roots for p <= 200, Sturm for p <= 50, special values for n <= 1000".into())
}

fn c9_structure() -> Outcome {
    let grid = ring_grid();
    let mut tuples = 0;
    for f in &grid {
        let det = unitriangular_determinant(f).map_err(|e| format!("{}: {e}", tag(f)))?;
        ensure(det.is_one(), || format!("determinant {det} at {}", tag(f)))?;
        for n in 0..f.q() {
            let idx = SteinbergIndex::from_n(n, f);
            let twisted = decompose(&basis_elt(&idx, f).frobenius_twist(1));
            ensure(twisted == SteinbergVector::unit(&idx.rotated(), f), || {
                format!("twist of ({idx}) at {}", tag(f))
            })?;
            tuples += 1;
        }
    }
    Ok(format!("{} fields, {tuples} tuples", grid.len()))
}

// Built with `harness = false` so the criterion lines are never captured.
fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 9] = [
        ("1 presentation closed form", 5, c1_closed_form),
        ("2 specific polynomials", 1, c2_specific_polynomials),
        ("3 identity suite", 30, c3_identities),
        ("4 Steinberg decomposition", 30, c4_steinberg),
        ("5 oracle equivalence", 60, c5_oracle),
        ("6 mod-p structure", 60, c6_modp),
        ("7 Frobenius/power congruence", 60, c7_frobenius),
        ("8 root observations", 30, c8_roots),
        ("9 structural", 10, c9_structure),
    ];
    let mut failed = Vec::new();
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(s), true) => ("PASS", s.clone()),
            (Ok(s), false) => ("FAIL", format!("over budget; {s}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        println!("criterion {name}: {status} ({:.2}s of {budget}s) {detail}", elapsed.as_secs_f64());
        if status == "FAIL" {
            failed.push(name);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
