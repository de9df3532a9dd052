//! Acceptance gate. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triavg::convergents::{cf_sqrt3, numerators};
use triavg::recurrences::{eval_closed_form, eval_iterative, eval_via_l, gf_coefficients, sequence_prefix};
use triavg::triangular::{enumerate_solutions, prefix_sum, prefix_sum_literal, triangular, witness};
use triavg::{BigInt, RecurrenceSpec, SequenceId};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_triavg")).args(args).output().expect("spawn triavg");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn paper_values() -> Check {
    let (code, out) = bin(&["gen", "a", "--count", "6", "--format", "plain"]);
    ensure(code == 0 && out == "0 1 5 20 76 285\n", || format!("gen a: exit {code}, {out:?}"))?;
    let (code, out) = bin(&["gen", "b", "--count", "6", "--format", "plain"]);
    ensure(code == 0 && out == "-1 1 8 34 131 493\n", || format!("gen b: exit {code}, {out:?}"))
}

fn three_way_agreement() -> Check {
    for id in SequenceId::NAMED {
        let spec = id.spec();
        let gf = gf_coefficients(&spec, 64).map_err(|e| e.to_string())?;
        for n in 0..64u64 {
            let it = eval_iterative(&spec, n);
            let closed = eval_closed_form(&spec, n).map_err(|e| e.to_string())?;
            ensure(closed == it, || format!("{id} n={n}: closed {closed} vs iterative {it}"))?;
            ensure(gf[n as usize] == it, || format!("{id} n={n}: gf {} vs iterative {it}", gf[n as usize]))?;
            if n >= 1 {
                let via_l = eval_via_l(&spec, n).map_err(|e| e.to_string())?;
                ensure(via_l == it, || format!("{id} n={n}: L-form {via_l} vs iterative {it}"))?;
            }
        }
    }
    Ok(())
}

fn main_theorem() -> Check {
    let mut widest = 0;
    for n in 1..=40 {
        let w = witness(n).map_err(|e| e.to_string())?;
        ensure(w.verify(), || format!("n={n}: witness fails re-verification"))?;
        // fresh recomputation, independent of the witness internals
        let s = &w.s;
        ensure(&w.avg * s == prefix_sum(s).unwrap(), || format!("n={n}: s·avg != Σ T_k"))?;
        ensure(w.avg == triangular(&w.r).unwrap(), || format!("n={n}: avg != T_r"))?;
        if let Ok(small) = u64::try_from(s) {
            if small <= 100_000 {
                ensure(prefix_sum_literal(small) == w.sum, || format!("n={n}: literal sum mismatch"))?;
            }
        }
        widest = widest.max(w.avg.to_string().len());
    }
    ensure(widest > 40, || format!("largest average only has {widest} digits"))
}

fn diophantine_oracle() -> Check {
    let s_max = BigInt::from(1_000_000);
    let brute: BTreeSet<(BigInt, BigInt)> = enumerate_solutions(&s_max).map_err(|e| e.to_string())?.into_iter().collect();
    let from_recurrences: BTreeSet<(BigInt, BigInt)> = SequenceId::B
        .spec()
        .terms()
        .zip(SequenceId::A.spec().terms())
        .skip(1)
        .take_while(|(b, _)| b <= &s_max)
        .collect();
    let listed: BTreeSet<(BigInt, BigInt)> = [
        (1, 1),
        (8, 5),
        (34, 20),
        (131, 76),
        (493, 285),
        (1844, 1065),
        (6886, 3976),
        (25703, 14840),
        (95929, 55385),
        (358016, 206701),
    ]
    .into_iter()
    .map(|(s, r)| (BigInt::from(s), BigInt::from(r)))
    .collect();
    ensure(brute == from_recurrences, || format!("brute {brute:?} vs recurrences {from_recurrences:?}"))?;
    ensure(brute == listed, || format!("brute {brute:?} vs listed pairs"))
}

fn full_identity_suite() -> Check {
    let (code, out) = bin(&["verify", "--suite", "all", "--max-n", "200"]);
    ensure(code == 0, || format!("exit {code}:\n{out}"))?;
    for suite in ["lucas", "discriminant", "v-square", "congruences", "linkages"] {
        ensure(out.lines().any(|l| l.starts_with(&format!("PASS {suite} "))), || {
            format!("no PASS line for {suite}:\n{out}")
        })?;
    }
    ensure(out.lines().all(|l| l.starts_with("PASS ")), || out.clone())
}

fn bisection() -> Check {
    let u = sequence_prefix(&SequenceId::U, 65).map_err(|e| e.to_string())?;
    let l = sequence_prefix(&SequenceId::L, 65).map_err(|e| e.to_string())?;
    let conv = cf_sqrt3(2 * 64 + 2).map_err(|e| e.to_string())?;
    let z = numerators(2 * 64 + 2).map_err(|e| e.to_string())?;
    ensure(z[..8] == ints(&[1, 1, 2, 5, 7, 19, 26, 71]), || format!("z prefix {:?}", &z[..8]))?;
    for m in 0..=64usize {
        ensure(u[m] == z[2 * m + 1], || format!("m={m}: u {} vs z {}", u[m], z[2 * m + 1]))?;
        ensure(&l[m] % 2 == BigInt::from(0), || format!("m={m}: L_m odd"))?;
        ensure(z[2 * m] == &l[m] / 2, || format!("m={m}: z_2m != L_m/2"))?;
    }
    for c in &conv {
        let norm = c.norm();
        let ok = [1, -1, 2, -2].iter().any(|&v| norm == BigInt::from(v));
        ensure(ok, || format!("convergent {}: |p^2 - 3q^2| = {norm}", c.idx))?;
    }
    Ok(())
}

fn randomized_recurrences() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7269_6176);
    let bound = 1i64 << 32;
    for trial in 0..1000 {
        let mut draw = || BigInt::from(rng.random_range(-bound..=bound));
        let spec = RecurrenceSpec::new(draw(), draw(), draw());
        let w: Vec<BigInt> = spec.terms().take(21).collect();
        for n in 2..=20 {
            let lhs = &w[n] - &w[n - 1] * 4 + &w[n - 2];
            ensure(lhs == spec.k, || format!("trial {trial} {spec} n={n}: residual {lhs}"))?;
        }
        for n in 0..=20u64 {
            let closed = eval_closed_form(&spec, n).map_err(|e| format!("trial {trial}: {e}"))?;
            ensure(closed == w[n as usize], || format!("trial {trial} {spec} n={n}: closed form differs"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 paper value reproduction", paper_values, Duration::from_secs(1)),
        ("2 three-way evaluator agreement", three_way_agreement, Duration::from_secs(5)),
        ("3 main theorem for n = 1..40", main_theorem, Duration::from_secs(5)),
        ("4 brute-force Diophantine oracle to 10^6", diophantine_oracle, Duration::from_secs(60)),
        ("5 identity suite to max-n 200", full_identity_suite, Duration::from_secs(10)),
        ("6 bisection u_n = z_2n+1", bisection, Duration::from_secs(1)),
        ("7 randomized recurrence property", randomized_recurrences, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
        });
        match result {
            Ok(()) => println!("PASS [{name}] ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{name}] ({elapsed:.2?}): {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
