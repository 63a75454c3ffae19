//! One PASS/FAIL line per acceptance criterion. All comparisons are exact;
//! the only tolerances are the wall-clock limits pinned below.

mod common;

use std::time::{Duration, Instant};

use common::explicit_f;
use num_bigint::{BigInt, BigUint};
use sylowchar::character::{class_size, factorial, CharacterEvaluator};
use sylowchar::lr::{lr_coefficient, restriction_oracle};
use sylowchar::multiplicity::{verify_d_equals_a, verify_lemma_tables, MultiplicityReport};
use sylowchar::omega::{omega, residue_decompose};
use sylowchar::partition::{enumerate_partitions, partition_count, Partition, SkewShape};
use sylowchar::sylow::{distribution, enumeration_oracle};
use sylowchar::Limits;

const LIMIT_NINE: Duration = Duration::from_secs(1);
const LIMIT_P3_SCAN: Duration = Duration::from_secs(10);
const LIMIT_P5_SCAN: Duration = Duration::from_secs(300);
const LIMIT_COUNTS: Duration = Duration::from_secs(900);
const LIMIT_SETS: Duration = Duration::from_secs(600);
const LIMIT_OTHER: Duration = Duration::from_secs(600);

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn set(shapes: &[&str]) -> Vec<Partition> {
    shapes.iter().map(|s| p(s)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report(prime: u64, n: u64) -> Result<MultiplicityReport, String> {
    MultiplicityReport::compute(prime, n, &Limits::default()).map_err(|e| e.to_string())
}

/// Exceptional zero sets as stated for `p = 3`.
fn stated_p3(n: u64) -> Vec<Partition> {
    match n {
        3 => set(&["2,1"]),
        4 => set(&["2,2"]),
        6 => set(&["3,2,1"]),
        9 => set(&["8,1", "5,4", "4,3,2", "3,3,2,1", "2^4,1", "2,1^7"]),
        10 => set(&["5,5", "2^5"]),
        _ => Vec::new(),
    }
}

fn criterion_1() -> Check {
    let r = report(3, 9)?;
    ensure(r.entries.len() == 30, || format!("{} partitions scanned", r.entries.len()))?;
    ensure(r.zero_set == stated_p3(9), || format!("zero set {:?}", r.zero_set))
}

fn criterion_2() -> Check {
    for n in 1..=12 {
        let r = report(3, n)?;
        ensure(r.zero_set == stated_p3(n), || format!("n={n}: zero set {:?}", r.zero_set))?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    for n in 1..=10 {
        let expected = if n == 5 { set(&["4,1", "2,1^3"]) } else { Vec::new() };
        let r = report(5, n)?;
        ensure(r.zero_set == expected, || format!("n={n}: zero set {:?}", r.zero_set))?;
    }
    let r = report(5, 25)?;
    ensure(r.entries.len() == 1958, || format!("{} partitions of 25", r.entries.len()))?;
    ensure(r.zero_set == set(&["24,1", "2,1^23"]), || format!("n=25: zero set {:?}", r.zero_set))
}

fn criterion_4() -> Check {
    let c27 = report(3, 27)?.constituent_count() as u128;
    ensure(c27 == partition_count(27) - 2 && c27 == 3008, || format!("n=27: {c27}"))?;
    let c12 = report(3, 12)?.constituent_count() as u128;
    ensure(c12 == partition_count(12) && c12 == 77, || format!("n=12: {c12}"))
}

fn criterion_5() -> Check {
    let lambda = p("9,8,7,7,6,4,4,3");
    let dec = residue_decompose(&lambda, 3).map_err(|e| e.to_string())?;
    let out = omega(&lambda, 3).map_err(|e| e.to_string())?;
    ensure(dec.zeta == 2 && out == p("6,5,5,5,4,3,2,2"), || {
        format!("zeta {} omega {out:?}", dec.zeta)
    })
}

fn criterion_6() -> Check {
    let limits = Limits::default();
    let r = verify_d_equals_a(2, 3, 2, &limits).map_err(|e| e.to_string())?;
    ensure(r.equal && r.scanned == 385, || {
        format!("(2,3,2): scanned {}, A\\D {:?}, D\\A {:?}", r.scanned, r.a_minus_d, r.d_minus_a)
    })?;
    let r = verify_d_equals_a(5, 5, 1, &limits).map_err(|e| e.to_string())?;
    ensure(r.equal, || format!("(5,5,1): A\\D {:?}, D\\A {:?}", r.a_minus_d, r.d_minus_a))?;
    let r = verify_d_equals_a(2, 5, 1, &limits).map_err(|e| e.to_string())?;
    ensure(!r.a_minus_d.is_empty() && r.d_minus_a.is_empty(), || {
        format!("(2,5,1): A\\D {:?}, D\\A {:?}", r.a_minus_d, r.d_minus_a)
    })
}

fn criterion_7() -> Check {
    for k in [2, 3] {
        let r = verify_lemma_tables(3, k, &Limits::default()).map_err(|e| e.to_string())?;
        if let Some(bad) = r.checks.iter().find(|c| !c.pass) {
            return Err(format!("3^{k}: {:?}", bad.row));
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    for (prime, n) in [(3, 3), (3, 4), (3, 6), (3, 9), (3, 10), (3, 12), (5, 5), (5, 10), (7, 7)] {
        let a = distribution(prime, n).map_err(|e| e.to_string())?;
        let b = enumeration_oracle(prime, n).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("distribution ({prime},{n})"))?;
    }
    for n in 1..=8u32 {
        for lambda in enumerate_partitions(n).unwrap() {
            for m in 0..=n {
                for mu in enumerate_partitions(m).unwrap() {
                    for nu in enumerate_partitions(n - m).unwrap() {
                        let c = lr_coefficient(&lambda, &mu, &nu).map_err(|e| e.to_string())?;
                        let o = restriction_oracle(&lambda, &mu, &nu).map_err(|e| e.to_string())?;
                        ensure(c == o, || format!("c({lambda:?};{mu:?},{nu:?}) {c} vs {o}"))?;
                    }
                }
            }
        }
    }
    for n in 1..=10 {
        for (lambda, f) in report(3, n)?.entries {
            let g = explicit_f(3, n, &lambda);
            ensure(f == g, || format!("f{lambda:?} {f} vs {g}"))?;
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    let chars = CharacterEvaluator::new();
    for n in 1..=8u32 {
        let shapes = enumerate_partitions(n).unwrap();
        for a in &shapes {
            for b in &shapes {
                let mut sum = BigInt::from(0);
                for c in &shapes {
                    sum += BigInt::from(class_size(c))
                        * chars.character(a, c).unwrap()
                        * chars.character(b, c).unwrap();
                }
                let expected = if a == b { BigInt::from(factorial(n.into())) } else { BigInt::from(0) };
                ensure(sum == expected, || format!("orthogonality {a:?} {b:?}"))?;
            }
        }
    }

    let nine = report(3, 9)?;
    let weighted: BigUint = nine
        .entries
        .iter()
        .map(|(l, f)| f * sylowchar::degree(l))
        .sum();
    ensure(weighted == BigUint::from(4480u32), || format!("(3,9) weighted sum {weighted}"))?;
    for (prime, max) in [(3u64, 27u64), (5, 25), (7, 21)] {
        for n in 1..=max {
            let r = report(prime, n)?;
            ensure(r.degree_identity, || format!("degree identity ({prime},{n})"))?;
            ensure(r.conjugation_symmetry, || format!("conjugation symmetry ({prime},{n})"))?;
        }
    }

    for q in [2u32, 3] {
        for n in 5..=10u32 {
            let near_row = Partition::hook(n - 1, 1);
            for lambda in enumerate_partitions(q * n).unwrap() {
                let out = omega(&lambda, q).map_err(|e| e.to_string())?;
                for (i, &part) in lambda.parts().iter().enumerate() {
                    let lost = part - out.part(i);
                    ensure(lost == part / q || lost == part / q + 1, || {
                        format!("rounding q={q} {lambda:?} -> {out:?}")
                    })?;
                }
                let shape = SkewShape::new(lambda.clone(), out).map_err(|e| e.to_string())?;
                ensure(
                    shape.as_translated_diagram() != Some(near_row.clone())
                        && shape.as_rotated_diagram() != Some(near_row.clone()),
                    || format!("near-row difference q={q} {lambda:?}"),
                )?;
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("zero set of f at 9, p = 3", LIMIT_NINE, criterion_1),
        ("zero sets for p = 3, n <= 12", LIMIT_P3_SCAN, criterion_2),
        ("zero sets for p = 5, n <= 10 and n = 25", LIMIT_P5_SCAN, criterion_3),
        ("constituent counts at (3,27) and (3,12)", LIMIT_COUNTS, criterion_4),
        ("omega worked example", LIMIT_OTHER, criterion_5),
        ("D = A at (2,3,2) and (5,5,1); A strictly larger at (2,5,1)", LIMIT_SETS, criterion_6),
        ("constituent tables at 9 and 27", LIMIT_OTHER, criterion_7),
        ("oracle equivalences", LIMIT_OTHER, criterion_8),
        ("invariant suites", LIMIT_OTHER, criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= *limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed:.2?}, limit {limit:?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
