use num_bigint::{BigInt, BigUint};
use sylowchar::character::{class_size, degree, factorial, CharacterEvaluator};
use sylowchar::partition::{enumerate_partitions, Partition};

#[test]
fn column_orthogonality() {
    let chars = CharacterEvaluator::new();
    for n in 1..=8u32 {
        let shapes = enumerate_partitions(n).unwrap();
        let classes = &shapes;
        let total = BigInt::from(factorial(n.into()));
        for a in &shapes {
            for b in &shapes {
                let mut sum = BigInt::from(0);
                for c in classes {
                    sum += BigInt::from(class_size(c))
                        * chars.character(a, c).unwrap()
                        * chars.character(b, c).unwrap();
                }
                let expected = if a == b { total.clone() } else { BigInt::from(0) };
                assert_eq!(sum, expected, "{a:?} vs {b:?}");
            }
        }
    }
}

#[test]
fn degree_is_value_at_identity() {
    let chars = CharacterEvaluator::new();
    for n in 1..=12u32 {
        for lambda in enumerate_partitions(n).unwrap() {
            let at_one = chars.character(&lambda, &Partition::column(n)).unwrap();
            assert_eq!(at_one, BigInt::from(degree(&lambda)), "{lambda:?}");
        }
    }
}

#[test]
fn conjugation_twists_by_sign() {
    let chars = CharacterEvaluator::new();
    for n in 1..=10u32 {
        for lambda in enumerate_partitions(n).unwrap() {
            for c in enumerate_partitions(n).unwrap() {
                let sign = if (n as usize - c.len()).is_multiple_of(2) { 1 } else { -1 };
                assert_eq!(
                    chars.character(&lambda.conjugate(), &c).unwrap(),
                    chars.character(&lambda, &c).unwrap() * sign,
                    "{lambda:?} at {c:?}"
                );
            }
        }
    }
}

#[test]
fn standard_character_counts_fixed_points() {
    let chars = CharacterEvaluator::new();
    for n in 2..=12u32 {
        let standard = Partition::hook(n - 1, 1);
        for c in enumerate_partitions(n).unwrap() {
            let fixed = c.parts().iter().filter(|&&x| x == 1).count() as i64;
            assert_eq!(chars.character(&standard, &c).unwrap(), BigInt::from(fixed - 1));
        }
    }
}

#[test]
fn degrees_square_sum_to_factorial() {
    for n in 1..=14u32 {
        let sum: BigUint = enumerate_partitions(n)
            .unwrap()
            .iter()
            .map(|l| degree(l).pow(2))
            .sum();
        assert_eq!(sum, factorial(n.into()));
    }
}
