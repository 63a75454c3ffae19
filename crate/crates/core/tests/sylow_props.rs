use num_bigint::BigUint;
use sylowchar::partition::Partition;
use sylowchar::sylow::{distribution, enumeration_oracle, sylow_order};

#[test]
fn matches_enumeration() {
    for (p, n) in [(3, 3), (3, 4), (3, 6), (3, 9), (3, 10), (3, 12), (5, 5), (5, 10), (7, 7)] {
        assert_eq!(distribution(p, n).unwrap(), enumeration_oracle(p, n).unwrap(), "({p},{n})");
    }
}

#[test]
fn totals_keys_and_support() {
    for p in [3u64, 5, 7] {
        for n in 0..=60u64 {
            let d = distribution(p, n).unwrap();
            assert_eq!(d.total(), sylow_order(p, n), "({p},{n})");
            for (t, c) in d.iter() {
                assert!(c > &BigUint::from(0u32));
                assert_eq!(t.size(), n);
                for &part in t.parts() {
                    let mut x = u64::from(part);
                    while x % p == 0 {
                        x /= p;
                    }
                    assert_eq!(x, 1, "part {part} of {t:?}");
                }
            }
        }
        let mut m = p;
        while m <= 60 {
            let d = distribution(p, m).unwrap();
            assert!(d.count(&Partition::row(m as u32)) > BigUint::from(0u32));
            m *= p;
        }
    }
}
