use munchausen::powersum::PowerTable;
use munchausen::search::Odometer;
use munchausen::{
    find, find_linear, find_multiset, render_json, search_bound, verify, Base, EngineKind, Nat,
    SearchOptions, SearchReport, ZeroPowerConvention,
};
use rand::{Rng, SeedableRng};

fn b(v: u32) -> Base {
    Base::new(v).unwrap()
}

fn values(r: &SearchReport) -> Vec<u64> {
    r.hits
        .iter()
        .map(|h| h.value.to_string().parse().unwrap())
        .collect()
}

const FIGURE: [(u32, &[u64]); 9] = [
    (2, &[1, 2]),
    (3, &[1, 5, 8]),
    (4, &[1, 29, 55]),
    (5, &[1]),
    (6, &[1, 3164, 3416]),
    (7, &[1, 3665]),
    (8, &[1]),
    (9, &[1, 28, 96446, 923362]),
    (10, &[1, 3435]),
];

#[test]
fn engines_agree_for_small_bases() {
    for base in 2..=8 {
        for conv in ZeroPowerConvention::ALL {
            for include_zero in [false, true] {
                let opts = SearchOptions {
                    convention: conv,
                    include_zero,
                    ..SearchOptions::default()
                };
                let linear = find_linear(b(base), &opts).unwrap();
                let multiset = find_multiset(b(base), &opts).unwrap();
                assert_eq!(
                    linear.hits, multiset.hits,
                    "base {base} {conv} zero={include_zero}"
                );
                assert_eq!(linear.notes, multiset.notes);
            }
        }
    }
}

#[test]
fn figure_values_are_complete() {
    for (base, expected) in FIGURE {
        for &n in expected {
            assert!(verify(&Nat::from(n), b(base), ZeroPowerConvention::One).is_munchausen());
        }
        let r = find(b(base), &SearchOptions::default()).unwrap();
        assert_eq!(values(&r), expected, "base {base}");
        let sb = search_bound(b(base));
        assert!(r.hits.iter().all(|h| sb.contains(&h.value)));
    }
    // the linear scan is the completeness witness for bases 2-8
    for (base, expected) in &FIGURE[..7] {
        let r = find_linear(b(*base), &SearchOptions::default()).unwrap();
        assert_eq!(values(&r), *expected);
    }
}

#[test]
fn zero_convention_drops_two_in_base_two() {
    let r = find(
        b(2),
        &SearchOptions::with_convention(ZeroPowerConvention::Zero),
    )
    .unwrap();
    assert!(!values(&r).contains(&2));
}

#[test]
fn base_ten_has_only_one_and_3435() {
    let opts = SearchOptions {
        engine: EngineKind::Multiset,
        ..SearchOptions::default()
    };
    assert_eq!(values(&find(b(10), &opts).unwrap()), vec![1, 3435]);
}

#[test]
fn running_sum_matches_recomputation() {
    let mut rng = seeded_rng();
    for base in [2u32, 3, 7, 10, 16] {
        let table = PowerTable::<u128>::new(b(base), ZeroPowerConvention::One).unwrap();
        let zero_table = PowerTable::<u128>::new(b(base), ZeroPowerConvention::Zero).unwrap();
        for _ in 0..100_000 {
            let start = u128::from(rng.gen::<u64>() >> rng.gen_range(0..64));
            for t in [&table, &zero_table] {
                let mut odo = Odometer::new(t, start);
                odo.advance();
                assert_eq!(*odo.value(), start + 1);
                assert_eq!(
                    *odo.power_sum(),
                    t.sum_of(&(start + 1)),
                    "base {base} start {start}"
                );
            }
        }
        // carry chains b^k - 1 -> b^k
        let mut power = 1u128;
        while let Some(next) = power
            .checked_mul(u128::from(base))
            .filter(|p| *p < 1 << 100)
        {
            power = next;
            let mut odo = Odometer::new(&table, power - 1);
            odo.advance();
            assert_eq!(*odo.power_sum(), table.sum_of(&power));
        }
    }
}

fn seeded_rng() -> rand::rngs::StdRng {
    rand::rngs::StdRng::seed_from_u64(0x3435)
}

fn strip_elapsed(json: &str) -> String {
    let mut v: serde_json::Value = serde_json::from_str(json).unwrap();
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v.to_string()
}

#[test]
fn results_do_not_depend_on_worker_count() {
    for engine in [EngineKind::Linear, EngineKind::Multiset] {
        let run = |jobs| {
            let opts = SearchOptions {
                engine,
                jobs: Some(jobs),
                ..SearchOptions::default()
            };
            strip_elapsed(&render_json(&find(b(7), &opts).unwrap()))
        };
        let single = run(1);
        for jobs in [2, 3, 8] {
            assert_eq!(run(jobs), single);
        }
    }
}
