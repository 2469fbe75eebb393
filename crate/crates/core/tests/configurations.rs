use necklace::configurations::triangle::triangle_row;
use necklace::configurations::{
    beta, beta_sum_check, brute_configurations, earlier_exact_divisors, f, g, gbar, gf_bivariate_check,
    gf_column_check, necklace_binomial, necklace_poly, z, z_sums, Mode, NecklaceTriangle,
};
use necklace::numtheory::binomial;
use necklace::shape::{is_logconcave, is_unimodal};
use necklace::BigInt;
use proptest::prelude::*;

#[test]
fn symmetry_up_to_200() {
    for t in 0..=200 {
        for k in 0..=t {
            assert_eq!(necklace_binomial(t, k), necklace_binomial(t, t - k), "t={t} k={k}");
        }
    }
}

#[test]
fn pascal_type_recurrence() {
    for t in 2..=200 {
        for k in 0..=t {
            let rhs = necklace_binomial(t - 2, k - 2) + binomial(t - 2, k - 1) + necklace_binomial(t - 2, k);
            assert_eq!(necklace_binomial(t, k), rhs, "t={t} k={k}");
        }
    }
}

#[test]
fn row_sums() {
    let tri = NecklaceTriangle::new(200);
    assert!(tri.row_sums_hold());
    let row5: BigInt = tri.rows[5].iter().sum();
    assert_eq!(row5, BigInt::from(20));
}

#[test]
fn gbar_is_symmetric() {
    for k in 0..=60 {
        for m in 0..=60 {
            assert_eq!(gbar(k, m), gbar(m, k), "k={k} m={m}");
        }
    }
}

#[test]
fn closed_forms_match_enumeration() {
    for n in 0..=16u32 {
        for k in 0..=n {
            let (ki, ni) = (i64::from(k), i64::from(n));
            assert_eq!(g(ki, ni), brute_configurations(k, n, Mode::NoAdjacent).unwrap(), "g k={k} n={n}");
            assert_eq!(beta(ki, ni), brute_configurations(k, n, Mode::MedallionLeft).unwrap(), "beta k={k} n={n}");
            assert_eq!(z(ki, ni), brute_configurations(k, n, Mode::Full).unwrap(), "Z k={k} n={n}");
        }
    }
}

#[test]
fn z_sums_miss_only_the_full_array() {
    for n in 0..=14u32 {
        for k in 0..=n {
            let brute = brute_configurations(k, n, Mode::Full).unwrap();
            let sums = z_sums(i64::from(k), i64::from(n));
            if k == n {
                assert_eq!(brute - sums, BigInt::from(1), "n={n}");
            } else {
                assert_eq!(brute, sums, "k={k} n={n}");
            }
        }
    }
}

#[test]
fn f_counts_unreflected_arrays() {
    for n in 0..=14u32 {
        for k in 0..=n {
            let mut count = 0u64;
            for mask in 0u32..(1 << n) {
                if mask.count_ones() == k && mask & (mask >> 1) == 0 {
                    count += 1;
                }
            }
            assert_eq!(f(i64::from(k), i64::from(n)), BigInt::from(count), "k={k} n={n}");
        }
    }
}

#[test]
fn polynomial_rows_match_triangle() {
    for t in 0..=200u32 {
        assert_eq!(necklace_poly(t).coeffs(), triangle_row(u64::from(t)).as_slice(), "t={t}");
    }
}

fn odd_multiple_pairs(limit: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for j in 1..=limit {
        let mut m = 1;
        while m * j <= limit {
            pairs.push((j, m));
            m += 2;
        }
    }
    pairs
}

#[test]
fn odd_multiples_of_even_index_are_divisible() {
    for (j, m) in odd_multiple_pairs(120) {
        if j % 2 == 0 || j == 1 {
            assert!(necklace_poly(j).divides(&necklace_poly(m * j)), "N_{j} | N_{}", m * j);
        }
    }
}

#[test]
fn odd_index_divisibility_fails() {
    // N_9 at a primitive cube root of unity is 90 + 91w + 91w^2 = -1.
    assert!(!necklace_poly(3).divides(&necklace_poly(9)));
    let failures: Vec<(u32, u32)> = odd_multiple_pairs(120)
        .into_iter()
        .filter(|&(j, m)| !necklace_poly(j).divides(&necklace_poly(m * j)))
        .collect();
    assert_eq!(failures.len(), 60);
    assert!(failures.iter().all(|&(j, _)| j % 2 == 1 && j >= 3));
    // N_3 | N_15 nonetheless.
    assert!(necklace_poly(3).divides(&necklace_poly(15)));
}

#[test]
fn powers_of_two_have_no_earlier_divisor() {
    for j in 1..=6 {
        assert!(earlier_exact_divisors(1 << j).is_empty(), "t = {}", 1 << j);
    }
    assert_eq!(earlier_exact_divisors(6), vec![2]);
}

#[test]
fn rows_are_unimodal_and_logconcave() {
    for t in 0..=200 {
        let row = triangle_row(t);
        assert!(is_unimodal(&row), "t={t}");
        assert!(is_logconcave(&row), "t={t}");
    }
}

#[test]
fn column_generating_functions() {
    for k in 0..=20 {
        assert_eq!(gf_column_check(k, 60), Ok(()), "k={k}");
    }
}

#[test]
fn bivariate_report_is_deterministic() {
    let a = gf_bivariate_check(6).to_string();
    let b = gf_bivariate_check(6).to_string();
    assert_eq!(a, b);
    assert!(gf_bivariate_check(12).derived_form_holds());
}

#[test]
fn beta_sums_follow_the_zero_offset() {
    for t in 1..=40 {
        let r = beta_sum_check(t);
        assert!(r.holds_offset_zero(), "{r}");
    }
}

proptest! {
    #[test]
    fn gbar_matches_shifted_binomial(k in 0i64..80, m in 0i64..80) {
        prop_assert_eq!(gbar(k, m), necklace_binomial(m + k, k));
    }
}
