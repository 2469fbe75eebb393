use necklace::necklaces::*;
use necklace::numtheory::{binomial, is_prime, lucas, primes_below};
use necklace::poly::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn sign_rule_splits_macmahon() {
    for n in 1..=500 {
        assert_eq!(allowed(n).unwrap() + forbidden(n).unwrap(), macmahon(n).unwrap(), "n={n}");
    }
}

#[test]
fn sign_rule_matches_parity_formulas() {
    for n in 1..=16u32 {
        let c = classify_susy(n).unwrap();
        assert_eq!(BigInt::from(c.allowed.len()), allowed(n.into()).unwrap(), "n={n}");
        assert_eq!(BigInt::from(c.forbidden.len()), forbidden(n.into()).unwrap(), "n={n}");
        for class in c.allowed.iter().chain(&c.forbidden) {
            assert_eq!(n % class.period, 0);
        }
    }
}

#[test]
fn row_sums_give_w() {
    for n in 1..=300 {
        assert_eq!(CountRow::new(n).unwrap().total(), w(n).unwrap(), "n={n}");
    }
}

#[test]
fn catalan_diagonal() {
    for k in 0..=40u64 {
        let catalan = binomial(2 * k as i64 + 1, k as i64) / BigInt::from(2 * k + 1);
        assert_eq!(w_k(3 * k + 1, k).unwrap(), catalan, "k={k}");
    }
}

#[test]
fn row_polynomial_routes_agree() {
    for n in 1..=150 {
        assert_eq!(rowsum_poly(n).unwrap(), rowsum_poly_by_v(n).unwrap(), "n={n}");
    }
}

#[test]
fn prime_rows() {
    for p in primes_below(32) {
        assert_eq!(rowsum_poly_prime(p), rowsum_poly_by_v(p).unwrap(), "p={p}");
    }
    assert!(is_prime(31));
}

#[test]
fn v_polynomial_identity() {
    for m in 1..=100u64 {
        let lhs = v_poly(m);
        let rhs = v_identity_rhs(m);
        let md = BigInt::from(m);
        for (k, r) in rhs.iter().enumerate() {
            assert_eq!(BigRational::new(lhs.coeff(k), md.clone()), *r, "m={m} k={k}");
        }
        assert_eq!(lhs.degree(), Some((m / 2) as usize));
    }
}

#[test]
fn lucas_evaluation() {
    for n in 1..=300u64 {
        let sum: BigRational = v_identity_rhs(n).into_iter().sum();
        assert_eq!(sum, BigRational::new(lucas(n), BigInt::from(n)), "n={n}");
    }
}

#[test]
fn diagonal_series() {
    for k in 1..=20u64 {
        let coeffs = diagonal_gf(k).unwrap().series_coefficients((2 * k + 61) as usize).unwrap();
        for n in 0..2 * k {
            assert!(coeffs[n as usize].is_zero());
        }
        for n in 2 * k..=2 * k + 60 {
            assert_eq!(
                coeffs[n as usize],
                BigRational::from_integer(w_k(n, k).unwrap()),
                "k={k} n={n}"
            );
        }
    }
}

fn cyclotomic_power_product(k: u64) -> IntPolynomial {
    necklace::numtheory::divisors(k)
        .unwrap()
        .into_iter()
        .map(|d| necklace::numtheory::cyclotomic(d).unwrap().pow((k / d) as u32))
        .product()
}

#[test]
fn diagonal_denominator_is_cyclotomic() {
    for k in 1..=40u64 {
        let lhs = diagonal_denominator(k).unwrap();
        let mut rhs = cyclotomic_power_product(k);
        if k % 2 == 1 {
            rhs = -rhs;
        }
        assert_eq!(lhs, rhs, "k={k}");
    }
}

#[test]
fn diagonal_reduced_denominator() {
    // After cancelling, the denominator keeps the full cyclotomic product.
    for k in 1..=12u64 {
        let reduced = diagonal_gf(k).unwrap().reduce();
        let prod = cyclotomic_power_product(k);
        assert_eq!(reduced.den.primitive_part(), prod.primitive_part().clone(), "k={k}");
    }
}

#[test]
fn molien_matches_series_and_w() {
    for k in 1..=12u64 {
        let series = molien_series_zk(k).unwrap().series_coefficients(40).unwrap();
        for n in 0..40u64 {
            let exact = molien_zk(n, k).unwrap();
            assert_eq!(series[n as usize], BigRational::from_integer(exact.clone()));
            assert_eq!(w_k(n + 2 * k, k).unwrap(), exact);
        }
    }
}

#[test]
fn molien_swap_is_necklace_binomial() {
    use necklace::configurations::necklace_binomial;
    for m in 1..=10u32 {
        let c = molien_s2(m, 60).unwrap();
        for (i, v) in c.iter().enumerate() {
            let t = i as i64 + 2 * m as i64 - 1;
            assert_eq!(*v, necklace_binomial(t, 2 * m as i64 - 1), "m={m} i={i}");
        }
    }
}

#[test]
fn brute_force_counts() {
    for n in 1..=20u32 {
        assert_eq!(brute_necklaces(n, no_adjacent_red).unwrap(), w(n.into()).unwrap(), "n={n}");
        assert_eq!(brute_necklaces(n, |_, _| true).unwrap(), macmahon(n.into()).unwrap());
        for k in 0..=n / 2 {
            let count = brute_necklaces(n, |m, n| no_adjacent_red(m, n) && m.count_ones() == k).unwrap();
            assert_eq!(count, w_k(n.into(), k.into()).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn w_k_beyond_half_is_zero() {
    assert!(w_k(9, 5).unwrap().is_zero());
    assert!(w_k(8, 4).unwrap().is_one());
}

#[test]
fn csv_rows() {
    let rows: Vec<CountRow> = (1..=3).map(|n| CountRow::new(n).unwrap()).collect();
    let mut buf = Vec::new();
    write_count_rows_csv(&mut buf, &rows).unwrap();
    assert_eq!(
        String::from_utf8(buf).unwrap(),
        "n,k,w_k\n1,0,1\n2,0,1\n2,1,1\n3,0,1\n3,1,1\n"
    );
}

proptest! {
    #[test]
    fn w_k_is_integral_and_bounded(n in 1u64..400, k in 0u64..200) {
        let v = w_k(n, k).unwrap();
        prop_assert!(v >= BigInt::zero());
        prop_assert!(v <= binomial((n - k.min(n)) as i64, k as i64));
    }
}
