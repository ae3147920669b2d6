use num_bigint::BigInt;
use polycore::{parse, IntPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootbounds::{
    cauchy_bound, graeffe, knuth_bound, mahler_upper, refined_root_bound, zassenhaus_bound,
};

fn product_of_linear_factors(rng: &mut ChaCha8Rng, max_deg: usize) -> (IntPoly, Vec<i64>, i64) {
    let deg = rng.random_range(1..=max_deg);
    let lc = *[1i64, 2, 3, -1, -2].get(rng.random_range(0..5)).unwrap();
    let mut f = IntPoly::constant(BigInt::from(lc));
    let mut roots = Vec::new();
    for _ in 0..deg {
        let r: i64 = rng.random_range(-9..=9);
        roots.push(r);
        f = &f * &IntPoly::from_descending_i64(&[1, -r]);
    }
    (f, roots, lc)
}

#[test]
fn root_bounds_valid_on_known_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let (f, roots, _) = product_of_linear_factors(&mut rng, 8);
        let max_root = roots.iter().map(|r| r.abs()).max().unwrap() as f64;
        let d = f.degree().unwrap() as f64;

        let k = knuth_bound(&f).unwrap().value();
        let z = zassenhaus_bound(&f).unwrap().value();
        let c = cauchy_bound(&f).unwrap().bound.value();
        let r = refined_root_bound(&f).unwrap().bound.value();
        for (name, v) in [("knuth", k), ("zassenhaus", z), ("cauchy", c), ("refined", r)] {
            assert!(
                v >= max_root,
                "{name} bound {v} below true root {max_root} for {f}"
            );
        }
        // Knuth's own guarantee: K(f) <= 2 d RB(f) (vacuous when all roots are 0)
        if max_root > 0.0 {
            assert!(k <= 2.0 * d * max_root * (1.0 + 1e-9), "K too large for {f}");
        }
        // refinement never worse than the starting formulas
        assert!(r <= k.min(z) * (1.0 + 1e-9));
        // Newton never crosses below the Cauchy root's true value and the
        // refined bound never exceeds the plain Cauchy bound
        assert!(r <= c * (1.0 + 1e-9));
    }
}

#[test]
fn mahler_valid_on_integer_root_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let (f, roots, lc) = product_of_linear_factors(&mut rng, 8);
        let exact: f64 = roots
            .iter()
            .map(|r| (r.abs() as f64).max(1.0))
            .product::<f64>()
            * lc.abs() as f64;
        let m = mahler_upper(&f).unwrap().upper.value();
        assert!(m >= exact * (1.0 - 1e-12), "estimate {m} below M = {exact} for {f}");
        let l2 = f.l2_norm().value();
        assert!(m <= l2 * (1.0 + 1e-9));
    }
}

#[test]
fn graeffe_identity_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let deg = rng.random_range(1..=10);
        let mut coeffs: Vec<BigInt> = (0..=deg)
            .map(|_| BigInt::from(rng.random_range(-50i64..=50)))
            .collect();
        if coeffs[deg] == BigInt::from(0) {
            coeffs[deg] = BigInt::from(1);
        }
        let f = IntPoly::from_coeffs(coeffs);
        let d = f.degree().unwrap();
        let g = graeffe(&f);
        let lhs = g.substitute_power(2).unwrap();
        let mut rhs = &f * &f.negate_x();
        if d % 2 == 1 {
            rhs = -rhs;
        }
        assert_eq!(lhs, rhs, "graeffe identity failed for {f}");
    }
}

#[test]
fn table_products_get_paper_quality_root_bounds() {
    // (true largest root modulus, published good bound) for the five
    // degree-aware comparison products
    let cases = [
        (
            "x^8+8x^7+47x^6+136x^5+285x^4+171x^3-20x^2-21x+2",
            3.7695,
            3.84,
        ),
        (
            "2x^8-16x^7+26x^6-10x^5-41x^4+89x^3-87x^2+52x-10",
            6.0529,
            6.10,
        ),
        (
            "2x^8-22x^7+33x^6+44x^5+10x^4-13x^3+10x^2+45x-25",
            8.8478,
            8.90,
        ),
        (
            "3x^8+23x^7+13x^6-45x^5-253x^4+26x^3-26x^2+16x+3",
            6.9909,
            7.00,
        ),
        ("2x^8+2x^7-4x^6+19x^5+12x^4+8x^3-55x^2-45x+5", 2.8139, 2.82),
    ];
    for (s, true_rb, published) in cases {
        let f = parse(s).unwrap();
        let r = refined_root_bound(&f).unwrap().bound.value();
        assert!(r >= true_rb * (1.0 - 1e-4), "{s}: {r} below true {true_rb}");
        assert!(
            r <= published * 1.02,
            "{s}: {r} worse than published {published}"
        );
    }
}
