use ldpc_forge::code::{
    consecutive_run, ell, run_support, sample_code, syndrome, BitVector, CodeParams, RowPolicy,
};
use ldpc_forge::search::{bottleneck_pairing, bottleneck_width_brute_force};
use proptest::prelude::*;

proptest! {
    #[test]
    fn ell_symmetry_and_range(x in -1000i64..1000, m in 1usize..500) {
        let v = ell(x, m);
        prop_assert!(v <= m / 2);
        prop_assert_eq!(v, ell(-x, m));
        prop_assert_eq!(v, ell(x.rem_euclid(m as i64), m));
    }

    #[test]
    fn ell_triangle_inequality(a in 0i64..500, b in 0i64..500, c in 0i64..500, m in 1usize..500) {
        prop_assert!(ell(a - c, m) <= ell(a - b, m) + ell(b - c, m));
    }

    #[test]
    fn run_length_and_support(i in 0usize..50, j in 0usize..50, m in 3usize..51) {
        prop_assume!(i < m && j < m && i != j);
        let run = consecutive_run(i, j, m).unwrap();
        prop_assert_eq!(run.len(), ell(i as i64 - j as i64, m));
        let mut expect = vec![i, j];
        expect.sort_unstable();
        prop_assert_eq!(run_support(&run, m), expect);
    }

    #[test]
    fn syndrome_is_linear(seed in 0u64..100, s1 in 0u64..1000, s2 in 0u64..1000) {
        let params = CodeParams::validate(40, 16, 3).unwrap();
        let code = sample_code(params, RowPolicy::AnyNonZero, seed).unwrap();
        let mut rng_bits = s1.wrapping_mul(0x9E3779B97F4A7C15);
        let mut u = BitVector::zeros(40);
        let mut v = BitVector::zeros(40);
        for i in 0..40 {
            rng_bits = rng_bits.wrapping_mul(6364136223846793005).wrapping_add(s2);
            u.set(i, rng_bits >> 33 & 1 == 1);
            v.set(i, rng_bits >> 34 & 1 == 1);
        }
        let mut sum = u.clone();
        sum.xor_assign(&v);
        let mut lhs = syndrome(&code, &u).unwrap();
        lhs.xor_assign(&syndrome(&code, &v).unwrap());
        prop_assert_eq!(syndrome(&code, &sum).unwrap(), lhs);
    }

    #[test]
    fn bottleneck_matches_oracle(
        m in 10usize..200,
        a in prop::collection::vec(0usize..200, 1..6),
        b_seed in 0usize..200,
    ) {
        let c = a.len();
        let a: Vec<usize> = a.iter().map(|&x| x % m).collect();
        let b: Vec<usize> = (0..c).map(|i| (b_seed + 37 * i) % m).collect();
        let fast = bottleneck_pairing(&a, &b, m).unwrap();
        prop_assert_eq!(fast.width, bottleneck_width_brute_force(&a, &b, m));
        let flipped = bottleneck_pairing(&b, &a, m).unwrap();
        prop_assert_eq!(flipped.width, fast.width);
    }
}
