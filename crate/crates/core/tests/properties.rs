use hyperzeta_core::curve::{lfunc_coeffs, FrobeniusData, PointCounter};
use hyperzeta_core::poly::residue_symbol;
use hyperzeta_core::{Curve, ExtFieldCtx, FieldCtx, Poly};
use proptest::prelude::*;

const PRIMES: [u64; 4] = [3, 5, 7, 11];

fn poly_strategy(max_len: usize) -> impl Strategy<Value = (u64, Vec<i64>)> {
    (prop::sample::select(&PRIMES[..]), prop::collection::vec(0i64..11, 0..max_len))
}

proptest! {
    #[test]
    fn field_inverse_and_chi((q, a) in prop::sample::select(&PRIMES[..]).prop_flat_map(|q| (Just(q), 1..q))) {
        let fq = FieldCtx::new(q).unwrap();
        let a = a as u32;
        prop_assert_eq!(fq.mul(a, fq.inv(a)), 1);
        // Euler's criterion
        let e = fq.pow(a, (q - 1) / 2);
        prop_assert_eq!(fq.chi(a), if e == 1 { 1 } else { -1 });
    }

    #[test]
    fn divrem_reconstructs((q, a) in poly_strategy(9), b in prop::collection::vec(0i64..11, 1..6)) {
        let fq = FieldCtx::new(q).unwrap();
        let a = Poly::new(&a, fq);
        let b = Poly::new(&b, fq);
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.divrem(&b, fq).unwrap();
        prop_assert_eq!(quo.mul(&b, fq).add(&rem, fq), a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn symbol_is_multiplicative_in_numerator(
        (q, a) in poly_strategy(7),
        b in prop::collection::vec(0i64..11, 0..7),
        f in prop::collection::vec(0i64..11, 2..6),
    ) {
        let fq = FieldCtx::new(q).unwrap();
        let (a, b) = (Poly::new(&a, fq), Poly::new(&b, fq));
        let mut f = Poly::new(&f, fq);
        prop_assume!(!f.is_zero() && f.degree() > Some(0));
        f = f.monic(fq);
        let ab = a.mul(&b, fq);
        let lhs = residue_symbol(&ab, &f, fq).unwrap();
        let rhs = residue_symbol(&a, &f, fq).unwrap() * residue_symbol(&b, &f, fq).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_data_round_trips(coeffs in prop::collection::vec(0i64..5, 5..7), lead in 1i64..5) {
        let fq = FieldCtx::new(5).unwrap();
        let mut c = coeffs;
        c.push(lead);
        let Ok(curve) = Curve::new(Poly::new(&c, fq), fq) else { return Ok(()); };
        let g = curve.genus();
        let traces: Vec<i128> = (1..=2 * g)
            .map(|n| PointCounter::new(fq, n, c.len()).unwrap().scaled_trace(&curve).unwrap())
            .collect();
        let mut data = FrobeniusData::from_traces(g, fq, &traces).unwrap();
        prop_assert!(data.functional_equation_holds());
        prop_assert!(data.weil_bound_holds());
        for (n, t) in traces.iter().enumerate() {
            prop_assert_eq!(data.trace(n + 1), *t);
        }
        let direct: Vec<i128> = lfunc_coeffs(&curve).unwrap().into_iter().map(i128::from).collect();
        let full = data.with_infinity_factor(curve.lambda());
        let len = full.len().max(direct.len());
        let at = |v: &[i128], i: usize| v.get(i).copied().unwrap_or(0);
        prop_assert!((0..len).all(|i| at(&full, i) == at(&direct, i)), "{:?} vs {:?}", full, direct);
    }
}

#[test]
fn extension_generator_has_full_frobenius_orbit() {
    let base = FieldCtx::new(3).unwrap();
    let ext = ExtFieldCtx::build(4, base).unwrap();
    let t = ext.generator();
    assert!(ext.pow(&t, ext.order() - 1) == ext.one());
    // t^(q^k) = t only for k = 4, so t generates F_81 over F_3
    let mut frob = t.clone();
    for k in 1..=4 {
        frob = ext.pow(&frob, 3);
        assert_eq!(frob == t, k == 4);
    }
}
