use knotpoly::diagram::{hopf_link, random_braid_diagram, random_knot, torus2_diagram};
use knotpoly::skein::{kn_diagram, SkeinContext as Ctx};
use knotpoly::{
    conway_kn, conway_torus2, parse_pd, Diagram, IntPoly, Parity, SkeinContext, SmallPoly,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn conway(pd: &str) -> String {
    SkeinContext::new()
        .conway(&parse_pd(pd).unwrap())
        .unwrap()
        .to_string()
}

fn arb_diagram(max: usize) -> impl Strategy<Value = Diagram> {
    any::<u64>()
        .prop_map(move |seed| random_braid_diagram(&mut ChaCha8Rng::seed_from_u64(seed), max))
}

fn arb_knot(max: usize) -> impl Strategy<Value = Diagram> {
    any::<u64>().prop_map(move |seed| random_knot(&mut ChaCha8Rng::seed_from_u64(seed), max))
}

#[test]
fn small_knots_and_links() {
    assert_eq!(conway("O"), "1");
    assert_eq!(conway("O;O"), "0");
    assert_eq!(
        conway("X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)"),
        "1-z^2"
    );
    // the other orientation of L6a1
    assert_eq!(
        conway("X(6,1,7,2);X(10,3,11,4);X(12,8,5,7);X(8,12,9,11);X(2,5,3,6);X(4,9,1,10)"),
        "-2z+z^3"
    );
    let mut ctx = SkeinContext::new();
    assert_eq!(ctx.conway(&hopf_link()).unwrap().to_string(), "z");
    assert_eq!(ctx.conway(&hopf_link().mirror()).unwrap().to_string(), "-z");
}

#[test]
fn kn_closed_form_matches_diagrams() {
    let mut ctx = SkeinContext::new();
    for n in 0..=2 {
        let want: IntPoly = conway_kn(n);
        assert_eq!(ctx.conway(&kn_diagram(n)).unwrap(), want, "n={n}");
    }
}

#[test]
fn torus_closed_form_coefficients() {
    // T(2,2k+1): coefficients are binomials C(k+j, 2j)
    let p: IntPoly = conway_torus2(7);
    assert_eq!(p.to_string(), "1+6z^2+5z^4+z^6");
    let q: IntPoly = conway_torus2(4);
    assert_eq!(q.to_string(), "2z+z^3");
}

#[test]
fn machine_and_big_integers_agree() {
    let mut small: Ctx<i64> = Ctx::new();
    let mut big = SkeinContext::new();
    for m in 1..=11 {
        let d = torus2_diagram(m).unwrap();
        let a: SmallPoly = small.conway(&d).unwrap();
        assert_eq!(a.to_string(), big.conway(&d).unwrap().to_string());
    }
}

#[test]
fn budget_error_is_reported() {
    let mut ctx = SkeinContext::with_budget(2);
    assert!(ctx.conway(&torus2_diagram(9).unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn skein_identity_everywhere(d in arb_diagram(7)) {
        let mut ctx = SkeinContext::new();
        for x in 0..d.crossing_count() {
            prop_assert_eq!(ctx.check_skein_identity(&d, x), Ok(true));
        }
    }

    #[test]
    fn parity_matches_component_count(d in arb_diagram(8)) {
        let p = SkeinContext::new().conway(&d).unwrap();
        match d.component_count() {
            1 => {
                prop_assert_eq!(p.parity(), Parity::Even);
                prop_assert_eq!(p.coeff(0), BigInt::from(1));
            }
            k if k % 2 == 0 => prop_assert!(matches!(p.parity(), Parity::Odd | Parity::Zero)),
            _ => prop_assert!(matches!(p.parity(), Parity::Even | Parity::Zero)),
        }
        prop_assert!(p.degree().is_none_or(|deg| deg <= d.crossing_count()));
    }

    #[test]
    fn connected_sum_is_multiplicative(k in arb_knot(5), j in arb_knot(5), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let arc1 = k.arcs()[a.index(k.arcs().len())];
        let arc2 = j.arcs()[b.index(j.arcs().len())];
        let mut ctx = SkeinContext::new();
        let sum = k.connected_sum(arc1, &j, arc2).unwrap();
        let lhs = ctx.conway(&sum).unwrap();
        let rhs = &ctx.conway(&k).unwrap() * &ctx.conway(&j).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn split_union_vanishes(a in arb_diagram(4), b in arb_diagram(4)) {
        let p = SkeinContext::new().conway(&a.disjoint_union(&b)).unwrap();
        prop_assert!(p.is_zero());
    }

    #[test]
    fn mirror_negates_variable(d in arb_diagram(8)) {
        let mut ctx = SkeinContext::new();
        let p = ctx.conway(&d).unwrap();
        prop_assert_eq!(ctx.conway(&d.mirror()).unwrap(), p.negate_variable());
    }

    #[test]
    fn meridian_link_of_knot(k in arb_knot(5)) {
        // K with a meridian circle: z * conway(K)
        let arc = k.arcs()[0];
        let l = k.meridian_link(arc).unwrap();
        let mut ctx = SkeinContext::new();
        prop_assert_eq!(l.component_count(), 2);
        prop_assert_eq!(ctx.conway(&l).unwrap(), ctx.conway(&k).unwrap().shift(1));
    }

    #[test]
    fn a2_skein_at_positive_crossings(k in arb_knot(7)) {
        let mut ctx = SkeinContext::new();
        for x in 0..k.crossing_count() {
            if k.sign(x).unwrap().value() > 0 {
                prop_assert_eq!(ctx.check_a2_skein(&k, x), Ok(true));
            }
        }
    }

    #[test]
    fn reduction_does_not_change_answer(d in arb_diagram(7)) {
        let mut plain = Ctx::<BigInt>::without_reduction();
        let mut reducing = SkeinContext::new();
        prop_assert_eq!(plain.conway(&d).unwrap(), reducing.conway(&d).unwrap());
    }
}
