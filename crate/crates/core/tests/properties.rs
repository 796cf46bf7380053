//! Algebraic and combinatorial invariants, checked on generated inputs.

use colored_cycles::determinant::det_general;
use colored_cycles::ideal::conjecture_status;
use colored_cycles::model::{parse, serialize, ColoredObject};
use colored_cycles::symmetry::{induced_binomials, symmetries};
use colored_cycles::{
    adjugate_oracle_cycle, det_path_disjoint, det_path_recurrence, sigma_numerator,
    vertex_degree_parity, ColoredCycle, ColoredPath, DihedralElement, Encoding, Labels, Monomial,
    Parity, Polynomial, VariableId,
};
use proptest::prelude::*;

fn variable() -> impl Strategy<Value = VariableId> {
    prop_oneof![
        (0u32..3).prop_map(VariableId::vertex),
        (0u32..3).prop_map(VariableId::edge)
    ]
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    let term = (
        -5i64..=5,
        prop::collection::vec((variable(), 1u32..3), 0..3),
    );
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Polynomial::zero(), |acc, (c, factors)| {
                &acc + &Polynomial::term(c, Monomial::from_factors(factors))
            })
    })
}

fn cycle(max_n: usize) -> impl Strategy<Value = ColoredCycle> {
    (3..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(0u32..3, n),
            prop::collection::vec(0u32..3, n),
        )
            .prop_map(|(v, e)| ColoredCycle::new(v, e).unwrap())
    })
}

fn path(max_m: usize) -> impl Strategy<Value = ColoredPath> {
    (1..=max_m).prop_flat_map(|m| {
        (
            prop::collection::vec(0u32..3, m),
            prop::collection::vec(0u32..3, m - 1),
        )
            .prop_map(|(v, e)| ColoredPath::new(v, e).unwrap())
    })
}

fn element(n: usize) -> impl Strategy<Value = DihedralElement> {
    (0..n, any::<bool>()).prop_map(move |(r, refl)| {
        if refl {
            DihedralElement::reflection(n, r)
        } else {
            DihedralElement::rotation(n, r)
        }
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn polynomial_render_parse(a in polynomial()) {
        let back: Polynomial = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn coloring_file_round_trip(c in cycle(8)) {
        let obj = ColoredObject::Cycle(c.clone());
        let text = serialize(&obj, &Labels::generic(&obj));
        let (back, _) = parse(&text).unwrap();
        // Colors come back renumbered in first-appearance order.
        prop_assert_eq!(Encoding::of(&back.into_cycle().unwrap()), Encoding::of(&c));
    }

    #[test]
    fn reflect_is_involution(p in path(9)) {
        prop_assert_eq!(p.reflect().reflect(), p.clone());
        prop_assert_eq!(det_path_recurrence(&p.reflect()), det_path_recurrence(&p));
    }

    #[test]
    fn canonical_form_is_orbit_invariant(c in cycle(9), r in 0usize..18, refl in any::<bool>()) {
        let n = c.n();
        let g = if refl { DihedralElement::reflection(n, r % n) } else { DihedralElement::rotation(n, r % n) };
        let image = c.relabel(&g);
        prop_assert_eq!(image.canonical_form(), c.canonical_form());
        prop_assert!(c.canonical_form() <= Encoding::of(&c));
    }

    #[test]
    fn determinant_routes_agree(p in path(9)) {
        let a = det_path_disjoint(&p);
        prop_assert_eq!(&a, &det_path_recurrence(&p));
        prop_assert_eq!(&a, &det_general(&p.to_graph()).unwrap());
    }

    #[test]
    fn path_determinant_parity(p in path(10)) {
        let want = if p.len() % 2 == 1 { Parity::AllOdd } else { Parity::AllEven };
        prop_assert_eq!(vertex_degree_parity(&det_path_recurrence(&p)), want);
    }

    #[test]
    fn dihedral_group_laws(n in 3usize..10, seed in any::<(usize, usize, usize, bool, bool, bool)>()) {
        let (a, b, c, ra, rb, rc) = seed;
        let mk = |r: usize, refl: bool| if refl { DihedralElement::reflection(n, r % n) } else { DihedralElement::rotation(n, r % n) };
        let (x, y, z) = (mk(a, ra), mk(b, rb), mk(c, rc));
        prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
        prop_assert!(x.compose(&x.inverse()).is_identity());
        for v in 1..=n {
            prop_assert_eq!(x.compose(&y).apply(v), x.apply(y.apply(v)));
        }
    }

    #[test]
    fn symmetry_group_is_closed(c in cycle(9)) {
        let group = symmetries(&c);
        prop_assert!(group.iter().any(DihedralElement::is_identity));
        for g in &group {
            prop_assert!(group.contains(&g.inverse()));
            for h in &group {
                prop_assert!(group.contains(&g.compose(h)));
            }
        }
    }

    #[test]
    fn symmetries_fix_the_coloring(c in cycle(8)) {
        for s in symmetries(&c) {
            prop_assert_eq!(c.relabel(&s), c.clone());
        }
    }

    #[test]
    fn relabel_respects_composition(
        (c, g, h) in (3usize..9).prop_flat_map(|n| (
            (prop::collection::vec(0u32..3, n), prop::collection::vec(0u32..3, n))
                .prop_map(|(v, e)| ColoredCycle::new(v, e).unwrap()),
            element(n),
            element(n),
        ))
    ) {
        prop_assert_eq!(c.relabel(&h).relabel(&g), c.relabel(&g.compose(&h)));
    }

    #[test]
    fn induced_binomials_are_in_the_ideal(c in cycle(7)) {
        let report = conjecture_status(&c).unwrap();
        let found = report.binomial_set();
        for g in symmetries(&c) {
            for b in induced_binomials(&c, &g).unwrap() {
                prop_assert!(found.contains(&b), "{} induced by {} missing", b, g);
            }
        }
    }

    #[test]
    fn numerators_match_oracle(c in cycle(7), i in 1usize..8, j in 1usize..8) {
        let (i, j) = ((i - 1) % c.n() + 1, (j - 1) % c.n() + 1);
        prop_assert_eq!(sigma_numerator(&c, i, j).unwrap().numerator, adjugate_oracle_cycle(&c, i.min(j), i.max(j)).unwrap());
    }
}
