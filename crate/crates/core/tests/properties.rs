use hooklen::families::{tree_weight_deg, Builtin, DegreeWeightFamily};
use hooklen::gfparse::{self, ParseError};
use hooklen::hookcalc::{self, HookWeightFunction};
use hooklen::rational::{frac, int, Rational};
use hooklen::series::TruncatedSeries;
use hooklen::treeoracle::enumerate_trees;
use proptest::prelude::*;

const ORDER: usize = 16;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| frac(p, q))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(p, q)| frac(p, q))
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(rational(), order + 1).prop_map(TruncatedSeries::new)
}

/// Random series with a prescribed constant term.
fn series_with_constant(c: i64, order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(rational(), order).prop_map(move |mut v| {
        v.insert(0, int(c));
        TruncatedSeries::new(v)
    })
}

fn revertible(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (
        rational().prop_filter("nonzero linear term", |r| *r != int(0)),
        prop::collection::vec(rational(), order - 1),
    )
        .prop_map(|(f1, rest)| {
            let mut v = vec![int(0), f1];
            v.extend(rest);
            TruncatedSeries::new(v)
        })
}

fn builtins() -> Vec<Builtin> {
    vec![
        Builtin::Binary,
        Builtin::Kary(3),
        Builtin::Plane,
        Builtin::Labelled,
        Builtin::Yang {
            s: frac(1, 2),
            m: int(3),
        },
        Builtin::PolyAlpha(int(2)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(f in series(ORDER), g in series(ORDER), h in series(ORDER)) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.add(&f.neg()), TruncatedSeries::zero(ORDER));
    }

    #[test]
    fn division_undoes_multiplication(f in series(ORDER), g in series_with_constant(3, ORDER)) {
        prop_assert_eq!(f.mul(&g).div(&g).unwrap(), f);
    }

    #[test]
    fn mixed_orders_truncate_to_minimum(f in series(5), g in series(9)) {
        prop_assert_eq!(f.add(&g).order(), 5);
        prop_assert_eq!(f.mul(&g), f.mul(&g.truncate(5)));
    }

    #[test]
    fn reversion_is_a_compositional_inverse(f in revertible(ORDER)) {
        let g = f.revert().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), TruncatedSeries::identity(ORDER));
        prop_assert_eq!(g.compose(&f).unwrap(), TruncatedSeries::identity(ORDER));
    }

    #[test]
    fn exp_and_log_are_inverse(f in series_with_constant(1, ORDER), g in series_with_constant(0, ORDER)) {
        prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
        prop_assert_eq!(g.exp().unwrap().log().unwrap(), g);
    }

    #[test]
    fn rational_power_matches_integer_power(
        f in series_with_constant(1, ORDER),
        p in -4i64..=4,
        q in 1i64..=4,
    ) {
        let root = f.pow_rational(&frac(p, q)).unwrap();
        prop_assert_eq!(root.pow_int(q).unwrap(), f.pow_int(p).unwrap());
    }

    #[test]
    fn calculus_round_trips(f in series(ORDER)) {
        prop_assert_eq!(f.integrate().derivative(), f.clone());
        let mut no_constant = f.clone().into_coeffs();
        no_constant[0] = int(0);
        prop_assert_eq!(f.derivative().integrate(), TruncatedSeries::new(no_constant));
    }

    #[test]
    fn json_round_trip(f in series(8)) {
        let text = serde_json::to_string(&f).unwrap();
        let back: TruncatedSeries = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn han_is_the_binary_case(f in series_with_constant(0, 20)) {
        let binary = DegreeWeightFamily::builtin(Builtin::Binary).unwrap();
        let han = hookcalc::han_binary_rho(&f, 20);
        let general = hookcalc::rho_from_f(&f, &binary, 20);
        match (han, general) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.values(), b.values()),
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "disagree: {:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn forest_form_matches_tree_form(
        f in revertible(12),
        which in 0usize..2,
    ) {
        let phi = DegreeWeightFamily::builtin([Builtin::Plane, Builtin::Labelled][which].clone()).unwrap();
        let g = phi.compose(&f);
        match (hookcalc::rho_forest(&g, &phi, 12), hookcalc::rho_from_f(&f, &phi, 12)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.values(), b.values()),
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "disagree: {:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn rho_round_trip_with_random_tables(
        table in prop::collection::vec(positive_rational(), 12),
        which in 0usize..6,
    ) {
        let phi = DegreeWeightFamily::builtin(builtins()[which].clone()).unwrap();
        let rho = HookWeightFunction::given(table);
        let f = hookcalc::f_from_rho(&rho, &phi, 12).unwrap();
        let back = hookcalc::rho_from_f(&f, &phi, 12).unwrap();
        prop_assert_eq!(back.values(), rho.values());
    }

    #[test]
    fn whitespace_does_not_change_the_ast(spaces in prop::collection::vec(0usize..3, 64)) {
        for text in ["(1+s*t)^m", "1/(1-t)^a", "exp(t)-log(1+t/2)", "-t^2^3/4"] {
            let plain = gfparse::parse(text).unwrap();
            let mut spaced = String::new();
            for (i, ch) in text.chars().enumerate() {
                spaced.push(ch);
                if !ch.is_ascii_alphanumeric() || !text[i + 1..].starts_with(|c: char| c.is_ascii_alphanumeric()) {
                    spaced.push_str(&" ".repeat(spaces[i % spaces.len()]));
                }
            }
            prop_assert_eq!(gfparse::parse(&spaced).unwrap(), plain);
        }
    }

    #[test]
    fn parser_is_total_on_token_soup(tokens in prop::collection::vec(
        prop::sample::select(vec!["t", "s", "exp", "log", "sin", "(", ")", "+", "-", "*", "/", "^", "1", "23", "0", " ", "#"]),
        0..24,
    )) {
        let text: String = tokens.concat();
        match gfparse::parse(&text) {
            Ok(_) => {}
            Err(ParseError::SyntaxError { offset, .. }) => prop_assert!(offset <= text.len()),
            Err(ParseError::UnknownFunction { .. }) => {}
        }
    }
}

#[test]
fn degree_weight_is_multiplicative_over_root_decomposition() {
    for b in builtins() {
        let phi = DegreeWeightFamily::builtin(b).unwrap();
        for n in 1..=8 {
            for t in enumerate_trees(n) {
                let below: Rational = t
                    .children()
                    .iter()
                    .map(|c| tree_weight_deg(&phi, c))
                    .product();
                assert_eq!(
                    tree_weight_deg(&phi, &t),
                    phi.weight_of_degree(t.children().len()) * below,
                    "{t}"
                );
            }
        }
    }
}

#[test]
fn fixpoint_residuals_vanish() {
    for b in builtins() {
        let phi = DegreeWeightFamily::builtin(b).unwrap();
        let t = hookcalc::solve_simply_generated(&phi, ORDER);
        let z_phi_t = TruncatedSeries::identity(ORDER).mul(&phi.compose(&t));
        assert!(t.sub(&z_phi_t).is_zero(), "{}", phi.name());

        let t = hookcalc::solve_increasing(&phi, ORDER);
        let residual = t.derivative().sub(&phi.compose(&t));
        assert_eq!(residual.order(), ORDER - 1);
        assert!(residual.is_zero(), "{}", phi.name());
    }
}

#[test]
fn builtin_expressions_match_hand_built_series() {
    for b in builtins() {
        let (text, binding) = b.expression();
        let parsed = gfparse::parse(text)
            .unwrap()
            .evaluate(&binding, 20)
            .unwrap();
        let hand = DegreeWeightFamily::builtin(b.clone()).unwrap().series(20);
        assert_eq!(parsed, hand, "{b}");
    }
}
