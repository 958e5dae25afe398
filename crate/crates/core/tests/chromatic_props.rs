use proptest::prelude::*;

use chromq::chromatic::{
    coeff_in_basis, count_colorings, k_class, sink_sum, x_by_oracle, x_oracle, x_via_words, Statistic,
};
use chromq::heaps::enumerate_classes;
use chromq::symfunc::{omega, Basis, SymFunc};
use chromq::{QPoly, QRatPoly, UnitIntervalOrder};

/// A random order on 2..=5 vertices with a type vector of degree 1..=6.
fn instance() -> impl Strategy<Value = (UnitIntervalOrder, Vec<usize>)> {
    (2usize..=5)
        .prop_flat_map(|n| {
            let all = UnitIntervalOrder::all(n);
            (proptest::sample::select(all), proptest::collection::vec(0usize..=2, n))
        })
        .prop_filter("degree between 1 and 6", |(_, mu)| (1..=6).contains(&mu.iter().sum::<usize>()))
}

/// Proper colourings of the blown-up graph with `colors` colours, by plain
/// backtracking over vertices; independent of the multi-colouring oracle.
fn blown_up_colourings(p: &UnitIntervalOrder, colors: usize) -> u64 {
    fn rec(p: &UnitIntervalOrder, v: usize, colors: usize, cur: &mut Vec<usize>) -> u64 {
        if v > p.n() {
            return 1;
        }
        let mut total = 0;
        for c in 0..colors {
            if (1..v).all(|u| !(p.incomparable(u, v) && cur[u - 1] == c)) {
                cur.push(c);
                total += rec(p, v + 1, colors, cur);
                cur.pop();
            }
        }
        total
    }
    rec(p, 1, colors, &mut Vec::new())
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn words_agree_with_oracle((p, mu) in instance()) {
        prop_assert_eq!(x_via_words(&p, &mu).unwrap(), x_by_oracle(&p, &mu).unwrap());
    }

    #[test]
    fn asc_des_agree_with_extra_colour((p, mu) in instance()) {
        let d: usize = mu.iter().sum();
        prop_assert_eq!(
            x_oracle(&p, &mu, d + 1, Statistic::Asc).unwrap(),
            x_oracle(&p, &mu, d + 1, Statistic::Des).unwrap()
        );
    }

    /// Multi-colourings of type `mu` are colourings of the blow-up up to
    /// reordering colours within each clique.
    #[test]
    fn colouring_count_matches_blow_up((p, mu) in instance()) {
        let d: usize = mu.iter().sum();
        let big = p.blow_up(&mu).unwrap();
        let sym: u64 = mu.iter().map(|&k| factorial(k)).product();
        for colors in [d, d + 1] {
            prop_assert_eq!(count_colorings(&p, &mu, colors).unwrap() * sym, blown_up_colourings(&big, colors));
        }
    }

    /// Coefficients in the positive bases carry no negative terms.
    #[test]
    fn positive_bases((p, mu) in instance()) {
        for basis in [Basis::F, Basis::P, Basis::S] {
            let r = coeff_in_basis(&p, &mu, basis).unwrap();
            prop_assert!(r.nonnegative && r.integral);
        }
    }

    #[test]
    fn sink_sums_total_the_e_report((p, mu) in instance()) {
        let d: usize = mu.iter().sum();
        let r = coeff_in_basis(&p, &mu, Basis::E).unwrap();
        let all = r.terms.iter().fold(QPoly::zero(), |a, t| &a + &t.poly.to_integer().unwrap());
        let by_sinks = (1..=d).fold(QPoly::zero(), |a, k| &a + &sink_sum(&p, &mu, k).unwrap());
        prop_assert_eq!(all, by_sinks);
    }

    #[test]
    fn classes_assemble_omega_x((p, mu) in instance()) {
        let d: usize = mu.iter().sum();
        let mut total = SymFunc::zero(d);
        for c in enumerate_classes(&p, &mu).unwrap() {
            total = &total + &k_class(&p, &c).unwrap().scale(&QRatPoly::q_pow(c.asc));
        }
        prop_assert_eq!(total, omega(&x_via_words(&p, &mu).unwrap()));
    }
}

#[test]
fn unit_type_coefficients_are_palindromic() {
    for n in 1..=5 {
        for p in UnitIntervalOrder::all(n) {
            let x = x_via_words(&p, &vec![1; n]).unwrap();
            for (lam, c) in x.terms() {
                assert!(c.is_palindromic(), "P({p}) m_{lam}: {c}");
            }
        }
    }
}
