//! Cross-pipeline identities over the ranges the library is meant to cover.

use eulerpath::bernoulli_lab::{b_table, conjecture_eval};
use eulerpath::matrix::build_transfer;
use eulerpath::motzkin::{
    enumerate_paths, jfraction_series, motzkin_table, weighted_sum_check, WeightSpec,
};
use eulerpath::ortho::{
    bernoulli_ttr, build_monic_ops, carlitz_ttr, euler_ttr, orthogonality_residuals,
    stieltjes, ThreeTermCoeffs,
};
use eulerpath::rational::{int, rat};
use eulerpath::series::{binomial_convolve, euler_bar, euler_polys, MomentSeq};
use eulerpath::{XPoly, YPoly};
use num_traits::{Signed, Zero};

#[test]
fn euler_polynomials_are_monic_with_known_linear_term() {
    for p in 1..=5 {
        let e = euler_polys(p, 16);
        for (n, poly) in e.values().iter().enumerate() {
            assert_eq!(poly.degree(), Some(n));
            assert!(poly.is_monic());
        }
        assert_eq!(e[1], XPoly::linear(-rat(p as i64, 2)));
    }
}

#[test]
fn euler_bar_is_centered_euler() {
    for p in 1..=5u32 {
        let bar = euler_bar(p, 16);
        let e = euler_polys(p, 16);
        for n in 0..=16 {
            let two_n = int(2).pow(n as i32);
            assert_eq!(bar[n], e[n].eval(&rat(p as i64, 2)) * two_n, "n={n} p={p}");
        }
    }
}

#[test]
fn euler_bar_convolves() {
    for p1 in 1..=4u32 {
        for p2 in 1..=(5 - p1) {
            let conv = binomial_convolve(&euler_bar(p1, 12), &euler_bar(p2, 12)).unwrap();
            assert_eq!(conv, euler_bar(p1 + p2, 12));
        }
    }
}

#[test]
fn euler_numbers_alternate() {
    let e = euler_bar(1, 16);
    for k in 0..=8 {
        let v = &e[2 * k];
        assert_eq!(v.is_negative(), k % 2 == 1, "E_{}", 2 * k);
    }
    for n in (1..=15).step_by(2) {
        assert!(e[n].is_zero());
    }
}

#[test]
fn stieltjes_inverts_families() {
    let cases: Vec<(ThreeTermCoeffs, MomentSeq<eulerpath::Rational>)> = vec![
        (euler_ttr(2).at_x(rat(1, 3)), euler_polys(2, 12).eval_at(&rat(1, 3))),
        (euler_ttr(3).at_x(int(2)), euler_polys(3, 12).eval_at(&int(2))),
        (carlitz_ttr(), euler_bar(1, 12)),
        (bernoulli_ttr().at_x(rat(-1, 5)), eulerpath::series::bernoulli_polys(1, 12).eval_at(&rat(-1, 5))),
    ];
    for (c, m) in cases {
        let rt = stieltjes(&m, 6).unwrap();
        for n in 0..6 {
            assert_eq!(XPoly::constant(rt.s[n].clone()), c.s(n).unwrap());
        }
        for n in 1..6 {
            assert_eq!(XPoly::constant(rt.t[n - 1].clone()), c.t(n).unwrap());
        }
    }
}

#[test]
fn touchard_is_the_x_zero_case() {
    // R_1 = y + 1/2, R_2 = (y + 1/2)R_1 + (1/12)R_0
    let r = build_monic_ops(&bernoulli_ttr().at_x(int(0)), 2).unwrap();
    let half = XPoly::constant(rat(1, 2));
    assert_eq!(r[1], YPoly::linear(half.clone()));
    let expected = &(&YPoly::linear(half) * &r[1]) + &YPoly::constant(XPoly::constant(rat(1, 12)));
    assert_eq!(r[2], expected);
    let numbers = eulerpath::series::bernoulli_polys(1, 10).eval_at(&int(0));
    let res = orthogonality_residuals(&bernoulli_ttr().at_x(int(0)), &numbers.as_constants(), 5).unwrap();
    assert!(res.all_zero());
}

#[test]
fn jfraction_motzkin_and_egf_agree_for_every_family() {
    let families = [
        (euler_ttr(1), WeightSpec::Euler { p: 1 }, euler_polys(1, 14)),
        (euler_ttr(2), WeightSpec::Euler { p: 2 }, euler_polys(2, 14)),
        (euler_ttr(3), WeightSpec::Euler { p: 3 }, euler_polys(3, 14)),
        (euler_ttr(4), WeightSpec::Euler { p: 4 }, euler_polys(4, 14)),
        (bernoulli_ttr(), WeightSpec::Bernoulli, eulerpath::series::bernoulli_polys(1, 14)),
        (carlitz_ttr(), WeightSpec::IntegerEuler, euler_bar(1, 14).as_constants()),
    ];
    for (c, w, egf) in families {
        let jf = jfraction_series(&c, 14).unwrap();
        let mz = motzkin_table(&w, 14).unwrap().column0();
        let via_recurrence = motzkin_table(&WeightSpec::Recurrence(c.clone()), 14).unwrap().column0();
        assert_eq!(jf, egf);
        assert_eq!(mz, egf);
        assert_eq!(via_recurrence, egf);
    }
}

#[test]
fn path_counts_match_unit_motzkin() {
    let t = motzkin_table(&WeightSpec::Unit, 10).unwrap();
    for n in 0..=10 {
        for k in 0..=n {
            let count = enumerate_paths(n, k).len() as i64;
            assert_eq!(t.get(n, k), XPoly::constant(int(count)), "n={n} k={k}");
        }
    }
}

#[test]
fn weighted_sums_match_tables() {
    let weights = [
        WeightSpec::Euler { p: 1 },
        WeightSpec::Euler { p: 2 },
        WeightSpec::Euler { p: 3 },
        WeightSpec::Bernoulli,
    ];
    for w in &weights {
        for n in 0..=10 {
            for k in 0..=n {
                assert!(weighted_sum_check(n, k, w).unwrap(), "{w:?} n={n} k={k}");
            }
        }
    }
}

#[test]
fn transfer_matrix_reproduces_motzkin_columns() {
    for p in 1..=4 {
        let w = WeightSpec::Euler { p };
        let e = euler_polys(p, 10);
        for m in 1..=10 {
            let mat = build_transfer(&w, m).unwrap();
            let tl = mat.top_left_powers(m).unwrap();
            assert_eq!(tl.as_slice(), &e.values()[..=m], "p={p} m={m}");
        }
        let table = motzkin_table(&w, 9).unwrap();
        let mat = build_transfer(&w, 10).unwrap();
        for n in 0..=9 {
            let col = mat.power_first_column(n);
            for k in 0..10 {
                assert_eq!(col[k], table.get(n, k), "p={p} n={n} k={k}");
            }
        }
    }
}

#[test]
fn top_left_is_stable_in_matrix_size() {
    let w = WeightSpec::Bernoulli;
    let small = build_transfer(&w, 6).unwrap().top_left_powers(6).unwrap();
    for m in 7..=12 {
        let big = build_transfer(&w, m).unwrap().top_left_powers(6).unwrap();
        assert_eq!(big, small);
    }
}

#[test]
fn b_table_is_x_independent_and_row_laws_hold() {
    // b_table itself rejects any disagreement between x = p/2 and x = 0
    let t = b_table(5, 8).unwrap();
    for p in 1..=8 {
        assert_eq!(t.get(1, p).unwrap(), &rat(p as i64, 12));
        assert_eq!(t.get(2, p).unwrap(), &rat(5 * p as i64 + 3, 30));
    }
    let wide = b_table(2, 12).unwrap();
    for p in 1..=12 {
        assert_eq!(wide.get(1, p).unwrap(), &conjecture_eval(1, p).unwrap());
        assert_eq!(wide.get(2, p).unwrap(), &conjecture_eval(2, p).unwrap());
    }
    for n in 1..=5 {
        let t_n = bernoulli_ttr().t(n).unwrap().as_constant().unwrap();
        assert_eq!(t.get(n, 1).unwrap(), &-t_n);
    }
}
