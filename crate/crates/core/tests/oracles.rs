mod common;

use std::sync::Arc;

use gradus::arrangement::{
    char_poly, coxeter_arrangement, count_points, ideal_count_formula, sub_arrangement_01, upper_ideal_partition_check,
};
use gradus::ideals::WeightPoset;
use gradus::weyl::{enumerate_quotient, enumerate_w, kostant_macdonald, poincare, GradedWeyl};
use gradus::{CartanType, Grading, RootSystem};
use num_bigint::BigInt;
use num_rational::BigRational;

fn system(t: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::build(t.parse::<CartanType>().unwrap()))
}

#[test]
fn weyl_group_matches_matrix_closure() {
    for t in CartanType::all_up_to(4) {
        let rs = RootSystem::build(t);
        let oracle = common::weyl_group(&rs);
        let ours = enumerate_w(&rs, 4).unwrap();
        assert_eq!(ours.len(), oracle.len(), "{t}");
        for w in &ours {
            assert_eq!(oracle.get(w.matrix()), Some(&w.length()), "{t}: {}", w.word_string(&rs));
        }
    }
}

#[test]
fn poincare_polynomial_matches_matrix_closure() {
    for t in CartanType::all_up_to(4) {
        let rs = RootSystem::build(t);
        let oracle = common::length_polynomial(common::weyl_group(&rs).into_values());
        let km = kostant_macdonald(&rs, rs.all_positive()).unwrap();
        assert_eq!(km.coeffs(), &oracle[..], "{t}");
    }
}

#[test]
fn quotient_is_minimal_length_coset_representatives() {
    // w is a minimal representative iff w(alpha) > 0 for every simple alpha of W(0)
    for spec in ["A3:0,1,0", "B3:1,0,1", "G2:0,1", "D4:0,1,0,0", "F4:1,0,0,0"] {
        let g: Grading = spec.parse::<gradus::GradingSpec>().unwrap().build().unwrap();
        let rs = g.root_system();
        let pi0 = g.pi0();
        let oracle: Vec<Vec<i32>> = common::weyl_group(rs)
            .into_keys()
            .filter(|m| {
                let n = rs.rank();
                pi0.iter().all(|&j| (0..n).map(|i| m[i * n + j]).sum::<i32>() > 0)
            })
            .collect();
        let ours = enumerate_quotient(rs, &pi0);
        assert_eq!(ours.len(), oracle.len(), "{spec}");
        for w in &ours {
            assert!(oracle.contains(&w.matrix().to_vec()), "{spec}");
        }
    }
}

#[test]
fn ideal_counts_match_subset_scan() {
    for t in CartanType::all_up_to(4) {
        let rs = Arc::new(RootSystem::build(t));
        let mut gradings = Grading::all_standard(&rs);
        gradings.push(Grading::extra_special(rs.clone()).unwrap());
        for g in gradings {
            let roots = common::coords_of(&rs, g.slice(1));
            if roots.len() > 22 {
                continue;
            }
            let poset = WeightPoset::possibly_empty(&g, 1).unwrap();
            assert_eq!(poset.count_lower_ideals(), common::count_lower_ideals(&roots), "{t} {:?}", g.marks());
        }
    }
}

#[test]
fn ideal_count_formula_small_cases() {
    // extra-special: #Pi_long (h - 1)
    for (t, want) in [("B2", 3), ("G2", 5), ("D4", 20), ("F4", 22)] {
        let rs = system(t);
        let g = Grading::extra_special(rs.clone()).unwrap();
        let oracle = common::count_lower_ideals(&common::coords_of(&rs, g.slice(1)));
        assert_eq!(oracle, want, "{t}");
        assert_eq!(ideal_count_formula(&g), BigRational::from_integer(BigInt::from(want)), "{t}");
    }
    // abelian A3 at the middle node: C(4,2)
    let g = Grading::standard(system("A3"), &[1]).unwrap();
    assert_eq!(common::count_lower_ideals(&common::coords_of(g.root_system(), g.slice(1))), common::binomial(4, 2));
}

#[test]
fn upper_ideals_of_type_a_are_catalan() {
    for n in 1..=5 {
        let rs = system(&format!("A{n}"));
        let oracle = common::count_upper_ideals(&common::coords_of(&rs, rs.all_positive()));
        assert_eq!(oracle, common::catalan(n as u64 + 1), "A{n}");
        assert_eq!(upper_ideal_partition_check(&rs).upper_ideals as u64, oracle, "A{n}");
    }
    for (t, want) in [("B3", 20), ("B4", 70), ("D4", 50), ("F4", 105)] {
        let rs = system(t);
        assert_eq!(common::count_upper_ideals(&common::coords_of(&rs, rs.all_positive())), want, "{t}");
        assert_eq!(upper_ideal_partition_check(&rs).upper_ideals as u64, want, "{t}");
    }
}

#[test]
fn point_counts_match_naive_scan() {
    for t in ["A2", "B2", "G2", "A3", "B3", "C3"] {
        let rs = system(t);
        let arrs = [coxeter_arrangement(&rs), sub_arrangement_01(&Grading::extra_special(Arc::clone(&rs)).unwrap())];
        for arr in &arrs {
            let normals: Vec<Vec<i64>> = arr.normals.iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect();
            for q in [7u64, 11, 13] {
                assert_eq!(count_points(arr, q), common::naive_point_count(&normals, rs.rank(), q as i64), "{t} q={q}");
            }
        }
    }
}

#[test]
fn coxeter_characteristic_polynomials_factor_over_exponents() {
    for t in CartanType::all_up_to(4) {
        let rs = RootSystem::build(t);
        let chi = char_poly(&rs, &coxeter_arrangement(&rs), 4).unwrap().poly;
        // chi(q) is the naive point count at a prime q > h
        let normals: Vec<Vec<i64>> =
            rs.positive_roots().iter().map(|r| r.coords.iter().map(|&x| x as i64).collect()).collect();
        if rs.rank() <= 3 {
            let q = 13;
            assert_eq!(chi.eval(q) as u64, common::naive_point_count(&normals, rs.rank(), q as i64), "{t}");
        }
        for m in rs.exponents() {
            assert_eq!(chi.eval(m as i128), 0, "{t}: exponent {m}");
        }
    }
}

#[test]
fn coset_table_poincare_is_quotient_of_group_polynomials() {
    // W(t) = W0(t) W(0)(t)
    for spec in ["A3:1,0,0", "B3:0,0,1", "C3:0,1,1", "G2:1,1", "B4:0,1,0,0"] {
        let g: Grading = spec.parse::<gradus::GradingSpec>().unwrap().build().unwrap();
        let rs = g.root_system();
        let gw = GradedWeyl::new(g.clone()).unwrap();
        let table = gw.coset_table();
        let w0 = poincare(table.entries.iter().map(|e| &e.element));
        let levi = kostant_macdonald(rs, g.delta0_positive()).unwrap();
        let full = common::length_polynomial(common::weyl_group(rs).into_values());
        assert_eq!((&w0 * &levi).coeffs(), &full[..], "{spec}");
    }
}
