mod common;

use common::*;
use superlr::constructions::{induce_3lr_unchecked, induce_rep, tensor_lift_unchecked, trivial_extension_unchecked};
use superlr::fixtures::{
    a4, dual_numbers, fix0, fix0_3lr, gl11, grass, grassmann, heis, odd_inst, solv_over_dual, three_lr_fixtures,
};
use superlr::graded::Tuples;
use superlr::sampling::{random_lr, random_skew_ternary, rng};
use superlr::scalar::int;
use superlr::structures::*;
use superlr::{Element, GradedSpace, MultilinearMap, SignConvention};

fn has_label(r: &superlr::CheckReport, label: &str) -> bool {
    r.count(label) > 0
}

#[test]
fn lie_checker_on_fixtures() {
    assert!(check_lie_super(&fix0().structure.bracket).passed);
    let br = gl11().structure.bracket;
    assert!(jacobi_holds(&br));
    assert!(check_lie_super(&br).passed);
}

#[test]
fn perturbed_gl11_fails_jacobi_in_both_checkers() {
    let mut br = gl11().structure.bracket;
    br.set_unchecked(&[0, 2], 2, int(2));
    br.set_unchecked(&[2, 0], 2, int(-2));
    assert!(!jacobi_holds(&br));
    let r = check_lie_super(&br);
    assert!(!r.passed);
    let oracle: Vec<Vec<usize>> = Tuples::cube(4, 3).filter(|t| !jacobiator(&br, t).is_zero()).collect();
    let reported: Vec<Vec<usize>> =
        r.violations.iter().filter(|v| v.label == "jacobi").map(|v| v.indices.clone()).collect();
    assert_eq!(reported, oracle);
}

#[test]
fn ternary_checker_examples() {
    assert!(check_3lie_super(&fix0_3lr().bracket).passed);
    assert!(check_3lie_super(&gl11().induced().bracket).passed);
    let sp = GradedSpace::even("L", 2);
    let mut m = MultilinearMap::power(&sp, 3, &sp, 0);
    m.set(&[0, 0, 1], 1, int(1)).unwrap();
    let r = check_3lie_super(&m);
    assert!(!r.passed);
    assert!(r.labels().iter().any(|l| l.starts_with("skew")));
}

#[test]
fn ternary_checker_matches_direct_fundamental_identity() {
    for (name, s) in three_lr_fixtures() {
        let direct = Tuples::cube(s.dim(), 5).all(|t| fundamental(&s.bracket, &t).is_zero());
        assert_eq!(check_3lie_super(&s.bracket).passed, direct, "{name}");
    }
}

#[test]
fn filippov_equivalents_on_fixtures() {
    let g = gl11().induced().bracket;
    assert!(check_3lie_super(&g).passed && check_filippov_equivalents(&g, FilippovVariant::Corrected).passed);
    assert!(check_filippov_equivalents(&fix0_3lr().bracket, FilippovVariant::Corrected).passed);
}

#[test]
fn filippov_agrees_with_fundamental_identity_on_random_skew_maps() {
    let mut r = rng(1606);
    let mut valid = 0;
    for _ in 0..80 {
        let m = random_skew_ternary(&mut r, 3, 0.25);
        let fi = check_3lie_super(&m).passed;
        assert_eq!(fi, check_filippov_equivalents(&m, FilippovVariant::Corrected).passed);
        valid += fi as usize;
    }
    assert!(valid > 0 && valid < 80);
}

#[test]
fn displayed_second_identity_fails_on_a4() {
    let b = a4().bracket;
    assert!(check_3lie_super(&b).passed);
    let r = check_filippov_equivalents(&b, FilippovVariant::Uncorrected);
    assert_eq!(r.count("eq2"), 240);
    assert_eq!(r.count("eq1"), 0);
}

fn endo(space: &GradedSpace, parity: u8, entries: &[(usize, usize, i64)]) -> MultilinearMap {
    let mut m = MultilinearMap::power(space, 1, space, parity);
    for &(i, o, c) in entries {
        m.set(&[i], o, int(c)).unwrap();
    }
    m
}

#[test]
fn derivation_examples() {
    let a = grassmann();
    assert!(check_derivation(&endo(&a.space, 0, &[]), &a).passed);
    // d/dtheta: theta -> 1
    assert!(check_derivation(&endo(&a.space, 1, &[(1, 0, 1)]), &a).passed);
    // multiplication by theta: 1 -> theta; d(1*1) = theta but d(1)1 + 1d(1) = 2 theta
    let r = check_derivation(&endo(&a.space, 1, &[(0, 1, 1)]), &a);
    assert!(!r.passed);
    assert!(r.violations.iter().any(|v| v.indices.starts_with(&[0, 0])));
}

#[test]
fn lie_representation_examples() {
    let l = GradedSpace::even("L", 2);
    let m = GradedSpace::even("M", 1);
    let abelian = MultilinearMap::power(&l, 2, &l, 0);
    assert!(check_rep_lie(&MultilinearMap::new(vec![l.clone(), m.clone()], m, 0), &abelian).passed);
    let g = gl11().structure;
    assert!(check_rep_lie(&g.bracket, &g.bracket).passed);
    let gr = grass().structure;
    assert!(check_rep_lie(&gr.anchor, &gr.bracket).passed);
}

#[test]
fn ternary_representation_examples() {
    let z = fix0_3lr();
    assert!(check_rep_3lie(&z.anchor, &z.bracket).passed);
    let g3 = gl11().induced();
    assert!(check_rep_3lie(&g3.bracket, &g3.bracket).passed);
    let f = gl11();
    let rho = induce_rep(&adjoint_rep_lr(&f.structure), &f.trace);
    assert!(check_rep_3lie(&rho.action, &g3.bracket).passed);
}

#[test]
fn lie_rinehart_examples() {
    assert!(check_lie_rinehart(&fix0().structure).passed);
    assert!(check_lie_rinehart(&grass().structure).passed);
    let mut s = grass().structure;
    s.anchor = MultilinearMap::new(vec![s.space.clone(), s.algebra.space.clone()], s.algebra.space.clone(), 0);
    let r = check_lie_rinehart(&s);
    assert!(!r.passed);
    assert!(has_label(&r, "compatibility"));
}

/// `A = <1, s, u>` with all products of `s, u` zero, `L = <e1, e2, e3>` even and abelian,
/// `s e1 = e3`, anchor `rho(e3, e2) = D` with `D(s) = u`: every axiom holds except `A`-linearity of `rho`.
fn planted_nonlinear_anchor() -> ThreeLieRinehartStructure {
    let asp = GradedSpace::even("A", 3);
    let mut product = MultilinearMap::power(&asp, 2, &asp, 0);
    for i in 0..3 {
        product.set(&[0, i], i, int(1)).unwrap();
        product.set(&[i, 0], i, int(1)).unwrap();
    }
    let algebra = SuperCommutativeAlgebra::new(asp.clone(), product, Some(0));
    let l = GradedSpace::even("L", 3);
    let bracket = MultilinearMap::power(&l, 3, &l, 0);
    let mut action = MultilinearMap::new(vec![asp.clone(), l.clone()], l.clone(), 0);
    for x in 0..3 {
        action.set(&[0, x], x, int(1)).unwrap();
    }
    action.set(&[1, 0], 2, int(1)).unwrap();
    let mut anchor = MultilinearMap::new(vec![l.clone(), l.clone(), asp.clone()], asp, 0);
    anchor.set(&[2, 1, 1], 2, int(1)).unwrap();
    anchor.set(&[1, 2, 1], 2, int(-1)).unwrap();
    ThreeLieRinehartStructure::new(algebra, l, bracket, action, anchor)
}

#[test]
fn ternary_lie_rinehart_examples() {
    assert!(check_3lie_rinehart(&fix0_3lr(), false).passed);
    assert!(check_3lie_rinehart(&gl11().induced(), false).passed);
    let s = planted_nonlinear_anchor();
    let strict = check_3lie_rinehart(&s, false);
    assert!(!strict.passed);
    assert_eq!(strict.labels(), vec!["anchor_linear".to_string()]);
    assert!(check_3lie_rinehart(&s, true).passed);
}

#[test]
fn lr_module_examples() {
    let g = grass().structure;
    assert!(check_module_lr(&algebra_module_lr(&g), &g).passed);
    // ad is not a module over GRASS: [ax, y] carries a mu(y)(a) x term
    let r = check_module_lr(&adjoint_rep_lr(&g), &g);
    assert!(!r.passed);
    assert!(has_label(&r, "a_linear"));
    let s = solv_over_dual().structure;
    let mut theta = algebra_module_lr(&s);
    theta.action.set(&[0, 0], 0, int(1)).unwrap();
    let r = check_module_lr(&theta, &s);
    assert!(has_label(&r, "a_linear"));
}

#[test]
fn ternary_module_examples() {
    for (name, s) in three_lr_fixtures() {
        assert!(check_module_3lr(&algebra_module_3lr(&s), &s).passed, "{name}");
    }
    let g3 = gl11().induced();
    assert!(check_module_3lr(&adjoint_rep(&g3), &g3).passed);
    let mut psi = adjoint_rep(&g3);
    let (t, o, c) = psi.action.entries().map(|(t, o, c)| (t.clone(), o, c.clone())).next().unwrap();
    psi.action.set(&t, o, c * int(2)).unwrap();
    assert!(!check_module_3lr(&psi, &g3).passed);
}

#[test]
fn adjoint_fails_on_tensor_lift_of_odd_instance() {
    let s = tensor_lift_unchecked(&odd_inst().induced(), SignConvention::Consistent);
    assert!(check_3lie_rinehart(&s, false).passed);
    let r = check_module_3lr(&adjoint_rep(&s), &s);
    assert!(has_label(&r, "a_linear"));
}

fn identity(space: &GradedSpace) -> MultilinearMap {
    let mut m = MultilinearMap::power(space, 1, space, 0);
    for i in 0..space.dim() {
        m.set(&[i], i, int(1)).unwrap();
    }
    m
}

#[test]
fn homomorphism_examples() {
    let g3 = gl11().induced();
    assert!(check_homomorphism(&identity(&g3.algebra.space), &identity(&g3.space), &g3, &g3).passed);
    let z = fix0_3lr();
    let zero_f = MultilinearMap::power(&z.space, 1, &z.space, 0);
    assert!(check_homomorphism(&identity(&z.algebra.space), &zero_f, &z, &z).passed);
    let mut perturbed = g3.clone();
    perturbed.bracket.set_unchecked(&[0, 2, 3], 0, int(2));
    let r = check_homomorphism(&identity(&g3.algebra.space), &identity(&g3.space), &g3, &perturbed);
    assert!(has_label(&r, "bracket"));
}

#[test]
fn adjoint_rep_examples() {
    assert!(adjoint_rep(&fix0_3lr()).action.is_zero());
    let ad = adjoint_rep(&gl11().induced());
    let (m, p) = gl11_basis();
    let want = gl11_coords(&super_commutator(&m[2], p[2], &m[3], p[3]));
    assert_eq!(ad.action.eval_basis(&[0, 2, 3]), want);
    assert_eq!(want, Element::from_pairs([(0, int(1)), (1, int(1))]));
}

#[test]
fn adjoint_is_a_module_for_random_structures_over_the_ground_field() {
    let mut r = rng(255);
    let mut tested = 0;
    while tested < 12 {
        let (s, tau) = random_lr(&mut r);
        if s.dim() > 3 || s.algebra.dim() != 1 {
            continue;
        }
        let s3 = induce_3lr_unchecked(&s, &tau);
        assert!(check_module_3lr(&adjoint_rep(&s3), &s3).passed);
        tested += 1;
    }
}

/// Independent kernel: `x` with `rho(x, e_j)(a_k) = 0` for all `j, k`.
fn kernel_dim_oracle(s: &ThreeLieRinehartStructure) -> usize {
    let (n, na) = (s.dim(), s.algebra.dim());
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..na {
            for out in 0..na {
                rows.push((0..n).map(|x| s.anchor.coefficient(&[x, j, k], out)).collect());
            }
        }
    }
    n - dense_rank(rows)
}

fn derived_structures() -> Vec<(String, ThreeLieRinehartStructure)> {
    let mut out = three_lr_fixtures();
    for f in [grass(), odd_inst(), solv_over_dual()] {
        out.push((format!("{}_tensor", f.name), tensor_lift_unchecked(&f.induced(), SignConvention::Consistent)));
        out.push((format!("{}_extension", f.name), trivial_extension_unchecked(&f.induced())));
    }
    out
}

#[test]
fn kernel_of_anchor_matches_brute_force() {
    assert_eq!(kernel_of_anchor(&fix0_3lr()).len(), 1);
    assert_eq!(kernel_of_anchor(&gl11().induced()).len(), 4);
    for (name, s) in derived_structures() {
        let k = kernel_of_anchor(&s);
        assert_eq!(k.len(), kernel_dim_oracle(&s), "{name}");
        for x in &k {
            for j in 0..s.dim() {
                for a in 0..s.algebra.dim() {
                    assert!(s.rho(x, &Element::basis(j), &Element::basis(a)).is_zero(), "{name}");
                }
            }
        }
        assert!(check_ideal(&k, &s).passed, "{name}");
    }
}

#[test]
fn ideal_examples() {
    let g3 = gl11().induced();
    assert!(check_ideal(&[], &g3).passed);
    let all: Vec<Element> = (0..4).map(Element::basis).collect();
    assert!(check_ideal(&all, &g3).passed);
    let span = [Element::basis(2)];
    let oracle = Tuples::cube(4, 2).all(|t| {
        let (x, y) = (Element::basis(t[0]), Element::basis(t[1]));
        [g3.br(&span[0], &x, &y), g3.br(&x, &span[0], &y), g3.br(&x, &y, &span[0])]
            .iter()
            .all(|v| v.support().iter().all(|&i| i == 2))
    });
    assert_eq!(check_ideal(&span, &g3).passed, oracle);
    assert!(!oracle);
}

#[test]
fn structural_identities_hold_on_valid_structures() {
    for (name, s) in derived_structures() {
        assert!(check_3lie_rinehart(&s, false).passed, "{name}");
        assert!(check_structural_identities(&s, SignConvention::Consistent).passed, "{name}");
    }
}

#[test]
fn checkers_are_deterministic() {
    let s = tensor_lift_unchecked(&odd_inst().induced(), SignConvention::Consistent);
    assert_eq!(check_3lie_rinehart(&s, false), check_3lie_rinehart(&s, false));
    assert_eq!(check_module_3lr(&adjoint_rep(&s), &s), check_module_3lr(&adjoint_rep(&s), &s));
    let mut br = heis().structure.bracket;
    br.set_unchecked(&[0, 2], 0, int(1));
    assert_eq!(check_lie_super(&br), check_lie_super(&br));
}

#[test]
fn algebra_fixtures_are_supercommutative() {
    for a in [grassmann(), dual_numbers(), SuperCommutativeAlgebra::ground_field()] {
        assert!(check_algebra(&a).passed);
    }
}
