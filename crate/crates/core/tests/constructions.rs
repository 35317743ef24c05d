mod common;

use common::*;
use num_traits::{One, Zero};
use rand::Rng;
use superlr::constructions::*;
use superlr::fixtures::{fix0, fix0_3lr, gl11, grass, heis, lr_fixtures, odd_inst, solv_over_dual, three_lr_fixtures};
use superlr::graded::Tuples;
use superlr::sampling::{random_lr, rng, small};
use superlr::scalar::{int, sign};
use superlr::structures::*;
use superlr::{Element, MultilinearMap, Scalar, SignConvention};

fn str_gl11() -> SuperTrace {
    SuperTrace::new(vec![int(1), int(-1), int(0), int(0)])
}

/// `tau(x1)[x2,x3] - (-1)^{x1x2} tau(x2)[x1,x3] + (-1)^{x3(x1+x2)} tau(x3)[x1,x2]` on basis vectors.
fn induced_by_hand(bracket: &MultilinearMap, tau: &SuperTrace, t: &[usize]) -> Element {
    let p: Vec<usize> = t.iter().map(|&i| bracket.domain(0).parity(i) as usize).collect();
    let mut v = bracket.eval_basis(&[t[1], t[2]]).scaled(tau.at(t[0]));
    v.add_scaled(&(sign(1 + p[0] * p[1]) * tau.at(t[1])), &bracket.eval_basis(&[t[0], t[2]]));
    v.add_scaled(&(sign(p[2] * (p[0] + p[1])) * tau.at(t[2])), &bracket.eval_basis(&[t[0], t[1]]));
    v
}

#[test]
fn supertrace_examples() {
    let h = heis().structure;
    assert!(check_supertrace(&SuperTrace::zero(3), &h).passed);
    let g = gl11().structure;
    assert!(check_supertrace(&str_gl11(), &g).passed);
    let (m, p) = gl11_basis();
    for t in Tuples::cube(4, 2) {
        let c = super_commutator(&m[t[0]], p[t[0]], &m[t[1]], p[t[1]]);
        assert!((&c[0][0] - &c[1][1]).is_zero());
    }
    let r = check_supertrace(&SuperTrace::new(vec![int(0), int(0), int(1)]), &h);
    assert!(!r.passed);
    for v in &r.violations {
        let mut pair = v.indices[..2].to_vec();
        pair.sort();
        assert_eq!(pair, vec![0, 1]);
    }
}

#[test]
fn odd_trace_values_are_rejected() {
    let g = gl11().structure;
    assert!(!check_supertrace(&SuperTrace::new(vec![int(0), int(0), int(1), int(0)]), &g).passed);
}

fn trace_condition_by_hand(tau: &SuperTrace, s: &LieRinehartStructure) -> bool {
    Tuples::new(&[s.algebra.dim(), s.dim(), s.dim()]).all(|t| {
        let ax = s.action.eval_basis(&[t[0], t[1]]);
        let ay = s.action.eval_basis(&[t[0], t[2]]);
        Element::basis(t[2]).scaled(&tau.eval(&ax)) == ay.scaled(tau.at(t[1]))
    })
}

#[test]
fn trace_module_condition_examples() {
    let g = gl11().structure;
    assert!(check_trace_module_condition(&str_gl11(), &g).passed);
    let gr = grass().structure;
    assert!(check_trace_module_condition(&SuperTrace::zero(4), &gr).passed);
    // supported on the unit of the A-summand
    let tau = SuperTrace::new(vec![int(0), int(0), int(1), int(0)]);
    assert_eq!(check_trace_module_condition(&tau, &gr).passed, trace_condition_by_hand(&tau, &gr));
    for f in lr_fixtures() {
        let s = f.structure;
        for tau in compatible_trace_space(&s).iter().chain(supertrace_space(&s.space, &s.bracket).iter()) {
            assert_eq!(check_trace_module_condition(tau, &s).passed, trace_condition_by_hand(tau, &s), "{}", f.name);
        }
    }
}

#[test]
fn induced_bracket_examples() {
    let h = heis();
    assert!(induce_3bracket(&h.structure, &h.trace).unwrap().is_zero());
    let g = gl11();
    let b = induce_3bracket(&g.structure, &g.trace).unwrap();
    assert_eq!(b.eval_basis(&[0, 2, 3]), Element::from_pairs([(0, int(1)), (1, int(1))]));
    assert!(induce_3bracket(&g.structure, &SuperTrace::zero(4)).unwrap().is_zero());
    let bad = SuperTrace::new(vec![int(0), int(0), int(1)]);
    assert!(induce_3bracket(&h.structure, &bad).is_err());
}

#[test]
fn induced_bracket_matches_hand_formula_on_fixtures() {
    for f in lr_fixtures() {
        let b = induce_3bracket(&f.structure, &f.trace).unwrap();
        for t in Tuples::cube(f.structure.dim(), 3) {
            assert_eq!(b.eval_basis(&t), induced_by_hand(&f.structure.bracket, &f.trace, &t), "{} {t:?}", f.name);
        }
    }
}

#[test]
fn induced_rep_examples() {
    let g = gl11();
    let ad = adjoint_rep_lr(&g.structure);
    assert!(induce_rep(&ad, &SuperTrace::zero(4)).action.is_zero());
    let rho = induce_rep(&ad, &g.trace);
    for m in 0..4 {
        assert_eq!(rho.action.eval_basis(&[0, 2, m]), ad.action.eval_basis(&[2, m]));
    }
    let gr = grass();
    assert!(induce_rep(&algebra_module_lr(&gr.structure), &SuperTrace::zero(4)).action.is_zero());
}

#[test]
fn induced_rep_matches_hand_formula() {
    for f in lr_fixtures() {
        for mu in [adjoint_rep_lr(&f.structure), algebra_module_lr(&f.structure)] {
            let rho = induce_rep(&mu, &f.trace);
            for t in Tuples::new(&[f.structure.dim(), f.structure.dim(), mu.dim()]) {
                let p = (f.structure.p(t[0]) * f.structure.p(t[1])) as usize;
                let mut want = mu.action.eval_basis(&[t[1], t[2]]).scaled(f.trace.at(t[0]));
                want.add_scaled(&(sign(1 + p) * f.trace.at(t[1])), &mu.action.eval_basis(&[t[0], t[2]]));
                assert_eq!(rho.action.eval_basis(&t), want);
            }
            assert!(check_rep_3lie(&rho.action, &induce_3bracket_unchecked(&f.structure.bracket, &f.trace)).passed);
        }
    }
}

#[test]
fn induced_structure_examples() {
    let g = gl11();
    let s = induce_3lr(&g.structure, &g.trace).unwrap();
    assert!(check_3lie_rinehart(&s, false).passed);
    let z = induce_3lr(&fix0().structure, &SuperTrace::zero(1)).unwrap();
    assert_eq!(z, fix0_3lr());
    let h = heis();
    let s = induce_3lr(&h.structure, &h.trace).unwrap();
    assert!(check_3lie_rinehart(&s, false).passed);
    assert!(s.bracket.is_zero() && s.anchor.is_zero());
}

#[test]
fn induction_refuses_failing_traces() {
    let h = heis();
    let err = induce_3lr(&h.structure, &SuperTrace::new(vec![int(0), int(0), int(1)])).unwrap_err();
    assert!(matches!(err, ConstructionError::Precondition(r) if r.name == "supertrace"));
}

#[test]
fn induction_on_random_structures_is_valid() {
    let mut r = rng(31);
    for _ in 0..25 {
        let (s, tau) = random_lr(&mut r);
        assert!(check_lie_rinehart(&s).passed);
        let b = induce_3bracket(&s, &tau).unwrap();
        assert!(check_3lie_super(&b).passed);
        for t in Tuples::cube(s.dim(), 3) {
            assert_eq!(b.eval_basis(&t), induced_by_hand(&s.bracket, &tau, &t));
        }
        let s3 = induce_3lr(&s, &tau).unwrap();
        assert!(check_3lie_rinehart(&s3, false).passed);
        for sigma in supertrace_space(&s.space, &s.bracket) {
            assert!(check_3lie_super(&induce_3bracket_unchecked(&s.bracket, &sigma)).passed);
        }
    }
}

#[test]
fn supertrace_space_is_exactly_the_kernel() {
    for f in lr_fixtures() {
        let s = &f.structure;
        let basis = supertrace_space(&s.space, &s.bracket);
        for tau in &basis {
            assert!(check_supertrace(tau, s).passed);
        }
        // independent count: even coordinates minus the rank of the image of the bracket on even coordinates
        let even = s.space.basis_of_parity(0);
        let rows: Vec<Vec<Scalar>> =
            Tuples::cube(s.dim(), 2).map(|t| even.iter().map(|&i| s.bracket.coefficient(&t, i)).collect()).collect();
        assert_eq!(basis.len(), even.len() - dense_rank(rows), "{}", f.name);
    }
}

#[test]
fn reduction_examples() {
    let g = gl11().induced();
    let zero = reduce_binary(&g, &Element::zero()).unwrap();
    assert!(zero.bracket.is_zero() && zero.anchor.is_zero());
    let r = reduce_binary(&g, &Element::basis(0)).unwrap();
    assert!(check_lie_rinehart(&r).passed);
    for t in Tuples::cube(4, 2) {
        assert_eq!(r.bracket.eval_basis(&t), g.bracket.eval_basis(&[0, t[0], t[1]]));
    }
    assert!(matches!(reduce_binary(&g, &Element::basis(2)), Err(ConstructionError::OddBasePoint)));
    let mixed = Element::from_pairs([(0, int(1)), (3, int(1))]);
    assert!(reduce_binary(&g, &mixed).is_err());
}

#[test]
fn reduce_then_reinduce_is_reported_as_a_diff() {
    let g = gl11();
    let s3 = g.induced();
    let r = reduce_binary(&s3, &Element::basis(0)).unwrap();
    let again = induce_3lr_unchecked(&r, &str_gl11());
    let d1 = entrywise_diff(&s3.bracket, &again.bracket);
    let d2 = entrywise_diff(&s3.bracket, &again.bracket);
    assert_eq!(d1, d2);
    for (k, l, rr) in &d1 {
        assert_eq!(*l, s3.bracket.eval_basis(k));
        assert_eq!(*rr, again.bracket.eval_basis(k));
        assert_ne!(l, rr);
    }
}

#[test]
fn reduction_of_every_valid_structure_at_even_points() {
    let mut r = rng(77);
    for (name, s) in three_lr_fixtures() {
        for _ in 0..4 {
            let x0 = Element::from_pairs(s.space.basis_of_parity(0).into_iter().map(|i| (i, small(&mut r, 2))));
            let red = reduce_binary(&s, &x0).unwrap();
            assert!(check_lie_rinehart(&red).passed, "{name} at {}", x0.display());
        }
    }
}

#[test]
fn tensor_lift_examples() {
    let g = gl11().induced();
    let b = tensor_lift(&g, SignConvention::Consistent).unwrap();
    assert_eq!(b.dim(), 4);
    assert_eq!(constants(&b.bracket), constants(&g.bracket));
    let gr = grass().induced();
    let b = tensor_lift(&gr, SignConvention::Consistent).unwrap();
    assert_eq!(b.dim(), 8);
    assert!(check_3lie_rinehart(&b, false).passed);
    let z = tensor_lift(&fix0_3lr(), SignConvention::Consistent).unwrap();
    assert!(z.bracket.is_zero() && z.anchor.is_zero());
}

#[test]
fn tensor_lift_basis_and_parity() {
    let s = odd_inst().induced();
    let b = tensor_lift(&s, SignConvention::Consistent).unwrap();
    for i in 0..s.algebra.dim() {
        for j in 0..s.dim() {
            assert_eq!(b.space.parity(tensor_index(i, j, s.dim())), (s.algebra.space.parity(i) + s.p(j)) % 2);
        }
    }
}

#[test]
fn extension_examples() {
    let g = gl11().induced();
    let e = trivial_extension(&g).unwrap();
    for t in Tuples::cube(5, 3) {
        let want = if t.iter().all(|&k| k < 4) { g.bracket.eval_basis(&t) } else { Element::zero() };
        assert_eq!(e.bracket.eval_basis(&t), want);
    }
    let gr = grass().induced();
    let e = trivial_extension(&gr).unwrap();
    assert_eq!(e.dim(), 6);
    assert!(check_3lie_rinehart(&e, false).passed);
    let z = trivial_extension(&fix0_3lr()).unwrap();
    assert_eq!(z.dim(), 2);
    assert!(z.bracket.is_zero());
}

#[test]
fn semidirect_examples() {
    let g = gl11().induced();
    let s = semidirect_sum(&g, &algebra_module_3lr(&g), SignConvention::Consistent).unwrap();
    assert_eq!(s.dim(), 5);
    assert!(check_3lie_rinehart(&s, false).passed);
    let z = fix0_3lr();
    let s = semidirect_sum(&z, &scalar_module_3lr(&z), SignConvention::Consistent).unwrap();
    assert!(s.bracket.is_zero());
    let s = semidirect_sum(&g, &adjoint_rep(&g), SignConvention::Consistent).unwrap();
    assert_eq!(s.dim(), 8);
    assert!(check_3lie_rinehart(&s, false).passed);
}

#[test]
fn semidirect_refuses_non_modules() {
    let s3 = grass().induced();
    let mut psi = adjoint_rep(&s3);
    psi.a_action.set_unchecked(&[0, 0], 1, int(1));
    assert!(semidirect_sum(&s3, &psi, SignConvention::Consistent).is_err());
}

fn valid_inputs() -> Vec<(String, ThreeLieRinehartStructure)> {
    let mut out = three_lr_fixtures();
    let mut r = rng(404);
    for k in 0..10 {
        let (s, tau) = random_lr(&mut r);
        if s.dim() <= 3 {
            out.push((format!("random{k}"), induce_3lr(&s, &tau).unwrap()));
        }
    }
    out
}

#[test]
fn constructions_preserve_validity() {
    for (name, s) in valid_inputs() {
        assert!(check_3lie_rinehart(&s, false).passed, "{name}");
        let b = tensor_lift(&s, SignConvention::Consistent).unwrap();
        assert!(check_3lie_rinehart(&b, false).passed, "{name} tensor");
        let e = trivial_extension(&s).unwrap();
        assert!(check_3lie_rinehart(&e, false).passed, "{name} extension");
        for psi in [algebra_module_3lr(&s), adjoint_rep(&s)] {
            if check_module_3lr(&psi, &s).passed {
                let sum = semidirect_sum(&s, &psi, SignConvention::Consistent).unwrap();
                assert!(check_3lie_rinehart(&sum, false).passed, "{name} semidirect");
            }
        }
    }
}

#[test]
fn semidirect_validity_tracks_the_module_axioms() {
    let mut r = rng(2024);
    let mut broken = 0;
    for (name, s) in [("gl11", gl11().induced()), ("solv", solv_over_dual().induced()), ("odd", odd_inst().induced())] {
        for base in [algebra_module_3lr(&s), adjoint_rep(&s)] {
            for _ in 0..12 {
                let mut psi = base.clone();
                let (n, m) = (s.dim(), psi.dim());
                let t = [r.gen_range(0..n), r.gen_range(0..n), r.gen_range(0..m)];
                let o = r.gen_range(0..m);
                if psi.action.respects_parity(&t, o) {
                    let c = psi.action.coefficient(&t, o) + Scalar::one();
                    psi.action.set_unchecked(&t, o, c);
                }
                let module = check_module_3lr(&psi, &s).passed;
                let sum =
                    check_3lie_rinehart(&semidirect_sum_unchecked(&s, &psi, SignConvention::Consistent), false).passed;
                assert_eq!(module, sum, "{name}");
                broken += !module as usize;
            }
        }
    }
    assert!(broken > 0);
}

#[test]
fn constructions_are_deterministic() {
    let s = odd_inst().induced();
    assert_eq!(
        tensor_lift_unchecked(&s, SignConvention::Consistent),
        tensor_lift_unchecked(&s, SignConvention::Consistent)
    );
    assert_eq!(trivial_extension_unchecked(&s), trivial_extension_unchecked(&s));
}
