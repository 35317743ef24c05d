use super::{
    b, signed_sum, LieRinehartStructure, RepresentationAction, SuperCommutativeAlgebra, ThreeLieRinehartStructure,
};
use crate::graded::{check_parity_consistency, Element, MultilinearMap, Tuples};
use crate::report::CheckReport;
use crate::scalar::Parity;

/// Which form of the second five-argument identity equivalent to the fundamental identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FilippovVariant {
    /// The six-term identity obtained by expanding the fundamental identity twice.
    #[default]
    Corrected,
    /// The five-term form, which misplaces one sign and drops a term; kept for comparison.
    Uncorrected,
}

/// Runs the parity checks; returns false (and records the failures) if any map is inconsistent.
pub(crate) fn parity_gate(report: &mut CheckReport, maps: &[(&str, &MultilinearMap)]) -> bool {
    let mut ok = true;
    for (name, m) in maps {
        let mut r = check_parity_consistency(m);
        if !r.passed {
            ok = false;
            r.name = format!("parity_{name}");
            report.absorb(r);
        }
    }
    if !ok {
        report.note("parity-inconsistent input rejected before checking identities");
    }
    ok
}

fn pars(p: &[Parity], idx: &[usize]) -> Vec<Parity> {
    idx.iter().map(|&i| p[i]).collect()
}

/// Associativity, supercommutativity and unit axioms.
pub fn check_algebra(a: &SuperCommutativeAlgebra) -> CheckReport {
    let mut r = CheckReport::new("algebra");
    if !parity_gate(&mut r, &[("product", &a.product)]) {
        return r;
    }
    let n = a.dim();
    let p = a.space.parities();
    for t in Tuples::cube(n, 2) {
        let (i, j) = (t[0], t[1]);
        let lhs = a.mul_basis(i, j);
        let rhs = a.mul_basis(j, i).signed((p[i] * p[j]) as usize);
        r.expect_eq("supercommutative", &t, lhs, rhs);
    }
    for t in Tuples::cube(n, 3) {
        let lhs = a.mul(&a.mul_basis(t[0], t[1]), &b(t[2]));
        let rhs = a.mul(&b(t[0]), &a.mul_basis(t[1], t[2]));
        r.expect_eq("associative", &t, lhs, rhs);
    }
    if let Some(u) = a.unit {
        if u >= n || p[u] != 0 {
            r.violation("unit_even", &[u], Element::basis(u), Element::zero());
        } else {
            for i in 0..n {
                r.expect_eq("unit", &[i], a.mul_basis(u, i), b(i));
                r.expect_eq("unit", &[i], a.mul_basis(i, u), b(i));
            }
        }
    }
    r
}

/// `(ab)m = a(bm)` and `1 m = m` for an action `A x M -> M`.
pub fn check_a_module(algebra: &SuperCommutativeAlgebra, a_action: &MultilinearMap) -> CheckReport {
    let mut r = CheckReport::new("a_module");
    let na = algebra.dim();
    let nm = a_action.codomain().dim();
    for x in 0..nm {
        for t in Tuples::cube(na, 2) {
            let lhs = a_action.eval(&[&algebra.mul_basis(t[0], t[1]), &b(x)]);
            let rhs = a_action.eval(&[&b(t[0]), &a_action.eval_basis(&[t[1], x])]);
            r.expect_eq("associative", &[t[0], t[1], x], lhs, rhs);
        }
        if let Some(u) = algebra.unit {
            r.expect_eq("unit", &[x], a_action.eval_basis(&[u, x]), b(x));
        }
    }
    r
}

/// Super skew-symmetry and the super-Jacobi identity on all basis tuples.
pub fn check_lie_super(bracket: &MultilinearMap) -> CheckReport {
    let mut r = CheckReport::new("lie");
    if !parity_gate(&mut r, &[("bracket", bracket)]) {
        return r;
    }
    let n = bracket.codomain().dim();
    let p = bracket.codomain().parities();
    let br = |x: &Element, y: &Element| bracket.eval(&[x, y]);
    for t in Tuples::cube(n, 2) {
        let (x, y) = (t[0], t[1]);
        let v =
            signed_sum(vec![(0, bracket.eval_basis(&[x, y])), ((p[x] * p[y]) as usize, bracket.eval_basis(&[y, x]))]);
        r.expect_zero("skew", &t, v);
    }
    for t in Tuples::cube(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let v = signed_sum(vec![
            ((p[x] * p[z]) as usize, br(&b(x), &bracket.eval_basis(&[y, z]))),
            ((p[y] * p[x]) as usize, br(&b(y), &bracket.eval_basis(&[z, x]))),
            ((p[z] * p[y]) as usize, br(&b(z), &bracket.eval_basis(&[x, y]))),
        ]);
        r.expect_zero("jacobi", &t, v);
    }
    r
}

pub(crate) fn skew3(r: &mut CheckReport, bracket: &MultilinearMap) {
    let n = bracket.codomain().dim();
    let p = bracket.codomain().parities();
    for t in Tuples::cube(n, 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let base = bracket.eval_basis(&t);
        let v = signed_sum(vec![(0, base.clone()), ((p[x] * p[y]) as usize, bracket.eval_basis(&[y, x, z]))]);
        r.expect_zero("skew12", &t, v);
        let v = signed_sum(vec![(0, base), ((p[y] * p[z]) as usize, bracket.eval_basis(&[x, z, y]))]);
        r.expect_zero("skew23", &t, v);
    }
}

/// Super skew-symmetry in both adjacent slot pairs and the fundamental identity.
pub fn check_3lie_super(bracket: &MultilinearMap) -> CheckReport {
    let mut r = CheckReport::new("3lie");
    if !parity_gate(&mut r, &[("bracket", bracket)]) {
        return r;
    }
    skew3(&mut r, bracket);
    fundamental_identity(&mut r, bracket);
    r
}

pub(crate) fn fundamental_identity(r: &mut CheckReport, bracket: &MultilinearMap) {
    let n = bracket.codomain().dim();
    let p = bracket.codomain().parities();
    let br = |x: &Element, y: &Element, z: &Element| bracket.eval(&[x, y, z]);
    for t in Tuples::cube(n, 5) {
        let (x, y, z, u, v) = (t[0], t[1], t[2], t[3], t[4]);
        let pxy = (p[x] + p[y]) as usize;
        let val = signed_sum(vec![
            (0, br(&b(x), &b(y), &bracket.eval_basis(&[z, u, v]))),
            (1, br(&bracket.eval_basis(&[x, y, z]), &b(u), &b(v))),
            (1 + p[z] as usize * pxy, br(&b(z), &bracket.eval_basis(&[x, y, u]), &b(v))),
            (1 + (p[z] + p[u]) as usize * pxy, br(&b(z), &b(u), &bracket.eval_basis(&[x, y, v]))),
        ]);
        r.expect_zero("fundamental", &t, val);
    }
}

/// The two five-argument identities equivalent (for super skew maps) to the fundamental identity.
/// Violations are labelled `eq1` and `eq2`.
pub fn check_filippov_equivalents(bracket: &MultilinearMap, variant: FilippovVariant) -> CheckReport {
    let mut r = CheckReport::new("filippov");
    if !parity_gate(&mut r, &[("bracket", bracket)]) {
        return r;
    }
    let mut skew = CheckReport::new("skew");
    skew3(&mut skew, bracket);
    if !skew.passed {
        r.note("bracket is not super skew-symmetric; the equivalence does not apply");
    }
    let n = bracket.codomain().dim();
    let p = bracket.codomain().parities();
    let br = |x: &Element, y: &Element, z: &Element| bracket.eval(&[x, y, z]);
    let bb = |i: usize, j: usize, k: usize| bracket.eval_basis(&[i, j, k]);
    for t in Tuples::cube(n, 5) {
        let (x1, x2, x3, x4, x5) = (t[0], t[1], t[2], t[3], t[4]);
        let q = |i: usize| p[t[i - 1]] as usize;
        let eq1 = signed_sum(vec![
            (0, br(&bb(x1, x2, x3), &b(x4), &b(x5))),
            (1 + q(3) * q(4), br(&bb(x1, x2, x4), &b(x3), &b(x5))),
            (q(2) * (q(3) + q(4)), br(&bb(x1, x3, x4), &b(x2), &b(x5))),
            (1 + q(1) * (q(2) + q(3) + q(4)), br(&bb(x2, x3, x4), &b(x1), &b(x5))),
        ]);
        r.expect_zero("eq1", &t, eq1);
        let eq2 = match variant {
            FilippovVariant::Corrected => signed_sum(vec![
                ((q(4) + q(5)) * (q(1) + q(2) + q(3)), br(&bb(x4, x5, x1), &b(x2), &b(x3))),
                ((q(4) + q(5)) * (q(2) + q(3)), br(&b(x1), &bb(x4, x5, x2), &b(x3))),
                (q(3) * (q(4) + q(5)), br(&b(x1), &b(x2), &bb(x4, x5, x3))),
                (1 + (q(3) + q(5)) * (q(1) + q(2)) + q(4) * q(5), br(&bb(x3, x5, x1), &b(x2), &b(x4))),
                (1 + (q(3) + q(5)) * q(2) + q(4) * q(5), br(&b(x1), &bb(x3, x5, x2), &b(x4))),
                ((q(1) + q(2)) * (q(3) + q(4)), br(&b(x3), &b(x4), &bb(x1, x2, x5))),
            ]),
            FilippovVariant::Uncorrected => signed_sum(vec![
                ((q(4) + q(5)) * (q(1) + q(2) + q(3)), br(&bb(x4, x5, x1), &b(x2), &b(x3))),
                ((q(4) + q(5)) * (q(2) + q(3)), br(&b(x1), &bb(x4, x5, x2), &b(x3))),
                ((q(1) + q(2)) * (q(3) + q(4)), br(&bb(x3, x5, x1), &b(x2), &b(x4))),
                (1 + (q(3) + q(5)) * q(2) + q(4) * q(5), br(&b(x1), &bb(x5, x3, x2), &b(x4))),
                (q(3) * (q(4) + q(5)), br(&b(x1), &b(x2), &bb(x4, x5, x3))),
            ]),
        };
        r.expect_zero("eq2", &t, eq2);
    }
    r
}

/// `d(ab) = d(a) b + (-1)^{|d||a|} a d(b)` on basis pairs.
pub fn check_derivation(d: &MultilinearMap, algebra: &SuperCommutativeAlgebra) -> CheckReport {
    let mut r = CheckReport::new("derivation");
    if !parity_gate(&mut r, &[("map", d)]) {
        return r;
    }
    derivation_rows(&mut r, "derivation", &[], d.parity(), algebra, |a| d.eval(&[a]));
    r
}

fn derivation_rows<F: Fn(&Element) -> Element>(
    r: &mut CheckReport,
    label: &str,
    prefix: &[usize],
    dpar: Parity,
    algebra: &SuperCommutativeAlgebra,
    d: F,
) {
    let n = algebra.dim();
    let p = algebra.space.parities();
    for t in Tuples::cube(n, 2) {
        let (i, j) = (t[0], t[1]);
        let lhs = d(&algebra.mul_basis(i, j));
        let rhs = signed_sum(vec![
            (0, algebra.mul(&d(&b(i)), &b(j))),
            ((dpar * p[i]) as usize, algebra.mul(&b(i), &d(&b(j)))),
        ]);
        let mut idx = prefix.to_vec();
        idx.extend_from_slice(&t);
        r.expect_eq(label, &idx, lhs, rhs);
    }
}

/// `mu([x,y]) = mu(x)mu(y) - (-1)^{|x||y|} mu(y)mu(x)` for an action `L x M -> M`.
pub fn check_rep_lie(action: &MultilinearMap, bracket: &MultilinearMap) -> CheckReport {
    let mut r = CheckReport::new("rep_lie");
    if !parity_gate(&mut r, &[("action", action), ("bracket", bracket)]) {
        return r;
    }
    let n = bracket.codomain().dim();
    let p = bracket.codomain().parities();
    let nm = action.codomain().dim();
    let th = |x: &Element, m: &Element| action.eval(&[x, m]);
    for t in Tuples::cube(n, 2) {
        let (x, y) = (t[0], t[1]);
        let xy = bracket.eval_basis(&[x, y]);
        for m in 0..nm {
            let lhs = th(&xy, &b(m));
            let rhs = signed_sum(vec![
                (0, th(&b(x), &action.eval_basis(&[y, m]))),
                (1 + (p[x] * p[y]) as usize, th(&b(y), &action.eval_basis(&[x, m]))),
            ]);
            r.expect_eq("rep", &[x, y, m], lhs, rhs);
        }
    }
    r
}

/// Skewness `rho(x,y) = -(-1)^{|x||y|} rho(y,x)` and both representation identities,
/// for an action `L x L x M -> M`.
pub fn check_rep_3lie(action: &MultilinearMap, bracket: &MultilinearMap) -> CheckReport {
    let mut r = CheckReport::new("rep_3lie");
    if !parity_gate(&mut r, &[("action", action), ("bracket", bracket)]) {
        return r;
    }
    let n = bracket.codomain().dim();
    let p = bracket.codomain().parities();
    let nm = action.codomain().dim();
    let rho = |x: &Element, y: &Element, m: &Element| action.eval(&[x, y, m]);
    for t in Tuples::cube(n, 2) {
        for m in 0..nm {
            let v = signed_sum(vec![
                (0, action.eval_basis(&[t[0], t[1], m])),
                ((p[t[0]] * p[t[1]]) as usize, action.eval_basis(&[t[1], t[0], m])),
            ]);
            r.expect_zero("skew", &[t[0], t[1], m], v);
        }
    }
    for t in Tuples::cube(n, 4) {
        let (x1, x2, x3, x4) = (t[0], t[1], t[2], t[3]);
        let q = pars(p, &t);
        let q = |i: usize| q[i - 1] as usize;
        let b123 = bracket.eval_basis(&[x1, x2, x3]);
        let b124 = bracket.eval_basis(&[x1, x2, x4]);
        for m in 0..nm {
            let rr = |a: usize, c: usize, d: usize, e: usize| rho(&b(a), &b(c), &action.eval_basis(&[d, e, m]));
            let lhs1 =
                signed_sum(vec![(0, rr(x1, x2, x3, x4)), (1 + (q(1) + q(2)) * (q(3) + q(4)), rr(x3, x4, x1, x2))]);
            let rhs1 = signed_sum(vec![(0, rho(&b123, &b(x4), &b(m))), (1 + q(3) * q(4), rho(&b124, &b(x3), &b(m)))]);
            let idx = [x1, x2, x3, x4, m];
            r.expect_eq("mod1", &idx, lhs1, rhs1);
            let lhs2 = rho(&b123, &b(x4), &b(m));
            let rhs2 = signed_sum(vec![
                (0, rr(x1, x2, x3, x4)),
                (q(1) * (q(2) + q(3)), rr(x2, x3, x1, x4)),
                (q(3) * (q(1) + q(2)), rr(x3, x1, x2, x4)),
            ]);
            r.expect_eq("mod2", &idx, lhs2, rhs2);
        }
    }
    r
}

/// All Lie-Rinehart axioms: `A` itself, the Lie superalgebra, the `A`-module `L`, the anchor as a
/// representation by derivations, `mu(ax) = a mu(x)` and the compatibility condition.
pub fn check_lie_rinehart(s: &LieRinehartStructure) -> CheckReport {
    let mut r = CheckReport::new("lie_rinehart");
    if !parity_gate(
        &mut r,
        &[("bracket", &s.bracket), ("action", &s.action), ("anchor", &s.anchor), ("product", &s.algebra.product)],
    ) {
        return r;
    }
    r.absorb(check_algebra(&s.algebra));
    r.absorb(check_lie_super(&s.bracket));
    let mut m = check_a_module(&s.algebra, &s.action);
    m.name = "l_module".into();
    r.absorb(m);
    let mut rep = check_rep_lie(&s.anchor, &s.bracket);
    rep.name = "anchor_rep".into();
    r.absorb(rep);
    let a = &s.algebra;
    let (n, na) = (s.dim(), a.dim());
    let pl = s.space.parities();
    let pa = a.space.parities();
    for x in 0..n {
        derivation_rows(&mut r, "derivation", &[x], pl[x], a, |v| s.mu(&b(x), v));
    }
    for ai in 0..na {
        for x in 0..n {
            let ax = s.action.eval_basis(&[ai, x]);
            for bi in 0..na {
                let lhs = s.mu(&ax, &b(bi));
                let rhs = a.mul(&b(ai), &s.anchor.eval_basis(&[x, bi]));
                r.expect_eq("anchor_linear", &[ai, x, bi], lhs, rhs);
            }
            for y in 0..n {
                let lhs = s.br(&b(x), &s.action.eval_basis(&[ai, y]));
                let rhs = signed_sum(vec![
                    (0, s.act(&s.anchor.eval_basis(&[x, ai]), &b(y))),
                    ((pa[ai] * pl[x]) as usize, s.act(&b(ai), &s.bracket.eval_basis(&[x, y]))),
                ]);
                r.expect_eq("compatibility", &[x, ai, y], lhs, rhs);
            }
        }
    }
    r
}

/// The 3-Lie-Rinehart axioms. With `weak`, the `A`-linearity of the anchor is not required.
pub fn check_3lie_rinehart(s: &ThreeLieRinehartStructure, weak: bool) -> CheckReport {
    let mut r = CheckReport::new(if weak { "weak_3lie_rinehart" } else { "3lie_rinehart" });
    if !parity_gate(
        &mut r,
        &[("bracket", &s.bracket), ("action", &s.action), ("anchor", &s.anchor), ("product", &s.algebra.product)],
    ) {
        return r;
    }
    r.absorb(check_algebra(&s.algebra));
    r.absorb(check_3lie_super(&s.bracket));
    let mut m = check_a_module(&s.algebra, &s.action);
    m.name = "l_module".into();
    r.absorb(m);
    let mut rep = check_rep_3lie(&s.anchor, &s.bracket);
    rep.name = "anchor_rep".into();
    r.absorb(rep);
    let a = &s.algebra;
    let (n, na) = (s.dim(), a.dim());
    let pl = s.space.parities();
    let pa = a.space.parities();
    for t in Tuples::cube(n, 2) {
        let (x, y) = (t[0], t[1]);
        derivation_rows(&mut r, "derivation", &t, pl[x] ^ pl[y], a, |v| s.rho(&b(x), &b(y), v));
        for ai in 0..na {
            if !weak {
                let ax = s.action.eval_basis(&[ai, x]);
                let ay = s.action.eval_basis(&[ai, y]);
                for bi in 0..na {
                    let r1 = s.rho(&ax, &b(y), &b(bi));
                    let r2 = s.rho(&b(x), &ay, &b(bi)).signed((pa[ai] * pl[x]) as usize);
                    let r3 = a.mul(&b(ai), &s.anchor.eval_basis(&[x, y, bi]));
                    r.expect_eq("anchor_linear", &[ai, x, y, bi], r1.clone(), r2);
                    r.expect_eq("anchor_linear", &[ai, x, y, bi], r1, r3);
                }
            }
            let rho_a = s.anchor.eval_basis(&[x, y, ai]);
            let bxy: Vec<Element> = (0..n).map(|z| s.bracket.eval_basis(&[x, y, z])).collect();
            for z in 0..n {
                let lhs = s.br(&b(x), &b(y), &s.action.eval_basis(&[ai, z]));
                let rhs = signed_sum(vec![
                    ((pa[ai] * (pl[x] + pl[y])) as usize, s.act(&b(ai), &bxy[z])),
                    (0, s.act(&rho_a, &b(z))),
                ]);
                r.expect_eq("compatibility", &[x, y, ai, z], lhs, rhs);
            }
        }
    }
    r
}

/// Left module over a Lie-Rinehart superalgebra.
pub fn check_module_lr(theta: &RepresentationAction, s: &LieRinehartStructure) -> CheckReport {
    let mut r = CheckReport::new("module_lr");
    if !parity_gate(&mut r, &[("action", &theta.action), ("a_action", &theta.a_action)]) {
        return r;
    }
    r.absorb(check_a_module(&s.algebra, &theta.a_action));
    r.absorb(check_rep_lie(&theta.action, &s.bracket));
    let (n, na, nm) = (s.dim(), s.algebra.dim(), theta.dim());
    let pl = s.space.parities();
    let pa = s.algebra.space.parities();
    let th = |x: &Element, m: &Element| theta.action.eval(&[x, m]);
    let am = |a: &Element, m: &Element| theta.a_action.eval(&[a, m]);
    for ai in 0..na {
        for x in 0..n {
            let ax = s.action.eval_basis(&[ai, x]);
            let mu_a = s.anchor.eval_basis(&[x, ai]);
            for m in 0..nm {
                let lhs = th(&ax, &b(m));
                let rhs = am(&b(ai), &theta.action.eval_basis(&[x, m]));
                r.expect_eq("a_linear", &[ai, x, m], lhs, rhs);
                let lhs = th(&b(x), &theta.a_action.eval_basis(&[ai, m]));
                let rhs = signed_sum(vec![
                    ((pa[ai] * pl[x]) as usize, am(&b(ai), &theta.action.eval_basis(&[x, m]))),
                    (0, am(&mu_a, &b(m))),
                ]);
                r.expect_eq("leibniz", &[x, ai, m], lhs, rhs);
            }
        }
    }
    r
}

/// Left module over a 3-Lie-Rinehart superalgebra: representation, `A`-linearity in both slots and
/// the Leibniz rule `psi(x,y)(am) = (-1)^{|a|(|x|+|y|)} a psi(x,y)m + rho(x,y)(a) m`.
pub fn check_module_3lr(psi: &RepresentationAction, s: &ThreeLieRinehartStructure) -> CheckReport {
    let mut r = CheckReport::new("module_3lr");
    if !parity_gate(&mut r, &[("action", &psi.action), ("a_action", &psi.a_action)]) {
        return r;
    }
    r.absorb(check_a_module(&s.algebra, &psi.a_action));
    r.absorb(check_rep_3lie(&psi.action, &s.bracket));
    let (n, na, nm) = (s.dim(), s.algebra.dim(), psi.dim());
    let pl = s.space.parities();
    let pa = s.algebra.space.parities();
    let ps_ = |x: &Element, y: &Element, m: &Element| psi.action.eval(&[x, y, m]);
    let am = |a: &Element, m: &Element| psi.a_action.eval(&[a, m]);
    for t in Tuples::cube(n, 2) {
        let (x, y) = (t[0], t[1]);
        for ai in 0..na {
            let ax = s.action.eval_basis(&[ai, x]);
            let ay = s.action.eval_basis(&[ai, y]);
            let rho_a = s.anchor.eval_basis(&[x, y, ai]);
            for m in 0..nm {
                let idx = [ai, x, y, m];
                let l1 = ps_(&ax, &b(y), &b(m));
                let l2 = ps_(&b(x), &ay, &b(m)).signed((pa[ai] * pl[x]) as usize);
                let l3 = am(&b(ai), &psi.action.eval_basis(&[x, y, m]));
                r.expect_eq("a_linear", &idx, l1.clone(), l2);
                r.expect_eq("a_linear", &idx, l1, l3);
                let lhs = ps_(&b(x), &b(y), &psi.a_action.eval_basis(&[ai, m]));
                let rhs = signed_sum(vec![
                    ((pa[ai] * (pl[x] + pl[y])) as usize, am(&b(ai), &psi.action.eval_basis(&[x, y, m]))),
                    (0, am(&rho_a, &b(m))),
                ]);
                r.expect_eq("leibniz", &[x, y, ai, m], lhs, rhs);
            }
        }
    }
    r
}

/// `(g, f)` is a homomorphism: `g` is an algebra map, `f` preserves brackets, `f(ax) = g(a) f(x)` and
/// `g(rho(x,y)a) = rho'(f x, f y)(g a)`.
pub fn check_homomorphism(
    g: &MultilinearMap,
    f: &MultilinearMap,
    src: &ThreeLieRinehartStructure,
    dst: &ThreeLieRinehartStructure,
) -> CheckReport {
    let mut r = CheckReport::new("homomorphism");
    if !parity_gate(&mut r, &[("g", g), ("f", f)]) {
        return r;
    }
    if g.parity() != 0 || f.parity() != 0 {
        r.violation("even", &[], Element::zero(), Element::zero());
        return r;
    }
    let (n, na) = (src.dim(), src.algebra.dim());
    let fe = |x: &Element| f.eval(&[x]);
    let ge = |a: &Element| g.eval(&[a]);
    for t in Tuples::cube(na, 2) {
        let lhs = ge(&src.algebra.mul_basis(t[0], t[1]));
        let rhs = dst.algebra.mul(&g.eval_basis(&[t[0]]), &g.eval_basis(&[t[1]]));
        r.expect_eq("algebra_map", &t, lhs, rhs);
    }
    if let (Some(u), Some(u2)) = (src.algebra.unit, dst.algebra.unit) {
        r.expect_eq("unit", &[u], g.eval_basis(&[u]), b(u2));
    }
    let fx: Vec<Element> = (0..n).map(|x| f.eval_basis(&[x])).collect();
    for t in Tuples::cube(n, 3) {
        let lhs = fe(&src.bracket.eval_basis(&t));
        let rhs = dst.br(&fx[t[0]], &fx[t[1]], &fx[t[2]]);
        r.expect_eq("bracket", &t, lhs, rhs);
    }
    for a in 0..na {
        let ga = g.eval_basis(&[a]);
        for x in 0..n {
            let lhs = fe(&src.action.eval_basis(&[a, x]));
            let rhs = dst.act(&ga, &fx[x]);
            r.expect_eq("a_linear", &[a, x], lhs, rhs);
        }
        for t in Tuples::cube(n, 2) {
            let lhs = ge(&src.anchor.eval_basis(&[t[0], t[1], a]));
            let rhs = dst.rho(&fx[t[0]], &fx[t[1]], &ga);
            r.expect_eq("anchor", &[t[0], t[1], a], lhs, rhs);
        }
    }
    r
}
