//! Formal deformations of a 3-Lie-Rinehart superalgebra, truncated at a fixed order.

use crate::cohomology::{CohomologyError, Complex};
use crate::graded::{Element, GradedSpace, MultilinearMap, Tuples};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::structures::{adjoint_rep, parity_gate, signed_sum, skew3, ThreeLieRinehartStructure};
use crate::SignConvention;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DeformationError {
    #[error("order {n} outside 0..={order}")]
    OutOfRange { n: usize, order: usize },
    #[error("all terms vanish: the deformation is trivial to order {0}")]
    Trivial(usize),
    #[error("orders differ: deformation {deformation}, automorphism {automorphism}")]
    OrderMismatch { deformation: usize, automorphism: usize },
    #[error("term {0} is not an even map of the right shape")]
    BadTerm(usize),
    #[error("the {0}-infinitesimal is not a coboundary")]
    NotCoboundary(usize),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// `m_t = m_0 + t m_1 + ... + t^N m_N` with `m_0` the base bracket; the anchor is not deformed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalDeformation {
    pub base: ThreeLieRinehartStructure,
    terms: Vec<MultilinearMap>,
}

impl FormalDeformation {
    /// `terms[i]` is `m_{i+1}`; the truncation order is `terms.len()`.
    pub fn new(base: ThreeLieRinehartStructure, terms: Vec<MultilinearMap>) -> Result<Self, DeformationError> {
        for (i, m) in terms.iter().enumerate() {
            if m.arity() != 3
                || m.parity() != 0
                || m.codomain() != &base.space
                || m.domains().iter().any(|d| d != &base.space)
            {
                return Err(DeformationError::BadTerm(i + 1));
            }
        }
        Ok(FormalDeformation { base, terms })
    }

    /// All terms zero up to order `order`.
    pub fn trivial(base: ThreeLieRinehartStructure, order: usize) -> Self {
        let zero = MultilinearMap::power(&base.space, 3, &base.space, 0);
        FormalDeformation { terms: vec![zero; order], base }
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `m_i`, with `m_0` the base bracket.
    pub fn term(&self, i: usize) -> &MultilinearMap {
        if i == 0 {
            &self.base.bracket
        } else {
            &self.terms[i - 1]
        }
    }

    pub fn terms(&self) -> &[MultilinearMap] {
        &self.terms
    }

    pub fn is_trivial(&self) -> bool {
        self.terms.iter().all(|m| m.is_zero())
    }
}

/// `Phi_t = id + t phi_1 + ... + t^N phi_N` with even linear maps `phi_i: L -> L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalAutomorphism {
    pub space: GradedSpace,
    terms: Vec<MultilinearMap>,
}

impl FormalAutomorphism {
    pub fn new(space: GradedSpace, terms: Vec<MultilinearMap>) -> Result<Self, DeformationError> {
        for (i, f) in terms.iter().enumerate() {
            if f.arity() != 1 || f.parity() != 0 || f.codomain() != &space || f.domain(0) != &space {
                return Err(DeformationError::BadTerm(i + 1));
            }
        }
        Ok(FormalAutomorphism { space, terms })
    }

    pub fn identity(space: GradedSpace, order: usize) -> Self {
        let zero = MultilinearMap::power(&space, 1, &space, 0);
        FormalAutomorphism { terms: vec![zero; order], space }
    }

    /// `id + t^n phi`, truncated at `order`.
    pub fn monomial(phi: MultilinearMap, n: usize, order: usize) -> Result<Self, DeformationError> {
        let space = phi.codomain().clone();
        let mut a = FormalAutomorphism::identity(space.clone(), order);
        if n == 0 || n > order {
            return Err(DeformationError::OutOfRange { n, order });
        }
        a.terms[n - 1] = phi;
        FormalAutomorphism::new(space, a.terms)
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[MultilinearMap] {
        &self.terms
    }

    /// `phi_i` applied to `x`, with `phi_0 = id`.
    fn apply(&self, i: usize, x: &Element) -> Element {
        if i == 0 {
            x.clone()
        } else {
            self.terms[i - 1].eval(&[x])
        }
    }
}

/// `f o g` for linear maps.
pub fn compose_linear(f: &MultilinearMap, g: &MultilinearMap) -> MultilinearMap {
    let mut out = MultilinearMap::new(vec![g.domain(0).clone()], f.codomain().clone(), (f.parity() + g.parity()) % 2);
    for x in 0..g.domain(0).dim() {
        let v = f.eval(&[&g.eval_basis(&[x])]);
        if !v.is_zero() {
            out.set_value(&[x], v).expect("parities add");
        }
    }
    out
}

/// `Phi o Psi`, truncated at the common order.
pub fn compose(phi: &FormalAutomorphism, psi: &FormalAutomorphism) -> Result<FormalAutomorphism, DeformationError> {
    if phi.order() != psi.order() {
        return Err(DeformationError::OrderMismatch { deformation: phi.order(), automorphism: psi.order() });
    }
    let mut terms = Vec::with_capacity(phi.order());
    for n in 1..=phi.order() {
        let mut t = phi.terms[n - 1].plus_scaled(&Scalar::one(), &psi.terms[n - 1]);
        for i in 1..n {
            t.add_map(&Scalar::one(), &compose_linear(&phi.terms[i - 1], &psi.terms[n - i - 1]));
        }
        terms.push(t);
    }
    FormalAutomorphism::new(phi.space.clone(), terms)
}

/// The inverse series: `psi_n = -phi_n - sum_{i+j=n, i,j>=1} phi_i o psi_j`.
pub fn formal_inverse(phi: &FormalAutomorphism) -> FormalAutomorphism {
    let mut terms: Vec<MultilinearMap> = Vec::with_capacity(phi.order());
    for n in 1..=phi.order() {
        let mut t = phi.terms[n - 1].scaled(&-Scalar::one());
        for i in 1..n {
            t.add_map(&-Scalar::one(), &compose_linear(&phi.terms[i - 1], &terms[n - i - 1]));
        }
        terms.push(t);
    }
    FormalAutomorphism { space: phi.space.clone(), terms }
}

/// Coefficient of `t^n` in the deformation equation, on basis 5-tuples `(x, y, z, u, v)`:
/// `sum_{i+j=n} m_i(x,y,m_j(z,u,v)) - m_i(m_j(x,y,z),u,v) - (-1)^{z(x+y)} m_i(z,m_j(x,y,u),v)
/// - (-1)^{(z+u)(x+y)} m_i(z,u,m_j(x,y,v))`.
pub fn deformation_residual(d: &FormalDeformation, n: usize) -> Result<MultilinearMap, DeformationError> {
    if n > d.order() {
        return Err(DeformationError::OutOfRange { n, order: d.order() });
    }
    let space = &d.base.space;
    let p = space.parities();
    let b = Element::basis;
    let mut out = MultilinearMap::power(space, 5, space, 0);
    for t in Tuples::cube(space.dim(), 5) {
        let (x, y, z, u, v) = (t[0], t[1], t[2], t[3], t[4]);
        let pxy = (p[x] + p[y]) as usize;
        let mut val = Element::zero();
        for i in 0..=n {
            let (mi, mj) = (d.term(i), d.term(n - i));
            if mi.is_zero() || mj.is_zero() {
                continue;
            }
            let m = |a: &Element, bb: &Element, c: &Element| mi.eval(&[a, bb, c]);
            val.add_scaled(
                &Scalar::one(),
                &signed_sum(vec![
                    (0, m(&b(x), &b(y), &mj.eval_basis(&[z, u, v]))),
                    (1, m(&mj.eval_basis(&[x, y, z]), &b(u), &b(v))),
                    (1 + p[z] as usize * pxy, m(&b(z), &mj.eval_basis(&[x, y, u]), &b(v))),
                    (1 + (p[z] + p[u]) as usize * pxy, m(&b(z), &b(u), &mj.eval_basis(&[x, y, v]))),
                ]),
            );
        }
        if !val.is_zero() {
            out.set_value(&t, val).expect("even terms");
        }
    }
    Ok(out)
}

/// `m(x, y, a z) = (-1)^{a(x+y)} a m(x, y, z)` and the analogues in the other slots.
fn check_a_trilinear(r: &mut CheckReport, label: &str, m: &MultilinearMap, s: &ThreeLieRinehartStructure) {
    let p = s.space.parities();
    for t in Tuples::cube(s.dim(), 3) {
        let base = m.eval_basis(&t);
        for a in 0..s.algebra.dim() {
            let pa = s.algebra.parity(a) as usize;
            let scaled = s.action.eval(&[&Element::basis(a), &base]);
            for slot in 0..3 {
                let mut args: Vec<Element> = t.iter().map(|&i| Element::basis(i)).collect();
                args[slot] = s.action.eval_basis(&[a, t[slot]]);
                let refs: Vec<&Element> = args.iter().collect();
                let before: usize = t[..slot].iter().map(|&i| p[i] as usize).sum();
                let mut idx = t.clone();
                idx.push(a);
                r.expect_eq(label, &idx, m.eval(&refs), scaled.signed(pa * before));
            }
        }
    }
}

/// Every `m_i` even, super skew and `A`-trilinear, and every residual through order `N` zero.
pub fn check_deformation(d: &FormalDeformation) -> CheckReport {
    let mut r = CheckReport::new("deformation");
    for (i, m) in d.terms.iter().enumerate() {
        let name = format!("m{}", i + 1);
        if m.parity() != 0 {
            r.violation(&format!("{name}_even"), &[], Element::zero(), Element::zero());
        }
        if !parity_gate(&mut r, &[(name.as_str(), m)]) {
            continue;
        }
        let mut sub = CheckReport::new(name.clone());
        skew3(&mut sub, m);
        check_a_trilinear(&mut sub, "a_linear", m, &d.base);
        r.absorb(sub);
    }
    for n in 0..=d.order() {
        let res = deformation_residual(d, n).expect("in range");
        for (t, v) in res.rows() {
            r.violation(&format!("residual_{n}"), t, v.clone(), Element::zero());
        }
    }
    r
}

/// The smallest `n >= 1` with `m_n != 0`, and that term.
pub fn infinitesimal(d: &FormalDeformation) -> Result<(usize, MultilinearMap), DeformationError> {
    d.terms
        .iter()
        .enumerate()
        .find(|(_, m)| !m.is_zero())
        .map(|(i, m)| (i + 1, m.clone()))
        .ok_or(DeformationError::Trivial(d.order()))
}

/// `m'_t = Phi^{-1} m_t(Phi x, Phi y, Phi z)` truncated at order `N`.
/// Acting by `Phi` and then `Psi` equals acting by `compose(Phi, Psi)`.
pub fn apply_equivalence(
    d: &FormalDeformation,
    phi: &FormalAutomorphism,
) -> Result<FormalDeformation, DeformationError> {
    let order = d.order();
    if phi.order() != order {
        return Err(DeformationError::OrderMismatch { deformation: order, automorphism: phi.order() });
    }
    let inv = formal_inverse(phi);
    let space = &d.base.space;
    let dim = space.dim();
    let mut terms: Vec<MultilinearMap> = (0..order).map(|_| MultilinearMap::power(space, 3, space, 0)).collect();
    // images[k][x] = phi_k(e_x)
    let images: Vec<Vec<Element>> =
        (0..=order).map(|k| (0..dim).map(|x| phi.apply(k, &Element::basis(x))).collect()).collect();
    for t in Tuples::cube(dim, 3) {
        // inner[s] = coefficient of t^s in m_t(Phi x, Phi y, Phi z)
        let mut inner = vec![Element::zero(); order + 1];
        for c in 0..=order {
            for e in 0..=order - c {
                for f in 0..=order - c - e {
                    let args = [&images[c][t[0]], &images[e][t[1]], &images[f][t[2]]];
                    if args.iter().any(|a| a.is_zero()) {
                        continue;
                    }
                    for m in 0..=order - c - e - f {
                        let v = d.term(m).eval(&args);
                        inner[c + e + f + m].add_scaled(&Scalar::one(), &v);
                    }
                }
            }
        }
        for n in 1..=order {
            let mut v = Element::zero();
            for a in 0..=n {
                if !inner[n - a].is_zero() {
                    v.add_scaled(&Scalar::one(), &inv.apply(a, &inner[n - a]));
                }
            }
            if !v.is_zero() {
                terms[n - 1].set_value(&t, v).expect("even terms");
            }
        }
    }
    Ok(FormalDeformation { base: d.base.clone(), terms })
}

/// `m_1 - m'_1 = delta phi_1` for `D' = apply_equivalence(D, Phi)`, the coboundary taken with
/// adjoint coefficients.
pub fn infinitesimal_class_invariant(
    d: &FormalDeformation,
    phi: &FormalAutomorphism,
    convention: SignConvention,
) -> Result<CheckReport, DeformationError> {
    let mut r = CheckReport::new("infinitesimal_class");
    if d.order() == 0 {
        return Ok(r);
    }
    let moved = apply_equivalence(d, phi)?;
    let complex = Complex::three_lr(&d.base, &adjoint_rep(&d.base), convention, false);
    let delta = complex.coboundary(&phi.terms[0])?;
    for t in Tuples::cube(d.base.dim(), 3) {
        let lhs = &d.term(1).eval_basis(&t) - &moved.term(1).eval_basis(&t);
        r.expect_eq("order1", &t, lhs, delta.eval_basis(&t));
    }
    Ok(r)
}

/// With `m_n = delta phi` the `n`-infinitesimal, returns `D` acted on by `id + t^n phi`, whose
/// terms vanish through order `n`. Refused when `m_n` is not a coboundary.
pub fn push_past_coboundary(
    d: &FormalDeformation,
    convention: SignConvention,
) -> Result<FormalDeformation, DeformationError> {
    let (n, mn) = infinitesimal(d)?;
    let complex = Complex::three_lr(&d.base, &adjoint_rep(&d.base), convention, false);
    let zero = mn.scaled(&Scalar::from_integer(0.into()));
    let witness = complex.same_class(&zero, &mn)?.ok_or(DeformationError::NotCoboundary(n))?;
    let phi = FormalAutomorphism::monomial(witness, n, d.order())?;
    apply_equivalence(d, &phi)
}

/// Repeats `push_past_coboundary` until the deformation is trivial to order `N` or an
/// infinitesimal that is not a coboundary appears. Returns the final deformation.
pub fn reduce_deformation(
    d: &FormalDeformation,
    convention: SignConvention,
) -> Result<FormalDeformation, DeformationError> {
    let mut cur = d.clone();
    loop {
        if cur.is_trivial() {
            return Ok(cur);
        }
        match push_past_coboundary(&cur, convention) {
            Ok(next) => cur = next,
            Err(DeformationError::NotCoboundary(_)) => return Ok(cur),
            Err(e) => return Err(e),
        }
    }
}
