//! Induced and derived structures: supertrace induction, binary reduction, `A (x) L`, `L (+) A`
//! and the semidirect sum with a module.

use crate::graded::{Element, GradedSpace, MultilinearMap, Tuples};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::report::CheckReport;
use crate::scalar::{sign, Parity, Scalar};
use crate::structures::{
    check_3lie_rinehart, check_lie_rinehart, check_module_3lr, signed_sum, LieRinehartStructure, RepresentationAction,
    ThreeLieRinehartStructure,
};
use crate::SignConvention;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("precondition failed: {} ({} violations)", .0.name, .0.violations.len())]
    Precondition(Box<CheckReport>),
    #[error("base point must be an even element of L")]
    OddBasePoint,
    #[error("trace has {got} values but the space has dimension {dim}")]
    TraceLength { got: usize, dim: usize },
}

fn require(report: CheckReport) -> Result<(), ConstructionError> {
    if report.passed {
        Ok(())
    } else {
        Err(ConstructionError::Precondition(Box::new(report)))
    }
}

/// An even linear functional `L -> K` given by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperTrace {
    pub values: Vec<Scalar>,
}

impl SuperTrace {
    pub fn new(values: Vec<Scalar>) -> Self {
        SuperTrace { values }
    }

    pub fn zero(dim: usize) -> Self {
        SuperTrace { values: vec![Scalar::zero(); dim] }
    }

    pub fn at(&self, i: usize) -> &Scalar {
        &self.values[i]
    }

    pub fn eval(&self, x: &Element) -> Scalar {
        let mut s = Scalar::zero();
        for (i, c) in x.iter() {
            s += c * &self.values[i];
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

pub(crate) fn scalar_element(c: Scalar) -> Element {
    Element::from_pairs([(0, c)])
}

fn check_trace_len(tau: &SuperTrace, dim: usize) -> Result<(), ConstructionError> {
    if tau.values.len() != dim {
        return Err(ConstructionError::TraceLength { got: tau.values.len(), dim });
    }
    Ok(())
}

/// `tau` vanishes on odd basis vectors and on all brackets.
pub fn check_supertrace(tau: &SuperTrace, s: &LieRinehartStructure) -> CheckReport {
    check_supertrace_of(tau, &s.space, &s.bracket)
}

pub fn check_supertrace_of(tau: &SuperTrace, space: &GradedSpace, bracket: &MultilinearMap) -> CheckReport {
    let mut r = CheckReport::new("supertrace");
    if tau.values.len() != space.dim() {
        r.violation("length", &[tau.values.len()], Element::zero(), Element::zero());
        return r;
    }
    for i in 0..space.dim() {
        if space.parity(i) == 1 && !tau.at(i).is_zero() {
            r.violation("even", &[i], scalar_element(tau.at(i).clone()), Element::zero());
        }
    }
    for t in Tuples::cube(space.dim(), 2) {
        let v = tau.eval(&bracket.eval_basis(&t));
        r.expect_zero("kills_brackets", &t, scalar_element(v));
    }
    r
}

/// `tau(a x) y = tau(x) a y` for all basis `a`, `x`, `y`.
pub fn check_trace_module_condition(tau: &SuperTrace, s: &LieRinehartStructure) -> CheckReport {
    let mut r = CheckReport::new("trace_module");
    let n = s.dim();
    for a in 0..s.algebra.dim() {
        for x in 0..n {
            let tax = tau.eval(&s.action.eval_basis(&[a, x]));
            for y in 0..n {
                let lhs = Element::basis(y).scaled(&tax);
                let rhs = s.action.eval_basis(&[a, y]).scaled(tau.at(x));
                r.expect_eq("condition", &[a, x, y], lhs, rhs);
            }
        }
    }
    r
}

fn trace_rows_supertrace(space: &GradedSpace, bracket: &MultilinearMap) -> Vec<SparseVec> {
    let mut rows = Vec::new();
    for i in 0..space.dim() {
        if space.parity(i) == 1 {
            rows.push(SparseVec::from([(i, crate::scalar::one())]));
        }
    }
    for t in Tuples::cube(space.dim(), 2) {
        let v = bracket.eval_basis(&t);
        if !v.is_zero() {
            rows.push(v.as_map().clone());
        }
    }
    rows
}

fn traces_from(dim: usize, rows: Vec<SparseVec>) -> Vec<SuperTrace> {
    SparseMatrix::from_rows(dim, rows)
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut t = SuperTrace::zero(dim);
            for (i, c) in v {
                t.values[i] = c;
            }
            t
        })
        .collect()
}

/// Basis of the space of supertraces.
pub fn supertrace_space(space: &GradedSpace, bracket: &MultilinearMap) -> Vec<SuperTrace> {
    traces_from(space.dim(), trace_rows_supertrace(space, bracket))
}

/// Basis of the supertraces that also satisfy `tau(a x) y = tau(x) a y`.
pub fn compatible_trace_space(s: &LieRinehartStructure) -> Vec<SuperTrace> {
    let n = s.dim();
    let mut rows = trace_rows_supertrace(&s.space, &s.bracket);
    for a in 0..s.algebra.dim() {
        for x in 0..n {
            let ax = s.action.eval_basis(&[a, x]);
            for y in 0..n {
                let ay = s.action.eval_basis(&[a, y]);
                for k in 0..n {
                    let mut row = SparseVec::new();
                    if k == y {
                        for (i, c) in ax.iter() {
                            crate::linalg::add_scaled(&mut row, c, &SparseVec::from([(i, crate::scalar::one())]));
                        }
                    }
                    let c = ay.coeff(k);
                    if !c.is_zero() {
                        crate::linalg::add_scaled(&mut row, &-c, &SparseVec::from([(x, crate::scalar::one())]));
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    traces_from(n, rows)
}

/// `[x1,x2,x3]_tau = tau(x1)[x2,x3] - (-1)^{x1 x2} tau(x2)[x1,x3] + (-1)^{x3(x1+x2)} tau(x3)[x1,x2]`.
pub fn induce_3bracket_unchecked(bracket: &MultilinearMap, tau: &SuperTrace) -> MultilinearMap {
    let space = bracket.codomain().clone();
    let n = space.dim();
    let p = space.parities();
    let mut out = MultilinearMap::power(&space, 3, &space, 0);
    for t in Tuples::cube(n, 3) {
        let (x1, x2, x3) = (t[0], t[1], t[2]);
        let mut v = bracket.eval_basis(&[x2, x3]).scaled(tau.at(x1));
        v.add_scaled(&(sign((p[x1] * p[x2]) as usize + 1) * tau.at(x2)), &bracket.eval_basis(&[x1, x3]));
        v.add_scaled(&(sign((p[x3] * (p[x1] + p[x2])) as usize) * tau.at(x3)), &bracket.eval_basis(&[x1, x2]));
        if !v.is_zero() {
            out.set_value(&t, v).expect("induced bracket is even");
        }
    }
    out
}

/// The induced ternary bracket; refuses unless `tau` is a supertrace.
pub fn induce_3bracket(s: &LieRinehartStructure, tau: &SuperTrace) -> Result<MultilinearMap, ConstructionError> {
    check_trace_len(tau, s.dim())?;
    require(check_supertrace(tau, s))?;
    Ok(induce_3bracket_unchecked(&s.bracket, tau))
}

/// `rho_tau(x,y) = tau(x) mu(y) - (-1)^{xy} tau(y) mu(x)` for a binary action `L x M -> M`.
pub fn induce_rep(mu: &RepresentationAction, tau: &SuperTrace) -> RepresentationAction {
    let l = mu.action.domain(0).clone();
    let m = mu.carrier.clone();
    let p = l.parities();
    let mut act = MultilinearMap::new(vec![l.clone(), l.clone(), m.clone()], m.clone(), mu.action.parity());
    for t in Tuples::cube(l.dim(), 2) {
        let (x, y) = (t[0], t[1]);
        for k in 0..m.dim() {
            let mut v = mu.action.eval_basis(&[y, k]).scaled(tau.at(x));
            v.add_scaled(&(sign((p[x] * p[y]) as usize + 1) * tau.at(y)), &mu.action.eval_basis(&[x, k]));
            if !v.is_zero() {
                act.set_value(&[x, y, k], v).expect("parity preserved");
            }
        }
    }
    RepresentationAction::new(m, act, mu.a_action.clone())
}

/// The induced 3-Lie-Rinehart superalgebra without checking preconditions.
pub fn induce_3lr_unchecked(s: &LieRinehartStructure, tau: &SuperTrace) -> ThreeLieRinehartStructure {
    let bracket = induce_3bracket_unchecked(&s.bracket, tau);
    let mu = RepresentationAction::new(s.algebra.space.clone(), s.anchor.clone(), s.algebra.product.clone());
    let rho = induce_rep(&mu, tau);
    ThreeLieRinehartStructure::new(s.algebra.clone(), s.space.clone(), bracket, s.action.clone(), rho.action)
}

/// The induced 3-Lie-Rinehart superalgebra `L_tau`. Refused, with the failing report, unless `S` is a
/// Lie-Rinehart superalgebra and `tau` a supertrace satisfying `tau(ax)y = tau(x)ay`.
pub fn induce_3lr(s: &LieRinehartStructure, tau: &SuperTrace) -> Result<ThreeLieRinehartStructure, ConstructionError> {
    check_trace_len(tau, s.dim())?;
    require(check_lie_rinehart(s))?;
    require(check_supertrace(tau, s))?;
    require(check_trace_module_condition(tau, s))?;
    Ok(induce_3lr_unchecked(s, tau))
}

/// `[x,y]_{x0} = [x0,x,y]` and `mu_{x0}(x)(a) = rho(x0,x)(a)`, for a homogeneous even `x0`.
pub fn reduce_binary(s: &ThreeLieRinehartStructure, x0: &Element) -> Result<LieRinehartStructure, ConstructionError> {
    if x0.iter().any(|(i, _)| i >= s.dim() || s.p(i) != 0) {
        return Err(ConstructionError::OddBasePoint);
    }
    let n = s.dim();
    let mut bracket = MultilinearMap::power(&s.space, 2, &s.space, 0);
    let mut anchor = MultilinearMap::new(vec![s.space.clone(), s.algebra.space.clone()], s.algebra.space.clone(), 0);
    for t in Tuples::cube(n, 2) {
        let v = s.bracket.eval(&[x0, &Element::basis(t[0]), &Element::basis(t[1])]);
        if !v.is_zero() {
            bracket.set_value(&t, v).expect("even base point");
        }
    }
    for x in 0..n {
        for a in 0..s.algebra.dim() {
            let v = s.anchor.eval(&[x0, &Element::basis(x), &Element::basis(a)]);
            if !v.is_zero() {
                anchor.set_value(&[x, a], v).expect("even base point");
            }
        }
    }
    Ok(LieRinehartStructure::new(s.algebra.clone(), s.space.clone(), bracket, s.action.clone(), anchor))
}

/// Entries where two maps of the same shape differ: `(inputs, left, right)`.
pub fn entrywise_diff(left: &MultilinearMap, right: &MultilinearMap) -> Vec<(Vec<usize>, Element, Element)> {
    let mut keys: Vec<Vec<usize>> = left.rows().map(|(k, _)| k.clone()).collect();
    keys.extend(right.rows().map(|(k, _)| k.clone()));
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|k| {
            let (l, r) = (left.eval_basis(&k), right.eval_basis(&k));
            (l != r).then_some((k, l, r))
        })
        .collect()
}

/// Position of `a_i (x) e_j` in `A (x) L`.
pub fn tensor_index(i: usize, j: usize, dim_l: usize) -> usize {
    i * dim_l + j
}

/// `A (x) L` with the lexicographic basis and parity `a_i + x_j`, without checking the input.
pub fn tensor_lift_unchecked(s: &ThreeLieRinehartStructure, convention: SignConvention) -> ThreeLieRinehartStructure {
    let (na, nl) = (s.algebra.dim(), s.dim());
    let pa = s.algebra.space.parities();
    let pl = s.space.parities();
    let idx: Vec<(usize, usize)> = (0..na).flat_map(|i| (0..nl).map(move |j| (i, j))).collect();
    let pb: Vec<Parity> = idx.iter().map(|&(i, j)| (pa[i] + pl[j]) % 2).collect();
    let space = GradedSpace::new(format!("{}(x){}", s.algebra.space.label(), s.space.label()), pb)
        .expect("parities are 0 or 1");
    let tens = |a: &Element, x: &Element| {
        let mut out = Element::zero();
        for (i, u) in a.iter() {
            for (j, v) in x.iter() {
                out.add_at(tensor_index(i, j, nl), &(u * v));
            }
        }
        out
    };
    let mul3 = |a: usize, b: usize, c: &Element| s.algebra.mul(&s.algebra.mul_basis(a, b), c);
    let e = Element::basis;
    let fourth = match convention {
        SignConvention::Consistent => 1,
        SignConvention::Literal => 0,
    };
    let nb = idx.len();
    let mut bracket = MultilinearMap::power(&space, 3, &space, 0);
    for t in Tuples::cube(nb, 3) {
        let ((a1, x1), (a2, x2), (a3, x3)) = (idx[t[0]], idx[t[1]], idx[t[2]]);
        let p = |i: usize| pa[i] as usize;
        let q = |j: usize| pl[j] as usize;
        let v = signed_sum(vec![
            (
                p(a2) * q(x1) + p(a3) * (q(x1) + q(x2)),
                tens(&mul3(a1, a2, &e(a3)), &s.bracket.eval_basis(&[x1, x2, x3])),
            ),
            (p(a2) * q(x1), tens(&mul3(a1, a2, &s.anchor.eval_basis(&[x1, x2, a3])), &e(x3))),
            (
                p(a3) * q(x2) + (p(a1) + q(x1)) * (p(a2) + p(a3) + q(x2) + q(x3)),
                tens(&mul3(a2, a3, &s.anchor.eval_basis(&[x2, x3, a1])), &e(x1)),
            ),
            (
                fourth + p(a3) * q(x1) + (p(a2) + q(x2)) * (p(a3) + q(x3)),
                tens(&mul3(a1, a3, &s.anchor.eval_basis(&[x1, x3, a2])), &e(x2)),
            ),
        ]);
        if !v.is_zero() {
            bracket.set_value(&t, v).expect("tensor bracket is even");
        }
    }
    let mut anchor =
        MultilinearMap::new(vec![space.clone(), space.clone(), s.algebra.space.clone()], s.algebra.space.clone(), 0);
    for t in Tuples::cube(nb, 2) {
        let ((a1, x1), (a2, x2)) = (idx[t[0]], idx[t[1]]);
        for c in 0..na {
            let v = mul3(a1, a2, &s.anchor.eval_basis(&[x1, x2, c])).signed((pa[a2] * pl[x1]) as usize);
            if !v.is_zero() {
                anchor.set_value(&[t[0], t[1], c], v).expect("anchor is even");
            }
        }
    }
    let mut action = MultilinearMap::new(vec![s.algebra.space.clone(), space.clone()], space.clone(), 0);
    for a in 0..na {
        for (k, &(b, x)) in idx.iter().enumerate() {
            let v = tens(&s.algebra.mul_basis(a, b), &e(x));
            if !v.is_zero() {
                action.set_value(&[a, k], v).expect("action is even");
            }
        }
    }
    ThreeLieRinehartStructure::new(s.algebra.clone(), space, bracket, action, anchor)
}

/// `B = A (x) L`; refused unless the input passes the strict 3-Lie-Rinehart check.
pub fn tensor_lift(
    s: &ThreeLieRinehartStructure,
    convention: SignConvention,
) -> Result<ThreeLieRinehartStructure, ConstructionError> {
    require(check_3lie_rinehart(s, false))?;
    Ok(tensor_lift_unchecked(s, convention))
}

fn shift(e: &Element, offset: usize) -> Element {
    Element::from_pairs(e.iter().map(|(i, c)| (i + offset, c.clone())))
}

/// `E = L (+) A` with bracket `([x,y,z], rho(x,y)c - (-1)^{yz} rho(x,z)b + (-1)^{x(y+z)} rho(y,z)a)`.
pub fn trivial_extension_unchecked(s: &ThreeLieRinehartStructure) -> ThreeLieRinehartStructure {
    let (nl, na) = (s.dim(), s.algebra.dim());
    let space = s.space.direct_sum(&s.algebra.space, format!("{}+{}", s.space.label(), s.algebra.space.label()));
    let pe = space.parities().to_vec();
    let ne = nl + na;
    let mut bracket = MultilinearMap::power(&space, 3, &space, 0);
    for t in Tuples::cube(ne, 3) {
        let kinds: Vec<bool> = t.iter().map(|&k| k >= nl).collect();
        let v = match kinds.as_slice() {
            [false, false, false] => s.bracket.eval_basis(&t),
            [false, false, true] => shift(&s.anchor.eval_basis(&[t[0], t[1], t[2] - nl]), nl),
            [false, true, false] => {
                shift(&s.anchor.eval_basis(&[t[0], t[2], t[1] - nl]), nl).signed(1 + (pe[t[1]] * pe[t[2]]) as usize)
            }
            [true, false, false] => shift(&s.anchor.eval_basis(&[t[1], t[2], t[0] - nl]), nl)
                .signed((pe[t[0]] * (pe[t[1]] + pe[t[2]])) as usize),
            _ => Element::zero(),
        };
        if !v.is_zero() {
            bracket.set_value(&t, v).expect("extension bracket is even");
        }
    }
    let mut anchor =
        MultilinearMap::new(vec![space.clone(), space.clone(), s.algebra.space.clone()], s.algebra.space.clone(), 0);
    for t in Tuples::cube(nl, 2) {
        for c in 0..na {
            let v = s.anchor.eval_basis(&[t[0], t[1], c]);
            if !v.is_zero() {
                anchor.set_value(&[t[0], t[1], c], v).expect("anchor is even");
            }
        }
    }
    let mut action = MultilinearMap::new(vec![s.algebra.space.clone(), space.clone()], space.clone(), 0);
    for a in 0..na {
        for k in 0..ne {
            let v = if k < nl { s.action.eval_basis(&[a, k]) } else { shift(&s.algebra.mul_basis(a, k - nl), nl) };
            if !v.is_zero() {
                action.set_value(&[a, k], v).expect("action is even");
            }
        }
    }
    ThreeLieRinehartStructure::new(s.algebra.clone(), space, bracket, action, anchor)
}

/// `E = L (+) A`; refused unless the input passes the strict 3-Lie-Rinehart check.
pub fn trivial_extension(s: &ThreeLieRinehartStructure) -> Result<ThreeLieRinehartStructure, ConstructionError> {
    require(check_3lie_rinehart(s, false))?;
    Ok(trivial_extension_unchecked(s))
}

/// `L (+) M` with `[x1+m1, x2+m2, x3+m3] = [x1,x2,x3] + psi(x1,x2)m3 + (sign) psi(x3,x1)m2 +
/// (-1)^{x1(x2+x3)} psi(x2,x3)m1` and anchor `rho(x1,x2)`, without checking the module.
pub fn semidirect_sum_unchecked(
    s: &ThreeLieRinehartStructure,
    psi: &RepresentationAction,
    convention: SignConvention,
) -> ThreeLieRinehartStructure {
    let (nl, nm, na) = (s.dim(), psi.dim(), s.algebra.dim());
    let space = s.space.direct_sum(&psi.carrier, format!("{}+{}", s.space.label(), psi.carrier.label()));
    let p = space.parities().to_vec();
    let mut bracket = MultilinearMap::power(&space, 3, &space, 0);
    for t in Tuples::cube(nl + nm, 3) {
        let kinds: Vec<bool> = t.iter().map(|&k| k >= nl).collect();
        let (p0, p1, p2) = (p[t[0]] as usize, p[t[1]] as usize, p[t[2]] as usize);
        let v = match kinds.as_slice() {
            [false, false, false] => s.bracket.eval_basis(&t),
            [false, false, true] => shift(&psi.action.eval_basis(&[t[0], t[1], t[2] - nl]), nl),
            [true, false, false] => shift(&psi.action.eval_basis(&[t[1], t[2], t[0] - nl]), nl).signed(p0 * (p1 + p2)),
            [false, true, false] => {
                let e = match convention {
                    SignConvention::Consistent => p2 * (p0 + p1),
                    SignConvention::Literal => p1 * p2,
                };
                shift(&psi.action.eval_basis(&[t[2], t[0], t[1] - nl]), nl).signed(e)
            }
            _ => Element::zero(),
        };
        if !v.is_zero() {
            bracket.set_value(&t, v).expect("semidirect bracket is even");
        }
    }
    let mut anchor =
        MultilinearMap::new(vec![space.clone(), space.clone(), s.algebra.space.clone()], s.algebra.space.clone(), 0);
    for t in Tuples::cube(nl, 2) {
        for c in 0..na {
            let v = s.anchor.eval_basis(&[t[0], t[1], c]);
            if !v.is_zero() {
                anchor.set_value(&[t[0], t[1], c], v).expect("anchor is even");
            }
        }
    }
    let mut action = MultilinearMap::new(vec![s.algebra.space.clone(), space.clone()], space.clone(), 0);
    for a in 0..na {
        for k in 0..nl + nm {
            let v =
                if k < nl { s.action.eval_basis(&[a, k]) } else { shift(&psi.a_action.eval_basis(&[a, k - nl]), nl) };
            if !v.is_zero() {
                action.set_value(&[a, k], v).expect("action is even");
            }
        }
    }
    ThreeLieRinehartStructure::new(s.algebra.clone(), space, bracket, action, anchor)
}

/// The semidirect sum; refused unless `psi` passes the module check.
pub fn semidirect_sum(
    s: &ThreeLieRinehartStructure,
    psi: &RepresentationAction,
    convention: SignConvention,
) -> Result<ThreeLieRinehartStructure, ConstructionError> {
    require(check_module_3lr(psi, s))?;
    Ok(semidirect_sum_unchecked(s, psi, convention))
}

/// Structure constants of a map as a sorted list, for comparisons in reports.
pub fn constants(map: &MultilinearMap) -> BTreeMap<(Vec<usize>, usize), Scalar> {
    map.entries().map(|(k, o, c)| ((k.clone(), o), c.clone())).collect()
}
