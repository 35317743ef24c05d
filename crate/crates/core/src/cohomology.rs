//! Cochain complexes of Lie-Rinehart and 3-Lie-Rinehart superalgebras as exact sparse linear algebra.

use crate::constructions::{induce_3lr_unchecked, induce_rep, scalar_element, SuperTrace};
use crate::graded::{Element, GradedSpace, MultilinearMap, Tuples};
use crate::linalg::{add_scaled, column_rank, solve_columns, Echelon, SparseMatrix, SparseVec};
use crate::report::CheckReport;
use crate::scalar::{sign, Parity, Scalar};
use crate::structures::{
    scalar_module_3lr, scalar_module_lr, signed_sum, LieRinehartStructure, RepresentationAction,
    SuperCommutativeAlgebra, ThreeLieRinehartStructure,
};
use crate::SignConvention;
use num_traits::{One, Zero};
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    Lr,
    ThreeLr,
}

#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("map is not a cochain of this complex")]
    NotCochain,
    #[error("precondition failed: {} ({} violations)", .0.name, .0.violations.len())]
    Refused(Box<CheckReport>),
    #[error("cochain arity {0} does not occur in this complex")]
    BadArity(usize),
}

/// Degree, parity and skewness reading of a cochain space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CochainShape {
    pub theory: Theory,
    pub degree: usize,
    pub parity: Parity,
    pub strict_alternating: bool,
}

impl CochainShape {
    /// `n` arguments for the binary theory, `2n + 1` for the ternary one.
    pub fn arity(&self) -> usize {
        match self.theory {
            Theory::Lr => self.degree,
            Theory::ThreeLr => 2 * self.degree + 1,
        }
    }

    /// Slot groups inside which the cochain is super skew: `(start, len)`.
    fn groups(&self) -> Vec<(usize, usize)> {
        match self.theory {
            Theory::Lr => vec![(0, self.degree)],
            Theory::ThreeLr => (0..self.degree).map(|k| (2 * k, 2)).collect(),
        }
    }
}

/// Per-component linear forms in the parameters of a cochain space.
pub type FormVec = BTreeMap<usize, SparseVec>;

/// Values a cochain can take: concrete elements of `M`, or linear forms in unknown coefficients.
pub trait CochainValue: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_scaled(&mut self, c: &Scalar, other: &Self);
    /// Applies the linear map on `M` sending `e_j` to `image(j)`.
    fn map_m<F: Fn(usize) -> Element>(&self, image: F) -> Self;

    fn add_signed(&mut self, e: usize, other: &Self) {
        self.add_scaled(&sign(e), other);
    }
}

impl CochainValue for Element {
    fn zero() -> Self {
        Element::zero()
    }
    fn is_zero(&self) -> bool {
        Element::is_zero(self)
    }
    fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        Element::add_scaled(self, c, other)
    }
    fn map_m<F: Fn(usize) -> Element>(&self, image: F) -> Self {
        self.map_linear(image)
    }
}

impl CochainValue for FormVec {
    fn zero() -> Self {
        FormVec::new()
    }
    fn is_zero(&self) -> bool {
        self.values().all(|v| v.is_empty())
    }
    fn add_scaled(&mut self, c: &Scalar, other: &Self) {
        for (&k, f) in other {
            let slot = self.entry(k).or_default();
            add_scaled(slot, c, f);
            if slot.is_empty() {
                self.remove(&k);
            }
        }
    }
    fn map_m<F: Fn(usize) -> Element>(&self, image: F) -> Self {
        let mut out = FormVec::new();
        for (&j, f) in self {
            for (k, c) in image(j).iter() {
                let slot = out.entry(k).or_default();
                add_scaled(slot, c, f);
                if slot.is_empty() {
                    out.remove(&k);
                }
            }
        }
        out
    }
}

/// Anything that can be evaluated as a cochain.
pub trait CochainEval {
    type V: CochainValue;
    fn parity(&self) -> Parity;
    fn eval_at(&self, args: &[Element]) -> Self::V;
}

impl CochainEval for MultilinearMap {
    type V = Element;
    fn parity(&self) -> Parity {
        MultilinearMap::parity(self)
    }
    fn eval_at(&self, args: &[Element]) -> Element {
        let refs: Vec<&Element> = args.iter().collect();
        self.eval(&refs)
    }
}

/// A cochain space: parameters are values on canonical tuples, the basis solves the constraints.
#[derive(Debug, Clone)]
pub struct CochainSpace {
    pub shape: CochainShape,
    l: GradedSpace,
    m: GradedSpace,
    params: Vec<(Vec<usize>, usize)>,
    index: HashMap<(Vec<usize>, usize), usize>,
    basis: Vec<SparseVec>,
}

impl CochainSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n_params(&self) -> usize {
        self.params.len()
    }

    pub fn params(&self) -> &[(Vec<usize>, usize)] {
        &self.params
    }

    pub fn basis_vectors(&self) -> &[SparseVec] {
        &self.basis
    }

    /// Sorts each skew group, returning the sign exponent and the canonical tuple, or `None` when
    /// the value is forced to vanish (a repeated even argument inside a group).
    pub fn canonical(&self, t: &[usize]) -> Option<(usize, Vec<usize>)> {
        canonical(&self.shape, self.l.parities(), t)
    }

    /// Parameter vector of a concrete map (values read off canonical tuples).
    pub fn params_of(&self, map: &MultilinearMap) -> SparseVec {
        let mut v = SparseVec::new();
        for (i, (t, k)) in self.params.iter().enumerate() {
            let c = map.coefficient(t, *k);
            if !c.is_zero() {
                v.insert(i, c);
            }
        }
        v
    }

    /// The multilinear map with the given parameters, on all basis tuples.
    pub fn to_map(&self, params: &SparseVec) -> MultilinearMap {
        let k = self.shape.arity();
        let mut out = MultilinearMap::new(vec![self.l.clone(); k], self.m.clone(), self.shape.parity);
        let sym = Symbolic(self);
        for t in Tuples::cube(self.l.dim(), k) {
            let args: Vec<Element> = t.iter().map(|&i| Element::basis(i)).collect();
            let forms = sym.eval_at(&args);
            let mut val = Element::zero();
            for (o, f) in forms {
                let c = crate::linalg::dot(&f, params);
                if !c.is_zero() {
                    val.set(o, c);
                }
            }
            if !val.is_zero() {
                out.set_value(&t, val).expect("parameters respect parity");
            }
        }
        out
    }

    pub fn basis_maps(&self) -> Vec<MultilinearMap> {
        self.basis.iter().map(|b| self.to_map(b)).collect()
    }

    /// Whether `map` has the right shape and satisfies all constraints of the space.
    pub fn contains(&self, map: &MultilinearMap) -> bool {
        if map.arity() != self.shape.arity() || map.parity() != self.shape.parity {
            return false;
        }
        let p = self.params_of(map);
        if self.to_map(&p) != *map {
            return false;
        }
        self.contains_params(&p)
    }

    pub fn contains_params(&self, p: &SparseVec) -> bool {
        p.is_empty() || Echelon::from_rows(&self.basis).contains(p)
    }

    /// Coordinates of `map` in the constraint basis.
    pub fn coords(&self, map: &MultilinearMap) -> Option<Vec<Scalar>> {
        if !self.contains(map) {
            return None;
        }
        let x = solve_columns(&self.basis, &self.params_of(map))?;
        Some((0..self.dim()).map(|i| x.get(&i).cloned().unwrap_or_else(Scalar::zero)).collect())
    }

    pub fn from_coords(&self, coords: &[Scalar]) -> MultilinearMap {
        let mut p = SparseVec::new();
        for (c, b) in coords.iter().zip(&self.basis) {
            add_scaled(&mut p, c, b);
        }
        self.to_map(&p)
    }
}

/// A cochain as coordinates in the constraint basis of its space.
#[derive(Debug, Clone)]
pub struct Cochain {
    pub space: Rc<CochainSpace>,
    pub coords: Vec<Scalar>,
}

impl Cochain {
    pub fn from_map(space: Rc<CochainSpace>, map: &MultilinearMap) -> Option<Self> {
        let coords = space.coords(map)?;
        Some(Cochain { space, coords })
    }

    pub fn to_map(&self) -> MultilinearMap {
        self.space.from_coords(&self.coords)
    }
}

fn canonical(shape: &CochainShape, par: &[Parity], t: &[usize]) -> Option<(usize, Vec<usize>)> {
    let mut t = t.to_vec();
    let mut e = 0;
    for (start, len) in shape.groups() {
        let g = &mut t[start..start + len];
        for i in 0..len {
            for j in 0..len - 1 - i {
                if g[j] > g[j + 1] {
                    e += 1 + (par[g[j]] * par[g[j + 1]]) as usize;
                    g.swap(j, j + 1);
                }
            }
        }
        if g.windows(2).any(|w| w[0] == w[1] && par[w[0]] == 0) {
            return None;
        }
    }
    Some((e, t))
}

/// Evaluation of a generic element of a cochain space, as linear forms in its parameters.
pub struct Symbolic<'a>(pub &'a CochainSpace);

impl CochainEval for Symbolic<'_> {
    type V = FormVec;
    fn parity(&self) -> Parity {
        self.0.shape.parity
    }
    fn eval_at(&self, args: &[Element]) -> FormVec {
        assert_eq!(args.len(), self.0.shape.arity(), "cochain arity");
        let mut out = FormVec::new();
        let mut idx = Vec::with_capacity(args.len());
        self.rec(args, &mut idx, &Scalar::one(), &mut out);
        out
    }
}

impl Symbolic<'_> {
    fn rec(&self, args: &[Element], idx: &mut Vec<usize>, coef: &Scalar, out: &mut FormVec) {
        if idx.len() == args.len() {
            let sp = self.0;
            let Some((e, ct)) = sp.canonical(idx) else { return };
            let c = coef * sign(e);
            let tp: usize = idx.iter().map(|&i| sp.l.parity(i) as usize).sum();
            let want = ((tp + sp.shape.parity as usize) % 2) as Parity;
            let mut key = (ct, 0);
            for k in sp.m.basis_of_parity(want) {
                key.1 = k;
                if let Some(&pi) = sp.index.get(&key) {
                    let slot = out.entry(k).or_default();
                    add_scaled(slot, &c, &SparseVec::from([(pi, Scalar::one())]));
                    if slot.is_empty() {
                        out.remove(&k);
                    }
                }
            }
            return;
        }
        for (i, c) in args[idx.len()].iter() {
            idx.push(i);
            self.rec(args, idx, &(coef * c), out);
            idx.pop();
        }
    }
}

/// `dim Z`, `dim B`, `dim H` of one cochain space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub theory: Theory,
    pub degree: usize,
    pub parity: Parity,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h: usize,
}

/// `delta` between two cochain spaces as a matrix from source parameters to target parameters.
#[derive(Debug, Clone)]
pub struct CoboundaryMatrix {
    pub source: Rc<CochainSpace>,
    pub target: Rc<CochainSpace>,
    pub matrix: SparseMatrix,
}

impl CoboundaryMatrix {
    /// Images of the source basis, as target parameter vectors.
    pub fn image_columns(&self) -> Vec<SparseVec> {
        self.matrix.mul_columns(self.source.basis_vectors())
    }
}

enum Bracket {
    Binary(MultilinearMap),
    Ternary(MultilinearMap),
}

/// A cochain complex `C*(L; M)` for either theory.
pub struct Complex {
    theory: Theory,
    l: GradedSpace,
    algebra: SuperCommutativeAlgebra,
    l_action: MultilinearMap,
    bracket: Bracket,
    module: RepresentationAction,
    convention: SignConvention,
    strict: bool,
    spaces: RefCell<HashMap<(usize, Parity), Rc<CochainSpace>>>,
}

impl Complex {
    /// The complex of a Lie-Rinehart superalgebra with coefficients in the module `theta`.
    pub fn lr(s: &LieRinehartStructure, theta: &RepresentationAction, convention: SignConvention) -> Self {
        Complex {
            theory: Theory::Lr,
            l: s.space.clone(),
            algebra: s.algebra.clone(),
            l_action: s.action.clone(),
            bracket: Bracket::Binary(s.bracket.clone()),
            module: theta.clone(),
            convention,
            strict: false,
            spaces: RefCell::new(HashMap::new()),
        }
    }

    /// The complex of a 3-Lie-Rinehart superalgebra with coefficients in the module `psi`.
    /// With `strict_alternating`, cochains are super-alternating in all slots, not just within pairs.
    pub fn three_lr(
        s: &ThreeLieRinehartStructure,
        psi: &RepresentationAction,
        convention: SignConvention,
        strict_alternating: bool,
    ) -> Self {
        Complex {
            theory: Theory::ThreeLr,
            l: s.space.clone(),
            algebra: s.algebra.clone(),
            l_action: s.action.clone(),
            bracket: Bracket::Ternary(s.bracket.clone()),
            module: psi.clone(),
            convention,
            strict: strict_alternating,
            spaces: RefCell::new(HashMap::new()),
        }
    }

    /// Scalar coefficients: `M = K`, zero action, `A` acting through its augmentation.
    pub fn lr_scalar(s: &LieRinehartStructure, convention: SignConvention) -> Self {
        Complex::lr(s, &scalar_module_lr(s), convention)
    }

    pub fn three_lr_scalar(s: &ThreeLieRinehartStructure, convention: SignConvention, strict: bool) -> Self {
        Complex::three_lr(s, &scalar_module_3lr(s), convention, strict)
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn module(&self) -> &RepresentationAction {
        &self.module
    }

    pub fn shape(&self, degree: usize, parity: Parity) -> CochainShape {
        CochainShape { theory: self.theory, degree, parity, strict_alternating: self.strict }
    }

    /// Degree of a cochain with the given number of arguments.
    pub fn degree_of_arity(&self, arity: usize) -> Result<usize, CohomologyError> {
        match self.theory {
            Theory::Lr => Ok(arity),
            Theory::ThreeLr if arity % 2 == 1 => Ok((arity - 1) / 2),
            Theory::ThreeLr => Err(CohomologyError::BadArity(arity)),
        }
    }

    /// The constraint-solved cochain space of the given degree and parity.
    pub fn space(&self, degree: usize, parity: Parity) -> Rc<CochainSpace> {
        if let Some(s) = self.spaces.borrow().get(&(degree, parity)) {
            return s.clone();
        }
        let s = Rc::new(self.build_space(degree, parity));
        self.spaces.borrow_mut().insert((degree, parity), s.clone());
        s
    }

    fn build_space(&self, degree: usize, parity: Parity) -> CochainSpace {
        let shape = self.shape(degree, parity);
        let k = shape.arity();
        let lp = self.l.parities();
        let mut params = Vec::new();
        for t in Tuples::cube(self.l.dim(), k) {
            match canonical(&shape, lp, &t) {
                Some((0, ct)) if ct == t => {
                    let tp: usize = t.iter().map(|&i| lp[i] as usize).sum();
                    let want = ((tp + parity as usize) % 2) as Parity;
                    for o in self.module.carrier.basis_of_parity(want) {
                        params.push((t.clone(), o));
                    }
                }
                _ => {}
            }
        }
        let index = params.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut space =
            CochainSpace { shape, l: self.l.clone(), m: self.module.carrier.clone(), params, index, basis: Vec::new() };
        let rows = self.constraint_rows(&space);
        let n = space.params.len();
        space.basis = if rows.is_empty() {
            (0..n).map(|i| SparseVec::from([(i, Scalar::one())])).collect()
        } else {
            SparseMatrix::from_rows(n, rows).nullspace()
        };
        space
    }

    fn unit_is_trivial(&self) -> bool {
        let Some(u) = self.algebra.unit else { return false };
        (0..self.l.dim()).all(|x| self.l_action.eval_basis(&[u, x]) == Element::basis(x))
            && (0..self.module.dim()).all(|m| self.module.a_action.eval_basis(&[u, m]) == Element::basis(m))
    }

    /// `A`-linearity in every slot, plus adjacent super-alternation in strict mode.
    fn constraint_rows(&self, space: &CochainSpace) -> Vec<SparseVec> {
        let k = space.shape.arity();
        let lp = self.l.parities();
        let fp = space.shape.parity as usize;
        let sym = Symbolic(space);
        let skip_unit = self.unit_is_trivial();
        let mut rows = Vec::new();
        let mut push = |v: FormVec| {
            for (_, r) in v {
                if !r.is_empty() {
                    rows.push(r);
                }
            }
        };
        let a_elems: Vec<usize> =
            (0..self.algebra.dim()).filter(|&a| !(skip_unit && Some(a) == self.algebra.unit)).collect();
        for t in Tuples::cube(self.l.dim(), k) {
            let args: Vec<Element> = t.iter().map(|&i| Element::basis(i)).collect();
            let base = if a_elems.is_empty() { FormVec::new() } else { sym.eval_at(&args) };
            for &a in &a_elems {
                let pa = self.algebra.parity(a) as usize;
                let scaled = base.map_m(|j| self.module.a_action.eval_basis(&[a, j]));
                for i in 0..k {
                    let mut moved = args.clone();
                    moved[i] = self.l_action.eval_basis(&[a, t[i]]);
                    let mut v = sym.eval_at(&moved);
                    let before: usize = t[..i].iter().map(|&x| lp[x] as usize).sum();
                    v.add_signed(1 + pa * (before + fp), &scaled);
                    push(v);
                }
            }
            if self.strict && self.theory == Theory::ThreeLr {
                for i in (0..k.saturating_sub(1)).filter(|i| i % 2 == 1) {
                    let mut sw = t.clone();
                    sw.swap(i, i + 1);
                    let swargs: Vec<Element> = sw.iter().map(|&j| Element::basis(j)).collect();
                    let mut v = sym.eval_at(&args);
                    v.add_signed((lp[t[i]] * lp[t[i + 1]]) as usize, &sym.eval_at(&swargs));
                    push(v);
                }
            }
        }
        rows
    }

    fn theta(&self, x: usize) -> impl Fn(usize) -> Element + '_ {
        move |j| self.module.action.eval_basis(&[x, j])
    }

    fn psi(&self, x: usize, y: usize) -> impl Fn(usize) -> Element + '_ {
        move |j| self.module.action.eval_basis(&[x, y, j])
    }

    /// `(delta f)` on one basis tuple of the target degree.
    pub fn delta_at<C: CochainEval>(&self, f: &C, t: &[usize]) -> C::V {
        match &self.bracket {
            Bracket::Binary(br) => self.delta_lr_at(f, br, t),
            Bracket::Ternary(br) => self.delta_3lr_at(f, br, t),
        }
    }

    fn delta_lr_at<C: CochainEval>(&self, f: &C, br: &MultilinearMap, t: &[usize]) -> C::V {
        let p: Vec<usize> = t.iter().map(|&i| self.l.parity(i) as usize).collect();
        let fp = f.parity() as usize;
        let args: Vec<Element> = t.iter().map(|&i| Element::basis(i)).collect();
        let before = |i: usize| p[..i].iter().sum::<usize>();
        let mut out = C::V::zero();
        for i in 0..t.len() {
            let mut rest = args.clone();
            rest.remove(i);
            let v = f.eval_at(&rest);
            if v.is_zero() {
                continue;
            }
            let e = match self.convention {
                SignConvention::Consistent => i + 1 + p[i] * (fp + before(i)),
                SignConvention::Literal => i + p[i] * (fp + before(i)),
            };
            out.add_signed(e, &v.map_m(self.theta(t[i])));
        }
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let b = br.eval_basis(&[t[i], t[j]]);
                if b.is_zero() {
                    continue;
                }
                let mut rest: Vec<Element> = Vec::with_capacity(t.len() - 1);
                rest.push(b);
                rest.extend(args.iter().enumerate().filter(|(m, _)| *m != i && *m != j).map(|(_, a)| a.clone()));
                let e = match self.convention {
                    SignConvention::Consistent => i + j + 3 + p[i] * before(i) + p[j] * (before(j) - p[i]),
                    SignConvention::Literal => (p[i] + p[j]) * (before(j) - p[i]),
                };
                out.add_signed(e, &f.eval_at(&rest));
            }
        }
        out
    }

    fn delta_3lr_at<C: CochainEval>(&self, f: &C, br: &MultilinearMap, t: &[usize]) -> C::V {
        let big = t.len();
        let n = (big - 1) / 2;
        let p: Vec<usize> = t.iter().map(|&i| self.l.parity(i) as usize).collect();
        let fp = f.parity() as usize;
        let s = |a: usize, b: usize| p[a..b].iter().sum::<usize>();
        let args: Vec<Element> = t.iter().map(|&i| Element::basis(i)).collect();
        let (c_edge1, c_bracket) = match self.convention {
            SignConvention::Consistent => (1, 1),
            SignConvention::Literal => (0, 0),
        };
        let mut out = C::V::zero();
        let (a1, a2, a3) = (2 * n - 2, 2 * n - 1, 2 * n);
        let mut rest: Vec<Element> = args[..a1].to_vec();
        rest.push(args[a2].clone());
        let v = f.eval_at(&rest);
        if !v.is_zero() {
            let e = c_edge1 + n + (fp + s(0, a1)) * (p[a1] + p[a3]) + p[a3] * p[a2];
            out.add_signed(e, &v.map_m(self.psi(t[a1], t[a3])));
        }
        let v = f.eval_at(&args[..a2]);
        if !v.is_zero() {
            let e = n + (fp + s(0, a2)) * (p[a2] + p[a3]);
            out.add_signed(e, &v.map_m(self.psi(t[a2], t[a3])));
        }
        for k in 1..=n {
            let (a, b) = (2 * k - 2, 2 * k - 1);
            let rest: Vec<Element> =
                args.iter().enumerate().filter(|(m, _)| *m != a && *m != b).map(|(_, x)| x.clone()).collect();
            let v = f.eval_at(&rest);
            if !v.is_zero() {
                let e = k + (fp + s(0, a)) * (p[a] + p[b]);
                out.add_signed(e, &v.map_m(self.psi(t[a], t[b])));
            }
            for j in 2 * k..big {
                let inner = br.eval_basis(&[t[a], t[b], t[j]]);
                if inner.is_zero() {
                    continue;
                }
                let rest: Vec<Element> = args
                    .iter()
                    .enumerate()
                    .filter(|(m, _)| *m != a && *m != b)
                    .map(|(m, x)| if m == j { inner.clone() } else { x.clone() })
                    .collect();
                let e = c_bracket + k + s(2 * k, j) * (p[a] + p[b]);
                out.add_signed(e, &f.eval_at(&rest));
            }
        }
        out
    }

    /// `delta` from degree `degree` to `degree + 1`, on parameters.
    pub fn coboundary_matrix(&self, degree: usize, parity: Parity) -> CoboundaryMatrix {
        let source = self.space(degree, parity);
        let target = self.space(degree + 1, parity);
        let sym = Symbolic(&source);
        let mut matrix = SparseMatrix::new(source.n_params());
        let mut cache: Option<(Vec<usize>, FormVec)> = None;
        for (t, k) in target.params() {
            if cache.as_ref().map(|(ct, _)| ct != t).unwrap_or(true) {
                cache = Some((t.clone(), self.delta_at(&sym, t)));
            }
            let forms = &cache.as_ref().expect("filled").1;
            matrix.push_row(forms.get(k).cloned().unwrap_or_default());
        }
        CoboundaryMatrix { source, target, matrix }
    }

    /// `delta f` as a concrete map on all basis tuples of the next degree.
    pub fn coboundary(&self, f: &MultilinearMap) -> Result<MultilinearMap, CohomologyError> {
        let d = self.degree_of_arity(f.arity())?;
        let k = self.shape(d + 1, 0).arity();
        let mut out = MultilinearMap::new(vec![self.l.clone(); k], self.module.carrier.clone(), f.parity());
        for t in Tuples::cube(self.l.dim(), k) {
            let v = self.delta_at(f, &t);
            if !v.is_zero() {
                out.set_value(&t, v).map_err(|_| CohomologyError::NotCochain)?;
            }
        }
        Ok(out)
    }

    pub fn cohomology(&self, degree: usize, parity: Parity) -> CohomologyReport {
        let space = self.space(degree, parity);
        let z_rank = column_rank(&self.coboundary_matrix(degree, parity).image_columns());
        let dim_cocycles = space.dim() - z_rank;
        let dim_coboundaries =
            if degree == 0 { 0 } else { column_rank(&self.coboundary_matrix(degree - 1, parity).image_columns()) };
        CohomologyReport {
            theory: self.theory,
            degree,
            parity,
            dim_cochains: space.dim(),
            dim_cocycles,
            dim_coboundaries,
            dim_h: dim_cocycles.saturating_sub(dim_coboundaries),
        }
    }

    /// `delta(delta f) = 0` for a basis of degree `degree`, and `delta` lands in the cochain space.
    pub fn check_square_zero(&self, degree: usize, parity: Parity) -> CheckReport {
        let mut r = CheckReport::new(format!("square_zero_{degree}_{parity}"));
        let d0 = self.coboundary_matrix(degree, parity);
        let d1 = self.coboundary_matrix(degree + 1, parity);
        let img = d0.image_columns();
        let target_basis = Echelon::from_rows(d0.target.basis_vectors());
        for (i, c) in img.iter().enumerate() {
            if !c.is_empty() && !target_basis.contains(c) {
                r.violation("image_in_cochains", &[i], Element::from_map(c.clone()), Element::zero());
            }
            let dd = d1.matrix.mul_vec(c);
            if !dd.is_empty() {
                r.violation("square_zero", &[i], Element::from_map(dd), Element::zero());
            }
        }
        r
    }

    /// Basis of `Z^degree`, as concrete maps.
    pub fn cocycle_basis(&self, degree: usize, parity: Parity) -> Vec<MultilinearMap> {
        let d = self.coboundary_matrix(degree, parity);
        let img = d.image_columns();
        let mut rows: Vec<SparseVec> = Vec::new();
        let ncols = img.len();
        let mut by_row: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (j, c) in img.iter().enumerate() {
            for (&i, v) in c {
                by_row.entry(i).or_default().insert(j, v.clone());
            }
        }
        rows.extend(by_row.into_values());
        let kernel = SparseMatrix::from_rows(ncols, rows).nullspace();
        kernel
            .iter()
            .map(|coeffs| {
                let mut p = SparseVec::new();
                for (&j, c) in coeffs {
                    add_scaled(&mut p, c, &d.source.basis_vectors()[j]);
                }
                d.source.to_map(&p)
            })
            .collect()
    }

    /// Whether `f` is a cochain of this complex with `delta f = 0`.
    pub fn is_cocycle(&self, f: &MultilinearMap) -> Result<bool, CohomologyError> {
        let d = self.degree_of_arity(f.arity())?;
        if !self.space(d, f.parity()).contains(f) {
            return Err(CohomologyError::NotCochain);
        }
        Ok(self.coboundary(f)?.is_zero())
    }

    /// Solves `delta nu = psi2 - psi1`; `Some(nu)` when the two cocycles are cohomologous.
    pub fn same_class(
        &self,
        psi1: &MultilinearMap,
        psi2: &MultilinearMap,
    ) -> Result<Option<MultilinearMap>, CohomologyError> {
        for psi in [psi1, psi2] {
            if !self.is_cocycle(psi)? {
                let mut r = CheckReport::new("cocycle");
                r.violation("not_cocycle", &[], Element::zero(), Element::zero());
                return Err(CohomologyError::Refused(Box::new(r)));
            }
        }
        if psi1.parity() != psi2.parity() || psi1.arity() != psi2.arity() {
            return Err(CohomologyError::NotCochain);
        }
        let d = self.degree_of_arity(psi1.arity())?;
        let parity = psi1.parity();
        let diff = psi2.plus_scaled(&-Scalar::one(), psi1);
        if d == 0 {
            return Ok(diff.is_zero().then(|| psi1.scaled(&Scalar::zero())));
        }
        let target = self.space(d, parity);
        let dm = self.coboundary_matrix(d - 1, parity);
        let cols = dm.image_columns();
        let Some(x) = solve_columns(&cols, &target.params_of(&diff)) else { return Ok(None) };
        let mut p = SparseVec::new();
        for (&j, c) in &x {
            add_scaled(&mut p, c, &dm.source.basis_vectors()[j]);
        }
        Ok(Some(dm.source.to_map(&p)))
    }
}

fn par(space: &GradedSpace, t: &[usize]) -> Vec<usize> {
    t.iter().map(|&i| space.parity(i) as usize).collect()
}

/// The defining identity of a 1-cocycle `nu: L -> M` associated with `psi`, on basis triples.
pub fn check_1cocycle(
    nu: &MultilinearMap,
    s: &ThreeLieRinehartStructure,
    psi: &RepresentationAction,
    convention: SignConvention,
) -> CheckReport {
    let mut r = CheckReport::new("1cocycle");
    let v = nu.parity() as usize;
    let ps = |x: usize, y: usize, m: &Element| m.map_linear(|j| psi.action.eval_basis(&[x, y, j]));
    let nu_b = |x: usize| nu.eval_basis(&[x]);
    for t in Tuples::cube(s.dim(), 3) {
        let (x1, x2, x3) = (t[0], t[1], t[2]);
        let q = par(&s.space, &t);
        let nb = nu.eval(&[&s.bracket.eval_basis(&t)]);
        let val = match convention {
            SignConvention::Consistent => signed_sum(vec![
                (v * (q[0] + q[1]), ps(x1, x2, &nu_b(x3))),
                (1 + q[1] * q[2] + v * (q[0] + q[2]), ps(x1, x3, &nu_b(x2))),
                ((q[0] + v) * (q[1] + q[2]), ps(x2, x3, &nu_b(x1))),
                (1, nb),
            ]),
            SignConvention::Literal => signed_sum(vec![
                (v * (q[0] + q[1]), ps(x1, x2, &nu_b(x3))),
                (q[1] * q[2] + v * (q[1] + q[2]), ps(x1, x3, &nu_b(x2))),
                ((q[0] + v) * (q[1] + q[2]), ps(x2, x3, &nu_b(x1))),
                (0, nb),
            ]),
        };
        r.expect_zero("cocycle", &t, val);
    }
    r
}

/// The defining identity of a 2-cocycle `omega: L^3 -> M` associated with `psi`, on basis 5-tuples.
pub fn check_2cocycle(
    omega: &MultilinearMap,
    s: &ThreeLieRinehartStructure,
    psi: &RepresentationAction,
    convention: SignConvention,
) -> CheckReport {
    let mut r = CheckReport::new("2cocycle");
    let w = omega.parity() as usize;
    let ps = |x: usize, y: usize, m: &Element| m.map_linear(|j| psi.action.eval_basis(&[x, y, j]));
    let om = |a: usize, b: usize, c: usize| omega.eval_basis(&[a, b, c]);
    let e = Element::basis;
    let (neg_edge, neg_br) = match convention {
        SignConvention::Consistent => (1, 1),
        SignConvention::Literal => (0, 0),
    };
    for t in Tuples::cube(s.dim(), 5) {
        let (x1, x2, x3, x4, x5) = (t[0], t[1], t[2], t[3], t[4]);
        let q = par(&s.space, &t);
        let b = |a: usize, bb: usize, c: usize| s.bracket.eval_basis(&[a, bb, c]);
        let val = signed_sum(vec![
            (neg_edge + (w + q[0] + q[1]) * (q[2] + q[4]) + q[3] * q[4], ps(x3, x5, &om(x1, x2, x4))),
            ((w + q[0] + q[1] + q[2]) * (q[3] + q[4]), ps(x4, x5, &om(x1, x2, x3))),
            (1 + w * (q[0] + q[1]), ps(x1, x2, &om(x3, x4, x5))),
            ((w + q[0] + q[1]) * (q[2] + q[3]), ps(x3, x4, &om(x1, x2, x5))),
            (1 + neg_br, omega.eval(&[&b(x1, x2, x3), &e(x4), &e(x5)])),
            (1 + neg_br + q[2] * (q[0] + q[1]), omega.eval(&[&e(x3), &b(x1, x2, x4), &e(x5)])),
            (1 + neg_br + (q[2] + q[3]) * (q[0] + q[1]), omega.eval(&[&e(x3), &e(x4), &b(x1, x2, x5)])),
            (neg_br, omega.eval(&[&e(x1), &e(x2), &b(x3, x4, x5)])),
        ]);
        r.expect_zero("cocycle", &t, val);
    }
    r
}

/// `tau(x) tau(phi(y,z)) - (-1)^{xy} tau(y) tau(phi(x,z)) + (-1)^{z(x+y)} tau(z) tau(phi(x,y)) = 0`
/// for an `L`-valued 2-cochain `phi`.
pub fn check_tau_compatibility(phi: &MultilinearMap, tau: &SuperTrace) -> CheckReport {
    let mut r = CheckReport::new("tau_compatibility");
    let space = phi.domain(0).clone();
    for t in Tuples::cube(space.dim(), 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let q = par(&space, &t);
        let tp = |a: usize, b: usize| tau.eval(&phi.eval_basis(&[a, b]));
        let v = tau.at(x) * tp(y, z) - sign(q[0] * q[1]) * tau.at(y) * tp(x, z)
            + sign(q[2] * (q[0] + q[1])) * tau.at(z) * tp(x, y);
        r.expect_zero("compatibility", &t, scalar_element(v));
    }
    r
}

/// `phi_tau(x,y,z) = tau(x) phi(y,z) - (-1)^{xy} tau(y) phi(x,z) + (-1)^{z(x+y)} tau(z) phi(x,y)`.
pub fn induce_2cocycle_unchecked(phi: &MultilinearMap, tau: &SuperTrace) -> MultilinearMap {
    let space = phi.domain(0).clone();
    let mut out = MultilinearMap::new(vec![space.clone(); 3], phi.codomain().clone(), phi.parity());
    for t in Tuples::cube(space.dim(), 3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let q = par(&space, &t);
        let mut v = phi.eval_basis(&[y, z]).scaled(tau.at(x));
        v.add_scaled(&(sign(1 + q[0] * q[1]) * tau.at(y)), &phi.eval_basis(&[x, z]));
        v.add_scaled(&(sign(q[2] * (q[0] + q[1])) * tau.at(z)), &phi.eval_basis(&[x, y]));
        if !v.is_zero() {
            out.set_value(&t, v).expect("same parity as phi");
        }
    }
    out
}

/// The induced 2-cocycle; refused unless `phi` is a 2-cocycle of `complex` and, when it is
/// `L`-valued, satisfies the compatibility identity with `tau`.
pub fn induce_2cocycle(
    phi: &MultilinearMap,
    tau: &SuperTrace,
    complex: &Complex,
    s: &LieRinehartStructure,
) -> Result<MultilinearMap, CohomologyError> {
    if !complex.is_cocycle(phi)? {
        let mut r = CheckReport::new("lr_cocycle");
        r.violation("not_cocycle", &[], Element::zero(), Element::zero());
        return Err(CohomologyError::Refused(Box::new(r)));
    }
    if *phi.codomain() == s.space {
        let c = check_tau_compatibility(phi, tau);
        if !c.passed {
            return Err(CohomologyError::Refused(Box::new(c)));
        }
    }
    Ok(induce_2cocycle_unchecked(phi, tau))
}

/// `delta_3LR phi = (delta_LR phi)_tau` for a 1-cochain `phi: L -> M`. The binary side uses the
/// module `theta`, the ternary side the induced structure with the induced module.
pub fn verify_cob_tau_lemma(
    phi: &MultilinearMap,
    s: &LieRinehartStructure,
    theta: &RepresentationAction,
    tau: &SuperTrace,
    convention: SignConvention,
) -> Result<CheckReport, CohomologyError> {
    let mut r = CheckReport::new("coboundary_transfer");
    let induced = induce_3lr_unchecked(s, tau);
    let lr = Complex::lr(s, theta, convention);
    let three = Complex::three_lr(&induced, &induce_rep(theta, tau), convention, false);
    let lhs = three.coboundary(phi)?;
    let rhs = induce_2cocycle_unchecked(&lr.coboundary(phi)?, tau);
    for t in Tuples::cube(s.dim(), 3) {
        r.expect_eq("identity", &t, lhs.eval_basis(&t), rhs.eval_basis(&t));
    }
    Ok(r)
}

/// A scalar 1-cocycle of the binary structure is a scalar 1-cocycle of the induced ternary one.
/// Refused unless `omega` is a binary 1-cocycle.
pub fn transfer_1cocycle(
    omega: &MultilinearMap,
    s: &LieRinehartStructure,
    tau: &SuperTrace,
    convention: SignConvention,
) -> Result<CheckReport, CohomologyError> {
    let lr = Complex::lr_scalar(s, convention);
    if !lr.is_cocycle(omega)? {
        let mut r = CheckReport::new("lr_cocycle");
        r.violation("not_cocycle", &[], Element::zero(), Element::zero());
        return Err(CohomologyError::Refused(Box::new(r)));
    }
    let induced = induce_3lr_unchecked(s, tau);
    let three = Complex::three_lr_scalar(&induced, convention, false);
    let mut r = CheckReport::new("transfer");
    let d = three.coboundary(omega)?;
    for (t, v) in d.rows() {
        r.violation("cocycle", t, v.clone(), Element::zero());
    }
    Ok(r)
}
