//! Structure bundles and their axiom checkers.

mod axioms;
mod identities;

pub use axioms::*;
pub use identities::*;

use crate::graded::{Element, GradedSpace, MultilinearMap};
use crate::scalar::{Parity, Scalar};
use num_traits::{One, Zero};

/// Associative supercommutative superalgebra given by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperCommutativeAlgebra {
    pub space: GradedSpace,
    pub product: MultilinearMap,
    pub unit: Option<usize>,
}

impl SuperCommutativeAlgebra {
    pub fn new(space: GradedSpace, product: MultilinearMap, unit: Option<usize>) -> Self {
        SuperCommutativeAlgebra { space, product, unit }
    }

    /// The ground field as a one-dimensional even algebra with unit `e1`.
    pub fn ground_field() -> Self {
        let space = GradedSpace::even("K", 1);
        let mut product = MultilinearMap::power(&space, 2, &space, 0);
        product.set_unchecked(&[0, 0], 0, Scalar::one());
        SuperCommutativeAlgebra { space, product, unit: Some(0) }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.product.eval(&[a, b])
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Element {
        self.product.eval_basis(&[i, j])
    }

    /// The augmentation `a -> coefficient of the unit`, used for scalar coefficients.
    pub fn character(&self, a: usize) -> Scalar {
        match self.unit {
            Some(u) if u == a => Scalar::one(),
            _ => Scalar::zero(),
        }
    }
}

/// Lie-Rinehart superalgebra `(L, A, [.,.], mu)`; the anchor is stored as `L x A -> A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieRinehartStructure {
    pub algebra: SuperCommutativeAlgebra,
    pub space: GradedSpace,
    pub bracket: MultilinearMap,
    pub action: MultilinearMap,
    pub anchor: MultilinearMap,
}

impl LieRinehartStructure {
    pub fn new(
        algebra: SuperCommutativeAlgebra,
        space: GradedSpace,
        bracket: MultilinearMap,
        action: MultilinearMap,
        anchor: MultilinearMap,
    ) -> Self {
        LieRinehartStructure { algebra, space, bracket, action, anchor }
    }

    /// A Lie superalgebra viewed over the ground field, with zero anchor.
    pub fn over_ground_field(space: GradedSpace, bracket: MultilinearMap) -> Self {
        let algebra = SuperCommutativeAlgebra::ground_field();
        let action = scalar_action(&algebra, &space);
        let anchor = MultilinearMap::new(vec![space.clone(), algebra.space.clone()], algebra.space.clone(), 0);
        LieRinehartStructure { algebra, space, bracket, action, anchor }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn p(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn br(&self, x: &Element, y: &Element) -> Element {
        self.bracket.eval(&[x, y])
    }

    pub fn act(&self, a: &Element, x: &Element) -> Element {
        self.action.eval(&[a, x])
    }

    pub fn mu(&self, x: &Element, a: &Element) -> Element {
        self.anchor.eval(&[x, a])
    }
}

/// 3-Lie-Rinehart superalgebra `(L, A, [.,.,.], rho)`; the anchor is stored as `L x L x A -> A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeLieRinehartStructure {
    pub algebra: SuperCommutativeAlgebra,
    pub space: GradedSpace,
    pub bracket: MultilinearMap,
    pub action: MultilinearMap,
    pub anchor: MultilinearMap,
}

impl ThreeLieRinehartStructure {
    pub fn new(
        algebra: SuperCommutativeAlgebra,
        space: GradedSpace,
        bracket: MultilinearMap,
        action: MultilinearMap,
        anchor: MultilinearMap,
    ) -> Self {
        ThreeLieRinehartStructure { algebra, space, bracket, action, anchor }
    }

    /// A 3-Lie superalgebra over the ground field with zero anchor.
    pub fn over_ground_field(space: GradedSpace, bracket: MultilinearMap) -> Self {
        let algebra = SuperCommutativeAlgebra::ground_field();
        let action = scalar_action(&algebra, &space);
        let anchor =
            MultilinearMap::new(vec![space.clone(), space.clone(), algebra.space.clone()], algebra.space.clone(), 0);
        ThreeLieRinehartStructure { algebra, space, bracket, action, anchor }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn p(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn br(&self, x: &Element, y: &Element, z: &Element) -> Element {
        self.bracket.eval(&[x, y, z])
    }

    pub fn act(&self, a: &Element, x: &Element) -> Element {
        self.action.eval(&[a, x])
    }

    pub fn rho(&self, x: &Element, y: &Element, a: &Element) -> Element {
        self.anchor.eval(&[x, y, a])
    }
}

/// A module: carrier `M`, the action of `L` (binary `L x M -> M` or ternary `L x L x M -> M`)
/// and the `A`-module structure `A x M -> M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationAction {
    pub carrier: GradedSpace,
    pub action: MultilinearMap,
    pub a_action: MultilinearMap,
}

impl RepresentationAction {
    pub fn new(carrier: GradedSpace, action: MultilinearMap, a_action: MultilinearMap) -> Self {
        RepresentationAction { carrier, action, a_action }
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
}

/// `a . x = (a_unit coefficient) x`: the action through the augmentation character.
pub fn scalar_action(algebra: &SuperCommutativeAlgebra, space: &GradedSpace) -> MultilinearMap {
    let mut act = MultilinearMap::new(vec![algebra.space.clone(), space.clone()], space.clone(), 0);
    if let Some(u) = algebra.unit {
        for x in 0..space.dim() {
            act.set_unchecked(&[u, x], x, Scalar::one());
        }
    }
    act
}

/// `A` as a module over a Lie-Rinehart superalgebra, acting through the anchor.
pub fn algebra_module_lr(s: &LieRinehartStructure) -> RepresentationAction {
    RepresentationAction::new(s.algebra.space.clone(), s.anchor.clone(), s.algebra.product.clone())
}

/// The binary adjoint action `theta(x, y) = [x, y]` on `L`.
pub fn adjoint_rep_lr(s: &LieRinehartStructure) -> RepresentationAction {
    RepresentationAction::new(s.space.clone(), s.bracket.clone(), s.action.clone())
}

/// The ground field with zero action and `A` acting through its augmentation character.
pub fn scalar_module_lr(s: &LieRinehartStructure) -> RepresentationAction {
    let k = GradedSpace::even("K", 1);
    let action = MultilinearMap::new(vec![s.space.clone(), k.clone()], k.clone(), 0);
    RepresentationAction::new(k.clone(), action, scalar_action(&s.algebra, &k))
}

/// `A` as a left module of a 3-Lie-Rinehart superalgebra, with `psi = rho`.
pub fn algebra_module_3lr(s: &ThreeLieRinehartStructure) -> RepresentationAction {
    RepresentationAction::new(s.algebra.space.clone(), s.anchor.clone(), s.algebra.product.clone())
}

/// `ad_{x,y}(z) = [x, y, z]`.
pub fn adjoint_rep(s: &ThreeLieRinehartStructure) -> RepresentationAction {
    RepresentationAction::new(s.space.clone(), s.bracket.clone(), s.action.clone())
}

/// The ground field with zero ternary action and `A` acting through its augmentation character.
pub fn scalar_module_3lr(s: &ThreeLieRinehartStructure) -> RepresentationAction {
    let k = GradedSpace::even("K", 1);
    let action = MultilinearMap::new(vec![s.space.clone(), s.space.clone(), k.clone()], k.clone(), 0);
    RepresentationAction::new(k.clone(), action, scalar_action(&s.algebra, &k))
}

/// `(sign exponent, value)` pairs summed with `(-1)^e`.
pub(crate) fn signed_sum(terms: Vec<(usize, Element)>) -> Element {
    let mut out = Element::zero();
    for (e, v) in terms {
        out.add_signed(e, &v);
    }
    out
}

pub(crate) fn b(i: usize) -> Element {
    Element::basis(i)
}
