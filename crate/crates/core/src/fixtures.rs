//! Small named instances with structure constants computed from their defining formulas.

use crate::constructions::{induce_3lr_unchecked, SuperTrace};
use crate::graded::{Element, GradedSpace, MultilinearMap, Tuples};
use crate::linalg::{solve_columns, SparseVec};
use crate::scalar::{int, sign, Parity, Scalar};
use crate::structures::{scalar_action, LieRinehartStructure, SuperCommutativeAlgebra, ThreeLieRinehartStructure};
use num_traits::{One, Zero};

/// A Lie-Rinehart superalgebra together with a supertrace satisfying the trace condition.
#[derive(Debug, Clone)]
pub struct LrFixture {
    pub name: &'static str,
    pub structure: LieRinehartStructure,
    pub trace: SuperTrace,
}

impl LrFixture {
    pub fn induced(&self) -> ThreeLieRinehartStructure {
        induce_3lr_unchecked(&self.structure, &self.trace)
    }
}

type Matrix = Vec<Vec<Scalar>>;

fn flatten(m: &Matrix) -> SparseVec {
    m.iter().flatten().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

/// Super-commutator `XY - (-1)^{xy} YX` on a basis of homogeneous supermatrices.
pub fn supermatrix_bracket(space: &GradedSpace, mats: &[Matrix]) -> MultilinearMap {
    let cols: Vec<SparseVec> = mats.iter().map(flatten).collect();
    let mut br = MultilinearMap::power(space, 2, space, 0);
    for t in Tuples::cube(mats.len(), 2) {
        let (x, y) = (&mats[t[0]], &mats[t[1]]);
        let s = sign((space.parity(t[0]) * space.parity(t[1])) as usize);
        let xy = matmul(x, y);
        let yx = matmul(y, x);
        let c: Matrix = xy.iter().zip(&yx).map(|(r, q)| r.iter().zip(q).map(|(a, b)| a - &s * b).collect()).collect();
        let coords = solve_columns(&cols, &flatten(&c)).expect("basis closed under the commutator");
        br.set_value(&t, Element::from_map(coords)).expect("commutator is even");
    }
    br
}

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = vec![vec![Scalar::zero(); n]; n];
    m[i][j] = Scalar::one();
    m
}

/// `A = K`, `L` one even vector, every map zero.
pub fn fix0() -> LrFixture {
    let space = GradedSpace::even("L", 1);
    let bracket = MultilinearMap::power(&space, 2, &space, 0);
    LrFixture {
        name: "fix0",
        structure: LieRinehartStructure::over_ground_field(space, bracket),
        trace: SuperTrace::zero(1),
    }
}

/// `gl(1|1)` with basis `E11, E22` (even), `E12, E21` (odd) and the supertrace.
pub fn gl11() -> LrFixture {
    let space = GradedSpace::new("L", vec![0, 0, 1, 1]).expect("parities");
    let mats = vec![unit_matrix(2, 0, 0), unit_matrix(2, 1, 1), unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)];
    let bracket = supermatrix_bracket(&space, &mats);
    LrFixture {
        name: "gl11",
        structure: LieRinehartStructure::over_ground_field(space, bracket),
        trace: SuperTrace::new(vec![int(1), int(-1), int(0), int(0)]),
    }
}

/// The three-dimensional Heisenberg algebra `[x, y] = z`, with `tau(x) = 1`.
pub fn heis() -> LrFixture {
    let space = GradedSpace::even("L", 3);
    let mut bracket = MultilinearMap::power(&space, 2, &space, 0);
    bracket.set_unchecked(&[0, 1], 2, int(1));
    bracket.set_unchecked(&[1, 0], 2, int(-1));
    LrFixture {
        name: "heis",
        structure: LieRinehartStructure::over_ground_field(space, bracket),
        trace: SuperTrace::new(vec![int(1), int(0), int(0)]),
    }
}

/// The Grassmann algebra on one odd generator: basis `1, theta`.
pub fn grassmann() -> SuperCommutativeAlgebra {
    let space = GradedSpace::new("A", vec![0, 1]).expect("parities");
    let mut product = MultilinearMap::power(&space, 2, &space, 0);
    product.set_unchecked(&[0, 0], 0, int(1));
    product.set_unchecked(&[0, 1], 1, int(1));
    product.set_unchecked(&[1, 0], 1, int(1));
    SuperCommutativeAlgebra::new(space, product, Some(0))
}

/// Dual numbers `K[s]/(s^2)`: basis `1, s`, both even.
pub fn dual_numbers() -> SuperCommutativeAlgebra {
    let space = GradedSpace::even("A", 2);
    let mut product = MultilinearMap::power(&space, 2, &space, 0);
    product.set_unchecked(&[0, 0], 0, int(1));
    product.set_unchecked(&[0, 1], 1, int(1));
    product.set_unchecked(&[1, 0], 1, int(1));
    SuperCommutativeAlgebra::new(space, product, Some(0))
}

/// `L = Der(A) + A` for `A` the Grassmann algebra, basis `theta d, d, 1, theta`, with
/// `[(D, a), (D', a')] = ([D, D'], D(a') - (-1)^{D' a} D'(a))`, the action `b (D, a) = (bD, ba)`
/// and the anchor the projection onto `Der(A)`.
pub fn grass() -> LrFixture {
    let algebra = grassmann();
    let space = GradedSpace::new("L", vec![0, 1, 0, 1]).expect("parities");
    let lp = space.parities().to_vec();
    // derivations as 2x2 matrices on (1, theta): theta d sends theta to theta, d sends theta to 1
    let ders: Vec<Matrix> = vec![unit_matrix(2, 1, 1), unit_matrix(2, 0, 1)];
    let der_space = GradedSpace::new("Der", vec![0, 1]).expect("parities");
    let der_bracket = supermatrix_bracket(&der_space, &ders);
    let der_apply = |d: usize, a: usize| -> Element {
        Element::from_pairs((0..2).map(|k| (k, ders[d][k][a].clone())).filter(|(_, c)| !c.is_zero()))
    };
    let mut bracket = MultilinearMap::power(&space, 2, &space, 0);
    for t in Tuples::cube(4, 2) {
        let (x, y) = (t[0], t[1]);
        let v = match (x < 2, y < 2) {
            (true, true) => der_bracket.eval_basis(&[x, y]),
            (true, false) => shift(&der_apply(x, y - 2), 2),
            (false, true) => shift(&der_apply(y, x - 2), 2).signed(1 + (lp[y] * lp[x]) as usize),
            (false, false) => Element::zero(),
        };
        if !v.is_zero() {
            bracket.set_value(&t, v).expect("even bracket");
        }
    }
    let mut action = MultilinearMap::new(vec![algebra.space.clone(), space.clone()], space.clone(), 0);
    for x in 0..4 {
        action.set_unchecked(&[0, x], x, int(1));
    }
    // theta (theta d) = 0, theta d = theta d, theta 1 = theta, theta theta = 0
    action.set_unchecked(&[1, 1], 0, int(1));
    action.set_unchecked(&[1, 2], 3, int(1));
    let mut anchor = MultilinearMap::new(vec![space.clone(), algebra.space.clone()], algebra.space.clone(), 0);
    for d in 0..2 {
        for a in 0..2 {
            let v = der_apply(d, a);
            if !v.is_zero() {
                anchor.set_value(&[d, a], v).expect("derivations have their parity");
            }
        }
    }
    LrFixture {
        name: "grass",
        structure: LieRinehartStructure::new(algebra, space, bracket, action, anchor),
        trace: SuperTrace::zero(4),
    }
}

fn shift(e: &Element, by: usize) -> Element {
    Element::from_pairs(e.iter().map(|(i, c)| (i + by, c.clone())))
}

/// `A = K[s]/(s^2)` acting through its augmentation on `L = <h, e, c>` with `[h, e] = e`,
/// anchor `mu(c) = s d/ds`, and `tau = h* + c*`.
pub fn solv_over_dual() -> LrFixture {
    let algebra = dual_numbers();
    let space = GradedSpace::even("L", 3);
    let mut bracket = MultilinearMap::power(&space, 2, &space, 0);
    bracket.set_unchecked(&[0, 1], 1, int(1));
    bracket.set_unchecked(&[1, 0], 1, int(-1));
    let action = scalar_action(&algebra, &space);
    let mut anchor = MultilinearMap::new(vec![space.clone(), algebra.space.clone()], algebra.space.clone(), 0);
    anchor.set_unchecked(&[2, 1], 1, int(1));
    LrFixture {
        name: "solv_over_dual",
        structure: LieRinehartStructure::new(algebra, space, bracket, action, anchor),
        trace: SuperTrace::new(vec![int(1), int(0), int(1)]),
    }
}

/// `A` the Grassmann algebra acting through its augmentation on `L = <h, c | f>` with `[h, f] = f`,
/// anchor `mu(c) = theta d/dtheta`, and `tau = h* + c*`.
pub fn odd_inst() -> LrFixture {
    let algebra = grassmann();
    let space = GradedSpace::new("L", vec![0, 0, 1]).expect("parities");
    let mut bracket = MultilinearMap::power(&space, 2, &space, 0);
    bracket.set_unchecked(&[0, 2], 2, int(1));
    bracket.set_unchecked(&[2, 0], 2, int(-1));
    let action = scalar_action(&algebra, &space);
    let mut anchor = MultilinearMap::new(vec![space.clone(), algebra.space.clone()], algebra.space.clone(), 0);
    anchor.set_unchecked(&[1, 1], 1, int(1));
    LrFixture {
        name: "odd_inst",
        structure: LieRinehartStructure::new(algebra, space, bracket, action, anchor),
        trace: SuperTrace::new(vec![int(1), int(1), int(0)]),
    }
}

/// Every binary fixture.
pub fn lr_fixtures() -> Vec<LrFixture> {
    vec![fix0(), gl11(), heis(), grass(), solv_over_dual(), odd_inst()]
}

/// `[e_i, e_j, e_k] = sum_l eps_{ijkl} e_l` on a four-dimensional even space.
pub fn a4() -> ThreeLieRinehartStructure {
    let space = GradedSpace::even("L", 4);
    let mut bracket = MultilinearMap::power(&space, 3, &space, 0);
    for t in Tuples::cube(4, 4) {
        let mut seen = [false; 4];
        if t.iter().any(|&i| std::mem::replace(&mut seen[i], true)) {
            continue;
        }
        let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| t[i] > t[j]).count();
        bracket.set_unchecked(&t[..3], t[3], sign(inversions));
    }
    ThreeLieRinehartStructure::over_ground_field(space, bracket)
}

/// The zero ternary structure on one even vector over `K`.
pub fn fix0_3lr() -> ThreeLieRinehartStructure {
    fix0().induced()
}

/// Every ternary fixture: the induced binary fixtures, the zero one and `A4`.
pub fn three_lr_fixtures() -> Vec<(String, ThreeLieRinehartStructure)> {
    let mut out: Vec<(String, ThreeLieRinehartStructure)> =
        lr_fixtures().iter().map(|f| (format!("{}_induced", f.name), f.induced())).collect();
    out.push(("a4".to_string(), a4()));
    out
}

/// Parity vector helper for callers building spaces by hand.
pub fn space(label: &str, parities: &[Parity]) -> GradedSpace {
    GradedSpace::new(label, parities.to_vec()).expect("parities are 0 or 1")
}
