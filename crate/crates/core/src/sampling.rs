//! Seeded random instances: Lie-Rinehart superalgebras, super-skew ternary maps, cochains.

use crate::cohomology::CochainSpace;
use crate::constructions::{compatible_trace_space, SuperTrace};
use crate::fixtures::{dual_numbers, gl11, grassmann};
use crate::graded::{Element, GradedSpace, MultilinearMap, Tuples};
use crate::linalg::{solve_columns, SparseVec};
use crate::scalar::{int, Parity, Scalar};
use crate::structures::{scalar_action, LieRinehartStructure, SuperCommutativeAlgebra};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small integer in `-r..=r`.
pub fn small(rng: &mut SampleRng, r: i64) -> Scalar {
    int(rng.gen_range(-r..=r))
}

fn nonzero(rng: &mut SampleRng, r: i64) -> Scalar {
    loop {
        let c = small(rng, r);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A Lie superalgebra given by parities and bracket.
struct LieData {
    parities: Vec<Parity>,
    bracket: Vec<((usize, usize), usize, Scalar)>,
}

impl LieData {
    fn build(&self) -> (GradedSpace, MultilinearMap) {
        let space = GradedSpace::new("L", self.parities.clone()).expect("parities");
        let mut br = MultilinearMap::power(&space, 2, &space, 0);
        for ((x, y), k, c) in &self.bracket {
            br.set_unchecked(&[*x, *y], *k, c.clone());
        }
        (space, br)
    }

    fn abelian(parities: Vec<Parity>) -> Self {
        LieData { parities, bracket: vec![] }
    }

    fn heisenberg() -> Self {
        LieData { parities: vec![0, 0, 0], bracket: vec![((0, 1), 2, int(1)), ((1, 0), 2, int(-1))] }
    }

    fn solvable() -> Self {
        LieData { parities: vec![0, 0], bracket: vec![((0, 1), 1, int(1)), ((1, 0), 1, int(-1))] }
    }

    /// `<z | f>` with `[f, f] = z`.
    fn odd_heisenberg() -> Self {
        LieData { parities: vec![0, 1], bracket: vec![((1, 1), 0, int(1))] }
    }

    /// `<h | f>` with `[h, f] = f`.
    fn odd_solvable() -> Self {
        LieData { parities: vec![0, 1], bracket: vec![((0, 1), 1, int(1)), ((1, 0), 1, int(-1))] }
    }

    fn direct_sum(&self, other: &LieData) -> Self {
        let n = self.parities.len();
        let mut parities = self.parities.clone();
        parities.extend(&other.parities);
        let mut bracket = self.bracket.clone();
        bracket.extend(other.bracket.iter().map(|((x, y), k, c)| ((x + n, y + n), k + n, c.clone())));
        LieData { parities, bracket }
    }
}

/// Random even change of basis: returns the bracket in the basis `P e_i`.
pub fn change_basis(space: &GradedSpace, bracket: &MultilinearMap, rng: &mut SampleRng) -> MultilinearMap {
    let n = space.dim();
    let cols = loop {
        let mut cols: Vec<Element> = Vec::with_capacity(n);
        for i in 0..n {
            let same = space.basis_of_parity(space.parity(i));
            let mut e = Element::zero();
            for j in same {
                let c = if j == i {
                    nonzero(rng, 2)
                } else if rng.gen_bool(0.5) {
                    small(rng, 1)
                } else {
                    Scalar::zero()
                };
                e.set(j, c);
            }
            cols.push(e);
        }
        let sv: Vec<SparseVec> = cols.iter().map(|e| e.as_map().clone()).collect();
        if crate::linalg::column_rank(&sv) == n {
            break cols;
        }
    };
    let sv: Vec<SparseVec> = cols.iter().map(|e| e.as_map().clone()).collect();
    let mut out = MultilinearMap::power(space, 2, space, 0);
    for t in Tuples::cube(n, 2) {
        let v = bracket.eval(&[&cols[t[0]], &cols[t[1]]]);
        let coords = solve_columns(&sv, v.as_map()).expect("invertible");
        out.set_value(&t, Element::from_map(coords)).expect("even change of basis");
    }
    out
}

fn random_lie(rng: &mut SampleRng) -> (GradedSpace, MultilinearMap) {
    let choice = rng.gen_range(0..7);
    match choice {
        0 => {
            let f = gl11();
            let s = f.structure.space.clone();
            let br = change_basis(&s, &f.structure.bracket, rng);
            (s, br)
        }
        1 => LieData::heisenberg().build(),
        2 => LieData::solvable().direct_sum(&LieData::odd_heisenberg()).build(),
        3 => {
            let k = rng.gen_range(1..=4);
            LieData::abelian((0..k).map(|_| rng.gen_range(0..2)).collect()).build()
        }
        4 => LieData::odd_solvable().direct_sum(&LieData::solvable()).build(),
        5 => LieData::heisenberg().direct_sum(&LieData::abelian(vec![rng.gen_range(0..2)])).build(),
        _ => {
            let d = LieData::odd_heisenberg().direct_sum(&LieData::abelian(vec![0]));
            let (s, br) = d.build();
            let br = change_basis(&s, &br, rng);
            (s, br)
        }
    }
}

/// An even derivation of the algebra (zero for `K`).
fn even_derivation(algebra: &SuperCommutativeAlgebra) -> Option<(usize, usize)> {
    if algebra.dim() == 2 {
        Some((1, 1))
    } else {
        None
    }
}

/// A random Lie-Rinehart superalgebra: `A` one of `K`, `K[s]/(s^2)`, `Lambda(theta)` acting through
/// its augmentation, and anchor `mu = lambda D` with `D` the Euler derivation and `lambda` a random
/// supertrace. Paired with a random supertrace satisfying the trace condition.
pub fn random_lr(rng: &mut SampleRng) -> (LieRinehartStructure, SuperTrace) {
    let (space, bracket) = random_lie(rng);
    let algebra = match rng.gen_range(0..3) {
        0 => SuperCommutativeAlgebra::ground_field(),
        1 => dual_numbers(),
        _ => grassmann(),
    };
    let action = scalar_action(&algebra, &space);
    let mut anchor = MultilinearMap::new(vec![space.clone(), algebra.space.clone()], algebra.space.clone(), 0);
    let s0 = LieRinehartStructure::new(algebra.clone(), space.clone(), bracket.clone(), action.clone(), anchor.clone());
    if let Some((a, out)) = even_derivation(&algebra) {
        let lambda = random_combination(&compatible_trace_space(&s0), space.dim(), rng);
        for x in 0..space.dim() {
            if !lambda.at(x).is_zero() {
                anchor.set_unchecked(&[x, a], out, lambda.at(x).clone());
            }
        }
    }
    let s = LieRinehartStructure::new(algebra, space, bracket, action, anchor);
    let tau = random_combination(&compatible_trace_space(&s), s.dim(), rng);
    (s, tau)
}

/// A random combination of a basis of traces, nonzero when the basis is nonempty.
pub fn random_combination(basis: &[SuperTrace], dim: usize, rng: &mut SampleRng) -> SuperTrace {
    if basis.is_empty() {
        return SuperTrace::zero(dim);
    }
    loop {
        let mut v = vec![Scalar::zero(); dim];
        for t in basis {
            let c = small(rng, 2);
            for (vi, ti) in v.iter_mut().zip(&t.values) {
                *vi += &c * ti;
            }
        }
        let tau = SuperTrace::new(v);
        if !tau.is_zero() {
            return tau;
        }
    }
}

/// A random element of a cochain space, via random coordinates in its basis.
pub fn random_cochain(space: &CochainSpace, rng: &mut SampleRng, density: f64) -> MultilinearMap {
    let coords: Vec<Scalar> =
        (0..space.dim()).map(|_| if rng.gen_bool(density) { small(rng, 3) } else { Scalar::zero() }).collect();
    space.from_coords(&coords)
}

/// A random even linear map `L -> L`.
pub fn random_even_endomorphism(space: &GradedSpace, rng: &mut SampleRng) -> MultilinearMap {
    let mut out = MultilinearMap::power(space, 1, space, 0);
    for x in 0..space.dim() {
        for y in space.basis_of_parity(space.parity(x)) {
            if rng.gen_bool(0.6) {
                out.set_unchecked(&[x], y, small(rng, 2));
            }
        }
    }
    out
}

/// A random even super skew-symmetric ternary map on a space with random parities, `dim <= max_dim`.
/// Values are filled on sorted triples and extended by the Koszul rule.
pub fn random_skew_ternary(rng: &mut SampleRng, max_dim: usize, density: f64) -> MultilinearMap {
    let n = rng.gen_range(1..=max_dim);
    let parities: Vec<Parity> = (0..n).map(|_| rng.gen_range(0..2)).collect();
    let space = GradedSpace::new("L", parities.clone()).expect("parities");
    let mut out = MultilinearMap::power(&space, 3, &space, 0);
    let mut triples: Vec<Vec<usize>> = Tuples::cube(n, 3).filter(|t| t[0] <= t[1] && t[1] <= t[2]).collect();
    triples.shuffle(rng);
    for t in triples {
        let mut seen_even_repeat = false;
        for w in t.windows(2) {
            if w[0] == w[1] && parities[w[0]] == 0 {
                seen_even_repeat = true;
            }
        }
        if seen_even_repeat || !rng.gen_bool(density) {
            continue;
        }
        let want = ((t.iter().map(|&i| parities[i] as usize).sum::<usize>()) % 2) as Parity;
        let targets = space.basis_of_parity(want);
        if targets.is_empty() {
            continue;
        }
        let k = *targets.choose(rng).expect("nonempty");
        let c = nonzero(rng, 2);
        for (perm_t, e) in orbit(&t, &parities) {
            out.add(&perm_t, k, &(crate::scalar::sign(e) * &c)).expect("parity checked");
        }
    }
    out
}

/// The distinct rearrangements of `t` with the Koszul exponent relative to `t`.
fn orbit(t: &[usize], parities: &[Parity]) -> Vec<(Vec<usize>, usize)> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out: Vec<(Vec<usize>, usize)> = Vec::new();
    for p in perms {
        let word: Vec<usize> = p.iter().map(|&i| t[i]).collect();
        if out.iter().any(|(w, _)| *w == word) {
            continue;
        }
        let mut e = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if p[i] > p[j] {
                    e += 1 + (parities[t[p[i]]] * parities[t[p[j]]]) as usize;
                }
            }
        }
        out.push((word, e));
    }
    out
}
