#![allow(dead_code)]

use num_traits::{One, Zero};
use superlr::graded::Tuples;
use superlr::scalar::{int, Parity};
use superlr::{Element, MultilinearMap, Scalar};

/// Sign of rearranging a word by adjacent swaps: entry `i` ends at position `images[i]`, each swap
/// of neighbours `a, b` contributes `(-1)^{p_a p_b}`.
pub fn koszul_by_adjacent_swaps(images: &[usize], parities: &[Parity]) -> i64 {
    let mut word: Vec<(usize, Parity)> = images.iter().copied().zip(parities.iter().copied()).collect();
    let mut s = 1;
    loop {
        let mut swapped = false;
        for i in 0..word.len().saturating_sub(1) {
            if word[i].0 > word[i + 1].0 {
                if word[i].1 == 1 && word[i + 1].1 == 1 {
                    s = -s;
                }
                word.swap(i, i + 1);
                swapped = true;
            }
        }
        if !swapped {
            return s;
        }
    }
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..k {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

pub fn parity_vectors(k: usize) -> Vec<Vec<Parity>> {
    (0..1usize << k).map(|m| (0..k).map(|i| ((m >> i) & 1) as Parity).collect()).collect()
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                for k in 0..ncols {
                    let v = &f * &rows[rank][k];
                    rows[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub type Mat = Vec<Vec<Scalar>>;

pub fn unit(n: usize, i: usize, j: usize) -> Mat {
    let mut m = vec![vec![Scalar::zero(); n]; n];
    m[i][j] = Scalar::one();
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

/// `AB - (-1)^{ab} BA`.
pub fn super_commutator(a: &Mat, pa: Parity, b: &Mat, pb: Parity) -> Mat {
    let s = if pa * pb == 1 { int(-1) } else { int(1) };
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter().zip(&ba).map(|(r, q)| r.iter().zip(q).map(|(x, y)| x - &s * y).collect()).collect()
}

/// gl(1|1) basis in the library's order: E11, E22, E12, E21.
pub fn gl11_basis() -> (Vec<Mat>, Vec<Parity>) {
    (vec![unit(2, 0, 0), unit(2, 1, 1), unit(2, 0, 1), unit(2, 1, 0)], vec![0, 0, 1, 1])
}

/// Coordinates of a 2x2 matrix in the gl(1|1) basis.
pub fn gl11_coords(m: &Mat) -> Element {
    Element::from_pairs([(0, m[0][0].clone()), (1, m[1][1].clone()), (2, m[0][1].clone()), (3, m[1][0].clone())])
}

/// The super Jacobiator `[x,[y,z]] - [[x,y],z] - (-1)^{xy}[y,[x,z]]` on a basis triple.
pub fn jacobiator(bracket: &MultilinearMap, t: &[usize]) -> Element {
    let sp = bracket.domain(0);
    let br = |a: &Element, b: &Element| bracket.eval(&[a, b]);
    let (x, y, z) = (Element::basis(t[0]), Element::basis(t[1]), Element::basis(t[2]));
    let mut v = br(&x, &br(&y, &z));
    v.add_signed(1, &br(&br(&x, &y), &z));
    v.add_signed(1 + (sp.parity(t[0]) * sp.parity(t[1])) as usize, &br(&y, &br(&x, &z)));
    v
}

pub fn jacobi_holds(bracket: &MultilinearMap) -> bool {
    Tuples::cube(bracket.domain(0).dim(), 3).all(|t| jacobiator(bracket, &t).is_zero())
}

/// The fundamental identity on a basis 5-tuple, written out directly.
pub fn fundamental(bracket: &MultilinearMap, t: &[usize]) -> Element {
    let sp = bracket.domain(0);
    let p: Vec<usize> = t.iter().map(|&i| sp.parity(i) as usize).collect();
    let e: Vec<Element> = t.iter().map(|&i| Element::basis(i)).collect();
    let br = |a: &Element, b: &Element, c: &Element| bracket.eval(&[a, b, c]);
    let mut v = br(&e[0], &e[1], &br(&e[2], &e[3], &e[4]));
    v.add_signed(1, &br(&br(&e[0], &e[1], &e[2]), &e[3], &e[4]));
    v.add_signed(1 + p[2] * (p[0] + p[1]), &br(&e[2], &br(&e[0], &e[1], &e[3]), &e[4]));
    v.add_signed(1 + (p[2] + p[3]) * (p[0] + p[1]), &br(&e[2], &e[3], &br(&e[0], &e[1], &e[4])));
    v
}

/// All structure constants of a map as one dense vector, tuples in lexicographic order.
pub fn dense_vector(map: &MultilinearMap) -> Vec<Scalar> {
    let dims: Vec<usize> = map.domains().iter().map(|d| d.dim()).collect();
    let m = map.codomain().dim();
    let mut out = Vec::new();
    for t in Tuples::new(&dims) {
        let v = map.eval_basis(&t);
        out.extend((0..m).map(|o| v.coeff(o)));
    }
    out
}
