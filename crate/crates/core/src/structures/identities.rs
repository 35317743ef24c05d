use super::{b, signed_sum, ThreeLieRinehartStructure};
use crate::graded::{Element, Tuples};
use crate::linalg::{Echelon, SparseMatrix, SparseVec};
use crate::report::CheckReport;
use crate::scalar::Parity;
use crate::SignConvention;

/// Basis of `{x : rho(x, e_j) = 0 for all j}`, computed separately in each parity so that the
/// returned vectors are homogeneous.
pub fn kernel_of_anchor(s: &ThreeLieRinehartStructure) -> Vec<Element> {
    let n = s.dim();
    let na = s.algebra.dim();
    let mut out = Vec::new();
    for p in 0..2u8 {
        let cols = s.space.basis_of_parity(p);
        let mut m = SparseMatrix::new(cols.len());
        for j in 0..n {
            for a in 0..na {
                let mut rows: std::collections::BTreeMap<usize, SparseVec> = Default::default();
                for (c, &x) in cols.iter().enumerate() {
                    for (k, v) in s.anchor.eval_basis(&[x, j, a]).iter() {
                        rows.entry(k).or_default().insert(c, v.clone());
                    }
                }
                for r in rows.into_values() {
                    m.push_row(r);
                }
            }
        }
        for v in m.nullspace() {
            out.push(Element::from_pairs(v.into_iter().map(|(c, x)| (cols[c], x))));
        }
    }
    out
}

struct Span(Echelon);

impl Span {
    fn new(sub: &[Element]) -> Self {
        Span(Echelon::from_rows(&sub.iter().map(|e| e.as_map().clone()).collect::<Vec<_>>()))
    }

    fn contains(&self, e: &Element) -> bool {
        e.is_zero() || self.0.contains(e.as_map())
    }
}

fn member(r: &mut CheckReport, span: &Span, label: &str, idx: &[usize], v: Element) {
    if !span.contains(&v) {
        r.violation(label, idx, v, Element::zero());
    }
}

/// Closure of `span(sub)` under the ternary bracket and the `A`-action.
pub fn check_subalgebra(sub: &[Element], s: &ThreeLieRinehartStructure) -> CheckReport {
    let mut r = CheckReport::new("subalgebra");
    let span = Span::new(sub);
    for t in Tuples::cube(sub.len(), 3) {
        let v = s.br(&sub[t[0]], &sub[t[1]], &sub[t[2]]);
        member(&mut r, &span, "bracket", &t, v);
    }
    a_closed(&mut r, &span, sub, s);
    r
}

fn a_closed(r: &mut CheckReport, span: &Span, sub: &[Element], s: &ThreeLieRinehartStructure) {
    for (i, u) in sub.iter().enumerate() {
        for a in 0..s.algebra.dim() {
            member(r, span, "a_action", &[a, i], s.act(&b(a), u));
        }
    }
}

/// `[I,L,L] + [L,I,L] + [L,L,I] ⊆ I`, `A I ⊆ I` and `rho(I,L)(A) L ⊆ I`.
pub fn check_ideal(sub: &[Element], s: &ThreeLieRinehartStructure) -> CheckReport {
    let mut r = CheckReport::new("ideal");
    let span = Span::new(sub);
    let n = s.dim();
    for (i, u) in sub.iter().enumerate() {
        for t in Tuples::cube(n, 2) {
            let (x, y) = (b(t[0]), b(t[1]));
            let idx = [i, t[0], t[1]];
            member(&mut r, &span, "bracket", &idx, s.br(u, &x, &y));
            member(&mut r, &span, "bracket", &idx, s.br(&x, u, &y));
            member(&mut r, &span, "bracket", &idx, s.br(&x, &y, u));
        }
        for x in 0..n {
            for a in 0..s.algebra.dim() {
                let ra = s.rho(u, &b(x), &b(a));
                if ra.is_zero() {
                    continue;
                }
                for y in 0..n {
                    member(&mut r, &span, "anchor", &[i, x, a, y], s.act(&ra, &b(y)));
                }
            }
        }
    }
    a_closed(&mut r, &span, sub, s);
    r
}

/// Exponent of the Koszul sign for reordering the symbols `reference` into `word`.
fn reorder_exponent(reference: &[usize], word: &[usize], par: &[Parity]) -> usize {
    let pos: Vec<usize> = word.iter().map(|w| reference.iter().position(|r| r == w).unwrap()).collect();
    let mut e = 0;
    for i in 0..pos.len() {
        for j in i + 1..pos.len() {
            if pos[i] > pos[j] {
                e += (par[word[i]] * par[word[j]]) as usize;
            }
        }
    }
    e
}

// symbols: x1..x5 = 0..4, a4 = 5, a5 = 6
const HO2_REF: [usize; 7] = [1, 2, 5, 6, 0, 3, 4];
const HO2_TERMS: [(bool, [usize; 7]); 9] = [
    (false, [1, 2, 5, 6, 0, 3, 4]),
    (false, [2, 0, 5, 6, 1, 3, 4]),
    (false, [0, 1, 5, 6, 2, 3, 4]),
    (false, [5, 0, 3, 6, 4, 1, 2]),
    (false, [5, 1, 3, 6, 4, 2, 0]),
    (false, [5, 2, 3, 6, 4, 0, 1]),
    (true, [6, 0, 4, 5, 3, 1, 2]),
    (true, [6, 1, 4, 5, 3, 2, 0]),
    (true, [6, 2, 4, 5, 3, 0, 1]),
];

/// The four identities relating brackets, actions and anchors that hold in every 3-Lie-Rinehart
/// superalgebra, labelled `ho1`, `ho2`, `ho4`, `ho5`, checked on all homogeneous basis tuples.
pub fn check_structural_identities(s: &ThreeLieRinehartStructure, convention: SignConvention) -> CheckReport {
    let mut r = CheckReport::new("structural_identities");
    let n = s.dim();
    let na = s.algebra.dim();
    let p = s.space.parities();
    let pa = s.algebra.space.parities();
    let rho_t: Vec<Element> = Tuples::cube(n, 2)
        .flat_map(|t| (0..na).map(move |a| (t.clone(), a)))
        .map(|(t, a)| s.anchor.eval_basis(&[t[0], t[1], a]))
        .collect();
    let rho = |x: usize, y: usize, a: usize| &rho_t[(x * n + y) * na + a];
    let br = |x: usize, y: usize, z: usize| s.bracket.eval_basis(&[x, y, z]);

    for t in Tuples::cube(n, 5) {
        let (x1, x2, x3, x4, x5) = (t[0], t[1], t[2], t[3], t[4]);
        let q = |i: usize| p[t[i - 1]] as usize;
        for a in 0..na {
            let qa = pa[a] as usize;
            let v = signed_sum(vec![
                (0, s.act(rho(x2, x3, a), &br(x1, x4, x5))),
                (
                    (q(1) + q(4)) * (q(2) + q(3)) + qa * (q(1) + q(4) + q(2) + q(3)),
                    s.act(rho(x1, x4, a), &br(x2, x3, x5)),
                ),
                (q(2) * (q(3) + q(1)) + qa * (q(1) + q(2)), s.act(rho(x3, x1, a), &br(x2, x4, x5))),
                (q(4) * (q(3) + q(1)) + qa * (q(3) + q(4)), s.act(rho(x2, x4, a), &br(x3, x1, x5))),
                (q(1) * (q(2) + q(3)) + qa * (q(1) + q(3)), s.act(rho(x1, x2, a), &br(x3, x4, x5))),
                (
                    q(2) * (q(1) + q(3) + q(4)) + q(4) * q(1) + qa * (q(2) + q(4)),
                    s.act(rho(x3, x4, a), &br(x1, x2, x5)),
                ),
            ]);
            let mut idx = t.clone();
            idx.push(a);
            r.expect_zero("ho1", &idx, v);
        }
    }

    let products: Vec<Element> = Tuples::cube(na, 2).map(|u| s.algebra.mul_basis(u[0], u[1])).collect();
    for t in Tuples::cube(n, 5) {
        for u in Tuples::cube(na, 2) {
            let (a4, a5) = (u[0], u[1]);
            let aa = &products[a4 * na + a5];
            let v = match convention {
                SignConvention::Consistent => ho2_consistent(s, &t, a4, a5, aa),
                SignConvention::Literal => ho2_literal(s, &t, a4, a5, aa),
            };
            let mut idx = t.clone();
            idx.extend_from_slice(&[a4, a5]);
            r.expect_zero("ho2", &idx, v);
        }
    }

    for t in Tuples::cube(n, 4) {
        let (x1, x2, x3, x4) = (t[0], t[1], t[2], t[3]);
        let q = |i: usize| p[t[i - 1]] as usize;
        for c in 0..na {
            let rr = |u: usize, v: usize, w: usize, z: usize| s.rho(&b(u), &b(v), rho(w, z, c));
            let v = signed_sum(vec![
                (0, rr(x1, x2, x3, x4)),
                ((q(1) + q(2)) * (q(3) + q(4)), rr(x3, x4, x1, x2)),
                (q(1) * (q(2) + q(3)), rr(x2, x3, x1, x4)),
                (q(4) * (q(2) + q(3)), rr(x1, x4, x2, x3)),
                (q(3) * (q(1) + q(2)), rr(x3, x1, x2, x4)),
                (q(1) * (q(2) + q(3) + q(4)) + q(3) * q(4), rr(x2, x4, x3, x1)),
            ]);
            r.expect_zero("ho4", &[x1, x2, x3, x4, c], v);
            for bb in 0..na {
                let qb = pa[bb] as usize;
                let tt = |u: usize, v: usize, w: usize, z: usize| s.algebra.mul(rho(u, v, bb), rho(w, z, c));
                let v = signed_sum(vec![
                    (0, tt(x1, x2, x3, x4)),
                    (q(3) * (q(1) + q(2) + qb) + qb * q(2), tt(x3, x1, x2, x4)),
                    (q(1) * (q(2) + q(3) + qb) + q(1) * qb, tt(x2, x3, x1, x4)),
                ]);
                r.expect_zero("ho5", &[x1, x2, x3, x4, bb, c], v);
            }
        }
    }
    r
}

fn ho2_consistent(s: &ThreeLieRinehartStructure, t: &[usize], a4: usize, a5: usize, aa: &Element) -> Element {
    let idx = [t[0], t[1], t[2], t[3], t[4], a4, a5];
    let par: Vec<Parity> = (0..7).map(|k| if k < 5 { s.p(idx[k]) } else { s.algebra.parity(idx[k]) }).collect();
    let mut out = Element::zero();
    for (k, (neg, w)) in HO2_TERMS.iter().enumerate() {
        let bracket = s.bracket.eval_basis(&[idx[w[4]], idx[w[5]], idx[w[6]]]);
        if bracket.is_zero() {
            continue;
        }
        let v = if k < 3 {
            s.act(&s.rho(&b(idx[w[0]]), &b(idx[w[1]]), aa), &bracket)
        } else {
            let inner = s.act(&s.anchor.eval_basis(&[idx[w[1]], idx[w[2]], idx[w[3]]]), &bracket);
            s.act(&b(idx[w[0]]), &inner)
        };
        out.add_signed(*neg as usize + reorder_exponent(&HO2_REF, w, &par), &v);
    }
    out
}

fn ho2_literal(s: &ThreeLieRinehartStructure, t: &[usize], a4: usize, a5: usize, aa: &Element) -> Element {
    let x = [usize::MAX, t[0], t[1], t[2], t[3], t[4]];
    let p: Vec<usize> = (0..6).map(|i| if i == 0 { 0 } else { s.p(x[i]) as usize }).collect();
    let (q4, q5) = (s.algebra.parity(a4) as usize, s.algebra.parity(a5) as usize);
    let q1 = 0;
    let t1 = |i: usize, j: usize, k: usize, l: usize, m: usize| {
        s.act(&s.rho(&b(x[i]), &b(x[j]), aa), &s.bracket.eval_basis(&[x[k], x[l], x[m]]))
    };
    let t2 = |u: usize, v: usize, i: usize, j: usize, k: usize, l: usize, m: usize| {
        let inner = s.act(&s.anchor.eval_basis(&[x[i], x[j], v]), &s.bracket.eval_basis(&[x[k], x[l], x[m]]));
        s.act(&b(u), &inner)
    };
    signed_sum(vec![
        (0, t1(2, 3, 1, 4, 5)),
        (p[2] * (q1 + q4 + q5 + p[3]), t1(3, 1, 2, 4, 5)),
        (p[1] * (q4 + q5 + p[2] + p[3]), t1(1, 2, 3, 4, 5)),
        ((q4 + p[5]) * (p[2] + p[3]) + (p[1] + p[4]) * (p[2] + p[3] + q5), t2(a4, a5, 1, 4, 5, 2, 3)),
        (q4 * (p[2] + p[3]) + (p[4] + p[5]) * (p[1] + p[3]) + p[4] * q5, t2(a4, a5, 2, 4, 5, 3, 1)),
        (q4 * (p[2] + p[3]) + (p[4] + p[5]) * (p[1] + p[2]) + p[4] * q5, t2(a4, a5, 3, 4, 5, 1, 2)),
        (1 + (p[1] + q5 + p[5]) * (q4 + p[2] + p[3]) + p[4] * (p[2] + p[3]), t2(a5, a4, 1, 5, 4, 2, 3)),
        (1 + (q5 + p[5]) * (p[2] + p[3]) + (q4 + p[5]) * (p[3] + p[5]), t2(a5, a4, 2, 5, 4, 3, 1)),
        (
            1 + q5 * (p[2] + p[3] + q4) + (p[2] + p[5]) * (p[1] + p[4] + q4) + p[2] * (p[3] + p[5]) + p[1] * p[4],
            t2(a5, a4, 3, 5, 4, 1, 2),
        ),
    ])
}
