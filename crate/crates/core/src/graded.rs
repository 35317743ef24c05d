//! Graded spaces, sparse elements, Koszul signs and sparse multilinear maps.

use crate::report::CheckReport;
use crate::scalar::{format_scalar, sign, Parity, Scalar};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradedError {
    #[error("parity entries must be 0 or 1, got {0}")]
    InvalidParity(u8),
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("index {index} out of range in slot {slot} (dimension {dim})")]
    IndexOutOfRange { slot: usize, index: usize, dim: usize },
    #[error("entry {inputs:?} -> {output} breaks the declared map parity")]
    ParityViolation { inputs: Vec<usize>, output: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("positions ({0}, {1}) invalid for arity {2}")]
    BadPositions(usize, usize, usize),
    #[error("domain spaces at positions ({0}, {1}) differ")]
    DomainMismatch(usize, usize),
}

/// A finite graded vector space given by the parities of an ordered homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    label: String,
    parity: Vec<Parity>,
}

impl GradedSpace {
    pub fn new(label: impl Into<String>, parity: Vec<Parity>) -> Result<Self, GradedError> {
        if let Some(&p) = parity.iter().find(|&&p| p > 1) {
            return Err(GradedError::InvalidParity(p));
        }
        Ok(GradedSpace { label: label.into(), parity })
    }

    pub fn even(label: impl Into<String>, dim: usize) -> Self {
        GradedSpace { label: label.into(), parity: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn relabel(&self, label: impl Into<String>) -> Self {
        GradedSpace { label: label.into(), parity: self.parity.clone() }
    }

    /// `self ⊕ other`, with the basis of `other` placed after that of `self`.
    pub fn direct_sum(&self, other: &GradedSpace, label: impl Into<String>) -> Self {
        let mut parity = self.parity.clone();
        parity.extend_from_slice(&other.parity);
        GradedSpace { label: label.into(), parity }
    }

    pub fn basis_of_parity(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i] == p).collect()
    }

    pub fn homogeneity(&self, e: &Element) -> Homogeneity {
        let mut seen: Option<Parity> = None;
        for (i, _) in e.iter() {
            let p = self.parity[i];
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return Homogeneity::Mixed,
                _ => {}
            }
        }
        match seen {
            None => Homogeneity::Zero,
            Some(p) => Homogeneity::Pure(p),
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        e.iter().all(|(i, _)| i < self.dim())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Pure(Parity),
    Mixed,
}

/// Sparse vector in some graded space: basis position to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Element {
    coeffs: BTreeMap<usize, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element { coeffs: BTreeMap::new() }
    }

    pub fn basis(i: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, Scalar::one());
        Element { coeffs }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(pairs: I) -> Self {
        let mut e = Element::zero();
        for (i, c) in pairs {
            e.add_at(i, &c);
        }
        e
    }

    /// The coefficient map, usable as a sparse vector.
    pub fn as_map(&self) -> &BTreeMap<usize, Scalar> {
        &self.coeffs
    }

    pub fn from_map(mut coeffs: BTreeMap<usize, Scalar>) -> Self {
        coeffs.retain(|_, c| !c.is_zero());
        Element { coeffs }
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    pub fn add_at(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(i).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn set(&mut self, i: usize, c: Scalar) {
        if c.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, c);
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Element) {
        if c.is_zero() {
            return;
        }
        for (i, v) in other.iter() {
            self.add_at(i, &(c * v));
        }
    }

    /// `self += (-1)^e * other`
    pub fn add_signed(&mut self, e: usize, other: &Element) {
        if e % 2 == 0 {
            for (i, v) in other.iter() {
                self.add_at(i, v);
            }
        } else {
            for (i, v) in other.iter() {
                self.add_at(i, &-v);
            }
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { coeffs: self.coeffs.iter().map(|(&i, v)| (i, v * c)).collect() }
    }

    pub fn signed(&self, e: usize) -> Element {
        if e % 2 == 0 {
            self.clone()
        } else {
            -self
        }
    }

    /// Applies a linear map given on basis vectors.
    pub fn map_linear<F: FnMut(usize) -> Element>(&self, mut f: F) -> Element {
        let mut out = Element::zero();
        for (i, c) in self.iter() {
            out.add_scaled(c, &f(i));
        }
        out
    }

    /// 1-based rendering, e.g. `e1 - 1/2*e3`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (i, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                s.push_str(&format_scalar(&mag));
                s.push('*');
            }
            s.push_str(&format!("e{}", i + 1));
        }
        s
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_signed(0, rhs);
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_signed(1, rhs);
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { coeffs: self.coeffs.iter().map(|(&i, v)| (i, -v)).collect() }
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        self.add_signed(0, rhs);
    }
}

/// Bijection on positions `0..k`; position `i` moves to `images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GradedError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(GradedError::NotPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Self {
        Permutation { images: (0..k).collect() }
    }

    /// Transposition of positions `i` and `j`.
    pub fn transposition(k: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// The parity vector after moving entry `i` to position `images[i]`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        let mut out = items.to_vec();
        for (i, &j) in self.images.iter().enumerate() {
            out[j] = items[i].clone();
        }
        out
    }

    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let k = self.images.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if self.images[i] > self.images[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn sign(&self) -> Scalar {
        sign(self.inversions().len())
    }
}

/// Exponent `e` of the Koszul factor `(-1)^e`: the number of inverted pairs of odd entries.
pub fn koszul_exponent(perm: &Permutation, parities: &[Parity]) -> Result<usize, GradedError> {
    if parities.len() != perm.size() {
        return Err(GradedError::LengthMismatch(perm.size(), parities.len()));
    }
    Ok(perm.inversions().into_iter().map(|(i, j)| (parities[i] * parities[j]) as usize).sum())
}

/// Pure Koszul factor of a permutation of homogeneous entries; the permutation's own sign is not included.
pub fn koszul_sign(perm: &Permutation, parities: &[Parity]) -> Result<Scalar, GradedError> {
    Ok(sign(koszul_exponent(perm, parities)?))
}

/// Lexicographic iterator over all index tuples with the given slot dimensions.
pub struct Tuples {
    dims: Vec<usize>,
    cur: Option<Vec<usize>>,
}

impl Tuples {
    pub fn new(dims: &[usize]) -> Self {
        let cur = if dims.iter().all(|&d| d > 0) { Some(vec![0; dims.len()]) } else { None };
        Tuples { dims: dims.to_vec(), cur }
    }

    pub fn cube(dim: usize, k: usize) -> Self {
        Tuples::new(&vec![dim; k])
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let mut next = out.clone();
        let mut pos = next.len();
        loop {
            if pos == 0 {
                self.cur = None;
                break;
            }
            pos -= 1;
            next[pos] += 1;
            if next[pos] < self.dims[pos] {
                self.cur = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(out)
    }
}

/// Sparse structure constants of a k-ary map between graded spaces, carrying its own parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearMap {
    domains: Vec<GradedSpace>,
    codomain: GradedSpace,
    parity: Parity,
    entries: BTreeMap<Vec<usize>, Element>,
}

impl MultilinearMap {
    pub fn new(domains: Vec<GradedSpace>, codomain: GradedSpace, parity: Parity) -> Self {
        assert!(parity <= 1, "map parity must be 0 or 1");
        MultilinearMap { domains, codomain, parity, entries: BTreeMap::new() }
    }

    /// `k`-ary map from `domain^k`.
    pub fn power(domain: &GradedSpace, k: usize, codomain: &GradedSpace, parity: Parity) -> Self {
        MultilinearMap::new(vec![domain.clone(); k], codomain.clone(), parity)
    }

    pub fn arity(&self) -> usize {
        self.domains.len()
    }

    pub fn domains(&self) -> &[GradedSpace] {
        &self.domains
    }

    pub fn domain(&self, slot: usize) -> &GradedSpace {
        &self.domains[slot]
    }

    pub fn codomain(&self) -> &GradedSpace {
        &self.codomain
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn with_parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn input_parity(&self, inputs: &[usize]) -> Parity {
        (inputs.iter().enumerate().map(|(s, &i)| self.domains[s].parity(i) as usize).sum::<usize>() % 2) as Parity
    }

    fn check_indices(&self, inputs: &[usize], output: usize) -> Result<(), GradedError> {
        if inputs.len() != self.arity() {
            return Err(GradedError::ArityMismatch { expected: self.arity(), got: inputs.len() });
        }
        for (slot, &i) in inputs.iter().enumerate() {
            if i >= self.domains[slot].dim() {
                return Err(GradedError::IndexOutOfRange { slot, index: i, dim: self.domains[slot].dim() });
            }
        }
        if output >= self.codomain.dim() {
            return Err(GradedError::IndexOutOfRange { slot: inputs.len(), index: output, dim: self.codomain.dim() });
        }
        Ok(())
    }

    pub fn respects_parity(&self, inputs: &[usize], output: usize) -> bool {
        (self.input_parity(inputs) + self.parity) % 2 == self.codomain.parity(output)
    }

    /// Sets one structure constant, rejecting entries that break the map parity.
    pub fn set(&mut self, inputs: &[usize], output: usize, value: Scalar) -> Result<(), GradedError> {
        self.check_indices(inputs, output)?;
        if !value.is_zero() && !self.respects_parity(inputs, output) {
            return Err(GradedError::ParityViolation { inputs: inputs.to_vec(), output });
        }
        self.set_unchecked(inputs, output, value);
        Ok(())
    }

    /// Adds to one structure constant, rejecting entries that break the map parity.
    pub fn add(&mut self, inputs: &[usize], output: usize, value: &Scalar) -> Result<(), GradedError> {
        self.check_indices(inputs, output)?;
        if !value.is_zero() && !self.respects_parity(inputs, output) {
            return Err(GradedError::ParityViolation { inputs: inputs.to_vec(), output });
        }
        let slot = self.entries.entry(inputs.to_vec()).or_default();
        slot.add_at(output, value);
        if slot.is_zero() {
            self.entries.remove(inputs);
        }
        Ok(())
    }

    /// Sets a constant without the parity test; used to build deliberately broken maps.
    pub fn set_unchecked(&mut self, inputs: &[usize], output: usize, value: Scalar) {
        let slot = self.entries.entry(inputs.to_vec()).or_default();
        slot.set(output, value);
        if slot.is_zero() {
            self.entries.remove(inputs);
        }
    }

    /// Replaces the whole value on a basis tuple. Parity is checked per output index.
    pub fn set_value(&mut self, inputs: &[usize], value: Element) -> Result<(), GradedError> {
        for (o, _) in value.iter() {
            self.check_indices(inputs, o)?;
            if !self.respects_parity(inputs, o) {
                return Err(GradedError::ParityViolation { inputs: inputs.to_vec(), output: o });
            }
        }
        if value.is_zero() {
            self.entries.remove(inputs);
        } else {
            self.entries.insert(inputs.to_vec(), value);
        }
        Ok(())
    }

    pub fn get(&self, inputs: &[usize]) -> Option<&Element> {
        self.entries.get(inputs)
    }

    pub fn eval_basis(&self, inputs: &[usize]) -> Element {
        self.entries.get(inputs).cloned().unwrap_or_default()
    }

    pub fn coefficient(&self, inputs: &[usize], output: usize) -> Scalar {
        self.entries.get(inputs).map(|e| e.coeff(output)).unwrap_or_else(Scalar::zero)
    }

    /// Multilinear evaluation with argument validation.
    pub fn evaluate(&self, args: &[Element]) -> Result<Element, GradedError> {
        if args.len() != self.arity() {
            return Err(GradedError::ArityMismatch { expected: self.arity(), got: args.len() });
        }
        for (slot, a) in args.iter().enumerate() {
            if let Some((i, _)) = a.iter().find(|(i, _)| *i >= self.domains[slot].dim()) {
                return Err(GradedError::IndexOutOfRange { slot, index: i, dim: self.domains[slot].dim() });
            }
        }
        let refs: Vec<&Element> = args.iter().collect();
        Ok(self.eval(&refs))
    }

    /// Multilinear evaluation; arguments are assumed to live in the right spaces.
    pub fn eval(&self, args: &[&Element]) -> Element {
        debug_assert_eq!(args.len(), self.arity());
        let mut out = Element::zero();
        if args.iter().any(|a| a.is_zero()) {
            return out;
        }
        let mut idx = Vec::with_capacity(args.len());
        self.eval_rec(args, &mut idx, &Scalar::one(), &mut out);
        out
    }

    fn eval_rec(&self, args: &[&Element], idx: &mut Vec<usize>, coef: &Scalar, out: &mut Element) {
        let depth = idx.len();
        if depth == args.len() {
            if let Some(v) = self.entries.get(idx.as_slice()) {
                out.add_scaled(coef, v);
            }
            return;
        }
        for (i, c) in args[depth].iter() {
            idx.push(i);
            self.eval_rec(args, idx, &(coef * c), out);
            idx.pop();
        }
    }

    /// Evaluation where every argument is a basis vector except possibly some general elements.
    pub fn eval_mixed(&self, args: &[Arg<'_>]) -> Element {
        let owned: Vec<Element> = args
            .iter()
            .map(|a| match a {
                Arg::Basis(i) => Element::basis(*i),
                Arg::Elem(e) => (*e).clone(),
            })
            .collect();
        let refs: Vec<&Element> = owned.iter().collect();
        self.eval(&refs)
    }

    /// Iterates `(inputs, output, value)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, usize, &Scalar)> + '_ {
        self.entries.iter().flat_map(|(k, e)| e.iter().map(move |(o, c)| (k, o, c)))
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Vec<usize>, &Element)> + '_ {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.values().map(|e| e.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scaled(&self, c: &Scalar) -> MultilinearMap {
        let mut out = MultilinearMap::new(self.domains.clone(), self.codomain.clone(), self.parity);
        if !c.is_zero() {
            for (k, e) in &self.entries {
                out.entries.insert(k.clone(), e.scaled(c));
            }
        }
        out
    }

    /// `self + c * other`; shapes must agree.
    pub fn plus_scaled(&self, c: &Scalar, other: &MultilinearMap) -> MultilinearMap {
        let mut out = self.clone();
        out.add_map(c, other);
        out
    }

    pub fn add_map(&mut self, c: &Scalar, other: &MultilinearMap) {
        for (k, e) in &other.entries {
            let slot = self.entries.entry(k.clone()).or_default();
            slot.add_scaled(c, e);
            if slot.is_zero() {
                self.entries.remove(k);
            }
        }
    }

    /// Same constants, reinterpreted with new domain and codomain labels (dimensions must agree).
    pub fn retarget(&self, domains: Vec<GradedSpace>, codomain: GradedSpace) -> MultilinearMap {
        MultilinearMap { domains, codomain, parity: self.parity, entries: self.entries.clone() }
    }

    /// All basis tuples of the domain in lexicographic order.
    pub fn domain_tuples(&self) -> Tuples {
        let dims: Vec<usize> = self.domains.iter().map(|d| d.dim()).collect();
        Tuples::new(&dims)
    }
}

/// Argument for [`MultilinearMap::eval_mixed`].
pub enum Arg<'a> {
    Basis(usize),
    Elem(&'a Element),
}

/// Koszul exponent for exchanging the entries at positions `i < j` of a tuple with the given parities.
pub fn transposition_exponent(parities: &[Parity], i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    let mid: usize = parities[i + 1..j].iter().map(|&p| p as usize).sum();
    (parities[i] * parities[j]) as usize + (parities[i] as usize + parities[j] as usize) * mid
}

/// The map `f(.., x_i, .., x_j, ..) + (-1)^{κ} f(.., x_j, .., x_i, ..)` on basis tuples, where `κ`
/// is the Koszul exponent of exchanging the two slots. Zero iff `f` is super skew in `(i, j)`.
pub fn super_alternating_defect(
    map: &MultilinearMap,
    positions: (usize, usize),
) -> Result<MultilinearMap, GradedError> {
    let (i, j) = positions;
    let k = map.arity();
    if i == j || i >= k || j >= k {
        return Err(GradedError::BadPositions(i, j, k));
    }
    if map.domain(i) != map.domain(j) {
        return Err(GradedError::DomainMismatch(i, j));
    }
    let mut out = MultilinearMap::new(map.domains.clone(), map.codomain.clone(), map.parity);
    for t in map.domain_tuples() {
        let mut swapped = t.clone();
        swapped.swap(i, j);
        let pars: Vec<Parity> = t.iter().enumerate().map(|(s, &x)| map.domain(s).parity(x)).collect();
        let mut v = map.eval_basis(&t);
        v.add_signed(transposition_exponent(&pars, i, j), &map.eval_basis(&swapped));
        if !v.is_zero() {
            out.entries.insert(t, v);
        }
    }
    Ok(out)
}

/// Every stored entry must satisfy `parity(out) = Σ parity(inputs) + parity(map)`.
pub fn check_parity_consistency(map: &MultilinearMap) -> CheckReport {
    let mut report = CheckReport::new("parity");
    for (inputs, out, c) in map.entries() {
        if !map.respects_parity(inputs, out) {
            let mut idx = inputs.clone();
            idx.push(out);
            report.violation("parity", &idx, Element::from_pairs([(out, c.clone())]), Element::zero());
        }
    }
    report
}
