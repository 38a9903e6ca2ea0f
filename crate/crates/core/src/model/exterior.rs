//! Basis monomials, wedge products, contraction and type decomposition.
//!
//! # Ordering convention
//!
//! All signs in this crate derive from one convention. The degree-one
//! generators are ordered in three blocks:
//!
//! * vectors `T_1 < … < T_n < W_1 < … < W_m` (indices `0..n+m`),
//! * holomorphic forms `ω^1 < … < ω^n < ρ^1 < … < ρ^m` (indices `0..n+m`,
//!   transient: they occur only inside [`d_form`](crate::calculus::d_form)
//!   outputs and contractions, never in `B^{p,q}`),
//! * antiholomorphic forms `ω̄^1 < … < ω̄^n < ρ̄^1 < … < ρ̄^m`.
//!
//! A monomial is the wedge word `[vectors][hol forms][anti forms]` with each
//! block strictly ascending, and carries no extra sign between blocks: the
//! monomial with vectors `{T_j, W_l}` and forms `{ω̄^k}` *is* the element
//! `T_j∧W_l∧ω̄^k`. Every generator has odd degree, so the wedge of two
//! canonical words is the parity of the permutation that re-sorts the
//! concatenated word (zero on repeats).

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{GaussianRational, SparseVector};

use super::algebra::AlgebraSpec;
use super::ModelError;

/// A basis wedge-monomial. Empty index sets give the scalar monomial `1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default, Hash)]
pub struct Monomial {
    /// Vector factors: `0..n` are `T`-indices, `n..n+m` are `W`-indices.
    pub vec_idx: Vec<usize>,
    /// Holomorphic form factors (`ω`, `ρ`); empty for every `B^{p,q}` element.
    pub hol_idx: Vec<usize>,
    /// Antiholomorphic form factors: `0..n` are `ω̄`, `n..n+m` are `ρ̄`.
    pub form_idx: Vec<usize>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_parts(vec_idx: Vec<usize>, form_idx: Vec<usize>) -> Self {
        debug_assert!(strictly_ascending(&vec_idx) && strictly_ascending(&form_idx));
        Monomial {
            vec_idx,
            hol_idx: vec![],
            form_idx,
        }
    }

    /// Total exterior degree.
    pub fn degree(&self) -> usize {
        self.vec_idx.len() + self.hol_idx.len() + self.form_idx.len()
    }

    /// `(p, q)` for invariant monomials (no holomorphic-form factors).
    pub fn bigrade(&self) -> Option<(usize, usize)> {
        if self.hol_idx.is_empty() {
            Some((self.vec_idx.len(), self.form_idx.len()))
        } else {
            None
        }
    }

    /// Fine type `(k, ℓ; a, b)`: counts of `T`, `W`, `ω̄`, `ρ̄` factors.
    pub fn type_index(&self, n: usize) -> TypeIndex {
        debug_assert!(self.hol_idx.is_empty());
        let k = self.vec_idx.iter().filter(|&&i| i < n).count();
        let a = self.form_idx.iter().filter(|&&i| i < n).count();
        TypeIndex {
            k,
            l: self.vec_idx.len() - k,
            a,
            b: self.form_idx.len() - a,
        }
    }

    /// Human-readable form; needs `n` to tell the blocks apart.
    pub fn display(&self, n: usize) -> String {
        if self.degree() == 0 {
            return "1".to_string();
        }
        let mut parts: Vec<String> = vec![];
        for &i in &self.vec_idx {
            parts.push(if i < n {
                format!("T{}", i + 1)
            } else {
                format!("W{}", i - n + 1)
            });
        }
        for &i in &self.hol_idx {
            parts.push(if i < n {
                format!("w{}", i + 1)
            } else {
                format!("r{}", i - n + 1)
            });
        }
        for &i in &self.form_idx {
            parts.push(if i < n {
                format!("~w{}", i + 1)
            } else {
                format!("~r{}", i - n + 1)
            });
        }
        parts.join("∧")
    }
}

fn strictly_ascending(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// The quadruple `(k, ℓ; a, b)` with `k + ℓ = p` and `a + b = q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct TypeIndex {
    pub k: usize,
    pub l: usize,
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for TypeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.k, self.l, self.a, self.b)
    }
}

/// A sparse ℚ(i)-linear combination of monomials; no zero terms stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::from_monomial(Monomial::one(), GaussianRational::one())
    }

    pub fn from_monomial(mono: Monomial, coeff: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Element { terms }
    }

    /// The vector generator `T_{j+1}` (0-based `j < n`).
    pub fn vector_t(j: usize) -> Self {
        Element::from_monomial(
            Monomial::from_parts(vec![j], vec![]),
            GaussianRational::one(),
        )
    }

    /// The central vector generator `W_{l+1}` (0-based `l < m`).
    pub fn vector_w(n: usize, l: usize) -> Self {
        Element::from_monomial(
            Monomial::from_parts(vec![n + l], vec![]),
            GaussianRational::one(),
        )
    }

    /// The antiholomorphic form `ω̄^{k+1}`.
    pub fn form_omega_bar(k: usize) -> Self {
        Element::from_monomial(
            Monomial::from_parts(vec![], vec![k]),
            GaussianRational::one(),
        )
    }

    /// The antiholomorphic form `ρ̄^{l+1}`.
    pub fn form_rho_bar(n: usize, l: usize) -> Self {
        Element::from_monomial(
            Monomial::from_parts(vec![], vec![n + l]),
            GaussianRational::one(),
        )
    }

    /// The transient holomorphic form `ω^{k+1}`.
    pub fn form_omega(k: usize) -> Self {
        Element::from_monomial(
            Monomial {
                vec_idx: vec![],
                hol_idx: vec![k],
                form_idx: vec![],
            },
            GaussianRational::one(),
        )
    }

    /// The transient holomorphic form `ρ^{l+1}`.
    pub fn form_rho(n: usize, l: usize) -> Self {
        Element::from_monomial(
            Monomial {
                vec_idx: vec![],
                hol_idx: vec![n + l],
                form_idx: vec![],
            },
            GaussianRational::one(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> GaussianRational {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &GaussianRational) -> Element {
        if factor.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// `(p, q)` when every term is invariant of one bigrade; `None` for the
    /// zero element or mixed grades.
    pub fn bigrade(&self) -> Option<(usize, usize)> {
        let mut grade = None;
        for (m, _) in self.terms() {
            let g = m.bigrade()?;
            match grade {
                None => grade = Some(g),
                Some(prev) if prev != g => return None,
                _ => {}
            }
        }
        grade
    }

    /// True when every term (if any) is invariant with bigrade `(p, q)`.
    pub fn is_grade(&self, p: usize, q: usize) -> bool {
        self.terms
            .keys()
            .all(|m| m.bigrade() == Some((p, q)))
    }

    /// Wedge product: bilinear, associative, graded-commutative.
    pub fn wedge(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                if let Some((mono, sign)) = wedge_monomials(ma, mb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(mono, c);
                }
            }
        }
        out
    }

    /// Splits an invariant element by fine type `(k, ℓ; a, b)`.
    pub fn type_components(&self, n: usize) -> BTreeMap<TypeIndex, Element> {
        let mut out: BTreeMap<TypeIndex, Element> = BTreeMap::new();
        for (m, c) in self.terms() {
            let t = m.type_index(n);
            out.entry(t)
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// The single component of fine type `t` (zero if absent).
    pub fn type_component(&self, n: usize, t: TypeIndex) -> Element {
        let mut out = Element::zero();
        for (m, c) in self.terms() {
            if m.type_index(n) == t {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn display(&self, n: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| format!("({}) {}", c, m.display(n)))
            .collect();
        parts.join(" + ")
    }
}

/// Merges two ascending lists counting inversions; `None` on a repeat.
fn merge_ascending(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, usize)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                // b[j] jumps over all remaining elements of a.
                inversions += a.len() - i;
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, inversions))
}

/// Canonical product of two monomials with its sign, `None` when zero.
fn wedge_monomials(x: &Monomial, y: &Monomial) -> Option<(Monomial, i8)> {
    // Word of x: [vx hx ax]; word of y: [vy hy ay]. Sort the concatenation
    // into blocks: vy crosses hx and ax, then hy crosses ax, then each block
    // pair merges with its inversion count.
    let mut exponent =
        y.vec_idx.len() * (x.hol_idx.len() + x.form_idx.len()) + y.hol_idx.len() * x.form_idx.len();
    let (vec_idx, inv_v) = merge_ascending(&x.vec_idx, &y.vec_idx)?;
    let (hol_idx, inv_h) = merge_ascending(&x.hol_idx, &y.hol_idx)?;
    let (form_idx, inv_f) = merge_ascending(&x.form_idx, &y.form_idx)?;
    exponent += inv_v + inv_h + inv_f;
    let sign = if exponent % 2 == 0 { 1 } else { -1 };
    Some((
        Monomial {
            vec_idx,
            hol_idx,
            form_idx,
        },
        sign,
    ))
}

/// Interior product `ι_V φ` for a grade-`(1,0)` vector element `V`.
///
/// The pairing follows the dual bases: `⟨T_j, ω^i⟩ = δ_{ji}`,
/// `⟨W_l, ρ^{l'}⟩ = δ_{ll'}`, everything else zero; it is extended as an odd
/// contraction, `ι_V(α∧β) = (ι_Vα)∧β + (−1)^{|α|} α∧(ι_Vβ)`.
pub fn contract(vector: &Element, target: &Element) -> Result<Element, ModelError> {
    for (m, _) in vector.terms() {
        if m.bigrade() != Some((1, 0)) {
            return Err(ModelError::BadGrade(format!(
                "contraction direction must be a (1,0) vector, found degree-{} term",
                m.degree()
            )));
        }
    }
    let mut out = Element::zero();
    for (vm, vc) in vector.terms() {
        let g = vm.vec_idx[0];
        for (tm, tc) in target.terms() {
            // Walk the word; only holomorphic-form factors can pair, but
            // every earlier factor contributes to the position sign.
            let base = tm.vec_idx.len();
            for (slot, &h) in tm.hol_idx.iter().enumerate() {
                if h != g {
                    continue;
                }
                let pos = base + slot;
                let mut coeff = vc * tc;
                if pos % 2 == 1 {
                    coeff = -coeff;
                }
                let mut hol = tm.hol_idx.clone();
                hol.remove(slot);
                out.add_term(
                    Monomial {
                        vec_idx: tm.vec_idx.clone(),
                        hol_idx: hol,
                        form_idx: tm.form_idx.clone(),
                    },
                    coeff,
                );
            }
        }
    }
    Ok(out)
}

/// Enumerates ascending `r`-subsets of `0..size` in lexicographic order.
fn combinations(size: usize, r: usize) -> Vec<Vec<usize>> {
    if r > size {
        return vec![];
    }
    let mut out = vec![];
    let mut current: Vec<usize> = (0..r).collect();
    loop {
        out.push(current.clone());
        // Advance to the next combination.
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + size - r {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..r {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// The ordered monomial basis of `B^{p,q}`; empty for out-of-range grades.
pub fn basis(spec: &AlgebraSpec, p: usize, q: usize) -> Vec<Monomial> {
    let dim = spec.n() + spec.m();
    if p > dim || q > dim {
        return vec![];
    }
    let mut out = Vec::new();
    for v in combinations(dim, p) {
        for f in combinations(dim, q) {
            out.push(Monomial::from_parts(v.clone(), f));
        }
    }
    out
}

/// A basis of `B^{p,q}` with its monomial-to-index lookup.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl GradedBasis {
    pub fn new(spec: &AlgebraSpec, p: usize, q: usize) -> Self {
        let monomials = basis(spec, p, q);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        GradedBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of an element all of whose terms lie in this basis.
    pub fn coords(&self, e: &Element) -> Result<SparseVector, ModelError> {
        let mut pairs = vec![];
        for (m, c) in e.terms() {
            let i = self.index.get(m).ok_or_else(|| {
                ModelError::BadGrade("element has a term outside the graded basis".to_string())
            })?;
            pairs.push((*i, c.clone()));
        }
        Ok(SparseVector::from_pairs(pairs))
    }

    pub fn element(&self, v: &SparseVector) -> Element {
        let mut out = Element::zero();
        for (i, c) in v.iter() {
            out.add_term(self.monomials[*i].clone(), c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussianRational as GR;

    fn spec_nm(n: usize, m: usize) -> AlgebraSpec {
        AlgebraSpec::new("test", n, m, vec![]).unwrap()
    }

    #[test]
    fn basis_counts_match_binomials() {
        let spec = spec_nm(1, 1);
        // (p,q) = (1,1) over n+m = 2 has 2·2 = 4 monomials.
        assert_eq!(basis(&spec, 1, 1).len(), 4);
        assert_eq!(basis(&spec, 0, 0).len(), 1);
        let spec21 = spec_nm(2, 1);
        assert_eq!(basis(&spec21, 2, 1).len(), 9);
        // Out of range is empty.
        assert_eq!(basis(&spec21, 4, 0).len(), 0);
    }

    #[test]
    fn basis_is_lexicographic() {
        let spec = spec_nm(2, 1);
        let b = basis(&spec, 2, 0);
        let sets: Vec<&[usize]> = b.iter().map(|m| m.vec_idx.as_slice()).collect();
        assert_eq!(sets, vec![&[0, 1][..], &[0, 2][..], &[1, 2][..]]);
    }

    #[test]
    fn wedge_antisymmetry_and_nilpotency() {
        let w1 = Element::form_omega_bar(0);
        let w2 = Element::form_omega_bar(1);
        assert_eq!(w1.wedge(&w2), w2.wedge(&w1).neg());
        let t1 = Element::vector_t(0);
        assert!(t1.wedge(&t1).is_zero());
    }

    #[test]
    fn wedge_of_central_and_tangent_vector() {
        // W∧T stored canonically as -(T∧W): one transposition.
        let n = 1;
        let w = Element::vector_w(n, 0);
        let t = Element::vector_t(0);
        let wt = w.wedge(&t);
        let mono = Monomial::from_parts(vec![0, 1], vec![]);
        assert_eq!(wt.coeff(&mono), -GR::one());
        assert_eq!(wt.num_terms(), 1);
    }

    #[test]
    fn wedge_graded_commutativity() {
        // deg-2 by deg-1: commute without sign; deg-1 by deg-1: anticommute.
        let n = 2;
        let a = Element::vector_t(0).wedge(&Element::form_omega_bar(1)); // degree 2
        let b = Element::form_rho_bar(n, 0); // degree 1
        assert_eq!(a.wedge(&b), b.wedge(&a));
    }

    #[test]
    fn contraction_pairs_duals() {
        // ι_{T1}(ω¹∧ω̄¹) = ω̄¹, ι_{T2}(ω¹∧ω̄¹) = 0.
        let phi = Element::form_omega(0).wedge(&Element::form_omega_bar(0));
        let got = contract(&Element::vector_t(0), &phi).unwrap();
        assert_eq!(got, Element::form_omega_bar(0));
        let zero = contract(&Element::vector_t(1), &phi).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn contraction_sign_in_second_slot() {
        // ι_{T2}(ω¹∧ω²) = −ω¹.
        let phi = Element::form_omega(0).wedge(&Element::form_omega(1));
        let got = contract(&Element::vector_t(1), &phi).unwrap();
        assert_eq!(got, Element::form_omega(0).neg());
    }

    #[test]
    fn contraction_rejects_bad_direction() {
        let phi = Element::form_omega(0);
        assert!(contract(&Element::form_omega_bar(0), &phi).is_err());
    }

    #[test]
    fn type_components_partition() {
        let n = 2;
        let x = Element::vector_t(0)
            .wedge(&Element::vector_t(1))
            .add(&Element::vector_w(n, 0).wedge(&Element::vector_t(0)));
        let comps = x.type_components(n);
        assert_eq!(comps.len(), 2);
        let sum = comps
            .values()
            .fold(Element::zero(), |acc, e| acc.add(e));
        assert_eq!(sum, x);
        assert!(comps.contains_key(&TypeIndex { k: 2, l: 0, a: 0, b: 0 }));
        assert!(comps.contains_key(&TypeIndex { k: 1, l: 1, a: 0, b: 0 }));
    }

    #[test]
    fn rho_bar_type() {
        let n = 1;
        let r = Element::form_rho_bar(n, 0);
        let comps = r.type_components(n);
        assert_eq!(comps.len(), 1);
        assert!(comps.contains_key(&TypeIndex { k: 0, l: 0, a: 0, b: 1 }));
    }

    #[test]
    fn graded_basis_round_trip() {
        let spec = spec_nm(2, 1);
        let gb = GradedBasis::new(&spec, 1, 1);
        let e = Element::vector_t(1)
            .wedge(&Element::form_rho_bar(2, 0))
            .scale(&GR::from_ratio(3, 7));
        let v = gb.coords(&e).unwrap();
        assert_eq!(gb.element(&v), e);
    }
}
