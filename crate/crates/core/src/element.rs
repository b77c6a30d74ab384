//! Sparse linear combinations of basis vectors and of pure tensors.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// Index of a basis vector. Finite bases use `0..dim`; infinite ones use all of ℤ.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisId(pub i64);

impl BasisId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite linear combination of basis vectors with no stored zero coefficients.
#[derive(Clone)]
pub struct Element<F> {
    terms: BTreeMap<BasisId, F>,
}

impl<F: Scalar> Element<F> {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(id: BasisId) -> Self {
        Self::term(id, F::one())
    }

    pub fn term(id: BasisId, c: F) -> Self {
        let mut e = Self::zero();
        e.add_term(id, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BasisId, F)>) -> Self {
        let mut e = Self::zero();
        for (id, c) in terms {
            e.add_term(id, c);
        }
        e
    }

    /// Dense coordinates `0..n` as an element.
    pub fn from_coords(coords: &[F]) -> Self {
        Self::from_terms(
            coords
                .iter()
                .enumerate()
                .map(|(i, c)| (BasisId(i as i64), c.clone())),
        )
    }

    pub fn add_term(&mut self, id: BasisId, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&id) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&id);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(id, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        for (id, v) in &other.terms {
            self.add_term(*id, v.clone() * c.clone());
        }
    }

    pub fn coeff(&self, id: BasisId) -> F {
        self.terms.get(&id).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisId, &F)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn support(&self) -> impl Iterator<Item = BasisId> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v.clone() * c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &F::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    /// Coordinates on `0..n`; entries outside the range are ignored.
    pub fn to_coords(&self, n: usize) -> Vec<F> {
        (0..n).map(|i| self.coeff(BasisId(i as i64))).collect()
    }

    /// Applies a linear map given on basis vectors.
    pub fn map_linear(&self, f: impl Fn(BasisId) -> Element<F>) -> Element<F> {
        let mut out = Element::zero();
        for (id, c) in &self.terms {
            out.add_scaled(&f(*id), c);
        }
        out
    }

    /// Applies a linear functional given on basis vectors.
    pub fn eval_linear(&self, f: impl Fn(BasisId) -> F) -> F {
        self.terms
            .iter()
            .fold(F::zero(), |acc, (id, c)| acc + c.clone() * f(*id))
    }
}

impl<F: Scalar> PartialEq for Element<F> {
    fn eq(&self, other: &Self) -> bool {
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|k| self.coeff(*k) == other.coeff(*k))
    }
}

impl<F: Scalar> fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| format!("({v})*[{}]", k.0))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A finite sum of pure tensors of fixed arity.
#[derive(Clone)]
pub struct Tensor<F> {
    arity: usize,
    terms: BTreeMap<Vec<BasisId>, F>,
}

impl<F: Scalar> Tensor<F> {
    pub fn zero(arity: usize) -> Self {
        Tensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(ids: Vec<BasisId>) -> Self {
        let mut t = Self::zero(ids.len());
        t.add_term(ids, F::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, ids: Vec<BasisId>, c: F) {
        debug_assert_eq!(ids.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&ids) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&ids);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(ids, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        if c.is_zero() {
            return;
        }
        for (ids, v) in &other.terms {
            self.add_term(ids.clone(), v.clone() * c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &F::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.arity);
        out.add_scaled(self, c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[BasisId], &F)> + '_ {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, ids: &[BasisId]) -> F {
        self.terms.get(ids).cloned().unwrap_or_else(F::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// `x₁ ⊗ x₂ ⊗ … ⊗ x_k`.
    pub fn pure(factors: &[&Element<F>]) -> Self {
        let mut out = Self::zero(factors.len());
        let mut acc: Vec<(Vec<BasisId>, F)> = vec![(Vec::new(), F::one())];
        for x in factors {
            let mut next = Vec::new();
            for (ids, c) in &acc {
                for (id, v) in x.terms() {
                    let mut ids = ids.clone();
                    ids.push(id);
                    next.push((ids, c.clone() * v.clone()));
                }
            }
            acc = next;
        }
        for (ids, c) in acc {
            out.add_term(ids, c);
        }
        out
    }

    pub fn pure2(a: &Element<F>, b: &Element<F>) -> Self {
        Self::pure(&[a, b])
    }

    /// Tensor product of two tensors, legs of `self` first.
    pub fn outer(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.arity + other.arity);
        for (x, c) in &self.terms {
            for (y, d) in &other.terms {
                let mut ids = x.clone();
                ids.extend_from_slice(y);
                out.add_term(ids, c.clone() * d.clone());
            }
        }
        out
    }

    /// Applies a linear map on one leg (0-based).
    pub fn map_leg(&self, leg: usize, f: impl Fn(BasisId) -> Element<F>) -> Self {
        let mut out = Self::zero(self.arity);
        for (ids, c) in &self.terms {
            for (id, v) in f(ids[leg]).terms() {
                let mut new_ids = ids.clone();
                new_ids[leg] = id;
                out.add_term(new_ids, c.clone() * v.clone());
            }
        }
        out
    }

    /// Replaces one leg (0-based) by a tensor of any arity, spliced in place.
    pub fn expand_leg(
        &self,
        leg: usize,
        new_arity: usize,
        f: impl Fn(BasisId) -> Tensor<F>,
    ) -> Self {
        let mut out = Self::zero(self.arity - 1 + new_arity);
        for (ids, c) in &self.terms {
            let image = f(ids[leg]);
            for (sub, v) in image.terms() {
                let mut new_ids = ids[..leg].to_vec();
                new_ids.extend_from_slice(sub);
                new_ids.extend_from_slice(&ids[leg + 1..]);
                out.add_term(new_ids, c.clone() * v.clone());
            }
        }
        out
    }

    /// Evaluates a functional on one leg (0-based), lowering the arity.
    pub fn contract_leg(&self, leg: usize, f: impl Fn(BasisId) -> F) -> Self {
        let mut out = Self::zero(self.arity - 1);
        for (ids, c) in &self.terms {
            let v = f(ids[leg]);
            if v.is_zero() {
                continue;
            }
            let mut new_ids = ids.clone();
            new_ids.remove(leg);
            out.add_term(new_ids, c.clone() * v);
        }
        out
    }

    /// Reorders legs: leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arity);
        let mut out = Self::zero(self.arity);
        for (ids, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| ids[p]).collect(), c.clone());
        }
        out
    }

    pub fn flip(&self) -> Self {
        assert_eq!(self.arity, 2, "flip needs a two-leg tensor");
        self.permute(&[1, 0])
    }

    /// The single leg of an arity-one tensor.
    pub fn to_element(&self) -> Element<F> {
        assert_eq!(self.arity, 1, "only one-leg tensors are elements");
        Element::from_terms(self.terms.iter().map(|(k, v)| (k[0], v.clone())))
    }

    pub fn from_element(e: &Element<F>) -> Self {
        let mut out = Self::zero(1);
        for (id, c) in e.terms() {
            out.add_term(vec![id], c.clone());
        }
        out
    }

    /// Applies the bilinear map `m` to every pure tensor of a two-leg tensor.
    pub fn fold2(&self, m: impl Fn(BasisId, BasisId) -> Element<F>) -> Element<F> {
        assert_eq!(self.arity, 2);
        let mut out = Element::zero();
        for (ids, c) in &self.terms {
            out.add_scaled(&m(ids[0], ids[1]), c);
        }
        out
    }

    /// `Σ c · f(ids)` over all terms.
    pub fn fold_terms(&self, f: impl Fn(&[BasisId]) -> Tensor<F>, out_arity: usize) -> Tensor<F> {
        let mut out = Tensor::zero(out_arity);
        for (ids, c) in &self.terms {
            out.add_scaled(&f(ids), c);
        }
        out
    }
}

impl<F: Scalar> PartialEq for Tensor<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.arity != other.arity {
            return false;
        }
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl<F: Scalar> fmt::Debug for Tensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| {
                let ids: Vec<String> = k.iter().map(|i| i.0.to_string()).collect();
                format!("({v})*[{}]", ids.join("⊗"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
