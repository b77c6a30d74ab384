//! Associative algebras over a scalar field, possibly without unit, and their
//! tensor products and multipliers.

use std::fmt;
use std::sync::Arc;

use crate::element::{BasisId, Element, Tensor};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::Scalar;

/// Basis of an algebra: finitely many labelled vectors, or vectors indexed by ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    Finite(Vec<String>),
    /// Vectors `prefix_k` for every integer `k`.
    Integers {
        prefix: String,
    },
}

impl Basis {
    pub fn dim(&self) -> Option<usize> {
        match self {
            Basis::Finite(l) => Some(l.len()),
            Basis::Integers { .. } => None,
        }
    }

    pub fn contains(&self, id: BasisId) -> bool {
        match self {
            Basis::Finite(l) => id.0 >= 0 && (id.0 as usize) < l.len(),
            Basis::Integers { .. } => true,
        }
    }

    pub fn label(&self, id: BasisId) -> String {
        match self {
            Basis::Finite(l) => l
                .get(id.0 as usize)
                .cloned()
                .unwrap_or_else(|| format!("#{}", id.0)),
            Basis::Integers { prefix } => format!("{prefix}_{}", id.0),
        }
    }

    pub fn resolve(&self, label: &str) -> Option<BasisId> {
        match self {
            Basis::Finite(l) => l.iter().position(|x| x == label).map(|i| BasisId(i as i64)),
            Basis::Integers { prefix } => label
                .strip_prefix(prefix.as_str())
                .and_then(|r| r.strip_prefix('_'))
                .and_then(|k| k.parse().ok())
                .map(BasisId),
        }
    }

    /// All basis vectors of a finite basis.
    pub fn ids(&self) -> Option<Vec<BasisId>> {
        self.dim().map(|n| (0..n as i64).map(BasisId).collect())
    }
}

pub type ProductRule<F> = Arc<dyn Fn(BasisId, BasisId) -> Element<F> + Send + Sync>;
pub type LocalUnitRule<F> = Arc<dyn Fn(&[Element<F>]) -> Option<Element<F>> + Send + Sync>;

#[derive(Clone)]
pub struct Algebra<F> {
    name: String,
    basis: Basis,
    product: ProductRule<F>,
    unit: Option<Element<F>>,
    local_unit_rule: Option<LocalUnitRule<F>>,
}

impl<F: Scalar> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name)
            .field("basis", &self.basis)
            .field("unital", &self.unit.is_some())
            .finish()
    }
}

impl<F: Scalar> Algebra<F> {
    pub fn new(
        name: impl Into<String>,
        basis: Basis,
        product: ProductRule<F>,
        unit: Option<Element<F>>,
    ) -> Self {
        Algebra {
            name: name.into(),
            basis,
            product,
            unit,
            local_unit_rule: None,
        }
    }

    /// A finite-dimensional algebra from its structure constants `e_i e_j = table[i][j]`.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<Element<F>>>,
        unit: Option<Element<F>>,
    ) -> Self {
        let n = labels.len();
        assert_eq!(table.len(), n, "product table has wrong size");
        let flat: Arc<Vec<Element<F>>> = Arc::new(table.into_iter().flatten().collect());
        assert_eq!(flat.len(), n * n, "product table has wrong size");
        let product: ProductRule<F> = Arc::new(move |i, j| flat[i.index() * n + j.index()].clone());
        Self::new(name, Basis::Finite(labels), product, unit)
    }

    /// Full matrix algebra `End(kⁿ)` with matrix units `E_ij` at index `i·n + j`.
    pub fn matrix_algebra(n: usize) -> Self {
        let labels = (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("E{i}_{j}")))
            .collect();
        let product: ProductRule<F> = Arc::new(move |a, b| {
            let (i, j) = (a.index() / n, a.index() % n);
            let (k, l) = (b.index() / n, b.index() % n);
            if j == k {
                Element::basis(BasisId((i * n + l) as i64))
            } else {
                Element::zero()
            }
        });
        let unit = Element::from_terms((0..n).map(|i| (BasisId((i * n + i) as i64), F::one())));
        Self::new(
            format!("End({n})"),
            Basis::Finite(labels),
            product,
            Some(unit),
        )
    }

    pub fn with_local_unit_rule(mut self, rule: LocalUnitRule<F>) -> Self {
        self.local_unit_rule = Some(rule);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn dim(&self) -> Option<usize> {
        self.basis.dim()
    }

    pub fn unit(&self) -> Option<&Element<F>> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn require_unit(&self) -> Result<&Element<F>> {
        self.unit
            .as_ref()
            .ok_or_else(|| Error::NotUnital(self.name.clone()))
    }

    pub fn require_dim(&self) -> Result<usize> {
        self.dim().ok_or(Error::InfiniteDimensional)
    }

    pub fn ids(&self) -> Option<Vec<BasisId>> {
        self.basis.ids()
    }

    pub fn basis_product(&self, a: BasisId, b: BasisId) -> Element<F> {
        (self.product)(a, b)
    }

    /// Product without membership checks.
    pub fn mul(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        let mut out = Element::zero();
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                out.add_scaled(&(self.product)(i, j), &(x.clone() * y.clone()));
            }
        }
        out
    }

    pub fn validate(&self, a: &Element<F>) -> Result<()> {
        match a.support().find(|id| !self.basis.contains(*id)) {
            Some(id) => Err(Error::AlgebraMismatch {
                algebra: self.name.clone(),
                id: id.0,
            }),
            None => Ok(()),
        }
    }

    pub fn multiply(&self, a: &Element<F>, b: &Element<F>) -> Result<Element<F>> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.mul(a, b))
    }

    pub fn label(&self, id: BasisId) -> String {
        self.basis.label(id)
    }

    /// Human-readable form using basis labels.
    pub fn show(&self, a: &Element<F>) -> String {
        show_terms(a.terms().map(|(id, c)| (self.label(id), c.clone())))
    }

    /// An element `e` with `e·a = a·e = a` for every `a` in `set`.
    ///
    /// Finite-dimensional algebras solve the linear system; infinite ones use
    /// the rule supplied by the builder.
    pub fn local_unit(&self, set: &[Element<F>]) -> Result<Element<F>> {
        if let Some(rule) = &self.local_unit_rule {
            return rule(set).ok_or_else(|| Error::NoLocalUnit(format!("in `{}`", self.name)));
        }
        let n = self.require_dim()?;
        // Unknown e = Σ x_k e_k; equations e·a − a = 0 and a·e − a = 0.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for a in set {
            for left in [true, false] {
                let images: Vec<Element<F>> = (0..n)
                    .map(|k| {
                        let ek = Element::basis(BasisId(k as i64));
                        if left {
                            self.mul(&ek, a)
                        } else {
                            self.mul(a, &ek)
                        }
                    })
                    .collect();
                for r in 0..n {
                    let id = BasisId(r as i64);
                    rows.push(images.iter().map(|im| im.coeff(id)).collect::<Vec<F>>());
                    rhs.push(a.coeff(id));
                }
            }
        }
        if rows.is_empty() {
            return Ok(self.unit.clone().unwrap_or_else(Element::zero));
        }
        let m = Matrix::from_rows(rows);
        m.solve(&rhs)
            .map(|x| Element::from_coords(&x))
            .ok_or_else(|| Error::NoLocalUnit(format!("in `{}`", self.name)))
    }

    /// Left multiplication by `a` as a matrix on the finite basis.
    pub fn left_mult_matrix(&self, a: &Element<F>) -> Result<Matrix<F>> {
        let n = self.require_dim()?;
        let cols: Vec<Element<F>> = (0..n)
            .map(|j| self.mul(a, &Element::basis(BasisId(j as i64))))
            .collect();
        Ok(Matrix::from_columns(n, &cols))
    }

    pub fn inverse(&self, a: &Element<F>) -> Result<Element<F>> {
        let one = self.require_unit()?;
        let n = self.require_dim()?;
        let m = self.left_mult_matrix(a)?;
        let x = m
            .solve(&one.to_coords(n))
            .ok_or_else(|| Error::Singular(format!("{} is not invertible", self.show(a))))?;
        let inv = Element::from_coords(&x);
        if &self.mul(&inv, a) != one {
            return Err(Error::Singular(format!(
                "{} has no two-sided inverse",
                self.show(a)
            )));
        }
        Ok(inv)
    }

    /// Basis vectors used for exhaustive checks: all of them, or the window `-k..=k`.
    pub fn check_ids(&self, window: i64) -> Vec<BasisId> {
        self.ids()
            .unwrap_or_else(|| (-window..=window).map(BasisId).collect())
    }

    pub fn check_associativity(&self, window: i64, report: &mut Report) -> bool {
        let ids = self.check_ids(window);
        let mut triples = Vec::new();
        for &a in &ids {
            for &b in &ids {
                for &c in &ids {
                    triples.push((a, b, c));
                }
            }
        }
        report.check("associativity", triples, |&(a, b, c)| {
            let ab = self.basis_product(a, b);
            let bc = self.basis_product(b, c);
            let l = self.mul(&ab, &Element::basis(c));
            let r = self.mul(&Element::basis(a), &bc);
            (l != r).then(|| format!("({})({})({})", self.label(a), self.label(b), self.label(c)))
        })
    }

    pub fn check_unit(&self, window: i64, report: &mut Report) -> bool {
        let Some(one) = &self.unit else {
            return true;
        };
        report.check("unit", self.check_ids(window), |&a| {
            let e = Element::basis(a);
            (self.mul(one, &e) != e || self.mul(&e, one) != e).then(|| self.label(a))
        })
    }

    /// Nondegeneracy of the product: no nonzero `a` with `a·x = 0` for all `x`
    /// (and likewise on the right). Reports a kernel vector on failure.
    pub fn check_nondegenerate(&self, window: i64, report: &mut Report) -> bool {
        match self.dim() {
            Some(n) => {
                let mut ok = true;
                for left in [true, false] {
                    // Rows indexed by (x, output coordinate), columns by a.
                    let mut rows = Vec::new();
                    for x in 0..n {
                        let ex = Element::basis(BasisId(x as i64));
                        let images: Vec<Element<F>> = (0..n)
                            .map(|k| {
                                let ek = Element::basis(BasisId(k as i64));
                                if left {
                                    self.mul(&ek, &ex)
                                } else {
                                    self.mul(&ex, &ek)
                                }
                            })
                            .collect();
                        for r in 0..n {
                            rows.push(
                                images
                                    .iter()
                                    .map(|im| im.coeff(BasisId(r as i64)))
                                    .collect(),
                            );
                        }
                    }
                    let ns = Matrix::<F>::from_rows(rows).nullspace();
                    let name = if left {
                        "nondegenerate (left)"
                    } else {
                        "nondegenerate (right)"
                    };
                    let witness = ns.first().map(|v| self.show(&Element::from_coords(v)));
                    ok &= report.record(name, witness);
                }
                ok
            }
            None => {
                let ids = self.check_ids(window);
                report.check("nondegenerate (window)", ids.clone(), |&a| {
                    let ea = Element::basis(a);
                    let kills = ids.iter().all(|&x| {
                        let ex = Element::basis(x);
                        self.mul(&ea, &ex).is_zero() && self.mul(&ex, &ea).is_zero()
                    });
                    kills.then(|| self.label(a))
                })
            }
        }
    }
}

pub(crate) fn show_terms(terms: impl Iterator<Item = (String, impl fmt::Display)>) -> String {
    let parts: Vec<String> = terms.map(|(l, c)| format!("({c})*{l}")).collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Labels a tensor using the basis of each leg.
pub fn show_tensor<F: Scalar>(legs: &[&Algebra<F>], t: &Tensor<F>) -> String {
    show_terms(t.terms().map(|(ids, c)| {
        let labels: Vec<String> = ids
            .iter()
            .zip(legs)
            .map(|(id, alg)| alg.label(*id))
            .collect();
        (labels.join("⊗"), c.clone())
    }))
}

/// Product in `A₁ ⊗ … ⊗ A_k`, computed leg by leg.
pub fn tensor_mul<F: Scalar>(legs: &[&Algebra<F>], x: &Tensor<F>, y: &Tensor<F>) -> Tensor<F> {
    assert_eq!(x.arity(), legs.len(), "tensor arity mismatch");
    assert_eq!(y.arity(), legs.len(), "tensor arity mismatch");
    let mut out = Tensor::zero(legs.len());
    for (xi, c) in x.terms() {
        for (yi, d) in y.terms() {
            let factors: Vec<Element<F>> = legs
                .iter()
                .enumerate()
                .map(|(k, alg)| alg.basis_product(xi[k], yi[k]))
                .collect();
            if factors.iter().any(|f| f.is_zero()) {
                continue;
            }
            let refs: Vec<&Element<F>> = factors.iter().collect();
            out.add_scaled(&Tensor::pure(&refs), &(c.clone() * d.clone()));
        }
    }
    out
}

/// Places a tensor on the given 1-based legs of a `k`-fold tensor product,
/// filling the remaining legs with units.
pub fn leg_embed<F: Scalar>(
    t: &Tensor<F>,
    legs: &[usize],
    k: usize,
    algebras: &[&Algebra<F>],
) -> Result<Tensor<F>> {
    assert_eq!(legs.len(), t.arity(), "one target leg per tensor leg");
    assert_eq!(algebras.len(), k, "one algebra per leg");
    let mut fill = Vec::new();
    for leg in 1..=k {
        if !legs.contains(&leg) {
            let unit = algebras[leg - 1]
                .unit()
                .ok_or(Error::NonUnitalLeg { leg })?;
            fill.push((leg, unit.clone()));
        }
    }
    let mut out = Tensor::zero(k);
    for (ids, c) in t.terms() {
        // Expand the unit legs, which may themselves be sums.
        let mut partial: Vec<(Vec<Option<BasisId>>, F)> = vec![(vec![None; k], c.clone())];
        for (pos, &leg) in legs.iter().enumerate() {
            for p in partial.iter_mut() {
                p.0[leg - 1] = Some(ids[pos]);
            }
        }
        for (leg, unit) in &fill {
            let mut next = Vec::new();
            for (slots, c) in &partial {
                for (id, u) in unit.terms() {
                    let mut s = slots.clone();
                    s[leg - 1] = Some(id);
                    next.push((s, c.clone() * u.clone()));
                }
            }
            partial = next;
        }
        for (slots, c) in partial {
            out.add_term(slots.into_iter().map(|s| s.unwrap()).collect(), c);
        }
    }
    Ok(out)
}

pub type ActionFn<F> = Arc<dyn Fn(&Element<F>) -> Element<F> + Send + Sync>;

/// A multiplier of an algebra, given by compatible left and right actions,
/// together with its element form when it lies in the algebra.
#[derive(Clone)]
pub struct Multiplier<F> {
    left: ActionFn<F>,
    right: ActionFn<F>,
    element: Option<Element<F>>,
}

impl<F: Scalar> Multiplier<F> {
    /// The multiplier `x ↦ m·x`, `x ↦ x·m` of an element.
    pub fn from_element(alg: &Algebra<F>, m: Element<F>) -> Self {
        let (a1, a2) = (alg.clone(), alg.clone());
        let (m1, m2) = (m.clone(), m.clone());
        Multiplier {
            left: Arc::new(move |x| a1.mul(&m1, x)),
            right: Arc::new(move |x| a2.mul(x, &m2)),
            element: Some(m),
        }
    }

    /// The unit of the multiplier algebra.
    pub fn identity() -> Self {
        Multiplier {
            left: Arc::new(|x| x.clone()),
            right: Arc::new(|x| x.clone()),
            element: None,
        }
    }

    /// Builds a multiplier from a pair of actions, checking
    /// `(a·m)·b = a·(m·b)` for all `a, b` in `spanning`.
    pub fn from_actions(
        alg: &Algebra<F>,
        left: ActionFn<F>,
        right: ActionFn<F>,
        spanning: &[Element<F>],
    ) -> Result<Self> {
        for a in spanning {
            for b in spanning {
                let l = alg.mul(&right(a), b);
                let r = alg.mul(a, &left(b));
                if l != r {
                    return Err(Error::MultiplierCompatibility(format!(
                        "at ({}, {})",
                        alg.show(a),
                        alg.show(b)
                    )));
                }
            }
        }
        Ok(Multiplier {
            left,
            right,
            element: None,
        })
    }

    pub fn with_element(mut self, e: Element<F>) -> Self {
        self.element = Some(e);
        self
    }

    /// `m·x`.
    pub fn left(&self, x: &Element<F>) -> Element<F> {
        (self.left)(x)
    }

    /// `x·m`.
    pub fn right(&self, x: &Element<F>) -> Element<F> {
        (self.right)(x)
    }

    pub fn element(&self) -> Option<&Element<F>> {
        self.element.as_ref()
    }

    pub fn to_element(&self, what: &str) -> Result<&Element<F>> {
        self.element
            .as_ref()
            .ok_or_else(|| Error::NotAnElement(what.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyclotomic as Q;

    fn id(i: i64) -> BasisId {
        BasisId(i)
    }

    /// ℂ[ℤ₂] with basis e, g.
    fn z2() -> Algebra<Q> {
        let e = |i| Element::basis(id(i));
        Algebra::from_table(
            "C[Z2]",
            vec!["e".into(), "g".into()],
            vec![vec![e(0), e(1)], vec![e(1), e(0)]],
            Some(e(0)),
        )
    }

    /// ℂ², pointwise, basis d0, d1.
    fn functions_z2() -> Algebra<Q> {
        let e = |i| Element::basis(id(i));
        Algebra::from_table(
            "F(Z2)",
            vec!["d0".into(), "d1".into()],
            vec![vec![e(0), Element::zero()], vec![Element::zero(), e(1)]],
            Some(Element::from_terms([(id(0), Q::one()), (id(1), Q::one())])),
        )
    }

    #[test]
    fn group_algebra_multiplication() {
        let a = z2();
        let g = Element::basis(id(1));
        assert_eq!(a.multiply(&g, &g).unwrap(), Element::basis(id(0)));
        let bad = Element::basis(id(7));
        assert!(matches!(
            a.multiply(&g, &bad),
            Err(Error::AlgebraMismatch { id: 7, .. })
        ));
    }

    #[test]
    fn local_unit_solves() {
        let a = z2();
        let u = a.local_unit(&[Element::basis(id(1))]).unwrap();
        assert_eq!(u, Element::basis(id(0)));
        let f = functions_z2();
        let s = Element::from_terms([(id(0), Q::one()), (id(1), Q::one())]);
        let u = f.local_unit(&[s]).unwrap();
        assert_eq!(&u, f.unit().unwrap());
    }

    #[test]
    fn degenerate_product_is_reported() {
        let z = Element::<Q>::zero();
        let zero_alg = Algebra::from_table("null", vec!["n".into()], vec![vec![z]], None);
        let mut r = Report::new("t");
        assert!(!zero_alg.check_nondegenerate(0, &mut r));
        let mut r = Report::new("t");
        assert!(z2().check_nondegenerate(0, &mut r));
    }

    #[test]
    fn leg_embedding_inserts_units() {
        let a = z2();
        let t = Tensor::basis(vec![id(0), id(1)]);
        let out = leg_embed(&t, &[1, 3], 3, &[&a, &a, &a]).unwrap();
        assert_eq!(out, Tensor::basis(vec![id(0), id(0), id(1)]));
        let f = functions_z2();
        let out = leg_embed(&t, &[2, 3], 3, &[&f, &a, &a]).unwrap();
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn matrix_units_multiply() {
        let m = Algebra::<Q>::matrix_algebra(2);
        let e01 = Element::basis(id(1));
        let e10 = Element::basis(id(2));
        assert_eq!(m.mul(&e01, &e10), Element::basis(id(0)));
        assert!(m.mul(&e01, &e01).is_zero());
    }

    #[test]
    fn multiplier_compatibility_is_checked() {
        let a = z2();
        let span = vec![Element::basis(id(0)), Element::basis(id(1))];
        let g = Element::basis(id(1));
        let (a1, a2) = (a.clone(), a.clone());
        let (g1, g2) = (g.clone(), g.clone());
        let ok = Multiplier::from_actions(
            &a,
            Arc::new(move |x| a1.mul(&g1, x)),
            Arc::new(move |x| a2.mul(x, &g2)),
            &span,
        );
        assert!(ok.is_ok());
        let bad = Multiplier::from_actions(
            &a,
            Arc::new(|x: &Element<Q>| x.clone()),
            Arc::new({
                let a = a.clone();
                move |x| a.mul(x, &g)
            }),
            &span,
        );
        assert!(matches!(bad, Err(Error::MultiplierCompatibility(_))));
    }
}
