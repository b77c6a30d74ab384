//! Multiplier Hopf algebras presented through slices of the coproduct.
//!
//! The coproduct of a non-unital algebra is only a multiplier of `A ⊗ A`, so
//! it is never stored as an element. What is stored are the covered products
//! `Δ(a)(1⊗b)`, `(b⊗1)Δ(a)`, `Δ(a)(b⊗1)` and `(1⊗b)Δ(a)`, which always lie
//! in `A ⊗ A`. For unital finite-dimensional algebras `Δ(a)` itself is
//! recovered as `Δ(a)(1⊗1)`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{leg_embed, tensor_mul, Algebra};
use crate::element::{BasisId, Element, Tensor};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::Scalar;

pub type SliceRule<F> = Arc<dyn Fn(BasisId, BasisId) -> Tensor<F> + Send + Sync>;
pub type CounitRule<F> = Arc<dyn Fn(BasisId) -> F + Send + Sync>;
pub type MapRule<F> = Arc<dyn Fn(BasisId) -> Element<F> + Send + Sync>;

/// Default half-width of the basis window used to check infinite-dimensional examples.
pub const DEFAULT_WINDOW: i64 = 5;

#[derive(Clone)]
pub struct Slices<F> {
    /// `(a, b) ↦ Δ(a)(1⊗b)`
    pub right: SliceRule<F>,
    /// `(b, a) ↦ (b⊗1)Δ(a)`
    pub left: SliceRule<F>,
    /// `(a, b) ↦ Δ(a)(b⊗1)`
    pub right_first: SliceRule<F>,
    /// `(b, a) ↦ (1⊗b)Δ(a)`
    pub left_second: SliceRule<F>,
}

#[derive(Clone)]
pub struct HopfAlgebra<F> {
    algebra: Algebra<F>,
    slices: Slices<F>,
    counit: CounitRule<F>,
    antipode: MapRule<F>,
    antipode_inv: MapRule<F>,
    window: i64,
}

impl<F: Scalar> fmt::Debug for HopfAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfAlgebra")
            .field("algebra", &self.algebra)
            .field("window", &self.window)
            .finish()
    }
}

/// `Σ (left, right)` pairs of a two-leg tensor, grouped by the left basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct SweedlerDecomp<F: Scalar> {
    pub terms: Vec<(Element<F>, Element<F>)>,
}

impl<F: Scalar> SweedlerDecomp<F> {
    pub fn of(t: &Tensor<F>) -> Self {
        assert_eq!(t.arity(), 2);
        let mut terms: Vec<(Element<F>, Element<F>)> = Vec::new();
        for (ids, c) in t.terms() {
            match terms.last_mut() {
                Some((l, r)) if l.support().next() == Some(ids[0]) => {
                    r.add_term(ids[1], c.clone());
                }
                _ => terms.push((Element::basis(ids[0]), Element::term(ids[1], c.clone()))),
            }
        }
        SweedlerDecomp { terms }
    }

    pub fn to_tensor(&self) -> Tensor<F> {
        let mut t = Tensor::zero(2);
        for (l, r) in &self.terms {
            t.add_scaled(&Tensor::pure2(l, r), &F::one());
        }
        t
    }
}

/// Right-multiplies leg `leg` (0-based) of `t` by `x`.
pub fn mul_leg_right<F: Scalar>(
    alg: &Algebra<F>,
    t: &Tensor<F>,
    leg: usize,
    x: &Element<F>,
) -> Tensor<F> {
    t.map_leg(leg, |id| alg.mul(&Element::basis(id), x))
}

/// Left-multiplies leg `leg` (0-based) of `t` by `x`.
pub fn mul_leg_left<F: Scalar>(
    alg: &Algebra<F>,
    t: &Tensor<F>,
    leg: usize,
    x: &Element<F>,
) -> Tensor<F> {
    t.map_leg(leg, |id| alg.mul(x, &Element::basis(id)))
}

/// Matrix of a linear map on a finite basis.
pub fn map_matrix<F: Scalar>(n: usize, f: impl Fn(BasisId) -> Element<F>) -> Matrix<F> {
    let cols: Vec<Element<F>> = (0..n).map(|j| f(BasisId(j as i64))).collect();
    Matrix::from_columns(n, &cols)
}

fn bilinear<F: Scalar>(x: &Element<F>, y: &Element<F>, rule: &SliceRule<F>) -> Tensor<F> {
    let mut out = Tensor::zero(2);
    for (i, c) in x.terms() {
        for (j, d) in y.terms() {
            out.add_scaled(&rule(i, j), &(c.clone() * d.clone()));
        }
    }
    out
}

impl<F: Scalar> HopfAlgebra<F> {
    pub fn from_slices(
        algebra: Algebra<F>,
        slices: Slices<F>,
        counit: CounitRule<F>,
        antipode: MapRule<F>,
        antipode_inv: MapRule<F>,
    ) -> Self {
        HopfAlgebra {
            algebra,
            slices,
            counit,
            antipode,
            antipode_inv,
            window: DEFAULT_WINDOW,
        }
    }

    /// A unital finite-dimensional Hopf algebra from tables indexed by basis position.
    /// When `antipode_inv` is absent it is computed by inverting the antipode.
    pub fn from_tables(
        algebra: Algebra<F>,
        coproduct: Vec<Tensor<F>>,
        counit: Vec<F>,
        antipode: Vec<Element<F>>,
        antipode_inv: Option<Vec<Element<F>>>,
    ) -> Result<Self> {
        let n = algebra.require_dim()?;
        let one = algebra.require_unit()?.clone();
        if coproduct.len() != n || counit.len() != n || antipode.len() != n {
            return Err(Error::InvalidParameter(format!(
                "structure tables must have {n} entries"
            )));
        }
        let antipode_inv = match antipode_inv {
            Some(t) => t,
            None => {
                let inv = map_matrix(n, |id| antipode[id.index()].clone())
                    .inverse()
                    .ok_or_else(|| Error::Singular("antipode".into()))?;
                (0..n).map(|j| inv.apply_basis(BasisId(j as i64))).collect()
            }
        };
        let delta = Arc::new(coproduct);
        let alg2 = algebra.clone();
        let legs = move |d: &Tensor<F>, x: &Tensor<F>, on_left: bool| {
            let a = [&alg2, &alg2];
            if on_left {
                tensor_mul(&a, x, d)
            } else {
                tensor_mul(&a, d, x)
            }
        };
        let legs = Arc::new(legs);
        let mk = |first_leg: bool, on_left: bool| -> SliceRule<F> {
            let delta = delta.clone();
            let legs = legs.clone();
            let one = one.clone();
            Arc::new(move |p, q| {
                // The covered argument is `q` for right slices and `p` for left ones.
                let (a, cover) = if on_left { (q, p) } else { (p, q) };
                let c = Element::basis(cover);
                let x = if first_leg {
                    Tensor::pure2(&c, &one)
                } else {
                    Tensor::pure2(&one, &c)
                };
                legs(&delta[a.index()], &x, on_left)
            })
        };
        let slices = Slices {
            right: mk(false, false),
            left: mk(true, true),
            right_first: mk(true, false),
            left_second: mk(false, true),
        };
        let counit = Arc::new(counit);
        let antipode = Arc::new(antipode);
        let antipode_inv = Arc::new(antipode_inv);
        Ok(Self::from_slices(
            algebra,
            slices,
            Arc::new(move |i| counit[i.index()].clone()),
            Arc::new(move |i| antipode[i.index()].clone()),
            Arc::new(move |i| antipode_inv[i.index()].clone()),
        ))
    }

    /// Replaces antipode and inverse antipode, e.g. to build negative controls.
    pub fn with_antipode(mut self, antipode: MapRule<F>, antipode_inv: MapRule<F>) -> Self {
        self.antipode = antipode;
        self.antipode_inv = antipode_inv;
        self
    }

    pub fn with_window(mut self, window: i64) -> Self {
        self.window = window;
        self
    }

    pub fn with_name(mut self, name: &str) -> Self {
        let alg = &self.algebra;
        let mut renamed = Algebra::new(
            name,
            alg.basis().clone(),
            Arc::new({
                let a = alg.clone();
                move |i, j| a.basis_product(i, j)
            }),
            alg.unit().cloned(),
        );
        if alg.dim().is_none() {
            let a = alg.clone();
            renamed = renamed.with_local_unit_rule(Arc::new(move |s| a.local_unit(s).ok()));
        }
        self.algebra = renamed;
        self
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn name(&self) -> &str {
        self.algebra.name()
    }

    pub fn dim(&self) -> Option<usize> {
        self.algebra.dim()
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn check_ids(&self) -> Vec<BasisId> {
        self.algebra.check_ids(self.window)
    }

    pub fn mul(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        self.algebra.mul(a, b)
    }

    pub fn show(&self, a: &Element<F>) -> String {
        self.algebra.show(a)
    }

    pub fn show_tensor(&self, t: &Tensor<F>) -> String {
        let legs = vec![&self.algebra; t.arity()];
        crate::algebra::show_tensor(&legs, t)
    }

    pub fn label(&self, id: BasisId) -> String {
        self.algebra.label(id)
    }

    /// `Δ(a)(1⊗b)`.
    pub fn delta_right(&self, a: &Element<F>, b: &Element<F>) -> Tensor<F> {
        bilinear(a, b, &self.slices.right)
    }

    /// `(b⊗1)Δ(a)`.
    pub fn delta_left(&self, b: &Element<F>, a: &Element<F>) -> Tensor<F> {
        bilinear(b, a, &self.slices.left)
    }

    /// `Δ(a)(b⊗1)`.
    pub fn delta_right_first(&self, a: &Element<F>, b: &Element<F>) -> Tensor<F> {
        bilinear(a, b, &self.slices.right_first)
    }

    /// `(1⊗b)Δ(a)`.
    pub fn delta_left_second(&self, b: &Element<F>, a: &Element<F>) -> Tensor<F> {
        bilinear(b, a, &self.slices.left_second)
    }

    /// `Δ(a)` as an element of `A ⊗ A`; needs a unit.
    pub fn coproduct(&self, a: &Element<F>) -> Result<Tensor<F>> {
        let one = self.algebra.require_unit()?;
        Ok(self.delta_right(a, one))
    }

    pub fn counit(&self, a: &Element<F>) -> F {
        a.eval_linear(|id| (self.counit)(id))
    }

    pub fn antipode(&self, a: &Element<F>) -> Element<F> {
        a.map_linear(|id| (self.antipode)(id))
    }

    pub fn antipode_inv(&self, a: &Element<F>) -> Element<F> {
        a.map_linear(|id| (self.antipode_inv)(id))
    }

    pub fn antipode_basis(&self, id: BasisId) -> Element<F> {
        (self.antipode)(id)
    }

    pub fn antipode_inv_basis(&self, id: BasisId) -> Element<F> {
        (self.antipode_inv)(id)
    }

    pub fn counit_basis(&self, id: BasisId) -> F {
        (self.counit)(id)
    }

    /// `S^k` for any integer `k`.
    pub fn antipode_power(&self, a: &Element<F>, k: i32) -> Element<F> {
        let mut x = a.clone();
        for _ in 0..k.unsigned_abs() {
            x = if k > 0 {
                self.antipode(&x)
            } else {
                self.antipode_inv(&x)
            };
        }
        x
    }

    /// `(b⊗1⊗1) Δ⁽²⁾(a) (1⊗1⊗c)` computed through both association orders.
    pub fn delta2_slices(
        &self,
        a: &Element<F>,
        b: &Element<F>,
        c: &Element<F>,
    ) -> Result<Tensor<F>> {
        let (r1, r2) = self.delta2_routes(a, b, c);
        if r1 != r2 {
            return Err(Error::Coassociativity(format!(
                "({}, {}, {})",
                self.show(a),
                self.show(b),
                self.show(c)
            )));
        }
        Ok(r1)
    }

    fn delta2_routes(
        &self,
        a: &Element<F>,
        b: &Element<F>,
        c: &Element<F>,
    ) -> (Tensor<F>, Tensor<F>) {
        // (Δ⊗ι) applied to Δ(a)(1⊗c), covered on the left by b.
        let mut r1 = Tensor::zero(3);
        for (ids, v) in self.delta_right(a, c).terms() {
            let head = self.delta_left(b, &Element::basis(ids[0]));
            let tail = Tensor::basis(vec![ids[1]]);
            r1.add_scaled(&head.outer(&tail), v);
        }
        // (ι⊗Δ) applied to (b⊗1)Δ(a), covered on the right by c.
        let mut r2 = Tensor::zero(3);
        for (ids, v) in self.delta_left(b, a).terms() {
            let head = Tensor::basis(vec![ids[0]]);
            let tail = self.delta_right(&Element::basis(ids[1]), c);
            r2.add_scaled(&head.outer(&tail), v);
        }
        (r1, r2)
    }

    fn pairs(&self) -> Vec<(BasisId, BasisId)> {
        let ids = self.check_ids();
        ids.iter()
            .flat_map(|&a| ids.iter().map(move |&b| (a, b)))
            .collect()
    }

    fn triples(&self) -> Vec<(BasisId, BasisId, BasisId)> {
        let ids = self.check_ids();
        let mut out = Vec::new();
        for &a in &ids {
            for &b in &ids {
                for &c in &ids {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    fn w2(&self, a: BasisId, b: BasisId) -> String {
        format!("({}, {})", self.label(a), self.label(b))
    }

    fn w3(&self, a: BasisId, b: BasisId, c: BasisId) -> String {
        format!("({}, {}, {})", self.label(a), self.label(b), self.label(c))
    }

    /// All multiplier Hopf algebra axioms on the basis (or on the window for
    /// infinite bases).
    pub fn check_axioms(&self) -> Report {
        let mut r = Report::new("axioms");
        let alg = &self.algebra;
        let e = Element::<F>::basis;
        alg.check_associativity(self.window, &mut r);
        alg.check_unit(self.window, &mut r);
        alg.check_nondegenerate(self.window, &mut r);

        r.check("slice compatibility", self.triples(), |&(a, b, c)| {
            let (a, b, c) = (e(a), e(b), e(c));
            // (c⊗1)Δ(a)(1⊗b) from two slices.
            let x = mul_leg_left(alg, &self.delta_right(&a, &b), 0, &c);
            let y = mul_leg_right(alg, &self.delta_left(&c, &a), 1, &b);
            // (1⊗c)Δ(a)(b⊗1) from the other two.
            let z = mul_leg_left(alg, &self.delta_right_first(&a, &b), 1, &c);
            let w = mul_leg_right(alg, &self.delta_left_second(&c, &a), 0, &b);
            // Δ(a)(b⊗c) and (b⊗c)Δ(a) two ways each.
            let u = mul_leg_right(alg, &self.delta_right(&a, &c), 0, &b);
            let v = mul_leg_right(alg, &self.delta_right_first(&a, &b), 1, &c);
            let s = mul_leg_left(alg, &self.delta_left(&b, &a), 1, &c);
            let t = mul_leg_left(alg, &self.delta_left_second(&c, &a), 0, &b);
            (x != y || z != w || u != v || s != t)
                .then(|| self.show(&a) + ", " + &self.show(&b) + ", " + &self.show(&c))
        });

        r.check("coproduct multiplicative", self.triples(), |&(a, b, c)| {
            let ab = alg.basis_product(a, b);
            let (ea, eb, ec) = (e(a), e(b), e(c));
            let lhs = self.delta_right(&ab, &ec);
            let mut rhs = Tensor::zero(2);
            for (ids, v) in self.delta_right(&eb, &ec).terms() {
                let t = mul_leg_right(alg, &self.delta_right(&ea, &e(ids[1])), 0, &e(ids[0]));
                rhs.add_scaled(&t, v);
            }
            let lhs2 = self.delta_left(&ec, &ab);
            let mut rhs2 = Tensor::zero(2);
            for (ids, v) in self.delta_left(&ec, &ea).terms() {
                let t = mul_leg_left(alg, &self.delta_left(&e(ids[0]), &eb), 1, &e(ids[1]));
                rhs2.add_scaled(&t, v);
            }
            (lhs != rhs || lhs2 != rhs2).then(|| self.w3(a, b, c))
        });

        r.check("coassociativity", self.triples(), |&(a, b, c)| {
            let (r1, r2) = self.delta2_routes(&e(a), &e(b), &e(c));
            (r1 != r2).then(|| self.w3(a, b, c))
        });

        r.check("counit (left)", self.pairs(), |&(a, b)| {
            let t = self.delta_right(&e(a), &e(b));
            let lhs = t.contract_leg(0, |i| self.counit_basis(i)).to_element();
            (lhs != alg.basis_product(a, b)).then(|| self.w2(a, b))
        });
        r.check("counit (right)", self.pairs(), |&(a, b)| {
            let t = self.delta_left(&e(b), &e(a));
            let lhs = t.contract_leg(1, |i| self.counit_basis(i)).to_element();
            (lhs != alg.basis_product(b, a)).then(|| self.w2(a, b))
        });
        r.check("counit multiplicative", self.pairs(), |&(a, b)| {
            let lhs = self.counit(&alg.basis_product(a, b));
            let rhs = self.counit_basis(a) * self.counit_basis(b);
            (lhs != rhs).then(|| self.w2(a, b))
        });

        r.check("antipode (left)", self.pairs(), |&(a, b)| {
            let t = self.delta_right(&e(a), &e(b));
            let lhs = t.fold2(|x, y| alg.mul(&self.antipode_basis(x), &e(y)));
            let rhs = e(b).scale(&self.counit_basis(a));
            (lhs != rhs).then(|| self.w2(a, b))
        });
        r.check("antipode (right)", self.pairs(), |&(a, b)| {
            let t = self.delta_left(&e(b), &e(a));
            let lhs = t.fold2(|x, y| alg.mul(&e(x), &self.antipode_basis(y)));
            let rhs = e(b).scale(&self.counit_basis(a));
            (lhs != rhs).then(|| self.w2(a, b))
        });
        r.check("antipode anti-multiplicative", self.pairs(), |&(a, b)| {
            let lhs = self.antipode(&alg.basis_product(a, b));
            let rhs = alg.mul(&self.antipode_basis(b), &self.antipode_basis(a));
            (lhs != rhs).then(|| self.w2(a, b))
        });
        r.check("antipode invertible", self.check_ids(), |&a| {
            let x = e(a);
            let ok = self.antipode(&self.antipode_inv(&x)) == x
                && self.antipode_inv(&self.antipode(&x)) == x;
            (!ok).then(|| self.label(a))
        });

        self.check_surjectivity(&mut r);
        r
    }

    /// Bijectivity witnesses for the four slice maps `A ⊗ A → A ⊗ A`.
    fn check_surjectivity(&self, r: &mut Report) {
        let pairs = self.pairs();
        let rules: [(&str, &SliceRule<F>); 4] = [
            ("slice map a⊗b ↦ Δ(a)(1⊗b) bijective", &self.slices.right),
            ("slice map a⊗b ↦ (a⊗1)Δ(b) bijective", &self.slices.left),
            (
                "slice map a⊗b ↦ Δ(a)(b⊗1) bijective",
                &self.slices.right_first,
            ),
            (
                "slice map a⊗b ↦ (1⊗a)Δ(b) bijective",
                &self.slices.left_second,
            ),
        ];
        for (name, rule) in rules {
            let images: Vec<Tensor<F>> = pairs.iter().map(|&(a, b)| rule(a, b)).collect();
            let rank = tensor_rank(&images);
            let witness =
                (rank != images.len()).then(|| format!("rank {rank} of {} images", images.len()));
            r.record(name, witness);
        }
    }

    /// Matrix of a linear map given by a rule, for finite bases.
    pub fn matrix_of(&self, f: impl Fn(&Element<F>) -> Element<F>) -> Result<Matrix<F>> {
        let n = self.algebra.require_dim()?;
        Ok(map_matrix(n, |id| f(&Element::basis(id))))
    }

    /// `(a⊗1)` times a two-leg tensor, etc.: places `t` into legs of `A^{⊗k}`.
    pub fn embed(&self, t: &Tensor<F>, legs: &[usize], k: usize) -> Result<Tensor<F>> {
        let algs = vec![&self.algebra; k];
        leg_embed(t, legs, k, &algs)
    }

    pub fn tensor_mul(&self, x: &Tensor<F>, y: &Tensor<F>) -> Tensor<F> {
        let algs = vec![&self.algebra; x.arity()];
        tensor_mul(&algs, x, y)
    }
}

/// Rank of a family of tensors viewed as vectors.
pub fn tensor_rank<F: Scalar>(ts: &[Tensor<F>]) -> usize {
    let mut keys: Vec<Vec<BasisId>> = ts
        .iter()
        .flat_map(|t| t.terms().map(|(k, _)| k.to_vec()))
        .collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<F>> = ts
        .iter()
        .map(|t| keys.iter().map(|k| t.coeff(k)).collect())
        .collect();
    if rows.is_empty() || keys.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cyclotomic::Cyclotomic as Q;

    #[test]
    fn sweedler_decomposition_groups_by_left_leg() {
        let mut t = Tensor::<Q>::zero(2);
        t.add_term(vec![BasisId(0), BasisId(1)], Q::one());
        t.add_term(vec![BasisId(0), BasisId(2)], Q::integer(2));
        t.add_term(vec![BasisId(3), BasisId(1)], Q::one());
        let d = SweedlerDecomp::of(&t);
        assert_eq!(d.terms.len(), 2);
        assert_eq!(d.to_tensor(), t);
    }

    #[test]
    fn delta2_on_group_algebra() {
        let h = catalog::group_algebra::<Q>(&catalog::Group::cyclic(2));
        let g = Element::basis(BasisId(1));
        let e = Element::basis(BasisId(0));
        let t = h.delta2_slices(&g, &e, &e).unwrap();
        assert_eq!(t, Tensor::basis(vec![BasisId(1); 3]));
    }

    #[test]
    fn delta2_on_function_algebra_matches_brute_force() {
        let grp = catalog::Group::cyclic(2);
        let h = catalog::function_algebra::<Q>(&grp);
        // Oracle: (δ_b ⊗ 1 ⊗ 1) Δ²(δ_a) (1 ⊗ 1 ⊗ δ_c) is the indicator of
        // {(x, y, z) : xyz = a, x = b, z = c}.
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let t = h
                        .delta2_slices(
                            &Element::basis(BasisId(a)),
                            &Element::basis(BasisId(b)),
                            &Element::basis(BasisId(c)),
                        )
                        .unwrap();
                    let mut expected = Tensor::zero(3);
                    for y in 0..2 {
                        if (b + y + c) % 2 == a {
                            expected.add_term(vec![BasisId(b), BasisId(y), BasisId(c)], Q::one());
                        }
                    }
                    assert_eq!(t, expected, "a={a} b={b} c={c}");
                }
            }
        }
    }

    #[test]
    fn broken_antipode_fails_at_first_pair() {
        let h = catalog::sweedler::<Q>()
            .with_antipode(Arc::new(Element::basis), Arc::new(Element::basis));
        let r = h.check_axioms();
        let c = r.get("antipode (left)").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_deref(), Some("(x, 1)"));
    }
}
