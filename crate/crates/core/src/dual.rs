//! Pairings between an algebraic quantum group and its dual, the four actions
//! they induce, the extension of the pairing to multipliers, and the dual of
//! a finite-dimensional example with its integrals and modular data.
//!
//! Both `A` and `B` use dual bases: basis vector `i` of `B` is the functional
//! that is 1 on `e_i` and 0 elsewhere, so `⟨a, b⟩ = Σ aᵢbᵢ`. This is also
//! how the infinite pair `K(ℤ)`, `ℂ[ℤ]` is paired.

use std::sync::Arc;

use crate::algebra::{Algebra, Multiplier};
use crate::element::{BasisId, Element, Tensor};
use crate::error::{Error, Result};
use crate::hopf::{tensor_rank, HopfAlgebra};
use crate::integrals::{
    check_left_invariant, check_right_invariant, solve_left_integral, Functional, FunctionalRule,
    ModularData,
};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::Scalar;

pub type ElemMap<F> = Arc<dyn Fn(&Element<F>) -> Element<F> + Send + Sync>;

/// Closed forms of `c ↦ φ(c·)` and `c ↦ ψ(·c)` as maps `A → B`, with inverses.
#[derive(Clone)]
struct FunctionalSlices<F> {
    phi_left: ElemMap<F>,
    phi_left_inv: ElemMap<F>,
    psi_right: ElemMap<F>,
    psi_right_inv: ElemMap<F>,
}

#[derive(Clone)]
pub struct Pairing<F> {
    a: HopfAlgebra<F>,
    b: HopfAlgebra<F>,
    phi: Option<Functional<F>>,
    slices: Option<FunctionalSlices<F>>,
}

fn ids_of<F: Scalar>(x: &Element<F>) -> Vec<Element<F>> {
    x.support().map(Element::basis).collect()
}

impl<F: Scalar> Pairing<F> {
    pub fn new(a: HopfAlgebra<F>, b: HopfAlgebra<F>) -> Self {
        Pairing {
            a,
            b,
            phi: None,
            slices: None,
        }
    }

    /// Installs closed forms for `c ↦ φ(c·)` and `c ↦ ψ(·c)` and their inverses,
    /// needed when `A` is infinite-dimensional.
    pub fn with_integral_slices(
        mut self,
        phi_left: ElemMap<F>,
        phi_left_inv: ElemMap<F>,
        psi_right: ElemMap<F>,
        psi_right_inv: ElemMap<F>,
    ) -> Self {
        self.slices = Some(FunctionalSlices {
            phi_left,
            phi_left_inv,
            psi_right,
            psi_right_inv,
        });
        self
    }

    pub fn with_left_integral(mut self, rule: FunctionalRule<F>) -> Self {
        self.phi = Some(Functional::from_rule(rule));
        self
    }

    pub fn with_phi(mut self, phi: Functional<F>) -> Self {
        self.phi = Some(phi);
        self
    }

    pub fn a(&self) -> &HopfAlgebra<F> {
        &self.a
    }

    pub fn b(&self) -> &HopfAlgebra<F> {
        &self.b
    }

    pub fn dim(&self) -> Option<usize> {
        self.a.dim()
    }

    pub fn phi(&self) -> Result<&Functional<F>> {
        self.phi.as_ref().ok_or(Error::NoIntegral)
    }

    /// `ψ = φ∘S`.
    pub fn psi(&self) -> Result<Functional<F>> {
        let a = self.a.clone();
        Ok(self.phi()?.compose(move |id| a.antipode_basis(id)))
    }

    pub fn eval(&self, a: &Element<F>, b: &Element<F>) -> F {
        a.eval_linear(|id| b.coeff(id))
    }

    /// Leg-wise pairing of two tensors of the same arity.
    pub fn eval_tensor(&self, x: &Tensor<F>, y: &Tensor<F>) -> F {
        let mut s = F::zero();
        for (ids, c) in x.terms() {
            let d = y.coeff(ids);
            if !d.is_zero() {
                s = s + c.clone() * d;
            }
        }
        s
    }

    /// The element of `B` representing the functional `f` on finite `A`.
    fn to_b(&self, f: impl Fn(BasisId) -> F) -> Result<Element<F>> {
        let n = self.a.algebra().require_dim()?;
        Ok(Element::from_terms(
            (0..n as i64).map(|i| (BasisId(i), f(BasisId(i)))),
        ))
    }

    /// Solves `b = Σ_j M[i][j] c_j` for `c`, with `M[i][j] = m(e_i, e_j)`.
    fn solve_in_a(
        &self,
        m: impl Fn(BasisId, BasisId) -> F,
        b: &Element<F>,
        what: &str,
    ) -> Result<Element<F>> {
        let n = self.a.algebra().require_dim()?;
        let rows = (0..n as i64)
            .map(|i| (0..n as i64).map(|j| m(BasisId(i), BasisId(j))).collect())
            .collect();
        Matrix::from_rows(rows)
            .solve(&b.to_coords(n))
            .map(|c| Element::from_coords(&c))
            .ok_or_else(|| Error::Singular(what.to_string()))
    }

    /// `φ(c·)` as an element of `B`.
    pub fn phi_left(&self, c: &Element<F>) -> Result<Element<F>> {
        if let Some(s) = &self.slices {
            return Ok((s.phi_left)(c));
        }
        let phi = self.phi()?;
        let alg = self.a.algebra();
        self.to_b(|i| phi.eval(&alg.mul(c, &Element::basis(i))))
    }

    /// The `c` with `b = φ(c·)`.
    pub fn phi_left_inv(&self, b: &Element<F>) -> Result<Element<F>> {
        if let Some(s) = &self.slices {
            return Ok((s.phi_left_inv)(b));
        }
        let phi = self.phi()?;
        let alg = self.a.algebra();
        self.solve_in_a(|i, j| phi.eval(&alg.basis_product(j, i)), b, "c ↦ φ(c·)")
    }

    /// `ψ(·c)` as an element of `B`.
    pub fn psi_right(&self, c: &Element<F>) -> Result<Element<F>> {
        if let Some(s) = &self.slices {
            return Ok((s.psi_right)(c));
        }
        let psi = self.psi()?;
        let alg = self.a.algebra();
        self.to_b(|i| psi.eval(&alg.mul(&Element::basis(i), c)))
    }

    /// The `c` with `b = ψ(·c)`.
    pub fn psi_right_inv(&self, b: &Element<F>) -> Result<Element<F>> {
        if let Some(s) = &self.slices {
            return Ok((s.psi_right_inv)(b));
        }
        let psi = self.psi()?;
        let alg = self.a.algebra();
        self.solve_in_a(|i, j| psi.eval(&alg.basis_product(i, j)), b, "c ↦ ψ(·c)")
    }

    /// `φ(·c)` as an element of `B` (finite `A`).
    pub fn phi_right(&self, c: &Element<F>) -> Result<Element<F>> {
        let phi = self.phi()?;
        let alg = self.a.algebra();
        self.to_b(|i| phi.eval(&alg.mul(&Element::basis(i), c)))
    }

    /// The `c` with `b = φ(·c)` (finite `A`).
    pub fn phi_right_inv(&self, b: &Element<F>) -> Result<Element<F>> {
        let phi = self.phi()?;
        let alg = self.a.algebra();
        self.solve_in_a(|i, j| phi.eval(&alg.basis_product(i, j)), b, "c ↦ φ(·c)")
    }

    /// `ψ(S(·)c)` as an element of `B` (finite `A`).
    pub fn psi_antipode(&self, c: &Element<F>) -> Result<Element<F>> {
        let psi = self.psi()?;
        self.to_b(|i| psi.eval(&self.a.mul(&self.a.antipode_basis(i), c)))
    }

    /// The `c` with `b = ψ(S(·)c)` (finite `A`).
    pub fn psi_antipode_inv(&self, b: &Element<F>) -> Result<Element<F>> {
        let psi = self.psi()?;
        self.solve_in_a(
            |i, j| psi.eval(&self.a.mul(&self.a.antipode_basis(i), &Element::basis(j))),
            b,
            "c ↦ ψ(S(·)c)",
        )
    }

    /// An element `u` of `A` with `u▷b = b◁u = b`: the unit, or a local unit
    /// for the dual-basis support of `b`.
    pub fn a_cover(&self, b: &Element<F>) -> Result<Element<F>> {
        let alg = self.a.algebra();
        match alg.unit() {
            Some(u) => Ok(u.clone()),
            None => alg.local_unit(&ids_of(b)),
        }
    }

    /// An element `f` of `B` with `f▷a = a◁f = a`.
    pub fn b_cover(&self, a: &Element<F>) -> Result<Element<F>> {
        let alg = self.b.algebra();
        match alg.unit() {
            Some(u) => Ok(u.clone()),
            None => alg.local_unit(&ids_of(a)),
        }
    }

    /// `a▷b`, with `⟨a′, a▷b⟩ = ⟨a′a, b⟩`.
    pub fn act_a_on_b(&self, a: &Element<F>, b: &Element<F>) -> Result<Element<F>> {
        let f = self.b_cover(a)?;
        Ok(self
            .b
            .delta_right(b, &f)
            .contract_leg(1, |i| a.coeff(i))
            .to_element())
    }

    /// `b◁a`, with `⟨a′, b◁a⟩ = ⟨aa′, b⟩`.
    pub fn act_b_right_a(&self, b: &Element<F>, a: &Element<F>) -> Result<Element<F>> {
        let f = self.b_cover(a)?;
        Ok(self
            .b
            .delta_left(&f, b)
            .contract_leg(0, |i| a.coeff(i))
            .to_element())
    }

    /// `b▷a`, with `⟨b▷a, b′⟩ = ⟨a, b′b⟩`.
    pub fn act_b_on_a(&self, b: &Element<F>, a: &Element<F>) -> Result<Element<F>> {
        let u = self.a_cover(b)?;
        Ok(self
            .a
            .delta_right(a, &u)
            .contract_leg(1, |i| b.coeff(i))
            .to_element())
    }

    /// `a◁b`, with `⟨a◁b, b′⟩ = ⟨a, bb′⟩`.
    pub fn act_a_right_b(&self, a: &Element<F>, b: &Element<F>) -> Result<Element<F>> {
        let u = self.a_cover(b)?;
        Ok(self
            .a
            .delta_left(&u, a)
            .contract_leg(0, |i| b.coeff(i))
            .to_element())
    }

    /// `⟨m, b⟩` for a multiplier `m` of `A`, as `⟨mu, b'⟩` where `b = u▷b'`.
    pub fn extend_left(&self, m: &Multiplier<F>, b: &Element<F>) -> Result<F> {
        let u = self.a_cover(b)?;
        self.extend_left_with(m, &[(u, b.clone())], b)
    }

    /// `⟨m, b⟩` from an explicit decomposition `b = Σ aᵢ▷bᵢ`, which is checked.
    pub fn extend_left_with(
        &self,
        m: &Multiplier<F>,
        parts: &[(Element<F>, Element<F>)],
        b: &Element<F>,
    ) -> Result<F> {
        let mut sum = Element::zero();
        let mut value = F::zero();
        for (ai, bi) in parts {
            sum = sum.add(&self.act_a_on_b(ai, bi)?);
            value = value + self.eval(&m.left(ai), bi);
        }
        if &sum != b {
            return Err(Error::BadDecomposition(self.b.show(b)));
        }
        Ok(value)
    }

    /// `⟨a, n⟩` for a multiplier `n` of `B`, as `⟨a', nf⟩` where `a = f▷a'`.
    pub fn extend_right(&self, a: &Element<F>, n: &Multiplier<F>) -> Result<F> {
        let f = self.b_cover(a)?;
        self.extend_right_with(&[(f, a.clone())], a, n)
    }

    /// `⟨a, n⟩` from an explicit decomposition `a = Σ bᵢ▷aᵢ`, which is checked.
    pub fn extend_right_with(
        &self,
        parts: &[(Element<F>, Element<F>)],
        a: &Element<F>,
        n: &Multiplier<F>,
    ) -> Result<F> {
        let mut sum = Element::zero();
        let mut value = F::zero();
        for (bi, ai) in parts {
            sum = sum.add(&self.act_b_on_a(bi, ai)?);
            value = value + self.eval(ai, &n.left(bi));
        }
        if &sum != a {
            return Err(Error::BadDecomposition(self.a.show(a)));
        }
        Ok(value)
    }

    fn window_ids(&self) -> Vec<BasisId> {
        self.a.check_ids()
    }

    /// Pairing axioms: nondegeneracy, adjointness of products and coproducts,
    /// counits, antipodes, and the defining properties of the four actions.
    pub fn check(&self) -> Report {
        let mut r = Report::new("pairing");
        let ids = self.window_ids();
        let e = Element::<F>::basis;
        let lab_a = |i: BasisId| self.a.label(i);
        let lab_b = |i: BasisId| self.b.label(i);
        let pairs: Vec<(BasisId, BasisId)> = ids
            .iter()
            .flat_map(|&x| ids.iter().map(move |&y| (x, y)))
            .collect();
        let triples: Vec<(BasisId, BasisId, BasisId)> = pairs
            .iter()
            .flat_map(|&(x, y)| ids.iter().map(move |&z| (x, y, z)))
            .collect();
        let w3 = |x: BasisId, y: BasisId, z: BasisId, ya_b: bool| {
            if ya_b {
                format!("({}, {}, {})", lab_a(x), lab_b(y), lab_b(z))
            } else {
                format!("({}, {}, {})", lab_a(x), lab_a(y), lab_b(z))
            }
        };

        let rows: Vec<Vec<F>> = ids
            .iter()
            .map(|&i| ids.iter().map(|&j| self.eval(&e(i), &e(j))).collect())
            .collect();
        let rank = Matrix::from_rows(rows).rank();
        r.record(
            "nondegenerate",
            (rank != ids.len()).then(|| format!("rank {rank} of {}", ids.len())),
        );

        r.check(
            "⟨Δ(a), b⊗b′⟩ = ⟨a, bb′⟩",
            triples.clone(),
            |&(a, b, b2)| {
                let u = match self.a_cover(&e(b2)) {
                    Ok(u) => u,
                    Err(err) => return Some(err.to_string()),
                };
                let lhs =
                    self.eval_tensor(&self.a.delta_right(&e(a), &u), &Tensor::basis(vec![b, b2]));
                let rhs = self.eval(&e(a), &self.b.mul(&e(b), &e(b2)));
                (lhs != rhs).then(|| w3(a, b, b2, true))
            },
        );
        r.check(
            "⟨a⊗a′, Δ(b)⟩ = ⟨aa′, b⟩",
            triples.clone(),
            |&(a, a2, b)| {
                let f = match self.b_cover(&e(a2)) {
                    Ok(f) => f,
                    Err(err) => return Some(err.to_string()),
                };
                let lhs =
                    self.eval_tensor(&Tensor::basis(vec![a, a2]), &self.b.delta_right(&e(b), &f));
                let rhs = self.eval(&self.a.mul(&e(a), &e(a2)), &e(b));
                (lhs != rhs).then(|| w3(a, a2, b, false))
            },
        );
        r.check("⟨a, 1⟩ = ε(a)", ids.clone(), |&a| {
            let v = self.extend_right(&e(a), &Multiplier::identity());
            (v.ok() != Some(self.a.counit_basis(a))).then(|| lab_a(a))
        });
        r.check("⟨1, b⟩ = ε(b)", ids.clone(), |&b| {
            let v = self.extend_left(&Multiplier::identity(), &e(b));
            (v.ok() != Some(self.b.counit_basis(b))).then(|| lab_b(b))
        });
        r.check("⟨S(a), b⟩ = ⟨a, S(b)⟩", pairs.clone(), |&(a, b)| {
            let lhs = self.eval(&self.a.antipode_basis(a), &e(b));
            let rhs = self.eval(&e(a), &self.b.antipode_basis(b));
            (lhs != rhs).then(|| format!("({}, {})", lab_a(a), lab_b(b)))
        });

        let ok = |x: Result<Element<F>>| x.unwrap_or_else(|_| Element::zero());
        r.check(
            "⟨a′, a▷b⟩ = ⟨a′a, b⟩",
            triples.clone(),
            |&(a2, a, b)| {
                let lhs = self.eval(&e(a2), &ok(self.act_a_on_b(&e(a), &e(b))));
                let rhs = self.eval(&self.a.mul(&e(a2), &e(a)), &e(b));
                (lhs != rhs).then(|| w3(a2, a, b, false))
            },
        );
        r.check(
            "⟨a′, b◁a⟩ = ⟨aa′, b⟩",
            triples.clone(),
            |&(a2, a, b)| {
                let lhs = self.eval(&e(a2), &ok(self.act_b_right_a(&e(b), &e(a))));
                let rhs = self.eval(&self.a.mul(&e(a), &e(a2)), &e(b));
                (lhs != rhs).then(|| w3(a2, a, b, false))
            },
        );
        r.check(
            "⟨b▷a, b′⟩ = ⟨a, b′b⟩",
            triples.clone(),
            |&(a, b, b2)| {
                let lhs = self.eval(&ok(self.act_b_on_a(&e(b), &e(a))), &e(b2));
                let rhs = self.eval(&e(a), &self.b.mul(&e(b2), &e(b)));
                (lhs != rhs).then(|| w3(a, b, b2, true))
            },
        );
        r.check(
            "⟨a◁b, b′⟩ = ⟨a, bb′⟩",
            triples.clone(),
            |&(a, b, b2)| {
                let lhs = self.eval(&ok(self.act_a_right_b(&e(a), &e(b))), &e(b2));
                let rhs = self.eval(&e(a), &self.b.mul(&e(b), &e(b2)));
                (lhs != rhs).then(|| w3(a, b, b2, true))
            },
        );
        r.check(
            "a▷(a′▷b) = (aa′)▷b",
            triples.clone(),
            |&(a, a2, b)| {
                let lhs = ok(self.act_a_on_b(&e(a), &ok(self.act_a_on_b(&e(a2), &e(b)))));
                let rhs = ok(self.act_a_on_b(&self.a.mul(&e(a), &e(a2)), &e(b)));
                (lhs != rhs).then(|| w3(a, a2, b, false))
            },
        );
        r.check("b▷(b′▷a) = (bb′)▷a", triples, |&(a, b, b2)| {
            let lhs = ok(self.act_b_on_a(&e(b), &ok(self.act_b_on_a(&e(b2), &e(a)))));
            let rhs = ok(self.act_b_on_a(&self.b.mul(&e(b), &e(b2)), &e(a)));
            (lhs != rhs).then(|| w3(a, b, b2, true))
        });

        // Unital actions: every basis vector is reached.
        match self.dim() {
            Some(n) => {
                let spans: [(&str, Box<dyn Fn(BasisId, BasisId) -> Element<F> + '_>); 4] = [
                    (
                        "A▷B unital",
                        Box::new(|x, y| ok(self.act_a_on_b(&e(x), &e(y)))),
                    ),
                    (
                        "B◁A unital",
                        Box::new(|x, y| ok(self.act_b_right_a(&e(y), &e(x)))),
                    ),
                    (
                        "B▷A unital",
                        Box::new(|x, y| ok(self.act_b_on_a(&e(y), &e(x)))),
                    ),
                    (
                        "A◁B unital",
                        Box::new(|x, y| ok(self.act_a_right_b(&e(x), &e(y)))),
                    ),
                ];
                for (name, f) in spans {
                    let images: Vec<Tensor<F>> = pairs
                        .iter()
                        .map(|&(x, y)| Tensor::from_element(&f(x, y)))
                        .collect();
                    let rank = tensor_rank(&images);
                    r.record(
                        name,
                        (rank != n).then(|| format!("span has dimension {rank} of {n}")),
                    );
                }
            }
            None => {
                r.check("actions unital on covers", ids, |&k| {
                    let (x, y) = (e(k), e(k));
                    let u = ok(self.a_cover(&y));
                    let f = ok(self.b_cover(&x));
                    let good = ok(self.act_a_on_b(&u, &y)) == y
                        && ok(self.act_b_right_a(&y, &u)) == y
                        && ok(self.act_b_on_a(&f, &x)) == x
                        && ok(self.act_a_right_b(&x, &f)) == x;
                    (!good).then(|| lab_a(k))
                });
            }
        }
        r
    }
}

/// The dual `B = Â` of a finite-dimensional unital Hopf algebra on the dual
/// basis: product adjoint to `Δ`, coproduct adjoint to the product, unit `ε`,
/// counit evaluation at `1`, antipode adjoint to `S`.
pub fn build_dual<F: Scalar>(h: &HopfAlgebra<F>) -> Result<HopfAlgebra<F>> {
    let n = h.algebra().require_dim()?;
    let alg = h.algebra();
    let one = alg.require_unit()?.clone();
    let e = Element::<F>::basis;
    let id = |i: usize| BasisId(i as i64);
    let deltas: Vec<Tensor<F>> = (0..n)
        .map(|k| h.coproduct(&e(id(k))))
        .collect::<Result<_>>()?;

    let mut table = vec![vec![Element::zero(); n]; n];
    for (k, d) in deltas.iter().enumerate() {
        for (ids, c) in d.terms() {
            table[ids[0].index()][ids[1].index()].add_term(id(k), c.clone());
        }
    }
    let labels = (0..n).map(|i| format!("f_{}", h.label(id(i)))).collect();
    let unit = Element::from_terms((0..n).map(|k| (id(k), h.counit_basis(id(k)))));
    let dual_alg = Algebra::from_table(format!("dual({})", h.name()), labels, table, Some(unit));

    let mut coproduct = vec![Tensor::zero(2); n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in alg.basis_product(id(i), id(j)).terms() {
                coproduct[k.index()].add_term(vec![id(i), id(j)], c.clone());
            }
        }
    }
    let counit = one.to_coords(n);
    let mut antipode = vec![Element::zero(); n];
    let mut antipode_inv = vec![Element::zero(); n];
    for k in 0..n {
        for (i, c) in h.antipode_basis(id(k)).terms() {
            antipode[i.index()].add_term(id(k), c.clone());
        }
        for (i, c) in h.antipode_inv_basis(id(k)).terms() {
            antipode_inv[i.index()].add_term(id(k), c.clone());
        }
    }
    HopfAlgebra::from_tables(dual_alg, coproduct, counit, antipode, Some(antipode_inv))
}

/// A finite-dimensional algebraic quantum group together with its dual,
/// the pairing, and the integrals and modular data on both sides.
#[derive(Clone)]
pub struct DualPair<F> {
    pub pairing: Pairing<F>,
    pub modular: ModularData<F>,
    /// `φ̂(b) = ε(c)` for `b = ψ(S(·)c)`.
    pub phi_hat: Functional<F>,
    /// `ψ̂(b) = ε(c)` for `b = φ(·c)`.
    pub psi_hat: Functional<F>,
    /// Modular data of `B`, derived from `φ̂` by the integrals module.
    pub modular_hat: ModularData<F>,
}

impl<F: Scalar> DualPair<F> {
    pub fn build(a: &HopfAlgebra<F>) -> Result<Self> {
        Self::from_modular(a, ModularData::derive(a)?)
    }

    pub fn from_modular(a: &HopfAlgebra<F>, modular: ModularData<F>) -> Result<Self> {
        let n = a.algebra().require_dim()?;
        let b = build_dual(a)?;
        let pairing = Pairing::new(a.clone(), b.clone()).with_phi(modular.phi.clone());
        let mut phi_hat = Vec::with_capacity(n);
        let mut psi_hat = Vec::with_capacity(n);
        for i in 0..n as i64 {
            let bi = Element::basis(BasisId(i));
            phi_hat.push(a.counit(&pairing.psi_antipode_inv(&bi)?));
            psi_hat.push(a.counit(&pairing.phi_right_inv(&bi)?));
        }
        let phi_hat = Functional::from_coords(phi_hat);
        let psi_hat = Functional::from_coords(psi_hat);
        let modular_hat = ModularData::from_left_integral(&b, phi_hat.clone())?;
        Ok(DualPair {
            pairing,
            modular,
            phi_hat,
            psi_hat,
            modular_hat,
        })
    }

    pub fn a(&self) -> &HopfAlgebra<F> {
        self.pairing.a()
    }

    pub fn b(&self) -> &HopfAlgebra<F> {
        self.pairing.b()
    }

    pub fn dim(&self) -> usize {
        self.a().dim().expect("dual pairs are finite-dimensional")
    }

    fn ids(&self) -> Vec<BasisId> {
        (0..self.dim() as i64).map(BasisId).collect()
    }

    fn pairs(&self) -> Vec<(BasisId, BasisId)> {
        let ids = self.ids();
        ids.iter()
            .flat_map(|&x| ids.iter().map(move |&y| (x, y)))
            .collect()
    }

    /// Invariance of `φ̂`, `ψ̂`, their relation through `S`, and agreement
    /// with the integral solved directly on `B`.
    pub fn dual_integrals_suite(&self) -> Report {
        let mut r = Report::new("dual integrals");
        let b = self.b();
        check_right_invariant(b, &self.psi_hat, &mut r, "ψ̂ right invariant");
        check_left_invariant(b, &self.phi_hat, &mut r, "φ̂ left invariant");
        r.check("ψ̂ = φ̂∘S", self.ids(), |&i| {
            let rhs = self.phi_hat.eval(&b.antipode_basis(i));
            (self.psi_hat.at(i) != rhs).then(|| b.label(i))
        });
        r.check(
            "ψ̂ = ψ̂ of the derived modular data",
            self.ids(),
            |&i| (self.psi_hat.at(i) != self.modular_hat.psi.at(i)).then(|| b.label(i)),
        );
        match solve_left_integral(b) {
            Ok(solved) => {
                let n = self.dim();
                let m = Matrix::from_rows(vec![solved.coords(n), self.phi_hat.coords(n)]);
                r.record(
                    "φ̂ proportional to the solved left integral of B",
                    (m.rank() != 1).then(|| "not proportional".to_string()),
                );
            }
            Err(err) => {
                r.record_error("φ̂ proportional to the solved left integral of B", err);
            }
        }
        r
    }

    /// `⟨a, δ̂⟩ = ε(σ⁻¹(a)) = ε(σ′⁻¹(a))`, `⟨a, δ̂⁻¹⟩ = ε(σ(a)) = ε(σ′(a))`,
    /// `⟨a, σ̂(b)⟩ = ⟨S²(a)δ⁻¹, b⟩`, `⟨a, σ̂′(b)⟩ = ⟨δ⁻¹S⁻²(a), b⟩`.
    pub fn cross_relations(&self) -> Report {
        let mut r = Report::new("cross relations");
        let (a, b, p) = (self.a(), self.b(), &self.pairing);
        let md = &self.modular;
        let mh = &self.modular_hat;
        let e = Element::<F>::basis;
        let dh = Multiplier::from_element(b.algebra(), mh.delta.clone());
        let dh_inv = Multiplier::from_element(b.algebra(), mh.delta_inv.clone());
        let lab = |i: BasisId| a.label(i);
        r.check(
            "⟨a, δ̂⟩ = ε(σ⁻¹(a)) = ε(σ′⁻¹(a))",
            self.ids(),
            |&i| {
                let lhs = p.extend_right(&e(i), &dh).ok();
                let s1 = a.counit(&md.sigma.apply_inv(&e(i)));
                let s2 = a.counit(&md.sigma_prime.apply_inv(&e(i)));
                (lhs != Some(s1.clone()) || s1 != s2).then(|| lab(i))
            },
        );
        r.check(
            "⟨a, δ̂⁻¹⟩ = ε(σ(a)) = ε(σ′(a))",
            self.ids(),
            |&i| {
                let lhs = p.extend_right(&e(i), &dh_inv).ok();
                let s1 = a.counit(&md.sigma.apply(&e(i)));
                let s2 = a.counit(&md.sigma_prime.apply(&e(i)));
                (lhs != Some(s1.clone()) || s1 != s2).then(|| lab(i))
            },
        );
        let w = |i: BasisId, j: BasisId| format!("({}, {})", a.label(i), b.label(j));
        r.check(
            "⟨a, σ̂(b)⟩ = ⟨S²(a)δ⁻¹, b⟩",
            self.pairs(),
            |&(i, j)| {
                let lhs = p.eval(&e(i), &mh.sigma.apply(&e(j)));
                let rhs = p.eval(&a.mul(&a.antipode_power(&e(i), 2), &md.delta_inv), &e(j));
                (lhs != rhs).then(|| w(i, j))
            },
        );
        r.check(
            "⟨a, σ̂′(b)⟩ = ⟨δ⁻¹S⁻²(a), b⟩",
            self.pairs(),
            |&(i, j)| {
                let lhs = p.eval(&e(i), &mh.sigma_prime.apply(&e(j)));
                let rhs = p.eval(&a.mul(&md.delta_inv, &a.antipode_power(&e(i), -2)), &e(j));
                (lhs != rhs).then(|| w(i, j))
            },
        );
        r
    }

    /// `ψ̂(bb′)` computed in `B` against `φ(S⁻¹(c′)c)` for `b = φ(·c)`, `b′ = φ(·c′)`.
    pub fn plancherel(&self, c: &Element<F>, c2: &Element<F>) -> Result<(F, F)> {
        let (a, b, p) = (self.a(), self.b(), &self.pairing);
        let bb = b.mul(&p.phi_right(c)?, &p.phi_right(c2)?);
        let direct = self.psi_hat.eval(&bb);
        let closed = self.modular.phi.eval(&a.mul(&a.antipode_inv(c2), c));
        Ok((direct, closed))
    }

    /// The right side of Radford's formula, `δ⁻¹(δ̂▷a◁δ̂⁻¹)δ`.
    pub fn radford_rhs(&self, x: &Element<F>) -> Result<Element<F>> {
        let (a, p) = (self.a(), &self.pairing);
        let mh = &self.modular_hat;
        let inner = p.act_a_right_b(&p.act_b_on_a(&mh.delta, x)?, &mh.delta_inv)?;
        Ok(a.mul(&a.mul(&self.modular.delta_inv, &inner), &self.modular.delta))
    }

    /// The dual of `B`, compared with `A` through the canonical evaluation map,
    /// which on dual bases is the identity on basis positions.
    pub fn biduality(&self) -> Report {
        let mut r = Report::new("biduality");
        let a = self.a();
        let c = match build_dual(self.b()) {
            Ok(c) => c,
            Err(err) => {
                r.record_error("double dual exists", err);
                return r;
            }
        };
        let e = Element::<F>::basis;
        r.check("product", self.pairs(), |&(i, j)| {
            (c.algebra().basis_product(i, j) != a.algebra().basis_product(i, j))
                .then(|| format!("({}, {})", a.label(i), a.label(j)))
        });
        r.record(
            "unit",
            (c.algebra().unit() != a.algebra().unit()).then(|| "units differ".to_string()),
        );
        r.check("coproduct", self.ids(), |&i| {
            (c.coproduct(&e(i)).ok() != a.coproduct(&e(i)).ok()).then(|| a.label(i))
        });
        r.check("counit", self.ids(), |&i| {
            (c.counit_basis(i) != a.counit_basis(i)).then(|| a.label(i))
        });
        r.check("antipode", self.ids(), |&i| {
            (c.antipode_basis(i) != a.antipode_basis(i)).then(|| a.label(i))
        });
        r
    }

    /// Everything about the dual: pairing axioms, dual axioms and integrals,
    /// cross relations, the Plancherel formula, Radford's formula, biduality.
    pub fn dual_suite(&self) -> Report {
        let mut r = Report::new("dual");
        r.extend(self.pairing.check());
        r.extend(self.b().check_axioms());
        r.extend(self.dual_integrals_suite());
        r.extend(self.cross_relations());
        let (a, e) = (self.a(), Element::<F>::basis);
        r.check(
            "Plancherel ψ̂(bb′) = φ(S⁻¹(c′)c)",
            self.pairs(),
            |&(i, j)| match self.plancherel(&e(i), &e(j)) {
                Ok((x, y)) if x == y => None,
                _ => Some(format!("({}, {})", a.label(i), a.label(j))),
            },
        );
        r.check(
            "Radford S⁴(a) = δ⁻¹(δ̂▷a◁δ̂⁻¹)δ",
            self.ids(),
            |&i| {
                let lhs = a.antipode_power(&e(i), 4);
                (self.radford_rhs(&e(i)).ok() != Some(lhs)).then(|| a.label(i))
            },
        );
        r.check(
            "⟨δ, b⟩ through the multiplier extension",
            self.ids(),
            |&j| {
                let m = self.modular.delta_multiplier(a);
                let v = self.pairing.extend_left(&m, &e(j)).ok();
                (v != Some(self.pairing.eval(&self.modular.delta, &e(j))))
                    .then(|| self.b().label(j))
            },
        );
        r.extend(self.biduality());
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Group};
    use crate::cyclotomic::Cyclotomic as Q;

    fn e(i: i64) -> Element<Q> {
        Element::basis(BasisId(i))
    }

    #[test]
    fn dual_of_group_algebra_is_function_algebra() {
        for g in [Group::cyclic(2), Group::symmetric3()] {
            let a = catalog::group_algebra::<Q>(&g);
            let f = catalog::function_algebra::<Q>(&g);
            let b = build_dual(&a).unwrap();
            let n = g.order() as i64;
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(
                        b.algebra().basis_product(BasisId(i), BasisId(j)),
                        f.algebra().basis_product(BasisId(i), BasisId(j))
                    );
                }
                assert_eq!(b.coproduct(&e(i)).unwrap(), f.coproduct(&e(i)).unwrap());
                assert_eq!(b.antipode(&e(i)), f.antipode(&e(i)));
                assert_eq!(b.counit(&e(i)), f.counit(&e(i)));
            }
        }
    }

    #[test]
    fn dual_of_function_algebra_is_group_algebra() {
        let g = Group::symmetric3();
        let b = build_dual(&catalog::function_algebra::<Q>(&g)).unwrap();
        let c = catalog::group_algebra::<Q>(&g);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(
                    b.algebra().basis_product(BasisId(i), BasisId(j)),
                    c.algebra().basis_product(BasisId(i), BasisId(j))
                );
            }
            assert_eq!(b.coproduct(&e(i)).unwrap(), c.coproduct(&e(i)).unwrap());
        }
    }

    #[test]
    fn delta_g_acts_on_g() {
        let dp = DualPair::build(&catalog::group_algebra::<Q>(&Group::cyclic(2))).unwrap();
        // δ_g is basis vector 1 of the dual; Δ(g) = g⊗g and ⟨g, δ_g⟩ = 1.
        assert_eq!(dp.pairing.act_b_on_a(&e(1), &e(1)).unwrap(), e(1));
        assert!(dp.pairing.act_b_on_a(&e(0), &e(1)).unwrap().is_zero());
    }

    #[test]
    fn psi_hat_of_delta_e_is_one() {
        let dp = DualPair::build(&catalog::group_algebra::<Q>(&Group::cyclic(2))).unwrap();
        assert_eq!(dp.psi_hat.at(BasisId(0)), Q::one());
    }

    #[test]
    fn phi_hat_of_dual_unit_is_group_order() {
        let g = Group::symmetric3();
        let dp = DualPair::build(&catalog::group_algebra::<Q>(&g)).unwrap();
        let one = dp.b().algebra().unit().unwrap().clone();
        assert_eq!(dp.phi_hat.eval(&one), Q::integer(6));
    }

    #[test]
    fn a_acts_on_phi_c_by_multiplication() {
        // a▷φ(·c) = φ(·ac), computed from the definition on the right.
        let dp = DualPair::build(&catalog::sweedler::<Q>()).unwrap();
        let p = &dp.pairing;
        for i in 0..4 {
            for j in 0..4 {
                let lhs = p.act_a_on_b(&e(i), &p.phi_right(&e(j)).unwrap()).unwrap();
                let rhs = p.phi_right(&dp.a().mul(&e(i), &e(j))).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn dual_suite_passes() {
        for name in ["group:z2", "group:s3", "function:s3", "h4", "taft:3"] {
            let catalog::Builtin::Hopf(h) = catalog::builtin::<Q>(name, 5).unwrap() else {
                unreachable!()
            };
            let r = DualPair::build(&h).unwrap().dual_suite();
            assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn trivial_delta_hat_breaks_cross_relation() {
        let mut dp = DualPair::build(&catalog::sweedler::<Q>()).unwrap();
        let one = dp.b().algebra().unit().unwrap().clone();
        dp.modular_hat.delta = one.clone();
        dp.modular_hat.delta_inv = one;
        let r = dp.cross_relations();
        let c = r.get("⟨a, δ̂⟩ = ε(σ⁻¹(a)) = ε(σ′⁻¹(a))").unwrap();
        assert!(!c.passed);
    }

    #[test]
    fn delta_multiplier_pairs_like_g() {
        let dp = DualPair::build(&catalog::sweedler::<Q>()).unwrap();
        let m = dp.modular.delta_multiplier(dp.a());
        for j in 0..4 {
            let v = dp.pairing.extend_left(&m, &e(j)).unwrap();
            assert_eq!(v, dp.pairing.eval(&e(1), &e(j)));
        }
    }

    #[test]
    fn wrong_decomposition_is_rejected() {
        let dp = DualPair::build(&catalog::sweedler::<Q>()).unwrap();
        let m = Multiplier::identity();
        let r = dp.pairing.extend_left_with(&m, &[(e(1), e(2))], &e(2));
        assert!(matches!(r, Err(Error::BadDecomposition(_))));
    }

    #[test]
    fn integer_pair_passes_pairing_axioms() {
        let p = catalog::integers_pair::<Q>(3);
        let r = p.check();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn local_unit_cover_in_functions_on_integers() {
        let p = catalog::integers_pair::<Q>(3);
        let b = e(0).add(&e(5));
        let u = p.a_cover(&b).unwrap();
        assert_eq!(u, e(0).add(&e(5)));
        assert_eq!(p.a().mul(&u, &e(5)), e(5));
    }
}
