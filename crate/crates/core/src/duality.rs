//! The duality element `V = Σ eⁱ⊗eᵢ` in `B⊗A`, its slice forms, and the
//! operator `T(x⊗x′) = Δ(x)(1⊗x′)` by which it acts on `A⊗A`.

use crate::algebra::{leg_embed, show_tensor, tensor_mul, Algebra};
use crate::dual::Pairing;
use crate::element::{BasisId, Element, Tensor};
use crate::error::{Error, Result};
use crate::heisenberg::Heisenberg;
use crate::hopf::map_matrix;
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct DualityElement<F> {
    pairing: Pairing<F>,
}

/// Applies a bilinear map to every pure tensor of a two-leg tensor.
pub fn apply_bilinear<F: Scalar>(
    t: &Tensor<F>,
    arity: usize,
    f: impl Fn(&Element<F>, &Element<F>) -> Result<Tensor<F>>,
) -> Result<Tensor<F>> {
    let mut out = Tensor::zero(arity);
    for (ids, c) in t.terms() {
        out.add_scaled(&f(&Element::basis(ids[0]), &Element::basis(ids[1]))?, c);
    }
    Ok(out)
}

impl<F: Scalar> DualityElement<F> {
    pub fn new(pairing: Pairing<F>) -> Self {
        DualityElement { pairing }
    }

    pub fn pairing(&self) -> &Pairing<F> {
        &self.pairing
    }

    fn legs_ba(&self) -> [&Algebra<F>; 2] {
        [self.pairing.b().algebra(), self.pairing.a().algebra()]
    }

    /// `V` as a tensor in `B⊗A`; only exists for finite pairs.
    pub fn element(&self) -> Result<Tensor<F>> {
        let n = self
            .pairing
            .dim()
            .ok_or_else(|| Error::NotAnElement("V".into()))?;
        let mut v = Tensor::zero(2);
        for i in 0..n as i64 {
            v.add_term(vec![BasisId(i), BasisId(i)], F::one());
        }
        Ok(v)
    }

    /// `(S⊗ι)V`.
    pub fn inverse_element(&self) -> Result<Tensor<F>> {
        let b = self.pairing.b();
        Ok(self.element()?.map_leg(0, |i| b.antipode_basis(i)))
    }

    /// `(ι⊗S)V`, which must agree with [`inverse_element`](Self::inverse_element).
    pub fn inverse_element_alt(&self) -> Result<Tensor<F>> {
        let a = self.pairing.a();
        Ok(self.element()?.map_leg(1, |i| a.antipode_basis(i)))
    }

    /// `V(b⊗a)`: with `b = φ(c·)` and `(S⁻¹(a)⊗1)Δ(c) = Σ p⊗q`, this is `Σ φ(q·)⊗S(p)`.
    pub fn left_slice(&self, b: &Element<F>, a: &Element<F>) -> Result<Tensor<F>> {
        let (p, ha) = (&self.pairing, self.pairing.a());
        let c = p.phi_left_inv(b)?;
        let pq = ha.delta_left(&ha.antipode_inv(a), &c);
        apply_bilinear(&pq, 2, |x, y| {
            Ok(Tensor::pure2(&p.phi_left(y)?, &ha.antipode(x)))
        })
    }

    /// `(b⊗a)V`: with `b = ψ(·c)` and `Δ(c)(1⊗S⁻¹(a)) = Σ p⊗q`, this is `Σ ψ(·p)⊗S(q)`.
    pub fn right_slice(&self, b: &Element<F>, a: &Element<F>) -> Result<Tensor<F>> {
        let (p, ha) = (&self.pairing, self.pairing.a());
        let c = p.psi_right_inv(b)?;
        let pq = ha.delta_right(&c, &ha.antipode_inv(a));
        apply_bilinear(&pq, 2, |x, y| {
            Ok(Tensor::pure2(&p.psi_right(x)?, &ha.antipode(y)))
        })
    }

    /// `V(1⊗u)` for a local unit `u` of `x′`, or `V` itself when finite.
    fn covered(&self, x2: &Element<F>) -> Result<Tensor<F>> {
        if self.pairing.dim().is_some() {
            return self.element();
        }
        let alg = self.pairing.a().algebra();
        let u = alg.local_unit(std::slice::from_ref(x2))?;
        let one = self.pairing.b().algebra().require_unit()?.clone();
        self.left_slice(&one, &u)
    }

    fn act_with(&self, w: &Tensor<F>, x: &Element<F>, x2: &Element<F>) -> Result<Tensor<F>> {
        let (p, a) = (&self.pairing, self.pairing.a());
        let mut out = Tensor::zero(2);
        for (ids, c) in w.terms() {
            let left = p.act_b_on_a(&Element::basis(ids[0]), x)?;
            let right = a.mul(&Element::basis(ids[1]), x2);
            out.add_scaled(&Tensor::pure2(&left, &right), c);
        }
        Ok(out)
    }

    /// `V▷(x⊗x′) = Σ (eⁱ▷x)⊗eᵢx′`.
    pub fn act(&self, x: &Element<F>, x2: &Element<F>) -> Result<Tensor<F>> {
        self.act_with(&self.covered(x2)?, x, x2)
    }

    /// `V⁻¹▷(x⊗x′)` through `(S⊗ι)V`.
    pub fn act_inverse(&self, x: &Element<F>, x2: &Element<F>) -> Result<Tensor<F>> {
        let b = self.pairing.b();
        let w = self.covered(x2)?.map_leg(0, |i| b.antipode_basis(i));
        self.act_with(&w, x, x2)
    }

    /// `T(x⊗x′) = Δ(x)(1⊗x′)`.
    pub fn t(&self, x: &Element<F>, x2: &Element<F>) -> Tensor<F> {
        self.pairing.a().delta_right(x, x2)
    }

    /// `T⁻¹(x⊗x′) = Σ x₍₁₎⊗S(x₍₂₎)x′`, from `(1⊗S⁻¹(x′))Δ(x) = Σ p⊗q` as `Σ p⊗S(q)`.
    pub fn t_inverse(&self, x: &Element<F>, x2: &Element<F>) -> Tensor<F> {
        let a = self.pairing.a();
        a.delta_left_second(&a.antipode_inv(x2), x)
            .map_leg(1, |i| a.antipode_basis(i))
    }

    /// `T` on legs `i`, `j` (0-based) of a tensor in `A⊗A⊗…`.
    pub fn t_on_legs(&self, t: &Tensor<F>, i: usize, j: usize) -> Tensor<F> {
        let a = self.pairing.a();
        let mut out = Tensor::zero(t.arity());
        for (ids, c) in t.terms() {
            let image = a.delta_right(&Element::basis(ids[i]), &Element::basis(ids[j]));
            for (pq, d) in image.terms() {
                let mut new_ids = ids.to_vec();
                new_ids[i] = pq[0];
                new_ids[j] = pq[1];
                out.add_term(new_ids, c.clone() * d.clone());
            }
        }
        out
    }

    fn show_ba(&self, t: &Tensor<F>) -> String {
        show_tensor(&self.legs_ba(), t)
    }

    fn pairs(&self) -> Vec<(BasisId, BasisId)> {
        let ids = self.pairing.a().check_ids();
        ids.iter()
            .flat_map(|&i| ids.iter().map(move |&j| (i, j)))
            .collect()
    }

    /// Slice forms, action as `T`, and (finite case) the element relations.
    pub fn suite(&self) -> Report {
        let mut r = Report::new("duality-v");
        let (p, a, b) = (&self.pairing, self.pairing.a(), self.pairing.b());
        let e = Element::<F>::basis;
        let pairs = self.pairs();
        let label = |x: BasisId, y: BasisId| format!("({}, {})", a.label(x), a.label(y));

        r.check("V acts as T", pairs.iter().copied(), |&(x, y)| {
            (self.act(&e(x), &e(y)).ok() != Some(self.t(&e(x), &e(y)))).then(|| label(x, y))
        });
        r.check("V⁻¹ acts as T⁻¹", pairs.iter().copied(), |&(x, y)| {
            (self.act_inverse(&e(x), &e(y)).ok() != Some(self.t_inverse(&e(x), &e(y))))
                .then(|| label(x, y))
        });
        r.check(
            "T⁻¹T = TT⁻¹ = id",
            pairs.iter().copied(),
            |&(x, y)| {
                let id = Tensor::basis(vec![x, y]);
                let back =
                    apply_bilinear(&self.t(&e(x), &e(y)), 2, |u, v| Ok(self.t_inverse(u, v))).ok();
                let fwd =
                    apply_bilinear(&self.t_inverse(&e(x), &e(y)), 2, |u, v| Ok(self.t(u, v))).ok();
                (back.as_ref() != Some(&id) || fwd.as_ref() != Some(&id)).then(|| label(x, y))
            },
        );

        let b_ids = b.check_ids();
        let a_ids = a.check_ids();
        let mut quads = Vec::new();
        for &b1 in &b_ids {
            for &a1 in &a_ids {
                for &b2 in &b_ids {
                    for &a2 in &a_ids {
                        quads.push((b1, a1, b2, a2));
                    }
                }
            }
        }
        if self.pairing.dim().is_none() {
            // Both slice forms are only cheap on a small corner of the window.
            quads.retain(|q| [q.0, q.1, q.2, q.3].iter().all(|i| i.0.abs() <= 1));
        }
        let legs = self.legs_ba();
        r.check(
            "(b⊗a)(V(b′⊗a′)) = ((b⊗a)V)(b′⊗a′)",
            quads.iter().copied(),
            |&(b1, a1, b2, a2)| {
                let lhs = self
                    .left_slice(&e(b2), &e(a2))
                    .map(|t| tensor_mul(&legs, &Tensor::basis(vec![b1, a1]), &t));
                let rhs = self
                    .right_slice(&e(b1), &e(a1))
                    .map(|t| tensor_mul(&legs, &t, &Tensor::basis(vec![b2, a2])));
                match (lhs, rhs) {
                    (Ok(l), Ok(rr)) if l == rr => None,
                    _ => Some(format!(
                        "{}⊗{}, {}⊗{}",
                        b.label(b1),
                        a.label(a1),
                        b.label(b2),
                        a.label(a2)
                    )),
                }
            },
        );
        let ba: Vec<(BasisId, BasisId)> = b_ids
            .iter()
            .flat_map(|&i| a_ids.iter().map(move |&j| (i, j)))
            .collect();
        r.check(
            "(ε⊗ι)(V(b⊗a)) = ε(b)a",
            ba.iter().copied(),
            |&(i, j)| {
                let lhs = self
                    .left_slice(&e(i), &e(j))
                    .map(|t| t.contract_leg(0, |k| b.counit_basis(k)).to_element());
                (lhs.ok() != Some(e(j).scale(&b.counit_basis(i))))
                    .then(|| format!("{}⊗{}", b.label(i), a.label(j)))
            },
        );

        if self.pairing.dim().is_none() {
            return r;
        }
        let v = match (
            self.element(),
            self.inverse_element(),
            self.inverse_element_alt(),
        ) {
            (Ok(v), Ok(vi), Ok(vi2)) => {
                r.record("(S⊗ι)V = (ι⊗S)V", (vi != vi2).then(|| self.show_ba(&vi)));
                let one = match (b.algebra().unit(), a.algebra().unit()) {
                    (Some(x), Some(y)) => Tensor::pure2(x, y),
                    _ => {
                        r.record_error("V invertible", Error::NotUnital("A or B".into()));
                        return r;
                    }
                };
                let ok = tensor_mul(&legs, &v, &vi) == one && tensor_mul(&legs, &vi, &v) == one;
                r.record("VV⁻¹ = V⁻¹V = 1", (!ok).then(|| self.show_ba(&vi)));
                v
            }
            (Err(err), _, _) | (_, Err(err), _) | (_, _, Err(err)) => {
                r.record_error("V as an element", err);
                return r;
            }
        };
        r.check(
            "V(b⊗a) agrees with the left slice form",
            ba.iter().copied(),
            |&(i, j)| {
                let direct = tensor_mul(&legs, &v, &Tensor::basis(vec![i, j]));
                (self.left_slice(&e(i), &e(j)).ok() != Some(direct))
                    .then(|| format!("{}⊗{}", b.label(i), a.label(j)))
            },
        );
        r.check(
            "(b⊗a)V agrees with the right slice form",
            ba.iter().copied(),
            |&(i, j)| {
                let direct = tensor_mul(&legs, &Tensor::basis(vec![i, j]), &v);
                (self.right_slice(&e(i), &e(j)).ok() != Some(direct))
                    .then(|| format!("{}⊗{}", b.label(i), a.label(j)))
            },
        );

        let counit_a = v.contract_leg(0, |k| b.counit_basis(k)).to_element();
        let counit_b = v.contract_leg(1, |k| a.counit_basis(k)).to_element();
        let ok = Some(&counit_a) == a.algebra().unit() && Some(&counit_b) == b.algebra().unit();
        r.record(
            "(ε⊗ι)V = 1 and (ι⊗ε)V = 1",
            (!ok).then(|| format!("{counit_a:?}, {counit_b:?}")),
        );
        let ab: Vec<(BasisId, BasisId)> = a_ids
            .iter()
            .flat_map(|&i| b_ids.iter().map(move |&j| (i, j)))
            .collect();
        r.check(
            "⟨V, a⊗b⟩ = ⟨a, b⟩",
            ab.iter().copied(),
            |&(i, j)| {
                let mut paired = F::zero();
                for (ids, c) in v.terms() {
                    paired =
                        paired + c.clone() * p.eval(&e(i), &e(ids[0])) * p.eval(&e(ids[1]), &e(j));
                }
                (paired != p.eval(&e(i), &e(j))).then(|| format!("{}⊗{}", a.label(i), b.label(j)))
            },
        );

        let three_bab = [b.algebra(), a.algebra(), a.algebra()];
        let three_bba = [b.algebra(), b.algebra(), a.algebra()];
        let lhs = v.expand_leg(1, 2, |i| {
            a.coproduct(&e(i)).unwrap_or_else(|_| Tensor::zero(2))
        });
        let rhs = leg_embed(&v, &[1, 2], 3, &three_bab).and_then(|v12| {
            Ok(tensor_mul(
                &three_bab,
                &v12,
                &leg_embed(&v, &[1, 3], 3, &three_bab)?,
            ))
        });
        r.record(
            "(ι⊗Δ)V = V₁₂V₁₃",
            (rhs.as_ref().ok() != Some(&lhs)).then(|| format!("{rhs:?}")),
        );
        let lhs = v.expand_leg(0, 2, |i| {
            b.coproduct(&e(i)).unwrap_or_else(|_| Tensor::zero(2))
        });
        let rhs = leg_embed(&v, &[1, 3], 3, &three_bba).and_then(|v13| {
            Ok(tensor_mul(
                &three_bba,
                &v13,
                &leg_embed(&v, &[2, 3], 3, &three_bba)?,
            ))
        });
        r.record(
            "(Δ⊗ι)V = V₁₃V₂₃",
            (rhs.as_ref().ok() != Some(&lhs)).then(|| format!("{rhs:?}")),
        );

        match Realized::new(self) {
            Ok(real) => real.checks(self, &v, &mut r),
            Err(err) => {
                r.record_error("realization in End(A)", err);
            }
        }
        r
    }

    /// `T₂₃T₁₂ = T₁₂T₁₃T₂₃` on basis triples of `A⊗A⊗A`, and (finite case)
    /// `V₁₂V₁₃V₂₃ = V₂₃V₁₂` in `B⊗End(A)⊗A`.
    pub fn pentagon_suite(&self) -> Report {
        let mut r = Report::new("pentagon");
        let ids = self.pairing.a().check_ids();
        let a = self.pairing.a();
        let mut triples = Vec::new();
        for &x in &ids {
            for &y in &ids {
                for &z in &ids {
                    triples.push((x, y, z));
                }
            }
        }
        r.check(
            "T₂₃T₁₂ = T₁₂T₁₃T₂₃",
            triples.iter().copied(),
            |&(x, y, z)| {
                let t = Tensor::basis(vec![x, y, z]);
                let lhs = self.t_on_legs(&self.t_on_legs(&t, 0, 1), 1, 2);
                let rhs = self.t_on_legs(&self.t_on_legs(&self.t_on_legs(&t, 1, 2), 0, 2), 0, 1);
                (lhs != rhs).then(|| format!("{}⊗{}⊗{}", a.label(x), a.label(y), a.label(z)))
            },
        );
        if self.pairing.dim().is_none() {
            return r;
        }
        match (self.element(), Realized::new(self)) {
            (Ok(v), Ok(real)) => {
                let legs = [self.pairing.b().algebra(), &real.end, a.algebra()];
                let run = || -> Result<bool> {
                    let v12 = leg_embed(&real.on_second(&v), &[1, 2], 3, &legs)?;
                    let v13 = leg_embed(&v, &[1, 3], 3, &legs)?;
                    let v23 = leg_embed(&real.on_first(&v), &[2, 3], 3, &legs)?;
                    let lhs = tensor_mul(&legs, &tensor_mul(&legs, &v12, &v13), &v23);
                    let rhs = tensor_mul(&legs, &v23, &v12);
                    Ok(lhs == rhs)
                };
                match run() {
                    Ok(ok) => {
                        r.record(
                            "V₁₂V₁₃V₂₃ = V₂₃V₁₂",
                            (!ok).then(|| "B⊗End(A)⊗A".to_string()),
                        );
                    }
                    Err(err) => {
                        r.record_error("V₁₂V₁₃V₂₃ = V₂₃V₁₂", err);
                    }
                }
            }
            (Err(err), _) | (_, Err(err)) => {
                r.record_error("V₁₂V₁₃V₂₃ = V₂₃V₁₂", err);
            }
        }
        r
    }
}

/// Both algebras acting on finite `A`, as elements of `End(A)`.
struct Realized<F> {
    end: Algebra<F>,
    of_a: Vec<Element<F>>,
    of_b: Vec<Element<F>>,
}

impl<F: Scalar> Realized<F> {
    fn new(v: &DualityElement<F>) -> Result<Self> {
        let p = &v.pairing;
        let n = p.a().algebra().require_dim()?;
        let e = Element::<F>::basis;
        let mut of_a = Vec::new();
        let mut of_b = Vec::new();
        for i in 0..n as i64 {
            let ma = map_matrix(n, |j| p.a().mul(&e(BasisId(i)), &e(j)));
            of_a.push(Heisenberg::realize(&ma));
            let cols = (0..n as i64)
                .map(|j| p.act_b_on_a(&e(BasisId(i)), &e(BasisId(j))))
                .collect::<Result<Vec<_>>>()?;
            of_b.push(Heisenberg::realize(&crate::linalg::Matrix::from_columns(
                n, &cols,
            )));
        }
        Ok(Realized {
            end: Algebra::matrix_algebra(n),
            of_a,
            of_b,
        })
    }

    /// Realizes leg 0 (a `B` leg) in `End(A)`.
    fn on_first(&self, t: &Tensor<F>) -> Tensor<F> {
        t.map_leg(0, |i| self.of_b[i.index()].clone())
    }

    /// Realizes leg 1 (an `A` leg) in `End(A)`.
    fn on_second(&self, t: &Tensor<F>) -> Tensor<F> {
        t.map_leg(1, |i| self.of_a[i.index()].clone())
    }

    fn checks(&self, dv: &DualityElement<F>, v: &Tensor<F>, r: &mut Report) {
        let (a, b) = (dv.pairing.a(), dv.pairing.b());
        let e = Element::<F>::basis;
        let (one_a, one_b) = match (a.algebra().unit(), b.algebra().unit()) {
            (Some(x), Some(y)) => (x.clone(), y.clone()),
            _ => return,
        };
        let Some(one_end) = self.end.unit().cloned() else {
            return;
        };
        let vi = v.map_leg(0, |i| b.antipode_basis(i));

        // End(A)⊗A with V's first leg realized.
        let ea = [&self.end, a.algebra()];
        let pv = self.on_first(v);
        let pvi = self.on_first(&vi);
        let ids = a.check_ids();
        r.check(
            "Δ(a)V = V(a⊗1) in End(A)⊗A",
            ids.iter().copied(),
            |&i| {
                let delta = a
                    .coproduct(&e(i))
                    .ok()?
                    .map_leg(0, |k| self.of_a[k.index()].clone());
                let lhs = tensor_mul(&ea, &delta, &pv);
                let rhs = tensor_mul(&ea, &pv, &Tensor::pure2(&self.of_a[i.index()], &one_a));
                (lhs != rhs).then(|| a.label(i))
            },
        );
        r.check(
            "Δ(a) = V(a⊗1)V⁻¹ in End(A)⊗A",
            ids.iter().copied(),
            |&i| {
                let delta = a
                    .coproduct(&e(i))
                    .ok()?
                    .map_leg(0, |k| self.of_a[k.index()].clone());
                let conj = tensor_mul(
                    &ea,
                    &tensor_mul(&ea, &pv, &Tensor::pure2(&self.of_a[i.index()], &one_a)),
                    &pvi,
                );
                (delta != conj).then(|| a.label(i))
            },
        );

        // B⊗End(A) with V's second leg realized.
        let be = [b.algebra(), &self.end];
        let qv = self.on_second(v);
        let qvi = self.on_second(&vi);
        let b_ids = b.check_ids();
        r.check(
            "VΔ(b) = (1⊗b)V in B⊗End(A)",
            b_ids.iter().copied(),
            |&i| {
                let delta = b
                    .coproduct(&e(i))
                    .ok()?
                    .map_leg(1, |k| self.of_b[k.index()].clone());
                let lhs = tensor_mul(&be, &qv, &delta);
                let rhs = tensor_mul(&be, &Tensor::pure2(&one_b, &self.of_b[i.index()]), &qv);
                (lhs != rhs).then(|| b.label(i))
            },
        );
        r.check(
            "Δ(b) = V⁻¹(1⊗b)V in B⊗End(A)",
            b_ids.iter().copied(),
            |&i| {
                let delta = b
                    .coproduct(&e(i))
                    .ok()?
                    .map_leg(1, |k| self.of_b[k.index()].clone());
                let conj = tensor_mul(
                    &be,
                    &tensor_mul(&be, &qvi, &Tensor::pure2(&one_b, &self.of_b[i.index()])),
                    &qv,
                );
                (delta != conj).then(|| b.label(i))
            },
        );
        let unit_ok = self.realize_a(&one_a) == one_end && self.realize_b(&one_b) == one_end;
        r.record(
            "units realize as the identity",
            (!unit_ok).then(|| "1".to_string()),
        );
    }

    fn realize_a(&self, x: &Element<F>) -> Element<F> {
        x.map_linear(|i| self.of_a[i.index()].clone())
    }

    fn realize_b(&self, x: &Element<F>) -> Element<F> {
        x.map_linear(|i| self.of_b[i.index()].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Builtin};
    use crate::cyclotomic::Cyclotomic as Q;
    use crate::dual::DualPair;

    fn finite(name: &str) -> DualityElement<Q> {
        let Builtin::Hopf(h) = catalog::builtin::<Q>(name, 3).unwrap() else {
            unreachable!()
        };
        DualityElement::new(DualPair::build(&h).unwrap().pairing)
    }

    #[test]
    fn integer_slice_by_hand() {
        // V = Σ_j l_j⊗d_j, so V(l_m⊗d_k) = l_{m+k}⊗d_k.
        let v = DualityElement::new(catalog::integers_pair::<Q>(3));
        for m in -2..=2 {
            for k in -2..=2 {
                let got = v
                    .left_slice(&Element::basis(BasisId(m)), &Element::basis(BasisId(k)))
                    .unwrap();
                assert_eq!(
                    got,
                    Tensor::basis(vec![BasisId(m + k), BasisId(k)]),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn integer_pair_has_no_element() {
        let v = DualityElement::new(catalog::integers_pair::<Q>(3));
        assert!(matches!(v.element(), Err(Error::NotAnElement(_))));
    }

    #[test]
    fn group_v_acts_as_g_tensor_gh() {
        // On ℂ[G]: T(g⊗h) = g⊗gh.
        let v = finite("group:s3");
        let a = v.pairing().a().algebra().clone();
        for g in 0..6 {
            for h in 0..6 {
                let (g, h) = (BasisId(g), BasisId(h));
                let gh = a.basis_product(g, h);
                let got = v.act(&Element::basis(g), &Element::basis(h)).unwrap();
                assert_eq!(got, Tensor::pure2(&Element::basis(g), &gh));
            }
        }
    }

    #[test]
    fn suites_pass() {
        for name in ["group:z2", "group:s3", "function:s3", "h4", "taft:3"] {
            let v = finite(name);
            let r = v.suite();
            assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
            let r = v.pentagon_suite();
            assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn integer_pair_suites_pass() {
        let v = DualityElement::new(catalog::integers_pair::<Q>(3));
        let r = v.suite();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        let r = v.pentagon_suite();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.checks[0].cases, 343);
    }

    #[test]
    fn wrong_t_breaks_the_pentagon() {
        // T′(g⊗h) = g⊗g⁻¹h fails the pentagon: the two sides end in h⁻¹gk
        // and g⁻¹h⁻¹k.
        let v = finite("group:s3");
        let a = v.pairing().a().clone();
        let bad = |t: &Tensor<Q>, i: usize, j: usize| {
            let mut out = Tensor::zero(3);
            for (ids, c) in t.terms() {
                let mut n = ids.to_vec();
                let prod = a.mul(&a.antipode_basis(ids[i]), &Element::basis(ids[j]));
                let (k, _) = prod.terms().next().unwrap();
                n[j] = k;
                out.add_term(n, c.clone());
            }
            out
        };
        let t = Tensor::basis(vec![BasisId(1), BasisId(3), BasisId(4)]);
        let lhs = bad(&bad(&t, 0, 1), 1, 2);
        let rhs = bad(&bad(&bad(&t, 1, 2), 0, 2), 0, 1);
        assert_ne!(lhs, rhs);
        let good_l = v.t_on_legs(&v.t_on_legs(&t, 0, 1), 1, 2);
        let good_r = v.t_on_legs(&v.t_on_legs(&v.t_on_legs(&t, 1, 2), 0, 2), 0, 1);
        assert_eq!(good_l, good_r);
    }
}
