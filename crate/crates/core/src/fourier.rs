//! Fourier transforms between a finite `A` and its dual `B`.

use crate::dual::DualPair;
use crate::duality::apply_bilinear;
use crate::element::{BasisId, Element, Tensor};
use crate::error::Result;
use crate::hopf::{map_matrix, tensor_rank};
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct Fourier<F> {
    dp: DualPair<F>,
}

impl<F: Scalar> Fourier<F> {
    pub fn new(dp: DualPair<F>) -> Self {
        Fourier { dp }
    }

    pub fn dual_pair(&self) -> &DualPair<F> {
        &self.dp
    }

    fn ids(&self) -> Vec<BasisId> {
        (0..self.dp.dim() as i64).map(BasisId).collect()
    }

    /// `ℱ(x) = ψ(S(·)x)`, with coordinates `ψ(S(eᵢ)x)`.
    pub fn transform(&self, x: &Element<F>) -> Element<F> {
        let a = self.dp.a();
        let psi = &self.dp.modular.psi;
        Element::from_terms(
            self.ids()
                .into_iter()
                .map(|i| (i, psi.eval(&a.mul(&a.antipode_basis(i), x)))),
        )
    }

    /// `ℱ⁻¹(b) = Σ φ̂(eⁱb) eᵢ`.
    pub fn inverse(&self, b: &Element<F>) -> Element<F> {
        let hb = self.dp.b();
        Element::from_terms(
            self.ids()
                .into_iter()
                .map(|i| (i, self.dp.phi_hat.eval(&hb.mul(&Element::basis(i), b)))),
        )
    }

    /// `ℱ′(a) = φ(·a)`, with coordinates `φ(eᵢa)`.
    pub fn transform_alt(&self, x: &Element<F>) -> Element<F> {
        let a = self.dp.a();
        let phi = &self.dp.modular.phi;
        Element::from_terms(
            self.ids()
                .into_iter()
                .map(|i| (i, phi.eval(&a.mul(&Element::basis(i), x)))),
        )
    }

    /// `ℱ′⁻¹(b) = Σ ψ̂(S(eⁱ)b) eᵢ`.
    pub fn inverse_alt(&self, b: &Element<F>) -> Element<F> {
        let hb = self.dp.b();
        Element::from_terms(
            self.ids()
                .into_iter()
                .map(|i| (i, self.dp.psi_hat.eval(&hb.mul(&hb.antipode_basis(i), b)))),
        )
    }

    /// `W(y⊗y′) = Δ(y′)(y⊗1)`.
    pub fn w_map(&self, y: &Element<F>, y2: &Element<F>) -> Tensor<F> {
        self.dp.b().delta_right_first(y2, y)
    }

    /// `W⁻¹(y⊗y′) = Σ S⁻¹(y′₍₁₎)y⊗y′₍₂₎`, from `(S(y)⊗1)Δ(y′)`.
    pub fn w_inverse(&self, y: &Element<F>, y2: &Element<F>) -> Tensor<F> {
        let b = self.dp.b();
        b.delta_left(&b.antipode(y), y2)
            .map_leg(0, |i| b.antipode_inv_basis(i))
    }

    /// `(ℱ⊗ℱ)(Δ(x)(1⊗x′))`.
    pub fn transformed_slice(&self, x: &Element<F>, x2: &Element<F>) -> Tensor<F> {
        let t = self.dp.a().delta_right(x, x2);
        t.map_leg(0, |i| self.transform(&Element::basis(i)))
            .map_leg(1, |i| self.transform(&Element::basis(i)))
    }

    /// Inversion, convolution, the transformed coproduct and the Plancherel formula.
    pub fn suite(&self) -> Report {
        let mut r = Report::new("fourier");
        let (a, b, p) = (self.dp.a(), self.dp.b(), &self.dp.pairing);
        let e = Element::<F>::basis;
        let ids = self.ids();
        let n = ids.len();
        let pairs: Vec<(BasisId, BasisId)> = ids
            .iter()
            .flat_map(|&i| ids.iter().map(move |&j| (i, j)))
            .collect();

        let images: Vec<Tensor<F>> = ids
            .iter()
            .map(|&i| Tensor::from_element(&self.transform(&e(i))))
            .collect();
        let rank = tensor_rank(&images);
        r.record(
            "ℱ is bijective",
            (rank != n).then(|| format!("rank {rank} of {n}")),
        );
        r.check("ℱ⁻¹ℱ = id on A", ids.iter().copied(), |&i| {
            (self.inverse(&self.transform(&e(i))) != e(i)).then(|| a.label(i))
        });
        r.check("ℱℱ⁻¹ = id on B", ids.iter().copied(), |&i| {
            (self.transform(&self.inverse(&e(i))) != e(i)).then(|| b.label(i))
        });
        r.check("ℱ′⁻¹ℱ′ = id on A", ids.iter().copied(), |&i| {
            (self.inverse_alt(&self.transform_alt(&e(i))) != e(i)).then(|| a.label(i))
        });
        r.check("ℱ′ℱ′⁻¹ = id on B", ids.iter().copied(), |&i| {
            (self.transform_alt(&self.inverse_alt(&e(i))) != e(i)).then(|| b.label(i))
        });
        r.check("ℱ(x) = ψ(S(·)x)", ids.iter().copied(), |&i| {
            (p.psi_antipode(&e(i)).ok() != Some(self.transform(&e(i)))).then(|| a.label(i))
        });
        r.check("ℱ′(a) = φ(·a)", ids.iter().copied(), |&i| {
            (p.phi_right(&e(i)).ok() != Some(self.transform_alt(&e(i)))).then(|| a.label(i))
        });

        r.check(
            "ℱ(ax) = ℱ(x)◁S⁻¹(a)",
            pairs.iter().copied(),
            |&(i, j)| {
                let lhs = self.transform(&a.mul(&e(i), &e(j)));
                let rhs = p
                    .act_b_right_a(&self.transform(&e(j)), &a.antipode_inv_basis(i))
                    .ok();
                (rhs != Some(lhs)).then(|| format!("a={}, x={}", a.label(i), a.label(j)))
            },
        );
        r.check("ℱ(b▷x) = bℱ(x)", pairs.iter().copied(), |&(i, j)| {
            let lhs = p.act_b_on_a(&e(i), &e(j)).map(|y| self.transform(&y)).ok();
            let rhs = b.mul(&e(i), &self.transform(&e(j)));
            (lhs != Some(rhs)).then(|| format!("b={}, x={}", b.label(i), a.label(j)))
        });

        r.check(
            "(ℱ⊗ℱ)(Δ(x)(1⊗x′)) = W⁻¹(ℱx⊗ℱx′)",
            pairs.iter().copied(),
            |&(i, j)| {
                let lhs = self.transformed_slice(&e(i), &e(j));
                let fx = Tensor::pure2(&self.transform(&e(i)), &self.transform(&e(j)));
                let rhs = apply_bilinear(&fx, 2, |y, y2| Ok(self.w_inverse(y, y2))).ok();
                (rhs != Some(lhs)).then(|| format!("({}, {})", a.label(i), a.label(j)))
            },
        );
        r.check(
            "WW⁻¹ = W⁻¹W = id on B⊗B",
            pairs.iter().copied(),
            |&(i, j)| {
                let id = Tensor::basis(vec![i, j]);
                let fwd = apply_bilinear(&self.w_inverse(&e(i), &e(j)), 2, |y, y2| {
                    Ok(self.w_map(y, y2))
                })
                .ok();
                let back = apply_bilinear(&self.w_map(&e(i), &e(j)), 2, |y, y2| {
                    Ok(self.w_inverse(y, y2))
                })
                .ok();
                (fwd.as_ref() != Some(&id) || back.as_ref() != Some(&id))
                    .then(|| format!("({}, {})", b.label(i), b.label(j)))
            },
        );

        r.check(
            "Plancherel ψ̂(ℱ′(a)ℱ′(a′)) = φ(S⁻¹(a′)a)",
            pairs.iter().copied(),
            |&(i, j)| {
                let lhs = self
                    .dp
                    .psi_hat
                    .eval(&b.mul(&self.transform_alt(&e(i)), &self.transform_alt(&e(j))));
                let rhs = self
                    .dp
                    .modular
                    .phi
                    .eval(&a.mul(&a.antipode_inv_basis(j), &e(i)));
                (lhs != rhs).then(|| format!("({}, {})", a.label(i), a.label(j)))
            },
        );
        r
    }

    /// Matrix of `ℱ` in the dual bases.
    pub fn matrix(&self) -> crate::linalg::Matrix<F> {
        map_matrix(self.dp.dim(), |i| self.transform(&Element::basis(i)))
    }

    /// Applies `ℱ` or `ℱ′` (or an inverse) by name.
    pub fn apply_named(&self, which: Variant, x: &Element<F>) -> Result<Element<F>> {
        self.dp.a().algebra().validate(x)?;
        Ok(match which {
            Variant::Forward => self.transform(x),
            Variant::Inverse => self.inverse(x),
            Variant::Alt => self.transform_alt(x),
            Variant::AltInverse => self.inverse_alt(x),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Forward,
    Inverse,
    Alt,
    AltInverse,
}
