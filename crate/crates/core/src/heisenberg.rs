//! The Heisenberg algebra of a pairing, on the vector space `A ⊗ B`.
//!
//! Elements are two-leg tensors with `A` in the first leg and `B` in the
//! second; `a⊗b` stands for the product `j_A(a) j_B(b)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::dual::Pairing;
use crate::element::{BasisId, Element, Tensor};
use crate::error::{Error, Result};
use crate::hopf::{map_matrix, tensor_rank};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalar::Scalar;

/// Sampled triples per pair in the associativity check.
pub const SAMPLED_TRIPLES: usize = 100;

#[derive(Clone)]
pub struct Heisenberg<F> {
    pairing: Pairing<F>,
}

fn bilinear<F: Scalar>(
    x: &Tensor<F>,
    y: &Tensor<F>,
    mut f: impl FnMut(&[BasisId], &[BasisId]) -> Result<Tensor<F>>,
) -> Result<Tensor<F>> {
    let mut out = Tensor::zero(2);
    for (i, c) in x.terms() {
        for (j, d) in y.terms() {
            out.add_scaled(&f(i, j)?, &(c.clone() * d.clone()));
        }
    }
    Ok(out)
}

impl<F: Scalar> Heisenberg<F> {
    pub fn new(pairing: Pairing<F>) -> Self {
        Heisenberg { pairing }
    }

    pub fn pairing(&self) -> &Pairing<F> {
        &self.pairing
    }

    /// `(a⊗b)(a′⊗b′) = Σ ⟨a′₍₂₎, b₍₁₎⟩ aa′₍₁₎ ⊗ b₍₂₎b′`.
    pub fn mul(&self, x: &Tensor<F>, y: &Tensor<F>) -> Result<Tensor<F>> {
        let (a, b) = (self.pairing.a(), self.pairing.b());
        bilinear(x, y, |i, j| {
            // (a⊗1)Δ(a′) = Σ p⊗q and Δ(b)(1⊗b′) = Σ r⊗s.
            let left = a.delta_left(&Element::basis(i[0]), &Element::basis(j[0]));
            let right = b.delta_right(&Element::basis(i[1]), &Element::basis(j[1]));
            let mut out = Tensor::zero(2);
            for (pq, c) in left.terms() {
                for (rs, d) in right.terms() {
                    if pq[1] == rs[0] {
                        out.add_term(vec![pq[0], rs[1]], c.clone() * d.clone());
                    }
                }
            }
            Ok(out)
        })
    }

    /// `j_A(a) = a⊗1`; needs a unital `B`.
    pub fn j_a(&self, a: &Element<F>) -> Result<Tensor<F>> {
        let one = self.pairing.b().algebra().require_unit()?;
        Ok(Tensor::pure2(a, one))
    }

    /// `j_B(b) = 1⊗b`; needs a unital `A`.
    pub fn j_b(&self, b: &Element<F>) -> Result<Tensor<F>> {
        let one = self.pairing.a().algebra().require_unit()?;
        Ok(Tensor::pure2(one, b))
    }

    /// `(a⊗b)▷x = a(b▷x)`.
    pub fn act(&self, t: &Tensor<F>, x: &Element<F>) -> Result<Element<F>> {
        let a = self.pairing.a();
        let mut out = Element::zero();
        for (ids, c) in t.terms() {
            let y = self.pairing.act_b_on_a(&Element::basis(ids[1]), x)?;
            out.add_scaled(&a.mul(&Element::basis(ids[0]), &y), c);
        }
        Ok(out)
    }

    /// `Σ_k (b₍₁₎ ▷ a)⊗b₍₂₎` with `b₍₁₎` optionally passed through `S⁻¹` first.
    fn r_generic(&self, t: &Tensor<F>, inverse: bool) -> Result<Tensor<F>> {
        let (pa, b) = (&self.pairing, self.pairing.b());
        let mut out = Tensor::zero(2);
        for (ids, c) in t.terms() {
            let delta = b.coproduct(&Element::basis(ids[1]))?;
            for (rs, d) in delta.terms() {
                let mut r = Element::basis(rs[0]);
                if inverse {
                    r = b.antipode_inv(&r);
                }
                let acted = pa.act_b_on_a(&r, &Element::basis(ids[0]))?;
                let s = Element::basis(rs[1]);
                out.add_scaled(&Tensor::pure2(&acted, &s), &(c.clone() * d.clone()));
            }
        }
        Ok(out)
    }

    /// `R(a⊗b) = Σ ⟨a₍₂₎, b₍₁₎⟩ a₍₁₎⊗b₍₂₎`, so that `j_B(b)j_A(a) = R(a⊗b)`.
    pub fn r_map(&self, t: &Tensor<F>) -> Result<Tensor<F>> {
        self.r_generic(t, false)
    }

    /// `R⁻¹(a⊗b) = Σ (S⁻¹(b₍₁₎) ▷ a)⊗b₍₂₎`.
    pub fn r_inv(&self, t: &Tensor<F>) -> Result<Tensor<F>> {
        self.r_generic(t, true)
    }

    /// Matrix of `x ↦ t▷x` on finite `A`.
    pub fn operator(&self, t: &Tensor<F>) -> Result<Matrix<F>> {
        let n = self.pairing.a().algebra().require_dim()?;
        let cols = (0..n as i64)
            .map(|j| self.act(t, &Element::basis(BasisId(j))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(n, &cols))
    }

    /// Rank-one form `Σ aᵢ⊗bᵢ` of `t`, meaning the operator `x ↦ Σ aᵢ⟨x, bᵢ⟩`:
    /// writing `b = φ(c·)`, `a⊗b ↦ Σ aS(c₍₁₎) ⊗ φ(c₍₂₎·)`.
    pub fn to_rank_one(&self, t: &Tensor<F>) -> Result<Tensor<F>> {
        let (p, a) = (&self.pairing, self.pairing.a());
        let mut out = Tensor::zero(2);
        for (ids, coef) in t.terms() {
            let c = p.phi_left_inv(&Element::basis(ids[1]))?;
            let left = Element::basis(ids[0]);
            for (kl, d) in a.coproduct(&c)?.terms() {
                let x = a.mul(&left, &a.antipode_basis(kl[0]));
                let y = p.phi_left(&Element::basis(kl[1]))?;
                out.add_scaled(&Tensor::pure2(&x, &y), &(coef.clone() * d.clone()));
            }
        }
        Ok(out)
    }

    /// Matrix of the rank-one operator `x ↦ Σ aᵢ⟨x, bᵢ⟩`.
    pub fn rank_one_matrix(&self, r: &Tensor<F>) -> Result<Matrix<F>> {
        let n = self.pairing.a().algebra().require_dim()?;
        Ok(map_matrix(n, |j| {
            let mut out = Element::zero();
            for (ids, c) in r.terms() {
                // ⟨e_j, bᵢ⟩ on dual bases is the coefficient of bᵢ at j.
                if ids[1] == j {
                    out.add_term(ids[0], c.clone());
                }
            }
            out
        }))
    }

    /// `(a₁⊗b₁)⋄(a₂⊗b₂) = ⟨a₂, b₁⟩ a₁⊗b₂`, composition of rank-one operators.
    pub fn diamond(&self, x: &Tensor<F>, y: &Tensor<F>) -> Tensor<F> {
        let mut out = Tensor::zero(2);
        for (i, c) in x.terms() {
            for (j, d) in y.terms() {
                if j[0] == i[1] {
                    out.add_term(vec![i[0], j[1]], c.clone() * d.clone());
                }
            }
        }
        out
    }

    /// An operator on finite `A` as an element of `End(A)`, with `E_ij` at `i·n + j`.
    pub fn realize(m: &Matrix<F>) -> Element<F> {
        let n = m.rows();
        let mut out = Element::zero();
        for i in 0..n {
            for j in 0..n {
                out.add_term(BasisId((i * n + j) as i64), m.get(i, j).clone());
            }
        }
        out
    }

    /// `End(A)` for finite `A`.
    pub fn operator_algebra(&self) -> Result<Algebra<F>> {
        Ok(Algebra::matrix_algebra(
            self.pairing.a().algebra().require_dim()?,
        ))
    }

    fn basis_tensors(&self) -> Vec<Tensor<F>> {
        let ids = self.pairing.a().check_ids();
        ids.iter()
            .flat_map(|&i| ids.iter().map(move |&j| Tensor::basis(vec![i, j])))
            .collect()
    }

    fn random_tensor(&self, rng: &mut ChaCha8Rng) -> Tensor<F> {
        let ids = self.pairing.a().check_ids();
        let mut t = Tensor::zero(2);
        for _ in 0..rng.gen_range(1..=3) {
            let i = ids[rng.gen_range(0..ids.len())];
            let j = ids[rng.gen_range(0..ids.len())];
            t.add_term(vec![i, j], F::from_i64(rng.gen_range(-3..=3)));
        }
        t
    }

    fn show(&self, t: &Tensor<F>) -> String {
        let legs = [self.pairing.a().algebra(), self.pairing.b().algebra()];
        crate::algebra::show_tensor(&legs, t)
    }

    /// Associativity, module law, faithfulness, `R`, and (finite case) the
    /// rank-one realization and the commutation rule.
    pub fn suite(&self, seed: u64) -> Report {
        let mut r = Report::new("heisenberg");
        let basis = self.basis_tensors();
        let dim = self.pairing.dim();
        let ids = self.pairing.a().check_ids();
        let e = Element::<F>::basis;

        let exhaustive = dim.is_some_and(|n| n <= 4) || dim.is_none();
        let mut triples: Vec<(Tensor<F>, Tensor<F>, Tensor<F>)> = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_TRIPLES {
            triples.push((
                self.random_tensor(&mut rng),
                self.random_tensor(&mut rng),
                self.random_tensor(&mut rng),
            ));
        }
        if exhaustive && dim.is_some() {
            for x in &basis {
                for y in &basis {
                    for z in &basis {
                        triples.push((x.clone(), y.clone(), z.clone()));
                    }
                }
            }
        }
        r.check("associativity", &triples, |(x, y, z)| {
            let lhs = self.mul(&self.mul(x, y).ok()?, z).ok()?;
            let rhs = self.mul(x, &self.mul(y, z).ok()?).ok()?;
            (lhs != rhs).then(|| format!("{}; {}; {}", self.show(x), self.show(y), self.show(z)))
        });

        let mut action_cases = Vec::new();
        for u in &basis {
            for v in &basis {
                for &x in &ids {
                    action_cases.push((u.clone(), v.clone(), x));
                }
            }
        }
        r.check(
            "module action (uv)▷x = u▷(v▷x)",
            action_cases,
            |(u, v, x)| {
                let uv = match self.mul(u, v) {
                    Ok(t) => t,
                    Err(err) => return Some(err.to_string()),
                };
                let lhs = self.act(&uv, &e(*x)).ok();
                let rhs = self.act(v, &e(*x)).and_then(|y| self.act(u, &y)).ok();
                (lhs != rhs || lhs.is_none()).then(|| {
                    format!(
                        "{}; {}; {}",
                        self.show(u),
                        self.show(v),
                        self.pairing.a().label(*x)
                    )
                })
            },
        );

        r.check("R⁻¹∘R = R∘R⁻¹ = id", &basis, |t| {
            let ok = self.r_map(t).and_then(|x| self.r_inv(&x)).ok().as_ref() == Some(t)
                && self.r_inv(t).and_then(|x| self.r_map(&x)).ok().as_ref() == Some(t);
            (!ok).then(|| self.show(t))
        });
        r.check("j_B(b)j_A(a) = R(a⊗b)", &basis, |t| {
            let (ids, _) = t.terms().next().expect("basis tensor");
            let (a, b) = (e(ids[0]), e(ids[1]));
            let lhs = self
                .j_b(&b)
                .and_then(|jb| self.j_a(&a).and_then(|ja| self.mul(&jb, &ja)));
            let rhs = self.r_map(t);
            match (lhs, rhs) {
                (Ok(l), Ok(rr)) if l == rr => None,
                // A non-unital A has no j_B; check b▷(ax) = R(a⊗b)▷x instead.
                (Err(Error::NotUnital(_)), Ok(rr)) => {
                    let p = &self.pairing;
                    let bad = ids.iter().find(|&&x| {
                        let lhs = p.act_b_on_a(&b, &p.a().mul(&a, &e(x))).ok();
                        lhs.is_none() || lhs != self.act(&rr, &e(x)).ok()
                    });
                    bad.map(|_| self.show(t))
                }
                _ => Some(self.show(t)),
            }
        });

        let Some(n) = dim else {
            return r;
        };

        let ops: Vec<Matrix<F>> = match basis.iter().map(|t| self.operator(t)).collect() {
            Ok(ops) => ops,
            Err(err) => {
                r.record_error("operators", err);
                return r;
            }
        };
        let as_tensors: Vec<Tensor<F>> = ops
            .iter()
            .map(|m| Tensor::from_element(&Self::realize(m)))
            .collect();
        let rank = tensor_rank(&as_tensors);
        r.record(
            "faithful action (trivial kernel)",
            (rank != n * n).then(|| format!("kernel of dimension {}", n * n - rank)),
        );
        r.record(
            "realized operator algebra has dimension (dim A)²",
            (rank != n * n).then(|| format!("dimension {rank}, expected {}", n * n)),
        );

        let rank_one: Vec<Tensor<F>> = match basis.iter().map(|t| self.to_rank_one(t)).collect() {
            Ok(v) => v,
            Err(err) => {
                r.record_error("rank-one form", err);
                return r;
            }
        };
        r.check("operator equals its rank-one form", 0..basis.len(), |&k| {
            (self.rank_one_matrix(&rank_one[k]).ok().as_ref() != Some(&ops[k]))
                .then(|| self.show(&basis[k]))
        });
        let pairs: Vec<(usize, usize)> = (0..basis.len())
            .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
            .collect();
        r.check("realization multiplicative", pairs, |&(i, j)| {
            let lhs = self
                .mul(&basis[i], &basis[j])
                .and_then(|t| self.to_rank_one(&t))
                .ok();
            let rhs = self.diamond(&rank_one[i], &rank_one[j]);
            (lhs.as_ref() != Some(&rhs))
                .then(|| format!("{}; {}", self.show(&basis[i]), self.show(&basis[j])))
        });
        r.check("commutation rule as matrices", &basis, |t| {
            let (ids, _) = t.terms().next().expect("basis tensor");
            let jb = self.j_b(&e(ids[1])).and_then(|x| self.operator(&x));
            let ja = self.j_a(&e(ids[0])).and_then(|x| self.operator(&x));
            let rr = self.r_map(t).and_then(|x| self.operator(&x));
            match (jb, ja, rr) {
                (Ok(jb), Ok(ja), Ok(rr)) if jb.mul(&ja) == rr => None,
                _ => Some(self.show(t)),
            }
        });
        r.record(
            "identity maps to the identity matrix",
            match self.j_a(
                self.pairing
                    .a()
                    .algebra()
                    .unit()
                    .unwrap_or(&Element::zero()),
            ) {
                Ok(one) if self.operator(&one).is_ok_and(|m| m.is_identity()) => None,
                _ => Some("1⊗1".to_string()),
            },
        );
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Group};
    use crate::cyclotomic::Cyclotomic as Q;
    use crate::dual::DualPair;

    fn z2_pair() -> Heisenberg<Q> {
        let dp = DualPair::build(&catalog::group_algebra::<Q>(&Group::cyclic(2))).unwrap();
        Heisenberg::new(dp.pairing)
    }

    fn t(i: i64, j: i64) -> Tensor<Q> {
        Tensor::basis(vec![BasisId(i), BasisId(j)])
    }

    #[test]
    fn unit_is_neutral() {
        let h = z2_pair();
        let one = h.j_a(&Element::basis(BasisId(0))).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(h.mul(&one, &t(i, j)).unwrap(), t(i, j));
            }
        }
    }

    #[test]
    fn e_delta_g_times_g() {
        // Oracle by hand: (e⊗δ_g)(g⊗1) = Σ ⟨g₍₂₎, δ_g₍₁₎⟩ g₍₁₎⊗δ_g₍₂₎. With Δ(g) = g⊗g
        // and Δ(δ_g) = δ_e⊗δ_g + δ_g⊗δ_e, only ⟨g, δ_g⟩ survives: g⊗δ_e.
        let h = z2_pair();
        let one_b = h.pairing().b().algebra().unit().unwrap().clone();
        let lhs = h
            .mul(
                &t(0, 1),
                &Tensor::pure2(&Element::basis(BasisId(1)), &one_b),
            )
            .unwrap();
        assert_eq!(lhs, t(1, 0));
    }

    #[test]
    fn r_on_g_delta_g() {
        // R(g⊗δ_g) = Σ ⟨g₍₂₎, δ_g₍₁₎⟩ g₍₁₎⊗δ_g₍₂₎ = g⊗δ_e, as above.
        let h = z2_pair();
        assert_eq!(h.r_map(&t(1, 1)).unwrap(), t(1, 0));
    }

    #[test]
    fn group_element_acts_by_multiplication() {
        let h = z2_pair();
        let g = h.j_a(&Element::basis(BasisId(1))).unwrap();
        assert_eq!(
            h.act(&g, &Element::basis(BasisId(1))).unwrap(),
            Element::basis(BasisId(0))
        );
    }

    #[test]
    fn suites_pass_on_finite_pairs() {
        for name in ["group:z2", "group:s3", "h4"] {
            let catalog::Builtin::Hopf(a) = catalog::builtin::<Q>(name, 5).unwrap() else {
                unreachable!()
            };
            let dp = DualPair::build(&a).unwrap();
            let r = Heisenberg::new(dp.pairing).suite(7);
            assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn integer_pair_suite_passes_on_window() {
        let p = catalog::integers_pair::<Q>(2);
        let r = Heisenberg::new(p).suite(7);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
