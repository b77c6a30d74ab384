//! Built-in examples: group algebras, function algebras, Taft algebras
//! (including Sweedler's four-dimensional algebra) and the pair
//! `K(ℤ)` / `ℂ[ℤ]` of finitely supported functions and the group algebra of ℤ.

use std::sync::Arc;

use crate::algebra::{tensor_mul, Algebra, Basis};
use crate::dual::Pairing;
use crate::element::{BasisId, Element, Tensor};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, Slices};
use crate::scalar::Scalar;

/// A finite group given by its Cayley table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    pub name: String,
    pub labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl Group {
    pub fn from_table(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let bad = |m: &str| Error::InvalidParameter(format!("group `{name}`: {m}"));
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(bad("table must be square and nonempty"));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(bad("entry out of range"));
        }
        if (0..n).any(|i| table[0][i] != i || table[i][0] != i) {
            return Err(bad("element 0 is not the identity"));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
            if !(0..n).any(|b| table[a][b] == 0 && table[b][a] == 0) {
                return Err(bad("missing inverse"));
            }
        }
        Ok(Group {
            name: name.to_string(),
            labels,
            table,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Group {
            name: format!("Z{n}"),
            labels,
            table,
        }
    }

    /// The symmetric group on three letters, generated by the transpositions
    /// `s = (0 1)` and `t = (1 2)`; elements are labelled by shortest words.
    pub fn symmetric3() -> Self {
        type Perm = [usize; 3];
        let compose = |p: &Perm, q: &Perm| -> Perm { [p[q[0]], p[q[1]], p[q[2]]] };
        let gens: [(&str, Perm); 2] = [("s", [1, 0, 2]), ("t", [0, 2, 1])];
        let mut elems: Vec<(String, Perm)> = vec![("e".to_string(), [0, 1, 2])];
        let mut frontier = 0;
        while frontier < elems.len() {
            let (word, p) = elems[frontier].clone();
            for (g, q) in &gens {
                let r = compose(&p, q);
                if !elems.iter().any(|(_, x)| *x == r) {
                    let w = if word == "e" {
                        g.to_string()
                    } else {
                        format!("{word}{g}")
                    };
                    elems.push((w, r));
                }
            }
            frontier += 1;
        }
        let index = |p: &Perm| elems.iter().position(|(_, x)| x == p).unwrap();
        let table = elems
            .iter()
            .map(|(_, p)| elems.iter().map(|(_, q)| index(&compose(p, q))).collect())
            .collect();
        Group {
            name: "S3".to_string(),
            labels: elems.iter().map(|(w, _)| w.clone()).collect(),
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).unwrap()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn id(i: usize) -> BasisId {
    BasisId(i as i64)
}

/// The group algebra: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra<F: Scalar>(g: &Group) -> HopfAlgebra<F> {
    let n = g.order();
    let table = (0..n)
        .map(|i| (0..n).map(|j| Element::basis(id(g.mul(i, j)))).collect())
        .collect();
    let alg = Algebra::from_table(
        format!("C[{}]", g.name),
        g.labels.clone(),
        table,
        Some(Element::basis(id(0))),
    );
    let coproduct = (0..n).map(|i| Tensor::basis(vec![id(i), id(i)])).collect();
    let counit = vec![F::one(); n];
    let antipode = (0..n).map(|i| Element::basis(id(g.inv(i)))).collect();
    HopfAlgebra::from_tables(alg, coproduct, counit, antipode, None)
        .expect("group algebra tables are consistent")
}

/// Functions on the group, pointwise: `Δ(f)(x, y) = f(xy)`, `S(f)(x) = f(x⁻¹)`.
pub fn function_algebra<F: Scalar>(g: &Group) -> HopfAlgebra<F> {
    let n = g.order();
    let table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Element::basis(id(i))
                    } else {
                        Element::zero()
                    }
                })
                .collect()
        })
        .collect();
    let unit = Element::from_terms((0..n).map(|i| (id(i), F::one())));
    let labels = g.labels.iter().map(|l| format!("d_{l}")).collect();
    let alg = Algebra::from_table(format!("F({})", g.name), labels, table, Some(unit));
    let coproduct = (0..n)
        .map(|k| {
            let mut t = Tensor::zero(2);
            for x in 0..n {
                for y in 0..n {
                    if g.mul(x, y) == k {
                        t.add_term(vec![id(x), id(y)], F::one());
                    }
                }
            }
            t
        })
        .collect();
    let counit = (0..n)
        .map(|k| if k == 0 { F::one() } else { F::zero() })
        .collect();
    let antipode = (0..n).map(|k| Element::basis(id(g.inv(k)))).collect();
    HopfAlgebra::from_tables(alg, coproduct, counit, antipode, None)
        .expect("function algebra tables are consistent")
}

fn taft_label(i: usize, j: usize) -> String {
    let g = match i {
        0 => String::new(),
        1 => "g".to_string(),
        _ => format!("g{i}"),
    };
    let x = match j {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x{j}"),
    };
    if g.is_empty() && x.is_empty() {
        "1".to_string()
    } else {
        g + &x
    }
}

/// The Taft algebra of order `n`: generated by `g`, `x` with `gⁿ = 1`,
/// `xⁿ = 0`, `xg = ζ gx`, `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`.
/// The basis vector `g^i x^j` sits at index `j·n + i`.
pub fn taft<F: Scalar>(n: usize) -> Result<HopfAlgebra<F>> {
    if n < 2 {
        return Err(Error::InvalidParameter("Taft algebra needs n >= 2".into()));
    }
    let zeta = F::root_of_unity(n as u32);
    let idx = |i: usize, j: usize| id(j * n + i);
    let dim = n * n;
    let mut labels = vec![String::new(); dim];
    let mut table = vec![vec![Element::zero(); dim]; dim];
    for j in 0..n {
        for i in 0..n {
            labels[j * n + i] = taft_label(i, j);
            for l in 0..n {
                for k in 0..n {
                    if j + l < n {
                        let c = zeta.pow(((j * k) % n) as u32);
                        table[j * n + i][l * n + k] = Element::term(idx((i + k) % n, j + l), c);
                    }
                }
            }
        }
    }
    let alg = Algebra::from_table(
        format!("Taft({n})"),
        labels,
        table,
        Some(Element::basis(idx(0, 0))),
    );
    let legs = [&alg, &alg];
    let dg = Tensor::basis(vec![idx(1, 0), idx(1, 0)]);
    let mut dx = Tensor::basis(vec![idx(0, 1), idx(0, 0)]);
    dx.add_term(vec![idx(1, 0), idx(0, 1)], F::one());
    let one2 = Tensor::basis(vec![idx(0, 0), idx(0, 0)]);
    let pow =
        |t: &Tensor<F>, e: usize| (0..e).fold(one2.clone(), |acc, _| tensor_mul(&legs, &acc, t));
    let s_g = Element::basis(idx(n - 1, 0));
    let s_x = Element::term(idx(n - 1, 1), -F::one());
    let el_pow = |x: &Element<F>, e: usize| {
        (0..e).fold(Element::basis(idx(0, 0)), |acc, _| alg.mul(&acc, x))
    };
    let mut coproduct = vec![Tensor::zero(2); dim];
    let mut counit = vec![F::zero(); dim];
    let mut antipode = vec![Element::zero(); dim];
    for j in 0..n {
        for i in 0..n {
            let k = j * n + i;
            coproduct[k] = tensor_mul(&legs, &pow(&dg, i), &pow(&dx, j));
            counit[k] = if j == 0 { F::one() } else { F::zero() };
            antipode[k] = alg.mul(&el_pow(&s_x, j), &el_pow(&s_g, i));
        }
    }
    HopfAlgebra::from_tables(alg, coproduct, counit, antipode, None)
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`.
pub fn sweedler<F: Scalar>() -> HopfAlgebra<F> {
    taft::<F>(2).expect("n = 2 is valid").with_name("H4")
}

/// Finitely supported functions on ℤ with basis `d_k` (the indicator of `k`).
/// Not unital; `Δ(f)(s, t) = f(s + t)`.
pub fn functions_on_integers<F: Scalar>() -> HopfAlgebra<F> {
    let d = |k: i64| Element::<F>::basis(BasisId(k));
    let local_unit = Arc::new(|set: &[Element<F>]| {
        let mut u = Element::zero();
        let mut ids: Vec<BasisId> = set.iter().flat_map(|x| x.support()).collect();
        ids.sort();
        ids.dedup();
        for i in ids {
            u.add_term(i, F::one());
        }
        Some(u)
    });
    let alg = Algebra::new(
        "K(Z)",
        Basis::Integers {
            prefix: "d".to_string(),
        },
        Arc::new(move |i, j| if i == j { d(i.0) } else { Element::zero() }),
        None,
    )
    .with_local_unit_rule(local_unit);
    let t = |a: i64, b: i64| Tensor::basis(vec![BasisId(a), BasisId(b)]);
    // Δ(d_j) is the indicator of {(s, t) : s + t = j}.
    let slices = Slices {
        right: Arc::new(move |j, k| t(j.0 - k.0, k.0)),
        left: Arc::new(move |k, j| t(k.0, j.0 - k.0)),
        right_first: Arc::new(move |j, k| t(k.0, j.0 - k.0)),
        left_second: Arc::new(move |k, j| t(j.0 - k.0, k.0)),
    };
    HopfAlgebra::from_slices(
        alg,
        slices,
        Arc::new(|j| if j.0 == 0 { F::one() } else { F::zero() }),
        Arc::new(|j| Element::basis(BasisId(-j.0))),
        Arc::new(|j| Element::basis(BasisId(-j.0))),
    )
}

/// The group algebra of ℤ with basis `l_k`.
pub fn group_algebra_of_integers<F: Scalar>() -> HopfAlgebra<F> {
    let alg = Algebra::new(
        "C[Z]",
        Basis::Integers {
            prefix: "l".to_string(),
        },
        Arc::new(|i: BasisId, j: BasisId| Element::basis(BasisId(i.0 + j.0))),
        Some(Element::basis(BasisId(0))),
    )
    .with_local_unit_rule(Arc::new(|_| Some(Element::basis(BasisId(0)))));
    let t = |a: i64, b: i64| Tensor::basis(vec![BasisId(a), BasisId(b)]);
    let slices = Slices {
        right: Arc::new(move |j, k| t(j.0, j.0 + k.0)),
        left: Arc::new(move |k, j| t(k.0 + j.0, j.0)),
        right_first: Arc::new(move |j, k| t(j.0 + k.0, j.0)),
        left_second: Arc::new(move |k, j| t(j.0, k.0 + j.0)),
    };
    HopfAlgebra::from_slices(
        alg,
        slices,
        Arc::new(|_| F::one()),
        Arc::new(|j| Element::basis(BasisId(-j.0))),
        Arc::new(|j| Element::basis(BasisId(-j.0))),
    )
}

/// `K(ℤ)` paired with `ℂ[ℤ]` by `⟨d_j, l_k⟩ = [j = k]`, with left integral
/// `f ↦ Σ f(k)` on `K(ℤ)`.
pub fn integers_pair<F: Scalar>(window: i64) -> Pairing<F> {
    let a = functions_on_integers::<F>().with_window(window);
    let b = group_algebra_of_integers::<F>().with_window(window);
    // φ(c·) and φ(·c) both send d_k to l_k; ψ = φ∘S has the same slices.
    let same = Arc::new(|c: &Element<F>| c.clone());
    Pairing::new(a, b)
        .with_integral_slices(same.clone(), same.clone(), same.clone(), same)
        .with_left_integral(Arc::new(|_| F::one()))
}

pub fn builtin_names() -> &'static [&'static str] {
    &[
        "group:zN (e.g. group:z2)",
        "group:s3",
        "function:zN (e.g. function:z3)",
        "function:s3",
        "h4",
        "taft:N (N >= 2, e.g. taft:3)",
        "kz (the pair K(Z), C[Z])",
        "cz (C[Z] alone)",
    ]
}

/// A parsed built-in: either a single Hopf algebra or the infinite pair.
pub enum Builtin<F> {
    Hopf(HopfAlgebra<F>),
    Pair(Box<Pairing<F>>),
}

fn parse_group(code: &str) -> Result<Group> {
    if code == "s3" {
        return Ok(Group::symmetric3());
    }
    let n = code
        .strip_prefix('z')
        .and_then(|k| k.parse::<usize>().ok())
        .filter(|&k| (1..=64).contains(&k))
        .ok_or_else(|| Error::UnknownExample(code.to_string()))?;
    Ok(Group::cyclic(n))
}

pub fn builtin<F: Scalar>(name: &str, window: i64) -> Result<Builtin<F>> {
    let unknown = || Error::UnknownExample(name.to_string());
    if let Some(g) = name.strip_prefix("group:") {
        return Ok(Builtin::Hopf(group_algebra(&parse_group(g)?)));
    }
    if let Some(g) = name.strip_prefix("function:") {
        return Ok(Builtin::Hopf(function_algebra(&parse_group(g)?)));
    }
    if let Some(n) = name.strip_prefix("taft:") {
        let n: usize = n.parse().map_err(|_| unknown())?;
        if n > 8 {
            return Err(Error::InvalidParameter("Taft order above 8".into()));
        }
        return Ok(Builtin::Hopf(taft(n)?));
    }
    match name {
        "h4" => Ok(Builtin::Hopf(sweedler())),
        "kz" => Ok(Builtin::Pair(Box::new(integers_pair(window)))),
        "cz" => Ok(Builtin::Hopf(
            group_algebra_of_integers().with_window(window),
        )),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyclotomic as Q;

    #[test]
    fn s3_is_a_nonabelian_group_of_order_six() {
        let g = Group::symmetric3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.labels[0], "e");
        Group::from_table("copy", g.labels.clone(), g.table.clone()).unwrap();
    }

    #[test]
    fn bad_tables_are_rejected() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(Group::from_table("bad", vec!["e".into(), "a".into()], bad).is_err());
    }

    #[test]
    fn builtins_satisfy_the_axioms() {
        for name in [
            "group:z2",
            "group:s3",
            "function:z2",
            "function:s3",
            "h4",
            "taft:3",
        ] {
            let Builtin::Hopf(h) = builtin::<Q>(name, 5).unwrap() else {
                panic!("{name} should be a single algebra")
            };
            let r = h.check_axioms();
            assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn infinite_examples_satisfy_the_axioms_on_a_window() {
        for h in [
            functions_on_integers::<Q>().with_window(3),
            group_algebra_of_integers::<Q>().with_window(3),
        ] {
            let r = h.check_axioms();
            assert!(
                r.passed(),
                "{}: {:?}",
                h.name(),
                r.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn taft_relations() {
        let h = taft::<Q>(3).unwrap();
        let a = h.algebra();
        let g = Element::basis(a.basis().resolve("g").unwrap());
        let x = Element::basis(a.basis().resolve("x").unwrap());
        let zeta = Q::root_of_unity(3);
        assert_eq!(a.mul(&x, &g), a.mul(&g, &x).scale(&zeta));
        let x3 = a.mul(&a.mul(&x, &x), &x);
        assert!(x3.is_zero());
        // S²(x) = ζ x, so S⁴ is not the identity.
        assert_eq!(h.antipode_power(&x, 2), x.scale(&zeta));
        assert_ne!(h.antipode_power(&x, 4), x);
    }

    #[test]
    fn sweedler_labels_and_antipode() {
        let h = sweedler::<Q>();
        let labels: Vec<String> = (0..4).map(|i| h.label(BasisId(i))).collect();
        assert_eq!(labels, ["1", "g", "x", "gx"]);
        let x = Element::basis(BasisId(2));
        assert_eq!(h.antipode(&x), Element::term(BasisId(3), -Q::one()));
    }

    #[test]
    fn unknown_names_error() {
        assert!(matches!(
            builtin::<Q>("nope", 5),
            Err(Error::UnknownExample(_))
        ));
        assert!(builtin::<Q>("group:z0", 5).is_err());
    }
}
