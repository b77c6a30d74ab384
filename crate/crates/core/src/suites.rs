//! Named check suites over a loaded subject, as run by the command line.

use crate::dual::{DualPair, Pairing};
use crate::duality::DualityElement;
use crate::element::{BasisId, Element};
use crate::error::{Error, Result};
use crate::fourier::Fourier;
use crate::heisenberg::Heisenberg;
use crate::hopf::HopfAlgebra;
use crate::integrals::{
    check_left_invariant, check_right_invariant, identity_suite, integrals_suite, Automorphism,
    Functional, ModularData,
};
use crate::report::Report;
use crate::scalar::Scalar;

pub const SUITE_NAMES: &[&str] = &[
    "axioms",
    "integrals",
    "identities1",
    "dual",
    "heisenberg",
    "duality-v",
    "fourier",
    "pentagon",
    "all",
];

/// Seed for the sampled Heisenberg triples.
pub const HEISENBERG_SEED: u64 = 0x5eed;

/// What a suite runs on.
#[derive(Clone)]
pub enum Subject<F> {
    /// One Hopf algebra, with a left integral if one was supplied.
    Single(HopfAlgebra<F>, Option<Functional<F>>),
    /// A pair with its pairing, such as `K(ℤ)` and `ℂ[ℤ]`.
    Pair(Pairing<F>),
}

impl<F: Scalar> Subject<F> {
    pub fn name(&self) -> String {
        match self {
            Subject::Single(h, _) => h.name().to_string(),
            Subject::Pair(p) => format!("({}, {})", p.a().name(), p.b().name()),
        }
    }
}

fn show_automorphism<F: Scalar>(h: &HopfAlgebra<F>, a: &Automorphism<F>) -> String {
    let n = h.dim().unwrap_or(0);
    (0..n as i64)
        .map(|i| {
            let id = BasisId(i);
            format!(
                "{} ↦ {}",
                h.label(id),
                h.show(&a.apply(&Element::basis(id)))
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn dump_modular<F: Scalar>(r: &mut Report, h: &HopfAlgebra<F>, md: &ModularData<F>, hat: bool) {
    // The hat goes on the leading symbol: δ̂⁻¹, σ̂′.
    let k = |s: &str| {
        let mut chars = s.chars();
        let head = chars.next().unwrap_or_default();
        if hat {
            format!("{head}\u{302}{}", chars.as_str())
        } else {
            s.to_string()
        }
    };
    r.note(&k("φ"), md.phi.show(h));
    r.note(&k("ψ"), md.psi.show(h));
    r.note(&k("σ"), show_automorphism(h, &md.sigma));
    r.note(&k("σ′"), show_automorphism(h, &md.sigma_prime));
    r.note(&k("δ"), h.show(&md.delta));
    r.note(&k("δ⁻¹"), h.show(&md.delta_inv));
    r.note(&k("τ"), md.tau.to_string());
}

/// The `derive` dump: integrals and modular data on both sides of the duality.
pub fn derive_report<F: Scalar>(dp: &DualPair<F>) -> Report {
    let mut r = Report::new("derive");
    dump_modular(&mut r, dp.a(), &dp.modular, false);
    dump_modular(&mut r, dp.b(), &dp.modular_hat, true);
    r
}

/// Modular data from the supplied integral, or solved from invariance.
pub fn modular_data<F: Scalar>(
    h: &HopfAlgebra<F>,
    phi: Option<&Functional<F>>,
) -> Result<ModularData<F>> {
    match phi {
        Some(phi) => ModularData::from_left_integral(h, phi.clone()),
        None => ModularData::derive(h),
    }
}

fn finite_suite<F: Scalar>(
    h: &HopfAlgebra<F>,
    phi: Option<&Functional<F>>,
    name: &str,
    dp: &mut Option<DualPair<F>>,
) -> Result<Report> {
    if name == "axioms" {
        return Ok(h.check_axioms());
    }
    if name == "integrals" {
        let (mut r, md) = integrals_suite(h);
        if let Some(md) = md {
            dump_modular(&mut r, h, &md, false);
        }
        return Ok(r);
    }
    if dp.is_none() {
        h.algebra().require_dim()?;
        *dp = Some(DualPair::from_modular(h, modular_data(h, phi)?)?);
    }
    let dp = dp.as_ref().expect("set above");
    Ok(match name {
        "identities1" => identity_suite(h, &dp.modular),
        "dual" => {
            let mut r = dp.dual_suite();
            dump_modular(&mut r, dp.b(), &dp.modular_hat, true);
            r
        }
        "heisenberg" => Heisenberg::new(dp.pairing.clone()).suite(HEISENBERG_SEED),
        "duality-v" => DualityElement::new(dp.pairing.clone()).suite(),
        "fourier" => Fourier::new(dp.clone()).suite(),
        "pentagon" => DualityElement::new(dp.pairing.clone()).pentagon_suite(),
        other => return Err(Error::InvalidParameter(format!("unknown suite `{other}`"))),
    })
}

fn pair_suite<F: Scalar>(p: &Pairing<F>, name: &str) -> Result<Report> {
    Ok(match name {
        "axioms" => {
            let mut r = Report::new("axioms");
            r.extend(p.a().check_axioms());
            r.extend(p.b().check_axioms());
            r
        }
        "integrals" => {
            let mut r = Report::new("integrals");
            check_left_invariant(p.a(), p.phi()?, &mut r, "left invariance (window)");
            check_right_invariant(p.a(), &p.psi()?, &mut r, "right invariance of φ∘S (window)");
            r
        }
        "dual" => p.check(),
        "heisenberg" => Heisenberg::new(p.clone()).suite(HEISENBERG_SEED),
        "duality-v" => DualityElement::new(p.clone()).suite(),
        "pentagon" => DualityElement::new(p.clone()).pentagon_suite(),
        "identities1" | "fourier" => return Err(Error::InfiniteDimensional),
        other => return Err(Error::InvalidParameter(format!("unknown suite `{other}`"))),
    })
}

/// Runs one named suite, or all of them in the listed order.
///
/// `Err` means a precondition failed (no integral, infinite dimension, ...)
/// or the suite name is unknown. With `all`, a failing axiom suite stops the
/// run and its report is returned.
pub fn run<F: Scalar>(subject: &Subject<F>, suite: &str) -> Result<Report> {
    if !SUITE_NAMES.contains(&suite) {
        return Err(Error::InvalidParameter(format!("unknown suite `{suite}`")));
    }
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES[..SUITE_NAMES.len() - 1].to_vec()
    } else {
        vec![suite]
    };
    let mut out = Report::new(suite);
    let mut dp = None;
    for name in names {
        let r = match subject {
            Subject::Single(h, phi) => finite_suite(h, phi.as_ref(), name, &mut dp),
            Subject::Pair(p) => match pair_suite(p, name) {
                Err(Error::InfiniteDimensional) if suite == "all" => {
                    out.note(name, "not applicable: needs finite dimension");
                    continue;
                }
                other => other,
            },
        }?;
        let stop = name == "axioms" && !r.passed() && suite == "all";
        if suite == "all" {
            out.extend(r);
        } else {
            out = r;
        }
        if stop {
            break;
        }
    }
    Ok(out)
}

/// Whether an error is a precondition failure rather than bad input.
pub fn is_precondition(err: &Error) -> bool {
    !matches!(
        err,
        Error::Parse { .. } | Error::InvalidFile(_) | Error::InvalidParameter(_)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Builtin};
    use crate::cyclotomic::Cyclotomic as Q;

    fn subject(name: &str, window: i64) -> Subject<Q> {
        match catalog::builtin::<Q>(name, window).unwrap() {
            Builtin::Hopf(h) => Subject::Single(h, None),
            Builtin::Pair(p) => Subject::Pair(*p),
        }
    }

    #[test]
    fn all_on_z2() {
        let r = run(&subject("group:z2", 3), "all").unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(r.checks.iter().any(|c| c.name.starts_with("pentagon/")));
    }

    #[test]
    fn derive_z2_by_hand() {
        let Subject::Single(h, _) = subject("group:z2", 3) else {
            unreachable!()
        };
        let dp = DualPair::build(&h).unwrap();
        let r = derive_report(&dp);
        let get = |k: &str| {
            r.derived
                .iter()
                .find(|d| d.name == k)
                .unwrap()
                .value
                .clone()
        };
        assert_eq!(get("φ"), "[e: 1, g: 0]");
        assert_eq!(get("δ"), "(1)*e");
        assert_eq!(get("τ"), "1");
    }

    #[test]
    fn integer_pair_all_skips_finite_only_suites() {
        let r = run(&subject("kz", 2), "all").unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(r.derived.iter().any(|d| d.name == "fourier"));
        assert!(matches!(
            run(&subject("kz", 2), "fourier"),
            Err(Error::InfiniteDimensional)
        ));
    }

    #[test]
    fn unknown_suite_is_rejected() {
        let err = run(&subject("h4", 3), "nope").unwrap_err();
        assert!(!is_precondition(&err));
    }

    #[test]
    fn group_algebra_of_integers_alone_has_no_dual_pair() {
        let err = run(&subject("cz", 3), "dual").unwrap_err();
        assert!(is_precondition(&err));
    }
}
