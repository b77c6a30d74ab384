//! Acceptance criteria, one PASS/FAIL line each.
//!
//! All arithmetic is exact (tolerance 0). Time bounds are pinned below.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use aqg::catalog::{self, Builtin};
use aqg::dual::{DualPair, Pairing};
use aqg::duality::DualityElement;
use aqg::element::{BasisId, Element};
use aqg::fourier::Fourier;
use aqg::heisenberg::Heisenberg;
use aqg::hopf::HopfAlgebra;
use aqg::integrals::{
    characterizations_suite, gram_matrix, identity_suite, solve_antipode_relation,
    solve_left_integral, solve_scaling_constant, Automorphism, ModularData,
};
use aqg::linalg::Matrix;
use aqg::report::Report;
use aqg::suites::HEISENBERG_SEED;
use aqg::{Cyclotomic as Q, Scalar};

const FINITE: &[&str] = &[
    "group:z2",
    "group:s3",
    "function:z2",
    "function:s3",
    "h4",
    "taft:3",
];
const AXIOM_BUDGET: Duration = Duration::from_secs(5);
const DUALITY_BUDGET: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn hopf(name: &str) -> HopfAlgebra<Q> {
    match catalog::builtin::<Q>(name, 3).unwrap() {
        Builtin::Hopf(h) => h,
        Builtin::Pair(_) => panic!("{name} is a pair"),
    }
}

fn pair(window: i64) -> Pairing<Q> {
    match catalog::builtin::<Q>("kz", window).unwrap() {
        Builtin::Pair(p) => *p,
        Builtin::Hopf(_) => unreachable!(),
    }
}

fn dual_pair(name: &str) -> DualPair<Q> {
    DualPair::build(&hopf(name)).unwrap()
}

fn must_pass(what: &str, r: &Report) -> Result<usize, String> {
    match r.failures().next() {
        None => Ok(r.checks.len()),
        Some(c) => Err(format!(
            "{what}: {} fails at {}",
            c.name,
            c.witness.as_deref().unwrap_or("?")
        )),
    }
}

fn must_contain(what: &str, r: &Report, needle: &str) -> Result<(), String> {
    if r.checks.iter().any(|c| c.name.contains(needle) && c.passed) {
        Ok(())
    } else {
        Err(format!("{what}: no passing check named like `{needle}`"))
    }
}

fn within(started: Instant, budget: Duration) -> Result<Duration, String> {
    let t = started.elapsed();
    if t < budget {
        Ok(t)
    } else {
        Err(format!("took {t:.2?}, budget {budget:?}"))
    }
}

fn ac1() -> Outcome {
    let started = Instant::now();
    let mut checks = 0;
    for name in FINITE {
        checks += must_pass(name, &hopf(name).check_axioms())?;
    }
    let p = pair(5);
    checks += must_pass("K(ℤ)", &p.a().check_axioms())?;
    checks += must_pass("ℂ[ℤ]", &p.b().check_axioms())?;
    let t = within(started, AXIOM_BUDGET)?;
    Ok(format!(
        "{checks} checks on 6 finite algebras and K(ℤ) window ±5 in {t:.2?}"
    ))
}

fn ac2() -> Outcome {
    for name in FINITE {
        let h = hopf(name);
        let n = h.dim().unwrap();
        let phi = solve_left_integral(&h).map_err(|e| format!("{name}: {e}"))?;
        // The antipode relation is an independent linear system.
        let sols = solve_antipode_relation(&h).map_err(|e| format!("{name}: {e}"))?;
        if sols.len() != 1 {
            return Err(format!(
                "{name}: antipode relation solution space has dimension {}",
                sols.len()
            ));
        }
        let (x, y) = (phi.coords(n), sols[0].coords(n));
        let k = (0..n).find(|&i| !x[i].is_zero()).unwrap();
        let ratio = y[k].div(&x[k]).unwrap();
        if (0..n).any(|i| y[i] != ratio.clone() * x[i].clone()) {
            return Err(format!(
                "{name}: the two characterizations give different lines"
            ));
        }
        let rank = gram_matrix(&h, &phi).unwrap().rank();
        if rank != n {
            return Err(format!("{name}: Gram rank {rank}, dim {n}"));
        }
    }
    for name in ["group:s3", "h4"] {
        must_pass(name, &characterizations_suite(&hopf(name)))?;
    }
    Ok(
        "unique faithful left integral on 6 algebras, characterizations agree on ℂ[S₃] and H4"
            .into(),
    )
}

fn ac3() -> Outcome {
    let mut checks = 0;
    for name in FINITE {
        let h = hopf(name);
        let md = ModularData::derive(&h).map_err(|e| format!("{name}: {e}"))?;
        checks += must_pass(name, &identity_suite(&h, &md))?;
    }
    let h = hopf("h4");
    let md = ModularData::derive(&h).unwrap();
    let mut bad_sigma = md.clone();
    bad_sigma.sigma = Automorphism::identity(4);
    let mut bad_delta = md;
    bad_delta.delta = Element::basis(BasisId(0));
    bad_delta.delta_inv = Element::basis(BasisId(0));
    for (what, md) in [("perturbed σ", bad_sigma), ("perturbed δ", bad_delta)] {
        let r = identity_suite(&h, &md);
        let witnessed = r.failures().any(|c| c.witness.is_some());
        if !witnessed {
            return Err(format!("{what} went undetected"));
        }
    }
    Ok(format!(
        "{checks} identity checks exact; perturbed σ and δ fail with witnesses"
    ))
}

fn ac4() -> Outcome {
    let mut checks = 0;
    for name in FINITE {
        let dp = dual_pair(name);
        let r = dp.dual_suite();
        checks += must_pass(name, &r)?;
        for needle in [
            "ψ̂ = φ̂∘S",
            "⟨a, σ̂(b)⟩",
            "⟨a, δ̂⟩",
            "biduality/antipode",
            "biduality/coproduct",
        ] {
            must_contain(name, &r, needle)?;
        }
    }
    for name in ["h4", "taft:3"] {
        must_contain(name, &dual_pair(name).dual_suite(), "Radford S⁴(a)")?;
    }
    let dp = dual_pair("h4");
    for i in 0..4 {
        for j in 0..4 {
            let (x, y) = dp
                .plancherel(&Element::basis(BasisId(i)), &Element::basis(BasisId(j)))
                .unwrap();
            if x != y {
                return Err(format!("Plancherel on H4 at ({i}, {j}): {x} vs {y}"));
            }
        }
    }
    Ok(format!(
        "{checks} dual checks exact, Radford on H4 and Taft(3), biduality on all"
    ))
}

fn ac5() -> Outcome {
    let started = Instant::now();
    let mut checks = 0;
    for name in ["group:z2", "group:s3", "h4"] {
        let v = DualityElement::new(dual_pair(name).pairing);
        let r = v.suite();
        checks += must_pass(name, &r)?;
        for needle in [
            "⟨V, a⊗b⟩",
            "VV⁻¹",
            "(S⊗ι)V = (ι⊗S)V",
            "(ε⊗ι)V = 1",
            "V acts as T",
            "Δ(a)V = V(a⊗1)",
        ] {
            must_contain(name, &r, needle)?;
        }
        let p = v.pentagon_suite();
        checks += must_pass(name, &p)?;
        must_contain(name, &p, "V₁₂V₁₃V₂₃ = V₂₃V₁₂")?;
    }
    let v = DualityElement::new(pair(3));
    checks += must_pass("K(ℤ)", &v.suite())?;
    let p = v.pentagon_suite();
    checks += must_pass("K(ℤ)", &p)?;
    let cases = p.get("T₂₃T₁₂ = T₁₂T₁₃T₂₃").map(|c| c.cases).unwrap_or(0);
    if cases != 7 * 7 * 7 {
        return Err(format!("K(ℤ) pentagon ran on {cases} cases, expected 343"));
    }
    let t = within(started, DUALITY_BUDGET)?;
    Ok(format!(
        "{checks} checks, K(ℤ) pentagon on 343 triples, in {t:.2?}"
    ))
}

fn ac6() -> Outcome {
    let mut checks = 0;
    for name in FINITE {
        let dp = dual_pair(name);
        let n = dp.dim();
        let hz = Heisenberg::new(dp.pairing.clone());
        let r = hz.suite(HEISENBERG_SEED);
        checks += must_pass(name, &r)?;
        let assoc = r.get("associativity").map(|c| c.cases).unwrap_or(0);
        let want = 100 + if n <= 4 { n.pow(6) } else { 0 };
        if assoc < want {
            return Err(format!(
                "{name}: associativity on {assoc} triples, expected {want}"
            ));
        }
        must_contain(name, &r, "R⁻¹∘R")?;
        must_contain(name, &r, "faithful action")?;
        // Dimension of the operator span, from the flattened matrices.
        let rows: Vec<Vec<Q>> = (0..n as i64)
            .flat_map(|i| (0..n as i64).map(move |j| (i, j)))
            .map(|(i, j)| {
                let t = aqg::element::Tensor::pure2(
                    &Element::basis(BasisId(i)),
                    &Element::basis(BasisId(j)),
                );
                let m = hz.operator(&t).unwrap();
                (0..n)
                    .flat_map(|r| (0..n).map(move |c| (r, c)))
                    .map(|(r, c)| m.get(r, c).clone())
                    .collect()
            })
            .collect();
        let rank = Matrix::from_rows(rows).rank();
        if rank != n * n {
            return Err(format!(
                "{name}: operator span has dimension {rank}, expected {}",
                n * n
            ));
        }
    }
    let r = Heisenberg::new(pair(3)).suite(HEISENBERG_SEED);
    checks += must_pass("K(ℤ)", &r)?;
    Ok(format!(
        "{checks} checks, operator span (dim A)² on all finite pairs"
    ))
}

fn ac7() -> Outcome {
    let mut checks = 0;
    for name in FINITE {
        let f = Fourier::new(dual_pair(name));
        let r = f.suite();
        checks += must_pass(name, &r)?;
        for needle in [
            "ℱ⁻¹ℱ = id on A",
            "ℱ′⁻¹ℱ′ = id on A",
            "ℱ(ax)",
            "ℱ(b▷x)",
            "W⁻¹(ℱx⊗ℱx′)",
            "WW⁻¹",
        ] {
            must_contain(name, &r, needle)?;
        }
    }
    Ok(format!("{checks} Fourier checks exact on 6 algebras"))
}

fn ac8() -> Outcome {
    let mut seen = Vec::new();
    for name in FINITE {
        let h = hopf(name);
        let n = h.dim().unwrap();
        let phi = solve_left_integral(&h).unwrap();
        let tau = solve_scaling_constant(&h, &phi).map_err(|e| format!("{name}: {e}"))?;
        // Every basis vector where φ does not vanish gives the same ratio.
        for i in (0..n as i64).map(BasisId) {
            let lhs = phi.eval(&h.antipode_power(&Element::basis(i), 2));
            if lhs != tau.clone() * phi.at(i) {
                return Err(format!("{name}: φ(S²({})) ≠ τφ", h.label(i)));
            }
        }
        seen.push(format!("{name} τ={tau}"));
    }
    let p = pair(5);
    let phi = p.phi().unwrap();
    for i in p.a().check_ids() {
        let e = Element::basis(i);
        if phi.eval(&p.a().antipode_power(&e, 2)) != phi.eval(&e) {
            return Err(format!("K(ℤ): φ∘S² ≠ φ at {}", p.a().label(i)));
        }
    }
    seen.push("kz τ=1".into());
    Ok(seen.join(", "))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Result<i32, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_aqg"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    out.status.code().ok_or_else(|| "killed by a signal".into())
}

fn ac9() -> Outcome {
    let dir = std::env::temp_dir().join(format!("aqg-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for k in 0..2 {
        let path = dir.join(format!("run{k}.json"));
        let code = run(&[
            "check",
            "--builtin",
            "h4",
            "--suite",
            "all",
            "--report",
            path.to_str().unwrap(),
        ])?;
        if code != 0 {
            return Err(format!("run {k} exited {code}"));
        }
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    std::fs::remove_dir_all(&dir).ok();
    if reports[0] != reports[1] {
        return Err("reports differ between runs".into());
    }
    let expect = |file: &str, want: i32| -> Result<(), String> {
        let path = data(file);
        let code = run(&["check", "--file", path.to_str().unwrap()])?;
        if code == want {
            Ok(())
        } else {
            Err(format!("{file} exited {code}, expected {want}"))
        }
    };
    expect("h4.toml", 0)?;
    expect("h4_broken.toml", 1)?;
    expect("malformed.toml", 2)?;
    Ok(format!(
        "identical {}-byte reports; broken file exits 1, malformed exits 2",
        reports[0].len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("axioms", ac1),
        ("integral existence and uniqueness", ac2),
        ("identity suite and negative controls", ac3),
        ("dual suite", ac4),
        ("duality element and pentagon", ac5),
        ("Heisenberg suite", ac6),
        ("Fourier suite", ac7),
        ("τ consistency", ac8),
        ("CLI determinism and exit codes", ac9),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("AC{} PASS {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("AC{} FAIL {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
