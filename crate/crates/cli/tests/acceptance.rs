//! Acceptance checks. Each criterion prints one PASS/FAIL line with its tolerance
//! (always exact equality) and its wall-clock budget. Runs without the libtest harness
//! so the lines are always shown.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qsl2::modrep::{
    check_relations, finite_dim_classical, finite_dim_quantum, rasskazova, verma_classical,
    BasisLabel, Coefficient, Generator, RasskazovaParams, Vector,
};
use qsl2::qarith::{q_binom, q_fact, q_int, ratio, rational, LaurentPoly, Rational};
use qsl2::tensorcg::{
    cg_decompose, decompose_by_character, highest_weight_vectors, phi_vs_oracle, tensor_classical,
    tensor_quantum, Decomposition, Interpretation,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn summands(m: usize, n: usize) -> Decomposition {
    let (m, n) = (m as i64, n as i64);
    let mut d = Decomposition::new();
    let mut w = m + n;
    while w >= (m - n).abs() {
        d.add(w, 1);
        w -= 2;
    }
    d
}

fn clebsch_gordan_table() -> Verdict {
    for m in 0..=8usize {
        for n in 0..=8usize {
            let want = summands(m, n);
            let got = cg_decompose(m, n);
            ensure(got == want && got.is_multiplicity_free(), || {
                format!("cg_decompose({m},{n})")
            })?;
            let (mi, ni) = (m as i64, n as i64);
            let c = tensor_classical(
                &finite_dim_classical(mi).unwrap(),
                &finite_dim_classical(ni).unwrap(),
            )
            .map_err(|e| e.to_string())?;
            let q = tensor_quantum(
                &finite_dim_quantum(mi).unwrap(),
                &finite_dim_quantum(ni).unwrap(),
            )
            .map_err(|e| e.to_string())?;
            ensure(
                decompose_by_character(&c).ok() == Some(want.clone()),
                || format!("classical character ({m},{n})"),
            )?;
            ensure(decompose_by_character(&q).ok() == Some(want), || {
                format!("quantum character ({m},{n})")
            })?;
        }
    }
    Ok("81 pairs, both flavors".into())
}

fn relation_verification() -> Verdict {
    let mut modules = 0;
    for n in 0..=8 {
        let c = check_relations(&finite_dim_classical(n).unwrap());
        let q = check_relations(&finite_dim_quantum(n).unwrap());
        ensure(c.passed() && q.passed(), || format!("F_{n}"))?;
        modules += 2;
    }
    for hw in [
        rational(0),
        rational(1),
        rational(2),
        ratio(5, 2),
        rational(-3),
    ] {
        let r = check_relations(&verma_classical(&hw, 12).unwrap());
        ensure(
            r.passed() && r.excluded == vec![BasisLabel::Verma(12)],
            || format!("Verma hw {hw}"),
        )?;
        modules += 1;
    }
    for (beta, lambda) in [
        (rational(0), rational(0)),
        (rational(1), rational(2)),
        (rational(-3), ratio(5, 2)),
    ] {
        for n in 1..=3 {
            let p = RasskazovaParams::new(beta.clone(), lambda.clone(), n, 10).unwrap();
            let r = check_relations(&rasskazova(&p).unwrap());
            let interior = r
                .outcomes
                .iter()
                .all(|o| matches!(o.basis, BasisLabel::Rasskazova { j, .. } if j.abs() <= 9));
            ensure(
                r.passed() && interior && r.checked_vectors() == 19 * n,
                || format!("Rasskazova beta={beta} lambda={lambda} n={n}"),
            )?;
            modules += 1;
        }
    }
    Ok(format!("{modules} modules, zero failures"))
}

fn oracle_soundness() -> Verdict {
    let mut vectors = 0;
    for m in 0..=6i64 {
        for n in 0..=6i64 {
            let t = tensor_quantum(
                &finite_dim_quantum(m).unwrap(),
                &finite_dim_quantum(n).unwrap(),
            )
            .unwrap();
            let hw = highest_weight_vectors(&t).map_err(|e| e.to_string())?;
            for p in 0..=m.min(n) {
                let w = m + n - 2 * p;
                let hits: Vec<&Vector<LaurentPoly>> = hw
                    .iter()
                    .filter(|(x, _)| *x == rational(w))
                    .map(|(_, v)| v)
                    .collect();
                ensure(hits.len() == 1, || {
                    format!("({m},{n},{p}): nullspace dimension {}", hits.len())
                })?;
                let x = hits[0];
                ensure(t.apply(Generator::E, x).unwrap().is_zero(), || {
                    format!("E x != 0 at ({m},{n},{p})")
                })?;
                ensure(
                    t.apply(Generator::K, x).unwrap() == x.scale(&LaurentPoly::v_pow(w)),
                    || format!("K eigenvalue at ({m},{n},{p})"),
                )?;
                vectors += 1;
            }
        }
    }
    Ok(format!("{vectors} one-dimensional kernels certified"))
}

fn phi_adjudication() -> Verdict {
    let (mut agree, mut witnessed) = (0, 0);
    for m in 0..=4usize {
        for n in 0..=4usize {
            for p in 0..=m.min(n) {
                let r =
                    phi_vs_oracle(m, n, p, Interpretation::default()).map_err(|e| e.to_string())?;
                ensure(r.oracle_certified, || {
                    format!("oracle certificate ({m},{n},{p})")
                })?;
                match (r.proportional, &r.scalar, &r.witness) {
                    (true, Some(_), None) => agree += 1,
                    (false, None, Some(_)) => witnessed += 1,
                    _ => return Err(format!("incomplete report ({m},{n},{p})")),
                }
            }
        }
    }
    Ok(format!(
        "{} triples reported under {}: {agree} proportional, {witnessed} with mismatch witness",
        agree + witnessed,
        Interpretation::default().id
    ))
}

fn quantum_classical_consistency() -> Verdict {
    for n in 0..=8 {
        let q = finite_dim_quantum(n).unwrap();
        let c = finite_dim_classical(n).unwrap();
        for g in [Generator::E, Generator::F] {
            ensure(
                q.specialized_matrix(g).unwrap() == *c.matrix(g).unwrap(),
                || format!("F_{n} {g}"),
            )?;
        }
        let k = q.specialized_matrix(Generator::K).unwrap();
        ensure((0..=n as usize).all(|i| k.get(i, i) == rational(1)), || {
            format!("F_{n} K at v=1")
        })?;
    }
    let mut vectors = 0;
    for m in 0..=5i64 {
        for n in 0..=5i64 {
            let cq = tensor_quantum(
                &finite_dim_quantum(m).unwrap(),
                &finite_dim_quantum(n).unwrap(),
            )
            .unwrap();
            let cc = tensor_classical(
                &finite_dim_classical(m).unwrap(),
                &finite_dim_classical(n).unwrap(),
            )
            .unwrap();
            let hq = highest_weight_vectors(&cq).unwrap();
            let hc = highest_weight_vectors(&cc).unwrap();
            ensure(hq.len() == hc.len(), || format!("({m},{n}) count"))?;
            for ((wq, vq), (wc, vc)) in hq.iter().zip(&hc) {
                let mut coords: Vec<Rational> =
                    (0..cq.dim()).map(|i| vq.get(i).specialize_one()).collect();
                Rational::normalize_line(&mut coords);
                let spec = Vector::from_entries(coords.into_iter().enumerate());
                ensure(wq == wc && spec == *vc, || format!("({m},{n}) weight {wq}"))?;
                vectors += 1;
            }
        }
    }
    Ok(format!(
        "F_0..F_8 matrices and {vectors} highest-weight vectors"
    ))
}

fn q_identities() -> Verdict {
    let v_minus = LaurentPoly::from_int_terms(&[(1, 1), (-1, -1)]);
    let mut fact = rational(1);
    for n in 0..=12i64 {
        if n >= 1 {
            fact *= rational(n);
            ensure(
                &q_int(n) * &v_minus == LaurentPoly::from_int_terms(&[(n, 1), (-n, -1)]),
                || format!("[{n}] closed form"),
            )?;
        }
        let qf = q_fact(n).unwrap();
        ensure(qf.specialize_one() == fact, || format!("[{n}]! at v=1"))?;
        ensure(q_int(n).bar() == q_int(n) && qf.bar() == qf, || {
            format!("bar symmetry n={n}")
        })?;
        for k in 0..=n {
            let b = q_binom(n, k).unwrap();
            ensure(b.bar() == b, || format!("bar symmetry ({n} {k})"))?;
            if 1 <= k && k < n {
                let rhs = &q_binom(n - 1, k).unwrap().shift(k)
                    + &q_binom(n - 1, k - 1).unwrap().shift(k - n);
                ensure(b == rhs, || format!("q-Pascal ({n} {k})"))?;
            }
        }
    }
    Ok("n <= 12".into())
}

fn cli_contract() -> Verdict {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let manifest = std::fs::read_to_string(dir.join("cases.txt")).map_err(|e| e.to_string())?;
    let mut count = 0;
    let mut fault_injection = false;
    for line in manifest
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        let (name, code): (&str, i32) = (parts[0], parts[1].parse().unwrap());
        let args: Vec<&str> = parts[2].split(' ').collect();
        let out = Command::new(env!("CARGO_BIN_EXE_qsl2"))
            .args(&args)
            .output()
            .map_err(|e| e.to_string())?;
        let want = std::fs::read(dir.join(format!("{name}.json"))).map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(code), || {
            format!("{name}: exit {:?}, want {code}", out.status.code())
        })?;
        ensure(out.stdout == want, || {
            format!("{name}: output differs from golden file")
        })?;
        fault_injection |= args.contains(&"--perturb") && code == 1;
        count += 1;
    }
    ensure(fault_injection, || {
        "no fault-injection case in the golden manifest".into()
    })?;
    Ok(format!(
        "{count} golden invocations byte-identical, exit codes honored"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "1 clebsch-gordan decomposition, m,n <= 8",
            Duration::from_secs(10),
            clebsch_gordan_table,
        ),
        (
            "2 relation verification",
            Duration::from_secs(5),
            relation_verification,
        ),
        (
            "3 highest-weight oracle soundness, m,n <= 6",
            Duration::from_secs(30),
            oracle_soundness,
        ),
        (
            "4 phi formula adjudication, m,n <= 4",
            Duration::from_secs(10),
            phi_adjudication,
        ),
        (
            "5 quantum-classical consistency",
            Duration::from_secs(30),
            quantum_classical_consistency,
        ),
        (
            "6 q-arithmetic identities",
            Duration::from_secs(10),
            q_identities,
        ),
        ("7 cli contract", Duration::from_secs(30), cli_contract),
    ];
    let mut failed = Vec::new();
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(detail) if elapsed <= budget => Ok(detail),
            Ok(detail) => Err(format!("{detail}; over budget")),
            Err(e) => Err(e),
        };
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        println!(
            "{tag} criterion {name} [tolerance: exact; {:.2}s of {}s budget] {detail}",
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        if verdict.is_err() {
            failed.push(name);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
