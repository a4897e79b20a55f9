use std::fmt::Write as _;

use qsl2::modrep::{
    check_relations, finite_dim_classical, finite_dim_quantum, rasskazova, verma_classical,
    Coefficient, Generator, RasskazovaParams, Vector, WeightModule,
};
use qsl2::qarith::{q_fact, q_int, rational, Rational};
use qsl2::tensorcg::{
    cg_decompose, decompose_by_character, highest_weight_vectors, phi_vs_oracle, tensor_classical,
    tensor_quantum, ComparisonReport, Decomposition, Interpretation, TensorError,
};
use serde_json::{json, Map, Value};

use crate::encode;

/// Result of a command before it is rendered in the requested format.
pub struct Output {
    pub interpretation: Option<&'static str>,
    pub payload: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub pretty: String,
    /// Set when an internal check failed; the output is still emitted, with exit status 1.
    pub failure: Option<String>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<TensorError> for CliError {
    fn from(e: TensorError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<qsl2::modrep::ModRepError> for CliError {
    fn from(e: qsl2::modrep::ModRepError) -> Self {
        CliError::Internal(e.to_string())
    }
}

fn decomposition_pairs(d: &Decomposition) -> Value {
    Value::Array(d.pairs().into_iter().map(|(w, m)| json!([w, m])).collect())
}

pub fn decompose(m: usize, n: usize, quantum: bool) -> Result<Output, CliError> {
    let expected = cg_decompose(m, n);
    let by_character = if quantum {
        let a = finite_dim_quantum(m as i64)?;
        let b = finite_dim_quantum(n as i64)?;
        decompose_by_character(&tensor_quantum(&a, &b)?)?
    } else {
        let a = finite_dim_classical(m as i64)?;
        let b = finite_dim_classical(n as i64)?;
        decompose_by_character(&tensor_classical(&a, &b)?)?
    };
    let failure = (by_character != expected).then(|| {
        format!(
            "character decomposition {:?} disagrees with {:?}",
            by_character.pairs(),
            expected.pairs()
        )
    });

    let mut pretty = format!("F_{m} ⊗ F_{n} =");
    let summands: Vec<String> = expected
        .pairs()
        .iter()
        .map(|(w, _)| format!("F_{w}"))
        .collect();
    let _ = writeln!(pretty, " {}", summands.join(" ⊕ "));
    Ok(Output {
        interpretation: None,
        payload: decomposition_pairs(&expected),
        header: vec!["weight", "multiplicity"],
        rows: expected
            .pairs()
            .iter()
            .map(|(w, k)| vec![w.to_string(), k.to_string()])
            .collect(),
        pretty,
        failure,
    })
}

fn hw_vector<S: Coefficient>(module: &WeightModule<S>, weight: i64) -> Result<Vector<S>, CliError> {
    let mut hits: Vec<Vector<S>> = highest_weight_vectors(module)?
        .into_iter()
        .filter(|(w, _)| *w == rational(weight))
        .map(|(_, v)| v)
        .collect();
    if hits.len() != 1 {
        return Err(CliError::Internal(format!(
            "expected one highest-weight vector of weight {weight}, found {}",
            hits.len()
        )));
    }
    Ok(hits.pop().expect("one vector"))
}

fn vector_entries<S: Coefficient>(
    module: &WeightModule<S>,
    x: &Vector<S>,
) -> Vec<(String, qsl2::Scalar)> {
    x.iter()
        .map(|(i, c)| (module.label(i).to_string(), c.clone().into_scalar()))
        .collect()
}

fn comparison_json(r: &ComparisonReport) -> Value {
    let mut obj = Map::new();
    obj.insert("interpretation".into(), json!(r.interpretation));
    obj.insert("proportional".into(), json!(r.proportional));
    obj.insert("oracle_certified".into(), json!(r.oracle_certified));
    obj.insert(
        "oracle".into(),
        encode::label_map(r.oracle.iter().map(|(l, c)| (l, encode::laurent(c)))),
    );
    obj.insert(
        "phi".into(),
        encode::label_map(r.phi.iter().map(|(l, c)| (l, encode::ratfunc(c)))),
    );
    if let Some(s) = &r.scalar {
        obj.insert("scalar".into(), encode::ratfunc(s));
    }
    if let Some(w) = &r.witness {
        obj.insert(
            "witness".into(),
            json!({
                "label": w.label.to_string(),
                "reference": w.reference.to_string(),
                "phi_coefficient": encode::ratfunc(&w.phi_coefficient),
                "expected_coefficient": encode::ratfunc(&w.expected_coefficient),
            }),
        );
    }
    Value::Object(obj)
}

pub fn hwv(
    m: usize,
    n: usize,
    p: usize,
    quantum: bool,
    interp: Interpretation,
) -> Result<Output, CliError> {
    if p > m.min(n) {
        return Err(CliError::Usage(format!(
            "p = {p} exceeds min(m, n) = {}",
            m.min(n)
        )));
    }
    let weight = (m + n) as i64 - 2 * p as i64;
    let (entries, comparison) = if quantum {
        let module = tensor_quantum(
            &finite_dim_quantum(m as i64)?,
            &finite_dim_quantum(n as i64)?,
        )?;
        let x = hw_vector(&module, weight)?;
        (
            vector_entries(&module, &x),
            Some(phi_vs_oracle(m, n, p, interp)?),
        )
    } else {
        let module = tensor_classical(
            &finite_dim_classical(m as i64)?,
            &finite_dim_classical(n as i64)?,
        )?;
        let x = hw_vector(&module, weight)?;
        (vector_entries(&module, &x), None)
    };

    let mut payload = Map::new();
    payload.insert("m".into(), json!(m));
    payload.insert("n".into(), json!(n));
    payload.insert("p".into(), json!(p));
    payload.insert("weight".into(), json!(weight));
    payload.insert(
        "flavor".into(),
        json!(if quantum { "quantum" } else { "classical" }),
    );
    payload.insert(
        "vector".into(),
        Value::Object(
            entries
                .iter()
                .map(|(l, s)| (l.clone(), encode::scalar(s)))
                .collect(),
        ),
    );

    let mut pretty = format!("weight {weight} highest-weight vector in F_{m} ⊗ F_{n}:\n");
    for (l, s) in &entries {
        let _ = writeln!(pretty, "  {l}: {s}");
    }
    let mut failure = None;
    if let Some(r) = &comparison {
        payload.insert("comparison".into(), comparison_json(r));
        let _ = writeln!(pretty, "phi ({}):", r.interpretation);
        for (l, c) in &r.phi {
            let _ = writeln!(pretty, "  {l}: {c}");
        }
        match (&r.scalar, &r.witness) {
            (Some(s), _) => {
                let _ = writeln!(pretty, "proportional: phi = ({s}) * oracle");
            }
            (None, Some(w)) => {
                let _ = writeln!(
                    pretty,
                    "not proportional: at {} phi has {} but {} is needed to match {}",
                    w.label, w.phi_coefficient, w.expected_coefficient, w.reference
                );
            }
            (None, None) => {}
        }
        if !r.oracle_certified {
            failure = Some("oracle vector failed its annihilation certificate".to_string());
        }
    }

    Ok(Output {
        interpretation: comparison.as_ref().map(|r| r.interpretation),
        payload: Value::Object(payload),
        header: vec!["label", "coefficient"],
        rows: entries
            .iter()
            .map(|(l, s)| vec![l.clone(), encode::scalar_text(s)])
            .collect(),
        pretty,
        failure,
    })
}

pub enum ModuleSpec {
    FinDim {
        n: u32,
        quantum: bool,
    },
    Verma {
        hw: Rational,
        depth: i64,
    },
    Rasskazova {
        beta: Rational,
        lambda: Rational,
        n: usize,
        window: usize,
    },
}

pub type Perturbation = (Generator, usize, usize);

pub fn check(
    spec: ModuleSpec,
    perturb: Option<Perturbation>,
    describe: bool,
) -> Result<Output, CliError> {
    let usage = |e: qsl2::modrep::ModRepError| CliError::Usage(e.to_string());
    match spec {
        ModuleSpec::FinDim { n, quantum: true } => check_module(
            finite_dim_quantum(n as i64).map_err(usage)?,
            perturb,
            describe,
        ),
        ModuleSpec::FinDim { n, quantum: false } => check_module(
            finite_dim_classical(n as i64).map_err(usage)?,
            perturb,
            describe,
        ),
        ModuleSpec::Verma { hw, depth } => check_module(
            verma_classical(&hw, depth).map_err(usage)?,
            perturb,
            describe,
        ),
        ModuleSpec::Rasskazova {
            beta,
            lambda,
            n,
            window,
        } => {
            let params = RasskazovaParams::new(beta, lambda, n, window).map_err(usage)?;
            check_module(rasskazova(&params).map_err(usage)?, perturb, describe)
        }
    }
}

fn check_module<S: Coefficient>(
    module: WeightModule<S>,
    perturb: Option<Perturbation>,
    describe: bool,
) -> Result<Output, CliError> {
    let module = match perturb {
        Some((g, row, col)) => module
            .perturbed(g, row, col, &S::one())
            .map_err(|e| CliError::Usage(e.to_string()))?,
        None => module,
    };
    let report = check_relations(&module);

    let failures: Vec<Value> = report
        .failures()
        .map(|o| {
            let defect = o.defect.as_deref().unwrap_or(&[]);
            json!({
                "relation": o.relation.name(),
                "basis": o.basis.to_string(),
                "defect": encode::label_map(defect.iter().map(|(l, s)| (l, encode::scalar(s)))),
            })
        })
        .collect();
    let violations: Vec<Value> = report
        .weight_violations
        .iter()
        .map(|(g, r, c)| json!({ "generator": g.symbol(S::FLAVOR), "row": r.to_string(), "column": c.to_string() }))
        .collect();
    let mut payload = json!({
        "module": report.module,
        "flavor": report.flavor.to_string(),
        "dim": report.dim,
        "relations": report.relations.iter().map(|r| r.name()).collect::<Vec<_>>(),
        "checked": report.checked_vectors(),
        "excluded": report.excluded.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        "failures": failures,
        "weight_violations": violations,
        "passed": report.passed(),
    });
    if describe {
        payload["descriptor"] = descriptor(&module);
    }

    let mut rows: Vec<Vec<String>> = report
        .outcomes
        .iter()
        .map(|o| {
            let status = if o.passed() { "pass" } else { "fail" };
            vec![
                o.relation.name().to_string(),
                o.basis.to_string(),
                status.to_string(),
            ]
        })
        .collect();
    rows.extend(
        report
            .excluded
            .iter()
            .map(|l| vec!["*".to_string(), l.to_string(), "excluded".to_string()]),
    );

    let mut pretty = format!(
        "{} ({}, dim {}): {} of {} basis vectors checked, {} failures\n",
        report.module,
        report.flavor,
        report.dim,
        report.checked_vectors(),
        report.dim,
        report.failure_count()
    );
    if !report.excluded.is_empty() {
        let ex: Vec<String> = report.excluded.iter().map(|l| l.to_string()).collect();
        let _ = writeln!(pretty, "excluded (truncation boundary): {}", ex.join(" "));
    }
    for o in report.failures() {
        let _ = writeln!(pretty, "FAIL {} on {}", o.relation, o.basis);
    }
    for (g, r, c) in &report.weight_violations {
        let _ = writeln!(
            pretty,
            "grading violation in {} at {} <- {}",
            g.symbol(S::FLAVOR),
            r,
            c
        );
    }

    let failure = (!report.passed()).then(|| {
        format!(
            "{} relation failures, {} grading violations",
            report.failure_count(),
            report.weight_violations.len()
        )
    });
    Ok(Output {
        interpretation: None,
        payload,
        header: vec!["relation", "basis", "result"],
        rows,
        pretty,
        failure,
    })
}

/// Flavor, basis, weights and sparse `[row, column, value]` triplets per generator.
fn descriptor<S: Coefficient>(module: &WeightModule<S>) -> Value {
    let mut action = Map::new();
    for &g in module.generators() {
        let matrix = module.matrix(g).expect("generator of the module's flavor");
        let triplets: Vec<Value> = matrix
            .triplets()
            .map(|(r, c, x)| {
                json!([
                    module.label(r).to_string(),
                    module.label(c).to_string(),
                    encode::scalar(&x.clone().into_scalar())
                ])
            })
            .collect();
        action.insert(g.symbol(S::FLAVOR).to_string(), Value::Array(triplets));
    }
    json!({
        "flavor": S::FLAVOR.to_string(),
        "basis": module.basis().iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        "weights": module.weights().iter().map(encode::rational).collect::<Vec<_>>(),
        "action": action,
    })
}

pub fn qtable(max_n: u32) -> Result<Output, CliError> {
    let mut payload = Vec::new();
    let mut rows = Vec::new();
    let mut pretty = String::new();
    for k in 0..=max_n as i64 {
        let qi = q_int(k);
        let qf = q_fact(k).map_err(|e| CliError::Internal(e.to_string()))?;
        payload
            .push(json!({ "n": k, "q_int": encode::laurent(&qi), "q_fact": encode::laurent(&qf) }));
        rows.push(vec![k.to_string(), qi.to_string(), qf.to_string()]);
        let _ = writeln!(pretty, "[{k}] = {qi}\n[{k}]! = {qf}");
    }
    Ok(Output {
        interpretation: None,
        payload: Value::Array(payload),
        header: vec!["n", "q_int", "q_fact"],
        rows,
        pretty,
        failure: None,
    })
}
