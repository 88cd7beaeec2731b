//! Sweep that checks every closed form for `U_{n,m}` against enumeration.
//!
//! One [`VerificationReport`] per `(n, m, shape)` cell. Cells are independent
//! and may run in parallel; the returned list is always in `(n, m, shape)`
//! order.

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::graph::{AttachmentShape, UnicyclicGraph};
use crate::report::{big, big_list, face_value};
use crate::series::{h_from_f, hilbert_function_from_f, series_from_f};
use crate::simplicial::{spanning_complex, Face, ShellingSearch};
use crate::trees::{count_spanning_trees_kirchhoff, enumerate_spanning_trees, unicyclic_spanning_trees};
use crate::unicyclic::{f_closed, h_closed, hilbert_closed, UnicyclicParams};
use crate::Exec;

/// A deliberate defect in one closed form, for checking that the harness
/// notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds one to the top entry of the closed-form f-vector.
    FVectorOffByOne,
}

impl std::str::FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "f-off-by-one" => Ok(Fault::FVectorOffByOne),
            _ => Err(format!("unknown fault `{s}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub expand_to: usize,
    pub shapes: Vec<AttachmentShape>,
    pub fault: Option<Fault>,
    pub exec: Exec,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 9,
            expand_to: 12,
            shapes: vec![AttachmentShape::Chain, AttachmentShape::Star],
            fault: None,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub closed_form_value: Value,
    pub oracle_value: Value,
    #[serde(rename = "match")]
    pub matched: bool,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellParams {
    pub n: usize,
    pub m: usize,
    pub shape: String,
    pub attachment: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub params: CellParams,
    pub checks: Vec<CheckRecord>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.matched)
    }
}

struct Recorder {
    checks: Vec<CheckRecord>,
}

impl Recorder {
    /// Runs `f`, which yields (closed form, oracle); the check passes when
    /// they are equal.
    fn check<F: FnOnce() -> (Value, Value)>(&mut self, name: &str, f: F) {
        let start = Instant::now();
        let (closed, oracle) = f();
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        self.checks.push(CheckRecord {
            name: name.into(),
            matched: closed == oracle,
            closed_form_value: closed,
            oracle_value: oracle,
            elapsed_ms,
        });
    }

    fn fail(&mut self, name: &str, err: String) {
        self.checks.push(CheckRecord {
            name: name.into(),
            closed_form_value: Value::Null,
            oracle_value: json!({ "error": err }),
            matched: false,
            elapsed_ms: 0.0,
        });
    }
}

/// Checks one generated `U_{n,m}`.
pub fn verify_cell(
    n: usize,
    m: usize,
    shape: AttachmentShape,
    expand_to: usize,
    fault: Option<Fault>,
) -> VerificationReport {
    let attachment = shape.parents(n, m);
    let params = CellParams {
        n,
        m,
        shape: shape.name(),
        attachment: attachment.clone(),
    };
    let mut rec = Recorder { checks: Vec::new() };
    run_checks(&mut rec, n, m, &attachment, expand_to, fault);
    let overall = !rec.checks.is_empty() && rec.checks.iter().all(|c| c.matched);
    VerificationReport {
        params,
        checks: rec.checks,
        overall,
    }
}

fn run_checks(
    rec: &mut Recorder,
    n: usize,
    m: usize,
    attachment: &[usize],
    expand_to: usize,
    fault: Option<Fault>,
) {
    let (u, p) = match (
        UnicyclicGraph::generate(n, m, attachment),
        UnicyclicParams::new(n, m),
    ) {
        (Ok(u), Ok(p)) => (u, p),
        (Err(e), _) => return rec.fail("setup", e.to_string()),
        (_, Err(e)) => return rec.fail("setup", e.to_string()),
    };
    let g = u.base();
    let enumerated = match enumerate_spanning_trees(g) {
        Ok(t) => t,
        Err(e) => return rec.fail("spanning_trees", e.to_string()),
    };
    rec.check("spanning_trees", || {
        let mut closed = unicyclic_spanning_trees(&u)
            .expect("generated graphs are canonical")
            .into_trees();
        closed.sort();
        (json!(closed), json!(enumerated.trees()))
    });
    rec.check("tree_count", || {
        let kirchhoff = count_spanning_trees_kirchhoff(g).expect("generated graphs are connected");
        (
            json!({ "kirchhoff": m, "enumerated": m }),
            json!({ "kirchhoff": big(&kirchhoff), "enumerated": enumerated.len() }),
        )
    });

    let complex = match spanning_complex(g) {
        Ok(c) => c,
        Err(e) => return rec.fail("f_vector", e.to_string()),
    };
    let oracle_f = match complex.f_vector() {
        Ok(f) => f,
        Err(e) => return rec.fail("f_vector", e.to_string()),
    };
    let mut closed_f = f_closed(p);
    if fault == Some(Fault::FVectorOffByOne) {
        if let Some(top) = closed_f.0.last_mut() {
            *top += 1;
        }
    }
    rec.check("f_vector", || (big_list(closed_f.entries()), big_list(oracle_f.entries())));
    rec.check("dimension", || (json!(n as isize - 2), json!(complex.dim())));
    rec.check("h_vector", || {
        (big_list(h_closed(p).entries()), big_list(h_from_f(&oracle_f).entries()))
    });
    rec.check("hilbert_numerator", || {
        let closed = hilbert_closed(p);
        let closed_h = h_closed(p).normalized();
        let oracle = series_from_f(&oracle_f).expect("f-vector series is nonzero");
        (
            json!({
                "numerator": big_list(closed.numerator.coeffs()),
                "pole_order": closed.pole_order,
                "h_normalized": big_list(closed_h.entries()),
            }),
            json!({
                "numerator": big_list(oracle.numerator.coeffs()),
                "pole_order": oracle.pole_order,
                "h_normalized": big_list(oracle.numerator.coeffs()),
            }),
        )
    });
    rec.check("hilbert_function", || {
        let closed = hilbert_closed(p).expand(expand_to);
        let oracle: Vec<BigInt> = (0..=expand_to)
            .map(|j| hilbert_function_from_f(&oracle_f, j))
            .collect();
        (big_list(&closed), big_list(&oracle))
    });
    rec.check("h_sum", || {
        (big(&h_closed(p).sum()), json!(complex.facets().len()))
    });
    rec.check("minimal_nonfaces", || {
        let cycle = Face::from_labels(1..=m).expect("m <= 64");
        let oracle = complex
            .minimal_nonfaces()
            .map(|v| Value::Array(v.into_iter().map(face_value).collect()))
            .unwrap_or_else(|e| json!({ "error": e.to_string() }));
        (json!([face_value(cycle)]), oracle)
    });
    rec.check("shifted", || {
        let oracle = match complex.shift_violation() {
            Ok(None) => json!(true),
            Ok(Some(w)) => json!({ "face": w.face.to_vec(), "removed": w.removed, "added": w.added }),
            Err(e) => json!({ "error": e.to_string() }),
        };
        (json!(true), oracle)
    });
    rec.check("shellable", || {
        let oracle = match complex.find_shelling_order() {
            Ok(ShellingSearch::Found(order)) => match complex.is_shelling_order(&order) {
                Ok(true) => json!(true),
                _ => json!({ "invalid_order": order }),
            },
            Ok(other) => json!(format!("{other:?}")),
            Err(e) => json!({ "error": e.to_string() }),
        };
        (json!(true), oracle)
    });
}

/// All cells `3 <= m <= n <= n_max` for every requested shape.
pub fn verify_sweep(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut cells = Vec::new();
    for n in 3..=opts.n_max {
        for m in 3..=n {
            for &shape in &opts.shapes {
                cells.push((n, m, shape));
            }
        }
    }
    let expand_to = opts.expand_to;
    let fault = opts.fault;
    opts.exec.map(cells, |(n, m, shape)| verify_cell(n, m, shape, expand_to, fault))
}
