//! JSON summaries of a spanning complex.
//!
//! Keys come out sorted (serde_json's default map is ordered), and every
//! field is computed deterministically, so equal inputs give byte-identical
//! documents. Big integers are written as plain JSON numbers.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::graph::{Graph, UnicyclicGraph};
use crate::series::{h_from_f, series_from_f, HVector, HilbertSeries, SeriesError};
use crate::simplicial::{spanning_complex, ComplexError, FVector, Face, ShellingSearch, SimplicialComplex};
use crate::trees::{count_spanning_trees_kirchhoff, TreeError};
use crate::unicyclic::{f_closed, h_closed, hilbert_closed, UnicyclicParams};
use crate::ENUMERATION_GUARD;

const SKIPPED: &str = "skipped";

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Trees(#[from] TreeError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub fn big(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("integer literal is valid JSON"))
}

pub fn big_list(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}

pub fn face_value(f: Face) -> Value {
    json!(f.to_vec())
}

fn algebra_fields(out: &mut Map<String, Value>, f: &FVector, h: &HVector, s: &HilbertSeries) {
    out.insert("dim".into(), json!(f.dim()));
    out.insert("f_vector".into(), big_list(f.entries()));
    out.insert(
        "h_vector".into(),
        json!({ "raw": big_list(h.entries()), "normalized": big_list(h.normalized().entries()) }),
    );
    out.insert(
        "hilbert".into(),
        json!({ "numerator": big_list(s.numerator.coeffs()), "pole_order": s.pole_order }),
    );
}

fn skip_algebra(out: &mut Map<String, Value>) {
    for key in ["dim", "f_vector", "h_vector", "hilbert"] {
        out.insert(key.into(), json!(SKIPPED));
    }
}

fn skip_enumeration(out: &mut Map<String, Value>) {
    for key in ["facet_count", "minimal_nonfaces", "shelling_order", "shift_witness", "shifted"] {
        out.insert(key.into(), json!(SKIPPED));
    }
}

fn closed_form_fields(out: &mut Map<String, Value>, p: UnicyclicParams) {
    algebra_fields(out, &f_closed(p), &h_closed(p), &hilbert_closed(p));
}

fn complex_fields(out: &mut Map<String, Value>, c: &SimplicialComplex) -> Result<(), ReportError> {
    let f = c.f_vector()?;
    let h = h_from_f(&f);
    let s = series_from_f(&f)?;
    algebra_fields(out, &f, &h, &s);
    out.insert("facet_count".into(), json!(c.facets().len()));
    out.insert(
        "minimal_nonfaces".into(),
        Value::Array(c.minimal_nonfaces()?.into_iter().map(face_value).collect()),
    );
    let witness = c.shift_violation()?;
    out.insert("shifted".into(), json!(witness.is_none()));
    out.insert(
        "shift_witness".into(),
        match witness {
            None => Value::Null,
            Some(w) => json!({ "face": w.face.to_vec(), "removed": w.removed, "added": w.added }),
        },
    );
    let shelling = if c.is_pure() {
        match c.find_shelling_order()? {
            ShellingSearch::Found(order) => json!(order.iter().map(|i| i + 1).collect::<Vec<_>>()),
            ShellingSearch::NotShellable => Value::Null,
            ShellingSearch::Unknown => json!("unknown"),
        }
    } else {
        json!("not_pure")
    };
    out.insert("shelling_order".into(), shelling);
    Ok(())
}

/// Report for an explicit graph. Enumeration-backed fields become
/// `"skipped"` past the size limit; f/h/Hilbert data then fall back to the
/// closed forms when the graph is uni-cyclic.
pub fn graph_report(g: &Graph) -> Result<Value, ReportError> {
    let mut out = Map::new();
    out.insert("source".into(), json!("graph"));
    out.insert("vertices".into(), json!(g.vertex_count()));
    out.insert("edges".into(), json!(g.edge_count()));
    out.insert("tree_count".into(), big(&count_spanning_trees_kirchhoff(g)?));
    let unicyclic = UnicyclicGraph::from_graph(g.clone()).ok();
    out.insert(
        "unicyclic".into(),
        match &unicyclic {
            Some(u) => json!({
                "n": u.n(),
                "m": u.cycle_length(),
                "canonical": u.is_canonical(),
                "cycle": u.cycle_edge_labels(),
            }),
            None => Value::Null,
        },
    );
    if g.edge_count() <= ENUMERATION_GUARD {
        let c = spanning_complex(g)?;
        out.insert(
            "facets".into(),
            Value::Array(c.facets().iter().map(|&f| face_value(f)).collect()),
        );
        complex_fields(&mut out, &c)?;
    } else {
        out.insert("facets".into(), json!(SKIPPED));
        skip_enumeration(&mut out);
        match unicyclic {
            Some(u) => {
                let p = UnicyclicParams::new(u.n(), u.cycle_length()).expect("cycle has length >= 3");
                closed_form_fields(&mut out, p);
            }
            None => skip_algebra(&mut out),
        }
    }
    Ok(Value::Object(out))
}

/// Report computed from the closed forms alone; no graph is built.
pub fn closed_form_report(p: UnicyclicParams) -> Value {
    let mut out = Map::new();
    out.insert("source".into(), json!("closed_form"));
    out.insert("vertices".into(), json!(p.n()));
    out.insert("edges".into(), json!(p.n()));
    out.insert("tree_count".into(), json!(p.m()));
    out.insert(
        "unicyclic".into(),
        json!({ "n": p.n(), "m": p.m(), "canonical": true, "cycle": (1..=p.m()).collect::<Vec<_>>() }),
    );
    out.insert("facets".into(), json!(SKIPPED));
    skip_enumeration(&mut out);
    closed_form_fields(&mut out, p);
    Value::Object(out)
}

pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
