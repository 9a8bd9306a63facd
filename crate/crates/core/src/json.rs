//! JSON renderings of classes, tableaux and polynomials.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra::{CPoly, NcPoly, QuotientPoly};
use crate::rewrite::{EquivClass, RelationSet};
use crate::tableau::{ShiftedTableau, Tableau};
use crate::word::Word;

/// Small coefficients become JSON numbers, large ones decimal strings.
pub fn coeff_value(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

pub fn class_json(w: &Word, rels: &RelationSet, class: &EquivClass) -> Value {
    let members: Vec<String> = class.members().iter().map(Word::to_string).collect();
    json!({
        "word": w.to_string(),
        "relation_set": rels.name(),
        "class": members,
        "size": class.len(),
    })
}

pub fn tableau_json(t: &Tableau) -> Value {
    let rows: Vec<Vec<String>> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(u8::to_string).collect())
        .collect();
    json!({ "shape": t.shape().parts(), "rows": rows })
}

pub fn shifted_tableau_json(t: &ShiftedTableau) -> Value {
    let rows: Vec<Vec<String>> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    json!({ "shape": t.shape(), "rows": rows })
}

pub fn poly_json(p: &NcPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(w, c)| json!({ "word": w.to_string(), "coeff": coeff_value(c) }))
        .collect();
    json!({
        "context": { "n": p.context().n, "D": p.context().max_degree },
        "terms": terms,
    })
}

pub fn quotient_json(p: &QuotientPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(w, c)| json!({ "word": w.to_string(), "coeff": coeff_value(c) }))
        .collect();
    json!({
        "context": { "n": p.context().n, "D": p.context().max_degree },
        "relation_set": p.relations().name(),
        "terms": terms,
    })
}

pub fn cpoly_json(p: &CPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(k, c)| json!({ "content": k.counts(), "coeff": coeff_value(c) }))
        .collect();
    json!({ "terms": terms })
}
