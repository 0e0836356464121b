//! Machine-readable output. The JSON schema is stable:
//! `{"context": …, "terms": [{"coeff": "p/q", "term": …}]}` with keys
//! sorted and rational coefficients rendered as strings.

use serde_json::{json, Value};

use mnov_core::Poly;

use crate::context::Context;

pub fn context_value(ctx: &Context, kind: &str) -> Value {
    json!({
        "dims": ctx.dims,
        "kind": kind,
        "labels": ctx.labels,
        "letters": ctx.letters,
    })
}

pub fn terms_value<B: Ord + Clone>(
    p: &Poly<B>,
    ctx: &Context,
    basis: impl Fn(&B, &Context) -> String,
) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .map(|(b, c)| {
            json!({
                "coeff": c.to_string(),
                "term": basis(b, ctx),
            })
        })
        .collect();
    Value::Array(terms)
}

pub fn output<B: Ord + Clone>(
    ctx: &Context,
    kind: &str,
    p: &Poly<B>,
    basis: impl Fn(&B, &Context) -> String,
) -> Value {
    json!({
        "context": context_value(ctx, kind),
        "terms": terms_value(p, ctx, basis),
    })
}
