//! Canonical printers; `parse(print(e)) = e` for every expression kind.

use mnov_core::dectree::DecTree;
use mnov_core::genidx::{GenMonomial, GenVar};
use mnov_core::magnov::MagmaTerm;
use mnov_core::spdeidx::{NormalWord, SpdeMonomial};
use mnov_core::{Poly, Scalar};

use crate::context::Context;

pub fn magma(t: &MagmaTerm, ctx: &Context) -> String {
    match t {
        MagmaTerm::Leaf(g) => ctx.label_name(*g),
        MagmaTerm::Node(a, l, r) => format!(
            "({} >[{}] {})",
            magma(l, ctx),
            ctx.letter_name(a),
            magma(r, ctx)
        ),
    }
}

pub fn genvar(v: &GenVar, ctx: &Context) -> String {
    let word: Vec<String> = v.word.expanded().map(|a| ctx.letter_name(a)).collect();
    if word.is_empty() {
        format!("z{{{};}}", ctx.label_name(v.label))
    } else {
        format!("z{{{}; {}}}", ctx.label_name(v.label), word.join(", "))
    }
}

pub fn gen_monomial(m: &GenMonomial, ctx: &Context) -> String {
    if m.is_empty() {
        return "1".to_string();
    }
    let vars: Vec<String> = m.expanded().map(|v| genvar(v, ctx)).collect();
    vars.join(" * ")
}

pub fn normal_word(w: &NormalWord, ctx: &Context) -> String {
    let mut parts: Vec<String> = w
        .derivs
        .expanded()
        .map(|n| format!("D{}", ctx.letter_name(n)))
        .collect();
    parts.extend(w.partials.expanded().map(|i| format!("d{i}")));
    parts.join(".")
}

pub fn spde_monomial(m: &SpdeMonomial, ctx: &Context) -> String {
    if m.is_empty() {
        return "1".to_string();
    }
    let vars: Vec<String> = m
        .expanded()
        .map(|v| {
            let word = normal_word(&v.word, ctx);
            if word.is_empty() {
                format!("z{{{};}}", ctx.label_name(v.label))
            } else {
                format!("z{{{}; {}}}", ctx.label_name(v.label), word)
            }
        })
        .collect();
    vars.join(" * ")
}

pub fn tree(t: &DecTree, ctx: &Context) -> String {
    let mut out = format!("T[{} |", ctx.label_name(t.noise));
    for i in t.x_exp.expanded() {
        out.push_str(&format!(" X{i}"));
    }
    if t.x_exp.is_empty() {
        out.push(';');
    } else {
        out.push_str(" ;");
    }
    for (a, c) in &t.children {
        out.push_str(&format!(" I({}, {})", ctx.letter_name(a), tree(c, ctx)));
    }
    out.push(']');
    out
}

/// `c1 b1 + c2 b2 - …` with unit coefficients omitted; `0` when empty.
pub fn poly<B: Ord + Clone>(
    p: &Poly<B>,
    ctx: &Context,
    basis: impl Fn(&B, &Context) -> String,
) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (b, c)) in p.iter().enumerate() {
        let (sign, mag) = if c.is_negative() {
            ("-", -c)
        } else {
            ("+", c.clone())
        };
        if i == 0 {
            if sign == "-" {
                out.push_str("- ");
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if mag.is_one() {
            out.push_str(&basis(b, ctx));
        } else {
            out.push_str(&format!("{} {}", mag, basis(b, ctx)));
        }
    }
    out
}

/// Poly printer over normal words, used for word normal forms.
pub fn word_poly(p: &Poly<NormalWord>, ctx: &Context) -> String {
    poly(p, ctx, |w, ctx| {
        let s = normal_word(w, ctx);
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    })
}

#[allow(dead_code)]
pub fn scalar(c: &Scalar) -> String {
    c.to_string()
}
