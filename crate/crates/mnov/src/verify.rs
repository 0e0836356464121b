//! Verification suites: deterministic desk-scale checks of the freeness
//! theorems, the defining identities, and the combinatorial
//! correspondences. Every suite draws its randomness from one seeded
//! stream, so reports are reproducible from `(seed, flags)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use mnov_core::algebra::{
    brace, defect_arg_exchange, defect_letter_exchange, defect_pre_lie, defect_right_commute,
    MultiPreLie,
};
use mnov_core::dectree::{self, DecTree, RawFactor, RawTree, TreeAlgebra};
use mnov_core::genidx::{self, GenAlgebra};
use mnov_core::letter::{coord_letters, gen_set, sym_alphabet};
use mnov_core::magnov::{
    self, enumerate_normal, enumerate_terms, eval_poly, FreenessSolver, Normalizer,
};
use mnov_core::spdeidx::{self, RedexOrder, SpdeAlgebra};
use mnov_core::{Gen, Letter, MultiIdx, Poly, Scalar};

use crate::context::Context;
use crate::json as out_json;
use crate::print;
use crate::sample::Sampler;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Identities,
    FreenessGen,
    FreenessSpde,
    Braces,
    Morphism,
    Rotation,
    Words,
    Trees,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Identities,
        Suite::FreenessGen,
        Suite::FreenessSpde,
        Suite::Braces,
        Suite::Morphism,
        Suite::Rotation,
        Suite::Words,
        Suite::Trees,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::FreenessGen => "freeness-gen",
            Suite::FreenessSpde => "freeness-spde",
            Suite::Braces => "braces",
            Suite::Morphism => "morphism",
            Suite::Rotation => "rotation",
            Suite::Words => "words",
            Suite::Trees => "trees",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown suite `{}`; expected one of {}",
            self.0,
            Suite::ALL
                .iter()
                .map(|s| s.name())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct Params {
    pub seed: u64,
    pub max_degree: Option<u32>,
    pub max_leaves: Option<u32>,
    pub samples: Option<u64>,
    pub dims: Option<usize>,
    pub letter_cap: Option<u32>,
    pub partial_cap: Option<u32>,
    pub letters: Option<u32>,
    pub labels: Option<u32>,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            seed: 42,
            max_degree: None,
            max_leaves: None,
            samples: None,
            dims: None,
            letter_cap: None,
            partial_cap: None,
            letters: None,
            labels: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, checked: u64, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed,
            checked,
            detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub passed: bool,
    pub seed: u64,
    pub suite: String,
}

impl Report {
    fn assemble(suite: Suite, seed: u64, checks: Vec<Check>) -> Report {
        Report {
            passed: checks.iter().all(|c| c.passed),
            checks,
            seed,
            suite: suite.name().to_string(),
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

pub fn run(suite: Suite, params: &Params) -> Report {
    let checks = match suite {
        Suite::Identities => identities(params),
        Suite::FreenessGen => freeness_gen(params),
        Suite::FreenessSpde => freeness_spde(params),
        Suite::Braces => braces_suite(params),
        Suite::Morphism => morphism(params),
        Suite::Rotation => rotation(params),
        Suite::Words => words(params),
        Suite::Trees => trees(params),
    };
    Report::assemble(suite, params.seed, checks)
}

// -------------------------------------------------------------------
// identities

fn identities(params: &Params) -> Vec<Check> {
    let samples = params.samples.unwrap_or(500);
    let max_degree = params.max_degree.unwrap_or(4);
    let mut checks = Vec::new();

    // General multi-indices over two abstract letters and two labels.
    {
        let letters = sym_alphabet(2);
        let labels = gen_set(2);
        let alg = GenAlgebra;
        let mut sampler = Sampler::new(params.seed);
        let pools: Vec<_> = (1..=max_degree)
            .map(|d| genidx::enumerate_populated(d, &letters, &labels))
            .collect();
        let mut failures = [0u64; 3];
        for _ in 0..samples {
            let p = sampler.poly_from_pools(&pools);
            let q = sampler.poly_from_pools(&pools);
            let r = sampler.poly_from_pools(&pools);
            let a = sampler.pick(&letters).clone();
            let b = sampler.pick(&letters).clone();
            if !defect_arg_exchange(&alg, &p, &q, &r, &a, &b).is_zero() {
                failures[0] += 1;
            }
            if !defect_letter_exchange(&alg, &p, &q, &r, &a, &b).is_zero() {
                failures[1] += 1;
            }
            if !defect_right_commute(&alg, &p, &q, &r, &a, &b).is_zero() {
                failures[2] += 1;
            }
        }
        for (i, tag) in ["argument exchange", "letter exchange", "right commutativity"]
            .iter()
            .enumerate()
        {
            checks.push(Check::new(
                &format!("general multi-indices: {tag}"),
                failures[i] == 0,
                samples,
                format!("{} failures", failures[i]),
            ));
        }
    }

    // SPDE multi-indices, d = 1, capped letters and partials.
    {
        let letters = coord_letters(1, 1);
        let labels = gen_set(1);
        let alg = SpdeAlgebra;
        let mut sampler = Sampler::new(params.seed ^ 0x5bde);
        let pools: Vec<_> = (1..=max_degree)
            .map(|d| spdeidx::enumerate_populated_capped(d, &letters, &labels, 1, 1))
            .collect();
        let mut failures = [0u64; 3];
        for _ in 0..samples {
            let p = sampler.poly_from_pools(&pools);
            let q = sampler.poly_from_pools(&pools);
            let r = sampler.poly_from_pools(&pools);
            let a = sampler.pick(&letters).clone();
            let b = sampler.pick(&letters).clone();
            if !defect_arg_exchange(&alg, &p, &q, &r, &a, &b).is_zero() {
                failures[0] += 1;
            }
            if !defect_letter_exchange(&alg, &p, &q, &r, &a, &b).is_zero() {
                failures[1] += 1;
            }
            if !defect_right_commute(&alg, &p, &q, &r, &a, &b).is_zero() {
                failures[2] += 1;
            }
        }
        for (i, tag) in ["argument exchange", "letter exchange", "right commutativity"]
            .iter()
            .enumerate()
        {
            checks.push(Check::new(
                &format!("spde multi-indices: {tag}"),
                failures[i] == 0,
                samples,
                format!("{} failures", failures[i]),
            ));
        }
    }

    // Decorated trees carry only the pre-Lie identity.
    {
        let letters = coord_letters(1, 1);
        let labels = gen_set(2);
        let alg = TreeAlgebra;
        let mut sampler = Sampler::new(params.seed ^ 0x7ee5);
        let mut failures = 0u64;
        for _ in 0..samples {
            let (sx, sy, sz) = (1 + sampler.nat(2), 1 + sampler.nat(2), 1 + sampler.nat(1));
            let x = Poly::unit(sampler.dec_tree(&letters, &labels, 1, 1, sx));
            let y = Poly::unit(sampler.dec_tree(&letters, &labels, 1, 1, sy));
            let z = Poly::unit(sampler.dec_tree(&letters, &labels, 1, 1, sz));
            let a = sampler.pick(&letters).clone();
            let b = sampler.pick(&letters).clone();
            if !defect_pre_lie(&alg, &x, &y, &z, &a, &b).is_zero() {
                failures += 1;
            }
        }
        checks.push(Check::new(
            "decorated trees: pre-Lie identity",
            failures == 0,
            samples,
            format!("{failures} failures"),
        ));
    }

    checks
}

// -------------------------------------------------------------------
// freeness-gen

/// Number of partitions of `n`, by the bounded-parts recurrence; the
/// independent oracle for the one-letter dimension table.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    // table[k][m]: partitions of m into parts of size <= k
    let mut row = vec![0u64; n + 1];
    row[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            row[m] += row[m - part];
        }
    }
    row[n]
}

fn freeness_gen(params: &Params) -> Vec<Check> {
    let max_degree = params.max_degree.unwrap_or(5);
    let table_degree = params.max_degree.unwrap_or(7).max(7);
    let num_letters = params.letters.unwrap_or(2);
    let num_labels = params.labels.unwrap_or(2);
    let mut checks = Vec::new();

    // Dimension table for one letter and one label against the
    // partition-number oracle.
    {
        let letters = sym_alphabet(1);
        let labels = gen_set(1);
        let mut rows = Vec::new();
        let mut ok = true;
        for degree in 1..=table_degree {
            let populated = genidx::enumerate_populated(degree, &letters, &labels).len() as u64;
            let normal = enumerate_normal(degree, &letters, &labels).len() as u64;
            let oracle = partition_count(degree - 1);
            ok &= populated == oracle && normal == oracle;
            rows.push(populated.to_string());
        }
        checks.push(Check::new(
            "dimension table (one letter, one label)",
            ok,
            table_degree as u64,
            rows.join(","),
        ));
    }

    // Change of basis: square and invertible in every graded component.
    {
        let mut ok = true;
        let mut components = 0u64;
        for nl in 1..=num_letters {
            for ng in 1..=num_labels {
                let letters = sym_alphabet(nl);
                let labels = gen_set(ng);
                let mut solver = FreenessSolver::new();
                for degree in 1..=max_degree {
                    for stats in solver.degree_stats(degree, &letters, &labels) {
                        components += 1;
                        if !stats.invertible || stats.normal_count != stats.populated_count {
                            ok = false;
                        }
                    }
                }
            }
        }
        checks.push(Check::new(
            "evaluation matrices square and invertible",
            ok,
            components,
            format!("{components} graded components"),
        ));
    }

    // The rewriting normalizer agrees with the exact solve.
    {
        let letters = sym_alphabet(num_letters);
        let labels = gen_set(num_labels);
        let mut rewriter = Normalizer::new();
        let mut solver = FreenessSolver::new();
        let mut ok = true;
        let mut count = 0u64;
        for degree in 1..=max_degree {
            for t in enumerate_terms(degree, &letters, &labels) {
                count += 1;
                let rewritten = rewriter.normal_form(&t);
                match solver.solve_normal_form(&t) {
                    Ok(solved) => {
                        if rewritten != solved {
                            ok = false;
                        }
                    }
                    Err(_) => ok = false,
                }
            }
        }
        checks.push(Check::new(
            "rewriting equals exact solve",
            ok,
            count,
            format!("{count} monomials up to degree {max_degree}"),
        ));
    }

    // Expressing populated monomials in the generators round-trips.
    {
        let letters = sym_alphabet(num_letters);
        let labels = gen_set(num_labels);
        let mut solver = FreenessSolver::new();
        let alg = GenAlgebra;
        let mut ok = true;
        let mut count = 0u64;
        for degree in 1..=max_degree {
            for m in genidx::enumerate_populated(degree, &letters, &labels) {
                count += 1;
                match solver.express_in_generators(&m) {
                    Ok(expr) => {
                        if eval_poly(&expr, &alg) != Poly::unit(m.clone()) {
                            ok = false;
                        }
                    }
                    Err(_) => ok = false,
                }
            }
        }
        checks.push(Check::new(
            "generator expansion round trip",
            ok,
            count,
            format!("{count} populated monomials up to degree {max_degree}"),
        ));
    }

    checks
}

// -------------------------------------------------------------------
// freeness-spde

fn freeness_spde(params: &Params) -> Vec<Check> {
    let max_degree = params.max_degree.unwrap_or(3);
    let max_dims = params.dims.unwrap_or(1);
    let letter_cap = params.letter_cap.unwrap_or(1);
    let partial_cap = params.partial_cap.unwrap_or(1);
    let mut checks = Vec::new();
    for dims in 0..=max_dims {
        let letters = coord_letters(dims, letter_cap);
        let labels = gen_set(1);
        let report =
            spdeidx::free_generation_check(max_degree, &letters, &labels, dims, partial_cap);
        let rows: Vec<String> = report
            .rows
            .iter()
            .map(|r| format!("{}={}/{}", r.degree, r.span_dim, r.populated_count))
            .collect();
        checks.push(Check::new(
            &format!("generated span matches populated count, d={dims}"),
            report.all_equal(),
            report.rows.len() as u64,
            rows.join(" "),
        ));
    }
    checks
}

// -------------------------------------------------------------------
// braces

fn braces_suite(params: &Params) -> Vec<Check> {
    let max_arity = params.max_degree.unwrap_or(4).min(4);
    let letters = sym_alphabet(2);
    let mut checks = Vec::new();

    // The closed multidifferential formula equals the recursion.
    {
        let alg = GenAlgebra;
        let head_label = Gen(0);
        let mut ok = true;
        let mut count = 0u64;
        for arity in 1..=max_arity {
            let args: Vec<_> = (0..arity)
                .map(|i| alg.generator(Gen(1 + i)))
                .collect();
            for tuple in letter_tuples(&letters, arity as usize) {
                count += 1;
                let via_recursion =
                    brace(&alg, &alg.generator(head_label), &args, &tuple).expect("arity matches");
                // Closed formula: the iterated derivative of the head
                // times the product of the arguments.
                let mut derived = alg.generator(head_label);
                for a in &tuple {
                    derived = genidx::derivation(a, &derived);
                }
                let mut closed = derived;
                for arg in &args {
                    closed = closed.mul_poly(arg);
                }
                if via_recursion != closed {
                    ok = false;
                }
            }
        }
        checks.push(Check::new(
            "brace recursion equals closed multidifferential formula",
            ok,
            count,
            format!("arities 1..={max_arity}, all letter tuples"),
        ));
    }

    // Braces of generators on trees are corollas.
    {
        let alg = TreeAlgebra;
        let mut ok = true;
        let mut count = 0u64;
        for arity in 1..=max_arity {
            let head = alg.generator(Gen(0));
            let args: Vec<_> = (0..arity)
                .map(|i| alg.generator(Gen(1 + i)))
                .collect();
            for tuple in letter_tuples(&letters, arity as usize) {
                count += 1;
                let braced = brace(&alg, &head, &args, &tuple).expect("arity matches");
                let children: Vec<(Letter, DecTree)> = tuple
                    .iter()
                    .zip(0..arity)
                    .map(|(a, i)| (a.clone(), DecTree::leaf(Gen(1 + i))))
                    .collect();
                let corolla = DecTree::node(MultiIdx::new(), children, Gen(0));
                if braced != Poly::unit(corolla) {
                    ok = false;
                }
            }
        }
        checks.push(Check::new(
            "braces of generators are corollas",
            ok,
            count,
            format!("arities 1..={max_arity}, all letter tuples"),
        ));
    }

    checks
}

fn letter_tuples(letters: &[Letter], arity: usize) -> Vec<Vec<Letter>> {
    let mut out: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::new();
        for tuple in &out {
            for l in letters {
                let mut t = tuple.clone();
                t.push(l.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

// -------------------------------------------------------------------
// morphism

fn morphism(params: &Params) -> Vec<Check> {
    let samples = params.samples.unwrap_or(200);
    let dims = params.dims.unwrap_or(1);
    let letter_cap = params.letter_cap.unwrap_or(1);
    let letters = coord_letters(dims, letter_cap);
    let labels = gen_set(2);
    let mut sampler = Sampler::new(params.seed);
    let mut failures = 0u64;
    for _ in 0..samples {
        let (scion_size, target_size) = (1 + sampler.nat(3), 1 + sampler.nat(3));
        let scion = sampler.dec_tree(&letters, &labels, dims, 1, scion_size);
        let target = sampler.dec_tree(&letters, &labels, dims, 1, target_size);
        let n = sampler.pick(&letters).clone();
        let grafted = dectree::graft(&n, &scion, &target);
        let lhs = dectree::multiindex_poly(&grafted);
        let rhs = spdeidx::product(
            &n,
            &Poly::unit(dectree::multiindex(&scion)),
            &Poly::unit(dectree::multiindex(&target)),
        );
        if lhs != rhs {
            failures += 1;
        }
    }
    vec![Check::new(
        "tree-to-multi-index morphism intertwines grafting",
        failures == 0,
        samples,
        format!("{failures} failures"),
    )]
}

// -------------------------------------------------------------------
// rotation

fn rotation(params: &Params) -> Vec<Check> {
    let max_leaves = params.max_leaves.unwrap_or(7);
    let samples = params.samples.unwrap_or(300);
    let mut checks = Vec::new();
    {
        // Exhaustive over shapes: one letter, one generator.
        let letters = sym_alphabet(1);
        let labels = gen_set(1);
        let mut ok = true;
        let mut count = 0u64;
        for degree in 1..=max_leaves {
            for t in enumerate_terms(degree, &letters, &labels) {
                count += 1;
                let rotated = magnov::knuth_rotation(&t);
                if rotated.vertex_count() != t.degree()
                    || magnov::knuth_rotation_inv(&rotated) != t
                {
                    ok = false;
                }
            }
        }
        checks.push(Check::new(
            "round trip on all shapes",
            ok,
            count,
            format!("{count} shapes with up to {max_leaves} leaves"),
        ));
    }
    {
        // Sampled labellings over two letters and two generators.
        let letters = sym_alphabet(2);
        let labels = gen_set(2);
        let mut sampler = Sampler::new(params.seed);
        let mut ok = true;
        for _ in 0..samples {
            let leaves = 1 + sampler.nat(max_leaves - 1);
            let t = sampler.magma_term(&letters, &labels, leaves);
            let rotated = magnov::knuth_rotation(&t);
            if magnov::knuth_rotation_inv(&rotated) != t {
                ok = false;
            }
        }
        checks.push(Check::new(
            "round trip on sampled labellings",
            ok,
            samples,
            format!("{samples} random labelled terms"),
        ));
    }
    checks
}

// -------------------------------------------------------------------
// words

fn words(params: &Params) -> Vec<Check> {
    let samples = params.samples.unwrap_or(500);
    let dims = params.dims.unwrap_or(2);
    let weight_cap = params.letter_cap.unwrap_or(3);
    let mut checks = Vec::new();

    // Confluence: two redex orders normalize identically.
    {
        let mut sampler = Sampler::new(params.seed);
        let mut failures = 0u64;
        for _ in 0..samples {
            let len = sampler.nat(6) as usize;
            let word = sampler.raw_word(dims, weight_cap, len);
            let left = spdeidx::word_normal_form_with(&word, RedexOrder::Leftmost);
            let right = spdeidx::word_normal_form_with(&word, RedexOrder::Rightmost);
            if left != right {
                failures += 1;
            }
        }
        checks.push(Check::new(
            "word normalization is confluent",
            failures == 0,
            samples,
            format!("{failures} failures"),
        ));
    }

    // Operator relation: ∂_i D^{(n)} − D^{(n)} ∂_i = n_i D^{(n−e_i)}.
    {
        let op_samples = params.samples.unwrap_or(500).min(200);
        let mut sampler = Sampler::new(params.seed ^ 0x30d5);
        let mut failures = 0u64;
        let mut zero_cases = 0u64;
        let mut positive_cases = 0u64;
        for _ in 0..op_samples {
            let p = sampler.spde_variable_poly(dims, weight_cap);
            let n = sampler.coord_letter(dims, weight_cap);
            for i in 0..=dims as u32 {
                let lhs = &spdeidx::partial(i, &spdeidx::derivation(&n, &p))
                    - &spdeidx::derivation(&n, &spdeidx::partial(i, &p));
                let ni = n.coord_get(i as usize);
                let rhs = match n.decremented(i as usize) {
                    Some(dec) => {
                        positive_cases += 1;
                        spdeidx::derivation(&dec, &p).scaled(&Scalar::from_int(ni as i64))
                    }
                    None => {
                        zero_cases += 1;
                        Poly::zero()
                    }
                };
                if lhs != rhs {
                    failures += 1;
                }
            }
        }
        checks.push(Check::new(
            "partials and derivative letters satisfy the commutation relation",
            failures == 0 && zero_cases > 0 && positive_cases > 0,
            op_samples,
            format!(
                "{failures} failures, {zero_cases} vanishing cases, {positive_cases} nonvanishing"
            ),
        ));
    }

    // The two derivation families commute internally.
    {
        let mut sampler = Sampler::new(params.seed ^ 0xc033);
        let mut failures = 0u64;
        let comm_samples = 100u64;
        for _ in 0..comm_samples {
            let p = sampler.spde_variable_poly(dims, weight_cap);
            let n = sampler.coord_letter(dims, weight_cap);
            let m = sampler.coord_letter(dims, weight_cap);
            let dd = &spdeidx::derivation(&n, &spdeidx::derivation(&m, &p))
                - &spdeidx::derivation(&m, &spdeidx::derivation(&n, &p));
            let i = sampler.nat(dims as u32);
            let j = sampler.nat(dims as u32);
            let pp = &spdeidx::partial(i, &spdeidx::partial(j, &p))
                - &spdeidx::partial(j, &spdeidx::partial(i, &p));
            if !dd.is_zero() || !pp.is_zero() {
                failures += 1;
            }
        }
        checks.push(Check::new(
            "derivative letters commute, partials commute",
            failures == 0,
            comm_samples,
            format!("{failures} failures"),
        ));
    }

    checks
}

// -------------------------------------------------------------------
// trees

/// The worked two-term normalization with its elementary differential:
/// `I_(1)(Ξ_l) X_0 Ξ_l` over `d = 0`.
pub fn worked_example() -> (Value, bool) {
    let mut ctx = Context::new(0);
    ctx.declare_label("l");
    let b = Letter::coord(vec![1]);
    let raw = RawTree {
        factors: vec![
            RawFactor::Planted(b.clone(), RawTree::leaf(Gen(0))),
            RawFactor::X(0),
        ],
        noise: Gen(0),
    };
    let normal = dectree::normal_form(&raw);
    let differential = dectree::differential(&raw);

    // Expected: X_0 I_(1)(Ξ_l) Ξ_l + I_(0)(Ξ_l) Ξ_l.
    let first = DecTree::node(
        MultiIdx::single(0),
        vec![(b, DecTree::leaf(Gen(0)))],
        Gen(0),
    );
    let second = DecTree::node(
        MultiIdx::new(),
        vec![(Letter::coord(vec![0]), DecTree::leaf(Gen(0)))],
        Gen(0),
    );
    let expected_normal = &Poly::unit(first) + &Poly::unit(second);
    // Expected differential: z_{(l,∅)} · z_{(l,(1)d_0)}, the encoding of
    // the outer-derivative operator product on the noise symbol.
    let derived_var = spdeidx::SpdeVar::new(
        Gen(0),
        spdeidx::NormalWord::new(
            MultiIdx::single(Letter::coord(vec![1])),
            MultiIdx::single(0),
        ),
    );
    let expected_diff = Poly::unit(MultiIdx::from_entries([
        (spdeidx::SpdeVar::bare(Gen(0)), 1),
        (derived_var, 1),
    ]));
    let passed = normal == expected_normal && differential == expected_diff;

    let value = json!({
        "context": out_json::context_value(&ctx, "tree"),
        "differential": out_json::terms_value(&differential, &ctx, |m, c| print::spde_monomial(m, c)),
        "input": "I((1), T[l |;]) X0 T[l |;]",
        "normal_form": out_json::terms_value(&normal, &ctx, |t, c| print::tree(t, c)),
    });
    (value, passed)
}

fn trees(params: &Params) -> Vec<Check> {
    let mut checks = Vec::new();

    {
        let (_, passed) = worked_example();
        checks.push(Check::new(
            "worked two-term normalization and its differential",
            passed,
            1,
            "I_(1)(Ξ_l) X_0 Ξ_l".to_string(),
        ));
    }

    // Normalization is idempotent: canonical trees are fixed points.
    {
        let letters = coord_letters(1, 1);
        let labels = gen_set(2);
        let mut sampler = Sampler::new(params.seed);
        let samples = params.samples.unwrap_or(200);
        let mut failures = 0u64;
        for _ in 0..samples {
            let size = 1 + sampler.nat(3);
            let t = sampler.dec_tree(&letters, &labels, 1, 1, size);
            let raw = RawTree::from_canonical(&t);
            let nf = dectree::normal_form(&raw);
            if nf != Poly::unit(t.clone()) {
                failures += 1;
                continue;
            }
            // Normalizing a normal form again changes nothing.
            let twice: Poly<DecTree> = nf.map_basis(|u| {
                dectree::normal_form(&RawTree::from_canonical(u))
            });
            if twice != nf {
                failures += 1;
            }
        }
        checks.push(Check::new(
            "normalization is idempotent",
            failures == 0,
            samples,
            format!("{failures} failures"),
        ));
    }

    // Basis counts match the decorated rooted-tree oracle.
    {
        let letters = coord_letters(0, 1);
        let labels = gen_set(1);
        let dims = 0usize;
        let x_cap = 1u32;
        let max = params.max_degree.unwrap_or(5).min(6);
        let vertex_labels = (labels.len() as u64) * ((x_cap as u64 + 1).pow(dims as u32 + 1));
        let edge_labels = letters.len() as u64;
        let oracle = decorated_tree_counts(vertex_labels, edge_labels, max);
        let mut ok = true;
        let mut rows = Vec::new();
        for v in 1..=max {
            let got = dectree::enumerate_trees(v, &letters, &labels, dims, x_cap).len() as u64;
            rows.push(got.to_string());
            if got != oracle[v as usize] {
                ok = false;
            }
        }
        checks.push(Check::new(
            "canonical tree counts match the rooted-tree oracle",
            ok,
            max as u64,
            rows.join(","),
        ));
    }

    checks
}

/// Counts of rooted trees with `g` vertex labels and `a` edge labels via
/// the Euler-transform recurrence; independent of the tree enumerator.
pub fn decorated_tree_counts(g: u64, a: u64, max: u32) -> Vec<u64> {
    let max = max as usize;
    let mut t = vec![0u64; max + 1];
    let mut h = vec![0u64; max.max(1)];
    h[0] = 1;
    if max >= 1 {
        t[1] = g;
    }
    for v in 2..=max {
        let m = v - 1;
        let mut hm = 0u64;
        for k in 1..=m {
            let mut sigma = 0u64;
            for j in 1..=k {
                if k % j == 0 {
                    sigma += j as u64 * a * t[j];
                }
            }
            hm += sigma * h[m - k];
        }
        h[m] = hm / m as u64;
        t[v] = g * h[m];
    }
    t
}
