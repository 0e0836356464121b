//! Property-based and exhaustive invariants of the core algebra.

use mnov_core::algebra::MultiPreLie;
use mnov_core::genidx::{self, GenAlgebra, GenPoly};
use mnov_core::letter::{gen_set, sym_alphabet};
use mnov_core::magnov::{
    self, classify, enumerate_normal, enumerate_terms, eval, eval_poly, FreenessSolver,
    MagmaTerm, Normalizer, TermClass,
};
use mnov_core::poly::{apply_derivation, monomials_of_degree};
use mnov_core::{Gen, Letter, MultiIdx, Poly, Scalar};

use proptest::prelude::*;

// ---------------------------------------------------------------------
// Scalars and polynomials

proptest! {
    #[test]
    fn scalar_inverse_cancels(n in -200i64..200, d in 1i64..200) {
        prop_assume!(n != 0);
        let s = Scalar::ratio(n, d);
        prop_assert!((s.inverse().unwrap() * s).is_one());
    }

    #[test]
    fn poly_ring_laws(
        a in small_poly(),
        b in small_poly(),
        c in small_poly(),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        // Multiplication distributes over addition, exactly.
        let left = a.mul_poly(&(&b + &c));
        let right = &a.mul_poly(&b) + &a.mul_poly(&c);
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.mul_poly(&b), b.mul_poly(&a));
    }

    #[test]
    fn leibniz_rule(p in small_poly(), q in small_poly()) {
        let d = ode_derivation();
        let lhs = apply_derivation(&d, &p.mul_poly(&q));
        let rhs = &apply_derivation(&d, &p).mul_poly(&q) + &p.mul_poly(&apply_derivation(&d, &q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivations_commuting_on_variables_commute(p in small_poly()) {
        // Two shift derivations touch disjoint variable data, so they
        // commute on variables and hence on every polynomial.
        let d1 = |v: &(u32, u32)| Poly::unit(MultiIdx::single((v.0 + 1, v.1)));
        let d2 = |v: &(u32, u32)| Poly::unit(MultiIdx::single((v.0, v.1 + 1)));
        let a = apply_derivation(&d2, &apply_derivation(&d1, &p));
        let b = apply_derivation(&d1, &apply_derivation(&d2, &p));
        prop_assert_eq!(a, b);
    }
}

/// Random polynomial of degree at most 4 in three bivariate-indexed
/// variables with small rational coefficients.
fn small_poly() -> impl Strategy<Value = Poly<MultiIdx<(u32, u32)>>> {
    let vars = [(0u32, 0u32), (1, 0), (0, 1)];
    let monomials: Vec<MultiIdx<(u32, u32)>> = (0..=4u32)
        .flat_map(|d| monomials_of_degree(&vars, d))
        .collect();
    let num_monomials = monomials.len();
    proptest::collection::vec((0..num_monomials, -4i64..=4), 0..5).prop_map(move |terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|(i, c)| (monomials[i].clone(), Scalar::from_int(c))),
        )
    })
}

/// `D(z_k) = (k+1) z_{k+1}` on the first variable index.
fn ode_derivation() -> impl Fn(&(u32, u32)) -> Poly<MultiIdx<(u32, u32)>> {
    |v: &(u32, u32)| {
        Poly::term(
            MultiIdx::single((v.0 + 1, v.1)),
            Scalar::from_int(v.0 as i64 + 1),
        )
    }
}

// ---------------------------------------------------------------------
// Rotation

#[test]
fn rotation_round_trip_up_to_seven_leaves() {
    // Exhaustive over shapes with a single letter and generator; the
    // labelled cases are covered exhaustively up to five leaves in the
    // magnov unit tests.
    let letters = sym_alphabet(1);
    let gens = gen_set(1);
    let catalan = [1usize, 1, 2, 5, 14, 42, 132];
    for degree in 1..=7u32 {
        let terms = enumerate_terms(degree, &letters, &gens);
        assert_eq!(terms.len(), catalan[degree as usize - 1]);
        for t in terms {
            let rotated = magnov::knuth_rotation(&t);
            assert_eq!(rotated.vertex_count(), t.degree());
            assert_eq!(magnov::knuth_rotation_inv(&rotated), t);
        }
    }
}

// ---------------------------------------------------------------------
// Normal forms

#[test]
fn rewrite_equals_solve_up_to_five_leaves() {
    let letters = sym_alphabet(2);
    let gens = gen_set(2);
    let mut rewriter = Normalizer::new();
    let mut solver = FreenessSolver::new();
    let alg = GenAlgebra;
    let mut checked = 0usize;
    for degree in 1..=5u32 {
        for t in enumerate_terms(degree, &letters, &gens) {
            let rewritten = rewriter.normal_form(&t);
            let solved = solver.solve_normal_form(&t).expect("invertible component");
            assert_eq!(rewritten, solved, "term {t:?}");
            assert!(rewritten
                .iter()
                .all(|(u, _)| classify(u) == TermClass::Normal));
            assert_eq!(eval_poly(&rewritten, &alg), eval(&t, &alg));
            checked += 1;
        }
    }
    assert_eq!(checked, 2 + 8 + 64 + 640 + 7168);
}

#[test]
fn normal_basis_count_matches_populated_count_up_to_degree_five() {
    for (num_letters, num_gens) in [(1u32, 1u32), (1, 2), (2, 1), (2, 2)] {
        let letters = sym_alphabet(num_letters);
        let gens = gen_set(num_gens);
        for degree in 1..=5u32 {
            let normal = enumerate_normal(degree, &letters, &gens).len();
            let populated = genidx::enumerate_populated(degree, &letters, &gens).len();
            assert_eq!(
                normal, populated,
                "(letters, labels) = ({num_letters}, {num_gens}), degree {degree}"
            );
        }
    }
}

#[test]
fn express_in_generators_round_trips_up_to_degree_five() {
    let letters = sym_alphabet(2);
    let gens = gen_set(2);
    let mut solver = FreenessSolver::new();
    let alg = GenAlgebra;
    for degree in 1..=5u32 {
        for m in genidx::enumerate_populated(degree, &letters, &gens) {
            let expr = solver.express_in_generators(&m).expect("populated");
            assert_eq!(eval_poly(&expr, &alg), Poly::unit(m.clone()), "monomial {m:?}");
        }
    }
}

// ---------------------------------------------------------------------
// Identities, including the linearised letter slot

/// Formal linear combination in the letter slot, expanded by
/// bilinearity.
fn graft_combo(
    alg: &GenAlgebra,
    combo: &[(Letter, Scalar)],
    x: &GenPoly,
    y: &GenPoly,
) -> GenPoly {
    let mut out = alg.zero();
    for (a, c) in combo {
        out = alg.add(&out, &alg.scale(&alg.graft(a, x, y), c));
    }
    out
}

#[test]
fn linearised_identities_hold() {
    let alg = GenAlgebra;
    let x = Gen(0);
    let a = Letter::sym(0);
    let b = Letter::sym(1);
    let elems: Vec<GenPoly> = vec![
        genidx::var_poly(x, MultiIdx::new()),
        genidx::var_poly(x, MultiIdx::single(a.clone())),
        &genidx::var_poly(x, MultiIdx::with(a.clone(), 2))
            + &genidx::var_poly(x, MultiIdx::single(b.clone())).scaled(&Scalar::ratio(1, 2)),
    ];
    let v = [
        (a.clone(), Scalar::ratio(2, 3)),
        (b.clone(), Scalar::from_int(-1)),
    ];
    let w = [(a, Scalar::ratio(1, 2)), (b, Scalar::from_int(3))];
    for p in &elems {
        for q in &elems {
            for r in &elems {
                // Right-commutativity for linear-combination letters:
                // (p ▷_v q) ▷_w r = (p ▷_w r) ▷_v q.
                let lhs = graft_combo(&alg, &w, &graft_combo(&alg, &v, p, q), r);
                let rhs = graft_combo(&alg, &v, &graft_combo(&alg, &w, p, r), q);
                assert_eq!(lhs, rhs);
                // Pre-Lie identity with mixed combination letters.
                let assoc = |u: &GenPoly, vv: &GenPoly, ww: &GenPoly| {
                    alg.sub(
                        &graft_combo(&alg, &w, &graft_combo(&alg, &v, u, vv), ww),
                        &graft_combo(&alg, &v, u, &graft_combo(&alg, &w, vv, ww)),
                    )
                };
                assert_eq!(assoc(p, q, r), assoc(q, p, r));
            }
        }
    }
}

// ---------------------------------------------------------------------
// Bigraded dimensions

#[test]
fn normal_term_evaluations_span_the_populated_component() {
    // The span of evaluated normal terms has the populated dimension in
    // every graded component up to degree 4 over two letters and labels.
    let letters = sym_alphabet(2);
    let gens = gen_set(2);
    let mut solver = FreenessSolver::new();
    for degree in 1..=4u32 {
        for stats in solver.degree_stats(degree, &letters, &gens) {
            assert!(stats.invertible, "component {stats:?}");
            assert_eq!(stats.normal_count, stats.populated_count);
        }
    }
}

// ---------------------------------------------------------------------
// Magma enumeration sanity

#[test]
fn magma_term_counts() {
    let letters = sym_alphabet(2);
    let gens = gen_set(2);
    // Catalan(n-1) shapes, 2^(n-1) letter choices, 2^n leaf labelings.
    let expected = [2usize, 8, 64, 640, 7168];
    for degree in 1..=5u32 {
        assert_eq!(
            enumerate_terms(degree, &letters, &gens).len(),
            expected[degree as usize - 1]
        );
    }
}

#[test]
fn normal_enumeration_is_deterministic_and_unique() {
    let letters = sym_alphabet(2);
    let gens = gen_set(2);
    let first = enumerate_normal(4, &letters, &gens);
    let second = enumerate_normal(4, &letters, &gens);
    assert_eq!(first, second);
    let mut dedup: Vec<MagmaTerm> = first.clone();
    dedup.dedup();
    assert_eq!(dedup.len(), first.len());
}
