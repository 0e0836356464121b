//! Exact change of basis between normal terms and populated multi-index
//! monomials, one graded component at a time.
//!
//! A component is cut out by the pair (label multiset, letter multiset),
//! which both the evaluation and the normal-term basis preserve. Within a
//! component the evaluation matrix of normal terms is expected to be
//! square and invertible; a failure is reported as a singular system
//! rather than papered over.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::genidx::{self, GenAlgebra, GenMonomial, GenPoly};
use crate::letter::{Gen, Letter};
use crate::linalg::Span;
use crate::multiidx::MultiIdx;
use crate::poly::Poly;

use super::{classify, enumerate_terms, eval, MagmaTerm, TermClass};

type ComponentKey = (MultiIdx<Gen>, MultiIdx<Letter>);

struct Component {
    normal_terms: Vec<MagmaTerm>,
    span: Span<GenMonomial>,
    populated_count: usize,
    /// Some normal term evaluated into the span of the previous ones.
    dependent: bool,
}

/// Per-component summary used by the verification suites.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentStats {
    pub labels: MultiIdx<Gen>,
    pub letters: MultiIdx<Letter>,
    pub normal_count: usize,
    pub populated_count: usize,
    pub invertible: bool,
}

/// Cached solver for the normal-basis change of basis.
pub struct FreenessSolver {
    components: BTreeMap<ComponentKey, Component>,
}

impl Default for FreenessSolver {
    fn default() -> Self {
        Self::new()
    }
}

impl FreenessSolver {
    pub fn new() -> Self {
        FreenessSolver {
            components: BTreeMap::new(),
        }
    }

    fn component(&mut self, key: &ComponentKey) -> &Component {
        if !self.components.contains_key(key) {
            let built = build_component(key);
            self.components.insert(key.clone(), built);
        }
        self.components.get(key).expect("just inserted")
    }

    /// Expresses `t` in the normal basis by evaluating into the
    /// multi-index realization and solving exactly within its graded
    /// component.
    pub fn solve_normal_form(&mut self, t: &MagmaTerm) -> Result<Poly<MagmaTerm>, Error> {
        let key = (t.leaf_multiset(), t.letter_multiset());
        let target = eval(t, &GenAlgebra);
        self.express(&key, t.degree(), &target)
    }

    /// Writes a populated monomial as a combination of normal terms
    /// evaluating to it exactly.
    pub fn express_in_generators(&mut self, m: &GenMonomial) -> Result<Poly<MagmaTerm>, Error> {
        if !genidx::is_populated(m) {
            return Err(Error::NotPopulated);
        }
        let key = (genidx::label_multiset(m), genidx::letter_multiset(m));
        let degree = m.total();
        self.express(&key, degree, &Poly::unit(m.clone()))
    }

    fn express(
        &mut self,
        key: &ComponentKey,
        degree: u32,
        target: &GenPoly,
    ) -> Result<Poly<MagmaTerm>, Error> {
        let comp = self.component(key);
        if comp.dependent {
            return Err(Error::SingularSystem { degree });
        }
        let coords = comp
            .span
            .coordinates(target)
            .ok_or(Error::SingularSystem { degree })?;
        Ok(Poly::from_terms(coords.into_iter().map(|(i, c)| {
            (comp.normal_terms[i as usize].clone(), c)
        })))
    }

    /// Statistics of a single graded component.
    pub fn component_stats(&mut self, key: &ComponentKey) -> ComponentStats {
        let comp = self.component(key);
        ComponentStats {
            labels: key.0.clone(),
            letters: key.1.clone(),
            normal_count: comp.normal_terms.len(),
            populated_count: comp.populated_count,
            invertible: !comp.dependent
                && comp.normal_terms.len() == comp.populated_count
                && comp.span.dim() == comp.normal_terms.len(),
        }
    }

    /// Statistics of every graded component of the given degree over the
    /// given alphabets. Components are keyed by the exact label and
    /// letter multisets occurring in populated monomials or normal terms.
    pub fn degree_stats(
        &mut self,
        degree: u32,
        letters: &[Letter],
        labels: &[Gen],
    ) -> Vec<ComponentStats> {
        let mut keys: Vec<ComponentKey> = Vec::new();
        for m in genidx::enumerate_populated(degree, letters, labels) {
            keys.push((genidx::label_multiset(&m), genidx::letter_multiset(&m)));
        }
        for t in enumerate_terms(degree, letters, labels) {
            if classify(&t) == TermClass::Normal {
                keys.push((t.leaf_multiset(), t.letter_multiset()));
            }
        }
        keys.sort();
        keys.dedup();
        keys.iter().map(|k| self.component_stats(k)).collect()
    }
}

fn build_component(key: &ComponentKey) -> Component {
    let (labels, letters) = key;
    let degree = labels.total();
    let letter_support: Vec<Letter> = letters.keys().cloned().collect();
    let label_support: Vec<Gen> = labels.keys().copied().collect();
    let mut normal_terms = Vec::new();
    for t in enumerate_terms(degree, &letter_support, &label_support) {
        if classify(&t) == TermClass::Normal
            && &t.leaf_multiset() == labels
            && &t.letter_multiset() == letters
        {
            normal_terms.push(t);
        }
    }
    let mut span = Span::new();
    let mut dependent = false;
    for t in &normal_terms {
        let v = eval(t, &GenAlgebra);
        if !span.insert(&v) {
            dependent = true;
        }
    }
    let populated_count = genidx::enumerate_populated(degree, &letter_support, &label_support)
        .into_iter()
        .filter(|m| &genidx::label_multiset(m) == labels && &genidx::letter_multiset(m) == letters)
        .count();
    Component {
        normal_terms,
        span,
        populated_count,
        dependent,
    }
}
