//! Exact sparse linear algebra over the rational scalars.
//!
//! A [`Span`] keeps an echelonized row space keyed by leading basis
//! element. Inserted vectors carry a running expression in terms of the
//! originally inserted columns, which is what the change-of-basis
//! routines need: rank tracking and exact coordinate solves come from the
//! same reduction.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::poly::Poly;
use crate::scalar::Scalar;

struct Row<M: Ord> {
    /// Reduced vector with leading coefficient one.
    vector: Poly<M>,
    /// The same vector expressed in the inserted columns.
    expression: Poly<u32>,
}

/// Incrementally built row space over basis `M`.
pub struct Span<M: Ord + Clone> {
    rows: BTreeMap<M, Row<M>>,
    columns: u32,
}

impl<M: Ord + Clone> Default for Span<M> {
    fn default() -> Self {
        Self::new()
    }
}

impl<M: Ord + Clone> Span<M> {
    pub fn new() -> Self {
        Span {
            rows: BTreeMap::new(),
            columns: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns inserted so far (independent or not).
    pub fn num_columns(&self) -> u32 {
        self.columns
    }

    /// Reduced row vectors, a basis of the span.
    pub fn basis(&self) -> impl Iterator<Item = &Poly<M>> {
        self.rows.values().map(|r| &r.vector)
    }

    fn reduce(&self, p: &Poly<M>) -> (Poly<M>, Poly<u32>) {
        let mut vector = p.clone();
        let mut expression: Poly<u32> = Poly::zero();
        loop {
            let Some((lead, coeff)) = vector.leading() else {
                break;
            };
            let Some(row) = self.rows.get(lead) else {
                break;
            };
            let c = coeff.clone();
            vector.sub_assign(&row.vector.scaled(&c));
            expression.sub_assign(&row.expression.scaled(&c));
        }
        (vector, expression)
    }

    /// Inserts a column vector; returns `true` if it enlarged the span.
    pub fn insert(&mut self, p: &Poly<M>) -> bool {
        let index = self.columns;
        self.columns += 1;
        let (vector, mut expression) = self.reduce(p);
        expression.add_term(index, Scalar::one());
        let Some((lead, coeff)) = vector.leading() else {
            return false;
        };
        let lead = lead.clone();
        let inv = coeff.inverse().expect("nonzero leading coefficient");
        self.rows.insert(
            lead,
            Row {
                vector: vector.scaled(&inv),
                expression: expression.scaled(&inv),
            },
        );
        true
    }

    /// Coordinates of `target` over the inserted columns, or `None` when
    /// it lies outside the span. Coordinates are indexed by insertion
    /// order and include only nonzero entries.
    pub fn coordinates(&self, target: &Poly<M>) -> Option<Vec<(u32, Scalar)>> {
        let (vector, expression) = self.reduce(target);
        if !vector.is_zero() {
            return None;
        }
        // reduce() accumulates the negated combination.
        let combo = -&expression;
        Some(combo.iter().map(|(i, c)| (*i, c.clone())).collect())
    }

    /// Whether `target` lies in the span.
    pub fn contains(&self, target: &Poly<M>) -> bool {
        self.reduce(target).0.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiidx::MultiIdx;

    type M = MultiIdx<&'static str>;

    fn v(entries: &[(&'static str, i64)]) -> Poly<M> {
        Poly::from_terms(
            entries
                .iter()
                .map(|(k, c)| (MultiIdx::single(*k), Scalar::from_int(*c))),
        )
    }

    #[test]
    fn rank_and_dependence() {
        let mut span = Span::new();
        assert!(span.insert(&v(&[("x", 1), ("y", 1)])));
        assert!(span.insert(&v(&[("y", 2)])));
        assert!(!span.insert(&v(&[("x", 3), ("y", 5)])));
        assert_eq!(span.dim(), 2);
        assert_eq!(span.num_columns(), 3);
    }

    #[test]
    fn coordinates_are_exact() {
        let mut span = Span::new();
        span.insert(&v(&[("x", 2)]));
        span.insert(&v(&[("x", 1), ("y", 3)]));
        let target = v(&[("x", 1), ("y", 1)]);
        let coords = span.coordinates(&target).unwrap();
        // target = 1/3 * (x+3y) + 1/3 * (2x) -> check by recombining.
        let mut recombined: Poly<M> = Poly::zero();
        let columns = [v(&[("x", 2)]), v(&[("x", 1), ("y", 3)])];
        for (i, c) in &coords {
            recombined.add_assign(&columns[*i as usize].scaled(c));
        }
        assert_eq!(recombined, target);
        assert!(span.coordinates(&v(&[("z", 1)])).is_none());
    }
}
