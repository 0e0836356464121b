//! Product indices (letters) and generator symbols.

use alloc::vec::Vec;

/// Index of a product family member.
///
/// Numeric letters are elements of `ℕ^{d+1}` ordered lexicographically;
/// abstract letters are symbols from a declared finite alphabet ordered by
/// declaration. The two kinds are never mixed within one context.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    Sym(u32),
    Coord(Vec<u32>),
}

impl Letter {
    pub fn sym(i: u32) -> Self {
        Letter::Sym(i)
    }

    pub fn coord(v: impl Into<Vec<u32>>) -> Self {
        Letter::Coord(v.into())
    }

    /// Coordinates of a numeric letter. Panics on an abstract symbol,
    /// which would be a context mixup by the caller.
    pub fn coords(&self) -> &[u32] {
        match self {
            Letter::Coord(v) => v,
            Letter::Sym(_) => panic!("coordinate letter required in this context"),
        }
    }

    pub fn coord_get(&self, i: usize) -> u32 {
        self.coords().get(i).copied().unwrap_or(0)
    }

    /// `n - e_i`; `None` when `n_i = 0` and the result would leave `ℕ^{d+1}`.
    pub fn decremented(&self, i: usize) -> Option<Letter> {
        let cs = self.coords();
        if cs.get(i).copied().unwrap_or(0) == 0 {
            return None;
        }
        let mut v = cs.to_vec();
        v[i] -= 1;
        Some(Letter::Coord(v))
    }

    /// Sum of coordinates, `|n|`.
    pub fn weight(&self) -> u32 {
        match self {
            Letter::Coord(v) => v.iter().sum(),
            Letter::Sym(_) => 0,
        }
    }
}

/// Generator symbol; ordered by declaration index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gen(pub u32);

/// The first `n` abstract letters.
pub fn sym_alphabet(n: u32) -> Vec<Letter> {
    (0..n).map(Letter::sym).collect()
}

/// The first `n` generators.
pub fn gen_set(n: u32) -> Vec<Gen> {
    (0..n).map(Gen).collect()
}

/// All letters of `ℕ^{d+1}` with every coordinate at most `cap`, in
/// lexicographic order.
pub fn coord_letters(dims: usize, cap: u32) -> Vec<Letter> {
    let mut out = Vec::new();
    let mut v = alloc::vec![0u32; dims + 1];
    loop {
        out.push(Letter::Coord(v.clone()));
        let mut i = dims + 1;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if v[i] < cap {
                v[i] += 1;
                for x in v.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_order_is_lexicographic() {
        let a = Letter::coord([0, 1]);
        let b = Letter::coord([1, 0]);
        assert!(a < b);
    }

    #[test]
    fn decrement() {
        let n = Letter::coord([1, 0]);
        assert_eq!(n.decremented(0), Some(Letter::coord([0, 0])));
        assert_eq!(n.decremented(1), None);
    }

    #[test]
    fn capped_letters() {
        let ls = coord_letters(1, 1);
        assert_eq!(ls.len(), 4);
        assert_eq!(ls[0], Letter::coord([0, 0]));
        assert_eq!(ls[3], Letter::coord([1, 1]));
    }
}
