//! Naming context binding abstract letters and generator labels to
//! indices. Letters and labels declared through flags keep the given
//! order; names collected from an expression are sorted lexicographically
//! so parsing is order-independent.

use mnov_core::{Gen, Letter};

#[derive(Clone, Debug, Default)]
pub struct Context {
    /// Spatial dimension count `d`; coordinate letters carry `d+1` entries.
    pub dims: usize,
    pub letters: Vec<String>,
    pub labels: Vec<String>,
}

impl Context {
    pub fn new(dims: usize) -> Self {
        Context {
            dims,
            letters: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn with_letters(mut self, letters: &[&str]) -> Self {
        self.letters = letters.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_labels(mut self, labels: &[&str]) -> Self {
        self.labels = labels.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn letter_index(&self, name: &str) -> Option<u32> {
        self.letters.iter().position(|l| l == name).map(|i| i as u32)
    }

    pub fn label_index(&self, name: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == name).map(|i| i as u32)
    }

    /// Declares a letter if new, keeping the list sorted when it grew
    /// implicitly from an expression.
    pub fn declare_letter(&mut self, name: &str) -> u32 {
        match self.letter_index(name) {
            Some(i) => i,
            None => {
                self.letters.push(name.to_string());
                self.letters.len() as u32 - 1
            }
        }
    }

    pub fn declare_label(&mut self, name: &str) -> u32 {
        match self.label_index(name) {
            Some(i) => i,
            None => {
                self.labels.push(name.to_string());
                self.labels.len() as u32 - 1
            }
        }
    }

    pub fn letter_name(&self, l: &Letter) -> String {
        match l {
            Letter::Sym(i) => self
                .letters
                .get(*i as usize)
                .cloned()
                .unwrap_or_else(|| format!("?{i}")),
            Letter::Coord(v) => {
                let parts: Vec<String> = v.iter().map(|n| n.to_string()).collect();
                format!("({})", parts.join(","))
            }
        }
    }

    pub fn label_name(&self, g: Gen) -> String {
        self.labels
            .get(g.0 as usize)
            .cloned()
            .unwrap_or_else(|| format!("?{}", g.0))
    }

    /// The first `n` default letter names `a, b, c, …`.
    pub fn default_letters(n: u32) -> Vec<String> {
        (0..n)
            .map(|i| {
                let c = (b'a' + (i % 26) as u8) as char;
                if i < 26 {
                    c.to_string()
                } else {
                    format!("{c}{}", i / 26)
                }
            })
            .collect()
    }

    /// The first `n` default label names `x, y, z, …`.
    pub fn default_labels(n: u32) -> Vec<String> {
        const BASE: [char; 6] = ['x', 'y', 'z', 'w', 'u', 'v'];
        (0..n)
            .map(|i| {
                let c = BASE[(i as usize) % BASE.len()];
                if (i as usize) < BASE.len() {
                    c.to_string()
                } else {
                    format!("{c}{}", i as usize / BASE.len())
                }
            })
            .collect()
    }
}
