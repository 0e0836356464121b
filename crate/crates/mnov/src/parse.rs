//! Recursive-descent parser for the expression surface syntax.
//!
//! Grammar (whitespace insensitive, identifiers `[a-zA-Z][a-zA-Z0-9_]*`):
//!
//! ```text
//! term    := primary [ ">[" letter "]" term ]          (right associative)
//! primary := ident | "(" term ")"
//! letter  := ident | "(" nat {"," nat} ")"
//! mono    := genvar { "*" genvar }
//! genvar  := "z{" ident ";" [ letter {"," letter} ] "}"
//! word    := wletter { "." wletter }
//! wletter := "D" letter | "d" nat
//! tree    := { "X" nat | "I(" letter "," tree ")" } base
//! base    := "T[" ident "|" { "X" nat } ";" { "I(" letter "," tree ")" } "]"
//! ```
//!
//! Identifiers collected from an expression are declared in lexicographic
//! order; names already present in the context keep their declared index.

use std::fmt;

use mnov_core::dectree::{RawFactor, RawTree};
use mnov_core::genidx::{GenMonomial, GenVar};
use mnov_core::magnov::MagmaTerm;
use mnov_core::spdeidx::WordLetter;
use mnov_core::{Gen, Letter, MultiIdx};

use crate::context::Context;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at {}:{}: expected {}, found {}",
            self.line,
            self.col,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Nat(u32),
    Punct(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Nat(n) => format!("number `{n}`"),
            Tok::Punct(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

struct Lexer;

impl Lexer {
    fn tokenize(src: &str) -> Result<Vec<(Tok, u32, u32)>, ParseError> {
        let mut out = Vec::new();
        let mut line = 1u32;
        let mut col = 1u32;
        let mut chars = src.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c == '\n' {
                chars.next();
                line += 1;
                col = 1;
                continue;
            }
            if c.is_whitespace() {
                chars.next();
                col += 1;
                continue;
            }
            let start_col = col;
            if c.is_ascii_digit() {
                let mut n: u32 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n * 10 + v;
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push((Tok::Nat(n), line, start_col));
                continue;
            }
            if c.is_ascii_alphabetic() {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(s), line, start_col));
                continue;
            }
            if "(){}[],;*.|>".contains(c) {
                chars.next();
                col += 1;
                out.push((Tok::Punct(c), line, start_col));
                continue;
            }
            return Err(ParseError {
                line,
                col: start_col,
                expected: vec!["token"],
                found: format!("`{c}`"),
            });
        }
        out.push((Tok::End, line, col));
        Ok(out)
    }
}

struct Parser<'a> {
    tokens: Vec<(Tok, u32, u32)>,
    pos: usize,
    ctx: &'a mut Context,
}

impl<'a> Parser<'a> {
    fn new(src: &str, ctx: &'a mut Context) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: Lexer::tokenize(src)?,
            pos: 0,
            ctx,
        })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn peek2(&self) -> &Tok {
        &self.tokens[(self.pos + 1).min(self.tokens.len() - 1)].0
    }

    fn next(&mut self) -> Tok {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, expected: Vec<&'static str>) -> Result<T, ParseError> {
        let (tok, line, col) = &self.tokens[self.pos];
        Err(ParseError {
            line: *line,
            col: *col,
            expected,
            found: tok.describe(),
        })
    }

    fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Punct(p) if *p == c => {
                self.next();
                Ok(())
            }
            _ => self.err(vec![punct_name(c)]),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => self.err(vec!["end of input"]),
        }
    }

    fn expect_ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            _ => self.err(vec!["identifier"]),
        }
    }

    fn expect_nat(&mut self) -> Result<u32, ParseError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.next();
                Ok(n)
            }
            _ => self.err(vec!["number"]),
        }
    }

    // letter := ident | "(" nat {"," nat} ")"
    fn letter(&mut self) -> Result<Letter, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.next();
                Ok(Letter::sym(self.ctx.declare_letter(&name)))
            }
            Tok::Punct('(') => {
                self.next();
                let mut coords = vec![self.expect_nat()?];
                while matches!(self.peek(), Tok::Punct(',')) {
                    self.next();
                    coords.push(self.expect_nat()?);
                }
                self.expect_punct(')')?;
                Ok(Letter::coord(coords))
            }
            _ => self.err(vec!["letter name", "`(`"]),
        }
    }

    // term := primary [ ">[" letter "]" term ]
    fn magma_term(&mut self) -> Result<MagmaTerm, ParseError> {
        let left = self.magma_primary()?;
        if matches!(self.peek(), Tok::Punct('>')) {
            self.next();
            self.expect_punct('[')?;
            let letter = self.letter()?;
            self.expect_punct(']')?;
            let right = self.magma_term()?;
            Ok(MagmaTerm::node(letter, left, right))
        } else {
            Ok(left)
        }
    }

    fn magma_primary(&mut self) -> Result<MagmaTerm, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.next();
                Ok(MagmaTerm::leaf(Gen(self.ctx.declare_label(&name))))
            }
            Tok::Punct('(') => {
                self.next();
                let t = self.magma_term()?;
                self.expect_punct(')')?;
                Ok(t)
            }
            _ => self.err(vec!["generator name", "`(`"]),
        }
    }

    // genvar := "z{" ident ";" [letter {"," letter}] "}"
    fn genvar(&mut self) -> Result<GenVar, ParseError> {
        match self.peek().clone() {
            Tok::Ident(z) if z == "z" => {
                self.next();
            }
            _ => return self.err(vec!["`z{`"]),
        }
        self.expect_punct('{')?;
        let label = self.expect_ident()?;
        let label = Gen(self.ctx.declare_label(&label));
        self.expect_punct(';')?;
        let mut word = MultiIdx::new();
        if !matches!(self.peek(), Tok::Punct('}')) {
            word.add(self.letter()?, 1);
            while matches!(self.peek(), Tok::Punct(',')) {
                self.next();
                word.add(self.letter()?, 1);
            }
        }
        self.expect_punct('}')?;
        Ok(GenVar::new(label, word))
    }

    fn gen_monomial(&mut self) -> Result<GenMonomial, ParseError> {
        let mut mono = MultiIdx::single(self.genvar()?);
        while matches!(self.peek(), Tok::Punct('*')) {
            self.next();
            mono.add(self.genvar()?, 1);
        }
        Ok(mono)
    }

    // wletter := "D" letter | "d" nat  (also as fused identifiers `d0`)
    fn word_letter(&mut self) -> Result<WordLetter, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "D" => {
                self.next();
                Ok(WordLetter::Deriv(self.letter()?))
            }
            Tok::Ident(s) if s == "d" => {
                self.next();
                Ok(WordLetter::Partial(self.expect_nat()?))
            }
            Tok::Ident(s) if is_indexed(&s, 'd') => {
                self.next();
                Ok(WordLetter::Partial(s[1..].parse().expect("digits")))
            }
            _ => self.err(vec!["`D`", "`d<index>`"]),
        }
    }

    fn word(&mut self) -> Result<Vec<WordLetter>, ParseError> {
        let mut syms = vec![self.word_letter()?];
        while matches!(self.peek(), Tok::Punct('.')) {
            self.next();
            syms.push(self.word_letter()?);
        }
        Ok(syms)
    }

    // X factor: "X" nat or a fused identifier `X0`
    fn x_factor(&mut self) -> Result<Option<u32>, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "X" && matches!(self.peek2(), Tok::Nat(_)) => {
                self.next();
                Ok(Some(self.expect_nat()?))
            }
            Tok::Ident(s) if is_indexed(&s, 'X') => {
                self.next();
                Ok(Some(s[1..].parse().expect("digits")))
            }
            _ => Ok(None),
        }
    }

    // planted := "I(" letter "," tree ")"
    fn planted(&mut self) -> Result<Option<(Letter, RawTree)>, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "I" => {
                self.next();
                self.expect_punct('(')?;
                let letter = self.letter()?;
                self.expect_punct(',')?;
                let sub = self.tree()?;
                self.expect_punct(')')?;
                Ok(Some((letter, sub)))
            }
            _ => Ok(None),
        }
    }

    // tree := {X factor | planted} base;  base := "T[" ident "|" {X} ";" {planted} "]"
    fn tree(&mut self) -> Result<RawTree, ParseError> {
        let mut factors: Vec<RawFactor> = Vec::new();
        loop {
            if let Some(i) = self.x_factor()? {
                factors.push(RawFactor::X(i));
                continue;
            }
            if let Some((letter, sub)) = self.planted()? {
                factors.push(RawFactor::Planted(letter, sub));
                continue;
            }
            break;
        }
        // base
        match self.peek().clone() {
            Tok::Ident(s) if s == "T" => {
                self.next();
            }
            _ => return self.err(vec!["`T[`", "`X<index>`", "`I(`"]),
        }
        self.expect_punct('[')?;
        let label = self.expect_ident()?;
        let noise = Gen(self.ctx.declare_label(&label));
        self.expect_punct('|')?;
        while let Some(i) = self.x_factor()? {
            factors.push(RawFactor::X(i));
        }
        self.expect_punct(';')?;
        while let Some((letter, sub)) = self.planted()? {
            factors.push(RawFactor::Planted(letter, sub));
        }
        self.expect_punct(']')?;
        Ok(RawTree { factors, noise })
    }
}

fn is_indexed(s: &str, sigil: char) -> bool {
    let mut cs = s.chars();
    cs.next() == Some(sigil) && s.len() > 1 && cs.all(|c| c.is_ascii_digit())
}

fn punct_name(c: char) -> &'static str {
    match c {
        '(' => "`(`",
        ')' => "`)`",
        '{' => "`{`",
        '}' => "`}`",
        '[' => "`[`",
        ']' => "`]`",
        ',' => "`,`",
        ';' => "`;`",
        '*' => "`*`",
        '.' => "`.`",
        '|' => "`|`",
        '>' => "`>`",
        _ => "punctuation",
    }
}

/// Declares every name used by the expression in lexicographic order
/// before the real parse, so implicit declaration order matches sorted
/// order. Names already declared keep their index.
fn predeclare(src: &str, ctx: &mut Context, kind: Kind) -> Result<(), ParseError> {
    let tokens = Lexer::tokenize(src)?;
    let mut letters: Vec<String> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    for (i, (tok, _, _)) in tokens.iter().enumerate() {
        let Tok::Ident(name) = tok else { continue };
        let prev = i.checked_sub(1).map(|j| &tokens[j].0);
        let prev2 = i.checked_sub(2).map(|j| &tokens[j].0);
        match kind {
            Kind::Magma => {
                // letters appear inside ">[ ... ]"
                let after_bracket = matches!(prev, Some(Tok::Punct('[')))
                    && matches!(prev2, Some(Tok::Punct('>')));
                if after_bracket {
                    letters.push(name.clone());
                } else {
                    labels.push(name.clone());
                }
            }
            Kind::GenIdx => {
                if name == "z" {
                    continue;
                }
                if matches!(prev, Some(Tok::Punct('{'))) {
                    labels.push(name.clone());
                } else {
                    letters.push(name.clone());
                }
            }
            Kind::Tree => {
                if name == "T" || name == "I" || name == "X" || is_indexed(name, 'X') {
                    continue;
                }
                if matches!(prev, Some(Tok::Punct('['))) {
                    labels.push(name.clone());
                } else if matches!(prev, Some(Tok::Punct('('))) {
                    letters.push(name.clone());
                }
            }
        }
    }
    letters.sort();
    letters.dedup();
    labels.sort();
    labels.dedup();
    for l in letters {
        ctx.declare_letter(&l);
    }
    for l in labels {
        ctx.declare_label(&l);
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    Magma,
    GenIdx,
    Tree,
}

pub fn parse_magma(src: &str, ctx: &mut Context) -> Result<MagmaTerm, ParseError> {
    predeclare(src, ctx, Kind::Magma)?;
    let mut p = Parser::new(src, ctx)?;
    let t = p.magma_term()?;
    p.expect_end()?;
    Ok(t)
}

pub fn parse_gen_monomial(src: &str, ctx: &mut Context) -> Result<GenMonomial, ParseError> {
    predeclare(src, ctx, Kind::GenIdx)?;
    let mut p = Parser::new(src, ctx)?;
    let m = p.gen_monomial()?;
    p.expect_end()?;
    Ok(m)
}

pub fn parse_word(src: &str, ctx: &mut Context) -> Result<Vec<WordLetter>, ParseError> {
    let mut p = Parser::new(src, ctx)?;
    let w = p.word()?;
    p.expect_end()?;
    Ok(w)
}

pub fn parse_tree(src: &str, ctx: &mut Context) -> Result<RawTree, ParseError> {
    predeclare(src, ctx, Kind::Tree)?;
    let mut p = Parser::new(src, ctx)?;
    let t = p.tree()?;
    p.expect_end()?;
    Ok(t)
}
