//! Group words: parsing, printing and evaluation.
//!
//! Grammar, from high to low precedence:
//!
//! ```text
//! atom  := ident | "1" | "(" expr ")" | "[" expr "," expr "]"
//! power := atom ("^" (integer | atom))*
//! expr  := power ("*" power)*
//! ```
//!
//! `a^k` with an integer `k` is a power, `a^b` with a word `b` is the
//! conjugate `b^-1 a b`, and `[a,b] = a^-1 b^-1 a b`. The literal `1` is the
//! identity.

use std::fmt;

use crate::error::{GentorError, Result};
use crate::group::ComputableGroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Word {
    Identity,
    Gen(String),
    Mul(Box<Word>, Box<Word>),
    Pow(Box<Word>, i64),
    Conj(Box<Word>, Box<Word>),
    Comm(Box<Word>, Box<Word>),
}

impl Word {
    pub fn gen(name: impl Into<String>) -> Word {
        Word::Gen(name.into())
    }

    /// Product that drops identity factors.
    pub fn times(&self, other: &Word) -> Word {
        match (self, other) {
            (Word::Identity, w) | (w, Word::Identity) => w.clone(),
            (a, b) => Word::Mul(Box::new(a.clone()), Box::new(b.clone())),
        }
    }

    /// Power that folds the trivial exponents 0 and 1.
    pub fn power(&self, k: i64) -> Word {
        match (self, k) {
            (_, 0) | (Word::Identity, _) => Word::Identity,
            (w, 1) => w.clone(),
            (w, k) => Word::Pow(Box::new(w.clone()), k),
        }
    }

    pub fn conjugate_by(&self, x: &Word) -> Word {
        match (self, x) {
            (Word::Identity, _) => Word::Identity,
            (w, Word::Identity) => w.clone(),
            (w, x) => Word::Conj(Box::new(w.clone()), Box::new(x.clone())),
        }
    }

    /// Applies `f` to every generator name.
    pub fn rename(&self, f: &impl Fn(&str) -> String) -> Word {
        match self {
            Word::Identity => Word::Identity,
            Word::Gen(s) => Word::Gen(f(s)),
            Word::Mul(a, b) => Word::Mul(Box::new(a.rename(f)), Box::new(b.rename(f))),
            Word::Pow(a, k) => Word::Pow(Box::new(a.rename(f)), *k),
            Word::Conj(a, b) => Word::Conj(Box::new(a.rename(f)), Box::new(b.rename(f))),
            Word::Comm(a, b) => Word::Comm(Box::new(a.rename(f)), Box::new(b.rename(f))),
        }
    }

    pub fn parse(text: &str) -> Result<Word> {
        parse_word(text)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(self, f)
    }
}

fn write_expr(w: &Word, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match w {
        Word::Mul(a, b) => {
            write_expr(a, f)?;
            write!(f, "*")?;
            if matches!(**b, Word::Mul(..)) {
                write!(f, "(")?;
                write_expr(b, f)?;
                write!(f, ")")
            } else {
                write_power(b, f)
            }
        }
        _ => write_power(w, f),
    }
}

fn write_power(w: &Word, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match w {
        Word::Pow(base, k) => {
            write_base(base, f)?;
            write!(f, "^{k}")
        }
        Word::Conj(base, by) => {
            write_base(base, f)?;
            write!(f, "^")?;
            match **by {
                Word::Gen(_) | Word::Comm(..) => write_power(by, f),
                _ => {
                    write!(f, "(")?;
                    write_expr(by, f)?;
                    write!(f, ")")
                }
            }
        }
        Word::Mul(..) => {
            write!(f, "(")?;
            write_expr(w, f)?;
            write!(f, ")")
        }
        Word::Identity => write!(f, "1"),
        Word::Gen(s) => write!(f, "{s}"),
        Word::Comm(a, b) => {
            write!(f, "[")?;
            write_expr(a, f)?;
            write!(f, ",")?;
            write_expr(b, f)?;
            write!(f, "]")
        }
    }
}

fn write_base(base: &Word, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match base {
        Word::Mul(..) => {
            write!(f, "(")?;
            write_expr(base, f)?;
            write!(f, ")")
        }
        _ => write_power(base, f),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '[' => out.push((start, Tok::LBracket)),
            ']' => out.push((start, Tok::RBracket)),
            ',' => out.push((start, Tok::Comma)),
            '-' | '0'..='9' => {
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let lit: String = chars[i..j].iter().collect();
                let v = lit.parse::<i64>().map_err(|_| GentorError::Syntax {
                    pos: start,
                    msg: format!("bad integer literal `{lit}`"),
                })?;
                out.push((start, Tok::Int(v)));
                i = j;
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i + 1;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                out.push((start, Tok::Ident(chars[i..j].iter().collect())));
                i = j;
                continue;
            }
            other => {
                return Err(GentorError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(GentorError::Syntax {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<Word> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let rhs = self.power()?;
            acc = Word::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Word> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Int(k)) => {
                    let k = *k;
                    self.pos += 1;
                    acc = Word::Pow(Box::new(acc), k);
                }
                _ => {
                    let by = self.atom()?;
                    acc = Word::Conj(Box::new(acc), Box::new(by));
                }
            }
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Word::Gen(s))
            }
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(Word::Identity)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(Tok::Comma, "`,` in commutator")?;
                let b = self.expr()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(Word::Comm(Box::new(a), Box::new(b)))
            }
            Some(Tok::Int(_)) => self.err("integer literal where a word was expected"),
            Some(_) => self.err("expected identifier, `1`, `(` or `[`"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_word(text: &str) -> Result<Word> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
    };
    let w = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(w)
}

/// Evaluates a word in `group`, resolving identifiers through its generator table.
pub fn eval_word<G: ComputableGroup + ?Sized>(group: &G, w: &Word) -> Result<G::Elem> {
    let gens = group.generators();
    eval_with(group, w, &|name| {
        gens.iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e.clone())
            .ok_or_else(|| GentorError::UnknownIdentifier(name.to_string()))
    })
}

fn eval_with<G: ComputableGroup + ?Sized>(
    group: &G,
    w: &Word,
    lookup: &dyn Fn(&str) -> Result<G::Elem>,
) -> Result<G::Elem> {
    Ok(match w {
        Word::Identity => group.identity(),
        Word::Gen(s) => lookup(s)?,
        Word::Mul(a, b) => group.mul(&eval_with(group, a, lookup)?, &eval_with(group, b, lookup)?),
        Word::Pow(a, k) => group.pow(&eval_with(group, a, lookup)?, *k),
        Word::Conj(a, b) => group.conj(&eval_with(group, a, lookup)?, &eval_with(group, b, lookup)?),
        Word::Comm(a, b) => {
            let a = eval_with(group, a, lookup)?;
            let b = eval_with(group, b, lookup)?;
            let ab_inv = group.inv(&group.mul(&b, &a));
            group.mul(&ab_inv, &group.mul(&a, &b))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let w = parse_word("x*y^2").unwrap();
        assert_eq!(
            w,
            Word::Mul(Box::new(Word::gen("x")), Box::new(Word::Pow(Box::new(Word::gen("y")), 2)))
        );
        let w = parse_word("x^y^-1").unwrap();
        assert_eq!(
            w,
            Word::Pow(Box::new(Word::Conj(Box::new(Word::gen("x")), Box::new(Word::gen("y")))), -1)
        );
        let w = parse_word("[x,y]^2").unwrap();
        assert!(matches!(w, Word::Pow(_, 2)));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_word("x*(y") {
            Err(GentorError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        match parse_word("x ^ ^") {
            Err(GentorError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_word("x $ y").is_err());
        assert!(parse_word("").is_err());
        assert!(parse_word("x y").is_err());
    }

    #[test]
    fn printing_round_trips() {
        for s in ["x*x^-1", "x^y", "[x,y]^2", "(x*y)^(y*x)", "x*(y*z)", "x^(1)", "1", "x^[y,x]^3"] {
            let w = parse_word(s).unwrap();
            assert_eq!(parse_word(&w.to_string()).unwrap(), w, "{s}");
        }
    }

    fn tree() -> impl proptest::strategy::Strategy<Value = Word> {
        use proptest::prelude::*;
        let leaf = prop_oneof![
            Just(Word::Identity),
            "[a-z][a-z0-9_]{0,2}".prop_map(Word::Gen),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Word::Mul(Box::new(a), Box::new(b))),
                (inner.clone(), -5i64..6).prop_map(|(a, k)| Word::Pow(Box::new(a), k)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Word::Conj(Box::new(a), Box::new(b))),
                (inner.clone(), inner).prop_map(|(a, b)| Word::Comm(Box::new(a), Box::new(b))),
            ]
        })
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(200))]
        #[test]
        fn random_trees_round_trip(w in tree()) {
            let printed = w.to_string();
            proptest::prop_assert_eq!(parse_word(&printed).unwrap(), w, "{}", printed);
        }
    }
}
