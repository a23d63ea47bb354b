//! Composition trees and the text grammar
//!
//! ```text
//! term     := "x" INT | "(" NAME term* ")"
//! combo    := [SCALAR "*"] term { ("+" | "-") [SCALAR "*"] term }
//! relation := combo "=" combo
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A planar tree whose leaves carry 1-based input labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(usize),
    Node { op: String, children: Vec<Tree> },
}

impl Tree {
    pub fn leaf(k: usize) -> Tree {
        Tree::Leaf(k)
    }

    pub fn node(op: impl Into<String>, children: Vec<Tree>) -> Tree {
        Tree::Node {
            op: op.into(),
            children,
        }
    }

    /// Leaf labels in left-to-right planar order.
    pub fn leaf_labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf(k) => out.push(*k),
            Tree::Node { children, .. } => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn inputs(&self) -> usize {
        self.leaf_labels().len()
    }

    /// Checks that the leaves are exactly `1..=n`, each once.
    pub fn validate(&self) -> Result<usize> {
        let labels = self.leaf_labels();
        let n = labels.len();
        let mut seen = vec![false; n];
        for &k in &labels {
            if k == 0 || k > n || seen[k - 1] {
                return Err(Error::Parse(format!("leaves of {self} must be x1..x{n}, each once")));
            }
            seen[k - 1] = true;
        }
        Ok(n)
    }

    /// Replaces each leaf label `k` by `f(k)`.
    pub fn relabel(&self, f: &impl Fn(usize) -> usize) -> Tree {
        match self {
            Tree::Leaf(k) => Tree::Leaf(f(*k)),
            Tree::Node { op, children } => Tree::Node {
                op: op.clone(),
                children: children.iter().map(|c| c.relabel(f)).collect(),
            },
        }
    }

    /// Generator names with the number of children they are used with.
    pub fn operations(&self) -> Vec<(&str, usize)> {
        let mut out = Vec::new();
        self.collect_ops(&mut out);
        out
    }

    fn collect_ops<'a>(&'a self, out: &mut Vec<(&'a str, usize)>) {
        if let Tree::Node { op, children } = self {
            out.push((op.as_str(), children.len()));
            children.iter().for_each(|c| c.collect_ops(out));
        }
    }

    pub fn parse(text: &str) -> Result<Tree> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let t = p.term()?;
        p.finish()?;
        Ok(t)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(k) => write!(f, "x{k}"),
            Tree::Node { op, children } => {
                write!(f, "({op}")?;
                for c in children {
                    write!(f, " {c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A formal linear combination `Σ cᵢ·tᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combo(pub Vec<(Scalar, Tree)>);

impl Combo {
    pub fn single(field: FieldSpec, t: Tree) -> Combo {
        Combo(vec![(field.one(), t)])
    }
}

impl fmt::Display for Combo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (c, t)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{c}*{t}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Combo,
    pub rhs: Combo,
}

impl Relation {
    pub fn new(lhs: Combo, rhs: Combo) -> Result<Relation> {
        let r = Relation { lhs, rhs };
        r.inputs()?;
        Ok(r)
    }

    /// The common input count of every tree on both sides.
    pub fn inputs(&self) -> Result<usize> {
        let mut n = None;
        for (_, t) in self.lhs.0.iter().chain(&self.rhs.0) {
            let k = t.validate()?;
            if *n.get_or_insert(k) != k {
                return Err(Error::Parse(format!("relation {self} mixes input counts")));
            }
        }
        n.ok_or_else(|| Error::Parse("empty relation".into()))
    }

    pub fn parse(field: FieldSpec, text: &str) -> Result<Relation> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let lhs = p.combo(field)?;
        p.expect(&Token::Equals)?;
        let rhs = p.combo(field)?;
        p.finish()?;
        Relation::new(lhs, rhs)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Equals,
    Plus,
    Minus,
    Star,
    Word(String),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut Vec<Token>| {
        if !word.is_empty() {
            out.push(if word == "-" { Token::Minus } else { Token::Word(std::mem::take(word)) });
            word.clear();
        }
    };
    for ch in text.chars() {
        let tok = match ch {
            '(' => Some(Token::Open),
            ')' => Some(Token::Close),
            '=' => Some(Token::Equals),
            '+' => Some(Token::Plus),
            '*' => Some(Token::Star),
            c if c.is_whitespace() => None,
            c if c.is_alphanumeric() || "_-/'.".contains(c) => {
                word.push(c);
                continue;
            }
            c => return Err(Error::Parse(format!("unexpected character {c:?}"))),
        };
        flush(&mut word, &mut out);
        out.extend(tok);
    }
    flush(&mut word, &mut out);
    Ok(out)
}

fn leaf_index(word: &str) -> Option<usize> {
    word.strip_prefix('x').filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))?.parse().ok()
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Token> {
        let t = self.tokens.get(self.pos).cloned().ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: &Token) -> Result<()> {
        let got = self.next()?;
        if &got != want {
            return Err(Error::Parse(format!("expected {want:?}, found {got:?}")));
        }
        Ok(())
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(Error::Parse(format!("trailing input at {t:?}"))),
        }
    }

    fn term(&mut self) -> Result<Tree> {
        match self.next()? {
            Token::Word(w) => leaf_index(&w)
                .map(Tree::Leaf)
                .ok_or_else(|| Error::Parse(format!("expected a leaf x<k>, found {w:?}"))),
            Token::Open => {
                let op = match self.next()? {
                    Token::Word(w) if leaf_index(&w).is_none() => w,
                    other => return Err(Error::Parse(format!("expected an operation name, found {other:?}"))),
                };
                let mut children = Vec::new();
                while self.peek() != Some(&Token::Close) {
                    children.push(self.term()?);
                }
                self.expect(&Token::Close)?;
                Ok(Tree::Node { op, children })
            }
            other => Err(Error::Parse(format!("expected a term, found {other:?}"))),
        }
    }

    fn summand(&mut self, field: FieldSpec, negate: bool) -> Result<(Scalar, Tree)> {
        let mut coeff = field.one();
        if let (Some(Token::Word(w)), Some(Token::Star)) = (self.tokens.get(self.pos), self.tokens.get(self.pos + 1)) {
            coeff = field.parse_scalar(w)?;
            self.pos += 2;
        }
        let t = self.term()?;
        Ok((if negate { -coeff } else { coeff }, t))
    }

    fn combo(&mut self, field: FieldSpec) -> Result<Combo> {
        let mut terms = vec![self.summand(field, false)?];
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    terms.push(self.summand(field, false)?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    terms.push(self.summand(field, true)?);
                }
                _ => return Ok(Combo(terms)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let t = Tree::parse("(mu (mu x1 x2) x3)").unwrap();
        assert_eq!(t.to_string(), "(mu (mu x1 x2) x3)");
        assert_eq!(t.leaf_labels(), vec![1, 2, 3]);
        let u = Tree::parse("(mu (u0) x1)").unwrap();
        assert_eq!(u.inputs(), 1);
        assert!(Tree::parse("(mu x1").is_err());
        assert!(Tree::parse("(x1 x2)").is_err());
    }

    #[test]
    fn parses_relations_with_scalars() {
        let q = FieldSpec::Rationals;
        let r = Relation::parse(q, "1/2*(mu x1 x2) + 1/2*(mu x2 x1) - x1 = x1").unwrap_err();
        assert!(r.to_string().contains("mixes"));
        let r = Relation::parse(q, "2*(mu x1 x2) - (mu x2 x1) = (mu x1 x2)").unwrap();
        assert_eq!(r.lhs.0.len(), 2);
        assert_eq!(r.lhs.0[1].0, q.from_i64(-1));
        assert_eq!(r.inputs().unwrap(), 2);
    }

    #[test]
    fn rejects_bad_leaves() {
        assert!(Tree::parse("(mu x1 x1)").unwrap().validate().is_err());
        assert!(Tree::parse("(mu x1 x3)").unwrap().validate().is_err());
        assert_eq!(Tree::parse("(mu x2 x1)").unwrap().validate().unwrap(), 2);
    }
}
