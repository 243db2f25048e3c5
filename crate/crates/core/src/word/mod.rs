//! Monodromy words.
//!
//! Syntax, whitespace-insensitive:
//!
//! | form            | meaning                                            |
//! |-----------------|----------------------------------------------------|
//! | `c3`            | twist along the chain curve `c_3` (`1..=2h+1`)     |
//! | `T[1,0,-1,1]`   | twist along a primitive homology class             |
//! | `S{1}`          | twist along a separating curve of side genus 1     |
//! | `X^n`           | `n >= 1` repetitions of a letter or group          |
//! | `( ... )`       | grouping                                           |
//! | `X'`            | inverse (flat-part words only)                     |
//! | `[W1, W2]`      | commutator `W1 W2 W1' W2'` (flat-part words only)  |
//!
//! Juxtaposition composes left to right.

mod file;
mod parser;

use std::fmt;

use crate::error::{Error, Result};
use crate::symplectic::{chain_curves, CurveClass};

pub use file::{parse_fibration_file, FibrationFile};
pub use parser::{parse_commutator_pair, parse_flat_word, parse_word, MAX_LETTERS};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// 1-based index into the standard chain.
    Chain(usize),
    Vector(Vec<i64>),
    Separating(i64),
}

impl Letter {
    pub fn curve_class(&self, genus: usize) -> CurveClass {
        match self {
            Letter::Chain(i) => chain_curves(genus)[i - 1].clone(),
            Letter::Vector(v) => CurveClass::Nonseparating(v.clone()),
            Letter::Separating(k) => CurveClass::Separating(*k),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Chain(i) => write!(f, "c{i}"),
            Letter::Vector(v) => {
                write!(f, "T[")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
            Letter::Separating(k) => write!(f, "S{{{k}}}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Letter(Letter),
    Group(Vec<Node>),
    Power(Box<Node>, u32),
    Inverse(Box<Node>),
    Commutator(Vec<Node>, Vec<Node>),
}

/// A letter together with its exponent sign after elaboration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedLetter {
    pub letter: Letter,
    pub inverse: bool,
}

impl Node {
    fn elaborate_into(&self, out: &mut Vec<SignedLetter>) {
        match self {
            Node::Letter(l) => out.push(SignedLetter { letter: l.clone(), inverse: false }),
            Node::Group(nodes) => nodes.iter().for_each(|n| n.elaborate_into(out)),
            Node::Power(inner, n) => {
                let start = out.len();
                inner.elaborate_into(out);
                let chunk = out[start..].to_vec();
                for _ in 1..*n {
                    out.extend_from_slice(&chunk);
                }
            }
            Node::Inverse(inner) => {
                let mut tmp = Vec::new();
                inner.elaborate_into(&mut tmp);
                out.extend(invert(tmp));
            }
            Node::Commutator(a, b) => {
                let mut wa = Vec::new();
                a.iter().for_each(|n| n.elaborate_into(&mut wa));
                let mut wb = Vec::new();
                b.iter().for_each(|n| n.elaborate_into(&mut wb));
                out.extend_from_slice(&wa);
                out.extend_from_slice(&wb);
                out.extend(invert(wa));
                out.extend(invert(wb));
            }
        }
    }

    fn has_inverse(&self) -> bool {
        match self {
            Node::Letter(_) => false,
            Node::Group(nodes) => nodes.iter().any(Node::has_inverse),
            Node::Power(inner, _) => inner.has_inverse(),
            Node::Inverse(_) | Node::Commutator(..) => true,
        }
    }
}

fn invert(word: Vec<SignedLetter>) -> impl Iterator<Item = SignedLetter> {
    word.into_iter().rev().map(|s| SignedLetter { letter: s.letter, inverse: !s.inverse })
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Letter(l) => write!(f, "{l}"),
            Node::Group(nodes) => write!(f, "({})", join(nodes)),
            Node::Power(inner, n) => write!(f, "{inner}^{n}"),
            Node::Inverse(inner) => write!(f, "{inner}'"),
            Node::Commutator(a, b) => write!(f, "[{}, {}]", join(a), join(b)),
        }
    }
}

fn join(nodes: &[Node]) -> String {
    nodes.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// A parsed word, validated against a fiber genus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    genus: usize,
    nodes: Vec<Node>,
}

impl Word {
    /// Wraps nodes without validation; use the parsers for untrusted input.
    pub fn from_nodes(genus: usize, nodes: Vec<Node>) -> Self {
        Self { genus, nodes }
    }

    pub fn empty(genus: usize) -> Self {
        Self { genus, nodes: Vec::new() }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn is_positive(&self) -> bool {
        !self.nodes.iter().any(Node::has_inverse)
    }

    /// Expands powers, inverses and commutators.
    pub fn elaborate(&self) -> Vec<SignedLetter> {
        let mut out = Vec::new();
        self.nodes.iter().for_each(|n| n.elaborate_into(&mut out));
        out
    }

    /// Vanishing cycles of a positive word, in order.
    pub fn vanishing_cycles(&self) -> Result<Vec<CurveClass>> {
        if !self.is_positive() {
            return Err(Error::InverseInPositivePart);
        }
        Ok(self.elaborate().iter().map(|s| s.letter.curve_class(self.genus)).collect())
    }
}

pub fn print_word(word: &Word) -> String {
    join(&word.nodes)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_word(self))
    }
}
