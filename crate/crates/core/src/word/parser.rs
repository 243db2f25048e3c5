use super::{Letter, Node, Word};
use crate::error::{ParseError, ParseErrorKind};
use crate::linalg::content;

/// Upper bound on the elaborated length of a single word.
pub const MAX_LETTERS: usize = 1_000_000;

/// Parses a vanishing-cycle word: positive twists only.
pub fn parse_word(text: &str, genus: usize) -> Result<Word, ParseError> {
    Parser::new(text, genus, false)?.whole()
}

/// Parses a flat-part word, where inverses and commutators are allowed.
pub fn parse_flat_word(text: &str, genus: usize) -> Result<Word, ParseError> {
    Parser::new(text, genus, true)?.whole()
}

/// Parses `[W1, W2]` into its two flat-part words.
pub fn parse_commutator_pair(text: &str, genus: usize) -> Result<(Word, Word), ParseError> {
    let mut p = Parser::new(text, genus, true)?;
    p.skip_ws();
    p.expect(b'[')?;
    let a = p.sequence()?;
    p.expect(b',')?;
    let b = p.sequence()?;
    p.expect(b']')?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(ParseError::syntax(p.pos, format!("unexpected '{}' after commutator pair", c as char)));
    }
    Ok((Word::from_nodes(genus, a), Word::from_nodes(genus, b)))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    genus: usize,
    allow_inverse: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, genus: usize, allow_inverse: bool) -> Result<Self, ParseError> {
        if genus == 0 {
            return Err(ParseError::syntax(0, "fiber genus must be at least 1"));
        }
        Ok(Self { src: text.as_bytes(), pos: 0, genus, allow_inverse })
    }

    fn whole(mut self) -> Result<Word, ParseError> {
        let nodes = self.sequence()?;
        if let Some(c) = self.peek() {
            return Err(ParseError::syntax(self.pos, format!("unexpected '{}'", c as char)));
        }
        Ok(Word::from_nodes(self.genus, nodes))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: u8) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(ParseError::syntax(self.pos, format!("expected '{}', found '{}'", want as char, c as char))),
            None => Err(ParseError::syntax(self.pos, format!("expected '{}', found end of input", want as char))),
        }
    }

    // Reads items up to end of input or the next closing delimiter.
    fn sequence(&mut self) -> Result<Vec<Node>, ParseError> {
        let mut nodes = Vec::new();
        let mut len = 0usize;
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b')' | b']' | b',') => return Ok(nodes),
                Some(_) => {
                    let start = self.pos;
                    let node = self.item()?;
                    len = len.saturating_add(node_len(&node));
                    if len > MAX_LETTERS {
                        return Err(too_long(start));
                    }
                    nodes.push(node);
                }
            }
        }
    }

    fn item(&mut self) -> Result<Node, ParseError> {
        let mut node = self.atom()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'^') => {
                    let at = self.pos;
                    self.pos += 1;
                    self.skip_ws();
                    let n = self.unsigned()?;
                    if n == 0 {
                        return Err(ParseError::syntax(at, "power must be at least 1"));
                    }
                    let n = u32::try_from(n).map_err(|_| too_long(at))?;
                    if node_len(&node).saturating_mul(n as usize) > MAX_LETTERS {
                        return Err(too_long(at));
                    }
                    node = Node::Power(Box::new(node), n);
                }
                Some(b'\'') => {
                    if !self.allow_inverse {
                        return Err(ParseError::new(self.pos, ParseErrorKind::InverseInPositivePart));
                    }
                    self.pos += 1;
                    node = Node::Inverse(Box::new(node));
                }
                _ => return Ok(node),
            }
        }
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        let start = self.pos;
        let c = self.peek().expect("caller checked for input");
        self.pos += 1;
        match c {
            b'c' => {
                let i = self.unsigned()?;
                let max = 2 * self.genus + 1;
                match usize::try_from(i) {
                    Ok(i) if (1..=max).contains(&i) => Ok(Node::Letter(Letter::Chain(i))),
                    _ => Err(ParseError::new(
                        start,
                        ParseErrorKind::IndexOutOfRange { index: i.try_into().unwrap_or(usize::MAX), max },
                    )),
                }
            }
            b'T' => {
                self.expect(b'[')?;
                let mut v = vec![self.signed()?];
                loop {
                    self.skip_ws();
                    if self.peek() == Some(b',') {
                        self.pos += 1;
                        v.push(self.signed()?);
                    } else {
                        break;
                    }
                }
                self.expect(b']')?;
                let expected = 2 * self.genus;
                if v.len() != expected {
                    return Err(ParseError::new(start, ParseErrorKind::VectorLength { expected, got: v.len() }));
                }
                if content(&v) != 1 {
                    return Err(ParseError::new(start, ParseErrorKind::NonPrimitiveVector));
                }
                Ok(Node::Letter(Letter::Vector(v)))
            }
            b'S' => {
                self.expect(b'{')?;
                let k = self.signed()?;
                self.expect(b'}')?;
                let max = self.genus as i64 - 1;
                if k < 1 || k > max {
                    return Err(ParseError::new(start, ParseErrorKind::SideGenusOutOfRange { side: k, max }));
                }
                Ok(Node::Letter(Letter::Separating(k)))
            }
            b'(' => {
                let inner = self.sequence()?;
                self.expect(b')')?;
                Ok(Node::Group(inner))
            }
            b'[' => {
                if !self.allow_inverse {
                    return Err(ParseError::new(start, ParseErrorKind::InverseInPositivePart));
                }
                let a = self.sequence()?;
                self.expect(b',')?;
                let b = self.sequence()?;
                self.expect(b']')?;
                Ok(Node::Commutator(a, b))
            }
            other => {
                self.pos = start;
                let shown = std::str::from_utf8(&self.src[start..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .unwrap_or(other as char);
                Err(ParseError::syntax(start, format!("unexpected '{shown}'")))
            }
        }
    }

    fn unsigned(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().filter(u8::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d - b'0')))
                .ok_or_else(|| ParseError::syntax(start, "integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::syntax(start, "expected an integer"));
        }
        Ok(value)
    }

    fn signed(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let magnitude = self.unsigned()?;
        let v = i64::try_from(magnitude).map_err(|_| ParseError::syntax(start, "integer too large"))?;
        Ok(if neg { -v } else { v })
    }
}

fn too_long(at: usize) -> ParseError {
    ParseError::syntax(at, format!("word expands to more than {MAX_LETTERS} letters"))
}

fn node_len(node: &Node) -> usize {
    match node {
        Node::Letter(_) => 1,
        Node::Group(ns) => ns.iter().map(node_len).fold(0, usize::saturating_add),
        Node::Power(inner, n) => node_len(inner).saturating_mul(*n as usize),
        Node::Inverse(inner) => node_len(inner),
        Node::Commutator(a, b) => {
            let l = a.iter().chain(b).map(node_len).fold(0, usize::saturating_add);
            l.saturating_mul(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::print_word;

    fn letters(text: &str, genus: usize) -> Vec<Letter> {
        parse_flat_word(text, genus).unwrap().elaborate().into_iter().map(|s| s.letter).collect()
    }

    fn kind(r: Result<Word, ParseError>) -> ParseErrorKind {
        r.unwrap_err().kind
    }

    #[test]
    fn power_of_group() {
        let l = letters("(c1 c2)^3", 1);
        assert_eq!(l.len(), 6);
        for (i, x) in l.iter().enumerate() {
            assert_eq!(*x, Letter::Chain(1 + i % 2));
        }
    }

    #[test]
    fn separating_power_then_chain() {
        assert_eq!(letters("S{1}^2 c1", 2), vec![Letter::Separating(1), Letter::Separating(1), Letter::Chain(1)]);
    }

    #[test]
    fn vector_literal() {
        let w = parse_word("T[0,1,1,0]", 2).unwrap();
        assert_eq!(w.nodes(), &[Node::Letter(Letter::Vector(vec![0, 1, 1, 0]))]);
        let w = parse_word(" T[ 0 , -1 ,1, 0 ] ", 2).unwrap();
        assert_eq!(w.nodes(), &[Node::Letter(Letter::Vector(vec![0, -1, 1, 0]))]);
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(letters("c1c2 c3", 1), letters(" c1 \n c2\tc3 ", 1));
        assert_eq!(letters("( c1 c2 ) ^ 2", 1), letters("(c1 c2)^2", 1));
    }

    #[test]
    fn power_binds_to_last_item() {
        assert_eq!(letters("c1 c2^2", 1), vec![Letter::Chain(1), Letter::Chain(2), Letter::Chain(2)]);
    }

    #[test]
    fn empty_word() {
        assert!(parse_word("", 3).unwrap().elaborate().is_empty());
        assert!(parse_word("   ", 3).unwrap().elaborate().is_empty());
    }

    #[test]
    fn index_out_of_range() {
        let e = parse_word("c1 c7", 2).unwrap_err();
        assert_eq!(e.offset, 3);
        assert_eq!(e.kind, ParseErrorKind::IndexOutOfRange { index: 7, max: 5 });
        assert!(matches!(kind(parse_word("c0", 2)), ParseErrorKind::IndexOutOfRange { .. }));
    }

    #[test]
    fn side_genus_out_of_range() {
        let e = parse_word("S{0}", 2).unwrap_err();
        assert_eq!(e.offset, 0);
        assert_eq!(e.kind, ParseErrorKind::SideGenusOutOfRange { side: 0, max: 1 });
        assert!(matches!(kind(parse_word("S{2}", 2)), ParseErrorKind::SideGenusOutOfRange { .. }));
        assert!(matches!(kind(parse_word("S{1}", 1)), ParseErrorKind::SideGenusOutOfRange { .. }));
    }

    #[test]
    fn non_primitive_vector_rejected() {
        assert_eq!(kind(parse_word("T[2,0,0,2]", 2)), ParseErrorKind::NonPrimitiveVector);
        assert_eq!(kind(parse_word("T[0,0,0,0]", 2)), ParseErrorKind::NonPrimitiveVector);
        assert_eq!(kind(parse_word("T[1,0]", 2)), ParseErrorKind::VectorLength { expected: 4, got: 2 });
    }

    #[test]
    fn inverse_in_positive_part() {
        let e = parse_word("c1 c2'", 1).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::InverseInPositivePart);
        assert_eq!(e.offset, 5);
        assert_eq!(kind(parse_word("[c1, c2]", 1)), ParseErrorKind::InverseInPositivePart);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        for (text, offset) in [("c1 )", 3), ("(c1", 3), ("c1 x", 3), ("c", 1), ("c1^0", 2), ("T[1,0", 5), ("c1^", 3)] {
            let e = parse_flat_word(text, 1).unwrap_err();
            assert!(matches!(e.kind, ParseErrorKind::Syntax(_)), "{text}: {e}");
            assert_eq!(e.offset, offset, "{text}: {e}");
            assert!(e.to_string().starts_with(&format!("at byte {offset}: ")));
            assert!(!e.to_string().contains('\n'));
        }
    }

    #[test]
    fn non_ascii_input_is_an_error() {
        let e = parse_word("c1 ∘ c2", 1).unwrap_err();
        assert_eq!(e.offset, 3);
        assert!(e.to_string().contains('∘'));
    }

    #[test]
    fn oversized_words_rejected() {
        assert!(parse_word("((c1)^1000)^1000", 1).is_ok());
        assert!(parse_word("((c1)^1000)^1001", 1).is_err());
        assert!(parse_word("c1^99999999999999999999", 1).is_err());
    }

    #[test]
    fn commutator_pairs() {
        let (a, b) = parse_commutator_pair("[c1 c2, c3']", 1).unwrap();
        assert_eq!(print_word(&a), "c1 c2");
        assert_eq!(print_word(&b), "c3'");
        let (a, b) = parse_commutator_pair("[ , ]", 2).unwrap();
        assert!(a.nodes().is_empty() && b.nodes().is_empty());
        assert!(parse_commutator_pair("[c1]", 1).is_err());
        assert!(parse_commutator_pair("[c1, c2] c3", 1).is_err());
    }

    #[test]
    fn printed_words_reparse() {
        for text in ["(c1 c2)^6", "S{1}^2 c1", "[c1 c2^3, (c3 c4)']^2", "T[1,-1,0,1]' c5"] {
            let w = parse_flat_word(text, 2).unwrap();
            let printed = print_word(&w);
            assert_eq!(parse_flat_word(&printed, 2).unwrap(), w, "{text} -> {printed}");
        }
    }
}
