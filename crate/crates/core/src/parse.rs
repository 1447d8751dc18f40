//! Text grammar for bracket expressions.
//!
//! ```text
//! expr   := ['-'|'+'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := rational | name | '(' expr ')' | '[' expr ',' expr ']'
//!         | '{' expr ',' expr '}' | '<' expr ',' expr ',' expr '>'
//! ```
//!
//! Without an explicit alphabet, a name is one ASCII letter followed by
//! optional digits (`x12`, `e2`, `y`), so `xxy` reads as three letters.
//! Names are numbered in natural order (`x < x2 < x10 < y`).

use crate::alphabet::Alphabet;
use crate::bracket::{BracketExpr, IdentityTemplate};
use crate::error::{Error, Result};
use crate::rational::{int, parse_rational, Rational};

use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Num(Rational),
    Name(u32),
    Dot,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Lt,
    Gt,
    Comma,
    Plus,
    Minus,
    Star,
    Equals,
}

/// How identifier runs are cut into generator names.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Names<'a> {
    /// Letter followed by digits; indices resolved by the given alphabet.
    Auto(&'a Alphabet),
    /// Longest registered prefix.
    Fixed(&'a Alphabet),
}

fn auto_segments(word: &str) -> Vec<(usize, &str)> {
    let bytes = word.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        i += 1;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        out.push((start, &word[start..i]));
    }
    out
}

/// Collects auto-mode names in a text, for building an alphabet.
pub(crate) fn collect_names(text: &str) -> Result<Vec<String>> {
    let mut names = Vec::new();
    for (pos, word, _) in words(text)? {
        if word == "d" && text[pos + 1..].trim_start().starts_with('(') {
            continue;
        }
        for (_, seg) in auto_segments(word) {
            names.push(seg.to_string());
        }
    }
    Ok(names)
}

/// Identifier runs `[A-Za-z][A-Za-z0-9_']*` with their byte offsets.
fn words(text: &str) -> Result<Vec<(usize, &str, usize)>> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_digit() {
            while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'/') {
                i += 1;
            }
        } else if c.is_ascii_alphabetic() {
            let s = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_' || b[i] == b'\'') {
                i += 1;
            }
            out.push((s, &text[s..i], i));
        } else {
            i += 1;
        }
    }
    Ok(out)
}

pub(crate) fn lex(text: &str, names: Names<'_>, allow_dots: bool) -> Result<Vec<(usize, Tok)>> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let single = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            b'{' => Some(Tok::LBrace),
            b'}' => Some(Tok::RBrace),
            b'<' => Some(Tok::Lt),
            b'>' => Some(Tok::Gt),
            b',' => Some(Tok::Comma),
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'=' => Some(Tok::Equals),
            _ => None,
        };
        if let Some(t) = single {
            out.push((i, t));
            i += 1;
            continue;
        }
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < b.len() && b[i] == b'/' && b[i + 1].is_ascii_digit() {
                i += 1;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let q = parse_rational(&text[s..i]).map_err(|_| Error::Syntax { pos: s, msg: "bad number".into() })?;
            out.push((s, Tok::Num(q)));
        } else if c.is_ascii_alphabetic() {
            let s = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_' || b[i] == b'\'') {
                i += 1;
            }
            let word = &text[s..i];
            if allow_dots && word == "d" && text[i..].trim_start().starts_with('(') {
                out.push((s, Tok::Dot));
                continue;
            }
            match names {
                Names::Auto(alpha) => {
                    for (off, seg) in auto_segments(word) {
                        let idx = alpha.lookup(seg).ok_or_else(|| Error::UnknownGenerator(seg.to_string()))?;
                        out.push((s + off, Tok::Name(idx)));
                    }
                }
                Names::Fixed(alpha) => {
                    let mut off = 0;
                    while off < word.len() {
                        let (idx, len) = alpha
                            .longest_prefix(&word[off..])
                            .ok_or_else(|| Error::UnknownGenerator(word[off..].to_string()))?;
                        out.push((s + off, Tok::Name(idx)));
                        off += len;
                    }
                }
            }
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(Error::Syntax { pos: i, msg: format!("unexpected character '{ch}'") });
        }
    }
    Ok(out)
}

pub(crate) struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    pub(crate) fn new(toks: Vec<(usize, Tok)>, end: usize) -> Self {
        Self { toks, at: 0, end }
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    pub(crate) fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    pub(crate) fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    pub(crate) fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    pub(crate) fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.at += 1;
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.at >= self.toks.len()
    }

    fn expr(&mut self) -> Result<BracketExpr> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                true
            }
            Some(Tok::Plus) => {
                self.at += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            terms.push(if negate { negated(t) } else { t });
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => break,
            }
            self.at += 1;
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { BracketExpr::Sum(terms) })
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Name(_) | Tok::LParen | Tok::LBracket | Tok::LBrace | Tok::Lt)
        )
    }

    fn term(&mut self) -> Result<BracketExpr> {
        let mut coeff = Rational::one();
        let mut explicit = false;
        let mut factors = Vec::new();
        if !self.starts_factor() {
            return self.error("expected a term");
        }
        loop {
            match self.peek() {
                Some(Tok::Num(q)) => {
                    coeff *= q.clone();
                    explicit = true;
                    self.at += 1;
                }
                _ => factors.push(self.factor()?),
            }
            if self.peek() == Some(&Tok::Star) {
                self.at += 1;
                if !self.starts_factor() {
                    return self.error("expected a factor after '*'");
                }
            } else if !self.starts_factor() {
                break;
            }
        }
        let Some(body) = BracketExpr::product(factors) else {
            if coeff.is_zero() {
                return Ok(BracketExpr::zero());
            }
            return self.error("scalar without a generator");
        };
        Ok(if explicit && !coeff.is_one() { BracketExpr::scale(coeff, body) } else if coeff.is_zero() {
            BracketExpr::zero()
        } else {
            body
        })
    }

    fn factor(&mut self) -> Result<BracketExpr> {
        match self.bump() {
            Some(Tok::Name(i)) => Ok(BracketExpr::Gen(i)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::LBracket) => {
                let a = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.expr()?;
                self.expect(Tok::RBracket, "']'")?;
                Ok(BracketExpr::comm(a, b))
            }
            Some(Tok::LBrace) => {
                let a = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.expr()?;
                self.expect(Tok::RBrace, "'}'")?;
                Ok(BracketExpr::anti(a, b))
            }
            Some(Tok::Lt) => {
                let a = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let c = self.expr()?;
                self.expect(Tok::Gt, "'>'")?;
                Ok(BracketExpr::associator(a, b, c))
            }
            _ => {
                self.at -= 1;
                self.error("expected a factor")
            }
        }
    }
}

fn negated(t: BracketExpr) -> BracketExpr {
    match t {
        BracketExpr::Scale(c, b) => BracketExpr::Scale(-c, b),
        BracketExpr::Sum(ts) if ts.is_empty() => BracketExpr::zero(),
        other => BracketExpr::scale(int(-1), other),
    }
}

/// Result of parsing with an inferred alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct Parsed {
    pub expr: BracketExpr,
    pub alphabet: Alphabet,
}

fn parse_tokens(text: &str, toks: Vec<(usize, Tok)>) -> Result<BracketExpr> {
    let mut p = Parser::new(toks, text.len());
    let e = p.expr()?;
    if !p.at_end() {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

/// Parses an expression, numbering the generator names it mentions.
pub fn parse_expr(text: &str) -> Result<Parsed> {
    let alphabet = Alphabet::sorted(collect_names(text)?)?;
    let expr = parse_tokens(text, lex(text, Names::Auto(&alphabet), false)?)?;
    Ok(Parsed { expr, alphabet })
}

/// Parses against a fixed alphabet; names are matched longest-first.
pub fn parse_expr_with(text: &str, alphabet: &Alphabet) -> Result<BracketExpr> {
    parse_tokens(text, lex(text, Names::Fixed(alphabet), false)?)
}

fn to_slots(e: BracketExpr) -> BracketExpr {
    use BracketExpr as E;
    match e {
        E::Gen(i) => E::Var(i as usize),
        E::Var(s) => E::Var(s),
        E::Assoc(a, b) => E::assoc(to_slots(*a), to_slots(*b)),
        E::Comm(a, b) => E::comm(to_slots(*a), to_slots(*b)),
        E::Anti(a, b) => E::anti(to_slots(*a), to_slots(*b)),
        E::Scale(c, a) => E::scale(c, to_slots(*a)),
        E::Sum(ts) => E::Sum(ts.into_iter().map(to_slots).collect()),
    }
}

/// Parses `lhs = rhs` (or `lhs`, meaning `lhs = 0`) where every name is a
/// variable slot.
pub fn parse_template(text: &str) -> Result<IdentityTemplate> {
    let alphabet = Alphabet::sorted(collect_names(text)?)?;
    let toks = lex(text, Names::Auto(&alphabet), false)?;
    let mut p = Parser::new(toks, text.len());
    let lhs = p.expr()?;
    let rhs = if p.peek() == Some(&Tok::Equals) {
        p.at += 1;
        p.expr()?
    } else {
        BracketExpr::zero()
    };
    if !p.at_end() {
        return p.error("unexpected trailing input");
    }
    IdentityTemplate::new(text.trim(), to_slots(lhs), to_slots(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use BracketExpr as E;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_expr("[x1,x2]").unwrap().expr, E::comm(E::gen(1), E::gen(2)));
        let e = parse_expr("{{x1,x2},{x3,x4}}").unwrap().expr;
        assert_eq!(e, E::anti(E::anti(E::gen(1), E::gen(2)), E::anti(E::gen(3), E::gen(4))));
        let e = parse_expr("1/2 {x1,x1}").unwrap().expr;
        assert_eq!(e, E::scale(ratio(1, 2), E::anti(E::gen(1), E::gen(1))));
    }

    #[test]
    fn juxtaposition_and_names() {
        let p = parse_expr("xxy + yxx").unwrap();
        assert_eq!(p.alphabet.names(), &["x", "y"]);
        assert_eq!(p.expr.expand().unwrap().to_string(), "x1x1x2 + x2x1x1");
        let p = parse_expr("x3x10").unwrap();
        assert_eq!(p.expr, E::assoc(E::gen(1), E::gen(2)));
        assert_eq!(p.alphabet.names(), &["x3", "x10"]);
    }

    #[test]
    fn precedence() {
        let e = parse_expr("-x1*x2 + 2x1 - 3/4 x2").unwrap().expr;
        let expected = E::Sum(vec![
            E::scale(int(-1), E::assoc(E::gen(1), E::gen(2))),
            E::scale(int(2), E::gen(1)),
            E::scale(ratio(-3, 4), E::gen(2)),
        ]);
        assert_eq!(e, expected);
        assert_eq!(parse_expr("0").unwrap().expr, E::zero());
    }

    #[test]
    fn errors_carry_position() {
        assert!(matches!(parse_expr("[x1,x2"), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse_expr("x1 + "), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("x1 $ x2"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_expr("3"), Err(Error::Syntax { .. })));
        let a = Alphabet::from_names(["e1", "e2"]).unwrap();
        assert_eq!(parse_expr_with("e1*e3", &a), Err(Error::UnknownGenerator("e3".into())));
    }

    #[test]
    fn fixed_alphabet_longest_match() {
        let a = Alphabet::from_names(["e1", "e12", "e2"]).unwrap();
        assert_eq!(parse_expr_with("e12e1", &a).unwrap(), E::assoc(E::gen(2), E::gen(1)));
    }

    #[test]
    fn associator_and_templates() {
        let t = parse_template("[[a,b],[c,d]] = 0").unwrap();
        assert_eq!(t.arity(), 4);
        let t = parse_template("<{a,b},c,d>").unwrap();
        assert_eq!(t.arity(), 4);
        assert_eq!(t.rhs, E::zero());
    }

    #[test]
    fn print_parse_round_trip() {
        for text in ["[x2,x1] - 1/2 {x1,x1} + 3x1*x2*x3", "x1*(x2*x3)", "-2(x1 + x2)*x3", "<x1,x2,x3>"] {
            let p = parse_expr(text).unwrap();
            let printed = p.expr.render(&p.alphabet);
            let again = parse_expr_with(&printed, &p.alphabet).unwrap();
            assert_eq!(again.render(&p.alphabet), printed, "{text}");
        }
    }
}
