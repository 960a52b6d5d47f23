//! Text grammar for polynomials.
//!
//! Terms are separated by + or -. A term is an optional rational coefficient
//! (N or N/D), an optional '*', and a product of monomials written as
//! variable names with optional ^E exponents. Whitespace may appear between
//! any two tokens; a '#' discards the rest of the line.

use super::{Monomial, Poly};
use crate::exactlin::Rational;
use num::{BigInt, One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("syntax error at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

fn err(column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        column,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
}

impl Lexer {
    fn lex(text: &str) -> Result<Lexer, ParseError> {
        let mut tokens = Vec::new();
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                '#' => break,
                ' ' | '\t' | '\r' | '\n' => i += 1,
                '+' => {
                    tokens.push((i, Token::Plus));
                    i += 1;
                }
                '-' => {
                    tokens.push((i, Token::Minus));
                    i += 1;
                }
                '*' => {
                    tokens.push((i, Token::Star));
                    i += 1;
                }
                '/' => {
                    tokens.push((i, Token::Slash));
                    i += 1;
                }
                '^' => {
                    tokens.push((i, Token::Caret));
                    i += 1;
                }
                '0'..='9' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().collect();
                    let n = BigInt::parse_bytes(digits.as_bytes(), 10)
                        .ok_or_else(|| err(start, "invalid number"))?;
                    tokens.push((start, Token::Number(n)));
                }
                c if c.is_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    tokens.push((start, Token::Name(chars[start..i].iter().collect())));
                }
                other => return Err(err(i, format!("unexpected character '{other}'"))),
            }
        }
        Ok(Lexer { tokens })
    }
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    names: &'a [String],
    num_vars: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn variable_index(&self, name: &str, column: usize) -> Result<usize, ParseError> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Ok(i);
        }
        // Default names x1..xm stay valid even under aliases that do not
        // shadow them.
        if let Some(rest) = name.strip_prefix('x') {
            if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) && !rest.starts_with('0')
            {
                let k: usize = rest
                    .parse()
                    .map_err(|_| err(column, "variable index too large"))?;
                if k >= 1 && k <= self.num_vars && !self.names.iter().any(|n| n == name) {
                    return Ok(k - 1);
                }
                if k > self.num_vars {
                    return Err(err(
                        column,
                        format!("variable index {k} exceeds declared count {}", self.num_vars),
                    ));
                }
            }
        }
        Err(err(column, format!("unknown variable '{name}'")))
    }

    fn parse_poly(&mut self) -> Result<Poly, ParseError> {
        let mut poly = Poly::zero(self.num_vars);
        let mut first = true;
        loop {
            let mut sign = Rational::one();
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                }
                Some(Token::Minus) => {
                    self.bump();
                    sign = -sign;
                }
                None if first => return Err(err(self.column(), "empty polynomial")),
                None => return Err(err(self.column(), "dangling term separator")),
                _ if first => {}
                _ => return Err(err(self.column(), "expected '+' or '-' between terms")),
            }
            let (mono, coeff) = self.parse_term()?;
            poly.add_term(mono, coeff * sign);
            first = false;
            if self.peek().is_none() {
                return Ok(poly);
            }
        }
    }

    fn parse_term(&mut self) -> Result<(Monomial, Rational), ParseError> {
        let mut coeff = Rational::one();
        let mut have_coeff = false;
        if let Some(Token::Number(_)) = self.peek() {
            let Some(Token::Number(n)) = self.bump() else {
                unreachable!()
            };
            let mut c = Rational::from_integer(n);
            if let Some(Token::Slash) = self.peek() {
                let slash_col = self.column();
                self.bump();
                match self.bump() {
                    Some(Token::Number(d)) => {
                        if d.is_zero() {
                            return Err(err(slash_col, "zero denominator"));
                        }
                        c /= Rational::from_integer(d);
                    }
                    _ => return Err(err(slash_col, "expected denominator after '/'")),
                }
            }
            coeff = c;
            have_coeff = true;
            if let Some(Token::Star) = self.peek() {
                self.bump();
            }
        }
        let mut exps = vec![0u32; self.num_vars];
        let mut have_mono = false;
        loop {
            match self.peek() {
                Some(Token::Name(_)) => {
                    let col = self.column();
                    let Some(Token::Name(name)) = self.bump() else {
                        unreachable!()
                    };
                    let var = self.variable_index(&name, col)?;
                    let mut e = 1u32;
                    if let Some(Token::Caret) = self.peek() {
                        let caret_col = self.column();
                        self.bump();
                        match self.bump() {
                            Some(Token::Number(n)) => {
                                e = u32::try_from(&n)
                                    .map_err(|_| err(caret_col, "exponent too large"))?;
                                if e == 0 {
                                    return Err(err(caret_col, "exponent must be at least 1"));
                                }
                            }
                            _ => return Err(err(caret_col, "expected exponent after '^'")),
                        }
                    }
                    exps[var] += e;
                    have_mono = true;
                    if let Some(Token::Star) = self.peek() {
                        self.bump();
                    }
                }
                _ => break,
            }
        }
        if !have_mono && !have_coeff {
            return Err(err(self.column(), "expected a term"));
        }
        Ok((Monomial::new(exps), coeff))
    }
}

/// Parse with default variable names x1..xm.
pub fn parse(text: &str, num_vars: usize) -> Result<Poly, ParseError> {
    parse_with_names(text, num_vars, &[])
}

/// Parse with explicit variable names; default names x1..xm remain accepted
/// unless shadowed by an alias.
pub fn parse_with_names(text: &str, num_vars: usize, names: &[String]) -> Result<Poly, ParseError> {
    assert!(names.is_empty() || names.len() == num_vars);
    let lexer = Lexer::lex(text)?;
    let mut parser = Parser {
        tokens: lexer.tokens,
        pos: 0,
        names,
        num_vars,
        end: text.chars().count(),
    };
    parser.parse_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, ratio};

    #[test]
    fn parses_simple_sum() {
        let p = parse("x1^3 + x2^3", 2).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&Monomial::new(vec![3, 0])), Some(&rat(1)));
        assert_eq!(p.coeff(&Monomial::new(vec![0, 3])), Some(&rat(1)));
    }

    #[test]
    fn parses_aliased_names() {
        let names: Vec<String> = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
        let p = parse_with_names("x^3+t^2", 4, &names).unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![3, 0, 0, 0])), Some(&rat(1)));
        assert_eq!(p.coeff(&Monomial::new(vec![0, 0, 0, 2])), Some(&rat(1)));
    }

    #[test]
    fn parses_rational_coefficient() {
        let p = parse("-2/3 x1 x2", 2).unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![1, 1])), Some(&ratio(-2, 3)));
    }

    #[test]
    fn parses_star_and_repeated_variables() {
        assert_eq!(
            parse("2*x1*x1^2", 1).unwrap(),
            parse("2 x1^3", 1).unwrap()
        );
    }

    #[test]
    fn parses_constants_and_zero() {
        let p = parse("3/2", 2).unwrap();
        assert_eq!(p.coeff(&Monomial::one(2)), Some(&ratio(3, 2)));
        assert!(parse("x1 - x1", 1).unwrap().is_zero());
    }

    #[test]
    fn comment_terminates_input() {
        assert_eq!(
            parse("x1 + x2 # tail comment", 2).unwrap(),
            parse("x1 + x2", 2).unwrap()
        );
    }

    #[test]
    fn rejects_unknown_and_out_of_range_variables() {
        let e = parse("x5", 4).unwrap_err();
        assert!(e.message.contains("exceeds"));
        let e = parse("y1", 2).unwrap_err();
        assert!(e.message.contains("unknown variable"));
    }

    #[test]
    fn rejects_malformed_input_with_position() {
        assert_eq!(parse("", 2).unwrap_err().column, 0);
        assert!(parse("x1 +", 2).is_err());
        assert!(parse("x1^", 2).is_err());
        assert!(parse("1/0", 2).is_err());
        assert!(parse("x1 x2 3", 2).is_err());
        assert!(parse("x1^0", 2).is_err());
    }

    #[test]
    fn display_round_trips_through_parse() {
        for text in [
            "x1^3 + x2^3",
            "-2/3 x1 x2 + 5",
            "x1^2 x2 - x3 + 1/7",
            "7 x1^4 - 3/2 x2^2 x3^2 + x3 - 12",
        ] {
            let p = parse(text, 3).unwrap();
            let q = parse(&p.to_string(), 3).unwrap();
            assert_eq!(p, q);
        }
    }
}
