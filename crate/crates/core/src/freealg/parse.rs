use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::Field;

use super::poly::NcPolynomial;
use super::word::{GeneratorSet, Word};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().unwrap()), col));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            _ => return Err(Error::parse(1, col, format!("unexpected character `{c}`"))),
        };
        out.push((t, col));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    gens: &'a GeneratorSet,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(1, self.col(), msg))
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    /// factor := int ['/' int] | ident ['^' int]
    fn factor(&mut self, coef: &mut BigRational, letters: &mut Vec<u16>) -> Result<()> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut q = BigRational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return self.err("division by zero");
                    }
                    q /= BigRational::from_integer(d);
                }
                *coef *= q;
                Ok(())
            }
            Some(Tok::Ident(name)) => {
                let g = match self.gens.index_of(&name) {
                    Some(g) => g,
                    None => return self.err(format!("unknown generator `{name}`")),
                };
                self.pos += 1;
                let mut times = 1usize;
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let e = self.integer()?;
                    times = match usize::try_from(e) {
                        Ok(t) if (1..=1 << 12).contains(&t) => t,
                        _ => return self.err("exponent must be a positive integer"),
                    };
                }
                letters.extend(std::iter::repeat_n(g as u16, times));
                Ok(())
            }
            _ => self.err("expected a coefficient or a generator"),
        }
    }

    fn term(&mut self, poly: &mut Vec<(BigRational, Vec<u16>)>, sign: i32) -> Result<()> {
        let mut coef = BigRational::one();
        if sign < 0 {
            coef = -coef;
        }
        let mut letters = Vec::new();
        self.factor(&mut coef, &mut letters)?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            self.factor(&mut coef, &mut letters)?;
        }
        poly.push((coef, letters));
        Ok(())
    }

    fn polynomial(&mut self) -> Result<Vec<(BigRational, Vec<u16>)>> {
        let mut terms = Vec::new();
        let mut sign = 1;
        match self.peek() {
            Some(Tok::Minus) => {
                sign = -1;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            None => return self.err("empty polynomial"),
            _ => {}
        }
        self.term(&mut terms, sign)?;
        loop {
            match self.peek() {
                None => break,
                Some(Tok::Plus) => {
                    self.pos += 1;
                    self.term(&mut terms, 1)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    self.term(&mut terms, -1)?;
                }
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            }
        }
        Ok(terms)
    }
}

/// Parses `x*x*y - 1/2*y*x*x + 3`; `x^2` is accepted as `x*x`.
/// Errors report the column (line is always 1).
pub fn parse_polynomial(text: &str, gens: &GeneratorSet, field: Field) -> Result<NcPolynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, gens, end_col: text.chars().count() + 1 };
    let terms = p.polynomial()?;
    let mut out = NcPolynomial::zero();
    for (q, letters) in terms {
        let c = field.from_rational(&q)?;
        let w: Word = gens.word(letters);
        out.add_term(w, c);
    }
    Ok(out)
}
