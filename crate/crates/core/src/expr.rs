//! A small expression language for symmetric functions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | primary ('^' uint)?
//! primary:= atom | uint | '(' expr ')'
//! atom   := basis '[' uint (',' uint)* ']' | basis '[]'
//! basis  := 'm' | 'e' | 'h' | 'p' | 's'
//! ```
//!
//! Atom indices must form a partition. With [`ParseOptions::sort_indices`],
//! `e` and `h` atoms may be indexed by any composition, zeros included,
//! since those bases are multiplicative.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigUint),
    Atom(Basis, Partition),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    pub sort_indices: bool,
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        Expr::parse_with(src, ParseOptions::default())
    }

    pub fn parse_with(src: &str, opts: ParseOptions) -> Result<Expr> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
            opts,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected input"));
        }
        Ok(e)
    }

    pub fn eval(&self) -> SymFunc {
        match self {
            Expr::Int(n) => SymFunc::constant(BigRational::from_integer(BigInt::from(n.clone()))),
            Expr::Atom(b, lam) => SymFunc::from_basis(*b, lam),
            Expr::Neg(a) => -a.eval(),
            Expr::Add(a, b) => a.eval() + b.eval(),
            Expr::Sub(a, b) => a.eval() - b.eval(),
            Expr::Mul(a, b) => a.eval() * b.eval(),
            Expr::Pow(a, k) => a.eval().pow(*k as usize),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Atom(..) => 5,
        }
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Atom(b, lam) => {
                let idx: Vec<String> = lam.parts().iter().map(|x| x.to_string()).collect();
                write!(f, "{}[{}]", b.tag(), idx.join(","))
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_at(f, a, 3)
            }
            Expr::Add(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(" + ")?;
                write_at(f, b, 2)
            }
            Expr::Sub(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(" - ")?;
                write_at(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_at(f, a, 2)?;
                f.write_str("*")?;
                write_at(f, b, 3)
            }
            Expr::Pow(a, k) => {
                write_at(f, a, 5)?;
                write!(f, "^{k}")
            }
        }
    }
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Expr::parse(s)
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(src: &str, opts: ParseOptions) -> Result<SymFunc> {
    Ok(Expr::parse_with(src, opts)?.eval())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    opts: ParseOptions,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let k = self.uint()?;
            let k = u32::try_from(k).map_err(|_| Error::Parse {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.uint()?)),
            Some(c) if c.is_ascii_alphabetic() => self.atom(),
            Some(_) => Err(self.error("expected a number, an atom or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<BigUint> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits"))
    }

    fn small_uint(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.uint()?;
        usize::try_from(n).map_err(|_| Error::Parse {
            pos: start,
            msg: "index too large".into(),
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = self.pos;
        let c = self.src[self.pos] as char;
        self.pos += 1;
        let basis: Basis = c.to_string().parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("unknown basis '{c}'"),
        })?;
        self.expect(b'[')?;
        let mut idx = Vec::new();
        if self.peek() != Some(b']') {
            self.skip_ws();
            idx.push(self.small_uint()?);
            while self.peek() == Some(b',') {
                self.pos += 1;
                self.skip_ws();
                idx.push(self.small_uint()?);
            }
        }
        self.expect(b']')?;
        let composable = self.opts.sort_indices && basis.is_multiplicative() && basis != Basis::P;
        let lam = if composable {
            Partition::from_composition(&idx)
        } else {
            Partition::new(idx).map_err(|e| Error::Parse {
                pos: start,
                msg: e.to_string(),
            })?
        };
        Ok(Expr::Atom(basis, lam))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_composition(v)
    }

    #[test]
    fn atoms() {
        assert_eq!(
            Expr::parse("h[2,2]").unwrap(),
            Expr::Atom(Basis::H, p(&[2, 2]))
        );
        assert_eq!(Expr::parse("s[]").unwrap(), Expr::Atom(Basis::S, p(&[])));
        assert_eq!(
            Expr::parse(" p[ 3 , 1 ] ").unwrap(),
            Expr::Atom(Basis::P, p(&[3, 1]))
        );
    }

    #[test]
    fn arithmetic() {
        let e = Expr::parse("p[3]^2 - 2*e[1,1]").unwrap();
        let expected = SymFunc::p(3).pow(2)
            - SymFunc::from_basis(Basis::E, &p(&[1, 1]))
                .scale(&BigRational::from_integer(2.into()));
        assert_eq!(e.eval(), expected);
        assert_eq!(e.to_string(), "p[3]^2 - 2*e[1,1]");
        assert_eq!(
            eval_str("(h[1] + 1)^2 - h[1]*h[1]", ParseOptions::default()).unwrap(),
            SymFunc::h(1).scale(&BigRational::from_integer(2.into())) + SymFunc::one()
        );
        assert_eq!(
            eval_str("-h[2] + h[2]", ParseOptions::default()).unwrap(),
            SymFunc::zero()
        );
    }

    #[test]
    fn index_validation() {
        let err = Expr::parse("s[1,2]").unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 0, .. }));
        let sorted = ParseOptions { sort_indices: true };
        assert!(Expr::parse_with("s[1,2]", sorted).is_err());
        assert!(Expr::parse_with("p[1,2]", sorted).is_err());
        assert_eq!(
            Expr::parse_with("h[1,2]", sorted).unwrap(),
            Expr::Atom(Basis::H, p(&[2, 1]))
        );
        assert_eq!(
            Expr::parse_with("e[0,3,1]", sorted).unwrap(),
            Expr::Atom(Basis::E, p(&[3, 1]))
        );
        assert!(Expr::parse("h[2,0]").is_err());
    }

    #[test]
    fn syntax_errors_have_positions() {
        let pos = |s: &str| match Expr::parse(s) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("{s:?} gave {other:?}"),
        };
        assert_eq!(pos("h[2"), 3);
        assert_eq!(pos("h[2] +"), 6);
        assert_eq!(pos("x[1]"), 0);
        assert_eq!(pos("h[1] h[2]"), 5);
        assert_eq!(pos("(h[1]"), 5);
        assert_eq!(pos("h[1]^"), 5);
    }

    #[test]
    fn formatted_elements_parse_back() {
        for basis in Basis::ALL {
            let f = SymFunc::from_basis(Basis::S, &p(&[2, 1])) - SymFunc::integer(2);
            let s = f.to_expr_string(Basis::S).unwrap();
            assert_eq!(Expr::parse(&s).unwrap().eval(), f);
            let g = SymFunc::from_basis(basis, &p(&[2]));
            if let Ok(s) = g.to_expr_string(basis) {
                assert_eq!(Expr::parse(&s).unwrap().eval(), g);
            }
        }
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0u32..20).prop_map(|n| Expr::Int(BigUint::from(n))),
            (0usize..5, proptest::collection::vec(1usize..4, 0..3))
                .prop_map(|(b, v)| { Expr::Atom(Basis::ALL[b], Partition::from_composition(&v)) }),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
                (inner, 0u32..3).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse(e in arb_expr()) {
            let s = e.to_string();
            prop_assert_eq!(Expr::parse(&s).unwrap(), e, "{}", s);
        }
    }
}
