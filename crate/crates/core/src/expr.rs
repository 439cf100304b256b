//! Text syntax for polynomials in `t` and `s` with quaternion coefficients.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary ('*' unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' uint)?
//! atom     := rational | 'i' | 'j' | 'k' | 't' | 's' | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! Products keep their written order. Unary minus binds looser than `^`, so
//! `-t^2` is `-(t^2)`. Powers are only accepted on bases without `i`, `j`, `k`.

use malachite_nz::integer::Integer;

use crate::algebra::{Quat, Rational};
use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::starone::StarOnePoly;

const MAX_EXPONENT: u32 = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Rational(Rational),
    Unit(char),
    Var(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Group(Box<Expr>),
}

/// AST node with the 1-based source position of its first token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub line: usize,
    pub column: usize,
}

impl Expr {
    fn has_unit(&self) -> bool {
        match &self.kind {
            ExprKind::Unit(_) => true,
            ExprKind::Rational(_) | ExprKind::Var(_) => false,
            ExprKind::Neg(e) | ExprKind::Group(e) | ExprKind::Pow(e, _) => e.has_unit(),
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) => a.has_unit() || b.has_unit(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Integer),
    Ident(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Num(n) => format!("number {n}"),
        Tok::Ident(c) => format!("'{c}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                column += 1;
            }
            tokens.push(Token {
                tok: Tok::Num(digits.parse().expect("ascii digits")),
                line: l,
                column: col,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'i' | 'j' | 'k' | 't' | 's' => Tok::Ident(c),
            other => return Err(syntax(l, col, format!("unexpected character '{other}'"))),
        };
        chars.next();
        column += 1;
        tokens.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    tokens.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> Error {
        let t = self.peek();
        syntax(
            t.line,
            t.column,
            format!("expected {expected}, found {}", describe(&t.tok)),
        )
    }

    fn node(kind: ExprKind, at: &Token) -> Expr {
        Expr {
            kind,
            line: at.line,
            column: at.column,
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = self.peek().clone();
            let build: fn(Box<Expr>, Box<Expr>) -> ExprKind = match op.tok {
                Tok::Plus => ExprKind::Add,
                Tok::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.next();
            let rhs = self.term()?;
            let (line, column) = (lhs.line, lhs.column);
            lhs = Expr {
                kind: build(Box::new(lhs), Box::new(rhs)),
                line,
                column,
            };
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.next();
            let rhs = self.unary()?;
            let (line, column) = (lhs.line, lhs.column);
            lhs = Expr {
                kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)),
                line,
                column,
            };
        }
        match self.peek().tok {
            Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                Err(self.unexpected("an operator (products need an explicit '*')"))
            }
            _ => Ok(lhs),
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::Minus {
            let at = self.next();
            let inner = self.unary()?;
            return Ok(Self::node(ExprKind::Neg(Box::new(inner)), &at));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.next();
        if base.has_unit() {
            return Err(syntax(
                caret.line,
                caret.column,
                "powers are only allowed on bases without i, j, k",
            ));
        }
        let exp = self.next();
        let Tok::Num(n) = &exp.tok else {
            return Err(syntax(
                exp.line,
                exp.column,
                format!("expected exponent, found {}", describe(&exp.tok)),
            ));
        };
        let e = u32::try_from(n)
            .ok()
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or_else(|| syntax(exp.line, exp.column, format!("exponent exceeds {MAX_EXPONENT}")))?;
        let (line, column) = (base.line, base.column);
        Ok(Expr {
            kind: ExprKind::Pow(Box::new(base), e),
            line,
            column,
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.peek().clone();
        match &at.tok {
            Tok::Num(n) => {
                self.next();
                let mut value = Rational::from(n.clone());
                if self.peek().tok == Tok::Slash {
                    self.next();
                    let den_tok = self.next();
                    let Tok::Num(d) = den_tok.tok else {
                        return Err(syntax(den_tok.line, den_tok.column, "expected denominator"));
                    };
                    if d == 0u32 {
                        return Err(syntax(den_tok.line, den_tok.column, "division by zero"));
                    }
                    value /= Rational::from(d);
                }
                Ok(Self::node(ExprKind::Rational(value), &at))
            }
            Tok::Ident(c @ ('i' | 'j' | 'k')) => {
                let c = *c;
                self.next();
                Ok(Self::node(ExprKind::Unit(c), &at))
            }
            Tok::Ident(c) => {
                let c = *c;
                self.next();
                Ok(Self::node(ExprKind::Var(c), &at))
            }
            Tok::LParen => {
                self.next();
                let inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.next();
                Ok(Self::node(ExprKind::Group(Box::new(inner)), &at))
            }
            _ => Err(self.unexpected("a number, i, j, k, t, s or '('")),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr> {
    let mut parser = Parser {
        tokens: tokenize(input)?,
        pos: 0,
    };
    let e = parser.expr()?;
    if parser.peek().tok != Tok::End {
        return Err(parser.unexpected("end of input"));
    }
    Ok(e)
}

/// Polynomial in `t` and `s`, indexed by `s`-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BiPoly(Vec<QPoly>);

impl BiPoly {
    fn constant(q: QPoly) -> Self {
        BiPoly(vec![q]).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(QPoly::is_zero) {
            self.0.pop();
        }
        self
    }

    fn get(&self, i: usize) -> QPoly {
        self.0.get(i).cloned().unwrap_or_else(QPoly::zero)
    }

    fn combine(&self, o: &BiPoly, f: impl Fn(&QPoly, &QPoly) -> QPoly) -> Self {
        let n = self.0.len().max(o.0.len());
        BiPoly((0..n).map(|i| f(&self.get(i), &o.get(i))).collect()).trimmed()
    }

    fn mul(&self, o: &BiPoly) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return BiPoly(Vec::new());
        }
        let mut out = vec![QPoly::zero(); self.0.len() + o.0.len() - 1];
        for (a, p) in self.0.iter().enumerate() {
            for (b, q) in o.0.iter().enumerate() {
                out[a + b] = &out[a + b] + &(p * q);
            }
        }
        BiPoly(out).trimmed()
    }
}

fn eval(e: &Expr) -> BiPoly {
    match &e.kind {
        ExprKind::Rational(r) => BiPoly::constant(QPoly::constant(Quat::real(r.clone()))),
        ExprKind::Unit(c) => BiPoly::constant(QPoly::constant(match c {
            'i' => Quat::unit_i(),
            'j' => Quat::unit_j(),
            _ => Quat::unit_k(),
        })),
        ExprKind::Var('t') => BiPoly::constant(QPoly::new(vec![Quat::zero(), Quat::one()])),
        ExprKind::Var(_) => BiPoly(vec![QPoly::zero(), QPoly::one()]),
        ExprKind::Neg(a) => eval(a).combine(&BiPoly(Vec::new()), |p, _| -p),
        ExprKind::Add(a, b) => eval(a).combine(&eval(b), |p, q| p + q),
        ExprKind::Sub(a, b) => eval(a).combine(&eval(b), |p, q| p - q),
        ExprKind::Mul(a, b) => eval(a).mul(&eval(b)),
        ExprKind::Pow(a, n) => {
            let base = eval(a);
            (0..*n).fold(BiPoly::constant(QPoly::one()), |acc, _| acc.mul(&base))
        }
        ExprKind::Group(a) => eval(a),
    }
}

/// Result of evaluating an expression, classified by `s`-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluated {
    Univariate(QPoly),
    StarOne(StarOnePoly),
}

pub fn evaluate(e: &Expr) -> Result<Evaluated> {
    let BiPoly(mut parts) = eval(e);
    match parts.len() {
        0 => Ok(Evaluated::Univariate(QPoly::zero())),
        1 => Ok(Evaluated::Univariate(parts.pop().expect("one part"))),
        2 => {
            let q1 = parts.pop().expect("two parts");
            let q0 = parts.pop().expect("two parts");
            Ok(Evaluated::StarOne(StarOnePoly::new(q0, q1)?))
        }
        n => Err(Error::Degree(n - 1)),
    }
}

/// Parses and evaluates in one step.
pub fn parse_polynomial(input: &str) -> Result<Evaluated> {
    evaluate(&parse(input)?)
}

/// Parses an input that must have `s`-degree one.
pub fn parse_star_one(input: &str) -> Result<StarOnePoly> {
    match parse_polynomial(input)? {
        Evaluated::StarOne(q) => Ok(q),
        Evaluated::Univariate(_) => Err(Error::NotStarOne),
    }
}
