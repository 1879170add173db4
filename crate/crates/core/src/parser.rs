//! Text syntax for polynomials: a recursive-descent parser for the
//! expression grammar and the canonical pretty-printer that inverts it.
//!
//! Grammar (no implicit multiplication):
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := uint | uint '/' uint | 'sqrt' '(' int ')'
//!         | 'i' | 't' | 'g' | 'x' | 'y' | '(' expr ')' | '-' base
//! ```
//!
//! Note that `'-' base` makes the minus sign part of the base, so
//! `-x^2` parses as `(-x)^2`; the printer therefore spells the
//! polynomial −x² as `-1*x^2`.

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::context::FieldContext;
use crate::element::{Element, Repr};
use crate::error::{Error, Result};
use crate::poly::Poly1;
use crate::poly2::{add2, mul2, neg2, Poly2};

const MAX_EXPONENT: u32 = 65_535;
const MAX_DEPTH: usize = 256;

/// Parsed expression, before evaluation against a context.
#[derive(Debug, Clone, PartialEq)]
pub enum ExprTree {
    Integer {
        value: BigUint,
        position: usize,
    },
    Fraction {
        numer: BigUint,
        denom: BigUint,
        position: usize,
    },
    Sqrt {
        radicand: i64,
        position: usize,
    },
    Symbol {
        name: char,
        position: usize,
    },
    Neg(Box<ExprTree>),
    Sum(Box<ExprTree>, Box<ExprTree>),
    Product(Box<ExprTree>, Box<ExprTree>),
    Power {
        base: Box<ExprTree>,
        exponent: u32,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    UInt(BigUint),
    Sqrt,
    Sym(char),
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::SyntaxError {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<(Vec<(usize, Tok)>, usize)> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let mut digits = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(chars[i]);
                    i += 1;
                }
                toks.push((start, Tok::UInt(digits.parse().expect("digits"))));
                continue;
            }
            'a'..='z' => {
                let mut word = String::new();
                while i < chars.len() && chars[i].is_ascii_lowercase() {
                    word.push(chars[i]);
                    i += 1;
                }
                let tok = match word.as_str() {
                    "sqrt" => Tok::Sqrt,
                    "i" | "t" | "g" | "x" | "y" => Tok::Sym(word.chars().next().unwrap()),
                    _ => return Err(syntax(start, format!("unknown word `{word}`"))),
                };
                toks.push((start, tok));
                continue;
            }
            other => return Err(syntax(start, format!("unexpected character `{other}`"))),
        };
        toks.push((start, tok));
        i += 1;
    }
    Ok((toks, chars.len()))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    next: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.next).map(|(_, t)| t)
    }

    fn peek_pos(&self) -> usize {
        self.toks.get(self.next).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.next).cloned();
        if t.is_some() {
            self.next += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<usize> {
        match self.bump() {
            Some((p, t)) if t == *want => Ok(p),
            Some((p, _)) => Err(syntax(p, format!("expected {what}"))),
            None => Err(syntax(
                self.end,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn expect_uint(&mut self, what: &str) -> Result<(usize, BigUint)> {
        match self.bump() {
            Some((p, Tok::UInt(v))) => Ok((p, v)),
            Some((p, _)) => Err(syntax(p, format!("expected {what}"))),
            None => Err(syntax(
                self.end,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn expr(&mut self, depth: usize) -> Result<ExprTree> {
        let mut acc = self.term(depth)?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term(depth)?;
                    acc = ExprTree::Sum(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term(depth)?;
                    acc = ExprTree::Sum(Box::new(acc), Box::new(ExprTree::Neg(Box::new(rhs))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<ExprTree> {
        let mut acc = self.factor(depth)?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let rhs = self.factor(depth)?;
            acc = ExprTree::Product(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self, depth: usize) -> Result<ExprTree> {
        let base = self.base(depth)?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let (pos, v) = self.expect_uint("an integer exponent after `^`")?;
            let exponent = u32::try_from(&v)
                .ok()
                .filter(|e| *e <= MAX_EXPONENT)
                .ok_or_else(|| syntax(pos, format!("exponent exceeds {MAX_EXPONENT}")))?;
            return Ok(ExprTree::Power {
                base: Box::new(base),
                exponent,
            });
        }
        Ok(base)
    }

    fn base(&mut self, depth: usize) -> Result<ExprTree> {
        if depth >= MAX_DEPTH {
            return Err(syntax(self.peek_pos(), "expression nests too deeply"));
        }
        match self.bump() {
            Some((position, Tok::UInt(value))) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let (_, denom) = self.expect_uint("a denominator after `/`")?;
                    return Ok(ExprTree::Fraction {
                        numer: value,
                        denom,
                        position,
                    });
                }
                Ok(ExprTree::Integer { value, position })
            }
            Some((position, Tok::Sqrt)) => {
                self.expect(&Tok::LParen, "`(` after sqrt")?;
                let negative = if self.peek() == Some(&Tok::Minus) {
                    self.bump();
                    true
                } else {
                    false
                };
                let (vpos, v) = self.expect_uint("an integer radicand")?;
                self.expect(&Tok::RParen, "`)` after the radicand")?;
                let magnitude =
                    i64::try_from(&v).map_err(|_| syntax(vpos, "radicand out of range"))?;
                if magnitude == 0 {
                    return Err(syntax(vpos, "sqrt argument must be a nonzero integer"));
                }
                let radicand = if negative { -magnitude } else { magnitude };
                Ok(ExprTree::Sqrt { radicand, position })
            }
            Some((position, Tok::Sym(name))) => Ok(ExprTree::Symbol { name, position }),
            Some((_, Tok::LParen)) => {
                let inner = self.expr(depth + 1)?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some((_, Tok::Minus)) => {
                let inner = self.base(depth + 1)?;
                Ok(ExprTree::Neg(Box::new(inner)))
            }
            Some((p, _)) => Err(syntax(p, "expected a number, symbol, `(`, or `-`")),
            None => Err(syntax(self.end, "unexpected end of input")),
        }
    }
}

/// Parses source text to a tree without evaluating it.
pub fn parse_expr_tree(text: &str) -> Result<ExprTree> {
    let (toks, end) = tokenize(text)?;
    let mut parser = Parser { toks, next: 0, end };
    let tree = parser.expr(0)?;
    if let Some((p, _)) = parser.toks.get(parser.next) {
        return Err(syntax(*p, "unexpected trailing input"));
    }
    Ok(tree)
}

fn remap_unknown(err: Error, symbol: &str, position: usize) -> Error {
    match err {
        Error::UnknownSymbol { .. } => Error::UnknownSymbol {
            symbol: symbol.to_string(),
            position,
        },
        other => other,
    }
}

fn eval(ctx: &FieldContext, node: &ExprTree, allow_x: bool, allow_y: bool) -> Result<Poly2> {
    match node {
        ExprTree::Integer { value, .. } => Poly2::constant(ctx, ctx.from_biguint(value)),
        ExprTree::Fraction { numer, denom, .. } => {
            if denom.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let r = BigRational::new(BigInt::from(numer.clone()), BigInt::from(denom.clone()));
            Poly2::constant(ctx, ctx.from_rational(&r)?)
        }
        ExprTree::Sqrt { radicand, position } => {
            let atom = ctx
                .sqrt_atom(*radicand)
                .map_err(|e| remap_unknown(e, &format!("sqrt({radicand})"), *position))?;
            Poly2::constant(ctx, atom)
        }
        ExprTree::Symbol {
            name: 'x',
            position,
        } => {
            if allow_x {
                Ok(Poly2::var_x(ctx))
            } else {
                Err(Error::ArityViolation {
                    symbol: "x".to_string(),
                    position: *position,
                })
            }
        }
        ExprTree::Symbol {
            name: 'y',
            position,
        } => {
            if allow_y {
                Ok(Poly2::var_y(ctx))
            } else {
                Err(Error::ArityViolation {
                    symbol: "y".to_string(),
                    position: *position,
                })
            }
        }
        ExprTree::Symbol {
            name: 'i',
            position,
        } => {
            let atom = ctx
                .sqrt_atom(-1)
                .map_err(|e| remap_unknown(e, "i", *position))?;
            Poly2::constant(ctx, atom)
        }
        ExprTree::Symbol {
            name: 't',
            position,
        } => {
            let atom = ctx.t_atom().map_err(|e| remap_unknown(e, "t", *position))?;
            Poly2::constant(ctx, atom)
        }
        ExprTree::Symbol {
            name: 'g',
            position,
        } => {
            let atom = ctx
                .generator()
                .map_err(|e| remap_unknown(e, "g", *position))?;
            Poly2::constant(ctx, atom)
        }
        ExprTree::Symbol { name, position } => Err(Error::UnknownSymbol {
            symbol: name.to_string(),
            position: *position,
        }),
        ExprTree::Neg(inner) => {
            let v = eval(ctx, inner, allow_x, allow_y)?;
            neg2(ctx, &v)
        }
        ExprTree::Sum(a, b) => {
            let va = eval(ctx, a, allow_x, allow_y)?;
            let vb = eval(ctx, b, allow_x, allow_y)?;
            add2(ctx, &va, &vb)
        }
        ExprTree::Product(a, b) => {
            let va = eval(ctx, a, allow_x, allow_y)?;
            let vb = eval(ctx, b, allow_x, allow_y)?;
            mul2(ctx, &va, &vb)
        }
        ExprTree::Power { base, exponent } => {
            let v = eval(ctx, base, allow_x, allow_y)?;
            let mut result = Poly2::constant(ctx, ctx.one())?;
            let mut square = v;
            let mut e = *exponent;
            while e > 0 {
                if e & 1 == 1 {
                    result = mul2(ctx, &result, &square)?;
                }
                e >>= 1;
                if e > 0 {
                    square = mul2(ctx, &square, &square)?;
                }
            }
            Ok(result)
        }
    }
}

/// Parses a univariate polynomial in x over `ctx`.
pub fn parse_poly1(ctx: &FieldContext, text: &str) -> Result<Poly1> {
    let tree = parse_expr_tree(text)?;
    let wide = eval(ctx, &tree, true, false)?;
    let mut coeffs = vec![ctx.zero(); wide.parts().len()];
    for (xe, _, c) in wide.monomials() {
        coeffs[xe] = c.clone();
    }
    Poly1::new(ctx, coeffs)
}

/// Parses a bivariate polynomial in x and y over `ctx`.
pub fn parse_poly2(ctx: &FieldContext, text: &str) -> Result<Poly2> {
    let tree = parse_expr_tree(text)?;
    eval(ctx, &tree, true, true)
}

// ---------------------------------------------------------------------
// Pretty-printing.

/// One additive piece of an element: a rational multiple of a product of
/// symbolic factors (radicals, or a power of t or g).
struct ElementAtom {
    value: BigRational,
    factors: Vec<String>,
}

fn power_factor(sym: char, exp: usize) -> String {
    if exp == 1 {
        sym.to_string()
    } else {
        format!("{sym}^{exp}")
    }
}

fn element_atoms(ctx: &FieldContext, e: &Element) -> Vec<ElementAtom> {
    match e.repr() {
        Repr::Rat(r) => {
            if r.is_zero() {
                Vec::new()
            } else {
                vec![ElementAtom {
                    value: r.clone(),
                    factors: Vec::new(),
                }]
            }
        }
        Repr::Tower(coords) => {
            let radicals = ctx.host_radicals();
            let mut out = Vec::new();
            for (mask, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut factors = Vec::new();
                for (j, d) in radicals.iter().enumerate() {
                    if mask & (1 << j) != 0 {
                        factors.push(if *d == -1 {
                            "i".to_string()
                        } else {
                            format!("sqrt({d})")
                        });
                    }
                }
                out.push(ElementAtom {
                    value: c.clone(),
                    factors,
                });
            }
            out
        }
        Repr::PolyT(coeffs) => coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| ElementAtom {
                value: c.clone(),
                factors: if j == 0 {
                    Vec::new()
                } else {
                    vec![power_factor('t', j)]
                },
            })
            .collect(),
        Repr::Residue(digits) => digits
            .iter()
            .enumerate()
            .filter(|(_, d)| **d != 0)
            .map(|(j, d)| ElementAtom {
                value: BigRational::from(BigInt::from(*d)),
                factors: if j == 0 {
                    Vec::new()
                } else {
                    vec![power_factor('g', j)]
                },
            })
            .collect(),
    }
}

fn rational_magnitude(r: &BigRational) -> String {
    let abs = r.abs();
    if abs.denom().is_one() {
        abs.numer().to_string()
    } else {
        format!("{}/{}", abs.numer(), abs.denom())
    }
}

/// Factor list for |value|·factors·vars, omitting a unit rational when
/// any other factor is present.
fn magnitude_factors(value: &BigRational, factors: &[String], vars: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    if !value.abs().is_one() || (factors.is_empty() && vars.is_empty()) {
        out.push(rational_magnitude(value));
    }
    out.extend_from_slice(factors);
    out.extend_from_slice(vars);
    out
}

/// Renders a signed product at the head of an expression. A leading
/// minus would bind to the first factor's base, so when that factor
/// carries `^` the sign is attached to an explicit `1` instead.
fn render_leading(negative: bool, factors: &[String]) -> String {
    let joined = factors.join("*");
    if !negative {
        joined
    } else if factors.first().is_some_and(|f| f.contains('^')) {
        format!("-1*{joined}")
    } else {
        format!("-{joined}")
    }
}

/// Renders `atoms` as a sum, suitable standalone or inside parentheses.
fn render_atom_sum(atoms: &[ElementAtom]) -> String {
    let mut out = String::new();
    for (idx, atom) in atoms.iter().enumerate() {
        let negative = atom.value.is_negative();
        let factors = magnitude_factors(&atom.value, &atom.factors, &[]);
        if idx == 0 {
            out.push_str(&render_leading(negative, &factors));
        } else {
            out.push_str(if negative { " - " } else { " + " });
            out.push_str(&factors.join("*"));
        }
    }
    out
}

/// Canonical text for a single element ("0" for zero).
pub fn format_element(ctx: &FieldContext, e: &Element) -> Result<String> {
    if e.ctx_id() != ctx.id() {
        return Err(Error::ContextMismatch);
    }
    let atoms = element_atoms(ctx, e);
    if atoms.is_empty() {
        return Ok("0".to_string());
    }
    Ok(render_atom_sum(&atoms))
}

/// A rendered polynomial term: sign, factors, or a parenthesized
/// compound coefficient followed by the variable part.
fn push_term(out: &mut String, ctx: &FieldContext, coeff: &Element, vars: &[String]) {
    let atoms = element_atoms(ctx, coeff);
    let leading = out.is_empty();
    if atoms.len() > 1 {
        let mut factors = vec![format!("({})", render_atom_sum(&atoms))];
        factors.extend_from_slice(vars);
        if !leading {
            out.push_str(" + ");
        }
        out.push_str(&factors.join("*"));
        return;
    }
    let atom = &atoms[0];
    let negative = atom.value.is_negative();
    let factors = magnitude_factors(&atom.value, &atom.factors, vars);
    if leading {
        out.push_str(&render_leading(negative, &factors));
    } else {
        out.push_str(if negative { " - " } else { " + " });
        out.push_str(&factors.join("*"));
    }
}

/// Canonical descending-degree text for a univariate polynomial.
pub fn format_poly1(ctx: &FieldContext, p: &Poly1) -> Result<String> {
    if p.ctx_id() != ctx.id() {
        return Err(Error::ContextMismatch);
    }
    if p.is_zero() {
        return Ok("0".to_string());
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let vars: Vec<String> = if k == 0 {
            Vec::new()
        } else {
            vec![power_factor('x', k)]
        };
        push_term(&mut out, ctx, c, &vars);
    }
    Ok(out)
}

/// Canonical text for a bivariate polynomial: descending total degree,
/// descending exponent of x within a degree.
pub fn format_poly2(ctx: &FieldContext, p: &Poly2) -> Result<String> {
    if p.ctx_id() != ctx.id() {
        return Err(Error::ContextMismatch);
    }
    if p.is_zero() {
        return Ok("0".to_string());
    }
    let mut out = String::new();
    for k in (0..p.parts().len()).rev() {
        for (xe, c) in p.parts()[k].iter().rev() {
            let ye = k - xe;
            let mut vars = Vec::new();
            if *xe > 0 {
                vars.push(power_factor('x', *xe));
            }
            if ye > 0 {
                vars.push(power_factor('y', ye));
            }
            push_term(&mut out, ctx, c, &vars);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{deficit1, iterate};

    fn ctx(spec: &str) -> FieldContext {
        FieldContext::parse_spec(spec).unwrap()
    }

    #[test]
    fn grammar_examples_parse_to_known_polynomials() {
        let k = ctx("Q(sqrt 2)");
        let p = parse_poly1(&k, "x^3 + 2*x^2 - sqrt(2)*x + 1").unwrap();
        let r2 = k.sqrt_atom(2).unwrap();
        let expected = Poly1::new(
            &k,
            vec![k.one(), k.neg(&r2).unwrap(), k.from_i64(2), k.one()],
        )
        .unwrap();
        assert_eq!(p, expected);

        let q = parse_poly2(&k, "x^2 - y^2 + 1").unwrap();
        let expected2 = Poly2::new(
            &k,
            vec![(2, 0, k.one()), (0, 2, k.from_i64(-1)), (0, 0, k.one())],
        )
        .unwrap();
        assert_eq!(q, expected2);

        match parse_poly1(&k, "x*y").unwrap_err() {
            Error::ArityViolation { symbol, position } => {
                assert_eq!(symbol, "y");
                assert_eq!(position, 2);
            }
            other => panic!("expected arity violation, got {other:?}"),
        }
    }

    #[test]
    fn multiplication_must_be_explicit() {
        let k = ctx("Q");
        match parse_poly1(&k, "2x").unwrap_err() {
            Error::SyntaxError { position, .. } => assert_eq!(position, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_poly1(&k, "2*x").is_ok());
    }

    #[test]
    fn syntax_errors_carry_character_offsets() {
        let k = ctx("Q");
        let cases: Vec<(&str, usize)> = vec![
            ("x + $", 4),
            ("x^", 2),
            ("sqrt(0)", 5),
            ("sqrt(x)", 5),
            ("x^2^3", 3),
            ("(x + 1", 6),
            ("", 0),
            ("sin(x)", 0),
            ("x^999999999", 2),
        ];
        for (text, want) in cases {
            match parse_poly1(&k, text).unwrap_err() {
                Error::SyntaxError { position, .. } => {
                    assert_eq!(position, want, "wrong offset for {text:?}");
                }
                other => panic!("expected syntax error for {text:?}, got {other:?}"),
            }
        }
        assert_eq!(
            parse_poly1(&k, "1/0").unwrap_err().code(),
            "DIVISION_BY_ZERO"
        );
    }

    #[test]
    fn unknown_symbols_carry_their_positions() {
        let q = ctx("Q");
        match parse_poly1(&q, "sqrt(2)*x").unwrap_err() {
            Error::UnknownSymbol { symbol, position } => {
                assert_eq!(symbol, "sqrt(2)");
                assert_eq!(position, 0);
            }
            other => panic!("expected unknown symbol, got {other:?}"),
        }
        let k = ctx("Q(sqrt 2)");
        match parse_poly1(&k, "x + i").unwrap_err() {
            Error::UnknownSymbol { symbol, position } => {
                assert_eq!(symbol, "i");
                assert_eq!(position, 4);
            }
            other => panic!("expected unknown symbol, got {other:?}"),
        }
        assert_eq!(parse_poly1(&q, "t").unwrap_err().code(), "UNKNOWN_SYMBOL");
        assert_eq!(parse_poly1(&q, "g").unwrap_err().code(), "UNKNOWN_SYMBOL");
        let gf4 = ctx("GF(2^2)");
        assert!(parse_poly1(&gf4, "g*x + 1").is_ok());
        let gf5 = ctx("GF(5^1)");
        assert_eq!(parse_poly1(&gf5, "g").unwrap_err().code(), "UNKNOWN_SYMBOL");
    }

    #[test]
    fn minus_binds_to_the_base_inside_powers() {
        let k = ctx("Q");
        // -x^2 is (-x)^2 = x^2 under the grammar.
        let p = parse_poly1(&k, "-x^2").unwrap();
        assert_eq!(p, Poly1::monomial(&k, k.one(), 2).unwrap());
        // -1*x^2 and -(x^2) both mean −x².
        let neg = Poly1::monomial(&k, k.from_i64(-1), 2).unwrap();
        assert_eq!(parse_poly1(&k, "-1*x^2").unwrap(), neg);
        assert_eq!(parse_poly1(&k, "-(x^2)").unwrap(), neg);
    }

    #[test]
    fn canonical_form_matches_fixture_strings() {
        let k = ctx("Q(sqrt 2)");
        let text = "x^3 + 2*x^2 - sqrt(2)*x + 1";
        let p = parse_poly1(&k, text).unwrap();
        assert_eq!(format_poly1(&k, &p).unwrap(), text);

        // Second iterate of x² + √2: compound constant term in parens.
        let sq = parse_poly1(&k, "x^2 + sqrt(2)").unwrap();
        let it = iterate(&k, &sq, 2).unwrap();
        assert_eq!(
            format_poly1(&k, &it).unwrap(),
            "x^4 + 2*sqrt(2)*x^2 + (2 + sqrt(2))"
        );

        assert_eq!(format_poly1(&k, &Poly1::zero(&k)).unwrap(), "0");

        let k3 = ctx("Q(sqrt 3)");
        let deep = parse_poly1(&k3, "x^5 - 5*x^3 + sqrt(3)*x^2 - x + 1").unwrap();
        assert_eq!(deficit1(&k3, &deep).unwrap().deficit, 3);
        assert_eq!(
            format_poly1(&k3, &deep).unwrap(),
            "x^5 - 5*x^3 + sqrt(3)*x^2 - x + 1"
        );
    }

    #[test]
    fn leading_negative_powers_print_with_explicit_unit() {
        let k = ctx("Q");
        let p = Poly1::new(&k, vec![k.one(), k.zero(), k.from_i64(-1)]).unwrap(); // −x² + 1
        let text = format_poly1(&k, &p).unwrap();
        assert_eq!(text, "-1*x^2 + 1");
        assert_eq!(parse_poly1(&k, &text).unwrap(), p);

        // Without a caret the sign may attach directly.
        let lin = Poly1::new(&k, vec![k.zero(), k.from_i64(-1)]).unwrap();
        assert_eq!(format_poly1(&k, &lin).unwrap(), "-x");
        let scaled = Poly1::new(&k, vec![k.zero(), k.zero(), k.from_i64(-2)]).unwrap();
        assert_eq!(format_poly1(&k, &scaled).unwrap(), "-2*x^2");

        // The same trap exists for t powers inside coefficients.
        let kt = ctx("Q[t]");
        let t = kt.t_atom().unwrap();
        let mt2 = kt.neg(&kt.mul(&t, &t).unwrap()).unwrap();
        let constant = Poly1::constant(&kt, mt2).unwrap();
        let text = format_poly1(&kt, &constant).unwrap();
        assert_eq!(text, "-1*t^2");
        assert_eq!(parse_poly1(&kt, &text).unwrap(), constant);
    }

    #[test]
    fn bivariate_ordering_is_total_degree_then_x() {
        let k = ctx("Q");
        let p = parse_poly2(&k, "1 + y^2 + x*y + x + x^2").unwrap();
        assert_eq!(format_poly2(&k, &p).unwrap(), "x^2 + x*y + y^2 + x + 1");
        let q = parse_poly2(&k, "x^2 - y^2 + 1").unwrap();
        assert_eq!(format_poly2(&k, &q).unwrap(), "x^2 - y^2 + 1");
        assert_eq!(format_poly2(&k, &Poly2::zero(&k)).unwrap(), "0");
    }

    #[test]
    fn round_trips_cover_every_context_kind() {
        let samples: Vec<(&str, Vec<&str>)> = vec![
            ("Q", vec!["x^2 - 3/4*x + 2", "0", "7", "-x"]),
            (
                "Q(sqrt 2, sqrt 3)",
                vec![
                    "sqrt(2)*sqrt(3)*x^2 + (1 + sqrt(2))*x - sqrt(3)",
                    "(2 + sqrt(2))",
                    "-1*x^2 + sqrt(2)",
                ],
            ),
            ("Q(sqrt -1)", vec!["i*x^2 - i*x + (1 + i)", "-i"]),
            ("Q[t]", vec!["t^2*x^2 + t*x + 1", "-1*t^2 + t", "(1 + t)*x"]),
            ("GF(2^2)", vec!["g*x^2 + x + g", "x^4 + g*x"]),
            ("GF(3^2)", vec!["2*g*x + 1", "g*x^3 + 2*x"]),
            ("Z<Q", vec!["1/2*x^2 + 3*x - 5/7"]),
            ("set:complementQ", vec!["t*x^2 + x + t"]),
            ("set:realsUnionImag", vec!["2*i*x^2 + 5*x + i"]),
        ];
        for (spec, texts) in samples {
            let k = ctx(spec);
            for text in texts {
                let p = parse_poly1(&k, text).unwrap();
                let printed = format_poly1(&k, &p).unwrap();
                let back = parse_poly1(&k, &printed).unwrap();
                assert_eq!(back, p, "round trip failed in {spec} for {text:?}");
            }
        }
    }

    #[test]
    fn whitespace_is_insignificant_between_tokens() {
        let k = ctx("Q(sqrt 2)");
        let a = parse_poly1(&k, "  x ^ 2+ sqrt( 2 ) *x ").unwrap();
        let b = parse_poly1(&k, "x^2+sqrt(2)*x").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fractions_scale_variables() {
        let k = ctx("Q");
        let p = parse_poly1(&k, "3/4*x").unwrap();
        assert_eq!(format_poly1(&k, &p).unwrap(), "3/4*x");
        // 1/2 in GF(5) is 3; formatting normalizes to the residue.
        let gf5 = ctx("GF(5^1)");
        let h = parse_poly1(&gf5, "1/2*x").unwrap();
        assert_eq!(format_poly1(&gf5, &h).unwrap(), "3*x");
        assert_eq!(
            parse_poly1(&gf5, "1/5*x").unwrap_err().code(),
            "DIVISION_BY_ZERO"
        );
    }

    #[test]
    fn deep_nesting_is_cut_off_cleanly() {
        let k = ctx("Q");
        let mut text = String::new();
        for _ in 0..10_000 {
            text.push('(');
        }
        text.push('x');
        for _ in 0..10_000 {
            text.push(')');
        }
        assert_eq!(parse_poly1(&k, &text).unwrap_err().code(), "SYNTAX_ERROR");
        // Modest nesting is fine.
        let ok = format!("{}x{}", "(".repeat(40), ")".repeat(40));
        assert!(parse_poly1(&k, &ok).is_ok());
    }
}
