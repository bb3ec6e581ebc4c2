//! Text form of graded polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := int | [int '*'] factor ('*' factor)*
//! factor := var ['^' nat]
//! var    := 'x[' grade ',' nat ']'
//! grade  := int | '(' nat ',' nat ')' | name
//! ```
//!
//! Integer grades are reduced mod n under `Z_n`; pair grades and `0` are the
//! `MU_n` forms; names select elements of a Cayley-table group.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::monomial::{GradedMonomial, GradedVariable};
use super::polynomial::GradedPolynomial;
use crate::error::{Error, ParseError};
use crate::grading::{Grade, GradingStructure};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    structure: &'a GradingStructure,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError::new(self.pos, msg))
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn digits(&mut self) -> PResult<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn nat(&mut self) -> PResult<u64> {
        let start = self.pos;
        let s = self.digits()?;
        s.parse()
            .map_err(|_| ParseError::new(start, format!("number {s} is too large")))
    }

    fn int(&mut self) -> PResult<BigInt> {
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let v: BigInt = self.digits()?.parse().expect("digits form an integer");
        Ok(if negative { -v } else { v })
    }

    fn grade(&mut self) -> PResult<Grade> {
        let start = self.pos;
        let lift = |e: Error| ParseError::new(start, e.to_string());
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let i = self.nat()?;
                self.expect(',')?;
                let j = self.nat()?;
                self.expect(')')?;
                self.structure
                    .grade_from_pair(i as usize, j as usize)
                    .map_err(lift)
            }
            Some(c) if c == '-' || c.is_ascii_digit() => {
                let v = self.int()?;
                self.structure.grade_from_int(&v).map_err(lift)
            }
            Some(c) if c.is_alphanumeric() || c == '_' => {
                let begin = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[begin..self.pos].iter().collect();
                self.structure.grade_from_name(&name).map_err(lift)
            }
            _ => self.err("expected a grade"),
        }
    }

    fn var(&mut self) -> PResult<GradedVariable> {
        self.expect('x')?;
        self.expect('[')?;
        let grade = self.grade()?;
        self.expect(',')?;
        let at = self.pos;
        let index = self.nat()?;
        if index == 0 {
            return Err(ParseError::new(at, "variable index must be positive"));
        }
        self.expect(']')?;
        Ok(GradedVariable::new(grade, index))
    }

    fn factor(&mut self, out: &mut Vec<GradedVariable>) -> PResult<()> {
        let v = self.var()?;
        let power = if self.peek() == Some('^') {
            self.pos += 1;
            self.nat()?
        } else {
            1
        };
        out.extend(std::iter::repeat_n(v, power as usize));
        Ok(())
    }

    fn term(&mut self) -> PResult<(BigInt, GradedMonomial)> {
        let mut coeff = BigInt::one();
        let mut vars = Vec::new();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.int()?;
            if self.peek() != Some('*') {
                return Ok((coeff, GradedMonomial::unit()));
            }
            self.pos += 1;
        }
        self.factor(&mut vars)?;
        while self.peek() == Some('*') {
            self.pos += 1;
            self.factor(&mut vars)?;
        }
        Ok((coeff, vars.into()))
    }

    fn poly(&mut self) -> PResult<GradedPolynomial> {
        let mut out = GradedPolynomial::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -BigInt::one()
            }
            Some('+') => {
                self.pos += 1;
                BigInt::one()
            }
            _ => BigInt::one(),
        };
        loop {
            let (c, m) = self.term()?;
            out.add_term(sign * c, m);
            sign = match self.peek() {
                Some('+') => BigInt::one(),
                Some('-') => -BigInt::one(),
                None => return Ok(out),
                Some(c) => return self.err(format!("unexpected '{c}'")),
            };
            self.pos += 1;
        }
    }
}

pub fn parse_polynomial(
    text: &str,
    structure: &GradingStructure,
) -> std::result::Result<GradedPolynomial, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        structure,
    };
    p.poly()
}

/// Parses text that must consist of a single monomial with coefficient 1.
pub fn parse_monomial(
    text: &str,
    structure: &GradingStructure,
) -> std::result::Result<GradedMonomial, ParseError> {
    let f = parse_polynomial(text, structure)?;
    let mut terms = f.terms();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if c.is_one() => Ok(m.clone()),
        _ => Err(ParseError::new(0, "expected a single monomial")),
    }
}

pub fn format_variable(v: &GradedVariable, structure: &GradingStructure) -> String {
    format!("x[{},{}]", structure.format_grade(&v.grade), v.index)
}

/// Canonical text; equal runs of a variable are written as powers.
pub fn format_monomial(m: &GradedMonomial, structure: &GradingStructure) -> String {
    if m.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let vars = m.vars();
    let mut k = 0;
    while k < vars.len() {
        let mut run = 1;
        while k + run < vars.len() && vars[k + run] == vars[k] {
            run += 1;
        }
        let v = format_variable(&vars[k], structure);
        parts.push(if run > 1 { format!("{v}^{run}") } else { v });
        k += run;
    }
    parts.join("*")
}

pub fn format_polynomial(f: &GradedPolynomial, structure: &GradingStructure) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.terms().enumerate() {
        match (k, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if m.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&format_monomial(m, structure));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator() {
        let s = GradingStructure::cyclic(2).unwrap();
        let f = parse_polynomial("x[1,1]*x[1,2] - x[1,2]*x[1,1]", &s).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(format_polynomial(&f, &s), "x[1,1]*x[1,2] - x[1,2]*x[1,1]");
    }

    #[test]
    fn powers_and_coefficients() {
        let s = GradingStructure::cyclic(2).unwrap();
        let f = parse_polynomial("3*x[0,1]^2", &s).unwrap();
        let (m, c) = f.terms().next().unwrap();
        assert_eq!(c, &BigInt::from(3));
        assert_eq!(m.len(), 2);
        assert_eq!(m.vars()[0], m.vars()[1]);
        assert_eq!(format_polynomial(&f, &s), "3*x[0,1]^2");
    }

    #[test]
    fn matrix_unit_grades() {
        let s = GradingStructure::matrix_units(2).unwrap();
        let f = parse_polynomial("x[(1,2),1]", &s).unwrap();
        assert_eq!(
            f.variables(),
            vec![GradedVariable::new(Grade::Unit(1, 2), 1)]
        );
        let z = parse_polynomial("x[0,1]", &s).unwrap();
        assert_eq!(z.variables()[0].grade, Grade::Zero);
        assert!(parse_polynomial("x[(3,1),1]", &s).is_err());
        assert!(parse_polynomial("x[2,1]", &s).is_err());
    }

    #[test]
    fn integer_grades_reduce_mod_n() {
        let s = GradingStructure::cyclic(3).unwrap();
        let f = parse_polynomial("x[-1,1] + x[5,2]", &s).unwrap();
        let grades: Vec<_> = f.variables().into_iter().map(|v| v.grade).collect();
        assert_eq!(grades, vec![Grade::Elem(2), Grade::Elem(2)]);
        let z = GradingStructure::integers();
        let f = parse_polynomial("-x[-2,1]", &z).unwrap();
        assert_eq!(format_polynomial(&f, &z), "-x[-2,1]");
    }

    #[test]
    fn constants_and_zero() {
        let s = GradingStructure::cyclic(2).unwrap();
        assert!(parse_polynomial("0", &s).unwrap().is_zero());
        let f = parse_polynomial("2 - x[1,1] + x[1,1]", &s).unwrap();
        assert_eq!(format_polynomial(&f, &s), "2");
        assert_eq!(format_polynomial(&GradedPolynomial::zero(), &s), "0");
    }

    #[test]
    fn errors_carry_positions() {
        let s = GradingStructure::cyclic(2).unwrap();
        let e = parse_polynomial("x[1,1] * y", &s).unwrap_err();
        assert_eq!(e.position, 9);
        let e = parse_polynomial("x[1,0]", &s).unwrap_err();
        assert_eq!(e.position, 4);
        assert!(parse_polynomial("x[1,1] x[1,2]", &s).is_err());
        assert!(parse_polynomial("", &s).is_err());
    }
}
