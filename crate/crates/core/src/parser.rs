//! Text grammar for forms: parsing and canonical printing.
//!
//! ```text
//! expr    := [sign] term (sign term)*
//! term    := factor ('*' factor)*
//! factor  := primary ['^' INT]
//! primary := INT ['/' INT] | 'x' INT
//! ```
//!
//! Precedence is `^` over `*` over unary minus over binary `+`/`-`; rationals
//! are written `p/q`; exponents are nonnegative integers; whitespace is
//! insignificant; implicit multiplication is a syntax error. Every term must
//! be homogeneous of the expected degree (terms with coefficient zero are
//! exempt, so `"0"` denotes the zero form of any shape).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::forms::{Form, MultiIndex};
use crate::rational::Rational;

/// Parses `text` as a homogeneous form of the given shape.
pub fn parse_form(text: &str, nvars: u8, degree: usize) -> Result<Form> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
        nvars,
        degree,
    }
    .parse()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: u8,
    degree: usize,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<Form> {
        let mut form = Form::zero_form(self.nvars, self.degree);
        self.skip_ws();
        if self.peek().is_none() {
            return Err(Error::syntax(self.pos, "empty input"));
        }
        let mut negative = match self.peek() {
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
        loop {
            self.term(&mut form, negative)?;
            self.skip_ws();
            match self.peek() {
                None => return Ok(form),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(c) => {
                    return Err(Error::syntax(
                        self.pos,
                        format!("expected '+', '-' or end of input, found {:?}", c as char),
                    ))
                }
            }
            self.pos += 1;
        }
    }

    /// One product of factors, added into `form` with the given sign.
    fn term(&mut self, form: &mut Form, negative: bool) -> Result<()> {
        self.skip_ws();
        let term_start = self.pos;
        let mut coeff = if negative {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut exponents = vec![0u32; self.nvars as usize];
        loop {
            self.factor(&mut coeff, &mut exponents)?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        // Implicit multiplication (or any stray character) is a syntax error,
        // diagnosed before the degree check so the position is precise.
        if let Some(c) = self.peek() {
            if c != b'+' && c != b'-' {
                return Err(Error::syntax(
                    self.pos,
                    format!("expected '*', '+', '-' or end of input, found {:?}", c as char),
                ));
            }
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let found: u32 = exponents.iter().sum();
        if found as usize != self.degree {
            return Err(Error::DegreeMismatch {
                pos: term_start,
                found: found as usize,
                expected: self.degree,
            });
        }
        let mi = MultiIndex::from_exponents(&exponents);
        form.add_monomial(mi, &coeff)
    }

    /// `primary ['^' INT]`, multiplied into the running coefficient/exponents.
    fn factor(&mut self, coeff: &mut Rational, exponents: &mut [u32]) -> Result<()> {
        self.skip_ws();
        enum Base {
            Const(Rational),
            Var(usize),
        }
        let base = match self.peek() {
            Some(b'x') => {
                let var_pos = self.pos;
                self.pos += 1;
                let (idx, _) = self.integer("variable index")?;
                if idx >= u64::from(self.nvars) {
                    return Err(Error::VarOutOfRange {
                        pos: var_pos,
                        var: idx as u32,
                        nvars: self.nvars,
                    });
                }
                Base::Var(idx as usize)
            }
            Some(c) if c.is_ascii_digit() => {
                let (num, _) = self.integer("integer")?;
                let mut value = Rational::from_integer(BigInt::from(num));
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let (den, den_pos) = self.integer("denominator")?;
                    if den == 0 {
                        return Err(Error::syntax(den_pos, "zero denominator"));
                    }
                    value = Rational::new(BigInt::from(num), BigInt::from(den));
                }
                Base::Const(value)
            }
            Some(c) => {
                return Err(Error::syntax(
                    self.pos,
                    format!("expected a number or variable, found {:?}", c as char),
                ))
            }
            None => return Err(Error::syntax(self.pos, "unexpected end of input")),
        };
        self.skip_ws();
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let (e, e_pos) = self.integer("exponent")?;
            u32::try_from(e).map_err(|_| Error::syntax(e_pos, "exponent too large"))?
        } else {
            1
        };
        match base {
            Base::Var(i) => exponents[i] += exp,
            Base::Const(q) => {
                let mut power = Rational::one();
                for _ in 0..exp {
                    power *= &q;
                }
                *coeff *= power;
            }
        }
        Ok(())
    }

    /// An unsigned decimal integer; returns (value, start position).
    fn integer(&mut self, what: &str) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        let mut any = false;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            any = true;
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(c - b'0')))
                .ok_or_else(|| Error::syntax(start, format!("{what} too large")))?;
            self.pos += 1;
        }
        if !any {
            return Err(Error::syntax(start, format!("expected {what}")));
        }
        Ok((value, start))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }
}

/// Canonical text of a form: terms in lexicographic multi-index order,
/// monomial coefficients (not tensor coordinates), no whitespace.
/// `parse_form(print_form(f)) == f` for every form.
pub fn print_form(f: &Form) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (mi, v)) in f.iter().enumerate() {
        let c = v * Rational::from_integer(mi.multinomial());
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mag = c.abs();
        let mut parts: Vec<String> = Vec::new();
        if !mag.is_one() || mi.degree() == 0 {
            parts.push(mag.to_string());
        }
        let ids = mi.as_slice();
        let mut i = 0;
        while i < ids.len() {
            let v_idx = ids[i];
            let mut e = 0;
            while i < ids.len() && ids[i] == v_idx {
                e += 1;
                i += 1;
            }
            if e == 1 {
                parts.push(format!("x{v_idx}"));
            } else {
                parts.push(format!("x{v_idx}^{e}"));
            }
        }
        out.push_str(&parts.join("*"));
    }
    out
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_form(self))
    }
}
