//! Polynomial text grammar.
//!
//! ```text
//! expr   := [sign] term { sign term }
//! term   := factor { ['*' | '/'] factor }      (juxtaposition means '*')
//! factor := sign factor | atom [ '^' integer ]
//! atom   := integer | 'x' integer | '(' expr ')'
//! sign   := '+' | '-'
//! ```
//!
//! Division is only allowed by nonzero constants, so `3/2*x0` and `x0/2` are
//! both fine. Whitespace is ignored between tokens.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{check_weights, Monomial, Rational, WeightedPolynomial};
use crate::error::{Error, Result};

type Sparse = BTreeMap<Vec<u32>, Rational>;

const MAX_EXPONENT: u32 = 4096;

/// Parses `text` as a polynomial in `x0..x{n-1}` (with `n = weights.len()`)
/// and checks that it is homogeneous of weighted degree `degree`.
pub fn parse_poly(text: &str, weights: &[u32], degree: u64) -> Result<WeightedPolynomial> {
    check_weights(weights)?;
    let terms = parse_sparse(text, weights.len())?
        .into_iter()
        .map(|(e, c)| (Monomial::new(e), c));
    WeightedPolynomial::from_terms(weights, degree, terms)
}

/// Like [`parse_poly`], but with all weights 1 on `x0..x{max index}` when
/// `weights` is absent, and the degree of the leading term when `degree` is absent.
pub fn parse_poly_inferred(
    text: &str,
    weights: Option<&[u32]>,
    degree: Option<u64>,
) -> Result<WeightedPolynomial> {
    let weights = match weights {
        Some(w) => w.to_vec(),
        None => vec![1; max_variable_index(text).map_or(1, |j| j + 1)],
    };
    check_weights(&weights)?;
    let sparse = parse_sparse(text, weights.len())?;
    let degree = match degree {
        Some(d) => d,
        None => sparse
            .keys()
            .map(|e| Monomial::new(e.clone()))
            .max()
            .map_or(0, |m| m.weighted_degree(&weights)),
    };
    let terms = sparse.into_iter().map(|(e, c)| (Monomial::new(e), c));
    WeightedPolynomial::from_terms(&weights, degree, terms)
}

fn max_variable_index(text: &str) -> Option<usize> {
    let b = text.as_bytes();
    (0..b.len())
        .filter(|&i| b[i] == b'x')
        .filter_map(|i| {
            let digits: String = b[i + 1..]
                .iter()
                .take_while(|c| c.is_ascii_digit())
                .map(|&c| c as char)
                .collect();
            digits.parse::<usize>().ok()
        })
        .max()
}

fn parse_sparse(text: &str, n: usize) -> Result<Sparse> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::parse(p.pos, format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = Sparse::new();
        let mut sign = match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                1
            }
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            add_into(&mut acc, t, sign);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = mul(&acc, &f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.factor()?;
                    let c = constant_of(&f, self.n)
                        .ok_or_else(|| Error::parse(at, "division by a non-constant"))?;
                    if c.is_zero() {
                        return Err(Error::parse(at, "division by zero"));
                    }
                    let inv = c.recip();
                    acc.values_mut().for_each(|v| *v *= &inv);
                }
                Some(c) if c.is_ascii_digit() || c == b'x' || c == b'(' => {
                    let f = self.factor()?;
                    acc = mul(&acc, &f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Sparse> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let mut f = self.factor()?;
                f.values_mut().for_each(|v| *v = -v.clone());
                return Ok(f);
            }
            Some(b'+') => {
                self.pos += 1;
                return self.factor();
            }
            _ => {}
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| Error::parse(at, "exponent out of range"))?;
            let mut acc = one(self.n);
            for _ in 0..e {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Sparse> {
        let next = self.peek();
        let at = self.pos;
        match next {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let idx_at = self.pos;
                if !self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    return Err(Error::parse(idx_at, "expected variable index after 'x'"));
                }
                let raw = self.integer()?;
                let j = usize::try_from(&raw)
                    .ok()
                    .filter(|&j| j < self.n)
                    .ok_or_else(|| {
                        Error::parse(
                            at,
                            format!("variable x{raw} out of range (ring has x0..x{})", self.n.saturating_sub(1)),
                        )
                    })?;
                let mut e = vec![0; self.n];
                e[j] = 1;
                Ok(Sparse::from([(e, Rational::one())]))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let mut s = Sparse::new();
                if !v.is_zero() {
                    s.insert(vec![0; self.n], Rational::from_integer(v));
                }
                Ok(s)
            }
            Some(c) => Err(Error::parse(self.pos, format!("unexpected '{}'", c as char))),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as integer"))
    }
}

fn one(n: usize) -> Sparse {
    Sparse::from([(vec![0; n], Rational::one())])
}

fn constant_of(s: &Sparse, n: usize) -> Option<Rational> {
    match s.len() {
        0 => Some(Rational::zero()),
        1 => s.get(&vec![0; n]).cloned(),
        _ => None,
    }
}

fn add_into(acc: &mut Sparse, other: Sparse, sign: i32) {
    for (e, c) in other {
        let slot = acc.entry(e.clone()).or_insert_with(Rational::zero);
        if sign < 0 {
            *slot -= c;
        } else {
            *slot += c;
        }
        if slot.is_zero() {
            acc.remove(&e);
        }
    }
}

fn mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}
