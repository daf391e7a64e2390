//! Polynomial text: `3*x^2*y + z - 1`, single-letter variables, integer
//! coefficients reduced mod p.

use super::poly::PolyFp;
use crate::error::{ParseError, PolyError};

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|(_, c)| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.offset(), msg)
    }

    fn integer(&mut self) -> Result<u128, ParseError> {
        self.skip_ws();
        let start = self.offset();
        let mut v: u128 = 0;
        let mut any = false;
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            let Some(d) = c.to_digit(10) else { break };
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u128))
                .ok_or_else(|| ParseError::new(start, "integer too large"))?;
            any = true;
            self.pos += 1;
        }
        if any {
            Ok(v)
        } else {
            Err(self.error("expected an integer"))
        }
    }
}

/// Parses one polynomial over `F_p` in the variables `vars`.
pub fn parse_poly(text: &str, p: u64, vars: &[char]) -> Result<PolyFp, PolyError> {
    let mut lx = Lexer::new(text);
    let f = poly(&mut lx, p, vars)?;
    if lx.peek().is_some() {
        return Err(lx.error("unexpected trailing input").into());
    }
    Ok(f)
}

/// Parses a comma-separated list of polynomials.
pub fn parse_polys(text: &str, p: u64, vars: &[char]) -> Result<Vec<PolyFp>, PolyError> {
    let mut lx = Lexer::new(text);
    let mut out = vec![poly(&mut lx, p, vars)?];
    while lx.peek() == Some(',') {
        lx.bump();
        out.push(poly(&mut lx, p, vars)?);
    }
    if lx.peek().is_some() {
        return Err(lx.error("expected ',' or end of input").into());
    }
    Ok(out)
}

/// Distinct variable letters appearing in the texts, alphabetically.
pub fn variables_in<'a>(texts: impl IntoIterator<Item = &'a str>) -> Vec<char> {
    let mut v: Vec<char> = texts
        .into_iter()
        .flat_map(str::chars)
        .filter(char::is_ascii_lowercase)
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn poly(lx: &mut Lexer, p: u64, vars: &[char]) -> Result<PolyFp, PolyError> {
    let mut acc = PolyFp::zero(p, vars)?;
    let mut negate = match lx.peek() {
        Some('-') => {
            lx.bump();
            true
        }
        Some('+') => {
            lx.bump();
            false
        }
        _ => false,
    };
    loop {
        let t = term(lx, p, vars)?;
        acc = acc.add_unchecked(&if negate { t.neg() } else { t });
        match lx.peek() {
            Some('+') => negate = false,
            Some('-') => negate = true,
            _ => return Ok(acc),
        }
        lx.bump();
    }
}

fn term(lx: &mut Lexer, p: u64, vars: &[char]) -> Result<PolyFp, PolyError> {
    let mut coef: u64 = 1;
    let mut exps = vec![0u32; vars.len()];
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = lx.integer()?;
                coef = coef * (v % p as u128) as u64 % p;
            }
            Some(c) if c.is_ascii_lowercase() => {
                let at = lx.offset();
                lx.bump();
                let i = vars
                    .iter()
                    .position(|&v| v == c)
                    .ok_or_else(|| ParseError::new(at, format!("unknown variable '{c}'")))?;
                let mut k = 1u32;
                if lx.peek() == Some('^') {
                    lx.bump();
                    let at = lx.offset();
                    k = u32::try_from(lx.integer()?)
                        .map_err(|_| ParseError::new(at, "exponent too large"))?;
                }
                exps[i] = exps[i]
                    .checked_add(k)
                    .ok_or_else(|| ParseError::new(at, "exponent too large"))?;
            }
            Some(c) => return Err(lx.error(format!("unexpected '{c}'")).into()),
            None => return Err(lx.error("unexpected end of input").into()),
        }
        if lx.peek() == Some('*') {
            lx.bump();
        } else {
            return PolyFp::monomial(p, vars, exps, coef);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const XYZ: [char; 3] = ['x', 'y', 'z'];

    #[test]
    fn round_trip_text() {
        let f = parse_poly("3*x^2*y + z - 1", 5, &XYZ).unwrap();
        assert_eq!(f.to_string(), "3*x^2*y + z + 4");
        let g = parse_poly(&f.to_string(), 5, &XYZ).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn coefficients_reduce_mod_p() {
        assert!(parse_poly("7*x - 7*x", 7, &XYZ).unwrap().is_zero());
        assert_eq!(parse_poly("-x", 3, &XYZ).unwrap().to_string(), "2*x");
        assert_eq!(
            parse_poly("x*x*2*y", 3, &XYZ).unwrap().to_string(),
            "2*x^2*y"
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_poly("x + w", 3, &XYZ).unwrap_err();
        assert_eq!(
            e,
            PolyError::Parse(ParseError::new(4, "unknown variable 'w'"))
        );
        let PolyError::Parse(e) = parse_poly("x +", 3, &XYZ).unwrap_err() else {
            panic!()
        };
        assert_eq!(e.position, 3);
        let PolyError::Parse(e) = parse_poly("x y", 3, &XYZ).unwrap_err() else {
            panic!()
        };
        assert_eq!(e.position, 2);
    }

    #[test]
    fn lists_and_variables() {
        let v = parse_polys("x, z^2, x^3 - y*z", 2, &XYZ).unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(variables_in(["z^2 + x", "y"]), ['x', 'y', 'z']);
    }
}
