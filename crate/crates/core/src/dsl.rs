//! Text syntax for ring constructions.
//!
//! ```text
//! spec := "Z/" int
//!       | "GF(" int ")[x]/(" poly ")"
//!       | "product(" spec ("," spec)+ ")"
//!       | "quotient(" spec ";" int ("," int)* ")"
//!       | "localize(" spec ";" int ("," int)* ")"
//!       | "table:" path
//! ```
//!
//! Generators are element indices; for `Z/n` they are residues and are
//! reduced mod `n`. The printer is `RingSpec`'s `Display`.

use crate::error::{ParseError, PolyError};
use crate::groebner::{parse_poly, MAX_CHARACTERISTIC};
use crate::ring::spec::is_prime;
use crate::ring::RingSpec;

/// Stand-in characteristic for reading the modulus when `p` is not a usable
/// prime; the builder rejects such specs anyway.
const FALLBACK_PRIME: u64 = 2_147_483_647;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{token}'")))
        }
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let v = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("integer too large"))?;
        self.pos += digits;
        Ok(v)
    }

    fn spec(&mut self) -> Result<RingSpec, ParseError> {
        self.skip_ws();
        if self.eat("Z/") {
            return Ok(RingSpec::Zmod(self.integer()?));
        }
        if self.eat("GF(") {
            let p = self.integer()?;
            self.expect(")")?;
            self.expect("[x]/(")?;
            self.skip_ws();
            let start = self.pos;
            let len = self
                .rest()
                .find(')')
                .ok_or_else(|| self.error("unterminated modulus"))?;
            let body = &self.rest()[..len];
            let q = if p < MAX_CHARACTERISTIC && is_prime(p) {
                p
            } else {
                FALLBACK_PRIME
            };
            let f = parse_poly(body, q, &['x']).map_err(|e| match e {
                PolyError::Parse(pe) => ParseError::new(start + pe.position, pe.message),
                other => ParseError::new(start, other.to_string()),
            })?;
            let deg = f.terms().map(|(m, _)| m[0] as usize).max().unwrap_or(0);
            let mut modulus = vec![0u64; deg + 1];
            for (m, c) in f.terms() {
                modulus[m[0] as usize] = c;
            }
            self.pos += len + 1;
            return Ok(RingSpec::PolyQuot { p, modulus });
        }
        if self.eat("product(") {
            let mut factors = vec![self.spec()?];
            while self.eat(",") {
                factors.push(self.spec()?);
            }
            self.expect(")")?;
            if factors.len() < 2 {
                return Err(self.error("a product needs at least two factors"));
            }
            return Ok(RingSpec::Product(factors));
        }
        for (kw, localize) in [("quotient(", false), ("localize(", true)] {
            if self.eat(kw) {
                let inner = self.spec()?;
                self.expect(";")?;
                let mut gens = vec![self.integer()?];
                while self.eat(",") {
                    gens.push(self.integer()?);
                }
                self.expect(")")?;
                if let RingSpec::Zmod(n) = inner {
                    if n > 0 {
                        gens.iter_mut().for_each(|g| *g %= n);
                    }
                }
                let inner = Box::new(inner);
                return Ok(if localize {
                    RingSpec::LocalizeAt(inner, gens)
                } else {
                    RingSpec::Quotient(inner, gens)
                });
            }
        }
        if self.eat("table:") {
            let len = self
                .rest()
                .find(|c: char| c.is_whitespace() || ",;)".contains(c))
                .unwrap_or(self.rest().len());
            if len == 0 {
                return Err(self.error("expected a file path"));
            }
            let path = self.rest()[..len].to_string();
            self.pos += len;
            return Ok(RingSpec::Table(path));
        }
        Err(self.error("expected Z/, GF(, product(, quotient(, localize( or table:"))
    }
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, ParseError> {
    let mut c = Cursor { text, pos: 0 };
    let spec = c.spec()?;
    c.skip_ws();
    if !c.rest().is_empty() {
        return Err(c.error("unexpected trailing input"));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(parse_ring_spec("Z/12").unwrap(), RingSpec::Zmod(12));
        assert_eq!(
            parse_ring_spec("GF(2)[x]/(x^2)").unwrap(),
            RingSpec::PolyQuot {
                p: 2,
                modulus: vec![0, 0, 1]
            }
        );
        assert_eq!(
            parse_ring_spec("product(Z/4, Z/3)").unwrap(),
            RingSpec::Product(vec![RingSpec::Zmod(4), RingSpec::Zmod(3)])
        );
        assert_eq!(
            parse_ring_spec(" quotient( Z/12 ; 16 ) ").unwrap(),
            RingSpec::Quotient(Box::new(RingSpec::Zmod(12)), vec![4])
        );
        assert_eq!(
            parse_ring_spec("localize(product(Z/2, table:r.txt); 1)").unwrap(),
            RingSpec::LocalizeAt(
                Box::new(RingSpec::Product(vec![
                    RingSpec::Zmod(2),
                    RingSpec::Table("r.txt".into())
                ])),
                vec![1]
            )
        );
    }

    #[test]
    fn errors_have_positions() {
        assert_eq!(parse_ring_spec("Z/").unwrap_err().position, 2);
        assert_eq!(parse_ring_spec("product(Z/4)").unwrap_err().position, 12);
        assert_eq!(
            parse_ring_spec("GF(3)[x]/(x^2 + w)").unwrap_err().position,
            16
        );
        assert_eq!(parse_ring_spec("Z/4 junk").unwrap_err().position, 4);
        assert_eq!(parse_ring_spec("R").unwrap_err().position, 0);
    }

    #[test]
    fn semantic_errors_wait_for_build() {
        let s = parse_ring_spec("GF(4)[x]/(x^2)").unwrap();
        assert!(s.build().is_err());
        let s = parse_ring_spec("Z/1").unwrap();
        assert!(s.build().is_err());
    }

    fn spec_strategy() -> impl Strategy<Value = RingSpec> {
        let leaf = prop_oneof![
            (2u64..200).prop_map(RingSpec::Zmod),
            (
                prop::sample::select(vec![2u64, 3, 5, 7]),
                prop::collection::vec(0u64..7, 1..4)
            )
                .prop_map(|(p, mut low)| {
                    low.iter_mut().for_each(|c| *c %= p);
                    low.push(1);
                    RingSpec::PolyQuot { p, modulus: low }
                }),
            "[a-z][a-z0-9_./]{0,8}".prop_map(RingSpec::Table),
        ];
        leaf.prop_recursive(3, 12, 3, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..4).prop_map(RingSpec::Product),
                (inner.clone(), prop::collection::vec(0u64..50, 1..3)).prop_map(|(s, g)| {
                    let g = match s {
                        RingSpec::Zmod(n) => g.into_iter().map(|x| x % n).collect(),
                        _ => g,
                    };
                    RingSpec::Quotient(Box::new(s), g)
                }),
                (inner, prop::collection::vec(0u64..50, 1..3)).prop_map(|(s, g)| {
                    let g = match s {
                        RingSpec::Zmod(n) => g.into_iter().map(|x| x % n).collect(),
                        _ => g,
                    };
                    RingSpec::LocalizeAt(Box::new(s), g)
                }),
            ]
        })
    }

    proptest! {
        #[test]
        fn canonical_text_round_trips(s in spec_strategy()) {
            let text = s.to_string();
            let back = parse_ring_spec(&text).unwrap();
            prop_assert_eq!(&back, &s);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
