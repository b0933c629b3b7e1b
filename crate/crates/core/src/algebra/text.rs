//! Canonical text form: `coef θ^t a^p abar^q w^r wbar^s G^g` per term,
//! terms in canonical order joined by ` + ` / ` - `.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use super::{Monomial, TermKey, TwistedElement};
use crate::error::ParseError;
use crate::scalar::Scalar;

fn write_factors(f: &mut fmt::Formatter<'_>, key: &TermKey) -> fmt::Result {
    let m = key.mono;
    let factors: [(&str, i64); 6] = [
        ("θ", key.theta as i64),
        ("a", m.p as i64),
        ("abar", m.q as i64),
        ("w", m.r as i64),
        ("wbar", m.s as i64),
        ("G", m.g as i64),
    ];
    for (name, e) in factors {
        if e != 0 {
            write!(f, " {name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for TwistedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.raw_terms().enumerate() {
            let negative_real = c.is_real() && c.re.is_negative();
            let shown = if negative_real { -c } else { c.clone() };
            match (i, negative_real) {
                (0, true) => write!(f, "-{shown}")?,
                (0, false) => write!(f, "{shown}")?,
                (_, true) => write!(f, " - {shown}")?,
                (_, false) => write!(f, " + {shown}")?,
            }
            write_factors(f, key)?;
        }
        Ok(())
    }
}

fn parse_factor(tok: &str, key: &mut TermKey) -> Result<(), ParseError> {
    let bad = || ParseError::BadFactor(tok.to_string());
    let (name, exp) = match tok.split_once('^') {
        Some((n, e)) => (n, e.parse::<i64>().map_err(|_| bad())?),
        None => (tok, 1),
    };
    let small = |e: i64| -> Result<u8, ParseError> {
        if (0..=1).contains(&e) {
            Ok(e as u8)
        } else {
            Err(bad())
        }
    };
    match name {
        "θ" | "theta" => key.theta += exp as i32,
        "a" => key.mono.p += exp as i32,
        "abar" => key.mono.q += exp as i32,
        "w" => key.mono.r += small(exp)?,
        "wbar" => key.mono.s += small(exp)?,
        "G" => {
            if exp < 0 {
                return Err(bad());
            }
            key.mono.g += exp as u32
        }
        _ => return Err(bad()),
    }
    Ok(())
}

fn is_factor(tok: &str) -> bool {
    let name = tok.split('^').next().unwrap_or("");
    matches!(name, "θ" | "theta" | "a" | "abar" | "w" | "wbar" | "G")
}

impl FromStr for TwistedElement {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut out = TwistedElement::zero();
        let mut i = 0;
        let mut first = true;
        while i < tokens.len() {
            let mut sign = Scalar::one();
            if !first || tokens[i] == "+" || tokens[i] == "-" {
                match tokens[i] {
                    "+" => {}
                    "-" => sign = Scalar::int(-1),
                    other => return Err(ParseError::Unexpected(other.to_string())),
                }
                i += 1;
            }
            first = false;
            let tok = *tokens.get(i).ok_or(ParseError::Unexpected("+".into()))?;
            let coef = if is_factor(tok) {
                Scalar::one()
            } else {
                i += 1;
                tok.parse::<Scalar>()?
            };
            let mut key = TermKey { mono: Monomial::ONE, theta: 0 };
            while i < tokens.len() && is_factor(tokens[i]) {
                parse_factor(tokens[i], &mut key)?;
                i += 1;
            }
            if key.mono.omega_order() > 1 {
                continue;
            }
            out = out + TwistedElement::term(&sign * &coef, key.theta, key.mono);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_frame_determinant() {
        assert_eq!(TwistedElement::e_inv().to_string(), "1 - 1 abar^1 wbar^1 - 1 a^1 w^1");
    }

    #[test]
    fn renders_canonical_order() {
        let f = TwistedElement::gaussian(1).scale(&Scalar::int(2))
            + TwistedElement::monomial(Scalar::ratio(-1, 2), 1, 0, -1);
        assert_eq!(f.to_string(), "-1/2 θ^1 abar^-1 + 2 G^1");
    }

    #[test]
    fn parses_what_it_prints() {
        let f = TwistedElement::e_inv().scale_theta(1).scale(&Scalar::i())
            + TwistedElement::gaussian(3).scale(&Scalar::ratio(5, 3));
        assert_eq!(f.to_string().parse::<TwistedElement>().unwrap(), f);
        assert_eq!("0".parse::<TwistedElement>().unwrap(), TwistedElement::zero());
    }

    #[test]
    fn parses_hand_written_input() {
        let f: TwistedElement = "2 G^1 - theta a abar^-1 w".parse().unwrap();
        let expected = TwistedElement::gaussian(1).scale(&Scalar::int(2))
            - TwistedElement::term(Scalar::one(), 1, Monomial::new(1, -1).with_omega(1, 0));
        assert_eq!(f, expected);
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<TwistedElement>().is_err());
        assert!("2 x^1".parse::<TwistedElement>().is_err());
        assert!("1 +".parse::<TwistedElement>().is_err());
        assert!("1 G^-1".parse::<TwistedElement>().is_err());
    }
}
