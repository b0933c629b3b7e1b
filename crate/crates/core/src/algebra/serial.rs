//! Lossless structured form: a list of term records with rationals as
//! `"num/den"` strings.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, TermKey, TwistedElement};
use crate::scalar::{parse_rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub re: String,
    pub im: String,
    pub theta: i32,
    pub a: i32,
    pub abar: i32,
    pub w: u8,
    pub wbar: u8,
    pub g: u32,
}

impl TwistedElement {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.raw_terms()
            .map(|(k, c)| TermRecord {
                re: c.re.to_string(),
                im: c.im.to_string(),
                theta: k.theta,
                a: k.mono.p,
                abar: k.mono.q,
                w: k.mono.r,
                wbar: k.mono.s,
                g: k.mono.g,
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Self, crate::error::ParseError> {
        let mut terms = Vec::with_capacity(records.len());
        for r in records {
            let c = Scalar::new(parse_rational(&r.re)?, parse_rational(&r.im)?);
            let mono = Monomial { g: r.g, r: r.w, s: r.wbar, p: r.a, q: r.abar };
            terms.push((TermKey { mono, theta: r.theta }, c));
        }
        Ok(Self::from_raw(terms))
    }
}

impl Serialize for TwistedElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_records().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwistedElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        Self::from_records(&records).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_is_lossless() {
        let f = TwistedElement::e_inv().scale(&Scalar::ratio(-13, 6)).scale_theta(2)
            + TwistedElement::gaussian(2).scale(&Scalar::i());
        let json = serde_json::to_string(&f).unwrap();
        let back: TwistedElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}
