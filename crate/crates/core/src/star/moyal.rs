//! Constant-θ Moyal product built from Weyl-symmetrized generator words.
//!
//! At ω = 0 the function `a^p ā^q` equals the average of all star words
//! with `p` letters `a` and `q` letters `ā`, so `P⋆f` can be computed from
//! the first-order generator actions alone. Used as an independent route
//! against the series product.

use super::ActionSide;
use crate::algebra::{TwistedElement, Var};
use crate::error::AlgebraError;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Letter {
    A,
    Abar,
}

fn half_theta() -> TwistedElement {
    TwistedElement::theta().scale(&Scalar::ratio(1, 2))
}

fn act(letter: Letter, f: &TwistedElement, side: ActionSide) -> TwistedElement {
    let d = match letter {
        Letter::A => f.derive(Var::Abar),
        Letter::Abar => f.derive(Var::A),
    };
    let base = match letter {
        Letter::A => TwistedElement::a(),
        Letter::Abar => TwistedElement::abar(),
    };
    // a⋆f = af + (θ/2)∂_ā f, ā⋆f = āf - (θ/2)∂_a f; right actions flip the sign
    let sign = match (letter, side) {
        (Letter::A, ActionSide::Left) | (Letter::Abar, ActionSide::Right) => 1,
        _ => -1,
    };
    base * f + (half_theta() * d).scale(&Scalar::int(sign))
}

fn words(p: u32, q: u32) -> Vec<Vec<Letter>> {
    if p == 0 && q == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    if p > 0 {
        for mut w in words(p - 1, q) {
            w.insert(0, Letter::A);
            out.push(w);
        }
    }
    if q > 0 {
        for mut w in words(p, q - 1) {
            w.insert(0, Letter::Abar);
            out.push(w);
        }
    }
    out
}

/// Applies the word `w₁⋆w₂⋆…⋆w_n` to `f` from `side` at ω = 0.
/// `word` holds `true` for `a` and `false` for `ā`.
pub fn weyl_word_action(word: &[bool], f: &TwistedElement, side: ActionSide) -> TwistedElement {
    let letters: Vec<Letter> = word.iter().map(|&is_a| if is_a { Letter::A } else { Letter::Abar }).collect();
    apply_word(&letters, &f.limit_omega_zero(), side)
}

fn apply_word(word: &[Letter], f: &TwistedElement, side: ActionSide) -> TwistedElement {
    match side {
        ActionSide::Left => word.iter().rev().fold(f.clone(), |acc, &l| act(l, &acc, side)),
        ActionSide::Right => word.iter().fold(f.clone(), |acc, &l| act(l, &acc, side)),
    }
}

/// Constant-θ product `P⋆f` (or `f⋆P`) of the ω⁰ parts.
pub fn moyal_reference(
    p: &TwistedElement,
    f: &TwistedElement,
    side: ActionSide,
) -> Result<TwistedElement, AlgebraError> {
    let p0 = p.limit_omega_zero();
    if !p0.is_polynomial() {
        return Err(AlgebraError::NonTerminating(format!("polynomial factor required, got {p}")));
    }
    let f0 = f.limit_omega_zero();
    let mut out = TwistedElement::zero();
    for (mono, coef) in p0.terms() {
        let ws = words(mono.p as u32, mono.q as u32);
        let mut acc = TwistedElement::zero();
        for w in &ws {
            acc = acc + apply_word(w, &f0, side);
        }
        let weight = &coef.value * &Scalar::ratio(1, ws.len() as i64);
        out = out + acc.scale(&weight).scale_theta(coef.theta_power);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star::star_series;

    #[test]
    fn word_count_is_binomial() {
        assert_eq!(words(2, 2).len(), 6);
        assert_eq!(words(3, 0).len(), 1);
    }

    #[test]
    fn agrees_with_series_at_zero_twist() {
        let p: TwistedElement = "a^2 abar^1 - 3/2 θ^1 abar^2 + 2 a^1 w^1".parse().unwrap();
        let f: TwistedElement = "2 G^1 + 1/5 θ^-1 a^3 abar^-1 G^1 - a^2".parse().unwrap();
        for side in [ActionSide::Left, ActionSide::Right] {
            let series = star_series(&p, &f, side).unwrap().limit_omega_zero();
            assert_eq!(moyal_reference(&p, &f, side).unwrap(), series);
        }
    }

    #[test]
    fn single_letter_words() {
        let f: TwistedElement = "a^1 abar^3".parse().unwrap();
        assert_eq!(weyl_word_action(&[true], &f, ActionSide::Left), crate::star::lower_left(&f).limit_omega_zero());
    }
}
