//! Recursive-descent parser for formulas and derivation terms.
//!
//! ```text
//! form := conj ("\/" conj)*
//! conj := atom ("/\" atom)*
//! atom := ident | "T" | "F" | "(" form ")"
//! der  := "id{" form "}" | "pi1{" form "," form "}" | "pi2{" form "," form "}"
//!       | "bang{" form "}" | "inl{" form "," form "}" | "inr{" form "," form "}"
//!       | "abort{" form "}" | "comp(" der "," der ")" | "pair(" der "," der ")"
//!       | "copair(" der "," der ")"
//! ```

use super::{Derivation, Formula, Fragment};
use crate::error::{Error, Result};

/// Parses a formula, consuming the whole input.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser::new(text);
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses a derivation term without checking types or fragment.
pub fn parse_derivation_syntax(text: &str) -> Result<Derivation> {
    let mut p = Parser::new(text);
    let d = p.derivation()?;
    p.finish()?;
    Ok(d)
}

/// Parses a derivation term and checks it is legal in `fragment` and well typed.
pub fn parse_derivation(text: &str, fragment: Fragment) -> Result<Derivation> {
    let d = parse_derivation_syntax(text)?;
    d.check_fragment(fragment)?;
    d.endpoints()?;
    Ok(d)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
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

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            let found = self.rest().chars().next();
            match found {
                Some(c) => self.error(self.pos, format!("expected `{token}`, found `{c}`")),
                None => self.error(self.pos, format!("expected `{token}`, found end of input")),
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos < self.src.len() {
            return self.error(self.pos, "unexpected trailing input");
        }
        Ok(())
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let len = chars
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_' || c == '\''))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += len;
        Some((start, &rest[..len]))
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut f = self.conjunction()?;
        while self.eat("\\/") {
            f = Formula::disj(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut f = self.atom()?;
        while self.eat("/\\") {
            f = Formula::conj(f, self.atom()?);
        }
        Ok(f)
    }

    fn atom(&mut self) -> Result<Formula> {
        if self.eat("(") {
            let f = self.formula()?;
            self.expect(")")?;
            return Ok(f);
        }
        match self.ident() {
            Some((_, "T")) => Ok(Formula::Truth),
            Some((_, "F")) => Ok(Formula::Falsum),
            Some((_, name)) => Ok(Formula::var(name)),
            None => {
                let at = self.pos;
                match self.rest().chars().next() {
                    Some(c) => self.error(at, format!("expected a formula, found `{c}`")),
                    None => self.error(at, "expected a formula, found end of input"),
                }
            }
        }
    }

    fn formula_args<const N: usize>(&mut self) -> Result<[Formula; N]> {
        self.expect("{")?;
        let mut out = Vec::with_capacity(N);
        for i in 0..N {
            if i > 0 {
                self.expect(",")?;
            }
            out.push(self.formula()?);
        }
        self.expect("}")?;
        Ok(out.try_into().expect("exactly N formulas"))
    }

    fn derivation_args(&mut self) -> Result<(Derivation, Derivation)> {
        self.expect("(")?;
        let a = self.derivation()?;
        self.expect(",")?;
        let b = self.derivation()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn derivation(&mut self) -> Result<Derivation> {
        let Some((start, word)) = self.ident() else {
            let at = self.pos;
            return self.error(at, "expected a derivation");
        };
        Ok(match word {
            "id" => {
                let [a] = self.formula_args()?;
                Derivation::Id(a)
            }
            "pi1" => {
                let [a, b] = self.formula_args()?;
                Derivation::K1Conj(a, b)
            }
            "pi2" => {
                let [a, b] = self.formula_args()?;
                Derivation::K2Conj(a, b)
            }
            "bang" => {
                let [a] = self.formula_args()?;
                Derivation::KTop(a)
            }
            "inl" => {
                let [a, b] = self.formula_args()?;
                Derivation::K1Disj(a, b)
            }
            "inr" => {
                let [a, b] = self.formula_args()?;
                Derivation::K2Disj(a, b)
            }
            "abort" => {
                let [a] = self.formula_args()?;
                Derivation::KBot(a)
            }
            "comp" => {
                let (g, f) = self.derivation_args()?;
                Derivation::comp(g, f)
            }
            "pair" => {
                let (f, g) = self.derivation_args()?;
                Derivation::pair(f, g)
            }
            "copair" => {
                let (f, g) = self.derivation_args()?;
                Derivation::copair(f, g)
            }
            other => return self.error(start, format!("unknown derivation constructor `{other}`")),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Formula {
        Formula::var(name)
    }

    #[test]
    fn formula_examples() {
        assert_eq!(
            parse_formula("p /\\ (q /\\ T)").unwrap(),
            Formula::conj(v("p"), Formula::conj(v("q"), Formula::Truth))
        );
        assert_eq!(
            parse_formula("p /\\ q /\\ r").unwrap(),
            Formula::conj(Formula::conj(v("p"), v("q")), v("r"))
        );
        assert_eq!(
            parse_formula("p \\/ q /\\ r").unwrap(),
            Formula::disj(v("p"), Formula::conj(v("q"), v("r")))
        );
        assert_eq!(parse_formula(" F ").unwrap(), Formula::Falsum);
        assert_eq!(parse_formula("Tx").unwrap(), v("Tx"));
    }

    #[test]
    fn formula_errors_carry_offsets() {
        assert_eq!(
            parse_formula("p /\\ "),
            Err(Error::Syntax {
                offset: 5,
                message: "expected a formula, found end of input".into()
            })
        );
        assert!(matches!(
            parse_formula("(p /\\ q"),
            Err(Error::Syntax { offset: 7, .. })
        ));
        assert!(matches!(
            parse_formula("p q"),
            Err(Error::Syntax { offset: 2, .. })
        ));
    }

    #[test]
    fn derivation_examples() {
        assert_eq!(
            parse_derivation("pair(pi1{p,q}, pi2{p,q})", Fragment::Conjunctive).unwrap(),
            Derivation::pair(
                Derivation::K1Conj(v("p"), v("q")),
                Derivation::K2Conj(v("p"), v("q"))
            )
        );
        let err = parse_derivation("comp(pi1{p,q}, pi1{p,q})", Fragment::Conjunctive).unwrap_err();
        match err {
            Error::Type { term, message } => {
                assert_eq!(term, "comp(pi1{p, q}, pi1{p, q})");
                assert!(message.contains("target p"), "{message}");
                assert!(message.contains("source p /\\ q"), "{message}");
            }
            other => panic!("expected a type error, got {other:?}"),
        }
    }

    #[test]
    fn derivation_fragment_violation() {
        assert_eq!(
            parse_derivation("inl{p, q}", Fragment::Conjunctive),
            Err(Error::Fragment {
                construct: "inl".into(),
                fragment: "conj"
            })
        );
        assert!(parse_derivation("id{p /\\ T}", Fragment::ConjDisj).is_err());
    }

    #[test]
    fn derivation_syntax_errors() {
        assert!(matches!(
            parse_derivation_syntax("frob{p}"),
            Err(Error::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_derivation_syntax("comp(id{p} id{p})"),
            Err(Error::Syntax { offset: 11, .. })
        ));
        assert!(parse_derivation_syntax("id{p} junk").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "comp(pair(id{p /\\ q /\\ T}, id{p /\\ q /\\ T}), pi1{p /\\ q /\\ T, r})",
            "copair(inl{p, q \\/ r}, comp(inr{p, q \\/ r}, abort{q \\/ r}))",
        ] {
            let d = parse_derivation_syntax(text).unwrap();
            assert_eq!(parse_derivation_syntax(&d.to_string()).unwrap(), d);
        }
    }
}
