//! Random instances of the equations of categories with finite products or
//! finite coproducts, as pairs of derivations that must be equivalent.

use super::{Derivation, Formula};
use crate::logic::DerivationGen;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawInstance {
    pub name: &'static str,
    pub left: Derivation,
    pub right: Derivation,
}

impl LawInstance {
    fn new(name: &'static str, left: Derivation, right: Derivation) -> Self {
        LawInstance { name, left, right }
    }
}

fn ends(d: &Derivation) -> (Formula, Formula) {
    d.endpoints().expect("generated derivations are well typed")
}

fn category_laws(gen: &mut DerivationGen, depth: u32, out: &mut Vec<LawInstance>) {
    let k = gen.derivation(depth);
    let (a, b) = ends(&k);
    out.push(LawInstance::new(
        "left-unit",
        Derivation::comp(Derivation::Id(b), k.clone()),
        k.clone(),
    ));
    out.push(LawInstance::new(
        "right-unit",
        Derivation::comp(k.clone(), Derivation::Id(a)),
        k.clone(),
    ));

    let (_, b) = ends(&k);
    let second = gen.from_source(&b, depth);
    let (_, c) = ends(&second);
    let third = gen.from_source(&c, depth);
    out.push(LawInstance::new(
        "associativity",
        Derivation::comp(third.clone(), Derivation::comp(second.clone(), k.clone())),
        Derivation::comp(Derivation::comp(third, second), k),
    ));
}

/// One instance each of the projection, surjective pairing, terminal object
/// (when `T` is in the fragment), unit and associativity laws.
pub fn product_law_instances(gen: &mut DerivationGen, depth: u32) -> Vec<LawInstance> {
    let mut out = Vec::new();

    let f = gen.derivation(depth);
    let (c, a) = ends(&f);
    let g = gen.from_source(&c, depth);
    let (_, b) = ends(&g);
    let paired = Derivation::pair(f.clone(), g.clone());
    out.push(LawInstance::new(
        "first-projection",
        Derivation::comp(Derivation::K1Conj(a.clone(), b.clone()), paired.clone()),
        f,
    ));
    out.push(LawInstance::new(
        "second-projection",
        Derivation::comp(Derivation::K2Conj(a, b), paired),
        g,
    ));

    let (a, b) = (gen.formula(), gen.formula());
    let h = gen.to_target(&Formula::conj(a.clone(), b.clone()), depth);
    out.push(LawInstance::new(
        "surjective-pairing",
        Derivation::pair(
            Derivation::comp(Derivation::K1Conj(a.clone(), b.clone()), h.clone()),
            Derivation::comp(Derivation::K2Conj(a, b), h.clone()),
        ),
        h,
    ));

    if gen.fragment().has_truth() {
        let k = gen.derivation(depth);
        let (a, b) = ends(&k);
        out.push(LawInstance::new(
            "terminal",
            Derivation::comp(Derivation::KTop(b), k),
            Derivation::KTop(a),
        ));
    }

    category_laws(gen, depth, &mut out);
    out
}

/// Mirror image of [`product_law_instances`]: injections, copairing,
/// initial object (when `F` is in the fragment), unit and associativity.
pub fn coproduct_law_instances(gen: &mut DerivationGen, depth: u32) -> Vec<LawInstance> {
    let mut out = Vec::new();

    let f = gen.derivation(depth);
    let (a, c) = ends(&f);
    let g = gen.to_target(&c, depth);
    let (b, _) = ends(&g);
    let copaired = Derivation::copair(f.clone(), g.clone());
    out.push(LawInstance::new(
        "first-injection",
        Derivation::comp(copaired.clone(), Derivation::K1Disj(a.clone(), b.clone())),
        f,
    ));
    out.push(LawInstance::new(
        "second-injection",
        Derivation::comp(copaired, Derivation::K2Disj(a, b)),
        g,
    ));

    let (a, b) = (gen.formula(), gen.formula());
    let h = gen.from_source(&Formula::disj(a.clone(), b.clone()), depth);
    out.push(LawInstance::new(
        "surjective-copairing",
        Derivation::copair(
            Derivation::comp(h.clone(), Derivation::K1Disj(a.clone(), b.clone())),
            Derivation::comp(h.clone(), Derivation::K2Disj(a, b)),
        ),
        h,
    ));

    if gen.fragment().has_falsum() {
        let k = gen.derivation(depth);
        let (a, b) = ends(&k);
        out.push(LawInstance::new(
            "initial",
            Derivation::comp(k, Derivation::KBot(a)),
            Derivation::KBot(b),
        ));
    }

    category_laws(gen, depth, &mut out);
    out
}
