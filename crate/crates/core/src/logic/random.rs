//! Seeded generation of well-typed derivations.
//!
//! Each constructor choice is made top-down against the endpoint it has to
//! meet, so every output type-checks by construction. Formulas are drawn over
//! the variables `p`, `q`, `r` with nesting depth at most 2.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Derivation, Formula, Fragment};

const VARIABLES: [&str; 3] = ["p", "q", "r"];
const MAX_FORMULA_DEPTH: u32 = 2;

/// Probability of an axiom at an internal node; the rest is split evenly
/// between composition and pairing/copairing.
const AXIOM_WEIGHT: f64 = 0.4;
const COMP_WEIGHT: f64 = 0.3;

/// A well-typed derivation in `fragment`, reproducible from `seed`.
///
/// Depth 0 always yields an identity.
pub fn random_derivation(fragment: Fragment, max_depth: u32, seed: u64) -> Derivation {
    DerivationGen::new(fragment, seed).derivation(max_depth)
}

#[derive(Debug, Clone)]
pub struct DerivationGen {
    fragment: Fragment,
    rng: ChaCha8Rng,
}

enum Step {
    Axiom,
    Comp,
    Pairing,
}

impl DerivationGen {
    pub fn new(fragment: Fragment, seed: u64) -> Self {
        DerivationGen {
            fragment,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn fragment(&self) -> Fragment {
        self.fragment
    }

    fn step(&mut self) -> Step {
        let x: f64 = self.rng.gen();
        if x < AXIOM_WEIGHT {
            Step::Axiom
        } else if x < AXIOM_WEIGHT + COMP_WEIGHT {
            Step::Comp
        } else {
            Step::Pairing
        }
    }

    pub fn formula(&mut self) -> Formula {
        let depth = self.rng.gen_range(0..=MAX_FORMULA_DEPTH);
        self.formula_at(depth)
    }

    fn formula_at(&mut self, depth: u32) -> Formula {
        if depth == 0 {
            return self.leaf();
        }
        let mut connectives = Vec::with_capacity(2);
        if self.fragment.has_conj() {
            connectives.push(true);
        }
        if self.fragment.has_disj() {
            connectives.push(false);
        }
        let is_conj = *connectives
            .choose(&mut self.rng)
            .expect("every fragment has a connective");
        let (da, db) = (self.rng.gen_range(0..depth), self.rng.gen_range(0..depth));
        let a = self.formula_at(da);
        let b = self.formula_at(db);
        if is_conj {
            Formula::conj(a, b)
        } else {
            Formula::disj(a, b)
        }
    }

    fn leaf(&mut self) -> Formula {
        let mut units = Vec::new();
        if self.fragment.has_truth() {
            units.push(Formula::Truth);
        }
        if self.fragment.has_falsum() {
            units.push(Formula::Falsum);
        }
        if !units.is_empty() && self.rng.gen_bool(0.2) {
            return units.choose(&mut self.rng).cloned().expect("nonempty");
        }
        Formula::var(*VARIABLES.choose(&mut self.rng).expect("nonempty"))
    }

    /// Any well-typed derivation of depth at most `depth`.
    pub fn derivation(&mut self, depth: u32) -> Derivation {
        if depth == 0 {
            return Derivation::Id(self.formula());
        }
        match self.step() {
            Step::Axiom => {
                let a = self.formula();
                self.axiom_from(&a)
            }
            Step::Comp => {
                let f = self.derivation(depth - 1);
                let (_, b) = f.endpoints().expect("generated derivations are well typed");
                let g = self.from_source(&b, depth - 1);
                Derivation::comp(g, f)
            }
            Step::Pairing => {
                let f = self.derivation(depth - 1);
                let (a, b) = f.endpoints().expect("generated derivations are well typed");
                if self.pick_pair() {
                    let g = self.from_source(&a, depth - 1);
                    Derivation::pair(f, g)
                } else {
                    let g = self.to_target(&b, depth - 1);
                    Derivation::copair(f, g)
                }
            }
        }
    }

    fn pick_pair(&mut self) -> bool {
        match (self.fragment.has_conj(), self.fragment.has_disj()) {
            (true, true) => self.rng.gen_bool(0.5),
            (conj, _) => conj,
        }
    }

    /// A derivation with source `a`.
    pub fn from_source(&mut self, a: &Formula, depth: u32) -> Derivation {
        if depth == 0 {
            return self.axiom_from(a);
        }
        match self.step() {
            Step::Axiom => self.axiom_from(a),
            Step::Pairing if self.fragment.has_conj() => {
                let f = self.from_source(a, depth - 1);
                let g = self.from_source(a, depth - 1);
                Derivation::pair(f, g)
            }
            _ => {
                let f = self.from_source(a, depth - 1);
                let (_, b) = f.endpoints().expect("generated derivations are well typed");
                let g = self.from_source(&b, depth - 1);
                Derivation::comp(g, f)
            }
        }
    }

    /// A derivation with target `c`.
    pub fn to_target(&mut self, c: &Formula, depth: u32) -> Derivation {
        if depth == 0 {
            return self.axiom_to(c);
        }
        match self.step() {
            Step::Axiom => self.axiom_to(c),
            Step::Pairing if self.fragment.has_disj() => {
                let f = self.to_target(c, depth - 1);
                let g = self.to_target(c, depth - 1);
                Derivation::copair(f, g)
            }
            _ => {
                let g = self.to_target(c, depth - 1);
                let (b, _) = g.endpoints().expect("generated derivations are well typed");
                let f = self.to_target(&b, depth - 1);
                Derivation::comp(g, f)
            }
        }
    }

    fn axiom_from(&mut self, a: &Formula) -> Derivation {
        let mut options = vec![Derivation::Id(a.clone())];
        let fr = self.fragment;
        if fr.has_truth() {
            options.push(Derivation::KTop(a.clone()));
        }
        if let Formula::Conj(l, r) = a {
            options.push(Derivation::K1Conj((**l).clone(), (**r).clone()));
            options.push(Derivation::K2Conj((**l).clone(), (**r).clone()));
        }
        if fr.has_disj() {
            let b = self.formula();
            options.push(Derivation::K1Disj(a.clone(), b.clone()));
            options.push(Derivation::K2Disj(b, a.clone()));
        }
        if *a == Formula::Falsum {
            let b = self.formula();
            options.push(Derivation::KBot(b));
        }
        options.swap_remove(self.rng.gen_range(0..options.len()))
    }

    fn axiom_to(&mut self, c: &Formula) -> Derivation {
        let mut options = vec![Derivation::Id(c.clone())];
        let fr = self.fragment;
        if fr.has_falsum() {
            options.push(Derivation::KBot(c.clone()));
        }
        if let Formula::Disj(l, r) = c {
            options.push(Derivation::K1Disj((**l).clone(), (**r).clone()));
            options.push(Derivation::K2Disj((**l).clone(), (**r).clone()));
        }
        if fr.has_conj() {
            let b = self.formula();
            options.push(Derivation::K1Conj(c.clone(), b.clone()));
            options.push(Derivation::K2Conj(b, c.clone()));
        }
        if *c == Formula::Truth {
            let b = self.formula();
            options.push(Derivation::KTop(b));
        }
        options.swap_remove(self.rng.gen_range(0..options.len()))
    }

    /// A random derivation `source -> target`, built from projections and
    /// pairings (conjunctive) or injections and copairings (disjunctive).
    ///
    /// Returns `None` for the mixed fragments, or when some variable
    /// occurrence on the far side has nothing to be linked to.
    pub fn between(&mut self, source: &Formula, target: &Formula) -> Option<Derivation> {
        match self.fragment {
            Fragment::Conjunctive => self.conj_between(source, target),
            Fragment::Disjunctive => self.disj_between(source, target),
            Fragment::ConjDisj | Fragment::ConjDisjUnits => None,
        }
    }

    fn conj_between(&mut self, a: &Formula, b: &Formula) -> Option<Derivation> {
        if a == b && self.rng.gen_bool(0.3) {
            return Some(Derivation::Id(a.clone()));
        }
        match b {
            Formula::Conj(b1, b2) => {
                let f = self.conj_between(a, b1)?;
                let g = self.conj_between(a, b2)?;
                Some(Derivation::pair(f, g))
            }
            Formula::Truth => Some(Derivation::KTop(a.clone())),
            Formula::Var(x) => self.projection(a, x),
            Formula::Disj(..) | Formula::Falsum => None,
        }
    }

    /// Projects `a` onto a randomly chosen occurrence of variable `x`.
    fn projection(&mut self, a: &Formula, x: &str) -> Option<Derivation> {
        match a {
            Formula::Var(y) if y == x => Some(Derivation::Id(a.clone())),
            Formula::Conj(l, r) => {
                let mut sides = Vec::with_capacity(2);
                if l.variables().contains(&x) {
                    sides.push(true);
                }
                if r.variables().contains(&x) {
                    sides.push(false);
                }
                let left = *sides.choose(&mut self.rng)?;
                let (side, proj) = if left {
                    (l, Derivation::K1Conj((**l).clone(), (**r).clone()))
                } else {
                    (r, Derivation::K2Conj((**l).clone(), (**r).clone()))
                };
                let rest = self.projection(side, x)?;
                Some(match rest {
                    Derivation::Id(_) => proj,
                    rest => Derivation::comp(rest, proj),
                })
            }
            _ => None,
        }
    }

    fn disj_between(&mut self, a: &Formula, b: &Formula) -> Option<Derivation> {
        if a == b && self.rng.gen_bool(0.3) {
            return Some(Derivation::Id(a.clone()));
        }
        match a {
            Formula::Disj(a1, a2) => {
                let f = self.disj_between(a1, b)?;
                let g = self.disj_between(a2, b)?;
                Some(Derivation::copair(f, g))
            }
            Formula::Falsum => Some(Derivation::KBot(b.clone())),
            Formula::Var(x) => self.injection(b, x),
            Formula::Conj(..) | Formula::Truth => None,
        }
    }

    /// Injects variable `x` into a randomly chosen occurrence of it in `b`.
    fn injection(&mut self, b: &Formula, x: &str) -> Option<Derivation> {
        match b {
            Formula::Var(y) if y == x => Some(Derivation::Id(b.clone())),
            Formula::Disj(l, r) => {
                let mut sides = Vec::with_capacity(2);
                if l.variables().contains(&x) {
                    sides.push(true);
                }
                if r.variables().contains(&x) {
                    sides.push(false);
                }
                let left = *sides.choose(&mut self.rng)?;
                let (side, inj) = if left {
                    (l, Derivation::K1Disj((**l).clone(), (**r).clone()))
                } else {
                    (r, Derivation::K2Disj((**l).clone(), (**r).clone()))
                };
                let rest = self.injection(side, x)?;
                Some(match rest {
                    Derivation::Id(_) => inj,
                    rest => Derivation::comp(inj, rest),
                })
            }
            _ => None,
        }
    }
}
