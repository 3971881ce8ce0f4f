//! Derivations of conjunctive and disjunctive logic and their translation
//! into split preorders.
//!
//! A formula is sent to the number of its variable occurrences (numbered
//! left to right from 0) and a derivation to a split preorder between those
//! ordinals. Two derivations with the same endpoints are equivalent when
//! their translations coincide.

mod laws;
mod parse;
mod random;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::relcore::PlainRelation;
use crate::splitpre::{SplitPreorder, TaggedNode};

pub use laws::{coproduct_law_instances, product_law_instances, LawInstance};
pub use parse::{parse_derivation, parse_derivation_syntax, parse_formula};
pub use random::{random_derivation, DerivationGen};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Conj(Box<Formula>, Box<Formula>),
    Truth,
    Disj(Box<Formula>, Box<Formula>),
    Falsum,
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn conj(a: Formula, b: Formula) -> Self {
        Formula::Conj(Box::new(a), Box::new(b))
    }

    pub fn disj(a: Formula, b: Formula) -> Self {
        Formula::Disj(Box::new(a), Box::new(b))
    }

    /// Number of variable occurrences.
    pub fn occurrences(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::Truth | Formula::Falsum => 0,
            Formula::Conj(a, b) | Formula::Disj(a, b) => a.occurrences() + b.occurrences(),
        }
    }

    /// Variable names in occurrence order.
    pub fn variables(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Formula::Var(name) => out.push(name),
            Formula::Truth | Formula::Falsum => {}
            Formula::Conj(a, b) | Formula::Disj(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    pub fn check_fragment(&self, fragment: Fragment) -> Result<()> {
        let construct = match self {
            Formula::Var(_) => return Ok(()),
            Formula::Conj(a, b) | Formula::Disj(a, b) => {
                a.check_fragment(fragment)?;
                b.check_fragment(fragment)?;
                if matches!(self, Formula::Conj(..)) {
                    Construct::Conj
                } else {
                    Construct::Disj
                }
            }
            Formula::Truth => Construct::Truth,
            Formula::Falsum => Construct::Falsum,
        };
        fragment.require(construct)
    }

    /// `min_prec`: 0 accepts anything, 1 requires at least a conjunction,
    /// 2 requires an atom.
    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let prec = match self {
            Formula::Disj(..) => 0,
            Formula::Conj(..) => 1,
            _ => 2,
        };
        let parens = prec < min_prec;
        if parens {
            write!(f, "(")?;
        }
        match self {
            Formula::Var(name) => write!(f, "{name}")?,
            Formula::Truth => write!(f, "T")?,
            Formula::Falsum => write!(f, "F")?,
            // both connectives associate to the left
            Formula::Disj(a, b) => {
                a.fmt_at(f, 0)?;
                write!(f, " \\/ ")?;
                b.fmt_at(f, 1)?;
            }
            Formula::Conj(a, b) => {
                a.fmt_at(f, 1)?;
                write!(f, " /\\ ")?;
                b.fmt_at(f, 2)?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// Connectives and derivation constructors a fragment may or may not allow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Construct {
    Conj,
    Truth,
    Disj,
    Falsum,
}

impl Construct {
    fn name(self) -> &'static str {
        match self {
            Construct::Conj => "/\\",
            Construct::Truth => "T",
            Construct::Disj => "\\/",
            Construct::Falsum => "F",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fragment {
    /// `/\` and `T`.
    Conjunctive,
    /// `\/` and `F`.
    Disjunctive,
    /// `/\` and `\/` without units.
    ConjDisj,
    /// `/\`, `\/`, `T` and `F`.
    ConjDisjUnits,
}

impl Fragment {
    pub const ALL: [Fragment; 4] = [
        Fragment::Conjunctive,
        Fragment::Disjunctive,
        Fragment::ConjDisj,
        Fragment::ConjDisjUnits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fragment::Conjunctive => "conj",
            Fragment::Disjunctive => "disj",
            Fragment::ConjDisj => "conj-disj",
            Fragment::ConjDisjUnits => "conj-disj-units",
        }
    }

    pub fn has_conj(self) -> bool {
        !matches!(self, Fragment::Disjunctive)
    }

    pub fn has_disj(self) -> bool {
        !matches!(self, Fragment::Conjunctive)
    }

    pub fn has_truth(self) -> bool {
        matches!(self, Fragment::Conjunctive | Fragment::ConjDisjUnits)
    }

    pub fn has_falsum(self) -> bool {
        matches!(self, Fragment::Disjunctive | Fragment::ConjDisjUnits)
    }

    fn allows(self, c: Construct) -> bool {
        match c {
            Construct::Conj => self.has_conj(),
            Construct::Truth => self.has_truth(),
            Construct::Disj => self.has_disj(),
            Construct::Falsum => self.has_falsum(),
        }
    }

    fn require(self, c: Construct) -> Result<()> {
        if self.allows(c) {
            Ok(())
        } else {
            Err(Error::Fragment {
                construct: c.name().to_string(),
                fragment: self.name(),
            })
        }
    }

    fn require_named(self, c: Construct, construct: &str) -> Result<()> {
        if self.allows(c) {
            Ok(())
        } else {
            Err(Error::Fragment {
                construct: construct.to_string(),
                fragment: self.name(),
            })
        }
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fragment {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Fragment::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown fragment `{s}` (expected conj, disj, conj-disj or conj-disj-units)"
                )
            })
    }
}

/// Derivation trees. Axioms carry the formulas they are instantiated at.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Derivation {
    /// `1_A : A -> A`
    Id(Formula),
    /// `A /\ B -> A`
    K1Conj(Formula, Formula),
    /// `A /\ B -> B`
    K2Conj(Formula, Formula),
    /// `A -> T`
    KTop(Formula),
    /// `Comp(g, f) = g ∘ f`
    Comp(Box<Derivation>, Box<Derivation>),
    /// `f: C -> A`, `g: C -> B` give `C -> A /\ B`
    Pair(Box<Derivation>, Box<Derivation>),
    /// `A -> A \/ B`
    K1Disj(Formula, Formula),
    /// `B -> A \/ B`
    K2Disj(Formula, Formula),
    /// `F -> A`
    KBot(Formula),
    /// `f: A -> C`, `g: B -> C` give `A \/ B -> C`
    Copair(Box<Derivation>, Box<Derivation>),
}

impl Derivation {
    pub fn comp(g: Derivation, f: Derivation) -> Self {
        Derivation::Comp(Box::new(g), Box::new(f))
    }

    pub fn pair(f: Derivation, g: Derivation) -> Self {
        Derivation::Pair(Box::new(f), Box::new(g))
    }

    pub fn copair(f: Derivation, g: Derivation) -> Self {
        Derivation::Copair(Box::new(f), Box::new(g))
    }

    /// Source and target, or a type error naming the first ill-typed node.
    pub fn endpoints(&self) -> Result<(Formula, Formula)> {
        use Derivation::*;
        Ok(match self {
            Id(a) => (a.clone(), a.clone()),
            K1Conj(a, b) => (Formula::conj(a.clone(), b.clone()), a.clone()),
            K2Conj(a, b) => (Formula::conj(a.clone(), b.clone()), b.clone()),
            KTop(a) => (a.clone(), Formula::Truth),
            K1Disj(a, b) => (a.clone(), Formula::disj(a.clone(), b.clone())),
            K2Disj(a, b) => (b.clone(), Formula::disj(a.clone(), b.clone())),
            KBot(a) => (Formula::Falsum, a.clone()),
            Comp(g, f) => {
                let (a, b) = f.endpoints()?;
                let (b2, c) = g.endpoints()?;
                if b != b2 {
                    return Err(self.type_error(format!(
                        "the right factor has target {b} but the left factor has source {b2}"
                    )));
                }
                (a, c)
            }
            Pair(f, g) => {
                let (c, a) = f.endpoints()?;
                let (c2, b) = g.endpoints()?;
                if c != c2 {
                    return Err(
                        self.type_error(format!("components have different sources {c} and {c2}"))
                    );
                }
                (c, Formula::conj(a, b))
            }
            Copair(f, g) => {
                let (a, c) = f.endpoints()?;
                let (b, c2) = g.endpoints()?;
                if c != c2 {
                    return Err(
                        self.type_error(format!("components have different targets {c} and {c2}"))
                    );
                }
                (Formula::disj(a, b), c)
            }
        })
    }

    fn type_error(&self, message: String) -> Error {
        Error::Type {
            term: self.to_string(),
            message,
        }
    }

    /// Fails on the first constructor or formula the fragment excludes.
    pub fn check_fragment(&self, fragment: Fragment) -> Result<()> {
        use Derivation::*;
        match self {
            Id(a) => a.check_fragment(fragment),
            K1Conj(a, b) | K2Conj(a, b) => {
                let name = if matches!(self, K1Conj(..)) {
                    "pi1"
                } else {
                    "pi2"
                };
                fragment.require_named(Construct::Conj, name)?;
                a.check_fragment(fragment)?;
                b.check_fragment(fragment)
            }
            KTop(a) => {
                fragment.require_named(Construct::Truth, "bang")?;
                a.check_fragment(fragment)
            }
            K1Disj(a, b) | K2Disj(a, b) => {
                let name = if matches!(self, K1Disj(..)) {
                    "inl"
                } else {
                    "inr"
                };
                fragment.require_named(Construct::Disj, name)?;
                a.check_fragment(fragment)?;
                b.check_fragment(fragment)
            }
            KBot(a) => {
                fragment.require_named(Construct::Falsum, "abort")?;
                a.check_fragment(fragment)
            }
            Comp(g, f) => {
                f.check_fragment(fragment)?;
                g.check_fragment(fragment)
            }
            Pair(f, g) => {
                fragment.require_named(Construct::Conj, "pair")?;
                f.check_fragment(fragment)?;
                g.check_fragment(fragment)
            }
            Copair(f, g) => {
                fragment.require_named(Construct::Disj, "copair")?;
                f.check_fragment(fragment)?;
                g.check_fragment(fragment)
            }
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            Derivation::Comp(a, b) | Derivation::Pair(a, b) | Derivation::Copair(a, b) => {
                1 + a.size() + b.size()
            }
            _ => 1,
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Derivation::*;
        match self {
            Id(a) => write!(f, "id{{{a}}}"),
            K1Conj(a, b) => write!(f, "pi1{{{a}, {b}}}"),
            K2Conj(a, b) => write!(f, "pi2{{{a}, {b}}}"),
            KTop(a) => write!(f, "bang{{{a}}}"),
            K1Disj(a, b) => write!(f, "inl{{{a}, {b}}}"),
            K2Disj(a, b) => write!(f, "inr{{{a}, {b}}}"),
            KBot(a) => write!(f, "abort{{{a}}}"),
            Comp(g, h) => write!(f, "comp({g}, {h})"),
            Pair(g, h) => write!(f, "pair({g}, {h})"),
            Copair(g, h) => write!(f, "copair({g}, {h})"),
        }
    }
}

/// `G(A)`: the number of variable occurrences.
pub fn g_object(a: &Formula) -> usize {
    a.occurrences()
}

/// Which way cross edges point in translated derivations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    /// Every cross edge runs from a source node to a target node.
    #[default]
    SourceToTarget,
    /// Every cross edge runs from a target node to a source node.
    TargetToSource,
}

impl Orientation {
    fn linked(self, arrow: &SplitPreorder, i: usize, j: usize) -> bool {
        let (s, t) = (TaggedNode::source(i), TaggedNode::target(j));
        match self {
            Orientation::SourceToTarget => arrow.contains(s, t),
            Orientation::TargetToSource => arrow.contains(t, s),
        }
    }

    fn realize(self, edges: &PlainRelation) -> SplitPreorder {
        let arrow = SplitPreorder::from_relation(edges);
        match self {
            Orientation::SourceToTarget => arrow,
            Orientation::TargetToSource => arrow.converse(),
        }
    }
}

/// `G(d)`, with cross edges from source to target.
pub fn g_arrow(d: &Derivation) -> Result<SplitPreorder> {
    g_arrow_oriented(d, Orientation::SourceToTarget)
}

pub fn g_arrow_oriented(d: &Derivation, orientation: Orientation) -> Result<SplitPreorder> {
    translate(d, orientation).map(|(_, _, arrow)| arrow)
}

/// Type-checks and translates in one pass.
fn translate(d: &Derivation, o: Orientation) -> Result<(Formula, Formula, SplitPreorder)> {
    use Derivation::*;
    let shift_edges = |src: usize, tgt: usize, count: usize, src_off: usize, tgt_off: usize| {
        PlainRelation::from_pairs(src, tgt, (0..count).map(|i| (src_off + i, tgt_off + i)))
            .expect("projection edges are in range")
    };
    Ok(match d {
        // The unit among arrows that are images of plain relations: every
        // other clause produces such an image, and the full identity split
        // preorder would add target-to-source edges no pairing can match.
        Id(a) => {
            let n = a.occurrences();
            (a.clone(), a.clone(), o.realize(&PlainRelation::identity(n)))
        }
        K1Conj(a, b) => {
            let (ga, gb) = (a.occurrences(), b.occurrences());
            let arrow = o.realize(&shift_edges(ga + gb, ga, ga, 0, 0));
            (Formula::conj(a.clone(), b.clone()), a.clone(), arrow)
        }
        K2Conj(a, b) => {
            let (ga, gb) = (a.occurrences(), b.occurrences());
            let arrow = o.realize(&shift_edges(ga + gb, gb, gb, ga, 0));
            (Formula::conj(a.clone(), b.clone()), b.clone(), arrow)
        }
        KTop(a) => (
            a.clone(),
            Formula::Truth,
            SplitPreorder::discrete(a.occurrences(), 0),
        ),
        K1Disj(a, b) => {
            let (ga, gb) = (a.occurrences(), b.occurrences());
            let arrow = o.realize(&shift_edges(ga, ga + gb, ga, 0, 0));
            (a.clone(), Formula::disj(a.clone(), b.clone()), arrow)
        }
        K2Disj(a, b) => {
            let (ga, gb) = (a.occurrences(), b.occurrences());
            let arrow = o.realize(&shift_edges(gb, ga + gb, gb, 0, ga));
            (b.clone(), Formula::disj(a.clone(), b.clone()), arrow)
        }
        KBot(a) => (
            Formula::Falsum,
            a.clone(),
            SplitPreorder::discrete(0, a.occurrences()),
        ),
        Comp(g, f) => {
            let (a, b, gf) = translate(f, o)?;
            let (b2, c, gg) = translate(g, o)?;
            if b != b2 {
                return Err(d.type_error(format!(
                    "the right factor has target {b} but the left factor has source {b2}"
                )));
            }
            (a, c, SplitPreorder::compose(&gg, &gf)?)
        }
        Pair(f, g) => {
            let (c, a, gf) = translate(f, o)?;
            let (c2, b, gg) = translate(g, o)?;
            if c != c2 {
                return Err(d.type_error(format!("components have different sources {c} and {c2}")));
            }
            let (gc, ga, gb) = (c.occurrences(), a.occurrences(), b.occurrences());
            let mut edges = PlainRelation::empty(gc, ga + gb);
            for u in 0..gc {
                for v in 0..ga + gb {
                    let linked = if v < ga {
                        o.linked(&gf, u, v)
                    } else {
                        o.linked(&gg, u, v - ga)
                    };
                    if linked {
                        edges.insert(u, v)?;
                    }
                }
            }
            (c, Formula::conj(a, b), o.realize(&edges))
        }
        Copair(f, g) => {
            let (a, c, gf) = translate(f, o)?;
            let (b, c2, gg) = translate(g, o)?;
            if c != c2 {
                return Err(d.type_error(format!("components have different targets {c} and {c2}")));
            }
            let (gc, ga, gb) = (c.occurrences(), a.occurrences(), b.occurrences());
            let mut edges = PlainRelation::empty(ga + gb, gc);
            for u in 0..ga + gb {
                for v in 0..gc {
                    let linked = if u < ga {
                        o.linked(&gf, u, v)
                    } else {
                        o.linked(&gg, u - ga, v)
                    };
                    if linked {
                        edges.insert(u, v)?;
                    }
                }
            }
            (Formula::disj(a, b), c, o.realize(&edges))
        }
    })
}

/// Whether `f` and `g` have the same translation. Their endpoints must agree.
pub fn proof_equiv(f: &Derivation, g: &Derivation) -> Result<bool> {
    proof_equiv_oriented(f, g, Orientation::SourceToTarget)
}

pub fn proof_equiv_oriented(f: &Derivation, g: &Derivation, o: Orientation) -> Result<bool> {
    let (fa, fb, gf) = translate(f, o)?;
    let (ga, gb, gg) = translate(g, o)?;
    if fa != ga || fb != gb {
        return Err(Error::EndpointMismatch {
            left: format!("{fa} -> {fb}"),
            right: format!("{ga} -> {gb}"),
        });
    }
    Ok(gf == gg)
}

#[cfg(test)]
mod tests {
    use super::*;

    const S: fn(usize) -> TaggedNode = TaggedNode::source;
    const T: fn(usize) -> TaggedNode = TaggedNode::target;

    fn v(name: &str) -> Formula {
        Formula::var(name)
    }

    fn figure_formula() -> Formula {
        Formula::conj(Formula::conj(v("p"), v("q")), Formula::Truth)
    }

    #[test]
    fn g_object_examples() {
        assert_eq!(g_object(&v("p")), 1);
        assert_eq!(g_object(&Formula::Truth), 0);
        let a = figure_formula();
        assert_eq!(g_object(&Formula::conj(a.clone(), v("r"))), 3);
        assert_eq!(g_object(&Formula::conj(a.clone(), a)), 4);
    }

    #[test]
    fn projections() {
        let k1 = g_arrow(&Derivation::K1Conj(v("p"), v("q"))).unwrap();
        assert_eq!((k1.src(), k1.tgt()), (2, 1));
        assert_eq!(k1.strict_pairs(), vec![(S(0), T(0))]);

        let k2 = g_arrow(&Derivation::K2Conj(v("p"), v("q"))).unwrap();
        assert_eq!(k2.strict_pairs(), vec![(S(1), T(0))]);

        let bang = g_arrow(&Derivation::KTop(Formula::conj(v("p"), v("q")))).unwrap();
        assert_eq!((bang.src(), bang.tgt()), (2, 0));
        assert!(bang.strict_pairs().is_empty());
    }

    #[test]
    fn injections_and_abort() {
        let a = Formula::conj(v("p"), v("q"));
        let inr = g_arrow(&Derivation::K2Disj(a.clone(), v("r"))).unwrap();
        assert_eq!((inr.src(), inr.tgt()), (1, 3));
        assert_eq!(inr.strict_pairs(), vec![(S(0), T(2))]);

        let inl = g_arrow(&Derivation::K1Disj(a, v("r"))).unwrap();
        assert_eq!(inl.strict_pairs(), vec![(S(0), T(0)), (S(1), T(1))]);

        let abort = g_arrow(&Derivation::KBot(v("p"))).unwrap();
        assert_eq!((abort.src(), abort.tgt()), (0, 1));
        assert!(abort.strict_pairs().is_empty());
    }

    #[test]
    fn figure_arrow() {
        let a = figure_formula();
        let d = Derivation::comp(
            Derivation::pair(Derivation::Id(a.clone()), Derivation::Id(a.clone())),
            Derivation::K1Conj(a, v("r")),
        );
        let g = g_arrow(&d).unwrap();
        assert_eq!((g.src(), g.tgt()), (3, 4));
        assert_eq!(
            g.strict_pairs(),
            vec![(S(0), T(0)), (S(0), T(2)), (S(1), T(1)), (S(1), T(3))]
        );
    }

    #[test]
    fn copair_mirrors_pair() {
        // [inl, inr] : p \/ q -> p \/ q
        let d = Derivation::copair(
            Derivation::K1Disj(v("p"), v("q")),
            Derivation::K2Disj(v("p"), v("q")),
        );
        let id = Derivation::Id(Formula::disj(v("p"), v("q")));
        assert!(proof_equiv(&d, &id).unwrap());
        let unit = SplitPreorder::from_relation(&PlainRelation::identity(2));
        assert_eq!(g_arrow(&d).unwrap(), unit);
    }

    #[test]
    fn equivalence_examples() {
        let pq = Formula::conj(v("p"), v("q"));
        let f = Derivation::pair(
            Derivation::K1Conj(v("p"), v("q")),
            Derivation::K2Conj(v("p"), v("q")),
        );
        assert!(proof_equiv(&f, &f).unwrap());
        assert!(proof_equiv(&f, &Derivation::Id(pq)).unwrap());

        let k1 = Derivation::K1Conj(v("p"), v("p"));
        let k2 = Derivation::K2Conj(v("p"), v("p"));
        assert!(!proof_equiv(&k1, &k2).unwrap());

        let mismatch = proof_equiv(&k1, &Derivation::Id(v("p")));
        assert!(matches!(mismatch, Err(Error::EndpointMismatch { .. })));
    }

    #[test]
    fn ill_typed_is_rejected() {
        let k = Derivation::K1Conj(v("p"), v("q"));
        let bad = Derivation::comp(k.clone(), k.clone());
        assert!(matches!(g_arrow(&bad), Err(Error::Type { .. })));
        assert!(matches!(bad.endpoints(), Err(Error::Type { .. })));
        let bad = Derivation::pair(k, Derivation::Id(v("p")));
        assert!(matches!(g_arrow(&bad), Err(Error::Type { .. })));
    }

    #[test]
    fn fragments() {
        let bang = Derivation::KTop(v("p"));
        assert!(bang.check_fragment(Fragment::Conjunctive).is_ok());
        assert!(bang.check_fragment(Fragment::ConjDisj).is_err());
        let inl = Derivation::K1Disj(v("p"), v("q"));
        assert_eq!(
            inl.check_fragment(Fragment::Conjunctive),
            Err(Error::Fragment {
                construct: "inl".into(),
                fragment: "conj"
            })
        );
        let id_truth = Derivation::Id(Formula::Truth);
        assert!(id_truth.check_fragment(Fragment::Disjunctive).is_err());
        assert!(id_truth.check_fragment(Fragment::ConjDisjUnits).is_ok());
        assert_eq!("conj-disj".parse::<Fragment>(), Ok(Fragment::ConjDisj));
        assert!("bogus".parse::<Fragment>().is_err());
    }

    #[test]
    fn reversed_orientation_is_converse() {
        let a = figure_formula();
        let d = Derivation::comp(
            Derivation::pair(Derivation::Id(a.clone()), Derivation::Id(a.clone())),
            Derivation::K1Conj(a, v("r")),
        );
        let fwd = g_arrow(&d).unwrap();
        let back = g_arrow_oriented(&d, Orientation::TargetToSource).unwrap();
        assert_eq!(back, fwd.converse());
    }

    #[test]
    fn formula_display_is_minimal() {
        let f = Formula::conj(
            Formula::disj(v("p"), v("q")),
            Formula::conj(v("r"), Formula::Truth),
        );
        assert_eq!(f.to_string(), "(p \\/ q) /\\ (r /\\ T)");
        let g = Formula::disj(
            Formula::disj(v("p"), Formula::Falsum),
            Formula::conj(v("a"), v("b")),
        );
        assert_eq!(g.to_string(), "p \\/ F \\/ a /\\ b");
        let h = Formula::conj(Formula::conj(v("p"), v("q")), v("r"));
        assert_eq!(h.to_string(), "p /\\ q /\\ r");
    }
}
