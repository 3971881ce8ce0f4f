//! Split preorders between finite ordinals and their closure-based composition.
//!
//! A split preorder `m -> n` is a preorder on the tagged universe
//! `{s0, .., s(m-1)} ∪ {t0, .., t(n-1)}`. Internally the universe is laid out
//! as `[0..m)` for source nodes followed by `[m..m+n)` for target nodes, and
//! the stored relation is always the full reflexive-transitive closure.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::relcore::{enumerate_preorders, FiniteRelation, PlainRelation, MAX_ENUMERATION_SIZE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeTag {
    Source,
    Target,
}

/// A node of `X^s ∪ Y^t`. Orders by tag (sources first), then index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaggedNode {
    pub tag: NodeTag,
    pub index: usize,
}

impl TaggedNode {
    pub const fn source(index: usize) -> Self {
        TaggedNode {
            tag: NodeTag::Source,
            index,
        }
    }

    pub const fn target(index: usize) -> Self {
        TaggedNode {
            tag: NodeTag::Target,
            index,
        }
    }
}

impl fmt::Display for TaggedNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            NodeTag::Source => write!(f, "s{}", self.index),
            NodeTag::Target => write!(f, "t{}", self.index),
        }
    }
}

impl FromStr for TaggedNode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (tag, rest) = match s.as_bytes().first() {
            Some(b's') => (NodeTag::Source, &s[1..]),
            Some(b't') => (NodeTag::Target, &s[1..]),
            _ => return Err(format!("expected a node like `s0` or `t1`, found `{s}`")),
        };
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("expected a node like `s0` or `t1`, found `{s}`"));
        }
        let index = rest
            .parse()
            .map_err(|_| format!("node index too large in `{s}`"))?;
        Ok(TaggedNode { tag, index })
    }
}

/// Maps a tagged node to its position in the `[sources | targets]` layout.
fn slot(src: usize, tgt: usize, node: TaggedNode) -> Result<usize> {
    match node.tag {
        NodeTag::Source if node.index < src => Ok(node.index),
        NodeTag::Target if node.index < tgt => Ok(src + node.index),
        NodeTag::Source => Err(Error::IndexOutOfRange {
            index: node.index,
            size: src,
        }),
        NodeTag::Target => Err(Error::IndexOutOfRange {
            index: node.index,
            size: tgt,
        }),
    }
}

fn node_at(src: usize, position: usize) -> TaggedNode {
    if position < src {
        TaggedNode::source(position)
    } else {
        TaggedNode::target(position - src)
    }
}

/// An arbitrary relation on `X^s ∪ Y^t`, before any closure is taken.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitRelation {
    src: usize,
    tgt: usize,
    rel: FiniteRelation,
}

impl SplitRelation {
    pub fn empty(src: usize, tgt: usize) -> Self {
        SplitRelation {
            src,
            tgt,
            rel: FiniteRelation::empty(src + tgt),
        }
    }

    pub fn from_pairs<I>(src: usize, tgt: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (TaggedNode, TaggedNode)>,
    {
        let mut out = Self::empty(src, tgt);
        for (u, v) in pairs {
            out.insert(u, v)?;
        }
        Ok(out)
    }

    pub fn insert(&mut self, u: TaggedNode, v: TaggedNode) -> Result<()> {
        let i = slot(self.src, self.tgt, u)?;
        let j = slot(self.src, self.tgt, v)?;
        self.rel.insert(i, j)
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    /// The least split preorder containing this relation.
    pub fn closure(&self) -> SplitPreorder {
        SplitPreorder {
            src: self.src,
            tgt: self.tgt,
            rel: self.rel.preorder_closure(),
        }
    }

    /// Succeeds only if the relation is already reflexive and transitive.
    pub fn into_preorder(self) -> Result<SplitPreorder> {
        SplitPreorder::new(self.src, self.tgt, self.rel)
    }
}

/// An arrow `src -> tgt` of the category of split preorders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitPreorder {
    src: usize,
    tgt: usize,
    rel: FiniteRelation,
}

impl SplitPreorder {
    /// Wraps a relation laid out as `[sources | targets]`, checking that it
    /// is a preorder.
    pub fn new(src: usize, tgt: usize, rel: FiniteRelation) -> Result<Self> {
        if rel.size() != src + tgt {
            return Err(Error::SizeMismatch {
                context: "split preorder universe",
                expected: src + tgt,
                found: rel.size(),
            });
        }
        if !rel.is_reflexive() {
            return Err(Error::NotSplitPreorder("relation is not reflexive"));
        }
        if !rel.is_transitive() {
            return Err(Error::NotSplitPreorder("relation is not transitive"));
        }
        Ok(SplitPreorder { src, tgt, rel })
    }

    /// The closure of the listed generator pairs.
    pub fn generated_by<I>(src: usize, tgt: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (TaggedNode, TaggedNode)>,
    {
        Ok(SplitRelation::from_pairs(src, tgt, pairs)?.closure())
    }

    /// `1_n`: nodes are related iff their indices agree, whatever the tags.
    pub fn identity(n: usize) -> Self {
        let mut rel = FiniteRelation::empty(2 * n);
        for i in 0..n {
            for a in [i, n + i] {
                for b in [i, n + i] {
                    rel.insert(a, b).expect("identity indices are in range");
                }
            }
        }
        SplitPreorder {
            src: n,
            tgt: n,
            rel,
        }
    }

    /// The split preorder whose strictification is `r`, read as edges
    /// `s_i -> t_j`.
    pub fn from_relation(r: &PlainRelation) -> Self {
        let (src, tgt) = (r.dom(), r.cod());
        let mut rel = FiniteRelation::diagonal(src + tgt);
        for (i, j) in r.pairs() {
            rel.insert(i, src + j)
                .expect("plain relation indices are in range");
        }
        SplitPreorder { src, tgt, rel }
    }

    /// The diagonal-only arrow `src -> tgt`.
    pub fn discrete(src: usize, tgt: usize) -> Self {
        SplitPreorder {
            src,
            tgt,
            rel: FiniteRelation::diagonal(src + tgt),
        }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    /// Underlying relation in the `[sources | targets]` layout.
    pub fn relation(&self) -> &FiniteRelation {
        &self.rel
    }

    pub fn contains(&self, u: TaggedNode, v: TaggedNode) -> bool {
        match (slot(self.src, self.tgt, u), slot(self.src, self.tgt, v)) {
            (Ok(i), Ok(j)) => self.rel.contains(i, j),
            _ => false,
        }
    }

    /// Non-diagonal pairs, sorted by (tag, index) on both sides.
    pub fn strict_pairs(&self) -> Vec<(TaggedNode, TaggedNode)> {
        self.rel
            .pairs()
            .filter(|(i, j)| i != j)
            .map(|(i, j)| (node_at(self.src, i), node_at(self.src, j)))
            .collect()
    }

    /// The `s_i -> t_j` pairs as a plain relation `src -> tgt`.
    pub fn cross_relation(&self) -> PlainRelation {
        let mut out = PlainRelation::empty(self.src, self.tgt);
        for i in 0..self.src {
            for j in 0..self.tgt {
                if self.rel.contains(i, self.src + j) {
                    out.insert(i, j).expect("in range");
                }
            }
        }
        out
    }

    /// Whether the strict part only has `s -> t` edges, i.e. the arrow is the
    /// image of a plain relation under [`SplitPreorder::from_relation`].
    pub fn is_plain(&self) -> bool {
        self.strict_pairs()
            .iter()
            .all(|(u, v)| u.tag == NodeTag::Source && v.tag == NodeTag::Target)
    }

    /// `R^{-t}` placed in a working universe of `src + tgt + rest` nodes:
    /// source nodes go to the first zone and target nodes to the middle zone.
    pub fn untarget(&self, rest: usize) -> FiniteRelation {
        let mut out = FiniteRelation::empty(self.src + self.tgt + rest);
        for (i, j) in self.rel.pairs() {
            out.insert(i, j).expect("zones fit the working universe");
        }
        out
    }

    /// `P^{-s}` placed in a working universe of `before + src + tgt` nodes:
    /// source nodes go to the middle zone and target nodes to the last zone.
    pub fn unsource(&self, before: usize) -> FiniteRelation {
        let mut out = FiniteRelation::empty(before + self.src + self.tgt);
        for (i, j) in self.rel.pairs() {
            out.insert(before + i, before + j)
                .expect("zones fit the working universe");
        }
        out
    }

    /// `Tr(R^{-t} ∪ P^{-s})` for `first: m -> n` and `second: n -> k`, on the
    /// `m + n + k` working universe.
    pub fn working_closure(
        second: &SplitPreorder,
        first: &SplitPreorder,
    ) -> Result<FiniteRelation> {
        if first.tgt != second.src {
            return Err(Error::SizeMismatch {
                context: "composite of split preorders",
                expected: first.tgt,
                found: second.src,
            });
        }
        let glued = first
            .untarget(second.tgt)
            .union(&second.unsource(first.src))?;
        Ok(glued.transitive_closure())
    }

    /// `second ∗ first` for `first: m -> n` and `second: n -> k`.
    pub fn compose(second: &SplitPreorder, first: &SplitPreorder) -> Result<SplitPreorder> {
        let closed = Self::working_closure(second, first)?;
        let (m, n, k) = (first.src, first.tgt, second.tgt);
        let keep: Vec<usize> = (0..m).chain(m + n..m + n + k).collect();
        Ok(SplitPreorder {
            src: m,
            tgt: k,
            rel: closed.restrict(&keep),
        })
    }

    /// `self ∗ first`.
    pub fn after(&self, first: &SplitPreorder) -> Result<SplitPreorder> {
        Self::compose(self, first)
    }

    /// Transitive closure of the symmetric closure: a split equivalence.
    pub fn to_split_equivalence(&self) -> SplitPreorder {
        SplitPreorder {
            src: self.src,
            tgt: self.tgt,
            rel: self.rel.symmetric_closure().transitive_closure(),
        }
    }

    /// Same endpoints, every pair reversed.
    pub fn converse(&self) -> SplitPreorder {
        SplitPreorder {
            src: self.src,
            tgt: self.tgt,
            rel: self.rel.converse(),
        }
    }

    /// Random arrow: closure of a relation where each off-diagonal pair is
    /// present with probability `density`.
    pub fn random<R: Rng + ?Sized>(src: usize, tgt: usize, density: f64, rng: &mut R) -> Self {
        SplitPreorder {
            src,
            tgt,
            rel: FiniteRelation::random(src + tgt, density, rng).preorder_closure(),
        }
    }
}

impl fmt::Display for SplitPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} {{", self.src, self.tgt)?;
        for (n, (u, v)) in self.strict_pairs().into_iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, " ({u},{v})")?;
        }
        write!(f, " }}")
    }
}

/// All split preorders `m -> n`, in the order of the underlying preorder
/// enumeration on the `m + n` universe.
pub fn enumerate_split_preorders(
    m: usize,
    n: usize,
) -> Result<impl Iterator<Item = SplitPreorder>> {
    if m + n > MAX_ENUMERATION_SIZE {
        return Err(Error::BoundExceeded {
            what: "split preorder enumeration size m + n",
            value: (m + n) as u128,
            limit: MAX_ENUMERATION_SIZE as u128,
        });
    }
    Ok(enumerate_preorders(m + n)?.map(move |rel| SplitPreorder {
        src: m,
        tgt: n,
        rel,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    const S: fn(usize) -> TaggedNode = TaggedNode::source;
    const T: fn(usize) -> TaggedNode = TaggedNode::target;

    fn gen(src: usize, tgt: usize, pairs: &[(TaggedNode, TaggedNode)]) -> SplitPreorder {
        SplitPreorder::generated_by(src, tgt, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn identity_examples() {
        let id0 = SplitPreorder::identity(0);
        assert_eq!((id0.src(), id0.tgt()), (0, 0));
        assert!(id0.relation().is_empty());

        let id1 = SplitPreorder::identity(1);
        assert_eq!(id1.relation().len(), 4);
        for u in [S(0), T(0)] {
            for v in [S(0), T(0)] {
                assert!(id1.contains(u, v));
            }
        }

        let id2 = SplitPreorder::identity(2);
        assert_eq!(id2.relation().len(), 8);
        assert!(id2.contains(S(1), T(1)));
        assert!(id2.contains(T(0), S(0)));
        assert!(!id2.contains(S(0), T(1)));
        assert!(!id2.contains(S(0), S(1)));
    }

    #[test]
    fn untarget_and_unsource_zones() {
        let id1 = SplitPreorder::identity(1);
        let x0y0 = FiniteRelation::full(2);
        assert_eq!(id1.untarget(0), x0y0);
        assert_eq!(id1.unsource(0), x0y0);

        // with a three-zone universe: untarget lives on zones X,Y; unsource on Y,Z
        let up = id1.untarget(1);
        assert_eq!(
            up,
            FiniteRelation::from_pairs(3, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap()
        );
        let down = id1.unsource(1);
        assert_eq!(
            down,
            FiniteRelation::from_pairs(3, [(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap()
        );

        let empty_src = SplitPreorder::discrete(0, 2);
        let r = empty_src.untarget(0);
        assert!(r.pairs().all(|(i, j)| i < 2 && j < 2));
    }

    #[test]
    fn compose_examples() {
        let id2 = SplitPreorder::identity(2);
        assert_eq!(SplitPreorder::compose(&id2, &id2).unwrap(), id2);

        let r = gen(1, 2, &[(S(0), T(0))]);
        let p = gen(2, 1, &[(S(0), T(0))]);
        let pr = SplitPreorder::compose(&p, &r).unwrap();
        assert_eq!(pr.strict_pairs(), vec![(S(0), T(0))]);

        let p = gen(2, 1, &[(S(1), T(0))]);
        let pr = SplitPreorder::compose(&p, &r).unwrap();
        assert!(pr.strict_pairs().is_empty());

        let r = gen(1, 2, &[(S(0), T(0)), (T(0), T(1)), (S(0), T(1))]);
        let pr = SplitPreorder::compose(&p, &r).unwrap();
        assert_eq!(pr.strict_pairs(), vec![(S(0), T(0))]);
    }

    #[test]
    fn compose_size_mismatch() {
        let err = SplitPreorder::compose(&SplitPreorder::identity(1), &SplitPreorder::identity(2));
        assert!(matches!(err, Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn from_relation_examples() {
        let none = PlainRelation::empty(1, 1);
        assert_eq!(
            SplitPreorder::from_relation(&none),
            SplitPreorder::discrete(1, 1)
        );
        let one = PlainRelation::from_pairs(1, 1, [(0, 0)]).unwrap();
        let arrow = SplitPreorder::from_relation(&one);
        assert_eq!(arrow.strict_pairs(), vec![(S(0), T(0))]);
        assert!(arrow.is_plain());
        assert_eq!(arrow.cross_relation(), one);
    }

    #[test]
    fn split_equivalence_examples() {
        for n in 0..4 {
            let id = SplitPreorder::identity(n);
            assert_eq!(id.to_split_equivalence(), id);
        }
        let a = gen(1, 1, &[(S(0), T(0))]);
        let e = a.to_split_equivalence();
        assert_eq!(e.strict_pairs(), vec![(S(0), T(0)), (T(0), S(0))]);
        assert!(e.relation().is_equivalence());
    }

    #[test]
    fn converse_examples() {
        for n in 0..4 {
            let id = SplitPreorder::identity(n);
            assert_eq!(id.converse(), id);
        }
        let a = gen(2, 1, &[(S(1), T(0)), (T(0), S(0))]);
        assert_eq!(a.converse().converse(), a);
        let one = SplitPreorder::from_relation(&PlainRelation::from_pairs(1, 1, [(0, 0)]).unwrap());
        assert_eq!(one.converse().strict_pairs(), vec![(T(0), S(0))]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_split_preorders(0, 0).unwrap().count(), 1);
        assert_eq!(enumerate_split_preorders(1, 1).unwrap().count(), 4);
        assert_eq!(enumerate_split_preorders(2, 2).unwrap().count(), 355);
        assert!(enumerate_split_preorders(3, 2).is_err());
    }

    #[test]
    fn equality_examples() {
        assert_eq!(SplitPreorder::identity(2), SplitPreorder::identity(2));
        let one = SplitPreorder::from_relation(&PlainRelation::from_pairs(1, 1, [(0, 0)]).unwrap());
        assert_ne!(SplitPreorder::identity(1), one);
        assert_ne!(SplitPreorder::identity(1), SplitPreorder::identity(2));
        // same universe size, different split
        assert_ne!(SplitPreorder::discrete(1, 2), SplitPreorder::discrete(2, 1));
    }

    #[test]
    fn new_rejects_non_preorders() {
        let r = FiniteRelation::from_pairs(2, [(0, 1)]).unwrap();
        assert!(matches!(
            SplitPreorder::new(1, 1, r),
            Err(Error::NotSplitPreorder(_))
        ));
        let r = FiniteRelation::from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]).unwrap();
        assert!(SplitPreorder::new(2, 1, r).is_err());
        assert!(SplitPreorder::new(2, 2, FiniteRelation::diagonal(3)).is_err());
    }

    #[test]
    fn tagged_node_text() {
        assert_eq!("s0".parse::<TaggedNode>().unwrap(), S(0));
        assert_eq!("t12".parse::<TaggedNode>().unwrap(), T(12));
        assert!("x1".parse::<TaggedNode>().is_err());
        assert!("s".parse::<TaggedNode>().is_err());
        assert!("s-1".parse::<TaggedNode>().is_err());
        assert_eq!(T(3).to_string(), "t3");
        assert!(S(5) < T(0));
    }
}
