//! The representation of split preorders as relations between function spaces.
//!
//! An arrow `R: m -> n` is sent to the relation between `p^m` and `p^n` that
//! holds of `(f1, f2)` exactly when the glued function `[f1, f2]` on the
//! tagged universe is monotone for `R`. Functions are identified by their
//! base-`p` codes (see [`crate::cones`]).

use std::collections::HashMap;
use std::fmt;

use crate::cones::{is_monotone, Chain, FuncTable, DEFAULT_FUNCTION_CAP};
use crate::error::{Error, Result};
use crate::relcore::{compose_plain, PlainRelation};
use crate::splitpre::SplitPreorder;

/// An arrow of Rel between `p^m` and `p^n`, as a relation on codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelArrow {
    rel: PlainRelation,
}

impl RelArrow {
    pub fn identity(size: usize) -> Self {
        RelArrow {
            rel: PlainRelation::identity(size),
        }
    }

    pub fn from_relation(rel: PlainRelation) -> Self {
        RelArrow { rel }
    }

    pub fn dom_size(&self) -> usize {
        self.rel.dom()
    }

    pub fn cod_size(&self) -> usize {
        self.rel.cod()
    }

    pub fn contains(&self, code1: usize, code2: usize) -> bool {
        self.rel.contains(code1, code2)
    }

    /// Code pairs in increasing order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rel.pairs()
    }

    pub fn len(&self) -> usize {
        self.rel.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rel.is_empty()
    }

    pub fn relation(&self) -> &PlainRelation {
        &self.rel
    }

    /// Relational composite `second ∘ first`.
    pub fn compose(second: &RelArrow, first: &RelArrow) -> Result<RelArrow> {
        Ok(RelArrow {
            rel: compose_plain(&first.rel, &second.rel)?,
        })
    }
}

/// `[f1, f2]`: `f1` on the source nodes followed by `f2` on the target nodes.
pub fn pair_glue(f1: &FuncTable, f2: &FuncTable) -> FuncTable {
    let mut values = Vec::with_capacity(f1.domain_size() + f2.domain_size());
    values.extend_from_slice(f1.values());
    values.extend_from_slice(f2.values());
    FuncTable::new(values)
}

/// The image of `r` in Rel.
pub fn repr_arrow(chain: Chain, r: &SplitPreorder) -> Result<RelArrow> {
    repr_arrow_capped(chain, r, DEFAULT_FUNCTION_CAP)
}

/// As [`repr_arrow`], refusing when `p^(m+n)` exceeds `cap`.
pub fn repr_arrow_capped(chain: Chain, r: &SplitPreorder, cap: usize) -> Result<RelArrow> {
    let (m, n) = (r.src(), r.tgt());
    chain.function_space_size(m + n, cap)?;
    let dom = chain.function_space_size(m, cap)?;
    let cod = chain.function_space_size(n, cap)?;
    let strict: Vec<(usize, usize)> = r.relation().pairs().filter(|(i, j)| i != j).collect();
    let sources: Vec<FuncTable> = (0..dom).map(|c| FuncTable::decode(c, m, chain)).collect();
    let targets: Vec<FuncTable> = (0..cod).map(|c| FuncTable::decode(c, n, chain)).collect();

    let mut rel = PlainRelation::empty(dom, cod);
    for (c1, f1) in sources.iter().enumerate() {
        for (c2, f2) in targets.iter().enumerate() {
            let glued = pair_glue(f1, f2);
            if strict.iter().all(|&(i, j)| glued.get(i) <= glued.get(j)) {
                rel.insert(c1, c2)?;
            }
        }
    }
    Ok(RelArrow { rel })
}

/// A middle function `f3` with `(f1, f3)` in the image of `first` and
/// `(f3, f2)` in the image of `second`, for `(f1, f2)` in the image of
/// `second ∗ first`.
///
/// `f3(y)` is the largest value of `f1` on sources and `f2` on targets that
/// reach the middle node `y` in the glued working relation, or 0 when none do.
pub fn glue_witness(
    chain: Chain,
    first: &SplitPreorder,
    second: &SplitPreorder,
    f1: &FuncTable,
    f2: &FuncTable,
) -> Result<FuncTable> {
    let (m, n, k) = (first.src(), first.tgt(), second.tgt());
    if f1.domain_size() != m {
        return Err(Error::SizeMismatch {
            context: "witness source function",
            expected: m,
            found: f1.domain_size(),
        });
    }
    if f2.domain_size() != k {
        return Err(Error::SizeMismatch {
            context: "witness target function",
            expected: k,
            found: f2.domain_size(),
        });
    }
    let composite = SplitPreorder::compose(second, first)?;
    if !is_monotone(composite.relation(), &pair_glue(f1, f2)) {
        return Err(Error::WitnessPrecondition {
            code1: f1.encode(chain),
            code2: f2.encode(chain),
        });
    }

    let closed = SplitPreorder::working_closure(second, first)?;
    let values = (0..n)
        .map(|y| {
            let mid = m + y;
            let from_sources = (0..m)
                .filter(|&x| closed.contains(x, mid))
                .map(|x| f1.get(x));
            let from_targets = (0..k)
                .filter(|&z| closed.contains(m + n + z, mid))
                .map(|z| f2.get(z));
            from_sources.chain(from_targets).max().unwrap_or(0)
        })
        .collect();
    Ok(FuncTable::new(values))
}

/// First failure found by a `verify_*` sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// A code pair lies in exactly one of `F(second ∗ first)` and
    /// `F(second) ∘ F(first)`.
    Functoriality {
        first: SplitPreorder,
        second: SplitPreorder,
        code1: usize,
        code2: usize,
        in_composite_image: bool,
    },
    /// Two distinct arrows with the same image.
    Faithfulness {
        left: SplitPreorder,
        right: SplitPreorder,
    },
    /// The glued witness fails one of its two monotonicity conditions.
    Witness {
        first: SplitPreorder,
        second: SplitPreorder,
        code1: usize,
        code2: usize,
        witness: FuncTable,
    },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Functoriality {
                first,
                second,
                code1,
                code2,
                in_composite_image,
            } => {
                let side = if *in_composite_image {
                    "image of the composite only"
                } else {
                    "composite of the images only"
                };
                write!(
                    f,
                    "functoriality fails at codes ({code1}, {code2}) [{side}] for first = {first}, second = {second}"
                )
            }
            Counterexample::Faithfulness { left, right } => {
                write!(f, "same image for {left} and {right}")
            }
            Counterexample::Witness {
                first,
                second,
                code1,
                code2,
                witness,
            } => write!(
                f,
                "witness {:?} fails at codes ({code1}, {code2}) for first = {first}, second = {second}",
                witness.values()
            ),
        }
    }
}

/// Outcome of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    /// Items examined (code pairs, arrows, or witness instances).
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Compares `F(second ∗ first)` with `F(second) ∘ F(first)`.
pub fn verify_functoriality(
    chain: Chain,
    first: &SplitPreorder,
    second: &SplitPreorder,
) -> Result<Verdict> {
    let composite = SplitPreorder::compose(second, first)?;
    let left = repr_arrow(chain, &composite)?;
    let right = RelArrow::compose(&repr_arrow(chain, second)?, &repr_arrow(chain, first)?)?;
    let checked = left.dom_size() * left.cod_size();
    let counterexample = if left == right {
        None
    } else {
        (0..left.dom_size())
            .flat_map(|c1| (0..left.cod_size()).map(move |c2| (c1, c2)))
            .find(|&(c1, c2)| left.contains(c1, c2) != right.contains(c1, c2))
            .map(|(code1, code2)| Counterexample::Functoriality {
                first: first.clone(),
                second: second.clone(),
                code1,
                code2,
                in_composite_image: left.contains(code1, code2),
            })
    };
    Ok(Verdict {
        checked,
        counterexample,
    })
}

/// Checks that the representation is injective on every arrow `m -> n`.
pub fn verify_faithfulness(m: usize, n: usize, chain: Chain) -> Result<Verdict> {
    let mut seen: HashMap<RelArrow, SplitPreorder> = HashMap::new();
    let mut checked = 0;
    for arrow in crate::splitpre::enumerate_split_preorders(m, n)? {
        checked += 1;
        let image = repr_arrow(chain, &arrow)?;
        if let Some(previous) = seen.get(&image) {
            return Ok(Verdict {
                checked,
                counterexample: Some(Counterexample::Faithfulness {
                    left: previous.clone(),
                    right: arrow,
                }),
            });
        }
        seen.insert(image, arrow);
    }
    Ok(Verdict {
        checked,
        counterexample: None,
    })
}

/// Runs [`glue_witness`] on every `(f1, f2)` in the image of `second ∗ first`
/// and checks both of its monotonicity conditions.
pub fn verify_witness(
    chain: Chain,
    first: &SplitPreorder,
    second: &SplitPreorder,
) -> Result<Verdict> {
    let composite = SplitPreorder::compose(second, first)?;
    let image = repr_arrow(chain, &composite)?;
    let (m, k) = (first.src(), second.tgt());
    let mut checked = 0;
    for (code1, code2) in image.pairs() {
        checked += 1;
        let f1 = FuncTable::decode(code1, m, chain);
        let f2 = FuncTable::decode(code2, k, chain);
        let f3 = glue_witness(chain, first, second, &f1, &f2)?;
        let ok = is_monotone(first.relation(), &pair_glue(&f1, &f3))
            && is_monotone(second.relation(), &pair_glue(&f3, &f2));
        if !ok {
            return Ok(Verdict {
                checked,
                counterexample: Some(Counterexample::Witness {
                    first: first.clone(),
                    second: second.clone(),
                    code1,
                    code2,
                    witness: f3,
                }),
            });
        }
    }
    Ok(Verdict {
        checked,
        counterexample: None,
    })
}
