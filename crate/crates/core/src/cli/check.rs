//! Law sweeps behind `brauerian check`.

use std::collections::HashSet;
use std::fmt::Write as _;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::text::emit_split_text;
use crate::brauer::{self, Counterexample};
use crate::cones::{self, Chain};
use crate::error::Result;
use crate::relcore::{compose_plain, FiniteRelation, PlainRelation};
use crate::splitpre::{enumerate_split_preorders, SplitPreorder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Law {
    /// Identity arrows are two-sided units.
    Identity,
    /// Composition is associative.
    Assoc,
    /// The representation preserves composition.
    Functor,
    /// The representation is injective on one hom-set.
    Faithful,
    /// The glued middle function satisfies both halves of a composite.
    Witness,
    /// Cone-function characterizations of reflexivity, transitivity and preorders.
    Cones,
    /// Plain relations compose as split preorders the way they compose as relations.
    Embedding,
    /// Converse commutes with composition.
    Converse,
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Largest object size in exhaustive sweeps.
    pub max: usize,
    pub chain: Chain,
    /// Hom-set for the faithfulness check.
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    /// Number of random instances for the sampled laws.
    pub samples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max: 2,
            chain: Chain::TWO,
            m: 2,
            n: 2,
            seed: 0,
            samples: 1000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub law: Law,
    pub checked: usize,
    pub detail: String,
    /// Counterexample rendered for the terminal, arrows in the text format.
    pub failure: Option<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// All arrows indexed by `[src][tgt]` for sizes up to `max`.
fn hom_sets(max: usize) -> Result<Vec<Vec<Vec<SplitPreorder>>>> {
    (0..=max)
        .map(|m| {
            (0..=max)
                .map(|n| Ok(enumerate_split_preorders(m, n)?.collect()))
                .collect()
        })
        .collect()
}

fn arrows_text(label: &str, arrows: &[&SplitPreorder]) -> String {
    let mut out = format!("{label}\n");
    for (i, a) in arrows.iter().enumerate() {
        writeln!(out, "-- arrow {}", i + 1).expect("writing to a String");
        out.push_str(&emit_split_text(a));
    }
    out
}

fn counterexample_text(c: &Counterexample) -> String {
    match c {
        Counterexample::Functoriality { first, second, .. }
        | Counterexample::Witness { first, second, .. } => {
            arrows_text(&c.to_string(), &[first, second])
        }
        Counterexample::Faithfulness { left, right } => arrows_text(&c.to_string(), &[left, right]),
    }
}

pub fn run_law(law: Law, opts: &CheckOptions) -> Result<LawReport> {
    match law {
        Law::Identity => identity(opts),
        Law::Assoc => assoc(opts),
        Law::Functor => functor(opts),
        Law::Faithful => faithful(opts),
        Law::Witness => witness(opts),
        Law::Cones => cones_law(opts),
        Law::Embedding => embedding(opts),
        Law::Converse => converse(opts),
    }
}

fn identity(opts: &CheckOptions) -> Result<LawReport> {
    let homs = hom_sets(opts.max)?;
    let mut checked = 0;
    for (m, row) in homs.iter().enumerate() {
        for (n, arrows) in row.iter().enumerate() {
            let (id_m, id_n) = (SplitPreorder::identity(m), SplitPreorder::identity(n));
            for r in arrows {
                checked += 1;
                if SplitPreorder::compose(&id_n, r)? != *r
                    || SplitPreorder::compose(r, &id_m)? != *r
                {
                    return Ok(LawReport {
                        law: Law::Identity,
                        checked,
                        detail: String::new(),
                        failure: Some(arrows_text("identity law fails for", &[r])),
                    });
                }
            }
        }
    }
    let top = homs[opts.max][opts.max].len();
    Ok(LawReport {
        law: Law::Identity,
        checked,
        detail: format!("{top} arrows at ({0},{0})", opts.max),
        failure: None,
    })
}

fn random_shape<R: Rng>(rng: &mut R, max: usize) -> SplitPreorder {
    let (m, n) = (rng.gen_range(0..=max), rng.gen_range(0..=max));
    let density = rng.gen_range(0.1..0.5);
    SplitPreorder::random(m, n, density, rng)
}

fn random_composable<R: Rng>(rng: &mut R, first: &SplitPreorder, max: usize) -> SplitPreorder {
    let k = rng.gen_range(0..=max);
    let density = rng.gen_range(0.1..0.5);
    SplitPreorder::random(first.tgt(), k, density, rng)
}

fn assoc(opts: &CheckOptions) -> Result<LawReport> {
    let assoc_fails = |r: &SplitPreorder, p: &SplitPreorder, t: &SplitPreorder| -> Result<bool> {
        let left = SplitPreorder::compose(t, &SplitPreorder::compose(p, r)?)?;
        let right = SplitPreorder::compose(&SplitPreorder::compose(t, p)?, r)?;
        Ok(left != right)
    };
    let fail = |checked, r: &SplitPreorder, p: &SplitPreorder, t: &SplitPreorder| LawReport {
        law: Law::Assoc,
        checked,
        detail: String::new(),
        failure: Some(arrows_text("associativity fails for", &[r, p, t])),
    };

    let small = hom_sets(opts.max.min(1))?;
    let from: Vec<Vec<SplitPreorder>> = small.iter().map(|row| row.concat()).collect();
    let mut exhaustive = 0;
    for rs in &from {
        for r in rs {
            for p in &from[r.tgt()] {
                for t in &from[p.tgt()] {
                    exhaustive += 1;
                    if assoc_fails(r, p, t)? {
                        return Ok(fail(exhaustive, r, p, t));
                    }
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for i in 0..opts.samples {
        let r = random_shape(&mut rng, 3);
        let p = random_composable(&mut rng, &r, 3);
        let t = random_composable(&mut rng, &p, 3);
        if assoc_fails(&r, &p, &t)? {
            return Ok(fail(exhaustive + i + 1, &r, &p, &t));
        }
    }
    Ok(LawReport {
        law: Law::Assoc,
        checked: exhaustive + opts.samples,
        detail: format!(
            "{exhaustive} exhaustive triples, {} random triples (seed {})",
            opts.samples, opts.seed
        ),
        failure: None,
    })
}

fn composable_pairs(
    homs: &[Vec<Vec<SplitPreorder>>],
) -> impl Iterator<Item = (&SplitPreorder, &SplitPreorder)> {
    homs.iter().flat_map(move |row| {
        row.iter().enumerate().flat_map(move |(n, firsts)| {
            firsts.iter().flat_map(move |r| {
                homs[n]
                    .iter()
                    .flat_map(move |seconds| seconds.iter().map(move |q| (r, q)))
            })
        })
    })
}

fn functor(opts: &CheckOptions) -> Result<LawReport> {
    let homs = hom_sets(opts.max)?;
    let mut checked = 0;
    for (r, q) in composable_pairs(&homs) {
        checked += 1;
        let verdict = brauer::verify_functoriality(opts.chain, r, q)?;
        if let Some(c) = verdict.counterexample {
            return Ok(LawReport {
                law: Law::Functor,
                checked,
                detail: String::new(),
                failure: Some(counterexample_text(&c)),
            });
        }
    }
    Ok(LawReport {
        law: Law::Functor,
        checked,
        detail: format!(
            "composable pairs up to size {} at p = {}",
            opts.max,
            opts.chain.size()
        ),
        failure: None,
    })
}

fn faithful(opts: &CheckOptions) -> Result<LawReport> {
    let verdict = brauer::verify_faithfulness(opts.m, opts.n, opts.chain)?;
    Ok(LawReport {
        law: Law::Faithful,
        checked: verdict.checked,
        detail: format!(
            "{} distinct images in hom({}, {}) at p = {}",
            verdict.checked,
            opts.m,
            opts.n,
            opts.chain.size()
        ),
        failure: verdict.counterexample.as_ref().map(counterexample_text),
    })
}

fn witness(opts: &CheckOptions) -> Result<LawReport> {
    let homs = hom_sets(opts.max)?;
    let mut checked = 0;
    let mut pairs = 0;
    for (r, q) in composable_pairs(&homs) {
        pairs += 1;
        let verdict = brauer::verify_witness(opts.chain, r, q)?;
        checked += verdict.checked;
        if let Some(c) = verdict.counterexample {
            return Ok(LawReport {
                law: Law::Witness,
                checked,
                detail: String::new(),
                failure: Some(counterexample_text(&c)),
            });
        }
    }
    Ok(LawReport {
        law: Law::Witness,
        checked,
        detail: format!("function pairs over {pairs} composable pairs"),
        failure: None,
    })
}

fn cones_law(opts: &CheckOptions) -> Result<LawReport> {
    // one size above the split-preorder sweeps, since these are untagged universes
    let max = (opts.max + 1).min(4);
    let mut checked = 0;
    for size in 0..=max {
        let cells = size * size;
        let mut images = HashSet::new();
        let mut preorders = 0;
        for mask in 0u64..1 << cells {
            let r = FiniteRelation::from_pairs(
                size,
                (0..cells)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| (b / size, b % size)),
            )?;
            checked += 1;
            let p1 = cones::check_prop1(&r, opts.chain)? == r.is_reflexive();
            let p2 = cones::check_prop2(&r, opts.chain)? == r.is_transitive();
            let star = cones::check_prop3_star(&r, opts.chain)?;
            let p4 = star == r.is_preorder();
            if !(p1 && p2 && p4) {
                return Ok(LawReport {
                    law: Law::Cones,
                    checked,
                    detail: String::new(),
                    failure: Some(format!(
                        "cone characterization fails for {r:?} (reflexivity agrees: {p1}, transitivity agrees: {p2}, order agrees: {p4})"
                    )),
                });
            }
            if r.is_preorder() {
                preorders += 1;
                images.insert(cones::monotone_set(&r, opts.chain)?);
            }
        }
        if images.len() != preorders {
            return Ok(LawReport {
                law: Law::Cones,
                checked,
                detail: String::new(),
                failure: Some(format!(
                    "{preorders} preorders of size {size} share {} monotone sets",
                    images.len()
                )),
            });
        }
    }
    Ok(LawReport {
        law: Law::Cones,
        checked,
        detail: format!("all relations up to size {max}"),
        failure: None,
    })
}

fn plain_relations(dom: usize, cod: usize) -> impl Iterator<Item = PlainRelation> {
    let cells = dom * cod;
    (0u64..1 << cells).map(move |mask| {
        PlainRelation::from_pairs(
            dom,
            cod,
            (0..cells)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| (b / cod, b % cod)),
        )
        .expect("cells are in range")
    })
}

fn embedding(opts: &CheckOptions) -> Result<LawReport> {
    let max = opts.max;
    let mut checked = 0;
    for n in 0..=max {
        let unit = SplitPreorder::from_relation(&PlainRelation::identity(n));
        for m in 0..=max {
            for r in plain_relations(m, n) {
                let er = SplitPreorder::from_relation(&r);
                let unit_ok = SplitPreorder::compose(&unit, &er)? == er;
                for k in 0..=max {
                    for q in plain_relations(n, k) {
                        checked += 1;
                        let eq = SplitPreorder::from_relation(&q);
                        let left = SplitPreorder::compose(&eq, &er)?;
                        let right = SplitPreorder::from_relation(&compose_plain(&r, &q)?);
                        let unit_ok = unit_ok && SplitPreorder::compose(&eq, &unit)? == eq;
                        if left != right || !unit_ok {
                            return Ok(LawReport {
                                law: Law::Embedding,
                                checked,
                                detail: String::new(),
                                failure: Some(arrows_text("embedding fails for", &[&er, &eq])),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(LawReport {
        law: Law::Embedding,
        checked,
        detail: format!("composable relation pairs up to size {max}"),
        failure: None,
    })
}

fn converse(opts: &CheckOptions) -> Result<LawReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for i in 0..opts.samples {
        let r = random_shape(&mut rng, 3);
        let p = random_composable(&mut rng, &r, 3);
        let left = SplitPreorder::compose(&p, &r)?.converse();
        let right = SplitPreorder::compose(&p.converse(), &r.converse())?;
        if left != right {
            return Ok(LawReport {
                law: Law::Converse,
                checked: i + 1,
                detail: String::new(),
                failure: Some(arrows_text("converse fails to commute with", &[&r, &p])),
            });
        }
    }
    Ok(LawReport {
        law: Law::Converse,
        checked: opts.samples,
        detail: format!("random pairs (seed {})", opts.seed),
        failure: None,
    })
}
