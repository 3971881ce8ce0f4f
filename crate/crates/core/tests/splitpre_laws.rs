use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use brauerian::relcore::PlainRelation;
use brauerian::splitpre::{enumerate_split_preorders, NodeTag, SplitPreorder, TaggedNode};

fn hom(m: usize, n: usize) -> Vec<SplitPreorder> {
    enumerate_split_preorders(m, n).unwrap().collect()
}

/// Composite computed from scratch on `X + Y + Z` with a boolean matrix and
/// a fixed-point closure.
fn oracle_compose(p: &SplitPreorder, r: &SplitPreorder) -> Vec<(TaggedNode, TaggedNode)> {
    let (m, n, k) = (r.src(), r.tgt(), p.tgt());
    let size = m + n + k;
    let mut g = vec![vec![false; size]; size];
    let place_r = |v: TaggedNode| match v.tag {
        NodeTag::Source => v.index,
        NodeTag::Target => m + v.index,
    };
    let place_p = |v: TaggedNode| match v.tag {
        NodeTag::Source => m + v.index,
        NodeTag::Target => m + n + v.index,
    };
    for (u, v) in r.strict_pairs() {
        g[place_r(u)][place_r(v)] = true;
    }
    for (u, v) in p.strict_pairs() {
        g[place_p(u)][place_p(v)] = true;
    }
    loop {
        let mut changed = false;
        for i in 0..size {
            for j in 0..size {
                if !g[i][j] && (0..size).any(|l| g[i][l] && g[l][j]) {
                    g[i][j] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let outer: Vec<(usize, TaggedNode)> = (0..m)
        .map(|i| (i, TaggedNode::source(i)))
        .chain((0..k).map(|i| (m + n + i, TaggedNode::target(i))))
        .collect();
    let mut pairs = Vec::new();
    for &(a, u) in &outer {
        for &(b, v) in &outer {
            if a != b && g[a][b] {
                pairs.push((u, v));
            }
        }
    }
    pairs.sort();
    pairs
}

#[test]
fn composition_matches_oracle_exhaustively() {
    for m in 0..=2 {
        for n in 0..=2 {
            for k in 0..=2 {
                if m + n > 3 || n + k > 3 {
                    continue;
                }
                for r in hom(m, n) {
                    for p in hom(n, k) {
                        let composite = SplitPreorder::compose(&p, &r).unwrap();
                        assert_eq!(
                            composite.strict_pairs(),
                            oracle_compose(&p, &r),
                            "{r} then {p}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn composition_matches_oracle_on_random_arrows() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..500 {
        let (m, n, k) = (
            rng.gen_range(0..=5),
            rng.gen_range(0..=5),
            rng.gen_range(0..=5),
        );
        let density = rng.gen_range(0.0..0.5);
        let r = SplitPreorder::random(m, n, density, &mut rng);
        let p = SplitPreorder::random(n, k, density, &mut rng);
        let composite = SplitPreorder::compose(&p, &r).unwrap();
        assert_eq!(composite.strict_pairs(), oracle_compose(&p, &r));
        assert!(composite.relation().is_preorder());
    }
}

#[test]
fn converse_commutes_with_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..500 {
        let (m, n, k) = (
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
        );
        let density = rng.gen_range(0.0..0.6);
        let r = SplitPreorder::random(m, n, density, &mut rng);
        let p = SplitPreorder::random(n, k, density, &mut rng);
        let left = SplitPreorder::compose(&p, &r).unwrap().converse();
        let right = SplitPreorder::compose(&p.converse(), &r.converse()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn split_equivalences_are_closed_under_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..300 {
        let (m, n, k) = (
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
        );
        let r = SplitPreorder::random(m, n, 0.3, &mut rng).to_split_equivalence();
        let p = SplitPreorder::random(n, k, 0.3, &mut rng).to_split_equivalence();
        assert!(SplitPreorder::compose(&p, &r)
            .unwrap()
            .relation()
            .is_equivalence());
    }
}

#[test]
fn hom_set_sizes() {
    let counts: Vec<usize> = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]
        .iter()
        .map(|&(m, n)| hom(m, n).len())
        .collect();
    assert_eq!(counts, [1, 1, 4, 29, 355]);
}

#[test]
fn plain_images_are_injective_and_plain() {
    let mut seen = std::collections::HashSet::new();
    for mask in 0u32..1 << 6 {
        let r = PlainRelation::from_pairs(
            2,
            3,
            (0..6)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| (b / 3, b % 3)),
        )
        .unwrap();
        let image = SplitPreorder::from_relation(&r);
        assert!(image.is_plain());
        assert_eq!(image.cross_relation(), r);
        assert!(seen.insert(image));
    }
}

#[test]
fn loader_style_generation_agrees_with_closure() {
    let (s, t) = (TaggedNode::source, TaggedNode::target);
    let generated = SplitPreorder::generated_by(1, 2, [(s(0), t(0)), (t(0), t(1))]).unwrap();
    let full =
        SplitPreorder::generated_by(1, 2, [(s(0), t(0)), (t(0), t(1)), (s(0), t(1))]).unwrap();
    assert_eq!(generated, full);
}
