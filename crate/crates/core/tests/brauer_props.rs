use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use brauerian::brauer::{glue_witness, repr_arrow, repr_arrow_capped, verify_witness};
use brauerian::cones::{Chain, FuncTable};
use brauerian::relcore::PlainRelation;
use brauerian::splitpre::{enumerate_split_preorders, SplitPreorder};
use brauerian::Error;

/// Decodes both codes and checks every pair of the full preorder directly.
fn oracle_repr(p: usize, r: &SplitPreorder) -> Vec<(usize, usize)> {
    let (m, n) = (r.src(), r.tgt());
    let digits = |mut code: usize, len: usize| -> Vec<usize> {
        (0..len)
            .map(|_| {
                let d = code % p;
                code /= p;
                d
            })
            .collect()
    };
    let mut out = Vec::new();
    for c1 in 0..p.pow(m as u32) {
        for c2 in 0..p.pow(n as u32) {
            let mut glued = digits(c1, m);
            glued.extend(digits(c2, n));
            if r.relation().pairs().all(|(u, v)| glued[u] <= glued[v]) {
                out.push((c1, c2));
            }
        }
    }
    out
}

#[test]
fn repr_matches_oracle() {
    for p in [2, 3] {
        let chain = Chain::new(p).unwrap();
        for (m, n) in [(0, 1), (1, 1), (1, 2), (2, 1), (2, 2)] {
            for r in enumerate_split_preorders(m, n).unwrap() {
                let got: Vec<_> = repr_arrow(chain, &r).unwrap().pairs().collect();
                assert_eq!(got, oracle_repr(p, &r), "p = {p}, {r}");
            }
        }
    }
}

#[test]
fn representation_is_not_trivial() {
    let two = Chain::TWO;
    let mut sizes = HashSet::new();
    let mut images = HashSet::new();
    for mask in 0u32..1 << 4 {
        let r = PlainRelation::from_pairs(
            2,
            2,
            (0..4)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| (b / 2, b % 2)),
        )
        .unwrap();
        let image = repr_arrow(two, &SplitPreorder::from_relation(&r)).unwrap();
        sizes.insert(image.len());
        assert!(images.insert(image));
    }
    assert!(sizes.len() > 1, "every image has the same size");
}

#[test]
fn witness_on_random_arrows_at_three() {
    let three = Chain::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let (m, n, k) = (
            rng.gen_range(0..=2),
            rng.gen_range(0..=3),
            rng.gen_range(0..=2),
        );
        let density = rng.gen_range(0.0..0.6);
        let r = SplitPreorder::random(m, n, density, &mut rng);
        let p = SplitPreorder::random(n, k, density, &mut rng);
        let verdict = verify_witness(three, &r, &p).unwrap();
        assert!(verdict.holds(), "{}", verdict.counterexample.unwrap());
    }
}

#[test]
fn witness_refuses_pairs_outside_the_composite() {
    let two = Chain::TWO;
    let r = SplitPreorder::from_relation(&PlainRelation::identity(1));
    let err = glue_witness(
        two,
        &r,
        &r,
        &FuncTable::new(vec![1]),
        &FuncTable::new(vec![0]),
    )
    .unwrap_err();
    assert!(matches!(err, Error::WitnessPrecondition { .. }));
}

#[test]
fn cap_is_enforced() {
    let r = SplitPreorder::identity(3);
    let err = repr_arrow_capped(Chain::TWO, &r, 32).unwrap_err();
    assert!(matches!(err, Error::BoundExceeded { .. }));
    assert!(repr_arrow_capped(Chain::TWO, &r, 64).is_ok());
}
