use brauerian::logic::{
    coproduct_law_instances, g_arrow, g_arrow_oriented, g_object, parse_derivation,
    product_law_instances, proof_equiv, proof_equiv_oriented, random_derivation, DerivationGen,
    Fragment, Orientation,
};
use brauerian::splitpre::TaggedNode;

#[test]
fn translations_are_split_preorders() {
    for fragment in Fragment::ALL {
        for seed in 0..1000 {
            let d = random_derivation(fragment, 5, seed);
            d.check_fragment(fragment).unwrap();
            let (a, b) = d.endpoints().unwrap();
            let g = g_arrow(&d).unwrap();
            assert_eq!((g.src(), g.tgt()), (g_object(&a), g_object(&b)));
            assert!(g.relation().is_preorder(), "{fragment} seed {seed}: {d}");
            assert!(g.is_plain(), "{fragment} seed {seed}: {d}");
        }
    }
}

#[test]
fn conjunctive_targets_have_exactly_one_source() {
    for seed in 0..500 {
        let d = random_derivation(Fragment::Conjunctive, 4, seed);
        let g = g_arrow(&d).unwrap();
        for t in 0..g.tgt() {
            let linked = (0..g.src())
                .filter(|&s| g.contains(TaggedNode::source(s), TaggedNode::target(t)))
                .count();
            assert_eq!(linked, 1, "seed {seed}: {d}");
        }
    }
}

#[test]
fn reversed_orientation_is_the_converse() {
    for fragment in Fragment::ALL {
        for seed in 0..300 {
            let d = random_derivation(fragment, 4, seed);
            let reversed = g_arrow_oriented(&d, Orientation::TargetToSource).unwrap();
            assert_eq!(
                reversed,
                g_arrow(&d).unwrap().converse(),
                "{fragment} seed {seed}: {d}"
            );
        }
    }
}

#[test]
fn equivalence_ignores_orientation() {
    for fragment in [Fragment::Conjunctive, Fragment::Disjunctive] {
        for seed in 0..300 {
            let mut gen = DerivationGen::new(fragment, seed);
            let f = gen.derivation(3);
            let (a, b) = f.endpoints().unwrap();
            let Some(g) = gen.between(&a, &b) else {
                continue;
            };
            assert_eq!(
                proof_equiv(&f, &g).unwrap(),
                proof_equiv_oriented(&f, &g, Orientation::TargetToSource).unwrap()
            );
        }
    }
}

#[test]
fn mixed_fragment_closure_is_implied_by_equivalence() {
    let mut compared = 0;
    for seed in 0..300 {
        let mut gen = DerivationGen::new(Fragment::ConjDisj, seed);
        let mut laws = product_law_instances(&mut gen, 2);
        laws.extend(coproduct_law_instances(&mut gen, 2));
        for law in laws {
            assert!(
                proof_equiv(&law.left, &law.right).unwrap(),
                "seed {seed}: {}",
                law.name
            );
            let (gl, gr) = (g_arrow(&law.left).unwrap(), g_arrow(&law.right).unwrap());
            assert_eq!(gl.to_split_equivalence(), gr.to_split_equivalence());
            compared += 1;
        }
    }
    assert!(compared >= 300 * 12);
}

#[test]
fn distributivity_style_terms_translate() {
    let d = parse_derivation(
        "copair(pair(pi1{p, q}, inl{q, r}), pair(pi1{p, r}, inr{q, r}))",
        Fragment::ConjDisj,
    );
    assert!(d.is_err(), "components must share a target formula");
    let d = parse_derivation(
        "copair(comp(inl{p, p}, pi1{p, q}), comp(inr{p, p}, pi1{p, r}))",
        Fragment::ConjDisj,
    )
    .unwrap();
    let g = g_arrow(&d).unwrap();
    assert_eq!((g.src(), g.tgt()), (4, 2));
    let (s, t) = (TaggedNode::source, TaggedNode::target);
    assert_eq!(g.strict_pairs(), vec![(s(0), t(0)), (s(2), t(1))]);
}
