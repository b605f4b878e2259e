use std::collections::BTreeSet;

use scfo_core::engine::{fixtures, verify, Protocol};
use scfo_core::search::{
    canonical_template, classify, merge_results, naive_search, partition_prefixes, search,
    search_with_prefix, DeckMode, SearchConfig, SearchError, SearchResult, SearchStatus,
};
use scfo_core::{canonical, Assignment, BooleanFunction, Template};

fn key(p: &Protocol) -> (Template, Vec<String>) {
    let rule = p
        .rule()
        .entries()
        .iter()
        .map(|(n, b)| format!("{b}:{n}"))
        .collect();
    (p.template().clone(), rule)
}

fn keys(r: &SearchResult) -> Vec<(Template, Vec<String>)> {
    r.protocols.iter().map(key).collect()
}

fn configs(m: usize) -> Vec<SearchConfig> {
    let base = SearchConfig::new(m);
    let two = 2.min(m);
    let mut out = vec![
        base.clone(),
        base.clone().with_constants(1),
        base.clone().with_constants(two),
        base.clone().with_max_pairs(1),
        base.clone().free(),
        base.clone().free().with_constants(two),
        base.clone().free().with_max_pairs(1).with_constants(1),
    ];
    let mut color = base.clone().with_constants(1);
    color.dedup_color_complement = true;
    out.push(color.clone());
    let mut color_free = color.free();
    color_free.dedup_template_rotation = false;
    out.push(color_free);
    let mut no_rot = base.free();
    no_rot.dedup_template_rotation = false;
    out.push(no_rot);
    out
}

fn assert_sound(f: &BooleanFunction, r: &SearchResult, cfg: &SearchConfig) {
    for p in &r.protocols {
        assert!(verify(p, f).unwrap().passed());
        if cfg.deck == DeckMode::CommittedPair {
            for v in 0..f.arity() {
                let (pos, neg) = p.template().occurrences(v);
                assert_eq!(pos, neg);
            }
        }
    }
}

#[test]
fn pruned_search_equals_naive_for_two_variable_functions() {
    for id in 0..16u64 {
        let f = BooleanFunction::from_id(2, id);
        for m in 1..=5 {
            for cfg in configs(m) {
                let fast = search(&f, &cfg).unwrap();
                let slow = naive_search(&f, &cfg).unwrap();
                assert_eq!(fast.status, SearchStatus::Complete);
                assert_eq!(keys(&fast), keys(&slow), "f={id:x} m={m} cfg={cfg:?}");
                assert_eq!(
                    fast.stats.examined, slow.stats.examined,
                    "f={id:x} m={m} cfg={cfg:?}"
                );
                assert_sound(&f, &fast, &cfg);
            }
        }
    }
}

#[test]
fn pruned_search_equals_naive_for_xor3() {
    let f = fixtures::xor3();
    for m in 1..=6 {
        for cfg in configs(m) {
            let fast = search(&f, &cfg).unwrap();
            let slow = naive_search(&f, &cfg).unwrap();
            assert_eq!(keys(&fast), keys(&slow), "m={m} cfg={cfg:?}");
            assert_sound(&f, &fast, &cfg);
        }
    }
}

fn contains_rotation_of(r: &SearchResult, p: &Protocol) -> bool {
    let target = canonical_template(p.template());
    r.protocols
        .iter()
        .any(|q| *q.template() == target && q.rule() == p.rule())
}

#[test]
fn search_recovers_reference_protocols() {
    let r = search(&fixtures::xor2(), &SearchConfig::new(4)).unwrap();
    assert!(contains_rotation_of(&r, &fixtures::xor2_protocol()));

    let r = search(
        &fixtures::and2(),
        &SearchConfig::new(5).free().with_constants(1),
    )
    .unwrap();
    assert!(contains_rotation_of(&r, &fixtures::five_card_trick()));

    let r = search(&fixtures::eq3(), &SearchConfig::new(6)).unwrap();
    assert!(contains_rotation_of(&r, &fixtures::six_card_trick()));

    let r = search(&fixtures::xor3(), &SearchConfig::new(8).with_max_pairs(2)).unwrap();
    assert!(contains_rotation_of(&r, &fixtures::protocol1()));

    let r = search(&fixtures::f2(), &SearchConfig::new(8)).unwrap();
    assert_eq!(r.status, SearchStatus::Complete);
    assert!(contains_rotation_of(&r, &fixtures::protocol2()));

    let r = search(&fixtures::if_not(), &SearchConfig::new(8).with_constants(2)).unwrap();
    assert!(contains_rotation_of(&r, &fixtures::protocol3()));
}

#[test]
fn oracle_small_cases() {
    // three cards cannot hold whole pairs
    let r = naive_search(&fixtures::xor2(), &SearchConfig::new(3)).unwrap();
    assert!(r.protocols.is_empty());

    // for a constant function, exactly the templates whose inputs all open
    // to one necklace pass, each with a single-entry rule
    let zero = BooleanFunction::constant(2, scfo_core::Bit::Zero);
    let mut cfg = SearchConfig::new(2).free().with_constants(2);
    cfg.dedup_template_rotation = false;
    let r = naive_search(&zero, &cfg).unwrap();
    let mut expected = 0;
    for c0 in 0..6 {
        for c1 in 0..6 {
            let t = Template::new(
                2,
                vec![
                    scfo_core::Literal::from_code(c0),
                    scfo_core::Literal::from_code(c1),
                ],
            )
            .unwrap();
            let necklaces: BTreeSet<_> = Assignment::all(2)
                .map(|a| canonical(&t.instantiate(&a).unwrap()))
                .collect();
            expected += usize::from(necklaces.len() == 1);
        }
    }
    assert_eq!(r.protocols.len(), expected);
    assert!(r.protocols.iter().all(|p| p.rule().entries().len() == 1));
}

#[test]
fn rotation_dedup_keeps_every_necklace_class() {
    for (f, m) in [
        (fixtures::xor2(), 4),
        (fixtures::and2(), 5),
        (fixtures::xor3(), 6),
    ] {
        let on = SearchConfig::new(m).free().with_constants(1);
        let mut off = on.clone();
        off.dedup_template_rotation = false;
        let with: BTreeSet<_> = search(&f, &on)
            .unwrap()
            .protocols
            .iter()
            .map(|p| p.template().clone())
            .collect();
        let without: BTreeSet<_> = search(&f, &off)
            .unwrap()
            .protocols
            .iter()
            .map(|p| canonical_template(p.template()))
            .collect();
        assert_eq!(with, without);
    }
}

#[test]
fn color_dedup_keeps_one_of_each_pair() {
    let f = fixtures::xor3();
    let plain = SearchConfig::new(6).with_constants(2);
    let mut dedup = plain.clone();
    dedup.dedup_color_complement = true;
    let all: BTreeSet<_> = search(&f, &plain)
        .unwrap()
        .protocols
        .iter()
        .map(|p| p.template().clone())
        .collect();
    let reps: BTreeSet<_> = search(&f, &dedup)
        .unwrap()
        .protocols
        .iter()
        .map(|p| p.template().clone())
        .collect();
    assert!(reps.is_subset(&all));
    for t in &all {
        let orbit = [t.clone(), canonical_template(&t.complement())];
        assert_eq!(
            orbit.iter().filter(|o| reps.contains(*o)).count(),
            1,
            "{t:?}"
        );
    }
}

#[test]
fn partitioned_search_merges_to_the_same_result() {
    let f = fixtures::f2();
    let cfg = SearchConfig::new(8);
    let whole = search(&f, &cfg).unwrap();
    for depth in [1, 2, 3] {
        let mut parts: Vec<_> = partition_prefixes(4, &cfg, depth)
            .unwrap()
            .iter()
            .map(|p| search_with_prefix(&f, &cfg, p).unwrap())
            .collect();
        parts.reverse();
        let merged = merge_results(parts, cfg.limit);
        assert_eq!(merged.protocols, whole.protocols);
        assert_eq!(merged.stats.examined, whole.stats.examined);
    }
}

#[test]
fn limit_and_budget_are_reported() {
    let f = fixtures::xor3();
    let mut cfg = SearchConfig::new(8).with_max_pairs(2);
    let all = search(&f, &cfg).unwrap();
    assert!(all.protocols.len() > 3);
    cfg.limit = Some(3);
    let some = search(&f, &cfg).unwrap();
    assert_eq!(some.status, SearchStatus::LimitReached);
    assert_eq!(keys(&some), keys(&all)[..3].to_vec());
    let parts = partition_prefixes(3, &cfg, 2)
        .unwrap()
        .iter()
        .map(|p| search_with_prefix(&f, &cfg, p).unwrap())
        .collect();
    assert_eq!(keys(&merge_results(parts, cfg.limit)), keys(&some));

    cfg.limit = None;
    cfg.node_budget = 50;
    let partial = search(&f, &cfg).unwrap();
    assert_eq!(partial.status, SearchStatus::BudgetExceeded);
    assert!(partial.stats.nodes <= 50);
}

#[test]
fn guards_refuse_oversized_inputs() {
    assert!(matches!(
        naive_search(&fixtures::f2(), &SearchConfig::new(8)),
        Err(SearchError::OracleGuard { .. })
    ));
    assert!(matches!(
        classify(5, 4, &SearchConfig::new(1)),
        Err(SearchError::UnsupportedArity { .. })
    ));
    assert!(matches!(
        classify(2, 13, &SearchConfig::new(1)),
        Err(SearchError::UnsupportedCards { .. })
    ));
    assert!(search(&fixtures::xor2(), &SearchConfig::new(0)).is_err());
}

#[test]
fn classify_two_variables() {
    let cfg = SearchConfig::new(1);
    let report = classify(2, 6, &cfg).unwrap();
    assert_eq!(report.records.len(), 16);
    let xor = &report.records[fixtures::xor2().id().unwrap() as usize];
    assert_eq!(xor.minimal_cards, Some(4));
    for rec in &report.records {
        let Some(m) = rec.minimal_cards else { continue };
        let witness = rec.witness.as_ref().unwrap();
        assert_eq!(witness.len(), m);
        assert!(verify(witness, &rec.function).unwrap().passed());
        let at = search(&rec.function, &cfg.clone().with_cards(m)).unwrap();
        assert_eq!(at.protocols[0].template(), witness.template());
        for smaller in 1..m {
            let below = search(&rec.function, &cfg.clone().with_cards(smaller)).unwrap();
            assert!(below.protocols.is_empty());
        }
    }
    for rec in report.records.iter().filter(|r| r.minimal_cards.is_none()) {
        for m in 1..=6 {
            assert!(search(&rec.function, &cfg.clone().with_cards(m))
                .unwrap()
                .protocols
                .is_empty());
        }
    }
}

#[test]
fn classify_three_variables() {
    let report = classify(3, 8, &SearchConfig::new(1)).unwrap();
    let at = |f: BooleanFunction| report.records[f.id().unwrap() as usize].minimal_cards;
    assert!(at(fixtures::xor3()).is_some_and(|m| m <= 8));
    assert!(at(fixtures::eq3()).is_some_and(|m| m <= 6));
    for rec in &report.records {
        if let Some(w) = &rec.witness {
            assert!(verify(w, &rec.function).unwrap().passed());
        }
    }
}
