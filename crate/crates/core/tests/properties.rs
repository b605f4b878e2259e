use proptest::prelude::*;
use scfo_core::{
    canonical, open_distribution, Assignment, Literal, Probability, Symbol, Template, Word,
};

fn rotations(w: &Word) -> Vec<Word> {
    (0..w.len()).map(|k| w.rotate(k)).collect()
}

fn check_word(w: &Word) {
    let m = w.len();
    let n = canonical(w);
    for k in 0..=m {
        assert_eq!(canonical(&w.rotate(k)), n);
    }
    assert_eq!(canonical(n.representative()), n);
    let rep = n.representative();
    assert!(rotations(rep).iter().all(|r| rep <= r));
    let p = n.period();
    assert_eq!(m % p, 0);
    assert_eq!(rep.rotate(p), *rep);
    assert!((1..p).all(|q| rep.rotate(q) != *rep));
    let d = open_distribution(w);
    assert_eq!(d.support_len(), p);
    assert!(d.iter().all(|(_, q)| *q == Probability::new(1, p as u64)));
    assert_eq!(d.total(), Probability::from_integer(1));
}

fn check_template(t: &Template) {
    let comp = t.complement();
    for a in Assignment::all(t.arity()) {
        let word = t.instantiate(&a).unwrap();
        assert_eq!(comp.instantiate(&a).unwrap(), word.complement());
        for k in 0..t.len() {
            assert_eq!(t.rotate(k).instantiate(&a).unwrap(), word.rotate(k));
        }
    }
}

#[test]
fn word_laws_exhaustive_up_to_ten_cards() {
    for m in 1..=10usize {
        for bits in 0..(1u64 << m) {
            check_word(&Word::from_bits(bits, m));
        }
    }
}

#[test]
fn necklace_equality_is_rotation_membership_exhaustive() {
    for m in 1..=6usize {
        let words: Vec<Word> = (0..(1u64 << m)).map(|b| Word::from_bits(b, m)).collect();
        for w1 in &words {
            let rots = rotations(w1);
            for w2 in &words {
                assert_eq!(canonical(w1) == canonical(w2), rots.contains(w2));
            }
        }
    }
}

#[test]
fn template_laws_exhaustive_small() {
    for m in 1..=4usize {
        let radix = 6usize;
        for id in 0..radix.pow(m as u32) {
            let literals = (0..m)
                .map(|i| Literal::from_code(id / radix.pow(i as u32) % radix))
                .collect();
            check_template(&Template::new(2, literals).unwrap());
        }
    }
}

fn word_strategy(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), 1..=max).prop_map(|v| {
        Word::new(
            v.into_iter()
                .map(|b| if b { Symbol::Heart } else { Symbol::Club })
                .collect(),
        )
    })
}

fn template_strategy() -> impl Strategy<Value = Template> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(0..2 + 2 * n, 1..=12).prop_map(move |codes| {
            Template::new(n, codes.into_iter().map(Literal::from_code).collect()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn word_laws_random(w in word_strategy(12)) {
        check_word(&w);
    }

    #[test]
    fn rotation_composes(w in word_strategy(12), j in 0usize..40, k in 0usize..40) {
        prop_assert_eq!(w.rotate(j).rotate(k), w.rotate(j + k));
    }

    #[test]
    fn equivalence_matches_brute_force(w1 in word_strategy(12), k in 0usize..12, flip in 0usize..12) {
        let w2 = w1.rotate(k);
        prop_assert_eq!(canonical(&w1), canonical(&w2));
        let mut symbols = w2.symbols().to_vec();
        let i = flip % symbols.len();
        symbols[i] = symbols[i].flipped();
        let w3 = Word::new(symbols);
        prop_assert_eq!(canonical(&w1) == canonical(&w3), rotations(&w1).contains(&w3));
    }

    #[test]
    fn template_laws_random(t in template_strategy()) {
        check_template(&t);
    }
}
