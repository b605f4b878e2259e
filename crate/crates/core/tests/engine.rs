use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scfo_core::engine::{
    decode, derive_output_rule, fixtures, render_table, restrict, security_by_distribution, verify,
    EngineError, OutputRule, Protocol,
};
use scfo_core::{canonical, Assignment, Bit, BooleanFunction, Literal, Template, Word};

use Literal::{Constant, Negative as Neg, Positive as Pos};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn a(s: &str) -> Assignment {
    s.parse().unwrap()
}

/// Least rotation by trying every shift.
fn brute_min_rotation(word: &Word) -> Word {
    (0..word.len()).map(|k| word.rotate(k)).min().unwrap()
}

/// Truth table of `f` with variable `var` fixed, built by inserting the bit.
fn brute_restrict(f: &BooleanFunction, var: usize, value: Bit) -> BooleanFunction {
    BooleanFunction::from_fn(f.arity() - 1, |bits| {
        let mut full = bits.to_vec();
        full.insert(var, value);
        f.eval(&Assignment::new(full)).unwrap().as_bool()
    })
}

fn golden(name: &str) -> &'static str {
    match name {
        "protocol1" => include_str!("golden/table1.txt"),
        "protocol2" => include_str!("golden/table2.txt"),
        "protocol3" => include_str!("golden/table3.txt"),
        _ => unreachable!(),
    }
}

#[test]
fn every_fixture_is_correct_and_secure() {
    for (p, f) in fixtures::all() {
        let report = verify(&p, &f).unwrap();
        assert!(
            report.correct,
            "{}: {:?}",
            p.name(),
            report.failure_reasons()
        );
        assert!(
            report.secure,
            "{}: {:?}",
            p.name(),
            report.failure_reasons()
        );
        assert!(security_by_distribution(&p, &f).unwrap());
        assert_eq!(derive_output_rule(p.template(), &f).unwrap(), *p.rule());
    }
}

#[test]
fn tables_match_transcriptions() {
    for name in ["protocol1", "protocol2", "protocol3"] {
        let (p, f) = fixtures::builtin_protocol(name).unwrap();
        let text: String = render_table(&p, &f)
            .unwrap()
            .iter()
            .map(|r| format!("{r}\n"))
            .collect();
        assert_eq!(text, golden(name), "{name}");
    }
}

#[test]
fn instantiate_and_eval_examples() {
    let p1 = fixtures::protocol1();
    assert_eq!(p1.template().instantiate(&a("000")).unwrap(), w("CCHCCHHH"));
    assert_eq!(p1.template().instantiate(&a("111")).unwrap(), w("HHCHHCCC"));
    let p2 = fixtures::protocol2();
    assert_eq!(
        p2.template().instantiate(&a("1001")).unwrap(),
        w("HCCHCHHC")
    );
    assert_eq!(fixtures::xor3().eval(&a("011")).unwrap(), Bit::Zero);
    assert_eq!(fixtures::f2().eval(&a("1011")).unwrap(), Bit::One);
    assert_eq!(fixtures::if_not().eval(&a("111")).unwrap(), Bit::Zero);
}

#[test]
fn builtin_truth_tables() {
    assert_eq!(fixtures::xor2().to_hex(), "6");
    assert_eq!(fixtures::and2().to_hex(), "1");
    assert_eq!(fixtures::eq3().to_hex(), "81");
    assert_eq!(fixtures::xor3().to_hex(), "69");
    // columns of the second and third correctness tables
    assert_eq!(fixtures::f2().to_hex(), "2e74");
    assert_eq!(fixtures::if_not().to_hex(), "2e");
    for name in fixtures::FUNCTION_NAMES {
        assert!(fixtures::builtin_function(name).is_some());
    }
}

#[test]
fn derived_rule_for_protocol1() {
    let rule = derive_output_rule(fixtures::protocol1().template(), &fixtures::xor3()).unwrap();
    let zero = brute_min_rotation(&w("CCHCCHHH"));
    let one = brute_min_rotation(&w("HHCHHCCC"));
    assert_eq!(zero, w("CCHCCHHH"));
    assert_eq!(one, w("CCCHHCHH"));
    assert_eq!(
        rule.necklace_for(Bit::Zero).unwrap().representative(),
        &zero
    );
    assert_eq!(rule.necklace_for(Bit::One).unwrap().representative(), &one);
}

#[test]
fn derive_output_rule_failures() {
    let pairs = Template::new(2, vec![Pos(0), Neg(0), Pos(1), Neg(1)]).unwrap();
    match derive_output_rule(&pairs, &fixtures::and2()) {
        Err(EngineError::IndistinguishableClasses { necklace }) => {
            // inputs 00 and 11 both open to the alternating necklace
            assert_eq!(necklace.representative(), &w("CHCH"))
        }
        other => panic!("{other:?}"),
    }
    let plain = Template::new(2, vec![Pos(0), Pos(1)]).unwrap();
    let first = BooleanFunction::from_fn(2, |b| b[0].as_bool());
    assert_eq!(
        derive_output_rule(&plain, &first),
        Err(EngineError::NonConstantClass {
            output: Bit::Zero,
            first: a("00"),
            second: a("01")
        })
    );
}

#[test]
fn five_card_trick_decoding() {
    let rule = fixtures::five_card_trick().rule().clone();
    assert_eq!(decode(&w("HHHCC"), &rule), Ok(Bit::One));
    assert_eq!(decode(&w("CHCHC").rotate(0), &rule).ok(), None);
    assert_eq!(decode(&w("CHCHH"), &rule), Ok(Bit::Zero));
    assert!(matches!(
        decode(&w("CCCCC"), &rule),
        Err(EngineError::UnknownClass { .. })
    ));
}

#[test]
fn swapped_rule_is_secure_but_wrong() {
    let p = fixtures::protocol2();
    let swapped = p.with_rule(p.rule().swapped()).unwrap();
    let report = verify(&swapped, &fixtures::f2()).unwrap();
    assert!(!report.correct);
    assert!(report.secure);
    assert_eq!(report.failures.len(), 16);
}

#[test]
fn leaky_template_is_insecure_under_any_rule() {
    let plain = Template::new(2, vec![Pos(0), Pos(1)]).unwrap();
    let first = BooleanFunction::from_fn(2, |b| b[0].as_bool());
    let words = ["CC", "CH", "HH"].map(w);
    for (i, zero) in words.iter().enumerate() {
        for one in words.iter().skip(i + 1) {
            for (z, o) in [(zero, one), (one, zero)] {
                let rule = OutputRule::from_words([(Bit::Zero, z), (Bit::One, o)]).unwrap();
                let p = Protocol::new("leaky", plain.clone(), rule).unwrap();
                let report = verify(&p, &first).unwrap();
                assert!(!report.secure);
                assert!(!security_by_distribution(&p, &first).unwrap());
            }
        }
    }
}

#[test]
fn protocol2_restricts_to_protocol3() {
    let p2 = fixtures::protocol2();
    let restricted = restrict(&p2, 3, Bit::One).unwrap();
    let p3 = fixtures::protocol3();
    assert_eq!(restricted.template(), p3.template());
    assert_eq!(
        restricted.template().literals(),
        &[
            Pos(0),
            Pos(1),
            Pos(2),
            Constant(Bit::One),
            Neg(0),
            Neg(1),
            Neg(2),
            Constant(Bit::Zero)
        ]
    );
    assert_eq!(restricted.rule(), p3.rule());
    let f = brute_restrict(&fixtures::f2(), 3, Bit::One);
    assert_eq!(f, fixtures::if_not());
    let text: String = render_table(&restricted, &f)
        .unwrap()
        .iter()
        .map(|r| format!("{r}\n"))
        .collect();
    assert_eq!(text, golden("protocol3"));

    // further fix z = 0: x ∨ y
    let twice = restrict(&restricted, 2, Bit::Zero).unwrap();
    let g = brute_restrict(&f, 2, Bit::Zero);
    assert_eq!(
        g,
        BooleanFunction::from_fn(2, |b| b[0].as_bool() || b[1].as_bool())
    );
    assert!(verify(&twice, &g).unwrap().passed());
}

#[test]
fn every_single_variable_restriction_verifies() {
    let mut count = 0;
    for (p, f) in fixtures::all() {
        for var in 0..p.arity() {
            for value in [Bit::Zero, Bit::One] {
                let r = restrict(&p, var, value).unwrap();
                let g = brute_restrict(&f, var, value);
                assert_eq!(f.restrict(var, value).unwrap(), g);
                let report = verify(&r, &g).unwrap();
                assert!(report.passed(), "{} {var}={value}", p.name());
                count += 1;
            }
        }
    }
    assert_eq!(count, 34);
}

#[test]
fn restricting_an_absent_variable_only_drops_arity() {
    let t = Template::new(3, vec![Pos(0), Neg(0), Pos(2), Neg(2)]).unwrap();
    let rule = derive_output_rule(
        &t,
        &BooleanFunction::from_fn(3, |b| b[0].as_bool() ^ b[2].as_bool()),
    )
    .unwrap();
    let p = Protocol::new("gap", t, rule).unwrap();
    let r = restrict(&p, 1, Bit::One).unwrap();
    assert_eq!(r.arity(), 2);
    assert_eq!(r.template().literals(), &[Pos(0), Neg(0), Pos(1), Neg(1)]);
    assert!(restrict(&p, 3, Bit::One).is_err());
}

#[test]
fn decode_is_total_on_reachable_words() {
    for (p, f) in fixtures::all() {
        for asg in Assignment::all(f.arity()) {
            let hidden = p.template().instantiate(&asg).unwrap();
            for k in 0..p.len() {
                assert_eq!(
                    decode(&hidden.rotate(k), p.rule()).unwrap(),
                    f.eval(&asg).unwrap()
                );
            }
        }
    }
}

#[test]
fn constant_function_needs_a_single_necklace() {
    let t = Template::new(1, vec![Constant(Bit::One), Constant(Bit::Zero)]).unwrap();
    let zero = BooleanFunction::constant(1, Bit::Zero);
    let rule = derive_output_rule(&t, &zero).unwrap();
    assert_eq!(rule.entries().len(), 1);
    let p = Protocol::new("const", t, rule).unwrap();
    assert!(verify(&p, &zero).unwrap().passed());

    let t = Template::new(1, vec![Pos(0), Constant(Bit::Zero)]).unwrap();
    assert!(derive_output_rule(&t, &zero).is_err());
}

fn random_template(rng: &mut ChaCha8Rng) -> Template {
    let n = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=8);
    let literals = (0..m)
        .map(|_| Literal::from_code(rng.gen_range(0..2 + 2 * n)))
        .collect();
    Template::new(n, literals).unwrap()
}

/// A function that is constant on the template's two most common necklaces,
/// when there are at most two; otherwise a random one.
fn companion_function(t: &Template, rng: &mut ChaCha8Rng) -> BooleanFunction {
    let n = t.arity();
    let necklaces: Vec<_> = Assignment::all(n)
        .map(|asg| canonical(&t.instantiate(&asg).unwrap()))
        .collect();
    let mut distinct = necklaces.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() <= 2 && rng.gen_bool(0.8) {
        let table = necklaces
            .iter()
            .map(|nk| Bit::new(*nk == distinct[0]))
            .collect();
        BooleanFunction::from_table(n, table).unwrap()
    } else {
        BooleanFunction::from_id(n, rng.gen_range(0..1u64 << (1 << n)))
    }
}

#[test]
fn necklace_and_distribution_security_agree_on_random_templates() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5cf0);
    let mut secure_seen = 0;
    for _ in 0..1500 {
        let t = random_template(&mut rng);
        let f = companion_function(&t, &mut rng);
        let rule = derive_output_rule(&t, &f).unwrap_or_else(|_| {
            let a0 = t
                .instantiate(&Assignment::from_index(t.arity(), 0))
                .unwrap();
            OutputRule::from_words([(Bit::Zero, &a0)]).unwrap()
        });
        let p = Protocol::new("random", t, rule).unwrap();
        let by_necklace = verify(&p, &f).unwrap().secure;
        assert_eq!(by_necklace, security_by_distribution(&p, &f).unwrap());
        secure_seen += usize::from(by_necklace);
    }
    assert!(secure_seen > 100);
}
