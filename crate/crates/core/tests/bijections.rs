mod common;

use std::collections::BTreeSet;

use catcodes_core::bijections::{decode_with, encode_with};
use catcodes_core::{
    chi_decode, chi_encode, convert, enum_codes, enum_family, verify_family, verify_theorem1, Code,
    DyckCodec, DyckWord, Family, FamilyCodec, Object, PermCodec, TableauCodec, TwoRowTableau,
};
use common::*;
use proptest::prelude::*;

#[test]
fn every_codec_passes_every_check_up_to_eight() {
    for family in Family::ALL {
        for n in 0..=8 {
            let r = verify_family(family, n).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.objects as u64, ballot_row_sum(n));
            assert_eq!(r.image_size, r.objects);
        }
    }
    assert_eq!(verify_family(Family::Perm, 8).unwrap().objects, 1430);
}

fn ballot_row_sum(n: usize) -> u64 {
    u64::try_from(catcodes_core::catalan(n as u64)).unwrap()
}

#[test]
fn class_generators_agree_with_brute_force() {
    for n in 0..=6 {
        let mut brute = dyck_words_brute(n);
        brute.sort();
        let mut gen = DyckCodec.objects(n).unwrap();
        gen.sort();
        assert_eq!(gen, brute);

        let mut brute = avoiding_perms_brute(n);
        brute.sort();
        assert_eq!(PermCodec.objects(n).unwrap(), brute);

        assert_eq!(
            TableauCodec.objects(n).unwrap().len() as u64,
            if n == 0 { 1 } else { standard_fillings(n, n) }
        );
    }
}

#[test]
fn round_trips_are_identities() {
    for n in 0..=8 {
        for c in enum_codes(n).unwrap() {
            for family in Family::ALL {
                let obj = chi_decode(&c, family).unwrap();
                assert_eq!(obj.size(), n);
                assert_eq!(chi_encode(&obj).unwrap(), c, "{family} {obj}");
                for to in Family::ALL {
                    let there = convert(&obj, to).unwrap();
                    assert_eq!(convert(&there, family).unwrap(), obj);
                }
            }
        }
    }
}

#[test]
fn dyck_code_is_up_step_heights() {
    for n in 1..=8 {
        for w in dyck_words_brute(n) {
            let c = encode_with(&DyckCodec, &w).unwrap();
            assert_eq!(c.letters(), w.up_heights().as_slice());
            assert_eq!(DyckWord::from_up_heights(&c), w);
        }
    }
}

#[test]
fn tableau_rows_are_dyck_positions() {
    for n in 1..=7 {
        for w in dyck_words_brute(n) {
            let t = TableauCodec::from_dyck(&w);
            assert_eq!(t.row1(), w.up_positions().as_slice());
            assert_eq!(t.row2(), w.down_positions().as_slice());
            assert_eq!(TableauCodec::to_dyck(&t), w);
        }
    }
}

#[test]
fn statistic_ledger() {
    for n in 1..=8 {
        let mut hists = Vec::new();
        for family in Family::ALL {
            let mut stats = Vec::new();
            for c in enum_codes(n).unwrap() {
                let obj = chi_decode(&c, family).unwrap();
                let stat = match &obj {
                    Object::Code(x) => x.last().unwrap(),
                    Object::Dyck(w) => w.trailing_descents().unwrap(),
                    Object::Perm(p) => p.decreasing_prefix() as u32,
                    Object::Tableau(t) => t.h(),
                };
                assert_eq!(stat, c.last().unwrap(), "{family} {obj}");
                assert_eq!(obj.statistic(), stat);
                stats.push(stat as usize);
            }
            hists.push(histogram(stats, n + 1));
        }
        for h in &hists {
            assert_eq!(*h, ballot_row(n), "n = {n}");
        }
    }
}

#[test]
fn factor_counts_are_equidistributed() {
    for n in 1..=10 {
        let h = histogram(
            DyckCodec
                .objects(n)
                .unwrap()
                .iter()
                .map(|w| w.irreducible_factors().unwrap() as usize),
            n + 1,
        );
        assert_eq!(h, ballot_row(n), "n = {n}");
    }
}

#[test]
fn permutation_last_letters_are_equidistributed() {
    for n in 1..=8 {
        let h = histogram(
            PermCodec
                .objects(n)
                .unwrap()
                .iter()
                .map(|p| p.last_letter().unwrap() as usize),
            n + 1,
        );
        assert_eq!(h, ballot_row(n), "n = {n}");
    }
}

#[test]
fn induced_orders() {
    let dyck: Vec<String> = enum_family(2, Family::Dyck)
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(dyck, ["abab", "aabb"]);
    let perm: Vec<String> = enum_family(1, Family::Perm)
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(perm, ["1"]);
    let tab = enum_family(2, Family::Tableau).unwrap();
    assert_eq!(
        tab,
        [
            Object::Tableau(TwoRowTableau::new(vec![1, 3], vec![2, 4]).unwrap()),
            Object::Tableau(TwoRowTableau::new(vec![1, 2], vec![3, 4]).unwrap()),
        ]
    );
}

#[test]
fn permutation_chain_for_1122() {
    // Growing 1 -> 12 -> 312 -> 3142 one statistic at a time.
    let chain: Vec<String> = ["1", "11", "112", "1122"]
        .iter()
        .map(|s| {
            decode_with(&PermCodec, &s.parse::<Code>().unwrap())
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(chain, ["1", "12", "312", "3142"]);
    let chain: Vec<String> = ["1", "11", "112", "1122"]
        .iter()
        .map(|s| {
            decode_with(&DyckCodec, &s.parse::<Code>().unwrap())
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(chain, ["ab", "abab", "abaabb", "abaababb"]);
}

#[test]
fn verification_is_deterministic() {
    let a = verify_theorem1(&PermCodec, 6).unwrap();
    let b = verify_theorem1(&PermCodec, 6).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_string(), b.to_string());
}

fn arb_code(max_len: usize) -> impl Strategy<Value = Code> {
    prop::collection::vec(any::<u32>(), 0..max_len).prop_map(|choices| {
        let mut letters: Vec<u32> = Vec::with_capacity(choices.len());
        for ch in choices {
            let bound = letters.last().map_or(1, |&v| v + 1);
            letters.push(ch % bound + 1);
        }
        Code::new(letters).unwrap()
    })
}

proptest! {
    #[test]
    fn large_codes_round_trip_through_every_family(c in arb_code(40)) {
        let mut seen = BTreeSet::new();
        for family in Family::ALL {
            let obj = chi_decode(&c, family).unwrap();
            let text = obj.to_string();
            let reparsed = Object::parse(family, &text).unwrap();
            prop_assert_eq!(&reparsed, &obj);
            prop_assert_eq!(chi_encode(&reparsed).unwrap(), c.clone());
            seen.insert(obj.statistic());
        }
        prop_assert!(seen.len() <= 1);
    }
}
