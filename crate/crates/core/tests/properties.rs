mod common;

use std::collections::BTreeMap;

use mvcomp::algebra::{atoms, boolean_center, canonical_decomposition, element_order, is_isomorphic};
use mvcomp::completion::{
    check_mac_criterion, inverse_limit, macneille_mv, profinite_product, verify_main_theorem,
    InverseSystem,
};
use mvcomp::ideals::{
    all_ideals, ideal_generated, is_maximal, is_maximal_by_inclusion, is_principal, quotient,
    radical, s_decomposition,
};
use mvcomp::signatures::{
    divisibility_decision, sig_equal, sig_mac_criterion, sig_of_finite_algebra, sig_profinite,
    AtomOrders, Cardinality, Divisibility, Family, SpectralSignature, Spectrum, Verdict,
};
use mvcomp::{ElementOrder, FiniteMvAlgebra};
use proptest::prelude::*;
use proptest::sample::subsequence;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn sizes(max_carrier: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(2usize..=6, 1..=3)
        .prop_filter("carrier bound", move |s| s.iter().product::<usize>() <= max_carrier)
}

fn algebra(max_carrier: usize) -> impl Strategy<Value = (Vec<usize>, FiniteMvAlgebra)> {
    sizes(max_carrier).prop_map(|s| {
        let a = FiniteMvAlgebra::product(&s).unwrap();
        (s, a)
    })
}

/// A product presented as a validated table under a random relabelling.
fn presentation(max_carrier: usize) -> impl Strategy<Value = (Vec<usize>, FiniteMvAlgebra)> {
    (algebra(max_carrier), any::<u64>()).prop_map(|((s, a), seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perm = random_permutation(&mut rng, a.size());
        (s, permuted_presentation(&a, &perm))
    })
}

fn cardinality() -> impl Strategy<Value = Cardinality> {
    prop_oneof![4 => (1u64..4).prop_map(Cardinality::Finite), 1 => Just(Cardinality::Countable)]
}

fn family(min: u64) -> impl Strategy<Value = Family> {
    prop_oneof![
        (min..8).prop_map(Family::AllFrom),
        (min..12, 1u64..7).prop_map(|(first, step)| Family::Arithmetic { first, step }),
    ]
}

fn spectrum(min: u64) -> impl Strategy<Value = Spectrum> {
    (
        prop::collection::btree_map(min..14, cardinality(), 0..4),
        prop::option::of(family(min)),
    )
        .prop_map(|(explicit, family)| Spectrum::new(explicit, family))
}

fn signature() -> impl Strategy<Value = SpectralSignature> {
    (
        spectrum(2),
        prop_oneof![Just(Cardinality::ZERO), cardinality()],
        prop::option::of((spectrum(1), any::<bool>())),
    )
        .prop_map(|(ranks, infinite, atoms)| {
            let atoms = atoms.map(|(orders, is_atomic)| AtomOrders { orders, is_atomic });
            SpectralSignature::new(ranks, infinite, atoms).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn products_satisfy_the_axioms((_, a) in algebra(200)) {
        let (oplus, neg) = tables_of(&a);
        prop_assert!(brute_force_violations(a.size(), &oplus, &neg, a.zero()).is_empty());
        prop_assert!(a.validate_axioms().is_valid());
    }

    #[test]
    fn order_and_lattice_operations((_, a) in presentation(60)) {
        for x in a.elements() {
            prop_assert!(a.leq(x, x));
            for y in a.elements() {
                if x != y {
                    prop_assert!(!(a.leq(x, y) && a.leq(y, x)));
                }
                prop_assert_eq!(Some(a.join(x, y)), brute_lub(&a, x, y));
                prop_assert_eq!(Some(a.meet(x, y)), brute_glb(&a, x, y));
                for z in a.elements() {
                    if a.leq(x, y) && a.leq(y, z) {
                        prop_assert!(a.leq(x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn main_theorem_on_table_presentations((s, t) in presentation(120)) {
        let w = verify_main_theorem(&t).unwrap();
        w.verify().unwrap();
        prop_assert_eq!(canonical_decomposition(&t).unwrap().multiset.sizes().to_vec(), sorted(s.clone()));
        let original = FiniteMvAlgebra::product(&s).unwrap();
        is_isomorphic(&t, &original).unwrap().expect("presentations are isomorphic").verify().unwrap();
    }

    #[test]
    fn transitions_are_coherent((_, a) in algebra(60)) {
        InverseSystem::build(&a).unwrap().check_coherence().unwrap();
        prop_assert_eq!(inverse_limit(&a).unwrap().algebra.size(), a.size());
    }

    #[test]
    fn generated_ideals_match_the_fixpoint(
        ((_, a), picks) in algebra(80).prop_flat_map(|(s, a)| {
            let n = a.size();
            (Just((s, a)), subsequence((0..n).collect::<Vec<_>>(), 0..=3.min(n)))
        })
    ) {
        let generated = ideal_generated(&a, &picks).unwrap();
        prop_assert_eq!(generated.members().to_vec(), naive_ideal(&a, &picks));
        for i in all_ideals(&a).unwrap() {
            if picks.iter().all(|&x| i.contains(x)) {
                prop_assert!(generated.is_subset(&i));
            }
        }
    }

    #[test]
    fn ideals_of_chain_products((s, a) in algebra(216)) {
        let ideals = all_ideals(&a).unwrap();
        prop_assert_eq!(ideals.len(), 1 << s.len());
        prop_assert_eq!(radical(&a).unwrap().members().to_vec(), vec![a.zero()]);
        for i in &ideals {
            prop_assert!(is_principal(&a, i).unwrap().is_some());
            let q = quotient(&a, i).unwrap();
            prop_assert_eq!(q.projection.kernel(), i.members().to_vec());
            if i.is_proper() {
                prop_assert_eq!(
                    is_maximal(&a, i).unwrap(),
                    is_maximal_by_inclusion(&a, i, &ideals).unwrap()
                );
            }
        }
    }

    #[test]
    fn s_is_antitone((_, a) in algebra(216)) {
        let ideals = all_ideals(&a).unwrap();
        let s: Vec<_> = ideals.iter().map(|i| s_decomposition(&a, i).unwrap().factors).collect();
        for (p, i) in ideals.iter().enumerate() {
            for (q, j) in ideals.iter().enumerate() {
                if i.is_subset(j) {
                    prop_assert!(s[q].iter().all(|m| s[p].contains(m)));
                }
            }
        }
    }

    #[test]
    fn atoms_and_center((s, a) in algebra(216)) {
        let mut orders: Vec<usize> = atoms(&a)
            .into_iter()
            .map(|t| match element_order(&a, t) {
                ElementOrder::Finite(o) => o as usize + 1,
                ElementOrder::Infinite => 0,
            })
            .collect();
        orders.sort_unstable();
        prop_assert_eq!(orders, sorted(s.clone()));
        for x in a.elements().filter(|&x| x != a.zero()) {
            prop_assert!(element_order(&a, x).finite().is_some());
        }
        let c = boolean_center(&a).unwrap();
        prop_assert_eq!(c.algebra.size(), 1 << s.len());
        for x in c.algebra.elements() {
            prop_assert_eq!(c.algebra.join(x, c.algebra.neg(x)), c.algebra.one());
        }
    }

    #[test]
    fn completions_are_idempotent_and_agree((_, a) in algebra(216)) {
        let (completion, _) = profinite_product(&a).unwrap();
        let (again, _) = profinite_product(&completion).unwrap();
        prop_assert!(is_isomorphic(&again, &completion).unwrap().is_some());
        let m = macneille_mv(&a).unwrap();
        prop_assert!(is_isomorphic(&m.algebra, &completion).unwrap().is_some());
        prop_assert!(is_isomorphic(&m.algebra, &a).unwrap().is_some());
        let q = quotient(&a, &radical(&a).unwrap()).unwrap();
        let (of_quotient, _) = profinite_product(&q.algebra).unwrap();
        prop_assert!(is_isomorphic(&of_quotient, &completion).unwrap().is_some());
    }

    #[test]
    fn symbolic_and_finite_mac_criteria_agree((_, t) in presentation(120)) {
        let finite = check_mac_criterion(&t).unwrap();
        let symbolic = sig_mac_criterion(&sig_of_finite_algebra(&t).unwrap()).unwrap();
        prop_assert_eq!(finite.holds, symbolic.holds);
        prop_assert!(finite.holds);
    }

    #[test]
    fn dm_cuts_match_brute_force(seed in any::<u64>(), n in 1usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(&mut rng, n);
        let dm = mvcomp::lattice::dedekind_macneille(&p).unwrap();
        dm.verify(&p).unwrap();
        let cuts: std::collections::BTreeSet<Vec<bool>> = dm.cuts.iter().cloned().collect();
        prop_assert_eq!(cuts, brute_force_cuts(&p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn profinite_signature_is_idempotent(s in signature()) {
        let once = sig_profinite(&s);
        prop_assert_eq!(sig_profinite(&once), once.clone());
        prop_assert!(sig_equal(&once, &once));
        prop_assert!(once.infinite_rank_count.is_zero());
    }

    #[test]
    fn sig_equal_is_a_count_comparison(a in signature(), b in signature()) {
        prop_assert_eq!(sig_equal(&a, &b), sig_equal(&b, &a));
        let same = a.infinite_rank_count == b.infinite_rank_count
            && (0..80).all(|n| a.ranks.count(n) == b.ranks.count(n));
        // agreement on a long prefix is necessary, and with these
        // parameters also sufficient
        prop_assert_eq!(sig_equal(&a, &b), same);
    }

    #[test]
    fn unrolling_a_family_head_keeps_equality(s in signature(), k in 1u64..4) {
        let Some(f) = s.ranks.family else { return Ok(()) };
        let mut explicit = s.ranks.explicit.clone();
        let mut first = f.first();
        for _ in 0..k {
            let c = explicit.entry(first).or_insert(Cardinality::ZERO);
            *c = *c + Cardinality::Finite(1);
            first += f.step();
        }
        let unrolled = SpectralSignature::new(
            Spectrum::new(explicit, Some(Family::Arithmetic { first, step: f.step() })),
            s.infinite_rank_count,
            None,
        ).unwrap();
        prop_assert!(sig_equal(&s, &unrolled));
    }

    #[test]
    fn divisibility_decisions(s in signature(), strict in any::<bool>()) {
        let mode = if strict { Divisibility::Literal } else { Divisibility::Subalgebra };
        let d = divisibility_decision(&s, mode);
        if s.ranks.family.is_none() {
            prop_assert_eq!(d.verdict, Verdict::YesBounded);
        }
        if s.ranks.count(2) != Cardinality::ZERO && s.ranks.family.is_some() && !strict {
            prop_assert_eq!(d.verdict, Verdict::YesDivisibility);
        }
        if d.verdict == Verdict::YesDivisibility {
            let n0 = d.n0.unwrap();
            let m = n0 - 1;
            prop_assert!(s.ranks.count(n0) != Cardinality::ZERO);
            // every generated rank beyond the explicit ones satisfies it
            let horizon = s.ranks.explicit.keys().max().copied().unwrap_or(0);
            for n in s.ranks.support_up_to(horizon + 200).into_iter().filter(|&n| n > horizon) {
                let r = if strict { n } else { n - 1 };
                prop_assert_eq!(r % m, 0);
            }
            for &n in s.ranks.explicit.keys() {
                let r = if strict { n } else { n - 1 };
                prop_assert_eq!(r % m != 0, d.exceptional.contains(&n));
            }
        }
    }

    #[test]
    fn unknown_means_no_rank_works(s in signature()) {
        let d = divisibility_decision(&s, Divisibility::Subalgebra);
        if d.verdict == Verdict::Unknown {
            let f = s.ranks.family.unwrap();
            // brute force over the rank set and a long window of the family
            for n0 in s.ranks.support_up_to(200) {
                let m = n0 - 1;
                let tail_ok = (0..50).all(|j| (f.first() + j * f.step() - 1) % m == 0);
                prop_assert!(!tail_ok, "n0 = {} works", n0);
            }
        }
    }
}

#[test]
fn finite_signatures_commute_with_completion() {
    for (_, a) in corpus().into_iter().filter(|(_, a)| a.size() <= 60) {
        let (completion, _) = profinite_product(&a).unwrap();
        assert_eq!(
            sig_of_finite_algebra(&completion).unwrap(),
            sig_profinite(&sig_of_finite_algebra(&a).unwrap())
        );
    }
}

#[test]
fn ranks_equal_counts_of_finite_signature() {
    let a = FiniteMvAlgebra::product(&[3, 2, 3]).unwrap();
    let s = sig_of_finite_algebra(&a).unwrap();
    let expected: BTreeMap<u64, Cardinality> =
        [(2, Cardinality::Finite(1)), (3, Cardinality::Finite(2))].into_iter().collect();
    assert_eq!(s.finite_part(), &expected);
}
