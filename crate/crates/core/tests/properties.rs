mod common;

use std::collections::{BTreeSet, HashSet, VecDeque};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relator_basis::low_index::low_index_tables;
use relator_basis::transversal::SchreierTransversal;
use relator_basis::{
    basis_through_word, fold_verify, rewrite_in_basis, rewrite_presentation, run_lemma, schreier_basis,
    verify_certificate, Alphabet, AlphabetOrientation, CosetTable, FiniteQuotientHom, FreeWord, Letter, Perm,
    Presentation, Sign,
};

use common::*;

fn letter(m: usize) -> impl Strategy<Value = Letter> {
    (0..m, any::<bool>()).prop_map(|(g, p)| Letter::new(g, if p { Sign::Pos } else { Sign::Neg }))
}

fn raw(m: usize, max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter(m), 0..=max)
}

fn word(m: usize, max: usize) -> impl Strategy<Value = FreeWord> {
    raw(m, max).prop_map(FreeWord::reduce)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduction_matches_naive_oracle(r in raw(3, 64)) {
        let w = FreeWord::reduce(r.clone());
        let oracle = naive_reduce(&r);
        prop_assert_eq!(w.letters(), oracle.as_slice());
        prop_assert!(w.is_reduced());
        prop_assert_eq!(FreeWord::reduce(w.letters().iter().copied()), w);
    }

    #[test]
    fn print_parse_round_trip(w in word(4, 30)) {
        let al = Alphabet::standard(4).unwrap();
        prop_assert_eq!(al.parse_word(&al.format_word(&w)).unwrap(), w);
    }

    #[test]
    fn concat_parity_and_length(u in word(3, 20), v in word(3, 20)) {
        let uv = &u * &v;
        prop_assert!(uv.len() <= u.len() + v.len());
        prop_assert_eq!(uv.len() % 2, (u.len() + v.len()) % 2);
    }

    #[test]
    fn prefixes_have_increasing_lengths(w in word(3, 30)) {
        prop_assume!(!w.is_empty());
        let ps = w.prefixes().unwrap();
        prop_assert_eq!(ps.len(), w.len());
        for (k, p) in ps.iter().enumerate() {
            prop_assert_eq!(p.len(), k);
            prop_assert!(w.starts_with(p));
        }
    }

    #[test]
    fn eval_is_a_homomorphism(seed in any::<u64>(), u in word(2, 20), v in word(2, 20)) {
        let mut r = rng(seed);
        let h = FiniteQuotientHom::new(
            Alphabet::standard(2).unwrap(),
            vec![random_perm(&mut r, 5), random_perm(&mut r, 5)],
        ).unwrap();
        let hu = h.eval_word(&u).unwrap();
        let hv = h.eval_word(&v).unwrap();
        prop_assert_eq!(h.eval_word(&(&u * &v)).unwrap(), hu.then(&hv));
        prop_assert_eq!(h.eval_word(&u.inverse()).unwrap(), hu.inverse());
    }

    #[test]
    fn image_closure_is_a_group(seed in any::<u64>(), n in 1usize..=6, m in 1usize..=3) {
        let mut r = rng(seed);
        let h = FiniteQuotientHom::new(
            Alphabet::standard(m).unwrap(),
            (0..m).map(|_| random_perm(&mut r, n)).collect(),
        ).unwrap();
        let elements = h.image_closure().unwrap();
        let set: HashSet<&Perm> = elements.iter().collect();
        prop_assert_eq!(set.len(), elements.len());
        prop_assert!(elements[0].is_identity());
        for p in &elements {
            prop_assert!(set.contains(&p.inverse()));
            for q in &elements {
                prop_assert!(set.contains(&p.then(q)));
            }
        }
        let factorial: usize = (1..=n).product();
        prop_assert_eq!(factorial % elements.len(), 0);
    }

    #[test]
    fn trace_is_an_action(seed in any::<u64>(), u in word(3, 20), v in word(3, 20)) {
        let mut r = rng(seed);
        let t = random_table(&mut r, 3, 7);
        for c in 0..t.index() {
            let direct = t.trace(c, &(&u * &v)).unwrap();
            prop_assert_eq!(direct, t.trace(t.trace(c, &u).unwrap(), &v).unwrap());
        }
    }

    #[test]
    fn trace_ignores_cancelling_pairs(seed in any::<u64>(), w in raw(3, 20), inserts in prop::collection::vec((0usize..21, letter(3)), 0..6)) {
        let mut r = rng(seed);
        let t = random_table(&mut r, 3, 6);
        let mut padded: Vec<Letter> = w.clone();
        for (pos, l) in inserts {
            let pos = pos.min(padded.len());
            padded.splice(pos..pos, [l, l.inverse()]);
        }
        // trace the unreduced sequence letter by letter
        let walked = padded.iter().fold(CosetTable::BASE, |c, &l| t.act(c, l));
        prop_assert_eq!(walked, t.coset_of(&FreeWord::reduce(w)).unwrap());
    }

    #[test]
    fn regular_table_membership_is_the_kernel(seed in any::<u64>(), w in word(2, 24)) {
        let mut r = rng(seed);
        let h = FiniteQuotientHom::new(
            Alphabet::standard(2).unwrap(),
            vec![random_perm(&mut r, 4), random_perm(&mut r, 4)],
        ).unwrap();
        let t = CosetTable::regular(&h).unwrap();
        prop_assert!(t.is_regular().unwrap());
        prop_assert_eq!(t.contains(&w), h.eval_word(&w).unwrap().is_identity());
    }

    #[test]
    fn unseeded_reps_have_minimal_length(seed in any::<u64>(), n in 1usize..=10, m in 1usize..=3) {
        let mut r = rng(seed);
        let t = random_table(&mut r, m, n);
        let tr = SchreierTransversal::new(&t, None).unwrap();
        tr.validate().unwrap();
        // independent BFS distances
        let mut dist = vec![usize::MAX; n];
        dist[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for g in 0..m {
                for l in [Letter::pos(g), Letter::neg(g)] {
                    let d = t.act(c, l);
                    if dist[d] == usize::MAX {
                        dist[d] = dist[c] + 1;
                        queue.push_back(d);
                    }
                }
            }
        }
        for (rep, d) in tr.reps.iter().zip(&dist) {
            prop_assert_eq!(rep.len(), *d);
        }
    }

    #[test]
    fn basis_elements_rewrite_to_themselves(seed in any::<u64>(), n in 1usize..=8, m in 1usize..=3) {
        let mut r = rng(seed);
        let t = random_table(&mut r, m, n);
        let b = schreier_basis(&SchreierTransversal::new(&t, None).unwrap(), &AlphabetOrientation::identity()).unwrap();
        for (i, u) in b.elements.iter().enumerate() {
            prop_assert_eq!(rewrite_in_basis(&b, u).unwrap(), vec![(i, Sign::Pos)]);
        }
    }

    #[test]
    fn orientation_flip_keeps_a_basis(seed in any::<u64>(), n in 1usize..=8, flip in 0usize..3) {
        let mut r = rng(seed);
        let t = random_table(&mut r, 3, n);
        let tr = SchreierTransversal::new(&t, None).unwrap();
        let b = schreier_basis(&tr, &AlphabetOrientation::flipping(flip)).unwrap();
        prop_assert!(b.invariant_failures().is_empty());
        prop_assert!(fold_verify(&b));
        let w = random_subgroup_element(&mut r, &t, 16);
        prop_assert_eq!(b.evaluate(&rewrite_in_basis(&b, &w).unwrap()), w);
    }
}

#[test]
fn basis_through_random_loops() {
    let mut r = rng(7);
    let mut done = 0;
    while done < 200 {
        let m = 1 + done % 3;
        let n = 1 + (done * 7) % 9;
        let t = random_table(&mut r, m, n);
        let Some(w) = random_simple_loop(&mut r, &t) else { continue };
        assert!(t.contains(&w) && t.separates_prefixes(&w).unwrap());
        let out = basis_through_word(&t, &w).unwrap();
        assert_eq!(out.basis.elements[out.position], w);
        assert_eq!(out.basis.edge_index.values().filter(|&&i| i == out.position).count(), 1);
        assert!(out.basis.invariant_failures().is_empty());
        assert!(fold_verify(&out.basis), "fold failed for {:?}", w);
        done += 1;
    }
}

#[test]
fn pigeonhole_rejects_long_words() {
    let mut r = rng(11);
    for _ in 0..50 {
        let t = random_table(&mut r, 2, 3);
        let w = random_subgroup_element(&mut r, &t, 10);
        if w.len() > t.index() {
            assert!(!t.separates_prefixes(&w).unwrap());
            assert!(basis_through_word(&t, &w).is_err());
        }
    }
}

#[test]
fn low_index_outputs_are_distinct_and_valid() {
    let presentations = [
        Presentation::free(Alphabet::standard(2).unwrap()),
        Presentation::parse(2, &["aa", "bbb", "abab"]).unwrap(),
        relator_basis::surface_presentation(1).unwrap(),
    ];
    for p in &presentations {
        for n in 1..=4 {
            let tables = low_index_tables(p, n).unwrap();
            let canon: BTreeSet<String> = tables.iter().map(|t| t.canonical().to_text()).collect();
            assert_eq!(canon.len(), tables.len());
            let texts: Vec<String> = tables.iter().map(|t| t.to_text()).collect();
            let mut sorted = texts.clone();
            sorted.sort();
            assert_eq!(texts, sorted);
            for t in &tables {
                assert!(t.kills(p.relators()));
                assert_eq!(t.index(), n);
            }
        }
    }
}

/// Brute force over all transitive actions of two generators on n points,
/// counting canonical forms.
#[test]
fn low_index_matches_brute_force() {
    for n in 1..=4 {
        let perms = Perm::all_lexicographic(n);
        let al = Alphabet::standard(2).unwrap();
        let p = Presentation::parse(2, &["abAB"]).unwrap();
        let mut canon = BTreeSet::new();
        for x in &perms {
            for y in &perms {
                if let Ok(t) = CosetTable::new(al.clone(), vec![x.clone(), y.clone()]) {
                    if t.kills(p.relators()) {
                        canon.insert(t.canonical().to_text());
                    }
                }
            }
        }
        assert_eq!(low_index_tables(&p, n).unwrap().len(), canon.len(), "index {n}");
    }
}

#[test]
fn lemma_is_deterministic_and_monotone() {
    let p = Presentation::parse(2, &["aabb", "abAB"]).unwrap();
    let r = p.alphabet().parse_word("aabb").unwrap();
    let first = run_lemma(&p, &r, 4).unwrap().unwrap();
    let again = run_lemma(&p, &r, 4).unwrap().unwrap();
    assert_eq!(relator_basis::certificate::to_json(&first), relator_basis::certificate::to_json(&again));
    for d in 5..=6 {
        assert_eq!(run_lemma(&p, &r, d).unwrap().unwrap(), first);
    }
    assert!(verify_certificate(&first).is_ok());
    assert!(first.generator_bound < first.basis.elements.len());
}

/// Explicit witness for a free group: a partial permutation sending point j
/// to j+1 along the j-th letter, completed arbitrarily.
fn path_witness(al: &Alphabet, r: &FreeWord) -> FiniteQuotientHom {
    let k = r.len();
    let m = al.size();
    let mut fwd: Vec<Vec<Option<usize>>> = vec![vec![None; k]; m];
    for (j, l) in r.letters().iter().enumerate().take(k - 1) {
        let (src, dst) = match l.sign {
            Sign::Pos => (j, j + 1),
            Sign::Neg => (j + 1, j),
        };
        fwd[l.generator][src] = Some(dst);
    }
    let gen_images = fwd
        .into_iter()
        .map(|row| {
            let used: BTreeSet<usize> = row.iter().flatten().copied().collect();
            let mut free = (0..k).filter(|x| !used.contains(x));
            Perm::from_images(row.iter().map(|x| x.unwrap_or_else(|| free.next().unwrap())).collect()).unwrap()
        })
        .collect();
    FiniteQuotientHom::new(al.clone(), gen_images).unwrap()
}

#[test]
fn free_group_prefixes_separate_at_degree_len() {
    let mut r = rng(3);
    let al = Alphabet::standard(3).unwrap();
    for _ in 0..200 {
        let w = random_word(&mut r, 3, 7);
        if w.is_empty() {
            continue;
        }
        let h = path_witness(&al, &w);
        assert_eq!(h.degree(), w.len());
        assert!(CosetTable::regular(&h).unwrap().separates_prefixes(&w).unwrap());
    }
}

#[test]
fn free_presentation_runs_verify_or_report_not_found() {
    let mut r = rng(4);
    let al = Alphabet::standard(2).unwrap();
    let p = Presentation::free(al.clone());
    let mut found = 0;
    for _ in 0..25 {
        let w = random_word(&mut r, 2, 5);
        if w.is_empty() {
            continue;
        }
        if let Some(c) = run_lemma(&p, &w, w.len().max(2)).unwrap() {
            assert!(verify_certificate(&c).is_ok());
            assert_eq!(c.basis.elements[c.r_position], w);
            found += 1;
        }
    }
    assert!(found > 0);
}

#[test]
fn rewritten_relators_expand_to_conjugates() {
    let mut r = rng(5);
    for _ in 0..30 {
        let t = random_table(&mut r, 2, 5);
        let rels: Vec<FreeWord> = (0..2)
            .map(|_| loop {
                let w = random_subgroup_element(&mut r, &t, 8);
                if !w.is_empty() {
                    break w;
                }
            })
            .collect();
        let p = Presentation::new(t.alphabet().clone(), rels).unwrap();
        // subgroup elements need not be killed at every coset
        let Ok(sub) = rewrite_presentation(&p, &t) else { continue };
        for i in 0..sub.relators.len() {
            assert_eq!(sub.expand(&sub.relators[i]), sub.conjugate_of(i));
        }
    }
}
