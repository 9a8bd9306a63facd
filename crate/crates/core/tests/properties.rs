use proptest::prelude::*;

use placto::algebra::{NcPoly, PolyContext};
use placto::rewrite::{Canonicalizer, RelationSet};
use placto::tableau::{longest_hook, mixed_insert_word, p_tableau};
use placto::word::{Interval, Word};

const N: u8 = 4;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=N, 0..=max_len).prop_map(|l| Word::new(N, l).unwrap())
}

fn interval() -> impl Strategy<Value = Interval> {
    (1..=N, 1..=N).prop_map(|(a, b)| Interval::new(a.min(b), a.max(b)).unwrap())
}

fn poly() -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((word(3), -3i64..=3), 0..6)
        .prop_map(|terms| NcPoly::from_terms(PolyContext::new(N, 6).unwrap(), terms).unwrap())
}

fn longest_weakly_increasing(l: &[u8]) -> usize {
    let mut best = vec![0usize; l.len()];
    for i in 0..l.len() {
        best[i] = 1
            + (0..i)
                .filter(|&j| l[j] <= l[i])
                .map(|j| best[j])
                .max()
                .unwrap_or(0);
    }
    best.into_iter().max().unwrap_or(0)
}

fn is_hook(l: &[u8]) -> bool {
    let mut i = 1;
    while i < l.len() && l[i] < l[i - 1] {
        i += 1;
    }
    l[i.min(l.len())..].windows(2).all(|p| p[0] <= p[1])
}

proptest! {
    #[test]
    fn restriction_is_a_monoid_morphism(u in word(6), v in word(6), iv in interval()) {
        prop_assert_eq!(u.concat(&v).unwrap().restrict(iv), u.restrict(iv).concat(&v.restrict(iv)).unwrap());
    }

    #[test]
    fn classes_preserve_content(w in word(6)) {
        for rels in [RelationSet::knuth(), RelationSet::shifted_knuth()] {
            for m in rels.equiv_class(&w).members() {
                prop_assert_eq!(m.content(), w.content());
            }
        }
    }

    #[test]
    fn equivalence_is_a_congruence(x in word(2), w in word(5), y in word(2), pick in any::<prop::sample::Index>()) {
        for rels in [RelationSet::knuth(), RelationSet::shifted_knuth()] {
            let class = rels.equiv_class(&w);
            let members: Vec<&Word> = class.members().iter().collect();
            let v = members[pick.index(members.len())];
            let mut canon = Canonicalizer::new(&rels);
            let wrap = |m: &Word| x.concat(m).unwrap().concat(&y).unwrap();
            prop_assert_eq!(canon.canonical(&wrap(&w)), canon.canonical(&wrap(v)));
        }
    }

    #[test]
    fn insertion_tableau_classifies(w in word(7)) {
        let t = p_tableau(&w);
        let r = t.reading_word(N).unwrap();
        prop_assert_eq!(p_tableau(&r), t.clone());
        prop_assert!(RelationSet::knuth().equivalent(&w, &r));
        prop_assert_eq!(t.width(), longest_weakly_increasing(w.letters()));
    }

    #[test]
    fn mixed_insertion_yields_valid_tableaux(w in word(7)) {
        let t = mixed_insert_word(&w);
        prop_assert!(t.validate().is_ok());
        prop_assert_eq!(t.size(), w.degree());
    }

    #[test]
    fn longest_hook_matches_subsets(l in prop::collection::vec(1..=N, 0..=10)) {
        let best = (0u32..1 << l.len())
            .map(|mask| (0..l.len()).filter(|i| mask >> i & 1 == 1).map(|i| l[i]).collect::<Vec<_>>())
            .filter(|s| is_hook(s))
            .map(|s| s.len())
            .max()
            .unwrap();
        prop_assert_eq!(longest_hook(&l), best);
    }

    #[test]
    fn product_is_bilinear(a in poly(), b in poly(), c in poly()) {
        let left = a.add(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let left = c.mul(&a.sub(&b).unwrap()).unwrap();
        let right = c.mul(&a).unwrap().sub(&c.mul(&b).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn abelianization_is_multiplicative_on_words(u in word(3), v in word(3)) {
        let ctx = PolyContext::new(N, 6).unwrap();
        let p = NcPoly::sum_of(ctx, [u.clone()]).unwrap();
        let q = NcPoly::sum_of(ctx, [v.clone()]).unwrap();
        let prod = p.mul(&q).unwrap().abelianize();
        prop_assert_eq!(prod.terms().len(), 1);
        prop_assert_eq!(prod.terms().keys().next().unwrap(), &u.concat(&v).unwrap().content());
    }
}
