use eac::words::{Letter, Sign, Word};
use proptest::prelude::*;

fn word(max_gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..max_gens, any::<bool>()), 0..=max_len).prop_map(|ls| {
        Word::new(
            ls.into_iter()
                .map(|(g, neg)| Letter::new(g, if neg { Sign::Neg } else { Sign::Pos }))
                .collect(),
        )
    })
}

/// Cancels adjacent inverse pairs in an order driven by `choices`.
fn reduce_in_order(w: &Word, choices: &[usize]) -> Word {
    let mut letters = w.letters().to_vec();
    let mut k = 0;
    loop {
        let pairs: Vec<usize> = (0..letters.len().saturating_sub(1))
            .filter(|&i| letters[i].cancels(letters[i + 1]))
            .collect();
        if pairs.is_empty() {
            return Word::new(letters);
        }
        let pick = pairs[choices.get(k).copied().unwrap_or(0) % pairs.len()];
        k += 1;
        letters.drain(pick..pick + 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn reduce_is_idempotent(w in word(3, 24)) {
        let r = w.reduce();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.reduce(), r);
    }

    #[test]
    fn reduction_order_does_not_matter(w in word(2, 24), choices in prop::collection::vec(any::<usize>(), 24)) {
        prop_assert_eq!(reduce_in_order(&w, &choices), w.reduce());
    }

    #[test]
    fn word_times_inverse_is_identity(w in word(4, 20)) {
        prop_assert!(w.concat(&w.invert()).reduce().is_empty());
        prop_assert!(w.invert().concat(&w).reduce().is_empty());
    }

    #[test]
    fn invert_is_involution(w in word(4, 20)) {
        prop_assert_eq!(w.invert().invert(), w.clone());
        prop_assert_eq!(w.invert().len(), w.len());
    }

    #[test]
    fn rotations_compose(w in word(3, 15), a in -20i64..20, b in -20i64..20) {
        prop_assert_eq!(w.rotate(a).rotate(b), w.rotate(a + b));
        prop_assert_eq!(w.rotate(w.len() as i64), w.clone());
    }

    #[test]
    fn cyclic_reduce_is_idempotent_and_conjugate(w in word(3, 20)) {
        let c = w.cyclic_reduce();
        prop_assert!(c.is_cyclically_reduced());
        prop_assert_eq!(c.cyclic_reduce(), c.clone());
        prop_assert_eq!(c.exponent_vector(3).unwrap(), w.exponent_vector(3).unwrap());
    }

    #[test]
    fn exponent_vector_is_additive(u in word(3, 12), v in word(3, 12)) {
        let sum: Vec<i64> = u.exponent_vector(3).unwrap().iter()
            .zip(v.exponent_vector(3).unwrap())
            .map(|(x, y)| x + y)
            .collect();
        prop_assert_eq!(u.concat(&v).exponent_vector(3).unwrap(), sum);
        prop_assert_eq!(u.reduce().exponent_vector(3).unwrap(), u.exponent_vector(3).unwrap());
    }

    #[test]
    fn substitution_inverts(w in word(3, 12), s in any::<bool>()) {
        use eac::words::GeneratorId;
        let (i, j) = (GeneratorId(0), GeneratorId(1));
        let sign = if s { Sign::Pos } else { Sign::Neg };
        let there = w.substitute(i, j, sign).unwrap();
        let back = there.substitute(i, j, sign.flip()).unwrap();
        prop_assert_eq!(back.reduce(), w.reduce());
    }
}
