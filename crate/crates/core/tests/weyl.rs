use hecke_clifford::{CartanType, Root, RootSystemCtx, SignedPerm};
use proptest::prelude::*;

fn names(ctx: &RootSystemCtx) -> Vec<String> {
    ctx.positive_roots()
        .iter()
        .map(ToString::to_string)
        .collect()
}

#[test]
fn positive_roots_rank_two() {
    assert_eq!(names(&RootSystemCtx::new(CartanType::A, 2)), ["e1-e2"]);
    let mut b = names(&RootSystemCtx::new(CartanType::B, 2));
    b.sort();
    assert_eq!(b, ["e1", "e1+e2", "e1-e2", "e2"]);
    let mut d = names(&RootSystemCtx::new(CartanType::D, 2));
    d.sort();
    assert_eq!(d, ["e1+e2", "e1-e2"]);
}

#[test]
fn reflections() {
    let b = RootSystemCtx::new(CartanType::B, 2);
    assert_eq!(b.reflection(&Root::diff(1, 2)).unwrap().images(), [2, 1]);
    assert_eq!(b.reflection(&Root::sum(1, 2)).unwrap().images(), [-2, -1]);
    assert_eq!(b.reflection(&Root::short(2)).unwrap().images(), [1, -2]);
    let a = RootSystemCtx::new(CartanType::A, 2);
    assert!(a.reflection(&Root::short(1)).is_err());
}

#[test]
fn action_on_roots() {
    let s12 = SignedPerm::transposition(3, 1, 2);
    assert_eq!(s12.act_on_root(&Root::diff(1, 2)), (Root::diff(1, 2), -1));
    assert_eq!(s12.act_on_root(&Root::diff(2, 3)), (Root::diff(1, 3), 1));
    let id = SignedPerm::identity(3);
    assert_eq!(id.act_on_root(&Root::sum(1, 3)), (Root::sum(1, 3), 1));
}

#[test]
fn group_operations() {
    let s12 = SignedPerm::transposition(3, 1, 2);
    let s23 = SignedPerm::transposition(3, 2, 3);
    assert!(s12.compose(&s12).is_identity());
    assert_eq!(s12.compose(&s23).inverse(), s23.compose(&s12));
    let sn: SignedPerm = "[1,-2]".parse().unwrap();
    assert_eq!(sn.act_index(2), -2);
}

#[test]
fn reduced_words() {
    let a = RootSystemCtx::new(CartanType::A, 3);
    assert!(a.reduced_word(&SignedPerm::identity(3)).unwrap().is_empty());
    let s13 = SignedPerm::transposition(3, 1, 3);
    let word = a.reduced_word(&s13).unwrap();
    assert_eq!(word.len(), 3);
    assert_eq!(a.word_product(word), s13);
    let b = RootSystemCtx::new(CartanType::B, 2);
    let sn: SignedPerm = "[1,-2]".parse().unwrap();
    let word = b.reduced_word(&sn).unwrap();
    assert_eq!(word.len(), 1);
    assert_eq!(b.simple_reflections()[word[0]], sn);
}

#[test]
fn group_orders() {
    let orders: Vec<usize> = [(CartanType::A, 4), (CartanType::B, 3), (CartanType::D, 3)]
        .iter()
        .map(|(t, n)| RootSystemCtx::new(*t, *n).order())
        .collect();
    assert_eq!(orders, [24, 48, 24]);
}

proptest! {
    #[test]
    fn words_and_lengths(idx in 0usize..48) {
        let ctx = RootSystemCtx::new(CartanType::B, 3);
        let w = ctx.elements()[idx].clone();
        let word = ctx.reduced_word(&w).unwrap();
        prop_assert_eq!(ctx.word_product(word), w.clone());
        prop_assert_eq!(word.len(), ctx.inversion_count(&w));
        prop_assert!(w.compose(&w.inverse()).is_identity());
    }
}
