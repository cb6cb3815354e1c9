use sq_core::chains::{explore_word, recover_word, sub_enumerate, Classification};
use sq_core::{Quiver, Word};

fn square() -> Quiver {
    Quiver::new(4, vec![(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
}

fn w(v: &[usize]) -> Word {
    Word::from(v)
}

#[test]
fn growing_family_on_the_square() {
    let q = square();
    let r = explore_word(&q, &w(&[1, 2, 3, 4, 2, 3, 4, 1])).unwrap();
    assert_eq!(r.classification, Classification::Monotilting);
    let t = r.final_tilting.unwrap();
    let s = sub_enumerate(&q, &t, 12).unwrap();
    assert!(!s.complete);
    assert!(s.growth_detected);
    assert!(s.certificate.is_none());
}

#[test]
fn completion_word_on_the_square() {
    let q = square();
    let r = explore_word(&q, &w(&[1, 2, 3, 4, 2, 3, 1, 4])).unwrap();
    assert_eq!(r.classification, Classification::Monotilting);
    let t = r.final_tilting.unwrap();
    let mut dims: Vec<Vec<usize>> = t.iter().map(|m| m.dims().to_vec()).collect();
    dims.sort();
    assert_eq!(dims, vec![vec![1, 0, 1, 1], vec![1, 1, 0, 1], vec![3, 2, 2, 2], vec![4, 3, 3, 3]]);
    let c = w(&[1, 2, 3, 4]);
    let found = recover_word(&q, &c, &t, 13).unwrap();
    assert_eq!(found, Some(w(&[1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4, 2, 3])));
}
