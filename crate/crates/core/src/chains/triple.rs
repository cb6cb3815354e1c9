use super::{ChainError, ChainStatus};
use crate::coxeter::{is_admissible_coxeter, is_reduced, literal_blocks, Quiver, Word};

/// A validated word in nested block form with respect to a Coxeter word.
#[derive(Clone, Debug)]
pub(crate) struct Triple {
    pub letters: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    pub status: ChainStatus,
}

impl Triple {
    /// Support of the first block, which is the support of the word.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.blocks.first().cloned().unwrap_or_default();
        s.sort_unstable();
        s
    }

    pub fn first_block_len(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }

    /// 0-based position of the previous occurrence of the letter at `j`.
    pub fn previous_occurrence(&self, j: usize) -> Option<usize> {
        let u = self.letters[j];
        (0..j).rev().find(|&k| self.letters[k] == u)
    }

    /// 0-based positions of the last occurrence of each letter, increasing.
    pub fn last_occurrences(&self) -> Vec<usize> {
        last_occurrences(&self.letters)
    }
}

pub(crate) fn last_occurrences(letters: &[usize]) -> Vec<usize> {
    (0..letters.len())
        .filter(|&j| !letters[j + 1..].contains(&letters[j]))
        .collect()
}

/// Checks that `w` splits into blocks, each a subword of `c`, with nested
/// supports, and that it is reduced or reduced up to its last letter.
pub(crate) fn validate(q: &Quiver, c: &Word, w: &Word) -> Result<Triple, ChainError> {
    if !is_admissible_coxeter(q, c) {
        return Err(ChainError::NotAdmissible(format!("`{c}` is not an admissible Coxeter element")));
    }
    w.validate(q)?;
    let blocks = literal_blocks(c, w).expect("c contains every vertex");
    for (t, pair) in blocks.windows(2).enumerate() {
        if let Some(u) = pair[1].iter().find(|u| !pair[0].contains(u)) {
            return Err(ChainError::NotAdmissible(format!(
                "block {} contains {u}, which is missing from block {}",
                t + 2,
                t + 1
            )));
        }
    }
    let status = if is_reduced(q, w) {
        ChainStatus::ReducedSortable
    } else if !w.is_empty() && is_reduced(q, &Word::from(&w.letters()[..w.len() - 1])) {
        ChainStatus::SortableShapeNonreduced
    } else {
        return Err(ChainError::NotAdmissible(format!(
            "`{w}` is not reduced, even after dropping its last letter"
        )));
    };
    Ok(Triple {
        letters: w.letters().to_vec(),
        blocks,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qa() -> Quiver {
        Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn accepts_nested_words() {
        let t = validate(&qa(), &Word::new(vec![1, 2, 3]), &Word::new(vec![1, 2, 3, 1, 2, 1])).unwrap();
        assert_eq!(t.status, ChainStatus::ReducedSortable);
        assert_eq!(t.first_block_len(), 3);
        assert_eq!(t.previous_occurrence(3), Some(0));
        assert_eq!(t.previous_occurrence(2), None);
        assert_eq!(t.last_occurrences(), vec![2, 4, 5]);
    }

    #[test]
    fn rejects_bad_shapes() {
        let c = Word::new(vec![1, 2, 3]);
        assert!(validate(&qa(), &Word::new(vec![2, 1, 3]), &c).is_err());
        // 1 2 | 3: block 2 leaves the support of block 1
        assert!(validate(&qa(), &c, &Word::new(vec![1, 2, 1, 3])).is_err());
        let qc = Quiver::new(4, vec![(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        for c in [vec![1, 2, 3, 4], vec![1, 3, 2, 4]] {
            assert!(validate(&qc, &Word::new(c), &Word::new(vec![1, 2, 3, 4, 3, 1, 4])).is_err());
        }
    }

    #[test]
    fn nonreduced_last_letter() {
        let q = Quiver::linear(2);
        let t = validate(&q, &Word::new(vec![1, 2]), &Word::new(vec![1, 2, 1, 2])).unwrap();
        assert_eq!(t.status, ChainStatus::SortableShapeNonreduced);
    }
}
