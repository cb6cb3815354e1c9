use super::{is_reduced, CoxeterError, GroupElement, Quiver, Word};

/// A reduced expression `c^(0) c^(1) ... c^(m)` where each block is a
/// subword of the Coxeter word `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortableDecomposition {
    pub blocks: Vec<Vec<usize>>,
}

impl SortableDecomposition {
    pub fn word(&self) -> Word {
        Word::new(self.blocks.iter().flatten().copied().collect())
    }

    /// `supp(c^(t+1)) ⊆ supp(c^(t))` for every `t`.
    pub fn is_nested(&self) -> bool {
        self.blocks
            .windows(2)
            .all(|p| p[1].iter().all(|u| p[0].contains(u)))
    }

    /// Blocks printed as `123|12|1` (letters separated by spaces when a
    /// vertex index has more than one digit).
    pub fn compact(&self) -> String {
        let wide = self.blocks.iter().flatten().any(|&u| u > 9);
        let sep = if wide { " " } else { "" };
        self.blocks
            .iter()
            .map(|b| b.iter().map(|u| u.to_string()).collect::<Vec<_>>().join(sep))
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// Whether `c` lists every vertex exactly once with the source of each
/// arrow before its target.
pub fn is_admissible_coxeter(q: &Quiver, c: &Word) -> bool {
    let n = q.vertex_count();
    if c.len() != n || c.validate(q).is_err() {
        return false;
    }
    let mut pos = vec![usize::MAX; n + 1];
    for (k, &u) in c.letters().iter().enumerate() {
        if pos[u] != usize::MAX {
            return false;
        }
        pos[u] = k;
    }
    q.arrows().iter().all(|&(s, t)| pos[s] < pos[t])
}

fn positions(c: &Word) -> Vec<usize> {
    let max = c.letters().iter().copied().max().unwrap_or(0);
    let mut pos = vec![usize::MAX; max + 1];
    for (k, &u) in c.letters().iter().enumerate() {
        pos[u] = k;
    }
    pos
}

/// Splits the literal word into maximal runs whose letters appear in
/// increasing position along `c`. Returns `None` if a letter of `w` does not
/// occur in `c`.
pub fn literal_blocks(c: &Word, w: &Word) -> Option<Vec<Vec<usize>>> {
    let pos = positions(c);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut last = None;
    for &u in w.letters() {
        let p = *pos.get(u)?;
        if p == usize::MAX {
            return None;
        }
        match last {
            Some(lp) if p > lp => blocks.last_mut().unwrap().push(u),
            _ => blocks.push(vec![u]),
        }
        last = Some(p);
    }
    Some(blocks)
}

/// The c-sorting word of the group element represented by `w`: the
/// leftmost subword of `c c c ...` that is a reduced expression for it,
/// cut into its passes through `c`.
pub fn sorting_word(q: &Quiver, c: &Word, w: &Word) -> Result<SortableDecomposition, CoxeterError> {
    if !is_admissible_coxeter(q, c) {
        return Err(CoxeterError::NotAdmissible(c.clone()));
    }
    let mut rest = GroupElement::from_word(q, w)?;
    let mut blocks = Vec::new();
    while !rest.is_identity() {
        let mut block = Vec::new();
        for &u in c.letters() {
            if rest.is_left_descent(u) {
                block.push(u);
                rest.mul_left(u);
            }
        }
        debug_assert!(!block.is_empty());
        blocks.push(block);
    }
    Ok(SortableDecomposition { blocks })
}

/// The c-sortable decomposition of the element represented by the reduced
/// word `w`, or `None` when the element is not c-sortable.
pub fn sortable_decompose(
    q: &Quiver,
    c: &Word,
    w: &Word,
) -> Result<Option<SortableDecomposition>, CoxeterError> {
    w.validate(q)?;
    if !is_reduced(q, w) {
        return Err(CoxeterError::NotReduced);
    }
    let d = sorting_word(q, c, w)?;
    Ok(d.is_nested().then_some(d))
}
