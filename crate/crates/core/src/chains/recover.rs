use std::collections::BTreeMap;

use log::debug;

use super::chain::t_w;
use super::enumerate::sub_members;
use super::triple::last_occurrences;
use super::ChainError;
use crate::coxeter::{is_admissible_coxeter, Quiver, ReflectionProduct, RootVector, Word};
use crate::rep::{is_isomorphic, tilting_defect, Representation};

/// Depth-first search over words in nested block form whose layer roots
/// use up exactly the dimension vectors of `members`, and whose members at
/// last occurrences are isomorphic to `t`.
struct Search<'a> {
    q: &'a Quiver,
    c: &'a [usize],
    pos: Vec<usize>,
    len: usize,
    t: &'a [Representation],
    t_dims: Vec<RootVector>,
    remaining: BTreeMap<RootVector, usize>,
    letters: Vec<usize>,
    roots: Vec<RootVector>,
    found: Option<Word>,
}

impl Search<'_> {
    fn leaf(&mut self) -> Result<(), ChainError> {
        let mut last: Vec<RootVector> = last_occurrences(&self.letters)
            .into_iter()
            .map(|j| self.roots[j].clone())
            .collect();
        last.sort();
        if last != self.t_dims {
            return Ok(());
        }
        let w = Word::new(self.letters.clone());
        let tw = t_w(self.q, &Word::from(self.c), &w)?;
        for x in self.t {
            let mut matched = false;
            for y in tw.iter().filter(|y| y.dims() == x.dims()) {
                if is_isomorphic(x, y)? {
                    matched = true;
                    break;
                }
            }
            if !matched {
                debug!("word {w} has the right roots but a different T_w");
                return Ok(());
            }
        }
        self.found = Some(w);
        Ok(())
    }

    fn step(&mut self, prod: &ReflectionProduct, block: &[usize], prev: Option<&[usize]>) -> Result<(), ChainError> {
        if self.found.is_some() {
            return Ok(());
        }
        if self.letters.len() == self.len {
            return self.leaf();
        }
        for &x in self.c {
            let (next_block, next_prev): (Vec<usize>, Option<&[usize]>) = match block.last() {
                None => (vec![x], None),
                Some(&l) if self.pos[x - 1] > self.pos[l - 1] => {
                    if prev.is_some_and(|p| !p.contains(&x)) {
                        continue;
                    }
                    let mut b = block.to_vec();
                    b.push(x);
                    (b, prev)
                }
                Some(_) if block.contains(&x) => (vec![x], Some(block)),
                Some(_) => continue,
            };
            let root = prod.image_of_simple(x).clone();
            match self.remaining.get_mut(&root) {
                Some(k) if *k > 0 => *k -= 1,
                _ => continue,
            }
            let mut next = prod.clone();
            next.push(x);
            self.letters.push(x);
            self.roots.push(root.clone());
            self.step(&next, &next_block, next_prev)?;
            self.letters.pop();
            self.roots.pop();
            *self.remaining.get_mut(&root).expect("present") += 1;
            if self.found.is_some() {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Searches for a c-sortable word whose chain has the dimension vectors of
/// `members` and whose `T_w` is isomorphic to `t`.
pub(crate) fn search(
    q: &Quiver,
    c: &Word,
    members: &[Representation],
    t: &[Representation],
) -> Result<Option<Word>, ChainError> {
    let mut remaining = BTreeMap::new();
    for m in members {
        *remaining.entry(m.dim_vector()).or_insert(0) += 1;
    }
    let mut t_dims: Vec<RootVector> = t.iter().map(Representation::dim_vector).collect();
    t_dims.sort();
    let mut pos = vec![0; q.vertex_count()];
    for (k, &u) in c.letters().iter().enumerate() {
        pos[u - 1] = k;
    }
    let mut s = Search {
        q,
        c: c.letters(),
        pos,
        len: members.len(),
        t,
        t_dims,
        remaining,
        letters: Vec::new(),
        roots: Vec::new(),
        found: None,
    };
    if s.len == 0 {
        return Ok(None);
    }
    let m = q.edge_table();
    s.step(&ReflectionProduct::new(&m), &[], None)?;
    Ok(s.found)
}

/// The c-sortable word `w` with `T_w` isomorphic to the tilting module `t`.
///
/// `Sub(t)` is enumerated up to total dimension `bound`, then words whose
/// chain has exactly those dimension vectors are searched. Returns an error
/// when the enumeration might be incomplete and no word was found, and
/// `None` when the enumeration is exhaustive and no word matches.
pub fn recover_word(q: &Quiver, c: &Word, t: &[Representation], bound: usize) -> Result<Option<Word>, ChainError> {
    if !is_admissible_coxeter(q, c) {
        return Err(ChainError::NotAdmissible(format!("`{c}` is not an admissible Coxeter element")));
    }
    let gamma = q.opposite();
    if t.iter().any(|x| x.quiver() != &gamma) {
        return Err(ChainError::WrongQuiver);
    }
    if let Some(reason) = tilting_defect(t) {
        return Err(ChainError::NotTilting(reason));
    }
    let (members, exhaustive) = sub_members(&gamma, t, bound, false)?;
    debug!("Sub T has {} members within bound {bound}", members.len());
    match search(q, c, &members, t)? {
        Some(w) => Ok(Some(w)),
        None if exhaustive => Ok(None),
        None => Err(ChainError::Incomplete { bound }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::projective;

    #[test]
    fn recovers_triangle_word() {
        let q = Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        let c = Word::new(vec![1, 2, 3]);
        let w = Word::new(vec![1, 2, 3, 1, 2, 1]);
        let t = t_w(&q, &c, &w).unwrap();
        assert_eq!(recover_word(&q, &c, &t, 10).unwrap(), Some(w));
        let p: Vec<_> = (1..=3).map(|i| projective(&q.opposite(), i).unwrap()).collect();
        assert_eq!(recover_word(&q, &c, &p, 10).unwrap(), Some(c));
    }

    #[test]
    fn rejects_non_tilting() {
        let q = Quiver::linear(2);
        let p = projective(&q.opposite(), 1).unwrap();
        let e = recover_word(&q, &Word::new(vec![1, 2]), &[p.clone(), p], 5).unwrap_err();
        assert!(matches!(e, ChainError::NotTilting(_)));
    }
}
