use super::ChainError;
use crate::coxeter::{is_admissible_coxeter, Quiver, Word};
use crate::rep::{is_indecomposable, minimal_left_approximation, minimal_right_approximation, projective, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Monotilting,
    TiltingNotMonotilting,
    NotTilting,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Monotilting => "monotilting",
            Classification::TiltingNotMonotilting => "tilting-not-monotilting",
            Classification::NotTilting => "not-tilting",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExplorerStep {
    /// 1-based position of the letter in the word.
    pub position: usize,
    pub vertex: usize,
    pub side: Side,
    pub mono_or_epi: bool,
    pub new_summand: Representation,
}

#[derive(Debug, Clone)]
pub struct ExplorerReport {
    pub word: Word,
    pub steps: Vec<ExplorerStep>,
    pub classification: Classification,
    /// Summands indexed by vertex, when every exchange succeeded.
    pub final_tilting: Option<Vec<Representation>>,
    /// 1-based position of the letter where no exchange was possible.
    pub failed_at: Option<usize>,
}

/// Runs the exchange procedure along `w`, starting from the projectives
/// after its leading Coxeter element. At each later letter `i` the summand
/// `T_i` is replaced by the cokernel of its minimal left approximation by
/// the other summands if that map is mono, and otherwise by the kernel of
/// the minimal right approximation if that map is epi.
pub fn explore_word(q: &Quiver, w: &Word) -> Result<ExplorerReport, ChainError> {
    w.validate(q)?;
    let n = q.vertex_count();
    if w.len() < n || !is_admissible_coxeter(q, &Word::from(&w.letters()[..n])) {
        return Err(ChainError::BadStart(w.to_string()));
    }
    let gamma = q.opposite();
    let mut current: Vec<Representation> = (1..=n).map(|i| projective(&gamma, i)).collect::<Result<_, _>>()?;
    let mut steps = Vec::new();
    for (k, &i) in w.letters().iter().enumerate().skip(n) {
        let others: Vec<Representation> = (1..=n).filter(|&v| v != i).map(|v| current[v - 1].clone()).collect();
        let x = &current[i - 1];
        let usable = |m: &Representation| !m.is_zero() && is_indecomposable(m);
        let left = minimal_left_approximation(x, &others)?;
        let step = if left.mono && usable(&left.cokernel) {
            Some((Side::Left, left.cokernel))
        } else {
            let right = minimal_right_approximation(x, &others)?;
            (right.epi && usable(&right.kernel)).then_some((Side::Right, right.kernel))
        };
        let Some((side, new_summand)) = step else {
            return Ok(ExplorerReport {
                word: w.clone(),
                steps,
                classification: Classification::NotTilting,
                final_tilting: None,
                failed_at: Some(k + 1),
            });
        };
        current[i - 1] = new_summand.clone();
        steps.push(ExplorerStep {
            position: k + 1,
            vertex: i,
            side,
            mono_or_epi: true,
            new_summand,
        });
    }
    let classification = if steps.iter().all(|s| s.side == Side::Left) {
        Classification::Monotilting
    } else {
        Classification::TiltingNotMonotilting
    };
    Ok(ExplorerReport {
        word: w.clone(),
        steps,
        classification,
        final_tilting: Some(current),
        failed_at: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{is_tilting, simple};

    #[test]
    fn square_word_is_monotilting() {
        let q = Quiver::new(4, vec![(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let r = explore_word(&q, &Word::new(vec![1, 2, 3, 4, 3, 1, 4])).unwrap();
        assert_eq!(r.classification, Classification::Monotilting);
        let last = &r.steps.last().unwrap().new_summand;
        assert_eq!(last.dims(), simple(&q.opposite(), 2).unwrap().dims());
        assert!(is_tilting(r.final_tilting.as_ref().unwrap()));
    }

    #[test]
    fn triangle_word_needs_a_right_step() {
        let q = Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        let r = explore_word(&q, &Word::new(vec![1, 2, 3, 2, 1, 2])).unwrap();
        assert_eq!(r.classification, Classification::TiltingNotMonotilting);
        let s = r.steps.last().unwrap();
        assert_eq!((s.position, s.side), (6, Side::Right));
        assert_eq!(s.new_summand.dims(), &[2, 2, 1]);
    }

    #[test]
    fn bad_start() {
        let q = Quiver::linear(2);
        assert!(matches!(
            explore_word(&q, &Word::new(vec![2, 1, 2])),
            Err(ChainError::BadStart(_))
        ));
    }
}
