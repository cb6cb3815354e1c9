use std::fmt;
use std::str::FromStr;

use super::{CoxeterError, Quiver};

/// A word `s_{u_1} ... s_{u_l}` in the simple reflections, stored as its
/// 1-based letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, q: &Quiver) -> Result<(), CoxeterError> {
        self.0.iter().try_for_each(|&u| q.check_vertex(u))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The set of letters, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.0.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// `m`-fold concatenation.
    pub fn power(&self, m: usize) -> Word {
        Word(self.0.repeat(m))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Word {
        Word(v)
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Word {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for u in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{u}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = CoxeterError;

    /// Space (or comma) separated vertex indices.
    fn from_str(s: &str) -> Result<Word, CoxeterError> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>().map_err(|_| CoxeterError::Parse {
                    line: 1,
                    message: format!("bad letter `{t}`"),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}
