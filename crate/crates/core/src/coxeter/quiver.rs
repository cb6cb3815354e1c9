use std::fmt;
use std::str::FromStr;

use crate::exactlin::{Rat, RatMatrix};

use super::CoxeterError;

/// A finite acyclic quiver with vertices `1..=n`.
///
/// Parallel arrows are allowed. Arrows are kept in insertion order and are
/// addressed by their position in [`Quiver::arrows`]; operations that change
/// orientation keep arrow positions stable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Quiver, CoxeterError> {
        for &(s, t) in &arrows {
            for v in [s, t] {
                if v == 0 || v > n {
                    return Err(CoxeterError::VertexOutOfRange { vertex: v, n });
                }
            }
            if s == t {
                return Err(CoxeterError::Loop(s));
            }
        }
        let q = Quiver { n, arrows };
        if q.topological_order().is_none() {
            return Err(CoxeterError::Cyclic);
        }
        Ok(q)
    }

    /// Linearly oriented `1 -> 2 -> ... -> n`.
    pub fn linear(n: usize) -> Quiver {
        Quiver {
            n,
            arrows: (1..n).map(|i| (i, i + 1)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), CoxeterError> {
        if v == 0 || v > self.n {
            Err(CoxeterError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Number of arrows between `i` and `j` in either direction.
    pub fn edge_count(&self, i: usize, j: usize) -> usize {
        self.arrows
            .iter()
            .filter(|&&(s, t)| (s == i && t == j) || (s == j && t == i))
            .count()
    }

    /// The symmetric table `m_ij` (0-based indices), zero diagonal.
    pub fn edge_table(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.n]; self.n];
        for &(s, t) in &self.arrows {
            m[s - 1][t - 1] += 1;
            m[t - 1][s - 1] += 1;
        }
        m
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, &(s, _))| s == v)
            .map(|(a, &(_, t))| (a, t))
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, &(_, t))| t == v)
            .map(|(a, &(s, _))| (a, s))
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != v)
    }

    /// Topological order with ascending-vertex tie-break (sources first).
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n + 1];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut done = vec![false; self.n + 1];
        let mut order = Vec::with_capacity(self.n);
        while order.len() < self.n {
            let v = (1..=self.n).find(|&v| !done[v] && indeg[v] == 0)?;
            done[v] = true;
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                }
            }
        }
        Some(order)
    }

    /// All arrows reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            n: self.n,
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }

    /// Reverses every arrow incident to `v`.
    pub fn mutate_at(&self, v: usize) -> Quiver {
        Quiver {
            n: self.n,
            arrows: self
                .arrows
                .iter()
                .map(|&(s, t)| if s == v || t == v { (t, s) } else { (s, t) })
                .collect(),
        }
    }

    /// Full subquiver on `support`; vertex numbering is kept, arrows leaving
    /// the support are dropped. Returns the restricted quiver and, for each of
    /// its arrows, the index of the arrow it came from.
    pub fn restrict(&self, support: &[usize]) -> (Quiver, Vec<usize>) {
        let mut arrows = Vec::new();
        let mut origin = Vec::new();
        for (a, &(s, t)) in self.arrows.iter().enumerate() {
            if support.contains(&s) && support.contains(&t) {
                arrows.push((s, t));
                origin.push(a);
            }
        }
        (Quiver { n: self.n, arrows }, origin)
    }

    /// Paths from `i` to `j`, each a list of arrow indices, in lexicographic
    /// order of their vertex sequences.
    pub fn paths(&self, i: usize, j: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.collect_paths(i, j, &mut stack, &mut out);
        out
    }

    fn collect_paths(&self, at: usize, goal: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == goal {
            out.push(stack.clone());
        }
        let mut next: Vec<(usize, usize)> = self.outgoing(at).collect();
        next.sort_by_key(|&(a, t)| (t, a));
        for (a, t) in next {
            stack.push(a);
            self.collect_paths(t, goal, stack, out);
            stack.pop();
        }
    }

    /// True when the underlying graph is a disjoint union of simply-laced
    /// Dynkin diagrams, i.e. the symmetrised Cartan matrix is positive definite.
    pub fn is_dynkin(&self) -> bool {
        let m = self.edge_table();
        let cartan = RatMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                Rat::from_int(2)
            } else {
                Rat::from_int(-m[i][j])
            }
        });
        (1..=self.n).all(|k| cartan.submatrix(0..k, 0..k).determinant() > Rat::from_int(0))
    }

    /// Whether the underlying graph restricted to `support` is connected.
    pub fn is_connected_on(&self, support: &[usize]) -> bool {
        let Some(&start) = support.first() else {
            return true;
        };
        let mut seen = vec![start];
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for &(s, t) in &self.arrows {
                for (a, b) in [(s, t), (t, s)] {
                    if a == v && support.contains(&b) && !seen.contains(&b) {
                        seen.push(b);
                        frontier.push(b);
                    }
                }
            }
        }
        seen.len() == support.len()
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.n)?;
        for &(s, t) in &self.arrows {
            writeln!(f, "arrow {s} {t}")?;
        }
        Ok(())
    }
}

impl FromStr for Quiver {
    type Err = CoxeterError;

    /// Parses the text format: `vertices <n>` then `arrow <i> <j>` lines;
    /// `#` starts a comment.
    fn from_str(text: &str) -> Result<Quiver, CoxeterError> {
        let mut n = None;
        let mut arrows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| CoxeterError::Parse {
                line: lineno + 1,
                message: msg.to_string(),
            };
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["vertices", k] if n.is_none() => {
                    n = Some(k.parse::<usize>().map_err(|_| bad("bad vertex count"))?);
                }
                ["vertices", _] => return Err(bad("duplicate `vertices` line")),
                ["arrow", s, t] => {
                    if n.is_none() {
                        return Err(bad("`arrow` before `vertices`"));
                    }
                    let s = s.parse::<usize>().map_err(|_| bad("bad arrow source"))?;
                    let t = t.parse::<usize>().map_err(|_| bad("bad arrow target"))?;
                    arrows.push((s, t));
                }
                _ => return Err(bad("expected `vertices <n>` or `arrow <i> <j>`")),
            }
        }
        let n = n.ok_or(CoxeterError::Parse {
            line: 0,
            message: "missing `vertices` line".into(),
        })?;
        Quiver::new(n, arrows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qa() -> Quiver {
        Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn edge_table_symmetric() {
        let q = Quiver::new(3, vec![(1, 2), (1, 2), (3, 2)]).unwrap();
        let m = q.edge_table();
        assert_eq!(m[0][1], 2);
        assert_eq!(m[1][0], 2);
        assert_eq!(m[2][1], 1);
        assert_eq!(m[0][0], 0);
    }

    #[test]
    fn rejects_loops_and_cycles() {
        assert_eq!(Quiver::new(2, vec![(1, 1)]), Err(CoxeterError::Loop(1)));
        assert_eq!(
            Quiver::new(2, vec![(1, 2), (2, 1)]),
            Err(CoxeterError::Cyclic)
        );
        assert!(matches!(
            Quiver::new(2, vec![(1, 3)]),
            Err(CoxeterError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_text_format() {
        let q: Quiver = "# triangle\nvertices 3\narrow 1 2\narrow 2 3 # tail\n\narrow 1 3\n"
            .parse()
            .unwrap();
        assert_eq!(q, qa());
        assert_eq!(q.to_string().parse::<Quiver>().unwrap(), q);
        assert!("arrow 1 2".parse::<Quiver>().is_err());
        assert!("vertices x".parse::<Quiver>().is_err());
    }

    #[test]
    fn paths_in_triangle() {
        let q = qa();
        assert_eq!(q.paths(1, 3).len(), 2);
        assert_eq!(q.paths(1, 1), vec![Vec::<usize>::new()]);
        assert!(q.paths(3, 1).is_empty());
    }

    #[test]
    fn dynkin_detection() {
        // the triangle has a cycle as underlying graph: affine, not Dynkin
        assert!(!qa().is_dynkin());
        assert!(Quiver::linear(3).is_dynkin());
        let d4 = Quiver::new(4, vec![(1, 2), (3, 2), (4, 2)]).unwrap();
        assert!(d4.is_dynkin());
        let kronecker = Quiver::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert!(!kronecker.is_dynkin());
    }

    #[test]
    fn mutation_and_restriction() {
        let q = qa();
        let m = q.mutate_at(1);
        assert_eq!(m.arrows(), &[(2, 1), (2, 3), (3, 1)]);
        assert!(m.is_sink(1));
        let (r, origin) = q.restrict(&[2, 3]);
        assert_eq!(r.arrows(), &[(2, 3)]);
        assert_eq!(origin, vec![1]);
        assert_eq!(q.topological_order().unwrap(), vec![1, 2, 3]);
    }
}
