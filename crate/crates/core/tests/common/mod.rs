//! Independent oracles and random generators shared by the integration
//! tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use sq_core::coxeter::{layer_roots, simple_reflection, sortable_decompose};
use sq_core::rep::{hom_basis, hom_dim, RepMorphism};
use sq_core::{Quiver, Rat, RatMatrix, Representation, RootVector, Word};

pub fn triangle() -> Quiver {
    Quiver::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap()
}

pub fn square() -> Quiver {
    Quiver::new(4, vec![(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
}

pub fn word(v: &[usize]) -> Word {
    Word::from(v)
}

/// `dim Ext^1(X, Y)` from the standard projective resolution
/// `0 -> ⊕_a P_t(a) ⊗ X_s(a) -> ⊕_i P_i ⊗ X_i -> X -> 0`: the cokernel of
/// `⊕_i Hom(X_i, Y_i) -> ⊕_a Hom(X_s(a), Y_t(a))`, `(φ) ↦ Y_a φ_s − φ_t X_a`.
pub fn ext1_by_resolution(x: &Representation, y: &Representation) -> usize {
    let q = x.quiver();
    let n = q.vertex_count();
    let mut col_off = vec![0; n + 1];
    for v in 1..=n {
        col_off[v] = col_off[v - 1] + x.dim(v) * y.dim(v);
    }
    let mut row_off = vec![0; q.arrows().len() + 1];
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        row_off[a + 1] = row_off[a] + x.dim(s) * y.dim(t);
    }
    let mut m = RatMatrix::zeros(row_off[q.arrows().len()], col_off[n]);
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let (xa, ya) = (x.map(a), y.map(a));
        let (ds, dt) = (x.dim(s), x.dim(t));
        let (es, et) = (y.dim(s), y.dim(t));
        // entry (r, c) of the arrow block, r < et, c < ds
        for r in 0..et {
            for c in 0..ds {
                let row = row_off[a] + r * ds + c;
                // Y_a φ_s: sum_k Y_a[r,k] φ_s[k,c]
                for k in 0..es {
                    let col = col_off[s - 1] + k * ds + c;
                    m[(row, col)] = &m[(row, col)] + &ya[(r, k)];
                }
                // − φ_t X_a: sum_k φ_t[r,k] X_a[k,c]
                for k in 0..dt {
                    let col = col_off[t - 1] + r * dt + k;
                    m[(row, col)] = &m[(row, col)] - &xa[(k, c)];
                }
            }
        }
    }
    m.rows() - m.rank()
}

/// Length of the shortest word giving the same action on the root lattice,
/// by breadth-first search.
pub fn brute_length(q: &Quiver, w: &Word) -> usize {
    let n = q.vertex_count();
    let act = |word: &[usize]| -> Vec<RootVector> {
        (1..=n)
            .map(|i| {
                let mut v = RootVector::unit(n, i);
                for &u in word.iter().rev() {
                    v = simple_reflection(q, u, &v).unwrap();
                }
                v
            })
            .collect()
    };
    let target = act(w.letters());
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for len in 0..=w.len() {
        if layer.iter().any(|p| act(p) == target) {
            return len;
        }
        layer = layer
            .iter()
            .flat_map(|p| (1..=n).map(move |u| [p.as_slice(), &[u]].concat()))
            .collect();
    }
    unreachable!("the word itself has length {}", w.len())
}

/// Torsionfree classes among subsets of `inds`, as the subsets `F` with
/// `F = (⊥F)^⊥`, computed from the Hom-dimension matrix.
pub fn torsionfree_by_double_perp(inds: &[Representation]) -> usize {
    let n = inds.len();
    let h: Vec<Vec<usize>> = inds
        .iter()
        .map(|x| inds.iter().map(|y| hom_dim(x, y).unwrap()).collect())
        .collect();
    (0u64..1 << n)
        .filter(|&mask| {
            let in_f = |k: usize| mask >> k & 1 == 1;
            let left: Vec<usize> = (0..n).filter(|&x| (0..n).filter(|&f| in_f(f)).all(|f| h[x][f] == 0)).collect();
            (0..n).all(|y| in_f(y) == left.iter().all(|&t| h[t][y] == 0))
        })
        .count()
}

fn trace(f: &RepMorphism) -> Rat {
    f.blocks().iter().fold(Rat::from_int(0), |acc, b| &acc + &b.trace())
}

/// Whether `f: X -> B` is left minimal: every `g` in `End(B)` with
/// `g f = 0` lies in the radical, tested by the trace form.
pub fn is_left_minimal(f: &RepMorphism) -> bool {
    let b = f.target();
    let end = hom_basis(b, b).unwrap();
    if end.is_empty() {
        return true;
    }
    // coefficients c with (sum c_i e_i) f = 0
    let cols: Vec<Vec<Rat>> = end.iter().map(|e| f.then(e).to_vector()).collect();
    let rows = cols.first().map_or(0, Vec::len);
    let m = RatMatrix::from_columns(rows, &cols);
    for c in m.kernel_basis() {
        let g = RepMorphism::combination(b, b, &end, &c);
        if end.iter().any(|h| !trace(&h.then(&g)).is_zero()) {
            return false;
        }
    }
    true
}

pub fn is_right_minimal(g: &RepMorphism) -> bool {
    let b = g.source();
    let end = hom_basis(b, b).unwrap();
    if end.is_empty() {
        return true;
    }
    let cols: Vec<Vec<Rat>> = end.iter().map(|e| e.then(g).to_vector()).collect();
    let rows = cols.first().map_or(0, Vec::len);
    let m = RatMatrix::from_columns(rows, &cols);
    for c in m.kernel_basis() {
        let h0 = RepMorphism::combination(b, b, &end, &c);
        if end.iter().any(|h| !trace(&h.then(&h0)).is_zero()) {
            return false;
        }
    }
    true
}

/// Random acyclic quiver on `n` vertices with at most two parallel arrows
/// between any pair, connected, orientation from a random vertex order.
pub fn random_quiver<R: Rng>(rng: &mut R, n: usize) -> Quiver {
    loop {
        let mut order: Vec<usize> = (1..=n).collect();
        order.shuffle(rng);
        let mut arrows = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let k = match rng.gen_range(0..10) {
                    0..=4 => 0,
                    5..=8 => 1,
                    _ => 2,
                };
                for _ in 0..k {
                    arrows.push((order[a], order[b]));
                }
            }
        }
        let q = Quiver::new(n, arrows).unwrap();
        let all: Vec<usize> = (1..=n).collect();
        if q.is_connected_on(&all) {
            return q;
        }
    }
}

/// A random admissible Coxeter element: a random linear extension of the
/// arrow order.
pub fn random_coxeter<R: Rng>(rng: &mut R, q: &Quiver) -> Word {
    let n = q.vertex_count();
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let ready: Vec<usize> = (1..=n)
            .filter(|&v| !placed[v - 1] && q.incoming(v).all(|(_, s)| placed[s - 1]))
            .collect();
        let v = *ready.choose(rng).unwrap();
        placed[v - 1] = true;
        out.push(v);
    }
    Word::new(out)
}

/// A random c-sortable word in canonical form whose layer roots have total
/// at most `max_total`, with at most `max_len` letters.
pub fn random_sortable<R: Rng>(rng: &mut R, q: &Quiver, c: &Word, max_total: i64, max_len: usize) -> Word {
    loop {
        let mut letters = Vec::new();
        let mut prev: Vec<usize> = c.letters().to_vec();
        while letters.len() < max_len {
            let block: Vec<usize> = prev.iter().copied().filter(|_| rng.gen_bool(0.9)).collect();
            if block.is_empty() {
                break;
            }
            letters.extend(&block);
            prev = block;
        }
        letters.truncate(max_len);
        // longest prefix that is reduced with small roots
        let mut keep = 0;
        for k in 1..=letters.len() {
            match layer_roots(q, &Word::from(&letters[..k])) {
                Ok(r) if r.last().unwrap().total() <= max_total => keep = k,
                _ => break,
            }
        }
        if keep == 0 {
            continue;
        }
        let w = Word::from(&letters[..keep]);
        if let Some(d) = sortable_decompose(q, c, &w).unwrap() {
            return d.word();
        }
    }
}

/// A random representation with small integer maps, many of them zero.
pub fn random_rep<R: Rng>(rng: &mut R, q: &Quiver, max_total: usize) -> Representation {
    let n = q.vertex_count();
    let mut dims = vec![0; n];
    let total = rng.gen_range(0..=max_total);
    for _ in 0..total {
        dims[rng.gen_range(0..n)] += 1;
    }
    let maps = q
        .arrows()
        .iter()
        .map(|&(s, t)| {
            RatMatrix::from_fn(dims[t - 1], dims[s - 1], |_, _| {
                if rng.gen_bool(0.5) {
                    Rat::from_int(0)
                } else {
                    Rat::from_int(rng.gen_range(-2..=2))
                }
            })
        })
        .collect();
    Representation::new(q.clone(), dims, maps).unwrap()
}
