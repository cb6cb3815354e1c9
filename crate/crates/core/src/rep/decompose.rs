use log::debug;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::morphism::subrepresentation;
use super::{hom_basis, RepError, RepMorphism, Representation};
use crate::exactlin::{Rat, RatMatrix};

/// Endomorphism data recorded for one indecomposable summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandCertificate {
    pub end_dim: usize,
    pub radical_dim: usize,
    /// `End/rad` is one-dimensional, so the summand is indecomposable.
    /// False when no splitting was found but locality could not be shown.
    pub certified: bool,
}

/// Krull-Schmidt decomposition of a representation.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    /// Pairwise non-isomorphic summands with multiplicities, ordered by
    /// (total dimension, dimension vector).
    pub summands: Vec<(Representation, usize)>,
    pub certificates: Vec<SummandCertificate>,
    /// An isomorphism from `⊕ summand^multiplicity` (in the listed order)
    /// onto the input.
    pub witness: RepMorphism,
}

impl DecompositionReport {
    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1 && self.summands[0].1 == 1
    }

    pub fn summand_count(&self) -> usize {
        self.summands.iter().map(|s| s.1).sum()
    }
}

struct Piece {
    rep: Representation,
    incl: Vec<RatMatrix>,
    cert: SummandCertificate,
}

/// Trace of an endomorphism: sum of the traces of its blocks.
fn trace(f: &RepMorphism) -> Rat {
    f.blocks().iter().fold(Rat::zero(), |acc, b| &acc + &b.trace())
}

/// Coefficient vectors (in the given basis) spanning the radical of the
/// trace form `(a, b) -> tr(ab)`, which is the Jacobson radical in
/// characteristic zero.
fn trace_radical(basis: &[RepMorphism]) -> Vec<Vec<Rat>> {
    let e = basis.len();
    let g = RatMatrix::from_fn(e, e, |i, j| trace(&basis[j].then(&basis[i])));
    g.kernel_basis()
}

/// `(End dim, radical dim)`.
pub(crate) fn local_data(x: &Representation) -> (Vec<RepMorphism>, usize) {
    let basis = hom_basis(x, x).expect("same quiver");
    if basis.len() <= 1 {
        return (basis, 0);
    }
    let rad = trace_radical(&basis).len();
    (basis, rad)
}

fn power(b: &RatMatrix, k: usize) -> RatMatrix {
    let mut acc = RatMatrix::identity(b.rows());
    for _ in 0..k {
        acc = &acc * b;
    }
    acc
}

/// Fitting decomposition `X = ker b^N ⊕ im b^N` for the endomorphism `b`;
/// `None` if one side is zero.
fn fitting(x: &Representation, blocks: &[RatMatrix]) -> Option<(Vec<RatMatrix>, Vec<RatMatrix>)> {
    let mut kers = Vec::with_capacity(blocks.len());
    let mut ims = Vec::with_capacity(blocks.len());
    let mut kdim = 0;
    for (v, b) in blocks.iter().enumerate() {
        let d = x.dims()[v];
        let bn = power(b, d);
        let k = bn.kernel_matrix();
        kdim += k.cols();
        kers.push(k);
        ims.push(RatMatrix::from_columns(d, &bn.column_space_basis()));
    }
    (kdim > 0 && kdim < x.total_dim()).then_some((kers, ims))
}

/// Minimal polynomial of `a` in the algebra spanned by `basis`, as
/// coefficients `c_0, ..., c_d` with `c_d = 1`.
fn minimal_polynomial(x: &Representation, a: &RepMorphism, max_deg: usize) -> Vec<Rat> {
    let mut powers = vec![RepMorphism::identity(x).to_vector()];
    let mut cur = RepMorphism::identity(x);
    for d in 1..=max_deg + 1 {
        cur = cur.then(a);
        let target = cur.to_vector();
        let m = RatMatrix::from_columns(target.len(), &powers);
        if let Ok(Some(sol)) = m.solve(&target) {
            let mut coeffs: Vec<Rat> = sol.iter().map(|c| -c).collect();
            coeffs.push(Rat::one());
            debug_assert_eq!(coeffs.len(), d + 1);
            return coeffs;
        }
        powers.push(target);
    }
    unreachable!("minimal polynomial degree bounded by the algebra dimension")
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            if k != n / k {
                out.push(n / k);
            }
        }
        k += 1;
    }
    out
}

/// Nonzero rational roots of a polynomial, found with the rational root
/// theorem. Gives up (returns what it has) when coefficients are too large
/// to factor by trial division.
fn rational_roots(coeffs: &[Rat]) -> Vec<Rat> {
    let mut c: Vec<Rat> = coeffs.to_vec();
    while c.first().is_some_and(Rat::is_zero) {
        c.remove(0);
    }
    if c.len() < 2 {
        return Vec::new();
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.to_big().denom()));
    let ints: Vec<BigInt> = c
        .iter()
        .map(|r| {
            let b = r.to_big();
            b.numer() * (&lcm / b.denom())
        })
        .collect();
    let (Some(a0), Some(ad)) = (ints[0].abs().to_u64(), ints.last().unwrap().abs().to_u64()) else {
        return Vec::new();
    };
    if a0 > 1_000_000_000_000 || ad > 1_000_000_000_000 {
        return Vec::new();
    }
    let eval = |x: &Rat| {
        c.iter()
            .rev()
            .fold(Rat::zero(), |acc, k| &(&acc * x) + k)
    };
    let mut roots = Vec::new();
    for p in divisors(a0) {
        for q in divisors(ad) {
            for s in [1i64, -1] {
                let cand = Rat::new(s * p as i64, q as i64);
                if !roots.contains(&cand) && eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn shifted(a: &RepMorphism, lambda: &Rat) -> Vec<RatMatrix> {
    a.blocks()
        .iter()
        .map(|b| b - &RatMatrix::identity(b.rows()).scale(lambda))
        .collect()
}

/// Looks for an endomorphism whose Fitting decomposition is nontrivial.
fn find_split(x: &Representation, basis: &[RepMorphism]) -> Option<(Vec<RatMatrix>, Vec<RatMatrix>)> {
    let mut candidates: Vec<RepMorphism> = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            candidates.push(basis[i].add(&basis[j]));
        }
    }
    for a in &candidates {
        if let Some(s) = fitting(x, a.blocks()) {
            return Some(s);
        }
        let mp = minimal_polynomial(x, a, basis.len());
        for lambda in rational_roots(&mp) {
            if let Some(s) = fitting(x, &shifted(a, &lambda)) {
                return Some(s);
            }
        }
    }
    None
}

fn split_into(x: Representation, incl: Vec<RatMatrix>, out: &mut Vec<Piece>) {
    if x.is_zero() {
        return;
    }
    let (basis, rad) = local_data(&x);
    let end_dim = basis.len();
    if end_dim - rad == 1 {
        out.push(Piece {
            rep: x,
            incl,
            cert: SummandCertificate {
                end_dim,
                radical_dim: rad,
                certified: true,
            },
        });
        return;
    }
    match find_split(&x, &basis) {
        Some((kers, ims)) => {
            for bases in [kers, ims] {
                let ambient: Vec<RatMatrix> = incl.iter().zip(&bases).map(|(i, b)| i * b).collect();
                let (sub, _) = subrepresentation(&x, bases);
                split_into(sub, ambient, out);
            }
        }
        None => {
            debug!("no splitting endomorphism found for {:?}; End/rad has dimension {}", x, end_dim - rad);
            out.push(Piece {
                rep: x,
                incl,
                cert: SummandCertificate {
                    end_dim,
                    radical_dim: rad,
                    certified: false,
                },
            });
        }
    }
}

/// Krull-Schmidt decomposition with an explicit isomorphism witness.
pub fn decompose(x: &Representation) -> DecompositionReport {
    let mut pieces = Vec::new();
    let incl = x.dims().iter().map(|&d| RatMatrix::identity(d)).collect();
    split_into(x.clone(), incl, &mut pieces);

    // group isomorphic pieces; iso maps go representative -> piece
    let mut groups: Vec<(usize, Vec<(usize, RepMorphism)>)> = Vec::new();
    for (k, p) in pieces.iter().enumerate() {
        let hit = groups.iter().enumerate().find_map(|(g, (rep_idx, _))| {
            find_isomorphism(&pieces[*rep_idx].rep, &p.rep)
                .ok()
                .flatten()
                .map(|iso| (g, iso))
        });
        match hit {
            Some((g, iso)) => groups[g].1.push((k, iso)),
            None => groups.push((k, vec![(k, RepMorphism::identity(&p.rep))])),
        }
    }
    groups.sort_by_key(|(r, _)| {
        let d = &pieces[*r].rep;
        (d.total_dim(), d.dims().to_vec())
    });

    let q = x.quiver();
    let mut source = Representation::zero(q);
    let mut blocks: Vec<RatMatrix> = x.dims().iter().map(|&d| RatMatrix::zeros(d, 0)).collect();
    let mut summands = Vec::new();
    let mut certificates = Vec::new();
    for (r, members) in &groups {
        let rep = &pieces[*r].rep;
        for (k, iso) in members {
            source = source.direct_sum(rep).expect("same quiver");
            for (v, b) in blocks.iter_mut().enumerate() {
                *b = b.hstack(&(&pieces[*k].incl[v] * iso.block(v + 1)));
            }
        }
        summands.push((rep.clone(), members.len()));
        certificates.push(pieces[*r].cert.clone());
    }
    let witness = RepMorphism::new_unchecked(source, x.clone(), blocks);
    debug_assert!(witness.is_isomorphism());
    DecompositionReport {
        summands,
        certificates,
        witness,
    }
}

pub fn is_indecomposable(x: &Representation) -> bool {
    if x.is_zero() {
        return false;
    }
    let (basis, rad) = local_data(x);
    basis.len() - rad == 1 || decompose(x).is_indecomposable()
}

const ISO_ATTEMPTS: usize = 4;
const COEFF_RANGE: i64 = 1 << 16;

/// An isomorphism `X -> Y` if one exists.
///
/// A random combination of a Hom basis is invertible with probability at
/// least `1 - total_dim / (2 * COEFF_RANGE + 1)` when `X ≅ Y` (the
/// determinant is a nonzero polynomial of degree `total_dim`), so a few
/// seeded attempts make a false negative negligible; a positive answer
/// always comes with a checked witness.
pub fn find_isomorphism(x: &Representation, y: &Representation) -> Result<Option<RepMorphism>, RepError> {
    x.same_quiver(y)?;
    if x.dims() != y.dims() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(RepMorphism::zero(x, y)));
    }
    let basis = hom_basis(x, y)?;
    if basis.is_empty() {
        return Ok(None);
    }
    if basis.len() == 1 {
        return Ok(basis[0].is_isomorphism().then(|| basis[0].clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1507);
    for _ in 0..ISO_ATTEMPTS {
        let coeffs: Vec<Rat> = (0..basis.len())
            .map(|_| Rat::from_int(rng.gen_range(-COEFF_RANGE..=COEFF_RANGE)))
            .collect();
        let f = RepMorphism::combination(x, y, &basis, &coeffs);
        if f.is_isomorphism() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

pub fn is_isomorphic(x: &Representation, y: &Representation) -> Result<bool, RepError> {
    Ok(find_isomorphism(x, y)?.is_some())
}
