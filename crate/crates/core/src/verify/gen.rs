//! Generators shared by the suite items.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{BigInt, UniPolyQ, UniPolyZ};
use crate::intpoly::{binomial_poly, IntPoly};
use crate::spectra::{FinitePoset, IndexSet, Shape, SpectrumModel, SubsetDesc};
use crate::star::FracElem;
use crate::Result;

fn is_order(n: usize, rel: &[Vec<bool>]) -> bool {
    for i in 0..n {
        for j in 0..n {
            if i != j && rel[i][j] && rel[j][i] {
                return false;
            }
            for k in 0..n {
                if rel[i][j] && rel[j][k] && !rel[i][k] && i != k {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Strict relations as a bitmask over ordered pairs `i ≠ j`.
fn encode(n: usize, rel: &[Vec<bool>], perm: &[usize]) -> u32 {
    let mut bits = 0u32;
    for i in 0..n {
        for j in 0..n {
            if i != j && rel[i][j] {
                bits |= 1 << pair_slot(n, perm[i], perm[j]);
            }
        }
    }
    bits
}

fn pair_slot(n: usize, i: usize, j: usize) -> usize {
    i * (n - 1) + if j > i { j - 1 } else { j }
}

/// Every partial order on `1..=max_points` points, one per isomorphism class,
/// as bare models with points `a, b, c, d`.
pub fn all_posets(max_points: usize) -> Result<Vec<SpectrumModel>> {
    const NAMES: [&str; 4] = ["a", "b", "c", "d"];
    assert!(max_points <= NAMES.len());
    let mut out = Vec::new();
    for n in 1..=max_points {
        let slots = n * (n - 1);
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for mask in 0u32..(1 << slots) {
            let mut rel = vec![vec![false; n]; n];
            for i in 0..n {
                for j in 0..n {
                    if i != j && mask & (1 << pair_slot(n, i, j)) != 0 {
                        rel[i][j] = true;
                    }
                }
            }
            if !is_order(n, &rel) {
                continue;
            }
            let canon = perms.iter().map(|p| encode(n, &rel, p)).min().expect("a permutation");
            if !seen.insert(canon) {
                continue;
            }
            let ids = &NAMES[..n];
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if rel[i][j] {
                        pairs.push((NAMES[i], NAMES[j]));
                    }
                }
            }
            let poset = FinitePoset::new(ids, &pairs)?;
            out.push(SpectrumModel::bare(format!("P{n}.{}", seen.len()), Shape::Poset(poset)));
        }
    }
    Ok(out)
}

/// All subsets of a finite poset model.
pub fn poset_subsets(m: &SpectrumModel) -> Vec<SubsetDesc> {
    let Shape::Poset(p) = &m.shape else { return vec![] };
    let ids = p.ids();
    (0u32..1 << ids.len())
        .map(|mask| SubsetDesc::poset(ids.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, id)| id.clone())))
        .collect()
}

/// A random infinite index set: cofinite or periodic.
pub fn infinite_indices(rng: &mut ChaCha8Rng) -> IndexSet {
    if rng.gen_bool(0.5) {
        IndexSet::cofinite((0..rng.gen_range(0..6)).map(|_| rng.gen_range(0..40)))
    } else {
        let m = rng.gen_range(2..7);
        let mut residues: Vec<usize> = (0..rng.gen_range(1..m)).map(|_| rng.gen_range(0..m)).collect();
        residues.dedup();
        IndexSet::periodic(m, residues)
    }
}

pub fn finite_indices(rng: &mut ChaCha8Rng) -> IndexSet {
    IndexSet::finite((0..rng.gen_range(0..8)).map(|_| rng.gen_range(0..60)))
}

pub fn small_int(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

pub fn nonzero_int(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let c = small_int(rng, bound);
        if c != 0 {
            return c;
        }
    }
}

/// Nonzero integer polynomial of degree at most `deg`.
pub fn zx_poly(rng: &mut ChaCha8Rng, deg: usize, bound: i64) -> UniPolyZ {
    loop {
        let d = rng.gen_range(0..=deg);
        let cs: Vec<i64> = (0..=d).map(|_| small_int(rng, bound)).collect();
        let f = UniPolyZ::from_i64s(&cs);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A member of `Int(Z)`: an integer combination of binomial polynomials.
pub fn int_z_member(rng: &mut ChaCha8Rng, deg: usize) -> UniPolyQ {
    let mut f = UniPolyQ::zero();
    for k in 0..=deg {
        let c = crate::arith::int(small_int(rng, 6));
        f = f.add(&binomial_poly(k).scale(&c));
    }
    f
}

/// A random univariate polynomial with small rational coefficients.
pub fn q_poly(rng: &mut ChaCha8Rng, deg: usize) -> UniPolyQ {
    let d = rng.gen_range(0..=deg);
    let dens = [1, 1, 1, 2, 3, 4, 5, 6, 7, 12];
    UniPolyQ::new((0..=d).map(|_| crate::arith::rat(small_int(rng, 9), dens[rng.gen_range(0..dens.len())])).collect())
}

/// A polynomial in `Y` over `Q(X)`: coefficients are small polynomials in
/// `X`, sometimes divided by `2`, `X` or `X + 1`.
pub fn qx_poly(rng: &mut ChaCha8Rng, deg: usize) -> IntPoly {
    let d = rng.gen_range(0..=deg);
    let dens = ["1", "1", "1", "2", "X", "X + 1"];
    let coeffs = (0..=d)
        .map(|_| {
            let num = FracElem::from_poly(zx_poly(rng, 2, 4));
            num.div(&FracElem::parse(dens[rng.gen_range(0..dens.len())]).expect("literal")).expect("nonzero")
        })
        .collect();
    IntPoly::new(coeffs)
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}
