//! Independent brute-force oracles for the integration suites.
//!
//! These deliberately avoid the library's sparse echelon machinery: the
//! filtered ideal component is materialized as a dense matrix over the
//! full word-index basis and membership is decided by comparing ranks,
//! so an agreement with `IdealOracle` cross-checks two different
//! implementations of the same linear algebra.

use braidkit::ncalg::NCPoly;
use braidkit::scalars::QRat;
use braidkit::symmetries::Symmetry;
use braidkit::tensors::LinOp;

/// Flat index of a word in the basis of all words of length <= cap over
/// an alphabet of the given size, ordered by length then lexicographically.
fn word_index(alphabet: usize, cap: usize, word: &[u16]) -> usize {
    assert!(word.len() <= cap);
    let mut offset = 0usize;
    for len in 0..word.len() {
        offset += alphabet.pow(len as u32);
    }
    let mut pos = 0usize;
    for &g in word {
        pos = pos * alphabet + g as usize;
    }
    offset + pos
}

fn component_dim(alphabet: usize, cap: usize) -> usize {
    (0..=cap).map(|l| alphabet.pow(l as u32)).sum()
}

fn poly_to_dense(alphabet: usize, cap: usize, p: &NCPoly) -> Vec<QRat> {
    let mut v = vec![QRat::zero(); component_dim(alphabet, cap)];
    for (w, c) in p.terms() {
        v[word_index(alphabet, cap, &w.0)] = c.clone();
    }
    v
}

/// Dense Gaussian rank; written from scratch on plain vectors.
fn dense_rank(mut rows: Vec<Vec<QRat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut rank = 0usize;
    for col in 0..width {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().unwrap();
        for x in rows[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for c2 in 0..width {
                let t = &rows[rank][c2] * &f;
                rows[r][c2] = &rows[r][c2] - &t;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Brute-force membership in the filtered ideal: materialize every
/// spanning product w1 . relation . w2 of degree <= cap and compare the
/// rank with and without the query vector.
pub fn brute_membership(
    alphabet: usize,
    relations: &[NCPoly],
    cap: usize,
    query: &NCPoly,
) -> bool {
    assert!(query.degree() <= cap);
    let mut span: Vec<Vec<QRat>> = Vec::new();
    let mut words: Vec<Vec<u16>> = vec![vec![]];
    let mut frontier: Vec<Vec<u16>> = vec![vec![]];
    for _ in 0..cap {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..alphabet {
                let mut v = w.clone();
                v.push(g as u16);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    for rel in relations {
        if rel.is_zero() {
            continue;
        }
        let d = rel.degree();
        if d > cap {
            continue;
        }
        for w1 in words.iter().filter(|w| w.len() + d <= cap) {
            for w2 in words.iter().filter(|w| w.len() + w1.len() + d <= cap) {
                let p = rel
                    .mul_word_left(&braidkit::ncalg::Word(w1.clone()))
                    .mul_word_right(&braidkit::ncalg::Word(w2.clone()));
                span.push(poly_to_dense(alphabet, cap, &p));
            }
        }
    }
    let base_rank = dense_rank(span.clone());
    span.push(poly_to_dense(alphabet, cap, query));
    dense_rank(span) == base_rank
}

/// Brute-force dimension of degree k of the R-symmetric algebra: the
/// rank of the subspace generated by Im(qI - R) at every position,
/// computed with the dense rank routine above.
pub fn brute_sym_dimension(sym: &Symmetry, k: usize) -> usize {
    let n = sym.n();
    let full = n.pow(k as u32);
    if k < 2 {
        return full;
    }
    let qi_r = &LinOp::identity(n, 2).scale(sym.q()) - sym.r();
    let mut rows = Vec::new();
    for pos in 1..k {
        let placed = qi_r.place_on_legs(k, pos).unwrap();
        for row in 0..full {
            let v: Vec<QRat> = (0..full).map(|c| placed.get(row, c).clone()).collect();
            if v.iter().any(|x| !x.is_zero()) {
                rows.push(v);
            }
        }
    }
    full - dense_rank(rows)
}
