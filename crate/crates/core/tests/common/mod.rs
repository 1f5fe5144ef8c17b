//! Brute-force oracles shared by the integration tests. None of these go
//! through the library's own posets, Weyl group code or interpolation.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use gradus::{Mask, RootSystem};

/// Coordinate vectors of the roots in `set`.
pub fn coords_of(rs: &RootSystem, set: Mask) -> Vec<Vec<i32>> {
    set.iter().map(|k| rs.root(k).coords.clone()).collect()
}

fn below(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Lower ideals of `roots` under the coordinatewise order, by scanning every subset.
pub fn lower_ideals(roots: &[Vec<i32>]) -> Vec<u64> {
    let n = roots.len();
    assert!(n <= 24, "subset scan over {n} roots");
    let mut down = vec![0u64; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && below(&roots[j], &roots[i]) {
                down[i] |= 1 << j;
            }
        }
    }
    (0..1u64 << n)
        .filter(|&s| (0..n).all(|i| s >> i & 1 == 0 || down[i] & !s == 0))
        .collect()
}

pub fn count_lower_ideals(roots: &[Vec<i32>]) -> u64 {
    lower_ideals(roots).len() as u64
}

/// Upper ideals of all of the positive roots.
pub fn count_upper_ideals(roots: &[Vec<i32>]) -> u64 {
    // complements of lower ideals are upper ideals
    count_lower_ideals(roots)
}

pub fn catalan(n: u64) -> u64 {
    let mut c = 1u64;
    for k in 0..n {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

type Matrix = Vec<i32>;

fn reflection_matrix(cartan: &[Vec<i32>], i: usize) -> Matrix {
    // s_i(alpha_j) = alpha_j - a_ij alpha_i with a_ij = <alpha_j, alpha_i^vee>;
    // column j holds the image of alpha_j
    let n = cartan.len();
    let mut m = vec![0; n * n];
    for j in 0..n {
        m[j * n + j] = 1;
        m[i * n + j] -= cartan[i][j];
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix, n: usize) -> Matrix {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

/// The Weyl group as integer matrices with their word lengths, by breadth-first
/// closure under right multiplication by simple reflections.
pub fn weyl_group(rs: &RootSystem) -> HashMap<Matrix, usize> {
    let n = rs.rank();
    let gens: Vec<Matrix> = (0..n).map(|i| reflection_matrix(rs.cartan_matrix(), i)).collect();
    let mut id = vec![0; n * n];
    for i in 0..n {
        id[i * n + i] = 1;
    }
    let mut seen = HashMap::from([(id.clone(), 0usize)]);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        let len = seen[&m];
        for g in &gens {
            let next = mat_mul(&m, g, n);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), len + 1);
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Length generating function of a set of lengths, coefficients ascending.
pub fn length_polynomial<I: IntoIterator<Item = usize>>(lengths: I) -> Vec<i128> {
    let mut out = Vec::new();
    for l in lengths {
        if out.len() <= l {
            out.resize(l + 1, 0);
        }
        out[l] += 1;
    }
    out
}

/// Points of F_q^n off every hyperplane, by visiting all q^n points.
pub fn naive_point_count(normals: &[Vec<i64>], n: usize, q: i64) -> u64 {
    let mut count = 0;
    let mut x = vec![0i64; n];
    loop {
        if normals.iter().all(|a| a.iter().zip(&x).map(|(u, v)| u * v).sum::<i64>().rem_euclid(q) != 0) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            x[i] += 1;
            if x[i] < q {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}
