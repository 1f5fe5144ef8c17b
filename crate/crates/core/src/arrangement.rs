//! Hyperplane arrangements cut out by sets of positive roots: the
//! sub-arrangement on `Delta(0)^+ ∪ Delta(1)`, its regions inside the big
//! dominant chamber, characteristic polynomials by point counting over finite
//! fields, height partitions and the ideal-count product formula.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bits::Mask;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::ideals::Poset;
use crate::poly::Poly;
use crate::rootsys::{conjugate_partition, RootSystem};
use crate::weyl::{parabolic_order, CosetTable, GradedWeyl, WeylElement};

/// Point counting costs `q^(n-1)` per prime; refused above this rank.
pub const DEFAULT_CHARPOLY_RANK: usize = 5;

/// Hyperplanes `H_gamma` for a set of positive roots. In coweight
/// coordinates the functional of `H_gamma` has the simple-root coordinates
/// of `gamma` as coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    pub roots: Mask,
    pub normals: Vec<Vec<i32>>,
    pub ambient_rank: usize,
}

impl Arrangement {
    pub fn from_roots(rs: &RootSystem, roots: Mask) -> Arrangement {
        Arrangement {
            roots,
            normals: roots.iter().map(|k| rs.root(k).coords.clone()).collect(),
            ambient_rank: rs.rank(),
        }
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }
}

/// `{H_gamma : gamma in Delta(0)^+ ∪ Delta(1)}`.
pub fn sub_arrangement_01(g: &Grading) -> Arrangement {
    Arrangement::from_roots(g.root_system(), g.delta0_positive().union(g.slice(1)))
}

pub fn coxeter_arrangement(rs: &RootSystem) -> Arrangement {
    Arrangement::from_roots(rs, rs.all_positive())
}

/// `{H_gamma : gamma not in upper}` for an upper ideal of `(Delta^+, ≼)`.
pub fn ideal_arrangement(rs: &RootSystem, upper: Mask) -> Result<Arrangement> {
    let poset = Poset::root_poset(rs);
    if !upper.is_subset(poset.full()) || !poset.is_upper_ideal(upper) {
        return Err(Error::NotAnUpperIdeal(format!(
            "{:?}",
            upper.iter().map(|k| rs.root(k).to_string()).collect::<Vec<_>>()
        )));
    }
    Ok(Arrangement::from_roots(rs, rs.all_positive().difference(upper)))
}

/// The chambers `w^{-1}(C°)`, `w in W^0`, sharing one sign vector on
/// `Delta(1)`; `ideal` is that sign vector's negative part.
#[derive(Clone, Debug)]
pub struct Region {
    pub ideal: Mask,
    /// Sorted by length, then matrix.
    pub chambers: Vec<WeylElement>,
}

impl Region {
    pub fn closest(&self) -> &WeylElement {
        &self.chambers[0]
    }

    pub fn farthest(&self) -> &WeylElement {
        self.chambers.last().expect("regions are nonempty")
    }
}

/// Groups `W^0` by the sign of `(w^{-1} rho, gamma)`, `gamma in Delta(1)`;
/// the sign is negative exactly on `N(w) ∩ Delta(1)`. Regions come out in
/// ascending ideal order.
pub fn regions_in_dominant_chamber(gw: &GradedWeyl, table: &CosetTable) -> Vec<Region> {
    let keyed: Vec<(Mask, &WeylElement)> = table
        .entries
        .par_iter()
        .map(|e| (e.tau, &e.element))
        .collect();
    let mut groups: BTreeMap<Mask, Vec<WeylElement>> = BTreeMap::new();
    for (k, w) in keyed {
        groups.entry(k).or_default().push(w.clone());
    }
    debug_assert!(groups.keys().all(|&k| gw.poset().is_lower_ideal(k)));
    groups
        .into_iter()
        .map(|(ideal, mut chambers)| {
            chambers.sort();
            Region { ideal, chambers }
        })
        .collect()
}

/// Signs of `(w^{-1} rho, gamma)` with `rho = sum of fundamental coweights`,
/// computed by pushing `rho` through a reduced word in coweight coordinates.
/// Independent of the inversion-set rule.
pub fn geometric_sign_oracle(rs: &RootSystem, arr: &Arrangement, w: &WeylElement) -> Result<Vec<i8>> {
    let n = rs.rank();
    let a = rs.cartan_matrix();
    let mut x = vec![1i64; n];
    // w = s_{i1} … s_{ik}  ⟹  w^{-1} rho = s_{ik} … s_{i1} rho
    for &i in &w.reduced_word(rs) {
        let ci = x[i];
        for j in 0..n {
            x[j] -= ci * i64::from(a[i][j]);
        }
    }
    arr.normals
        .iter()
        .map(|g| {
            let v: i64 = g.iter().zip(&x).map(|(&c, &xi)| i64::from(c) * xi).sum();
            match v.signum() {
                0 => Err(Error::NotRegular(g.clone())),
                s => Ok(s as i8),
            }
        })
        .collect()
}

/// Sign vector read off the inversion set: `-` iff `w(gamma) < 0`.
pub fn inversion_signs(rs: &RootSystem, arr: &Arrangement, w: &WeylElement) -> Vec<i8> {
    let inv = w.inversion_set(rs);
    arr.roots.iter().map(|k| if inv.contains(k) { -1 } else { 1 }).collect()
}

/// Characteristic polynomial together with the primes it was counted at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub poly: Poly,
    pub primes: Vec<u64>,
    pub verification_prime: u64,
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// `n + 1` interpolation primes and one verification prime, all larger than
/// `max(bound, 5)`. Subsets of root systems only lose rank modulo 2, 3 or 5,
/// so these reductions keep the intersection lattice intact.
pub fn counting_primes(n: usize, bound: u64) -> (Vec<u64>, u64) {
    let mut primes = Vec::with_capacity(n + 2);
    let mut q = bound.max(5) + 1;
    while primes.len() < n + 2 {
        if is_prime(q) {
            primes.push(q);
        }
        q += 1;
    }
    let verify = primes.pop().expect("n + 2 primes");
    (primes, verify)
}

fn inv_mod(a: i64, q: i64) -> i64 {
    let (mut r0, mut r1, mut s0, mut s1) = (q, a.rem_euclid(q), 0i64, 1i64);
    while r1 != 0 {
        let t = r0 / r1;
        (r0, r1) = (r1, r0 - t * r1);
        (s0, s1) = (s1, s0 - t * s1);
    }
    s0.rem_euclid(q)
}

/// `#{x in F_q^n : <x, gamma> != 0 for all normals}`. The last coordinate is
/// solved for: each normal with a nonzero last entry forbids one value.
pub fn count_points(arr: &Arrangement, q: u64) -> u64 {
    let n = arr.ambient_rank;
    if n == 0 {
        return 1;
    }
    let qi = q as i64;
    let normals: Vec<Vec<i64>> = arr
        .normals
        .iter()
        .map(|g| g.iter().map(|&c| i64::from(c).rem_euclid(qi)).collect())
        .collect();
    let (flat, tall): (Vec<&Vec<i64>>, Vec<&Vec<i64>>) = normals.iter().partition(|g| g[n - 1] == 0);
    let inverses: Vec<i64> = tall.iter().map(|g| inv_mod(g[n - 1], qi)).collect();
    let lines = q.pow((n - 1) as u32);
    (0..lines)
        .into_par_iter()
        .map_init(
            || (vec![0i64; n - 1], Vec::<i64>::with_capacity(tall.len())),
            |(x, forbidden), idx| {
                let mut r = idx;
                for xi in x.iter_mut() {
                    *xi = (r % q) as i64;
                    r /= q;
                }
                let dot = |g: &Vec<i64>| -> i64 { (0..n - 1).map(|i| g[i] * x[i]).sum::<i64>() % qi };
                if flat.iter().any(|g| dot(g) == 0) {
                    return 0;
                }
                forbidden.clear();
                for (g, inv) in tall.iter().zip(&inverses) {
                    // x_n = -dot / g_n
                    forbidden.push((qi - dot(g)) % qi * inv % qi);
                }
                forbidden.sort_unstable();
                forbidden.dedup();
                q - forbidden.len() as u64
            },
        )
        .sum()
}

/// Exact Lagrange interpolation through `(x_i, y_i)`; fails unless every
/// coefficient is an integer.
fn interpolate(points: &[(u64, u64)]) -> Result<Poly> {
    let m = points.len();
    let mut coeffs = vec![BigRational::zero(); m];
    for (i, &(xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::zero(); m];
        basis[0] = BigRational::one();
        let mut denom = BigRational::one();
        let mut deg = 0;
        for (j, &(xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let xj = BigRational::from_integer(BigInt::from(xj));
            for k in (0..=deg).rev() {
                let c = basis[k].clone();
                basis[k + 1] += c.clone();
                basis[k] = -c * &xj;
            }
            deg += 1;
            denom *= BigRational::from_integer(BigInt::from(xi)) - xj;
        }
        let scale = BigRational::from_integer(BigInt::from(yi)) / denom;
        for k in 0..m {
            coeffs[k] += &basis[k] * &scale;
        }
    }
    let ints = coeffs
        .into_iter()
        .map(|c| {
            if !c.is_integer() {
                return Err(Error::Invariant(format!("non-integral interpolated coefficient {c}")));
            }
            i128::try_from(c.to_integer())
                .map_err(|_| Error::Invariant("coefficient exceeds 128 bits".into()))
        })
        .collect::<Result<Vec<i128>>>()?;
    Ok(Poly::new(ints))
}

/// `chi(t)` by counting points at `n + 1` primes, interpolating, and
/// checking the prediction at one more prime.
pub fn char_poly(rs: &RootSystem, arr: &Arrangement, max_rank: usize) -> Result<CharPoly> {
    let n = arr.ambient_rank;
    if n > max_rank {
        return Err(Error::RankBound(format!(
            "point counting needs rank <= {max_rank}, got {n}"
        )));
    }
    let (primes, verification_prime) = counting_primes(n, rs.coxeter_number() as u64);
    let points: Vec<(u64, u64)> = primes.iter().map(|&q| (q, count_points(arr, q))).collect();
    let poly = interpolate(&points)?;
    let check = count_points(arr, verification_prime);
    if poly.eval(verification_prime as i128) != check as i128 {
        return Err(Error::Invariant(format!(
            "interpolated polynomial {poly} mispredicts the count {check} at q = {verification_prime}"
        )));
    }
    if poly.degree() != Some(n) || poly.leading() != 1 {
        return Err(Error::Invariant(format!("characteristic polynomial {poly} is not monic of degree {n}")));
    }
    Ok(CharPoly { poly, primes, verification_prime })
}

/// `(-1)^n chi(-1)`.
pub fn zaslavsky_regions(chi: &Poly) -> i128 {
    let n = chi.degree().unwrap_or(0);
    let v = chi.eval(-1);
    if n % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Counts of a root set by height and the conjugate partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightPartition {
    pub counts: Vec<usize>,
    pub dual: Vec<usize>,
}

impl HeightPartition {
    pub fn is_partition(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] >= w[1])
    }

    /// Non-increasing with a strict first step (vacuous for fewer than two parts).
    pub fn is_strict_partition(&self) -> bool {
        self.is_partition() && (self.counts.len() < 2 || self.counts[0] > self.counts[1])
    }
}

pub fn height_partition(rs: &RootSystem, roots: Mask) -> HeightPartition {
    let counts = rs.height_counts(roots);
    let dual = dual_partition(&counts);
    HeightPartition { counts, dual }
}

pub fn dual_partition(counts: &[usize]) -> Vec<usize> {
    conjugate_partition(counts)
}

/// `P(0,1)`: heights of `Delta(0)^+ ∪ Delta(1)`.
pub fn partition_01(g: &Grading) -> HeightPartition {
    height_partition(g.root_system(), g.delta0_positive().union(g.slice(1)))
}

/// The dual partition of `P(0,1)`, ascending, padded with zeros to the rank.
pub fn conjectural_exponents(g: &Grading) -> Vec<usize> {
    let mut b = partition_01(g).dual;
    b.resize(g.root_system().rank().max(b.len()), 0);
    b.sort_unstable();
    b
}

/// `prod_{gamma in Delta(1)} (ht(gamma) + 1) / ht(gamma)`.
pub fn ideal_count_formula(g: &Grading) -> BigRational {
    height_product(g.root_system(), g.slice(1))
}

/// `prod_{gamma in set} (ht(gamma) + 1) / ht(gamma)`.
pub fn height_product(rs: &RootSystem, set: Mask) -> BigRational {
    set.iter().fold(BigRational::one(), |acc, k| {
        let h = i64::from(rs.root(k).height);
        acc * BigRational::new(BigInt::from(h + 1), BigInt::from(h))
    })
}

/// Everything known about `A(0,1)` for one grading.
#[derive(Clone, Debug)]
pub struct ConjectureCheck {
    pub partition: HeightPartition,
    pub exponents: Vec<usize>,
    pub num_hyperplanes: usize,
    pub w0_order: u64,
    pub ideal_count: u64,
    pub region_count: u64,
    pub formula_value: BigRational,
    /// `prod (b_i + 1)`.
    pub exponent_product: u128,
    pub char_poly: Option<Poly>,
    pub zaslavsky: Option<i128>,
    /// `chi = prod (t - b_i)`, when `chi` was computed.
    pub exponents_match: Option<bool>,
    /// Classical types and `G2`, where mismatches are failures.
    pub authoritative: bool,
}

impl ConjectureCheck {
    /// The checks that must hold whenever `authoritative` is set.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let sum: usize = self.exponents.iter().sum();
        if sum != self.num_hyperplanes {
            out.push(format!("sum of exponents {sum} != {} hyperplanes", self.num_hyperplanes));
        }
        if self.region_count != self.ideal_count {
            out.push(format!("{} regions != {} ideals", self.region_count, self.ideal_count));
        }
        let per_w0 = BigRational::new(BigInt::from(self.exponent_product), BigInt::from(self.w0_order));
        if per_w0 != BigRational::from_integer(BigInt::from(self.ideal_count)) {
            out.push(format!("prod(b_i + 1) / #W(0) = {per_w0} != {} ideals", self.ideal_count));
        }
        if self.formula_value != BigRational::from_integer(BigInt::from(self.ideal_count)) {
            out.push(format!("height product {} != {} ideals", self.formula_value, self.ideal_count));
        }
        if let Some(z) = self.zaslavsky {
            if z != self.exponent_product as i128 {
                out.push(format!("Zaslavsky count {z} != prod(b_i + 1) = {}", self.exponent_product));
            }
            if z != (self.w0_order as i128) * (self.ideal_count as i128) {
                out.push(format!("Zaslavsky count {z} != #W(0) * #ideals"));
            }
        }
        if self.exponents_match == Some(false) {
            out.push(format!(
                "chi = {} does not factor over exponents {:?}",
                self.char_poly.as_ref().expect("present when compared"),
                self.exponents
            ));
        }
        out
    }
}

pub fn conjecture_check(gw: &GradedWeyl, table: &CosetTable, with_char_poly: Option<usize>) -> Result<ConjectureCheck> {
    let g = gw.grading();
    let rs = g.root_system();
    let partition = partition_01(g);
    let exponents = conjectural_exponents(g);
    let arr = sub_arrangement_01(g);
    let regions = regions_in_dominant_chamber(gw, table);
    let ideal_count = gw.poset().count_lower_ideals();
    let exponent_product = exponents.iter().map(|&b| b as u128 + 1).product();
    let (char_poly, zaslavsky, exponents_match) = match with_char_poly {
        Some(max_rank) => {
            let chi = char_poly(rs, &arr, max_rank)?.poly;
            let expected = Poly::from_roots(exponents.iter().map(|&b| b as i128));
            let z = zaslavsky_regions(&chi);
            let matches = chi == expected;
            (Some(chi), Some(z), Some(matches))
        }
        None => (None, None, None),
    };
    Ok(ConjectureCheck {
        num_hyperplanes: arr.len(),
        w0_order: parabolic_order(rs, &g.pi0()),
        region_count: regions.len() as u64,
        formula_value: ideal_count_formula(g),
        authoritative: rs.cartan_type().family().is_classical_or_g2(),
        partition,
        exponents,
        ideal_count,
        exponent_product,
        char_poly,
        zaslavsky,
        exponents_match,
    })
}

/// Outcome of checking the height sequence of `Delta^+ \ I` for every upper
/// ideal `I` of the root poset.
#[derive(Clone, Debug)]
pub struct UpperIdealReport {
    pub upper_ideals: usize,
    /// Complements `Delta^+ \ I` whose height sequence fails, with that sequence.
    pub violations: Vec<(Mask, Vec<usize>)>,
}

pub fn upper_ideal_partition_check(rs: &RootSystem) -> UpperIdealReport {
    let poset = Poset::root_poset(rs);
    // upper ideals are exactly complements of lower ideals
    let lowers = poset.enumerate_lower_ideals();
    let violations = lowers
        .par_iter()
        .filter_map(|&lower| {
            let p = height_partition(rs, lower);
            (!p.is_strict_partition()).then_some((lower, p.counts))
        })
        .collect();
    UpperIdealReport { upper_ideals: lowers.len(), violations }
}
