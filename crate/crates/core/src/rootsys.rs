//! Irreducible crystallographic root systems of types A–G.
//!
//! Simple roots follow Bourbaki numbering. Roots are integer vectors of
//! coefficients over the simple roots. The inner product is normalised so
//! that long roots have squared length 2; it is kept exact as rationals.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bits::Mask;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Classical families plus G2: the cases where the height-product
    /// formulas are theorems rather than conjectures.
    pub fn is_classical_or_g2(self) -> bool {
        !matches!(self, Family::E | Family::F)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            let need = match family {
                Family::A => "n >= 1",
                Family::B | Family::C => "n >= 2",
                Family::D => "n >= 3",
                Family::E => "n in {6, 7, 8}",
                Family::F => "n = 4",
                Family::G => "n = 2",
            };
            return Err(Error::InvalidCartanType(
                format!("{}{}", family.letter(), rank),
                format!("rank for family {} must satisfy {need}", family.letter()),
            ));
        }
        // Bitmasks over the positive roots must fit in 128 bits.
        let count = positive_root_count(family, rank);
        if count > crate::bits::CAPACITY {
            return Err(Error::InvalidCartanType(
                format!("{}{}", family.letter(), rank),
                format!("{count} positive roots exceed the supported 128"),
            ));
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every type of rank at most `max_rank`, skipping the low-rank
    /// coincidences (C2 = B2, D3 = A3).
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for rank in 1..=max_rank {
            for family in [
                Family::A,
                Family::B,
                Family::C,
                Family::D,
                Family::E,
                Family::F,
                Family::G,
            ] {
                let skip = matches!((family, rank), (Family::C, 2) | (Family::D, 3));
                if skip {
                    continue;
                }
                if let Ok(ct) = CartanType::new(family, rank) {
                    out.push(ct);
                }
            }
        }
        out
    }
}

fn positive_root_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |why: &str| Error::InvalidCartanType(s.to_string(), why.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| bad("empty"))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad("family letter must be one of A-G")),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected rank digits after the family letter"));
        }
        let rank: usize = digits.parse().map_err(|_| bad("rank out of range"))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Bourbaki Cartan matrix `a[i][j] = <alpha_j, alpha_i^vee>` (0-based).
fn cartan_matrix(ct: CartanType) -> Vec<Vec<i32>> {
    let n = ct.rank;
    let mut a = vec![vec![0i32; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match ct.family {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G => link(0, 1),
    }
    match ct.family {
        // alpha_n short
        Family::B => a[n - 1][n - 2] = -2,
        // alpha_n long
        Family::C => a[n - 2][n - 1] = -2,
        // alpha_3 short, alpha_2 long
        Family::F => a[2][1] = -2,
        // alpha_1 short
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Squared lengths of the simple roots, long roots normalised to 2.
fn simple_square_lengths(ct: CartanType) -> Vec<BigRational> {
    let n = ct.rank;
    let two = BigRational::from_integer(BigInt::from(2));
    let one = BigRational::one();
    match ct.family {
        Family::A | Family::D | Family::E => vec![two; n],
        Family::B => {
            let mut v = vec![two; n];
            v[n - 1] = one;
            v
        }
        Family::C => {
            let mut v = vec![one; n];
            v[n - 1] = two;
            v
        }
        Family::F => vec![two.clone(), two, one.clone(), one],
        Family::G => vec![BigRational::new(BigInt::from(2), BigInt::from(3)), two],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub coords: Vec<i32>,
    pub height: i32,
}

impl Root {
    pub fn new(coords: Vec<i32>) -> Root {
        let height = coords.iter().sum();
        Root { coords, height }
    }

    pub fn is_positive(&self) -> bool {
        self.height > 0
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }
}

/// Formats as `a1+2a2`, the same syntax the parser accepts.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_coords(&self.coords))
    }
}

pub fn format_coords(coords: &[i32]) -> String {
    let mut out = String::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("a{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `a1+2a2`, `-a3`, or a bracketed coefficient list `[1,2]`.
pub fn parse_coords(s: &str, rank: usize) -> Result<Vec<i32>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |why: &str| Error::Parse(s.clone(), why.to_string());
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let v: Vec<i32> = inner
            .split(',')
            .map(|t| t.parse::<i32>().map_err(|_| bad("bad coefficient")))
            .collect::<Result<_>>()?;
        if v.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, got: v.len() });
        }
        return Ok(v);
    }
    let mut coords = vec![0i32; rank];
    let mut rest = s.as_str();
    if rest.is_empty() {
        return Err(bad("empty root"));
    }
    while !rest.is_empty() {
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        let coef_len = rest.bytes().take_while(|b| b.is_ascii_digit()).count();
        let coef: i32 = if coef_len == 0 {
            1
        } else {
            rest[..coef_len].parse().map_err(|_| bad("bad coefficient"))?
        };
        rest = &rest[coef_len..];
        rest = rest
            .strip_prefix('a')
            .or_else(|| rest.strip_prefix('α'))
            .ok_or_else(|| bad("expected `a<index>`"))?;
        let idx_len = rest.bytes().take_while(|b| b.is_ascii_digit()).count();
        if idx_len == 0 {
            return Err(bad("missing simple-root index"));
        }
        let idx: usize = rest[..idx_len].parse().map_err(|_| bad("bad index"))?;
        if idx == 0 || idx > rank {
            return Err(bad("simple-root index out of range"));
        }
        coords[idx - 1] += sign * coef;
        rest = &rest[idx_len..];
    }
    Ok(coords)
}

/// Which of the two candidates completes the three-root lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    First,
    Second,
}

const NO_SUM: u16 = u16::MAX;

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i32>>,
    gram: Vec<Vec<BigRational>>,
    // gram * gram_scale, integral
    gram_scaled: Vec<Vec<i64>>,
    gram_scale: i64,
    positive: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    // sums[i * N + j] = index of positive[i] + positive[j], or NO_SUM
    sums: Vec<u16>,
    theta: usize,
    coxeter_number: usize,
    long_simple: Vec<usize>,
    coweights: Vec<Vec<BigRational>>,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> RootSystem {
        let n = cartan_type.rank;
        let cartan = cartan_matrix(cartan_type);
        let sq = simple_square_lengths(cartan_type);

        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let gram: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &sq[i] * BigRational::from_integer(BigInt::from(cartan[i][j])) * &half)
                    .collect()
            })
            .collect();
        let gram_scale: i64 = if cartan_type.family == Family::G { 3 } else { 2 };
        let gram_scaled: Vec<Vec<i64>> = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|g| {
                        let v = g * BigRational::from_integer(BigInt::from(gram_scale));
                        assert!(v.is_integer());
                        i64::try_from(v.to_integer()).expect("small gram entry")
                    })
                    .collect()
            })
            .collect();

        let positive = generate_positive_roots(&cartan);
        let index: HashMap<Vec<i32>, usize> = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();
        let np = positive.len();
        let mut sums = vec![NO_SUM; np * np];
        for i in 0..np {
            for j in 0..np {
                let s: Vec<i32> = positive[i]
                    .coords
                    .iter()
                    .zip(&positive[j].coords)
                    .map(|(a, b)| a + b)
                    .collect();
                if let Some(&k) = index.get(&s) {
                    sums[i * np + j] = k as u16;
                }
            }
        }
        let theta = np - 1;
        let coxeter_number = positive[theta].height as usize + 1;

        let max_len = sq.iter().max().cloned().expect("rank >= 1");
        let long_simple = (0..n).filter(|&i| sq[i] == max_len).collect();
        let coweights = invert_rational(&gram);

        RootSystem {
            cartan_type,
            cartan,
            gram,
            gram_scaled,
            gram_scale,
            positive,
            index,
            sums,
            theta,
            coxeter_number,
            long_simple,
            coweights,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.positive[i]
    }

    pub fn all_positive(&self) -> Mask {
        Mask::full(self.positive.len())
    }

    /// Index of the positive root with these coordinates.
    pub fn index_of(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of `±γ` together with the sign, for any root `γ`.
    pub fn signed_index(&self, coords: &[i32]) -> Option<(usize, bool)> {
        if let Some(i) = self.index_of(coords) {
            return Some((i, true));
        }
        let neg: Vec<i32> = coords.iter().map(|c| -c).collect();
        self.index_of(&neg).map(|i| (i, false))
    }

    pub fn is_root(&self, coords: &[i32]) -> bool {
        coords.len() == self.rank() && self.signed_index(coords).is_some()
    }

    /// Index of `positive[i] + positive[j]` when that sum is a root.
    #[inline]
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.sums[i * self.positive.len() + j];
        (k != NO_SUM).then_some(k as usize)
    }

    pub fn theta(&self) -> &Root {
        &self.positive[self.theta]
    }

    pub fn theta_index(&self) -> usize {
        self.theta
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    /// Indices of the long simple roots (all of them when simply laced).
    pub fn long_simple(&self) -> &[usize] {
        &self.long_simple
    }

    /// Fundamental coweights in simple-root coordinates.
    pub fn fundamental_coweights(&self) -> &[Vec<BigRational>] {
        &self.coweights
    }

    /// Exact `(x, y)` for vectors in simple-root coordinates.
    pub fn inner(&self, x: &[BigRational], y: &[BigRational]) -> Result<BigRational> {
        let n = self.rank();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.len() });
            }
        }
        let mut acc = BigRational::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += &x[i] * &self.gram[i][j] * &y[j];
            }
        }
        Ok(acc)
    }

    /// `(x, y) * scale` for integer vectors; see [`RootSystem::gram_scale`].
    pub fn inner_scaled(&self, x: &[i32], y: &[i32]) -> i64 {
        let n = self.rank();
        let mut acc = 0i64;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            let xi = x[i] as i64;
            for j in 0..n {
                acc += xi * self.gram_scaled[i][j] * y[j] as i64;
            }
        }
        acc
    }

    pub fn gram_scale(&self) -> i64 {
        self.gram_scale
    }

    pub fn inner_int(&self, x: &[i32], y: &[i32]) -> BigRational {
        BigRational::new(BigInt::from(self.inner_scaled(x, y)), BigInt::from(self.gram_scale))
    }

    /// `<mu, gamma^vee> = 2 (mu, gamma) / (gamma, gamma)`, integral for roots.
    pub fn pairing(&self, mu: &[i32], gamma: &[i32]) -> i32 {
        let num = 2 * self.inner_scaled(mu, gamma);
        let den = self.inner_scaled(gamma, gamma);
        debug_assert!(den > 0 && num % den == 0);
        (num / den) as i32
    }

    /// `<v, alpha_i^vee>` via the Cartan matrix.
    #[inline]
    pub fn simple_pairing(&self, v: &[i32], i: usize) -> i32 {
        self.cartan[i].iter().zip(v).map(|(a, x)| a * x).sum()
    }

    /// Applies the simple reflection `s_i` in place.
    #[inline]
    pub fn simple_reflect(&self, i: usize, v: &mut [i32]) {
        let p = self.simple_pairing(v, i);
        v[i] -= p;
    }

    pub fn is_long(&self, coords: &[i32]) -> bool {
        self.inner_scaled(coords, coords) == 2 * self.gram_scale
    }

    pub fn num_long_roots(&self) -> usize {
        2 * self.positive.iter().filter(|r| self.is_long(&r.coords)).count()
    }

    /// `s_gamma(mu) = mu - <mu, gamma^vee> gamma`.
    pub fn reflect(&self, gamma: &Root, mu: &Root) -> Root {
        let p = self.pairing(&mu.coords, &gamma.coords);
        Root::new(mu.coords.iter().zip(&gamma.coords).map(|(m, g)| m - p * g).collect())
    }

    /// `gamma + mu` if that is a root.
    pub fn add_roots(&self, gamma: &Root, mu: &Root) -> Option<Root> {
        let s: Vec<i32> = gamma.coords.iter().zip(&mu.coords).map(|(a, b)| a + b).collect();
        self.is_root(&s).then(|| Root::new(s))
    }

    /// Given roots with `nu1 + nu2` and `mu + nu1 + nu2` roots and
    /// `mu != -nu1, -nu2`, picks `nu_i` with `mu + nu_i` a root, preferring `nu1`.
    pub fn three_root_witness(&self, mu: &[i32], nu1: &[i32], nu2: &[i32]) -> Result<Witness> {
        for v in [mu, nu1, nu2] {
            if !self.is_root(v) {
                return Err(Error::NotARoot(v.to_vec()));
            }
        }
        let add = |a: &[i32], b: &[i32]| -> Vec<i32> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
        let s12 = add(nu1, nu2);
        let total = add(mu, &s12);
        let opposite = |a: &[i32], b: &[i32]| a.iter().zip(b).all(|(x, y)| x + y == 0);
        if opposite(mu, nu1) || opposite(mu, nu2) {
            return Err(Error::Precondition("three-root witness needs mu != -nu1, -nu2".into()));
        }
        if !self.is_root(&s12) || !self.is_root(&total) {
            return Err(Error::Precondition(
                "three-root witness needs nu1+nu2 and mu+nu1+nu2 to be roots".into(),
            ));
        }
        if self.is_root(&add(mu, nu1)) {
            Ok(Witness::First)
        } else if self.is_root(&add(mu, nu2)) {
            Ok(Witness::Second)
        } else {
            Err(Error::Invariant(format!(
                "no witness for mu={mu:?}, nu1={nu1:?}, nu2={nu2:?}"
            )))
        }
    }

    /// `eta_i = #{gamma in the set : ht(gamma) = i}` for `i = 1..`, trailing
    /// zeros trimmed.
    pub fn height_counts(&self, set: Mask) -> Vec<usize> {
        let mut counts: Vec<usize> = Vec::new();
        for i in set.iter() {
            let h = self.positive[i].height as usize;
            if counts.len() < h {
                counts.resize(h, 0);
            }
            counts[h - 1] += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    /// Exponents `m_1 <= … <= m_n`, read off as the conjugate of the height
    /// distribution of the positive roots.
    pub fn exponents(&self) -> Vec<usize> {
        let counts = self.height_counts(self.all_positive());
        let mut ex = conjugate_partition(&counts);
        ex.reverse();
        ex
    }

    /// Positive roots whose support lies in `subset` of simple indices.
    pub fn parabolic_positive(&self, subset: &[usize]) -> Mask {
        let mut m = Mask::EMPTY;
        for (k, r) in self.positive.iter().enumerate() {
            if r.coords
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || subset.contains(&i))
            {
                m.insert(k);
            }
        }
        m
    }

    /// Index of the simple root `alpha_i`; simple roots come first in the
    /// canonical order.
    pub fn simple_index(&self, i: usize) -> usize {
        debug_assert_eq!(self.positive[i].coords[i], 1);
        i
    }
}

/// Conjugate partition: `out_j = #{i : counts_i >= j}` for `j = 1..max`.
pub fn conjugate_partition(counts: &[usize]) -> Vec<usize> {
    let max = counts.iter().copied().max().unwrap_or(0);
    (1..=max).map(|j| counts.iter().filter(|&&c| c >= j).count()).collect()
}

fn generate_positive_roots(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let mut known: HashSet<Vec<i32>> = HashSet::new();
    let mut layers: Vec<Vec<Vec<i32>>> = Vec::new();
    let simple: Vec<Vec<i32>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    for s in &simple {
        known.insert(s.clone());
    }
    layers.push(simple);
    loop {
        let mut next: Vec<Vec<i32>> = Vec::new();
        for beta in layers.last().expect("nonempty") {
            for i in 0..n {
                // alpha_i-string through beta: p = how far down it extends
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i32 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let q = p - pair;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    let mut roots: Vec<Root> = layers.into_iter().flatten().map(Root::new).collect();
    // height ascending, then coordinates descending (keeps alpha_1..alpha_n first)
    roots.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| b.coords.cmp(&a.coords)));
    roots
}

fn invert_rational(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("gram matrix is nonsingular");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    // gram is symmetric, so rows of the inverse are the coweights
    inv
}
