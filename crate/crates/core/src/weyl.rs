//! Weyl group elements as integer matrices on simple-root coordinates, and
//! the graded theory built on them: minimal coset representatives `W^0`, the
//! closure `<I>` of an ideal, the minimal/maximal elements of each ideal,
//! the involution `w ↦ w0 w w~0`, extreme roots and the map `eta`.

use std::collections::{BTreeMap, BTreeSet};

use crate::bits::Mask;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::ideals::WeightPoset;
use crate::poly::Poly;
use crate::rootsys::{format_coords, RootSystem};

/// Default cap on the rank for materialising all of `W`.
pub const DEFAULT_MAX_RANK: usize = 7;

/// An element of `W`, stored as the matrix of its action on simple-root
/// coordinates (column `k` is the image of `alpha_k`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    length: usize,
    n: usize,
    matrix: Vec<i32>,
}

impl WeylElement {
    pub fn identity(n: usize) -> WeylElement {
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1;
        }
        WeylElement { length: 0, n, matrix }
    }

    fn from_matrix(rs: &RootSystem, matrix: Vec<i32>) -> WeylElement {
        let n = rs.rank();
        let mut w = WeylElement { length: 0, n, matrix };
        w.length = w.inversion_set(rs).len();
        w
    }

    pub fn simple(rs: &RootSystem, i: usize) -> WeylElement {
        let n = rs.rank();
        let mut matrix = vec![0; n * n];
        for k in 0..n {
            let mut col = vec![0; n];
            col[k] = 1;
            rs.simple_reflect(i, &mut col);
            for r in 0..n {
                matrix[r * n + k] = col[r];
            }
        }
        WeylElement { length: 1, n, matrix }
    }

    /// `s_{w[0]} s_{w[1]} …` (0-based indices; the last letter acts first).
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> WeylElement {
        let n = rs.rank();
        let mut m = WeylElement::identity(n).matrix;
        for &i in word.iter().rev() {
            left_multiply_simple(rs, i, &mut m);
        }
        WeylElement::from_matrix(rs, m)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn matrix(&self) -> &[i32] {
        &self.matrix
    }

    pub fn matrix_rows(&self) -> Vec<Vec<i32>> {
        self.matrix.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn apply(&self, v: &[i32]) -> Vec<i32> {
        let n = self.n;
        (0..n)
            .map(|r| (0..n).map(|k| self.matrix[r * n + k] * v[k]).sum())
            .collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let n = self.n;
        let mut m = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] = (0..n).map(|k| self.matrix[r * n + k] * other.matrix[k * n + c]).sum();
            }
        }
        WeylElement::from_matrix(rs, m)
    }

    /// `N(w) = {gamma > 0 : w(gamma) < 0}`.
    pub fn inversion_set(&self, rs: &RootSystem) -> Mask {
        let mut m = Mask::EMPTY;
        for (k, r) in rs.positive_roots().iter().enumerate() {
            if self.apply(&r.coords).iter().sum::<i32>() < 0 {
                m.insert(k);
            }
        }
        m
    }

    /// `w^{-1}`, read off from `w^{-1}(alpha_i) = ±beta` where `w(beta) = ±alpha_i`.
    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let n = self.n;
        let mut m = vec![0; n * n];
        let mut found = 0;
        for r in rs.positive_roots() {
            let img = self.apply(&r.coords);
            let nonzero: Vec<usize> = (0..n).filter(|&k| img[k] != 0).collect();
            if nonzero.len() == 1 && img[nonzero[0]].abs() == 1 {
                let i = nonzero[0];
                let sign = img[i];
                for row in 0..n {
                    m[row * n + i] = sign * r.coords[row];
                }
                found += 1;
            }
        }
        debug_assert_eq!(found, n);
        WeylElement { length: self.length, n, matrix: m }
    }

    /// A reduced word, 0-based, obtained by peeling right descents.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut cur = self.matrix.clone();
        let n = self.n;
        let mut peeled = Vec::with_capacity(self.length);
        loop {
            // right descent: w(alpha_i) < 0, i.e. column i negative
            let desc = (0..n).find(|&i| (0..n).map(|r| cur[r * n + i]).sum::<i32>() < 0);
            match desc {
                Some(i) => {
                    right_multiply_simple(rs, i, &mut cur);
                    peeled.push(i);
                }
                None => break,
            }
        }
        peeled.reverse();
        peeled
    }

    /// `s1 s2` style, 1-based; the identity is `e`.
    pub fn word_string(&self, rs: &RootSystem) -> String {
        format_word(&self.reduced_word(rs))
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
}

fn left_multiply_simple(rs: &RootSystem, i: usize, m: &mut [i32]) {
    let n = rs.rank();
    let mut col = vec![0; n];
    for k in 0..n {
        for r in 0..n {
            col[r] = m[r * n + k];
        }
        rs.simple_reflect(i, &mut col);
        for r in 0..n {
            m[r * n + k] = col[r];
        }
    }
}

fn right_multiply_simple(rs: &RootSystem, i: usize, m: &mut [i32]) {
    // (w s_i)(alpha_k) = w(alpha_k - <alpha_k, alpha_i^vee> alpha_i)
    let n = rs.rank();
    let a = rs.cartan_matrix();
    let col_i: Vec<i32> = (0..n).map(|r| m[r * n + i]).collect();
    for k in 0..n {
        let c = a[i][k];
        if c != 0 {
            for r in 0..n {
                m[r * n + k] -= c * col_i[r];
            }
        }
    }
}

/// Checks that `set` and `Delta^+ \ set` are both closed under addition;
/// on failure reports a violating pair.
pub fn is_biconvex(rs: &RootSystem, set: Mask) -> Result<()> {
    let comp = rs.all_positive().difference(set);
    for (name, s, other) in [("set", set, comp), ("complement", comp, set)] {
        let members: Vec<usize> = s.iter().collect();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a..] {
                if let Some(k) = rs.sum_index(i, j) {
                    if other.contains(k) {
                        return Err(Error::NotBiconvex(format!(
                            "{name} not closed: {} + {} = {}",
                            rs.root(i),
                            rs.root(j),
                            rs.root(k)
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The unique `w` with `N(w) = set`, by repeatedly peeling a simple root
/// (lowest index first) and replacing `M` by `s_alpha(M \ {alpha})`.
pub fn element_from_inversions(rs: &RootSystem, set: Mask) -> Result<WeylElement> {
    is_biconvex(rs, set)?;
    let n = rs.rank();
    let mut m = set;
    let mut peeled = Vec::new();
    while !m.is_empty() {
        let i = (0..n)
            .find(|&i| m.contains(rs.simple_index(i)))
            .ok_or_else(|| Error::NotBiconvex("no simple root to peel".into()))?;
        let mut next = Mask::EMPTY;
        for k in m.iter() {
            if k == i {
                continue;
            }
            let mut v = rs.root(k).coords.clone();
            rs.simple_reflect(i, &mut v);
            let j = rs
                .index_of(&v)
                .ok_or_else(|| Error::Invariant("s_i must permute Delta^+ \\ {alpha_i}".into()))?;
            next.insert(j);
        }
        peeled.push(i);
        m = next;
    }
    // N(w) = M, w = (w s_i1) s_i1 = … = s_ik … s_i1
    peeled.reverse();
    let w = WeylElement::from_word(rs, &peeled);
    if w.inversion_set(rs) != set {
        return Err(Error::Invariant("peeled word does not reproduce the inversion set".into()));
    }
    Ok(w)
}

/// Longest element of the parabolic subgroup on `subset` (all of `W` when
/// `subset` is every node).
pub fn longest_element(rs: &RootSystem, subset: &[usize]) -> WeylElement {
    element_from_inversions(rs, rs.parabolic_positive(subset)).expect("parabolic positive roots are bi-convex")
}

/// Minimal-length representatives of `W / W_J` for `J = parabolic`, found by
/// a breadth-first walk on the orbit of `v = sum_{j not in J} varpi_j^vee`
/// (stabiliser `W_J`). Sorted by length, then matrix.
pub fn enumerate_quotient(rs: &RootSystem, parabolic: &[usize]) -> Vec<WeylElement> {
    let n = rs.rank();
    let start: Vec<i32> = (0..n).map(|j| i32::from(!parabolic.contains(&j))).collect();
    let a = rs.cartan_matrix();
    let mut out = vec![WeylElement::identity(n)];
    let mut layer: BTreeMap<Vec<i32>, Vec<i32>> = BTreeMap::new();
    layer.insert(start, WeylElement::identity(n).matrix);
    let mut length = 0;
    while !layer.is_empty() {
        length += 1;
        let mut next: BTreeMap<Vec<i32>, Vec<i32>> = BTreeMap::new();
        for (point, mat) in &layer {
            for i in 0..n {
                // (w v, alpha_i) > 0  ⟹  s_i w is a longer representative
                if point[i] <= 0 {
                    continue;
                }
                let p: Vec<i32> = (0..n).map(|j| point[j] - point[i] * a[i][j]).collect();
                next.entry(p).or_insert_with(|| {
                    let mut m = mat.clone();
                    left_multiply_simple(rs, i, &mut m);
                    m
                });
            }
        }
        for m in next.values() {
            out.push(WeylElement { length, n, matrix: m.clone() });
        }
        layer = next;
    }
    out.sort();
    out
}

/// Number of elements of each length in `W / W_J`, without storing elements.
pub fn length_distribution(rs: &RootSystem, parabolic: &[usize]) -> Vec<u64> {
    let n = rs.rank();
    let a = rs.cartan_matrix();
    let start: Vec<i32> = (0..n).map(|j| i32::from(!parabolic.contains(&j))).collect();
    let mut counts = vec![1u64];
    let mut layer: BTreeSet<Vec<i32>> = BTreeSet::from([start]);
    loop {
        let mut next = BTreeSet::new();
        for point in &layer {
            for i in 0..n {
                if point[i] > 0 {
                    next.insert((0..n).map(|j| point[j] - point[i] * a[i][j]).collect::<Vec<i32>>());
                }
            }
        }
        if next.is_empty() {
            break;
        }
        counts.push(next.len() as u64);
        layer = next;
    }
    counts
}

/// `#W_J`, as the size of the `W_J`-orbit of a regular point.
pub fn parabolic_order(rs: &RootSystem, subset: &[usize]) -> u64 {
    let n = rs.rank();
    let a = rs.cartan_matrix();
    let mut seen: BTreeSet<Vec<i32>> = BTreeSet::from([vec![1; n]]);
    let mut layer = vec![vec![1; n]];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for point in &layer {
            for &i in subset {
                if point[i] > 0 {
                    let p: Vec<i32> = (0..n).map(|j| point[j] - point[i] * a[i][j]).collect();
                    if seen.insert(p.clone()) {
                        next.push(p);
                    }
                }
            }
        }
        layer = next;
    }
    seen.len() as u64
}

/// `#W / #W_J` from the height products of `Delta^+` and `Delta_J^+`,
/// without enumerating anything.
pub fn quotient_size(rs: &RootSystem, parabolic: &[usize]) -> u128 {
    let ratio = |set: Mask| -> (u128, u128) {
        set.iter().fold((1u128, 1u128), |(num, den), k| {
            let h = rs.root(k).height as u128;
            let (num, den) = (num * (h + 1), den * h);
            let g = gcd(num, den);
            (num / g, den / g)
        })
    };
    let (a, b) = ratio(rs.all_positive());
    let (c, d) = ratio(rs.parabolic_positive(parabolic));
    (a / b) / (c / d)
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All of `W`; refused above `max_rank` (use [`length_distribution`] or the
/// `W^0` enumeration instead).
pub fn enumerate_w(rs: &RootSystem, max_rank: usize) -> Result<Vec<WeylElement>> {
    if rs.rank() > max_rank {
        return Err(Error::RankBound(format!(
            "enumerating all of W({}) needs rank <= {max_rank}; use the orbit-based W^0 enumeration or length_distribution",
            rs.cartan_type()
        )));
    }
    Ok(enumerate_quotient(rs, &[]))
}

/// `S(t) = sum_{w in S} t^{l(w)}`.
pub fn poincare<'a, I: IntoIterator<Item = &'a WeylElement>>(set: I) -> Poly {
    Poly::from_exponents(set.into_iter().map(|w| w.length()))
}

/// `prod_{gamma in set} (1 - t^{ht+1}) / (1 - t^{ht})`, divided out exactly.
pub fn kostant_macdonald(rs: &RootSystem, set: Mask) -> Result<Poly> {
    let mut num = Poly::one();
    let mut den = Poly::one();
    for k in set.iter() {
        let h = rs.root(k).height as usize;
        num = num * (Poly::one() - Poly::monomial(h + 1));
        den = den * (Poly::one() - Poly::monomial(h));
    }
    num.div_exact(&den)
        .ok_or_else(|| Error::Invariant("height product is not a polynomial".into()))
}

/// `I^1 = I`, `I^k = (I + I^{k-1}) ∩ Delta`, until empty.
pub fn closure_layers(rs: &RootSystem, set: Mask) -> Vec<Mask> {
    let mut layers = Vec::new();
    let mut cur = set;
    while !cur.is_empty() {
        layers.push(cur);
        let mut next = Mask::EMPTY;
        for i in set.iter() {
            for j in cur.iter() {
                if let Some(k) = rs.sum_index(i, j) {
                    next.insert(k);
                }
            }
        }
        cur = next;
    }
    layers
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    /// `layers[k-1] = I^k`, root masks.
    pub layers: Vec<Mask>,
    pub union: Mask,
}

impl Closure {
    fn of(rs: &RootSystem, set: Mask) -> Closure {
        let layers = closure_layers(rs, set);
        let union = layers.iter().fold(Mask::EMPTY, |a, &b| a.union(b));
        Closure { layers, union }
    }
}

/// One row of the `W^0` table.
#[derive(Clone, Debug)]
pub struct CosetEntry {
    pub element: WeylElement,
    pub inversions: Mask,
    /// `tau(w) = N(w) ∩ Delta(1)`, local to the `Delta(1)` poset.
    pub tau: Mask,
    /// `w^{-1}(alpha) in Delta(>= -1)` for all simple `alpha`.
    pub is_min: bool,
    /// `w^{-1}(alpha) in Delta(<= 1)` for all simple `alpha`.
    pub is_max: bool,
}

#[derive(Clone, Debug)]
pub struct CosetTable {
    pub entries: Vec<CosetEntry>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, w: &WeylElement) -> Option<&CosetEntry> {
        self.entries.iter().find(|e| &e.element == w)
    }

    pub fn min_set(&self) -> BTreeSet<WeylElement> {
        self.entries.iter().filter(|e| e.is_min).map(|e| e.element.clone()).collect()
    }

    pub fn max_set(&self) -> BTreeSet<WeylElement> {
        self.entries.iter().filter(|e| e.is_max).map(|e| e.element.clone()).collect()
    }
}

/// A grading together with its `Delta(1)` poset and the longest elements
/// `w0` of `W` and `w~0` of `W(0)`. Ideals are local masks over `Delta(1)`.
#[derive(Clone, Debug)]
pub struct GradedWeyl {
    grading: Grading,
    poset: WeightPoset,
    w0: WeylElement,
    w0_tilde: WeylElement,
}

impl GradedWeyl {
    pub fn new(grading: Grading) -> Result<GradedWeyl> {
        let poset = WeightPoset::possibly_empty(&grading, 1)?;
        let rs = grading.root_system();
        let all: Vec<usize> = (0..rs.rank()).collect();
        let w0 = longest_element(rs, &all);
        let w0_tilde = longest_element(rs, &grading.pi0());
        Ok(GradedWeyl { grading, poset, w0, w0_tilde })
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn rs(&self) -> &RootSystem {
        self.grading.root_system()
    }

    pub fn poset(&self) -> &WeightPoset {
        &self.poset
    }

    pub fn w0(&self) -> &WeylElement {
        &self.w0
    }

    pub fn w0_tilde(&self) -> &WeylElement {
        &self.w0_tilde
    }

    pub fn ideals(&self) -> Vec<Mask> {
        self.poset.enumerate_lower_ideals()
    }

    pub fn is_in_w0(&self, w: &WeylElement) -> bool {
        let rs = self.rs();
        self.grading.pi0().iter().all(|&i| w.apply(&rs.root(i).coords).iter().sum::<i32>() > 0)
    }

    fn check_w0(&self, w: &WeylElement) -> Result<()> {
        if self.is_in_w0(w) {
            Ok(())
        } else {
            Err(Error::NotInW0(w.word_string(self.rs())))
        }
    }

    fn check_ideal(&self, ideal: Mask) -> Result<()> {
        if ideal.is_subset(self.poset.full()) && self.poset.is_lower_ideal(ideal) {
            return Ok(());
        }
        let rs = self.rs();
        let msg = match self.poset.lower_ideal_violation(ideal) {
            Some((lo, hi)) => format!(
                "{} is in the set but {} (covered by it) is not",
                rs.root(self.poset.root_of(hi)),
                rs.root(self.poset.root_of(lo))
            ),
            None => format!("{ideal:?} is not a subset of Delta(1)"),
        };
        Err(Error::NotAnIdeal(msg))
    }

    /// `tau(w) = N(w) ∩ Delta(1)`.
    pub fn tau(&self, w: &WeylElement) -> Result<Mask> {
        self.check_w0(w)?;
        let inv = w.inversion_set(self.rs()).intersection(self.grading.slice(1));
        self.poset.from_roots(inv)
    }

    /// `<I>` for a lower ideal of `Delta(1)`.
    pub fn closure(&self, ideal: Mask) -> Result<Closure> {
        self.check_ideal(ideal)?;
        Ok(Closure::of(self.rs(), self.poset.to_roots(ideal)))
    }

    /// `<I^c>` for the upper ideal `I^c = Delta(1) \ I`.
    pub fn upper_closure(&self, ideal: Mask) -> Result<Closure> {
        self.check_ideal(ideal)?;
        Ok(Closure::of(self.rs(), self.poset.to_roots(self.poset.complement(ideal))))
    }

    /// The element with `N(w) = <I>`.
    pub fn w_min(&self, ideal: Mask) -> Result<WeylElement> {
        let c = self.closure(ideal)?;
        element_from_inversions(self.rs(), c.union)
    }

    /// The element with `N(w) = Delta(>= 1) \ <I^c>`.
    pub fn w_max(&self, ideal: Mask) -> Result<WeylElement> {
        let c = self.upper_closure(ideal)?;
        element_from_inversions(self.rs(), self.grading.delta_ge(1).difference(c.union))
    }

    fn level_of_inverse_images(&self, w: &WeylElement) -> Vec<i32> {
        let inv = w.inverse(self.rs());
        (0..self.rs().rank())
            .map(|i| {
                let mut e = vec![0; self.rs().rank()];
                e[i] = 1;
                self.grading.level_of(&inv.apply(&e))
            })
            .collect()
    }

    pub fn coset_table(&self) -> CosetTable {
        let rs = self.rs();
        let elements = enumerate_quotient(rs, &self.grading.pi0());
        let d1 = self.grading.slice(1);
        let entries = elements
            .into_iter()
            .map(|w| {
                let inversions = w.inversion_set(rs);
                let tau = self.poset.from_roots(inversions.intersection(d1)).expect("slice subset");
                let levels = self.level_of_inverse_images(&w);
                CosetEntry {
                    is_min: levels.iter().all(|&l| l >= -1),
                    is_max: levels.iter().all(|&l| l <= 1),
                    element: w,
                    inversions,
                    tau,
                }
            })
            .collect();
        CosetTable { entries }
    }

    /// `{w in W^0 : N(w_min) ⊆ N(w) ⊆ N(w_max)}`.
    pub fn fiber(&self, table: &CosetTable, ideal: Mask) -> Result<Vec<WeylElement>> {
        let rs = self.rs();
        let lo = self.w_min(ideal)?.inversion_set(rs);
        let hi = self.w_max(ideal)?.inversion_set(rs);
        Ok(table
            .entries
            .iter()
            .filter(|e| lo.is_subset(e.inversions) && e.inversions.is_subset(hi))
            .map(|e| e.element.clone())
            .collect())
    }

    /// `{w_{I,min}}` over all ideals, straight from the definition.
    pub fn w0_min_by_definition(&self) -> Result<BTreeSet<WeylElement>> {
        self.ideals().into_iter().map(|i| self.w_min(i)).collect()
    }

    pub fn w0_max_by_definition(&self) -> Result<BTreeSet<WeylElement>> {
        self.ideals().into_iter().map(|i| self.w_max(i)).collect()
    }

    /// `i(w) = w0 w w~0`.
    pub fn involution(&self, w: &WeylElement) -> Result<WeylElement> {
        self.check_w0(w)?;
        let rs = self.rs();
        Ok(self.w0.compose(rs, &w.compose(rs, &self.w0_tilde)))
    }

    /// Permutation of `Delta(1)` induced by `w~0`.
    pub fn w0_tilde_action(&self) -> Vec<usize> {
        let rs = self.rs();
        (0..self.poset.len())
            .map(|i| {
                let img = self.w0_tilde.apply(&rs.root(self.poset.root_of(i)).coords);
                let r = rs.index_of(&img).expect("w~0 preserves Delta(1)");
                self.poset.from_roots(Mask::singleton(r)).expect("w~0 preserves Delta(1)").iter().next().unwrap()
            })
            .collect()
    }

    /// `I* = w~0(Delta(1) \ I)`.
    pub fn dual_ideal(&self, ideal: Mask) -> Result<Mask> {
        self.check_ideal(ideal)?;
        self.poset.dual_ideal(ideal, &self.w0_tilde_action())
    }

    /// `{gamma in Delta(1) : w_{I,min}(gamma) in -Pi}`.
    pub fn max_roots(&self, ideal: Mask) -> Result<Mask> {
        let w = self.w_min(ideal)?;
        Ok(self.select_by_image(&w, -1))
    }

    /// `{gamma in Delta(1) : w_{I,max}(gamma) in Pi}`.
    pub fn min_complement_roots(&self, ideal: Mask) -> Result<Mask> {
        let w = self.w_max(ideal)?;
        Ok(self.select_by_image(&w, 1))
    }

    fn select_by_image(&self, w: &WeylElement, sign: i32) -> Mask {
        let rs = self.rs();
        Mask::from_indices((0..self.poset.len()).filter(|&i| {
            let img = w.apply(&rs.root(self.poset.root_of(i)).coords);
            img.iter().filter(|&&c| c != 0).count() == 1 && img.iter().sum::<i32>() == sign
        }))
    }

    /// `eta(w)_alpha = level(w^{-1}(alpha))`; 1-standard gradings only.
    pub fn eta(&self, w: &WeylElement) -> Result<Vec<i32>> {
        if self.grading.one_standard_node().is_none() {
            return Err(Error::InvalidGrading("eta is defined for 1-standard gradings only".into()));
        }
        self.check_w0(w)?;
        Ok(self.level_of_inverse_images(w))
    }

    pub fn describe_ideal(&self, ideal: Mask) -> Vec<String> {
        let rs = self.rs();
        ideal.iter().map(|i| format_coords(&rs.root(self.poset.root_of(i)).coords)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::GradingSpec;
    use std::sync::Arc;

    fn rs(t: &str) -> RootSystem {
        RootSystem::build(t.parse().unwrap())
    }

    fn gw(spec: &str) -> GradedWeyl {
        GradedWeyl::new(spec.parse::<GradingSpec>().unwrap().build().unwrap()).unwrap()
    }

    fn roots(rs: &RootSystem, m: Mask) -> Vec<Vec<i32>> {
        m.iter().map(|k| rs.root(k).coords.clone()).collect()
    }

    #[test]
    fn a2_group() {
        let r = rs("A2");
        let w = enumerate_w(&r, 7).unwrap();
        assert_eq!(w.len(), 6);
        let w0 = longest_element(&r, &[0, 1]);
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.reduced_word(&r).len(), 3);
        assert_eq!(w0.inversion_set(&r), r.all_positive());
        assert_eq!(poincare(&w), Poly::new(vec![1, 2, 2, 1]));
        // w0 sends Pi to -Pi
        for i in 0..2 {
            let mut e = vec![0; 2];
            e[i] = 1;
            let img = w0.apply(&e);
            assert!(img.iter().sum::<i32>() == -1 && img.iter().all(|&c| c <= 0));
        }
    }

    #[test]
    fn identity_has_no_inversions() {
        let r = rs("B3");
        let e = WeylElement::identity(3);
        assert_eq!(e.inversion_set(&r), Mask::EMPTY);
        assert_eq!(e.word_string(&r), "e");
        assert_eq!(element_from_inversions(&r, Mask::EMPTY).unwrap(), e);
    }

    #[test]
    fn b2_order_and_km() {
        let r = rs("B2");
        let w = enumerate_w(&r, 7).unwrap();
        assert_eq!(w.len(), 8);
        assert_eq!(kostant_macdonald(&r, r.all_positive()).unwrap(), poincare(&w));
        assert_eq!(length_distribution(&r, &[]), vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn inversion_peeling() {
        let r = rs("A2");
        let s1 = element_from_inversions(&r, Mask::singleton(0)).unwrap();
        assert_eq!(s1, WeylElement::simple(&r, 0));
        assert!(matches!(element_from_inversions(&r, Mask::singleton(2)), Err(Error::NotBiconvex(_))));
    }

    #[test]
    fn word_convention() {
        let r = rs("B2");
        let w = WeylElement::from_word(&r, &[0, 1]);
        assert_eq!(roots(&r, w.inversion_set(&r)), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(w.word_string(&r), "s1 s2");
        assert_eq!(w.inverse(&r), WeylElement::from_word(&r, &[1, 0]));
    }

    #[test]
    fn rank_cap() {
        let r = rs("E7");
        assert!(matches!(enumerate_w(&r, 6), Err(Error::RankBound(_))));
    }

    #[test]
    fn a2_quotient() {
        let g = gw("A2:1,0");
        let t = g.coset_table();
        let words: Vec<String> = t.entries.iter().map(|e| e.element.word_string(g.rs())).collect();
        assert_eq!(words, vec!["e", "s1", "s2 s1"]);
        let sizes: Vec<usize> = t.entries.iter().map(|e| e.tau.len()).collect();
        assert_eq!(sizes, vec![0, 1, 2]);
        let s2s1 = &t.entries[2].element;
        assert_eq!(g.tau(s2s1).unwrap(), Mask(3));
        assert!(g.tau(&WeylElement::simple(g.rs(), 1)).is_err());
    }

    #[test]
    fn b2_closure_and_extremes() {
        let g = gw("B2:0,1");
        let r = g.rs();
        let full = Mask(3);
        let c = g.closure(full).unwrap();
        assert_eq!(roots(r, c.union), vec![vec![0, 1], vec![1, 1], vec![1, 2]]);
        assert_eq!(c.layers.len(), 2);
        assert_eq!(g.closure(Mask::EMPTY).unwrap().union, Mask::EMPTY);
        let small = Mask(1); // {a2}
        assert_eq!(roots(r, g.closure(small).unwrap().union), vec![vec![0, 1]]);

        let wmin = g.w_min(small).unwrap();
        assert_eq!(wmin.word_string(r), "s2");
        let wmax = g.w_max(small).unwrap();
        assert_eq!(wmax.word_string(r), "s1 s2");
        assert_eq!(roots(r, wmax.inversion_set(r)), vec![vec![0, 1], vec![1, 2]]);
        assert!(g.w_max(Mask::EMPTY).unwrap().is_identity());

        let t = g.coset_table();
        assert_eq!(t.len(), 4);
        let fiber = g.fiber(&t, small).unwrap();
        let words: Vec<String> = fiber.iter().map(|w| w.word_string(r)).collect();
        assert_eq!(words, vec!["s2", "s1 s2"]);

        assert_eq!(g.max_roots(small).unwrap(), small);
        assert_eq!(g.min_complement_roots(small).unwrap(), Mask(2));
        assert_eq!(g.eta(&wmax).unwrap(), vec![-2, 1]);
        assert_eq!(t.min_set().len(), 3);
        assert_eq!(t.max_set().len(), 3);
    }

    #[test]
    fn a2_dual_and_involution() {
        let g = gw("A2:1,0");
        assert_eq!(g.dual_ideal(Mask(1)).unwrap(), Mask(1));
        assert_eq!(g.dual_ideal(Mask::EMPTY).unwrap(), Mask(3));
        let e = WeylElement::identity(2);
        let ie = g.involution(&e).unwrap();
        assert_eq!(g.tau(&ie).unwrap(), Mask(3));
    }

    #[test]
    fn quotient_sizes() {
        let r = Arc::new(rs("D4"));
        let g = Grading::extra_special(r.clone()).unwrap();
        // #W^0 = number of long roots
        assert_eq!(enumerate_quotient(&r, &g.pi0()).len(), r.num_long_roots());
        assert_eq!(length_distribution(&r, &[]).iter().sum::<u64>(), 192);
        assert_eq!(parabolic_order(&r, &g.pi0()), 192 / 24);
        assert_eq!(parabolic_order(&r, &[]), 1);
        assert_eq!(quotient_size(&r, &g.pi0()), 24);
        assert_eq!(quotient_size(&rs("E8"), &[]), 696_729_600);
    }
}
