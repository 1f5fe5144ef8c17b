//! Finite posets of roots, their lower/upper ideals and antichains.
//!
//! Subsets are [`Mask`]s over the poset's own element indices; elements are
//! kept in canonical root order, which is a linear extension.

use crate::bits::Mask;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::poly::Poly;
use crate::rootsys::{format_coords, RootSystem};

#[derive(Clone, Debug)]
pub struct Poset {
    // canonical positive-root index of each element
    roots: Vec<usize>,
    // lower covers of each element
    covers: Vec<Mask>,
    // strict down-set of each element
    below: Vec<Mask>,
    above: Vec<Mask>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
}

impl Poset {
    fn from_covers(roots: Vec<usize>, covers: Vec<Mask>) -> Poset {
        let m = roots.len();
        let mut below = vec![Mask::EMPTY; m];
        for j in 0..m {
            let mut b = Mask::EMPTY;
            for c in covers[j].iter() {
                debug_assert!(c < j, "covers must respect the linear extension");
                b = b.union(below[c]).with(c);
            }
            below[j] = b;
        }
        let mut above = vec![Mask::EMPTY; m];
        for j in 0..m {
            for i in below[j].iter() {
                above[i].insert(j);
            }
        }
        Poset { roots, covers, below, above }
    }

    /// `(Delta^+, ≼)`: `gamma` covers `mu` iff `gamma - mu` is simple.
    pub fn root_poset(rs: &RootSystem) -> Poset {
        let np = rs.num_positive();
        let roots: Vec<usize> = (0..np).collect();
        let covers = (0..np)
            .map(|j| {
                let mut c = Mask::EMPTY;
                for s in 0..rs.rank() {
                    let mut v = rs.root(j).coords.clone();
                    v[s] -= 1;
                    if let Some(i) = rs.index_of(&v) {
                        c.insert(i);
                    }
                }
                c
            })
            .collect();
        Poset::from_covers(roots, covers)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn full(&self) -> Mask {
        Mask::full(self.len())
    }

    /// Canonical root index of element `i`.
    pub fn root_of(&self, i: usize) -> usize {
        self.roots[i]
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn covers(&self, i: usize) -> Mask {
        self.covers[i]
    }

    /// `a ≼ b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.below[b].contains(a)
    }

    /// Translates a local subset to a subset of `Delta^+`.
    pub fn to_roots(&self, m: Mask) -> Mask {
        Mask::from_indices(m.iter().map(|i| self.roots[i]))
    }

    /// Translates a subset of `Delta^+` lying inside the poset to local indices.
    pub fn from_roots(&self, m: Mask) -> Result<Mask> {
        let mut out = Mask::EMPTY;
        for r in m.iter() {
            let i = self.roots.binary_search(&r).map_err(|_| {
                Error::Precondition(format!("root #{r} is not an element of the poset"))
            })?;
            out.insert(i);
        }
        Ok(out)
    }

    pub fn is_lower_ideal(&self, m: Mask) -> bool {
        m.iter().all(|i| self.below[i].is_subset(m))
    }

    pub fn is_upper_ideal(&self, m: Mask) -> bool {
        m.iter().all(|i| self.above[i].is_subset(m))
    }

    pub fn is_antichain(&self, m: Mask) -> bool {
        m.iter().all(|i| self.below[i].intersection(m).is_empty())
    }

    /// First violated cover `(lower, upper)` for a set that is not a lower ideal.
    pub fn lower_ideal_violation(&self, m: Mask) -> Option<(usize, usize)> {
        for i in m.iter() {
            for c in self.covers[i].iter() {
                if !m.contains(c) {
                    return Some((c, i));
                }
            }
        }
        None
    }

    pub fn max_elements(&self, m: Mask) -> Mask {
        Mask::from_indices(m.iter().filter(|&i| self.above[i].intersection(m).is_empty()))
    }

    pub fn min_elements(&self, m: Mask) -> Mask {
        Mask::from_indices(m.iter().filter(|&i| self.below[i].intersection(m).is_empty()))
    }

    /// Lower (resp. upper) ideal generated by an antichain.
    pub fn ideal_from_antichain(&self, a: Mask, dir: Direction) -> Result<Mask> {
        if !self.is_antichain(a) {
            return Err(Error::NotAnAntichain(format!("{a:?}")));
        }
        Ok(a.iter().fold(a, |acc, i| match dir {
            Direction::Lower => acc.union(self.below[i]),
            Direction::Upper => acc.union(self.above[i]),
        }))
    }

    pub fn complement(&self, m: Mask) -> Mask {
        self.full().difference(m)
    }

    /// All lower ideals, ascending as 128-bit integers.
    pub fn enumerate_lower_ideals(&self) -> Vec<Mask> {
        let mut out = Vec::new();
        self.dfs(0, Mask::EMPTY, &mut |m| out.push(m));
        out.sort();
        out
    }

    pub fn count_lower_ideals(&self) -> u64 {
        let mut n = 0u64;
        self.dfs(0, Mask::EMPTY, &mut |_| n += 1);
        n
    }

    // Decide elements in linear-extension order; an element may join only if
    // all its lower covers already did, so every leaf is a distinct ideal.
    fn dfs(&self, k: usize, cur: Mask, emit: &mut dyn FnMut(Mask)) {
        if k == self.len() {
            emit(cur);
            return;
        }
        self.dfs(k + 1, cur, emit);
        if self.covers[k].is_subset(cur) {
            self.dfs(k + 1, cur.with(k), emit);
        }
    }

    /// Rank-generating function `sum_I t^{#I}` over lower ideals.
    pub fn m_polynomial(&self) -> Poly {
        let mut counts = vec![0i128; self.len() + 1];
        self.dfs(0, Mask::EMPTY, &mut |m| counts[m.len()] += 1);
        Poly::new(counts)
    }

    /// `I* = w(P \ I)`, where `action` is the permutation of the elements
    /// induced by the longest element of `W(0)`.
    pub fn dual_ideal(&self, ideal: Mask, action: &[usize]) -> Result<Mask> {
        if !self.is_lower_ideal(ideal) {
            return Err(Error::NotAnIdeal(format!("{ideal:?}")));
        }
        if action.len() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), got: action.len() });
        }
        let dual = Mask::from_indices(self.complement(ideal).iter().map(|i| action[i]));
        if !self.is_lower_ideal(dual) {
            return Err(Error::Invariant("dual of a lower ideal is not a lower ideal".into()));
        }
        Ok(dual)
    }
}

/// The weight poset `(Delta(i), ≼)` of a grading.
#[derive(Clone, Debug)]
pub struct WeightPoset {
    pub level: i32,
    poset: Poset,
}

impl WeightPoset {
    /// Builds `Delta(i)` with covers `gamma - gamma' in Pi(0)` and checks that
    /// their transitive closure agrees with the arithmetic order (difference a
    /// nonnegative combination of `Pi(0)`).
    pub fn new(g: &Grading, level: i32) -> Result<WeightPoset> {
        if level < 1 {
            return Err(Error::Precondition(format!("weight posets need level >= 1, got {level}")));
        }
        if g.slice(level).is_empty() {
            return Err(Error::EmptySlice(level));
        }
        WeightPoset::possibly_empty(g, level)
    }

    /// Same as [`WeightPoset::new`] but an empty slice yields the empty poset.
    pub fn possibly_empty(g: &Grading, level: i32) -> Result<WeightPoset> {
        if level < 1 {
            return Err(Error::Precondition(format!("weight posets need level >= 1, got {level}")));
        }
        let slice = g.slice(level);
        let rs = g.root_system();
        let pi0 = g.pi0();
        let roots: Vec<usize> = slice.iter().collect();
        let covers: Vec<Mask> = roots
            .iter()
            .map(|&r| {
                let mut c = Mask::EMPTY;
                for &s in &pi0 {
                    let mut v = rs.root(r).coords.clone();
                    v[s] -= 1;
                    if let Some(j) = rs.index_of(&v) {
                        let local = roots.binary_search(&j).expect("same level");
                        c.insert(local);
                    }
                }
                c
            })
            .collect();
        let poset = Poset::from_covers(roots, covers);

        for a in 0..poset.len() {
            for b in 0..poset.len() {
                let ca = &rs.root(poset.roots[a]).coords;
                let cb = &rs.root(poset.roots[b]).coords;
                let arithmetic = (0..rs.rank()).all(|i| {
                    let d = cb[i] - ca[i];
                    d >= 0 && (d == 0 || pi0.contains(&i))
                });
                if arithmetic != poset.leq(a, b) {
                    return Err(Error::Invariant(format!(
                        "order mismatch between {} and {}",
                        format_coords(ca),
                        format_coords(cb)
                    )));
                }
            }
        }
        Ok(WeightPoset { level, poset })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }
}

impl std::ops::Deref for WeightPoset {
    type Target = Poset;
    fn deref(&self) -> &Poset {
        &self.poset
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::GradingSpec;

    fn wp(spec: &str, level: i32) -> WeightPoset {
        let g = spec.parse::<GradingSpec>().unwrap().build().unwrap();
        WeightPoset::new(&g, level).unwrap()
    }

    #[test]
    fn chains() {
        let p = wp("A2:1,0", 1);
        assert_eq!(p.len(), 2);
        assert!(p.leq(0, 1) && !p.leq(1, 0));
        let p = wp("B2:0,1", 1);
        assert!(p.leq(0, 1));
        let p = wp("B2:0,1", 2);
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn empty_slice_rejected() {
        let g = "A2:1,0".parse::<GradingSpec>().unwrap().build().unwrap();
        assert!(matches!(WeightPoset::new(&g, 2), Err(Error::EmptySlice(2))));
        assert!(WeightPoset::new(&g, 0).is_err());
    }

    #[test]
    fn ideals_of_chain() {
        let p = wp("A2:1,0", 1);
        let ideals = p.enumerate_lower_ideals();
        assert_eq!(ideals, vec![Mask(0), Mask(1), Mask(3)]);
        assert_eq!(p.count_lower_ideals(), 3);
        assert_eq!(p.m_polynomial(), Poly::new(vec![1, 1, 1]));
        assert_eq!(wp("B2:0,1", 1).m_polynomial(), Poly::new(vec![1, 1, 1]));
    }

    #[test]
    fn antichain_poset() {
        // A3 with both end nodes marked: Delta(1) = {a1, a3, a1+a2, a2+a3}, two chains
        let p = wp("A3:1,0,1", 1);
        assert_eq!(p.len(), 4);
        assert_eq!(p.count_lower_ideals(), 9);
        // height grading on A3: Delta(1) = Pi, an antichain of 3
        let p = wp("A3:1,1,1", 1);
        assert_eq!(p.count_lower_ideals(), 8);
    }

    #[test]
    fn max_min_and_inverse() {
        let p = wp("A2:1,0", 1);
        assert_eq!(p.max_elements(Mask(3)), Mask(2));
        assert_eq!(p.max_elements(Mask::EMPTY), Mask::EMPTY);
        assert_eq!(p.min_elements(Mask(2)), Mask(2));
        assert_eq!(p.ideal_from_antichain(Mask(2), Direction::Lower).unwrap(), Mask(3));
        assert!(p.ideal_from_antichain(Mask(3), Direction::Lower).is_err());
        assert_eq!(p.lower_ideal_violation(Mask(2)), Some((0, 1)));
    }

    #[test]
    fn root_poset_catalan() {
        let rs = RootSystem::build("A3".parse().unwrap());
        assert_eq!(Poset::root_poset(&rs).count_lower_ideals(), 14);
        let rs = RootSystem::build("B3".parse().unwrap());
        assert_eq!(Poset::root_poset(&rs).count_lower_ideals(), 20);
    }
}
