//! Z-gradings of a root system induced by nonnegative integer marks on the
//! simple roots: `level(gamma) = sum_i [gamma : alpha_i] * marks[i]`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::bits::Mask;
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem};

#[derive(Clone, Debug)]
pub struct Grading {
    rs: Arc<RootSystem>,
    marks: Vec<i32>,
    levels: Vec<i32>,
    max_level: i32,
    // slices[k] = Delta(k) for k >= 1, slices[0] = Delta(0)^+
    slices: Vec<Mask>,
}

impl Grading {
    pub fn new(rs: Arc<RootSystem>, marks: Vec<i32>) -> Result<Grading> {
        let n = rs.rank();
        if marks.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: marks.len() });
        }
        if let Some(i) = marks.iter().position(|&m| m < 0) {
            return Err(Error::InvalidGrading(format!(
                "mark of alpha_{} is negative ({})",
                i + 1,
                marks[i]
            )));
        }
        if marks.iter().all(|&m| m == 0) {
            return Err(Error::InvalidGrading("all marks are zero (trivial grading)".into()));
        }
        let levels: Vec<i32> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coords.iter().zip(&marks).map(|(c, m)| c * m).sum())
            .collect();
        let max_level = levels.iter().copied().max().unwrap_or(0);
        let mut slices = vec![Mask::EMPTY; max_level as usize + 1];
        for (k, &l) in levels.iter().enumerate() {
            slices[l as usize].insert(k);
        }
        Ok(Grading { rs, marks, levels, max_level, slices })
    }

    /// The grading defined by `theta^vee`: `level(gamma) = (gamma, theta^vee)`.
    pub fn extra_special(rs: Arc<RootSystem>) -> Result<Grading> {
        let theta = rs.theta().coords.clone();
        let n = rs.rank();
        let marks: Vec<i32> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                rs.pairing(&e, &theta)
            })
            .collect();
        let theta_idx = rs.theta_index();
        let g = Grading::new(rs, marks)?;
        if g.slice(2) != Mask::singleton(theta_idx) || g.max_level != 2 {
            return Err(Error::Invariant(
                "extra-special grading must have Delta(2) = {theta}".into(),
            ));
        }
        Ok(g)
    }

    /// Standard grading with mark 1 on the listed (0-based) simple roots.
    pub fn standard(rs: Arc<RootSystem>, ones: &[usize]) -> Result<Grading> {
        let n = rs.rank();
        let mut marks = vec![0; n];
        for &i in ones {
            if i >= n {
                return Err(Error::InvalidGrading(format!("simple root index {} out of range", i + 1)));
            }
            marks[i] = 1;
        }
        Grading::new(rs, marks)
    }

    /// All `2^n - 1` standard gradings.
    pub fn all_standard(rs: &Arc<RootSystem>) -> Vec<Grading> {
        let n = rs.rank();
        (1u32..(1 << n))
            .map(|bits| {
                let marks = (0..n).map(|i| ((bits >> i) & 1) as i32).collect();
                Grading::new(rs.clone(), marks).expect("nonzero standard marks")
            })
            .collect()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn marks(&self) -> &[i32] {
        &self.marks
    }

    pub fn max_level(&self) -> i32 {
        self.max_level
    }

    /// Level of the positive root with index `k`.
    pub fn level(&self, k: usize) -> i32 {
        self.levels[k]
    }

    /// Level of an arbitrary vector in simple-root coordinates.
    pub fn level_of(&self, coords: &[i32]) -> i32 {
        coords.iter().zip(&self.marks).map(|(c, m)| c * m).sum()
    }

    /// `Delta(i)` for `i >= 1`, `Delta(0)^+` for `i = 0`, empty beyond the top.
    pub fn slice(&self, i: i32) -> Mask {
        if i < 0 || i > self.max_level {
            return Mask::EMPTY;
        }
        self.slices[i as usize]
    }

    pub fn delta0_positive(&self) -> Mask {
        self.slice(0)
    }

    /// `Delta(>= k)` for `k >= 1`.
    pub fn delta_ge(&self, k: i32) -> Mask {
        (k.max(1)..=self.max_level).fold(Mask::EMPTY, |m, i| m.union(self.slice(i)))
    }

    /// Simple-root indices with mark 0.
    pub fn pi0(&self) -> Vec<usize> {
        self.pi(0)
    }

    /// `Pi(i)`: simple-root indices with mark `i`.
    pub fn pi(&self, i: i32) -> Vec<usize> {
        (0..self.marks.len()).filter(|&k| self.marks[k] == i).collect()
    }

    pub fn is_standard(&self) -> bool {
        self.marks.iter().all(|&m| m == 0 || m == 1)
    }

    /// `Some(alpha~)` when the grading is 1-standard.
    pub fn one_standard_node(&self) -> Option<usize> {
        if !self.is_standard() {
            return None;
        }
        let ones = self.pi(1);
        (ones.len() == 1).then(|| ones[0])
    }

    pub fn is_abelian(&self) -> bool {
        self.max_level == 1
    }

    pub fn is_extra_special(&self) -> bool {
        self.max_level == 2 && self.slice(2).len() == 1
    }

    /// Connected components of the Hasse diagram on `Delta(>= 1)` after
    /// deleting every edge whose type lies in `Pi(1)`. Each component has a
    /// unique lowest weight; in `Delta(1)` that is a simple root of `Pi(1)`.
    pub fn simple_components(&self) -> Result<Vec<Component>> {
        if !self.is_standard() {
            return Err(Error::InvalidGrading(
                "simple components are defined for standard gradings only".into(),
            ));
        }
        let rs = &*self.rs;
        let pi0 = self.pi0();
        let mut out = Vec::new();
        for level in 1..=self.max_level {
            let members: Vec<usize> = self.slice(level).iter().collect();
            let mut parent: Vec<usize> = (0..members.len()).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while p[r] != r {
                    r = p[r];
                }
                let mut c = x;
                while p[c] != r {
                    let nx = p[c];
                    p[c] = r;
                    c = nx;
                }
                r
            }
            for (a, &ia) in members.iter().enumerate() {
                for &s in &pi0 {
                    if let Some(sum) = rs.sum_index(ia, s) {
                        if let Some(b) = members.iter().position(|&x| x == sum) {
                            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                            if ra != rb {
                                parent[ra.max(rb)] = ra.min(rb);
                            }
                        }
                    }
                }
            }
            let mut groups: Vec<(usize, Mask)> = Vec::new();
            for a in 0..members.len() {
                let r = find(&mut parent, a);
                match groups.iter_mut().find(|(root, _)| *root == r) {
                    Some((_, m)) => m.insert(members[a]),
                    None => groups.push((r, Mask::singleton(members[a]))),
                }
            }
            for (_, m) in groups {
                // lowest weight: the unique element with nothing below it by a Pi(0) step
                let lows: Vec<usize> = m
                    .iter()
                    .filter(|&k| {
                        !pi0.iter().any(|&s| {
                            let mut c = rs.root(k).coords.clone();
                            c[s] -= 1;
                            rs.index_of(&c).is_some_and(|j| m.contains(j))
                        })
                    })
                    .collect();
                if lows.len() != 1 {
                    return Err(Error::Invariant(format!(
                        "component at level {level} has {} lowest weights",
                        lows.len()
                    )));
                }
                out.push(Component { level, members: m, lowest: lows[0] });
            }
        }
        out.sort_by_key(|c| (c.level, c.lowest));
        Ok(out)
    }
}

/// A connected piece of some `Delta(i)`, `i >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub level: i32,
    pub members: Mask,
    pub lowest: usize,
}

/// Parsed form of `<TYPE><rank>:<marks>`, `<TYPE><rank>:es`, or
/// `<TYPE><rank>:std=i1,i2,…` (1-based Bourbaki indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingSpec {
    pub raw: String,
    pub cartan_type: CartanType,
    pub marks: Vec<i32>,
}

impl GradingSpec {
    pub fn build(&self) -> Result<Grading> {
        Grading::new(Arc::new(RootSystem::build(self.cartan_type)), self.marks.clone())
    }

    pub fn build_with(&self, rs: Arc<RootSystem>) -> Result<Grading> {
        if rs.cartan_type() != self.cartan_type {
            return Err(Error::Precondition("root system does not match grading spec".into()));
        }
        Grading::new(rs, self.marks.clone())
    }

    pub fn of(g: &Grading) -> GradingSpec {
        let cartan_type = g.root_system().cartan_type();
        let marks = g.marks().to_vec();
        let raw = format_spec(cartan_type, &marks);
        GradingSpec { raw, cartan_type, marks }
    }
}

fn format_spec(ct: CartanType, marks: &[i32]) -> String {
    let m: Vec<String> = marks.iter().map(|m| m.to_string()).collect();
    format!("{}:{}", ct, m.join(","))
}

impl fmt::Display for GradingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_spec(self.cartan_type, &self.marks))
    }
}

impl FromStr for GradingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = s.trim().to_string();
        let bad = |why: &str| Error::Parse(raw.clone(), why.to_string());
        let (ty, rest) = raw
            .split_once(':')
            .ok_or_else(|| bad("expected `<TYPE><rank>:<marks>`"))?;
        let cartan_type: CartanType = ty.parse()?;
        let n = cartan_type.rank();
        let rest = rest.trim();
        let marks = if rest.eq_ignore_ascii_case("es") {
            let rs = Arc::new(RootSystem::build(cartan_type));
            Grading::extra_special(rs)?.marks().to_vec()
        } else if let Some(list) = rest.strip_prefix("std=") {
            let mut marks = vec![0; n];
            for t in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let i: usize = t.parse().map_err(|_| bad("bad node index"))?;
                if i == 0 || i > n {
                    return Err(bad("node index out of range"));
                }
                marks[i - 1] = 1;
            }
            marks
        } else {
            let marks: Vec<i32> = rest
                .split(',')
                .map(|t| t.trim().parse::<i32>().map_err(|_| bad("marks must be integers")))
                .collect::<Result<_>>()?;
            if marks.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: marks.len() });
            }
            marks
        };
        if marks.iter().any(|&m| m < 0) {
            return Err(Error::InvalidGrading("negative mark".into()));
        }
        if marks.iter().all(|&m| m == 0) {
            return Err(Error::InvalidGrading("all marks are zero (trivial grading)".into()));
        }
        Ok(GradingSpec { raw, cartan_type, marks })
    }
}
