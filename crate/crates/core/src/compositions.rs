//! Strong integer compositions, the subset bijection, the three
//! involutions, refinement, the Boolean-lattice Möbius function, and the
//! scalar statistics that appear as change-of-basis coefficients.
//!
//! Compositions of `n` are kept in a fixed canonical order throughout the
//! crate: ascending binary encoding of the partial-sum subset, where bit
//! `j-1` of the code is set exactly when `j` lies in the subset. Under
//! this order the complement involution is the code map
//! `k -> 2^(n-1)-1-k`, which makes its permutation matrix exactly
//! antidiagonal.

use std::fmt;

use num::{One, Zero};

use crate::rational::{binomial, factorial, rat, sign, Rat};
use crate::{Error, Result};

/// A strong integer composition: a finite sequence of positive integers.
/// The empty sequence is the unique composition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Build a composition, rejecting zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(p) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::InvalidPart(format!(
                "part {p} in {:?} (parts must be >= 1)",
                parts
            )));
        }
        Ok(Composition { parts })
    }

    /// The empty composition of 0.
    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    /// The one-part composition `(n)` for `n >= 1`.
    pub fn single(n: u32) -> Self {
        assert!(n >= 1, "single part must be positive");
        Composition { parts: vec![n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|alpha|`, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `l(alpha)`, the number of parts. The empty composition has length 0.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Last part; `None` for the empty composition.
    pub fn last_part(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// The partial-sum subset `set(alpha)` of `[n-1]`.
    pub fn to_subset(&self) -> SubsetOfRange {
        let n = self.size();
        let mut members = Vec::with_capacity(self.parts.len().saturating_sub(1));
        let mut acc = 0u32;
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            members.push(acc);
        }
        SubsetOfRange { n, members }
    }

    /// Parts in reverse order.
    pub fn reverse(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Complement: the composition whose subset is the complement of this
    /// one's inside `[n-1]`. The complement of the empty composition is
    /// itself.
    pub fn complement(&self) -> Composition {
        self.to_subset().complement().to_composition()
    }

    /// Transpose: complement of the reverse (equivalently reverse of the
    /// complement).
    pub fn transpose(&self) -> Composition {
        self.reverse().complement()
    }

    /// Apply one of the three involutions by kind.
    pub fn involution(&self, kind: IndexInvolution) -> Composition {
        match kind {
            IndexInvolution::Reverse => self.reverse(),
            IndexInvolution::Complement => self.complement(),
            IndexInvolution::Transpose => self.transpose(),
        }
    }

    /// Concatenation `alpha . beta`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Near-concatenation: concatenate with the last part of `self` fused
    /// onto the first part of `other`. Requires both nonempty.
    pub fn fuse(&self, other: &Composition) -> Composition {
        assert!(!self.is_empty() && !other.is_empty(), "fuse needs nonempty operands");
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Composition { parts }
    }

    /// If `self` refines `coarser` (consecutive parts of `self` group to
    /// give the parts of `coarser`), return the blocks, one per part of
    /// `coarser`. Returns `None` when sizes differ or refinement fails.
    pub fn refines(&self, coarser: &Composition) -> Option<Vec<Composition>> {
        if self.size() != coarser.size() {
            return None;
        }
        let mut blocks = Vec::with_capacity(coarser.len());
        let mut i = 0usize;
        for &target in &coarser.parts {
            let mut acc = 0u32;
            let start = i;
            while acc < target && i < self.parts.len() {
                acc += self.parts[i];
                i += 1;
            }
            if acc != target {
                return None;
            }
            blocks.push(Composition {
                parts: self.parts[start..i].to_vec(),
            });
        }
        debug_assert_eq!(i, self.parts.len());
        Some(blocks)
    }

    /// `sort(alpha)` together with `z_alpha`, the centralizer-size
    /// coefficient computed from the part multiplicities.
    pub fn sort_and_z(&self) -> (Partition, Rat) {
        let p = self.sort();
        let z = p.z();
        (p, z)
    }

    /// Parts rewritten in weakly decreasing order.
    pub fn sort(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(Composition { parts })
    }

    /// A scalar statistic of a nonempty composition.
    pub fn stat(&self, kind: Stat) -> Result<Rat> {
        if self.is_empty() {
            return Err(Error::EmptyComposition(format!("{kind:?}")));
        }
        Ok(match kind {
            Stat::LastPart => rat(i64::from(*self.parts.last().unwrap())),
            Stat::Product => self
                .parts
                .iter()
                .fold(Rat::one(), |acc, &p| acc * rat(i64::from(p))),
            Stat::PartialSumsProduct => {
                let mut acc = Rat::one();
                let mut sum = 0i64;
                for &p in &self.parts {
                    sum += i64::from(p);
                    acc *= rat(sum);
                }
                acc
            }
            Stat::SpecialProduct => {
                let fact = Rat::from_integer(factorial(self.parts.len() as u64));
                fact * self.stat(Stat::Product)?
            }
        })
    }

    /// A refined statistic: the product over the blocks of `self` with
    /// respect to `coarser` of a per-block quantity. Errors when `self`
    /// does not refine `coarser`.
    pub fn refined_stat(&self, coarser: &Composition, kind: RefinedStat) -> Result<Rat> {
        let blocks = self.refines(coarser).ok_or_else(|| Error::NotARefinement {
            finer: self.to_string(),
            coarser: coarser.to_string(),
            course: None,
        })?;
        Ok(refined_stat_on_blocks(&blocks, kind))
    }

    /// Position of this composition in the canonical order of
    /// `enumerate_compositions(self.size())`: the binary encoding of its
    /// subset.
    pub fn canonical_index(&self) -> usize {
        let mut code = 0usize;
        let mut acc = 0u32;
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            code |= 1usize << (acc - 1);
        }
        code
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// The three index involutions on compositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexInvolution {
    Reverse,
    Complement,
    Transpose,
}

/// Scalar statistics of a single composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stat {
    /// The last part.
    LastPart,
    /// The product of the parts.
    Product,
    /// The product of the partial sums.
    PartialSumsProduct,
    /// `l(alpha)!` times the product of the parts.
    SpecialProduct,
}

/// Per-block statistics of a refinement, multiplied over the blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefinedStat {
    /// Product of the last parts of the blocks.
    LastParts,
    /// Product of the first parts of the blocks. Equals
    /// `LastParts` of the reversed refinement.
    FirstParts,
    /// Product of the block lengths.
    Lengths,
    /// Product of the partial-sums products of the blocks.
    PartialSumsProducts,
    /// Product of the special products of the blocks.
    SpecialProducts,
    /// Product of the factorials of the block lengths.
    LengthFactorials,
}

/// A per-block statistic evaluated on the reversed refinement: the
/// blocks reverse individually and their order reverses.
pub(crate) fn reversed_stat_on_blocks(blocks: &[Composition], kind: RefinedStat) -> Rat {
    let reversed: Vec<Composition> = blocks.iter().rev().map(|b| b.reverse()).collect();
    refined_stat_on_blocks(&reversed, kind)
}

pub(crate) fn refined_stat_on_blocks(blocks: &[Composition], kind: RefinedStat) -> Rat {
    let mut acc = Rat::one();
    for b in blocks {
        let factor = match kind {
            RefinedStat::LastParts => rat(i64::from(*b.parts.last().expect("nonempty block"))),
            RefinedStat::FirstParts => rat(i64::from(b.parts[0])),
            RefinedStat::Lengths => rat(b.len() as i64),
            RefinedStat::PartialSumsProducts => b.stat(Stat::PartialSumsProduct).unwrap(),
            RefinedStat::SpecialProducts => b.stat(Stat::SpecialProduct).unwrap(),
            RefinedStat::LengthFactorials => Rat::from_integer(factorial(b.len() as u64)),
        };
        acc *= factor;
    }
    acc
}

/// A subset of `{1, .., n-1}` with its ambient `n` remembered, in
/// bijection with the compositions of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetOfRange {
    n: u32,
    members: Vec<u32>, // strictly increasing, all in [1, n-1]
}

impl SubsetOfRange {
    /// Build a subset of `[n-1]`, rejecting out-of-range or duplicate
    /// members.
    pub fn new(n: u32, mut members: Vec<u32>) -> Result<Self> {
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::SubsetOutOfRange {
                    member: i64::from(w[0]),
                    n,
                });
            }
        }
        for &m in &members {
            if m == 0 || m >= n {
                return Err(Error::SubsetOutOfRange {
                    member: i64::from(m),
                    n,
                });
            }
        }
        Ok(SubsetOfRange { n, members })
    }

    pub fn ambient(&self) -> u32 {
        self.n
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// True when every member of `self` lies in `other` (same ambient).
    pub fn is_subset_of(&self, other: &SubsetOfRange) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Complement inside `[n-1]`.
    pub fn complement(&self) -> SubsetOfRange {
        let members = (1..self.n).filter(|m| !self.contains(*m)).collect();
        SubsetOfRange { n: self.n, members }
    }

    /// Union with another subset of the same ambient range.
    pub fn union(&self, other: &SubsetOfRange) -> Result<SubsetOfRange> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut members: Vec<u32> = self.members.clone();
        members.extend(other.members.iter().copied());
        members.sort_unstable();
        members.dedup();
        Ok(SubsetOfRange { n: self.n, members })
    }

    /// The inverse of the partial-sum bijection.
    pub fn to_composition(&self) -> Composition {
        if self.n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::with_capacity(self.members.len() + 1);
        let mut prev = 0u32;
        for &m in &self.members {
            parts.push(m - prev);
            prev = m;
        }
        parts.push(self.n - prev);
        Composition { parts }
    }
}

impl fmt::Display for SubsetOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}|n={}", self.n)
    }
}

/// An integer partition: a composition with weakly decreasing parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Composition);

impl Partition {
    /// Build a partition, rejecting zero parts or out-of-order parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let comp = Composition::new(parts)?;
        if comp.parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPart(format!(
                "{comp} is not weakly decreasing"
            )));
        }
        Ok(Partition(comp))
    }

    pub fn empty() -> Self {
        Partition(Composition::empty())
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn size(&self) -> u32 {
        self.0.size()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.parts.iter().filter(|&&p| p == i).count()
    }

    /// `z_lambda`: the product over part sizes `i` of `i^(m_i) * m_i!`.
    pub fn z(&self) -> Rat {
        let mut z = Rat::one();
        let mut i = 0;
        let parts = &self.0.parts;
        while i < parts.len() {
            let v = parts[i];
            let mut mult = 0u64;
            while i < parts.len() && parts[i] == v {
                mult += 1;
                i += 1;
            }
            for _ in 0..mult {
                z *= rat(i64::from(v));
            }
            z *= Rat::from_integer(factorial(mult));
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All strong compositions of `n` in the canonical order: ascending
/// binary encoding of `set(alpha)`, bit `j-1` set exactly when `j` is in
/// the subset. For `n = 0` this is the single empty composition.
pub fn enumerate_compositions(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let count = 1usize << (n - 1);
    let mut out = Vec::with_capacity(count);
    for code in 0..count {
        out.push(composition_from_code(n, code));
    }
    out
}

/// The composition of `n` whose subset has binary code `code`.
pub fn composition_from_code(n: u32, code: usize) -> Composition {
    debug_assert!(n >= 1 && code < (1usize << (n - 1)));
    let mut parts = Vec::new();
    let mut prev = 0u32;
    for j in 1..n {
        if code & (1usize << (j - 1)) != 0 {
            parts.push(j - prev);
            prev = j;
        }
    }
    parts.push(n - prev);
    Composition { parts }
}

/// All partitions of `n`, in descending lexicographic order starting at
/// `(n)` and ending at `(1^n)`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(Composition {
                parts: prefix.clone(),
            }));
            return;
        }
        let mut p = max.min(remaining);
        while p >= 1 {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All refinements `beta` of `alpha` together with the blocks of `beta`
/// with respect to `alpha`.
pub fn refinements_with_blocks(alpha: &Composition) -> Vec<(Composition, Vec<Composition>)> {
    // A refinement chooses, independently for each part a_i, a
    // composition of a_i to serve as the i-th block.
    let mut acc: Vec<(Vec<u32>, Vec<Composition>)> = vec![(Vec::new(), Vec::new())];
    for &p in alpha.parts() {
        let choices = enumerate_compositions(p);
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for (parts, blocks) in &acc {
            for c in &choices {
                let mut parts2 = parts.clone();
                parts2.extend_from_slice(c.parts());
                let mut blocks2 = blocks.clone();
                blocks2.push(c.clone());
                next.push((parts2, blocks2));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(parts, blocks)| (Composition { parts }, blocks))
        .collect()
}

/// All coarsenings `beta` of `alpha` together with the blocks of `alpha`
/// with respect to `beta`.
pub fn coarsenings_with_blocks(alpha: &Composition) -> Vec<(Composition, Vec<Composition>)> {
    let k = alpha.len();
    if k == 0 {
        return vec![(Composition::empty(), Vec::new())];
    }
    // Choose which of the k-1 internal boundaries of alpha survive.
    let mut out = Vec::with_capacity(1usize << (k - 1));
    for mask in 0..(1usize << (k - 1)) {
        let mut blocks = Vec::new();
        let mut current = Vec::new();
        for (i, &p) in alpha.parts().iter().enumerate() {
            current.push(p);
            let boundary_kept = i + 1 < k && mask & (1usize << i) != 0;
            if boundary_kept || i + 1 == k {
                blocks.push(Composition {
                    parts: std::mem::take(&mut current),
                });
            }
        }
        let coarser = Composition {
            parts: blocks.iter().map(|b| b.size()).collect(),
        };
        out.push((coarser, blocks));
    }
    out
}

/// Boolean-lattice Möbius value of the interval `[t, s]`:
/// `(-1)^(|s|-|t|)` when `t` is a subset of `s`, and 0 otherwise.
/// Errors when the ambient sizes differ.
pub fn mobius(s: &SubsetOfRange, t: &SubsetOfRange) -> Result<Rat> {
    if s.ambient() != t.ambient() {
        return Err(Error::AmbientMismatch {
            left: s.ambient(),
            right: t.ambient(),
        });
    }
    if !t.is_subset_of(s) {
        return Ok(Rat::zero());
    }
    Ok(sign(s.cardinality() as i64 - t.cardinality() as i64))
}

/// The exact partial sum `sum_k C(n,k)/C(n+c,k+c)` for `k = 0..n`.
/// Equals `(n+c+1)/(c+1)`.
pub fn binomial_partial_sum(n: u32, c: u32) -> Rat {
    let mut acc = Rat::zero();
    for k in 0..=n {
        let num = binomial(u64::from(n), u64::from(k));
        let den = binomial(u64::from(n + c), u64::from(k + c));
        acc += Rat::new(num, den);
    }
    acc
}
