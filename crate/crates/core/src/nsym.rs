//! Abstract elements of the noncommutative side: composition-indexed
//! coefficient vectors over five bases, with products, the three
//! involutions, and exact change of basis.
//!
//! Change of basis uses a direct formula for every pair that has one
//! (all pairs among ribbon / complete / elementary, and each power-sum
//! kind against those three); the remaining pairs compose through the
//! complete basis. The ribbon basis is the canonical home of the
//! involutions.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num::{One, Zero};

use crate::compositions::{
    coarsenings_with_blocks, enumerate_compositions, refined_stat_on_blocks,
    refinements_with_blocks, reversed_stat_on_blocks, Composition, IndexInvolution, RefinedStat,
    Stat,
};
use crate::notation::fmt_terms;
use crate::rational::{binomial, rat, sign, Rat};
use crate::report::Report;
use crate::{Error, Result};

/// The five bases carried by [`NSymElem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NSymBasis {
    Ribbon,
    Complete,
    Elementary,
    PowerSumFirst,
    PowerSumSecond,
}

impl NSymBasis {
    pub const ALL: [NSymBasis; 5] = [
        NSymBasis::Ribbon,
        NSymBasis::Complete,
        NSymBasis::Elementary,
        NSymBasis::PowerSumFirst,
        NSymBasis::PowerSumSecond,
    ];

    /// The tag used in the element notation.
    pub fn tag(&self) -> &'static str {
        match self {
            NSymBasis::Ribbon => "r",
            NSymBasis::Complete => "h",
            NSymBasis::Elementary => "e",
            NSymBasis::PowerSumFirst => "psi",
            NSymBasis::PowerSumSecond => "phi",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        Ok(match tag {
            "r" => NSymBasis::Ribbon,
            "h" => NSymBasis::Complete,
            "e" => NSymBasis::Elementary,
            "psi" => NSymBasis::PowerSumFirst,
            "phi" => NSymBasis::PowerSumSecond,
            _ => return Err(Error::UnknownBasis(tag.to_string())),
        })
    }
}

/// The three algebra(-anti)morphisms lifted from the index involutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involution {
    /// Anti-automorphism reversing ribbon indices.
    Rho,
    /// Automorphism complementing ribbon indices.
    Psi,
    /// Anti-automorphism transposing ribbon indices.
    Omega,
}

impl Involution {
    pub const ALL: [Involution; 3] = [Involution::Rho, Involution::Psi, Involution::Omega];

    pub fn index_map(&self) -> IndexInvolution {
        match self {
            Involution::Rho => IndexInvolution::Reverse,
            Involution::Psi => IndexInvolution::Complement,
            Involution::Omega => IndexInvolution::Transpose,
        }
    }
}

/// A homogeneous element: a finite composition-indexed coefficient
/// vector tagged with its basis. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSymElem {
    degree: u32,
    basis: NSymBasis,
    terms: BTreeMap<Composition, Rat>,
}

impl NSymElem {
    pub fn zero(degree: u32, basis: NSymBasis) -> Self {
        NSymElem {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector indexed by `alpha`.
    pub fn basis_vector(basis: NSymBasis, alpha: Composition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = alpha.size();
        terms.insert(alpha, Rat::one());
        NSymElem {
            degree,
            basis,
            terms,
        }
    }

    /// The unit element (degree 0) in the given basis.
    pub fn one(basis: NSymBasis) -> Self {
        Self::basis_vector(basis, Composition::empty())
    }

    /// The generator of degree `n` in a multiplicative basis: the
    /// single-part vector, or the unit for `n = 0`.
    pub fn generator(basis: NSymBasis, n: u32) -> Self {
        if n == 0 {
            Self::one(basis)
        } else {
            Self::basis_vector(basis, Composition::single(n))
        }
    }

    pub fn from_terms(
        degree: u32,
        basis: NSymBasis,
        terms: impl IntoIterator<Item = (Composition, Rat)>,
    ) -> Result<Self> {
        let mut out = NSymElem::zero(degree, basis);
        for (c, k) in terms {
            if c.size() != degree {
                return Err(Error::SizeMismatch {
                    left: c.size(),
                    right: degree,
                });
            }
            out.add_term(c, k);
        }
        Ok(out)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> NSymBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, alpha: &Composition) -> Rat {
        self.terms.get(alpha).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Composition, &Rat)> {
        self.terms.iter()
    }

    /// Terms in the canonical composition order.
    pub fn canonical_terms(&self) -> Vec<(Composition, Rat)> {
        let mut v: Vec<(Composition, Rat)> = self
            .terms
            .iter()
            .map(|(c, k)| (c.clone(), k.clone()))
            .collect();
        v.sort_by_key(|(c, _)| c.canonical_index());
        v
    }

    fn add_term(&mut self, alpha: Composition, coeff: Rat) {
        debug_assert_eq!(alpha.size(), self.degree);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Sum within one graded piece. Panics on degree mismatch, which is a
    /// programming error; mixed bases convert to the left basis.
    pub fn add(&self, other: &NSymElem) -> NSymElem {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let other = other.convert(self.basis);
        let mut out = self.clone();
        for (c, k) in other.terms {
            out.add_term(c, k);
        }
        out
    }

    pub fn sub(&self, other: &NSymElem) -> NSymElem {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, k: &Rat) -> NSymElem {
        if k.is_zero() {
            return NSymElem::zero(self.degree, self.basis);
        }
        NSymElem {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(c, v)| (c.clone(), v * k))
                .collect(),
        }
    }

    /// Exact expansion in the target basis.
    pub fn convert(&self, to: NSymBasis) -> NSymElem {
        if self.basis == to {
            return self.clone();
        }
        let mut out = NSymElem::zero(self.degree, to);
        for (alpha, k) in &self.terms {
            for (beta, c) in expand_vector(self.basis, alpha, to).iter() {
                out.add_term(beta.clone(), c * k);
            }
        }
        out
    }

    /// Product. Degrees add; the right factor converts to the left basis.
    /// In the ribbon basis the product of basis vectors is concatenation
    /// plus concatenation with the adjacent parts fused; in the four
    /// multiplicative bases it is concatenation alone.
    pub fn mul(&self, other: &NSymElem) -> NSymElem {
        let other = other.convert(self.basis);
        let mut out = NSymElem::zero(self.degree + other.degree, self.basis);
        for (a, ka) in &self.terms {
            for (b, kb) in &other.terms {
                let k = ka * kb;
                match self.basis {
                    NSymBasis::Ribbon => {
                        out.add_term(a.concat(b), k.clone());
                        if !a.is_empty() && !b.is_empty() {
                            out.add_term(a.fuse(b), k);
                        }
                    }
                    _ => out.add_term(a.concat(b), k),
                }
            }
        }
        out
    }

    /// Apply an involution: defined on the ribbon basis by the index
    /// involution, extended linearly, with the result expressed in the
    /// original basis.
    pub fn involution(&self, kind: Involution) -> NSymElem {
        let r = self.convert(NSymBasis::Ribbon);
        let mut out = NSymElem::zero(self.degree, NSymBasis::Ribbon);
        let map = kind.index_map();
        for (alpha, k) in &r.terms {
            out.add_term(alpha.involution(map), k.clone());
        }
        out.convert(self.basis)
    }
}

impl fmt::Display for NSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.basis.tag(), &self.canonical_terms())
    }
}

type Expansion = Rc<Vec<(Composition, Rat)>>;

thread_local! {
    static EXPANSION_CACHE: RefCell<HashMap<(NSymBasis, NSymBasis, Composition), Expansion>> =
        RefCell::new(HashMap::new());
}

/// Expansion of a single `from`-basis vector in the `to` basis,
/// memoized per thread: basis-vector expansions are pure combinatorial
/// data and recur constantly in dense conversions.
fn expand_vector(from: NSymBasis, alpha: &Composition, to: NSymBasis) -> Expansion {
    if from == to {
        return Rc::new(vec![(alpha.clone(), Rat::one())]);
    }
    let key = (from, to, alpha.clone());
    if let Some(hit) = EXPANSION_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let value = Rc::new(expand_vector_uncached(from, alpha, to));
    EXPANSION_CACHE.with(|c| c.borrow_mut().insert(key, value.clone()));
    value
}

fn expand_vector_uncached(
    from: NSymBasis,
    alpha: &Composition,
    to: NSymBasis,
) -> Vec<(Composition, Rat)> {
    use NSymBasis::*;
    match direct_expansion(from, alpha, to) {
        Some(v) => v,
        None => {
            // Compose through the complete basis, which has direct lines
            // to and from every other basis.
            let mut out: BTreeMap<Composition, Rat> = BTreeMap::new();
            for (beta, c) in direct_expansion(from, alpha, Complete).expect("line into complete") {
                for (gamma, d) in expand_vector(Complete, &beta, to).iter() {
                    let entry = out.entry(gamma.clone()).or_insert_with(Rat::zero);
                    *entry += c.clone() * d;
                }
            }
            out.retain(|_, v| !v.is_zero());
            out.into_iter().collect()
        }
    }
}

/// The directly coded change-of-basis lines. Returns `None` for the
/// pairs that have no direct line (ribbon into either power-sum kind,
/// and the two power-sum kinds into each other).
fn direct_expansion(
    from: NSymBasis,
    alpha: &Composition,
    to: NSymBasis,
) -> Option<Vec<(Composition, Rat)>> {
    use NSymBasis::*;
    let n = alpha.size() as i64;
    let la = alpha.len() as i64;
    let out = match (from, to) {
        // Complete and elementary expand in each other over refinements
        // with the sign (-1)^(n - l(beta)).
        (Complete, Elementary) | (Elementary, Complete) => refinements_with_blocks(alpha)
            .into_iter()
            .map(|(beta, _)| {
                let s = sign(n - beta.len() as i64);
                (beta, s)
            })
            .collect(),
        // A complete vector is the unsigned sum of ribbons over
        // coarsenings; a ribbon alternates over coarsenings of its index.
        (Complete, Ribbon) => coarsenings_with_blocks(alpha)
            .into_iter()
            .map(|(beta, _)| (beta, Rat::one()))
            .collect(),
        (Ribbon, Complete) => coarsenings_with_blocks(alpha)
            .into_iter()
            .map(|(beta, _)| {
                let s = sign(la - beta.len() as i64);
                (beta, s)
            })
            .collect(),
        // The elementary-to-ribbon pair goes through the complement.
        (Elementary, Ribbon) => coarsenings_with_blocks(alpha)
            .into_iter()
            .map(|(beta, _)| (beta.complement(), Rat::one()))
            .collect(),
        (Ribbon, Elementary) => {
            let ac = alpha.complement();
            let lac = ac.len() as i64;
            coarsenings_with_blocks(&ac)
                .into_iter()
                .map(|(beta, _)| {
                    let s = sign(lac - beta.len() as i64);
                    (beta, s)
                })
                .collect()
        }
        // Complete against the power sums, over refinements.
        (Complete, PowerSumFirst) => refinements_with_blocks(alpha)
            .into_iter()
            .map(|(beta, blocks)| {
                let piu = refined_stat_on_blocks(&blocks, RefinedStat::PartialSumsProducts);
                (beta, piu.recip())
            })
            .collect(),
        (PowerSumFirst, Complete) => refinements_with_blocks(alpha)
            .into_iter()
            .map(|(beta, blocks)| {
                let lp = refined_stat_on_blocks(&blocks, RefinedStat::LastParts);
                let s = sign(beta.len() as i64 - la);
                (beta, s * lp)
            })
            .collect(),
        (Complete, PowerSumSecond) => refinements_with_blocks(alpha)
            .into_iter()
            .map(|(beta, blocks)| {
                let sp = refined_stat_on_blocks(&blocks, RefinedStat::SpecialProducts);
                (beta, sp.recip())
            })
            .collect(),
        (PowerSumSecond, Complete) => {
            let prod = alpha.stat(Stat::Product).unwrap_or_else(|_| Rat::one());
            refinements_with_blocks(alpha)
                .into_iter()
                .map(|(beta, blocks)| {
                    let lens = refined_stat_on_blocks(&blocks, RefinedStat::Lengths);
                    let s = sign(beta.len() as i64 - la);
                    (beta, s * &prod / lens)
                })
                .collect()
        }
        // Elementary against the power sums: as above with the extra
        // sign (-1)^(n - l(beta)); for the first kind the statistic is
        // taken on the reversed refinement.
        (Elementary, PowerSumFirst) => refinements_with_blocks(alpha)
            .into_iter()
            .map(|(beta, blocks)| {
                let piu = reversed_stat_on_blocks(&blocks, RefinedStat::PartialSumsProducts);
                let s = sign(n - beta.len() as i64);
                (beta, s / piu)
            })
            .collect(),
        (PowerSumFirst, Elementary) => refinements_with_blocks(alpha)
            .into_iter()
            .map(|(beta, blocks)| {
                let lp = reversed_stat_on_blocks(&blocks, RefinedStat::LastParts);
                let s = sign(n - beta.len() as i64);
                (beta, s * lp)
            })
            .collect(),
        (Elementary, PowerSumSecond) => refinements_with_blocks(alpha)
            .into_iter()
            .map(|(beta, blocks)| {
                let sp = refined_stat_on_blocks(&blocks, RefinedStat::SpecialProducts);
                let s = sign(n - beta.len() as i64);
                (beta, s / sp)
            })
            .collect(),
        (PowerSumSecond, Elementary) => {
            let prod = alpha.stat(Stat::Product).unwrap_or_else(|_| Rat::one());
            refinements_with_blocks(alpha)
                .into_iter()
                .map(|(beta, blocks)| {
                    let lens = refined_stat_on_blocks(&blocks, RefinedStat::Lengths);
                    let s = sign(n - beta.len() as i64);
                    (beta, s * &prod / lens)
                })
                .collect()
        }
        // Power sums into ribbons via the ribbon decomposition.
        (PowerSumFirst, Ribbon) => enumerate_compositions(alpha.size())
            .into_iter()
            .filter_map(|beta| {
                let rd = ribbon_decomposition(&beta, alpha).expect("same size");
                if rd.hook_sign.is_zero() {
                    None
                } else {
                    Some((beta, rd.hook_sign))
                }
            })
            .collect(),
        (PowerSumSecond, Ribbon) => enumerate_compositions(alpha.size())
            .into_iter()
            .filter_map(|beta| {
                let rd = ribbon_decomposition(&beta, alpha).expect("same size");
                if rd.binomial_weight.is_zero() {
                    None
                } else {
                    Some((beta, rd.binomial_weight))
                }
            })
            .collect(),
        _ => return None,
    };
    Some(out)
}

/// The common refinement of `a` and `b` split along `b`, with the two
/// ribbon-product weights read off its blocks.
#[derive(Debug, Clone)]
pub struct RibbonDecomposition {
    /// Blocks of `set_inverse(set(a) union set(b))`, block `j` summing to
    /// the `j`-th part of `b`.
    pub blocks: Vec<Composition>,
    /// Product over blocks of `(-1)^(l(block)-1)` when every block is a
    /// hook `(1^k, s)`, and zero otherwise: the coefficient of the ribbon
    /// indexed by `a` in the power sum of the first kind indexed by `b`.
    pub hook_sign: Rat,
    /// Product over blocks of `(-1)^(l(block)-1) / C(b_j - 1,
    /// l(block)-1)`: the coefficient of the ribbon indexed by `a` in the
    /// power sum of the second kind indexed by `b`.
    pub binomial_weight: Rat,
}

/// Split the common refinement of `a` and `b` along `b` and compute the
/// two power-sum ribbon weights. Errors when `|a| != |b|`.
pub fn ribbon_decomposition(a: &Composition, b: &Composition) -> Result<RibbonDecomposition> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    let union = a.to_subset().union(&b.to_subset())?;
    let gamma = union.to_composition();
    let blocks = gamma.refines(b).expect("gamma refines b by construction");
    let mut hook_sign = Rat::one();
    let mut binomial_weight = Rat::one();
    for (block, &part) in blocks.iter().zip(b.parts()) {
        let len = block.len() as i64;
        let s = sign(len - 1);
        if is_hook(block) {
            hook_sign *= s.clone();
        } else {
            hook_sign = Rat::zero();
        }
        binomial_weight *= s / Rat::from_integer(binomial(u64::from(part) - 1, (len - 1) as u64));
    }
    Ok(RibbonDecomposition {
        blocks,
        hook_sign,
        binomial_weight,
    })
}

/// A hook composition: all parts except possibly the last equal 1.
pub fn is_hook(gamma: &Composition) -> bool {
    let parts = gamma.parts();
    !parts.is_empty() && parts[..parts.len() - 1].iter().all(|&p| p == 1)
}

/// Generating-series identities checked degree by degree up to
/// `max_degree`:
///
/// 1. the alternating convolution of elementary against complete pieces
///    vanishes, in both multiplication orders;
/// 2. the convolution of complete pieces with first-kind power sums
///    reproduces `d` times the degree-`d` complete piece;
/// 3. the degree-`d` coefficient of the exponential of the divided
///    second-kind series is the complete piece;
/// 4. the derivative of the complete series equals the complete series
///    times the derivative of the divided first-kind series.
pub fn verify_series(max_degree: u32) -> Report {
    let mut report = Report::new();
    let n = max_degree as usize;
    let h: Vec<NSymElem> = (0..=n)
        .map(|k| NSymElem::generator(NSymBasis::Complete, k as u32))
        .collect();
    let h_ribbon: Vec<NSymElem> = h.iter().map(|x| x.convert(NSymBasis::Ribbon)).collect();
    let e_ribbon: Vec<NSymElem> = (0..=n)
        .map(|k| NSymElem::generator(NSymBasis::Elementary, k as u32).convert(NSymBasis::Ribbon))
        .collect();
    let psi_ribbon: Vec<NSymElem> = (0..=n)
        .map(|k| {
            NSymElem::generator(NSymBasis::PowerSumFirst, k as u32).convert(NSymBasis::Ribbon)
        })
        .collect();

    for d in 1..=n {
        // (1) E(-t) H(t) = 1 = H(t) E(-t) in degree d.
        let mut eh = NSymElem::zero(d as u32, NSymBasis::Ribbon);
        let mut he = NSymElem::zero(d as u32, NSymBasis::Ribbon);
        for i in 0..=d {
            let s = sign(i as i64);
            eh = eh.add(&e_ribbon[i].mul(&h_ribbon[d - i]).scale(&s));
            he = he.add(&h_ribbon[d - i].mul(&e_ribbon[i]).scale(&s));
        }
        report.check(
            format!("alternating sum of e_i h_(d-i) vanishes (d={d})"),
            eh.is_zero(),
            || format!("nonzero remainder {eh}"),
        );
        report.check(
            format!("alternating sum of h_(d-i) e_i vanishes (d={d})"),
            he.is_zero(),
            || format!("nonzero remainder {he}"),
        );

        // (2) sum over i < d of h_i psi_(d-i) = d h_d, computed in the
        // complete basis.
        let mut conv = NSymElem::zero(d as u32, NSymBasis::Complete);
        for i in 0..d {
            let psi =
                NSymElem::generator(NSymBasis::PowerSumFirst, (d - i) as u32)
                    .convert(NSymBasis::Complete);
            conv = conv.add(&h[i].mul(&psi));
        }
        let target = h[d].scale(&rat(d as i64));
        report.check(
            format!("h-psi convolution gives d h_d (d={d})"),
            conv == target,
            || format!("got {conv}, expected {target}"),
        );
    }

    // (3) exp of the divided second-kind series, computed by raw series
    // multiplication in the second-kind basis, reproduces every h_d.
    let phi_series: Vec<NSymElem> = (0..=n)
        .map(|k| {
            if k == 0 {
                NSymElem::zero(0, NSymBasis::PowerSumSecond)
            } else {
                NSymElem::generator(NSymBasis::PowerSumSecond, k as u32)
                    .scale(&(Rat::one() / rat(k as i64)))
            }
        })
        .collect();
    let mut exp_series: Vec<NSymElem> = (0..=n)
        .map(|k| {
            if k == 0 {
                NSymElem::one(NSymBasis::PowerSumSecond)
            } else {
                NSymElem::zero(k as u32, NSymBasis::PowerSumSecond)
            }
        })
        .collect();
    let mut power: Vec<NSymElem> = exp_series.clone(); // the j-th power, starting at j = 0
    let mut j_factorial = Rat::one();
    for j in 1..=n {
        power = series_mul(&power, &phi_series, n);
        j_factorial *= rat(j as i64);
        let inv = Rat::one() / &j_factorial;
        for d in j..=n {
            exp_series[d] = exp_series[d].add(&power[d].scale(&inv));
        }
    }
    for d in 1..=n {
        let lhs = exp_series[d].convert(NSymBasis::Ribbon);
        let pass = lhs == h_ribbon[d];
        report.check(
            format!("exp of divided phi series gives h_d (d={d})"),
            pass,
            || format!("got {lhs}"),
        );
    }

    // (4) d/dt H(t) = H(t) d/dt psi(t): coefficient of t^(d-1) says
    // d h_d equals the convolution sum over i + k = d, k >= 1, of
    // h_i psi_k, here computed with ribbon products.
    for d in 1..=n {
        let mut rhs = NSymElem::zero(d as u32, NSymBasis::Ribbon);
        for i in 0..d {
            rhs = rhs.add(&h_ribbon[i].mul(&psi_ribbon[d - i]));
        }
        let lhs = h_ribbon[d].scale(&rat(d as i64));
        report.check(
            format!("derivative of H equals H times psi' (d={d})"),
            lhs == rhs,
            || format!("got {rhs}, expected {lhs}"),
        );
    }
    report
}

fn series_mul(a: &[NSymElem], b: &[NSymElem], n: usize) -> Vec<NSymElem> {
    (0..=n)
        .map(|d| {
            let mut acc = NSymElem::zero(d as u32, NSymBasis::PowerSumSecond);
            for i in 0..=d {
                if a[i].is_zero() || b[d - i].is_zero() {
                    continue;
                }
                acc = acc.add(&a[i].mul(&b[d - i]));
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn vector(basis: NSymBasis, parts: &[u32]) -> NSymElem {
        NSymElem::basis_vector(basis, comp(parts))
    }

    #[test]
    fn complete_to_ribbon_examples() {
        let h11 = vector(NSymBasis::Complete, &[1, 1]).convert(NSymBasis::Ribbon);
        let expected = vector(NSymBasis::Ribbon, &[1, 1]).add(&vector(NSymBasis::Ribbon, &[2]));
        assert_eq!(h11, expected);
        let h21 = vector(NSymBasis::Complete, &[2, 1]).convert(NSymBasis::Ribbon);
        let expected = vector(NSymBasis::Ribbon, &[2, 1]).add(&vector(NSymBasis::Ribbon, &[3]));
        assert_eq!(h21, expected);
    }

    #[test]
    fn power_first_to_ribbon_is_signed_hook_sum() {
        let psi2 = vector(NSymBasis::PowerSumFirst, &[2]).convert(NSymBasis::Ribbon);
        let expected = vector(NSymBasis::Ribbon, &[2]).sub(&vector(NSymBasis::Ribbon, &[1, 1]));
        assert_eq!(psi2, expected);
        let psi3 = vector(NSymBasis::PowerSumFirst, &[3]).convert(NSymBasis::Ribbon);
        assert_eq!(psi3.coeff(&comp(&[3])), rat(1));
        assert_eq!(psi3.coeff(&comp(&[1, 2])), rat(-1));
        assert_eq!(psi3.coeff(&comp(&[1, 1, 1])), rat(1));
        assert_eq!(psi3.coeff(&comp(&[2, 1])), rat(0));
    }

    #[test]
    fn power_first_to_complete_coefficients() {
        // The single-part first-kind power sum expands with coefficient
        // (-1)^(1 + l(beta)) times the last part of beta.
        let psi = vector(NSymBasis::PowerSumFirst, &[3]).convert(NSymBasis::Complete);
        assert_eq!(psi.coeff(&comp(&[3])), rat(3));
        assert_eq!(psi.coeff(&comp(&[1, 2])), rat(-2));
        assert_eq!(psi.coeff(&comp(&[2, 1])), rat(-1));
        assert_eq!(psi.coeff(&comp(&[1, 1, 1])), rat(1));
        for n in 1..=7u32 {
            let psi = vector(NSymBasis::PowerSumFirst, &[n]).convert(NSymBasis::Complete);
            for beta in enumerate_compositions(n) {
                let expected =
                    sign(1 + beta.len() as i64) * rat(i64::from(beta.last_part().unwrap()));
                assert_eq!(psi.coeff(&beta), expected, "beta={beta}");
            }
        }
    }

    #[test]
    fn power_second_to_complete_closed_form() {
        // The single-part second-kind power sum expands with coefficient
        // (-1)^(l(beta)+1) n / l(beta).
        for n in 1..=7u32 {
            let phi = vector(NSymBasis::PowerSumSecond, &[n]).convert(NSymBasis::Complete);
            for beta in enumerate_compositions(n) {
                let expected =
                    sign(beta.len() as i64 + 1) * rat(i64::from(n)) / rat(beta.len() as i64);
                assert_eq!(phi.coeff(&beta), expected, "n={n} beta={beta}");
            }
        }
    }

    #[test]
    fn complete_to_power_second_example() {
        let h2 = vector(NSymBasis::Complete, &[2]).convert(NSymBasis::PowerSumSecond);
        assert_eq!(h2.coeff(&comp(&[2])), ratio(1, 2));
        assert_eq!(h2.coeff(&comp(&[1, 1])), ratio(1, 2));
    }

    #[test]
    fn ribbon_product_rule() {
        let r1 = vector(NSymBasis::Ribbon, &[1]);
        let prod = r1.mul(&r1);
        assert_eq!(
            prod,
            vector(NSymBasis::Ribbon, &[1, 1]).add(&vector(NSymBasis::Ribbon, &[2]))
        );
        let p = vector(NSymBasis::Ribbon, &[2, 1]).mul(&vector(NSymBasis::Ribbon, &[3]));
        assert_eq!(
            p,
            vector(NSymBasis::Ribbon, &[2, 1, 3]).add(&vector(NSymBasis::Ribbon, &[2, 4]))
        );
        // Multiplicative bases concatenate.
        let h = vector(NSymBasis::Complete, &[2]).mul(&vector(NSymBasis::Complete, &[1]));
        assert_eq!(h, vector(NSymBasis::Complete, &[2, 1]));
    }

    #[test]
    fn involution_examples() {
        let r = vector(NSymBasis::Ribbon, &[2, 3, 2, 1]);
        assert_eq!(
            r.involution(Involution::Omega),
            vector(NSymBasis::Ribbon, &[2, 2, 1, 2, 1])
        );
        assert_eq!(
            r.involution(Involution::Rho),
            vector(NSymBasis::Ribbon, &[1, 2, 3, 2])
        );
        // psi(h_alpha) = e_alpha, omega(h_alpha) = e_(alpha reversed),
        // rho(h_alpha) = h_(alpha reversed).
        for alpha in enumerate_compositions(5) {
            let h = NSymElem::basis_vector(NSymBasis::Complete, alpha.clone());
            assert_eq!(
                h.involution(Involution::Psi).convert(NSymBasis::Elementary),
                NSymElem::basis_vector(NSymBasis::Elementary, alpha.clone())
            );
            assert_eq!(
                h.involution(Involution::Omega).convert(NSymBasis::Elementary),
                NSymElem::basis_vector(NSymBasis::Elementary, alpha.reverse())
            );
            assert_eq!(
                h.involution(Involution::Rho),
                NSymElem::basis_vector(NSymBasis::Complete, alpha.reverse())
            );
        }
    }

    #[test]
    fn involutions_on_power_sums() {
        // omega on either power-sum kind reverses the index with the
        // global sign (-1)^(n - l); psi fixes the second kind up to that
        // sign; rho reverses the second kind with no sign.
        for n in 1..=7u32 {
            for alpha in enumerate_compositions(n) {
                let s = sign(i64::from(n) - alpha.len() as i64);
                let psi_a = NSymElem::basis_vector(NSymBasis::PowerSumFirst, alpha.clone());
                assert_eq!(
                    psi_a.involution(Involution::Omega),
                    NSymElem::basis_vector(NSymBasis::PowerSumFirst, alpha.reverse()).scale(&s)
                );
                let phi_a = NSymElem::basis_vector(NSymBasis::PowerSumSecond, alpha.clone());
                assert_eq!(
                    phi_a.involution(Involution::Omega),
                    NSymElem::basis_vector(NSymBasis::PowerSumSecond, alpha.reverse()).scale(&s)
                );
                assert_eq!(phi_a.involution(Involution::Psi), phi_a.scale(&s));
                assert_eq!(
                    phi_a.involution(Involution::Rho),
                    NSymElem::basis_vector(NSymBasis::PowerSumSecond, alpha.reverse())
                );
            }
        }
    }

    #[test]
    fn omega_of_psi_example() {
        let psi = vector(NSymBasis::PowerSumFirst, &[2, 1]);
        let expected = vector(NSymBasis::PowerSumFirst, &[1, 2]).scale(&rat(-1));
        assert_eq!(psi.involution(Involution::Omega), expected);
    }

    #[test]
    fn ribbon_decomposition_worked_example() {
        let a = comp(&[1, 3, 2, 4, 4]);
        let b = comp(&[4, 3, 5, 2]);
        let rd = ribbon_decomposition(&a, &b).unwrap();
        assert_eq!(
            rd.blocks,
            vec![comp(&[1, 3]), comp(&[2, 1]), comp(&[3, 2]), comp(&[2])]
        );
        assert!(ribbon_decomposition(&comp(&[2]), &comp(&[1, 1])).is_ok());
        assert!(ribbon_decomposition(&comp(&[2]), &comp(&[3])).is_err());
    }

    #[test]
    fn ribbon_decomposition_diagonal() {
        // Along the diagonal every block is a single part and the hook
        // sign is +1: the leading ribbon coefficient of a power sum of
        // the first kind is always 1.
        for alpha in enumerate_compositions(6) {
            let rd = ribbon_decomposition(&alpha, &alpha).unwrap();
            assert!(rd.blocks.iter().all(|b| b.len() == 1));
            assert_eq!(rd.hook_sign, rat(1));
            assert_eq!(rd.binomial_weight, rat(1));
        }
    }

    #[test]
    fn hook_shapes() {
        assert!(is_hook(&comp(&[5])));
        assert!(is_hook(&comp(&[1, 1, 3])));
        assert!(is_hook(&comp(&[1, 1, 1])));
        assert!(!is_hook(&comp(&[2, 1])));
        assert!(!is_hook(&comp(&[1, 2, 1])));
        assert!(!is_hook(&Composition::empty()));
    }

    #[test]
    fn power_sum_ribbon_route_agrees_with_complete_route() {
        for n in 1..=7u32 {
            for alpha in enumerate_compositions(n) {
                for basis in [NSymBasis::PowerSumFirst, NSymBasis::PowerSumSecond] {
                    let direct =
                        NSymElem::basis_vector(basis, alpha.clone()).convert(NSymBasis::Ribbon);
                    let via_h = NSymElem::basis_vector(basis, alpha.clone())
                        .convert(NSymBasis::Complete)
                        .convert(NSymBasis::Ribbon);
                    assert_eq!(direct, via_h, "basis={basis:?} alpha={alpha}");
                }
            }
        }
    }

    #[test]
    fn elementary_ribbon_lines_printed_two_ways_agree() {
        // The elementary-to-ribbon line can be indexed by transposes
        // against the reverse, or by complements of coarsenings. Both
        // readings give the same expansion.
        for n in 1..=7u32 {
            for alpha in enumerate_compositions(n) {
                let e = NSymElem::basis_vector(NSymBasis::Elementary, alpha.clone())
                    .convert(NSymBasis::Ribbon);
                // The literal form keeps r_beta exactly when alpha^r
                // refines beta^t.
                let mut literal = NSymElem::zero(n, NSymBasis::Ribbon);
                for beta in enumerate_compositions(n) {
                    if alpha.reverse().refines(&beta.transpose()).is_some() {
                        literal = literal.add(&NSymElem::basis_vector(NSymBasis::Ribbon, beta));
                    }
                }
                assert_eq!(e, literal, "alpha={alpha}");
            }
        }
    }

    #[test]
    fn round_trips_all_pairs() {
        // Degree 0 (the empty composition) is included.
        for n in 0..=6u32 {
            for alpha in enumerate_compositions(n) {
                for a in NSymBasis::ALL {
                    let x = NSymElem::basis_vector(a, alpha.clone());
                    for b in NSymBasis::ALL {
                        let back = x.convert(b).convert(a);
                        assert_eq!(back, x, "{a:?}->{b:?} alpha={alpha}");
                    }
                }
            }
        }
    }

    #[test]
    fn series_identities_hold_to_degree_six() {
        let report = verify_series(6);
        assert!(report.passed(), "{}", report.summary());
    }

    #[test]
    fn display_formatting() {
        let x = vector(NSymBasis::Ribbon, &[2, 1])
            .add(&vector(NSymBasis::Ribbon, &[1, 1, 1]).scale(&ratio(3, 2)))
            .sub(&vector(NSymBasis::Ribbon, &[3]));
        assert_eq!(x.to_string(), "-r[3] + r[2,1] + 3/2 r[1,1,1]");
        assert_eq!(NSymElem::zero(2, NSymBasis::Complete).to_string(), "0");
    }

    fn arb_elem(max_degree: u32) -> impl Strategy<Value = NSymElem> {
        (1..=max_degree, proptest::sample::select(NSymBasis::ALL.to_vec())).prop_flat_map(
            move |(n, basis)| {
                let comps = enumerate_compositions(n);
                let len = comps.len();
                proptest::collection::vec(-4i64..=4, len).prop_map(move |coeffs| {
                    NSymElem::from_terms(
                        n,
                        basis,
                        comps.iter().cloned().zip(coeffs.iter().map(|&c| rat(c))),
                    )
                    .unwrap()
                })
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_is_associative_and_unital(
            x in arb_elem(3),
            y in arb_elem(3),
            z in arb_elem(2),
        ) {
            let left = x.mul(&y).mul(&z);
            let right = x.mul(&y.mul(&z));
            prop_assert_eq!(left.convert(NSymBasis::Ribbon), right.convert(NSymBasis::Ribbon));
            let one = NSymElem::one(x.basis());
            prop_assert_eq!(x.mul(&one), x.clone());
            prop_assert_eq!(one.mul(&x), x);
        }

        #[test]
        fn involution_morphism_laws(x in arb_elem(3), y in arb_elem(3)) {
            // rho and omega reverse products, psi preserves them.
            for kind in [Involution::Rho, Involution::Omega] {
                let lhs = x.mul(&y).involution(kind).convert(NSymBasis::Ribbon);
                let rhs = y.involution(kind).mul(&x.involution(kind)).convert(NSymBasis::Ribbon);
                prop_assert_eq!(lhs, rhs);
            }
            let lhs = x.mul(&y).involution(Involution::Psi).convert(NSymBasis::Ribbon);
            let rhs = x
                .involution(Involution::Psi)
                .mul(&y.involution(Involution::Psi))
                .convert(NSymBasis::Ribbon);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn involutions_square_to_identity(x in arb_elem(4)) {
            for kind in Involution::ALL {
                prop_assert_eq!(x.involution(kind).involution(kind), x.clone());
            }
        }
    }
}
