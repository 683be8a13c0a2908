//! Abstract quasisymmetric elements over the monomial, fundamental,
//! forgotten, and two power-sum bases; the three involutions; and the
//! duality pairing against the noncommutative side.
//!
//! The monomial basis is the canonical hub: every printed line expands
//! into or out of it, and the pairs with no direct line (either
//! power-sum kind against the fundamental basis, and the two kinds
//! against each other) compose through it. The forgotten basis is the
//! image of the monomial basis under the complementing involution.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num::{One, Zero};

use crate::compositions::{
    coarsenings_with_blocks, refined_stat_on_blocks, refinements_with_blocks,
    reversed_stat_on_blocks, Composition, RefinedStat, Stat,
};
use crate::notation::fmt_terms;
use crate::nsym::{Involution, NSymBasis, NSymElem};
use crate::rational::{rat, sign, Rat};
use crate::report::Report;
use crate::{Error, Result};

/// The five bases carried by [`QSymElem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QSymBasis {
    Monomial,
    Fundamental,
    Forgotten,
    PowerSumFirst,
    PowerSumSecond,
}

impl QSymBasis {
    pub const ALL: [QSymBasis; 5] = [
        QSymBasis::Monomial,
        QSymBasis::Fundamental,
        QSymBasis::Forgotten,
        QSymBasis::PowerSumFirst,
        QSymBasis::PowerSumSecond,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            QSymBasis::Monomial => "M",
            QSymBasis::Fundamental => "F",
            QSymBasis::Forgotten => "For",
            QSymBasis::PowerSumFirst => "Psi",
            QSymBasis::PowerSumSecond => "Phi",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        Ok(match tag {
            "M" => QSymBasis::Monomial,
            "F" => QSymBasis::Fundamental,
            "For" => QSymBasis::Forgotten,
            "Psi" => QSymBasis::PowerSumFirst,
            "Phi" => QSymBasis::PowerSumSecond,
            _ => return Err(Error::UnknownBasis(tag.to_string())),
        })
    }
}

/// `z` of the sort of a composition.
pub fn z_of(alpha: &Composition) -> Rat {
    alpha.sort_and_z().1
}

/// A homogeneous quasisymmetric element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSymElem {
    degree: u32,
    basis: QSymBasis,
    terms: BTreeMap<Composition, Rat>,
}

impl QSymElem {
    pub fn zero(degree: u32, basis: QSymBasis) -> Self {
        QSymElem {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_vector(basis: QSymBasis, alpha: Composition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = alpha.size();
        terms.insert(alpha, Rat::one());
        QSymElem {
            degree,
            basis,
            terms,
        }
    }

    pub fn from_terms(
        degree: u32,
        basis: QSymBasis,
        terms: impl IntoIterator<Item = (Composition, Rat)>,
    ) -> Result<Self> {
        let mut out = QSymElem::zero(degree, basis);
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

    pub fn basis(&self) -> QSymBasis {
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

    pub fn add(&self, other: &QSymElem) -> QSymElem {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let other = other.convert(self.basis);
        let mut out = self.clone();
        for (c, k) in other.terms {
            out.add_term(c, k);
        }
        out
    }

    pub fn sub(&self, other: &QSymElem) -> QSymElem {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, k: &Rat) -> QSymElem {
        if k.is_zero() {
            return QSymElem::zero(self.degree, self.basis);
        }
        QSymElem {
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
    pub fn convert(&self, to: QSymBasis) -> QSymElem {
        if self.basis == to {
            return self.clone();
        }
        let mut out = QSymElem::zero(self.degree, to);
        for (alpha, k) in &self.terms {
            for (beta, c) in expand_vector(self.basis, alpha, to).iter() {
                out.add_term(beta.clone(), c * k);
            }
        }
        out
    }

    /// Apply an involution: defined on the fundamental basis by the
    /// index involution, extended linearly, expressed in the original
    /// basis.
    pub fn involution(&self, kind: Involution) -> QSymElem {
        let f = self.convert(QSymBasis::Fundamental);
        let mut out = QSymElem::zero(self.degree, QSymBasis::Fundamental);
        let map = kind.index_map();
        for (alpha, k) in &f.terms {
            out.add_term(alpha.involution(map), k.clone());
        }
        out.convert(self.basis)
    }
}

impl fmt::Display for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.basis.tag(), &self.canonical_terms())
    }
}

/// The duality pairing: the fundamental basis pairs with the ribbon
/// basis as a dual pair, so both sides convert there and contract.
/// Degree mismatch pairs to zero.
pub fn pair(q: &QSymElem, ns: &NSymElem) -> Rat {
    if q.degree() != ns.degree() {
        return Rat::zero();
    }
    let qf = q.convert(QSymBasis::Fundamental);
    let nr = ns.convert(NSymBasis::Ribbon);
    let mut acc = Rat::zero();
    for (alpha, c) in qf.iter() {
        let d = nr.coeff(alpha);
        if !d.is_zero() {
            acc += c * &d;
        }
    }
    acc
}

type Expansion = Rc<Vec<(Composition, Rat)>>;

thread_local! {
    static EXPANSION_CACHE: RefCell<HashMap<(QSymBasis, QSymBasis, Composition), Expansion>> =
        RefCell::new(HashMap::new());
}

/// Expansion of a single `from`-basis vector in the `to` basis,
/// memoized per thread as in the noncommutative module.
fn expand_vector(from: QSymBasis, alpha: &Composition, to: QSymBasis) -> Expansion {
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
    from: QSymBasis,
    alpha: &Composition,
    to: QSymBasis,
) -> Vec<(Composition, Rat)> {
    use QSymBasis::*;
    match direct_expansion(from, alpha, to) {
        Some(v) => v,
        None => {
            let mut out: BTreeMap<Composition, Rat> = BTreeMap::new();
            for (beta, c) in direct_expansion(from, alpha, Monomial).expect("line into monomial") {
                for (gamma, d) in expand_vector(Monomial, &beta, to).iter() {
                    let entry = out.entry(gamma.clone()).or_insert_with(Rat::zero);
                    *entry += c.clone() * d;
                }
            }
            out.retain(|_, v| !v.is_zero());
            out.into_iter().collect()
        }
    }
}

/// The directly coded quasisymmetric change-of-basis lines. `None` for
/// the pairs without one (power sums against the fundamental basis, and
/// the two power-sum kinds against each other).
fn direct_expansion(
    from: QSymBasis,
    alpha: &Composition,
    to: QSymBasis,
) -> Option<Vec<(Composition, Rat)>> {
    use QSymBasis::*;
    let n = alpha.size() as i64;
    let la = alpha.len() as i64;
    let out = match (from, to) {
        // A fundamental vector is the unsigned sum of monomial vectors
        // over refinements; the inverse alternates in the length.
        (Fundamental, Monomial) => refinements_with_blocks(alpha)
            .into_iter()
            .map(|(beta, _)| (beta, Rat::one()))
            .collect(),
        (Monomial, Fundamental) => refinements_with_blocks(alpha)
            .into_iter()
            .map(|(beta, _)| {
                let s = sign(beta.len() as i64 - la);
                (beta, s)
            })
            .collect(),
        // Fundamental and forgotten exchange through the complement.
        (Fundamental, Forgotten) => refinements_with_blocks(&alpha.complement())
            .into_iter()
            .map(|(beta, _)| (beta, Rat::one()))
            .collect(),
        (Forgotten, Fundamental) => refinements_with_blocks(alpha)
            .into_iter()
            .map(|(beta, _)| {
                let s = sign(beta.len() as i64 - la);
                (beta.complement(), s)
            })
            .collect(),
        // Forgotten and monomial expand in each other over coarsenings
        // with the constant sign (-1)^(l(alpha) - n).
        (Forgotten, Monomial) | (Monomial, Forgotten) => {
            let s = sign(la - n);
            coarsenings_with_blocks(alpha)
                .into_iter()
                .map(|(beta, _)| (beta, s.clone()))
                .collect()
        }
        // Power sums against the monomial basis, over coarsenings, with
        // the statistics taken on the blocks of alpha.
        (PowerSumFirst, Monomial) => {
            let z = z_of(alpha);
            coarsenings_with_blocks(alpha)
                .into_iter()
                .map(|(beta, blocks)| {
                    let piu = refined_stat_on_blocks(&blocks, RefinedStat::PartialSumsProducts);
                    (beta, &z / piu)
                })
                .collect()
        }
        (Monomial, PowerSumFirst) => coarsenings_with_blocks(alpha)
            .into_iter()
            .map(|(beta, blocks)| {
                let lp = refined_stat_on_blocks(&blocks, RefinedStat::LastParts);
                let s = sign(la - beta.len() as i64);
                let z = z_of(&beta);
                (beta, s * lp / z)
            })
            .collect(),
        (PowerSumSecond, Monomial) => {
            let z = z_of(alpha);
            coarsenings_with_blocks(alpha)
                .into_iter()
                .map(|(beta, blocks)| {
                    let sp = refined_stat_on_blocks(&blocks, RefinedStat::SpecialProducts);
                    (beta, &z / sp)
                })
                .collect()
        }
        (Monomial, PowerSumSecond) => coarsenings_with_blocks(alpha)
            .into_iter()
            .map(|(beta, blocks)| {
                let lens = refined_stat_on_blocks(&blocks, RefinedStat::Lengths);
                let prod = beta.stat(Stat::Product).unwrap_or_else(|_| Rat::one());
                let s = sign(la - beta.len() as i64);
                let z = z_of(&beta);
                (beta, s * prod / (lens * z))
            })
            .collect(),
        // Power sums against the forgotten basis: the sign becomes
        // (-1)^(n - l(alpha)), and the first kind reads its statistics
        // off the reversed refinement.
        (PowerSumFirst, Forgotten) => {
            let z = z_of(alpha);
            let s = sign(n - la);
            coarsenings_with_blocks(alpha)
                .into_iter()
                .map(|(beta, blocks)| {
                    let piu = reversed_stat_on_blocks(&blocks, RefinedStat::PartialSumsProducts);
                    (beta, &s * &z / piu)
                })
                .collect()
        }
        (Forgotten, PowerSumFirst) => {
            let s = sign(n - la);
            coarsenings_with_blocks(alpha)
                .into_iter()
                .map(|(beta, blocks)| {
                    let lp = reversed_stat_on_blocks(&blocks, RefinedStat::LastParts);
                    let z = z_of(&beta);
                    (beta, &s * lp / z)
                })
                .collect()
        }
        (PowerSumSecond, Forgotten) => {
            let z = z_of(alpha);
            let s = sign(n - la);
            coarsenings_with_blocks(alpha)
                .into_iter()
                .map(|(beta, blocks)| {
                    let sp = refined_stat_on_blocks(&blocks, RefinedStat::SpecialProducts);
                    (beta, &s * &z / sp)
                })
                .collect()
        }
        (Forgotten, PowerSumSecond) => {
            let s = sign(n - la);
            coarsenings_with_blocks(alpha)
                .into_iter()
                .map(|(beta, blocks)| {
                    let lens = refined_stat_on_blocks(&blocks, RefinedStat::Lengths);
                    let prod = beta.stat(Stat::Product).unwrap_or_else(|_| Rat::one());
                    let z = z_of(&beta);
                    (beta, &s * prod / (lens * z))
                })
                .collect()
        }
        _ => return None,
    };
    Some(out)
}

/// Duality checks up to the requested degree:
///
/// * the five dual pairs pair to the identity pattern (with the
///   `z` factor on the power sums);
/// * the pairing is invariant under applying matching involutions to
///   both slots.
pub fn verify_duality(max_degree: u32) -> Report {
    let mut report = Report::new();
    for n in 1..=max_degree {
        let comps = crate::compositions::enumerate_compositions(n);
        let dual_pairs: [(QSymBasis, NSymBasis, bool); 5] = [
            (QSymBasis::Fundamental, NSymBasis::Ribbon, false),
            (QSymBasis::Monomial, NSymBasis::Complete, false),
            (QSymBasis::Forgotten, NSymBasis::Elementary, false),
            (QSymBasis::PowerSumFirst, NSymBasis::PowerSumFirst, true),
            (QSymBasis::PowerSumSecond, NSymBasis::PowerSumSecond, true),
        ];
        for (qb, nb, z_scaled) in dual_pairs {
            let mut ok = true;
            let mut detail = String::new();
            for a in &comps {
                let q = QSymElem::basis_vector(qb, a.clone());
                for b in &comps {
                    let ns = NSymElem::basis_vector(nb, b.clone());
                    let got = pair(&q, &ns);
                    let expected = if a == b {
                        if z_scaled {
                            z_of(a)
                        } else {
                            Rat::one()
                        }
                    } else {
                        Rat::zero()
                    };
                    if got != expected {
                        ok = false;
                        detail = format!(
                            "<{}{a}, {}{b}> = {got}, expected {expected}",
                            qb.tag(),
                            nb.tag()
                        );
                        break;
                    }
                }
                if !ok {
                    break;
                }
            }
            report.check(
                format!(
                    "dual pairing of {} against {} is the identity pattern (n={n})",
                    qb.tag(),
                    nb.tag()
                ),
                ok,
                || detail,
            );
        }

        // Invariance of the pairing under matched involutions, on
        // deterministic dense elements.
        let q = QSymElem::from_terms(
            n,
            QSymBasis::Monomial,
            comps
                .iter()
                .map(|c| (c.clone(), rat(c.canonical_index() as i64 + 1))),
        )
        .unwrap();
        let ns = NSymElem::from_terms(
            n,
            NSymBasis::Complete,
            comps
                .iter()
                .map(|c| (c.clone(), rat(2 * c.canonical_index() as i64 - 3))),
        )
        .unwrap();
        let base = pair(&q, &ns);
        for kind in Involution::ALL {
            let got = pair(&q.involution(kind), &ns.involution(kind));
            report.check(
                format!("pairing invariant under {kind:?} on both slots (n={n})"),
                got == base,
                || format!("got {got}, expected {base}"),
            );
        }
    }
    report
}
