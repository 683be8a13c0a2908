//! Sparse polynomials in commuting variables, truncated to `m`
//! variables, and the symmetric / quasisymmetric generators realized
//! there.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::compositions::{Composition, Partition};
use crate::rational::Rat;
use crate::{Error, Result};

/// An exponent vector over the `m` variables; entry `i` is the exponent
/// of variable `i + 1`.
pub type Exponents = Vec<u32>;

/// A sparse polynomial in `m` commuting variables with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPoly {
    vars: usize,
    terms: BTreeMap<Exponents, Rat>,
}

impl CPoly {
    pub fn zero(vars: usize) -> Self {
        CPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; vars], Rat::one());
        CPoly { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        debug_assert_eq!(exps.len(), self.vars);
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    /// Terms sorted by total degree, then lexicographically.
    pub fn canonical_terms(&self) -> Vec<(Exponents, Rat)> {
        let mut v: Vec<(Exponents, Rat)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        v.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), e.clone()));
        v
    }

    /// Largest total degree present (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>() as usize)
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, coeff: Rat) {
        debug_assert_eq!(exps.len(), self.vars);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    pub fn add(&self, other: &CPoly) -> Result<CPoly> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars,
                right: other.vars,
            });
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CPoly) -> Result<CPoly> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, k: &Rat) -> CPoly {
        if k.is_zero() {
            return CPoly::zero(self.vars);
        }
        CPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * k))
                .collect(),
        }
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.canonical_terms().iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, k)
                    }
                })
                .collect();
            let constant = mono.is_empty();
            let mono = if constant {
                "1".to_string()
            } else {
                mono.join("*")
            };
            let negative = c < &Rat::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if magnitude.is_one() && !constant {
                write!(f, "{mono}")?;
            } else if constant {
                write!(f, "{}", crate::rational::format_rat(&magnitude))?;
            } else {
                write!(f, "{} {}", crate::rational::format_rat(&magnitude), mono)?;
            }
        }
        Ok(())
    }
}

/// Generators realized in commuting variables: the symmetric elementary,
/// complete, power-sum, and monomial pieces, and the quasisymmetric
/// monomial and fundamental pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CGenerator {
    Elementary(u32),
    Complete(u32),
    Power(u32),
    MonomialSym(Partition),
    MonomialQsym(Composition),
    Fundamental(Composition),
}

/// A truncated polynomial ring in `vars` commuting variables with a
/// total-degree cap.
#[derive(Debug, Clone)]
pub struct CAlgebra {
    vars: usize,
    cap: usize,
}

impl CAlgebra {
    pub fn new(vars: usize) -> Result<Self> {
        Self::with_cap(vars, super::DEFAULT_CAP.max(vars))
    }

    pub fn with_cap(vars: usize, cap: usize) -> Result<Self> {
        if vars < 1 {
            return Err(Error::InvalidPart("variable count must be >= 1".into()));
        }
        Ok(CAlgebra { vars, cap })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_cap(&self, degree: usize) -> Result<()> {
        if degree > self.cap {
            return Err(Error::DegreeCapExceeded {
                degree,
                cap: self.cap,
            });
        }
        Ok(())
    }

    pub fn realize(&self, gen: &CGenerator) -> Result<CPoly> {
        match gen {
            CGenerator::Elementary(n) => self.elementary(*n),
            CGenerator::Complete(n) => self.complete(*n),
            CGenerator::Power(n) => self.power(*n),
            CGenerator::MonomialSym(p) => self.monomial_sym(p),
            CGenerator::MonomialQsym(a) => self.monomial_qsym(a),
            CGenerator::Fundamental(a) => self.fundamental(a),
        }
    }

    /// Sum of all squarefree monomials of degree `n`.
    pub fn elementary(&self, n: u32) -> Result<CPoly> {
        self.check_cap(n as usize)?;
        let n = n as usize;
        let mut out = CPoly::zero(self.vars);
        if n > self.vars {
            return Ok(out);
        }
        if n == 0 {
            return Ok(CPoly::one(self.vars));
        }
        // Choose n distinct variables.
        let mut choice: Vec<usize> = (0..n).collect();
        loop {
            let mut exps = vec![0u32; self.vars];
            for &v in &choice {
                exps[v] = 1;
            }
            out.add_term(exps, Rat::one());
            // Next combination.
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                if choice[i] < self.vars - (n - i) {
                    choice[i] += 1;
                    for j in i + 1..n {
                        choice[j] = choice[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// Sum of all monomials of degree `n`.
    pub fn complete(&self, n: u32) -> Result<CPoly> {
        self.check_cap(n as usize)?;
        if n == 0 {
            return Ok(CPoly::one(self.vars));
        }
        let mut out = CPoly::zero(self.vars);
        let mut exps = vec![0u32; self.vars];
        self.complete_rec(0, n, &mut exps, &mut out);
        Ok(out)
    }

    fn complete_rec(&self, var: usize, remaining: u32, exps: &mut Exponents, out: &mut CPoly) {
        if var + 1 == self.vars {
            exps[var] = remaining;
            out.add_term(exps.clone(), Rat::one());
            exps[var] = 0;
            return;
        }
        for k in 0..=remaining {
            exps[var] = k;
            self.complete_rec(var + 1, remaining - k, exps, out);
        }
        exps[var] = 0;
    }

    /// Sum of the `n`-th powers of the variables.
    pub fn power(&self, n: u32) -> Result<CPoly> {
        self.check_cap(n as usize)?;
        if n == 0 {
            return Ok(CPoly::one(self.vars));
        }
        let mut out = CPoly::zero(self.vars);
        for v in 0..self.vars {
            let mut exps = vec![0u32; self.vars];
            exps[v] = n;
            out.add_term(exps, Rat::one());
        }
        Ok(out)
    }

    /// Monomial symmetric piece: all distinct exponent vectors sorting to
    /// the given partition.
    pub fn monomial_sym(&self, lambda: &Partition) -> Result<CPoly> {
        self.check_cap(lambda.size() as usize)?;
        let mut out = CPoly::zero(self.vars);
        if lambda.len() > self.vars {
            return Ok(out);
        }
        if lambda.is_empty() {
            return Ok(CPoly::one(self.vars));
        }
        // Place the distinct part values group by group.
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &p in lambda.parts() {
            match groups.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => groups.push((p, 1)),
            }
        }
        let free: Vec<usize> = (0..self.vars).collect();
        let mut exps = vec![0u32; self.vars];
        place_groups(&groups, 0, &free, &mut exps, &mut out);
        return Ok(out);

        fn place_groups(
            groups: &[(u32, usize)],
            g: usize,
            free: &[usize],
            exps: &mut Exponents,
            out: &mut CPoly,
        ) {
            if g == groups.len() {
                out.add_term(exps.clone(), Rat::one());
                return;
            }
            let (value, mult) = groups[g];
            // Choose `mult` of the free slots for this value.
            let k = mult;
            if free.len() < k {
                return;
            }
            let mut choice: Vec<usize> = (0..k).collect();
            loop {
                let chosen: Vec<usize> = choice.iter().map(|&i| free[i]).collect();
                for &slot in &chosen {
                    exps[slot] = value;
                }
                let remaining: Vec<usize> = free
                    .iter()
                    .copied()
                    .filter(|s| !chosen.contains(s))
                    .collect();
                place_groups(groups, g + 1, &remaining, exps, out);
                for &slot in &chosen {
                    exps[slot] = 0;
                }
                // Next combination.
                let mut i = k;
                let mut done = true;
                while i > 0 {
                    i -= 1;
                    if choice[i] < free.len() - (k - i) {
                        choice[i] += 1;
                        for j in i + 1..k {
                            choice[j] = choice[j - 1] + 1;
                        }
                        done = false;
                        break;
                    }
                }
                if done {
                    return;
                }
            }
        }
    }

    /// Monomial quasisymmetric piece: exponents `alpha` placed on any
    /// increasing choice of variables.
    pub fn monomial_qsym(&self, alpha: &Composition) -> Result<CPoly> {
        self.check_cap(alpha.size() as usize)?;
        let k = alpha.len();
        let mut out = CPoly::zero(self.vars);
        if k > self.vars {
            return Ok(out);
        }
        if k == 0 {
            return Ok(CPoly::one(self.vars));
        }
        let mut choice: Vec<usize> = (0..k).collect();
        loop {
            let mut exps = vec![0u32; self.vars];
            for (j, &v) in choice.iter().enumerate() {
                exps[v] = alpha.parts()[j];
            }
            out.add_term(exps, Rat::one());
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                if choice[i] < self.vars - (k - i) {
                    choice[i] += 1;
                    for j in i + 1..k {
                        choice[j] = choice[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// Fundamental quasisymmetric piece: weakly increasing words of
    /// length `|alpha|` with strict rises forced at the subset positions.
    pub fn fundamental(&self, alpha: &Composition) -> Result<CPoly> {
        let n = alpha.size() as usize;
        self.check_cap(n)?;
        if n == 0 {
            return Ok(CPoly::one(self.vars));
        }
        let strict = alpha.to_subset();
        let mut out = CPoly::zero(self.vars);
        let mut word: Vec<u8> = Vec::with_capacity(n);
        self.fundamental_rec(n, &strict, &mut word, &mut out);
        Ok(out)
    }

    fn fundamental_rec(
        &self,
        n: usize,
        strict: &crate::compositions::SubsetOfRange,
        word: &mut Vec<u8>,
        out: &mut CPoly,
    ) {
        if word.len() == n {
            let mut exps = vec![0u32; self.vars];
            for &i in word.iter() {
                exps[(i - 1) as usize] += 1;
            }
            out.add_term(exps, Rat::one());
            return;
        }
        let j = word.len();
        let lo = if j == 0 {
            1u8
        } else if strict.contains(j as u32) {
            word[j - 1] + 1
        } else {
            word[j - 1]
        };
        for i in lo..=(self.vars as u8) {
            word.push(i);
            self.fundamental_rec(n, strict, word, out);
            word.pop();
        }
    }

    /// Product of commuting polynomials.
    pub fn mul(&self, p: &CPoly, q: &CPoly) -> Result<CPoly> {
        if p.vars != self.vars || q.vars != self.vars {
            return Err(Error::VariableMismatch {
                left: p.vars,
                right: q.vars,
            });
        }
        self.check_cap(p.degree() + q.degree())?;
        let mut out = CPoly::zero(self.vars);
        for (u, cu) in &p.terms {
            for (v, cv) in &q.terms {
                let w: Exponents = u.iter().zip(v).map(|(a, b)| a + b).collect();
                out.add_term(w, cu * cv);
            }
        }
        Ok(out)
    }

    /// Product of a list of generators.
    pub fn product(&self, gens: &[CGenerator]) -> Result<CPoly> {
        let mut acc = CPoly::one(self.vars);
        for g in gens {
            let p = self.realize(g)?;
            acc = self.mul(&acc, &p)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn power_two_vars() {
        let alg = CAlgebra::new(2).unwrap();
        let p2 = alg.power(2).unwrap();
        assert_eq!(p2.coeff(&[2, 0]), rat(1));
        assert_eq!(p2.coeff(&[0, 2]), rat(1));
        assert_eq!(p2.term_count(), 2);
    }

    #[test]
    fn monomial_qsym_two_one() {
        let alg = CAlgebra::new(3).unwrap();
        let m = alg.monomial_qsym(&comp(&[2, 1])).unwrap();
        assert_eq!(m.coeff(&[2, 1, 0]), rat(1));
        assert_eq!(m.coeff(&[2, 0, 1]), rat(1));
        assert_eq!(m.coeff(&[0, 2, 1]), rat(1));
        assert_eq!(m.term_count(), 3);
    }

    #[test]
    fn fundamental_one_two() {
        let alg = CAlgebra::new(3).unwrap();
        let f = alg.fundamental(&comp(&[1, 2])).unwrap();
        assert_eq!(f.coeff(&[1, 2, 0]), rat(1));
        assert_eq!(f.coeff(&[1, 0, 2]), rat(1));
        assert_eq!(f.coeff(&[0, 1, 2]), rat(1));
        assert_eq!(f.coeff(&[1, 1, 1]), rat(1));
        assert_eq!(f.term_count(), 4);
    }

    #[test]
    fn elementary_and_complete_counts() {
        let alg = CAlgebra::new(4).unwrap();
        assert_eq!(alg.elementary(2).unwrap().term_count(), 6);
        assert_eq!(alg.complete(2).unwrap().term_count(), 10);
        assert_eq!(alg.elementary(5).unwrap().term_count(), 0);
        assert_eq!(alg.elementary(0).unwrap(), CPoly::one(4));
    }

    #[test]
    fn monomial_sym_orbits() {
        let alg = CAlgebra::new(3).unwrap();
        let m21 = alg.monomial_sym(&pt(&[2, 1])).unwrap();
        // Six arrangements of exponents {2,1,0} over three variables.
        assert_eq!(m21.term_count(), 6);
        let m11 = alg.monomial_sym(&pt(&[1, 1])).unwrap();
        assert_eq!(m11, alg.elementary(2).unwrap());
        // m over a sort class equals the sum of quasisymmetric pieces.
        let sum = alg
            .monomial_qsym(&comp(&[2, 1]))
            .unwrap()
            .add(&alg.monomial_qsym(&comp(&[1, 2])).unwrap())
            .unwrap();
        assert_eq!(m21, sum);
    }

    #[test]
    fn fundamental_refinement_sum() {
        // F decomposes as the sum of monomial quasisymmetric pieces over
        // refinements.
        let alg = CAlgebra::new(4).unwrap();
        for alpha in crate::compositions::enumerate_compositions(4) {
            let f = alg.fundamental(&alpha).unwrap();
            let mut sum = CPoly::zero(4);
            for (beta, _) in crate::compositions::refinements_with_blocks(&alpha) {
                sum = sum.add(&alg.monomial_qsym(&beta).unwrap()).unwrap();
            }
            assert_eq!(f, sum, "alpha={alpha}");
        }
    }
}
