//! An independent expansion oracle for the symmetric-function fragment:
//! exact linear solves of a realized symmetric polynomial against a
//! realized multiplicative basis, plus the degree-preserving involution
//! obtained by expanding in the elementary family and reinterpreting in
//! the complete family.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::compositions::{enumerate_partitions, Partition};
use crate::polyreal::c::{CAlgebra, CGenerator, CPoly, Exponents};
use crate::rational::Rat;
use crate::{Error, Result};

/// The families a symmetric polynomial can be expanded in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymFamily {
    Elementary,
    Complete,
    Power,
    Monomial,
    /// The image of the monomial family under the involution swapping the
    /// elementary and complete families (no extra sign).
    Forgotten,
}

/// An exact expansion: partition-indexed rational coefficients.
pub type SymExpansion = BTreeMap<Partition, Rat>;

impl CAlgebra {
    /// Realize the basis element of `family` indexed by `lambda`.
    pub fn family_element(&self, family: SymFamily, lambda: &Partition) -> Result<CPoly> {
        match family {
            SymFamily::Elementary => self.product(
                &lambda
                    .parts()
                    .iter()
                    .map(|&p| CGenerator::Elementary(p))
                    .collect::<Vec<_>>(),
            ),
            SymFamily::Complete => self.product(
                &lambda
                    .parts()
                    .iter()
                    .map(|&p| CGenerator::Complete(p))
                    .collect::<Vec<_>>(),
            ),
            SymFamily::Power => self.product(
                &lambda
                    .parts()
                    .iter()
                    .map(|&p| CGenerator::Power(p))
                    .collect::<Vec<_>>(),
            ),
            SymFamily::Monomial => self.monomial_sym(lambda),
            SymFamily::Forgotten => {
                // Expand the monomial element in the elementary family and
                // reinterpret the coefficients in the complete family.
                let m = self.monomial_sym(lambda)?;
                let coeffs = self.expand(&m, SymFamily::Elementary)?;
                let mut acc = CPoly::zero(self.vars());
                for (mu, c) in &coeffs {
                    let h = self.family_element(SymFamily::Complete, mu)?;
                    acc = acc.add(&h.scale(c))?;
                }
                Ok(acc)
            }
        }
    }

    /// The involution on realized symmetric polynomials that swaps the
    /// elementary and complete families.
    pub fn omega(&self, target: &CPoly) -> Result<CPoly> {
        let coeffs = self.expand(target, SymFamily::Elementary)?;
        let mut acc = CPoly::zero(self.vars());
        for (mu, c) in &coeffs {
            let h = self.family_element(SymFamily::Complete, mu)?;
            acc = acc.add(&h.scale(c))?;
        }
        Ok(acc)
    }

    /// Expand a homogeneous symmetric polynomial exactly in the given
    /// family. The polynomial must be symmetric and the variable count
    /// must be at least the degree; the solve is an exact rational
    /// Gaussian elimination on monomial coordinates indexed by the
    /// partitions of the degree, and the result is checked against the
    /// full polynomial afterwards.
    pub fn expand(&self, target: &CPoly, family: SymFamily) -> Result<SymExpansion> {
        if target.is_zero() {
            return Ok(SymExpansion::new());
        }
        self.expansion_solver(family, target.degree() as u32)?
            .expand(target)
    }

    /// Precompute the realized family basis of one degree for repeated
    /// expansions.
    pub fn expansion_solver(&self, family: SymFamily, degree: u32) -> Result<ExpansionSolver> {
        if self.vars() < degree as usize {
            return Err(Error::UnsoundVariableCount {
                vars: self.vars(),
                degree: degree as usize,
            });
        }
        let partitions = enumerate_partitions(degree);
        let basis: Vec<CPoly> = partitions
            .iter()
            .map(|p| self.family_element(family, p))
            .collect::<Result<_>>()?;
        // Coordinates: the coefficient of x^lambda for each partition.
        let coord = |p: &CPoly, lambda: &Partition| -> Rat {
            let mut exps: Exponents = vec![0; self.vars()];
            for (i, &part) in lambda.parts().iter().enumerate() {
                exps[i] = part;
            }
            p.coeff(&exps)
        };
        let a: Vec<Vec<Rat>> = partitions
            .iter()
            .map(|lam| basis.iter().map(|bp| coord(bp, lam)).collect())
            .collect();
        let inverse = invert_exact(a).ok_or_else(|| {
            Error::SingularSystem(format!(
                "family {family:?} coordinates at degree {degree} (internal error)"
            ))
        })?;
        Ok(ExpansionSolver {
            algebra: self.clone(),
            degree: degree as usize,
            partitions,
            basis,
            inverse,
        })
    }

    /// Check that coefficients are constant on sorted-exponent classes
    /// and that each touched class is fully present.
    fn check_symmetric(&self, target: &CPoly) -> Result<()> {
        let mut classes: BTreeMap<Vec<u32>, (Rat, usize)> = BTreeMap::new();
        for (e, c) in target.iter() {
            let mut key = e.clone();
            key.sort_unstable_by(|a, b| b.cmp(a));
            match classes.get_mut(&key) {
                None => {
                    classes.insert(key, (c.clone(), 1));
                }
                Some((c0, count)) => {
                    if c0 != c {
                        return Err(Error::NotSymmetric(format!(
                            "coefficients differ on the class of {key:?}"
                        )));
                    }
                    *count += 1;
                }
            }
        }
        for (key, (_, count)) in &classes {
            let expected = orbit_size(key, self.vars());
            if *count != expected {
                return Err(Error::NotSymmetric(format!(
                    "class of {key:?} has {count} of {expected} monomials"
                )));
            }
        }
        Ok(())
    }
}

/// A realized family basis of one degree with its inverted coordinate
/// matrix, for repeated exact expansions.
pub struct ExpansionSolver {
    algebra: CAlgebra,
    degree: usize,
    partitions: Vec<Partition>,
    basis: Vec<CPoly>,
    inverse: Vec<Vec<Rat>>,
}

impl ExpansionSolver {
    /// Expand one homogeneous symmetric polynomial of the solver's
    /// degree. The result is verified against the full polynomial, so a
    /// non-symmetric input cannot slip through the partition
    /// coordinates.
    pub fn expand(&self, target: &CPoly) -> Result<SymExpansion> {
        if target.is_zero() {
            return Ok(SymExpansion::new());
        }
        let n = self.degree;
        if target.iter().any(|(e, _)| e.iter().sum::<u32>() as usize != n) {
            return Err(Error::NotHomogeneous { expected: n });
        }
        self.algebra.check_symmetric(target)?;

        let coords: Vec<Rat> = self
            .partitions
            .iter()
            .map(|lam| {
                let mut exps: Exponents = vec![0; self.algebra.vars()];
                for (i, &part) in lam.parts().iter().enumerate() {
                    exps[i] = part;
                }
                target.coeff(&exps)
            })
            .collect();
        let solution: Vec<Rat> = self
            .inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&coords)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .fold(Rat::zero(), |acc, x| acc + x)
            })
            .collect();

        // The solve used only partition coordinates; confirm it
        // reproduces every coefficient of the target.
        let mut recon = CPoly::zero(self.algebra.vars());
        for (c, bp) in solution.iter().zip(&self.basis) {
            recon = recon.add(&bp.scale(c))?;
        }
        if &recon != target {
            return Err(Error::NotSymmetric(
                "expansion does not reproduce the polynomial".into(),
            ));
        }

        let mut out = SymExpansion::new();
        for (p, c) in self.partitions.iter().zip(solution) {
            if !c.is_zero() {
                out.insert(p.clone(), c);
            }
        }
        Ok(out)
    }

    /// The realized family element indexed by `lambda`.
    pub fn basis_element(&self, lambda: &Partition) -> Option<&CPoly> {
        self.partitions
            .iter()
            .position(|p| p == lambda)
            .map(|i| &self.basis[i])
    }
}

/// Number of distinct rearrangements of a sorted exponent vector over
/// `vars` slots (zeros included).
fn orbit_size(sorted_desc: &[u32], vars: usize) -> usize {
    let nonzero = sorted_desc.iter().filter(|&&e| e > 0).count();
    let zeros = vars - nonzero;
    // vars! / (prod over value multiplicities, zeros included)
    let mut num = num::BigInt::one();
    for i in 1..=vars {
        num *= num::BigInt::from(i);
    }
    let mut den = num::BigInt::one();
    for i in 1..=zeros {
        den *= num::BigInt::from(i);
    }
    let mut i = 0;
    while i < nonzero {
        let v = sorted_desc[i];
        let mut mult = 0usize;
        while i < nonzero && sorted_desc[i] == v {
            mult += 1;
            i += 1;
        }
        for k in 1..=mult {
            den *= num::BigInt::from(k);
        }
    }
    let q = num / den;
    q.try_into().expect("orbit size fits in usize")
}

/// Exact Gauss-Jordan inversion over the rationals. Returns `None` when
/// the matrix is singular.
fn invert_exact(mut a: Vec<Vec<Rat>>) -> Option<Vec<Vec<Rat>>> {
    let dim = a.len();
    let mut inv: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let d = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &d;
        }
        for x in inv[col].iter_mut() {
            *x /= &d;
        }
        for r in 0..dim {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..dim {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
                let delta = &factor * &inv[col][c];
                inv[r][c] -= delta;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn complete_two_in_elementary() {
        let alg = CAlgebra::new(4).unwrap();
        let h2 = alg.complete(2).unwrap();
        let exp = alg.expand(&h2, SymFamily::Elementary).unwrap();
        let mut expected = SymExpansion::new();
        expected.insert(pt(&[2]), rat(-1));
        expected.insert(pt(&[1, 1]), rat(1));
        assert_eq!(exp, expected);
    }

    #[test]
    fn power_is_its_own_expansion() {
        let alg = CAlgebra::new(5).unwrap();
        for n in 1..=5u32 {
            let p = alg.power(n).unwrap();
            let exp = alg.expand(&p, SymFamily::Power).unwrap();
            assert_eq!(exp.len(), 1);
            assert_eq!(exp[&pt(&[n])], rat(1));
        }
    }

    #[test]
    fn monomial_one_one_is_elementary_two() {
        let alg = CAlgebra::new(4).unwrap();
        let m = alg.monomial_sym(&pt(&[1, 1])).unwrap();
        let exp = alg.expand(&m, SymFamily::Elementary).unwrap();
        assert_eq!(exp.len(), 1);
        assert_eq!(exp[&pt(&[2])], rat(1));
    }

    #[test]
    fn omega_swaps_families_and_fixes_power_up_to_sign() {
        let alg = CAlgebra::new(5).unwrap();
        for n in 1..=4u32 {
            let e = alg.elementary(n).unwrap();
            let h = alg.complete(n).unwrap();
            assert_eq!(alg.omega(&e).unwrap(), h);
            assert_eq!(alg.omega(&h).unwrap(), e);
            let p = alg.power(n).unwrap();
            let expected = p.scale(&crate::rational::sign(i64::from(n) - 1));
            assert_eq!(alg.omega(&p).unwrap(), expected);
        }
    }

    #[test]
    fn forgotten_family_matches_omega_of_monomial() {
        let alg = CAlgebra::new(5).unwrap();
        for lam in enumerate_partitions(4) {
            let f = alg.family_element(SymFamily::Forgotten, &lam).unwrap();
            let m = alg.monomial_sym(&lam).unwrap();
            assert_eq!(f, alg.omega(&m).unwrap(), "lambda={lam}");
        }
    }

    #[test]
    fn rejects_non_symmetric_input() {
        let alg = CAlgebra::new(3).unwrap();
        // A single monomial x1^2 is not symmetric.
        let p2 = alg.power(2).unwrap();
        let m = alg.monomial_sym(&pt(&[2])).unwrap();
        assert_eq!(p2, m);
        let mut lopsided = CPoly::zero(3);
        lopsided.add_term(vec![2, 0, 0], rat(1));
        assert!(matches!(
            alg.expand(&lopsided, SymFamily::Elementary),
            Err(Error::NotSymmetric(_))
        ));
        // Quasisymmetric but not symmetric.
        let mq = alg
            .monomial_qsym(&crate::Composition::new(vec![2, 1]).unwrap())
            .unwrap();
        assert!(alg.expand(&mq, SymFamily::Monomial).is_err());
    }

    #[test]
    fn monomial_expansion_reads_off_coefficients() {
        let alg = CAlgebra::new(4).unwrap();
        // h3 = m3 + m21 + m111.
        let h3 = alg.complete(3).unwrap();
        let exp = alg.expand(&h3, SymFamily::Monomial).unwrap();
        assert_eq!(exp[&pt(&[3])], rat(1));
        assert_eq!(exp[&pt(&[2, 1])], rat(1));
        assert_eq!(exp[&pt(&[1, 1, 1])], rat(1));
    }
}
