//! Composition-indexed exact transition matrices between the bases of
//! both spaces, the named structural matrices (refinement incidence,
//! sign and centralizer diagonals, involution permutations, power-sum
//! expansions), and the verification of the matrix-identity suite.
//!
//! Rows and columns follow the canonical composition order of
//! [`crate::compositions::enumerate_compositions`]; row `a` of the
//! change-of-basis matrix from basis `a` to basis `b` lists the
//! coefficients of the `a`-vector expanded in `b`.

use std::fmt;

use num::{One, Zero};

use crate::compositions::{enumerate_compositions, Composition, IndexInvolution};
use crate::nsym::{NSymBasis, NSymElem};
use crate::qsym::{z_of, QSymBasis, QSymElem};
use crate::rational::{format_rat, sign, Rat};
use crate::report::Report;
use crate::{Error, Result};

/// A dense square matrix of exact rationals indexed by the compositions
/// of `n` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    n: u32,
    dim: usize,
    entries: Vec<Rat>, // row-major
}

impl TransitionMatrix {
    fn dim_for(n: u32) -> usize {
        if n == 0 {
            1
        } else {
            1usize << (n - 1)
        }
    }

    pub fn zero(n: u32) -> Self {
        let dim = Self::dim_for(n);
        TransitionMatrix {
            n,
            dim,
            entries: vec![Rat::zero(); dim * dim],
        }
    }

    pub fn identity(n: u32) -> Self {
        let mut m = Self::zero(n);
        for i in 0..m.dim {
            m.entries[i * m.dim + i] = Rat::one();
        }
        m
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(&Composition, &Composition) -> Rat) -> Self {
        let comps = enumerate_compositions(n);
        let mut m = Self::zero(n);
        for (i, a) in comps.iter().enumerate() {
            for (j, b) in comps.iter().enumerate() {
                m.entries[i * m.dim + j] = f(a, b);
            }
        }
        m
    }

    pub fn diagonal(n: u32, mut f: impl FnMut(&Composition) -> Rat) -> Self {
        let comps = enumerate_compositions(n);
        let mut m = Self::zero(n);
        for (i, a) in comps.iter().enumerate() {
            m.entries[i * m.dim + i] = f(a);
        }
        m
    }

    /// The permutation matrix of an index involution: entry `(a, b)` is
    /// 1 exactly when the involution maps `a` to `b`.
    pub fn involution_permutation(n: u32, kind: IndexInvolution) -> Self {
        let mut m = Self::zero(n);
        for (i, a) in enumerate_compositions(n).iter().enumerate() {
            let j = a.involution(kind).canonical_index();
            m.entries[i * m.dim + j] = Rat::one();
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rat {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rat) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, other: &TransitionMatrix) -> Result<TransitionMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut out = TransitionMatrix::zero(self.n);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let delta = a * b;
                    out.entries[i * self.dim + j] += delta;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> TransitionMatrix {
        let mut out = TransitionMatrix::zero(self.n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[j * self.dim + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Exact inverse by Gauss-Jordan elimination over the rationals.
    pub fn inverse(&self) -> Result<TransitionMatrix> {
        let dim = self.dim;
        let mut a = self.entries.clone();
        let mut inv = TransitionMatrix::identity(self.n).entries;
        for col in 0..dim {
            let pivot = (col..dim)
                .find(|&r| !a[r * dim + col].is_zero())
                .ok_or_else(|| {
                    Error::SingularSystem(format!("matrix of degree {} is singular", self.n))
                })?;
            if pivot != col {
                for j in 0..dim {
                    a.swap(col * dim + j, pivot * dim + j);
                    inv.swap(col * dim + j, pivot * dim + j);
                }
            }
            let d = a[col * dim + col].clone();
            for j in 0..dim {
                a[col * dim + j] /= &d;
                inv[col * dim + j] /= &d;
            }
            for r in 0..dim {
                if r == col || a[r * dim + col].is_zero() {
                    continue;
                }
                let factor = a[r * dim + col].clone();
                for j in 0..dim {
                    let delta = &factor * &a[col * dim + j];
                    a[r * dim + j] -= delta;
                    let delta = &factor * &inv[col * dim + j];
                    inv[r * dim + j] -= delta;
                }
            }
        }
        Ok(TransitionMatrix {
            n: self.n,
            dim,
            entries: inv,
        })
    }

    pub fn is_identity(&self) -> bool {
        self == &TransitionMatrix::identity(self.n)
    }

    /// True when the nonzero entries are exactly ones on the
    /// antidiagonal.
    pub fn is_antidiagonal_permutation(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let expected = if i + j == self.dim - 1 {
                    Rat::one()
                } else {
                    Rat::zero()
                };
                if self.get(i, j) != &expected {
                    return false;
                }
            }
        }
        true
    }

    /// CSV rendering: a header row of column indices, then one row per
    /// composition with its index in the first cell.
    pub fn to_csv(&self) -> String {
        let comps = enumerate_compositions(self.n);
        let mut out = String::new();
        out.push_str("index");
        for c in &comps {
            out.push(',');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        for (i, c) in comps.iter().enumerate() {
            out.push_str(&c.to_string());
            for j in 0..self.dim {
                out.push(',');
                out.push_str(&format_rat(self.get(i, j)));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = (0..self.dim)
            .map(|j| {
                (0..self.dim)
                    .map(|i| format_rat(self.get(i, j)).len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        for i in 0..self.dim {
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", format_rat(self.get(i, j)), width = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Which space a change-of-basis matrix lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    NSym,
    QSym,
}

/// Change-of-basis matrix on the noncommutative side: row `alpha` holds
/// the coefficients of the `from`-vector indexed by `alpha` expanded in
/// the `to` basis.
pub fn nsym_cob(from: NSymBasis, to: NSymBasis, n: u32) -> TransitionMatrix {
    let comps = enumerate_compositions(n);
    let mut m = TransitionMatrix::zero(n);
    for (i, a) in comps.iter().enumerate() {
        let row = NSymElem::basis_vector(from, a.clone()).convert(to);
        for (b, c) in row.iter() {
            m.set(i, b.canonical_index(), c.clone());
        }
    }
    m
}

/// Change-of-basis matrix on the quasisymmetric side.
pub fn qsym_cob(from: QSymBasis, to: QSymBasis, n: u32) -> TransitionMatrix {
    let comps = enumerate_compositions(n);
    let mut m = TransitionMatrix::zero(n);
    for (i, a) in comps.iter().enumerate() {
        let row = QSymElem::basis_vector(from, a.clone()).convert(to);
        for (b, c) in row.iter() {
            m.set(i, b.canonical_index(), c.clone());
        }
    }
    m
}

/// The named structural matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedMatrix {
    /// `K`: entry `(a, b)` is 1 exactly when `b` refines `a` (the
    /// fundamental-to-monomial matrix).
    RefinementIncidence,
    /// `eps`: the diagonal of signs `(-1)^(|a| - l(a))`.
    SignDiagonal,
    /// `z`: the diagonal of centralizer sizes.
    CentralizerDiagonal,
    /// `J_psi`: the complement permutation.
    ComplementPermutation,
    /// `J_rho`: the reversal permutation.
    ReversalPermutation,
    /// `J_omega`: the transpose permutation.
    TransposePermutation,
    /// `L_psi`: the first-kind power sums expanded in the monomial basis.
    PowerFirstToMonomial,
    /// `L_phi`: the second-kind power sums expanded in the monomial
    /// basis.
    PowerSecondToMonomial,
}

impl NamedMatrix {
    pub const ALL: [NamedMatrix; 8] = [
        NamedMatrix::RefinementIncidence,
        NamedMatrix::SignDiagonal,
        NamedMatrix::CentralizerDiagonal,
        NamedMatrix::ComplementPermutation,
        NamedMatrix::ReversalPermutation,
        NamedMatrix::TransposePermutation,
        NamedMatrix::PowerFirstToMonomial,
        NamedMatrix::PowerSecondToMonomial,
    ];

    /// The short name used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            NamedMatrix::RefinementIncidence => "K",
            NamedMatrix::SignDiagonal => "eps",
            NamedMatrix::CentralizerDiagonal => "z",
            NamedMatrix::ComplementPermutation => "J_psi",
            NamedMatrix::ReversalPermutation => "J_rho",
            NamedMatrix::TransposePermutation => "J_omega",
            NamedMatrix::PowerFirstToMonomial => "L_psi",
            NamedMatrix::PowerSecondToMonomial => "L_phi",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|m| m.name() == name)
            .ok_or_else(|| Error::UnknownBasis(name.to_string()))
    }
}

/// Build a named matrix at degree `n`.
pub fn named_matrix(which: NamedMatrix, n: u32) -> TransitionMatrix {
    match which {
        NamedMatrix::RefinementIncidence => TransitionMatrix::from_fn(n, |a, b| {
            if b.refines(a).is_some() {
                Rat::one()
            } else {
                Rat::zero()
            }
        }),
        NamedMatrix::SignDiagonal => {
            TransitionMatrix::diagonal(n, |a| sign(a.size() as i64 - a.len() as i64))
        }
        NamedMatrix::CentralizerDiagonal => TransitionMatrix::diagonal(n, z_of),
        NamedMatrix::ComplementPermutation => {
            TransitionMatrix::involution_permutation(n, IndexInvolution::Complement)
        }
        NamedMatrix::ReversalPermutation => {
            TransitionMatrix::involution_permutation(n, IndexInvolution::Reverse)
        }
        NamedMatrix::TransposePermutation => {
            TransitionMatrix::involution_permutation(n, IndexInvolution::Transpose)
        }
        NamedMatrix::PowerFirstToMonomial => {
            qsym_cob(QSymBasis::PowerSumFirst, QSymBasis::Monomial, n)
        }
        NamedMatrix::PowerSecondToMonomial => {
            qsym_cob(QSymBasis::PowerSumSecond, QSymBasis::Monomial, n)
        }
    }
}

/// Evaluate the full matrix-identity suite at degree `n`.
///
/// Every identity is an exact matrix equation between a change-of-basis
/// matrix built row by row from the element-level conversions and a
/// product of named matrices. Two printed forms of the first-kind
/// power-sum identities circulate with the involution permutation on the
/// wrong side; the forms verified here are the ones forced by the
/// element-level conversions, with the permutation conjugating the
/// expansion matrix.
pub fn check_identities(n: u32) -> Report {
    use NSymBasis::{Complete, Elementary, Ribbon};
    use QSymBasis::{Forgotten, Fundamental, Monomial};
    let n_psi = NSymBasis::PowerSumFirst;
    let n_phi = NSymBasis::PowerSumSecond;
    let q_psi = QSymBasis::PowerSumFirst;
    let q_phi = QSymBasis::PowerSumSecond;

    let mut report = Report::new();
    let k = named_matrix(NamedMatrix::RefinementIncidence, n);
    let kt = k.transpose();
    let eps = named_matrix(NamedMatrix::SignDiagonal, n);
    let z = named_matrix(NamedMatrix::CentralizerDiagonal, n);
    let z_inv = z.inverse().expect("z is invertible");
    let j_psi = named_matrix(NamedMatrix::ComplementPermutation, n);
    let j_rho = named_matrix(NamedMatrix::ReversalPermutation, n);
    let j_omega = named_matrix(NamedMatrix::TransposePermutation, n);
    let l_psi = named_matrix(NamedMatrix::PowerFirstToMonomial, n);
    let l_phi = named_matrix(NamedMatrix::PowerSecondToMonomial, n);

    let prod = |ms: &[&TransitionMatrix]| -> TransitionMatrix {
        let mut acc = ms[0].clone();
        for m in &ms[1..] {
            acc = acc.mul(m).expect("equal dims");
        }
        acc
    };
    let mut eq = |name: String, lhs: &TransitionMatrix, rhs: &TransitionMatrix| {
        report.check(name, lhs == rhs, || {
            for i in 0..lhs.dim() {
                for j in 0..lhs.dim() {
                    if lhs.get(i, j) != rhs.get(i, j) {
                        return format!(
                            "entry ({i},{j}): {} vs {}",
                            format_rat(lhs.get(i, j)),
                            format_rat(rhs.get(i, j))
                        );
                    }
                }
            }
            "matrices differ".into()
        });
    };

    // The incidence matrix and its signed inverse.
    eq(
        format!("M(F,M) = K (n={n})"),
        &qsym_cob(Fundamental, Monomial, n),
        &k,
    );
    eq(
        format!("K^-1 = eps K eps (n={n})"),
        &k.inverse().expect("unitriangular"),
        &prod(&[&eps, &k, &eps]),
    );
    eq(
        format!("M(M,F) = eps K eps (n={n})"),
        &qsym_cob(Monomial, Fundamental, n),
        &prod(&[&eps, &k, &eps]),
    );
    eq(
        format!("M(h,r) = K^t (n={n})"),
        &nsym_cob(Complete, Ribbon, n),
        &kt,
    );
    eq(
        format!("M(r,h) = eps K^t eps (n={n})"),
        &nsym_cob(Ribbon, Complete, n),
        &prod(&[&eps, &kt, &eps]),
    );

    // The six two-sided relations through the complement permutation.
    let eke = prod(&[&eps, &k, &eps]);
    let ekte = prod(&[&eps, &kt, &eps]);
    eq(
        format!("M(M,For) = eps K eps J_psi K (n={n})"),
        &qsym_cob(Monomial, Forgotten, n),
        &prod(&[&eke, &j_psi, &k]),
    );
    eq(
        format!("M(For,M) = eps K eps J_psi K (n={n})"),
        &qsym_cob(Forgotten, Monomial, n),
        &prod(&[&eke, &j_psi, &k]),
    );
    eq(
        format!("M(For,F) = eps K eps J_psi (n={n})"),
        &qsym_cob(Forgotten, Fundamental, n),
        &prod(&[&eke, &j_psi]),
    );
    eq(
        format!("M(F,For) = J_psi K (n={n})"),
        &qsym_cob(Fundamental, Forgotten, n),
        &prod(&[&j_psi, &k]),
    );
    eq(
        format!("M(h,e) = K^t J_psi eps K^t eps (n={n})"),
        &nsym_cob(Complete, Elementary, n),
        &prod(&[&kt, &j_psi, &ekte]),
    );
    eq(
        format!("M(e,h) = K^t J_psi eps K^t eps (n={n})"),
        &nsym_cob(Elementary, Complete, n),
        &prod(&[&kt, &j_psi, &ekte]),
    );
    eq(
        format!("M(e,r) = K^t J_psi (n={n})"),
        &nsym_cob(Elementary, Ribbon, n),
        &prod(&[&kt, &j_psi]),
    );
    eq(
        format!("M(r,e) = J_psi eps K^t eps (n={n})"),
        &nsym_cob(Ribbon, Elementary, n),
        &prod(&[&j_psi, &ekte]),
    );

    // Power-sum expansion matrices on the quasisymmetric side.
    eq(
        format!("M(Psi,M) = L_psi (n={n})"),
        &qsym_cob(q_psi, Monomial, n),
        &l_psi,
    );
    eq(
        format!("M(Phi,M) = L_phi (n={n})"),
        &qsym_cob(q_phi, Monomial, n),
        &l_phi,
    );
    eq(
        format!("M(Phi,For) = eps L_phi (n={n})"),
        &qsym_cob(q_phi, Forgotten, n),
        &prod(&[&eps, &l_phi]),
    );
    eq(
        format!("M(Psi,For) = eps J_rho L_psi J_rho (n={n})"),
        &qsym_cob(q_psi, Forgotten, n),
        &prod(&[&eps, &j_rho, &l_psi, &j_rho]),
    );
    eq(
        format!("M(Phi,F) = L_phi eps K eps (n={n})"),
        &qsym_cob(q_phi, Fundamental, n),
        &prod(&[&l_phi, &eke]),
    );
    eq(
        format!("M(Psi,F) = L_psi eps K eps (n={n})"),
        &qsym_cob(q_psi, Fundamental, n),
        &prod(&[&l_psi, &eke]),
    );

    // Power-sum expansion matrices on the noncommutative side: the
    // transposes of the z-normalized quasisymmetric expansions.
    let zl_psi_t = prod(&[&z_inv, &l_psi]).transpose();
    let zl_phi_t = prod(&[&z_inv, &l_phi]).transpose();
    eq(
        format!("M(h,phi) = (z^-1 L_phi)^t (n={n})"),
        &nsym_cob(Complete, n_phi, n),
        &zl_phi_t,
    );
    eq(
        format!("M(h,psi) = (z^-1 L_psi)^t (n={n})"),
        &nsym_cob(Complete, n_psi, n),
        &zl_psi_t,
    );
    eq(
        format!("M(e,phi) = (eps z^-1 L_phi)^t (n={n})"),
        &nsym_cob(Elementary, n_phi, n),
        &prod(&[&eps, &z_inv, &l_phi]).transpose(),
    );
    eq(
        format!("M(e,psi) = (z^-1 eps J_rho L_psi J_rho)^t (n={n})"),
        &nsym_cob(Elementary, n_psi, n),
        &prod(&[&z_inv, &eps, &j_rho, &l_psi, &j_rho]).transpose(),
    );
    eq(
        format!("M(r,phi) = eps K^t eps (z^-1 L_phi)^t (n={n})"),
        &nsym_cob(Ribbon, n_phi, n),
        &prod(&[&ekte, &zl_phi_t]),
    );
    eq(
        format!("M(r,psi) = eps K^t eps (z^-1 L_psi)^t (n={n})"),
        &nsym_cob(Ribbon, n_psi, n),
        &prod(&[&ekte, &zl_psi_t]),
    );
    eq(
        format!("M(Phi,Psi) = L_phi L_psi^-1 (n={n})"),
        &qsym_cob(q_phi, q_psi, n),
        &prod(&[&l_phi, &l_psi.inverse().expect("invertible")]),
    );

    // Duality transposes for the two unit dual pairs.
    eq(
        format!("M(F,M) = M(h,r)^t (n={n})"),
        &qsym_cob(Fundamental, Monomial, n),
        &nsym_cob(Complete, Ribbon, n).transpose(),
    );
    eq(
        format!("M(M,F) = M(r,h)^t (n={n})"),
        &qsym_cob(Monomial, Fundamental, n),
        &nsym_cob(Ribbon, Complete, n).transpose(),
    );

    // Involution permutations square to the identity and are symmetric;
    // the complement permutation is exactly antidiagonal in the
    // canonical order.
    for (name, j) in [("J_psi", &j_psi), ("J_rho", &j_rho), ("J_omega", &j_omega)] {
        report.check(
            format!("{name}^2 = identity (n={n})"),
            j.mul(j).expect("equal dims").is_identity(),
            || "permutation does not square to the identity".into(),
        );
        report.check(
            format!("{name}^t = {name} (n={n})"),
            &j.transpose() == j,
            || "permutation is not symmetric".into(),
        );
    }
    report.check(
        format!("J_psi is the antidiagonal permutation (n={n})"),
        j_psi.is_antidiagonal_permutation(),
        || "complement permutation is not antidiagonal".into(),
    );

    // Inverse law on every ordered basis pair, via products and via
    // exact elimination.
    for space in [Space::NSym, Space::QSym] {
        let cob = |a: usize, b: usize| match space {
            Space::NSym => nsym_cob(NSymBasis::ALL[a], NSymBasis::ALL[b], n),
            Space::QSym => qsym_cob(QSymBasis::ALL[a], QSymBasis::ALL[b], n),
        };
        let tag = |a: usize| match space {
            Space::NSym => NSymBasis::ALL[a].tag(),
            Space::QSym => QSymBasis::ALL[a].tag(),
        };
        let mut ok = true;
        let mut detail = String::new();
        for a in 0..5 {
            for b in 0..5 {
                if a == b {
                    continue;
                }
                let ab = cob(a, b);
                let ba = cob(b, a);
                if !ab.mul(&ba).expect("equal dims").is_identity() {
                    ok = false;
                    detail = format!("M({},{}) M({},{}) != identity", tag(a), tag(b), tag(b), tag(a));
                    break;
                }
                if ba.inverse().ok().as_ref() != Some(&ab) {
                    ok = false;
                    detail = format!("M({},{}) != M({},{})^-1", tag(a), tag(b), tag(b), tag(a));
                    break;
                }
            }
            if !ok {
                break;
            }
        }
        report.check(
            format!("inverse law on all basis pairs in {space:?} (n={n})"),
            ok,
            || detail,
        );
    }

    // Composition law on basis triples: exhaustive up to dimension 32,
    // a fixed sample beyond that.
    for space in [Space::NSym, Space::QSym] {
        let cob = |a: usize, b: usize| match space {
            Space::NSym => nsym_cob(NSymBasis::ALL[a], NSymBasis::ALL[b], n),
            Space::QSym => qsym_cob(QSymBasis::ALL[a], QSymBasis::ALL[b], n),
        };
        let exhaustive = TransitionMatrix::dim_for(n) <= 32;
        let triples: Vec<(usize, usize, usize)> = if exhaustive {
            (0..5)
                .flat_map(|d| (0..5).flat_map(move |b| (0..5).map(move |a| (d, b, a))))
                .collect()
        } else {
            vec![(0, 1, 2), (3, 1, 4), (2, 0, 3), (4, 2, 1)]
        };
        let mut ok = true;
        let mut detail = String::new();
        for (d, b, a) in triples {
            let lhs = cob(d, b).mul(&cob(b, a)).expect("equal dims");
            let rhs = cob(d, a);
            if lhs != rhs {
                ok = false;
                detail = format!("triple ({d},{b},{a}) fails");
                break;
            }
        }
        report.check(
            format!(
                "composition law M(d,b)M(b,a) = M(d,a) in {space:?} ({} triples, n={n})",
                if exhaustive { "all" } else { "sampled" }
            ),
            ok,
            || detail,
        );
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{
        refined_stat_on_blocks, refinements_with_blocks, RefinedStat,
    };
    use crate::rational::rat;

    #[test]
    fn small_incidence_matrices() {
        let k2 = named_matrix(NamedMatrix::RefinementIncidence, 2);
        assert_eq!(k2.get(0, 0), &rat(1));
        assert_eq!(k2.get(0, 1), &rat(1));
        assert_eq!(k2.get(1, 0), &rat(0));
        assert_eq!(k2.get(1, 1), &rat(1));
        assert_eq!(k2, qsym_cob(QSymBasis::Fundamental, QSymBasis::Monomial, 2));
        let k1 = named_matrix(NamedMatrix::RefinementIncidence, 1);
        assert_eq!(k1.dim(), 1);
        assert_eq!(k1.get(0, 0), &rat(1));
    }

    #[test]
    fn sign_diagonal_small() {
        let eps = named_matrix(NamedMatrix::SignDiagonal, 2);
        assert_eq!(eps.get(0, 0), &rat(-1)); // (2): sign (-1)^(2-1)
        assert_eq!(eps.get(1, 1), &rat(1)); // (1,1)
    }

    #[test]
    fn ribbon_to_complete_small() {
        let m = nsym_cob(NSymBasis::Ribbon, NSymBasis::Complete, 2);
        // r[2] = h[2]; r[1,1] = h[1,1] - h[2].
        assert_eq!(m.get(0, 0), &rat(1));
        assert_eq!(m.get(0, 1), &rat(0));
        assert_eq!(m.get(1, 0), &rat(-1));
        assert_eq!(m.get(1, 1), &rat(1));
    }

    #[test]
    fn complement_permutation_is_antidiagonal() {
        for n in 1..=8u32 {
            let j = named_matrix(NamedMatrix::ComplementPermutation, n);
            assert!(j.is_antidiagonal_permutation(), "n={n}");
        }
    }

    #[test]
    fn identity_to_self_is_identity() {
        for n in 1..=5u32 {
            for b in NSymBasis::ALL {
                assert!(nsym_cob(b, b, n).is_identity());
            }
            for b in QSymBasis::ALL {
                assert!(qsym_cob(b, b, n).is_identity());
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = nsym_cob(NSymBasis::Complete, NSymBasis::PowerSumSecond, 5);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
        // A singular matrix reports an error.
        let z = TransitionMatrix::zero(3);
        assert!(matches!(z.inverse(), Err(Error::SingularSystem(_))));
    }

    #[test]
    fn cob_entries_match_closed_form_statistics() {
        // The complete-to-first-kind matrix entry at (a, b) is the
        // reciprocal partial-sums product of b refining a; its
        // elementwise construction must match this closed form.
        for n in 1..=6u32 {
            let m = nsym_cob(NSymBasis::Complete, NSymBasis::PowerSumFirst, n);
            let mut expected = TransitionMatrix::zero(n);
            for alpha in enumerate_compositions(n) {
                for (beta, blocks) in refinements_with_blocks(&alpha) {
                    let piu = refined_stat_on_blocks(&blocks, RefinedStat::PartialSumsProducts);
                    expected.set(
                        alpha.canonical_index(),
                        beta.canonical_index(),
                        piu.recip(),
                    );
                }
            }
            assert_eq!(m, expected, "n={n}");
        }
    }

    #[test]
    fn csv_round_shape() {
        let m = named_matrix(NamedMatrix::RefinementIncidence, 2);
        let csv = m.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "index,[2],[1,1]");
        assert_eq!(lines[1], "[2],1,1");
        assert_eq!(lines[2], "[1,1],0,1");
    }

    #[test]
    fn identity_suite_small_degrees() {
        for n in 1..=5u32 {
            let report = check_identities(n);
            assert!(report.passed(), "n={n}: {}", report.summary());
        }
    }
}
