//! Brick tabloids on the partition side, walls and indexed walls on the
//! composition side, their statistics, and the verification suites that
//! recompute every wall and brick-tabloid expansion combinatorially and
//! compare it with the abstract conversions (for walls) or with the
//! independent linear-solve oracle (for brick tabloids).

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use itertools::Itertools;

use crate::compositions::{
    coarsenings_with_blocks, enumerate_compositions, enumerate_partitions,
    refined_stat_on_blocks, refinements_with_blocks, Composition,
    Partition, RefinedStat, Stat,
};
use crate::nsym::{NSymBasis, NSymElem};
use crate::polyreal::{CAlgebra, SymFamily};
use crate::qsym::{z_of, QSymBasis, QSymElem};
use crate::rational::{factorial, rat, sign, Rat};
use crate::report::Report;
use crate::{Error, Result};

/// The unique wall of a given shape and brick type: the bricks of the
/// type laid left-to-right, bottom-up into the rows of the shape. Exists
/// exactly when the type refines the shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    shape: Composition,
    courses: Vec<Composition>, // bottom-up, one block per part of the shape
}

/// Statistics of a wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WallStat {
    /// Product of the sizes of the bricks at the right end of each
    /// course.
    LastParts,
    /// Product of the sizes of the bricks at the left end of each
    /// course.
    FirstParts,
    /// Product over courses of the number of bricks.
    BrickCounts,
    /// Product over courses of the factorial of the number of bricks.
    BrickCountFactorials,
}

impl Wall {
    /// Build the wall of shape `shape` with bricks `brick_type`. The
    /// error names the first course that cannot be assembled.
    pub fn new(shape: &Composition, brick_type: &Composition) -> Result<Wall> {
        if shape.size() != brick_type.size() {
            return Err(Error::SizeMismatch {
                left: shape.size(),
                right: brick_type.size(),
            });
        }
        let parts = brick_type.parts();
        let mut courses = Vec::with_capacity(shape.len());
        let mut i = 0usize;
        for (course_index, &target) in shape.parts().iter().enumerate() {
            let start = i;
            let mut acc = 0u32;
            while acc < target && i < parts.len() {
                acc += parts[i];
                i += 1;
            }
            if acc != target {
                return Err(Error::NotARefinement {
                    finer: brick_type.to_string(),
                    coarser: shape.to_string(),
                    course: Some(course_index + 1),
                });
            }
            courses.push(Composition::new(parts[start..i].to_vec()).expect("positive parts"));
        }
        Ok(Wall {
            shape: shape.clone(),
            courses,
        })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    /// The brick type: all brick sizes in laying order.
    pub fn brick_type(&self) -> Composition {
        let mut parts = Vec::new();
        for c in &self.courses {
            parts.extend_from_slice(c.parts());
        }
        Composition::new(parts).expect("positive parts")
    }

    /// The courses, bottom-up.
    pub fn courses(&self) -> &[Composition] {
        &self.courses
    }

    pub fn size(&self) -> u32 {
        self.shape.size()
    }

    pub fn brick_count(&self) -> usize {
        self.courses.iter().map(|c| c.len()).sum()
    }

    pub fn stat(&self, kind: WallStat) -> Rat {
        let refined = match kind {
            WallStat::LastParts => RefinedStat::LastParts,
            WallStat::FirstParts => RefinedStat::FirstParts,
            WallStat::BrickCounts => RefinedStat::Lengths,
            WallStat::BrickCountFactorials => RefinedStat::LengthFactorials,
        };
        refined_stat_on_blocks(&self.courses, refined)
    }

    /// ASCII rendering, top course first; each brick is a bracketed run.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for course in self.courses.iter().rev() {
            for &b in course.parts() {
                out.push('[');
                out.push_str(&b.to_string());
                out.push(']');
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "wall shape={} type={}", self.shape, self.brick_type())
    }
}

/// All walls of the given shape: one per refinement of the shape.
pub fn walls_of_shape(shape: &Composition) -> Vec<Wall> {
    refinements_with_blocks(shape)
        .into_iter()
        .map(|(_, blocks)| Wall {
            shape: shape.clone(),
            courses: blocks,
        })
        .collect()
}

/// All walls of the given brick type: one per coarsening of the type.
pub fn walls_of_type(brick_type: &Composition) -> Vec<Wall> {
    coarsenings_with_blocks(brick_type)
        .into_iter()
        .map(|(shape, blocks)| Wall {
            shape,
            courses: blocks,
        })
        .collect()
}

/// A wall with its bricks labeled `1..=count` in order of weakly
/// increasing size; bricks of equal size may carry their labels in any
/// order. `labels[i]` is the label of the `i`-th brick in laying order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedWall {
    pub wall: Wall,
    pub labels: Vec<u32>,
}

/// Number of indexed walls on a given wall: the product of the
/// factorials of the brick-size multiplicities.
pub fn indexed_wall_count(shape: &Composition, brick_type: &Composition) -> Result<Rat> {
    Wall::new(shape, brick_type)?;
    let (sorted, _) = brick_type.sort_and_z();
    let mut count = Rat::one();
    let parts = sorted.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut mult = 0u64;
        while i < parts.len() && parts[i] == v {
            mult += 1;
            i += 1;
        }
        count *= Rat::from_integer(factorial(mult));
    }
    Ok(count)
}

/// All indexed walls over the wall of the given shape and type.
pub fn enumerate_indexed_walls(
    shape: &Composition,
    brick_type: &Composition,
) -> Result<Vec<IndexedWall>> {
    let wall = Wall::new(shape, brick_type)?;
    let sizes: Vec<u32> = brick_type.parts().to_vec();
    // Positions grouped by brick size, ascending; group g takes the
    // labels after all smaller groups, permuted freely within itself.
    let mut by_size: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, &s) in sizes.iter().enumerate() {
        by_size.entry(s).or_default().push(i);
    }
    let mut assignments: Vec<Vec<u32>> = vec![vec![0; sizes.len()]];
    let mut next_label = 1u32;
    for positions in by_size.values() {
        let k = positions.len();
        let labels: Vec<u32> = (next_label..next_label + k as u32).collect();
        next_label += k as u32;
        let mut grown = Vec::new();
        for perm in labels.iter().permutations(k) {
            for base in &assignments {
                let mut a = base.clone();
                for (slot, &&label) in positions.iter().zip(perm.iter()) {
                    a[*slot] = label;
                }
                grown.push(a);
            }
        }
        assignments = grown;
    }
    assignments.sort();
    Ok(assignments
        .into_iter()
        .map(|labels| IndexedWall {
            wall: wall.clone(),
            labels,
        })
        .collect())
}

/// A filling of a partition's rows by bricks: each row is the ordered
/// list of its brick lengths. Bricks of equal length are
/// indistinguishable, so two fillings are the same exactly when their
/// row sequences agree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BrickTabloid {
    rows: Vec<Vec<u32>>,
}

impl BrickTabloid {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.iter().sum()).collect())
            .expect("rows of a partition shape")
    }

    pub fn brick_type(&self) -> Partition {
        let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(all).expect("positive bricks")
    }

    /// Product of the rightmost brick lengths over the rows.
    pub fn weight(&self) -> Rat {
        let mut w = Rat::one();
        for row in &self.rows {
            w *= rat(i64::from(*row.last().expect("nonempty row")));
        }
        w
    }

    /// ASCII rendering, top row first.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in self.rows.iter().rev() {
            for &b in row {
                out.push('[');
                out.push_str(&b.to_string());
                out.push(']');
            }
            out.push('\n');
        }
        out
    }
}

/// All fillings of the rows of `shape` by the multiset of bricks of
/// `brick_type`.
pub fn brick_tabloids(shape: &Partition, brick_type: &Partition) -> Result<Vec<BrickTabloid>> {
    if shape.size() != brick_type.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: brick_type.size(),
        });
    }
    let mut available: BTreeMap<u32, u32> = BTreeMap::new();
    for &b in brick_type.parts() {
        *available.entry(b).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    fill_rows(shape.parts(), 0, &mut available, &mut rows, &mut out);
    Ok(out)
}

fn fill_rows(
    shape: &[u32],
    row: usize,
    available: &mut BTreeMap<u32, u32>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<BrickTabloid>,
) {
    if row == shape.len() {
        out.push(BrickTabloid { rows: rows.clone() });
        return;
    }
    let mut current = Vec::new();
    fill_one_row(shape, row, shape[row], available, &mut current, rows, out);
}

fn fill_one_row(
    shape: &[u32],
    row: usize,
    remaining: u32,
    available: &mut BTreeMap<u32, u32>,
    current: &mut Vec<u32>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<BrickTabloid>,
) {
    if remaining == 0 {
        rows.push(current.clone());
        fill_rows(shape, row + 1, available, rows, out);
        rows.pop();
        return;
    }
    // Choose the next brick by value; equal bricks are
    // indistinguishable, so iterating distinct values never repeats a
    // row sequence.
    let choices: Vec<u32> = available
        .iter()
        .filter(|&(&b, &count)| count > 0 && b <= remaining)
        .map(|(&b, _)| b)
        .collect();
    for b in choices {
        *available.get_mut(&b).unwrap() -= 1;
        current.push(b);
        fill_one_row(shape, row, remaining - b, available, current, rows, out);
        current.pop();
        *available.get_mut(&b).unwrap() += 1;
    }
}

/// Total weight of all fillings of `shape` by `brick_type`.
pub fn tabloid_weight_sum(shape: &Partition, brick_type: &Partition) -> Result<Rat> {
    Ok(brick_tabloids(shape, brick_type)?
        .iter()
        .map(BrickTabloid::weight)
        .fold(Rat::zero(), |acc, w| acc + w))
}

/// Number of fillings whose bricks carry distinct labels, assigned by
/// weakly increasing size, such that labels increase left-to-right in
/// each row. Equal-size bricks become distinguishable, and each valid
/// distribution of labeled bricks to rows orders itself uniquely.
pub fn ordered_tabloid_count(shape: &Partition, brick_type: &Partition) -> Result<Rat> {
    if shape.size() != brick_type.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: brick_type.size(),
        });
    }
    // Distribute the labeled bricks over rows tracking remaining
    // capacity; largest first for pruning.
    let bricks: Vec<u32> = brick_type.parts().to_vec(); // already descending
    let mut capacity: Vec<u32> = shape.parts().to_vec();
    fn go(bricks: &[u32], capacity: &mut Vec<u32>) -> u64 {
        match bricks.first() {
            None => 1,
            Some(&b) => {
                let mut total = 0u64;
                for r in 0..capacity.len() {
                    if capacity[r] >= b {
                        capacity[r] -= b;
                        total += go(&bricks[1..], capacity);
                        capacity[r] += b;
                    }
                }
                total
            }
        }
    }
    Ok(rat(go(&bricks, &mut capacity) as i64))
}

/// All fillings of `shape` with bricks of any sizes: one per choice of a
/// composition of each row.
pub fn brick_tabloids_of_shape(shape: &Partition) -> Vec<BrickTabloid> {
    let mut out = vec![BrickTabloid { rows: Vec::new() }];
    for &row_len in shape.parts() {
        let rows = enumerate_compositions(row_len);
        let mut grown = Vec::with_capacity(out.len() * rows.len());
        for t in &out {
            for r in &rows {
                let mut rows2 = t.rows.clone();
                rows2.push(r.parts().to_vec());
                grown.push(BrickTabloid { rows: rows2 });
            }
        }
        out = grown;
    }
    out
}

/// Recompute each wall and indexed-wall expansion by enumeration and
/// compare it coefficientwise with the element-level conversion, for
/// every composition of `n`.
pub fn verify_wall_theorems(n: u32) -> Report {
    let mut report = Report::new();
    let comps = enumerate_compositions(n);

    // Term builders: each equation maps a composition to the term list
    // of its combinatorial right-hand side, which is then compared with
    // the element-level conversion of the left-hand side.
    type Terms = Vec<(Composition, Rat)>;
    type Builder = Box<dyn Fn(&Composition) -> Terms>;
    struct NsymCase(&'static str, NSymBasis, NSymBasis, Builder);
    struct QsymCase(&'static str, QSymBasis, QSymBasis, Builder);

    let nsym_cases: Vec<NsymCase> = vec![
        // Walls of a shape, no statistic: the elementary/complete
        // exchange.
        NsymCase(
            "e[a] = sum over walls W of shape a of (-1)^(l(type W) - |W|) h[type W]",
            NSymBasis::Elementary,
            NSymBasis::Complete,
            Box::new(|alpha| {
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| {
                        let t = w.brick_type();
                        let s = sign(t.len() as i64 - w.size() as i64);
                        (t, s)
                    })
                    .collect()
            }),
        ),
        NsymCase(
            "h[a] = sum over walls W of shape a of (-1)^(l(type W) - |W|) e[type W]",
            NSymBasis::Complete,
            NSymBasis::Elementary,
            Box::new(|alpha| {
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| {
                        let t = w.brick_type();
                        let s = sign(t.len() as i64 - w.size() as i64);
                        (t, s)
                    })
                    .collect()
            }),
        ),
        // Ribbon lines.
        NsymCase(
            "h[a] = sum over walls W of type a of r[shape W]",
            NSymBasis::Complete,
            NSymBasis::Ribbon,
            Box::new(|alpha| {
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| (w.shape().clone(), Rat::one()))
                    .collect()
            }),
        ),
        NsymCase(
            "r[a] = sum over walls W of type a of (-1)^(l(shape W) - l(type W)) h[shape W]",
            NSymBasis::Ribbon,
            NSymBasis::Complete,
            Box::new(|alpha| {
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| {
                        let s = sign(w.shape().len() as i64 - alpha.len() as i64);
                        (w.shape().clone(), s)
                    })
                    .collect()
            }),
        ),
        NsymCase(
            "e[a] = sum over walls W of type a of r[complement of shape W]",
            NSymBasis::Elementary,
            NSymBasis::Ribbon,
            Box::new(|alpha| {
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| (w.shape().complement(), Rat::one()))
                    .collect()
            }),
        ),
        NsymCase(
            "r[a] = sum over walls W of type complement(a) of (-1)^(l(shape W) - l(type W)) e[shape W]",
            NSymBasis::Ribbon,
            NSymBasis::Elementary,
            Box::new(|alpha| {
                let ac = alpha.complement();
                walls_of_type(&ac)
                    .into_iter()
                    .map(|w| {
                        let s = sign(w.shape().len() as i64 - ac.len() as i64);
                        (w.shape().clone(), s)
                    })
                    .collect()
            }),
        ),
        // Power sums of the first kind against walls of a shape.
        NsymCase(
            "psi[a] = sum over walls W of shape a of (-1)^(l(type W) - l(shape W)) lp(W) h[type W]",
            NSymBasis::PowerSumFirst,
            NSymBasis::Complete,
            Box::new(|alpha| {
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| {
                        let t = w.brick_type();
                        let c = sign(t.len() as i64 - alpha.len() as i64)
                            * w.stat(WallStat::LastParts);
                        (t, c)
                    })
                    .collect()
            }),
        ),
        NsymCase(
            "psi[a] = sum over walls W of shape a of (-1)^(|W| - l(type W)) fp(W) e[type W]",
            NSymBasis::PowerSumFirst,
            NSymBasis::Elementary,
            Box::new(|alpha| {
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| {
                        let t = w.brick_type();
                        let c = sign(w.size() as i64 - t.len() as i64)
                            * w.stat(WallStat::FirstParts);
                        (t, c)
                    })
                    .collect()
            }),
        ),
        // Power sums of the second kind with the brick-count statistic.
        NsymCase(
            "phi[a] = sum over walls W of shape a of (-1)^(l(type W) - l(shape W)) (prod(shape)/pb(W)) h[type W]",
            NSymBasis::PowerSumSecond,
            NSymBasis::Complete,
            Box::new(|alpha| {
                let prod = alpha.stat(Stat::Product).unwrap();
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| {
                        let t = w.brick_type();
                        let c = sign(t.len() as i64 - alpha.len() as i64) * &prod
                            / w.stat(WallStat::BrickCounts);
                        (t, c)
                    })
                    .collect()
            }),
        ),
        NsymCase(
            "phi[a] = sum over walls W of shape a of (-1)^(|W| - l(type W)) (prod(shape)/pb(W)) e[type W]",
            NSymBasis::PowerSumSecond,
            NSymBasis::Elementary,
            Box::new(|alpha| {
                let prod = alpha.stat(Stat::Product).unwrap();
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| {
                        let t = w.brick_type();
                        let c = sign(w.size() as i64 - t.len() as i64) * &prod
                            / w.stat(WallStat::BrickCounts);
                        (t, c)
                    })
                    .collect()
            }),
        ),
        // Indexed walls of a shape with the factorial statistic.
        NsymCase(
            "h[a] = sum over indexed walls IW of shape a of (1/fb) phi[type]/z",
            NSymBasis::Complete,
            NSymBasis::PowerSumSecond,
            Box::new(|alpha| {
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| {
                        let t = w.brick_type();
                        let count = indexed_wall_count(alpha, &t).unwrap();
                        let c =
                            count / (w.stat(WallStat::BrickCountFactorials) * z_of(&t));
                        (t, c)
                    })
                    .collect()
            }),
        ),
        NsymCase(
            "e[a] = sum over indexed walls IW of shape a of (-1)^(|W| - l(type)) (1/fb) phi[type]/z",
            NSymBasis::Elementary,
            NSymBasis::PowerSumSecond,
            Box::new(|alpha| {
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| {
                        let t = w.brick_type();
                        let count = indexed_wall_count(alpha, &t).unwrap();
                        let c = sign(w.size() as i64 - t.len() as i64) * count
                            / (w.stat(WallStat::BrickCountFactorials) * z_of(&t));
                        (t, c)
                    })
                    .collect()
            }),
        ),
    ];

    let qsym_cases: Vec<QsymCase> = vec![
        // The monomial/forgotten exchange over walls of a type.
        QsymCase(
            "For[a] = sum over walls W of type a of (-1)^(l(type W) - |W|) M[shape W]",
            QSymBasis::Forgotten,
            QSymBasis::Monomial,
            Box::new(|alpha| {
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| {
                        let s = sign(alpha.len() as i64 - w.size() as i64);
                        (w.shape().clone(), s)
                    })
                    .collect()
            }),
        ),
        QsymCase(
            "M[a] = sum over walls W of type a of (-1)^(l(type W) - |W|) For[shape W]",
            QSymBasis::Monomial,
            QSymBasis::Forgotten,
            Box::new(|alpha| {
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| {
                        let s = sign(alpha.len() as i64 - w.size() as i64);
                        (w.shape().clone(), s)
                    })
                    .collect()
            }),
        ),
        // Fundamental lines.
        QsymCase(
            "F[a] = sum over walls W of shape a of M[type W]",
            QSymBasis::Fundamental,
            QSymBasis::Monomial,
            Box::new(|alpha| {
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| (w.brick_type(), Rat::one()))
                    .collect()
            }),
        ),
        QsymCase(
            "M[a] = sum over walls W of shape a of (-1)^(l(type W) - l(shape W)) F[type W]",
            QSymBasis::Monomial,
            QSymBasis::Fundamental,
            Box::new(|alpha| {
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| {
                        let t = w.brick_type();
                        let s = sign(t.len() as i64 - alpha.len() as i64);
                        (t, s)
                    })
                    .collect()
            }),
        ),
        QsymCase(
            "F[a] = sum over walls W of shape complement(a) of For[type W]",
            QSymBasis::Fundamental,
            QSymBasis::Forgotten,
            Box::new(|alpha| {
                walls_of_shape(&alpha.complement())
                    .into_iter()
                    .map(|w| (w.brick_type(), Rat::one()))
                    .collect()
            }),
        ),
        QsymCase(
            "For[a] = sum over walls W of shape a of (-1)^(l(type W) - l(shape W)) F[complement of type W]",
            QSymBasis::Forgotten,
            QSymBasis::Fundamental,
            Box::new(|alpha| {
                walls_of_shape(alpha)
                    .into_iter()
                    .map(|w| {
                        let t = w.brick_type();
                        let s = sign(t.len() as i64 - alpha.len() as i64);
                        (t.complement(), s)
                    })
                    .collect()
            }),
        ),
        // Power sums of the first kind over walls of a type.
        QsymCase(
            "M[a] = sum over walls W of type a of (-1)^(l(type W) - l(shape W)) lp(W) Psi[shape W]/z",
            QSymBasis::Monomial,
            QSymBasis::PowerSumFirst,
            Box::new(|alpha| {
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| {
                        let sh = w.shape().clone();
                        let c = sign(alpha.len() as i64 - sh.len() as i64)
                            * w.stat(WallStat::LastParts)
                            / z_of(&sh);
                        (sh, c)
                    })
                    .collect()
            }),
        ),
        QsymCase(
            "For[a] = sum over walls W of type a of (-1)^(|W| - l(type W)) fp(W) Psi[shape W]/z",
            QSymBasis::Forgotten,
            QSymBasis::PowerSumFirst,
            Box::new(|alpha| {
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| {
                        let sh = w.shape().clone();
                        let c = sign(w.size() as i64 - alpha.len() as i64)
                            * w.stat(WallStat::FirstParts)
                            / z_of(&sh);
                        (sh, c)
                    })
                    .collect()
            }),
        ),
        // Power sums of the second kind over walls of a type.
        QsymCase(
            "M[a] = sum over walls W of type a of (-1)^(l(type W) - l(shape W)) (prod(shape)/pb(W)) Phi[shape W]/z",
            QSymBasis::Monomial,
            QSymBasis::PowerSumSecond,
            Box::new(|alpha| {
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| {
                        let sh = w.shape().clone();
                        let c = sign(alpha.len() as i64 - sh.len() as i64)
                            * sh.stat(Stat::Product).unwrap()
                            / (w.stat(WallStat::BrickCounts) * z_of(&sh));
                        (sh, c)
                    })
                    .collect()
            }),
        ),
        QsymCase(
            "For[a] = sum over walls W of type a of (-1)^(|W| - l(type W)) (prod(shape)/pb(W)) Phi[shape W]/z",
            QSymBasis::Forgotten,
            QSymBasis::PowerSumSecond,
            Box::new(|alpha| {
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| {
                        let sh = w.shape().clone();
                        let c = sign(w.size() as i64 - alpha.len() as i64)
                            * sh.stat(Stat::Product).unwrap()
                            / (w.stat(WallStat::BrickCounts) * z_of(&sh));
                        (sh, c)
                    })
                    .collect()
            }),
        ),
        // Indexed walls of a type: every labeling of a wall contributes
        // the same term, so each wall enters with the labeling count as
        // multiplicity.
        QsymCase(
            "Phi[a] = sum over indexed walls IW of type a of (1/fb) M[shape]",
            QSymBasis::PowerSumSecond,
            QSymBasis::Monomial,
            Box::new(|alpha| {
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| {
                        let count = indexed_wall_count(w.shape(), alpha).unwrap();
                        let c = count / w.stat(WallStat::BrickCountFactorials);
                        (w.shape().clone(), c)
                    })
                    .collect()
            }),
        ),
        QsymCase(
            "Phi[a] = sum over indexed walls IW of type a of (-1)^(|W| - l(type)) (1/fb) For[shape]",
            QSymBasis::PowerSumSecond,
            QSymBasis::Forgotten,
            Box::new(|alpha| {
                let s = sign(alpha.size() as i64 - alpha.len() as i64);
                walls_of_type(alpha)
                    .into_iter()
                    .map(|w| {
                        let count = indexed_wall_count(w.shape(), alpha).unwrap();
                        let c = &s * count / w.stat(WallStat::BrickCountFactorials);
                        (w.shape().clone(), c)
                    })
                    .collect()
            }),
        ),
    ];

    for NsymCase(name, lhs, rhs, build) in &nsym_cases {
        let mut pass = true;
        let mut detail = String::new();
        for alpha in &comps {
            let combinatorial =
                NSymElem::from_terms(n, *rhs, build(alpha)).expect("degree-checked");
            let converted = NSymElem::basis_vector(*lhs, alpha.clone()).convert(*rhs);
            if combinatorial != converted {
                pass = false;
                detail = format!(
                    "alpha={alpha}: walls give {combinatorial}, conversion gives {converted}"
                );
                break;
            }
        }
        report.check(format!("{name} (n={n})"), pass, || detail);
    }
    for QsymCase(name, lhs, rhs, build) in &qsym_cases {
        let mut pass = true;
        let mut detail = String::new();
        for alpha in &comps {
            let combinatorial =
                QSymElem::from_terms(n, *rhs, build(alpha)).expect("degree-checked");
            let converted = QSymElem::basis_vector(*lhs, alpha.clone()).convert(*rhs);
            if combinatorial != converted {
                pass = false;
                detail = format!(
                    "alpha={alpha}: walls give {combinatorial}, conversion gives {converted}"
                );
                break;
            }
        }
        report.check(format!("{name} (n={n})"), pass, || detail);
    }
    report
}

/// Recompute each brick-tabloid expansion and compare it against the
/// independent linear-solve oracle, for every partition of `n`.
pub fn verify_brick_theorems(n: u32) -> Report {
    let mut report = Report::new();
    let m = (n as usize).max(1);
    let algebra = CAlgebra::with_cap(m, m).expect("valid algebra");
    let partitions = enumerate_partitions(n);

    // Tabloid statistics for all ordered pairs.
    let mut count: BTreeMap<(Partition, Partition), Rat> = BTreeMap::new();
    let mut weight: BTreeMap<(Partition, Partition), Rat> = BTreeMap::new();
    let mut ordered: BTreeMap<(Partition, Partition), Rat> = BTreeMap::new();
    for shape in &partitions {
        for ty in &partitions {
            let ts = brick_tabloids(shape, ty).expect("same size");
            count.insert((shape.clone(), ty.clone()), rat(ts.len() as i64));
            weight.insert(
                (shape.clone(), ty.clone()),
                ts.iter().map(BrickTabloid::weight).fold(Rat::zero(), |a, w| a + w),
            );
            ordered.insert(
                (shape.clone(), ty.clone()),
                ordered_tabloid_count(shape, ty).expect("same size"),
            );
        }
    }
    let z = |p: &Partition| p.as_composition().sort_and_z().1;

    // (target family realized on the left, expansion family on the
    // right, right-hand coefficient of the family element mu for the
    // left index lambda).
    type Coeff<'a> = Box<dyn Fn(&Partition, &Partition) -> Rat + 'a>;
    let cases: Vec<(&'static str, SymFamily, SymFamily, Coeff)> = vec![
        (
            "e[lam] = sum of (-1)^(n - l(mu)) #tabloids(shape lam, type mu) h[mu]",
            SymFamily::Elementary,
            SymFamily::Complete,
            Box::new(|lam: &Partition, mu: &Partition| {
                sign(n as i64 - mu.len() as i64) * count[&(lam.clone(), mu.clone())].clone()
            }),
        ),
        (
            "h[lam] = sum of (-1)^(n - l(mu)) #tabloids(shape lam, type mu) e[mu]",
            SymFamily::Complete,
            SymFamily::Elementary,
            Box::new(|lam: &Partition, mu: &Partition| {
                sign(n as i64 - mu.len() as i64) * count[&(lam.clone(), mu.clone())].clone()
            }),
        ),
        (
            "m[lam] = sum of (-1)^(n - l(lam)) #tabloids(shape mu, type lam) f[mu]",
            SymFamily::Monomial,
            SymFamily::Forgotten,
            Box::new(|lam: &Partition, mu: &Partition| {
                sign(n as i64 - lam.len() as i64) * count[&(mu.clone(), lam.clone())].clone()
            }),
        ),
        (
            "f[lam] = sum of (-1)^(n - l(lam)) #tabloids(shape mu, type lam) m[mu]",
            SymFamily::Forgotten,
            SymFamily::Monomial,
            Box::new(|lam: &Partition, mu: &Partition| {
                sign(n as i64 - lam.len() as i64) * count[&(mu.clone(), lam.clone())].clone()
            }),
        ),
        (
            "p[lam] = sum of (-1)^(n - l(mu)) weight(shape lam, type mu) e[mu]",
            SymFamily::Power,
            SymFamily::Elementary,
            Box::new(|lam: &Partition, mu: &Partition| {
                sign(n as i64 - mu.len() as i64) * weight[&(lam.clone(), mu.clone())].clone()
            }),
        ),
        (
            "p[lam] = sum of (-1)^(l(lam) - l(mu)) weight(shape lam, type mu) h[mu]",
            SymFamily::Power,
            SymFamily::Complete,
            Box::new(|lam: &Partition, mu: &Partition| {
                sign(lam.len() as i64 - mu.len() as i64)
                    * weight[&(lam.clone(), mu.clone())].clone()
            }),
        ),
        (
            "f[lam] = sum of (-1)^(n - l(lam)) (weight(shape mu, type lam)/z[mu]) p[mu]",
            SymFamily::Forgotten,
            SymFamily::Power,
            Box::new(|lam: &Partition, mu: &Partition| {
                sign(n as i64 - lam.len() as i64) * weight[&(mu.clone(), lam.clone())].clone()
                    / z(mu)
            }),
        ),
        (
            "m[lam] = sum of (-1)^(l(lam) - l(mu)) (weight(shape mu, type lam)/z[mu]) p[mu]",
            SymFamily::Monomial,
            SymFamily::Power,
            Box::new(|lam: &Partition, mu: &Partition| {
                sign(lam.len() as i64 - mu.len() as i64)
                    * weight[&(mu.clone(), lam.clone())].clone()
                    / z(mu)
            }),
        ),
        (
            "p[lam] = sum of #ordered-tabloids(shape mu, type lam) m[mu]",
            SymFamily::Power,
            SymFamily::Monomial,
            Box::new(|lam: &Partition, mu: &Partition| ordered[&(mu.clone(), lam.clone())].clone()),
        ),
        (
            "p[lam] = sum of (-1)^(n - l(lam)) #ordered-tabloids(shape mu, type lam) f[mu]",
            SymFamily::Power,
            SymFamily::Forgotten,
            Box::new(|lam: &Partition, mu: &Partition| {
                sign(n as i64 - lam.len() as i64) * ordered[&(mu.clone(), lam.clone())].clone()
            }),
        ),
        (
            "h[lam] = sum of (#ordered-tabloids(shape lam, type mu)/z[mu]) p[mu]",
            SymFamily::Complete,
            SymFamily::Power,
            Box::new(|lam: &Partition, mu: &Partition| {
                ordered[&(lam.clone(), mu.clone())].clone() / z(mu)
            }),
        ),
        (
            "e[lam] = sum of (-1)^(n - l(mu)) (#ordered-tabloids(shape lam, type mu)/z[mu]) p[mu]",
            SymFamily::Elementary,
            SymFamily::Power,
            Box::new(|lam: &Partition, mu: &Partition| {
                sign(n as i64 - mu.len() as i64) * ordered[&(lam.clone(), mu.clone())].clone()
                    / z(mu)
            }),
        ),
    ];

    // One solver per family, shared across equations and left sides.
    let solver_for = |family: SymFamily| {
        algebra
            .expansion_solver(family, n)
            .expect("family basis realizes")
    };
    let solvers = [
        (SymFamily::Elementary, solver_for(SymFamily::Elementary)),
        (SymFamily::Complete, solver_for(SymFamily::Complete)),
        (SymFamily::Power, solver_for(SymFamily::Power)),
        (SymFamily::Monomial, solver_for(SymFamily::Monomial)),
        (SymFamily::Forgotten, solver_for(SymFamily::Forgotten)),
    ];
    let solver = |family: SymFamily| {
        &solvers
            .iter()
            .find(|(f, _)| *f == family)
            .expect("all families present")
            .1
    };

    for (name, target_family, expansion_family, coeff) in cases {
        let mut pass = true;
        let mut detail = String::new();
        for lam in &partitions {
            let target = solver(target_family)
                .basis_element(lam)
                .expect("partition of n")
                .clone();
            let oracle = solver(expansion_family)
                .expand(&target)
                .expect("symmetric target");
            let mut combinatorial: BTreeMap<Partition, Rat> = BTreeMap::new();
            for mu in &partitions {
                let c = coeff(lam, mu);
                if !c.is_zero() {
                    combinatorial.insert(mu.clone(), c);
                }
            }
            if oracle != combinatorial {
                pass = false;
                detail = format!("lambda={lam}: oracle {oracle:?} vs tabloids {combinatorial:?}");
                break;
            }
        }
        report.check(format!("{name} (n={n})"), pass, || detail);
    }
    report
}
