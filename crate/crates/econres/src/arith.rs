//! Exact rational scalars, integer 3-vectors and small rational matrices.
//!
//! Scalars are arbitrary-precision: stability parameters grow multiplicatively
//! along the blowup recursion and overflow machine words already for moderate
//! group orders.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

/// Rational from machine integers, for literals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An integer vector in 3-space. Componentwise equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVec3(pub [Int; 3]);

impl IntVec3 {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>, z: impl Into<Int>) -> Self {
        IntVec3([x.into(), y.into(), z.into()])
    }

    pub fn zero() -> Self {
        IntVec3([Int::zero(), Int::zero(), Int::zero()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &IntVec3) -> IntVec3 {
        IntVec3([
            &self.0[0] + &other.0[0],
            &self.0[1] + &other.0[1],
            &self.0[2] + &other.0[2],
        ])
    }

    pub fn sub(&self, other: &IntVec3) -> IntVec3 {
        IntVec3([
            &self.0[0] - &other.0[0],
            &self.0[1] - &other.0[1],
            &self.0[2] - &other.0[2],
        ])
    }

    pub fn scale(&self, k: &Int) -> IntVec3 {
        IntVec3([&self.0[0] * k, &self.0[1] * k, &self.0[2] * k])
    }

    pub fn dot(&self, other: &IntVec3) -> Int {
        &self.0[0] * &other.0[0] + &self.0[1] * &other.0[1] + &self.0[2] * &other.0[2]
    }

    pub fn cross(&self, other: &IntVec3) -> IntVec3 {
        let [a1, a2, a3] = &self.0;
        let [b1, b2, b3] = &other.0;
        IntVec3([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }

    /// Componentwise gcd; zero for the zero vector.
    pub fn content(&self) -> Int {
        self.0
            .iter()
            .fold(Int::zero(), |acc, c| acc.gcd(&c.abs()))
    }

    /// Divides out the content, preserving direction.
    pub fn primitive(&self) -> Result<IntVec3> {
        let g = self.content();
        if g.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(IntVec3([&self.0[0] / &g, &self.0[1] / &g, &self.0[2] / &g]))
    }

    pub fn to_rationals(&self) -> [Rational; 3] {
        [
            Rational::from_integer(self.0[0].clone()),
            Rational::from_integer(self.0[1].clone()),
            Rational::from_integer(self.0[2].clone()),
        ]
    }
}

impl std::fmt::Display for IntVec3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Determinant of a 3×3 integer matrix given by rows.
pub fn det3_int(rows: &[IntVec3; 3]) -> Int {
    rows[0].dot(&rows[1].cross(&rows[2]))
}

/// A dense rational matrix. All rows have equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<Vec<Rational>>,
}

impl RatMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Self {
        if let Some(first) = rows.first() {
            let w = first.len();
            assert!(rows.iter().all(|r| r.len() == w), "ragged matrix");
        }
        RatMatrix { rows }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        RatMatrix { rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    /// Matrix product.
    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.ncols(), other.nrows());
        let rows = (0..self.nrows())
            .map(|i| {
                (0..other.ncols())
                    .map(|j| {
                        (0..self.ncols())
                            .map(|k| self.at(i, k) * other.at(k, j))
                            .sum()
                    })
                    .collect()
            })
            .collect();
        RatMatrix { rows }
    }
}

/// Exact inverse of a 3×3 rational matrix.
pub fn invert_matrix3(m: &RatMatrix) -> Result<RatMatrix> {
    assert_eq!((m.nrows(), m.ncols()), (3, 3), "invert_matrix3 needs 3x3");
    // Gaussian elimination on [m | I].
    let mut aug: Vec<Vec<Rational>> = (0..3)
        .map(|i| {
            let mut row = m.rows[i].clone();
            for j in 0..3 {
                row.push(if i == j { Rational::one() } else { Rational::zero() });
            }
            row
        })
        .collect();
    for col in 0..3 {
        let pivot = (col..3)
            .find(|&i| !aug[i][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x /= &p;
        }
        for i in 0..3 {
            if i != col && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for j in 0..6 {
                    let t = &aug[col][j] * &f;
                    aug[i][j] -= t;
                }
            }
        }
    }
    Ok(RatMatrix::new(
        aug.into_iter().map(|row| row[3..].to_vec()).collect(),
    ))
}

/// Solves `A·x = b` exactly by Gaussian elimination.
///
/// Underdetermined systems return the solution with all free variables set to
/// zero, so results are reproducible across runs. Returns
/// [`Error::Infeasible`] when the system has no solution.
pub fn solve_rational_system(a: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    assert!(a.nrows() >= 1, "system needs at least one row");
    assert_eq!(a.nrows(), b.len(), "rhs length mismatch");
    let (m, n) = (a.nrows(), a.ncols());
    let mut aug: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = a.rows[i].clone();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let Some(p) = (row..m).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let pv = aug[row][col].clone();
        for x in aug[row].iter_mut() {
            *x /= &pv;
        }
        for i in 0..m {
            if i != row && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for j in col..=n {
                    let t = &aug[row][j] * &f;
                    aug[i][j] -= t;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m {
            break;
        }
    }
    // Rows that reduced to 0 = c with c ≠ 0 witness inconsistency.
    for i in row..m {
        if aug[i][..n].iter().all(|x| x.is_zero()) && !aug[i][n].is_zero() {
            return Err(Error::Infeasible);
        }
    }
    let mut x = vec![Rational::zero(); n];
    for (k, &col) in pivot_cols.iter().enumerate() {
        x[col] = aug[k][n].clone();
    }
    Ok(x)
}

/// The unique primitive integer vector that is a positive rational multiple
/// of `v`. Direction is preserved; no sign convention is imposed.
pub fn primitive_scale(v: &[Rational]) -> Result<Vec<Int>> {
    if v.iter().all(|q| q.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let denom_lcm = v
        .iter()
        .fold(Int::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<Int> = v.iter().map(|q| (q * &denom_lcm).to_integer()).collect();
    let g = ints
        .iter()
        .fold(Int::zero(), |acc, c| acc.gcd(&c.abs()));
    Ok(ints.into_iter().map(|c| c / &g).collect())
}

/// Floor division for arbitrary-precision integers.
pub fn floor_div(n: &Int, d: &Int) -> Int {
    n.div_floor(d)
}

/// Ceiling division for arbitrary-precision integers.
pub fn ceil_div(n: &Int, d: &Int) -> Int {
    n.div_ceil(d)
}
