//! Exact rational linear algebra on small integer matrices and vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer vector of fixed dimension (a counter effect, a matrix column).
pub type IntVec = Vec<i64>;

fn to_rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Rank over the rationals of a matrix given as a list of rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| to_rat(x)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    for col in 0..cols {
        let pivot = (rank..m.len()).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &inv;
                for c in col..cols {
                    let sub = &factor * &m[rank][c];
                    m[r][c] = &m[r][c] - sub;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank treating each vector as a row.
pub fn rank_of_vectors(vectors: &[IntVec]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(vectors)
}

/// Whether the given vectors are linearly independent over the rationals.
pub fn linearly_independent(vectors: &[IntVec]) -> bool {
    rank_of_vectors(vectors) == vectors.len()
}

/// Whether `u` lies in the rational span of `basis`.
pub fn in_span(basis: &[IntVec], u: &IntVec) -> bool {
    if u.iter().all(|&x| x == 0) {
        return true;
    }
    let mut rows: Vec<IntVec> = basis.to_vec();
    rows.push(u.clone());
    rank_of_vectors(&rows) == rank_of_vectors(basis)
}

/// One linearly independent subset of `s ∪ {u}` spanning the same space.
///
/// Deterministic choice: keep `s` (assumed independent) and add `u` exactly
/// when it is independent of `s`. Both outcomes are valid successors of the
/// span-reduction step, and this instance always exists.
pub fn reduce_span(s: &[IntVec], u: &IntVec) -> Vec<IntVec> {
    debug_assert!(linearly_independent(s));
    let mut out = s.to_vec();
    if !in_span(s, u) {
        out.push(u.clone());
    }
    out
}

/// Row-wise 1-norm maximum: `max_i Σ_j |a_ij|`.
pub fn norm_1_inf(rows: &[Vec<i64>]) -> u64 {
    rows.iter()
        .map(|r| r.iter().map(|&x| x.unsigned_abs()).sum::<u64>())
        .max()
        .unwrap_or(0)
}

/// Transpose a list of columns into a list of rows.
pub fn columns_to_rows(cols: &[IntVec], dim: usize) -> Vec<Vec<i64>> {
    (0..dim).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

/// Componentwise sum.
pub fn vec_add(a: &IntVec, b: &IntVec) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_is_zero(a: &IntVec) -> bool {
    a.iter().all(|&x| x == 0)
}

pub fn norm_inf(a: &IntVec) -> u64 {
    a.iter().map(|&x| x.unsigned_abs()).max().unwrap_or(0)
}

/// Exact rational feasibility of `Σ x_i s_i + Σ y_j t_j = 0` with all
/// `x_i ≥ 1`, `y_j ≥ 0`, by Fourier–Motzkin elimination. Scaling by a common
/// denominator shows this is equivalent to integer solvability.
pub fn rational_cancel_feasible(s: &[IntVec], t: &[IntVec]) -> bool {
    let dim = s.first().or_else(|| t.first()).map_or(0, Vec::len);
    let vars = s.len() + t.len();
    if s.is_empty() {
        return true;
    }
    // Constraint system over x ∈ Q^vars:
    //   equalities  A x = 0   (dim rows; columns s then t)
    //   inequalities x_i ≥ 1 for i < s.len(), x_i ≥ 0 otherwise.
    // Eliminate equalities by pivoting, then run Fourier–Motzkin on the rest.
    #[derive(Clone)]
    struct Ineq {
        coef: Vec<BigRational>,
        rhs: BigRational, // Σ coef·x ≥ rhs
    }
    let mut eqs: Vec<(Vec<BigRational>, BigRational)> = (0..dim)
        .map(|r| {
            let mut coef: Vec<BigRational> = Vec::with_capacity(vars);
            for v in s.iter().chain(t.iter()) {
                coef.push(to_rat(v[r]));
            }
            (coef, BigRational::zero())
        })
        .collect();
    let mut ineqs: Vec<Ineq> = (0..vars)
        .map(|i| {
            let mut coef = vec![BigRational::zero(); vars];
            coef[i] = BigRational::one();
            let rhs = if i < s.len() { BigRational::one() } else { BigRational::zero() };
            Ineq { coef, rhs }
        })
        .collect();
    let mut eliminated = vec![false; vars];

    // Pivot each equality on some remaining variable and substitute everywhere.
    let mut e = 0;
    while e < eqs.len() {
        let (coef, rhs) = eqs[e].clone();
        let Some(p) = (0..vars).find(|&j| !eliminated[j] && !coef[j].is_zero()) else {
            if !rhs.is_zero() {
                return false; // 0 = nonzero
            }
            eqs.remove(e);
            continue;
        };
        eliminated[p] = true;
        let pc = coef[p].clone();
        // x_p = (rhs - Σ_{j≠p} coef_j x_j) / pc ; substitute into all rows
        let subst = |row: &mut Vec<BigRational>, r: &mut BigRational| {
            if row[p].is_zero() {
                return;
            }
            let f = &row[p] / &pc;
            for j in 0..vars {
                if j != p {
                    let d = &f * &coef[j];
                    row[j] = &row[j] - d;
                }
            }
            let dr = &f * &rhs;
            *r = &*r - dr;
            row[p] = BigRational::zero();
        };
        for k in e + 1..eqs.len() {
            let (ref mut c2, ref mut r2) = eqs[k];
            subst(c2, r2);
        }
        for iq in ineqs.iter_mut() {
            subst(&mut iq.coef, &mut iq.rhs);
        }
        e += 1;
    }

    // Fourier–Motzkin on the remaining free variables.
    for j in 0..vars {
        if eliminated[j] {
            continue;
        }
        let (pos, rest): (Vec<Ineq>, Vec<Ineq>) =
            ineqs.into_iter().partition(|iq| iq.coef[j].is_positive());
        let (neg, zero): (Vec<Ineq>, Vec<Ineq>) =
            rest.into_iter().partition(|iq| iq.coef[j].is_negative());
        let mut next = zero;
        // pos: x_j ≥ (rhs - Σ rest)/c ;  neg: x_j ≤ ... ; combine pairwise
        for p in &pos {
            for n in &neg {
                // p.c > 0, n.c < 0: eliminate via  n.c * p - p.c * n ≥ n.c*p.rhs - p.c*n.rhs
                // (flip to keep ≥ with positive multipliers: use |n.c|·p + p.c·n)
                let a = -n.coef[j].clone(); // > 0
                let b = p.coef[j].clone(); // > 0
                let coef: Vec<BigRational> = (0..vars)
                    .map(|c| &a * &p.coef[c] + &b * &n.coef[c])
                    .collect();
                debug_assert!(coef[j].is_zero());
                let rhs = &a * &p.rhs + &b * &n.rhs;
                next.push(Ineq { coef, rhs });
            }
        }
        ineqs = next;
    }
    // All variables eliminated: rows must read 0 ≥ rhs.
    ineqs.iter().all(|iq| !iq.rhs.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_independence() {
        assert_eq!(rank_of_vectors(&[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(rank_of_vectors(&[vec![1, 1], vec![2, 2]]), 1);
        assert!(linearly_independent(&[vec![1, 0], vec![0, 1]]));
        assert!(!linearly_independent(&[vec![1, 1], vec![2, 2]]));
        assert!(!linearly_independent(&[vec![0, 0]]));
    }

    #[test]
    fn reduce_span_examples() {
        assert_eq!(reduce_span(&[], &vec![0]), Vec::<IntVec>::new());
        assert_eq!(
            reduce_span(&[vec![1, 0]], &vec![0, 1]),
            vec![vec![1, 0], vec![0, 1]]
        );
        assert_eq!(reduce_span(&[vec![1, 1]], &vec![2, 2]), vec![vec![1, 1]]);
    }

    #[test]
    fn rational_feasibility_basics() {
        // x·1 + y·(-1) = 0, x ≥ 1, y ≥ 0: feasible
        assert!(rational_cancel_feasible(&[vec![1]], &[vec![-1]]));
        // x·1 = 0, x ≥ 1: infeasible
        assert!(!rational_cancel_feasible(&[vec![1]], &[]));
        // empty S always feasible
        assert!(rational_cancel_feasible(&[], &[vec![3, 1]]));
    }
}
