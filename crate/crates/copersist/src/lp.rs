//! Exact rational linear feasibility for Newton-polyhedron membership.
//!
//! A lattice point `a` lies in the Newton polyhedron of a proper monomial
//! ideal (the convex hull of the generator exponents plus the nonnegative
//! orthant) iff there are nonnegative weights summing to 1 whose convex
//! combination of generator exponents is componentwise at most `a`. Since
//! everything is nonnegative, that is equivalent to
//!
//!   max { Σλ_i : Σ_i λ_i e_i ≤ a, λ ≥ 0 } ≥ 1,
//!
//! a bounded LP with a feasible origin. It is solved with a dense simplex
//! over arbitrary-precision rationals (no floating point anywhere), using
//! Bland's rule so termination is unconditional, and stopping as soon as
//! the objective reaches 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn rat(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Result of a membership query, carrying a reusable separation
/// certificate on the negative side.
#[derive(Clone, Debug)]
pub enum Membership {
    Inside,
    /// A functional `w >= 0` with `⟨w, e⟩ >= 1` for every generator
    /// exponent `e` but `⟨w, point⟩ < 1`: a facet certificate that the
    /// point is outside, valid for any other point it rejects the same way.
    Outside(Vec<BigRational>),
}

/// Evaluates a stored certificate against another point: true when the
/// certificate also proves that point outside.
pub fn certificate_rejects(w: &[BigRational], point: &[u64]) -> bool {
    let mut dot = BigRational::zero();
    for (wi, &p) in w.iter().zip(point) {
        if p != 0 {
            dot += wi * rat(p);
        }
    }
    dot < BigRational::one()
}

/// Decides membership of `point` in the Newton polyhedron spanned by
/// `gens` (one exponent vector per generator). `gens` must be nonempty and
/// all vectors the same length as `point`.
pub fn in_newton_polyhedron(gens: &[&[u64]], point: &[u64]) -> bool {
    matches!(newton_membership(gens, point), Membership::Inside)
}

/// Membership query that surfaces the separating functional on rejection.
pub fn newton_membership(gens: &[&[u64]], point: &[u64]) -> Membership {
    let n = point.len();
    let m = gens.len();
    debug_assert!(m > 0);
    debug_assert!(gens.iter().all(|g| g.len() == n));

    // Quick reject: every polyhedron point has total degree at least the
    // smallest generator degree. The certificate is the scaled all-ones
    // functional.
    let min_deg: u64 = gens.iter().map(|g| g.iter().sum()).min().unwrap();
    let point_deg: u64 = point.iter().sum();
    if point_deg < min_deg {
        let w = BigRational::new(BigInt::from(1), BigInt::from(min_deg));
        return Membership::Outside(vec![w; n]);
    }
    // Quick accept: some generator divides the point.
    if gens
        .iter()
        .any(|g| g.iter().zip(point).all(|(e, p)| e <= p))
    {
        return Membership::Inside;
    }

    // Tableau over columns [λ_1..λ_m | s_1..s_n]; slack basis is feasible.
    let cols = m + n;
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut row = vec![BigRational::zero(); cols];
        for (i, g) in gens.iter().enumerate() {
            row[i] = rat(g[j]);
        }
        row[m + j] = BigRational::one();
        rows.push(row);
    }
    let mut rhs: Vec<BigRational> = point.iter().map(|&p| rat(p)).collect();
    let mut basis: Vec<usize> = (m..m + n).collect();
    let mut obj: Vec<BigRational> = (0..cols)
        .map(|i| {
            if i < m {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let mut value = BigRational::zero();
    let one = BigRational::one();

    loop {
        if value >= one {
            return Membership::Inside;
        }
        // Bland: entering column = smallest index with positive reduced cost.
        let Some(enter) = (0..cols).find(|&j| obj[j].is_positive()) else {
            // Optimal below 1: the dual solution read off the slack columns
            // is the separating functional.
            let w: Vec<BigRational> = (0..n).map(|j| -obj[m + j].clone()).collect();
            debug_assert!(w.iter().all(|x| !x.is_negative()));
            return Membership::Outside(w);
        };
        // Ratio test; Bland tie-break on the smallest basic variable.
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..n {
            if rows[r][enter].is_positive() {
                let ratio = &rhs[r] / &rows[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            return Membership::Inside; // unbounded above, certainly reaches 1
        };

        // Pivot: normalize row r, eliminate the column elsewhere.
        let piv = rows[r][enter].clone();
        for x in rows[r].iter_mut() {
            *x /= &piv;
        }
        rhs[r] /= &piv;
        for i in 0..n {
            if i == r || rows[i][enter].is_zero() {
                continue;
            }
            let f = rows[i][enter].clone();
            for c in 0..cols {
                let d = &f * &rows[r][c];
                rows[i][c] -= d;
            }
            let d = &f * &rhs[r];
            rhs[i] -= d;
        }
        let f = obj[enter].clone();
        if !f.is_zero() {
            for c in 0..cols {
                let d = &f * &rows[r][c];
                obj[c] -= d;
            }
            let d = &f * &rhs[r];
            value += d;
        }
        basis[r] = enter;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoint_of_pure_squares_is_inside() {
        // (1,1) = 1/2*(2,0) + 1/2*(0,2)
        assert!(in_newton_polyhedron(&[&[2, 0], &[0, 2]], &[1, 1]));
    }

    #[test]
    fn generators_are_inside() {
        assert!(in_newton_polyhedron(&[&[2, 0], &[0, 2]], &[2, 0]));
        assert!(in_newton_polyhedron(&[&[3, 1], &[1, 4]], &[3, 1]));
    }

    #[test]
    fn single_variable_point_is_outside() {
        // 2λ1 ≤ 1 and λ1 + λ2 = 1 would force 2λ2 ≤ 0: infeasible.
        assert!(!in_newton_polyhedron(&[&[2, 0], &[0, 2]], &[1, 0]));
    }

    #[test]
    fn origin_is_never_inside_for_proper_ideals() {
        assert!(!in_newton_polyhedron(&[&[2, 0], &[0, 2]], &[0, 0]));
        assert!(!in_newton_polyhedron(&[&[1, 1]], &[0, 0]));
    }

    #[test]
    fn upward_closure() {
        assert!(in_newton_polyhedron(&[&[2, 0], &[0, 2]], &[1, 2]));
        assert!(in_newton_polyhedron(&[&[2, 0], &[0, 2]], &[5, 5]));
    }

    #[test]
    fn scaling_generators_and_point_preserves_the_answer() {
        let gens: Vec<Vec<u64>> = vec![vec![2, 0, 1], vec![0, 3, 0], vec![1, 1, 2]];
        for a in [[1u64, 1, 1], [2, 1, 0], [0, 2, 1], [3, 0, 0]] {
            let plain: Vec<&[u64]> = gens.iter().map(|g| g.as_slice()).collect();
            let scaled_gens: Vec<Vec<u64>> =
                gens.iter().map(|g| g.iter().map(|e| e * 3).collect()).collect();
            let scaled_refs: Vec<&[u64]> = scaled_gens.iter().map(|g| g.as_slice()).collect();
            let scaled_point: Vec<u64> = a.iter().map(|e| e * 3).collect();
            assert_eq!(
                in_newton_polyhedron(&plain, &a),
                in_newton_polyhedron(&scaled_refs, &scaled_point),
            );
        }
    }

    #[test]
    fn needs_a_genuine_mix_of_three_generators() {
        // (2,2,2) should be reachable from thirds of (6,0,0),(0,6,0),(0,0,6).
        assert!(in_newton_polyhedron(
            &[&[6, 0, 0], &[0, 6, 0], &[0, 0, 6]],
            &[2, 2, 2]
        ));
        assert!(!in_newton_polyhedron(
            &[&[6, 0, 0], &[0, 6, 0], &[0, 0, 6]],
            &[2, 2, 1]
        ));
    }
}
