//! Integral closure of monomial ideals and normality testing.
//!
//! The closure of a monomial ideal is generated by the lattice points of its
//! Newton polyhedron; a minimal such generator always lies in the box below
//! `lcm(G(I))` (past the generator maximum in some coordinate, dropping that
//! coordinate by one stays in the polyhedron). Membership queries go through
//! the exact LP of [`crate::lp`], cross-checkable by the power oracle.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lp::{certificate_rejects, in_newton_polyhedron, newton_membership, Membership};
use crate::ring::Monomial;

/// Default ceiling on lattice-point enumeration for closure computations.
pub const DEFAULT_BOX_BUDGET: u64 = 10_000_000;

/// Default power bound for the one-sided closure oracle.
pub const DEFAULT_POWER_ORACLE_BOUND: u64 = 12;

fn require_proper_nonzero(ideal: &MonomialIdeal, what: &'static str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal(what));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal(what));
    }
    Ok(())
}

/// True iff the exponent vector `point` lies in the Newton polyhedron of
/// `ideal`, i.e. `x^point` is integral over the ideal.
pub fn in_closure(ideal: &MonomialIdeal, point: &[u64]) -> Result<bool> {
    require_proper_nonzero(ideal, "integral-closure membership")?;
    if point.len() != ideal.ring().len() {
        return Err(Error::Invalid(format!(
            "point has {} coordinates but the ring has {} variables",
            point.len(),
            ideal.ring().len()
        )));
    }
    let gens: Vec<&[u64]> = ideal.gens().iter().map(|g| g.exps()).collect();
    Ok(in_newton_polyhedron(&gens, point))
}

/// Box points below `bound`, sorted by total degree (then canonically).
/// Errors when the box exceeds `budget`.
fn box_points(bound: &Monomial, budget: u64) -> Result<Vec<Vec<u64>>> {
    let mut size: u128 = 1;
    for &b in bound.exps() {
        size = size.saturating_mul(b as u128 + 1);
        if size > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: size,
                budget,
            });
        }
    }
    let n = bound.exps().len();
    let mut points = Vec::with_capacity(size as usize);
    let mut cur = vec![0u64; n];
    loop {
        points.push(cur.clone());
        let mut i = 0;
        loop {
            if i == n {
                points.sort_by(|a, b| {
                    let da: u64 = a.iter().sum();
                    let db: u64 = b.iter().sum();
                    da.cmp(&db).then_with(|| b.cmp(a))
                });
                return Ok(points);
            }
            if cur[i] < bound.exp(i) {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Walks the lattice box in degree order and reports every minimal closure
/// generator that is NOT already in the ideal. Empty result means the ideal
/// is integrally closed.
fn new_closure_generators(
    ideal: &MonomialIdeal,
    budget: u64,
    stop_at_first: bool,
) -> Result<Vec<Monomial>> {
    let bound = ideal.lcm_gens()?;
    let ring = ideal.ring().clone();
    let gens: Vec<&[u64]> = ideal.gens().iter().map(|g| g.exps()).collect();
    let mut accepted: Vec<Vec<u64>> = Vec::new();
    // Facet certificates from failed queries; the polyhedron has few
    // facets, so after a handful of LPs almost every rejection is a cheap
    // dot product against this cache.
    let mut certificates: Vec<Vec<num_rational::BigRational>> = Vec::new();
    for point in box_points(&bound, budget)? {
        let divisible = gens
            .iter()
            .any(|g| g.iter().zip(&point).all(|(e, p)| e <= p))
            || accepted
                .iter()
                .any(|a| a.iter().zip(&point).all(|(e, p)| e <= p));
        if divisible {
            continue;
        }
        if certificates.iter().any(|w| certificate_rejects(w, &point)) {
            continue;
        }
        match newton_membership(&gens, &point) {
            Membership::Inside => {
                accepted.push(point);
                if stop_at_first {
                    break;
                }
            }
            Membership::Outside(w) => {
                if !certificates.contains(&w) {
                    certificates.push(w);
                }
            }
        }
    }
    accepted
        .into_iter()
        .map(|p| ring.monomial(p))
        .collect::<Result<Vec<_>>>()
}

/// The integral closure as a monomial ideal. Contains the input, idempotent.
pub fn integral_closure(ideal: &MonomialIdeal, budget: u64) -> Result<MonomialIdeal> {
    require_proper_nonzero(ideal, "integral closure")?;
    let extra = new_closure_generators(ideal, budget, false)?;
    let mut gens: Vec<Monomial> = ideal.gens().to_vec();
    gens.extend(extra);
    MonomialIdeal::new(ideal.ring().clone(), gens)
}

/// True iff the ideal equals its integral closure.
pub fn is_integrally_closed(ideal: &MonomialIdeal, budget: u64) -> Result<bool> {
    require_proper_nonzero(ideal, "integral closure")?;
    Ok(new_closure_generators(ideal, budget, true)?.is_empty())
}

/// Certificate for a bounded normality check: `I^m` integrally closed for
/// `m = 1..n-1` (n = number of ring variables) implies `I` normal.
#[derive(Clone, Debug, Serialize)]
pub struct NormalityCertificate {
    pub normal: bool,
    pub powers_checked: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<NormalityFailure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalityFailure {
    pub power: u64,
    /// A monomial integral over `I^power` but outside it.
    pub witness: String,
}

/// Normality via closedness of the first `n-1` powers.
pub fn is_normal(ideal: &MonomialIdeal, budget: u64) -> Result<NormalityCertificate> {
    require_proper_nonzero(ideal, "normality")?;
    let n = ideal.ring().len() as u64;
    let mut checked = Vec::new();
    let mut power = ideal.clone();
    for m in 1..n {
        if m > 1 {
            power = power.product(ideal)?;
        }
        let missing = new_closure_generators(&power, budget, true)?;
        if let Some(w) = missing.first() {
            return Ok(NormalityCertificate {
                normal: false,
                powers_checked: checked,
                failure: Some(NormalityFailure {
                    power: m,
                    witness: w.to_string(),
                }),
            });
        }
        checked.push(m);
    }
    Ok(NormalityCertificate {
        normal: true,
        powers_checked: checked,
        failure: None,
    })
}

/// One-sided closure oracle: true when `x^{k·point} ∈ I^k` for some
/// `k ≤ k_max`. A `true` here always implies polyhedron membership; the
/// converse holds for large enough `k_max`.
pub fn closure_power_oracle(ideal: &MonomialIdeal, point: &[u64], k_max: u64) -> Result<bool> {
    require_proper_nonzero(ideal, "closure power oracle")?;
    if point.len() != ideal.ring().len() {
        return Err(Error::Invalid("point length mismatch".into()));
    }
    let base = ideal.ring().monomial(point.to_vec())?;
    let mut power = ideal.clone();
    for k in 1..=k_max {
        if k > 1 {
            power = power.product(ideal)?;
        }
        let scaled = base.checked_pow(k)?;
        if power.contains(&scaled)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn ideal(ring: &Ring, gens: &[&[u64]]) -> MonomialIdeal {
        let gens = gens
            .iter()
            .map(|e| ring.monomial(e.to_vec()).unwrap())
            .collect();
        MonomialIdeal::new(ring.clone(), gens).unwrap()
    }

    #[test]
    fn closure_of_pure_squares() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, &[&[2, 0], &[0, 2]]);
        let c = integral_closure(&i, DEFAULT_BOX_BUDGET).unwrap();
        assert_eq!(c.render(), "(x^2, x*y, y^2)");
        assert!(!is_integrally_closed(&i, DEFAULT_BOX_BUDGET).unwrap());
        assert!(is_integrally_closed(&c, DEFAULT_BOX_BUDGET).unwrap());
    }

    #[test]
    fn in_closure_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, &[&[2, 0], &[0, 2]]);
        assert!(in_closure(&i, &[1, 1]).unwrap());
        assert!(in_closure(&i, &[2, 0]).unwrap());
        assert!(!in_closure(&i, &[1, 0]).unwrap());
    }

    #[test]
    fn closure_of_prime_is_itself() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let p = ideal(&r, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(integral_closure(&p, DEFAULT_BOX_BUDGET).unwrap(), p);
        let cert = is_normal(&p, DEFAULT_BOX_BUDGET).unwrap();
        assert!(cert.normal);
        assert_eq!(cert.powers_checked, vec![1, 2]);
    }

    #[test]
    fn closure_is_idempotent_and_contains_input() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, &[&[3, 0], &[0, 4]]);
        let c = integral_closure(&i, DEFAULT_BOX_BUDGET).unwrap();
        assert!(c.contains_ideal(&i).unwrap());
        assert_eq!(integral_closure(&c, DEFAULT_BOX_BUDGET).unwrap(), c);
    }

    #[test]
    fn power_oracle_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, &[&[2, 0], &[0, 2]]);
        // x^2 y^2 ∈ I^2
        assert!(closure_power_oracle(&i, &[1, 1], 2).unwrap());
        assert!(!closure_power_oracle(&i, &[0, 0], 8).unwrap());
        assert!(closure_power_oracle(&i, &[2, 0], 1).unwrap());
        assert!(!closure_power_oracle(&i, &[1, 0], 12).unwrap());
    }

    #[test]
    fn budget_errors_are_loud() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, &[&[40, 0], &[0, 40]]);
        assert!(matches!(
            integral_closure(&i, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn normality_failure_carries_a_witness() {
        // (x^2, y^2) is not integrally closed: xy is the witness at power 1.
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, &[&[2, 0], &[0, 2]]);
        let cert = is_normal(&i, DEFAULT_BOX_BUDGET).unwrap();
        assert!(!cert.normal);
        let f = cert.failure.unwrap();
        assert_eq!(f.power, 1);
        assert_eq!(f.witness, "x*y");
    }
}
