//! Monomial ideals in canonical minimal form and their exact arithmetic.
//!
//! Every constructed ideal is kept canonical: no generator divides another,
//! generators are sorted in the graded order of [`Monomial::graded_cmp`],
//! the zero ideal is the empty generator list, and the unit ideal is `{1}`.
//! All operations are pure functions returning fresh canonical ideals.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialPrime, Ring};

/// A monomial ideal, stored as its unique minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Result of [`MonomialIdeal::sum_parts`]: the sum plus a flag telling
/// whether the two summands used disjoint variable sets.
#[derive(Clone, Debug)]
pub struct Summation {
    pub ideal: MonomialIdeal,
    pub variable_disjoint: bool,
}

impl MonomialIdeal {
    /// Canonicalizes a generating set: drops non-minimal generators, sorts,
    /// and collapses to `{1}` when the unit monomial is present.
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.ring() != &ring {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Self::minimalize_owned(ring, gens))
    }

    /// The zero ideal (no generators).
    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    /// The unit ideal `(1)`.
    pub fn unit(ring: Ring) -> Self {
        let one = ring.one();
        MonomialIdeal { ring, gens: vec![one] }
    }

    /// The ideal generated by the prime's variables.
    pub fn from_prime(p: &MonomialPrime) -> Self {
        let ring = p.ring().clone();
        let gens = p.indices().iter().map(|&i| ring.var(i)).collect();
        MonomialIdeal { ring, gens }
    }

    fn minimalize_owned(ring: Ring, mut gens: Vec<Monomial>) -> Self {
        if gens.iter().any(|g| g.is_one()) {
            return Self::unit(ring);
        }
        gens.sort_by(Monomial::graded_cmp);
        gens.dedup();
        // Sorted by degree, so a divisor always precedes its multiples.
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        'outer: for g in gens {
            for m in &minimal {
                if m.divides(&g) {
                    continue 'outer;
                }
            }
            minimal.push(g);
        }
        MonomialIdeal { ring, gens: minimal }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The minimal generating set, canonically sorted.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Ideal sum `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::minimalize_owned(self.ring.clone(), gens))
    }

    /// Sum together with the variable-disjointness flag.
    pub fn sum_parts(&self, other: &MonomialIdeal) -> Result<Summation> {
        let ideal = self.sum(other)?;
        let sa = self.support();
        let sb = other.support();
        let variable_disjoint = sa.iter().all(|i| !sb.contains(i));
        Ok(Summation {
            ideal,
            variable_disjoint,
        })
    }

    /// Ideal product `I * J`.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.checked_mul(v)?);
            }
        }
        Ok(Self::minimalize_owned(self.ring.clone(), gens))
    }

    /// `I^k`, with `I^0 = (1)` by convention.
    pub fn pow(&self, k: u64) -> Result<MonomialIdeal> {
        if k == 0 {
            return Ok(Self::unit(self.ring.clone()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection `I ∩ J` via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone()));
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.lcm(v));
            }
        }
        Ok(Self::minimalize_owned(self.ring.clone(), gens))
    }

    /// n-ary intersection fold; the empty intersection is the unit ideal.
    pub fn intersect_many(ring: Ring, ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
        let mut acc = Self::unit(ring);
        for i in ideals {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// Colon by a single monomial: `(I : f)`.
    pub fn colon_monomial(&self, f: &Monomial) -> Result<MonomialIdeal> {
        if self.ring != *f.ring() {
            return Err(Error::RingMismatch);
        }
        let gens = self.gens.iter().map(|u| u.colon(f)).collect();
        Ok(Self::minimalize_owned(self.ring.clone(), gens))
    }

    /// Colon by an ideal: `(I : J) = ∩_{v ∈ G(J)} (I : v)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        let mut acc = Self::unit(self.ring.clone());
        for v in &other.gens {
            acc = acc.intersect(&self.colon_monomial(v)?)?;
        }
        Ok(acc)
    }

    /// Radical: generated by the squarefree parts of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::squarefree_part).collect();
        Self::minimalize_owned(self.ring.clone(), gens)
    }

    /// Membership: `f ∈ I` iff some generator divides `f`.
    pub fn contains(&self, f: &Monomial) -> Result<bool> {
        if self.ring != *f.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(self.gens.iter().any(|g| g.divides(f)))
    }

    /// Containment `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ring(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sorted indices of variables appearing in some generator.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.len()];
        for g in &self.gens {
            for i in g.support() {
                seen[i] = true;
            }
        }
        (0..self.ring.len()).filter(|&i| seen[i]).collect()
    }

    /// Componentwise max of the generator exponents. Errors on the zero ideal.
    pub fn lcm_gens(&self) -> Result<Monomial> {
        let mut it = self.gens.iter();
        let first = it.next().ok_or(Error::ZeroIdeal("lcm of generators"))?;
        let mut acc = first.clone();
        for g in it {
            acc = acc.lcm(g);
        }
        Ok(acc)
    }

    /// Renders the canonical generator list, e.g. `(x^2, x*y)`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        Ring::new(["x1", "x2"]).unwrap()
    }

    fn ideal(ring: &Ring, gens: &[&[u64]]) -> MonomialIdeal {
        let gens = gens
            .iter()
            .map(|e| ring.monomial(e.to_vec()).unwrap())
            .collect();
        MonomialIdeal::new(ring.clone(), gens).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let r = ring2();
        // {x1, x1*x2} -> (x1)
        let i = ideal(&r, &[&[1, 0], &[1, 1]]);
        assert_eq!(i.gens().len(), 1);
        assert_eq!(i.gens()[0].exps(), &[1, 0]);
    }

    #[test]
    fn unit_absorbs_everything() {
        let r = ring2();
        let i = ideal(&r, &[&[0, 0], &[1, 0]]);
        assert!(i.is_unit());
        assert_eq!(i.render(), "(1)");
    }

    #[test]
    fn minimalize_pairwise_filter() {
        // {x, x*y, x*y, y*z, x*y*z*t} -> (x, y*z)
        let r = Ring::new(["x", "y", "z", "t"]).unwrap();
        let i = ideal(
            &r,
            &[
                &[1, 0, 0, 0],
                &[1, 1, 0, 0],
                &[1, 1, 0, 0],
                &[0, 1, 1, 0],
                &[1, 1, 1, 1],
            ],
        );
        assert_eq!(i.render(), "(x, y*z)");
    }

    #[test]
    fn sum_and_absorption() {
        let r = ring2();
        let a = ideal(&r, &[&[1, 0]]);
        let b = ideal(&r, &[&[0, 1]]);
        assert_eq!(a.sum(&b).unwrap().render(), "(x1, x2)");
        let ab = ideal(&r, &[&[1, 1]]);
        assert_eq!(ab.sum(&a).unwrap().render(), "(x1)");
        let parts = a.sum_parts(&b).unwrap();
        assert!(parts.variable_disjoint);
        let parts = a.sum_parts(&ab).unwrap();
        assert!(!parts.variable_disjoint);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring2();
        let s = Ring::new(["y1", "y2"]).unwrap();
        let a = ideal(&r, &[&[1, 0]]);
        let b = ideal(&s, &[&[1, 0]]);
        assert_eq!(a.sum(&b), Err(Error::RingMismatch));
        assert_eq!(a.intersect(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn power_of_two_variable_prime() {
        let r = ring2();
        let i = ideal(&r, &[&[1, 0], &[0, 1]]);
        let sq = i.pow(2).unwrap();
        assert_eq!(sq.render(), "(x1^2, x1*x2, x2^2)");
    }

    #[test]
    fn power_of_principal_is_principal() {
        let r = ring2();
        let i = ideal(&r, &[&[1, 1]]);
        assert_eq!(i.pow(3).unwrap().render(), "(x1^3*x2^3)");
    }

    #[test]
    fn triangle_cover_square_has_six_gens() {
        // Derived by expanding (x1x2, x1x3, x2x3)^2 by hand.
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let j = ideal(&r, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let sq = j.pow(2).unwrap();
        assert_eq!(sq.num_gens(), 6);
        let expected = ideal(
            &r,
            &[
                &[2, 2, 0],
                &[2, 0, 2],
                &[0, 2, 2],
                &[2, 1, 1],
                &[1, 2, 1],
                &[1, 1, 2],
            ],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn zero_power_is_unit_by_convention() {
        let r = ring2();
        let i = ideal(&r, &[&[1, 0]]);
        assert!(i.pow(0).unwrap().is_unit());
        assert!(MonomialIdeal::unit(r).pow(5).unwrap().is_unit());
    }

    #[test]
    fn intersect_principal() {
        let r = ring2();
        let a = ideal(&r, &[&[1, 0]]);
        let b = ideal(&r, &[&[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap().render(), "(x1*x2)");
    }

    #[test]
    fn intersect_edge_primes_of_triangle() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let p12 = ideal(&r, &[&[1, 0, 0], &[0, 1, 0]]);
        let p23 = ideal(&r, &[&[0, 1, 0], &[0, 0, 1]]);
        let p13 = ideal(&r, &[&[1, 0, 0], &[0, 0, 1]]);
        let j = p12.intersect(&p23).unwrap().intersect(&p13).unwrap();
        assert_eq!(j.render(), "(x1*x2, x1*x3, x2*x3)");
    }

    #[test]
    fn intersect_with_zero_is_zero() {
        let r = ring2();
        let a = ideal(&r, &[&[1, 0]]);
        let z = MonomialIdeal::zero(r);
        assert!(a.intersect(&z).unwrap().is_zero());
    }

    #[test]
    fn colon_basics() {
        let r = ring2();
        let i = ideal(&r, &[&[1, 1]]);
        let x1 = r.var(0);
        assert_eq!(i.colon_monomial(&x1).unwrap().render(), "(x2)");
        let z = MonomialIdeal::zero(r);
        assert_eq!(i.colon(&z), Err(Error::ColonByZero));
    }

    #[test]
    fn radical_examples() {
        let r = ring2();
        let i = ideal(&r, &[&[3, 0]]);
        assert_eq!(i.radical().render(), "(x1)");
        let sf = ideal(&r, &[&[1, 1], &[1, 0]]);
        assert_eq!(sf.radical(), sf);
    }

    #[test]
    fn membership() {
        let r = ring2();
        let i = ideal(&r, &[&[1, 1]]);
        assert!(i.contains(&r.monomial(vec![2, 1]).unwrap()).unwrap());
        assert!(!i.contains(&r.one()).unwrap());
        let j = ideal(&r, &[&[2, 0], &[0, 2]]);
        assert!(j.contains(&r.monomial(vec![2, 2]).unwrap()).unwrap());
    }

    #[test]
    fn support_and_lcm() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let i = ideal(&r, &[&[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(i.support(), vec![0, 1, 2]);
        let j = ideal(&r, &[&[2, 1, 0], &[0, 3, 0]]);
        assert_eq!(j.lcm_gens().unwrap().exps(), &[2, 3, 0]);
        let z = MonomialIdeal::zero(r);
        assert_eq!(z.support(), Vec::<usize>::new());
        assert!(z.lcm_gens().is_err());
    }
}
