//! Irredundant irreducible and primary decomposition of monomial ideals,
//! associated primes, minimal primes, and a brute-force witness oracle.
//!
//! The decomposition uses the classical generator-splitting recursion: a
//! minimal generator `u = a*b` with coprime parts gives
//! `I = (I + a) ∩ (I + b)`. Leaves are ideals generated by pure powers,
//! which are exactly the irreducible monomial ideals. Subproblems repeat
//! heavily, so results are memoized on the canonical generator list.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, MonomialPrime, Ring};

/// Default ceiling on the number of lattice points the witness oracle
/// may enumerate.
pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

/// An irreducible monomial ideal `(x_i^{b_i} : i ∈ dom)`, stored as the
/// map from variable index to its positive bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleComponent {
    ring: Ring,
    bounds: BTreeMap<usize, u64>,
}

impl IrreducibleComponent {
    pub fn new(ring: Ring, bounds: BTreeMap<usize, u64>) -> Result<Self> {
        if bounds.is_empty() {
            return Err(Error::Invalid("irreducible component with no bounds".into()));
        }
        if bounds.values().any(|&b| b == 0) {
            return Err(Error::Invalid("irreducible bounds must be positive".into()));
        }
        if bounds.keys().any(|&i| i >= ring.len()) {
            return Err(Error::Invalid("bound index out of range".into()));
        }
        Ok(IrreducibleComponent { ring, bounds })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn bounds(&self) -> &BTreeMap<usize, u64> {
        &self.bounds
    }

    /// The component as an ordinary ideal.
    pub fn ideal(&self) -> MonomialIdeal {
        let gens = self
            .bounds
            .iter()
            .map(|(&i, &b)| {
                let mut exps = vec![0; self.ring.len()];
                exps[i] = b;
                self.ring.monomial(exps).unwrap()
            })
            .collect();
        MonomialIdeal::new(self.ring.clone(), gens).unwrap()
    }

    /// Radical: the prime on the bounded variables.
    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::from_indices(self.ring.clone(), self.bounds.keys().copied().collect())
            .unwrap()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.bounds.iter().any(|(&i, &b)| m.exp(i) >= b)
    }

    /// Membership for a raw exponent vector.
    fn contains_exps(&self, exps: &[u64]) -> bool {
        self.bounds.iter().any(|(&i, &b)| exps[i] >= b)
    }

    /// The largest monomial outside the component, clamped to `big` on the
    /// unbounded coordinates. Used by the irredundancy filter: the
    /// intersection of a family of irreducible components lies inside this
    /// component exactly when the corner lies in every member of the family.
    fn corner(&self, n: usize, big: u64) -> Vec<u64> {
        let mut exps = vec![big; n];
        for (&i, &b) in &self.bounds {
            exps[i] = b - 1;
        }
        exps
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .bounds
            .iter()
            .map(|(&i, &b)| {
                if b == 1 {
                    self.ring.var_name(i).to_string()
                } else {
                    format!("{}^{}", self.ring.var_name(i), b)
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl PartialOrd for IrreducibleComponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for IrreducibleComponent {
    fn cmp(&self, other: &Self) -> Ordering {
        let a: Vec<_> = self.bounds.iter().collect();
        let b: Vec<_> = other.bounds.iter().collect();
        a.cmp(&b).then_with(|| self.ring.vars().cmp(other.ring.vars()))
    }
}

/// A primary component: an ideal together with its prime radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub ideal: MonomialIdeal,
    pub radical: MonomialPrime,
}

fn gens_key(gens: &[Monomial]) -> Vec<u64> {
    let mut key = Vec::with_capacity(gens.len() * (gens.first().map_or(0, |g| g.exps().len()) + 1));
    for g in gens {
        key.extend_from_slice(g.exps());
        key.push(u64::MAX); // separator
    }
    key
}

/// Inserts `extra` into a minimal generator list, dropping the generators it
/// divides. `extra` must not be divisible by any existing generator.
fn with_generator(gens: &[Monomial], extra: Monomial) -> Vec<Monomial> {
    debug_assert!(!gens.iter().any(|g| g.divides(&extra)));
    let mut out: Vec<Monomial> = gens.iter().filter(|g| !extra.divides(g)).cloned().collect();
    let pos = out
        .binary_search_by(|g| g.graded_cmp(&extra))
        .unwrap_or_else(|p| p);
    out.insert(pos, extra);
    out
}

struct Splitter {
    ring: Ring,
    memo: HashMap<Vec<u64>, Vec<IrreducibleComponent>>,
}

impl Splitter {
    fn split(&mut self, gens: &[Monomial]) -> Vec<IrreducibleComponent> {
        let key = gens_key(gens);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = match gens.iter().find(|g| !g.is_pure_power()) {
            None => {
                // All pure powers: the ideal itself is irreducible.
                let mut bounds = BTreeMap::new();
                for g in gens {
                    let i = g.support()[0];
                    bounds.insert(i, g.exp(i));
                }
                vec![IrreducibleComponent {
                    ring: self.ring.clone(),
                    bounds,
                }]
            }
            Some(u) => {
                let j = u.support()[0];
                let mut a_exps = vec![0; self.ring.len()];
                a_exps[j] = u.exp(j);
                let a = self.ring.monomial(a_exps).unwrap();
                let b = u.div_exact(&a);
                let left = with_generator(gens, a);
                let right = with_generator(gens, b);
                let mut set: BTreeSet<IrreducibleComponent> =
                    self.split(&left).into_iter().collect();
                set.extend(self.split(&right));
                set.into_iter().collect()
            }
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// Removes components containing the intersection of the remaining ones.
/// Containment is decided by the corner-witness criterion: the corner of
/// `Q_i` is the largest monomial outside `Q_i`, and the intersection of the
/// others escapes `Q_i` exactly when that corner lies in every other
/// component. No intersections are ever materialized.
fn strip_redundant(mut comps: Vec<IrreducibleComponent>, n: usize) -> Vec<IrreducibleComponent> {
    let big = comps
        .iter()
        .flat_map(|c| c.bounds.values().copied())
        .max()
        .unwrap_or(1);
    loop {
        let mut removed = false;
        let mut i = 0;
        while i < comps.len() {
            let corner = comps[i].corner(n, big);
            let escapes = comps
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .all(|(_, c)| c.contains_exps(&corner));
            if !escapes && comps.len() > 1 {
                comps.remove(i);
                removed = true;
            } else {
                i += 1;
            }
        }
        if !removed {
            return comps;
        }
    }
}

fn require_decomposable(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("decomposition"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("decomposition"));
    }
    Ok(())
}

/// Irredundant irreducible decomposition, in canonical component order.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    require_decomposable(ideal)?;
    let mut splitter = Splitter {
        ring: ideal.ring().clone(),
        memo: HashMap::new(),
    };
    let comps = splitter.split(ideal.gens());
    let mut comps = strip_redundant(comps, ideal.ring().len());
    comps.sort();
    Ok(comps)
}

/// Irredundant primary decomposition: irreducible components grouped by
/// radical, then redundant groups dropped. The surviving radicals are
/// pairwise distinct and are exactly the associated primes.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Vec<PrimaryComponent>> {
    let comps = irreducible_decomposition(ideal)?;
    let n = ideal.ring().len();
    let big = comps
        .iter()
        .flat_map(|c| c.bounds.values().copied())
        .max()
        .unwrap_or(1);

    let mut groups: BTreeMap<Vec<usize>, Vec<IrreducibleComponent>> = BTreeMap::new();
    for c in comps {
        groups
            .entry(c.bounds.keys().copied().collect())
            .or_default()
            .push(c);
    }
    let mut groups: Vec<Vec<IrreducibleComponent>> = groups.into_values().collect();

    // A group is redundant when the intersection of the other groups is
    // contained in each of its members; reuse the corner test per member.
    loop {
        let mut removed = false;
        let mut gi = 0;
        while gi < groups.len() {
            let others: Vec<&IrreducibleComponent> = groups
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != gi)
                .flat_map(|(_, g)| g.iter())
                .collect();
            let redundant = groups.len() > 1
                && groups[gi].iter().all(|member| {
                    let corner = member.corner(n, big);
                    !others.iter().all(|c| c.contains_exps(&corner))
                });
            if redundant {
                groups.remove(gi);
                removed = true;
            } else {
                gi += 1;
            }
        }
        if !removed {
            break;
        }
    }

    let mut out = Vec::with_capacity(groups.len());
    for group in groups {
        let radical = group[0].radical();
        let ideals: Vec<MonomialIdeal> = group.iter().map(|c| c.ideal()).collect();
        let ideal = MonomialIdeal::intersect_many(radical.ring().clone(), &ideals)?;
        out.push(PrimaryComponent { ideal, radical });
    }
    out.sort_by(|a, b| a.radical.canonical_cmp(&b.radical));
    Ok(out)
}

/// The associated primes of `R/I`, canonically sorted.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(primary_decomposition(ideal)?
        .into_iter()
        .map(|c| c.radical)
        .collect())
}

/// Inclusion-minimal associated primes.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let ass = associated_primes(ideal)?;
    Ok(ass
        .iter()
        .filter(|p| {
            ass.iter()
                .all(|q| q == *p || !q.is_subset_of(p))
        })
        .cloned()
        .collect())
}

/// Brute-force associated-prime oracle: enumerates every monomial `f` with
/// exponents bounded by `lcm(G(I))` and collects the colon ideals `(I : f)`
/// that are monomial primes. Independent of the splitting recursion.
pub fn ass_witness_oracle(ideal: &MonomialIdeal, budget: u64) -> Result<Vec<MonomialPrime>> {
    require_decomposable(ideal)?;
    let bound = ideal.lcm_gens()?;
    let n = ideal.ring().len();
    let mut points: u128 = 1;
    for &b in bound.exps() {
        points = points.saturating_mul(b as u128 + 1);
        if points > budget as u128 {
            return Err(Error::BudgetExceeded {
                needed: points,
                budget,
            });
        }
    }

    let gens = ideal.gens();
    let mut found: BTreeSet<MonomialPrime> = BTreeSet::new();
    let mut f = vec![0u64; n];
    loop {
        if let Some(vars) = colon_prime_vars(gens, &f) {
            found.insert(MonomialPrime::from_indices(ideal.ring().clone(), vars).unwrap());
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == n {
                return Ok(found.into_iter().collect());
            }
            if f[i] < bound.exp(i) {
                f[i] += 1;
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// If `(I : x^f)` is a monomial prime, returns its variable set.
fn colon_prime_vars(gens: &[Monomial], f: &[u64]) -> Option<Vec<usize>> {
    // Quotient exponent sums and degree-1 detection without materializing
    // the minimal form: the colon is prime iff no quotient is 1, some
    // quotients are single variables, and every quotient is divisible by one
    // of those variables.
    let mut vars: Vec<usize> = Vec::new();
    for g in gens {
        let mut deg: u64 = 0;
        let mut last_var = 0usize;
        for (i, (&e, &fe)) in g.exps().iter().zip(f).enumerate() {
            let q = e.saturating_sub(fe);
            if q > 0 {
                deg += q;
                last_var = i;
            }
            if deg > 1 {
                break;
            }
        }
        if deg == 0 {
            return None; // f ∈ I, colon is the unit ideal
        }
        if deg == 1 && !vars.contains(&last_var) {
            vars.push(last_var);
        }
    }
    if vars.is_empty() {
        return None;
    }
    for g in gens {
        // The quotient of g lies in the candidate prime iff some candidate
        // variable survives the division.
        let absorbed = vars.iter().any(|&v| g.exp(v) > f[v]);
        if !absorbed {
            return None;
        }
    }
    vars.sort_unstable();
    Some(vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(ring: &Ring, gens: &[&[u64]]) -> MonomialIdeal {
        let gens = gens
            .iter()
            .map(|e| ring.monomial(e.to_vec()).unwrap())
            .collect();
        MonomialIdeal::new(ring.clone(), gens).unwrap()
    }

    fn intersection_of(comps: &[IrreducibleComponent], ring: &Ring) -> MonomialIdeal {
        let ideals: Vec<MonomialIdeal> = comps.iter().map(|c| c.ideal()).collect();
        MonomialIdeal::intersect_many(ring.clone(), &ideals).unwrap()
    }

    #[test]
    fn already_irreducible() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let i = ideal(&r, &[&[2, 0], &[0, 1]]);
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].render(), "(x1^2, x2)");
    }

    #[test]
    fn principal_squarefree_splits_into_variables() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let i = ideal(&r, &[&[1, 1]]);
        let comps = irreducible_decomposition(&i).unwrap();
        let rendered: Vec<String> = comps.iter().map(|c| c.render()).collect();
        assert_eq!(rendered, vec!["(x1)", "(x2)"]);
    }

    #[test]
    fn decomposition_of_unit_or_zero_errors() {
        let r = Ring::new(["x1"]).unwrap();
        assert!(irreducible_decomposition(&MonomialIdeal::unit(r.clone())).is_err());
        assert!(irreducible_decomposition(&MonomialIdeal::zero(r)).is_err());
    }

    #[test]
    fn primary_decomposition_of_x2_xy() {
        // (x1^2, x1*x2) = (x1) ∩ (x1^2, x2), derived by splitting by hand.
        let r = Ring::new(["x1", "x2"]).unwrap();
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let comps = primary_decomposition(&i).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].radical.to_string(), "(x1)");
        assert_eq!(comps[0].ideal.render(), "(x1)");
        assert_eq!(comps[1].radical.to_string(), "(x1,x2)");
        assert_eq!(comps[1].ideal.render(), "(x2, x1^2)");
        let meet = comps[0].ideal.intersect(&comps[1].ideal).unwrap();
        assert_eq!(meet, i);
    }

    #[test]
    fn reconstruction_and_ass_of_triangle_edge_ideal() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let i = ideal(&r, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let comps = irreducible_decomposition(&i).unwrap();
        assert_eq!(intersection_of(&comps, &r), i);
        let ass: Vec<String> = associated_primes(&i)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(ass, vec!["(x1,x2)", "(x1,x3)", "(x2,x3)"]);
    }

    #[test]
    fn squarefree_primary_components_are_minimal_primes() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let i = ideal(&r, &[&[1, 1, 0], &[0, 1, 1]]);
        let ass = associated_primes(&i).unwrap();
        let min = minimal_primes(&i).unwrap();
        assert_eq!(ass, min);
    }

    #[test]
    fn witness_oracle_on_x2_xy() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let oracle = ass_witness_oracle(&i, DEFAULT_ORACLE_BUDGET).unwrap();
        let names: Vec<String> = oracle.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["(x1)", "(x1,x2)"]);
        assert_eq!(oracle, associated_primes(&i).unwrap());
    }

    #[test]
    fn witness_oracle_budget_is_enforced() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let i = ideal(&r, &[&[9, 0], &[0, 9]]);
        assert!(matches!(
            ass_witness_oracle(&i, 50),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn min_of_a_prime_is_itself() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let p = ideal(&r, &[&[1, 0, 0], &[0, 0, 1]]);
        let min = minimal_primes(&p).unwrap();
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].to_string(), "(x1,x3)");
    }
}
