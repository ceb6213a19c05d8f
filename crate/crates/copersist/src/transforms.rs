//! Structural operations on monomial ideals: expansion, weighting,
//! polarization, monomial localization, contraction, deletion, permutation,
//! and multiplication by a fixed monomial.
//!
//! Operations that change the ambient ring (expansion, polarization,
//! localization, deletion) return ideals over a freshly built ring; new
//! variables follow the `base_k` naming grammar so that output is stable
//! and machine-readable.


use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, MonomialPrime, Ring};

/// Per-variable copy counts for ring expansion; every entry is >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionSpec {
    tuple: Vec<u64>,
}

impl ExpansionSpec {
    pub fn new(ring: &Ring, tuple: Vec<u64>) -> Result<Self> {
        if tuple.len() != ring.len() {
            return Err(Error::TupleLengthMismatch {
                expected: ring.len(),
                got: tuple.len(),
            });
        }
        if tuple.iter().any(|&t| t == 0) {
            return Err(Error::Invalid("expansion tuple entries must be >= 1".into()));
        }
        Ok(ExpansionSpec { tuple })
    }

    pub fn tuple(&self) -> &[u64] {
        &self.tuple
    }

    /// The expanded ring: variable `v` with count `c` becomes `v_1..v_c`,
    /// blocks in the original variable order.
    pub fn expanded_ring(&self, ring: &Ring) -> Ring {
        let mut names = Vec::new();
        for (i, &c) in self.tuple.iter().enumerate() {
            for k in 1..=c {
                names.push(format!("{}_{k}", ring.var_name(i)));
            }
        }
        Ring::new(names).expect("ring is nonempty")
    }

    fn block_start(&self, i: usize) -> usize {
        self.tuple[..i].iter().map(|&c| c as usize).sum()
    }

    /// Image of a monomial prime: each variable is replaced by its whole
    /// block of copies.
    pub fn expand_prime(&self, p: &MonomialPrime, expanded: &Ring) -> MonomialPrime {
        let mut vars = Vec::new();
        for &i in p.indices() {
            let start = self.block_start(i);
            vars.extend(start..start + self.tuple[i] as usize);
        }
        MonomialPrime::from_indices(expanded.clone(), vars).unwrap()
    }
}

/// Expansion: every generator `x_1^{a_1}...x_n^{a_n}` becomes the product of
/// block-prime powers `p_1^{a_1}...p_n^{a_n}`, and the results are summed.
pub fn expand(ideal: &MonomialIdeal, spec: &ExpansionSpec) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("expansion"));
    }
    if spec.tuple.len() != ideal.ring().len() {
        return Err(Error::TupleLengthMismatch {
            expected: ideal.ring().len(),
            got: spec.tuple.len(),
        });
    }
    let expanded = spec.expanded_ring(ideal.ring());
    let mut acc = MonomialIdeal::zero(expanded.clone());
    for g in ideal.gens() {
        let mut term = MonomialIdeal::unit(expanded.clone());
        for (i, &a) in g.exps().iter().enumerate() {
            if a == 0 {
                continue;
            }
            let start = spec.block_start(i);
            let block = MonomialPrime::from_indices(
                expanded.clone(),
                (start..start + spec.tuple[i] as usize).collect(),
            )
            .unwrap();
            term = term.product(&MonomialIdeal::from_prime(&block).pow(a)?)?;
        }
        acc = acc.sum(&term)?;
    }
    Ok(acc)
}

/// Weighting: substitute `x_i -> x_i^{w_i}`. Weights are given in ring
/// order and must all be >= 1.
pub fn weight(ideal: &MonomialIdeal, weights: &[u64]) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("weighting"));
    }
    let ring = ideal.ring();
    if weights.len() != ring.len() {
        let missing = if weights.len() < ring.len() {
            ring.var_name(weights.len()).to_string()
        } else {
            return Err(Error::Invalid(format!(
                "{} weights given but the ring has {} variables",
                weights.len(),
                ring.len()
            )));
        };
        return Err(Error::UnweightedVariable(missing));
    }
    if weights.iter().any(|&w| w == 0) {
        return Err(Error::Invalid("weights must be >= 1".into()));
    }
    let mut gens = Vec::with_capacity(ideal.num_gens());
    for g in ideal.gens() {
        let mut exps = Vec::with_capacity(ring.len());
        for (&e, &w) in g.exps().iter().zip(weights) {
            exps.push(e.checked_mul(w).ok_or(Error::ExponentOverflow)?);
        }
        gens.push(ring.monomial(exps)?);
    }
    MonomialIdeal::new(ring.clone(), gens)
}

/// Correspondence between a polarized (shadow) ring and its base ring.
#[derive(Clone, Debug)]
pub struct PolarizationMap {
    base_ring: Ring,
    shadow_ring: Ring,
    /// shadow index -> base index
    to_base: Vec<usize>,
}

impl PolarizationMap {
    pub fn base_ring(&self) -> &Ring {
        &self.base_ring
    }

    pub fn shadow_ring(&self) -> &Ring {
        &self.shadow_ring
    }

    pub fn base_of(&self, shadow: usize) -> usize {
        self.to_base[shadow]
    }
}

/// Polarization: `x_i^t` inside a generator becomes the product of the
/// first `t` shadows of `x_i`. The shadow ring allocates one variable
/// `v_k` per base variable `v` and copy `k` up to the maximal exponent of
/// `v` over the generators. The result is squarefree.
pub fn polarize(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, PolarizationMap)> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("polarization"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("polarization"));
    }
    let base = ideal.ring();
    let lcm = ideal.lcm_gens()?;
    let mut names = Vec::new();
    let mut to_base = Vec::new();
    let mut block_start = vec![0usize; base.len()];
    for i in 0..base.len() {
        block_start[i] = names.len();
        for k in 1..=lcm.exp(i) {
            names.push(format!("{}_{k}", base.var_name(i)));
            to_base.push(i);
        }
    }
    let shadow_ring = Ring::new(names)?;
    let map = PolarizationMap {
        base_ring: base.clone(),
        shadow_ring: shadow_ring.clone(),
        to_base,
    };

    let mut gens = Vec::with_capacity(ideal.num_gens());
    for g in ideal.gens() {
        let mut exps = vec![0u64; shadow_ring.len()];
        for (i, &e) in g.exps().iter().enumerate() {
            for k in 0..e as usize {
                exps[block_start[i] + k] = 1;
            }
        }
        gens.push(shadow_ring.monomial(exps)?);
    }
    let polarized = MonomialIdeal::new(shadow_ring, gens)?;
    Ok((polarized, map))
}

/// Depolarization: substitute every shadow by its base variable.
pub fn depolarize(ideal: &MonomialIdeal, map: &PolarizationMap) -> Result<MonomialIdeal> {
    if ideal.ring() != map.shadow_ring() {
        return Err(Error::RingMismatch);
    }
    let base = map.base_ring();
    let mut gens = Vec::with_capacity(ideal.num_gens());
    for g in ideal.gens() {
        let mut exps = vec![0u64; base.len()];
        for (s, &e) in g.exps().iter().enumerate() {
            let b = map.to_base[s];
            exps[b] = exps[b].checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        gens.push(base.monomial(exps)?);
    }
    MonomialIdeal::new(base.clone(), gens)
}

/// Rebuilds a polarization map from shadow variable names of the form
/// `base_k` (`k` a positive integer; the split is at the last underscore).
/// Base variables appear in order of first appearance.
pub fn derive_polarization_map(shadow_ring: &Ring) -> Result<PolarizationMap> {
    let mut base_names: Vec<String> = Vec::new();
    let mut to_base = Vec::with_capacity(shadow_ring.len());
    for name in shadow_ring.vars() {
        let Some(cut) = name.rfind('_') else {
            return Err(Error::UnmappedShadow(name.clone()));
        };
        let (base, suffix) = (&name[..cut], &name[cut + 1..]);
        if base.is_empty() || suffix.parse::<u64>().map_or(true, |k| k == 0) {
            return Err(Error::UnmappedShadow(name.clone()));
        }
        let idx = match base_names.iter().position(|b| b == base) {
            Some(i) => i,
            None => {
                base_names.push(base.to_string());
                base_names.len() - 1
            }
        };
        to_base.push(idx);
    }
    Ok(PolarizationMap {
        base_ring: Ring::new(base_names)?,
        shadow_ring: shadow_ring.clone(),
        to_base,
    })
}

/// Monomial localization `I(p)`: variables outside `p` are set to 1 and the
/// ring shrinks to the variables of `p` (in ring order). When a generator
/// collapses to 1 the result is the unit ideal.
pub fn localize(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<MonomialIdeal> {
    if ideal.ring() != p.ring() {
        return Err(Error::RingMismatch);
    }
    let keep = p.indices();
    let names: Vec<String> = keep
        .iter()
        .map(|&i| ideal.ring().var_name(i).to_string())
        .collect();
    let restricted = Ring::new(names)?;
    let mut gens = Vec::with_capacity(ideal.num_gens());
    for g in ideal.gens() {
        let exps: Vec<u64> = keep.iter().map(|&i| g.exp(i)).collect();
        gens.push(restricted.monomial(exps)?);
    }
    MonomialIdeal::new(restricted, gens)
}

/// Restriction of a prime of the big ring to the localized ring, by name.
/// Only valid when `q ⊆ p`.
pub fn restrict_prime(q: &MonomialPrime, localized: &Ring) -> Result<MonomialPrime> {
    let mut vars = Vec::with_capacity(q.len());
    for name in q.names() {
        let i = localized
            .index_of(&name)
            .ok_or(Error::UnknownVariable(name))?;
        vars.push(i);
    }
    MonomialPrime::from_indices(localized.clone(), vars)
}

/// Contraction `I / x_j`: localization at the prime on all other variables.
pub fn contract(ideal: &MonomialIdeal, var: usize) -> Result<MonomialIdeal> {
    let p = ideal.ring().maximal_prime().without(var)?;
    localize(ideal, &p)
}

/// Deletion `I \ x_j`: every generator divisible by `x_j` is dropped and the
/// ring shrinks by `x_j`. Dropping every generator yields the zero ideal.
pub fn delete(ideal: &MonomialIdeal, var: usize) -> Result<MonomialIdeal> {
    let ring = ideal.ring();
    if var >= ring.len() {
        return Err(Error::UnknownVariable(format!("#{var}")));
    }
    let names: Vec<String> = (0..ring.len())
        .filter(|&i| i != var)
        .map(|i| ring.var_name(i).to_string())
        .collect();
    let smaller = Ring::new(names)?;
    let mut gens = Vec::new();
    for g in ideal.gens() {
        if g.exp(var) > 0 {
            continue;
        }
        let exps: Vec<u64> = (0..ring.len())
            .filter(|&i| i != var)
            .map(|i| g.exp(i))
            .collect();
        gens.push(smaller.monomial(exps)?);
    }
    MonomialIdeal::new(smaller, gens)
}

/// A permutation of the support variables of a squarefree ideal.
#[derive(Clone, Debug)]
pub struct PermutationSpec {
    /// Full mapping on ring indices; identity outside the permuted set.
    mapping: Vec<usize>,
}

impl PermutationSpec {
    /// Builds a permutation from (from, to) index pairs. The pairs must
    /// form a bijection of the ideal's support onto itself; unmentioned
    /// support variables are fixed.
    pub fn new(ideal: &MonomialIdeal, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = ideal.ring().len();
        let support = ideal.support();
        let mut mapping: Vec<usize> = (0..n).collect();
        for &(from, to) in pairs {
            if from >= n || to >= n {
                return Err(Error::InvalidPermutation("index out of range".into()));
            }
            if !support.contains(&from) || !support.contains(&to) {
                return Err(Error::InvalidPermutation(format!(
                    "{} -> {} moves a variable outside the support",
                    ideal.ring().var_name(from),
                    ideal.ring().var_name(to)
                )));
            }
            mapping[from] = to;
        }
        let mut seen = vec![false; n];
        for &i in &support {
            let img = mapping[i];
            if seen[img] {
                return Err(Error::InvalidPermutation("mapping is not injective".into()));
            }
            seen[img] = true;
        }
        for &i in &support {
            if !seen[i] {
                return Err(Error::InvalidPermutation(
                    "image does not cover the support".into(),
                ));
            }
        }
        Ok(PermutationSpec { mapping })
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.mapping[i]
    }
}

/// Relabels the variables of a squarefree ideal by a support permutation.
pub fn permute(ideal: &MonomialIdeal, sigma: &PermutationSpec) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let ring = ideal.ring();
    let mut gens = Vec::with_capacity(ideal.num_gens());
    for g in ideal.gens() {
        let mut exps = vec![0u64; ring.len()];
        for i in g.support() {
            exps[sigma.apply_index(i)] = g.exp(i);
        }
        gens.push(ring.monomial(exps)?);
    }
    MonomialIdeal::new(ring.clone(), gens)
}

/// Relabels a prime by the same permutation (for cross-checking the
/// associated primes of a permuted ideal).
pub fn permute_prime(p: &MonomialPrime, sigma: &PermutationSpec) -> MonomialPrime {
    let vars: Vec<usize> = p.indices().iter().map(|&i| sigma.apply_index(i)).collect();
    MonomialPrime::from_indices(p.ring().clone(), vars).unwrap()
}

/// The monomial multiple `h·I`.
pub fn scale_by_monomial(ideal: &MonomialIdeal, h: &Monomial) -> Result<MonomialIdeal> {
    if ideal.ring() != h.ring() {
        return Err(Error::RingMismatch);
    }
    let mut gens = Vec::with_capacity(ideal.num_gens());
    for g in ideal.gens() {
        gens.push(g.checked_mul(h)?);
    }
    MonomialIdeal::new(ideal.ring().clone(), gens)
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

    #[test]
    fn expansion_of_the_demo_ideal() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let i = ideal(&r, &[&[1, 2, 0], &[0, 1, 1], &[0, 0, 3]]);
        let spec = ExpansionSpec::new(&r, vec![3, 1, 2]).unwrap();
        let e = expand(&i, &spec).unwrap();
        assert_eq!(
            e.ring().vars(),
            &["x1_1", "x1_2", "x1_3", "x2_1", "x3_1", "x3_2"]
        );
        assert_eq!(e.num_gens(), 9);
        let s = e.ring();
        let expect = ideal(
            s,
            &[
                &[1, 0, 0, 2, 0, 0],
                &[0, 1, 0, 2, 0, 0],
                &[0, 0, 1, 2, 0, 0],
                &[0, 0, 0, 1, 1, 0],
                &[0, 0, 0, 1, 0, 1],
                &[0, 0, 0, 0, 3, 0],
                &[0, 0, 0, 0, 2, 1],
                &[0, 0, 0, 0, 1, 2],
                &[0, 0, 0, 0, 0, 3],
            ],
        );
        assert_eq!(e, expect);
    }

    #[test]
    fn identity_expansion_renames_only() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let i = ideal(&r, &[&[2, 1], &[0, 3]]);
        let spec = ExpansionSpec::new(&r, vec![1, 1]).unwrap();
        let e = expand(&i, &spec).unwrap();
        assert_eq!(e.ring().vars(), &["x1_1", "x2_1"]);
        let exps: Vec<&[u64]> = e.gens().iter().map(|g| g.exps()).collect();
        let orig: Vec<&[u64]> = i.gens().iter().map(|g| g.exps()).collect();
        assert_eq!(exps, orig);
    }

    #[test]
    fn tuple_length_must_match() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        assert!(matches!(
            ExpansionSpec::new(&r, vec![2]),
            Err(Error::TupleLengthMismatch { .. })
        ));
    }

    #[test]
    fn weighting_the_demo_ideal() {
        let r = Ring::new(["x1", "x2", "x3", "x4", "x5"]).unwrap();
        let i = ideal(
            &r,
            &[&[2, 0, 0, 1, 0], &[0, 4, 0, 2, 1], &[1, 0, 2, 0, 3]],
        );
        let w = weight(&i, &[3, 2, 2, 4, 1]).unwrap();
        let expect = ideal(
            &r,
            &[&[6, 0, 0, 4, 0], &[0, 8, 0, 8, 1], &[3, 0, 4, 0, 3]],
        );
        assert_eq!(w, expect);
        assert_eq!(weight(&i, &[1; 5]).unwrap(), i);
    }

    #[test]
    fn polarize_a_pure_square() {
        let r = Ring::new(["x"]).unwrap();
        let i = ideal(&r, &[&[2]]);
        let (p, map) = polarize(&i).unwrap();
        assert_eq!(p.ring().vars(), &["x_1", "x_2"]);
        assert_eq!(p.render(), "(x_1*x_2)");
        assert_eq!(depolarize(&p, &map).unwrap(), i);
    }

    #[test]
    fn polarization_round_trip() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let i = ideal(&r, &[&[3, 1, 0], &[0, 2, 2], &[1, 0, 1]]);
        let (p, map) = polarize(&i).unwrap();
        assert!(p.is_squarefree());
        assert_eq!(depolarize(&p, &map).unwrap(), i);
    }

    #[test]
    fn derived_map_matches_generated_names() {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = ideal(&r, &[&[2, 1], &[0, 3]]);
        let (p, map) = polarize(&i).unwrap();
        let derived = derive_polarization_map(p.ring()).unwrap();
        assert_eq!(derived.base_ring().vars(), map.base_ring().vars());
        assert_eq!(derived.to_base, map.to_base);
        assert!(derive_polarization_map(&Ring::new(["plain"]).unwrap()).is_err());
    }

    #[test]
    fn localization_and_contraction() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let i = ideal(&r, &[&[1, 1, 0], &[0, 1, 1]]);
        let q = contract(&i, 0).unwrap();
        assert_eq!(q.ring().vars(), &["x2", "x3"]);
        assert_eq!(q.render(), "(x2)");

        // a supp-covering prime keeps the ideal intact
        let p = r.maximal_prime();
        let full = localize(&i, &p).unwrap();
        let exps: Vec<&[u64]> = full.gens().iter().map(|g| g.exps()).collect();
        assert_eq!(exps, vec![&[1, 1, 0][..], &[0, 1, 1][..]]);
    }

    #[test]
    fn contraction_of_prime_containing_var_is_unit() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let p = ideal(&r, &[&[1, 0], &[0, 1]]);
        assert!(contract(&p, 0).unwrap().is_unit());
    }

    #[test]
    fn deletion_examples() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let i = ideal(&r, &[&[1, 0]]);
        let d = delete(&i, 0).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.ring().vars(), &["x2"]);

        let j = ideal(&r, &[&[1, 1], &[0, 2]]);
        let d = delete(&j, 0).unwrap();
        assert_eq!(d.render(), "(x2^2)");
    }

    #[test]
    fn permutation_swaps_and_rejects() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let i = ideal(&r, &[&[1, 0, 1]]);
        let sigma = PermutationSpec::new(&i, &[(0, 2), (2, 0)]).unwrap();
        assert_eq!(permute(&i, &sigma).unwrap().render(), "(x1*x3)");

        let j = ideal(&r, &[&[1, 1, 0], &[0, 0, 1]]);
        let swap12 = PermutationSpec::new(&j, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(permute(&j, &swap12).unwrap().render(), "(x3, x1*x2)");

        let nonsf = ideal(&r, &[&[2, 0, 0]]);
        let id = PermutationSpec::new(&nonsf, &[]).unwrap();
        assert_eq!(permute(&nonsf, &id), Err(Error::NotSquarefree));

        assert!(PermutationSpec::new(&j, &[(0, 1)]).is_err()); // not injective
    }

    #[test]
    fn scaling_by_one_is_identity() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let i = ideal(&r, &[&[1, 0], &[0, 2]]);
        assert_eq!(scale_by_monomial(&i, &r.one()).unwrap(), i);
        let h = r.var(0);
        assert_eq!(
            scale_by_monomial(&i, &h).unwrap().render(),
            "(x1^2, x1*x2^2)"
        );
    }
}
