//! Bounded verification of power-indexed properties: persistence,
//! copersistence, strong persistence, normal torsion-freeness, nearly
//! copersistence (single augmenting prime), its generalized variant
//! (a set of augmenting primes), and stabilization of the associated-prime
//! sequence.
//!
//! Every verdict is explicitly bounded: `HoldsUpToBound` never claims
//! anything beyond the requested power, and reports always carry the bound.
//!
//! The augmenting-prime search spaces are restricted to primes observed in
//! some `Ass(I^k)`, `k <= bound`. This loses nothing: a containment
//! `Ass(I^m) ∪ {p} ⊇ Ass(I^{m+1})` constrains only the primes of
//! `Ass(I^{m+1}) \ Ass(I^m)`, all of which are observed, so an unobserved
//! `p` can always be replaced by an observed one (or dropped).

use serde::Serialize;

use crate::decompose::associated_primes;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::MonomialPrime;

/// Default power bound used by the command-line interface.
pub const DEFAULT_POWER_BOUND: u64 = 4;

/// The associated primes of `I, I^2, ..., I^N`, canonically sorted per power.
#[derive(Clone, Debug)]
pub struct AssSequence {
    pub ideal: MonomialIdeal,
    pub max_power: u64,
    /// Entry `k-1` holds `Ass(R/I^k)`.
    pub per_power: Vec<Vec<MonomialPrime>>,
}

impl AssSequence {
    pub fn ass(&self, power: u64) -> &[MonomialPrime] {
        &self.per_power[(power - 1) as usize]
    }

    /// Serialization form: per power, primes as arrays of variable names.
    pub fn names(&self) -> Vec<Vec<Vec<String>>> {
        self.per_power
            .iter()
            .map(|ass| ass.iter().map(|p| p.names()).collect())
            .collect()
    }
}

/// Incrementally extended powers of an ideal and their associated primes.
struct PowerTracker {
    ideal: MonomialIdeal,
    powers: Vec<MonomialIdeal>,
    ass: Vec<Vec<MonomialPrime>>,
}

impl PowerTracker {
    fn new(ideal: &MonomialIdeal) -> Self {
        PowerTracker {
            ideal: ideal.clone(),
            powers: Vec::new(),
            ass: Vec::new(),
        }
    }

    fn ensure(&mut self, power: u64) -> Result<()> {
        while (self.powers.len() as u64) < power {
            let next = match self.powers.last() {
                None => Ok(self.ideal.clone()),
                Some(prev) => prev.product(&self.ideal),
            };
            let next = next.map_err(|e| Error::AtPower {
                power: self.powers.len() as u64 + 1,
                source: Box::new(e),
            })?;
            let ass = associated_primes(&next).map_err(|e| Error::AtPower {
                power: self.powers.len() as u64 + 1,
                source: Box::new(e),
            })?;
            self.powers.push(next);
            self.ass.push(ass);
        }
        Ok(())
    }

    fn ass(&self, power: u64) -> &[MonomialPrime] {
        &self.ass[(power - 1) as usize]
    }

    fn power(&self, power: u64) -> &MonomialIdeal {
        &self.powers[(power - 1) as usize]
    }
}

fn is_subset(sub: &[MonomialPrime], sup: &[MonomialPrime]) -> bool {
    sub.iter().all(|p| sup.contains(p))
}

/// Primes of `a` missing from `b`, canonically sorted.
fn difference(a: &[MonomialPrime], b: &[MonomialPrime]) -> Vec<MonomialPrime> {
    a.iter().filter(|p| !b.contains(p)).cloned().collect()
}

fn sorted_union(sets: &[&[MonomialPrime]]) -> Vec<MonomialPrime> {
    let mut out: Vec<MonomialPrime> = Vec::new();
    for set in sets {
        for p in *set {
            if !out.contains(p) {
                out.push(p.clone());
            }
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// Computes `Ass(R/I^k)` for `k = 1..=max_power`.
pub fn ass_sequence(ideal: &MonomialIdeal, max_power: u64) -> Result<AssSequence> {
    if max_power == 0 {
        return Err(Error::Invalid("power bound must be >= 1".into()));
    }
    let mut tracker = PowerTracker::new(ideal);
    tracker.ensure(max_power)?;
    Ok(AssSequence {
        ideal: ideal.clone(),
        max_power,
        per_power: tracker.ass,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "holds-up-to-bound")]
    HoldsUpToBound,
    #[serde(rename = "violated")]
    Violated,
}

/// Outcome of a bounded property check.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub bound: u64,
    pub verdict: Verdict,
    /// Containment index at which the first violation occurs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<u64>,
    /// First offending prime, as variable names.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// Every offending prime at the violating index.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Vec<String>>>,
    /// Monomial witnessing an ideal inequality (strong persistence).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_monomial: Option<String>,
    /// Smallest k0 with all containments holding from k0 on, within bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub copersistence_index: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub persistence_index: Option<u64>,
    /// Threshold s of the (generalized) nearly-copersistent profile.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<u64>,
    /// Augmenting primes adjoined below the threshold.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augmenting_primes: Option<Vec<Vec<String>>>,
    /// Smallest power at which the sequence is stationary through the bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilized_at: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropertyReport {
    fn new(property: &str, bound: u64, verdict: Verdict) -> Self {
        PropertyReport {
            property: property.to_string(),
            bound,
            verdict,
            power: None,
            witness: None,
            witnesses: None,
            witness_monomial: None,
            copersistence_index: None,
            persistence_index: None,
            threshold: None,
            augmenting_primes: None,
            stabilized_at: None,
            note: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::HoldsUpToBound
    }

    fn with_offenders(mut self, power: u64, offenders: Vec<MonomialPrime>) -> Self {
        self.power = Some(power);
        self.witness = offenders.first().map(|p| p.names());
        self.witnesses = Some(offenders.iter().map(|p| p.names()).collect());
        self
    }

    /// One-line human rendering; always states the bound.
    pub fn text(&self) -> String {
        let mut s = match self.verdict {
            Verdict::HoldsUpToBound => {
                format!("{}: holds up to power {}", self.property, self.bound)
            }
            Verdict::Violated => match self.power {
                Some(k) => format!(
                    "{}: violated at k={} (bound {})",
                    self.property, k, self.bound
                ),
                None => format!("{}: violated (bound {})", self.property, self.bound),
            },
        };
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness ({})", w.join(",")));
        }
        if let Some(m) = &self.witness_monomial {
            s.push_str(&format!(" witness monomial {m}"));
        }
        if let Some(t) = self.threshold {
            s.push_str(&format!("; threshold s={t}"));
        }
        if let Some(ps) = &self.augmenting_primes {
            let rendered: Vec<String> = ps.iter().map(|p| format!("({})", p.join(","))).collect();
            s.push_str(&format!("; augmenting {}", rendered.join(" ")));
        }
        if let Some(k) = self.stabilized_at {
            s.push_str(&format!("; stationary from power {k}"));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!("; {n}"));
        }
        s
    }
}

/// Smallest start index from which the pairwise containments all hold
/// through the bound; `checks[k-1]` is the verdict for the k-th containment.
fn suffix_index(checks: &[bool]) -> u64 {
    let mut k0 = checks.len() as u64 + 1;
    for (i, ok) in checks.iter().enumerate().rev() {
        if *ok {
            k0 = i as u64 + 1;
        } else {
            break;
        }
    }
    k0
}

/// Copersistence up to the bound: `Ass(I^k) ⊇ Ass(I^{k+1})` for k < N.
pub fn check_copersistence(ideal: &MonomialIdeal, bound: u64) -> Result<PropertyReport> {
    if bound < 2 {
        return Err(Error::Invalid("copersistence needs a bound >= 2".into()));
    }
    let seq = ass_sequence(ideal, bound)?;
    let mut checks = Vec::new();
    let mut first: Option<(u64, Vec<MonomialPrime>)> = None;
    for k in 1..bound {
        let missing = difference(seq.ass(k + 1), seq.ass(k));
        checks.push(missing.is_empty());
        if !missing.is_empty() && first.is_none() {
            first = Some((k, missing));
        }
    }
    let k0 = suffix_index(&checks);
    let mut report = match first {
        None => PropertyReport::new("copersistence", bound, Verdict::HoldsUpToBound),
        Some((k, offenders)) => PropertyReport::new("copersistence", bound, Verdict::Violated)
            .with_offenders(k, offenders),
    };
    report.copersistence_index = Some(k0);
    Ok(report)
}

/// Persistence up to the bound: `Ass(I^k) ⊆ Ass(I^{k+1})` for k < N.
pub fn check_persistence(ideal: &MonomialIdeal, bound: u64) -> Result<PropertyReport> {
    if bound < 2 {
        return Err(Error::Invalid("persistence needs a bound >= 2".into()));
    }
    let seq = ass_sequence(ideal, bound)?;
    let mut checks = Vec::new();
    let mut first: Option<(u64, Vec<MonomialPrime>)> = None;
    for k in 1..bound {
        let lost = difference(seq.ass(k), seq.ass(k + 1));
        checks.push(lost.is_empty());
        if !lost.is_empty() && first.is_none() {
            first = Some((k, lost));
        }
    }
    let l0 = suffix_index(&checks);
    let mut report = match first {
        None => PropertyReport::new("persistence", bound, Verdict::HoldsUpToBound),
        Some((k, offenders)) => PropertyReport::new("persistence", bound, Verdict::Violated)
            .with_offenders(k, offenders),
    };
    report.persistence_index = Some(l0);
    Ok(report)
}

/// Strong persistence up to the bound: `(I^{k+1} : I) = I^k` for k < N.
pub fn check_strong_persistence(ideal: &MonomialIdeal, bound: u64) -> Result<PropertyReport> {
    if bound < 2 {
        return Err(Error::Invalid("strong persistence needs a bound >= 2".into()));
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("strong persistence"));
    }
    let mut tracker = PowerTracker::new(ideal);
    tracker.ensure(bound)?;
    for k in 1..bound {
        let colon = tracker.power(k + 1).colon(ideal)?;
        // The containment I^k ⊆ (I^{k+1} : I) always holds; equality fails
        // exactly when some colon generator escapes I^k.
        let outside = colon
            .gens()
            .iter()
            .find(|g| !tracker.power(k).contains(g).unwrap_or(false));
        if let Some(w) = outside {
            let mut report =
                PropertyReport::new("strong-persistence", bound, Verdict::Violated);
            report.power = Some(k);
            report.witness_monomial = Some(w.to_string());
            return Ok(report);
        }
    }
    Ok(PropertyReport::new(
        "strong-persistence",
        bound,
        Verdict::HoldsUpToBound,
    ))
}

/// Normal torsion-freeness up to the bound: `Ass(I^k) ⊆ Ass(I)` for k <= N.
pub fn check_normally_torsion_free(ideal: &MonomialIdeal, bound: u64) -> Result<PropertyReport> {
    if bound < 2 {
        return Err(Error::Invalid(
            "normal torsion-freeness needs a bound >= 2".into(),
        ));
    }
    let seq = ass_sequence(ideal, bound)?;
    for k in 2..=bound {
        let extra = difference(seq.ass(k), seq.ass(1));
        if !extra.is_empty() {
            return Ok(PropertyReport::new(
                "normally-torsion-free",
                bound,
                Verdict::Violated,
            )
            .with_offenders(k, extra));
        }
    }
    Ok(PropertyReport::new(
        "normally-torsion-free",
        bound,
        Verdict::HoldsUpToBound,
    ))
}

/// Shared search for (generalized) nearly-copersistent profiles: find the
/// smallest threshold `s <= bound-2` such that the first `s` containments
/// hold after adjoining at most `max_augmentation` primes and the remaining
/// containments hold unaided. Returns the report for `property`.
fn check_augmented_copersistence(
    ideal: &MonomialIdeal,
    bound: u64,
    max_augmentation: usize,
    property: &str,
) -> Result<PropertyReport> {
    if bound < 3 {
        return Err(Error::Invalid(format!(
            "{property} needs a bound >= 3 (the plain regime must be nonempty)"
        )));
    }
    let mut tracker = PowerTracker::new(ideal);
    tracker.ensure(1)?;
    // diffs[m-1] = Ass(I^{m+1}) \ Ass(I^m); the union over m <= s is the
    // forced augmenting set for threshold s.
    let mut diffs: Vec<Vec<MonomialPrime>> = Vec::new();
    let mut union: Vec<MonomialPrime> = Vec::new();
    for m in 1..bound {
        tracker.ensure(m + 1)?;
        let d = difference(tracker.ass(m + 1), tracker.ass(m));
        for p in &d {
            if !union.contains(p) {
                union.push(p.clone());
            }
        }
        // Early exit: once the union is too large, no threshold works.
        // Thresholds below m fail the plain containment at m (the union
        // grew, so diffs[m-1] is nonempty); thresholds >= m inherit the
        // oversized union.
        if union.len() > max_augmentation && !d.is_empty() {
            let mut sorted = union.clone();
            sorted.sort_by(|a, b| a.canonical_cmp(b));
            let mut report = PropertyReport::new(property, bound, Verdict::Violated)
                .with_offenders(m, sorted);
            report.note = Some(format!(
                "needs {} augmenting primes; limit is {max_augmentation}",
                union.len()
            ));
            return Ok(report);
        }
        diffs.push(d);
    }

    // Candidate thresholds in ascending order; the augmenting set for s is
    // forced to be the union of the first s differences.
    for s in 1..=bound - 2 {
        let plain_ok = diffs[s as usize..].iter().all(|d| d.is_empty());
        if !plain_ok {
            continue;
        }
        let needed = sorted_union(
            &diffs[..s as usize]
                .iter()
                .map(|d| d.as_slice())
                .collect::<Vec<_>>(),
        );
        if needed.len() <= max_augmentation {
            let mut report = PropertyReport::new(property, bound, Verdict::HoldsUpToBound);
            report.threshold = Some(s);
            if needed.is_empty() {
                // Plain copersistence; record the trivial augmentation with
                // the smallest observed prime for the single-prime variant.
                report.note = Some("plain copersistence, no augmentation needed".into());
                if max_augmentation == 1 {
                    let observed = sorted_union(
                        &(1..=bound)
                            .map(|k| tracker.ass(k))
                            .collect::<Vec<_>>(),
                    );
                    report.augmenting_primes =
                        Some(observed.first().map(|p| vec![p.names()]).unwrap_or_default());
                } else {
                    report.augmenting_primes = Some(vec![]);
                }
            } else {
                report.augmenting_primes = Some(needed.iter().map(|p| p.names()).collect());
            }
            return Ok(report);
        }
    }

    // No threshold admits a small enough augmentation within the bound.
    let blocking = diffs
        .iter()
        .rposition(|d| !d.is_empty())
        .map(|i| i as u64 + 1)
        .unwrap_or(1);
    let mut sorted = union;
    sorted.sort_by(|a, b| a.canonical_cmp(b));
    let mut report =
        PropertyReport::new(property, bound, Verdict::Violated).with_offenders(blocking, sorted);
    report.note = Some(format!(
        "no threshold s <= {} admits at most {max_augmentation} augmenting primes",
        bound - 2
    ));
    Ok(report)
}

/// Nearly copersistence: one augmenting prime below the threshold.
pub fn check_nearly_copersistence(ideal: &MonomialIdeal, bound: u64) -> Result<PropertyReport> {
    check_augmented_copersistence(ideal, bound, 1, "nearly-copersistence")
}

/// Generalized nearly copersistence: up to `max_augmentation` primes.
pub fn check_generalized_nearly_copersistence(
    ideal: &MonomialIdeal,
    bound: u64,
    max_augmentation: u64,
) -> Result<PropertyReport> {
    if max_augmentation == 0 {
        return Err(Error::Invalid("the augmentation limit must be >= 1".into()));
    }
    check_augmented_copersistence(
        ideal,
        bound,
        max_augmentation as usize,
        "generalized-nearly-copersistence",
    )
}

/// Smallest k <= N-1 with `Ass(I^k) = Ass(I^{k+1}) = ... = Ass(I^N)`.
pub fn stabilization_estimate(ideal: &MonomialIdeal, bound: u64) -> Result<PropertyReport> {
    if bound < 2 {
        return Err(Error::Invalid("stabilization needs a bound >= 2".into()));
    }
    let seq = ass_sequence(ideal, bound)?;
    let mut last_change = 0u64; // containment index of the last inequality
    for k in 1..bound {
        let same = is_subset(seq.ass(k), seq.ass(k + 1)) && is_subset(seq.ass(k + 1), seq.ass(k));
        if !same {
            last_change = k;
        }
    }
    let candidate = last_change + 1;
    if candidate <= bound - 1 {
        let mut report = PropertyReport::new("stabilization", bound, Verdict::HoldsUpToBound);
        report.stabilized_at = Some(candidate);
        Ok(report)
    } else {
        let mut report = PropertyReport::new("stabilization", bound, Verdict::Violated);
        report.power = Some(last_change);
        report.note = Some(format!("not stabilized within bound {bound}"));
        Ok(report)
    }
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

    fn triangle_cover(r: &Ring) -> MonomialIdeal {
        ideal(r, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn prime_ideal_has_constant_sequence() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let p = ideal(&r, &[&[1, 0], &[0, 1]]);
        let seq = ass_sequence(&p, 3).unwrap();
        for k in 1..=3 {
            assert_eq!(seq.ass(k).len(), 1);
            assert_eq!(seq.ass(k)[0].to_string(), "(x1,x2)");
        }
        assert!(check_copersistence(&p, 3).unwrap().holds());
        assert!(check_persistence(&p, 3).unwrap().holds());
        assert!(check_strong_persistence(&p, 3).unwrap().holds());
        let st = stabilization_estimate(&p, 3).unwrap();
        assert!(st.holds());
        assert_eq!(st.stabilized_at, Some(1));
    }

    #[test]
    fn triangle_cover_gains_the_maximal_ideal_at_power_two() {
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let j = triangle_cover(&r);
        let seq = ass_sequence(&j, 3).unwrap();
        assert_eq!(seq.ass(1).len(), 3);
        assert_eq!(seq.ass(2).len(), 4);
        assert!(seq.ass(2).iter().any(|p| p.len() == 3));
        assert_eq!(seq.ass(2), seq.ass(3));

        // Persistence holds, copersistence fails at k=1 with the maximal
        // ideal as offender, torsion-freeness fails at k=2.
        assert!(check_persistence(&j, 3).unwrap().holds());
        let cop = check_copersistence(&j, 3).unwrap();
        assert!(!cop.holds());
        assert_eq!(cop.power, Some(1));
        assert_eq!(cop.witness.as_deref(), Some(&["x1".to_string(), "x2".into(), "x3".into()][..]));
        assert_eq!(cop.copersistence_index, Some(2));

        let ntf = check_normally_torsion_free(&j, 2).unwrap();
        assert!(!ntf.holds());
        assert_eq!(ntf.power, Some(2));

        assert!(check_strong_persistence(&j, 3).unwrap().holds());

        let st = stabilization_estimate(&j, 4).unwrap();
        assert!(st.holds());
        assert_eq!(st.stabilized_at, Some(2));
    }

    #[test]
    fn colon_equality_for_triangle_cover() {
        // (J^2 : J) = J, frozen from direct expansion.
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let j = triangle_cover(&r);
        let sq = j.pow(2).unwrap();
        assert_eq!(sq.colon(&j).unwrap(), j);
    }

    #[test]
    fn nearly_copersistence_of_triangle_cover() {
        // Ass jumps once at k=1 (adds the maximal ideal) and is then
        // stationary: nearly copersistent with s=1.
        let r = Ring::new(["x1", "x2", "x3"]).unwrap();
        let j = triangle_cover(&r);
        let rep = check_nearly_copersistence(&j, 4).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.threshold, Some(1));
        assert_eq!(
            rep.augmenting_primes,
            Some(vec![vec!["x1".to_string(), "x2".into(), "x3".into()]])
        );
    }

    #[test]
    fn generalized_check_accepts_plain_copersistence() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let p = ideal(&r, &[&[1, 0], &[0, 1]]);
        let rep = check_generalized_nearly_copersistence(&p, 3, 2).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.augmenting_primes, Some(vec![]));
        assert!(rep.note.unwrap().contains("plain"));
    }

    #[test]
    fn bounds_are_validated() {
        let r = Ring::new(["x1"]).unwrap();
        let i = ideal(&r, &[&[2]]);
        assert!(check_copersistence(&i, 1).is_err());
        assert!(check_nearly_copersistence(&i, 2).is_err());
        assert!(ass_sequence(&i, 0).is_err());
    }
}
