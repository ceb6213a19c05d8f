//! Ambient polynomial-ring context, monomials, and monomial prime ideals.
//!
//! A [`Ring`] is an ordered list of variable names; the order is significant
//! and fixes the canonical form of everything built on top of it. Monomials
//! are dense exponent vectors with exact 64-bit exponents and checked
//! arithmetic: overflow is a hard error, never a silent wrap.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of distinct variable names shared by reference.
#[derive(Clone, Debug)]
pub struct Ring(Arc<Vec<String>>);

impl Ring {
    /// Builds a ring from variable names. Names must be unique and nonempty.
    pub fn new<I, S>(vars: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::Invalid("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::Invalid(format!("duplicate variable {v}")));
            }
        }
        Ok(Ring(Arc::new(vars)))
    }

    /// Convenience constructor for rings named `x1..xn`.
    pub fn numbered(n: usize) -> Self {
        Ring::new((1..=n).map(|i| format!("x{i}"))).expect("n >= 1")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vars(&self) -> &[String] {
        &self.0
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// The unit monomial 1.
    pub fn one(&self) -> Monomial {
        Monomial {
            ring: self.clone(),
            exps: vec![0; self.len()],
        }
    }

    /// The monomial `x_i`.
    pub fn var(&self, i: usize) -> Monomial {
        let mut exps = vec![0; self.len()];
        exps[i] = 1;
        Monomial {
            ring: self.clone(),
            exps,
        }
    }

    /// Monomial with the given exponent vector.
    pub fn monomial(&self, exps: Vec<u64>) -> Result<Monomial> {
        if exps.len() != self.len() {
            return Err(Error::Invalid(format!(
                "exponent vector has length {} but the ring has {} variables",
                exps.len(),
                self.len()
            )));
        }
        Ok(Monomial {
            ring: self.clone(),
            exps,
        })
    }

    /// The maximal monomial prime (all variables).
    pub fn maximal_prime(&self) -> MonomialPrime {
        MonomialPrime {
            ring: self.clone(),
            vars: (0..self.len()).collect(),
        }
    }

    /// Prime generated by the named subset of variables.
    pub fn prime<S: AsRef<str>>(&self, names: &[S]) -> Result<MonomialPrime> {
        let mut idx = Vec::with_capacity(names.len());
        for n in names {
            let i = self
                .index_of(n.as_ref())
                .ok_or_else(|| Error::UnknownVariable(n.as_ref().to_string()))?;
            if idx.contains(&i) {
                return Err(Error::InvalidPrime(format!(
                    "repeated variable {}",
                    n.as_ref()
                )));
            }
            idx.push(i);
        }
        MonomialPrime::from_indices(self.clone(), idx)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Ring {}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(","))
    }
}

/// A monomial: dense exponent vector over a [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    ring: Ring,
    exps: Vec<u64>,
}

impl Monomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u64 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// True when this is `x_i^e` for a single variable (e >= 1).
    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|&&e| e > 0).count() == 1
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ring, other.ring);
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            ring: self.ring.clone(),
            exps,
        })
    }

    pub fn checked_pow(&self, k: u64) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &a in &self.exps {
            exps.push(a.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            ring: self.ring.clone(),
            exps,
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ring, other.ring);
        Monomial {
            ring: self.ring.clone(),
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.ring, other.ring);
        Monomial {
            ring: self.ring.clone(),
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Exact quotient; `other` must divide `self`.
    pub fn div_exact(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            ring: self.ring.clone(),
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// `self / gcd(self, other)`, the colon quotient for monomials.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.div_exact(&self.gcd(other))
    }

    /// Squarefree part: every positive exponent clamped to 1.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            ring: self.ring.clone(),
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// Graded order used for canonical generator lists: total degree first,
    /// ties broken so that larger exponent vectors (lexicographically) come
    /// first. This puts `x1^2` before `x1*x2` before `x2^2`.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        debug_assert_eq!(self.ring, other.ring);
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.var_name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial prime ideal: the ideal generated by a nonempty subset of
/// ring variables, stored as sorted indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ring: Ring,
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn from_indices(ring: Ring, mut vars: Vec<usize>) -> Result<Self> {
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::InvalidPrime("empty variable set".into()));
        }
        if *vars.last().unwrap() >= ring.len() {
            return Err(Error::InvalidPrime("index out of range".into()));
        }
        Ok(MonomialPrime { ring, vars })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Sorted variable indices generating the prime.
    pub fn indices(&self) -> &[usize] {
        &self.vars
    }

    pub fn names(&self) -> Vec<String> {
        self.vars
            .iter()
            .map(|&i| self.ring.var_name(i).to_string())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.vars.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        debug_assert_eq!(self.ring, other.ring);
        self.vars.iter().all(|i| other.contains_var(*i))
    }

    /// The prime on all variables except `drop` (the `m \ {x}` construction).
    pub fn without(&self, drop: usize) -> Result<MonomialPrime> {
        let vars: Vec<usize> = self.vars.iter().copied().filter(|&i| i != drop).collect();
        MonomialPrime::from_indices(self.ring.clone(), vars)
    }

    /// Canonical order: cardinality first, then lexicographic on indices.
    pub fn canonical_cmp(&self, other: &MonomialPrime) -> Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
            .then_with(|| self.ring.vars().cmp(other.ring.vars()))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names().join(","))
    }
}
