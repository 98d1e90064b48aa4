//! Exact boolean algebra of eventually periodic subsets of the naturals.
//!
//! A [`PeriodicSet`] stores a periodic baseline (a modulus and a set of
//! residues) together with finitely many exceptional points added to or
//! removed from it. The family is closed under union, intersection,
//! difference and complement, and emptiness, finiteness and cardinality are
//! all decidable. Finite ground sets embed as the special case of an empty
//! baseline, so one set kernel serves both the finite and the countable
//! models.
//!
//! Every constructor canonicalises: the modulus is minimal for the
//! represented set, exceptional points never duplicate the baseline, and the
//! residue set is empty exactly when the set is finite. Structural equality
//! of canonical forms therefore decides equality of the represented sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Largest modulus accepted from a description. Keeps least common multiples
/// taken during set combination at enumerable scale.
pub const MAX_MODULUS: u64 = 4096;

/// Largest interval width accepted from a description.
pub const MAX_INTERVAL: u64 = 65536;

/// Cardinality of a set in this library: a natural number or countably
/// infinite. The derived order puts every finite value below
/// `CountablyInfinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinal {
    Finite(u64),
    CountablyInfinite,
}

impl Cardinal {
    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<u64> {
        match self {
            Cardinal::Finite(n) => Some(*n),
            Cardinal::CountablyInfinite => None,
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::CountablyInfinite => write!(f, "countable"),
        }
    }
}

impl Serialize for Cardinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Cardinal::Finite(n) => serializer.serialize_u64(*n),
            Cardinal::CountablyInfinite => serializer.serialize_str("countable"),
        }
    }
}

impl<'de> Deserialize<'de> for Cardinal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CardinalVisitor;

        impl Visitor<'_> for CardinalVisitor {
            type Value = Cardinal;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or the string \"countable\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Cardinal, E> {
                Ok(Cardinal::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Cardinal, E> {
                u64::try_from(v)
                    .map(Cardinal::Finite)
                    .map_err(|_| E::custom("negative cardinal"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Cardinal, E> {
                if v == "countable" {
                    Ok(Cardinal::CountablyInfinite)
                } else {
                    Err(E::custom(format!("unknown cardinal {v:?}")))
                }
            }
        }

        deserializer.deserialize_any(CardinalVisitor)
    }
}

/// An eventually periodic subset of the naturals in canonical form.
///
/// Membership: `n` is a member iff `n % modulus` lies in `residues`, unless
/// `n` appears among the finitely many exceptions (`added` forces membership,
/// `removed` forces non-membership). In canonical form `added` is disjoint
/// from the baseline and `removed` is contained in it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodicSet {
    modulus: u64,
    residues: BTreeSet<u64>,
    added: BTreeSet<u64>,
    removed: BTreeSet<u64>,
}

/// Boolean operation for [`PeriodicSet::combine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    Difference,
}

impl SetOp {
    fn apply(&self, a: bool, b: bool) -> bool {
        match self {
            SetOp::Union => a || b,
            SetOp::Intersection => a && b,
            SetOp::Difference => a && !b,
        }
    }
}

/// One building block of a set description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetTerm {
    Points(Vec<u64>),
    Interval { lo: u64, hi: u64 },
    ResidueClass { modulus: u64, residues: Vec<u64> },
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl PeriodicSet {
    /// The empty set.
    pub fn empty() -> Self {
        PeriodicSet {
            modulus: 1,
            residues: BTreeSet::new(),
            added: BTreeSet::new(),
            removed: BTreeSet::new(),
        }
    }

    /// The whole of the naturals.
    pub fn naturals() -> Self {
        PeriodicSet {
            modulus: 1,
            residues: BTreeSet::from([0]),
            added: BTreeSet::new(),
            removed: BTreeSet::new(),
        }
    }

    /// The even naturals.
    pub fn evens() -> Self {
        Self::from_raw(2, BTreeSet::from([0]), BTreeMap::new())
    }

    /// Finite set from explicit points.
    pub fn from_points<I: IntoIterator<Item = u64>>(points: I) -> Self {
        let added: BTreeSet<u64> = points.into_iter().collect();
        PeriodicSet {
            modulus: 1,
            residues: BTreeSet::new(),
            added,
            removed: BTreeSet::new(),
        }
    }

    /// Singleton set.
    pub fn singleton(point: u64) -> Self {
        Self::from_points([point])
    }

    /// The naturals minus the given finite set.
    pub fn cofinite<I: IntoIterator<Item = u64>>(removed: I) -> Self {
        PeriodicSet {
            modulus: 1,
            residues: BTreeSet::from([0]),
            added: BTreeSet::new(),
            removed: removed.into_iter().collect(),
        }
    }

    /// The union of residue classes `r + modulus * k` for each listed residue.
    pub fn residue_class<I: IntoIterator<Item = u64>>(modulus: u64, residues: I) -> Result<Self, Error> {
        if modulus == 0 {
            return Err(Error::MalformedSet("modulus must be positive".into()));
        }
        if modulus > MAX_MODULUS {
            return Err(Error::MalformedSet(format!(
                "modulus {modulus} exceeds the supported maximum {MAX_MODULUS}"
            )));
        }
        let residues: BTreeSet<u64> = residues.into_iter().collect();
        if let Some(&r) = residues.iter().find(|&&r| r >= modulus) {
            return Err(Error::MalformedSet(format!(
                "residue {r} out of range for modulus {modulus}"
            )));
        }
        Ok(Self::from_raw(modulus, residues, BTreeMap::new()))
    }

    /// The points `lo..=hi`.
    pub fn interval(lo: u64, hi: u64) -> Result<Self, Error> {
        if lo > hi {
            return Err(Error::MalformedSet(format!("empty interval {lo}..{hi}")));
        }
        if hi - lo + 1 > MAX_INTERVAL {
            return Err(Error::MalformedSet(format!(
                "interval {lo}..{hi} wider than the supported maximum {MAX_INTERVAL}"
            )));
        }
        Ok(Self::from_points(lo..=hi))
    }

    /// Builds the set described by the union of `terms`, with `add` points
    /// forced in and `del` points forced out (in that order).
    pub fn make_set(terms: &[SetTerm], add: &[u64], del: &[u64]) -> Result<Self, Error> {
        let mut acc = Self::empty();
        for term in terms {
            let part = match term {
                SetTerm::Points(pts) => Self::from_points(pts.iter().copied()),
                SetTerm::Interval { lo, hi } => Self::interval(*lo, *hi)?,
                SetTerm::ResidueClass { modulus, residues } => {
                    Self::residue_class(*modulus, residues.iter().copied())?
                }
            };
            acc = Self::combine(&acc, &part, SetOp::Union);
        }
        acc = Self::combine(&acc, &Self::from_points(add.iter().copied()), SetOp::Union);
        acc = Self::combine(&acc, &Self::from_points(del.iter().copied()), SetOp::Difference);
        Ok(acc)
    }

    /// Canonicalising constructor. `overrides` pins membership at finitely
    /// many points; entries agreeing with the baseline are dropped, the
    /// modulus is minimised, and exceptional points are split into
    /// `added`/`removed`.
    fn from_raw(modulus: u64, residues: BTreeSet<u64>, overrides: BTreeMap<u64, bool>) -> Self {
        debug_assert!(modulus >= 1);
        debug_assert!(residues.iter().all(|&r| r < modulus));

        // Minimal modulus: smallest divisor d of modulus such that baseline
        // membership depends only on n mod d. The minimal eventual period of
        // the represented set divides every period, so trying divisors in
        // ascending order is exhaustive.
        let mut divisors = Vec::new();
        let mut d = 1;
        while d * d <= modulus {
            if modulus.is_multiple_of(d) {
                divisors.push(d);
                if d != modulus / d {
                    divisors.push(modulus / d);
                }
            }
            d += 1;
        }
        divisors.sort_unstable();
        let (modulus, residues) = divisors
            .into_iter()
            .find_map(|d| shrink_residues(modulus, &residues, d).map(|r| (d, r)))
            .expect("the full modulus always shrinks to itself");

        let mut added = BTreeSet::new();
        let mut removed = BTreeSet::new();
        for (n, member) in overrides {
            let baseline = residues.contains(&(n % modulus));
            if member && !baseline {
                added.insert(n);
            } else if !member && baseline {
                removed.insert(n);
            }
        }
        PeriodicSet {
            modulus,
            residues,
            added,
            removed,
        }
    }

    /// Membership test.
    pub fn contains(&self, n: u64) -> bool {
        if self.added.contains(&n) {
            return true;
        }
        if self.removed.contains(&n) {
            return false;
        }
        self.residues.contains(&(n % self.modulus))
    }

    /// Exceptional points of the canonical form (`added` and `removed`).
    fn exceptions(&self) -> impl Iterator<Item = u64> + '_ {
        self.added.iter().chain(self.removed.iter()).copied()
    }

    /// Pointwise boolean combination; the result is canonical.
    ///
    /// The working modulus is the least common multiple of the operand
    /// moduli. Constructors cap user moduli, which keeps compositions at
    /// enumerable scale; a runaway composition of incommensurable periods
    /// trips the assertion rather than looping for hours.
    pub fn combine(a: &PeriodicSet, b: &PeriodicSet, op: SetOp) -> PeriodicSet {
        let l = lcm(a.modulus, b.modulus);
        assert!(
            l <= (1 << 26),
            "combined modulus {l} is beyond the supported scale"
        );
        let residues: BTreeSet<u64> = (0..l)
            .filter(|&r| {
                op.apply(
                    a.residues.contains(&(r % a.modulus)),
                    b.residues.contains(&(r % b.modulus)),
                )
            })
            .collect();
        // Only exceptional points of an operand can deviate from the
        // baseline combination.
        let mut overrides = BTreeMap::new();
        for n in a.exceptions().chain(b.exceptions()) {
            overrides.insert(n, op.apply(a.contains(n), b.contains(n)));
        }
        Self::from_raw(l, residues, overrides)
    }

    pub fn union(&self, other: &PeriodicSet) -> PeriodicSet {
        Self::combine(self, other, SetOp::Union)
    }

    pub fn intersection(&self, other: &PeriodicSet) -> PeriodicSet {
        Self::combine(self, other, SetOp::Intersection)
    }

    pub fn difference(&self, other: &PeriodicSet) -> PeriodicSet {
        Self::combine(self, other, SetOp::Difference)
    }

    /// Complement within the naturals.
    pub fn complement_in_naturals(&self) -> PeriodicSet {
        let residues: BTreeSet<u64> = (0..self.modulus)
            .filter(|r| !self.residues.contains(r))
            .collect();
        let overrides: BTreeMap<u64, bool> = self.exceptions().map(|n| (n, !self.contains(n))).collect();
        Self::from_raw(self.modulus, residues, overrides)
    }

    /// Exact complement within `ground`. Errors unless `self` is contained in
    /// `ground`.
    pub fn complement_within(&self, ground: &PeriodicSet) -> Result<PeriodicSet, Error> {
        if !self.is_subset_of(ground) {
            return Err(Error::NotWithinGround);
        }
        Ok(ground.difference(self))
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty() && self.added.is_empty()
    }

    /// Finiteness is visible in the canonical form: the set is finite iff the
    /// periodic baseline is empty.
    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn cardinality(&self) -> Cardinal {
        if self.is_finite() {
            Cardinal::Finite(self.added.len() as u64)
        } else {
            Cardinal::CountablyInfinite
        }
    }

    /// Emptiness, finiteness and cardinality in one record.
    pub fn classify(&self) -> Classification {
        Classification {
            is_empty: self.is_empty(),
            is_finite: self.is_finite(),
            cardinality: self.cardinality(),
        }
    }

    pub fn is_subset_of(&self, other: &PeriodicSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint_from(&self, other: &PeriodicSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// True iff the set has at least `k` members.
    pub fn has_at_least(&self, k: u64) -> bool {
        match self.cardinality() {
            Cardinal::Finite(n) => n >= k,
            Cardinal::CountablyInfinite => true,
        }
    }

    /// The `k` smallest members, ascending. Errors when fewer than `k`
    /// members exist.
    pub fn sample(&self, k: usize) -> Result<Vec<u64>, Error> {
        if let Cardinal::Finite(n) = self.cardinality() {
            if (n as usize) < k {
                return Err(Error::InsufficientMembers {
                    available: Cardinal::Finite(n),
                    requested: k,
                });
            }
        }
        let mut out = Vec::with_capacity(k);
        let mut n = 0u64;
        while out.len() < k {
            if self.contains(n) {
                out.push(n);
            }
            n += 1;
        }
        Ok(out)
    }

    /// Smallest member, if any.
    pub fn min_element(&self) -> Option<u64> {
        self.sample(1).ok().map(|v| v[0])
    }

    /// Largest member of a finite set.
    pub fn max_element(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        self.added.iter().next_back().copied()
    }

    /// All members below `bound`, ascending.
    pub fn members_below(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&n| self.contains(n)).collect()
    }

    /// All members of a finite set, ascending.
    pub fn members(&self) -> Option<Vec<u64>> {
        if self.is_finite() {
            Some(self.added.iter().copied().collect())
        } else {
            None
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// Residue set of the smaller modulus `d`, when baseline membership mod `m`
/// only depends on the residue mod `d`; `None` otherwise. Requires `d | m`.
fn shrink_residues(m: u64, residues: &BTreeSet<u64>, d: u64) -> Option<BTreeSet<u64>> {
    debug_assert!(m.is_multiple_of(d));
    let mut out = BTreeSet::new();
    for r in 0..d {
        let first = residues.contains(&r);
        for j in 1..(m / d) {
            if residues.contains(&(r + j * d)) != first {
                return None;
            }
        }
        if first {
            out.insert(r);
        }
    }
    Some(out)
}

/// Result of [`PeriodicSet::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_empty: bool,
    pub is_finite: bool,
    pub cardinality: Cardinal,
}

fn write_braced(f: &mut fmt::Formatter<'_>, points: &BTreeSet<u64>) -> fmt::Result {
    write!(f, "{{")?;
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for PeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_finite() {
            return write_braced(f, &self.added);
        }
        if self.modulus == 1 {
            // Cofinite: baseline is all of the naturals.
            write!(f, "cofinite")?;
            if !self.removed.is_empty() {
                write!(f, " del ")?;
                write_braced(f, &self.removed)?;
            }
            return Ok(());
        }
        write!(f, "mod {} res ", self.modulus)?;
        write_braced(f, &self.residues)?;
        if !self.added.is_empty() {
            write!(f, " add ")?;
            write_braced(f, &self.added)?;
        }
        if !self.removed.is_empty() {
            write!(f, " del ")?;
            write_braced(f, &self.removed)?;
        }
        Ok(())
    }
}

fn parse_braced_list(s: &str) -> Result<Vec<u64>, Error> {
    let s = s.trim();
    let inner = s
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Error::MalformedSet(format!("expected braced list, got {s:?}")))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| Error::MalformedSet(format!("bad point {:?}", tok.trim())))
        })
        .collect()
}

impl FromStr for PeriodicSet {
    type Err = Error;

    /// Parses the textual syntax used by configs and the CLI:
    /// `"{0,1}"`, `"evens"`, `"mod m res {r1,...} add {..} del {..}"`,
    /// `"cofinite del {..}"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "evens" {
            return Ok(PeriodicSet::evens());
        }
        if s.starts_with('{') {
            return Ok(PeriodicSet::from_points(parse_braced_list(s)?));
        }
        if let Some(rest) = s.strip_prefix("cofinite") {
            let rest = rest.trim();
            if rest.is_empty() {
                return Ok(PeriodicSet::naturals());
            }
            let del = rest
                .strip_prefix("del")
                .ok_or_else(|| Error::MalformedSet(format!("expected `del` after `cofinite` in {s:?}")))?;
            return Ok(PeriodicSet::cofinite(parse_braced_list(del)?));
        }
        if let Some(rest) = s.strip_prefix("mod") {
            let rest = rest.trim();
            let (mod_tok, rest) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| Error::MalformedSet(format!("expected modulus in {s:?}")))?;
            let modulus: u64 = mod_tok
                .parse()
                .map_err(|_| Error::MalformedSet(format!("bad modulus {mod_tok:?}")))?;
            let rest = rest.trim();
            let res_body = rest
                .strip_prefix("res")
                .ok_or_else(|| Error::MalformedSet(format!("expected `res` in {s:?}")))?;

            // Split off optional `add {..}` and `del {..}` suffixes.
            let (res_part, tail) = match res_body.find("add").or_else(|| res_body.find("del")) {
                Some(idx) => res_body.split_at(idx),
                None => (res_body, ""),
            };
            let residues = parse_braced_list(res_part)?;
            let mut add = Vec::new();
            let mut del = Vec::new();
            let mut tail = tail.trim();
            while !tail.is_empty() {
                if let Some(rest) = tail.strip_prefix("add") {
                    let (list, next) = split_braced(rest)?;
                    add = parse_braced_list(list)?;
                    tail = next.trim();
                } else if let Some(rest) = tail.strip_prefix("del") {
                    let (list, next) = split_braced(rest)?;
                    del = parse_braced_list(list)?;
                    tail = next.trim();
                } else {
                    return Err(Error::MalformedSet(format!("unexpected trailing input {tail:?}")));
                }
            }
            return PeriodicSet::make_set(
                &[SetTerm::ResidueClass { modulus, residues }],
                &add,
                &del,
            );
        }
        Err(Error::MalformedSet(format!("unrecognised set syntax {s:?}")))
    }
}

/// Splits `" {a,b} rest"` into the braced chunk and the remainder.
fn split_braced(s: &str) -> Result<(&str, &str), Error> {
    let s = s.trim_start();
    let end = s
        .find('}')
        .ok_or_else(|| Error::MalformedSet(format!("unterminated braced list in {s:?}")))?;
    Ok((&s[..=end], &s[end + 1..]))
}
