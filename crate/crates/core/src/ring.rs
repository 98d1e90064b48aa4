//! Exact arithmetic in the function ring: finitely supported rational-valued
//! functions on the ground set, together with annihilators, hulls,
//! complements, maximal-ideal decompositions and the minimal prime index
//! space on the enumerable models.
//!
//! Coefficients are exact rationals throughout; every identity this module
//! claims is an equality of canonical values or canonical sets, never an
//! approximation.
//!
//! Minimal primes are represented by the locality point that indexes them:
//! in the rings of this crate with enumerable prime structure, every minimal
//! prime is the kernel of evaluation at a single locality point. The
//! orthogonal idempotents force this: a proper prime omits some indicator
//! `1_x`, absorbs every `1_y` with `y != x` (their product with `1_x` is
//! zero), and therefore contains the whole evaluation kernel at `x`. The
//! finite surrogate enumeration in this module's tests checks the statement
//! exhaustively at small sizes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::setalg::PeriodicSet;
use crate::topology::{ClosedSetIdeal, SpaceModel};
use crate::Error;

/// Shorthand for building a rational from an integer pair.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A finitely supported rational-valued function. Zero values are never
/// stored, so the key set is exactly the support.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FinSuppFn {
    values: BTreeMap<u64, BigRational>,
}

impl FinSuppFn {
    pub fn zero() -> Self {
        FinSuppFn::default()
    }

    /// The indicator function of a single point.
    pub fn indicator(point: u64) -> Self {
        let mut values = BTreeMap::new();
        values.insert(point, BigRational::one());
        FinSuppFn { values }
    }

    /// The indicator function of a finite set.
    pub fn indicator_of_set(set: &PeriodicSet) -> Result<Self, Error> {
        let members = set
            .members()
            .ok_or_else(|| Error::NotInRing("indicator of an infinite set is not finitely supported".into()))?;
        Ok(FinSuppFn {
            values: members.into_iter().map(|p| (p, BigRational::one())).collect(),
        })
    }

    /// Builds from point/value pairs, pruning zeros. Later pairs overwrite
    /// earlier ones for the same point.
    pub fn from_pairs<I: IntoIterator<Item = (u64, BigRational)>>(pairs: I) -> Self {
        let mut values = BTreeMap::new();
        for (p, v) in pairs {
            if v.is_zero() {
                values.remove(&p);
            } else {
                values.insert(p, v);
            }
        }
        FinSuppFn { values }
    }

    /// Checks membership in the model's ring: the support must lie in the
    /// ideal (and hence in the ground set).
    pub fn in_model(self, model: &SpaceModel) -> Result<Self, Error> {
        match model.ideal_member(&self.support()) {
            Ok(true) => Ok(self),
            Ok(false) => Err(Error::NotInRing(format!(
                "support {} is not a member of the ideal",
                self.support()
            ))),
            Err(_) => Err(Error::NotInRing("support leaves the ground set".into())),
        }
    }

    pub fn support(&self) -> PeriodicSet {
        PeriodicSet::from_points(self.values.keys().copied())
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at a point (zero off the support).
    pub fn value_at(&self, point: u64) -> BigRational {
        self.values.get(&point).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.values.iter().map(|(p, v)| (*p, v))
    }

    pub fn add(&self, other: &FinSuppFn) -> FinSuppFn {
        let mut values = self.values.clone();
        for (p, v) in &other.values {
            let sum = self.value_at(*p) + v;
            if sum.is_zero() {
                values.remove(p);
            } else {
                values.insert(*p, sum);
            }
        }
        FinSuppFn { values }
    }

    pub fn mul(&self, other: &FinSuppFn) -> FinSuppFn {
        let values = self
            .values
            .iter()
            .filter_map(|(p, v)| {
                other.values.get(p).map(|w| (*p, v * w))
            })
            .collect();
        FinSuppFn { values }
    }

    pub fn negate(&self) -> FinSuppFn {
        FinSuppFn {
            values: self.values.iter().map(|(p, v)| (*p, -v)).collect(),
        }
    }

    /// Scalar multiple; scaling by zero yields the zero function.
    pub fn scale(&self, r: &BigRational) -> FinSuppFn {
        if r.is_zero() {
            return FinSuppFn::zero();
        }
        FinSuppFn {
            values: self.values.iter().map(|(p, v)| (*p, v * r)).collect(),
        }
    }

    pub fn sub(&self, other: &FinSuppFn) -> FinSuppFn {
        self.add(&other.negate())
    }

    /// The annihilator-condition witness `f^2 + g^2`. Its annihilator region
    /// is the intersection of the operands' regions: squares of rationals
    /// are nonnegative, so no cancellation can shrink the support.
    pub fn ac_witness(&self, other: &FinSuppFn) -> FinSuppFn {
        self.mul(self).add(&other.mul(other))
    }
}

impl fmt::Display for FinSuppFn {
    /// The function literal syntax: `{0:5, 1:-2/3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, v)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}:{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for FinSuppFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let inner = s
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::MalformedFunction(format!("expected braces around {s:?}")))?;
        let inner = inner.trim();
        let mut pairs = Vec::new();
        if !inner.is_empty() {
            for entry in inner.split(',') {
                let (p, v) = entry
                    .split_once(':')
                    .ok_or_else(|| Error::MalformedFunction(format!("expected point:value in {entry:?}")))?;
                let point: u64 = p
                    .trim()
                    .parse()
                    .map_err(|_| Error::MalformedFunction(format!("bad point {:?}", p.trim())))?;
                let value: BigRational = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::MalformedFunction(format!("bad rational {:?}", v.trim())))?;
                pairs.push((point, value));
            }
        }
        Ok(FinSuppFn::from_pairs(pairs))
    }
}

/// The annihilator of a ring member, represented by the region where
/// annihilating supports may live.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorClass {
    /// Allowed support region: the locality region minus the support of the
    /// annihilated element.
    pub region: PeriodicSet,
    /// Ideal constraining the members' supports.
    pub ideal_constraint: ClosedSetIdeal,
    /// Set when the annihilated element was zero, in which case the
    /// annihilator is the whole ring.
    pub whole_ring: bool,
}

impl AnnihilatorClass {
    /// Membership test: `g` annihilates iff its support fits in the region
    /// (and `g` belongs to the ring at all).
    pub fn contains(&self, g: &FinSuppFn) -> bool {
        let supp = g.support();
        let in_ideal = match &self.ideal_constraint {
            ClosedSetIdeal::AllClosed => true,
            ClosedSetIdeal::FiniteSets => supp.is_finite(),
            ClosedSetIdeal::PowerSetOf(m) => supp.is_subset_of(m),
        };
        in_ideal && (self.whole_ring || supp.is_subset_of(&self.region))
    }
}

/// The annihilator of `f` in the model's ring. For the zero function the
/// whole ring annihilates; the region is the full locality region and the
/// `whole_ring` flag is set.
pub fn annihilator(model: &SpaceModel, f: &FinSuppFn) -> AnnihilatorClass {
    let locality = model.locality_region();
    if f.is_zero() {
        return AnnihilatorClass {
            region: locality,
            ideal_constraint: model.ideal().clone(),
            whole_ring: true,
        };
    }
    AnnihilatorClass {
        region: locality.difference(&f.support()),
        ideal_constraint: model.ideal().clone(),
        whole_ring: false,
    }
}

fn require_enumerable_primes(model: &SpaceModel) -> Result<(), Error> {
    if *model.ideal() == ClosedSetIdeal::AllClosed && !model.ground().is_finite() {
        return Err(Error::UnsupportedModel(
            "minimal primes of the unconstrained ring over a countable ground set are not point-indexed"
                .into(),
        ));
    }
    Ok(())
}

/// Hull of `f`: the minimal primes containing it, indexed by the locality
/// points where `f` vanishes. Only supported on models whose prime space is
/// point-indexed.
pub fn hull(model: &SpaceModel, f: &FinSuppFn) -> Result<PeriodicSet, Error> {
    require_enumerable_primes(model)?;
    Ok(model.locality_region().difference(&f.support()))
}

/// Hull of the annihilator of `f`: its index set is the support of `f`, the
/// complement of `hull(f)` within the prime index space.
pub fn hull_of_annihilator(model: &SpaceModel, f: &FinSuppFn) -> Result<PeriodicSet, Error> {
    require_enumerable_primes(model)?;
    Ok(f.support().intersection(&model.locality_region()))
}

/// The ring complement of `f`, when one exists among finitely supported
/// functions: the indicator of the locality region left uncovered by `f`.
/// Returns `None` when that region is infinite (no finitely supported
/// representative) or falls outside the ideal.
pub fn complement_element(model: &SpaceModel, f: &FinSuppFn) -> Option<FinSuppFn> {
    let region = model.locality_region().difference(&f.support());
    if !region.is_finite() {
        return None;
    }
    match model.ideal_member(&region) {
        Ok(true) => Some(FinSuppFn::indicator_of_set(&region).expect("region is finite")),
        _ => None,
    }
}

/// The space of minimal prime ideals on an enumerable model: one prime per
/// locality point, carrying the discrete hull-kernel topology, compact iff
/// there are finitely many.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPrimeSpace {
    /// Locality points indexing the primes.
    pub index_set: PeriodicSet,
    pub compact: bool,
}

pub fn minimal_prime_space(model: &SpaceModel) -> Result<MinimalPrimeSpace, Error> {
    require_enumerable_primes(model)?;
    let index_set = model.locality_region();
    let compact = index_set.is_finite();
    Ok(MinimalPrimeSpace { index_set, compact })
}

/// Explicit decomposition of `g` across the maximal ideal at `x` and the
/// principal ideal of `f`: `g = (g - g(x)·1_x) + (g(x)/f(x))·(1_x·f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxIdealDecomposition {
    /// The part vanishing at `x`.
    pub in_max_ideal: FinSuppFn,
    /// The multiple of `f` (equal to `g(x)·1_x`).
    pub in_principal: FinSuppFn,
    /// The coefficient `g(x)/f(x)` in front of `1_x·f`.
    pub factor: BigRational,
}

/// Witnesses that the evaluation kernel at `x` plus any element not
/// vanishing there spans the ring. Requires `x` in the locality region and
/// `f(x) != 0`.
pub fn maximal_ideal_witness(
    model: &SpaceModel,
    x: u64,
    f: &FinSuppFn,
    g: &FinSuppFn,
) -> Result<MaxIdealDecomposition, Error> {
    if !model.locality_region().contains(x) {
        return Err(Error::OutsideLocality { point: x });
    }
    let fx = f.value_at(x);
    if fx.is_zero() {
        return Err(Error::ZeroAtPoint { point: x });
    }
    let gx = g.value_at(x);
    let factor = &gx / &fx;
    let in_principal = FinSuppFn::indicator(x).mul(f).scale(&factor);
    let in_max_ideal = g.sub(&in_principal);
    debug_assert!(in_max_ideal.value_at(x).is_zero());
    debug_assert_eq!(in_max_ideal.add(&in_principal), *g);
    Ok(MaxIdealDecomposition { in_max_ideal, in_principal, factor })
}

/// Deterministic decaying representative of an infinite support in the
/// level-set ring: the k-th smallest support point carries the value
/// 1/(k+1). Returns the first `count` (point, value) pairs; every level set
/// of the full function is an initial segment of this enumeration.
pub fn decaying_witness_prefix(support: &PeriodicSet, count: usize) -> Result<Vec<(u64, BigRational)>, Error> {
    let points = support.sample(count)?;
    Ok(points
        .into_iter()
        .enumerate()
        .map(|(k, p)| (p, BigRational::new(BigInt::one(), BigInt::from(k as i64 + 1))))
        .collect())
}

/// Level set `{ |f| >= eps }` of the decaying witness over `support`,
/// computed symbolically: the first `floor(1/eps)` support points.
pub fn decaying_witness_level_set(support: &PeriodicSet, eps: &BigRational) -> Result<PeriodicSet, Error> {
    if !eps.is_positive() {
        return Err(Error::MalformedFunction("level threshold must be positive".into()));
    }
    // 1/(k+1) >= eps  <=>  k+1 <= 1/eps.
    let bound = (BigRational::one() / eps).floor().to_integer();
    let count = match u64::try_from(&bound) {
        Ok(n) => n as usize,
        Err(_) => usize::MAX,
    };
    match support.cardinality() {
        crate::setalg::Cardinal::Finite(n) => {
            let take = count.min(n as usize);
            Ok(PeriodicSet::from_points(support.sample(take)?))
        }
        crate::setalg::Cardinal::CountablyInfinite => {
            Ok(PeriodicSet::from_points(support.sample(count)?))
        }
    }
}
