//! Discrete space models: a ground set paired with an ideal of closed sets.
//!
//! Every finite space of the kind this crate studies is discrete, and in a
//! discrete space closure and interior are identities, so all set operators
//! collapse to the sets themselves. The two countable models (the naturals
//! with the finite-sets ideal and with the all-sets ideal) supply the regimes
//! a finite ground set cannot reach: a locality region outside the ideal, and
//! diameter-3 behaviour with unconstrained supports.
//!
//! On a finite ground set any family of sets that is closed downward and
//! under unions equals the power set of the union of its members, so
//! `PowerSetOf` is the complete catalogue of finite ideals; the property test
//! for this structural fact lives with this module's tests.

use std::fmt;
use std::str::FromStr;

use crate::setalg::{Cardinal, PeriodicSet};
use crate::Error;

/// The ground set of points: `{0..n-1}` or the whole of the naturals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroundSet {
    Finite(u64),
    Countable,
}

impl GroundSet {
    /// The ground set as a set of points.
    pub fn as_set(&self) -> PeriodicSet {
        match self {
            GroundSet::Finite(n) => {
                if *n == 0 {
                    PeriodicSet::empty()
                } else {
                    PeriodicSet::interval(0, n - 1).expect("ground interval is validated")
                }
            }
            GroundSet::Countable => PeriodicSet::naturals(),
        }
    }

    pub fn contains(&self, point: u64) -> bool {
        match self {
            GroundSet::Finite(n) => point < *n,
            GroundSet::Countable => true,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, GroundSet::Finite(_))
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundSet::Finite(n) => write!(f, "finite:{n}"),
            GroundSet::Countable => write!(f, "countable"),
        }
    }
}

impl FromStr for GroundSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "countable" {
            return Ok(GroundSet::Countable);
        }
        if let Some(count) = s.strip_prefix("finite:") {
            let n: u64 = count
                .parse()
                .map_err(|_| Error::MalformedModel(format!("bad ground size {count:?}")))?;
            if n == 0 {
                return Err(Error::MalformedModel("ground size must be positive".into()));
            }
            if n > crate::setalg::MAX_INTERVAL {
                return Err(Error::MalformedModel(format!(
                    "ground size {n} exceeds the supported maximum {}",
                    crate::setalg::MAX_INTERVAL
                )));
            }
            return Ok(GroundSet::Finite(n));
        }
        Err(Error::MalformedModel(format!("unrecognised ground {s:?}")))
    }
}

/// An ideal of closed sets: closed under finite unions and under passing to
/// closed subsets. All three kinds satisfy the ideal axioms by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClosedSetIdeal {
    /// Every subset (every subset of a discrete space is closed).
    AllClosed,
    /// The finite subsets.
    FiniteSets,
    /// All subsets of a fixed finite set `M`.
    PowerSetOf(PeriodicSet),
}

impl fmt::Display for ClosedSetIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedSetIdeal::AllClosed => write!(f, "all"),
            ClosedSetIdeal::FiniteSets => write!(f, "finite"),
            ClosedSetIdeal::PowerSetOf(m) => write!(f, "powerset:{m}"),
        }
    }
}

impl FromStr for ClosedSetIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        match s {
            "all" => Ok(ClosedSetIdeal::AllClosed),
            "finite" => Ok(ClosedSetIdeal::FiniteSets),
            _ => {
                if let Some(body) = s.strip_prefix("powerset:") {
                    let m: PeriodicSet = body.parse()?;
                    if !m.is_finite() {
                        return Err(Error::MalformedModel(
                            "powerset ideal requires a finite base set".into(),
                        ));
                    }
                    Ok(ClosedSetIdeal::PowerSetOf(m))
                } else {
                    Err(Error::MalformedModel(format!("unrecognised ideal {s:?}")))
                }
            }
        }
    }
}

/// A discrete ground set equipped with an ideal of closed sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceModel {
    ground: GroundSet,
    ideal: ClosedSetIdeal,
}

/// Result of [`SpaceModel::validate_model`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModelValidation {
    /// The graph has vertices iff the locality region has at least 2 points.
    pub vertex_set_nonempty: bool,
    pub locality_size: Cardinal,
}

impl SpaceModel {
    pub fn new(ground: GroundSet, ideal: ClosedSetIdeal) -> Result<Self, Error> {
        if let GroundSet::Finite(n) = ground {
            if n == 0 {
                return Err(Error::MalformedModel("ground set must be nonempty".into()));
            }
            if n > crate::setalg::MAX_INTERVAL {
                return Err(Error::MalformedModel(format!(
                    "ground size {n} exceeds the supported maximum {}",
                    crate::setalg::MAX_INTERVAL
                )));
            }
        }
        if let ClosedSetIdeal::PowerSetOf(m) = &ideal {
            if !m.is_finite() {
                return Err(Error::MalformedModel(
                    "powerset ideal requires a finite base set".into(),
                ));
            }
            if !m.is_subset_of(&ground.as_set()) {
                return Err(Error::NotWithinGround);
            }
        }
        Ok(SpaceModel { ground, ideal })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn ideal(&self) -> &ClosedSetIdeal {
        &self.ideal
    }

    /// Membership of `s` in the ideal. Errors when `s` is not contained in
    /// the ground set.
    pub fn ideal_member(&self, s: &PeriodicSet) -> Result<bool, Error> {
        if !s.is_subset_of(&self.ground.as_set()) {
            return Err(Error::NotWithinGround);
        }
        Ok(match &self.ideal {
            ClosedSetIdeal::AllClosed => true,
            ClosedSetIdeal::FiniteSets => s.is_finite(),
            ClosedSetIdeal::PowerSetOf(m) => s.is_subset_of(m),
        })
    }

    /// The locality region: the points whose singleton lies in the ideal. In
    /// a discrete model this is the whole ground set for the all-sets and
    /// finite-sets ideals, and the base set for a powerset ideal.
    pub fn locality_region(&self) -> PeriodicSet {
        match &self.ideal {
            ClosedSetIdeal::AllClosed | ClosedSetIdeal::FiniteSets => self.ground.as_set(),
            ClosedSetIdeal::PowerSetOf(m) => m.clone(),
        }
    }

    /// Whether the locality region itself belongs to the ideal (closure is
    /// the identity here).
    pub fn closure_of_locality_in_ideal(&self) -> bool {
        self.ideal_member(&self.locality_region())
            .expect("locality region is within the ground set")
    }

    /// Checks the nonempty-graph criterion: vertices exist iff the locality
    /// region has at least two points.
    pub fn validate_model(&self) -> ModelValidation {
        let size = self.locality_region().cardinality();
        ModelValidation {
            vertex_set_nonempty: size >= Cardinal::Finite(2),
            locality_size: size,
        }
    }

    /// Errors with [`Error::EmptyGraph`] unless the locality region has at
    /// least two points.
    pub fn require_nonempty_graph(&self) -> Result<(), Error> {
        let v = self.validate_model();
        if v.vertex_set_nonempty {
            Ok(())
        } else {
            Err(Error::EmptyGraph { locality_size: v.locality_size })
        }
    }

    /// A support witnessing that `x` carries a ring element inside the open
    /// set `g`: in a discrete model the singleton `{x}` always works.
    /// Requires `x` in the locality region and `x` in `g`.
    pub fn witness_support(&self, x: u64, g: &PeriodicSet) -> Result<PeriodicSet, Error> {
        if !self.locality_region().contains(x) {
            return Err(Error::OutsideLocality { point: x });
        }
        if !g.contains(x) {
            return Err(Error::PointNotInSet { point: x });
        }
        Ok(PeriodicSet::singleton(x))
    }
}

impl fmt::Display for SpaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ground={} ideal={}", self.ground, self.ideal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(ground: GroundSet, ideal: ClosedSetIdeal) -> SpaceModel {
        SpaceModel::new(ground, ideal).unwrap()
    }

    fn nat_finite() -> SpaceModel {
        model(GroundSet::Countable, ClosedSetIdeal::FiniteSets)
    }

    #[test]
    fn ideal_member_examples() {
        let m = nat_finite();
        assert!(m.ideal_member(&PeriodicSet::from_points([0, 1])).unwrap());
        assert!(!m.ideal_member(&PeriodicSet::evens()).unwrap());

        let m = model(
            GroundSet::Finite(4),
            ClosedSetIdeal::PowerSetOf(PeriodicSet::from_points([0, 1])),
        );
        assert!(!m.ideal_member(&PeriodicSet::from_points([0, 2])).unwrap());
        assert!(m.ideal_member(&PeriodicSet::from_points([0])).unwrap());
    }

    #[test]
    fn ideal_member_requires_ground_containment() {
        let m = model(GroundSet::Finite(3), ClosedSetIdeal::AllClosed);
        let err = m.ideal_member(&PeriodicSet::singleton(7)).unwrap_err();
        assert_eq!(err, Error::NotWithinGround);
    }

    #[test]
    fn locality_region_examples() {
        assert_eq!(nat_finite().locality_region(), PeriodicSet::naturals());
        assert_eq!(
            model(GroundSet::Countable, ClosedSetIdeal::AllClosed).locality_region(),
            PeriodicSet::naturals()
        );
        let m = model(
            GroundSet::Finite(5),
            ClosedSetIdeal::PowerSetOf(PeriodicSet::from_points([0, 1, 2])),
        );
        assert_eq!(m.locality_region(), PeriodicSet::from_points([0, 1, 2]));
    }

    #[test]
    fn closure_of_locality_examples() {
        assert!(!nat_finite().closure_of_locality_in_ideal());
        assert!(model(GroundSet::Countable, ClosedSetIdeal::AllClosed).closure_of_locality_in_ideal());
        let m = model(
            GroundSet::Finite(3),
            ClosedSetIdeal::PowerSetOf(PeriodicSet::from_points([0, 1])),
        );
        assert!(m.closure_of_locality_in_ideal());
    }

    #[test]
    fn validate_model_examples() {
        let v = model(GroundSet::Finite(2), ClosedSetIdeal::AllClosed).validate_model();
        assert!(v.vertex_set_nonempty);
        assert_eq!(v.locality_size, Cardinal::Finite(2));

        let v = model(
            GroundSet::Finite(5),
            ClosedSetIdeal::PowerSetOf(PeriodicSet::singleton(3)),
        )
        .validate_model();
        assert!(!v.vertex_set_nonempty);
        assert_eq!(v.locality_size, Cardinal::Finite(1));

        let v = nat_finite().validate_model();
        assert!(v.vertex_set_nonempty);
        assert_eq!(v.locality_size, Cardinal::CountablyInfinite);
    }

    #[test]
    fn degenerate_powerset_of_empty_set() {
        // The ring collapses to zero when the ideal is the singleton {∅}:
        // the locality region is empty, yet it trivially lies in the ideal.
        let m = model(GroundSet::Finite(3), ClosedSetIdeal::PowerSetOf(PeriodicSet::empty()));
        let v = m.validate_model();
        assert!(!v.vertex_set_nonempty);
        assert_eq!(v.locality_size, Cardinal::Finite(0));
        assert!(m.closure_of_locality_in_ideal());
    }

    #[test]
    fn witness_support_examples() {
        let m = nat_finite();
        let odds = PeriodicSet::residue_class(2, [1]).unwrap();
        assert_eq!(m.witness_support(3, &odds).unwrap(), PeriodicSet::singleton(3));
        assert_eq!(
            m.witness_support(3, &PeriodicSet::evens()).unwrap_err(),
            Error::PointNotInSet { point: 3 }
        );

        let m = model(
            GroundSet::Finite(3),
            ClosedSetIdeal::PowerSetOf(PeriodicSet::from_points([0, 1])),
        );
        assert_eq!(
            m.witness_support(0, &PeriodicSet::from_points([0, 2])).unwrap(),
            PeriodicSet::singleton(0)
        );
        assert_eq!(
            m.witness_support(2, &PeriodicSet::from_points([0, 2])).unwrap_err(),
            Error::OutsideLocality { point: 2 }
        );
    }

    #[test]
    fn witness_satisfies_contract() {
        // x ∈ S ⊆ g, S in the ideal, S inside the locality region.
        let m = model(
            GroundSet::Finite(6),
            ClosedSetIdeal::PowerSetOf(PeriodicSet::from_points([0, 1, 2, 3])),
        );
        let g = PeriodicSet::from_points([1, 2, 5]);
        let s = m.witness_support(2, &g).unwrap();
        assert!(s.contains(2));
        assert!(s.is_subset_of(&g));
        assert!(m.ideal_member(&s).unwrap());
        assert!(s.is_subset_of(&m.locality_region()));
    }

    #[test]
    fn parse_ground_and_ideal() {
        assert_eq!("finite:5".parse::<GroundSet>().unwrap(), GroundSet::Finite(5));
        assert_eq!("countable".parse::<GroundSet>().unwrap(), GroundSet::Countable);
        assert!("finite:0".parse::<GroundSet>().is_err());

        assert_eq!("all".parse::<ClosedSetIdeal>().unwrap(), ClosedSetIdeal::AllClosed);
        assert_eq!("finite".parse::<ClosedSetIdeal>().unwrap(), ClosedSetIdeal::FiniteSets);
        assert_eq!(
            "powerset:{0,1,2}".parse::<ClosedSetIdeal>().unwrap(),
            ClosedSetIdeal::PowerSetOf(PeriodicSet::from_points([0, 1, 2]))
        );
        assert!("powerset:evens".parse::<ClosedSetIdeal>().is_err());
    }

    /// On a finite ground set, the downward-and-union closure of any family
    /// equals the power set of the union of its members.
    #[test]
    fn finite_ideals_are_powersets() {
        // Enumerate all families over a 3-point ground by brute force.
        let subsets: Vec<u8> = (0u8..8).collect();
        for family_mask in 0u16..256 {
            let family: Vec<u8> = subsets
                .iter()
                .copied()
                .filter(|s| family_mask & (1 << s) != 0)
                .collect();
            // Close under subsets and unions.
            let mut closed = vec![0u8]; // the empty set is a subset of anything present
            let mut frontier: Vec<u8> = family.clone();
            while let Some(s) = frontier.pop() {
                if closed.contains(&s) {
                    continue;
                }
                closed.push(s);
                for t in 0u8..8 {
                    if t & !s == 0 && !closed.contains(&t) {
                        frontier.push(t);
                    }
                }
                let snapshot: Vec<u8> = closed.clone();
                for t in snapshot {
                    let u = s | t;
                    if !closed.contains(&u) {
                        frontier.push(u);
                    }
                }
            }
            let union = family.iter().fold(0u8, |a, s| a | s);
            let mut expect: Vec<u8> = (0u8..8).filter(|t| t & !union == 0).collect();
            closed.sort_unstable();
            closed.dedup();
            expect.sort_unstable();
            if family.is_empty() {
                // The closure of the empty family is just the empty set.
                assert_eq!(closed, vec![0]);
            } else {
                assert_eq!(closed, expect, "family mask {family_mask}");
            }
        }
    }
}
