//! Class-level semantics of the zero-divisor graph.
//!
//! Functions sharing a support are indistinguishable in the graph except for
//! their mutual non-adjacency, so every decision procedure here operates on
//! support classes: a [`VertexClass`] is a support set tagged with the graph
//! flavor. This quotient makes the (usually infinite) graph decidable; the
//! `blowup` module re-expands classes into explicit finite graphs to verify
//! each closed form by brute force.
//!
//! A single dichotomy organises the whole catalogue: either admissible
//! supports always miss infinitely many locality points (the compact-like
//! supports over a countable region), in which case the graph is
//! self-centric, triangulated and hypertriangulated but has no complements;
//! or supports can cover the locality region up to finitely many points, in
//! which case distance-3 pairs, orthogonal pairs and complements all exist.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::setalg::{Cardinal, PeriodicSet};
use crate::topology::{ClosedSetIdeal, SpaceModel};
use crate::Error;

/// Which ring the graph is built over: functions whose support lies in the
/// ideal, or functions all of whose level sets lie in the ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphFlavor {
    Cp,
    CpInfinity,
}

impl fmt::Display for GraphFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFlavor::Cp => write!(f, "cp"),
            GraphFlavor::CpInfinity => write!(f, "cpinf"),
        }
    }
}

impl std::str::FromStr for GraphFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "cp" => Ok(GraphFlavor::Cp),
            "cpinf" => Ok(GraphFlavor::CpInfinity),
            other => Err(Error::MalformedModel(format!("unrecognised flavor {other:?}"))),
        }
    }
}

/// Why a support fails to be a vertex class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRejection {
    NotWithinGround,
    EmptySupport,
    InadmissibleSupport,
    OutsideLocality,
    CoversLocality,
}

impl fmt::Display for VertexRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            VertexRejection::NotWithinGround => "support is not contained in the ground set",
            VertexRejection::EmptySupport => "support is empty (the zero function is not a vertex)",
            VertexRejection::InadmissibleSupport => "support is not admissible for this flavor",
            VertexRejection::OutsideLocality => "support leaves the locality region",
            VertexRejection::CoversLocality => {
                "support covers the whole locality region (no annihilating partner exists)"
            }
        };
        f.write_str(msg)
    }
}

/// Outcome of [`vertex_check`], a boolean with its reason.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexStatus {
    Vertex,
    Rejected(VertexRejection),
}

impl VertexStatus {
    pub fn is_vertex(&self) -> bool {
        matches!(self, VertexStatus::Vertex)
    }
}

/// Whether a support set can be realised by a ring member of the given
/// flavor.
///
/// For the level-set ring on the finite-sets ideal, any support works: list
/// the support as an ascending enumeration and assign the k-th point the
/// value 1/(k+1); every level set is then an initial segment of the
/// enumeration, hence finite. On the all-sets ideal every level set is
/// trivially admissible, and on a powerset ideal the union of the level sets
/// (the support itself) must fit inside the base set, so the two rings
/// coincide there.
pub fn admissible_support(
    model: &SpaceModel,
    flavor: GraphFlavor,
    support: &PeriodicSet,
) -> Result<bool, Error> {
    match flavor {
        GraphFlavor::Cp => model.ideal_member(support),
        GraphFlavor::CpInfinity => {
            if !support.is_subset_of(&model.ground().as_set()) {
                return Err(Error::NotWithinGround);
            }
            Ok(match model.ideal() {
                ClosedSetIdeal::AllClosed | ClosedSetIdeal::FiniteSets => true,
                ClosedSetIdeal::PowerSetOf(m) => support.is_subset_of(m),
            })
        }
    }
}

/// Decides whether `support` is the support of a vertex: nonempty,
/// admissible for the flavor, inside the locality region, and leaving at
/// least one locality point uncovered.
pub fn vertex_check(model: &SpaceModel, flavor: GraphFlavor, support: &PeriodicSet) -> VertexStatus {
    if !support.is_subset_of(&model.ground().as_set()) {
        return VertexStatus::Rejected(VertexRejection::NotWithinGround);
    }
    if support.is_empty() {
        return VertexStatus::Rejected(VertexRejection::EmptySupport);
    }
    match admissible_support(model, flavor, support) {
        Ok(true) => {}
        Ok(false) => return VertexStatus::Rejected(VertexRejection::InadmissibleSupport),
        Err(_) => return VertexStatus::Rejected(VertexRejection::NotWithinGround),
    }
    let locality = model.locality_region();
    if !support.is_subset_of(&locality) {
        return VertexStatus::Rejected(VertexRejection::OutsideLocality);
    }
    if locality.difference(support).is_empty() {
        return VertexStatus::Rejected(VertexRejection::CoversLocality);
    }
    VertexStatus::Vertex
}

/// A vertex class: all ring members sharing one support.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexClass {
    model: SpaceModel,
    flavor: GraphFlavor,
    support: PeriodicSet,
}

/// True when every admissible support misses infinitely many locality
/// points, so no support (or pair of supports) can come close to covering the
/// region. This happens exactly for the support-in-ideal ring over the
/// finite-sets ideal on a countable ground set, and it is the regime where
/// the graph is self-centric, triangulated and hypertriangulated while
/// complements fail.
fn supports_never_near_cover(model: &SpaceModel, flavor: GraphFlavor) -> bool {
    flavor == GraphFlavor::Cp
        && *model.ideal() == ClosedSetIdeal::FiniteSets
        && !model.ground().is_finite()
}

impl VertexClass {
    pub fn new(model: SpaceModel, flavor: GraphFlavor, support: PeriodicSet) -> Result<Self, Error> {
        match vertex_check(&model, flavor, &support) {
            VertexStatus::Vertex => Ok(VertexClass { model, flavor, support }),
            VertexStatus::Rejected(reason) => Err(Error::NotAVertex(reason)),
        }
    }

    pub fn support(&self) -> &PeriodicSet {
        &self.support
    }

    pub fn flavor(&self) -> GraphFlavor {
        self.flavor
    }

    pub fn model(&self) -> &SpaceModel {
        &self.model
    }

    fn check_compatible(&self, other: &VertexClass) -> Result<(), Error> {
        if self.model != other.model {
            return Err(Error::ModelMismatch);
        }
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch);
        }
        Ok(())
    }

    /// Two classes are adjacent iff their supports are disjoint. Members of
    /// one class are never adjacent to each other: the product of two
    /// functions with equal support is nonzero on that support.
    pub fn adjacent(&self, other: &VertexClass) -> Result<bool, Error> {
        self.check_compatible(other)?;
        Ok(self.support.is_disjoint_from(&other.support))
    }

    /// A class adjacent to both operands, when one exists: any support inside
    /// the locality region left uncovered by both. The witness is the
    /// singleton on the smallest available point.
    pub fn common_neighbor(&self, other: &VertexClass) -> Result<Option<VertexClass>, Error> {
        self.check_compatible(other)?;
        let region = self
            .model
            .locality_region()
            .difference(&self.support.union(&other.support));
        match region.min_element() {
            None => Ok(None),
            Some(point) => {
                let witness =
                    VertexClass::new(self.model.clone(), self.flavor, PeriodicSet::singleton(point))
                        .expect("a singleton inside the locality region is a vertex");
                Ok(Some(witness))
            }
        }
    }

    /// Color assigned by the canonical proper coloring: the smallest support
    /// point. Adjacent classes have disjoint supports, hence distinct minima.
    pub fn color(&self) -> u64 {
        self.support.min_element().expect("vertex supports are nonempty")
    }

    /// Whether the class lies on a triangle: at least two locality points
    /// must remain outside the support, one for each of the other corners.
    pub fn on_triangle(&self) -> bool {
        self.model.locality_region().difference(&self.support).has_at_least(2)
    }

    /// Orthogonality: adjacent with no common neighbor, i.e. disjoint
    /// supports that jointly cover the locality region.
    pub fn orthogonal(&self, other: &VertexClass) -> Result<bool, Error> {
        self.check_compatible(other)?;
        let disjoint = self.support.is_disjoint_from(&other.support);
        let covering = self
            .model
            .locality_region()
            .difference(&self.support.union(&other.support))
            .is_empty();
        Ok(disjoint && covering)
    }

    /// The complement class, when its support is admissible: the exact
    /// set complement of the support within the locality region.
    pub fn complement_class(&self) -> Option<VertexClass> {
        let region = self.model.locality_region().difference(&self.support);
        match admissible_support(&self.model, self.flavor, &region) {
            Ok(true) => Some(
                VertexClass::new(self.model.clone(), self.flavor, region)
                    .expect("the complement region satisfies every vertex condition"),
            ),
            _ => None,
        }
    }

    /// Eccentricity of the class, together with a distance-3 witness when
    /// the value is 3.
    ///
    /// The distance to any other class is at most 2 unless some vertex
    /// support meets this one and jointly covers the locality region. Such a
    /// partner exists iff the support has at least two points and the model
    /// admits near-covering supports; the witness is then the complement
    /// region plus the smallest support point, which stays a vertex because a
    /// second support point remains outside it.
    pub fn eccentricity(&self) -> Eccentricity {
        if supports_never_near_cover(&self.model, self.flavor) || !self.support.has_at_least(2) {
            return Eccentricity { value: 2, witness: None };
        }
        let anchor = self.support.min_element().expect("vertex supports are nonempty");
        let region = self
            .model
            .locality_region()
            .difference(&self.support)
            .union(&PeriodicSet::singleton(anchor));
        let witness = VertexClass::new(self.model.clone(), self.flavor, region)
            .expect("the eccentricity witness satisfies every vertex condition");
        Eccentricity { value: 3, witness: Some(witness) }
    }
}

/// Result of [`VertexClass::eccentricity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eccentricity {
    pub value: u8,
    /// A class at distance 3, present exactly when `value == 3`.
    pub witness: Option<VertexClass>,
}

/// Distance between two distinct vertices, as classes. `same_class` marks a
/// pair of distinct functions sharing one support (such a pair always has
/// distance 2: the supports are not disjoint, and the locality region always
/// has a point outside the common support).
pub fn distance(u: &VertexClass, v: &VertexClass, same_class: bool) -> Result<u8, Error> {
    u.check_compatible(v)?;
    if same_class {
        if u.support != v.support {
            return Err(Error::SupportsDiffer);
        }
        return Ok(2);
    }
    if u.support == v.support {
        return Err(Error::SameSupportNeedsTag);
    }
    if u.support.is_disjoint_from(&v.support) {
        return Ok(1);
    }
    let uncovered = u
        .model
        .locality_region()
        .difference(&u.support.union(&v.support));
    Ok(if uncovered.is_empty() { 3 } else { 2 })
}

/// Length of the smallest cycle through two distinct vertices: 3, 4 or 6,
/// decided by whether the supports are disjoint and whether they jointly
/// cover the locality region. A same-class pair always sits on a square.
pub fn smallest_cycle_through(u: &VertexClass, v: &VertexClass, same_class: bool) -> Result<u8, Error> {
    u.check_compatible(v)?;
    if same_class && u.support != v.support {
        return Err(Error::SupportsDiffer);
    }
    if !same_class && u.support == v.support {
        return Err(Error::SameSupportNeedsTag);
    }
    let disjoint = !same_class && u.support.is_disjoint_from(&v.support);
    let covering = u
        .model
        .locality_region()
        .difference(&u.support.union(&v.support))
        .is_empty();
    Ok(match (disjoint, covering) {
        (true, false) => 3,
        (true, true) | (false, false) => 4,
        (false, true) => 6,
    })
}

/// How the center of the graph is described in a [`MetricProfile`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CenterDescription {
    /// Every class is a center (the self-centric regimes).
    AllClasses,
    /// Exactly the singleton-support classes are centers.
    SingletonSupportClasses,
}

impl fmt::Display for CenterDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CenterDescription::AllClasses => write!(f, "all classes"),
            CenterDescription::SingletonSupportClasses => {
                write!(f, "singleton-support classes r1_x")
            }
        }
    }
}

/// Diameter, radius and center of the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetricProfile {
    pub diameter: u8,
    pub radius: u8,
    pub center: CenterDescription,
}

/// Diameter and radius over all class shapes. Distance-3 pairs need a
/// multi-point support (always a vertex once the locality region has three
/// points) plus a near-covering partner.
pub fn diameter_and_radius(model: &SpaceModel, flavor: GraphFlavor) -> Result<MetricProfile, Error> {
    model.require_nonempty_graph()?;
    let locality_has_three = model.locality_region().has_at_least(3);
    let diameter = if locality_has_three && !supports_never_near_cover(model, flavor) {
        3
    } else {
        2
    };
    Ok(MetricProfile {
        diameter,
        radius: 2,
        center: if diameter == 2 {
            CenterDescription::AllClasses
        } else {
            CenterDescription::SingletonSupportClasses
        },
    })
}

/// Girth of the graph: 3 once the locality region has three points (a
/// triangle of singletons exists), else 4 (the square through a vertex, an
/// annihilating partner and their doubles).
pub fn girth(model: &SpaceModel, _flavor: GraphFlavor) -> Result<u8, Error> {
    model.require_nonempty_graph()?;
    Ok(if model.locality_region().has_at_least(3) { 3 } else { 4 })
}

/// Outcome of [`is_triangulated`]: when false, a vertex class on no
/// triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationOutcome {
    pub holds: bool,
    pub counterexample: Option<PeriodicSet>,
}

/// The graph is triangulated iff every vertex class leaves at least two
/// locality points uncovered. The only candidate violators are supports
/// missing exactly one point, and those are admissible in every model except
/// the confined-supports regime.
pub fn is_triangulated(model: &SpaceModel, flavor: GraphFlavor) -> Result<TriangulationOutcome, Error> {
    model.require_nonempty_graph()?;
    if supports_never_near_cover(model, flavor) {
        return Ok(TriangulationOutcome { holds: true, counterexample: None });
    }
    let locality = model.locality_region();
    let omitted = locality
        .max_element()
        .or_else(|| locality.min_element())
        .expect("locality region is nonempty");
    let near_full = locality.difference(&PeriodicSet::singleton(omitted));
    debug_assert!(vertex_check(model, flavor, &near_full).is_vertex());
    Ok(TriangulationOutcome { holds: false, counterexample: Some(near_full) })
}

/// Outcome of [`is_hypertriangulated`]: when false, an edge on no triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypertriangulationOutcome {
    pub holds: bool,
    pub counterexample: Option<(PeriodicSet, PeriodicSet)>,
}

/// The graph is hypertriangulated iff no adjacent pair jointly covers the
/// locality region, i.e. the region admits no partition into two admissible
/// vertex supports.
pub fn is_hypertriangulated(
    model: &SpaceModel,
    flavor: GraphFlavor,
) -> Result<HypertriangulationOutcome, Error> {
    model.require_nonempty_graph()?;
    if supports_never_near_cover(model, flavor) {
        return Ok(HypertriangulationOutcome { holds: true, counterexample: None });
    }
    let locality = model.locality_region();
    let edge = if locality.is_finite() {
        let first = locality.min_element().expect("locality region is nonempty");
        let part = PeriodicSet::singleton(first);
        (part.clone(), locality.difference(&part))
    } else {
        // The infinite locality regions are the whole of the naturals.
        let evens = PeriodicSet::evens();
        (evens.clone(), locality.difference(&evens))
    };
    debug_assert!(vertex_check(model, flavor, &edge.0).is_vertex());
    debug_assert!(vertex_check(model, flavor, &edge.1).is_vertex());
    Ok(HypertriangulationOutcome { holds: false, counterexample: Some(edge) })
}

/// Complementedness: every vertex class must have an orthogonal partner, and
/// the partner's support is forced to be the exact complement of the class
/// support within the locality region. The graph is complemented iff those
/// complements are admissible, which fails only in the confined-supports
/// regime.
pub fn is_complemented(model: &SpaceModel, flavor: GraphFlavor) -> Result<bool, Error> {
    model.require_nonempty_graph()?;
    Ok(!supports_never_near_cover(model, flavor))
}

/// A complemented graph of this family is automatically uniquely
/// complemented: two partners of one class annihilate exactly the same
/// classes.
pub fn is_uniquely_complemented(model: &SpaceModel, flavor: GraphFlavor) -> Result<bool, Error> {
    is_complemented(model, flavor)
}

/// Clique number: the cellularity of the locality region, which for a
/// discrete region is its cardinality (the singletons form a clique, and a
/// clique's supports are pairwise disjoint).
pub fn clique_number(model: &SpaceModel, _flavor: GraphFlavor) -> Result<Cardinal, Error> {
    model.require_nonempty_graph()?;
    Ok(model.locality_region().cardinality())
}

/// Chromatic number: equals the clique number here. Coloring every class by
/// its smallest support point is proper, so the clique lower bound is tight,
/// and the level-set ring needs no extra colors.
pub fn chromatic_number(model: &SpaceModel, flavor: GraphFlavor) -> Result<Cardinal, Error> {
    clique_number(model, flavor)
}

/// Canonical dominating family and the weight upper bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatingBound {
    pub canonical_set_description: String,
    pub upper_bound: Cardinal,
}

/// The singleton classes dominate: any other class leaves some locality
/// point uncovered and is adjacent to that point's singleton. This also
/// dominates the level-set graph, whose every vertex misses a locality
/// point. The bound is the weight of the discrete locality region, its
/// cardinality.
pub fn dominating_set(model: &SpaceModel, _flavor: GraphFlavor) -> Result<DominatingBound, Error> {
    model.require_nonempty_graph()?;
    let locality = model.locality_region();
    Ok(DominatingBound {
        canonical_set_description: format!("singleton classes 1_x for x in {locality}"),
        upper_bound: locality.cardinality(),
    })
}

/// Flat summary of every graph parameter this module decides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub diameter: u8,
    pub radius: u8,
    pub girth: u8,
    pub triangulated: bool,
    pub hypertriangulated: bool,
    pub complemented: bool,
    pub uniquely_complemented: bool,
    pub clique: Cardinal,
    pub chromatic: Cardinal,
    pub dominating_upper_bound: Cardinal,
}

impl GraphReport {
    pub fn for_model(model: &SpaceModel, flavor: GraphFlavor) -> Result<Self, Error> {
        model.require_nonempty_graph()?;
        let metric = diameter_and_radius(model, flavor)?;
        let report = GraphReport {
            diameter: metric.diameter,
            radius: metric.radius,
            girth: girth(model, flavor)?,
            triangulated: is_triangulated(model, flavor)?.holds,
            hypertriangulated: is_hypertriangulated(model, flavor)?.holds,
            complemented: is_complemented(model, flavor)?,
            uniquely_complemented: is_uniquely_complemented(model, flavor)?,
            clique: clique_number(model, flavor)?,
            chromatic: chromatic_number(model, flavor)?,
            dominating_upper_bound: dominating_set(model, flavor)?.upper_bound,
        };
        debug_assert!(report.radius <= report.diameter);
        debug_assert!(report.clique <= report.chromatic);
        debug_assert!(!report.complemented || report.uniquely_complemented);
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::GroundSet;

    fn powerset_model(points: &[u64]) -> SpaceModel {
        let m = PeriodicSet::from_points(points.iter().copied());
        let n = points.iter().max().map(|&x| x + 1).unwrap_or(1);
        SpaceModel::new(GroundSet::Finite(n), ClosedSetIdeal::PowerSetOf(m)).unwrap()
    }

    fn nat_finite() -> SpaceModel {
        SpaceModel::new(GroundSet::Countable, ClosedSetIdeal::FiniteSets).unwrap()
    }

    fn nat_all() -> SpaceModel {
        SpaceModel::new(GroundSet::Countable, ClosedSetIdeal::AllClosed).unwrap()
    }

    fn class(model: &SpaceModel, flavor: GraphFlavor, points: &[u64]) -> VertexClass {
        VertexClass::new(model.clone(), flavor, PeriodicSet::from_points(points.iter().copied()))
            .unwrap()
    }

    #[test]
    fn vertex_check_examples() {
        let m = powerset_model(&[0, 1, 2]);
        assert!(vertex_check(&m, GraphFlavor::Cp, &PeriodicSet::from_points([0, 1])).is_vertex());
        assert_eq!(
            vertex_check(&m, GraphFlavor::Cp, &PeriodicSet::from_points([0, 1, 2])),
            VertexStatus::Rejected(VertexRejection::CoversLocality)
        );
        // A decaying function realises an infinite support in the level-set
        // ring; its zero set still meets the locality region.
        assert!(vertex_check(&nat_finite(), GraphFlavor::CpInfinity, &PeriodicSet::evens()).is_vertex());
        // The same support carries no member of the support-in-ideal ring.
        assert_eq!(
            vertex_check(&nat_finite(), GraphFlavor::Cp, &PeriodicSet::evens()),
            VertexStatus::Rejected(VertexRejection::InadmissibleSupport)
        );
        assert_eq!(
            vertex_check(&m, GraphFlavor::Cp, &PeriodicSet::empty()),
            VertexStatus::Rejected(VertexRejection::EmptySupport)
        );
    }

    #[test]
    fn adjacency_examples() {
        let m = powerset_model(&[0, 1, 2]);
        let u = class(&m, GraphFlavor::Cp, &[0]);
        let v = class(&m, GraphFlavor::Cp, &[1]);
        let w = class(&m, GraphFlavor::Cp, &[0, 1]);
        let x = class(&m, GraphFlavor::Cp, &[1, 2]);
        assert!(u.adjacent(&v).unwrap());
        assert!(!w.adjacent(&x).unwrap());
        assert!(!u.adjacent(&u).unwrap());
    }

    #[test]
    fn adjacency_rejects_mismatch() {
        let u = class(&powerset_model(&[0, 1]), GraphFlavor::Cp, &[0]);
        let v = class(&powerset_model(&[0, 1, 2]), GraphFlavor::Cp, &[0]);
        assert_eq!(u.adjacent(&v).unwrap_err(), Error::ModelMismatch);

        let m = nat_finite();
        let a = class(&m, GraphFlavor::Cp, &[0]);
        let b = class(&m, GraphFlavor::CpInfinity, &[1]);
        assert_eq!(a.adjacent(&b).unwrap_err(), Error::FlavorMismatch);
    }

    #[test]
    fn common_neighbor_examples() {
        let m = powerset_model(&[0, 1, 2]);
        let u = class(&m, GraphFlavor::Cp, &[0]);
        let v = class(&m, GraphFlavor::Cp, &[1]);
        let witness = u.common_neighbor(&v).unwrap().unwrap();
        assert_eq!(witness.support(), &PeriodicSet::singleton(2));

        let m2 = powerset_model(&[0, 1]);
        let u = class(&m2, GraphFlavor::Cp, &[0]);
        let v = class(&m2, GraphFlavor::Cp, &[1]);
        assert_eq!(u.common_neighbor(&v).unwrap(), None);

        let nat = nat_finite();
        let u = class(&nat, GraphFlavor::Cp, &[0, 1]);
        let v = class(&nat, GraphFlavor::Cp, &[1, 2]);
        let witness = u.common_neighbor(&v).unwrap().unwrap();
        assert_eq!(witness.support(), &PeriodicSet::singleton(3));
    }

    #[test]
    fn distance_examples() {
        let m = powerset_model(&[0, 1, 2, 3]);
        let u = class(&m, GraphFlavor::Cp, &[0, 1]);
        let v = class(&m, GraphFlavor::Cp, &[1, 2]);
        assert_eq!(distance(&u, &v, false).unwrap(), 2);

        let m3 = powerset_model(&[0, 1, 2]);
        let u = class(&m3, GraphFlavor::Cp, &[0, 1]);
        let v = class(&m3, GraphFlavor::Cp, &[1, 2]);
        assert_eq!(distance(&u, &v, false).unwrap(), 3);

        let w = class(&m3, GraphFlavor::Cp, &[0]);
        assert_eq!(distance(&w, &w.clone(), true).unwrap(), 2);
        assert_eq!(distance(&w, &w.clone(), false).unwrap_err(), Error::SameSupportNeedsTag);
    }

    #[test]
    fn eccentricity_examples() {
        let m = powerset_model(&[0, 1, 2]);
        let u = class(&m, GraphFlavor::Cp, &[0]);
        assert_eq!(u.eccentricity(), Eccentricity { value: 2, witness: None });

        let v = class(&m, GraphFlavor::Cp, &[0, 1]);
        let ecc = v.eccentricity();
        assert_eq!(ecc.value, 3);
        let witness = ecc.witness.unwrap();
        assert_eq!(distance(&v, &witness, false).unwrap(), 3);

        let nat = nat_finite();
        let w = class(&nat, GraphFlavor::Cp, &[0, 1]);
        assert_eq!(w.eccentricity().value, 2);
    }

    #[test]
    fn eccentricity_on_unconfined_countable_models() {
        // With unconstrained supports over the naturals, any class with two
        // support points has a distance-3 partner, even a cofinite one.
        let m = nat_all();
        let u = class(&m, GraphFlavor::Cp, &[0, 1]);
        let ecc = u.eccentricity();
        assert_eq!(ecc.value, 3);
        let witness = ecc.witness.unwrap();
        assert_eq!(distance(&u, &witness, false).unwrap(), 3);

        let cofinite_class =
            VertexClass::new(m.clone(), GraphFlavor::Cp, PeriodicSet::cofinite([0])).unwrap();
        let ecc = cofinite_class.eccentricity();
        assert_eq!(ecc.value, 3);
        let witness = ecc.witness.unwrap();
        assert_eq!(distance(&cofinite_class, &witness, false).unwrap(), 3);

        let singleton = class(&m, GraphFlavor::Cp, &[5]);
        assert_eq!(singleton.eccentricity().value, 2);

        // The level-set ring over the finite-sets ideal behaves the same way.
        let inf = nat_finite();
        let v = VertexClass::new(inf.clone(), GraphFlavor::CpInfinity, PeriodicSet::evens()).unwrap();
        let ecc = v.eccentricity();
        assert_eq!(ecc.value, 3);
        assert_eq!(distance(&v, &ecc.witness.unwrap(), false).unwrap(), 3);
    }

    #[test]
    fn diameter_examples() {
        let two = SpaceModel::new(GroundSet::Finite(2), ClosedSetIdeal::AllClosed).unwrap();
        let p = diameter_and_radius(&two, GraphFlavor::Cp).unwrap();
        assert_eq!((p.diameter, p.radius), (2, 2));
        assert_eq!(p.center, CenterDescription::AllClasses);

        let three = SpaceModel::new(GroundSet::Finite(3), ClosedSetIdeal::AllClosed).unwrap();
        let p = diameter_and_radius(&three, GraphFlavor::Cp).unwrap();
        assert_eq!((p.diameter, p.radius), (3, 2));
        assert_eq!(p.center, CenterDescription::SingletonSupportClasses);

        let p = diameter_and_radius(&nat_finite(), GraphFlavor::Cp).unwrap();
        assert_eq!((p.diameter, p.radius), (2, 2));
        assert_eq!(p.center, CenterDescription::AllClasses);

        let p = diameter_and_radius(&nat_finite(), GraphFlavor::CpInfinity).unwrap();
        assert_eq!((p.diameter, p.radius), (3, 2));
    }

    #[test]
    fn diameter_requires_nonempty_graph() {
        let m = SpaceModel::new(
            GroundSet::Finite(5),
            ClosedSetIdeal::PowerSetOf(PeriodicSet::singleton(3)),
        )
        .unwrap();
        assert!(matches!(
            diameter_and_radius(&m, GraphFlavor::Cp).unwrap_err(),
            Error::EmptyGraph { .. }
        ));
    }

    #[test]
    fn girth_examples() {
        let two = powerset_model(&[0, 1]);
        assert_eq!(girth(&two, GraphFlavor::Cp).unwrap(), 4);
        let three = powerset_model(&[0, 1, 2]);
        assert_eq!(girth(&three, GraphFlavor::Cp).unwrap(), 3);
        assert_eq!(girth(&nat_finite(), GraphFlavor::Cp).unwrap(), 3);
    }

    #[test]
    fn cycle_through_examples() {
        let m = powerset_model(&[0, 1, 2]);
        let u = class(&m, GraphFlavor::Cp, &[0]);
        let v = class(&m, GraphFlavor::Cp, &[1]);
        assert_eq!(smallest_cycle_through(&u, &v, false).unwrap(), 3);

        let m2 = powerset_model(&[0, 1]);
        let u = class(&m2, GraphFlavor::Cp, &[0]);
        let v = class(&m2, GraphFlavor::Cp, &[1]);
        assert_eq!(smallest_cycle_through(&u, &v, false).unwrap(), 4);

        let u = class(&m, GraphFlavor::Cp, &[0, 1]);
        let v = class(&m, GraphFlavor::Cp, &[1, 2]);
        assert_eq!(smallest_cycle_through(&u, &v, false).unwrap(), 6);

        // A same-class pair rides the square through an annihilating partner.
        assert_eq!(smallest_cycle_through(&u, &u.clone(), true).unwrap(), 4);
    }

    #[test]
    fn triangle_examples() {
        let m = powerset_model(&[0, 1, 2]);
        assert!(class(&m, GraphFlavor::Cp, &[0]).on_triangle());
        assert!(!class(&m, GraphFlavor::Cp, &[0, 1]).on_triangle());
        let nat = nat_finite();
        assert!(class(&nat, GraphFlavor::Cp, &[0, 1, 2, 3]).on_triangle());
    }

    #[test]
    fn triangulated_examples() {
        let out = is_triangulated(&nat_finite(), GraphFlavor::Cp).unwrap();
        assert!(out.holds);

        let out = is_triangulated(&powerset_model(&[0, 1, 2]), GraphFlavor::Cp).unwrap();
        assert!(!out.holds);
        assert_eq!(out.counterexample.unwrap(), PeriodicSet::from_points([0, 1]));

        // Unconstrained supports over the naturals leave a vertex whose zero
        // set is a single point.
        let out = is_triangulated(&nat_all(), GraphFlavor::Cp).unwrap();
        assert!(!out.holds);
        assert_eq!(out.counterexample.unwrap(), PeriodicSet::cofinite([0]));

        // The level-set ring admits the same near-full support even over the
        // finite-sets ideal.
        let out = is_triangulated(&nat_finite(), GraphFlavor::CpInfinity).unwrap();
        assert!(!out.holds);
    }

    #[test]
    fn hypertriangulated_examples() {
        assert!(is_hypertriangulated(&nat_finite(), GraphFlavor::Cp).unwrap().holds);

        let out = is_hypertriangulated(&powerset_model(&[0, 1]), GraphFlavor::Cp).unwrap();
        assert!(!out.holds);
        let (a, b) = out.counterexample.unwrap();
        assert_eq!((a, b), (PeriodicSet::singleton(0), PeriodicSet::singleton(1)));

        let out = is_hypertriangulated(&nat_all(), GraphFlavor::Cp).unwrap();
        assert!(!out.holds);
        let (a, b) = out.counterexample.unwrap();
        assert_eq!(a, PeriodicSet::evens());
        assert_eq!(b, PeriodicSet::evens().complement_in_naturals());
    }

    #[test]
    fn orthogonality_examples() {
        let m = powerset_model(&[0, 1, 2]);
        let u = class(&m, GraphFlavor::Cp, &[0]);
        let v = class(&m, GraphFlavor::Cp, &[1, 2]);
        let w = class(&m, GraphFlavor::Cp, &[1]);
        assert!(u.orthogonal(&v).unwrap());
        assert!(!u.orthogonal(&w).unwrap());

        let nat = nat_finite();
        let a = class(&nat, GraphFlavor::Cp, &[0]);
        let b = class(&nat, GraphFlavor::Cp, &[1]);
        assert!(!a.orthogonal(&b).unwrap());
    }

    #[test]
    fn complement_class_examples() {
        let m = powerset_model(&[0, 1, 2]);
        let u = class(&m, GraphFlavor::Cp, &[0]);
        let c = u.complement_class().unwrap();
        assert_eq!(c.support(), &PeriodicSet::from_points([1, 2]));
        assert!(u.orthogonal(&c).unwrap());

        let nat = nat_finite();
        let v = class(&nat, GraphFlavor::Cp, &[0]);
        assert_eq!(v.complement_class(), None);

        let all = nat_all();
        let evens = VertexClass::new(all.clone(), GraphFlavor::Cp, PeriodicSet::evens()).unwrap();
        let c = evens.complement_class().unwrap();
        assert_eq!(c.support(), &PeriodicSet::evens().complement_in_naturals());
        assert!(evens.orthogonal(&c).unwrap());
    }

    #[test]
    fn complemented_examples() {
        assert!(is_complemented(&powerset_model(&[0, 1, 2]), GraphFlavor::Cp).unwrap());
        assert!(is_uniquely_complemented(&powerset_model(&[0, 1, 2]), GraphFlavor::Cp).unwrap());
        assert!(!is_complemented(&nat_finite(), GraphFlavor::Cp).unwrap());
        assert!(is_complemented(&nat_all(), GraphFlavor::Cp).unwrap());
        // Set complements are always admissible in the level-set ring over
        // the finite-sets ideal.
        assert!(is_complemented(&nat_finite(), GraphFlavor::CpInfinity).unwrap());
    }

    #[test]
    fn clique_chromatic_examples() {
        let m = powerset_model(&[0, 1, 2]);
        assert_eq!(clique_number(&m, GraphFlavor::Cp).unwrap(), Cardinal::Finite(3));
        assert_eq!(chromatic_number(&m, GraphFlavor::Cp).unwrap(), Cardinal::Finite(3));
        assert_eq!(
            clique_number(&nat_finite(), GraphFlavor::Cp).unwrap(),
            Cardinal::CountablyInfinite
        );
        assert_eq!(
            chromatic_number(&nat_finite(), GraphFlavor::CpInfinity).unwrap(),
            Cardinal::CountablyInfinite
        );
        let two = powerset_model(&[0, 1]);
        assert_eq!(clique_number(&two, GraphFlavor::Cp).unwrap(), Cardinal::Finite(2));

        let c = class(&m, GraphFlavor::Cp, &[2]);
        assert_eq!(c.color(), 2);
        let nat = nat_finite();
        let c = class(&nat, GraphFlavor::Cp, &[2, 5]);
        assert_eq!(c.color(), 2);
    }

    #[test]
    fn dominating_examples() {
        let m = powerset_model(&[0, 1, 2]);
        let d = dominating_set(&m, GraphFlavor::Cp).unwrap();
        assert_eq!(d.upper_bound, Cardinal::Finite(3));
        let d = dominating_set(&nat_finite(), GraphFlavor::CpInfinity).unwrap();
        assert_eq!(d.upper_bound, Cardinal::CountablyInfinite);
    }

    #[test]
    fn report_for_countable_models() {
        let r = GraphReport::for_model(&nat_finite(), GraphFlavor::Cp).unwrap();
        assert_eq!(r.diameter, 2);
        assert_eq!(r.girth, 3);
        assert!(r.triangulated && r.hypertriangulated);
        assert!(!r.complemented && !r.uniquely_complemented);
        assert_eq!(r.clique, Cardinal::CountablyInfinite);

        let r = GraphReport::for_model(&nat_all(), GraphFlavor::Cp).unwrap();
        assert_eq!(r.diameter, 3);
        assert!(!r.triangulated && !r.hypertriangulated);
        assert!(r.complemented && r.uniquely_complemented);
    }

    #[test]
    fn diameter_three_forces_locality_into_the_ideal() {
        // On the support-constrained flavor, a distance-3 pair pins the
        // locality region under two supports from the ideal, so the region
        // itself must belong to it.
        let catalogue = [
            powerset_model(&[0, 1]),
            powerset_model(&[0, 1, 2]),
            powerset_model(&[0, 1, 2, 3]),
            SpaceModel::new(GroundSet::Finite(3), ClosedSetIdeal::AllClosed).unwrap(),
            nat_finite(),
            nat_all(),
        ];
        for model in catalogue {
            let profile = diameter_and_radius(&model, GraphFlavor::Cp).unwrap();
            if profile.diameter == 3 {
                assert!(model.closure_of_locality_in_ideal(), "violated on {model}");
            }
        }
    }

    #[test]
    fn report_serialises_flat() {
        let r = GraphReport::for_model(&powerset_model(&[0, 1, 2]), GraphFlavor::Cp).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"diameter\":3"));
        assert!(json.contains("\"girth\":3"));
        assert!(json.contains("\"clique\":3"));
        let back: GraphReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);

        let r = GraphReport::for_model(&nat_finite(), GraphFlavor::Cp).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"clique\":\"countable\""));
        let back: GraphReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
