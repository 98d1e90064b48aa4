//! Acceptance suite: one test per exit criterion, each printing its own
//! pass/fail line through the harness. Every tolerance is pinned here; all
//! comparisons are exact.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zdgamma::blowup::crosscheck::{cross_check, CheckKind, CrossCheckOptions};
use zdgamma::blowup::{generate, oracle, BlowupSpec};
use zdgamma::isorecon::{automorphism_psi, reconstruct, verify_ring_iso};
use zdgamma::ring::{annihilator, hull, hull_of_annihilator, minimal_prime_space, ratio, FinSuppFn};
use zdgamma::setalg::PeriodicSet;
use zdgamma::zdgraph::{
    self, chromatic_number, clique_number, is_complemented, is_hypertriangulated, is_triangulated,
    vertex_check, GraphFlavor, VertexClass,
};
use zdgamma::{BigRational, Cardinal, ClosedSetIdeal, Error, GraphReport, GroundSet, SpaceModel};

fn powerset_model(m: u64) -> SpaceModel {
    SpaceModel::new(
        GroundSet::Finite(m),
        ClosedSetIdeal::PowerSetOf(PeriodicSet::interval(0, m - 1).unwrap()),
    )
    .unwrap()
}

fn all_closed_model(n: u64) -> SpaceModel {
    SpaceModel::new(GroundSet::Finite(n), ClosedSetIdeal::AllClosed).unwrap()
}

fn nat_finite() -> SpaceModel {
    SpaceModel::new(GroundSet::Countable, ClosedSetIdeal::FiniteSets).unwrap()
}

fn two_values() -> Vec<BigRational> {
    vec![ratio(1, 1), ratio(2, 1)]
}

fn powerset_spec(m: u64) -> BlowupSpec {
    let model = powerset_model(m);
    let window = model.locality_region();
    BlowupSpec::new(model, GraphFlavor::Cp, window, two_values()).unwrap()
}

/// Criterion 1: the closed-form distance trichotomy equals breadth-first
/// search distance on the full blow-up for every vertex pair of every
/// powerset model of size 2, 3 and 4, with zero discrepancies, in under ten
/// seconds.
#[test]
fn criterion_01_distance_trichotomy_matches_bfs() {
    let start = Instant::now();
    let opts = CrossCheckOptions {
        only: Some(vec![CheckKind::Distance]),
        ..Default::default()
    };
    let mut pairs_checked = 0;
    for m in [2, 3, 4] {
        let report = cross_check(&powerset_spec(m), &opts).unwrap();
        assert!(report.passed(), "discrepancies at size {m}:\n{}", report.render());
        pairs_checked += report.total_checks();
    }
    // Every unordered vertex pair of the three blow-ups is compared.
    assert_eq!(pairs_checked, 4 * 3 / 2 + 18 * 17 / 2 + 64 * 63 / 2);
    assert!(
        start.elapsed().as_secs() < 10,
        "distance matrix took {:?}",
        start.elapsed()
    );
}

/// Criterion 2: the diameter/girth table of the three reference models, with
/// all eccentricities equal to 2 on the countable finite-sets model.
#[test]
fn criterion_02_diameter_and_girth_table() {
    let two = GraphReport::for_model(&all_closed_model(2), GraphFlavor::Cp).unwrap();
    assert_eq!((two.diameter, two.girth), (2, 4));

    let three = GraphReport::for_model(&all_closed_model(3), GraphFlavor::Cp).unwrap();
    assert_eq!((three.diameter, three.girth), (3, 3));

    let nat = GraphReport::for_model(&nat_finite(), GraphFlavor::Cp).unwrap();
    assert_eq!((nat.diameter, nat.girth), (2, 3));

    // Eccentricity 2 for every class shape: singletons, finite blocks, and
    // scattered supports.
    for support in [
        PeriodicSet::singleton(0),
        PeriodicSet::from_points([0, 1]),
        PeriodicSet::from_points([2, 5, 9]),
        PeriodicSet::from_points((0..7).collect::<Vec<_>>()),
    ] {
        let class = VertexClass::new(nat_finite(), GraphFlavor::Cp, support).unwrap();
        let ecc = class.eccentricity();
        assert_eq!(ecc.value, 2, "class {} is not central", class.support());
        assert!(ecc.witness.is_none());
    }

    // The finite tables are confirmed by the oracle as well.
    for (n, diameter, girth) in [(2u64, 2u32, 4u32), (3, 3, 3)] {
        let model = all_closed_model(n);
        let window = model.locality_region();
        let spec = BlowupSpec::new(model, GraphFlavor::Cp, window, two_values()).unwrap();
        let g = generate(&spec).unwrap();
        let m = oracle::metrics(g.adjacency(), 60_000);
        assert_eq!(m.diameter, Some(diameter));
        assert_eq!(m.girth, Some(girth));
    }
}

/// Criterion 3: the cycle taxonomy returns only lengths 3, 4 and 6, matches
/// the exact flow oracle for the shortest cycle through every pair on all
/// finite models up to size 4, and the chordless-cycle scan finds only
/// lengths 3 and 4.
#[test]
fn criterion_03_cycle_taxonomy() {
    let opts = CrossCheckOptions {
        only: Some(vec![CheckKind::CycleThroughPair, CheckKind::ChordlessCycles]),
        ..Default::default()
    };
    for m in [2, 3, 4] {
        let report = cross_check(&powerset_spec(m), &opts).unwrap();
        assert!(report.passed(), "discrepancies at size {m}:\n{}", report.render());
    }
}

/// Criterion 4: the triangulated/hypertriangulated matrix, with closed-form
/// witnesses re-validated by the oracle.
#[test]
fn criterion_04_triangulation_matrix() {
    let nat = nat_finite();
    assert!(is_triangulated(&nat, GraphFlavor::Cp).unwrap().holds);
    assert!(is_hypertriangulated(&nat, GraphFlavor::Cp).unwrap().holds);

    for m in [2, 3, 4] {
        let model = powerset_model(m);
        let tri = is_triangulated(&model, GraphFlavor::Cp).unwrap();
        let hyper = is_hypertriangulated(&model, GraphFlavor::Cp).unwrap();
        assert!(!tri.holds && !hyper.holds);
        assert!(tri.counterexample.is_some());
        assert!(hyper.counterexample.is_some());
        // The harness re-validates both witnesses against the oracle.
        let opts = CrossCheckOptions {
            only: Some(vec![
                CheckKind::Triangle,
                CheckKind::Triangulated,
                CheckKind::Hypertriangulated,
            ]),
            ..Default::default()
        };
        let report = cross_check(&powerset_spec(m), &opts).unwrap();
        assert!(report.passed(), "discrepancies at size {m}:\n{}", report.render());
    }

    // The countable model's claims hold on its truncations too.
    let window = PeriodicSet::interval(0, 3).unwrap();
    let spec = BlowupSpec::new(nat, GraphFlavor::Cp, window, two_values()).unwrap();
    let opts = CrossCheckOptions {
        only: Some(vec![CheckKind::Triangle, CheckKind::Hypertriangulated]),
        ..Default::default()
    };
    let report = cross_check(&spec, &opts).unwrap();
    assert!(report.passed(), "discrepancies:\n{}", report.render());
}

/// Criterion 5: exact oracle clique and chromatic numbers of the truncations
/// equal the locality size for sizes 2, 3 and 4, and the level-set graph
/// needs no extra colors at class level over the countable finite-sets
/// model.
#[test]
fn criterion_05_clique_and_chromatic() {
    for m in [2u64, 3, 4] {
        let g = generate(&powerset_spec(m)).unwrap();
        assert_eq!(oracle::max_clique(g.adjacency()), m as u32);
        assert_eq!(oracle::chromatic_number(g.adjacency()), m as u32);
        assert_eq!(
            clique_number(&powerset_model(m), GraphFlavor::Cp).unwrap(),
            Cardinal::Finite(m)
        );
    }

    let nat = nat_finite();
    assert_eq!(
        chromatic_number(&nat, GraphFlavor::CpInfinity).unwrap(),
        chromatic_number(&nat, GraphFlavor::Cp).unwrap()
    );
    // On truncation windows the two flavors generate the same classes and
    // the measured chromatic number equals the window size.
    for w in [2u64, 3, 4] {
        let window = PeriodicSet::interval(0, w - 1).unwrap();
        for flavor in [GraphFlavor::Cp, GraphFlavor::CpInfinity] {
            let spec = BlowupSpec::new(nat.clone(), flavor, window.clone(), two_values()).unwrap();
            let g = generate(&spec).unwrap();
            assert_eq!(oracle::chromatic_number(g.adjacency()), w as u32, "window {w} {flavor}");
        }
    }
    // The canonical coloring by smallest support point is proper across
    // flavors: adjacency forces distinct colors.
    let wide = VertexClass::new(nat.clone(), GraphFlavor::CpInfinity, PeriodicSet::evens()).unwrap();
    let narrow =
        VertexClass::new(nat, GraphFlavor::CpInfinity, PeriodicSet::from_points([1, 3])).unwrap();
    assert!(wide.adjacent(&narrow).unwrap());
    assert_ne!(wide.color(), narrow.color());
}

/// Criterion 6: exact dominating numbers 2 and 3 at sizes 2 and 3, both
/// within the weight bound, and the canonical singleton family dominates
/// every blow-up, the level-set flavor included.
#[test]
fn criterion_06_dominating_numbers() {
    for (m, expected) in [(2u64, 2u32), (3, 3)] {
        let g = generate(&powerset_spec(m)).unwrap();
        let dt = oracle::dominating_number(g.adjacency());
        assert_eq!(dt, expected);
        let bound = zdgraph::dominating_set(&powerset_model(m), GraphFlavor::Cp)
            .unwrap()
            .upper_bound;
        assert!(Cardinal::Finite(dt as u64) <= bound);
    }

    // Canonical family domination on every matrix member plus the level-set
    // flavor over the countable model.
    let mut specs = vec![powerset_spec(2), powerset_spec(3), powerset_spec(4)];
    let window = PeriodicSet::interval(0, 3).unwrap();
    specs.push(BlowupSpec::new(nat_finite(), GraphFlavor::CpInfinity, window, two_values()).unwrap());
    let opts = CrossCheckOptions {
        only: Some(vec![CheckKind::Domination]),
        ..Default::default()
    };
    for spec in &specs {
        let report = cross_check(spec, &opts).unwrap();
        assert!(report.passed(), "discrepancies:\n{}", report.render());
    }
}

/// Criterion 7: graph complementedness coincides with compactness of the
/// minimal prime index space on the enumerable models, and the
/// unique-complement law holds on 1000 sampled orthogonal triples.
#[test]
fn criterion_07_complemented_iff_compact() {
    let pow = powerset_model(3);
    assert!(is_complemented(&pow, GraphFlavor::Cp).unwrap());
    assert!(minimal_prime_space(&pow).unwrap().compact);
    assert!(zdgraph::is_uniquely_complemented(&pow, GraphFlavor::Cp).unwrap());

    let nat = nat_finite();
    assert!(!is_complemented(&nat, GraphFlavor::Cp).unwrap());
    assert!(!minimal_prime_space(&nat).unwrap().compact);

    // Orthogonal triples u ⊥ v, u ⊥ w in the complemented blow-ups: the two
    // partners must annihilate exactly the same vertices.
    let graphs: Vec<_> = [2u64, 3, 4]
        .iter()
        .map(|&m| generate(&powerset_spec(m)).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut triples = 0;
    while triples < 1000 {
        let g = &graphs[rng.gen_range(0..graphs.len())];
        let adj = g.adjacency();
        let u = rng.gen_range(0..g.vertex_count());
        let partners: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| g.is_edge(u, v) && !oracle::has_common_neighbor(adj, u, v))
            .collect();
        assert!(!partners.is_empty(), "complemented blow-up has a partnerless vertex");
        let v = *partners.choose(&mut rng).unwrap();
        let w = *partners.choose(&mut rng).unwrap();
        assert_eq!(adj[v], adj[w], "partners of one vertex differ in neighborhoods");
        triples += 1;
    }
}

/// Criterion 8: the hull identity and both annihilator-containment
/// equivalences hold for 1000 random function pairs per enumerable model,
/// as exact set equalities, with the ring product as the second route.
#[test]
fn criterion_08_hull_and_annihilator_identities() {
    let models = [
        (nat_finite(), 12u64),
        (powerset_model(4), 4),
        (
            SpaceModel::new(
                GroundSet::Finite(8),
                ClosedSetIdeal::PowerSetOf(PeriodicSet::interval(0, 5).unwrap()),
            )
            .unwrap(),
            6,
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11c);
    for (model, width) in &models {
        let index_space = model.locality_region();
        for _ in 0..1000 {
            let random_fn = |rng: &mut ChaCha8Rng| {
                FinSuppFn::from_pairs((0..*width).filter_map(|p| {
                    if rng.gen_bool(0.4) {
                        let numer = rng.gen_range(1i64..=5) * if rng.gen_bool(0.5) { -1 } else { 1 };
                        Some((p, ratio(numer, rng.gen_range(1i64..=3))))
                    } else {
                        None
                    }
                }))
            };
            let f = random_fn(&mut rng);
            let g = random_fn(&mut rng);

            // Hull identity: the annihilator's hull is the complement of the
            // element's hull inside the prime index space.
            let hf = hull(model, &f).unwrap();
            let haf = hull_of_annihilator(model, &f).unwrap();
            assert_eq!(haf, index_space.difference(&hf));
            assert_eq!(hf.union(&haf), index_space);

            // Containment one way: hull(g) contains hull(A(f)) exactly when
            // the ring product vanishes.
            let hg = hull(model, &g).unwrap();
            let set_route = haf.is_subset_of(&hg);
            let ring_route = f.mul(&g).is_zero();
            assert_eq!(set_route, ring_route, "containment mismatch at f={f}, g={g}");
            assert_eq!(ring_route, annihilator(model, &f).contains(&g));

            // Containment the other way: hull(g) inside hull(A(f)) exactly
            // when the square witness covers the locality region, i.e. is a
            // nonzero non-vertex.
            let set_route = hg.is_subset_of(&haf);
            let witness = f.ac_witness(&g);
            let ring_route = !witness.is_zero()
                && !vertex_check(model, GraphFlavor::Cp, &witness.support()).is_vertex()
                && index_space.difference(&witness.support()).is_empty();
            assert_eq!(set_route, ring_route, "reverse containment mismatch at f={f}, g={g}");
        }
    }
}

/// Criterion 9: reconstruction round trips for sizes 2, 3 and 4: twenty
/// random automorphism-derived vertex maps each, verified on 500 random
/// pairs, with cross-size inputs rejected through the chromatic gate, in
/// under thirty seconds.
#[test]
fn criterion_09_reconstruction_round_trip() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1503);
    for m in [2u64, 3, 4] {
        let g = generate(&powerset_spec(m)).unwrap();
        for round in 0..20 {
            let mut points: Vec<u64> = (0..m).collect();
            points.shuffle(&mut rng);
            let point_perm: BTreeMap<u64, u64> =
                (0..m).map(|x| (x, points[x as usize])).collect();
            let value_perm: BTreeMap<BigRational, BigRational> = if rng.gen_bool(0.5) {
                BTreeMap::from([(ratio(1, 1), ratio(2, 1)), (ratio(2, 1), ratio(1, 1))])
            } else {
                BTreeMap::from([(ratio(1, 1), ratio(1, 1)), (ratio(2, 1), ratio(2, 1))])
            };
            let psi = automorphism_psi(&g, &point_perm, &value_perm).unwrap();
            let desc = reconstruct(&g, &g, &psi).unwrap();
            // The recovered map is the permutation that built the input.
            let expected: Vec<(u64, u64)> = point_perm.iter().map(|(a, b)| (*a, *b)).collect();
            assert_eq!(desc.pairs(), expected.as_slice(), "size {m} round {round}");
            let outcome = verify_ring_iso(&desc, 500, rng.gen());
            assert!(outcome.pass, "size {m} round {round}: {:?}", outcome.counterexample);
        }
    }

    // Cross-size inputs with matching vertex counts are rejected by the
    // chromatic gate before anything else.
    let gx = generate(
        &BlowupSpec::new(
            powerset_model(2),
            GraphFlavor::Cp,
            powerset_model(2).locality_region(),
            vec![ratio(1, 1), ratio(2, 1), ratio(3, 1)],
        )
        .unwrap(),
    )
    .unwrap();
    let gy = generate(
        &BlowupSpec::new(
            powerset_model(3),
            GraphFlavor::Cp,
            powerset_model(3).locality_region(),
            vec![ratio(1, 1)],
        )
        .unwrap(),
    )
    .unwrap();
    assert_eq!(gx.vertex_count(), gy.vertex_count());
    let err = reconstruct(&gx, &gy, &zdgamma::isorecon::identity_psi(6)).unwrap_err();
    assert_eq!(err, Error::ChromaticMismatch { left: 2, right: 3 });

    assert!(
        start.elapsed().as_secs() < 30,
        "reconstruction rounds took {:?}",
        start.elapsed()
    );
}

/// Criterion 10: the graph is not locally finite yet stays finitely
/// colorable: enlarging the alphabet at size 3 yields at least fifty
/// distinct neighbors of one indicator function while the exact chromatic
/// number remains 3.
#[test]
fn criterion_10_not_locally_finite_but_finitely_colorable() {
    let model = powerset_model(3);
    let window = model.locality_region();
    let alphabet: Vec<BigRational> = (1..=7).map(|k| ratio(k, 1)).collect();
    let spec = BlowupSpec::new(model, GraphFlavor::Cp, window, alphabet).unwrap();
    let g = generate(&spec).unwrap();

    let one_zero = (0..g.vertex_count())
        .find(|&v| g.vertices()[v] == FinSuppFn::indicator(0))
        .expect("the indicator of 0 is a vertex");
    let neighbors = g.adjacency()[one_zero].len();
    assert!(neighbors >= 50, "only {neighbors} neighbors");
    assert_eq!(oracle::chromatic_number(g.adjacency()), 3);
}

/// Criterion 11: fault injection flips the verdict: corrupting one adjacency
/// makes the harness report at least one discrepancy, so it cannot pass
/// vacuously.
#[test]
fn criterion_11_mutation_sensitivity() {
    let clean = cross_check(&powerset_spec(3), &CrossCheckOptions::default()).unwrap();
    assert!(clean.passed());
    let mutated = cross_check(
        &powerset_spec(3),
        &CrossCheckOptions { mutate: true, ..Default::default() },
    )
    .unwrap();
    assert!(!mutated.passed(), "the mutated run produced no discrepancy");
    assert!(!mutated.discrepancies.is_empty());
}
