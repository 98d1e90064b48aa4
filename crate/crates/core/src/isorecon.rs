//! Reconstruction of a ring isomorphism from an abstract graph isomorphism.
//!
//! Given two faithful blow-ups and a vertex bijection between them that
//! preserves adjacency, this module recovers the underlying point bijection
//! between the locality regions and the induced ring isomorphism, using only
//! abstract graph structure: exact chromatic numbers gate the sizes, and the
//! "atoms" (classes of functions supported on a single point) are detected
//! through eccentricity in the finite regime and through the absence of
//! 5-cycles without chords at the vertex in truncations of the infinite
//! regime. Semantic labels enter only at the very end, to name the recovered
//! points.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blowup::{oracle, ExplicitGraph};
use crate::ring::FinSuppFn;
use crate::setalg::Cardinal;
use crate::topology::ClosedSetIdeal;
use crate::Error;

/// An adjacency structure with opaque vertex ids `0..n`: no semantic
/// annotations survive into it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractGraph {
    adj: Vec<Vec<usize>>,
}

impl AbstractGraph {
    pub fn new(adj: Vec<Vec<usize>>) -> Self {
        let mut adj = adj;
        for row in &mut adj {
            row.sort_unstable();
        }
        AbstractGraph { adj }
    }

    pub fn from_explicit(g: &ExplicitGraph) -> Self {
        AbstractGraph { adj: g.adjacency().to_vec() }
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let n = self.adj.len();
        let mut adj = vec![Vec::new(); n];
        for (v, row) in self.adj.iter().enumerate() {
            for &w in row {
                adj[perm[v]].push(perm[w]);
            }
        }
        AbstractGraph::new(adj)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }
}

/// Which detection rule applies: a complete graph over a finite locality
/// region, or a truncation window inside an infinite one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Finite,
    Infinite,
}

/// Detects the atom classes of a faithful blow-up: groups of vertices whose
/// functions share a one-point support. In the finite regime atoms are
/// exactly the vertices of eccentricity 2; in a truncation of the infinite
/// regime they are the non-isolated vertices lying on no 5-cycle free of
/// chords at the vertex (the isolated vertices are the full-window classes,
/// an artifact of windowing). Classes are the groups of atoms with identical
/// neighborhoods.
pub fn detect_atom_classes(g: &AbstractGraph, regime: Regime) -> Result<Vec<Vec<usize>>, Error> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let isolated: Vec<usize> = (0..n).filter(|&v| adj[v].is_empty()).collect();

    let atoms: Vec<usize> = match regime {
        Regime::Finite => {
            if !isolated.is_empty() {
                return Err(Error::RegimeMismatch(format!(
                    "finite-regime truncations have no isolated vertices, found {}",
                    isolated.len()
                )));
            }
            let mut atoms = Vec::new();
            for v in 0..n {
                let ecc = oracle::bfs(adj, v)
                    .into_iter()
                    .collect::<Option<Vec<u32>>>()
                    .map(|d| d.into_iter().max().unwrap_or(0));
                match ecc {
                    None => {
                        return Err(Error::RegimeMismatch(
                            "graph is disconnected in the finite regime".into(),
                        ))
                    }
                    Some(2) => atoms.push(v),
                    Some(3) => {}
                    Some(e) => {
                        return Err(Error::RegimeMismatch(format!(
                            "eccentricity {e} is outside the finite-regime profile"
                        )))
                    }
                }
            }
            atoms
        }
        Regime::Infinite => {
            if isolated.is_empty() {
                return Err(Error::RegimeMismatch(
                    "truncations of the infinite regime contain isolated full-window classes"
                        .into(),
                ));
            }
            (0..n)
                .filter(|&v| !adj[v].is_empty() && !oracle::on_five_cycle_without_center_chords(adj, v))
                .collect()
        }
    };
    if atoms.is_empty() {
        return Err(Error::RegimeMismatch("no atoms detected".into()));
    }

    // Group atoms by exact neighborhood; same-support functions see the same
    // neighbors, and atoms over distinct points are adjacent.
    let mut groups: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for &v in &atoms {
        groups.entry(adj[v].as_slice()).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();

    let sizes: BTreeSet<usize> = classes.iter().map(|c| c.len()).collect();
    if sizes.len() > 1 {
        return Err(Error::RegimeMismatch(format!(
            "atom classes have unequal sizes {sizes:?}"
        )));
    }
    for (i, a) in classes.iter().enumerate() {
        for b in classes.iter().skip(i + 1) {
            if !g.is_edge(a[0], b[0]) {
                return Err(Error::RegimeMismatch(
                    "atoms of distinct classes must be adjacent".into(),
                ));
            }
        }
    }
    classes.sort_by_key(|c| c[0]);
    Ok(classes)
}

/// The recovered ring isomorphism: a point bijection and the linear action
/// it induces, sending the indicator of each point to the indicator of its
/// image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingIsoDescription {
    pairs: Vec<(u64, u64)>,
}

impl RingIsoDescription {
    /// Builds from point pairs. Duplicate domain points are rejected;
    /// duplicate images are allowed at this level so that verification can
    /// demonstrate the failure of a non-injective map.
    pub fn new(mut pairs: Vec<(u64, u64)>) -> Result<Self, Error> {
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::MalformedPsi(format!(
                    "duplicate domain point {}",
                    w[0].0
                )));
            }
        }
        Ok(RingIsoDescription { pairs })
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn phi(&self, x: u64) -> Option<u64> {
        self.pairs
            .binary_search_by_key(&x, |(a, _)| *a)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn phi_inverse(&self, y: u64) -> Option<u64> {
        self.pairs.iter().find(|(_, b)| *b == y).map(|(a, _)| *a)
    }

    pub fn domain(&self) -> Vec<u64> {
        self.pairs.iter().map(|(a, _)| *a).collect()
    }

    pub fn image(&self) -> Vec<u64> {
        let mut ys: Vec<u64> = self.pairs.iter().map(|(_, b)| *b).collect();
        ys.sort_unstable();
        ys.dedup();
        ys
    }

    /// The linear action: each support point maps through the point
    /// bijection, values carried along (colliding images accumulate).
    pub fn apply(&self, f: &FinSuppFn) -> Result<FinSuppFn, Error> {
        let mut values: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (x, v) in f.iter() {
            let y = self.phi(x).ok_or(Error::OutsideLocality { point: x })?;
            let entry = values.entry(y).or_insert_with(BigRational::zero);
            *entry += v;
        }
        Ok(FinSuppFn::from_pairs(values))
    }

    /// Preimage under the action, built through the inverse point map.
    pub fn apply_inverse(&self, h: &FinSuppFn) -> Result<FinSuppFn, Error> {
        let mut values: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (y, v) in h.iter() {
            let x = self.phi_inverse(y).ok_or(Error::OutsideLocality { point: y })?;
            let entry = values.entry(x).or_insert_with(BigRational::zero);
            *entry += v;
        }
        Ok(FinSuppFn::from_pairs(values))
    }
}

fn reconstruction_supported(g: &ExplicitGraph) -> Result<(), Error> {
    // The recovery theory covers the rings of finitely supported functions:
    // every enumerable ideal kind qualifies, the unconstrained ring over a
    // countable ground set does not.
    if *g.model.ideal() == ClosedSetIdeal::AllClosed && !g.model.ground().is_finite() {
        return Err(Error::UnsupportedModel(
            "reconstruction covers the finitely-supported function rings only".into(),
        ));
    }
    Ok(())
}

fn regime_of(g: &ExplicitGraph) -> Regime {
    if g.model.locality_region() == g.window {
        Regime::Finite
    } else {
        Regime::Infinite
    }
}

/// Validates that `psi` is a bijection `0..n -> 0..n` preserving adjacency
/// in both directions.
fn validate_psi(
    ax: &AbstractGraph,
    ay: &AbstractGraph,
    psi: &[(usize, usize)],
) -> Result<Vec<usize>, Error> {
    let n = ax.vertex_count();
    if ay.vertex_count() != n {
        return Err(Error::NotAnIsomorphism(format!(
            "vertex counts differ: {} vs {}",
            n,
            ay.vertex_count()
        )));
    }
    if psi.len() != n {
        return Err(Error::NotAnIsomorphism(format!(
            "map lists {} pairs for {} vertices",
            psi.len(),
            n
        )));
    }
    let mut forward = vec![usize::MAX; n];
    let mut seen_image = vec![false; n];
    for &(u, v) in psi {
        if u >= n || v >= n {
            return Err(Error::NotAnIsomorphism(format!("pair ({u}, {v}) out of range")));
        }
        if forward[u] != usize::MAX {
            return Err(Error::NotAnIsomorphism(format!("vertex {u} mapped twice")));
        }
        if seen_image[v] {
            return Err(Error::NotAnIsomorphism(format!("image {v} used twice")));
        }
        forward[u] = v;
        seen_image[v] = true;
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if ax.is_edge(u, v) != ay.is_edge(forward[u], forward[v]) {
                return Err(Error::NotAnIsomorphism(format!(
                    "adjacency of ({u}, {v}) is not preserved"
                )));
            }
        }
    }
    Ok(forward)
}

/// Recovers the point bijection and ring isomorphism from a graph
/// isomorphism between two blow-ups.
///
/// The order of gates follows the recovery argument: the exact chromatic
/// numbers of the two abstract graphs must agree (this is what rejects
/// blow-ups of different locality sizes), then the vertex map is validated
/// edge by edge, then atom classes are matched through it. Semantics are
/// consulted only to name the points of the matched classes.
pub fn reconstruct(
    gx: &ExplicitGraph,
    gy: &ExplicitGraph,
    psi: &[(usize, usize)],
) -> Result<RingIsoDescription, Error> {
    reconstruction_supported(gx)?;
    reconstruction_supported(gy)?;
    gx.model.require_nonempty_graph()?;
    gy.model.require_nonempty_graph()?;

    let ax = AbstractGraph::from_explicit(gx);
    let ay = AbstractGraph::from_explicit(gy);

    let chi_x = oracle::chromatic_number(ax.adjacency());
    let chi_y = oracle::chromatic_number(ay.adjacency());
    if chi_x != chi_y {
        return Err(Error::ChromaticMismatch { left: chi_x as u64, right: chi_y as u64 });
    }

    let forward = validate_psi(&ax, &ay, psi)?;

    let atoms_x = detect_atom_classes(&ax, regime_of(gx))?;
    let atoms_y = detect_atom_classes(&ay, regime_of(gy))?;
    if atoms_x.len() != atoms_y.len() {
        return Err(Error::AtomClassMismatch(format!(
            "{} atom classes vs {}",
            atoms_x.len(),
            atoms_y.len()
        )));
    }

    let mut pairs = Vec::with_capacity(atoms_x.len());
    for class in &atoms_x {
        let image: BTreeSet<usize> = class.iter().map(|&v| forward[v]).collect();
        let target = atoms_y
            .iter()
            .find(|c| c.iter().copied().collect::<BTreeSet<_>>() == image)
            .ok_or_else(|| {
                Error::AtomClassMismatch(
                    "an atom class maps onto no atom class of the image graph".into(),
                )
            })?;
        let x = atom_point(gx, class)?;
        let y = atom_point(gy, target)?;
        pairs.push((x, y));
    }
    RingIsoDescription::new(pairs)
}

/// Semantic back-map: the single support point shared by an atom class.
fn atom_point(g: &ExplicitGraph, class: &[usize]) -> Result<u64, Error> {
    let support = g.class_support(g.class_of(class[0]));
    if support.cardinality() != Cardinal::Finite(1) {
        return Err(Error::AtomClassMismatch(format!(
            "detected atom class carries support {support} instead of a single point"
        )));
    }
    for &v in class {
        if g.class_of(v) != g.class_of(class[0]) {
            return Err(Error::AtomClassMismatch(
                "detected atom class mixes semantic classes".into(),
            ));
        }
    }
    Ok(support.min_element().expect("singleton support"))
}

/// Outcome of [`verify_ring_iso`]. A failure is a result, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub pass: bool,
    pub checks: usize,
    pub counterexample: Option<String>,
}

fn small_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let numer = loop {
        let n = rng.gen_range(-4i64..=4);
        if n != 0 {
            break n;
        }
    };
    let denom = rng.gen_range(1i64..=4);
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

fn random_fn(rng: &mut ChaCha8Rng, points: &[u64]) -> FinSuppFn {
    FinSuppFn::from_pairs(points.iter().filter_map(|&p| {
        if rng.gen_bool(0.5) {
            Some((p, small_rational(rng)))
        } else {
            None
        }
    }))
}

/// Checks additivity, multiplicativity, injectivity and surjectivity of the
/// recovered action on `sample_budget` random pairs (exact arithmetic
/// throughout), plus a systematic injectivity sweep over the indicator
/// basis. Deterministic for a fixed seed.
pub fn verify_ring_iso(desc: &RingIsoDescription, sample_budget: usize, seed: u64) -> VerifyOutcome {
    let mut checks = 0;
    let fail = |checks: usize, msg: String| VerifyOutcome {
        pass: false,
        checks,
        counterexample: Some(msg),
    };

    let domain = desc.domain();
    // Basis injectivity sweep: distinct points must map to distinct images.
    for (i, &x1) in domain.iter().enumerate() {
        for &x2 in &domain[i + 1..] {
            checks += 1;
            let f = FinSuppFn::indicator(x1);
            let g = FinSuppFn::indicator(x2);
            let (hf, hg) = match (desc.apply(&f), desc.apply(&g)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return fail(checks, "action undefined on a basis element".into()),
            };
            if hf == hg {
                return fail(
                    checks,
                    format!("injectivity fails: {f} and {g} share the image {hf}"),
                );
            }
        }
    }

    let image = desc.image();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..sample_budget {
        let f = random_fn(&mut rng, &domain);
        let g = random_fn(&mut rng, &domain);
        let (hf, hg) = match (desc.apply(&f), desc.apply(&g)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return fail(checks, "action undefined on a sample".into()),
        };

        checks += 1;
        let sum = desc.apply(&f.add(&g)).expect("sum stays inside the domain");
        if sum != hf.add(&hg) {
            return fail(checks, format!("additivity fails at f={f}, g={g}"));
        }

        checks += 1;
        let prod = desc.apply(&f.mul(&g)).expect("product stays inside the domain");
        if prod != hf.mul(&hg) {
            return fail(checks, format!("multiplicativity fails at f={f}, g={g}"));
        }

        checks += 1;
        if f != g && hf == hg {
            return fail(checks, format!("injectivity fails at f={f}, g={g}"));
        }

        // Surjectivity by constructive preimage.
        checks += 1;
        let h = random_fn(&mut rng, &image);
        match desc.apply_inverse(&h).and_then(|pre| desc.apply(&pre)) {
            Ok(round) if round == h => {}
            _ => return fail(checks, format!("no preimage reproduces {h}")),
        }
    }
    VerifyOutcome { pass: true, checks, counterexample: None }
}

/// Builds the vertex bijection induced by a point permutation of the window
/// and a value permutation of the alphabet: the function `f` maps to the
/// function sending `perm(x)` to `value_perm(f(x))`. Harness for
/// automorphism-derived inputs.
pub fn automorphism_psi(
    g: &ExplicitGraph,
    point_perm: &BTreeMap<u64, u64>,
    value_perm: &BTreeMap<BigRational, BigRational>,
) -> Result<Vec<(usize, usize)>, Error> {
    let index: BTreeMap<&FinSuppFn, usize> =
        g.vertices().iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut psi = Vec::with_capacity(g.vertex_count());
    for (i, f) in g.vertices().iter().enumerate() {
        let mut moved = Vec::new();
        for (x, v) in f.iter() {
            let nx = *point_perm.get(&x).ok_or(Error::OutsideLocality { point: x })?;
            let nv = value_perm
                .get(v)
                .cloned()
                .ok_or_else(|| Error::MalformedPsi(format!("value {v} has no image")))?;
            moved.push((nx, nv));
        }
        let image = FinSuppFn::from_pairs(moved);
        let j = *index
            .get(&image)
            .ok_or_else(|| Error::MalformedPsi(format!("image {image} is not a vertex")))?;
        psi.push((i, j));
    }
    Ok(psi)
}

/// One entry of the identity bijection for each vertex.
pub fn identity_psi(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|v| (v, v)).collect()
}
