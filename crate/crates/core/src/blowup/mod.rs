//! Materialised finite induced subgraphs of the zero-divisor graph.
//!
//! A blow-up takes every vertex class whose support fits inside a finite
//! window and expands it into explicit functions with values drawn from a
//! finite alphabet. The resulting [`ExplicitGraph`] is the ground truth the
//! oracle measures and the closed forms are checked against.

pub mod crosscheck;
pub mod oracle;

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::ring::FinSuppFn;
use crate::setalg::PeriodicSet;
use crate::topology::SpaceModel;
use crate::zdgraph::{vertex_check, GraphFlavor, VertexClass};
use crate::Error;

/// Default bound on blow-up size.
pub const DEFAULT_CAP: u64 = 200;

/// Request for a blow-up: which classes to materialise and with which
/// values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub model: SpaceModel,
    pub flavor: GraphFlavor,
    /// Finite window; every class with support inside it is materialised.
    pub window: PeriodicSet,
    /// Distinct nonzero values assigned over each support. Two values are
    /// needed for the blow-up to contain the doubled squares the cycle
    /// theory relies on.
    pub alphabet: Vec<BigRational>,
    pub cap: u64,
}

impl BlowupSpec {
    pub fn new(
        model: SpaceModel,
        flavor: GraphFlavor,
        window: PeriodicSet,
        alphabet: Vec<BigRational>,
    ) -> Result<Self, Error> {
        if !window.is_finite() {
            return Err(Error::MalformedBlowup("window must be finite".into()));
        }
        if !window.is_subset_of(&model.locality_region()) {
            return Err(Error::MalformedBlowup(
                "window must lie inside the locality region".into(),
            ));
        }
        if alphabet.is_empty() {
            return Err(Error::MalformedBlowup("alphabet must be nonempty".into()));
        }
        if alphabet.iter().any(|v| v.is_zero()) {
            return Err(Error::MalformedBlowup("alphabet values must be nonzero".into()));
        }
        let mut sorted = alphabet.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != alphabet.len() {
            return Err(Error::MalformedBlowup("alphabet values must be distinct".into()));
        }
        Ok(BlowupSpec { model, flavor, window, alphabet, cap: DEFAULT_CAP })
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    /// Short label for reports.
    pub fn label(&self) -> String {
        format!(
            "{} flavor={} window={} |alphabet|={}",
            self.model,
            self.flavor,
            self.window,
            self.alphabet.len()
        )
    }
}

/// A materialised finite induced subgraph: explicit functions, their
/// classes, and the zero-product adjacency.
#[derive(Clone, Debug)]
pub struct ExplicitGraph {
    pub model: SpaceModel,
    pub flavor: GraphFlavor,
    pub window: PeriodicSet,
    vertices: Vec<FinSuppFn>,
    class_of: Vec<usize>,
    class_supports: Vec<PeriodicSet>,
    adj: Vec<Vec<usize>>,
}

/// Builds the blow-up: every function whose support is a vertex class inside
/// the window and whose values come from the alphabet.
///
/// Vertex order is deterministic: supports are enumerated as bitmask
/// counters over the ascending window points, and within a class the value
/// assignments count lexicographically along the support with the last point
/// varying fastest.
pub fn generate(spec: &BlowupSpec) -> Result<ExplicitGraph, Error> {
    let points = spec.window.members().expect("window is finite");
    let w = points.len();
    if w > 20 {
        return Err(Error::MalformedBlowup(format!("window of {w} points is too wide")));
    }
    let a = spec.alphabet.len() as u64;

    let mut class_supports = Vec::new();
    let mut class_masks: Vec<u32> = Vec::new();
    let mut required: u64 = 0;
    for mask in 1u32..(1 << w) {
        let support = PeriodicSet::from_points(
            points
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p),
        );
        if vertex_check(&spec.model, spec.flavor, &support).is_vertex() {
            required = required.saturating_add(a.saturating_pow(mask.count_ones()));
            class_supports.push(support);
            class_masks.push(mask);
        }
    }
    if required > spec.cap {
        return Err(Error::CapExceeded { required, cap: spec.cap });
    }

    let mut vertices = Vec::with_capacity(required as usize);
    let mut class_of = Vec::with_capacity(required as usize);
    for (class, mask) in class_masks.iter().enumerate() {
        let support_points: Vec<u64> = points
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        let k = support_points.len();
        let count = (spec.alphabet.len() as u64).pow(k as u32);
        for idx in 0..count {
            // Digits of idx in base |alphabet|, most significant digit on
            // the first support point.
            let mut digits = vec![0usize; k];
            let mut rest = idx;
            for d in (0..k).rev() {
                digits[d] = (rest % spec.alphabet.len() as u64) as usize;
                rest /= spec.alphabet.len() as u64;
            }
            let f = FinSuppFn::from_pairs(
                support_points
                    .iter()
                    .zip(&digits)
                    .map(|(&p, &d)| (p, spec.alphabet[d].clone())),
            );
            vertices.push(f);
            class_of.push(class);
        }
    }

    // Adjacency: zero product, i.e. disjoint supports, i.e. disjoint masks.
    let n = vertices.len();
    let mut adj = vec![Vec::new(); n];
    for u in 0..n {
        for v in (u + 1)..n {
            if class_masks[class_of[u]] & class_masks[class_of[v]] == 0 {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }

    Ok(ExplicitGraph {
        model: spec.model.clone(),
        flavor: spec.flavor,
        window: spec.window.clone(),
        vertices,
        class_of,
        class_supports,
        adj,
    })
}

impl ExplicitGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[FinSuppFn] {
        &self.vertices
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn class_count(&self) -> usize {
        self.class_supports.len()
    }

    pub fn class_of(&self, vertex: usize) -> usize {
        self.class_of[vertex]
    }

    pub fn class_support(&self, class: usize) -> &PeriodicSet {
        &self.class_supports[class]
    }

    /// The semantic class of a vertex.
    pub fn vertex_class(&self, vertex: usize) -> VertexClass {
        VertexClass::new(
            self.model.clone(),
            self.flavor,
            self.class_supports[self.class_of[vertex]].clone(),
        )
        .expect("blow-up classes pass the vertex check")
    }

    /// Vertex indices of one class, ascending.
    pub fn class_members(&self, class: usize) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.class_of[v] == class)
            .collect()
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, row) in self.adj.iter().enumerate() {
            for &v in row {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Removes the lexicographically first edge; used by fault injection to
    /// prove the harness notices a corrupted adjacency rule.
    pub fn corrupt_first_edge(&mut self) -> Option<(usize, usize)> {
        let (u, v) = self.edges().into_iter().next()?;
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        Some((u, v))
    }

    /// DOT rendering with function literals as labels and the class index as
    /// a vertex attribute.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph blowup {\n");
        for (i, f) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{f}\", class={}];", self.class_of[i]);
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        out.push_str("}\n");
        out
    }

    /// Serialisable adjacency document.
    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            model: self.model.to_string(),
            flavor: self.flavor.to_string(),
            window: self.window.to_string(),
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, f)| VertexRecord {
                    id,
                    label: f.to_string(),
                    class: self.class_of[id],
                })
                .collect(),
            edges: self.edges(),
        }
    }
}

/// JSON-facing adjacency document for exports and round trips.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub model: String,
    pub flavor: String,
    pub window: String,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    pub label: String,
    pub class: usize,
}

impl GraphDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text)
            .map_err(|e| Error::MalformedBlowup(format!("bad graph document: {e}")))
    }

    /// Adjacency lists reconstructed from the edge list.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }
}
