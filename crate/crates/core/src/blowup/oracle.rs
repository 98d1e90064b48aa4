//! Brute-force graph algorithms on explicit adjacency lists: the independent
//! oracle every closed-form prediction is checked against.
//!
//! Everything here is exact. Clique, chromatic and dominating numbers use
//! branch and bound after collapsing "false twins" (non-adjacent vertices
//! with identical neighborhoods); blow-up graphs consist of such twins, one
//! class per support, so the quotients stay tiny. The collapse is purely
//! structural and never consults blow-up semantics.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Exact metrics of a finite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleMetrics {
    /// All-pairs distances; `None` marks unreachable pairs.
    pub distances: Vec<Vec<Option<u32>>>,
    /// Per-vertex eccentricity; `None` when some vertex is unreachable.
    pub eccentricities: Vec<Option<u32>>,
    pub diameter: Option<u32>,
    pub radius: Option<u32>,
    pub girth: Option<u32>,
    pub clique: u32,
    pub chromatic: u32,
    pub dominating: u32,
    /// Distinct lengths of chordless cycles found up to `scan_cap`.
    pub chordless_cycle_lengths: Vec<u32>,
    pub scan_cap: u32,
    /// False when the time budget ran out before the heavy phases finished.
    pub complete: bool,
}

/// Default bound on the chordless-cycle scan length.
pub const DEFAULT_SCAN_CAP: u32 = 10;

/// Computes the full metrics record. `budget_ms` bounds the heavy phases;
/// when exceeded, the record is returned with `complete = false` and the
/// remaining fields at their best-effort values.
pub fn metrics(adj: &[Vec<usize>], budget_ms: u64) -> OracleMetrics {
    let start = Instant::now();
    let n = adj.len();
    let distances: Vec<Vec<Option<u32>>> = (0..n).map(|v| bfs(adj, v)).collect();
    let eccentricities: Vec<Option<u32>> = distances
        .iter()
        .map(|row| {
            row.iter()
                .copied()
                .collect::<Option<Vec<u32>>>()
                .map(|ds| ds.into_iter().max().unwrap_or(0))
        })
        .collect();
    let connected = n > 0 && eccentricities.iter().all(|e| e.is_some());
    let diameter = connected
        .then(|| eccentricities.iter().map(|e| e.unwrap()).max().unwrap());
    let radius = connected
        .then(|| eccentricities.iter().map(|e| e.unwrap()).min().unwrap());

    let mut out = OracleMetrics {
        distances,
        eccentricities,
        diameter,
        radius,
        girth: None,
        clique: 0,
        chromatic: 0,
        dominating: 0,
        chordless_cycle_lengths: Vec::new(),
        scan_cap: DEFAULT_SCAN_CAP,
        complete: true,
    };

    let over_budget = |start: &Instant| start.elapsed().as_millis() as u64 > budget_ms;

    out.girth = girth(adj);
    if over_budget(&start) {
        out.complete = false;
        return out;
    }
    out.clique = max_clique(adj);
    out.chromatic = chromatic_number(adj);
    if over_budget(&start) {
        out.complete = false;
        return out;
    }
    out.dominating = dominating_number(adj);
    if over_budget(&start) {
        out.complete = false;
        return out;
    }
    out.chordless_cycle_lengths = chordless_cycle_lengths(adj, DEFAULT_SCAN_CAP);
    out
}

/// Breadth-first distances from `src`.
pub fn bfs(adj: &[Vec<usize>], src: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    dist[src] = Some(0);
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn is_edge(adj: &[Vec<usize>], u: usize, v: usize) -> bool {
    adj[u].binary_search(&v).is_ok()
}

/// BFS distance from `src` to `dst` with one edge removed.
fn bfs_without_edge(adj: &[Vec<usize>], src: usize, dst: usize, skip: (usize, usize)) -> Option<u32> {
    let mut dist = vec![None; adj.len()];
    dist[src] = Some(0);
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in &adj[v] {
            if (v, w) == skip || (w, v) == skip {
                continue;
            }
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                if w == dst {
                    return dist[w];
                }
                queue.push_back(w);
            }
        }
    }
    dist[dst]
}

/// Exact girth: for every edge, the shortest alternative path between its
/// endpoints closes the shortest cycle through that edge.
pub fn girth(adj: &[Vec<usize>]) -> Option<u32> {
    let mut best: Option<u32> = None;
    for u in 0..adj.len() {
        for &v in &adj[u] {
            if v <= u {
                continue;
            }
            if let Some(d) = bfs_without_edge(adj, u, v, (u, v)) {
                let cycle = d + 1;
                best = Some(best.map_or(cycle, |b| b.min(cycle)));
            }
        }
    }
    best
}

/// True when `v` lies on a triangle.
pub fn on_triangle(adj: &[Vec<usize>], v: usize) -> bool {
    let nv = &adj[v];
    for (i, &a) in nv.iter().enumerate() {
        for &b in &nv[i + 1..] {
            if is_edge(adj, a, b) {
                return true;
            }
        }
    }
    false
}

/// True when the edge `(u, v)` lies on a triangle, i.e. the endpoints share
/// a neighbor.
pub fn edge_on_triangle(adj: &[Vec<usize>], u: usize, v: usize) -> bool {
    has_common_neighbor(adj, u, v)
}

pub fn has_common_neighbor(adj: &[Vec<usize>], u: usize, v: usize) -> bool {
    adj[u].iter().any(|&w| w != v && is_edge(adj, v, w))
}

/// Partition of the vertices into false-twin classes: vertices with equal
/// neighbor sets. Such vertices are never adjacent (a loop would be needed),
/// so they are interchangeable in cliques, colorings and dominating sets.
pub fn twin_classes(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for (v, nv) in adj.iter().enumerate() {
        groups.entry(nv.as_slice()).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Quotient adjacency over twin classes, with class sizes.
fn twin_quotient(adj: &[Vec<usize>]) -> (Vec<Vec<bool>>, Vec<usize>) {
    let classes = twin_classes(adj);
    let k = classes.len();
    let mut matrix = vec![vec![false; k]; k];
    for i in 0..k {
        for j in (i + 1)..k {
            if is_edge(adj, classes[i][0], classes[j][0]) {
                matrix[i][j] = true;
                matrix[j][i] = true;
            }
        }
    }
    (matrix, classes.iter().map(|c| c.len()).collect())
}

/// Exact maximum clique size. A clique takes at most one vertex per twin
/// class, so the search runs on the quotient.
pub fn max_clique(adj: &[Vec<usize>]) -> u32 {
    if adj.is_empty() {
        return 0;
    }
    let (q, _) = twin_quotient(adj);

    fn extend(q: &[Vec<bool>], candidates: &[usize], depth: u32, best: &mut u32) {
        if depth + candidates.len() as u32 <= *best {
            return;
        }
        if candidates.is_empty() {
            *best = (*best).max(depth);
            return;
        }
        for (i, &c) in candidates.iter().enumerate() {
            if depth + (candidates.len() - i) as u32 <= *best {
                break;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&d| q[c][d])
                .collect();
            extend(q, &next, depth + 1, best);
        }
    }

    let mut best = 0u32;
    let all: Vec<usize> = (0..q.len()).collect();
    extend(&q, &all, 0, &mut best);
    best
}

/// Exact chromatic number: twins can share a color, so color the quotient,
/// starting from the clique lower bound and growing until a proper coloring
/// exists.
pub fn chromatic_number(adj: &[Vec<usize>]) -> u32 {
    if adj.is_empty() {
        return 0;
    }
    let (q, _) = twin_quotient(adj);
    let k = q.len();
    if k == 1 {
        return 1;
    }
    let mut colors = max_clique(adj).max(1);
    loop {
        if can_color(&q, k, colors) {
            return colors;
        }
        colors += 1;
    }
}

fn can_color(q: &[Vec<bool>], n: usize, colors: u32) -> bool {
    fn next_vertex(assignment: &[Option<u32>], q: &[Vec<bool>]) -> Option<usize> {
        // Most saturated vertex first.
        let mut best: Option<(usize, usize)> = None;
        for (v, c) in assignment.iter().enumerate() {
            if c.is_some() {
                continue;
            }
            let saturation = q[v]
                .iter()
                .enumerate()
                .filter_map(|(w, adj)| if *adj { assignment[w] } else { None })
                .collect::<std::collections::BTreeSet<_>>()
                .len();
            if best.is_none_or(|(_, s)| saturation > s) {
                best = Some((v, saturation));
            }
        }
        best.map(|(v, _)| v)
    }
    fn go(q: &[Vec<bool>], assignment: &mut [Option<u32>], colors: u32, used_max: u32) -> bool {
        let v = match next_vertex(assignment, q) {
            None => return true,
            Some(v) => v,
        };
        // Unused colors are symmetric: trying one fresh color suffices.
        let cap = (used_max + 1).min(colors - 1);
        for c in 0..=cap {
            let conflict = q[v]
                .iter()
                .enumerate()
                .any(|(w, adj)| *adj && assignment[w] == Some(c));
            if conflict {
                continue;
            }
            assignment[v] = Some(c);
            if go(q, assignment, colors, used_max.max(c)) {
                return true;
            }
            assignment[v] = None;
        }
        false
    }
    let mut assignment = vec![None; n];
    go(q, &mut assignment, colors, 0)
}

/// Exact dominating number via twin classes. Within a class only the counts
/// 0, 1 and "all" matter: chosen vertices never dominate their own
/// class-mates, so members left outside need an adjacent class with a chosen
/// vertex, a condition independent of the count.
pub fn dominating_number(adj: &[Vec<usize>]) -> u32 {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let (q, sizes) = twin_quotient(adj);

    fn feasible(q: &[Vec<bool>], sizes: &[usize], counts: &[u32]) -> bool {
        (0..q.len()).all(|c| {
            counts[c] == sizes[c] as u32 || (0..q.len()).any(|d| q[c][d] && counts[d] >= 1)
        })
    }
    fn go(
        q: &[Vec<bool>],
        sizes: &[usize],
        counts: &mut Vec<u32>,
        idx: usize,
        total: u32,
        best: &mut u32,
    ) {
        if total >= *best {
            return;
        }
        if idx == q.len() {
            if feasible(q, sizes, counts) {
                *best = total;
            }
            return;
        }
        let mut options = vec![0u32, 1];
        if sizes[idx] > 1 {
            options.push(sizes[idx] as u32);
        }
        for opt in options {
            counts[idx] = opt;
            go(q, sizes, counts, idx + 1, total + opt, best);
        }
        counts[idx] = 0;
    }

    let mut best = n as u32; // taking every vertex always dominates
    let mut counts = vec![0u32; q.len()];
    go(&q, &sizes, &mut counts, 0, 0, &mut best);
    best
}

/// Distinct lengths of chordless cycles up to `max_len`, ascending.
///
/// Cycles are enumerated canonically: the smallest vertex roots the cycle
/// and the two root neighbors are ordered, so each cycle is visited once.
/// Every extension must be adjacent to the path head and non-adjacent to all
/// interior vertices; a vertex adjacent to the root closes a cycle and is
/// never extended past (the root edge would become a chord).
pub fn chordless_cycle_lengths(adj: &[Vec<usize>], max_len: u32) -> Vec<u32> {
    fn extend(
        adj: &[Vec<usize>],
        root: usize,
        path: &mut Vec<usize>,
        in_path: &mut [bool],
        lengths: &mut std::collections::BTreeSet<u32>,
        max_len: u32,
    ) {
        let head = *path.last().unwrap();
        for &w in &adj[head] {
            if w <= root || in_path[w] {
                continue;
            }
            if path.len() >= 2 {
                // Chordless: the candidate may touch only the head among the
                // current path vertices, except the root, which closes.
                if path[1..path.len() - 1].iter().any(|&p| is_edge(adj, w, p)) {
                    continue;
                }
                if is_edge(adj, w, root) {
                    if path[1] < w {
                        lengths.insert(path.len() as u32 + 1);
                    }
                    // Extending past a root neighbor would leave the closing
                    // edge as a chord of any longer cycle.
                    continue;
                }
            }
            if (path.len() as u32) + 1 >= max_len {
                continue;
            }
            path.push(w);
            in_path[w] = true;
            extend(adj, root, path, in_path, lengths, max_len);
            in_path[w] = false;
            path.pop();
        }
    }

    let n = adj.len();
    let mut lengths = std::collections::BTreeSet::new();
    let mut in_path = vec![false; n];
    for root in 0..n {
        let mut path = vec![root];
        in_path.fill(false);
        in_path[root] = true;
        extend(adj, root, &mut path, &mut in_path, &mut lengths, max_len);
    }
    lengths.into_iter().collect()
}

/// True when `v` lies on a 5-cycle whose two non-consecutive vertices are
/// genuinely non-adjacent to `v` (chords elsewhere are allowed).
///
/// This is the detectable difference between one-point and multi-point
/// supports: around a one-point support, any two vertices non-adjacent to it
/// share that support point and so cannot be adjacent to each other, while a
/// two-point support rides such a cycle through its two support singletons
/// and a spare point. A plain 5-cycle does not separate the two cases: even
/// a one-point support sits on 5-cycles that shortcut through a chord at it.
pub fn on_five_cycle_without_center_chords(adj: &[Vec<usize>], v: usize) -> bool {
    // v - a - x - y - b - v, all five distinct, with x and y off N(v).
    for &a in &adj[v] {
        for &b in &adj[v] {
            if a == b {
                continue;
            }
            for &x in &adj[a] {
                if x == v || x == b || is_edge(adj, v, x) {
                    continue;
                }
                for &y in &adj[x] {
                    if y == v || y == a || y == b || is_edge(adj, v, y) {
                        continue;
                    }
                    if is_edge(adj, y, b) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Length of the shortest cycle through both `u` and `v`, or `None` when no
/// cycle contains both. Computed exactly as a minimum-cost two-unit flow
/// between the vertices with unit vertex capacities: a cycle through both is
/// exactly a pair of internally vertex-disjoint paths.
#[allow(clippy::needless_range_loop)]
pub fn shortest_cycle_through_pair(adj: &[Vec<usize>], u: usize, v: usize) -> Option<u32> {
    if u == v {
        return None;
    }
    let n = adj.len();

    // Node splitting: vertex w becomes w_in = 2w and w_out = 2w+1.
    // Intermediate vertices get an in->out arc of capacity 1; the endpoints
    // get none (u_out is the source, v_in the sink, so neither can be
    // re-entered).
    struct Arc {
        to: usize,
        cap: i32,
        cost: i32,
        rev: usize,
    }
    let node_count = 2 * n;
    let mut graph: Vec<Vec<Arc>> = (0..node_count).map(|_| Vec::new()).collect();
    let add_arc = |graph: &mut Vec<Vec<Arc>>, from: usize, to: usize, cap: i32, cost: i32| {
        let rev_from = graph[to].len();
        let rev_to = graph[from].len();
        graph[from].push(Arc { to, cap, cost, rev: rev_from });
        graph[to].push(Arc { to: from, cap: 0, cost: -cost, rev: rev_to });
    };
    for w in 0..n {
        if w != u && w != v {
            add_arc(&mut graph, 2 * w, 2 * w + 1, 1, 0);
        }
    }
    for a in 0..n {
        for &b in &adj[a] {
            if b > a {
                add_arc(&mut graph, 2 * a + 1, 2 * b, 1, 1);
                add_arc(&mut graph, 2 * b + 1, 2 * a, 1, 1);
            }
        }
    }
    let source = 2 * u + 1;
    let sink = 2 * v;

    // Two rounds of shortest augmenting paths. Bellman-Ford tolerates the
    // negative residual costs; these graphs are tiny.
    let mut total_cost = 0i32;
    for _ in 0..2 {
        let mut dist = vec![i32::MAX; node_count];
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; node_count];
        dist[source] = 0;
        for _ in 0..node_count {
            let mut changed = false;
            for from in 0..node_count {
                if dist[from] == i32::MAX {
                    continue;
                }
                for (i, arc) in graph[from].iter().enumerate() {
                    if arc.cap > 0 && dist[from] + arc.cost < dist[arc.to] {
                        dist[arc.to] = dist[from] + arc.cost;
                        prev[arc.to] = Some((from, i));
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if dist[sink] == i32::MAX {
            return None;
        }
        total_cost += dist[sink];
        let mut node = sink;
        while node != source {
            let (from, i) = prev[node].unwrap();
            graph[from][i].cap -= 1;
            let rev = graph[from][i].rev;
            graph[node][rev].cap += 1;
            node = from;
        }
    }
    Some(total_cost as u32)
}
