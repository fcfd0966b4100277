//! Dual graphs of boundary strata: vertices with genus labels, a multiset
//! of edges (self-loops allowed), and numbered legs. Enumeration proceeds
//! by one-edge degenerations from the smooth graph with canonical-form
//! deduplication; isomorphism never moves a leg label.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("(g, n) = ({0}, {1}) is unstable")]
    Unstable(u32, u32),
}

/// Stable graph with `legs[i]` the vertex carrying marking `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StableGraph {
    genus: Vec<u32>,
    /// Sorted list of normalized vertex pairs `(u, v)` with `u <= v`;
    /// parallel edges repeat, self-loops have `u == v`.
    edges: Vec<(usize, usize)>,
    legs: Vec<usize>,
}

impl StableGraph {
    /// Smooth graph: one vertex of genus `g` carrying all `n` legs.
    pub fn smooth(g: u32, n: u32) -> Result<Self, GraphError> {
        if 2 * g as i64 - 2 + n as i64 <= 0 {
            return Err(GraphError::Unstable(g, n));
        }
        Ok(StableGraph {
            genus: vec![g],
            edges: Vec::new(),
            legs: vec![0; n as usize],
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.genus.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_legs(&self) -> usize {
        self.legs.len()
    }

    pub fn vertex_genus(&self, v: usize) -> u32 {
        self.genus[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// First Betti number `E - V + 1` (graphs here are always connected).
    pub fn h1(&self) -> usize {
        self.edges.len() + 1 - self.genus.len()
    }

    /// Total genus `sum g(v) + h^1`.
    pub fn total_genus(&self) -> u32 {
        self.genus.iter().sum::<u32>() + self.h1() as u32
    }

    /// Valence: incident half-edges plus legs.
    pub fn valence(&self, v: usize) -> usize {
        let mut count = self.legs.iter().filter(|&&w| w == v).count();
        for &(a, b) in &self.edges {
            if a == v {
                count += 1;
            }
            if b == v {
                count += 1;
            }
        }
        count
    }

    /// Dimension of the moduli space at the vertex, `3g(v) - 3 + n(v)`.
    pub fn vertex_dim(&self, v: usize) -> i64 {
        3 * self.genus[v] as i64 - 3 + self.valence(v) as i64
    }

    pub fn is_stable(&self) -> bool {
        (0..self.num_vertices())
            .all(|v| 2 * self.genus[v] as i64 - 2 + self.valence(v) as i64 > 0)
    }

    fn is_connected(&self) -> bool {
        let v = self.num_vertices();
        let mut seen = vec![false; v];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                if a == u && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
                if b == u && !seen[a] {
                    seen[a] = true;
                    stack.push(a);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn apply_perm(&self, perm: &[usize]) -> StableGraph {
        let v = self.num_vertices();
        let mut genus = vec![0u32; v];
        for i in 0..v {
            genus[perm[i]] = self.genus[i];
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        edges.sort_unstable();
        let legs = self.legs.iter().map(|&w| perm[w]).collect();
        StableGraph { genus, edges, legs }
    }

    /// Permutation classes that any isomorphism must respect: vertices can
    /// only map to vertices with the same genus, leg-label set, and degree
    /// profile, iteratively refined by neighbor classes.
    fn refinement_classes(&self) -> Vec<usize> {
        let v = self.num_vertices();
        let mut colors: Vec<u64> = (0..v)
            .map(|i| {
                let mut legs: Vec<usize> =
                    self.legs.iter().enumerate().filter(|(_, &w)| w == i).map(|(l, _)| l).collect();
                legs.sort_unstable();
                let mut h = std::collections::hash_map::DefaultHasher::new();
                use std::hash::{Hash, Hasher};
                (self.genus[i], legs, self.valence(i)).hash(&mut h);
                h.finish()
            })
            .collect();
        for _ in 0..v {
            let mut next = Vec::with_capacity(v);
            for i in 0..v {
                let mut neighbors: Vec<u64> = Vec::new();
                for &(a, b) in &self.edges {
                    if a == i {
                        neighbors.push(colors[b]);
                    }
                    if b == i {
                        neighbors.push(colors[a]);
                    }
                }
                neighbors.sort_unstable();
                use std::hash::{Hash, Hasher};
                let mut h = std::collections::hash_map::DefaultHasher::new();
                (colors[i], neighbors).hash(&mut h);
                next.push(h.finish());
            }
            if next == colors {
                break;
            }
            colors = next;
        }
        // Convert hashes to dense class ids by first occurrence.
        let mut ids: Vec<u64> = Vec::new();
        colors
            .iter()
            .map(|c| {
                if let Some(pos) = ids.iter().position(|x| x == c) {
                    pos
                } else {
                    ids.push(*c);
                    ids.len() - 1
                }
            })
            .collect()
    }

    /// All vertex permutations respecting the refinement classes.
    fn class_permutations(&self) -> Vec<Vec<usize>> {
        let classes = self.refinement_classes();
        let v = self.num_vertices();
        let mut perms = Vec::new();
        let mut perm = vec![usize::MAX; v];
        let mut used = vec![false; v];
        fn go(
            i: usize,
            v: usize,
            classes: &[usize],
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            perms: &mut Vec<Vec<usize>>,
        ) {
            if i == v {
                perms.push(perm.clone());
                return;
            }
            for target in 0..v {
                if !used[target] && classes[target] == classes[i] {
                    used[target] = true;
                    perm[i] = target;
                    go(i + 1, v, classes, perm, used, perms);
                    used[target] = false;
                }
            }
            perm[i] = usize::MAX;
        }
        go(0, v, &classes, &mut perm, &mut used, &mut perms);
        perms
    }

    /// Canonically labeled copy: the minimum over class-respecting
    /// relabelings.
    pub fn canonical(&self) -> StableGraph {
        self.class_permutations()
            .iter()
            .map(|p| self.apply_perm(p))
            .min()
            .expect("at least the identity permutation")
    }

    /// Automorphisms of a canonically labeled graph, as vertex permutations.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        self.class_permutations()
            .into_iter()
            .filter(|p| &self.apply_perm(p) == self)
            .collect()
    }

    /// One-edge degenerations, canonically labeled (not deduplicated).
    fn degenerations(&self) -> Vec<StableGraph> {
        let mut out = Vec::new();
        let v_count = self.num_vertices();

        // Genus reduction: g(v) -> g(v) - 1 plus a self-loop at v. The
        // stability of v is unchanged: 2(g-1) - 2 + (n+2) = 2g - 2 + n.
        for v in 0..v_count {
            if self.genus[v] >= 1 {
                let mut g = self.clone();
                g.genus[v] -= 1;
                g.edges.push((v, v));
                g.edges.sort_unstable();
                out.push(g.canonical());
            }
        }

        // Vertex split: v -> (v, w) joined by a new edge, distributing the
        // genus, incident half-edges, and legs over the two sides.
        for v in 0..v_count {
            let w = v_count;
            let leg_ids: Vec<usize> =
                (0..self.legs.len()).filter(|&l| self.legs[l] == v).collect();
            let loop_ids: Vec<usize> = (0..self.edges.len())
                .filter(|&e| self.edges[e] == (v, v))
                .collect();
            let side_ids: Vec<usize> = (0..self.edges.len())
                .filter(|&e| {
                    let (a, b) = self.edges[e];
                    (a == v) ^ (b == v)
                })
                .collect();

            let gv = self.genus[v];
            for g1 in 0..=gv {
                // 3 ways per self-loop (stay, move, spread), 2 per ordinary
                // incident edge, 2 per leg.
                let loops = loop_ids.len() as u32;
                let sides = side_ids.len() as u32;
                let legs = leg_ids.len() as u32;
                let mut loop_choice = vec![0u8; loop_ids.len()];
                let total = 3u64.pow(loops) * 2u64.pow(sides) * 2u64.pow(legs);
                for code in 0..total {
                    let mut c = code;
                    for lc in loop_choice.iter_mut() {
                        *lc = (c % 3) as u8;
                        c /= 3;
                    }
                    let mut side_choice = vec![false; side_ids.len()];
                    for sc in side_choice.iter_mut() {
                        *sc = c % 2 == 1;
                        c /= 2;
                    }
                    let mut leg_choice = vec![false; leg_ids.len()];
                    for lc in leg_choice.iter_mut() {
                        *lc = c % 2 == 1;
                        c /= 2;
                    }

                    let mut g = self.clone();
                    g.genus[v] = g1;
                    g.genus.push(gv - g1);
                    for (idx, &e) in loop_ids.iter().enumerate() {
                        g.edges[e] = match loop_choice[idx] {
                            0 => (v, v),
                            1 => (w, w),
                            _ => (v, w),
                        };
                    }
                    for (idx, &e) in side_ids.iter().enumerate() {
                        if side_choice[idx] {
                            let (a, b) = g.edges[e];
                            let other = if a == v { b } else { a };
                            g.edges[e] = if other <= w { (other, w) } else { (w, other) };
                        }
                    }
                    for (idx, &l) in leg_ids.iter().enumerate() {
                        if leg_choice[idx] {
                            g.legs[l] = w;
                        }
                    }
                    g.edges.push((v, w));
                    g.edges.sort_unstable();
                    if g.is_stable() {
                        debug_assert!(g.is_connected());
                        out.push(g.canonical());
                    }
                }
            }
        }
        out
    }
}

/// All stable graphs of type `(g, n)` up to isomorphism, canonically
/// labeled, ordered by edge count then canonical encoding. Exhaustive
/// enumeration is intended for `g <= 2`, `n <= 8`.
pub fn enumerate_stable_graphs(g: u32, n: u32) -> Result<Vec<StableGraph>, GraphError> {
    let smooth = StableGraph::smooth(g, n)?;
    let max_edges = (3 * g as i64 - 3 + n as i64).max(0) as usize;
    let mut levels: Vec<Vec<StableGraph>> = vec![Vec::new(); max_edges + 1];
    levels[0].push(smooth.canonical());
    let mut seen: std::collections::HashSet<StableGraph> =
        levels[0].iter().cloned().collect();
    for e in 0..max_edges {
        let current = levels[e].clone();
        for graph in current {
            for next in graph.degenerations() {
                debug_assert_eq!(next.num_edges(), e + 1);
                if seen.insert(next.clone()) {
                    levels[e + 1].push(next);
                }
            }
        }
        levels[e + 1].sort();
    }
    Ok(levels.into_iter().flatten().collect())
}
