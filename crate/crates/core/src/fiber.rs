//! Fiber enumeration, realization, and connectivity of fiber graphs.

use std::collections::{HashMap, VecDeque};

use crate::basis::MoveSet;
use crate::error::{check_dim, Error, Result};
use crate::graph::{all_pairs, cdeg, CDegSequence, Coloring, EdgeVector};

/// Resource guards for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Largest total edge count `Σd / 2` accepted for multigraph fibers.
    pub max_edges: usize,
    /// Largest number of elements collected before giving up.
    pub max_elements: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_edges: 24,
            max_elements: 2_000_000,
        }
    }
}

/// All multigraphs (or simple graphs) with a given label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub label: CDegSequence,
    pub z: Coloring,
    pub elements: Vec<EdgeVector>,
    pub simple_only: bool,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, g: &EdgeVector) -> Option<usize> {
        self.elements.iter().position(|e| e == g)
    }

    /// Element to index map.
    pub fn index_map(&self) -> HashMap<&EdgeVector, usize> {
        self.elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect()
    }
}

struct Search<'a> {
    n: usize,
    z: &'a Coloring,
    simple: bool,
    pairs: Vec<(usize, usize)>,
    rd: Vec<i64>,
    rc: Vec<i64>,
    current: EdgeVector,
}

impl Search<'_> {
    fn cap(&self, u: usize, w: usize) -> i64 {
        let c = self.rd[w].min(self.rc[self.z.cell(u, w)]);
        if self.simple {
            c.min(1)
        } else {
            c
        }
    }

    /// Depth-first over pairs in rank order. `visit` returns false to stop.
    fn run(
        &mut self,
        pos: usize,
        visit: &mut dyn FnMut(&EdgeVector) -> Result<bool>,
    ) -> Result<bool> {
        if pos == self.pairs.len() {
            if self.rd.iter().all(|&x| x == 0) && self.rc.iter().all(|&x| x == 0) {
                return visit(&self.current);
            }
            return Ok(true);
        }
        let (u, v) = self.pairs[pos];
        let available: i64 = (v..self.n).map(|w| self.cap(u, w)).sum();
        if self.rd[u] > available {
            return Ok(true);
        }
        let hi = self.cap(u, v).min(self.rd[u]);
        let lo = if v == self.n - 1 { self.rd[u] } else { 0 };
        if lo > hi {
            return Ok(true);
        }
        let cell = self.z.cell(u, v);
        for m in (lo..=hi).rev() {
            self.rd[u] -= m;
            self.rd[v] -= m;
            self.rc[cell] -= m;
            self.current.entries_mut()[pos] = m;
            let keep_going = self.run(pos + 1, visit)?;
            self.rd[u] += m;
            self.rd[v] += m;
            self.rc[cell] += m;
            self.current.entries_mut()[pos] = 0;
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn search(
    label: &CDegSequence,
    z: &Coloring,
    simple_only: bool,
    limits: &EnumerationLimits,
    visit: &mut dyn FnMut(&EdgeVector) -> Result<bool>,
) -> Result<()> {
    label.check_dims(z)?;
    let total: i64 = label.degrees.iter().sum();
    if !simple_only && total > 2 * limits.max_edges as i64 {
        return Err(Error::GuardExceeded(format!(
            "label has {} edges, limit is {}",
            total / 2,
            limits.max_edges
        )));
    }
    if !label.is_consistent(z) {
        return Ok(());
    }
    let n = z.n();
    let mut s = Search {
        n,
        z,
        simple: simple_only,
        pairs: all_pairs(n).collect(),
        rd: label.degrees.clone(),
        rc: label.colors.clone(),
        current: EdgeVector::zeros(n),
    };
    s.run(0, visit)?;
    Ok(())
}

/// Every element of the fiber, in decreasing lexicographic order of entries.
pub fn enumerate_fiber(
    label: &CDegSequence,
    z: &Coloring,
    simple_only: bool,
    limits: &EnumerationLimits,
) -> Result<Fiber> {
    let mut elements = Vec::new();
    let max = limits.max_elements;
    search(label, z, simple_only, limits, &mut |g| {
        if elements.len() >= max {
            return Err(Error::GuardExceeded(format!(
                "fiber has more than {max} elements"
            )));
        }
        elements.push(g.clone());
        Ok(true)
    })?;
    Ok(Fiber {
        label: label.clone(),
        z: z.clone(),
        elements,
        simple_only,
    })
}

/// The first fiber element found by the enumeration order, or `None` when
/// the fiber is empty.
pub fn realize(
    label: &CDegSequence,
    z: &Coloring,
    simple_only: bool,
    limits: &EnumerationLimits,
) -> Result<Option<EdgeVector>> {
    let mut found = None;
    search(label, z, simple_only, limits, &mut |g| {
        found = Some(g.clone());
        Ok(false)
    })?;
    Ok(found)
}

/// One edge of a fiber graph: from `from` to `to` by `sign * moves[index]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub from: usize,
    pub to: usize,
    pub move_index: usize,
    pub sign: i64,
}

/// The graph on fiber elements where two elements are adjacent when their
/// difference is a move, up to sign.
#[derive(Debug, Clone)]
pub struct FiberGraph {
    adjacency: Vec<Vec<Step>>,
    component: Vec<usize>,
    roots: Vec<usize>,
    parent: Vec<Option<Step>>,
    depth: Vec<usize>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Builds the fiber graph. Neighbors are found by hashing `γ ± m` against
/// the element list for every move `m`.
pub fn fiber_graph(fiber: &Fiber, moves: &MoveSet) -> Result<FiberGraph> {
    check_dim(fiber.z.n(), moves.n())?;
    let len = fiber.elements.len();
    let index = fiber.index_map();
    let mut adjacency = vec![Vec::new(); len];
    let mut uf = UnionFind::new(len);
    for (i, g) in fiber.elements.iter().enumerate() {
        for (mi, m) in moves.iter().enumerate() {
            for sign in [1, -1] {
                let mut h = g.clone();
                if !crate::basis::try_apply_in_place(&mut h, m, sign) {
                    continue;
                }
                if let Some(&j) = index.get(&h) {
                    adjacency[i].push(Step {
                        from: i,
                        to: j,
                        move_index: mi,
                        sign,
                    });
                    uf.union(i, j);
                }
            }
        }
    }
    let component_root: Vec<usize> = (0..len).map(|i| uf.find(i)).collect();
    let mut roots: Vec<usize> = component_root.clone();
    roots.sort_unstable();
    roots.dedup();
    let label_of: HashMap<usize, usize> = roots.iter().enumerate().map(|(c, &r)| (r, c)).collect();
    let component = component_root.iter().map(|r| label_of[r]).collect();

    // spanning forest by breadth-first search from each root
    let mut parent = vec![None; len];
    let mut depth = vec![0; len];
    let mut seen = vec![false; len];
    for &r in &roots {
        seen[r] = true;
        let mut queue = VecDeque::from([r]);
        while let Some(x) = queue.pop_front() {
            for step in &adjacency[x] {
                if !seen[step.to] {
                    seen[step.to] = true;
                    parent[step.to] = Some(Step {
                        from: step.to,
                        to: x,
                        move_index: step.move_index,
                        sign: -step.sign,
                    });
                    depth[step.to] = depth[x] + 1;
                    queue.push_back(step.to);
                }
            }
        }
    }
    Ok(FiberGraph {
        adjacency,
        component,
        roots,
        parent,
        depth,
    })
}

impl FiberGraph {
    pub fn num_components(&self) -> usize {
        self.roots.len()
    }

    pub fn is_connected(&self) -> bool {
        self.roots.len() <= 1
    }

    pub fn component_of(&self, i: usize) -> usize {
        self.component[i]
    }

    /// One element per component, the smallest index in each.
    pub fn representatives(&self) -> &[usize] {
        &self.roots
    }

    pub fn neighbors(&self, i: usize) -> &[Step] {
        &self.adjacency[i]
    }

    /// Number of undirected edges.
    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Tree edges of the breadth-first spanning forest, child to parent.
    pub fn forest(&self) -> impl Iterator<Item = &Step> {
        self.parent.iter().flatten()
    }

    /// Moves leading from `from` to `to` along the spanning forest, or
    /// `None` if they lie in different components.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<Step>> {
        if self.component[from] != self.component[to] {
            return None;
        }
        let mut up = Vec::new();
        let mut down = Vec::new();
        let (mut a, mut b) = (from, to);
        while a != b {
            if self.depth[a] >= self.depth[b] {
                let s = self.parent[a].expect("non-root has parent");
                up.push(s);
                a = s.to;
            } else {
                let s = self.parent[b].expect("non-root has parent");
                down.push(Step {
                    from: s.to,
                    to: s.from,
                    move_index: s.move_index,
                    sign: -s.sign,
                });
                b = s.to;
            }
        }
        up.extend(down.into_iter().rev());
        Some(up)
    }

    /// A shortest move sequence from `from` to `to`, by breadth-first search.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<Step>> {
        if self.component[from] != self.component[to] {
            return None;
        }
        let mut prev: Vec<Option<Step>> = vec![None; self.adjacency.len()];
        let mut seen = vec![false; self.adjacency.len()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for s in &self.adjacency[x] {
                if !seen[s.to] {
                    seen[s.to] = true;
                    prev[s.to] = Some(*s);
                    queue.push_back(s.to);
                }
            }
        }
        let mut steps = Vec::new();
        let mut at = to;
        while let Some(s) = prev[at] {
            steps.push(s);
            at = s.from;
        }
        steps.reverse();
        Some(steps)
    }
}

/// Applies a recorded step sequence to `start`, checking that every state
/// stays a multigraph. Returns all visited states, `start` included.
pub fn replay(start: &EdgeVector, steps: &[Step], moves: &MoveSet) -> Result<Vec<EdgeVector>> {
    let mut states = vec![start.clone()];
    let mut g = start.clone();
    for s in steps {
        let m = moves
            .moves()
            .get(s.move_index)
            .ok_or_else(|| Error::InvalidConfig(format!("no move {}", s.move_index)))?;
        if !crate::basis::try_apply_in_place(&mut g, m, s.sign) {
            return Err(Error::NegativeEntry {
                u: s.from,
                v: s.to,
                value: -1,
            });
        }
        states.push(g.clone());
    }
    Ok(states)
}

/// The largest 1-norm a move set must contain to connect the fiber when any
/// pairwise difference may serve as a move: the bottleneck of a minimum
/// spanning tree over pairwise 1-norm distances.
pub fn simple_basis_norm_requirement(fiber: &Fiber) -> Result<i64> {
    let els = &fiber.elements;
    match els.len() {
        0 => return Err(Error::EmptyFiber),
        1 => return Ok(0),
        2 => return Ok((&els[0] - &els[1]).norm1()),
        _ => {}
    }
    // Prim's algorithm; the heaviest tree edge is the bottleneck.
    let len = els.len();
    let mut in_tree = vec![false; len];
    let mut best = vec![i64::MAX; len];
    best[0] = 0;
    let mut bottleneck = 0;
    for _ in 0..len {
        let next = (0..len)
            .filter(|&i| !in_tree[i])
            .min_by_key(|&i| best[i])
            .expect("vertices remain");
        in_tree[next] = true;
        bottleneck = bottleneck.max(best[next]);
        for i in 0..len {
            if !in_tree[i] {
                let d = (&els[next] - &els[i]).norm1();
                best[i] = best[i].min(d);
            }
        }
    }
    Ok(bottleneck)
}

/// A label whose simple fiber has exactly two elements, together with them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoElementInstance {
    pub z: Coloring,
    pub label: CDegSequence,
    pub first: EdgeVector,
    pub second: EdgeVector,
}

impl TwoElementInstance {
    pub fn distance(&self) -> i64 {
        (&self.first - &self.second).norm1()
    }
}

/// The family on `n = 2k` vertices: inner vertices `0..k` and outer vertices
/// `k..2k`, vertex `u` colored `u mod k`. The two simple realizations join
/// each inner `u` to both vertices of color `u - 1` (first) or `u + 1`
/// (second); both contain the inner `k`-cycle.
pub fn prop31_instance(k: usize) -> Result<TwoElementInstance> {
    if k < 3 {
        return Err(Error::InvalidConfig(format!(
            "k must be at least 3, got {k}"
        )));
    }
    let n = 2 * k;
    let z = Coloring::new(k, (0..n).map(|u| u % k).collect())?;
    let build = |offset: usize| {
        let mut g = EdgeVector::zeros(n);
        for u in 0..k {
            let v = (u + offset) % k;
            g.set(u, v, 1);
            g.set(u, v + k, 1);
        }
        g
    };
    let first = build(k - 1);
    let second = build(1);
    let label = cdeg(&first, &z)?;
    debug_assert_eq!(label, cdeg(&second, &z)?);
    Ok(TwoElementInstance {
        z,
        label,
        first,
        second,
    })
}

/// An eight-vertex, two-color label whose simple fiber consists of two
/// graphs at 1-norm distance 8.
pub fn eight_vertex_instance() -> TwoElementInstance {
    let z = Coloring::new(2, vec![0, 0, 1, 1, 0, 0, 1, 1]).expect("valid");
    let common = [
        (2, 4),
        (2, 5),
        (2, 6),
        (2, 7),
        (2, 8),
        (4, 5),
        (4, 6),
        (4, 7),
        (4, 8),
        (5, 7),
    ];
    let graph = |extra: [(usize, usize); 4]| {
        EdgeVector::from_edges(
            8,
            common.iter().chain(&extra).map(|&(u, v)| (u - 1, v - 1, 1)),
        )
        .expect("valid")
    };
    let first = graph([(1, 4), (2, 3), (5, 6), (7, 8)]);
    let second = graph([(1, 2), (3, 4), (5, 8), (6, 7)]);
    let label = cdeg(&first, &z).expect("multigraph");
    TwoElementInstance {
        z,
        label,
        first,
        second,
    }
}
