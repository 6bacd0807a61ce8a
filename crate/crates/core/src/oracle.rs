//! Brute-force ground truth for small instances.
//!
//! [`optimal_wiring`] finds a minimum-volume 1-wiring of a tiny tree by
//! branch and bound over vertex positions and edge routes in a box around the
//! origin. [`exhaustive_vr`] wires every legal subdivision plan of a reduction
//! and keeps the best.

use std::collections::{HashMap, HashSet};

use crate::analysis::{wired_ratio, RatioEstimate};
use crate::error::{Error, Result};
use crate::tree::{NodeId, OrderedTree, Reduction, SubdivisionPlan};
use crate::wiring::{EdgePath, GridPoint, GridWiring};

/// Limits for [`optimal_wiring`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Half-width of the search box; `None` means the tree's vertex count.
    pub box_half_width: Option<i64>,
    /// Maximum number of search nodes.
    pub budget: u64,
    pub max_vertices: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            box_half_width: None,
            budget: 20_000_000,
            max_vertices: 7,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub best_volume: u64,
    pub witness: GridWiring,
    pub explored: u64,
    pub box_half_width: i64,
}

impl OracleResult {
    /// The `oracle` block attached to serialized witnesses.
    pub fn metadata(&self, budget: u64) -> serde_json::Value {
        serde_json::json!({
            "best_volume": self.best_volume,
            "explored": self.explored,
            "box": [[-self.box_half_width, -self.box_half_width],
                    [self.box_half_width, self.box_half_width]],
            "budget": budget,
        })
    }
}

const STEPS: [GridPoint; 4] = [
    GridPoint { x: 0, y: 1 },
    GridPoint { x: 1, y: 0 },
    GridPoint { x: 0, y: -1 },
    GridPoint { x: -1, y: 0 },
];

type Segment = (GridPoint, GridPoint);

fn segment(a: GridPoint, b: GridPoint) -> Segment {
    if (a.x, a.y) <= (b.x, b.y) {
        (a, b)
    } else {
        (b, a)
    }
}

struct Search<'a> {
    edges: Vec<(NodeId, NodeId)>,
    n: u64,
    half: i64,
    budget: u64,
    explored: u64,
    pos: Vec<Option<GridPoint>>,
    occupied: HashSet<GridPoint>,
    used: HashSet<Segment>,
    cover: HashMap<GridPoint, u32>,
    routes: Vec<Vec<GridPoint>>,
    best: u64,
    best_routes: Option<Snapshot>,
    tree: &'a OrderedTree,
}

/// Vertex positions and edge routes of the incumbent.
type Snapshot = (Vec<Option<GridPoint>>, Vec<Vec<GridPoint>>);

impl Search<'_> {
    fn bound(&self) -> u64 {
        (self.cover.len() as u64).max(self.n)
    }

    fn inside(&self, p: GridPoint) -> bool {
        p.x.abs() <= self.half && p.y.abs() <= self.half
    }

    fn touch(&mut self, p: GridPoint) {
        *self.cover.entry(p).or_insert(0) += 1;
    }

    fn untouch(&mut self, p: GridPoint) {
        let slot = self.cover.get_mut(&p).expect("covered point");
        *slot -= 1;
        if *slot == 0 {
            self.cover.remove(&p);
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(Error::Budget {
                budget: self.budget,
                hint: "raise the budget or shrink the tree",
            });
        }
        Ok(())
    }

    /// Places the remaining edges, starting with edge `e`.
    fn place(&mut self, e: usize) -> Result<()> {
        self.tick()?;
        if self.bound() >= self.best {
            return Ok(());
        }
        if e == self.edges.len() {
            self.best = self.cover.len() as u64;
            self.best_routes = Some((self.pos.clone(), self.routes.clone()));
            return Ok(());
        }
        let start = self.pos[self.edges[e].0 .0].expect("parent placed first");
        let longest = ((2 * self.half + 1) * (2 * self.half + 1)) as usize;
        for len in 1..longest {
            let mut path = vec![start];
            self.route(e, len, &mut path)?;
            if self.bound() >= self.best {
                break;
            }
        }
        Ok(())
    }

    /// Extends `path` by `left` more unit steps, then places the child.
    fn route(&mut self, e: usize, left: usize, path: &mut Vec<GridPoint>) -> Result<()> {
        let here = *path.last().expect("non-empty");
        if left == 0 {
            if self.occupied.contains(&here) {
                return Ok(());
            }
            let child = self.edges[e].1;
            self.pos[child.0] = Some(here);
            self.occupied.insert(here);
            self.routes[e] = path.clone();
            let outcome = self.place(e + 1);
            self.routes[e].clear();
            self.occupied.remove(&here);
            self.pos[child.0] = None;
            return outcome;
        }
        self.tick()?;
        // The whole search is invariant under quarter turns about the root, so
        // the first step of the first edge may point up.
        let steps = if e == 0 && path.len() == 1 {
            &STEPS[..1]
        } else {
            &STEPS[..]
        };
        for &d in steps {
            let next = here + d;
            let seg = segment(here, next);
            if !self.inside(next) || self.used.contains(&seg) || path.contains(&next) {
                continue;
            }
            self.used.insert(seg);
            self.touch(next);
            path.push(next);
            let outcome = if self.bound() < self.best {
                self.route(e, left - 1, path)
            } else {
                Ok(())
            };
            path.pop();
            self.untouch(next);
            self.used.remove(&seg);
            outcome?;
        }
        Ok(())
    }
}

/// A minimum-volume 1-wiring of `tree` inside the search box.
///
/// Vertices go to distinct lattice points and edges to lattice paths that
/// share no unit segment; paths may cross and may run through other vertices'
/// points. The lower bound `max(points covered so far, |tree|)` prunes, so a
/// search that returns has certified optimality within the box.
pub fn optimal_wiring(tree: &OrderedTree, config: &OracleConfig) -> Result<OracleResult> {
    if tree.len() > config.max_vertices {
        return Err(Error::Argument(format!(
            "the oracle handles at most {} vertices, got {}",
            config.max_vertices,
            tree.len()
        )));
    }
    let half = config.box_half_width.unwrap_or(tree.len() as i64);
    if half < 0 {
        return Err(Error::Argument(
            "box half-width must be non-negative".into(),
        ));
    }
    let mut search = Search {
        edges: tree.edges().collect(),
        n: tree.len() as u64,
        half,
        budget: config.budget,
        explored: 0,
        pos: vec![None; tree.len()],
        occupied: HashSet::from([GridPoint::ORIGIN]),
        used: HashSet::new(),
        cover: HashMap::from([(GridPoint::ORIGIN, 1)]),
        routes: vec![Vec::new(); tree.len().saturating_sub(1)],
        best: u64::MAX,
        best_routes: None,
        tree,
    };
    search.pos[0] = Some(GridPoint::ORIGIN);
    search.place(0)?;
    let Some((pos, routes)) = search.best_routes else {
        return Err(Error::Embedding(format!(
            "no 1-wiring fits in the box of half-width {half}"
        )));
    };
    let witness = GridWiring {
        vertices: search
            .tree
            .nodes()
            .map(|v| (v, pos[v.0].expect("all placed")))
            .collect(),
        edges: search
            .edges
            .iter()
            .zip(routes)
            .map(|(&(from, to), path)| EdgePath { from, to, path })
            .collect(),
    };
    Ok(OracleResult {
        best_volume: search.best,
        witness,
        explored: search.explored,
        box_half_width: half,
    })
}

/// Legal-plan counts per subtree: `table[v][m]` is the number of legal ways
/// to put `m` subdivisions on the leaves below `v`.
fn plan_counts(r: &Reduction, n: u64) -> Vec<Vec<u128>> {
    let t = r.tree();
    let n = n as usize;
    let sizes = t.subtree_sizes();
    let mut table = vec![Vec::new(); t.len()];
    for v in t.nodes().rev() {
        table[v.0] = match *t.children(v) {
            [] if v == t.root() => (0..=n).map(|m| u128::from(m == 0)).collect(),
            [] => vec![1; n + 1],
            [c] => table[c.0].clone(),
            [a, b] => (0..=n)
                .map(|m| {
                    (0..=m)
                        .filter(|&ma| sizes[a.0] + ma >= sizes[b.0] + (m - ma))
                        .map(|ma| table[a.0][ma].saturating_mul(table[b.0][m - ma]))
                        .fold(0u128, u128::saturating_add)
                })
                .collect(),
            _ => unreachable!("reductions are binary"),
        };
    }
    table
}

/// Number of legal leaf plans of `r` with exactly `n` subdivisions.
pub fn count_legal_plans(r: &Reduction, n: u64) -> u128 {
    plan_counts(r, n)[0][n as usize]
}

/// Calls `visit` with every legal plan of `r` with `n` subdivisions, in
/// lexicographically decreasing order of the count vector.
pub fn for_each_legal_plan(r: &Reduction, n: u64, mut visit: impl FnMut(&SubdivisionPlan)) {
    let t = r.tree();
    let sizes = t.subtree_sizes();
    let position: HashMap<NodeId, usize> = r
        .leaves()
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i))
        .collect();
    let mut plan = SubdivisionPlan::zeros(r.leaf_count());
    if r.len() == 1 {
        if n == 0 {
            visit(&plan);
        }
        return;
    }
    fn go(
        t: &OrderedTree,
        sizes: &[usize],
        position: &HashMap<NodeId, usize>,
        v: NodeId,
        m: u64,
        plan: &mut SubdivisionPlan,
        k: &mut dyn FnMut(&mut SubdivisionPlan),
    ) {
        match *t.children(v) {
            [] => {
                plan.counts[position[&v]] = m;
                k(plan);
            }
            [c] => go(t, sizes, position, c, m, plan, k),
            [a, b] => {
                for ma in (0..=m).rev() {
                    let mb = m - ma;
                    if sizes[a.0] as u64 + ma < sizes[b.0] as u64 + mb {
                        break;
                    }
                    go(
                        t,
                        sizes,
                        position,
                        a,
                        ma,
                        plan,
                        &mut |p: &mut SubdivisionPlan| go(t, sizes, position, b, mb, p, k),
                    );
                }
            }
            _ => unreachable!("reductions are binary"),
        }
    }
    go(
        t,
        &sizes,
        &position,
        t.root(),
        n,
        &mut plan,
        &mut |p: &mut SubdivisionPlan| visit(p),
    );
}

/// The best volume per vertex over all legal plans with `n` subdivisions.
/// Ties go to the plan that puts the most mass furthest left.
pub fn exhaustive_vr(r: &Reduction, n: u64, budget: u64) -> Result<RatioEstimate> {
    let count = count_legal_plans(r, n);
    if count == 0 {
        return Err(Error::NoLegalPlan {
            requested: n,
            minimum: r.minimal_legal_plan().total(),
        });
    }
    if count > u128::from(budget) {
        return Err(Error::Budget {
            budget,
            hint: "too many legal plans, use the greedy strategy",
        });
    }
    let mut best: Option<(u64, SubdivisionPlan)> = None;
    let mut failure = None;
    for_each_legal_plan(r, n, |plan| {
        if failure.is_some() {
            return;
        }
        match r.subdivide(plan) {
            Ok(tree) => {
                let volume = crate::wiring::wire(&tree).volume();
                if best.as_ref().is_none_or(|(v, _)| volume > *v) {
                    best = Some((volume, plan.clone()));
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let (_, plan) = best.expect("at least one plan");
    wired_ratio(r, &plan)
}

/// `ceil(7n/3)`, the volume every constructed wiring must stay within.
pub fn volume_cap(n: u64) -> u64 {
    (7 * n).div_ceil(3)
}
