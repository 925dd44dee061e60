//! Certified integer upper bounds on the total reduced Betti number of the
//! independence complex.
//!
//! Three inequalities drive the recursion, each certified in the output tree:
//!
//! * split: b(G) <= b(G - v) + b(G - N[v]) for any vertex v;
//! * fold at v with neighbors ordered v_1..v_d:
//!   b(G) <= sum_i b(G - N[v_i] - {v_1..v_{i-1}});
//! * cut: if {v_1..v_d} disconnects G into C and the rest G', then
//!   b(G) <= b(C) b(G') + sum_i b(G - N[v_i] - {v_1..v_{i-1}}).
//!
//! An empty cut is the plain product over components (there the product is an
//! equality, which keeps disjoint unions exact). Leaves are exact homology
//! totals on small graphs, an exact 1 on the empty graph, and an exact 0 when
//! an isolated vertex cones the complex.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::{Graph, VertexSet};
use crate::homology::{total_reduced_betti, Setting};
use serde::Serialize;

#[derive(Clone, Copy, Debug)]
pub struct CertifyConfig {
    /// Graphs of at most this many vertices are evaluated exactly.
    pub base_size: usize,
    /// For fold vertices of degree <= 5, try every neighbor order and keep
    /// the best bound instead of the greedy order.
    pub try_all_orders: bool,
    /// Recursion width guard: total certificate nodes allowed.
    pub max_nodes: usize,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig { base_size: 6, try_all_orders: false, max_nodes: 1 << 20 }
    }
}

/// One application of the fold inequality at `vertex` with the given neighbor
/// order: child i is the graph minus N[order[i]] minus the earlier neighbors.
#[derive(Clone, Debug)]
pub struct FoldStep {
    pub vertex: usize,
    pub order: Vec<usize>,
    /// k_i: how many vertices branch i removes.
    pub removed_sizes: Vec<usize>,
    pub children: Vec<Graph>,
}

/// Computes the fold branches of `g` at `v` for a neighbor order.
pub fn fold_step(g: &Graph, v: usize, order: &[usize]) -> Result<FoldStep> {
    if v >= g.n() {
        return Err(Error::Argument(format!("vertex {v} out of range")));
    }
    if g.degree(v) == 0 {
        return Err(Error::Argument(format!(
            "vertex {v} is isolated; the independence complex is a cone and the total is 0"
        )));
    }
    let nv = g.neighbors(v);
    let order_mask: VertexSet = order.iter().copied().collect();
    if order.len() != g.degree(v) || order_mask.0 != nv {
        return Err(Error::Argument("order must be a permutation of the open neighborhood".into()));
    }
    let mut removed_sizes = Vec::with_capacity(order.len());
    let mut children = Vec::with_capacity(order.len());
    let mut earlier = 0u64;
    for &vi in order {
        let removed = g.closed_neighborhood(vi) | earlier;
        removed_sizes.push(removed.count_ones() as usize);
        children.push(g.remove_set(VertexSet(removed))?);
        earlier |= 1u64 << vi;
    }
    Ok(FoldStep { vertex: v, order: order.to_vec(), removed_sizes, children })
}

/// The two split children (g - v, g - N[v]).
pub fn split_children(g: &Graph, v: usize) -> Result<(Graph, Graph)> {
    if v >= g.n() {
        return Err(Error::Argument(format!("vertex {v} out of range")));
    }
    Ok((
        g.remove_vertex(v)?,
        g.remove_set(VertexSet(g.closed_neighborhood(v)))?,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeafReason {
    EmptyGraph,
    IsolatedVertex,
    ExactHomology,
}

/// A node of the certificate tree. Vertex names refer to the labels of the
/// root graph that was certified.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertNode {
    Leaf {
        vertices: Vec<usize>,
        total: u64,
        reason: LeafReason,
    },
    Fold {
        vertex: usize,
        order: Vec<usize>,
        removed_sizes: Vec<usize>,
        children: Vec<CertNode>,
        bound: u64,
    },
    Split {
        vertex: usize,
        without_vertex: Box<CertNode>,
        without_neighborhood: Box<CertNode>,
        bound: u64,
    },
    Cut {
        cut: Vec<usize>,
        component: Box<CertNode>,
        rest: Box<CertNode>,
        branches: Vec<CertNode>,
        bound: u64,
    },
}

impl CertNode {
    pub fn bound(&self) -> u64 {
        match self {
            CertNode::Leaf { total, .. } => *total,
            CertNode::Fold { bound, .. }
            | CertNode::Split { bound, .. }
            | CertNode::Cut { bound, .. } => *bound,
        }
    }

    /// Recomputes every internal combination from the children; `None` if any
    /// stored bound disagrees, otherwise the root bound.
    pub fn replay(&self) -> Option<u64> {
        match self {
            CertNode::Leaf { total, .. } => Some(*total),
            CertNode::Fold { children, bound, .. } => {
                let sum: u64 = children.iter().map(|c| c.replay()).sum::<Option<u64>>()?;
                (sum == *bound).then_some(sum)
            }
            CertNode::Split { without_vertex, without_neighborhood, bound, .. } => {
                let sum = without_vertex.replay()? + without_neighborhood.replay()?;
                (sum == *bound).then_some(sum)
            }
            CertNode::Cut { component, rest, branches, bound, .. } => {
                let mut total = component.replay()? * rest.replay()?;
                for b in branches {
                    total += b.replay()?;
                }
                (total == *bound).then_some(total)
            }
        }
    }

    pub fn node_count(&self) -> usize {
        1 + match self {
            CertNode::Leaf { .. } => 0,
            CertNode::Fold { children, .. } => children.iter().map(CertNode::node_count).sum(),
            CertNode::Split { without_vertex, without_neighborhood, .. } => {
                without_vertex.node_count() + without_neighborhood.node_count()
            }
            CertNode::Cut { component, rest, branches, .. } => {
                component.node_count()
                    + rest.node_count()
                    + branches.iter().map(CertNode::node_count).sum::<usize>()
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundCertificate {
    pub bound: u64,
    pub root: CertNode,
}

/// Produces a certified upper bound on the independence-complex total of `g`.
pub fn certify(g: &Graph, cfg: &CertifyConfig) -> Result<BoundCertificate> {
    let labels: Vec<usize> = (0..g.n()).collect();
    let mut nodes = 0usize;
    let root = go(g, &labels, cfg, &mut nodes)?;
    Ok(BoundCertificate { bound: root.bound(), root })
}

fn go(g: &Graph, labels: &[usize], cfg: &CertifyConfig, nodes: &mut usize) -> Result<CertNode> {
    *nodes += 1;
    if *nodes > cfg.max_nodes {
        return Err(Error::Resource(format!(
            "certificate exceeded {} nodes",
            cfg.max_nodes
        )));
    }
    if g.n() == 0 {
        return Ok(CertNode::Leaf { vertices: vec![], total: 1, reason: LeafReason::EmptyGraph });
    }
    if g.has_isolated_vertex() {
        return Ok(CertNode::Leaf {
            vertices: labels.to_vec(),
            total: 0,
            reason: LeafReason::IsolatedVertex,
        });
    }
    if g.n() <= cfg.base_size {
        let total = total_reduced_betti(g, FieldSpec::GF2, Setting::Independence)?;
        return Ok(CertNode::Leaf {
            vertices: labels.to_vec(),
            total,
            reason: LeafReason::ExactHomology,
        });
    }

    let comps = g.components();
    if comps.len() > 1 {
        return cut_node(g, labels, &[], comps[0], cfg, nodes);
    }
    if let Some((cut, component)) = find_small_cut(g) {
        return cut_node(g, labels, &cut, component, cfg, nodes);
    }

    // fold at a minimum-degree vertex
    let v = g.min_degree_vertex().expect("nonempty");
    if cfg.try_all_orders && g.degree(v) <= 5 {
        let neighbors: Vec<usize> = VertexSet(g.neighbors(v)).iter().collect();
        let mut best: Option<CertNode> = None;
        for order in permutations(&neighbors) {
            let node = fold_node(g, labels, v, &order, cfg, nodes)?;
            if best.as_ref().is_none_or(|b| node.bound() < b.bound()) {
                best = Some(node);
            }
        }
        Ok(best.expect("degree >= 1"))
    } else {
        let order = greedy_order(g, v);
        fold_node(g, labels, v, &order, cfg, nodes)
    }
}

fn fold_node(
    g: &Graph,
    labels: &[usize],
    v: usize,
    order: &[usize],
    cfg: &CertifyConfig,
    nodes: &mut usize,
) -> Result<CertNode> {
    let step = fold_step(g, v, order)?;
    let mut children = Vec::with_capacity(step.children.len());
    let mut earlier = 0u64;
    let mut bound = 0u64;
    for (i, &vi) in order.iter().enumerate() {
        let removed = g.closed_neighborhood(vi) | earlier;
        let (child, map) = g.remove_set_with_map(VertexSet(removed))?;
        let child_labels: Vec<usize> = map.iter().map(|&u| labels[u]).collect();
        debug_assert_eq!(child, step.children[i]);
        let node = go(&child, &child_labels, cfg, nodes)?;
        bound += node.bound();
        children.push(node);
        earlier |= 1u64 << vi;
    }
    Ok(CertNode::Fold {
        vertex: labels[v],
        order: order.iter().map(|&u| labels[u]).collect(),
        removed_sizes: step.removed_sizes,
        children,
        bound,
    })
}

fn cut_node(
    g: &Graph,
    labels: &[usize],
    cut: &[usize],
    component: VertexSet,
    cfg: &CertifyConfig,
    nodes: &mut usize,
) -> Result<CertNode> {
    let cut_mask: VertexSet = cut.iter().copied().collect();
    let rest_mask = VertexSet(g.vertex_mask() & !component.0 & !cut_mask.0);

    let (comp_graph, comp_map) = g.remove_set_with_map(VertexSet(!component.0 & g.vertex_mask()))?;
    let comp_labels: Vec<usize> = comp_map.iter().map(|&u| labels[u]).collect();
    let comp_node = go(&comp_graph, &comp_labels, cfg, nodes)?;

    let (rest_graph, rest_map) = g.remove_set_with_map(VertexSet(!rest_mask.0 & g.vertex_mask()))?;
    let rest_labels: Vec<usize> = rest_map.iter().map(|&u| labels[u]).collect();
    let rest_node = go(&rest_graph, &rest_labels, cfg, nodes)?;

    let mut branches = Vec::with_capacity(cut.len());
    let mut earlier = 0u64;
    let mut branch_total = 0u64;
    for &vi in cut {
        let removed = g.closed_neighborhood(vi) | earlier;
        let (child, map) = g.remove_set_with_map(VertexSet(removed))?;
        let child_labels: Vec<usize> = map.iter().map(|&u| labels[u]).collect();
        let node = go(&child, &child_labels, cfg, nodes)?;
        branch_total += node.bound();
        branches.push(node);
        earlier |= 1u64 << vi;
    }

    let bound = comp_node.bound() * rest_node.bound() + branch_total;
    Ok(CertNode::Cut {
        cut: cut.iter().map(|&u| labels[u]).collect(),
        component: Box::new(comp_node),
        rest: Box::new(rest_node),
        branches,
        bound,
    })
}

// Greedy neighbor order: repeatedly take the neighbor maximizing
// k_i = deg + 1 + (earlier-ordered non-neighbors), ties to the lowest index.
// This is descending degree with ties broken toward missing edges.
fn greedy_order(g: &Graph, v: usize) -> Vec<usize> {
    let mut remaining: Vec<usize> = VertexSet(g.neighbors(v)).iter().collect();
    let mut order = Vec::with_capacity(remaining.len());
    let mut earlier = 0u64;
    while !remaining.is_empty() {
        let (pos, _) = remaining
            .iter()
            .enumerate()
            .max_by_key(|&(_, &u)| {
                let k = g.degree(u) + 1 + (earlier & !g.neighbors(u)).count_ones() as usize;
                (k, usize::MAX - u)
            })
            .unwrap();
        let u = remaining.remove(pos);
        earlier |= 1u64 << u;
        order.push(u);
    }
    order
}

// Smallest cut of size 1 then 2 (lexicographic first), with the smallest
// resulting component; None when the graph is 3-connected or too small.
fn find_small_cut(g: &Graph) -> Option<(Vec<usize>, VertexSet)> {
    let n = g.n();
    for v in 0..n {
        if let Some(comp) = smallest_component_after(g, 1u64 << v) {
            return Some((vec![v], comp));
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let mask = 1u64 << u | 1u64 << v;
            if let Some(comp) = smallest_component_after(g, mask) {
                return Some((vec![u, v], comp));
            }
        }
    }
    None
}

fn smallest_component_after(g: &Graph, removed: u64) -> Option<VertexSet> {
    let rest = g.induced(VertexSet(g.vertex_mask() & !removed)).ok()?;
    let comps = rest.components();
    if comps.len() < 2 {
        return None;
    }
    // map back to original labels
    let kept: Vec<usize> = VertexSet(g.vertex_mask() & !removed).iter().collect();
    comps
        .iter()
        .min_by_key(|c| (c.len(), c.0))
        .map(|c| c.iter().map(|i| kept[i]).collect())
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}
