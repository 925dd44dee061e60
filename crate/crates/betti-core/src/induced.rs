//! Exact induced-subgraph containment by backtracking with degree and
//! neighborhood pruning. Patterns are tiny here (at most ~10 vertices), so
//! no heuristics beyond candidate filtering are needed.

use crate::graph::{Graph, VertexSet};

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    assigned: Vec<usize>,
    used: u64,
}

impl<'a> Matcher<'a> {
    // pattern vertices ordered so each one (after the first) touches the
    // already-ordered prefix when possible; keeps candidate sets tight
    fn ordering(pattern: &Graph) -> Vec<usize> {
        let n = pattern.n();
        let mut order = Vec::with_capacity(n);
        let mut chosen = 0u64;
        for _ in 0..n {
            let next = (0..n)
                .filter(|v| chosen >> v & 1 == 0)
                .max_by_key(|&v| {
                    (
                        (pattern.neighbors(v) & chosen).count_ones(),
                        pattern.degree(v),
                        usize::MAX - v,
                    )
                })
                .unwrap();
            order.push(next);
            chosen |= 1 << next;
        }
        order
    }

    fn candidates(&self, pos: usize) -> u64 {
        let u = self.order[pos];
        let mut cand = self.host.vertex_mask() & !self.used;
        for (i, &w) in self.order[..pos].iter().enumerate() {
            let img = self.assigned[i];
            if self.pattern.has_edge(u, w) {
                cand &= self.host.neighbors(img);
            } else {
                cand &= !self.host.neighbors(img) & !(1u64 << img);
            }
        }
        cand
    }

    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let u = self.order[pos];
        let need = self.pattern.degree(u);
        for v in VertexSet(self.candidates(pos)).iter() {
            if self.host.degree(v) < need {
                continue;
            }
            self.assigned.push(v);
            self.used |= 1 << v;
            if self.extend(pos + 1) {
                return true;
            }
            self.used &= !(1u64 << v);
            self.assigned.pop();
        }
        false
    }
}

/// True iff some vertex subset of `host` induces a copy of `pattern`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    if pattern.n() == 0 {
        return true;
    }
    if pattern.n() > host.n() {
        return false;
    }
    let mut m = Matcher {
        host,
        pattern,
        order: Matcher::ordering(pattern),
        assigned: Vec::with_capacity(pattern.n()),
        used: 0,
    };
    m.extend(0)
}

/// True iff some induced copy of `pattern` in `host` uses the vertex `v`.
/// Used by the enumeration to re-test only extensions: when the rest of the
/// host is already pattern-free, a new copy must pass through the new vertex.
pub fn contains_induced_touching(host: &Graph, pattern: &Graph, v: usize) -> bool {
    if pattern.n() == 0 || pattern.n() > host.n() || v >= host.n() {
        return pattern.n() == 0;
    }
    let order = Matcher::ordering(pattern);
    // pin each pattern position to v in turn
    for pin in 0..order.len() {
        let u = order[pin];
        if host.degree(v) < pattern.degree(u) {
            continue;
        }
        let mut m = Matcher {
            host,
            pattern,
            order: {
                let mut o = order.clone();
                o.swap(0, pin);
                o
            },
            assigned: vec![v],
            used: 1u64 << v,
        };
        // position 0 is pinned; consistency of later positions against it is
        // enforced by candidates()
        if m.extend(1) {
            return true;
        }
    }
    false
}
