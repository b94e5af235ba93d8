//! Height-ordered graphs of variables, roofs, the Falling Roofs algorithm,
//! and the "cut off the top" elimination view.
//!
//! A `<`-graph places every variable at an x-position (appearance index) and
//! a height (rank under the order); edges are oriented from lower to higher.
//! A roof is a pair of edges into a common tip. Falling Roofs removes live
//! roofs by introducing lower shortcut edges and mirrors, edge for edge, the
//! run of Buchberger with Early Stopping on the associated difference
//! binomials.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::polyring::{Polynomial, VarOrder};
use crate::proofnet::AtomVar;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("relation pair ({0}, {1}) has equal rank and cannot be oriented")]
    EqualRank(AtomVar, AtomVar),
    #[error("variable {0} is not ranked by the order")]
    Unranked(AtomVar),
    #[error("graph is not linear: vertex {0} has valence {1}")]
    NotLinear(AtomVar, usize),
    #[error("edge on a dead run: {0}")]
    Internal(String),
    #[error("low set is not downward closed: {0} is low but {1} below it is not")]
    NotDownwardClosed(AtomVar, AtomVar),
}

/// An oriented edge between variables, with a liveness mark.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphEdge {
    pub src: AtomVar,
    pub dst: AtomVar,
    pub live: bool,
}

/// A roof: two edges into a common tip, the lower source first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Roof {
    pub low: (AtomVar, AtomVar),
    pub high: (AtomVar, AtomVar),
    pub tip: AtomVar,
}

/// A `<`-graph. Vertices carry an x-position (their index in `vars`) and a
/// height (their rank in `order`); edges are stored in insertion order,
/// which is the generator order of the associated binomial sequence.
#[derive(Debug, Clone)]
pub struct OrderedGraph {
    vars: Vec<AtomVar>,
    order: VarOrder,
    slots: Vec<Option<GraphEdge>>,
}

impl OrderedGraph {
    /// Build from explicit oriented edges; verifies orientation respects the order.
    pub fn new(
        vars: Vec<AtomVar>,
        order: VarOrder,
        edges: Vec<(AtomVar, AtomVar)>,
    ) -> Result<OrderedGraph, GraphError> {
        let mut g = OrderedGraph { vars, order, slots: Vec::new() };
        for v in &g.vars {
            if g.order.rank(v).is_none() {
                return Err(GraphError::Unranked(*v));
            }
        }
        for (src, dst) in edges {
            match g.cmp_rank(&src, &dst)? {
                Ordering::Less => {}
                Ordering::Equal => return Err(GraphError::EqualRank(src, dst)),
                Ordering::Greater => return Err(GraphError::EqualRank(src, dst)),
            }
            g.slots.push(Some(GraphEdge { src, dst, live: true }));
        }
        Ok(g)
    }

    fn cmp_rank(&self, a: &AtomVar, b: &AtomVar) -> Result<Ordering, GraphError> {
        let ra = self.order.rank(a).ok_or(GraphError::Unranked(*a))?;
        let rb = self.order.rank(b).ok_or(GraphError::Unranked(*b))?;
        Ok(ra.cmp(&rb))
    }

    pub fn vars(&self) -> &[AtomVar] {
        &self.vars
    }

    pub fn order(&self) -> &VarOrder {
        &self.order
    }

    pub fn edges(&self) -> impl Iterator<Item = &GraphEdge> + '_ {
        self.slots.iter().flatten()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn live_edges(&self) -> impl Iterator<Item = &GraphEdge> + '_ {
        self.edges().filter(|e| e.live)
    }

    pub fn contains_edge(&self, src: AtomVar, dst: AtomVar) -> bool {
        self.edges().any(|e| e.src == src && e.dst == dst)
    }

    pub fn is_live(&self, src: AtomVar, dst: AtomVar) -> Option<bool> {
        self.edges().find(|e| e.src == src && e.dst == dst).map(|e| e.live)
    }

    /// Valence counting all edges, live or dead.
    fn valence(&self, v: &AtomVar) -> usize {
        self.edges().filter(|e| e.src == *v || e.dst == *v).count()
    }

    fn live_valence(&self, v: &AtomVar) -> usize {
        self.live_edges().filter(|e| e.src == *v || e.dst == *v).count()
    }

    pub fn is_linear(&self) -> bool {
        self.vars.iter().all(|v| self.valence(v) <= 2)
    }

    fn live_is_linear(&self) -> bool {
        self.vars.iter().all(|v| self.live_valence(v) <= 2)
    }

    /// Binomials `dst − src` in stored edge order, live and dead alike.
    pub fn binomials(&self) -> Vec<Polynomial> {
        self.edges()
            .map(|e| Polynomial::difference(e.dst, e.src))
            .collect()
    }

    /// Binomials of live edges only.
    pub fn live_binomials(&self) -> Vec<Polynomial> {
        self.live_edges()
            .map(|e| Polynomial::difference(e.dst, e.src))
            .collect()
    }

    /// The lowest live roof, or `None`. For linear live subgraphs distinct
    /// roofs have distinct tips, so the roof with the lower tip comes first;
    /// sources break ties.
    pub fn first_live_roof(&self) -> Option<Roof> {
        let mut by_tip: BTreeMap<usize, Vec<&GraphEdge>> = BTreeMap::new();
        for e in self.live_edges() {
            let r = self.order.rank(&e.dst).expect("edges are rank-checked");
            by_tip.entry(r).or_default().push(e);
        }
        for (_, mut ins) in by_tip {
            if ins.len() < 2 {
                continue;
            }
            ins.sort_by_key(|e| self.order.rank(&e.src).expect("ranked"));
            let low = ins[0];
            let high = ins[1];
            return Some(Roof {
                low: (low.src, low.dst),
                high: (high.src, high.dst),
                tip: low.dst,
            });
        }
        None
    }

    fn find_slot(&self, src: AtomVar, dst: AtomVar) -> Option<usize> {
        self.slots
            .iter()
            .position(|s| matches!(s, Some(e) if e.src == src && e.dst == dst))
    }

    fn mark_dead(&mut self, idx: usize) {
        if let Some(e) = self.slots[idx].as_mut() {
            e.live = false;
        }
    }

    /// Live edges other than `idx` sharing the target of `idx`.
    fn live_partners_at_target(&self, idx: usize) -> Vec<usize> {
        let Some(d) = self.slots[idx] else { return Vec::new() };
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(i, s)| match s {
                Some(e) if i != idx && e.live && e.dst == d.dst => Some(i),
                _ => None,
            })
            .collect()
    }

    /// Edges restricted to live ones; vertices retained.
    pub fn live_subgraph(&self) -> OrderedGraph {
        OrderedGraph {
            vars: self.vars.clone(),
            order: self.order.clone(),
            slots: self
                .slots
                .iter()
                .filter(|s| matches!(s, Some(e) if e.live))
                .cloned()
                .collect(),
        }
    }

    /// GraphViz rendering at realisation coordinates: x = appearance index,
    /// y = rank. Live edges solid, dead edges dotted.
    pub fn to_dot(&self, name: &dyn Fn(&AtomVar) -> String) -> String {
        let mut out = String::from("digraph roofgraph {\n    layout=neato;\n    splines=line;\n");
        for (i, v) in self.vars.iter().enumerate() {
            let rank = self.order.rank(v).unwrap_or(0);
            out.push_str(&format!(
                "    v{} [label=\"{}\" pos=\"{},{}!\" shape=plaintext];\n",
                i,
                name(v),
                i,
                rank
            ));
        }
        let pos_of: BTreeMap<AtomVar, usize> =
            self.vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        for e in self.edges() {
            let style = if e.live { "solid" } else { "dotted" };
            out.push_str(&format!(
                "    v{} -> v{} [style={}];\n",
                pos_of[&e.src], pos_of[&e.dst], style
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Total order on edges: `(src → dst) < (src' → dst')` iff `(dst, src)`
/// precedes `(dst', src')` lexicographically in the variable order.
pub fn edge_order(
    e1: (AtomVar, AtomVar),
    e2: (AtomVar, AtomVar),
    order: &VarOrder,
) -> Result<Ordering, GraphError> {
    let r = |v: &AtomVar| order.rank(v).ok_or(GraphError::Unranked(*v));
    let k1 = (r(&e1.1)?, r(&e1.0)?);
    let k2 = (r(&e2.1)?, r(&e2.0)?);
    Ok(k1.cmp(&k2))
}

/// Build the oriented graph of a symmetric relation: one edge per related
/// pair, oriented low to high, all live, listed in edge order.
pub fn graph_from_relation(
    vars: &[AtomVar],
    order: &VarOrder,
    sim: &[(AtomVar, AtomVar)],
) -> Result<OrderedGraph, GraphError> {
    let mut oriented: BTreeSet<(usize, usize, AtomVar, AtomVar)> = BTreeSet::new();
    for (a, b) in sim {
        let ra = order.rank(a).ok_or(GraphError::Unranked(*a))?;
        let rb = order.rank(b).ok_or(GraphError::Unranked(*b))?;
        let (src, dst, rs, rd) = match ra.cmp(&rb) {
            Ordering::Less => (*a, *b, ra, rb),
            Ordering::Greater => (*b, *a, rb, ra),
            Ordering::Equal => return Err(GraphError::EqualRank(*a, *b)),
        };
        // key (target rank, source rank) is the edge order
        oriented.insert((rd, rs, src, dst));
    }
    let edges: Vec<(AtomVar, AtomVar)> =
        oriented.into_iter().map(|(_, _, s, d)| (s, d)).collect();
    OrderedGraph::new(vars.to_vec(), order.clone(), edges)
}

/// Phase markers for [`falling_roofs_trace`] snapshots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Initial,
    /// After the outer loop killed a roof and introduced its shortcut edge,
    /// before the inner loop runs. Pass numbers start at 1.
    OuterAdd(usize),
    /// After the inner loop of the pass finished.
    PassComplete(usize),
}

/// The Falling Roofs algorithm. Requires a linear graph with all edges live.
/// The output has no live roofs and its live subgraph is linear; dead edges
/// are retained, removed intermediate shortcuts are not.
pub fn falling_roofs(input: &OrderedGraph) -> Result<OrderedGraph, GraphError> {
    Ok(falling_roofs_trace(input)?.0)
}

/// Falling Roofs with state snapshots for each phase of each outer pass.
pub fn falling_roofs_trace(
    input: &OrderedGraph,
) -> Result<(OrderedGraph, Vec<(Phase, OrderedGraph)>), GraphError> {
    for v in &input.vars {
        let val = input.valence(v);
        if val > 2 {
            return Err(GraphError::NotLinear(*v, val));
        }
    }
    let mut g = input.clone();
    let mut snapshots = vec![(Phase::Initial, g.clone())];
    let mut pass = 0usize;

    while let Some(roof) = g.first_live_roof() {
        pass += 1;
        let low_idx = g
            .find_slot(roof.low.0, roof.low.1)
            .ok_or_else(|| GraphError::Internal("roof edge missing".into()))?;
        let high_idx = g
            .find_slot(roof.high.0, roof.high.1)
            .ok_or_else(|| GraphError::Internal("roof edge missing".into()))?;
        g.mark_dead(low_idx);
        g.mark_dead(high_idx);

        // shortcut d from the lower source to the higher source; an existing
        // duplicate, live or dead, blocks re-addition
        let (d_src, d_dst) = (roof.low.0, roof.high.0);
        let (mut d_idx, mut d_was_added) = match g.find_slot(d_src, d_dst) {
            Some(i) => (i, false),
            None => {
                g.slots.push(Some(GraphEdge { src: d_src, dst: d_dst, live: true }));
                (g.slots.len() - 1, true)
            }
        };
        snapshots.push((Phase::OuterAdd(pass), g.clone()));

        // inner loop: while d is part of a live roof
        loop {
            let d_edge = g.slots[d_idx].ok_or_else(|| GraphError::Internal("d removed".into()))?;
            if !d_edge.live {
                break;
            }
            let partners = g.live_partners_at_target(d_idx);
            if partners.is_empty() {
                break;
            }
            if partners.len() > 1 {
                return Err(GraphError::Internal(
                    "live subgraph lost linearity during falling roofs".into(),
                ));
            }
            let other_idx = partners[0];
            let other = g.slots[other_idx].expect("partner exists");
            g.mark_dead(other_idx);

            let d_rank = g.order.rank(&d_edge.src).expect("ranked");
            let o_rank = g.order.rank(&other.src).expect("ranked");
            // (d, e'') roof when d has the lower source, (e'', d) otherwise
            let (nsrc, ndst) = if d_rank < o_rank {
                (d_edge.src, other.src)
            } else {
                (other.src, d_edge.src)
            };
            let (next_idx, next_added) = match g.find_slot(nsrc, ndst) {
                Some(i) => (i, false),
                None => {
                    g.slots.push(Some(GraphEdge { src: nsrc, dst: ndst, live: true }));
                    (g.slots.len() - 1, true)
                }
            };
            // the intermediate shortcut leaves the graph entirely; edges that
            // predate this pass stay
            if d_was_added {
                g.slots[d_idx] = None;
            }
            d_idx = next_idx;
            d_was_added = next_added;
        }

        debug_assert!(g.live_is_linear());
        snapshots.push((Phase::PassComplete(pass), g.clone()));
    }
    debug_assert!(g.first_live_roof().is_none());
    Ok((g, snapshots))
}

/// `G_N ∩ k[low]`: the binomials of edges with both endpoints in the low
/// set, in edge order. The low set must be downward closed in the order.
pub fn cut_top(graph: &OrderedGraph, low: &BTreeSet<AtomVar>) -> Result<Vec<Polynomial>, GraphError> {
    let max_low_rank = low
        .iter()
        .map(|v| graph.order.rank(v).ok_or(GraphError::Unranked(*v)))
        .try_fold(None::<usize>, |acc, r| Ok::<_, GraphError>(acc.max(Some(r?))))?;
    if let Some(max_rank) = max_low_rank {
        let top_low = graph.order.vars()[max_rank];
        for v in graph.order.vars() {
            let r = graph.order.rank(v).expect("order member");
            if r < max_rank && !low.contains(v) {
                return Err(GraphError::NotDownwardClosed(top_low, *v));
            }
        }
    }
    let mut picked: Vec<&GraphEdge> = graph
        .edges()
        .filter(|e| low.contains(&e.src) && low.contains(&e.dst))
        .collect();
    picked.sort_by(|a, b| {
        edge_order((a.src, a.dst), (b.src, b.dst), &graph.order).expect("ranked")
    });
    Ok(picked
        .into_iter()
        .map(|e| Polynomial::difference(e.dst, e.src))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger_es;
    use crate::proofnet::EdgeId;

    fn v(i: u32) -> AtomVar {
        AtomVar::new(EdgeId(i), 0)
    }

    /// X5 < X1 < X6 < X3 < X2 < X4 with edges between consecutive x-positions.
    fn example_graph() -> OrderedGraph {
        let order = VarOrder::new(vec![v(5), v(1), v(6), v(3), v(2), v(4)]).unwrap();
        let vars = vec![v(1), v(2), v(3), v(4), v(5), v(6)];
        let sim = vec![
            (v(1), v(2)),
            (v(2), v(3)),
            (v(3), v(4)),
            (v(4), v(5)),
            (v(5), v(6)),
        ];
        graph_from_relation(&vars, &order, &sim).unwrap()
    }

    #[test]
    fn realisation_of_example_order() {
        let g = example_graph();
        let expected: BTreeSet<(AtomVar, AtomVar)> = [
            (v(1), v(2)),
            (v(3), v(2)),
            (v(3), v(4)),
            (v(5), v(4)),
            (v(5), v(6)),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<(AtomVar, AtomVar)> = g.edges().map(|e| (e.src, e.dst)).collect();
        assert_eq!(got, expected);
        assert!(g.is_linear());
    }

    #[test]
    fn chain_has_no_roofs() {
        let order = VarOrder::new(vec![v(0), v(1), v(2)]).unwrap();
        let vars = vec![v(0), v(1), v(2)];
        let sim = vec![(v(0), v(1)), (v(1), v(2))];
        let g = graph_from_relation(&vars, &order, &sim).unwrap();
        assert!(g.first_live_roof().is_none());
        let n = falling_roofs(&g).unwrap();
        assert_eq!(n.binomials(), g.binomials());
        assert!(n.edges().all(|e| e.live));
    }

    #[test]
    fn equal_rank_pair_is_rejected() {
        let order = VarOrder::new(vec![v(0), v(1)]).unwrap();
        let err = graph_from_relation(&[v(0), v(1)], &order, &[(v(0), v(0))]);
        assert!(matches!(err, Err(GraphError::EqualRank(_, _))));
    }

    #[test]
    fn edge_order_prefers_lower_tips_then_lower_sources() {
        let order = VarOrder::new(vec![v(0), v(1), v(2), v(3)]).unwrap();
        // distinct tips: lower tip first
        assert_eq!(
            edge_order((v(0), v(2)), (v(0), v(3)), &order).unwrap(),
            Ordering::Less
        );
        // same tip: lower source first
        assert_eq!(
            edge_order((v(0), v(3)), (v(1), v(3)), &order).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            edge_order((v(0), v(3)), (v(0), v(3)), &order).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn first_live_roof_of_example() {
        let g = example_graph();
        let roof = g.first_live_roof().unwrap();
        // tips X2 (height 5) and X4 (height 6): X2 is the lower tip
        assert_eq!(roof.tip, v(2));
        assert_eq!(roof.low, (v(1), v(2)));
        assert_eq!(roof.high, (v(3), v(2)));
    }

    #[test]
    fn falling_roofs_reproduces_the_four_panels() {
        let g = example_graph();
        let (n, snaps) = falling_roofs_trace(&g).unwrap();

        let state = |g: &OrderedGraph| -> BTreeSet<(AtomVar, AtomVar, bool)> {
            g.edges().map(|e| (e.src, e.dst, e.live)).collect()
        };
        // panel 1: all five original edges live
        assert_eq!(snaps[0].0, Phase::Initial);
        assert_eq!(
            state(&snaps[0].1),
            [
                (v(1), v(2), true),
                (v(3), v(2), true),
                (v(3), v(4), true),
                (v(5), v(4), true),
                (v(5), v(6), true),
            ]
            .into_iter()
            .collect()
        );
        // panel 2: roof at X2 dead, shortcut X1 → X3 live
        let after_pass1 = snaps
            .iter()
            .find(|(p, _)| *p == Phase::PassComplete(1))
            .map(|(_, g)| g)
            .unwrap();
        assert_eq!(
            state(after_pass1),
            [
                (v(1), v(2), false),
                (v(3), v(2), false),
                (v(1), v(3), true),
                (v(3), v(4), true),
                (v(5), v(4), true),
                (v(5), v(6), true),
            ]
            .into_iter()
            .collect()
        );
        // panel 3: roof at X4 dead, shortcut X5 → X3 live, inner loop pending
        let mid_pass2 = snaps
            .iter()
            .find(|(p, _)| *p == Phase::OuterAdd(2))
            .map(|(_, g)| g)
            .unwrap();
        assert_eq!(
            state(mid_pass2),
            [
                (v(1), v(2), false),
                (v(3), v(2), false),
                (v(1), v(3), true),
                (v(3), v(4), false),
                (v(5), v(4), false),
                (v(5), v(3), true),
                (v(5), v(6), true),
            ]
            .into_iter()
            .collect()
        );
        // panel 4: X1 → X3 dead, X5 → X3 removed, X5 → X1 live
        assert_eq!(
            state(&n),
            [
                (v(1), v(2), false),
                (v(3), v(2), false),
                (v(1), v(3), false),
                (v(3), v(4), false),
                (v(5), v(4), false),
                (v(5), v(1), true),
                (v(5), v(6), true),
            ]
            .into_iter()
            .collect()
        );
        let live: BTreeSet<(AtomVar, AtomVar)> =
            n.live_edges().map(|e| (e.src, e.dst)).collect();
        assert_eq!(live, [(v(5), v(1)), (v(5), v(6))].into_iter().collect());
        assert!(n.first_live_roof().is_none());
        assert!(n.live_subgraph().is_linear());
    }

    #[test]
    fn falling_roofs_matches_buchberger_on_the_example() {
        let g = example_graph();
        let n = falling_roofs(&g).unwrap();
        let es = buchberger_es(&g.binomials(), g.order()).unwrap();
        assert_eq!(es.polys, n.binomials());
        // X3 − X1 sits in the output even though the edge died
        assert!(n.binomials().contains(&Polynomial::difference(v(3), v(1))));
    }

    #[test]
    fn cut_top_of_example() {
        let g = example_graph();
        let n = falling_roofs(&g).unwrap();
        let low: BTreeSet<AtomVar> = [v(1), v(5), v(6)].into_iter().collect();
        let cut = cut_top(&n, &low).unwrap();
        let expected: BTreeSet<Polynomial> = [
            Polynomial::difference(v(6), v(5)),
            Polynomial::difference(v(1), v(5)),
        ]
        .into_iter()
        .collect();
        assert_eq!(cut.iter().cloned().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn cut_top_with_all_vars_returns_everything() {
        let g = example_graph();
        let n = falling_roofs(&g).unwrap();
        let all: BTreeSet<AtomVar> = n.vars().iter().copied().collect();
        let cut = cut_top(&n, &all).unwrap();
        assert_eq!(cut.len(), n.edge_count());
    }

    #[test]
    fn cut_top_rejects_non_downward_closed_sets() {
        let g = example_graph();
        // X6 is low but X1 below it is excluded
        let low: BTreeSet<AtomVar> = [v(5), v(6)].into_iter().collect();
        assert!(matches!(
            cut_top(&g, &low),
            Err(GraphError::NotDownwardClosed(_, _))
        ));
    }

    #[test]
    fn nonlinear_input_is_rejected() {
        let order = VarOrder::new(vec![v(0), v(1), v(2), v(3)]).unwrap();
        let g = OrderedGraph::new(
            vec![v(0), v(1), v(2), v(3)],
            order,
            vec![(v(0), v(3)), (v(1), v(3)), (v(2), v(3))],
        )
        .unwrap();
        assert!(matches!(
            falling_roofs(&g),
            Err(GraphError::NotLinear(_, 3))
        ));
    }

    #[test]
    fn existing_live_shortcut_is_reused() {
        // triangle: X0 → X1, X0 → X2, X1 → X2; the roof at X2 wants X0 → X1
        let order = VarOrder::new(vec![v(0), v(1), v(2)]).unwrap();
        let g = OrderedGraph::new(
            vec![v(0), v(1), v(2)],
            order.clone(),
            vec![(v(0), v(1)), (v(0), v(2)), (v(1), v(2))],
        )
        .unwrap();
        let n = falling_roofs(&g).unwrap();
        assert_eq!(n.edge_count(), 3, "no duplicate edge added");
        let live: BTreeSet<(AtomVar, AtomVar)> =
            n.live_edges().map(|e| (e.src, e.dst)).collect();
        assert_eq!(live, [(v(0), v(1))].into_iter().collect());
        // matches Buchberger: S-poly divides to zero against the existing edge
        let es = buchberger_es(&g.binomials(), &order).unwrap();
        assert_eq!(es.polys, n.binomials());
    }

    #[test]
    fn valence_one_vertices_keep_one_live_edge() {
        let g = example_graph();
        let n = falling_roofs(&g).unwrap();
        for var in g.vars() {
            if g.valence(var) == 1 {
                assert_eq!(n.live_valence(var), 1, "vertex {var}");
            }
        }
    }
}
