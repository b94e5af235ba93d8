//! The bridge from proof structures to polynomial ideals: link generators,
//! the adjacency relation on atom occurrences, persistent paths, the boundary
//! permutation, the three monomial orders, and generator sequences.
//!
//! Every link contributes difference binomials identifying matched atom
//! occurrences across its edges. Axiom and cut links pair position `i` of
//! `a(A)` with position `n+1−i` of `a(¬A)`; tensor and par links pair premise
//! atoms with the corresponding conclusion atoms.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::formulas::{atom_sequence, Sign};
use crate::polyring::{Polynomial, VarOrder};
use crate::proofnet::{AtomVar, EdgeId, NodeId, NodeKind, ProofStructure, VarMap};
use crate::roofgraph::{self, GraphError, OrderedGraph};

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("operation requires a single conclusion, found {0}")]
    MultiConclusion(usize),
    #[error("structure has no conclusion")]
    NoConclusion,
    #[error("atom adjacency does not form proof-net paths: {0}")]
    PathStructure(String),
    #[error("reduction sequence eliminates no variables")]
    EmptyElimination,
    #[error("no compound axiom or cut link to sabotage")]
    NothingToSabotage,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("order construction: {0}")]
    Order(String),
}

/// One generator: a difference binomial, the matched pair, and the link it
/// comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub poly: Polynomial,
    pub pair: (AtomVar, AtomVar),
    pub link: NodeId,
    pub kind: NodeKind,
}

/// The generating set `G_π`, one entry per matched pair, grouped by link in
/// node-id order.
#[derive(Debug, Clone, Default)]
pub struct GeneratorSet {
    pub entries: Vec<Generator>,
}

impl GeneratorSet {
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.entries.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn pairs(&self) -> Vec<(AtomVar, AtomVar)> {
        self.entries.iter().map(|g| g.pair).collect()
    }

    /// Lookup from an unordered pair to its link, for annotating sequences.
    pub fn link_of_pair(&self) -> BTreeMap<(AtomVar, AtomVar), (NodeId, NodeKind)> {
        let mut out = BTreeMap::new();
        for g in &self.entries {
            let key = canonical_pair(g.pair.0, g.pair.1);
            out.insert(key, (g.link, g.kind));
        }
        out
    }
}

fn canonical_pair(a: AtomVar, b: AtomVar) -> (AtomVar, AtomVar) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn edge_vars(net: &ProofStructure, e: EdgeId) -> Vec<AtomVar> {
    let n = net.edge(e).map(|e| e.formula.atom_len()).unwrap_or(0);
    (0..n).map(|i| AtomVar::new(e, i as u32)).collect()
}

/// How axiom/cut pairings may be corrupted for mutation testing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sabotage {
    #[default]
    None,
    /// Pair position `i` with position `i` instead of `n+1−i` on the first
    /// axiom link with a compound conclusion (falling back to the first
    /// compound cut). Changes the generated ideal on any such net.
    MispairFirstCompoundAxiom,
}

/// The generators of every link: dual-pair matching for axiom and cut links,
/// premise-to-conclusion matching for tensor and par links.
pub fn link_generators(net: &ProofStructure) -> GeneratorSet {
    link_generators_with(net, Sabotage::None).expect("sabotage disabled")
}

pub fn link_generators_with(
    net: &ProofStructure,
    sabotage: Sabotage,
) -> Result<GeneratorSet, IdealError> {
    let mut victim: Option<NodeId> = None;
    if sabotage == Sabotage::MispairFirstCompoundAxiom {
        let compound = |edges: Vec<&crate::proofnet::Edge>| {
            edges.first().map(|e| e.formula.atom_len() >= 2).unwrap_or(false)
        };
        victim = net
            .links()
            .into_iter()
            .find(|(id, k)| *k == NodeKind::Ax && compound(net.conclusions_of(*id)))
            .or_else(|| {
                net.links()
                    .into_iter()
                    .find(|(id, k)| *k == NodeKind::Cut && compound(net.premises_of(*id)))
            })
            .map(|(id, _)| id);
        if victim.is_none() {
            return Err(IdealError::NothingToSabotage);
        }
    }

    let mut out = GeneratorSet::default();
    for (link, kind) in net.links() {
        match kind {
            NodeKind::Ax | NodeKind::Cut => {
                let edges = if kind == NodeKind::Ax {
                    net.conclusions_of(link)
                } else {
                    net.premises_of(link)
                };
                if edges.len() != 2 {
                    continue;
                }
                let mut ids: Vec<EdgeId> = edges.iter().map(|e| e.id).collect();
                ids.sort();
                let (primary, secondary) = (ids[0], ids[1]);
                let a = edge_vars(net, primary);
                let b = edge_vars(net, secondary);
                let n = a.len();
                debug_assert_eq!(n, b.len());
                for i in 0..n {
                    let j = if victim == Some(link) { i } else { n - 1 - i };
                    out.entries.push(Generator {
                        poly: Polynomial::difference(a[i], b[j]),
                        pair: (a[i], b[j]),
                        link,
                        kind,
                    });
                }
            }
            NodeKind::Tensor | NodeKind::Par => {
                let prem = net.premises_of(link);
                let concl = net.conclusions_of(link);
                if prem.len() != 2 || concl.len() != 1 {
                    continue;
                }
                let left = edge_vars(net, prem[0].id);
                let right = edge_vars(net, prem[1].id);
                let conc = edge_vars(net, concl[0].id);
                debug_assert_eq!(conc.len(), left.len() + right.len());
                for (i, v) in left.iter().enumerate() {
                    out.entries.push(Generator {
                        poly: Polynomial::difference(*v, conc[i]),
                        pair: (*v, conc[i]),
                        link,
                        kind,
                    });
                }
                for (j, v) in right.iter().enumerate() {
                    out.entries.push(Generator {
                        poly: Polynomial::difference(*v, conc[left.len() + j]),
                        pair: (*v, conc[left.len() + j]),
                        link,
                        kind,
                    });
                }
            }
            NodeKind::Concl => {}
        }
    }
    Ok(out)
}

/// The symmetric adjacency `U ∼ V`, deduplicated and canonically ordered.
pub fn sim_relation(net: &ProofStructure) -> Vec<(AtomVar, AtomVar)> {
    sim_relation_of(&link_generators(net))
}

pub fn sim_relation_of(gens: &GeneratorSet) -> Vec<(AtomVar, AtomVar)> {
    let set: BTreeSet<(AtomVar, AtomVar)> = gens
        .entries
        .iter()
        .map(|g| canonical_pair(g.pair.0, g.pair.1))
        .collect();
    set.into_iter().collect()
}

/// The conclusion edge of a single-conclusion structure.
pub fn conclusion_edge(net: &ProofStructure) -> Result<EdgeId, IdealError> {
    let concs = net.conclusion_edges();
    match concs.len() {
        0 => Err(IdealError::NoConclusion),
        1 => Ok(concs[0].id),
        n => Err(IdealError::MultiConclusion(n)),
    }
}

/// Conclusion atoms split by sign, in order of appearance in the conclusion
/// formula. Returned as (positives, negatives).
fn conclusion_atoms(net: &ProofStructure) -> Result<(Vec<AtomVar>, Vec<AtomVar>), IdealError> {
    let e = conclusion_edge(net)?;
    let formula = &net.edge(e).unwrap().formula;
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (i, atom) in atom_sequence(formula).iter().enumerate() {
        let v = AtomVar::new(e, i as u32);
        match atom.sign {
            Sign::Pos => pos.push(v),
            Sign::Neg => neg.push(v),
        }
    }
    Ok((pos, neg))
}

/// Persistent paths with their link provenance.
#[derive(Debug, Clone)]
pub struct Paths {
    /// Each path runs from a negative conclusion atom to a positive one,
    /// ordered by the position of the final atom in the conclusion.
    pub paths: Vec<Vec<AtomVar>>,
    /// Link behind each adjacent pair, keyed by canonical pair.
    pub pair_links: BTreeMap<(AtomVar, AtomVar), (NodeId, NodeKind)>,
}

/// The persistent paths of a single-conclusion proof net: the `≈`-classes
/// traversed from each negative conclusion atom.
pub fn persistent_paths(net: &ProofStructure) -> Result<Paths, IdealError> {
    persistent_paths_of(net, &link_generators(net))
}

pub fn persistent_paths_of(
    net: &ProofStructure,
    gens: &GeneratorSet,
) -> Result<Paths, IdealError> {
    let (positives, negatives) = conclusion_atoms(net)?;
    if positives.len() != negatives.len() {
        return Err(IdealError::PathStructure(format!(
            "conclusion has {} positive but {} negative atoms",
            positives.len(),
            negatives.len()
        )));
    }
    let mut adjacency: BTreeMap<AtomVar, Vec<AtomVar>> = BTreeMap::new();
    for g in &gens.entries {
        adjacency.entry(g.pair.0).or_default().push(g.pair.1);
        adjacency.entry(g.pair.1).or_default().push(g.pair.0);
    }
    let positive_set: BTreeSet<AtomVar> = positives.iter().copied().collect();

    let mut paths = Vec::new();
    let mut seen: BTreeSet<AtomVar> = BTreeSet::new();
    for start in &negatives {
        let mut path = vec![*start];
        seen.insert(*start);
        let mut prev: Option<AtomVar> = None;
        let mut cur = *start;
        loop {
            let nbrs = adjacency.get(&cur).cloned().unwrap_or_default();
            let mut candidates: Vec<AtomVar> = Vec::new();
            let mut skipped_prev = false;
            for n in nbrs {
                if Some(n) == prev && !skipped_prev {
                    skipped_prev = true;
                    continue;
                }
                candidates.push(n);
            }
            candidates.dedup();
            match candidates.len() {
                0 => break,
                1 => {
                    let next = candidates[0];
                    if seen.contains(&next) {
                        return Err(IdealError::PathStructure(format!(
                            "atom {next} revisited while walking from {start}"
                        )));
                    }
                    seen.insert(next);
                    path.push(next);
                    prev = Some(cur);
                    cur = next;
                }
                _ => {
                    return Err(IdealError::PathStructure(format!(
                        "atom {cur} has more than two neighbours"
                    )));
                }
            }
        }
        let last = *path.last().unwrap();
        if !positive_set.contains(&last) {
            return Err(IdealError::PathStructure(format!(
                "path from {start} ends at {last}, which is not a positive conclusion atom"
            )));
        }
        paths.push(path);
    }

    let all: BTreeSet<AtomVar> = net.atom_vars().into_iter().collect();
    let covered: BTreeSet<AtomVar> = paths.iter().flatten().copied().collect();
    if covered != all {
        let missing: Vec<String> = all.difference(&covered).take(4).map(|v| v.to_string()).collect();
        return Err(IdealError::PathStructure(format!(
            "atoms not on any conclusion-to-conclusion path: {}",
            missing.join(", ")
        )));
    }

    // order by position of the final (positive) atom in the conclusion
    let pos_index: BTreeMap<AtomVar, usize> =
        positives.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    paths.sort_by_key(|p| pos_index[p.last().unwrap()]);
    Ok(Paths { paths, pair_links: gens.link_of_pair() })
}

/// Endpoint data of the paths: positive atoms `U`, negative atoms `V`, and
/// the permutation with `σ(i) = j` when the path ending at `U_i` starts at
/// `V_j`. Generators `U_i − V_{σ(i)}` span the boundary ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryData {
    pub positives: Vec<AtomVar>,
    pub negatives: Vec<AtomVar>,
    pub sigma: Vec<usize>,
}

impl BoundaryData {
    pub fn generators(&self) -> Vec<Polynomial> {
        (0..self.sigma.len())
            .map(|i| Polynomial::difference(self.positives[i], self.negatives[self.sigma[i]]))
            .collect()
    }

    /// The involution on conclusion-atom positions induced by σ.
    pub fn position_involution(&self, net: &ProofStructure) -> Result<Vec<usize>, IdealError> {
        let e = conclusion_edge(net)?;
        let len = net.edge(e).unwrap().formula.atom_len();
        let idx = |v: &AtomVar| v.index as usize;
        let mut inv: Vec<usize> = (0..len).collect();
        for i in 0..self.sigma.len() {
            let u = idx(&self.positives[i]);
            let v = idx(&self.negatives[self.sigma[i]]);
            inv[u] = v;
            inv[v] = u;
        }
        Ok(inv)
    }
}

pub fn boundary(net: &ProofStructure) -> Result<BoundaryData, IdealError> {
    boundary_of(net, &persistent_paths(net)?)
}

pub fn boundary_of(net: &ProofStructure, paths: &Paths) -> Result<BoundaryData, IdealError> {
    let (positives, negatives) = conclusion_atoms(net)?;
    let neg_index: BTreeMap<AtomVar, usize> =
        negatives.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut sigma = Vec::with_capacity(paths.paths.len());
    for (i, p) in paths.paths.iter().enumerate() {
        debug_assert_eq!(p.last(), Some(&positives[i]));
        let start = p.first().ok_or_else(|| {
            IdealError::PathStructure("empty persistent path".into())
        })?;
        let j = neg_index.get(start).ok_or_else(|| {
            IdealError::PathStructure(format!("path start {start} is not a negative conclusion atom"))
        })?;
        sigma.push(*j);
    }
    Ok(BoundaryData { positives, negatives, sigma })
}

/// `<₀`: rank by position in the concatenated persistent paths.
pub fn order_zero(net: &ProofStructure) -> Result<VarOrder, IdealError> {
    Ok(order_zero_of(&persistent_paths(net)?))
}

pub fn order_zero_of(paths: &Paths) -> VarOrder {
    let ranked: Vec<AtomVar> = paths.paths.iter().flatten().copied().collect();
    VarOrder::new(ranked).expect("paths partition the variables")
}

/// `<_Γ`: surviving variables first in path order, then the eliminated
/// variables in path order. The survivors are the image of the composite
/// variable map of the reduction sequence.
pub fn order_gamma(net: &ProofStructure, map: &VarMap) -> Result<VarOrder, IdealError> {
    order_gamma_of(&persistent_paths(net)?, map)
}

pub fn order_gamma_of(paths: &Paths, map: &VarMap) -> Result<VarOrder, IdealError> {
    let survivors = map.survivors();
    let mut low = Vec::new();
    let mut high = Vec::new();
    for p in &paths.paths {
        low.extend(p.iter().filter(|v| survivors.contains(v)).copied());
    }
    for p in &paths.paths {
        high.extend(p.iter().filter(|v| !survivors.contains(v)).copied());
    }
    if high.is_empty() {
        return Err(IdealError::EmptyElimination);
    }
    low.extend(high);
    VarOrder::new(low).map_err(|e| IdealError::Order(e.to_string()))
}

/// Whether the unique maximal directed path from the variable's edge ends at
/// a conclusion (as opposed to a cut).
pub fn above_conclusion(net: &ProofStructure, v: AtomVar) -> bool {
    let mut edge = v.edge;
    loop {
        let Some(e) = net.edge(edge) else { return false };
        match net.node_kind(e.dst) {
            Some(NodeKind::Concl) => return true,
            Some(NodeKind::Cut) => return false,
            Some(NodeKind::Tensor) | Some(NodeKind::Par) => {
                let concs = net.conclusions_of(e.dst);
                let Some(next) = concs.first() else { return false };
                edge = next.id;
            }
            _ => return false,
        }
    }
}

/// Per-path split into the above-conclusion prefix, the above-cut block, and
/// the above-conclusion suffix. For paths that traverse no cut the split
/// point is the unique axiom crossing.
fn split_path(
    net: &ProofStructure,
    paths: &Paths,
    path: &[AtomVar],
) -> Result<(Vec<AtomVar>, Vec<AtomVar>, Vec<AtomVar>), IdealError> {
    let above: Vec<bool> = path.iter().map(|v| above_conclusion(net, *v)).collect();
    if above.iter().all(|b| *b) {
        let mut crossing = None;
        for i in 0..path.len() - 1 {
            let key = canonical_pair(path[i], path[i + 1]);
            if let Some((_, NodeKind::Ax)) = paths.pair_links.get(&key) {
                if crossing.is_some() {
                    return Err(IdealError::PathStructure(
                        "cut-free path crosses more than one axiom".into(),
                    ));
                }
                crossing = Some(i);
            }
        }
        let i = crossing.ok_or_else(|| {
            IdealError::PathStructure("cut-free path crosses no axiom".into())
        })?;
        return Ok((path[..=i].to_vec(), Vec::new(), path[i + 1..].to_vec()));
    }
    let t1 = above.iter().position(|b| !*b).unwrap();
    let t2 = above.iter().rposition(|b| !*b).unwrap();
    if above[t1..=t2].iter().any(|b| *b) {
        return Err(IdealError::PathStructure(
            "above-cut atoms do not form a contiguous block".into(),
        ));
    }
    Ok((
        path[..t1].to_vec(),
        path[t1..=t2].to_vec(),
        path[t2 + 1..].to_vec(),
    ))
}

/// 0-based indices bracketing the above-cut block of a path, when present.
pub fn above_cut_span(
    net: &ProofStructure,
    path: &[AtomVar],
) -> Option<(usize, usize)> {
    let above: Vec<bool> = path.iter().map(|v| above_conclusion(net, *v)).collect();
    let t1 = above.iter().position(|b| !*b)?;
    let t2 = above.iter().rposition(|b| !*b)?;
    Some((t1, t2))
}

/// `<_n`: per path, the reversed above-conclusion prefix, then the suffix,
/// then the reversed above-cut block.
pub fn order_n(net: &ProofStructure) -> Result<VarOrder, IdealError> {
    order_n_of(net, &persistent_paths(net)?)
}

pub fn order_n_of(net: &ProofStructure, paths: &Paths) -> Result<VarOrder, IdealError> {
    let mut ranked = Vec::new();
    for path in &paths.paths {
        let (q1, block, q2) = split_path(net, paths, path)?;
        ranked.extend(q1.iter().rev().copied());
        ranked.extend(q2.iter().copied());
        ranked.extend(block.iter().rev().copied());
    }
    VarOrder::new(ranked).map_err(|e| IdealError::Order(e.to_string()))
}

/// The oriented adjacency graph `𝒮` under an order, with x-positions given
/// by path concatenation.
pub fn sim_graph(net: &ProofStructure, order: &VarOrder) -> Result<OrderedGraph, IdealError> {
    sim_graph_of(net, &link_generators(net), order)
}

pub fn sim_graph_of(
    net: &ProofStructure,
    gens: &GeneratorSet,
    order: &VarOrder,
) -> Result<OrderedGraph, IdealError> {
    let x_order: Vec<AtomVar> = match persistent_paths_of(net, gens) {
        Ok(paths) => paths.paths.iter().flatten().copied().collect(),
        Err(_) => order.vars().to_vec(),
    };
    Ok(roofgraph::graph_from_relation(
        &x_order,
        order,
        &sim_relation_of(gens),
    )?)
}

/// The generator sequence `G^(<)`: difference binomials of the edges of `𝒮`
/// in edge order (high minus low).
pub fn generator_sequence(
    net: &ProofStructure,
    order: &VarOrder,
) -> Result<Vec<Polynomial>, IdealError> {
    Ok(sim_graph(net, order)?.binomials())
}

pub fn generator_sequence_of(
    net: &ProofStructure,
    gens: &GeneratorSet,
    order: &VarOrder,
) -> Result<Vec<Polynomial>, IdealError> {
    Ok(sim_graph_of(net, gens, order)?.binomials())
}

/// Combine the conclusions of a multi-conclusion structure with
/// left-associated pars, in conclusion-node id order.
pub fn combine_conclusions(net: &ProofStructure) -> Result<ProofStructure, IdealError> {
    let concl_nodes: Vec<NodeId> = net
        .nodes()
        .filter(|(_, k)| *k == NodeKind::Concl)
        .map(|(id, _)| id)
        .collect();
    if concl_nodes.len() < 2 {
        return Err(IdealError::MultiConclusion(concl_nodes.len()));
    }
    let mut out = net.clone();
    loop {
        let mut concls: Vec<NodeId> = out
            .nodes()
            .filter(|(_, k)| *k == NodeKind::Concl)
            .map(|(id, _)| id)
            .collect();
        if concls.len() == 1 {
            return Ok(out);
        }
        concls.sort();
        let (c1, c2) = (concls[0], concls[1]);
        let e1 = out.premises_of(c1)[0].id;
        let e2 = out.premises_of(c2)[0].id;
        let f1 = out.edge(e1).unwrap().formula.clone();
        let f2 = out.edge(e2).unwrap().formula.clone();
        out.remove_node_raw(c1);
        out.remove_node_raw(c2);
        let par = out.add_node(NodeKind::Par);
        out.retarget_edge(e1, par, crate::proofnet::PremisePos::Left);
        out.retarget_edge(e2, par, crate::proofnet::PremisePos::Right);
        let c = out.add_node(NodeKind::Concl);
        out.add_edge(
            par,
            c,
            crate::formulas::Formula::par(f1, f2),
            crate::proofnet::PremisePos::Only,
        );
    }
}

/// Human-readable variable names `X1..Xn` by `<₀` rank; falls back to raw
/// edge/index names when the structure has no path decomposition.
pub fn variable_names(net: &ProofStructure) -> BTreeMap<AtomVar, String> {
    let mut out = BTreeMap::new();
    if let Ok(order) = order_zero(net) {
        for (i, v) in order.vars().iter().enumerate() {
            out.insert(*v, format!("X{}", i + 1));
        }
    }
    for v in net.atom_vars() {
        out.entry(v).or_insert_with(|| v.to_string());
    }
    out
}

pub fn namer(net: &ProofStructure) -> impl Fn(&AtomVar) -> String {
    let names = variable_names(net);
    move |v: &AtomVar| names.get(v).cloned().unwrap_or_else(|| v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{
        buchberger_standard, is_groebner, is_minimal_groebner, reduced_basis, Basis,
    };
    use crate::polyring::divide_standard;
    use crate::proofnet::{find_redexes, normalize, reduce, translate};
    use crate::roofgraph::{cut_top, falling_roofs};
    use crate::verify::fixtures;

    /// Variables of the canonical detour named by path position (1-based).
    fn detour_vars() -> (ProofStructure, Vec<AtomVar>) {
        let net = translate(&fixtures::canonical_detour_proof()).unwrap();
        let paths = persistent_paths(&net).unwrap();
        assert_eq!(paths.paths.len(), 1);
        (net.clone(), paths.paths[0].clone())
    }

    #[test]
    fn smallest_net_generators() {
        // G_ax = {X − X'}, G_par = {X − X''', X' − X''}
        let net = translate(&fixtures::smallest_proof()).unwrap();
        let gens = link_generators(&net);
        assert_eq!(gens.entries.len(), 3);
        let ax: Vec<_> = gens.entries.iter().filter(|g| g.kind == NodeKind::Ax).collect();
        assert_eq!(ax.len(), 1);
        let par: Vec<_> = gens.entries.iter().filter(|g| g.kind == NodeKind::Par).collect();
        assert_eq!(par.len(), 2);
        // the axiom pairs the two atomic conclusion edges
        let (a, b) = ax[0].pair;
        assert_ne!(a.edge, b.edge);
    }

    #[test]
    fn ax_cut_loop_generators_coincide() {
        let net = fixtures::ax_cut_loop();
        let gens = link_generators(&net);
        assert_eq!(gens.entries.len(), 2);
        let pair0 = canonical_pair(gens.entries[0].pair.0, gens.entries[0].pair.1);
        let pair1 = canonical_pair(gens.entries[1].pair.0, gens.entries[1].pair.1);
        assert_eq!(pair0, pair1, "axiom and cut identify the same atoms");
        assert_eq!(sim_relation(&net).len(), 1);
        // every ≈-class misses the (nonexistent) conclusion: rejected
        assert!(persistent_paths(&net).is_err());
    }

    #[test]
    fn empty_structure_has_no_generators() {
        let net = ProofStructure::new();
        assert!(link_generators(&net).entries.is_empty());
        assert!(sim_relation(&net).is_empty());
    }

    #[test]
    fn smallest_net_path() {
        let net = translate(&fixtures::smallest_proof()).unwrap();
        let paths = persistent_paths(&net).unwrap();
        assert_eq!(paths.paths.len(), 1);
        let p = &paths.paths[0];
        assert_eq!(p.len(), 4);
        // starts at the negative conclusion atom, ends at the positive one
        let e = conclusion_edge(&net).unwrap();
        assert_eq!(p[0], AtomVar::new(e, 0));
        assert_eq!(p[3], AtomVar::new(e, 1));
        // boundary: σ = id on one element, generator X''' − X''
        let b = boundary(&net).unwrap();
        assert_eq!(b.sigma, vec![0]);
        assert_eq!(
            b.generators(),
            vec![Polynomial::difference(AtomVar::new(e, 1), AtomVar::new(e, 0))]
        );
    }

    #[test]
    fn detour_path_structure() {
        let (net, path) = detour_vars();
        assert_eq!(path.len(), 12);
        let b = boundary(&net).unwrap();
        assert_eq!(b.sigma, vec![0]);
        assert_eq!(b.positives, vec![path[11]]);
        assert_eq!(b.negatives, vec![path[0]]);
        // order_zero ranks variables by path position
        let o = order_zero(&net).unwrap();
        assert_eq!(o.vars(), &path[..]);
    }

    #[test]
    fn tensor_of_identities_has_two_paths_and_identity_sigma() {
        let net = fixtures::tensor_of_identities();
        let paths = persistent_paths(&net).unwrap();
        assert_eq!(paths.paths.len(), 2);
        let b = boundary(&net).unwrap();
        assert_eq!(b.sigma, vec![0, 1]);
    }

    #[test]
    fn multi_conclusion_is_rejected_and_combinable() {
        let net = translate(&fixtures::lambda_xx_proof()).unwrap();
        assert_eq!(net.conclusion_edges().len(), 2);
        assert!(matches!(
            persistent_paths(&net),
            Err(IdealError::MultiConclusion(2))
        ));
        let combined = combine_conclusions(&net).unwrap();
        assert_eq!(combined.conclusion_edges().len(), 1);
        assert!(combined.is_proof_structure());
        assert!(persistent_paths(&combined).is_ok());
        // single conclusion rejected
        assert!(matches!(
            combine_conclusions(&combined),
            Err(IdealError::MultiConclusion(1))
        ));
    }

    #[test]
    fn generators_have_distinct_leading_monomials_under_order_zero() {
        let (net, _) = detour_vars();
        let o = order_zero(&net).unwrap();
        let gens = generator_sequence(&net, &o).unwrap();
        let mut lms = BTreeSet::new();
        for g in &gens {
            let lm = crate::polyring::leading(g, &o).unwrap().monomial;
            assert!(lms.insert(lm), "duplicate leading monomial in G^(0)");
        }
    }

    #[test]
    fn g0_is_a_minimal_groebner_basis() {
        for net in [
            translate(&fixtures::smallest_proof()).unwrap(),
            translate(&fixtures::canonical_detour_proof()).unwrap(),
            fixtures::tensor_of_identities(),
        ] {
            let o = order_zero(&net).unwrap();
            let g0 = generator_sequence(&net, &o).unwrap();
            let basis = Basis::new(g0, o);
            assert!(is_groebner(&basis).unwrap());
            assert!(is_minimal_groebner(&basis).unwrap());
        }
    }

    #[test]
    fn g_gamma_equals_g_pi_up_to_signs() {
        let (net, _) = detour_vars();
        let redexes = find_redexes(&net);
        let (_, map) = reduce(&net, &redexes[0]).unwrap();
        let o = order_gamma(&net, &map).unwrap();
        let seq = generator_sequence(&net, &o).unwrap();
        let flat = link_generators(&net).polynomials();
        let norm = |p: &Polynomial| {
            let (a, b) = p.as_difference().expect("difference binomial");
            canonical_pair(a, b)
        };
        let s1: BTreeSet<_> = seq.iter().map(norm).collect();
        let s2: BTreeSet<_> = flat.iter().map(norm).collect();
        assert_eq!(s1, s2);
        assert_eq!(seq.len(), flat.len());
    }

    #[test]
    fn detour_order_gamma_and_sequence_match_known_values() {
        let (net, x) = detour_vars();
        let xi = |i: usize| x[i - 1]; // 1-based like the written example
        let redexes = find_redexes(&net);
        let (_, map) = reduce(&net, &redexes[0]).unwrap();
        let o = order_gamma(&net, &map).unwrap();
        let expected_order: Vec<AtomVar> = [1, 2, 3, 6, 7, 10, 11, 12, 4, 5, 8, 9]
            .iter()
            .map(|i| xi(*i))
            .collect();
        assert_eq!(o.vars(), &expected_order[..]);

        let seq = generator_sequence(&net, &o).unwrap();
        let d = |a: usize, b: usize| Polynomial::difference(xi(a), xi(b));
        let expected = vec![
            d(2, 1),
            d(3, 2),
            d(7, 6),
            d(11, 10),
            d(12, 11),
            d(4, 3),
            d(5, 6),
            d(5, 4),
            d(8, 7),
            d(9, 10),
            d(9, 8),
        ];
        assert_eq!(seq, expected);
    }

    #[test]
    fn detour_order_n_matches_known_values() {
        let (net, x) = detour_vars();
        let xi = |i: usize| x[i - 1];
        let o = order_n(&net).unwrap();
        let expected: Vec<AtomVar> = [2, 1, 11, 12, 10, 9, 8, 7, 6, 5, 4, 3]
            .iter()
            .map(|i| xi(*i))
            .collect();
        assert_eq!(o.vars(), &expected[..]);
    }

    #[test]
    fn detour_above_conclusion_classification() {
        let (net, x) = detour_vars();
        for (i, v) in x.iter().enumerate() {
            let expected = matches!(i + 1, 1 | 2 | 11 | 12);
            assert_eq!(above_conclusion(&net, *v), expected, "X{}", i + 1);
        }
        let span = above_cut_span(&net, &x).unwrap();
        assert_eq!(span, (2, 9), "above-cut block is X3..X10");
    }

    #[test]
    fn order_n_on_cut_free_net_splits_at_the_axiom() {
        let net = translate(&fixtures::smallest_proof()).unwrap();
        let paths = persistent_paths(&net).unwrap();
        let p = &paths.paths[0];
        let o = order_n(&net).unwrap();
        // path (v0, v1, v2, v3) crosses the axiom between v1 and v2:
        // (Q¹)ᵒᵖ, Q² = v1, v0, v2, v3
        let expected = vec![p[1], p[0], p[2], p[3]];
        assert_eq!(o.vars(), &expected[..]);
    }

    #[test]
    fn order_gamma_rejects_empty_elimination() {
        let net = translate(&fixtures::smallest_proof()).unwrap();
        let map = crate::proofnet::VarMap::identity(&net);
        assert!(matches!(
            order_gamma(&net, &map),
            Err(IdealError::EmptyElimination)
        ));
    }

    #[test]
    fn sim_vs_ideal_membership() {
        // U ≈ V iff U − V lies in the ideal generated by G_π
        let (net, x) = detour_vars();
        let fallback = VarOrder::new(net.atom_vars()).unwrap();
        let flat = link_generators(&net).polynomials();
        let basis = reduced_basis(&buchberger_standard(&flat, &fallback).unwrap()).unwrap();
        // all variables sit on one path: every difference is a member
        let f = Polynomial::difference(x[0], x[11]);
        assert!(divide_standard(&f, &basis.polys, &fallback).unwrap().remainder.is_zero());

        // two disjoint paths: differences across paths are not members
        let net2 = fixtures::tensor_of_identities();
        let paths2 = persistent_paths(&net2).unwrap();
        let a = paths2.paths[0][0];
        let b = paths2.paths[1][0];
        let flat2 = link_generators(&net2).polynomials();
        let fb2 = VarOrder::new(net2.atom_vars()).unwrap();
        let basis2 = reduced_basis(&buchberger_standard(&flat2, &fb2).unwrap()).unwrap();
        let g = Polynomial::difference(a, b);
        assert!(!divide_standard(&g, &basis2.polys, &fb2).unwrap().remainder.is_zero());
    }

    #[test]
    fn sep_by_equiv_under_reduction() {
        // U ≈ V in the reduct iff the embedded variables are ≈ in the source
        let (net, _) = detour_vars();
        let redexes = find_redexes(&net);
        let (net2, map) = reduce(&net, &redexes[0]).unwrap();
        let paths = persistent_paths(&net).unwrap();
        let paths2 = persistent_paths(&net2).unwrap();
        let class = |paths: &Paths, v: AtomVar| {
            paths.paths.iter().position(|p| p.contains(&v)).unwrap()
        };
        let vars2 = net2.atom_vars();
        for a in &vars2 {
            for b in &vars2 {
                let same2 = class(&paths2, *a) == class(&paths2, *b);
                let same1 = class(&paths, map.apply_t(*a).unwrap())
                    == class(&paths, map.apply_t(*b).unwrap());
                assert_eq!(same1, same2);
            }
        }
    }

    #[test]
    fn boundary_theorem_via_cut_top() {
        // order with V < U < W: falling roofs then cut at |U ∪ V| gives
        // exactly the boundary generators
        for net in [
            translate(&fixtures::smallest_proof()).unwrap(),
            translate(&fixtures::canonical_detour_proof()).unwrap(),
            fixtures::tensor_of_identities(),
        ] {
            let b = boundary(&net).unwrap();
            let paths = persistent_paths(&net).unwrap();
            let mut ranked = Vec::new();
            // per path: start (negative), then end (positive), keeps the low
            // block increasing by appearance; interiors afterwards
            for p in &paths.paths {
                ranked.push(p[0]);
                ranked.push(*p.last().unwrap());
            }
            for p in &paths.paths {
                ranked.extend(p[1..p.len() - 1].iter().copied());
            }
            let order = VarOrder::new(ranked).unwrap();
            let graph = sim_graph(&net, &order).unwrap();
            let n = falling_roofs(&graph).unwrap();
            let low: BTreeSet<AtomVar> = b
                .positives
                .iter()
                .chain(b.negatives.iter())
                .copied()
                .collect();
            let cut = cut_top(&n, &low).unwrap();
            let expected: BTreeSet<Polynomial> = b.generators().into_iter().collect();
            assert_eq!(cut.into_iter().collect::<BTreeSet<_>>(), expected);
        }
    }

    #[test]
    fn sabotage_changes_the_relation_on_compound_links() {
        let net = fixtures::compound_axiom_net();
        let honest = link_generators(&net);
        let broken = link_generators_with(&net, Sabotage::MispairFirstCompoundAxiom).unwrap();
        assert_ne!(sim_relation_of(&honest), sim_relation_of(&broken));
        // atomic-only nets cannot be sabotaged
        let plain = translate(&fixtures::smallest_proof()).unwrap();
        assert!(matches!(
            link_generators_with(&plain, Sabotage::MispairFirstCompoundAxiom),
            Err(IdealError::NothingToSabotage)
        ));
    }

    #[test]
    fn variable_names_follow_path_positions() {
        let (net, x) = detour_vars();
        let names = variable_names(&net);
        assert_eq!(names[&x[0]], "X1");
        assert_eq!(names[&x[11]], "X12");
    }
}
