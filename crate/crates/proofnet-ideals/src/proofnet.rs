//! Proof structures, sequent proofs and their translation, cut reduction
//! with the induced variable maps, normalization, and η-expansion.
//!
//! A proof structure is a directed multigraph with typed links. Node and edge
//! ids are dense integers assigned by translation; reduction keeps the ids of
//! surviving edges and retires eliminated ones, so variable maps across a
//! reduction sequence compose literally.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulas::{self, Formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodeId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    Ax,
    Cut,
    Tensor,
    Par,
    Concl,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Ax => "ax",
            NodeKind::Cut => "cut",
            NodeKind::Tensor => "tensor",
            NodeKind::Par => "par",
            NodeKind::Concl => "concl",
        }
    }

    pub fn from_str(s: &str) -> Option<NodeKind> {
        Some(match s {
            "ax" => NodeKind::Ax,
            "cut" => NodeKind::Cut,
            "tensor" => NodeKind::Tensor,
            "par" => NodeKind::Par,
            "concl" => NodeKind::Concl,
            _ => return None,
        })
    }
}

/// Position of an edge among the premises of its target node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PremisePos {
    Left,
    Right,
    Only,
}

impl PremisePos {
    pub fn as_str(self) -> &'static str {
        match self {
            PremisePos::Left => "left",
            PremisePos::Right => "right",
            PremisePos::Only => "only",
        }
    }

    pub fn from_str(s: &str) -> Option<PremisePos> {
        Some(match s {
            "left" => PremisePos::Left,
            "right" => PremisePos::Right,
            "only" => PremisePos::Only,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub src: NodeId,
    pub dst: NodeId,
    pub formula: Formula,
    pub pos: PremisePos,
}

/// One unoriented-atom occurrence: a position in the atom sequence of the
/// formula labelling an edge. These are the polynomial variables of a net.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AtomVar {
    pub edge: EdgeId,
    pub index: u32,
}

impl AtomVar {
    pub fn new(edge: EdgeId, index: u32) -> Self {
        AtomVar { edge, index }
    }
}

impl fmt::Display for AtomVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}_{}", self.edge.0, self.index)
    }
}

#[derive(Debug, Error)]
pub enum NetError {
    #[error("malformed {rule} rule: {reason}")]
    MalformedRule { rule: &'static str, reason: String },
    #[error("not a valid proof structure: {0}")]
    InvalidStructure(String),
    #[error("redex is stale: {0}")]
    StaleRedex(String),
    #[error("normalization stuck with cuts remaining (input is not a proof net)")]
    Stuck,
    #[error("formula parse error: {0}")]
    Formula(#[from] formulas::ParseError),
    #[error("bad structure file: {0}")]
    BadFile(String),
}

/// A proof structure: typed nodes and formula-labelled edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProofStructure {
    nodes: BTreeMap<NodeId, NodeKind>,
    edges: BTreeMap<EdgeId, Edge>,
    next_node: u32,
    next_edge: u32,
}

impl ProofStructure {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, kind: NodeKind) -> NodeId {
        let id = NodeId(self.next_node);
        self.next_node += 1;
        self.nodes.insert(id, kind);
        id
    }

    pub fn add_edge(
        &mut self,
        src: NodeId,
        dst: NodeId,
        formula: Formula,
        pos: PremisePos,
    ) -> EdgeId {
        let id = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.edges.insert(id, Edge { id, src, dst, formula, pos });
        id
    }

    /// Insert a node with an explicit id (used by file loading).
    pub fn insert_node_raw(&mut self, id: NodeId, kind: NodeKind) {
        self.nodes.insert(id, kind);
        self.next_node = self.next_node.max(id.0 + 1);
    }

    /// Insert an edge with an explicit id (used by file loading).
    pub fn insert_edge_raw(&mut self, edge: Edge) {
        self.next_edge = self.next_edge.max(edge.id.0 + 1);
        self.edges.insert(edge.id, edge);
    }

    /// Remove a node without touching its edges. The caller restores the
    /// structure invariants.
    pub fn remove_node_raw(&mut self, id: NodeId) {
        self.nodes.remove(&id);
    }

    /// Point an existing edge at a new target with a new premise position.
    pub fn retarget_edge(&mut self, id: EdgeId, dst: NodeId, pos: PremisePos) {
        if let Some(e) = self.edges.get_mut(&id) {
            e.dst = dst;
            e.pos = pos;
        }
    }

    pub fn node_kind(&self, id: NodeId) -> Option<NodeKind> {
        self.nodes.get(&id).copied()
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, NodeKind)> + '_ {
        self.nodes.iter().map(|(id, k)| (*id, *k))
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.values()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.get(&id)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Incoming edges of a node, left premise first.
    pub fn premises_of(&self, node: NodeId) -> Vec<&Edge> {
        let mut v: Vec<&Edge> = self.edges.values().filter(|e| e.dst == node).collect();
        v.sort_by_key(|e| (e.pos, e.id));
        v
    }

    /// Outgoing edges of a node in id order.
    pub fn conclusions_of(&self, node: NodeId) -> Vec<&Edge> {
        self.edges.values().filter(|e| e.src == node).collect()
    }

    /// Edges entering conclusion nodes, in conclusion-node id order.
    pub fn conclusion_edges(&self) -> Vec<&Edge> {
        let mut out = Vec::new();
        for (id, kind) in self.nodes.iter() {
            if *kind == NodeKind::Concl {
                for e in self.premises_of(*id) {
                    out.push(e);
                }
            }
        }
        out
    }

    /// All atom occurrences of the structure, sorted.
    pub fn atom_vars(&self) -> Vec<AtomVar> {
        let mut out = Vec::new();
        for e in self.edges.values() {
            for i in 0..e.formula.atom_len() {
                out.push(AtomVar::new(e.id, i as u32));
            }
        }
        out.sort();
        out
    }

    /// Link nodes (everything except conclusion markers), in id order.
    pub fn links(&self) -> Vec<(NodeId, NodeKind)> {
        self.nodes
            .iter()
            .filter(|(_, k)| **k != NodeKind::Concl)
            .map(|(id, k)| (*id, *k))
            .collect()
    }

    /// Diagnostics for every violated proof-structure invariant; empty when valid.
    pub fn validate(&self) -> Vec<String> {
        let mut errs = Vec::new();
        for e in self.edges.values() {
            if !self.nodes.contains_key(&e.src) {
                errs.push(format!("edge {} has unknown source {}", e.id, e.src));
            }
            if !self.nodes.contains_key(&e.dst) {
                errs.push(format!("edge {} has unknown target {}", e.id, e.dst));
            }
        }
        if !errs.is_empty() {
            return errs;
        }
        for (&id, &kind) in self.nodes.iter() {
            let prem = self.premises_of(id);
            let concl = self.conclusions_of(id);
            match kind {
                NodeKind::Ax => {
                    if !prem.is_empty() {
                        errs.push(format!("ax {id} has premises"));
                    }
                    if concl.len() != 2 {
                        errs.push(format!("ax {id} has {} conclusions, expected 2", concl.len()));
                    } else {
                        let (a, b) = (concl[0], concl[1]);
                        if formulas::negate(&a.formula) != b.formula {
                            errs.push(format!(
                                "ax {id} conclusions are not dual: {} vs {}",
                                a.formula, b.formula
                            ));
                        }
                    }
                }
                NodeKind::Cut => {
                    if !concl.is_empty() {
                        errs.push(format!("cut {id} has conclusions"));
                    }
                    if prem.len() != 2 {
                        errs.push(format!("cut {id} has {} premises, expected 2", prem.len()));
                    } else {
                        let (a, b) = (prem[0], prem[1]);
                        if formulas::negate(&a.formula) != b.formula {
                            errs.push(format!(
                                "cut {id} premises are not dual: {} vs {}",
                                a.formula, b.formula
                            ));
                        }
                    }
                }
                NodeKind::Tensor | NodeKind::Par => {
                    if prem.len() != 2 {
                        errs.push(format!("{} {id} has {} premises, expected 2", kind.as_str(), prem.len()));
                        continue;
                    }
                    if concl.len() != 1 {
                        errs.push(format!(
                            "{} {id} has {} conclusions, expected 1",
                            kind.as_str(),
                            concl.len()
                        ));
                        continue;
                    }
                    let (l, r) = (prem[0], prem[1]);
                    if l.pos != PremisePos::Left || r.pos != PremisePos::Right {
                        errs.push(format!("{} {id} premises are not ordered left/right", kind.as_str()));
                        continue;
                    }
                    let expected = match kind {
                        NodeKind::Tensor => Formula::tensor(l.formula.clone(), r.formula.clone()),
                        _ => Formula::par(l.formula.clone(), r.formula.clone()),
                    };
                    if concl[0].formula != expected {
                        errs.push(format!(
                            "{} {id} conclusion is {}, expected {}",
                            kind.as_str(),
                            concl[0].formula,
                            expected
                        ));
                    }
                }
                NodeKind::Concl => {
                    if prem.len() != 1 {
                        errs.push(format!("concl {id} has {} premises, expected 1", prem.len()));
                    }
                    if !concl.is_empty() {
                        errs.push(format!("concl {id} has outgoing edges"));
                    }
                }
            }
        }
        errs
    }

    pub fn is_proof_structure(&self) -> bool {
        self.validate().is_empty()
    }

    /// Sum over cut links of the weight of the cut formula.
    pub fn weight(&self) -> usize {
        self.nodes
            .iter()
            .filter(|(_, k)| **k == NodeKind::Cut)
            .map(|(id, _)| {
                self.premises_of(*id)
                    .first()
                    .map(|e| e.formula.weight())
                    .unwrap_or(0)
            })
            .sum()
    }

    /// Structure identity modulo node-id renaming: edges keep their ids under
    /// reduction but fresh link nodes do not, so confluence comparisons use
    /// this key.
    pub fn canonical_key(&self) -> String {
        let mut relabel: BTreeMap<NodeId, usize> = BTreeMap::new();
        let mut next = 0usize;
        let mut lookup = |n: NodeId, relabel: &mut BTreeMap<NodeId, usize>| -> usize {
            *relabel.entry(n).or_insert_with(|| {
                let v = next;
                next += 1;
                v
            })
        };
        let mut parts = Vec::new();
        for e in self.edges.values() {
            let s = lookup(e.src, &mut relabel);
            let d = lookup(e.dst, &mut relabel);
            parts.push(format!(
                "{}:{}->{}:{}:{}",
                e.id.0,
                s,
                d,
                e.formula,
                e.pos.as_str()
            ));
        }
        let mut kinds: Vec<(usize, &'static str)> = relabel
            .iter()
            .map(|(n, i)| (*i, self.nodes[n].as_str()))
            .collect();
        kinds.sort();
        parts.push(kinds.iter().map(|(i, k)| format!("{i}={k}")).collect::<Vec<_>>().join(","));
        parts.join(";")
    }

    /// GraphViz rendering with node shapes by kind and formula edge labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph proofnet {\n");
        out.push_str("    rankdir=TB;\n");
        for (id, kind) in self.nodes.iter() {
            let (shape, label) = match kind {
                NodeKind::Ax => ("ellipse", "ax"),
                NodeKind::Cut => ("diamond", "cut"),
                NodeKind::Tensor => ("box", "&otimes;"),
                NodeKind::Par => ("box", "&#8523;"),
                NodeKind::Concl => ("plaintext", "c"),
            };
            out.push_str(&format!(
                "    n{} [shape={} label=\"{}\"];\n",
                id.0, shape, label
            ));
        }
        for e in self.edges.values() {
            out.push_str(&format!(
                "    n{} -> n{} [label=\"{}\"];\n",
                e.src.0,
                e.dst.0,
                dot_escape(&e.formula.to_string())
            ));
        }
        out.push_str("}\n");
        out
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

// ---------------------------------------------------------------------------
// Sequent proofs and translation
// ---------------------------------------------------------------------------

/// A sequent-calculus proof. Rules consume conclusion occurrences by index
/// (position in the sub-proof's sequent), since formulas may repeat.
///
/// Sequent composition:
/// - `Ax(A)` proves `⊢ ¬A, A`.
/// - `Cut` on `⊢ Γ, A` (occurrence `left_occ`) and `⊢ Δ, ¬A` (`right_occ`)
///   proves `⊢ Γ, Δ`.
/// - `Tensor` on `⊢ Γ, A` and `⊢ B, Δ` proves `⊢ Γ, A ⊗ B, Δ`.
/// - `Par` on `⊢ Γ, A, B` proves `⊢ Γ, A ⅋ B` with `A ⅋ B` appended last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequentProof {
    Ax(Formula),
    Cut {
        left: Box<SequentProof>,
        right: Box<SequentProof>,
        left_occ: usize,
        right_occ: usize,
    },
    Tensor {
        left: Box<SequentProof>,
        right: Box<SequentProof>,
        left_occ: usize,
        right_occ: usize,
    },
    Par {
        sub: Box<SequentProof>,
        occ_a: usize,
        occ_b: usize,
    },
}

impl SequentProof {
    pub fn rule_count(&self) -> usize {
        match self {
            SequentProof::Ax(_) => 1,
            SequentProof::Cut { left, right, .. } | SequentProof::Tensor { left, right, .. } => {
                1 + left.rule_count() + right.rule_count()
            }
            SequentProof::Par { sub, .. } => 1 + sub.rule_count(),
        }
    }

    /// The sequent proved, or an error naming the offending rule.
    pub fn sequent(&self) -> Result<Vec<Formula>, NetError> {
        match self {
            SequentProof::Ax(a) => Ok(vec![formulas::negate(a), a.clone()]),
            SequentProof::Cut { left, right, left_occ, right_occ } => {
                let mut l = left.sequent()?;
                let mut r = right.sequent()?;
                if *left_occ >= l.len() || *right_occ >= r.len() {
                    return Err(NetError::MalformedRule {
                        rule: "cut",
                        reason: format!(
                            "occurrence out of range: {left_occ}/{} or {right_occ}/{}",
                            l.len(),
                            r.len()
                        ),
                    });
                }
                let a = l.remove(*left_occ);
                let na = r.remove(*right_occ);
                if formulas::negate(&a) != na {
                    return Err(NetError::MalformedRule {
                        rule: "cut",
                        reason: format!("premise labels are not dual: {a} vs {na}"),
                    });
                }
                l.extend(r);
                Ok(l)
            }
            SequentProof::Tensor { left, right, left_occ, right_occ } => {
                let mut l = left.sequent()?;
                let mut r = right.sequent()?;
                if *left_occ >= l.len() || *right_occ >= r.len() {
                    return Err(NetError::MalformedRule {
                        rule: "tensor",
                        reason: "occurrence out of range".into(),
                    });
                }
                let a = l.remove(*left_occ);
                let b = r.remove(*right_occ);
                let mut out = l;
                out.push(Formula::tensor(a, b));
                out.extend(r);
                Ok(out)
            }
            SequentProof::Par { sub, occ_a, occ_b } => {
                let s = sub.sequent()?;
                if *occ_a >= s.len() || *occ_b >= s.len() || occ_a == occ_b {
                    return Err(NetError::MalformedRule {
                        rule: "par",
                        reason: format!("bad occurrence pair ({occ_a},{occ_b}) in sequent of {}", s.len()),
                    });
                }
                let a = s[*occ_a].clone();
                let b = s[*occ_b].clone();
                let mut out: Vec<Formula> = s
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| i != occ_a && i != occ_b)
                    .map(|(_, f)| f)
                    .collect();
                out.push(Formula::par(a, b));
                Ok(out)
            }
        }
    }
}

/// Translate a sequent proof into a proof structure, one link per rule.
pub fn translate(p: &SequentProof) -> Result<ProofStructure, NetError> {
    let mut net = ProofStructure::new();
    let pending = translate_into(p, &mut net)?;
    for (src, formula) in pending {
        let c = net.add_node(NodeKind::Concl);
        net.add_edge(src, c, formula, PremisePos::Only);
    }
    debug_assert!(net.is_proof_structure(), "{:?}", net.validate());
    Ok(net)
}

fn translate_into(
    p: &SequentProof,
    net: &mut ProofStructure,
) -> Result<Vec<(NodeId, Formula)>, NetError> {
    match p {
        SequentProof::Ax(a) => {
            let n = net.add_node(NodeKind::Ax);
            Ok(vec![(n, formulas::negate(a)), (n, a.clone())])
        }
        SequentProof::Cut { left, right, left_occ, right_occ } => {
            let mut l = translate_into(left, net)?;
            let mut r = translate_into(right, net)?;
            if *left_occ >= l.len() || *right_occ >= r.len() {
                return Err(NetError::MalformedRule {
                    rule: "cut",
                    reason: "occurrence out of range".into(),
                });
            }
            let (lsrc, lf) = l.remove(*left_occ);
            let (rsrc, rf) = r.remove(*right_occ);
            if formulas::negate(&lf) != rf {
                return Err(NetError::MalformedRule {
                    rule: "cut",
                    reason: format!("premise labels are not dual: {lf} vs {rf}"),
                });
            }
            let c = net.add_node(NodeKind::Cut);
            net.add_edge(lsrc, c, lf, PremisePos::Left);
            net.add_edge(rsrc, c, rf, PremisePos::Right);
            l.extend(r);
            Ok(l)
        }
        SequentProof::Tensor { left, right, left_occ, right_occ } => {
            let mut l = translate_into(left, net)?;
            let mut r = translate_into(right, net)?;
            if *left_occ >= l.len() || *right_occ >= r.len() {
                return Err(NetError::MalformedRule {
                    rule: "tensor",
                    reason: "occurrence out of range".into(),
                });
            }
            let (lsrc, lf) = l.remove(*left_occ);
            let (rsrc, rf) = r.remove(*right_occ);
            let t = net.add_node(NodeKind::Tensor);
            let conc = Formula::tensor(lf.clone(), rf.clone());
            net.add_edge(lsrc, t, lf, PremisePos::Left);
            net.add_edge(rsrc, t, rf, PremisePos::Right);
            let mut out = l;
            out.push((t, conc));
            out.extend(r);
            Ok(out)
        }
        SequentProof::Par { sub, occ_a, occ_b } => {
            let s = translate_into(sub, net)?;
            if *occ_a >= s.len() || *occ_b >= s.len() || occ_a == occ_b {
                return Err(NetError::MalformedRule {
                    rule: "par",
                    reason: "bad occurrence pair".into(),
                });
            }
            let (asrc, af) = s[*occ_a].clone();
            let (bsrc, bf) = s[*occ_b].clone();
            let pn = net.add_node(NodeKind::Par);
            let conc = Formula::par(af.clone(), bf.clone());
            net.add_edge(asrc, pn, af, PremisePos::Left);
            net.add_edge(bsrc, pn, bf, PremisePos::Right);
            let mut out: Vec<(NodeId, Formula)> = s
                .into_iter()
                .enumerate()
                .filter(|(i, _)| i != occ_a && i != occ_b)
                .map(|(_, x)| x)
                .collect();
            out.push((pn, conc));
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------------------
// Redexes and reduction
// ---------------------------------------------------------------------------

/// A reducible subgraph: a cut meeting an axiom through a shared edge, or a
/// tensor and a par meeting at a cut.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Redex {
    /// `outside → cut ← shared ← ax → through`; reduction collapses the three
    /// edges onto `through`.
    A {
        cut: NodeId,
        ax: NodeId,
        shared: EdgeId,
        outside: EdgeId,
        through: EdgeId,
    },
    /// A cut whose premises are a tensor conclusion and a par conclusion.
    M {
        cut: NodeId,
        tensor: NodeId,
        par: NodeId,
        tensor_concl: EdgeId,
        par_concl: EdgeId,
    },
}

impl Redex {
    pub fn kind_str(&self) -> &'static str {
        match self {
            Redex::A { .. } => "a",
            Redex::M { .. } => "m",
        }
    }

    fn min_node(&self) -> NodeId {
        match self {
            Redex::A { cut, ax, .. } => (*cut).min(*ax),
            Redex::M { cut, tensor, par, .. } => (*cut).min(*tensor).min(*par),
        }
    }
}

impl fmt::Display for Redex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Redex::A { cut, ax, .. } => write!(f, "a-redex(cut={cut}, ax={ax})"),
            Redex::M { cut, tensor, par, .. } => {
                write!(f, "m-redex(cut={cut}, tensor={tensor}, par={par})")
            }
        }
    }
}

/// All redexes of the structure, ordered by minimal participating node id.
pub fn find_redexes(net: &ProofStructure) -> Vec<Redex> {
    let mut out = Vec::new();
    for (cut, kind) in net.nodes() {
        if kind != NodeKind::Cut {
            continue;
        }
        let prem = net.premises_of(cut);
        if prem.len() != 2 {
            continue;
        }
        for (i, e) in prem.iter().enumerate() {
            let other = prem[1 - i];
            if net.node_kind(e.src) == Some(NodeKind::Ax) {
                let ax = e.src;
                let concs = net.conclusions_of(ax);
                if concs.len() != 2 {
                    continue;
                }
                let through = if concs[0].id == e.id { concs[1] } else { concs[0] };
                // the closed ax-cut loop has no "outside" edge and is stuck
                if through.id == other.id {
                    continue;
                }
                out.push(Redex::A {
                    cut,
                    ax,
                    shared: e.id,
                    outside: other.id,
                    through: through.id,
                });
            }
        }
        let (a, b) = (prem[0], prem[1]);
        let ka = net.node_kind(a.src);
        let kb = net.node_kind(b.src);
        let tp = match (ka, kb) {
            (Some(NodeKind::Tensor), Some(NodeKind::Par)) => Some((a, b)),
            (Some(NodeKind::Par), Some(NodeKind::Tensor)) => Some((b, a)),
            _ => None,
        };
        if let Some((t, p)) = tp {
            out.push(Redex::M {
                cut,
                tensor: t.src,
                par: p.src,
                tensor_concl: t.id,
                par_concl: p.id,
            });
        }
    }
    out.sort_by_key(|r| (r.min_node(), r.clone()));
    out
}

/// Total variable maps attached to a reduction: `t` embeds the variables of
/// the reduct into the source and `s` retracts, with `s ∘ t = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VarMap {
    pub t: BTreeMap<AtomVar, AtomVar>,
    pub s: BTreeMap<AtomVar, AtomVar>,
}

impl VarMap {
    pub fn identity(net: &ProofStructure) -> VarMap {
        let mut m = VarMap::default();
        for v in net.atom_vars() {
            m.t.insert(v, v);
            m.s.insert(v, v);
        }
        m
    }

    pub fn apply_t(&self, v: AtomVar) -> Option<AtomVar> {
        self.t.get(&v).copied()
    }

    pub fn apply_s(&self, v: AtomVar) -> Option<AtomVar> {
        self.s.get(&v).copied()
    }

    /// Variables of the source that survive into the reduct.
    pub fn survivors(&self) -> BTreeSet<AtomVar> {
        self.t.values().copied().collect()
    }

    /// `first` reduces π to π₁ and `then` reduces π₁ to π₂; the composite maps
    /// between π₂ and π.
    pub fn compose(first: &VarMap, then: &VarMap) -> VarMap {
        let mut t = BTreeMap::new();
        for (v, w) in then.t.iter() {
            t.insert(*v, first.t[w]);
        }
        let mut s = BTreeMap::new();
        for (v, w) in first.s.iter() {
            s.insert(*v, then.s[w]);
        }
        VarMap { t, s }
    }
}

fn edge_atoms(net: &ProofStructure, e: EdgeId) -> Vec<AtomVar> {
    let n = net.edge(e).map(|e| e.formula.atom_len()).unwrap_or(0);
    (0..n).map(|i| AtomVar::new(e, i as u32)).collect()
}

/// Reduce one redex, returning the reduct and the variable maps. Surviving
/// edges keep their ids, so `t` is the literal inclusion.
pub fn reduce(net: &ProofStructure, redex: &Redex) -> Result<(ProofStructure, VarMap), NetError> {
    if !find_redexes(net).contains(redex) {
        return Err(NetError::StaleRedex(redex.to_string()));
    }
    let mut out = net.clone();
    let mut map = VarMap::default();

    match redex {
        Redex::A { cut, ax, shared, outside, through } => {
            let shared_e = net.edge(*shared).unwrap().clone();
            let outside_e = net.edge(*outside).unwrap().clone();
            let through_e = net.edge(*through).unwrap().clone();
            let n = shared_e.formula.atom_len() as u32;

            out.nodes.remove(cut);
            out.nodes.remove(ax);
            out.edges.remove(shared);
            out.edges.remove(outside);
            let kept = out.edges.get_mut(through).unwrap();
            kept.src = outside_e.src;

            for v in out.atom_vars() {
                map.t.insert(v, v);
                map.s.insert(v, v);
            }
            // outside is labelled by the same formula as through; shared is dual
            for (i, v) in edge_atoms(net, outside_e.id).into_iter().enumerate() {
                map.s.insert(v, AtomVar::new(through_e.id, i as u32));
            }
            for (i, v) in edge_atoms(net, shared_e.id).into_iter().enumerate() {
                map.s.insert(v, AtomVar::new(through_e.id, n - 1 - i as u32));
            }
        }
        Redex::M { cut, tensor, par, tensor_concl, par_concl } => {
            let t_prem = net.premises_of(*tensor);
            let p_prem = net.premises_of(*par);
            if t_prem.len() != 2 || p_prem.len() != 2 {
                return Err(NetError::StaleRedex("tensor/par premises missing".into()));
            }
            let (p_a, p_b) = (t_prem[0].id, t_prem[1].id);
            let (p_nb, p_na) = (p_prem[0].id, p_prem[1].id);
            let n = net.edge(p_a).unwrap().formula.atom_len() as u32;
            let m = net.edge(p_b).unwrap().formula.atom_len() as u32;

            out.nodes.remove(cut);
            out.nodes.remove(tensor);
            out.nodes.remove(par);
            out.edges.remove(tensor_concl);
            out.edges.remove(par_concl);
            let cut_b = out.add_node(NodeKind::Cut);
            let cut_a = out.add_node(NodeKind::Cut);
            {
                let e = out.edges.get_mut(&p_b).unwrap();
                e.dst = cut_b;
                e.pos = PremisePos::Left;
            }
            {
                let e = out.edges.get_mut(&p_nb).unwrap();
                e.dst = cut_b;
                e.pos = PremisePos::Right;
            }
            {
                let e = out.edges.get_mut(&p_a).unwrap();
                e.dst = cut_a;
                e.pos = PremisePos::Left;
            }
            {
                let e = out.edges.get_mut(&p_na).unwrap();
                e.dst = cut_a;
                e.pos = PremisePos::Right;
            }

            for v in out.atom_vars() {
                map.t.insert(v, v);
                map.s.insert(v, v);
            }
            // tensor conclusion A ⊗ B: positions 0..n belong to A, n.. to B
            for (i, v) in edge_atoms(net, *tensor_concl).into_iter().enumerate() {
                let i = i as u32;
                let target = if i < n {
                    AtomVar::new(p_a, i)
                } else {
                    AtomVar::new(p_b, i - n)
                };
                map.s.insert(v, target);
            }
            // par conclusion ¬B ⅋ ¬A: positions 0..m belong to ¬B, m.. to ¬A
            for (i, v) in edge_atoms(net, *par_concl).into_iter().enumerate() {
                let i = i as u32;
                let target = if i < m {
                    AtomVar::new(p_nb, i)
                } else {
                    AtomVar::new(p_na, i - m)
                };
                map.s.insert(v, target);
            }
        }
    }

    debug_assert!(out.is_proof_structure(), "{:?}", out.validate());
    debug_assert!(out.weight() < net.weight());
    Ok((out, map))
}

/// Result of a reduction sequence.
#[derive(Debug, Clone)]
pub struct Normalization {
    pub result: ProofStructure,
    pub map: VarMap,
    pub trace: Vec<Redex>,
}

/// Run redexes to exhaustion, always choosing the first redex in the
/// deterministic order. Errors if cuts remain but nothing reduces.
pub fn normalize(net: &ProofStructure) -> Result<Normalization, NetError> {
    normalize_with(net, |_redexes| 0)
}

/// Normalization with an explicit redex chooser (index into `find_redexes`).
pub fn normalize_with(
    net: &ProofStructure,
    mut choose: impl FnMut(&[Redex]) -> usize,
) -> Result<Normalization, NetError> {
    let mut current = net.clone();
    let mut map = VarMap::identity(net);
    let mut trace = Vec::new();
    loop {
        let redexes = find_redexes(&current);
        if redexes.is_empty() {
            if current.nodes().any(|(_, k)| k == NodeKind::Cut) {
                return Err(NetError::Stuck);
            }
            return Ok(Normalization { result: current, map, trace });
        }
        let idx = choose(&redexes).min(redexes.len() - 1);
        let redex = redexes[idx].clone();
        let (next, step) = reduce(&current, &redex)?;
        map = VarMap::compose(&map, &step);
        trace.push(redex);
        current = next;
    }
}

/// Apply a sequence of redex choices (index into `find_redexes` per step).
pub fn apply_steps(
    net: &ProofStructure,
    steps: &[usize],
) -> Result<Normalization, NetError> {
    let mut current = net.clone();
    let mut map = VarMap::identity(net);
    let mut trace = Vec::new();
    for &idx in steps {
        let redexes = find_redexes(&current);
        if idx >= redexes.len() {
            return Err(NetError::StaleRedex(format!(
                "redex selector {idx} out of range ({} available)",
                redexes.len()
            )));
        }
        let redex = redexes[idx].clone();
        let (next, step) = reduce(&current, &redex)?;
        map = VarMap::compose(&map, &step);
        trace.push(redex);
        current = next;
    }
    Ok(Normalization { result: current, map, trace })
}

// ---------------------------------------------------------------------------
// η-expansion
// ---------------------------------------------------------------------------

/// Expand axiom links on compound formulas until every axiom conclusion is
/// atomic. Expansion order does not affect the result up to node relabelling;
/// lowest axiom id goes first.
pub fn eta_expand(net: &ProofStructure) -> ProofStructure {
    let mut out = net.clone();
    loop {
        let target = out
            .nodes()
            .filter(|(_, k)| *k == NodeKind::Ax)
            .find(|(id, _)| {
                out.conclusions_of(*id)
                    .iter()
                    .any(|e| !e.formula.is_atomic())
            });
        let Some((ax, _)) = target else { return out };
        let concs = out.conclusions_of(ax);
        debug_assert_eq!(concs.len(), 2);
        // exactly one of the two dual conclusions is a tensor at the root
        let (t_edge, p_edge) = if matches!(concs[0].formula, Formula::Tensor(_, _)) {
            (concs[0].id, concs[1].id)
        } else {
            (concs[1].id, concs[0].id)
        };
        let (a, b) = match &out.edge(t_edge).unwrap().formula {
            Formula::Tensor(a, b) => ((**a).clone(), (**b).clone()),
            _ => unreachable!("dual pair must contain a tensor"),
        };
        let ax1 = out.add_node(NodeKind::Ax);
        let ax2 = out.add_node(NodeKind::Ax);
        let tn = out.add_node(NodeKind::Tensor);
        let pn = out.add_node(NodeKind::Par);
        out.add_edge(ax1, tn, a.clone(), PremisePos::Left);
        out.add_edge(ax2, tn, b.clone(), PremisePos::Right);
        out.add_edge(ax2, pn, formulas::negate(&b), PremisePos::Left);
        out.add_edge(ax1, pn, formulas::negate(&a), PremisePos::Right);
        out.edges.get_mut(&t_edge).unwrap().src = tn;
        out.edges.get_mut(&p_edge).unwrap().src = pn;
        out.nodes.remove(&ax);
        debug_assert!(out.is_proof_structure(), "{:?}", out.validate());
    }
}

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct JsonNode {
    id: u32,
    kind: String,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    id: u32,
    src: u32,
    dst: u32,
    formula: String,
    pos: String,
}

#[derive(Serialize, Deserialize)]
struct JsonStructure {
    nodes: Vec<JsonNode>,
    edges: Vec<JsonEdge>,
}

impl ProofStructure {
    pub fn to_json(&self) -> String {
        let doc = JsonStructure {
            nodes: self
                .nodes
                .iter()
                .map(|(id, k)| JsonNode { id: id.0, kind: k.as_str().to_string() })
                .collect(),
            edges: self
                .edges
                .values()
                .map(|e| JsonEdge {
                    id: e.id.0,
                    src: e.src.0,
                    dst: e.dst.0,
                    formula: e.formula.to_string(),
                    pos: e.pos.as_str().to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("structure serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<ProofStructure, NetError> {
        let doc: JsonStructure =
            serde_json::from_str(text).map_err(|e| NetError::BadFile(e.to_string()))?;
        let mut net = ProofStructure::new();
        for n in doc.nodes {
            let kind = NodeKind::from_str(&n.kind)
                .ok_or_else(|| NetError::BadFile(format!("unknown node kind {:?}", n.kind)))?;
            net.insert_node_raw(NodeId(n.id), kind);
        }
        for e in doc.edges {
            let pos = PremisePos::from_str(&e.pos)
                .ok_or_else(|| NetError::BadFile(format!("unknown premise position {:?}", e.pos)))?;
            let formula = formulas::parse(&e.formula)?;
            net.insert_edge_raw(Edge {
                id: EdgeId(e.id),
                src: NodeId(e.src),
                dst: NodeId(e.dst),
                formula,
                pos,
            });
        }
        Ok(net)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonProof {
    rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    children: Option<Vec<JsonProof>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    occ: Option<Vec<usize>>,
}

impl SequentProof {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&proof_to_json(self)).expect("proof serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<SequentProof, NetError> {
        let doc: JsonProof =
            serde_json::from_str(text).map_err(|e| NetError::BadFile(e.to_string()))?;
        proof_from_json(&doc)
    }
}

fn proof_to_json(p: &SequentProof) -> JsonProof {
    match p {
        SequentProof::Ax(a) => JsonProof {
            rule: "ax".into(),
            formula: Some(a.to_string()),
            children: None,
            occ: None,
        },
        SequentProof::Cut { left, right, left_occ, right_occ } => JsonProof {
            rule: "cut".into(),
            formula: None,
            children: Some(vec![proof_to_json(left), proof_to_json(right)]),
            occ: Some(vec![*left_occ, *right_occ]),
        },
        SequentProof::Tensor { left, right, left_occ, right_occ } => JsonProof {
            rule: "tensor".into(),
            formula: None,
            children: Some(vec![proof_to_json(left), proof_to_json(right)]),
            occ: Some(vec![*left_occ, *right_occ]),
        },
        SequentProof::Par { sub, occ_a, occ_b } => JsonProof {
            rule: "par".into(),
            formula: None,
            children: Some(vec![proof_to_json(sub)]),
            occ: Some(vec![*occ_a, *occ_b]),
        },
    }
}

fn proof_from_json(doc: &JsonProof) -> Result<SequentProof, NetError> {
    let need_children = |n: usize, rule: &'static str| -> Result<&Vec<JsonProof>, NetError> {
        match &doc.children {
            Some(c) if c.len() == n => Ok(c),
            _ => Err(NetError::MalformedRule {
                rule,
                reason: format!("expected {n} children"),
            }),
        }
    };
    let need_occ = |n: usize, rule: &'static str| -> Result<&Vec<usize>, NetError> {
        match &doc.occ {
            Some(o) if o.len() == n => Ok(o),
            _ => Err(NetError::MalformedRule {
                rule,
                reason: format!("expected {n} occurrence indices"),
            }),
        }
    };
    match doc.rule.as_str() {
        "ax" => {
            let f = doc.formula.as_deref().ok_or(NetError::MalformedRule {
                rule: "ax",
                reason: "missing formula".into(),
            })?;
            Ok(SequentProof::Ax(formulas::parse(f)?))
        }
        "cut" => {
            let c = need_children(2, "cut")?;
            let o = need_occ(2, "cut")?;
            Ok(SequentProof::Cut {
                left: Box::new(proof_from_json(&c[0])?),
                right: Box::new(proof_from_json(&c[1])?),
                left_occ: o[0],
                right_occ: o[1],
            })
        }
        "tensor" => {
            let c = need_children(2, "tensor")?;
            let o = need_occ(2, "tensor")?;
            Ok(SequentProof::Tensor {
                left: Box::new(proof_from_json(&c[0])?),
                right: Box::new(proof_from_json(&c[1])?),
                left_occ: o[0],
                right_occ: o[1],
            })
        }
        "par" => {
            let c = need_children(1, "par")?;
            let o = need_occ(2, "par")?;
            Ok(SequentProof::Par {
                sub: Box::new(proof_from_json(&c[0])?),
                occ_a: o[0],
                occ_b: o[1],
            })
        }
        other => Err(NetError::BadFile(format!("unknown rule {other:?}"))),
    }
}

#[derive(Serialize, Deserialize)]
struct JsonVarMap {
    t: Vec<[[u32; 2]; 2]>,
    s: Vec<[[u32; 2]; 2]>,
}

impl VarMap {
    pub fn to_json(&self) -> String {
        let conv = |m: &BTreeMap<AtomVar, AtomVar>| {
            m.iter()
                .map(|(a, b)| [[a.edge.0, a.index], [b.edge.0, b.index]])
                .collect()
        };
        serde_json::to_string_pretty(&JsonVarMap { t: conv(&self.t), s: conv(&self.s) })
            .expect("varmap serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::fixtures;

    #[test]
    fn smallest_net_shape() {
        let net = translate(&fixtures::smallest_proof()).unwrap();
        assert_eq!(net.node_count(), 3);
        assert_eq!(net.edge_count(), 3);
        assert!(net.is_proof_structure());
        let concs = net.conclusion_edges();
        assert_eq!(concs.len(), 1);
        assert_eq!(concs[0].formula.to_string(), "~X|X");
    }

    #[test]
    fn single_ax_translates() {
        let net = translate(&SequentProof::Ax(Formula::atom("A"))).unwrap();
        assert_eq!(net.node_count(), 3); // ax + two conclusion markers
        assert_eq!(net.conclusion_edges().len(), 2);
        assert!(net.is_proof_structure());
    }

    #[test]
    fn malformed_cut_is_reported() {
        let bad = SequentProof::Cut {
            left: Box::new(SequentProof::Ax(Formula::atom("X"))),
            right: Box::new(SequentProof::Ax(Formula::atom("Y"))),
            left_occ: 1,
            right_occ: 1,
        };
        let err = translate(&bad).unwrap_err();
        assert!(matches!(err, NetError::MalformedRule { rule: "cut", .. }));
    }

    #[test]
    fn ax_cut_loop_is_a_structure_but_has_no_redex() {
        let net = fixtures::ax_cut_loop();
        assert!(net.is_proof_structure());
        assert!(find_redexes(&net).is_empty());
        assert!(matches!(normalize(&net), Err(NetError::Stuck)));
    }

    #[test]
    fn arity_violation_is_invalid() {
        let mut net = ProofStructure::new();
        let ax = net.add_node(NodeKind::Ax);
        let t = net.add_node(NodeKind::Tensor);
        let c = net.add_node(NodeKind::Concl);
        net.add_edge(ax, t, Formula::atom("X"), PremisePos::Left);
        net.add_edge(ax, c, Formula::natom("X"), PremisePos::Only);
        assert!(!net.is_proof_structure());
    }

    #[test]
    fn cut_free_net_has_no_redexes() {
        let net = translate(&fixtures::smallest_proof()).unwrap();
        assert!(find_redexes(&net).is_empty());
        let norm = normalize(&net).unwrap();
        assert!(norm.trace.is_empty());
        assert_eq!(norm.result.canonical_key(), net.canonical_key());
        for v in net.atom_vars() {
            assert_eq!(norm.map.apply_t(v), Some(v));
        }
    }

    #[test]
    fn detour_has_one_m_redex() {
        let net = translate(&fixtures::canonical_detour_proof()).unwrap();
        let redexes = find_redexes(&net);
        assert_eq!(redexes.len(), 1);
        assert!(matches!(redexes[0], Redex::M { .. }));
    }

    #[test]
    fn chain_of_one_cut_between_two_axes_has_two_a_redexes() {
        // ax — cut — ax with outer conclusions on both sides
        let p = SequentProof::Cut {
            left: Box::new(SequentProof::Ax(Formula::atom("X"))),
            right: Box::new(SequentProof::Ax(Formula::atom("X"))),
            left_occ: 1,
            right_occ: 0,
        };
        let net = translate(&p).unwrap();
        let redexes = find_redexes(&net);
        assert_eq!(redexes.len(), 2);
        assert!(redexes.iter().all(|r| matches!(r, Redex::A { .. })));
    }

    #[test]
    fn a_redex_reduction_collapses_three_edges() {
        let p = SequentProof::Cut {
            left: Box::new(SequentProof::Ax(Formula::atom("X"))),
            right: Box::new(SequentProof::Ax(Formula::atom("X"))),
            left_occ: 1,
            right_occ: 0,
        };
        let net = translate(&p).unwrap();
        let before_edges = net.edge_count();
        let redexes = find_redexes(&net);
        let (reduced, map) = reduce(&net, &redexes[0]).unwrap();
        assert_eq!(reduced.edge_count(), before_edges - 2);
        assert!(reduced.is_proof_structure());
        // S ∘ T = 1 on the reduct
        for v in reduced.atom_vars() {
            assert_eq!(map.apply_s(map.apply_t(v).unwrap()), Some(v));
        }
        // the normal form is a single axiom with two conclusions
        let norm = normalize(&net).unwrap();
        assert_eq!(
            norm.result.nodes().filter(|(_, k)| *k == NodeKind::Ax).count(),
            1
        );
        assert!(norm.result.nodes().all(|(_, k)| k != NodeKind::Cut));
    }

    #[test]
    fn m_redex_reduction_yields_two_atomic_cuts() {
        let net = translate(&fixtures::canonical_detour_proof()).unwrap();
        let redexes = find_redexes(&net);
        let (reduced, map) = reduce(&net, &redexes[0]).unwrap();
        let cuts: Vec<_> = reduced.nodes().filter(|(_, k)| *k == NodeKind::Cut).collect();
        assert_eq!(cuts.len(), 2);
        for (cut, _) in cuts {
            for e in reduced.premises_of(cut) {
                assert!(e.formula.is_atomic());
            }
        }
        // exactly four variables eliminated (the two compound conclusion edges)
        let eliminated: Vec<_> = net
            .atom_vars()
            .into_iter()
            .filter(|v| !map.survivors().contains(v))
            .collect();
        assert_eq!(eliminated.len(), 4);
        for v in reduced.atom_vars() {
            assert_eq!(map.apply_s(map.apply_t(v).unwrap()), Some(v));
        }
    }

    #[test]
    fn detour_normalizes_in_three_steps() {
        let net = translate(&fixtures::canonical_detour_proof()).unwrap();
        let norm = normalize(&net).unwrap();
        assert_eq!(norm.trace.len(), 3);
        assert_eq!(norm.trace[0].kind_str(), "m");
        assert_eq!(norm.trace[1].kind_str(), "a");
        assert_eq!(norm.trace[2].kind_str(), "a");
        assert!(norm.result.nodes().all(|(_, k)| k != NodeKind::Cut));
        assert_eq!(norm.result.atom_vars().len(), 4);
    }

    #[test]
    fn weight_strictly_decreases() {
        let net = translate(&fixtures::canonical_detour_proof()).unwrap();
        let mut current = net;
        let mut w = current.weight();
        loop {
            let redexes = find_redexes(&current);
            if redexes.is_empty() {
                break;
            }
            let (next, _) = reduce(&current, &redexes[0]).unwrap();
            assert!(next.weight() < w);
            w = next.weight();
            current = next;
        }
    }

    #[test]
    fn stale_redex_is_rejected() {
        let net = translate(&fixtures::canonical_detour_proof()).unwrap();
        let redexes = find_redexes(&net);
        let (reduced, _) = reduce(&net, &redexes[0]).unwrap();
        assert!(matches!(
            reduce(&reduced, &redexes[0]),
            Err(NetError::StaleRedex(_))
        ));
    }

    #[test]
    fn normalization_is_confluent_on_four_atomic_cuts() {
        // four parallel ax-cut-ax chains, conclusions combined pairwise
        let chain = || SequentProof::Cut {
            left: Box::new(SequentProof::Ax(Formula::atom("X"))),
            right: Box::new(SequentProof::Ax(Formula::atom("X"))),
            left_occ: 1,
            right_occ: 0,
        };
        let two = SequentProof::Tensor {
            left: Box::new(chain()),
            right: Box::new(chain()),
            left_occ: 1,
            right_occ: 0,
        };
        let four = SequentProof::Tensor {
            left: Box::new(two.clone()),
            right: Box::new(two),
            left_occ: 1,
            right_occ: 0,
        };
        let net = translate(&four).unwrap();
        assert_eq!(
            find_redexes(&net).len(),
            8,
            "each atomic cut matches both neighbouring axioms"
        );
        let mut outcomes = BTreeSet::new();
        exhaust_orders(&net, VarMap::identity(&net), &mut outcomes);
        assert!(outcomes.len() >= 1);
        assert_eq!(
            outcomes.len(),
            1,
            "all reduction orders must agree on (normal form, composite map)"
        );
    }

    fn exhaust_orders(
        net: &ProofStructure,
        map: VarMap,
        outcomes: &mut BTreeSet<(String, Vec<(AtomVar, AtomVar)>)>,
    ) {
        let redexes = find_redexes(net);
        if redexes.is_empty() {
            let t: Vec<_> = map.t.iter().map(|(a, b)| (*a, *b)).collect();
            outcomes.insert((net.canonical_key(), t));
            return;
        }
        for r in &redexes {
            let (next, step) = reduce(net, r).unwrap();
            exhaust_orders(&next, VarMap::compose(&map, &step), outcomes);
        }
    }

    #[test]
    fn eta_expand_fixed_point_on_atomic() {
        let net = translate(&fixtures::smallest_proof()).unwrap();
        let expanded = eta_expand(&net);
        assert_eq!(expanded.canonical_key(), net.canonical_key());
    }

    #[test]
    fn eta_expand_single_increx() {
        // axiom on X ⊗ Y, conclusions gathered by a par
        let p = SequentProof::Par {
            sub: Box::new(SequentProof::Ax(Formula::tensor(
                Formula::atom("X"),
                Formula::atom("Y"),
            ))),
            occ_a: 0,
            occ_b: 1,
        };
        let net = translate(&p).unwrap();
        let expanded = eta_expand(&net);
        assert!(expanded.is_proof_structure());
        let ax_count = expanded.nodes().filter(|(_, k)| *k == NodeKind::Ax).count();
        assert_eq!(ax_count, 2);
        for (ax, _) in expanded.nodes().filter(|(_, k)| *k == NodeKind::Ax) {
            for e in expanded.conclusions_of(ax) {
                assert!(e.formula.is_atomic());
            }
        }
        // the 4 new edges plus the two original conclusions of the old axiom
        assert_eq!(expanded.edge_count(), net.edge_count() + 4);
    }

    #[test]
    fn eta_expand_nested() {
        let f = Formula::tensor(
            Formula::tensor(Formula::atom("X"), Formula::atom("Y")),
            Formula::atom("Z"),
        );
        let p = SequentProof::Par {
            sub: Box::new(SequentProof::Ax(f)),
            occ_a: 0,
            occ_b: 1,
        };
        let net = translate(&p).unwrap();
        let expanded = eta_expand(&net);
        let ax_count = expanded.nodes().filter(|(_, k)| *k == NodeKind::Ax).count();
        assert_eq!(ax_count, 3, "one axiom per atom of the original conclusion");
        assert!(expanded.is_proof_structure());
    }

    #[test]
    fn structure_json_roundtrip() {
        let net = translate(&fixtures::canonical_detour_proof()).unwrap();
        let text = net.to_json();
        let back = ProofStructure::from_json(&text).unwrap();
        assert_eq!(back, net);
    }

    #[test]
    fn proof_json_roundtrip() {
        let p = fixtures::canonical_detour_proof();
        let back = SequentProof::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert_eq!(
            translate(&back).unwrap().canonical_key(),
            translate(&p).unwrap().canonical_key()
        );
    }

    #[test]
    fn dot_export_mentions_every_node() {
        let net = translate(&fixtures::smallest_proof()).unwrap();
        let dot = net.to_dot();
        assert!(dot.starts_with("digraph"));
        for (id, _) in net.nodes() {
            assert!(dot.contains(&format!("n{}", id.0)));
        }
    }
}
