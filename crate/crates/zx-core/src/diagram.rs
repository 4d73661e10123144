use std::collections::BTreeMap;

use crate::{ExactScalar, Phase};

pub type VId = usize;
pub type EId = usize;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum VertexKind {
    Boundary,
    Z(Phase),
    X(Phase),
}

impl VertexKind {
    pub fn phase(self) -> Option<Phase> {
        match self {
            VertexKind::Boundary => None,
            VertexKind::Z(p) | VertexKind::X(p) => Some(p),
        }
    }

    pub fn is_z(self) -> bool {
        matches!(self, VertexKind::Z(_))
    }

    pub fn is_x(self) -> bool {
        matches!(self, VertexKind::X(_))
    }

    pub fn is_boundary(self) -> bool {
        matches!(self, VertexKind::Boundary)
    }

    pub fn is_spider(self) -> bool {
        !self.is_boundary()
    }

    /// Same colour with a different phase. Boundaries are returned unchanged.
    pub fn with_phase(self, p: Phase) -> VertexKind {
        match self {
            VertexKind::Z(_) => VertexKind::Z(p),
            VertexKind::X(_) => VertexKind::X(p),
            VertexKind::Boundary => VertexKind::Boundary,
        }
    }

    /// Swaps Z and X, keeping the phase.
    pub fn toggled(self) -> VertexKind {
        match self {
            VertexKind::Z(p) => VertexKind::X(p),
            VertexKind::X(p) => VertexKind::Z(p),
            VertexKind::Boundary => VertexKind::Boundary,
        }
    }

    pub fn same_colour(self, other: VertexKind) -> bool {
        (self.is_z() && other.is_z()) || (self.is_x() && other.is_x())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum EdgeKind {
    Plain,
    Hadamard,
    Star,
}

impl EdgeKind {
    /// Kind of the wire obtained by composing two edges through an identity,
    /// when that wire is again a single edge.
    pub fn compose(self, other: EdgeKind) -> Option<EdgeKind> {
        use EdgeKind::*;
        match (self, other) {
            (Plain, k) | (k, Plain) => Some(k),
            (Hadamard, Hadamard) => Some(Plain),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub a: VId,
    pub b: VId,
    pub kind: EdgeKind,
}

impl Edge {
    /// The endpoint opposite to `v`. For self-loops this is `v` itself.
    pub fn other(&self, v: VId) -> VId {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("no vertex with id {0}")]
    NoVertex(VId),
    #[error("no edge with id {0}")]
    NoEdge(EId),
    #[error("arity mismatch: {0} outputs against {1} inputs")]
    Arity(usize, usize),
    #[error("boundary {0} has degree {1}, expected 1")]
    BoundaryDegree(VId, usize),
    #[error("boundary {0} is listed {1} times across inputs and outputs")]
    BoundaryListing(VId, usize),
    #[error("vertex {0} is listed as a boundary but is a spider")]
    NotABoundary(VId),
}

#[derive(Clone, Debug)]
struct VData {
    kind: VertexKind,
    qubit: i32,
    row: i32,
    edges: Vec<EId>,
}

/// An open ZX multigraph with an exact global scalar.
///
/// Vertex and edge ids come from monotone allocators and are never reused, so
/// surviving ids are stable under every edit.
#[derive(Clone, Debug)]
pub struct Diagram {
    verts: Vec<Option<VData>>,
    edges: Vec<Option<Edge>>,
    live_v: usize,
    live_e: usize,
    inputs: Vec<VId>,
    outputs: Vec<VId>,
    scalar: ExactScalar,
}

impl Default for Diagram {
    fn default() -> Self {
        Self::new()
    }
}

impl Diagram {
    pub fn new() -> Self {
        Diagram {
            verts: Vec::new(),
            edges: Vec::new(),
            live_v: 0,
            live_e: 0,
            inputs: Vec::new(),
            outputs: Vec::new(),
            scalar: ExactScalar::ONE,
        }
    }

    /// Identity on `n` wires.
    pub fn identity(n: usize) -> Self {
        let mut d = Diagram::new();
        for q in 0..n {
            let i = d.add_input(q as i32);
            let o = d.add_output(q as i32);
            d.add_edge(i, o, EdgeKind::Plain).expect("fresh ids");
        }
        d
    }

    pub fn add_vertex(&mut self, kind: VertexKind) -> VId {
        self.add_vertex_at(kind, -1, -1)
    }

    /// Adds a vertex carrying layout hints (qubit line and row).
    pub fn add_vertex_at(&mut self, kind: VertexKind, qubit: i32, row: i32) -> VId {
        let id = self.verts.len();
        self.verts.push(Some(VData { kind, qubit, row, edges: Vec::new() }));
        self.live_v += 1;
        id
    }

    pub fn add_input(&mut self, qubit: i32) -> VId {
        let v = self.add_vertex_at(VertexKind::Boundary, qubit, 0);
        self.inputs.push(v);
        v
    }

    pub fn add_output(&mut self, qubit: i32) -> VId {
        let v = self.add_vertex_at(VertexKind::Boundary, qubit, i32::MAX);
        self.outputs.push(v);
        v
    }

    pub fn add_edge(&mut self, a: VId, b: VId, kind: EdgeKind) -> Result<EId, DiagramError> {
        if !self.contains_vertex(a) {
            return Err(DiagramError::NoVertex(a));
        }
        if !self.contains_vertex(b) {
            return Err(DiagramError::NoVertex(b));
        }
        let id = self.edges.len();
        self.edges.push(Some(Edge { a, b, kind }));
        self.live_e += 1;
        self.vdata_mut(a).edges.push(id);
        if a != b {
            self.vdata_mut(b).edges.push(id);
        }
        Ok(id)
    }

    pub fn remove_edge(&mut self, e: EId) -> Result<Edge, DiagramError> {
        let edge = self.edges.get_mut(e).and_then(Option::take).ok_or(DiagramError::NoEdge(e))?;
        self.live_e -= 1;
        for v in [edge.a, edge.b] {
            if let Some(Some(vd)) = self.verts.get_mut(v) {
                vd.edges.retain(|&x| x != e);
            }
        }
        Ok(edge)
    }

    /// Removes a vertex with all its incident edges. Boundaries are also
    /// dropped from the input/output lists.
    pub fn remove_vertex(&mut self, v: VId) -> Result<VertexKind, DiagramError> {
        if !self.contains_vertex(v) {
            return Err(DiagramError::NoVertex(v));
        }
        let incident = self.vdata(v).edges.clone();
        for e in incident {
            self.remove_edge(e)?;
        }
        let vd = self.verts[v].take().expect("checked above");
        self.live_v -= 1;
        self.inputs.retain(|&x| x != v);
        self.outputs.retain(|&x| x != v);
        Ok(vd.kind)
    }

    pub fn contains_vertex(&self, v: VId) -> bool {
        matches!(self.verts.get(v), Some(Some(_)))
    }

    pub fn contains_edge(&self, e: EId) -> bool {
        matches!(self.edges.get(e), Some(Some(_)))
    }

    fn vdata(&self, v: VId) -> &VData {
        self.verts.get(v).and_then(Option::as_ref).unwrap_or_else(|| panic!("no vertex {v}"))
    }

    fn vdata_mut(&mut self, v: VId) -> &mut VData {
        self.verts.get_mut(v).and_then(Option::as_mut).unwrap_or_else(|| panic!("no vertex {v}"))
    }

    /// Vertex kind. Panics on a stale id.
    pub fn kind(&self, v: VId) -> VertexKind {
        self.vdata(v).kind
    }

    pub fn try_kind(&self, v: VId) -> Option<VertexKind> {
        self.verts.get(v).and_then(Option::as_ref).map(|d| d.kind)
    }

    pub fn set_kind(&mut self, v: VId, kind: VertexKind) -> Result<(), DiagramError> {
        if !self.contains_vertex(v) {
            return Err(DiagramError::NoVertex(v));
        }
        self.vdata_mut(v).kind = kind;
        Ok(())
    }

    pub fn phase(&self, v: VId) -> Phase {
        self.kind(v).phase().unwrap_or_default()
    }

    pub fn set_phase(&mut self, v: VId, p: Phase) {
        let k = self.kind(v).with_phase(p);
        self.vdata_mut(v).kind = k;
    }

    pub fn add_to_phase(&mut self, v: VId, p: Phase) {
        let cur = self.phase(v);
        self.set_phase(v, cur + p);
    }

    pub fn qubit(&self, v: VId) -> i32 {
        self.vdata(v).qubit
    }

    pub fn row(&self, v: VId) -> i32 {
        self.vdata(v).row
    }

    pub fn set_position(&mut self, v: VId, qubit: i32, row: i32) {
        let vd = self.vdata_mut(v);
        vd.qubit = qubit;
        vd.row = row;
    }

    /// Incident edge ids in insertion order.
    pub fn incident(&self, v: VId) -> &[EId] {
        &self.vdata(v).edges
    }

    pub fn edge(&self, e: EId) -> Edge {
        self.edges.get(e).and_then(|x| *x).unwrap_or_else(|| panic!("no edge {e}"))
    }

    pub fn try_edge(&self, e: EId) -> Option<Edge> {
        self.edges.get(e).and_then(|x| *x)
    }

    pub fn set_edge_kind(&mut self, e: EId, kind: EdgeKind) -> Result<(), DiagramError> {
        match self.edges.get_mut(e) {
            Some(Some(edge)) => {
                edge.kind = kind;
                Ok(())
            }
            _ => Err(DiagramError::NoEdge(e)),
        }
    }

    /// `(edge, far endpoint)` pairs; a self-loop appears once with `v` as the far end.
    pub fn neighbours(&self, v: VId) -> impl Iterator<Item = (EId, VId)> + '_ {
        self.incident(v).iter().map(move |&e| (e, self.edge(e).other(v)))
    }

    /// Number of edge ends at `v` (self-loops count twice).
    pub fn degree(&self, v: VId) -> usize {
        self.incident(v).iter().map(|&e| if self.edge(e).is_loop() { 2 } else { 1 }).sum()
    }

    /// Number of star edges incident to `v`, self-loops once.
    pub fn star_degree(&self, v: VId) -> usize {
        self.incident(v).iter().filter(|&&e| self.edge(e).kind == EdgeKind::Star).count()
    }

    pub fn edges_between(&self, u: VId, v: VId) -> Vec<EId> {
        self.incident(u).iter().copied().filter(|&e| self.edge(e).other(u) == v).collect()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VId> + '_ {
        self.verts.iter().enumerate().filter_map(|(i, v)| v.as_ref().map(|_| i))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EId> + '_ {
        self.edges.iter().enumerate().filter_map(|(i, e)| e.map(|_| i))
    }

    pub fn num_vertices(&self) -> usize {
        self.live_v
    }

    pub fn num_edges(&self) -> usize {
        self.live_e
    }

    /// Upper bound (exclusive) on vertex ids handed out so far.
    pub fn vertex_id_bound(&self) -> usize {
        self.verts.len()
    }

    pub fn inputs(&self) -> &[VId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[VId] {
        &self.outputs
    }

    pub fn set_inputs(&mut self, inputs: Vec<VId>) {
        self.inputs = inputs;
    }

    pub fn set_outputs(&mut self, outputs: Vec<VId>) {
        self.outputs = outputs;
    }

    pub fn scalar(&self) -> ExactScalar {
        self.scalar
    }

    pub fn set_scalar(&mut self, s: ExactScalar) {
        self.scalar = s;
    }

    pub fn mul_scalar(&mut self, s: ExactScalar) {
        self.scalar *= s;
    }

    pub fn count_edges(&self, kind: EdgeKind) -> usize {
        self.edge_ids().filter(|&e| self.edge(e).kind == kind).count()
    }

    pub fn is_star_free(&self) -> bool {
        self.count_edges(EdgeKind::Star) == 0
    }

    /// Star-free with every phase a multiple of π/2.
    pub fn is_clifford(&self) -> bool {
        self.is_star_free() && self.vertex_ids().all(|v| self.kind(v).phase().map_or(true, Phase::is_clifford))
    }

    /// Copies `other` into `self` with fresh ids, multiplying scalars.
    /// Returns the id map `old -> new` for vertices. The io lists of `self`
    /// are left untouched.
    pub fn absorb(&mut self, other: &Diagram) -> BTreeMap<VId, VId> {
        let mut map = BTreeMap::new();
        for v in other.vertex_ids() {
            let vd = other.vdata(v);
            map.insert(v, self.add_vertex_at(vd.kind, vd.qubit, vd.row));
        }
        for e in other.edge_ids() {
            let ed = other.edge(e);
            self.add_edge(map[&ed.a], map[&ed.b], ed.kind).expect("mapped ids exist");
        }
        self.scalar *= other.scalar;
        map
    }

    /// Parallel composition; inputs and outputs are concatenated.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        let mut d = self.clone();
        let map = d.absorb(other);
        d.inputs.extend(other.inputs.iter().map(|v| map[v]));
        d.outputs.extend(other.outputs.iter().map(|v| map[v]));
        d
    }

    /// Sequential composition: `other` after `self`. Each output of `self` is
    /// glued to the matching input of `other` and both boundaries disappear.
    pub fn compose(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        if self.outputs.len() != other.inputs.len() {
            return Err(DiagramError::Arity(self.outputs.len(), other.inputs.len()));
        }
        let mut d = self.clone();
        let map = d.absorb(other);
        let glue: Vec<(VId, VId)> = self.outputs.iter().zip(other.inputs.iter()).map(|(&o, i)| (o, map[i])).collect();
        d.outputs = other.outputs.iter().map(|v| map[v]).collect();
        for (o, i) in glue {
            d.fuse_boundaries(o, i)?;
        }
        Ok(d)
    }

    /// Joins the wires ending in boundaries `o` and `i`, then removes both.
    fn fuse_boundaries(&mut self, o: VId, i: VId) -> Result<(), DiagramError> {
        let (eo, io) = (self.single_edge(o)?, self.single_edge(i)?);
        let eo_d = self.edge(eo);
        let ei_d = self.edge(io);
        if eo == io {
            // o and i are directly joined: the glued wire closes into a loop
            // with no vertex on it, a trace of the edge matrix.
            let tr = match eo_d.kind {
                EdgeKind::Plain => ExactScalar::from_int(2),
                EdgeKind::Hadamard => ExactScalar::ZERO,
                EdgeKind::Star => ExactScalar::ONE,
            };
            self.remove_vertex(o)?;
            self.remove_vertex(i)?;
            self.mul_scalar(tr);
            return Ok(());
        }
        let u = eo_d.other(o);
        let w = ei_d.other(i);
        let (ku, kw) = (eo_d.kind, ei_d.kind);
        self.remove_edge(eo)?;
        self.remove_edge(io)?;
        // o and i each have a single edge and eo != io, so u != i and w != o.
        match ku.compose(kw) {
            Some(k) => {
                self.add_edge(u, w, k)?;
            }
            None => {
                let z = self.add_vertex(VertexKind::Z(Phase::ZERO));
                self.add_edge(u, z, ku)?;
                self.add_edge(z, w, kw)?;
            }
        }
        self.remove_vertex(o)?;
        self.remove_vertex(i)?;
        Ok(())
    }

    fn single_edge(&self, b: VId) -> Result<EId, DiagramError> {
        let inc = self.incident(b);
        if inc.len() != 1 || self.edge(inc[0]).is_loop() {
            return Err(DiagramError::BoundaryDegree(b, self.degree(b)));
        }
        Ok(inc[0])
    }

    /// Checks the boundary invariants.
    pub fn validate(&self) -> Result<(), DiagramError> {
        let mut seen: BTreeMap<VId, usize> = BTreeMap::new();
        for &v in self.inputs.iter().chain(self.outputs.iter()) {
            if !self.contains_vertex(v) {
                return Err(DiagramError::NoVertex(v));
            }
            if !self.kind(v).is_boundary() {
                return Err(DiagramError::NotABoundary(v));
            }
            *seen.entry(v).or_default() += 1;
        }
        for v in self.vertex_ids() {
            if self.kind(v).is_boundary() {
                let n = seen.get(&v).copied().unwrap_or(0);
                if n != 1 {
                    return Err(DiagramError::BoundaryListing(v, n));
                }
                if self.degree(v) != 1 {
                    return Err(DiagramError::BoundaryDegree(v, self.degree(v)));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_stable() {
        let mut d = Diagram::new();
        let a = d.add_vertex(VertexKind::Z(Phase::ZERO));
        let b = d.add_vertex(VertexKind::X(Phase::PI));
        let c = d.add_vertex(VertexKind::Z(Phase::ZERO));
        let e1 = d.add_edge(a, b, EdgeKind::Plain).unwrap();
        let e2 = d.add_edge(b, c, EdgeKind::Star).unwrap();
        d.remove_vertex(a).unwrap();
        assert!(!d.contains_edge(e1));
        assert_eq!(d.edge(e2), Edge { a: b, b: c, kind: EdgeKind::Star });
        let n = d.add_vertex(VertexKind::Z(Phase::ZERO));
        assert_eq!(n, 3);
        assert_eq!(d.num_vertices(), 3);
    }

    #[test]
    fn dangling_edits_rejected() {
        let mut d = Diagram::new();
        let a = d.add_vertex(VertexKind::Z(Phase::ZERO));
        assert_eq!(d.add_edge(a, 7, EdgeKind::Plain), Err(DiagramError::NoVertex(7)));
        assert!(d.remove_edge(0).is_err());
        assert!(d.remove_vertex(9).is_err());
    }

    #[test]
    fn identity_compose() {
        let id = Diagram::identity(1);
        let d = id.compose(&id).unwrap();
        d.validate().unwrap();
        assert_eq!(d.inputs().len(), 1);
        assert_eq!(d.num_edges(), 1);
        assert_eq!(d.num_vertices(), 2);
    }

    #[test]
    fn tensor_concatenates() {
        let d = Diagram::identity(1).tensor(&Diagram::identity(1));
        assert_eq!(d.inputs(), &[0, 2]);
        assert_eq!(d.outputs(), &[1, 3]);
    }

    #[test]
    fn compose_arity() {
        assert_eq!(Diagram::identity(2).compose(&Diagram::identity(1)).unwrap_err(), DiagramError::Arity(2, 1));
    }

    #[test]
    fn degree_counts_loops_twice() {
        let mut d = Diagram::new();
        let a = d.add_vertex(VertexKind::Z(Phase::ZERO));
        d.add_edge(a, a, EdgeKind::Hadamard).unwrap();
        assert_eq!(d.degree(a), 2);
        assert_eq!(d.incident(a).len(), 1);
    }
}
