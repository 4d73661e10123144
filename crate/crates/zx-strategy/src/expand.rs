use std::sync::OnceLock;
use std::time::{Duration, Instant};

use zx_catalog::{apply_star_edge_rule, apply_star_state_rule, dynamic_decompose, elementary_decompose, Catalog};
use zx_core::{Diagram, EId, EdgeKind, Phase, Term, TermSum, VId, VertexKind};
use zx_rewrite::{partial_simplify, partial_simplify_in_place, push_nots_to_boundary, to_stack_form};

use crate::weight::select_master;
use crate::StrategyError;

/// How each term picks its next decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Highest [`master_weight`](crate::master_weight) spider, dynamic split.
    Weighted,
    /// Smallest scaling exponent among the applicable catalog rules.
    Greedy,
}

impl std::str::FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "weighted" => Ok(Strategy::Weighted),
            "greedy" => Ok(Strategy::Greedy),
            _ => Err(format!("unknown strategy {s:?}")),
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strategy::Weighted => "weighted",
            Strategy::Greedy => "greedy",
        })
    }
}

/// One decomposition step on a term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    /// Pauli-leaf split of a non-Clifford spider.
    Elementary(VId),
    Dynamic(VId),
    /// Dynamic split of both spiders of a linked stack pair.
    Pair(VId, VId),
    StarEdges(Vec<EId>),
    StarState {
        phase: Phase,
        leaves: Vec<VId>,
    },
    /// Puts a Z(0) into a star edge with no Z end and splits it.
    Bridge(EId),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExpansionStats {
    pub actions: usize,
    /// Children produced before simplification and pruning.
    pub raw_branches: usize,
    pub pruned: usize,
    /// Longest action chain from the root to a terminal term.
    pub max_depth: usize,
    /// Time spent choosing actions, summed over workers.
    pub weighting: Duration,
}

impl ExpansionStats {
    pub fn merge(&mut self, o: &ExpansionStats) {
        self.actions += o.actions;
        self.raw_branches += o.raw_branches;
        self.pruned += o.pruned;
        self.max_depth = self.max_depth.max(o.max_depth);
        self.weighting += o.weighting;
    }
}

pub(crate) fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(Catalog::shipped)
}

/// NOTs to the inputs, stack form, then partial simplification.
pub fn preprocess(d: &Diagram) -> Diagram {
    partial_simplify(&to_stack_form(&push_nots_to_boundary(d)))
}

pub fn is_terminal(d: &Diagram) -> bool {
    d.is_star_free() && d.is_clifford()
}

fn non_clifford(d: &Diagram) -> Option<VId> {
    d.vertex_ids().find(|&v| d.kind(v).phase().is_some_and(|p| !p.is_clifford()))
}

fn star_edges(d: &Diagram) -> impl Iterator<Item = EId> + '_ {
    d.edge_ids().filter(|&e| d.edge(e).kind == EdgeKind::Star)
}

/// Upper bound on actions along any path: each one removes a star edge or a
/// non-Clifford phase.
pub fn depth_limit(d: &Diagram) -> usize {
    star_edges(d).count() + d.vertex_ids().filter(|&v| d.kind(v).phase().is_some_and(|p| !p.is_clifford())).count()
}

fn bridge_or_edges(d: &Diagram, greedy: bool) -> Action {
    let bare: Vec<EId> = star_edges(d).filter(|&e| !d.edge(e).is_loop()).collect();
    if greedy && !bare.is_empty() {
        return Action::StarEdges(bare.into_iter().take(3).collect());
    }
    Action::Bridge(star_edges(d).next().expect("a star edge"))
}

pub fn choose_weighted(d: &Diagram) -> Option<Action> {
    if is_terminal(d) {
        return None;
    }
    if d.is_star_free() {
        return non_clifford(d).map(Action::Elementary);
    }
    Some(match select_master(d) {
        Some(c) => match c.linked_pair {
            Some(p) => Action::Pair(c.vertex.min(p), c.vertex.max(p)),
            None => Action::Dynamic(c.vertex),
        },
        None => bridge_or_edges(d, false),
    })
}

fn star_leaves(d: &Diagram, phase: Phase) -> Vec<VId> {
    d.vertex_ids()
        .filter(|&u| {
            d.kind(u) == VertexKind::Z(phase) && d.incident(u).len() == 1 && {
                let ed = d.edge(d.incident(u)[0]);
                let far = ed.other(u);
                // two leaves joined to each other form a closed scalar, not a site
                ed.kind == EdgeKind::Star && !ed.is_loop() && (d.degree(far) > 1 || d.kind(far).is_boundary())
            }
        })
        .collect()
}

pub fn choose_greedy(d: &Diagram) -> Option<Action> {
    if is_terminal(d) {
        return None;
    }
    if d.is_star_free() {
        return non_clifford(d).map(Action::Elementary);
    }
    let cat = catalog();
    let mut best: Option<(f64, Action)> = None;
    let mut offer = |beta: f64, a: Action| {
        if best.as_ref().map_or(true, |(b, _)| beta < *b - 1e-12) {
            best = Some((beta, a));
        }
    };
    let top = d
        .vertex_ids()
        .filter(|&v| d.kind(v).is_z() && d.star_degree(v) > 0)
        .min_by_key(|&v| (std::cmp::Reverse(d.star_degree(v)), v));
    if let Some(v) = top {
        offer(1.0 / d.star_degree(v) as f64, Action::Dynamic(v));
    }
    for eighths in [0, 2, 6] {
        let phase = Phase::new(eighths);
        let leaves = star_leaves(d, phase);
        for legs in (3..=leaves.len().min(5)).rev() {
            if let Ok(rule) = cat.star_state_rule(legs, phase) {
                offer(rule.scaling(), Action::StarState { phase, leaves: leaves[..legs].to_vec() });
            }
        }
    }
    let bare: Vec<EId> = star_edges(d).filter(|&e| !d.edge(e).is_loop()).collect();
    if !bare.is_empty() {
        let k = bare.len().min(3);
        let rule = cat.star_edge_rule(k).expect("shipped");
        offer(rule.scaling(), Action::StarEdges(bare[..k].to_vec()));
    }
    Some(best.map(|b| b.1).unwrap_or_else(|| bridge_or_edges(d, true)))
}

/// Raw children of `t` under `a`, coefficients multiplied through.
pub fn apply_action(t: &Term, a: &Action) -> Result<Vec<Term>, StrategyError> {
    let d = &t.diagram;
    let cat = catalog();
    let children: Vec<Term> = match a {
        Action::Elementary(v) => elementary_decompose(d, *v)?.into(),
        Action::Dynamic(v) => dynamic_decompose(d, *v)?.into(),
        Action::Pair(a, b) => {
            let mut out = Vec::with_capacity(4);
            for c in dynamic_decompose(d, *a)? {
                if c.diagram.contains_vertex(*b) && c.diagram.star_degree(*b) > 0 {
                    for g in dynamic_decompose(&c.diagram, *b)? {
                        out.push(Term::new(c.coeff * g.coeff, g.diagram));
                    }
                } else {
                    out.push(c);
                }
            }
            out
        }
        Action::StarEdges(es) => apply_star_edge_rule(d, cat.star_edge_rule(es.len())?, es)?,
        Action::StarState { phase, leaves } => {
            apply_star_state_rule(d, cat.star_state_rule(leaves.len(), *phase)?, leaves)?
        }
        Action::Bridge(e) => {
            let mut b = d.clone();
            let ed = b.remove_edge(*e).expect("live edge");
            let z = b.add_vertex_at(VertexKind::Z(Phase::ZERO), b.qubit(ed.a), b.row(ed.a));
            b.add_edge(ed.a, z, EdgeKind::Plain).expect("live");
            b.add_edge(z, ed.b, EdgeKind::Star).expect("live");
            dynamic_decompose(&b, z)?.into()
        }
    };
    Ok(children.into_iter().map(|c| Term::new(t.coeff * c.coeff, c.diagram)).collect())
}

enum Step {
    Done(Term),
    Split { children: Vec<Term>, raw: usize, weighting: Duration },
}

fn step(t: Term, strategy: Strategy, deadline: Option<Instant>) -> Result<Step, StrategyError> {
    if deadline.is_some_and(|d| Instant::now() >= d) {
        return Err(StrategyError::Timeout);
    }
    let clock = Instant::now();
    let action = match strategy {
        Strategy::Weighted => choose_weighted(&t.diagram),
        Strategy::Greedy => choose_greedy(&t.diagram),
    };
    let weighting = clock.elapsed();
    let Some(action) = action else {
        return Ok(Step::Done(t));
    };
    let raw = apply_action(&t, &action)?;
    let n = raw.len();
    let children = raw
        .into_iter()
        .filter_map(|mut c| {
            if c.is_prunable() {
                return None;
            }
            partial_simplify_in_place(&mut c.diagram);
            (!c.is_prunable()).then_some(c)
        })
        .collect();
    Ok(Step::Split { children, raw: n, weighting })
}

fn map_terms<U: Send>(v: Vec<Term>, f: impl Fn(Term) -> U + Sync + Send) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        v.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        v.into_iter().map(f).collect()
    }
}

/// Expands already-preprocessed terms until every one is star-free and
/// Clifford. Terms are processed level by level; the output order depends
/// only on the input, never on scheduling.
pub fn expand(roots: TermSum, strategy: Strategy) -> Result<(TermSum, ExpansionStats), StrategyError> {
    expand_until(roots, strategy, None)
}

/// As [`expand`], giving up with [`StrategyError::Timeout`] once `deadline`
/// has passed.
pub fn expand_until(
    roots: TermSum,
    strategy: Strategy,
    deadline: Option<Instant>,
) -> Result<(TermSum, ExpansionStats), StrategyError> {
    let mut stats = ExpansionStats::default();
    let mut done = Vec::new();
    let mut frontier: Vec<(Term, usize, usize)> = roots
        .into_iter()
        .filter(|t| !t.is_prunable())
        .map(|t| {
            let lim = depth_limit(&t.diagram);
            (t, 0, lim)
        })
        .collect();
    while !frontier.is_empty() {
        let meta: Vec<(usize, usize)> = frontier.iter().map(|f| (f.1, f.2)).collect();
        let terms: Vec<Term> = frontier.into_iter().map(|f| f.0).collect();
        let steps = map_terms(terms, |t| step(t, strategy, deadline));
        frontier = Vec::new();
        for (s, (depth, lim)) in steps.into_iter().zip(meta) {
            match s? {
                Step::Done(t) => {
                    stats.max_depth = stats.max_depth.max(depth);
                    done.push(t);
                }
                Step::Split { children, raw, weighting } => {
                    if depth + 1 > lim {
                        return Err(StrategyError::DepthExceeded { limit: lim });
                    }
                    stats.actions += 1;
                    stats.raw_branches += raw;
                    stats.pruned += raw - children.len();
                    stats.weighting += weighting;
                    frontier.extend(children.into_iter().map(|c| (c, depth + 1, lim)));
                }
            }
        }
    }
    Ok((done, stats))
}

pub fn decompose_with_stats(d: &Diagram, strategy: Strategy) -> Result<(TermSum, ExpansionStats), StrategyError> {
    expand(vec![Term::unit(preprocess(d))], strategy)
}

pub fn decompose_until(
    d: &Diagram,
    strategy: Strategy,
    deadline: Option<Instant>,
) -> Result<(TermSum, ExpansionStats), StrategyError> {
    expand_until(vec![Term::unit(preprocess(d))], strategy, deadline)
}

/// Preprocesses `d` and expands it with the weighting heuristic.
pub fn decompose_weighted(d: &Diagram) -> Result<TermSum, StrategyError> {
    decompose_with_stats(d, Strategy::Weighted).map(|r| r.0)
}

/// Preprocesses `d` and expands it with the smallest-scaling baseline.
pub fn decompose_greedy(d: &Diagram) -> Result<TermSum, StrategyError> {
    decompose_with_stats(d, Strategy::Greedy).map(|r| r.0)
}

/// Elementary split of spider `v`, then weighted expansion of both halves.
/// `d` is used as given; callers normally pass a [`preprocess`]ed diagram.
pub fn decompose_cut(d: &Diagram, v: VId) -> Result<(TermSum, ExpansionStats), StrategyError> {
    let root = Term::unit(d.clone());
    let halves = apply_action(&root, &Action::Elementary(v))?
        .into_iter()
        .map(|mut t| {
            partial_simplify_in_place(&mut t.diagram);
            t
        })
        .collect();
    let (terms, mut stats) = expand(halves, Strategy::Weighted)?;
    stats.actions += 1;
    stats.raw_branches += 2;
    stats.max_depth += 1;
    Ok((terms, stats))
}
