//! Following critical points while one radius varies.
//!
//! Every critical point found at the start parameter seeds a branch. Branches
//! advance by natural-parameter continuation: the previous point is the
//! predictor and Newton is the corrector, with step halving whenever the
//! corrector fails, jumps too far, or the point changes index or shape. The
//! full solver is re-run at a few checkpoints so that branches born inside the
//! interval are picked up and traced backwards to their origin. Events are
//! localized afterwards by bisection on scalar indicators: the sign of the
//! Hessian determinant, the sign of each vertex turn, and branch survival.

mod locus;

pub use locus::{parade_degeneracy_locus, LocusRoot};

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Circuit, Radii, ReducedConfiguration, Shape};
use crate::solver::{find_all, newton_refine, CriticalPoint, SolverSettings};

/// Turns smaller than this are treated as aligned and carry no sign.
const TURN_SIGN_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPlan {
    pub radii: Radii,
    pub vary_index: usize,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    /// Smallest continuation sub-step, as a fraction of one grid step.
    pub min_step_fraction: f64,
    /// Number of solver re-runs spread evenly over the sweep (the last one at the end).
    pub checkpoints: usize,
    /// Largest accepted torus distance between consecutive points of a branch.
    pub max_jump: f64,
    /// Parameter tolerance for event localization.
    pub event_tol: f64,
    pub settings: SolverSettings,
}

impl SweepPlan {
    pub fn new(radii: Radii, vary_index: usize, from: f64, to: f64, steps: usize) -> Self {
        SweepPlan {
            radii,
            vary_index,
            from,
            to,
            steps,
            min_step_fraction: 1.0 / 64.0,
            checkpoints: 4,
            max_jump: 0.5,
            event_tol: 1e-9,
            settings: SolverSettings::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.radii.len();
        if self.vary_index >= n {
            return Err(Error::InvalidPlan(format!(
                "vary index {} out of range for {n} circles",
                self.vary_index
            )));
        }
        for v in [self.from, self.to] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidPlan(format!("radius value {v} is not positive")));
            }
        }
        if self.from == self.to {
            return Err(Error::InvalidPlan("empty parameter range".into()));
        }
        if self.steps == 0 {
            return Err(Error::InvalidPlan("step count must be positive".into()));
        }
        if !(self.min_step_fraction > 0.0 && self.min_step_fraction <= 1.0) {
            return Err(Error::InvalidPlan("minimum step fraction must lie in (0, 1]".into()));
        }
        if !(self.max_jump > 0.0 && self.event_tol > 0.0) {
            return Err(Error::InvalidPlan("jump limit and event tolerance must be positive".into()));
        }
        self.settings.validate()
    }

    /// Grid parameter values, `steps + 1` of them from `from` to `to`.
    pub fn params(&self) -> Vec<f64> {
        let h = (self.to - self.from) / self.steps as f64;
        (0..=self.steps)
            .map(|k| if k == self.steps { self.to } else { self.from + k as f64 * h })
            .collect()
    }

    pub fn radii_at(&self, param: f64) -> Result<Radii> {
        self.radii.with_value(self.vary_index, param)
    }

    fn checkpoint_indices(&self) -> BTreeSet<usize> {
        let c = self.checkpoints.min(self.steps);
        (1..=c).map(|i| (self.steps * i).div_ceil(c)).collect()
    }
}

/// One branch point at one grid parameter; the row format of sweep output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSample {
    pub param: f64,
    pub branch_id: usize,
    pub perimeter: f64,
    pub morse_index: usize,
    pub shape: Shape,
    pub det_hessian: f64,
    pub tangential_radius: f64,
    pub angles: Vec<f64>,
}

impl SweepSample {
    fn new(param: f64, branch_id: usize, p: &CriticalPoint) -> Self {
        SweepSample {
            param,
            branch_id,
            perimeter: p.perimeter,
            morse_index: p.morse_index,
            shape: p.shape,
            det_hessian: p.hessian_det,
            tangential_radius: p.tangential_radius,
            angles: p.config.angles().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepBranch {
    pub id: usize,
    pub samples: Vec<SweepSample>,
    /// Parameter where the branch appears, if it does not exist at the start.
    pub birth: Option<f64>,
    /// Parameter where the branch ends, if it does not reach the end.
    pub death: Option<f64>,
    /// Branch it emerges from at birth.
    pub born_from: Option<usize>,
    /// Branch it merges into at death.
    pub merged_into: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EventKind {
    Fold,
    Pitchfork,
    Tangency,
    IndexChange,
}

impl EventKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::Fold => "Fold",
            EventKind::Pitchfork => "Pitchfork",
            EventKind::Tangency => "Tangency",
            EventKind::IndexChange => "IndexChange",
        }
    }
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepEvent {
    pub kind: EventKind,
    pub param: f64,
    /// Involved branch ids; the persisting branch (if any) comes first.
    pub branches: Vec<usize>,
    /// Hessian eigenvalue of smallest magnitude at the event.
    pub hessian_min_eig: f64,
    /// Vertex whose turn changes sign, for tangency events.
    pub vertex: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub plan: SweepPlan,
    pub branches: Vec<SweepBranch>,
    pub events: Vec<SweepEvent>,
    pub warnings: Vec<String>,
}

impl SweepResult {
    pub fn events_of(&self, kind: EventKind) -> impl Iterator<Item = &SweepEvent> {
        self.events.iter().filter(move |e| e.kind == kind)
    }

    pub fn branch(&self, id: usize) -> Option<&SweepBranch> {
        self.branches.iter().find(|b| b.id == id)
    }

    /// All samples in branch order, the layout used for CSV output.
    pub fn samples(&self) -> impl Iterator<Item = &SweepSample> {
        self.branches.iter().flat_map(|b| b.samples.iter())
    }
}

/// Where a branch stops existing, before localization.
#[derive(Debug, Clone)]
struct Ending {
    alive_param: f64,
    alive: CriticalPoint,
    gone_param: f64,
    partner: Option<usize>,
}

#[derive(Debug, Clone)]
struct Trace {
    id: usize,
    /// Grid index of the first sample; samples are contiguous in the grid.
    start: usize,
    points: Vec<CriticalPoint>,
    alive: bool,
    birth: Option<Ending>,
    death: Option<Ending>,
}

impl Trace {
    fn at(&self, k: usize) -> Option<&CriticalPoint> {
        k.checked_sub(self.start).and_then(|i| self.points.get(i))
    }

    fn end(&self) -> usize {
        self.start + self.points.len() - 1
    }
}

enum Step {
    Reached(CriticalPoint),
    Lost { param: f64, last: CriticalPoint, failed: f64 },
}

struct Tracker<'a> {
    plan: &'a SweepPlan,
}

impl Tracker<'_> {
    fn correct(&self, param: f64, predictor: &ReducedConfiguration) -> Option<CriticalPoint> {
        let radii = self.plan.radii_at(param).ok()?;
        let p = newton_refine(&radii, predictor, &self.plan.settings).ok()?;
        (p.config.torus_distance(predictor) <= self.plan.max_jump).then_some(p)
    }

    /// Continues `start` (a point at `from`) to the parameter `to`.
    fn step(&self, from: f64, start: &CriticalPoint, to: f64) -> Step {
        let full = to - from;
        let floor = full.abs() * self.plan.min_step_fraction * (1.0 + 1e-9);
        let mut h = full;
        let mut p = from;
        let mut cur = start.clone();
        while p != to {
            let target = if (to - p).abs() <= h.abs() * (1.0 + 1e-12) { to } else { p + h };
            match self.correct(target, &cur.config) {
                Some(next) if next.morse_index == cur.morse_index && next.shape == cur.shape => {
                    cur = next;
                    p = target;
                    h = (2.0 * h).clamp(-full.abs(), full.abs());
                }
                Some(next) if h.abs() <= floor => {
                    cur = next;
                    p = target;
                }
                None if h.abs() <= floor => {
                    return Step::Lost {
                        param: p,
                        last: cur,
                        failed: target,
                    }
                }
                _ => h *= 0.5,
            }
        }
        Step::Reached(cur)
    }

    /// Bisects between a point `lo` at `lo_param` and `hi_param` for the
    /// parameter where `same` stops holding. Returns the parameter and the
    /// last point on the `lo` side.
    fn bisect(
        &self,
        mut lo_param: f64,
        mut lo: CriticalPoint,
        mut hi_param: f64,
        same: impl Fn(f64, &CriticalPoint) -> bool,
    ) -> (f64, CriticalPoint) {
        while (hi_param - lo_param).abs() > self.plan.event_tol {
            let mid = 0.5 * (lo_param + hi_param);
            if mid == lo_param || mid == hi_param {
                break;
            }
            match self.correct(mid, &lo.config) {
                Some(p) if same(mid, &p) => {
                    lo_param = mid;
                    lo = p;
                }
                _ => hi_param = mid,
            }
        }
        (0.5 * (lo_param + hi_param), lo)
    }

    /// Like `bisect`, for the parameter where two tracked points coincide.
    fn bisect_merge(
        &self,
        mut lo_param: f64,
        mut a: CriticalPoint,
        mut b: CriticalPoint,
        mut hi_param: f64,
    ) -> (f64, CriticalPoint) {
        let radius = self.plan.settings.dedupe_radius;
        while (hi_param - lo_param).abs() > self.plan.event_tol {
            let mid = 0.5 * (lo_param + hi_param);
            if mid == lo_param || mid == hi_param {
                break;
            }
            match (self.correct(mid, &a.config), self.correct(mid, &b.config)) {
                (Some(pa), Some(pb)) if pa.config.torus_distance(&pb.config) >= radius => {
                    lo_param = mid;
                    a = pa;
                    b = pb;
                }
                _ => hi_param = mid,
            }
        }
        (0.5 * (lo_param + hi_param), a)
    }

    fn localize(&self, ending: &Ending, traces: &[Trace], params: &[f64]) -> (f64, CriticalPoint) {
        let partner = ending.partner.and_then(|j| {
            let k = nearest_index(params, ending.alive_param);
            traces[j].at(k).cloned()
        });
        match partner {
            Some(other) => self.bisect_merge(ending.alive_param, ending.alive.clone(), other, ending.gone_param),
            None => self.bisect(ending.alive_param, ending.alive.clone(), ending.gone_param, |_, _| true),
        }
    }
}

fn nearest_index(params: &[f64], p: f64) -> usize {
    (0..params.len())
        .min_by(|&i, &j| (params[i] - p).abs().total_cmp(&(params[j] - p).abs()))
        .unwrap_or(0)
}

fn smallest_eig(p: &CriticalPoint) -> f64 {
    p.eigenvalues
        .iter()
        .copied()
        .min_by(|a, b| a.abs().total_cmp(&b.abs()))
        .unwrap_or(0.0)
}

fn turns(plan: &SweepPlan, param: f64, p: &CriticalPoint) -> Vec<f64> {
    plan.radii_at(param)
        .and_then(|r| Circuit::new(&r, &p.config))
        .map(|c| c.turns())
        .unwrap_or_default()
}

/// Chooses which of two coinciding traces dies: one that just changed index
/// or shape, otherwise the one that moved further in the last step.
fn merge_loser(a: &Trace, b: &Trace, k: usize) -> usize {
    let score = |t: &Trace| -> (bool, f64) {
        match (t.at(k - 1), t.at(k)) {
            (Some(prev), Some(cur)) => (
                prev.morse_index != cur.morse_index || prev.shape != cur.shape,
                prev.config.torus_distance(&cur.config),
            ),
            _ => (true, f64::INFINITY),
        }
    };
    let (sa, sb) = (score(a), score(b));
    if sa.0 != sb.0 {
        return if sa.0 { a.id } else { b.id };
    }
    if sa.1 != sb.1 {
        return if sa.1 > sb.1 { a.id } else { b.id };
    }
    a.id.max(b.id)
}

#[derive(Debug, Clone)]
struct Crossing {
    branch: usize,
    param: f64,
    min_eig: f64,
    vertex: Option<usize>,
}

#[derive(Debug, Clone)]
struct Transition {
    branch: usize,
    param: f64,
    partner: Option<usize>,
    min_eig: f64,
}

/// Runs the continuation described by `plan`.
pub fn sweep(plan: &SweepPlan) -> Result<SweepResult> {
    plan.validate()?;
    let params = plan.params();
    let tracker = Tracker { plan };
    let mut warnings = Vec::new();
    let radius = plan.settings.dedupe_radius;

    let start = find_all(&plan.radii_at(params[0])?, &plan.settings)?;
    warnings.extend(start.warnings.iter().map(|w| format!("at {}: {w}", params[0])));
    let mut traces: Vec<Trace> = start
        .points
        .into_iter()
        .enumerate()
        .map(|(id, p)| Trace {
            id,
            start: 0,
            points: vec![p],
            alive: true,
            birth: None,
            death: None,
        })
        .collect();
    let checkpoints = plan.checkpoint_indices();

    for k in 1..params.len() {
        let live: Vec<usize> = traces.iter().filter(|t| t.alive).map(|t| t.id).collect();
        let outcomes: Vec<Step> = live
            .par_iter()
            .map(|&i| {
                let last = traces[i].points.last().expect("traces are never empty");
                tracker.step(params[k - 1], last, params[k])
            })
            .collect();
        for (&i, outcome) in live.iter().zip(outcomes) {
            match outcome {
                Step::Reached(p) => traces[i].points.push(p),
                Step::Lost { param, last, failed } => {
                    traces[i].alive = false;
                    traces[i].death = Some(Ending {
                        alive_param: param,
                        alive: last,
                        gone_param: failed,
                        partner: None,
                    });
                }
            }
        }
        resolve_merges(&mut traces, k, &params, radius);

        if checkpoints.contains(&k) {
            let cat = find_all(&plan.radii_at(params[k])?, &plan.settings)?;
            for p in cat.points {
                let known = traces
                    .iter()
                    .filter(|t| t.alive)
                    .any(|t| t.at(k).is_some_and(|q| q.config.torus_distance(&p.config) < radius.max(1e-6)));
                if known {
                    continue;
                }
                let trace = trace_backward(&tracker, &traces, traces.len(), k, p, &params, radius);
                if trace.birth.is_none() {
                    warnings.push(format!(
                        "branch {} exists at the start but was missing from the initial catalogue",
                        trace.id
                    ));
                }
                traces.push(trace);
            }
        }
    }

    let events = detect_events(&tracker, &traces, &params);
    let mut deaths = Vec::new();
    let mut births = Vec::new();
    for t in &traces {
        if let Some(e) = &t.death {
            let (param, at) = tracker.localize(e, &traces, &params);
            deaths.push(Transition {
                branch: t.id,
                param,
                partner: e.partner,
                min_eig: smallest_eig(&at),
            });
        }
        if let Some(e) = &t.birth {
            let (param, at) = tracker.localize(e, &traces, &params);
            births.push(Transition {
                branch: t.id,
                param,
                partner: e.partner,
                min_eig: smallest_eig(&at),
            });
        }
    }
    let group_tol = 2.0 * (plan.to - plan.from).abs() / plan.steps as f64;
    let events = reconcile(events, &deaths, &births, group_tol);

    let branches = traces
        .iter()
        .map(|t| SweepBranch {
            id: t.id,
            samples: t
                .points
                .iter()
                .enumerate()
                .map(|(i, p)| SweepSample::new(params[t.start + i], t.id, p))
                .collect(),
            birth: births.iter().find(|b| b.branch == t.id).map(|b| b.param),
            death: deaths.iter().find(|d| d.branch == t.id).map(|d| d.param),
            born_from: t.birth.as_ref().and_then(|e| e.partner),
            merged_into: t.death.as_ref().and_then(|e| e.partner),
        })
        .collect();

    Ok(SweepResult {
        plan: plan.clone(),
        branches,
        events,
        warnings,
    })
}

fn resolve_merges(traces: &mut [Trace], k: usize, params: &[f64], radius: f64) {
    loop {
        let live: Vec<usize> = traces
            .iter()
            .filter(|t| t.alive && t.end() == k)
            .map(|t| t.id)
            .collect();
        let pair = live.iter().enumerate().find_map(|(x, &i)| {
            live[x + 1..].iter().find_map(|&j| {
                let d = traces[i].at(k)?.config.torus_distance(&traces[j].at(k)?.config);
                (d < radius).then_some((i, j))
            })
        });
        let Some((i, j)) = pair else { return };
        let loser = merge_loser(&traces[i], &traces[j], k);
        let winner = if loser == i { j } else { i };
        let t = &mut traces[loser];
        t.alive = false;
        t.points.pop();
        if let Some(last) = t.points.last().cloned() {
            t.death = Some(Ending {
                alive_param: params[k - 1],
                alive: last,
                gone_param: params[k],
                partner: Some(winner),
            });
        }
    }
}

fn trace_backward(
    tracker: &Tracker<'_>,
    traces: &[Trace],
    id: usize,
    k: usize,
    p: CriticalPoint,
    params: &[f64],
    radius: f64,
) -> Trace {
    let mut points = vec![p];
    let mut first = k;
    let mut birth = None;
    while first > 0 {
        let cur = points[0].clone();
        match tracker.step(params[first], &cur, params[first - 1]) {
            Step::Lost { param, last, failed } => {
                birth = Some(Ending {
                    alive_param: param,
                    alive: last,
                    gone_param: failed,
                    partner: None,
                });
                break;
            }
            Step::Reached(q) => {
                let partner = traces.iter().find(|t| {
                    t.at(first - 1)
                        .is_some_and(|o| o.config.torus_distance(&q.config) < radius)
                });
                if let Some(other) = partner {
                    birth = Some(Ending {
                        alive_param: params[first],
                        alive: cur,
                        gone_param: params[first - 1],
                        partner: Some(other.id),
                    });
                    break;
                }
                points.insert(0, q);
                first -= 1;
            }
        }
    }
    Trace {
        id,
        start: first,
        points,
        alive: true,
        birth,
        death: None,
    }
}

/// Sign changes of the Hessian determinant and of vertex turns along each branch.
fn detect_events(tracker: &Tracker<'_>, traces: &[Trace], params: &[f64]) -> (Vec<Crossing>, Vec<Crossing>) {
    let plan = tracker.plan;
    let per_trace: Vec<(Vec<Crossing>, Vec<Crossing>)> = traces
        .par_iter()
        .map(|t| {
            let mut dets = Vec::new();
            let mut tangencies = Vec::new();
            for w in 0..t.points.len().saturating_sub(1) {
                let (a, b) = (&t.points[w], &t.points[w + 1]);
                let (pa, pb) = (params[t.start + w], params[t.start + w + 1]);
                let sa = a.hessian_det.signum();
                if a.hessian_det != 0.0 && b.hessian_det != 0.0 && sa != b.hessian_det.signum() {
                    let (param, at) = tracker.bisect(pa, a.clone(), pb, |_, p| p.hessian_det.signum() == sa);
                    dets.push(Crossing {
                        branch: t.id,
                        param,
                        min_eig: smallest_eig(&at),
                        vertex: None,
                    });
                } else if a.morse_index != b.morse_index {
                    let ia = a.morse_index;
                    let (param, at) = tracker.bisect(pa, a.clone(), pb, |_, p| p.morse_index == ia);
                    dets.push(Crossing {
                        branch: t.id,
                        param,
                        min_eig: smallest_eig(&at),
                        vertex: None,
                    });
                }
                let (ta, tb) = (turns(plan, pa, a), turns(plan, pb, b));
                for (v, (&x, &y)) in ta.iter().zip(&tb).enumerate() {
                    if x.abs() > TURN_SIGN_TOL && y.abs() > TURN_SIGN_TOL && x.signum() != y.signum() {
                        let sx = x.signum();
                        let (param, at) = tracker.bisect(pa, a.clone(), pb, |q, p| {
                            turns(plan, q, p).get(v).is_some_and(|&t| t.signum() == sx)
                        });
                        tangencies.push(Crossing {
                            branch: t.id,
                            param,
                            min_eig: smallest_eig(&at),
                            vertex: Some(v),
                        });
                    }
                }
            }
            (dets, tangencies)
        })
        .collect();
    let mut dets = Vec::new();
    let mut tangencies = Vec::new();
    for (d, t) in per_trace {
        dets.extend(d);
        tangencies.extend(t);
    }
    (dets, tangencies)
}

fn reconcile(
    (dets, tangencies): (Vec<Crossing>, Vec<Crossing>),
    deaths: &[Transition],
    births: &[Transition],
    tol: f64,
) -> Vec<SweepEvent> {
    let transitions: Vec<&Transition> = deaths.iter().chain(births).collect();
    let mut used_transition = vec![false; transitions.len()];
    let mut used_det = vec![false; dets.len()];
    let mut events = Vec::new();

    // terminations feeding into `branch` near `param`, followed transitively
    let attach = |branch: usize, param: f64, used: &mut Vec<bool>| -> Vec<usize> {
        let mut involved = vec![branch];
        let mut grew = true;
        while grew {
            grew = false;
            for (i, tr) in transitions.iter().enumerate() {
                let feeds = tr.partner.is_some_and(|p| involved.contains(&p));
                if !used[i] && feeds && (tr.param - param).abs() <= tol {
                    used[i] = true;
                    grew = true;
                    if !involved.contains(&tr.branch) {
                        involved.push(tr.branch);
                    }
                }
            }
        }
        involved
    };

    let mut seen_tangency: Vec<(usize, f64)> = Vec::new();
    for t in &tangencies {
        if seen_tangency
            .iter()
            .any(|&(b, p)| b == t.branch && (p - t.param).abs() <= tol)
        {
            continue;
        }
        seen_tangency.push((t.branch, t.param));
        let mut min_eig = t.min_eig;
        for (i, d) in dets.iter().enumerate() {
            if !used_det[i] && d.branch == t.branch && (d.param - t.param).abs() <= tol {
                used_det[i] = true;
                if d.min_eig.abs() < min_eig.abs() {
                    min_eig = d.min_eig;
                }
            }
        }
        events.push(SweepEvent {
            kind: EventKind::Tangency,
            param: t.param,
            branches: attach(t.branch, t.param, &mut used_transition),
            hessian_min_eig: min_eig,
            vertex: t.vertex,
        });
    }

    for (i, d) in dets.iter().enumerate() {
        if used_det[i] {
            continue;
        }
        let branches = attach(d.branch, d.param, &mut used_transition);
        let kind = if branches.len() >= 3 {
            EventKind::Pitchfork
        } else {
            EventKind::IndexChange
        };
        events.push(SweepEvent {
            kind,
            param: d.param,
            branches,
            hessian_min_eig: d.min_eig,
            vertex: None,
        });
    }

    // remaining terminations, grouped by parameter
    let mut rest: Vec<usize> = (0..transitions.len()).filter(|&i| !used_transition[i]).collect();
    rest.sort_by(|&a, &b| transitions[a].param.total_cmp(&transitions[b].param));
    let mut idx = 0;
    while idx < rest.len() {
        let first = transitions[rest[idx]];
        let mut group = vec![first];
        idx += 1;
        while idx < rest.len() && (transitions[rest[idx]].param - first.param).abs() <= tol {
            group.push(transitions[rest[idx]]);
            idx += 1;
        }
        let mut branches: Vec<usize> = Vec::new();
        for tr in &group {
            for b in std::iter::once(tr.branch).chain(tr.partner) {
                if !branches.contains(&b) {
                    branches.push(b);
                }
            }
        }
        let min_eig = group
            .iter()
            .map(|tr| tr.min_eig)
            .min_by(|a, b| a.abs().total_cmp(&b.abs()))
            .unwrap_or(0.0);
        events.push(SweepEvent {
            kind: EventKind::Fold,
            param: first.param,
            branches,
            hessian_min_eig: min_eig,
            vertex: None,
        });
    }

    events.sort_by(|a, b| {
        a.param
            .total_cmp(&b.param)
            .then(a.kind.cmp(&b.kind))
            .then(a.branches.cmp(&b.branches))
    });
    events
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(r: &[f64], vary: usize, from: f64, to: f64, steps: usize) -> SweepPlan {
        SweepPlan::new(Radii::new(r.to_vec()).unwrap(), vary, from, to, steps)
    }

    #[test]
    fn validation() {
        assert!(plan(&[1.0, 2.0, 3.0], 3, 1.0, 2.0, 10).validate().is_err());
        assert!(plan(&[1.0, 2.0, 3.0], 1, -1.0, 2.0, 10).validate().is_err());
        assert!(plan(&[1.0, 2.0, 3.0], 1, 2.0, 2.0, 10).validate().is_err());
        assert!(plan(&[1.0, 2.0, 3.0], 1, 1.5, 2.5, 0).validate().is_err());
        assert!(plan(&[1.0, 2.0, 3.0], 1, 1.5, 2.5, 10).validate().is_ok());
    }

    #[test]
    fn params_hit_endpoints() {
        let p = plan(&[1.0, 2.0, 3.0], 1, 2.53, 1.0, 7).params();
        assert_eq!(p.len(), 8);
        assert_eq!(p[0], 2.53);
        assert_eq!(p[7], 1.0);
    }

    #[test]
    fn three_circles_have_no_events() {
        let res = sweep(&plan(&[1.0, 2.0, 3.0], 1, 1.2, 2.8, 40)).unwrap();
        assert!(res.events.is_empty(), "{:?}", res.events);
        assert_eq!(res.branches.len(), 6);
        assert!(res.branches.iter().all(|b| b.samples.len() == 41 && b.death.is_none()));
    }
}
