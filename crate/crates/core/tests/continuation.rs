use concentric_cycles::closed_forms::{fermat_triangle_inradius, partially_aligned_circuits};
use concentric_cycles::continuation::{parade_degeneracy_locus, sweep, EventKind, SweepPlan, SweepResult};
use concentric_cycles::{Error, Radii, Shape};

fn reference_plan(steps: usize) -> SweepPlan {
    SweepPlan::new(Radii::new(vec![3.0, 2.53, 3.0, 4.6]).unwrap(), 1, 2.53, 1.0, steps)
}

fn event_params(res: &SweepResult, kind: EventKind) -> Vec<f64> {
    res.events_of(kind).map(|e| e.param).collect()
}

#[test]
fn reference_sweep() {
    let res = sweep(&reference_plan(200)).unwrap();
    assert_eq!(res.branches.len(), 18);

    let sigma = fermat_triangle_inradius(3.0, 3.0, 4.6).unwrap();
    let tangencies: Vec<_> = res.events_of(EventKind::Tangency).collect();
    assert_eq!(tangencies.len(), 2, "{:?}", res.events);
    for t in &tangencies {
        assert!((t.param - sigma).abs() < 1e-6);
        assert_eq!(t.vertex, Some(1));
        // the convex branch persists as a spear; two partially aligned branches end on it
        let survivor = res.branch(t.branches[0]).unwrap();
        assert_eq!(survivor.samples[0].shape, Shape::Convex);
        assert_eq!(t.branches.len(), 3);
        for &b in &t.branches[1..] {
            assert_eq!(res.branch(b).unwrap().samples[0].shape, Shape::PartiallyAligned);
        }
    }

    let pitchforks: Vec<_> = res.events_of(EventKind::Pitchfork).collect();
    assert_eq!(pitchforks.len(), 1);
    let p = pitchforks[0];
    let root = parade_degeneracy_locus(&res.plan.radii, 1, 2.53, 1.0).unwrap()[0].param;
    assert!((p.param - root).abs() < 1e-6);
    // the parade persists; two spear branches end on it
    assert_eq!(res.branch(p.branches[0]).unwrap().samples.last().unwrap().shape, Shape::Parade);
    assert_eq!(p.branches.len(), 3);
    for &b in &p.branches[1..] {
        let spear = res.branch(b).unwrap();
        assert_eq!(spear.samples.last().unwrap().shape, Shape::Spear);
        assert_eq!(spear.merged_into, Some(p.branches[0]));
    }
    assert!(res.events_of(EventKind::Fold).next().is_none());
}

#[test]
fn tangency_counts_partially_aligned_solutions() {
    let res = sweep(&reference_plan(100)).unwrap();
    let t = res.events_of(EventKind::Tangency).next().unwrap().param;
    let count = |r2: f64| {
        partially_aligned_circuits(&Radii::new(vec![3.0, r2, 3.0, 4.6]).unwrap(), 1)
            .unwrap()
            .count
    };
    assert_eq!(count(t + 1e-4), 2);
    assert_eq!(count(t), 1);
    assert_eq!(count(t - 1e-4), 0);
}

#[test]
fn events_stable_under_step_halving() {
    let coarse = sweep(&reference_plan(200)).unwrap();
    let fine = sweep(&reference_plan(400)).unwrap();
    for kind in [EventKind::Tangency, EventKind::Pitchfork, EventKind::Fold, EventKind::IndexChange] {
        let (a, b) = (event_params(&coarse, kind), event_params(&fine, kind));
        assert_eq!(a.len(), b.len(), "{kind}");
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-4, "{kind}: {x} vs {y}");
        }
    }
}

#[test]
fn index_is_constant_between_events() {
    let res = sweep(&reference_plan(200)).unwrap();
    for b in &res.branches {
        for w in b.samples.windows(2) {
            if w[0].morse_index != w[1].morse_index {
                let (lo, hi) = (w[1].param.min(w[0].param), w[1].param.max(w[0].param));
                assert!(
                    res.events.iter().any(|e| e.branches.contains(&b.id) && e.param >= lo && e.param <= hi),
                    "branch {} changes index in [{lo}, {hi}] without an event",
                    b.id
                );
            }
        }
    }
}

#[test]
fn three_circles_sweep_is_quiet() {
    let plan = SweepPlan::new(Radii::new(vec![1.0, 2.0, 3.0]).unwrap(), 1, 1.1, 2.9, 60);
    let res = sweep(&plan).unwrap();
    assert!(res.events.is_empty());
    assert_eq!(res.branches.len(), 6);
    assert!(res.branches.iter().all(|b| b.birth.is_none() && b.death.is_none()));
}

#[test]
fn invalid_plans_are_rejected() {
    let r = Radii::new(vec![1.0, 2.0, 3.0]).unwrap();
    for plan in [
        SweepPlan::new(r.clone(), 5, 1.0, 2.0, 10),
        SweepPlan::new(r.clone(), 0, 0.0, 2.0, 10),
        SweepPlan::new(r.clone(), 0, 1.0, 2.0, 0),
    ] {
        assert!(matches!(sweep(&plan), Err(Error::InvalidPlan(_))));
    }
}
