use std::f64::consts::{PI, TAU};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use concentric_cycles::closed_forms::{
    all_parade_signs, convex_quad_inradius, fermat_triangle_inradius, parade_config, parade_hessian,
    parade_perimeter, partially_aligned_circuits, snellius_from_socle, snellius_perimeter, socle_roots,
    three_cc_catalogue, CatalogueEntry, ParadeHessianReport, PartialAlignment,
};
use concentric_cycles::continuation::{sweep, SweepPlan};
use concentric_cycles::geometry::{
    classify_vertices, full_gradient, gradient, gradient_norm, hessian, perimeter, shape_of, tangential_distances,
    CLASSIFICATION_TOL, STATIONARITY_TOL,
};
use concentric_cycles::morse::symmetric_eigenvalues;
use concentric_cycles::solver::{brute_force_oracle, catalogues_match, find_all};
use concentric_cycles::{Circuit, Radii, ReducedConfiguration, Shape, SolverSettings, VertexEvent};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::args::{CheckArgs, CommonArgs, OutputArgs, RadiiArgs, SolverArgs, SweepArgs, VerifyArgs};
use crate::error::CliError;
use crate::output::{to_json, write_sweep_csv, CatalogueJson, Inputs, RunRecord, SweepJson};

fn parse_radii(args: &RadiiArgs) -> Result<Radii, CliError> {
    let values = args.values();
    if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| !(v.is_finite() && **v > 0.0)) {
        return Err(CliError::Invalid(format!(
            "radius {} must be positive and finite, got {v}",
            i + 1
        )));
    }
    Ok(Radii::new(values)?)
}

fn settings(args: &SolverArgs) -> Result<SolverSettings, CliError> {
    let mut s = SolverSettings::default();
    if let Some(g) = args.grid {
        s.grid_density = g;
    }
    if let Some(t) = args.tol {
        s.newton_tol = t;
    }
    s.validate()?;
    Ok(s)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)?;
    Ok(())
}

fn write_record(
    output: &OutputArgs,
    command: &str,
    radii: &Radii,
    settings: &SolverSettings,
    extra: serde_json::Value,
    value: serde_json::Value,
    started: Instant,
) -> Result<(), CliError> {
    if let Some(path) = &output.json {
        let inputs = Inputs {
            command: command.to_string(),
            radii: radii.as_slice().to_vec(),
            settings: settings.clone(),
            extra,
        };
        let timing = output.timing.then(|| started.elapsed().as_secs_f64());
        write_file(path, &to_json(&RunRecord::new(inputs, value, timing))?)?;
    }
    Ok(())
}

pub fn critical(args: &CommonArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let started = Instant::now();
    let radii = parse_radii(&args.radii)?;
    let settings = settings(&args.solver)?;
    let cat = find_all(&radii, &settings)?;
    let json = CatalogueJson::from(&cat);
    out.write_all(to_json(&json)?.as_bytes())?;
    let value = serde_json::to_value(&json)?;
    write_record(&args.output, "critical", &radii, &settings, json!({}), value, started)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParadeJson {
    /// Side of the centre for every vertex (the last one is always +1).
    pub signs: Vec<i8>,
    pub perimeter: f64,
    pub hessian: Option<ParadeHessianReport>,
    pub note: Option<String>,
}

pub fn parades(args: &CommonArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let started = Instant::now();
    let radii = parse_radii(&args.radii)?;
    let settings = settings(&args.solver)?;
    let list: Vec<ParadeJson> = all_parade_signs(radii.len())
        .iter()
        .map(|signs| {
            let mut full = signs.signs().to_vec();
            full.push(1);
            let perimeter = parade_perimeter(&radii, signs)?;
            let (hessian, note) = match parade_hessian(&radii, signs) {
                Ok(rep) => (Some(rep), None),
                Err(e) => (None, Some(e.to_string())),
            };
            Ok(ParadeJson {
                signs: full,
                perimeter,
                hessian,
                note,
            })
        })
        .collect::<Result<_, CliError>>()?;
    out.write_all(to_json(&list)?.as_bytes())?;
    let value = serde_json::to_value(&list)?;
    write_record(&args.output, "parades", &radii, &settings, json!({}), value, started)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SocleJson {
    pub signs: Vec<i8>,
    pub sigma: f64,
    pub perimeter: f64,
    pub angles: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormJson {
    pub radii: Vec<f64>,
    /// Inradius of the stationary triangle (three circles).
    pub triangle_inradius: Option<f64>,
    /// Six critical values for three pairwise distinct radii.
    pub three_circle_catalogue: Option<Vec<CatalogueEntry>>,
    /// Inradius of the convex stationary quadrilateral (four circles), if one exists.
    pub quadrilateral_inradius: Option<f64>,
    /// Partially aligned circuits for four circles, one entry per skipped circle.
    pub partially_aligned: Vec<PartialAlignment>,
    /// Stationary circuits from roots of the closure equation, positive orientation.
    pub socle_circuits: Vec<SocleJson>,
}

pub fn closed_form(args: &CommonArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let started = Instant::now();
    let radii = parse_radii(&args.radii)?;
    let settings = settings(&args.solver)?;
    let r = radii.as_slice();
    let n = r.len();
    let mut report = ClosedFormJson {
        radii: r.to_vec(),
        triangle_inradius: None,
        three_circle_catalogue: None,
        quadrilateral_inradius: None,
        partially_aligned: Vec::new(),
        socle_circuits: Vec::new(),
    };
    if n == 3 {
        report.triangle_inradius = Some(fermat_triangle_inradius(r[0], r[1], r[2])?);
        report.three_circle_catalogue = three_cc_catalogue([r[0], r[1], r[2]]).ok();
    }
    if n == 4 {
        report.quadrilateral_inradius = convex_quad_inradius(r[0], r[1], r[2], r[3])?;
        report.partially_aligned = (0..4)
            .map(|skip| partially_aligned_circuits(&radii, skip))
            .collect::<Result<_, _>>()?;
    }
    for k in 0..(1usize << n) - 1 {
        let signs: Vec<i8> = (0..n).map(|i| if k >> i & 1 == 1 { -1 } else { 1 }).collect();
        for sigma in socle_roots(&radii, &signs)? {
            if let Ok(c) = snellius_from_socle(&radii, sigma, &signs, 1) {
                report.socle_circuits.push(SocleJson {
                    perimeter: snellius_perimeter(&radii, sigma, &signs),
                    signs: signs.clone(),
                    sigma,
                    angles: c.angles().to_vec(),
                });
            }
        }
    }
    out.write_all(to_json(&report)?.as_bytes())?;
    let value = serde_json::to_value(&report)?;
    write_record(&args.output, "closed-form", &radii, &settings, json!({}), value, started)
}

pub fn run_sweep(args: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let started = Instant::now();
    let radii = parse_radii(&args.radii)?;
    if args.vary == 0 || args.vary > radii.len() {
        return Err(CliError::Invalid(format!(
            "--vary must lie between 1 and {}",
            radii.len()
        )));
    }
    let mut plan = SweepPlan::new(radii.clone(), args.vary - 1, args.from, args.to, args.steps);
    plan.settings = settings(&args.solver)?;
    plan.validate()?;
    let res = sweep(&plan)?;
    let n = radii.len();
    match &args.csv {
        Some(path) => write_sweep_csv(BufWriter::new(File::create(path)?), n, res.samples())?,
        None => write_sweep_csv(&mut *out, n, res.samples())?,
    }
    let summary = SweepJson::from(&res);
    if let Some(path) = &args.json {
        write_file(path, &to_json(&summary)?)?;
    }
    for e in &summary.events {
        writeln!(err, "{} at {} (branches {:?})", e.kind, e.param, e.branches)?;
    }
    for w in &summary.warnings {
        writeln!(err, "warning: {w}")?;
    }
    if args.timing {
        writeln!(err, "elapsed {:.3} s", started.elapsed().as_secs_f64())?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// `None` when the check does not apply to these radii.
    pub passed: Option<bool>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub radii: Vec<f64>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerifyReport {
    fn new(radii: &Radii) -> Self {
        VerifyReport {
            radii: radii.as_slice().to_vec(),
            checks: Vec::new(),
            passed: true,
        }
    }

    fn add(&mut self, name: &str, passed: bool, detail: String) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.to_string(),
            passed: Some(passed),
            detail,
        });
    }

    fn skip(&mut self, name: &str, detail: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: None,
            detail: detail.to_string(),
        });
    }
}

fn min_side(radii: &Radii, config: &ReducedConfiguration) -> f64 {
    let full = config.full_angles();
    let n = full.len();
    (0..n)
        .map(|j| {
            let k = (j + 1) % n;
            let (a, b) = (radii.get(j), radii.get(k));
            (a * a + b * b - 2.0 * a * b * (full[k] - full[j]).cos()).max(0.0).sqrt()
        })
        .fold(f64::INFINITY, f64::min)
}

fn random_configs(radii: &Radii, count: usize) -> Vec<ReducedConfiguration> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut configs = Vec::with_capacity(count);
    while configs.len() < count {
        let c = ReducedConfiguration::new((1..radii.len()).map(|_| rng.random_range(0.0..TAU)).collect());
        if min_side(radii, &c) > 1e-2 * radii.max() {
            configs.push(c);
        }
    }
    configs
}

fn derivative_checks(radii: &Radii, report: &mut VerifyReport) -> Result<(), CliError> {
    let h = 1e-6;
    let (mut grad_err, mut hess_err, mut sum_err) = (0.0f64, 0.0f64, 0.0f64);
    for c in random_configs(radii, 200) {
        let g = gradient(radii, &c)?;
        let hm = hessian(radii, &c)?;
        let m = c.dim();
        for i in 0..m {
            let mut step = vec![0.0; m];
            step[i] = h;
            let (plus, gp) = (perimeter(radii, &c.offset(&step))?, gradient(radii, &c.offset(&step))?);
            step[i] = -h;
            let (minus, gm) = (perimeter(radii, &c.offset(&step))?, gradient(radii, &c.offset(&step))?);
            let fd = (plus - minus) / (2.0 * h);
            grad_err = grad_err.max((fd - g[i]).abs() / g[i].abs().max(1.0));
            for j in 0..m {
                let fd = (gp[j] - gm[j]) / (2.0 * h);
                hess_err = hess_err.max((fd - hm[(j, i)]).abs() / hm[(j, i)].abs().max(1.0));
            }
        }
        sum_err = sum_err.max(full_gradient(radii, &c)?.iter().sum::<f64>().abs());
    }
    report.add(
        "finite-difference gradient",
        grad_err < 1e-6,
        format!("200 configurations, worst relative error {grad_err:.3e}"),
    );
    report.add(
        "finite-difference Hessian",
        hess_err < 1e-4,
        format!("worst relative error {hess_err:.3e}"),
    );
    report.add(
        "full gradient sums to zero",
        sum_err < 1e-12,
        format!("worst sum {sum_err:.3e}"),
    );
    Ok(())
}

fn closed_form_checks(radii: &Radii, report: &mut VerifyReport) -> Result<(), CliError> {
    let r = radii.as_slice();
    let n = r.len();
    let sigma = match n {
        3 => Some(fermat_triangle_inradius(r[0], r[1], r[2])?),
        4 => convex_quad_inradius(r[0], r[1], r[2], r[3])?,
        _ => None,
    };
    match sigma {
        Some(sigma) => {
            let closure = (r.iter().map(|x| (sigma / x).acos()).sum::<f64>() - PI).abs();
            let config = snellius_from_socle(radii, sigma, &vec![1; n], 1)?;
            let g = gradient_norm(radii, &config)?;
            report.add(
                "closed-form inradius closes the socle",
                closure < 1e-10,
                format!("inradius {sigma}, closure error {closure:.3e}"),
            );
            report.add(
                "closed-form circuit is stationary",
                g < 1e-8,
                format!("gradient norm {g:.3e}"),
            );
        }
        None if n <= 4 => report.skip(
            "closed-form inradius closes the socle",
            "no convex stationary circuit for these radii",
        ),
        None => report.skip("closed-form inradius closes the socle", "only defined for 3 or 4 circles"),
    }
    if n == 4 {
        let mut worst = 0.0f64;
        let mut count = 0;
        for skip in 0..4 {
            for c in partially_aligned_circuits(radii, skip)?.configs {
                worst = worst.max(gradient_norm(radii, &c)?);
                count += 1;
            }
        }
        report.add(
            "partially aligned circuits are stationary",
            worst < 1e-8,
            format!("{count} circuits, worst gradient norm {worst:.3e}"),
        );
    }
    Ok(())
}

fn parade_checks(radii: &Radii, report: &mut VerifyReport) -> Result<(), CliError> {
    let (mut worst, mut degenerate, mut checked, mut singular) = (0.0f64, 0, 0, 0);
    for signs in all_parade_signs(radii.len()) {
        match parade_hessian(radii, &signs) {
            Ok(rep) => {
                let h = hessian(radii, &parade_config(&signs))?;
                worst = worst.max((rep.dmatrix() - h).amax());
                degenerate += usize::from(rep.degenerate);
                checked += 1;
            }
            Err(_) => singular += 1,
        }
    }
    report.add(
        "parade Hessians match the closed form",
        worst < 1e-10,
        format!("{checked} parades, worst entry difference {worst:.3e}, {singular} with coincident vertices"),
    );
    if radii.is_generic() {
        report.add(
            "parades are non-degenerate",
            degenerate == 0,
            format!("{degenerate} degenerate"),
        );
    } else {
        report.skip("parades are non-degenerate", "non-generic radii");
    }
    Ok(())
}

fn catalogue_checks(
    radii: &Radii,
    settings: &SolverSettings,
    oracle_grid: Option<usize>,
    report: &mut VerifyReport,
) -> Result<(), CliError> {
    let n = radii.len();
    let cat = find_all(radii, settings)?;
    if radii.is_generic() && !cat.has_degenerate() {
        report.add(
            "Euler sum vanishes",
            cat.euler_sum == 0,
            format!("{} critical points, Euler sum {}", cat.len(), cat.euler_sum),
        );
        report.add(
            "at least 2^(n-1) critical points",
            cat.len() >= 1 << (n - 1),
            format!("{} >= {}", cat.len(), 1 << (n - 1)),
        );
    } else {
        report.skip("Euler sum vanishes", "non-generic radii or degenerate points");
    }
    if n == 3 && radii.is_generic() {
        let closed = three_cc_catalogue([radii.get(0), radii.get(1), radii.get(2)])?;
        let worst = cat
            .points
            .iter()
            .zip(&closed)
            .map(|(p, e)| (p.perimeter - e.value).abs())
            .fold(0.0f64, f64::max);
        report.add(
            "three-circle closed-form catalogue",
            cat.len() == 6 && worst < 1e-8,
            format!("{} points, worst value difference {worst:.3e}", cat.len()),
        );
    }
    if n == 4 {
        let count = cat.count_shape(Shape::SelfIntersecting);
        report.add(
            "no self-intersecting critical points",
            count == 0,
            format!("{count} self-intersecting"),
        );
    }
    if n <= 4 {
        let density = oracle_grid.unwrap_or(if n == 3 { 360 } else { 72 });
        let oracle = brute_force_oracle(radii, density, settings)?;
        let same = catalogues_match(&cat.points, &oracle.catalogue.points, 1e-6);
        report.add(
            "brute-force oracle agrees",
            same,
            format!(
                "grid {density}: solver {} points, oracle {} points",
                cat.len(),
                oracle.catalogue.len()
            ),
        );
    } else {
        report.skip("brute-force oracle agrees", "oracle limited to n <= 4");
    }
    Ok(())
}

fn pentagram_checks(report: &mut VerifyReport) -> Result<Radii, CliError> {
    let radii = Radii::new(vec![1.0; 5])?;
    let full: Vec<f64> = (0..5).map(|j| (j as f64 * 2.0 * TAU / 5.0) % TAU).collect();
    let config = ReducedConfiguration::from_full(&full);
    let g = gradient_norm(&radii, &config)?;
    let eig = symmetric_eigenvalues(&hessian(&radii, &config)?);
    report.add("pentagram is stationary", g < 1e-12, format!("gradient norm {g:.3e}"));
    report.add(
        "pentagram Hessian is negative definite",
        eig.iter().all(|&e| e < 0.0),
        format!("eigenvalues {eig:?}"),
    );
    Ok(radii)
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let started = Instant::now();
    // in `verify`, --grid sets the oracle grid rather than the multistart grid
    let settings = settings(&SolverArgs {
        grid: None,
        tol: args.solver.tol,
    })?;
    let mut report;
    let radii;
    if args.pentagram {
        if !args.radii.values().is_empty() {
            return Err(CliError::Invalid("--pentagram does not take radii".into()));
        }
        report = VerifyReport::new(&Radii::new(vec![1.0; 5])?);
        radii = pentagram_checks(&mut report)?;
    } else {
        radii = parse_radii(&args.radii)?;
        report = VerifyReport::new(&radii);
        derivative_checks(&radii, &mut report)?;
        closed_form_checks(&radii, &mut report)?;
        parade_checks(&radii, &mut report)?;
        catalogue_checks(&radii, &settings, args.solver.grid, &mut report)?;
    }
    for c in &report.checks {
        let tag = match c.passed {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "SKIP",
        };
        writeln!(out, "{tag} {}: {}", c.name, c.detail)?;
    }
    let failed: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.passed == Some(false))
        .map(|c| c.name.as_str())
        .collect();
    writeln!(
        out,
        "{}",
        if failed.is_empty() {
            "all checks passed".to_string()
        } else {
            format!("{} check(s) failed", failed.len())
        }
    )?;
    let value = serde_json::to_value(&report)?;
    let extra = json!({ "pentagram": args.pentagram });
    write_record(&args.output, "verify", &radii, &settings, extra, value, started)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failed.join(", ")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigReport {
    pub radii: Vec<f64>,
    pub angles: Vec<f64>,
    pub perimeter: f64,
    pub gradient: Vec<f64>,
    pub gradient_norm: f64,
    pub stationary: bool,
    pub shape: Shape,
    pub vertex_events: Vec<VertexEvent>,
    pub tangential_distances: Vec<f64>,
}

pub fn check_config(args: &CheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let radii = parse_radii(&args.radii)?;
    if args.angles.iter().any(|a| !a.is_finite()) {
        return Err(CliError::Invalid("angles must be finite".into()));
    }
    let config = ReducedConfiguration::new(args.angles.clone());
    let g = gradient(&radii, &config)?;
    let norm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = args.tol.unwrap_or(STATIONARITY_TOL) * (1.0 + radii.max());
    let report = ConfigReport {
        radii: radii.as_slice().to_vec(),
        angles: config.angles().to_vec(),
        perimeter: perimeter(&radii, &config)?,
        gradient: g,
        gradient_norm: norm,
        stationary: norm < tol,
        shape: shape_of(&Circuit::new(&radii, &config)?, CLASSIFICATION_TOL),
        vertex_events: classify_vertices(&radii, &config, CLASSIFICATION_TOL)?,
        tangential_distances: tangential_distances(&radii, &config)?,
    };
    out.write_all(to_json(&report)?.as_bytes())?;
    Ok(())
}
