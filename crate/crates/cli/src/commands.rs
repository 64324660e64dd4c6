//! Command bodies. Every number comes from the library.

use serde_json::json;

use rqcm::minkowski::reduced_mass;
use rqcm::oscillator::{nr_spring_constant, representations, spectrum, OscillatorState};
use rqcm::tabulate::{eval_grid, transform_grid};
use rqcm::verify::{self, SuiteConfig};

use crate::config::RunConfig;
use crate::error::{CliError, FAILURE_EXIT};
use crate::output::{open, write_json_compact, Cell, Table};
use crate::{Cli, CliResult, Command, GridArgs, OutputArgs, StateArgs, VerifyArgs};

pub fn dispatch(cli: Cli) -> CliResult<i32> {
    let mut cfg = RunConfig::load(cli.config.as_deref())?;
    match cli.command {
        Command::Spectrum {
            state,
            max_n,
            branch,
            output,
        } => {
            apply_state(&mut cfg, &state)?;
            apply_output(&mut cfg, &output);
            cfg.validate()?;
            let rows = spectrum(cfg.omega, cfg.m1, cfg.m2, max_n, branch.into()).map_err(usage)?;
            let meta = json!({"command": "spectrum", "omega": cfg.omega, "m1": cfg.m1, "m2": cfg.m2, "branch": rqcm::minkowski::MassBranch::from(branch)});
            let mut table = Table::new(meta, headers(&["n", "degeneracy", "sigma", "rest_mass"]));
            for r in rows {
                table.push(vec![Cell::Int(r.n.into()), Cell::Int(r.degeneracy), Cell::Float(r.sigma), Cell::Float(r.rest_mass)]);
            }
            table.write(cfg.format, output.out.as_deref())?;
            Ok(0)
        }
        Command::Eval {
            state,
            grid,
            representation,
            output,
        } => {
            apply_state(&mut cfg, &state)?;
            apply_grid(&mut cfg, &grid);
            apply_output(&mut cfg, &output);
            if let Some(r) = representation {
                cfg.representation = r;
            }
            cfg.validate()?;
            let psi = cfg.state()?;
            let reg = representations();
            let rep = reg.get(&cfg.representation).map_err(usage)?;
            let rows = eval_grid(&psi, rep, &cfg.grid).map_err(usage)?;
            let sym = rep.coordinate_symbol();
            let point = point_symbol(rep.name());
            let mut cols = vec!["coordinate".to_string()];
            cols.extend((1..=4).map(|k| format!("{point}{k}")));
            cols.extend((1..=3).map(|k| format!("{sym}{k}")));
            cols.extend(["re", "im", "abs2"].map(String::from));
            let meta = json!({"command": "eval", "representation": rep.name(), "state": state_meta(&psi), "grid": cfg.grid});
            let mut table = Table::new(meta, cols);
            for r in rows {
                let mut row = vec![Cell::Float(r.coordinate)];
                row.extend(r.point.map(Cell::Float));
                row.extend(r.coords.map(Cell::Float));
                row.extend([Cell::Float(r.re), Cell::Float(r.im), Cell::Float(r.abs2)]);
                table.push(row);
            }
            table.write(cfg.format, output.out.as_deref())?;
            Ok(0)
        }
        Command::Transform {
            state,
            grid,
            representation,
            order,
            kernel_sign,
            output,
        } => {
            apply_state(&mut cfg, &state)?;
            apply_grid(&mut cfg, &grid);
            apply_output(&mut cfg, &output);
            cfg.representation = representation.unwrap_or_else(|| {
                if cfg.representation == "position" {
                    "momentum".into()
                } else {
                    cfg.representation.clone()
                }
            });
            if let Some(o) = order {
                cfg.order = o;
            }
            cfg.validate()?;
            let psi = cfg.state()?;
            let reg = representations();
            let rep = reg.get(&cfg.representation).map_err(usage)?;
            let t = transform_grid(&psi, rep, &cfg.grid, cfg.order, kernel_sign.into()).map_err(usage)?;
            if t.insufficient_order {
                eprintln!(
                    "rqcm: warning: order {} is below {} needed for level {}",
                    t.order,
                    t.required_order,
                    psi.n()
                );
            }
            let sym = rep.coordinate_symbol();
            let mut cols = vec!["coordinate".to_string()];
            cols.extend((1..=3).map(|k| format!("{sym}{k}")));
            cols.extend(["numeric_re", "numeric_im", "closed_re", "closed_im", "abs_err"].map(String::from));
            let meta = json!({
                "command": "transform",
                "representation": t.representation,
                "order": t.order,
                "required_order": t.required_order,
                "insufficient_order": t.insufficient_order,
                "kernel_sign": rqcm::transforms::KernelSign::from(kernel_sign),
                "state": state_meta(&psi),
                "grid": cfg.grid,
            });
            let mut table = Table::new(meta, cols);
            for r in &t.rows {
                let mut row = vec![Cell::Float(r.coordinate)];
                row.extend(r.coords.map(Cell::Float));
                row.extend([r.numeric_re, r.numeric_im, r.closed_re, r.closed_im, r.abs_err].map(Cell::Float));
                table.push(row);
            }
            table.write(cfg.format, output.out.as_deref())?;
            Ok(0)
        }
        Command::Verify(args) => run_verify(&cfg, &args),
    }
}

fn usage(e: rqcm::Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn headers(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn point_symbol(representation: &str) -> &'static str {
    match representation {
        "momentum" => "p",
        "bargmann" => "a",
        _ => "x",
    }
}

fn state_meta(psi: &OscillatorState) -> serde_json::Value {
    let sys = psi.system();
    json!({
        "l": psi.quanta().as_array(),
        "omega": psi.omega(),
        "m1": sys.m1(),
        "m2": sys.m2(),
        "v": sys.velocity(),
        "sigma": psi.sigma(),
        "rest_mass": sys.rest_mass(),
    })
}

fn apply_state(cfg: &mut RunConfig, a: &StateArgs) -> CliResult<()> {
    if let Some(m) = a.m1 {
        cfg.m1 = m;
    }
    if let Some(m) = a.m2 {
        cfg.m2 = m;
    }
    if let Some(o) = a.omega {
        cfg.omega = o;
    }
    if let Some(l) = &a.l {
        cfg.l = three(l, "--l")?;
    }
    if let Some(v) = &a.v {
        cfg.v = three(v, "--v")?;
    }
    if let Some(w) = a.hbar_omega {
        let m_r = reduced_mass(cfg.m1, cfg.m2);
        cfg.omega = nr_spring_constant(m_r, w);
        eprintln!("omega = m_r * hbar_omega = {m_r} * {w} = {}", cfg.omega);
    }
    Ok(())
}

fn three<T: Copy>(values: &[T], flag: &str) -> CliResult<[T; 3]> {
    <[T; 3]>::try_from(values).map_err(|_| CliError::Usage(format!("{flag} takes three comma-separated values, got {}", values.len())))
}

fn apply_grid(cfg: &mut RunConfig, g: &GridArgs) {
    if let Some(a) = &g.axis {
        cfg.grid.axis = a.clone();
    }
    if let Some(m) = g.min {
        cfg.grid.min = m;
    }
    if let Some(m) = g.max {
        cfg.grid.max = m;
    }
    if let Some(s) = g.samples {
        cfg.grid.samples = s;
    }
}

fn apply_output(cfg: &mut RunConfig, o: &OutputArgs) {
    if let Some(f) = o.format {
        cfg.format = f;
    }
}

fn suite_config(cfg: &RunConfig, a: &VerifyArgs) -> CliResult<SuiteConfig> {
    let mut s = SuiteConfig {
        seed: cfg.seed,
        order: cfg.order,
        tolerances: cfg.tolerances.clone(),
        ..SuiteConfig::default()
    };
    macro_rules! set {
        ($($field:ident),*) => {$(
            if let Some(x) = a.$field {
                s.$field = x.into();
            }
        )*};
    }
    set!(seed, trials, vmax, frame_vmax, points, max_n, normalization_max_n, order, sigma_perturb);
    if let Some(k) = a.kernel_sign {
        s.kernel_sign = k.into();
    }
    if let Some(m) = a.pde_mode {
        s.pde_mode = Some(m.into());
    }
    for t in &a.tolerance {
        let (name, value) = t
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--tolerance expects check=value, got `{t}`")))?;
        let value: f64 = value
            .parse()
            .map_err(|_| CliError::Usage(format!("tolerance for `{name}` is not a number: `{value}`")))?;
        s.tolerances.insert(name.to_string(), value);
    }
    if !(s.vmax >= 0.0 && s.vmax < 1.0 && s.frame_vmax >= 0.0 && s.frame_vmax < 1.0) {
        return Err(CliError::Usage("vmax and frame-vmax must lie in [0, 1)".into()));
    }
    if !(rqcm::transforms::MIN_ORDER..=rqcm::transforms::MAX_ORDER).contains(&s.order) {
        return Err(CliError::Usage(format!("order must be in 1..=256, got {}", s.order)));
    }
    Ok(s)
}

fn run_verify(cfg: &RunConfig, a: &VerifyArgs) -> CliResult<i32> {
    let s = suite_config(cfg, a)?;
    let reports = verify::run(&a.suite, &s).map_err(usage)?;
    let pass = reports.iter().all(|r| r.pass);
    for r in &reports {
        for c in &r.checks {
            eprintln!(
                "{} {}/{}: max_rel_err {:.3e} (tol {:.1e}, {} cases{})",
                if c.pass { "PASS" } else { "FAIL" },
                r.suite,
                c.check,
                c.max_rel_err,
                c.tolerance,
                c.cases_run,
                if c.insufficient_order { ", insufficient order" } else { "" }
            );
        }
    }
    let doc = json!({"pass": pass, "config": s, "suites": reports});
    let mut sink = open(a.out.as_deref())?;
    write_json_compact(&doc, &mut sink)?;
    sink.flush()?;
    Ok(if pass { 0 } else { FAILURE_EXIT })
}
