//! One function per subcommand. Each resolves its knobs (flag > config >
//! default), refuses configs with unread keys, prints the knob header and a
//! plain-text report, and writes a CSV when an output path is set. The
//! returned code is the process exit code: 0 clean, 1 when an inequality or
//! verdict check failed; config and solver errors bubble up as `Error`.

use std::path::{Path, PathBuf};

use trigapprox::{
    best_approx_sequence, class_membership, classify_rates, inverse_bound, inverse_bound_alpha,
    modulus, ratio_upper_bound, sequence_norm, sharp_constant_lp, sharpness_search, verify_direct,
    ConstantSource, DirectCheck, DirectForm, DiscreteMeasure, Error, Majorant, MembershipVerdict,
    Multiplier, NormKind, Result,
};

use crate::config::{self, parse_norm_kind, parse_usize, BuildFlags, Resolver};
use crate::report::{fmt_f64, print_header, Cell, Csv};
use crate::{
    BestApproxArgs, ClassifyArgs, CommonArgs, JacksonArgs, ModulusArgs, NormArgs, VerifyDirectArgs,
    VerifyInverseArgs,
};

fn resolver_for(common: &CommonArgs) -> Result<Resolver> {
    let parsed = match &common.config {
        Some(path) => config::parse_file(path)?,
        None => Default::default(),
    };
    Ok(Resolver::new(parsed))
}

fn build_flags(common: &CommonArgs) -> BuildFlags {
    BuildFlags {
        rule: common.rule.clone(),
        window: common.window,
        k0: common.k0,
        ratio: common.ratio,
        decay: common.decay,
        sample_file: common.sample_file.as_ref().map(|p| p.display().to_string()),
        p: common.p,
        alpha: common.alpha,
    }
}

fn out_path(r: &Resolver, common: &CommonArgs) -> Result<Option<PathBuf>> {
    let flag = common.out.as_ref().map(|p| p.display().to_string());
    Ok(r.string_opt("run", "out", flag.as_deref())?
        .map(PathBuf::from))
}

fn emit(csv: &Csv, path: Option<&Path>) -> Result<()> {
    if let Some(path) = path {
        csv.write(path)?;
        println!("csv written to {}", path.display());
    }
    Ok(())
}

pub fn norm(args: &NormArgs) -> Result<i32> {
    let r = resolver_for(&args.common)?;
    let flags = build_flags(&args.common);
    let spec = config::build_spectrum(&r, &flags)?;
    let family = config::build_family(&r, &flags, spec.window())?;
    let kind = r
        .string_opt("run", "kind", args.common.kind.as_deref())?
        .map(|s| parse_norm_kind(&s))
        .transpose()?;
    let out = out_path(&r, &args.common)?;
    r.finish()?;
    print_header("norm", &r.knob_lines());

    let kinds: &[NormKind] = match kind {
        Some(NormKind::Luxemburg) => &[NormKind::Luxemburg],
        Some(NormKind::Orlicz) => &[NormKind::Orlicz],
        None => &[NormKind::Luxemburg, NormKind::Orlicz],
    };
    let mut csv = Csv::new(&["kind", "norm"]);
    for &k in kinds {
        let v = sequence_norm(&family, &spec, k)?;
        let label = match k {
            NormKind::Luxemburg => "luxemburg",
            NormKind::Orlicz => "orlicz",
        };
        println!("{label} = {}", fmt_f64(v));
        csv.row(vec![Cell::S(label.to_string()), Cell::F(v)]);
    }
    emit(&csv, out.as_deref())?;
    Ok(0)
}

pub fn bestapprox(args: &BestApproxArgs) -> Result<i32> {
    let r = resolver_for(&args.common)?;
    let flags = build_flags(&args.common);
    let spec = config::build_spectrum(&r, &flags)?;
    let family = config::build_family(&r, &flags, spec.window())?;
    let kind =
        parse_norm_kind(&r.string("run", "kind", args.common.kind.as_deref(), "luxemburg")?)?;
    let n_max = r.usize("run", "n_max", args.n_max, spec.window() + 1)?;
    let out = out_path(&r, &args.common)?;
    r.finish()?;
    print_header("bestapprox", &r.knob_lines());

    let es = best_approx_sequence(&family, &spec, n_max, kind)?;
    let mut csv = Csv::new(&["n", "e_n"]);
    for (i, e) in es.iter().enumerate() {
        let n = i + 1;
        println!("E_{n} = {}", fmt_f64(*e));
        csv.row(vec![Cell::U(n), Cell::F(*e)]);
    }
    emit(&csv, out.as_deref())?;
    Ok(0)
}

pub fn modulus_cmd(args: &ModulusArgs) -> Result<i32> {
    let r = resolver_for(&args.common)?;
    let flags = build_flags(&args.common);
    let spec = config::build_spectrum(&r, &flags)?;
    let family = config::build_family(&r, &flags, spec.window())?;
    let phi = config::build_multiplier(&r, &flags)?;
    let kind =
        parse_norm_kind(&r.string("run", "kind", args.common.kind.as_deref(), "luxemburg")?)?;
    let tau = r.angle(
        "run",
        "tau",
        args.common.tau.as_deref(),
        std::f64::consts::PI,
    )?;
    let delta = r.angle("run", "delta", args.delta.as_deref(), tau)?;
    let h_grid = r.usize("run", "h_grid", args.common.h_grid, 2048)?;
    let out = out_path(&r, &args.common)?;
    r.finish()?;
    print_header("modulus", &r.knob_lines());

    let m = modulus(&family, &spec, &phi, delta, kind, h_grid)?;
    println!("omega = {}", fmt_f64(m.value));
    println!("argmax_h = {}", fmt_f64(m.argmax_h));
    println!("refinement_gap = {}", fmt_f64(m.refinement_gap));
    let mut csv = Csv::new(&["delta", "omega", "argmax_h", "refinement_gap"]);
    csv.row(vec![
        Cell::F(delta),
        Cell::F(m.value),
        Cell::F(m.argmax_h),
        Cell::F(m.refinement_gap),
    ]);
    emit(&csv, out.as_deref())?;
    Ok(0)
}

pub fn jackson(args: &JacksonArgs) -> Result<i32> {
    let r = resolver_for(&args.common)?;
    let flags = build_flags(&args.common);
    let phi = config::build_multiplier(&r, &flags)?;
    let p = r.f64("run", "p", args.common.p, 2.0)?;
    let n = r.usize("run", "n", args.n, 1)?;
    let tau = r.angle(
        "run",
        "tau",
        args.common.tau.as_deref(),
        std::f64::consts::PI,
    )?;
    let grid = r.usize("run", "grid", args.grid, 512)?;
    let j_max = r.usize_opt("run", "j_max", args.j_max)?;
    let sensitivity = r.bool("run", "sensitivity", args.sensitivity, false)?;
    let measure_m = r.usize("run", "measure_m", args.measure_m, 64)?;
    let budget = r.usize("run", "sharpness", args.sharpness, 0)?;
    let out = out_path(&r, &args.common)?;
    r.finish()?;
    print_header("jackson", &r.knob_lines());

    let sc = sharp_constant_lp(&phi, p, n, tau, grid, j_max.map(|v| v as u32), sensitivity)?;
    println!("C = {:.16}", sc.constant);
    println!("J = {:.16}", sc.j_value);
    println!(
        "duality_gap = {:.3e}   pivots = {}",
        sc.diagnostics.duality_gap, sc.diagnostics.pivots
    );

    let mut csv = Csv::new(&["record", "key", "value"]);
    csv.row(vec![
        Cell::S("summary".into()),
        Cell::S("constant".into()),
        Cell::F(sc.constant),
    ]);
    csv.row(vec![
        Cell::S("summary".into()),
        Cell::S("j_value".into()),
        Cell::F(sc.j_value),
    ]);
    csv.row(vec![
        Cell::S("summary".into()),
        Cell::S("duality_gap".into()),
        Cell::F(sc.diagnostics.duality_gap),
    ]);
    csv.row(vec![
        Cell::S("summary".into()),
        Cell::S("pivots".into()),
        Cell::U(sc.diagnostics.pivots),
    ]);

    let mut rho = sc.rho.clone();
    rho.sort_by_key(|&(j, _)| j);
    for &(j, mass) in &rho {
        println!("rho[{j}] = {:.6}", mass);
        csv.row(vec![
            Cell::S("rho".into()),
            Cell::S(format!("{j}")),
            Cell::F(mass),
        ]);
    }
    let mass_total = sc.measure.mass();
    for (i, (&u, &w)) in sc
        .measure
        .nodes()
        .iter()
        .zip(sc.measure.weights())
        .enumerate()
    {
        if w > 1e-12 * mass_total {
            println!("v*[{i}] : node = {:.6}, weight = {:.6}", u, w);
            csv.row(vec![
                Cell::S("node".into()),
                Cell::S(format!("{i}")),
                Cell::F(u),
            ]);
            csv.row(vec![
                Cell::S("weight".into()),
                Cell::S(format!("{i}")),
                Cell::F(w),
            ]);
        }
    }
    if let (Some(jj), Some(jg)) = (
        sc.diagnostics.j_at_doubled_j_max,
        sc.diagnostics.j_at_doubled_grid,
    ) {
        println!(
            "J at doubled j_max = {:.16}   J at doubled grid = {:.16}",
            jj, jg
        );
        csv.row(vec![
            Cell::S("summary".into()),
            Cell::S("j_doubled_j_max".into()),
            Cell::F(jj),
        ]);
        csv.row(vec![
            Cell::S("summary".into()),
            Cell::S("j_doubled_grid".into()),
            Cell::F(jg),
        ]);
    }

    if measure_m > 0 {
        let uniform = DiscreteMeasure::uniform(tau, measure_m)?;
        let mb = ratio_upper_bound(&phi, p, n, &uniform, None)?;
        println!(
            "uniform-measure bound (m = {measure_m}) = {:.16}   (I = {:.6} at k = {})",
            mb.constant, mb.i.value, mb.i.argmin_k
        );
        csv.row(vec![
            Cell::S("summary".into()),
            Cell::S("uniform_measure_bound".into()),
            Cell::F(mb.constant),
        ]);
    }
    if budget > 0 {
        let sh = sharpness_search(&phi, p, n, tau, budget, &sc)?;
        println!(
            "extremal search: best ratio = {:.16} ({:.2}% of C, measure stage used: {})",
            sh.best_ratio,
            100.0 * sh.fraction,
            sh.used_measure_stage
        );
        csv.row(vec![
            Cell::S("summary".into()),
            Cell::S("best_ratio".into()),
            Cell::F(sh.best_ratio),
        ]);
        csv.row(vec![
            Cell::S("summary".into()),
            Cell::S("fraction".into()),
            Cell::F(sh.fraction),
        ]);
    }
    emit(&csv, out.as_deref())?;
    Ok(0)
}

fn parse_constant_source<'a>(
    text: &str,
    tau: f64,
    holder: &'a mut Option<DiscreteMeasure>,
) -> Result<ConstantSource<'a>> {
    let lower = text.to_ascii_lowercase();
    if lower == "lp" {
        return Ok(ConstantSource::Lp);
    }
    if let Some(m) = lower.strip_prefix("uniform:") {
        let m = parse_usize(m)?;
        *holder = Some(DiscreteMeasure::uniform(tau, m)?);
        return Ok(ConstantSource::Measure {
            measure: holder.as_ref().unwrap(),
            k_max: None,
        });
    }
    if let Some(c) = lower.strip_prefix("fixed:") {
        return Ok(ConstantSource::Fixed(config::parse_f64(c)?));
    }
    Err(Error::Config(format!(
        "constant source must be `lp`, `uniform:M`, or `fixed:C`, got `{text}`"
    )))
}

pub fn verify_direct_cmd(args: &VerifyDirectArgs) -> Result<i32> {
    let r = resolver_for(&args.common)?;
    let flags = build_flags(&args.common);
    let spec = config::build_spectrum(&r, &flags)?;
    let family = config::build_family(&r, &flags, spec.window())?;
    let phi = config::build_multiplier(&r, &flags)?;
    let kind =
        parse_norm_kind(&r.string("run", "kind", args.common.kind.as_deref(), "luxemburg")?)?;
    let tau = r.angle(
        "run",
        "tau",
        args.common.tau.as_deref(),
        std::f64::consts::PI,
    )?;
    let h_grid = r.usize("run", "h_grid", args.common.h_grid, 2048)?;
    let lp_grid = r.usize("run", "grid", args.grid, 256)?;
    let j_max = r.usize_opt("run", "j_max", args.j_max)?;
    let n_lo = r.usize("run", "n", args.n, 1)?;
    let n_hi = r.usize("run", "n_max", args.n_max, n_lo)?;
    let form_text = r.string("run", "form", args.form.as_deref(), "auto")?;
    let source_text = r.string("run", "source", args.source.as_deref(), "lp")?;
    let constant_flag = r.f64_opt("run", "constant", args.constant)?;
    let out = out_path(&r, &args.common)?;
    r.finish()?;
    print_header("verify-direct", &r.knob_lines());

    if n_hi < n_lo {
        return Err(Error::Config(format!("n_max = {n_hi} is below n = {n_lo}")));
    }
    let form = match form_text.to_ascii_lowercase().as_str() {
        "auto" => match family.uniform_power_exponent() {
            Some(p) => DirectForm::Lp { p },
            None => DirectForm::Orlicz,
        },
        "lp" => {
            let p = family.uniform_power_exponent().ok_or_else(|| {
                Error::Config("form = lp needs a family with one power exponent everywhere".into())
            })?;
            DirectForm::Lp { p }
        }
        "orlicz" => DirectForm::Orlicz,
        other => Err(Error::Config(format!(
            "form must be auto | lp | orlicz, got `{other}`"
        )))?,
    };

    let mut measure_holder = None;
    let source = match constant_flag {
        Some(c) => ConstantSource::Fixed(c),
        None => parse_constant_source(&source_text, tau, &mut measure_holder)?,
    };

    let mut csv = Csv::new(&[
        "n", "e_n", "omega", "constant", "factor", "rhs", "slack", "pass",
    ]);
    let mut all_pass = true;
    let mut worst = f64::INFINITY;
    for n in n_lo..=n_hi {
        let rep = verify_direct(&DirectCheck {
            family: &family,
            spec: &spec,
            phi: &phi,
            n,
            tau,
            kind,
            form,
            source: source.clone(),
            h_grid,
            lp_grid,
            j_max: j_max.map(|v| v as u32),
        })?;
        println!(
            "n = {n:3}  E_n = {:.6e}  omega = {:.6e}  K = {:.6}  slack = {:+.3e}  {}",
            rep.e_n,
            rep.modulus.value,
            rep.constant * rep.factor,
            rep.slack,
            if rep.pass { "pass" } else { "FAIL" }
        );
        csv.row(vec![
            Cell::U(n),
            Cell::F(rep.e_n),
            Cell::F(rep.modulus.value),
            Cell::F(rep.constant),
            Cell::F(rep.factor),
            Cell::F(rep.rhs),
            Cell::F(rep.slack),
            Cell::B(rep.pass),
        ]);
        all_pass &= rep.pass;
        worst = worst.min(rep.slack);
    }
    println!(
        "direct check over n = {n_lo}..{n_hi}: {}  (worst slack = {:+.3e})",
        if all_pass { "all pass" } else { "FAILURES" },
        worst
    );
    emit(&csv, out.as_deref())?;
    Ok(if all_pass { 0 } else { 1 })
}

pub fn verify_inverse_cmd(args: &VerifyInverseArgs) -> Result<i32> {
    let r = resolver_for(&args.common)?;
    let flags = build_flags(&args.common);
    let spec = config::build_spectrum(&r, &flags)?;
    let family = config::build_family(&r, &flags, spec.window())?;
    let kind =
        parse_norm_kind(&r.string("run", "kind", args.common.kind.as_deref(), "luxemburg")?)?;
    let h_grid = r.usize("run", "h_grid", args.common.h_grid, 2048)?;
    let n_lo = r.usize("run", "n", args.n, 1)?;
    let n_hi = r.usize("run", "n_max", args.n_max, n_lo)?;
    let corollary = r.bool("run", "corollary", args.corollary, false)?;

    enum Mode {
        General { phi: Multiplier, tau: f64 },
        Alpha(f64),
    }
    let mode = if corollary {
        Mode::Alpha(r.f64("multiplier", "alpha", args.common.alpha, 1.0)?)
    } else {
        let phi = config::build_multiplier(&r, &flags)?;
        let tau = r.angle(
            "run",
            "tau",
            args.common.tau.as_deref(),
            std::f64::consts::PI,
        )?;
        Mode::General { phi, tau }
    };
    let out = out_path(&r, &args.common)?;
    r.finish()?;
    print_header("verify-inverse", &r.knob_lines());

    if n_hi < n_lo {
        return Err(Error::Config(format!("n_max = {n_hi} is below n = {n_lo}")));
    }
    let mut csv = Csv::new(&["n", "lhs", "rhs", "slack", "pass"]);
    let mut all_pass = true;
    let mut worst = f64::INFINITY;
    for n in n_lo..=n_hi {
        let rep = match &mode {
            Mode::General { phi, tau } => {
                inverse_bound(&family, &spec, phi, n, *tau, kind, h_grid)?
            }
            Mode::Alpha(alpha) => inverse_bound_alpha(&family, &spec, *alpha, n, kind, h_grid)?,
        };
        println!(
            "n = {n:3}  lhs = {:.6e}  rhs = {:.6e}  slack = {:+.3e}  {}",
            rep.modulus.value,
            rep.rhs,
            rep.slack,
            if rep.pass { "pass" } else { "FAIL" }
        );
        csv.row(vec![
            Cell::U(n),
            Cell::F(rep.modulus.value),
            Cell::F(rep.rhs),
            Cell::F(rep.slack),
            Cell::B(rep.pass),
        ]);
        all_pass &= rep.pass;
        worst = worst.min(rep.slack);
    }
    println!(
        "inverse check over n = {n_lo}..{n_hi}: {}  (worst slack = {:+.3e})",
        if all_pass { "all pass" } else { "FAILURES" },
        worst
    );
    emit(&csv, out.as_deref())?;
    Ok(if all_pass { 0 } else { 1 })
}

fn parse_majorant(text: &str) -> Result<Majorant> {
    let lower = text.to_ascii_lowercase();
    if let Some(rest) = lower.strip_prefix("powerlog:") {
        return Ok(Majorant::PowerLog {
            r: config::parse_f64(rest)?,
        });
    }
    if let Some(rest) = lower.strip_prefix("power:") {
        return Ok(Majorant::Power {
            r: config::parse_f64(rest)?,
        });
    }
    Err(Error::Config(format!(
        "majorant must be `power:R` or `powerlog:R`, got `{text}`"
    )))
}

pub fn classify(args: &ClassifyArgs) -> Result<i32> {
    let r = resolver_for(&args.common)?;
    let flags = build_flags(&args.common);
    let spec = config::build_spectrum(&r, &flags)?;
    let family = config::build_family(&r, &flags, spec.window())?;
    let kind =
        parse_norm_kind(&r.string("run", "kind", args.common.kind.as_deref(), "luxemburg")?)?;
    let alpha = r.f64("multiplier", "alpha", args.common.alpha, 1.0)?;
    let mode = r.string("run", "mode", args.mode.as_deref(), "rates")?;
    match mode.to_ascii_lowercase().as_str() {
        "rates" => {
            let degrees = r.string(
                "run",
                "degrees",
                args.degrees.as_deref(),
                "8,11,16,23,32,45,64",
            )?;
            let ns: Vec<usize> = degrees
                .split(',')
                .map(|t| parse_usize(t.trim()))
                .collect::<Result<_>>()?;
            let h_grid = r.usize("run", "h_grid", args.common.h_grid, 2048)?;
            let out = out_path(&r, &args.common)?;
            r.finish()?;
            print_header("classify", &r.knob_lines());

            let rr = classify_rates(&family, &spec, alpha, &ns, kind, h_grid)?;
            let mut csv = Csv::new(&["n", "e_n", "omega"]);
            for pt in &rr.points {
                csv.row(vec![Cell::U(pt.n), Cell::F(pt.e), Cell::F(pt.omega)]);
            }
            println!(
                "e_slope = {:.4}   omega_slope = {:.4}   predicted = {:.4}   log_flag = {}",
                rr.e_slope, rr.omega_slope, rr.predicted_slope, rr.log_flag
            );
            println!(
                "deviation = {:.4}   {}",
                rr.deviation,
                if rr.pass { "pass" } else { "FAIL" }
            );
            emit(&csv, out.as_deref())?;
            Ok(if rr.pass { 0 } else { 1 })
        }
        "membership" => {
            let majorant_text = r
                .string_opt("run", "majorant", args.majorant.as_deref())?
                .ok_or_else(|| {
                    Error::Config("membership needs a majorant (`power:R` or `powerlog:R`)".into())
                })?;
            let majorant = parse_majorant(&majorant_text)?;
            let n_max = r.usize("run", "n_max", args.n_max, 24)?;
            let h_grid = r.usize("run", "h_grid", args.common.h_grid, 128)?;
            let expect = r.string_opt("run", "expect", args.expect.as_deref())?;
            let out = out_path(&r, &args.common)?;
            r.finish()?;
            print_header("classify", &r.knob_lines());

            let mr = class_membership(&family, &spec, &majorant, alpha, n_max, kind, h_grid)?;
            let mut csv = Csv::new(&["n", "e_ratio", "omega_ratio"]);
            for (&(n, e), &(_, o)) in mr.e_side.ratios.iter().zip(&mr.omega_side.ratios) {
                csv.row(vec![Cell::U(n), Cell::F(e), Cell::F(o)]);
            }
            let verdict = match mr.verdict {
                MembershipVerdict::BothBounded => "both-bounded",
                MembershipVerdict::BothGrowing => "both-growing",
                MembershipVerdict::Inconsistent => "inconsistent",
            };
            println!(
                "verdict = {verdict}   (E-side growth {:.3}, omega-side growth {:.3})",
                mr.e_side.growth, mr.omega_side.growth
            );
            println!(
                "majorant growth condition at order {alpha}: ratio = {:.4}",
                mr.condition_b.ratio
            );
            emit(&csv, out.as_deref())?;
            let code = match expect.as_deref() {
                Some(e) => {
                    let want = match e.to_ascii_lowercase().as_str() {
                        "bounded" => MembershipVerdict::BothBounded,
                        "growing" => MembershipVerdict::BothGrowing,
                        other => Err(Error::Config(format!(
                            "expect must be `bounded` or `growing`, got `{other}`"
                        )))?,
                    };
                    if mr.verdict == want {
                        0
                    } else {
                        1
                    }
                }
                None => {
                    if mr.verdict == MembershipVerdict::Inconsistent {
                        1
                    } else {
                        0
                    }
                }
            };
            Ok(code)
        }
        other => Err(Error::Config(format!(
            "mode must be `rates` or `membership`, got `{other}`"
        ))),
    }
}
