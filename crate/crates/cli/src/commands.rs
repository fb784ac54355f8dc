use alcove::complex::{fixed_chambers, relative_position};
use alcove::ddaha::{format_matrix, DDaha};
use alcove::poly::Poly;
use alcove::rational::{fmt_rational, parse_vector, Rational};
use alcove::relative::is_admissible;
use alcove::spiral::{levi_decomposition_check, spiral_from_facet, Spiral};
use alcove::{AffineRootSystem, WeylGroup};
use serde_json::{json, Value};

use crate::config::{config_error, JobConfig};
use crate::output::{element_json, int_vec_str, parse_element, parse_facet, parse_window, vec_str, Report, Table};
use crate::{certify, pipeline, tables, CliError, Exit};

fn key_values(pairs: &[(&str, String)]) -> Table {
    let mut t = Table::new(&["key", "value"]);
    for (k, v) in pairs {
        t.push(vec![k.to_string(), v.clone()]);
    }
    t
}

pub fn root(cfg: &JobConfig) -> Result<Report, CliError> {
    let sys = cfg.finite_system()?;
    let aff = AffineRootSystem::affinize(sys.clone())?;
    let mut t = Table::new(&["root", "height", "norm2"]);
    for a in sys.positive_roots() {
        t.push(vec![int_vec_str(a), a.iter().sum::<i64>().to_string(), fmt_rational(&sys.squared_length(a))]);
    }
    let simples: Vec<Value> = aff
        .simples()
        .iter()
        .enumerate()
        .map(|(i, a)| json!({ "node": i, "direction": a.direction, "level": a.level }))
        .collect();
    let body = json!({
        "root_data": sys.to_json(),
        "reduced": sys.is_reduced(),
        "positive_roots": sys.positive_roots(),
        "highest_root": sys.highest_root(),
        "affine_simples": simples,
        "marks": aff.marks(),
        "alcove_vertices": aff.alcove_vertices().iter().map(|v| vec_str(v)).collect::<Vec<_>>(),
    });
    Ok(Report::new("root", body, t))
}

pub fn weyl(cfg: &JobConfig, word: Option<&str>) -> Result<Report, CliError> {
    let g = cfg.group()?;
    if let Some(w) = word {
        let x = parse_element(&g, w)?;
        let inversions: Vec<String> = g.inversions(&x).iter().map(|a| a.to_string()).collect();
        let body = json!({
            "element": element_json(&g, &x),
            "left_descents": g.left_descents(&x),
            "right_descents": g.right_descents(&x),
            "inversions": inversions,
        });
        let t = key_values(&[
            ("word", g.format_word(&x)),
            ("length", g.length(&x).to_string()),
            ("mu", int_vec_str(x.translation_part())),
            ("left_descents", g.left_descents(&x).to_string()),
            ("right_descents", g.right_descents(&x).to_string()),
            ("inversions", inversions.join(" ")),
        ]);
        return Ok(Report::new("weyl", body, t));
    }
    let ball = g.enumerate_ball(cfg.radius)?;
    let mut counts = vec![0usize; cfg.radius + 1];
    for x in &ball {
        counts[g.length(x)] += 1;
    }
    let mut t = Table::new(&["length", "count"]);
    for (l, c) in counts.iter().enumerate() {
        t.push(vec![l.to_string(), c.to_string()]);
    }
    let body = json!({ "group": g.label(), "radius": cfg.radius, "counts_by_length": counts, "ball_size": ball.len() });
    Ok(Report::new("weyl", body, t))
}

pub fn relative(cfg: &JobConfig) -> Result<Report, CliError> {
    let g = cfg.group()?;
    let sigma = cfg.sigma_set();
    let adm = is_admissible(&g, sigma)?;
    if !adm.admissible {
        let body = json!({ "admissible": false, "sigma": sigma, "finite": adm.finite, "violations": adm.violations });
        let mut t = Table::new(&["sigma_prime", "witness", "generator"]);
        for v in &adm.violations {
            t.push(vec![v.sigma_prime.to_string(), format!("{:?}", v.witness), v.generator.to_string()]);
        }
        return Ok(Report::new("relative", body, t).with_exit(Exit::Check));
    }
    let rel = cfg.relative()?;
    let mut t = Table::new(&["s", "word", "length", "rel_length"]);
    let mut simples = Vec::new();
    for st in rel.simples() {
        let word = g.format_word(&st.element);
        let rl = rel.relative_length(&st.element)?;
        t.push(vec![st.node.to_string(), word.clone(), st.length.to_string(), rl.to_string()]);
        simples.push(json!({ "s": st.node, "word": word, "length": st.length, "rel_length": rl }));
    }
    let ball = rel.ball(cfg.radius)?;
    let body = json!({
        "admissible": true,
        "sigma": sigma,
        "sigma_complement": rel.sigma_complement(),
        "w0_sigma": g.format_word(rel.w0_sigma()),
        "simples": simples,
        "coxeter_matrix": rel.coxeter_matrix(),
        "order_cap": rel.order_cap(),
        "ball_size": ball.len(),
        "diagnostic": rel.diagnostic(),
        "type_identification": pipeline::identify(&rel),
    });
    Ok(Report::new("relative", body, t))
}

pub fn complex_facets(cfg: &JobConfig) -> Result<Report, CliError> {
    let g = cfg.group()?;
    let rows = tables::facets(&g, cfg.radius)?;
    let t = tables::to_table(&rows);
    let body = json!({ "radius": cfg.radius, "count": rows.len(), "facets": t.to_json() });
    Ok(Report::new("complex facets", body, t))
}

pub fn complex_relpos(cfg: &JobConfig, nu: &str, nuprime: &str) -> Result<Report, CliError> {
    let g = cfg.group()?;
    let (a, b) = (parse_facet(&g, nu)?, parse_facet(&g, nuprime)?);
    let rp = relative_position(&g, &a, &b)?;
    let rel_el = rp.relative_element.as_ref().map(|w| g.format_word(w));
    let body = json!({
        "nu": a.label(&g),
        "nuprime": b.label(&g),
        "double_coset": g.format_word(&rp.double_coset),
        "good": rp.good,
        "spans_equal": rp.spans_equal,
        "relative_element": rel_el,
    });
    let t = key_values(&[
        ("nu", a.label(&g)),
        ("nuprime", b.label(&g)),
        ("double_coset", g.format_word(&rp.double_coset)),
        ("good", rp.good.to_string()),
        ("spans_equal", rp.spans_equal.to_string()),
        ("relative_element", rel_el.unwrap_or_else(|| "-".into())),
    ]);
    Ok(Report::new("complex relpos", body, t))
}

pub fn complex_fixed(cfg: &JobConfig) -> Result<Report, CliError> {
    let rel = cfg.relative()?;
    let fc = fixed_chambers(&rel, cfg.radius)?;
    let words: Vec<String> = fc
        .chambers
        .iter()
        .map(|w| {
            let letters: Vec<String> = w.iter().map(|i| format!("s~{i}")).collect();
            if letters.is_empty() { "e".into() } else { letters.join("*") }
        })
        .collect();
    let mut t = Table::new(&["chamber", "relative_word", "action"]);
    for (k, w) in words.iter().enumerate() {
        let act: Vec<String> = fc.action[k].iter().map(|a| a.map_or("-".into(), |j| j.to_string())).collect();
        t.push(vec![k.to_string(), w.clone(), act.join(",")]);
    }
    let body = json!({
        "sigma": rel.sigma(),
        "radius": cfg.radius,
        "chambers": words,
        "action": fc.action,
        "all_type_sigma": fc.all_type_sigma,
        "reps_in_relative_group": fc.reps_in_relative_group,
        "single_free_orbit": fc.single_free_orbit,
        "boundary_excluded": fc.boundary,
    });
    let ok = fc.all_type_sigma && fc.single_free_orbit && fc.reps_in_relative_group;
    Ok(Report::new("complex fixed", body, t).with_exit(if ok { Exit::Ok } else { Exit::Check }))
}

pub struct SpiralArgs<'a> {
    pub facet: Option<&'a str>,
    pub lambda: Option<&'a str>,
    pub window: &'a str,
}

fn build_spiral(cfg: &JobConfig, a: &SpiralArgs) -> Result<(Spiral, Option<bool>, Value), CliError> {
    let d = cfg.datum()?.ok_or_else(|| config_error("spiral needs a grading (--theta, --m)"))?;
    let window = parse_window(a.window)?;
    if let Some(l) = a.lambda {
        let lambda = parse_vector(l).map_err(|e| config_error(e.to_string()))?;
        if lambda.len() != d.system().rank() {
            return Err(config_error(format!("λ has {} coordinates, rank is {}", lambda.len(), d.system().rank())));
        }
        let eps = d.epsilon();
        return Ok((Spiral::from_cochar(&d, lambda, eps), None, json!("cochar")));
    }
    let g = WeylGroup::affine(AffineRootSystem::affinize(d.system().clone())?);
    let facet = match a.facet {
        Some(f) => parse_facet(&g, f)?,
        None => alcove::complex::Facet::alcove(&g),
    };
    let fs = spiral_from_facet(&d, &g, &facet, window)?;
    Ok((fs.spiral, Some(fs.independent), json!(facet.label(&g))))
}

pub fn spiral(cfg: &JobConfig, a: &SpiralArgs) -> Result<Report, CliError> {
    let window = parse_window(a.window)?;
    let (s, independent, source) = build_spiral(cfg, a)?;
    let rows = tables::spiral(&s, window);
    let t = tables::to_table(&rows);
    let levi = levi_decomposition_check(&s, window);
    let body = json!({
        "source": source,
        "lambda": vec_str(s.lambda()),
        "epsilon": s.epsilon(),
        "window": [window.0, window.1],
        "window_bound": s.window_bound(),
        "sample_independent": independent,
        "levi_disjoint_union": levi.disjoint_union,
        "rows": t.to_json(),
    });
    let ok = levi.disjoint_union && independent.unwrap_or(true);
    Ok(Report::new("spiral", body, t).with_exit(if ok { Exit::Ok } else { Exit::Check }))
}

pub struct DdahaArgs<'a> {
    pub expr: Option<&'a str>,
    pub times: Option<&'a str>,
    pub check: bool,
    pub lambda0: Option<&'a str>,
    pub orbit: bool,
    pub from_sigma: bool,
}

fn build_ddaha(cfg: &JobConfig, from_sigma: bool) -> Result<(DDaha, Value), CliError> {
    let (group, ident) = if from_sigma {
        let rel = cfg.relative()?;
        let id = pipeline::identify(&rel);
        let g = pipeline::chosen_group(&id)
            .ok_or_else(|| CliError::new(Exit::Check, "the relative Coxeter system matches no standard type"))?;
        (g, serde_json::to_value(&id).expect("json"))
    } else {
        (cfg.group()?, Value::Null)
    };
    let params = cfg.hecke_parameters(&group)?;
    let alg = DDaha::new(group, params).map_err(|e| config_error(e.to_string()))?;
    Ok((alg, ident))
}

fn parse_lambda(alg: &DDaha, s: &str) -> Result<Vec<Rational>, CliError> {
    let v = parse_vector(s).map_err(|e| config_error(e.to_string()))?;
    if v.len() != alg.nvars() {
        return Err(config_error(format!("λ₀ has {} coordinates, expected {}", v.len(), alg.nvars())));
    }
    Ok(v)
}

pub fn ddaha(cfg: &JobConfig, a: &DdahaArgs) -> Result<Report, CliError> {
    let (alg, ident) = build_ddaha(cfg, a.from_sigma)?;
    let g = alg.group();
    let h: serde_json::Map<String, Value> =
        g.nodes().iter().map(|i| (format!("s{i}"), json!(fmt_rational(alg.h(i))))).collect();
    let mut body = json!({ "group": g.label(), "h": h });
    let mut kv = vec![("group", g.label())];
    let mut exit = Exit::Ok;
    if !ident.is_null() {
        body["type_identification"] = ident;
    }
    if let Some(e) = a.expr {
        let x = alg.parse(e).map_err(|e| config_error(e.to_string()))?;
        body["normal_form"] = json!(alg.format(&x));
        kv.push(("normal_form", alg.format(&x)));
        if let Some(t) = a.times {
            let y = alg.parse(t).map_err(|e| config_error(e.to_string()))?;
            let p = alg.multiply(&x, &y)?;
            body["product"] = json!(alg.format(&p));
            kv.push(("product", alg.format(&p)));
        }
    }
    if a.check {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(cfg.seed);
        let rep = alg.verify_relations(cfg.depth.max(6) as u32, cfg.samples, &mut rng)?;
        for c in &rep.checks {
            kv.push(("relation", format!("{}: {}", c.name, if c.passed { "pass" } else { "fail" })));
        }
        if !rep.all_passed {
            exit = Exit::Check;
        }
        body["relations"] = serde_json::to_value(&rep).expect("json");
    }
    if let Some(l) = a.lambda0 {
        let lambda0 = parse_lambda(&alg, l)?;
        if a.orbit {
            let orb = alg.orbit(&lambda0, cfg.radius)?;
            body["orbit"] = json!({
                "points": orb.points.iter().map(|p| vec_str(p)).collect::<Vec<_>>(),
                "stabilizer": orb.stabilizer.iter().map(|x| g.format_word(x)).collect::<Vec<_>>(),
                "ball_complete": orb.ball_complete,
            });
            kv.push(("orbit_size", orb.points.len().to_string()));
        }
        let module = alg.standard_module(&lambda0, cfg.depth)?;
        let rows = tables::weights(&module);
        body["standard_module"] = json!({
            "basis": module.basis.iter().map(|x| g.format_word(x)).collect::<Vec<_>>(),
            "weights": tables::to_table(&rows).to_json(),
        });
        for i in 0..alg.nvars() {
            let m = alg.action_matrix(&module, &Poly::var(alg.nvars(), i))?;
            body["standard_module"][format!("x{}", i + 1)] = json!(format_matrix(&m));
        }
        kv.push(("module_dim", module.basis.len().to_string()));
    }
    Ok(Report::new("ddaha", body, key_values(&kv)).with_exit(exit))
}

pub fn certify(cfg: &JobConfig) -> Result<Report, CliError> {
    let rep = certify::certify(cfg)?;
    let mut t = Table::new(&["check", "status", "detail", "first_counterexample"]);
    for c in &rep.checks {
        let status = serde_json::to_value(c.status).expect("json").as_str().expect("string").to_string();
        let witness = c.counterexamples.first().cloned().unwrap_or_else(|| "-".into());
        t.push(vec![c.name.clone(), status, c.detail.clone(), witness]);
    }
    let exit = rep.exit();
    Ok(Report::new("certify", serde_json::to_value(&rep).expect("json"), t).with_exit(exit))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    WeylBall,
    Facets,
    Spiral,
    Relpos,
    Weights,
}

pub fn table(cfg: &JobConfig, which: Which, sp: &SpiralArgs, lambda0: Option<&str>) -> Result<Report, CliError> {
    let t = match which {
        Which::WeylBall => tables::to_table(&tables::weyl_ball(&cfg.group()?, cfg.radius)?),
        Which::Facets => tables::to_table(&tables::facets(&cfg.group()?, cfg.radius)?),
        Which::Spiral => {
            let (s, _, _) = build_spiral(cfg, sp)?;
            tables::to_table(&tables::spiral(&s, parse_window(sp.window)?))
        }
        Which::Relpos => tables::to_table(&tables::relpos(&cfg.group()?, cfg.sigma_set(), cfg.radius)?),
        Which::Weights => {
            let (alg, _) = build_ddaha(cfg, false)?;
            let l = lambda0.ok_or_else(|| config_error("the weights table needs --lambda0"))?;
            let module = alg.standard_module(&parse_lambda(&alg, l)?, cfg.depth)?;
            tables::to_table(&tables::weights(&module))
        }
    };
    let name = format!("table {}", clap::ValueEnum::to_possible_value(&which).unwrap().get_name());
    Ok(Report::new(&name, t.to_json(), t))
}
