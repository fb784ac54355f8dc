//! The invariant suite behind `alcove certify`.

use std::collections::BTreeSet;

use alcove::complex::{e_alcoves, facets_in_ball, facets_of_type, fixed_chambers, orbit_fibres, relative_position};
use alcove::complex::{Facet, GradingPoint};
use alcove::ddaha::DDaha;
use alcove::relative::{is_admissible, RelativeCoxeterSystem};
use alcove::root_system::{AffineFunction, AffineRoot};
use alcove::spiral::{bracket_check, levi_decomposition_check, spiral_from_facet, GradedRootDatum};
use alcove::{AffineRootSystem, Error, WeylGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::JobConfig;
use crate::coxeter;
use crate::{CliError, Exit};

/// Counterexamples kept per check.
const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    /// A ball or order cap was reached before the check could finish.
    Cap,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertifyReport {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl CertifyReport {
    pub fn exit(&self) -> Exit {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Exit::Check
        } else if self.checks.iter().any(|c| c.status == Status::Cap) {
            Exit::Cap
        } else {
            Exit::Ok
        }
    }
}

#[derive(Default)]
struct Outcome {
    detail: String,
    failures: Vec<String>,
    skipped: bool,
}

impl Outcome {
    fn detail(detail: impl Into<String>) -> Self {
        Self { detail: detail.into(), ..Self::default() }
    }

    fn skip(why: impl Into<String>) -> Self {
        Self { detail: why.into(), skipped: true, ..Self::default() }
    }

    fn fail_if(&mut self, bad: bool, witness: impl FnOnce() -> String) {
        if bad {
            self.failures.push(witness());
        }
    }
}

fn finish(name: &str, r: Result<Outcome, Error>) -> Check {
    match r {
        Ok(o) => {
            let status = if o.skipped {
                Status::Skip
            } else if o.failures.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            };
            let detail = if o.failures.is_empty() {
                o.detail
            } else {
                format!("{} failure(s); {}", o.failures.len(), o.detail)
            };
            let mut counterexamples = o.failures;
            counterexamples.truncate(MAX_WITNESSES);
            Check { name: name.into(), status, detail, counterexamples }
        }
        Err(e @ (Error::BallTooLarge { .. } | Error::BallTooSmall { .. })) => {
            Check { name: name.into(), status: Status::Cap, detail: e.to_string(), counterexamples: vec![] }
        }
        Err(e) => Check { name: name.into(), status: Status::Fail, detail: e.to_string(), counterexamples: vec![] },
    }
}

struct Ctx<'a> {
    cfg: &'a JobConfig,
    group: WeylGroup,
    rel: Option<RelativeCoxeterSystem>,
    datum: Option<GradedRootDatum>,
}

impl Ctx<'_> {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn rel(&self) -> Result<&RelativeCoxeterSystem, Outcome> {
        self.rel.as_ref().ok_or_else(|| Outcome::skip("Σ is not admissible"))
    }
}

type CheckFn = fn(&Ctx) -> Result<Outcome, Error>;

macro_rules! need_rel {
    ($ctx:expr) => {
        match $ctx.rel() {
            Ok(r) => r,
            Err(o) => return Ok(o),
        }
    };
}

fn root_reflection_closure(ctx: &Ctx) -> Result<Outcome, Error> {
    let aff = ctx.group.root_system();
    let fin = aff.finite();
    let levels: Vec<i64> = if ctx.group.is_affine() { (-2..=2).collect() } else { vec![0] };
    let roots: Vec<AffineRoot> = fin
        .roots()
        .iter()
        .flat_map(|a| levels.iter().filter(|&&l| aff.contains(a, l)).map(|&l| AffineRoot { direction: a.clone(), level: l }))
        .collect();
    let mut o = Outcome::detail(format!("{} affine roots", roots.len()));
    for a in &roots {
        let fa = AffineFunction::from(a);
        for b in &roots {
            let fb = AffineFunction::from(b);
            let r = fin.reflect_fn(&fa, &fb)?;
            let ok = r.constant.is_integer()
                && r.gradient.iter().all(|x| x.is_integer())
                && fin.pairing(&fin.coroot(&fa)?, &fb).is_integer()
                && {
                    let dir: Vec<i64> = r.gradient.iter().map(|x| alcove::rational::to_i64(x).unwrap_or(0)).collect();
                    aff.contains(&dir, alcove::rational::to_i64(&r.constant).unwrap_or(0))
                };
            o.fail_if(!ok, || format!("s_{a}({b}) leaves the root system"));
        }
    }
    Ok(o)
}

fn weyl_length_inversions(ctx: &Ctx) -> Result<Outcome, Error> {
    let g = &ctx.group;
    let ball = g.enumerate_ball(ctx.cfg.radius)?;
    let mut o = Outcome::detail(format!("{} elements of length ≤ {}", ball.len(), ctx.cfg.radius));
    for x in &ball {
        let l = g.length(x);
        o.fail_if(l != g.reflections_t(x).len(), || format!("ℓ ≠ #T at {}", g.format_word(x)));
        o.fail_if(l != g.length(&x.inverse()), || format!("ℓ(w⁻¹) ≠ ℓ(w) at {}", g.format_word(x)));
    }
    Ok(o)
}

fn weyl_reflection_subadditivity(ctx: &Ctx) -> Result<Outcome, Error> {
    let g = &ctx.group;
    let mut rng = ctx.rng(3);
    let n = ctx.cfg.samples;
    let mut o = Outcome::detail(format!("{n} random pairs"));
    for _ in 0..n {
        let w = g.random_element(&mut rng, 2 * ctx.cfg.radius.max(1));
        let y = g.random_element(&mut rng, 2 * ctx.cfg.radius.max(1));
        let tw = g.reflections_t(&w);
        let conj: BTreeSet<_> = g
            .reflections_t(&y)
            .iter()
            .map(|t| g.as_reflection(&w.conjugate(&g.reflection(&t.root)?)))
            .collect::<Result<_, _>>()?;
        let bad = g.reflections_t(&w.mul(&y)).iter().any(|t| !tw.contains(t) && !conj.contains(t));
        o.fail_if(bad, || format!("w = {}, y = {}", g.format_word(&w), g.format_word(&y)));
    }
    Ok(o)
}

fn relative_admissible(ctx: &Ctx) -> Result<Outcome, Error> {
    let g = &ctx.group;
    let rep = is_admissible(g, ctx.cfg.sigma_set())?;
    let mut o = Outcome::detail(format!("Σ = {}", rep.sigma));
    o.fail_if(!rep.finite, || format!("W_Σ is infinite for Σ = {}", rep.sigma));
    for v in &rep.violations {
        let word: Vec<String> = v.witness.iter().map(|i| format!("s{i}")).collect();
        o.failures.push(format!(
            "w0 of {} = {} conjugates s{} out of W_Σ",
            v.sigma_prime,
            if word.is_empty() { "e".into() } else { word.join("*") },
            v.generator
        ));
    }
    Ok(o)
}

fn relative_coxeter_balls(ctx: &Ctx) -> Result<Outcome, Error> {
    let rel = need_rel!(ctx);
    let radius = ctx.cfg.radius.min(4);
    let m = match coxeter::from_orders(rel.coxeter_matrix()) {
        Ok(m) => m,
        Err(e) => return Ok(Outcome { detail: e, failures: vec!["Coxeter matrix has an order above the cap".into()], skipped: false }),
    };
    let expected = match coxeter::ball_sizes(&m, radius) {
        Ok(s) => s,
        Err(e) => return Ok(Outcome { detail: e.clone(), failures: vec![e], skipped: false }),
    };
    let ball = rel.ball(radius)?;
    let mut found = vec![0usize; radius + 1];
    for x in &ball {
        let l = rel.relative_length(x)?;
        for slot in found.iter_mut().skip(l) {
            *slot += 1;
        }
    }
    let mut o = Outcome::detail(format!("ball sizes {found:?}"));
    o.fail_if(found != expected, || format!("W̃ has {found:?}, the Coxeter matrix gives {expected:?}"));
    Ok(o)
}

fn relative_length_additivity(ctx: &Ctx) -> Result<Outcome, Error> {
    let rel = need_rel!(ctx);
    let g = rel.group();
    let ball = rel.ball(ctx.cfg.radius.min(3))?;
    let mut o = Outcome::detail(format!("{} pairs", ball.len() * ball.len()));
    for x in &ball {
        for y in &ball {
            let xy = x.mul(y);
            let rel_add = rel.relative_length(x)? + rel.relative_length(y)? == rel.relative_length(&xy)?;
            let add = g.length(x) + g.length(y) == g.length(&xy);
            o.fail_if(rel_add != add, || format!("g = {}, h = {}", g.format_word(x), g.format_word(y)));
        }
    }
    Ok(o)
}

fn relative_exchange(ctx: &Ctx) -> Result<Outcome, Error> {
    let rel = need_rel!(ctx);
    let g = rel.group();
    let ball = rel.ball(ctx.cfg.radius.min(3))?;
    let mut o = Outcome::detail(format!("{} elements", ball.len()));
    for w in &ball {
        let letters: Vec<_> = rel
            .relative_word(w)?
            .iter()
            .map(|n| rel.simple(*n).map(|s| s.element.clone()))
            .collect::<Result<_, _>>()?;
        for st in rel.simples() {
            if g.length(&st.element.mul(w)) >= g.length(w) {
                continue;
            }
            let mut prefix = g.identity();
            let found = letters.iter().any(|wi| {
                let next = prefix.mul(wi);
                let hit = st.element.mul(&prefix) == next;
                prefix = next;
                hit
            });
            o.fail_if(!found, || format!("s̃{} on {}", st.node, g.format_word(w)));
        }
    }
    Ok(o)
}

fn relative_w0_centralizes(ctx: &Ctx) -> Result<Outcome, Error> {
    let rel = need_rel!(ctx);
    let w0 = rel.w0_sigma();
    let mut o = Outcome::detail(format!("{} relative simple reflections", rel.simples().len()));
    for st in rel.simples() {
        o.fail_if(w0.mul(&st.element) != st.element.mul(w0), || format!("s̃{}", st.node));
    }
    if let Some(d) = rel.diagnostic() {
        o.failures.push(d.to_string());
    }
    Ok(o)
}

fn complex_fixed_chambers(ctx: &Ctx) -> Result<Outcome, Error> {
    let rel = need_rel!(ctx);
    let fc = fixed_chambers(rel, ctx.cfg.radius)?;
    let mut o = Outcome::detail(format!(
        "{} chambers, {} at the ball boundary excluded",
        fc.chambers.len(),
        fc.boundary
    ));
    o.fail_if(!fc.all_type_sigma, || "a fixed chamber has type other than Σ".into());
    o.fail_if(!fc.reps_in_relative_group, || "a chamber representative lies outside W̃".into());
    o.fail_if(!fc.single_free_orbit, || "the action on found chambers is not a single free orbit".into());
    Ok(o)
}

fn complex_relative_position(ctx: &Ctx) -> Result<Outcome, Error> {
    let rel = need_rel!(ctx);
    let g = rel.group();
    let sigma = rel.sigma();
    if sigma == g.nodes() {
        return Ok(Outcome::skip("Σ is all of the nodes"));
    }
    let fs = facets_of_type(g, sigma, ctx.cfg.radius.min(3))?;
    let mut o = Outcome::detail(format!("{} facets of type Σ", fs.len()));
    for a in &fs {
        for b in &fs {
            let rp = relative_position(g, a, b)?;
            o.fail_if(rp.good != rp.spans_equal, || format!("{} vs {}: good ≠ span equality", a.label(g), b.label(g)));
            if let Some(w) = &rp.relative_element {
                let ok = rel.contains(w) && b.canonical_action(g, w)? == *a;
                o.fail_if(!ok, || format!("{} vs {}: relative element {}", a.label(g), b.label(g), g.format_word(w)));
            }
        }
    }
    Ok(o)
}

fn complex_orbit_fibres(ctx: &Ctx) -> Result<Outcome, Error> {
    let rel = need_rel!(ctx);
    let Some(d) = &ctx.datum else { return Ok(Outcome::skip("no grading configured")) };
    let g = rel.group();
    if !g.is_affine() {
        return Ok(Outcome::skip("the group is finite"));
    }
    if rel.sigma() == g.nodes() {
        return Ok(Outcome::skip("Σ is all of the nodes"));
    }
    let x = GradingPoint::new(g, d.theta().to_vec(), d.m())?;
    let wx = x.elements(g);
    let nu0 = Facet::new(g, &g.identity(), rel.sigma())?;
    let (alcoves, complete) = e_alcoves(rel, &nu0, ctx.cfg.radius.min(3))?;
    let mut o = Outcome::detail(format!(
        "|W_x| = {}, {} alcoves of 𝔼{}",
        wx.len(),
        alcoves.len(),
        if complete { "" } else { " (truncated)" }
    ));
    for nu in &alcoves {
        for (w, count) in orbit_fibres(g, &wx, &nu0, nu)? {
            o.fail_if(rel.contains(&w) && count > 1, || format!("{count} orbits over {}", g.format_word(&w)));
        }
    }
    Ok(o)
}

fn spiral_facets(ctx: &Ctx) -> Result<Outcome, Error> {
    let Some(d) = &ctx.datum else { return Ok(Outcome::skip("no grading configured")) };
    let g = WeylGroup::affine(AffineRootSystem::affinize(d.system().clone())?);
    let window = (-8, 8);
    let fs = facets_in_ball(&g, ctx.cfg.radius.min(2))?;
    let mut o = Outcome::detail(format!("{} facets, window {window:?}", fs.len()));
    for f in &fs {
        let fsp = spiral_from_facet(d, &g, f, window)?;
        o.fail_if(!fsp.independent, || format!("{}: spiral depends on the sample point", f.label(&g)));
        let levi = levi_decomposition_check(&fsp.spiral, window);
        o.fail_if(!levi.disjoint_union, || format!("{}: P ≠ L ⊔ U in degrees {:?}", f.label(&g), levi.failing_degrees));
        let br = bracket_check(&fsp.spiral, window);
        o.fail_if(!br.is_empty(), || format!("{}: {} bracket violations", f.label(&g), br.len()));
    }
    Ok(o)
}

fn build_ddaha(ctx: &Ctx) -> Result<DDaha, Error> {
    let params = ctx
        .cfg
        .hecke_parameters(&ctx.group)
        .map_err(|e| Error::InvalidParameters(e.message))?;
    DDaha::new(ctx.group.clone(), params)
}

fn ddaha_relations(ctx: &Ctx) -> Result<Outcome, Error> {
    let alg = build_ddaha(ctx)?;
    let mut rng = ctx.rng(11);
    let rep = alg.verify_relations(6, ctx.cfg.samples.min(20), &mut rng)?;
    let mut o = Outcome::detail(format!("{} relations", rep.checks.len()));
    for c in &rep.checks {
        o.fail_if(!c.passed, || c.name.clone());
    }
    Ok(o)
}

fn ddaha_associativity(ctx: &Ctx) -> Result<Outcome, Error> {
    let alg = build_ddaha(ctx)?;
    let mut rng = ctx.rng(13);
    let n = ctx.cfg.samples;
    let mut o = Outcome::detail(format!("{n} random triples"));
    for _ in 0..n {
        let x = alg.random_element(&mut rng, 3, 2, ctx.cfg.depth.max(1));
        let y = alg.random_element(&mut rng, 3, 2, ctx.cfg.depth.max(1));
        let z = alg.random_element(&mut rng, 3, 2, ctx.cfg.depth.max(1));
        let l = alg.multiply(&alg.multiply(&x, &y)?, &z)?;
        let r = alg.multiply(&x, &alg.multiply(&y, &z)?)?;
        o.fail_if(l != r, || format!("({})({})({})", alg.format(&x), alg.format(&y), alg.format(&z)));
    }
    Ok(o)
}

const CHECKS: &[(&str, CheckFn)] = &[
    ("complex.fixed_chambers", complex_fixed_chambers),
    ("complex.orbit_fibres", complex_orbit_fibres),
    ("complex.relative_position", complex_relative_position),
    ("ddaha.associativity", ddaha_associativity),
    ("ddaha.relations", ddaha_relations),
    ("relative.admissible", relative_admissible),
    ("relative.coxeter_ball_sizes", relative_coxeter_balls),
    ("relative.exchange", relative_exchange),
    ("relative.length_additivity", relative_length_additivity),
    ("relative.w0_centralizes", relative_w0_centralizes),
    ("root.reflection_closure", root_reflection_closure),
    ("spiral.facet_spirals", spiral_facets),
    ("weyl.length_inversions", weyl_length_inversions),
    ("weyl.reflection_subadditivity", weyl_reflection_subadditivity),
];

pub fn certify(cfg: &JobConfig) -> Result<CertifyReport, CliError> {
    let group = cfg.group()?;
    let rel = match RelativeCoxeterSystem::with_order_cap(group.clone(), cfg.sigma_set(), cfg.order_cap) {
        Ok(r) => Some(r),
        Err(Error::NotAdmissible(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let ctx = Ctx { cfg, group, rel, datum: cfg.datum()? };
    let mut checks: Vec<Check> = std::thread::scope(|s| {
        let handles: Vec<_> = CHECKS
            .iter()
            .map(|(name, f)| {
                let ctx = &ctx;
                s.spawn(move || finish(name, f(ctx)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
    });
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = checks.iter().all(|c| matches!(c.status, Status::Pass | Status::Skip));
    Ok(CertifyReport { passed, checks })
}
