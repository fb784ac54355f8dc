//! Job configuration: one TOML file, overridden field by field from the command line.

use std::collections::BTreeMap;
use std::path::Path;

use alcove::ddaha::HeckeParameters;
use alcove::rational::{self, parse_rational, parse_vector, Rational};
use alcove::relative::{RelativeCoxeterSystem, DEFAULT_ORDER_CAP};
use alcove::root_system::{parse_type_label, RootDataJson};
use alcove::spiral::GradedRootDatum;
use alcove::weyl::DEFAULT_BALL_CAP;
use alcove::{AffineRootSystem, FiniteRootSystem, NodeSet, WeylGroup};
use serde::{Deserialize, Serialize};

use crate::{CliError, Exit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ThetaBasis {
    /// Coordinates `⟨α_i, θ̃⟩` against the simple roots.
    Coweight,
    /// Coefficients on the simple coroots.
    Coroot,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingSpec {
    pub theta: String,
    #[serde(default = "default_theta_basis")]
    pub theta_basis: ThetaBasis,
    pub m: i64,
    #[serde(default = "default_d")]
    pub d: i64,
}

fn default_theta_basis() -> ThetaBasis {
    ThetaBasis::Coweight
}

fn default_d() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct JobConfig {
    /// Type label such as `"B2"` or `"BC1"`.
    pub system: String,
    /// `false` restricts to the finite Weyl group on nodes `1..=n`.
    pub affine: bool,
    /// Gram matrix on the simple roots, `"p/q"` entries; must be a positive multiple of the standard one.
    pub gram: Option<Vec<Vec<String>>>,
    pub sigma: Vec<usize>,
    pub grading: Option<GradingSpec>,
    pub radius: usize,
    pub depth: usize,
    /// Parameters `c_a` by node; missing nodes take `c_default`.
    pub c: BTreeMap<String, i64>,
    pub c_default: i64,
    /// Specialization point of `u` in `h_a = u c_a`; defaults to `d/2m`.
    pub u: Option<String>,
    /// Accept `c < 2`, non-constant `c` on conjugacy classes, and `h = 0`.
    pub unsafe_params: bool,
    pub format: Format,
    pub seed: u64,
    pub samples: usize,
    pub order_cap: u32,
    pub ball_cap: usize,
}

impl Default for JobConfig {
    fn default() -> Self {
        Self {
            system: "A1".into(),
            affine: true,
            gram: None,
            sigma: Vec::new(),
            grading: None,
            radius: 3,
            depth: 2,
            c: BTreeMap::new(),
            c_default: 2,
            u: None,
            unsafe_params: false,
            format: Format::Json,
            seed: 0,
            samples: 20,
            order_cap: DEFAULT_ORDER_CAP,
            ball_cap: DEFAULT_BALL_CAP,
        }
    }
}

/// Values given on the command line; `None` leaves the file (or default) value alone.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub system: Option<String>,
    pub finite: bool,
    pub sigma: Option<String>,
    pub theta: Option<String>,
    pub theta_basis: Option<ThetaBasis>,
    pub m: Option<i64>,
    pub d: Option<i64>,
    pub radius: Option<usize>,
    pub depth: Option<usize>,
    pub c: Option<String>,
    pub u: Option<String>,
    pub unsafe_params: bool,
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub ball_cap: Option<usize>,
}

pub fn config_error(msg: impl Into<String>) -> CliError {
    CliError::new(Exit::Config, msg)
}

impl JobConfig {
    pub fn load(path: Option<&Path>, o: &Overrides) -> Result<Self, CliError> {
        let mut cfg = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| config_error(format!("cannot read {}: {e}", p.display())))?;
                toml::from_str(&text).map_err(|e| config_error(format!("{}: {e}", p.display())))?
            }
            None => JobConfig::default(),
        };
        cfg.apply(o)?;
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply(&mut self, o: &Overrides) -> Result<(), CliError> {
        if let Some(s) = &o.system {
            self.system = s.clone();
        }
        if o.finite {
            self.affine = false;
        }
        if let Some(s) = &o.sigma {
            self.sigma = NodeSet::parse(s).map_err(|e| config_error(e.to_string()))?.iter().collect();
        }
        if o.theta.is_some() || o.m.is_some() || o.d.is_some() || o.theta_basis.is_some() {
            let mut g = self.grading.clone().unwrap_or(GradingSpec {
                theta: String::new(),
                theta_basis: ThetaBasis::Coweight,
                m: 1,
                d: 1,
            });
            if let Some(t) = &o.theta {
                g.theta = t.clone();
            }
            if let Some(b) = o.theta_basis {
                g.theta_basis = b;
            }
            if let Some(m) = o.m {
                g.m = m;
            }
            if let Some(d) = o.d {
                g.d = d;
            }
            self.grading = Some(g);
        }
        if let Some(r) = o.radius {
            self.radius = r;
        }
        if let Some(d) = o.depth {
            self.depth = d;
        }
        if let Some(c) = &o.c {
            self.apply_c(c)?;
        }
        if let Some(u) = &o.u {
            self.u = Some(u.clone());
        }
        if o.unsafe_params {
            self.unsafe_params = true;
        }
        if let Some(f) = o.format {
            self.format = f;
        }
        if let Some(s) = o.seed {
            self.seed = s;
        }
        if let Some(s) = o.samples {
            self.samples = s;
        }
        if let Some(b) = o.ball_cap {
            self.ball_cap = b;
        }
        Ok(())
    }

    /// `"2"` sets every node, `"0=2,1=4"` sets individual nodes.
    fn apply_c(&mut self, s: &str) -> Result<(), CliError> {
        if !s.contains('=') {
            self.c_default = s.trim().parse().map_err(|_| config_error(format!("bad c value {s:?}")))?;
            self.c.clear();
            return Ok(());
        }
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| config_error(format!("bad c entry {part:?}")))?;
            let v: i64 = v.trim().parse().map_err(|_| config_error(format!("bad c entry {part:?}")))?;
            self.c.insert(k.trim().trim_start_matches('s').to_string(), v);
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), CliError> {
        self.finite_system()?;
        if let Some(g) = &self.grading {
            if g.m <= 0 {
                return Err(config_error(format!("m must be positive, got {}", g.m)));
            }
            if g.d == 0 {
                return Err(config_error("d must be nonzero"));
            }
        }
        for k in self.c.keys() {
            k.parse::<usize>().map_err(|_| config_error(format!("bad node {k:?} in c")))?;
        }
        if let Some(u) = &self.u {
            parse_rational(u).map_err(|e| config_error(e.to_string()))?;
        }
        self.group()?.check_nodes(self.sigma_set()).map_err(|e| config_error(e.to_string()))?;
        Ok(())
    }

    pub fn sigma_set(&self) -> NodeSet {
        self.sigma.iter().copied().collect()
    }

    pub fn finite_system(&self) -> Result<FiniteRootSystem, CliError> {
        let (t, n) = parse_type_label(&self.system).map_err(|e| config_error(e.to_string()))?;
        let base = FiniteRootSystem::build(t, n).map_err(|e| config_error(e.to_string()))?;
        let Some(gram) = &self.gram else { return Ok(base) };
        let gram: Vec<Vec<Rational>> = gram
            .iter()
            .map(|r| r.iter().map(|x| parse_rational(x)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()
            .map_err(|e| config_error(e.to_string()))?;
        let data = RootDataJson { cartan_type: t.to_string(), rank: n, cartan: base.cartan().to_vec(), gram };
        FiniteRootSystem::from_json(&data).map_err(|e| config_error(e.to_string()))
    }

    pub fn group(&self) -> Result<WeylGroup, CliError> {
        let sys = self.finite_system()?;
        let g = if self.affine {
            WeylGroup::affine(AffineRootSystem::affinize(sys).map_err(|e| config_error(e.to_string()))?)
        } else {
            WeylGroup::finite(sys).map_err(|e| config_error(e.to_string()))?
        };
        Ok(g.with_ball_cap(self.ball_cap))
    }

    pub fn relative(&self) -> Result<RelativeCoxeterSystem, CliError> {
        RelativeCoxeterSystem::with_order_cap(self.group()?, self.sigma_set(), self.order_cap).map_err(CliError::from)
    }

    /// `θ̃` in coweight coordinates.
    pub fn theta(&self, sys: &FiniteRootSystem) -> Result<Option<Vec<Rational>>, CliError> {
        let Some(g) = &self.grading else { return Ok(None) };
        let v = parse_vector(&g.theta).map_err(|e| config_error(e.to_string()))?;
        if v.len() != sys.rank() {
            return Err(config_error(format!("theta has {} coordinates, rank is {}", v.len(), sys.rank())));
        }
        Ok(Some(match g.theta_basis {
            ThetaBasis::Coweight => v,
            ThetaBasis::Coroot => (0..sys.rank())
                .map(|j| (0..sys.rank()).fold(rational::zero(), |acc, i| acc + &v[i] * rational::rat(sys.cartan()[i][j])))
                .collect(),
        }))
    }

    pub fn datum(&self) -> Result<Option<GradedRootDatum>, CliError> {
        let sys = self.finite_system()?;
        let Some(theta) = self.theta(&sys)? else { return Ok(None) };
        let g = self.grading.as_ref().expect("grading present");
        GradedRootDatum::new(sys, theta, g.m, g.d).map(Some).map_err(|e| config_error(e.to_string()))
    }

    /// `(m, d)` from the grading, `(1, 1)` without one.
    pub fn m_d(&self) -> (i64, i64) {
        self.grading.as_ref().map_or((1, 1), |g| (g.m, g.d))
    }

    pub fn hecke_parameters(&self, group: &WeylGroup) -> Result<HeckeParameters, CliError> {
        let (m, d) = self.m_d();
        let mut c = BTreeMap::new();
        for i in group.nodes().iter() {
            c.insert(i, self.c_default);
        }
        for (k, v) in &self.c {
            let i: usize = k.parse().expect("validated");
            if !group.nodes().contains(i) {
                return Err(config_error(format!("c given on s{i}, which is not a node")));
            }
            c.insert(i, *v);
        }
        let mut p = HeckeParameters::new(m, d, c);
        if let Some(u) = &self.u {
            p = p.with_u(parse_rational(u).expect("validated"));
        }
        if self.unsafe_params {
            p = p.unsafe_ok();
        }
        Ok(p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("config serializes")
    }
}
