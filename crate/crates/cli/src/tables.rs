//! Row types for `alcove table`. Each row prints as one TSV line and parses back to itself.

use alcove::complex::{facets_in_ball, facets_of_type, relative_position, Facet};
use alcove::ddaha::StandardModule;
use alcove::rational::{parse_vector, Rational};
use alcove::spiral::Spiral;
use alcove::{Element, NodeSet, WeylGroup};

use crate::output::{int_vec_str, vec_str, Table};
use crate::{CliError, Exit};

pub trait Row: Sized {
    const COLUMNS: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
    fn parse(fields: &[&str]) -> Result<Self, CliError>;
}

fn bad(what: &str, s: &str) -> CliError {
    CliError::new(Exit::Config, format!("bad {what} field {s:?}"))
}

fn parse_num<T: std::str::FromStr>(what: &str, s: &str) -> Result<T, CliError> {
    s.parse().map_err(|_| bad(what, s))
}

fn parse_flag(what: &str, s: &str) -> Result<bool, CliError> {
    match s {
        "1" => Ok(true),
        "0" => Ok(false),
        _ => Err(bad(what, s)),
    }
}

fn flag(b: bool) -> String {
    if b { "1" } else { "0" }.into()
}

pub fn to_table<R: Row>(rows: &[R]) -> Table {
    let mut t = Table::new(R::COLUMNS);
    for r in rows {
        t.push(r.fields());
    }
    t
}

pub fn parse_rows<R: Row>(text: &str) -> Result<Vec<R>, CliError> {
    let (_, rows) = crate::output::parse_tsv(text, R::COLUMNS)?;
    rows.iter().map(|f| R::parse(f)).collect()
}

/// Length-lexicographic key on reduced words.
fn word_key(g: &WeylGroup, x: &Element) -> (usize, Vec<usize>, Vec<i64>) {
    let w = g.reduced_word(x);
    (w.letters.len(), w.letters, w.pi.translation_part().to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylBallRow {
    pub length: usize,
    pub word: String,
    pub mu: Vec<i64>,
    pub w: Vec<Vec<i64>>,
}

impl Row for WeylBallRow {
    const COLUMNS: &'static [&'static str] = &["length", "word", "mu", "w"];

    fn fields(&self) -> Vec<String> {
        let w: Vec<String> = self.w.iter().map(|r| int_vec_str(r)).collect();
        vec![self.length.to_string(), self.word.clone(), int_vec_str(&self.mu), format!("[{}]", w.join(","))]
    }

    fn parse(f: &[&str]) -> Result<Self, CliError> {
        Ok(Self {
            length: parse_num("length", f[0])?,
            word: f[1].to_string(),
            mu: serde_json::from_str(f[2]).map_err(|_| bad("mu", f[2]))?,
            w: serde_json::from_str(f[3]).map_err(|_| bad("w", f[3]))?,
        })
    }
}

pub fn weyl_ball(g: &WeylGroup, radius: usize) -> Result<Vec<WeylBallRow>, CliError> {
    let mut ball = g.enumerate_ball(radius)?;
    ball.sort_by_cached_key(|x| word_key(g, x));
    Ok(ball
        .iter()
        .map(|x| WeylBallRow {
            length: g.length(x),
            word: g.format_word(x),
            mu: x.translation_part().to_vec(),
            w: x.finite_matrix().to_vec(),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetRow {
    pub rep: String,
    pub length: usize,
    pub ftype: NodeSet,
    pub dim: usize,
    pub interior: Vec<Rational>,
}

impl Row for FacetRow {
    const COLUMNS: &'static [&'static str] = &["rep", "length", "type", "dim", "interior"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.rep.clone(),
            self.length.to_string(),
            self.ftype.to_string(),
            self.dim.to_string(),
            vec_str(&self.interior),
        ]
    }

    fn parse(f: &[&str]) -> Result<Self, CliError> {
        Ok(Self {
            rep: f[0].to_string(),
            length: parse_num("length", f[1])?,
            ftype: NodeSet::parse(f[2]).map_err(|_| bad("type", f[2]))?,
            dim: parse_num("dim", f[3])?,
            interior: parse_vector(f[4]).map_err(|_| bad("interior", f[4]))?,
        })
    }
}

fn facet_row(g: &WeylGroup, f: &Facet) -> FacetRow {
    FacetRow {
        rep: g.format_word(f.rep()),
        length: g.length(f.rep()),
        ftype: f.facet_type(),
        dim: f.span().dim(),
        interior: f.interior_point().to_vec(),
    }
}

fn sort_facets(g: &WeylGroup, facets: &mut [Facet]) {
    facets.sort_by_cached_key(|f| (word_key(g, f.rep()), f.facet_type()));
}

pub fn facets(g: &WeylGroup, radius: usize) -> Result<Vec<FacetRow>, CliError> {
    let mut fs = facets_in_ball(g, radius)?;
    sort_facets(g, &mut fs);
    Ok(fs.iter().map(|f| facet_row(g, f)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiralRow {
    pub n: i64,
    /// `h` for the Cartan part, otherwise the root in simple-root coordinates.
    pub member: String,
    pub p: bool,
    pub l: bool,
    pub u: bool,
}

impl Row for SpiralRow {
    const COLUMNS: &'static [&'static str] = &["n", "member", "P", "L", "U"];

    fn fields(&self) -> Vec<String> {
        vec![self.n.to_string(), self.member.clone(), flag(self.p), flag(self.l), flag(self.u)]
    }

    fn parse(f: &[&str]) -> Result<Self, CliError> {
        if f[1] != "h" {
            parse_vector(f[1]).map_err(|_| bad("member", f[1]))?;
        }
        Ok(Self {
            n: parse_num("n", f[0])?,
            member: f[1].to_string(),
            p: parse_flag("P", f[2])?,
            l: parse_flag("L", f[3])?,
            u: parse_flag("U", f[4])?,
        })
    }
}

/// One row per member of `P_n`, for `n` in the window.
pub fn spiral(s: &Spiral, window: (i64, i64)) -> Vec<SpiralRow> {
    let mut out = Vec::new();
    for n in window.0..=window.1 {
        let piece = s.degree(n);
        for &x in &piece.p {
            out.push(SpiralRow {
                n,
                member: s.label(x),
                p: true,
                l: piece.l.contains(&x),
                u: piece.u.contains(&x),
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelposRow {
    pub nu: String,
    pub nuprime: String,
    pub double_coset: String,
    pub good: bool,
    /// `-` when the pair is not good.
    pub relative_element: String,
}

impl Row for RelposRow {
    const COLUMNS: &'static [&'static str] = &["nu", "nuprime", "double_coset", "good", "relative_element"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.nu.clone(),
            self.nuprime.clone(),
            self.double_coset.clone(),
            flag(self.good),
            self.relative_element.clone(),
        ]
    }

    fn parse(f: &[&str]) -> Result<Self, CliError> {
        let good = parse_flag("good", f[3])?;
        if good == (f[4] == "-") {
            return Err(bad("relative_element", f[4]));
        }
        Ok(Self {
            nu: f[0].to_string(),
            nuprime: f[1].to_string(),
            double_coset: f[2].to_string(),
            good,
            relative_element: f[4].to_string(),
        })
    }
}

pub fn relpos(g: &WeylGroup, ftype: NodeSet, radius: usize) -> Result<Vec<RelposRow>, CliError> {
    let mut fs = facets_of_type(g, ftype, radius)?;
    sort_facets(g, &mut fs);
    let mut out = Vec::new();
    for a in &fs {
        for b in &fs {
            let rp = relative_position(g, a, b)?;
            out.push(RelposRow {
                nu: a.label(g),
                nuprime: b.label(g),
                double_coset: g.format_word(&rp.double_coset),
                good: rp.good,
                relative_element: rp.relative_element.as_ref().map_or("-".into(), |w| g.format_word(w)),
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightRow {
    pub weight: Vec<Rational>,
    pub multiplicity: usize,
    pub dimension: usize,
    pub semisimple: bool,
}

impl Row for WeightRow {
    const COLUMNS: &'static [&'static str] = &["weight", "multiplicity", "eigenspace_dim", "semisimple"];

    fn fields(&self) -> Vec<String> {
        vec![
            vec_str(&self.weight),
            self.multiplicity.to_string(),
            self.dimension.to_string(),
            flag(self.semisimple),
        ]
    }

    fn parse(f: &[&str]) -> Result<Self, CliError> {
        Ok(Self {
            weight: parse_vector(f[0]).map_err(|_| bad("weight", f[0]))?,
            multiplicity: parse_num("multiplicity", f[1])?,
            dimension: parse_num("eigenspace_dim", f[2])?,
            semisimple: parse_flag("semisimple", f[3])?,
        })
    }
}

pub fn weights(module: &StandardModule) -> Vec<WeightRow> {
    module
        .weights
        .iter()
        .map(|w| WeightRow {
            weight: w.weight.clone(),
            multiplicity: w.multiplicity,
            dimension: w.dimension,
            semisimple: w.semisimple,
        })
        .collect()
}
