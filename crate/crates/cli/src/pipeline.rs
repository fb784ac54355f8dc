//! Matching a relative Coxeter system against the Weyl groups of the standard root systems,
//! so that a Hecke algebra can be built over it.
//!
//! The Coxeter matrix fixes the group, not the root system: `B_n` and `C_n` share one finite Weyl
//! group, and `C_n`, `BC_n` share one affine Weyl group. Every ambiguity is reported, and `BC`
//! is preferred when it is among the candidates.

use alcove::relative::{element_order, CoxeterOrder, RelativeCoxeterSystem};
use alcove::{AffineRootSystem, CartanType, FiniteRootSystem, WeylGroup};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub label: String,
    pub affine: bool,
    /// `node_map[k]` is the node of the candidate matched with the `k`-th relative simple reflection.
    pub node_map: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Identification {
    pub relative_nodes: Vec<usize>,
    pub candidates: Vec<Candidate>,
    pub chosen: Option<Candidate>,
    pub notes: Vec<String>,
}

fn coxeter_matrix(g: &WeylGroup) -> Vec<Vec<CoxeterOrder>> {
    let nodes: Vec<usize> = g.nodes().iter().collect();
    nodes
        .iter()
        .map(|&i| {
            nodes
                .iter()
                .map(|&j| {
                    if i == j {
                        CoxeterOrder::Finite(1)
                    } else {
                        element_order(&g.generator(i).expect("node").mul(g.generator(j).expect("node")), 12)
                    }
                })
                .collect()
        })
        .collect()
}

/// A bijection `p` with `b[p[i]][p[j]] = a[i][j]`, by backtracking.
fn isomorphism(a: &[Vec<CoxeterOrder>], b: &[Vec<CoxeterOrder>]) -> Option<Vec<usize>> {
    fn extend(a: &[Vec<CoxeterOrder>], b: &[Vec<CoxeterOrder>], p: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = p.len();
        if i == a.len() {
            return true;
        }
        for c in 0..b.len() {
            if used[c] || (0..i).any(|k| a[i][k] != b[c][p[k]]) {
                continue;
            }
            used[c] = true;
            p.push(c);
            if extend(a, b, p, used) {
                return true;
            }
            p.pop();
            used[c] = false;
        }
        false
    }
    if a.len() != b.len() {
        return None;
    }
    let mut p = Vec::new();
    let mut used = vec![false; b.len()];
    extend(a, b, &mut p, &mut used).then_some(p)
}

const TYPES: [CartanType; 8] = [
    CartanType::A,
    CartanType::B,
    CartanType::C,
    CartanType::D,
    CartanType::E,
    CartanType::F,
    CartanType::G,
    CartanType::BC,
];

pub fn identify(rel: &RelativeCoxeterSystem) -> Identification {
    let relative_nodes: Vec<usize> = rel.simples().iter().map(|s| s.node).collect();
    let matrix = rel.coxeter_matrix();
    let affine = rel.group().is_affine();
    let k = relative_nodes.len();
    let mut notes = Vec::new();
    let mut candidates = Vec::new();
    let rank = if affine { k.checked_sub(1) } else { Some(k) };
    if let Some(n) = rank.filter(|&n| n >= 1) {
        for t in TYPES {
            let Ok(sys) = FiniteRootSystem::build(t, n) else { continue };
            let g = if affine {
                match AffineRootSystem::affinize(sys) {
                    Ok(aff) => WeylGroup::affine(aff),
                    Err(_) => continue,
                }
            } else {
                match WeylGroup::finite(sys) {
                    Ok(g) => g,
                    Err(_) => continue,
                }
            };
            let nodes: Vec<usize> = g.nodes().iter().collect();
            if let Some(p) = isomorphism(matrix, &coxeter_matrix(&g)) {
                let label = format!("{t}{n}");
                if candidates.iter().any(|c: &Candidate| c.label == label) {
                    continue;
                }
                candidates.push(Candidate { label, affine, node_map: p.iter().map(|&c| nodes[c]).collect() });
            }
        }
    }
    if candidates.is_empty() {
        notes.push("no irreducible standard type has this Coxeter matrix".into());
    } else if candidates.len() > 1 {
        let labels: Vec<&str> = candidates.iter().map(|c| c.label.as_str()).collect();
        notes.push(format!("the Coxeter matrix does not separate {}", labels.join(", ")));
    }
    let chosen = candidates
        .iter()
        .find(|c| c.label.starts_with("BC"))
        .or_else(|| candidates.first())
        .cloned();
    if let Some(c) = &chosen {
        if c.label.starts_with("BC") && candidates.len() > 1 {
            notes.push(format!("taking {} as the relative root system", c.label));
        }
        notes.push("root lengths of the relative system are a normalization choice; c must be given in it".into());
    }
    Identification { relative_nodes, candidates, chosen, notes }
}

/// The Weyl group of the chosen candidate.
pub fn chosen_group(id: &Identification) -> Option<WeylGroup> {
    let c = id.chosen.as_ref()?;
    let (t, n) = alcove::root_system::parse_type_label(&c.label).ok()?;
    let sys = FiniteRootSystem::build(t, n).ok()?;
    if c.affine {
        Some(WeylGroup::affine(AffineRootSystem::affinize(sys).ok()?))
    } else {
        WeylGroup::finite(sys).ok()
    }
}
