//! Coxeter groups from their Coxeter matrix alone, realized on `ℤ^r` through a generalized
//! Cartan matrix with `a_ij a_ji = 4 cos²(π/m_ij)`. Shares no code with the Weyl group machinery.

use std::collections::HashSet;

use alcove::relative::CoxeterOrder;

/// Entry of a Coxeter matrix; `None` is `∞`.
pub type Order = Option<u32>;

pub fn from_orders(m: &[Vec<CoxeterOrder>]) -> Result<Vec<Vec<Order>>, String> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|o| match o {
                    CoxeterOrder::Finite(k) => Ok(Some(*k)),
                    CoxeterOrder::Infinite => Ok(None),
                    CoxeterOrder::ExceedsCap(c) => Err(format!("order above the cap {c}")),
                })
                .collect()
        })
        .collect()
}

/// A generalized Cartan matrix with the given Coxeter matrix, when it is crystallographic.
pub fn cartan_matrix(m: &[Vec<Order>]) -> Result<Vec<Vec<i64>>, String> {
    let r = m.len();
    let mut a = vec![vec![0i64; r]; r];
    for i in 0..r {
        a[i][i] = 2;
        for j in i + 1..r {
            let prod = match m[i][j] {
                Some(2) => 0,
                Some(3) => 1,
                Some(4) => 2,
                Some(6) => 3,
                None => 4,
                Some(k) => return Err(format!("m({i},{j}) = {k} is not crystallographic")),
            };
            if m[j][i] != m[i][j] {
                return Err("Coxeter matrix is not symmetric".into());
            }
            if prod > 0 {
                a[i][j] = -1;
                a[j][i] = -prod;
            }
        }
    }
    Ok(a)
}

/// `#{w : ℓ(w) ≤ k}` for `k = 0..=radius`, by breadth-first search on reflection matrices.
pub fn ball_sizes(m: &[Vec<Order>], radius: usize) -> Result<Vec<usize>, String> {
    let a = cartan_matrix(m)?;
    let r = a.len();
    // s_i(α_j) = α_j − a_ij α_i, stored as a matrix acting on coordinate columns
    let gens: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut s = vec![0i64; r * r];
            for j in 0..r {
                s[j * r + j] = 1;
                s[i * r + j] -= a[i][j];
            }
            s
        })
        .collect();
    let mul = |x: &[i64], y: &[i64]| -> Vec<i64> {
        let mut out = vec![0i64; r * r];
        for i in 0..r {
            for k in 0..r {
                let v = x[i * r + k];
                if v != 0 {
                    for j in 0..r {
                        out[i * r + j] += v * y[k * r + j];
                    }
                }
            }
        }
        out
    };
    let mut identity = vec![0i64; r * r];
    for i in 0..r {
        identity[i * r + i] = 1;
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    let mut sizes = vec![1];
    for _ in 0..radius {
        let mut next = Vec::new();
        for x in &frontier {
            for s in &gens {
                let y = mul(x, s);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        sizes.push(sizes.last().unwrap() + next.len());
        frontier = next;
    }
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_and_affine_counts() {
        // B2: 8 elements, ball sizes 1, 3, 5, 7, 8
        let b2 = vec![vec![Some(1), Some(4)], vec![Some(4), Some(1)]];
        assert_eq!(ball_sizes(&b2, 5).unwrap(), vec![1, 3, 5, 7, 8, 8]);
        // infinite dihedral group: 2k + 1
        let a1 = vec![vec![Some(1), None], vec![None, Some(1)]];
        assert_eq!(ball_sizes(&a1, 4).unwrap(), vec![1, 3, 5, 7, 9]);
        // A3 = S4, Poincaré polynomial (1+q)(1+q+q²)(1+q+q²+q³)
        let a3 = vec![
            vec![Some(1), Some(3), Some(2)],
            vec![Some(3), Some(1), Some(3)],
            vec![Some(2), Some(3), Some(1)],
        ];
        assert_eq!(ball_sizes(&a3, 6).unwrap(), vec![1, 4, 9, 15, 20, 23, 24]);
    }

    #[test]
    fn rejects_non_crystallographic() {
        let h2 = vec![vec![Some(1), Some(5)], vec![Some(5), Some(1)]];
        assert!(ball_sizes(&h2, 2).is_err());
    }
}
