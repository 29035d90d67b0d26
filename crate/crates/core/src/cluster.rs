//! Brute-force search for d-cluster-tilting modules over Λ(n, ℓ).
//!
//! Every d-cluster-tilting set is a maximal d-rigid set (anything in both
//! perpendicular categories could be added and would stay rigid), so it is
//! enough to enumerate maximal cliques of the d-rigidity graph and test the
//! two perpendicular conditions on each. Functorial finiteness is automatic
//! for add M of a finitely generated module and is not checked.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nakayama::{NakAlgebra, NakEngine, NakModule};

/// dim Ext^i(X, Y) for all indecomposables X, Y and 1 ≤ i ≤ d-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    algebra: NakAlgebra,
    d: usize,
    modules: Vec<NakModule>,
    // [x][y][i-1], flattened
    table: Vec<usize>,
}

impl ExtTable {
    pub fn build(engine: &NakEngine, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::input("d must be positive"));
        }
        let modules = engine.modules().to_vec();
        let degrees = d - 1;
        let mut table = Vec::with_capacity(modules.len() * modules.len() * degrees);
        for &x in &modules {
            for &y in &modules {
                for i in 1..d {
                    table.push(engine.ext_dim_nak(x, y, i)?);
                }
            }
        }
        Ok(ExtTable {
            algebra: engine.algebra(),
            d,
            modules,
            table,
        })
    }

    /// Builds a table from explicit values (`values[x][y][i-1]`), e.g. for
    /// exercising the search on hand-made data.
    pub fn from_values(algebra: NakAlgebra, d: usize, values: Vec<usize>) -> Result<Self> {
        let modules = algebra.indecomposables();
        let expected = modules.len() * modules.len() * (d.max(1) - 1);
        if d == 0 || values.len() != expected {
            return Err(Error::input(format!(
                "expected {expected} Ext values for d = {d}, got {}",
                values.len()
            )));
        }
        Ok(ExtTable {
            algebra,
            d,
            modules,
            table: values,
        })
    }

    pub fn algebra(&self) -> NakAlgebra {
        self.algebra
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn modules(&self) -> &[NakModule] {
        &self.modules
    }

    pub fn get(&self, x: usize, y: usize, i: usize) -> usize {
        let k = self.modules.len();
        let deg = self.d - 1;
        self.table[(x * k + y) * deg + (i - 1)]
    }

    /// Ext^i(X, Y) = 0 for all 1 ≤ i ≤ d-1.
    pub fn vanishes(&self, x: usize, y: usize) -> bool {
        (1..self.d).all(|i| self.get(x, y, i) == 0)
    }

    /// Nonzero entries as `(X, Y, i, dim)`.
    pub fn nonzero_entries(&self) -> Vec<(NakModule, NakModule, usize, usize)> {
        let k = self.modules.len();
        let mut out = Vec::new();
        for x in 0..k {
            for y in 0..k {
                for i in 1..self.d {
                    let v = self.get(x, y, i);
                    if v != 0 {
                        out.push((self.modules[x], self.modules[y], i, v));
                    }
                }
            }
        }
        out
    }

    fn rigid_vertices(&self) -> Vec<usize> {
        (0..self.modules.len())
            .filter(|&x| self.vanishes(x, x))
            .collect()
    }

    fn compatible(&self, x: usize, y: usize) -> bool {
        self.vanishes(x, y) && self.vanishes(y, x)
    }
}

/// Indices into the indecomposable list, sorted.
pub type CandidateSet = Vec<usize>;

/// All maximal d-rigid sets, each sorted, in lexicographic order.
pub fn d_rigid_cliques(table: &ExtTable) -> Vec<CandidateSet> {
    let vertices = table.rigid_vertices();
    let k = table.modules().len();
    let mut adjacent = vec![vec![false; k]; k];
    for &x in &vertices {
        for &y in &vertices {
            adjacent[x][y] = x != y && table.compatible(x, y);
        }
    }
    let mut out = Vec::new();
    bron_kerbosch(&adjacent, &mut Vec::new(), vertices, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

/// Bron–Kerbosch with pivoting. The pivot is the candidate with the most
/// neighbours in P (lowest index on ties), so the output order is fixed.
fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: &mut Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<CandidateSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| {
            (
                p.iter().filter(|&&v| adj[u][v]).count(),
                std::cmp::Reverse(u),
            )
        })
        .expect("P is nonempty");
    let branch: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in branch {
        r.push(v);
        let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
        let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Does `U` equal both of its perpendicular categories?
pub fn is_dct(table: &ExtTable, u: &[usize]) -> Result<bool> {
    let k = table.modules().len();
    if let Some(&bad) = u.iter().find(|&&i| i >= k) {
        return Err(Error::input(format!("index {bad} out of range")));
    }
    for &a in u {
        for &b in u {
            if !table.vanishes(a, b) {
                return Err(Error::input(format!(
                    "candidate set is not d-rigid: Ext({}, {}) != 0",
                    table.modules()[a],
                    table.modules()[b]
                )));
            }
        }
    }
    let member = |x: usize| u.contains(&x);
    let right_perp_inside = (0..k)
        .filter(|&x| u.iter().all(|&a| table.vanishes(a, x)))
        .all(member);
    let left_perp_inside = (0..k)
        .filter(|&x| u.iter().all(|&a| table.vanishes(x, a)))
        .all(member);
    Ok(right_perp_inside && left_perp_inside)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForceResult {
    pub n: usize,
    pub loewy: usize,
    pub d: usize,
    pub drf: bool,
    /// First d-cluster-tilting set in clique order.
    pub witness: Option<Vec<NakModule>>,
    /// Number of basic d-cluster-tilting modules.
    pub count: usize,
}

/// Every basic d-cluster-tilting set, as sorted index lists.
pub fn all_dct_indices(table: &ExtTable) -> Vec<CandidateSet> {
    d_rigid_cliques(table)
        .into_iter()
        .filter(|c| is_dct(table, c).expect("cliques are rigid"))
        .collect()
}

pub fn all_dct(n: usize, loewy: usize, d: usize) -> Result<Vec<Vec<NakModule>>> {
    let engine = NakEngine::new(NakAlgebra::new(n, loewy)?);
    let table = ExtTable::build(&engine, d)?;
    Ok(all_dct_indices(&table)
        .into_iter()
        .map(|c| c.into_iter().map(|i| table.modules()[i]).collect())
        .collect())
}

pub fn is_drf_bruteforce(n: usize, loewy: usize, d: usize) -> Result<BruteForceResult> {
    let engine = NakEngine::new(NakAlgebra::new(n, loewy)?);
    bruteforce_with(&engine, d)
}

/// Brute force over a prepared engine, so one engine can serve several d.
pub fn bruteforce_with(engine: &NakEngine, d: usize) -> Result<BruteForceResult> {
    let table = ExtTable::build(engine, d)?;
    let sets = all_dct_indices(&table);
    let alg = engine.algebra();
    Ok(BruteForceResult {
        n: alg.n,
        loewy: alg.loewy,
        d,
        drf: !sets.is_empty(),
        witness: sets
            .first()
            .map(|c| c.iter().map(|&i| table.modules()[i]).collect()),
        count: sets.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(top: usize, len: usize) -> NakModule {
        NakModule::new(top, len)
    }

    fn table(n: usize, l: usize, d: usize) -> ExtTable {
        ExtTable::build(&NakEngine::new(NakAlgebra::new(n, l).unwrap()), d).unwrap()
    }

    fn named(t: &ExtTable, set: &[usize]) -> Vec<NakModule> {
        set.iter().map(|&i| t.modules()[i]).collect()
    }

    #[test]
    fn ext_table_examples() {
        let t = table(2, 2, 2);
        assert_eq!(
            t.nonzero_entries(),
            vec![(m(0, 1), m(1, 1), 1, 1), (m(1, 1), m(0, 1), 1, 1)]
        );
        assert_eq!(
            table(1, 2, 2).nonzero_entries(),
            vec![(m(0, 1), m(0, 1), 1, 1)]
        );
        assert!(table(3, 3, 1).nonzero_entries().is_empty());
        assert!(ExtTable::build(&NakEngine::new(NakAlgebra::new(1, 2).unwrap()), 0).is_err());
    }

    #[test]
    fn clique_examples() {
        let t = table(2, 2, 2);
        let cliques: Vec<_> = d_rigid_cliques(&t).iter().map(|c| named(&t, c)).collect();
        assert_eq!(
            cliques,
            vec![
                vec![m(0, 1), m(0, 2), m(1, 2)],
                vec![m(0, 2), m(1, 1), m(1, 2)]
            ]
        );
        let t = table(1, 2, 2);
        let cliques: Vec<_> = d_rigid_cliques(&t).iter().map(|c| named(&t, c)).collect();
        assert_eq!(cliques, vec![vec![m(0, 2)]]);
        let t = table(2, 3, 1);
        assert_eq!(d_rigid_cliques(&t), vec![(0..6).collect::<Vec<_>>()]);
    }

    #[test]
    fn dct_examples() {
        let t = table(2, 2, 2);
        let idx = |x| t.algebra().index_of(x);
        assert!(is_dct(&t, &[idx(m(0, 1)), idx(m(0, 2)), idx(m(1, 2))]).unwrap());
        assert!(!is_dct(&t, &[idx(m(0, 2)), idx(m(1, 2))]).unwrap());
        assert!(is_dct(&t, &[idx(m(0, 1)), idx(m(1, 1))]).is_err());
        let t = table(3, 2, 1);
        assert!(is_dct(&t, &(0..6).collect::<Vec<_>>()).unwrap());
    }

    #[test]
    fn bruteforce_examples() {
        let r = is_drf_bruteforce(2, 2, 2).unwrap();
        assert!(r.drf);
        assert_eq!(r.witness, Some(vec![m(0, 1), m(0, 2), m(1, 2)]));
        assert_eq!(r.count, 2);
        let r = is_drf_bruteforce(1, 2, 2).unwrap();
        assert!(!r.drf && r.witness.is_none() && r.count == 0);
        assert!(is_drf_bruteforce(4, 3, 3).unwrap().drf);
        assert_eq!(all_dct(2, 2, 2).unwrap().len(), 2);
        assert!(all_dct(1, 2, 2).unwrap().is_empty());
        for n in 1..=3 {
            assert_eq!(
                all_dct(n, 1, 3).unwrap(),
                vec![(0..n).map(|a| m(a, 1)).collect::<Vec<_>>()]
            );
        }
    }

    #[test]
    fn handmade_table_search() {
        // Λ(1,2), d = 2, but pretend S is rigid: then {S, P} is 2-CT.
        let alg = NakAlgebra::new(1, 2).unwrap();
        let t = ExtTable::from_values(alg, 2, vec![0, 0, 0, 0]).unwrap();
        assert_eq!(all_dct_indices(&t), vec![vec![0, 1]]);
        assert!(ExtTable::from_values(alg, 2, vec![0]).is_err());
    }
}
