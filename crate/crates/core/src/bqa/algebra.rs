//! The finite-dimensional algebra kQ/I as a path-residue basis.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::quiver::{Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat};

/// Sparse coordinates in the algebra basis.
pub type Coords = Vec<(usize, Rat)>;

#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    nilpotency: usize,
    basis: Vec<Path>,
    // basis_between[u][v]: indices of basis elements from u to v
    basis_between: Vec<Vec<Vec<usize>>>,
    normal_forms: HashMap<Path, Coords>,
    // right_arrow[b][a]: normal form of b·a
    right_arrow: Vec<Vec<Coords>>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver
            && self.relations == other.relations
            && self.nilpotency == other.nilpotency
    }
}

impl BoundQuiverAlgebra {
    /// Builds kQ/I where I is generated by `relations` and all paths of
    /// length `nilpotency`.
    ///
    /// Residues are computed in the truncation by paths of length
    /// `nilpotency + 1`; if some path of length `nilpotency` survives, the
    /// relations do not force rad^L = 0 and the build fails.
    pub fn build(quiver: Quiver, relations: Vec<Relation>, nilpotency: usize) -> Result<Self> {
        if nilpotency < 2 {
            return Err(Error::input(format!("nilpotency bound {nilpotency} < 2")));
        }
        let trunc = nilpotency + 1;
        let nv = quiver.vertex_count();
        let paths = quiver.paths_shorter_than(trunc);

        let mut by_target: Vec<Vec<&Path>> = vec![Vec::new(); nv];
        let mut by_source: Vec<Vec<&Path>> = vec![Vec::new(); nv];
        for p in &paths {
            by_target[p.target()].push(p);
            by_source[p.source()].push(p);
        }

        // Column order per block: longest paths first so pivots land on them.
        let mut block_cols: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        for p in &paths {
            block_cols
                .entry((p.source(), p.target()))
                .or_default()
                .push(p.clone());
        }
        for cols in block_cols.values_mut() {
            cols.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        }

        let mut generators: BTreeMap<(usize, usize), Vec<Vec<(Path, Rat)>>> = BTreeMap::new();
        for rel in &relations {
            for p in &by_target[rel.source()] {
                for q in &by_source[rel.target()] {
                    if p.len() + rel.min_len() + q.len() >= trunc {
                        continue;
                    }
                    let terms: Vec<(Path, Rat)> = rel
                        .terms()
                        .iter()
                        .filter_map(|(c, t)| {
                            let full = p.concat(t)?.concat(q)?;
                            (full.len() < trunc).then(|| (full, c.clone()))
                        })
                        .collect();
                    if !terms.is_empty() {
                        generators
                            .entry((p.source(), q.target()))
                            .or_default()
                            .push(terms);
                    }
                }
            }
        }

        let mut basis_paths = Vec::new();
        // (block key, pivot path, row over block columns)
        let mut reductions: Vec<(Path, Vec<(Path, Rat)>)> = Vec::new();
        for (key, cols) in &block_cols {
            let col_of: HashMap<&Path, usize> =
                cols.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let gens = generators.get(key).map(Vec::as_slice).unwrap_or(&[]);
            let mut m = Mat::zeros(gens.len(), cols.len());
            for (r, g) in gens.iter().enumerate() {
                for (p, c) in g {
                    m[(r, col_of[p])] += c;
                }
            }
            let (rref, pivots) = m.rref();
            let mut is_pivot = vec![false; cols.len()];
            for &pc in &pivots {
                is_pivot[pc] = true;
            }
            for (i, p) in cols.iter().enumerate() {
                if !is_pivot[i] {
                    basis_paths.push(p.clone());
                }
            }
            for (r, &pc) in pivots.iter().enumerate() {
                let rest = (0..cols.len())
                    .filter(|&j| !is_pivot[j] && !rref[(r, j)].is_zero())
                    .map(|j| (cols[j].clone(), -rref[(r, j)].clone()))
                    .collect();
                reductions.push((cols[pc].clone(), rest));
            }
        }

        basis_paths.sort_by(|a, b| {
            (a.source(), a.target())
                .cmp(&(b.source(), b.target()))
                .then_with(|| a.cmp(b))
        });
        let index_of: HashMap<&Path, usize> = basis_paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();

        let mut normal_forms: HashMap<Path, Coords> = HashMap::with_capacity(paths.len());
        for (i, p) in basis_paths.iter().enumerate() {
            normal_forms.insert(p.clone(), vec![(i, Rat::from_integer(1.into()))]);
        }
        for (p, rest) in reductions {
            let mut coords: Coords = rest.into_iter().map(|(b, c)| (index_of[&b], c)).collect();
            coords.sort_by_key(|(i, _)| *i);
            normal_forms.insert(p, coords);
        }

        if let Some(p) = paths
            .iter()
            .find(|p| p.len() == nilpotency && !normal_forms[*p].is_empty())
        {
            return Err(Error::input(format!(
                "rad^{nilpotency} != 0: path {} survives the relations",
                p.display(&quiver)
            )));
        }

        let mut basis_between = vec![vec![Vec::new(); nv]; nv];
        for (i, p) in basis_paths.iter().enumerate() {
            basis_between[p.source()][p.target()].push(i);
        }

        let na = quiver.arrows().len();
        let right_arrow = basis_paths
            .iter()
            .map(|b| {
                (0..na)
                    .map(|a| match b.clone().then(&quiver, a) {
                        Some(ba) if ba.len() < trunc => normal_forms[&ba].clone(),
                        _ => Vec::new(),
                    })
                    .collect()
            })
            .collect();

        Ok(BoundQuiverAlgebra {
            quiver,
            relations,
            nilpotency,
            basis: basis_paths,
            basis_between,
            normal_forms,
            right_arrow,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Basis indices of e_u·A·e_v (paths from `u` to `v`).
    pub fn basis_between(&self, u: usize, v: usize) -> &[usize] {
        &self.basis_between[u][v]
    }

    /// Normal form of an arbitrary path; zero beyond the truncation.
    pub fn normal_form(&self, p: &Path) -> Coords {
        self.normal_forms.get(p).cloned().unwrap_or_default()
    }

    pub fn right_arrow_action(&self, basis_elem: usize, arrow: usize) -> &Coords {
        &self.right_arrow[basis_elem][arrow]
    }

    /// Product of two basis elements.
    pub fn multiply(&self, x: usize, y: usize) -> Coords {
        match self.basis[x].concat(&self.basis[y]) {
            Some(p) => self.normal_form(&p),
            None => Vec::new(),
        }
    }

    /// Largest length of a basis path; rad^(this + 1) = 0.
    pub fn loewy_length(&self) -> usize {
        self.basis.iter().map(Path::len).max().unwrap_or(0) + 1
    }
}

#[cfg(test)]
mod tests {
    use super::super::quiver::{Arrow, RelationTerm};
    use super::*;
    use crate::exactlin::rat;

    fn cyclic(n: usize) -> Quiver {
        let arrows = (0..n)
            .map(|i| Arrow {
                name: format!("a{i}"),
                source: i,
                target: (i + 1) % n,
            })
            .collect();
        Quiver::new(n, arrows).unwrap()
    }

    fn all_paths_of_len(q: &Quiver, len: usize) -> Vec<Relation> {
        q.paths_shorter_than(len + 1)
            .into_iter()
            .filter(|p| p.len() == len)
            .map(|p| {
                let names: Vec<&str> = p
                    .arrows()
                    .iter()
                    .map(|&a| q.arrow(a).name.as_str())
                    .collect();
                Relation::monomial(q, &names).unwrap()
            })
            .collect()
    }

    #[test]
    fn cyclic_radical_square_zero() {
        let q = cyclic(2);
        let rels = all_paths_of_len(&q, 2);
        let a = BoundQuiverAlgebra::build(q, rels, 2).unwrap();
        assert_eq!(a.dim(), 4);
    }

    #[test]
    fn linear_a3_with_zero_relation() {
        let q = Quiver::new(
            3,
            vec![
                Arrow {
                    name: "a".into(),
                    source: 0,
                    target: 1,
                },
                Arrow {
                    name: "b".into(),
                    source: 1,
                    target: 2,
                },
            ],
        )
        .unwrap();
        let rel = Relation::monomial(&q, &["a", "b"]).unwrap();
        let a = BoundQuiverAlgebra::build(q, vec![rel], 3).unwrap();
        assert_eq!(a.dim(), 5);
    }

    #[test]
    fn base_field() {
        let q = Quiver::new(1, vec![]).unwrap();
        let a = BoundQuiverAlgebra::build(q, vec![], 2).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn nilpotency_errors() {
        let q = Quiver::new(1, vec![]).unwrap();
        assert!(BoundQuiverAlgebra::build(q.clone(), vec![], 1).is_err());
        // a loop with a^3 = 0 does not have rad^2 = 0
        let q = cyclic(1);
        let rel = Relation::monomial(&q, &["a0", "a0", "a0"]).unwrap();
        assert!(BoundQuiverAlgebra::build(q.clone(), vec![rel.clone()], 2).is_err());
        assert_eq!(BoundQuiverAlgebra::build(q, vec![rel], 3).unwrap().dim(), 3);
    }

    #[test]
    fn commutativity_relation_identifies_paths() {
        // square 0->1->3, 0->2->3 with ab - cd = 0: paths ab and cd coincide
        let q = Quiver::new(
            4,
            vec![
                Arrow {
                    name: "a".into(),
                    source: 0,
                    target: 1,
                },
                Arrow {
                    name: "b".into(),
                    source: 1,
                    target: 3,
                },
                Arrow {
                    name: "c".into(),
                    source: 0,
                    target: 2,
                },
                Arrow {
                    name: "d".into(),
                    source: 2,
                    target: 3,
                },
            ],
        )
        .unwrap();
        let rel = Relation::new(
            &q,
            &[
                RelationTerm {
                    coef: rat(1),
                    path: vec!["a".into(), "b".into()],
                },
                RelationTerm {
                    coef: rat(-1),
                    path: vec!["c".into(), "d".into()],
                },
            ],
        )
        .unwrap();
        let a = BoundQuiverAlgebra::build(q, vec![rel], 3).unwrap();
        // 4 trivial + 4 arrows + 1 length-two residue
        assert_eq!(a.dim(), 9);
        assert_eq!(a.basis_between(0, 3).len(), 1);
    }

    #[test]
    fn multiplication_is_associative() {
        for n in 1..=3 {
            for l in 2..=4 {
                let q = cyclic(n);
                let rels = all_paths_of_len(&q, l);
                let a = BoundQuiverAlgebra::build(q, rels, l).unwrap();
                assert_eq!(a.dim(), n * l);
                let mul = |x: &Coords, y: &Coords| -> Coords {
                    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                    for (i, c) in x {
                        for (j, d) in y {
                            for (k, e) in a.multiply(*i, *j) {
                                *acc.entry(k).or_insert_with(Rat::zero) += c * d * e;
                            }
                        }
                    }
                    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
                };
                let one = |i: usize| vec![(i, rat(1))];
                for x in 0..a.dim() {
                    for y in 0..a.dim() {
                        for z in 0..a.dim() {
                            let left = mul(&mul(&one(x), &one(y)), &one(z));
                            let right = mul(&one(x), &mul(&one(y), &one(z)));
                            assert_eq!(left, right);
                        }
                    }
                }
            }
        }
    }
}
