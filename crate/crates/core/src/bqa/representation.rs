use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat};

/// A right module given by one vector space per vertex and one matrix per
/// arrow; the matrix of `a: s -> t` has shape `dims[t] x dims[s]`.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.dims == other.dims && self.maps == other.maps
    }
}

/// A module homomorphism: one matrix per vertex, `dims_Y[v] x dims_X[v]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism {
    pub blocks: Vec<Mat>,
}

impl Morphism {
    pub fn zero(x: &Representation, y: &Representation) -> Self {
        Morphism {
            blocks: x
                .dims
                .iter()
                .zip(&y.dims)
                .map(|(&dx, &dy)| Mat::zeros(dy, dx))
                .collect(),
        }
    }

    pub fn identity(x: &Representation) -> Self {
        Morphism {
            blocks: x.dims.iter().map(|&d| Mat::identity(d)).collect(),
        }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Morphism) -> Morphism {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(&first.blocks)
                .map(|(g, f)| g.matmul(f))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    /// All entries, block after block, row-major.
    pub fn flatten(&self) -> Vec<Rat> {
        self.blocks
            .iter()
            .flat_map(|b| b.entries().iter().cloned())
            .collect()
    }

    /// The whole map as one block-diagonal matrix.
    pub fn as_block_diagonal(&self) -> Mat {
        self.blocks
            .iter()
            .fold(Mat::zeros(0, 0), |acc, b| acc.direct_sum(b))
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }
}

impl Representation {
    pub fn new(algebra: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::input(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::input(format!(
                "{} maps for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if (m.rows(), m.cols()) != (dims[a.target], dims[a.source]) {
                return Err(Error::input(format!(
                    "map of arrow {} is {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        let rep = Representation {
            algebra,
            dims,
            maps,
        };
        if !rep.satisfies_relations() {
            return Err(Error::input("representation violates a relation"));
        }
        Ok(rep)
    }

    /// Skips validation; for modules built from other valid modules.
    pub(super) fn from_parts(
        algebra: Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        maps: Vec<Mat>,
    ) -> Self {
        Representation {
            algebra,
            dims,
            maps,
        }
    }

    pub fn zero(algebra: Arc<BoundQuiverAlgebra>) -> Self {
        let dims = vec![0; algebra.vertex_count()];
        let maps = vec![Mat::zeros(0, 0); algebra.quiver().arrows().len()];
        Representation {
            algebra,
            dims,
            maps,
        }
    }

    pub fn simple(algebra: Arc<BoundQuiverAlgebra>, v: usize) -> Result<Self> {
        if v >= algebra.vertex_count() {
            return Err(Error::input(format!("vertex {v} out of range")));
        }
        let mut dims = vec![0; algebra.vertex_count()];
        dims[v] = 1;
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Mat::zeros(dims[a.target], dims[a.source]))
            .collect();
        Ok(Representation {
            algebra,
            dims,
            maps,
        })
    }

    /// The indecomposable projective `e_v A`: basis paths starting at `v`,
    /// with arrows acting by right multiplication.
    pub fn projective(algebra: Arc<BoundQuiverAlgebra>, v: usize) -> Result<Self> {
        if v >= algebra.vertex_count() {
            return Err(Error::input(format!("vertex {v} out of range")));
        }
        let nv = algebra.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|w| algebra.basis_between(v, w).len()).collect();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let src = algebra.basis_between(v, a.source);
                let dst = algebra.basis_between(v, a.target);
                let mut m = Mat::zeros(dst.len(), src.len());
                for (c, &b) in src.iter().enumerate() {
                    for (k, coef) in algebra.right_arrow_action(b, ai) {
                        let r = dst
                            .iter()
                            .position(|x| x == k)
                            .expect("product stays in e_v A");
                        m[(r, c)] = coef.clone();
                    }
                }
                m
            })
            .collect();
        Ok(Representation {
            algebra,
            dims,
            maps,
        })
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Mat {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    /// Matrix of a path, `dims[target] x dims[source]`.
    pub fn path_map(&self, arrows: &[usize], source: usize) -> Mat {
        let mut m = Mat::identity(self.dims[source]);
        for &a in arrows {
            m = self.maps[a].matmul(&m);
        }
        m
    }

    pub fn satisfies_relations(&self) -> bool {
        self.algebra.relations().iter().all(|rel| {
            let (s, t) = (rel.source(), rel.target());
            let total = rel
                .terms()
                .iter()
                .fold(Mat::zeros(self.dims[t], self.dims[s]), |acc, (c, p)| {
                    &acc + &self.path_map(p.arrows(), s).scale(c)
                });
            total.is_zero()
        }) && self.paths_of_nilpotency_vanish()
    }

    fn paths_of_nilpotency_vanish(&self) -> bool {
        let q = self.algebra.quiver();
        let l = self.algebra.nilpotency();
        q.paths_shorter_than(l + 1)
            .iter()
            .filter(|p| p.len() == l)
            .all(|p| self.path_map(p.arrows(), p.source()).is_zero())
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !self.same_algebra(other) {
            return Err(Error::input("direct sum over different algebras"));
        }
        Ok(Representation {
            algebra: self.algebra.clone(),
            dims: self
                .dims
                .iter()
                .zip(&other.dims)
                .map(|(a, b)| a + b)
                .collect(),
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        })
    }

    /// Dimension of the top `X / X·rad` at each vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|v| self.dims[v] - self.radical_span(v).rank())
            .collect()
    }

    /// Columns spanning `(X·rad)_v`: images of the arrows ending at `v`.
    pub(crate) fn radical_span(&self, v: usize) -> Mat {
        self.algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.target == v)
            .fold(Mat::zeros(self.dims[v], 0), |acc, (i, _)| {
                acc.hstack(&self.maps[i])
            })
    }

    /// Checks the intertwining equations `f_t X_a = Y_a f_s`.
    pub fn is_morphism_to(&self, target: &Representation, f: &Morphism) -> bool {
        self.algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(i, a)| {
                f.blocks[a.target].matmul(&self.maps[i])
                    == target.maps[i].matmul(&f.blocks[a.source])
            })
    }

    pub fn to_json(&self) -> RepresentationJson {
        let q = self.algebra.quiver();
        RepresentationJson {
            dims: self.dims.clone(),
            maps: q
                .arrows()
                .iter()
                .zip(&self.maps)
                .map(|(a, m)| (a.name.clone(), m.clone()))
                .collect(),
        }
    }

    pub fn from_json(algebra: Arc<BoundQuiverAlgebra>, json: RepresentationJson) -> Result<Self> {
        let q = algebra.quiver();
        if json.dims.len() != q.vertex_count() {
            return Err(Error::input(format!(
                "{} dimensions for {} vertices",
                json.dims.len(),
                q.vertex_count()
            )));
        }
        for name in json.maps.keys() {
            if q.arrow_index(name).is_none() {
                return Err(Error::input(format!("unknown arrow {name}")));
            }
        }
        let dims = json.dims;
        let mut given = json.maps;
        let maps = q
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (dims[a.target], dims[a.source]);
                match given.remove(&a.name) {
                    Some(m) => m.reshaped(r, c),
                    None if r * c == 0 => Ok(Mat::zeros(r, c)),
                    None => Err(Error::input(format!("missing map for arrow {}", a.name))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(algebra, dims, maps)
    }
}

/// `{"dims":[...],"maps":{"arrow":[["p/q",...],...]}}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dims: Vec<usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Mat>,
}
