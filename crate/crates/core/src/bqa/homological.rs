//! Hom spaces, projective covers, syzygies and Ext by exact linear algebra.

use num_traits::Zero;

use super::representation::{Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat};

fn check_same(x: &Representation, y: &Representation) -> Result<()> {
    if x.same_algebra(y) {
        Ok(())
    } else {
        Err(Error::input("modules over different algebras"))
    }
}

/// Basis of Hom(X, Y): the kernel of the stacked intertwiner equations
/// `f_t X_a - Y_a f_s = 0`, one equation block per arrow.
pub fn hom(x: &Representation, y: &Representation) -> Result<Vec<Morphism>> {
    check_same(x, y)?;
    let (dx, dy) = (x.dims(), y.dims());
    let nv = dx.len();
    let mut offset = Vec::with_capacity(nv + 1);
    offset.push(0);
    for v in 0..nv {
        offset.push(offset[v] + dx[v] * dy[v]);
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let var = |v: usize, i: usize, k: usize| offset[v] + i * dx[v] + k;

    let arrows = x.algebra().quiver().arrows();
    let eq_count: usize = arrows.iter().map(|a| dy[a.target] * dx[a.source]).sum();
    let mut sys = Mat::zeros(eq_count, unknowns);
    let mut row = 0;
    for (ai, a) in arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (xa, ya) = (x.map(ai), y.map(ai));
        for i in 0..dy[t] {
            for j in 0..dx[s] {
                for k in 0..dx[t] {
                    let c = &xa[(k, j)];
                    if !c.is_zero() {
                        sys[(row, var(t, i, k))] += c;
                    }
                }
                for k in 0..dy[s] {
                    let c = &ya[(i, k)];
                    if !c.is_zero() {
                        sys[(row, var(s, k, j))] -= c;
                    }
                }
                row += 1;
            }
        }
    }

    Ok(sys
        .kernel()
        .into_iter()
        .map(|v| Morphism {
            blocks: (0..nv)
                .map(|w| {
                    Mat::from_entries(dy[w], dx[w], v[offset[w]..offset[w + 1]].to_vec())
                        .expect("block size")
                })
                .collect(),
        })
        .collect())
}

pub fn hom_dim(x: &Representation, y: &Representation) -> Result<usize> {
    Ok(hom(x, y)?.len())
}

/// Rank of a family of morphisms viewed as vectors.
fn span_rank(maps: &[Morphism]) -> usize {
    let Some(first) = maps.first() else {
        return 0;
    };
    let cols = first.flatten().len();
    let rows = maps.iter().map(Morphism::flatten).collect();
    Mat::from_rows(cols, rows)
        .expect("uniform morphism shape")
        .rank()
}

/// A projective cover `P -> X` with `P` written as a direct sum of
/// indecomposable projectives, one per top basis vector.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub projective: Representation,
    pub cover: Morphism,
    /// Vertex of each indecomposable summand, in order.
    pub summands: Vec<usize>,
}

pub fn proj_cover(x: &Representation) -> Result<ProjectiveCover> {
    let algebra = x.algebra().clone();
    let nv = algebra.vertex_count();
    let mut generators: Vec<(usize, Vec<Rat>)> = Vec::new();
    for v in 0..nv {
        let dim = x.dims()[v];
        if dim == 0 {
            continue;
        }
        // Extend a basis of the radical part by standard vectors.
        let rad = x.radical_span(v);
        let aug = rad.hstack(&Mat::identity(dim));
        let (_, pivots) = aug.rref();
        for p in pivots.into_iter().filter(|&p| p >= rad.cols()) {
            let mut e = vec![Rat::zero(); dim];
            e[p - rad.cols()] = Rat::from_integer(1.into());
            generators.push((v, e));
        }
    }

    let mut projective = Representation::zero(algebra.clone());
    let mut columns: Vec<Vec<Vec<Rat>>> = vec![Vec::new(); nv];
    let mut summands = Vec::with_capacity(generators.len());
    for (v, gen) in &generators {
        let pv = Representation::projective(algebra.clone(), *v)?;
        projective = projective.direct_sum(&pv)?;
        summands.push(*v);
        for (w, cols) in columns.iter_mut().enumerate() {
            for &b in algebra.basis_between(*v, w) {
                let path = &algebra.basis()[b];
                cols.push(x.path_map(path.arrows(), *v).mul_vec(gen));
            }
        }
    }
    let blocks = columns
        .into_iter()
        .enumerate()
        .map(|(w, cols)| {
            let n = cols.len();
            Mat::from_rows(x.dims()[w], cols)
                .map(|m| m.transpose())
                .unwrap_or_else(|_| Mat::zeros(x.dims()[w], n))
        })
        .collect();
    let cover = Morphism { blocks };
    debug_assert!(projective.is_morphism_to(x, &cover));
    Ok(ProjectiveCover {
        projective,
        cover,
        summands,
    })
}

/// Kernel of a morphism as a module, with its inclusion.
pub fn kernel(f: &Morphism, source: &Representation) -> (Representation, Morphism) {
    let algebra = source.algebra().clone();
    let inclusions: Vec<Mat> = f
        .blocks
        .iter()
        .zip(source.dims())
        .map(|(b, &d)| {
            let k = b.kernel();
            let n = k.len();
            Mat::from_rows(d, k)
                .map(|m| m.transpose())
                .unwrap_or_else(|_| Mat::zeros(d, n))
        })
        .collect();
    let dims: Vec<usize> = inclusions.iter().map(Mat::cols).collect();
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let image = source.map(ai).matmul(&inclusions[a.source]);
            let target = &inclusions[a.target];
            let mut m = Mat::zeros(dims[a.target], dims[a.source]);
            for c in 0..image.cols() {
                let col: Vec<Rat> = (0..image.rows()).map(|r| image[(r, c)].clone()).collect();
                let x = target
                    .solve(&col)
                    .expect("shapes agree")
                    .expect("kernel is a submodule");
                for (r, v) in x.into_iter().enumerate() {
                    m[(r, c)] = v;
                }
            }
            m
        })
        .collect();
    (
        Representation::from_parts(algebra, dims, maps),
        Morphism { blocks: inclusions },
    )
}

/// Heller syzygy: the kernel of the projective cover.
pub fn syzygy(x: &Representation) -> Result<Representation> {
    let pc = proj_cover(x)?;
    Ok(kernel(&pc.cover, &pc.projective).0)
}

/// One step of a minimal projective resolution.
#[derive(Clone, Debug)]
struct Stage {
    cover: ProjectiveCover,
    // kernel of the cover (next module) and its inclusion into the projective
    next: Representation,
    inclusion: Morphism,
}

/// A minimal projective resolution of a module, extended on demand.
#[derive(Clone, Debug)]
pub struct Resolution {
    module: Representation,
    stages: Vec<Stage>,
}

impl Resolution {
    pub fn new(module: Representation) -> Self {
        Resolution {
            module,
            stages: Vec::new(),
        }
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    /// Makes stages `0..=k` available.
    fn ensure(&mut self, k: usize) -> Result<()> {
        while self.stages.len() <= k {
            let current = self.stages.last().map_or(&self.module, |s| &s.next).clone();
            let cover = proj_cover(&current)?;
            let (next, inclusion) = kernel(&cover.cover, &cover.projective);
            self.stages.push(Stage {
                cover,
                next,
                inclusion,
            });
        }
        Ok(())
    }

    /// The k-th projective `P_k`.
    pub fn projective(&mut self, k: usize) -> Result<&Representation> {
        self.ensure(k)?;
        Ok(&self.stages[k].cover.projective)
    }

    /// Ω^k of the module (Ω^0 is the module itself).
    pub fn syzygy(&mut self, k: usize) -> Result<&Representation> {
        if k == 0 {
            return Ok(&self.module);
        }
        self.ensure(k - 1)?;
        Ok(&self.stages[k - 1].next)
    }

    /// `d_k : P_k -> P_{k-1}` for k ≥ 1.
    fn differential(&mut self, k: usize) -> Result<Morphism> {
        self.ensure(k)?;
        Ok(self.stages[k - 1]
            .inclusion
            .compose(&self.stages[k].cover.cover))
    }

    /// dim Ext^i(module, Y) as the i-th cohomology of Hom(P_•, Y).
    pub fn ext_dim(&mut self, y: &Representation, i: usize) -> Result<usize> {
        if i == 0 {
            return Err(Error::input("Ext degree must be at least 1"));
        }
        check_same(&self.module, y)?;
        self.ensure(i + 1)?;
        let homs = hom(&self.stages[i].cover.projective, y)?;
        let out_rank = {
            let d = self.differential(i + 1)?;
            let images: Vec<Morphism> = homs.iter().map(|f| f.compose(&d)).collect();
            span_rank(&images)
        };
        let in_rank = {
            let d = self.differential(i)?;
            let prev = hom(&self.stages[i - 1].cover.projective, y)?;
            let images: Vec<Morphism> = prev.iter().map(|f| f.compose(&d)).collect();
            span_rank(&images)
        };
        Ok(homs.len() - out_rank - in_rank)
    }
}

/// dim Ext^i(X, Y) by the projective-resolution route.
pub fn ext_dim(x: &Representation, y: &Representation, i: usize) -> Result<usize> {
    Resolution::new(x.clone()).ext_dim(y, i)
}

/// Dimension of the stable Hom space: Hom(X, Y) modulo the maps factoring
/// through the projective cover of Y.
pub fn stable_hom_dim(x: &Representation, y: &Representation) -> Result<usize> {
    check_same(x, y)?;
    let homs = hom(x, y)?;
    if homs.is_empty() {
        return Ok(0);
    }
    let pc = proj_cover(y)?;
    let through: Vec<Morphism> = hom(x, &pc.projective)?
        .iter()
        .map(|f| pc.cover.compose(f))
        .collect();
    Ok(homs.len() - span_rank(&through))
}

/// Krull–Schmidt test via the endomorphism ring.
///
/// The radical of End(X) is the kernel of the trace form `(f, g) ↦ tr(fg)`
/// (characteristic zero). If End/rad is one-dimensional, X is indecomposable.
/// Otherwise X is declared decomposable when some endomorphism among the basis
/// elements and their pairwise sums and differences is neither nilpotent nor
/// invertible (Fitting). If no such element is found, End/rad is treated as a
/// division algebra.
pub fn is_indecomposable(x: &Representation) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::input("the zero module is not indecomposable"));
    }
    let end: Vec<Mat> = hom(x, x)?.iter().map(Morphism::as_block_diagonal).collect();
    let k = end.len();
    let mut form = Mat::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = end[i].matmul(&end[j]).trace();
            form[(i, j)] = t.clone();
            form[(j, i)] = t;
        }
    }
    if form.rank() == 1 {
        return Ok(true);
    }
    let splits = |m: &Mat| !m.is_nilpotent() && !m.is_invertible();
    if end.iter().any(splits) {
        return Ok(false);
    }
    for i in 0..k {
        for j in i + 1..k {
            if splits(&(&end[i] + &end[j])) || splits(&(&end[i] - &end[j])) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
