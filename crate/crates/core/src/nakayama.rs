//! Self-injective Nakayama algebras Λ(n, ℓ) = kÃ_n / rad^ℓ.
//!
//! The cyclic quiver has arrows `a_i : i -> i+1 (mod n)`. An indecomposable
//! module is an interval `M(a, t)`: top `S_a`, composition factors
//! `S_a, S_{a+1}, …, S_{a+t-1}`, length `1 ≤ t ≤ ℓ`. The closed formulas for
//! Ω, ν and τ below are stated for this orientation; the engine-side
//! functions at the bottom of the file recompute them from the generic
//! bound-quiver engine so they can be checked rather than trusted.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::bqa::{self, Arrow, BoundQuiverAlgebra, Quiver, Relation, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{rat, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NakAlgebra {
    pub n: usize,
    pub loewy: usize,
}

/// The interval module `M(top, len)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NakModule {
    pub top: usize,
    pub len: usize,
}

impl fmt::Display for NakModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.top, self.len)
    }
}

impl NakModule {
    pub fn new(top: usize, len: usize) -> Self {
        NakModule { top, len }
    }
}

impl NakAlgebra {
    pub fn new(n: usize, loewy: usize) -> Result<Self> {
        if n == 0 || loewy == 0 {
            return Err(Error::input(format!(
                "Nakayama algebra needs n >= 1 and loewy >= 1, got ({n}, {loewy})"
            )));
        }
        Ok(NakAlgebra { n, loewy })
    }

    pub fn check_module(&self, m: NakModule) -> Result<()> {
        if m.top >= self.n || m.len == 0 || m.len > self.loewy {
            return Err(Error::input(format!("{m} is not a module over {self:?}")));
        }
        Ok(())
    }

    /// All `n·ℓ` indecomposables, ordered by `(top, len)`.
    pub fn indecomposables(&self) -> Vec<NakModule> {
        (0..self.n)
            .flat_map(|a| (1..=self.loewy).map(move |t| NakModule::new(a, t)))
            .collect()
    }

    /// Position of `m` in [`Self::indecomposables`].
    pub fn index_of(&self, m: NakModule) -> usize {
        m.top * self.loewy + (m.len - 1)
    }

    pub fn is_projective(&self, m: NakModule) -> bool {
        m.len == self.loewy
    }

    pub fn projective(&self, a: usize) -> NakModule {
        NakModule::new(a % self.n, self.loewy)
    }

    fn shift(&self, a: usize, by: isize) -> usize {
        (a as isize + by).rem_euclid(self.n as isize) as usize
    }

    /// Syzygy: kernel of `P_a -> M(a, t)`, i.e. `M(a+t, ℓ-t)`.
    pub fn omega(&self, m: NakModule) -> Option<NakModule> {
        if self.is_projective(m) {
            return None;
        }
        Some(NakModule::new(
            self.shift(m.top, m.len as isize),
            self.loewy - m.len,
        ))
    }

    /// Ω^k, or `None` once a projective is hit.
    pub fn omega_pow(&self, m: NakModule, k: usize) -> Option<NakModule> {
        (0..k).try_fold(m, |acc, _| self.omega(acc))
    }

    /// Nakayama functor on iso-classes: `M(a - ℓ + 1, t)`.
    pub fn nu(&self, m: NakModule) -> NakModule {
        NakModule::new(self.shift(m.top, 1 - self.loewy as isize), m.len)
    }

    /// Auslander–Reiten translate `Ω²ν`, which is `M(a+1, t)`.
    pub fn tau(&self, m: NakModule) -> Option<NakModule> {
        if self.is_projective(m) {
            return None;
        }
        Some(NakModule::new(self.shift(m.top, 1), m.len))
    }

    /// The algebra as a bound quiver algebra. For ℓ = 1 it is the semisimple
    /// algebra on `n` vertices without arrows.
    pub fn to_bound_quiver(&self) -> Arc<BoundQuiverAlgebra> {
        let n = self.n;
        if self.loewy == 1 {
            let q = Quiver::new(n, Vec::new()).expect("valid quiver");
            return Arc::new(BoundQuiverAlgebra::build(q, Vec::new(), 2).expect("semisimple"));
        }
        let arrows = (0..n)
            .map(|i| Arrow {
                name: format!("a{i}"),
                source: i,
                target: (i + 1) % n,
            })
            .collect();
        let q = Quiver::new(n, arrows).expect("valid quiver");
        let relations = (0..n)
            .map(|start| {
                let names: Vec<String> = (0..self.loewy)
                    .map(|j| format!("a{}", (start + j) % n))
                    .collect();
                let names: Vec<&str> = names.iter().map(String::as_str).collect();
                Relation::monomial(&q, &names).expect("cyclic path")
            })
            .collect();
        Arc::new(BoundQuiverAlgebra::build(q, relations, self.loewy).expect("Nakayama algebra"))
    }
}

/// Λ(n, ℓ) together with its engine realization and a lazily built table of
/// stable Hom dimensions between indecomposables.
#[derive(Debug)]
pub struct NakEngine {
    algebra: NakAlgebra,
    bound_quiver: Arc<BoundQuiverAlgebra>,
    modules: Vec<NakModule>,
    reps: Vec<Representation>,
    stable_hom: OnceLock<Vec<usize>>,
}

impl NakEngine {
    pub fn new(algebra: NakAlgebra) -> Self {
        let bound_quiver = algebra.to_bound_quiver();
        let modules = algebra.indecomposables();
        let reps = modules
            .iter()
            .map(|&m| interval_representation(&algebra, &bound_quiver, m))
            .collect();
        NakEngine {
            algebra,
            bound_quiver,
            modules,
            reps,
            stable_hom: OnceLock::new(),
        }
    }

    pub fn algebra(&self) -> NakAlgebra {
        self.algebra
    }

    pub fn bound_quiver(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.bound_quiver
    }

    pub fn modules(&self) -> &[NakModule] {
        &self.modules
    }

    pub fn to_representation(&self, m: NakModule) -> Result<Representation> {
        self.algebra.check_module(m)?;
        Ok(self.reps[self.algebra.index_of(m)].clone())
    }

    pub fn representation(&self, m: NakModule) -> &Representation {
        &self.reps[self.algebra.index_of(m)]
    }

    fn stable_table(&self) -> &[usize] {
        self.stable_hom.get_or_init(|| {
            let k = self.reps.len();
            let mut t = Vec::with_capacity(k * k);
            for x in &self.reps {
                for y in &self.reps {
                    t.push(bqa::stable_hom_dim(x, y).expect("same algebra"));
                }
            }
            t
        })
    }

    /// dim of the stable Hom space between two indecomposables, via the engine.
    pub fn stable_hom_dim(&self, x: NakModule, y: NakModule) -> usize {
        let k = self.modules.len();
        self.stable_table()[self.algebra.index_of(x) * k + self.algebra.index_of(y)]
    }

    /// dim Ext^i(X, Y) = dim stable Hom(Ω^i X, Y); zero once Ω^i X is projective.
    pub fn ext_dim_nak(&self, x: NakModule, y: NakModule, i: usize) -> Result<usize> {
        if i == 0 {
            return Err(Error::input("Ext degree must be at least 1"));
        }
        self.algebra.check_module(x)?;
        self.algebra.check_module(y)?;
        Ok(match self.algebra.omega_pow(x, i) {
            None => 0,
            Some(w) => self.stable_hom_dim(w, y),
        })
    }

    /// Recognizes an interval module among engine representations: the zero
    /// module gives `None`, a uniserial module with simple top `S_a` and total
    /// dimension `t` gives `M(a, t)`.
    pub fn identify(&self, rep: &Representation) -> Result<Option<NakModule>> {
        if rep.is_zero() {
            return Ok(None);
        }
        let top = rep.top_dims();
        let tops: Vec<usize> = (0..top.len()).filter(|&v| top[v] > 0).collect();
        if tops.len() != 1 || top[tops[0]] != 1 {
            return Err(Error::domain(format!(
                "module with top dimensions {top:?} is not uniserial"
            )));
        }
        let m = NakModule::new(tops[0], rep.total_dim());
        self.algebra.check_module(m)?;
        if self.representation(m).dims() != rep.dims() {
            return Err(Error::domain("dimension vector does not match an interval"));
        }
        Ok(Some(m))
    }

    /// Ω computed by the engine (kernel of the projective cover), then identified.
    pub fn engine_omega(&self, m: NakModule) -> Result<Option<NakModule>> {
        let syz = bqa::syzygy(&self.to_representation(m)?)?;
        self.identify(&syz)
    }

    /// The Nakayama permutation from the engine: `ν P_b` is the injective with
    /// socle `S_b`, i.e. the projective `P_c` with `Hom(S_b, P_c) ≠ 0`.
    /// Returns `c` for each `b`.
    pub fn engine_nakayama_permutation(&self) -> Result<Vec<usize>> {
        let alg = &self.bound_quiver;
        let projectives: Vec<Representation> = (0..self.algebra.n)
            .map(|c| Representation::projective(alg.clone(), c))
            .collect::<Result<_>>()?;
        (0..self.algebra.n)
            .map(|b| {
                let s = Representation::simple(alg.clone(), b)?;
                let hits: Vec<usize> = (0..self.algebra.n)
                    .filter(|&c| bqa::hom_dim(&s, &projectives[c]).is_ok_and(|d| d > 0))
                    .collect();
                match hits.as_slice() {
                    [c] => Ok(*c),
                    _ => Err(Error::domain(format!("socle S_{b} occurs in {hits:?}"))),
                }
            })
            .collect()
    }

    /// ν on all indecomposables from the engine permutation: ν is exact and
    /// sends `P_b` to `P_c`, hence `M(b, t)` to `M(c, t)`.
    pub fn engine_nu(&self, m: NakModule) -> Result<NakModule> {
        self.algebra.check_module(m)?;
        let perm = self.engine_nakayama_permutation()?;
        Ok(NakModule::new(perm[m.top], m.len))
    }
}

fn interval_representation(
    alg: &NakAlgebra,
    bq: &Arc<BoundQuiverAlgebra>,
    m: NakModule,
) -> Representation {
    let n = alg.n;
    let mut dims = vec![0; n];
    for j in 0..m.len {
        dims[(m.top + j) % n] += 1;
    }
    // basis vector m_j sits at vertex top+j, position j / n within that fiber
    let maps = if alg.loewy == 1 {
        Vec::new()
    } else {
        (0..n)
            .map(|i| {
                let target = (i + 1) % n;
                let mut mat = Mat::zeros(dims[target], dims[i]);
                for j in 0..m.len.saturating_sub(1) {
                    if (m.top + j) % n == i {
                        mat[((j + 1) / n, j / n)] = rat(1);
                    }
                }
                mat
            })
            .collect()
    };
    Representation::new(bq.clone(), dims, maps).expect("interval modules satisfy the relations")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(top: usize, len: usize) -> NakModule {
        NakModule::new(top, len)
    }

    fn alg(n: usize, l: usize) -> NakAlgebra {
        NakAlgebra::new(n, l).unwrap()
    }

    #[test]
    fn indecomposable_lists() {
        assert_eq!(
            alg(2, 2).indecomposables(),
            vec![m(0, 1), m(0, 2), m(1, 1), m(1, 2)]
        );
        assert_eq!(alg(1, 2).indecomposables(), vec![m(0, 1), m(0, 2)]);
        assert_eq!(alg(3, 1).indecomposables(), vec![m(0, 1), m(1, 1), m(2, 1)]);
        assert!(NakAlgebra::new(0, 2).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(alg(2, 2).omega(m(0, 1)), Some(m(1, 1)));
        assert_eq!(alg(2, 2).omega(m(0, 2)), None);
        assert_eq!(alg(3, 2).omega(m(1, 1)), Some(m(2, 1)));
    }

    #[test]
    fn nu_examples() {
        assert_eq!(alg(2, 2).nu(m(0, 2)), m(1, 2));
        assert_eq!(alg(2, 2).nu(m(0, 1)), m(1, 1));
        let a = alg(3, 4);
        for x in a.indecomposables() {
            assert_eq!(a.nu(x), x);
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(alg(2, 2).tau(m(0, 1)), Some(m(1, 1)));
        assert_eq!(alg(2, 2).tau(m(1, 2)), None);
        assert_eq!(alg(3, 3).tau(m(0, 2)), Some(m(1, 2)));
    }

    #[test]
    fn tau_is_omega_squared_nu() {
        for n in 1..=5 {
            for l in 1..=5 {
                let a = alg(n, l);
                for x in a
                    .indecomposables()
                    .into_iter()
                    .filter(|&x| !a.is_projective(x))
                {
                    assert_eq!(a.tau(x), a.omega_pow(a.nu(x), 2));
                    assert_eq!(
                        a.omega_pow(x, 2),
                        Some(NakModule::new((x.top + l) % n, x.len))
                    );
                    assert_eq!(a.nu(a.omega(x).unwrap()), a.omega(a.nu(x)).unwrap());
                }
            }
        }
    }

    #[test]
    fn representations_of_intervals() {
        let e = NakEngine::new(alg(2, 2));
        assert_eq!(e.to_representation(m(0, 2)).unwrap().dims(), &[1, 1]);
        assert_eq!(e.to_representation(m(0, 1)).unwrap().dims(), &[1, 0]);
        let e = NakEngine::new(alg(2, 3));
        assert_eq!(e.to_representation(m(0, 3)).unwrap().dims(), &[2, 1]);
        assert!(e.to_representation(m(0, 4)).is_err());
    }

    #[test]
    fn ext_examples() {
        let e = NakEngine::new(alg(2, 2));
        assert_eq!(e.ext_dim_nak(m(0, 1), m(1, 1), 1).unwrap(), 1);
        assert_eq!(e.ext_dim_nak(m(0, 1), m(0, 1), 1).unwrap(), 0);
        for y in e.modules().to_vec() {
            for i in 1..=3 {
                assert_eq!(e.ext_dim_nak(m(0, 2), y, i).unwrap(), 0);
            }
        }
        assert!(e.ext_dim_nak(m(0, 1), m(0, 1), 0).is_err());
    }

    #[test]
    fn interval_modules_are_indecomposable() {
        let e = NakEngine::new(alg(2, 2));
        for x in e.modules() {
            assert!(bqa::is_indecomposable(e.representation(*x)).unwrap());
        }
    }

    #[test]
    fn engine_recovers_formulas_small() {
        let e = NakEngine::new(alg(2, 2));
        assert_eq!(e.engine_omega(m(0, 1)).unwrap(), Some(m(1, 1)));
        assert_eq!(e.engine_omega(m(0, 2)).unwrap(), None);
        assert_eq!(e.engine_nu(m(0, 2)).unwrap(), m(1, 2));
        let e = NakEngine::new(alg(3, 2));
        assert_eq!(e.engine_omega(m(1, 1)).unwrap(), Some(m(2, 1)));
    }
}
