//! Summand counts and parameters for algebras built from trivial
//! extensions, fractionally Calabi–Yau algebras, preprojective algebras and
//! tensor products.
//!
//! Only the arithmetic is computed here. When a construction lands among the
//! self-injective Nakayama algebras the report carries that instance together
//! with the classifier's verdict.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::classifier::{is_drf_formula, ClassRecord};
use crate::error::{Error, Result};
use crate::nakayama::NakAlgebra;

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::input(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracCYParams {
    pub a: usize,
    pub b: usize,
    pub d: usize,
    pub ell: usize,
    pub g: usize,
    pub n_trivext: usize,
    pub orbit_reps: usize,
}

impl FracCYParams {
    /// Summands of the basic d-cluster-tilting module of T_n(Λ) when Λ has
    /// `p` indecomposable projectives.
    pub fn summand_count(&self, p: usize) -> usize {
        p * self.n_trivext + p * self.orbit_reps
    }
}

/// Λ fractionally (b/a)-Calabi–Yau of global dimension ≤ d.
pub fn fraccy_params(a: usize, b: usize, d: usize, ell: usize) -> Result<FracCYParams> {
    for (name, v) in [("a", a), ("b", b), ("d", d), ("ell", ell)] {
        positive(name, v)?;
    }
    if a * d <= b {
        return Err(Error::domain(format!(
            "need a·d > b, got a·d = {} and b = {b}",
            a * d
        )));
    }
    let g = (d + 1).gcd(&(a + b));
    let num = ell * (a * d - b);
    debug_assert_eq!(num % g, 0, "gcd(d+1, a+b) divides a·d-b");
    Ok(FracCYParams {
        a,
        b,
        d,
        ell,
        g,
        n_trivext: num / g,
        orbit_reps: ell * (a + b) / g,
    })
}

/// The four tubular weight types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TubularType {
    #[serde(rename = "2,2,2,2")]
    T2222,
    #[serde(rename = "3,3,3")]
    T333,
    #[serde(rename = "2,4,4")]
    T244,
    #[serde(rename = "2,3,6")]
    T236,
}

impl TubularType {
    pub const ALL: [TubularType; 4] = [
        TubularType::T2222,
        TubularType::T333,
        TubularType::T244,
        TubularType::T236,
    ];

    /// The largest weight, which is also the Calabi–Yau period.
    pub fn weight(self) -> usize {
        match self {
            TubularType::T2222 => 2,
            TubularType::T333 => 3,
            TubularType::T244 => 4,
            TubularType::T236 => 6,
        }
    }
}

impl fmt::Display for TubularType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TubularType::T2222 => "2,2,2,2",
            TubularType::T333 => "3,3,3",
            TubularType::T244 => "2,4,4",
            TubularType::T236 => "2,3,6",
        })
    }
}

impl FromStr for TubularType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ' '))
            .collect();
        TubularType::ALL
            .into_iter()
            .find(|t| t.to_string() == cleaned)
            .ok_or_else(|| {
                Error::input(format!(
                    "unknown tubular type {s:?}; expected one of 2,2,2,2 3,3,3 2,4,4 2,3,6"
                ))
            })
    }
}

pub fn tubular_n(ty: TubularType, d: usize) -> Result<usize> {
    if d < 2 {
        return Err(Error::input("tubular table needs d >= 2"));
    }
    let p = ty.weight();
    Ok(p * (d - 1) / (2 * p).gcd(&(d + 1)))
}

/// Summands of the basic d-cluster-tilting module of T_{dℓ}(Λ), where Λ has
/// `p` projectives and its own basic d-cluster-tilting module has `m` summands.
pub fn trivext_count(p: usize, m: usize, d: usize, ell: usize) -> Result<usize> {
    for (name, v) in [("p", p), ("d", d), ("ell", ell)] {
        positive(name, v)?;
    }
    if m < p {
        return Err(Error::input(format!(
            "m = {m} is smaller than the projective count p = {p}"
        )));
    }
    Ok(p * d * ell + ell * (d + 1) * (m - p) + ell * p)
}

/// Summands of T_{r-1}(Λ) ⊕ Λ.
pub fn trivrf_count(r: usize, p: usize) -> Result<usize> {
    if r < 2 {
        return Err(Error::input("r must be at least 2"));
    }
    positive("p", p)?;
    Ok(p * r)
}

pub fn wild_family_n(m: usize, d: usize, ell: usize) -> Result<usize> {
    if m < 2 || d < 2 {
        return Err(Error::input("wild family needs m >= 2 and d >= 2"));
    }
    positive("ell", ell)?;
    let g = (d + 1).gcd(&(3 * m - 1));
    let num = ell * ((d + 1) * (m + 1) - (3 * m - 1));
    assert_eq!(num % g, 0, "gcd(d+1, 3m-1) divides the numerator");
    Ok(num / g)
}

/// The tensor product of r-homogeneous d_i-representation-finite algebras is
/// r-homogeneous and (Σ d_i)-representation-finite.
pub fn homogeneous_tensor(r: usize, degrees: &[usize]) -> Result<(usize, usize)> {
    positive("r", r)?;
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::input(
            "degrees must be a nonempty list of positive integers",
        ));
    }
    Ok((r, degrees.iter().sum()))
}

pub fn homogeneous_trivext_reps(r: usize, d: usize, ell: usize) -> Result<usize> {
    for (name, v) in [("r", r), ("d", d), ("ell", ell)] {
        positive(name, v)?;
    }
    Ok(ell * (d * r - d + r))
}

/// Size of a cross-section for the f^a g^b-orbits built from a copies of
/// an f-slice with `count_f0` elements and b copies of a g-slice.
pub fn cross_section_size(a: usize, count_f0: usize, b: usize, count_g0: usize) -> usize {
    a * count_f0 + b * count_g0
}

/// Integer model: f(x) = x - u, g(x) = x - v, positives as I_+. Checks that
/// (-a·u, b·v] meets every f^a g^b-orbit inside [-window, window] exactly once.
pub fn cross_section_verify(u: usize, v: usize, a: usize, b: usize, window: usize) -> Result<bool> {
    for (name, x) in [("u", u), ("v", v), ("a", a), ("b", b)] {
        positive(name, x)?;
    }
    let shift = (a * u + b * v) as i64;
    if (window as i64) < 3 * shift {
        return Err(Error::input(format!(
            "window must be at least {}",
            3 * shift
        )));
    }
    let (lo, hi) = (-((a * u) as i64), (b * v) as i64);
    let w = window as i64;
    for x in -w..=w {
        let hits = (-w..=w)
            .filter(|y| (y - x) % shift == 0 && lo < *y && *y <= hi)
            .count();
        if hits != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub kind: String,
    pub params: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nakayama: Option<NakAlgebra>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summands: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<ClassRecord>,
}

impl ConstructionReport {
    fn new(kind: &str) -> Self {
        ConstructionReport {
            kind: kind.to_string(),
            params: BTreeMap::new(),
            nakayama: None,
            summands: None,
            verdict: None,
        }
    }

    fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    fn with_nakayama(mut self, n: usize, loewy: usize, d: usize) -> Result<Self> {
        self.nakayama = Some(NakAlgebra::new(n, loewy)?);
        self.verdict = Some(is_drf_formula(n, loewy, d)?);
        Ok(self)
    }
}

/// Π(kA_n) for the linearly oriented A_n, which is Λ(n, n-1), checked for d = 3.
pub fn preproj_nakayama(n: usize) -> Result<ConstructionReport> {
    if n < 3 {
        return Err(Error::input("preprojective construction needs n >= 3"));
    }
    ConstructionReport::new("preproj")
        .param("n", n)
        .with_nakayama(n, n - 1, 3)
}

/// T_n(Λ) for Λ twisted fractionally (b/a)-Calabi–Yau. With `p` given, the
/// summand count is attached.
pub fn fraccy_report(
    a: usize,
    b: usize,
    d: usize,
    ell: usize,
    p: Option<usize>,
) -> Result<ConstructionReport> {
    let f = fraccy_params(a, b, d, ell)?;
    let mut r = ConstructionReport::new("fraccy")
        .param("a", a)
        .param("b", b)
        .param("d", d)
        .param("ell", ell)
        .param("g", f.g)
        .param("n_trivext", f.n_trivext)
        .param("orbit_reps", f.orbit_reps);
    if let Some(p) = p {
        positive("p", p)?;
        r.summands = Some(f.summand_count(p));
    }
    Ok(r)
}

/// T_{dℓ}(Λ). For Λ = k (p = m = 1) this is Λ(dℓ, 2).
pub fn trivext_report(p: usize, m: usize, d: usize, ell: usize) -> Result<ConstructionReport> {
    let count = trivext_count(p, m, d, ell)?;
    let mut r = ConstructionReport::new("trivext")
        .param("p", p)
        .param("m", m)
        .param("d", d)
        .param("ell", ell);
    r.summands = Some(count);
    if p == 1 && m == 1 {
        r = r.with_nakayama(d * ell, 2, d)?;
    }
    Ok(r)
}

pub fn tubular_report(ty: TubularType, d: usize) -> Result<ConstructionReport> {
    let n = tubular_n(ty, d)?;
    Ok(ConstructionReport::new("tubular")
        .param("type", ty.to_string())
        .param("d", d)
        .param("n", n))
}

pub fn wild_report(m: usize, d: usize, ell: usize) -> Result<ConstructionReport> {
    let n = wild_family_n(m, d, ell)?;
    Ok(ConstructionReport::new("wild")
        .param("m", m)
        .param("d", d)
        .param("ell", ell)
        .param("n", n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraccy_examples() {
        let f = fraccy_params(3, 3, 2, 1).unwrap();
        assert_eq!((f.g, f.n_trivext), (3, 1));
        let f = fraccy_params(2, 2, 3, 1).unwrap();
        assert_eq!((f.g, f.n_trivext), (4, 1));
        let f = fraccy_params(6, 6, 2, 1).unwrap();
        assert_eq!((f.g, f.n_trivext), (3, 2));
        assert!(matches!(fraccy_params(1, 2, 2, 1), Err(Error::Domain(_))));
        assert!(fraccy_params(0, 1, 2, 1).is_err());
    }

    #[test]
    fn fraccy_invariants() {
        for a in 1..8 {
            for b in 1..8 {
                for d in 1..8 {
                    for ell in 1..4 {
                        let Ok(f) = fraccy_params(a, b, d, ell) else {
                            assert!(a * d <= b);
                            continue;
                        };
                        assert_eq!((a + b) % f.g, 0);
                        assert_eq!((d + 1) % f.g, 0);
                        assert_eq!(f.orbit_reps * f.g, ell * (a + b));
                        assert!(f.n_trivext > 0);
                    }
                }
            }
        }
    }

    #[test]
    fn tubular_examples() {
        assert_eq!(tubular_n(TubularType::T2222, 3).unwrap(), 1);
        assert_eq!(tubular_n(TubularType::T236, 2).unwrap(), 2);
        assert_eq!(tubular_n(TubularType::T244, 3).unwrap(), 2);
        assert_eq!(tubular_n(TubularType::T333, 2).unwrap(), 1);
        assert!(tubular_n(TubularType::T333, 1).is_err());
        for ty in TubularType::ALL {
            assert_eq!(ty.to_string().parse::<TubularType>().unwrap(), ty);
            for d in 2..=12 {
                let p = ty.weight();
                assert_eq!(
                    tubular_n(ty, d).unwrap(),
                    fraccy_params(p, p, d, 1).unwrap().n_trivext
                );
            }
        }
        assert_eq!(
            "(2, 3, 6)".parse::<TubularType>().unwrap(),
            TubularType::T236
        );
        assert!("2,2".parse::<TubularType>().is_err());
    }

    #[test]
    fn trivext_examples() {
        assert_eq!(trivext_count(1, 1, 2, 1).unwrap(), 3);
        assert_eq!(trivext_count(1, 1, 3, 1).unwrap(), 4);
        assert!(trivext_count(2, 1, 2, 1).is_err());
        for d in 1..=8 {
            for ell in 1..=8 {
                assert_eq!(trivext_count(1, 1, d, ell).unwrap(), (d + 1) * ell);
                let r = trivext_report(1, 1, d, ell).unwrap();
                assert!(r.verdict.unwrap().drf);
                assert_eq!(r.nakayama, Some(NakAlgebra::new(d * ell, 2).unwrap()));
            }
        }
        assert!(trivext_report(2, 3, 2, 1).unwrap().nakayama.is_none());
    }

    #[test]
    fn trivrf_examples() {
        assert_eq!(trivrf_count(2, 9).unwrap(), 18);
        assert_eq!(trivrf_count(2, 1).unwrap(), 2);
        assert_eq!(trivrf_count(3, 2).unwrap(), 6);
        assert!(trivrf_count(1, 2).is_err());
    }

    #[test]
    fn preproj_examples() {
        for n in 3..=50 {
            let r = preproj_nakayama(n).unwrap();
            assert_eq!(r.nakayama, Some(NakAlgebra::new(n, n - 1).unwrap()));
            assert!(r.verdict.unwrap().drf);
        }
        assert!(preproj_nakayama(2).is_err());
    }

    #[test]
    fn wild_examples() {
        assert_eq!(wild_family_n(4, 2, 1).unwrap(), 4);
        for m in 2..=10 {
            for ell in 1..=5 {
                assert_eq!(wild_family_n(m, 2, ell).unwrap(), 4 * ell);
                assert_eq!(wild_family_n(m, 3 * m - 2, ell).unwrap(), m * ell);
            }
        }
        assert!(wild_family_n(1, 2, 1).is_err());
    }

    #[test]
    fn homogeneous_examples() {
        assert_eq!(homogeneous_tensor(2, &[1, 1]).unwrap(), (2, 2));
        assert_eq!(homogeneous_tensor(5, &[3]).unwrap(), (5, 3));
        assert_eq!(homogeneous_tensor(2, &[1, 1, 1]).unwrap(), (2, 3));
        assert!(homogeneous_tensor(2, &[]).is_err());
        assert_eq!(homogeneous_trivext_reps(2, 2, 1).unwrap(), 4);
        assert_eq!(homogeneous_trivext_reps(2, 1, 1).unwrap(), 3);
        assert_eq!(homogeneous_trivext_reps(2, 2, 3).unwrap(), 12);
    }

    #[test]
    fn homogeneous_matches_fraccy() {
        // An r-homogeneous d-RF algebra is fractionally (d(r-1)/r)-CY.
        for r in 2..=8 {
            for d in 1..=8 {
                let f = fraccy_params(r, d * (r - 1), d, 1).unwrap();
                for ell in 1..=3 {
                    let scaled = fraccy_params(r, d * (r - 1), d, ell * f.g).unwrap();
                    assert_eq!(
                        scaled.orbit_reps,
                        homogeneous_trivext_reps(r, d, ell).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn cross_section_examples() {
        assert_eq!(cross_section_size(1, 1, 1, 0), 1);
        assert_eq!(cross_section_size(1, 1, 1, 1), 2);
        assert_eq!(cross_section_size(3, 2, 6, 1), 3 * 2 + 6);
        assert!(cross_section_verify(1, 1, 1, 1, 20).unwrap());
        assert!(cross_section_verify(2, 3, 2, 1, 40).unwrap());
        assert!(cross_section_verify(1, 1, 3, 2, 30).unwrap());
        assert!(cross_section_verify(2, 3, 2, 1, 10).is_err());
    }

    #[test]
    fn report_json() {
        let s = serde_json::to_string(&tubular_report(TubularType::T236, 2).unwrap()).unwrap();
        assert_eq!(
            s,
            r#"{"kind":"tubular","params":{"d":2,"n":2,"type":"2,3,6"}}"#
        );
        let r = fraccy_report(3, 3, 2, 1, Some(4)).unwrap();
        assert_eq!(r.summands, Some(4 + 4 * 2));
    }
}
