//! The divisibility criterion for d-representation-finiteness of Λ(n, ℓ).
//!
//! With N = ℓ(d-1) + 2 and t = gcd(d+1, 2(ℓ-1)), Λ(n, ℓ) is
//! d-representation-finite iff N | 2n or N | tn.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Via {
    CondA,
    CondB,
    Both,
    Neither,
}

impl Via {
    fn from_conditions(a: bool, b: bool) -> Self {
        match (a, b) {
            (true, true) => Via::Both,
            (true, false) => Via::CondA,
            (false, true) => Via::CondB,
            (false, false) => Via::Neither,
        }
    }
}

impl fmt::Display for Via {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Via::CondA => "condA",
            Via::CondB => "condB",
            Via::Both => "both",
            Via::Neither => "neither",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassRecord {
    pub n: usize,
    pub loewy: usize,
    pub d: usize,
    #[serde(rename = "N")]
    pub corners: usize,
    pub t: usize,
    pub drf: bool,
    pub via: Via,
    /// ℓ = 1: semisimple, answered without the criterion.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub outside_hypothesis: bool,
}

pub fn t_value(d: usize, loewy: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::input("d must be positive"));
    }
    if loewy < 2 {
        return Err(Error::input(format!(
            "t is defined for Loewy length >= 2, got {loewy}"
        )));
    }
    Ok((d + 1).gcd(&(2 * (loewy - 1))))
}

pub fn is_drf_formula(n: usize, loewy: usize, d: usize) -> Result<ClassRecord> {
    if n == 0 || loewy == 0 || d == 0 {
        return Err(Error::input(format!(
            "parameters must be positive, got n={n}, loewy={loewy}, d={d}"
        )));
    }
    let corners = loewy * (d - 1) + 2;
    if loewy == 1 {
        return Ok(ClassRecord {
            n,
            loewy,
            d,
            corners,
            t: d + 1,
            drf: true,
            via: Via::Both,
            outside_hypothesis: true,
        });
    }
    let t = t_value(d, loewy)?;
    let cond_a = (2 * n) % corners == 0;
    let cond_b = (t * n) % corners == 0;
    Ok(ClassRecord {
        n,
        loewy,
        d,
        corners,
        t,
        drf: cond_a || cond_b,
        via: Via::from_conditions(cond_a, cond_b),
        outside_hypothesis: false,
    })
}

/// All records with 1 ≤ n ≤ n_max, 1 ≤ ℓ ≤ ℓ_max, 1 ≤ d ≤ d_max, sorted by (n, ℓ, d).
pub fn rf_table(n_max: usize, loewy_max: usize, d_max: usize) -> Result<Vec<ClassRecord>> {
    if n_max == 0 || loewy_max == 0 || d_max == 0 {
        return Err(Error::input("table bounds must be positive"));
    }
    let mut out = Vec::with_capacity(n_max * loewy_max * d_max);
    for n in 1..=n_max {
        for loewy in 1..=loewy_max {
            for d in 1..=d_max {
                out.push(is_drf_formula(n, loewy, d)?);
            }
        }
    }
    Ok(out)
}

/// Every d ≤ d_max for which Λ(n, ℓ) is d-representation-finite.
pub fn rf_degrees(n: usize, loewy: usize, d_max: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        if is_drf_formula(n, loewy, d)?.drf {
            out.push(d);
        }
    }
    Ok(out)
}
