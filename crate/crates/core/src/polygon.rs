//! (d+1)-angulations of the regular N-gon, N = (d-1)ℓ + 2.
//!
//! Corners are numbered `0..N` clockwise. A (d-1)-diagonal `[x, y]` has
//! `|y - x| > 1` and `|y - x| - 1 ≡ 0 (mod d-1)`; a (d+1)-angulation is a
//! maximal set of pairwise non-crossing ones and cuts the polygon into ℓ
//! pieces with d+1 corners each. The rotation ρ sends `[x, y]` to
//! `[x-1, y-1]`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolygonCtx {
    pub d: usize,
    pub pieces: usize,
}

impl PolygonCtx {
    pub fn new(d: usize, pieces: usize) -> Result<Self> {
        if d == 0 || pieces == 0 {
            return Err(Error::input(format!(
                "polygon context needs d >= 1 and pieces >= 1, got d={d}, pieces={pieces}"
            )));
        }
        Ok(PolygonCtx { d, pieces })
    }

    /// Number of corners, `(d-1)ℓ + 2`.
    pub fn corners(&self) -> usize {
        (self.d - 1) * self.pieces + 2
    }

    /// Every (d, ℓ) with d ≥ 2 and at most `max_corners` corners, ordered by (d, ℓ).
    pub fn all_up_to(max_corners: usize) -> Vec<PolygonCtx> {
        let mut out = Vec::new();
        for d in 2..max_corners {
            for pieces in 1.. {
                let ctx = PolygonCtx { d, pieces };
                if ctx.corners() > max_corners {
                    break;
                }
                out.push(ctx);
            }
        }
        out
    }

    fn rotate_corner(&self, x: usize, k: i64) -> usize {
        let n = self.corners() as i64;
        (x as i64 - k).rem_euclid(n) as usize
    }
}

/// A chord `[x, y]` with `x < y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Diagonal {
    pub x: usize,
    pub y: usize,
}

impl From<Diagonal> for [usize; 2] {
    fn from(d: Diagonal) -> Self {
        [d.x, d.y]
    }
}

impl From<[usize; 2]> for Diagonal {
    fn from([a, b]: [usize; 2]) -> Self {
        Diagonal::new(a, b)
    }
}

impl Diagonal {
    /// Normalizes the endpoint order.
    pub fn new(a: usize, b: usize) -> Self {
        Diagonal {
            x: a.min(b),
            y: a.max(b),
        }
    }
}

/// A set of diagonals, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angulation {
    diagonals: Vec<Diagonal>,
}

impl Angulation {
    pub fn new(mut diagonals: Vec<Diagonal>) -> Self {
        diagonals.sort();
        diagonals.dedup();
        Angulation { diagonals }
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }
}

/// Is `[x, y]` a (d-1)-diagonal? For d = 1 the polygon is a 2-gon without diagonals.
pub fn is_diagonal(ctx: &PolygonCtx, x: usize, y: usize) -> Result<bool> {
    let n = ctx.corners();
    if x >= n || y >= n {
        return Err(Error::input(format!("corner out of range for a {n}-gon")));
    }
    if x == y {
        return Err(Error::input("a diagonal needs two distinct corners"));
    }
    Ok(valid_chord(ctx, Diagonal::new(x, y)))
}

fn valid_chord(ctx: &PolygonCtx, d: Diagonal) -> bool {
    let n = ctx.corners();
    let gap = d.y - d.x;
    ctx.d >= 2 && gap > 1 && !(d.x == 0 && d.y == n - 1) && (gap - 1) % (ctx.d - 1) == 0
}

/// All (d-1)-diagonals, sorted.
pub fn all_diagonals(ctx: &PolygonCtx) -> Vec<Diagonal> {
    let n = ctx.corners();
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| Diagonal { x, y }))
        .filter(|&d| valid_chord(ctx, d))
        .collect()
}

/// Strict interleaving of endpoints; shared endpoints do not cross.
pub fn crosses(a: Diagonal, b: Diagonal) -> bool {
    (a.x < b.x && b.x < a.y && a.y < b.y) || (b.x < a.x && a.x < b.y && b.y < a.y)
}

/// Enumerates all (d+1)-angulations by ear recursion: in a sub-polygon with
/// corners `c_0 < … < c_{m-1}`, the piece on the edge `[c_0, c_1]` is fixed by
/// its other d-1 corners; each gap between consecutive piece corners is an
/// outer edge or a smaller sub-polygon that recurses.
pub fn enumerate_angulations(ctx: &PolygonCtx) -> Vec<Angulation> {
    if ctx.d == 1 {
        return vec![Angulation::new(Vec::new())];
    }
    let corners: Vec<usize> = (0..ctx.corners()).collect();
    let mut out: Vec<Angulation> = angulate(&corners, ctx.d)
        .into_iter()
        .map(Angulation::new)
        .collect();
    out.sort();
    out
}

fn angulate(corners: &[usize], d: usize) -> Vec<Vec<Diagonal>> {
    let m = corners.len();
    if m == d + 1 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // piece corners are positions 0, 1 and d-1 more chosen from 2..m
    let mut chosen = vec![0, 1];
    choose_piece(corners, d, &mut chosen, &mut out);
    out
}

fn choose_piece(
    corners: &[usize],
    d: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<Diagonal>>,
) {
    let m = corners.len();
    let last = *chosen.last().expect("nonempty");
    if chosen.len() == d + 1 {
        // closing gap from the last piece corner back to position 0 (= m)
        if !gap_ok(m - last, d) {
            return;
        }
        let mut boundaries: Vec<(usize, usize)> = chosen.windows(2).map(|w| (w[0], w[1])).collect();
        boundaries.push((last, m));
        let mut partial: Vec<Vec<Diagonal>> = vec![Vec::new()];
        for (a, b) in boundaries {
            if b - a == 1 {
                continue;
            }
            let sub: Vec<usize> = if b == m {
                corners[a..]
                    .iter()
                    .copied()
                    .chain(std::iter::once(corners[0]))
                    .collect()
            } else {
                corners[a..=b].to_vec()
            };
            let mut sub_sorted = sub.clone();
            sub_sorted.sort_unstable();
            let chord = Diagonal::new(sub[0], *sub.last().expect("nonempty"));
            let inner = angulate(&sub_sorted, d);
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    inner.iter().map(move |i| {
                        let mut v = p.clone();
                        v.push(chord);
                        v.extend_from_slice(i);
                        v
                    })
                })
                .collect();
        }
        out.extend(partial);
        return;
    }
    for next in last + 1..m {
        if !gap_ok(next - last, d) {
            continue;
        }
        chosen.push(next);
        choose_piece(corners, d, chosen, out);
        chosen.pop();
    }
}

/// A gap of `g` steps between consecutive piece corners is an outer edge
/// (g = 1) or bounds a sub-polygon of g+1 corners, which must be ≡ 2 mod (d-1).
fn gap_ok(g: usize, d: usize) -> bool {
    g == 1 || (g >= 2 && (g - 1) % (d - 1) == 0)
}

/// Maximal non-crossing sets of (d-1)-diagonals found by exhaustive
/// backtracking over the sorted diagonal list, with an explicit maximality
/// test. Independent of the ear recursion; exponential, for small N only.
pub fn maximal_noncrossing_sets(ctx: &PolygonCtx) -> Vec<Angulation> {
    let diags = all_diagonals(ctx);
    let mut out = Vec::new();
    let mut current = Vec::new();
    backtrack_sets(&diags, 0, &mut current, &mut out);
    out.sort();
    out
}

fn backtrack_sets(
    diags: &[Diagonal],
    i: usize,
    current: &mut Vec<Diagonal>,
    out: &mut Vec<Angulation>,
) {
    if i == diags.len() {
        let maximal = diags
            .iter()
            .all(|d| current.contains(d) || current.iter().any(|c| crosses(*c, *d)));
        if maximal {
            out.push(Angulation::new(current.clone()));
        }
        return;
    }
    let d = diags[i];
    if current.iter().all(|c| !crosses(*c, d)) {
        current.push(d);
        backtrack_sets(diags, i + 1, current, out);
        current.pop();
    }
    backtrack_sets(diags, i + 1, current, out);
}

/// ρ^k: every corner `x` goes to `x - k (mod N)`.
pub fn rotate(ctx: &PolygonCtx, a: &Angulation, k: i64) -> Angulation {
    Angulation::new(
        a.diagonals()
            .iter()
            .map(|d| Diagonal::new(ctx.rotate_corner(d.x, k), ctx.rotate_corner(d.y, k)))
            .collect(),
    )
}

fn rotate_corners(ctx: &PolygonCtx, corners: &[usize], k: i64) -> Vec<usize> {
    let mut out: Vec<usize> = corners.iter().map(|&c| ctx.rotate_corner(c, k)).collect();
    out.sort_unstable();
    out
}

/// The AR translate on d-cluster-tilting objects corresponds to ρ^(d-1).
pub fn tau_on_angulation(ctx: &PolygonCtx, a: &Angulation) -> Angulation {
    rotate(ctx, a, ctx.d as i64 - 1)
}

/// Smallest s > 0 with ρ^s(A) = A; always a divisor of N.
pub fn rotation_period(ctx: &PolygonCtx, a: &Angulation) -> usize {
    let n = ctx.corners();
    (1..=n)
        .filter(|s| n % s == 0)
        .find(|&s| rotate(ctx, a, s as i64) == *a)
        .expect("rho^N is the identity")
}

/// Scans for an angulation fixed by ρ^m.
pub fn invariant_angulation_exists(ctx: &PolygonCtx, m: usize) -> (bool, Option<Angulation>) {
    invariant_angulation_in(ctx, &enumerate_angulations(ctx), m)
}

/// As [`invariant_angulation_exists`], over a precomputed enumeration.
pub fn invariant_angulation_in(
    ctx: &PolygonCtx,
    angulations: &[Angulation],
    m: usize,
) -> (bool, Option<Angulation>) {
    let m = m as i64;
    match angulations.iter().find(|a| rotate(ctx, a, m) == **a) {
        Some(a) => (true, Some(a.clone())),
        None => (false, None),
    }
}

/// N | 2n or N | tn with t = gcd(d+1, 2(ℓ-1)).
pub fn criterion_invariant_exists(d: usize, pieces: usize, n: usize) -> bool {
    let big_n = (d - 1) * pieces + 2;
    let t = (d + 1).gcd(&(2 * (pieces - 1)));
    (2 * n) % big_n == 0 || (t * n) % big_n == 0
}

/// The pieces of an angulation, each as its sorted corner list.
pub fn pieces(ctx: &PolygonCtx, a: &Angulation) -> Vec<Vec<usize>> {
    let mut stack = vec![(0..ctx.corners()).collect::<Vec<usize>>()];
    let mut out = Vec::new();
    while let Some(poly) = stack.pop() {
        let split = a.diagonals().iter().find_map(|dg| {
            let i = poly.iter().position(|&c| c == dg.x)?;
            let j = poly.iter().position(|&c| c == dg.y)?;
            let adjacent = j - i == 1 || (i == 0 && j == poly.len() - 1);
            (!adjacent).then_some((i, j))
        });
        match split {
            Some((i, j)) => {
                let inner = poly[i..=j].to_vec();
                let outer: Vec<usize> = poly[..=i].iter().chain(&poly[j..]).copied().collect();
                stack.push(inner);
                stack.push(outer);
            }
            None => out.push(poly),
        }
    }
    out.sort();
    out
}

fn check_divisor(ctx: &PolygonCtx, q: usize) -> Result<()> {
    if q == 0 || ctx.corners() % q != 0 {
        return Err(Error::input(format!(
            "q = {q} does not divide N = {}",
            ctx.corners()
        )));
    }
    Ok(())
}

/// Closed form for a ρ^(N/q)-invariant angulation with an invariant piece:
/// q | gcd(ℓ-1, d+1). For d = 1 the single 2-gon piece is always invariant.
pub fn centrangulation_formula(ctx: &PolygonCtx, q: usize) -> Result<bool> {
    check_divisor(ctx, q)?;
    if ctx.d == 1 {
        return Ok(true);
    }
    Ok((ctx.pieces - 1).gcd(&(ctx.d + 1)) % q == 0)
}

/// Brute force: some angulation fixed by ρ^(N/q) has a piece fixed setwise
/// by ρ^(N/q).
pub fn centrangulation_bruteforce(ctx: &PolygonCtx, q: usize) -> Result<bool> {
    check_divisor(ctx, q)?;
    Ok(centrangulation_in(ctx, &enumerate_angulations(ctx), q))
}

pub(crate) fn centrangulation_in(ctx: &PolygonCtx, angulations: &[Angulation], q: usize) -> bool {
    let step = (ctx.corners() / q) as i64;
    angulations.iter().any(|a| {
        rotate(ctx, a, step) == *a
            && pieces(ctx, a)
                .iter()
                .any(|g| rotate_corners(ctx, g, step) == *g)
    })
}

/// Both routes; errors if they disagree.
pub fn centrangulation_exists(ctx: &PolygonCtx, q: usize) -> Result<bool> {
    let closed = centrangulation_formula(ctx, q)?;
    let brute = centrangulation_bruteforce(ctx, q)?;
    if closed != brute {
        return Err(Error::domain(format!(
            "centrangulation routes disagree at {ctx:?}, q={q}: closed form {closed}, brute force {brute}"
        )));
    }
    Ok(closed)
}

/// Closed form for a ρ^(N/2)-invariant angulation with a diameter: ℓ even.
pub fn disangulation_formula(ctx: &PolygonCtx) -> Result<bool> {
    if ctx.d < 2 {
        return Err(Error::input("disangulations need d >= 2"));
    }
    Ok(ctx.corners() % 2 == 0 && ctx.pieces % 2 == 0)
}

pub fn disangulation_bruteforce(ctx: &PolygonCtx) -> Result<(bool, Option<Angulation>)> {
    if ctx.d < 2 {
        return Err(Error::input("disangulations need d >= 2"));
    }
    Ok(disangulation_in(ctx, &enumerate_angulations(ctx)))
}

pub(crate) fn disangulation_in(
    ctx: &PolygonCtx,
    angulations: &[Angulation],
) -> (bool, Option<Angulation>) {
    let n = ctx.corners();
    if n % 2 == 1 {
        return (false, None);
    }
    let half = n / 2;
    let found = angulations.iter().find(|a| {
        rotate(ctx, a, half as i64) == **a && a.diagonals().iter().any(|dg| dg.y - dg.x == half)
    });
    (found.is_some(), found.cloned())
}

pub fn disangulation_exists(ctx: &PolygonCtx) -> Result<bool> {
    let closed = disangulation_formula(ctx)?;
    let (brute, _) = disangulation_bruteforce(ctx)?;
    if closed != brute {
        return Err(Error::domain(format!(
            "disangulation routes disagree at {ctx:?}: closed form {closed}, brute force {brute}"
        )));
    }
    Ok(closed)
}

/// With r = gcd(d+1, ℓ-1) and t = gcd(d+1, 2(ℓ-1)): N | n·r·(d-1) ⟺ N | n·t.
pub fn gcd_equivalence_holds(d: usize, pieces: usize, n: usize) -> bool {
    let big_n = (d - 1) * pieces + 2;
    let r = (d + 1).gcd(&(pieces - 1));
    let t = (d + 1).gcd(&(2 * (pieces - 1)));
    ((n * r * (d - 1)) % big_n == 0) == ((n * t) % big_n == 0)
}

/// The distinct rotation periods occurring among the angulations.
pub fn rotation_periods(ctx: &PolygonCtx, angulations: &[Angulation]) -> BTreeSet<usize> {
    angulations
        .iter()
        .map(|a| rotation_period(ctx, a))
        .collect()
}

/// Planar coordinates of the corners on the unit circle, clockwise from the top.
pub fn corner_coordinates(ctx: &PolygonCtx) -> Vec<(f64, f64)> {
    let n = ctx.corners() as f64;
    (0..ctx.corners())
        .map(|i| {
            let theta = std::f64::consts::FRAC_PI_2 - std::f64::consts::TAU * i as f64 / n;
            (theta.cos(), theta.sin())
        })
        .collect()
}
