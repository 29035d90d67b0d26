use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{rat_string, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
    by_name: HashMap<String, usize>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::input("a quiver needs at least one vertex"));
        }
        let mut by_name = HashMap::with_capacity(arrows.len());
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::input(format!(
                    "arrow {} joins {}->{} but there are {vertex_count} vertices",
                    a.name, a.source, a.target
                )));
            }
            if by_name.insert(a.name.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate arrow name {}", a.name)));
            }
        }
        Ok(Quiver {
            vertex_count,
            arrows,
            by_name,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    /// Resolves a sequence of arrow names into a path, checking composability
    /// (left to right: each arrow starts where the previous one ends).
    pub fn path_from_names(&self, names: &[String]) -> Result<Path> {
        let Some(first) = names.first() else {
            return Err(Error::input("empty arrow sequence"));
        };
        let idx = |n: &String| {
            self.arrow_index(n)
                .ok_or_else(|| Error::input(format!("unknown arrow {n}")))
        };
        let mut path = Path::trivial(self.arrow(idx(first)?).source);
        for n in names {
            let a = idx(n)?;
            path = path.then(self, a).ok_or_else(|| {
                Error::input(format!("arrow sequence {names:?} does not compose"))
            })?;
        }
        Ok(path)
    }

    /// All paths of length `< max_len`, ordered by length, then source, then arrow sequence.
    pub fn paths_shorter_than(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertex_count).map(Path::trivial).collect();
        let mut frontier = out.clone();
        for _ in 1..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for a in 0..self.arrows.len() {
                    if let Some(q) = p.clone().then(self, a) {
                        next.push(q);
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

/// A path in a quiver; arrows compose left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    // Field order gives the derived ordering: shorter paths first.
    len: usize,
    source: usize,
    arrows: Vec<usize>,
    target: usize,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            len: 0,
            source: v,
            arrows: Vec::new(),
            target: v,
        }
    }

    /// Appends an arrow; `None` if it does not start at this path's target.
    pub fn then(mut self, q: &Quiver, arrow: usize) -> Option<Path> {
        let a = q.arrow(arrow);
        if a.source != self.target {
            return None;
        }
        self.arrows.push(arrow);
        self.len += 1;
        self.target = a.target;
        Some(self)
    }

    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            len: arrows.len(),
            source: self.source,
            arrows,
            target: other.target,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", self.source);
        }
        self.arrows
            .iter()
            .map(|&a| q.arrow(a).name.as_str())
            .collect::<Vec<_>>()
            .join("")
    }
}

/// One term of a relation, as it appears in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    #[serde(with = "rat_string")]
    pub coef: Rat,
    pub path: Vec<String>,
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    terms: Vec<(Rat, Path)>,
}

impl Relation {
    pub fn new(q: &Quiver, terms: &[RelationTerm]) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::input("empty relation"));
        }
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let p = q.path_from_names(&t.path)?;
            if p.len() < 2 {
                return Err(Error::input(format!(
                    "relation term {:?} has length < 2 (not admissible)",
                    t.path
                )));
            }
            out.push((t.coef.clone(), p));
        }
        let (s, e) = (out[0].1.source(), out[0].1.target());
        if out.iter().any(|(_, p)| p.source() != s || p.target() != e) {
            return Err(Error::input("relation terms are not parallel"));
        }
        Ok(Relation { terms: out })
    }

    /// A single path as a monomial relation.
    pub fn monomial(q: &Quiver, names: &[&str]) -> Result<Self> {
        Relation::new(
            q,
            &[RelationTerm {
                coef: crate::exactlin::rat(1),
                path: names.iter().map(|s| s.to_string()).collect(),
            }],
        )
    }

    pub fn terms(&self) -> &[(Rat, Path)] {
        &self.terms
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source()
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target()
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn to_terms(&self, q: &Quiver) -> Vec<RelationTerm> {
        self.terms
            .iter()
            .map(|(c, p)| RelationTerm {
                coef: c.clone(),
                path: p
                    .arrows()
                    .iter()
                    .map(|&a| q.arrow(a).name.clone())
                    .collect(),
            })
            .collect()
    }
}
