//! JSON descriptions of algebras and modules, and Ext queries on them.
//!
//! ```json
//! {"type":"bound_quiver","vertices":3,
//!  "arrows":[{"name":"a","source":0,"target":1},{"name":"b","source":1,"target":2}],
//!  "relations":[[{"coef":"1","path":["a","b"]}]],"nilpotency":3}
//! {"type":"nakayama","n":2,"loewy":2}
//! ```
//!
//! A module is one of `{"top":a,"len":t}` (Nakayama only), `{"simple":v}`,
//! `{"projective":v}` or a full representation `{"dims":[..],"maps":{..}}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bqa::{
    Arrow, BoundQuiverAlgebra, Quiver, Relation, RelationTerm, Representation, RepresentationJson,
    Resolution,
};
use crate::error::{Error, Result};
use crate::nakayama::{NakAlgebra, NakEngine, NakModule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraSpec {
    BoundQuiver {
        vertices: usize,
        arrows: Vec<Arrow>,
        #[serde(default)]
        relations: Vec<Vec<RelationTerm>>,
        nilpotency: usize,
    },
    Nakayama {
        n: usize,
        loewy: usize,
    },
}

impl AlgebraSpec {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::input(format!("bad algebra JSON: {e}")))
    }

    pub fn load(&self) -> Result<LoadedAlgebra> {
        match self {
            AlgebraSpec::BoundQuiver {
                vertices,
                arrows,
                relations,
                nilpotency,
            } => {
                let quiver = Quiver::new(*vertices, arrows.clone())?;
                let relations = relations
                    .iter()
                    .map(|terms| Relation::new(&quiver, terms))
                    .collect::<Result<Vec<_>>>()?;
                Ok(LoadedAlgebra::General(Arc::new(BoundQuiverAlgebra::build(
                    quiver,
                    relations,
                    *nilpotency,
                )?)))
            }
            AlgebraSpec::Nakayama { n, loewy } => Ok(LoadedAlgebra::Nakayama(Box::new(
                NakEngine::new(NakAlgebra::new(*n, *loewy)?),
            ))),
        }
    }
}

#[derive(Debug)]
pub enum LoadedAlgebra {
    General(Arc<BoundQuiverAlgebra>),
    Nakayama(Box<NakEngine>),
}

impl LoadedAlgebra {
    pub fn bound_quiver(&self) -> &Arc<BoundQuiverAlgebra> {
        match self {
            LoadedAlgebra::General(a) => a,
            LoadedAlgebra::Nakayama(e) => e.bound_quiver(),
        }
    }

    pub fn module(&self, spec: &ModuleSpec) -> Result<Representation> {
        let alg = self.bound_quiver().clone();
        match spec {
            ModuleSpec::Interval(m) => match self {
                LoadedAlgebra::Nakayama(e) => e.to_representation(*m),
                LoadedAlgebra::General(_) => Err(Error::input(
                    "interval modules {top, len} need a nakayama algebra",
                )),
            },
            ModuleSpec::Simple { simple } => Representation::simple(alg, *simple),
            ModuleSpec::Projective { projective } => Representation::projective(alg, *projective),
            ModuleSpec::Rep(json) => Representation::from_json(alg, json.clone()),
        }
    }

    /// dim Ext^i(X, Y). Interval modules over a Nakayama algebra use the
    /// stable Hom table; everything else goes through a projective resolution.
    pub fn ext_dim(
        &self,
        x: &ModuleSpec,
        y: &ModuleSpec,
        i: usize,
        route: ExtRoute,
    ) -> Result<usize> {
        if i == 0 {
            return Err(Error::input("Ext degree must be at least 1"));
        }
        if let (
            LoadedAlgebra::Nakayama(e),
            ModuleSpec::Interval(mx),
            ModuleSpec::Interval(my),
            ExtRoute::Auto,
        ) = (self, x, y, route)
        {
            return e.ext_dim_nak(*mx, *my, i);
        }
        let (rx, ry) = (self.module(x)?, self.module(y)?);
        Resolution::new(rx).ext_dim(&ry, i)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExtRoute {
    #[default]
    Auto,
    Resolution,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleSpec {
    Interval(NakModule),
    Simple { simple: usize },
    Projective { projective: usize },
    Rep(RepresentationJson),
}

impl ModuleSpec {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::input(format!("bad module JSON: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KA3_AB: &str = r#"{"type":"bound_quiver","vertices":3,
        "arrows":[{"name":"a","source":0,"target":1},{"name":"b","source":1,"target":2}],
        "relations":[[{"coef":"1","path":["a","b"]}]],"nilpotency":3}"#;

    #[test]
    fn parse_algebras() {
        let spec = AlgebraSpec::parse(KA3_AB).unwrap();
        assert_eq!(spec.load().unwrap().bound_quiver().dim(), 5);
        let spec = AlgebraSpec::parse(r#"{"type":"nakayama","n":2,"loewy":2}"#).unwrap();
        assert_eq!(spec, AlgebraSpec::Nakayama { n: 2, loewy: 2 });
        assert_eq!(spec.load().unwrap().bound_quiver().dim(), 4);
        assert!(AlgebraSpec::parse(r#"{"type":"nakayama","n":2}"#).is_err());
        assert!(AlgebraSpec::parse("{").is_err());
        assert!(AlgebraSpec::parse(r#"{"type":"nakayama","n":0,"loewy":2}"#)
            .unwrap()
            .load()
            .is_err());
    }

    #[test]
    fn parse_modules() {
        assert_eq!(
            ModuleSpec::parse(r#"{"top":1,"len":2}"#).unwrap(),
            ModuleSpec::Interval(NakModule::new(1, 2))
        );
        assert_eq!(
            ModuleSpec::parse(r#"{"simple":0}"#).unwrap(),
            ModuleSpec::Simple { simple: 0 }
        );
        assert_eq!(
            ModuleSpec::parse(r#"{"projective":2}"#).unwrap(),
            ModuleSpec::Projective { projective: 2 }
        );
        let rep = ModuleSpec::parse(r#"{"dims":[1,1,0],"maps":{"a":[["1"]],"b":[]}}"#).unwrap();
        let alg = AlgebraSpec::parse(KA3_AB).unwrap().load().unwrap();
        assert_eq!(alg.module(&rep).unwrap().dims(), &[1, 1, 0]);
        assert!(alg
            .module(&ModuleSpec::Interval(NakModule::new(0, 1)))
            .is_err());
        assert!(ModuleSpec::parse(r#"{"bogus":1}"#).is_err());
    }

    #[test]
    fn ext_queries() {
        let alg = AlgebraSpec::parse(KA3_AB).unwrap().load().unwrap();
        let s = |v| ModuleSpec::Simple { simple: v };
        assert_eq!(alg.ext_dim(&s(0), &s(2), 2, ExtRoute::Auto).unwrap(), 1);
        assert_eq!(alg.ext_dim(&s(0), &s(1), 1, ExtRoute::Auto).unwrap(), 1);
        assert!(alg.ext_dim(&s(0), &s(1), 0, ExtRoute::Auto).is_err());

        let nak = AlgebraSpec::Nakayama { n: 2, loewy: 2 }.load().unwrap();
        let m = |a, t| ModuleSpec::Interval(NakModule::new(a, t));
        for route in [ExtRoute::Auto, ExtRoute::Resolution] {
            assert_eq!(nak.ext_dim(&m(0, 1), &m(1, 1), 1, route).unwrap(), 1);
            assert_eq!(nak.ext_dim(&m(0, 2), &m(1, 1), 1, route).unwrap(), 0);
        }
    }
}
