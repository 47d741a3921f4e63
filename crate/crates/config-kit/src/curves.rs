use std::collections::HashMap;
use std::path::Path;

use exact_arith::{q, Q};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::config::AbstractConfig;
use crate::dynkin::{classify_graph, DynkinType};
use crate::error::ConfigError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub id: String,
    pub self_intersection: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub kind: String,
    /// (curve index, multiplicity)
    pub components: Vec<(usize, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fibration {
    pub name: String,
    pub fibers: Vec<Fiber>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivTarget {
    Curve(usize),
    /// Fiber class of the named fibration.
    Class(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    pub name: String,
    pub terms: Vec<(DivTarget, Q)>,
}

/// Curves with a symmetric integral intersection matrix, optional fibrations and
/// named divisors with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSystem {
    curves: Vec<Curve>,
    gram: Vec<Vec<i64>>,
    fibrations: Vec<Fibration>,
    divisors: Vec<Divisor>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCurve {
    id: String,
    #[serde(rename = "self")]
    self_int: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    id: String,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFiber {
    #[serde(rename = "type")]
    kind: String,
    components: Vec<RawComponent>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFibration {
    name: String,
    fibers: Vec<RawFiber>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    class: Option<String>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDivisor {
    name: String,
    terms: Vec<RawTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    curves: Vec<RawCurve>,
    #[serde(default)]
    intersections: Vec<(String, String, i64)>,
    #[serde(default)]
    fibrations: Vec<RawFibration>,
    #[serde(default)]
    divisors: Vec<RawDivisor>,
}

fn parse_coeff(s: &str) -> Result<Q, ConfigError> {
    s.trim().parse::<Q>().map_err(|_| ConfigError::BadCoefficient(s.to_string()))
}

impl CurveSystem {
    /// Builds and validates. `intersections` lists off-diagonal pairs; omitted
    /// pairs are 0.
    pub fn new(
        curves: Vec<Curve>,
        intersections: &[(usize, usize, i64)],
        fibrations: Vec<Fibration>,
        divisors: Vec<Divisor>,
    ) -> Result<Self, ConfigError> {
        let n = curves.len();
        let mut ids = HashMap::new();
        for (k, c) in curves.iter().enumerate() {
            if ids.insert(c.id.clone(), k).is_some() {
                return Err(ConfigError::DuplicateCurve(c.id.clone()));
            }
        }
        let mut gram = vec![vec![0i64; n]; n];
        let mut set = vec![vec![false; n]; n];
        for (k, c) in curves.iter().enumerate() {
            gram[k][k] = c.self_intersection;
            set[k][k] = true;
        }
        for &(a, b, v) in intersections {
            if a >= n || b >= n {
                return Err(ConfigError::UnknownCurve(format!("index {}", a.max(b))));
            }
            if set[a][b] && gram[a][b] != v {
                return Err(ConfigError::ConflictingIntersection(curves[a].id.clone(), curves[b].id.clone()));
            }
            gram[a][b] = v;
            gram[b][a] = v;
            set[a][b] = true;
            set[b][a] = true;
        }
        let cs = CurveSystem { curves, gram, fibrations, divisors };
        cs.validate()?;
        Ok(cs)
    }

    /// Points and blocks of a configuration as disjoint (-2)-curves except for
    /// incident point/block pairs, which meet once.
    pub fn from_config(cfg: &AbstractConfig) -> Result<Self, ConfigError> {
        let np = cfg.points().len();
        let curves = cfg
            .points()
            .iter()
            .chain(cfg.blocks())
            .map(|id| Curve { id: id.clone(), self_intersection: -2 })
            .collect();
        let pairs: Vec<(usize, usize, i64)> = cfg
            .incidence()
            .iter()
            .enumerate()
            .flat_map(|(b, pts)| pts.iter().map(move |&p| (p, np + b, 1)))
            .collect();
        Self::new(curves, &pairs, vec![], vec![])
    }

    pub fn from_json_str(s: &str) -> Result<Self, ConfigError> {
        let raw: RawSystem = serde_json::from_str(s).map_err(|e| ConfigError::Schema(e.to_string()))?;
        let curves: Vec<Curve> =
            raw.curves.into_iter().map(|c| Curve { id: c.id, self_intersection: c.self_int }).collect();
        let idx: HashMap<&str, usize> = curves.iter().enumerate().map(|(k, c)| (c.id.as_str(), k)).collect();
        let find = |id: &str| idx.get(id).copied().ok_or_else(|| ConfigError::UnknownCurve(id.to_string()));
        let inter = raw
            .intersections
            .iter()
            .map(|(a, b, v)| Ok((find(a)?, find(b)?, *v)))
            .collect::<Result<Vec<_>, ConfigError>>()?;
        if let Some((a, _, _)) = inter.iter().find(|(a, b, _)| a == b) {
            return Err(ConfigError::Schema(format!("self pair for {} belongs in \"self\"", curves[*a].id)));
        }
        let fibrations = raw
            .fibrations
            .into_iter()
            .map(|f| {
                let fibers = f
                    .fibers
                    .into_iter()
                    .map(|fb| {
                        let components =
                            fb.components.iter().map(|c| Ok((find(&c.id)?, c.mult))).collect::<Result<_, ConfigError>>()?;
                        Ok(Fiber { kind: fb.kind, components })
                    })
                    .collect::<Result<_, ConfigError>>()?;
                Ok(Fibration { name: f.name, fibers })
            })
            .collect::<Result<_, ConfigError>>()?;
        let divisors = raw
            .divisors
            .into_iter()
            .map(|d| {
                let terms = d
                    .terms
                    .iter()
                    .map(|t| {
                        let target = match (&t.id, &t.class) {
                            (Some(id), None) => DivTarget::Curve(find(id)?),
                            (None, Some(c)) => DivTarget::Class(c.clone()),
                            _ => return Err(ConfigError::BadTerm),
                        };
                        Ok((target, parse_coeff(&t.coeff)?))
                    })
                    .collect::<Result<_, ConfigError>>()?;
                Ok(Divisor { name: d.name, terms })
            })
            .collect::<Result<_, ConfigError>>()?;
        CurveSystem::new(curves, &inter, fibrations, divisors)
    }

    pub fn from_json_file(path: &Path) -> Result<Self, ConfigError> {
        let s = std::fs::read_to_string(path).map_err(|e| ConfigError::Schema(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&s)
    }

    /// Deterministic JSON (nonzero upper-triangle intersections in index order).
    pub fn to_json(&self) -> String {
        let n = self.curves.len();
        let id = |k: usize| self.curves[k].id.clone();
        let raw = RawSystem {
            curves: self.curves.iter().map(|c| RawCurve { id: c.id.clone(), self_int: c.self_intersection }).collect(),
            intersections: (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| self.gram[a][b] != 0)
                .map(|(a, b)| (id(a), id(b), self.gram[a][b]))
                .collect(),
            fibrations: self
                .fibrations
                .iter()
                .map(|f| RawFibration {
                    name: f.name.clone(),
                    fibers: f
                        .fibers
                        .iter()
                        .map(|fb| RawFiber {
                            kind: fb.kind.clone(),
                            components: fb.components.iter().map(|&(c, m)| RawComponent { id: id(c), mult: m }).collect(),
                        })
                        .collect(),
                })
                .collect(),
            divisors: self
                .divisors
                .iter()
                .map(|d| RawDivisor {
                    name: d.name.clone(),
                    terms: d
                        .terms
                        .iter()
                        .map(|(t, c)| match t {
                            DivTarget::Curve(k) => RawTerm { id: Some(id(*k)), class: None, coeff: c.to_string() },
                            DivTarget::Class(s) => RawTerm { id: None, class: Some(s.clone()), coeff: c.to_string() },
                        })
                        .collect(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn fibrations(&self) -> &[Fibration] {
        &self.fibrations
    }

    pub fn divisors(&self) -> &[Divisor] {
        &self.divisors
    }

    pub fn index(&self, id: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.id == id)
    }

    pub fn indices(&self, ids: &[&str]) -> Result<Vec<usize>, ConfigError> {
        ids.iter().map(|id| self.index(id).ok_or_else(|| ConfigError::UnknownCurve(id.to_string()))).collect()
    }

    pub fn fibration(&self, name: &str) -> Option<&Fibration> {
        self.fibrations.iter().find(|f| f.name == name)
    }

    pub fn fiber_vector(&self, fiber: &Fiber) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.len()];
        for &(c, m) in &fiber.components {
            v[c] += q(m);
        }
        v
    }

    /// Coefficient vector of a named divisor; a class term uses the first fiber
    /// of its fibration.
    pub fn divisor_vector(&self, name: &str) -> Result<Vec<Q>, ConfigError> {
        let d = self.divisors.iter().find(|d| d.name == name).ok_or_else(|| ConfigError::UnknownClass(name.to_string()))?;
        self.terms_vector(&d.terms)
    }

    pub fn terms_vector(&self, terms: &[(DivTarget, Q)]) -> Result<Vec<Q>, ConfigError> {
        let mut v = vec![Q::zero(); self.len()];
        for (t, c) in terms {
            match t {
                DivTarget::Curve(k) => v[*k] += c,
                DivTarget::Class(f) => {
                    let fib = self.fibration(f).ok_or_else(|| ConfigError::UnknownClass(f.clone()))?;
                    let first = fib.fibers.first().ok_or_else(|| ConfigError::UnknownClass(f.clone()))?;
                    for (x, y) in v.iter_mut().zip(self.fiber_vector(first)) {
                        *x += y * c;
                    }
                }
            }
        }
        Ok(v)
    }

    pub fn pair(&self, u: &[Q], v: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                if self.gram[i][j] != 0 {
                    s += a * b * q(self.gram[i][j]);
                }
            }
        }
        s
    }

    /// D·C for every curve C.
    pub fn pair_with_curves(&self, v: &[Q]) -> Vec<Q> {
        (0..self.len())
            .map(|c| v.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, a)| a * q(self.gram[i][c])).sum())
            .collect()
    }

    /// Dynkin type of the graph on a subset; needs (-2)-curves meeting in 0 or 1.
    pub fn classify_subset(&self, subset: &[usize]) -> Result<DynkinType, ConfigError> {
        for &a in subset {
            if self.gram[a][a] != -2 {
                return Err(ConfigError::NotSimplyLaced(format!("{} has self-intersection {}", self.curves[a].id, self.gram[a][a])));
            }
            for &b in subset {
                if a != b && !(0..=1).contains(&self.gram[a][b]) {
                    return Err(ConfigError::NotSimplyLaced(format!(
                        "{}·{} = {}",
                        self.curves[a].id, self.curves[b].id, self.gram[a][b]
                    )));
                }
            }
        }
        let adj: Vec<Vec<usize>> = subset
            .iter()
            .map(|&a| (0..subset.len()).filter(|&k| subset[k] != a && self.gram[a][subset[k]] == 1).collect())
            .collect();
        classify_graph(&adj)
    }

    fn validate(&self) -> Result<(), ConfigError> {
        for f in &self.fibrations {
            let err = |fiber: usize, what: String| ConfigError::Fiber { fibration: f.name.clone(), fiber, what };
            let vectors: Vec<Vec<Q>> = f.fibers.iter().map(|fb| self.fiber_vector(fb)).collect();
            for (k, fb) in f.fibers.iter().enumerate() {
                if let Some((c, m)) = fb.components.iter().find(|(_, m)| *m <= 0) {
                    return Err(err(k, format!("multiplicity {m} on {}", self.curves[*c].id)));
                }
                let v = &vectors[k];
                let sq = self.pair(v, v);
                if !sq.is_zero() {
                    return Err(err(k, format!("fiber class has square {sq}")));
                }
                let dots = self.pair_with_curves(v);
                if let Some(&(c, _)) = fb.components.iter().find(|(c, _)| !dots[*c].is_zero()) {
                    return Err(err(k, format!("fiber meets its component {} with {}", self.curves[c].id, dots[c])));
                }
                let support: Vec<usize> = fb.components.iter().map(|&(c, _)| c).collect();
                let want: DynkinType = fb.kind.parse()?;
                let got = self.classify_subset(&support).map_err(|e| err(k, e.to_string()))?;
                if got != want {
                    return Err(err(k, format!("declared {want}, graph is {got}")));
                }
                if k > 0 {
                    if !self.pair(v, &vectors[0]).is_zero() {
                        return Err(err(k, "meets the first fiber".into()));
                    }
                    if dots != self.pair_with_curves(&vectors[0]) {
                        return Err(err(k, "not numerically equivalent to the first fiber".into()));
                    }
                }
            }
        }
        for d in &self.divisors {
            let err = |what: String| ConfigError::Divisor { divisor: d.name.clone(), what };
            let v = self.terms_vector(&d.terms)?;
            let dots = self.pair_with_curves(&v);
            if let Some(c) = (0..self.len()).find(|&c| !dots[c].is_integer()) {
                return Err(err(format!("pairing with {} is {}", self.curves[c].id, dots[c])));
            }
            let sq = self.pair(&v, &v);
            if !sq.is_integer() {
                return Err(err(format!("square is {sq}")));
            }
        }
        Ok(())
    }

    /// Restriction to a subset of curves (fibrations and divisors dropped).
    pub fn subsystem(&self, subset: &[usize]) -> CurveSystem {
        let curves = subset.iter().map(|&k| self.curves[k].clone()).collect();
        let mut inter = Vec::new();
        for (a, &x) in subset.iter().enumerate() {
            for (b, &y) in subset.iter().enumerate().skip(a + 1) {
                if self.gram[x][y] != 0 {
                    inter.push((a, b, self.gram[x][y]));
                }
            }
        }
        CurveSystem::new(curves, &inter, Vec::new(), Vec::new()).expect("restriction of a valid system")
    }
}

pub fn ingest_curve_system(path: &Path) -> Result<CurveSystem, ConfigError> {
    CurveSystem::from_json_file(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    const D4_FIBER: &str = r#"{
      "curves": [{"id": "c", "self": -2}, {"id": "a", "self": -2}, {"id": "b", "self": -2},
                 {"id": "d", "self": -2}, {"id": "e", "self": -2}, {"id": "s", "self": -2}],
      "intersections": [["c","a",1],["c","b",1],["c","d",1],["c","e",1]],
      "fibrations": [{"name": "f", "fibers": [{"type": "D~4", "components": [
         {"id":"c","mult":2},{"id":"a","mult":1},{"id":"b","mult":1},{"id":"d","mult":1},{"id":"e","mult":1}]}]}],
      "divisors": [{"name": "h", "terms": [{"class": "f", "coeff": "1"}, {"id": "a", "coeff": "1/2"}, {"id": "b", "coeff": "1/2"}]}]
    }"#;

    #[test]
    fn valid_fiber() {
        let cs = CurveSystem::from_json_str(D4_FIBER).unwrap();
        let h = cs.divisor_vector("h").unwrap();
        assert_eq!(cs.pair(&h, &h), q(-1));
        let again = CurveSystem::from_json_str(&cs.to_json()).unwrap();
        assert_eq!(again, cs);
    }

    #[test]
    fn bad_fiber_rejected() {
        let bad = D4_FIBER.replace(r#"{"id":"c","mult":2}"#, r#"{"id":"c","mult":3}"#);
        let e = CurveSystem::from_json_str(&bad).unwrap_err();
        assert!(matches!(&e, ConfigError::Fiber { fibration, .. } if fibration == "f"), "{e}");
        assert!(e.to_string().contains("square"));
    }

    #[test]
    fn non_integral_divisor_rejected() {
        let bad = D4_FIBER.replace(r#"{"id": "b", "coeff": "1/2"}"#, r#"{"id": "s", "coeff": "1/2"}"#);
        let e = CurveSystem::from_json_str(&bad).unwrap_err();
        assert!(matches!(e, ConfigError::Divisor { .. }), "{e}");
    }

    #[test]
    fn wrong_declared_type() {
        let bad = D4_FIBER.replace("D~4", "A~4");
        assert!(CurveSystem::from_json_str(&bad).is_err());
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(CurveSystem::from_json_str("{}"), Err(ConfigError::Schema(_))));
        let bad = D4_FIBER.replace(r#"["c","e",1]"#, r#"["c","zz",1]"#);
        assert!(matches!(CurveSystem::from_json_str(&bad), Err(ConfigError::UnknownCurve(_))));
    }
}
