use std::collections::HashMap;

use crate::config::AbstractConfig;
use crate::error::ConfigError;

/// Point and block bijections A → B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigIso {
    pub point_map: Vec<usize>,
    pub block_map: Vec<usize>,
}

impl ConfigIso {
    /// Re-checks the witness against both incidence relations.
    pub fn verify(&self, a: &AbstractConfig, b: &AbstractConfig) -> bool {
        let bij = |m: &[usize], n: usize| {
            let mut seen = vec![false; n];
            m.len() == n && m.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
        };
        if !bij(&self.point_map, b.points().len()) || !bij(&self.block_map, b.blocks().len()) {
            return false;
        }
        (0..a.blocks().len()).all(|k| {
            let mut img: Vec<usize> = a.block(k).iter().map(|&p| self.point_map[p]).collect();
            img.sort_unstable();
            img == b.block(self.block_map[k])
        })
    }

    pub fn inverse(&self) -> ConfigIso {
        let inv = |m: &[usize]| {
            let mut out = vec![0; m.len()];
            for (i, &j) in m.iter().enumerate() {
                out[j] = i;
            }
            out
        };
        ConfigIso { point_map: inv(&self.point_map), block_map: inv(&self.block_map) }
    }
}

/// Points first, then blocks.
struct Bipartite {
    np: usize,
    adj: Vec<Vec<usize>>,
}

impl Bipartite {
    fn new(c: &AbstractConfig) -> Self {
        let np = c.points().len();
        let mut adj = vec![Vec::new(); np + c.blocks().len()];
        for (b, row) in c.incidence().iter().enumerate() {
            for &p in row {
                adj[p].push(np + b);
                adj[np + b].push(p);
            }
        }
        Bipartite { np, adj }
    }
}

/// Joint colour refinement of two graphs, so equal colours mean the same thing on
/// both sides. Returns None as soon as the colour histograms differ.
fn refine(ga: &Bipartite, gb: &Bipartite, ca: &mut Vec<u32>, cb: &mut Vec<u32>) -> bool {
    let classes = |c: &[u32]| {
        let mut v = c.to_vec();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let mut before = classes(ca);
    loop {
        let sig = |g: &Bipartite, c: &[u32]| -> Vec<(u32, Vec<u32>)> {
            (0..g.adj.len())
                .map(|v| {
                    let mut n: Vec<u32> = g.adj[v].iter().map(|&w| c[w]).collect();
                    n.sort_unstable();
                    (c[v], n)
                })
                .collect()
        };
        let sa = sig(ga, ca);
        let sb = sig(gb, cb);
        let mut all: Vec<&(u32, Vec<u32>)> = sa.iter().chain(&sb).collect();
        all.sort();
        all.dedup();
        let id: HashMap<&(u32, Vec<u32>), u32> = all.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
        *ca = sa.iter().map(|s| id[s]).collect();
        *cb = sb.iter().map(|s| id[s]).collect();
        let mut ha = ca.clone();
        let mut hb = cb.clone();
        ha.sort_unstable();
        hb.sort_unstable();
        if ha != hb {
            return false;
        }
        let after = classes(ca);
        if after == before {
            return true;
        }
        before = after;
    }
}

fn search(ga: &Bipartite, gb: &Bipartite, ca: Vec<u32>, cb: Vec<u32>, a: &AbstractConfig, b: &AbstractConfig) -> Option<ConfigIso> {
    let mut count: HashMap<u32, usize> = HashMap::new();
    for &c in &ca {
        *count.entry(c).or_default() += 1;
    }
    let pick = count.iter().filter(|(_, &n)| n > 1).min_by_key(|(&c, &n)| (n, c)).map(|(&c, _)| c);
    let Some(colour) = pick else {
        let pos: HashMap<u32, usize> = cb.iter().enumerate().map(|(w, &c)| (c, w)).collect();
        let map: Vec<usize> = ca.iter().map(|c| pos[c]).collect();
        let iso = ConfigIso {
            point_map: map[..ga.np].to_vec(),
            block_map: map[ga.np..].iter().map(|&w| w - gb.np).collect(),
        };
        return iso.verify(a, b).then_some(iso);
    };
    let fresh = ca.iter().chain(&cb).max().unwrap() + 1;
    let v = ca.iter().position(|&c| c == colour).unwrap();
    for w in (0..cb.len()).filter(|&w| cb[w] == colour) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[v] = fresh;
        nb[w] = fresh;
        if refine(ga, gb, &mut na, &mut nb) {
            if let Some(iso) = search(ga, gb, na, nb, a, b) {
                return Some(iso);
            }
        }
    }
    None
}

/// Isomorphism A → B with the given point pairs held fixed, or None when none
/// exists (the search is exhaustive).
pub fn config_isomorphic_with(
    a: &AbstractConfig,
    b: &AbstractConfig,
    fixed_points: &[(usize, usize)],
) -> Result<Option<ConfigIso>, ConfigError> {
    if a.config_type() != b.config_type() {
        return Err(ConfigError::TypeMismatch(a.config_type().to_string(), b.config_type().to_string()));
    }
    let ga = Bipartite::new(a);
    let gb = Bipartite::new(b);
    let mut ca: Vec<u32> = (0..ga.adj.len()).map(|v| u32::from(v >= ga.np)).collect();
    let mut cb: Vec<u32> = (0..gb.adj.len()).map(|v| u32::from(v >= gb.np)).collect();
    for (k, &(p, q)) in fixed_points.iter().enumerate() {
        if p >= ga.np || q >= gb.np {
            return Err(ConfigError::BadFixedPair(p, q));
        }
        ca[p] = 2 + k as u32;
        cb[q] = 2 + k as u32;
    }
    if !refine(&ga, &gb, &mut ca, &mut cb) {
        return Ok(None);
    }
    Ok(search(&ga, &gb, ca, cb, a, b))
}

pub fn config_isomorphic(a: &AbstractConfig, b: &AbstractConfig) -> Result<Option<ConfigIso>, ConfigError> {
    config_isomorphic_with(a, b, &[])
}

/// Orbit of each point under the automorphism group, as orbit indices.
pub fn point_orbits(c: &AbstractConfig) -> Vec<usize> {
    let n = c.points().len();
    let mut orbit = vec![usize::MAX; n];
    let mut next = 0;
    for p in 0..n {
        if orbit[p] != usize::MAX {
            continue;
        }
        orbit[p] = next;
        for q in p + 1..n {
            if orbit[q] == usize::MAX && config_isomorphic_with(c, c, &[(p, q)]).unwrap().is_some() {
                orbit[q] = next;
            }
        }
        next += 1;
    }
    orbit
}
