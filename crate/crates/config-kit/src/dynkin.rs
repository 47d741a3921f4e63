use std::fmt;
use std::str::FromStr;

use crate::error::ConfigError;

/// Connected Dynkin diagram; `affine` marks the extended diagrams Ã, D̃, Ẽ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinComponent {
    pub family: char,
    pub rank: usize,
    pub affine: bool,
}

impl fmt::Display for DynkinComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.family, if self.affine { "~" } else { "" }, self.rank)
    }
}

impl FromStr for DynkinComponent {
    type Err = ConfigError;

    /// "A3", "D~4", "E~8".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ConfigError::Schema(format!("bad Dynkin type {s:?}"));
        let mut chars = s.chars();
        let family = chars.next().filter(|c| "ADE".contains(*c)).ok_or_else(bad)?;
        let rest = chars.as_str();
        let (affine, digits) = match rest.strip_prefix('~') {
            Some(d) => (true, d),
            None => (false, rest),
        };
        let rank = digits.parse().map_err(|_| bad())?;
        Ok(DynkinComponent { family, rank, affine })
    }
}

/// Sum of connected components, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinType(pub Vec<DynkinComponent>);

impl DynkinType {
    pub fn is_single(&self, c: DynkinComponent) -> bool {
        self.0 == [c]
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for DynkinType {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut v: Vec<DynkinComponent> = s.split('+').map(str::parse).collect::<Result<_, _>>()?;
        v.sort();
        Ok(DynkinType(v))
    }
}

fn comp(family: char, rank: usize, affine: bool) -> DynkinComponent {
    DynkinComponent { family, rank, affine }
}

/// Length of the arm leaving `from` through `first` (number of vertices).
fn arm(adj: &[Vec<usize>], from: usize, first: usize) -> Option<usize> {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    loop {
        match adj[cur].len() {
            1 => return Some(len),
            2 => {
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
                len += 1;
            }
            _ => return None,
        }
    }
}

fn classify_connected(adj: &[Vec<usize>]) -> Option<DynkinComponent> {
    let n = adj.len();
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    if n == 1 {
        return Some(comp('A', 1, false));
    }
    if edges == n {
        return (n >= 3 && deg.iter().all(|&d| d == 2)).then(|| comp('A', n - 1, true));
    }
    if edges != n - 1 {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.as_slice() {
        [] => Some(comp('A', n, false)),
        [b] if deg[*b] == 4 => (n == 5).then(|| comp('D', 4, true)),
        [b] if deg[*b] == 3 => {
            let mut arms: Vec<usize> = adj[*b].iter().map(|&w| arm(adj, *b, w)).collect::<Option<_>>()?;
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, r] => Some(comp('D', r + 3, false)),
                [1, 2, 2] => Some(comp('E', 6, false)),
                [1, 2, 3] => Some(comp('E', 7, false)),
                [1, 2, 4] => Some(comp('E', 8, false)),
                [2, 2, 2] => Some(comp('E', 6, true)),
                [1, 3, 3] => Some(comp('E', 7, true)),
                [1, 2, 5] => Some(comp('E', 8, true)),
                _ => None,
            }
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 => {
            let leaves = |v: usize| adj[v].iter().filter(|&&w| deg[w] == 1).count();
            (leaves(*a) >= 2 && leaves(*b) >= 2 && n >= 6).then(|| comp('D', n - 1, true))
        }
        _ => None,
    }
}

/// Classifies a simple graph (adjacency lists) as a sum of Dynkin and affine
/// Dynkin diagrams.
pub fn classify_graph(adj: &[Vec<usize>]) -> Result<DynkinType, ConfigError> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut compo = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < compo.len() {
            for &w in &adj[compo[k]] {
                if !seen[w] {
                    seen[w] = true;
                    compo.push(w);
                }
            }
            k += 1;
        }
        let local: Vec<Vec<usize>> =
            compo.iter().map(|&v| adj[v].iter().map(|w| compo.iter().position(|x| x == w).unwrap()).collect()).collect();
        out.push(classify_connected(&local).ok_or(ConfigError::NoDynkinMatch)?);
    }
    out.sort();
    Ok(DynkinType(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn name(n: usize, edges: &[(usize, usize)]) -> String {
        classify_graph(&graph(n, edges)).map(|t| t.to_string()).unwrap_or_else(|_| "none".into())
    }

    #[test]
    fn templates() {
        assert_eq!(name(3, &[(0, 1), (1, 2)]), "A3");
        assert_eq!(name(4, &[(0, 1), (0, 2), (0, 3)]), "D4");
        assert_eq!(name(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]), "D~4");
        assert_eq!(name(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]), "D5");
        assert_eq!(name(9, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (6, 8)]), "D~8");
        assert_eq!(name(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]), "E8");
        assert_eq!(name(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)]), "E~8");
        assert_eq!(name(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]), "A~3");
        assert_eq!(name(3, &[(0, 1)]), "A1+A2");
        assert_eq!(name(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]), "D6");
        assert_eq!(name(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6)]), "D7");
        assert_eq!(name(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]), "E~6");
        assert_eq!(name(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)]), "none");
    }

    #[test]
    fn parse_round_trip() {
        let t: DynkinType = "D~4+A1".parse().unwrap();
        assert_eq!(t.to_string(), "A1+D~4");
        assert!("B3".parse::<DynkinType>().is_err());
    }
}
