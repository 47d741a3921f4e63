use crate::config::{AbstractConfig, ConfigType};
use crate::error::ConfigError;

pub const REYE_TYPE: ConfigType = ConfigType::new(12, 4, 16, 3);
pub const COSET_TYPE: ConfigType = ConfigType::new(24, 3, 18, 4);
pub const DETERMINANT_TYPE: ConfigType = ConfigType::new(24, 4, 16, 6);

/// Cube model: 8 vertices (±1,±1,±1), the centre and the three points at
/// infinity of the axes; 12 edges (two vertices and the point at infinity of
/// their direction) and 4 diagonals (two opposite vertices and the centre).
pub fn reye_config() -> AbstractConfig {
    let sign = |v: usize, k: usize| if v >> k & 1 == 1 { '-' } else { '+' };
    let mut points: Vec<String> = (0..8).map(|v| format!("{}{}{}", sign(v, 0), sign(v, 1), sign(v, 2))).collect();
    points.push("O".into());
    points.extend(["X∞", "Y∞", "Z∞"].map(String::from));
    let mut blocks = Vec::new();
    let mut inc = Vec::new();
    for axis in 0..3 {
        for v in (0..8).filter(|v| v >> axis & 1 == 0) {
            let w = v | 1 << axis;
            blocks.push(format!("{}{}", points[v], points[w]));
            inc.push(vec![v, w, 9 + axis]);
        }
    }
    for v in 0..4 {
        let w = 7 - v;
        blocks.push(format!("{}{}", points[v], points[w]));
        inc.push(vec![v, w, 8]);
    }
    AbstractConfig::new("Reye", points, blocks, inc).expect("cube model is regular")
}

/// Curves E_i, E^i, D_i against the sixteen E_ij: E_ij meets E_i, E^j and
/// D_{i xor j} (2-torsion indices added in (Z/2)²).
pub fn abstract_kummer_config() -> AbstractConfig {
    let mut points: Vec<String> = (0..4).map(|i| format!("E_{i}")).collect();
    points.extend((0..4).map(|i| format!("E^{i}")));
    points.extend((0..4).map(|i| format!("D_{i}")));
    let mut blocks = Vec::new();
    let mut inc = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            blocks.push(format!("E_{i}{j}"));
            inc.push(vec![i, 4 + j, 8 + (i ^ j)]);
        }
    }
    AbstractConfig::new("abstract Kummer", points, blocks, inc).expect("Kummer model is regular")
}

/// Permutation of {1,2,3,4} stored as images of 0..4.
pub type Perm = [u8; 4];

/// a∘b (apply b first).
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize], a[b[3] as usize]]
}

pub fn symmetric_group4() -> Vec<Perm> {
    let mut out = Vec::new();
    for a in 0..4u8 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

/// Cycle notation on 1..4, identity written "1".
pub fn cycle_string(p: &Perm) -> String {
    let mut seen = [false; 4];
    let mut s = String::new();
    for start in 0..4 {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        s.push('(');
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            s.push_str(&(k + 1).to_string());
            k = p[k] as usize;
        }
        s.push(')');
    }
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

pub fn parse_cycles(s: &str) -> Option<Perm> {
    let mut p: Perm = [0, 1, 2, 3];
    if s == "1" {
        return Some(p);
    }
    for cyc in s.split(')').filter(|c| !c.is_empty()) {
        let digits: Vec<usize> = cyc
            .strip_prefix('(')?
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize - 1))
            .collect::<Option<_>>()?;
        if digits.iter().any(|&d| d > 3) {
            return None;
        }
        for k in 0..digits.len() {
            p[digits[k]] = digits[(k + 1) % digits.len()] as u8;
        }
    }
    Some(p)
}

/// The three subgroups generated by commuting transpositions {(12),(34)},
/// {(13),(24)}, {(14),(23)}.
pub fn klein_subgroups() -> [[Perm; 4]; 3] {
    let gen = |a: &str, b: &str| {
        let (x, y) = (parse_cycles(a).unwrap(), parse_cycles(b).unwrap());
        [[0, 1, 2, 3], x, y, compose(&x, &y)]
    };
    [gen("(12)", "(34)"), gen("(13)", "(24)"), gen("(14)", "(23)")]
}

/// Elements of S4 against the 18 cosets {h∘g : h ∈ H_k}.
pub fn coset_config() -> AbstractConfig {
    let group = symmetric_group4();
    let points: Vec<String> = group.iter().map(cycle_string).collect();
    let mut blocks = Vec::new();
    let mut inc: Vec<Vec<usize>> = Vec::new();
    for (k, h) in klein_subgroups().iter().enumerate() {
        for g in &group {
            let mut coset: Vec<usize> =
                h.iter().map(|x| group.iter().position(|y| *y == compose(x, g)).unwrap()).collect();
            coset.sort_unstable();
            if !inc.contains(&coset) {
                blocks.push(format!("H{}·{}", k + 1, points[coset[0]]));
                inc.push(coset);
            }
        }
    }
    AbstractConfig::new("cosets", points, blocks, inc)
        .and_then(|c| c.expect_type(COSET_TYPE))
        .expect("cosets of three Klein subgroups")
}

/// Printed labelling of the sixteen cells a_ij by the nodes of the second kind.
pub const DETERMINANT_LABELS: [[usize; 4]; 4] = [[1, 14, 12, 7], [15, 2, 5, 10], [9, 8, 3, 16], [6, 11, 13, 4]];

/// Monomials a_{1σ(1)}…a_{4σ(4)} of a 4×4 determinant against its cells; the
/// cells are named by the printed labels 1..16.
pub fn determinant_config() -> AbstractConfig {
    let group = symmetric_group4();
    let points = group.iter().map(cycle_string).collect();
    let mut blocks = Vec::new();
    let mut inc = Vec::new();
    for label in 1..=16 {
        let (i, j) = (0..16).map(|k| (k / 4, k % 4)).find(|&(i, j)| DETERMINANT_LABELS[i][j] == label).unwrap();
        blocks.push(label.to_string());
        inc.push((0..24).filter(|&g| group[g][i] as usize == j).collect());
    }
    AbstractConfig::new("determinant", points, blocks, inc)
        .and_then(|c| c.expect_type(DETERMINANT_TYPE))
        .expect("determinant expansion")
}

/// Type mismatch error when `c` does not have type `ty`.
pub fn check_type(c: &AbstractConfig, ty: ConfigType) -> Result<(), ConfigError> {
    if c.config_type() == ty {
        Ok(())
    } else {
        Err(ConfigError::TypeMismatch(c.config_type().to_string(), ty.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{config_isomorphic, point_orbits};

    #[test]
    fn reye_model() {
        let r = reye_config();
        assert_eq!(r.config_type(), REYE_TYPE);
        let diag = r.block_index("+++---").unwrap();
        assert_eq!(r.block(diag).len(), 3);
        assert!(r.incident(r.point_index("O").unwrap(), diag));
        assert!(point_orbits(&r).iter().all(|&o| o == 0));
    }

    #[test]
    fn kummer_is_reye() {
        let k = abstract_kummer_config();
        let iso = config_isomorphic(&k, &reye_config()).unwrap().unwrap();
        assert!(iso.verify(&k, &reye_config()));
    }

    #[test]
    fn cycles_round_trip() {
        for g in symmetric_group4() {
            assert_eq!(parse_cycles(&cycle_string(&g)), Some(g));
        }
        assert_eq!(cycle_string(&parse_cycles("(1432)").unwrap()), "(1432)");
    }

    #[test]
    fn printed_coset() {
        let c = coset_config();
        assert_eq!(c.config_type().to_string(), "(24_3,18_4)");
        let want: Vec<usize> = ["(143)", "(132)", "(1432)", "(13)"].iter().map(|l| c.point_index(l).unwrap()).collect();
        let mut want = want;
        want.sort_unstable();
        let hit = (0..18).find(|&b| c.block(b) == want.as_slice()).expect("coset present");
        assert!(c.blocks()[hit].starts_with("H1"));
    }

    #[test]
    fn determinant_counts() {
        let d = determinant_config();
        assert_eq!(d.config_type().to_string(), "(24_4,16_6)");
        let cell = d.block_index("14").unwrap();
        // a_12: the six permutations with 1 ↦ 2
        assert!(d.block(cell).iter().all(|&g| parse_cycles(&d.points()[g]).unwrap()[0] == 1));
    }
}
