use exact_arith::{Matrix, QI};

/// Sing₁: the 18 edge points, Plücker coordinates.
pub const PLUCKER_NODES_18: [[i64; 6]; 18] = [
    [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1],
    [1, 1, 0, 0, 1, 1], [1, 1, 0, 0, -1, -1], [1, -1, 0, 0, 1, -1], [1, -1, 0, 0, -1, 1],
    [1, 0, 1, 1, 0, -1], [1, 0, 1, -1, 0, 1], [1, 0, -1, 1, 0, 1], [1, 0, -1, -1, 0, -1],
    [0, 1, 1, 1, 1, 0], [0, 1, 1, -1, -1, 0], [0, 1, -1, 1, -1, 0], [0, 1, -1, -1, 1, 0],
];

/// Sing₂: the 16 base lines, Plücker coordinates.
pub const PLUCKER_NODES_16: [[i64; 6]; 16] = [
    [1, 1, 1, 0, 0, 0], [1, 1, -1, 0, 0, 0], [1, -1, 1, 0, 0, 0], [1, -1, -1, 0, 0, 0],
    [1, 0, 0, 1, 1, 0], [1, 0, 0, 1, -1, 0], [1, 0, 0, -1, 1, 0], [1, 0, 0, -1, -1, 0],
    [0, 1, 0, 1, 0, 1], [0, 1, 0, 1, 0, -1], [0, 1, 0, -1, 0, 1], [0, 1, 0, -1, 0, -1],
    [0, 0, 1, 0, 1, 1], [0, 0, 1, 0, 1, -1], [0, 0, 1, 0, -1, 1], [0, 0, 1, 0, -1, -1],
];

/// Sing₁ in Klein coordinates as (real, imaginary) integer parts.
pub const KLEIN_NODES_18: [[(i64, i64); 6]; 18] = {
    const O: (i64, i64) = (0, 0);
    const L: (i64, i64) = (1, 0);
    const I: (i64, i64) = (0, 1);
    const M: (i64, i64) = (0, -1);
    [
        [L, O, O, M, O, O], [O, L, O, O, M, O], [O, O, L, O, O, M],
        [O, O, L, O, O, I], [O, L, O, O, I, O], [L, O, O, I, O, O],
        [L, O, O, O, I, O], [O, L, O, I, O, O], [O, L, O, M, O, O], [L, O, O, O, M, O],
        [O, O, L, M, O, O], [L, O, O, O, O, M], [L, O, O, O, O, I], [O, O, L, I, O, O],
        [O, O, L, O, I, O], [O, L, O, O, O, I], [O, L, O, O, O, M], [O, O, L, O, M, O],
    ]
};

pub fn qi_point(p: &[(i64, i64); 6]) -> Vec<QI> {
    p.iter().map(|&(a, b)| QI::int(a, b)).collect()
}

pub fn qi_from_i64(p: &[i64]) -> Vec<QI> {
    p.iter().map(|&a| QI::int(a, 0)).collect()
}

/// Sing₂ in Klein coordinates: [ε1,ε2,ε3,e1,e2,e3], εk² = -1, ek² = 1, ε1ε2ε3 + i·e1e2e3 = 0,
/// normalised so that ε1 = i.
pub fn klein_nodes_16() -> Vec<Vec<QI>> {
    let mut out = Vec::new();
    for s2 in [1, -1] {
        for s3 in [1, -1] {
            for e1 in [1, -1] {
                for e2 in [1, -1] {
                    for e3 in [1, -1] {
                        // ε1ε2ε3 = i·i·s2·i·s3 = -i·s2·s3
                        if -s2 * s3 + e1 * e2 * e3 == 0 {
                            out.push(vec![
                                QI::int(0, 1),
                                QI::int(0, s2),
                                QI::int(0, s3),
                                QI::int(e1, 0),
                                QI::int(e2, 0),
                                QI::int(e3, 0),
                            ]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// A permutation of {0,1,2,3}: `p[k]` is the image of k.
pub type Perm4 = [u8; 4];

pub fn perm_compose(a: &Perm4, b: &Perm4) -> Perm4 {
    // (a∘b)(k) = a(b(k))
    [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize], a[b[3] as usize]]
}

pub fn all_perms4() -> Vec<Perm4> {
    let mut out = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let p = [a, b, c, d];
                    if (0..4u8).all(|k| p.contains(&k)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Parses cycle notation on 1..4, e.g. "(14)(23)" or "1".
pub fn parse_cycles(s: &str) -> Perm4 {
    let mut p = [0u8, 1, 2, 3];
    for cyc in s.split(['(', ')']).filter(|c| !c.is_empty() && *c != "1") {
        let pts: Vec<u8> = cyc.bytes().map(|b| b - b'1').collect();
        for k in 0..pts.len() {
            p[pts[k] as usize] = pts[(k + 1) % pts.len()];
        }
    }
    p
}

pub fn cycles_string(p: &Perm4) -> String {
    let mut seen = [false; 4];
    let mut out = String::new();
    for s in 0..4 {
        if seen[s] || p[s] as usize == s {
            continue;
        }
        out.push('(');
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            out.push((b'1' + k as u8) as char);
            k = p[k] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Printed labels of the twelve α-planes and twelve β-planes, in list order.
pub const ALPHA_LABELS: [&str; 12] =
    ["(12)(34)", "(13)(24)", "(14)(23)", "1", "(142)", "(132)", "(123)", "(124)", "(143)", "(243)", "(234)", "(134)"];
pub const BETA_LABELS: [&str; 12] =
    ["(1342)", "(1243)", "(1432)", "(1234)", "(1423)", "(1324)", "(12)", "(34)", "(24)", "(13)", "(23)", "(14)"];

/// A plane of the complex in Klein form V(x_k - ε_k i y_σ(k)), ε1ε2ε3 = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleinPlane {
    /// σ as a permutation of {0,1,2}.
    pub sigma: [u8; 3],
    pub eps: [i64; 3],
}

impl KleinPlane {
    pub fn all() -> Vec<KleinPlane> {
        let mut out = Vec::new();
        for sigma in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            for eps in [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]] {
                out.push(KleinPlane { sigma, eps });
            }
        }
        out
    }

    /// The three linear forms as rows.
    pub fn forms(&self) -> Matrix<QI> {
        Matrix::from_fn(3, 6, |k, j| {
            if j == k {
                QI::int(1, 0)
            } else if j == 3 + self.sigma[k] as usize {
                QI::int(0, -self.eps[k])
            } else {
                QI::int(0, 0)
            }
        })
    }

    /// The element σ·ε of 𝔖₄, with ε in the Klein four-group via
    /// (1,-1,-1) ↦ (14)(23), (-1,1,-1) ↦ (13)(24), (-1,-1,1) ↦ (12)(34).
    pub fn label(&self) -> Perm4 {
        let v = match self.eps {
            [1, 1, 1] => "1",
            [1, -1, -1] => "(14)(23)",
            [-1, 1, -1] => "(13)(24)",
            _ => "(12)(34)",
        };
        let s = [self.sigma[0], self.sigma[1], self.sigma[2], 3];
        perm_compose(&s, &parse_cycles(v))
    }
}

fn e(i: usize) -> [i64; 6] {
    let mut v = [0; 6];
    v[i - 1] = 1;
    v
}

fn lin(terms: &[(i64, usize)]) -> [i64; 6] {
    let mut v = [0; 6];
    for &(c, i) in terms {
        v[i - 1] += c;
    }
    v
}

/// The printed α-planes in Plücker coordinates x1..x6, in list order.
pub fn plucker_alpha_planes() -> Vec<[[i64; 6]; 3]> {
    let mut out = vec![[e(1), e(2), e(4)], [e(1), e(3), e(5)], [e(2), e(3), e(6)], [e(4), e(5), e(6)]];
    let blocks: [([i64; 3], i64, i64); 4] = [([1, 1, 1], 1, -1), ([1, 1, -1], -1, 1), ([1, -1, 1], -1, -1), ([1, -1, -1], 1, 1)];
    for (first, c3, c3b) in blocks {
        for s in [1, -1] {
            out.push([
                lin(&[(first[0], 1), (first[1], 2), (first[2], 4)]),
                lin(&[(s, 1), (c3, 3), (1, 5)]),
                lin(&[(s, 2), (c3b, 3), (1, 6)]),
            ]);
        }
    }
    out
}

/// The printed β-planes in Plücker coordinates x1..x6, in list order.
pub fn plucker_beta_planes() -> Vec<[[i64; 6]; 3]> {
    let mut out = Vec::new();
    for s in [1, -1] {
        out.push([e(1), lin(&[(1, 2), (s, 4)]), lin(&[(1, 3), (s, 5)])]);
    }
    for s in [1, -1] {
        out.push([e(2), lin(&[(1, 1), (s, 4)]), lin(&[(1, 3), (-s, 6)])]);
    }
    for s in [1, -1] {
        out.push([e(3), lin(&[(1, 1), (s, 5)]), lin(&[(1, 2), (s, 6)])]);
    }
    for s in [1, -1] {
        out.push([e(4), lin(&[(1, 1), (s, 2)]), lin(&[(1, 5), (s, 6)])]);
    }
    for s in [1, -1] {
        out.push([e(5), lin(&[(1, 1), (s, 3)]), lin(&[(1, 4), (-s, 6)])]);
    }
    for s in [1, -1] {
        out.push([e(6), lin(&[(1, 2), (s, 3)]), lin(&[(1, 4), (s, 5)])]);
    }
    out
}

/// 4×4 arrangement of Sing₂ (1-based indices into the 16-point list).
pub const DETERMINANT_ARRANGEMENT: [[usize; 4]; 4] = [[1, 14, 12, 7], [15, 2, 5, 10], [9, 8, 3, 16], [6, 11, 13, 4]];
