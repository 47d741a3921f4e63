use exact_arith::{Matrix, Q};
use proj_geom::*;

type Forms = Vec<[i64; 6]>;

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

fn printed_alpha() -> Vec<Forms> {
    let mut out = vec![
        vec![e(1), e(2), e(4)],
        vec![e(1), e(3), e(5)],
        vec![e(2), e(3), e(6)],
        vec![e(4), e(5), e(6)],
    ];
    for s in [1, -1] {
        out.push(vec![lin(&[(1, 1), (1, 2), (1, 4)]), lin(&[(s, 1), (1, 3), (1, 5)]), lin(&[(s, 2), (-1, 3), (1, 6)])]);
    }
    for s in [1, -1] {
        out.push(vec![lin(&[(1, 1), (1, 2), (-1, 4)]), lin(&[(s, 1), (-1, 3), (1, 5)]), lin(&[(s, 2), (1, 3), (1, 6)])]);
    }
    for s in [1, -1] {
        out.push(vec![lin(&[(1, 1), (-1, 2), (1, 4)]), lin(&[(s, 1), (-1, 3), (1, 5)]), lin(&[(s, 2), (-1, 3), (1, 6)])]);
    }
    for s in [1, -1] {
        out.push(vec![lin(&[(1, 1), (-1, 2), (-1, 4)]), lin(&[(s, 1), (1, 3), (1, 5)]), lin(&[(s, 2), (1, 3), (1, 6)])]);
    }
    out
}

fn printed_beta() -> Vec<Forms> {
    let mut out = Vec::new();
    for s in [1, -1] {
        out.push(vec![e(1), lin(&[(1, 2), (s, 4)]), lin(&[(1, 3), (s, 5)])]);
        out.push(vec![e(2), lin(&[(1, 1), (s, 4)]), lin(&[(1, 3), (-s, 6)])]);
        out.push(vec![e(3), lin(&[(1, 1), (s, 5)]), lin(&[(1, 2), (s, 6)])]);
        out.push(vec![e(4), lin(&[(1, 1), (s, 2)]), lin(&[(1, 5), (s, 6)])]);
        out.push(vec![e(5), lin(&[(1, 1), (s, 3)]), lin(&[(1, 4), (-s, 6)])]);
        out.push(vec![e(6), lin(&[(1, 2), (s, 3)]), lin(&[(1, 4), (s, 5)])]);
    }
    out
}

fn to_matrix(f: &Forms) -> Matrix<Q> {
    Matrix::from_i64(&f.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn same_set(computed: &[Matrix<Q>], printed: &[Forms]) -> bool {
    let printed: Vec<Matrix<Q>> = printed.iter().map(to_matrix).collect();
    computed.len() == printed.len()
        && computed.iter().all(|c| printed.iter().filter(|p| p.same_row_space(c)).count() == 1)
        && printed.iter().all(|p| computed.iter().filter(|c| c.same_row_space(p)).count() == 1)
}

const SINGULAR_POINTS: [[i64; 4]; 12] = [
    [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0],
    [1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1],
    [1, 1, 1, -1], [1, 1, -1, 1], [1, -1, 1, 1], [-1, 1, 1, 1],
];

#[test]
fn alpha_planes_of_the_twelve_nodes_match_printed_list() {
    let computed: Vec<Matrix<Q>> = SINGULAR_POINTS
        .iter()
        .map(|p| Matrix::from_rows(alpha_plane(&ProjPoint::<Q>::from_i64(p)).unwrap()).unwrap())
        .collect();
    assert!(same_set(&computed, &printed_alpha()));
}

#[test]
fn beta_planes_of_the_faces_match_printed_list() {
    let mut faces = Vec::new();
    for (i, j) in [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)] {
        for s in [1, -1] {
            let mut c = [0i64; 4];
            c[i] = 1;
            c[j] = s;
            faces.push(ProjPlane::<Q>::from_i64(&c));
        }
    }
    let computed: Vec<Matrix<Q>> =
        faces.iter().map(|h| Matrix::from_rows(beta_plane(h).unwrap()).unwrap()).collect();
    assert!(same_set(&computed, &printed_beta()));
}

#[test]
fn printed_alpha_entry_for_first_vertex() {
    let m = Matrix::from_rows(alpha_plane(&ProjPoint::<Q>::from_i64(&[1, 0, 0, 0])).unwrap()).unwrap();
    assert!(m.same_row_space(&to_matrix(&vec![e(4), e(5), e(6)])));
}
