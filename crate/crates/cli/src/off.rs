//! OFF mesh export for triangulations of dimension at most 3.

use std::collections::BTreeSet;
use std::fmt::Write;

use associahedron::Triangulation;
use itertools::Itertools;

pub const MAX_DIM: usize = 3;

/// Orthonormal basis of the hyperplane `Σ x_i = const` in `R^(n+1)`,
/// Gram–Schmidt applied to `e_1 - e_2, ..., e_n - e_(n+1)` in that order.
fn hyperplane_basis(n: usize) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = vec![0.0; n + 1];
        v[i] = 1.0;
        v[i + 1] = -1.0;
        for b in &basis {
            let dot: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
            v.iter_mut().zip(b).for_each(|(x, y)| *x -= dot * y);
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
        basis.push(v);
    }
    basis
}

fn fmt_coord(x: f64) -> String {
    let s = format!("{x:.9}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0.000000000".to_string()
    } else {
        s
    }
}

/// Vertices projected isometrically to `R^3` (padded with zeros), faces are
/// the top simplices for `n ≤ 2` and their distinct triangles for `n = 3`.
pub fn to_off(tri: &Triangulation) -> String {
    let n = tri.dim;
    assert!(n <= MAX_DIM, "OFF export supports n <= {MAX_DIM}");
    let basis = hyperplane_basis(n);
    let faces: BTreeSet<Vec<usize>> = tri
        .simplices
        .iter()
        .flat_map(|s| {
            let mut verts = s.vertices.clone();
            verts.sort_unstable();
            if n == MAX_DIM {
                verts.into_iter().combinations(3).collect::<Vec<_>>()
            } else {
                vec![verts]
            }
        })
        .collect();

    let mut out = String::from("OFF\n");
    writeln!(out, "{} {} 0", tri.vertices.len(), faces.len()).unwrap();
    for v in &tri.vertices {
        let mut xyz = [0.0f64; 3];
        for (k, b) in basis.iter().enumerate() {
            xyz[k] = v.coords.iter().zip(b).map(|(&c, y)| c as f64 * y).sum();
        }
        writeln!(out, "{}", xyz.iter().map(|&x| fmt_coord(x)).join(" ")).unwrap();
    }
    for f in &faces {
        writeln!(out, "{} {}", f.len(), f.iter().join(" ")).unwrap();
    }
    out
}
