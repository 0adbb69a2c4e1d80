//! The cone/fattening triangulation of the associahedron and its
//! parking-function labelling.
//!
//! `K^n` has the trees of `Y_{n+1}` as vertices. It is the cone with apex the
//! right comb `S` over the faces `γ(a; p, q)`, `a ≥ 1`, each of which is a
//! product `K^p × K^q` whose vertices are the grafts of a tree of `Y_{p+1}`
//! and a tree of `Y_{q+1}` at root edge `a`. A top simplex of `K^n` is
//! therefore the cone over a staircase simplex of such a product, chosen by
//! a top simplex of `K^p`, a top simplex of `K^q` and a `(p, q)`-shuffle.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::complex::{Face, PolytopeKind, Recipe, Simplex, Triangulation, Vertex, VertexKey};
use crate::geometry::{
    chain_check, geometric_checks, CheckResult, SampleOptions, ValidationReport,
};
use crate::parking::{
    compose_pf, enumerate_parking, parking_count, ParkingFunction, PiDecomposition,
};
use crate::shuffles::{enumerate_shuffles, staircase};
use crate::trees::{enumerate_trees, graft, right_comb, TamariPoset, Tree};
use crate::{Error, Result};

/// Largest dimension accepted by [`triangulate_associahedron`].
pub const MAX_TRIANGULATION: usize = 6;

/// Largest dimension on which the geometric checks run.
pub const MAX_GEOMETRIC_VALIDATION: usize = 4;

/// The face `γ(a; p, q)` of `K^{p+q+1}`: a root with `p + 2` edges, indexed
/// 0 to `p + 1` from right to left, whose edge `a` carries a vertex with
/// `q + 2` leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceGamma {
    pub a: usize,
    pub p: usize,
    pub q: usize,
}

impl FaceGamma {
    pub fn new(a: usize, p: usize, q: usize) -> Result<Self> {
        if a > p + 1 {
            return Err(Error::domain(format!("a = {a} not in 0..={}", p + 1)));
        }
        Ok(FaceGamma { a, p, q })
    }

    /// Dimension of the polytope this face bounds.
    pub fn n(&self) -> usize {
        self.p + self.q + 1
    }
}

/// The faces `γ(a; p, q)` with `a ≥ 1` and `p + q = n - 1`, ordered by `a`
/// then `p`. There are `n(n+1)/2` of them.
pub fn enumerate_cone_faces(n: usize) -> Vec<FaceGamma> {
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<FaceGamma> = (0..n)
        .flat_map(|p| (1..=p + 1).map(move |a| FaceGamma { a, p, q: n - 1 - p }))
        .collect();
    out.sort();
    out
}

/// The vertex of `K^n` named by the vertex `(s, t)` of `γ(a; p, q) ≅ K^p × K^q`.
pub fn face_vertex(gamma: FaceGamma, s: &Tree, t: &Tree) -> Result<Tree> {
    if s.vertex_count() != gamma.p + 1 || t.vertex_count() != gamma.q + 1 {
        return Err(Error::domain(format!(
            "trees of sizes ({}, {}) do not fit γ({}; {}, {})",
            s.vertex_count(),
            t.vertex_count(),
            gamma.a,
            gamma.p,
            gamma.q
        )));
    }
    graft(s, gamma.a, t)
}

/// Parking-function label of a simplex: `(a, θ(Φ(α), Φ(β) + (p + 1)))`,
/// empty for the point.
pub fn phi_label(recipe: &Recipe) -> Result<ParkingFunction> {
    match recipe {
        Recipe::Base => Ok(ParkingFunction::empty()),
        Recipe::Cone {
            face: Face::Gamma(g),
            theta,
            left,
            right,
        } => {
            let d = PiDecomposition {
                a: g.a as u32,
                theta: theta.clone(),
                f: phi_label(left)?,
                g: phi_label(right)?,
            };
            if d.p() != g.p || d.q() != g.q {
                return Err(Error::domain("sub-recipe dimensions do not match the face"));
            }
            compose_pf(&d)
        }
        Recipe::Cone { .. } => Err(Error::domain("only associahedron recipes carry labels")),
    }
}

struct LevelSimplex {
    vertices: Vec<Tree>,
    recipe: Arc<Recipe>,
    label: ParkingFunction,
}

/// Builds the top simplices of `K^0, ..., K^n`, each level from the lower ones.
fn build_levels(n: usize) -> Result<Vec<Vec<LevelSimplex>>> {
    let mut levels: Vec<Vec<LevelSimplex>> = vec![vec![LevelSimplex {
        vertices: vec![right_comb(1)],
        recipe: Arc::new(Recipe::Base),
        label: ParkingFunction::empty(),
    }]];
    for m in 1..=n {
        let poset = TamariPoset::new(m + 1)?;
        let apex = right_comb(m + 1);
        let mut level = Vec::new();
        for gamma in enumerate_cone_faces(m) {
            let thetas = enumerate_shuffles(gamma.p, gamma.q);
            for alpha in &levels[gamma.p] {
                for beta in &levels[gamma.q] {
                    for theta in &thetas {
                        let mut vertices = staircase(theta)
                            .into_iter()
                            .map(|(i, j)| face_vertex(gamma, &alpha.vertices[i], &beta.vertices[j]))
                            .collect::<Result<Vec<_>>>()?;
                        vertices.push(apex.clone());
                        for w in vertices.windows(2) {
                            if w[0] == w[1] || !poset.leq_trees(&w[0], &w[1])? {
                                return Err(Error::Invariant(format!(
                                    "staircase order {} -> {} is not Tamari increasing",
                                    w[0], w[1]
                                )));
                            }
                        }
                        let label = compose_pf(&PiDecomposition {
                            a: gamma.a as u32,
                            theta: theta.clone(),
                            f: alpha.label.clone(),
                            g: beta.label.clone(),
                        })?;
                        level.push(LevelSimplex {
                            vertices,
                            recipe: Arc::new(Recipe::Cone {
                                face: Face::Gamma(gamma),
                                theta: theta.clone(),
                                left: alpha.recipe.clone(),
                                right: beta.recipe.clone(),
                            }),
                            label,
                        });
                    }
                }
            }
        }
        levels.push(level);
    }
    Ok(levels)
}

/// The triangulation of `K^n` with vertex table `Y_{n+1}` in canonical order.
/// Simplices are ordered by face, then sub-simplices, then shuffle.
pub fn triangulate_associahedron(n: usize) -> Result<Triangulation> {
    if n > MAX_TRIANGULATION {
        return Err(Error::capacity(
            "associahedron triangulation",
            MAX_TRIANGULATION,
            n,
        ));
    }
    let mut levels = build_levels(n)?;
    let top = levels.swap_remove(n);
    let trees = enumerate_trees(n + 1)?;
    let index: HashMap<&Tree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let simplices = top
        .into_iter()
        .map(|s| Simplex {
            vertices: s.vertices.iter().map(|v| index[v]).collect(),
            label: Some(s.label),
            recipe: s.recipe,
        })
        .collect();
    let vertices = trees
        .iter()
        .map(|t| {
            let coords = t
                .loday_point()
                .expect("n + 1 ≥ 1 internal vertices")
                .into_iter()
                .map(|x| x as i64)
                .collect();
            Vertex {
                key: VertexKey::Tree(t.clone()),
                coords,
            }
        })
        .collect();
    Ok(Triangulation {
        kind: PolytopeKind::Associahedron,
        dim: n,
        vertices,
        simplices,
    })
}

/// Combinatorial checks for any `n ≤ 6`, geometric checks for `n ≤ 4`.
pub fn validate_associahedron_triangulation(
    tri: &Triangulation,
    opts: SampleOptions,
) -> Result<ValidationReport> {
    let n = tri.dim;
    if n > MAX_TRIANGULATION {
        return Err(Error::capacity(
            "associahedron validation",
            MAX_TRIANGULATION,
            n,
        ));
    }
    let mut report = ValidationReport::default();
    let trees: Vec<&Tree> = tri
        .vertices
        .iter()
        .map(|v| match &v.key {
            VertexKey::Tree(t) => Ok(t),
            VertexKey::Perm(_) => Err(Error::domain("permutation vertex in an associahedron")),
        })
        .collect::<Result<_>>()?;

    let expected = parking_count(n);
    let count = CheckResult::new(true)
        .with("simplices", tri.simplices.len() as u64)
        .with("expected", expected.to_string());
    report.insert(
        "count",
        if BigUint::from(tri.simplices.len()) == expected {
            count
        } else {
            count.fail("simplex count differs from (n+1)^(n-1)")
        },
    );

    let mut coords = CheckResult::new(true);
    for (i, (v, t)) in tri.vertices.iter().zip(&trees).enumerate() {
        let want: Option<Vec<i64>> = t
            .loday_point()
            .ok()
            .map(|p| p.into_iter().map(|x| x as i64).collect());
        if t.vertex_count() != n + 1 || want.as_ref() != Some(&v.coords) {
            coords = coords.fail(format!("vertex {i} ({t}) has wrong coordinates"));
        }
    }
    report.insert("coordinates", coords);

    let poset = TamariPoset::new(n + 1)?;
    let local: Vec<Option<usize>> = trees.iter().map(|t| poset.index_of(t)).collect();
    if local.iter().any(Option::is_none) {
        report.insert(
            "chain",
            CheckResult::new(false).fail("vertex outside Y_{n+1}"),
        );
    } else {
        let local: Vec<usize> = local.into_iter().flatten().collect();
        match trees.iter().position(|t| **t == right_comb(n + 1)) {
            Some(apex) => {
                let leq = |i: usize, j: usize| poset.leq(local[i], local[j]);
                report.insert("chain", chain_check(tri, apex, leq));
            }
            None => report.insert(
                "chain",
                CheckResult::new(false).fail("no right comb vertex"),
            ),
        }
    }

    let mut labels = CheckResult::new(true);
    let mut seen = HashSet::new();
    for (i, s) in tri.simplices.iter().enumerate() {
        match (&s.label, phi_label(&s.recipe)) {
            (Some(l), Ok(phi)) if *l == phi => {
                if !seen.insert(l.clone()) {
                    labels = labels.fail(format!("label {l} repeats at simplex {i}"));
                }
            }
            (Some(l), Ok(phi)) => {
                labels = labels.fail(format!("simplex {i}: label {l} but recipe gives {phi}"));
            }
            (None, _) => labels = labels.fail(format!("simplex {i} is unlabelled")),
            (_, Err(e)) => labels = labels.fail(format!("simplex {i}: {e}")),
        }
    }
    let all: HashSet<ParkingFunction> = enumerate_parking(n)?.into_iter().collect();
    if labels.pass && seen != all {
        labels = labels.fail("labels are not exactly the parking functions of length n");
    }
    report.insert("labels", labels.with("distinct", seen.len() as u64));

    let mut recipes = CheckResult::new(true);
    for (i, s) in tri.simplices.iter().enumerate() {
        if s.recipe.dimension() != n || !s.recipe.is_well_formed() {
            recipes = recipes.fail(format!("simplex {i} has a malformed recipe"));
        }
    }
    report.insert("recipes", recipes);

    if n <= MAX_GEOMETRIC_VALIDATION && report.get("coordinates").is_some_and(|c| c.pass) {
        geometric_checks(tri, opts, &mut report);
    }
    Ok(report)
}

/// Builds `K^n` and validates it.
pub fn validate_associahedron(n: usize, opts: SampleOptions) -> Result<ValidationReport> {
    validate_associahedron_triangulation(&triangulate_associahedron(n)?, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{left_comb, tamari_leq};

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn cone_faces() {
        let f = |a, p, q| FaceGamma { a, p, q };
        assert_eq!(enumerate_cone_faces(1), vec![f(1, 0, 0)]);
        assert_eq!(
            enumerate_cone_faces(2),
            vec![f(1, 0, 1), f(1, 1, 0), f(2, 1, 0)]
        );
        assert_eq!(enumerate_cone_faces(3).len(), 6);
        for n in 1..=8 {
            assert_eq!(enumerate_cone_faces(n).len(), n * (n + 1) / 2);
        }
        assert!(FaceGamma::new(3, 1, 0).is_err());
    }

    fn face_trees(gamma: FaceGamma) -> HashSet<Tree> {
        let mut out = HashSet::new();
        for s in enumerate_trees(gamma.p + 1).unwrap() {
            for u in enumerate_trees(gamma.q + 1).unwrap() {
                out.insert(face_vertex(gamma, &s, &u).unwrap());
            }
        }
        out
    }

    #[test]
    fn only_a_zero_faces_contain_the_apex() {
        for n in 1..=4 {
            let apex = right_comb(n + 1);
            for p in 0..n {
                for a in 0..=p + 1 {
                    let gamma = FaceGamma::new(a, p, n - 1 - p).unwrap();
                    assert_eq!(face_trees(gamma).contains(&apex), a == 0, "{gamma:?}");
                }
            }
        }
    }

    #[test]
    fn face_vertex_is_injective() {
        for n in 1..=4 {
            for gamma in enumerate_cone_faces(n) {
                let size = enumerate_trees(gamma.p + 1).unwrap().len()
                    * enumerate_trees(gamma.q + 1).unwrap().len();
                assert_eq!(face_trees(gamma).len(), size);
            }
        }
    }

    #[test]
    fn first_face_is_a_copy_of_the_lower_associahedron() {
        // γ(1; 0, n-1) embeds Y_n order-isomorphically
        let y1 = t("(..)");
        for n in 1..=4 {
            let gamma = FaceGamma::new(1, 0, n - 1).unwrap();
            let lower = enumerate_trees(n).unwrap();
            for u in &lower {
                for w in &lower {
                    let gu = face_vertex(gamma, &y1, u).unwrap();
                    let gw = face_vertex(gamma, &y1, w).unwrap();
                    assert_eq!(tamari_leq(u, w).unwrap(), tamari_leq(&gu, &gw).unwrap());
                }
            }
        }
        let gamma = FaceGamma::new(1, 1, 0).unwrap();
        let v = face_vertex(gamma, &left_comb(2), &Tree::Leaf).unwrap_err();
        assert!(matches!(v, Error::Domain(_)));
    }

    #[test]
    fn pentagon_is_the_fan_from_the_apex() {
        let tri = triangulate_associahedron(2).unwrap();
        let tris: Vec<Vec<Vec<i64>>> = tri
            .simplices
            .iter()
            .map(|s| {
                s.vertices
                    .iter()
                    .map(|&v| tri.vertices[v].coords.clone())
                    .collect()
            })
            .collect();
        assert_eq!(
            tris,
            vec![
                vec![vec![1, 2, 3], vec![2, 1, 3], vec![3, 2, 1]],
                vec![vec![2, 1, 3], vec![3, 1, 2], vec![3, 2, 1]],
                vec![vec![1, 2, 3], vec![1, 4, 1], vec![3, 2, 1]],
            ]
        );
    }

    #[test]
    fn counts() {
        let expected = [1usize, 1, 3, 16, 125, 1296];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(triangulate_associahedron(n).unwrap().simplices.len(), e);
        }
        assert!(triangulate_associahedron(7).is_err());
    }

    #[test]
    fn labels() {
        let one = triangulate_associahedron(1).unwrap();
        assert_eq!(
            phi_label(&one.simplices[0].recipe).unwrap().to_string(),
            "(1)"
        );
        let two = triangulate_associahedron(2).unwrap();
        let got: Vec<String> = two
            .simplices
            .iter()
            .map(|s| s.label.as_ref().unwrap().to_string())
            .collect();
        assert_eq!(got, vec!["(1,2)", "(1,1)", "(2,1)"]);
        for n in 0..=5 {
            let tri = triangulate_associahedron(n).unwrap();
            let labels: HashSet<ParkingFunction> = tri
                .simplices
                .iter()
                .map(|s| s.label.clone().unwrap())
                .collect();
            assert_eq!(labels.len(), tri.simplices.len());
            let all: HashSet<ParkingFunction> = enumerate_parking(n).unwrap().into_iter().collect();
            assert_eq!(labels, all);
        }
    }

    #[test]
    fn label_agrees_with_compose_on_parts() {
        let tri = triangulate_associahedron(4).unwrap();
        for s in &tri.simplices {
            if let Recipe::Cone {
                face: Face::Gamma(g),
                theta,
                left,
                right,
            } = s.recipe.as_ref()
            {
                let d = PiDecomposition {
                    a: g.a as u32,
                    theta: theta.clone(),
                    f: phi_label(left).unwrap(),
                    g: phi_label(right).unwrap(),
                };
                assert_eq!(s.label.clone().unwrap(), compose_pf(&d).unwrap());
            } else {
                panic!("top simplex without a cone recipe");
            }
        }
    }

    #[test]
    fn validation_passes_small() {
        for n in 0..=3 {
            let r = validate_associahedron(n, SampleOptions::default()).unwrap();
            assert!(r.pass(), "n={n}: {:?}", r);
        }
        let r = validate_associahedron(2, SampleOptions::default()).unwrap();
        let fp = r.get("facet_pairing").unwrap();
        assert_eq!(fp.details["internal"], 2);
        assert_eq!(fp.details["boundary"], 5);
    }

    #[test]
    fn validation_catches_a_corrupted_label() {
        let mut tri = triangulate_associahedron(3).unwrap();
        tri.simplices[0].label = tri.simplices[1].label.clone();
        let r = validate_associahedron_triangulation(&tri, SampleOptions::default()).unwrap();
        assert!(!r.pass());
        assert_eq!(r.failures(), vec!["labels"]);
    }

    #[test]
    fn validation_catches_a_dropped_simplex() {
        let mut tri = triangulate_associahedron(3).unwrap();
        tri.simplices.pop();
        let r = validate_associahedron_triangulation(&tri, SampleOptions::default()).unwrap();
        let failures = r.failures();
        assert!(failures.contains(&"count"));
        assert!(failures.contains(&"sampling"));
    }
}
