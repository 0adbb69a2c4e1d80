//! The permutohedron `P^n`, its weak order, its facets and the cone/staircase
//! triangulation counted by `ZP_n`.
//!
//! Facets are encoded by the set `A` of positions carrying the `|A|` smallest
//! values. Such a facet is the product of the permutohedra on the patterns
//! of `A` and of its complement, and the facet through the South pole
//! (the reversal) is the suffix set.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::complex::{Face, PolytopeKind, Recipe, Simplex, Triangulation, Vertex, VertexKey};
use crate::geometry::{
    chain_check, geometric_checks, CheckResult, SampleOptions, ValidationReport,
};
use crate::numbers::binomial;
use crate::parking::fmt_seq;
use crate::shuffles::{enumerate_shuffles, staircase};
use crate::{Error, Result};

/// Largest dimension accepted by [`triangulate_permutohedron`].
pub const MAX_TRIANGULATION: usize = 3;

/// A bijection of `{1, ..., m}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let m = values.len();
        let mut seen = vec![false; m + 1];
        for &v in &values {
            if v == 0 || v as usize > m || seen[v as usize] {
                return Err(Error::domain(format!(
                    "{} is not a permutation of 1..={m}",
                    fmt_seq(&values)
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m as u32).collect())
    }

    pub fn reversal(m: usize) -> Self {
        Permutation((1..=m as u32).rev().collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Position pairs `(i, j)`, `i < j`, with `σ(i) > σ(j)` (0-based).
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Exchanges of the values `k` and `k + 1` where `k` is placed first.
    ///
    /// With vertices at `(σ(1), ..., σ(m))` these are exactly the edges of
    /// the permutohedron; each adds one inversion.
    pub fn bruhat_covers(&self) -> Vec<Permutation> {
        let m = self.0.len();
        let mut pos = vec![0usize; m + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v as usize] = i;
        }
        (1..m)
            .filter(|&k| pos[k] < pos[k + 1])
            .map(|k| {
                let mut v = self.0.clone();
                v.swap(pos[k], pos[k + 1]);
                Permutation(v)
            })
            .collect()
    }

    /// Vertex `(σ(1), ..., σ(m))` of the permutohedron.
    pub fn point(&self) -> Vec<u64> {
        self.0.iter().map(|&v| u64::from(v)).collect()
    }
}

/// Coordinates of the vertex of `σ`.
pub fn permuto_point(sigma: &Permutation) -> Vec<u64> {
    sigma.point()
}

/// Weak order: inclusion of inversion sets.
pub fn weak_leq(a: &Permutation, b: &Permutation) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::domain("permutations of different sizes"));
    }
    let ib = b.inversions();
    Ok(a.inversions().iter().all(|x| ib.binary_search(x).is_ok()))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_seq(&self.0))
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Permutation::new(Vec::<u32>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// All permutations of `1..=m` in lexicographic order.
pub fn enumerate_permutations(m: usize) -> Vec<Permutation> {
    (1..=m as u32).permutations(m).map(Permutation).collect()
}

/// A weakly increasing map from `{0, ..., n+1}` onto `{0, ..., p+1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedSurjection(Vec<u32>);

impl OrderedSurjection {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let ok = values.first() == Some(&0)
            && values.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1);
        if !ok {
            return Err(Error::domain(format!(
                "{} is not an ordered surjection",
                fmt_seq(&values)
            )));
        }
        Ok(OrderedSurjection(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// Largest value, i.e. `p + 1`.
    pub fn top(&self) -> u32 {
        *self.0.last().expect("nonempty")
    }

    /// `(0, 1, ..., p+1, p+1, ..., p+1)` on `[n+1]`: the face through the
    /// South pole.
    pub fn south_pole_face(n: usize, p: usize) -> Result<Self> {
        if p + 1 > n + 1 {
            return Err(Error::domain(format!("p = {p} out of range for n = {n}")));
        }
        let values = (0..=n as u32 + 1).map(|i| i.min(p as u32 + 1)).collect();
        OrderedSurjection::new(values)
    }
}

/// The other reading `(0, 1, ..., p, p, ..., p)` of the South-pole face,
/// which only reaches `[p]` and so is not a surjection onto `[p+1]`.
pub fn south_pole_face_short_reading(n: usize, p: usize) -> Vec<u32> {
    (0..=n as u32 + 1).map(|i| i.min(p as u32)).collect()
}

/// All ordered surjections `[n+1] ↠ [p+1]`, lexicographically.
pub fn enumerate_ordered_surjections(n: usize, p: usize) -> Vec<OrderedSurjection> {
    // choose which p+1 of the n+1 steps go up
    (0..=n)
        .combinations(p + 1)
        .map(|ups| {
            let mut v = vec![0u32];
            for step in 0..=n {
                let last = *v.last().expect("nonempty");
                v.push(if ups.contains(&step) { last + 1 } else { last });
            }
            OrderedSurjection(v)
        })
        .sorted()
        .collect()
}

/// Facet of `P^n`: the positions `A ⊂ {1, ..., n+1}` carrying the values
/// `1..=|A|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetSubset {
    ground: usize,
    positions: Vec<usize>,
}

impl FacetSubset {
    pub fn new(ground: usize, mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        positions.dedup();
        let ok = !positions.is_empty()
            && positions.len() < ground
            && positions.iter().all(|&i| (1..=ground).contains(&i));
        if !ok {
            return Err(Error::domain(format!(
                "{positions:?} is not a nonempty proper subset of 1..={ground}"
            )));
        }
        Ok(FacetSubset { ground, positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    /// Dimension of the first factor.
    pub fn p(&self) -> usize {
        self.positions.len() - 1
    }

    /// Dimension of the second factor.
    pub fn q(&self) -> usize {
        self.ground - self.positions.len() - 1
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        let k = self.positions.len() as u32;
        self.positions.iter().all(|&i| sigma.values()[i - 1] <= k)
    }

    fn is_suffix(&self) -> bool {
        let start = self.ground - self.positions.len() + 1;
        self.positions.iter().copied().eq(start..=self.ground)
    }
}

/// `SM(n, p) = C(n+1, p+1) - 1`.
pub fn sm_count(n: usize, p: usize) -> Result<BigUint> {
    if p >= n {
        return Err(Error::domain(format!("p = {p} not in 0..{n}")));
    }
    Ok(binomial(n as u64 + 1, p as u64 + 1) - 1u32)
}

/// All facets of `P^n`, by size then lexicographically.
pub fn enumerate_facets(n: usize) -> Vec<FacetSubset> {
    (1..=n)
        .flat_map(|k| {
            (1..=n + 1)
                .combinations(k)
                .map(move |c| FacetSubset::new(n + 1, c).expect("proper subset"))
        })
        .collect()
}

/// Facets not containing the South pole: every facet but the suffix set of
/// each size.
pub fn enumerate_cone_facets(n: usize) -> Vec<FacetSubset> {
    enumerate_facets(n)
        .into_iter()
        .filter(|f| !f.is_suffix())
        .collect()
}

/// The permutation carrying the pattern `sigma1` on the positions of `facet`
/// and `|A| + sigma2` on the complement.
pub fn facet_embed(
    facet: &FacetSubset,
    sigma1: &Permutation,
    sigma2: &Permutation,
) -> Result<Permutation> {
    let k = facet.positions.len();
    if sigma1.len() != k || sigma2.len() != facet.ground - k {
        return Err(Error::domain(format!(
            "pattern sizes ({}, {}) do not match facet of size {k} in {}",
            sigma1.len(),
            sigma2.len(),
            facet.ground
        )));
    }
    let mut values = vec![0u32; facet.ground];
    let mut first = sigma1.values().iter();
    let mut second = sigma2.values().iter();
    for (i, slot) in values.iter_mut().enumerate() {
        *slot = if facet.positions.binary_search(&(i + 1)).is_ok() {
            *first.next().expect("sized")
        } else {
            k as u32 + second.next().expect("sized")
        };
    }
    Ok(Permutation(values))
}

/// `ZP_0, ..., ZP_n` from the recursion
/// `ZP_n = Σ_p SM(n, p) · C(n-1, p) · ZP_p · ZP_{n-1-p}`.
pub fn zp_table(n: usize) -> Vec<BigUint> {
    let mut zp = vec![BigUint::one()];
    for m in 1..=n {
        let mut acc = BigUint::zero();
        for p in 0..m {
            acc += sm_count(m, p).expect("p < m")
                * binomial((m - 1) as u64, p as u64)
                * &zp[p]
                * &zp[m - 1 - p];
        }
        zp.push(acc);
    }
    zp
}

pub fn zp_count(n: usize) -> BigUint {
    zp_table(n).swap_remove(n)
}

struct LevelSimplex {
    vertices: Vec<Permutation>,
    recipe: Arc<Recipe>,
}

/// Cone from the reversal over staircase simplices of the facets not
/// containing it.
pub fn triangulate_permutohedron(n: usize) -> Result<Triangulation> {
    if n > MAX_TRIANGULATION {
        return Err(Error::capacity(
            "permutohedron triangulation",
            MAX_TRIANGULATION,
            n,
        ));
    }
    let mut levels: Vec<Vec<LevelSimplex>> = vec![vec![LevelSimplex {
        vertices: vec![Permutation::identity(1)],
        recipe: Arc::new(Recipe::Base),
    }]];
    for m in 1..=n {
        let apex = Permutation::reversal(m + 1);
        let mut level = Vec::new();
        for facet in enumerate_cone_facets(m) {
            let (p, q) = (facet.p(), facet.q());
            let thetas = enumerate_shuffles(p, q);
            for alpha in &levels[p] {
                for beta in &levels[q] {
                    for theta in &thetas {
                        let mut vertices = staircase(theta)
                            .into_iter()
                            .map(|(i, j)| {
                                facet_embed(&facet, &alpha.vertices[i], &beta.vertices[j])
                            })
                            .collect::<Result<Vec<_>>>()?;
                        vertices.push(apex.clone());
                        for w in vertices.windows(2) {
                            if w[0] == w[1] || !weak_leq(&w[0], &w[1])? {
                                return Err(Error::Invariant(format!(
                                    "staircase order {} -> {} is not weak-order increasing",
                                    w[0], w[1]
                                )));
                            }
                        }
                        level.push(LevelSimplex {
                            vertices,
                            recipe: Arc::new(Recipe::Cone {
                                face: Face::Subset(facet.clone()),
                                theta: theta.clone(),
                                left: alpha.recipe.clone(),
                                right: beta.recipe.clone(),
                            }),
                        });
                    }
                }
            }
        }
        levels.push(level);
    }

    let perms = enumerate_permutations(n + 1);
    let index: HashMap<&Permutation, usize> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let simplices = levels[n]
        .iter()
        .map(|s| Simplex {
            vertices: s.vertices.iter().map(|v| index[v]).collect(),
            label: None,
            recipe: s.recipe.clone(),
        })
        .collect();
    let vertices = perms
        .iter()
        .map(|p| Vertex {
            key: VertexKey::Perm(p.clone()),
            coords: p.values().iter().map(|&x| i64::from(x)).collect(),
        })
        .collect();
    Ok(Triangulation {
        kind: PolytopeKind::Permutohedron,
        dim: n,
        vertices,
        simplices,
    })
}

/// Full validation of a permutohedron triangulation.
pub fn validate_permutohedron_triangulation(
    tri: &Triangulation,
    opts: SampleOptions,
) -> Result<ValidationReport> {
    let n = tri.dim;
    if n > MAX_TRIANGULATION {
        return Err(Error::capacity(
            "permutohedron validation",
            MAX_TRIANGULATION,
            n,
        ));
    }
    let mut report = ValidationReport::default();
    let perms: Vec<&Permutation> = tri
        .vertices
        .iter()
        .map(|v| match &v.key {
            VertexKey::Perm(p) => Ok(p),
            VertexKey::Tree(_) => Err(Error::domain("tree vertex in a permutohedron")),
        })
        .collect::<Result<_>>()?;

    let expected = zp_count(n);
    let count = CheckResult::new(true)
        .with("simplices", tri.simplices.len() as u64)
        .with("expected", expected.to_string());
    report.insert(
        "count",
        if BigUint::from(tri.simplices.len()) == expected {
            count
        } else {
            count.fail("simplex count differs from ZP_n")
        },
    );

    let mut coords = CheckResult::new(true);
    for (i, (v, p)) in tri.vertices.iter().zip(&perms).enumerate() {
        let want: Vec<i64> = p.values().iter().map(|&x| i64::from(x)).collect();
        if p.len() != n + 1 || v.coords != want {
            coords = coords.fail(format!("vertex {i} has wrong coordinates"));
        }
    }
    report.insert("coordinates", coords);

    let reversal = Permutation::reversal(n + 1);
    match perms.iter().position(|p| **p == reversal) {
        Some(apex) => {
            let leq = |i: usize, j: usize| weak_leq(perms[i], perms[j]).unwrap_or(false);
            report.insert("chain", chain_check(tri, apex, leq));
        }
        None => report.insert(
            "chain",
            CheckResult::new(false).fail("no South pole vertex"),
        ),
    }

    let mut recipes = CheckResult::new(true);
    for (i, s) in tri.simplices.iter().enumerate() {
        if s.recipe.dimension() != n || !s.recipe.is_well_formed() {
            recipes = recipes.fail(format!("simplex {i} has a malformed recipe"));
        }
    }
    report.insert("recipes", recipes);

    if report.get("coordinates").is_some_and(|c| c.pass) {
        geometric_checks(tri, opts, &mut report);
    }
    Ok(report)
}

pub fn validate_permutohedron(n: usize, opts: SampleOptions) -> Result<ValidationReport> {
    validate_permutohedron_triangulation(&triangulate_permutohedron(n)?, opts)
}

/// Per-`p` facet counts in both encodings: `(surjections, subsets)`.
pub fn facet_census(n: usize) -> BTreeMap<usize, (usize, usize)> {
    let subsets = enumerate_facets(n);
    (0..n)
        .map(|p| {
            let surj = enumerate_ordered_surjections(n, p).len();
            let sub = subsets.iter().filter(|f| f.p() == p).count();
            (p, (surj, sub))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn reachable(a: &Permutation, b: &Permutation) -> bool {
        let mut seen = HashSet::from([a.clone()]);
        let mut queue = VecDeque::from([a.clone()]);
        while let Some(x) = queue.pop_front() {
            if &x == b {
                return true;
            }
            for c in x.bruhat_covers() {
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        false
    }

    #[test]
    fn points() {
        assert_eq!(permuto_point(&Permutation::identity(3)), vec![1, 2, 3]);
        assert_eq!(permuto_point(&Permutation::reversal(4)), vec![4, 3, 2, 1]);
        let pts: HashSet<Vec<u64>> = enumerate_permutations(3)
            .iter()
            .map(permuto_point)
            .collect();
        assert_eq!(pts.len(), 6);
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }

    #[test]
    fn covers_are_the_polytope_edges() {
        // vertices of the permutohedron are adjacent iff at squared distance 2
        for m in 1..=4 {
            let all = enumerate_permutations(m);
            for a in &all {
                let covers: HashSet<Permutation> = a.bruhat_covers().into_iter().collect();
                for b in &all {
                    let d2: i64 = a
                        .values()
                        .iter()
                        .zip(b.values())
                        .map(|(&x, &y)| (i64::from(x) - i64::from(y)).pow(2))
                        .sum();
                    let edge = d2 == 2;
                    let up = a.inversions().len() < b.inversions().len();
                    assert_eq!(covers.contains(b), edge && up, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn covers() {
        assert_eq!(Permutation::identity(3).bruhat_covers().len(), 2);
        assert!(Permutation::reversal(4).bruhat_covers().is_empty());
        let edges: usize = enumerate_permutations(3)
            .iter()
            .map(|p| p.bruhat_covers().len())
            .sum();
        assert_eq!(edges, 6);
    }

    #[test]
    fn weak_order_is_cover_reachability() {
        for m in 1..=4 {
            let all = enumerate_permutations(m);
            for a in &all {
                for b in &all {
                    assert_eq!(weak_leq(a, b).unwrap(), reachable(a, b), "{a} {b}");
                }
                assert!(weak_leq(&Permutation::identity(m), a).unwrap());
                assert!(weak_leq(a, &Permutation::reversal(m)).unwrap());
            }
        }
    }

    #[test]
    fn sm_counts() {
        assert_eq!(sm_count(4, 1).unwrap(), BigUint::from(9u32));
        assert_eq!(sm_count(2, 0).unwrap(), BigUint::from(2u32));
        assert_eq!(sm_count(2, 1).unwrap(), BigUint::from(2u32));
        assert!(sm_count(2, 2).is_err());
        assert_eq!(enumerate_cone_facets(2).len(), 4);
    }

    #[test]
    fn facets_of_p3() {
        let all = enumerate_facets(3);
        assert_eq!(all.len(), 14);
        let hexagons = all.iter().filter(|f| f.p() == 0 || f.q() == 0).count();
        assert_eq!(hexagons, 8);
        let south = Permutation::reversal(4);
        let through_s: Vec<Vec<usize>> = all
            .iter()
            .filter(|f| f.contains(&south))
            .map(|f| f.positions().to_vec())
            .collect();
        assert_eq!(through_s, vec![vec![4], vec![3, 4], vec![2, 3, 4]]);
    }

    #[test]
    fn cone_facets_are_those_missing_the_south_pole() {
        for n in 1..=5 {
            let south = Permutation::reversal(n + 1);
            let cone: Vec<_> = enumerate_cone_facets(n);
            let geometric: Vec<_> = enumerate_facets(n)
                .into_iter()
                .filter(|f| !f.contains(&south))
                .collect();
            assert_eq!(cone, geometric);
            for p in 0..n {
                let k = cone.iter().filter(|f| f.p() == p).count();
                assert_eq!(BigUint::from(k), sm_count(n, p).unwrap());
            }
        }
    }

    #[test]
    fn embed_example() {
        let a = FacetSubset::new(3, vec![1]).unwrap();
        let e = facet_embed(&a, &perm(&[1]), &Permutation::reversal(2)).unwrap();
        assert_eq!(e, perm(&[1, 3, 2]));
        assert!(facet_embed(&a, &perm(&[1]), &perm(&[1])).is_err());
        assert!(FacetSubset::new(3, vec![1, 2, 3]).is_err());
        assert!(FacetSubset::new(3, vec![]).is_err());
    }

    #[test]
    fn embed_image_is_the_geometric_facet() {
        for n in 1..=4 {
            let all = enumerate_permutations(n + 1);
            for facet in enumerate_facets(n) {
                let k = facet.positions().len();
                let minimum: u64 = (1..=k as u64).sum();
                let geometric: HashSet<&Permutation> = all
                    .iter()
                    .filter(|s| {
                        facet
                            .positions()
                            .iter()
                            .map(|&i| u64::from(s.values()[i - 1]))
                            .sum::<u64>()
                            == minimum
                    })
                    .collect();
                let mut image = HashSet::new();
                for s1 in enumerate_permutations(k) {
                    for s2 in enumerate_permutations(n + 1 - k) {
                        image.insert(facet_embed(&facet, &s1, &s2).unwrap());
                    }
                }
                assert_eq!(image.len(), geometric.len());
                assert!(image.iter().all(|p| geometric.contains(p)));
            }
        }
    }

    #[test]
    fn surjection_and_subset_counts_agree() {
        for n in 1..=6 {
            let census = facet_census(n);
            let mut total = 0;
            for (p, (surj, sub)) in census {
                assert_eq!(surj, sub, "n={n} p={p}");
                assert_eq!(BigUint::from(surj), binomial(n as u64 + 1, p as u64 + 1));
                total += surj;
            }
            assert_eq!(total, (1 << (n + 1)) - 2);
        }
    }

    #[test]
    fn south_pole_face_readings() {
        for n in 1..=5 {
            for p in 0..n {
                let f0 = OrderedSurjection::south_pole_face(n, p).unwrap();
                assert_eq!(f0.top() as usize, p + 1);
                let all = enumerate_ordered_surjections(n, p);
                assert!(all.contains(&f0));
                let others = all.iter().filter(|f| **f != f0).count();
                assert_eq!(BigUint::from(others), sm_count(n, p).unwrap());
                // the short reading never reaches p + 1
                let short = south_pole_face_short_reading(n, p);
                assert_eq!(*short.iter().max().unwrap() as usize, p);
            }
        }
    }

    #[test]
    fn zp_values() {
        let expected: [u64; 9] = [1, 1, 4, 34, 488, 10512, 316224, 12649104, 649094752];
        let table = zp_table(8);
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(table[n], BigUint::from(e), "n={n}");
        }
    }

    #[test]
    fn triangulation_counts() {
        for n in 0..=3 {
            let tri = triangulate_permutohedron(n).unwrap();
            assert_eq!(BigUint::from(tri.simplices.len()), zp_count(n));
        }
        assert!(triangulate_permutohedron(4).is_err());
    }

    #[test]
    fn hexagon() {
        let tri = triangulate_permutohedron(2).unwrap();
        assert_eq!(tri.simplices.len(), 4);
        let south = tri
            .vertices
            .iter()
            .position(|v| v.key == VertexKey::Perm(Permutation::reversal(3)))
            .unwrap();
        assert!(tri
            .simplices
            .iter()
            .all(|s| s.vertices.last() == Some(&south)));
        let r = validate_permutohedron(2, SampleOptions::default()).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.get("facet_pairing").unwrap().details["internal"], 3);
        assert_eq!(r.get("facet_pairing").unwrap().details["boundary"], 6);
    }

    #[test]
    fn validation_small() {
        for n in 0..=1 {
            let r = validate_permutohedron(n, SampleOptions::default()).unwrap();
            assert!(r.pass(), "n={n}: {:?}", r.failures());
        }
    }
}
