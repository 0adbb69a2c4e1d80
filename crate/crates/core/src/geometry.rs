//! Exact integer checks that a list of simplices triangulates the convex hull
//! of its vertex set.
//!
//! Every polytope handled here lives in a hyperplane `Σ x = c` of `R^{n+1}`.
//! No floating point is used anywhere in this module.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::Value;

use crate::complex::Triangulation;
use crate::rng::SplitMix64;
use crate::{Error, Result};

/// Square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    size: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::domain("matrix is not square"));
        }
        Ok(IntMatrix {
            size,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.size + c]
    }

    /// Matrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        let size = self.size - 1;
        let mut data = Vec::with_capacity(size * size);
        for i in (0..self.size).filter(|&i| i != r) {
            for j in (0..self.size).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix { size, data }
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division
    /// is exact.
    pub fn det(&self) -> BigInt {
        let n = self.size;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut m = self.data.clone();
        let mut sign = 1;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !m[i * n + k].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j]) / &prev;
                    m[i * n + j] = v;
                }
            }
            prev = m[k * n + k].clone();
        }
        let d = m[n * n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }
}

/// Orientation determinant of `n + 1` points of `R^{n+1}` sharing one
/// coordinate sum: rows are the edge vectors `v_i - v_0` followed by the
/// all-ones row. Zero iff the simplex is degenerate inside the hyperplane.
pub fn simplex_det(points: &[&[i64]]) -> Result<BigInt> {
    let Some(first) = points.first() else {
        return Err(Error::domain("no points"));
    };
    let m = first.len();
    if points.len() != m {
        return Err(Error::domain(format!(
            "{} points in R^{m}; expected {m}",
            points.len()
        )));
    }
    if points.iter().any(|p| p.len() != m) {
        return Err(Error::domain("points of different dimensions"));
    }
    let sum: i64 = first.iter().sum();
    if points.iter().any(|p| p.iter().sum::<i64>() != sum) {
        return Err(Error::domain("points do not share a coordinate sum"));
    }
    let mut rows: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(first.iter())
                .map(|(x, y)| BigInt::from(x - y))
                .collect()
        })
        .collect();
    rows.push(vec![BigInt::from(1); m]);
    Ok(IntMatrix::from_rows(rows)?.det())
}

/// True iff every point's coordinates sum to `n(n+1)/2`.
pub fn hyperplane_check<P: AsRef<[i64]>>(points: &[P], n: usize) -> bool {
    let target = (n * (n + 1) / 2) as i64;
    points
        .iter()
        .all(|p| p.as_ref().iter().sum::<i64>() == target)
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct CheckResult {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(flatten)]
    pub details: BTreeMap<String, Value>,
}

impl CheckResult {
    pub fn new(pass: bool) -> Self {
        CheckResult {
            pass,
            counterexample: None,
            details: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn fail(mut self, counterexample: impl Into<String>) -> Self {
        self.pass = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(counterexample.into());
        }
        self
    }
}

/// Named check results; serializes as `{check_name: {pass, details...}}`.
#[derive(Clone, Debug, Default, PartialEq, serde::Serialize)]
#[serde(transparent)]
pub struct ValidationReport {
    pub checks: BTreeMap<String, CheckResult>,
}

impl ValidationReport {
    pub fn insert(&mut self, name: &str, result: CheckResult) {
        self.checks.insert(name.to_string(), result);
    }

    pub fn pass(&self) -> bool {
        self.checks.values().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.get(name)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, c)| !c.pass)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleOptions {
    pub seed: u64,
    /// Interior points drawn per simplex.
    pub per_simplex: usize,
    /// Random convex combinations of all vertices.
    pub hull: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            seed: 42,
            per_simplex: 50,
            hull: 200,
        }
    }
}

/// Every simplex has a nonzero orientation determinant. Also records the
/// sign census and the sum of absolute determinants.
pub fn nondegeneracy_check(tri: &Triangulation) -> CheckResult {
    let mut result = CheckResult::new(true);
    let (mut pos, mut neg) = (0u64, 0u64);
    let mut total = BigInt::zero();
    for (i, s) in tri.simplices.iter().enumerate() {
        match simplex_det(&tri.coords_of(s)) {
            Ok(d) if d.is_zero() => {
                result = result.fail(format!("simplex {i} is degenerate"));
            }
            Ok(d) => {
                if d.is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                total += d.abs();
            }
            Err(e) => result = result.fail(format!("simplex {i}: {e}")),
        }
    }
    result
        .with("positive", pos)
        .with("negative", neg)
        .with("abs_det_sum", total.to_string())
}

/// Pseudomanifold census with boundary support.
///
/// Every codimension-one face must lie in one or two simplices. Faces in two
/// simplices must separate their opposite vertices; faces in one simplex
/// must span a supporting hyperplane of the whole vertex set.
pub fn facet_pairing_check(tri: &Triangulation) -> CheckResult {
    let mut result = CheckResult::new(true);
    if tri.dim == 0 {
        let boundary = tri.simplices.len() as u64;
        return result.with("internal", 0u64).with("boundary", boundary);
    }
    // facet (sorted vertex ids) -> [(simplex, opposite vertex)]
    let mut census: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
    for (si, s) in tri.simplices.iter().enumerate() {
        for drop in 0..s.vertices.len() {
            let mut facet: Vec<usize> = s
                .vertices
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != drop)
                .map(|(_, &v)| v)
                .collect();
            facet.sort_unstable();
            census
                .entry(facet)
                .or_default()
                .push((si, s.vertices[drop]));
        }
    }
    let mut facets: Vec<_> = census.into_iter().collect();
    facets.sort();
    let (mut internal, mut boundary) = (0u64, 0u64);
    let orient = |facet: &[usize], apex: usize| -> Result<BigInt> {
        let mut pts: Vec<&[i64]> = facet
            .iter()
            .map(|&v| tri.vertices[v].coords.as_slice())
            .collect();
        pts.push(tri.vertices[apex].coords.as_slice());
        simplex_det(&pts)
    };
    for (facet, owners) in &facets {
        match owners.len() {
            2 => {
                internal += 1;
                let a = orient(facet, owners[0].1);
                let b = orient(facet, owners[1].1);
                match (a, b) {
                    (Ok(a), Ok(b)) if a.signum() * b.signum() < BigInt::zero() => {}
                    _ => {
                        result = result.fail(format!(
                            "simplices {} and {} lie on the same side of facet {facet:?}",
                            owners[0].0, owners[1].0
                        ))
                    }
                }
            }
            1 => {
                boundary += 1;
                let (mut pos, mut neg) = (false, false);
                for w in 0..tri.vertices.len() {
                    match orient(facet, w) {
                        Ok(d) if d.is_positive() => pos = true,
                        Ok(d) if d.is_negative() => neg = true,
                        Ok(_) => {}
                        Err(_) => {
                            pos = true;
                            neg = true;
                        }
                    }
                }
                if pos == neg {
                    result = result.fail(format!(
                        "boundary facet {facet:?} of simplex {} is not supporting",
                        owners[0].0
                    ));
                }
            }
            k => {
                result = result.fail(format!("facet {facet:?} lies in {k} simplices"));
            }
        }
    }
    result.with("internal", internal).with("boundary", boundary)
}

/// Barycentric sign tests for one simplex in projected homogeneous form.
///
/// Points of the hyperplane are projected to their first `n` coordinates;
/// row `i` of `cofactors` gives the linear functional `L_i(z, w)` equal to
/// the determinant with vertex row `i` replaced by `(z, w)`.
struct SimplexTest {
    det_sign: i32,
    cofactors: Vec<Vec<BigInt>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Location {
    Interior,
    Boundary,
    Outside,
}

impl SimplexTest {
    fn new(points: &[&[i64]]) -> Option<Self> {
        let n = points.len() - 1;
        let rows: Vec<Vec<BigInt>> = points
            .iter()
            .map(|p| {
                let mut r: Vec<BigInt> = p[..n].iter().map(|&x| BigInt::from(x)).collect();
                r.push(BigInt::from(1));
                r
            })
            .collect();
        let m = IntMatrix::from_rows(rows).ok()?;
        let det = m.det();
        if det.is_zero() {
            return None;
        }
        let cofactors = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|k| {
                        let c = m.minor(i, k).det();
                        if (i + k) % 2 == 1 {
                            -c
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        Some(SimplexTest {
            det_sign: if det.is_positive() { 1 } else { -1 },
            cofactors,
        })
    }

    /// Locates the rational point `z / w`, `w > 0`.
    fn locate(&self, z: &[BigInt], w: &BigInt) -> Location {
        let mut on_boundary = false;
        for row in &self.cofactors {
            let (last, head) = row.split_last().expect("nonempty row");
            let mut v = last * w;
            for (c, x) in head.iter().zip(z) {
                v += c * x;
            }
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s == 0 {
                on_boundary = true;
            } else if s != self.det_sign {
                return Location::Outside;
            }
        }
        if on_boundary {
            Location::Boundary
        } else {
            Location::Interior
        }
    }
}

fn weighted_point(points: &[&[i64]], weights: &[u64], n: usize) -> (Vec<BigInt>, BigInt) {
    let mut z = vec![BigInt::zero(); n];
    let mut w = BigInt::zero();
    for (p, &wt) in points.iter().zip(weights) {
        if wt == 0 {
            continue;
        }
        let wt = BigInt::from(wt);
        for (acc, &x) in z.iter_mut().zip(p.iter()) {
            *acc += &wt * x;
        }
        w += wt;
    }
    (z, w)
}

/// Seeded sampling in exact rationals.
///
/// Disjointness: `per_simplex` points with strictly positive barycentric
/// weights in each simplex must lie in no other closed simplex. Coverage:
/// `hull` random convex combinations of all vertices must each lie in some
/// closed simplex.
pub fn sample_membership_check(tri: &Triangulation, opts: SampleOptions) -> CheckResult {
    let mut result = CheckResult::new(true);
    let n = tri.dim;
    let tests: Vec<Option<SimplexTest>> = tri
        .simplices
        .iter()
        .map(|s| SimplexTest::new(&tri.coords_of(s)))
        .collect();
    if let Some(i) = tests.iter().position(Option::is_none) {
        return result.fail(format!("simplex {i} is degenerate"));
    }
    let tests: Vec<SimplexTest> = tests.into_iter().flatten().collect();

    let mut overlaps = 0u64;
    for (si, s) in tri.simplices.iter().enumerate() {
        let pts = tri.coords_of(s);
        let mut rng = SplitMix64::derived(opts.seed, si as u64);
        for _ in 0..opts.per_simplex {
            let weights: Vec<u64> = pts.iter().map(|_| 1 + rng.below(1000)).collect();
            let (z, w) = weighted_point(&pts, &weights, n);
            if tests[si].locate(&z, &w) != Location::Interior {
                overlaps += 1;
                result = result.fail(format!("sample of simplex {si} is not interior to it"));
                continue;
            }
            if let Some(other) = (0..tests.len())
                .find(|&ti| ti != si && tests[ti].locate(&z, &w) != Location::Outside)
            {
                overlaps += 1;
                result = result.fail(format!(
                    "interior sample of simplex {si} lies in simplex {other}"
                ));
            }
        }
    }

    let mut uncovered = 0u64;
    let all: Vec<&[i64]> = tri.vertices.iter().map(|v| v.coords.as_slice()).collect();
    let mut rng = SplitMix64::derived(opts.seed, u64::MAX);
    for k in 0..opts.hull {
        let mut weights: Vec<u64> = all
            .iter()
            .map(|_| {
                if rng.below(2) == 0 {
                    0
                } else {
                    1 + rng.below(1000)
                }
            })
            .collect();
        if weights.iter().all(|&w| w == 0) {
            let i = rng.below(weights.len() as u64) as usize;
            weights[i] = 1;
        }
        let (z, w) = weighted_point(&all, &weights, n);
        if !tests.iter().any(|t| t.locate(&z, &w) != Location::Outside) {
            uncovered += 1;
            result = result.fail(format!("hull sample {k} lies in no simplex"));
        }
    }
    result
        .with("seed", opts.seed)
        .with(
            "interior_samples",
            (opts.per_simplex * tri.simplices.len()) as u64,
        )
        .with("hull_samples", opts.hull as u64)
        .with("overlaps", overlaps)
        .with("uncovered", uncovered)
}

/// Checks that every vertex coordinate sum equals `n(n+1)/2` for the ambient
/// dimension `n`.
pub fn hyperplane_membership(tri: &Triangulation) -> CheckResult {
    let points: Vec<&[i64]> = tri.vertices.iter().map(|v| v.coords.as_slice()).collect();
    let m = tri.ambient_dim();
    let ok = points.iter().all(|p| p.len() == m) && hyperplane_check(&points, m);
    let r = CheckResult::new(true).with("target_sum", (m * (m + 1) / 2) as u64);
    if ok {
        r
    } else {
        r.fail("a vertex lies off the hyperplane")
    }
}

/// Runs the full set of geometric checks into `report`.
pub fn geometric_checks(tri: &Triangulation, opts: SampleOptions, report: &mut ValidationReport) {
    let hyper = hyperplane_membership(tri);
    let nondeg = nondegeneracy_check(tri);
    let sound = hyper.pass && nondeg.pass;
    report.insert("hyperplane", hyper);
    report.insert("nondegenerate", nondeg);
    if sound {
        report.insert("facet_pairing", facet_pairing_check(tri));
        report.insert("sampling", sample_membership_check(tri, opts));
    } else {
        let skipped = CheckResult::new(false).fail("skipped: degenerate input");
        report.insert("facet_pairing", skipped.clone());
        report.insert("sampling", skipped);
    }
}

/// Checks that the vertices of each simplex form a strictly increasing chain
/// under `leq` ending at `apex`.
pub fn chain_check(
    tri: &Triangulation,
    apex: usize,
    leq: impl Fn(usize, usize) -> bool,
) -> CheckResult {
    let mut result = CheckResult::new(true);
    for (si, s) in tri.simplices.iter().enumerate() {
        let v = &s.vertices;
        if v.last() != Some(&apex) {
            result = result.fail(format!("simplex {si} does not end at the apex"));
            continue;
        }
        'pairs: for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] == v[j] || !leq(v[i], v[j]) {
                    result = result.fail(format!(
                        "simplex {si}: vertices {} and {} are not strictly increasing",
                        v[i], v[j]
                    ));
                    break 'pairs;
                }
            }
        }
    }
    result.with("simplices", tri.simplices.len() as u64)
}
