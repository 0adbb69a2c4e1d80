//! Parking functions and their recursive decomposition.
//!
//! Every parking function of length `n` is obtained exactly once as
//! `(a, θ(f, g + (p+1)))` with `p + q = n - 1`, `1 ≤ a ≤ p + 1`, `θ` a
//! `(p, q)`-shuffle and `f`, `g` parking functions of lengths `p` and `q`.
//! [`compose_pf`] builds the sequence, [`decompose_pf`] recovers the parts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::numbers::{binomial, pow_signed};
use crate::shuffles::{enumerate_shuffles, interleave, Letter, Shuffle};
use crate::{Error, Result};

/// Largest length accepted by [`enumerate_parking`].
pub const MAX_ENUMERATION: usize = 8;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkingFunction(Vec<u32>);

impl ParkingFunction {
    pub fn new(seq: Vec<u32>) -> Result<Self> {
        if !is_parking(&seq.iter().map(|&x| i64::from(x)).collect::<Vec<_>>()) {
            return Err(Error::domain(format!(
                "{} is not a parking function",
                fmt_seq(&seq)
            )));
        }
        Ok(ParkingFunction(seq))
    }

    pub fn empty() -> Self {
        ParkingFunction(Vec::new())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub(crate) fn fmt_seq(seq: &[u32]) -> String {
    let parts: Vec<String> = seq.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_seq(&self.0))
    }
}

/// Parses `3,6,1` or `(3,6,1)`.
impl FromStr for ParkingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(ParkingFunction::empty());
        }
        let seq = body
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("'{}': {e}", x.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        ParkingFunction::new(seq)
    }
}

impl serde::Serialize for ParkingFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for ParkingFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let seq = Vec::<u32>::deserialize(d)?;
        ParkingFunction::new(seq).map_err(serde::de::Error::custom)
    }
}

/// True iff the sorted sequence `j_1 ≤ ... ≤ j_n` satisfies `1 ≤ j_k ≤ k`.
pub fn is_parking(seq: &[i64]) -> bool {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(k, &j)| j >= 1 && j <= k as i64 + 1)
}

/// Calls `visit` on every parking function of length `n` in lexicographic order.
pub fn for_each_parking(n: usize, mut visit: impl FnMut(&[u32])) -> Result<()> {
    if n > MAX_ENUMERATION {
        return Err(Error::capacity("parking enumeration", MAX_ENUMERATION, n));
    }
    // A prefix extends to a parking function iff, for every k, at most n - k
    // of its entries exceed k (padding with 1s settles the rest).
    fn go(n: usize, prefix: &mut Vec<u32>, above: &mut [usize], visit: &mut impl FnMut(&[u32])) {
        if prefix.len() == n {
            visit(prefix);
            return;
        }
        for v in 1..=n as u32 {
            // entries > k for k < v gain one
            let ok = (1..v as usize).all(|k| above[k] < n - k);
            if !ok {
                break;
            }
            above[1..v as usize].iter_mut().for_each(|c| *c += 1);
            prefix.push(v);
            go(n, prefix, above, visit);
            prefix.pop();
            above[1..v as usize].iter_mut().for_each(|c| *c -= 1);
        }
    }
    let mut above = vec![0usize; n + 1];
    go(n, &mut Vec::with_capacity(n), &mut above, &mut visit);
    Ok(())
}

/// All parking functions of length `n` in lexicographic order.
pub fn enumerate_parking(n: usize) -> Result<Vec<ParkingFunction>> {
    let mut out = Vec::new();
    for_each_parking(n, |s| out.push(ParkingFunction(s.to_vec())))?;
    Ok(out)
}

/// `(n + 1)^(n - 1)`, with the empty function counted once at `n = 0`.
pub fn parking_count(n: usize) -> BigUint {
    pow_signed(n as u64 + 1, n as i64 - 1)
}

/// The simplex-count recursion `d_n = Σ_p (p+1) C(n-1, p) d_p d_{n-1-p}`
/// with `d_0 = 1`, for all `0..=n`.
pub fn simplex_recursion(n: usize) -> Vec<BigUint> {
    let mut d = vec![BigUint::from(1u32)];
    for m in 1..=n {
        let mut acc = BigUint::zero();
        for p in 0..m {
            acc += binomial((m - 1) as u64, p as u64) * (p as u64 + 1) * &d[p] * &d[m - 1 - p];
        }
        d.push(acc);
    }
    d
}

/// Intermediate form `Σ_p C(n-1, p) (p+1)^p (n-p)^(n-p-2)`.
pub fn abel_sum(n: usize) -> BigUint {
    let mut acc = BigUint::zero();
    for p in 0..n {
        acc += binomial((n - 1) as u64, p as u64)
            * pow_signed(p as u64 + 1, p as i64)
            * pow_signed((n - p) as u64, n as i64 - p as i64 - 2);
    }
    acc
}

/// `(recursion value d_n, closed form (n+1)^(n-1))`.
pub fn abel_check(n: usize) -> (BigUint, BigUint) {
    let d = simplex_recursion(n).swap_remove(n);
    (d, parking_count(n))
}

/// The parts `(a, θ, f, g)` of a parking function of length `p + q + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiDecomposition {
    pub a: u32,
    pub theta: Shuffle,
    pub f: ParkingFunction,
    pub g: ParkingFunction,
}

impl PiDecomposition {
    pub fn p(&self) -> usize {
        self.f.len()
    }

    pub fn q(&self) -> usize {
        self.g.len()
    }

    pub fn n(&self) -> usize {
        self.p() + self.q() + 1
    }

    fn check(&self) -> Result<()> {
        let p = self.p();
        if self.a < 1 || self.a as usize > p + 1 {
            return Err(Error::domain(format!(
                "a = {} not in 1..={}",
                self.a,
                p + 1
            )));
        }
        if self.theta.p() != p || self.theta.q() != self.q() {
            return Err(Error::domain(format!(
                "shuffle {} does not match part lengths ({p}, {})",
                self.theta,
                self.q()
            )));
        }
        Ok(())
    }
}

/// `(a, θ(f, g + (p + 1)))`.
pub fn compose_pf(d: &PiDecomposition) -> Result<ParkingFunction> {
    d.check()?;
    let shift = d.p() as u32 + 1;
    let g: Vec<u32> = d.g.as_slice().iter().map(|&x| x + shift).collect();
    let mut seq = Vec::with_capacity(d.n());
    seq.push(d.a);
    seq.extend(interleave(&d.theta, d.f.as_slice(), &g)?);
    Ok(ParkingFunction(seq))
}

/// Inverse of [`compose_pf`].
///
/// With `a` the first entry and `x` the sorted sequence, let `j` be the first
/// position with `x_j = a` and `k` the first position after `j` with
/// `x_k = k` (or `n + 1` if none); then `p = k - 2`. The remaining entries
/// split positionally into those `≤ p + 1` (forming `f`) and those `≥ p + 2`
/// (forming `g` after subtracting `p + 1`).
pub fn decompose_pf(pf: &ParkingFunction) -> Result<PiDecomposition> {
    let seq = pf.as_slice();
    let n = seq.len();
    if n == 0 {
        return Err(Error::domain(
            "the empty parking function has no decomposition",
        ));
    }
    let a = seq[0];
    let mut x = seq.to_vec();
    x.sort_unstable();
    // 1-based positions
    let j = x.iter().position(|&v| v == a).expect("a occurs in x") + 1;
    let k = (j + 1..=n)
        .find(|&k| x[k - 1] as usize == k)
        .unwrap_or(n + 1);
    let p = k - 2;
    let threshold = p as u32 + 1;
    let rest = &seq[1..];
    let mut word = Vec::with_capacity(n - 1);
    let mut f = Vec::new();
    let mut g = Vec::new();
    for &v in rest {
        if v <= threshold {
            word.push(Letter::U);
            f.push(v);
        } else {
            word.push(Letter::V);
            g.push(v - threshold);
        }
    }
    if f.len() != p {
        return Err(Error::Invariant(format!(
            "split of {pf} at threshold {threshold} gave {} small entries, expected {p}",
            f.len()
        )));
    }
    Ok(PiDecomposition {
        a,
        theta: Shuffle::new(word),
        f: ParkingFunction::new(f)?,
        g: ParkingFunction::new(g)?,
    })
}

/// All well-formed decompositions of total length `n`, grouped by `p`, then
/// `a`, shuffle, `f` and `g`.
pub fn enumerate_decompositions(n: usize) -> Result<Vec<PiDecomposition>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for p in 0..n {
        let q = n - 1 - p;
        let fs = enumerate_parking(p)?;
        let gs = enumerate_parking(q)?;
        let thetas = enumerate_shuffles(p, q);
        for a in 1..=p as u32 + 1 {
            for theta in &thetas {
                for f in &fs {
                    for g in &gs {
                        out.push(PiDecomposition {
                            a,
                            theta: theta.clone(),
                            f: f.clone(),
                            g: g.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// One `(a, p, q)` group of the classification of `PF_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRow {
    pub n: usize,
    pub a: u32,
    pub p: usize,
    pub q: usize,
    pub members: Vec<ParkingFunction>,
}

/// Groups `PF_n` by the `(a, p, q)` of [`decompose_pf`]; rows ordered by `a`
/// ascending, then `p` descending, members lexicographically.
pub fn classify(n: usize) -> Result<Vec<ClassRow>> {
    let mut rows: Vec<ClassRow> = Vec::new();
    for pf in enumerate_parking(n)? {
        let d = decompose_pf(&pf)?;
        let (a, p, q) = (d.a, d.p(), d.q());
        match rows.iter_mut().find(|r| (r.a, r.p) == (a, p)) {
            Some(r) => r.members.push(pf),
            None => rows.push(ClassRow {
                n,
                a,
                p,
                q,
                members: vec![pf],
            }),
        }
    }
    rows.sort_by(|x, y| x.a.cmp(&y.a).then(y.p.cmp(&x.p)));
    Ok(rows)
}

/// Plain-text classification table for the given lengths. The length column
/// is printed on the first row of each block only.
pub fn classification_table(ns: impl IntoIterator<Item = usize>) -> Result<String> {
    let mut out = String::from(" n  a  p  q  parking functions\n");
    for n in ns {
        for (i, row) in classify(n)?.iter().enumerate() {
            let n_col = if i == 0 { n.to_string() } else { String::new() };
            let members: Vec<String> = row.members.iter().map(ToString::to_string).collect();
            out.push_str(&format!(
                "{:>2} {:>2} {:>2} {:>2}  {}\n",
                n_col,
                row.a,
                row.p,
                row.q,
                members.join(" ")
            ));
        }
    }
    Ok(out)
}
