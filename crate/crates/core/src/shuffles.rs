//! `(p, q)`-shuffles as words over `{U, V}` and the staircase triangulation
//! of a product of two simplices.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    U,
    V,
}

/// An interleaving of a block of `p` letters `U` with a block of `q` letters `V`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shuffle {
    word: Vec<Letter>,
}

impl Shuffle {
    pub fn new(word: Vec<Letter>) -> Self {
        Shuffle { word }
    }

    /// The shuffle `U^p V^q`.
    pub fn identity(p: usize, q: usize) -> Self {
        let mut word = vec![Letter::U; p];
        word.extend(std::iter::repeat_n(Letter::V, q));
        Shuffle { word }
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn p(&self) -> usize {
        self.word.iter().filter(|&&l| l == Letter::U).count()
    }

    pub fn q(&self) -> usize {
        self.word.len() - self.p()
    }

    /// Permutation form: the block elements `1..=p` (first block) and
    /// `p+1..=p+q` (second block) read off in output order. `UUV` is `123`,
    /// `UVU` is `132` and `VUU` is `312`.
    pub fn as_permutation(&self) -> Vec<usize> {
        let p = self.p();
        let us: Vec<usize> = (1..=p).collect();
        let vs: Vec<usize> = (p + 1..=self.len()).collect();
        interleave(self, &us, &vs).expect("block sizes match by construction")
    }

    /// Inverse of [`Shuffle::as_permutation`] for a known first-block size `p`.
    pub fn from_permutation(perm: &[usize], p: usize) -> Result<Self> {
        let n = perm.len();
        if p > n {
            return Err(Error::domain(format!("block size {p} exceeds length {n}")));
        }
        let word: Vec<Letter> = perm
            .iter()
            .map(|&x| if x <= p { Letter::U } else { Letter::V })
            .collect();
        let sh = Shuffle { word };
        if sh.as_permutation() != perm {
            return Err(Error::domain(format!(
                "{perm:?} is not a ({p}, {})-shuffle",
                n - p
            )));
        }
        Ok(sh)
    }
}

impl fmt::Display for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.word {
            f.write_str(match l {
                Letter::U => "U",
                Letter::V => "V",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Shuffle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'U' => Ok(Letter::U),
                'V' => Ok(Letter::V),
                other => Err(Error::Parse(format!("invalid shuffle letter '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Shuffle::new)
    }
}

impl serde::Serialize for Shuffle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Shuffle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All `C(p+q, q)` shuffles in lexicographic order with `U < V`.
pub fn enumerate_shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    fn go(p: usize, q: usize, prefix: &mut Vec<Letter>, out: &mut Vec<Shuffle>) {
        if p == 0 && q == 0 {
            out.push(Shuffle::new(prefix.clone()));
            return;
        }
        if p > 0 {
            prefix.push(Letter::U);
            go(p - 1, q, prefix, out);
            prefix.pop();
        }
        if q > 0 {
            prefix.push(Letter::V);
            go(p, q - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(p, q, &mut Vec::with_capacity(p + q), &mut out);
    out
}

/// Merges `us` and `vs`: output position `k` takes the next unused element of
/// `us` if letter `k` is `U`, otherwise the next unused element of `vs`.
pub fn interleave<T: Clone>(theta: &Shuffle, us: &[T], vs: &[T]) -> Result<Vec<T>> {
    if us.len() != theta.p() || vs.len() != theta.q() {
        return Err(Error::domain(format!(
            "shuffle {theta} expects blocks of sizes ({}, {}), got ({}, {})",
            theta.p(),
            theta.q(),
            us.len(),
            vs.len()
        )));
    }
    let (mut ui, mut vi) = (us.iter(), vs.iter());
    Ok(theta
        .word
        .iter()
        .map(|l| match l {
            Letter::U => ui.next(),
            Letter::V => vi.next(),
        })
        .map(|x| x.expect("counts checked").clone())
        .collect())
}

/// Splits a sequence back into its `U` and `V` parts.
pub fn deinterleave<T: Clone>(theta: &Shuffle, xs: &[T]) -> Result<(Vec<T>, Vec<T>)> {
    if xs.len() != theta.len() {
        return Err(Error::domain(format!(
            "shuffle of length {} applied to sequence of length {}",
            theta.len(),
            xs.len()
        )));
    }
    let mut us = Vec::with_capacity(theta.p());
    let mut vs = Vec::with_capacity(theta.q());
    for (l, x) in theta.word.iter().zip(xs) {
        match l {
            Letter::U => us.push(x.clone()),
            Letter::V => vs.push(x.clone()),
        }
    }
    Ok((us, vs))
}

/// Lattice path from `(0, 0)` to `(p, q)`: `U` steps the first index, `V`
/// the second. The `p + q + 1` points are the vertices of one top simplex of
/// `Δ^p × Δ^q`.
pub fn staircase(theta: &Shuffle) -> Vec<(usize, usize)> {
    let mut at = (0, 0);
    let mut out = Vec::with_capacity(theta.len() + 1);
    out.push(at);
    for l in &theta.word {
        match l {
            Letter::U => at.0 += 1,
            Letter::V => at.1 += 1,
        }
        out.push(at);
    }
    out
}
