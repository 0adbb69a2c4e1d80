//! Shared representation of a triangulated polytope.

use std::fmt;
use std::sync::Arc;

use crate::parking::ParkingFunction;
use crate::permutohedron::{FacetSubset, Permutation};
use crate::shuffles::Shuffle;
use crate::trees::Tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolytopeKind {
    #[serde(rename = "assoc")]
    Associahedron,
    #[serde(rename = "perm")]
    Permutohedron,
}

impl fmt::Display for PolytopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolytopeKind::Associahedron => "assoc",
            PolytopeKind::Permutohedron => "perm",
        })
    }
}

/// The boundary face a cone simplex is built over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Face {
    /// `γ(a; p, q)` of the associahedron, a product `K^p × K^q`.
    Gamma(crate::assoc::FaceGamma),
    /// Facet of the permutohedron, a product `P^p × P^q`.
    Subset(FacetSubset),
}

impl Face {
    /// Dimensions `(p, q)` of the two factors.
    pub fn dims(&self) -> (usize, usize) {
        match self {
            Face::Gamma(g) => (g.p, g.q),
            Face::Subset(s) => (s.p(), s.q()),
        }
    }
}

/// How a top simplex was produced: the point, or the cone over a staircase
/// simplex of a product face.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Recipe {
    Base,
    Cone {
        face: Face,
        theta: Shuffle,
        left: Arc<Recipe>,
        right: Arc<Recipe>,
    },
}

impl Recipe {
    pub fn dimension(&self) -> usize {
        match self {
            Recipe::Base => 0,
            Recipe::Cone { face, .. } => {
                let (p, q) = face.dims();
                p + q + 1
            }
        }
    }

    /// Checks that every level's sub-recipes and shuffle have the sizes the
    /// face requires.
    pub fn is_well_formed(&self) -> bool {
        match self {
            Recipe::Base => true,
            Recipe::Cone {
                face,
                theta,
                left,
                right,
            } => {
                let (p, q) = face.dims();
                let face_ok = match face {
                    Face::Gamma(g) => g.a >= 1 && g.a <= g.p + 1,
                    Face::Subset(_) => true,
                };
                face_ok
                    && theta.p() == p
                    && theta.q() == q
                    && left.dimension() == p
                    && right.dimension() == q
                    && left.is_well_formed()
                    && right.is_well_formed()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexKey {
    Tree(Tree),
    Perm(Permutation),
}

impl fmt::Display for VertexKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexKey::Tree(t) => t.fmt(f),
            VertexKey::Perm(p) => p.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub key: VertexKey,
    pub coords: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    /// Indices into [`Triangulation::vertices`], increasing in the polytope's
    /// order; the last one is the apex.
    pub vertices: Vec<usize>,
    pub label: Option<ParkingFunction>,
    pub recipe: Arc<Recipe>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub kind: PolytopeKind,
    pub dim: usize,
    pub vertices: Vec<Vertex>,
    pub simplices: Vec<Simplex>,
}

impl Triangulation {
    pub fn coords_of(&self, simplex: &Simplex) -> Vec<&[i64]> {
        simplex
            .vertices
            .iter()
            .map(|&i| self.vertices[i].coords.as_slice())
            .collect()
    }

    /// Ambient dimension of the vertex coordinates.
    pub fn ambient_dim(&self) -> usize {
        self.dim + 1
    }
}
