//! JSON export of a triangulation and its reconstruction.

use std::sync::Arc;

use anyhow::{bail, ensure, Context};
use associahedron::assoc::FaceGamma;
use associahedron::geometry::ValidationReport;
use associahedron::permutohedron::{FacetSubset, Permutation};
use associahedron::{
    Face, ParkingFunction, PolytopeKind, Recipe, Shuffle, Simplex, Tree, Triangulation, Vertex,
    VertexKey,
};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
pub struct Meta {
    pub kind: PolytopeKind,
    pub n: usize,
    pub version: String,
    pub seed: u64,
}

#[derive(Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree: Option<Tree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Permutation>,
    pub coords: Vec<i64>,
}

/// A cone level. Associahedron faces carry `a`, permutohedron faces carry
/// the position set `facet`; the point is `null`.
#[derive(Serialize, Deserialize)]
pub struct RecipeEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facet: Option<Vec<usize>>,
    pub p: usize,
    pub q: usize,
    pub theta: Shuffle,
    pub left: Option<Box<RecipeEntry>>,
    pub right: Option<Box<RecipeEntry>>,
}

#[derive(Serialize, Deserialize)]
pub struct SimplexEntry {
    pub id: usize,
    pub vertices: Vec<usize>,
    pub label: Option<ParkingFunction>,
    pub recipe: Option<RecipeEntry>,
}

#[derive(Serialize, Deserialize)]
pub struct Bundle {
    pub meta: Meta,
    pub vertices: Vec<VertexEntry>,
    pub simplices: Vec<SimplexEntry>,
    #[serde(default)]
    pub validation: serde_json::Value,
}

fn recipe_entry(recipe: &Recipe) -> Option<RecipeEntry> {
    match recipe {
        Recipe::Base => None,
        Recipe::Cone {
            face,
            theta,
            left,
            right,
        } => {
            let (p, q) = face.dims();
            let (a, facet) = match face {
                Face::Gamma(g) => (Some(g.a), None),
                Face::Subset(s) => (None, Some(s.positions().to_vec())),
            };
            Some(RecipeEntry {
                a,
                facet,
                p,
                q,
                theta: theta.clone(),
                left: recipe_entry(left).map(Box::new),
                right: recipe_entry(right).map(Box::new),
            })
        }
    }
}

fn recipe_from(entry: Option<&RecipeEntry>, kind: PolytopeKind) -> anyhow::Result<Recipe> {
    let Some(e) = entry else {
        return Ok(Recipe::Base);
    };
    let face = match (kind, e.a, &e.facet) {
        (PolytopeKind::Associahedron, Some(a), None) => Face::Gamma(FaceGamma::new(a, e.p, e.q)?),
        (PolytopeKind::Permutohedron, None, Some(facet)) => {
            let s = FacetSubset::new(e.p + e.q + 2, facet.clone())?;
            ensure!(
                (s.p(), s.q()) == (e.p, e.q),
                "facet {facet:?} does not have dimensions ({}, {})",
                e.p,
                e.q
            );
            Face::Subset(s)
        }
        _ => bail!("recipe level does not match a {kind} face"),
    };
    Ok(Recipe::Cone {
        face,
        theta: e.theta.clone(),
        left: Arc::new(recipe_from(e.left.as_deref(), kind)?),
        right: Arc::new(recipe_from(e.right.as_deref(), kind)?),
    })
}

impl Bundle {
    pub fn new(
        tri: &Triangulation,
        seed: u64,
        validation: Option<&ValidationReport>,
    ) -> anyhow::Result<Self> {
        let vertices = tri
            .vertices
            .iter()
            .enumerate()
            .map(|(id, v)| {
                let (tree, perm) = match &v.key {
                    VertexKey::Tree(t) => (Some(t.clone()), None),
                    VertexKey::Perm(p) => (None, Some(p.clone())),
                };
                VertexEntry {
                    id,
                    tree,
                    perm,
                    coords: v.coords.clone(),
                }
            })
            .collect();
        let simplices = tri
            .simplices
            .iter()
            .enumerate()
            .map(|(id, s)| SimplexEntry {
                id,
                vertices: s.vertices.clone(),
                label: s.label.clone(),
                recipe: recipe_entry(&s.recipe),
            })
            .collect();
        Ok(Bundle {
            meta: Meta {
                kind: tri.kind,
                n: tri.dim,
                version: env!("CARGO_PKG_VERSION").to_string(),
                seed,
            },
            vertices,
            simplices,
            validation: match validation {
                Some(r) => serde_json::to_value(r)?,
                None => serde_json::Value::Null,
            },
        })
    }

    /// Pretty JSON with keys in sorted order.
    pub fn to_json(&self) -> anyhow::Result<String> {
        let value = serde_json::to_value(self)?;
        Ok(serde_json::to_string_pretty(&value)? + "\n")
    }

    pub fn from_json(text: &str) -> anyhow::Result<Self> {
        serde_json::from_str(text).context("malformed bundle")
    }

    /// Rebuilds the triangulation, checking ids, indices and vertex kinds.
    pub fn triangulation(&self) -> anyhow::Result<Triangulation> {
        let kind = self.meta.kind;
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            ensure!(v.id == i, "vertex {i} has id {}", v.id);
            let key = match (kind, &v.tree, &v.perm) {
                (PolytopeKind::Associahedron, Some(t), None) => VertexKey::Tree(t.clone()),
                (PolytopeKind::Permutohedron, None, Some(p)) => VertexKey::Perm(p.clone()),
                _ => bail!("vertex {i} does not carry exactly one key of kind {kind}"),
            };
            vertices.push(Vertex {
                key,
                coords: v.coords.clone(),
            });
        }
        let mut simplices = Vec::with_capacity(self.simplices.len());
        for (i, s) in self.simplices.iter().enumerate() {
            ensure!(s.id == i, "simplex {i} has id {}", s.id);
            if let Some(&bad) = s.vertices.iter().find(|&&v| v >= vertices.len()) {
                bail!("simplex {i} refers to missing vertex {bad}");
            }
            simplices.push(Simplex {
                vertices: s.vertices.clone(),
                label: s.label.clone(),
                recipe: Arc::new(
                    recipe_from(s.recipe.as_ref(), kind).with_context(|| format!("simplex {i}"))?,
                ),
            });
        }
        Ok(Triangulation {
            kind,
            dim: self.meta.n,
            vertices,
            simplices,
        })
    }
}
