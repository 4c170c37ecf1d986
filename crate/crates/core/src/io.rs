//! JSON input files: groups, fusion generators, models and subgroup lists.
//!
//! A group is a corpus name (`"S4"`), a permutation group
//! `{"degree": n, "generators": [[...]]}` or a table `{"cayley": [[...]]}`,
//! either object optionally carrying `"labels"`. Elements inside other files
//! are indices, or image lists when the group came from permutations.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fusion::{fusion_of_group, generate_fusion, FusionGenerators, FusionSystem};
use crate::group::{sylow_p, subgroup_as_group, extend_from_generators, FiniteGroup, GroupHom, Subgroup};
use crate::models::{Edge, StarOfGroups};

/// Permutation closures stop at this many elements.
pub const GROUP_BOUND: usize = 100_000;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Permutations {
        degree: usize,
        generators: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Table {
        cayley: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        let (g, labels) = match self {
            GroupSpec::Name(name) => {
                let g = crate::corpus::by_name(name)
                    .ok_or_else(|| Error::Input(format!("no corpus group named {name:?}")))?;
                (g, None)
            }
            GroupSpec::Permutations { degree, generators, labels } => {
                (FiniteGroup::from_permutation_generators(*degree, generators, GROUP_BOUND)?, labels.clone())
            }
            GroupSpec::Table { cayley, labels } => (FiniteGroup::from_cayley(cayley)?, labels.clone()),
        };
        match labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }

    /// The permutation form when rebuilding it keeps the element numbering,
    /// else the table.
    pub fn of(g: &FiniteGroup) -> Self {
        let labels = g.labels().map(<[String]>::to_vec);
        if let Some(o) = g.origin() {
            let spec = GroupSpec::Permutations {
                degree: o.degree,
                generators: o.generators.iter().map(|p| p.iter().map(|&x| x as usize).collect()).collect(),
                labels: labels.clone(),
            };
            if spec.build().is_ok_and(|h| h.cayley_rows() == g.cayley_rows()) {
                return spec;
            }
        }
        GroupSpec::Table { cayley: g.cayley_rows(), labels }
    }
}

/// An element as an index or a permutation image list.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Index(usize),
    Permutation(Vec<usize>),
}

impl ElementSpec {
    pub fn resolve(&self, g: &FiniteGroup) -> Result<usize> {
        match self {
            ElementSpec::Index(i) if *i < g.order() => Ok(*i),
            ElementSpec::Index(i) => Err(Error::Input(format!("element {i} out of range for order {}", g.order()))),
            ElementSpec::Permutation(p) => g
                .element_of_permutation(p)
                .ok_or_else(|| Error::Input(format!("{p:?} is not an element of the group"))),
        }
    }
}

fn resolve_all(g: &FiniteGroup, xs: &[ElementSpec]) -> Result<Vec<usize>> {
    xs.iter().map(|x| x.resolve(g)).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapSpec {
    pub domain: Vec<ElementSpec>,
    pub images: Vec<ElementSpec>,
}

/// Fusion generators on a p-group, or, without `maps`, the fusion system
/// of a group at `prime`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FusionFile {
    pub group: GroupSpec,
    pub prime: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maps: Option<Vec<MapSpec>>,
}

/// `⟨gens⟩ → G` from generator images.
pub fn hom_from_generators(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Result<GroupHom> {
    if gens.len() != images.len() {
        return Err(Error::Input(format!("{} generators but {} images", gens.len(), images.len())));
    }
    let domain = g.closure(gens);
    let full = extend_from_generators(g, gens, g, images)
        .ok_or_else(|| Error::NotAHomomorphism("generator images do not extend to a homomorphism".into()))?;
    let img: Vec<u32> = domain.iter().map(|x| full[x]).collect();
    let codomain = g.closure(&img.iter().map(|&y| y as usize).collect::<Vec<_>>());
    GroupHom::new(g, domain, g, codomain, img)
}

impl FusionFile {
    pub fn build(&self) -> Result<FusionSystem> {
        let g = self.group.build()?;
        match &self.maps {
            None => fusion_of_group(&g, self.prime),
            Some(maps) => Ok(generate_fusion(&self.generators_with(g, maps)?)?),
        }
    }

    /// The generator set, when `maps` is given.
    pub fn generators(&self) -> Result<FusionGenerators> {
        let maps = self.maps.as_ref().ok_or_else(|| Error::Input("the fusion file lists no maps".into()))?;
        self.generators_with(self.group.build()?, maps)
    }

    fn generators_with(&self, g: FiniteGroup, maps: &[MapSpec]) -> Result<FusionGenerators> {
        let homs = maps
            .iter()
            .enumerate()
            .map(|(k, m)| {
                hom_from_generators(&g, &resolve_all(&g, &m.domain)?, &resolve_all(&g, &m.images)?)
                    .map_err(|e| Error::Input(format!("map {k}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FusionGenerators::new(g, self.prime, homs)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeSpec {
    /// Leaf vertex; defaults to the edge's position plus one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub edge_group: GroupSpec,
    pub into_base: Vec<u32>,
    pub into_vertex: Vec<u32>,
}

/// A star of groups. Vertex 0 is the center; `sylow` and `sylow_into_base`
/// default to the Sylow subgroup of the center with its inclusion.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModelFile {
    pub prime: usize,
    pub vertices: Vec<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sylow: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sylow_into_base: Option<Vec<u32>>,
    #[serde(default)]
    pub edges: Vec<EdgeSpec>,
}

impl ModelFile {
    pub fn build(&self) -> Result<StarOfGroups> {
        let vertices = self.vertices.iter().map(GroupSpec::build).collect::<Result<Vec<_>>>()?;
        let base = vertices.first().ok_or_else(|| Error::ModelMalformed("no vertices".into()))?;
        let (sylow, into) = match (&self.sylow, &self.sylow_into_base) {
            (Some(s), Some(m)) => (s.build()?, m.clone()),
            (None, None) => subgroup_as_group(base, &sylow_p(base, self.prime)),
            _ => return Err(Error::Input("give both sylow and sylow_into_base, or neither".into())),
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| {
                Ok(Edge {
                    group: e.edge_group.build()?,
                    vertex: e.vertex.unwrap_or(k + 1),
                    into_base: e.into_base.clone(),
                    into_vertex: e.into_vertex.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        StarOfGroups::new(self.prime, vertices, sylow, into, edges)
    }

    pub fn of(model: &StarOfGroups) -> Self {
        ModelFile {
            prime: model.prime(),
            vertices: model.vertices().iter().map(GroupSpec::of).collect(),
            sylow: Some(GroupSpec::of(model.sylow())),
            sylow_into_base: Some(model.sylow_into_base().to_vec()),
            edges: model
                .edges()
                .iter()
                .map(|e| EdgeSpec {
                    vertex: Some(e.vertex),
                    edge_group: GroupSpec::of(&e.group),
                    into_base: e.into_base.clone(),
                    into_vertex: e.into_vertex.clone(),
                })
                .collect(),
        }
    }
}

/// Subgroups of each vertex of a model, by generators.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubgroupsFile {
    pub subgroups: Vec<Vec<Vec<ElementSpec>>>,
}

impl SubgroupsFile {
    /// `subgroups[v]` resolved in vertex `v`.
    pub fn resolve(&self, model: &StarOfGroups) -> Result<Vec<Vec<Subgroup>>> {
        if self.subgroups.len() != model.vertices().len() {
            return Err(Error::Input(format!(
                "{} subgroup lists for {} vertices",
                self.subgroups.len(),
                model.vertices().len()
            )));
        }
        self.subgroups
            .iter()
            .zip(model.vertices())
            .map(|(list, g)| list.iter().map(|gens| Ok(g.closure(&resolve_all(g, gens)?))).collect())
            .collect()
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// A group from a file path, or a corpus name when no such file exists.
pub fn load_group(arg: &str) -> Result<FiniteGroup> {
    let path = Path::new(arg);
    if path.exists() {
        read_json::<GroupSpec>(path)?.build()
    } else {
        GroupSpec::Name(arg.to_string()).build()
    }
}

pub fn to_json_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::models::{robinson_model, verify_model, Flavor};

    #[test]
    fn group_specs() {
        let g: GroupSpec = serde_json::from_str(r#"{"degree": 4, "generators": [[1,2,3,0],[0,3,2,1]]}"#).unwrap();
        assert_eq!(g.build().unwrap().order(), 8);
        let t: GroupSpec = serde_json::from_str(r#"{"cayley": [[0,1],[1,0]]}"#).unwrap();
        assert_eq!(t.build().unwrap().order(), 2);
        let n: GroupSpec = serde_json::from_str(r#""A4""#).unwrap();
        assert_eq!(n.build().unwrap().order(), 12);
        assert!(GroupSpec::Name("nope".into()).build().is_err());
    }

    #[test]
    fn fusion_file_generates_d8_in_s4() {
        // the order-3 automorphism of the normal Klein four
        let text = r#"{
            "group": {"degree": 4, "generators": [[1,2,3,0],[0,3,2,1]]},
            "prime": 2,
            "maps": [{"domain": [[1,0,3,2],[2,3,0,1]], "images": [[2,3,0,1],[3,2,1,0]]}]
        }"#;
        let f: FusionFile = serde_json::from_str(text).unwrap();
        let fs = f.build().unwrap();
        assert!(fs.is_saturated());
        let s4 = crate::fusion::fusion_of_group(&corpus::symmetric(4), 2).unwrap();
        assert_eq!(fs.morphism_count(), s4.morphism_count());
    }

    #[test]
    fn bad_map_is_an_input_error() {
        let text = r#"{"group": "C4", "prime": 2, "maps": [{"domain": [1], "images": [2]}]}"#;
        let f: FusionFile = serde_json::from_str(text).unwrap();
        assert!(f.build().is_err());
    }

    #[test]
    fn model_round_trip() {
        let s4 = corpus::symmetric(4);
        let m = robinson_model(&s4, 2, Flavor::CentricRadical).unwrap();
        let text = serde_json::to_string(&ModelFile::of(&m)).unwrap();
        let back = serde_json::from_str::<ModelFile>(&text).unwrap().build().unwrap();
        assert_eq!(back.summary(), m.summary());
        let f = crate::fusion::fusion_of_group(&s4, 2).unwrap();
        assert!(verify_model(&back, &f).unwrap().equal);
    }

    #[test]
    fn minimal_model_file() {
        let text = r#"{"prime": 2, "vertices": ["S3"]}"#;
        let m = serde_json::from_str::<ModelFile>(text).unwrap().build().unwrap();
        assert_eq!(m.sylow().order(), 2);
    }
}
