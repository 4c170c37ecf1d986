use super::{Edge, StarOfGroups};
use crate::error::{Error, Result};
use crate::group::{subgroup_as_group, FiniteGroup, Subgroup};

/// Replaces each vertex `L_i` by the chosen subgroups `K_{i,1}, …` (each
/// containing the `S`-side of `L_i`, together generating `L_i`). The first
/// `K` of the center becomes the new center; every other `K` is joined to it
/// over the edge group of its old vertex (over `S` for the old center).
pub fn refine_model(model: &StarOfGroups, choices: &[Vec<Subgroup>]) -> Result<StarOfGroups> {
    let n = model.vertices().len();
    if choices.len() != n {
        return Err(Error::Input(format!("{} vertex choices for {n} vertices", choices.len())));
    }
    for (v, ks) in choices.iter().enumerate() {
        let l = &model.vertices()[v];
        if ks.is_empty() {
            return Err(Error::Precondition(format!("no subgroups chosen for vertex {v}")));
        }
        let side = model.vertex_sylow(v);
        for (j, k) in ks.iter().enumerate() {
            l.subgroup(&k.iter().collect::<Vec<_>>())
                .map_err(|_| Error::Precondition(format!("K_{j} of vertex {v} is not a subgroup")))?;
            if !side.is_subgroup_of(k) {
                return Err(Error::Precondition(format!("K_{j} of vertex {v} does not contain the edge group")));
            }
        }
        let gens: Vec<usize> = ks.iter().flat_map(|k| k.generators()).collect();
        if l.closure(&gens).order() != l.order() {
            return Err(Error::Precondition(format!("the chosen subgroups do not generate vertex {v}")));
        }
    }

    let standalone = |v: usize, k: &Subgroup| -> (FiniteGroup, Vec<u32>) {
        let (g, emb) = subgroup_as_group(&model.vertices()[v], k);
        let mut back = vec![u32::MAX; model.vertices()[v].order()];
        for (i, &x) in emb.iter().enumerate() {
            back[x as usize] = i as u32;
        }
        (g, back)
    };
    let (center, center_back) = standalone(0, &choices[0][0]);
    let sylow_into_base: Vec<u32> = model.sylow_into_base().iter().map(|&x| center_back[x as usize]).collect();
    let mut vertices = vec![center];
    let mut edges = Vec::new();
    let mut points = vec![model.base_points()[0].clone()];
    let id_s: Vec<u32> = (0..model.sylow().order() as u32).collect();
    for k in &choices[0][1..] {
        let (g, back) = standalone(0, k);
        edges.push(Edge {
            group: model.sylow().clone(),
            vertex: vertices.len(),
            into_base: id_s.iter().map(|&x| sylow_into_base[x as usize]).collect(),
            into_vertex: model.sylow_into_base().iter().map(|&x| back[x as usize]).collect(),
        });
        vertices.push(g);
        points.push(model.base_points()[0].clone());
    }
    for v in 1..n {
        let e = model.edge_to(v).expect("validated star");
        let into_s = model.edge_into_sylow(e);
        for k in &choices[v] {
            let (g, back) = standalone(v, k);
            edges.push(Edge {
                group: e.group.clone(),
                vertex: vertices.len(),
                into_base: into_s.iter().map(|&x| sylow_into_base[x as usize]).collect(),
                into_vertex: e.into_vertex.iter().map(|&x| back[x as usize]).collect(),
            });
            vertices.push(g);
            points.push(model.base_points()[v].clone());
        }
    }
    Ok(StarOfGroups::new(model.prime(), vertices, model.sylow().clone(), sylow_into_base, edges)?
        .with_base_points(points))
}
