use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{Edge, StarOfGroups};
use crate::error::{Error, Result};
use crate::fusion::{fusion_of_group_with_embedding, FusionSystem};
use crate::group::{
    are_isomorphic, centralizer, normalizer, o_p, o_p_residual, p_part, quotient, subgroup_as_group, FiniteGroup,
    Subgroup,
};

/// Which family of subgroups supplies the base points `P_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    CentricRadical,
    Centric,
    Essential,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::CentricRadical => "centric-radical",
            Flavor::Centric => "centric",
            Flavor::Essential => "essential",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "centric-radical" => Ok(Flavor::CentricRadical),
            "centric" => Ok(Flavor::Centric),
            "essential" => Ok(Flavor::Essential),
            other => Err(Error::Input(format!("unknown flavor {other:?}"))),
        }
    }
}

/// The four vertex conditions, for `L = N_G(P)/O^p(C_G(P))` with the image
/// `P̄` of `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlperinReport {
    pub vertex: usize,
    pub base_point_order: usize,
    /// `O_p(L) = P̄`
    pub op_is_base_point: bool,
    /// `C_L(P̄) = Z(P̄)`
    pub centralizer_is_center: bool,
    /// `L/P̄ ≅ Out_F(P)`
    pub quotient_is_out: bool,
    /// `N_S(P)` is Sylow in `L`
    pub edge_is_sylow: bool,
}

impl AlperinReport {
    /// First failing condition; `O_p(L) = P̄` is only demanded of radical
    /// base points.
    pub fn first_failure(&self, demand_op: bool) -> Option<&'static str> {
        if demand_op && !self.op_is_base_point {
            Some("O_p(L_i) = P_i")
        } else if !self.centralizer_is_center {
            Some("C_{L_i}(P_i) = Z(P_i)")
        } else if !self.quotient_is_out {
            Some("L_i/P_i ≅ Out_F(P_i)")
        } else if !self.edge_is_sylow {
            Some("N_S(P_i) is Sylow in L_i")
        } else {
            None
        }
    }
}

fn in_family(f: &FusionSystem, i: usize, flavor: Flavor) -> Result<bool> {
    Ok(match flavor {
        Flavor::CentricRadical => f.is_centric(i) && f.is_radical(i),
        Flavor::Centric => f.is_centric(i),
        Flavor::Essential => f.is_essential(i)?,
    })
}

/// Indices of `P_1 = S` and fully normalized representatives of the other
/// F-classes in the family.
pub(crate) fn base_point_indices(f: &FusionSystem, flavor: Flavor) -> Result<Vec<usize>> {
    let whole = f.whole_index();
    let mut chosen = vec![whole];
    for i in f.class_representatives() {
        if i == whole || !in_family(f, i, flavor)? {
            continue;
        }
        chosen.push(f.fully_normalized_conjugate(i));
    }
    Ok(chosen)
}

/// The amalgam `L_1 *_{N_S(P_2)} L_2 * … * L_n` with
/// `L_i = N_G(P_i)/O^p(C_G(P_i))`.
pub fn robinson_model(g: &FiniteGroup, p: usize, flavor: Flavor) -> Result<StarOfGroups> {
    let (f, emb) = fusion_of_group_with_embedding(g, p)?;
    let s = f.group().clone();
    let chosen = base_point_indices(&f, flavor)?;
    let in_g = |h: &Subgroup| -> Subgroup {
        let mut elems: Vec<u32> = h.iter().map(|x| emb[x]).collect();
        elems.sort_unstable();
        Subgroup::from_elements_unchecked(g, elems)
    };

    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut reports = Vec::new();
    let mut sylow_into_base = Vec::new();
    let mut points = Vec::new();
    for (v, &i) in chosen.iter().enumerate() {
        let pg = in_g(f.subgroup(i));
        let n = normalizer(g, &pg)?;
        let c = centralizer(g, &pg)?;
        let c_prime = o_p_residual(g, &c, p);
        let q = quotient(g, &n, &c_prime)?;
        let project = |x: usize| q.projection[x];
        let n_s = normalizer(&s, f.subgroup(i))?;
        let edge_image: Vec<u32> = n_s.iter().map(|x| project(emb[x] as usize)).collect();
        if v == 0 {
            sylow_into_base = s.elements().map(|x| project(emb[x] as usize)).collect();
        } else {
            let (eg, eemb) = subgroup_as_group(&s, &n_s);
            edges.push(Edge {
                group: eg,
                vertex: v,
                into_base: eemb.iter().map(|&x| sylow_into_base[x as usize]).collect(),
                into_vertex: eemb.iter().map(|&x| project(emb[x as usize] as usize)).collect(),
            });
        }
        let l = q.group;
        let p_bar = {
            let mut elems: Vec<u32> = pg.iter().map(project).collect();
            elems.sort_unstable();
            elems.dedup();
            Subgroup::from_elements_unchecked(&l, elems)
        };
        let c_l = centralizer(&l, &p_bar)?;
        let top = quotient(&l, &l.whole(), &p_bar)?;
        let mut sorted_edge = edge_image.clone();
        sorted_edge.sort_unstable();
        sorted_edge.dedup();
        let report = AlperinReport {
            vertex: v,
            base_point_order: pg.order(),
            op_is_base_point: o_p(&l, p) == p_bar,
            centralizer_is_center: c_l.is_subgroup_of(&p_bar),
            quotient_is_out: are_isomorphic(&top.group, &f.out_group(i).out),
            edge_is_sylow: sorted_edge.len() == edge_image.len() && edge_image.len() == p_part(l.order(), p),
        };
        if let Some(condition) = report.first_failure(flavor != Flavor::Centric) {
            return Err(Error::AlperinCondition { vertex: v, condition: condition.into() });
        }
        reports.push(report);
        vertices.push(l);
        points.push(Some(f.subgroup(i).clone()));
    }
    Ok(StarOfGroups::new(p, vertices, s, sylow_into_base, edges)?
        .with_base_points(points)
        .with_alperin(reports))
}
