use serde_json::json;

use super::{fusion_inputs, CheckReport, Verdict};
use crate::cohomology::{
    bar_cohomology_with, kunneth_check, mv_dimensions, restriction_analysis, stable_elements_with,
    CohomologyOptions,
};
use crate::error::{Error, Result};
use crate::fusion::{fusion_of_group, product_elements, product_fusion, FusionSystem};
use crate::group::FiniteGroup;
use crate::models::{
    default_complements, euler_characteristic, free_kernel_perm_rep, linearize, robinson_model, verify_model,
    Flavor, StarOfGroups,
};

/// Two fusion systems over the same prime, under a display name.
#[derive(Clone, Debug)]
pub struct KunnethPair {
    pub name: String,
    pub left: FusionSystem,
    pub right: FusionSystem,
}

/// `P₁ × P₂` is centric in `F₁ × F₂` exactly when both factors are centric,
/// over every pair of subgroups.
pub fn centricity_lemma(f1: &FusionSystem, f2: &FusionSystem) -> Result<CheckReport> {
    let prod = product_fusion(f1, f2)?;
    let k = f2.group().order();
    let mut checked = 0usize;
    let mut counterexample = None;
    'outer: for (i, p1) in f1.subgroups().iter().enumerate() {
        for (j, p2) in f2.subgroups().iter().enumerate() {
            let elems = product_elements(p1, p2, k);
            let idx = prod.index_of_elements(&elems);
            let lhs = prod.is_centric(idx);
            let rhs = f1.is_centric(i) && f2.is_centric(j);
            checked += 1;
            if lhs != rhs {
                counterexample = Some(json!({
                    "left": p1.elements(), "right": p2.elements(),
                    "product_centric": lhs, "factors_centric": rhs,
                }));
                break 'outer;
            }
        }
    }
    let mut r = CheckReport::new(
        "centricity",
        "P1 × P2 is (F1 × F2)-centric iff P1 is F1-centric and P2 is F2-centric",
        json!({ "left": fusion_inputs(f1), "right": fusion_inputs(f2) }),
    );
    r.verdict = if counterexample.is_some() { Verdict::Fail } else { Verdict::Pass };
    r.witnesses = json!({ "pairs_checked": checked, "counterexample": counterexample });
    r.conventions = vec!["F1 × F2 is generated by the maps φ1 × id and id × φ2 on product subgroups".into()];
    Ok(r)
}

/// Runs the centricity lemma and the Künneth comparison for each pair,
/// dropping the degree cap when the cochain budget runs out.
pub fn run_kunneth_suite(pairs: &[KunnethPair], n_max: usize, opts: CohomologyOptions) -> Result<CheckReport> {
    let mut parts = Vec::new();
    for pair in pairs {
        let centric = centricity_lemma(&pair.left, &pair.right)?;
        let mut cap = n_max;
        let rows = loop {
            match kunneth_check(&pair.left, &pair.right, cap, opts) {
                Ok(rows) => break Some(rows),
                Err(Error::CochainBudget { .. }) if cap > 0 => cap -= 1,
                Err(Error::CochainBudget { .. }) => break None,
                Err(e) => return Err(e),
            }
        };
        let mut k = CheckReport::new(
            "kunneth",
            "dim H^n(F1 × F2) = Σ_{i+j=n} dim H^i(F1) · dim H^j(F2)",
            json!({ "left": fusion_inputs(&pair.left), "right": fusion_inputs(&pair.right), "degree_cap": n_max }),
        );
        match rows {
            Some(rows) => {
                k.verdict = if rows.iter().all(|r| r.equal) { Verdict::Pass } else { Verdict::Fail };
                k.witnesses = json!({ "degrees_checked": cap, "rows": rows });
            }
            None => {
                k.verdict = Verdict::EvidenceOnly;
                k.witnesses = json!({ "degrees_checked": null });
            }
        }
        k.conventions = vec![
            "H^n(F) is the subspace of F-stable elements of H^n(S; F_p), from normalized bar cochains".into(),
        ];
        let mut r = CheckReport::new("kunneth-pair", &pair.name, json!({ "name": pair.name }));
        r = r.with_parts(vec![centric, k]);
        parts.push(r);
    }
    Ok(CheckReport::new(
        "kunneth-suite",
        "stable elements of a product system are the tensor product of those of the factors",
        json!({ "pairs": pairs.len(), "degree_cap": n_max }),
    )
    .with_parts(parts))
}

#[derive(Clone, Copy, Debug)]
pub struct ModelSuiteOptions {
    pub flavor: Flavor,
    pub n_max: usize,
    pub cohomology: CohomologyOptions,
}

impl Default for ModelSuiteOptions {
    fn default() -> Self {
        ModelSuiteOptions { flavor: Flavor::CentricRadical, n_max: 2, cohomology: CohomologyOptions::default() }
    }
}

fn stage(check: &str, statement: &str, verdict: Verdict, witnesses: serde_json::Value) -> CheckReport {
    let mut r = CheckReport::new(check, statement, json!({}));
    r.verdict = verdict;
    r.witnesses = witnesses;
    r
}

fn pass_if(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn errored(check: &str, e: &Error) -> CheckReport {
    stage(check, "stage raised an error; later stages are skipped", Verdict::Fail, json!({ "error": e.to_string() }))
}

/// Fusion system, Robinson model, verification, Euler characteristic,
/// permutation representation and cohomology, for one group and prime.
pub fn run_model_suite(g: &FiniteGroup, p: usize, opts: ModelSuiteOptions) -> CheckReport {
    let mut parts = Vec::new();
    let inputs = json!({
        "group_order": g.order(), "prime": p, "flavor": opts.flavor.to_string(), "degree_cap": opts.n_max,
    });
    let head = CheckReport::new("model-suite", "the Robinson model realizes F_S(G) and its invariants agree", inputs);
    if let Err(e) = model_stages(g, p, opts, &mut parts) {
        let name = ["fusion", "saturation", "robinson", "verify", "euler", "permrep", "linearize", "cohomology"]
            .get(parts.len())
            .copied()
            .unwrap_or("stage");
        parts.push(errored(name, &e));
    }
    head.with_parts(parts)
}

fn model_stages(g: &FiniteGroup, p: usize, opts: ModelSuiteOptions, parts: &mut Vec<CheckReport>) -> Result<()> {
    let f = fusion_of_group(g, p)?;
    let axioms = f.check_axioms();
    parts.push(stage(
        "fusion",
        "F_S(G) satisfies the fusion system axioms",
        pass_if(axioms.is_ok()),
        json!({ "subgroups": f.subgroups().len(), "morphisms": f.morphism_count(), "error": axioms.err() }),
    ));
    let sat = f.saturation_check();
    parts.push(stage(
        "saturation",
        "F_S(G) is saturated",
        pass_if(sat.is_ok()),
        json!({ "violation": sat.err().map(|v| v.to_string()) }),
    ));

    let model = robinson_model(g, p, opts.flavor)?;
    parts.push(robinson_stage(&model, opts.flavor));

    let v = verify_model(&model, &f)?;
    parts.push(stage(
        "verify",
        "the fusion system generated by the model equals F_S(G)",
        pass_if(v.equal),
        serde_json::to_value(&v).expect("serializable"),
    ));

    let chi = euler_characteristic(&model);
    let euler = stage(
        "euler",
        "χ · |S| · lcm of vertex indices is an integer",
        pass_if(chi.integral),
        json!({ "chi": chi.chi.to_string(), "d": chi.d.to_string(), "lcm": chi.lcm.to_string() }),
    );
    let sign = stage(
        "euler-sign",
        "the sign of d_F",
        Verdict::EvidenceOnly,
        json!({ "sign": chi.sign(), "d": chi.d.to_string() }),
    );
    parts.push(euler.with_parts(vec![sign]).with_verdict_floor(pass_if(chi.integral)));

    let complements = default_complements(&model)?;
    let rep = free_kernel_perm_rep(&model, &complements)?;
    let valid = rep.is_action(&model) && rep.edges_compatible(&model);
    let free = rep.sylow_acts_freely(&model);
    let freeness = stage(
        "permrep-freeness",
        "S acts freely, so the kernel of the action is torsion-free",
        Verdict::EvidenceOnly,
        json!({ "sylow_acts_freely": free, "torsion_evidence": format!("{:?}", rep.torsion_evidence(&model)) }),
    );
    parts.push(
        stage(
            "permrep",
            "the coset actions of the vertex groups agree on edge groups",
            pass_if(valid),
            json!({ "degree": rep.degree, "complement_orders": rep.complements.iter().map(Vec::len).collect::<Vec<_>>() }),
        )
        .with_parts(vec![freeness])
        .with_verdict_floor(pass_if(valid)),
    );

    let lin = linearize(&rep, &model)?;
    let ok = lin.restrictions.iter().all(|r| r.matches_coset_module && r.projective) && lin.sylow_free;
    parts.push(stage(
        "linearize",
        "F_p[X] restricts to projective coset modules on vertices and is free over F_p S",
        pass_if(ok),
        serde_json::to_value(&lin).expect("serializable"),
    ));

    parts.push(cohomology_stage(g, &model, &f, opts)?);
    Ok(())
}

fn robinson_stage(model: &StarOfGroups, flavor: Flavor) -> CheckReport {
    let demand_op = flavor != Flavor::Centric;
    let failures: Vec<_> = model
        .alperin_reports()
        .iter()
        .filter_map(|r| r.first_failure(demand_op).map(|c| json!({ "vertex": r.vertex, "condition": c })))
        .collect();
    stage(
        "robinson",
        "each vertex group L satisfies C_L(P) = Z(P), L/P ≅ Out_F(P) and has N_S(P) Sylow",
        pass_if(failures.is_empty()),
        json!({ "summary": model.summary(), "failures": failures }),
    )
}

fn cohomology_stage(
    g: &FiniteGroup,
    model: &StarOfGroups,
    f: &FusionSystem,
    opts: ModelSuiteOptions,
) -> Result<CheckReport> {
    let p = f.prime();
    let mut cap = opts.n_max;
    let mv = loop {
        match mv_dimensions(model, cap, opts.cohomology) {
            Ok(rows) => break rows,
            Err(Error::CochainBudget { .. }) if cap > 0 => cap -= 1,
            Err(e) => return Err(e),
        }
    };
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 0..=cap {
        let hg = match bar_cohomology_with(g, p, n, opts.cohomology) {
            Ok(slice) => Some(slice.dimension()),
            Err(Error::CochainBudget { .. }) => None,
            Err(e) => return Err(e),
        };
        let stable = stable_elements_with(f, n, opts.cohomology, false)?.dimension();
        let res = restriction_analysis(model, f, n, opts.cohomology)?;
        let row_ok = res.image_inside_stable
            && res.dim_image_res == stable
            && res.dim_hg == mv[n].dimension
            && hg.map_or(true, |d| d == stable);
        ok &= row_ok;
        rows.push(json!({
            "degree": n,
            "amalgam": mv[n].dimension,
            "stable": stable,
            "group": hg,
            "image_of_restriction": res.dim_image_res,
            "complement": res.dim_w,
            "image_inside_stable": res.image_inside_stable,
        }));
    }
    let mut r = stage(
        "cohomology",
        "restriction from the amalgam maps onto the stable elements, which equal H^n(G)",
        pass_if(ok),
        json!({ "degrees_checked": cap, "rows": rows }),
    );
    r.conventions = vec![
        "amalgam cohomology comes from the Mayer–Vietoris sequence of the tree of groups".into(),
        "H^n(G) is skipped in degrees whose cochains exceed the budget".into(),
    ];
    Ok(r)
}

impl CheckReport {
    /// `with_parts` with this verdict taking precedence unless it is a pass.
    fn with_verdict_floor(mut self, own: Verdict) -> Self {
        if own != Verdict::Pass {
            self.verdict = own;
        } else if self.verdict == Verdict::EvidenceOnly {
            self.verdict = Verdict::Pass;
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn s4_model_suite_passes() {
        let r = run_model_suite(&corpus::symmetric(4), 2, ModelSuiteOptions::default());
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_text());
        assert_eq!(r.parts.len(), 8);
    }

    #[test]
    fn kunneth_pairs() {
        let c2 = FusionSystem::inner(&corpus::cyclic(2), 2).unwrap();
        let a4 = fusion_of_group(&corpus::alternating(4), 2).unwrap();
        let pairs = vec![
            KunnethPair { name: "C2 x C2".into(), left: c2.clone(), right: c2.clone() },
            KunnethPair { name: "C2 x A4".into(), left: c2, right: a4 },
        ];
        let r = run_kunneth_suite(&pairs, 2, CohomologyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_text());
    }
}
