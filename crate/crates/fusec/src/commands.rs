use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use fusec_core::cohomology::{
    bar_cohomology_with, mv_dimensions, restriction_analysis, stable_elements_with, CohomologyOptions,
};
use fusec_core::fusion::FusionSystem;
use fusec_core::io::{load_group, read_json, to_json_value, FusionFile, ModelFile, SubgroupsFile};
use fusec_core::lab::{
    check_gt_center, check_thompson_triviality, run_kunneth_suite, run_model_suite, CheckReport, KunnethPair,
    ModelSuiteOptions, Verdict,
};
use fusec_core::linalg::FpMatrix;
use fusec_core::models::{
    abelianization, default_complements, euler_characteristic, free_kernel_perm_rep_with_budget, linearize,
    model_fusion, refine_model, robinson_model, verify_model, Flavor, HnnModel, PresentationStyle, StarOfGroups,
};

use crate::{BudgetArgs, CheckCmd, CohomCmd, FusionCmd, ModelCmd, SuiteArgs};

pub struct Output {
    pub text: String,
    pub value: Value,
    pub failed: bool,
}

impl Output {
    fn plain(text: String, value: Value) -> Self {
        Output { text, value, failed: false }
    }

    fn report(r: CheckReport) -> Self {
        Output { text: r.to_text(), failed: r.verdict == Verdict::Fail, value: to_json_value(&r) }
    }
}

impl From<BudgetArgs> for CohomologyOptions {
    fn from(b: BudgetArgs) -> Self {
        CohomologyOptions { budget: b.budget, seed: b.seed }
    }
}

fn load_fusion(path: &Path) -> Result<FusionSystem> {
    let file: FusionFile = read_json(path)?;
    Ok(file.build().with_context(|| format!("building the fusion system in {}", path.display()))?)
}

fn load_model(path: &Path) -> Result<StarOfGroups> {
    let file: ModelFile = read_json(path)?;
    Ok(file.build().with_context(|| format!("building the model in {}", path.display()))?)
}

fn write_model(model: &StarOfGroups, out: Option<&Path>) -> Result<()> {
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&ModelFile::of(model))?;
        std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn matrix(p: u32, cols: usize, rows: &[fusec_core::linalg::FpVector]) -> Value {
    FpMatrix::from_rows(p, cols, rows.to_vec()).to_json()
}

pub fn fusion(cmd: FusionCmd) -> Result<Output> {
    let FusionCmd::Dump { fusion, verbose } = cmd;
    let f = load_fusion(&fusion)?;
    let subgroups: Vec<Value> = f
        .subgroups()
        .iter()
        .enumerate()
        .map(|(i, h)| json!({ "index": i, "order": h.order(), "elements": h.elements(), "centric": f.is_centric(i) }))
        .collect();
    let counts = f.count_matrix();
    let saturation = f.saturation_check().err().map(|v| v.to_string());
    let mut value = json!({
        "prime": f.prime(),
        "sylow_order": f.group().order(),
        "provenance": f.provenance().to_string(),
        "morphisms": f.morphism_count(),
        "saturated": saturation.is_none(),
        "saturation_violation": saturation,
        "subgroups": subgroups,
        "hom_counts": counts,
    });
    let mut text = format!(
        "fusion system on a group of order {} at p = {} ({})\n{} subgroups, {} morphisms, saturated: {}\n",
        f.group().order(),
        f.prime(),
        f.provenance(),
        f.subgroups().len(),
        f.morphism_count(),
        saturation.is_none()
    );
    if let Some(v) = &value["saturation_violation"].as_str() {
        writeln!(text, "violation: {v}")?;
    }
    text.push_str("|Hom(P_i, P_j)|:\n");
    for row in &counts {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        writeln!(text, "{}", cells.join(""))?;
    }
    if verbose {
        let mut maps = Vec::new();
        for i in 0..f.subgroups().len() {
            for m in f.morphisms_from(i) {
                let dom = f.subgroup(i).elements();
                writeln!(text, "P{i} -> P{}: {:?} -> {:?}", m.image_index(), dom, m.images())?;
                maps.push(json!({ "source": i, "target": m.image_index(), "domain": dom, "images": m.images() }));
            }
        }
        value["maps"] = Value::Array(maps);
    }
    Ok(Output::plain(text, value))
}

pub fn check(cmd: CheckCmd) -> Result<Output> {
    let report = match cmd {
        CheckCmd::Gt { fusion } => check_gt_center(&load_fusion(&fusion)?)?,
        CheckCmd::Thompson { fusion } => check_thompson_triviality(&load_fusion(&fusion)?)?,
        CheckCmd::Kunneth { left, right, degree, budget } => {
            let pair = KunnethPair {
                name: format!("{} x {}", left.display(), right.display()),
                left: load_fusion(&left)?,
                right: load_fusion(&right)?,
            };
            run_kunneth_suite(&[pair], degree, budget.into())?
        }
    };
    Ok(Output::report(report))
}

fn flavor(s: &str) -> Result<Flavor> {
    Ok(s.parse::<Flavor>()?)
}

pub fn suite(args: SuiteArgs) -> Result<Output> {
    let g = load_group(&args.group)?;
    let opts = ModelSuiteOptions { flavor: flavor(&args.flavor)?, n_max: args.degree, cohomology: args.budget.into() };
    Ok(Output::report(run_model_suite(&g, args.prime, opts)))
}

pub fn cohom(cmd: CohomCmd) -> Result<Output> {
    match cmd {
        CohomCmd::Group { group, prime, degree, budget, dump_matrices } => {
            let g = load_group(&group)?;
            let mut rows = Vec::new();
            let mut text = format!("H^n(G; F_{prime}) for |G| = {}\n  n  cochains  cocycles  coboundaries  dim\n", g.order());
            for n in 0..=degree {
                let slice = bar_cohomology_with(&g, prime, n, budget.into())?;
                let s = slice.summary();
                writeln!(text, "{:>3} {:>9} {:>9} {:>13} {:>4}", n, s.cochains, s.cocycles, s.coboundaries, s.dimension)?;
                let mut row = to_json_value(&s);
                if dump_matrices {
                    let (p, c) = (slice.prime(), slice.cochain_dimension());
                    row["cocycle_basis"] = matrix(p, c, slice.cocycle_basis());
                    row["coboundary_basis"] = matrix(p, c, slice.coboundary_basis());
                    row["representatives"] = matrix(p, c, slice.representatives());
                }
                rows.push(row);
            }
            Ok(Output::plain(text, json!({ "group_order": g.order(), "prime": prime, "rows": rows })))
        }
        CohomCmd::Stable { fusion, degree, centric_only, budget, dump_matrices } => {
            let f = load_fusion(&fusion)?;
            let mut rows = Vec::new();
            let mut text = format!(
                "stable elements in H^n(S; F_{}) for |S| = {}\n  n  H^n(S)  stable\n",
                f.prime(),
                f.group().order()
            );
            for n in 0..=degree {
                let st = stable_elements_with(&f, n, budget.into(), centric_only)?;
                writeln!(text, "{:>3} {:>7} {:>7}", n, st.ambient().dimension(), st.dimension())?;
                let mut row = json!({ "degree": n, "ambient": st.ambient().dimension(), "stable": st.dimension() });
                if dump_matrices {
                    row["basis"] = matrix(f.prime() as u32, st.ambient().dimension(), st.basis());
                }
                rows.push(row);
            }
            Ok(Output::plain(text, json!({ "prime": f.prime(), "centric_only": centric_only, "rows": rows })))
        }
        CohomCmd::Mv { model, fusion, degree, budget } => {
            let m = load_model(&model)?;
            let opts: CohomologyOptions = budget.into();
            let rows = mv_dimensions(&m, degree, opts)?;
            let mut text = String::from("Mayer–Vietoris dimensions of the amalgam\n  n  ker  coker  dim\n");
            for r in &rows {
                writeln!(text, "{:>3} {:>4} {:>6} {:>4}", r.degree, r.kernel, r.cokernel, r.dimension)?;
            }
            let mut value = json!({ "prime": m.prime(), "rows": rows });
            if let Some(path) = fusion {
                let f = load_fusion(&path)?;
                let res = (0..=degree).map(|n| restriction_analysis(&m, &f, n, opts)).collect::<Result<Vec<_>, _>>()?;
                text.push_str("restriction to S\n  n  H^n  image  W  stable  H^n(S)  inside\n");
                for r in &res {
                    writeln!(
                        text,
                        "{:>3} {:>4} {:>6} {:>2} {:>7} {:>7}  {}",
                        r.degree, r.dim_hg, r.dim_image_res, r.dim_w, r.dim_stable, r.dim_hs, r.image_inside_stable
                    )?;
                }
                value["restriction"] = to_json_value(&res);
            }
            Ok(Output::plain(text, value))
        }
    }
}

fn model_text(model: &StarOfGroups) -> String {
    let s = model.summary();
    let mut text = format!("star of groups at p = {}, |S| = {}\n", s.prime, s.sylow_order);
    for (v, order) in s.vertex_orders.iter().enumerate() {
        match model.edge_to(v) {
            None => writeln!(text, "  vertex {v}: order {order} (center)").unwrap(),
            Some(e) => writeln!(text, "  vertex {v}: order {order}, edge group of order {}", e.group.order()).unwrap(),
        }
    }
    text
}

pub fn model(cmd: ModelCmd) -> Result<Output> {
    match cmd {
        ModelCmd::Robinson { group, prime, flavor: fl, out } => {
            let g = load_group(&group)?;
            let model = robinson_model(&g, prime, flavor(&fl)?)?;
            let f = fusec_core::fusion::fusion_of_group(&g, prime)?;
            let v = verify_model(&model, &f)?;
            write_model(&model, out.as_deref())?;
            let mut text = model_text(&model);
            writeln!(text, "generates F_S(G): {}", v.equal)?;
            let value = json!({
                "summary": model.summary(),
                "alperin": model.alperin_reports(),
                "verification": v,
            });
            Ok(Output { text, value, failed: !v.equal })
        }
        ModelCmd::Refine { model, choices, out } => {
            let m = load_model(&model)?;
            let choices = read_json::<SubgroupsFile>(&choices)?.resolve(&m)?;
            let refined = refine_model(&m, &choices)?;
            let v = verify_model(&refined, &model_fusion(&m)?)?;
            write_model(&refined, out.as_deref())?;
            let mut text = model_text(&refined);
            writeln!(text, "generates the original fusion system: {}", v.equal)?;
            let value = json!({ "summary": refined.summary(), "verification": v });
            Ok(Output { text, value, failed: !v.equal })
        }
        ModelCmd::Euler { model } => {
            let m = load_model(&model)?;
            let e = euler_characteristic(&m);
            let text = format!(
                "chi = {}\nd = chi * |S| * lcm = {} * {} * {} = {} ({})\n",
                e.chi,
                e.chi,
                e.sylow_order,
                e.lcm,
                e.d,
                e.sign()
            );
            let value = json!({
                "chi": e.chi.to_string(),
                "sylow_order": e.sylow_order,
                "lcm": e.lcm.to_string(),
                "d": e.d.to_string(),
                "integral": e.integral,
                "sign": e.sign(),
            });
            Ok(Output { text, value, failed: !e.integral })
        }
        ModelCmd::Permrep { model, subgroups, budget } => {
            let m = load_model(&model)?;
            let complements = match subgroups {
                None => default_complements(&m)?,
                Some(path) => {
                    let lists = read_json::<SubgroupsFile>(&path)?.resolve(&m)?;
                    if lists.iter().any(|l| l.len() != 1) {
                        bail!("give exactly one subgroup per vertex");
                    }
                    lists.into_iter().map(|mut l| l.remove(0)).collect()
                }
            };
            let rep = free_kernel_perm_rep_with_budget(&m, &complements, budget)?;
            let lin = linearize(&rep, &m)?;
            let action = rep.is_action(&m) && rep.edges_compatible(&m);
            let free = rep.sylow_acts_freely(&m);
            let torsion = rep.torsion_evidence(&m);
            let text = format!(
                "degree {}\nedge-compatible action: {}\nS acts freely: {}\ntorsion search: {}\nF_p[X] free over S of rank {}: {}\n",
                rep.degree,
                action,
                free,
                match torsion {
                    Ok(n) => format!("no torsion among {n} bounded conjugates"),
                    Err((v, x)) => format!("element {x} of vertex {v} acts trivially"),
                },
                lin.sylow_rank,
                lin.sylow_free
            );
            let value = json!({
                "degree": rep.degree,
                "complements": rep.complements,
                "edge_compatible_action": action,
                "sylow_acts_freely": free,
                "torsion_evidence": match torsion { Ok(n) => json!({ "checked": n }), Err((v, x)) => json!({ "vertex": v, "element": x }) },
                "module": lin,
            });
            Ok(Output { text, value, failed: !(action && free && torsion.is_ok() && lin.sylow_free) })
        }
        ModelCmd::Present { fusion, model, style } => {
            let style: PresentationStyle = style.parse()?;
            let (presentation, letters, prime) = match (fusion, model) {
                (Some(path), None) => {
                    let file: FusionFile = read_json(&path)?;
                    let gens = file.generators()?;
                    let hnn = match style {
                        PresentationStyle::LearyStancu => HnnModel::leary_stancu(&gens)?,
                        PresentationStyle::FiniteOrder => HnnModel::finite_order(&gens)?,
                    };
                    (hnn.presentation, to_json_value(&hnn.letters), file.prime)
                }
                (None, Some(path)) => {
                    let m = load_model(&path)?;
                    (m.presentation(), Value::Null, m.prime())
                }
                _ => bail!("give --fusion or --model"),
            };
            let ab = abelianization(&presentation, prime);
            let text = format!("{presentation}\nH_1 = {ab}\ndim H^1(-; F_{prime}) = {}\n", ab.h1_dimension);
            let value = json!({
                "generators": presentation.generators,
                "relators": presentation.relators,
                "letters": letters,
                "abelianization": ab,
            });
            Ok(Output::plain(text, value))
        }
    }
}
