//! Theorem checks over fusion systems and models, with reproducible reports.

mod suites;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::group::{center, thompson_subgroup, Subgroup};

pub use suites::{centricity_lemma, run_kunneth_suite, run_model_suite, KunnethPair, ModelSuiteOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    EvidenceOnly,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::EvidenceOnly => "evidence-only",
        }
    }

    /// Fail dominates; all-evidence stays evidence-only.
    pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut any = false;
        let mut all_evidence = true;
        for v in verdicts {
            any = true;
            if v == Verdict::Fail {
                return Verdict::Fail;
            }
            all_evidence &= v == Verdict::EvidenceOnly;
        }
        if any && all_evidence {
            Verdict::EvidenceOnly
        } else {
            Verdict::Pass
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub statement: String,
    pub inputs: Value,
    pub verdict: Verdict,
    pub witnesses: Value,
    pub conventions: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<CheckReport>,
}

impl CheckReport {
    pub fn new(check: &str, statement: &str, inputs: Value) -> Self {
        CheckReport {
            check: check.into(),
            statement: statement.into(),
            inputs,
            verdict: Verdict::Pass,
            witnesses: json!({}),
            conventions: Vec::new(),
            parts: Vec::new(),
        }
    }

    pub fn with_parts(mut self, parts: Vec<CheckReport>) -> Self {
        self.verdict = Verdict::combine(parts.iter().map(|p| p.verdict));
        self.parts = parts;
        self
    }

    /// Indented one-line-per-check summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    fn write_text(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        out.push_str(&format!("{pad}[{}] {}: {}\n", self.verdict.as_str(), self.check, self.statement));
        if let Value::Object(map) = &self.witnesses {
            for (k, v) in map {
                out.push_str(&format!("{pad}    {k} = {v}\n"));
            }
        }
        for part in &self.parts {
            part.write_text(out, depth + 1);
        }
    }
}

const CENTER_CONVENTION: &str = "Z(F) is the set of z in Z(S) fixed by every morphism whose domain contains z";
const THOMPSON_CONVENTION: &str = "J(S) is generated by the abelian subgroups of S of maximal order";

fn require_saturated(f: &FusionSystem) -> Result<()> {
    f.saturation_check().map_err(|v| Error::NotSaturated(v.to_string()))
}

fn fusion_inputs(f: &FusionSystem) -> Value {
    json!({ "prime": f.prime(), "sylow_order": f.group().order(), "provenance": f.provenance().to_string() })
}

/// The subgroup `{z^p : z ∈ Z(S)}`.
fn central_powers(f: &FusionSystem) -> Subgroup {
    let s = f.group();
    let gens: Vec<usize> = center(s).iter().map(|z| s.pow(z, f.prime())).collect();
    s.closure(&gens)
}

/// `J(S)` replaced by a fully normalized F-conjugate if needed; the flag
/// records a replacement.
fn thompson_index(f: &FusionSystem) -> Result<(usize, bool)> {
    let j = thompson_subgroup(f.group())?;
    let idx = f.index_of(&j).expect("subgroup of S");
    let fnc = if f.is_fully_normalized(idx) { idx } else { f.fully_normalized_conjugate(idx) };
    Ok((fnc, fnc != idx))
}

/// `Z(S)^p ∩ Z(N_F(J(S))) ≤ Z(F)`, and `Z(F) = Z(N_F(J(S)))` for odd p.
pub fn check_gt_center(f: &FusionSystem) -> Result<CheckReport> {
    require_saturated(f)?;
    let s = f.group();
    let p = f.prime();
    let (j, replaced) = thompson_index(f)?;
    let n = f.normalizer_subsystem(j)?;
    let z_f = f.center();
    let z_n = n.to_ambient(f, &n.system.center());
    let zp = central_powers(f);
    let lhs = zp.intersection(s, &z_n);
    let containment = lhs.is_subgroup_of(&z_f);
    let equality = z_f == z_n;
    let mut r = CheckReport::new(
        "gt-center",
        "Z(S)^p ∩ Z(N_F(J(S))) ≤ Z(F); for odd p, Z(F) = Z(N_F(J(S)))",
        fusion_inputs(f),
    );
    r.witnesses = json!({
        "thompson_subgroup": f.subgroup(j).elements(),
        "thompson_replaced_by_fully_normalized_conjugate": replaced,
        "center_of_f": z_f.elements(),
        "center_of_normalizer_system": z_n.elements(),
        "central_p_powers": zp.elements(),
        "containment": containment,
        "equality": equality,
    });
    r.verdict = if !containment {
        Verdict::Fail
    } else if p % 2 == 1 {
        if equality { Verdict::Pass } else { Verdict::Fail }
    } else {
        Verdict::EvidenceOnly
    };
    r.conventions = vec![
        CENTER_CONVENTION.into(),
        THOMPSON_CONVENTION.into(),
        "Z(N_L(J(S))) is not computed: linking systems are out of scope and the clause is taken equal to Z(N_F(J(S)))"
            .into(),
        "at p = 2 the equality clause needs S4-freeness, which is not decided; the verdict is evidence-only once the containment holds"
            .into(),
    ];
    Ok(r)
}

/// If `C_F(Z(S))` and `N_F(J(S))` are both `F_S(S)`, then `F = F_S(S)`.
pub fn check_thompson_triviality(f: &FusionSystem) -> Result<CheckReport> {
    require_saturated(f)?;
    let s = f.group();
    let z = f.index_of(&center(s)).expect("subgroup of S");
    let c = f.centralizer_subsystem(z)?;
    let (j, replaced) = thompson_index(f)?;
    let n = f.normalizer_subsystem(j)?;
    let whole = s.order();
    let c_inner = c.embedding.len() == whole && c.system.is_inner();
    let n_inner = n.embedding.len() == whole && n.system.is_inner();
    let hypotheses = c_inner && n_inner;
    let conclusion = f.is_inner();
    let mut r = CheckReport::new(
        "thompson-triviality",
        "C_F(Z(S)) = N_F(J(S)) = F_S(S) implies F = F_S(S)",
        fusion_inputs(f),
    );
    r.witnesses = json!({
        "centralizer_of_center_is_inner": c_inner,
        "normalizer_of_thompson_is_inner": n_inner,
        "thompson_replaced_by_fully_normalized_conjugate": replaced,
        "hypotheses_hold": hypotheses,
        "f_is_inner": conclusion,
    });
    r.verdict = if f.prime() == 2 {
        Verdict::EvidenceOnly
    } else if hypotheses && !conclusion {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    r.conventions = vec![
        THOMPSON_CONVENTION.into(),
        "the linking-system hypothesis N_L(J(S)) = L_S(S) and the conclusion about |L| are out of scope".into(),
        "at p = 2 the S4-free hypothesis is not decided; the verdict is evidence-only, and F_{D8}(S4) shows the implication needs it"
            .into(),
    ];
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fusion::{fusion_of_group, FusionSystem};

    #[test]
    fn inner_systems_pass() {
        let c9 = corpus::cyclic(9);
        let f = FusionSystem::inner(&c9, 3).unwrap();
        let r = check_gt_center(&f).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let t = check_thompson_triviality(&f).unwrap();
        assert_eq!(t.verdict, Verdict::Pass);
        assert_eq!(t.witnesses["hypotheses_hold"], true);
    }

    #[test]
    fn small_groups() {
        let f = fusion_of_group(&corpus::symmetric(3), 3).unwrap();
        let r = check_gt_center(&f).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.witnesses["center_of_f"], json!([0]));

        let f = fusion_of_group(&corpus::alternating(4), 2).unwrap();
        let r = check_gt_center(&f).unwrap();
        assert_eq!(r.witnesses["central_p_powers"], json!([0]));
        assert_eq!(r.witnesses["containment"], true);
        assert_eq!(r.verdict, Verdict::EvidenceOnly);

        for name in ["C3:C4", "C7:C3"] {
            let g = corpus::by_name(name).unwrap();
            let p = if name == "C7:C3" { 7 } else { 3 };
            let t = check_thompson_triviality(&fusion_of_group(&g, p).unwrap()).unwrap();
            assert_eq!(t.witnesses["hypotheses_hold"], false, "{name}");
            assert_eq!(t.witnesses["f_is_inner"], false, "{name}");
            assert_eq!(t.witnesses["normalizer_of_thompson_is_inner"], false, "{name}");
            assert_eq!(t.verdict, Verdict::Pass);
        }
    }

    #[test]
    fn s4_needs_the_extra_hypothesis_at_two() {
        let f = fusion_of_group(&corpus::symmetric(4), 2).unwrap();
        let t = check_thompson_triviality(&f).unwrap();
        assert_eq!(t.witnesses["hypotheses_hold"], true);
        assert_eq!(t.witnesses["f_is_inner"], false);
        assert_eq!(t.verdict, Verdict::EvidenceOnly);
    }

    #[test]
    fn unsaturated_input_is_refused() {
        let d8 = corpus::dihedral(8);
        let auts = crate::group::automorphisms(&d8, &d8.whole()).unwrap();
        let gens = crate::fusion::FusionGenerators::new(d8, 2, auts).unwrap();
        let f = crate::fusion::generate_fusion(&gens).unwrap();
        assert!(matches!(check_gt_center(&f), Err(Error::NotSaturated(_))));
    }

    #[test]
    fn verdicts_combine() {
        use Verdict::*;
        assert_eq!(Verdict::combine([Pass, EvidenceOnly]), Pass);
        assert_eq!(Verdict::combine([EvidenceOnly, EvidenceOnly]), EvidenceOnly);
        assert_eq!(Verdict::combine([Pass, Fail, EvidenceOnly]), Fail);
    }
}
