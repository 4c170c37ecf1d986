//! One line per acceptance criterion; the test fails if any criterion does.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use fusec_core::cohomology::{bar_cohomology, restriction_analysis, stable_elements, CohomologyOptions};
use fusec_core::corpus;
use fusec_core::fusion::{fusion_of_group, FusionSystem};
use fusec_core::group::{prime_divisors, FiniteGroup};
use fusec_core::lab::{check_gt_center, check_thompson_triviality, run_kunneth_suite, KunnethPair, Verdict};
use fusec_core::models::{
    default_complements, euler_characteristic, free_kernel_perm_rep, linearize, refine_model, robinson_model,
    verify_model, Flavor, StarOfGroups,
};
use fusec_core::Rational;

fn corpus_cases() -> Vec<(&'static str, FiniteGroup, usize)> {
    let mut out = Vec::new();
    for ng in corpus::small_groups(24) {
        for p in prime_divisors(ng.group.order()) {
            out.push((ng.name, ng.group.clone(), p));
        }
    }
    out
}

fn ratio(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn fusion_axioms() {
    for (name, g, p) in corpus_cases() {
        let f = fusion_of_group(&g, p).unwrap();
        assert!(f.check_axioms().is_ok(), "{name} p={p}: {:?}", f.check_axioms());
        assert!(f.is_saturated(), "{name} p={p}");
    }
}

fn model_round_trip() {
    for (name, g, p) in corpus_cases() {
        let f = fusion_of_group(&g, p).unwrap();
        let m = robinson_model(&g, p, Flavor::CentricRadical).unwrap();
        let v = verify_model(&m, &f).unwrap();
        assert!(v.equal, "{name} p={p}: {:?}", v.diff);
    }
    let s4 = corpus::symmetric(4);
    let f = fusion_of_group(&s4, 2).unwrap();
    let m = robinson_model(&s4, 2, Flavor::CentricRadical).unwrap();
    let mut choices: Vec<_> = m.vertices().iter().map(|l| vec![l.whole()]).collect();
    choices[1] = vec![m.vertex_sylow(1), m.vertices()[1].whole()];
    let r = refine_model(&m, &choices).unwrap();
    assert_eq!(r.summary().vertex_orders, vec![8, 8, 24]);
    assert!(verify_model(&r, &f).unwrap().equal);
}

fn euler() {
    let s4 = robinson_model(&corpus::symmetric(4), 2, Flavor::CentricRadical).unwrap();
    assert_eq!(s4.summary().vertex_orders, vec![8, 24]);
    assert_eq!(euler_characteristic(&s4).chi, ratio(1, 24));
    let a4 = robinson_model(&corpus::alternating(4), 2, Flavor::CentricRadical).unwrap();
    assert_eq!(a4.vertices().len(), 1);
    let e = euler_characteristic(&a4);
    assert_eq!(e.chi, ratio(1, 12));
    assert_eq!(e.sign(), "positive");
    for (name, g, p) in corpus_cases() {
        let e = euler_characteristic(&robinson_model(&g, p, Flavor::CentricRadical).unwrap());
        assert!(e.integral, "{name} p={p}");
    }
}

fn permutation_reps() {
    for (name, g, p) in corpus_cases() {
        let m: StarOfGroups = robinson_model(&g, p, Flavor::CentricRadical).unwrap();
        let rep = free_kernel_perm_rep(&m, &default_complements(&m).unwrap()).unwrap();
        assert!(rep.edges_compatible(&m) && rep.is_action(&m), "{name} p={p}");
        assert!(rep.sylow_acts_freely(&m), "{name} p={p}");
        assert!(rep.torsion_evidence(&m).is_ok(), "{name} p={p}");
        let lin = linearize(&rep, &m).unwrap();
        assert!(lin.sylow_free, "{name} p={p}");
        assert_eq!(lin.sylow_rank * m.sylow().order(), rep.degree, "{name} p={p}");
    }
}

fn stable_vs_group() {
    for g in [corpus::alternating(4), corpus::symmetric(4)] {
        let f = fusion_of_group(&g, 2).unwrap();
        for n in 0..=3 {
            let stable = stable_elements(&f, n).unwrap().dimension();
            let direct = bar_cohomology(&g, 2, n).unwrap().dimension();
            assert_eq!(stable, direct, "|G| = {} n = {n}", g.order());
        }
    }
}

fn homology_decomposition() {
    let s4 = corpus::symmetric(4);
    let m = robinson_model(&s4, 2, Flavor::CentricRadical).unwrap();
    let f = fusion_of_group(&s4, 2).unwrap();
    for n in 0..=3 {
        let r = restriction_analysis(&m, &f, n, CohomologyOptions::default()).unwrap();
        assert!(r.image_inside_stable, "n = {n}");
        assert_eq!(r.dim_image_res + r.dim_w, r.dim_hg, "n = {n}");
    }
}

fn kunneth() {
    let c2 = FusionSystem::inner(&corpus::cyclic(2), 2).unwrap();
    let d8 = FusionSystem::inner(&corpus::dihedral(8), 2).unwrap();
    let trivial = FusionSystem::inner(&corpus::cyclic(1), 2).unwrap();
    let a4 = fusion_of_group(&corpus::alternating(4), 2).unwrap();
    let pairs = vec![
        KunnethPair { name: "C2 x C2".into(), left: c2.clone(), right: c2.clone() },
        KunnethPair { name: "D8 x 1".into(), left: d8, right: trivial },
        KunnethPair { name: "A4 x C2".into(), left: a4, right: c2 },
    ];
    let r = run_kunneth_suite(&pairs, 3, CohomologyOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_text());
    for pair in &r.parts {
        assert!(pair.parts[1].witnesses["degrees_checked"].as_u64().unwrap() >= 2);
    }
}

fn glauberman_thompson() {
    for (name, g, p) in corpus_cases() {
        let f = fusion_of_group(&g, p).unwrap();
        let gt = check_gt_center(&f).unwrap();
        assert_eq!(gt.witnesses["containment"], true, "{name} p={p}");
        let th = check_thompson_triviality(&f).unwrap();
        if p % 2 == 1 {
            assert_eq!(gt.witnesses["equality"], true, "{name} p={p}");
            if th.witnesses["hypotheses_hold"] == true {
                assert_eq!(th.witnesses["f_is_inner"], true, "{name} p={p}");
            }
        }
        assert_ne!(gt.verdict, Verdict::Fail, "{name} p={p}");
        assert_ne!(th.verdict, Verdict::Fail, "{name} p={p}");
    }
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_fusec")).args(args).output().expect("fusec runs");
    assert!(out.status.code().is_some_and(|c| c < 2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn determinism() {
    let dir = std::env::temp_dir().join(format!("fusec-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let fusion = dir.join("s4.json");
    std::fs::write(&fusion, r#"{"group": "S4", "prime": 2}"#).unwrap();
    let model = dir.join("model.json");
    let fusion = fusion.to_str().unwrap();
    let model_s = model.to_str().unwrap();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["--format", "structured", "suite", "--group", "S4", "--prime", "2"],
        vec!["--format", "structured", "check", "gt", "--fusion", fusion],
        vec!["--format", "structured", "check", "thompson", "--fusion", fusion],
        vec!["--format", "structured", "check", "kunneth", "--left", fusion, "--right", fusion, "--degree", "1"],
        vec!["--format", "structured", "cohom", "stable", "--fusion", fusion, "--degree", "2"],
        vec!["--format", "structured", "model", "robinson", "--group", "S4", "--prime", "2", "--out", model_s],
        vec!["--format", "structured", "model", "permrep", "--model", model_s],
        vec!["--format", "structured", "model", "present", "--model", model_s],
    ];
    for args in &invocations {
        let a = run_cli(args);
        let b = run_cli(args);
        assert!(!a.is_empty(), "{args:?}");
        assert_eq!(a, b, "{args:?}");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn()); 9] = [
        ("fusion systems of corpus groups satisfy the axioms and are saturated", fusion_axioms),
        ("Robinson models generate F_S(G); the S4 vertex split does too", model_round_trip),
        ("Euler characteristics are exact and d is integral", euler),
        ("permutation representations have free S-action and free linearization", permutation_reps),
        ("stable elements match H^n(A4) and H^n(S4) for n <= 3", stable_vs_group),
        ("restriction on the D8 *_D8 S4 amalgam lands in stable elements", homology_decomposition),
        ("centricity lemma and Kunneth dimensions on the three pairs", kunneth),
        ("Glauberman-Thompson containment, odd-p equality and triviality", glauberman_thompson),
        ("repeated CLI invocations give byte-identical structured output", determinism),
    ];
    let mut failed = Vec::new();
    for (k, (what, check)) in criteria.iter().enumerate() {
        let ok = catch_unwind(AssertUnwindSafe(check)).is_ok();
        println!("criterion {}: {} - {what}", k + 1, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
