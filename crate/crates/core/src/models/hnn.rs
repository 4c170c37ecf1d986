use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::StarOfGroups;
use crate::error::{Error, Result};
use crate::fusion::{generate_fusion, FusionGenerators};
use crate::group::{FiniteGroup, GroupHom};
use crate::linalg::smith_invariants;

/// A finite presentation; a relator is a list of `(generator, ±1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<(usize, i8)>>,
}

impl Presentation {
    fn word_to_string(&self, w: &[(usize, i8)]) -> String {
        let mut out = String::new();
        let mut k = 0;
        while k < w.len() {
            let (g, e) = w[k];
            let mut run = 1;
            while k + run < w.len() && w[k + run] == (g, e) {
                run += 1;
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&self.generators[g]);
            let power = run as i64 * e as i64;
            if power != 1 {
                out.push_str(&format!("^{power}"));
            }
            k += run;
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_to_string(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// Freely reduces a word.
fn free_reduce(w: Vec<(usize, i8)>) -> Vec<(usize, i8)> {
    let mut out: Vec<(usize, i8)> = Vec::with_capacity(w.len());
    for l in w {
        match out.last() {
            Some(&(g, e)) if g == l.0 && e == -l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

fn inverse_word(w: &[(usize, i8)]) -> Vec<(usize, i8)> {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Shortest words (breadth-first, generators in order) for every element,
/// and the relators `w_x · g · w_{xg}⁻¹` that are not freely trivial. With
/// generator indices shifted by `offset`.
struct CayleyPresentation {
    words: Vec<Vec<(usize, i8)>>,
    relators: Vec<Vec<(usize, i8)>>,
}

fn cayley_presentation(g: &FiniteGroup, gens: &[usize], offset: usize) -> CayleyPresentation {
    let mut words: Vec<Option<Vec<(usize, i8)>>> = vec![None; g.order()];
    words[0] = Some(Vec::new());
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if words[y].is_none() {
                let mut w = words[x].clone().expect("visited");
                w.push((offset + k, 1));
                words[y] = Some(w);
                queue.push_back(y);
            }
        }
    }
    let words: Vec<Vec<(usize, i8)>> = words.into_iter().map(|w| w.expect("generators generate")).collect();
    let mut relators = Vec::new();
    for x in g.elements() {
        for (k, &s) in gens.iter().enumerate() {
            let mut w = words[x].clone();
            w.push((offset + k, 1));
            w.extend(inverse_word(&words[g.mul(x, s)]));
            let w = free_reduce(w);
            if !w.is_empty() && !relators.contains(&w) {
                relators.push(w);
            }
        }
    }
    CayleyPresentation { words, relators }
}

fn letter_names(count: usize) -> Vec<String> {
    (0..count)
        .map(|k| if k < 26 { ((b'a' + k as u8) as char).to_string() } else { format!("s{k}") })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PresentationStyle {
    /// `t⁻¹ u t = φ(u)`, stable letters of infinite order.
    LearyStancu,
    /// `t u t⁻¹ = φ(u)` and `t^{ord φ} = 1`.
    FiniteOrder,
}

impl FromStr for PresentationStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leary-stancu" => Ok(PresentationStyle::LearyStancu),
            "finite-order" => Ok(PresentationStyle::FiniteOrder),
            other => Err(Error::Input(format!("unknown presentation style {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HnnLetter {
    pub domain: Vec<u32>,
    pub images: Vec<u32>,
    /// Order of the stable letter, when it is imposed.
    pub order: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct HnnModel {
    pub group: FiniteGroup,
    pub style: PresentationStyle,
    pub letters: Vec<HnnLetter>,
    pub presentation: Presentation,
}

impl HnnModel {
    pub fn leary_stancu(gens: &FusionGenerators) -> Result<Self> {
        build(gens, PresentationStyle::LearyStancu)
    }

    pub fn finite_order(gens: &FusionGenerators) -> Result<Self> {
        build(gens, PresentationStyle::FiniteOrder)
    }
}

/// Order of an automorphism `f` of its domain.
fn automorphism_order(f: &GroupHom) -> usize {
    let dom = f.domain();
    let mut current: Vec<usize> = dom.iter().collect();
    let mut k = 1;
    loop {
        current = current.iter().map(|&x| f.apply(x).expect("automorphism")).collect();
        if current.iter().zip(dom.iter()).all(|(&a, b)| a == b) {
            return k;
        }
        k += 1;
    }
}

fn build(gens: &FusionGenerators, style: PresentationStyle) -> Result<HnnModel> {
    let s = gens.group();
    let p = gens.prime();
    let mut letters = Vec::new();
    for (k, f) in gens.maps().iter().enumerate() {
        let mut order = None;
        if style == PresentationStyle::FiniteOrder {
            if f.image(s) != *f.domain() {
                return Err(Error::Precondition(format!("φ_{k} is not an automorphism of its domain")));
            }
            let ord = automorphism_order(f);
            if ord % p == 0 {
                return Err(Error::Precondition(format!("φ_{k} has order {ord}, not prime to {p}")));
            }
            let others: Vec<GroupHom> =
                gens.maps().iter().enumerate().filter(|&(j, _)| j != k).map(|(_, g)| g.clone()).collect();
            let closure = generate_fusion(&FusionGenerators::new(s.clone(), p, others)?)?;
            let dom = closure.index_of(f.domain()).expect("subgroup of S");
            if closure.contains(dom, f.images()) {
                return Err(Error::Precondition(format!("φ_{k} is generated by the others (not minimal)")));
            }
            order = Some(ord);
        }
        letters.push(HnnLetter { domain: f.domain().elements().to_vec(), images: f.images().to_vec(), order });
    }
    let s_gens = s.generators();
    let cayley = cayley_presentation(s, &s_gens, 0);
    let mut generators = letter_names(s_gens.len());
    let mut relators = cayley.relators.clone();
    for (k, f) in gens.maps().iter().enumerate() {
        let t = generators.len();
        generators.push(if gens.maps().len() == 1 { "t".into() } else { format!("t{}", k + 1) });
        let (before, after) = match style {
            PresentationStyle::LearyStancu => (-1, 1),
            PresentationStyle::FiniteOrder => (1, -1),
        };
        for u in f.domain().generators() {
            let image = f.apply(u).expect("u in domain");
            let mut w = vec![(t, before)];
            w.extend(cayley.words[u].iter().copied());
            w.push((t, after));
            w.extend(inverse_word(&cayley.words[image]));
            relators.push(free_reduce(w));
        }
        if let Some(ord) = letters[k].order {
            relators.push(vec![(t, 1); ord]);
        }
    }
    Ok(HnnModel { group: s.clone(), style, letters, presentation: Presentation { generators, relators } })
}

pub fn leary_stancu_presentation(gens: &FusionGenerators) -> Result<HnnModel> {
    HnnModel::leary_stancu(gens)
}

pub fn finite_order_presentation(gens: &FusionGenerators) -> Result<HnnModel> {
    HnnModel::finite_order(gens)
}

impl StarOfGroups {
    /// Generators of every vertex group (named `v<i>_<k>`), the Cayley
    /// relators of each vertex and the identifications along the edges.
    pub fn presentation(&self) -> Presentation {
        let mut generators = Vec::new();
        let mut relators = Vec::new();
        let mut words = Vec::new();
        for (v, g) in self.vertices().iter().enumerate() {
            let gens = g.generators();
            let c = cayley_presentation(g, &gens, generators.len());
            generators.extend((0..gens.len()).map(|k| format!("v{}_{}", v + 1, k + 1)));
            relators.extend(c.relators);
            words.push(c.words);
        }
        for e in self.edges() {
            for x in e.group.generators() {
                let mut w = words[0][e.into_base[x] as usize].clone();
                w.extend(inverse_word(&words[e.vertex][e.into_vertex[x] as usize]));
                let w = free_reduce(w);
                if !w.is_empty() {
                    relators.push(w);
                }
            }
        }
        Presentation { generators, relators }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    /// Torsion invariant factors `d₁ | d₂ | …` (all > 1).
    #[serde(serialize_with = "crate::models::hnn::as_strings")]
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
    pub prime: usize,
    /// `dim Hom(H_1, GF(p)) = dim H^1(·; GF(p))`
    pub h1_dimension: usize,
}

pub(crate) fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl fmt::Display for Abelianization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        parts.extend(std::iter::repeat("Z".to_string()).take(self.free_rank));
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// `H_1` from the Smith form of the exponent-sum matrix.
pub fn abelianization(presentation: &Presentation, p: usize) -> Abelianization {
    let cols = presentation.generators.len();
    let matrix: Vec<Vec<BigInt>> = presentation
        .relators
        .iter()
        .map(|r| {
            let mut row = vec![BigInt::from(0); cols];
            for &(g, e) in r {
                row[g] += e;
            }
            row
        })
        .collect();
    let snf = smith_invariants(&matrix, cols);
    let torsion = snf.torsion();
    let pb = BigInt::from(p);
    let h1_dimension = snf.free_rank() + torsion.iter().filter(|d| d.is_multiple_of(&pb)).count();
    Abelianization { torsion, free_rank: snf.free_rank(), prime: p, h1_dimension }
}
