//! Named small groups: every group of order at most 24, one representative
//! per isomorphism class.

use crate::group::{direct_product, extend_from_generators, semidirect_product, FiniteGroup};

fn perm_group(degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    FiniteGroup::from_permutation_generators(degree, gens, 1 << 16).expect("valid generators")
}

pub fn cyclic(n: usize) -> FiniteGroup {
    if n == 1 {
        return perm_group(1, &[]);
    }
    perm_group(n, &[(1..n).chain([0]).collect()])
}

pub fn klein_four() -> FiniteGroup {
    perm_group(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]])
}

/// Dihedral group of the given order (so `dihedral(8)` is D₈), acting on
/// `order/2` points.
pub fn dihedral(order: usize) -> FiniteGroup {
    assert!(order >= 4 && order % 2 == 0);
    let m = order / 2;
    if m == 2 {
        return klein_four();
    }
    let rotation: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    let reflection: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    perm_group(m, &[rotation, reflection])
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n < 2 {
        return cyclic(1);
    }
    let cycle: Vec<usize> = (1..n).chain([0]).collect();
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    perm_group(n, &[cycle, swap])
}

pub fn alternating(n: usize) -> FiniteGroup {
    if n < 3 {
        return cyclic(1);
    }
    let gens: Vec<Vec<usize>> = (0..n - 2)
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p[i] = i + 1;
            p[i + 1] = i + 2;
            p[i + 2] = i;
            p
        })
        .collect();
    perm_group(n, &gens)
}

/// `⟨a, b | aᵐ = 1, bⁿ = aˢ, b a b⁻¹ = aʳ⟩` of order `m·n`, with `aⁱbʲ` at
/// index `i·n + j`.
pub fn metacyclic(m: usize, n: usize, r: usize, s: usize) -> FiniteGroup {
    assert!(mod_pow(r, n, m) == 1 % m, "r^n must be 1 mod m");
    assert!((s * (r + m - 1)) % m == 0, "a^s must be central");
    let total = m * n;
    let mut table = vec![0u32; total * total];
    for x in 0..total {
        let (i, j) = (x / n, x % n);
        for y in 0..total {
            let (k, l) = (y / n, y % n);
            let mut a = i + k * mod_pow(r, j, m);
            let mut b = j + l;
            if b >= n {
                b -= n;
                a += s;
            }
            table[x * total + y] = ((a % m) * n + b) as u32;
        }
    }
    FiniteGroup::from_table(total, table).expect("metacyclic parameters define a group")
}

fn mod_pow(base: usize, exp: usize, m: usize) -> usize {
    let mut acc = 1 % m;
    for _ in 0..exp {
        acc = acc * base % m;
    }
    acc
}

/// Generalized quaternion / dicyclic group of the given order (a multiple of 4).
pub fn quaternion(order: usize) -> FiniteGroup {
    let m = order / 4;
    metacyclic(2 * m, 2, 2 * m - 1, m)
}

fn product(groups: &[FiniteGroup]) -> FiniteGroup {
    let mut acc = groups[0].clone();
    for g in &groups[1..] {
        acc = direct_product(&acc, g);
    }
    acc
}

/// `(C4 × C2) ⋊ C2` where the involution acts by the automorphism sending
/// the generators `a` (order 4), `b` (order 2) to the given words.
fn c4c2_by_c2(a_image: (usize, usize), b_image: (usize, usize)) -> FiniteGroup {
    let n = direct_product(&cyclic(4), &cyclic(2));
    let a = 2; // (1, 0)
    let b = 1; // (0, 1)
    let enc = |(i, j): (usize, usize)| i * 2 + j;
    let map = extend_from_generators(&n, &[a, b], &n, &[enc(a_image), enc(b_image)])
        .expect("automorphism");
    let action: Vec<usize> = map.iter().map(|&x| x as usize).collect();
    semidirect_product(&n, &cyclic(2), &[1], &[action]).expect("valid action")
}

fn sl23() -> FiniteGroup {
    let q8 = quaternion(8);
    // a = index 2 (a¹b⁰), b = index 1 (a⁰b¹)
    let (a, b) = (2, 1);
    let ab = q8.mul(a, b);
    let map = extend_from_generators(&q8, &[a, b], &q8, &[b, ab]).expect("order-3 automorphism");
    let action: Vec<usize> = map.iter().map(|&x| x as usize).collect();
    semidirect_product(&q8, &cyclic(3), &[1], &[action]).expect("valid action")
}

fn c3_by_d8() -> FiniteGroup {
    let d8 = dihedral(8);
    let r = d8.element_of_permutation(&[1, 2, 3, 0]).expect("rotation");
    let s = d8.element_of_permutation(&[0, 3, 2, 1]).expect("reflection");
    let c3 = cyclic(3);
    let inversion: Vec<usize> = c3.elements().map(|x| c3.inv(x)).collect();
    let identity: Vec<usize> = c3.elements().collect();
    semidirect_product(&c3, &d8, &[r, s], &[inversion, identity]).expect("valid action")
}

fn generalized_dihedral_c3c3() -> FiniteGroup {
    let n = direct_product(&cyclic(3), &cyclic(3));
    let inversion: Vec<usize> = n.elements().map(|x| n.inv(x)).collect();
    semidirect_product(&n, &cyclic(2), &[1], &[inversion]).expect("valid action")
}

/// A named corpus entry.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: &'static str,
    pub group: FiniteGroup,
}

type Builder = fn() -> FiniteGroup;

const CATALOG: &[(&str, Builder)] = &[
    ("C1", || cyclic(1)),
    ("C2", || cyclic(2)),
    ("C3", || cyclic(3)),
    ("C4", || cyclic(4)),
    ("C2xC2", klein_four),
    ("C5", || cyclic(5)),
    ("C6", || cyclic(6)),
    ("S3", || symmetric(3)),
    ("C7", || cyclic(7)),
    ("C8", || cyclic(8)),
    ("C4xC2", || product(&[cyclic(4), cyclic(2)])),
    ("C2xC2xC2", || product(&[cyclic(2), cyclic(2), cyclic(2)])),
    ("D8", || dihedral(8)),
    ("Q8", || quaternion(8)),
    ("C9", || cyclic(9)),
    ("C3xC3", || product(&[cyclic(3), cyclic(3)])),
    ("C10", || cyclic(10)),
    ("D10", || dihedral(10)),
    ("C11", || cyclic(11)),
    ("C12", || cyclic(12)),
    ("C6xC2", || product(&[cyclic(6), cyclic(2)])),
    ("D12", || dihedral(12)),
    ("A4", || alternating(4)),
    ("C3:C4", || metacyclic(3, 4, 2, 0)),
    ("C13", || cyclic(13)),
    ("C14", || cyclic(14)),
    ("D14", || dihedral(14)),
    ("C15", || cyclic(15)),
    ("C16", || cyclic(16)),
    ("C4xC4", || product(&[cyclic(4), cyclic(4)])),
    ("(C4xC2):C2", || c4c2_by_c2((1, 1), (0, 1))),
    ("C4:C4", || metacyclic(4, 4, 3, 0)),
    ("C8xC2", || product(&[cyclic(8), cyclic(2)])),
    ("M16", || metacyclic(8, 2, 5, 0)),
    ("D16", || dihedral(16)),
    ("SD16", || metacyclic(8, 2, 3, 0)),
    ("Q16", || quaternion(16)),
    ("C4xC2xC2", || product(&[cyclic(4), cyclic(2), cyclic(2)])),
    ("D8xC2", || product(&[dihedral(8), cyclic(2)])),
    ("Q8xC2", || product(&[quaternion(8), cyclic(2)])),
    ("C4oD8", || c4c2_by_c2((1, 0), (2, 1))),
    ("C2xC2xC2xC2", || product(&[cyclic(2), cyclic(2), cyclic(2), cyclic(2)])),
    ("C17", || cyclic(17)),
    ("C18", || cyclic(18)),
    ("D18", || dihedral(18)),
    ("C6xC3", || product(&[cyclic(6), cyclic(3)])),
    ("S3xC3", || product(&[symmetric(3), cyclic(3)])),
    ("(C3xC3):C2", generalized_dihedral_c3c3),
    ("C19", || cyclic(19)),
    ("C20", || cyclic(20)),
    ("C10xC2", || product(&[cyclic(10), cyclic(2)])),
    ("D20", || dihedral(20)),
    ("Dic20", || metacyclic(5, 4, 4, 0)),
    ("F20", || metacyclic(5, 4, 2, 0)),
    ("C21", || cyclic(21)),
    ("C7:C3", || metacyclic(7, 3, 2, 0)),
    ("C22", || cyclic(22)),
    ("D22", || dihedral(22)),
    ("C23", || cyclic(23)),
    ("C3:C8", || metacyclic(3, 8, 2, 0)),
    ("C24", || cyclic(24)),
    ("SL(2,3)", sl23),
    ("Dic24", || quaternion(24)),
    ("C4xS3", || product(&[cyclic(4), symmetric(3)])),
    ("D24", || dihedral(24)),
    ("C2x(C3:C4)", || product(&[cyclic(2), metacyclic(3, 4, 2, 0)])),
    ("C3:D8", c3_by_d8),
    ("C12xC2", || product(&[cyclic(12), cyclic(2)])),
    ("C3xD8", || product(&[cyclic(3), dihedral(8)])),
    ("C3xQ8", || product(&[cyclic(3), quaternion(8)])),
    ("S4", || symmetric(4)),
    ("C2xA4", || product(&[cyclic(2), alternating(4)])),
    ("C2xC2xS3", || product(&[cyclic(2), cyclic(2), symmetric(3)])),
    ("C6xC2xC2", || product(&[cyclic(6), cyclic(2), cyclic(2)])),
];

const ALIASES: &[(&str, &str)] = &[("V4", "C2xC2"), ("Dic12", "C3:C4"), ("C2^4", "C2xC2xC2xC2")];

/// Every corpus group of order at most `max_order`, in catalog order.
pub fn small_groups(max_order: usize) -> Vec<NamedGroup> {
    CATALOG
        .iter()
        .map(|&(name, build)| NamedGroup { name, group: build() })
        .filter(|g| g.group.order() <= max_order)
        .collect()
}

pub fn names() -> impl Iterator<Item = &'static str> {
    CATALOG.iter().map(|&(name, _)| name)
}

/// Looks up a corpus group by name (case-insensitive, with a few aliases).
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    let canonical = ALIASES
        .iter()
        .find(|(alias, _)| alias.eq_ignore_ascii_case(name))
        .map_or(name, |&(_, target)| target);
    CATALOG
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(canonical))
        .map(|&(_, build)| build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic;

    /// Number of groups of each order 1..=24.
    const GROUP_COUNTS: [usize; 24] = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15];

    #[test]
    fn catalog_is_complete_and_irredundant() {
        let all = small_groups(24);
        for order in 1..=24 {
            let of_order: Vec<&NamedGroup> = all.iter().filter(|g| g.group.order() == order).collect();
            assert_eq!(of_order.len(), GROUP_COUNTS[order - 1], "order {order}");
            for (i, a) in of_order.iter().enumerate() {
                for b in &of_order[i + 1..] {
                    assert!(
                        !are_isomorphic(&a.group, &b.group),
                        "{} ≅ {}",
                        a.name,
                        b.name
                    );
                }
            }
        }
    }

    #[test]
    fn lookup() {
        assert_eq!(by_name("a4").unwrap().order(), 12);
        assert_eq!(by_name("V4").unwrap().order(), 4);
        assert!(by_name("nope").is_none());
        assert!(are_isomorphic(&by_name("Dic24").unwrap(), &quaternion(24)));
    }
}
