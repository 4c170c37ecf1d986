use super::{inv_mod, FpVector};

/// An echelon basis where every row carries a tag vector that records what
/// the row represents (for instance, its cohomology class).
///
/// Rows are kept sorted by pivot with a leading 1, so a vector is reduced
/// by a single ascending sweep.
#[derive(Clone, Debug)]
pub struct TaggedEchelon {
    p: u32,
    len: usize,
    tag_len: usize,
    pivots: Vec<usize>,
    rows: Vec<FpVector>,
    tags: Vec<FpVector>,
}

impl TaggedEchelon {
    pub fn new(p: u32, len: usize, tag_len: usize) -> Self {
        TaggedEchelon { p, len, tag_len, pivots: Vec::new(), rows: Vec::new(), tags: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[FpVector] {
        &self.rows
    }

    /// Writes `v = Σ cᵢ·rowᵢ + remainder` and returns the remainder together
    /// with `Σ cᵢ·tagᵢ`.
    pub fn reduce(&self, v: &FpVector) -> (FpVector, FpVector) {
        debug_assert_eq!(v.len(), self.len);
        let mut rem = v.clone();
        let mut tag = FpVector::zero(self.p, self.tag_len);
        for ((&pivot, row), row_tag) in self.pivots.iter().zip(&self.rows).zip(&self.tags) {
            let c = rem.get(pivot);
            if c != 0 {
                rem.add_scaled_from(row, self.p - c, pivot);
                tag.add_scaled(row_tag, c);
            }
        }
        (rem, tag)
    }

    pub fn contains(&self, v: &FpVector) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Adds `v` with the given tag; returns false (and changes nothing) when
    /// `v` is already in the span.
    pub fn insert(&mut self, v: &FpVector, tag: FpVector) -> bool {
        debug_assert_eq!(tag.len(), self.tag_len);
        let (mut rem, acc) = self.reduce(v);
        let Some(pivot) = rem.first_nonzero() else {
            return false;
        };
        let mut tag = tag;
        tag.add_scaled(&acc, self.p - 1);
        let lead = rem.get(pivot);
        if lead != 1 {
            let s = inv_mod(lead, self.p);
            rem.scale(s);
            tag.scale(s);
        }
        let at = self.pivots.partition_point(|&q| q < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, rem);
        self.tags.insert(at, tag);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_follow_linear_combinations() {
        let p = 3;
        let mut e = TaggedEchelon::new(p, 4, 2);
        let a = FpVector::from_entries(p, &[0, 1, 1, 0]);
        let b = FpVector::from_entries(p, &[1, 0, 2, 1]);
        assert!(e.insert(&a, FpVector::from_entries(p, &[1, 0])));
        assert!(e.insert(&b, FpVector::from_entries(p, &[0, 1])));
        let mut combo = a.clone();
        combo.scale(2);
        combo.add_scaled(&b, 1);
        let (rem, tag) = e.reduce(&combo);
        assert!(rem.is_zero());
        assert_eq!(tag.entries(), vec![2, 1]);
        assert!(!e.insert(&combo, FpVector::zero(p, 2)));
        assert_eq!(e.dim(), 2);
        assert!(!e.contains(&FpVector::unit(p, 4, 3)));
    }
}
