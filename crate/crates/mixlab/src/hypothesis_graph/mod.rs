//! Hypothesis classes as bipartite incidence matrices.
//!
//! Rows are hypotheses, columns are examples, and there is an edge `(h, x)`
//! iff `h(x) = 1`. Every subset operation takes the hypothesis subset first
//! and the example subset second.

mod generators;
mod io;

pub use generators::{
    contiguous_parts, gen_parity, gen_partitioned, gen_random, gen_threshold, MAX_PARITY_BITS,
};
pub use io::{read_class, read_class_csv, read_class_path, write_class, write_class_csv, write_class_path};

use serde::{Deserialize, Serialize};

use crate::bits::{iter_ones, mask_from_indices, popcount_and, BitMatrix};
use crate::error::{Error, Result};

/// A finite hypothesis class over a finite example domain.
///
/// Immutable once built. Labels are stored twice, packed by row and packed by
/// column, so that neighbourhood counts from either side are popcounts.
#[derive(Clone, Debug)]
pub struct HypothesisClass {
    rows: BitMatrix,
    cols: BitMatrix,
    name: Option<String>,
}

impl PartialEq for HypothesisClass {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for HypothesisClass {}

impl HypothesisClass {
    pub fn from_bit_matrix(rows: BitMatrix) -> Result<Self> {
        if rows.rows() == 0 || rows.cols() == 0 {
            return Err(Error::input(format!(
                "a class needs at least one hypothesis and one example (got {}x{})",
                rows.rows(),
                rows.cols()
            )));
        }
        let cols = rows.transpose();
        Ok(HypothesisClass {
            rows,
            cols,
            name: None,
        })
    }

    pub fn from_fn(
        num_hypotheses: usize,
        num_examples: usize,
        mut label: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self> {
        let mut m = BitMatrix::zeros(num_hypotheses, num_examples);
        for h in 0..num_hypotheses {
            for x in 0..num_examples {
                if label(h, x) {
                    m.set(h, x, true);
                }
            }
        }
        Self::from_bit_matrix(m)
    }

    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        if let Some(i) = rows.iter().position(|r| r.as_ref().len() != width) {
            return Err(Error::input(format!(
                "row {i} has {} labels, expected {width}",
                rows[i].as_ref().len()
            )));
        }
        Self::from_fn(rows.len(), width, |h, x| rows[h].as_ref()[x])
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn num_hypotheses(&self) -> usize {
        self.rows.rows()
    }

    pub fn num_examples(&self) -> usize {
        self.rows.cols()
    }

    #[inline]
    pub fn label(&self, h: usize, x: usize) -> bool {
        self.rows.get(h, x)
    }

    /// Packed labels of hypothesis `h` over all examples.
    #[inline]
    pub fn row_bits(&self, h: usize) -> &[u64] {
        self.rows.row(h)
    }

    /// Packed labels of example `x` over all hypotheses.
    #[inline]
    pub fn col_bits(&self, x: usize) -> &[u64] {
        self.cols.row(x)
    }

    pub fn by_row(&self) -> &BitMatrix {
        &self.rows
    }

    pub fn by_col(&self) -> &BitMatrix {
        &self.cols
    }

    pub fn row(&self, h: usize) -> Vec<bool> {
        (0..self.num_examples()).map(|x| self.label(h, x)).collect()
    }

    pub fn row_ones(&self, h: usize) -> usize {
        self.rows.row_ones(h)
    }

    pub fn col_ones(&self, x: usize) -> usize {
        self.cols.row_ones(x)
    }

    /// e(X, H): the number of ones in the whole matrix.
    pub fn total_edges(&self) -> usize {
        self.rows.count_ones()
    }

    pub fn density(&self) -> Density {
        Density {
            edges: self.total_edges() as u64,
            cells: (self.num_hypotheses() * self.num_examples()) as u64,
        }
    }

    /// e(S, T): ones in the submatrix `pair.hyp_subset x pair.ex_subset`.
    pub fn edge_count(&self, pair: &SubsetPair) -> Result<usize> {
        pair.validate(self)?;
        let s_mask = mask_from_indices(self.num_examples(), &pair.ex_subset);
        Ok(pair
            .hyp_subset
            .iter()
            .map(|&h| popcount_and(self.row_bits(h), &s_mask))
            .sum())
    }

    /// Duplicate rows removed, remaining rows in lexicographic order of their
    /// label strings (`0 < 1`, example 0 first).
    pub fn canonicalize(&self) -> HypothesisClass {
        let mut rows: Vec<Vec<bool>> = (0..self.num_hypotheses()).map(|h| self.row(h)).collect();
        rows.sort();
        rows.dedup();
        let mut out = HypothesisClass::from_rows(&rows).expect("non-empty rows");
        out.name = self.name.clone();
        out
    }

    /// A copy with the given cells complemented. Cells must be in range.
    pub(crate) fn with_cells_toggled(&self, cells: &[(usize, usize)]) -> HypothesisClass {
        let mut rows = self.rows.clone();
        for &(h, x) in cells {
            rows.toggle(h, x);
        }
        let mut out = HypothesisClass::from_bit_matrix(rows).expect("dimensions unchanged");
        out.name = self.name.clone();
        out
    }

    /// Example indices labelled 1 by `h`.
    pub fn neighbours_of_hypothesis(&self, h: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row_bits(h))
    }
}

/// `edges / cells`, kept as a ratio so baselines can be compared exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Density {
    pub edges: u64,
    pub cells: u64,
}

impl Density {
    pub fn as_f64(self) -> f64 {
        self.edges as f64 / self.cells as f64
    }
}

/// A hypothesis subset `T` and an example subset `S`, each sorted and
/// duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubsetPair {
    #[serde(rename = "T")]
    pub hyp_subset: Vec<usize>,
    #[serde(rename = "S")]
    pub ex_subset: Vec<usize>,
}

impl SubsetPair {
    pub fn new(hyp_subset: impl IntoIterator<Item = usize>, ex_subset: impl IntoIterator<Item = usize>) -> Self {
        let mut t: Vec<usize> = hyp_subset.into_iter().collect();
        let mut s: Vec<usize> = ex_subset.into_iter().collect();
        t.sort_unstable();
        t.dedup();
        s.sort_unstable();
        s.dedup();
        SubsetPair {
            hyp_subset: t,
            ex_subset: s,
        }
    }

    /// All hypotheses against all examples.
    pub fn full(class: &HypothesisClass) -> Self {
        SubsetPair::new(0..class.num_hypotheses(), 0..class.num_examples())
    }

    pub fn t(&self) -> usize {
        self.hyp_subset.len()
    }

    pub fn s(&self) -> usize {
        self.ex_subset.len()
    }

    pub fn validate(&self, class: &HypothesisClass) -> Result<()> {
        if let Some(&h) = self.hyp_subset.iter().find(|&&h| h >= class.num_hypotheses()) {
            return Err(Error::input(format!(
                "hypothesis index {h} out of range (class has {})",
                class.num_hypotheses()
            )));
        }
        if let Some(&x) = self.ex_subset.iter().find(|&&x| x >= class.num_examples()) {
            return Err(Error::input(format!(
                "example index {x} out of range (class has {})",
                class.num_examples()
            )));
        }
        Ok(())
    }

    pub(crate) fn require_non_empty(&self) -> Result<()> {
        if self.hyp_subset.is_empty() || self.ex_subset.is_empty() {
            return Err(Error::input("both subsets of the pair must be non-empty"));
        }
        Ok(())
    }
}
