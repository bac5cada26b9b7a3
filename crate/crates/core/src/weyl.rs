//! Weyl groups as explicit element lists.
//!
//! Ranks are capped at 4 per simple factor, so the per-factor lists stay
//! small (384 elements for B4/C4) and alternating sums can run over the full
//! list. The group of a product datum is assembled block-diagonally.

use crate::lie::RootDatum;
use crate::linalg;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
    sign: i64,
}

impl WeylElement {
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Determinant, ±1.
    pub fn sign(&self) -> i64 {
        self.sign
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        linalg::mat_vec_i64(&self.matrix, v)
    }
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, WeylElement> {
        self.elements.iter()
    }
}

/// The full Weyl group of the datum, generated by the simple reflections of
/// every simple factor; torus directions are fixed pointwise.
pub fn weyl_group(datum: &RootDatum) -> WeylGroup {
    let rank = datum.rank();
    let mut elements = vec![WeylElement {
        matrix: linalg::identity_i64(rank),
        sign: 1,
    }];
    for fi in 0..datum.factors().len() {
        let Some(data) = datum.factor_data(fi) else {
            continue;
        };
        let span = datum.spans()[fi].clone();
        let mut next = Vec::with_capacity(elements.len() * data.weyl.len());
        for base in &elements {
            for (local, local_sign) in &data.weyl {
                let mut m = base.matrix.clone();
                for (i, row) in local.iter().enumerate() {
                    for (j, &x) in row.iter().enumerate() {
                        m[span.start + i][span.start + j] = x;
                    }
                }
                next.push(WeylElement {
                    matrix: m,
                    sign: base.sign * local_sign,
                });
            }
        }
        elements = next;
    }
    WeylGroup { rank, elements }
}
