//! Standard Young tableaux enumeration with descent statistics.

use crate::reptheory::symmetric::partitions;

/// Shape and descent data of one standard Young tableau. Rows are indexed
/// from the top (English notation); `i` is a descent when `i + 1` sits in a
/// strictly lower row, i.e. `i` appears in a higher row than `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauDatum {
    pub shape: Vec<usize>,
    pub descent_count: usize,
    pub has_double_descent: bool,
    pub has_final_descent: bool,
}

impl TableauDatum {
    fn from_rows(shape: &[usize], row_of: &[usize]) -> Self {
        let d = row_of.len();
        let descents: Vec<bool> = (0..d.saturating_sub(1))
            .map(|i| row_of[i] < row_of[i + 1])
            .collect();
        let descent_count = descents.iter().filter(|&&b| b).count();
        let has_double_descent = descents.windows(2).any(|w| w[0] && w[1]);
        let has_final_descent = *descents.last().unwrap_or(&false);
        TableauDatum {
            shape: shape.to_vec(),
            descent_count,
            has_double_descent,
            has_final_descent,
        }
    }
}

/// All standard Young tableaux with `d` boxes, across all shapes.
pub fn standard_young_tableaux(d: usize) -> Vec<TableauDatum> {
    let mut out = Vec::new();
    for shape in partitions(d) {
        let mut fill = vec![0usize; shape.len()];
        let mut row_of = Vec::with_capacity(d);
        enumerate_fillings(&shape, &mut fill, &mut row_of, d, &mut out);
    }
    out
}

fn enumerate_fillings(
    shape: &[usize],
    fill: &mut Vec<usize>,
    row_of: &mut Vec<usize>,
    d: usize,
    out: &mut Vec<TableauDatum>,
) {
    if row_of.len() == d {
        out.push(TableauDatum::from_rows(shape, row_of));
        return;
    }
    for r in 0..shape.len() {
        if fill[r] < shape[r] && (r == 0 || fill[r - 1] > fill[r]) {
            fill[r] += 1;
            row_of.push(r);
            enumerate_fillings(shape, fill, row_of, d, out);
            row_of.pop();
            fill[r] -= 1;
        }
    }
}
