use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::{rat, Poly};

/// Bidiagonal minimal basis: `s^{d_i}` on the diagonal, ones just below it,
/// zero rows underneath. The identity in the square case.
pub fn build_minimal_basis(degrees: &[usize], ambient: usize) -> Result<PolyMatrix> {
    let r = degrees.len();
    if ambient < r {
        return Err(Error::ShapeMismatch(format!("{r} columns do not fit in ambient dimension {ambient}")));
    }
    if ambient == r {
        if degrees.iter().any(|&d| d > 0) {
            return Err(Error::ImpossibleSquareCase);
        }
        return Ok(PolyMatrix::identity(r));
    }
    let mut b = PolyMatrix::zeros(ambient, r);
    for (j, &d) in degrees.iter().enumerate() {
        b[(j, j)] = Poly::monomial(rat(1), d);
        b[(j + 1, j)] = Poly::one();
    }
    Ok(b)
}

/// One cell of a northwest-corner transportation plan between the two degree lists.
struct Cell {
    row: usize,
    col: usize,
    weight: usize,
}

fn northwest_corner(rows: &[usize], cols: &[usize]) -> Vec<Cell> {
    let (mut rr, mut cc) = (rows.to_vec(), cols.to_vec());
    let (mut i, mut j) = (0, 0);
    let mut cells = Vec::new();
    loop {
        let w = rr[i].min(cc[j]);
        rr[i] -= w;
        cc[j] -= w;
        cells.push(Cell { row: i, col: j, weight: w });
        if i + 1 == rows.len() && j + 1 == cols.len() {
            return cells;
        }
        if rr[i] == 0 && i + 1 < rows.len() {
            i += 1;
        } else {
            j += 1;
        }
    }
}

/// Dual minimal bases `M` (`(r+q)×r`, degrees `deg_m`) and `N` (`(r+q)×q`,
/// degrees `deg_n`) with `MᵀN = 0`.
///
/// The transportation plan is a staircase of `r+q-1` cells joining `r+q`
/// nodes along a path. Cells in row `i` form a run carrying column `i` of `M`
/// with suffix-sum exponents; cells in column `j` carry column `j` of `N` with
/// prefix-sum exponents and alternating signs. Runs of different kinds meet
/// in exactly one cell, where the two binomial contributions cancel.
pub fn build_dual_minimal_bases(deg_m: &[usize], deg_n: &[usize]) -> Result<(PolyMatrix, PolyMatrix)> {
    let (sm, sn) = (deg_m.iter().sum::<usize>(), deg_n.iter().sum::<usize>());
    if sm != sn {
        return Err(Error::SumMismatch { left: sm, right: sn });
    }
    let (r, q) = (deg_m.len(), deg_n.len());
    let p = r + q;
    if r == 0 || q == 0 || sm == 0 {
        let m = PolyMatrix::identity(r).vstack(&PolyMatrix::zeros(q, r));
        let n = PolyMatrix::zeros(r, q).vstack(&PolyMatrix::identity(q));
        return Ok((m, n));
    }
    let cells = northwest_corner(deg_m, deg_n);
    let mut m = PolyMatrix::zeros(p, r);
    let mut n = PolyMatrix::zeros(p, q);
    // cell t joins nodes t and t+1
    for i in 0..r {
        let run: Vec<usize> = (0..cells.len()).filter(|&t| cells[t].row == i).collect();
        let mut suffix = 0;
        let last = *run.last().expect("every row holds a cell");
        m[(last + 1, i)] = Poly::one();
        for &t in run.iter().rev() {
            suffix += cells[t].weight;
            m[(t, i)] = Poly::monomial(rat(1), suffix);
        }
    }
    for j in 0..q {
        let run: Vec<usize> = (0..cells.len()).filter(|&t| cells[t].col == j).collect();
        let first = run[0];
        let sign = |node: usize| if node % 2 == 0 { rat(1) } else { rat(-1) };
        n[(first, j)] = Poly::constant(sign(first));
        let mut prefix = 0;
        for &t in &run {
            prefix += cells[t].weight;
            n[(t + 1, j)] = Poly::monomial(sign(t + 1), prefix);
        }
    }
    Ok((m, n))
}
