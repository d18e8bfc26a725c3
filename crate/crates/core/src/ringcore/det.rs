use super::poly::MultiPoly;

/// Determinant of the `size x size` matrix `entry(i, j)` by Laplace
/// expansion over column subsets, row by row.
pub fn determinant(size: usize, entry: impl Fn(usize, usize) -> MultiPoly) -> MultiPoly {
    if size == 0 {
        return MultiPoly::one();
    }
    assert!(size < 24, "determinant too large for subset expansion");
    let cells: Vec<Vec<MultiPoly>> =
        (0..size).map(|i| (0..size).map(|j| entry(i, j)).collect()).collect();
    // minors[S] = det(rows 0..|S|, columns S), built up by popcount.
    let mut minors: Vec<Option<MultiPoly>> = vec![None; 1 << size];
    minors[0] = Some(MultiPoly::one());
    let mut by_count: Vec<Vec<usize>> = vec![Vec::new(); size + 1];
    for s in 0..(1usize << size) {
        by_count[s.count_ones() as usize].push(s);
    }
    for r in 1..=size {
        for &s in &by_count[r] {
            let mut acc = MultiPoly::zero();
            for j in 0..size {
                if s & (1 << j) == 0 || cells[r - 1][j].is_zero() {
                    continue;
                }
                let Some(minor) = &minors[s & !(1 << j)] else { continue };
                if minor.is_zero() {
                    continue;
                }
                let after = (s >> (j + 1)).count_ones();
                let term = &cells[r - 1][j] * minor;
                if after % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            minors[s] = Some(acc);
        }
    }
    minors[(1 << size) - 1].take().unwrap_or_default()
}
