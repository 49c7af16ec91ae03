//! Gauss-Jordan elimination over exact rationals.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::ExactRat;

/// Solves the square system `a x = b`.
pub fn solve_square(mut a: Vec<Vec<ExactRat>>, mut b: Vec<ExactRat>) -> Result<Vec<ExactRat>> {
    let n = b.len();
    assert!(
        a.len() == n && a.iter().all(|row| row.len() == n),
        "system must be square"
    );
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let pivot_row = a[col].clone();
            for (v, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *v -= &factor * p;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, ratio};

    #[test]
    fn solves_small_system() {
        // x + 2y = 5, 3x - y = 1  ->  x = 1, y = 2
        let a = vec![vec![rat(1), rat(2)], vec![rat(3), rat(-1)]];
        let x = solve_square(a, vec![rat(5), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
    }

    #[test]
    fn rational_solution_and_pivoting() {
        // 0x + 2y = 1, 3x + 0y = 2
        let a = vec![vec![rat(0), rat(2)], vec![rat(3), rat(0)]];
        let x = solve_square(a, vec![rat(1), rat(2)]).unwrap();
        assert_eq!(x, vec![ratio(int(2), int(3)), ratio(int(1), int(2))]);
    }

    #[test]
    fn singular() {
        let a = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert!(matches!(
            solve_square(a, vec![rat(1), rat(2)]),
            Err(Error::Singular)
        ));
    }
}
