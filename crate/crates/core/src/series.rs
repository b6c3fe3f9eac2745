//! Truncated integer power series used as counting oracles for graded rings.

/// Coefficients of `prod_j 1/(1 - s^q_j)` up to `s^len` inclusive: the number
/// of monomials of each weighted degree.
pub fn monomial_counts(weights: &[u32], len: usize) -> Vec<i64> {
    let mut c = vec![0i64; len + 1];
    c[0] = 1;
    for &q in weights {
        divide_by_one_minus(&mut c, q as usize);
    }
    c
}

/// Coefficients up to `s^len` of `prod_j (1 - s^(d - q_j)) / (1 - s^q_j)`,
/// the Poincare series of a graded complete intersection cut out by forms of
/// degrees `d - q_j`.
pub fn jacobian_poincare(weights: &[u32], d: u32, len: usize) -> Vec<i64> {
    let mut c = vec![0i64; len + 1];
    c[0] = 1;
    for &q in weights {
        multiply_by_one_minus(&mut c, d.saturating_sub(q) as usize);
        divide_by_one_minus(&mut c, q as usize);
    }
    c
}

fn multiply_by_one_minus(c: &mut [i64], k: usize) {
    if k == 0 {
        c.iter_mut().for_each(|v| *v = 0);
        return;
    }
    for i in (k..c.len()).rev() {
        c[i] -= c[i - k];
    }
}

fn divide_by_one_minus(c: &mut [i64], k: usize) {
    for i in k..c.len() {
        c[i] += c[i - k];
    }
}
