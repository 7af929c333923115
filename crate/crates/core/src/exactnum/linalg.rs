//! Exact dense linear algebra over Q, just enough for characteristic
//! polynomials and norms in the generator algebra.

use super::poly::QPoly;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Matrix = Vec<Vec<BigRational>>;

/// Characteristic polynomial `det(zI - M)` via reduction to upper
/// Hessenberg form followed by the standard recurrence.
pub(crate) fn charpoly(m: &Matrix) -> QPoly {
    let n = m.len();
    let mut h = m.clone();
    // similarity transform to Hessenberg form
    for col in 0..n.saturating_sub(2) {
        let pivot = (col + 1..n).find(|&r| !h[r][col].is_zero());
        let Some(p) = pivot else { continue };
        if p != col + 1 {
            h.swap(p, col + 1);
            for row in h.iter_mut() {
                row.swap(p, col + 1);
            }
        }
        for r in col + 2..n {
            if h[r][col].is_zero() {
                continue;
            }
            let f = &h[r][col] / &h[col + 1][col];
            let (head, tail) = h.split_at_mut(r);
            for (dst, src) in tail[0].iter_mut().zip(&head[col + 1]) {
                *dst -= &f * src;
            }
            for row in h.iter_mut() {
                let v = &f * &row[r];
                row[col + 1] += v;
            }
        }
    }
    // p_k(z) = (z - h_kk) p_{k-1}(z) - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_{i-1}(z)
    let mut ps: Vec<QPoly> = vec![QPoly::constant(BigRational::one())];
    for k in 0..n {
        let mut pk = QPoly::new(vec![-h[k][k].clone(), BigRational::one()]).mul(&ps[k]);
        let mut prod = BigRational::one();
        for i in (0..k).rev() {
            prod *= &h[i + 1][i];
            if prod.is_zero() {
                break;
            }
            let coef = &prod * &h[i][k];
            if !coef.is_zero() {
                pk = pk.sub(&ps[i].scale(&coef));
            }
        }
        ps.push(pk);
    }
    ps.pop().unwrap()
}

pub(crate) fn determinant(m: &Matrix) -> BigRational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det *= &piv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &piv;
            let (head, tail) = a.split_at_mut(r);
            for (dst, src) in tail[0].iter_mut().zip(&head[col]).skip(col) {
                *dst -= &f * src;
            }
        }
    }
    det
}
