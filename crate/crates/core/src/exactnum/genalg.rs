//! Dense arithmetic in `Q[x_1..x_m] / (P_1(x_1), .., P_m(x_m))`, the algebra
//! spanned by a set of generators. Multiplication matrices in this algebra
//! give characteristic polynomials whose roots include every value a
//! generator polynomial can take, which is what the exact zero test needs.

use super::generator::Generator;
use super::linalg::{charpoly, Matrix};
use super::poly::QPoly;
use super::scalar::{Kind, Scalar};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Arc;

pub(crate) type Dense = Vec<BigRational>;

pub(crate) struct GenAlgebra {
    gens: Vec<Arc<Generator>>,
    dims: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
    /// `reduce[j][k]` is `x_j^k mod P_j` for `k < 2 d_j - 1`
    reduce: Vec<Vec<Vec<BigRational>>>,
}

fn power_table(p: &QPoly) -> Vec<Vec<BigRational>> {
    let d = p.degree().unwrap();
    let mut table = Vec::with_capacity(2 * d);
    let mut cur = vec![BigRational::zero(); d];
    cur[0] = BigRational::one();
    for _ in 0..(2 * d).saturating_sub(1).max(1) {
        table.push(cur.clone());
        // multiply by x and reduce with the monic P
        let top = cur[d - 1].clone();
        let mut next = vec![BigRational::zero(); d];
        for i in (1..d).rev() {
            next[i] = cur[i - 1].clone();
        }
        if !top.is_zero() {
            for (i, c) in p.coeffs()[..d].iter().enumerate() {
                next[i] -= &top * c;
            }
        }
        cur = next;
    }
    table
}

impl GenAlgebra {
    /// `gens` must be sorted in tower order and free of duplicates.
    pub fn new(gens: Vec<Arc<Generator>>) -> Self {
        let dims: Vec<usize> = gens.iter().map(|g| g.degree()).collect();
        let mut strides = Vec::with_capacity(dims.len());
        let mut size = 1;
        for d in &dims {
            strides.push(size);
            size *= d;
        }
        let reduce = gens.iter().map(|g| power_table(g.poly())).collect();
        GenAlgebra {
            gens,
            dims,
            strides,
            size,
            reduce,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn axis_of(&self, g: &Arc<Generator>) -> usize {
        self.gens
            .iter()
            .position(|h| Arc::ptr_eq(h, g) || h.structural_cmp(g).is_eq())
            .expect("generator outside the algebra")
    }

    pub fn embed(&self, s: &Scalar) -> Dense {
        let mut out = vec![BigRational::zero(); self.size];
        self.accumulate(s, 0, &mut out);
        out
    }

    fn accumulate(&self, s: &Scalar, offset: usize, out: &mut Dense) {
        match s.kind() {
            Kind::Rat(q) => out[offset] += q,
            Kind::Gen { gen, coeffs } => {
                let axis = self.axis_of(gen);
                for (i, c) in coeffs.iter().enumerate() {
                    self.accumulate(c, offset + i * self.strides[axis], out);
                }
            }
            Kind::Rad { .. } => unreachable!("radicals never appear below generators"),
        }
    }

    pub fn to_scalar(&self, d: &Dense) -> Scalar {
        self.build(d, self.gens.len(), 0)
    }

    fn build(&self, d: &Dense, axes: usize, offset: usize) -> Scalar {
        if axes == 0 {
            return Scalar::from_rational(d[offset].clone());
        }
        let j = axes - 1;
        let coeffs = (0..self.dims[j])
            .map(|i| self.build(d, j, offset + i * self.strides[j]))
            .collect();
        Scalar::gen_poly(self.gens[j].clone(), coeffs)
    }

    fn exponents(&self, mut idx: usize) -> Vec<usize> {
        self.dims
            .iter()
            .map(|d| {
                let e = idx % d;
                idx /= d;
                e
            })
            .collect()
    }

    pub fn mul(&self, a: &Dense, b: &Dense) -> Dense {
        let m = self.dims.len();
        let mut out = vec![BigRational::zero(); self.size];
        let a_nz: Vec<(Vec<usize>, &BigRational)> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.exponents(i), c))
            .collect();
        let b_nz: Vec<(Vec<usize>, &BigRational)> = b
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.exponents(i), c))
            .collect();
        for (ea, ca) in &a_nz {
            for (eb, cb) in &b_nz {
                let coef = *ca * *cb;
                // expand prod_j x_j^(ea_j + eb_j) through the reduction tables
                let mut terms: Vec<(usize, BigRational)> = vec![(0, coef)];
                for j in 0..m {
                    let row = &self.reduce[j][ea[j] + eb[j]];
                    let mut next = Vec::with_capacity(terms.len() * row.len());
                    for (idx, c) in &terms {
                        for (i, r) in row.iter().enumerate() {
                            if !r.is_zero() {
                                next.push((idx + i * self.strides[j], c * r));
                            }
                        }
                    }
                    terms = next;
                }
                for (idx, c) in terms {
                    out[idx] += c;
                }
            }
        }
        out
    }

    pub fn multiplication_matrix(&self, e: &Dense) -> Matrix {
        let mut cols = Vec::with_capacity(self.size);
        for j in 0..self.size {
            let mut basis = vec![BigRational::zero(); self.size];
            basis[j] = BigRational::one();
            cols.push(self.mul(e, &basis));
        }
        (0..self.size)
            .map(|r| (0..self.size).map(|c| cols[c][r].clone()).collect())
            .collect()
    }

    pub fn charpoly(&self, e: &Dense) -> QPoly {
        charpoly(&self.multiplication_matrix(e))
    }

    /// Element whose value at the actual generators is `1/e`, given that
    /// this value is nonzero. Works even when the algebra has zero divisors:
    /// strip the `z` factors from the characteristic polynomial and apply
    /// Cayley-Hamilton to the cofactor.
    pub fn inverse(&self, e: &Dense) -> Dense {
        let chi = self.charpoly(e);
        let mut cs = chi.coeffs().to_vec();
        while cs.first().is_some_and(Zero::is_zero) {
            cs.remove(0);
        }
        let c0 = cs[0].clone();
        // R(z) = (chi'(z) - c0) / z, evaluated by Horner at e
        let mut acc = vec![BigRational::zero(); self.size];
        for c in cs[1..].iter().rev() {
            acc = self.mul(&acc, e);
            acc[0] += c;
        }
        let k = -c0.recip();
        acc.into_iter().map(|v| v * &k).collect()
    }
}
