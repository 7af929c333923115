//! Rational polynomials vanishing at every root of a polynomial with
//! exact coefficients, and root extraction through them.

use super::genalg::GenAlgebra;
use super::generator::create_from_root;
use super::linalg::determinant;
use super::poly::QPoly;
use super::Scalar;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    out
}

/// Removes radicals by multiplying with conjugates: `p0^2 - r p1^2`.
fn strip_radicals(mut coeffs: Vec<Scalar>) -> Vec<Scalar> {
    loop {
        let Some(top) = coeffs
            .iter()
            .filter(|c| c.has_radicals())
            .fold(None::<&Scalar>, |best, c| match best {
                Some(b) if !c.top_above(b) => Some(b),
                _ => Some(c),
            })
            .cloned()
        else {
            return coeffs;
        };
        let (_, _, r) = top.split_top_radical().unwrap();
        let (p0, p1): (Vec<Scalar>, Vec<Scalar>) = coeffs.iter().map(|c| c.split_at(&top)).unzip();
        let sq0 = poly_mul(&p0, &p0);
        let sq1 = poly_mul(&p1, &p1);
        coeffs = sq0.iter().zip(&sq1).map(|(x, y)| x - &(&r * y)).collect();
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.sign() == 0) {
            coeffs.pop();
        }
    }
}

/// Interpolates the polynomial of degree `< xs.len()` through the points.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> QPoly {
    // Newton divided differences
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = QPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        acc = acc.mul(&QPoly::linear_root(xs[i].clone())).add(&QPoly::constant(dd[i].clone()));
    }
    acc
}

/// Nonzero rational polynomial whose roots include all real roots of
/// `sum coeffs[i] x^i`. The leading coefficient must be nonzero.
pub(crate) fn rational_multiple(coeffs: &[Scalar]) -> QPoly {
    let coeffs = strip_radicals(coeffs.to_vec());
    if let Some(qs) = coeffs.iter().map(|c| c.as_rational().cloned()).collect::<Option<Vec<_>>>() {
        return QPoly::new(qs);
    }
    let alg = GenAlgebra::new(Scalar::generators_of(&coeffs));
    let dense: Vec<_> = coeffs.iter().map(|c| alg.embed(c)).collect();
    let n = coeffs.len() - 1;
    let points = n * alg.size() + 1;
    let mut xs = Vec::with_capacity(points);
    let mut ys = Vec::with_capacity(points);
    for j in 0..points {
        let x = BigRational::from_integer((j as i64).into());
        // p(x) as an algebra element, then its norm
        let mut val = vec![BigRational::zero(); alg.size()];
        let mut pow = BigRational::one();
        for d in &dense {
            for (v, c) in val.iter_mut().zip(d) {
                *v += c * &pow;
            }
            pow *= &x;
        }
        ys.push(determinant(&alg.multiplication_matrix(&val)));
        xs.push(x);
    }
    interpolate(&xs, &ys)
}

/// Real roots of `sum coeffs[i] x^i` in ascending order, up to `limit` of
/// them. The leading coefficient must be nonzero.
pub(crate) fn real_roots(coeffs: &[Scalar], limit: usize) -> Vec<Scalar> {
    let q = rational_multiple(coeffs).squarefree();
    let eval = |x: &Scalar| {
        coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    };
    let exact = coeffs.iter().all(Scalar::is_rational_repr);
    let mut out = Vec::new();
    for root in q.isolate_real_roots() {
        if out.len() >= limit {
            break;
        }
        let v = Scalar::from_root_value(create_from_root(&q, &root));
        if exact || eval(&v).sign() == 0 {
            out.push(v);
        }
    }
    out
}
