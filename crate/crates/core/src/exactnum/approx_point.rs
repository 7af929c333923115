//! Floating enclosures of point predicates. A `false` answer is certain;
//! `true` only means the exact test is still needed.

use super::interval::Approx;
use crate::geoplane::EPoint;

fn enc(p: &EPoint) -> (Approx, Approx) {
    (p.x.approx_interval(), p.y.approx_interval())
}

fn sub(a: Approx, b: Approx) -> Approx {
    a.add(b.neg())
}

/// Could `T(a,b,c)` hold?
pub fn maybe_betw(a: &EPoint, b: &EPoint, c: &EPoint) -> bool {
    let ((ax, ay), (bx, by), (cx, cy)) = (enc(a), enc(b), enc(c));
    let (ux, uy) = (sub(bx, ax), sub(by, ay));
    let (vx, vy) = (sub(cx, ax), sub(cy, ay));
    let cross = sub(ux.mul(vy), uy.mul(vx));
    if matches!(cross.sign(), Some(s) if s != 0) {
        return false;
    }
    let dot = sub(ax, bx).mul(sub(cx, bx)).add(sub(ay, by).mul(sub(cy, by)));
    dot.sign() != Some(1)
}

/// Could `E(a,b,c,d)` hold?
pub fn maybe_equi(a: &EPoint, b: &EPoint, c: &EPoint, d: &EPoint) -> bool {
    let d2 = |p: &EPoint, q: &EPoint| {
        let ((px, py), (qx, qy)) = (enc(p), enc(q));
        let (dx, dy) = (sub(px, qx), sub(py, qy));
        dx.mul(dx).add(dy.mul(dy))
    };
    !matches!(sub(d2(a, b), d2(c, d)).sign(), Some(s) if s != 0)
}
