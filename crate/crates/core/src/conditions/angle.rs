//! Visual-angle machinery: the horizon of an ortho translation and the
//! comparison of arguments.

use crate::jet::Jet;
use crate::roundoff::EPS;

/// A jet whose argument is the least visual angle that separates the core
/// geodesic from its translate by `ortho`.
///
/// `ortho` is replaced by its negation when its center has negative real
/// part; the caller's value is left alone.
pub fn horizon(ortho: Jet) -> Jet {
    let ortho = if ortho.f().re < 0.0 { -ortho } else { ortho };
    let r = ortho * (ortho - 6.0) + 1.0;
    let d = (ortho * -4.0 + 4.0) * (-ortho).sqrt();
    let x = r.f() / d.f();
    let den = (ortho + 1.0) * (ortho + 1.0);
    let mut h = if x.z.re > 0.0 { (r + d) / den } else { (r - d) / den };
    if ortho.f().re < (1.0 + EPS) * (ortho.size() + ortho.e()) {
        h = Jet::with_error(h.f(), (1.0 + EPS) * (h.size() + h.e()));
    }
    h
}

fn im_positive(v: &Jet) -> bool {
    v.f().im > (1.0 + EPS) * (v.size() + v.e())
}

fn im_negative(v: &Jet) -> bool {
    -v.f().im > (1.0 + EPS) * (v.size() + v.e())
}

/// True only if `|arg x| > |arg y|` for every pair of values of the classes.
pub fn larger_angle(x: &Jet, y: &Jet) -> bool {
    let mut xy = Jet::zero();
    if im_positive(x) {
        if im_positive(y) {
            xy = *x / *y;
        }
        if im_negative(y) {
            xy = *x * *y;
        }
    }
    if im_negative(x) {
        if im_positive(y) {
            xy = -*x * *y;
        }
        if im_negative(y) {
            xy = -*x / *y;
        }
    }
    im_positive(&xy)
}
