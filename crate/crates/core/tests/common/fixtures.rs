//! Expected bit patterns of small exact cases, computed with an independent
//! binary64 model of the kernels.

use hyperverify::conditions::{box_geometry, box_params, holes, horizon, larger_angle, BoxAddress};
use hyperverify::roundoff::EPS;
use hyperverify::{BallComplex, ExactComplex, Jet, JetMatrix};

const Z: ExactComplex = ExactComplex::ZERO;

fn x(re: f64, im: f64) -> ExactComplex {
    ExactComplex::new(re, im)
}

fn z0() -> Jet {
    Jet::new(Z, x(1.0, 0.0), Z, Z, 0.0)
}

fn ball(b: BallComplex) -> Vec<f64> {
    vec![b.z.re, b.z.im, b.e]
}

fn jet(j: Jet) -> Vec<f64> {
    let mut v = vec![j.f().re, j.f().im];
    for c in j.linear() {
        v.extend([c.re, c.im]);
    }
    v.extend([j.e(), j.size()]);
    v
}

fn mat(m: JetMatrix) -> Vec<f64> {
    [m.a, m.b, m.c, m.d].into_iter().flat_map(jet).collect()
}

fn geom(s: &str) -> Vec<f64> {
    let g = box_geometry(&BoxAddress::parse(s).unwrap());
    g.pos.iter().chain(g.size.iter()).copied().collect()
}

fn params(s: &str) -> Vec<f64> {
    let p = box_params(&BoxAddress::parse(s).unwrap());
    [p.along, p.ortho, p.whirle].into_iter().flat_map(jet).collect()
}

pub const FIXTURES: &[(&str, &[u64])] = &[
    ("add_xd (1,2)+3", &[0x4010000000000000, 0x4000000000000000, 0x3cc0000000000000]),
    ("add_xd (1,2)+0", &[0x3ff0000000000000, 0x4000000000000000, 0x3ca0000000000000]),
    ("sub_xd (1,2)-1", &[0x0000000000000000, 0x4000000000000000, 0x0000000000000000]),
    ("add_xx (1,0)+(0,1)", &[0x3ff0000000000000, 0x3ff0000000000000, 0x3cb0000000000001]),
    ("add_xx (1,2)+0", &[0x3ff0000000000000, 0x4000000000000000, 0x3cb8000000000002]),
    ("add_aa exact", &[0x3ff0000000000000, 0x3ff0000000000000, 0x3cb0000000000002]),
    ("add_aa radii", &[0x0000000000000000, 0x0000000000000000, 0x3fe8000000000003]),
    ("mul_xd (1,2)*2", &[0x4000000000000000, 0x4010000000000000, 0x3cc8000000000002]),
    ("div_xd (3,-4)/1", &[0x4008000000000000, 0xc010000000000000, 0x3ccc000000000002]),
    ("mul_xx i*i", &[0xbff0000000000000, 0x0000000000000000, 0x3cb0000000000002]),
    ("mul_xx 1*(3,-0.5)", &[0x4008000000000000, 0xbfe0000000000000, 0x3ccc000000000004]),
    ("div_dx 1/i", &[0x0000000000000000, 0xbff0000000000000, 0x3cc0000000000002]),
    ("div_dx 2/2", &[0x3ff0000000000000, 0x8000000000000000, 0x3cc0000000000002]),
    ("div_xx (1,1)/(1,1)", &[0x3ff0000000000000, 0x0000000000000000, 0x3cd4000000000004]),
    ("div_xx i/1", &[0x0000000000000000, 0x3ff0000000000000, 0x3cc4000000000004]),
    ("div_aa exact", &[0x3ff0000000000000, 0x0000000000000000, 0x3cc4000000000005]),
    ("div_aa radii eps", &[0x3ff0000000000000, 0x0000000000000000, 0x3cd2000000000039]),
    ("sqrt_x 4", &[0x4000000000000000, 0x0000000000000000, 0x3cc4000000000005]),
    ("sqrt_x -4", &[0x0000000000000000, 0x4000000000000000, 0x3cc4000000000005]),
    ("sqrt_x 2i", &[0x3ff0000000000000, 0x3ff0000000000000, 0x3cc8000000000006]),
    ("abs_ub_x (3,4)", &[0x4014000000000002]),
    ("abs_lb_x (3,4)", &[0x4013fffffffffffe]),
    ("add_jj 1+2", &[0x4008000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cb8000000000007, 0x0000000000000000]),
    ("add_jd 1+1", &[0x4000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cb0000000000001, 0x0000000000000000]),
    ("add_jd i+0", &[0x0000000000000000, 0x3ff0000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3fc0000000000001, 0x0000000000000000]),
    ("mul_jj z0*z0", &[0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3ff000000000000b, 0x0000000000000000]),
    ("mul_jd (1,2;0.5)*2", &[0x4000000000000000, 0x4010000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3ff0000000000006, 0x0000000000000000]),
    ("div_jj 1/2", &[0x3fe0000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cd1000000000004, 0x0000000000000000]),
    ("div_jj guard", &[0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x7ff0000000000000, 0x0000000000000000]),
    ("div_dj 1/1", &[0x3ff0000000000000, 0x8000000000000000, 0x8000000000000000, 0x0000000000000000, 0x8000000000000000, 0x0000000000000000, 0x8000000000000000, 0x0000000000000000, 0x3cdc000000000006, 0x0000000000000000]),
    ("div_dj guard", &[0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x7ff0000000000000, 0x0000000000000000]),
    ("sqrt_j 4", &[0x4000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3ce5000000000005, 0x0000000000000000]),
    ("sqrt_j pure error", &[0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3ff0000000000002, 0x0000000000000000]),
    ("abs_ub_j 1", &[0x3ff0000000000004]),
    ("abs_lb_j (3,4)", &[0x4013fffffffffffd]),
    ("size_j z0", &[0x3ff0000000000004]),
    ("short_generator 4 squared", &[0x4010000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3d08000000000014, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3fd0000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cdb80000000001d, 0x0000000000000000]),
    ("orthodist identity", &[0x3ff0000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3e6000000400000b, 0x0000000000000000]),
    ("length identity", &[0x3ff0000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3e6bb67af6584cc7, 0x0000000000000000]),
    ("length short_generator 4", &[0x4010000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3d20580000000015, 0x0000000000000000]),
    ("orthodist diag 2", &[0x3ff0000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3e6000000400000b, 0x0000000000000000]),
    ("short_generator 1", &[0x3ff0000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cd5000000000005, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3ff0000000000000, 0x8000000000000000, 0x8000000000000000, 0x0000000000000000, 0x8000000000000000, 0x0000000000000000, 0x8000000000000000, 0x0000000000000000, 0x3cea000000000005, 0x0000000000000000]),
    ("short_generator 4", &[0x4000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3ce5000000000005, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3fe0000000000000, 0x8000000000000000, 0x8000000000000000, 0x0000000000000000, 0x8000000000000000, 0x0000000000000000, 0x8000000000000000, 0x0000000000000000, 0x3cda000000000005, 0x0000000000000000]),
    ("close_generator 1 1", &[0x3ff0000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cf0600000000010, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3ce2400000000019, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3ce2400000000015, 0x0000000000000000, 0x3ff0000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cf8800000000005, 0x0000000000000000]),
    ("close_generator 4 1", &[0x3ff4000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cf190000000000f, 0x0000000000000000, 0x3fe8000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cf4600000000004, 0x0000000000000000, 0x3fe8000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cebe0000000001a, 0x0000000000000000, 0x3ff4000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x3cfb200000000006, 0x0000000000000000]),
    ("box_geometry root", &[0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x401c823e074ec12d, 0x401965fea53d6e3f, 0x4016a09e667f3bd0, 0x401428a2f98d728e, 0x4011f59ac3c7d6c2, 0x4010000000000002]),
    ("box_geometry 000000", &[0xc00c823e074ec129, 0xc00965fea53d6e3c, 0xc006a09e667f3bcd, 0xc00428a2f98d728b, 0xc001f59ac3c7d6c0, 0xc000000000000000, 0x400c823e074ec12e, 0x400965fea53d6e40, 0x4006a09e667f3bd1, 0x400428a2f98d728f, 0x4001f59ac3c7d6c3, 0x4000000000000002]),
    ("box_geometry 1", &[0x400c823e074ec129, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x400c823e074ec12e, 0x401965fea53d6e3f, 0x4016a09e667f3bd0, 0x401428a2f98d728e, 0x4011f59ac3c7d6c2, 0x4010000000000002]),
    ("make_params root", &[0x0000000000000000, 0x0000000000000000, 0x401c823e074ec12d, 0x401428a2f98d728e, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x4021753e0ec64230, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x401965fea53d6e3f, 0x4011f59ac3c7d6c2, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x401f1b48e05cb166, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x0000000000000000, 0x4016a09e667f3bd0, 0x4010000000000002, 0x0000000000000000, 0x401bb67ae8584cb4]),
    ("horizon 2i", &[0xc008000000000000, 0x4010000000000000, 0x0000000000000000, 0x8000000000000000, 0x0000000000000000, 0x8000000000000000, 0x0000000000000000, 0x8000000000000000, 0x3d186cccccccccd3, 0x0000000000000000]),
    ("hole 0 min_d", &[0x400746ea3e158bb2]),
    ("larger_angle i vs 1+i", &[0x3ff0000000000000]),
];

pub fn fixture_values(name: &str) -> Vec<f64> {
    match name {
        "add_xd (1,2)+3" => ball(x(1.0,2.0)+3.0),
        "add_xd (1,2)+0" => ball(x(1.0,2.0)+0.0),
        "sub_xd (1,2)-1" => ball(x(1.0,2.0)-1.0),
        "add_xx (1,0)+(0,1)" => ball(x(1.0,0.0)+x(0.0,1.0)),
        "add_xx (1,2)+0" => ball(x(1.0,2.0)+x(0.0,0.0)),
        "add_aa exact" => ball(BallComplex::new(1.0,0.0,0.0)+BallComplex::new(0.0,1.0,0.0)),
        "add_aa radii" => ball(BallComplex::new(0.0,0.0,0.5)+BallComplex::new(0.0,0.0,0.25)),
        "mul_xd (1,2)*2" => ball(x(1.0,2.0)*2.0),
        "div_xd (3,-4)/1" => ball(x(3.0,-4.0)/1.0),
        "mul_xx i*i" => ball(x(0.0,1.0)*x(0.0,1.0)),
        "mul_xx 1*(3,-0.5)" => ball(x(1.0,0.0)*x(3.0,-0.5)),
        "div_dx 1/i" => ball(1.0/x(0.0,1.0)),
        "div_dx 2/2" => ball(2.0/x(2.0,0.0)),
        "div_xx (1,1)/(1,1)" => ball(x(1.0,1.0)/x(1.0,1.0)),
        "div_xx i/1" => ball(x(0.0,1.0)/x(1.0,0.0)),
        "div_aa exact" => ball(BallComplex::new(1.0,0.0,0.0)/BallComplex::new(1.0,0.0,0.0)),
        "div_aa radii eps" => ball(BallComplex::new(1.0,0.0,EPS)/BallComplex::new(1.0,0.0,EPS)),
        "sqrt_x 4" => ball(x(4.0,0.0).sqrt()),
        "sqrt_x -4" => ball(x(-4.0,0.0).sqrt()),
        "sqrt_x 2i" => ball(x(0.0,2.0).sqrt()),
        "abs_ub_x (3,4)" => vec![x(3.0,4.0).abs_ub()],
        "abs_lb_x (3,4)" => vec![x(3.0,4.0).abs_lb()],
        "add_jj 1+2" => jet(Jet::real(1.0)+Jet::real(2.0)),
        "add_jd 1+1" => jet(Jet::real(1.0)+1.0),
        "add_jd i+0" => jet(Jet::with_error(x(0.0,1.0),0.125)+0.0),
        "mul_jj z0*z0" => jet(z0()*z0()),
        "mul_jd (1,2;0.5)*2" => jet(Jet::with_error(x(1.0,2.0),0.5)*2.0),
        "div_jj 1/2" => jet(Jet::real(1.0)/Jet::real(2.0)),
        "div_jj guard" => jet(Jet::real(1.0)/Jet::new(x(1.0,0.0),x(1.0,0.0),Z,Z,0.0)),
        "div_dj 1/1" => jet(1.0/Jet::real(1.0)),
        "div_dj guard" => jet(1.0/Jet::with_error(Z,1.0)),
        "sqrt_j 4" => jet(Jet::real(4.0).sqrt()),
        "sqrt_j pure error" => jet(Jet::with_error(Z,1.0).sqrt()),
        "abs_ub_j 1" => vec![Jet::real(1.0).abs_ub()],
        "abs_lb_j (3,4)" => vec![Jet::constant(x(3.0,4.0)).abs_lb()],
        "size_j z0" => vec![z0().size()],
        "short_generator 4 squared" => mat(JetMatrix::short_generator(Jet::real(4.0))*JetMatrix::short_generator(Jet::real(4.0))),
        "orthodist identity" => jet(JetMatrix::identity().orthodist()),
        "length identity" => jet(JetMatrix::identity().length()),
        "length short_generator 4" => jet(JetMatrix::short_generator(Jet::real(4.0)).length()),
        "orthodist diag 2" => jet(JetMatrix::new(Jet::real(2.0),Jet::zero(),Jet::zero(),Jet::real(0.5)).orthodist()),
        "short_generator 1" => mat(JetMatrix::short_generator(Jet::real(1.0))),
        "short_generator 4" => mat(JetMatrix::short_generator(Jet::real(4.0))),
        "close_generator 1 1" => mat(JetMatrix::close_generator(Jet::real(1.0),Jet::real(1.0))),
        "close_generator 4 1" => mat(JetMatrix::close_generator(Jet::real(4.0),Jet::real(1.0))),
        "box_geometry root" => geom(""),
        "box_geometry 000000" => geom("000000"),
        "box_geometry 1" => geom("1"),
        "make_params root" => params(""),
        "horizon 2i" => jet(horizon(Jet::constant(x(0.0,2.0)))),
        "hole 0 min_d" => vec![holes()[0].min_d],
        "larger_angle i vs 1+i" => vec![larger_angle(&Jet::constant(x(0.0,1.0)),&Jet::constant(x(1.0,1.0))) as u8 as f64],
        _ => unreachable!("unknown fixture {name}"),
    }
}
