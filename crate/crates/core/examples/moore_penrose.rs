//! {1,3}, {1,4} and Moore-Penrose inverses, and the ways of phrasing Moore-Penrose
//! invertibility through one-sided core inverses.

use bccore::ginverse::{inv_13, inv_14, moore_penrose, mp_equivalences};
use bccore::{FiniteRing, MatrixRing, StarRing};

fn summary<R: StarRing>(r: &R, a: &R::Elem) {
    let show = |x: Option<R::Elem>| x.map_or("none".to_string(), |x| r.show(&x));
    println!("{} a = {}", r.descriptor(), r.show(a));
    println!("    a(1,3) = {}", show(inv_13(r, a)));
    println!("    a(1,4) = {}", show(inv_14(r, a)));
    println!("    a†     = {}", show(moore_penrose(r, a)));
    let rep = mp_equivalences(r, a);
    for c in &rep.criteria {
        println!("    {:<40} {:?}", c.tag, c.value);
    }
    println!("    consistent: {}", rep.consistent);
}

fn main() {
    let q = MatrixRing::rationals(2);
    summary(&q, &q.mat(&[&[1, 2], &[2, 4]]));
    let m2 = FiniteRing::mat_zp(2, 2);
    summary(&m2, &m2.encode(&[vec![1, 1], vec![0, 0]]).unwrap());
    summary(&m2, &m2.encode(&[vec![1, 1], vec![1, 1]]).unwrap());
}
