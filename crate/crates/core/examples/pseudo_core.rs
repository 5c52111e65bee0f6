//! Left dual pseudo core inverses and their index: a nilpotent Jordan block,
//! a matrix with an invertible part, and a unit.

use bccore::ginverse::{default_k_max, left_dual_pseudo_core, verify, Inputs, InverseKind};
use bccore::{MatrixRing, StarRing};

fn main() {
    let q = MatrixRing::rationals(3);
    let k_max = default_k_max(&q.descriptor());
    let cases = [
        ("jordan", q.mat(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]])),
        ("mixed", q.mat(&[&[2, 0, 0], &[0, 0, 1], &[0, 0, 0]])),
        ("unit", q.mat(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]])),
    ];
    for (name, a) in cases {
        match left_dual_pseudo_core(&q, &a, k_max) {
            None => println!("{name}: none up to k = {k_max}"),
            Some(res) => {
                let ok = verify(&q, InverseKind::LeftDualPseudoCore, &Inputs::Ak(a.clone(), res.k), &res.x)
                    .expect("arity")
                    .overall;
                println!("{name}: k = {}, x = {}, verifies: {ok}", res.k, q.show(&res.x));
            }
        }
    }
}
