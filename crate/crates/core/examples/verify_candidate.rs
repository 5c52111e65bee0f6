//! Checks candidates against the defining axioms, one verdict per axiom.

use bccore::ginverse::{verify, Inputs, InverseKind};
use bccore::{FiniteRing, MatrixRing, StarRing};

fn report<R: StarRing>(r: &R, kind: InverseKind, inputs: &Inputs<R::Elem>, x: &R::Elem) {
    let rep = verify(r, kind, inputs, x).expect("arity matches");
    println!("{kind} candidate {}: overall {}", r.show(x), rep.overall);
    for v in &rep.verdicts {
        println!("    {:<32} {}", v.name, v.holds);
    }
}

fn main() {
    let z6 = FiniteRing::zn(6);
    let tuple = Inputs::Abc(1, 2, 2);
    for x in [2, 4] {
        report(&z6, InverseKind::LeftDualBcCore, &tuple, &x);
    }

    let q = MatrixRing::rationals(2);
    let a = q.mat(&[&[1, 2], &[2, 4]]);
    let e11 = q.mat(&[&[1, 0], &[0, 0]]);
    report(&q, InverseKind::Inner, &Inputs::A(a.clone()), &e11);
    report(&q, InverseKind::MoorePenrose, &Inputs::A(a), &e11);
}
