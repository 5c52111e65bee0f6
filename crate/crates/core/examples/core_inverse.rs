//! Left dual (b,c)-core inverses in Z_6 and in 2x2 rational matrices, with
//! every closed form and its verification.

use bccore::ginverse::{left_dual_bc_core, left_dual_bc_core_all_formulas, verify, Inputs, InverseKind};
use bccore::{FiniteRing, MatrixRing, StarRing};

fn show_tuple<R: StarRing>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    let (sa, sb, sc) = (r.show(a), r.show(b), r.show(c));
    match left_dual_bc_core(r, a, b, c) {
        None => println!("{}: a = {sa}, b = {sb}, c = {sc}: not invertible", r.descriptor()),
        Some(x) => {
            println!("{}: a = {sa}, b = {sb}, c = {sc}: x = {}", r.descriptor(), r.show(&x));
            let inputs = Inputs::Abc(a.clone(), b.clone(), c.clone());
            for (f, y) in left_dual_bc_core_all_formulas(r, a, b, c).expect("invertible") {
                let ok = verify(r, InverseKind::LeftDualBcCore, &inputs, &y).expect("arity").overall;
                println!("    {:<18} {:<24} verifies: {ok}", f.name(), r.show(&y));
            }
        }
    }
}

fn main() {
    let z6 = FiniteRing::zn(6);
    show_tuple(&z6, &1, &2, &2);
    show_tuple(&z6, &5, &4, &3);

    let q = MatrixRing::rationals(2);
    let swap = q.mat(&[&[0, 1], &[1, 0]]);
    let e11 = q.mat(&[&[1, 0], &[0, 0]]);
    let e22 = q.mat(&[&[0, 0], &[0, 1]]);
    show_tuple(&q, &swap, &e11, &e22);
    show_tuple(&q, &q.mat(&[&[1, 2], &[2, 4]]), &q.mat(&[&[1, 0], &[1, 0]]), &q.one());
}
