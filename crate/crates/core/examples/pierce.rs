//! Block form of a left dual (b,c)-core inverse relative to `q = xab`, and
//! what happens to it when the witness is perturbed.

use bccore::ginverse::{left_dual_bc_core, pierce_representation_check};
use bccore::{MatrixRing, StarRing};

fn main() -> bccore::Result<()> {
    let q = MatrixRing::rationals(2);
    let a = q.mat(&[&[0, 1], &[1, 0]]);
    let b = q.mat(&[&[1, 0], &[0, 0]]);
    let c = q.mat(&[&[0, 0], &[0, 1]]);
    let x = left_dual_bc_core(&q, &a, &b, &c).expect("invertible");
    for (name, y) in [("x", x.clone()), ("x + 1", q.add(&x, &q.one())), ("x + c", q.add(&x, &c))] {
        let rep = pierce_representation_check(&q, &a, &b, &c, &y)?;
        println!("{name} = {}: block form holds {}", q.show(&y), rep.overall);
        for v in rep.verdicts.iter().filter(|v| !v.holds) {
            println!("    fails: {}", v.name);
        }
    }
    Ok(())
}
