//! Splits `va` into a core part and a nilpotent part through the left dual
//! v-core inverse.

use bccore::ginverse::nilpotent_decomposition;
use bccore::{MatrixRing, StarRing};

fn main() {
    let q = MatrixRing::rationals(2);
    let a = q.mat(&[&[0, 0], &[0, 1]]);
    let pairs =
        [("v = [[1,1],[1,1]]", q.mat(&[&[1, 1], &[1, 1]])), ("v = a*", q.star(&a)), ("v = 0", q.zero())];
    println!("a = {}", q.show(&a));
    for (name, v) in pairs {
        let Some(d) = nilpotent_decomposition(&q, &a, &v) else {
            println!("{name}: a is not left dual v-core invertible");
            continue;
        };
        println!("{name}: va = {}, x = {}", q.show(&q.mul(&v, &a)), q.show(&d.x));
        println!("    a1 = {}", q.show(&d.a1));
        println!("    a2 = {}", q.show(&d.a2));
        for v in &d.verdicts {
            println!("    {:<36} {}", v.name, v.holds);
        }
    }
}
