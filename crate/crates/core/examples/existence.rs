//! Existence criteria for left dual (b,c)-core invertibility and the
//! two-sided equivalences, evaluated one by one over Z_6.

use bccore::ginverse::{exists_by_criteria, final_equivalences};
use bccore::FiniteRing;

fn main() {
    let z6 = FiniteRing::zn(6);
    for (a, b, c) in [(1, 2, 2), (5, 4, 3), (1, 1, 2)] {
        println!("({a},{b},{c})");
        let rep = exists_by_criteria(&z6, &a, &b, &c);
        for c in &rep.criteria {
            println!("    {:<34} {:?}", c.tag, c.value);
        }
        let fe = final_equivalences(&z6, &a, &b, &c);
        println!("    two-sided, as stated: consistent {}", fe.as_stated.consistent);
        for c in fe.as_stated.criteria.iter().chain(&fe.corrected.criteria) {
            println!("        {:<44} {:?}", c.tag, c.value);
        }
    }
}
