//! Exhaustive solution sets in small finite rings, compared with the
//! canonical compute path.

use bccore::ginverse::{compute, Inputs, InverseKind};
use bccore::oracle::brute_force;
use bccore::{FiniteRing, StarRing};

fn main() -> bccore::Result<()> {
    let z6 = FiniteRing::zn(6);
    for (a, b, c) in [(1, 2, 2), (5, 4, 3), (1, 1, 2), (3, 3, 3)] {
        let inputs = Inputs::Abc(a, b, c);
        let all = brute_force(&z6, InverseKind::LeftDualBcCore, &inputs)?;
        let x = compute(&z6, InverseKind::LeftDualBcCore, &inputs)?;
        println!("Z_6 ({a},{b},{c}): witnesses {:?}, computed {x:?}", all.witnesses.members());
    }

    let m2 = FiniteRing::mat_zp(2, 2);
    for kind in [InverseKind::Inv13, InverseKind::Inv14, InverseKind::MoorePenrose, InverseKind::LeftDualCore]
    {
        let invertible = m2.iter().filter(|&a| compute(&m2, kind, &Inputs::A(a)).unwrap().is_some()).count();
        println!("M_2(GF(2)) {kind}: {invertible} of {} elements invertible", m2.order());
    }
    let a = m2.encode(&[vec![1, 1], vec![0, 0]])?;
    let sols = brute_force(&m2, InverseKind::Inv13, &Inputs::A(a))?;
    let shown: Vec<String> = sols.witnesses.members().iter().map(|x| m2.show(x)).collect();
    println!("{{1,3}}-inverses of {}: {}", m2.show(&a), shown.join(", "));
    Ok(())
}
