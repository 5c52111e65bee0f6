//! Ground truth by exhaustion, and the theorem batteries.
//!
//! [`definition`] restates every defining condition directly, without going
//! through the compute or verify paths; [`brute_force`] scans a finite ring
//! with it. A battery runs one theorem over every tuple of a finite ring (or
//! a seeded sample of them), or over a seeded random matrix corpus, and
//! records each tuple on which the listed conditions disagree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{ElementSet, FiniteRing};
use crate::ginverse::{self as g, Inputs, InverseKind};
use crate::matrix::Matrix;
use crate::matrix_ring::{FieldKind, MatrixRing};
use crate::ring::{is_idempotent, is_projection, FieldTag, Involution, RingDescriptor, StarRing};
use crate::scalar::{GaussianRational, PrimeField, Rational, Scalar};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Defining conditions of `kind`, evaluated literally.
pub fn definition<R: StarRing>(r: &R, kind: InverseKind, inputs: &Inputs<R::Elem>, x: &R::Elem) -> bool {
    use InverseKind as K;
    let m = |xs: &[&R::Elem]| r.prod(xs);
    let sym = |y: &R::Elem| r.star(y) == *y;
    let in_left = |y: &R::Elem, z: &R::Elem| r.left_ideal_contains(y, z);
    let in_right = |y: &R::Elem, z: &R::Elem| r.right_ideal_contains(y, z);
    match (kind, inputs) {
        (K::Inner, Inputs::A(a)) => m(&[a, x, a]) == *a,
        (K::Inv13, Inputs::A(a)) => m(&[a, x, a]) == *a && sym(&m(&[a, x])),
        (K::Inv14, Inputs::A(a)) => m(&[a, x, a]) == *a && sym(&m(&[x, a])),
        (K::MoorePenrose, Inputs::A(a)) => {
            m(&[a, x, a]) == *a && m(&[x, a, x]) == *x && sym(&m(&[a, x])) && sym(&m(&[x, a]))
        }
        (K::LeftBc, Inputs::Abc(a, b, c)) => in_left(x, c) && m(&[x, a, b]) == *b,
        (K::RightBc, Inputs::Abc(a, b, c)) => in_right(x, b) && m(&[c, a, x]) == *c,
        (K::StronglyLeftBc, Inputs::Abc(a, b, c)) => {
            m(&[x, a, x]) == *x && in_right(x, b) && in_right(b, x) && in_left(x, c)
        }
        (K::LeftDualBcCore, Inputs::Abc(a, b, c)) => {
            in_left(x, c) && m(&[b, x, a, b]) == *b && sym(&m(&[x, a, b]))
        }
        (K::DualBcCore, Inputs::Abc(a, b, c)) => {
            let bs = r.star(b);
            m(&[b, x, a, b]) == *b && in_right(x, &bs) && in_right(&bs, x) && in_left(x, c) && in_left(c, x)
        }
        (K::BcCore, Inputs::Abc(a, b, c)) => {
            let cs = r.star(c);
            m(&[c, a, x, c]) == *c && in_right(x, b) && in_right(b, x) && in_left(x, &cs) && in_left(&cs, x)
        }
        (K::RightBcCore, Inputs::Abc(a, b, c)) => {
            in_right(x, b) && m(&[c, a, x, c]) == *c && sym(&m(&[c, a, x]))
        }
        (K::LeftDualCore, Inputs::A(a)) => m(&[a, x, a]) == *a && sym(&m(&[x, a])) && m(&[x, x, a]) == *x,
        (K::LeftDualPseudoCore, Inputs::Ak(a, k)) => {
            let ak = r.pow(a, *k);
            m(&[&ak, x, a]) == ak && sym(&m(&[x, a])) && m(&[x, x, a]) == *x
        }
        (K::LeftDualVCore, Inputs::Av(a, v)) => {
            m(&[a, x, v, a]) == *a && sym(&m(&[x, v, a])) && m(&[x, x, v, a]) == *x
        }
        (K::LeftInvertible, Inputs::A(a)) => r.mul(x, a) == r.one(),
        _ => false,
    }
}

/// Every witness of `kind` for `inputs` in a finite ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub ring: RingDescriptor,
    pub kind: InverseKind,
    pub inputs: Inputs<u32>,
    pub witnesses: ElementSet,
}

/// Scans `Rc` (or `bR`, or all of `R`, following the kind's membership
/// constraint) and keeps the elements satisfying the definition.
pub fn brute_force(ring: &FiniteRing, kind: InverseKind, inputs: &Inputs<u32>) -> Result<SolutionSet> {
    if inputs.arity() != kind.arity() {
        return Err(Error::MissingInput("inputs", kind.name().to_string()));
    }
    let pool: Vec<u32> = match (kind, inputs) {
        (InverseKind::LeftBc | InverseKind::LeftDualBcCore, Inputs::Abc(_, _, c)) => {
            ring.left_ideal(*c).members().to_vec()
        }
        (InverseKind::RightBc | InverseKind::RightBcCore, Inputs::Abc(_, b, _)) => {
            ring.right_ideal(*b).members().to_vec()
        }
        _ => ring.iter().collect(),
    };
    Ok(SolutionSet {
        ring: ring.descriptor(),
        kind,
        inputs: inputs.clone(),
        witnesses: pool.into_iter().filter(|x| definition(ring, kind, inputs, x)).collect(),
    })
}

// ------------------------------------------------------------ theorems

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    SevenCondition,
    ExistenceCriteria,
    #[serde(rename = "equivalence-14")]
    Equivalence14,
    InnerInverseFormula,
    DirectSum,
    Pierce,
    Specialization,
    VCore,
    PseudoCore,
    Decomposition,
    MoorePenrose,
    Coincidence,
    MixedIdentities,
    FinalEquivalence,
}

impl Theorem {
    pub const ALL: [Theorem; 14] = [
        Self::SevenCondition,
        Self::ExistenceCriteria,
        Self::Equivalence14,
        Self::InnerInverseFormula,
        Self::DirectSum,
        Self::Pierce,
        Self::Specialization,
        Self::VCore,
        Self::PseudoCore,
        Self::Decomposition,
        Self::MoorePenrose,
        Self::Coincidence,
        Self::MixedIdentities,
        Self::FinalEquivalence,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Self::SevenCondition => "seven-condition",
            Self::ExistenceCriteria => "existence-criteria",
            Self::Equivalence14 => "equivalence-14",
            Self::InnerInverseFormula => "inner-inverse-formula",
            Self::DirectSum => "direct-sum",
            Self::Pierce => "pierce",
            Self::Specialization => "specialization",
            Self::VCore => "v-core",
            Self::PseudoCore => "pseudo-core",
            Self::Decomposition => "decomposition",
            Self::MoorePenrose => "moore-penrose",
            Self::Coincidence => "coincidence",
            Self::MixedIdentities => "mixed-identities",
            Self::FinalEquivalence => "final-equivalence",
        }
    }

    /// Number of ring elements per tuple.
    pub fn arity(self) -> u32 {
        match self {
            Self::Specialization | Self::MoorePenrose | Self::PseudoCore => 1,
            Self::VCore | Self::Decomposition => 2,
            Self::MixedIdentities => 4,
            _ => 3,
        }
    }

    fn names(self) -> &'static str {
        match self.arity() {
            1 => "a",
            2 => "a, v",
            4 => "a, d, b, c",
            _ => "a, b, c",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|t| t.tag() == s).ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Elements of an enumerable ring, with its projections and idempotents.
pub struct Universe<E> {
    pub all: Vec<E>,
    pub projections: Vec<E>,
    pub idempotents: Vec<E>,
}

impl<E: Clone> Universe<E> {
    pub fn of<R: StarRing<Elem = E>>(r: &R) -> Option<Self> {
        let all = r.elements()?;
        let projections = all.iter().filter(|x| is_projection(r, x)).cloned().collect();
        let idempotents = all.iter().filter(|x| is_idempotent(r, x)).cloned().collect();
        Some(Universe { all, projections, idempotents })
    }
}

struct Cx<'a, R: StarRing> {
    r: &'a R,
    u: Option<&'a Universe<R::Elem>>,
}

impl<R: StarRing> Cx<'_, R> {
    fn any(&self, pred: impl Fn(&R::Elem) -> bool) -> Option<bool> {
        self.u.map(|u| u.all.iter().any(pred))
    }

    fn filter(&self, pred: impl Fn(&R::Elem) -> bool) -> Option<Vec<R::Elem>> {
        self.u.map(|u| u.all.iter().filter(|x| pred(x)).cloned().collect())
    }

    fn witnesses(&self, kind: InverseKind, inputs: &Inputs<R::Elem>) -> Option<Vec<R::Elem>> {
        self.filter(|x| definition(self.r, kind, inputs, x))
    }

    fn inner(&self, a: &R::Elem) -> Option<Vec<R::Elem>> {
        self.witnesses(InverseKind::Inner, &Inputs::A(a.clone()))
    }
}

/// Result of one tuple: a disagreement description, if any, plus counted
/// remarks that are reported but do not fail the tuple.
#[derive(Default)]
struct Probe {
    fails: Vec<String>,
    notes: Vec<&'static str>,
}

impl Probe {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.fails.push(what());
        }
    }

    fn agree(&mut self, label: &str, items: &[(&str, bool)]) {
        if items.windows(2).any(|w| w[0].1 != w[1].1) {
            let parts: Vec<String> = items.iter().map(|(n, v)| format!("{n}={v}")).collect();
            self.fails.push(format!("{label}: {}", parts.join(", ")));
        }
    }

    fn verifies<R: StarRing>(
        &mut self,
        r: &R,
        kind: InverseKind,
        inputs: &Inputs<R::Elem>,
        x: &R::Elem,
        label: &str,
    ) {
        let w = g::verify(r, kind, inputs, x).expect("arity matches kind");
        if !w.overall {
            let failed: Vec<&str> = w.verdicts.iter().filter(|v| !v.holds).map(|v| v.name.as_str()).collect();
            self.fails.push(format!("{label}: {kind} candidate {} fails {failed:?}", r.show(x)));
        }
    }

    fn note(&mut self, n: &'static str) {
        self.notes.push(n);
    }
}

fn abc<E: Clone>(a: &E, b: &E, c: &E) -> Inputs<E> {
    Inputs::Abc(a.clone(), b.clone(), c.clone())
}

fn existence<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    let r = cx.r;
    let crit = g::exists_by_criteria(r, a, b, c);
    let computed = g::left_dual_bc_core(r, a, b, c);
    let inputs = abc(a, b, c);
    let mut items: Vec<(&str, bool)> =
        crit.criteria.iter().map(|k| (k.tag.as_str(), k.value.unwrap_or(false))).collect();
    items.push(("compute", computed.is_some()));
    if let Some(x) = &computed {
        pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, x, "canonical");
    }
    if let Some(ws) = cx.witnesses(InverseKind::LeftDualBcCore, &inputs) {
        items.push(("oracle", !ws.is_empty()));
        if let Some(x) = &computed {
            pr.check(ws.contains(x), || format!("canonical {} not in solution set", r.show(x)));
        }
        let rc = cx.filter(|x| r.left_ideal_contains(x, c)).expect("enumerable");
        let power = |x: &R::Elem, n: u32| {
            let q = r.pow(&r.prod(&[x, a, b]), n);
            r.mul(b, &q) == *b && r.star(&q) == q
        };
        items.push(("every n ≤ 4", rc.iter().any(|x| (1..=4).all(|n| power(x, n)))));
        items.push(("some n ≤ 4", rc.iter().any(|x| (1..=4).any(|n| power(x, n)))));
        let left = cx.witnesses(InverseKind::LeftBc, &inputs).expect("enumerable");
        let al = g::left_bc_inverse(r, a, b, c);
        pr.agree("left (b,c)", &[("oracle", !left.is_empty()), ("compute", al.is_some())]);
        if let Some(al) = &al {
            pr.check(left.contains(al), || format!("left (b,c) {} not in solution set", r.show(al)));
        }
    }
    pr.agree("existence", &items);
}

fn equivalence_14<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    let r = cx.r;
    let ab = r.mul(a, b);
    let cab = r.mul(c, &ab);
    let al = g::left_bc_inverse(r, a, b, c);
    let left = al.is_some();
    let (b14, ab14, cab14) = (g::inv_14(r, b), g::inv_14(r, &ab), g::inv_14(r, &cab));
    let core = g::left_dual_bc_core(r, a, b, c);
    pr.agree(
        "equivalence",
        &[
            ("core", core.is_some()),
            ("left ∧ b(1,4)", left && b14.is_some()),
            ("left ∧ ab(1,4)", left && ab14.is_some()),
            ("left ∧ cab(1,4)", left && cab14.is_some()),
        ],
    );
    for (name, e, gi) in [("b", b, &b14), ("ab", &ab, &ab14), ("cab", &cab, &cab14)] {
        let inputs = Inputs::A(e.clone());
        if let Some(gi) = gi {
            pr.verifies(r, InverseKind::Inv14, &inputs, gi, name);
        }
        if let Some(ws) = cx.witnesses(InverseKind::Inv14, &inputs) {
            pr.agree(name, &[("oracle (1,4)", !ws.is_empty()), ("a ∈ aa*R", gi.is_some())]);
        }
    }
    let inputs = abc(a, b, c);
    if let (Some(_), Some(al), Some(b14), Some(ab14), Some(cab14)) = (&core, &al, &b14, &ab14, &cab14) {
        pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, &r.mul(b14, al), "b(1,4)·a_l");
        pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, &r.prod(&[ab14, a, al]), "(ab)(1,4)·a·a_l");
        pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, &r.mul(cab14, c), "(cab)(1,4)·c");
        // every choice of {1,4}-inverse and left (b,c)-inverse
        if let (Some(als), Some(b14s), Some(ab14s), Some(cab14s)) = (
            cx.witnesses(InverseKind::LeftBc, &inputs),
            cx.witnesses(InverseKind::Inv14, &Inputs::A(b.clone())),
            cx.witnesses(InverseKind::Inv14, &Inputs::A(ab.clone())),
            cx.witnesses(InverseKind::Inv14, &Inputs::A(cab.clone())),
        ) {
            for l in &als {
                for h in &b14s {
                    pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, &r.mul(h, l), "any b(1,4)·a_l");
                }
                for h in &ab14s {
                    pr.verifies(
                        r,
                        InverseKind::LeftDualBcCore,
                        &inputs,
                        &r.prod(&[h, a, l]),
                        "any (ab)(1,4)·a·a_l",
                    );
                }
            }
            for h in &cab14s {
                pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, &r.mul(h, c), "any (cab)(1,4)·c");
            }
        }
    }
}

fn seven_condition<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    let r = cx.r;
    let ab = r.mul(a, b);
    let bs = r.star(b);
    let inputs = abc(a, b, c);
    let core = g::left_dual_bc_core(r, a, b, c);
    if let Some(x) = &core {
        // constructive forms of items 2 and 7 from the canonical witness
        let y = r.prod(&[x, a, b, x]);
        pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, &y, "xabx");
        pr.check(r.prod(&[&y, a, b, &y]) == y, || "y = xabx fails yaby = y".into());
        let q = r.mul(x, &ab);
        let p = r.mul(&ab, x);
        pr.check(is_projection(r, &q), || "q = xab not a projection".into());
        pr.check(is_idempotent(r, &p), || "p = abx not idempotent".into());
        pr.check(
            r.left_ideal_contains(b, &q)
                && r.left_ideal_contains(&q, &ab)
                && r.left_ideal_contains(&p, c)
                && r.right_ideal_contains(&ab, &p),
            || "q = xab, p = abx violate Rb ⊆ Rq ⊆ Rab, Rp ⊆ Rc, abR ⊆ pR".into(),
        );
        let gi = r.inner_inverse(&ab).expect("ab regular when invertible");
        pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, &r.prod(&[&q, &gi, &p]), "q(ab)⁻p");
    }
    let Some(u) = cx.u else { return };
    let eq = |x: &R::Elem| r.prod(&[b, x, a, b]) == *b;
    let rx_rc = |x: &R::Elem| r.left_ideal_contains(x, c);
    let i2 = cx.any(|x| {
        let xab = r.prod(&[x, a, b]);
        rx_rc(x) && eq(x) && r.star(&xab) == xab && r.mul(&xab, x) == *x
    });
    let i3 =
        cx.any(|x| eq(x) && r.right_ideal_contains(x, &bs) && r.right_ideal_contains(&bs, x) && rx_rc(x));
    let i4 = cx.any(|x| {
        eq(x) && r.left_annihilator_contained(x, &bs) && r.left_annihilator_contained(&bs, x) && rx_rc(x)
    });
    let i5 = cx.any(|x| eq(x) && rx_rc(x) && r.right_ideal_contains(x, &bs));
    let i6 = cx.any(|x| eq(x) && rx_rc(x) && r.left_annihilator_contained(&bs, x));
    let qs: Vec<&R::Elem> = u
        .projections
        .iter()
        .filter(|q| r.left_ideal_contains(b, q) && r.left_ideal_contains(q, &ab))
        .collect();
    let ps: Vec<&R::Elem> = u
        .idempotents
        .iter()
        .filter(|p| r.left_ideal_contains(p, c) && r.right_ideal_contains(&ab, p))
        .collect();
    let i7 = !qs.is_empty() && !ps.is_empty();
    let flag = |o: Option<bool>| o.expect("enumerable");
    pr.agree(
        "seven conditions",
        &[
            ("(1)", core.is_some()),
            ("(2)", flag(i2)),
            ("(3)", flag(i3)),
            ("(4)", flag(i4)),
            ("(5)", flag(i5)),
            ("(6)", flag(i6)),
            ("(7)", i7),
        ],
    );
    if i7 {
        for gi in cx.inner(&ab).expect("enumerable") {
            for q in &qs {
                for p in &ps {
                    pr.verifies(
                        r,
                        InverseKind::LeftDualBcCore,
                        &inputs,
                        &r.prod(&[q, &gi, p]),
                        "any q(ab)⁻p",
                    );
                }
            }
        }
    }
}

fn inner_inverse_formula<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    let r = cx.r;
    let inputs = abc(a, b, c);
    let exists = g::left_dual_bc_core(r, a, b, c).is_some();
    match g::left_dual_bc_core_all_formulas(r, a, b, c) {
        Err(Error::NotInvertible(_)) => pr.check(!exists, || "formulas refused an invertible tuple".into()),
        Err(e) => pr.check(false, || e.to_string()),
        Ok(all) => {
            pr.check(exists, || "formulas evaluated for a non-invertible tuple".into());
            for (f, x) in &all {
                pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, x, f.name());
                powers(pr, r, a, b, x);
            }
            let x = &all[0].1;
            let ab = r.mul(a, b);
            let cab = r.mul(c, &ab);
            if let Some(inner_ab) = cx.inner(&ab) {
                for gi in &inner_ab {
                    let y = g::q_ab_inner_p(r, a, b, x, gi);
                    pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, &y, "q(ab)⁻p, any (ab)⁻");
                    powers(pr, r, a, b, &y);
                }
                let b14s = cx.witnesses(InverseKind::Inv14, &Inputs::A(b.clone())).expect("enumerable");
                for gi in cx.inner(&cab).expect("enumerable") {
                    for h in &b14s {
                        let y = r.prod(&[h, b, &gi, c]);
                        pr.verifies(
                            r,
                            InverseKind::LeftDualBcCore,
                            &inputs,
                            &y,
                            "b(1,4)b(cab)⁻c, any choices",
                        );
                        powers(pr, r, a, b, &y);
                    }
                }
            }
        }
    }
}

fn powers<R: StarRing>(pr: &mut Probe, r: &R, a: &R::Elem, b: &R::Elem, x: &R::Elem) {
    for v in g::power_identities(r, a, b, x, 4) {
        pr.check(v.holds, || format!("{} fails for witness {}", v.name, r.show(x)));
    }
}

fn direct_sum<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    let r = cx.r;
    let u = r.star(&r.prod(&[c, a, b]));
    let ds = r.direct_sum_right_ideals(&u, b);
    let core = g::left_dual_bc_core(r, a, b, c).is_some();
    pr.agree("direct sum", &[("(1)", core), ("(2) ⊕", ds.is_sum && ds.is_direct), ("(3) +", ds.is_sum)]);
    if let Some(all) = cx.u.map(|u| &u.all) {
        let ur: Vec<R::Elem> = all.iter().map(|s| r.mul(&u, s)).collect();
        let rb: Vec<&R::Elem> = all.iter().filter(|x| r.is_zero(&r.mul(b, x))).collect();
        let covers = all.iter().all(|t| ur.iter().any(|s| rb.iter().any(|z| r.add(s, z) == *t)));
        let trivial = ur.iter().all(|s| r.is_zero(s) || !rb.contains(&s));
        pr.agree("literal sum", &[("ideal test", ds.is_sum), ("scan", covers)]);
        pr.agree("literal direct", &[("ideal test", ds.is_direct), ("scan", covers && trivial)]);
    }
}

fn pierce<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    let r = cx.r;
    let Ok(all) = g::left_dual_bc_core_all_formulas(r, a, b, c) else { return };
    let check = |pr: &mut Probe, x: &R::Elem, label: &str| -> Option<bool> {
        match g::pierce_representation_check(r, a, b, c, x) {
            Ok(w) => Some(w.overall),
            Err(e) => {
                pr.check(false, || format!("{label} {}: {e}", r.show(x)));
                None
            }
        }
    };
    for (f, x) in &all {
        if let Some(ok) = check(pr, x, f.name()) {
            pr.check(ok, || format!("block form rejects {} witness {}", f.name(), r.show(x)));
        }
    }
    let x = &all[0].1;
    let bs = r.star(b);
    for e in [r.one(), x.clone(), bs, a.clone(), c.clone()] {
        let y = r.add(x, &e);
        if check(pr, &y, "corrupted") == Some(false) {
            pr.note("corrupted witnesses rejected by the block form");
        }
    }
}

fn coincidence<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    let r = cx.r;
    let rep = g::coincidence_check(r, a, b, c);
    pr.agree("coincidence", &[("core", rep.core), ("left", rep.left), ("strong", rep.strong)]);
    pr.check(rep.holds(), || "cross-verification of canonical witnesses fails".into());
    let ab = r.mul(a, b);
    let bs = r.star(b);
    let other = abc(&ab, &bs, c);
    if let Some(x) = g::strongly_left_bc_inverse(r, &ab, &bs, c) {
        pr.verifies(r, InverseKind::StronglyLeftBc, &other, &x, "strongly left (b*,c) of ab");
    }
    if let (Some(cores), Some(lefts), Some(strongs)) = (
        cx.witnesses(InverseKind::LeftDualBcCore, &abc(a, b, c)),
        cx.witnesses(InverseKind::LeftBc, &other),
        cx.witnesses(InverseKind::StronglyLeftBc, &other),
    ) {
        pr.check(cores == lefts, || "witness sets of both sides differ".into());
        pr.agree(
            "oracle",
            &[("core", !cores.is_empty()), ("strong", !strongs.is_empty()), ("compute", rep.core)],
        );
    }
}

fn final_equivalence<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
    use g::final_items::*;
    let r = cx.r;
    let f = g::final_equivalences(r, a, b, c);
    if !f.corrected.consistent {
        let parts: Vec<String> =
            f.corrected.criteria.iter().map(|k| format!("{}={:?}", k.tag, k.value)).collect();
        pr.check(false, || format!("final equivalence: {}", parts.join(", ")));
    }
    let one = f.as_stated.get(ONE);
    if f.as_stated.get(THREE) != one {
        pr.note("item 3 as printed (cab ∈ R†) differs from item 1");
    }
    if f.as_stated.get(FOUR) != one {
        pr.note("item 4 as printed (b ∈ (cab)*R ∧ c ∈ R(cab)*c) differs from item 1");
    }
    if let Some(ws) = cx.witnesses(InverseKind::RightBcCore, &abc(a, b, c)) {
        let dual = g::left_dual_bc_core(r, &r.star(a), &r.star(c), &r.star(b)).is_some();
        pr.agree("right (b,c)-core by duality", &[("oracle", !ws.is_empty()), ("dual", dual)]);
    }
}

fn specialization<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem) {
    let r = cx.r;
    let one = r.one();
    let s = r.star(a);
    let li = g::left_invertible(r, a);
    pr.agree("left invertible", &[("(1,1)-core", li.is_some()), ("xa = 1", r.solve_left(a, &one).is_some())]);
    if let Some(x) = &li {
        pr.verifies(r, InverseKind::LeftInvertible, &Inputs::A(a.clone()), x, "left inverse");
    }
    let core = g::left_dual_core(r, a);
    if let Some(x) = &core {
        pr.verifies(r, InverseKind::LeftDualCore, &Inputs::A(a.clone()), x, "left dual core");
        pr.check(r.prod(&[x, a, x]) == *x, || "left dual core not in xax = x form".into());
    }
    let core_bc = |a_: &R::Elem, b_: &R::Elem, c_: &R::Elem| g::left_dual_bc_core(r, a_, b_, c_).is_some();
    let strong =
        |a_: &R::Elem, b_: &R::Elem, c_: &R::Elem| g::strongly_left_bc_inverse(r, a_, b_, c_).is_some();
    let pw = |k: u32| r.pow(a, k);
    let a2 = pw(2);
    let mut items = vec![
        ("left dual core".to_string(), core.is_some()),
        ("(a,a)-core".into(), core_bc(a, a, a)),
        ("(a,1)-core".into(), core_bc(a, a, &one)),
        ("1 (a,a)-core".into(), core_bc(&one, a, a)),
        ("a-core".into(), g::left_dual_v_core(r, a, a).is_some()),
        ("1-core".into(), g::left_dual_v_core(r, a, &one).is_some()),
        ("left (a*,a)".into(), g::left_bc_inverse(r, a, &s, a).is_some()),
        ("a² strongly (a*,a)".into(), strong(&a2, &s, a)),
        ("a² strongly (a*,1)".into(), strong(&a2, &s, &one)),
        ("a strongly (a*,a)".into(), strong(a, &s, a)),
    ];
    for (m, n) in [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)] {
        items.push((format!("a^{m} (a,a^{n})-core"), core_bc(&pw(m), a, &pw(n))));
    }
    for m in 0..=2 {
        items.push((format!("a^{m}-core"), g::left_dual_v_core(r, a, &pw(m)).is_some()));
    }
    if let Some(ws) = cx.witnesses(InverseKind::LeftDualCore, &Inputs::A(a.clone())) {
        items.push(("oracle".into(), !ws.is_empty()));
        if let Some(x) = &core {
            pr.check(ws.contains(x), || "left dual core not in solution set".into());
        }
        let lis = cx.witnesses(InverseKind::LeftInvertible, &Inputs::A(a.clone())).expect("enumerable");
        pr.agree("left invertible oracle", &[("oracle", !lis.is_empty()), ("compute", li.is_some())]);
    }
    let borrowed: Vec<(&str, bool)> = items.iter().map(|(n, v)| (n.as_str(), *v)).collect();
    pr.agree("lattice", &borrowed);
    let ss = r.mul(&s, a);
    let sa = r.mul(a, &s);
    pr.agree(
        "Moore-Penrose via strong inverses",
        &[
            ("a ∈ R†", g::moore_penrose(r, a).is_some()),
            ("a*a strongly (a*,a)", strong(&ss, &s, a)),
            ("aa* strongly (a,a*)", strong(&sa, a, &s)),
        ],
    );
}

fn moore_penrose<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem) {
    let r = cx.r;
    let items = g::mp_equivalences(r, a);
    let as_pairs: Vec<(&str, bool)> =
        items.criteria.iter().map(|k| (k.tag.as_str(), k.value.unwrap_or(false))).collect();
    pr.agree("Moore-Penrose", &as_pairs);
    let inputs = Inputs::A(a.clone());
    let mp = g::moore_penrose(r, a);
    if let Some(x) = &mp {
        pr.verifies(r, InverseKind::MoorePenrose, &inputs, x, "a†");
    }
    let s = r.star(a);
    if let Some(ws) = cx.witnesses(InverseKind::MoorePenrose, &inputs) {
        pr.check(ws.len() <= 1, || format!("{} Moore-Penrose inverses", ws.len()));
        pr.check(ws.first() == mp.as_ref(), || "Moore-Penrose inverse differs from the oracle".into());
        let vcore = |x: &R::Elem, v: &R::Elem| {
            cx.witnesses(InverseKind::LeftDualVCore, &Inputs::Av(x.clone(), v.clone())).expect("enumerable")
        };
        let i13 = cx.witnesses(InverseKind::Inv13, &inputs).expect("enumerable");
        let i14 = cx.witnesses(InverseKind::Inv14, &inputs).expect("enumerable");
        pr.agree(
            "Moore-Penrose oracle",
            &[
                ("oracle a†", !ws.is_empty()),
                ("oracle a*-core", !vcore(a, &s).is_empty()),
                ("oracle a* a-core", !vcore(&s, a).is_empty()),
                ("{1,3} ∧ {1,4}", !i13.is_empty() && !i14.is_empty()),
                ("compute", mp.is_some()),
            ],
        );
        pr.agree("(1,3)", &[("oracle", !i13.is_empty()), ("compute", g::inv_13(r, a).is_some())]);
        pr.agree("(1,4)", &[("oracle", !i14.is_empty()), ("compute", g::inv_14(r, a).is_some())]);
    }
}

const SWEEP: [(u32, u32); 8] = [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)];

fn pseudo_core<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem) {
    let r = cx.r;
    let k_max = g::default_k_max(&r.descriptor());
    let res = g::left_dual_pseudo_core(r, a, k_max);
    if cx.u.is_some() {
        let first = (1..=k_max).find(|&j| {
            cx.any(|x| definition(r, InverseKind::LeftDualPseudoCore, &Inputs::Ak(a.clone(), j), x))
                .expect("enumerable")
        });
        pr.check(first == res.as_ref().map(|p| p.k), || {
            format!("index {:?} but oracle finds {first:?}", res.as_ref().map(|p| p.k))
        });
    }
    let pw = |k: u32| r.pow(a, k);
    let Some(g::PseudoCoreResult { x, k }) = res else {
        for j in 1..=k_max {
            pr.check(g::left_dual_bc_core(r, &r.one(), &pw(j), a).is_none(), || {
                format!("1 is left dual (a^{j},a)-core invertible but a has no pseudo core")
            });
        }
        return;
    };
    pr.verifies(r, InverseKind::LeftDualPseudoCore, &Inputs::Ak(a.clone(), k), &x, "pseudo core");
    let ak = pw(k);
    let xp = |e: u32| r.pow(&x, e);
    for (m, n) in SWEEP {
        let inputs = Inputs::Abc(pw(m), ak.clone(), pw(n));
        match g::left_dual_bc_core(r, &pw(m), &ak, &pw(n)) {
            None => pr.check(false, || format!("a^{m} not left dual (a^{k},a^{n})-core invertible")),
            Some(y) => {
                let z = r.mul(&y, &pw(k + m - 1));
                pr.verifies(r, InverseKind::LeftDualPseudoCore, &Inputs::Ak(a.clone(), k), &z, "y·a^(k+m-1)");
            }
        }
        pr.verifies(r, InverseKind::LeftDualBcCore, &inputs, &xp(m + k), "x^(m+k)");
    }
    for m in 0..=2 {
        let inputs = Inputs::Av(ak.clone(), pw(m));
        pr.check(g::left_dual_v_core(r, &ak, &pw(m)).is_some(), || {
            format!("a^k not left dual a^{m}-core invertible")
        });
        pr.verifies(r, InverseKind::LeftDualVCore, &inputs, &xp(k + m), "x^(k+m) as a^m-core of a^k");
    }
    pseudo_decomposition(pr, r, a, &x, k);
}

fn pseudo_decomposition<R: StarRing>(pr: &mut Probe, r: &R, a: &R::Elem, x: &R::Elem, k: u32) {
    let ak = r.pow(a, k);
    match g::nilpotent_decomposition(r, &ak, &r.one()) {
        Some(d) => pr.check(d.holds(), || format!("a^k decomposition fails {:?}", failed(&d.verdicts))),
        None => pr.check(false, || "a^k not left dual 1-core invertible".into()),
    }
    let z = r.mul(x, &r.pow(a, k + 1));
    pr.verifies(r, InverseKind::LeftDualCore, &Inputs::A(z), &r.pow(x, k), "x^k for x·a^(k+1)");
}

fn failed(v: &[g::Verdict]) -> Vec<&str> {
    v.iter().filter(|v| !v.holds).map(|v| v.name.as_str()).collect()
}

fn v_core<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, v: &R::Elem) {
    let r = cx.r;
    let inputs = Inputs::Av(a.clone(), v.clone());
    let x = g::left_dual_v_core(r, a, v);
    let va = r.mul(v, a);
    if let Some(x) = &x {
        pr.verifies(r, InverseKind::LeftDualVCore, &inputs, x, "canonical");
        let q = r.mul(x, &va);
        let p = r.mul(&va, x);
        pr.check(is_projection(r, &q) && is_idempotent(r, &p), || {
            "q = xva, p = vax not projection/idempotent".into()
        });
        let gi = r.inner_inverse(&va).expect("va regular");
        pr.verifies(r, InverseKind::LeftDualVCore, &inputs, &r.prod(&[&q, &gi, &p]), "q(va)⁻p");
    }
    let Some(u) = cx.u else { return };
    let ws = cx.witnesses(InverseKind::LeftDualVCore, &inputs).expect("enumerable");
    if let Some(x) = &x {
        pr.check(ws.contains(x), || "canonical v-core not in solution set".into());
    }
    let s = r.star(a);
    let base = |y: &R::Elem| r.prod(&[a, y, v, a]) == *a;
    let in_ra = |y: &R::Elem| r.left_ideal_contains(y, a);
    let flag = |o: Option<bool>| o.expect("enumerable");
    let i2 = |printed: bool| {
        flag(cx.any(|y| {
            let t = if printed { r.prod(&[y, a, v]) } else { r.prod(&[y, v, a]) };
            in_ra(y) && base(y) && r.star(&t) == t && r.prod(&[y, v, a, y]) == *y
        }))
    };
    let i3 = flag(cx.any(|y| base(y) && in_ra(y) && r.right_ideal_contains(&s, y)));
    let i4 = flag(cx.any(|y| {
        base(y) && in_ra(y) && r.left_annihilator_contained(y, &s) && r.left_annihilator_contained(&s, y)
    }));
    let i5 = flag(cx.any(|y| base(y) && in_ra(y) && r.right_ideal_contains(y, &s)));
    let i6 = flag(cx.any(|y| base(y) && in_ra(y) && r.left_annihilator_contained(&s, y)));
    let qs: Vec<&R::Elem> = u
        .projections
        .iter()
        .filter(|q| r.left_ideal_contains(a, q) && r.left_ideal_contains(q, &va))
        .collect();
    let ps: Vec<&R::Elem> = u
        .idempotents
        .iter()
        .filter(|p| r.left_ideal_contains(p, a) && r.right_ideal_contains(&va, p))
        .collect();
    let i7 = !qs.is_empty() && !ps.is_empty();
    let two = i2(false);
    pr.agree(
        "v-core",
        &[
            ("(1)", x.is_some()),
            ("oracle", !ws.is_empty()),
            ("(2)", two),
            ("(3)", i3),
            ("(4)", i4),
            ("(5)", i5),
            ("(6)", i6),
            ("(7)", i7),
        ],
    );
    if i2(true) != two {
        pr.note("item 2 as printed ((xav)* = xav) differs from item 1");
    }
    if i7 {
        for gi in cx.inner(&va).expect("enumerable") {
            for q in &qs {
                for p in &ps {
                    pr.verifies(r, InverseKind::LeftDualVCore, &inputs, &r.prod(&[q, &gi, p]), "any q(va)⁻p");
                }
            }
        }
    }
}

fn decomposition<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, v: &R::Elem) {
    let r = cx.r;
    let d = g::nilpotent_decomposition(r, a, v);
    let vc = g::left_dual_v_core(r, a, v);
    pr.agree("decomposition exists", &[("decomposition", d.is_some()), ("v-core", vc.is_some())]);
    if let Some(d) = &d {
        pr.check(d.holds(), || format!("decomposition fails {:?}", failed(&d.verdicts)));
    }
    if let Some(ws) = cx.witnesses(InverseKind::LeftDualVCore, &Inputs::Av(a.clone(), v.clone())) {
        pr.agree("decomposition oracle", &[("oracle", !ws.is_empty()), ("compute", d.is_some())]);
    }
    // Moore-Penrose instance: aa* = a1 + a2
    if let Some(gi) = g::moore_penrose(r, a) {
        let s = r.star(a);
        match g::nilpotent_decomposition(r, &s, a) {
            Some(d) => pr.check(d.holds(), || format!("aa* decomposition fails {:?}", failed(&d.verdicts))),
            None => pr.check(false, || "a† exists but a* is not left dual a-core invertible".into()),
        }
        let cand = r.mul(&gi, &r.star(&gi));
        pr.verifies(r, InverseKind::LeftDualCore, &Inputs::A(r.mul(&s, a)), &cand, "a†a†* for a*a");
    }
    let k_max = g::default_k_max(&r.descriptor());
    if let Some(res) = g::left_dual_pseudo_core(r, a, k_max) {
        pseudo_decomposition(pr, r, a, &res.x, res.k);
    }
}

fn mixed<R: StarRing>(cx: &Cx<R>, pr: &mut Probe, a: &R::Elem, d: &R::Elem, b: &R::Elem, c: &R::Elem) {
    for m in g::mixed_inverse_identities(cx.r, a, d, b, c) {
        pr.check(m.holds(), || format!("{} fails", m.name));
    }
}

fn run_check<R: StarRing>(t: Theorem, cx: &Cx<R>, xs: &[R::Elem]) -> Probe {
    let mut pr = Probe::default();
    match (t, xs) {
        (Theorem::SevenCondition, [a, b, c]) => seven_condition(cx, &mut pr, a, b, c),
        (Theorem::ExistenceCriteria, [a, b, c]) => existence(cx, &mut pr, a, b, c),
        (Theorem::Equivalence14, [a, b, c]) => equivalence_14(cx, &mut pr, a, b, c),
        (Theorem::InnerInverseFormula, [a, b, c]) => inner_inverse_formula(cx, &mut pr, a, b, c),
        (Theorem::DirectSum, [a, b, c]) => direct_sum(cx, &mut pr, a, b, c),
        (Theorem::Pierce, [a, b, c]) => pierce(cx, &mut pr, a, b, c),
        (Theorem::Coincidence, [a, b, c]) => coincidence(cx, &mut pr, a, b, c),
        (Theorem::FinalEquivalence, [a, b, c]) => final_equivalence(cx, &mut pr, a, b, c),
        (Theorem::Specialization, [a]) => specialization(cx, &mut pr, a),
        (Theorem::MoorePenrose, [a]) => moore_penrose(cx, &mut pr, a),
        (Theorem::PseudoCore, [a]) => pseudo_core(cx, &mut pr, a),
        (Theorem::VCore, [a, v]) => v_core(cx, &mut pr, a, v),
        (Theorem::Decomposition, [a, v]) => decomposition(cx, &mut pr, a, v),
        (Theorem::MixedIdentities, [a, d, b, c]) => mixed(cx, &mut pr, a, d, b, c),
        _ => unreachable!("tuple arity follows the theorem"),
    }
    pr
}

/// Runs one theorem check on a single tuple; `Err` describes the
/// disagreement. Finite rings additionally consult the brute-force oracle.
pub fn check_tuple<R: StarRing>(t: Theorem, r: &R, xs: &[R::Elem]) -> std::result::Result<(), String> {
    let u = Universe::of(r);
    let pr = run_check(t, &Cx { r, u: u.as_ref() }, xs);
    if pr.fails.is_empty() {
        Ok(())
    } else {
        Err(pr.fails.join("; "))
    }
}

// -------------------------------------------------------------- corpora

/// Random scalar with entries bounded by `bound` (ignored for `GF(p)`).
pub trait Sample: FieldKind {
    fn sample(rng: &mut ChaCha8Rng, bound: i64, ctx: &Self::Ctx) -> Self;
    fn involution() -> Involution {
        Involution::Transpose
    }
}

impl Sample for Rational {
    fn sample(rng: &mut ChaCha8Rng, bound: i64, ctx: &()) -> Self {
        Rational::from_i64(rng.random_range(-bound..=bound), ctx)
    }
}

impl Sample for PrimeField {
    fn sample(rng: &mut ChaCha8Rng, _: i64, p: &u64) -> Self {
        PrimeField::from_i64(rng.random_range(0..*p as i64), p)
    }
}

impl Sample for GaussianRational {
    fn sample(rng: &mut ChaCha8Rng, bound: i64, ctx: &()) -> Self {
        let re = Rational::from_i64(rng.random_range(-bound..=bound), ctx);
        let im = Rational::from_i64(rng.random_range(-bound..=bound), ctx);
        GaussianRational::new(re, im)
    }

    fn involution() -> Involution {
        Involution::ConjugateTranspose
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTuple<F: Scalar> {
    pub n: usize,
    pub a: Matrix<F>,
    pub b: Matrix<F>,
    pub c: Matrix<F>,
    pub d: Matrix<F>,
    pub v: Matrix<F>,
}

impl<F: Scalar> MatrixTuple<F> {
    fn elems(&self, t: Theorem) -> Vec<Matrix<F>> {
        match t.arity() {
            1 => vec![self.a.clone()],
            2 => vec![self.a.clone(), self.v.clone()],
            4 => vec![self.a.clone(), self.d.clone(), self.b.clone(), self.c.clone()],
            _ => vec![self.a.clone(), self.b.clone(), self.c.clone()],
        }
    }
}

/// Deterministic stream of matrix tuples. Each matrix is full rank with
/// probability 1/2, a product of random `n x r` and `r x n` factors with
/// `r < n` with probability 2/5, and zero otherwise.
pub struct CorpusStream<F: Sample> {
    rng: ChaCha8Rng,
    dims: RangeInclusive<usize>,
    bound: i64,
    ctx: F::Ctx,
}

impl<F: Sample> CorpusStream<F> {
    pub fn new(dims: RangeInclusive<usize>, bound: i64, seed: u64, ctx: F::Ctx) -> Self {
        assert!(*dims.start() >= 1 && !dims.is_empty(), "dimension range must be non-empty and positive");
        CorpusStream { rng: ChaCha8Rng::seed_from_u64(seed), dims, bound: bound.max(1), ctx }
    }

    fn random(&mut self, rows: usize, cols: usize) -> Matrix<F> {
        let data = (0..rows)
            .map(|_| (0..cols).map(|_| F::sample(&mut self.rng, self.bound, &self.ctx)).collect())
            .collect();
        Matrix::from_rows(data, &self.ctx)
    }

    fn matrix(&mut self, n: usize) -> Matrix<F> {
        let roll = self.rng.random_range(0..10);
        if roll < 5 {
            for _ in 0..64 {
                let m = self.random(n, n);
                if m.rank() == n {
                    return m;
                }
            }
            Matrix::identity(n, &self.ctx)
        } else if roll < 9 && n > 1 {
            let r = self.rng.random_range(1..n);
            let f = self.random(n, r);
            let g = self.random(r, n);
            f.mul(&g)
        } else {
            Matrix::zeros(n, n, &self.ctx)
        }
    }
}

impl<F: Sample> Iterator for CorpusStream<F> {
    type Item = MatrixTuple<F>;

    fn next(&mut self) -> Option<MatrixTuple<F>> {
        let n = self.rng.random_range(self.dims.clone());
        Some(MatrixTuple {
            n,
            a: self.matrix(n),
            b: self.matrix(n),
            c: self.matrix(n),
            d: self.matrix(n),
            v: self.matrix(n),
        })
    }
}

pub fn random_matrix_corpus<F: Sample>(
    dims: RangeInclusive<usize>,
    bound: i64,
    count: usize,
    seed: u64,
    ctx: F::Ctx,
) -> Vec<MatrixTuple<F>> {
    CorpusStream::<F>::new(dims, bound, seed, ctx).take(count).collect()
}

// -------------------------------------------------------------- battery

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Corpus {
    /// Every tuple of a finite ring, or `samples` seeded random tuples.
    Finite { ring: RingDescriptor, samples: Option<u64> },
    /// Seeded random square matrices over `field`.
    Matrix { field: FieldTag, dims: RangeInclusive<usize>, bound: i64, count: usize },
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corpus::Finite { ring, samples: None } => write!(f, "{ring}"),
            Corpus::Finite { ring, samples: Some(s) } => write!(f, "{ring} sampled {s}"),
            Corpus::Matrix { field, dims, bound, count } => {
                let field = match field {
                    FieldTag::Rationals => "Q".to_string(),
                    FieldTag::GaussianRationals => "QI".to_string(),
                    FieldTag::Prime(p) => format!("GF{p}"),
                };
                write!(f, "random Mat:{field} n={}..{} bound={bound} count={count}", dims.start(), dims.end())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryOptions {
    pub seed: u64,
    pub workers: Option<usize>,
    /// Upper bound on tuples × ring order for finite corpora.
    pub budget: u128,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions { seed: 0, workers: None, budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremBatteryReport {
    pub theorem: String,
    pub corpus: String,
    pub tuples: u64,
    pub agreements: u64,
    pub disagreements: Vec<String>,
    pub seed: u64,
    pub wall_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremBatteryReport {
    pub fn clean(&self) -> bool {
        self.disagreements.is_empty()
    }

    /// Count attached to a note, if the note occurred.
    pub fn note_count(&self, prefix: &str) -> Option<u64> {
        self.notes.iter().find(|n| n.starts_with(prefix)).and_then(|n| n.rsplit(": ").next()?.parse().ok())
    }
}

/// Tuple count for a finite corpus, after the budget check.
pub fn check_budget(t: Theorem, corpus: &Corpus, opts: &BatteryOptions) -> Result<u64> {
    match corpus {
        Corpus::Finite { ring, samples } => {
            let order = FiniteRing::new(ring)?.order() as u128;
            let tuples = match samples {
                Some(s) => *s as u128,
                None => order.pow(t.arity()),
            };
            if tuples.saturating_mul(order) > opts.budget {
                return Err(Error::CorpusTooLarge { tuples, scan: order, budget: opts.budget });
            }
            Ok(tuples as u64)
        }
        Corpus::Matrix { count, .. } => Ok(*count as u64),
    }
}

#[derive(Default)]
struct Tally {
    tuples: u64,
    disagreements: Vec<(u64, String)>,
    notes: BTreeMap<&'static str, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.tuples += other.tuples;
        self.disagreements.extend(other.disagreements);
        for (k, v) in other.notes {
            *self.notes.entry(k).or_default() += v;
        }
        self
    }

    fn one(index: u64, probe: Probe, show: impl FnOnce() -> String) -> Tally {
        let mut t = Tally { tuples: 1, ..Tally::default() };
        if !probe.fails.is_empty() {
            t.disagreements.push((index, format!("{}: {}", show(), probe.fails.join("; "))));
        }
        for n in probe.notes {
            *t.notes.entry(n).or_default() += 1;
        }
        t
    }
}

fn show_tuple<R: StarRing>(r: &R, t: Theorem, xs: &[R::Elem]) -> String {
    let shown: Vec<String> = xs.iter().map(|x| r.show(x)).collect();
    format!("({}) = ({})", t.names(), shown.join(", "))
}

fn run_finite(t: Theorem, ring: &FiniteRing, samples: Option<u64>, seed: u64, tuples: u64) -> Tally {
    let u = Universe::of(ring).expect("finite rings enumerate");
    let cx = Cx { r: ring, u: Some(&u) };
    let order = ring.order() as u64;
    let arity = t.arity() as usize;
    let decode = |mut i: u64| {
        let mut xs = vec![0u32; arity];
        for x in xs.iter_mut().rev() {
            *x = (i % order) as u32;
            i /= order;
        }
        xs
    };
    let indices: Vec<u64> = match samples {
        None => (0..tuples).collect(),
        Some(_) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let space = order.pow(arity as u32);
            (0..tuples).map(|_| rng.random_range(0..space)).collect()
        }
    };
    indices
        .par_iter()
        .enumerate()
        .map(|(pos, &i)| {
            let xs = decode(i);
            let pr = run_check(t, &cx, &xs);
            Tally::one(pos as u64, pr, || show_tuple(ring, t, &xs))
        })
        .reduce(Tally::default, Tally::merge)
}

fn run_matrix<F: Sample>(
    t: Theorem,
    dims: RangeInclusive<usize>,
    bound: i64,
    count: usize,
    seed: u64,
    ctx: F::Ctx,
) -> Tally {
    let stream = CorpusStream::<F>::new(dims, bound, seed, ctx.clone());
    let ring_for = |n| MatrixRing::<F>::new(n, ctx.clone(), F::involution());
    let tuples: Vec<MatrixTuple<F>> = if t == Theorem::Decomposition {
        // keep only pairs (a, v) with a left dual v-core inverse
        stream
            .take(count.saturating_mul(50))
            .filter(|m| g::left_dual_v_core(&ring_for(m.n), &m.a, &m.v).is_some())
            .take(count)
            .collect()
    } else {
        stream.take(count).collect()
    };
    tuples
        .par_iter()
        .enumerate()
        .map(|(pos, m)| {
            let r = ring_for(m.n);
            let xs = m.elems(t);
            let pr = run_check(t, &Cx { r: &r, u: None }, &xs);
            Tally::one(pos as u64, pr, || show_tuple(&r, t, &xs))
        })
        .reduce(Tally::default, Tally::merge)
}

fn in_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(f()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

pub fn run_battery(t: Theorem, corpus: &Corpus, opts: &BatteryOptions) -> Result<TheoremBatteryReport> {
    let tuples = check_budget(t, corpus, opts)?;
    let start = Instant::now();
    let tally = in_pool(opts.workers, || -> Result<Tally> {
        Ok(match corpus {
            Corpus::Finite { ring, samples } => {
                run_finite(t, &FiniteRing::new(ring)?, *samples, opts.seed, tuples)
            }
            Corpus::Matrix { field, dims, bound, count } => match *field {
                FieldTag::Rationals => run_matrix::<Rational>(t, dims.clone(), *bound, *count, opts.seed, ()),
                FieldTag::GaussianRationals => {
                    run_matrix::<GaussianRational>(t, dims.clone(), *bound, *count, opts.seed, ())
                }
                FieldTag::Prime(p) => run_matrix::<PrimeField>(t, dims.clone(), *bound, *count, opts.seed, p),
            },
        })
    })??;
    let mut disagreements = tally.disagreements;
    disagreements.sort();
    Ok(TheoremBatteryReport {
        theorem: t.tag().to_string(),
        corpus: corpus.to_string(),
        tuples: tally.tuples,
        agreements: tally.tuples - disagreements.len() as u64,
        disagreements: disagreements.into_iter().map(|(_, s)| s).collect(),
        seed: opts.seed,
        wall_ms: start.elapsed().as_millis() as u64,
        notes: tally.notes.into_iter().map(|(k, v)| format!("{k}: {v}")).collect(),
    })
}

/// Runs several theorems; every budget is checked before any work starts.
pub fn run_batteries(
    theorems: &[Theorem],
    corpus: &Corpus,
    opts: &BatteryOptions,
) -> Result<Vec<TheoremBatteryReport>> {
    for t in theorems {
        check_budget(*t, corpus, opts)?;
    }
    theorems.iter().map(|t| run_battery(*t, corpus, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u32]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn brute_force_examples() {
        let z6 = FiniteRing::zn(6);
        let s = brute_force(&z6, InverseKind::LeftDualBcCore, &Inputs::Abc(1, 2, 2)).unwrap();
        assert_eq!(s.witnesses, set(&[2]));
        let s = brute_force(&z6, InverseKind::LeftDualBcCore, &Inputs::Abc(5, 3, 1)).unwrap();
        assert_eq!(s.witnesses, set(&[1, 3, 5]));
        for ring in [FiniteRing::zn(6), FiniteRing::mat_zp(2, 2)] {
            for a in ring.iter() {
                let s =
                    brute_force(&ring, InverseKind::LeftDualBcCore, &Inputs::Abc(a, 0, ring.one())).unwrap();
                assert_eq!(s.witnesses.len() as u32, ring.order());
            }
        }
    }

    #[test]
    fn definition_matches_verify() {
        let ring = FiniteRing::zn(12);
        for kind in InverseKind::ALL {
            for a in [0, 1, 2, 3, 4, 6, 8, 11] {
                for b in [0, 1, 4, 6] {
                    let inputs = match kind.arity() {
                        g::Arity::A => Inputs::A(a),
                        g::Arity::Abc => Inputs::Abc(a, b, (a + b) % 12),
                        g::Arity::Av => Inputs::Av(a, b),
                        g::Arity::Ak => Inputs::Ak(a, 1 + b % 3),
                    };
                    for x in ring.iter() {
                        let w = g::verify(&ring, kind, &inputs, &x).unwrap();
                        assert_eq!(w.overall, definition(&ring, kind, &inputs, &x), "{kind} {inputs:?} {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn theorem_tags_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.tag().parse::<Theorem>().unwrap(), t);
            assert_eq!(serde_json::to_value(t).unwrap(), t.tag());
        }
    }

    #[test]
    fn corpus_is_deterministic_and_singular_enough() {
        let a = random_matrix_corpus::<Rational>(1..=4, 3, 40, 7, ());
        let b = random_matrix_corpus::<Rational>(1..=4, 3, 40, 7, ());
        assert_eq!(a, b);
        assert_ne!(a, random_matrix_corpus::<Rational>(1..=4, 3, 40, 8, ()));
        let mats: Vec<&Matrix<Rational>> = a.iter().flat_map(|t| [&t.a, &t.b, &t.c, &t.d, &t.v]).collect();
        let singular = mats.iter().filter(|m| m.rank() < m.rows()).count();
        assert!(singular * 10 >= mats.len() * 3, "{singular} of {}", mats.len());
        let scalars = random_matrix_corpus::<Rational>(1..=1, 3, 10, 1, ());
        assert!(scalars.iter().all(|t| t.n == 1 && t.a.rows() == 1));
    }

    #[test]
    fn budget_rejects_large_exhaustive_sweeps() {
        let opts = BatteryOptions::default();
        let big = Corpus::Finite { ring: "Zn:100".parse().unwrap(), samples: None };
        assert!(matches!(
            run_battery(Theorem::ExistenceCriteria, &big, &opts),
            Err(Error::CorpusTooLarge { .. })
        ));
        let z6 = Corpus::Finite { ring: "Zn:6".parse().unwrap(), samples: None };
        assert_eq!(check_budget(Theorem::ExistenceCriteria, &z6, &opts).unwrap(), 216);
    }

    #[test]
    fn existence_battery_on_z6() {
        let z6 = Corpus::Finite { ring: "Zn:6".parse().unwrap(), samples: None };
        let rep = run_battery(Theorem::ExistenceCriteria, &z6, &BatteryOptions::default()).unwrap();
        assert_eq!((rep.tuples, rep.agreements), (216, 216), "{:?}", rep.disagreements);
    }

    #[test]
    fn sampled_battery_is_reproducible() {
        let c = Corpus::Finite { ring: "MatZp:2x2:p3".parse().unwrap(), samples: Some(300) };
        let opts = BatteryOptions { seed: 11, ..BatteryOptions::default() };
        let mut a = run_battery(Theorem::Coincidence, &c, &opts).unwrap();
        let mut b = run_battery(Theorem::Coincidence, &c, &opts).unwrap();
        a.wall_ms = 0;
        b.wall_ms = 0;
        assert_eq!(a, b);
        assert!(a.clean(), "{:?}", a.disagreements);
    }
}
