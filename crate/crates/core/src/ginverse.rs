//! Generalized inverses in a `*`-ring: compute paths (canonical
//! representatives), verify paths (axiom by axiom) and existence criteria.
//!
//! All operations are generic over [`StarRing`], so the same code runs on
//! exact matrix rings and on enumerated finite rings. Canonical choices come
//! from the ring's deterministic solvers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{is_projection, is_regular, pierce_blocks_unchecked, RingDescriptor, StarRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InverseKind {
    Inner,
    #[serde(rename = "inv-13")]
    Inv13,
    #[serde(rename = "inv-14")]
    Inv14,
    MoorePenrose,
    LeftBc,
    RightBc,
    StronglyLeftBc,
    LeftDualBcCore,
    DualBcCore,
    BcCore,
    RightBcCore,
    LeftDualCore,
    LeftDualPseudoCore,
    LeftDualVCore,
    LeftInvertible,
}

/// Parameter shape of an inverse kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    A,
    Abc,
    Av,
    Ak,
}

impl InverseKind {
    pub const ALL: [InverseKind; 15] = [
        Self::Inner,
        Self::Inv13,
        Self::Inv14,
        Self::MoorePenrose,
        Self::LeftBc,
        Self::RightBc,
        Self::StronglyLeftBc,
        Self::LeftDualBcCore,
        Self::DualBcCore,
        Self::BcCore,
        Self::RightBcCore,
        Self::LeftDualCore,
        Self::LeftDualPseudoCore,
        Self::LeftDualVCore,
        Self::LeftInvertible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Inner => "inner",
            Self::Inv13 => "inv-13",
            Self::Inv14 => "inv-14",
            Self::MoorePenrose => "moore-penrose",
            Self::LeftBc => "left-bc",
            Self::RightBc => "right-bc",
            Self::StronglyLeftBc => "strongly-left-bc",
            Self::LeftDualBcCore => "left-dual-bc-core",
            Self::DualBcCore => "dual-bc-core",
            Self::BcCore => "bc-core",
            Self::RightBcCore => "right-bc-core",
            Self::LeftDualCore => "left-dual-core",
            Self::LeftDualPseudoCore => "left-dual-pseudo-core",
            Self::LeftDualVCore => "left-dual-v-core",
            Self::LeftInvertible => "left-invertible",
        }
    }

    pub fn arity(self) -> Arity {
        match self {
            Self::Inner
            | Self::Inv13
            | Self::Inv14
            | Self::MoorePenrose
            | Self::LeftDualCore
            | Self::LeftInvertible => Arity::A,
            Self::LeftBc
            | Self::RightBc
            | Self::StronglyLeftBc
            | Self::LeftDualBcCore
            | Self::DualBcCore
            | Self::BcCore
            | Self::RightBcCore => Arity::Abc,
            Self::LeftDualVCore => Arity::Av,
            Self::LeftDualPseudoCore => Arity::Ak,
        }
    }

    pub fn is_verify_only(self) -> bool {
        matches!(self, Self::DualBcCore | Self::BcCore | Self::RightBcCore)
    }
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InverseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

/// Inputs of one inverse problem, shaped by [`Arity`]. For the pseudo core
/// the integer is the index when verifying and the search bound when
/// computing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inputs<E> {
    A(E),
    Abc(E, E, E),
    Av(E, E),
    Ak(E, u32),
}

impl<E> Inputs<E> {
    pub fn arity(&self) -> Arity {
        match self {
            Inputs::A(_) => Arity::A,
            Inputs::Abc(..) => Arity::Abc,
            Inputs::Av(..) => Arity::Av,
            Inputs::Ak(..) => Arity::Ak,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
}

impl Verdict {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Verdict { name: name.into(), holds }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport<E> {
    pub kind: InverseKind,
    pub candidate: Option<E>,
    pub verdicts: Vec<Verdict>,
    pub overall: bool,
}

impl<E> WitnessReport<E> {
    fn new(kind: InverseKind, candidate: Option<E>, verdicts: Vec<Verdict>) -> Self {
        let overall = candidate.is_some() && verdicts.iter().all(|v| v.holds);
        WitnessReport { kind, candidate, verdicts, overall }
    }

    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.verdicts.iter().find(|v| v.name == name).map(|v| v.holds)
    }

    pub fn map<F>(self, f: impl FnOnce(E) -> F) -> WitnessReport<F> {
        WitnessReport {
            kind: self.kind,
            candidate: self.candidate.map(f),
            verdicts: self.verdicts,
            overall: self.overall,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoCoreResult<E> {
    pub x: E,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult<E> {
    pub a: E,
    pub v: E,
    pub x: E,
    pub a1: E,
    pub a2: E,
    pub verdicts: Vec<Verdict>,
}

impl<E> DecompositionResult<E> {
    pub fn holds(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }
}

fn p<R: StarRing>(r: &R, xs: &[&R::Elem]) -> R::Elem {
    r.prod(xs)
}

fn symmetric<R: StarRing>(r: &R, x: &R::Elem) -> bool {
    r.star(x) == *x
}

/// `xR = yR`
fn right_ideals_equal<R: StarRing>(r: &R, x: &R::Elem, y: &R::Elem) -> bool {
    r.right_ideal_contains(x, y) && r.right_ideal_contains(y, x)
}

/// `Rx = Ry`
fn left_ideals_equal<R: StarRing>(r: &R, x: &R::Elem, y: &R::Elem) -> bool {
    r.left_ideal_contains(x, y) && r.left_ideal_contains(y, x)
}

// ---------------------------------------------------------------- verify

/// Evaluates each defining axiom of `kind` for `x` independently.
pub fn verify<R: StarRing>(
    r: &R,
    kind: InverseKind,
    inputs: &Inputs<R::Elem>,
    x: &R::Elem,
) -> Result<WitnessReport<R::Elem>> {
    if inputs.arity() != kind.arity() {
        return Err(Error::MissingInput("inputs", kind.name().to_string()));
    }
    let mut v = Vec::new();
    let mut push = |name: &str, holds: bool| v.push(Verdict::new(name, holds));
    match (kind, inputs) {
        (InverseKind::Inner, Inputs::A(a)) => {
            push("axa = a", p(r, &[a, x, a]) == *a);
        }
        (InverseKind::Inv13, Inputs::A(a)) => {
            push("axa = a", p(r, &[a, x, a]) == *a);
            push("(ax)* = ax", symmetric(r, &r.mul(a, x)));
        }
        (InverseKind::Inv14, Inputs::A(a)) => {
            push("axa = a", p(r, &[a, x, a]) == *a);
            push("(xa)* = xa", symmetric(r, &r.mul(x, a)));
        }
        (InverseKind::MoorePenrose, Inputs::A(a)) => {
            push("axa = a", p(r, &[a, x, a]) == *a);
            push("xax = x", p(r, &[x, a, x]) == *x);
            push("(ax)* = ax", symmetric(r, &r.mul(a, x)));
            push("(xa)* = xa", symmetric(r, &r.mul(x, a)));
        }
        (InverseKind::LeftBc, Inputs::Abc(a, b, c)) => {
            push("x ∈ Rc", r.left_ideal_contains(x, c));
            push("xab = b", p(r, &[x, a, b]) == *b);
        }
        (InverseKind::RightBc, Inputs::Abc(a, b, c)) => {
            push("x ∈ bR", r.right_ideal_contains(x, b));
            push("cax = c", p(r, &[c, a, x]) == *c);
        }
        (InverseKind::StronglyLeftBc, Inputs::Abc(a, b, c)) => {
            push("xax = x", p(r, &[x, a, x]) == *x);
            push("xR = bR", right_ideals_equal(r, x, b));
            push("Rx ⊆ Rc", r.left_ideal_contains(x, c));
        }
        (InverseKind::LeftDualBcCore, Inputs::Abc(a, b, c)) => {
            let xab = p(r, &[x, a, b]);
            push("x ∈ Rc", r.left_ideal_contains(x, c));
            push("bxab = b", r.mul(b, &xab) == *b);
            push("(xab)* = xab", symmetric(r, &xab));
        }
        (InverseKind::DualBcCore, Inputs::Abc(a, b, c)) => {
            push("bxab = b", p(r, &[b, x, a, b]) == *b);
            push("xR = b*R", right_ideals_equal(r, x, &r.star(b)));
            push("Rx = Rc", left_ideals_equal(r, x, c));
        }
        (InverseKind::BcCore, Inputs::Abc(a, b, c)) => {
            push("caxc = c", p(r, &[c, a, x, c]) == *c);
            push("xR = bR", right_ideals_equal(r, x, b));
            push("Rx = Rc*", left_ideals_equal(r, x, &r.star(c)));
        }
        (InverseKind::RightBcCore, Inputs::Abc(a, b, c)) => {
            let cax = p(r, &[c, a, x]);
            push("x ∈ bR", r.right_ideal_contains(x, b));
            push("caxc = c", r.mul(&cax, c) == *c);
            push("(cax)* = cax", symmetric(r, &cax));
        }
        (InverseKind::LeftDualCore, Inputs::A(a)) => {
            push("axa = a", p(r, &[a, x, a]) == *a);
            push("(xa)* = xa", symmetric(r, &r.mul(x, a)));
            push("x²a = x", p(r, &[x, x, a]) == *x);
        }
        (InverseKind::LeftDualPseudoCore, Inputs::Ak(a, k)) => {
            let ak = r.pow(a, *k);
            push("aᵏxa = aᵏ", p(r, &[&ak, x, a]) == ak);
            push("(xa)* = xa", symmetric(r, &r.mul(x, a)));
            push("x²a = x", p(r, &[x, x, a]) == *x);
        }
        (InverseKind::LeftDualVCore, Inputs::Av(a, vv)) => {
            let xva = p(r, &[x, vv, a]);
            push("axva = a", r.mul(a, &xva) == *a);
            push("(xva)* = xva", symmetric(r, &xva));
            push("x²va = x", r.mul(x, &xva) == *x);
        }
        (InverseKind::LeftInvertible, Inputs::A(a)) => {
            push("xa = 1", r.mul(x, a) == r.one());
        }
        _ => unreachable!("arity checked above"),
    }
    Ok(WitnessReport::new(kind, Some(x.clone()), v))
}

/// Report for a compute result: verifies the candidate if there is one.
pub fn verify_option<R: StarRing>(
    r: &R,
    kind: InverseKind,
    inputs: &Inputs<R::Elem>,
    x: Option<&R::Elem>,
) -> Result<WitnessReport<R::Elem>> {
    match x {
        Some(x) => verify(r, kind, inputs, x),
        None => Ok(WitnessReport::new(kind, None, Vec::new())),
    }
}

// --------------------------------------------------------------- compute

/// `a^{(1,4)}` from a solution of `aa*y = a`, as `y*`.
pub fn inv_14<R: StarRing>(r: &R, a: &R::Elem) -> Option<R::Elem> {
    let aas = r.mul(a, &r.star(a));
    r.solve_right(&aas, a).map(|y| r.star(&y))
}

pub fn inv_13<R: StarRing>(r: &R, a: &R::Elem) -> Option<R::Elem> {
    inv_14(r, &r.star(a)).map(|g| r.star(&g))
}

/// `a† = a^{(1,4)} a a^{(1,3)}`
pub fn moore_penrose<R: StarRing>(r: &R, a: &R::Elem) -> Option<R::Elem> {
    let g14 = inv_14(r, a)?;
    let g13 = inv_13(r, a)?;
    Some(p(r, &[&g14, a, &g13]))
}

/// Canonical left `(b,c)`-inverse `b(cab)⁻c`. When `cab` has no inner
/// inverse (possible in finite rings) falls back to `s·c` with `s·cab = b`.
pub fn left_bc_inverse<R: StarRing>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> Option<R::Elem> {
    let cab = p(r, &[c, a, b]);
    let s = r.solve_left(&cab, b)?;
    match r.inner_inverse(&cab) {
        Some(g) => Some(p(r, &[b, &g, c])),
        None => Some(r.mul(&s, c)),
    }
}

/// Star of the left `(c*, b*)`-inverse of `a*`.
pub fn right_bc_inverse<R: StarRing>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> Option<R::Elem> {
    left_bc_inverse(r, &r.star(a), &r.star(c), &r.star(b)).map(|z| r.star(&z))
}

/// Canonical left dual `(b,c)`-core inverse `b^{(1,4)} a_l^{(b,c)}`.
pub fn left_dual_bc_core<R: StarRing>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> Option<R::Elem> {
    let al = left_bc_inverse(r, a, b, c)?;
    let b14 = inv_14(r, b)?;
    Some(r.mul(&b14, &al))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Formula {
    #[serde(rename = "b(1,4)·a_l")]
    B14Al,
    #[serde(rename = "(ab)(1,4)·a·a_l")]
    Ab14AAl,
    #[serde(rename = "(cab)(1,4)·c")]
    Cab14C,
    #[serde(rename = "b(1,4)·b·(cab)⁻·c")]
    B14BCabInnerC,
    #[serde(rename = "q·(ab)⁻·p")]
    QAbInnerP,
}

impl Formula {
    pub const ALL: [Formula; 5] =
        [Self::B14Al, Self::Ab14AAl, Self::Cab14C, Self::B14BCabInnerC, Self::QAbInnerP];

    pub fn name(self) -> &'static str {
        match self {
            Self::B14Al => "b(1,4)·a_l",
            Self::Ab14AAl => "(ab)(1,4)·a·a_l",
            Self::Cab14C => "(cab)(1,4)·c",
            Self::B14BCabInnerC => "b(1,4)·b·(cab)⁻·c",
            Self::QAbInnerP => "q·(ab)⁻·p",
        }
    }
}

/// `q(ab)⁻p` with `q = xab`, `p = abx` for a known witness `x` and a given
/// inner inverse `g` of `ab`.
pub fn q_ab_inner_p<R: StarRing>(r: &R, a: &R::Elem, b: &R::Elem, x: &R::Elem, g: &R::Elem) -> R::Elem {
    let ab = r.mul(a, b);
    let q = r.mul(x, &ab);
    let pp = r.mul(&ab, x);
    p(r, &[&q, g, &pp])
}

/// Every closed form for the left dual `(b,c)`-core inverse. The values may
/// differ; each one is a valid witness.
pub fn left_dual_bc_core_all_formulas<R: StarRing>(
    r: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> Result<Vec<(Formula, R::Elem)>> {
    let al = left_bc_inverse(r, a, b, c);
    let b14 = inv_14(r, b);
    let (al, b14) = match (al, b14) {
        (Some(al), Some(b14)) => (al, b14),
        _ => return Err(Error::NotInvertible(format!("{} (left dual (b,c)-core)", r.show(a)))),
    };
    let missing = |what: &str| Error::Inconsistent(format!("{what} missing for an invertible tuple"));
    let ab = r.mul(a, b);
    let cab = r.mul(c, &ab);
    let ab14 = inv_14(r, &ab).ok_or_else(|| missing("(ab)^(1,4)"))?;
    let cab14 = inv_14(r, &cab).ok_or_else(|| missing("(cab)^(1,4)"))?;
    let cab_inner = r.inner_inverse(&cab).ok_or_else(|| missing("(cab)^-"))?;
    let ab_inner = r.inner_inverse(&ab).ok_or_else(|| missing("(ab)^-"))?;
    let x = r.mul(&b14, &al);
    Ok(vec![
        (Formula::B14Al, x.clone()),
        (Formula::Ab14AAl, p(r, &[&ab14, a, &al])),
        (Formula::Cab14C, r.mul(&cab14, c)),
        (Formula::B14BCabInnerC, p(r, &[&b14, b, &cab_inner, c])),
        (Formula::QAbInnerP, q_ab_inner_p(r, a, b, &x, &ab_inner)),
    ])
}

/// `b(xab)ⁿ = b` and `((xab)ⁿ)* = (xab)ⁿ` for `n = 1..=n_max`.
pub fn power_identities<R: StarRing>(
    r: &R,
    a: &R::Elem,
    b: &R::Elem,
    x: &R::Elem,
    n_max: u32,
) -> Vec<Verdict> {
    let xab = p(r, &[x, a, b]);
    (1..=n_max)
        .flat_map(|n| {
            let q = r.pow(&xab, n);
            [
                Verdict::new(format!("b(xab)^{n} = b"), r.mul(b, &q) == *b),
                Verdict::new(format!("((xab)^{n})* = (xab)^{n}"), symmetric(r, &q)),
            ]
        })
        .collect()
}

/// Left dual core inverse in `xax = x` form: with `y` the left dual
/// `(a,a)`-core inverse, `x = ya` and the result is `xax`.
pub fn left_dual_core<R: StarRing>(r: &R, a: &R::Elem) -> Option<R::Elem> {
    let y = left_dual_bc_core(r, a, a, a)?;
    let x = r.mul(&y, a);
    Some(p(r, &[&x, a, &x]))
}

/// Search bound for the pseudo core index: the dimension for matrix rings,
/// the ring order for finite rings.
pub fn default_k_max(d: &RingDescriptor) -> u32 {
    match *d {
        RingDescriptor::MatrixRing { n, .. } => n as u32,
        RingDescriptor::Zn { modulus } => modulus,
        RingDescriptor::MatZp { p, k } => p.saturating_pow((k * k) as u32),
    }
}

/// Smallest `k ≤ k_max` for which `a` is left dual `(aᵏ,1)`-core
/// invertible, with `x = y·aᵏ`.
pub fn left_dual_pseudo_core<R: StarRing>(
    r: &R,
    a: &R::Elem,
    k_max: u32,
) -> Option<PseudoCoreResult<R::Elem>> {
    let one = r.one();
    let mut ak = r.one();
    for k in 1..=k_max {
        ak = r.mul(&ak, a);
        if let Some(y) = left_dual_bc_core(r, a, &ak, &one) {
            return Some(PseudoCoreResult { x: r.mul(&y, &ak), k });
        }
    }
    None
}

/// Left dual `v`-core inverse of `a`, as the left dual `(a,a)`-core inverse
/// of `v`.
pub fn left_dual_v_core<R: StarRing>(r: &R, a: &R::Elem, v: &R::Elem) -> Option<R::Elem> {
    left_dual_bc_core(r, v, a, a)
}

/// `va = a1 + a2` with `a1 = x(va)²`, `a2 = (1 - xva)va`.
pub fn nilpotent_decomposition<R: StarRing>(
    r: &R,
    a: &R::Elem,
    v: &R::Elem,
) -> Option<DecompositionResult<R::Elem>> {
    let x = left_dual_v_core(r, a, v)?;
    let va = r.mul(v, a);
    let xva = r.mul(&x, &va);
    let a1 = p(r, &[&x, &va, &va]);
    let a2 = r.mul(&r.sub(&r.one(), &xva), &va);
    let zero = r.zero();
    let x_core =
        verify(r, InverseKind::LeftDualCore, &Inputs::A(a1.clone()), &x).map(|w| w.overall).unwrap_or(false);
    let verdicts = vec![
        Verdict::new("a1 + a2 = va", r.add(&a1, &a2) == va),
        Verdict::new("a2² = 0", r.mul(&a2, &a2) == zero),
        Verdict::new("a2*a1 = 0", r.mul(&r.star(&a2), &a1) == zero),
        Verdict::new("a1a2 = 0", r.mul(&a1, &a2) == zero),
        Verdict::new("x is a left dual core inverse of a1", x_core),
        Verdict::new("a1 left dual core invertible", left_dual_core(r, &a1).is_some()),
    ];
    Some(DecompositionResult { a: a.clone(), v: v.clone(), x, a1, a2, verdicts })
}

/// `x0·a·x0` with `x0` the canonical left `(b,c)`-inverse, provided `cab`
/// is regular.
pub fn strongly_left_bc_inverse<R: StarRing>(
    r: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> Option<R::Elem> {
    let x0 = left_bc_inverse(r, a, b, c)?;
    if !is_regular(r, &p(r, &[c, a, b])) {
        return None;
    }
    Some(p(r, &[&x0, a, &x0]))
}

/// `xa = 1`, through the left dual `(1,1)`-core inverse.
pub fn left_invertible<R: StarRing>(r: &R, a: &R::Elem) -> Option<R::Elem> {
    let one = r.one();
    left_dual_bc_core(r, a, &one, &one)
}

/// Dispatches to the compute path of `kind`.
pub fn compute<R: StarRing>(r: &R, kind: InverseKind, inputs: &Inputs<R::Elem>) -> Result<Option<R::Elem>> {
    if kind.is_verify_only() {
        return Err(Error::NoComputePath(kind.name().to_string()));
    }
    if inputs.arity() != kind.arity() {
        return Err(Error::MissingInput("inputs", kind.name().to_string()));
    }
    Ok(match (kind, inputs) {
        (InverseKind::Inner, Inputs::A(a)) => r.inner_inverse(a),
        (InverseKind::Inv13, Inputs::A(a)) => inv_13(r, a),
        (InverseKind::Inv14, Inputs::A(a)) => inv_14(r, a),
        (InverseKind::MoorePenrose, Inputs::A(a)) => moore_penrose(r, a),
        (InverseKind::LeftBc, Inputs::Abc(a, b, c)) => left_bc_inverse(r, a, b, c),
        (InverseKind::RightBc, Inputs::Abc(a, b, c)) => right_bc_inverse(r, a, b, c),
        (InverseKind::StronglyLeftBc, Inputs::Abc(a, b, c)) => strongly_left_bc_inverse(r, a, b, c),
        (InverseKind::LeftDualBcCore, Inputs::Abc(a, b, c)) => left_dual_bc_core(r, a, b, c),
        (InverseKind::LeftDualCore, Inputs::A(a)) => left_dual_core(r, a),
        (InverseKind::LeftDualPseudoCore, Inputs::Ak(a, k)) => {
            left_dual_pseudo_core(r, a, *k).map(|res| res.x)
        }
        (InverseKind::LeftDualVCore, Inputs::Av(a, v)) => left_dual_v_core(r, a, v),
        (InverseKind::LeftInvertible, Inputs::A(a)) => left_invertible(r, a),
        _ => unreachable!("verify-only kinds and arity handled above"),
    })
}

// ------------------------------------------------------------- criteria

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Criterion {
    pub tag: String,
    pub value: Option<bool>,
}

impl Criterion {
    fn new(tag: &str, value: bool) -> Self {
        Criterion { tag: tag.to_string(), value: Some(value) }
    }

    fn maybe(tag: &str, value: Option<bool>) -> Self {
        Criterion { tag: tag.to_string(), value }
    }
}

/// Named booleans that the theory says must all be equal. Entries with no
/// value (not evaluable on this ring) are ignored for consistency.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriteriaReport {
    pub criteria: Vec<Criterion>,
    pub consistent: bool,
}

impl CriteriaReport {
    fn new(criteria: Vec<Criterion>) -> Self {
        let mut known = criteria.iter().filter_map(|c| c.value);
        let consistent = match known.next() {
            Some(first) => known.all(|v| v == first),
            None => true,
        };
        CriteriaReport { criteria, consistent }
    }

    pub fn get(&self, tag: &str) -> Option<bool> {
        self.criteria.iter().find(|c| c.tag == tag).and_then(|c| c.value)
    }

    /// The common value, when consistent.
    pub fn value(&self) -> Option<bool> {
        if !self.consistent {
            return None;
        }
        self.criteria.iter().find_map(|c| c.value)
    }
}

pub mod criteria {
    pub const B_IN_B_CABSTAR_R: &str = "b ∈ b(cab)*R";
    pub const B_IN_RCAB_CAP_BBSTAR_R: &str = "b ∈ Rcab ∩ bb*R";
    pub const LEFT_AND_B14: &str = "a ∈ R_l(b,c) ∧ b ∈ R(1,4)";
    pub const LEFT_AND_AB14: &str = "a ∈ R_l(b,c) ∧ ab ∈ R(1,4)";
    pub const LEFT_AND_CAB14: &str = "a ∈ R_l(b,c) ∧ cab ∈ R(1,4)";
    pub const DIRECT_SUM: &str = "R = (cab)*R ⊕ r(b)";
    pub const SUM: &str = "R = (cab)*R + r(b)";
}

/// Evaluates the existence criteria for left dual `(b,c)`-core
/// invertibility independently of each other.
pub fn exists_by_criteria<R: StarRing>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> CriteriaReport {
    use criteria::*;
    let ab = r.mul(a, b);
    let cab = r.mul(c, &ab);
    let cab_star = r.star(&cab);
    let left = r.left_ideal_contains(b, &cab);
    let ds = r.direct_sum_right_ideals(&cab_star, b);
    CriteriaReport::new(vec![
        Criterion::new(B_IN_B_CABSTAR_R, r.right_ideal_contains(b, &r.mul(b, &cab_star))),
        Criterion::new(B_IN_RCAB_CAP_BBSTAR_R, left && r.right_ideal_contains(b, &r.mul(b, &r.star(b)))),
        Criterion::new(LEFT_AND_B14, left && inv_14(r, b).is_some()),
        Criterion::new(LEFT_AND_AB14, left && inv_14(r, &ab).is_some()),
        Criterion::new(LEFT_AND_CAB14, left && inv_14(r, &cab).is_some()),
        Criterion::new(DIRECT_SUM, ds.is_sum && ds.is_direct),
        Criterion::new(SUM, ds.is_sum),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceReport<E> {
    /// `a` left dual `(b,c)`-core invertible.
    pub core: bool,
    /// `ab` left `(b*,c)`-invertible.
    pub left: bool,
    /// `ab` strongly left `(b*,c)`-invertible.
    pub strong: bool,
    /// Canonical core inverse of `a` checked as a left `(b*,c)`-inverse of `ab`.
    pub core_as_left: Option<WitnessReport<E>>,
    /// Canonical left `(b*,c)`-inverse of `ab` checked as a core inverse of `a`.
    pub left_as_core: Option<WitnessReport<E>>,
}

impl<E> CoincidenceReport<E> {
    pub fn holds(&self) -> bool {
        let cross = |w: &Option<WitnessReport<E>>| w.as_ref().is_none_or(|w| w.overall);
        self.core == self.left
            && self.core == self.strong
            && self.core_as_left.is_some() == self.core
            && self.left_as_core.is_some() == self.left
            && cross(&self.core_as_left)
            && cross(&self.left_as_core)
    }
}

pub fn coincidence_check<R: StarRing>(
    r: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> CoincidenceReport<R::Elem> {
    let ab = r.mul(a, b);
    let bs = r.star(b);
    let core = left_dual_bc_core(r, a, b, c);
    let left = left_bc_inverse(r, &ab, &bs, c);
    let strong = strongly_left_bc_inverse(r, &ab, &bs, c).is_some();
    let as_left = Inputs::Abc(ab.clone(), bs.clone(), c.clone());
    let as_core = Inputs::Abc(a.clone(), b.clone(), c.clone());
    CoincidenceReport {
        core: core.is_some(),
        left: left.is_some(),
        strong,
        core_as_left: core.map(|x| verify(r, InverseKind::LeftBc, &as_left, &x).expect("arity")),
        left_as_core: left.map(|x| verify(r, InverseKind::LeftDualBcCore, &as_core, &x).expect("arity")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedIdentity<E> {
    pub name: &'static str,
    /// `None` when the hypotheses of the identity do not hold.
    pub report: Option<WitnessReport<E>>,
}

impl<E> MixedIdentity<E> {
    pub fn holds(&self) -> bool {
        self.report.as_ref().is_none_or(|w| w.overall)
    }
}

/// For `a, d` sharing `(b,c)`: `d_l·d·a_l` and `a_l·a·d_l` are left
/// `(b,c)`-inverses of `a` and `d`; with core inverses in front they are left
/// dual `(b,c)`-core inverses.
pub fn mixed_inverse_identities<R: StarRing>(
    r: &R,
    a: &R::Elem,
    d: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> Vec<MixedIdentity<R::Elem>> {
    let for_a = Inputs::Abc(a.clone(), b.clone(), c.clone());
    let for_d = Inputs::Abc(d.clone(), b.clone(), c.clone());
    let check = |kind, inputs: &Inputs<R::Elem>, x: R::Elem| verify(r, kind, inputs, &x).expect("arity");
    let al = left_bc_inverse(r, a, b, c);
    let dl = left_bc_inverse(r, d, b, c);
    let ac = left_dual_bc_core(r, a, b, c);
    let dc = left_dual_bc_core(r, d, b, c);
    let (left_a, left_d) = match (&al, &dl) {
        (Some(x), Some(y)) => (
            Some(check(InverseKind::LeftBc, &for_a, p(r, &[y, d, x]))),
            Some(check(InverseKind::LeftBc, &for_d, p(r, &[x, a, y]))),
        ),
        _ => (None, None),
    };
    let (core_a, core_d) = match (&ac, &dc, &al, &dl) {
        (Some(xc), Some(yc), Some(x), Some(y)) => (
            Some(check(InverseKind::LeftDualBcCore, &for_a, p(r, &[yc, d, x]))),
            Some(check(InverseKind::LeftDualBcCore, &for_d, p(r, &[xc, a, y]))),
        ),
        _ => (None, None),
    };
    vec![
        MixedIdentity { name: "a_l = d_l·d·a_l", report: left_a },
        MixedIdentity { name: "d_l = a_l·a·d_l", report: left_d },
        MixedIdentity { name: "a_core = d_core·d·a_l", report: core_a },
        MixedIdentity { name: "d_core = a_core·a·d_l", report: core_d },
    ]
}

pub mod mp_items {
    pub const MP: &str = "a ∈ R†";
    pub const A_STAR_CORE: &str = "a left dual a*-core invertible";
    pub const STAR_A_CORE: &str = "a* left dual a-core invertible";
    pub const A_CORE_STAR_STAR: &str = "a left dual (a*,a*)-core invertible";
    pub const A_LEFT_STAR_STAR: &str = "a left (a*,a*)-invertible";
    pub const STAR_CORE_A_A: &str = "a* left dual (a,a)-core invertible";
    pub const STAR_LEFT_A_A: &str = "a* left (a,a)-invertible";
}

pub fn mp_equivalences<R: StarRing>(r: &R, a: &R::Elem) -> CriteriaReport {
    use mp_items::*;
    let s = r.star(a);
    CriteriaReport::new(vec![
        Criterion::new(MP, moore_penrose(r, a).is_some()),
        Criterion::new(A_STAR_CORE, left_dual_v_core(r, a, &s).is_some()),
        Criterion::new(STAR_A_CORE, left_dual_v_core(r, &s, a).is_some()),
        Criterion::new(A_CORE_STAR_STAR, left_dual_bc_core(r, a, &s, &s).is_some()),
        Criterion::new(A_LEFT_STAR_STAR, left_bc_inverse(r, a, &s, &s).is_some()),
        Criterion::new(STAR_CORE_A_A, left_dual_bc_core(r, &s, a, a).is_some()),
        Criterion::new(STAR_LEFT_A_A, left_bc_inverse(r, &s, a, a).is_some()),
    ])
}

pub mod final_items {
    pub const ONE: &str = "left dual and right (b,c)-core invertible";
    pub const TWO: &str = "dual (b,c)-core and (b,c)-core invertible";
    pub const THREE: &str = "cab ∈ R†";
    pub const THREE_READ: &str = "a ∈ R(b,c) ∧ cab ∈ R†";
    pub const FOUR: &str = "b ∈ (cab)*R ∧ c ∈ R(cab)*c";
    pub const FOUR_READ: &str = "b ∈ b(cab)*R ∧ c ∈ R(cab)*c";
    pub const FIVE: &str = "R = R(cab)* ⊕ l(c) = (cab)*R ⊕ r(b)";
    pub const SIX: &str = "R = R(cab)* + l(c) = (cab)*R + r(b)";
}

/// The final equivalence theorem, both as printed and with items 3 and 4
/// in the form that holds (see the crate README).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinalEquivalences {
    pub as_stated: CriteriaReport,
    pub corrected: CriteriaReport,
}

/// Item 2 needs a search over the whole ring and is left unevaluated when
/// the ring is not enumerable.
pub fn final_equivalences<R: StarRing>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> FinalEquivalences {
    use final_items::*;
    let cab = p(r, &[c, a, b]);
    let u = r.star(&cab);
    let right_core = left_dual_bc_core(r, &r.star(a), &r.star(c), &r.star(b)).is_some();
    let one = left_dual_bc_core(r, a, b, c).is_some() && right_core;
    let two = r.elements().map(|all| {
        let inputs = Inputs::Abc(a.clone(), b.clone(), c.clone());
        let found = |kind| all.iter().any(|x| verify(r, kind, &inputs, x).expect("arity").overall);
        found(InverseKind::DualBcCore) && found(InverseKind::BcCore)
    });
    let mp = moore_penrose(r, &cab).is_some();
    let bc = left_bc_inverse(r, a, b, c).is_some() && right_bc_inverse(r, a, b, c).is_some();
    let c_in = r.left_ideal_contains(c, &r.mul(&u, c));
    let four = r.right_ideal_contains(b, &u) && c_in;
    let four_read = r.right_ideal_contains(b, &r.mul(b, &u)) && c_in;
    let right = r.direct_sum_right_ideals(&u, b);
    let left = r.direct_sum_left_ideals(&u, c);
    let five = right.is_direct && left.is_direct;
    let six = right.is_sum && left.is_sum;
    let shared = |three: Criterion, four: Criterion| {
        CriteriaReport::new(vec![
            Criterion::new(ONE, one),
            Criterion::maybe(TWO, two),
            three,
            four,
            Criterion::new(FIVE, five),
            Criterion::new(SIX, six),
        ])
    };
    FinalEquivalences {
        as_stated: shared(Criterion::new(THREE, mp), Criterion::new(FOUR, four)),
        corrected: shared(Criterion::new(THREE_READ, bc && mp), Criterion::new(FOUR_READ, four_read)),
    }
}

pub mod pierce_items {
    pub const Q_PROJECTION: &str = "q = xab is a projection";
    pub const B_SHAPE_Q: &str = "b = [b1 0; b3 0]_q";
    pub const EQ_Q: &str = "(x1a1+x2a3)b1+(x1a2+x2a4)b3 = q";
    pub const EQ_ZERO_Q: &str = "(x3a1+x4a3)b1+(x3a2+x4a4)b3 = 0";
    pub const COLUMN: &str = "Rx ⊆ Rc";
    pub const B_SHAPE_P: &str = "b = [0 b2; 0 b4]_p";
    pub const EQ_P: &str = "(x3a1+x4a3)b2+(x3a2+x4a4)b4 = 1-p";
    pub const EQ_ZERO_P: &str = "(x1a1+x2a3)b2+(x1a2+x2a4)b4 = 0";
}

/// Block form of a claimed left dual `(b,c)`-core inverse `x` relative to
/// `q = xab` and to `p = 1 - q`.
pub fn pierce_representation_check<R: StarRing>(
    r: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
    x: &R::Elem,
) -> Result<WitnessReport<R::Elem>> {
    use pierce_items::*;
    let direct = verify(r, InverseKind::LeftDualBcCore, &Inputs::Abc(a.clone(), b.clone(), c.clone()), x)?;
    let q = p(r, &[x, a, b]);
    let q_proj = is_projection(r, &q);
    if direct.overall && !q_proj {
        return Err(Error::NotIdempotent);
    }
    let zero = r.zero();
    let one = r.one();
    let mut v = vec![Verdict::new(Q_PROJECTION, q_proj)];
    // Left column of xab (or right column when `first_col` is false) in the
    // block form at idempotent e.
    let blocks = |e: &R::Elem, first_col: bool| {
        let ab = pierce_blocks_unchecked(r, a, e);
        let bb = pierce_blocks_unchecked(r, b, e);
        let xb = pierce_blocks_unchecked(r, x, e);
        let (bt, bbot) = if first_col { (&bb.a1, &bb.a3) } else { (&bb.a2, &bb.a4) };
        let top = r.add(
            &p(r, &[&r.add(&r.mul(&xb.a1, &ab.a1), &r.mul(&xb.a2, &ab.a3)), bt]),
            &p(r, &[&r.add(&r.mul(&xb.a1, &ab.a2), &r.mul(&xb.a2, &ab.a4)), bbot]),
        );
        let bottom = r.add(
            &p(r, &[&r.add(&r.mul(&xb.a3, &ab.a1), &r.mul(&xb.a4, &ab.a3)), bt]),
            &p(r, &[&r.add(&r.mul(&xb.a3, &ab.a2), &r.mul(&xb.a4, &ab.a4)), bbot]),
        );
        let shape = if first_col { bb.a2 == zero && bb.a4 == zero } else { bb.a1 == zero && bb.a3 == zero };
        (shape, top, bottom)
    };
    let (shape_q, top_q, bottom_q) = blocks(&q, true);
    v.push(Verdict::new(B_SHAPE_Q, shape_q));
    v.push(Verdict::new(EQ_Q, top_q == q));
    v.push(Verdict::new(EQ_ZERO_Q, bottom_q == zero));
    v.push(Verdict::new(COLUMN, r.left_ideal_contains(x, c)));
    let pp = r.sub(&one, &q);
    let (shape_p, top_p, bottom_p) = blocks(&pp, false);
    v.push(Verdict::new(B_SHAPE_P, shape_p));
    // at p = 1 - q the identity block of xab sits in the second row
    v.push(Verdict::new(EQ_P, bottom_p == r.sub(&one, &pp)));
    v.push(Verdict::new(EQ_ZERO_P, top_p == zero));
    let report = WitnessReport::new(InverseKind::LeftDualBcCore, Some(x.clone()), v);
    if report.overall != direct.overall {
        return Err(Error::Inconsistent(format!(
            "block form gives {} but direct verification gives {}",
            report.overall, direct.overall
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteRing;
    use crate::matrix::Matrix;
    use crate::matrix_ring::MatrixRing;
    use crate::scalar::{PrimeField, Rational};

    fn q2() -> MatrixRing<Rational> {
        MatrixRing::rationals(2)
    }

    fn swap(r: &MatrixRing<Rational>) -> (Matrix<Rational>, Matrix<Rational>, Matrix<Rational>) {
        (r.mat(&[&[0, 1], &[1, 0]]), r.mat(&[&[1, 0], &[0, 0]]), r.mat(&[&[0, 0], &[0, 1]]))
    }

    fn half(r: &MatrixRing<Rational>) -> Matrix<Rational> {
        let h = crate::scalar::parse_rational("1/2").unwrap();
        let z = crate::scalar::parse_rational("0").unwrap();
        Matrix::from_rows(vec![vec![h.clone(), z.clone()], vec![h, z]], r.ctx())
    }

    #[test]
    fn kind_names_round_trip() {
        for k in InverseKind::ALL {
            assert_eq!(k.name().parse::<InverseKind>().unwrap(), k);
            assert_eq!(serde_json::to_value(k).unwrap(), k.name());
        }
        assert!("core".parse::<InverseKind>().is_err());
    }

    #[test]
    fn inv14_examples() {
        let r = q2();
        let pr = r.mat(&[&[1, 0], &[0, 0]]);
        assert_eq!(inv_14(&r, &pr), Some(pr.clone()));
        let a = r.mat(&[&[1, 1], &[0, 0]]);
        let g = inv_14(&r, &a).unwrap();
        assert_eq!(g, half(&r));
        assert!(verify(&r, InverseKind::Inv14, &Inputs::A(a), &g).unwrap().overall);
        let f = MatrixRing::<PrimeField>::prime_field(2, 2);
        assert_eq!(inv_14(&f, &f.mat(&[&[1, 1], &[0, 0]])), None);
    }

    #[test]
    fn inv13_examples() {
        let r = q2();
        let pr = r.mat(&[&[0, 0], &[0, 1]]);
        assert_eq!(inv_13(&r, &pr), Some(pr));
        let a = r.mat(&[&[1, 0], &[1, 0]]);
        let g = inv_13(&r, &a).unwrap();
        assert_eq!(g, half(&r).transpose());
        assert!(verify(&r, InverseKind::Inv13, &Inputs::A(a), &g).unwrap().overall);
        let f = MatrixRing::<PrimeField>::prime_field(2, 2);
        assert_eq!(inv_13(&f, &f.mat(&[&[1, 0], &[1, 0]])), None);
        // a*a = [[1,1],[1,1]] over GF(2), and a ∈ R·a*a
        assert_eq!(inv_13(&f, &f.mat(&[&[1, 1], &[0, 0]])), Some(f.mat(&[&[1, 0], &[0, 0]])));
    }

    #[test]
    fn moore_penrose_examples() {
        let r = q2();
        assert_eq!(moore_penrose(&r, &r.one()), Some(r.one()));
        let a = r.mat(&[&[1, 1], &[0, 0]]);
        let g = moore_penrose(&r, &a).unwrap();
        assert_eq!(g, half(&r));
        let w = verify(&r, InverseKind::MoorePenrose, &Inputs::A(a), &g).unwrap();
        assert_eq!(w.verdicts.len(), 4);
        assert!(w.overall);
        let f = MatrixRing::<PrimeField>::prime_field(2, 2);
        assert_eq!(moore_penrose(&f, &f.mat(&[&[1, 1], &[0, 0]])), None);
    }

    #[test]
    fn left_and_right_bc_examples() {
        let r = q2();
        let one = r.one();
        assert_eq!(left_bc_inverse(&r, &one, &one, &one), Some(one.clone()));
        assert_eq!(right_bc_inverse(&r, &one, &one, &one), Some(one.clone()));
        let (a, b, c) = swap(&r);
        let x = left_bc_inverse(&r, &a, &b, &c).unwrap();
        assert_eq!(x, r.mat(&[&[0, 1], &[0, 0]]));
        assert_eq!(left_bc_inverse(&r, &a, &b, &b), None);
        // the star-dual of the swap example: (a*, c*, b*)
        let z = right_bc_inverse(&r, &r.star(&a), &r.star(&c), &r.star(&b)).unwrap();
        assert_eq!(z, r.star(&x));
        let inputs = Inputs::Abc(r.star(&a), r.star(&c), r.star(&b));
        assert!(verify(&r, InverseKind::RightBc, &inputs, &z).unwrap().overall);
        // b = 0, c != 0: cab = 0 and c is not in {0}
        assert_eq!(right_bc_inverse(&r, &a, &r.zero(), &c), None);
    }

    #[test]
    fn left_dual_bc_core_examples() {
        let r = q2();
        let a = r.mat(&[&[2, 3], &[5, 7]]);
        assert_eq!(left_dual_bc_core(&r, &a, &r.zero(), &r.one()), Some(r.zero()));
        let (a, b, c) = swap(&r);
        let x = left_dual_bc_core(&r, &a, &b, &c).unwrap();
        assert_eq!(x, r.mat(&[&[0, 1], &[0, 0]]));
        let w = verify(&r, InverseKind::LeftDualBcCore, &Inputs::Abc(a, b, c), &x).unwrap();
        assert_eq!(w.verdicts.len(), 3);
        assert!(w.overall);
        let z6 = FiniteRing::zn(6);
        assert_eq!(left_dual_bc_core(&z6, &1, &2, &2), Some(2));
    }

    #[test]
    fn all_formulas_examples() {
        let r = q2();
        let one = r.one();
        let all = left_dual_bc_core_all_formulas(&r, &one, &one, &one).unwrap();
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(|(_, x)| *x == one));
        let (a, b, c) = swap(&r);
        let inputs = Inputs::Abc(a.clone(), b.clone(), c.clone());
        for (f, x) in left_dual_bc_core_all_formulas(&r, &a, &b, &c).unwrap() {
            assert!(verify(&r, InverseKind::LeftDualBcCore, &inputs, &x).unwrap().overall, "{f:?}");
        }
        let z6 = FiniteRing::zn(6);
        let all = left_dual_bc_core_all_formulas(&z6, &5, &3, &1).unwrap();
        assert!(all.iter().all(|(_, x)| [1, 3, 5].contains(x)), "{all:?}");
        assert!(matches!(left_dual_bc_core_all_formulas(&z6, &5, &4, &3), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn verify_examples() {
        let z6 = FiniteRing::zn(6);
        let inputs = Inputs::Abc(1, 2, 2);
        assert!(verify(&z6, InverseKind::LeftDualBcCore, &inputs, &2).unwrap().overall);
        let w = verify(&z6, InverseKind::LeftDualBcCore, &inputs, &4).unwrap();
        assert!(!w.overall);
        assert_eq!(w.verdict("bxab = b"), Some(false));
        assert_eq!(w.verdict("x ∈ Rc"), Some(true));
        let r = q2();
        let w = verify(&r, InverseKind::MoorePenrose, &Inputs::A(r.one()), &r.one()).unwrap();
        assert!(w.overall && w.verdicts.len() == 4);
        assert!(verify(&z6, InverseKind::LeftDualBcCore, &Inputs::A(1), &1).is_err());
    }

    #[test]
    fn criteria_examples() {
        let r = q2();
        let one = r.one();
        let all = exists_by_criteria(&r, &one, &one, &one);
        assert!(all.consistent && all.value() == Some(true));
        let z6 = FiniteRing::zn(6);
        let none = exists_by_criteria(&z6, &5, &4, &3);
        assert!(none.consistent && none.value() == Some(false));
        assert_eq!(none.criteria.len(), 7);
    }

    #[test]
    fn left_dual_core_examples() {
        let r = q2();
        let pr = r.mat(&[&[1, 0], &[0, 0]]);
        assert_eq!(left_dual_core(&r, &pr), Some(pr.clone()));
        assert_eq!(left_dual_core(&r, &r.mat(&[&[0, 1], &[0, 0]])), None);
        let z6 = FiniteRing::zn(6);
        assert_eq!(left_dual_core(&z6, &5), Some(5));
        let x = left_dual_core(&r, &r.mat(&[&[1, 1], &[0, 0]])).unwrap();
        let a = r.mat(&[&[1, 1], &[0, 0]]);
        assert!(verify(&r, InverseKind::LeftDualCore, &Inputs::A(a.clone()), &x).unwrap().overall);
        assert_eq!(r.prod(&[&x, &a, &x]), x);
    }

    #[test]
    fn pseudo_core_examples() {
        let r = q2();
        assert_eq!(left_dual_pseudo_core(&r, &r.one(), 2), Some(PseudoCoreResult { x: r.one(), k: 1 }));
        let n = r.mat(&[&[0, 1], &[0, 0]]);
        assert_eq!(left_dual_pseudo_core(&r, &n, 2), Some(PseudoCoreResult { x: r.zero(), k: 2 }));
        assert_eq!(left_dual_pseudo_core(&r, &n, 1), None);
        let pr = r.mat(&[&[0, 0], &[0, 1]]);
        assert_eq!(left_dual_pseudo_core(&r, &pr, 2), Some(PseudoCoreResult { x: pr, k: 1 }));
        assert_eq!(default_k_max(&r.descriptor()), 2);
    }

    #[test]
    fn v_core_examples() {
        let r = q2();
        let pr = r.mat(&[&[1, 0], &[0, 0]]);
        assert_eq!(left_dual_v_core(&r, &pr, &r.one()), Some(pr.clone()));
        assert_eq!(left_dual_v_core(&r, &pr, &r.zero()), None);
        let z6 = FiniteRing::zn(6);
        // 5·x·5·5 = 5 forces 5x = 5, so x = 1
        let x = left_dual_v_core(&z6, &5, &5).unwrap();
        assert_eq!(x, 1);
        assert!(verify(&z6, InverseKind::LeftDualVCore, &Inputs::Av(5, 5), &x).unwrap().overall);
        assert!(!verify(&z6, InverseKind::LeftDualVCore, &Inputs::Av(5, 5), &5).unwrap().overall);
    }

    #[test]
    fn decomposition_examples() {
        let r = q2();
        let pr = r.mat(&[&[1, 0], &[0, 0]]);
        let d = nilpotent_decomposition(&r, &pr, &r.one()).unwrap();
        assert_eq!((d.a1.clone(), d.a2.clone()), (pr.clone(), r.zero()));
        assert!(d.holds());
        let d = nilpotent_decomposition(&r, &r.one(), &r.one()).unwrap();
        assert_eq!((d.a1, d.a2), (r.one(), r.zero()));
        let a = r.mat(&[&[1, 2], &[2, 4]]);
        let d = nilpotent_decomposition(&r, &a, &r.star(&a)).unwrap();
        assert!(d.holds(), "{:?}", d.verdicts);
        assert!(nilpotent_decomposition(&r, &pr, &r.zero()).is_none());
    }

    #[test]
    fn strongly_left_examples() {
        let r = q2();
        let one = r.one();
        assert_eq!(strongly_left_bc_inverse(&r, &one, &one, &one), Some(one));
        let (a, b, c) = swap(&r);
        let x = strongly_left_bc_inverse(&r, &a, &b, &c).unwrap();
        let w = verify(&r, InverseKind::StronglyLeftBc, &Inputs::Abc(a, b, c), &x).unwrap();
        assert!(w.overall, "{w:?}");
        assert_eq!(strongly_left_bc_inverse(&FiniteRing::zn(6), &5, &4, &3), None);
    }

    #[test]
    fn coincidence_and_mixed_examples() {
        let r = q2();
        let one = r.one();
        let rep = coincidence_check(&r, &one, &one, &one);
        assert!(rep.core && rep.left && rep.strong && rep.holds());
        let mixed = mixed_inverse_identities(&r, &one, &one, &one, &one);
        assert_eq!(mixed.len(), 4);
        for m in &mixed {
            let w = m.report.as_ref().unwrap();
            assert!(w.overall && w.candidate == Some(one.clone()), "{}", m.name);
        }
        let (a, b, c) = swap(&r);
        assert!(mixed_inverse_identities(&r, &a, &a, &b, &c).iter().all(|m| m.holds() && m.report.is_some()));
        let skipped = mixed_inverse_identities(&r, &a, &a, &b, &b);
        assert!(skipped.iter().all(|m| m.report.is_none()));
    }

    #[test]
    fn mp_equivalence_examples() {
        let r = q2();
        let all = mp_equivalences(&r, &r.one());
        assert!(all.consistent && all.value() == Some(true) && all.criteria.len() == 7);
        let f = MatrixRing::<PrimeField>::prime_field(2, 2);
        let none = mp_equivalences(&f, &f.mat(&[&[1, 1], &[0, 0]]));
        assert!(none.consistent && none.value() == Some(false), "{none:?}");
        let yes = mp_equivalences(&r, &r.mat(&[&[1, 1], &[0, 0]]));
        assert!(yes.consistent && yes.value() == Some(true));
    }

    #[test]
    fn final_equivalence_examples() {
        let r = q2();
        let one = r.one();
        let f = final_equivalences(&r, &one, &one, &one);
        assert!(f.as_stated.consistent && f.corrected.consistent);
        assert_eq!(f.corrected.value(), Some(true));
        assert_eq!(f.as_stated.get(final_items::TWO), None);
        // cab = 2 is Moore-Penrose invertible in Z_6, yet 1 ∉ R·2
        let z6 = FiniteRing::zn(6);
        let f = final_equivalences(&z6, &1, &1, &2);
        assert!(!f.as_stated.consistent);
        assert_eq!(f.as_stated.get(final_items::THREE), Some(true));
        assert_eq!(f.as_stated.get(final_items::ONE), Some(false));
        assert!(f.corrected.consistent);
    }

    #[test]
    fn pierce_examples() {
        let r = q2();
        let one = r.one();
        let w = pierce_representation_check(&r, &one, &one, &one, &one).unwrap();
        assert!(w.overall);
        let (a, b, c) = swap(&r);
        let x = left_dual_bc_core(&r, &a, &b, &c).unwrap();
        let w = pierce_representation_check(&r, &a, &b, &c, &x).unwrap();
        assert!(w.overall, "{w:?}");
        assert_eq!(r.prod(&[&x, &a, &b]), r.mat(&[&[1, 0], &[0, 0]]));
        let bad = pierce_representation_check(&r, &a, &b, &c, &r.mat(&[&[0, 2], &[0, 0]])).unwrap();
        assert!(!bad.overall);
    }

    #[test]
    fn left_invertible_examples() {
        let r = q2();
        assert_eq!(left_invertible(&r, &r.one()), Some(r.one()));
        assert_eq!(left_invertible(&r, &r.mat(&[&[1, 0], &[0, 0]])), None);
        assert_eq!(left_invertible(&FiniteRing::zn(6), &5), Some(5));
        let a = r.mat(&[&[2, 1], &[1, 1]]);
        let x = left_invertible(&r, &a).unwrap();
        assert_eq!(r.mul(&x, &a), r.one());
    }

    #[test]
    fn compute_dispatch() {
        let z6 = FiniteRing::zn(6);
        assert_eq!(compute(&z6, InverseKind::LeftDualBcCore, &Inputs::Abc(1, 2, 2)).unwrap(), Some(2));
        assert_eq!(compute(&z6, InverseKind::LeftDualBcCore, &Inputs::Abc(5, 4, 3)).unwrap(), None);
        assert!(matches!(
            compute(&z6, InverseKind::BcCore, &Inputs::Abc(1, 1, 1)),
            Err(Error::NoComputePath(_))
        ));
        assert_eq!(compute(&z6, InverseKind::LeftDualPseudoCore, &Inputs::Ak(1, 6)).unwrap(), Some(1));
    }
}
