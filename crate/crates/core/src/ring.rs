//! The `*`-ring contract shared by matrix rings and enumerated finite rings,
//! plus ring-generic predicates (projections, idempotents) and the Pierce
//! decomposition relative to an idempotent.

use std::fmt::{self, Debug};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::DirectSum;
use crate::scalar::is_prime;

/// A unital ring with involution, together with the exact solving hooks the
/// inverse computations need.
///
/// Membership questions are phrased as in the ring: `left_ideal_contains(x, c)`
/// is `Rx ⊆ Rc`, `right_ideal_contains(x, b)` is `xR ⊆ bR`, and so on.
/// Elements of one ring value never mix with another's.
pub trait StarRing: Send + Sync {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn star(&self, x: &Self::Elem) -> Self::Elem;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        *x == self.zero()
    }

    /// Left-to-right product; the empty product is `1`.
    fn prod(&self, xs: &[&Self::Elem]) -> Self::Elem {
        match xs.split_first() {
            None => self.one(),
            Some((first, rest)) => rest.iter().fold((*first).clone(), |acc, x| self.mul(&acc, x)),
        }
    }

    fn pow(&self, x: &Self::Elem, k: u32) -> Self::Elem {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Some `x` with `x·m = target`.
    fn solve_left(&self, m: &Self::Elem, target: &Self::Elem) -> Option<Self::Elem>;
    /// Some `x` with `m·x = target`.
    fn solve_right(&self, m: &Self::Elem, target: &Self::Elem) -> Option<Self::Elem>;
    /// Some `g` with `a·g·a = a`, or `None` when `a` is not regular.
    fn inner_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn left_ideal_contains(&self, x: &Self::Elem, c: &Self::Elem) -> bool;
    fn right_ideal_contains(&self, x: &Self::Elem, b: &Self::Elem) -> bool;
    /// `l(x) ⊆ l(y)`
    fn left_annihilator_contained(&self, x: &Self::Elem, y: &Self::Elem) -> bool;
    /// `R = uR ⊕ r(b)`
    fn direct_sum_right_ideals(&self, u: &Self::Elem, b: &Self::Elem) -> DirectSum;
    /// `R = Ru ⊕ l(c)`
    fn direct_sum_left_ideals(&self, u: &Self::Elem, c: &Self::Elem) -> DirectSum;

    /// All elements in canonical order, for finite rings.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Short human-readable rendering of an element.
    fn show(&self, x: &Self::Elem) -> String;
}

pub fn star<R: StarRing>(ring: &R, a: &R::Elem) -> R::Elem {
    ring.star(a)
}

pub fn is_idempotent<R: StarRing>(ring: &R, e: &R::Elem) -> bool {
    ring.mul(e, e) == *e
}

/// `p² = p = p*`
pub fn is_projection<R: StarRing>(ring: &R, p: &R::Elem) -> bool {
    is_idempotent(ring, p) && ring.star(p) == *p
}

pub fn is_regular<R: StarRing>(ring: &R, a: &R::Elem) -> bool {
    ring.inner_inverse(a).is_some()
}

/// Blocks of `a` relative to an idempotent `p`:
/// `a1 = pap`, `a2 = pa(1-p)`, `a3 = (1-p)ap`, `a4 = (1-p)a(1-p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PierceBlocks<E> {
    pub p: E,
    pub a1: E,
    pub a2: E,
    pub a3: E,
    pub a4: E,
}

impl<E: Clone> PierceBlocks<E> {
    pub fn reconstruct<R: StarRing<Elem = E>>(&self, ring: &R) -> E {
        let top = ring.add(&self.a1, &self.a2);
        let bottom = ring.add(&self.a3, &self.a4);
        ring.add(&top, &bottom)
    }
}

pub fn pierce_blocks<R: StarRing>(ring: &R, a: &R::Elem, p: &R::Elem) -> Result<PierceBlocks<R::Elem>> {
    if !is_idempotent(ring, p) {
        return Err(Error::NotIdempotent);
    }
    Ok(pierce_blocks_unchecked(ring, a, p))
}

/// Block formulas evaluated without the idempotence check.
pub(crate) fn pierce_blocks_unchecked<R: StarRing>(
    ring: &R,
    a: &R::Elem,
    p: &R::Elem,
) -> PierceBlocks<R::Elem> {
    let q = ring.sub(&ring.one(), p);
    PierceBlocks {
        a1: ring.prod(&[p, a, p]),
        a2: ring.prod(&[p, a, &q]),
        a3: ring.prod(&[&q, a, p]),
        a4: ring.prod(&[&q, a, &q]),
        p: p.clone(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldTag {
    Rationals,
    GaussianRationals,
    Prime(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Involution {
    Transpose,
    ConjugateTranspose,
}

/// Identifies a concrete `*`-ring instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RingDescriptor {
    /// `M_n(field)` with the given involution.
    MatrixRing { field: FieldTag, n: usize, involution: Involution },
    /// `Z_n` with the identity involution.
    Zn { modulus: u32 },
    /// `M_k(Z_p)`, enumerated, with transpose.
    #[serde(rename = "matzp")]
    MatZp { p: u32, k: usize },
}

impl RingDescriptor {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidDescriptor(format!("{self}: {msg}")));
        match *self {
            RingDescriptor::MatrixRing { field, n, involution } => {
                if n == 0 {
                    return bad("dimension must be at least 1");
                }
                if involution == Involution::ConjugateTranspose && field != FieldTag::GaussianRationals {
                    return bad("conjugate-transpose requires gaussian rationals");
                }
                if let FieldTag::Prime(p) = field {
                    if !is_prime(p) || p > u32::MAX as u64 {
                        return bad("characteristic must be a prime below 2^32");
                    }
                }
                Ok(())
            }
            RingDescriptor::Zn { modulus } if modulus < 2 => bad("modulus must be at least 2"),
            RingDescriptor::Zn { .. } => Ok(()),
            RingDescriptor::MatZp { p, k } => {
                if !matches!(p, 2 | 3) || !matches!(k, 1 | 2) {
                    return bad("supported MatZp instances are p in {2,3}, k in {1,2}");
                }
                Ok(())
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, RingDescriptor::MatrixRing { .. })
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::MatrixRing { field, n, involution } => {
                let field = match field {
                    FieldTag::Rationals => "Q".to_string(),
                    FieldTag::GaussianRationals => "QI".to_string(),
                    FieldTag::Prime(p) => format!("GF{p}"),
                };
                let inv = match involution {
                    Involution::Transpose => "t",
                    Involution::ConjugateTranspose => "ct",
                };
                write!(f, "Mat:{field}:{n}:{inv}")
            }
            RingDescriptor::Zn { modulus } => write!(f, "Zn:{modulus}"),
            RingDescriptor::MatZp { p, k } => write!(f, "MatZp:{k}x{k}:p{p}"),
        }
    }
}

/// Parses `Zn:6`, `MatZp:2x2:p2`, or `Mat:Q:3[:t]`, `Mat:QI:2:ct`, `Mat:GF5:2`.
impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDescriptor(format!("cannot parse ring descriptor `{s}`"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        let d = match parts.as_slice() {
            ["Zn", m] => RingDescriptor::Zn { modulus: m.parse().map_err(|_| bad())? },
            ["MatZp", dims, p] => {
                let (r, c) = dims.split_once('x').ok_or_else(bad)?;
                let k: usize = r.parse().map_err(|_| bad())?;
                if c.parse::<usize>().map_err(|_| bad())? != k {
                    return Err(bad());
                }
                let p = p.strip_prefix('p').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                RingDescriptor::MatZp { p, k }
            }
            ["Mat", field, n, rest @ ..] => {
                let field = match *field {
                    "Q" => FieldTag::Rationals,
                    "QI" => FieldTag::GaussianRationals,
                    other => {
                        FieldTag::Prime(other.strip_prefix("GF").ok_or_else(bad)?.parse().map_err(|_| bad())?)
                    }
                };
                let involution = match rest {
                    [] | ["t"] => Involution::Transpose,
                    ["ct"] => Involution::ConjugateTranspose,
                    _ => return Err(bad()),
                };
                RingDescriptor::MatrixRing { field, n: n.parse().map_err(|_| bad())?, involution }
            }
            _ => return Err(bad()),
        };
        d.validate()?;
        Ok(d)
    }
}
