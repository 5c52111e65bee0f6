//! Enumerated finite `*`-rings: `Z_n` with the identity involution and
//! `M_k(Z_p)` with transpose. Elements are canonical integer encodings in
//! `[0, |R|)`; for `M_k(Z_p)` the entries are read row-major as base-`p`
//! digits, most significant first.
//!
//! Operation tables are cached for rings of order at most 256; larger `Z_n`
//! compute on the fly.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::matrix::DirectSum;
use crate::ring::{RingDescriptor, StarRing};

const TABLE_LIMIT: u32 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Zn(u32),
    MatZp { p: u32, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: u32) -> Self {
        Bits(vec![0; (n as usize).div_ceil(64)])
    }

    fn set(&mut self, i: u32) {
        self.0[(i / 64) as usize] |= 1 << (i % 64);
    }

    fn get(&self, i: u32) -> bool {
        self.0[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn ones(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| (w * 64 + b) as u32)
        })
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    star: Vec<u32>,
}

struct IdealCache {
    left_ideal: Vec<Bits>,
    right_ideal: Vec<Bits>,
    left_ann: Vec<Bits>,
    right_ann: Vec<Bits>,
}

/// Sorted, duplicate-free set of element encodings of one finite ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct ElementSet(Vec<u32>);

impl ElementSet {
    pub fn members(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }
}

impl FromIterator<u32> for ElementSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut v: Vec<u32> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }
}

pub struct FiniteRing {
    descriptor: RingDescriptor,
    shape: Shape,
    order: u32,
    tables: Option<Tables>,
    ideals: OnceLock<IdealCache>,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({})", self.descriptor)
    }
}

impl FiniteRing {
    pub fn new(descriptor: &RingDescriptor) -> Result<Self> {
        descriptor.validate()?;
        let (shape, order) = match *descriptor {
            RingDescriptor::Zn { modulus } => (Shape::Zn(modulus), modulus),
            RingDescriptor::MatZp { p, k } => (Shape::MatZp { p, k }, p.pow((k * k) as u32)),
            RingDescriptor::MatrixRing { .. } => {
                return Err(Error::InvalidDescriptor(format!("{descriptor} is not a finite ring")))
            }
        };
        let mut ring = FiniteRing {
            descriptor: descriptor.clone(),
            shape,
            order,
            tables: None,
            ideals: OnceLock::new(),
        };
        if order <= TABLE_LIMIT {
            let n = order as usize;
            let mut t =
                Tables { add: vec![0; n * n], mul: vec![0; n * n], neg: vec![0; n], star: vec![0; n] };
            for x in 0..order {
                t.neg[x as usize] = ring.neg_raw(x);
                t.star[x as usize] = ring.star_raw(x);
                for y in 0..order {
                    t.add[x as usize * n + y as usize] = ring.add_raw(x, y);
                    t.mul[x as usize * n + y as usize] = ring.mul_raw(x, y);
                }
            }
            ring.tables = Some(t);
            debug_assert!(ring.check_axioms().is_ok());
        }
        Ok(ring)
    }

    pub fn zn(n: u32) -> Self {
        Self::new(&RingDescriptor::Zn { modulus: n }).expect("valid modulus")
    }

    pub fn mat_zp(k: usize, p: u32) -> Self {
        Self::new(&RingDescriptor::MatZp { p, k }).expect("valid MatZp")
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Every element exactly once, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = u32> {
        0..self.order
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.order
    }

    /// Entries of a matrix element (for `Z_n`, a 1x1 matrix).
    pub fn decode(&self, x: u32) -> Vec<Vec<u32>> {
        match self.shape {
            Shape::Zn(_) => vec![vec![x]],
            Shape::MatZp { p, k } => {
                let mut digits = vec![0; k * k];
                let mut rest = x;
                for d in digits.iter_mut().rev() {
                    *d = rest % p;
                    rest /= p;
                }
                digits.chunks(k).map(<[u32]>::to_vec).collect()
            }
        }
    }

    pub fn encode(&self, entries: &[Vec<u32>]) -> Result<u32> {
        let bad = |d: &str| Error::Payload { ring: self.descriptor.to_string(), detail: d.into() };
        match self.shape {
            Shape::Zn(n) => match entries {
                [row] if row.len() == 1 && row[0] < n => Ok(row[0]),
                _ => Err(bad("expected a single residue")),
            },
            Shape::MatZp { p, k } => {
                if entries.len() != k || entries.iter().any(|r| r.len() != k) {
                    return Err(bad("wrong matrix shape"));
                }
                entries.iter().flatten().try_fold(0u32, |acc, &d| {
                    if d >= p {
                        Err(bad("entry out of range"))
                    } else {
                        Ok(acc * p + d)
                    }
                })
            }
        }
    }

    fn add_raw(&self, x: u32, y: u32) -> u32 {
        match self.shape {
            Shape::Zn(n) => ((x as u64 + y as u64) % n as u64) as u32,
            Shape::MatZp { p, .. } => self.entrywise(x, y, |a, b| (a + b) % p),
        }
    }

    fn neg_raw(&self, x: u32) -> u32 {
        match self.shape {
            Shape::Zn(n) => (n - x) % n,
            Shape::MatZp { p, .. } => self.entrywise(x, 0, |a, _| (p - a) % p),
        }
    }

    fn mul_raw(&self, x: u32, y: u32) -> u32 {
        match self.shape {
            Shape::Zn(n) => ((x as u64 * y as u64) % n as u64) as u32,
            Shape::MatZp { p, k } => {
                let (a, b) = (self.decode(x), self.decode(y));
                let c: Vec<Vec<u32>> = (0..k)
                    .map(|i| (0..k).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum::<u32>() % p).collect())
                    .collect();
                self.encode(&c).expect("product stays in range")
            }
        }
    }

    fn star_raw(&self, x: u32) -> u32 {
        match self.shape {
            Shape::Zn(_) => x,
            Shape::MatZp { k, .. } => {
                let a = self.decode(x);
                let t: Vec<Vec<u32>> = (0..k).map(|i| (0..k).map(|j| a[j][i]).collect()).collect();
                self.encode(&t).expect("transpose stays in range")
            }
        }
    }

    fn entrywise(&self, x: u32, y: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let (a, b) = (self.decode(x), self.decode(y));
        let c: Vec<Vec<u32>> =
            a.iter().zip(&b).map(|(ra, rb)| ra.iter().zip(rb).map(|(&u, &v)| f(u, v)).collect()).collect();
        self.encode(&c).expect("entrywise op stays in range")
    }

    fn add_e(&self, x: u32, y: u32) -> u32 {
        match &self.tables {
            Some(t) => t.add[(x * self.order + y) as usize],
            None => self.add_raw(x, y),
        }
    }

    fn mul_e(&self, x: u32, y: u32) -> u32 {
        match &self.tables {
            Some(t) => t.mul[(x * self.order + y) as usize],
            None => self.mul_raw(x, y),
        }
    }

    fn star_e(&self, x: u32) -> u32 {
        match &self.tables {
            Some(t) => t.star[x as usize],
            None => self.star_raw(x),
        }
    }

    fn neg_e(&self, x: u32) -> u32 {
        match &self.tables {
            Some(t) => t.neg[x as usize],
            None => self.neg_raw(x),
        }
    }

    fn one_e(&self) -> u32 {
        match self.shape {
            Shape::Zn(n) => 1 % n,
            Shape::MatZp { k, .. } => {
                let id: Vec<Vec<u32>> = (0..k).map(|i| (0..k).map(|j| u32::from(i == j)).collect()).collect();
                self.encode(&id).expect("identity encodes")
            }
        }
    }

    /// Checks ring and involution axioms over the whole element set.
    pub fn check_axioms(&self) -> Result<()> {
        let one = self.one_e();
        let fail = |what: &str, xs: &[u32]| {
            Err(Error::Inconsistent(format!("{}: {what} fails at {xs:?}", self.descriptor)))
        };
        for x in self.iter() {
            if self.mul_e(one, x) != x || self.mul_e(x, one) != x {
                return fail("unit", &[x]);
            }
            if self.add_e(x, self.neg_e(x)) != 0 {
                return fail("additive inverse", &[x]);
            }
            if self.star_e(self.star_e(x)) != x {
                return fail("(x*)* = x", &[x]);
            }
            for y in self.iter() {
                if self.star_e(self.mul_e(x, y)) != self.mul_e(self.star_e(y), self.star_e(x)) {
                    return fail("(xy)* = y*x*", &[x, y]);
                }
                if self.star_e(self.add_e(x, y)) != self.add_e(self.star_e(x), self.star_e(y)) {
                    return fail("(x+y)* = x*+y*", &[x, y]);
                }
                if self.add_e(x, y) != self.add_e(y, x) {
                    return fail("commutative addition", &[x, y]);
                }
                for z in self.iter() {
                    if self.mul_e(self.mul_e(x, y), z) != self.mul_e(x, self.mul_e(y, z)) {
                        return fail("associativity", &[x, y, z]);
                    }
                    if self.mul_e(x, self.add_e(y, z)) != self.add_e(self.mul_e(x, y), self.mul_e(x, z)) {
                        return fail("left distributivity", &[x, y, z]);
                    }
                }
            }
        }
        Ok(())
    }

    fn ideal_cache(&self) -> Option<&IdealCache> {
        self.tables.as_ref()?;
        Some(self.ideals.get_or_init(|| {
            let bits = |f: &dyn Fn(u32) -> Bits| self.iter().map(f).collect::<Vec<_>>();
            IdealCache {
                left_ideal: bits(&|c| self.bits_of(self.iter().map(|r| self.mul_e(r, c)))),
                right_ideal: bits(&|b| self.bits_of(self.iter().map(|r| self.mul_e(b, r)))),
                left_ann: bits(&|x| self.bits_of(self.iter().filter(|&r| self.mul_e(r, x) == 0))),
                right_ann: bits(&|b| self.bits_of(self.iter().filter(|&r| self.mul_e(b, r) == 0))),
            }
        }))
    }

    fn bits_of(&self, it: impl Iterator<Item = u32>) -> Bits {
        let mut b = Bits::new(self.order);
        it.for_each(|x| b.set(x));
        b
    }

    /// `Rc = {r·c}`
    pub fn left_ideal(&self, c: u32) -> ElementSet {
        self.iter().map(|r| self.mul_e(r, c)).collect()
    }

    /// `bR = {b·r}`
    pub fn right_ideal(&self, b: u32) -> ElementSet {
        self.iter().map(|r| self.mul_e(b, r)).collect()
    }

    /// `r(b) = {x : b·x = 0}`
    pub fn right_annihilator(&self, b: u32) -> ElementSet {
        self.iter().filter(|&x| self.mul_e(b, x) == 0).collect()
    }

    /// `l(x) = {r : r·x = 0}`
    pub fn left_annihilator(&self, x: u32) -> ElementSet {
        self.iter().filter(|&r| self.mul_e(r, x) == 0).collect()
    }

    /// `R = A + B` and whether the sum is direct (`A ∩ B = {0}`).
    pub fn set_direct_sum(&self, a: &ElementSet, b: &ElementSet) -> DirectSum {
        let mut covered = Bits::new(self.order);
        for &u in a.members() {
            for &v in b.members() {
                covered.set(self.add_e(u, v));
            }
        }
        let is_sum = self.iter().all(|x| covered.get(x));
        let trivial = a.members().iter().all(|&u| u == 0 || !b.contains(u));
        DirectSum { is_sum, is_direct: is_sum && trivial }
    }

    fn bits_direct_sum(&self, a: &Bits, b: &Bits) -> DirectSum {
        let mut covered = Bits::new(self.order);
        for u in a.ones() {
            for v in b.ones() {
                covered.set(self.add_e(u, v));
            }
        }
        let is_sum = self.iter().all(|x| covered.get(x));
        let trivial = a.ones().all(|u| u == 0 || !b.get(u));
        DirectSum { is_sum, is_direct: is_sum && trivial }
    }

    /// All elements satisfying `pred`, in canonical order.
    pub fn solve_all(&self, pred: impl Fn(u32) -> bool) -> ElementSet {
        self.iter().filter(|&x| pred(x)).collect()
    }
}

impl StarRing for FiniteRing {
    type Elem = u32;

    fn descriptor(&self) -> RingDescriptor {
        self.descriptor.clone()
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        self.one_e()
    }

    fn add(&self, x: &u32, y: &u32) -> u32 {
        self.add_e(*x, *y)
    }

    fn neg(&self, x: &u32) -> u32 {
        self.neg_e(*x)
    }

    fn mul(&self, x: &u32, y: &u32) -> u32 {
        self.mul_e(*x, *y)
    }

    fn star(&self, x: &u32) -> u32 {
        self.star_e(*x)
    }

    fn is_zero(&self, x: &u32) -> bool {
        *x == 0
    }

    fn solve_left(&self, m: &u32, target: &u32) -> Option<u32> {
        self.iter().find(|&x| self.mul_e(x, *m) == *target)
    }

    fn solve_right(&self, m: &u32, target: &u32) -> Option<u32> {
        self.iter().find(|&x| self.mul_e(*m, x) == *target)
    }

    fn inner_inverse(&self, a: &u32) -> Option<u32> {
        self.iter().find(|&g| self.mul_e(self.mul_e(*a, g), *a) == *a)
    }

    fn left_ideal_contains(&self, x: &u32, c: &u32) -> bool {
        match self.ideal_cache() {
            Some(cache) => cache.left_ideal[*c as usize].get(*x),
            None => self.solve_left(c, x).is_some(),
        }
    }

    fn right_ideal_contains(&self, x: &u32, b: &u32) -> bool {
        match self.ideal_cache() {
            Some(cache) => cache.right_ideal[*b as usize].get(*x),
            None => self.solve_right(b, x).is_some(),
        }
    }

    fn left_annihilator_contained(&self, x: &u32, y: &u32) -> bool {
        match self.ideal_cache() {
            Some(cache) => cache.left_ann[*x as usize].is_subset(&cache.left_ann[*y as usize]),
            None => self.iter().all(|r| self.mul_e(r, *x) != 0 || self.mul_e(r, *y) == 0),
        }
    }

    fn direct_sum_right_ideals(&self, u: &u32, b: &u32) -> DirectSum {
        match self.ideal_cache() {
            Some(cache) => {
                self.bits_direct_sum(&cache.right_ideal[*u as usize], &cache.right_ann[*b as usize])
            }
            None => self.set_direct_sum(&self.right_ideal(*u), &self.right_annihilator(*b)),
        }
    }

    fn direct_sum_left_ideals(&self, u: &u32, c: &u32) -> DirectSum {
        match self.ideal_cache() {
            Some(cache) => self.bits_direct_sum(&cache.left_ideal[*u as usize], &cache.left_ann[*c as usize]),
            None => self.set_direct_sum(&self.left_ideal(*u), &self.left_annihilator(*c)),
        }
    }

    fn elements(&self) -> Option<Vec<u32>> {
        Some(self.iter().collect())
    }

    fn show(&self, x: &u32) -> String {
        match self.shape {
            Shape::Zn(_) => x.to_string(),
            Shape::MatZp { .. } => {
                let rows: Vec<String> = self
                    .decode(*x)
                    .iter()
                    .map(|r| format!("[{}]", r.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")))
                    .collect();
                format!("[{}]", rows.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{is_idempotent, is_projection};

    fn set(xs: &[u32]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(FiniteRing::zn(2).iter().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(FiniteRing::zn(6).iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4, 5]);
        let m = FiniteRing::mat_zp(2, 2);
        assert_eq!(m.order(), 16);
        assert_eq!(m.decode(0), vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(m.decode(1), vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(m.decode(8), vec![vec![1, 0], vec![0, 0]]);
        assert_eq!(m.one(), 9);
        for x in m.iter() {
            assert_eq!(m.encode(&m.decode(x)).unwrap(), x);
        }
        assert_eq!(FiniteRing::mat_zp(2, 3).order(), 81);
    }

    #[test]
    fn axioms_hold_on_catalogue() {
        for d in ["Zn:2", "Zn:6", "Zn:12", "MatZp:1x1:p3", "MatZp:2x2:p2", "MatZp:2x2:p3"] {
            FiniteRing::new(&d.parse().unwrap()).unwrap().check_axioms().unwrap();
        }
    }

    #[test]
    fn star_and_predicates() {
        let z6 = FiniteRing::zn(6);
        assert_eq!(z6.star(&4), 4);
        assert!(is_projection(&z6, &3));
        assert!(!is_idempotent(&z6, &2));
        assert!(is_idempotent(&z6, &1));
        let m = FiniteRing::mat_zp(2, 2);
        // [[1,1],[0,0]] -> [[1,0],[1,0]]
        assert_eq!(m.star(&12), 10);
    }

    #[test]
    fn ideal_examples() {
        let z6 = FiniteRing::zn(6);
        assert_eq!(z6.left_ideal(1), set(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(z6.left_ideal(2), set(&[0, 2, 4]));
        assert_eq!(z6.left_ideal(0), set(&[0]));
        assert_eq!(z6.right_annihilator(0).len(), 6);
        assert_eq!(z6.right_annihilator(1), set(&[0]));
        assert_eq!(z6.right_annihilator(2), set(&[0, 3]));
        assert_eq!(z6.left_annihilator(0).len(), 6);
        assert_eq!(z6.left_annihilator(1), set(&[0]));
        assert_eq!(z6.left_annihilator(3), set(&[0, 2, 4]));
    }

    #[test]
    fn direct_sum_examples() {
        let z6 = FiniteRing::zn(6);
        let yes = DirectSum { is_sum: true, is_direct: true };
        assert_eq!(z6.set_direct_sum(&set(&[0, 2, 4]), &set(&[0, 3])), yes);
        assert_eq!(
            z6.set_direct_sum(&set(&[0, 2, 4]), &set(&[0, 2, 4])),
            DirectSum { is_sum: false, is_direct: false }
        );
        let m = FiniteRing::mat_zp(2, 2);
        assert_eq!(m.set_direct_sum(&m.iter().collect(), &set(&[0])), yes);
    }

    #[test]
    fn solve_all_examples() {
        let z6 = FiniteRing::zn(6);
        let rc = z6.left_ideal(2);
        assert_eq!(z6.solve_all(|x| rc.contains(x) && z6.prod(&[&2, &x, &1, &2]) == 2), set(&[2]));
        assert!(z6.solve_all(|_| false).is_empty());
        assert_eq!(FiniteRing::zn(2).solve_all(|_| true), set(&[0, 1]));
    }

    #[test]
    fn ideal_structure_properties() {
        for ring in [FiniteRing::zn(12), FiniteRing::mat_zp(2, 2)] {
            for c in ring.iter() {
                let rc = ring.left_ideal(c);
                assert!(rc.contains(c));
                for r in ring.iter() {
                    for &x in rc.members() {
                        assert!(rc.contains(ring.mul(&r, &x)));
                    }
                }
                let ann = ring.right_annihilator(c);
                for &x in ann.members() {
                    for &y in ann.members() {
                        assert!(ann.contains(ring.add(&x, &y)));
                    }
                    for r in ring.iter() {
                        assert!(ann.contains(ring.mul(&x, &r)));
                    }
                }
            }
        }
        let z12 = FiniteRing::zn(12);
        for c in z12.iter() {
            assert_eq!(z12.left_ideal(c), z12.right_ideal(c));
        }
    }

    #[test]
    fn cached_and_uncached_agree() {
        let big = FiniteRing::zn(300);
        assert!(big.tables.is_none());
        assert!(big.left_ideal_contains(&20, &10));
        assert!(!big.left_ideal_contains(&7, &10));
        assert!(big.left_annihilator_contained(&0, &0));
        let z = FiniteRing::zn(30);
        let uncached = |x: u32, y: u32| z.iter().all(|r| z.mul(&r, &x) != 0 || z.mul(&r, &y) == 0);
        for x in z.iter() {
            for y in z.iter() {
                assert_eq!(z.left_annihilator_contained(&x, &y), uncached(x, y));
            }
        }
    }
}
