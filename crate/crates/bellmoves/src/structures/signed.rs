//! Permutations, signed permutations, and the groups of types A, B and D.
//!
//! A signed permutation maps each of `1..n` to a value in `{-n..-1, 1..n}`
//! so that the absolute values form a permutation; equivalently it is an
//! element of the group of permutations of `{-n..n}` preserving the pairing
//! `{-i, i}`. Products act on the right throughout: `a.then(b)` applies `a`
//! first, matching the convention that a shuffle sequence composes left to
//! right.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{factorial, pow2, Int};
use crate::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u32).collect() }
    }

    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x == 0 || x > n || seen[x as usize - 1] {
                return Err(Error::invalid("permutation", format!("bad image list {images:?}")));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The cycle `(1, 2, ..., m)` on `n` points: the random-to-top shuffle
    /// moving the card in position `m` to the top.
    pub fn random_to_top(n: usize, m: usize) -> Self {
        assert!(1 <= m && m <= n);
        let mut images: Vec<u32> = (1..=n as u32).collect();
        for i in 1..m {
            images[i - 1] = i as u32 + 1;
        }
        images[m - 1] = 1;
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn one_line(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &img)| img as usize == i + 1).count()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img as usize == i + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of the type B Coxeter group `B_n` (signed permutations).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i32).collect() }
    }

    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len() as i32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let a = x.abs();
            if a == 0 || a > n || seen[a as usize - 1] {
                return Err(Error::invalid("signed permutation", format!("bad image list {images:?}")));
            }
            seen[a as usize - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        SignedPermutation { images: p.one_line().iter().map(|&x| x as i32).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Image of `i`, where negative arguments satisfy `(-i)g = -(ig)`.
    pub fn apply(&self, i: i32) -> i32 {
        if i > 0 {
            self.images[i as usize - 1]
        } else {
            -self.images[(-i) as usize - 1]
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation { images: self.images.iter().map(|&i| other.apply(i)).collect() }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0i32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            let v = i as i32 + 1;
            if img > 0 {
                images[img as usize - 1] = v;
            } else {
                images[(-img) as usize - 1] = -v;
            }
        }
        SignedPermutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i as i32 + 1)
    }

    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// Membership in `D_n`: evenly many sign changes.
    pub fn is_type_d(&self) -> bool {
        self.negative_count() % 2 == 0
    }

    pub fn is_all_positive(&self) -> bool {
        self.images.iter().all(|&x| x > 0)
    }

    /// Forgets signs; only meaningful for all-positive elements, where it is
    /// the underlying type A permutation.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if self.is_all_positive() {
            Some(Permutation { images: self.images.iter().map(|&x| x as u32).collect() })
        } else {
            None
        }
    }

    /// Underlying permutation of `{1..n}` given by absolute values.
    pub fn absolute(&self) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| x.unsigned_abs()).collect() }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses the image-list form `[2,-1,3]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::invalid("signed permutation", format!("{s:?} is not bracketed")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return SignedPermutation::new(Vec::new());
        }
        let images = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i32>()
                    .map_err(|e| Error::invalid("signed permutation", format!("image {p:?}: {e}")))
            })
            .collect::<Result<Vec<i32>>>()?;
        SignedPermutation::new(images)
    }
}

/// The three families of groups the shuffles live in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum GroupFamily {
    /// `Sym_n`, embedded as the all-positive signed permutations.
    A,
    /// The hyperoctahedral group `B_n`.
    B,
    /// The index-2 subgroup `D_n` of evenly many sign changes.
    D,
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupFamily::A => "A",
            GroupFamily::B => "B",
            GroupFamily::D => "D",
        })
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(GroupFamily::A),
            "B" | "b" => Ok(GroupFamily::B),
            "D" | "d" => Ok(GroupFamily::D),
            other => Err(Error::invalid("group family", format!("{other:?} (expected A, B or D)"))),
        }
    }
}

pub fn group_order(family: GroupFamily, n: usize) -> Int {
    let base = factorial(n as u64);
    match family {
        GroupFamily::A => base,
        GroupFamily::B => base * pow2(n as u64),
        GroupFamily::D => base * pow2(n as u64 - 1),
    }
}

/// Every element of the chosen group, each exactly once, in a fixed order
/// (permutations lexicographically, sign patterns in binary order within
/// each permutation). Requires `n >= 1`; callers handle the empty-deck
/// conventions themselves.
pub fn enumerate_group(family: GroupFamily, n: usize) -> Result<Vec<SignedPermutation>> {
    if n == 0 {
        return Err(Error::invalid("group", "n = 0 has no generator set; handle counts directly"));
    }
    let mut perms: Vec<Vec<u32>> = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                current.push(v as u32);
                rec(n, current, used, out);
                current.pop();
                used[v - 1] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut perms);

    let mut out = Vec::new();
    match family {
        GroupFamily::A => {
            for p in perms {
                out.push(SignedPermutation { images: p.iter().map(|&x| x as i32).collect() });
            }
        }
        GroupFamily::B | GroupFamily::D => {
            for p in perms {
                for mask in 0u32..(1u32 << n) {
                    let images: Vec<i32> = p
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| if mask >> i & 1 == 1 { -(x as i32) } else { x as i32 })
                        .collect();
                    let g = SignedPermutation { images };
                    if family == GroupFamily::B || g.is_type_d() {
                        out.push(g);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn random_to_top_is_the_m_cycle() {
        let s3 = Permutation::random_to_top(4, 3);
        assert_eq!(s3.one_line(), &[2, 3, 1, 4]);
        assert!(Permutation::random_to_top(4, 1).is_identity());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::random_to_top(3, 2);
        let b = Permutation::random_to_top(3, 3);
        // a sends 1 -> 2, then b sends 2 -> 3.
        assert_eq!(a.then(&b).apply(1), 3);
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn signed_apply_and_inverse() {
        let g: SignedPermutation = "[2,-1,3]".parse().unwrap();
        assert_eq!(g.apply(1), 2);
        assert_eq!(g.apply(2), -1);
        assert_eq!(g.apply(-2), 1);
        assert!(g.then(&g.inverse()).is_identity());
        assert_eq!(g.to_string(), "[2,-1,3]");
        assert!("[2,2]".parse::<SignedPermutation>().is_err());
        assert!("[0,1]".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn group_sizes() {
        assert_eq!(enumerate_group(GroupFamily::A, 3).unwrap().len(), 6);
        assert_eq!(enumerate_group(GroupFamily::B, 2).unwrap().len(), 8);
        let d2 = enumerate_group(GroupFamily::D, 2).unwrap();
        assert_eq!(d2.len(), 4);
        // Klein four-group: every element squares to the identity.
        for g in &d2 {
            assert!(g.then(g).is_identity(), "{g}");
        }
        for n in 1..=4usize {
            for fam in [GroupFamily::A, GroupFamily::B, GroupFamily::D] {
                let els = enumerate_group(fam, n).unwrap();
                assert_eq!(Int::from(els.len()), group_order(fam, n));
            }
        }
        assert!(enumerate_group(GroupFamily::A, 0).is_err());
    }

    #[test]
    fn groups_have_no_duplicates_and_close_under_inverse() {
        for n in 1..=4usize {
            for fam in [GroupFamily::A, GroupFamily::B, GroupFamily::D] {
                let els = enumerate_group(fam, n).unwrap();
                let set: HashSet<_> = els.iter().cloned().collect();
                assert_eq!(set.len(), els.len());
                for g in &els {
                    assert!(set.contains(&g.inverse()), "{fam:?} n={n} element {g}");
                }
            }
        }
    }

    #[test]
    fn type_d_membership() {
        let g: SignedPermutation = "[-2,-1]".parse().unwrap();
        assert!(g.is_type_d());
        let h: SignedPermutation = "[-1,2]".parse().unwrap();
        assert!(!h.is_type_d());
    }
}
