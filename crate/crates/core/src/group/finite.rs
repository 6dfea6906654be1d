//! Finite groups given by a multiplication table.

use super::GroupError;

/// A finite group on the elements `0..order`, with `0` the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    element_orders: Vec<u32>,
    exponent: u32,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FiniteGroup {
    /// Validates the table (identity `0`, Latin square, associativity) and
    /// computes conjugacy classes ordered by their least element.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = mul.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        if mul.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(GroupError::NotAGroup("table is not square over 0..n".into()));
        }
        for (a, row) in mul.iter().enumerate() {
            if row[0] != a || mul[0][a] != a {
                return Err(GroupError::NotAGroup("element 0 is not the identity".into()));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::NotAGroup(format!("row {a} repeats an element")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let inv: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| mul[a][b] == 0).expect("Latin square"))
            .collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..n).map(|g| mul[mul[g][a]][inv[g]]).collect();
            cls.sort_unstable();
            cls.dedup();
            for &x in &cls {
                class_of[x] = classes.len();
            }
            classes.push(cls);
        }
        let element_orders: Vec<u32> = (0..n)
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != 0 {
                    x = mul[x][a];
                    k += 1;
                }
                k
            })
            .collect();
        let exponent = element_orders
            .iter()
            .fold(1, |acc, &o| acc / gcd(acc, o) * o);
        Ok(FiniteGroup {
            mul,
            inv,
            classes,
            class_of,
            element_orders,
            exponent,
        })
    }

    /// Reorders the conjugacy classes to match `classes`, which must be the
    /// same partition.
    pub fn with_class_order(mut self, classes: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let mut sorted: Vec<Vec<usize>> = classes
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect();
        let mut ours = self.classes.clone();
        let canonical = sorted.clone();
        sorted.sort();
        ours.sort();
        if sorted != ours {
            return Err(GroupError::InvalidTable(
                "listed classes are not the conjugacy classes".into(),
            ));
        }
        for (i, c) in canonical.iter().enumerate() {
            for &x in c {
                self.class_of[x] = i;
            }
        }
        self.classes = canonical;
        Ok(self)
    }

    /// Builds the table of a group given by a closed list of elements and a
    /// product on them; `elements[0]` must be the identity.
    pub fn from_elements<T: PartialEq>(
        elements: &[T],
        op: impl Fn(&T, &T) -> T,
    ) -> Result<Self, GroupError> {
        let n = elements.len();
        let mut mul = vec![vec![0; n]; n];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                let z = op(x, y);
                mul[a][b] = elements
                    .iter()
                    .position(|e| *e == z)
                    .ok_or_else(|| GroupError::NotAGroup("element list is not closed".into()))?;
            }
        }
        FiniteGroup::from_table(mul)
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.element_orders[a]
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// `a^k` for `k ≥ 0`.
    pub fn pow(&self, a: usize, k: u32) -> usize {
        (0..k).fold(0, |acc, _| self.mul[acc][a])
    }
}

/// A bijective endomorphism of a [`FiniteGroup`], as the list of images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<usize>,
}

impl Automorphism {
    pub fn new(group: &FiniteGroup, images: Vec<usize>) -> Result<Self, GroupError> {
        let n = group.order();
        if images.len() != n {
            return Err(GroupError::NotAutomorphism(format!(
                "{} images for a group of order {n}",
                images.len()
            )));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(GroupError::NotAutomorphism("map is not a bijection".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if images[group.mul(a, b)] != group.mul(images[a], images[b]) {
                    return Err(GroupError::NotAutomorphism(format!(
                        "not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Automorphism { images })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        Automorphism {
            images: (0..group.order()).collect(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// Least `k ≥ 1` with `α^k = id`.
    pub fn order(&self) -> u32 {
        let mut cur = self.clone();
        let mut k = 1;
        while !cur.is_identity() {
            cur = cur.compose(self);
            k += 1;
        }
        k
    }
}
