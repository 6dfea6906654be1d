//! Character tables with exact cyclotomic values and optional integral
//! realisations of the characters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{FiniteGroup, GroupError};
use crate::cyclotomic::Cyclo;

pub type CycloMatrix = Vec<Vec<Cyclo>>;

fn mat_mul(a: &CycloMatrix, b: &CycloMatrix) -> Result<CycloMatrix, GroupError> {
    let n = a.len();
    let level = a[0][0].level();
    let mut out = vec![vec![Cyclo::zero(level); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let t = a[i][k].mul(&b[k][j])?;
                out[i][j] = out[i][j].add(&t)?;
            }
        }
    }
    Ok(out)
}

fn identity(n: usize, level: u32) -> CycloMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Cyclo::one(level) } else { Cyclo::zero(level) })
                .collect()
        })
        .collect()
}

/// A matrix representation, stored as the image of every group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    images: Vec<CycloMatrix>,
}

impl Representation {
    /// Extends the images of generators to the whole group and checks the
    /// homomorphism property.
    pub fn from_generators(
        group: &FiniteGroup,
        level: u32,
        gens: &[(usize, CycloMatrix)],
    ) -> Result<Self, GroupError> {
        let degree = gens.first().map_or(1, |(_, m)| m.len());
        let lift = |m: &CycloMatrix| -> Result<CycloMatrix, GroupError> {
            if m.len() != degree || m.iter().any(|r| r.len() != degree) {
                return Err(GroupError::InvalidTable("generator images differ in size".into()));
            }
            m.iter()
                .map(|r| r.iter().map(|x| x.to_level(level).map_err(GroupError::from)).collect())
                .collect()
        };
        let gens: Vec<(usize, CycloMatrix)> = gens
            .iter()
            .map(|(g, m)| Ok((*g, lift(m)?)))
            .collect::<Result<_, GroupError>>()?;
        let n = group.order();
        let mut images: Vec<Option<CycloMatrix>> = vec![None; n];
        images[0] = Some(identity(degree, level));
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for (g, m) in &gens {
                let y = group.mul(x, *g);
                if images[y].is_none() {
                    let img = mat_mul(images[x].as_ref().expect("visited"), m)?;
                    images[y] = Some(img);
                    frontier.push(y);
                }
            }
        }
        let images: Vec<CycloMatrix> = images
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| GroupError::InvalidTable("generators do not generate the group".into()))?;
        for a in 0..n {
            for b in 0..n {
                if mat_mul(&images[a], &images[b])? != images[group.mul(a, b)] {
                    return Err(GroupError::InvalidTable(format!(
                        "representation is not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Representation { images })
    }

    pub fn degree(&self) -> usize {
        self.images[0].len()
    }

    pub fn image(&self, h: usize) -> &CycloMatrix {
        &self.images[h]
    }

    pub fn trace(&self, h: usize) -> Result<Cyclo, GroupError> {
        let m = &self.images[h];
        let mut acc = Cyclo::zero(m[0][0].level());
        for (i, row) in m.iter().enumerate() {
            acc = acc.add(&row[i])?;
        }
        Ok(acc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    /// One value per conjugacy class, in the group's class order.
    pub values: Vec<Cyclo>,
    pub schur_index: u32,
    pub representation: Option<Representation>,
}

/// Irreducible characters of a finite group, all valued in `Q(ζ_N)` with
/// `N` the group exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    name: String,
    group: FiniteGroup,
    level: u32,
    characters: Vec<Character>,
}

impl CharacterTable {
    pub fn new(
        name: impl Into<String>,
        group: FiniteGroup,
        mut characters: Vec<Character>,
    ) -> Result<Self, GroupError> {
        let level = group.exponent();
        let k = group.classes().len();
        for ch in &mut characters {
            if ch.values.len() != k {
                return Err(GroupError::InvalidTable(format!(
                    "character {} has {} values for {k} classes",
                    ch.name,
                    ch.values.len()
                )));
            }
            for v in &mut ch.values {
                if v.level() != level {
                    *v = v
                        .to_level(level)
                        .map_err(|_| {
                            GroupError::InvalidTable(format!(
                                "value level {} does not divide the exponent {level}",
                                v.level()
                            ))
                        })?;
                }
            }
            if ch.schur_index == 0 {
                return Err(GroupError::InvalidTable("schur index must be positive".into()));
            }
        }
        let table = CharacterTable {
            name: name.into(),
            group,
            level,
            characters,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<(), GroupError> {
        let n = self.group.order();
        let mut square_sum = 0u64;
        for (i, ch) in self.characters.iter().enumerate() {
            let deg = self.degree(i).ok_or_else(|| {
                GroupError::InvalidTable(format!("{}(1) is not a positive integer", ch.name))
            })?;
            square_sum += (deg as u64).pow(2);
            if let Some(rep) = &ch.representation {
                if rep.degree() != deg as usize {
                    return Err(GroupError::InvalidTable(format!(
                        "representation of {} has the wrong degree",
                        ch.name
                    )));
                }
                for h in 0..n {
                    if rep.trace(h)? != *self.value(i, h) {
                        return Err(GroupError::InvalidTable(format!(
                            "representation of {} does not afford it at element {h}",
                            ch.name
                        )));
                    }
                }
            }
        }
        if square_sum != n as u64 {
            return Err(GroupError::InvalidTable(format!(
                "squared degrees sum to {square_sum}, not {n}"
            )));
        }
        for i in 0..self.characters.len() {
            for j in 0..self.characters.len() {
                let ip = self.inner_product(&self.element_values(i), &self.element_values(j))?;
                let want = if i == j { BigRational::one() } else { BigRational::zero() };
                if ip != Cyclo::from_rational(self.level, want) {
                    return Err(GroupError::Orthogonality(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    /// `η_i(h)`.
    pub fn value(&self, i: usize, h: usize) -> &Cyclo {
        &self.characters[i].values[self.group.class_of(h)]
    }

    /// `η_i(1)` when it is a positive integer.
    pub fn degree(&self, i: usize) -> Option<u32> {
        let v = self.characters[i].values[self.group.class_of(0)].as_rational()?;
        if v.is_integer() && v > BigRational::zero() {
            v.to_integer().to_u32()
        } else {
            None
        }
    }

    pub fn schur_index(&self, i: usize) -> u32 {
        self.characters[i].schur_index
    }

    /// Values of `η_i` on every element.
    pub fn element_values(&self, i: usize) -> Vec<Cyclo> {
        (0..self.group.order()).map(|h| self.value(i, h).clone()).collect()
    }

    /// Index of the character whose element values are `vals`.
    pub fn find(&self, vals: &[Cyclo]) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.group.order()).all(|h| *self.value(i, h) == vals[h]))
    }

    /// `(1/#H) Σ_h a(h) conj(b(h))`.
    pub fn inner_product(&self, a: &[Cyclo], b: &[Cyclo]) -> Result<Cyclo, GroupError> {
        let mut acc = Cyclo::zero(self.level);
        for (x, y) in a.iter().zip(b) {
            acc = acc.add(&x.mul(&y.conj())?)?;
        }
        let inv = BigRational::new(BigInt::one(), BigInt::from(self.group.order() as u64));
        Ok(acc.scale(&inv))
    }
}
