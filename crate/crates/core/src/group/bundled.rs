//! Built-in character tables: `C_n`, `S_3`, `D_4`, `Q_8` and `A_4`.
//!
//! Every character comes with a realisation over the ring of integers of a
//! cyclotomic field (over `Z` whenever the character is rational, except for
//! the two-dimensional character of `Q_8`, which is realised over `Z[i]`).

use super::table::{Character, CharacterTable, CycloMatrix, Representation};
use super::{FiniteGroup, GroupError};
use crate::cyclotomic::Cyclo;

/// Names accepted by [`bundled`].
pub const BUNDLED_NAMES: &[&str] = &["C2", "C3", "C4", "C5", "C6", "C7", "C9", "S3", "D4", "Q8", "A4"];

/// Largest cyclic group served by [`bundled`].
pub const MAX_CYCLIC: usize = 24;

pub fn bundled(name: &str) -> Result<CharacterTable, GroupError> {
    let upper = name.trim().to_ascii_uppercase();
    match upper.as_str() {
        "S3" => symmetric3(),
        "D4" => dihedral4(),
        "Q8" => quaternion(),
        "A4" => alternating4(),
        _ => match upper.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if (1..=MAX_CYCLIC).contains(&n) => cyclic(n),
            _ => Err(GroupError::UnknownBundled(name.to_string())),
        },
    }
}

fn scalar(x: Cyclo) -> CycloMatrix {
    vec![vec![x]]
}

fn int_matrix(level: u32, m: &[Vec<i64>]) -> CycloMatrix {
    m.iter()
        .map(|r| r.iter().map(|&x| Cyclo::from_int(level, x)).collect())
        .collect()
}

fn character(
    group: &FiniteGroup,
    name: String,
    value: impl Fn(usize) -> Cyclo,
    rep: Option<Representation>,
) -> Character {
    Character {
        name,
        values: group.classes().iter().map(|c| value(c[0])).collect(),
        schur_index: 1,
        representation: rep,
    }
}

/// Representation given by an image for every element.
fn rep_from_all(group: &FiniteGroup, level: u32, img: impl Fn(usize) -> CycloMatrix) -> Result<Representation, GroupError> {
    let gens: Vec<(usize, CycloMatrix)> = (0..group.order()).map(|h| (h, img(h))).collect();
    Representation::from_generators(group, level, &gens)
}

pub fn cyclic(n: usize) -> Result<CharacterTable, GroupError> {
    let group = FiniteGroup::from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())?;
    let level = n as u32;
    let mut chars = Vec::with_capacity(n);
    for j in 0..n {
        let val = |h: usize| Cyclo::zeta_pow(level, (j * h) as i64);
        let rep = rep_from_all(&group, level, |h| scalar(val(h)))?;
        chars.push(character(&group, format!("chi{j}"), val, Some(rep)));
    }
    CharacterTable::new(format!("C{n}"), group, chars)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn compose(a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

fn sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Action on the sum-zero lattice with basis `e_i - e_last`.
fn deleted_permutation_matrix(p: &[usize]) -> Vec<Vec<i64>> {
    let n = p.len();
    let last = n - 1;
    let mut m = vec![vec![0i64; last]; last];
    for i in 0..last {
        if p[i] != last {
            m[p[i]][i] += 1;
        }
        if p[last] != last {
            m[p[last]][i] -= 1;
        }
    }
    m
}

fn fixed_points(p: &[usize]) -> i64 {
    p.iter().enumerate().filter(|&(i, &x)| i == x).count() as i64
}

pub fn symmetric3() -> Result<CharacterTable, GroupError> {
    let elems = permutations(3);
    let group = FiniteGroup::from_elements(&elems, compose)?;
    let level = group.exponent();
    let triv = character(&group, "triv".into(), |_| Cyclo::one(level), Some(rep_from_all(&group, level, |_| int_matrix(level, &[vec![1]]))?));
    let sgn = character(
        &group,
        "sign".into(),
        |h| Cyclo::from_int(level, sign(&elems[h])),
        Some(rep_from_all(&group, level, |h| int_matrix(level, &[vec![sign(&elems[h])]]))?),
    );
    let std = character(
        &group,
        "std".into(),
        |h| Cyclo::from_int(level, fixed_points(&elems[h]) - 1),
        Some(rep_from_all(&group, level, |h| int_matrix(level, &deleted_permutation_matrix(&elems[h])))?),
    );
    CharacterTable::new("S3", group, vec![triv, sgn, std])
}

pub fn alternating4() -> Result<CharacterTable, GroupError> {
    let elems: Vec<Vec<usize>> = permutations(4).into_iter().filter(|p| sign(p) == 1).collect();
    let group = FiniteGroup::from_elements(&elems, compose)?;
    let level = group.exponent();
    let c_inv = vec![2usize, 0, 1, 3];
    let klein = |p: &Vec<usize>| fixed_points(p) == 4 || fixed_points(p) == 0;
    // g = v c^k with v in the Klein four-group and c = (0 1 2)
    let coset = |g: &Vec<usize>| -> i64 {
        let mut x = g.clone();
        for k in 0..3 {
            if klein(&x) {
                return k;
            }
            x = compose(&x, &c_inv);
        }
        unreachable!("A4 is the union of three Klein cosets")
    };
    let mut chars = Vec::new();
    for j in 0..3i64 {
        let val = |h: usize| Cyclo::zeta_pow(3, j * coset(&elems[h])).to_level(level).expect("3 | 6");
        let rep = rep_from_all(&group, level, |h| scalar(val(h)))?;
        chars.push(character(&group, format!("psi{j}"), val, Some(rep)));
    }
    chars.push(character(
        &group,
        "std".into(),
        |h| Cyclo::from_int(level, fixed_points(&elems[h]) - 1),
        Some(rep_from_all(&group, level, |h| int_matrix(level, &deleted_permutation_matrix(&elems[h])))?),
    ));
    CharacterTable::new("A4", group, chars)
}

type IntMat2 = [[i64; 2]; 2];

fn mul2(a: &IntMat2, b: &IntMat2) -> IntMat2 {
    let mut m = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    m
}

pub fn dihedral4() -> Result<CharacterTable, GroupError> {
    let r: IntMat2 = [[0, -1], [1, 0]];
    let s: IntMat2 = [[1, 0], [0, -1]];
    // element index a + 4b stands for R^a S^b
    let mut elems = Vec::new();
    let mut exps = Vec::new();
    for b in 0..2u32 {
        for a in 0..4u32 {
            let mut m: IntMat2 = [[1, 0], [0, 1]];
            for _ in 0..a {
                m = mul2(&m, &r);
            }
            if b == 1 {
                m = mul2(&m, &s);
            }
            elems.push(m);
            exps.push((a as i64, b as i64));
        }
    }
    let group = FiniteGroup::from_elements(&elems, mul2)?;
    let level = group.exponent();
    let mut chars = Vec::new();
    for (name, sr, ss) in [("triv", 1i64, 1i64), ("lin_r", 1, -1), ("lin_s", -1, 1), ("lin_rs", -1, -1)] {
        let val = |h: usize| Cyclo::from_int(level, sr.pow(exps[h].0 as u32) * ss.pow(exps[h].1 as u32));
        let rep = rep_from_all(&group, level, |h| scalar(val(h)))?;
        chars.push(character(&group, name.into(), val, Some(rep)));
    }
    chars.push(character(
        &group,
        "std".into(),
        |h| Cyclo::from_int(level, elems[h][0][0] + elems[h][1][1]),
        Some(rep_from_all(&group, level, |h| {
            int_matrix(level, &elems[h].iter().map(|r| r.to_vec()).collect::<Vec<_>>())
        })?),
    ));
    CharacterTable::new("D4", group, chars)
}

pub fn quaternion() -> Result<CharacterTable, GroupError> {
    let level = 4;
    let z = |k: i64| Cyclo::zeta_pow(level, k);
    let zero = Cyclo::zero(level);
    let mul = |a: &CycloMatrix, b: &CycloMatrix| -> CycloMatrix {
        (0..2)
            .map(|i| {
                (0..2)
                    .map(|j| {
                        a[i][0].mul(&b[0][j]).expect("level 4")
                            .add(&a[i][1].mul(&b[1][j]).expect("level 4"))
                            .expect("level 4")
                    })
                    .collect()
            })
            .collect()
    };
    let qi: CycloMatrix = vec![vec![z(1), zero.clone()], vec![zero.clone(), z(3)]];
    let qj: CycloMatrix = vec![vec![zero.clone(), z(0)], vec![z(2), zero.clone()]];
    let one: CycloMatrix = vec![vec![z(0), zero.clone()], vec![zero.clone(), z(0)]];
    let mut elems = Vec::new();
    let mut exps = Vec::new();
    for b in 0..2u32 {
        for a in 0..4u32 {
            let mut m = one.clone();
            for _ in 0..a {
                m = mul(&m, &qi);
            }
            if b == 1 {
                m = mul(&m, &qj);
            }
            elems.push(m);
            exps.push((a, b));
        }
    }
    let group = FiniteGroup::from_elements(&elems, mul)?;
    let mut chars = Vec::new();
    for (name, si, sj) in [("triv", 1i64, 1i64), ("lin_i", 1, -1), ("lin_j", -1, 1), ("lin_k", -1, -1)] {
        let val = |h: usize| Cyclo::from_int(level, si.pow(exps[h].0) * sj.pow(exps[h].1));
        let rep = rep_from_all(&group, level, |h| scalar(val(h)))?;
        chars.push(character(&group, name.into(), val, Some(rep)));
    }
    chars.push(character(
        &group,
        "std".into(),
        |h| elems[h][0][0].add(&elems[h][1][1]).expect("level 4"),
        Some(rep_from_all(&group, level, |h| elems[h].clone())?),
    ));
    CharacterTable::new("Q8", group, chars)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_table_validates() {
        for name in BUNDLED_NAMES {
            let t = bundled(name).unwrap();
            let degrees: u64 = (0..t.len()).map(|i| (t.degree(i).unwrap() as u64).pow(2)).sum();
            assert_eq!(degrees, t.group().order() as u64, "{name}");
        }
        assert!(bundled("C25").is_err());
        assert!(bundled("Z7").is_err());
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = ["S3", "D4", "Q8", "A4"]
            .iter()
            .map(|n| bundled(n).unwrap().group().classes().len())
            .collect();
        assert_eq!(counts, vec![3, 5, 5, 4]);
    }
}
