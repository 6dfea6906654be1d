//! Text formats for orders, character tables and ramification profiles.
//!
//! Every file is TOML, or JSON when the text starts with `{`. Ideals use
//! their string form (`m^k`, `p^a*T^b, ...`) and cyclotomic numbers the
//! `level:c0,c1,...` form.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::{Cyclo, CycloError};
use crate::group::{bundled, Automorphism, Character, CharacterTable, CycloMatrix, FiniteGroup, GroupError, Representation};
use crate::ideal::{Backend, FracIdeal, IdealError};
use crate::iwasawa::{profile_from_group, ChiProfile, IwasawaError};
use crate::order::{BlockSizes, GraduatedOrder, IdealMatrix, OrderError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("invalid field: {0}")]
    Field(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Iwasawa(#[from] IwasawaError),
}

impl FormatError {
    /// Malformed input as opposed to well-formed data that violates a
    /// mathematical condition.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            FormatError::Syntax(_)
                | FormatError::Field(_)
                | FormatError::Ideal(IdealError::Parse(..))
                | FormatError::Order(OrderError::Ideal(IdealError::Parse(..)))
                | FormatError::Cyclo(CycloError::Parse(..))
        )
    }
}

fn decode<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, FormatError> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| FormatError::Syntax(e.to_string()))
    } else {
        toml::from_str(text).map_err(|e| FormatError::Syntax(e.to_string()))
    }
}

/// On-disk form of a graduated order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderFile {
    pub backend: Backend,
    pub blocks: Vec<usize>,
    #[serde(rename = "dOmega", alias = "d_omega", default)]
    pub d_omega: Option<String>,
    pub ideals: Vec<Vec<String>>,
}

impl OrderFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        decode(text)
    }

    pub fn from_order(order: &GraduatedOrder) -> Self {
        OrderFile {
            backend: order.backend(),
            blocks: order.blocks().as_slice().to_vec(),
            d_omega: Some(order.d_omega().to_string()),
            ideals: order.ideals().to_strings(),
        }
    }

    pub fn to_order(&self) -> Result<GraduatedOrder, FormatError> {
        let ideals = IdealMatrix::parse(&self.ideals)?;
        if ideals.backend() != self.backend {
            return Err(FormatError::Field(format!(
                "ideals use the {:?} backend but the file declares {:?}",
                ideals.backend(),
                self.backend
            )));
        }
        let d_omega = match &self.d_omega {
            Some(s) => s.parse()?,
            None => FracIdeal::unit(self.backend),
        };
        Ok(GraduatedOrder::new(BlockSizes::new(self.blocks.clone())?, ideals, d_omega)?)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("order files serialise")
    }
}

pub fn parse_order(text: &str) -> Result<GraduatedOrder, FormatError> {
    OrderFile::parse(text)?.to_order()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorImage {
    element: usize,
    matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharacterEntry {
    name: String,
    values: Vec<String>,
    #[serde(default)]
    degree: Option<u32>,
    #[serde(default)]
    schur_index: Option<u32>,
    #[serde(default)]
    representation: Option<Vec<GeneratorImage>>,
}

/// An automorphism of `H`, either by images or as `x ↦ x^k`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismSpec {
    #[serde(default)]
    pub images: Option<Vec<usize>>,
    #[serde(default)]
    pub power: Option<u32>,
}

impl AutomorphismSpec {
    pub fn build(&self, group: &FiniteGroup) -> Result<Automorphism, FormatError> {
        match (&self.images, self.power) {
            (Some(images), None) => Ok(Automorphism::new(group, images.clone())?),
            (None, Some(k)) => Ok(Automorphism::new(group, (0..group.order()).map(|h| group.pow(h, k)).collect())?),
            (None, None) => Ok(Automorphism::identity(group)),
            _ => Err(FormatError::Field("give either `images` or `power`, not both".into())),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFileRaw {
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    bundled: Option<String>,
    #[serde(default)]
    table: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    classes: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    characters: Vec<CharacterEntry>,
    #[serde(default)]
    automorphism: Option<AutomorphismSpec>,
    #[serde(default)]
    eta: Option<usize>,
}

/// A character table plus the optional twist data used by `invariants`.
#[derive(Debug, Clone)]
pub struct GroupFile {
    pub table: CharacterTable,
    pub automorphism: Option<AutomorphismSpec>,
    pub eta: Option<usize>,
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<CycloMatrix, FormatError> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.parse::<Cyclo>().map_err(FormatError::from)).collect())
        .collect()
}

pub fn parse_group(text: &str) -> Result<GroupFile, FormatError> {
    let raw: GroupFileRaw = decode(text)?;
    let table = match (&raw.bundled, &raw.table) {
        (Some(name), None) => {
            if !raw.characters.is_empty() || raw.classes.is_some() {
                return Err(FormatError::Field("a bundled group takes no characters or classes".into()));
            }
            bundled(name)?
        }
        (None, Some(mul)) => {
            let mut group = FiniteGroup::from_table(mul.clone())?;
            if let Some(classes) = &raw.classes {
                group = group.with_class_order(classes.clone())?;
            }
            let level = group.exponent();
            let mut chars = Vec::with_capacity(raw.characters.len());
            for entry in &raw.characters {
                let values = entry
                    .values
                    .iter()
                    .map(|s| s.parse::<Cyclo>())
                    .collect::<Result<Vec<_>, _>>()?;
                let representation = match &entry.representation {
                    Some(gens) => {
                        let images = gens
                            .iter()
                            .map(|g| Ok((g.element, parse_matrix(&g.matrix)?)))
                            .collect::<Result<Vec<_>, FormatError>>()?;
                        let lifted = images
                            .into_iter()
                            .map(|(h, m)| {
                                let m = m
                                    .into_iter()
                                    .map(|r| r.into_iter().map(|x| x.to_level(level)).collect::<Result<Vec<_>, _>>())
                                    .collect::<Result<Vec<_>, _>>()?;
                                Ok((h, m))
                            })
                            .collect::<Result<Vec<_>, CycloError>>()
                            .map_err(GroupError::from)?;
                        Some(Representation::from_generators(&group, level, &lifted)?)
                    }
                    None => None,
                };
                chars.push(Character {
                    name: entry.name.clone(),
                    values,
                    schur_index: entry.schur_index.unwrap_or(1),
                    representation,
                });
            }
            let table = CharacterTable::new(raw.name.clone().unwrap_or_else(|| "H".into()), group, chars)?;
            for (i, entry) in raw.characters.iter().enumerate() {
                if let Some(d) = entry.degree {
                    if table.degree(i) != Some(d) {
                        return Err(GroupError::InvalidTable(format!("declared degree of {} is wrong", entry.name)).into());
                    }
                }
            }
            table
        }
        _ => return Err(FormatError::Field("give exactly one of `bundled` and `table`".into())),
    };
    if let Some(eta) = raw.eta {
        if eta >= table.len() {
            return Err(GroupError::UnknownCharacter(eta).into());
        }
    }
    Ok(GroupFile {
        table,
        automorphism: raw.automorphism,
        eta: raw.eta,
    })
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct DerivedEntry {
    group: String,
    #[serde(default)]
    images: Option<Vec<usize>>,
    #[serde(default)]
    power: Option<u32>,
    eta: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileFileRaw {
    #[serde(default)]
    prime: Option<u64>,
    #[serde(default)]
    chi: Vec<toml::Table>,
    #[serde(default)]
    from_group: Vec<DerivedEntry>,
    #[serde(default)]
    tower: Option<Vec<u32>>,
}

/// Profiles (explicit, or derived from bundled groups) and an optional
/// cyclotomic tower `n1 | n2 | n3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileFile {
    pub prime: Option<u64>,
    pub profiles: Vec<ChiProfile>,
    pub tower: Option<[u32; 3]>,
}

/// Parses a profile file; `prime` fills in entries that do not name one.
pub fn parse_profiles(text: &str, prime: Option<u64>) -> Result<ProfileFile, FormatError> {
    let raw: ProfileFileRaw = decode(text)?;
    let prime = prime.or(raw.prime);
    let mut profiles = Vec::new();
    for mut entry in raw.chi {
        if !entry.contains_key("prime") {
            let p = prime.ok_or_else(|| FormatError::Field("profile without a prime".into()))?;
            entry.insert("prime".into(), toml::Value::Integer(p as i64));
        }
        let profile: ChiProfile = entry.try_into().map_err(|e: toml::de::Error| FormatError::Field(e.message().to_string()))?;
        profiles.push(profile);
    }
    for d in raw.from_group {
        let p = prime.ok_or_else(|| FormatError::Field("derived profile without a prime".into()))?;
        let table = bundled(&d.group)?;
        let spec = AutomorphismSpec {
            images: d.images,
            power: d.power,
        };
        let alpha = spec.build(table.group())?;
        if d.eta >= table.len() {
            return Err(GroupError::UnknownCharacter(d.eta).into());
        }
        profiles.push(profile_from_group(&table, &alpha, d.eta, p)?);
    }
    let tower = match raw.tower {
        None => None,
        Some(v) => Some(
            <[u32; 3]>::try_from(v.as_slice())
                .map_err(|_| FormatError::Field("`tower` lists exactly three levels".into()))?,
        ),
    };
    Ok(ProfileFile { prime, profiles, tower })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_round_trip() {
        let text = r#"
backend = "dvr"
blocks = [1, 2]
dOmega = "m^1"
ideals = [["m^0", "m^1"], ["m^0", "m^0"]]
"#;
        let order = parse_order(text).unwrap();
        assert_eq!(order.block_count(), 2);
        let file = OrderFile::from_order(&order);
        assert_eq!(parse_order(&file.to_toml()).unwrap(), order);
        let json = serde_json::to_string(&file).unwrap();
        assert_eq!(parse_order(&json).unwrap(), order);
    }

    #[test]
    fn order_errors_are_classified() {
        let e = parse_order("backend = \"dvr\"\nblocks = [1, 1]\nideals = [[\"m^0\", \"m^-1\"], [\"m^0\", \"m^0\"]]").unwrap_err();
        assert!(!e.is_parse_error(), "{e}");
        let e = parse_order("backend = \"dvr\"\nblocks = [1]\nideals = [[\"x\"]]").unwrap_err();
        assert!(e.is_parse_error());
        assert!(parse_order("blocks = ").unwrap_err().is_parse_error());
    }

    #[test]
    fn explicit_c3_table() {
        let text = r#"
name = "C3"
table = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
eta = 1
automorphism = { power = 1 }

[[characters]]
name = "triv"
values = ["1:1", "1:1", "1:1"]

[[characters]]
name = "chi1"
values = ["1:1", "3:0,1", "3:-1,-1"]
degree = 1

[[characters]]
name = "chi2"
values = ["1:1", "3:-1,-1", "3:0,1"]
representation = [{ element = 1, matrix = [["3:-1,-1"]] }]
"#;
        let g = parse_group(text).unwrap();
        assert_eq!(g.table.len(), 3);
        assert_eq!(g.eta, Some(1));
        assert!(g.automorphism.unwrap().build(g.table.group()).unwrap().is_identity());
    }

    #[test]
    fn bundled_group_file() {
        let g = parse_group("bundled = \"S3\"").unwrap();
        assert_eq!(g.table.group().order(), 6);
        assert!(parse_group("bundled = \"S3\"\ntable = [[0]]").unwrap_err().is_parse_error());
        assert!(!parse_group("bundled = \"S9\"").unwrap_err().is_parse_error());
    }

    #[test]
    fn profile_file() {
        let text = r#"
prime = 3
tower = [1, 3, 9]

[[chi]]
name = "dp"
eta_degree = 1
w_chi = 1
v_chi = 1
e_eta_chi = 1
d_eta_chi = 0
d_chi_F = 0
ram_F_chi = 1
order_H = 2
is_direct_product = true

[[from_group]]
group = "C7"
power = 2
eta = 1
"#;
        let f = parse_profiles(text, None).unwrap();
        assert_eq!(f.profiles.len(), 2);
        assert_eq!(f.profiles[0].prime, 3);
        assert_eq!((f.profiles[1].w_chi, f.profiles[1].v_chi), (3, 1));
        assert_eq!(f.tower, Some([1, 3, 9]));
        assert!(parse_profiles("[[chi]]\nname = \"x\"", None).unwrap_err().is_parse_error());
    }
}
