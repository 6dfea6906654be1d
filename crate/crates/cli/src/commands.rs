//! Subcommand implementations.

use std::path::Path;

use gradord_core::formats::{parse_group, parse_order, parse_profiles, GroupFile, OrderFile, ProfileFile};
use gradord_core::group::galois::decomposition_group;
use gradord_core::group::{
    bruteforce_conductor, chi_invariants, epsilon_idempotent, p_adic_orbits, Automorphism, GroupAlgebraElement,
};
use gradord_core::iwasawa::{central_conductor_component, r_chi, s_chi, tower_additivity_check};
use gradord_core::order::{extremal_covers, graduated_hull, intersect_orders, is_extremal};
use gradord_core::{Backend, FracIdeal, GraduatedOrder, IdealMatrix};

use crate::args::{Command, GroupCommand, IwasawaCommand, OrderCommand};
use crate::report::*;
use crate::{read_file, with_path, Cli, CliError};

pub fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Order(cmd) => order(cmd),
        Command::Group(cmd) => group(cli, cmd),
        Command::Iwasawa(cmd) => iwasawa(cli, cmd),
    }
}

fn load_order(path: &Path) -> Result<GraduatedOrder, CliError> {
    let text = read_file(path)?;
    with_path(path, parse_order(&text))
}

fn matrix(order: &GraduatedOrder, m: &IdealMatrix) -> MatrixReport {
    MatrixReport {
        backend: order.backend(),
        blocks: order.blocks().as_slice().to_vec(),
        ideals: m.to_strings(),
    }
}

fn order(cmd: &OrderCommand) -> Result<Output, CliError> {
    let out = match cmd {
        OrderCommand::Validate(i) => {
            let o = load_order(&i.input)?;
            Output::new(&ValidateReport {
                valid: true,
                backend: o.backend(),
                blocks: o.blocks().as_slice().to_vec(),
                block_count: o.block_count(),
                total_size: o.total_size(),
            })
        }
        OrderCommand::Radical(i) => {
            let o = load_order(&i.input)?;
            Output::new(&matrix(&o, &o.jacobson_radical()))
        }
        OrderCommand::Quotient(i) => {
            let o = load_order(&i.input)?;
            Output::new(&QuotientReport {
                block_count: o.block_count(),
                blocks: o.radical_quotient(),
                colength: o.radical_colength().map_err(CliError::domain)?,
            })
        }
        OrderCommand::Different(i) => {
            let o = load_order(&i.input)?;
            let d = o.inverse_different().map_err(CliError::domain)?;
            Output::new(&matrix(&o, &d))
        }
        OrderCommand::Conductor(i) => {
            let o = load_order(&i.input)?;
            let c = o.conductor_into_selfdual().map_err(CliError::domain)?;
            Output::new(&matrix(&o, &c))
        }
        OrderCommand::Intersect(pair) => {
            let a = load_order(&pair.input)?;
            let b = load_order(&pair.input2)?;
            let meet = intersect_orders(&a, &b).map_err(CliError::domain)?;
            Output::new(&OrderFile::from_order(&meet))
        }
        OrderCommand::Hull(i) => {
            let o = load_order(&i.input)?;
            let hull = graduated_hull(&o).map_err(CliError::domain)?;
            Output::new(&OrderFile::from_order(&hull))
        }
        OrderCommand::Extremal(i) => {
            let o = load_order(&i.input)?;
            let covers = match o.backend() {
                Backend::Dvr => Some(extremal_covers(&o).map_err(CliError::domain)?.len()),
                Backend::Monomial2D => None,
            };
            Output::new(&ExtremalReport {
                extremal: is_extremal(&o),
                covers,
            })
        }
        OrderCommand::Hereditary(i) => {
            let o = load_order(&i.input)?;
            Output::new(&HereditaryReport {
                extremal: is_extremal(&o),
                radical_invertible: FracIdeal::maximal(o.backend()).is_invertible(),
                obstructed: o.hereditary_obstruction(),
            })
        }
        OrderCommand::Principalize(i) => {
            let o = load_order(&i.input)?;
            let element = o.principal_element().map_err(CliError::domain)?;
            let p = o.principalize().map_err(CliError::domain)?;
            Output::new(&PrincipalizeReport {
                element: element.to_string(),
                order: OrderFile::from_order(&p),
            })
        }
    };
    Ok(out)
}

fn load_group(path: &Path) -> Result<GroupFile, CliError> {
    let text = read_file(path)?;
    with_path(path, parse_group(&text))
}

fn element_string(e: &GroupAlgebraElement) -> Vec<String> {
    e.coeffs().iter().map(|c| c.to_string()).collect()
}

fn group(cli: &Cli, cmd: &GroupCommand) -> Result<Output, CliError> {
    let out = match cmd {
        GroupCommand::Orbits(i) => {
            let p = cli.require_prime()?;
            let g = load_group(&i.group)?;
            let t = &g.table;
            let orbits = p_adic_orbits(t, p).map_err(CliError::domain)?;
            Output::new(&OrbitsReport {
                group: t.name().to_string(),
                prime: p,
                orbits: orbits
                    .into_iter()
                    .map(|o| OrbitEntry {
                        characters: o.iter().map(|&i| t.characters()[i].name.clone()).collect(),
                        size: o.len(),
                        indices: o,
                    })
                    .collect(),
            })
        }
        GroupCommand::Idempotents(i) => {
            let p = cli.require_prime()?;
            let g = load_group(&i.group)?;
            let t = &g.table;
            let h = t.group();
            let orbits = p_adic_orbits(t, p).map_err(CliError::domain)?;
            let dg = decomposition_group(t.level(), p).map_err(CliError::domain)?;
            let eps = orbits
                .iter()
                .map(|o| epsilon_idempotent(t, o))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::domain)?;
            let mut total = GroupAlgebraElement::zero(h.order(), t.level());
            let mut orthogonal = true;
            let mut entries = Vec::with_capacity(eps.len());
            for (k, (orbit, e)) in orbits.iter().zip(&eps).enumerate() {
                total = total.add(e).map_err(CliError::domain)?;
                for f in &eps[k + 1..] {
                    orthogonal &= e.mul(f, h).map_err(CliError::domain)?.is_zero();
                }
                let mut galois_stable = true;
                for &a in &dg.elements {
                    galois_stable &= &e.galois(a).map_err(CliError::domain)? == e;
                }
                entries.push(IdempotentEntry {
                    indices: orbit.clone(),
                    coefficients: element_string(e),
                    idempotent: &e.mul(e, h).map_err(CliError::domain)? == e,
                    central: e.is_central(h),
                    galois_stable,
                });
            }
            Output::new(&IdempotentsReport {
                group: t.name().to_string(),
                prime: p,
                orbits: entries,
                sum_is_one: total == GroupAlgebraElement::one(h.order(), t.level()),
                orthogonal,
            })
        }
        GroupCommand::Invariants(i) => {
            let p = cli.require_prime()?;
            let g = load_group(&i.group)?;
            let t = &g.table;
            let alpha = match &g.automorphism {
                Some(spec) => with_path(&i.group, spec.build(t.group()))?,
                None => Automorphism::identity(t.group()),
            };
            let etas: Vec<usize> = match g.eta {
                Some(eta) => vec![eta],
                None => (0..t.len()).collect(),
            };
            let mut rows = Vec::with_capacity(etas.len());
            for eta in etas {
                let invariants = chi_invariants(t, &alpha, eta, p).map_err(CliError::domain)?;
                rows.push(InvariantRow {
                    eta,
                    character: t.characters()[eta].name.clone(),
                    invariants,
                });
            }
            Output::new(&InvariantsReport {
                group: t.name().to_string(),
                prime: p,
                automorphism: alpha.images().to_vec(),
                rows,
            })
        }
        GroupCommand::ConductorOracle(i) => {
            let p = cli.require_prime()?;
            let g = load_group(&i.group)?;
            let orbits = bruteforce_conductor(&g.table, p, cli.precision).map_err(CliError::domain)?;
            Output::new(&ConductorOracleReport {
                group: g.table.name().to_string(),
                prime: p,
                precision: cli.precision,
                all_agree: orbits.iter().all(|o| o.agrees()),
                orbits,
            })
        }
    };
    Ok(out)
}

fn load_profiles(cli: &Cli, path: &Path) -> Result<ProfileFile, CliError> {
    let text = read_file(path)?;
    with_path(path, parse_profiles(&text, cli.prime))
}

fn iwasawa(cli: &Cli, cmd: &IwasawaCommand) -> Result<Output, CliError> {
    let out = match cmd {
        IwasawaCommand::RChi(i) => {
            let file = load_profiles(cli, &i.profile)?;
            let rows = file
                .profiles
                .iter()
                .map(|p| {
                    Ok(RChiRow {
                        name: p.name.clone(),
                        r_chi: r_chi(p).map_err(CliError::domain)?,
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Output::new(&RowsReport { rows })
        }
        IwasawaCommand::SChi(i) => {
            let file = load_profiles(cli, &i.profile)?;
            let rows = file
                .profiles
                .iter()
                .map(|p| {
                    Ok(SChiRow {
                        name: p.name.clone(),
                        s_eta: p.s_eta,
                        w_chi: p.w_chi,
                        v_chi: p.v_chi,
                        s_chi: s_chi(p).map_err(CliError::domain)?,
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Output::new(&RowsReport { rows })
        }
        IwasawaCommand::CentralConductor(i) => {
            let file = load_profiles(cli, &i.profile)?;
            let rows = file
                .profiles
                .iter()
                .map(central_conductor_component)
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::domain)?;
            Output::new(&ConductorReport { rows })
        }
        IwasawaCommand::TowerCheck(i) => {
            let file = load_profiles(cli, &i.profile)?;
            let [n1, n2, n3] = file
                .tower
                .ok_or_else(|| CliError::Usage(format!("{}: no `tower` given", i.profile.display())))?;
            let p = file
                .prime
                .ok_or_else(|| CliError::Usage("tower check needs --prime or a `prime` in the file".into()))?;
            let check = tower_additivity_check(n1, n2, n3, p).map_err(CliError::domain)?;
            Output::new(&check)
        }
    };
    Ok(out)
}
