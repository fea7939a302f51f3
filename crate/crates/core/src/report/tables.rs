use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::render::energy_unit;

use crate::error::{Error, Result};
use crate::oracles::{bessel_zero, bohr_energy, ho_oracle_energy, ho_so_oracle_energy, well_oracle_energy, Indexing};
use crate::potentials::{EffectivePotential, HalfInt, PotentialSpec, SpinOrbitCoupling, UnitSystem};
use crate::spectrum::{
    ho_energies, ho_gn, ho_spin_orbit_energies, hoso_gn, hydrogen_ground_energy, self_consistent_energy, well_energies,
    EnergyBranch, SolveOptions,
};

/// One state of a comparison table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub state: String,
    pub oracle: f64,
    pub method_primary: f64,
    pub method_secondary: Option<f64>,
    pub abs_dev: f64,
    pub rel_dev: f64,
}

impl ComparisonRow {
    pub fn new(state: impl Into<String>, oracle: f64, primary: f64, secondary: Option<f64>) -> Self {
        let abs_dev = (primary - oracle).abs();
        ComparisonRow {
            state: state.into(),
            oracle,
            method_primary: primary,
            method_secondary: secondary,
            abs_dev,
            rel_dev: abs_dev / oracle.abs().max(1e-30),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableId {
    Part2Table1,
    Part2Table2,
    Part2Table3,
    Hydrogen,
}

impl TableId {
    pub const ALL: [TableId; 4] = [
        TableId::Part2Table1,
        TableId::Part2Table2,
        TableId::Part2Table3,
        TableId::Hydrogen,
    ];
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableId::Part2Table1 => "part2_table1",
            TableId::Part2Table2 => "part2_table2",
            TableId::Part2Table3 => "part2_table3",
            TableId::Hydrogen => "hydrogen",
        })
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.to_string() == s.trim())
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown table `{s}` (part2_table1, part2_table2, part2_table3, hydrogen)"
                ))
            })
    }
}

/// Inputs for a table. `units` drives the computation, `reference` fixes the
/// unit the results are reported in (ħ²/2mL², ħω or plain energy), so a
/// change in `units` alone shows up in every reported number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableParams {
    pub units: UnitSystem,
    pub reference: UnitSystem,
    pub radius: f64,
    pub omega: f64,
    pub c0: f64,
}

impl TableParams {
    pub fn for_table(id: TableId) -> Self {
        let units = match id {
            TableId::Hydrogen => UnitSystem::ev_nm(),
            _ => UnitSystem::natural(),
        };
        TableParams {
            reference: units.clone(),
            units,
            radius: 1.0,
            omega: 1.0,
            c0: 0.015,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub id: TableId,
    pub title: String,
    pub unit: String,
    /// Units of the computation.
    pub units: UnitSystem,
    pub notes: Vec<String>,
    pub rows: Vec<ComparisonRow>,
}

const ORBITALS: [char; 7] = ['s', 'p', 'd', 'f', 'g', 'h', 'i'];

fn orbital(l: u32) -> char {
    ORBITALS.get(l as usize).copied().unwrap_or('?')
}

pub fn reproduce_table(id: TableId) -> Result<Table> {
    reproduce_table_with(id, &TableParams::for_table(id))
}

pub fn reproduce_table_with(id: TableId, p: &TableParams) -> Result<Table> {
    match id {
        TableId::Part2Table1 => well_table(p),
        TableId::Part2Table2 => oscillator_table(p),
        TableId::Part2Table3 => spin_orbit_table(p),
        TableId::Hydrogen => hydrogen_table(p),
    }
}

const NL_ROWS: [(u32, u32); 6] = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)];

fn well_table(p: &TableParams) -> Result<Table> {
    let unit = p.reference.hbar.powi(2) / (2.0 * p.reference.mass * p.radius * p.radius);
    let rows = NL_ROWS
        .iter()
        .map(|&(n, l)| {
            let oracle = well_oracle_energy(p.radius, l, n, &p.units)?.value;
            let e = well_energies(p.radius, l, EnergyBranch::General(n), &p.units)?;
            Ok(ComparisonRow::new(
                format!("{n}{}", orbital(l)),
                oracle / unit,
                e.plus / unit,
                Some(e.minus / unit),
            ))
        })
        .collect::<Result<_>>()?;
    Ok(Table {
        id: TableId::Part2Table1,
        title: "Infinite spherical well".into(),
        unit: "hbar^2/(2 m L^2)".into(),
        units: p.units.clone(),
        notes: vec![
            format!(
                "oracle: beta_nl^2 from zeros of j_l (e.g. beta_11 = {:.6})",
                bessel_zero(1, 1)?
            ),
            "method: general branch, [sqrt(l(l+1)) + n pi]^2; secondary column: the minus root [sqrt(l(l+1)) - n pi]^2"
                .into(),
        ],
        rows,
    })
}

fn oscillator_table(p: &TableParams) -> Result<Table> {
    let unit = p.reference.hbar * p.omega;
    let indexing = Indexing::FromOne;
    let rows = NL_ROWS
        .iter()
        .map(|&(n, l)| {
            let oracle = ho_oracle_energy(indexing.index_for_label(n)?, l, p.omega, &p.units, indexing)?.value;
            let primary = ho_energies(p.omega, l, ho_gn(EnergyBranch::General(n))?, &p.units)?;
            Ok(ComparisonRow::new(
                format!("{n}{}", orbital(l)),
                oracle / unit,
                primary / unit,
                None,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(Table {
        id: TableId::Part2Table2,
        title: "Isotropic harmonic oscillator".into(),
        unit: "hbar omega".into(),
        units: p.units.clone(),
        notes: vec![
            "oracle: (2n + l + 3/2) with n equal to the state label (1s uses n = 1)".into(),
            "method: general branch, g_n = n^2 pi^2".into(),
        ],
        rows,
    })
}

fn spin_orbit_table(p: &TableParams) -> Result<Table> {
    let unit = p.reference.hbar * p.omega;
    let indexing = Indexing::FromZero;
    // c0 is quoted in units of hbar omega.
    let coupling = SpinOrbitCoupling::Parameter {
        c0: p.c0 * p.units.hbar * p.omega,
    };
    let g = hoso_gn(EnergyBranch::General(1))?;
    let states = [(2u32, 5u32), (3, 5), (3, 7), (4, 7), (4, 9)];
    let rows = states
        .iter()
        .map(|&(l, twice_j)| {
            let j = HalfInt::from_twice(twice_j);
            let s = HalfInt::HALF;
            let n = indexing.index_for_label(1)?;
            let oracle = ho_so_oracle_energy(n, l, j, s, coupling, p.omega, &p.units, indexing)?.value;
            let primary = ho_spin_orbit_energies(p.omega, l, j, s, coupling, g, &p.units)?;
            Ok(ComparisonRow::new(
                format!("1{}_{j}", orbital(l)),
                oracle / unit,
                primary / unit,
                None,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(Table {
        id: TableId::Part2Table3,
        title: "Isotropic harmonic oscillator with spin-orbit coupling".into(),
        unit: "hbar omega".into(),
        units: p.units.clone(),
        notes: vec![
            "oracle: (2n + l + 3/2) - C_lsj with n counted from 0 (1d uses n = 0)".into(),
            format!("method: spin-orbit formula with 4 g_n = pi^2; c0 = {} hbar omega", p.c0),
        ],
        rows,
    })
}

fn hydrogen_table(p: &TableParams) -> Result<Table> {
    let unit = 1.0;
    let oracle = bohr_energy(1, 1, &p.units)?.value;
    let closed = hydrogen_ground_energy(1, 0, &p.units)?;
    let potential = EffectivePotential::new(
        PotentialSpec::HydrogenLike {
            z: 1,
            e_charge: p.units.charge,
        },
        0,
        p.units.clone(),
    )?;
    let solved = self_consistent_energy(&potential, EnergyBranch::Ground, &SolveOptions::signed())?.value;
    Ok(Table {
        id: TableId::Hydrogen,
        title: "Hydrogen ground state".into(),
        unit: energy_unit(&p.units),
        units: p.units.clone(),
        notes: vec![
            "oracle: Bohr level n = 1".into(),
            "method: closed form -(m e^4 / 2 hbar^2) Z^2 / (1 + l(l+1)); secondary column: signed self-consistent solution".into(),
        ],
        rows: vec![ComparisonRow::new("1s", oracle / unit, closed / unit, Some(solved / unit))],
    })
}
