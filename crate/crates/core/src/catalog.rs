//! Bundled representation data and parametric families.
//!
//! Group-algebra entries ship as JSON under `data/` in the same format the
//! command line accepts. Every entry is validated when it is loaded.

use num_traits::{One, Pow, Zero};

use crate::brauer::{sylow_gcd_check, BrauerTable};
use crate::critical::regular_closed_form;
use crate::error::{Error, Result};
use crate::rep::{validate, RepDatum};
use crate::schema::{BrauerTableJson, EntryJson, RepDatumJson};
use crate::{AbelianGroupStructure, Int, IntMatrix};

pub const GROUP_ALGEBRA_KEYS: [&str; 4] = ["s4p2", "s4p3", "s4p0", "s5p3"];

const S4P2: &str = include_str!("../data/s4p2.json");
const S4P3: &str = include_str!("../data/s4p3.json");
const S4P0: &str = include_str!("../data/s4p0.json");
const S5P3: &str = include_str!("../data/s5p3.json");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: String,
    pub datum: RepDatum,
    pub brauer: Option<BrauerTable>,
    pub provenance: String,
}

impl CatalogEntry {
    /// Validates the datum and, when a Brauer table is present, its
    /// agreement with `s` and `γ`.
    pub fn check(&self) -> Result<()> {
        validate(&self.datum).into_result(&self.datum.label)?;
        if let Some(table) = &self.brauer {
            let mut failures = Vec::new();
            if table.identity_column() != self.datum.s {
                failures.push("Brauer identity column != s".to_string());
            }
            if table.num_classes() != self.datum.num_simples() {
                failures.push("Brauer table size != number of simples".to_string());
            }
            if failures.is_empty() && !sylow_gcd_check(table, &self.datum) {
                failures.push(format!(
                    "gcd(p) = {} but Sylow order is {}",
                    self.datum.gamma(),
                    table.sylow_order
                ));
            }
            if !failures.is_empty() {
                return Err(Error::Validation {
                    label: self.datum.label.clone(),
                    failures,
                });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> EntryJson {
        EntryJson {
            key: Some(self.key.clone()),
            provenance: Some(self.provenance.clone()),
            datum: RepDatumJson::from_datum(&self.datum),
            brauer: self.brauer.as_ref().map(BrauerTableJson::from_table),
        }
    }
}

/// Loads and validates an entry in the bundled JSON format.
pub fn load_entry(text: &str) -> Result<CatalogEntry> {
    let entry: EntryJson = serde_json::from_str(text)?;
    let brauer = entry.brauer.map(BrauerTableJson::into_table).transpose()?;
    let datum = entry.datum.into_datum(brauer.as_ref())?;
    let entry = CatalogEntry {
        key: entry.key.unwrap_or_else(|| datum.label.clone()),
        provenance: entry.provenance.unwrap_or_default(),
        datum,
        brauer,
    };
    entry.check()?;
    Ok(entry)
}

/// Group algebras of `S_4` in characteristics 2, 3 and 0 (also covering
/// `p >= 5`) and of `S_5` in characteristic 3.
pub fn group_algebra(key: &str) -> Result<CatalogEntry> {
    let text = match key {
        "s4p2" => S4P2,
        "s4p3" => S4P3,
        "s4p0" => S4P0,
        "s5p3" => S5P3,
        _ => return Err(Error::UnknownKey(key.to_string())),
    };
    load_entry(text)
}

/// Fusion of `Z/n`: `S_j ⊗ S_t ≅ S_{j+t mod n}`.
fn cyclic_fusion(n: usize) -> Vec<IntMatrix> {
    (0..n)
        .map(|t| {
            IntMatrix::from_fn(n, n, |i, j| {
                if i == (j + t) % n {
                    Int::one()
                } else {
                    Int::zero()
                }
            })
        })
        .collect()
}

fn cyclic_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("S{i}")).collect()
}

/// Taft algebra `H_{n,m}`: `n` one-dimensional simples, each with
/// projective cover of dimension `m`. No Cartan matrix is recorded.
pub fn taft(n: usize, m: usize) -> Result<CatalogEntry> {
    if n == 0 || m == 0 || !n.is_multiple_of(m) {
        return Err(Error::InvalidParameters(format!(
            "Taft algebra needs m | n with n, m >= 1 (got n = {n}, m = {m})"
        )));
    }
    let datum = RepDatum::new(
        format!("Taft H({n},{m})"),
        0,
        vec![Int::one(); n],
        vec![Int::from(m); n],
        Int::from(n * m),
        None,
        cyclic_fusion(n),
    )?
    .with_simple_labels(cyclic_labels(n))?;
    let entry = CatalogEntry {
        key: format!("taft:{n},{m}"),
        datum,
        brauer: None,
        provenance: format!("Taft algebra with n = {n}, m = {m}"),
    };
    entry.check()?;
    Ok(entry)
}

fn binomial(m: usize, k: usize) -> Int {
    (0..k).fold(Int::one(), |acc, i| acc * Int::from(m - i) / Int::from(i + 1))
}

/// Radford algebra with `n` simples and `m` skew-primitive generators.
///
/// `C_{ij}` counts subsets of `{1..m}` whose size is `j - i` mod `n`.
pub fn radford(n: usize, m: usize) -> Result<CatalogEntry> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "Radford algebra needs an even n >= 2 (got n = {n})"
        )));
    }
    let cartan = IntMatrix::from_fn(n, n, |i, j| {
        let residue = (j + n - i) % n;
        (residue..=m).step_by(n).map(|k| binomial(m, k)).sum()
    });
    let s = vec![Int::one(); n];
    let p = cartan.mul_vec(&s)?;
    let datum = RepDatum::new(
        format!("Radford A({n},{m})"),
        0,
        s,
        p,
        Int::from(n) * Int::from(2).pow(m),
        Some(cartan),
        cyclic_fusion(n),
    )?
    .with_simple_labels(cyclic_labels(n))?;
    let entry = CatalogEntry {
        key: format!("radford:{n},{m}"),
        datum,
        brauer: None,
        provenance: format!("Radford algebra with n = {n}, m = {m}"),
    };
    entry.check()?;
    Ok(entry)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

/// Largest number of simples [`restricted_env_regular`] will accept.
pub const MAX_RESTRICTED_SIMPLES: u64 = 1 << 20;

/// `K(A)` for the regular module of a restricted enveloping algebra `u(g)`
/// in characteristic `p`: `γ = p^N`, `d = p^{dim g}` and `p^{rank g}` simples.
pub fn restricted_env_regular(
    p: u64,
    positive_roots: u32,
    dim_g: u32,
    rank_g: u32,
) -> Result<AbelianGroupStructure> {
    if !is_prime(p) {
        return Err(Error::InvalidParameters(format!("{p} is not prime")));
    }
    if rank_g == 0 {
        return Err(Error::InvalidParameters("rank of g must be at least 1".into()));
    }
    if positive_roots > dim_g {
        return Err(Error::InvalidParameters(format!(
            "N = {positive_roots} exceeds dim g = {dim_g}"
        )));
    }
    let simples = p
        .checked_pow(rank_g)
        .filter(|&k| k <= MAX_RESTRICTED_SIMPLES)
        .ok_or_else(|| {
            Error::InvalidParameters(format!("p^rank = {p}^{rank_g} simples is too many"))
        })?;
    let base = Int::from(p);
    regular_closed_form(
        &base.clone().pow(positive_roots),
        &base.pow(dim_g),
        simples as usize,
    )
}

/// All bundled group-algebra entries.
pub fn all_group_algebras() -> Result<Vec<CatalogEntry>> {
    GROUP_ALGEBRA_KEYS.iter().map(|k| group_algebra(k)).collect()
}
