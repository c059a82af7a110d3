//! JSON descriptors for towers.

use super::Tower;
use crate::arith::BaseField;
use crate::error::Result;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDescriptor {
    pub name: String,
    pub minpoly: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub insep_exp: Option<u32>,
}

/// `{"base": "Q" | {"Fp": p} | {"FpT": p}, "gens": [...]}`. Each minimal
/// polynomial is written over the generators listed before it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerDescriptor {
    pub base: BaseField,
    #[serde(default)]
    pub gens: Vec<GeneratorDescriptor>,
}

impl Tower {
    /// Builds and certifies a tower, checking every minimal polynomial for
    /// irreducibility over the levels below it.
    pub fn from_descriptor(d: &TowerDescriptor) -> Result<Tower> {
        let mut t = Tower::new(d.base);
        for g in &d.gens {
            let m = t.parse_poly(&g.minpoly)?;
            t = t.extend(&g.name, m, g.insep_exp)?;
        }
        Ok(t)
    }

    /// Rebuilds a tower previously produced by this library without
    /// re-certifying irreducibility (shape and monicity are still checked).
    pub(crate) fn from_descriptor_trusted(d: &TowerDescriptor) -> Result<Tower> {
        let mut t = Tower::new(d.base);
        for g in &d.gens {
            let m = t.parse_poly(&g.minpoly)?;
            let top = t.top();
            if m.degree().unwrap_or(0) == 0 || !crate::arith::PolyRing::new(&top).is_monic(&m) {
                return Err(crate::Error::InvalidInput(format!(
                    "generator {} has an invalid minimal polynomial",
                    g.name
                )));
            }
            t.push_unchecked(g.name.clone(), m, g.insep_exp);
        }
        Ok(t)
    }

    pub fn descriptor(&self) -> TowerDescriptor {
        let mut prefix = Tower::new(*self.base());
        let mut gens = Vec::new();
        for g in self.generators() {
            gens.push(GeneratorDescriptor {
                name: g.name().to_string(),
                minpoly: prefix.format_poly(g.minpoly()),
                insep_exp: g.insep_exp(),
            });
            prefix.push_unchecked(g.name().to_string(), g.minpoly().clone(), g.insep_exp());
        }
        TowerDescriptor {
            base: *self.base(),
            gens,
        }
    }

    pub fn from_json(s: &str) -> Result<Tower> {
        let d: TowerDescriptor = serde_json::from_str(s)
            .map_err(|e| crate::Error::Parse(format!("tower descriptor: {e}")))?;
        Tower::from_descriptor(&d)
    }
}
