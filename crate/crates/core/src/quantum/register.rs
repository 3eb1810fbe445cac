//! Subsystem labels and factor registries.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which party's ledger a tensor factor belongs to.
///
/// `A` is the committer's ancilla, `BAlpha` the traveling halves of the
/// receiver's entangled pairs, `BBeta` the halves she keeps, and `C` an
/// optional purification register over her basis choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Party {
    A,
    BAlpha,
    BBeta,
    C,
}

/// Pair slot within one protocol instance. `C` registers carry `PairSlot::None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairSlot {
    Mu,
    Nu,
    None,
}

/// Unique label of one tensor factor: `(party, pair-slot, instance)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubsystemId {
    pub party: Party,
    pub slot: PairSlot,
    pub instance: u32,
}

impl SubsystemId {
    pub fn new(party: Party, slot: PairSlot, instance: u32) -> Self {
        Self { party, slot, instance }
    }

    pub fn adam(slot: PairSlot, instance: u32) -> Self {
        Self::new(Party::A, slot, instance)
    }

    pub fn alpha(slot: PairSlot, instance: u32) -> Self {
        Self::new(Party::BAlpha, slot, instance)
    }

    pub fn beta(slot: PairSlot, instance: u32) -> Self {
        Self::new(Party::BBeta, slot, instance)
    }

    pub fn purifier(instance: u32) -> Self {
        Self::new(Party::C, PairSlot::None, instance)
    }
}

impl fmt::Display for SubsystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let party = match self.party {
            Party::A => "A",
            Party::BAlpha => "Balpha",
            Party::BBeta => "Bbeta",
            Party::C => "C",
        };
        match self.slot {
            PairSlot::Mu => write!(f, "{party}_mu[{}]", self.instance),
            PairSlot::Nu => write!(f, "{party}_nu[{}]", self.instance),
            PairSlot::None => write!(f, "{party}[{}]", self.instance),
        }
    }
}

/// Ordered list of `(SubsystemId, dimension)` pairs defining a tensor space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertRegistry {
    factors: Vec<(SubsystemId, usize)>,
}

impl HilbertRegistry {
    pub fn new(factors: Vec<(SubsystemId, usize)>) -> Result<Self> {
        for (i, (id, dim)) in factors.iter().enumerate() {
            if *dim == 0 {
                return Err(Error::ZeroDimension);
            }
            if factors[..i].iter().any(|(j, _)| j == id) {
                return Err(Error::DuplicateSubsystem(id.to_string()));
            }
        }
        Ok(Self { factors })
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|(_, d)| d).product()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|&(_, d)| d).collect()
    }

    pub fn ids(&self) -> Vec<SubsystemId> {
        self.factors.iter().map(|&(id, _)| id).collect()
    }

    pub fn factors(&self) -> &[(SubsystemId, usize)] {
        &self.factors
    }

    pub fn contains(&self, id: &SubsystemId) -> bool {
        self.factors.iter().any(|(j, _)| j == id)
    }

    pub fn position(&self, id: &SubsystemId) -> Result<usize> {
        self.factors
            .iter()
            .position(|(j, _)| j == id)
            .ok_or_else(|| Error::UnknownSubsystem(id.to_string()))
    }

    pub fn dim_of(&self, id: &SubsystemId) -> Result<usize> {
        Ok(self.factors[self.position(id)?].1)
    }

    /// Registry for the concatenation of two disjoint factor lists.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let mut factors = self.factors.clone();
        for (id, dim) in &other.factors {
            if self.contains(id) {
                return Err(Error::DuplicateSubsystem(id.to_string()));
            }
            factors.push((*id, *dim));
        }
        Self::new(factors)
    }

    /// Sub-registry of `keep`ed factors, preserving this registry's order.
    pub fn restricted_to(&self, keep: &[SubsystemId]) -> Result<Self> {
        for id in keep {
            self.position(id)?;
        }
        let factors = self
            .factors
            .iter()
            .filter(|(id, _)| keep.contains(id))
            .copied()
            .collect();
        Self::new(factors)
    }
}
