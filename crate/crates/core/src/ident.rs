//! Identification: entity ids, labels, and constraint resolution.
//!
//! Labels separate *appearance* (names) from *location* (addresses). An
//! address is either a node identifier or a spatial region; a node's current
//! position enters matching as a zero-radius region address synthesized by
//! whoever builds the registry snapshot.

use crate::error::{Error, Result};
use crate::time::SimTime;

/// Entity namespaces, in tie-breaking order. Every deterministic tie-break
/// in the simulator is ascending `(namespace, serial)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Namespace {
    Node,
    Channel,
    Flow,
    Adu,
    Tdu,
    Path,
    Content,
}

pub const NAMESPACE_COUNT: usize = 7;

impl Namespace {
    pub fn tag(self) -> &'static str {
        match self {
            Namespace::Node => "node",
            Namespace::Channel => "channel",
            Namespace::Flow => "flow",
            Namespace::Adu => "adu",
            Namespace::Tdu => "tdu",
            Namespace::Path => "path",
            Namespace::Content => "content",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Identity of a simulated entity; unique per namespace within a run.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EntityId {
    pub namespace: Namespace,
    pub serial: u64,
}

impl EntityId {
    pub const fn new(namespace: Namespace, serial: u64) -> Self {
        EntityId { namespace, serial }
    }

    pub const fn node(serial: u64) -> Self {
        EntityId::new(Namespace::Node, serial)
    }
}

impl std::fmt::Display for EntityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}#{}", self.namespace.tag(), self.serial)
    }
}

/// Hands out serials densely in creation order, one counter per namespace.
#[derive(Clone, Debug, Default)]
pub struct IdAllocator {
    next: [u64; NAMESPACE_COUNT],
}

impl IdAllocator {
    pub fn new() -> Self {
        IdAllocator::default()
    }

    pub fn allocate(&mut self, namespace: Namespace) -> EntityId {
        let serial = self.next[namespace.index()];
        self.next[namespace.index()] += 1;
        EntityId { namespace, serial }
    }
}

/// An observed property of an entity: a name (appearance) or an address
/// (location).
#[derive(Clone, PartialEq, Debug)]
pub enum Label {
    Name(String),
    NodeAddress(EntityId),
    RegionAddress { center: [f64; 3], radius_m: f64 },
}

impl Label {
    pub fn validate(&self) -> Result<()> {
        match self {
            Label::Name(value) => {
                if value.is_empty() {
                    return Err(Error::validation("label name must be non-empty"));
                }
                if value.chars().any(|c| c.is_control()) {
                    return Err(Error::validation(format!(
                        "label name {value:?} contains control characters"
                    )));
                }
                Ok(())
            }
            Label::NodeAddress(id) => {
                if id.namespace != Namespace::Node {
                    return Err(Error::validation(format!(
                        "node address must reference a node, got {id}"
                    )));
                }
                Ok(())
            }
            Label::RegionAddress { radius_m, .. } => {
                if *radius_m < 0.0 || !radius_m.is_finite() {
                    return Err(Error::validation(format!(
                        "region radius must be finite and non-negative, got {radius_m}"
                    )));
                }
                Ok(())
            }
        }
    }
}

/// Constraint over labels; spatial constraints carry the time at which
/// positions are to be evaluated (`None` means "now" to the snapshot
/// builder).
#[derive(Clone, PartialEq, Debug)]
pub enum LabelConstraint {
    ExactName(String),
    NamePrefix(String),
    NodeId(EntityId),
    Region {
        center: [f64; 3],
        radius_m: f64,
        at: Option<SimTime>,
    },
}

impl LabelConstraint {
    pub fn validate(&self) -> Result<()> {
        if let LabelConstraint::Region { radius_m, .. } = self {
            if *radius_m < 0.0 || !radius_m.is_finite() {
                return Err(Error::validation(format!(
                    "region constraint radius must be finite and non-negative, got {radius_m}"
                )));
            }
        }
        Ok(())
    }
}

fn euclid(a: [f64; 3], b: [f64; 3]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// True iff `label` satisfies `constraint`. Region-vs-region matching is
/// sphere overlap with an inclusive boundary; a node position is a
/// zero-radius region.
pub fn label_matches(label: &Label, constraint: &LabelConstraint) -> bool {
    match (label, constraint) {
        (Label::Name(value), LabelConstraint::ExactName(name)) => value == name,
        (Label::Name(value), LabelConstraint::NamePrefix(prefix)) => value.starts_with(prefix),
        (Label::NodeAddress(id), LabelConstraint::NodeId(wanted)) => id == wanted,
        (
            Label::RegionAddress { center, radius_m },
            LabelConstraint::Region {
                center: c,
                radius_m: r,
                ..
            },
        ) => euclid(*center, *c) <= radius_m + r,
        _ => false,
    }
}

/// A registry row: an entity and the labels it answers to.
#[derive(Clone, Debug)]
pub struct RegistryEntry {
    pub id: EntityId,
    pub labels: Vec<Label>,
}

/// All entities with at least one matching label, ascending by
/// `(namespace, serial)`. The output is a pure function of the entry *set*.
pub fn resolve(constraint: &LabelConstraint, registry: &[RegistryEntry]) -> Result<Vec<EntityId>> {
    constraint.validate()?;
    let mut out: Vec<EntityId> = registry
        .iter()
        .filter(|e| e.labels.iter().any(|l| label_matches(l, constraint)))
        .map(|e| e.id)
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}
