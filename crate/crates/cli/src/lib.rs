//! Verifier front end: a catalog of small groups, fourteen theorem suites
//! over their coset semigroups, and report plumbing for the `cosets`
//! binary.

pub mod catalog;
pub mod describe;
pub mod report;
pub mod suites;

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;
use std::time::Duration;

use coset_core::{
    semigroup_isomorphic, CosetSemigroup, FiniteGroup, IsoOutcome, SubgroupLattice, Variant,
    DEFAULT_ORDER_CAP, DEFAULT_SEMIGROUP_CAP,
};

use catalog::CatalogEntry;

pub const DEFAULT_ISO_TIMEOUT_SECS: u64 = 10;

/// A catalog group with its subgroup lattice and coset semigroup built.
pub struct Prepared {
    pub name: String,
    pub group: Arc<FiniteGroup>,
    pub lattice: Arc<SubgroupLattice>,
    pub k1: Arc<CosetSemigroup>,
}

impl Prepared {
    pub fn order(&self) -> usize {
        self.group.order()
    }
}

#[derive(Clone)]
enum Slot {
    Ready(Rc<Prepared>),
    Failed(String),
    OverMaxOrder,
}

/// Outcome of a cached semigroup-isomorphism query.
#[derive(Clone)]
pub enum IsoResult {
    Outcome(IsoOutcome),
    /// Fingerprints matched but the semigroups exceed the search cap.
    Capped { actual: usize, limit: usize },
}

/// Shared state for one verifier run: catalog entries, limits, and caches
/// so that every suite sees the same built objects.
pub struct Ctx {
    entries: Vec<CatalogEntry>,
    pub max_order: usize,
    pub iso_timeout: Duration,
    slots: RefCell<HashMap<String, Slot>>,
    iso_cache: RefCell<HashMap<(String, String), IsoResult>>,
}

impl Ctx {
    pub fn new(entries: Vec<CatalogEntry>, max_order: usize, iso_timeout: Duration) -> Self {
        Ctx {
            entries,
            max_order,
            iso_timeout,
            slots: RefCell::new(HashMap::new()),
            iso_cache: RefCell::new(HashMap::new()),
        }
    }

    fn slot(&self, entry: &CatalogEntry) -> Slot {
        if let Some(s) = self.slots.borrow().get(&entry.name) {
            return s.clone();
        }
        let slot = match entry.build() {
            Err(e) => Slot::Failed(e.to_string()),
            Ok(g) if g.order() > self.max_order => Slot::OverMaxOrder,
            Ok(g) => {
                let group = Arc::new(g);
                match SubgroupLattice::enumerate(group.clone(), DEFAULT_ORDER_CAP)
                    .and_then(|l| {
                        let lattice = Arc::new(l);
                        CosetSemigroup::new(lattice.clone(), Variant::Nontrivial)
                            .map(|s| (lattice, s))
                    }) {
                    Ok((lattice, k1)) => Slot::Ready(Rc::new(Prepared {
                        name: entry.name.clone(),
                        group,
                        lattice,
                        k1: Arc::new(k1),
                    })),
                    Err(e) => Slot::Failed(e.to_string()),
                }
            }
        };
        self.slots
            .borrow_mut()
            .insert(entry.name.clone(), slot.clone());
        slot
    }

    /// Catalog entries in order: `Ok` for built groups within the order
    /// bound, `Err(message)` for entries that failed to build. Groups above
    /// the order bound are omitted.
    pub fn resolutions(&self) -> Vec<(String, Result<Rc<Prepared>, String>)> {
        self.entries
            .iter()
            .filter_map(|entry| match self.slot(entry) {
                Slot::Ready(p) => Some((entry.name.clone(), Ok(p))),
                Slot::Failed(e) => Some((entry.name.clone(), Err(e))),
                Slot::OverMaxOrder => None,
            })
            .collect()
    }

    /// The successfully built groups, in catalog order.
    pub fn ready(&self) -> Vec<Rc<Prepared>> {
        self.resolutions()
            .into_iter()
            .filter_map(|(_, r)| r.ok())
            .collect()
    }

    /// Cached semigroup-isomorphism query between two prepared groups.
    pub fn semigroup_iso(&self, a: &Prepared, b: &Prepared) -> IsoResult {
        let key = (a.name.clone(), b.name.clone());
        if let Some(r) = self.iso_cache.borrow().get(&key) {
            return r.clone();
        }
        let result = match semigroup_isomorphic(
            &a.k1,
            &b.k1,
            DEFAULT_SEMIGROUP_CAP,
            self.iso_timeout,
        ) {
            Ok(outcome) => IsoResult::Outcome(outcome),
            Err(coset_core::Error::CapExceeded { actual, limit, .. }) => {
                IsoResult::Capped { actual, limit }
            }
            Err(e) => unreachable!("isomorphism search cannot fail with {e}"),
        };
        self.iso_cache.borrow_mut().insert(key, result.clone());
        result
    }
}
