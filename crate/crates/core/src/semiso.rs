//! Isomorphism testing between coset semigroups.
//!
//! Pipeline: cheap invariant fingerprints first (these run regardless of
//! size), then a size cap, then a backtracking search that (a) enumerates
//! label-preserving order-isomorphisms of the idempotent posets — an order
//! isomorphism of finite meet-semilattices automatically preserves the
//! idempotent products — and (b) extends each to the non-idempotent
//! elements by assigning images to cosets of minimal subgroups only; every
//! other element is a product of an idempotent and a minimal coset, so its
//! image is forced. A surviving candidate is verified multiplicatively over
//! every pair before being reported as a witness.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::semigroup::{CosetSemigroup, ElemId};

/// Default cap on semigroup size for the isomorphism search.
pub const DEFAULT_SEMIGROUP_CAP: usize = 80;
/// Default wall-clock timeout for one isomorphism search.
pub const DEFAULT_ISO_TIMEOUT: Duration = Duration::from_secs(10);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    /// A full multiplicative bijection, indexed by elements of the left
    /// semigroup.
    Isomorphic(Vec<ElemId>),
    /// Definitely not isomorphic, with the first distinguishing invariant
    /// or "search exhausted".
    NotIsomorphic(&'static str),
    /// The search hit the deadline; no conclusion.
    Timeout,
}

/// Structural invariants cheap enough to compute at any size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub size: usize,
    pub idempotent_count: usize,
    /// Sorted R-class sizes of the idempotents.
    pub r_class_sizes: Vec<usize>,
    /// Sorted H-class sizes of the idempotents.
    pub h_class_sizes: Vec<usize>,
    pub commutative: bool,
}

pub fn fingerprint(s: &CosetSemigroup) -> Fingerprint {
    let idems = s.idempotent_ids();
    let mut r_class_sizes: Vec<usize> = idems
        .iter()
        .map(|&e| s.r_class_of_subgroup(s.subgroup_of(e)).len())
        .collect();
    r_class_sizes.sort_unstable();
    let mut h_class_sizes: Vec<usize> = idems
        .iter()
        .map(|&e| s.h_class_of_subgroup(s.subgroup_of(e)).len())
        .collect();
    h_class_sizes.sort_unstable();
    Fingerprint {
        size: s.len(),
        idempotent_count: idems.len(),
        r_class_sizes,
        h_class_sizes,
        commutative: s.is_commutative(),
    }
}

/// Compare the fingerprints, naming the first mismatch.
pub fn fingerprint_mismatch(a: &Fingerprint, b: &Fingerprint) -> Option<&'static str> {
    if a.size != b.size {
        Some("element count differs")
    } else if a.idempotent_count != b.idempotent_count {
        Some("idempotent count differs")
    } else if a.r_class_sizes != b.r_class_sizes {
        Some("R-class size profile differs")
    } else if a.h_class_sizes != b.h_class_sizes {
        Some("H-class size profile differs")
    } else if a.commutative != b.commutative {
        Some("commutativity differs")
    } else {
        None
    }
}

struct Side<'a> {
    s: &'a CosetSemigroup,
    idems: Vec<ElemId>,
    /// per idempotent position: (R-class size, H-class size)
    labels: Vec<(usize, usize)>,
    /// leq[i * n + j]: idems[i] <= idems[j] in the natural order
    leq: Vec<bool>,
}

impl<'a> Side<'a> {
    fn new(s: &'a CosetSemigroup) -> Self {
        let idems = s.idempotent_ids();
        let n = idems.len();
        let labels = idems
            .iter()
            .map(|&e| {
                let k = s.subgroup_of(e);
                (
                    s.r_class_of_subgroup(k).len(),
                    s.h_class_of_subgroup(k).len(),
                )
            })
            .collect();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = s.natural_leq(idems[i], idems[j]);
            }
        }
        Side { s, idems, labels, leq }
    }
}

struct Search<'a> {
    a: Side<'a>,
    b: Side<'a>,
    deadline: Instant,
    timed_out: bool,
    /// non-idempotent cosets of minimal subgroups of `a`, in id order
    minimal_cosets: Vec<ElemId>,
    /// full map under construction (element ids of a -> element ids of b)
    phi: Vec<usize>,
    used: Vec<bool>,
    witness: Option<Vec<ElemId>>,
}

/// Decide whether two coset semigroups are isomorphic.
///
/// Fingerprints are compared before the size cap is enforced, so oversized
/// pairs still resolve when an invariant separates them; `CapExceeded` is
/// returned only for fingerprint-identical pairs that are too big to
/// search. A timeout yields `Ok(IsoOutcome::Timeout)`, never a negative.
pub fn semigroup_isomorphic(
    a: &CosetSemigroup,
    b: &CosetSemigroup,
    cap: usize,
    timeout: Duration,
) -> Result<IsoOutcome> {
    let fa = fingerprint(a);
    let fb = fingerprint(b);
    if let Some(reason) = fingerprint_mismatch(&fa, &fb) {
        return Ok(IsoOutcome::NotIsomorphic(reason));
    }
    if a.len() > cap {
        return Err(Error::CapExceeded {
            what: "semigroup size for isomorphism search",
            actual: a.len(),
            limit: cap,
        });
    }

    let sa = Side::new(a);
    let sb = Side::new(b);
    let minimal_cosets: Vec<ElemId> = a
        .ids()
        .filter(|&x| {
            !a.is_idempotent(x) && a.lattice().minimal_position(a.r_key(x)).is_some()
        })
        .collect();
    let n_idems = sa.idems.len();
    let mut search = Search {
        a: sa,
        b: sb,
        deadline: Instant::now() + timeout,
        timed_out: false,
        minimal_cosets,
        phi: vec![usize::MAX; a.len()],
        used: vec![false; b.len()],
        witness: None,
    };
    let mut sigma = vec![usize::MAX; n_idems];
    let mut sigma_used = vec![false; n_idems];
    search.enumerate_sigma(0, &mut sigma, &mut sigma_used);

    if let Some(w) = search.witness {
        return Ok(IsoOutcome::Isomorphic(w));
    }
    if search.timed_out {
        return Ok(IsoOutcome::Timeout);
    }
    Ok(IsoOutcome::NotIsomorphic("search exhausted"))
}

impl<'a> Search<'a> {
    fn out_of_time(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        if Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        self.timed_out
    }

    /// Backtrack over label- and order-preserving maps of idempotents.
    fn enumerate_sigma(&mut self, k: usize, sigma: &mut Vec<usize>, used: &mut Vec<bool>) {
        if self.witness.is_some() || self.out_of_time() {
            return;
        }
        let n = self.a.idems.len();
        if k == n {
            self.extend_with_sigma(sigma);
            return;
        }
        for f in 0..n {
            if used[f] || self.a.labels[k] != self.b.labels[f] {
                continue;
            }
            let ok = (0..k).all(|j| {
                self.a.leq[k * n + j] == self.b.leq[f * n + sigma[j]]
                    && self.a.leq[j * n + k] == self.b.leq[sigma[j] * n + f]
            });
            if !ok {
                continue;
            }
            sigma[k] = f;
            used[f] = true;
            self.enumerate_sigma(k + 1, sigma, used);
            sigma[k] = usize::MAX;
            used[f] = false;
            if self.witness.is_some() || self.timed_out {
                return;
            }
        }
    }

    /// Seed `phi` with a complete idempotent map and assign the minimal
    /// cosets by backtracking.
    fn extend_with_sigma(&mut self, sigma: &[usize]) {
        self.phi.fill(usize::MAX);
        self.used.fill(false);
        for (i, &f) in sigma.iter().enumerate() {
            self.phi[self.a.idems[i]] = self.b.idems[f];
            self.used[self.b.idems[f]] = true;
        }
        let cosets = self.minimal_cosets.clone();
        self.assign_minimal(&cosets, 0);
    }

    fn assign_minimal(&mut self, cosets: &[ElemId], depth: usize) {
        if self.witness.is_some() || self.out_of_time() {
            return;
        }
        if depth == cosets.len() {
            self.finish();
            return;
        }
        let x = cosets[depth];
        let want_r = self.image_of_idempotent_subgroup(self.a.s.r_key(x));
        let want_l = self.image_of_idempotent_subgroup(self.a.s.l_key(x));
        for y in self.b.s.ids() {
            if self.used[y]
                || self.b.s.is_idempotent(y)
                || self.b.s.r_key(y) != want_r
                || self.b.s.l_key(y) != want_l
            {
                continue;
            }
            let trail_len = self.try_assign(x, y, &cosets[..depth]);
            if let Some(trail) = trail_len {
                self.assign_minimal(cosets, depth + 1);
                // undo
                for &(ax, _) in &trail {
                    self.used[self.phi[ax]] = false;
                    self.phi[ax] = usize::MAX;
                }
            }
            if self.witness.is_some() || self.timed_out {
                return;
            }
        }
    }

    /// Subgroup id in `b` that the sigma-image of the idempotent of `sub`
    /// belongs to.
    fn image_of_idempotent_subgroup(&self, sub: crate::lattice::SubId) -> crate::lattice::SubId {
        let e = self.a.s.idempotent_id(sub);
        self.b.s.subgroup_of(self.phi[e])
    }

    /// Set phi[x] = y, force the images of every coset above x (products
    /// with idempotents), and run cheap product checks against previously
    /// assigned minimal cosets. Returns the assignment trail on success.
    fn try_assign(
        &mut self,
        x: ElemId,
        y: ElemId,
        assigned: &[ElemId],
    ) -> Option<Vec<(ElemId, ElemId)>> {
        let mut trail: Vec<(ElemId, ElemId)> = Vec::new();
        let mut ok = true;
        // force x and everything obtained from x by idempotent multiplication
        let idems = self.a.idems.clone();
        let mut queue: Vec<(ElemId, ElemId)> = vec![(x, y)];
        for &e in &idems {
            let fx = self.a.s.product(e, x);
            let fy = self.b.s.product(self.phi[e], y);
            queue.push((fx, fy));
        }
        for (ax, ay) in queue {
            if self.phi[ax] != usize::MAX {
                if self.phi[ax] != ay {
                    ok = false;
                    break;
                }
                continue;
            }
            if self.used[ay] {
                ok = false;
                break;
            }
            self.phi[ax] = ay;
            self.used[ay] = true;
            trail.push((ax, ay));
        }
        if ok {
            // check products among assigned minimal cosets when both images
            // of the product are already known
            'outer: for &u in assigned.iter().chain(std::iter::once(&x)) {
                for (p, q) in [
                    (self.a.s.product(x, u), (x, u)),
                    (self.a.s.product(u, x), (u, x)),
                ] {
                    if self.phi[p] != usize::MAX {
                        let img = self.b.s.product(self.phi[q.0], self.phi[q.1]);
                        if self.phi[p] != img {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        if ok {
            Some(trail)
        } else {
            for &(ax, _) in &trail {
                self.used[self.phi[ax]] = false;
                self.phi[ax] = usize::MAX;
            }
            None
        }
    }

    /// All minimal cosets are assigned: every element must be forced by
    /// now; verify the whole multiplication table.
    fn finish(&mut self) {
        let s = self.a.s;
        let t = self.b.s;
        if self.phi.iter().any(|&v| v == usize::MAX) {
            return;
        }
        for x in s.ids() {
            for y in s.ids() {
                if self.phi[s.product(x, y)] != t.product(self.phi[x], self.phi[y]) {
                    return;
                }
            }
        }
        self.witness = Some(self.phi.clone());
    }
}
