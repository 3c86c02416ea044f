//! Commutativity of the coset semigroup: it is commutative exactly when
//! the group is abelian or the quaternion group of order 8.

use serde_json::json;

use coset_core::dsl::build_group;
use coset_core::{group_isomorphic, DEFAULT_ISO_CAP};

use crate::report::{Entry, Report};
use crate::Ctx;

pub fn run(ctx: &Ctx) -> Report {
    let quaternion = build_group("Q8").expect("Q8 builds");
    let mut report = Report::new("abelian-char");
    for (name, res) in ctx.resolutions() {
        report.push(match res {
            Ok(p) => {
                let commutative = p.k1.is_commutative();
                let is_q8 = p.group.order() == 8
                    && group_isomorphic(&p.group, &quaternion, DEFAULT_ISO_CAP)
                        .expect("order 8 fits the cap")
                        .is_some();
                let expected = p.group.is_abelian() || is_q8;
                if commutative == expected {
                    Entry::pass(&p.name)
                        .ev("commutative", commutative)
                        .ev("abelian", p.group.is_abelian())
                        .ev("quaternion", is_q8)
                } else {
                    Entry::fail(
                        &p.name,
                        json!({
                            "commutative": commutative,
                            "abelian": p.group.is_abelian(),
                            "quaternion": is_q8,
                        }),
                    )
                }
            }
            Err(msg) => Entry::skipped(name, crate::report::SkipTag::Error, msg),
        });
    }
    report
}
