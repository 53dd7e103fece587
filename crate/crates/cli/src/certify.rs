//! Certification of one `(G, x, y, k)` instance, optionally confirmed by a
//! full automorphism-group computation.

use grr_core::autgraph::{automorphism_group_with, SearchConfig};
use grr_core::cayley::{build_cayley, gamma_k_connection_set};
use grr_core::grouptab::GroupError;
use grr_core::grrcert::{certify_theorem1, certify_theorem1_perm};
use grr_core::{GroupTable, GrrCertificate, Permutation, Verdict};
use num_bigint::BigUint;
use serde::Serialize;

use crate::groups::GroupSpec;
use crate::report::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct Exhaustive {
    pub aut_order: String,
    pub is_grr: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertifyOutcome {
    /// `table` when the group was enumerated, `permutation` otherwise.
    pub method: &'static str,
    pub certificate: GrrCertificate,
    pub exhaustive: Option<Exhaustive>,
}

#[derive(Debug, Clone, Copy)]
pub struct CertifyOptions {
    pub cap: usize,
    pub exhaustive: bool,
    pub search: SearchConfig,
}

pub fn certify(
    group: &GroupSpec,
    x: &Permutation,
    y: &Permutation,
    k: usize,
    opts: CertifyOptions,
) -> Result<CertifyOutcome, CliError> {
    if k < 5 {
        return Err(CliError::Usage(format!(
            "k = {k}: valency k >= 5 is required"
        )));
    }
    let table = match GroupTable::enumerate(&group.generators, opts.cap) {
        Ok(t) => t,
        Err(GroupError::CapExceeded { .. }) if !opts.exhaustive => {
            let certificate = certify_theorem1_perm(&group.generators, x, y, k)?;
            return Ok(CertifyOutcome {
                method: "permutation",
                certificate,
                exhaustive: None,
            });
        }
        Err(e) => return Err(e.into()),
    };
    let member = |p: &Permutation, name: &str| {
        table.index_of(p).ok_or_else(|| {
            CliError::Usage(format!("{name} = {p} is not an element of {}", group.label))
        })
    };
    let (xi, yi) = (member(x, "x")?, member(y, "y")?);
    let certificate = certify_theorem1(&table, xi, yi, k);
    let exhaustive = if opts.exhaustive {
        match gamma_k_connection_set(&table, xi, yi, k) {
            Ok(s) => {
                let cay = build_cayley(&table, &s);
                let aut = automorphism_group_with(cay.graph(), None, opts.search)?;
                let is_grr = aut.order() == &BigUint::from(table.order());
                let agrees = match certificate.verdict {
                    Verdict::GrrCertified => is_grr,
                    Verdict::NotGrrAutGsNontrivial => !is_grr,
                    Verdict::HypothesesFailed => true,
                };
                Some(Exhaustive {
                    aut_order: aut.order().to_string(),
                    is_grr,
                    agrees,
                })
            }
            // Without a well-formed connection set there is no graph to check.
            Err(_) => None,
        }
    } else {
        None
    };
    Ok(CertifyOutcome {
        method: "table",
        certificate,
        exhaustive,
    })
}

pub fn print_outcome(o: &CertifyOutcome) {
    let c = &o.certificate;
    println!("group order    {}", c.group_order);
    println!("k, p           {}, {}", c.k, c.p);
    let checks = serde_json::to_value(c.checks).expect("checks serialize");
    for (name, ok) in checks.as_object().expect("checks are an object") {
        println!("  {:<26} {}", name, if ok == true { "yes" } else { "no" });
    }
    match c.aut_gs_order {
        Some(a) => println!("|Aut(G,S)|     {a}"),
        None => println!("|Aut(G,S)|     not computed"),
    }
    println!("verdict        {}", c.verdict.as_str());
    if let Some(w) = &c.witness {
        println!("witness        x -> {}, y -> {}", w.x_image, w.y_image);
    }
    if let Some(e) = &o.exhaustive {
        println!(
            "|Aut(Cay)|     {} ({}, {})",
            e.aut_order,
            if e.is_grr { "a GRR" } else { "not a GRR" },
            if e.agrees { "agrees" } else { "DISAGREES" }
        );
    }
}
