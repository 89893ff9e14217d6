//! The Montesinos-property test: search the reduced Jones polynomial of a
//! link among the five normal forms, optionally confirmed by the Kauffman
//! polynomial invariants.

mod report;
mod search;

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::bracket::{
    invariants_of_polynomial, jones_invariants_with, JonesInvariants, Strategy, DEFAULT_BRACKET_CAP,
};
use crate::classify::{normal_form_f_invariants, NormalForm};
use crate::error::Result;
use crate::kauffman::{f_invariants_with_strategy, FInvariantSet, DEFAULT_SKEIN_CAP};
use crate::link::{DTCode, LinkDiagram};

pub use report::{columns, FormMatch, ProbeForm, ProbeReport, Stage, Verdict};
pub use search::{
    form1_max_m, norm_at, probe_form1, probe_form2, probe_form3, probe_forms45, MAX_SEARCH_STEPS,
    NORM_TOLERANCE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeOptions {
    /// Also probe the mirror image.
    pub mirror: bool,
    /// Check every Jones match against the Kauffman invariants.
    pub refine: bool,
    pub bracket_cap: usize,
    pub skein_cap: usize,
    pub strategy: Strategy,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions {
            mirror: true,
            refine: false,
            bracket_cap: DEFAULT_BRACKET_CAP,
            skein_cap: DEFAULT_SKEIN_CAP,
            strategy: Strategy::default(),
        }
    }
}

/// Every form whose `V̄` equals that of `inv`, in form order.
pub fn jones_matches(inv: &JonesInvariants) -> Vec<ProbeForm> {
    let mut out: Vec<ProbeForm> = Vec::new();
    out.extend(
        probe_form1(inv)
            .into_iter()
            .map(|(k, l)| ProbeForm::Form1 { k, l }),
    );
    out.extend(
        probe_form2(inv)
            .into_iter()
            .map(|(k, l)| ProbeForm::Form2 { k, l }),
    );
    out.extend(
        probe_form3(inv)
            .into_iter()
            .map(|(k, l)| ProbeForm::Form3 { k, l }),
    );
    let (four, five) = probe_forms45(inv);
    if four {
        out.push(ProbeForm::Form4);
    }
    if five {
        out.push(ProbeForm::Form5);
    }
    out
}

pub fn probe(name: &str, d: &LinkDiagram, opts: &ProbeOptions) -> Result<ProbeReport> {
    let inv = jones_invariants_with(d, opts.bracket_cap, opts.strategy)?;
    let mut matches: Vec<FormMatch> = jones_matches(&inv)
        .into_iter()
        .map(|form| FormMatch {
            form,
            matched_by: Stage::Jones,
            mirror: false,
        })
        .collect();
    if opts.mirror {
        let mirrored = invariants_of_polynomial(inv.jones.invert_variable())?;
        matches.extend(jones_matches(&mirrored).into_iter().map(|form| FormMatch {
            form,
            matched_by: Stage::Jones,
            mirror: true,
        }));
    }
    let report = ProbeReport {
        name: name.to_string(),
        matches,
    };
    if opts.refine {
        kauffman_refine(d, report, opts)
    } else {
        Ok(report)
    }
}

/// Drops every match whose Kauffman invariants differ from those of the
/// diagram (or of its mirror, for mirror matches). Form 4 matches carry no
/// parameters and are kept at the Jones stage.
pub fn kauffman_refine(
    d: &LinkDiagram,
    report: ProbeReport,
    opts: &ProbeOptions,
) -> Result<ProbeReport> {
    let mut own: HashMap<bool, FInvariantSet> = HashMap::new();
    let mut matches = Vec::with_capacity(report.matches.len());
    for m in report.matches {
        let Some(nf) = m.form.normal_form() else {
            matches.push(m);
            continue;
        };
        if let Entry::Vacant(e) = own.entry(m.mirror) {
            let side = if m.mirror { d.mirror() } else { d.clone() };
            e.insert(f_invariants_with_strategy(
                &side,
                opts.skein_cap,
                opts.strategy,
            )?);
        }
        if normal_form_f(nf)? == own[&m.mirror] {
            matches.push(FormMatch {
                matched_by: Stage::JonesKauffman,
                ..m
            });
        }
    }
    Ok(ProbeReport { matches, ..report })
}

fn normal_form_f(nf: NormalForm) -> Result<FInvariantSet> {
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<NormalForm, FInvariantSet>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().expect("cache lock").get(&nf) {
        return Ok(f.clone());
    }
    let f = normal_form_f_invariants(nf)?;
    cache.lock().expect("cache lock").insert(nf, f.clone());
    Ok(f)
}

/// Probes every knot of a table; results come back in table order.
pub fn probe_table(codes: &[DTCode], opts: &ProbeOptions) -> Vec<Result<ProbeReport>> {
    let one = |c: &DTCode| {
        let d = c.to_diagram()?;
        probe(
            &c.name,
            &d,
            &ProbeOptions {
                strategy: Strategy::Sequential,
                ..*opts
            },
        )
    };
    match opts.strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            codes.par_iter().map(one).collect()
        }
        _ => codes.iter().map(one).collect(),
    }
}
