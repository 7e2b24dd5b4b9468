//! The four commands.

use fsz_core::arith::factorize;
use fsz_core::fsz::{
    counts_for_query_with, divisor_candidates, find_witness_with, screen_fsz_with,
    test_fsz_center_with, test_fsz_with, witness_scan, FszStatus, GmQuery, TestOptions,
};
use fsz_core::notation::{format_perm, parse_perm};
use fsz_core::structure::{center, centralizer, exponent, sylow_subgroup, ClassTable};
use fsz_core::{FszError, Perm, PermGroup};
use log::info;

use crate::args::{CountsArgs, RunArgs, TestArgs, WitnessArgs};
use crate::error::CliError;
use crate::report::{
    CountsReport, GroupSummary, InfoReport, SylowOrder, TestReport, WitnessJson, WitnessReport,
};
use crate::source::parse_group;

fn options(run: &RunArgs, m_filter: Option<Vec<u64>>) -> Result<TestOptions, CliError> {
    if m_filter.as_ref().is_some_and(|ms| ms.contains(&0)) {
        return Err(FszError::ZeroM.into());
    }
    Ok(TestOptions {
        screen: true,
        workers: run.workers as usize,
        m_filter,
        budget: run.budget,
    })
}

fn element(flag: &'static str, text: &str, group: &PermGroup) -> Result<Perm, CliError> {
    parse_perm(text, Some(group.degree())).map_err(|source| CliError::Element { flag, source })
}

pub fn info(source: &str, run: &RunArgs) -> Result<InfoReport, CliError> {
    let group = parse_group(source, run.max_order)?;
    let table = ClassTable::new(&group)?;
    let order = group.order_u64().expect("bounded by --max-order");
    let mut sylow = Vec::new();
    for (p, _) in factorize(order) {
        sylow.push(SylowOrder {
            p,
            order: sylow_subgroup(&group, p)?.order().to_string(),
        });
    }
    Ok(InfoReport {
        command: "info",
        group: GroupSummary::new(source, &group),
        exponent: table.exponent(),
        center_order: center(&group).order().to_string(),
        classes: table.len(),
        rational_classes: table.rational_classes().len(),
        sylow,
    })
}

pub fn test(args: &TestArgs, run: &RunArgs) -> Result<TestReport, CliError> {
    let group = parse_group(&args.group, run.max_order)?;
    let mut opts = options(run, args.m.clone())?;
    opts.screen = !args.no_screen;
    let (mode, verdict) = if args.screen_only {
        ("screen-only", screen_fsz_with(&group, &opts))
    } else if args.center_only {
        ("center-only", test_fsz_center_with(&group, &opts, false)?)
    } else {
        ("full", test_fsz_with(&group, &opts)?)
    };
    info!(
        "{} after {} comparisons",
        verdict.status.label(),
        verdict.comparisons
    );
    Ok(TestReport::new(
        GroupSummary::new(&args.group, &group),
        mode,
        args.m.clone(),
        &verdict,
    ))
}

pub fn counts(args: &CountsArgs, run: &RunArgs) -> Result<CountsReport, CliError> {
    let group = parse_group(&args.group, run.max_order)?;
    let q = GmQuery {
        u: element("u", &args.u, &group)?,
        g: element("g", &args.g, &group)?,
        m: args.m,
        n: args.n,
    };
    let (count_g, count_gn) = counts_for_query_with(&group, &q, run.budget)?;
    Ok(CountsReport {
        command: "counts",
        group: GroupSummary::new(&args.group, &group),
        g: format_perm(&q.g),
        u: format_perm(&q.u),
        m: q.m,
        n: q.n,
        count_g,
        count_gn,
    })
}

pub fn witness(args: &WitnessArgs, run: &RunArgs) -> Result<WitnessReport, CliError> {
    let group = parse_group(&args.group, run.max_order)?;
    let opts = options(run, args.m.clone())?;
    let summary = GroupSummary::new(&args.group, &group);
    let (mode, status) = match &args.g {
        None => ("scan", witness_scan(&group, &opts)?.status),
        Some(text) => {
            let g = element("g", text, &group)?;
            if !group.contains(&g) {
                return Err(fsz_core::GroupError::NotMember {
                    element: format_perm(&g),
                }
                .into());
            }
            let ms = match &args.m {
                Some(ms) => ms.clone(),
                None => divisor_candidates(exponent(&centralizer(&group, &g)?)?, g.order())?,
            };
            let mut found = None;
            for m in ms {
                if let Some(w) = find_witness_with(&group, m, &g, &opts)? {
                    found = Some(w);
                    break;
                }
            }
            let status = found.map_or(FszStatus::Inconclusive, FszStatus::NotFsz);
            ("element", status)
        }
    };
    let witness = match &status {
        FszStatus::NotFsz(w) => Some(WitnessJson::from(w)),
        _ => None,
    };
    Ok(WitnessReport {
        command: "witness",
        group: summary,
        mode,
        m: args.m.clone(),
        verdict: status.label(),
        witness,
    })
}
