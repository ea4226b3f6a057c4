use std::fs;
use std::path::Path;

use nilhom::f2_groebner::{colon_ideal, groebner_basis, hilbert_function, parse_ideal_file, parse_polynomial, BinaryPoly, IdealFile};
use nilhom::hom_count::{
    so3_component_count, stable_summand_counts, su2_component_count, u2_component_count, So3Counts, Target, U2Counts,
};
use nilhom::quat_group::GroupId;
use nilhom::spectral::{
    b3q16_check, b3q16_extension, bcom_extension, bcom_presentation, direct_page_dims, e3_page, e4_page,
    page_poincare_series, ExtensionDatum, PageReport,
};
use nilhom::subgroups::{all_subgroups, lower_central_series, maximal_subgroups, Subgroup, MAX_AMBIENT_ORDER};
use nilhom::verify::{run_all, Verdict};
use serde_json::{json, Value};

use crate::args::{Command, ComponentTarget, GbOp, GroupAction, SpectralCase, SummandTarget, VerifyWhat};
use crate::report::{int, int_map, strings, CommandReport, VerdictRecord};
use crate::CliError;

pub fn execute(cmd: &Command, report: &mut CommandReport) -> Result<(), CliError> {
    match cmd {
        Command::Components { target, size } => {
            report.method = Some(size.method.to_string());
            components(*target, size.n, size.q, size.method, report)
        }
        Command::Summands { target, k, q, method } => {
            report.method = Some(method.to_string());
            let target = match target {
                SummandTarget::Su2 => Target::Su2,
                SummandTarget::So3 => Target::So3,
            };
            let r = stable_summand_counts(*k, *q, target, *method)?;
            let primary = r.formula.as_ref().or(r.enumeration.as_ref()).expect("some method ran");
            report.set("counts", int_map(primary));
            if let Some(f) = &r.formula {
                report.set("formula", int_map(f));
            }
            if let Some(e) = &r.enumeration {
                report.set("enumeration", int_map(e));
            }
            if let Some(a) = r.agree {
                report.set("agree", a);
            }
            Ok(())
        }
        Command::Group { action: GroupAction::Info { group } } => group_info(&parse_group(group)?, report),
        Command::Poset { group, r } => {
            let p = nilhom::subgroups::nil_poset_report(parse_group(group)?, *r)?;
            report.set("group", p.ambient.to_string());
            report.set("r", p.r);
            report.set("maximals", strings(p.maximals.iter().map(Subgroup::name)));
            report.set("intersections", strings(p.intersections.iter().map(Subgroup::name)));
            report.set("edges", json!(p.edges));
            report.set("tree", p.tree);
            report.set("amalgam", p.amalgam);
            Ok(())
        }
        Command::Gb { op, ring, poly, maxdeg } => {
            gb(*op, &read_ideal_file(ring)?, poly.as_deref(), *maxdeg, report)
        }
        Command::Spectral { which, maxdeg } => spectral(which, *maxdeg, report),
        Command::Verify { what } => {
            let verdicts = match what {
                VerifyWhat::Appendix => b3q16_verdicts()?,
                VerifyWhat::All => run_all().iter().map(record).collect(),
            };
            report.verdicts = Some(verdicts);
            Ok(())
        }
    }
}

fn read_ideal_file(path: &Path) -> Result<IdealFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_ideal_file(&text)?)
}

fn parse_group(s: &str) -> Result<GroupId, CliError> {
    Ok(s.parse::<GroupId>()?)
}

fn components(
    target: ComponentTarget,
    n: u32,
    q: u32,
    method: nilhom::hom_count::Method,
    report: &mut CommandReport,
) -> Result<(), CliError> {
    match target {
        ComponentTarget::Su2 => {
            let r = su2_component_count(n, q, method)?;
            report.set("abelian", r.abelian_components);
            report.set("nonabelian", int(&r.total_nonabelian));
            report.set("per_r", int_map(&r.per_r));
            if let Some(a) = r.agree {
                report.set("agree", a);
            }
        }
        ComponentTarget::So3 => {
            let r = so3_component_count(n, q, method)?;
            let so3 = |c: &So3Counts| json!({"M": int(&c.m), "M_q": int(&c.m_q)});
            let primary = r.formula.as_ref().or(r.enumeration.as_ref()).unwrap_or(&r.covering);
            report.set("abelian", 1);
            report.set("counts", so3(primary));
            report.set("covering", so3(&r.covering));
            if let Some(f) = &r.formula {
                report.set("formula", so3(f));
            }
            if let Some(e) = &r.enumeration {
                report.set("enumeration", so3(e));
            }
            if let Some(a) = r.agree {
                report.set("agree", a);
            }
        }
        ComponentTarget::U2 => {
            let r = u2_component_count(n, q, method)?;
            let u2 = |c: &U2Counts| {
                json!({"klein_stabilizer": int(&c.klein_stabilizer), "z2_stabilizer": int(&c.z2_stabilizer)})
            };
            let primary = r.formula.as_ref().or(r.enumeration.as_ref()).expect("some method ran");
            report.set("abelian", r.abelian_components);
            report.set("counts", u2(primary));
            if let Some(f) = &r.formula {
                report.set("formula", u2(f));
            }
            if let Some(e) = &r.enumeration {
                report.set("enumeration", u2(e));
            }
            if let Some(a) = r.agree {
                report.set("agree", a);
            }
        }
    }
    Ok(())
}

fn group_info(g: &GroupId, report: &mut CommandReport) -> Result<(), CliError> {
    report.set("group", g.to_string());
    report.set("order", g.order());
    report.set("family", g.family().to_string());
    if g.order() > MAX_AMBIENT_ORDER {
        return Ok(());
    }
    let whole = Subgroup::whole(*g)?;
    let (series, class) = lower_central_series(&whole);
    report.set("name", whole.name());
    report.set("abelian", whole.is_abelian());
    report.set("nilpotency_class", class);
    report.set("lower_central_series", strings(series.iter().map(Subgroup::name)));
    report.set("subgroups", all_subgroups(*g)?.len());
    report.set("maximal_subgroups", strings(maximal_subgroups(*g)?.iter().map(Subgroup::name)));
    Ok(())
}

fn lookup(file: &IdealFile, poly: Option<&str>) -> Result<BinaryPoly, CliError> {
    let text = poly.ok_or_else(|| CliError::usage("this operation needs --poly".into()))?;
    match file.get(text.trim()) {
        Some(p) => Ok(p.clone()),
        None => Ok(parse_polynomial(&file.ring, text)?),
    }
}

fn gb(op: GbOp, file: &IdealFile, poly: Option<&str>, maxdeg: u32, report: &mut CommandReport) -> Result<(), CliError> {
    let ring = &file.ring;
    report.set("ring", ring.to_string());
    match op {
        GbOp::Basis => {
            report.set("basis", strings(groebner_basis(ring, &file.generators).render()));
        }
        GbOp::Reduce => {
            let p = lookup(file, poly)?;
            let nf = groebner_basis(ring, &file.generators).normal_form(&p);
            report.set("input", p.render(ring));
            report.set("normal_form", nf.render(ring));
            report.set("zero", nf.is_zero());
        }
        GbOp::Colon => {
            let f = lookup(file, poly)?;
            let gens = colon_ideal(ring, &file.generators, &f)?;
            report.set("by", f.render(ring));
            report.set("colon", strings(gens.iter().map(|g| g.render(ring))));
            report.set("zero", gens.is_empty());
        }
        GbOp::Hilbert => {
            let h = hilbert_function(ring, &file.generators, maxdeg)?;
            report.set("hilbert", json!(h.dims));
            report.table = Some((
                vec!["degree".into(), "dim".into()],
                h.dims.iter().enumerate().map(|(d, v)| vec![d.to_string(), v.to_string()]).collect(),
            ));
        }
    }
    Ok(())
}

fn page_json(ext: &ExtensionDatum, page: &PageReport, maxdeg: u32) -> Result<(Value, Vec<u64>, bool), CliError> {
    let ring = ext.ring();
    let series = page_poincare_series(page, maxdeg).dims;
    let direct = direct_page_dims(ext, page.page, maxdeg)?;
    let agree = series == direct;
    let mut v = json!({
        "quotient": page.quotient.render(),
        "annihilator": page.annihilator.iter().map(|g| g.render(ring)).collect::<Vec<_>>(),
        "u_period": page.u_period,
        "u_shift": page.u_shift,
        "poincare": series,
        "direct": direct,
        "agree": agree,
    });
    if let Some(d5) = page.d5_vanishes {
        v["d5_vanishes"] = d5.into();
    }
    Ok((v, series, agree))
}

fn spectral(which: &SpectralCase, maxdeg: u32, report: &mut CommandReport) -> Result<(), CliError> {
    let ext = match which {
        SpectralCase::Bcom { n } => {
            let p = bcom_presentation(*n)?;
            report.set("presentation", json!({
                "ring": p.ring.to_string(),
                "relations": p.relations.iter().map(|r| r.render(&p.ring)).collect::<Vec<_>>(),
                "hilbert": hilbert_function(&p.ring, &p.relations, maxdeg)?.dims,
            }));
            bcom_extension(*n)?
        }
        SpectralCase::B3q16 => b3q16_extension()?,
        SpectralCase::File { ring } => ExtensionDatum::from_ideal_file(&read_ideal_file(ring)?)?,
    };
    let ring = ext.ring();
    report.set("base_ring", ring.to_string());
    report.set("k", ext.k.render(ring));
    if let Some(s) = &ext.sq1_k {
        report.set("sq1_k", s.render(ring));
    }
    let e3 = e3_page(&ext)?;
    let (e3_json, e3_series, e3_agree) = page_json(&ext, &e3, maxdeg)?;
    report.set("e3", e3_json);
    let mut agree = e3_agree;
    let mut columns = vec![e3_series];
    let mut header = vec!["degree".to_string(), "e3".to_string()];
    match e4_page(&ext) {
        Ok(e4) => {
            let (e4_json, e4_series, e4_agree) = page_json(&ext, &e4, maxdeg)?;
            agree &= e4_agree && e4.d5_vanishes != Some(false);
            let mut e4_json = e4_json;
            // only the additive structure is determined by the page
            e4_json["ring_structure_determined"] = false.into();
            report.set("e4", e4_json);
            columns.push(e4_series);
            header.push("e4".into());
        }
        Err(nilhom::Error::Unsupported(msg)) => report.set("e4", json!({ "unsupported": msg })),
        Err(e) => return Err(e.into()),
    }
    report.set("agree", agree);
    let rows = (0..=maxdeg as usize)
        .map(|d| std::iter::once(d.to_string()).chain(columns.iter().map(|c| c[d].to_string())).collect())
        .collect();
    report.table = Some((header, rows));
    Ok(())
}

fn record(v: &Verdict) -> VerdictRecord {
    VerdictRecord {
        id: v.id.to_string(),
        name: v.name.to_string(),
        passed: v.passed,
        detail: v.detail.clone(),
    }
}

fn b3q16_verdicts() -> Result<Vec<VerdictRecord>, CliError> {
    let c = b3q16_check()?;
    let list = |xs: &[String]| if xs.is_empty() { "0".to_string() } else { xs.join(", ") };
    Ok(vec![
        VerdictRecord {
            id: "colon".into(),
            name: "(0 : k) in A".into(),
            passed: c.ann_k.is_empty(),
            detail: format!("({})", list(&c.ann_k)),
        },
        VerdictRecord {
            id: "colon_mod_k".into(),
            name: "(0 : Sq1 k) in A/(k)".into(),
            passed: c.ann_sq1k == ["y3"] && c.contains_y3 && c.contained_in_y3,
            detail: format!(
                "({}); y3 kills Sq1 k: {}; contained in (y3): {}",
                list(&c.ann_sq1k),
                c.contains_y3,
                c.contained_in_y3
            ),
        },
        VerdictRecord {
            id: "reduce".into(),
            name: "d5 candidate modulo I + (k)".into(),
            passed: c.d5_normal_form == "0",
            detail: c.d5_normal_form,
        },
    ])
}

