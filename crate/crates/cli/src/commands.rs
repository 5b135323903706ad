use std::collections::HashSet;
use std::fmt::Write;

use hessenberg_core::betti::{betti_profile, irreducibility_criterion, witness_partition};
use hessenberg_core::bijection::{nilpotent_complement, unique_weyl_rep};
use hessenberg_core::hessenberg::weyl_type_subsets;
use hessenberg_core::sweep::REPORT_SCHEMA;
use hessenberg_core::{
    parse_system_label, Bijector, Error, HessenbergSpace, Result, RootIndex, RootMask, RootSystem,
    SimpleSubset, SweepConfig, SweepReport, WeylElement, WeylGroup, DEFAULT_GROUP_BUDGET,
};
use serde::Serialize;

use crate::spec::{parse_hess, parse_j, parse_types};
use crate::Format;

pub struct Job {
    pub group: WeylGroup,
    pub space: HessenbergSpace,
    pub j: SimpleSubset,
}

impl Job {
    pub fn parse(system: &str, hess: &str, j: &str) -> Result<Job> {
        let (kind, rank) = parse_system_label(system)?;
        let group = WeylGroup::generate(RootSystem::new(kind, rank)?, DEFAULT_GROUP_BUDGET)?;
        let space = parse_hess(group.root_system(), hess)?;
        let j = parse_j(group.root_system(), j)?;
        Ok(Job { group, space, j })
    }

    fn rs(&self) -> &RootSystem {
        self.group.root_system()
    }

    fn label(&self) -> String {
        self.rs().label()
    }

    /// Negative roots of a mask as coefficient vectors.
    fn roots_of(&self, mask: RootMask) -> Vec<Vec<i32>> {
        mask_roots(self.rs(), mask)
    }

    fn space_roots(&self) -> Vec<Vec<i32>> {
        self.roots_of(self.space.neg_mask())
    }

    fn word(&self, w: WeylElement) -> Vec<usize> {
        self.group.word_one_based(w)
    }
}

fn mask_roots(rs: &RootSystem, mask: RootMask) -> Vec<Vec<i32>> {
    mask.iter()
        .map(|p| rs.coefficients(rs.neg_of(p)).to_vec())
        .collect()
}

fn fmt_root(v: &[i32]) -> String {
    let parts: Vec<String> = v.iter().map(i32::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn fmt_roots(vs: &[Vec<i32>]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| fmt_root(v)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn fmt_counts(c: &[u64]) -> String {
    let parts: Vec<String> = c.iter().map(u64::to_string).collect();
    parts.join(",")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn header(out: &mut String, job: &Job) {
    let _ = writeln!(out, "system       {}", job.label());
    let _ = writeln!(out, "H            {}", fmt_roots(&job.space_roots()));
    let _ = writeln!(out, "J            {}", job.j);
}

#[derive(Serialize)]
struct BettiOut {
    schema: &'static str,
    command: &'static str,
    system: String,
    space: Vec<Vec<i32>>,
    j: Vec<usize>,
    m_h: usize,
    counts: Vec<u64>,
    poincare: String,
    palindromic: bool,
    irreducible: bool,
}

pub fn betti(job: &Job, format: Format) -> Result<String> {
    let profile = betti_profile(&job.group, job.j, &job.space);
    let irreducible = irreducibility_criterion(&job.group, &job.space)?;
    let out = BettiOut {
        schema: REPORT_SCHEMA,
        command: "betti",
        system: job.label(),
        space: job.space_roots(),
        j: job.j.one_based(),
        m_h: profile.m_h(),
        poincare: profile.poincare_polynomial(),
        palindromic: profile.is_palindromic(),
        counts: profile.counts,
        irreducible,
    };
    Ok(match format {
        Format::Json => to_json(&out),
        Format::Text => {
            let mut s = String::new();
            header(&mut s, job);
            let _ = writeln!(s, "m_H          {}", out.m_h);
            let _ = writeln!(s, "profile      {}", fmt_counts(&out.counts));
            let _ = writeln!(s, "poincare     {}", out.poincare);
            let _ = writeln!(s, "palindromic  {}", out.palindromic);
            let _ = writeln!(s, "irreducible  {}", out.irreducible);
            s
        }
    })
}

#[derive(Serialize)]
struct WeylTypeEntry {
    subset: Vec<Vec<i32>>,
    representative: Vec<usize>,
    witnesses: usize,
}

#[derive(Serialize)]
struct WeylTypeOut {
    schema: &'static str,
    command: &'static str,
    system: String,
    space: Vec<Vec<i32>>,
    j: Vec<usize>,
    subsets: Vec<WeylTypeEntry>,
    total_witnesses: usize,
}

pub fn weyl_type(job: &Job, format: Format) -> Result<String> {
    let part = witness_partition(&job.group, job.j, &job.space);
    let mut entries = Vec::new();
    for s in weyl_type_subsets(&job.group, &job.space) {
        let rep = unique_weyl_rep(&job.group, &job.space, s.members)?;
        entries.push(WeylTypeEntry {
            subset: job.roots_of(s.members),
            representative: job.word(rep),
            witnesses: part.block(s.members).len(),
        });
    }
    let out = WeylTypeOut {
        schema: REPORT_SCHEMA,
        command: "weyl-type",
        system: job.label(),
        space: job.space_roots(),
        j: job.j.one_based(),
        total_witnesses: entries.iter().map(|e| e.witnesses).sum(),
        subsets: entries,
    };
    Ok(match format {
        Format::Json => to_json(&out),
        Format::Text => {
            let mut s = String::new();
            header(&mut s, job);
            let _ = writeln!(s, "subsets      {}", out.subsets.len());
            let rows: Vec<[String; 3]> = out
                .subsets
                .iter()
                .map(|e| {
                    [
                        fmt_roots(&e.subset),
                        word_text(&e.representative),
                        e.witnesses.to_string(),
                    ]
                })
                .collect();
            table(&mut s, &["S", "representative", "|W(J,S)|"], &rows);
            let _ = writeln!(s, "total        {}", out.total_witnesses);
            s
        }
    })
}

fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        "e".into()
    } else {
        word.iter().map(|i| format!("s{i}")).collect()
    }
}

fn table<const N: usize>(out: &mut String, head: &[&str; N], rows: &[[String; N]]) {
    let mut widths = head.map(|h| h.chars().count());
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(head.to_vec()));
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
}

#[derive(Serialize, Clone)]
struct Pair {
    w: Vec<usize>,
    w0w: Vec<usize>,
    y: Vec<usize>,
    v: Vec<usize>,
    levi_space: Vec<Vec<i32>>,
    y_bar: Vec<usize>,
    w_bar: Vec<usize>,
}

#[derive(Serialize)]
struct Block {
    subset: Vec<Vec<i32>>,
    complement: Vec<Vec<i32>>,
    pairs: Vec<Pair>,
}

#[derive(Serialize)]
struct BijectionOut {
    schema: &'static str,
    command: &'static str,
    system: String,
    space: Vec<Vec<i32>>,
    j: Vec<usize>,
    k: Vec<usize>,
    blocks: Vec<Block>,
}

/// Every invariant of the map is checked before anything is rendered; a
/// failure carries the offending case as JSON.
pub fn bijection(job: &Job, format: Format) -> Result<String> {
    let g = &job.group;
    let neg = job.space.neg_mask();
    let mut bij = Bijector::new(g, &job.space, job.j);
    let k = bij.k_set();
    let part = witness_partition(g, job.j, &job.space);
    let part_k = witness_partition(g, k, &job.space);
    let delta = SimpleSubset::full(job.rs().rank());

    let fail = |what: &str, detail: serde_json::Value| {
        Error::Invariant(format!(
            "{what} for {} H = {} J = {}: {detail}",
            job.label(),
            fmt_roots(&job.space_roots()),
            job.j
        ))
    };

    let mut blocks = Vec::new();
    for s in weyl_type_subsets(g, &job.space) {
        let s = s.members;
        let source = part.block(s);
        let image = part_k.block(neg.difference(s));
        if source.len() != image.len() {
            return Err(fail(
                "block sizes differ",
                serde_json::json!({
                    "subset": job.roots_of(s),
                    "source": source.len(),
                    "image": image.len(),
                }),
            ));
        }
        let mut pairs = Vec::new();
        let mut seen = HashSet::new();
        for &w in source {
            let rec = bij.map(w)?;
            let pair = Pair {
                w: job.word(w),
                w0w: job.word(rec.w0w),
                y: job.word(rec.y),
                v: job.word(rec.v),
                levi_space: job.roots_of(rec.levi_space.neg_mask()),
                y_bar: job.word(rec.y_bar),
                w_bar: job.word(rec.target),
            };
            if !seen.insert(rec.target) {
                return Err(fail("map is not injective", serde_json::json!(pair)));
            }
            if job.j == delta && nilpotent_complement(g, &job.space, w)? != rec.target {
                return Err(fail(
                    "map disagrees with the nilpotent complement",
                    serde_json::json!(pair),
                ));
            }
            pairs.push(pair);
        }
        blocks.push(Block {
            subset: job.roots_of(s),
            complement: job.roots_of(neg.difference(s)),
            pairs,
        });
    }

    let out = BijectionOut {
        schema: REPORT_SCHEMA,
        command: "bijection",
        system: job.label(),
        space: job.space_roots(),
        j: job.j.one_based(),
        k: k.one_based(),
        blocks,
    };
    Ok(match format {
        Format::Json => to_json(&out),
        Format::Text => {
            let mut s = String::new();
            header(&mut s, job);
            let _ = writeln!(s, "K            {k}");
            for b in &out.blocks {
                let _ = writeln!(
                    s,
                    "\nS = {}  Sᶜ = {}",
                    fmt_roots(&b.subset),
                    fmt_roots(&b.complement)
                );
                let rows: Vec<[String; 7]> = b
                    .pairs
                    .iter()
                    .map(|p| {
                        [
                            word_text(&p.w),
                            word_text(&p.w0w),
                            word_text(&p.y),
                            word_text(&p.v),
                            fmt_roots(&p.levi_space),
                            word_text(&p.y_bar),
                            word_text(&p.w_bar),
                        ]
                    })
                    .collect();
                table(&mut s, &["w", "w0·w", "y", "v", "H_v", "ȳ", "w̄"], &rows);
            }
            s
        }
    })
}

#[derive(Serialize)]
struct RootRow {
    index: usize,
    coefficients: Vec<i32>,
    height: i32,
}

#[derive(Serialize)]
struct RootsOut {
    schema: &'static str,
    command: &'static str,
    system: String,
    cartan: Vec<Vec<i32>>,
    weyl_order: u64,
    roots: Vec<RootRow>,
}

pub fn roots(system: &str, format: Format) -> Result<String> {
    let (kind, rank) = parse_system_label(system)?;
    let rs = RootSystem::new(kind, rank)?;
    let out = RootsOut {
        schema: REPORT_SCHEMA,
        command: "roots",
        system: rs.label(),
        cartan: rs.cartan().to_vec(),
        weyl_order: hessenberg_core::weyl::expected_order(kind, rank),
        roots: (0..rs.len())
            .map(|i| RootRow {
                index: i,
                coefficients: rs.coefficients(RootIndex(i as u8)).to_vec(),
                height: rs.height(RootIndex(i as u8)),
            })
            .collect(),
    };
    Ok(match format {
        Format::Json => to_json(&out),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "system       {}", out.system);
            let _ = writeln!(s, "|Φ|          {}", out.roots.len());
            let _ = writeln!(s, "|W|          {}", out.weyl_order);
            let _ = writeln!(s, "cartan");
            for row in &out.cartan {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                let _ = writeln!(s, "  {}", cells.join(""));
            }
            let rows: Vec<[String; 3]> = out
                .roots
                .iter()
                .map(|r| {
                    [
                        r.index.to_string(),
                        fmt_root(&r.coefficients),
                        r.height.to_string(),
                    ]
                })
                .collect();
            table(&mut s, &["index", "root", "height"], &rows);
            s
        }
    })
}

pub fn verify_config(
    max_rank: usize,
    types: Option<&str>,
    systems: &[String],
    jobs: usize,
    group_budget: usize,
    rank_cap: usize,
    oracle_max_m_h: usize,
) -> Result<SweepConfig> {
    Ok(SweepConfig {
        max_rank,
        types: types.map(parse_types).transpose()?.unwrap_or_default(),
        extra_systems: systems
            .iter()
            .map(|s| parse_system_label(s))
            .collect::<Result<_>>()?,
        jobs,
        group_budget,
        rank_cap,
        oracle_max_m_h,
    })
}

pub fn render_report(report: &SweepReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "schema       {}", report.schema);
            let _ = writeln!(s, "version      {}", report.tool_version);
            let rows: Vec<[String; 5]> = report
                .systems
                .iter()
                .map(|x| {
                    [
                        x.label.clone(),
                        x.roots.to_string(),
                        x.weyl_order.to_string(),
                        x.hessenberg_spaces.to_string(),
                        x.cases.to_string(),
                    ]
                })
                .collect();
            table(&mut s, &["system", "|Φ|", "|W|", "spaces", "cases"], &rows);
            let _ = writeln!(s, "cases        {}", report.cases_checked);
            let _ = writeln!(s, "checks");
            for (name, n) in &report.checks {
                let _ = writeln!(s, "  {name:<32} {n}");
            }
            let _ = writeln!(s, "violations   {}", report.violations.len());
            for v in &report.violations {
                let _ = writeln!(
                    s,
                    "  {} {} H = {} J = {}: {}",
                    v.check,
                    v.system,
                    v.space
                        .as_deref()
                        .map(fmt_roots)
                        .unwrap_or_else(|| "-".into()),
                    v.j.as_deref()
                        .map(|j| format!("{j:?}"))
                        .unwrap_or_else(|| "-".into()),
                    v.detail
                );
            }
            let _ = writeln!(
                s,
                "result       {}",
                if report.passed() { "PASS" } else { "FAIL" }
            );
            s
        }
    }
}
