//! Enumeration of cycle colorings up to symmetry and renaming, and the
//! counterexample hunt over them.
//!
//! Colorings are generated as pairs of restricted-growth strings (vertex
//! partition, edge partition) in lexicographic order. A pair is kept when
//! it already is its own canonical encoding, so the stream is duplicate
//! free and sorted by encoding without any lookup table.

use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::configs::{gen_even_config, gen_odd_config};
use crate::covariance::adjugate_oracle_cycle;
use crate::error::{Error, Result};
use crate::ideal::{conjecture_status, quick_unexplained, ConjectureReport, NUMERATOR_BOUND};
use crate::model::{Color, ColoredCycle, Encoding};

/// All set partitions of `0..n` as restricted-growth strings, in
/// lexicographic order.
pub fn restricted_growth_strings(n: usize) -> Vec<Vec<Color>> {
    fn grow(prefix: &mut Vec<Color>, top: Color, n: usize, out: &mut Vec<Vec<Color>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for c in 0..=top + 1 {
            prefix.push(c);
            grow(prefix, top.max(c), n, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    // first entry is always 0; `top` starts below it
    let mut prefix = vec![0];
    grow(&mut prefix, 0, n, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    None,
    UniformVertex,
    UniformEdge,
    Uniform,
}

impl Constraint {
    fn uniform_vertices(self) -> bool {
        matches!(self, Constraint::UniformVertex | Constraint::Uniform)
    }

    fn uniform_edges(self) -> bool {
        matches!(self, Constraint::UniformEdge | Constraint::Uniform)
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::None => "none",
            Constraint::UniformVertex => "uniform-vertex",
            Constraint::UniformEdge => "uniform-edge",
            Constraint::Uniform => "uniform",
        })
    }
}

impl FromStr for Constraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Constraint::None),
            "uniform-vertex" => Ok(Constraint::UniformVertex),
            "uniform-edge" => Ok(Constraint::UniformEdge),
            "uniform" => Ok(Constraint::Uniform),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown constraint `{other}`"),
            }),
        }
    }
}

/// One representative per equivalence class, in increasing encoding order.
pub fn enumerate_colorings(n: usize, constraint: Constraint) -> impl Iterator<Item = ColoredCycle> {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let partitions = |uniform: bool| {
        if uniform {
            vec![vec![0; n]]
        } else {
            restricted_growth_strings(n)
        }
    };
    let vertex_parts = partitions(constraint.uniform_vertices());
    let edge_parts = partitions(constraint.uniform_edges());
    vertex_parts.into_iter().flat_map(move |v| {
        edge_parts.clone().into_iter().filter_map(move |e| {
            let c = ColoredCycle::new(v.clone(), e).expect("n >= 3");
            (c.canonical_form() == Encoding::of(&c)).then_some(c)
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    Exhaustive,
    Sample { k: usize, seed: u64 },
}

#[derive(Debug, Clone, Default)]
pub struct HuntOptions {
    /// Progress file; `<file>.found` keeps encodings already flagged.
    pub checkpoint: Option<PathBuf>,
    /// Unconstrained exhaustive runs at `n >= 7` must be requested.
    pub allow_large_exhaustive: bool,
    /// Classes processed between checkpoint writes.
    pub chunk: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuntOutcome {
    pub n: usize,
    pub constraint: Constraint,
    /// Classes checked in this run (excluding ones skipped on resume).
    pub examined: usize,
    pub resumed_past: Option<Encoding>,
    /// Reports with at least one unexplained binomial, by encoding.
    pub reports: Vec<ConjectureReport>,
}

const ORACLE_BOUND: usize = 8;
const DEFAULT_CHUNK: usize = 2048;

fn found_path(checkpoint: &Path) -> PathBuf {
    let mut name = checkpoint.as_os_str().to_owned();
    name.push(".found");
    PathBuf::from(name)
}

fn read_encodings(path: &Path) -> Result<Vec<Encoding>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (k, line) in BufReader::new(File::open(path)?).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(line.parse::<Encoding>().map_err(|_| Error::Parse {
            line: k + 1,
            column: 1,
            message: format!("bad checkpoint entry `{line}`"),
        })?);
    }
    Ok(out)
}

fn append_lines(path: &Path, lines: &[String]) -> Result<()> {
    if lines.is_empty() {
        return Ok(());
    }
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    for l in lines {
        writeln!(f, "{l}")?;
    }
    f.flush()?;
    Ok(())
}

/// Rebuilds the report for a flagged class and re-checks each unexplained
/// binomial against the adjugate when `n` is small enough.
fn full_report(c: &ColoredCycle) -> Result<ConjectureReport> {
    let report = conjecture_status(c)?;
    if c.n() <= ORACLE_BOUND {
        for b in &report.unexplained {
            let a = adjugate_oracle_cycle(c, b.first.0, b.first.1)?;
            let z = adjugate_oracle_cycle(c, b.second.0, b.second.1)?;
            if a != z {
                return Err(Error::OracleMismatch(format!(
                    "{b} on {}: adjugate entries differ",
                    report.canonical
                )));
            }
        }
    }
    Ok(report)
}

/// Checks every selected class and returns the ones with unexplained
/// binomials. Output depends only on the arguments (and the checkpoint
/// contents, when resuming).
pub fn hunt(
    n: usize,
    constraint: Constraint,
    budget: Budget,
    options: &HuntOptions,
) -> Result<HuntOutcome> {
    if n > NUMERATOR_BOUND {
        return Err(Error::TooLarge {
            n,
            bound: NUMERATOR_BOUND,
        });
    }
    if n < 3 {
        return Err(Error::BadLength {
            m: n,
            reason: "a cycle needs at least 3 vertices",
        });
    }
    if budget == Budget::Exhaustive
        && n >= 7
        && !constraint.uniform_vertices()
        && !constraint.uniform_edges()
        && !options.allow_large_exhaustive
    {
        return Err(Error::NeedsOptIn(
            "an unconstrained exhaustive hunt at n >= 7",
        ));
    }

    let classes: Box<dyn Iterator<Item = ColoredCycle>> = match budget {
        Budget::Exhaustive => Box::new(enumerate_colorings(n, constraint)),
        Budget::Sample { k, seed } => {
            let all: Vec<ColoredCycle> = enumerate_colorings(n, constraint).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked =
                rand::seq::index::sample(&mut rng, all.len(), k.min(all.len())).into_vec();
            picked.sort_unstable();
            Box::new(picked.into_iter().map(move |i| all[i].clone()))
        }
    };

    let (resume, mut flagged) = match &options.checkpoint {
        Some(path) => (
            read_encodings(path)?.into_iter().max(),
            read_encodings(&found_path(path))?,
        ),
        None => (None, Vec::new()),
    };
    let mut classes = classes.filter(|c| resume.as_ref().is_none_or(|r| Encoding::of(c) > *r));

    let chunk = options.chunk.unwrap_or(DEFAULT_CHUNK).max(1);
    let mut examined = 0;
    loop {
        let batch: Vec<ColoredCycle> = classes.by_ref().take(chunk).collect();
        let Some(last) = batch.last() else { break };
        let last = Encoding::of(last);
        examined += batch.len();
        let hits: Vec<Encoding> = batch
            .par_iter()
            .map(|c| quick_unexplained(c).map(|u| (!u.is_empty()).then(|| Encoding::of(c))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        if let Some(path) = &options.checkpoint {
            append_lines(
                &found_path(path),
                &hits.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            )?;
            append_lines(path, &[last.to_string()])?;
        }
        flagged.extend(hits);
    }

    flagged.sort();
    flagged.dedup();
    let reports = flagged
        .par_iter()
        .map(|e| full_report(&e.to_cycle()?))
        .collect::<Result<Vec<_>>>()?;
    Ok(HuntOutcome {
        n,
        constraint,
        examined,
        resumed_past: resume,
        reports,
    })
}

/// Glues the two paths of a known equal-determinant configuration into a
/// `2m`-cycle: `P` on vertices `1..=m`, `Q` on `m+1..=2m`, joined by two
/// connector edges sharing a fresh color. Even `m >= 4` uses the even
/// configuration, odd `m >= 5` the odd one.
pub fn construct_counterexample_even(m: usize) -> Result<ColoredCycle> {
    let (p, q) = match m {
        m if m >= 4 && m % 2 == 0 => gen_even_config(m)?,
        m if m >= 5 => gen_odd_config(m)?,
        _ => {
            return Err(Error::BadLength {
                m,
                reason: "need an even m >= 4 or an odd m >= 5",
            })
        }
    };
    let fresh = p
        .edge_colors()
        .iter()
        .chain(q.edge_colors())
        .max()
        .map_or(0, |c| c + 1);
    let vertices = [p.vertex_colors(), q.vertex_colors()].concat();
    let edges = [p.edge_colors(), &[fresh], q.edge_colors(), &[fresh]].concat();
    ColoredCycle::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{symmetries, LinearBinomial};
    use std::collections::BTreeSet;

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, b) in bell.iter().enumerate() {
            assert_eq!(restricted_growth_strings(n).len(), *b);
        }
        let r = restricted_growth_strings(3);
        assert_eq!(r.first().unwrap(), &vec![0, 0, 0]);
        assert_eq!(r.last().unwrap(), &vec![0, 1, 2]);
        assert!(r.windows(2).all(|w| w[0] < w[1]));
    }

    /// Orbits of 3-colorings of a triangle under the dihedral group and
    /// independent permutations of vertex and edge colors, by brute force.
    fn brute_force_orbits_n3() -> usize {
        let perms: Vec<[u32; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let mut seen = BTreeSet::new();
        for code in 0..729u32 {
            let digit = |k: u32| (code / 3u32.pow(k)) % 3;
            let v: Vec<u32> = (0..3).map(digit).collect();
            let e: Vec<u32> = (3..6).map(digit).collect();
            let c = ColoredCycle::new(v, e).unwrap();
            let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
            for g in crate::symmetry::DihedralElement::all(3) {
                let d = c.relabel(&g);
                for pv in &perms {
                    for pe in &perms {
                        let key = (
                            d.vertex_colors().iter().map(|&x| pv[x as usize]).collect(),
                            d.edge_colors().iter().map(|&x| pe[x as usize]).collect(),
                        );
                        if best.as_ref().is_none_or(|b| key < *b) {
                            best = Some(key);
                        }
                    }
                }
            }
            seen.insert(best.unwrap());
        }
        seen.len()
    }

    #[test]
    fn triangle_class_count_matches_brute_force() {
        let got = enumerate_colorings(3, Constraint::None).count();
        assert_eq!(got, brute_force_orbits_n3());
        assert!(got < 25);
        assert_eq!(enumerate_colorings(3, Constraint::Uniform).count(), 1);
    }

    #[test]
    fn stream_is_sorted_and_canonical() {
        let all: Vec<Encoding> = enumerate_colorings(5, Constraint::None)
            .map(|c| Encoding::of(&c))
            .collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let classes: BTreeSet<Encoding> = restricted_growth_strings(5)
            .into_iter()
            .flat_map(|v| {
                restricted_growth_strings(5)
                    .into_iter()
                    .map(move |e| ColoredCycle::new(v.clone(), e).unwrap().canonical_form())
            })
            .collect();
        assert_eq!(all.len(), classes.len());
    }

    #[test]
    fn uniform_edge_pre_quotient_is_bell() {
        let pre = restricted_growth_strings(5).len();
        assert_eq!(pre, 52);
        let post = enumerate_colorings(5, Constraint::UniformEdge).count();
        assert!(post < pre);
        assert!(enumerate_colorings(5, Constraint::UniformEdge)
            .all(|c| c.edge_colors().iter().all(|&e| e == 0)));
    }

    #[test]
    fn hunt_small_odd_cycles_is_clean() {
        let out = hunt(
            3,
            Constraint::None,
            Budget::Exhaustive,
            &HuntOptions::default(),
        )
        .unwrap();
        assert!(out.reports.is_empty());
        assert!(out.examined > 0);
    }

    #[test]
    fn hunt_four_cycles_finds_fig7() {
        let out = hunt(
            4,
            Constraint::None,
            Budget::Exhaustive,
            &HuntOptions::default(),
        )
        .unwrap();
        let fig7 = ColoredCycle::new(vec![0, 1, 0, 1], vec![0, 1, 0, 2]).unwrap();
        let key = fig7.canonical_form().to_string();
        assert!(out.reports.iter().any(|r| r.canonical == key));
        assert!(out
            .reports
            .windows(2)
            .all(|w| w[0].canonical < w[1].canonical));
    }

    #[test]
    fn sampling_is_deterministic() {
        let b = Budget::Sample { k: 50, seed: 7 };
        let a = hunt(6, Constraint::None, b, &HuntOptions::default()).unwrap();
        let c = hunt(6, Constraint::None, b, &HuntOptions::default()).unwrap();
        assert_eq!(a, c);
        assert_eq!(a.examined, 50);
    }

    #[test]
    fn large_exhaustive_needs_opt_in() {
        assert!(matches!(
            hunt(
                7,
                Constraint::None,
                Budget::Exhaustive,
                &HuntOptions::default()
            ),
            Err(Error::NeedsOptIn(_))
        ));
        assert!(hunt(
            13,
            Constraint::Uniform,
            Budget::Exhaustive,
            &HuntOptions::default()
        )
        .is_err());
    }

    #[test]
    fn checkpoint_resume_reproduces_result() {
        let dir = tempfile::tempdir().unwrap();
        let ckpt = dir.path().join("n4.ckpt");
        let full = hunt(
            4,
            Constraint::None,
            Budget::Exhaustive,
            &HuntOptions::default(),
        )
        .unwrap();

        // simulate an interrupted run: process only the first chunk
        let opts = HuntOptions {
            checkpoint: Some(ckpt.clone()),
            chunk: Some(10),
            ..Default::default()
        };
        let first_chunk: Vec<ColoredCycle> =
            enumerate_colorings(4, Constraint::None).take(10).collect();
        let mut hits = Vec::new();
        for c in &first_chunk {
            if !quick_unexplained(c).unwrap().is_empty() {
                hits.push(Encoding::of(c).to_string());
            }
        }
        append_lines(&found_path(&ckpt), &hits).unwrap();
        append_lines(
            &ckpt,
            &[Encoding::of(first_chunk.last().unwrap()).to_string()],
        )
        .unwrap();

        let resumed = hunt(4, Constraint::None, Budget::Exhaustive, &opts).unwrap();
        assert_eq!(resumed.reports, full.reports);
        assert_eq!(resumed.examined + 10, full.examined);
        assert!(resumed.resumed_past.is_some());
    }

    #[test]
    fn constructed_counterexamples() {
        for m in 4..=7 {
            let c = construct_counterexample_even(m).unwrap();
            assert_eq!(c.n(), 2 * m);
            assert_eq!(symmetries(&c).len(), 1, "m = {m}");
        }
        for m in [4, 6] {
            let c = construct_counterexample_even(m).unwrap();
            let r = conjecture_status(&c).unwrap();
            let b = LinearBinomial::new((1, m), (m + 1, 2 * m)).unwrap();
            assert!(r.unexplained.contains(&b), "m = {m}");
        }
        // odd gluing: the inner paths 2..m-1 and m+2..2m-1 carry opposite
        // edge phases over distinct even-position colors, so the complement
        // terms differ and the binomial is absent
        let c = construct_counterexample_even(5).unwrap();
        let b = LinearBinomial::new((1, 5), (6, 10)).unwrap();
        assert!(!conjecture_status(&c).unwrap().contains(&b));
        assert_ne!(
            adjugate_oracle_cycle(&c, 1, 5).unwrap(),
            adjugate_oracle_cycle(&c, 6, 10).unwrap()
        );
        assert!(construct_counterexample_even(3).is_err());
    }

    #[test]
    fn constraint_text_round_trip() {
        for c in [
            Constraint::None,
            Constraint::UniformVertex,
            Constraint::UniformEdge,
            Constraint::Uniform,
        ] {
            assert_eq!(c.to_string().parse::<Constraint>().unwrap(), c);
        }
        assert!("odd".parse::<Constraint>().is_err());
    }
}
