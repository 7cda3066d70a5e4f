//! Corpus sweeps written as JSON Lines.
//!
//! Groups are evaluated on a pool of worker threads; finished records go
//! through a shared sink that writes them strictly in corpus order, so the
//! output does not depend on the number of workers apart from the
//! `elapsed_ms` field.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::analysis::GroupAnalysis;
use crate::arith::prime_divisors;
use crate::checks::{
    bw_equivalence_verdict, coprime_action_verdict, lemma3_verdict, theorem_verdict, Theorem, MAX_LEVEL,
};
use crate::coprime::focal_verdict;
use crate::error::{Error, Result};
use crate::group::Limits;
use crate::spec::{realize, GroupSpec};
use crate::sylow::FittingHeight;
use crate::verdict::{CheckVerdict, Witness};

/// Levels swept by the focal check.
pub const FOCAL_LEVELS: [usize; 3] = [0, 1, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurveyCheck {
    Theorem(Theorem),
    Focal,
    Lemma3,
    Lemma2a,
    BwEquiv,
}

impl fmt::Display for SurveyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurveyCheck::Theorem(t) => write!(f, "{t}"),
            SurveyCheck::Focal => write!(f, "focal"),
            SurveyCheck::Lemma3 => write!(f, "lemma3"),
            SurveyCheck::Lemma2a => write!(f, "lemma2a"),
            SurveyCheck::BwEquiv => write!(f, "bw-equiv"),
        }
    }
}

impl FromStr for SurveyCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "focal" => SurveyCheck::Focal,
            "lemma3" => SurveyCheck::Lemma3,
            "lemma2a" => SurveyCheck::Lemma2a,
            "bw-equiv" => SurveyCheck::BwEquiv,
            other => SurveyCheck::Theorem(other.parse()?),
        })
    }
}

impl SurveyCheck {
    pub fn all() -> Vec<SurveyCheck> {
        let mut out = vec![
            SurveyCheck::Theorem(Theorem::Bw),
            SurveyCheck::Theorem(Theorem::Bs),
            SurveyCheck::Theorem(Theorem::Main),
        ];
        out.extend((1..=MAX_LEVEL).map(|k| SurveyCheck::Theorem(Theorem::Level(k))));
        out.extend([
            SurveyCheck::Focal,
            SurveyCheck::Lemma3,
            SurveyCheck::Lemma2a,
            SurveyCheck::BwEquiv,
        ]);
        out
    }

    /// Parses a comma-separated list; `all` expands to every check.
    pub fn parse_list(text: &str) -> Result<Vec<SurveyCheck>> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "all" {
                out.extend(SurveyCheck::all());
            } else {
                out.push(item.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::Parameter("no checks requested".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyRecord {
    pub spec: String,
    pub order: usize,
    pub soluble: bool,
    pub nilpotent: bool,
    pub gamma_inf_order: usize,
    pub fitting_height: FittingHeight,
    pub d_series_orders: Vec<usize>,
    pub verdicts: BTreeMap<String, CheckVerdict>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug)]
pub struct SurveyOptions {
    pub checks: Vec<SurveyCheck>,
    pub jobs: usize,
    pub limits: Limits,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            checks: SurveyCheck::all(),
            jobs: 1,
            limits: Limits::default(),
        }
    }
}

/// Evaluates one group against the requested checks. Focal verdicts are
/// recorded only for soluble groups, one per prime divisor and level.
pub fn evaluate(spec: &GroupSpec, checks: &[SurveyCheck], limits: &Limits) -> Result<SurveyRecord> {
    let started = Instant::now();
    let g = realize(spec, limits)?;
    let a = GroupAnalysis::new(&g);
    let mut verdicts = BTreeMap::new();
    for check in checks {
        match check {
            SurveyCheck::Theorem(t) => {
                let v = theorem_verdict(&a, *t)?;
                verdicts.insert(v.check_name().to_string(), v);
            }
            SurveyCheck::Focal => {
                if a.is_soluble() {
                    for p in prime_divisors(g.order()) {
                        for k in FOCAL_LEVELS {
                            let v = focal_verdict(&g, k, p, &a.delta(k), a.d_term(k))?;
                            verdicts.insert(v.check_name().to_string(), v);
                        }
                    }
                }
            }
            SurveyCheck::Lemma3 => {
                verdicts.insert("lemma3".into(), lemma3_verdict(&a));
            }
            SurveyCheck::Lemma2a => {
                verdicts.insert("lemma2a".into(), coprime_action_verdict(&a)?);
            }
            SurveyCheck::BwEquiv => {
                verdicts.insert("bw-equiv".into(), bw_equivalence_verdict(&a));
            }
        }
    }
    Ok(SurveyRecord {
        spec: spec.to_string(),
        order: g.order(),
        soluble: a.is_soluble(),
        nilpotent: a.is_nilpotent(),
        gamma_inf_order: a.residual().order(),
        fitting_height: a.fitting_height()?,
        d_series_orders: a.lower_fitting().orders(),
        verdicts,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Maps `f` over `items` on `jobs` threads, handing results to `sink` in
/// input order. `f` returning `Ok(None)` skips an item.
pub fn run_ordered<T, R, F, S>(items: &[T], jobs: usize, f: F, mut sink: S) -> Result<()>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<Option<R>> + Sync,
    S: FnMut(R) -> Result<()> + Send,
{
    struct Pending<R, S> {
        next: usize,
        ready: HashMap<usize, Result<Option<R>>>,
        sink: S,
        error: Option<Error>,
    }

    let state = Mutex::new(Pending {
        next: 0,
        ready: HashMap::new(),
        sink: &mut sink,
        error: None,
    });
    let cursor = AtomicUsize::new(0);
    let failed = AtomicBool::new(false);
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1) {
            scope.spawn(|| loop {
                if failed.load(Ordering::Relaxed) {
                    break;
                }
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let result = f(&items[i]);
                let mut st = state.lock().unwrap();
                st.ready.insert(i, result);
                loop {
                    let idx = st.next;
                    let Some(result) = st.ready.remove(&idx) else {
                        break;
                    };
                    st.next += 1;
                    let outcome = result.and_then(|r| match r {
                        Some(r) => (st.sink)(r),
                        None => Ok(()),
                    });
                    if let Err(e) = outcome {
                        if st.error.is_none() {
                            st.error = Some(e);
                        }
                        failed.store(true, Ordering::Relaxed);
                        break;
                    }
                }
            });
        }
    });
    match state.into_inner().unwrap().error {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurveySummary {
    pub groups: usize,
    pub verdicts: usize,
    pub sound: usize,
    /// `(spec, check)` for unsound verdicts on proved results.
    pub implementation_failures: Vec<(String, String)>,
    /// `(spec, check)` for unsound verdicts on open questions.
    pub candidates: Vec<(String, String)>,
}

impl SurveySummary {
    fn absorb(&mut self, record: &SurveyRecord) {
        self.groups += 1;
        for (name, v) in &record.verdicts {
            self.verdicts += 1;
            if v.sound() {
                self.sound += 1;
            } else if v.is_candidate_counterexample() {
                self.candidates.push((record.spec.clone(), name.clone()));
            } else {
                self.implementation_failures.push((record.spec.clone(), name.clone()));
            }
        }
    }

    /// 0 when everything is sound, 2 on an unsound proved result, 3 on an
    /// open-question candidate.
    pub fn exit_code(&self) -> i32 {
        if !self.implementation_failures.is_empty() {
            2
        } else if !self.candidates.is_empty() {
            3
        } else {
            0
        }
    }
}

pub fn survey<W: Write + Send>(corpus: &[GroupSpec], opts: &SurveyOptions, out: W) -> Result<SurveySummary> {
    let mut out = std::io::BufWriter::new(out);
    let mut summary = SurveySummary::default();
    run_ordered(
        corpus,
        opts.jobs,
        |spec| evaluate(spec, &opts.checks, &opts.limits).map(Some),
        |record: SurveyRecord| {
            summary.absorb(&record);
            serde_json::to_writer(&mut out, &record)?;
            out.write_all(b"\n").map_err(|e| Error::io("<survey output>", e))
        },
    )?;
    out.flush().map_err(|e| Error::io("<survey output>", e))?;
    Ok(summary)
}

pub fn survey_to_path(corpus: &[GroupSpec], opts: &SurveyOptions, path: &Path) -> Result<SurveySummary> {
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    survey(corpus, opts, file)
}

/// Drops the trailing `elapsed_ms` field from a serialized record.
pub fn strip_elapsed(line: &str) -> &str {
    match line.rfind(",\"elapsed_ms\":") {
        Some(i) => &line[..i],
        None => line,
    }
}

pub const CANDIDATE_LABEL: &str = "CANDIDATE COUNTEREXAMPLE";

#[derive(Clone, Debug, Serialize)]
pub struct HuntRecord {
    pub spec: String,
    pub order: usize,
    pub level: usize,
    pub d_k_order: usize,
    pub d_k_nilpotent: bool,
    pub status: &'static str,
    pub witness: Option<Witness>,
}

impl HuntRecord {
    /// `None` when the hypothesis fails, since such groups say nothing.
    pub fn from_verdict(
        spec: &str,
        order: usize,
        level: usize,
        d_k_order: usize,
        verdict: &CheckVerdict,
    ) -> Option<Self> {
        if !verdict.hypothesis() {
            return None;
        }
        Some(HuntRecord {
            spec: spec.to_string(),
            order,
            level,
            d_k_order,
            d_k_nilpotent: verdict.conclusion(),
            status: if verdict.sound() { "consistent" } else { CANDIDATE_LABEL },
            witness: verdict.witness().cloned(),
        })
    }

    pub fn is_candidate(&self) -> bool {
        !self.d_k_nilpotent
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HuntReport {
    pub level: usize,
    pub evaluated: usize,
    pub hypothesis_holds: usize,
    pub candidates: Vec<String>,
}

impl HuntReport {
    pub fn absorb(&mut self, record: &HuntRecord) {
        self.hypothesis_holds += 1;
        if record.is_candidate() {
            self.candidates.push(record.spec.clone());
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.candidates.is_empty() {
            0
        } else {
            3
        }
    }
}

/// Looks for groups satisfying the product property on powers of
/// δ_k*-commutators whose `D_k` is not nilpotent. Only groups meeting the
/// hypothesis are written out.
pub fn hunt<W: Write + Send>(
    level: usize,
    corpus: &[GroupSpec],
    jobs: usize,
    limits: &Limits,
    out: W,
) -> Result<HuntReport> {
    if !(2..=MAX_LEVEL).contains(&level) {
        return Err(Error::Parameter(format!(
            "hunt level must lie in 2..={MAX_LEVEL}, got {level}"
        )));
    }
    let mut out = std::io::BufWriter::new(out);
    let mut report = HuntReport {
        level,
        evaluated: corpus.len(),
        ..HuntReport::default()
    };
    run_ordered(
        corpus,
        jobs,
        |spec| {
            let g = realize(spec, limits)?;
            let a = GroupAnalysis::new(&g);
            let v = theorem_verdict(&a, Theorem::Level(level))?;
            Ok(HuntRecord::from_verdict(
                &spec.to_string(),
                g.order(),
                level,
                a.d_term(level).order(),
                &v,
            ))
        },
        |record: HuntRecord| {
            report.absorb(&record);
            serde_json::to_writer(&mut out, &record)?;
            out.write_all(b"\n").map_err(|e| Error::io("<hunt output>", e))
        },
    )?;
    out.flush().map_err(|e| Error::io("<hunt output>", e))?;
    Ok(report)
}

pub fn hunt_to_path(
    level: usize,
    corpus: &[GroupSpec],
    jobs: usize,
    limits: &Limits,
    path: &Path,
) -> Result<HuntReport> {
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    hunt(level, corpus, jobs, limits, file)
}
