//! The full construction: base graph, layers, girth lift, pendants, code.

use std::fmt::Write as _;

use super::{
    attach_dummies, build_base_graph, extend_to_t, BaseKind, BaseSpec, CodeGraph, ConstructError, Lifted,
    LayeredGraph, ensure_girth,
};
use crate::code::{emit_code, rate_report, verify_seq_recovery, CodeManifest, RateReport, Report, SeqRecCode};
use crate::graph::{Girth, Graph};
use crate::group::FiniteGroup;
use crate::lift::{Resources, Strategy};

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub r: usize,
    pub t: usize,
    /// Build the base for this smaller `t` first and extend it.
    pub from_t: Option<usize>,
    pub base: BaseSpec,
    pub strategy: Strategy,
    pub group: Option<FiniteGroup>,
    pub companion: Option<Graph>,
    pub seed: u64,
    pub size_hint: usize,
    /// Erasure-pattern budget for verification; `0` skips it.
    pub budget: u64,
    /// Draws allowed when searching for a Cayley generator set.
    pub search_budget: usize,
}

impl PipelineConfig {
    pub fn new(r: usize, t: usize) -> Self {
        PipelineConfig {
            r,
            t,
            from_t: None,
            base: BaseSpec::Auto,
            strategy: Strategy::Auto,
            group: None,
            companion: None,
            seed: 0,
            size_hint: 0,
            budget: 1_000_000,
            search_budget: 200_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub config: PipelineConfig,
    /// The layered graph before lifting.
    pub temp: LayeredGraph,
    pub lifted: Lifted,
    pub code_graph: CodeGraph,
    pub code: SeqRecCode,
    pub girth: Girth,
    pub rate: RateReport,
    pub report: Option<Report>,
}

pub fn run_pipeline(cfg: &PipelineConfig) -> Result<PipelineOutput, ConstructError> {
    let t0 = cfg.from_t.unwrap_or(cfg.t);
    if t0 > cfg.t || !(cfg.t - t0).is_multiple_of(2) {
        return Err(ConstructError::InfeasibleParams(format!(
            "cannot extend from t = {t0} to t = {}; the difference must be non-negative and even",
            cfg.t
        )));
    }
    let mut temp = build_base_graph(cfg.r, t0, cfg.base, cfg.size_hint, cfg.seed)?;
    if t0 < cfg.t {
        temp = extend_to_t(&temp, cfg.t)?;
    }
    temp.validate()?;
    let resources = Resources {
        group: cfg.group.clone(),
        generators: None,
        companion: cfg.companion.clone(),
        search_budget: cfg.search_budget,
        seed: cfg.seed,
    };
    let lifted = ensure_girth(&temp, cfg.strategy, &resources)?;
    let girth = lifted.layered.graph.girth();
    let code_graph = attach_dummies(&lifted.layered);
    let code = emit_code(&code_graph);
    let rate = rate_report(&code);
    let report = (cfg.budget > 0).then(|| verify_seq_recovery(&code, cfg.t, cfg.budget, cfg.seed));
    Ok(PipelineOutput {
        config: cfg.clone(),
        temp,
        lifted,
        code_graph,
        code,
        girth,
        rate,
        report,
    })
}

impl PipelineOutput {
    /// Every violated guarantee, as one line each. Empty when the instance
    /// is sound.
    pub fn invariant_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let t = self.config.t;
        if !self.girth.at_least(t + 1) {
            out.push(format!("girth {} is below t + 1 = {}", self.girth, t + 1));
        }
        if let Err(e) = self.lifted.layered.validate() {
            out.push(e.to_string());
        }
        if let Err(e) = self.code.check_locality() {
            out.push(e.to_string());
        }
        if !self.rate.meets_optimal {
            out.push(format!("rate {} is below the optimum {}", self.rate.rate, self.rate.optimal));
        }
        if !self.rate.meets_moore_floor {
            out.push(format!("n = {} is below r^((t+1)/2) = {:.3}", self.rate.n, self.rate.moore_floor));
        }
        if let Some(rep) = &self.report {
            if !rep.passed() {
                out.push(format!("erasure verification: {rep}"));
            }
        }
        out
    }

    pub fn code_manifest(&self) -> CodeManifest {
        CodeManifest::new(
            &self.rate,
            self.config.r,
            self.config.t,
            self.girth,
            self.config.seed,
            self.report.as_ref(),
        )
    }

    /// `key: value` lines describing how the instance was built.
    pub fn manifest_text(&self) -> String {
        let cfg = &self.config;
        let lg = &self.lifted.layered;
        let mut m = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(m, "{k}: {v}");
        };
        kv("r", cfg.r.to_string());
        kv("t", cfg.t.to_string());
        kv("from_t", cfg.from_t.map_or("none".into(), |x| x.to_string()));
        kv("seed", cfg.seed.to_string());
        kv("size_hint", cfg.size_hint.to_string());
        kv("base", cfg.base.resolve(cfg.from_t.unwrap_or(cfg.t)).to_string());
        kv(
            "base_kind",
            match lg.base_kind {
                BaseKind::EvenBase => "even".into(),
                BaseKind::OddBase => "odd".into(),
            },
        );
        kv("strategy", cfg.strategy.to_string());
        kv("group", cfg.group.as_ref().map_or("none".into(), |g| g.spec().to_string()));
        kv("pre_lift_vertices", self.temp.graph.order().to_string());
        kv("pre_lift_edges", self.temp.graph.edge_count().to_string());
        kv("pre_lift_girth", self.temp.graph.girth().to_string());
        for (i, st) in self.lifted.lift.stages.iter().enumerate() {
            let mut v = format!("{} x{} girth={}", st.method, st.multiplier, st.girth);
            if !st.detail.is_empty() {
                let _ = write!(v, " ({})", st.detail);
            }
            kv(&format!("stage_{}", i + 1), v);
        }
        kv("multiplier", self.lifted.lift.multiplier.to_string());
        kv("vertices", lg.graph.order().to_string());
        kv("edges", lg.graph.edge_count().to_string());
        let mut sizes: Vec<String> = lg
            .layers
            .iter()
            .enumerate()
            .map(|(i, l)| format!("U{i}={}", l.len()))
            .collect();
        if !lg.lower.is_empty() {
            sizes.push(format!("L0={}", lg.lower.len()));
        }
        kv("layers", sizes.join(" "));
        kv("dummies", self.code_graph.dummies.len().to_string());
        kv("girth", self.girth.to_string());
        kv("n", self.rate.n.to_string());
        kv("k", self.rate.k.to_string());
        kv("m", self.code.m().to_string());
        kv("rate", self.rate.rate.to_string());
        kv("optimal_rate", self.rate.optimal.to_string());
        kv("rate_optimal", self.rate.equals_optimal.to_string());
        kv("moore_floor", format!("{:.3}", self.rate.moore_floor));
        kv("moore_floor_met", self.rate.meets_moore_floor.to_string());
        kv("verification", self.report.as_ref().map_or("skipped".into(), |r| r.to_string()));
        m
    }
}
