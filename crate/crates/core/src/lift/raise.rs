//! Composite driver: raise a graph to a target girth.

use std::fmt;
use std::str::FromStr;

use super::voltage::greedy_bound;
use super::{cayley_voltage_lift, double_cover_lift, greedy_voltage_lift, matching_lift, LiftError, LiftResult};
use crate::graph::{edge_color, Girth, Graph};
use crate::group::{cayley_girth, find_half_generator_set, FiniteGroup, GeneratorSet};

/// Largest cyclic group the stepwise strategy will build on its own.
const MAX_AUTO_GROUP: u128 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Double cover on odd girth, greedy voltage lift on even girth, with
    /// the cyclic group sized by the cycle-count bound at every step.
    Stepwise,
    /// One voltage lift coloured by a generator set of a high-girth Cayley
    /// graph; the set is searched for when not supplied.
    Cayley,
    /// One lift through a companion graph.
    Matching,
    /// Stepwise for a gap of at most 2, otherwise Cayley or matching when
    /// the resources for them are present.
    #[default]
    Auto,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Stepwise => "stepwise",
            Strategy::Cayley => "cayley",
            Strategy::Matching => "matching",
            Strategy::Auto => "auto",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "stepwise" => Strategy::Stepwise,
            "cayley" => Strategy::Cayley,
            "matching" => Strategy::Matching,
            "auto" => Strategy::Auto,
            _ => return Err(format!("unknown strategy `{s}`")),
        })
    }
}

#[derive(Debug, Clone)]
pub struct Resources {
    pub group: Option<FiniteGroup>,
    pub generators: Option<GeneratorSet>,
    pub companion: Option<Graph>,
    /// Draws allowed when searching for a generator set.
    pub search_budget: usize,
    pub seed: u64,
}

impl Default for Resources {
    fn default() -> Self {
        Resources {
            group: None,
            generators: None,
            companion: None,
            search_budget: 100_000,
            seed: 0,
        }
    }
}

pub fn raise_girth(g: &Graph, target: usize, strategy: Strategy, resources: &Resources) -> Result<LiftResult, LiftError> {
    let girth = g.girth();
    if girth.at_least(target) {
        return Ok(LiftResult::identity(g));
    }
    let gap = target - girth.finite().unwrap_or(target);
    let strategy = match strategy {
        Strategy::Auto if gap > 2 && resources.group.is_some() => Strategy::Cayley,
        Strategy::Auto if gap > 2 && resources.companion.is_some() => Strategy::Matching,
        Strategy::Auto => Strategy::Stepwise,
        s => s,
    };
    let start = LiftResult::identity(g);
    match strategy {
        Strategy::Stepwise => stepwise(start, target),
        Strategy::Cayley => {
            let h = resources.group.as_ref().ok_or(LiftError::MissingResource("group"))?;
            let s = match &resources.generators {
                Some(s) => s.clone(),
                None => {
                    let colors = edge_color(g).num_colors();
                    find_half_generator_set(h, colors, target, resources.search_budget, resources.seed)?
                }
            };
            let cg = cayley_girth(h, &s);
            if !cg.at_least(target) {
                return Err(LiftError::CayleyGirthTooSmall { girth: cg, target });
            }
            Ok(start.then(cayley_voltage_lift(g, h, &s)?))
        }
        Strategy::Matching => {
            let c = resources
                .companion
                .as_ref()
                .ok_or(LiftError::MissingResource("companion graph"))?;
            let cg = c.girth();
            if !cg.at_least(target) {
                return Err(LiftError::CompanionGirthTooSmall { girth: cg, target });
            }
            Ok(start.then(matching_lift(g, c)?))
        }
        Strategy::Auto => unreachable!(),
    }
}

fn stepwise(mut acc: LiftResult, target: usize) -> Result<LiftResult, LiftError> {
    loop {
        let girth = acc.graph.girth();
        let Girth::Finite(k) = girth else {
            return Ok(acc);
        };
        if k >= target {
            return Ok(acc);
        }
        let step = if k % 2 == 1 {
            double_cover_lift(&acc.graph)?
        } else {
            let order = greedy_bound(acc.graph.max_degree(), k).saturating_add(1);
            if order > MAX_AUTO_GROUP {
                return Err(LiftError::GroupTooLarge(order));
            }
            greedy_voltage_lift(&acc.graph, &FiniteGroup::cyclic(order as usize))?
        };
        if step.graph.girth() <= girth {
            return Err(LiftError::NoProgress(girth));
        }
        acc = acc.then(step);
    }
}
