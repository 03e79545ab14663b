//! Recognition pipeline: strip a simplicial prefix and the universal
//! vertices, collapse twins, match the quotient against the catalog, then
//! rebuild and verify a saucer or tent partition on the whole graph.

mod attach;
mod build;
mod partition;

pub use attach::{
    check_hole, check_t0, classify_vs_c7, classify_vs_t0, t0_label, AttachViolation, C7Attachment, Classification,
    T0Attachment,
};
pub use build::{build_saucer_from_hole, build_tent_from_t0, BuildFailure, Built};
pub use partition::{
    verify_saucer_partition, verify_special_partition, verify_tent_partition, yz_dichotomy, SaucerPartition,
    SpecialPartition, TentPartition, Violation, YzDichotomy,
};

use serde::{Deserialize, Serialize};

use crate::catalog::{match_catalog, CatalogKind, MATCH_LIMIT};
use crate::decompose::{simplicial_prefix, strip_universals, twin_classes};
use crate::graph::Graph;
use crate::oracle::{self, Embedding, VERDICT_LIMIT};

/// Outcome of [`recognize`].
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    InClassWithC7 { partition: SaucerPartition },
    InClassWithT0 { partition: TentPartition },
    NotInClass(Rejection),
}

impl Verdict {
    pub fn in_class(&self) -> bool {
        !matches!(self, Verdict::NotInClass(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::InClassWithC7 { .. } => "in_class_with_c7",
            Verdict::InClassWithT0 { .. } => "in_class_with_t0",
            Verdict::NotInClass(_) => "not_in_class",
        }
    }
}

/// Pipeline stage at which a graph was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectStage {
    /// The simplicial prefix consumed every vertex.
    Chordal,
    /// The twin quotient has more than twelve vertices.
    QuotientTooLarge,
    /// The twin quotient matches no catalog graph.
    NoCatalogMatch,
    /// The partition rebuilt around the catalog anchor failed.
    PartitionFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub stage: RejectStage,
    pub reason: String,
    /// A forbidden induced subgraph, when one was found.
    pub witness: Option<Embedding>,
    pub failure: Option<BuildFailure>,
}

/// One step of the pipeline, for the report log.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub stage: String,
    pub detail: String,
}

/// Data produced by the strip-down steps, in ids of the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    /// Simplicial elimination prefix, in removal order.
    pub prefix: Vec<usize>,
    /// Universal vertices of the graph without the prefix.
    pub universals: Vec<usize>,
    /// Twin classes of what remains; empty when the prefix took everything.
    pub classes: Vec<Vec<usize>>,
    /// Catalog entry the quotient matched, if any.
    pub catalog_entry: Option<String>,
    /// `catalog_vertex[k]` is the catalog vertex matched by class `k`.
    pub catalog_vertex: Vec<usize>,
}

impl Decomposition {
    /// Smallest member of each twin class.
    pub fn reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionReport {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub decomposition: Decomposition,
    pub stages: Vec<Stage>,
}

/// Decides membership in the class of (2P3, C4, C6)-free graphs with an
/// induced C7 or T0, returning a verified partition or the rejection.
pub fn recognize(g: &Graph) -> RecognitionReport {
    let mut stages = Vec::new();
    let mut log = |stage: &str, detail: String| {
        stages.push(Stage {
            stage: stage.to_string(),
            detail,
        })
    };
    let prefix = simplicial_prefix(g);
    log(
        "simplicial_prefix",
        format!("removed {} vertices, {} remain", prefix.order.len(), prefix.remainder.len()),
    );
    let mut decomposition = Decomposition {
        prefix: prefix.order.clone(),
        universals: Vec::new(),
        classes: Vec::new(),
        catalog_entry: None,
        catalog_vertex: Vec::new(),
    };
    let finish = |verdict: Verdict, decomposition: Decomposition, stages: Vec<Stage>| RecognitionReport {
        verdict,
        decomposition,
        stages,
    };

    if prefix.is_chordal() {
        let verdict = reject(g, RejectStage::Chordal, "the graph is chordal".into(), None);
        return finish(verdict, decomposition, stages);
    }
    let (core, core_ids) = g.induced_subgraph(&prefix.remainder).expect("remainder is nonempty");
    let split = strip_universals(&core);
    decomposition.universals = split.universals.iter().map(|v| core_ids[v]).collect();
    log("universals", format!("{} universal vertices", split.universals.len()));
    let Some((rest, rest_ids)) = split.remainder else {
        // A complete graph has simplicial vertices, so this is unreachable
        // for a maximal prefix; reject defensively.
        let verdict = reject(g, RejectStage::NoCatalogMatch, "the core is complete".into(), None);
        return finish(verdict, decomposition, stages);
    };
    let twins = twin_classes(&rest);
    decomposition.classes = twins
        .classes
        .iter()
        .map(|c| c.iter().map(|&v| core_ids[rest_ids[v]]).collect())
        .collect();
    log("twin_classes", format!("{} twin classes", twins.classes.len()));
    if twins.quotient.n() > MATCH_LIMIT {
        let verdict = reject(
            g,
            RejectStage::QuotientTooLarge,
            format!("the twin quotient has {} vertices", twins.quotient.n()),
            None,
        );
        return finish(verdict, decomposition, stages);
    }
    let matched = match_catalog(&twins.quotient).expect("quotient size checked");
    let Some(matched) = matched else {
        log("catalog", "no match".into());
        let verdict = reject(
            g,
            RejectStage::NoCatalogMatch,
            "the twin quotient matches no catalog graph".into(),
            None,
        );
        return finish(verdict, decomposition, stages);
    };
    log("catalog", format!("matched {}", matched.entry.name));
    decomposition.catalog_entry = Some(matched.entry.name.clone());
    decomposition.catalog_vertex = matched.bijection.clone();

    // Representative in G of the class matched to catalog vertex `c`.
    let reps = decomposition.reps();
    let rep_of = |c: usize| -> usize {
        let k = matched.bijection.iter().position(|&b| b == c).expect("bijection is onto");
        reps[k]
    };
    let verdict = match matched.kind {
        CatalogKind::HoleFamily => {
            let hole: [usize; 7] = std::array::from_fn(rep_of);
            match build_saucer_from_hole(g, &hole).expect("catalog hole lifts to an induced hole") {
                Built::Partition(partition) => {
                    log("build", format!("7-saucer partition with |A| = {}", partition.a.len()));
                    Verdict::InClassWithC7 { partition }
                }
                Built::Failed(f) => {
                    log("build", f.reason.clone());
                    reject(g, RejectStage::PartitionFailed, f.reason.clone(), Some(f))
                }
            }
        }
        CatalogKind::T0 | CatalogKind::T1 => {
            let t: [usize; 9] = std::array::from_fn(rep_of);
            match build_tent_from_t0(g, &t).expect("catalog T0 lifts to an induced T0") {
                Built::Partition(partition) => {
                    log("build", "tent partition".into());
                    Verdict::InClassWithT0 { partition }
                }
                Built::Failed(f) => {
                    log("build", f.reason.clone());
                    reject(g, RejectStage::PartitionFailed, f.reason.clone(), Some(f))
                }
            }
        }
    };
    finish(verdict, decomposition, stages)
}

/// Builds a rejection, attaching an oracle witness at desk scale.
fn reject(g: &Graph, stage: RejectStage, reason: String, failure: Option<BuildFailure>) -> Verdict {
    let mut witness = failure
        .as_ref()
        .and_then(|f| f.attachment.as_ref())
        .and_then(|a| a.witness.clone())
        .filter(|w| w.pattern != "P7");
    if witness.is_none() && g.n() <= VERDICT_LIMIT {
        witness = oracle::class_verdict(g).ok().and_then(|v| v.forbidden_witness().cloned());
    }
    Verdict::NotInClass(Rejection {
        stage,
        reason,
        witness,
        failure,
    })
}
