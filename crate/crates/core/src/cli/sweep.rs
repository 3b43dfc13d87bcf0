use rayon::prelude::*;

use crate::entangle::{modified_measure, EntanglementReport};
use crate::states::{FamilySpec, StateError};

/// One sweep point: the report, or the reason the state does not exist.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub spec: FamilySpec,
    pub result: Result<EntanglementReport, StateError>,
}

pub fn compute(spec: &FamilySpec, max_electrons: usize) -> Result<EntanglementReport, StateError> {
    let v = spec.build_with_limit(max_electrons)?;
    Ok(modified_measure(&v).with_family(spec))
}

/// Evaluates every point on up to `jobs` threads. The result is sorted in
/// canonical `(family, N, m)` order regardless of scheduling.
pub fn sweep(specs: &[FamilySpec], jobs: usize, max_electrons: usize) -> Vec<Point> {
    let mut specs = specs.to_vec();
    specs.sort();
    specs.dedup();
    let run = |specs: Vec<FamilySpec>| -> Vec<Point> {
        specs
            .into_par_iter()
            .map(|spec| Point { spec, result: compute(&spec, max_electrons) })
            .collect()
    };
    if jobs <= 1 {
        return specs
            .into_iter()
            .map(|spec| Point { spec, result: compute(&spec, max_electrons) })
            .collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| run(specs)),
        Err(_) => run(specs),
    }
}
