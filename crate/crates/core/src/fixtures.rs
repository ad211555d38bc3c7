//! Bundled reference matrices with known exponent semigroups.

use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exponent::{exponent_semigroup, StateBudget};
use crate::interchange::matrix_from_value;
use crate::matrix::RationalMatrix;
use crate::semigroup::SubsemigroupDesc;

const BUNDLED: &[(&str, &str)] = &[
    ("trivial", include_str!("../fixtures/trivial.json")),
    ("full", include_str!("../fixtures/full.json")),
    ("cyclic-3", include_str!("../fixtures/cyclic-3.json")),
    ("two-gen-2-5", include_str!("../fixtures/two-gen-2-5.json")),
    ("tail-from-4", include_str!("../fixtures/tail-from-4.json")),
    ("gens-3-5-7", include_str!("../fixtures/gens-3-5-7.json")),
    ("gens-3-4", include_str!("../fixtures/gens-3-4.json")),
    ("gens-4-6-17", include_str!("../fixtures/gens-4-6-17.json")),
    ("gens-5-33-52", include_str!("../fixtures/gens-5-33-52.json")),
    ("gens-5-7", include_str!("../fixtures/gens-5-7.json")),
    ("gens-6-9-20", include_str!("../fixtures/gens-6-9-20.json")),
];

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub expected: SubsemigroupDesc,
    /// Matricial dimension of `expected`.
    pub matrix_dim: u64,
    pub matrix: RationalMatrix,
}

#[derive(Deserialize)]
struct FixtureFile {
    name: String,
    generators: Vec<u64>,
    matrix_dim: u64,
    matrix: Value,
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Self> {
        let file: FixtureFile = serde_json::from_str(text).map_err(|e| Error::Fixture(e.to_string()))?;
        let expected = if file.generators.is_empty() {
            SubsemigroupDesc::trivial()
        } else {
            SubsemigroupDesc::from_generators(&file.generators)?
        };
        let matrix = matrix_from_value(&file.matrix).map_err(|e| Error::Fixture(format!("{}: {e}", file.name)))?;
        Ok(Self { name: file.name, expected, matrix_dim: file.matrix_dim, matrix })
    }
}

pub fn bundled() -> Vec<Fixture> {
    BUNDLED
        .iter()
        .map(|(name, text)| Fixture::parse(text).unwrap_or_else(|e| panic!("bundled fixture {name}: {e}")))
        .collect()
}

/// Every `*.json` in `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(Error::Fixture(format!("no fixtures in {}", dir.display())));
    }
    paths.iter().map(|p| Fixture::parse(&std::fs::read_to_string(p)?)).collect()
}

#[derive(Clone, Debug)]
pub struct FixtureOutcome {
    pub name: String,
    pub expected: SubsemigroupDesc,
    pub computed: Result<SubsemigroupDesc, String>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.computed.as_ref().is_ok_and(|c| c == &self.expected)
    }
}

/// Runs the engine on each fixture, one thread per fixture.
pub fn verify_all(fixtures: &[Fixture], budget: StateBudget) -> Vec<FixtureOutcome> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = fixtures
            .iter()
            .map(|f| {
                scope.spawn(move || FixtureOutcome {
                    name: f.name.clone(),
                    expected: f.expected.clone(),
                    computed: exponent_semigroup(&f.matrix, budget)
                        .map(|a| a.classification)
                        .map_err(|e| e.to_string()),
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("fixture worker panicked")).collect()
    })
}
