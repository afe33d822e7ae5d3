//! Machine-readable analyses of codes, the randomized verification suites and the
//! study-report bundle for the classical code families.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitRow;
use crate::boolfun::{anf, classify_spectrum, nonlinearity_from_spectrum, walsh_transform, BooleanFunction, SpectralClass};
use crate::catalog::CatalogCode;
use crate::defining_set::{
    bivariate_view, boolean_from_code, code_from_defining_set, extract_defining_set,
    spectral_weight_distribution_from_spectrum, DefiningSet, SpectralWeightReport,
};
use crate::error::Result;
use crate::gf2::{Field, FieldSpec};
use crate::linear_code::{
    codes_equal, dual, is_projective, minimum_distance, projectivity_defect, small_minimum_distance,
    weight_distribution_bruteforce, BinaryCode, WeightDistribution,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub n: usize,
    pub k: usize,
    /// Absent when the code is zero or too large to enumerate and `d > 3`.
    pub d: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BooleanSummary {
    pub field: FieldSpec,
    pub n_f: usize,
    pub truth_table: String,
    pub walsh_histogram: BTreeMap<i32, u64>,
    pub classification: SpectralClass,
    pub balanced: bool,
    pub algebraic_degree: u32,
    pub nonlinearity: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Equal,
    Different,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRoutes {
    pub spectral: Option<SpectralWeightReport>,
    pub bruteforce: Option<WeightDistribution>,
    pub verdict: Verdict,
}

/// Everything the analyzer reports about one code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub code: String,
    pub parameters: Parameters,
    pub projective: bool,
    pub diagnostic: Option<String>,
    pub defining_set: Option<Vec<String>>,
    pub boolean_function: Option<BooleanSummary>,
    pub weight_distribution: WeightRoutes,
    pub notes: Vec<String>,
}

impl AnalysisReport {
    /// Flat `table,key,value` rows for the weight and spectrum tables.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("table,key,value\n");
        if let Some(b) = &self.weight_distribution.bruteforce {
            for (w, c) in b.to_map() {
                let _ = writeln!(out, "bruteforce,{w},{c}");
            }
        }
        if let Some(s) = &self.weight_distribution.spectral {
            for (w, c) in &s.weights {
                let _ = writeln!(out, "spectral,{w},{c}");
            }
        }
        if let Some(b) = &self.boolean_function {
            for (v, c) in &b.walsh_histogram {
                let _ = writeln!(out, "walsh,{v},{c}");
            }
        }
        out
    }
}

/// Runs the full analysis of `code`; `max_k` bounds every enumeration.
pub fn analyze(label: &str, code: &BinaryCode, max_k: usize) -> AnalysisReport {
    let mut notes = Vec::new();
    let k = code.dimension();
    let bruteforce = match weight_distribution_bruteforce(code, max_k) {
        Ok(d) => Some(d),
        Err(e) => {
            notes.push(format!("enumeration skipped: {e}"));
            None
        }
    };
    let d = match &bruteforce {
        Some(dist) => dist.minimum_distance(),
        None if k > 0 => small_minimum_distance(code),
        None => None,
    };
    let projective = is_projective(code);
    let diagnostic = projectivity_defect(code).map(|d| d.to_string());
    let defining_set = match extract_defining_set(code) {
        Ok(set) => Some(set.to_json().elements),
        Err(e) => {
            notes.push(format!("defining set unavailable: {e}"));
            None
        }
    };
    let mut spectral = None;
    let boolean_function = if projective {
        match boolean_from_code(code) {
            Ok(f) => {
                let spectrum = walsh_transform(&f);
                let m = f.num_vars();
                match spectral_weight_distribution_from_spectrum(m, f.weight(), &spectrum) {
                    Ok(r) => spectral = Some(r),
                    Err(e) => notes.push(format!("spectral route failed: {e}")),
                }
                let class = classify_spectrum(m, &spectrum);
                Some(BooleanSummary {
                    field: f.field().spec(),
                    n_f: f.weight(),
                    truth_table: f.to_hex(),
                    walsh_histogram: class.histogram,
                    classification: class.class,
                    balanced: class.balanced,
                    algebraic_degree: anf(&f).degree(),
                    nonlinearity: nonlinearity_from_spectrum(m, &spectrum),
                })
            }
            Err(e) => {
                notes.push(format!("f_C unavailable: {e}"));
                None
            }
        }
    } else {
        None
    };
    let verdict = match (&spectral, &bruteforce) {
        (Some(s), Some(b)) => match s.to_distribution() {
            Ok(sd) if &sd == b => Verdict::Equal,
            _ => Verdict::Different,
        },
        _ => Verdict::Skipped,
    };
    AnalysisReport {
        code: label.to_string(),
        parameters: Parameters { n: code.len(), k, d },
        projective,
        diagnostic,
        defining_set,
        boolean_function,
        weight_distribution: WeightRoutes { spectral, bruteforce, verdict },
        notes,
    }
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: &str) -> Self {
        SuiteOutcome { suite: suite.to_string(), cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random generator matrix with `n <= 64`, at most 12 rows, and some forced dependencies.
pub fn random_generator<R: Rng>(rng: &mut R) -> BinaryCode {
    let n = rng.gen_range(1..=64);
    let rows = rng.gen_range(1..=12);
    let mut matrix: Vec<BitRow> = (0..rows)
        .map(|_| BitRow::from_bits(&(0..n).map(|_| rng.gen::<bool>()).collect::<Vec<_>>()))
        .collect();
    if rows >= 2 && rng.gen_bool(0.3) {
        let (a, b) = (rng.gen_range(0..rows), rng.gen_range(0..rows));
        let mut sum = matrix[a].clone();
        sum.xor_assign(&matrix[b]);
        matrix.push(sum);
    }
    BinaryCode::from_generator(matrix).expect("consistent shape")
}

/// Extraction followed by reconstruction must return the reduced generator exactly.
pub fn verify_roundtrip(seed: u64, trials: usize) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteOutcome::new("roundtrip");
    for t in 0..trials {
        let code = random_generator(&mut rng);
        if code.dimension() == 0 {
            out.check(extract_defining_set(&code).is_err(), || format!("trial {t}: zero code accepted"));
            continue;
        }
        let ok = extract_defining_set(&code)
            .map(|set| {
                let back = code_from_defining_set(&set);
                back.rows() == &code.rref_generator()[..] && codes_equal(&back, &code).unwrap_or(false)
            })
            .unwrap_or(false);
        out.check(ok, || format!("trial {t}: [{}, {}] did not round-trip", code.len(), code.dimension()));
    }
    out
}

/// Spectral weight distribution against enumeration for random functions.
pub fn verify_spectral(seed: u64, trials: usize, degrees: &[u32], max_k: usize) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteOutcome::new("spectral");
    for &m in degrees {
        let field = Field::default_for(m)?;
        for t in 0..trials {
            let f = BooleanFunction::random(field, &mut rng);
            if f.weight() == 0 {
                continue;
            }
            let ok = crate::defining_set::verify_spectral_distribution(&f, max_k)?;
            out.check(ok, || format!("m={m} trial {t}: {}", f.to_hex()));
        }
    }
    Ok(out)
}

/// The bivariate code over GF(2^h)^2 must equal the trace code of `D`.
pub fn verify_bivariate(seed: u64, trials: usize, degrees: &[u32]) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteOutcome::new("bivariate");
    for &m in degrees {
        let field = Field::default_for(m)?;
        for t in 0..trials {
            let n = rng.gen_range(1..=field.size() + 4);
            let elements: Vec<u32> = (0..n).map(|_| rng.gen_range(0..field.size() as u32)).collect();
            let set = DefiningSet::new(field, elements)?;
            let view = bivariate_view(&set, m / 2)?;
            let ok = codes_equal(&view.code, &code_from_defining_set(&set))?;
            out.check(ok, || format!("m={m} trial {t}: codes differ"));
        }
    }
    Ok(out)
}

/// Instances whose parameters have closed forms, plus the remaining families.
pub fn catalog_instances() -> Vec<CatalogCode> {
    let mut v = Vec::new();
    v.extend((2..=10).map(|k| CatalogCode::Simplex { k }));
    v.extend((3..=8).map(|k| CatalogCode::MacDonald { k }));
    v.extend((3..=8).map(|m| CatalogCode::Hamming { m }));
    v.extend([(1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (2, 5), (1, 6)].map(|(l, m)| CatalogCode::ReedMuller { l, m }));
    v.extend([(7, 3), (15, 3), (15, 5), (15, 7), (31, 5), (31, 7), (31, 11)].map(|(n, d)| CatalogCode::Bch { n, d }));
    v.extend([7, 17, 23, 31].map(|n| CatalogCode::QuadraticResidue { n }));
    v.extend([CatalogCode::Golay23, CatalogCode::Golay24]);
    v.extend([(4, 3), (4, 5), (6, 3), (6, 7), (6, 9), (8, 5), (8, 17)].map(|(m, n)| CatalogCode::IrreducibleCyclic { m, n }));
    v
}

/// Minimum distance by enumeration, or by the small-distance search on the dual.
pub fn distance_of(code: &BinaryCode, max_k: usize) -> Option<usize> {
    minimum_distance(code, max_k).ok().or_else(|| small_minimum_distance(code))
}

/// Parameter formulas, MacDonald's two weights, and projectivity against dual distance.
pub fn verify_catalog(max_k: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::new("catalog");
    for spec in catalog_instances() {
        let code = spec.build()?;
        if let Some((n, k, d)) = spec.expected_parameters() {
            let got = (code.len(), code.dimension(), distance_of(&code, max_k));
            out.check(got == (n, k, Some(d)), || format!("{spec}: expected [{n}, {k}, {d}], got {got:?}"));
        }
        if let CatalogCode::MacDonald { k } = spec {
            let weights = weight_distribution_bruteforce(&code, max_k)?.nonzero_weights();
            let expected = vec![(1 << (k - 1)) - 1, 1 << (k - 1)];
            out.check(weights == expected, || format!("{spec}: nonzero weights {weights:?}"));
        }
        let d = dual(&code);
        if d.dimension() >= 1 && d.dimension() <= max_k {
            let dual_distance = minimum_distance(&d, max_k)?;
            let projective = is_projective(&code);
            out.check(projective == (dual_distance >= 3), || {
                format!("{spec}: projective={projective} but dual distance {dual_distance}")
            });
        }
    }
    Ok(out)
}

/// One family of the study bundle.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyReport {
    pub problem: u32,
    pub family: String,
    pub instances: Vec<AnalysisReport>,
}

/// The seven code families and the desk-scale instances analyzed for each.
pub fn study_families() -> Vec<(u32, &'static str, Vec<CatalogCode>)> {
    vec![
        (1, "golay", vec![CatalogCode::Golay23, CatalogCode::Golay24]),
        (2, "macdonald", (3..=8).map(|k| CatalogCode::MacDonald { k }).collect()),
        (
            3,
            "reed_muller",
            [(1, 3), (2, 3), (1, 4), (2, 4), (3, 4), (1, 5), (2, 5), (1, 6)]
                .map(|(l, m)| CatalogCode::ReedMuller { l, m })
                .to_vec(),
        ),
        (4, "hamming", vec![CatalogCode::Hamming { m: 3 }, CatalogCode::Hamming { m: 4 }]),
        (
            5,
            "irreducible_cyclic",
            [(4, 3), (4, 5), (6, 3), (6, 7), (6, 9), (8, 5), (8, 15), (8, 17)]
                .map(|(m, n)| CatalogCode::IrreducibleCyclic { m, n })
                .to_vec(),
        ),
        (
            6,
            "bch",
            [(7, 3), (15, 3), (15, 5), (15, 7), (31, 7), (31, 11)]
                .map(|(n, d)| CatalogCode::Bch { n, d })
                .to_vec(),
        ),
        (7, "quadratic_residue", [7, 17, 23, 31].map(|n| CatalogCode::QuadraticResidue { n }).to_vec()),
    ]
}

pub fn study_reports(max_k: usize) -> Result<Vec<FamilyReport>> {
    study_families()
        .into_iter()
        .map(|(problem, family, specs)| {
            let instances = specs
                .par_iter()
                .map(|spec| Ok(analyze(&spec.to_string(), &spec.build()?, max_k)))
                .collect::<Result<Vec<_>>>()?;
            Ok(FamilyReport { problem, family: family.to_string(), instances })
        })
        .collect()
}

/// One row per analyzed instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub family: String,
    pub instance: String,
    pub n_f: Option<usize>,
    pub dimension: Option<u32>,
    pub spectrum: Option<String>,
    pub degree: Option<u32>,
    pub nonlinearity: Option<u32>,
    pub classification: Option<SpectralClass>,
    pub verdict: Verdict,
}

pub fn summary_rows(reports: &[FamilyReport]) -> Vec<SummaryRow> {
    reports
        .iter()
        .flat_map(|fam| {
            fam.instances.iter().map(move |r| {
                let b = r.boolean_function.as_ref();
                SummaryRow {
                    family: fam.family.clone(),
                    instance: r.code.clone(),
                    n_f: b.map(|b| b.n_f),
                    dimension: r.weight_distribution.spectral.as_ref().map(|s| s.dimension),
                    spectrum: b.map(|b| {
                        b.walsh_histogram.iter().map(|(v, c)| format!("{v}:{c}")).collect::<Vec<_>>().join(" ")
                    }),
                    degree: b.map(|b| b.algebraic_degree),
                    nonlinearity: b.map(|b| b.nonlinearity),
                    classification: b.map(|b| b.classification),
                    verdict: r.weight_distribution.verdict,
                }
            })
        })
        .collect()
}

pub fn summary_csv(rows: &[SummaryRow]) -> String {
    let opt = |v: Option<String>| v.unwrap_or_default();
    let mut out = String::from("family,instance,n_f,dimension,spectrum,degree,nonlinearity,classification,verdict\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},\"{}\",{},{},\"{}\",{},{},{},{}",
            r.family,
            r.instance,
            opt(r.n_f.map(|v| v.to_string())),
            opt(r.dimension.map(|v| v.to_string())),
            opt(r.spectrum.clone()),
            opt(r.degree.map(|v| v.to_string())),
            opt(r.nonlinearity.map(|v| v.to_string())),
            opt(r.classification.map(|c| c.to_string())),
            serde_json::to_value(r.verdict).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
        );
    }
    out
}
