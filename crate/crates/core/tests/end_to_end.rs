use std::path::PathBuf;

use hyperlab::classifiers::{is_alpha_beta, is_in_invq_closed, is_ordinary, level_criterion, LevelRange, Variant};
use hyperlab::hyperstructure::{KrasnerHyperring, StructureFile};
use hyperlab::implication::{is_fuzzifying, is_t_implication_based};
use hyperlab::oracle::catalog::{by_name, catalog};
use hyperlab::oracle::corpus::{gen_fuzzy, Corpus};
use hyperlab::{AlphaBeta, ClassReport, IVFuzzySet, ImplicationOperator, IntervalValue, PointRelation};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn load() -> (KrasnerHyperring, IVFuzzySet) {
    let r = StructureFile::load(data("paper_24.json")).unwrap().build().unwrap().validated().unwrap();
    let a = IVFuzzySet::load(data("paper_24_fuzzy.json")).unwrap();
    (r, a)
}

#[test]
fn data_files_match_catalog() {
    let (r, _) = load();
    let named = by_name("paper_24").unwrap();
    assert_eq!(StructureFile::from_structure(&r), StructureFile::from_structure(&named));
    assert!(r.validate().unwrap().all_hold());
}

#[test]
fn structure_files_round_trip() {
    for entry in catalog().unwrap() {
        let file = StructureFile::from_structure(&entry.structure);
        let back = StructureFile::from_json(&file.to_json()).unwrap().build().unwrap();
        assert_eq!(StructureFile::from_structure(&back), file, "{}", entry.name);
    }
}

#[test]
fn example_profile() {
    let (r, a) = load();
    let ab = AlphaBeta::new(PointRelation::In, PointRelation::InOrQ).unwrap();
    assert!(is_alpha_beta(&r, &a, ab).unwrap().verdict);
    assert!(is_in_invq_closed(&r, &a, Variant::Corrected).unwrap().verdict);
    assert!(!is_ordinary(&r, &a).unwrap().verdict);
    assert!(!level_criterion(&r, &a, &LevelRange::Full).unwrap().verdict);
    assert!(level_criterion(&r, &a, &LevelRange::Lower).unwrap().verdict);
    assert!(!is_fuzzifying(&r, &a).unwrap().verdict);
    assert!(is_t_implication_based(&r, &a, ImplicationOperator::Godel, &IntervalValue::HALF).unwrap().verdict);
}

#[test]
fn reports_round_trip_through_json() {
    let (r, a) = load();
    let report = is_ordinary(&r, &a).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    let back: ClassReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    assert_eq!(back.violation.unwrap().target, Some(3));
}

#[test]
fn generated_sets_round_trip() {
    let r = by_name("zmod(4,2,4)").unwrap();
    let corpus = Corpus::new(7, 10, 25, false).unwrap();
    for a in gen_fuzzy(&r, &corpus).unwrap() {
        let back = IVFuzzySet::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }
}
