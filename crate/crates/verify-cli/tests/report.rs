use std::path::PathBuf;

use verify_cli::{run, run_suite, CliError, Options, Status, SCHEMA_VERSION};

fn options() -> Options {
    let data_dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data"].iter().collect();
    Options { data_dir, ..Options::default() }
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

#[test]
fn json_is_identical_across_thread_counts() {
    let opts = options();
    let names: Vec<String> = ["identities", "cremona", "char2", "supersingular", "lattices"].map(String::from).to_vec();
    let serial = in_pool(1, || run(&names, &opts).unwrap().to_json());
    let parallel = in_pool(4, || run(&names, &opts).unwrap().to_json());
    let again = in_pool(4, || run(&names, &opts).unwrap().to_json());
    assert_eq!(serial, parallel);
    assert_eq!(parallel, again);
    let v: serde_json::Value = serde_json::from_str(&serial).unwrap();
    assert_eq!(v["schema"], SCHEMA_VERSION);
    assert!(v["suites"][0]["checks"][0].get("elapsed_ms").is_none());
}

#[test]
fn check_ids_are_unique_and_ordered() {
    let r = run_suite("lattices", &options()).unwrap();
    let ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
    let mut dedup = ids.clone();
    dedup.sort();
    dedup.dedup();
    assert_eq!(dedup.len(), ids.len());
    assert_eq!(ids[0], "genus-d8-d9");
    assert_eq!(ids.last(), Some(&"artin-sigma-3"));
}

#[test]
fn cremona_suite_passes() {
    let r = run_suite("cremona", &options()).unwrap();
    assert!(r.checks.iter().all(|c| c.status == Status::Pass), "{r:?}");
}

#[test]
fn timings_only_on_request() {
    let opts = Options { timings: true, ..options() };
    let r = run_suite("identities", &opts).unwrap();
    assert!(r.checks.iter().all(|c| c.elapsed_ms.is_some()));
}

#[test]
fn errors() {
    assert!(matches!(run_suite("nope", &options()), Err(CliError::UnknownSuite(_))));
    let missing = Options { data_dir: PathBuf::from("/nonexistent"), ..options() };
    assert!(matches!(run_suite("lattices", &missing), Err(CliError::DataMissing(_))));
    assert!(matches!(run_suite("char2", &missing), Err(CliError::DataMissing(_))));
}

#[test]
fn scan_primes_follow_options() {
    let opts = Options { primes: vec![5], ..options() };
    let r = run_suite("line-complex", &opts).unwrap();
    let scans: Vec<(&str, Status)> = r.checks.iter().filter(|c| c.id.starts_with("scan-")).map(|c| (c.id.as_str(), c.status)).collect();
    assert_eq!(scans.len(), 2);
    assert!(scans.iter().all(|(id, _)| id.starts_with("scan-f5")));
}
