mod oracle;

use std::collections::BTreeSet;

use pentaplane::enumerate::{count_by_order, DEFAULT_CAP};
use pentaplane::{
    build_named, enumerate_pentagulations, enumerate_resumable, verify_theorems, EnumerationConfig,
    Error, Filters, PlaneGraph,
};

fn codes_of_order(graphs: &[PlaneGraph], n: usize) -> BTreeSet<pentaplane::CanonicalCode> {
    graphs
        .iter()
        .filter(|g| g.vertex_count() == n)
        .map(PlaneGraph::canonical_code)
        .collect()
}

#[test]
fn matches_brute_force_through_eight_vertices() {
    let graphs = enumerate_pentagulations(&EnumerationConfig::new(8)).unwrap();
    for n in 3..=8 {
        assert_eq!(
            codes_of_order(&graphs, n),
            oracle::pentagulation_classes(n),
            "n = {n}"
        );
    }
    assert_eq!(codes_of_order(&graphs, 5).len(), 1);
    assert!(codes_of_order(&graphs, 6).is_empty());
    assert!(codes_of_order(&graphs, 7).is_empty());
}

#[test]
fn no_pentagulations_off_the_residue_class() {
    // 5f = 2e with n - e + f = 2 has no solution unless n = 2 mod 3.
    for n in 3..40usize {
        let solvable = (n..3 * n).any(|e| {
            let f = 2 + e as i64 - n as i64;
            f > 0 && 5 * f == 2 * e as i64
        });
        assert_eq!(solvable, n % 3 == 2, "n = {n}");
    }
}

#[test]
fn c5_alone_up_to_seven() {
    for max_n in 5..=7 {
        let graphs = enumerate_pentagulations(&EnumerationConfig::new(max_n)).unwrap();
        assert_eq!(graphs.len(), 1);
        assert_eq!(
            graphs[0].canonical_code(),
            build_named("c5").unwrap().canonical_code()
        );
    }
    assert!(enumerate_pentagulations(&EnumerationConfig::new(4))
        .unwrap()
        .is_empty());
}

#[test]
fn eight_vertices_include_script_h() {
    let graphs = enumerate_pentagulations(&EnumerationConfig::new(8)).unwrap();
    let h = build_named("script_h").unwrap().canonical_code();
    assert!(graphs.iter().any(|g| g.canonical_code() == h));
}

#[test]
fn every_graph_is_a_distinct_canonical_pentagulation() {
    let graphs = enumerate_pentagulations(&EnumerationConfig::new(14)).unwrap();
    let mut seen = BTreeSet::new();
    for g in &graphs {
        assert!(g.is_pentagulation());
        assert_eq!(&g.canonical_form(), g);
        assert!(seen.insert(g.canonical_code()));
        let n = g.vertex_count();
        assert_eq!(n % 3, 2);
        assert_eq!(3 * g.edge_count(), 5 * (n - 2));
    }
    let counts = count_by_order(&graphs);
    assert_eq!(counts.values().sum::<usize>(), graphs.len());
}

#[test]
fn output_does_not_depend_on_workers() {
    let one = enumerate_pentagulations(&EnumerationConfig::new(14).with_jobs(1)).unwrap();
    let three = enumerate_pentagulations(&EnumerationConfig::new(14).with_jobs(3)).unwrap();
    assert_eq!(one, three);
}

#[test]
fn filters_select_a_subset() {
    let all = enumerate_pentagulations(&EnumerationConfig::new(11)).unwrap();
    let filters = Filters {
        diameter: Some(3),
        girth_min: Some(5),
        delta_min: None,
    };
    let some = enumerate_pentagulations(&EnumerationConfig::new(11).with_filters(filters)).unwrap();
    let want: Vec<PlaneGraph> = all
        .into_iter()
        .filter(|g| {
            let rot = oracle::rot_of(g);
            oracle::diameter(&rot) == 3 && oracle::girth(&rot) >= Some(5)
        })
        .collect();
    assert_eq!(some, want);
    let counterexample = build_named("girth5_counterexample")
        .unwrap()
        .canonical_code();
    assert!(some.iter().any(|g| g.canonical_code() == counterexample));
}

#[test]
fn cap_is_enforced_and_adjustable() {
    assert_eq!(
        enumerate_pentagulations(&EnumerationConfig::new(DEFAULT_CAP + 1)),
        Err(Error::CapExceeded {
            max_n: DEFAULT_CAP + 1,
            cap: DEFAULT_CAP
        })
    );
    assert_eq!(
        enumerate_pentagulations(&EnumerationConfig::new(8).with_cap(5)),
        Err(Error::CapExceeded { max_n: 8, cap: 5 })
    );
}

#[test]
fn resume_file_reproduces_the_run() {
    let dir = std::env::temp_dir().join(format!("pentaplane-resume-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("state.jsonl");
    let cfg = EnumerationConfig::new(11);
    let direct = enumerate_pentagulations(&cfg).unwrap();
    let first = enumerate_resumable(&cfg, &path).unwrap();
    assert_eq!(first, direct);

    // Drop the last finished subtree, as if the run had been interrupted.
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    assert!(lines.len() > 2);
    lines.pop();
    let torn = format!("{}\n{{\"index\": 0, \"fou", lines.join("\n"));
    std::fs::write(&path, torn).unwrap();
    assert_eq!(enumerate_resumable(&cfg, &path).unwrap(), direct);

    let other = EnumerationConfig::new(8);
    assert!(matches!(
        enumerate_resumable(&other, &path),
        Err(Error::ResumeMismatch(_))
    ));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verification_up_to_eleven() {
    let report = verify_theorems(&EnumerationConfig::new(11)).unwrap();
    assert!(report.is_clean());
    assert!(!report.halted);
    assert_eq!(report.graphs_checked, 34);
    assert!(report.girth5_diameter3 > 0);
    assert!(report.max_degree_girth5_diameter3.unwrap() <= 7);

    let filters = Filters {
        diameter: Some(3),
        girth_min: None,
        delta_min: None,
    };
    let report = verify_theorems(&EnumerationConfig::new(8).with_filters(filters)).unwrap();
    assert!(report.is_clean());
    assert_eq!(
        report.tally("no_triangles").unwrap().graphs_checked,
        report.graphs_checked
    );

    let report = verify_theorems(&EnumerationConfig::new(5)).unwrap();
    assert!(report.is_clean());
    assert_eq!(report.graphs_checked, 1);
}
