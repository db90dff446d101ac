#![no_main]
use genocchi_core::corpus::table_for;
use genocchi_core::format::{parse_facet_file, FacetFile};
use genocchi_core::simplicial::ball_check;
use genocchi_core::verifier::verify_ball;
use libfuzzer_sys::fuzz_target;

// Face enumeration is exponential in n; keep iterations fast.
const MAX_N: usize = 8;
const MAX_FACETS: usize = 64;

fuzz_target!(|data: &[u8]| {
    let Ok(file) = parse_facet_file(data) else {
        return;
    };
    if file.n > MAX_N || file.facets.len() > MAX_FACETS {
        return;
    }
    let complex = file.to_complex().expect("validated files build a complex");
    // Accepted files survive a write/read cycle unchanged up to normalization.
    let again = FacetFile::from_complex(&complex, file.name.clone()).to_json();
    let reparsed = parse_facet_file(again.as_bytes()).expect("own output parses");
    assert_eq!(reparsed.to_complex().unwrap(), complex);

    if ball_check(&complex).passes() {
        let report = verify_ball(&complex, &table_for(complex.n())).expect("screened ball");
        assert_eq!(report.n, complex.n());
    } else {
        assert!(verify_ball(&complex, &table_for(complex.n())).is_err());
    }
});
