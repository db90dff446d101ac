#![no_main]
use genocchi_core::corpus::CorpusGrid;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(grid) = CorpusGrid::from_json(data) {
        let text = serde_json::to_vec(&grid).unwrap();
        assert_eq!(CorpusGrid::from_json(&text).unwrap(), grid);
    }
});
