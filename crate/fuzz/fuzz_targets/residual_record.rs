#![no_main]
use genocchi_core::verifier::ResidualRecord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(record) = serde_json::from_slice::<ResidualRecord>(data) {
        let text = serde_json::to_string(&record).unwrap();
        let back: ResidualRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, record);
    }
});
