#![no_main]

use libfuzzer_sys::fuzz_target;
use theaetetus_cli::table::TableDocument;

fuzz_target!(|data: &[u8]| {
    if let Ok(doc) = TableDocument::from_csv(data) {
        // Anything accepted is the canonical table, so it must re-emit and
        // re-parse to itself.
        let emitted = doc.to_csv_string();
        let back = TableDocument::from_csv(emitted.as_bytes()).expect("emitted csv reparses");
        assert_eq!(back, doc);
    }
});
