#![no_main]

use libfuzzer_sys::fuzz_target;
use theaetetus_cli::table::TableDocument;

fuzz_target!(|data: &[u8]| {
    if let Ok(doc) = TableDocument::from_json(data) {
        let emitted = doc.to_json_string();
        let back = TableDocument::from_json(emitted.as_bytes()).expect("emitted json reparses");
        assert_eq!(back, doc);
    }
});
