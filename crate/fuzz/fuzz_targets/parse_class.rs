#![no_main]

use hasse_paths::ClassKind;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(kind) = text.parse::<ClassKind>() {
        assert!(text.eq_ignore_ascii_case(kind.code()));
        assert_eq!(kind.code().parse::<ClassKind>().unwrap(), kind);
        assert_eq!(kind.partner().partner(), kind);
    }
});
