#![no_main]

use hasse_paths::ClassKind;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Some((factor, word)) = text.split_once('|') else {
        return;
    };
    for kind in [ClassKind::GM, ClassKind::GS] {
        let spec = kind.spec();
        let (Ok(f), Ok(w)) = (spec.parse_factor(factor), spec.parse_word(word)) else {
            continue;
        };
        let total = w.occurrences(&f);
        match (w.occurrences_off_axis(&f), w.occurrences_at_level(&f, 0)) {
            (Ok(off), Ok(on)) => assert_eq!(total, off + on),
            (Err(_), Err(_)) => assert!(!f.is_level_balanced()),
            _ => panic!("on/off-axis counts disagree on balance"),
        }
    }
});
