#![no_main]

use hasse_paths::order::{covered_by_rewrite, covers_by_rewrite, delta_count, nabla_count};
use hasse_paths::ClassKind;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for kind in ClassKind::ALL {
        let spec = kind.spec();
        let Ok(word) = spec.parse_word(text) else {
            continue;
        };
        assert_eq!(word.reflect().reflect(), word);
        assert_eq!(word.to_string().len(), word.len().max(1));
        if spec.validate(&word).is_ok() {
            let up = covers_by_rewrite(&word, kind).unwrap();
            let down = covered_by_rewrite(&word, kind).unwrap();
            assert_eq!(up.len(), delta_count(&word, kind).unwrap());
            assert_eq!(down.len(), nabla_count(&word, kind).unwrap());
            assert!(up.iter().chain(&down).all(|w| spec.contains(w)));
        } else {
            assert!(delta_count(&word, kind).is_err());
        }
    }
});
