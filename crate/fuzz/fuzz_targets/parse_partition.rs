#![no_main]

use hasse_paths::young::{ideal_size, young_edges, young_edges_bruteforce, Partition};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(lambda) = Partition::parse(text) else {
        return;
    };
    assert!(lambda.parts().windows(2).all(|w| w[0] >= w[1]));
    assert!(lambda.parts().iter().all(|&p| p > 0));
    if lambda.weight() > 40 {
        return;
    }
    let _ = ideal_size(&lambda);
    if let Ok(brute) = young_edges_bruteforce(&lambda, 5_000) {
        assert_eq!(brute, young_edges(&lambda));
    }
});
