//! Byte-exact rendering checks against files in `tests/golden/`.
//!
//! Regenerate with `UPDATE_GOLDEN=1 cargo test -p qudit-cli --test golden`,
//! then review the diff by hand.

mod common;

use common::{golden_dir, render, CASES};

#[test]
fn renderings_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut stale = Vec::new();
    for (file, args) in CASES {
        let path = golden_dir().join(file);
        let actual = render(args);
        if update {
            std::fs::write(&path, &actual).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing golden {}: {e}", path.display()));
        if actual != expected {
            stale.push(format!(
                "{file} (qudit {args}):\n--- expected\n{expected}--- actual\n{actual}"
            ));
        }
    }
    assert!(stale.is_empty(), "golden mismatch:\n{}", stale.join("\n"));
}

#[test]
fn rendering_is_deterministic() {
    for (_, args) in CASES.iter().take(4) {
        assert_eq!(render(args), render(args));
    }
}
