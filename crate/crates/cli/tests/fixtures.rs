//! The committed table fixtures are exactly what the generators produce.
//! Set `DBLCAT_WRITE_FIXTURES=1` to rewrite them.

use std::path::PathBuf;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

#[test]
fn committed_fixtures_match_their_generators() {
    let write = std::env::var_os("DBLCAT_WRITE_FIXTURES").is_some();
    for f in dblcat::fixtures::all().unwrap() {
        let path = dir().join(f.file);
        let fresh = f.spec.to_json() + "\n";
        if write {
            std::fs::write(&path, &fresh).unwrap();
        }
        let committed = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(committed == fresh, "{} is stale; regenerate with DBLCAT_WRITE_FIXTURES=1", f.file);
    }
}
