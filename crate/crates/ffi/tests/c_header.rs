//! Compiles a small C program against the generated header and, when the
//! static library is found next to the test binary, links and runs it.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "gentor.h"

int main(void) {
    GentorGroup *g = NULL;
    if (gentor_group_open("promislow", &g) != GENTOR_STATUS_OK) return 10;
    bool t = false;
    if (gentor_decide(g, "x*y^2", &t) != GENTOR_STATUS_OK || !t) return 11;
    uint64_t lo = 0, hi = 0;
    bool exact = false;
    if (gentor_exponent_bounds(g, &lo, &hi, &exact) != GENTOR_STATUS_OK) return 12;
    if (lo != 4 || hi != 4 || !exact) return 13;
    char *json = NULL;
    if (gentor_witness_json(g, "y", &json) != GENTOR_STATUS_OK) return 14;
    if (strstr(json, "\"length\":4") == NULL) return 15;
    gentor_string_free(json);
    if (gentor_decide(g, "(", &t) != GENTOR_STATUS_INVALID_INPUT) return 16;
    if (strlen(gentor_last_error_message()) == 0) return 17;
    gentor_group_free(g);
    puts("ok");
    return 0;
}
"#;

fn compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok().map(|_| cc)
}

fn static_lib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libgentor_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn header_compiles_and_links() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler, skipping");
        return;
    };
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(include.join("gentor.h").exists());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();

    let syntax = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .output()
        .unwrap();
    assert!(syntax.status.success(), "{}", String::from_utf8_lossy(&syntax.stderr));

    let Some(lib) = static_lib() else {
        eprintln!("static library not found, skipping link");
        return;
    };
    let bin = dir.path().join("main");
    let link = Command::new(&cc)
        .args(["-std=c99", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output()
        .unwrap();
    assert!(link.status.success(), "{}", String::from_utf8_lossy(&link.stderr));
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
