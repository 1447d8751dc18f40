use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use permalg_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    permalg_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(permalg_last_error()).to_str().unwrap().to_string()
}

#[test]
fn poly_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(permalg_poly_parse(c("x3x2x1 + x1x2").as_ptr(), ptr::null(), &mut p), PermalgStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(permalg_poly_render(p, &mut s), PermalgStatus::Ok);
        assert_eq!(take(s), "x3x1x2 + x1x2");
        let mut n = 0usize;
        assert_eq!(permalg_poly_term_count(p, &mut n), PermalgStatus::Ok);
        assert_eq!(n, 2);
        permalg_poly_free(p);
    }
}

#[test]
fn arithmetic_with_fixed_names() {
    unsafe {
        let names = c("a,b");
        let (mut a, mut b, mut ab, mut ba, mut eq) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut(), ptr::null_mut(), false);
        assert_eq!(permalg_poly_parse(c("a").as_ptr(), names.as_ptr(), &mut a), PermalgStatus::Ok);
        assert_eq!(permalg_poly_parse(c("b*a").as_ptr(), names.as_ptr(), &mut b), PermalgStatus::Ok);
        assert_eq!(permalg_poly_mul(a, b, &mut ab), PermalgStatus::Ok);
        let mut expected = ptr::null_mut();
        assert_eq!(permalg_poly_parse(c("aab").as_ptr(), names.as_ptr(), &mut expected), PermalgStatus::Ok);
        assert_eq!(permalg_poly_equal(ab, expected, &mut eq), PermalgStatus::Ok);
        assert!(eq);
        assert_eq!(permalg_poly_add(ab, expected, &mut ba), PermalgStatus::Ok);
        let mut s = ptr::null_mut();
        permalg_poly_render(ba, &mut s);
        assert_eq!(take(s), "2aab");
        let mut other = ptr::null_mut();
        assert_eq!(permalg_poly_parse(c("x").as_ptr(), ptr::null(), &mut other), PermalgStatus::Ok);
        let mut bad = ptr::null_mut();
        assert_eq!(permalg_poly_add(a, other, &mut bad), PermalgStatus::InvalidInput);
        for h in [a, b, ab, ba, expected, other] {
            permalg_poly_free(h);
        }
    }
}

#[test]
fn lie_and_jordan() {
    unsafe {
        let mut p = ptr::null_mut();
        permalg_poly_parse(c("x1x2").as_ptr(), ptr::null(), &mut p);
        let mut lie = true;
        assert_eq!(permalg_is_lie(p, &mut lie), PermalgStatus::Ok);
        assert!(!lie);
        let mut s = ptr::null_mut();
        assert_eq!(permalg_lie_express(p, &mut s), PermalgStatus::Negative);
        assert!(last_error().starts_with("not a Lie element"));
        assert_eq!(permalg_jordan_express(p, &mut s), PermalgStatus::Negative);
        permalg_poly_free(p);
        permalg_poly_parse(c("x1x2x3").as_ptr(), ptr::null(), &mut p);
        assert_eq!(permalg_jordan_express(p, &mut s), PermalgStatus::Ok);
        assert_eq!(take(s), "-1/4 {{x1,x2},x3} - 1/4 {{x1,x3},x2} + 3/4 {{x2,x3},x1}");
        permalg_poly_free(p);
    }
}

#[test]
fn errors_and_nulls() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(permalg_poly_parse(ptr::null(), ptr::null(), &mut p), PermalgStatus::NullPointer);
        assert_eq!(permalg_poly_parse(c("[x1,").as_ptr(), ptr::null(), &mut p), PermalgStatus::InvalidInput);
        assert!(last_error().contains("syntax error"));
        let bad = [0xffu8, 0];
        assert_eq!(permalg_poly_parse(bad.as_ptr().cast(), ptr::null(), &mut p), PermalgStatus::InvalidUtf8);
        let mut b = false;
        assert_eq!(permalg_is_lie(ptr::null(), &mut b), PermalgStatus::NullPointer);
        let mut d = 0u64;
        assert_eq!(permalg_dimension(3, 4, &mut d), PermalgStatus::Ok);
        assert_eq!(d, 30);
        assert!(permalg_last_error().is_null());
        assert_eq!(permalg_dimension(0, 4, &mut d), PermalgStatus::InvalidInput);
        permalg_poly_free(ptr::null_mut());
        permalg_string_free(ptr::null_mut());
        assert_eq!(CStr::from_ptr(permalg_version()).to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn envelope_handles() {
    unsafe {
        let heis = c(r#"{"dim":3,"basis":["e1","e2","e3"],"brackets":[{"i":1,"j":2,"value":[[3,"1"]]}]}"#);
        let mut e = ptr::null_mut();
        assert_eq!(permalg_envelope_from_json(heis.as_ptr(), &mut e), PermalgStatus::Ok);
        for strategy in [PermalgStrategy::Leftmost, PermalgStrategy::Rightmost] {
            let mut s = ptr::null_mut();
            assert_eq!(permalg_envelope_normal_form(e, c("d(e2)*e1*e1").as_ptr(), strategy, &mut s), PermalgStatus::Ok);
            assert_eq!(take(s), "d(e1)*e1*e2");
        }
        let mut ok = false;
        assert_eq!(permalg_envelope_check(e, &mut ok), PermalgStatus::Ok);
        assert!(ok);
        let mut n = 0u64;
        assert_eq!(permalg_envelope_basis_count(e, 5, &mut n), PermalgStatus::Ok);
        assert_eq!(n, 6);
        let mut s = ptr::null_mut();
        assert_eq!(permalg_envelope_normal_form(e, c("e1*e2").as_ptr(), PermalgStrategy::Leftmost, &mut s), PermalgStatus::InvalidInput);
        permalg_envelope_free(e);
        let sl2 = c(r#"{"dim":3,"brackets":[{"i":1,"j":2,"value":[[3,"1"]]},{"i":1,"j":3,"value":[[1,"-2"]]},{"i":2,"j":3,"value":[[2,"2"]]}]}"#);
        assert_eq!(permalg_envelope_from_json(sl2.as_ptr(), &mut e), PermalgStatus::InvalidInput);
        assert!(last_error().contains("metabelian"));
    }
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_api() {
    let header = std::fs::read_to_string(crate_dir().join("include/permalg.h")).expect("generated header");
    for sym in [
        "typedef struct PermalgPoly PermalgPoly;",
        "typedef struct PermalgEnvelope PermalgEnvelope;",
        "PERMALG_STATUS_NEGATIVE = 1",
        "permalg_poly_parse(",
        "permalg_envelope_normal_form(",
        "permalg_last_error(void)",
        "void permalg_string_free(char *s);",
    ] {
        assert!(header.contains(sym), "missing {sym}");
    }
}

fn static_lib() -> Option<PathBuf> {
    // target/<profile>/deps/<test binary> -> target/<profile>/libpermalg_ffi.a
    let exe = std::env::current_exe().ok()?;
    let lib = exe.parent()?.parent()?.join("libpermalg_ffi.a");
    lib.exists().then_some(lib)
}

fn have(tool: &str) -> bool {
    Command::new(tool).arg("--version").output().is_ok_and(|o| o.status.success())
}

#[test]
fn c_program_links_against_static_library() {
    let (Some(lib), true) = (static_lib(), have("cc")) else {
        eprintln!("skipping: no C compiler or static library");
        return;
    };
    let out = std::env::temp_dir().join(format!("permalg_smoke_{}", std::process::id()));
    let dir = crate_dir();
    let status = Command::new("cc")
        .arg(dir.join("c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("cc runs");
    assert!(status.success(), "compile smoke.c");
    let run = Command::new(&out).output().expect("smoke runs");
    let _ = std::fs::remove_file(Path::new(&out));
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
