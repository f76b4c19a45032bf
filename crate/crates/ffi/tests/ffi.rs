use std::ffi::{c_char, c_int, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hopfgal_ffi::*;

fn fixture(name: &str) -> CString {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name);
    CString::new(p.to_str().unwrap()).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    hg_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = hg_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn hopf_handles() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(
            hg_hopf_load(fixture("sweedler.json").as_ptr(), &mut h),
            HgStatus::Ok
        );
        assert!(hg_last_error().is_null());
        let mut dim = 0;
        assert_eq!(hg_hopf_dim(h, &mut dim), HgStatus::Ok);
        assert_eq!(dim, 4);
        let mut s = ptr::null_mut();
        assert_eq!(hg_hopf_left_integral(h, &mut s), HgStatus::Ok);
        assert_eq!(take(s), "x + g·x");
        let mut semisimple = true;
        assert_eq!(hg_hopf_is_semisimple(h, &mut semisimple), HgStatus::Ok);
        assert!(!semisimple);
        let mut d = ptr::null_mut();
        assert_eq!(hg_hopf_dual(h, &mut d), HgStatus::Ok);
        assert_eq!(hg_hopf_dim(d, &mut dim), HgStatus::Ok);
        assert_eq!(dim, 4);
        hg_hopf_free(d);
        hg_hopf_free(h);
        hg_hopf_free(ptr::null_mut());
    }
}

#[test]
fn parse_from_text() {
    let json = CString::new(
        r#"{"field": {"kind": "Fp", "p": 2}, "builtin": {"name": "group_algebra", "group": "C2"}}"#,
    )
    .unwrap();
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(hg_hopf_parse(json.as_ptr(), &mut h), HgStatus::Ok);
        let mut semisimple = true;
        assert_eq!(hg_hopf_is_semisimple(h, &mut semisimple), HgStatus::Ok);
        assert!(!semisimple);
        hg_hopf_free(h);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(
            hg_hopf_load(fixture("malformed.json").as_ptr(), &mut h),
            HgStatus::InvalidInput
        );
        assert!(h.is_null());
        assert!(last_error().contains("malformed"));
        // axiom failures reject the load
        assert_eq!(
            hg_hopf_load(fixture("corrupted_antipode.json").as_ptr(), &mut h),
            HgStatus::InvalidInput
        );
        assert!(last_error().contains("antipode"));
        assert_eq!(hg_hopf_load(ptr::null(), &mut h), HgStatus::NullPointer);
        let path = fixture("qc2.json");
        assert_eq!(
            hg_hopf_load(path.as_ptr(), ptr::null_mut()),
            HgStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            hg_hopf_parse(bad.as_ptr() as *const c_char, &mut h),
            HgStatus::InvalidUtf8
        );
        let mut dim = 0;
        assert_eq!(hg_hopf_dim(ptr::null(), &mut dim), HgStatus::NullPointer);
    }
}

#[test]
fn extensions() {
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(
            hg_extension_load(fixture("f4_frobenius.json").as_ptr(), &mut e),
            HgStatus::Ok
        );
        let mut summary = HgExtensionSummary::default();
        assert_eq!(hg_extension_classify(e, &mut summary), HgStatus::Ok);
        assert_eq!(
            summary,
            HgExtensionSummary {
                dim_s: 2,
                dim_h: 2,
                invariants_dim: 1,
                homology_dim: 0,
                faithful: true,
                tame: true,
                hopf_galois: true,
            }
        );
        let mut label = ptr::null_mut();
        assert_eq!(hg_extension_classification(e, &mut label), HgStatus::Ok);
        assert_eq!(take(label), "tame and Hopf-Galois");
        hg_extension_free(e);

        // classification needs an action
        assert_eq!(
            hg_extension_load(fixture("graded_coaction.json").as_ptr(), &mut e),
            HgStatus::Ok
        );
        assert_eq!(
            hg_extension_classify(e, &mut summary),
            HgStatus::InvalidInput
        );
        hg_extension_free(e);
    }
}

#[test]
fn cli_passthrough() {
    let args: Vec<CString> = ["t-shift", "--json"]
        .iter()
        .map(|s| CString::new(*s).unwrap())
        .chain(std::iter::once(fixture("graded_nilpotent.json")))
        .collect();
    let argv: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    unsafe {
        let (mut report, mut code) = (ptr::null_mut(), 0 as c_int);
        assert_eq!(
            hg_cli_run(argv.len() as c_int, argv.as_ptr(), &mut report, &mut code),
            HgStatus::Ok
        );
        assert_eq!(code, 1);
        assert!(take(report).contains("\"status\": \"error\""));
        assert_eq!(
            hg_cli_run(-1, argv.as_ptr(), &mut report, &mut code),
            HgStatus::InvalidInput
        );
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/hopfgal.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "hg_hopf_load",
        "hg_extension_classify",
        "hg_cli_run",
        "HG_STATUS_RESOURCE",
    ] {
        assert!(text.contains(name), "{name} missing from the header");
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let src = std::env::temp_dir().join(format!("hopfgal_header_{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"hopfgal.h\"\nint main(void) { HgHopf *h = 0; size_t d = 0;\n\
         return hg_hopf_dim(h, &d) == HG_STATUS_OK; }\n",
    )
    .unwrap();
    let status = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(&src)
        .status();
    std::fs::remove_file(&src).ok();
    match status {
        Ok(s) => assert!(s.success(), "the header does not compile"),
        Err(e) => eprintln!("skipping the C compile: {cc} unavailable ({e})"),
    }
}
