use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hilbert_cells_ffi::*;

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    hc_string_free(p);
    s
}

fn last_error() -> String {
    let p = hc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn betti_buffer() {
    let mut buf = [0usize; 5];
    let mut written = 0;
    unsafe {
        assert_eq!(hc_betti(2, buf.as_mut_ptr(), buf.len(), &mut written), HcStatus::Ok);
        assert_eq!(buf, [1, 2, 3, 2, 1]);
        assert!(hc_last_error().is_null());
        assert_eq!(hc_betti(3, buf.as_mut_ptr(), buf.len(), &mut written), HcStatus::BufferTooSmall);
        assert_eq!(written, 7);
        assert_eq!(hc_betti(50, buf.as_mut_ptr(), buf.len(), &mut written), HcStatus::OutOfRange);
        assert!(last_error().contains("50"));
        assert_eq!(hc_betti(2, buf.as_mut_ptr(), buf.len(), ptr::null_mut()), HcStatus::NullPointer);
    }
}

#[test]
fn basis_handle() {
    unsafe {
        let mut b = ptr::null_mut();
        assert_eq!(hc_basis_new(4, 4, &mut b), HcStatus::Ok);
        assert_eq!(hc_basis_len(b), 13);
        let mut s = ptr::null_mut();
        assert_eq!(hc_basis_label(b, 0, &mut s), HcStatus::Ok);
        assert!(take_string(s).contains('|'));
        assert_eq!(hc_basis_label(b, 13, &mut s), HcStatus::OutOfRange);
        hc_basis_free(b);
        hc_basis_free(ptr::null_mut());
        assert_eq!(hc_basis_len(ptr::null()), 0);
        assert_eq!(hc_basis_new(2, 9, &mut b), HcStatus::OutOfRange);
    }
}

#[test]
fn mask_handle() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(hc_mask_new(4, 4, -3, 1, &mut m), HcStatus::Ok);
        assert_eq!(hc_mask_dim(m), 13);
        let mut passed = false;
        assert_eq!(hc_mask_check(m, &mut passed), HcStatus::Ok);
        assert!(passed);
        let mut blocks = [0usize; 13];
        let mut written = 0;
        assert_eq!(hc_mask_blocks(m, blocks.as_mut_ptr(), blocks.len(), &mut written), HcStatus::Ok);
        let mut sizes = blocks[..written].to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, [5, 8]);
        let mut entry = false;
        assert_eq!(hc_mask_get(m, 0, 0, &mut entry), HcStatus::Ok);
        assert!(entry);
        assert_eq!(hc_mask_get(m, 12, 0, &mut entry), HcStatus::Ok);
        assert!(!entry);
        assert_eq!(hc_mask_get(m, 13, 0, &mut entry), HcStatus::OutOfRange);
        let mut s = ptr::null_mut();
        assert_eq!(hc_mask_row_label(m, 0, &mut s), HcStatus::Ok);
        assert_eq!(take_string(s).matches('|').count(), 2);
        hc_mask_free(m);
        assert_eq!(hc_mask_new(8, 8, -1, 1, &mut m), HcStatus::NonGeneric);
        assert_eq!(hc_mask_new(2, 2, 1, 1, &mut m), HcStatus::InvalidArgument);
    }
}

#[test]
fn cup_phi_staircase() {
    let point = CString::new("-|-|1").unwrap();
    let fundamental = CString::new("1|-|-").unwrap();
    let garbage = CString::new("1|2").unwrap();
    unsafe {
        let mut out = true;
        assert_eq!(hc_cup_may_be_nonzero(point.as_ptr(), point.as_ptr(), &mut out), HcStatus::Ok);
        assert!(!out);
        assert_eq!(hc_cup_may_be_nonzero(point.as_ptr(), fundamental.as_ptr(), &mut out), HcStatus::Ok);
        assert!(out);
        assert_eq!(hc_cup_may_be_nonzero(garbage.as_ptr(), point.as_ptr(), &mut out), HcStatus::InvalidArgument);
        assert_eq!(hc_cup_may_be_nonzero(ptr::null(), point.as_ptr(), &mut out), HcStatus::NullPointer);

        let mut v = 0;
        assert_eq!(hc_phi(-1, 0, 1, 1, fundamental.as_ptr(), &mut v), HcStatus::Ok);
        assert_eq!(v, -1);
        assert_eq!(hc_phi(1, 2, 3, 1, fundamental.as_ptr(), &mut v), HcStatus::InvalidArgument);
        assert!(last_error().contains("sum 6"));

        let mut s = ptr::null_mut();
        assert_eq!(hc_generic_staircase(-5, -2, 4, &mut s), HcStatus::Ok);
        assert_eq!(take_string(s), "2,1,1");
        assert_eq!(hc_generic_staircase(-1, -1, 4, &mut s), HcStatus::NonGeneric);
    }
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hilbert_cells.h")
}

#[test]
fn header_declares_api() {
    let text = std::fs::read_to_string(header()).unwrap();
    for name in [
        "hc_last_error", "hc_string_free", "hc_betti", "hc_basis_new", "hc_basis_len", "hc_basis_label",
        "hc_basis_free", "hc_mask_new", "hc_mask_dim", "hc_mask_get", "hc_mask_row_label", "hc_mask_check",
        "hc_mask_blocks", "hc_mask_free", "hc_cup_may_be_nonzero", "hc_phi", "hc_generic_staircase",
        "typedef struct HcBasis HcBasis", "typedef struct HcMask HcMask", "HC_STATUS_NON_GENERIC = 3",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "hilbert_cells.h"

int main(void) {
    size_t b[5], written = 0;
    if (hc_betti(2, b, 5, &written) != HC_STATUS_OK || written != 5 || b[2] != 3) return 1;
    HcMask *m = NULL;
    if (hc_mask_new(4, 4, -1, 3, &m) != HC_STATUS_OK) return 2;
    bool ok = false;
    if (hc_mask_check(m, &ok) != HC_STATUS_OK || !ok || hc_mask_dim(m) != 13) return 3;
    hc_mask_free(m);
    char *s = NULL;
    if (hc_generic_staircase(-1, -1, 4, &s) != HC_STATUS_NON_GENERIC || hc_last_error() == NULL) return 4;
    printf("ok\n");
    return 0;
}
"#;

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn header_compiles_as_c() {
    if !have_cc() {
        eprintln!("cc not found; skipping");
        return;
    }
    let dir = std::env::temp_dir().join(format!("hc_ffi_syntax_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let include = header().parent().unwrap().to_path_buf();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}

#[test]
fn c_program_links_static_library() {
    // target/<profile>/deps/<test binary> -> target/<profile>/
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = profile_dir.join("libhilbert_cells_ffi.a");
    if !have_cc() || !lib.exists() {
        eprintln!("cc or {} missing; skipping", lib.display());
        return;
    }
    let dir = std::env::temp_dir().join(format!("hc_ffi_link_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    let bin = dir.join("main");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-I"])
        .arg(header().parent().unwrap())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
