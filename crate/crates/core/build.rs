// LAPACK/BLAS symbols for ndarray-linalg come from the system OpenBLAS
// (single shared object providing BLAS + CBLAS + LAPACK). Override with
// SPINCAT_BLAS_LIB if the library is named differently on your system.
fn main() {
    let lib = std::env::var("SPINCAT_BLAS_LIB").unwrap_or_else(|_| "openblas".to_string());
    println!("cargo:rustc-link-lib=dylib={lib}");
    println!("cargo:rerun-if-env-changed=SPINCAT_BLAS_LIB");
}
