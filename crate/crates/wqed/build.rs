fn main() {
    // LAPACK symbols (dsyevd, zgeev, zgesv) come from the system OpenBLAS,
    // which on Debian bundles the full LAPACK interface.
    println!("cargo:rustc-link-lib=dylib=openblas");
}
