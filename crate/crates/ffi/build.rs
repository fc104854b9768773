fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("manifest dir");
    match cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_language(cbindgen::Language::C)
        .with_include_guard("FUSIONQ_H")
        .with_cpp_compat(true)
        .with_documentation(true)
        .with_header("/* C interface to the fusionq library. */")
        .generate()
    {
        Ok(bindings) => {
            bindings.write_to_file(format!("{crate_dir}/include/fusionq.h"));
        }
        Err(e) => {
            // header generation must not break the build from a clean checkout
            println!("cargo:warning=cbindgen failed: {e}");
        }
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
}
