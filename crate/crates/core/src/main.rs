fn main() {
    let (out, code) = hopfgal::cli::run(std::env::args_os());
    if code == 0 || code == 1 {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    std::process::exit(code);
}
