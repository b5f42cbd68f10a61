fn main() {
    let (code, text) = indminor::cli::run(std::env::args_os());
    if code == 2 && !text.starts_with('{') {
        eprint!("{text}");
    } else {
        println!("{text}");
    }
    std::process::exit(code);
}
