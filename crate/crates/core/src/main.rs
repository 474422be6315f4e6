fn main() {
    let result = torus_gluing::cli::run(std::env::args_os().skip(1));
    if result.exit_code() == 1 {
        eprintln!("{}", result.render());
    } else {
        println!("{}", result.render());
    }
    std::process::exit(result.exit_code());
}
