use std::io::Write;

fn main() {
    if let Ok(seed) = std::env::var("CUBELINE_SEED") {
        match seed.trim().parse::<usize>() {
            Ok(n) => cubeline::dims::set_fresh_seed(n),
            Err(_) => {
                eprintln!("error: CUBELINE_SEED must be a non-negative integer");
                std::process::exit(cubeline::cli::EXIT_USAGE);
            }
        }
    }
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = cubeline::cli::main_with(&args, &mut out, &mut std::io::stderr());
    let _ = out.flush();
    std::process::exit(code);
}
