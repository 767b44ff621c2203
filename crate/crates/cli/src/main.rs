use std::io::Write;
use std::process::ExitCode;

// printed series can be long `+` chains, and the parser builds them left-deep
const STACK: usize = 256 << 20;

fn main() -> ExitCode {
    let worker = std::thread::Builder::new()
        .stack_size(STACK)
        .spawn(|| polystar_cli::run(std::env::args_os()))
        .expect("spawn worker thread");
    let (code, out, err) = worker.join().expect("worker thread panicked");
    std::io::stdout().write_all(out.as_bytes()).ok();
    std::io::stderr().write_all(err.as_bytes()).ok();
    ExitCode::from(code as u8)
}
