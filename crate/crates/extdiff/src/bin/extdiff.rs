fn main() {
    // behave like a normal unix tool when the output pipe closes early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    env_logger::init();
    let code = extdiff::cli::run(std::env::args_os());
    std::process::exit(code);
}
