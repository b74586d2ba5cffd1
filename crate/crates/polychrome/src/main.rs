fn main() {
    // Exit quietly when stdout closes early (e.g. piped into `head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(polychrome::cli::run());
}
