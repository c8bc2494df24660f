fn main() {
    // Die quietly on a closed pipe (`qshell ... | head`) instead of
    // panicking on the failed println.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(qshell::cli::run());
}
