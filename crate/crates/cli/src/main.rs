fn main() {
    // Die quietly when a downstream pipe closes (`crep ... | head`),
    // instead of panicking on the broken-pipe write error.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(crep_cli::run(std::env::args_os()));
}
