fn main() {
    // CLI wired up after the library surface lands.
    eprintln!("fanikit CLI: not yet implemented");
    std::process::exit(1);
}
