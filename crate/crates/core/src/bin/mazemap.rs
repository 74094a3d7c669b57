fn main() {
    std::process::exit(maze_mappers::cli::run(std::env::args_os()));
}
