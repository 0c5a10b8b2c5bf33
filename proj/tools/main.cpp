#include "cli_app.hpp"

int main(int argc, char** argv) { return merf::cli::run_cli(argc, argv); }
