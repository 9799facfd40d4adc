#include "resilife/cli_app.hpp"

int main(int argc, char** argv) { return resilife::cli::run(argc, argv); }
