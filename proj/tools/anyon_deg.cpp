#include "anyon/cli.hpp"

int main(int argc, char** argv) { return anyon::cli::main_entry(argc, argv); }
