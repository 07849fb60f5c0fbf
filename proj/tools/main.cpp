#include "cli.hpp"

int main(int argc, char** argv) { return rkm::cli::main_entry(argc, argv); }
