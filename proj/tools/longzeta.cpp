#include "longzeta/cli.hpp"

int main(int argc, char** argv) { return longzeta::cli::run(argc, argv); }
