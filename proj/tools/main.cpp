#include "simhom/io.hpp"

int main(int argc, char** argv) { return simhom::run_cli(argc, argv); }
