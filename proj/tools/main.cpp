#include "bendkz/verify.hpp"

int main(int argc, char** argv) { return bendkz::verify::cli_main(argc, argv); }
