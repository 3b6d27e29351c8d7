#include "moems/cli/app.hpp"

int main(int argc, char** argv) { return moems::cli::run_app(argc, argv); }
