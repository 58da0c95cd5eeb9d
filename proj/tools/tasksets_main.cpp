#include "tasksets/cli.hpp"

int main(int argc, char** argv) { return tasksets::cli::run(argc, argv); }
