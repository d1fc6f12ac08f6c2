#include "gumball/cli.hpp"

int main(int argc, char** argv) {
    return gumball::cli::run(argc, argv);
}
