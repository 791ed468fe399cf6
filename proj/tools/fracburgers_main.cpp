#include "fracburgers/cli.hpp"

int main(int argc, char** argv) {
    return fracburgers::cli_main(argc, argv);
}
