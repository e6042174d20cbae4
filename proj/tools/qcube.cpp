#include "qcube/cli.hpp"

int main(int argc, char** argv) {
    return qcube::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
