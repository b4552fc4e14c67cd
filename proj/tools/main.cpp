#include "kjnn/cli.hpp"

int main(int argc, char** argv) {
    return kjnn::cli_run(argc, argv);
}
