#include <iostream>

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::cerr << "exgraph: CLI not wired up yet\n";
    return 2;
}
