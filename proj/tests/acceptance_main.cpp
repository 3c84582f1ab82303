#include "netfix/acceptance.hpp"

int main() {
    return netfix::print_acceptance(netfix::run_acceptance()) ? 0 : 1;
}
