#include <iostream>

#include "covenum/cli.hpp"
#include "covenum/errors.hpp"

int main(int argc, char** argv) {
  try {
    return covenum::run_cli(argc, argv, std::cout, std::cerr);
  } catch (const covenum::contract_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
