#include <iostream>
#include <string>

#include "fixtures.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 2;
  }
  for (const auto& [name, f] : phopf::fx::fixture_files()) {
    phopf::save(f, std::string(argv[1]) + "/" + name);
    std::cout << name << "\n";
  }
}
