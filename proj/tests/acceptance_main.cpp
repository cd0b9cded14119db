// Acceptance runner: one pass/fail line per criterion.  With an argument
// "cN" only that criterion runs (used by ctest to isolate each check).

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "zinbiel/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.size() >= 2 && arg[0] == 'c')
      ids.push_back(std::stoi(arg.substr(1)));
    else
      ids.push_back(std::stoi(arg));
  }
  auto results = zinbiel::run_acceptance(ids, &std::cout);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (results.empty()) {
    std::cerr << "no criteria selected\n";
    return 2;
  }
  return all ? 0 : 1;
}
