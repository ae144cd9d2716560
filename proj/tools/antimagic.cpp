#include <iostream>
#include <iterator>

#include "antimagic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto res = antimagic::run(args, [] {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  });
  std::cout << res.output;
  if (!res.summary.empty()) std::cerr << res.summary << (res.summary.back() == '\n' ? "" : "\n");
  return res.exit;
}
