#include <iostream>

#include "circletree/circletree.hpp"

using namespace circletree;

int main() {
  for (const auto& f : catalog().prereduced()) {
    std::cout << f.id << " pts=" << f.points << " period=" << f.period << " slots=" << f.slots
              << " mirror=" << f.mirror << " edges=" << format_circle_graph(to_circle_graph(f.canonical())) << "\n";
  }
  for (const auto& f : catalog().reduced()) {
    std::cout << f.id << " pts=" << f.points << " period=" << f.period << " src=" << f.source
              << " mirror=" << f.mirror << " edges=" << format_circle_graph(to_circle_graph(f.canonical())) << "\n";
  }
  auto rep = verify_suite(8);
  for (const auto& l : rep.lines)
    std::cout << (l.pass ? "PASS " : "FAIL ") << l.claim << (l.detail.empty() ? "" : "  [" + l.detail + "]") << "\n";
  return rep.all_pass() ? 0 : 1;
}
