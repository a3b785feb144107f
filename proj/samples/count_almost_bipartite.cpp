// Counts connected labeled graphs on n vertices by parity class and KE
// status, and lists the almost bipartite non-KE ones with rho_v = n.

#include <cstdlib>
#include <iostream>
#include <map>

#include "kef/kef.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 5;
  std::map<std::string, long> counts;
  kef::GraphStream stream = kef::exhaustive_graphs(n, true);
  while (auto g = stream.next()) {
    const kef::Parity parity = kef::classify_parity(g->graph);
    const bool ke = kef::is_koenig_egervary(g->graph);
    ++counts[std::string(kef::to_string(parity.kind)) + (ke ? " KE" : " non-KE")];
    if (parity.kind == kef::ParityClass::almost_bipartite && !ke && kef::rho(g->graph).rho_v == n) {
      std::cout << "rho_v = n: " << kef::write_graph6(g->graph) << '\n';
    }
  }
  for (const auto& [key, count] : counts) std::cout << key << ": " << count << '\n';
}
