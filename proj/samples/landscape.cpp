// Prints the critical-set landscape and the deletion statistics of a graph
// given as an edge list (file argument or stdin).

#include <fstream>
#include <iostream>

#include "kef/kef.hpp"

int main(int argc, char** argv) {
  try {
    kef::Graph g;
    if (argc > 1) {
      std::ifstream in(argv[1]);
      if (!in) {
        std::cerr << "cannot open " << argv[1] << '\n';
        return 2;
      }
      g = kef::read_edge_list(in);
    } else {
      g = kef::read_edge_list(std::cin);
    }

    const kef::GraphAnalysis a = kef::analyze(argc > 1 ? argv[1] : "stdin", g);
    std::cout << "n=" << a.n() << " m=" << a.m() << " mu=" << a.mu.mu;
    if (a.alpha) std::cout << " alpha=" << a.alpha->alpha << " kappa=" << a.ke->kappa;
    std::cout << '\n';
    if (a.parity) std::cout << "parity: " << kef::to_string(a.parity->kind) << '\n';
    if (a.omega) std::cout << "core=" << kef::to_string(a.core()) << " corona=" << kef::to_string(a.corona()) << '\n';
    if (a.landscape) {
      const kef::CriticalLandscape& L = *a.landscape;
      std::cout << "d=" << L.d << " ker=" << kef::to_string(L.ker) << " diadem=" << kef::to_string(L.diadem)
                << " nucleus=" << kef::to_string(L.nucleus) << " critical sets=" << L.crit_count << '\n';
    }
    if (a.rho) {
      std::cout << "rho_v=" << a.rho->rho_v << " via " << kef::to_string(a.rho->rho_v_witnesses) << " rho_e=" << a.rho->rho_e
                << '\n';
    }
    for (const std::string& s : a.skipped) std::cout << "skipped " << s << '\n';
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
