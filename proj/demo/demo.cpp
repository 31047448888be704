// Walks through the main objects on a four-vertex DAG.

#include <iostream>

#include "toric/toric.hpp"

using namespace toric;

int main() {
  const Dag d({1, 2, 3, 4}, {{2, 1}, {2, 3}, {2, 4}, {4, 1}, {4, 3}});

  std::cout << "linear extensions:";
  for (const Perm& w : linear_extensions(d)) std::cout << ' ' << w.to_string();
  std::cout << '\n';

  const ToricClass tc = toric_class(d);
  std::cout << "toric class (" << tc.size() << " members):\n";
  for (const Dag& member : tc.members()) std::cout << "  " << member.to_string() << '\n';

  std::cout << "toric extensions:";
  for (const CyclicClass& cw : toric_extensions(tc)) std::cout << " [" << cw.canonical().to_string() << ']';
  std::cout << '\n';

  std::cout << "Delta_D       = " << delta_dag(d).to_string() << '\n';
  std::cout << "Delta^cyc_[D] = " << delta_toric(tc).to_string() << '\n';

  std::cout << "m\tOmega\tOmega^cyc\n";
  for (int m = 0; m <= 5; ++m) std::cout << m << '\t' << omega_dag(d, m) << '\t' << omega_toric(tc, m) << '\n';

  const Perm w = Perm::parse("143256");
  const EnrichedMap f{{1, 1}, {4, -2}, {3, -4}, {2, -4}, {5, -5}, {6, 5}};
  std::cout << "marking of " << f.to_string() << " on " << w.to_string() << ": "
            << partition_to_marking(f, w, 5).to_string() << '\n';
}
