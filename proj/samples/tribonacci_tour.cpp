// Walks through the Tribonacci word: its prefix, the greedy closed
// z-factorization, the closed form of each factor, and the oc-sequence.

#include <iostream>

#include "closedz/closedz.hpp"

int main() {
  using namespace closedz;
  int const m = 3;

  auto stream = bonacci_stream(m);
  std::cout << "prefix      " << to_string(stream.prefix(40)) << "\n\n";

  auto const f = closed_z_factorize(stream, 8);
  for (std::size_t n = 0; n < f.factors.size(); ++n) {
    auto const& z = closed_z_factor(m, static_cast<int>(n));
    std::cout << "z_" << n << "  " << to_string(f.factors[n])
              << (f.factors[n] == z ? "" : "  (differs from closed form)") << '\n';
  }

  auto const border = closed_border(f.factors[5]);
  std::cout << "\nborder of z_5: " << (border ? to_string(*border) : "-") << '\n';

  auto const seq = oc(stream, 60);
  std::cout << "oc          " << seq.to_string() << '\n';
  std::cout << "runs        " << join_runs(runs_of_ones(seq)) << '\n';
}
