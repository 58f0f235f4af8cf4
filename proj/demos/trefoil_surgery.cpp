// +-1 surgery on both trefoils: lambda_1, lambda_2 from the knot formulas,
// then the expansion of tau_r at a few primes.

#include "ohtsuki/diagram_io.hpp"
#include "ohtsuki/surgery.hpp"
#include "ohtsuki/tau.hpp"

#include <iostream>

using namespace ohtsuki;

int main() {
  for (const char* braid : {"braid:2:1,1,1", "braid:2:-1,-1,-1"}) {
    const LinkDiagram k = parse_diagram(braid);
    for (int f : {1, -1}) {
      const LambdaVector v = lambda_asl(FramedLink(k, {f}), 3);
      std::cout << braid << " framing " << f << ": lambda = (" << to_string(v.lambda1) << ", "
                << to_string(v.lambda2) << ", " << to_string(*v.lambda3) << ")\n";
      for (int r : {5, 7, 11}) {
        std::cout << "  tau_" << r << " expansion:";
        for (auto a : q_expansion(tau_r(FramedLink(k, {f}), r))) std::cout << ' ' << a;
        std::cout << "  (mod " << r << ")\n";
      }
    }
  }
}
