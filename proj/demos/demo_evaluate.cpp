// Evaluate the mean family at a point and show how the values interleave.
//
//   g++ -std=c++20 -O2 -I include demos/demo_evaluate.cpp -o demo_evaluate -lmpfr -lgmp
//   ./demo_evaluate [a b [digits]]

#include "bimeans/expr.hpp"
#include "bimeans/means.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  using bimeans::BigFloat;

  const BigFloat a = argc > 1 ? BigFloat(argv[1]) : BigFloat(1);
  const BigFloat b = argc > 2 ? BigFloat(argv[2]) : BigFloat("0.5");
  const unsigned digits = argc > 3 ? static_cast<unsigned>(std::stoul(argv[3])) : 30;
  bimeans::ScopedPrecision prec(digits);

  // The classic ordering, smallest to largest at any unequal arguments.
  const std::vector<std::string> ladder = {
      "G", "L", "P", "I", "A", "N", "A_4/3", "T", "A_5/3", "Q", "C",
  };

  std::cout << "a = " << bimeans::to_decimal(a, digits)
            << ", b = " << bimeans::to_decimal(b, digits) << ", " << digits << " digits\n\n";
  for (const std::string& name : ladder) {
    const bimeans::MeanExpr e = bimeans::parse_term(name);
    const BigFloat v = bimeans::eval(e, a, b, {});
    std::cout.width(6);
    std::cout << name << " = " << bimeans::to_decimal(v, digits) << "\n";
  }

  // Every one of these means is strict between min and max and symmetric.
  const BigFloat t_ab = bimeans::seiffert_t(a, b);
  const BigFloat t_ba = bimeans::seiffert_t(b, a);
  std::cout << "\nsymmetry check: T(a,b) - T(b,a) = "
            << bimeans::to_decimal(t_ab - t_ba, 3) << "\n";
  return 0;
}
