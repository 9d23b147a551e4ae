// Verify one built-in inequality chain and print where its margin pinches.
//
//   g++ -std=c++20 -O2 -I include demos/demo_verify.cpp -o demo_verify -lmpfr -lgmp
//   ./demo_verify [chain-name [grid-points]]
//
// Try "Y2" (the full ladder), "Wang" (tight at x -> 1), or "mb" (margin
// below 1e-17 yet still strictly positive).

#include "bimeans/fixtures.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  const std::string name = argc > 1 ? argv[1] : "Y2";
  const int points = argc > 2 ? std::stoi(argv[2]) : 2000;

  const bimeans::ChainSpec& spec = bimeans::find_chain(name);
  std::cout << "chain " << spec.name << ": " << spec.terms << "\n";
  if (!spec.description.empty()) std::cout << spec.description << "\n";

  const bimeans::ChainReport rep = bimeans::verify_named_chain(name, 50, {points, 1e-8});
  std::cout << "\nstatus: " << to_string(rep.status) << "\n";
  std::cout << "checked " << rep.pair_count << " adjacent pair(s) on " << rep.grid_points
            << " ratios at " << rep.digits << " digits\n";
  std::cout << "smallest log-margin " << bimeans::to_decimal(rep.min_margin, 6) << " at x = "
            << bimeans::to_decimal(rep.argmin_x, 20) << " (pair " << rep.argmin_pair << ")\n";
  for (const bimeans::ChainWitness& w : rep.witnesses)
    std::cout << "  violation at x = " << bimeans::to_decimal(w.x, 20) << ": margin "
              << bimeans::to_decimal(w.margin, 6) << "\n";
  if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
  return rep.status == bimeans::ChainStatus::verified_on_grid ? 0 : 1;
}
