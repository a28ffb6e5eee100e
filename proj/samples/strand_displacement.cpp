// Toehold-mediated strand displacement as a composite of diagrams.
//
// The incumbent s = TCTCTC is bound to the target; the invader carries the
// toehold t = GAA and displaces s. Straightening both stages and zipping
// them along t.s leaves s bare.

#include <iostream>

#include "dnacat/dnacat.hpp"

using namespace dnacat;

int main() {
  const Word s = Word::parse("TCTCTC");
  const Word t = Word::parse("GAA");
  const Word ts = t + s;

  // s enters the complex as part of the invader's target region
  Diagram f{s, ts, {}, {}, {}};
  for (std::size_t i = 1; i <= s.size(); ++i)
    f.through.push_back({i, t.size() + i});
  // the invader (ts)^v pairs with all of t.s
  Diagram g{ts, Word{}, {}, {}, {}};

  auto c = compose(f, g);
  std::cout << "composite:\n" << emit_ddna(c.diagram);

  auto z = zip_and_transfer(bend(f), bend(g), ts);
  std::cout << "straightened:\n" << render_structure_text(z.structure)
            << "bonds formed at the interface: " << z.report.interface_bonds_formed << "\n"
            << "incumbent positions released: " << z.report.dangled_endpoints << "\n";
}
