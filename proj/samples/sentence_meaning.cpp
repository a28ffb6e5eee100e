// Sentence meanings from a lexicon file: prints the reduction and the
// structure each grammatical sentence folds into.
//
//   sentence_meaning fixtures/cats_lexicon.json Cats chase mice

#include <fstream>
#include <iostream>
#include <iterator>

#include "dnacat/dnacat.hpp"

using namespace dnacat;

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: sentence_meaning LEXICON WORD...\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << "\n";
    return 2;
  }
  try {
    Lexicon lex = parse_lexicon(std::string(std::istreambuf_iterator<char>(in), {}));
    std::vector<std::string> words(argv + 2, argv + argc);
    auto m = meaning(words, parse_type("s"), lex);
    if (!m) {
      std::cout << "no reduction to s\n";
      return 1;
    }
    for (const Pair& l : m->proof.links)
      std::cout << "link " << l.i << " " << l.j << "\n";
    std::cout << render_structure_text(m->structure);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
