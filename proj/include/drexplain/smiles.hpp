#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace drx {

// Parse failure; `pos` is the byte offset in the input string.
class SmilesError : public std::runtime_error {
 public:
  SmilesError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        pos(pos) {}
  std::size_t pos;
};

enum class BondOrder : int { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

struct Atom {
  std::string element;
  bool aromatic = false;
  int formal_charge = 0;
  // hydrogens from a bracket spec; -1 when the atom carried no H field
  int explicit_h = -1;
  // set after parsing: atom lies on some cycle
  bool in_ring = false;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
};

struct MolecularGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  // stereo markers (/ \ @) are accepted but carry no meaning here
  bool ignored_stereo = false;
  std::vector<std::string> warnings;

  std::vector<std::vector<int>> adjacency() const;
  int degree(int atom) const;
};

// Supported subset: organic-subset bare atoms (B C N O P S F Cl Br I and
// aromatic b c n o p s), bracket atoms with isotope (discarded), element,
// chirality (discarded with a warning), H count and charge, bonds - = # :,
// branches, and ring closures including %nn and bond-tagged closures.
// Dot-separated components are rejected. Throws SmilesError on malformed
// input: unbalanced parentheses, empty branches, trailing or conflicting
// bond symbols, unclosed or self-referential ring bonds, duplicate bonds,
// unknown elements.
MolecularGraph parse_smiles(const std::string& smiles);

}  // namespace drx
