#pragma once

#include <string>
#include <vector>

#include "llab/mobius.hpp"
#include "llab/plane.hpp"

namespace llab {

// Fenchel-Nielsen coordinates over the fixed chain pants decomposition.
//
// Curve order: g handle curves c_1..c_g first. For genus 2 the single
// remaining curve is the separating waist. For genus >= 3 the g leg curves
// l_1..l_g follow (handle i glued to the connector chain), then the g-3
// connector bridges. Lengths are geodesic lengths, twists are in length
// units.
struct FenchelNielsenCoords {
  int genus = 2;
  std::vector<double> lengths;
  std::vector<double> twists;

  int curve_count() const { return 3 * genus - 3; }
  void validate() const;

  friend bool operator==(const FenchelNielsenCoords&, const FenchelNielsenCoords&) = default;
};

// A discrete cocompact representation of the surface group built from FN
// coordinates by right-angled hexagon gluing. generators are the standard
// a_1,b_1,...,a_g,b_g with [a_1,b_1]...[a_g,b_g] = 1 up to relation_defect.
struct FuchsianRep {
  int genus = 2;
  std::vector<MobiusMap> generators;
  std::vector<MobiusMap> curve_elements;  // holonomy per FN curve, same order as coords
  double relation_defect = 0.0;
  FenchelNielsenCoords coords;

  const MobiusMap& generator(int i) const { return generators[static_cast<size_t>(i)]; }
  int alphabet_size() const { return 2 * static_cast<int>(generators.size()); }
  // Letters alternate generator, inverse: letter 2i = gen i, 2i+1 = gen i^-1.
  MobiusMap letter(int l) const;
  static int inverse_letter(int l) { return l ^ 1; }
  static std::string letter_name(int l);
  MobiusMap word(const std::vector<int>& letters) const;
};

FuchsianRep build_rep(const FenchelNielsenCoords& fn);

struct GroupElement {
  std::vector<int> letters;
  MobiusMap map;
};

// All distinct group elements with reduced word length <= max_word_length,
// deduplicated in PSL(2,R), ordered by length then lexicographic word.
// Throws EnumerationBudget past the length or element budget.
std::vector<GroupElement> enumerate_group(const FuchsianRep& rep, int max_word_length,
                                          size_t element_budget = 6'000'000);

// A differentiable curve t -> FN coordinates through base at t = 0.
struct TeichPath {
  FenchelNielsenCoords base;
  std::vector<double> d_lengths;
  std::vector<double> d_twists;
  double fd_step = 1e-3;

  static TeichPath twist_direction(const FenchelNielsenCoords& base, int curve, double h = 1e-3);
  static TeichPath length_direction(const FenchelNielsenCoords& base, int curve, double h = 1e-3);
  TeichPath reversed() const;
  TeichPath scaled(double factor) const;
  bool is_constant() const;
  FenchelNielsenCoords at(double t) const;
};

}  // namespace llab
