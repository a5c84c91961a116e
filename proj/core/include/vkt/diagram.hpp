#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vkt/braid.hpp"
#include "vkt/errors.hpp"

namespace vkt {

// Canonical byte encoding of a diagram, invariant under crossing relabeling.
// Equal keys imply isomorphic diagrams, hence equal polynomial values.
struct DiagramKey {
  std::string bytes;
  bool operator==(const DiagramKey&) const = default;
  auto operator<=>(const DiagramKey&) const = default;
};

// Planar link diagram as a combinatorial map.  Each crossing carries four
// half-edge slots in counterclockwise order; at a braid crossing they sit at
// 0=NE 1=NW 2=SW 3=SE, with strands oriented downward (slots 0,1 incoming).
// The over strand runs through slots {axis, axis+2}.  Edges pair slot ends
// via conn(); crossing-free components are tracked as free loops.
//
// Diagrams born from braid closures are oriented and keep the invariant that
// every edge joins an out-slot (2,3) to an in-slot (0,1); the unoriented
// smoothing breaks that invariant and clears the oriented flag.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  int crossing_count() const { return static_cast<int>(axis_.size()); }
  int free_loops() const { return free_loops_; }
  bool oriented() const { return oriented_; }
  bool over_axis(int c) const { return axis_[c]; }
  int neighbor(int end) const { return conn_[end]; }

  // Oriented crossing sign; +1 for a positive braid generator.
  int sign(int c) const;
  int writhe() const;  // oriented diagrams only
  int component_count() const;

  LinkDiagram switch_crossing(int c) const;
  LinkDiagram smooth_oriented(int c) const;
  enum class Smoothing { horizontal, vertical };
  LinkDiagram smooth_unoriented(int c, Smoothing mode) const;

  // All available Reidemeister I/II reductions, applied to a fixed point.
  // kink_exponent is the signed count of removed R1 kinks (the exponent of
  // the Kauffman a-factor).
  struct Simplified {
    LinkDiagram diagram;
    int kink_exponent = 0;
  };
  Simplified simplified() const;

  DiagramKey canonical_key() const;           // unoriented encoder
  DiagramKey canonical_key_oriented() const;  // walk follows orientation

  // Traversal analysis used by the skein engines.  The walk order depends
  // only on connectivity (never on over/under data), so switching a crossing
  // leaves the walk unchanged.
  struct Walk {
    int first_bad = -1;     // first crossing first-visited on its under strand
    int components = 0;     // walk cycles + free loops
    int traversal_writhe = 0;  // writhe in the walk's orientation
  };
  Walk analyze() const;

  std::string debug_string() const;

  bool operator==(const LinkDiagram&) const = default;

  // Construction from a braid closure: one crossing per letter, strands
  // closing on the right, oriented downward.
  friend LinkDiagram closure(const BraidWord& b);

 private:
  int end(int c, int s) const { return 4 * c + s; }
  LinkDiagram splice(const std::vector<int>& dead, const std::vector<int>& joints,
                     const std::vector<uint8_t>& dropped) const;
  bool find_r1(int& c, int& s) const;
  bool find_r2(int& c, int& sc, int& d, int& sd) const;

  std::vector<int> conn_;        // end (4c+s) -> end
  std::vector<uint8_t> axis_;    // per crossing: over strand at {axis, axis+2}
  int free_loops_ = 0;
  bool oriented_ = true;
};

LinkDiagram closure(const BraidWord& b);

}  // namespace vkt
