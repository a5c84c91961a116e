#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vkt/errors.hpp"

namespace vkt {

// Braid word in letter notation: 'a' = sigma_1 (a positive crossing between
// strands 1 and 2), 'A' = sigma_1 inverse, 'b' = sigma_2, and so on.
// Generators are stored as signed indices (+i / -i); the strand count is
// inferred as 1 + max generator index.  The empty word is rejected; for an
// unknot use the one-letter word "a" (a single kink).
class BraidWord {
 public:
  static BraidWord parse(std::string_view text);
  explicit BraidWord(std::vector<int> generators);

  const std::vector<int>& generators() const { return gens_; }
  int strand_count() const { return strands_; }
  std::size_t length() const { return gens_.size(); }

  std::string render() const;  // inverse of parse
  BraidWord mirrored() const;  // every generator sign flipped

  int writhe() const;  // sum of generator signs
  // Permutation induced on strands (0-based): perm[i] = where strand i ends.
  std::vector<int> permutation() const;
  int cycle_count() const;
  bool closes_to_knot() const { return cycle_count() == 1; }

  bool operator==(const BraidWord&) const = default;

 private:
  std::vector<int> gens_;
  int strands_;
};

// Word of b1 followed by b2 with b2's strand indices shifted; the closure is
// the connected sum of the two closures.  Both inputs must close to knots.
BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2);

}  // namespace vkt
