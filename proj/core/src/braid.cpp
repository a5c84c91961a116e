#include "vkt/braid.hpp"

#include <algorithm>
#include <numeric>

namespace vkt {

BraidWord BraidWord::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty braid word (no canonical closure); use \"a\" for an unknot");
  std::vector<int> gens;
  gens.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch >= 'a' && ch <= 'z')
      gens.push_back(ch - 'a' + 1);
    else if (ch >= 'A' && ch <= 'Z')
      gens.push_back(-(ch - 'A' + 1));
    else
      throw ParseError("invalid character '" + std::string(1, ch) + "' at position " +
                       std::to_string(i + 1));
  }
  return BraidWord(std::move(gens));
}

BraidWord::BraidWord(std::vector<int> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw ParseError("empty braid word");
  int mx = 0;
  for (int g : gens_) {
    if (g == 0) throw ParseError("zero braid generator");
    mx = std::max(mx, std::abs(g));
  }
  strands_ = mx + 1;
}

std::string BraidWord::render() const {
  std::string s;
  s.reserve(gens_.size());
  for (int g : gens_) {
    int i = std::abs(g);
    if (i > 26) throw ParseError("generator index " + std::to_string(i) + " beyond letter range");
    s.push_back(static_cast<char>((g > 0 ? 'a' : 'A') + i - 1));
  }
  return s;
}

BraidWord BraidWord::mirrored() const {
  std::vector<int> g(gens_);
  for (int& x : g) x = -x;
  return BraidWord(std::move(g));
}

int BraidWord::writhe() const {
  int w = 0;
  for (int g : gens_) w += g > 0 ? 1 : -1;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> pos(strands_);  // pos[strand] = current column
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<int> at(strands_);  // at[column] = strand
  std::iota(at.begin(), at.end(), 0);
  for (int g : gens_) {
    int c = std::abs(g) - 1;  // columns c, c+1 swap
    std::swap(at[c], at[c + 1]);
    pos[at[c]] = c;
    pos[at[c + 1]] = c + 1;
  }
  // strand starting in column i ends in column pos-inverse... at[] already
  // maps final column -> starting strand; invert for start -> end.
  std::vector<int> perm(strands_);
  for (int col = 0; col < strands_; ++col) perm[at[col]] = col;
  return perm;
}

int BraidWord::cycle_count() const {
  std::vector<int> perm = permutation();
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

BraidWord connected_sum(const BraidWord& b1, const BraidWord& b2) {
  if (!b1.closes_to_knot() || !b2.closes_to_knot())
    throw NotAKnotError("connected_sum requires both closures to be knots");
  std::vector<int> gens = b1.generators();
  int shift = b1.strand_count() - 1;
  for (int g : b2.generators()) gens.push_back(g > 0 ? g + shift : g - shift);
  return BraidWord(std::move(gens));
}

}  // namespace vkt
