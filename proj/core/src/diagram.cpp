#include "vkt/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vkt {

LinkDiagram closure(const BraidWord& b) {
  const auto& gens = b.generators();
  LinkDiagram d;
  d.conn_.assign(4 * gens.size(), -1);
  d.axis_.reserve(gens.size());
  std::vector<int> dangling(b.strand_count() + 1, -1);
  std::vector<int> first_top(b.strand_count() + 1, -1);
  for (int c = 0; c < static_cast<int>(gens.size()); ++c) {
    int g = gens[c];
    d.axis_.push_back(g > 0 ? 1 : 0);
    int col = std::abs(g);
    const int in_slot[2] = {1, 0}, out_slot[2] = {2, 3};
    for (int side = 0; side < 2; ++side) {
      int column = col + side;
      int ein = d.end(c, in_slot[side]);
      int eout = d.end(c, out_slot[side]);
      if (dangling[column] >= 0) {
        d.conn_[dangling[column]] = ein;
        d.conn_[ein] = dangling[column];
      } else {
        first_top[column] = ein;
      }
      dangling[column] = eout;
    }
  }
  for (int column = 1; column <= b.strand_count(); ++column) {
    if (dangling[column] >= 0) {
      d.conn_[dangling[column]] = first_top[column];
      d.conn_[first_top[column]] = dangling[column];
    } else {
      ++d.free_loops_;  // strand untouched by any crossing
    }
  }
  return d;
}

int LinkDiagram::sign(int c) const {
  if (!oriented_) throw ConsistencyError("crossing sign queried on unoriented diagram");
  // in-slots are {0,1}; the over strand enters at its in-side slot, which is
  // `axis` itself since axis is 0 or 1.
  return axis_[c] ? 1 : -1;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (int c = 0; c < crossing_count(); ++c) w += sign(c);
  return w;
}

LinkDiagram LinkDiagram::splice(const std::vector<int>& dead, const std::vector<int>& joints,
                                const std::vector<uint8_t>& dropped) const {
  LinkDiagram out;
  out.oriented_ = oriented_;
  out.free_loops_ = free_loops_;
  std::vector<char> is_dead(axis_.size(), 0);
  for (int c : dead) is_dead[c] = 1;
  std::vector<int> remap(axis_.size(), -1);
  int nc = 0;
  for (int c = 0; c < crossing_count(); ++c)
    if (!is_dead[c]) remap[c] = nc++;
  out.conn_.assign(4 * nc, -1);
  out.axis_.reserve(nc);
  for (int c = 0; c < crossing_count(); ++c)
    if (!is_dead[c]) out.axis_.push_back(axis_[c]);

  std::vector<char> touched(conn_.size(), 0);
  for (int c = 0; c < crossing_count(); ++c) {
    if (is_dead[c]) continue;
    for (int s = 0; s < 4; ++s) {
      int e = end(c, s);
      int ne = 4 * remap[c] + s;
      if (out.conn_[ne] >= 0) continue;
      int b = conn_[e];
      int guard = 0;
      while (is_dead[b / 4]) {
        touched[b] = 1;
        int j = joints[b];
        if (j < 0) throw ConsistencyError("splice chain hit an unjointed end");
        touched[j] = 1;
        b = conn_[j];
        if (++guard > static_cast<int>(conn_.size())) throw ConsistencyError("splice chain cycle");
      }
      int nb = 4 * remap[b / 4] + (b % 4);
      out.conn_[ne] = nb;
      out.conn_[nb] = ne;
    }
  }
  // closed chains entirely inside the removed crossings become free loops
  for (int x = 0; x < static_cast<int>(conn_.size()); ++x) {
    if (!is_dead[x / 4] || touched[x] || dropped[x] || joints[x] < 0) continue;
    int cur = x;
    int guard = 0;
    while (true) {
      touched[cur] = 1;
      int j = joints[cur];
      touched[j] = 1;
      cur = conn_[j];
      if (cur == x) break;
      if (++guard > static_cast<int>(conn_.size())) throw ConsistencyError("splice loop runaway");
    }
    ++out.free_loops_;
  }
  return out;
}

LinkDiagram LinkDiagram::switch_crossing(int c) const {
  if (c < 0 || c >= crossing_count()) throw Error("unknown crossing id " + std::to_string(c));
  LinkDiagram d = *this;
  d.axis_[c] ^= 1;
  return d;
}

namespace {
// joints helper: pair ends a<->b within the flat joint table
void joint_pair(std::vector<int>& joints, int a, int b) {
  joints[a] = b;
  joints[b] = a;
}
}  // namespace

LinkDiagram LinkDiagram::smooth_oriented(int c) const {
  if (c < 0 || c >= crossing_count()) throw Error("unknown crossing id " + std::to_string(c));
  if (!oriented_) throw ConsistencyError("oriented smoothing of unoriented diagram");
  // in-slots {0,1}, out-slots {2,3}: the orientation-respecting smoothing
  // joins 1-2 and 3-0 (strands continue downward).
  return smooth_unoriented(c, Smoothing::vertical);
}

LinkDiagram LinkDiagram::smooth_unoriented(int c, Smoothing mode) const {
  if (c < 0 || c >= crossing_count()) throw Error("unknown crossing id " + std::to_string(c));
  std::vector<int> joints(conn_.size(), -1);
  if (mode == Smoothing::horizontal) {
    joint_pair(joints, end(c, 0), end(c, 1));
    joint_pair(joints, end(c, 2), end(c, 3));
  } else {
    joint_pair(joints, end(c, 1), end(c, 2));
    joint_pair(joints, end(c, 3), end(c, 0));
  }
  LinkDiagram out = splice({c}, joints, std::vector<uint8_t>(conn_.size(), 0));
  if (mode == Smoothing::horizontal) out.oriented_ = false;
  return out;
}

bool LinkDiagram::find_r1(int& cc, int& ss) const {
  for (int c = 0; c < crossing_count(); ++c)
    for (int s = 0; s < 4; ++s)
      if (conn_[end(c, s)] == end(c, (s + 1) % 4)) {
        cc = c;
        ss = s;
        return true;
      }
  return false;
}

bool LinkDiagram::find_r2(int& c, int& sc, int& d, int& sd) const {
  // bigon: edges c.s -- d.(u+1) and c.(s+1) -- d.u with the same strand over
  // (or under) at both crossings
  for (c = 0; c < crossing_count(); ++c) {
    for (sc = 0; sc < 4; ++sc) {
      int e1 = conn_[end(c, sc)];
      int e2 = conn_[end(c, (sc + 1) % 4)];
      d = e1 / 4;
      if (d == c || e2 / 4 != d) continue;
      int u1 = e1 % 4, u2 = e2 % 4;
      if ((u1 + 3) % 4 != u2) continue;  // need u1 = u2 + 1 cyclically
      // strand through c at slot sc: over iff sc parity == axis; it enters d
      // at slot u1
      bool over_c = (sc % 2) == axis_[c];
      bool over_d = (u1 % 2) == axis_[d];
      if (over_c == over_d) {
        sd = u2;
        return true;
      }
    }
  }
  return false;
}

LinkDiagram::Simplified LinkDiagram::simplified() const {
  LinkDiagram cur = *this;
  int kinks = 0;
  while (true) {
    int c, s;
    if (cur.find_r1(c, s)) {
      // loop edge joins slots s, s+1; kink is positive iff s is an over slot
      kinks += (s % 2) == cur.axis_[c] ? 1 : -1;
      std::vector<int> joints(cur.conn_.size(), -1);
      joint_pair(joints, cur.end(c, (s + 2) % 4), cur.end(c, (s + 3) % 4));
      std::vector<uint8_t> dropped(cur.conn_.size(), 0);
      dropped[cur.end(c, s)] = 1;
      dropped[cur.end(c, (s + 1) % 4)] = 1;
      cur = cur.splice({c}, joints, dropped);
      continue;
    }
    int d, sd;
    if (cur.find_r2(c, s, d, sd)) {
      std::vector<int> joints(cur.conn_.size(), -1);
      for (int x : {c, d}) {
        joint_pair(joints, cur.end(x, 0), cur.end(x, 2));
        joint_pair(joints, cur.end(x, 1), cur.end(x, 3));
      }
      cur = cur.splice({c, d}, joints, std::vector<uint8_t>(cur.conn_.size(), 0));
      continue;
    }
    break;
  }
  return {std::move(cur), kinks};
}

LinkDiagram::Walk LinkDiagram::analyze() const {
  Walk w;
  int n = crossing_count();
  std::vector<char> walked(4 * n, 0);
  std::vector<int8_t> first_entry(n, -1);
  std::vector<std::array<int8_t, 2>> passes(n, {-1, -1});
  for (int start = 0; start < 4 * n; ++start) {
    if (walked[start]) continue;
    ++w.components;
    int e = start;
    while (!walked[e]) {
      int c = e / 4, s = e % 4;
      walked[e] = 1;
      walked[end(c, (s + 2) % 4)] = 1;
      if (first_entry[c] < 0) {
        first_entry[c] = static_cast<int8_t>(s);
        passes[c][0] = static_cast<int8_t>(s);
        bool over = (s % 2) == axis_[c];
        if (!over && w.first_bad < 0) w.first_bad = c;
      } else {
        passes[c][1] = static_cast<int8_t>(s);
      }
      e = conn_[end(c, (s + 2) % 4)];
    }
  }
  w.components += free_loops_;
  for (int c = 0; c < n; ++c) {
    int s1 = passes[c][0], s2 = passes[c][1];
    int so = (s1 % 2) == axis_[c] ? s1 : s2;
    int su = so == s1 ? s2 : s1;
    w.traversal_writhe += ((so - su) % 4 + 4) % 4 == 1 ? 1 : -1;
  }
  return w;
}

int LinkDiagram::component_count() const { return analyze().components; }

namespace {

// Encode one full walk of a connected piece from a given start end.  Walk
// order depends only on connectivity; tokens record over/under and relative
// slot data so equal encodings imply isomorphic pieces.
std::string encode_walk(const LinkDiagram& d, const std::vector<int>& piece_ends, int start,
                        bool oriented_walk) {
  std::string enc;
  std::vector<char> walked;  // indexed within piece_ends? use map by end id
  std::map<int, char> walked_map;
  std::map<int, int> visit_id;     // crossing -> id
  std::map<int, int> first_slot;   // crossing -> first entry slot
  std::vector<int> visit_order;    // id -> crossing
  auto walk_cycle = [&](int s0) {
    int e = s0;
    while (!walked_map[e]) {
      int c = e / 4, s = e % 4;
      walked_map[e] = 1;
      walked_map[4 * c + (s + 2) % 4] = 1;
      auto it = visit_id.find(c);
      if (it == visit_id.end()) {
        int id = static_cast<int>(visit_order.size());
        visit_id[c] = id;
        visit_order.push_back(c);
        first_slot[c] = s;
        bool over = (s % 2) == d.over_axis(c);
        enc.push_back(static_cast<char>(0x10 | (over ? 1 : 0)));
      } else {
        int id = it->second;
        int delta = ((s - first_slot[c]) % 4 + 4) % 4;
        enc.push_back(static_cast<char>(0x20 | (delta == 3 ? 1 : 0)));
        enc.push_back(static_cast<char>(id & 0xff));
        enc.push_back(static_cast<char>((id >> 8) & 0xff));
      }
      e = d.neighbor(4 * c + (s + 2) % 4);
    }
  };
  walk_cycle(start);
  // secondary cycles: deterministic label-free start rule
  while (true) {
    int best = -1;
    long best_rank = -1;
    for (int e : piece_ends) {
      if (walked_map[e]) continue;
      int c = e / 4, s = e % 4;
      auto it = visit_id.find(c);
      if (it == visit_id.end()) continue;  // reachable later via a visited crossing
      if (oriented_walk && s >= 2) continue;
      long rank = 8L * it->second + ((s - first_slot[c]) % 4 + 4) % 4;
      if (best < 0 || rank < best_rank) {
        best = e;
        best_rank = rank;
      }
    }
    if (best < 0) break;
    enc.push_back(0x01);
    walk_cycle(best);
  }
  return enc;
}

}  // namespace

DiagramKey LinkDiagram::canonical_key() const {
  // pieces = connected components of the crossing graph
  int n = crossing_count();
  std::vector<int> piece(n, -1);
  int npieces = 0;
  for (int c0 = 0; c0 < n; ++c0) {
    if (piece[c0] >= 0) continue;
    int id = npieces++;
    std::vector<int> stack{c0};
    piece[c0] = id;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        int d = conn_[end(c, s)] / 4;
        if (piece[d] < 0) {
          piece[d] = id;
          stack.push_back(d);
        }
      }
    }
  }
  bool orient = oriented_;
  std::vector<std::string> parts(npieces);
  for (int p = 0; p < npieces; ++p) {
    std::vector<int> ends;
    for (int c = 0; c < n; ++c)
      if (piece[c] == p)
        for (int s = 0; s < 4; ++s) ends.push_back(end(c, s));
    std::string best;
    for (int e : ends) {
      if (orient && e % 4 >= 2) continue;
      std::string enc = encode_walk(*this, ends, e, orient);
      if (best.empty() || enc < best) best = std::move(enc);
    }
    parts[p] = std::move(best);
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  key.push_back(orient ? 0x0F : 0x0E);
  for (auto& p : parts) {
    key += p;
    key.push_back(0x02);
  }
  key.push_back(static_cast<char>(free_loops_ & 0xff));
  return DiagramKey{std::move(key)};
}

DiagramKey LinkDiagram::canonical_key_oriented() const {
  if (!oriented_) throw ConsistencyError("oriented key of unoriented diagram");
  return canonical_key();
}

std::string LinkDiagram::debug_string() const {
  std::ostringstream out;
  out << "crossings=" << crossing_count() << " free_loops=" << free_loops_
      << (oriented_ ? " oriented\n" : " unoriented\n");
  for (int c = 0; c < crossing_count(); ++c) {
    out << "  X" << c << (axis_[c] ? "+" : "-") << " [";
    for (int s = 0; s < 4; ++s) {
      int b = conn_[end(c, s)];
      if (s) out << " ";
      out << "X" << b / 4 << "." << b % 4;
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace vkt
