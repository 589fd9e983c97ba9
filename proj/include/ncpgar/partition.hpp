#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ncpgar/params.hpp"

namespace ncpgar {

/// Set partition of a circle mu_m (points 0..m-1), optionally together with
/// the center point 0 of the complex plane, addressed as point id m.
///
/// The representation is canonical: part ids are assigned by ascending
/// minimal element under the total order 0 < 1 < ... < m-1 < center, so
/// structural equality is partition equality.
class Partition {
 public:
  Partition() = default;

  Partition(int circle, bool with_center, std::vector<int> assignment)
      : circle_(circle), center_(with_center), part_of_(std::move(assignment)) {
    canonicalize();
  }

  static Partition discrete(int circle, bool with_center) {
    std::vector<int> a(circle + (with_center ? 1 : 0));
    for (int i = 0; i < (int)a.size(); ++i) a[i] = i;
    return Partition(circle, with_center, std::move(a));
  }

  static Partition trivial(int circle, bool with_center) {
    std::vector<int> a(circle + (with_center ? 1 : 0), 0);
    return Partition(circle, with_center, std::move(a));
  }

  /// Build from explicit parts; unlisted points become singletons.
  static Partition from_parts(int circle, bool with_center,
                              const std::vector<std::vector<int>>& parts) {
    const int pc = circle + (with_center ? 1 : 0);
    std::vector<int> a(pc, -1);
    int next = 0;
    for (const auto& part : parts) {
      if (part.empty()) continue;
      for (int x : part) {
        if (x < 0 || x >= pc) throw DomainError("partition point out of range");
        if (a[x] != -1) throw DomainError("point assigned to two parts");
        a[x] = next;
      }
      ++next;
    }
    for (int i = 0; i < pc; ++i)
      if (a[i] == -1) a[i] = next++;
    return Partition(circle, with_center, std::move(a));
  }

  int circle_size() const { return circle_; }
  bool has_center() const { return center_; }
  int center() const { return circle_; }  // point id of the center
  int point_count() const { return circle_ + (center_ ? 1 : 0); }
  int part_count() const { return parts_; }

  int part_of(int point) const { return part_of_[point]; }
  bool same_part(int a, int b) const { return part_of_[a] == part_of_[b]; }
  const std::vector<int>& assignment() const { return part_of_; }

  /// Parts in canonical order; points inside each part ascend (center last).
  std::vector<std::vector<int>> parts() const {
    std::vector<std::vector<int>> out(parts_);
    for (int i = 0; i < point_count(); ++i) out[part_of_[i]].push_back(i);
    return out;
  }

  std::vector<int> circle_points_of_part(int id) const {
    std::vector<int> out;
    for (int i = 0; i < circle_; ++i)
      if (part_of_[i] == id) out.push_back(i);
    return out;
  }

  bool part_has_center(int id) const {
    return center_ && part_of_[circle_] == id;
  }

  bool is_discrete() const { return parts_ == point_count(); }
  bool is_trivial() const { return parts_ == 1; }

  bool same_carrier(const Partition& v) const {
    return circle_ == v.circle_ && center_ == v.center_;
  }

  bool refines(const Partition& v) const {
    require_same_carrier(v);
    std::vector<int> image(parts_, -1);
    for (int i = 0; i < point_count(); ++i) {
      int p = part_of_[i];
      if (image[p] == -1)
        image[p] = v.part_of_[i];
      else if (image[p] != v.part_of_[i])
        return false;
    }
    return true;
  }

  /// Common refinement (the set-partition meet).
  Partition meet_sets(const Partition& v) const {
    require_same_carrier(v);
    std::map<std::pair<int, int>, int> ids;
    std::vector<int> a(point_count());
    for (int i = 0; i < point_count(); ++i) {
      auto key = std::make_pair(part_of_[i], v.part_of_[i]);
      auto it = ids.find(key);
      if (it == ids.end()) it = ids.emplace(key, (int)ids.size()).first;
      a[i] = it->second;
    }
    return Partition(circle_, center_, std::move(a));
  }

  /// Set-partition join (transitive closure of the two relations).
  Partition join_sets(const Partition& v) const {
    require_same_carrier(v);
    std::vector<int> uf(point_count());
    for (int i = 0; i < point_count(); ++i) uf[i] = i;
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    auto unite = [&](int x, int y) { uf[find(x)] = find(y); };
    auto absorb = [&](const Partition& w) {
      std::vector<int> rep(w.parts_, -1);
      for (int i = 0; i < w.point_count(); ++i) {
        int p = w.part_of_[i];
        if (rep[p] == -1)
          rep[p] = i;
        else
          unite(rep[p], i);
      }
    };
    absorb(*this);
    absorb(v);
    std::vector<int> a(point_count());
    for (int i = 0; i < point_count(); ++i) a[i] = find(i);
    return Partition(circle_, center_, std::move(a));
  }

  /// Image under the circle rotation k steps counterclockwise; center fixed.
  Partition rotated(int k) const {
    std::vector<int> a(point_count());
    for (int i = 0; i < circle_; ++i) a[mod(i + k, circle_)] = part_of_[i];
    if (center_) a[circle_] = part_of_[circle_];
    return Partition(circle_, center_, std::move(a));
  }

  /// Image under the axial mirror i -> axis - i; center fixed.
  Partition mirrored(int axis) const {
    std::vector<int> a(point_count());
    for (int i = 0; i < circle_; ++i) a[mod(axis - i, circle_)] = part_of_[i];
    if (center_) a[circle_] = part_of_[circle_];
    return Partition(circle_, center_, std::move(a));
  }

  /// Partition induced on a subset of points, relabelled through `points`:
  /// new point i corresponds to old point points[i]. The result carries no
  /// center; a center among `points` becomes an ordinary label.
  Partition restricted(const std::vector<int>& points) const {
    std::vector<int> a(points.size());
    for (size_t i = 0; i < points.size(); ++i) a[i] = part_of_[points[i]];
    return Partition((int)points.size(), false, std::move(a));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  void require_same_carrier(const Partition& v) const {
    if (!same_carrier(v)) throw DomainError("partitions on different carriers");
  }

  void canonicalize() {
    if ((int)part_of_.size() != point_count())
      throw DomainError("partition assignment has wrong size");
    std::map<int, int> relabel;
    for (int i = 0; i < point_count(); ++i) {
      auto it = relabel.find(part_of_[i]);
      if (it == relabel.end()) it = relabel.emplace(part_of_[i], (int)relabel.size()).first;
      part_of_[i] = it->second;
    }
    parts_ = (int)relabel.size();
  }

  int circle_ = 0;
  bool center_ = false;
  int parts_ = 0;
  std::vector<int> part_of_;
};

// ---------------------------------------------------------------------------
// Partition literals: parts in braces, comma-separated tokens, "C" = center,
// integers 0..m-1 = circle points. Singletons may be omitted on input and
// are always printed on output. Example: "{C,0}{2,3}".

inline std::string print_literal(const Partition& u) {
  std::string out;
  for (const auto& part : u.parts()) {
    out += '{';
    bool first = true;
    if (u.has_center() && part.back() == u.center()) {
      out += 'C';
      first = false;
    }
    for (int x : part) {
      if (u.has_center() && x == u.center()) continue;
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    }
    out += '}';
  }
  return out;
}

inline Partition parse_literal(int circle, bool with_center, const std::string& text) {
  std::vector<std::vector<int>> parts;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError("expected '{' in partition literal");
    ++i;
    std::vector<int> part;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated part in partition literal");
      if (text[i] == '}') {
        ++i;
        break;
      }
      if (text[i] == 'C') {
        if (!with_center) throw ParseError("center token 'C' not allowed here");
        part.push_back(circle);
        ++i;
      } else if (std::isdigit((unsigned char)text[i])) {
        int v = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
          v = v * 10 + (text[i] - '0');
          ++i;
        }
        if (v >= circle) throw ParseError("circle index out of range in literal");
        part.push_back(v);
      } else {
        throw ParseError(std::string("unexpected character '") + text[i] + "' in literal");
      }
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (!part.empty()) parts.push_back(std::move(part));
    skip_ws();
  }
  try {
    return Partition::from_parts(circle, with_center, parts);
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
}

}  // namespace ncpgar
