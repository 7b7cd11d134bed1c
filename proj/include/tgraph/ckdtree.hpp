#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <vector>

#include "tgraph/bitvector.hpp"
#include "tgraph/core.hpp"

namespace tgraph {

// Compressed 2^D-ary decomposition tree over a D-dimensional boolean tensor
// with power-of-two side length. Level-order layout: N holds the child
// occupancy bits of every expanded node, B holds one type bit per occupied
// child (1 = the child partition has a single set cell and collapses to a
// coordinate leaf), C holds the cell coordinates of coordinate leaves above
// the last level, relative to their partition origin.
template <unsigned D>
class CkdTree {
  static_assert(D >= 2);

 public:
  using Point = std::array<std::uint32_t, D>;

  struct Box {
    Point lo, hi;  // inclusive
  };

  struct Stats {
    std::uint64_t visited = 0;  // N bits examined
  };

  CkdTree() = default;

  CkdTree(std::vector<Point> points, std::uint32_t side) {
    side_ = std::max<std::uint32_t>(2, std::bit_ceil(side));
    height_ = static_cast<std::uint32_t>(std::countr_zero(side_));
    if (static_cast<std::uint64_t>(height_) * D > 63)
      throw RangeError("tensor side too large for this dimensionality");
    for (const Point& p : points)
      for (std::uint32_t x : p)
        if (x >= side_) throw RangeError("cell coordinate outside tensor");
    std::vector<std::uint64_t> keys;
    keys.reserve(points.size());
    for (const Point& p : points) keys.push_back(morton_key(p));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    cells_ = keys.size();
    build(keys);
  }

  std::uint32_t side() const { return side_; }
  std::uint32_t height() const { return height_; }
  std::uint64_t cell_count() const { return cells_; }
  const BitVector& child_flags() const { return flags_; }
  const BitVector& leaf_types() const { return types_; }
  const std::vector<std::uint64_t>& leaf_coord_bits() const { return coords_; }
  std::uint64_t leaf_coord_count() const { return coord_off_.size(); }

  // Coordinate-leaf entry as stored: relative coordinates, one per dimension.
  Point leaf_coords(std::uint64_t index, std::uint32_t coord_bits) const {
    Point out{};
    std::uint64_t bit = coord_off_[index];
    for (unsigned dim = 0; dim < D; ++dim) {
      out[dim] = read_bits(bit, coord_bits);
      bit += coord_bits;
    }
    return out;
  }

  std::uint64_t space_bits() const {
    return flags_.size_bits() + types_.size_bits() + coord_bits_used_ +
           coord_off_.size() * 64 + 192;
  }

  bool contains(const Point& p, Stats* stats = nullptr) const {
    if (cells_ == 0) return false;
    std::uint64_t block = 0;
    std::uint32_t span = side_;
    Point origin{};
    for (;;) {
      std::uint32_t child_span = span >> 1;
      unsigned idx = 0;
      for (unsigned dim = 0; dim < D; ++dim) {
        bool hi = p[dim] - origin[dim] >= child_span;
        idx = (idx << 1) | (hi ? 1u : 0u);
        if (hi) origin[dim] += child_span;
      }
      std::uint64_t pos = block * kChildren + idx;
      if (stats) stats->visited++;
      if (!flags_.get(pos + 1)) return false;
      std::uint64_t ones_before = flags_.rank1(pos);
      bool leaf = types_.get(ones_before + 1);
      if (leaf) {
        if (child_span == 1) return true;
        Point rel =
            leaf_coords(types_.rank1(ones_before), coord_width(child_span));
        for (unsigned dim = 0; dim < D; ++dim)
          if (origin[dim] + rel[dim] != p[dim]) return false;
        return true;
      }
      block = 1 + (ones_before - types_.rank1(ones_before));
      span = child_span;
    }
  }

  // All set cells inside the box, in traversal order.
  std::vector<Point> collect(const Box& box, Stats* stats = nullptr) const {
    std::vector<Point> out;
    for (unsigned dim = 0; dim < D; ++dim)
      if (box.lo[dim] > box.hi[dim]) return out;
    if (cells_ == 0) return out;
    collect_rec(0, Point{}, side_, box, out, stats);
    return out;
  }

 private:
  friend class IndexCodec;

  static constexpr std::uint64_t kChildren = std::uint64_t{1} << D;

  std::uint32_t coord_width(std::uint32_t span) const {
    return static_cast<std::uint32_t>(std::countr_zero(span));
  }

  std::uint64_t morton_key(const Point& p) const {
    std::uint64_t key = 0;
    for (std::uint32_t level = 0; level < height_; ++level) {
      std::uint32_t shift = height_ - 1 - level;
      for (unsigned dim = 0; dim < D; ++dim)
        key = (key << 1) | ((p[dim] >> shift) & 1);
    }
    return key;
  }

  void build(const std::vector<std::uint64_t>& keys) {
    struct Node {
      std::uint64_t lo, hi;      // key range [lo, hi)
      std::uint32_t depth;       // 0 = root
    };
    BitVectorBuilder flags, types;
    std::vector<Node> queue;
    queue.push_back({0, keys.size(), 0});
    std::size_t head = 0;
    while (head < queue.size()) {
      Node node = queue[head++];
      std::uint32_t child_shift = (height_ - node.depth - 1) * D;
      std::uint64_t lo = node.lo;
      for (std::uint64_t idx = 0; idx < kChildren; ++idx) {
        std::uint64_t hi = lo;
        while (hi < node.hi &&
               ((keys[hi] >> child_shift) & (kChildren - 1)) == idx)
          ++hi;
        flags.push_back(hi > lo);
        if (hi > lo) {
          bool last_level = node.depth + 1 == height_;
          bool single = hi - lo == 1;
          types.push_back(single);
          if (single && !last_level) {
            std::uint32_t width = height_ - node.depth - 1;
            std::uint64_t rel = keys[lo] & ((std::uint64_t{1} << (width * D)) - 1);
            push_coords(rel, width);
          } else if (!single) {
            queue.push_back({lo, hi, node.depth + 1});
          }
        }
        lo = hi;
      }
    }
    flags_ = flags.build();
    types_ = types.build();
  }

  // Unpack the low width*D interleaved key bits into per-dimension values and
  // append them to the coordinate store.
  void push_coords(std::uint64_t rel_key, std::uint32_t width) {
    Point rel{};
    for (std::uint32_t level = 0; level < width; ++level)
      for (unsigned dim = 0; dim < D; ++dim) {
        std::uint32_t shift = (width - level) * D - 1 - dim;
        rel[dim] = (rel[dim] << 1) | ((rel_key >> shift) & 1);
      }
    coord_off_.push_back(coord_bits_used_);
    for (unsigned dim = 0; dim < D; ++dim) {
      write_bits(rel[dim], width);
    }
  }

  void write_bits(std::uint32_t value, std::uint32_t width) {
    for (std::uint32_t k = width; k-- > 0;) {
      std::uint64_t bit = coord_bits_used_++;
      if (bit / 64 >= coords_.size()) coords_.push_back(0);
      if ((value >> k) & 1) coords_[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }

  std::uint32_t read_bits(std::uint64_t bit, std::uint32_t width) const {
    std::uint32_t value = 0;
    for (std::uint32_t k = 0; k < width; ++k, ++bit)
      value = (value << 1) |
              ((coords_[bit / 64] >> (bit % 64)) & 1);
    return value;
  }

  void collect_rec(std::uint64_t block, Point origin, std::uint32_t span,
                   const Box& box, std::vector<Point>& out,
                   Stats* stats) const {
    std::uint32_t child_span = span >> 1;
    for (std::uint64_t idx = 0; idx < kChildren; ++idx) {
      Point corg = origin;
      bool overlap = true;
      for (unsigned dim = 0; dim < D; ++dim) {
        if ((idx >> (D - 1 - dim)) & 1) corg[dim] += child_span;
        if (corg[dim] > box.hi[dim] ||
            corg[dim] + child_span - 1 < box.lo[dim])
          overlap = false;
      }
      if (!overlap) continue;
      std::uint64_t pos = block * kChildren + idx;
      if (stats) stats->visited++;
      if (!flags_.get(pos + 1)) continue;
      std::uint64_t ones_before = flags_.rank1(pos);
      bool leaf = types_.get(ones_before + 1);
      if (leaf) {
        Point cell = corg;
        if (child_span > 1) {
          Point rel =
              leaf_coords(types_.rank1(ones_before), coord_width(child_span));
          for (unsigned dim = 0; dim < D; ++dim) cell[dim] += rel[dim];
        }
        bool inside = true;
        for (unsigned dim = 0; dim < D; ++dim)
          if (cell[dim] < box.lo[dim] || cell[dim] > box.hi[dim])
            inside = false;
        if (inside) out.push_back(cell);
      } else {
        collect_rec(1 + (ones_before - types_.rank1(ones_before)), corg,
                    child_span, box, out, stats);
      }
    }
  }

  std::uint32_t side_ = 2;
  std::uint32_t height_ = 1;
  std::uint64_t cells_ = 0;
  BitVector flags_;  // N
  BitVector types_;  // B
  std::vector<std::uint64_t> coords_;     // C, bit packed
  std::vector<std::uint64_t> coord_off_;  // first bit of each C entry
  std::uint64_t coord_bits_used_ = 0;
};

// Temporal adapter: the contact set as a 4-dimensional boolean tensor over
// (u, v, t_begin, t_end). Every query becomes one or two box searches.
class CkdIndex : public TemporalGraphIndex {
 public:
  using Tree = CkdTree<4>;

  CkdIndex(std::vector<Contact> contacts, std::uint32_t n, std::uint32_t tau)
      : CkdIndex(validate(std::move(contacts), n, tau), n, tau, kValidated) {}

  std::string_view name() const override { return "ckd"; }
  std::uint32_t vertex_count() const override { return n_; }
  std::uint32_t lifetime() const override { return tau_; }
  std::uint64_t contact_count() const override { return contact_count_; }
  std::uint64_t space_bits() const override { return tree_.space_bits() + 128; }

  const Tree& tree() const { return tree_; }

  bool has_edge(VertexId u, VertexId v, const QueryInterval& q) const override {
    require_vertex(u);
    require_vertex(v);
    require_interval(q);
    return !tree_.collect(interval_box(q, {u, u}, {v, v})).empty();
  }

  // Examined-node count of the has_edge box search; used to watch the
  // O(c^(1/2)) growth trend.
  std::uint64_t has_edge_visits(VertexId u, VertexId v,
                                const QueryInterval& q) const {
    Tree::Stats stats;
    (void)tree_.collect(interval_box(q, {u, u}, {v, v}), &stats);
    return stats.visited;
  }

  std::optional<Timestamp> next_activation(VertexId u, VertexId v,
                                           Timestamp t) const override {
    require_vertex(u);
    require_vertex(v);
    require_time(t);
    Tree::Box box{{u, v, t, 0}, {u, v, tau_ - 1, tau_ - 1}};
    std::optional<Timestamp> best;
    for (const Tree::Point& p : tree_.collect(box))
      if (!best || p[2] < *best) best = p[2];
    return best;
  }

  std::vector<VertexId> neighbors(VertexId u,
                                  const QueryInterval& q) const override {
    require_vertex(u);
    require_interval(q);
    return collect_dim(interval_box(q, {u, u}, {0, n_ - 1}), 1);
  }

  std::vector<VertexId> neighbors_r(VertexId v,
                                    const QueryInterval& q) const override {
    require_vertex(v);
    require_interval(q);
    return collect_dim(interval_box(q, {0, n_ - 1}, {v, v}), 0);
  }

  std::vector<Edge> aggregate(const QueryInterval& q) const override {
    require_interval(q);
    return collect_edges(interval_box(q, {0, n_ - 1}, {0, n_ - 1}));
  }

  std::vector<Edge> activated_edges(const QueryInterval& q) const override {
    require_weak_or_point(q);
    Tree::Box box{{0, 0, q.t_begin, 0},
                  {n_ - 1, n_ - 1, q.t_end, tau_ - 1}};
    return collect_edges(box);
  }

  std::vector<Edge> deactivated_edges(const QueryInterval& q) const override {
    require_weak_or_point(q);
    Tree::Box box{{0, 0, 0, q.t_begin},
                  {n_ - 1, n_ - 1, tau_ - 1, q.t_end}};
    return collect_edges(box);
  }

  std::vector<Edge> changed_edges(const QueryInterval& q) const override {
    return changed_from_events(q);
  }

 private:
  friend class IndexCodec;

  struct ValidatedTag {};
  static constexpr ValidatedTag kValidated{};

  CkdIndex() = default;

  CkdIndex(const std::vector<Contact>& contacts, std::uint32_t n,
           std::uint32_t tau, ValidatedTag)
      : n_(n), tau_(tau), contact_count_(contacts.size()) {
    std::vector<Tree::Point> points;
    points.reserve(contacts.size());
    for (const Contact& c : contacts)
      points.push_back({c.u, c.v, c.t_begin, c.t_end});
    tree_ = Tree(std::move(points), std::max(n_, tau_));
  }

  // Box over (u, v, t_begin, t_end) realizing interval semantics: a contact
  // overlaps [qb, qe] iff t_begin <= qe and t_end > qb; it covers the
  // interval iff t_begin <= qb and t_end > qe.
  Tree::Box interval_box(const QueryInterval& q,
                         std::pair<std::uint32_t, std::uint32_t> us,
                         std::pair<std::uint32_t, std::uint32_t> vs) const {
    Tree::Box box;
    box.lo = {us.first, vs.first, 0, 0};
    box.hi = {us.second, vs.second, 0, tau_ - 1};
    if (q.semantics == Semantics::kStrong) {
      box.hi[2] = q.t_begin;
      box.lo[3] = q.t_end + 1;
    } else {
      box.hi[2] = q.t_end;
      box.lo[3] = q.t_begin + 1;
    }
    return box;
  }

  std::vector<VertexId> collect_dim(const Tree::Box& box, unsigned dim) const {
    std::vector<VertexId> out;
    for (const Tree::Point& p : tree_.collect(box)) out.push_back(p[dim]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Edge> collect_edges(const Tree::Box& box) const {
    std::vector<Edge> out;
    for (const Tree::Point& p : tree_.collect(box)) out.emplace_back(p[0], p[1]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::uint32_t n_ = 0;
  std::uint32_t tau_ = 0;
  std::uint64_t contact_count_ = 0;
  Tree tree_;
};

}  // namespace tgraph
