#include "psgcr/ramsey.hpp"

#include <algorithm>

#include "psgcr/parallel.hpp"

namespace psgcr {

namespace {

int top_bit(Block b) { return 63 - __builtin_clzll(b); }

std::string block_str(Block b) {
  std::string out = "{";
  bool first = true;
  for (int v : block_ints(b)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

} // namespace

Block block_of(const std::vector<int>& ints) {
  Block b = 0;
  for (int v : ints) {
    if (v < 1 || v > 64) raise(Err::BadArgument, "block values must be in 1..64");
    b |= Block{1} << (v - 1);
  }
  if (!b) raise(Err::BadArgument, "blocks must be nonempty");
  return b;
}

std::vector<int> block_ints(Block b) {
  std::vector<int> out;
  while (b) {
    out.push_back(__builtin_ctzll(b) + 1);
    b &= b - 1;
  }
  return out;
}

BlockSeq make_block_seq(const std::vector<std::vector<int>>& blocks) {
  if (blocks.empty()) raise(Err::BadArgument, "block sequence must be nonempty");
  BlockSeq seq;
  for (const auto& ints : blocks) seq.blocks.push_back(block_of(ints));
  for (size_t i = 1; i < seq.blocks.size(); ++i)
    if (top_bit(seq.blocks[i - 1]) >= __builtin_ctzll(seq.blocks[i]))
      raise(Err::BadArgument,
            "blocks must be order separated: max of each below min of the next");
  return seq;
}

std::string BlockSeq::str() const {
  std::string out = "<";
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += block_str(blocks[i]);
  }
  return out + ">";
}

std::string Coloring::str() const {
  std::string out;
  for (Block cell = 1; cell < (Block{1} << r); ++cell) {
    out += block_str(cell);
    out += ":";
    out += std::to_string(at(cell));
    out += "\n";
  }
  return out;
}

std::optional<BlockSeq> find_mono_ip(const Coloring& c, int s) {
  if (s < 1) raise(Err::BadArgument, "find_mono_ip: s must be positive");
  if (c.r < 1 || c.color.size() != (size_t{1} << c.r) - 1)
    raise(Err::BadArgument, "find_mono_ip: coloring is not total");

  std::vector<Block> chosen;
  std::vector<Block> unions; // FU of the chosen blocks, grows 2^j - 1
  int col = 0;

  // candidate blocks in one window [lo+1..r] ascend numerically, which gives
  // the lexicographic order on block tuples
  std::function<bool(int)> rec = [&](int lo) {
    if (static_cast<int>(chosen.size()) == s) return true;
    int width = c.r - lo;
    if (width <= 0) return false;
    for (Block v = 1; v < (Block{1} << width); ++v) {
      Block mask = v << lo;
      if (chosen.empty()) col = c.at(mask);
      size_t rollback = unions.size();
      bool ok = c.at(mask) == col;
      for (size_t i = 0; i < rollback && ok; ++i)
        ok = c.at(unions[i] | mask) == col;
      if (ok) {
        for (size_t i = 0; i < rollback; ++i) unions.push_back(unions[i] | mask);
        unions.push_back(mask);
        chosen.push_back(mask);
        if (rec(top_bit(mask) + 1)) return true;
        chosen.pop_back();
        unions.resize(rollback);
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return BlockSeq{chosen};
}

namespace {

// good-coloring backtracker for one r: cells ordered by max element then
// lexicographically, {1} pinned to color 1, pruning on completed
// monochromatic union tuples
class FuSearcher {
public:
  FuSearcher(int r, int s, int k) : r_(r), s_(s), k_(k) {
    size_t n = (size_t{1} << r) - 1;
    cells_.reserve(n);
    for (Block m = 1; m <= n; ++m) cells_.push_back(m);
    std::sort(cells_.begin(), cells_.end(), [](Block a, Block b) {
      int ta = top_bit(a), tb = top_bit(b);
      if (ta != tb) return ta < tb;
      return block_ints(a) < block_ints(b);
    });
    pos_.assign(n + 1, 0);
    for (size_t i = 0; i < n; ++i) pos_[cells_[i]] = static_cast<int>(i);
    buckets_.assign(n, {});
    collect_tuples();
  }

  size_t cell_count() const { return cells_.size(); }

  // assign[] uses 0 for unassigned; returns a complete good coloring
  std::optional<Coloring> search(int workers) {
    std::vector<int> assign(cells_.size(), 0);
    assign[0] = 1;
    if (conflict(assign, 0)) return std::nullopt;
    if (cells_.size() == 1) return to_coloring(assign);

    int branch_levels = 0;
    if (workers > 1) {
      size_t want = 8 * static_cast<size_t>(workers), span = 1;
      while (span < want && branch_levels < static_cast<int>(cells_.size()) - 1 &&
             span * k_ <= 4096)
        span *= k_, ++branch_levels;
    }
    if (branch_levels == 0) {
      if (dfs(assign, 1)) return to_coloring(assign);
      return std::nullopt;
    }

    size_t branches = 1;
    for (int i = 0; i < branch_levels; ++i) branches *= k_;
    auto probe = [&](size_t b) -> std::optional<Coloring> {
      std::vector<int> local = assign;
      size_t rest = b;
      for (int lvl = branch_levels - 1; lvl >= 0; --lvl) {
        local[1 + lvl] = static_cast<int>(rest % k_) + 1;
        rest /= k_;
      }
      for (int lvl = 0; lvl < branch_levels; ++lvl)
        if (conflict(local, 1 + lvl)) return std::nullopt;
      if (dfs(local, 1 + branch_levels)) return to_coloring(local);
      return std::nullopt;
    };
    auto hit = parallel_first<Coloring>(branches, workers, probe);
    if (!hit) return std::nullopt;
    return hit->second;
  }

private:
  void collect_tuples() {
    std::vector<Block> chosen;
    std::function<void(int)> rec = [&](int lo) {
      if (static_cast<int>(chosen.size()) == s_) {
        std::vector<int> positions;
        size_t count = chosen.size();
        std::vector<Block> unions;
        for (size_t i = 0; i < count; ++i) {
          size_t base = unions.size();
          for (size_t j = 0; j < base; ++j) unions.push_back(unions[j] | chosen[i]);
          unions.push_back(chosen[i]);
        }
        int last = 0;
        for (Block u : unions) {
          positions.push_back(pos_[u]);
          last = std::max(last, pos_[u]);
        }
        buckets_[last].push_back(tuples_.size());
        tuples_.push_back(std::move(positions));
        return;
      }
      int width = r_ - lo;
      if (width <= 0) return;
      for (Block v = 1; v < (Block{1} << width); ++v) {
        Block mask = v << lo;
        chosen.push_back(mask);
        rec(top_bit(mask) + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  }

  bool conflict(const std::vector<int>& assign, int p) const {
    for (size_t id : buckets_[p]) {
      const auto& positions = tuples_[id];
      int col = assign[positions[0]];
      bool mono = true;
      for (int q : positions)
        if (assign[q] != col) {
          mono = false;
          break;
        }
      if (mono) return true;
    }
    return false;
  }

  bool dfs(std::vector<int>& assign, size_t p) const {
    if (p == assign.size()) return true;
    for (int col = 1; col <= k_; ++col) {
      assign[p] = col;
      if (!conflict(assign, static_cast<int>(p)) && dfs(assign, p + 1)) return true;
    }
    assign[p] = 0;
    return false;
  }

  Coloring to_coloring(const std::vector<int>& assign) const {
    Coloring c;
    c.r = r_;
    c.k = k_;
    c.color.assign(cells_.size(), 0);
    for (size_t i = 0; i < cells_.size(); ++i) c.color[cells_[i] - 1] = assign[i];
    return c;
  }

  int r_, s_, k_;
  std::vector<Block> cells_;
  std::vector<int> pos_;
  std::vector<std::vector<int>> tuples_; // union positions per block tuple
  std::vector<std::vector<size_t>> buckets_;
};

} // namespace

FuResult fu_ramsey_number(int s, int k, int r_max, int workers) {
  if (s < 1 || k < 1 || r_max < 1)
    raise(Err::BadArgument, "fu_ramsey_number: arguments must be positive");
  FuResult out;
  std::optional<Coloring> prev;
  for (int r = 1; r <= r_max; ++r) {
    FuSearcher searcher(r, s, k);
    auto good = searcher.search(workers);
    if (!good) {
      out.r = r;
      out.good_at_prev = std::move(prev);
      return out;
    }
    prev = std::move(good);
  }
  out.good_at_prev = std::move(prev);
  return out;
}

BlockSeq transfer_coloring(const BlockSeq& H, const std::function<int(Block)>& c,
                           int s) {
  int r = static_cast<int>(H.blocks.size());
  if (r < 1) raise(Err::BadArgument, "transfer_coloring: H must be nonempty");
  Coloring d;
  d.r = r;
  d.color.assign((size_t{1} << r) - 1, 0);
  for (Block F = 1; F < (Block{1} << r); ++F) {
    Block u = 0;
    Block rest = F;
    while (rest) {
      u |= H.blocks[__builtin_ctzll(rest)];
      rest &= rest - 1;
    }
    int col = c(u);
    if (col < 1) raise(Err::BadArgument, "transfer_coloring: colors must be >= 1");
    d.color[F - 1] = col;
    d.k = std::max(d.k, col);
  }
  auto mono = find_mono_ip(d, s);
  if (!mono)
    raise(Err::RTooSmall,
          "no monochromatic structure in the induced coloring; the block "
          "sequence is shorter than the transfer radius");
  BlockSeq K;
  for (Block F : mono->blocks) {
    Block u = 0;
    while (F) {
      u |= H.blocks[__builtin_ctzll(F)];
      F &= F - 1;
    }
    K.blocks.push_back(u);
  }
  return K;
}

std::optional<int> ip_star_intersection_q(int r, int s, int r_max, int workers) {
  if (r < 1 || s < 1)
    raise(Err::BadArgument, "ip_star_intersection_q: arguments must be positive");
  return fu_ramsey_number(std::max(r, s), 2, r_max, workers).r;
}

std::vector<Rat> snotcr_ground(int T) {
  std::vector<Rat> d;
  for (int t = 1; t <= T; ++t) d.push_back(Rat{t - 1, t}); // 1 - 1/t
  d.push_back(Rat{1, 1});
  for (int v = 2; v <= T + 1; ++v) d.push_back(Rat{v, 1});
  return d;
}

SnotcrCertificate snotcr_verify(int T, int workers) {
  if (T < 2) raise(Err::BadArgument, "snotcr_verify: T must be at least 2");
  SnotcrCertificate cert;
  cert.T = T;
  cert.instance = Psg::finset_ordered(snotcr_ground(T));
  const Psg& s = *cert.instance;

  ElemId one = s.id_of(Element::rat_set({Rat{1, 1}}));
  cert.L = {one};

  for (int n = 1; n <= T; ++n) {
    std::vector<ElemId> values;
    for (int t = 1; t <= T; ++t) {
      Rat v = t <= n ? Rat{t - 1, t} : Rat{t, 1};
      values.push_back(s.id_of(Element::rat_set({v})));
    }
    cert.fs.emplace_back(cert.instance, std::move(values));
  }

  ElemSet everything = s.universe_set();
  cert.all_proven_empty = true;
  for (int r = 1; r <= T; ++r) {
    SnotcrCertificate::Run run;
    run.r = r;
    run.result = witness_search(cert.instance, everything, cert.L,
                                {cert.fs[r - 1]}, r, kDefaultMMax, workers);
    if (run.result.status != SearchStatus::ProvenEmpty)
      cert.all_proven_empty = false;
    cert.runs.push_back(std::move(run));
  }

  cert.sigma_min_above_one = true;
  s.sigma(cert.L).for_each([&](ElemId y) {
    if (!(Rat{1, 1} < s.ordered_min_value(y))) cert.sigma_min_above_one = false;
  });
  cert.f_min_below_one = true;
  for (int r = 1; r <= T; ++r)
    for (int t = 1; t <= r; ++t)
      if (!(s.ordered_min_value(cert.fs[r - 1].value(t)) < Rat{1, 1}))
        cert.f_min_below_one = false;
  return cert;
}

} // namespace psgcr
