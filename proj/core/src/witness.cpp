#include "leecodes/witness.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "leecodes/criterion.hpp"
#include "leecodes/modular.hpp"

namespace leecodes::witness {

namespace {

// Depth-first placement with one occupancy bit per residue. Each placement
// marks its values in a fixed order, checking before every write; a failed or
// undone placement clears exactly the bits it set, replayed from `marked_`.
class Searcher {
 public:
  Searcher(std::size_t n, u64 p, const SearchOptions& options)
      : n_(n), p_(p), m_(p), options_(options), bits_((p + 63) / 64, 0), x_(n, 0) {
    marked_.reserve(p);
    set(0);
  }

  // Candidates for coordinate `level` given the current prefix.
  std::pair<u64, u64> range(std::size_t level) const {
    if (!options_.symmetry) return {1, p_ - 1};
    if (level == 0) return {1, 1};
    return {x_[level - 1] + 1, (p_ - 1) / 2};
  }

  bool place(std::size_t level, u64 v) {
    const std::size_t start = marked_.size();
    auto try_mark = [&](u64 r) {
      if (test(r)) return false;
      set(r);
      marked_.push_back(r);
      return true;
    };
    const u64 twice = modular::add_mod(v, v, m_);
    bool ok = try_mark(v) && try_mark(modular::neg_mod(v, m_)) && try_mark(twice) &&
              try_mark(modular::neg_mod(twice, m_));
    for (std::size_t j = 0; ok && j < level; ++j) {
      const u64 sum = modular::add_mod(v, x_[j], m_);
      const u64 diff = modular::sub_mod(v, x_[j], m_);
      ok = try_mark(sum) && try_mark(modular::neg_mod(sum, m_)) && try_mark(diff) &&
           try_mark(modular::neg_mod(diff, m_));
    }
    if (!ok) {
      undo(start);
      return false;
    }
    x_[level] = v;
    starts_.push_back(start);
    ++nodes_;
    return true;
  }

  void unplace() {
    undo(starts_.back());
    starts_.pop_back();
  }

  // Returns false when the search must stop (first witness found or limit hit).
  bool descend(std::size_t level) {
    if (level == n_) {
      found_.push_back(Witness{n_, p_, x_});
      return options_.find_all;
    }
    const auto [lo, hi] = range(level);
    for (u64 v = lo; v <= hi; ++v) {
      if (options_.node_limit && nodes_ >= *options_.node_limit) {
        truncated_ = true;
        return false;
      }
      if (!place(level, v)) continue;
      const bool keep_going = descend(level + 1);
      unplace();
      if (!keep_going) return false;
    }
    return true;
  }

  u64 nodes() const { return nodes_; }
  bool truncated() const { return truncated_; }
  std::vector<Witness>& found() { return found_; }

 private:
  bool test(u64 r) const { return (bits_[r >> 6] >> (r & 63)) & 1; }
  void set(u64 r) { bits_[r >> 6] |= u64{1} << (r & 63); }
  void clear(u64 r) { bits_[r >> 6] &= ~(u64{1} << (r & 63)); }
  void undo(std::size_t start) {
    while (marked_.size() > start) {
      clear(marked_.back());
      marked_.pop_back();
    }
  }

  std::size_t n_;
  u64 p_;
  modular::Modulus m_;
  const SearchOptions& options_;
  std::vector<u64> bits_;
  std::vector<u64> x_;
  std::vector<u64> marked_;
  std::vector<std::size_t> starts_;
  std::vector<Witness> found_;
  u64 nodes_ = 0;
  bool truncated_ = false;
};

struct ItemResult {
  std::vector<Witness> found;
  u64 nodes = 0;
  bool stopped = false;
};

// Processes one branch at `split` level below a fixed prefix.
ItemResult run_item(std::size_t n, u64 p, const SearchOptions& options, const std::vector<u64>& prefix, u64 v) {
  Searcher s(n, p, options);
  for (std::size_t i = 0; i < prefix.size(); ++i) s.place(i, prefix[i]);
  const u64 prefix_nodes = s.nodes();
  ItemResult r;
  if (s.place(prefix.size(), v)) {
    r.stopped = !s.descend(prefix.size() + 1);
    s.unplace();
  }
  r.nodes = s.nodes() - prefix_nodes;
  r.found = std::move(s.found());
  return r;
}

SearchOutcome parallel_search(std::size_t n, u64 p, const SearchOptions& options) {
  // Split at the second coordinate under symmetry (x_1 = 1 is forced), else
  // at the first.
  const std::vector<u64> prefix = options.symmetry ? std::vector<u64>{1} : std::vector<u64>{};
  const u64 lo = options.symmetry ? 2 : 1;
  const u64 hi = options.symmetry ? (p - 1) / 2 : p - 1;
  const std::size_t items = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;

  std::vector<ItemResult> results(items);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_stop{items};
  auto worker = [&] {
    for (std::size_t i = next++; i < items; i = next++) {
      if (i > first_stop.load()) continue;
      results[i] = run_item(n, p, options, prefix, lo + i);
      if (results[i].stopped) {
        std::size_t cur = first_stop.load();
        while (i < cur && !first_stop.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
  }

  SearchOutcome out;
  out.nodes_explored = prefix.size();
  bool stopped = false;
  for (std::size_t i = 0; i < items && !stopped; ++i) {
    out.nodes_explored += results[i].nodes;
    for (auto& w : results[i].found) out.witnesses.push_back(std::move(w));
    stopped = results[i].stopped;
  }
  out.exhausted = !stopped;
  return out;
}

}  // namespace

bool is_valid(const Witness& w) {
  if (w.n == 0 || w.x.size() != w.n || w.p != lee::sphere_size(w.n, 2)) return false;
  return codes::verify_homomorphism_bijective(w.p, w.n, w.x);
}

Witness canonicalize(const Witness& w) {
  const modular::Modulus m(w.p);
  Witness best = w;
  std::vector<u64> candidate(w.x.size());
  bool have = false;
  for (u64 c = 1; c < w.p; ++c) {
    for (std::size_t i = 0; i < w.x.size(); ++i) {
      const u64 v = modular::mul_mod(c, w.x[i] % w.p, m);
      candidate[i] = std::min(v, modular::neg_mod(v, m));
    }
    std::sort(candidate.begin(), candidate.end());
    if (!have || candidate < best.x) {
      best.x = candidate;
      have = true;
    }
  }
  return best;
}

codes::CodeSpec witness_to_code(const Witness& w) {
  if (!is_valid(w)) throw std::invalid_argument("not a witness: S(n,2) is not mapped bijectively onto Z/pZ");
  return codes::CodeSpec{w.n, 2, w.p, codes::Homomorphism{w.p, w.x}};
}

SearchOutcome search(std::size_t n, const SearchOptions& options) {
  if (n == 0) throw std::invalid_argument("search: n must be positive");
  const u64 p = criterion::sphere_prime_candidate(n);
  if (!modular::is_prime(p)) {
    throw std::invalid_argument("search: 2n^2+2n+1 = " + std::to_string(p) + " is not prime");
  }

  SearchOutcome out;
  const bool split = options.threads > 1 && !options.node_limit && n >= 2;
  if (split) {
    out = parallel_search(n, p, options);
  } else {
    Searcher s(n, p, options);
    const bool completed = s.descend(0);
    out.witnesses = std::move(s.found());
    out.nodes_explored = s.nodes();
    out.exhausted = completed && !s.truncated();
  }

  if (options.symmetry) {
    for (auto& w : out.witnesses) w = canonicalize(w);
    out.symmetry_classes_note =
        "canonical forms under unit scaling, coordinate permutations and sign flips; "
        "searched x_1 = 1 < x_2 < ... < x_n <= (p-1)/2";
  } else {
    out.symmetry_classes_note = "no symmetry reduction; all ordered tuples of nonzero residues";
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()), out.witnesses.end());
  return out;
}

}  // namespace leecodes::witness
