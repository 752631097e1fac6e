#include "tdpoly/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

namespace tdpoly {

namespace {

void check_guard(const char* what, const Graph& g, const EnumerationOptions& options) {
  auto guard = std::min(options.guard, kMaxEnumerationOrder);
  if (g.order() > guard) throw GuardExceeded(what, g.order(), guard);
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> masks(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) masks[v] |= std::uint64_t{1} << w;
  }
  return masks;
}

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Neighborhood union of every subset of `bits`, indexed by the subset's
// position mask over `bits`.
std::vector<std::uint64_t> subset_neighborhoods(std::span<const std::uint64_t> adjacency,
                                                std::span<const Vertex> bits) {
  std::vector<std::uint64_t> table(std::size_t{1} << bits.size(), 0);
  for (std::size_t s = 1; s < table.size(); ++s) {
    auto low = static_cast<std::size_t>(std::countr_zero(s));
    table[s] = table[s & (s - 1)] | adjacency[bits[low]];
  }
  return table;
}

}  // namespace

std::vector<std::uint64_t> count_covering_subsets(std::span<const std::uint64_t> adjacency,
                                                  std::uint64_t candidates, std::uint64_t target,
                                                  unsigned threads) {
  std::vector<Vertex> bits;
  for (auto m = candidates; m != 0; m &= m - 1) bits.push_back(static_cast<Vertex>(std::countr_zero(m)));

  // Split the candidates into a low half, whose neighborhood unions are
  // tabulated once, and a high half swept subset by subset.
  const std::size_t low_count = (bits.size() + 1) / 2;
  std::span<const Vertex> low_bits(bits.data(), low_count);
  std::span<const Vertex> high_bits(bits.data() + low_count, bits.size() - low_count);
  const auto low_table = subset_neighborhoods(adjacency, low_bits);
  const auto high_table = subset_neighborhoods(adjacency, high_bits);

  // Low subsets grouped by size so each group adds to a single bucket.
  std::vector<std::vector<std::uint64_t>> low_by_size(low_count + 1);
  for (std::size_t s = 0; s < low_table.size(); ++s) {
    low_by_size[static_cast<std::size_t>(std::popcount(s))].push_back(low_table[s]);
  }

  const std::size_t high_subsets = high_table.size();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, high_subsets));

  auto sweep = [&](std::size_t begin, std::size_t end, std::vector<std::uint64_t>& counts) {
    for (std::size_t h = begin; h < end; ++h) {
      const auto high_nbhd = high_table[h];
      const auto high_size = static_cast<std::size_t>(std::popcount(h));
      // Vertices the high part leaves uncovered.
      const auto missing = target & ~high_nbhd;
      for (std::size_t k = 0; k < low_by_size.size(); ++k) {
        std::uint64_t hits = 0;
        for (auto nb : low_by_size[k]) hits += (missing & ~nb) == 0;
        counts[k + high_size] += hits;
      }
    }
  };

  std::vector<std::uint64_t> counts(bits.size() + 1, 0);
  if (threads <= 1) {
    sweep(0, high_subsets, counts);
    return counts;
  }
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(bits.size() + 1, 0));
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (high_subsets + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      auto begin = std::min(high_subsets, t * chunk);
      auto end = std::min(high_subsets, begin + chunk);
      workers.emplace_back([&, begin, end, t] { sweep(begin, end, partial[t]); });
    }
  }
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += p[i];
  }
  return counts;
}

Polynomial TdsCountVector::to_polynomial() const {
  std::vector<Integer> coeffs(counts.begin(), counts.end());
  return Polynomial(std::move(coeffs));
}

std::uint64_t TdsCountVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

bool is_total_dominating(const Graph& g, const VertexSet& d) {
  return g.neighborhood(d, Closure::open) == VertexSet::full(g.order());
}

TdsCountVector dt_counts(const Graph& g, const EnumerationOptions& options) {
  check_guard("dt_counts", g, options);
  const auto adjacency = adjacency_masks(g);
  const auto all = low_mask(g.order());
  if (g.has_isolated_vertex()) return {std::vector<std::uint64_t>(g.order() + 1, 0)};
  return {count_covering_subsets(adjacency, all, all, options.threads)};
}

Polynomial dt_polynomial(const Graph& g, const EnumerationOptions& options) {
  return dt_counts(g, options).to_polynomial();
}

std::size_t gamma_t(const Graph& g, const EnumerationOptions& options) {
  const auto counts = dt_counts(g, options).counts;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) return i;
  }
  throw NoTotalDominatingSet();
}

Polynomial p_u_polynomial(const Graph& g, Vertex u, const EnumerationOptions& options) {
  check_guard("p_u_polynomial", g, options);
  const auto adjacency = adjacency_masks(g);
  const auto all = low_mask(g.order());
  g.neighbors(u);  // validates u
  const auto closed_u = adjacency[u] | (std::uint64_t{1} << u);
  const auto target = all & ~(std::uint64_t{1} << u);
  auto counts = count_covering_subsets(adjacency, all & ~closed_u, target, options.threads);
  return Polynomial(std::vector<Integer>(counts.begin(), counts.end()));
}

}  // namespace tdpoly
