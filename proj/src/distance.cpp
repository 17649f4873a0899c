#include "evalcode/distance.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <type_traits>

#include "evalcode/invariants.hpp"

namespace evalcode {

namespace {

template <ExactField F>
class SubsetSearch {
 public:
  SubsetSearch(const Matrix<F>& m, std::size_t target_rank, std::size_t size)
      : m_(m), target_rank_(target_rank), size_(size), builder_(m.field(), m.cols()) {}

  // Lexicographically first deficient subset of the configured size starting with `first`.
  std::optional<std::vector<std::size_t>> run(std::size_t first) {
    chosen_.clear();
    if (!descend_with(first)) return std::nullopt;
    return chosen_;
  }

 private:
  bool descend_with(std::size_t i) {
    bool grew = builder_.insert(m_.row(i));
    if (builder_.rank() < target_rank_) {
      chosen_.push_back(i);
      if (dfs(i + 1)) return true;
      chosen_.pop_back();
    }
    if (grew) builder_.pop_back();
    return false;
  }

  bool dfs(std::size_t start) {
    if (chosen_.size() == size_) return true;
    std::size_t needed = size_ - chosen_.size();
    for (std::size_t i = start; i + needed <= m_.rows(); ++i) {
      if (descend_with(i)) return true;
    }
    return false;
  }

  const Matrix<F>& m_;
  std::size_t target_rank_;
  std::size_t size_;
  EchelonBuilder<F> builder_;
  std::vector<std::size_t> chosen_;
};

template <ExactField F>
std::optional<std::vector<std::size_t>> search_size(const Matrix<F>& m, std::size_t target_rank,
                                                    std::size_t size, std::size_t threads) {
  if (size == 0) return std::vector<std::size_t>{};
  const std::size_t branches = m.rows() - size + 1;
  threads = std::clamp<std::size_t>(threads, 1, branches);
  std::vector<std::optional<std::vector<std::size_t>>> hits(branches);
  // lowest branch index with a hit so far; later branches can be skipped
  std::atomic<std::size_t> best{branches};

  auto worker = [&](std::size_t offset) {
    SubsetSearch<F> search(m, target_rank, size);
    for (std::size_t b = offset; b < branches; b += threads) {
      if (b > best.load(std::memory_order_relaxed)) return;
      if (auto hit = search.run(b)) {
        hits[b] = std::move(hit);
        std::size_t current = best.load();
        while (b < current && !best.compare_exchange_weak(current, b)) {
        }
        return;
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  std::size_t b = best.load();
  if (b == branches) return std::nullopt;
  return hits[b];
}

}  // namespace

template <ExactField F>
std::vector<std::size_t> max_rank_deficient_subset(const Matrix<F>& m, const SearchOptions& opts) {
  const std::size_t n = m.rows();
  if (n == 0) throw Error(ErrorCode::precondition, "subset search on an empty matrix");
  if (n > opts.max_points && !opts.force) {
    throw Error(ErrorCode::too_large, "subset search over " + std::to_string(n) +
                                          " points exceeds the cap of " +
                                          std::to_string(opts.max_points) + " (use --force)");
  }
  const std::size_t r = rank(m);
  // every subset of size < r is deficient, so the search stops at t = r - 1 at the latest
  for (std::size_t t = n - 1;; --t) {
    if (auto hit = search_size(m, r, t, opts.threads)) return *hit;
    if (t == 0) break;
  }
  throw Error(ErrorCode::internal, "subset search terminated without a witness");
}

template <ExactField F>
Matrix<F> generator_matrix(const PointSet<F>& X, std::size_t a) {
  if (a < 1) throw Error(ErrorCode::precondition, "code order a must be >= 1");
  return row_space_basis(evaluation_matrix(X, a).transpose());
}

template <ExactField F>
HypResult<F> hyp_a(const PointSet<F>& X, std::size_t a, const SearchOptions& opts) {
  if (a < 1) throw Error(ErrorCode::precondition, "code order a must be >= 1");
  auto m = evaluation_matrix(X, a);
  auto witness = max_rank_deficient_subset(m, opts);
  auto sub = m.select_rows(witness);
  auto kernel = kernel_basis(sub);
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    auto values = m.apply(kernel.row(r));
    bool vanishes_everywhere = std::all_of(values.begin(), values.end(),
                                           [&](const auto& v) { return X.field().is_zero(v); });
    if (!vanishes_everywhere) {
      std::vector<typename F::value_type> coeffs(kernel.row(r).begin(), kernel.row(r).end());
      auto form = form_from_coeffs(X.field(), X.k(), a, std::move(coeffs));
      return {witness.size(), std::move(witness), std::move(form)};
    }
  }
  throw Error(ErrorCode::internal, "deficient subset without a separating form");
}

template <ExactField F>
CodeSummary<F> min_distance(const PointSet<F>& X, std::size_t a, const SearchOptions& opts) {
  auto hyp = hyp_a(X, a, opts);
  return CodeSummary<F>{.n = X.size(),
                        .a = a,
                        .dim = hilbert_function(X, a),
                        .d = X.size() - hyp.count,
                        .hyp = hyp.count,
                        .witness = std::move(hyp.witness),
                        .witness_form = std::move(hyp.form)};
}

template <ExactField F>
std::size_t min_distance_enum(const PointSet<F>& X, std::size_t a, std::uint64_t cap) {
  if constexpr (!std::is_same_v<F, PrimeField>) {
    throw Error(ErrorCode::rationals_unsupported,
                "codeword enumeration needs a finite field; the code is over Q");
  } else {
    auto g = generator_matrix(X, a);
    const std::size_t dim = g.rows();
    const std::size_t n = g.cols();
    const std::uint32_t p = X.field().modulus();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      if (total > cap / p) {
        throw Error(ErrorCode::too_many_codewords,
                    "p^dim = " + std::to_string(p) + "^" + std::to_string(dim) +
                        " exceeds the enumeration cap " + std::to_string(cap));
      }
      total *= p;
    }
    const PrimeField& f = X.field();
    std::size_t best = n;
    std::vector<std::uint32_t> word(n);
    std::vector<std::uint32_t> digits;
    // one representative per projective class: the highest nonzero coefficient is 1
    for (std::size_t lead = 0; lead < dim && best > 1; ++lead) {
      auto lead_row = g.row(lead);
      std::copy(lead_row.begin(), lead_row.end(), word.begin());
      digits.assign(lead, 0);
      while (true) {
        std::size_t w = static_cast<std::size_t>(
            std::count_if(word.begin(), word.end(), [](std::uint32_t x) { return x != 0; }));
        best = std::min(best, w);
        if (best == 1) break;
        std::size_t i = 0;
        for (; i < lead; ++i) {
          auto r = g.row(i);
          for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], r[c]);
          digits[i] = digits[i] + 1 == p ? 0 : digits[i] + 1;
          if (digits[i] != 0) break;
        }
        if (i == lead) break;
      }
    }
    return best;
  }
}

template <ExactField F>
PointSet<F> veronese_image(const PointSet<F>& X, std::size_t a) {
  if (a < 1) throw Error(ErrorCode::precondition, "Veronese degree must be >= 1");
  auto m = evaluation_matrix(X, a);
  std::vector<std::vector<typename F::value_type>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return point_set(X.field(), m.cols(), rows);
}

#define EVALCODE_INSTANTIATE(F)                                                                 \
  template std::vector<std::size_t> max_rank_deficient_subset(const Matrix<F>&,                 \
                                                              const SearchOptions&);            \
  template Matrix<F> generator_matrix(const PointSet<F>&, std::size_t);                         \
  template HypResult<F> hyp_a(const PointSet<F>&, std::size_t, const SearchOptions&);           \
  template CodeSummary<F> min_distance(const PointSet<F>&, std::size_t, const SearchOptions&);  \
  template std::size_t min_distance_enum(const PointSet<F>&, std::size_t, std::uint64_t);       \
  template PointSet<F> veronese_image(const PointSet<F>&, std::size_t);

EVALCODE_INSTANTIATE(PrimeField)
EVALCODE_INSTANTIATE(RationalField)

}  // namespace evalcode
