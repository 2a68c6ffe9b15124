#include "czds/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

namespace czds {

namespace {

// Rational in [lo, hi] on a grid of 24ths.
Rational sample_root(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
  std::uniform_int_distribution<int> grid(0, 24);
  return lo + (hi - lo) * ratio(grid(rng), 24);
}

// x^2 + bx + c with b^2 < 4c, so the pair of zeros is non-real.
Poly sample_irreducible_quadratic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> bump(1, 8);
  Rational b = ratio(num(rng), 2);
  Rational c = b * b / 4 + ratio(bump(rng), 4);
  return Poly{c, b, Rational(1)};
}

}  // namespace

std::vector<CorpusItem> make_corpus(const CorpusSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("corpus count must be positive");
  if (spec.max_degree < 1) throw std::invalid_argument("corpus max degree must be positive");
  if (!(spec.root_lo < spec.root_hi)) throw std::invalid_argument("empty root range");

  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> deg_dist(1, spec.max_degree);
  std::uniform_int_distribution<int> lead_dist(1, 3);
  std::bernoulli_distribution flip(0.5);

  std::vector<CorpusItem> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    int degree = deg_dist(rng);
    int max_pairs = degree / 2;
    int pairs = 0;
    switch (spec.mix) {
      case CorpusSpec::Mix::RealRooted:
        pairs = 0;
        break;
      case CorpusSpec::Mix::NonrealHeavy:
        pairs = max_pairs;
        break;
      case CorpusSpec::Mix::Mixed:
        pairs = max_pairs > 0 ? std::uniform_int_distribution<int>(0, max_pairs)(rng) : 0;
        break;
    }
    CorpusItem item;
    Rational lead(lead_dist(rng));
    if (flip(rng)) lead = -lead;
    Poly p = Poly::constant(lead);
    for (int j = 0; j < pairs; ++j) p = p * sample_irreducible_quadratic(rng);
    for (int j = 0; j < degree - 2 * pairs; ++j) {
      Rational r = sample_root(rng, spec.root_lo, spec.root_hi);
      p = p * Poly{-r, Rational(1)};
    }
    item.p = std::move(p);
    item.real = degree - 2 * pairs;
    item.nonreal = 2 * pairs;
    out.push_back(std::move(item));
  }
  return out;
}

VerifyReport verify_czdo(const PolyMap& op, const CorpusSpec& corpus, const ZcBudget& budget,
                         unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  if (workers == 0) {
    if (const char* env = std::getenv("CZDS_WORKERS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1) workers = static_cast<unsigned>(v);
    }
    if (workers == 0) workers = 1;
  }

  std::vector<CorpusItem> items = make_corpus(corpus);
  std::vector<std::vector<Violation>> per_item(items.size());
  std::atomic<bool> corrupted{false};

  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const CorpusItem& item = items[i];
      ZeroCount before = zero_counts(item.p);
      if (before.real != item.real || before.nonreal != item.nonreal) {
        corrupted.store(true);
        return;
      }
      Poly image = op(item.p);
      ZeroCount after = zero_counts(image);
      if (after.nonreal > budget(item))
        per_item[i].push_back(Violation{i, item.p, image, before, after});
    }
  };

  if (workers <= 1 || items.size() < 2) {
    run_range(0, items.size());
  } else {
    workers = std::min<unsigned>(workers, static_cast<unsigned>(items.size()));
    std::vector<std::thread> pool;
    std::size_t chunk = (items.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = w * chunk;
      std::size_t hi = std::min(items.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  if (corrupted.load())
    throw std::logic_error("corpus zero counts disagree with construction");

  VerifyReport report;
  report.checked = items.size();
  report.seed = corpus.seed;
  for (auto& v : per_item)
    for (auto& violation : v) report.violations.push_back(std::move(violation));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace czds
