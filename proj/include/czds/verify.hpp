#ifndef CZDS_VERIFY_HPP
#define CZDS_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "czds/poly.hpp"
#include "czds/zeros.hpp"

namespace czds {

// Corpus polynomials are built as products of real linear factors and
// irreducible quadratics, so (Z_R, Z_C) is known by construction and does not
// trust the counting path under test.
struct CorpusSpec {
  enum class Mix { Mixed, RealRooted, NonrealHeavy };

  int count = 1;
  int max_degree = 6;
  Rational root_lo{-4};
  Rational root_hi{4};
  std::uint64_t seed = 0;
  Mix mix = Mix::Mixed;
};

struct CorpusItem {
  Poly p;
  int real = 0;     // by construction
  int nonreal = 0;  // by construction
};

// Name of the generator; echoed in every report so violation runs can be
// reproduced bit for bit.
inline constexpr const char* kGeneratorName = "mt19937_64/v1";

// Deterministic given the spec (including its seed).
std::vector<CorpusItem> make_corpus(const CorpusSpec& spec);

struct Violation {
  std::size_t index = 0;
  Poly input;
  Poly output;
  ZeroCount before;
  ZeroCount after;
};

struct VerifyReport {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  std::chrono::milliseconds elapsed{0};
  std::uint64_t seed = 0;
  std::string generator = kGeneratorName;

  bool ok() const { return violations.empty(); }
};

using PolyMap = std::function<Poly(const Poly&)>;
// Allowed Z_C of the output for a given corpus item (the budget rule).
using ZcBudget = std::function<int(const CorpusItem&)>;

inline ZcBudget nonincrease_budget() {
  return [](const CorpusItem& item) { return item.nonreal; };
}
inline ZcBudget plus_constant_budget(int extra) {
  return [extra](const CorpusItem& item) { return item.nonreal + extra; };
}

// Applies op to every corpus item, counts zeros exactly, and records every
// violation of the budget rule. Corpus items are cross-checked against their
// constructed (Z_R, Z_C); a mismatch throws, since it means the counting path
// itself is broken. workers = 0 reads CZDS_WORKERS (default 1); aggregation
// order is by corpus index regardless of worker count.
VerifyReport verify_czdo(const PolyMap& op, const CorpusSpec& corpus, const ZcBudget& budget,
                         unsigned workers = 0);

}  // namespace czds

#endif
