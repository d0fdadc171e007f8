#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmono/analysis.hpp"
#include "cmono/laurent.hpp"

namespace testutil {

inline cmono::LaurentPoly L(const std::string& s) { return cmono::parse_laurent(s); }

// Laurent-mode document from point texts in the order
// alpha_0, alpha_1, beta_1, ..., alpha_h, beta_h (beta_0 = inf implied).
inline cmono::InputDocument laurent_doc(long long p, const std::vector<std::string>& points,
                                        std::vector<long long> exponents = {}) {
  cmono::InputDocument doc;
  doc.mode = cmono::InputDocument::Mode::Laurent;
  doc.config.p = p;
  doc.config.h = (static_cast<long long>(points.size()) - 1) / 2;
  doc.config.vp = 0;
  doc.config.exponents =
      exponents.empty() ? std::vector<long long>(doc.config.h + 1, 1) : std::move(exponents);
  for (const auto& s : points) doc.roots.push_back(L(s));
  return doc;
}

// Worked example A: p=2, roots 1, inf, 0, t^3, t, t+t^2.
inline cmono::InputDocument example_a() {
  return laurent_doc(2, {"1", "0", "t^3", "t", "t + t^2"});
}

// Worked example B: p=2, roots 1, inf, 0, t^3, -t, t.
inline cmono::InputDocument example_b() {
  return laurent_doc(2, {"1", "0", "t^3", "-t", "t"});
}

// p=3, h=1 with s_1 = {0, t^2}.
inline cmono::InputDocument example_p3() { return laurent_doc(3, {"1", "0", "t^2"}); }

struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long long below(long long n) {
    return static_cast<long long>(next() % static_cast<std::uint64_t>(n));
  }
};

}  // namespace testutil
