#pragma once

#include <cstdint>

#include "cmono/document.hpp"

namespace cmono {

// Deterministic pseudo-random instance: a laminar cluster tree with integer
// depths whose pair clusters are either two-point blobs or even ambient
// clusters hosting the pair, realized as Laurent roots when vp = 0 and as a
// raw valuation matrix otherwise.  Every depth increment exceeds twice the
// tube radius, so the split-degeneracy margin holds by construction.
InputDocument generate_instance(long long p, long long h, const Rational& vp, std::uint64_t seed);

}  // namespace cmono
