#pragma once

namespace qdyck {

// Desk-scale guardrails; every cap is overridable at the call site.
inline constexpr int kDefaultEnumCap = 22;      // exhaustive path universe (2^21 paths at the cap)
inline constexpr int kDefaultTableCap = 10000;  // sequence tables
inline constexpr int kDefaultStringCap = 24;    // exhaustive bit-string listings

}  // namespace qdyck
