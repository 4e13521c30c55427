#pragma once

#include "hms/arith.hpp"

#include <map>
#include <optional>
#include <string>

namespace hms {

// External input per level (N, r): geometric genus and c_1^2 of the
// resolved surface Z.  Every derived invariant is seeded by these two.
struct BaseInvariants {
  Int pg_z = 0;
  Int c1sq_z = 0;
};

using BaseTable = std::map<std::pair<Int, Int>, BaseInvariants>;

// CSV with header "N,r,pg_Z,c1sq_Z"; r keys are stored in normalized form.
// Throws std::runtime_error on malformed input.
BaseTable parse_base_table(const std::string& csv);
BaseTable load_base_table(const std::string& path);

// Table compiled into the library, covering 6 <= N <= 33.
const BaseTable& bundled_base_table();

// r is reduced to its unit-square class before lookup.
std::optional<BaseInvariants> lookup_base(const BaseTable& table, Int n, Int r);

}  // namespace hms
