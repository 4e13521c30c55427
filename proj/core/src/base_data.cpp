#include "hms/base_data.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hms {

namespace detail {
const char* bundled_base_invariants_csv();
}

namespace {

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.pop_back();
  return s;
}

}  // namespace

BaseTable parse_base_table(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || strip(line) != "N,r,pg_Z,c1sq_Z")
    throw std::runtime_error("base table: expected header N,r,pg_Z,c1sq_Z");
  BaseTable out;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    long long n, r, pg, c1;
    char tail;
    if (std::sscanf(line.c_str(), "%lld,%lld,%lld,%lld%c", &n, &r, &pg, &c1, &tail) != 4)
      throw std::runtime_error("base table: malformed line " + std::to_string(lineno));
    if (n < 1 || std::gcd(r, n) != 1 || pg < 0)
      throw std::runtime_error("base table: invalid row at line " + std::to_string(lineno));
    auto key = std::make_pair(n, normalize_square_class(n, r));
    if (!out.emplace(key, BaseInvariants{pg, c1}).second)
      throw std::runtime_error("base table: duplicate level at line " + std::to_string(lineno));
  }
  return out;
}

BaseTable load_base_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("base table: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_base_table(buf.str());
}

const BaseTable& bundled_base_table() {
  static const BaseTable table = parse_base_table(detail::bundled_base_invariants_csv());
  return table;
}

std::optional<BaseInvariants> lookup_base(const BaseTable& table, Int n, Int r) {
  auto it = table.find({n, normalize_square_class(n, r)});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace hms
