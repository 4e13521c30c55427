// Command line interface: invariant reports, the bundled table range,
// classification, resolution chains, fibre incidence diagrams, and an
// equivalence check of the closed forms against the enumeration oracle.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 missing or malformed data, 4 resource guard.

#include "CLI11.hpp"
#include "json.hpp"

#include "hms/arith.hpp"
#include "hms/base_data.hpp"
#include "hms/gl2.hpp"
#include "hms/hj.hpp"
#include "hms/modcurve.hpp"
#include "hms/surface.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hms::Int;
using hms::Rational;
using json = nlohmann::ordered_json;

std::string rat_str(const Rational& x) {
  std::string s = std::to_string(x.numerator());
  if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
  return s;
}

std::string level_tag(const hms::Level& lvl) {
  return "(" + std::to_string(lvl.N) + ", " + std::to_string(lvl.r) + ")";
}

// [[c_1, ..., c_l]]
std::string chain_str(const std::vector<Int>& c) {
  std::string s = "[[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(c[i]);
  }
  return s + "]]";
}

// Chain components 0 .. l+1: B1, C1 .. Cl, B2.
std::string component_name(size_t idx, size_t n) {
  if (idx == 0) return "B1";
  if (idx + 1 == n) return "B2";
  return "C" + std::to_string(idx);
}

std::string cusp_tag(const hms::Cusp& c) {
  return "[" + std::to_string(c.c) + ":" + std::to_string(c.d) + "]";
}

hms::Level echo_level(Int N, Int r_raw) {
  hms::Level lvl = hms::make_level(N, r_raw);
  if (hms::mod_reduce(r_raw, lvl.N) != lvl.r)
    std::cerr << "note: r = " << r_raw << " lies in the unit square class of r = "
              << lvl.r << " modulo " << N
              << "; output uses the normalized representative\n";
  return lvl;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file " + out_path);
  out << text;
}

// ----------------------------------------------------------------------
// invariants

json invariants_json(const hms::Level& lvl, Int r_raw, const hms::BaseTable& base) {
  const hms::InvariantRow row = hms::invariant_row(lvl, base);
  const hms::BaseInvariants bi = hms::base_data(lvl, base);
  const hms::SingularityCensus census = hms::singularity_census(lvl);
  const auto locus = hms::fixed_locus(lvl);
  const hms::FixedPointCensus fpc = hms::fixed_point_census(lvl);
  const hms::BlowdownDeltas bd = hms::blowdown_deltas(lvl);
  const hms::FrakM fm = hms::frak_m(lvl);

  json j;
  j["level"] = {{"N", lvl.N}, {"r", lvl.r}, {"r_input", r_raw}};
  j["classification"] = {
      {"Z", hms::surface_class_name(hms::classify_z(lvl, base))},
      {"kappa_Z", row.kappa_z},
      {"W", hms::surface_class_name(hms::classify_w(lvl, base))},
      {"kappa_W", row.kappa_w},
  };
  json inv = {
      {"pg_Z", row.pg_z},         {"c1sq_Z", bi.c1sq_z},
      {"pg_W", row.pg_w},         {"KWbar_Cinf", row.kwbar_cinf},
      {"KW_sq", row.kw_sq},
  };
  inv["Ksmall_sq"] = row.ksmall_sq ? json(*row.ksmall_sq) : json(nullptr);
  j["invariants"] = inv;

  json at0 = json::array(), atinf = json::array();
  for (const auto& s : census.at_0)
    at0.push_back({{"d", s.d}, {"q", s.q}, {"count", s.count}});
  for (const auto& s : census.at_inf)
    atinf.push_back({{"d", s.d}, {"q", s.q}, {"count", s.count}});
  j["singular_points"] = {
      {"at_1728", census.at_1728},
      {"at_0", at0},
      {"at_inf", atinf},
      {"total", census.total()},
  };

  json fl = json::array();
  for (const auto& c : locus)
    fl.push_back({
        {"family", hms::tau_shape_name(c.family)},
        {"multiplier", c.multiplier},
        {"eta", rat_str(c.signature.eta)},
        {"e2", rat_str(c.signature.e2)},
        {"e3", rat_str(c.signature.e3)},
        {"e_inf", rat_str(c.signature.e_inf)},
        {"genus", c.signature.genus()},
        {"K_dot_F", rat_str(c.k_dot)},
        {"in_support_S", c.in_support_s},
    });
  j["fixed_locus"] = fl;

  j["isolated_fixed_points"] = {
      {"above_1728", fpc.p1},
      {"swapped_pair_above_1728", fpc.p2_pair},
      {"above_0", fpc.p3},
      {"above_inf", fpc.p_inf},
      {"total", fpc.isolated_total()},
      {"locus_singularities_2_1", fpc.s21},
      {"locus_singularities_3_2", fpc.s32},
  };
  j["blowdown"] = {{"delta_K2", bd.delta_k2}, {"delta_KF", bd.delta_kf}};
  json ms = json::array();
  for (Int m : fm.ms) ms.push_back(m);
  j["exceptional_fibers"] = {{"half_components", rat_str(fm.value)}, {"m", ms}};
  return j;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void flatten_json(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten_json(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& v : j) flatten_json(v, prefix + "." + std::to_string(i++), out);
  } else if (j.is_null()) {
    out += prefix + ",\n";
  } else if (j.is_string()) {
    out += prefix + "," + csv_quote(j.get<std::string>()) + "\n";
  } else {
    out += prefix + "," + j.dump() + "\n";
  }
}

std::string invariants_markdown(const hms::Level& lvl, const json& j) {
  std::ostringstream md;
  const std::string tag = level_tag(lvl);
  md << "# W" << tag << "\n\n";

  md << "| surface | class | kappa |\n|---|---|--:|\n";
  md << "| Z" << tag << " | " << j["classification"]["Z"].get<std::string>()
     << " | " << j["classification"]["kappa_Z"] << " |\n";
  md << "| W" << tag << " | " << j["classification"]["W"].get<std::string>()
     << " | " << j["classification"]["kappa_W"] << " |\n\n";

  md << "## Invariants\n\n";
  md << "| pg_Z | c1sq_Z | pg_W | KWbar_Cinf | KW_sq | Ksmall_sq |\n";
  md << "|--:|--:|--:|--:|--:|--:|\n| ";
  const json& inv = j["invariants"];
  md << inv["pg_Z"] << " | " << inv["c1sq_Z"] << " | " << inv["pg_W"] << " | "
     << inv["KWbar_Cinf"] << " | " << inv["KW_sq"] << " | ";
  if (!inv["Ksmall_sq"].is_null()) md << inv["Ksmall_sq"];
  md << " |\n\n";

  md << "## Quotient singularities of Z" << tag << "\n\n";
  md << "| stratum | type | count |\n|---|---|--:|\n";
  const json& sp = j["singular_points"];
  md << "| j = 1728 | (2; 1) | " << sp["at_1728"] << " |\n";
  for (const auto& s : sp["at_0"])
    md << "| j = 0 | (" << s["d"] << "; " << s["q"] << ") | " << s["count"] << " |\n";
  for (const auto& s : sp["at_inf"])
    md << "| j = infinity | (" << s["d"] << "; " << s["q"] << ") | " << s["count"]
       << " |\n";
  md << "\ntotal: " << sp["total"] << "\n\n";

  md << "## Fixed locus of the symmetry involution\n\n";
  md << "| family | multiplier | eta | e2 | e3 | e_inf | genus | K.F | in S |\n";
  md << "|---|--:|--:|--:|--:|--:|--:|--:|---|\n";
  for (const auto& c : j["fixed_locus"])
    md << "| " << c["family"].get<std::string>() << " | " << c["multiplier"] << " | "
       << c["eta"].get<std::string>() << " | " << c["e2"].get<std::string>() << " | "
       << c["e3"].get<std::string>() << " | " << c["e_inf"].get<std::string>() << " | "
       << c["genus"] << " | " << c["K_dot_F"].get<std::string>() << " | "
       << (c["in_support_S"].get<bool>() ? "yes" : "no") << " |\n";
  md << "\n";

  md << "## Isolated fixed points and locus singularities\n\n";
  const json& ip = j["isolated_fixed_points"];
  md << "| above 1728 | swapped pair | above 0 | above infinity | (2;1) on locus | "
        "(3;2) on locus |\n|--:|--:|--:|--:|--:|--:|\n";
  md << "| " << ip["above_1728"] << " | " << ip["swapped_pair_above_1728"] << " | "
     << ip["above_0"] << " | " << ip["above_inf"] << " | "
     << ip["locus_singularities_2_1"] << " | " << ip["locus_singularities_3_2"]
     << " |\n\n";

  md << "## Blow-down and exceptional fibres\n\n";
  md << "- delta K^2 = " << j["blowdown"]["delta_K2"] << ", delta K.F = "
     << j["blowdown"]["delta_KF"] << "\n";
  md << "- contractible fibre classes m:";
  if (j["exceptional_fibers"]["m"].empty()) {
    md << " none";
  } else {
    bool first = true;
    for (const auto& m : j["exceptional_fibers"]["m"]) {
      md << (first ? " " : ", ") << m;
      first = false;
    }
  }
  md << " (half-count " << j["exceptional_fibers"]["half_components"].get<std::string>()
     << ")\n";
  return md.str();
}

int cmd_invariants(Int N, Int r_raw, const std::string& fmt,
                   const std::string& base_path) {
  const hms::Level lvl = echo_level(N, r_raw);
  hms::BaseTable owned;
  const hms::BaseTable* base = &hms::bundled_base_table();
  if (!base_path.empty()) {
    owned = hms::load_base_table(base_path);
    base = &owned;
  }
  const json j = invariants_json(lvl, r_raw, *base);
  if (fmt == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::string out = "key,value\n";
    flatten_json(j, "", out);
    std::cout << out;
  } else {
    std::cout << invariants_markdown(lvl, j);
  }
  return 0;
}

// ----------------------------------------------------------------------
// table

int cmd_table(Int lo, Int hi, const std::string& fmt) {
  if (lo < 6 || hi > 33 || hi < lo)
    throw std::invalid_argument(
        "table range must satisfy 6 <= MIN <= MAX <= 33 (bundled data range)");
  std::vector<hms::InvariantRow> rows;
  for (Int N = lo; N <= hi; ++N)
    for (Int r : hms::table_classes(N))
      rows.push_back(hms::invariant_row(hms::make_level(N, r)));

  std::ostringstream out;
  if (fmt == "csv") {
    out << "N,r,pg_Z,kappa_Z,pg_W,KWbar_Cinf,KW_sq,Ksmall_sq,kappa_W\n";
    for (const auto& w : rows) {
      out << w.level.N << ',' << w.level.r << ',' << w.pg_z << ',' << w.kappa_z
          << ',' << w.pg_w << ',' << w.kwbar_cinf << ',' << w.kw_sq << ',';
      if (w.ksmall_sq) out << *w.ksmall_sq;
      out << ',' << w.kappa_w << '\n';
    }
  } else if (fmt == "markdown") {
    out << "| N | r | pg_Z | kappa_Z | pg_W | KWbar_Cinf | KW_sq | Ksmall_sq | "
           "kappa_W |\n";
    out << "|--:|--:|-----:|--------:|-----:|-----------:|------:|----------:|"
           "--------:|\n";
    for (const auto& w : rows) {
      out << "| " << w.level.N << " | " << w.level.r << " | " << w.pg_z << " | "
          << w.kappa_z << " | " << w.pg_w << " | " << w.kwbar_cinf << " | "
          << w.kw_sq << " | ";
      if (w.ksmall_sq) out << *w.ksmall_sq << ' ';
      out << "| " << w.kappa_w << " |\n";
    }
  } else {
    json arr = json::array();
    for (const auto& w : rows) {
      json row = {
          {"N", w.level.N},           {"r", w.level.r},
          {"pg_Z", w.pg_z},           {"kappa_Z", w.kappa_z},
          {"pg_W", w.pg_w},           {"KWbar_Cinf", w.kwbar_cinf},
          {"KW_sq", w.kw_sq},
      };
      row["Ksmall_sq"] = w.ksmall_sq ? json(*w.ksmall_sq) : json(nullptr);
      row["kappa_W"] = w.kappa_w;
      arr.push_back(row);
    }
    out << arr.dump(2) << "\n";
  }
  std::cout << out.str();
  return 0;
}

// ----------------------------------------------------------------------
// classify

int cmd_classify(Int N, Int r_raw, const std::string& which) {
  const hms::Level lvl = echo_level(N, r_raw);
  if (which != "w") {
    const hms::SurfaceClass c = hms::classify_z(lvl);
    std::cout << "Z" << level_tag(lvl) << ": " << hms::surface_class_name(c)
              << " (kappa = " << hms::kodaira_dimension(c) << ")\n";
  }
  if (which != "z") {
    const hms::SurfaceClass c = hms::classify_w(lvl);
    std::cout << "W" << level_tag(lvl) << ": " << hms::surface_class_name(c)
              << " (kappa = " << hms::kodaira_dimension(c) << ")\n";
  }
  return 0;
}

// ----------------------------------------------------------------------
// resolve

int cmd_resolve(Int d, Int q_raw, Int level) {
  if (d < 2) throw std::invalid_argument("type (d; q) requires d >= 2");
  const Int q = hms::mod_reduce(q_raw, d);
  if (q != q_raw)
    std::cerr << "note: q = " << q_raw << " reduced to " << q << " modulo " << d
              << "\n";
  if (q == 0 || std::gcd(q, d) != 1)
    throw std::invalid_argument("type (d; q) requires gcd(d, q) = 1");

  const std::vector<Int> chain = hms::hj_expansion(d, q);
  const Int qc = hms::chain_conjugate(d, q);
  std::cout << "type (" << d << "; " << q << ") = " << chain_str(chain) << "\n";
  std::cout << "self-intersections:";
  for (Int c : chain) std::cout << " -" << c;
  std::cout << "\n";
  std::cout << "conjugate type: (" << d << "; " << qc << ") = "
            << chain_str(hms::hj_expansion(d, qc)) << "\n";

  if (level != 0) {
    if (level < d || level % d != 0)
      throw std::invalid_argument("--level must be a positive multiple of d");
    const hms::FiberChain fc = hms::fiber_multiplicities(level, d, q);
    const size_t n = fc.a.size();
    std::cout << "\nboundary chain over the (" << d << "; " << q
              << ") cusp at level " << level << "\n";
    std::cout << "components:";
    for (size_t i = 0; i < n; ++i) {
      if (i == 0 || i + 1 == n)
        std::cout << ' ' << component_name(i, n);
      else
        std::cout << " -" << fc.chain[i - 1];
    }
    std::cout << "\na: ";
    for (Int v : fc.a) std::cout << ' ' << v;
    std::cout << "\na':";
    for (Int v : fc.a_prime) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------------
// diagram

struct ChainView {
  Int q = 0;
  hms::FiberChain fc;
  std::vector<const hms::CuspIncidence*> cusps;
};

std::vector<ChainView> chain_views(const hms::Level& lvl, Int m,
                                   const std::vector<hms::CuspIncidence>& incs) {
  std::map<Int, std::vector<const hms::CuspIncidence*>> byq;
  for (const auto& e : incs) byq[e.q].push_back(&e);
  std::vector<ChainView> views;
  for (auto& [q, list] : byq) {
    ChainView v;
    v.q = q;
    v.fc = hms::fiber_multiplicities(lvl.N, lvl.N, q);
    v.cusps = list;
    views.push_back(std::move(v));
  }
  return views;
}

// One line per cusp: which components it meets and with what multiplicity.
std::string mark_text(const hms::Level&, Int m, const hms::CuspIncidence& e,
                      size_t n) {
  std::ostringstream s;
  s << cusp_tag(e.cusp) << " widths (" << e.cusp.width << ", "
    << hms::fricke_image(m, e.cusp).width << "):";
  bool any = false;
  for (size_t i = 0; i < e.multiplicities.size(); ++i) {
    if (e.multiplicities[i] == 0) continue;
    s << (any ? ", " : " ") << component_name(i, n) << " x" << e.multiplicities[i];
    any = true;
  }
  if (!any) s << " none";
  if (!e.unique) s << " (ambiguous)";
  return s.str();
}

std::string render_text(const hms::Level& lvl, Int m,
                        const std::vector<ChainView>& views) {
  std::ostringstream out;
  out << "F_" << m << " on the boundary of Z" << level_tag(lvl) << "\n";
  for (const auto& v : views) {
    const size_t n = v.fc.a.size();
    out << "chain (" << lvl.N << "; " << v.q << "): " << chain_str(v.fc.chain)
        << "\n  ";
    for (size_t i = 0; i < n; ++i) {
      if (i) out << " - ";
      out << component_name(i, n);
      if (i > 0 && i + 1 < n) out << "(-" << v.fc.chain[i - 1] << ")";
    }
    out << "\n";
    for (const auto* e : v.cusps) out << "  " << mark_text(lvl, m, *e, n) << "\n";
  }
  return out.str();
}

std::string render_dot(const hms::Level& lvl, Int m,
                       const std::vector<ChainView>& views) {
  std::ostringstream out;
  out << "graph incidence {\n";
  out << "  rankdir=LR;\n  labelloc=\"t\";\n";
  out << "  label=\"F_" << m << " on the boundary of Z" << level_tag(lvl)
      << "\";\n";
  out << "  node [fontsize=11];\n";
  for (const auto& v : views) {
    const size_t n = v.fc.a.size();
    const std::string p = "q" + std::to_string(v.q) + "_";
    out << "  // chain (" << lvl.N << "; " << v.q << ")\n";
    for (size_t i = 0; i < n; ++i) {
      out << "  " << p << "n" << i;
      if (i == 0 || i + 1 == n)
        out << " [shape=square, label=\"" << component_name(i, n) << "\"];\n";
      else
        out << " [shape=circle, label=\"-" << v.fc.chain[i - 1] << "\"];\n";
    }
    out << "  " << p << "n0";
    for (size_t i = 1; i < n; ++i) out << " -- " << p << "n" << i;
    out << ";\n";
    for (size_t ci = 0; ci < v.cusps.size(); ++ci) {
      const auto& e = *v.cusps[ci];
      const std::string u = p + "u" + std::to_string(ci);
      out << "  " << u << " [shape=plaintext, label=\"F_" << m << " at "
          << cusp_tag(e.cusp) << (e.unique ? "" : " (ambiguous)") << "\"];\n";
      for (size_t i = 0; i < e.multiplicities.size(); ++i) {
        if (e.multiplicities[i] == 0) continue;
        out << "  " << u << " -- " << p << "n" << i << " [style=dashed, label=\"x"
            << e.multiplicities[i] << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string render_svg(const hms::Level& lvl, Int m,
                       const std::vector<ChainView>& views) {
  const int margin = 60, step = 80, row_h = 140;
  size_t maxn = 2;
  for (const auto& v : views) maxn = std::max(maxn, v.fc.a.size());
  const int width = 2 * margin + static_cast<int>(maxn - 1) * step;
  const int height = 60 + static_cast<int>(views.size()) * row_h;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width
      << " " << height << "\" font-family=\"sans-serif\">\n";
  out << "<text x=\"10\" y=\"24\" font-size=\"14\" fill=\"#222\">F_" << m
      << " on the boundary of Z" << level_tag(lvl) << "</text>\n";

  int row = 0;
  for (const auto& v : views) {
    const size_t n = v.fc.a.size();
    const int y0 = 120 + row * row_h;
    out << "<text x=\"10\" y=\"" << y0 - 46 << "\" font-size=\"12\" fill=\"#222\">"
        << "chain (" << lvl.N << "; " << v.q << "): " << chain_str(v.fc.chain)
        << "</text>\n";
    const int x_last = margin + static_cast<int>(n - 1) * step;
    out << "<line x1=\"" << margin << "\" y1=\"" << y0 << "\" x2=\"" << x_last
        << "\" y2=\"" << y0 << "\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
    for (size_t i = 0; i < n; ++i) {
      const int x = margin + static_cast<int>(i) * step;
      const bool boundary = (i == 0 || i + 1 == n);
      const int h = boundary ? 12 : 8;
      out << "<line x1=\"" << x << "\" y1=\"" << y0 - h << "\" x2=\"" << x
          << "\" y2=\"" << y0 + h << "\" stroke=\"#222\" stroke-width=\""
          << (boundary ? 2.5 : 1.5) << "\"/>\n";
      out << "<text x=\"" << x << "\" y=\"" << y0 + 28
          << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#222\">";
      if (boundary)
        out << component_name(i, n);
      else
        out << "-" << v.fc.chain[i - 1];
      out << "</text>\n";
    }
    std::vector<int> slot(n, 0);
    for (const auto* e : v.cusps) {
      for (size_t i = 0; i < e->multiplicities.size(); ++i) {
        if (e->multiplicities[i] == 0) continue;
        const int x = margin + static_cast<int>(i) * step;
        const int y = y0 - 18 - slot[i] * 16;
        ++slot[i];
        out << "<text x=\"" << x << "\" y=\"" << y
            << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#222\">"
            << cusp_tag(e->cusp) << " x" << e->multiplicities[i]
            << (e->unique ? "" : " (ambiguous)") << "</text>\n";
      }
    }
    ++row;
  }
  out << "</svg>\n";
  return out.str();
}

int cmd_diagram(Int N, Int r_raw, Int m, const std::string& fmt,
                const std::string& out_path) {
  const hms::Level lvl = echo_level(N, r_raw);
  if (m < 1 || std::gcd(m, lvl.N) != 1)
    throw std::invalid_argument("the fibre class m must be positive and coprime to N");
  const auto incs = hms::fm_cusp_incidence(lvl, m);
  for (const auto& e : incs)
    if (!e.unique)
      std::cerr << "warning: cusp " << cusp_tag(e.cusp) << " on chain (" << lvl.N
                << "; " << e.q
                << "): several nonnegative multiplicity patterns; showing the "
                   "lexicographically least\n";
  const auto views = chain_views(lvl, m, incs);
  std::string art;
  if (fmt == "dot")
    art = render_dot(lvl, m, views);
  else if (fmt == "svg")
    art = render_svg(lvl, m, views);
  else
    art = render_text(lvl, m, views);
  emit(art, out_path);
  return 0;
}

// ----------------------------------------------------------------------
// oracle-verify

int cmd_oracle_verify(Int max_level, const std::string& fault) {
  if (max_level < 2) throw std::invalid_argument("--max-level must be at least 2");
  if (max_level > 24) {
    std::cerr << "error: the enumeration oracle walks all of GL2(Z/N); levels "
                 "above 24 are rejected to bound time and memory\n";
    return 4;
  }
  Int classes_checked = 0, levels = 0;
  for (Int N = 2; N <= max_level; ++N) {
    std::set<Int> rs;
    for (Int u = 1; u < N; ++u)
      if (std::gcd(u, N) == 1) rs.insert(hms::normalize_square_class(N, u));
    for (Int r : rs) {
      const auto closed = hms::involution_classes(N, r);
      auto got = std::vector<std::array<Int, 4>>{};
      for (const auto& c : closed) got.push_back(hms::class_min_rep(c.rep));
      std::sort(got.begin(), got.end());
      const auto brute = hms::brute_involution_classes(N, r);
      if (got != brute) {
        std::cout << "counterexample at (" << N << ", " << r
                  << "): closed-form class list has " << got.size()
                  << " classes, enumeration finds " << brute.size() << "\n";
        return 1;
      }
      std::ostringstream line;
      line << "(" << N << ", " << r << "):";
      bool first = true;
      for (const auto& c : closed) {
        const hms::OrbifoldData od = hms::class_orbifold(c.rep);
        hms::PlusSignature cs = hms::class_signature(c.shape, N, r);
        if (!fault.empty() && fault == hms::tau_shape_name(c.shape)) cs.eta += 1;
        std::string bad;
        if (od.components != 1)
          bad = "component count";
        else if (!(cs.eta == Rational(od.index)))
          bad = "eta";
        else if (!(cs.e2 == Rational(od.e2)))
          bad = "e2";
        else if (!(cs.e3 == Rational(od.e3)))
          bad = "e3";
        else if (!(cs.e_inf == Rational(od.cusps)))
          bad = "e_inf";
        else if (cs.genus() != od.genus())
          bad = "genus";
        if (!bad.empty()) {
          std::cout << "counterexample at (" << N << ", " << r << ") class "
                    << hms::tau_shape_name(c.shape) << ": " << bad
                    << " of the closed form disagrees with the coset oracle\n";
          return 1;
        }
        line << (first ? " " : ", ") << hms::tau_shape_name(c.shape) << " ok";
        first = false;
        ++classes_checked;
      }
      std::cout << line.str() << "\n";
      ++levels;
    }
  }
  std::cout << classes_checked << " classes over " << levels
            << " (N, r) pairs match the coset enumeration oracle\n";
  return 0;
}

// ----------------------------------------------------------------------

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const hms::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: internal verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "numerical invariants of Hilbert modular surfaces of square discriminant "
      "and of their symmetric quotients"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hms 0.1.0");

  std::function<int()> run;

  Int inv_n = 0, inv_r = 0;
  std::string inv_fmt = "markdown", inv_base;
  auto* inv = app.add_subcommand(
      "invariants", "full invariant report for the quotient surface W(N, r)");
  inv->add_option("N", inv_n, "level, at least 2")->required();
  inv->add_option("r", inv_r, "unit modulo N")->required();
  inv->add_option("--format", inv_fmt, "output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  inv->add_option("--base-data", inv_base,
                  "CSV with header N,r,pg_Z,c1sq_Z overriding the bundled table");
  inv->callback([&] { run = [&] { return cmd_invariants(inv_n, inv_r, inv_fmt, inv_base); }; });

  Int tab_lo = 0, tab_hi = 0;
  std::string tab_fmt = "markdown";
  auto* tab = app.add_subcommand(
      "table", "invariant table over a level range (bundled range 6..33)");
  tab->add_option("MIN", tab_lo, "first level")->required();
  tab->add_option("MAX", tab_hi, "last level")->required();
  tab->add_option("--format", tab_fmt, "output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  tab->callback([&] { run = [&] { return cmd_table(tab_lo, tab_hi, tab_fmt); }; });

  Int cls_n = 0, cls_r = 0;
  std::string cls_which;
  auto* cls = app.add_subcommand(
      "classify", "place Z(N, r) and W(N, r) in the Enriques-Kodaira hierarchy");
  cls->add_option("N", cls_n, "level, at least 2")->required();
  cls->add_option("r", cls_r, "unit modulo N")->required();
  cls->add_option("--surface", cls_which, "restrict to one surface")
      ->check(CLI::IsMember({"z", "w"}));
  cls->callback([&] { run = [&] { return cmd_classify(cls_n, cls_r, cls_which); }; });

  Int res_d = 0, res_q = 0, res_level = 0;
  auto* res = app.add_subcommand(
      "resolve", "resolution chain of the cyclic quotient singularity (d; q)");
  res->add_option("d", res_d, "order, at least 2")->required();
  res->add_option("q", res_q, "unit modulo d")->required();
  res->add_option("--level", res_level,
                  "also print the graded boundary chain at this level (d | N)");
  res->callback([&] { run = [&] { return cmd_resolve(res_d, res_q, res_level); }; });

  Int dia_n = 0, dia_r = 0, dia_m = 0;
  std::string dia_fmt = "text", dia_out;
  auto* dia = app.add_subcommand(
      "diagram", "incidence of the modular curve F_m with the cusp chains");
  dia->add_option("N", dia_n, "level, at least 2")->required();
  dia->add_option("r", dia_r, "unit modulo N")->required();
  dia->add_option("m", dia_m, "fibre class, coprime to N, mr square modulo N")
      ->required();
  dia->add_option("--format", dia_fmt, "output format")
      ->check(CLI::IsMember({"svg", "dot", "text"}));
  dia->add_option("-o,--output", dia_out, "write to a file instead of stdout");
  dia->callback(
      [&] { run = [&] { return cmd_diagram(dia_n, dia_r, dia_m, dia_fmt, dia_out); }; });

  Int ov_max = 21;
  std::string ov_fault;
  auto* ov = app.add_subcommand(
      "oracle-verify",
      "check the closed-form class lists and signatures against coset enumeration");
  ov->add_option("--max-level", ov_max, "largest level to check (at most 24)");
  ov->add_option("--inject-fault", ov_fault)->group("");
  ov->callback([&] { run = [&] { return cmd_oracle_verify(ov_max, ov_fault); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!run) return 2;
  return guarded(run);
}
