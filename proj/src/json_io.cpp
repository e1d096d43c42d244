#include "abideal/json_io.hpp"

#include <sstream>

namespace abideal {

Json to_json(const Root& r) { return Json(r.c); }

Json to_json(const AffineRoot& r) {
  Json j;
  j["coeffs"] = r.finite.c;
  j["delta"] = r.level;
  return j;
}

Json ideal_to_json(const RootSystem& rs, const AbelianIdeal& ideal) {
  Json j;
  j["type"] = rs.type().name();
  Json roots = Json::array();
  for (const Root& r : ideal.roots) roots.push_back(to_json(r));
  j["roots"] = roots;
  j["word"] = ideal.word.letters;
  j["long"] = is_long_ideal(rs, ideal);
  if (ideal.empty())
    j["rootlet"] = nullptr;
  else
    j["rootlet"] = to_json(rootlet(rs, ideal));
  Json gens = Json::array();
  for (const Root& r : generators(rs, ideal)) gens.push_back(to_json(r));
  j["generators"] = gens;
  return j;
}

Json duality_report_to_json(const DualityReport& report) {
  Json j;
  j["type"] = report.type;
  j["bracket_target"] = report.bracket_target;
  j["long_ideals"] = report.long_ideal_count;
  j["dual_candidates"] = report.dual_candidate_count;
  j["bijection"] = report.bijection;
  Json witnesses = Json::array();
  for (const auto& [ideal, candidate] : report.witnesses) {
    Json w;
    Json lhs = Json::array();
    for (const Root& r : ideal.roots) lhs.push_back(to_json(r));
    Json rhs = Json::array();
    for (const Root& r : candidate.roots) rhs.push_back(to_json(r));
    w["ideal"] = lhs;
    w["dual"] = rhs;
    witnesses.push_back(w);
  }
  j["witnesses"] = witnesses;
  if (report.alt_candidate_count) {
    j["alt_adjoint_candidates"] = *report.alt_candidate_count;
    j["alt_flagged"] = report.alt_flagged;
  }
  return j;
}

std::string epsilon_str(const RootSystem& rs, const Root& r) {
  const Family fam = rs.type().family;
  if (fam != Family::B && fam != Family::C) return {};
  const int p = rs.rank();
  std::vector<int> e(p, 0);
  // a_i = e_i - e_(i+1) for i < p; a_p = e_p (B) or 2 e_p (C).
  for (int i = 0; i < p - 1; ++i) {
    e[i] += r.c[i];
    e[i + 1] -= r.c[i];
  }
  e[p - 1] += (fam == Family::B ? 1 : 2) * r.c[p - 1];
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < p; ++k) {
    if (e[k] == 0) continue;
    if (!first && e[k] > 0) os << '+';
    if (e[k] == -1)
      os << '-';
    else if (e[k] != 1)
      os << e[k];
    os << 'e' << (k + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace abideal
