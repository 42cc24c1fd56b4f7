#include "csplab/report.hpp"

#include <sstream>

#include "csplab/errors.hpp"

namespace csplab {

using nlohmann::json;

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw PreconditionViolation("malformed integer in report");
    return v;
  }
  throw PreconditionViolation("expected an integer in report");
}

namespace {

std::string sequence(const std::vector<Integer>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
  return s + ")";
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw PreconditionViolation(std::string("report is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw PreconditionViolation(std::string("report field '") + key + "': " + e.what());
  }
}

}  // namespace

json report_to_json(const CSPReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"j", row.j},
                    {"elem_order", row.element_order},
                    {"fixed", row.fixed},
                    {"eval", row.eval ? integer_to_json(*row.eval) : json(nullptr)},
                    {"match", row.match}});
  }
  json residues = json::array();
  for (const auto& res : r.residues) {
    residues.push_back(
        {{"i", res.i}, {"a", integer_to_json(res.folded)}, {"orbits", res.orbit_count}, {"match", res.match}});
  }
  json orbits = json::array();
  for (const auto& o : r.orbits) orbits.push_back({{"size", o.size}, {"stab", o.stabilizer}, {"count", o.count}});
  json a = json::array();
  for (const auto& x : r.a) a.push_back(integer_to_json(x));
  return {{"family", r.family},
          {"params", r.params},
          {"size", r.size},
          {"order", r.order},
          {"checker", r.checker},
          {"polynomial", r.polynomial},
          {"rows", rows},
          {"residues", residues},
          {"orbits", orbits},
          {"a", a},
          {"roots_pass", r.roots_pass},
          {"orbits_pass", r.orbits_pass},
          {"verdict", r.verdict ? "pass" : "fail"}};
}

CSPReport report_from_json(const json& j) {
  if (!j.is_object()) throw PreconditionViolation("report must be a JSON object");
  CSPReport r;
  r.family = field<std::string>(j, "family");
  r.params = field<Params>(j, "params");
  r.size = field<std::size_t>(j, "size");
  r.order = field<std::uint64_t>(j, "order");
  r.checker = field<std::string>(j, "checker");
  r.polynomial = field<std::string>(j, "polynomial");
  for (const auto& row : field<json>(j, "rows")) {
    ElementCheck e;
    e.j = field<std::uint64_t>(row, "j");
    e.element_order = field<std::uint64_t>(row, "elem_order");
    e.fixed = field<std::size_t>(row, "fixed");
    if (!row.contains("eval")) throw PreconditionViolation("report row is missing 'eval'");
    if (!row.at("eval").is_null()) e.eval = integer_from_json(row.at("eval"));
    e.match = field<bool>(row, "match");
    r.rows.push_back(std::move(e));
  }
  for (const auto& res : field<json>(j, "residues")) {
    ResidueCheck c;
    c.i = field<std::uint64_t>(res, "i");
    if (!res.contains("a")) throw PreconditionViolation("report residue is missing 'a'");
    c.folded = integer_from_json(res.at("a"));
    c.orbit_count = field<std::size_t>(res, "orbits");
    c.match = field<bool>(res, "match");
    r.residues.push_back(std::move(c));
  }
  for (const auto& o : field<json>(j, "orbits")) {
    r.orbits.push_back({field<std::size_t>(o, "size"), field<std::uint64_t>(o, "stab"), field<std::size_t>(o, "count")});
  }
  for (const auto& x : field<json>(j, "a")) r.a.push_back(integer_from_json(x));
  r.roots_pass = field<bool>(j, "roots_pass");
  r.orbits_pass = field<bool>(j, "orbits_pass");
  const auto verdict = field<std::string>(j, "verdict");
  if (verdict != "pass" && verdict != "fail") throw PreconditionViolation("verdict must be pass or fail");
  r.verdict = verdict == "pass";
  return r;
}

std::string report_to_text(const CSPReport& r) {
  std::ostringstream out;
  out << "family: " << r.family;
  for (const auto& [k, v] : r.params) out << "  " << k << "=" << v;
  out << "\n#X = " << r.size << ", #C = " << r.order << ", checker: " << r.checker << "\n";
  out << "f(q) = " << r.polynomial << "\n";
  if (!r.rows.empty()) {
    out << "  j  o(g^j)  #X^g  f(omega)  match\n";
    for (const auto& row : r.rows) {
      out << "  " << row.j << "  " << row.element_order << "  " << row.fixed << "  "
          << (row.eval ? row.eval->get_str() : std::string("non-integer")) << "  " << (row.match ? "yes" : "NO") << "\n";
    }
  }
  if (!r.residues.empty()) {
    out << "  i  a_i  #{O : s(O) | i}  match\n";
    for (const auto& res : r.residues) {
      out << "  " << res.i << "  " << res.folded.get_str() << "  " << res.orbit_count << "  "
          << (res.match ? "yes" : "NO") << "\n";
    }
  }
  out << "a = " << sequence(r.a) << "\n";
  out << "orbits:";
  for (const auto& o : r.orbits) out << " " << o.count << " of size " << o.size << " (s=" << o.stabilizer << ");";
  out << "\nevals = (";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    out << (i ? "," : "") << (r.rows[i].eval ? r.rows[i].eval->get_str() : std::string("?"));
  }
  out << ")\nverdict: " << (r.verdict ? "PASS" : "FAIL") << "\n";
  return out.str();
}

json orbit_table_json(const CSPInstance& inst) {
  json orbits = json::array();
  for (const auto& o : orbit_decompose(inst.action)) {
    json members = json::array();
    for (Index x : o.members) members.push_back(inst.action.labels()[x]);
    orbits.push_back({{"members", members}, {"size", o.members.size()}, {"stab", o.stabilizer_order}});
  }
  json a = json::array();
  for (const auto& x : fold_mod_qn(inst.polynomial, inst.action.order())) a.push_back(integer_to_json(x));
  return {{"family", inst.family}, {"params", inst.params}, {"size", inst.action.size()},
          {"order", inst.action.order()}, {"orbits", orbits}, {"a", a}};
}

std::string orbit_table_text(const CSPInstance& inst) {
  std::ostringstream out;
  out << "family: " << inst.family;
  for (const auto& [k, v] : inst.params) out << "  " << k << "=" << v;
  out << "\n#X = " << inst.action.size() << ", #C = " << inst.action.order() << "\n";
  const auto orbits = orbit_decompose(inst.action);
  for (const auto& o : orbits) {
    out << "size " << o.members.size() << ", s=" << o.stabilizer_order << ": (";
    for (std::size_t i = 0; i < o.members.size(); ++i) out << (i ? "; " : "") << inst.action.labels()[o.members[i]];
    out << ")\n";
  }
  out << orbits.size() << " orbits\n";
  out << "a = " << sequence(fold_mod_qn(inst.polynomial, inst.action.order())) << "\n";
  return out.str();
}

}  // namespace csplab
