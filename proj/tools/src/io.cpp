#include "fusioncat_io/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fcio {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

}  // namespace

fc::GroupPtr group_from_json(const json& j) {
  if (j.contains("builtin")) return fc::builtin::by_name(field<std::string>(j, "builtin"));
  auto table = field<std::vector<std::vector<int>>>(j, "table");
  const int order = j.contains("order") ? field<int>(j, "order") : static_cast<int>(table.size());
  if (order != static_cast<int>(table.size())) throw InputError("order does not match the table size");
  std::vector<std::string> names;
  if (j.contains("names")) names = field<std::vector<std::string>>(j, "names");
  const int identity = j.contains("identity") ? field<int>(j, "identity") : 0;
  return fc::FiniteGroup::from_table(std::move(table), identity, std::move(names), j.value("label", ""));
}

fc::GroupPtr load_group(const std::string& file, const std::string& builtin) {
  if (!file.empty() && !builtin.empty()) throw InputError("give either --group or --builtin-group, not both");
  if (!file.empty()) return group_from_json(read_json_file(file));
  if (!builtin.empty()) return fc::builtin::by_name(builtin);
  throw InputError("no group given (use --group FILE or --builtin-group NAME)");
}

json subgroup_to_json(const fc::Subgroup& s) {
  json names = json::array();
  for (int a : s.elements()) names.push_back(s.parent()->name(a));
  return {{"label", s.to_string()}, {"elements", s.elements()}, {"names", names}};
}

json cochain_to_json(const fc::Cochain& c) {
  json values = json::array();
  const auto& el = c.domain().elements();
  const int n = static_cast<int>(el.size());
  std::vector<int> idx(c.degree(), 0);
  for (size_t flat = 0; flat < c.values().size(); ++flat) {
    size_t rest = flat;
    for (int k = c.degree() - 1; k >= 0; --k) {
      idx[k] = el[rest % n];
      rest /= n;
    }
    if (int64_t v = c.values()[flat]; v != 0) {
      json row = idx;
      row.push_back(v);
      values.push_back(row);
    }
  }
  return {{"group", el}, {"degree", c.degree()}, {"modulus", c.modulus()}, {"values", values}};
}

fc::Cochain cochain_from_json(const json& j, const fc::GroupPtr& g) {
  auto elems = field<std::vector<int>>(j, "group");
  const int degree = field<int>(j, "degree");
  const auto modulus = field<int64_t>(j, "modulus");
  std::sort(elems.begin(), elems.end());
  fc::Cochain c(fc::Subgroup(g, elems), degree, modulus);
  if (j.contains("values"))
    for (const auto& row : j.at("values")) {
      auto v = row.get<std::vector<int64_t>>();
      if (static_cast<int>(v.size()) != degree + 1) throw InputError("cochain value rows need degree+1 entries");
      std::vector<int> args(v.begin(), v.end() - 1);
      c.set(args, v.back());
    }
  return c;
}

fc::Cochain load_cochain(const std::string& spec, const fc::GroupPtr& g, int degree) {
  if (std::filesystem::exists(spec)) return cochain_from_json(read_json_file(spec), g);
  return fc::builtin_cochain::by_name(spec, g, degree);
}

fc::Cochain load_cochain_on(const std::string& spec, const fc::Subgroup& k, int degree) {
  if (spec.empty() || spec == "trivial" || spec == "1") return fc::builtin_cochain::trivial(k, degree);
  fc::Cochain c = load_cochain(spec, k.parent(), degree);
  if (c.domain() == k) return c;
  return fc::restrict(c, k);
}

std::string render_text(const std::vector<Table>& tables) {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : tables) {
    if (!first) out << "\n";
    first = false;
    if (!t.title.empty()) out << t.title << "\n";
    std::vector<size_t> w(t.header.size(), 0);
    for (size_t c = 0; c < t.header.size(); ++c) w[c] = t.header[c].size();
    for (const auto& r : t.rows)
      for (size_t c = 0; c < r.size() && c < w.size(); ++c) w[c] = std::max(w[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (size_t c = 0; c < w.size(); ++c) {
        std::string cell = c < r.size() ? r[c] : "";
        s += cell;
        if (c + 1 < w.size()) s += std::string(w[c] - cell.size() + 2, ' ');
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << "\n";
    };
    line(t.header);
    size_t total = 0;
    for (size_t c = 0; c < w.size(); ++c) total += w[c] + (c + 1 < w.size() ? 2 : 0);
    out << std::string(total, '-') << "\n";
    for (const auto& r : t.rows) line(r);
  }
  return out.str();
}

std::string render_csv(const std::vector<Table>& tables) {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : tables) {
    if (!first) out << "\n";
    first = false;
    auto line = [&](const std::vector<std::string>& r) {
      for (size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_cell(r[c]);
      out << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
  }
  return out.str();
}

json rank_table_to_json(const fc::RankTable& t) {
  json labels = json::array();
  for (const auto& d : t.data) labels.push_back(d.label());
  return {{"labels", labels}, {"entries", t.entries}};
}

std::vector<std::vector<int>> rank_entries_from_json(const json& j) {
  return field<std::vector<std::vector<int>>>(j, "entries");
}

}  // namespace fcio
