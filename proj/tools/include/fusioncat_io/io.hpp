#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "fusioncat/gt.hpp"

namespace fcio {

using nlohmann::json;

// Bad files, malformed JSON and similar; the CLI maps these to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fc::GroupPtr group_from_json(const json& j);
fc::GroupPtr load_group(const std::string& file, const std::string& builtin);
// JSON file if the path exists, else a builtin cochain name.
fc::Cochain load_cochain(const std::string& spec, const fc::GroupPtr& g, int degree);
// a 2-cochain on the subgroup k: "trivial", a builtin restricted to k, or a file
fc::Cochain load_cochain_on(const std::string& spec, const fc::Subgroup& k, int degree);

json cochain_to_json(const fc::Cochain& c);
fc::Cochain cochain_from_json(const json& j, const fc::GroupPtr& g);
json subgroup_to_json(const fc::Subgroup& s);

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_text(const std::vector<Table>& tables);
std::string render_csv(const std::vector<Table>& tables);

json rank_table_to_json(const fc::RankTable& t);
// entries only; labels are not re-resolved into data
std::vector<std::vector<int>> rank_entries_from_json(const json& j);

}  // namespace fcio
