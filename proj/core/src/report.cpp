#include "pgog/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace pgog {

using Json = nlohmann::ordered_json;

void Report::add_all(std::vector<Check> cs) {
  for (Check& c : cs) checks.push_back(std::move(c));
}

int Report::exit_code() const noexcept {
  for (Check const& c : checks) {
    if (c.failed()) return 1;
  }
  return 0;
}

std::string to_json(Report const& r, int indent) {
  Json j;
  j["command"] = r.command;
  Json params = Json::object();
  for (auto const& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  Json checks = Json::array();
  for (Check const& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"details", c.details},
                      {"violations", c.violations}});
  }
  j["checks"] = checks;
  if (!r.result.empty()) j["result"] = Json::parse(r.result);
  j["exit_code"] = r.exit_code();
  return j.dump(indent);
}

std::string to_text(Report const& r) {
  std::ostringstream out;
  out << r.command;
  for (auto const& [k, v] : r.parameters) out << ' ' << k << '=' << v;
  out << '\n';
  for (Check const& c : r.checks) {
    out << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.details.empty()) out << ": " << c.details;
    out << '\n';
    for (std::string const& v : c.violations) out << "      - " << v << '\n';
  }
  std::size_t counts[4] = {};
  for (Check const& c : r.checks) ++counts[static_cast<int>(c.status)];
  out << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " unknown, "
      << counts[3] << " skip\n";
  return out.str();
}

std::string result_json(CollapseReport const& r) {
  Json j;
  j["p"] = r.p;
  Json gens = Json::array();
  for (std::size_t g = 0; g < r.generators.size(); ++g) {
    Json d = r.depth[g] ? Json(*r.depth[g]) : Json(nullptr);
    gens.push_back({{"name", r.generators[g]}, {"depth", d}, {"diverges", r.diverges(g)}});
  }
  j["generators"] = gens;
  Json rules = Json::array();
  for (BracketRule const& b : r.rules) {
    rules.push_back({{"defined", r.generators[b.defined]},
                     {"left", b.left.to_string(r.generators)},
                     {"right", b.right.to_string(r.generators)},
                     {"relator", b.relator}});
  }
  j["rules"] = rules;
  j["collapsed"] = r.collapsed_names();
  Json residual;
  residual["generators"] = r.residual.generators();
  Json rels = Json::array();
  for (Word const& w : r.residual.relators()) rels.push_back(r.residual.to_string(w));
  residual["relators"] = rels;
  j["residual"] = residual;
  j["residual_rank"] = r.residual_rank;
  return j.dump();
}

std::string result_json(BoundReport const& r) {
  Json j;
  j["p"] = r.p;
  j["edge_count"] = r.edge_count;
  j["max_edge_order"] = r.max_edge_order;
  j["rank"] = r.rank;
  j["bound"] = r.bound;
  j["edge_sum"] = r.edge_sum;
  j["rank_side"] = r.rank_side;
  j["bound_holds"] = r.bound_holds;
  j["edge_sum_holds"] = r.edge_sum_holds;
  return j.dump();
}

std::string result_json(PropernessReport const& r) {
  Json j;
  j["certified"] = r.certified();
  j["specialisation_violations"] = r.specialisation.violations;
  j["target_defect"] = r.target_defect ? Json(*r.target_defect) : Json(nullptr);
  j["non_injective"] = r.non_injective;
  j["unchecked"] = r.unchecked;
  return j.dump();
}

std::string result_json(SeparationCertificate const& c) {
  Json j;
  j["outcome"] = to_string(c.outcome);
  j["word"] = c.word;
  j["p"] = c.p;
  j["level"] = c.level;
  j["witness"] = c.witness;
  j["image"] = c.image;
  Json attempts = Json::array();
  for (LevelAttempt const& a : c.attempts) {
    attempts.push_back({{"level", a.level},
                        {"letters_fit", a.letters_fit},
                        {"lamplighter_ok", a.lamplighter_ok},
                        {"normal_form", to_string(a.normal_form)},
                        {"syllables", a.syllables},
                        {"image_nontrivial", a.image_nontrivial},
                        {"note", a.note}});
  }
  j["attempts"] = attempts;
  return j.dump();
}

}  // namespace pgog
