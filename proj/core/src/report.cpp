#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "itrev/postulates.hpp"

namespace itrev {

std::string render_proposition(WorldSet s, int n_atoms) {
  const WorldSet universe = WorldSet::universe(n_atoms);
  s &= universe;
  if (s.empty()) return "false";
  if (s == universe) return "true";
  const Signature sig = Signature::standard(n_atoms);
  for (int i = 0; i < n_atoms; ++i) {
    const WorldSet atom = models(Formula::atom(i), n_atoms);
    if (s == atom) return sig.atom(i);
    if (s == universe - atom) return "~" + sig.atom(i);
  }
  return render_dnf(s, sig);
}

namespace {

constexpr const char* kTpoLabels[] = {"t", "t'"};
constexpr const char* kInputLabels[] = {"A", "B"};
constexpr const char* kWorldLabels[] = {"x", "y", "z"};

std::string label(const char* const* labels, std::size_t count, std::size_t i, char fallback) {
  if (i < count) return labels[i];
  return std::string(1, fallback) + std::to_string(i + 1);
}

std::string permutation_text(const Permutation& pi, int n_atoms) {
  std::string out;
  for (int i = 0; i < pi.n_worlds; ++i) {
    const World w{static_cast<std::uint8_t>(i)};
    if (!out.empty()) out += " ";
    out += to_string(w, n_atoms) + "->" + to_string(pi(w), n_atoms);
  }
  return out;
}

std::string scope_text(const CheckScope& s) {
  std::string out = "n=" + std::to_string(s.n_atoms) + ", " + std::string(to_string(s.mode));
  if (s.mode == CheckMode::Sampled) out += ", sample=" + std::to_string(s.sample) + ", seed=" + std::to_string(s.seed);
  return out;
}

}  // namespace

std::string render_text(const CheckReport& report) {
  const int n = report.scope.n_atoms;
  std::ostringstream out;
  out << report.subject;
  if (!report.operators.empty()) {
    out << " [";
    for (std::size_t i = 0; i < report.operators.size(); ++i) out << (i ? ", " : "") << report.operators[i];
    out << "]";
  }
  out << "\nscope: " << scope_text(report.scope) << "\n";
  out << "outcome: " << (report.passed ? "pass" : "fail") << "\n";
  out << "instances: " << report.instances << "\n";
  out << "violations: " << report.violations << "\n";
  for (std::size_t k = 0; k < report.witnesses.size(); ++k) {
    const Witness& w = report.witnesses[k];
    std::string line;
    auto add = [&](const std::string& s) { line += (line.empty() ? "" : "; ") + s; };
    for (std::size_t i = 0; i < w.tpos.size(); ++i) add(label(kTpoLabels, 2, i, 't') + " = " + to_string(w.tpos[i]));
    for (std::size_t i = 0; i < w.inputs.size(); ++i) {
      add(label(kInputLabels, 2, i, 'A') + " = " + render_proposition(w.inputs[i], n));
    }
    for (std::size_t i = 0; i < w.worlds.size(); ++i) {
      add(label(kWorldLabels, 3, i, 'w') + " = " + to_string(w.worlds[i], n));
    }
    if (w.permutation) add("pi = " + permutation_text(*w.permutation, n));
    out << "witness " << k + 1 << ":" << (line.empty() ? "" : " ") << line << "\n";
    if (!w.detail.empty()) out << "  " << w.detail << "\n";
  }
  for (const std::string& note : report.notes) out << "note: " << note << "\n";
  if (!report.table.empty()) {
    std::size_t label_width = 0;
    for (const TableRow& row : report.table) label_width = std::max(label_width, row.label.size());
    std::vector<std::size_t> widths;
    for (const std::string& c : report.table_columns) widths.push_back(c.size());
    for (const TableRow& row : report.table) {
      for (std::size_t i = 0; i < row.values.size(); ++i) {
        if (i >= widths.size()) widths.push_back(0);
        widths[i] = std::max(widths[i], row.values[i].size());
      }
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    std::string header = "  " + pad("", label_width);
    for (std::size_t i = 0; i < report.table_columns.size(); ++i) header += "  " + pad(report.table_columns[i], widths[i]);
    while (!header.empty() && header.back() == ' ') header.pop_back();
    out << "table:\n" << header << "\n";
    for (const TableRow& row : report.table) {
      std::string line = "  " + pad(row.label, label_width);
      for (std::size_t i = 0; i < row.values.size(); ++i) line += "  " + pad(row.values[i], widths[i]);
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
  }
  return out.str();
}

std::string render_json(const CheckReport& report) {
  using nlohmann::ordered_json;
  const int n = report.scope.n_atoms;
  ordered_json doc;
  doc["subject"] = report.subject;
  doc["operators"] = report.operators;
  ordered_json scope;
  scope["n_atoms"] = report.scope.n_atoms;
  scope["mode"] = std::string(to_string(report.scope.mode));
  if (report.scope.mode == CheckMode::Sampled) {
    scope["sample"] = report.scope.sample;
    scope["seed"] = report.scope.seed;
  }
  doc["scope"] = scope;
  doc["outcome"] = report.passed ? "pass" : "fail";
  doc["instances"] = report.instances;
  doc["violations"] = report.violations;
  ordered_json witnesses = ordered_json::array();
  for (const Witness& w : report.witnesses) {
    ordered_json j;
    j["tpos"] = ordered_json::array();
    for (const Tpo& t : w.tpos) j["tpos"].push_back(to_string(t));
    j["inputs"] = ordered_json::array();
    for (WorldSet a : w.inputs) j["inputs"].push_back(render_proposition(a, n));
    j["worlds"] = ordered_json::array();
    for (World x : w.worlds) j["worlds"].push_back(to_string(x, n));
    if (w.permutation) {
      ordered_json pi = ordered_json::object();
      for (int i = 0; i < w.permutation->n_worlds; ++i) {
        const World x{static_cast<std::uint8_t>(i)};
        pi[to_string(x, n)] = to_string((*w.permutation)(x), n);
      }
      j["permutation"] = pi;
    }
    j["detail"] = w.detail;
    witnesses.push_back(j);
  }
  doc["witnesses"] = witnesses;
  doc["notes"] = report.notes;
  if (!report.table.empty()) {
    ordered_json table;
    table["columns"] = report.table_columns;
    table["rows"] = ordered_json::array();
    for (const TableRow& row : report.table) {
      table["rows"].push_back(ordered_json{{"label", row.label}, {"values", row.values}});
    }
    doc["table"] = table;
  }
  return doc.dump(2) + "\n";
}

}  // namespace itrev
