#include "epikit/dot.hpp"

#include <sstream>

namespace epikit {

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

std::string escape_label(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Cross-world edges with merged agent labels, reflexive loops suppressed.
void emit_edges(std::ostringstream& out, const EpistemicModel& m,
                const std::vector<std::string>& nodes) {
  for (int i = 0; i < m.world_count(); ++i) {
    for (int k = i + 1; k < m.world_count(); ++k) {
      std::string label;
      for (std::size_t j = 0; j < m.agents().size(); ++j) {
        if (!m.partition(static_cast<int>(j)).same_block(i, k)) continue;
        if (!label.empty()) label += ",";
        label += m.agents()[j];
      }
      if (label.empty()) continue;
      out << "  " << quote(nodes[i]) << " -- " << quote(nodes[k]) << " [label=\""
          << escape_label(label) << "\"];\n";
    }
  }
}

}  // namespace

std::string to_dot(const EpistemicModel& m, std::string_view name) {
  std::ostringstream out;
  out << "graph " << quote(name) << " {\n";
  out << "  node [shape=circle];\n";
  for (int i = 0; i < m.world_count(); ++i) {
    std::string atoms;
    for (const auto& [prop, mask] : m.valuation()) {
      if (!mask[i]) continue;
      if (!atoms.empty()) atoms += ",";
      atoms += prop;
    }
    out << "  " << quote(m.worlds()[i]) << " [label=\"" << escape_label(m.worlds()[i]);
    if (!atoms.empty()) out << "\\n" << escape_label(atoms);
    out << "\"];\n";
  }
  emit_edges(out, m, m.worlds());
  out << "}\n";
  return out.str();
}

std::string to_dot(const ActionModel& a) {
  std::ostringstream out;
  out << "graph " << quote(a.name()) << " {\n";
  out << "  node [shape=circle];\n";
  for (int s = 0; s < a.action_count(); ++s) {
    const std::string& action = a.actions()[s];
    out << "  " << quote(action) << " [label=\"" << escape_label(action) << "\\npre: "
        << escape_label(render_formula(a.precondition(action))) << "\"];\n";
  }
  for (int i = 0; i < a.action_count(); ++i) {
    for (int k = i + 1; k < a.action_count(); ++k) {
      std::string label;
      for (std::size_t j = 0; j < a.agents().size(); ++j) {
        if (!a.partition(static_cast<int>(j)).same_block(i, k)) continue;
        if (!label.empty()) label += ",";
        label += a.agents()[j];
      }
      if (label.empty()) continue;
      out << "  " << quote(a.actions()[i]) << " -- " << quote(a.actions()[k]) << " [label=\""
          << escape_label(label) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const DynamicModel& m, std::string_view name) {
  std::ostringstream out;
  out << "graph " << quote(name) << " {\n";
  out << "  node [shape=circle];\n";
  const EpistemicModel& base = m.base();
  for (int i = 0; i < base.world_count(); ++i) {
    std::string atoms;
    for (const auto& [prop, mask] : base.valuation()) {
      if (!mask[i]) continue;
      if (!atoms.empty()) atoms += ",";
      atoms += prop;
    }
    out << "  " << quote(base.worlds()[i]) << " [label=\"" << escape_label(base.worlds()[i]);
    if (!atoms.empty()) out << "\\n" << escape_label(atoms);
    out << "\"];\n";
  }
  emit_edges(out, base, base.worlds());

  std::string table = render_f_table(m);
  std::string label;
  for (char c : table) {
    if (c == '\n') {
      label += "\\l";
    } else {
      if (c == '"' || c == '\\') label += '\\';
      label += c;
    }
  }
  out << "  \"__f\" [shape=box, label=\"" << label << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace epikit
