#pragma once

// Canonical pretty-printer. Output is deterministic: two-space indentation,
// one declaration per line, components separated by a blank line, trailing
// newline, LF line endings. Canonical text re-parses to an equal document,
// and printing is idempotent across a parse/print cycle.

#include <string>
#include <string_view>

#include "sgspec/model.hpp"

namespace sgspec {

namespace detail {

inline std::string quote(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline void append_state_list(std::string& out, const std::vector<StateId>& states) {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i > 0) out += ", ";
    out += states[i].name;
  }
}

inline void print_component(std::string& out, const ComponentSpec& comp) {
  out += "component " + comp.name + " {\n";
  out += "  states: ";
  append_state_list(out, comp.states);
  out += ";\n";
  out += "  init: " + comp.init.name + ";\n";
  if (comp.label) out += "  label: " + quote(*comp.label) + ";\n";
  for (const auto& op : comp.ops) {
    out += "  op " + op.name;
    if (op.label) out += " [" + quote(*op.label) + "]";
    out += " { pre: ";
    append_state_list(out, op.pre);
    out += "; post: " + op.post.name + "; }\n";
  }
  out += "}\n";
}

}  // namespace detail

// Throws InvalidSpecError when the document fails validation; printing is
// only defined for well-formed documents.
inline std::string pretty_print(const SpecDocument& doc) {
  if (auto errors = validate(doc); !errors.empty()) throw InvalidSpecError(std::move(errors));
  std::string out;
  for (std::size_t i = 0; i < doc.components.size(); ++i) {
    if (i > 0) out += "\n";
    detail::print_component(out, doc.components[i]);
  }
  return out;
}

inline std::string pretty_print(const ComponentSpec& comp) {
  if (auto errors = validate_component(comp); !errors.empty())
    throw InvalidSpecError(std::move(errors));
  std::string out;
  detail::print_component(out, comp);
  return out;
}

}  // namespace sgspec
