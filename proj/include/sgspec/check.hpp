#pragma once

// Explicit-state analysis over validated components: exhaustive success /
// error outcome tables, reachability from the init state, sink detection,
// and the aggregate per-document report. State sets in results are ordered
// by the component's state declaration order and rows by op declaration
// order, so every report is byte-stable.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgspec/model.hpp"

namespace sgspec {

struct OutcomeRow {
  std::string op;
  std::vector<StateId> success_pre;   // states where the op succeeds
  std::vector<StateId> error_states;  // the exact complement

  friend bool operator==(const OutcomeRow&, const OutcomeRow&) = default;
};

struct OutcomeTable {
  std::string component;
  std::vector<OutcomeRow> rows;  // one per op, declaration order

  friend bool operator==(const OutcomeTable&, const OutcomeTable&) = default;
};

struct ReachabilityReport {
  std::string component;
  std::vector<StateId> reachable;
  std::vector<StateId> unreachable;
  std::vector<StateId> sinks;  // reachable states with no applicable op

  friend bool operator==(const ReachabilityReport&, const ReachabilityReport&) = default;
};

enum class FindingKind { Unreachable, Sink, NeverApplicable };

inline std::string_view to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::Unreachable: return "Unreachable";
    case FindingKind::Sink: return "Sink";
    case FindingKind::NeverApplicable: return "NeverApplicable";
  }
  return "?";
}

struct Finding {
  FindingKind kind;
  std::string component;
  std::string subject;  // the state or op concerned

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ComponentReport {
  std::string name;
  std::vector<WellFormednessError> errors;
  std::optional<OutcomeTable> table;        // absent when errors is non-empty
  std::optional<ReachabilityReport> reach;  // likewise
  std::vector<Finding> findings;

  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

struct CheckReport {
  std::string source_name;
  std::vector<ComponentReport> components;

  bool has_errors() const {
    for (const auto& c : components)
      if (!c.errors.empty()) return true;
    return false;
  }

  std::vector<Finding> findings() const {
    std::vector<Finding> all;
    for (const auto& c : components) all.insert(all.end(), c.findings.begin(), c.findings.end());
    return all;
  }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

namespace detail {

inline void require_valid(const ComponentSpec& spec) {
  if (auto errors = validate_component(spec); !errors.empty())
    throw InvalidSpecError(std::move(errors));
}

}  // namespace detail

// The table is built directly from the declared pre sets: a row's success
// states are the op's pre set and its error states are the exact complement,
// both in state declaration order. apply_operation over every (op, state)
// cell must classify identically; the tests hold the two routes together.
inline OutcomeTable outcome_table(const ComponentSpec& spec) {
  detail::require_valid(spec);
  OutcomeTable table{spec.name, {}};
  table.rows.reserve(spec.ops.size());
  for (const auto& op : spec.ops) {
    OutcomeRow row{op.name, {}, {}};
    for (const auto& state : spec.states) {
      if (op.applicable_in(state)) {
        row.success_pre.push_back(state);
      } else {
        row.error_states.push_back(state);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

// Least fixpoint of {init} under the transition relation, plus the sinks.
inline ReachabilityReport reachability(const ComponentSpec& spec) {
  detail::require_valid(spec);

  std::vector<bool> reached(spec.states.size(), false);
  auto index_of = [&](const StateId& s) {
    for (std::size_t i = 0; i < spec.states.size(); ++i)
      if (spec.states[i] == s) return i;
    return spec.states.size();
  };

  std::vector<std::size_t> worklist{index_of(spec.init)};
  reached[worklist[0]] = true;
  while (!worklist.empty()) {
    std::size_t current = worklist.back();
    worklist.pop_back();
    for (const auto& op : spec.ops) {
      if (!op.applicable_in(spec.states[current])) continue;
      std::size_t target = index_of(op.post);
      if (!reached[target]) {
        reached[target] = true;
        worklist.push_back(target);
      }
    }
  }

  ReachabilityReport report{spec.name, {}, {}, {}};
  for (std::size_t i = 0; i < spec.states.size(); ++i) {
    const StateId& state = spec.states[i];
    if (!reached[i]) {
      report.unreachable.push_back(state);
      continue;
    }
    report.reachable.push_back(state);
    bool has_exit = false;
    for (const auto& op : spec.ops) has_exit = has_exit || op.applicable_in(state);
    if (!has_exit) report.sinks.push_back(state);
  }
  return report;
}

// Full document analysis. Never throws: well-formedness problems are part
// of the report, and analysis findings (sinks, unreachable states, ops that
// can never fire) are observations, not errors.
inline CheckReport check(const SpecDocument& doc) {
  CheckReport report;
  report.source_name = doc.source_name;

  // Mirrors validate(), but keeps errors attached to the component instance
  // they were found on; two components sharing a name must not swap reports.
  std::vector<std::string_view> seen;
  for (const auto& comp : doc.components) {
    ComponentReport cr;
    cr.name = comp.name;
    if (std::find(seen.begin(), seen.end(), comp.name) != seen.end()) {
      cr.errors.push_back(detail::wf_error(comp.name, InvariantKind::DuplicateComponent,
                                           comp.name,
                                           "duplicate component '" + comp.name + "'"));
    } else {
      seen.push_back(comp.name);
    }
    auto inner = validate_component(comp);
    cr.errors.insert(cr.errors.end(), inner.begin(), inner.end());

    if (cr.errors.empty()) {
      cr.table = outcome_table(comp);
      cr.reach = reachability(comp);
      for (const auto& state : cr.reach->unreachable)
        cr.findings.push_back({FindingKind::Unreachable, comp.name, state.name});
      for (const auto& state : cr.reach->sinks)
        cr.findings.push_back({FindingKind::Sink, comp.name, state.name});
      for (const auto& op : comp.ops) {
        bool applicable_somewhere = false;
        for (const auto& state : cr.reach->reachable)
          applicable_somewhere = applicable_somewhere || op.applicable_in(state);
        if (!applicable_somewhere)
          cr.findings.push_back({FindingKind::NeverApplicable, comp.name, op.name});
      }
    }
    report.components.push_back(std::move(cr));
  }
  return report;
}

}  // namespace sgspec
