#pragma once

// Core model for state-based component specifications: named state sets,
// operation schemas (precondition state set -> single post state), and the
// single-step semantics of applying an operation to a state. All values are
// immutable after construction and every function here is pure, so documents
// may be shared across threads without synchronization.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sgspec {

// Identifiers are letters, digits and underscores, starting with a letter.
// Keeping them this strict means they are valid unquoted in DOT output.
inline bool is_identifier(std::string_view s) {
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto ident = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
  return !s.empty() && alpha(s.front()) &&
         std::all_of(s.begin() + 1, s.end(), ident);
}

// A named state. Comparison is case-sensitive and exact.
struct StateId {
  std::string name;

  friend auto operator<=>(const StateId&, const StateId&) = default;
};

// A transition rule: applicable in any state of `pre`, always landing in
// `post`. `label` is the optional human-readable event name; display and
// event resolution fall back to the schema name when it is absent.
struct OperationSchema {
  std::string name;
  std::vector<StateId> pre;  // declaration order, never reordered
  StateId post;
  std::optional<std::string> label;

  const std::string& event_label() const { return label ? *label : name; }

  bool applicable_in(const StateId& s) const {
    return std::find(pre.begin(), pre.end(), s) != pre.end();
  }

  friend bool operator==(const OperationSchema&, const OperationSchema&) = default;
};

// One component: its state set, initial state and named operations.
struct ComponentSpec {
  std::string name;
  std::vector<StateId> states;  // declaration order
  StateId init;
  std::vector<OperationSchema> ops;
  std::optional<std::string> label;

  bool has_state(const StateId& s) const {
    return std::find(states.begin(), states.end(), s) != states.end();
  }

  const OperationSchema* find_op(std::string_view op_name) const {
    for (const auto& op : ops)
      if (op.name == op_name) return &op;
    return nullptr;
  }

  friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

// A set of components parsed from one source. `source_name` records where
// the document came from ("builtin" or a file path); it is provenance, not
// content, so equality compares components only.
struct SpecDocument {
  std::string source_name = "<memory>";
  std::vector<ComponentSpec> components;

  const ComponentSpec* find_component(std::string_view name) const {
    for (const auto& c : components)
      if (c.name == name) return &c;
    return nullptr;
  }

  friend bool operator==(const SpecDocument& a, const SpecDocument& b) {
    return a.components == b.components;
  }
};

// Result of applying an operation to a state. A precondition violation is a
// legitimate outcome, not an error: the outcome tables enumerate it.
struct Success {
  StateId before;
  StateId after;

  friend bool operator==(const Success&, const Success&) = default;
};

struct PreconditionViolation {
  StateId at;
  std::vector<StateId> expected;  // the operation's declared pre set, verbatim

  friend bool operator==(const PreconditionViolation&, const PreconditionViolation&) = default;
};

using Outcome = std::variant<Success, PreconditionViolation>;

inline bool is_success(const Outcome& o) { return std::holds_alternative<Success>(o); }
inline const Success* as_success(const Outcome& o) { return std::get_if<Success>(&o); }
inline const PreconditionViolation* as_violation(const Outcome& o) {
  return std::get_if<PreconditionViolation>(&o);
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownOperationError : public Error {
 public:
  UnknownOperationError(std::string_view component, std::string_view op)
      : Error("component '" + std::string(component) + "' has no operation named '" +
              std::string(op) + "'"),
        component_(component),
        op_(op) {}

  const std::string& component() const { return component_; }
  const std::string& op() const { return op_; }

 private:
  std::string component_;
  std::string op_;
};

class UnknownStateError : public Error {
 public:
  UnknownStateError(std::string_view component, std::string_view state)
      : Error("component '" + std::string(component) + "' has no state named '" +
              std::string(state) + "'"),
        component_(component),
        state_(state) {}

  const std::string& component() const { return component_; }
  const std::string& state() const { return state_; }

 private:
  std::string component_;
  std::string state_;
};

class UnknownComponentError : public Error {
 public:
  explicit UnknownComponentError(std::string_view name)
      : Error("document has no component named '" + std::string(name) + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Well-formedness checking. Structural parsing accepts any document shape;
// these are the semantic invariants enforced on top of it.
enum class InvariantKind {
  DuplicateState,
  DuplicateOp,
  UnknownInit,
  PreNotSubset,
  PostNotMember,
  EmptyPre,
  DuplicateComponent,
};

inline std::string_view to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::DuplicateState: return "DuplicateState";
    case InvariantKind::DuplicateOp: return "DuplicateOp";
    case InvariantKind::UnknownInit: return "UnknownInit";
    case InvariantKind::PreNotSubset: return "PreNotSubset";
    case InvariantKind::PostNotMember: return "PostNotMember";
    case InvariantKind::EmptyPre: return "EmptyPre";
    case InvariantKind::DuplicateComponent: return "DuplicateComponent";
  }
  return "?";
}

struct WellFormednessError {
  std::string component;
  InvariantKind kind;
  std::string offender;  // the offending identifier
  std::string message;

  friend bool operator==(const WellFormednessError&, const WellFormednessError&) = default;
};

namespace detail {

inline WellFormednessError wf_error(std::string_view component, InvariantKind kind,
                                    std::string_view offender, std::string message) {
  return {std::string(component), kind, std::string(offender), std::move(message)};
}

}  // namespace detail

// Component-scope invariants (everything except cross-component name clashes).
inline std::vector<WellFormednessError> validate_component(const ComponentSpec& spec) {
  namespace d = detail;
  std::vector<WellFormednessError> errors;

  std::vector<std::string_view> seen_states;
  for (const auto& s : spec.states) {
    if (std::find(seen_states.begin(), seen_states.end(), s.name) != seen_states.end()) {
      errors.push_back(d::wf_error(spec.name, InvariantKind::DuplicateState, s.name,
                                   "duplicate state '" + s.name + "'"));
    } else {
      seen_states.push_back(s.name);
    }
  }

  std::vector<std::string_view> seen_ops;
  for (const auto& op : spec.ops) {
    if (std::find(seen_ops.begin(), seen_ops.end(), op.name) != seen_ops.end()) {
      errors.push_back(d::wf_error(spec.name, InvariantKind::DuplicateOp, op.name,
                                   "duplicate operation '" + op.name + "'"));
    } else {
      seen_ops.push_back(op.name);
    }
  }

  if (!spec.has_state(spec.init)) {
    errors.push_back(d::wf_error(spec.name, InvariantKind::UnknownInit, spec.init.name,
                                 "init state '" + spec.init.name + "' is not a declared state"));
  }

  for (const auto& op : spec.ops) {
    if (op.pre.empty()) {
      errors.push_back(d::wf_error(spec.name, InvariantKind::EmptyPre, op.name,
                                   "operation '" + op.name + "' has an empty pre set"));
    }
    for (const auto& p : op.pre) {
      if (!spec.has_state(p)) {
        errors.push_back(d::wf_error(spec.name, InvariantKind::PreNotSubset, p.name,
                                     "pre state '" + p.name + "' of operation '" + op.name +
                                         "' is not a declared state"));
      }
    }
    if (!spec.has_state(op.post)) {
      errors.push_back(d::wf_error(spec.name, InvariantKind::PostNotMember, op.post.name,
                                   "post state '" + op.post.name + "' of operation '" + op.name +
                                       "' is not a declared state"));
    }
  }

  return errors;
}

// Returns every invariant violation in the document, in declaration order.
// An empty result means the document is well-formed.
inline std::vector<WellFormednessError> validate(const SpecDocument& doc) {
  std::vector<WellFormednessError> errors;
  std::vector<std::string_view> seen;
  for (const auto& comp : doc.components) {
    if (std::find(seen.begin(), seen.end(), comp.name) != seen.end()) {
      errors.push_back(detail::wf_error(comp.name, InvariantKind::DuplicateComponent, comp.name,
                                        "duplicate component '" + comp.name + "'"));
    } else {
      seen.push_back(comp.name);
    }
    auto inner = validate_component(comp);
    errors.insert(errors.end(), inner.begin(), inner.end());
  }
  return errors;
}

class InvalidSpecError : public Error {
 public:
  explicit InvalidSpecError(std::vector<WellFormednessError> errors)
      : Error(compose(errors)), errors_(std::move(errors)) {}

  const std::vector<WellFormednessError>& errors() const { return errors_; }

 private:
  static std::string compose(const std::vector<WellFormednessError>& errors) {
    std::string msg = "document is not well-formed";
    if (!errors.empty()) msg += ": " + errors.front().message;
    if (errors.size() > 1) msg += " (and " + std::to_string(errors.size() - 1) + " more)";
    return msg;
  }

  std::vector<WellFormednessError> errors_;
};

// Applies one operation to one state. Exactly one of the two outcomes is
// returned for every valid (op, state) pair; the spec itself is never
// mutated. Unknown names are usage errors, distinct from a precondition
// violation, which is a legitimate outcome.
inline Outcome apply_operation(const ComponentSpec& spec, std::string_view op_name,
                               const StateId& current) {
  const OperationSchema* op = spec.find_op(op_name);
  if (op == nullptr) throw UnknownOperationError(spec.name, op_name);
  if (!spec.has_state(current)) throw UnknownStateError(spec.name, current.name);
  if (op->applicable_in(current)) return Success{current, op->post};
  return PreconditionViolation{current, op->pre};
}

inline const StateId& initial_state(const ComponentSpec& spec) { return spec.init; }

}  // namespace sgspec
