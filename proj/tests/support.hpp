#pragma once

// Shared test fixtures. The four corpus models are transcribed here by hand,
// independently of the parser and the embedded sources, so they can serve as
// an oracle for both.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgspec/model.hpp"

namespace testsupport {

inline sgspec::ComponentSpec appliance_model() {
  using sgspec::StateId;
  sgspec::ComponentSpec c;
  c.name = "Appliance";
  c.states = {StateId{"disconnected"}, StateId{"connected"}, StateId{"running"}};
  c.init = StateId{"disconnected"};
  c.ops = {
      {"PluggedInAppliance", {StateId{"disconnected"}}, StateId{"connected"}, "Plugged-in"},
      {"InUseAppliance", {StateId{"connected"}}, StateId{"running"}, "In use"},
      {"UnPluggedAppliance", {StateId{"connected"}}, StateId{"disconnected"}, "Unplugged"},
      {"NotInUseAppliance", {StateId{"running"}}, StateId{"connected"}, "not in-use"},
  };
  return c;
}

inline sgspec::ComponentSpec turbine_model() {
  using sgspec::StateId;
  sgspec::ComponentSpec c;
  c.name = "Turbine";
  c.states = {StateId{"turbineNotRunning"}, StateId{"turbineSlowRunning"},
              StateId{"turbineFastRunning"}};
  c.init = StateId{"turbineNotRunning"};
  c.ops = {
      {"SlowWind", {StateId{"turbineNotRunning"}}, StateId{"turbineSlowRunning"}, "Slow wind"},
      {"FastWind", {StateId{"turbineSlowRunning"}}, StateId{"turbineFastRunning"}, "Fast wind"},
      {"NoWind", {StateId{"turbineSlowRunning"}}, StateId{"turbineNotRunning"}, "No wind"},
  };
  return c;
}

inline sgspec::ComponentSpec solar_model() {
  using sgspec::StateId;
  sgspec::ComponentSpec c;
  c.name = "Solar";
  c.states = {StateId{"noEnergyGeneration"}, StateId{"partialEnergyGeneration"},
              StateId{"fullEnergyGeneration"}};
  c.init = StateId{"noEnergyGeneration"};
  c.ops = {
      {"DayAndCloudy", {StateId{"noEnergyGeneration"}}, StateId{"partialEnergyGeneration"},
       "Day, cloudy"},
      {"DayAndSunny", {StateId{"partialEnergyGeneration"}}, StateId{"fullEnergyGeneration"},
       "Day, sunny"},
      {"Night", {StateId{"partialEnergyGeneration"}, StateId{"fullEnergyGeneration"}},
       StateId{"noEnergyGeneration"}, "Night time"},
  };
  return c;
}

inline sgspec::ComponentSpec storage_model() {
  using sgspec::StateId;
  sgspec::ComponentSpec c;
  c.name = "Storage";
  c.states = {StateId{"charging"}, StateId{"discharging"}, StateId{"notInUse"}};
  c.init = StateId{"notInUse"};
  c.ops = {
      {"StoreEnergy", {StateId{"notInUse"}}, StateId{"charging"}, "Store energy"},
      {"ConsumeEnergy", {StateId{"charging"}}, StateId{"discharging"}, "Consume energy"},
      {"BatteryLow", {StateId{"discharging"}}, StateId{"charging"}, "Battery low"},
      {"RemoveStorage", {StateId{"charging"}, StateId{"discharging"}}, StateId{"notInUse"},
       "remove storage"},
  };
  return c;
}

inline sgspec::SpecDocument corpus_document() {
  sgspec::SpecDocument doc;
  doc.source_name = "builtin";
  doc.components = {appliance_model(), turbine_model(), solar_model(), storage_model()};
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Random well-formed documents for round-trip and fuzz properties. Unique
// names are guaranteed by a counter suffix; everything else is random,
// including orderings, so source-order preservation gets exercised.
class DocGen {
 public:
  explicit DocGen(std::uint32_t seed) : rng_(seed) {}

  sgspec::SpecDocument document() {
    sgspec::SpecDocument doc;
    doc.source_name = "<generated>";
    int n = pick(1, 3);
    for (int i = 0; i < n; ++i) doc.components.push_back(component());
    return doc;
  }

  sgspec::ComponentSpec component() {
    sgspec::ComponentSpec c;
    c.name = ident();
    int nstates = pick(1, 8);
    for (int i = 0; i < nstates; ++i) c.states.push_back(sgspec::StateId{ident()});
    c.init = c.states[pick(0, nstates - 1)];
    if (pick(0, 9) < 3) c.label = label_text();
    int nops = pick(0, 8);
    for (int i = 0; i < nops; ++i) c.ops.push_back(op(c));
    return c;
  }

  sgspec::OperationSchema op(const sgspec::ComponentSpec& c) {
    sgspec::OperationSchema op;
    op.name = ident();
    auto pre = c.states;
    std::shuffle(pre.begin(), pre.end(), rng_);
    pre.resize(static_cast<std::size_t>(pick(1, static_cast<int>(pre.size()))));
    op.pre = pre;
    op.post = c.states[pick(0, static_cast<int>(c.states.size()) - 1)];
    if (pick(0, 1) == 0) op.label = label_text();
    return op;
  }

  std::string ident() {
    // Occasionally reuse a grammar keyword: they are contextual, so a state
    // or op may legally be called "init" or "post".
    static const char* keywords[] = {"component", "states", "init", "label", "op", "pre", "post"};
    std::string s;
    if (pick(0, 19) == 0) {
      s = keywords[pick(0, 6)];
    } else {
      int len = pick(1, 6);
      s.push_back(static_cast<char>('a' + pick(0, 25)));
      for (int i = 1; i < len; ++i) {
        const char* pool = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";
        s.push_back(pool[pick(0, 62)]);
      }
    }
    return s + "_" + std::to_string(counter_++);
  }

  std::string label_text() {
    const char* pool = "abc XYZ,019-.#\"\\";
    int len = pick(0, 12);
    std::string s;
    for (int i = 0; i < len; ++i) s.push_back(pool[pick(0, 15)]);
    return s;
  }

  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  std::uint64_t counter_ = 0;
};

}  // namespace testsupport
