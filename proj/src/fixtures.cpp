#include <string_view>

#include "epikit/scenario.hpp"

namespace epikit {

namespace {

// Carl reports the board's decision to Bob; Anne watches without hearing.
// Checks cover the updated model's first- and second-order knowledge facts.
const char kExample1[] = R"json({
  "name": "example1",
  "agents": ["a", "b"],
  "props": ["p"],
  "actions": { "sp": "p", "snp": "!p" },
  "epistemic": {
    "M0": {
      "worlds": ["w0", "w1"],
      "val": { "p": ["w0"] },
      "edges": [["a", "w0", "w1"], ["b", "w0", "w1"]]
    }
  },
  "action_models": {
    "A0": { "actions": ["sp", "snp"], "edges": [["a", "sp", "snp"]] }
  },
  "derived": {
    "M0A0": { "product": ["M0", "A0"] }
  },
  "checks": [
    { "model": "M0A0", "formula": "K_b p | K_b !p", "expect": true },
    { "model": "M0A0", "formula": "!(K_a p | K_a !p)", "expect": true },
    { "model": "M0A0", "formula": "K_a (K_b p | K_b !p)", "expect": true },
    { "model": "M0A0", "formula": "K_b !(K_a p | K_a !p)", "expect": true }
  ]
})json";

// Carl speaks French; q is "Bob speaks French". The third action tu covers
// the announcement nobody understands.
const char kExample3[] = R"json({
  "name": "example3",
  "agents": ["a", "b"],
  "props": ["p", "q"],
  "actions": { "sp": "p & q", "snp": "!p & q", "s": "!q" },
  "epistemic": {
    "M1": {
      "worlds": ["w0", "w1", "w2", "w3"],
      "val": { "p": ["w0", "w2"], "q": ["w0", "w1"] },
      "edges": [
        ["a", "w0", "w1"], ["a", "w1", "w2"], ["a", "w2", "w3"],
        ["b", "w0", "w1"], ["b", "w2", "w3"]
      ]
    }
  },
  "action_models": {
    "A1": { "actions": ["sp", "snp", "s"], "edges": [["a", "sp", "snp"], ["a", "snp", "s"]] }
  },
  "derived": {
    "M1A1": { "product": ["M1", "A1"] }
  },
  "checks": [
    { "model": "M1A1", "world": "(w0,sp)",
      "formula": "Khat_a (K_b p | K_b !p) & Khat_a (!K_b p & !K_b !p)", "expect": true },
    { "model": "M1A1", "world": "(w0,sp)", "formula": "K_b p | K_b !p", "expect": true },
    { "model": "M1A1", "world": "(w1,snp)", "formula": "K_b p | K_b !p", "expect": true },
    { "model": "M1A1", "world": "(w2,s)", "formula": "K_b p | K_b !p", "expect": false },
    { "model": "M1A1", "world": "(w3,s)", "formula": "K_b p | K_b !p", "expect": false }
  ]
})json";

// The adjusted action model for when Anne speaks French: four actions keyed
// on both the announcement's content and whether Bob understands it.
const char kExampleAdjusted[] = R"json({
  "name": "example_adjusted",
  "agents": ["a", "b"],
  "props": ["p", "q"],
  "actions": { "cpq": "p & q", "cnpq": "!p & q", "cpnq": "p & !q", "cnpnq": "!p & !q" },
  "epistemic": {
    "M1": {
      "worlds": ["w0", "w1", "w2", "w3"],
      "val": { "p": ["w0", "w2"], "q": ["w0", "w1"] },
      "edges": [
        ["a", "w0", "w1"], ["a", "w1", "w2"], ["a", "w2", "w3"],
        ["b", "w0", "w1"], ["b", "w2", "w3"]
      ]
    }
  },
  "action_models": {
    "A2": {
      "actions": ["cpq", "cnpq", "cpnq", "cnpnq"],
      "edges": [["a", "cpq", "cpnq"], ["a", "cnpq", "cnpnq"], ["b", "cpnq", "cnpnq"]]
    }
  },
  "derived": {
    "M1A2": { "product": ["M1", "A2"] }
  },
  "checks": [
    { "model": "M1A2", "formula": "K_a p | K_a !p", "expect": true },
    { "model": "M1A2", "formula": "!K_a q & !K_a !q", "expect": true },
    { "model": "M1A2", "world": "(w0,cpq)", "formula": "K_b p", "expect": true },
    { "model": "M1A2", "world": "(w2,cpnq)", "formula": "K_b p | K_b !p", "expect": false },
    { "model": "M1A2", "world": "(w0,cpq)",
      "formula": "Khat_a (K_b p | K_b !p) & Khat_a !(K_b p | K_b !p)", "expect": true }
  ]
})json";

// Dynamic models over the plain two-action signature. D1 encodes "Bob tells
// the actions apart iff he speaks French"; D1prime additionally lets Anne
// tell them apart. The t*/c* action models replay the action-logic versions
// so the updated models can be compared by bisimulation. DA/DB witness that
// dynamic models with identical epistemic parts can disagree on [sp] K_a p.
const char kExampleDynamic[] = R"json({
  "name": "example_dynamic",
  "agents": ["a", "b"],
  "props": ["p", "q"],
  "actions": {
    "sp": "p", "snp": "!p",
    "tp": "p & q", "tnp": "!p & q", "tu": "!q",
    "cpq": "p & q", "cnpq": "!p & q", "cpnq": "p & !q", "cnpnq": "!p & !q"
  },
  "epistemic": {
    "M0": {
      "worlds": ["w0", "w1"],
      "val": { "p": ["w0"] },
      "edges": [["a", "w0", "w1"], ["b", "w0", "w1"]]
    },
    "M1": {
      "worlds": ["w0", "w1", "w2", "w3"],
      "val": { "p": ["w0", "w2"], "q": ["w0", "w1"] },
      "edges": [
        ["a", "w0", "w1"], ["a", "w1", "w2"], ["a", "w2", "w3"],
        ["b", "w0", "w1"], ["b", "w2", "w3"]
      ]
    }
  },
  "action_models": {
    "A1": { "actions": ["tp", "tnp", "tu"], "edges": [["a", "tp", "tnp"], ["a", "tnp", "tu"]] },
    "A2": {
      "actions": ["cpq", "cnpq", "cpnq", "cnpnq"],
      "edges": [["a", "cpq", "cpnq"], ["a", "cnpq", "cnpnq"], ["b", "cpnq", "cnpnq"]]
    }
  },
  "dynamic": {
    "D1": {
      "base": "M1", "actions": ["sp", "snp"],
      "f": [
        { "agent": "a", "partition": [["sp", "snp"]] },
        { "agent": "b", "guard": "q", "partition": [["sp"], ["snp"]] },
        { "agent": "b", "guard": "!q", "partition": [["sp", "snp"]] }
      ]
    },
    "D1prime": {
      "base": "M1", "actions": ["sp", "snp"],
      "f": [
        { "agent": "a", "partition": [["sp"], ["snp"]] },
        { "agent": "b", "guard": "q", "partition": [["sp"], ["snp"]] },
        { "agent": "b", "guard": "!q", "partition": [["sp", "snp"]] }
      ]
    },
    "DA": {
      "base": "M0", "actions": ["sp", "snp"],
      "f": [
        { "agent": "a", "partition": [["sp"], ["snp"]] },
        { "agent": "b", "partition": [["sp"], ["snp"]] }
      ]
    },
    "DB": {
      "base": "M0", "actions": ["sp", "snp"],
      "f": [
        { "agent": "a", "partition": [["sp", "snp"]] },
        { "agent": "b", "partition": [["sp"], ["snp"]] }
      ]
    }
  },
  "derived": {
    "M1A1": { "product": ["M1", "A1"] },
    "M1A2": { "product": ["M1", "A2"] },
    "D1plus": { "update": "D1" },
    "E1": { "epistemic_part": "D1plus" },
    "D1primeplus": { "update": "D1prime" },
    "E1prime": { "epistemic_part": "D1primeplus" },
    "EA": { "epistemic_part": "DA" },
    "EB": { "epistemic_part": "DB" }
  },
  "checks": [
    { "model": "D1", "expect": "report" },
    { "model": "D1prime", "expect": "report" },
    { "bisim": ["E1", "(w0,sp)", "M1A1", "(w0,tp)"], "expect": true },
    { "bisim": ["E1", "(w1,snp)", "M1A1", "(w1,tnp)"], "expect": true },
    { "bisim": ["E1", "(w2,sp)", "M1A1", "(w2,tu)"], "expect": true },
    { "bisim": ["E1", "(w3,snp)", "M1A1", "(w3,tu)"], "expect": true },
    { "bisim": ["E1prime", "(w0,sp)", "M1A2", "(w0,cpq)"], "expect": true },
    { "bisim": ["E1prime", "(w1,snp)", "M1A2", "(w1,cnpq)"], "expect": true },
    { "bisim": ["E1prime", "(w2,sp)", "M1A2", "(w2,cpnq)"], "expect": true },
    { "bisim": ["E1prime", "(w3,snp)", "M1A2", "(w3,cnpnq)"], "expect": true },
    { "model": "D1", "world": "w0", "formula": "xi(a,sp,snp)", "expect": true },
    { "model": "D1", "world": "w0", "formula": "xi(b,sp,snp)", "expect": false },
    { "model": "D1", "world": "w2", "formula": "xi(b,sp,snp)", "expect": true },
    { "model": "D1", "formula": "xi(b,sp,snp) -> K_b xi(b,sp,snp)", "expect": true },
    { "model": "D1", "world": "w0", "formula": "[sp] (K_b p | K_b !p)", "expect": true },
    { "model": "D1", "world": "w2", "formula": "[sp] (K_b p | K_b !p)", "expect": false },
    { "bisim": ["EA", "w0", "EB", "w0"], "expect": true },
    { "model": "DA", "world": "w0", "formula": "[sp] K_a p", "expect": true },
    { "model": "DB", "world": "w0", "formula": "[sp] K_a p", "expect": false }
  ]
})json";

// Eight worlds for every combination of p, q ("Bob speaks French") and
// r ("Anne speaks French"); each agent's ability to tell Carl's two
// announcements apart is keyed on the proposition they are privy to.
const char kExample8World[] = R"json({
  "name": "example_8world",
  "agents": ["a", "b"],
  "props": ["p", "q", "r"],
  "actions": { "sp": "p", "snp": "!p" },
  "epistemic": {
    "M2": {
      "worlds": ["w0", "w1", "w2", "w3", "w4", "w5", "w6", "w7"],
      "val": {
        "p": ["w0", "w2", "w4", "w6"],
        "q": ["w0", "w1", "w4", "w5"],
        "r": ["w0", "w1", "w2", "w3"]
      },
      "edges": [
        ["a", "w0", "w1"], ["a", "w1", "w2"], ["a", "w2", "w3"],
        ["a", "w4", "w5"], ["a", "w5", "w6"], ["a", "w6", "w7"],
        ["b", "w0", "w1"], ["b", "w1", "w4"], ["b", "w4", "w5"],
        ["b", "w2", "w3"], ["b", "w3", "w6"], ["b", "w6", "w7"]
      ]
    }
  },
  "dynamic": {
    "D2": {
      "base": "M2", "actions": ["sp", "snp"],
      "f": [
        { "agent": "a", "guard": "r", "partition": [["sp"], ["snp"]] },
        { "agent": "a", "guard": "!r", "partition": [["sp", "snp"]] },
        { "agent": "b", "guard": "q", "partition": [["sp"], ["snp"]] },
        { "agent": "b", "guard": "!q", "partition": [["sp", "snp"]] }
      ]
    }
  },
  "derived": {
    "D2plus": { "update": "D2" },
    "E2": { "epistemic_part": "D2plus" }
  },
  "checks": [
    { "model": "D2", "expect": "report" },
    { "model": "D2", "world": "w0", "formula": "[sp] K_a p", "expect": true },
    { "model": "D2", "world": "w4", "formula": "[sp] K_a p", "expect": false },
    { "model": "D2", "world": "w0", "formula": "[sp] (K_b p | K_b !p)", "expect": true },
    { "model": "D2", "world": "w2", "formula": "[sp] K_b p", "expect": false },
    { "model": "D2", "world": "w0",
      "formula": "[sp] (Khat_b K_a p & Khat_b !(K_a p | K_a !p))", "expect": true }
  ]
})json";

}  // namespace

const std::vector<std::pair<std::string, std::string>>& builtin_fixtures() {
  static const std::vector<std::pair<std::string, std::string>> fixtures = {
      {"example1", kExample1},
      {"example3", kExample3},
      {"example_adjusted", kExampleAdjusted},
      {"example_dynamic", kExampleDynamic},
      {"example_8world", kExample8World},
  };
  return fixtures;
}

const std::string* find_builtin_fixture(std::string_view name) {
  for (const auto& [fixture_name, text] : builtin_fixtures()) {
    if (fixture_name == name) return &text;
  }
  return nullptr;
}

}  // namespace epikit
