#pragma once

#include <string>
#include <vector>

#include "noether/form.hpp"

namespace noether {

struct AxiomEntry {
  std::string name;  // P1, P2, P3, BL, G, I, A, F1, F2, Ax2, Ax3, Ax4, Ax5, Ax6
  bool passed = true;
  std::string witness;
  std::string note;
};

struct AxiomReport {
  std::string form;
  std::vector<AxiomEntry> entries;

  bool passed() const;
  const AxiomEntry* find(const std::string& name) const;
  std::string to_text() const;
};

struct AxiomOptions {
  bool include_axiom6 = false;
  /// Composable triples checked for associativity before sampling kicks in.
  std::size_t associativity_budget = 60000;
};

AxiomReport axiom_suite(const Form& form, const AxiomOptions& options = {});

inline AxiomReport axiom_suite(const Form& form, bool include_axiom6) {
  AxiomOptions o;
  o.include_axiom6 = include_axiom6;
  return axiom_suite(form, o);
}

}  // namespace noether
