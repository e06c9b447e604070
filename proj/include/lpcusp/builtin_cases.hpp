#pragma once

#include <string>
#include <vector>

#include "lpcusp/json_io.hpp"

namespace lpcusp {

/// The group Q in SL_2(C)^5, as 10x10 monomial matrices.
GroupPtr example_a_group();
/// Z_G(u) representatives acting on C^10, the normal part {1, -I_2 x I_8}, its sign character and the section.
SectionDatum example_a_section();

struct CaseReport {
  std::string name;
  bool pass = false;
  Json report;
};

/// "A", "B", "cusp-inner", "cusp-unitary", "census".
std::vector<std::string> builtin_case_names();
/// Throws ValidationError for an unknown name.
CaseReport run_builtin_case(const std::string& name);

}  // namespace lpcusp
