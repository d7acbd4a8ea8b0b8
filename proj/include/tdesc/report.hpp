#pragma once

// JSON reports for every CLI command and their aligned-text renderings.

#include "tdesc/descent.hpp"
#include "tdesc/json_io.hpp"

#include <optional>
#include <string>

namespace tdesc {

Json subgroup_json(const Subgroup& h);

/// Full fan pipeline.  Non-smooth or non-projective fans get a partial
/// report with the omega/target/algebra sections marked unavailable.
Json analysis_report(const ToricData& t);
std::string analysis_text(const Json& report);

Json forms_report(const ToricData& t, const GaloisModel& model);
std::string forms_text(const Json& report);

/// degree in {-1, 0, 1}, or all three when absent; subgroup index into subgroups().
Json cohomology_report(const GLattice& l, std::optional<int> degree, std::optional<std::size_t> subgroup);
Json flasque_report(const GLattice& l);
Json coflasque_report(const GLattice& l);
Json resolution_report(const GLattice& l);
Json invertible_report(const GLattice& l);
/// Global field with cyclic decomposition groups: kernel of the fingerprint map.
Json global_kernel_report(const GLattice& l);

Json omega_report(const ToricData& t, const std::optional<std::vector<IntVector>>& classes);
Json nef_report(const ToricData& t);
Json h0_report(const ToricData& t, const IntVector& divisor);

/// Generic "key: value" rendering for the smaller reports.
std::string plain_text(const Json& report);

}  // namespace tdesc
