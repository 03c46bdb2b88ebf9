#pragma once

#include "brauer/report.hpp"

#include <string>
#include <vector>

namespace bk {

struct SuiteInfo {
    std::string name;
    std::vector<int> criteria; // acceptance criteria covered, 1..10
    std::string summary;
};

// every suite name, "all" last
const std::vector<SuiteInfo>& suite_catalog();

// throws std::invalid_argument for an unknown name
Report run_suite(const std::string& name);

Report presentation_suite();
// every diagram with k+ℓ ≤ max_nodes, two random words joined by a trace
Report completeness_suite(int max_nodes = 8);
Report sigma_suite();
Report functor_relations_suite();
Report enhanced_suite();
Report phi_suite();
Report ep_suite();
Report fft_suite();
Report sft_suite();
Report oriented_suite();

} // namespace bk
