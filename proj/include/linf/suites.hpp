#ifndef LINF_SUITES_HPP
#define LINF_SUITES_HPP

#include "linf/report.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace linf {

class UsageError : public std::invalid_argument {
  public:
	using std::invalid_argument::invalid_argument;
};

struct SuiteOptions {
	std::uint64_t seed = 1;
	int samples = 20;
	// Largest simplex dimension for the form-level suites.
	int n = 3;
	int max_degree = 4;
	std::string fixture_dir;
	// Restricts the monodromy suite to one representation ("heisenberg" or
	// "ut4"); empty means both.
	std::string rep;
};

// Suite ids in acceptance order, one per criterion.
const std::vector<std::string> &suite_ids();
// Throws UsageError on an unknown id.
RunReport run_suite(const std::string &id, const SuiteOptions &opts);

} // namespace linf

#endif
