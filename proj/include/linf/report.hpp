#ifndef LINF_REPORT_HPP
#define LINF_REPORT_HPP

#include <string>
#include <vector>

namespace linf {

// Outcome of one named identity or property, evaluated over many cases.
struct Check {
	std::string name;
	long cases = 0;
	long failures = 0;
	std::string counterexample;
	// Informational lines that are printed but never affect the verdict.
	std::vector<std::string> notes;

	bool ok() const { return failures == 0; }
	void record(bool pass, const std::string &witness = {})
	{
		++cases;
		if (!pass) {
			if (failures == 0)
				counterexample = witness;
			++failures;
		}
	}
};

struct RunReport {
	std::string command;
	std::vector<std::string> parameters;
	std::vector<Check> checks;

	bool ok() const
	{
		for (const auto &c : checks)
			if (!c.ok())
				return false;
		return true;
	}
	int exit_code() const { return ok() ? 0 : 1; }
};

std::string render(const RunReport &report);

} // namespace linf

#endif
