#ifndef LINF_IO_HPP
#define LINF_IO_HPP

#include "linf/linfty.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace linf {

// Where a presentation file went wrong. line is 0 when unknown; location is
// a JSON pointer such as "/brackets/2/value".
struct Diagnostic {
	std::string file;
	int line = 0;
	std::string location;
	std::string message;

	std::string str() const;
};

class LoadError : public std::runtime_error {
  public:
	explicit LoadError(Diagnostic d) : std::runtime_error(d.str()), diagnostic(std::move(d)) {}
	Diagnostic diagnostic;
};

struct PresentationFile {
	std::string path;
	Presentation algebra;
	FiltrationReport filtration;
	std::optional<Check> jacobi;
};

// Parses the JSON presentation format:
//   {"name": ..., "generators": [{"symbol", "degree"}],
//    "brackets": [{"args": [symbols], "value": [{"symbol", "coeff": "p/q"}]}],
//    "max_arity": k}
// Every failure is reported as a LoadError.
Presentation parse_presentation(const std::string &text, const std::string &file = "<string>");
PresentationFile load_presentation(const std::string &path, int jacobi_arity = 0);
// Canonical JSON text; parse_presentation inverts it.
std::string write_presentation(const Presentation &g);

// Inverse of Presentation::render, e.g. "1/2*e3 - e1". Throws
// std::invalid_argument on unknown symbols or bad coefficients.
GVector parse_gvector(const Presentation &g, const std::string &text);

// {"algebra": name, "n": n, "components": [{"symbol", "form"}]}
std::string write_simplex(const Presentation &g, const TensorElement &a);
TensorElement parse_simplex(const Presentation &g, const std::string &text);

// Seeded sampler; coefficients are drawn from {0, +-1, +-1/2, +-2}.
class Sampler {
  public:
	explicit Sampler(std::uint64_t seed) : rng_(seed) {}

	Rational coefficient();
	// Random combination of the basis elements of the given degree.
	GVector vector(const Presentation &g, int degree);
	// Random combination of all basis elements.
	GVector any(const Presentation &g);
	int uniform(int bound) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound)); }

  private:
	std::mt19937_64 rng_;
};

} // namespace linf

#endif
