#ifndef LINF_DUPONT_HPP
#define LINF_DUPONT_HPP

#include "linf/forms.hpp"
#include "linf/report.hpp"

#include <functional>
#include <vector>

namespace linf {

// Sorts seq in place; returns the sign of the sorting permutation, or 0 if
// seq has a repeated entry.
int sort_with_sign(std::vector<int> &seq);

// k! sum_j (-1)^j t_{i_j} dt_{i_0} ... (omit j) ... dt_{i_k}, alternating in seq.
Form elementary_form(const std::vector<int> &seq, int n);

// Integral over the chain (e_{i_0}, ..., e_{i_k}); zero unless f has an
// exterior-degree-k component.
Rational integrate_chain(const std::vector<int> &seq, const Form &f);

// h^i_n, computed as int_0^1 u^{-1} phi_i(u)^* iota_i du.
Form poincare_h(int i, const Form &f);

Form whitney_P(const Form &f);
// s = sum_k (-1)^k sum_{i_0<..<i_k} omega_{i_0..i_k} h^{i_k} ... h^{i_0}, k < n.
Form dupont_s(const Form &f);

using FormOp = std::function<Form(const Form &)>;

// A candidate contraction, defined on every Omega_n.
struct ContractionBundle {
	FormOp homotopy;
	FormOp projection;
};

ContractionBundle dupont_bundle();

// Checks ds + sd = Id - P on the monomial generators for n <= max_n.
Check check_contraction_identity(const ContractionBundle &c, int max_n, int max_degree);

// s~ = s d s (Id - P). Throws std::invalid_argument if c fails the
// contraction identity on the generators up to (max_n, max_degree).
ContractionBundle gaugeify(const ContractionBundle &c, int max_n = 2, int max_degree = 3);

// Harness used by the CLI and the acceptance runner. Each returns one Check
// per identity; all are exact.
std::vector<Check> verify_contraction(int n, int max_degree);
std::vector<Check> verify_gauge(int n, int max_degree);
Check verify_lambe_stasheff(int n, int max_degree);
std::vector<Check> verify_naturality(int max_dim, int max_degree);

} // namespace linf

#endif
