#ifndef LINF_FORMS_HPP
#define LINF_FORMS_HPP

#include "linf/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace linf {

// Largest simplex dimension representable by a Form.
constexpr int kMaxDim = 8;

// A monomial t^a dt_S in the reduced coordinates t_1..t_n of Omega_n.
// Bit j-1 of ext marks dt_j; exp[j-1] is the exponent of t_j.
struct Mono {
	uint16_t ext = 0;
	std::array<uint8_t, kMaxDim> exp{};

	int ext_degree() const;
	int poly_degree() const;
	friend bool operator==(const Mono &a, const Mono &b) { return a.ext == b.ext && a.exp == b.exp; }
};

// Canonical order: exterior subset lexicographic (as increasing sequences),
// then exponent vector lexicographic.
struct MonoLess {
	bool operator()(const Mono &a, const Mono &b) const;
};

// Element of Omega_n in normal form: t_0 and dt_0 eliminated, sparse, exact.
class Form {
  public:
	using Terms = std::map<Mono, Rational, MonoLess>;

	Form() = default;
	explicit Form(int n);

	static Form constant(int n, const Rational &c);
	// Barycentric coordinate t_i, 0 <= i <= n (t_0 = 1 - t_1 - ... - t_n).
	static Form t(int n, int i);
	// dt_i, 0 <= i <= n (dt_0 = -dt_1 - ... - dt_n).
	static Form dt(int n, int i);
	static Form monomial(int n, const Mono &m, const Rational &c = Rational(1));

	int dim() const { return n_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	size_t size() const { return terms_.size(); }

	void add_term(const Mono &m, const Rational &c);

	// Component of exterior degree k.
	Form degree_part(int k) const;
	// Sum of the components of even (parity 0) or odd (parity 1) exterior degree.
	Form parity_part(int parity) const;
	std::set<int> ext_degrees() const;
	std::set<int> poly_degrees() const;

	Form &operator+=(const Form &o);
	Form &operator-=(const Form &o);
	Form &operator*=(const Rational &c);
	friend Form operator+(Form a, const Form &b) { return a += b; }
	friend Form operator-(Form a, const Form &b) { return a -= b; }
	friend Form operator-(Form a) { return a *= Rational(-1); }
	friend Form operator*(Form a, const Rational &c) { return a *= c; }
	friend Form operator*(const Rational &c, Form a) { return a *= c; }
	// Wedge product.
	friend Form operator*(const Form &a, const Form &b);
	friend bool operator==(const Form &a, const Form &b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
	friend bool operator!=(const Form &a, const Form &b) { return !(a == b); }

  private:
	int n_ = 0;
	Terms terms_;
};

// Unreduced monomial c * t_0^{a_0} ... t_n^{a_n} dt_{w_1} ... dt_{w_k} with any
// ordering or repetition in the dt-word.
struct RawTerm {
	Rational coeff;
	std::vector<int> t_exp;
	std::vector<int> dts;
};

Form reduce_barycentric(const std::vector<RawTerm> &expr, int n);

Form exterior_d(const Form &f);
Form wedge(const Form &a, const Form &b);

// Monotone map [m] -> [n].
struct SimplicialMap {
	int m = 0;
	int n = 0;
	std::vector<int> values;

	SimplicialMap() = default;
	SimplicialMap(int n_target, std::vector<int> vals);

	static SimplicialMap identity(int n);
	// d_k : [n-1] -> [n], skipping k.
	static SimplicialMap face(int n, int k);
	// s_k : [n+1] -> [n], hitting k twice.
	static SimplicialMap degeneracy(int n, int k);
	// e_p -> e_{seq[p]} for strictly increasing seq.
	static SimplicialMap inclusion(int n, const std::vector<int> &seq);

	// (this o g)(j) = this(g(j)).
	SimplicialMap after(const SimplicialMap &g) const;
	friend bool operator==(const SimplicialMap &a, const SimplicialMap &b)
	{
		return a.m == b.m && a.n == b.n && a.values == b.values;
	}
};

Form pullback(const SimplicialMap &f, const Form &form);

Rational evaluate_vertex(int i, const Form &f);

// Interior product with E_i = sum_j (t_j - delta_ij) d/dt_j.
Form contract_euler(int i, const Form &f);

// All t^a dt_S over Omega_n with |a| <= max_degree.
std::vector<Form> monomial_generators(int n, int max_degree);

std::string render(const Form &f);
Form parse_form(const std::string &text, int n);

} // namespace linf

#endif
