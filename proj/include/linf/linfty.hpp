#ifndef LINF_LINFTY_HPP
#define LINF_LINFTY_HPP

#include "linf/dupont.hpp"
#include "linf/forms.hpp"
#include "linf/linalg.hpp"
#include "linf/report.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace linf {

// Exponent e in l_k = (-1)^e [x_1,...,x_k] relating Lada-Markl brackets to
// the ones used here: e = k(k+1)/2.
int lada_markl_exponent(int k);

// Element of a graded vector space, as a sparse map basis index -> coefficient.
class GVector {
  public:
	using Terms = std::map<int, Rational>;

	GVector() = default;
	static GVector basis(int i, const Rational &c = Rational(1));

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Rational coeff(int i) const;
	void add_term(int i, const Rational &c);

	GVector &operator+=(const GVector &o);
	GVector &operator-=(const GVector &o);
	GVector &operator*=(const Rational &c);
	friend GVector operator+(GVector a, const GVector &b) { return a += b; }
	friend GVector operator-(GVector a, const GVector &b) { return a -= b; }
	friend GVector operator-(GVector a) { return a *= Rational(-1); }
	friend GVector operator*(GVector a, const Rational &c) { return a *= c; }
	friend GVector operator*(const Rational &c, GVector a) { return a *= c; }
	friend bool operator==(const GVector &a, const GVector &b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const GVector &a, const GVector &b) { return !(a == b); }

  private:
	Terms terms_;
};

// Product over inversions (a, b) of perm of (-1)^{deg_a deg_b}, where perm
// lists the original positions in their new order.
int koszul_sign(const std::vector<int> &perm, const std::vector<int> &degrees);

// A finitely presented L-infinity algebra. Brackets are stored on sorted
// index tuples; a tuple may repeat an index only if it has odd degree.
class Presentation {
  public:
	struct Entry {
		std::vector<int> key;
		GVector value;
		// Every distinct ordering of key with its antisymmetry sign relative
		// to key.
		std::vector<std::pair<std::vector<int>, int>> orderings;
	};

	std::string name;

	int dim() const { return static_cast<int>(symbols_.size()); }
	int add_generator(const std::string &symbol, int degree);
	const std::string &symbol(int i) const { return symbols_.at(i); }
	int degree(int i) const { return degrees_.at(i); }
	const std::vector<int> &degrees() const { return degrees_; }
	// -1 if absent.
	int index(const std::string &symbol) const;
	std::vector<int> basis_of_degree(int d) const;
	std::set<int> degree_set() const;

	// Sets [e_args] = value, with args in any order. Throws on a degree
	// mismatch or a repeated even generator.
	void set_bracket(const std::vector<int> &args, const GVector &value);
	const std::map<std::vector<int>, GVector> &table() const { return table_; }
	const std::vector<Entry> &entries(int arity) const;
	// Largest arity with a nonzero bracket, at least 1; or the declared bound.
	int max_arity() const;
	void set_declared_arity(int k) { declared_arity_ = k; }
	int declared_arity() const { return declared_arity_; }

	bool is_abelian() const { return !bracket_arity_above(1); }
	bool is_dg_lie() const { return !bracket_arity_above(2); }
	bool bracket_arity_above(int k) const;

	GVector bracket_basis(const std::vector<int> &args) const;
	GVector bracket(const std::vector<GVector> &args) const;
	GVector delta(const GVector &x) const;
	// Degree set of x's support.
	std::set<int> degrees_of(const GVector &x) const;

	Vector to_vector(const GVector &x) const;
	GVector from_vector(const Vector &v) const;
	std::string render(const GVector &x) const;

	// Cached nilpotency_index(*this).
	int nilpotency() const;

	friend bool operator==(const Presentation &a, const Presentation &b)
	{
		return a.symbols_ == b.symbols_ && a.degrees_ == b.degrees_ && a.table_ == b.table_;
	}

  private:
	std::vector<std::string> symbols_;
	std::vector<int> degrees_;
	std::map<std::string, int> lookup_;
	std::map<std::vector<int>, GVector> table_;
	std::vector<std::vector<Entry>> by_arity_;
	int declared_arity_ = 0;
	mutable int nilpotency_ = -1;

	void rebuild_entries();
};

// Sorts idx by index, returning the antisymmetry sign, or 0 if an even
// generator repeats.
int antisymmetry_sort(std::vector<int> &idx, const std::vector<int> &degrees);

// n-Jacobi residuals on all sorted basis tuples of arity <= n_max.
Check check_jacobi(const Presentation &g, int n_max);

struct FiltrationReport {
	// F[0] is F^1 = g; F[i-1] is F^i. The last entry is zero when nilpotent.
	std::vector<Subspace> F;
	int index = 0;
	bool nilpotent = false;
};

// F^i is the span of iterated brackets (arity >= 2) of total weight >= i.
FiltrationReport lower_central(const Presentation &g, int cap = 64);
// Throws std::domain_error if g is not nilpotent within the cap.
int nilpotency_index(const Presentation &g);

// [alpha^l, rest...].
GVector power_bracket(const Presentation &g, const GVector &alpha, int l, const std::vector<GVector> &rest = {});
GVector curvature(const Presentation &g, const GVector &alpha);
bool is_mc(const Presentation &g, const GVector &alpha);
GVector bianchi_residual(const Presentation &g, const GVector &alpha);
// [x_1,...,x_k]_mu.
GVector twisted_bracket(const Presentation &g, const GVector &mu, const std::vector<GVector> &args);
// Throws std::invalid_argument if mu is not MC.
Presentation twist(const Presentation &g, const GVector &mu);

// Element of g (x) Omega_n, as basis index -> Form.
class TensorElement {
  public:
	using Terms = std::map<int, Form>;

	TensorElement() = default;
	explicit TensorElement(int n) : n_(n) {}
	static TensorElement constant(int n, const GVector &x);
	static TensorElement simple(int n, int basis, const Form &f);
	// omega (x) x in the Omega (x) g order, converted with the Koszul sign.
	static TensorElement form_first(const Presentation &g, const Form &omega, const GVector &x);

	int dim() const { return n_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	void add_term(int basis, const Form &f);
	Form component(int basis) const;

	TensorElement &operator+=(const TensorElement &o);
	TensorElement &operator-=(const TensorElement &o);
	TensorElement &operator*=(const Rational &c);
	friend TensorElement operator+(TensorElement a, const TensorElement &b) { return a += b; }
	friend TensorElement operator-(TensorElement a, const TensorElement &b) { return a -= b; }
	friend TensorElement operator-(TensorElement a) { return a *= Rational(-1); }
	friend TensorElement operator*(TensorElement a, const Rational &c) { return a *= c; }
	friend TensorElement operator*(const Rational &c, TensorElement a) { return a *= c; }
	friend bool operator==(const TensorElement &a, const TensorElement &b)
	{
		return a.n_ == b.n_ && a.terms_ == b.terms_;
	}
	friend bool operator!=(const TensorElement &a, const TensorElement &b) { return !(a == b); }

	// Total degree component.
	TensorElement total_degree_part(const Presentation &g, int d) const;
	std::set<int> total_degrees(const Presentation &g) const;

  private:
	int n_ = 0;
	Terms terms_;
};

// x (x) a -> (-1)^{|x|} x (x) op(a), for odd operators (d, h, s).
TensorElement apply_odd(const Presentation &g, const FormOp &op, const TensorElement &a);
// x (x) a -> x (x) op(a), for even operators (P, pullbacks).
TensorElement apply_even(const FormOp &op, const TensorElement &a, int target_dim);
TensorElement apply_even(const FormOp &op, const TensorElement &a);

TensorElement tensor_d(const Presentation &g, const TensorElement &a);
TensorElement tensor_bracket(const Presentation &g, const std::vector<TensorElement> &args);
// [alpha^l, rest...] on g (x) Omega_n.
TensorElement tensor_power_bracket(const Presentation &g, const TensorElement &alpha, int l,
				   const std::vector<TensorElement> &rest = {});
// sum_{l>=2} 1/l! [alpha^l].
TensorElement tensor_nonlinear(const Presentation &g, const TensorElement &alpha);
TensorElement tensor_curvature(const Presentation &g, const TensorElement &alpha);
bool tensor_is_mc(const Presentation &g, const TensorElement &alpha);

TensorElement pullback(const SimplicialMap &f, const TensorElement &a);
GVector evaluate_vertex(int i, const TensorElement &a);
GVector integrate_chain(const std::vector<int> &seq, const TensorElement &a);

std::string render(const Presentation &g, const TensorElement &a);

} // namespace linf

#endif
