#ifndef LINF_LINALG_HPP
#define LINF_LINALG_HPP

#include "linf/rational.hpp"

#include <Eigen/Core>
#include <optional>
#include <vector>

namespace linf {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

Matrix zero_matrix(int rows, int cols);
Vector zero_vector(int n);

// Reduced row-echelon form; pivots[r] is the pivot column of row r.
struct RowEchelon {
	Matrix reduced;
	std::vector<int> pivots;

	int rank() const { return static_cast<int>(pivots.size()); }
};

RowEchelon rref(const Matrix &m);
int rank(const Matrix &m);

// Columns form a basis of the kernel, one per free column, with the free
// variable set to 1 and the other free variables to 0.
Matrix nullspace(const Matrix &m);

// The solution of A x = b with all free variables zero, if one exists.
std::optional<Vector> solve_canonical(const Matrix &a, const Vector &b);

// A subspace of K^dim kept as reduced row-echelon rows.
class Subspace {
  public:
	explicit Subspace(int dim = 0);

	int ambient() const { return dim_; }
	int dim() const { return static_cast<int>(rows_.size()); }
	bool is_zero() const { return rows_.empty(); }
	const std::vector<Vector> &basis() const { return rows_; }

	// Returns true if v enlarged the span.
	bool add(const Vector &v);
	bool contains(const Vector &v) const;
	// Residual of v after elimination against the basis.
	Vector reduce(const Vector &v) const;
	bool contains(const Subspace &o) const;

  private:
	int dim_;
	std::vector<Vector> rows_;
	std::vector<int> pivots_;
};

} // namespace linf

#endif
