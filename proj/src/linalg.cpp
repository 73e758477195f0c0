#include "linf/linalg.hpp"

#include <stdexcept>

namespace linf {

Matrix zero_matrix(int rows, int cols)
{
	Matrix m(rows, cols);
	for (int r = 0; r < rows; ++r)
		for (int c = 0; c < cols; ++c)
			m(r, c) = Rational(0);
	return m;
}

Vector zero_vector(int n)
{
	Vector v(n);
	for (int i = 0; i < n; ++i)
		v(i) = Rational(0);
	return v;
}

RowEchelon rref(const Matrix &m)
{
	RowEchelon out{m, {}};
	Matrix &a = out.reduced;
	const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
	int r = 0;
	for (int c = 0; c < cols && r < rows; ++c) {
		int p = r;
		while (p < rows && a(p, c).is_zero())
			++p;
		if (p == rows)
			continue;
		if (p != r)
			a.row(p).swap(a.row(r));
		Rational inv = Rational(1) / a(r, c);
		for (int j = c; j < cols; ++j)
			a(r, j) *= inv;
		for (int q = 0; q < rows; ++q) {
			if (q == r || a(q, c).is_zero())
				continue;
			Rational f = a(q, c);
			for (int j = c; j < cols; ++j)
				if (!a(r, j).is_zero())
					a(q, j) -= f * a(r, j);
		}
		out.pivots.push_back(c);
		++r;
	}
	return out;
}

int rank(const Matrix &m) { return rref(m).rank(); }

Matrix nullspace(const Matrix &m)
{
	RowEchelon e = rref(m);
	const int cols = static_cast<int>(m.cols());
	std::vector<bool> is_pivot(cols, false);
	for (int c : e.pivots)
		is_pivot[c] = true;
	std::vector<int> free;
	for (int c = 0; c < cols; ++c)
		if (!is_pivot[c])
			free.push_back(c);
	Matrix out = zero_matrix(cols, static_cast<int>(free.size()));
	for (size_t k = 0; k < free.size(); ++k) {
		out(free[k], k) = Rational(1);
		for (size_t r = 0; r < e.pivots.size(); ++r)
			out(e.pivots[r], k) = -e.reduced(r, free[k]);
	}
	return out;
}

std::optional<Vector> solve_canonical(const Matrix &a, const Vector &b)
{
	if (a.rows() != b.rows())
		throw std::invalid_argument("solve_canonical: dimension mismatch");
	Matrix aug(a.rows(), a.cols() + 1);
	aug << a, b;
	RowEchelon e = rref(aug);
	const int cols = static_cast<int>(a.cols());
	Vector x = zero_vector(cols);
	for (size_t r = 0; r < e.pivots.size(); ++r) {
		if (e.pivots[r] == cols)
			return std::nullopt;
		x(e.pivots[r]) = e.reduced(r, cols);
	}
	return x;
}

Subspace::Subspace(int dim) : dim_(dim) {}

Vector Subspace::reduce(const Vector &v) const
{
	if (v.rows() != dim_)
		throw std::invalid_argument("Subspace: dimension mismatch");
	Vector w = v;
	for (size_t r = 0; r < rows_.size(); ++r) {
		const Rational &f = w(pivots_[r]);
		if (f.is_zero())
			continue;
		Rational g = f;
		for (int j = 0; j < dim_; ++j)
			if (!rows_[r](j).is_zero())
				w(j) -= g * rows_[r](j);
	}
	return w;
}

bool Subspace::add(const Vector &v)
{
	Vector w = reduce(v);
	int p = 0;
	while (p < dim_ && w(p).is_zero())
		++p;
	if (p == dim_)
		return false;
	Rational inv = Rational(1) / w(p);
	for (int j = 0; j < dim_; ++j)
		w(j) *= inv;
	// Keep the basis fully reduced so pivots stay unit columns.
	for (auto &row : rows_) {
		Rational f = row(p);
		if (f.is_zero())
			continue;
		for (int j = 0; j < dim_; ++j)
			if (!w(j).is_zero())
				row(j) -= f * w(j);
	}
	size_t pos = 0;
	while (pos < pivots_.size() && pivots_[pos] < p)
		++pos;
	rows_.insert(rows_.begin() + pos, w);
	pivots_.insert(pivots_.begin() + pos, p);
	return true;
}

bool Subspace::contains(const Vector &v) const
{
	Vector w = reduce(v);
	for (int j = 0; j < dim_; ++j)
		if (!w(j).is_zero())
			return false;
	return true;
}

bool Subspace::contains(const Subspace &o) const
{
	for (const auto &r : o.rows_)
		if (!contains(r))
			return false;
	return true;
}

} // namespace linf
