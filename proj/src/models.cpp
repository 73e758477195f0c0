#include "linf/models.hpp"

#include <map>
#include <stdexcept>

namespace linf {

Presentation zero_algebra()
{
	Presentation g;
	g.name = "zero";
	return g;
}

Presentation abelian_with_differential()
{
	Presentation g;
	g.name = "abelian";
	int p = g.add_generator("p", -1), q = g.add_generator("q", 0), r = g.add_generator("r", 0);
	int u = g.add_generator("u", 1);
	g.add_generator("v", 1);
	g.set_bracket({p}, GVector::basis(q));
	g.set_bracket({r}, GVector::basis(u));
	return g;
}

Presentation heisenberg()
{
	Presentation g;
	g.name = "heisenberg";
	int a = g.add_generator("e1", 0), b = g.add_generator("e2", 0), c = g.add_generator("e3", 0);
	g.set_bracket({a, b}, GVector::basis(c));
	return g;
}

Presentation ut4()
{
	Presentation g;
	g.name = "ut4";
	std::map<std::pair<int, int>, int> E;
	for (int i = 1; i <= 4; ++i)
		for (int j = i + 1; j <= 4; ++j)
			E[{i, j}] = g.add_generator("E" + std::to_string(i) + std::to_string(j), 0);
	for (int i = 1; i <= 4; ++i)
		for (int j = i + 1; j <= 4; ++j)
			for (int k = j + 1; k <= 4; ++k)
				g.set_bracket({E[{i, j}], E[{j, k}]}, GVector::basis(E[{i, k}]));
	return g;
}

Presentation dg_lie_01()
{
	Presentation g;
	g.name = "dglie01";
	int a = g.add_generator("a", 0), b = g.add_generator("b", 0), c = g.add_generator("c", 0);
	int u = g.add_generator("u", 1), v = g.add_generator("v", 1), w = g.add_generator("w", 1);
	g.set_bracket({a, b}, GVector::basis(c));
	g.set_bracket({a, v}, GVector::basis(w));
	g.set_bracket({a}, GVector::basis(u));
	g.set_bracket({b}, GVector::basis(v));
	g.set_bracket({c}, GVector::basis(w));
	return g;
}

Presentation ternary_l3()
{
	Presentation g;
	g.name = "l3";
	int a = g.add_generator("a", 0), b = g.add_generator("b", 0), c = g.add_generator("c", 0);
	int u = g.add_generator("u", 1);
	g.set_bracket({a, b, u}, GVector::basis(c));
	return g;
}

namespace {

// Noncommutative polynomials in the letters below, truncated by bracket count.
using Word = std::vector<int>;
using Poly = std::map<Word, Rational>;

enum Letter { X1, X2, X12, Y1, Y2, Z };
const char *const letter_name[] = {"x1", "x2", "x12", "y1", "y2", "z"};
const int letter_degree[] = {0, 0, -1, 1, 1, 0};
const int letter_delta[] = {Y1, Y2, Z, -1, -1, -1};

int word_degree(const Word &w)
{
	int d = 0;
	for (int l : w)
		d += letter_degree[l];
	return d;
}

int bracket_count(const Word &w)
{
	int c = static_cast<int>(w.size()) - 1;
	for (int l : w)
		c += l >= Y1;
	return c;
}

constexpr int max_count = 2;

void add(Poly &p, const Word &w, const Rational &c)
{
	if (c.is_zero() || bracket_count(w) > max_count)
		return;
	Rational &slot = p[w];
	slot += c;
	if (slot.is_zero())
		p.erase(w);
}

// Graded commutator ab - (-1)^{|a||b|} ba of homogeneous polynomials.
Poly commutator(const Poly &a, const Poly &b)
{
	Poly out;
	for (const auto &[u, cu] : a)
		for (const auto &[v, cv] : b) {
			Word uv = u, vu = v;
			uv.insert(uv.end(), v.begin(), v.end());
			vu.insert(vu.end(), u.begin(), u.end());
			add(out, uv, cu * cv);
			add(out, vu, (word_degree(u) * word_degree(v)) % 2 ? cu * cv : -(cu * cv));
		}
	return out;
}

// The derivation extending x -> dx.
Poly differential(const Poly &a)
{
	Poly out;
	for (const auto &[w, c] : a) {
		int sign = 1;
		for (size_t i = 0; i < w.size(); ++i) {
			if (letter_delta[w[i]] >= 0) {
				Word v = w;
				v[i] = letter_delta[w[i]];
				add(out, v, sign > 0 ? c : -c);
			}
			if (letter_degree[w[i]] & 1)
				sign = -sign;
		}
	}
	return out;
}

struct LieElement {
	std::string symbol;
	int degree;
	Poly poly;
};

} // namespace

Presentation free_dg_lie_class3()
{
	// Candidate Lie monomials in order of bracket count; independent ones
	// become the basis.
	std::vector<LieElement> candidates;
	for (int l = X1; l <= Z; ++l)
		candidates.push_back({letter_name[l], letter_degree[l], Poly{{Word{l}, Rational(1)}}});
	for (size_t pass = 0; pass < 2; ++pass) {
		const size_t n = candidates.size();
		for (size_t i = 0; i < n; ++i)
			for (size_t j = 0; j < n; ++j) {
				Poly c = commutator(candidates[i].poly, candidates[j].poly);
				if (!c.empty())
					candidates.push_back({"[" + candidates[i].symbol + "," + candidates[j].symbol + "]",
							      candidates[i].degree + candidates[j].degree, c});
			}
	}

	std::map<Word, int> coord;
	for (const auto &e : candidates)
		for (const auto &[w, c] : e.poly)
			coord.emplace(w, static_cast<int>(coord.size()));
	const int N = static_cast<int>(coord.size());
	auto vec = [&](const Poly &p) {
		Vector v = zero_vector(N);
		for (const auto &[w, c] : p)
			v(coord.at(w)) = c;
		return v;
	};

	Subspace span(N);
	std::vector<LieElement> basis;
	for (const auto &e : candidates) {
		Vector v = vec(e.poly);
		if (span.contains(v))
			continue;
		span.add(v);
		basis.push_back(e);
	}

	Presentation g;
	g.name = "free-dglie-class3";
	for (const auto &e : basis)
		g.add_generator(e.symbol, e.degree);
	const int B = static_cast<int>(basis.size());
	Matrix A = zero_matrix(N, B);
	for (int i = 0; i < B; ++i)
		A.col(i) = vec(basis[i].poly);
	auto express = [&](const Poly &p) {
		auto sol = solve_canonical(A, vec(p));
		if (!sol)
			throw std::logic_error("free_dg_lie_class3: element outside the Lie span");
		return g.from_vector(*sol);
	};
	for (int i = 0; i < B; ++i) {
		GVector d = express(differential(basis[i].poly));
		if (!d.is_zero())
			g.set_bracket({i}, d);
		for (int j = i; j < B; ++j) {
			if (i == j && basis[i].degree % 2 == 0)
				continue;
			GVector c = express(commutator(basis[i].poly, basis[j].poly));
			if (!c.is_zero())
				g.set_bracket({i, j}, c);
		}
	}
	return g;
}

Presentation ternary_free()
{
	Presentation g;
	g.name = "ternary-free";
	const std::vector<std::string> names{"x1", "x2", "y1", "y2"};
	const std::vector<int> deg{0, 0, 1, 1};
	for (int i = 0; i < 4; ++i)
		g.add_generator(names[i], deg[i]);
	g.set_bracket({0}, GVector::basis(2));
	g.set_bracket({1}, GVector::basis(3));

	std::map<std::vector<int>, int> w;
	for (int a = 0; a < 4; ++a)
		for (int b = a; b < 4; ++b)
			for (int c = b; c < 4; ++c) {
				if ((a == b && deg[a] == 0) || (b == c && deg[b] == 0))
					continue;
				std::vector<int> t{a, b, c};
				w[t] = g.add_generator("w_" + names[a] + "_" + names[b] + "_" + names[c],
						       deg[a] + deg[b] + deg[c] - 1);
			}
	for (const auto &[t, i] : w)
		g.set_bracket(t, GVector::basis(i));
	// delta [a1,a2,a3] = -sum_k (-1)^{|a1|+..+|a_{k-1}|} [.., delta a_k, ..]
	for (const auto &[t, i] : w) {
		GVector d;
		int sign = 1;
		for (int k = 0; k < 3; ++k) {
			if (t[k] < 2) {
				std::vector<int> u = t;
				u[k] += 2;
				d -= g.bracket_basis(u) * Rational(sign);
			}
			if (deg[t[k]] & 1)
				sign = -sign;
		}
		if (!d.is_zero())
			g.set_bracket({i}, d);
	}
	return g;
}

} // namespace linf
