#include "linf/mc_gamma.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace linf {

TensorElement face(const TensorElement &a, int k)
{
	if (k < 0 || k > a.dim() || a.dim() == 0)
		throw std::out_of_range("face index out of range");
	return pullback(SimplicialMap::face(a.dim(), k), a);
}

TensorElement degenerate(const TensorElement &a, int k)
{
	if (k < 0 || k > a.dim())
		throw std::out_of_range("degeneracy index out of range");
	return pullback(SimplicialMap::degeneracy(a.dim(), k), a);
}

TensorElement tensor_h(const Presentation &g, int i, const TensorElement &a)
{
	return apply_odd(g, [i](const Form &f) { return poincare_h(i, f); }, a);
}

TensorElement tensor_P(const TensorElement &a) { return apply_even(whitney_P, a); }

TensorElement tensor_s(const Presentation &g, const TensorElement &a) { return apply_odd(g, dupont_s, a); }

TensorElement tensor_R(const Presentation &g, int i, const TensorElement &a)
{
	return tensor_d(g, tensor_h(g, i, a));
}

namespace {

void check_solver_input(const Presentation &g, int n, int i, const GVector &mu, const TensorElement &nu)
{
	if (n < 0 || n > kMaxDim)
		throw std::out_of_range("simplex dimension out of range");
	if (i < 0 || i > n)
		throw std::out_of_range("base vertex out of range");
	if (!nu.is_zero() && nu.dim() != n)
		throw std::invalid_argument("gauge parameter has the wrong simplex dimension");
	if (!is_mc(g, mu))
		throw std::invalid_argument("base point is not Maurer-Cartan");
}

template <class Op>
SolveResult iterate(const Presentation &g, int n, const GVector &mu, const TensorElement &nu, Op op)
{
	const int cap = g.nilpotency() + 2;
	TensorElement alpha0 = TensorElement::constant(n, mu) + nu;
	TensorElement alpha = alpha0;
	for (int k = 1; k <= cap; ++k) {
		TensorElement next = alpha0 - op(tensor_nonlinear(g, alpha));
		if (next == alpha)
			return {alpha, k};
		alpha = std::move(next);
	}
	throw std::logic_error("Maurer-Cartan iteration did not stabilize within the nilpotency bound");
}

} // namespace

SolveResult solve_mc(const Presentation &g, int n, int i, const GVector &mu, const TensorElement &nu)
{
	check_solver_input(g, n, i, mu, nu);
	return iterate(g, n, mu, nu, [&](const TensorElement &x) { return tensor_h(g, i, x); });
}

SolveResult solve_gauge_fixed(const Presentation &g, int n, int i, const GVector &mu, const TensorElement &nu)
{
	check_solver_input(g, n, i, mu, nu);
	return iterate(g, n, mu, nu, [&](const TensorElement &x) {
		return tensor_P(tensor_h(g, i, x)) + tensor_s(g, x);
	});
}

bool satisfies_gauge(const Presentation &g, const TensorElement &a) { return tensor_s(g, a).is_zero(); }

bool is_gamma_simplex(const Presentation &g, const TensorElement &a)
{
	return tensor_is_mc(g, a) && satisfies_gauge(g, a);
}

bool is_thin(const TensorElement &a)
{
	std::vector<int> top(a.dim() + 1);
	for (int v = 0; v <= a.dim(); ++v)
		top[v] = v;
	return integrate_chain(top, a).is_zero();
}

bool horn_compatible(const Horn &h)
{
	if (h.n < 1 || h.missing < 0 || h.missing > h.n || static_cast<int>(h.faces.size()) != h.n + 1)
		return false;
	for (int j = 0; j <= h.n; ++j)
		if (j != h.missing && !h.faces[j].is_zero() && h.faces[j].dim() != h.n - 1)
			return false;
	if (h.n < 2)
		return true;
	for (int j = 0; j <= h.n; ++j)
		for (int k = j + 1; k <= h.n; ++k) {
			if (j == h.missing || k == h.missing)
				continue;
			if (face(TensorElement(h.faces[k]), j) != face(TensorElement(h.faces[j]), k - 1))
				return false;
		}
	return true;
}

Horn horn_of(const TensorElement &simplex, int n, int missing)
{
	Horn h{n, missing, std::vector<TensorElement>(n + 1, TensorElement(n - 1))};
	for (int j = 0; j <= n; ++j)
		if (j != missing)
			h.faces[j] = face(simplex, j);
	return h;
}

namespace {

// A face j != i of the horn containing every vertex of seq.
int face_containing(const Horn &h, const std::vector<int> &seq)
{
	for (int j = 0; j <= h.n; ++j) {
		if (j == h.missing)
			continue;
		if (std::find(seq.begin(), seq.end(), j) == seq.end())
			return j;
	}
	throw std::logic_error("no horn face contains the chain");
}

std::vector<int> face_coordinates(const std::vector<int> &seq, int j)
{
	std::vector<int> out;
	for (int v : seq)
		out.push_back(v < j ? v : v - 1);
	return out;
}

GVector horn_integral(const Horn &h, const std::vector<int> &seq)
{
	int j = face_containing(h, seq);
	if (h.n == 1)
		return evaluate_vertex(0, h.faces[j]);
	return integrate_chain(face_coordinates(seq, j), h.faces[j]);
}

} // namespace

GVector horn_vertex(const Horn &h, int v) { return horn_integral(h, {v}); }

TensorElement horn_whitney_data(const Presentation &g, const Horn &h, const GVector &top)
{
	const int n = h.n, i = h.missing;
	TensorElement beta(n);
	std::vector<int> others;
	for (int v = 0; v <= n; ++v)
		if (v != i)
			others.push_back(v);
	// Nonempty subsets J of the other vertices with |J| <= n - 1.
	const int m = static_cast<int>(others.size());
	for (unsigned mask = 1; mask < (1u << m); ++mask) {
		std::vector<int> J;
		for (int p = 0; p < m; ++p)
			if (mask >> p & 1)
				J.push_back(others[p]);
		if (static_cast<int>(J.size()) > n - 1)
			continue;
		std::vector<int> seq{i};
		seq.insert(seq.end(), J.begin(), J.end());
		GVector x = horn_integral(h, seq);
		if (!x.is_zero())
			beta += TensorElement::form_first(g, elementary_form(J, n), x);
	}
	if (!top.is_zero()) {
		Form w = elementary_form(others, n);
		beta += TensorElement::form_first(g, (i & 1) ? -w : w, top);
	}
	return tensor_d(g, beta);
}

TensorElement fill_horn_gamma(const Presentation &g, const Horn &h)
{
	if (!horn_compatible(h))
		throw std::invalid_argument("fill_horn_gamma: incompatible horn");
	GVector mu = horn_vertex(h, h.missing);
	return solve_gauge_fixed(g, h.n, h.missing, mu, horn_whitney_data(g, h)).value;
}

TensorElement horn_extension(const Horn &h)
{
	const int n = h.n, i = h.missing;
	TensorElement w(n);
	auto deg = [](const TensorElement &x, int r) { return degenerate(x, r); };
	for (int r = 0; r < i; ++r)
		w += deg(h.faces[r] - face(w, r), r);
	for (int r = n; r > i; --r)
		w += deg(h.faces[r] - face(w, r), r - 1);
	return w;
}

TensorElement fill_horn_mc(const Presentation &g, const Horn &h)
{
	if (!horn_compatible(h))
		throw std::invalid_argument("fill_horn_mc: incompatible horn");
	TensorElement rho = horn_extension(h);
	GVector mu = evaluate_vertex(h.missing, rho);
	return solve_mc(g, h.n, h.missing, mu, tensor_R(g, h.missing, rho)).value;
}

GVector Morphism::apply(const GVector &x) const
{
	return target->from_vector(matrix * source->to_vector(x));
}

TensorElement Morphism::apply(const TensorElement &a) const
{
	TensorElement out(a.dim());
	for (const auto &[b, f] : a.terms())
		for (int r = 0; r < matrix.rows(); ++r)
			if (!matrix(r, b).is_zero())
				out.add_term(r, f * matrix(r, b));
	return out;
}

bool Morphism::is_surjective() const { return rank(matrix) == target->dim(); }

bool Morphism::is_strict(int max_arity) const
{
	for (int c = 0; c < matrix.cols(); ++c)
		for (int r = 0; r < matrix.rows(); ++r)
			if (!matrix(r, c).is_zero() && target->degree(r) != source->degree(c))
				return false;
	std::vector<int> tuple;
	auto rec = [&](auto &&self, int start) -> bool {
		if (!tuple.empty()) {
			std::vector<GVector> a, b;
			for (int t : tuple) {
				a.push_back(GVector::basis(t));
				b.push_back(apply(GVector::basis(t)));
			}
			if (apply(source->bracket(a)) != target->bracket(b))
				return false;
		}
		if (static_cast<int>(tuple.size()) == max_arity)
			return true;
		for (int v = start; v < source->dim(); ++v) {
			tuple.push_back(v);
			bool ok = self(self, v);
			tuple.pop_back();
			if (!ok)
				return false;
		}
		return true;
	};
	return rec(rec, 0);
}

GVector canonical_lift(const Morphism &f, const GVector &y)
{
	auto x = solve_canonical(f.matrix, f.target->to_vector(y));
	if (!x)
		throw std::invalid_argument("canonical_lift: value not in the image");
	return f.source->from_vector(*x);
}

TensorElement fill_horn_relative(const Morphism &f, const Horn &h, const TensorElement &target)
{
	if (!f.is_surjective())
		throw std::invalid_argument("fill_horn_relative: morphism is not surjective");
	if (!horn_compatible(h))
		throw std::invalid_argument("fill_horn_relative: incompatible horn");
	for (int j = 0; j <= h.n; ++j)
		if (j != h.missing && f.apply(h.faces[j]) != face(target, j))
			throw std::invalid_argument("fill_horn_relative: horn does not lie over the target");
	std::vector<int> top(h.n + 1);
	for (int v = 0; v <= h.n; ++v)
		top[v] = v;
	GVector x = canonical_lift(f, integrate_chain(top, target));
	GVector mu = horn_vertex(h, h.missing);
	return solve_gauge_fixed(*f.source, h.n, h.missing, mu, horn_whitney_data(*f.source, h, x)).value;
}

namespace {

struct RowKey {
	int block;
	int basis;
	Mono mono;
	bool operator<(const RowKey &o) const
	{
		if (block != o.block)
			return block < o.block;
		if (basis != o.basis)
			return basis < o.basis;
		return MonoLess{}(mono, o.mono);
	}
};

} // namespace

DoldKanReport dold_kan_compare(const Presentation &g, int n, int max_degree)
{
	if (!g.is_abelian())
		throw std::invalid_argument("dold_kan_compare: algebra is not abelian");
	DoldKanReport rep;
	rep.n = n;
	// Columns: x_b (x) monomial of total degree 1.
	std::vector<TensorElement> cols;
	auto monos = monomial_generators(n, max_degree);
	for (int b = 0; b < g.dim(); ++b)
		for (const auto &f : monos)
			if (g.degree(b) + *f.ext_degrees().begin() == 1)
				cols.push_back(TensorElement::simple(n, b, f));
	std::map<RowKey, int> rows;
	std::vector<std::vector<std::pair<int, Rational>>> entries(cols.size());
	for (size_t c = 0; c < cols.size(); ++c) {
		TensorElement outs[2] = {tensor_d(g, cols[c]), tensor_s(g, cols[c])};
		for (int block = 0; block < 2; ++block)
			for (const auto &[b, f] : outs[block].terms())
				for (const auto &[m, v] : f.terms()) {
					auto [it, fresh] = rows.try_emplace(RowKey{block, b, m}, static_cast<int>(rows.size()));
					entries[c].emplace_back(it->second, v);
				}
	}
	Matrix A = zero_matrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
	for (size_t c = 0; c < cols.size(); ++c)
		for (const auto &[r, v] : entries[c])
			A(r, c) += v;
	Matrix kernel = nullspace(A);
	std::vector<TensorElement> gamma;
	for (int k = 0; k < kernel.cols(); ++k) {
		TensorElement a(n);
		for (size_t c = 0; c < cols.size(); ++c)
			if (!kernel(c, k).is_zero())
				a += cols[c] * kernel(c, k);
		gamma.push_back(a);
	}
	rep.gamma_dim = static_cast<int>(gamma.size());
	rep.whitney = true;
	for (const auto &a : gamma)
		if (tensor_P(a) != a)
			rep.whitney = false;

	// Cochain side: c_L in g^{2-|L|} for each nonempty face L of Delta^n.
	std::vector<std::vector<int>> faces;
	std::map<std::pair<unsigned, int>, int> var;
	for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
		std::vector<int> L;
		for (int v = 0; v <= n; ++v)
			if (mask >> v & 1)
				L.push_back(v);
		faces.push_back(L);
		for (int b : g.basis_of_degree(2 - static_cast<int>(L.size())))
			var.try_emplace({mask, b}, static_cast<int>(var.size()));
	}
	std::vector<std::vector<std::pair<int, Rational>>> eqs;
	for (const auto &L : faces) {
		const int len = static_cast<int>(L.size());
		unsigned mask = 0;
		for (int v : L)
			mask |= 1u << v;
		for (int c : g.basis_of_degree(3 - len)) {
			std::vector<std::pair<int, Rational>> eq;
			for (int b : g.basis_of_degree(2 - len)) {
				Rational coef = g.delta(GVector::basis(b)).coeff(c);
				if (!coef.is_zero())
					eq.emplace_back(var.at({mask, b}), coef);
			}
			if (len >= 2)
				for (int p = 0; p < len; ++p) {
					int sign = ((3 - len) + p) & 1 ? -1 : 1;
					eq.emplace_back(var.at({mask & ~(1u << L[p]), c}), Rational(sign));
				}
			if (!eq.empty())
				eqs.push_back(eq);
		}
	}
	const int nv = static_cast<int>(var.size());
	Matrix E = zero_matrix(static_cast<int>(eqs.size()), nv);
	for (size_t r = 0; r < eqs.size(); ++r)
		for (const auto &[v, c] : eqs[r])
			E(r, v) += c;
	rep.cocycle_dim = nv - rank(E);

	Matrix images = zero_matrix(nv, static_cast<int>(gamma.size()));
	bool in_cocycles = true;
	for (size_t k = 0; k < gamma.size(); ++k) {
		std::vector<Rational> flat(nv, Rational(0));
		for (const auto &L : faces) {
			unsigned mask = 0;
			for (int v : L)
				mask |= 1u << v;
			GVector x = integrate_chain(L, gamma[k]);
			for (const auto &[b, c] : x.terms()) {
				auto it = var.find({mask, b});
				if (it == var.end()) {
					in_cocycles = false;
					continue;
				}
				flat[it->second] = c;
				images(it->second, k) = c;
			}
		}
		rep.correspondence.push_back(flat);
	}
	if (nv > 0 && !eqs.empty() && !gamma.empty()) {
		Matrix r = E * images;
		for (int a = 0; a < r.rows(); ++a)
			for (int b = 0; b < r.cols(); ++b)
				if (!r(a, b).is_zero())
					in_cocycles = false;
	}
	rep.bijective = in_cocycles && rep.gamma_dim == rep.cocycle_dim && rank(images) == rep.gamma_dim;
	return rep;
}

} // namespace linf
