#include "linf/bch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace linf {

int RootedTree::size() const
{
	int s = 1;
	for (const auto &c : children)
		s += c.size();
	return s;
}

std::string RootedTree::str() const
{
	std::string out = "[x";
	for (const auto &c : children)
		out += "," + c.str();
	return out + "]";
}

bool operator<(const RootedTree &a, const RootedTree &b)
{
	int sa = a.size(), sb = b.size();
	if (sa != sb)
		return sa < sb;
	return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(),
					    b.children.end());
}

bool operator==(const RootedTree &a, const RootedTree &b) { return a.children == b.children; }

namespace {

void canonicalize(RootedTree &t)
{
	for (auto &c : t.children)
		canonicalize(c);
	std::sort(t.children.begin(), t.children.end());
}

// Every way of attaching one new leaf to t.
void grow(const RootedTree &t, std::vector<RootedTree> &out)
{
	RootedTree leafed = t;
	leafed.children.push_back(RootedTree{});
	out.push_back(leafed);
	for (size_t c = 0; c < t.children.size(); ++c) {
		std::vector<RootedTree> sub;
		grow(t.children[c], sub);
		for (auto &s : sub) {
			RootedTree u = t;
			u.children[c] = s;
			out.push_back(u);
		}
	}
}

} // namespace

long linear_extensions(const RootedTree &t)
{
	Rational v = factorial(t.size() - 1);
	for (const auto &c : t.children)
		v = v * Rational(linear_extensions(c)) / factorial(c.size());
	return v.num().get_si();
}

long automorphisms(const RootedTree &t)
{
	long a = 1;
	for (size_t i = 0; i < t.children.size();) {
		size_t j = i;
		while (j < t.children.size() && t.children[j] == t.children[i])
			++j;
		a *= factorial(static_cast<int>(j - i)).num().get_si();
		for (size_t p = i; p < j; ++p)
			a *= automorphisms(t.children[p]);
		i = j;
	}
	return a;
}

std::vector<TreeTerm> enumerate_trees(int k)
{
	if (k < 1)
		throw std::invalid_argument("enumerate_trees: k < 1");
	std::set<RootedTree> level{RootedTree{}};
	for (int s = 2; s <= k; ++s) {
		std::set<RootedTree> next;
		for (const auto &t : level) {
			std::vector<RootedTree> grown;
			grow(t, grown);
			for (auto &u : grown) {
				canonicalize(u);
				next.insert(u);
			}
		}
		level = std::move(next);
	}
	std::vector<TreeTerm> out;
	for (const auto &t : level)
		out.push_back({t, linear_extensions(t) / automorphisms(t)});
	return out;
}

GVector evaluate_tree(const Presentation &g, const GVector &mu, const GVector &x, const RootedTree &t)
{
	std::vector<GVector> args{x};
	for (const auto &c : t.children) {
		GVector v = evaluate_tree(g, mu, x, c);
		if (v.is_zero())
			return {};
		args.push_back(v);
	}
	return twisted_bracket(g, mu, args);
}

GVector tree_exponential(const Presentation &g, const GVector &mu, const GVector &x, int k)
{
	GVector out;
	for (const auto &term : enumerate_trees(k))
		out += evaluate_tree(g, mu, x, term.tree) * Rational(term.coefficient);
	return out;
}

GVector tree_recursion(const Presentation &g, const GVector &mu, const GVector &x, int k)
{
	std::vector<GVector> eps(k + 1);
	for (int j = 1; j <= k; ++j)
		eps[j] = tree_exponential(g, mu, x, j);
	GVector out;
	for (int n = 0; n <= k; ++n) {
		// Compositions k_1 + ... + k_n = k with k_i >= 1.
		std::vector<int> parts;
		auto rec = [&](auto &&self, int remaining) -> void {
			if (static_cast<int>(parts.size()) == n) {
				if (remaining != 0)
					return;
				Rational c = factorial(k) / factorial(n);
				std::vector<GVector> args{x};
				for (int p : parts) {
					c /= factorial(p);
					args.push_back(eps[p]);
				}
				out += twisted_bracket(g, mu, args) * c;
				return;
			}
			for (int p = 1; p <= remaining; ++p) {
				parts.push_back(p);
				self(self, remaining - p);
				parts.pop_back();
			}
		};
		rec(rec, k);
	}
	return out;
}

namespace {

int tree_bound(const Presentation &g) { return g.nilpotency() + 1; }

} // namespace

TensorElement alpha1(const Presentation &g, const GVector &mu, const GVector &x)
{
	for (int d : g.degrees_of(x))
		if (d != 0)
			throw std::invalid_argument("alpha1: x must have degree 0");
	if (!is_mc(g, mu))
		throw std::invalid_argument("alpha1: base point is not Maurer-Cartan");
	TensorElement a = TensorElement::constant(1, mu);
	Form t1 = Form::t(1, 1), power = Form::constant(1, Rational(1));
	for (int k = 1; k <= tree_bound(g); ++k) {
		power = power * t1;
		GVector e = tree_exponential(g, mu, -x, k);
		for (const auto &[i, c] : e.terms())
			a.add_term(i, power * (-c / factorial(k)));
	}
	for (const auto &[i, c] : x.terms())
		a.add_term(i, Form::dt(1, 1) * c);
	return a;
}

GVector rho1(const Presentation &g, const GVector &mu, const GVector &x)
{
	GVector out = mu;
	for (int k = 1; k <= tree_bound(g); ++k)
		out -= tree_exponential(g, mu, -x, k) * (Rational(1) / factorial(k));
	return out;
}

TensorElement ch_boundary_data(const Presentation &g, int n, const CHInputs &inputs)
{
	TensorElement beta(n);
	for (const auto &[J, x] : inputs) {
		if (J.empty() || !std::is_sorted(J.begin(), J.end()) || J.front() < 1 || J.back() > n)
			throw std::invalid_argument("generalized_ch: bad input index set");
		for (size_t a = 1; a < J.size(); ++a)
			if (J[a] == J[a - 1])
				throw std::invalid_argument("generalized_ch: bad input index set");
		for (int d : g.degrees_of(x))
			if (d != 1 - static_cast<int>(J.size()))
				throw std::invalid_argument("generalized_ch: input degree mismatch");
		beta += TensorElement::form_first(g, elementary_form(J, n), x);
	}
	return tensor_d(g, beta);
}

CHResult generalized_ch(const Presentation &g, int n, const GVector &mu, const CHInputs &inputs)
{
	if (n < 1)
		throw std::invalid_argument("generalized_ch: n < 1");
	TensorElement alpha = solve_gauge_fixed(g, n, 0, mu, ch_boundary_data(g, n, inputs)).value;
	std::vector<int> top;
	for (int v = 1; v <= n; ++v)
		top.push_back(v);
	return {integrate_chain(top, alpha), alpha};
}

GVector oriented_rho2(const Presentation &g, const GVector &mu, const GVector &x1, const GVector &x2,
		      const GVector &x12)
{
	CHInputs in{{{1}, -x1}, {{2}, -x2}};
	if (!x12.is_zero())
		in[{1, 2}] = -x12;
	return generalized_ch(g, 2, mu, in).value;
}

GVector compose(const Presentation &g, const GVector &mu, const GVector &x, const GVector &y)
{
	for (int d : g.degree_set())
		if (d < 0)
			throw std::invalid_argument("compose: algebra has negative degrees");
	Horn h{2, 1, {alpha1(g, rho1(g, mu, x), y), TensorElement(1), alpha1(g, mu, x)}};
	return integrate_chain({0, 2}, fill_horn_gamma(g, h));
}

GVector rho3(const Presentation &g, const GVector &mu, const GVector &x1, const GVector &x2, const GVector &x3)
{
	return generalized_ch(g, 3, mu, {{{1}, x1}, {{2}, x2}, {{3}, x3}}).value;
}

GVector deligne_action(const Presentation &g, const GVector &X, const GVector &alpha)
{
	if (!g.is_dg_lie())
		throw std::invalid_argument("deligne_action: algebra is not a dg Lie algebra");
	if (!is_mc(g, alpha))
		throw std::invalid_argument("deligne_action: alpha is not Maurer-Cartan");
	GVector term = g.delta(X) + g.bracket({alpha, X});
	GVector out = alpha;
	for (int n = 0; !term.is_zero(); ++n) {
		if (n > g.nilpotency() + 1)
			throw std::logic_error("deligne_action: series did not terminate");
		out -= term * (Rational(1) / factorial(n + 1));
		term = g.bracket({X, term});
	}
	return out;
}

// ---- matrix oracle ----

bool is_strictly_upper(const Matrix &m)
{
	if (m.rows() != m.cols())
		return false;
	for (int r = 0; r < m.rows(); ++r)
		for (int c = 0; c <= r; ++c)
			if (!m(r, c).is_zero())
				return false;
	return true;
}

Matrix identity_matrix(int m)
{
	Matrix id = zero_matrix(m, m);
	for (int i = 0; i < m; ++i)
		id(i, i) = Rational(1);
	return id;
}

Matrix matrix_exp(const Matrix &x)
{
	if (!is_strictly_upper(x))
		throw std::invalid_argument("matrix_exp: not strictly upper triangular");
	const int m = static_cast<int>(x.rows());
	Matrix out = identity_matrix(m), power = identity_matrix(m);
	for (int k = 1; k < m; ++k) {
		power = Matrix(power * x);
		out += power * (Rational(1) / factorial(k));
	}
	return out;
}

Matrix matrix_log(const Matrix &u)
{
	const int m = static_cast<int>(u.rows());
	Matrix n = u - identity_matrix(m);
	if (!is_strictly_upper(n))
		throw std::invalid_argument("matrix_log: not unipotent upper triangular");
	Matrix out = zero_matrix(m, m), power = identity_matrix(m);
	for (int k = 1; k < m; ++k) {
		power = Matrix(power * n);
		out += power * (Rational((k & 1) ? 1 : -1) / Rational(k));
	}
	return out;
}

Matrix oracle_bch(const Matrix &x, const Matrix &y) { return matrix_log(Matrix(matrix_exp(x) * matrix_exp(y))); }

Matrix MatrixRep::apply(const GVector &x) const
{
	Matrix out = zero_matrix(size, size);
	for (const auto &[i, c] : x.terms())
		out += images.at(i) * c;
	return out;
}

bool MatrixRep::is_faithful_rep(const Presentation &g) const
{
	if (static_cast<int>(images.size()) != g.dim())
		return false;
	for (int i = 0; i < g.dim(); ++i)
		for (int j = 0; j < g.dim(); ++j) {
			Matrix lhs = apply(g.bracket_basis({i, j}));
			Matrix rhs = images[i] * images[j] - images[j] * images[i];
			if (lhs != rhs)
				return false;
		}
	Matrix flat = zero_matrix(size * size, g.dim());
	for (int i = 0; i < g.dim(); ++i)
		for (int r = 0; r < size; ++r)
			for (int c = 0; c < size; ++c)
				flat(r * size + c, i) = images[i](r, c);
	return rank(flat) == g.dim();
}

namespace {

Matrix unit(int m, int r, int c)
{
	Matrix e = zero_matrix(m, m);
	e(r, c) = Rational(1);
	return e;
}

int require(const Presentation &g, const std::string &s)
{
	int i = g.index(s);
	if (i < 0)
		throw std::invalid_argument("representation: missing generator '" + s + "'");
	return i;
}

} // namespace

MatrixRep heisenberg_rep(const Presentation &g)
{
	MatrixRep rep{3, std::vector<Matrix>(g.dim(), zero_matrix(3, 3))};
	rep.images[require(g, "e1")] = unit(3, 0, 1);
	rep.images[require(g, "e2")] = unit(3, 1, 2);
	rep.images[require(g, "e3")] = unit(3, 0, 2);
	return rep;
}

MatrixRep ut4_rep(const Presentation &g)
{
	MatrixRep rep{4, std::vector<Matrix>(g.dim(), zero_matrix(4, 4))};
	for (int i = 1; i <= 4; ++i)
		for (int j = i + 1; j <= 4; ++j)
			rep.images[require(g, "E" + std::to_string(i) + std::to_string(j))] = unit(4, i - 1, j - 1);
	return rep;
}

// ---- groupoids ----

void Groupoid::validate() const
{
	const int m = morphisms();
	if (static_cast<int>(target.size()) != m || static_cast<int>(inverse.size()) != m ||
	    static_cast<int>(compose.size()) != m || static_cast<int>(identity.size()) != objects)
		throw std::invalid_argument("groupoid: table sizes disagree");
	for (int a = 0; a < m; ++a) {
		if (source[a] < 0 || source[a] >= objects || target[a] < 0 || target[a] >= objects)
			throw std::invalid_argument("groupoid: object out of range");
		for (int b = 0; b < m; ++b) {
			int c = compose[a][b];
			if ((source[a] == target[b]) != (c >= 0))
				throw std::invalid_argument("groupoid: composition defined on the wrong pairs");
			if (c >= 0 && (source[c] != source[b] || target[c] != target[a]))
				throw std::invalid_argument("groupoid: composite has wrong endpoints");
		}
		if (compose[a][identity[source[a]]] != a || compose[identity[target[a]]][a] != a)
			throw std::invalid_argument("groupoid: identity law fails");
		if (compose[a][inverse[a]] != identity[target[a]] || compose[inverse[a]][a] != identity[source[a]])
			throw std::invalid_argument("groupoid: inverse law fails");
	}
	for (int a = 0; a < m; ++a)
		for (int b = 0; b < m; ++b)
			for (int c = 0; c < m; ++c) {
				if (compose[a][b] < 0 || compose[b][c] < 0)
					continue;
				if (compose[compose[a][b]][c] != compose[a][compose[b][c]])
					throw std::invalid_argument("groupoid: composition is not associative");
			}
}

Groupoid cyclic_group(int order)
{
	Groupoid G;
	G.objects = 1;
	G.identity = {0};
	for (int a = 0; a < order; ++a) {
		G.source.push_back(0);
		G.target.push_back(0);
		G.inverse.push_back((order - a) % order);
		std::vector<int> row;
		for (int b = 0; b < order; ++b)
			row.push_back((a + b) % order);
		G.compose.push_back(row);
	}
	return G;
}

Groupoid pair_groupoid(int objects)
{
	Groupoid G;
	G.objects = objects;
	// Morphism (t, s) has index t * objects + s.
	for (int t = 0; t < objects; ++t)
		for (int s = 0; s < objects; ++s) {
			G.source.push_back(s);
			G.target.push_back(t);
			G.inverse.push_back(s * objects + t);
		}
	for (int o = 0; o < objects; ++o)
		G.identity.push_back(o * objects + o);
	const int m = objects * objects;
	G.compose.assign(m, std::vector<int>(m, -1));
	for (int a = 0; a < m; ++a)
		for (int b = 0; b < m; ++b)
			if (G.source[a] == G.target[b])
				G.compose[a][b] = G.target[a] * objects + G.source[b];
	return G;
}

Groupoid discrete_groupoid(int objects)
{
	Groupoid G;
	G.objects = objects;
	for (int o = 0; o < objects; ++o) {
		G.source.push_back(o);
		G.target.push_back(o);
		G.identity.push_back(o);
		G.inverse.push_back(o);
	}
	G.compose.assign(objects, std::vector<int>(objects, -1));
	for (int o = 0; o < objects; ++o)
		G.compose[o][o] = o;
	return G;
}

Groupoid product(const Groupoid &a, const Groupoid &b)
{
	Groupoid G;
	G.objects = a.objects * b.objects;
	const int ma = a.morphisms(), mb = b.morphisms();
	auto idx = [mb](int x, int y) { return x * mb + y; };
	for (int x = 0; x < ma; ++x)
		for (int y = 0; y < mb; ++y) {
			G.source.push_back(a.source[x] * b.objects + b.source[y]);
			G.target.push_back(a.target[x] * b.objects + b.target[y]);
			G.inverse.push_back(idx(a.inverse[x], b.inverse[y]));
		}
	for (int o = 0; o < a.objects; ++o)
		for (int p = 0; p < b.objects; ++p)
			G.identity.push_back(idx(a.identity[o], b.identity[p]));
	const int m = ma * mb;
	G.compose.assign(m, std::vector<int>(m, -1));
	for (int x1 = 0; x1 < ma; ++x1)
		for (int y1 = 0; y1 < mb; ++y1)
			for (int x2 = 0; x2 < ma; ++x2)
				for (int y2 = 0; y2 < mb; ++y2) {
					int cx = a.compose[x1][x2], cy = b.compose[y1][y2];
					if (cx >= 0 && cy >= 0)
						G.compose[idx(x1, y1)][idx(x2, y2)] = idx(cx, cy);
				}
	return G;
}

int NerveTruncation::index_of(int n, const std::vector<int> &chain) const
{
	const auto &level = simplices.at(n);
	auto it = std::find(level.begin(), level.end(), chain);
	return it == level.end() ? -1 : static_cast<int>(it - level.begin());
}

namespace {

std::vector<int> chain_face(const Groupoid &G, const std::vector<int> &c, int n, int k)
{
	if (n == 1)
		return {k == 0 ? G.source[c[0]] : G.target[c[0]]};
	std::vector<int> out;
	for (int p = 0; p < n; ++p) {
		if (k == 0 && p == 0)
			continue;
		if (k == n && p == n - 1)
			continue;
		if (k > 0 && k < n && p == k - 1) {
			out.push_back(G.compose[c[k - 1]][c[k]]);
			++p;
			continue;
		}
		out.push_back(c[p]);
	}
	return out;
}

std::vector<int> chain_degeneracy(const Groupoid &G, const std::vector<int> &c, int n, int k)
{
	if (n == 0)
		return {G.identity[c[0]]};
	int v = k == 0 ? G.target[c[0]] : G.source[c[k - 1]];
	std::vector<int> out = c;
	out.insert(out.begin() + k, G.identity[v]);
	return out;
}

} // namespace

NerveTruncation nerve_of_groupoid(const Groupoid &G, int N)
{
	G.validate();
	NerveTruncation X;
	X.N = N;
	X.simplices.resize(N + 2);
	for (int o = 0; o < G.objects; ++o)
		X.simplices[0].push_back({o});
	for (int g = 0; g < G.morphisms(); ++g)
		X.simplices[1].push_back({g});
	for (int n = 2; n <= N + 1; ++n) {
		for (const auto &c : X.simplices[n - 1])
			for (int g = 0; g < G.morphisms(); ++g)
				if (G.source[c.back()] == G.target[g]) {
					std::vector<int> e = c;
					e.push_back(g);
					X.simplices[n].push_back(e);
				}
	}
	std::vector<std::map<std::vector<int>, int>> lookup(N + 2);
	for (int n = 0; n <= N + 1; ++n)
		for (size_t x = 0; x < X.simplices[n].size(); ++x)
			lookup[n][X.simplices[n][x]] = static_cast<int>(x);
	X.face.resize(N + 1);
	X.degeneracy.resize(N + 1);
	for (int n = 0; n <= N; ++n)
		for (const auto &c : X.simplices[n]) {
			std::vector<int> f, s;
			for (int k = 0; n > 0 && k <= n; ++k)
				f.push_back(lookup[n - 1].at(chain_face(G, c, n, k)));
			for (int k = 0; k <= n; ++k)
				s.push_back(lookup[n + 1].at(chain_degeneracy(G, c, n, k)));
			X.face[n].push_back(f);
			X.degeneracy[n].push_back(s);
		}
	X.simplices.resize(N + 1);
	return X;
}

Check check_simplicial_identities(const NerveTruncation &X)
{
	Check chk{"simplicial identities"};
	for (int n = 2; n <= X.N; ++n)
		for (size_t x = 0; x < X.simplices[n].size(); ++x)
			for (int i = 0; i <= n; ++i)
				for (int j = i + 1; j <= n; ++j) {
					// d_i d_j = d_{j-1} d_i
					int a = X.face[n - 1][X.face[n][x][j]][i];
					int b = X.face[n - 1][X.face[n][x][i]][j - 1];
					chk.record(a == b, "n=" + std::to_string(n));
				}
	for (int n = 0; n < X.N; ++n)
		for (size_t x = 0; x < X.simplices[n].size(); ++x)
			for (int k = 0; k <= n; ++k) {
				int s = X.degeneracy[n][x][k];
				chk.record(X.face[n + 1][s][k] == static_cast<int>(x) &&
					       X.face[n + 1][s][k + 1] == static_cast<int>(x),
					   "degeneracy n=" + std::to_string(n));
			}
	return chk;
}

namespace {

// Enumerates tuples of (n-1)-simplices on the slots in `slots` satisfying
// d_j x_k = d_{k-1} x_j for every pair of filled slots j < k.
void compatible_tuples(const NerveTruncation &X, int n, const std::vector<int> &slots,
		       std::vector<std::vector<int>> &out)
{
	std::vector<int> cur(n + 1, -1);
	const int count = static_cast<int>(X.simplices[n - 1].size());
	auto rec = [&](auto &&self, size_t pos) -> void {
		if (pos == slots.size()) {
			out.push_back(cur);
			return;
		}
		const int k = slots[pos];
		for (int y = 0; y < count; ++y) {
			bool ok = true;
			for (size_t q = 0; q < pos && ok; ++q) {
				const int j = slots[q];
				if (n - 1 == 0)
					break;
				ok = X.face[n - 1][y][j] == X.face[n - 1][cur[j]][k - 1];
			}
			if (!ok)
				continue;
			cur[k] = y;
			self(self, pos + 1);
			cur[k] = -1;
		}
	};
	rec(rec, 0);
}

} // namespace

Check check_unique_fillers(const NerveTruncation &X, int n)
{
	Check chk{"unique fillers n=" + std::to_string(n)};
	if (n < 2 || n > X.N)
		throw std::invalid_argument("check_unique_fillers: dimension out of range");
	for (int i = 0; i <= n; ++i) {
		std::vector<int> slots;
		for (int k = 0; k <= n; ++k)
			if (k != i)
				slots.push_back(k);
		std::vector<std::vector<int>> horns;
		compatible_tuples(X, n, slots, horns);
		std::map<std::vector<int>, int> fillers;
		for (size_t x = 0; x < X.simplices[n].size(); ++x) {
			std::vector<int> key = X.face[n][x];
			key[i] = -1;
			++fillers[key];
		}
		for (const auto &h : horns) {
			auto it = fillers.find(h);
			int c = it == fillers.end() ? 0 : it->second;
			chk.record(c == 1, "i=" + std::to_string(i) + " fillers " + std::to_string(c));
		}
		chk.record(fillers.size() == horns.size(), "i=" + std::to_string(i) + " horn count mismatch");
	}
	return chk;
}

Check check_coskeletal(const NerveTruncation &X)
{
	Check chk{"coskeletal at level 3"};
	if (X.N < 3)
		throw std::invalid_argument("check_coskeletal: truncation below level 3");
	std::vector<std::vector<int>> spheres;
	compatible_tuples(X, 3, {0, 1, 2, 3}, spheres);
	std::map<std::vector<int>, int> count;
	for (const auto &f : X.face[3])
		++count[f];
	for (const auto &s : spheres) {
		auto it = count.find(s);
		chk.record(it != count.end() && it->second == 1, "boundary without unique 3-simplex");
	}
	chk.record(count.size() == spheres.size() && X.simplices[3].size() == spheres.size(),
		   "3-simplices not determined by their boundary");
	return chk;
}

std::vector<int> groupoid_filler(const Groupoid &G, int i, const std::vector<int> &f)
{
	if (f.size() != 3)
		throw std::invalid_argument("groupoid_filler: need three face slots");
	switch (i) {
	case 0: // (-, g, h) -> [h, h^-1 g]
		return {f[2], G.compose[G.inverse[f[2]]][f[1]]};
	case 1: // (g, -, h) -> [h, g]
		return {f[2], f[0]};
	case 2: // (g, h, -) -> [h g^-1, g]
		return {G.compose[f[1]][G.inverse[f[0]]], f[0]};
	default:
		throw std::invalid_argument("groupoid_filler: horn index out of range");
	}
}

} // namespace linf
