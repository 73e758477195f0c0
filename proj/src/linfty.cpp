#include "linf/linfty.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace linf {

int lada_markl_exponent(int k) { return k * (k + 1) / 2; }

GVector GVector::basis(int i, const Rational &c)
{
	GVector v;
	v.add_term(i, c);
	return v;
}

Rational GVector::coeff(int i) const
{
	auto it = terms_.find(i);
	return it == terms_.end() ? Rational(0) : it->second;
}

void GVector::add_term(int i, const Rational &c)
{
	if (c.is_zero())
		return;
	auto [it, fresh] = terms_.try_emplace(i, c);
	if (!fresh) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

GVector &GVector::operator+=(const GVector &o)
{
	for (const auto &[i, c] : o.terms_)
		add_term(i, c);
	return *this;
}

GVector &GVector::operator-=(const GVector &o)
{
	for (const auto &[i, c] : o.terms_)
		add_term(i, -c);
	return *this;
}

GVector &GVector::operator*=(const Rational &c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[i, v] : terms_)
		v *= c;
	return *this;
}

int koszul_sign(const std::vector<int> &perm, const std::vector<int> &degrees)
{
	if (perm.size() != degrees.size())
		throw std::invalid_argument("koszul_sign: length mismatch");
	int sign = 1;
	for (size_t a = 0; a < perm.size(); ++a)
		for (size_t b = a + 1; b < perm.size(); ++b)
			if (perm[a] > perm[b] && (degrees[perm[a]] & 1) && (degrees[perm[b]] & 1))
				sign = -sign;
	return sign;
}

int antisymmetry_sort(std::vector<int> &idx, const std::vector<int> &degrees)
{
	int sign = 1;
	for (size_t a = 1; a < idx.size(); ++a)
		for (size_t b = a; b > 0 && idx[b - 1] > idx[b]; --b) {
			std::swap(idx[b - 1], idx[b]);
			// [.., x, y, ..] = -(-1)^{|x||y|} [.., y, x, ..]
			if (!((degrees[idx[b - 1]] & 1) && (degrees[idx[b]] & 1)))
				sign = -sign;
		}
	for (size_t a = 1; a < idx.size(); ++a)
		if (idx[a - 1] == idx[a] && !(degrees[idx[a]] & 1))
			return 0;
	return sign;
}

int Presentation::add_generator(const std::string &symbol, int degree)
{
	if (symbol.empty())
		throw std::invalid_argument("empty generator symbol");
	if (lookup_.count(symbol))
		throw std::invalid_argument("duplicate generator symbol '" + symbol + "'");
	int i = dim();
	symbols_.push_back(symbol);
	degrees_.push_back(degree);
	lookup_[symbol] = i;
	nilpotency_ = -1;
	return i;
}

int Presentation::index(const std::string &symbol) const
{
	auto it = lookup_.find(symbol);
	return it == lookup_.end() ? -1 : it->second;
}

std::vector<int> Presentation::basis_of_degree(int d) const
{
	std::vector<int> out;
	for (int i = 0; i < dim(); ++i)
		if (degrees_[i] == d)
			out.push_back(i);
	return out;
}

std::set<int> Presentation::degree_set() const { return {degrees_.begin(), degrees_.end()}; }

void Presentation::set_bracket(const std::vector<int> &args, const GVector &value)
{
	if (args.empty())
		throw std::invalid_argument("bracket of arity 0");
	int target = 2 - static_cast<int>(args.size());
	for (int a : args) {
		if (a < 0 || a >= dim())
			throw std::out_of_range("bracket argument out of range");
		target += degrees_[a];
	}
	for (const auto &[i, c] : value.terms())
		if (i < 0 || i >= dim() || degrees_[i] != target)
			throw std::invalid_argument("bracket value has the wrong degree");
	std::vector<int> key = args;
	int sign = antisymmetry_sort(key, degrees_);
	if (sign == 0) {
		if (!value.is_zero())
			throw std::invalid_argument("nonzero bracket with a repeated even argument");
		return;
	}
	if (value.is_zero())
		table_.erase(key);
	else
		table_[key] = sign > 0 ? value : -value;
	nilpotency_ = -1;
	rebuild_entries();
}

void Presentation::rebuild_entries()
{
	by_arity_.clear();
	for (const auto &[key, value] : table_) {
		size_t k = key.size();
		if (by_arity_.size() <= k)
			by_arity_.resize(k + 1);
		Entry e{key, value, {}};
		std::vector<int> perm = key;
		do {
			std::vector<int> sorted = perm;
			int s = antisymmetry_sort(sorted, degrees_);
			e.orderings.emplace_back(perm, s);
		} while (std::next_permutation(perm.begin(), perm.end()));
		by_arity_[k].push_back(std::move(e));
	}
}

const std::vector<Presentation::Entry> &Presentation::entries(int arity) const
{
	static const std::vector<Entry> empty;
	if (arity < 0 || static_cast<size_t>(arity) >= by_arity_.size())
		return empty;
	return by_arity_[arity];
}

bool Presentation::bracket_arity_above(int k) const
{
	for (size_t a = k + 1; a < by_arity_.size(); ++a)
		if (!by_arity_[a].empty())
			return true;
	return false;
}

int Presentation::max_arity() const
{
	int k = 1;
	for (size_t a = 0; a < by_arity_.size(); ++a)
		if (!by_arity_[a].empty())
			k = std::max(k, static_cast<int>(a));
	return std::max(k, declared_arity_);
}

GVector Presentation::bracket_basis(const std::vector<int> &args) const
{
	std::vector<int> key = args;
	int sign = antisymmetry_sort(key, degrees_);
	if (sign == 0)
		return {};
	auto it = table_.find(key);
	if (it == table_.end())
		return {};
	return sign > 0 ? it->second : -it->second;
}

GVector Presentation::bracket(const std::vector<GVector> &args) const
{
	GVector out;
	const int k = static_cast<int>(args.size());
	for (const auto &e : entries(k))
		for (const auto &[seq, sign] : e.orderings) {
			Rational c(sign);
			for (int p = 0; p < k && !c.is_zero(); ++p)
				c *= args[p].coeff(seq[p]);
			if (!c.is_zero())
				out += e.value * c;
		}
	return out;
}

GVector Presentation::delta(const GVector &x) const { return bracket({x}); }

std::set<int> Presentation::degrees_of(const GVector &x) const
{
	std::set<int> out;
	for (const auto &[i, c] : x.terms())
		out.insert(degrees_[i]);
	return out;
}

Vector Presentation::to_vector(const GVector &x) const
{
	Vector v = zero_vector(dim());
	for (const auto &[i, c] : x.terms())
		v(i) = c;
	return v;
}

GVector Presentation::from_vector(const Vector &v) const
{
	GVector x;
	for (int i = 0; i < v.rows(); ++i)
		x.add_term(i, v(i));
	return x;
}

std::string Presentation::render(const GVector &x) const
{
	if (x.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[i, c] : x.terms()) {
		Rational a = c;
		if (first) {
			if (a.sign() < 0) {
				os << "-";
				a = -a;
			}
		} else if (a.sign() < 0) {
			os << " - ";
			a = -a;
		} else {
			os << " + ";
		}
		if (!a.is_one())
			os << a.str() << "*";
		os << symbols_[i];
		first = false;
	}
	return os.str();
}

namespace {

// All sorted tuples of length k over [0, dim) in which only odd indices repeat.
void sorted_tuples(const std::vector<int> &degrees, int k, std::vector<std::vector<int>> &out)
{
	std::vector<int> cur;
	const int dim = static_cast<int>(degrees.size());
	auto rec = [&](auto &&self, int start) -> void {
		if (static_cast<int>(cur.size()) == k) {
			out.push_back(cur);
			return;
		}
		for (int v = start; v < dim; ++v) {
			if (!cur.empty() && cur.back() == v && !(degrees[v] & 1))
				continue;
			cur.push_back(v);
			self(self, v);
			cur.pop_back();
		}
	};
	rec(rec, 0);
}

} // namespace

Check check_jacobi(const Presentation &g, int n_max)
{
	Check chk{"n-Jacobi"};
	const auto &deg = g.degrees();
	for (int n = 1; n <= n_max; ++n) {
		std::vector<std::vector<int>> tuples;
		sorted_tuples(deg, n, tuples);
		for (const auto &x : tuples) {
			GVector total;
			// Unshuffles (I, J) with |I| = k >= 1.
			for (unsigned mask = 1; mask < (1u << n); ++mask) {
				std::vector<int> in, out;
				for (int p = 0; p < n; ++p)
					(mask >> p & 1 ? in : out).push_back(p);
				const int k = static_cast<int>(in.size());
				int sign = (k & 1) ? -1 : 1;
				for (int a : in)
					for (int b : out)
						if (b < a && !((deg[x[a]] & 1) && (deg[x[b]] & 1)))
							sign = -sign;
				std::vector<int> inner;
				for (int a : in)
					inner.push_back(x[a]);
				GVector v = g.bracket_basis(inner);
				if (v.is_zero())
					continue;
				std::vector<GVector> args{v};
				for (int b : out)
					args.push_back(GVector::basis(x[b]));
				total += g.bracket(args) * Rational(sign);
			}
			std::string w;
			if (!total.is_zero()) {
				w = "(";
				for (size_t p = 0; p < x.size(); ++p)
					w += (p ? "," : "") + g.symbol(x[p]);
				w += ") residual " + g.render(total);
			}
			chk.record(total.is_zero(), w);
		}
	}
	return chk;
}

FiltrationReport lower_central(const Presentation &g, int cap)
{
	const int dim = g.dim();
	const int K = g.max_arity();
	FiltrationReport rep;
	// W[j]: span of bracket trees of weight exactly j (j >= 1).
	std::vector<Subspace> W(2, Subspace(dim));
	for (int i = 0; i < dim; ++i) {
		Vector e = zero_vector(dim);
		e(i) = Rational(1);
		W[1].add(e);
	}
	int last_nonzero = dim > 0 ? 1 : 0;
	int j = 2;
	for (; j <= cap; ++j) {
		Subspace wj(dim);
		for (int k = 2; k <= std::min(K, j); ++k) {
			// Compositions of j into k positive parts, all parts < j.
			std::vector<int> parts(k, 1);
			auto rec = [&](auto &&self, int pos, int remaining) -> void {
				if (pos == k - 1) {
					if (remaining < 1 || remaining >= j)
						return;
					parts[pos] = remaining;
					std::vector<const std::vector<Vector> *> bases;
					for (int p = 0; p < k; ++p) {
						if (W[parts[p]].is_zero())
							return;
						bases.push_back(&W[parts[p]].basis());
					}
					std::vector<size_t> choice(k, 0);
					while (true) {
						std::vector<GVector> args;
						for (int p = 0; p < k; ++p)
							args.push_back(g.from_vector((*bases[p])[choice[p]]));
						GVector v = g.bracket(args);
						if (!v.is_zero())
							wj.add(g.to_vector(v));
						int p = k - 1;
						while (p >= 0 && ++choice[p] == bases[p]->size())
							choice[p--] = 0;
						if (p < 0)
							break;
					}
					return;
				}
				for (int v = 1; v <= remaining - (k - 1 - pos); ++v) {
					parts[pos] = v;
					self(self, pos + 1, remaining - v);
				}
			};
			rec(rec, 0, j);
		}
		W.push_back(wj);
		if (!wj.is_zero())
			last_nonzero = j;
		// Every part of a weight j' > K (m - 1) composition has weight >= m.
		const int m = last_nonzero + 1;
		if (j >= std::max(m, K * (m - 1)) && j > last_nonzero)
			break;
	}
	if (j > cap) {
		rep.nilpotent = false;
		rep.index = 0;
		return rep;
	}
	rep.nilpotent = true;
	rep.index = last_nonzero + 1;
	for (int i = 1; i <= rep.index; ++i) {
		Subspace f(dim);
		for (int w = i; w <= last_nonzero; ++w)
			for (const auto &v : W[w].basis())
				f.add(v);
		rep.F.push_back(f);
	}
	return rep;
}

int nilpotency_index(const Presentation &g)
{
	FiltrationReport r = lower_central(g);
	if (!r.nilpotent)
		throw std::domain_error("algebra '" + g.name + "' is not nilpotent within the iteration cap");
	return r.index;
}

int Presentation::nilpotency() const
{
	if (nilpotency_ < 0)
		nilpotency_ = nilpotency_index(*this);
	return nilpotency_;
}

GVector power_bracket(const Presentation &g, const GVector &alpha, int l, const std::vector<GVector> &rest)
{
	std::vector<GVector> args(l, alpha);
	args.insert(args.end(), rest.begin(), rest.end());
	return g.bracket(args);
}

GVector curvature(const Presentation &g, const GVector &alpha)
{
	GVector out = g.delta(alpha);
	for (int l = 2; l <= g.max_arity(); ++l)
		out += power_bracket(g, alpha, l) * (Rational(1) / factorial(l));
	return out;
}

bool is_mc(const Presentation &g, const GVector &alpha)
{
	for (int d : g.degrees_of(alpha))
		if (d != 1)
			return false;
	return curvature(g, alpha).is_zero();
}

GVector bianchi_residual(const Presentation &g, const GVector &alpha)
{
	GVector f = curvature(g, alpha);
	GVector out = g.delta(f);
	for (int l = 1; l + 1 <= g.max_arity(); ++l)
		out += power_bracket(g, alpha, l, {f}) * (Rational(1) / factorial(l));
	return out;
}

GVector twisted_bracket(const Presentation &g, const GVector &mu, const std::vector<GVector> &args)
{
	GVector out;
	const int k = static_cast<int>(args.size());
	for (int l = 0; l + k <= g.max_arity(); ++l)
		out += power_bracket(g, mu, l, args) * (Rational(1) / factorial(l));
	return out;
}

Presentation twist(const Presentation &g, const GVector &mu)
{
	if (!is_mc(g, mu))
		throw std::invalid_argument("twist: element is not Maurer-Cartan");
	Presentation out;
	out.name = g.name + "_twisted";
	for (int i = 0; i < g.dim(); ++i)
		out.add_generator(g.symbol(i), g.degree(i));
	out.set_declared_arity(g.declared_arity());
	for (int k = 1; k <= g.max_arity(); ++k) {
		std::vector<std::vector<int>> tuples;
		sorted_tuples(g.degrees(), k, tuples);
		for (const auto &t : tuples) {
			std::vector<GVector> args;
			for (int a : t)
				args.push_back(GVector::basis(a));
			GVector v = twisted_bracket(g, mu, args);
			if (!v.is_zero())
				out.set_bracket(t, v);
		}
	}
	return out;
}

// ---- g (x) Omega_n ----

TensorElement TensorElement::constant(int n, const GVector &x)
{
	TensorElement t(n);
	for (const auto &[i, c] : x.terms())
		t.add_term(i, Form::constant(n, c));
	return t;
}

TensorElement TensorElement::simple(int n, int basis, const Form &f)
{
	TensorElement t(n);
	t.add_term(basis, f);
	return t;
}

TensorElement TensorElement::form_first(const Presentation &g, const Form &omega, const GVector &x)
{
	TensorElement t(omega.dim());
	Form odd = omega.parity_part(1);
	Form even = omega.parity_part(0);
	for (const auto &[i, c] : x.terms()) {
		Form f = (g.degree(i) & 1) ? even - odd : even + odd;
		t.add_term(i, f * c);
	}
	return t;
}

void TensorElement::add_term(int basis, const Form &f)
{
	if (f.is_zero())
		return;
	if (f.dim() != n_)
		throw std::invalid_argument("TensorElement: simplex dimension mismatch");
	auto [it, fresh] = terms_.try_emplace(basis, f);
	if (!fresh) {
		it->second += f;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Form TensorElement::component(int basis) const
{
	auto it = terms_.find(basis);
	return it == terms_.end() ? Form(n_) : it->second;
}

TensorElement &TensorElement::operator+=(const TensorElement &o)
{
	if (o.n_ != n_ && !o.is_zero()) {
		if (!is_zero())
			throw std::invalid_argument("TensorElement: simplex dimension mismatch");
		n_ = o.n_;
	}
	for (const auto &[i, f] : o.terms_)
		add_term(i, f);
	return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &o)
{
	if (o.n_ != n_ && !o.is_zero()) {
		if (!is_zero())
			throw std::invalid_argument("TensorElement: simplex dimension mismatch");
		n_ = o.n_;
	}
	for (const auto &[i, f] : o.terms_)
		add_term(i, -f);
	return *this;
}

TensorElement &TensorElement::operator*=(const Rational &c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[i, f] : terms_)
		f *= c;
	return *this;
}

TensorElement TensorElement::total_degree_part(const Presentation &g, int d) const
{
	TensorElement out(n_);
	for (const auto &[i, f] : terms_)
		out.add_term(i, f.degree_part(d - g.degree(i)));
	return out;
}

std::set<int> TensorElement::total_degrees(const Presentation &g) const
{
	std::set<int> out;
	for (const auto &[i, f] : terms_)
		for (int k : f.ext_degrees())
			out.insert(g.degree(i) + k);
	return out;
}

TensorElement apply_odd(const Presentation &g, const FormOp &op, const TensorElement &a)
{
	TensorElement out(a.dim());
	for (const auto &[i, f] : a.terms()) {
		Form v = op(f);
		out.add_term(i, (g.degree(i) & 1) ? -v : v);
	}
	return out;
}

TensorElement apply_even(const FormOp &op, const TensorElement &a, int target_dim)
{
	TensorElement out(target_dim);
	for (const auto &[i, f] : a.terms())
		out.add_term(i, op(f));
	return out;
}

TensorElement apply_even(const FormOp &op, const TensorElement &a) { return apply_even(op, a, a.dim()); }

TensorElement tensor_d(const Presentation &g, const TensorElement &a)
{
	TensorElement out(a.dim());
	for (const auto &[i, f] : a.terms()) {
		Form df = exterior_d(f);
		out.add_term(i, (g.degree(i) & 1) ? -df : df);
		for (const auto &e : g.entries(1))
			if (e.key[0] == i)
				for (const auto &[j, c] : e.value.terms())
					out.add_term(j, f * c);
	}
	return out;
}

TensorElement tensor_bracket(const Presentation &g, const std::vector<TensorElement> &args)
{
	const int k = static_cast<int>(args.size());
	if (k == 0)
		throw std::invalid_argument("tensor_bracket: arity 0");
	const int n = args[0].dim();
	for (const auto &a : args)
		if (a.dim() != n && !a.is_zero())
			throw std::invalid_argument("tensor_bracket: simplex dimension mismatch");
	if (k == 1)
		return tensor_d(g, args[0]);
	TensorElement out(n);
	// Parity splits of the argument forms, computed on demand.
	std::vector<std::map<int, std::pair<Form, Form>>> split(k);
	auto parts = [&](int p, int b) -> const std::pair<Form, Form> * {
		auto &m = split[p];
		auto it = m.find(b);
		if (it != m.end())
			return &it->second;
		auto jt = args[p].terms().find(b);
		if (jt == args[p].terms().end())
			return nullptr;
		return &m.emplace(b, std::make_pair(jt->second.parity_part(0), jt->second.parity_part(1)))
			    .first->second;
	};
	for (const auto &e : g.entries(k))
		for (const auto &[seq, sign] : e.orderings) {
			// (-1)^{sum_{i<j} |a_i||x_j|}: flip the odd part of the running
			// product whenever x_j is odd.
			Form prod;
			bool ok = true;
			for (int p = 0; p < k; ++p) {
				const auto *pr = parts(p, seq[p]);
				if (!pr) {
					ok = false;
					break;
				}
				const Form a = pr->first + pr->second;
				if (p == 0)
					prod = a;
				else if (g.degree(seq[p]) & 1)
					prod = (prod.parity_part(0) - prod.parity_part(1)) * a;
				else
					prod = prod * a;
				if (prod.is_zero()) {
					ok = false;
					break;
				}
			}
			if (!ok)
				continue;
			if (sign < 0)
				prod = -prod;
			for (const auto &[j, c] : e.value.terms())
				out.add_term(j, prod * c);
		}
	return out;
}

TensorElement tensor_power_bracket(const Presentation &g, const TensorElement &alpha, int l,
				   const std::vector<TensorElement> &rest)
{
	std::vector<TensorElement> args(l, alpha);
	args.insert(args.end(), rest.begin(), rest.end());
	return tensor_bracket(g, args);
}

TensorElement tensor_nonlinear(const Presentation &g, const TensorElement &alpha)
{
	TensorElement out(alpha.dim());
	for (int l = 2; l <= g.max_arity(); ++l)
		out += tensor_power_bracket(g, alpha, l) * (Rational(1) / factorial(l));
	return out;
}

TensorElement tensor_curvature(const Presentation &g, const TensorElement &alpha)
{
	return tensor_d(g, alpha) + tensor_nonlinear(g, alpha);
}

bool tensor_is_mc(const Presentation &g, const TensorElement &alpha)
{
	for (int d : alpha.total_degrees(g))
		if (d != 1)
			return false;
	return tensor_curvature(g, alpha).is_zero();
}

TensorElement pullback(const SimplicialMap &f, const TensorElement &a)
{
	return apply_even([&f](const Form &x) { return pullback(f, x); }, a, f.m);
}

GVector evaluate_vertex(int i, const TensorElement &a)
{
	GVector out;
	for (const auto &[b, f] : a.terms())
		out.add_term(b, evaluate_vertex(i, f));
	return out;
}

GVector integrate_chain(const std::vector<int> &seq, const TensorElement &a)
{
	GVector out;
	for (const auto &[b, f] : a.terms())
		out.add_term(b, integrate_chain(seq, f));
	return out;
}

std::string render(const Presentation &g, const TensorElement &a)
{
	if (a.is_zero())
		return "0";
	std::string out;
	for (const auto &[i, f] : a.terms()) {
		if (!out.empty())
			out += " + ";
		out += g.symbol(i) + "*(" + render(f) + ")";
	}
	return out;
}

} // namespace linf
