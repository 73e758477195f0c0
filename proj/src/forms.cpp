#include "linf/forms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace linf {

namespace {

using Mask = uint16_t;
constexpr int kMasks = 1 << kMaxDim;

std::vector<int> bits_of(unsigned mask)
{
	std::vector<int> out;
	for (int j = 0; j < kMaxDim; ++j)
		if (mask & (1u << j))
			out.push_back(j);
	return out;
}

struct SubsetRank {
	std::array<uint16_t, kMasks> rank{};
	SubsetRank()
	{
		std::vector<unsigned> masks(kMasks);
		for (unsigned m = 0; m < kMasks; ++m)
			masks[m] = m;
		std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
			auto x = bits_of(a), y = bits_of(b);
			return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
		});
		for (unsigned r = 0; r < kMasks; ++r)
			rank[masks[r]] = static_cast<uint16_t>(r);
	}
};

const SubsetRank &subset_rank()
{
	static const SubsetRank table;
	return table;
}

// Sign of dt_A ^ dt_B relative to dt_{A u B}; 0 when they overlap.
int wedge_sign(Mask a, Mask b)
{
	if (a & b)
		return 0;
	int inversions = 0;
	for (int t = 0; t < kMaxDim; ++t)
		if (b & (1u << t))
			inversions += std::popcount(static_cast<unsigned>(a >> (t + 1)));
	return (inversions & 1) ? -1 : 1;
}

void check_index(int i, int n)
{
	if (i < 0 || i > n)
		throw std::out_of_range("vertex index " + std::to_string(i) + " outside [0," +
		                        std::to_string(n) + "]");
}

void check_dim(int n)
{
	if (n < 0 || n > kMaxDim)
		throw std::out_of_range("simplex dimension " + std::to_string(n) + " unsupported");
}

} // namespace

int Mono::ext_degree() const { return std::popcount(static_cast<unsigned>(ext)); }

int Mono::poly_degree() const
{
	int d = 0;
	for (auto e : exp)
		d += e;
	return d;
}

bool MonoLess::operator()(const Mono &a, const Mono &b) const
{
	if (a.ext != b.ext) {
		const auto &r = subset_rank().rank;
		return r[a.ext] < r[b.ext];
	}
	return a.exp < b.exp;
}

Form::Form(int n) : n_(n) { check_dim(n); }

Form Form::constant(int n, const Rational &c)
{
	Form f(n);
	f.add_term(Mono{}, c);
	return f;
}

Form Form::t(int n, int i)
{
	check_index(i, n);
	Form f(n);
	if (i == 0) {
		f.add_term(Mono{}, Rational(1));
		for (int j = 1; j <= n; ++j) {
			Mono m;
			m.exp[j - 1] = 1;
			f.add_term(m, Rational(-1));
		}
	} else {
		Mono m;
		m.exp[i - 1] = 1;
		f.add_term(m, Rational(1));
	}
	return f;
}

Form Form::dt(int n, int i)
{
	check_index(i, n);
	Form f(n);
	if (i == 0) {
		for (int j = 1; j <= n; ++j) {
			Mono m;
			m.ext = static_cast<Mask>(1u << (j - 1));
			f.add_term(m, Rational(-1));
		}
	} else {
		Mono m;
		m.ext = static_cast<Mask>(1u << (i - 1));
		f.add_term(m, Rational(1));
	}
	return f;
}

Form Form::monomial(int n, const Mono &m, const Rational &c)
{
	Form f(n);
	f.add_term(m, c);
	return f;
}

void Form::add_term(const Mono &m, const Rational &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Form Form::degree_part(int k) const
{
	Form f(n_);
	for (const auto &[m, c] : terms_)
		if (m.ext_degree() == k)
			f.terms_.emplace_hint(f.terms_.end(), m, c);
	return f;
}

Form Form::parity_part(int parity) const
{
	Form f(n_);
	for (const auto &[m, c] : terms_)
		if ((m.ext_degree() & 1) == parity)
			f.terms_.emplace_hint(f.terms_.end(), m, c);
	return f;
}

std::set<int> Form::ext_degrees() const
{
	std::set<int> s;
	for (const auto &[m, c] : terms_)
		s.insert(m.ext_degree());
	return s;
}

std::set<int> Form::poly_degrees() const
{
	std::set<int> s;
	for (const auto &[m, c] : terms_)
		s.insert(m.poly_degree());
	return s;
}

Form &Form::operator+=(const Form &o)
{
	if (o.n_ != n_)
		throw std::invalid_argument("form dimension mismatch");
	for (const auto &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

Form &Form::operator-=(const Form &o)
{
	if (o.n_ != n_)
		throw std::invalid_argument("form dimension mismatch");
	for (const auto &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

Form &Form::operator*=(const Rational &c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto &[m, v] : terms_)
		v *= c;
	return *this;
}

Form operator*(const Form &a, const Form &b)
{
	if (a.n_ != b.n_)
		throw std::invalid_argument("form dimension mismatch");
	Form out(a.n_);
	for (const auto &[ma, ca] : a.terms_) {
		for (const auto &[mb, cb] : b.terms_) {
			int s = wedge_sign(ma.ext, mb.ext);
			if (s == 0)
				continue;
			Mono m;
			m.ext = ma.ext | mb.ext;
			for (int j = 0; j < kMaxDim; ++j) {
				int e = ma.exp[j] + mb.exp[j];
				if (e > 255)
					throw std::overflow_error("exponent overflow");
				m.exp[j] = static_cast<uint8_t>(e);
			}
			Rational c = ca * cb;
			if (s < 0)
				c = -c;
			out.add_term(m, c);
		}
	}
	return out;
}

Form wedge(const Form &a, const Form &b) { return a * b; }

Form reduce_barycentric(const std::vector<RawTerm> &expr, int n)
{
	check_dim(n);
	Form out(n);
	for (const auto &term : expr) {
		if (static_cast<int>(term.t_exp.size()) > n + 1)
			throw std::out_of_range("exponent vector longer than n+1");
		Form f = Form::constant(n, term.coeff);
		for (size_t i = 0; i < term.t_exp.size(); ++i) {
			if (term.t_exp[i] < 0)
				throw std::invalid_argument("negative exponent");
			Form ti = Form::t(n, static_cast<int>(i));
			for (int e = 0; e < term.t_exp[i]; ++e)
				f = f * ti;
		}
		for (int w : term.dts)
			f = f * Form::dt(n, w);
		out += f;
	}
	return out;
}

Form exterior_d(const Form &f)
{
	Form out(f.dim());
	for (const auto &[m, c] : f.terms()) {
		for (int j = 0; j < f.dim(); ++j) {
			if (m.exp[j] == 0 || (m.ext & (1u << j)))
				continue;
			Mono r = m;
			r.exp[j] -= 1;
			r.ext = static_cast<Mask>(m.ext | (1u << j));
			int below = std::popcount(static_cast<unsigned>(m.ext & ((1u << j) - 1)));
			Rational v = c * Rational(static_cast<long>(m.exp[j]));
			if (below & 1)
				v = -v;
			out.add_term(r, v);
		}
	}
	return out;
}

SimplicialMap::SimplicialMap(int n_target, std::vector<int> vals)
    : m(static_cast<int>(vals.size()) - 1), n(n_target), values(std::move(vals))
{
	if (m < 0)
		throw std::invalid_argument("simplicial map with empty source");
	for (size_t j = 0; j < values.size(); ++j) {
		if (values[j] < 0 || values[j] > n)
			throw std::invalid_argument("simplicial map value out of range");
		if (j > 0 && values[j] < values[j - 1])
			throw std::invalid_argument("simplicial map is not monotone");
	}
}

SimplicialMap SimplicialMap::identity(int n)
{
	std::vector<int> v(n + 1);
	for (int j = 0; j <= n; ++j)
		v[j] = j;
	return SimplicialMap(n, v);
}

SimplicialMap SimplicialMap::face(int n, int k)
{
	if (n < 1 || k < 0 || k > n)
		throw std::out_of_range("face index out of range");
	std::vector<int> v(n);
	for (int j = 0; j < n; ++j)
		v[j] = j < k ? j : j + 1;
	return SimplicialMap(n, v);
}

SimplicialMap SimplicialMap::degeneracy(int n, int k)
{
	if (k < 0 || k > n)
		throw std::out_of_range("degeneracy index out of range");
	std::vector<int> v(n + 2);
	for (int j = 0; j <= n + 1; ++j)
		v[j] = j <= k ? j : j - 1;
	return SimplicialMap(n, v);
}

SimplicialMap SimplicialMap::inclusion(int n, const std::vector<int> &seq)
{
	for (size_t p = 1; p < seq.size(); ++p)
		if (seq[p] <= seq[p - 1])
			throw std::invalid_argument("inclusion needs a strictly increasing sequence");
	return SimplicialMap(n, seq);
}

SimplicialMap SimplicialMap::after(const SimplicialMap &g) const
{
	if (g.n != m)
		throw std::invalid_argument("simplicial maps not composable");
	std::vector<int> v(g.values.size());
	for (size_t j = 0; j < v.size(); ++j)
		v[j] = values[g.values[j]];
	return SimplicialMap(n, v);
}

Form pullback(const SimplicialMap &f, const Form &form)
{
	if (form.dim() != f.n)
		throw std::invalid_argument("pullback: form lives on the wrong simplex");
	const int m = f.m;
	std::vector<Form> coord(f.n + 1, Form(m)), dcoord(f.n + 1, Form(m));
	for (int j = 0; j <= m; ++j)
		coord[f.values[j]] += Form::t(m, j);
	for (int i = 0; i <= f.n; ++i)
		dcoord[i] = exterior_d(coord[i]);
	std::vector<std::vector<Form>> powers(f.n + 1);
	auto power = [&](int i, int e) -> const Form & {
		auto &p = powers[i];
		if (p.empty())
			p.push_back(Form::constant(m, Rational(1)));
		while (static_cast<int>(p.size()) <= e)
			p.push_back(p.back() * coord[i]);
		return p[e];
	};
	Form out(m);
	for (const auto &[mono, c] : form.terms()) {
		Form piece = Form::constant(m, c);
		for (int i = 1; i <= f.n; ++i)
			if (mono.exp[i - 1])
				piece = piece * power(i, mono.exp[i - 1]);
		for (int i = 1; i <= f.n; ++i)
			if (mono.ext & (1u << (i - 1)))
				piece = piece * dcoord[i];
		out += piece;
	}
	return out;
}

Rational evaluate_vertex(int i, const Form &f)
{
	check_index(i, f.dim());
	Rational v(0);
	for (const auto &[m, c] : f.terms()) {
		if (m.ext)
			continue;
		bool hit = true;
		for (int j = 1; j <= f.dim(); ++j)
			if (m.exp[j - 1] && j != i)
				hit = false;
		if (hit)
			v += c;
	}
	return v;
}

Form contract_euler(int i, const Form &f)
{
	check_index(i, f.dim());
	Form out(f.dim());
	for (const auto &[m, c] : f.terms()) {
		int p = 0;
		for (int j = 1; j <= f.dim(); ++j) {
			Mask bit = static_cast<Mask>(1u << (j - 1));
			if (!(m.ext & bit))
				continue;
			Rational v = (p & 1) ? -c : c;
			Mono r = m;
			r.ext = static_cast<Mask>(m.ext & ~bit);
			Mono rt = r;
			rt.exp[j - 1] += 1;
			out.add_term(rt, v);
			if (j == i)
				out.add_term(r, -v);
			++p;
		}
	}
	return out;
}

std::vector<Form> monomial_generators(int n, int max_degree)
{
	check_dim(n);
	std::vector<Form> out;
	std::vector<std::array<uint8_t, kMaxDim>> exps;
	std::array<uint8_t, kMaxDim> cur{};
	auto rec = [&](auto &&self, int j, int left) -> void {
		if (j == n) {
			exps.push_back(cur);
			return;
		}
		for (int e = 0; e <= left; ++e) {
			cur[j] = static_cast<uint8_t>(e);
			self(self, j + 1, left - e);
		}
		cur[j] = 0;
	};
	rec(rec, 0, max_degree);
	for (unsigned s = 0; s < (1u << n); ++s)
		for (const auto &e : exps) {
			Mono m;
			m.ext = static_cast<Mask>(s);
			m.exp = e;
			out.push_back(Form::monomial(n, m));
		}
	return out;
}

namespace {

std::string render_mono(const Mono &m, int n)
{
	std::string s;
	for (int j = 1; j <= n; ++j) {
		int e = m.exp[j - 1];
		if (!e)
			continue;
		if (!s.empty())
			s += "*";
		s += "t" + std::to_string(j);
		if (e > 1)
			s += "^" + std::to_string(e);
	}
	std::string w;
	for (int j = 1; j <= n; ++j)
		if (m.ext & (1u << (j - 1))) {
			if (!w.empty())
				w += "^";
			w += "dt" + std::to_string(j);
		}
	if (!w.empty()) {
		if (!s.empty())
			s += "*";
		s += w;
	}
	return s;
}

} // namespace

std::string render(const Form &f)
{
	if (f.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[m, c] : f.terms()) {
		std::string mono = render_mono(m, f.dim());
		Rational a = abs(c);
		std::string body;
		if (mono.empty())
			body = a.str();
		else if (a.is_one())
			body = mono;
		else
			body = a.str() + "*" + mono;
		if (first)
			out += (c.sign() < 0 ? "-" : "") + body;
		else
			out += (c.sign() < 0 ? " - " : " + ") + body;
		first = false;
	}
	return out;
}

namespace {

int parse_index(const std::string &tok, size_t pos, int n, const std::string &text)
{
	if (pos >= tok.size())
		throw std::invalid_argument("missing index in '" + text + "'");
	for (size_t k = pos; k < tok.size(); ++k)
		if (!std::isdigit(static_cast<unsigned char>(tok[k])))
			throw std::invalid_argument("bad index in '" + text + "'");
	int i = std::stoi(tok.substr(pos));
	if (i > n)
		throw std::invalid_argument("index " + std::to_string(i) + " outside [0," + std::to_string(n) + "] in '" +
					    text + "'");
	return i;
}

std::vector<std::string> split(const std::string &s, char sep)
{
	std::vector<std::string> out;
	std::string cur;
	for (char ch : s) {
		if (ch == sep) {
			out.push_back(cur);
			cur.clear();
		} else {
			cur += ch;
		}
	}
	out.push_back(cur);
	return out;
}

} // namespace

Form parse_form(const std::string &text, int n)
{
	check_dim(n);
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			s += ch;
	if (s.empty())
		throw std::invalid_argument("empty form");
	std::vector<std::pair<int, std::string>> pieces;
	{
		int sign = 1;
		std::string cur;
		for (size_t k = 0; k < s.size(); ++k) {
			char ch = s[k];
			if ((ch == '+' || ch == '-') && !cur.empty() && cur.back() != '^') {
				pieces.emplace_back(sign, cur);
				cur.clear();
				sign = ch == '-' ? -1 : 1;
			} else if ((ch == '+' || ch == '-') && cur.empty()) {
				if (ch == '-')
					sign = -sign;
			} else {
				cur += ch;
			}
		}
		if (cur.empty())
			throw std::invalid_argument("dangling sign in '" + text + "'");
		pieces.emplace_back(sign, cur);
	}
	std::vector<RawTerm> raw;
	for (const auto &[sign, body] : pieces) {
		RawTerm term{Rational(sign), std::vector<int>(n + 1, 0), {}};
		for (const auto &factor : split(body, '*')) {
			if (factor.empty())
				throw std::invalid_argument("empty factor in '" + text + "'");
			if (factor.rfind("dt", 0) == 0) {
				for (const auto &w : split(factor, '^')) {
					if (w.rfind("dt", 0) != 0)
						throw std::invalid_argument("bad dt-word in '" + text + "'");
					term.dts.push_back(parse_index(w, 2, n, text));
				}
			} else if (factor[0] == 't') {
				auto parts = split(factor, '^');
				if (parts.size() > 2)
					throw std::invalid_argument("bad power in '" + text + "'");
				int i = parse_index(parts[0], 1, n, text);
				int e = 1;
				if (parts.size() == 2) {
					if (parts[1].empty() ||
					    !std::all_of(parts[1].begin(), parts[1].end(),
					                 [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
						throw std::invalid_argument("bad exponent in '" + text + "'");
					e = std::stoi(parts[1]);
				}
				term.t_exp[i] += e;
			} else {
				term.coeff *= Rational::parse(factor);
			}
		}
		raw.push_back(std::move(term));
	}
	return reduce_barycentric(raw, n);
}

} // namespace linf
