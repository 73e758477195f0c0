#include "linf/dupont.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace linf {

int sort_with_sign(std::vector<int> &seq)
{
	int sign = 1;
	for (size_t a = 1; a < seq.size(); ++a)
		for (size_t b = a; b > 0 && seq[b - 1] >= seq[b]; --b) {
			if (seq[b - 1] == seq[b])
				return 0;
			std::swap(seq[b - 1], seq[b]);
			sign = -sign;
		}
	return sign;
}

namespace {

Form elementary_sorted(const std::vector<int> &seq, int n)
{
	thread_local std::map<std::pair<int, std::vector<int>>, Form> cache;
	auto key = std::make_pair(n, seq);
	if (auto it = cache.find(key); it != cache.end())
		return it->second;
	const int k = static_cast<int>(seq.size()) - 1;
	Form out(n);
	for (int j = 0; j <= k; ++j) {
		Form term = Form::t(n, seq[j]);
		for (int p = 0; p <= k; ++p)
			if (p != j)
				term = term * Form::dt(n, seq[p]);
		if (j & 1)
			out -= term;
		else
			out += term;
	}
	out *= factorial(k);
	cache.emplace(key, out);
	return out;
}

void check_seq(const std::vector<int> &seq, int n)
{
	if (seq.empty())
		throw std::invalid_argument("empty vertex sequence");
	for (int v : seq)
		if (v < 0 || v > n)
			throw std::out_of_range("vertex index out of range");
}

// All strictly increasing sequences of length len over {0..n}.
void increasing_sequences(int n, int len, std::vector<std::vector<int>> &out)
{
	std::vector<int> cur;
	auto rec = [&](auto &&self, int start) -> void {
		if (static_cast<int>(cur.size()) == len) {
			out.push_back(cur);
			return;
		}
		for (int v = start; v <= n; ++v) {
			cur.push_back(v);
			self(self, v + 1);
			cur.pop_back();
		}
	};
	rec(rec, 0);
}

std::string witness(const Form &f) { return "n=" + std::to_string(f.dim()) + " input " + render(f); }

} // namespace

Form elementary_form(const std::vector<int> &seq, int n)
{
	check_seq(seq, n);
	std::vector<int> s = seq;
	int sign = sort_with_sign(s);
	if (sign == 0)
		return Form(n);
	Form f = elementary_sorted(s, n);
	return sign < 0 ? -f : f;
}

Rational integrate_chain(const std::vector<int> &seq, const Form &f)
{
	check_seq(seq, f.dim());
	std::vector<int> s = seq;
	int sign = sort_with_sign(s);
	if (sign == 0)
		return Rational(0);
	const int k = static_cast<int>(s.size()) - 1;
	Form part = f.degree_part(k);
	if (part.is_zero())
		return Rational(0);
	Form g = pullback(SimplicialMap::inclusion(f.dim(), s), part);
	const unsigned full = (1u << k) - 1;
	Rational total(0);
	for (const auto &[m, c] : g.terms()) {
		if (m.ext != full)
			continue;
		Rational v = c;
		int sum = k;
		for (int j = 0; j < k; ++j) {
			v *= factorial(m.exp[j]);
			sum += m.exp[j];
		}
		total += v / factorial(sum);
	}
	return sign < 0 ? -total : total;
}

Form poincare_h(int i, const Form &f)
{
	const int n = f.dim();
	if (i < 0 || i > n)
		throw std::out_of_range("homotopy index out of range");
	Form g = contract_euler(i, f);
	Form out(n);
	Rational remainder(0);
	for (const auto &[m, c] : g.terms()) {
		int base = m.ext_degree();
		for (int j = 1; j <= n; ++j)
			if (j != i)
				base += m.exp[j - 1];
		if (i == 0) {
			if (base == 0)
				remainder += c;
			else
				out.add_term(m, c / Rational(base));
			continue;
		}
		// t_i -> u (t_i - 1) + 1, expanded binomially in u and in t_i.
		const int a = m.exp[i - 1];
		for (int r = 0; r <= a; ++r) {
			const int e = base + r;
			Rational cr = c * binomial(a, r);
			if (e == 0) {
				remainder += cr;
				continue;
			}
			for (int q = 0; q <= r; ++q) {
				Mono mm = m;
				mm.exp[i - 1] = static_cast<uint8_t>(q);
				Rational v = cr * binomial(r, q) / Rational(e);
				if ((r - q) & 1)
					v = -v;
				out.add_term(mm, v);
			}
		}
	}
	if (!remainder.is_zero())
		throw std::logic_error("poincare_h: contraction does not vanish at the base vertex");
	return out;
}

Form whitney_P(const Form &f)
{
	const int n = f.dim();
	Form out(n);
	for (int k : f.ext_degrees()) {
		std::vector<std::vector<int>> seqs;
		increasing_sequences(n, k + 1, seqs);
		for (const auto &s : seqs) {
			Rational c = integrate_chain(s, f);
			if (!c.is_zero())
				out += elementary_sorted(s, n) * c;
		}
	}
	return out;
}

Form dupont_s(const Form &f)
{
	const int n = f.dim();
	Form out(n);
	std::vector<int> seq;
	auto rec = [&](auto &&self, const Form &g, int start) -> void {
		for (int v = start; v <= n; ++v) {
			Form hg = poincare_h(v, g);
			if (hg.is_zero())
				continue;
			seq.push_back(v);
			// (-1)^k on the length k+1 terms keeps ds + sd = 1 - P with this h.
			if (seq.size() % 2 == 0)
				out -= elementary_sorted(seq, n) * hg;
			else
				out += elementary_sorted(seq, n) * hg;
			if (static_cast<int>(seq.size()) < n)
				self(self, hg, v + 1);
			seq.pop_back();
		}
	};
	rec(rec, f, 0);
	return out;
}

ContractionBundle dupont_bundle() { return {dupont_s, whitney_P}; }

Check check_contraction_identity(const ContractionBundle &c, int max_n, int max_degree)
{
	Check chk{"ds+sd=Id-P", 0, 0, {}, {}};
	for (int n = 0; n <= max_n; ++n)
		for (const auto &f : monomial_generators(n, max_degree)) {
			Form lhs = exterior_d(c.homotopy(f)) + c.homotopy(exterior_d(f));
			chk.record(lhs == f - c.projection(f), witness(f));
		}
	return chk;
}

ContractionBundle gaugeify(const ContractionBundle &c, int max_n, int max_degree)
{
	if (!check_contraction_identity(c, max_n, max_degree).ok())
		throw std::invalid_argument("gaugeify: input is not a contraction");
	FormOp s = c.homotopy, p = c.projection;
	FormOp tilde = [s, p](const Form &f) { return s(exterior_d(s(f - p(f)))); };
	return {tilde, p};
}

namespace {

// I_{i_0..i_k} = sign * eps^{i_k} h^{i_{k-1}} ... h^{i_0}. With h normalized by
// the Poincare identity and I by the factorial formula the sign is +1; a
// (-1)^k here fails already at k = 1.
int iterated_integral_sign(int k)
{
	(void)k;
	return 1;
}

Rational iterated_homotopy_value(const std::vector<int> &seq, const Form &f)
{
	Form g = f;
	for (size_t p = 0; p + 1 < seq.size(); ++p)
		g = poincare_h(seq[p], g);
	return evaluate_vertex(seq.back(), g);
}

} // namespace

std::vector<Check> verify_contraction(int n, int max_degree)
{
	Check contraction{"ds+sd=Id-P"}, poincare{"dh^i+h^id=Id-eps^i"}, ps{"Ps=0"}, sp{"sP=0"},
	    pp{"PP=P"};
	for (const auto &f : monomial_generators(n, max_degree)) {
		Form s = dupont_s(f), p = whitney_P(f);
		contraction.record(exterior_d(s) + dupont_s(exterior_d(f)) == f - p, witness(f));
		ps.record(whitney_P(s).is_zero(), witness(f));
		sp.record(dupont_s(p).is_zero(), witness(f));
		pp.record(whitney_P(p) == p, witness(f));
		for (int i = 0; i <= n; ++i) {
			Form lhs = exterior_d(poincare_h(i, f)) + poincare_h(i, exterior_d(f));
			Form rhs = f - Form::constant(n, evaluate_vertex(i, f));
			poincare.record(lhs == rhs, witness(f) + " i=" + std::to_string(i));
		}
	}
	return {contraction, poincare, ps, sp, pp};
}

std::vector<Check> verify_gauge(int n, int max_degree)
{
	Check ss{"s^2=0"}, hh{"h^ih^j+h^jh^i=0"}, lemma{"I=eps h...h"};
	std::vector<std::vector<int>> seqs;
	for (int len = 1; len <= std::min(3, n + 1); ++len)
		increasing_sequences(n, len, seqs);
	for (const auto &f : monomial_generators(n, max_degree)) {
		ss.record(dupont_s(dupont_s(f)).is_zero(), witness(f));
		std::vector<Form> h(n + 1);
		for (int i = 0; i <= n; ++i)
			h[i] = poincare_h(i, f);
		for (int i = 0; i <= n; ++i)
			for (int j = i; j <= n; ++j) {
				Form sum = poincare_h(i, h[j]) + poincare_h(j, h[i]);
				hh.record(sum.is_zero(), witness(f) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
			}
		for (const auto &seq : seqs) {
			int k = static_cast<int>(seq.size()) - 1;
			Rational lhs = integrate_chain(seq, f);
			Rational rhs = iterated_homotopy_value(seq, f) * Rational(iterated_integral_sign(k));
			lemma.record(lhs == rhs, witness(f));
		}
	}
	return {ss, hh, lemma};
}

Check verify_lambe_stasheff(int n, int max_degree)
{
	Check chk{"gaugeify(s)=s"};
	ContractionBundle tilde = gaugeify(dupont_bundle(), std::min(n, 2), std::min(max_degree, 3));
	for (const auto &f : monomial_generators(n, max_degree))
		chk.record(tilde.homotopy(f) == dupont_s(f), witness(f));
	return chk;
}

std::vector<Check> verify_naturality(int max_dim, int max_degree)
{
	Check s_nat{"f^*s=sf^*"}, p_nat{"f^*P=Pf^*"};
	for (int n = 0; n <= max_dim; ++n) {
		std::vector<SimplicialMap> maps;
		for (int k = 0; n >= 1 && k <= n; ++k)
			maps.push_back(SimplicialMap::face(n, k));
		for (int k = 0; k <= n && n + 1 <= max_dim; ++k)
			maps.push_back(SimplicialMap::degeneracy(n, k));
		auto gens = monomial_generators(n, max_degree);
		for (const auto &f : gens) {
			Form s = dupont_s(f), p = whitney_P(f);
			for (const auto &map : maps) {
				Form pf = pullback(map, f);
				std::string w = witness(f) + " map to dim " + std::to_string(map.m);
				s_nat.record(pullback(map, s) == dupont_s(pf), w);
				p_nat.record(pullback(map, p) == whitney_P(pf), w);
			}
		}
	}
	return {s_nat, p_nat};
}

} // namespace linf
