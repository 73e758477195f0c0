#include "helpers.hpp"

using namespace linf;
using testing::F;
using testing::Q;

namespace {

bool all_ok(const std::vector<Check> &cs)
{
	for (const auto &c : cs)
		if (!c.ok()) {
			MESSAGE(c.name << ": " << c.counterexample);
			return false;
		}
	return true;
}

} // namespace

TEST_CASE("elementary forms")
{
	CHECK(elementary_form({0}, 1) == F("t0", 1));
	CHECK(elementary_form({0, 1}, 1) == F("dt1", 1));
	CHECK(elementary_form({1, 0}, 1) == F("-dt1", 1));
	CHECK(elementary_form({0, 1, 2}, 2) == F("2*dt1^dt2", 2));
	CHECK(elementary_form({1, 2}, 2) == F("t1*dt2 - t2*dt1", 2));
	CHECK(elementary_form({1, 1}, 2).is_zero());
	std::vector<int> seq{2, 0, 1};
	CHECK(sort_with_sign(seq) == 1);
	seq = {1, 0, 2};
	CHECK(sort_with_sign(seq) == -1);
	CHECK(seq == std::vector<int>{0, 1, 2});
}

TEST_CASE("integration over chains")
{
	CHECK(integrate_chain({0, 1}, F("t1*dt1", 1)) == Q(1, 2));
	CHECK(integrate_chain({1, 0}, F("t1*dt1", 1)) == Q(-1, 2));
	CHECK(integrate_chain({0}, F("t0 + 5*t1", 1)) == Q(1));
	CHECK(integrate_chain({0, 1}, F("t1", 1)) == Q(0));
	// Dirichlet integral: int t1^a t2^b dt1 dt2 = a! b! / (a+b+2)!
	for (int a = 0; a <= 3; ++a)
		for (int b = 0; b <= 3; ++b) {
			Mono m;
			m.ext = 0b11;
			m.exp[0] = static_cast<uint8_t>(a);
			m.exp[1] = static_cast<uint8_t>(b);
			CHECK(integrate_chain({0, 1, 2}, Form::monomial(2, m)) ==
			      factorial(a) * factorial(b) / factorial(a + b + 2));
		}
}

TEST_CASE("Whitney forms integrate to the Kronecker delta")
{
	for (int n = 1; n <= 3; ++n)
		for (int k = 0; k <= n; ++k)
			for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask)
				for (unsigned other = 0; other < (1u << (n + 1)); ++other) {
					std::vector<int> J, K;
					for (int v = 0; v <= n; ++v) {
						if (mask >> v & 1)
							J.push_back(v);
						if (other >> v & 1)
							K.push_back(v);
					}
					if (static_cast<int>(J.size()) != k + 1 || K.size() != J.size())
						continue;
					CHECK(integrate_chain(K, elementary_form(J, n)) == Q(J == K ? 1 : 0));
				}
}

TEST_CASE("Stokes on the 2-simplex")
{
	for (const auto &f : monomial_generators(2, 3)) {
		if (f.ext_degrees() != std::set<int>{1})
			continue;
		Rational boundary = integrate_chain({1, 2}, f) - integrate_chain({0, 2}, f) + integrate_chain({0, 1}, f);
		CHECK(integrate_chain({0, 1, 2}, exterior_d(f)) == boundary);
	}
}

TEST_CASE("Poincare homotopies, Whitney projection and the Dupont operator on Omega_1")
{
	CHECK(poincare_h(0, F("dt1", 1)) == F("t1", 1));
	CHECK(poincare_h(0, F("t1*dt1", 1)) == F("1/2*t1^2", 1));
	CHECK(poincare_h(1, F("t1*dt1", 1)) == F("1/2*t1^2 - 1/2", 1));
	CHECK(poincare_h(0, F("t1", 1)).is_zero());
	CHECK(whitney_P(F("t1^2*dt1", 1)) == F("1/3*dt1", 1));
	CHECK(whitney_P(F("t1^2", 1)) == F("t1", 1));
	CHECK(dupont_s(F("t1*dt1", 1)) == F("1/2*t1^2 - 1/2*t1", 1));
	CHECK(dupont_s(F("dt1", 1)).is_zero());
}

TEST_CASE("h^i is a contraction onto the vertex i")
{
	// d h + h d = 1 - ev_i on Omega_n
	for (int n = 1; n <= 3; ++n)
		for (int i = 0; i <= n; ++i)
			for (const auto &f : monomial_generators(n, 2)) {
				Form lhs = exterior_d(poincare_h(i, f)) + poincare_h(i, exterior_d(f));
				Form rhs = f;
				if (f.ext_degrees() == std::set<int>{0})
					rhs -= Form::constant(n, evaluate_vertex(i, f));
				CHECK(lhs == rhs);
			}
}

TEST_CASE("Whitney forms are fixed by P and killed by s")
{
	for (int n = 1; n <= 3; ++n)
		for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
			std::vector<int> J;
			for (int v = 0; v <= n; ++v)
				if (mask >> v & 1)
					J.push_back(v);
			Form w = elementary_form(J, n);
			CHECK(whitney_P(w) == w);
			CHECK(dupont_s(w).is_zero());
		}
}

TEST_CASE("contraction and gauge identities")
{
	for (int n = 0; n <= 3; ++n) {
		CHECK(all_ok(verify_contraction(n, 3)));
		CHECK(all_ok(verify_gauge(n, 3)));
	}
	CHECK(verify_lambe_stasheff(2, 2).ok());
	CHECK(all_ok(verify_naturality(2, 2)));
}

TEST_CASE("gaugeify reproduces the Dupont contraction")
{
	ContractionBundle d = dupont_bundle(), gd = gaugeify(d);
	for (int n = 1; n <= 2; ++n)
		for (const auto &f : monomial_generators(n, 2)) {
			CHECK(gd.projection(f) == d.projection(f));
			CHECK(gd.homotopy(f) == d.homotopy(f));
		}
	CHECK(check_contraction_identity(gd, 2, 2).ok());
}
