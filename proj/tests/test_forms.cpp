#include "helpers.hpp"

using namespace linf;
using testing::F;
using testing::Q;

TEST_CASE("barycentric reduction eliminates t0 and dt0")
{
	CHECK(F("t0*dt1", 1) == F("dt1 - t1*dt1", 1));
	CHECK(F("dt0", 2) == F("-dt1 - dt2", 2));
	CHECK(F("t0 + t1 + t2", 2) == Form::constant(2, Q(1)));
	CHECK(F("dt0 + dt1 + dt2", 2).is_zero());

	// dt0 ^ dt1 = (-dt1 - dt2) ^ dt1 = dt1 ^ dt2
	std::vector<RawTerm> raw{{Q(1), {0, 0, 0}, {0, 1}}};
	CHECK(reduce_barycentric(raw, 2) == F("dt1^dt2", 2));
	// repeated dt vanishes, reversed word picks up a sign
	CHECK(reduce_barycentric({{Q(3), {0, 1, 0}, {2, 2}}}, 2).is_zero());
	CHECK(reduce_barycentric({{Q(1), {0, 0, 0}, {2, 1}}}, 2) == -F("dt1^dt2", 2));
}

TEST_CASE("parse and render round trip")
{
	for (int n = 0; n <= 3; ++n)
		for (const auto &f : monomial_generators(n, 2)) {
			Form g = f * Q(-3, 2) + f * f;
			CHECK(parse_form(render(g), n) == g);
		}
	CHECK_THROWS_AS(parse_form("t3", 2), std::invalid_argument);
	CHECK_THROWS_AS(parse_form("t1 +", 1), std::invalid_argument);
	CHECK_THROWS_AS(parse_form("dt1^x", 1), std::invalid_argument);
}

TEST_CASE("exterior derivative")
{
	CHECK(exterior_d(F("t1", 1)) == F("dt1", 1));
	CHECK(exterior_d(F("t1^2*dt2", 2)) == F("2*t1*dt1^dt2", 2));
	CHECK(exterior_d(F("t0", 1)) == F("-dt1", 1));
	CHECK(exterior_d(F("dt1", 1)).is_zero());
	CHECK(exterior_d(Form::constant(3, Q(5))).is_zero());
}

TEST_CASE("d squares to zero and is a graded derivation")
{
	for (int n = 0; n <= 3; ++n) {
		auto gens = monomial_generators(n, 2);
		for (const auto &a : gens) {
			CHECK(exterior_d(exterior_d(a)).is_zero());
			for (const auto &b : gens) {
				int p = *a.ext_degrees().begin();
				Rational sign = p % 2 ? Q(-1) : Q(1);
				CHECK(exterior_d(a * b) == exterior_d(a) * b + sign * (a * exterior_d(b)));
			}
		}
	}
}

TEST_CASE("wedge is graded commutative and associative")
{
	auto gens = monomial_generators(2, 1);
	for (const auto &a : gens)
		for (const auto &b : gens) {
			int p = *a.ext_degrees().begin(), q = *b.ext_degrees().begin();
			CHECK(a * b == ((p * q) % 2 ? Q(-1) : Q(1)) * (b * a));
			for (const auto &c : gens)
				CHECK((a * b) * c == a * (b * c));
		}
	CHECK((F("dt1", 2) * F("dt1", 2)).is_zero());
}

TEST_CASE("pullback along coface and codegeneracy maps")
{
	// d_0 : [1] -> [2] sends e0, e1 to e1, e2, so t0 pulls back to 0.
	CHECK(pullback(SimplicialMap::face(2, 0), F("t0", 2)).is_zero());
	CHECK(pullback(SimplicialMap::face(2, 0), F("t1", 2)) == F("t0", 1));
	CHECK(pullback(SimplicialMap::face(2, 0), F("dt2", 2)) == F("dt1", 1));
	CHECK(pullback(SimplicialMap::face(2, 2), F("dt2", 2)).is_zero());
	// s_0 : [2] -> [1] collapses e0, e1.
	CHECK(pullback(SimplicialMap::degeneracy(1, 0), F("t0", 1)) == F("t0 + t1", 2));
	CHECK(pullback(SimplicialMap::degeneracy(1, 0), F("t1", 1)) == F("t2", 2));
}

TEST_CASE("pullback is functorial and commutes with d and wedge")
{
	for (int n = 1; n <= 3; ++n)
		for (int k = 0; k <= n; ++k) {
			SimplicialMap f = SimplicialMap::face(n, k);
			for (const auto &a : monomial_generators(n, 2)) {
				CHECK(pullback(f, exterior_d(a)) == exterior_d(pullback(f, a)));
				CHECK(pullback(f, a * F("t1 - dt1", n)) == pullback(f, a) * pullback(f, F("t1 - dt1", n)));
				for (int j = 0; n >= 2 && j < n; ++j) {
					SimplicialMap g = SimplicialMap::face(n - 1, j);
					CHECK(pullback(f.after(g), a) == pullback(g, pullback(f, a)));
				}
			}
		}
	// cosimplicial identity d_j d_i = d_i d_{j-1} for i < j
	for (int i = 0; i < 3; ++i)
		for (int j = i + 1; j <= 3; ++j)
			CHECK(SimplicialMap::face(3, j).after(SimplicialMap::face(2, i)) ==
			      SimplicialMap::face(3, i).after(SimplicialMap::face(2, j - 1)));
}

TEST_CASE("vertex evaluation")
{
	CHECK(evaluate_vertex(0, F("t1", 1)) == Q(0));
	CHECK(evaluate_vertex(1, F("t1", 1)) == Q(1));
	CHECK(evaluate_vertex(0, F("t0^2 + 3", 2)) == Q(4));
	CHECK(evaluate_vertex(2, F("t2*t1 + 1/2*t2", 2)) == Q(1, 2));
	CHECK(evaluate_vertex(1, F("dt1", 1)) == Q(0));
}

TEST_CASE("contraction with the Euler fields")
{
	// E_i = sum_j (t_j - delta_ij) d/dt_j
	CHECK(contract_euler(0, F("dt1", 1)) == F("t1", 1));
	CHECK(contract_euler(1, F("dt1", 1)) == F("t1 - 1", 1));
	CHECK(contract_euler(0, F("dt0", 1)) == F("t0 - 1", 1));
	CHECK(contract_euler(0, F("dt1^dt2", 2)) == F("t1*dt2 - t2*dt1", 2));
	CHECK(contract_euler(1, F("t0*dt1 - t1*dt0", 1)) == F("-t0", 1));
	for (int n = 1; n <= 3; ++n)
		for (int i = 0; i <= n; ++i)
			for (const auto &a : monomial_generators(n, 1)) {
				CHECK(contract_euler(i, contract_euler(i, a)).is_zero());
				// E_i vanishes at vertex i, so contracted 1-forms vanish there
				if (a.ext_degrees() == std::set<int>{1})
					CHECK(evaluate_vertex(i, contract_euler(i, a)) == Q(0));
			}
}
