#include "helpers.hpp"

using namespace linf;
using testing::F;
using testing::Q;
using testing::V;

namespace {

// Three degree-0 generators with [e1,e2] = s1 e3, [e2,e3] = s2 e1, [e3,e1] = s3 e2.
Presentation rotation_like(int s1, int s2, int s3)
{
	Presentation g;
	int a = g.add_generator("e1", 0), b = g.add_generator("e2", 0), c = g.add_generator("e3", 0);
	g.set_bracket({a, b}, GVector::basis(c, s1));
	g.set_bracket({b, c}, GVector::basis(a, s2));
	g.set_bracket({c, a}, GVector::basis(b, s3));
	return g;
}

} // namespace

TEST_CASE("Koszul signs")
{
	CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
	CHECK(koszul_sign({1, 0}, {0, 1}) == 1);
	CHECK(koszul_sign({2, 0, 1}, {1, 1, 1}) == 1);
	CHECK(koszul_sign({0, 2, 1}, {0, 1, 1}) == -1);
	CHECK(lada_markl_exponent(1) == 1);
	CHECK(lada_markl_exponent(2) == 3);
	CHECK(lada_markl_exponent(3) == 6);
}

TEST_CASE("brackets are graded antisymmetric")
{
	Presentation h = heisenberg();
	CHECK(h.bracket({V(h, "e2"), V(h, "e1")}) == V(h, "-e3"));
	CHECK(h.bracket({V(h, "e1"), V(h, "e1")}).is_zero());
	CHECK(h.bracket({V(h, "2*e1 + e3"), V(h, "1/2*e2")}) == V(h, "e3"));

	Presentation d = dg_lie_01();
	CHECK(d.bracket({V(d, "v"), V(d, "a")}) == V(d, "-w"));
	CHECK(d.delta(V(d, "a + 2*c")) == V(d, "u + 2*w"));

	Presentation l = ternary_l3();
	CHECK(l.bracket({V(l, "b"), V(l, "a"), V(l, "u")}) == V(l, "-c"));
	CHECK(l.bracket({V(l, "u"), V(l, "a"), V(l, "b")}) == V(l, "c"));
	CHECK(l.bracket({V(l, "a"), V(l, "b")}).is_zero());
}

TEST_CASE("set_bracket rejects inconsistent entries")
{
	Presentation g;
	int a = g.add_generator("a", 0), b = g.add_generator("b", 0);
	g.add_generator("u", 1);
	CHECK_THROWS_AS(g.set_bracket({a, b}, GVector::basis(2)), std::invalid_argument);
	CHECK_THROWS_AS(g.set_bracket({a, a}, GVector::basis(b)), std::invalid_argument);
	CHECK_THROWS_AS(g.add_generator("a", 1), std::invalid_argument);
}

TEST_CASE("Jacobi identities")
{
	for (const auto &g : {zero_algebra(), abelian_with_differential(), heisenberg(), ut4(), dg_lie_01(), ternary_l3()})
		CHECK(check_jacobi(g, 4).ok());
	// Every sign choice on this table satisfies Jacobi: each Jacobiator term is [e_i, e_i].
	for (int s = 0; s < 8; ++s)
		CHECK(check_jacobi(rotation_like(s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1), 3).ok());

	// [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = e1: the Jacobiator on (e1,e2,e3) is e3.
	Presentation bad;
	int a = bad.add_generator("e1", 0), b = bad.add_generator("e2", 0), c = bad.add_generator("e3", 0);
	bad.set_bracket({a, b}, GVector::basis(c));
	bad.set_bracket({b, c}, GVector::basis(a));
	bad.set_bracket({a, c}, GVector::basis(a));
	Check j = check_jacobi(bad, 3);
	CHECK_FALSE(j.ok());
	CHECK(j.counterexample.find("e1") != std::string::npos);

	// delta must square to zero
	Presentation d2;
	int p = d2.add_generator("p", 0), q = d2.add_generator("q", 1), r = d2.add_generator("r", 2);
	d2.set_bracket({p}, GVector::basis(q));
	d2.set_bracket({q}, GVector::basis(r));
	CHECK_FALSE(check_jacobi(d2, 2).ok());
}

TEST_CASE("lower central series")
{
	CHECK(nilpotency_index(zero_algebra()) == 1);
	CHECK(nilpotency_index(abelian_with_differential()) == 2);
	CHECK(nilpotency_index(heisenberg()) == 3);
	CHECK(nilpotency_index(ut4()) == 4);
	CHECK(nilpotency_index(dg_lie_01()) == 3);
	CHECK(nilpotency_index(ternary_l3()) == 4);
	FiltrationReport r = lower_central(heisenberg());
	// F[i] holds F^{i+1}
	REQUIRE(r.F.size() == 3);
	CHECK(r.F[0].dim() == 3);
	CHECK(r.F[1].dim() == 1);
	CHECK(r.F[2].dim() == 0);
	CHECK_FALSE(lower_central(rotation_like(1, 1, 1)).nilpotent);
	CHECK_THROWS_AS(nilpotency_index(rotation_like(1, 1, 1)), std::domain_error);
}

TEST_CASE("curvature and Maurer-Cartan elements")
{
	Presentation g;
	int e = g.add_generator("e", 1), f = g.add_generator("f", 2);
	g.set_bracket({e, e}, GVector::basis(f));
	REQUIRE(check_jacobi(g, 3).ok());
	CHECK(curvature(g, V(g, "e")) == V(g, "1/2*f"));
	CHECK(curvature(g, V(g, "2*e")) == V(g, "2*f"));
	CHECK_FALSE(is_mc(g, V(g, "e")));
	CHECK(is_mc(g, GVector()));
	CHECK_FALSE(is_mc(g, V(g, "f")));

	Presentation d = dg_lie_01();
	CHECK(is_mc(d, V(d, "u - 3*v + w")));
	Presentation l = ternary_l3();
	CHECK(is_mc(l, V(l, "u")));
	CHECK(bianchi_residual(g, V(g, "e")).is_zero());
}

TEST_CASE("twisting by a Maurer-Cartan element")
{
	Presentation d = dg_lie_01();
	GVector mu = V(d, "v");
	CHECK(twisted_bracket(d, mu, {V(d, "a")}) == V(d, "u - w"));
	CHECK(twisted_bracket(d, mu, {V(d, "b")}) == V(d, "v"));
	CHECK(twisted_bracket(d, mu, {V(d, "a"), V(d, "b")}) == V(d, "c"));
	Presentation tw = twist(d, mu);
	CHECK(check_jacobi(tw, 4).ok());
	CHECK(tw.delta(V(tw, "a")) == V(tw, "u - w"));

	Presentation l = ternary_l3();
	Presentation tl = twist(l, V(l, "u"));
	CHECK(tl.bracket({V(tl, "a"), V(tl, "b")}) == V(tl, "c"));
	CHECK(check_jacobi(tl, 4).ok());
	CHECK_THROWS_AS(twist(d, V(d, "a")), std::invalid_argument);
}

TEST_CASE("tensor product with forms")
{
	Presentation d = dg_lie_01();
	int a = d.index("a"), u = d.index("u");
	TensorElement x = TensorElement::simple(1, a, F("t1", 1));
	TensorElement dx = TensorElement::simple(1, u, F("t1", 1)) + TensorElement::simple(1, a, F("dt1", 1));
	CHECK(tensor_d(d, x) == dx);
	CHECK(tensor_d(d, TensorElement::simple(1, u, F("t1", 1))) == -TensorElement::simple(1, u, F("dt1", 1)));

	Presentation h = heisenberg();
	TensorElement p = TensorElement::simple(1, h.index("e1"), F("dt1", 1));
	TensorElement q = TensorElement::simple(1, h.index("e2"), F("t1", 1));
	CHECK(tensor_bracket(h, {p, q}) == TensorElement::simple(1, h.index("e3"), F("t1*dt1", 1)));
	CHECK(tensor_bracket(h, {q, p}) == TensorElement::simple(1, h.index("e3"), F("-t1*dt1", 1)));

	// omega (x) x with |omega| = |x| = 1 picks up a sign when moved to x (x) omega
	CHECK(TensorElement::form_first(d, F("dt1", 1), V(d, "u")) == -TensorElement::simple(1, u, F("dt1", 1)));
	CHECK(TensorElement::form_first(d, F("dt1", 1), V(d, "a")) == TensorElement::simple(1, a, F("dt1", 1)));
}

TEST_CASE("d is a derivation of the tensor bracket and squares to zero")
{
	for (const auto &g : {dg_lie_01(), ternary_l3(), abelian_with_differential()}) {
		int n = 2;
		std::vector<TensorElement> elems;
		for (int b = 0; b < g.dim(); ++b)
			for (const auto &f : monomial_generators(n, 1))
				elems.push_back(TensorElement::simple(n, b, f));
		auto total = [&](const TensorElement &e) { return *e.total_degrees(g).begin(); };
		for (const auto &e : elems)
			CHECK(tensor_d(g, tensor_d(g, e)).is_zero());
		if (!g.is_dg_lie() || g.is_abelian())
			continue;
		for (size_t i = 0; i < elems.size(); i += 3)
			for (size_t j = 1; j < elems.size(); j += 4) {
				const auto &A = elems[i], &B = elems[j];
				TensorElement lhs = tensor_d(g, tensor_bracket(g, {A, B}));
				TensorElement rhs = tensor_bracket(g, {tensor_d(g, A), B}) +
						    (total(A) % 2 ? Rational(-1) : Rational(1)) * tensor_bracket(g, {A, tensor_d(g, B)});
				CHECK(lhs == rhs);
			}
	}
}

TEST_CASE("vertex evaluation and integration of tensors")
{
	Presentation h = heisenberg();
	TensorElement x = TensorElement::simple(1, 0, F("t1", 1)) + TensorElement::simple(1, 2, F("3*dt1", 1));
	CHECK(evaluate_vertex(1, x) == V(h, "e1"));
	CHECK(evaluate_vertex(0, x).is_zero());
	CHECK(integrate_chain({0, 1}, x) == V(h, "3*e3"));
	CHECK(face(x, 0) == TensorElement::constant(0, V(h, "e1")));
}
