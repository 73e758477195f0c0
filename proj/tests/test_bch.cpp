#include "helpers.hpp"

using namespace linf;
using testing::F;
using testing::Q;
using testing::V;

namespace {

// Reads coordinates back from a representation whose generators map to distinct matrix units.
GVector from_matrix(const MatrixRep &rep, const Matrix &m)
{
	GVector out;
	for (size_t i = 0; i < rep.images.size(); ++i)
		for (int r = 0; r < rep.size; ++r)
			for (int c = 0; c < rep.size; ++c)
				if (rep.images[i](r, c) == Q(1))
					out.add_term(static_cast<int>(i), m(r, c));
	return out;
}

GVector oracle(const MatrixRep &rep, const GVector &x, const GVector &y)
{
	return from_matrix(rep, oracle_bch(rep.apply(x), rep.apply(y)));
}

Presentation single(int degree)
{
	Presentation g;
	g.add_generator("x", degree);
	g.add_generator("y", degree);
	return g;
}

} // namespace

TEST_CASE("rooted trees")
{
	// Rooted unlabeled trees: 1, 1, 2, 4, 9, 20. Increasing labelings sum to (k-1)!.
	const std::vector<size_t> counts{1, 1, 2, 4, 9, 20};
	for (int k = 1; k <= 6; ++k) {
		auto trees = enumerate_trees(k);
		CHECK(trees.size() == counts[k - 1]);
		long total = 0;
		for (const auto &t : trees) {
			CHECK(t.tree.size() == k);
			CHECK(t.coefficient * automorphisms(t.tree) == linear_extensions(t.tree));
			total += t.coefficient;
		}
		CHECK(Rational(total) == factorial(k - 1));
		for (size_t i = 1; i < trees.size(); ++i)
			CHECK(trees[i - 1].tree < trees[i].tree);
	}
	RootedTree leaf, cherry{{leaf, leaf}}, path{{RootedTree{{leaf}}}};
	CHECK(automorphisms(cherry) == 2);
	CHECK(linear_extensions(cherry) == 2);
	CHECK(linear_extensions(path) == 1);
	CHECK(linear_extensions(RootedTree{{cherry, leaf}}) == 8);
	CHECK(automorphisms(RootedTree{{cherry, cherry}}) == 8);
}

TEST_CASE("tree sums")
{
	Presentation a = abelian_with_differential();
	GVector x = V(a, "q + 2*r");
	CHECK(tree_exponential(a, GVector(), x, 1) == V(a, "2*u"));
	CHECK(tree_exponential(a, GVector(), x, 2).is_zero());

	Presentation d = dg_lie_01();
	GVector mu = V(d, "v"), y = V(d, "a - b");
	// one vertex: [y]_mu = delta y + [mu, y]
	CHECK(tree_exponential(d, mu, y, 1) == d.delta(y) + d.bracket({mu, y}));
	CHECK(evaluate_tree(d, mu, y, RootedTree{}) == tree_exponential(d, mu, y, 1));
	for (int k = 1; k <= 3; ++k)
		CHECK(tree_recursion(d, mu, y, k) == tree_exponential(d, mu, y, k + 1));
	Presentation l = ternary_l3();
	for (int k = 1; k <= 3; ++k)
		CHECK(tree_recursion(l, V(l, "u"), V(l, "a + b"), k) == tree_exponential(l, V(l, "u"), V(l, "a + b"), k + 1));
}

TEST_CASE("one-simplices")
{
	Presentation h = heisenberg();
	GVector x = V(h, "e1 - 2*e3");
	CHECK(alpha1(h, GVector(), x) == TensorElement::constant(1, GVector()) +
					       TensorElement::simple(1, 0, F("dt1", 1)) +
					       TensorElement::simple(1, 2, F("-2*dt1", 1)));
	CHECK(rho1(h, GVector(), x).is_zero());

	Presentation a = abelian_with_differential();
	GVector mu = V(a, "v"), r = V(a, "r");
	// rho1(mu, -x) = mu - delta x
	CHECK(rho1(a, mu, -r) == V(a, "v - u"));
	CHECK(alpha1(a, mu, r) == TensorElement::constant(1, mu) + TensorElement::simple(1, a.index("u"), F("t1", 1)) +
				      TensorElement::simple(1, a.index("r"), F("dt1", 1)));

	Presentation d = dg_lie_01();
	Sampler rng(3);
	for (int k = 0; k < 5; ++k) {
		GVector m = rng.vector(d, 1), y = rng.vector(d, 0);
		TensorElement al = alpha1(d, m, y);
		CHECK(tensor_is_mc(d, al));
		CHECK(evaluate_vertex(0, al) == m);
		CHECK(evaluate_vertex(1, al) == rho1(d, m, y));
		CHECK(integrate_chain({0, 1}, al) == y);
		CHECK(al == solve_gauge_fixed(d, 1, 0, m, ch_boundary_data(d, 1, {{{1}, y}})).value);
		CHECK(deligne_action(d, -y, m) == rho1(d, m, y));
	}
	CHECK_THROWS_AS(alpha1(d, GVector(), V(d, "u")), std::invalid_argument);
	CHECK_THROWS_AS(alpha1(d, V(d, "a"), V(d, "b")), std::invalid_argument);
}

TEST_CASE("unipotent matrices")
{
	Matrix x = zero_matrix(3, 3);
	x(0, 1) = Q(1);
	x(1, 2) = Q(1);
	Matrix e = matrix_exp(x);
	Matrix expected = identity_matrix(3);
	expected(0, 1) = Q(1);
	expected(1, 2) = Q(1);
	expected(0, 2) = Q(1, 2);
	CHECK(e == expected);
	CHECK(matrix_log(e) == x);
	CHECK(is_strictly_upper(x));
	CHECK_FALSE(is_strictly_upper(e));
	CHECK_THROWS_AS(matrix_log(x), std::invalid_argument);
	CHECK_THROWS_AS(matrix_exp(e), std::invalid_argument);

	Matrix y = zero_matrix(3, 3);
	y(1, 2) = Q(3);
	// Heisenberg: log(e^x e^y) = x + y + 1/2 [x, y]
	Matrix comm = x * y - y * x;
	CHECK(oracle_bch(x, y) == x + y + comm * Q(1, 2));
}

TEST_CASE("faithful representations")
{
	Presentation h = heisenberg(), u = ut4();
	CHECK(heisenberg_rep(h).is_faithful_rep(h));
	CHECK(ut4_rep(u).is_faithful_rep(u));
	MatrixRep broken = heisenberg_rep(h);
	broken.images[2] = broken.images[2] * Q(2);
	CHECK_FALSE(broken.is_faithful_rep(h));
}

TEST_CASE("composition of 1-simplices is the Campbell-Hausdorff product")
{
	Presentation ab = single(0);
	CHECK(compose(ab, GVector(), V(ab, "x"), V(ab, "2*y - x")) == V(ab, "2*y"));

	Presentation h = heisenberg();
	MatrixRep rh = heisenberg_rep(h);
	Presentation u = ut4();
	MatrixRep ru = ut4_rep(u);
	Sampler rng(11);
	for (int k = 0; k < 6; ++k) {
		GVector x = rng.vector(h, 0), y = rng.vector(h, 0);
		CHECK(compose(h, GVector(), x, GVector()) == x);
		CHECK(compose(h, GVector(), GVector(), y) == y);
		CHECK(compose(h, GVector(), x, y) == oracle(rh, x, y));
		GVector p = rng.vector(u, 0), q = rng.vector(u, 0);
		CHECK(compose(u, GVector(), p, q) == oracle(ru, p, q));
	}
	CHECK_THROWS_AS(compose(abelian_with_differential(), GVector(), GVector(), GVector()), std::invalid_argument);
}

TEST_CASE("generalized Campbell-Hausdorff series in dimension two")
{
	Presentation h = heisenberg();
	MatrixRep rh = heisenberg_rep(h);
	Sampler rng(5);
	for (int k = 0; k < 6; ++k) {
		GVector x1 = rng.vector(h, 0), x2 = rng.vector(h, 0);
		GVector r = oriented_rho2(h, GVector(), x1, x2);
		// e^{x1} = e^{r} e^{x2}
		CHECK(r == oracle(rh, x1, -x2));
		CHECK(oriented_rho2(h, GVector(), x1, x1).is_zero());
	}
	// abelian: rho2 is linear, and the top label enters through its differential
	Presentation a = abelian_with_differential();
	CHECK(oriented_rho2(a, GVector(), V(a, "q"), V(a, "r"), V(a, "p")) == V(a, "q - r + q"));
	CHECK(generalized_ch(a, 2, GVector(), {{{1, 2}, V(a, "p")}}).value == V(a, "-q"));
	CHECK_THROWS_AS(generalized_ch(a, 2, GVector(), {{{1, 2}, V(a, "q")}}), std::invalid_argument);
	CHECK_THROWS_AS(generalized_ch(a, 2, GVector(), {{{2, 1}, V(a, "p")}}), std::invalid_argument);
	CHECK_THROWS_AS(generalized_ch(a, 2, GVector(), {{{3}, V(a, "q")}}), std::invalid_argument);
}

TEST_CASE("the gauge action is a group action")
{
	// The degree-0 part of dglie01 is the Heisenberg algebra a, b, c = [a, b].
	Presentation d = dg_lie_01(), h = heisenberg();
	MatrixRep rh = heisenberg_rep(h);
	auto to_h = [&](const GVector &x) {
		return V(h, "e1") * x.coeff(d.index("a")) + V(h, "e2") * x.coeff(d.index("b")) +
		       V(h, "e3") * x.coeff(d.index("c"));
	};
	auto from_h = [&](const GVector &x) {
		return V(d, "a") * x.coeff(0) + V(d, "b") * x.coeff(1) + V(d, "c") * x.coeff(2);
	};
	Sampler rng(13);
	for (int k = 0; k < 8; ++k) {
		GVector X = rng.vector(d, 0), Y = rng.vector(d, 0), alpha = rng.vector(d, 1);
		GVector xy = from_h(oracle(rh, to_h(X), to_h(Y)));
		CHECK(deligne_action(d, X, deligne_action(d, Y, alpha)) == deligne_action(d, xy, alpha));
		CHECK(is_mc(d, deligne_action(d, X, alpha)));
	}
	CHECK_THROWS_AS(deligne_action(ternary_l3(), GVector(), GVector()), std::invalid_argument);
	CHECK_THROWS_AS(deligne_action(d, GVector(), V(d, "a")), std::invalid_argument);
}

TEST_CASE("nerves of groupoids")
{
	Groupoid z2 = cyclic_group(2);
	z2.validate();
	NerveTruncation X = nerve_of_groupoid(z2, 3);
	CHECK(X.simplices[0].size() == 1);
	CHECK(X.simplices[1].size() == 2);
	CHECK(X.simplices[2].size() == 4);
	CHECK(X.simplices[3].size() == 8);
	CHECK(check_simplicial_identities(X).ok());
	CHECK(check_unique_fillers(X, 2).ok());
	CHECK(check_unique_fillers(X, 3).ok());
	CHECK(check_coskeletal(X).ok());

	// (g, -, g) is filled by the 2-simplex [g, g], whose long edge is g g = e
	std::vector<int> fill = groupoid_filler(z2, 1, {1, -1, 1});
	CHECK(fill == std::vector<int>{1, 1});
	int s = X.index_of(2, fill);
	CHECK(X.face[2][s][1] == X.index_of(1, {0}));

	Groupoid P = product(pair_groupoid(2), cyclic_group(3));
	P.validate();
	NerveTruncation Y = nerve_of_groupoid(P, 3);
	CHECK(Y.simplices[0].size() == 2);
	CHECK(Y.simplices[1].size() == 12);
	CHECK(Y.simplices[2].size() == 2 * 2 * 2 * 9);
	CHECK(check_simplicial_identities(Y).ok());
	CHECK(check_unique_fillers(Y, 2).ok());
	// The filler inverts restriction to the horn.
	for (int i = 0; i <= 2; ++i)
		for (int s = 0; s < static_cast<int>(Y.simplices[2].size()); ++s) {
			std::vector<int> faces(3, -1);
			for (int k = 0; k <= 2; ++k)
				if (k != i)
					faces[k] = Y.simplices[1][Y.face[2][s][k]][0];
			CHECK(groupoid_filler(P, i, faces) == Y.simplices[2][s]);
		}

	Groupoid broken = cyclic_group(3);
	broken.compose[1][1] = 0;
	CHECK_THROWS(broken.validate());
	CHECK(check_unique_fillers(nerve_of_groupoid(discrete_groupoid(3), 3), 3).ok());
}
