#include "linf/suites.hpp"

#include "linf/bch.hpp"
#include "linf/io.hpp"
#include "linf/models.hpp"

#include <sstream>

namespace linf {

namespace {

std::string show(const Rational &r) { return r.str(); }

Presentation fixture(const SuiteOptions &o, const std::string &name)
{
	return load_presentation(o.fixture_dir + "/" + name + ".json").algebra;
}

const std::vector<std::string> all_fixtures{"zero", "abelian", "heisenberg", "ut4", "dglie01", "l3"};

GVector sample_mc(const Presentation &g, Sampler &rng)
{
	for (int attempt = 0; attempt < 50; ++attempt) {
		GVector mu = rng.vector(g, 1);
		if (is_mc(g, mu))
			return mu;
	}
	return {};
}

// A few random terms x (x) t^a dt_S of total degree `degree` on Omega_n.
TensorElement sample_tensor(const Presentation &g, int n, int degree, Sampler &rng, int terms = 3)
{
	std::vector<std::pair<int, Form>> pool;
	for (const auto &f : monomial_generators(n, 1))
		for (int b = 0; b < g.dim(); ++b)
			if (g.degree(b) + *f.ext_degrees().begin() == degree)
				pool.emplace_back(b, f);
	TensorElement out(n);
	for (int k = 0; k < terms && !pool.empty(); ++k) {
		const auto &[b, f] = pool[rng.uniform(static_cast<int>(pool.size()))];
		out.add_term(b, f * rng.coefficient());
	}
	return out;
}

CHInputs sample_inputs(const Presentation &g, int n, Sampler &rng)
{
	CHInputs in;
	for (unsigned mask = 1; mask < (1u << n); ++mask) {
		std::vector<int> J;
		for (int v = 1; v <= n; ++v)
			if (mask >> (v - 1) & 1)
				J.push_back(v);
		GVector x = rng.vector(g, 1 - static_cast<int>(J.size()));
		if (!x.is_zero())
			in[J] = x;
	}
	return in;
}

std::string seq_str(const std::vector<int> &v)
{
	std::string s = "(";
	for (size_t i = 0; i < v.size(); ++i)
		s += (i ? "," : "") + std::to_string(v[i]);
	return s + ")";
}

void append(RunReport &r, std::vector<Check> cs)
{
	for (auto &c : cs)
		r.checks.push_back(std::move(c));
}

// ---- criteria ----

RunReport contraction(const SuiteOptions &o)
{
	RunReport r{"contraction", {"n<=" + std::to_string(o.n), "max-degree=" + std::to_string(o.max_degree)}, {}};
	for (int n = 1; n <= o.n; ++n) {
		auto cs = verify_contraction(n, o.max_degree);
		for (auto &c : cs)
			c.name += " n=" + std::to_string(n);
		append(r, cs);
	}
	return r;
}

RunReport gauge(const SuiteOptions &o)
{
	RunReport r{"gauge", {"n<=" + std::to_string(o.n), "max-degree=" + std::to_string(o.max_degree)}, {}};
	for (int n = 1; n <= o.n; ++n) {
		auto cs = verify_gauge(n, o.max_degree);
		for (auto &c : cs)
			c.name += " n=" + std::to_string(n);
		append(r, cs);
	}
	return r;
}

RunReport lambe_stasheff(const SuiteOptions &o)
{
	RunReport r{"lambe-stasheff", {"n<=" + std::to_string(o.n), "max-degree=" + std::to_string(o.max_degree)}, {}};
	for (int n = 1; n <= o.n; ++n) {
		Check c = verify_lambe_stasheff(n, o.max_degree);
		c.name += " n=" + std::to_string(n);
		r.checks.push_back(c);
	}
	return r;
}

RunReport naturality(const SuiteOptions &o)
{
	RunReport r{"naturality", {"m,n<=" + std::to_string(o.n), "max-degree=" + std::to_string(o.max_degree)}, {}};
	append(r, verify_naturality(o.n, o.max_degree));
	return r;
}

RunReport jacobi(const SuiteOptions &o)
{
	RunReport r{"jacobi", {"seed=" + std::to_string(o.seed)}, {}};
	Sampler rng(o.seed);
	for (const auto &name : all_fixtures) {
		Presentation g = fixture(o, name);
		Check j = check_jacobi(g, 4);
		j.name = "jacobi " + name;
		r.checks.push_back(j);

		if (!g.basis_of_degree(1).empty()) {
			Check tw{"twisted jacobi " + name};
			for (int k = 0; k < 5; ++k) {
				GVector mu = sample_mc(g, rng);
				Check c = check_jacobi(twist(g, mu), 4);
				tw.record(c.ok(), "mu=" + g.render(mu) + ": " + c.counterexample);
			}
			r.checks.push_back(tw);
		}

		Check bi{"bianchi " + name};
		for (int k = 0; k < o.samples; ++k) {
			GVector a = rng.vector(g, 1);
			GVector res = bianchi_residual(g, a);
			bi.record(res.is_zero(), "alpha=" + g.render(a) + " residual=" + g.render(res));
		}
		r.checks.push_back(bi);
	}
	return r;
}

RunReport solvers(const SuiteOptions &o)
{
	RunReport r{"solvers", {"seed=" + std::to_string(o.seed), "samples=" + std::to_string(o.samples)}, {}};
	Sampler rng(o.seed);
	for (const auto &name : all_fixtures) {
		Presentation g = fixture(o, name);
		Check mc{"solve_mc " + name}, trip{"(eps,R) round trip " + name}, gf{"gauge-fixed " + name},
		    gtrip{"(eps,PR) round trip " + name};
		for (int n = 1; n <= std::min(o.n, 3); ++n)
			for (int k = 0; k < o.samples; ++k) {
				const int i = rng.uniform(n + 1);
				GVector mu = sample_mc(g, rng);
				TensorElement rho = sample_tensor(g, n, 1, rng);
				TensorElement nu = tensor_R(g, i, rho);
				std::string w = "n=" + std::to_string(n) + " i=" + std::to_string(i) + " mu=" + g.render(mu) +
						" rho=" + render(g, rho);

				TensorElement a = solve_mc(g, n, i, mu, nu).value;
				mc.record(tensor_is_mc(g, a) && evaluate_vertex(i, a) == mu && tensor_R(g, i, a) == nu, w);
				trip.record(solve_mc(g, n, i, evaluate_vertex(i, a), tensor_R(g, i, a)).value == a, w);

				TensorElement pnu = tensor_P(nu);
				TensorElement b = solve_gauge_fixed(g, n, i, mu, pnu).value;
				gf.record(is_gamma_simplex(g, b) && evaluate_vertex(i, b) == mu &&
					      tensor_P(tensor_R(g, i, b)) == pnu,
					  w);
				gtrip.record(solve_gauge_fixed(g, n, i, evaluate_vertex(i, b), tensor_P(tensor_R(g, i, b)))
							 .value == b,
					     w);
			}
		r.checks.insert(r.checks.end(), {mc, trip, gf, gtrip});
	}
	return r;
}

// Heisenberg -> abelianization, and the free class-3 model onto its letters.
struct Quotient {
	Presentation target;
	Matrix matrix;
};

Quotient abelianize(const Presentation &g, int keep)
{
	Quotient q;
	q.target.name = g.name + "-ab";
	for (int i = 0; i < keep; ++i)
		q.target.add_generator(g.symbol(i), g.degree(i));
	for (int i = 0; i < keep; ++i) {
		GVector d, full = g.delta(GVector::basis(i));
		for (const auto &[j, c] : full.terms())
			if (j < keep)
				d.add_term(j, c);
		if (!d.is_zero())
			q.target.set_bracket({i}, d);
	}
	q.matrix = zero_matrix(keep, g.dim());
	for (int i = 0; i < keep; ++i)
		q.matrix(i, i) = Rational(1);
	return q;
}

RunReport horns(const SuiteOptions &o)
{
	RunReport r{"horns", {"seed=" + std::to_string(o.seed)}, {}};
	Sampler rng(o.seed);
	const int per_horn = std::max(1, o.samples / 4);
	for (const auto &name : {"heisenberg", "dglie01"}) {
		Presentation g = fixture(o, name);
		Check fill{std::string("gamma filler ") + name}, thin{std::string("thin ") + name},
		    faces{std::string("faces match ") + name}, twice{std::string("double run ") + name},
		    mc{std::string("MC filler faces ") + name};
		for (int n = 2; n <= 3; ++n)
			for (int i = 0; i <= n; ++i)
				for (int k = 0; k < per_horn; ++k) {
					GVector mu = sample_mc(g, rng);
					TensorElement sim = generalized_ch(g, n, mu, sample_inputs(g, n, rng)).simplex;
					Horn h = horn_of(sim, n, i);
					std::string w = "n=" + std::to_string(n) + " i=" + std::to_string(i) +
							" simplex=" + render(g, sim);
					TensorElement a = fill_horn_gamma(g, h);
					fill.record(is_gamma_simplex(g, a), w);
					thin.record(is_thin(a), w);
					bool same = true;
					for (int j = 0; j <= n; ++j)
						same = same && (j == i || face(a, j) == h.faces[j]);
					faces.record(same, w);
					twice.record(fill_horn_gamma(g, h) == a, w);
					TensorElement b = fill_horn_mc(g, h);
					bool mc_faces = tensor_is_mc(g, b);
					for (int j = 0; j <= n; ++j)
						mc_faces = mc_faces && (j == i || face(b, j) == h.faces[j]);
					mc.record(mc_faces, w);
				}
		r.checks.insert(r.checks.end(), {fill, thin, faces, twice, mc});
	}

	// Relative filling along surjections.
	Presentation heis = fixture(o, "heisenberg");
	Presentation free3 = free_dg_lie_class3();
	Check rel{"relative filler f(alpha)=target"};
	for (const Presentation *g : {&heis, &free3}) {
		Quotient q = abelianize(*g, g == &heis ? 2 : 6);
		Morphism f{g, &q.target, q.matrix};
		rel.record(f.is_strict(3), "morphism not strict: " + g->name);
		for (int n = 2; n <= 3; ++n)
			for (int i = 0; i <= n; ++i)
				for (int k = 0; k < 2; ++k) {
					CHInputs in = sample_inputs(*g, n, rng);
					TensorElement sim = generalized_ch(*g, n, GVector(), in).simplex;
					CHInputs image;
					for (const auto &[J, x] : in)
						image[J] = f.apply(x);
					// The top label only enters the face opposite vertex 0, so it
					// may be changed when that face is the missing one.
					std::vector<int> all;
					for (int v = 1; v <= n; ++v)
						all.push_back(v);
					if (i == 0)
						image[all] = image[all] + rng.vector(q.target, 1 - n);
					TensorElement target = generalized_ch(q.target, n, GVector(), image).simplex;
					std::string w = g->name + " n=" + std::to_string(n) + " i=" + std::to_string(i) +
							" simplex=" + render(*g, sim) + " target=" + render(q.target, target);
					try {
						TensorElement a = fill_horn_relative(f, horn_of(sim, n, i), target);
						bool faces_ok = true;
						for (int j = 0; j <= n; ++j)
							faces_ok = faces_ok && (j == i || face(a, j) == face(sim, j));
						rel.record(f.apply(a) == target && faces_ok && is_gamma_simplex(*g, a), w);
					} catch (const std::invalid_argument &e) {
						rel.record(false, w + ": " + e.what());
					}
				}
	}
	r.checks.push_back(rel);
	return r;
}

RunReport rho2_series(const SuiteOptions &)
{
	RunReport r{"rho2-series", {"mu=0"}, {}};
	Presentation g = free_dg_lie_class3();
	auto b = [&](const char *s) { return GVector::basis(g.index(s)); };
	GVector x1 = b("x1"), x2 = b("x2"), x12 = b("x12");
	auto br = [&](const GVector &p, const GVector &q) { return g.bracket({p, q}); };
	GVector s = x1 + x2;

	struct Term {
		std::string label;
		GVector value;
		Rational expected;
	};
	std::vector<Term> terms{
	    {"x1", x1, Rational(1)},
	    {"x2", x2, Rational(-1)},
	    {"[x1,x2]", br(x1, x2), Rational(1, 2)},
	    {"[x12]", g.delta(x12), Rational(1, 2)},
	    {"[x1+x2,[x1,x2]]", br(s, br(x1, x2)), Rational(1, 12)},
	    {"[[x1+x2],x12]", br(g.delta(s), x12), Rational(1, 6)},
	    {"[x1+x2,[x12]]", br(s, g.delta(x12)), Rational(-1, 12)},
	};
	GVector rho = oriented_rho2(g, GVector(), x1, x2, x12);

	// Coordinates of rho in the span of the reference terms.
	Matrix A = zero_matrix(g.dim(), static_cast<int>(terms.size()));
	for (size_t k = 0; k < terms.size(); ++k)
		A.col(static_cast<int>(k)) = g.to_vector(terms[k].value);
	auto coords = solve_canonical(A, g.to_vector(rho));
	Check span{"rho2 lies in the span of the reference terms"};
	span.record(coords.has_value(), "rho2=" + g.render(rho));
	span.notes.push_back("rho2 = " + g.render(rho));
	GVector plain = generalized_ch(g, 2, GVector(), {{{1}, x1}, {{2}, x2}, {{1, 2}, x12}}).value;
	span.notes.push_back("opposite orientation (labels not negated): " + g.render(plain));
	r.checks.push_back(span);
	for (size_t k = 0; k < terms.size(); ++k) {
		Check c{"coefficient of " + terms[k].label};
		Rational got = coords ? (*coords)(static_cast<int>(k)) : Rational(0);
		c.record(coords && got == terms[k].expected,
			 "expected " + show(terms[k].expected) + ", computed " + show(got));
		r.checks.push_back(c);
	}

	// The ternary term needs a genuine 3-bracket.
	Presentation t = ternary_free();
	GVector t1 = GVector::basis(t.index("x1")), t2 = GVector::basis(t.index("x2"));
	GVector tern = t.bracket({t.delta(t1 + t2), t1, t2});
	GVector trho = oriented_rho2(t, GVector(), t1, t2);
	GVector rest = trho - t1 + t2;
	Check c{"coefficient of [[x1+x2],x1,x2]"};
	Rational got;
	if (!tern.is_zero()) {
		const auto &[i, ci] = *tern.terms().begin();
		got = rest.coeff(i) / ci;
	}
	c.record(rest == tern * got && got == Rational(1, 6),
		 "expected 1/6, computed " + show(got) + " (rho2 = " + t.render(trho) + ")");
	r.checks.push_back(c);
	return r;
}

RunReport monodromy(const SuiteOptions &o)
{
	RunReport r{"monodromy", {"seed=" + std::to_string(o.seed), "samples=" + std::to_string(o.samples)}, {}};
	if (!o.rep.empty() && o.rep != "heisenberg" && o.rep != "ut4")
		throw UsageError("unknown representation '" + o.rep + "'");
	Sampler rng(o.seed);
	for (const auto &name : {"heisenberg", "ut4"}) {
		if (!o.rep.empty() && o.rep != name)
			continue;
		Presentation g = fixture(o, name);
		MatrixRep rep = std::string(name) == "ut4" ? ut4_rep(g) : heisenberg_rep(g);
		Check faithful{std::string("faithful representation ") + name};
		faithful.record(rep.is_faithful_rep(g));
		Check mono{std::string("e^x1 = e^rho2 e^x2 ") + name};
		for (int k = 0; k < o.samples; ++k) {
			GVector x1 = rng.vector(g, 0), x2 = rng.vector(g, 0);
			GVector rho = oriented_rho2(g, GVector(), x1, x2);
			Matrix lhs = matrix_exp(rep.apply(x1));
			Matrix rhs = Matrix(matrix_exp(rep.apply(rho)) * matrix_exp(rep.apply(x2)));
			mono.record(lhs == rhs, "x1=" + g.render(x1) + " x2=" + g.render(x2) + " rho2=" + g.render(rho));
		}
		r.checks.insert(r.checks.end(), {faithful, mono});
	}
	return r;
}

RunReport associativity(const SuiteOptions &o)
{
	RunReport r{"associativity", {"seed=" + std::to_string(o.seed), "samples=" + std::to_string(o.samples)}, {}};
	Sampler rng(o.seed);
	for (const auto &name : {"abelian", "heisenberg", "ut4", "dglie01"}) {
		Presentation g = fixture(o, name);
		Check z{std::string("rho3=0 ") + name}, assoc{std::string("compose associative ") + name};
		const bool nonneg = *g.degree_set().begin() >= 0;
		for (int k = 0; k < o.samples; ++k) {
			GVector mu = sample_mc(g, rng);
			GVector x = rng.vector(g, 0), y = rng.vector(g, 0), w = rng.vector(g, 0);
			GVector r3 = rho3(g, mu, x, y, w);
			std::string wit = "mu=" + g.render(mu) + " x=" + g.render(x) + " y=" + g.render(y) +
					  " z=" + g.render(w);
			z.record(r3.is_zero(), wit + " rho3=" + g.render(r3));
			if (nonneg) {
				GVector mx = rho1(g, mu, x);
				GVector left = compose(g, mu, compose(g, mu, x, y), w);
				GVector right = compose(g, mu, x, compose(g, mx, y, w));
				assoc.record(left == right, wit);
			}
		}
		r.checks.push_back(z);
		if (nonneg)
			r.checks.push_back(assoc);
	}
	Presentation l3 = fixture(o, "l3");
	Check report{"rho3 on the 3-bracket fixture (reported only)"};
	Sampler lrng(o.seed + 1);
	int nonzero = 0;
	for (int k = 0; k < 5; ++k) {
		GVector mu = sample_mc(l3, lrng);
		GVector x = lrng.vector(l3, 0), y = lrng.vector(l3, 0), w = lrng.vector(l3, 0);
		GVector r3 = rho3(l3, mu, x, y, w);
		nonzero += !r3.is_zero();
		report.notes.push_back("mu=" + l3.render(mu) + " x=" + l3.render(x) + " y=" + l3.render(y) +
				       " z=" + l3.render(w) + " -> rho3=" + l3.render(r3));
	}
	report.notes.push_back(std::to_string(nonzero) + " of 5 samples nonzero");
	r.checks.push_back(report);
	return r;
}

RunReport trees(const SuiteOptions &o)
{
	RunReport r{"trees", {"seed=" + std::to_string(o.seed), "samples=" + std::to_string(o.samples)}, {}};
	Check shapes{"epsilon^k term sets, k<=3"};
	const std::vector<std::vector<std::pair<std::string, long>>> reference{
	    {{"[x]", 1}}, {{"[x,[x]]", 1}}, {{"[x,[x,[x]]]", 1}, {"[x,[x],[x]]", 1}}};
	for (int k = 1; k <= 3; ++k) {
		std::vector<std::pair<std::string, long>> got;
		for (const auto &t : enumerate_trees(k))
			got.emplace_back(t.tree.str(), t.coefficient);
		std::sort(got.begin(), got.end());
		auto want = reference[k - 1];
		std::sort(want.begin(), want.end());
		shapes.record(got == want, "k=" + std::to_string(k));
	}
	r.checks.push_back(shapes);

	Check counts{"tree counts 1,1,2,4,9"};
	const int expected[] = {1, 1, 2, 4, 9};
	for (int k = 1; k <= 5; ++k)
		counts.record(static_cast<int>(enumerate_trees(k).size()) == expected[k - 1], "k=" + std::to_string(k));
	r.checks.push_back(counts);

	Sampler rng(o.seed);
	Check ode{"ODE recursion k<=4"}, a1{"alpha1 = solve_gauge_fixed"}, dl{"Deligne action"};
	for (const auto &name : {"abelian", "heisenberg", "ut4", "dglie01", "l3"}) {
		Presentation g = fixture(o, name);
		for (int s = 0; s < 4; ++s) {
			GVector mu = sample_mc(g, rng), x = rng.vector(g, 0);
			std::string w = std::string(name) + " mu=" + g.render(mu) + " x=" + g.render(x);
			for (int k = 0; k <= 3; ++k)
				ode.record(tree_recursion(g, mu, x, k) == tree_exponential(g, mu, x, k + 1),
					   w + " k=" + std::to_string(k));
			TensorElement beta = TensorElement::form_first(g, elementary_form({1}, 1), x);
			TensorElement solved = solve_gauge_fixed(g, 1, 0, mu, tensor_d(g, beta)).value;
			TensorElement closed = alpha1(g, mu, x);
			a1.record(closed == solved, w);
		}
		if (g.is_dg_lie())
			for (int s = 0; s < o.samples; ++s) {
				GVector mu = sample_mc(g, rng), x = rng.vector(g, 0);
				GVector e = deligne_action(g, x, mu);
				dl.record(is_mc(g, e) && e == rho1(g, mu, -x),
					  std::string(name) + " mu=" + g.render(mu) + " x=" + g.render(x));
			}
	}
	r.checks.insert(r.checks.end(), {ode, a1, dl});
	return r;
}

RunReport dold_kan(const SuiteOptions &o)
{
	RunReport r{"dold-kan", {"n<=3"}, {}};
	for (const auto &name : {"abelian", "zero"}) {
		Presentation g = fixture(o, name);
		Check c{std::string("gamma_n = cocycles ") + name};
		for (int n = 0; n <= 3; ++n) {
			DoldKanReport d = dold_kan_compare(g, n);
			c.record(d.gamma_dim == d.cocycle_dim && d.whitney && d.bijective,
				 "n=" + std::to_string(n) + " gamma=" + std::to_string(d.gamma_dim) +
				     " cocycles=" + std::to_string(d.cocycle_dim));
			c.notes.push_back("n=" + std::to_string(n) + ": dim " + std::to_string(d.gamma_dim));
		}
		r.checks.push_back(c);
	}
	return r;
}

RunReport groupoid(const SuiteOptions &o)
{
	RunReport r{"groupoid", {"seed=" + std::to_string(o.seed)}, {}};
	const std::vector<std::pair<std::string, Groupoid>> gs{
	    {"Z/2", cyclic_group(2)}, {"pair(2)xZ/2", product(pair_groupoid(2), cyclic_group(2))}};
	for (const auto &[name, G] : gs) {
		NerveTruncation X = nerve_of_groupoid(G, 3);
		Check s = check_simplicial_identities(X);
		s.name += " " + name;
		Check f2 = check_unique_fillers(X, 2), f3 = check_unique_fillers(X, 3), cosk = check_coskeletal(X);
		f2.name += " " + name;
		f3.name += " " + name;
		cosk.name += " " + name;
		Check formula{"filler formulas " + name};
		for (const auto &chain : X.simplices[2]) {
			int x = X.index_of(2, chain);
			for (int i = 0; i <= 2; ++i) {
				std::vector<int> f(3, -1);
				for (int j = 0; j <= 2; ++j)
					if (j != i)
						f[j] = X.simplices[1][X.face[2][x][j]][0];
				formula.record(groupoid_filler(G, i, f) == chain, seq_str(chain) + " i=" + std::to_string(i));
			}
		}
		r.checks.insert(r.checks.end(), {s, f2, f3, cosk, formula});
	}

	Presentation g = fixture(o, "heisenberg");
	MatrixRep rep = heisenberg_rep(g);
	Sampler rng(o.seed);
	Check law{"gamma(heisenberg) composition = matrix product"};
	for (int k = 0; k < o.samples; ++k) {
		GVector x = rng.vector(g, 0), y = rng.vector(g, 0);
		GVector c = compose(g, GVector(), x, y);
		law.record(matrix_exp(rep.apply(c)) == Matrix(matrix_exp(rep.apply(x)) * matrix_exp(rep.apply(y))),
			   "x=" + g.render(x) + " y=" + g.render(y) + " xy=" + g.render(c));
	}
	r.checks.push_back(law);
	return r;
}

using Runner = RunReport (*)(const SuiteOptions &);

const std::vector<std::pair<std::string, Runner>> &table()
{
	static const std::vector<std::pair<std::string, Runner>> t{
	    {"contraction", contraction}, {"gauge", gauge},
	    {"lambe-stasheff", lambe_stasheff}, {"naturality", naturality},
	    {"jacobi", jacobi}, {"solvers", solvers},
	    {"horns", horns}, {"rho2-series", rho2_series},
	    {"monodromy", monodromy}, {"associativity", associativity},
	    {"trees", trees}, {"dold-kan", dold_kan},
	    {"groupoid", groupoid},
	};
	return t;
}

} // namespace

const std::vector<std::string> &suite_ids()
{
	static const std::vector<std::string> ids = [] {
		std::vector<std::string> v;
		for (const auto &[id, fn] : table())
			v.push_back(id);
		return v;
	}();
	return ids;
}

RunReport run_suite(const std::string &id, const SuiteOptions &opts)
{
	for (const auto &[name, fn] : table())
		if (name == id)
			return fn(opts);
	throw UsageError("unknown suite '" + id + "'");
}

} // namespace linf
