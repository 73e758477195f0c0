#include "helpers.hpp"

#include <fstream>

using namespace linf;
using testing::F;
using testing::Q;
using testing::V;

namespace {

std::string fixture(const std::string &name) { return std::string(LINF_FIXTURE_DIR) + "/" + name + ".json"; }

Diagnostic diagnose(const std::string &text)
{
	try {
		parse_presentation(text, "t.json");
	} catch (const LoadError &e) {
		return e.diagnostic;
	}
	return {};
}

} // namespace

TEST_CASE("bundled fixtures match the builders")
{
	const std::vector<std::pair<std::string, Presentation>> cases{
	    {"zero", zero_algebra()}, {"abelian", abelian_with_differential()}, {"heisenberg", heisenberg()},
	    {"ut4", ut4()},	  {"dglie01", dg_lie_01()},		       {"l3", ternary_l3()}};
	for (const auto &[name, g] : cases) {
		PresentationFile pf = load_presentation(fixture(name), 4);
		CHECK(pf.algebra == g);
		REQUIRE(pf.jacobi.has_value());
		CHECK(pf.jacobi->ok());
		CHECK(pf.filtration.nilpotent);
	}
	CHECK(load_presentation(fixture("heisenberg")).filtration.index == 3);
}

TEST_CASE("presentation round trip")
{
	for (const auto &g : {heisenberg(), dg_lie_01(), ternary_l3(), abelian_with_differential(), ternary_free()}) {
		Presentation back = parse_presentation(write_presentation(g));
		CHECK(back == g);
		CHECK(write_presentation(back) == write_presentation(g));
	}
}

TEST_CASE("empty generator list is the zero algebra")
{
	Presentation g = parse_presentation(R"({"name": "empty", "generators": [], "brackets": []})");
	CHECK(g.dim() == 0);
	CHECK(nilpotency_index(g) == 1);
}

TEST_CASE("diagnostics point at the offending entry")
{
	const std::string wrong_degree = R"({
  "generators": [
    {"symbol": "a", "degree": 0},
    {"symbol": "u", "degree": 1}
  ],
  "brackets": [
    {"args": ["a"], "value": [{"symbol": "u", "coeff": "1"}]},
    {"args": ["a", "u"], "value": [{"symbol": "a", "coeff": "1"}]}
  ]
})";
	Diagnostic d = diagnose(wrong_degree);
	CHECK(d.file == "t.json");
	CHECK(d.location == "/brackets/1");
	CHECK(d.line == 8);
	CHECK(d.message.find("degree") != std::string::npos);

	d = diagnose(R"({"generators": [{"symbol": "a", "degree": 0}, {"symbol": "a", "degree": 1}]})");
	CHECK(d.location == "/generators/1/symbol");
	CHECK(d.message.find("duplicate") != std::string::npos);

	d = diagnose(R"({"generators": [{"symbol": "1x", "degree": 0}]})");
	CHECK(d.location == "/generators/0/symbol");

	d = diagnose(R"({"generators": [{"symbol": "a", "degree": 0}],
"brackets": [{"args": ["a", "b"], "value": []}]})");
	CHECK(d.message.find("unknown symbol 'b'") != std::string::npos);
	CHECK(d.line == 2);

	d = diagnose(R"({"generators": [{"symbol": "a", "degree": 0}, {"symbol": "b", "degree": 0}],
"brackets": [{"args": ["a", "b"], "value": [{"symbol": "a", "coeff": "1/0"}]}]})");
	CHECK(d.location == "/brackets/0/value/0/coeff");

	d = diagnose("{\n  \"generators\": [\n    {\"symbol\": \"a\" \"degree\": 0}\n  ]\n}");
	CHECK(d.line == 3);
	CHECK(d.message.find("parse error") != std::string::npos);

	d = diagnose(R"({"generators": [{"symbol": "a", "degree": 0}, {"symbol": "b", "degree": 0}, {"symbol": "c", "degree": 0}],
"max_arity": 2,
"brackets": [{"args": ["a", "b", "c"], "value": []}]})");
	CHECK(d.message.find("max_arity") != std::string::npos);

	CHECK_THROWS_AS(load_presentation("/nonexistent/file.json"), LoadError);
}

TEST_CASE("vector expressions")
{
	Presentation g = free_dg_lie_class3();
	Sampler rng(2);
	for (int k = 0; k < 20; ++k) {
		GVector x = rng.any(g);
		CHECK(parse_gvector(g, g.render(x)) == x);
	}
	Presentation h = heisenberg();
	CHECK(parse_gvector(h, "0").is_zero());
	CHECK(parse_gvector(h, " e1 - 1/2 * e3 + e1") == V(h, "2*e1 - 1/2*e3"));
	CHECK(h.render(V(h, "e3 - 2/3*e1")) == "-2/3*e1 + e3");
	CHECK_THROWS_AS(parse_gvector(h, "e4"), std::invalid_argument);
	CHECK_THROWS_AS(parse_gvector(h, ""), std::invalid_argument);
	CHECK_THROWS_AS(parse_gvector(h, "e1 +"), std::invalid_argument);
}

TEST_CASE("simplex files")
{
	Presentation g = dg_lie_01();
	TensorElement a = generalized_ch(g, 2, V(g, "u"), {{{1}, V(g, "a")}, {{2}, V(g, "b - c")}}).simplex;
	std::string text = write_simplex(g, a);
	CHECK(parse_simplex(g, text) == a);
	CHECK(write_simplex(g, parse_simplex(g, text)) == text);
	CHECK_THROWS_AS(parse_simplex(g, "{\"n\": 1}"), std::invalid_argument);
	CHECK_THROWS_AS(parse_simplex(g, R"({"n": 1, "components": [{"symbol": "zz", "form": "t1"}]})"),
			std::invalid_argument);
}

TEST_CASE("report rendering")
{
	Check good{"identity"}, bad{"other"};
	good.record(true);
	bad.record(true);
	bad.record(false, "x=1");
	bad.notes.push_back("extra");
	RunReport r{"cmd", {"n=2"}, {good, bad}};
	CHECK(render(r) == "cmd n=2\n"
			   "  PASS  identity  cases=1 failures=0\n"
			   "  FAIL  other  cases=2 failures=1\n"
			   "        counterexample: x=1\n"
			   "        extra\n"
			   "result: FAIL\n");
	CHECK(r.exit_code() == 1);
	RunReport ok{"cmd", {}, {good}};
	CHECK(ok.exit_code() == 0);
	CHECK(render(ok) == render(ok));
}

TEST_CASE("sampler is deterministic")
{
	Presentation g = ut4();
	Sampler a(42), b(42);
	for (int k = 0; k < 10; ++k)
		CHECK(a.vector(g, 0) == b.vector(g, 0));
	Sampler c(1);
	const std::set<Rational> allowed{Q(0), Q(1), Q(-1), Q(1, 2), Q(-1, 2), Q(2), Q(-2)};
	for (int k = 0; k < 50; ++k)
		CHECK(allowed.count(c.coefficient()) == 1);
}

TEST_CASE("suite registry")
{
	CHECK(suite_ids().size() == 13);
	SuiteOptions o;
	o.fixture_dir = LINF_FIXTURE_DIR;
	CHECK_THROWS_AS(run_suite("no-such-suite", o), UsageError);
}
