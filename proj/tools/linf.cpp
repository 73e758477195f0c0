// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or input validation error.

#include "linf/bch.hpp"
#include "linf/io.hpp"
#include "linf/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifndef LINF_FIXTURE_DIR
#define LINF_FIXTURE_DIR "fixtures"
#endif

using namespace linf;

namespace {

std::string slurp(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw UsageError("cannot open " + path);
	std::stringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

int emit(const RunReport &r)
{
	std::cout << render(r);
	return r.exit_code();
}

// "12=1/2*e1" -> ({1,2}, vector)
std::pair<std::vector<int>, GVector> parse_label(const Presentation &g, const std::string &s)
{
	size_t eq = s.find('=');
	if (eq == std::string::npos || eq == 0)
		throw UsageError("label must look like J=expr, e.g. 12=e1");
	std::vector<int> J;
	for (char c : s.substr(0, eq)) {
		if (c < '1' || c > '9')
			throw UsageError("bad label index in '" + s + "'");
		J.push_back(c - '0');
	}
	return {J, parse_gvector(g, s.substr(eq + 1))};
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact computations with nilpotent L-infinity algebras: Dupont contraction, "
		     "Maurer-Cartan simplices, horn fillers and generalized Campbell-Hausdorff series."};
	app.require_subcommand(1);
	app.fallthrough();

	SuiteOptions opts;
	opts.fixture_dir = LINF_FIXTURE_DIR;
	std::string format = "text";
	app.add_option("--seed", opts.seed, "Seed for sampled cases")->default_val(1);
	app.add_option("--max-degree", opts.max_degree, "Polynomial degree bound for form generators")->default_val(4);
	app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text"}))->default_val("text");
	app.add_option("--fixtures", opts.fixture_dir, "Directory with the bundled presentations");

	std::string file;
	int n = 2, arity = 0, missing = 0, samples = 20;
	std::string simplex_file, mu_file, inputs_file, rep;
	std::vector<std::string> face_files;
	std::vector<std::string> labels;
	bool oriented = false;

	auto *jac = app.add_subcommand("check-jacobi", "Check the L-infinity relations of a presentation");
	jac->add_option("file,--algebra", file, "Presentation JSON")->required();
	jac->add_option("--arity", arity, "Largest n for the n-Jacobi identities (default: max bracket arity + 2)");

	auto *con = app.add_subcommand("verify-contraction", "Dupont contraction identities on Omega_n");
	con->add_option("--n", n)->default_val(2)->check(CLI::Range(0, 4));
	auto *gau = app.add_subcommand("verify-gauge", "s^2 = 0, h anticommutation and iterated integrals");
	gau->add_option("--n", n)->default_val(2)->check(CLI::Range(0, 4));

	auto *fill = app.add_subcommand("fill-horn", "Fill the horn of a simplex with its thin gamma filler");
	fill->add_option("file,--algebra", file, "Presentation JSON")->required();
	fill->add_option("--n", n, "Dimension of the horn")->default_val(2)->check(CLI::Range(1, 4));
	fill->add_option("--missing", missing, "Index of the missing face")->default_val(0);
	auto *faces_opt = fill->add_option("--faces", face_files, "Simplex JSON files for the faces j != missing, in order");
	fill->add_option("--simplex", simplex_file, "Simplex JSON whose horn is filled")->excludes(faces_opt);

	auto *dk = app.add_subcommand("dold-kan", "Compare gamma_n with normalized cocycles (abelian input)");
	dk->add_option("file,--algebra", file, "Presentation JSON")->required();
	dk->add_option("--n", n)->default_val(2)->check(CLI::Range(0, 3));

	auto *bch = app.add_subcommand("bch", "Generalized Campbell-Hausdorff series rho_n");
	bch->add_option("file,--algebra", file, "Presentation JSON")->required();
	bch->add_option("--n", n)->default_val(2)->check(CLI::Range(1, 3));
	bch->add_option("--label", labels, "Label J=expr for a nonempty J in 1..n, e.g. 12=e1");
	bch->add_option("--mu", mu_file, "File holding the Maurer-Cartan base point as an expression");
	bch->add_option("--inputs", inputs_file, "JSON object mapping labels J to expressions, e.g. {\"12\": \"e1\"}");
	bch->add_flag("--oriented", oriented, "Negate the labels (the orientation with e^x1 = e^rho e^x2)");

	auto *tab = app.add_subcommand("compose-table", "Sampled compositions of 1-simplices and associativity");
	tab->add_option("file,--algebra", file, "Presentation JSON")->required();
	tab->add_option("--samples", samples)->default_val(5);

	auto *mono = app.add_subcommand("verify-monodromy", "e^x1 = e^rho2 e^x2 in a faithful matrix representation");
	mono->add_option("--rep", rep, "heisenberg or ut4 (default both)");
	mono->add_option("--samples", samples)->default_val(20);

	std::string suite;
	auto *all = app.add_subcommand("run-all", "Run the acceptance suites");
	all->add_option("--suite", suite, "Run a single suite");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		if (*jac) {
			PresentationFile pf = load_presentation(file);
			if (arity <= 0)
				arity = std::max(pf.algebra.max_arity(), 2) + 2;
			pf.jacobi = check_jacobi(pf.algebra, arity);
			RunReport r{"check-jacobi", {file, "arity<=" + std::to_string(arity)}, {*pf.jacobi}};
			Check nil{"nilpotent"};
			nil.record(pf.filtration.nilpotent, "lower central series does not terminate");
			nil.notes.push_back("nilpotency index " + std::to_string(pf.filtration.index));
			r.checks.push_back(nil);
			return emit(r);
		}
		if (*con) {
			RunReport r{"verify-contraction", {"n=" + std::to_string(n), "max-degree=" + std::to_string(opts.max_degree)},
				    verify_contraction(n, opts.max_degree)};
			return emit(r);
		}
		if (*gau) {
			RunReport r{"verify-gauge", {"n=" + std::to_string(n), "max-degree=" + std::to_string(opts.max_degree)},
				    verify_gauge(n, opts.max_degree)};
			return emit(r);
		}
		if (*fill) {
			Presentation g = load_presentation(file).algebra;
			Horn h;
			if (!simplex_file.empty()) {
				TensorElement sim = parse_simplex(g, slurp(simplex_file));
				n = sim.dim();
				if (n < 1 || missing < 0 || missing > n)
					throw UsageError("--missing must lie in 0..n with n >= 1");
				h = horn_of(sim, n, missing);
			} else {
				if (missing < 0 || missing > n)
					throw UsageError("--missing must lie in 0..n");
				if (static_cast<int>(face_files.size()) != n)
					throw UsageError("--faces needs exactly n files");
				h = Horn{n, missing, {}};
				for (int j = 0, k = 0; j <= n; ++j) {
					if (j == missing) {
						h.faces.emplace_back(n - 1);
						continue;
					}
					TensorElement f = parse_simplex(g, slurp(face_files[k++]));
					if (f.dim() != n - 1)
						throw UsageError("face " + std::to_string(j) + " is not an (n-1)-simplex");
					h.faces.push_back(f);
				}
				if (!horn_compatible(h))
					throw UsageError("faces do not agree on common subfaces");
			}
			TensorElement a = fill_horn_gamma(g, h);
			RunReport r{"fill-horn", {file, "n=" + std::to_string(n), "missing=" + std::to_string(missing)}, {}};
			Check gamma{"filler is a gamma simplex"}, thin{"filler is thin"}, faces{"faces match"};
			gamma.record(is_gamma_simplex(g, a), render(g, a));
			thin.record(is_thin(a), render(g, a));
			for (int j = 0; j <= n; ++j)
				if (j != missing)
					faces.record(face(a, j) == h.faces[j], "face " + std::to_string(j));
			std::cout << write_simplex(g, a);
			r.checks.insert(r.checks.end(), {gamma, thin, faces});
			return emit(r);
		}
		if (*dk) {
			Presentation g = load_presentation(file).algebra;
			if (!g.is_abelian())
				throw UsageError("dold-kan needs an abelian presentation");
			DoldKanReport d = dold_kan_compare(g, n);
			RunReport r{"dold-kan", {file, "n=" + std::to_string(n)}, {}};
			Check c{"gamma_n matches normalized cocycles"};
			c.record(d.gamma_dim == d.cocycle_dim && d.bijective && d.whitney,
				 "gamma=" + std::to_string(d.gamma_dim) + " cocycles=" + std::to_string(d.cocycle_dim));
			c.notes.push_back("dim gamma_n = " + std::to_string(d.gamma_dim) +
					  ", dim cocycles = " + std::to_string(d.cocycle_dim));
			r.checks.push_back(c);
			return emit(r);
		}
		if (*bch) {
			Presentation g = load_presentation(file).algebra;
			GVector mu = mu_file.empty() ? GVector() : parse_gvector(g, slurp(mu_file));
			std::vector<std::string> all_labels;
			if (!inputs_file.empty()) {
				nlohmann::json j;
				try {
					j = nlohmann::json::parse(slurp(inputs_file));
				} catch (const nlohmann::json::exception &e) {
					throw UsageError(inputs_file + ": " + e.what());
				}
				if (!j.is_object())
					throw UsageError(inputs_file + ": expected an object of label -> expression");
				for (const auto &[key, val] : j.items()) {
					if (!val.is_string())
						throw UsageError(inputs_file + ": /" + key + " must be a string");
					all_labels.push_back(key + "=" + val.get<std::string>());
				}
			}
			all_labels.insert(all_labels.end(), labels.begin(), labels.end());
			CHInputs in;
			for (const auto &l : all_labels) {
				auto [J, x] = parse_label(g, l);
				in[J] = oriented ? -x : x;
			}
			CHResult res = generalized_ch(g, n, mu, in);
			std::cout << "rho" << n << " = " << g.render(res.value) << "\n";
			std::cout << "simplex = " << render(g, res.simplex) << "\n";
			return 0;
		}
		if (*tab) {
			Presentation g = load_presentation(file).algebra;
			Sampler rng(opts.seed);
			RunReport r{"compose-table", {file, "seed=" + std::to_string(opts.seed)}, {}};
			Check assoc{"compose is associative"};
			for (int k = 0; k < samples; ++k) {
				GVector x = rng.vector(g, 0), y = rng.vector(g, 0), z = rng.vector(g, 0);
				GVector xy = compose(g, GVector(), x, y);
				std::cout << "(" << g.render(x) << ") . (" << g.render(y) << ") = " << g.render(xy) << "\n";
				GVector left = compose(g, GVector(), xy, z);
				GVector right = compose(g, GVector(), x, compose(g, rho1(g, GVector(), x), y, z));
				assoc.record(left == right, "x=" + g.render(x) + " y=" + g.render(y) + " z=" + g.render(z));
			}
			r.checks.push_back(assoc);
			return emit(r);
		}
		if (*mono) {
			opts.rep = rep;
			opts.samples = samples;
			return emit(run_suite("monodromy", opts));
		}
		if (*all) {
			int code = 0;
			for (const auto &id : suite.empty() ? suite_ids() : std::vector<std::string>{suite}) {
				int c = emit(run_suite(id, opts));
				code = std::max(code, c);
			}
			return code;
		}
	} catch (const LoadError &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const UsageError &e) {
		std::cerr << "usage error: " << e.what() << "\n";
		return 2;
	} catch (const std::invalid_argument &e) {
		std::cerr << "invalid input: " << e.what() << "\n";
		return 2;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
