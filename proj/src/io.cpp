#include "linf/io.hpp"

#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

namespace linf {

using nlohmann::json;

std::string Diagnostic::str() const
{
	std::string out = file;
	if (line > 0)
		out += ":" + std::to_string(line);
	if (!location.empty())
		out += " (" + location + ")";
	return out + ": " + message;
}

namespace {

// Start lines of the elements of the top-level arrays "generators" and
// "brackets", found by a small scan that skips string contents.
struct LineIndex {
	std::map<std::string, std::vector<int>> starts;
	std::map<std::string, int> keys;

	explicit LineIndex(const std::string &text)
	{
		int line = 1, depth = 0;
		std::string last_key, current_array;
		for (size_t p = 0; p < text.size(); ++p) {
			char c = text[p];
			if (c == '\n') {
				++line;
			} else if (c == '"') {
				size_t q = p + 1;
				std::string s;
				while (q < text.size() && text[q] != '"') {
					if (text[q] == '\\')
						++q;
					if (q < text.size())
						s += text[q];
					++q;
				}
				if (depth == 1) {
					last_key = s;
					keys.emplace(s, line);
				}
				p = q;
			} else if (c == '[' || c == '{') {
				if (depth == 1 && c == '[')
					current_array = last_key;
				if (depth == 2 && !current_array.empty())
					starts[current_array].push_back(line);
				++depth;
			} else if (c == ']' || c == '}') {
				--depth;
				if (depth == 1)
					current_array.clear();
			}
		}
	}

	int line_of(const std::string &array, size_t k) const
	{
		auto it = starts.find(array);
		if (it != starts.end() && k < it->second.size())
			return it->second[k];
		auto kt = keys.find(array);
		return kt == keys.end() ? 0 : kt->second;
	}
};

const std::regex symbol_pattern("[A-Za-z_][A-Za-z0-9_]*");

} // namespace

Presentation parse_presentation(const std::string &text, const std::string &file)
{
	json doc;
	try {
		doc = json::parse(text);
	} catch (const json::parse_error &e) {
		int line = 1;
		for (size_t p = 0; p < e.byte && p < text.size(); ++p)
			line += text[p] == '\n';
		throw LoadError({file, line, "", std::string("parse error: ") + e.what()});
	}
	LineIndex lines(text);
	auto fail = [&](const std::string &array, size_t k, const std::string &where, const std::string &msg) {
		std::string loc = "/" + array;
		if (k != static_cast<size_t>(-1))
			loc += "/" + std::to_string(k);
		throw LoadError({file, lines.line_of(array, k), loc + where, msg});
	};
	const size_t none = static_cast<size_t>(-1);
	if (!doc.is_object())
		throw LoadError({file, 1, "", "top level must be an object"});

	Presentation g;
	if (doc.contains("name")) {
		if (!doc["name"].is_string())
			fail("name", none, "", "name must be a string");
		g.name = doc["name"].get<std::string>();
	}
	if (doc.contains("generators")) {
		const json &gens = doc["generators"];
		if (!gens.is_array())
			fail("generators", none, "", "generators must be an array");
		for (size_t k = 0; k < gens.size(); ++k) {
			const json &e = gens[k];
			if (!e.is_object() || !e.contains("symbol") || !e["symbol"].is_string())
				fail("generators", k, "", "generator needs a string \"symbol\"");
			if (!e.contains("degree") || !e["degree"].is_number_integer())
				fail("generators", k, "", "generator needs an integer \"degree\"");
			std::string s = e["symbol"].get<std::string>();
			if (!std::regex_match(s, symbol_pattern))
				fail("generators", k, "/symbol", "bad symbol '" + s + "'");
			if (g.index(s) >= 0)
				fail("generators", k, "/symbol", "duplicate generator symbol '" + s + "'");
			g.add_generator(s, e["degree"].get<int>());
		}
	}
	int arity_bound = 0;
	if (doc.contains("max_arity")) {
		if (!doc["max_arity"].is_number_integer() || doc["max_arity"].get<int>() < 1)
			fail("max_arity", none, "", "max_arity must be a positive integer");
		arity_bound = doc["max_arity"].get<int>();
	}
	auto lookup = [&](const json &s, size_t k, const std::string &where) {
		if (!s.is_string())
			fail("brackets", k, where, "symbol must be a string");
		int i = g.index(s.get<std::string>());
		if (i < 0)
			fail("brackets", k, where, "unknown symbol '" + s.get<std::string>() + "'");
		return i;
	};
	if (doc.contains("brackets")) {
		const json &br = doc["brackets"];
		if (!br.is_array())
			fail("brackets", none, "", "brackets must be an array");
		std::set<std::vector<int>> seen;
		for (size_t k = 0; k < br.size(); ++k) {
			const json &e = br[k];
			if (!e.is_object() || !e.contains("args") || !e["args"].is_array() || e["args"].empty())
				fail("brackets", k, "", "bracket needs a nonempty \"args\" array");
			std::vector<int> args;
			for (size_t a = 0; a < e["args"].size(); ++a)
				args.push_back(lookup(e["args"][a], k, "/args/" + std::to_string(a)));
			if (arity_bound > 0 && static_cast<int>(args.size()) > arity_bound)
				fail("brackets", k, "/args", "arity exceeds max_arity");
			GVector value;
			if (e.contains("value")) {
				if (!e["value"].is_array())
					fail("brackets", k, "/value", "value must be an array");
				for (size_t t = 0; t < e["value"].size(); ++t) {
					const json &term = e["value"][t];
					std::string where = "/value/" + std::to_string(t);
					if (!term.is_object() || !term.contains("symbol"))
						fail("brackets", k, where, "term needs \"symbol\" and \"coeff\"");
					int i = lookup(term["symbol"], k, where + "/symbol");
					Rational c(1);
					if (term.contains("coeff")) {
						const json &cf = term["coeff"];
						try {
							if (cf.is_number_integer())
								c = Rational(cf.get<long>());
							else if (cf.is_string())
								c = Rational::parse(cf.get<std::string>());
							else
								throw std::invalid_argument("coefficient must be \"p/q\"");
						} catch (const std::exception &ex) {
							fail("brackets", k, where + "/coeff", ex.what());
						}
					}
					value.add_term(i, c);
				}
			}
			std::vector<int> key = args;
			if (antisymmetry_sort(key, g.degrees()) != 0 && !seen.insert(key).second)
				fail("brackets", k, "/args", "bracket listed twice");
			try {
				g.set_bracket(args, value);
			} catch (const std::exception &ex) {
				std::ostringstream os;
				os << "[";
				for (size_t a = 0; a < args.size(); ++a)
					os << (a ? "," : "") << g.symbol(args[a]);
				os << "] = " << g.render(value) << ": " << ex.what();
				fail("brackets", k, "", os.str());
			}
		}
	}
	if (arity_bound > 0)
		g.set_declared_arity(arity_bound);
	return g;
}

PresentationFile load_presentation(const std::string &path, int jacobi_arity)
{
	std::ifstream in(path);
	if (!in)
		throw LoadError({path, 0, "", "cannot open file"});
	std::stringstream buf;
	buf << in.rdbuf();
	PresentationFile pf{path, parse_presentation(buf.str(), path), {}, std::nullopt};
	pf.filtration = lower_central(pf.algebra);
	if (jacobi_arity > 0)
		pf.jacobi = check_jacobi(pf.algebra, jacobi_arity);
	return pf;
}

std::string write_presentation(const Presentation &g)
{
	nlohmann::ordered_json doc = nlohmann::ordered_json::object();
	doc["name"] = g.name;
	doc["generators"] = nlohmann::ordered_json::array();
	for (int i = 0; i < g.dim(); ++i)
		doc["generators"].push_back({{"symbol", g.symbol(i)}, {"degree", g.degree(i)}});
	doc["brackets"] = nlohmann::ordered_json::array();
	for (const auto &[key, value] : g.table()) {
		if (value.is_zero())
			continue;
		nlohmann::ordered_json args = nlohmann::ordered_json::array(), terms = nlohmann::ordered_json::array();
		for (int a : key)
			args.push_back(g.symbol(a));
		for (const auto &[i, c] : value.terms())
			terms.push_back({{"symbol", g.symbol(i)}, {"coeff", c.str()}});
		doc["brackets"].push_back({{"args", args}, {"value", terms}});
	}
	if (g.declared_arity() > 0)
		doc["max_arity"] = g.declared_arity();
	return doc.dump(2) + "\n";
}

GVector parse_gvector(const Presentation &g, const std::string &text)
{
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			s += ch;
	if (s.empty())
		throw std::invalid_argument("empty vector expression");
	GVector out;
	if (s == "0")
		return out;
	size_t p = 0;
	while (p < s.size()) {
		int sign = 1;
		if (s[p] == '+' || s[p] == '-') {
			sign = s[p] == '-' ? -1 : 1;
			++p;
		}
		size_t q = p;
		int depth = 0;
		while (q < s.size() && (depth > 0 || (s[q] != '+' && s[q] != '-'))) {
			if (s[q] == '[' || s[q] == '(')
				++depth;
			else if (s[q] == ']' || s[q] == ')')
				--depth;
			++q;
		}
		std::string term = s.substr(p, q - p);
		if (term.empty())
			throw std::invalid_argument("bad vector expression '" + text + "'");
		Rational c(1);
		std::string sym = term;
		if (g.index(term) < 0) {
			size_t star = term.find('*');
			if (star == std::string::npos)
				throw std::invalid_argument("unknown symbol '" + term + "'");
			c = Rational::parse(term.substr(0, star));
			sym = term.substr(star + 1);
		}
		int i = g.index(sym);
		if (i < 0)
			throw std::invalid_argument("unknown symbol '" + sym + "'");
		out.add_term(i, sign > 0 ? c : -c);
		p = q;
	}
	return out;
}

std::string write_simplex(const Presentation &g, const TensorElement &a)
{
	nlohmann::ordered_json doc = nlohmann::ordered_json::object();
	doc["algebra"] = g.name;
	doc["n"] = a.dim();
	doc["components"] = nlohmann::ordered_json::array();
	for (const auto &[i, f] : a.terms())
		doc["components"].push_back({{"symbol", g.symbol(i)}, {"form", render(f)}});
	return doc.dump(2) + "\n";
}

TensorElement parse_simplex(const Presentation &g, const std::string &text)
{
	json doc;
	try {
		doc = json::parse(text);
	} catch (const json::parse_error &e) {
		throw std::invalid_argument(std::string("simplex: ") + e.what());
	}
	if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("components") ||
	    !doc["components"].is_array())
		throw std::invalid_argument("simplex: expected {\"n\", \"components\"}");
	const int n = doc["n"].get<int>();
	TensorElement out(n);
	for (const auto &c : doc["components"]) {
		if (!c.is_object() || !c.contains("symbol") || !c.contains("form") || !c["symbol"].is_string() ||
		    !c["form"].is_string())
			throw std::invalid_argument("simplex: component needs \"symbol\" and \"form\"");
		int i = g.index(c["symbol"].get<std::string>());
		if (i < 0)
			throw std::invalid_argument("simplex: unknown symbol '" + c["symbol"].get<std::string>() + "'");
		out.add_term(i, parse_form(c["form"].get<std::string>(), n));
	}
	return out;
}

std::string render(const RunReport &report)
{
	std::ostringstream os;
	os << report.command;
	for (const auto &p : report.parameters)
		os << " " << p;
	os << "\n";
	for (const auto &c : report.checks) {
		os << (c.ok() ? "  PASS  " : "  FAIL  ") << c.name << "  cases=" << c.cases << " failures=" << c.failures
		   << "\n";
		if (!c.ok() && !c.counterexample.empty())
			os << "        counterexample: " << c.counterexample << "\n";
		for (const auto &n : c.notes)
			os << "        " << n << "\n";
	}
	os << (report.ok() ? "result: pass" : "result: FAIL") << "\n";
	return os.str();
}

Rational Sampler::coefficient()
{
	static const Rational values[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2),
					  Rational(-1, 2), Rational(2), Rational(-2)};
	return values[rng_() % 7];
}

GVector Sampler::vector(const Presentation &g, int degree)
{
	GVector out;
	for (int i : g.basis_of_degree(degree))
		out.add_term(i, coefficient());
	return out;
}

GVector Sampler::any(const Presentation &g)
{
	GVector out;
	for (int i = 0; i < g.dim(); ++i)
		out.add_term(i, coefficient());
	return out;
}

} // namespace linf
