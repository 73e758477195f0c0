#include "linf/rational.hpp"

#include <cctype>

namespace linf {

Rational Rational::parse(const std::string &s)
{
	std::string t;
	for (char c : s)
		if (!std::isspace(static_cast<unsigned char>(c)))
			t += c;
	if (t.empty())
		throw std::invalid_argument("empty rational");
	auto slash = t.find('/');
	auto valid = [](const std::string &x) {
		size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
		if (i >= x.size())
			return false;
		for (; i < x.size(); ++i)
			if (!std::isdigit(static_cast<unsigned char>(x[i])))
				return false;
		return true;
	};
	std::string n = slash == std::string::npos ? t : t.substr(0, slash);
	std::string d = slash == std::string::npos ? "1" : t.substr(slash + 1);
	if (!valid(n) || !valid(d))
		throw std::invalid_argument("malformed rational: " + s);
	if (n[0] == '+')
		n = n.substr(1);
	if (d[0] == '+')
		d = d.substr(1);
	mpz_class nz(n), dz(d);
	if (dz == 0)
		throw std::domain_error("zero denominator: " + s);
	mpq_class q(nz, dz);
	q.canonicalize();
	return Rational(q);
}

std::string Rational::str() const
{
	if (q_.get_den() == 1)
		return q_.get_num().get_str();
	return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational factorial(int k)
{
	mpz_class r = 1;
	for (int i = 2; i <= k; ++i)
		r *= i;
	return Rational(r);
}

Rational binomial(int n, int k)
{
	if (k < 0 || k > n)
		return Rational(0);
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return Rational(r);
}

} // namespace linf
