#ifndef LINF_RATIONAL_HPP
#define LINF_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace linf {

// Exact rational in lowest terms. Thin wrapper over mpq_class so that every
// operator returns a concrete value (Eigen does not cope with gmpxx
// expression templates).
class Rational {
  public:
	Rational() = default;
	Rational(long v) : q_(v) {}
	Rational(int v) : q_(static_cast<long>(v)) {}
	Rational(long num, long den) : q_(num, den)
	{
		if (den == 0)
			throw std::domain_error("zero denominator");
		q_.canonicalize();
	}
	explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }
	explicit Rational(const mpz_class &z) : q_(z) {}

	// Accepts "p", "-p", "p/q".
	static Rational parse(const std::string &s);

	const mpq_class &raw() const { return q_; }
	mpz_class num() const { return q_.get_num(); }
	mpz_class den() const { return q_.get_den(); }

	bool is_zero() const { return sgn(q_) == 0; }
	bool is_one() const { return q_ == 1; }
	int sign() const { return sgn(q_); }

	std::string str() const;

	Rational &operator+=(const Rational &o)
	{
		q_ += o.q_;
		return *this;
	}
	Rational &operator-=(const Rational &o)
	{
		q_ -= o.q_;
		return *this;
	}
	Rational &operator*=(const Rational &o)
	{
		q_ *= o.q_;
		return *this;
	}
	Rational &operator/=(const Rational &o)
	{
		if (o.is_zero())
			throw std::domain_error("division by zero");
		q_ /= o.q_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

	friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
	friend bool operator!=(const Rational &a, const Rational &b) { return a.q_ != b.q_; }
	friend bool operator<(const Rational &a, const Rational &b) { return a.q_ < b.q_; }
	friend bool operator>(const Rational &a, const Rational &b) { return a.q_ > b.q_; }
	friend bool operator<=(const Rational &a, const Rational &b) { return a.q_ <= b.q_; }
	friend bool operator>=(const Rational &a, const Rational &b) { return a.q_ >= b.q_; }

	friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

  private:
	mpq_class q_;
};

Rational factorial(int k);
Rational binomial(int n, int k);

inline Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

} // namespace linf

template <> struct std::hash<linf::Rational> {
	size_t operator()(const linf::Rational &r) const noexcept
	{
		return std::hash<std::string>()(r.str());
	}
};

namespace Eigen {
template <> struct NumTraits<linf::Rational> : GenericNumTraits<linf::Rational> {
	typedef linf::Rational Real;
	typedef linf::Rational NonInteger;
	typedef linf::Rational Nested;
	enum {
		IsComplex = 0,
		IsInteger = 0,
		IsSigned = 1,
		RequireInitialization = 1,
		ReadCost = 1,
		AddCost = 10,
		MulCost = 20
	};
	static inline Real epsilon() { return Real(0); }
	static inline Real dummy_precision() { return Real(0); }
	static inline int digits10() { return 0; }
};
} // namespace Eigen

#endif
