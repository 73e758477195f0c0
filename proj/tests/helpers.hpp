#ifndef LINF_TEST_HELPERS_HPP
#define LINF_TEST_HELPERS_HPP

#include "linf/bch.hpp"
#include "linf/io.hpp"
#include "linf/models.hpp"
#include "linf/suites.hpp"

#include <doctest.h>

#include <ostream>

namespace linf {

inline std::ostream &operator<<(std::ostream &os, const Form &f) { return os << render(f); }

} // namespace linf

namespace testing {

inline linf::Form F(const std::string &s, int n) { return linf::parse_form(s, n); }
inline linf::GVector V(const linf::Presentation &g, const std::string &s) { return linf::parse_gvector(g, s); }
inline linf::Rational Q(long a, long b = 1) { return linf::Rational(a, b); }

} // namespace testing

#endif
