#ifndef LINF_MODELS_HPP
#define LINF_MODELS_HPP

#include "linf/linfty.hpp"

#include <string>
#include <vector>

namespace linf {

// Builders for the bundled test algebras. The JSON fixtures describe the
// same presentations.
Presentation zero_algebra();
// p (-1), q, r (0), u, v (1); delta p = q, delta r = u.
Presentation abelian_with_differential();
// e1, e2, e3 in degree 0 with [e1, e2] = e3.
Presentation heisenberg();
// Strictly upper triangular 4x4 matrices, basis E_ij.
Presentation ut4();
// a, b, c (0), u, v, w (1); [a, b] = c, [a, v] = w, delta a = u, delta b = v,
// delta c = w.
Presentation dg_lie_01();
// a, b, c (0), u (1), with the single ternary bracket [a, b, u] = c.
Presentation ternary_l3();

// Free dg Lie algebra on x1, x2 (degree 0) and x12 (degree -1), modulo
// elements with more than two brackets, where applying delta to a generator
// counts as a bracket. Basis symbols are bracket expressions such as
// "[x1,[x1,x2]]"; dx1, dx2, dx12 are written y1, y2, z.
Presentation free_dg_lie_class3();

// x1, x2 (0), y1, y2 (1) with delta x_i = y_i and a free ternary bracket:
// [a, b, c] is a new generator w(a,b,c) for every sorted triple from
// {x1, x2, y1, y2}, and the differential on the w's is forced by the
// 3-Jacobi identity.
Presentation ternary_free();

} // namespace linf

#endif
