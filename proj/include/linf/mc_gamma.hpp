#ifndef LINF_MC_GAMMA_HPP
#define LINF_MC_GAMMA_HPP

#include "linf/linfty.hpp"

#include <optional>

namespace linf {

// Boundary data (mu, nu) for solving at base vertex i, with nu = D(beta).
struct GaugeParameter {
	int n = 0;
	int base = 0;
	GVector mu;
	TensorElement nu;
	TensorElement beta;
};

struct Horn {
	int n = 0;
	int missing = 0;
	// faces[j] is the (n-1)-simplex opposite vertex j; faces[missing] is unused.
	std::vector<TensorElement> faces;
};

TensorElement face(const TensorElement &a, int k);
TensorElement degenerate(const TensorElement &a, int k);

// h^i, P, s as operators on g (x) Omega_n with the Koszul signs.
TensorElement tensor_h(const Presentation &g, int i, const TensorElement &a);
TensorElement tensor_P(const TensorElement &a);
TensorElement tensor_s(const Presentation &g, const TensorElement &a);
// R^i = (d + delta) h^i.
TensorElement tensor_R(const Presentation &g, int i, const TensorElement &a);

struct SolveResult {
	TensorElement value;
	int iterations = 0;
};

// alpha = mu + nu - sum_l 1/l! h^i [alpha^l].
SolveResult solve_mc(const Presentation &g, int n, int i, const GVector &mu, const TensorElement &nu);
// alpha = mu + nu - sum_l 1/l! (P h^i + s) [alpha^l].
SolveResult solve_gauge_fixed(const Presentation &g, int n, int i, const GVector &mu, const TensorElement &nu);

bool satisfies_gauge(const Presentation &g, const TensorElement &a);
bool is_gamma_simplex(const Presentation &g, const TensorElement &a);
bool is_thin(const TensorElement &a);

// Checks d_j x_k = d_{k-1} x_j for j < k, both present.
bool horn_compatible(const Horn &h);
Horn horn_of(const TensorElement &simplex, int n, int missing);

// The gauge-fixed boundary data of the thin filler, optionally with an added
// top-dimensional label x in degree 1 - n.
TensorElement horn_whitney_data(const Presentation &g, const Horn &h, const GVector &top = {});
GVector horn_vertex(const Horn &h, int v);

TensorElement fill_horn_gamma(const Presentation &g, const Horn &h);
// An extension rho of the horn in the simplicial vector space g (x) Omega.
TensorElement horn_extension(const Horn &h);
TensorElement fill_horn_mc(const Presentation &g, const Horn &h);

// A strict morphism g -> h given by a matrix (rows: h basis, cols: g basis).
struct Morphism {
	const Presentation *source = nullptr;
	const Presentation *target = nullptr;
	Matrix matrix;

	GVector apply(const GVector &x) const;
	TensorElement apply(const TensorElement &a) const;
	bool is_surjective() const;
	// Preserves degrees and commutes with the brackets on basis tuples up to
	// the given arity.
	bool is_strict(int max_arity) const;
};

// Lift of y along f using the canonical row-echelon section.
GVector canonical_lift(const Morphism &f, const GVector &y);

TensorElement fill_horn_relative(const Morphism &f, const Horn &h, const TensorElement &target);

struct DoldKanReport {
	int n = 0;
	int gamma_dim = 0;
	int cocycle_dim = 0;
	bool whitney = false;
	bool bijective = false;
	// Images I_L(alpha) of the gamma basis, flattened over the faces L.
	std::vector<std::vector<Rational>> correspondence;
};

// Brute force: gamma_n as the kernel of (D, s) on forms of polynomial degree
// <= max_degree, compared with the simplicial cocycles of Delta^n in g[1].
DoldKanReport dold_kan_compare(const Presentation &g, int n, int max_degree = 2);

} // namespace linf

#endif
