#ifndef LINF_BCH_HPP
#define LINF_BCH_HPP

#include "linf/mc_gamma.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace linf {

// Unlabeled rooted tree; children kept in canonical order.
struct RootedTree {
	std::vector<RootedTree> children;

	int size() const;
	std::string str() const;
	// Order by vertex count, then lexicographically on the sorted child lists.
	friend bool operator<(const RootedTree &a, const RootedTree &b);
	friend bool operator==(const RootedTree &a, const RootedTree &b);
};

struct TreeTerm {
	RootedTree tree;
	// Number of orderings of the vertices in which each vertex comes after
	// its parent, counted up to automorphisms of the tree.
	long coefficient = 0;
};

// Canonical list of all rooted trees with k vertices.
std::vector<TreeTerm> enumerate_trees(int k);
// Linear extensions of the tree poset (vertices distinguished).
long linear_extensions(const RootedTree &t);
long automorphisms(const RootedTree &t);

// Vertex with i children a_1..a_i evaluates to [x, a_1, ..., a_i]_mu.
GVector evaluate_tree(const Presentation &g, const GVector &mu, const GVector &x, const RootedTree &t);
// epsilon^k_mu(x): the sum over trees with k vertices.
GVector tree_exponential(const Presentation &g, const GVector &mu, const GVector &x, int k);
// The right-hand side of the ODE recursion for epsilon^{k+1}_mu(x).
GVector tree_recursion(const Presentation &g, const GVector &mu, const GVector &x, int k);

// The gauge-fixed 1-simplex with vertex 0 at mu and I_01 = x, in closed form:
// mu - sum_k t_1^k/k! epsilon^k_mu(-x) + x dt_1.
TensorElement alpha1(const Presentation &g, const GVector &mu, const GVector &x);
// Its value at vertex 1: mu - sum_k 1/k! epsilon^k_mu(-x).
GVector rho1(const Presentation &g, const GVector &mu, const GVector &x);

// Labels x_J for nonempty increasing J in {1..n}.
using CHInputs = std::map<std::vector<int>, GVector>;

struct CHResult {
	GVector value;
	TensorElement simplex;
};

TensorElement ch_boundary_data(const Presentation &g, int n, const CHInputs &inputs);
CHResult generalized_ch(const Presentation &g, int n, const GVector &mu, const CHInputs &inputs);

// rho_2 in the orientation fixed by the monodromy identity
// e^{x1} = e^{rho} e^{x2} in the group of g^0: the labels enter negated. The
// same substitution turns rho1 into the Deligne action e^x * mu.
GVector oriented_rho2(const Presentation &g, const GVector &mu, const GVector &x1, const GVector &x2,
		      const GVector &x12 = {});

// The edge 02 of the thin filler of the inner horn with edges x (01) and y (12).
GVector compose(const Presentation &g, const GVector &mu, const GVector &x, const GVector &y);
// rho_3 with x_1, x_2, x_3 and every x_ij, x_123 zero.
GVector rho3(const Presentation &g, const GVector &mu, const GVector &x1, const GVector &x2, const GVector &x3);

// e^X * alpha = alpha - sum_n ad(X)^n (delta X + [alpha, X]) / (n+1)!, for dg Lie g.
GVector deligne_action(const Presentation &g, const GVector &X, const GVector &alpha);

// ---- matrix oracle ----

bool is_strictly_upper(const Matrix &m);
Matrix identity_matrix(int m);
Matrix matrix_exp(const Matrix &x);
// Throws std::invalid_argument unless u - 1 is strictly upper triangular.
Matrix matrix_log(const Matrix &u);
Matrix oracle_bch(const Matrix &x, const Matrix &y);

// Faithful matrix representation of a degree-0 nilpotent Lie algebra:
// images[i] is the matrix of basis element i.
struct MatrixRep {
	int size = 0;
	std::vector<Matrix> images;

	Matrix apply(const GVector &x) const;
	// Checks rep([e_i, e_j]) = [rep e_i, rep e_j] and injectivity.
	bool is_faithful_rep(const Presentation &g) const;
};

MatrixRep heisenberg_rep(const Presentation &g);
// E_ij for 1 <= i < j <= 4, basis symbols "E12", ..., "E34".
MatrixRep ut4_rep(const Presentation &g);

// ---- groupoids ----

struct Groupoid {
	int objects = 0;
	std::vector<int> source, target;
	std::vector<int> identity;
	// compose[a][b] = a o b, defined when source[a] == target[b]; else -1.
	std::vector<std::vector<int>> compose;
	std::vector<int> inverse;

	int morphisms() const { return static_cast<int>(source.size()); }
	// Throws std::invalid_argument on inconsistent tables.
	void validate() const;
};

Groupoid cyclic_group(int order);
Groupoid pair_groupoid(int objects);
Groupoid product(const Groupoid &a, const Groupoid &b);
Groupoid discrete_groupoid(int objects);

// N_n G: chains [g_1, ..., g_n] with source(g_i) == target(g_{i+1}). N_0 lists
// objects as one-element chains.
struct NerveTruncation {
	int N = 0;
	std::vector<std::vector<std::vector<int>>> simplices;
	// face[n][x][k], index into simplices[n-1].
	std::vector<std::vector<std::vector<int>>> face;
	// degeneracy[n][x][k], index into simplices[n+1].
	std::vector<std::vector<std::vector<int>>> degeneracy;

	int index_of(int n, const std::vector<int> &chain) const;
};

NerveTruncation nerve_of_groupoid(const Groupoid &G, int N);
// Every horn of dimension n has exactly one filler.
Check check_unique_fillers(const NerveTruncation &X, int n);
// Simplicial identities on the tables.
Check check_simplicial_identities(const NerveTruncation &X);
// Maps from the boundary of Delta^3 correspond bijectively to 3-simplices.
Check check_coskeletal(const NerveTruncation &X);
// The unique filler of the 2-horn with faces (f0, f1, f2), slot i empty.
std::vector<int> groupoid_filler(const Groupoid &G, int i, const std::vector<int> &f);

} // namespace linf

#endif
