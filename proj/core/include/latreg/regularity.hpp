#ifndef LATREG_REGULARITY_HPP
#define LATREG_REGULARITY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "latreg/positivity.hpp"
#include "latreg/representation.hpp"

namespace latreg {

/// Ordered list of positive elements of Z_+^n (duplicates allowed).
struct ConeTuple {
  std::vector<GroupElement> elems;

  static ConeTuple of(std::vector<std::vector<long long>> rows);
  int size() const { return static_cast<int>(elems.size()); }

  /// All entries positive length-n vectors; throws ContractError.
  void validate(int n) const;
};

/// A subset U of {1..n} as a bitmask (bit i-1 encodes membership of i).
struct BrehmerIndex {
  std::uint32_t mask = 0;
  int n = 0;

  static BrehmerIndex of(std::initializer_list<int> members, int n);
  std::vector<int> members() const;
};

/// X with block(i,j) = T~(p_i p_j^{-1}).
HermitianBlockMatrix build_tilde_gram(const Representation& rep,
                                      const ConeTuple& t);

struct StarVerdict {
  bool holds = false;
  double lambda_min = 0.0;  // of X - D* X D
};

/// Condition (*): D* X D <= X for D = diag(T(g),...,T(g)). Requires g
/// positive with g n p_i = e for every i (ContractError otherwise).
StarVerdict check_condition_star(const Representation& rep, const ConeTuple& t,
                                 const GroupElement& g, double tol = kPsdTol);

/// (p_1 g, ..., p_k g, p_1, ..., p_k); requires g n p_i = e.
ConeTuple double_tuple(const ConeTuple& t, const GroupElement& g);

/// g = meet over J (0-based indices); the J entries become p_j g^{-1}.
std::pair<GroupElement, ConeTuple> reduce_step(const ConeTuple& t,
                                               const std::vector<int>& subset);

enum class CertAction { BaseStarLeaf, Doubling, MeetDivide };
enum class CertVerdict { Pass, Fail, Unverified };

/// One node of a regularity certificate. Leaves are star-condition checks
/// (the 2x2 contractivity base is the star check on the singleton identity
/// tuple); internal nodes record which reduction produced their children.
struct CertNode {
  ConeTuple tuple;
  CertAction action = CertAction::BaseStarLeaf;
  std::optional<GroupElement> g;  // star leaves and meet-divide nodes
  std::vector<int> subset;        // meet-divide: the index set J (0-based)
  CertVerdict verdict = CertVerdict::Unverified;
  double lambda_min = 0.0;        // star leaves only
  std::vector<std::shared_ptr<const CertNode>> children;
};

struct Certificate {
  std::shared_ptr<const CertNode> root;
  CertVerdict verdict = CertVerdict::Unverified;

  bool passed() const { return verdict == CertVerdict::Pass; }
  bool has_failing_leaf() const;
  bool has_unverified() const;
};

/// Executes the reduction behind the regularity criterion: normalize by the
/// global meet, split off maximal-size subsets with nontrivial meet
/// (meet-divide), and close pairwise-disjoint tuples through the doubling
/// chain of star checks. A passing certificate witnesses that the gram
/// window of `t` is PSD.
Certificate certify_regularity(const Representation& rep, const ConeTuple& t,
                               int depth_limit = 64,
                               long long coord_sum_bound = 256);

/// Eigenchecks every gram window over the grid {0..max_entry}^n (window
/// sizes up to 4, largest first) plus `extra_random` seeded tuples of size
/// up to 6. The witness is the window with the worst minimal eigenvalue.
Report check_regular_sampled(const Representation& rep, long max_entry,
                             long extra_random, std::uint64_t seed,
                             double tol = kPsdTol);

/// Z_U = sum over V subseteq U of (-1)^|V| T(e_V)* T(e_V).
CMat brehmer_operator(const Representation& rep, const BrehmerIndex& u);

/// is_psd(Z_U) for every U, plus the recursion
/// Z_{J u {w}} = Z_J - T_w* Z_J T_w as a matrix identity within 1e-10.
/// Requires n <= 12.
Report check_brehmer(const Representation& rep, double tol = kPsdTol);

/// Subsets of {1..n} ordered by cardinality descending, then bitmask
/// descending; reproduces {1,2},{2},{1},{} for n = 2. Published constant of
/// the factorization layout.
std::vector<std::uint32_t> brehmer_subset_order(int n);

struct BrehmerFactorization {
  std::vector<std::uint32_t> subset_order;
  CMat r;                        // R with R* R = X
  HermitianBlockMatrix x;        // X with (U,V) block T~(p_U - p_V)
  double residual = 0.0;         // ||R* R - X||
  double telescope_defect = 0.0; // worst Lemma-6.3 defect over F
  bool upper_triangular = false; // under the published ordering
};

/// R(U,V) = Z_{J_n \ U}^{1/2} T_{U \ V} for V subseteq U, else 0. Requires
/// every Z_J PSD (ContractError naming the violating J otherwise); the
/// factorization residual and the telescoping identity are verified as
/// postconditions.
BrehmerFactorization factorize_brehmer(const Representation& rep, int n);

}  // namespace latreg

#endif
