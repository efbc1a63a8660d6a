#ifndef LATREG_GROUP_ELEMENT_HPP
#define LATREG_GROUP_ELEMENT_HPP

#include <utility>
#include <variant>
#include <vector>

#include "latreg/pl_bijection.hpp"

namespace latreg {

enum class GroupKind { Zn, LexZ, PL, Product };

/// Shape of a concrete lattice ordered group instance. Two elements
/// interoperate iff their specs compare equal.
struct GroupSpec {
  GroupKind kind = GroupKind::Zn;
  int size = 0;                       // vector length for Zn / LexZ
  std::vector<GroupSpec> components;  // Product only

  static GroupSpec zn(int n) { return {GroupKind::Zn, n, {}}; }
  static GroupSpec lex(int k) { return {GroupKind::LexZ, k, {}}; }
  static GroupSpec pl() { return {GroupKind::PL, 0, {}}; }
  static GroupSpec product(std::vector<GroupSpec> comps) {
    return {GroupKind::Product, 0, std::move(comps)};
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.kind == b.kind && a.size == b.size && a.components == b.components;
  }
};

class GroupElement;

struct ZnVec {
  std::vector<long long> v;
  friend bool operator==(const ZnVec& a, const ZnVec& b) { return a.v == b.v; }
};

struct LexZk {
  std::vector<long long> v;
  friend bool operator==(const LexZk& a, const LexZk& b) { return a.v == b.v; }
};

struct ProductTuple {
  std::vector<GroupElement> parts;
  friend bool operator==(const ProductTuple& a, const ProductTuple& b);
};

/// A value in one of the concrete lattice ordered groups: Z^n with the
/// componentwise order, Z^k with the lexicographic (total) order, the group
/// of increasing PL bijections of the line under composition with the
/// pointwise order, or a finite direct product of such groups.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement zn(std::vector<long long> v);
  static GroupElement lex(std::vector<long long> v);
  static GroupElement pl(PLBijection f);
  static GroupElement product(std::vector<GroupElement> parts);

  GroupKind kind() const;
  GroupSpec spec() const;

  const std::vector<long long>& coords() const;       // Zn / LexZ only
  const PLBijection& pl_map() const;                  // PL only
  const std::vector<GroupElement>& parts() const;     // Product only

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.payload_ == b.payload_;
  }

 private:
  std::variant<ZnVec, LexZk, PLBijection, ProductTuple> payload_;
};

enum class GroupOp { Multiply, InverseOfFirst, IdentityOfGroup };

/// The spec-level entry point for the plain group structure; the named
/// helpers below are what the rest of the library calls.
GroupElement group_op(const GroupElement& a, const GroupElement& b, GroupOp op);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement identity_like(const GroupElement& a);
GroupElement identity_of(const GroupSpec& spec);

/// Returns (a n b, a u b).
std::pair<GroupElement, GroupElement> meet_join(const GroupElement& a,
                                                const GroupElement& b);
GroupElement meet(const GroupElement& a, const GroupElement& b);
GroupElement join(const GroupElement& a, const GroupElement& b);

bool is_identity(const GroupElement& a);
bool is_positive(const GroupElement& a);
bool leq(const GroupElement& a, const GroupElement& b);

/// (g_+, g_-) with g = g_+ g_-^{-1}, g_+ n g_- = e, both positive.
std::pair<GroupElement, GroupElement> pos_neg_parts(const GroupElement& g);

/// ((pq^{-1})_+, (pq^{-1})_-) computed as p(p n q)^{-1}, q(p n q)^{-1}.
/// Requires p, q positive.
std::pair<GroupElement, GroupElement> quotient_parts(const GroupElement& p,
                                                     const GroupElement& q);

}  // namespace latreg

#endif
