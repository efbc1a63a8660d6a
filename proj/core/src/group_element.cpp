#include "latreg/group_element.hpp"

#include <algorithm>

#include "latreg/errors.hpp"

namespace latreg {

bool operator==(const ProductTuple& a, const ProductTuple& b) {
  return a.parts == b.parts;
}

GroupElement GroupElement::zn(std::vector<long long> v) {
  GroupElement e;
  e.payload_ = ZnVec{std::move(v)};
  return e;
}

GroupElement GroupElement::lex(std::vector<long long> v) {
  GroupElement e;
  e.payload_ = LexZk{std::move(v)};
  return e;
}

GroupElement GroupElement::pl(PLBijection f) {
  GroupElement e;
  e.payload_ = std::move(f);
  return e;
}

GroupElement GroupElement::product(std::vector<GroupElement> parts) {
  GroupElement e;
  e.payload_ = ProductTuple{std::move(parts)};
  return e;
}

GroupKind GroupElement::kind() const {
  switch (payload_.index()) {
    case 0: return GroupKind::Zn;
    case 1: return GroupKind::LexZ;
    case 2: return GroupKind::PL;
    default: return GroupKind::Product;
  }
}

GroupSpec GroupElement::spec() const {
  switch (kind()) {
    case GroupKind::Zn: return GroupSpec::zn(static_cast<int>(coords().size()));
    case GroupKind::LexZ: return GroupSpec::lex(static_cast<int>(coords().size()));
    case GroupKind::PL: return GroupSpec::pl();
    case GroupKind::Product: {
      std::vector<GroupSpec> comps;
      comps.reserve(parts().size());
      for (const auto& p : parts()) comps.push_back(p.spec());
      return GroupSpec::product(std::move(comps));
    }
  }
  throw StructuralError("GroupElement: corrupt payload");
}

const std::vector<long long>& GroupElement::coords() const {
  if (auto* z = std::get_if<ZnVec>(&payload_)) return z->v;
  if (auto* l = std::get_if<LexZk>(&payload_)) return l->v;
  throw StructuralError("GroupElement: coords() on a non-vector element");
}

const PLBijection& GroupElement::pl_map() const {
  if (auto* f = std::get_if<PLBijection>(&payload_)) return *f;
  throw StructuralError("GroupElement: pl_map() on a non-PL element");
}

const std::vector<GroupElement>& GroupElement::parts() const {
  if (auto* p = std::get_if<ProductTuple>(&payload_)) return p->parts;
  throw StructuralError("GroupElement: parts() on a non-product element");
}

namespace {

void require_same_instance(const GroupElement& a, const GroupElement& b) {
  if (!(a.spec() == b.spec()))
    throw StructuralError("group operation on elements of different group instances");
}

// Lexicographic a < b.
bool lex_less(const std::vector<long long>& a, const std::vector<long long>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same_instance(a, b);
  switch (a.kind()) {
    case GroupKind::Zn:
    case GroupKind::LexZ: {
      std::vector<long long> v = a.coords();
      const auto& w = b.coords();
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
      return a.kind() == GroupKind::Zn ? GroupElement::zn(std::move(v))
                                       : GroupElement::lex(std::move(v));
    }
    case GroupKind::PL:
      // (a b)(x) = a(b(x)); composition is the group law.
      return GroupElement::pl(PLBijection::compose(a.pl_map(), b.pl_map()));
    case GroupKind::Product: {
      std::vector<GroupElement> out;
      out.reserve(a.parts().size());
      for (std::size_t i = 0; i < a.parts().size(); ++i)
        out.push_back(multiply(a.parts()[i], b.parts()[i]));
      return GroupElement::product(std::move(out));
    }
  }
  throw StructuralError("multiply: corrupt element");
}

GroupElement inverse(const GroupElement& a) {
  switch (a.kind()) {
    case GroupKind::Zn:
    case GroupKind::LexZ: {
      std::vector<long long> v = a.coords();
      for (auto& x : v) x = -x;
      return a.kind() == GroupKind::Zn ? GroupElement::zn(std::move(v))
                                       : GroupElement::lex(std::move(v));
    }
    case GroupKind::PL:
      return GroupElement::pl(a.pl_map().inverse());
    case GroupKind::Product: {
      std::vector<GroupElement> out;
      out.reserve(a.parts().size());
      for (const auto& p : a.parts()) out.push_back(inverse(p));
      return GroupElement::product(std::move(out));
    }
  }
  throw StructuralError("inverse: corrupt element");
}

GroupElement identity_of(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::Zn:
      return GroupElement::zn(std::vector<long long>(spec.size, 0));
    case GroupKind::LexZ:
      return GroupElement::lex(std::vector<long long>(spec.size, 0));
    case GroupKind::PL:
      return GroupElement::pl(PLBijection{});
    case GroupKind::Product: {
      std::vector<GroupElement> out;
      out.reserve(spec.components.size());
      for (const auto& c : spec.components) out.push_back(identity_of(c));
      return GroupElement::product(std::move(out));
    }
  }
  throw StructuralError("identity_of: corrupt spec");
}

GroupElement identity_like(const GroupElement& a) { return identity_of(a.spec()); }

GroupElement group_op(const GroupElement& a, const GroupElement& b, GroupOp op) {
  switch (op) {
    case GroupOp::Multiply: return multiply(a, b);
    case GroupOp::InverseOfFirst: return inverse(a);
    case GroupOp::IdentityOfGroup: return identity_like(a);
  }
  throw StructuralError("group_op: unknown operation");
}

std::pair<GroupElement, GroupElement> meet_join(const GroupElement& a,
                                                const GroupElement& b) {
  require_same_instance(a, b);
  switch (a.kind()) {
    case GroupKind::Zn: {
      std::vector<long long> lo = a.coords(), hi = a.coords();
      const auto& w = b.coords();
      for (std::size_t i = 0; i < lo.size(); ++i) {
        lo[i] = std::min(lo[i], w[i]);
        hi[i] = std::max(hi[i], w[i]);
      }
      return {GroupElement::zn(std::move(lo)), GroupElement::zn(std::move(hi))};
    }
    case GroupKind::LexZ: {
      // Total order: meet and join are min and max.
      const bool a_less = lex_less(a.coords(), b.coords());
      return a_less ? std::pair{a, b} : std::pair{b, a};
    }
    case GroupKind::PL:
      return {GroupElement::pl(PLBijection::pointwise_min(a.pl_map(), b.pl_map())),
              GroupElement::pl(PLBijection::pointwise_max(a.pl_map(), b.pl_map()))};
    case GroupKind::Product: {
      std::vector<GroupElement> lo, hi;
      lo.reserve(a.parts().size());
      hi.reserve(a.parts().size());
      for (std::size_t i = 0; i < a.parts().size(); ++i) {
        auto [m, j] = meet_join(a.parts()[i], b.parts()[i]);
        lo.push_back(std::move(m));
        hi.push_back(std::move(j));
      }
      return {GroupElement::product(std::move(lo)),
              GroupElement::product(std::move(hi))};
    }
  }
  throw StructuralError("meet_join: corrupt element");
}

GroupElement meet(const GroupElement& a, const GroupElement& b) {
  return meet_join(a, b).first;
}

GroupElement join(const GroupElement& a, const GroupElement& b) {
  return meet_join(a, b).second;
}

bool is_identity(const GroupElement& a) { return a == identity_like(a); }

bool is_positive(const GroupElement& a) {
  switch (a.kind()) {
    case GroupKind::Zn: {
      for (auto x : a.coords())
        if (x < 0) return false;
      return true;
    }
    case GroupKind::LexZ: {
      // Zero, or first nonzero coordinate positive.
      for (auto x : a.coords()) {
        if (x > 0) return true;
        if (x < 0) return false;
      }
      return true;
    }
    case GroupKind::PL:
      return a.pl_map().dominates_identity();
    case GroupKind::Product: {
      for (const auto& p : a.parts())
        if (!is_positive(p)) return false;
      return true;
    }
  }
  throw StructuralError("is_positive: corrupt element");
}

bool leq(const GroupElement& a, const GroupElement& b) {
  return is_positive(multiply(inverse(a), b));
}

std::pair<GroupElement, GroupElement> pos_neg_parts(const GroupElement& g) {
  const GroupElement e = identity_like(g);
  return {join(g, e), join(inverse(g), e)};
}

std::pair<GroupElement, GroupElement> quotient_parts(const GroupElement& p,
                                                     const GroupElement& q) {
  if (!is_positive(p) || !is_positive(q))
    throw ContractError("quotient_parts: p and q must be positive");
  const GroupElement m_inv = inverse(meet(p, q));
  return {multiply(p, m_inv), multiply(q, m_inv)};
}

}  // namespace latreg
