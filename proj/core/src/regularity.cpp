#include "latreg/regularity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <string>

#include "latreg/parallel.hpp"
#include "latreg/rng.hpp"
#include "latreg/serialization.hpp"

namespace latreg {

ConeTuple ConeTuple::of(std::vector<std::vector<long long>> rows) {
  ConeTuple t;
  t.elems.reserve(rows.size());
  for (auto& r : rows) t.elems.push_back(GroupElement::zn(std::move(r)));
  return t;
}

void ConeTuple::validate(int n) const {
  if (elems.empty()) throw ContractError("ConeTuple: tuple must be nonempty");
  for (const auto& p : elems) {
    if (p.kind() != GroupKind::Zn ||
        p.coords().size() != static_cast<std::size_t>(n))
      throw ContractError("ConeTuple: entries must be Z^n vectors of matching length");
    if (!is_positive(p))
      throw ContractError("ConeTuple: entries must be positive");
  }
}

BrehmerIndex BrehmerIndex::of(std::initializer_list<int> members, int n) {
  BrehmerIndex u;
  u.n = n;
  for (int m : members) {
    if (m < 1 || m > n) throw ContractError("BrehmerIndex: member out of range");
    u.mask |= 1u << (m - 1);
  }
  return u;
}

std::vector<int> BrehmerIndex::members() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

namespace {

long long coord_sum(const GroupElement& p) {
  long long s = 0;
  for (auto x : p.coords()) s += x;
  return s;
}

GroupElement meet_over(const ConeTuple& t, std::uint32_t mask) {
  GroupElement acc;
  bool first = true;
  for (int i = 0; i < t.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    acc = first ? t.elems[i] : meet(acc, t.elems[i]);
    first = false;
  }
  return acc;
}

Json window_json(const ConeTuple& t) {
  Json w = Json::array();
  for (const auto& p : t.elems) w.push_back(p.coords());
  return w;
}

}  // namespace

HermitianBlockMatrix build_tilde_gram(const Representation& rep,
                                      const ConeTuple& t) {
  t.validate(rep.n);
  const int k = t.size();
  HermitianBlockMatrix x(k, rep.d);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const GroupElement diff = multiply(t.elems[i], inverse(t.elems[j]));
      x.block(i, j) = eval_tilde(rep, diff).matrix;
    }
  return x;
}

StarVerdict check_condition_star(const Representation& rep, const ConeTuple& t,
                                 const GroupElement& g, double tol) {
  t.validate(rep.n);
  if (!is_positive(g))
    throw ContractError("check_condition_star: g must be positive");
  for (const auto& p : t.elems)
    if (!is_identity(meet(g, p)))
      throw ContractError("check_condition_star: hypothesis g n p_i = e violated");
  const HermitianBlockMatrix x = build_tilde_gram(rep, t);
  const CMat d = kron(CMat::Identity(t.size(), t.size()), eval(rep, g));
  const CMat moved = d.adjoint() * x.flat() * d;
  const PsdVerdict v = loewner_leq(moved, x.flat(), tol);
  return {v.psd, v.lambda_min};
}

ConeTuple double_tuple(const ConeTuple& t, const GroupElement& g) {
  for (const auto& p : t.elems)
    if (!is_identity(meet(g, p)))
      throw ContractError("double_tuple: hypothesis g n p_i = e violated");
  ConeTuple out;
  out.elems.reserve(2 * t.elems.size());
  for (const auto& p : t.elems) out.elems.push_back(multiply(p, g));
  for (const auto& p : t.elems) out.elems.push_back(p);
  return out;
}

std::pair<GroupElement, ConeTuple> reduce_step(const ConeTuple& t,
                                               const std::vector<int>& subset) {
  if (subset.empty()) throw ContractError("reduce_step: J must be nonempty");
  std::uint32_t mask = 0;
  for (int j : subset) {
    if (j < 0 || j >= t.size()) throw ContractError("reduce_step: index out of range");
    mask |= 1u << j;
  }
  const GroupElement g = meet_over(t, mask);
  const GroupElement g_inv = inverse(g);
  ConeTuple out = t;
  for (int j = 0; j < t.size(); ++j)
    if (mask & (1u << j)) out.elems[j] = multiply(t.elems[j], g_inv);
  return {g, out};
}

bool Certificate::has_failing_leaf() const {
  if (!root) return false;
  bool found = false;
  auto walk = [&](auto&& self, const CertNode& node) -> void {
    if (node.children.empty() && node.action == CertAction::BaseStarLeaf &&
        node.verdict == CertVerdict::Fail)
      found = true;
    for (const auto& c : node.children)
      if (!found) self(self, *c);
  };
  walk(walk, *root);
  return found;
}

bool Certificate::has_unverified() const {
  if (!root) return false;
  bool found = false;
  auto walk = [&](auto&& self, const CertNode& node) -> void {
    if (node.verdict == CertVerdict::Unverified && node.children.empty())
      found = true;
    for (const auto& c : node.children)
      if (!found) self(self, *c);
  };
  walk(walk, *root);
  return found;
}

namespace {

struct CertifyContext {
  const Representation& rep;
  double tol;
  int depth_limit;
  std::map<std::string, std::shared_ptr<const CertNode>> memo;
};

std::string tuple_key(const ConeTuple& t) {
  // PSD of a gram window is invariant under permuting the tuple, so the memo
  // key sorts the rows.
  std::vector<std::string> rows;
  rows.reserve(t.elems.size());
  for (const auto& p : t.elems) {
    std::ostringstream os;
    for (auto x : p.coords()) os << x << ',';
    rows.push_back(os.str());
  }
  std::sort(rows.begin(), rows.end());
  std::string key;
  for (const auto& r : rows) {
    key += r;
    key += ';';
  }
  return key;
}

CertVerdict combine(const std::vector<std::shared_ptr<const CertNode>>& kids) {
  CertVerdict v = CertVerdict::Pass;
  for (const auto& c : kids) {
    if (c->verdict == CertVerdict::Fail) return CertVerdict::Fail;
    if (c->verdict == CertVerdict::Unverified) v = CertVerdict::Unverified;
  }
  return v;
}

std::shared_ptr<const CertNode> star_leaf(CertifyContext& ctx,
                                          const ConeTuple& t,
                                          const GroupElement& g) {
  auto node = std::make_shared<CertNode>();
  node->tuple = t;
  node->action = CertAction::BaseStarLeaf;
  node->g = g;
  const StarVerdict v = check_condition_star(ctx.rep, t, g, ctx.tol);
  node->verdict = v.holds ? CertVerdict::Pass : CertVerdict::Fail;
  node->lambda_min = v.lambda_min;
  return node;
}

std::shared_ptr<const CertNode> certify_node(CertifyContext& ctx,
                                             const ConeTuple& t, int depth) {
  const std::string key = tuple_key(t);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

  auto publish = [&](std::shared_ptr<const CertNode> node) {
    ctx.memo.emplace(key, node);
    return node;
  };

  if (depth > ctx.depth_limit) {
    auto node = std::make_shared<CertNode>();
    node->tuple = t;
    node->action = CertAction::BaseStarLeaf;
    node->verdict = CertVerdict::Unverified;
    return publish(std::move(node));
  }

  const int k = t.size();
  const GroupElement e = identity_like(t.elems[0]);

  if (k == 1) {
    // X = [T~(e)] = [I]; the star check with g = e is the trivial base fact.
    return publish(star_leaf(ctx, t, e));
  }

  // Normalize by the global meet; the gram window is unchanged.
  const GroupElement g0 = meet_over(t, (1u << k) - 1);
  if (!is_identity(g0)) {
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    auto [g, reduced] = reduce_step(t, all);
    auto node = std::make_shared<CertNode>();
    node->tuple = t;
    node->action = CertAction::MeetDivide;
    node->g = g;
    node->subset = all;
    node->children = {certify_node(ctx, reduced, depth + 1)};
    node->verdict = node->children[0]->verdict;
    return publish(std::move(node));
  }

  // m = largest subset size with nontrivial meet (1 when pairwise disjoint).
  int m = 1;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    const int size = std::popcount(mask);
    if (size < 2 || size <= m) continue;
    if (!is_identity(meet_over(t, mask))) m = size;
  }

  if (m == 1) {
    // Pairwise-disjoint base case: the doubling chain. Stage s checks the
    // star condition for g = p_{s+1} against the chain tuple built so far;
    // the original window is a principal sub-window of the final chain gram.
    auto node = std::make_shared<CertNode>();
    node->tuple = t;
    node->action = CertAction::Doubling;
    ConeTuple chain;
    chain.elems = {e};
    for (int s = 0; s < k; ++s) {
      node->children.push_back(star_leaf(ctx, chain, t.elems[s]));
      chain = double_tuple(chain, t.elems[s]);
    }
    node->verdict = combine(node->children);
    return publish(std::move(node));
  }

  // Reduce one size-m subset with maximal meet (largest meets first,
  // bitmask ascending as the tie break).
  std::uint32_t best_mask = 0;
  long long best_sum = -1;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    if (std::popcount(mask) != m) continue;
    const GroupElement g = meet_over(t, mask);
    if (is_identity(g)) continue;
    const long long sum = coord_sum(g);
    if (sum > best_sum) {
      best_sum = sum;
      best_mask = mask;
    }
  }

  std::vector<int> j_set;
  ConeTuple sub;
  for (int i = 0; i < k; ++i) {
    if (best_mask & (1u << i)) j_set.push_back(i);
    else sub.elems.push_back(t.elems[i]);
  }
  auto [g, reduced] = reduce_step(t, j_set);

  auto node = std::make_shared<CertNode>();
  node->tuple = t;
  node->action = CertAction::MeetDivide;
  node->g = g;
  node->subset = j_set;
  node->children = {certify_node(ctx, reduced, depth + 1),
                    certify_node(ctx, sub, depth + 1),
                    star_leaf(ctx, sub, g)};
  node->verdict = combine(node->children);
  return publish(std::move(node));
}

}  // namespace

Certificate certify_regularity(const Representation& rep, const ConeTuple& t,
                               int depth_limit, long long coord_sum_bound) {
  t.validate(rep.n);
  long long total = 0;
  for (const auto& p : t.elems) total += coord_sum(p);
  if (total > coord_sum_bound)
    throw ContractError("certify_regularity: tuple coordinate sum exceeds the configured bound");
  CertifyContext ctx{rep, kPsdTol, depth_limit, {}};
  Certificate cert;
  cert.root = certify_node(ctx, t, 0);
  cert.verdict = cert.root->verdict;
  return cert;
}

Report check_regular_sampled(const Representation& rep, long max_entry,
                             long extra_random, std::uint64_t seed,
                             double tol) {
  return timed_report([&] {
    Report r;
    r.check = "regular-sampled";
    r.seed = seed;
    r.tolerances = {{"psd", tol}};

    // Grid points of {0..max_entry}^n in lexicographic order.
    std::vector<std::vector<long long>> grid;
    std::vector<long long> point(rep.n, 0);
    for (;;) {
      grid.push_back(point);
      int i = rep.n - 1;
      while (i >= 0 && point[i] == max_entry) point[i--] = 0;
      if (i < 0) break;
      ++point[i];
    }

    // Windows: all grid subsets of size <= 4, largest first, then seeded
    // random tuples of size <= 6.
    std::vector<ConeTuple> windows;
    const int max_size = static_cast<int>(std::min<std::size_t>(4, grid.size()));
    for (int size = max_size; size >= 1; --size) {
      std::vector<int> idx(size);
      for (int i = 0; i < size; ++i) idx[i] = i;
      for (;;) {
        ConeTuple t;
        for (int i : idx) t.elems.push_back(GroupElement::zn(grid[i]));
        windows.push_back(std::move(t));
        int i = size - 1;
        while (i >= 0 && idx[i] == static_cast<int>(grid.size()) - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    const std::size_t grid_windows = windows.size();
    Rng rng(seed);
    for (long trial = 0; trial < extra_random; ++trial) {
      const int size = static_cast<int>(rng.uniform_int(1, 6));
      ConeTuple t;
      for (int i = 0; i < size; ++i) {
        std::vector<long long> v(rep.n);
        for (auto& x : v) x = rng.uniform_int(0, max_entry + 2);
        t.elems.push_back(GroupElement::zn(std::move(v)));
      }
      windows.push_back(std::move(t));
    }

    std::vector<PsdVerdict> verdicts(windows.size());
    parallel_for(windows.size(), [&](std::size_t i) {
      verdicts[i] = is_psd(build_tilde_gram(rep, windows[i]).flat(), tol);
    });

    long failures = 0;
    double worst = 0.0;
    std::size_t worst_index = 0;
    bool first = true;
    for (std::size_t i = 0; i < windows.size(); ++i) {
      if (!verdicts[i].psd) ++failures;
      if (first || verdicts[i].lambda_min < worst) {
        first = false;
        worst = verdicts[i].lambda_min;
        worst_index = i;
      }
    }

    r.lambda_min = worst;
    r.passed = failures == 0;
    r.witness = window_json(windows[worst_index]);
    r.details = {{"grid_windows", grid_windows},
                 {"random_windows", windows.size() - grid_windows},
                 {"failures", failures},
                 {"max_entry", max_entry}};
    return r;
  });
}

namespace {

// T(e_V) for every mask over the first n generators.
std::vector<CMat> subset_products(const Representation& rep, int n) {
  std::vector<CMat> tv(std::size_t{1} << n);
  tv[0] = CMat::Identity(rep.d, rep.d);
  for (std::uint32_t mask = 1; mask < tv.size(); ++mask) {
    const int low = std::countr_zero(mask);
    tv[mask] = rep.gens[low] * tv[mask & (mask - 1)];
  }
  return tv;
}

std::vector<CMat> brehmer_all(const Representation& rep, int n,
                              const std::vector<CMat>& tv) {
  std::vector<CMat> z(std::size_t{1} << n);
  for (std::uint32_t u = 0; u < z.size(); ++u) {
    CMat acc = CMat::Identity(rep.d, rep.d);  // V = empty set
    for (std::uint32_t v = u; v != 0; v = (v - 1) & u) {
      const double sign = (std::popcount(v) % 2 == 0) ? 1.0 : -1.0;
      acc += sign * (tv[v].adjoint() * tv[v]);
    }
    z[u] = acc;
  }
  return z;
}

std::string mask_name(std::uint32_t mask, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

}  // namespace

CMat brehmer_operator(const Representation& rep, const BrehmerIndex& u) {
  if (u.n != rep.n || u.mask >= (1u << rep.n))
    throw ContractError("brehmer_operator: subset index out of range");
  const auto tv = subset_products(rep, rep.n);
  CMat acc = CMat::Identity(rep.d, rep.d);
  for (std::uint32_t v = u.mask; v != 0; v = (v - 1) & u.mask) {
    const double sign = (std::popcount(v) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * (tv[v].adjoint() * tv[v]);
  }
  return acc;
}

Report check_brehmer(const Representation& rep, double tol) {
  if (rep.n > 12)
    throw ContractError("check_brehmer: n <= 12 required (2^n subsets)");
  return timed_report([&] {
    Report r;
    r.check = "brehmer";
    r.tolerances = {{"psd", tol}, {"identity_defect", 1e-10}};
    const auto tv = subset_products(rep, rep.n);
    const auto z = brehmer_all(rep, rep.n, tv);

    double worst = 0.0;
    bool first = true;
    long failures = 0;
    for (std::uint32_t u = 0; u < z.size(); ++u) {
      const PsdVerdict v = is_psd(z[u], tol);
      if (!v.psd) {
        ++failures;
        if (r.witness.is_null())
          r.witness = Json{{"U", BrehmerIndex{u, rep.n}.members()},
                           {"lambda_min", v.lambda_min}};
      }
      if (first || v.lambda_min < worst) {
        first = false;
        worst = v.lambda_min;
      }
    }

    // Lemma-style recursion: Z_{J u {w}} = Z_J - T_w* Z_J T_w exactly.
    double identity_defect = 0.0;
    for (std::uint32_t j = 0; j < z.size(); ++j)
      for (int w = 0; w < rep.n; ++w) {
        if (j & (1u << w)) continue;
        const CMat rhs = z[j] - rep.gens[w].adjoint() * z[j] * rep.gens[w];
        identity_defect =
            std::max(identity_defect, spectral_norm(z[j | (1u << w)] - rhs));
      }

    r.lambda_min = worst;
    r.details = {{"subsets", z.size()},
                 {"failures", failures},
                 {"identity_max_defect", identity_defect}};
    r.passed = failures == 0 && identity_defect <= 1e-10;
    return r;
  });
}

std::vector<std::uint32_t> brehmer_subset_order(int n) {
  std::vector<std::uint32_t> order(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < order.size(); ++m) order[m] = m;
  std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca > cb;
    return a > b;
  });
  return order;
}

BrehmerFactorization factorize_brehmer(const Representation& rep, int n) {
  if (n < 1 || n > rep.n || n > 12)
    throw ContractError("factorize_brehmer: need 1 <= n <= min(rep.n, 12)");
  const auto tv = subset_products(rep, n);
  const auto z = brehmer_all(rep, n, tv);
  for (std::uint32_t j = 0; j < z.size(); ++j) {
    const PsdVerdict v = is_psd(z[j]);
    if (!v.psd) {
      std::ostringstream os;
      os << "factorize_brehmer: Z_" << mask_name(j, n)
         << " is not PSD (lambda_min " << v.lambda_min << ")";
      throw ContractError(os.str());
    }
  }
  std::vector<CMat> sqrt_z(z.size());
  for (std::uint32_t j = 0; j < z.size(); ++j) sqrt_z[j] = psd_sqrt(z[j]);

  const std::uint32_t full = (1u << n) - 1;
  const auto order = brehmer_subset_order(n);
  const int blocks = static_cast<int>(order.size());
  const int d = rep.d;

  BrehmerFactorization out{order, CMat::Zero(static_cast<Eigen::Index>(blocks) * d,
                                             static_cast<Eigen::Index>(blocks) * d),
                           HermitianBlockMatrix(blocks, d), 0.0, 0.0, true};

  auto p_of = [&](std::uint32_t mask) {
    std::vector<long long> v(rep.n, 0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) v[i] = 1;
    return GroupElement::zn(std::move(v));
  };

  for (int a = 0; a < blocks; ++a) {
    const std::uint32_t u = order[a];
    for (int b = 0; b < blocks; ++b) {
      const std::uint32_t v = order[b];
      const GroupElement diff = multiply(p_of(u), inverse(p_of(v)));
      out.x.block(a, b) = eval_tilde(rep, diff).matrix;
      if ((v & ~u) == 0)  // V subseteq U
        out.r.block(static_cast<Eigen::Index>(a) * d,
                    static_cast<Eigen::Index>(b) * d, d, d) =
            sqrt_z[full & ~u] * tv[u & ~v];
    }
  }

  const double x_norm = spectral_norm(out.x.flat());
  out.residual = spectral_norm(out.r.adjoint() * out.r - out.x.flat());
  if (out.residual > 1e-9 * std::max(1.0, x_norm)) {
    std::ostringstream os;
    os << "factorize_brehmer: residual " << out.residual
       << " exceeds 1e-9 relative";
    throw NumericError(os.str());
  }

  // Telescoping identity for every F.
  for (std::uint32_t f = 0; f <= full; ++f) {
    CMat acc = z[f];  // U = empty contributes Z_F
    for (std::uint32_t u = f; u != 0; u = (u - 1) & f)
      acc += tv[u].adjoint() * z[f & ~u] * tv[u];
    out.telescope_defect = std::max(
        out.telescope_defect,
        spectral_norm(acc - CMat::Identity(rep.d, rep.d)));
  }
  if (out.telescope_defect > 1e-10)
    throw NumericError("factorize_brehmer: telescoping identity defect exceeds 1e-10");

  // Triangularity under the published ordering.
  for (int a = 0; a < blocks && out.upper_triangular; ++a)
    for (int b = 0; b < a; ++b)
      if (out.r.block(static_cast<Eigen::Index>(a) * d,
                      static_cast<Eigen::Index>(b) * d, d, d)
              .norm() > 1e-14) {
        out.upper_triangular = false;
        break;
      }
  return out;
}

}  // namespace latreg
