#include "latreg/laws.hpp"

#include <functional>
#include <string>
#include <vector>

#include "latreg/sampler.hpp"
#include "latreg/serialization.hpp"

namespace latreg {

namespace {

struct LawStats {
  std::string name;
  long trials = 0;
  long failures = 0;
};

}  // namespace

Report law_suite(const GroupSpec& spec, std::uint64_t seed, long trials) {
  return timed_report([&] {
    Report r;
    r.check = "law-suite";
    r.seed = seed;
    r.tolerances = Json::object();  // exact arithmetic throughout
    ElementSampler sampler(spec, seed);
    const GroupElement e = identity_of(spec);

    std::vector<LawStats> stats;
    auto run = [&](const char* name, const std::function<bool(Json&)>& law) {
      LawStats s;
      s.name = name;
      for (long i = 0; i < trials; ++i) {
        ++s.trials;
        Json witness;
        if (!law(witness)) {
          ++s.failures;
          if (r.witness.is_null())
            r.witness = Json{{"law", name}, {"elements", witness}};
        }
      }
      stats.push_back(std::move(s));
    };

    auto record = [](Json& w, std::initializer_list<std::pair<const char*, const GroupElement*>> items) {
      for (const auto& [key, val] : items) w[key] = to_json(*val);
    };

    run("join-distributive", [&](Json& w) {
      const GroupElement a = sampler.sample(), b = sampler.sample(), c = sampler.sample();
      record(w, {{"a", &a}, {"b", &b}, {"c", &c}});
      return multiply(a, join(b, c)) == join(multiply(a, b), multiply(a, c)) &&
             multiply(join(b, c), a) == join(multiply(b, a), multiply(c, a));
    });

    run("meet-distributive", [&](Json& w) {
      const GroupElement a = sampler.sample(), b = sampler.sample(), c = sampler.sample();
      record(w, {{"a", &a}, {"b", &b}, {"c", &c}});
      return multiply(a, meet(b, c)) == meet(multiply(a, b), multiply(a, c)) &&
             multiply(meet(b, c), a) == meet(multiply(b, a), multiply(c, a));
    });

    run("inverse-demorgan", [&](Json& w) {
      const GroupElement a = sampler.sample(), b = sampler.sample();
      record(w, {{"a", &a}, {"b", &b}});
      return inverse(meet(a, b)) == join(inverse(a), inverse(b)) &&
             inverse(join(a, b)) == meet(inverse(a), inverse(b));
    });

    run("order-reversal", [&](Json& w) {
      // a >= b iff a^{-1} <= b^{-1}; exercised on comparable pairs.
      const GroupElement b = sampler.sample();
      const GroupElement a = join(b, sampler.sample());
      record(w, {{"a", &a}, {"b", &b}});
      return leq(b, a) == leq(inverse(a), inverse(b)) && leq(inverse(a), inverse(b));
    });

    run("meet-complement-join", [&](Json& w) {
      const GroupElement a = sampler.sample(), b = sampler.sample();
      record(w, {{"a", &a}, {"b", &b}});
      return multiply(multiply(a, inverse(meet(a, b))), b) == join(a, b);
    });

    run("disjoint-commute", [&](Json& w) {
      const auto [a, b] = sampler.sample_disjoint_positive_pair();
      record(w, {{"a", &a}, {"b", &b}});
      const GroupElement ab = multiply(a, b);
      return ab == multiply(b, a) && ab == join(a, b);
    });

    run("meet-submultiplicative", [&](Json& w) {
      const GroupElement a = sampler.sample_positive(), b = sampler.sample_positive(),
                         c = sampler.sample_positive();
      record(w, {{"a", &a}, {"b", &b}, {"c", &c}});
      return leq(meet(a, multiply(b, c)), multiply(meet(a, b), meet(a, c)));
    });

    run("pos-neg-parts", [&](Json& w) {
      const GroupElement g = sampler.sample();
      record(w, {{"g", &g}});
      const auto [gp, gm] = pos_neg_parts(g);
      return multiply(gp, inverse(gm)) == g && meet(gp, gm) == e &&
             is_positive(gp) && is_positive(gm);
    });

    run("quotient-parts", [&](Json& w) {
      const GroupElement p = sampler.sample_positive(), q = sampler.sample_positive();
      record(w, {{"p", &p}, {"q", &q}});
      const auto via_meet = quotient_parts(p, q);
      const auto direct = pos_neg_parts(multiply(p, inverse(q)));
      return via_meet.first == direct.first && via_meet.second == direct.second;
    });

    run("translate-meet", [&](Json& w) {
      const GroupElement p = sampler.sample_positive();
      const auto [g, q] = sampler.sample_disjoint_positive_pair();
      record(w, {{"p", &p}, {"g", &g}, {"q", &q}});
      return meet(multiply(p, g), q) == meet(p, q);
    });

    run("translate-parts", [&](Json& w) {
      // (p g q^{-1})_+ = (p q^{-1})_+ g and (p g q^{-1})_- = (p q^{-1})_-
      // for positive p, q, g with g n q = e.
      const GroupElement p = sampler.sample_positive();
      const auto [g, q] = sampler.sample_disjoint_positive_pair();
      record(w, {{"p", &p}, {"g", &g}, {"q", &q}});
      const auto moved = pos_neg_parts(multiply(multiply(p, g), inverse(q)));
      const auto base = pos_neg_parts(multiply(p, inverse(q)));
      return moved.first == multiply(base.first, g) && moved.second == base.second;
    });

    run("meet-normalization", [&](Json& w) {
      // With g_i <= p_i: e <= meet of p_i g_i^{-1} <= meet of p_i; after
      // normalizing the p_i by their global meet the bound collapses to e.
      const GroupElement p1 = sampler.sample_positive(), p2 = sampler.sample_positive(),
                         p3 = sampler.sample_positive();
      record(w, {{"p1", &p1}, {"p2", &p2}, {"p3", &p3}});
      const GroupElement g1 = sampler.sample_positive_leq(p1),
                         g2 = sampler.sample_positive_leq(p2),
                         g3 = sampler.sample_positive_leq(p3);
      const GroupElement lhs =
          meet(meet(multiply(p1, inverse(g1)), multiply(p2, inverse(g2))),
               multiply(p3, inverse(g3)));
      const GroupElement whole = meet(meet(p1, p2), p3);
      if (!(leq(lhs, whole) && leq(e, lhs))) return false;

      const GroupElement m_inv = inverse(whole);
      const GroupElement q1 = multiply(p1, m_inv), q2 = multiply(p2, m_inv),
                         q3 = multiply(p3, m_inv);
      const GroupElement h1 = sampler.sample_positive_leq(q1),
                         h2 = sampler.sample_positive_leq(q2),
                         h3 = sampler.sample_positive_leq(q3);
      const GroupElement reduced =
          meet(meet(multiply(q1, inverse(h1)), multiply(q2, inverse(h2))),
               multiply(q3, inverse(h3)));
      return reduced == e;
    });

    long total_failures = 0;
    Json per_law = Json::object();
    for (const auto& s : stats) {
      per_law[s.name] = Json{{"trials", s.trials}, {"failures", s.failures}};
      total_failures += s.failures;
    }
    r.details = per_law;
    r.passed = total_failures == 0;
    return r;
  });
}

}  // namespace latreg
