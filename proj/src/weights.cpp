#include "relaxmatch/weights.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace relaxmatch {

namespace {

BigInt to_integer(const Rational& value, const BigInt& scale) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  return num * (scale / den);
}

}  // namespace

WeightScheme build_weights(const Instance& instance, Guarantee guarantee,
                           Aggregation aggregation) {
  WeightScheme scheme;
  BigInt w_star = BigInt(instance.agent_count()) + 1;

  auto u_of = [&](const RelaxableEdge& e) -> Rational {
    return aggregation == Aggregation::kSize ? Rational(1) : e.discomfort;
  };

  Rational u_max = instance.relaxable().empty() ? Rational(1) : u_of(instance.relaxable()[0]);
  BigInt lcm_den = 1;
  for (const RelaxableEdge& e : instance.relaxable()) {
    Rational u = u_of(e);
    if (u > u_max) u_max = u;
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(u));
  }
  lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(u_max));
  scheme.scale = lcm_den;

  BigInt ud = to_integer(u_max, lcm_den);  // U·D
  BigInt compatible_weight = guarantee == Guarantee::kSnhSb ? BigInt(w_star * w_star * ud)
                                                            : BigInt(w_star * ud);

  std::vector<char> protected_agent;
  if (guarantee == Guarantee::kSnhWb) {
    protected_agent.assign(instance.agent_count(), 0);
    for (std::uint32_t agent : guaranteed_agents(base_graph(instance)))
      protected_agent[agent] = 1;
  }
  auto is_protected = [&](std::uint32_t agent) {
    return !protected_agent.empty() && protected_agent[agent];
  };

  scheme.compatible.reserve(instance.compatible().size());
  for (const Edge& edge : instance.compatible()) {
    BigInt weight = is_protected(edge.agent) ? BigInt(-ud) : compatible_weight;
    scheme.compatible.push_back(WeightedEdge{edge, weight});
  }
  scheme.relaxable.reserve(instance.relaxable().size());
  for (const RelaxableEdge& relaxable : instance.relaxable()) {
    BigInt weight = is_protected(relaxable.edge.agent)
                        ? BigInt(-ud)
                        : w_star * ud - to_integer(u_of(relaxable), lcm_den);
    scheme.relaxable.push_back(WeightedEdge{relaxable.edge, weight});
  }

  // Exceeding the positive-weight sum (rather than the signed sum) keeps the
  // dummy dominant even when snh-wb introduces negative weights.
  BigInt positive_sum = 0;
  for (const WeightedEdge& e : scheme.compatible)
    if (e.weight > 0) positive_sum += e.weight;
  for (const WeightedEdge& e : scheme.relaxable)
    if (e.weight > 0) positive_sum += e.weight;
  scheme.dummy_weight = positive_sum + 1;
  return scheme;
}

}  // namespace relaxmatch
