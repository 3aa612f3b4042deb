#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ordrep/group.hpp"
#include "ordrep/induction.hpp"
#include "ordrep/perm.hpp"
#include "ordrep/posaut.hpp"
#include "ordrep/structure.hpp"

namespace ordrep {

using nlohmann::json;

// Plain-data report forms of the core results, with JSON round-tripping.
// External permutations are 1-based cycle strings; coordinates are 1-based.

struct SubgroupReport {
  int order = 0;
  std::vector<std::string> generators;  // cycle strings; empty for the trivial subgroup

  friend bool operator==(const SubgroupReport&, const SubgroupReport&) = default;
};

struct SummandReport {
  SubgroupReport subgroup;
  int index = 0;         // |G : H|, the dimension of one copy
  int multiplicity = 0;
  std::vector<std::vector<int>> orbits;  // 1-based coordinate blocks

  friend bool operator==(const SummandReport&, const SummandReport&) = default;
};

struct DecompositionReport {
  int total_degree = 0;
  std::vector<SummandReport> summands;

  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

struct FactorizationReport {
  int degree = 0;
  std::vector<std::string> pi_generators;  // permutation part per group generator
  std::vector<std::string> m_symbolic;
  std::vector<double> m_decimal;
  bool verified = false;

  friend bool operator==(const FactorizationReport&, const FactorizationReport&) = default;
};

inline SubgroupReport make_subgroup_report(const PermGroup& g, const Subgroup& h) {
  SubgroupReport out;
  out.order = h.order();
  for (int idx : small_generating_set(g, h))
    out.generators.push_back(to_cycle_string(g.element(idx)));
  return out;
}

inline DecompositionReport make_decomposition_report(const PermGroup& g, const Decomposition& d) {
  DecompositionReport out;
  out.total_degree = d.total_degree;
  for (const auto& s : d.summands) {
    SummandReport sr;
    sr.subgroup = make_subgroup_report(g, s.class_key);
    sr.index = s.index;
    sr.multiplicity = s.multiplicity;
    for (const auto& orbit : s.orbit_blocks) {
      std::vector<int> one_based;
      for (int p : orbit) one_based.push_back(p + 1);
      sr.orbits.push_back(std::move(one_based));
    }
    out.summands.push_back(std::move(sr));
  }
  return out;
}

inline FactorizationReport make_factorization_report(const PosRep& rho, const Factorization& f) {
  FactorizationReport out;
  out.degree = rho.degree();
  for (int gi : rho.group().generator_indices())
    out.pi_generators.push_back(to_cycle_string(f.pi[gi]));
  for (const auto& e : f.m.entries) {
    out.m_symbolic.push_back(e.str());
    out.m_decimal.push_back(e.to_double());
  }
  out.verified = verify_factorization(rho, f);
  return out;
}

inline void to_json(json& j, const SubgroupReport& r) {
  j = json{{"order", r.order}, {"generators", r.generators}};
}
inline void from_json(const json& j, SubgroupReport& r) {
  j.at("order").get_to(r.order);
  j.at("generators").get_to(r.generators);
}

inline void to_json(json& j, const SummandReport& r) {
  j = json{{"subgroup", r.subgroup},
           {"index", r.index},
           {"multiplicity", r.multiplicity},
           {"orbits", r.orbits}};
}
inline void from_json(const json& j, SummandReport& r) {
  j.at("subgroup").get_to(r.subgroup);
  j.at("index").get_to(r.index);
  j.at("multiplicity").get_to(r.multiplicity);
  j.at("orbits").get_to(r.orbits);
}

inline void to_json(json& j, const DecompositionReport& r) {
  j = json{{"total_degree", r.total_degree}, {"summands", r.summands}};
}
inline void from_json(const json& j, DecompositionReport& r) {
  j.at("total_degree").get_to(r.total_degree);
  j.at("summands").get_to(r.summands);
}

inline void to_json(json& j, const FactorizationReport& r) {
  j = json{{"degree", r.degree},
           {"pi_generators", r.pi_generators},
           {"m_symbolic", r.m_symbolic},
           {"m_decimal", r.m_decimal},
           {"verified", r.verified}};
}
inline void from_json(const json& j, FactorizationReport& r) {
  j.at("degree").get_to(r.degree);
  j.at("pi_generators").get_to(r.pi_generators);
  j.at("m_symbolic").get_to(r.m_symbolic);
  j.at("m_decimal").get_to(r.m_decimal);
  j.at("verified").get_to(r.verified);
}

}  // namespace ordrep
