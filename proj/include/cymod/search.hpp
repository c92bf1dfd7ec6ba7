#pragma once

// Searches for Moebius twists M such that Y x Y'^{Mt} has fibre defect 0,
// organised by the overlap pattern (#S, #S', #S'') of the singular loci.

#include <optional>
#include <string>
#include <vector>

#include "cymod/defect.hpp"

namespace cymod {

// All canonical M such that exactly `common` points of S lie in M^{-1}(S'),
// i.e. the twist E'^{Mt} has `common` singular locations inside S. Each M is
// pinned by three point correspondences a_i -> b_i with a_i in S, b_i in S'.
std::vector<Moebius> align_sets(const std::vector<BasePoint>& S, const std::vector<BasePoint>& S_prime, int common);

struct Candidate {
  ProductSpec product;
  DefectReport report;
  std::optional<Rational> alpha2, gamma2, alpha;
  std::string note;
};

// Case A: E(1:A:A) x E(1:G:G)^{Mt} with all five locations shared.
struct CaseAResult {
  std::vector<Candidate> rows;        // one per class, A <= G
  std::vector<Candidate> all_maps;    // every (A, G, M) before class reduction
  int choices = 0;                    // ordered correspondences examined
  int vanishing_choices = 0;          // choices whose condition is identically zero
};
CaseAResult case_a_search();

// Case B: E(1:a^2:a^2) x E(1:1:1)^{Mt} with S' inside S and {oo,0,1} not inside S'.
struct JEquation {
  std::string subset;                 // e.g. "{0,1,u,v}"
  Poly poly;                          // in alpha, denominators cleared
  std::vector<Rational> rational_roots;
};
struct CaseBResult {
  std::vector<JEquation> equations;   // the three subsets, in order
  std::vector<Rational> alphas;       // admissible alpha > 0
  std::vector<Rational> degenerate;   // roots rejected by the family exclusions
  std::vector<Candidate> rows;
};
CaseBResult case_b_search();

// The generator words m_i T^j (RT)^k m_l^{-1} for the E(1:1:1) self product.
struct Word {
  int i, j, k, l;
  Moebius M;
};
std::vector<Word> case_c_words();

struct CaseCResult {
  std::vector<Candidate> rows;
  std::vector<std::vector<std::size_t>> duplicate_classes;  // indices into rows, M ~ M^{-1}
  int words = 0;                                            // words generated
  int rigid_classes = 0;
};
// For the Gamma1(6) self pairing this runs the generator words; other pairs
// use align_sets with three common locations.
CaseCResult case_c_search(const Family& left, const Family& right);

bool isogenous_case_check(const ProductSpec& spec);

}  // namespace cymod
