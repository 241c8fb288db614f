#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hlab/equivalence.hpp"
#include "hlab/sld.hpp"
#include "hlab/syntax.hpp"

namespace hlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(eng_() % n); }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(eng_) < p;
  }
  std::uint64_t u64() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Random term over the given symbols; leaves are constants or pool variables.
TermPtr random_term(Rng& rng, const std::vector<Symbol>& functions,
                    const std::vector<std::string>& vars, int depth);

struct GeneratorOptions {
  int max_clauses = 4;
  int max_body = 2;
  int max_term_depth = 2;
  double recursion_rate = 0.15;  // 0 forces acyclic predicate dependencies
  bool allow_binary = true;      // g/2 in the signature pool
};

struct GeneratedProgram {
  Program program;
  Signature sig;
  std::vector<Symbol> predicates;
};

GeneratedProgram random_program(Rng& rng, const GeneratorOptions& opts);

// Query over the program's predicates; extra symbols lets the query contain
// aliens w.r.t. the program.
Query random_query(Rng& rng, const GeneratedProgram& gp, int max_atoms,
                   const std::vector<Symbol>& extra_symbols);

struct FuzzConfig {
  std::uint64_t seed = 1;
  int cases = 100;
  std::string property = "theorem1";
  Budget budget{24, 200'000};
  int depth_cap = 2;
  bool record_cases = false;  // keep per-case records in the report
};

struct FuzzCase {
  std::uint64_t case_seed = 0;
  std::string program;
  std::string query;
  std::string note;
  bool definite = false;
  bool violation = false;
};

struct CampaignReport {
  FuzzConfig config;
  int cases = 0;
  int definite = 0;
  int unknown = 0;
  int violations = 0;
  std::vector<FuzzCase> records;  // violations always; all cases if requested
};

// Properties: theorem1, lemma1, corollary1, lemma2, lemma3, lemma4, prop1,
// ground_eq1.
CampaignReport fuzz(const FuzzConfig& config);

std::vector<std::string> fuzz_properties();

}  // namespace hlab
