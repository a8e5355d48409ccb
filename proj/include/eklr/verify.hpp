#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eklr/fock.hpp"
#include "eklr/klr.hpp"
#include "eklr/tensor.hpp"

namespace eklr {

struct VerifyReport {
    std::string suite;
    std::string statement;
    long long checks = 0;
    bool passed = true;
    std::vector<std::string> failures;

    void fail(const std::string& what, size_t cap = 16) {
        passed = false;
        if (failures.size() < cap) failures.push_back(what);
    }
};

// Operator identities on mixed tensor powers; `window` bounds the basis
// indices, generators run over [-3, 3]. `flavors` restricts to one
// connective pattern like "2,1"; empty runs all of them.
VerifyReport verify_hecke(int window, int maxd = 3, const std::string& flavors = "");
VerifyReport verify_hecke_commute(int window, int maxd = 3, const std::string& flavors = "");
VerifyReport verify_uqg(int window, int maxd = 3, const std::string& flavors = "");
VerifyReport verify_coideal(int window, int eps, int maxd = 3, const std::string& flavors = "");
VerifyReport verify_beta_b(int window);

// Fock-space checks at charge delta (level 1).
VerifyReport verify_fock_relations(int max_size, int eps, const Residue& delta);
VerifyReport verify_fock_support(int max_size, int eps, const Residue& delta);
VerifyReport verify_fock_stability(int max_size, int eps);
VerifyReport verify_bar_involution(int max_size, int eps, const Residue& delta);
VerifyReport verify_tau(int max_size, int eps, const Residue& delta);
VerifyReport verify_adjointness(int max_size, int max_word, int cases, uint64_t seed, int eps,
                                const Residue& delta);

// Tableaux dimension counts.
VerifyReport verify_tableaux_dims(int max_len_level1, int max_len_level2);

// Degree calculus and Grothendieck-level checks.
VerifyReport verify_degree_welldef(int max_len, int cases, uint64_t seed, int eps);
VerifyReport verify_gdim_relations(int target_bound, int eps, const Residue& delta);
VerifyReport verify_categorification(int max_size, int eps, const Residue& delta);
VerifyReport verify_higher_level(int max_size, int eps);

std::vector<std::string> verify_suite_names();
// Runs a named suite with default parameters drawn from the run options.
VerifyReport run_verify_suite(const std::string& name, int window, int eps, uint64_t seed,
                              const std::string& flavors = "");

}  // namespace eklr
