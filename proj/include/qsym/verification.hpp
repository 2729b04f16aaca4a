#pragma once

#include <string>
#include <vector>

#include "qsym/descent_algebra.hpp"

namespace qsym {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  bool slow = false;  // adds n = 3 to the B/S inner coproduct check
  Caps caps;
};

// Each check is exhaustive over the stated range and compares exactly.

/// Γ(π) = F_{C(π)} for every π in S_n, n <= max_n.
CheckResult check_gamma_type_a(int max_n = 5, int chain_size = 6);
/// Γ_B(π) = F_{B,C(π)} and Γ̄(π) = F̄_{sC(π)} for every π in B_n, n <= max_n,
/// plus the worked examples for π = (-3,2,-1).
CheckResult check_gamma_type_b_signed(int max_n = 3, int chain_size = 4);
/// Bipartite Γ(π)(XY) = Σ_{σ∘τ=π} Γ(τ; X) Γ(σ; Y), with the cardinality form.
CheckResult check_inner_coproduct_a(int max_n = 4, int chain_size = 3);
CheckResult check_inner_coproduct_b_signed(int max_n = 2, int chain_size = 2);
/// Closure of the class-sum span with the expected dimensions.
CheckResult check_closure(int max_a = 5, int max_b = 4, int max_s = 4, const Caps& caps = {});
CheckResult check_representative_independence(int max_a = 4, int max_bs = 3, const Caps& caps = {});
/// F -> M -> F and M -> F -> M on every basis vector, all flavors.
CheckResult check_basis_round_trip(int max_n = 6);
/// Enumeration sizes for n <= max_n and class partitions at the caps.
CheckResult check_counting(int max_n = 10, const Caps& caps = {});
/// inner_product against a direct count over all pairs in G x G.
CheckResult check_duality(const Caps& caps = {});
/// u = v sends F̄_α to F_{B, merged α} and M̄_α to its documented image.
CheckResult check_u_equals_v(int max_n = 4, int chain_size = 4);

std::vector<CheckResult> run_acceptance_suite(const VerifyOptions& options = {});

}  // namespace qsym
