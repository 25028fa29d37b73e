#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/operators.hpp"
#include "umbra/triangle.hpp"

namespace umbra {

using Params = std::map<std::string, Rat>;

struct FamilySpec {
    std::string name;
    Params params;
    DeltaOp delta;
    std::optional<ShiftOp> appell;  // set for Sheffer families
    std::function<Rat(std::size_t, std::size_t)> closed_form;
};

std::vector<std::string> family_names();
Params default_params(std::string_view name);
// Missing params take their defaults. Indicators are built to trunc order.
FamilySpec family(std::string_view name, const Params& params, std::size_t order);
// Triangle to row N: the basic set, or the Sheffer set when the family has an Appell factor.
Triangle family_triangle(std::string_view name, const Params& params, std::size_t N);
std::string format_params(const Params& params);

struct IdentityResult {
    std::string identity;
    std::string family;
    std::string params;
    bool passed = false;
    std::optional<std::string> counterexample;
};

struct Report {
    std::vector<IdentityResult> results;
    bool all_passed() const;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

// Every identity registered for the family, up to row N. The seed drives the random test sequences.
Report identity_check(std::string_view name, const Params& params, std::size_t N, std::uint64_t seed = kDefaultSeed);
// All families, with a few parameter choices each. Results are sorted by family, params and identity.
Report check_all(std::size_t N, std::uint64_t seed = kDefaultSeed);

// Combinatorial numbers from their defining recurrences.
namespace numbers {
Rat stirling1(std::size_t n, std::size_t k);  // signed, (x)_n = sum s(n,k) x^k
Rat stirling2(std::size_t n, std::size_t k);
Rat lah(std::size_t n, std::size_t k);  // unsigned
Rat catalan(std::size_t n);
}  // namespace numbers

}  // namespace umbra
