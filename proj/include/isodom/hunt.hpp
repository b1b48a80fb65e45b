#pragma once

// Conjecture falsifier: a minimal comparison grammar over the parameter
// vocabulary.  A claim is `sum <= sum`, `sum < sum` or `sum = sum`, where
// each sum adds parameter names and integer constants.  That is enough to
// state every inequality handled here (coefficients unfold into repeated
// names, subtraction moves across the comparison).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isodom/graph.hpp"
#include "isodom/solvers.hpp"

namespace isodom {

class Claim {
public:
    enum class Cmp { le, lt, eq };

    // Throws std::invalid_argument with a pointed message on bad syntax or
    // unknown parameter names.
    static Claim parse(std::string_view text);

    // nullopt when some referenced parameter is undefined on this graph
    // (gamma_t with an isolated vertex, diam when disconnected).
    std::optional<bool> holds(const ParameterReport& r) const;

    const std::vector<std::string>& parameters() const { return params_; }
    std::string text() const;

private:
    struct Atom {
        bool is_constant = false;
        long long constant = 0;
        std::string name;
    };
    struct Sum {
        std::vector<Atom> atoms;
    };

    std::optional<long long> evaluate(const Sum& side, const ParameterReport& r) const;

    Sum lhs_, rhs_;
    Cmp cmp_ = Cmp::le;
    std::vector<std::string> params_;
};

struct HuntOutcome {
    std::int64_t scanned = 0;                        // graphs where the claim was evaluated
    std::int64_t skipped = 0;                        // undefined parameter somewhere
    std::optional<std::size_t> counterexample;       // index into the universe
};

// Scans the universe in order and stops at the first violating graph.
HuntOutcome hunt_claim(const Claim& claim, const std::vector<Graph>& universe);

}  // namespace isodom
