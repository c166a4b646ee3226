#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "mabsec/errors.hpp"

namespace mabsec {

// One-based arm identifier. Arm 1 is the arm every learner pulls first.
class Arm {
public:
    constexpr explicit Arm(int one_based) : id_(one_based) {}

    static Arm from_slot(std::size_t slot) { return Arm(static_cast<int>(slot) + 1); }

    constexpr int id() const { return id_; }
    constexpr std::size_t slot() const { return static_cast<std::size_t>(id_ - 1); }

    constexpr auto operator<=>(const Arm&) const = default;

private:
    int id_;
};

inline void check_arm(Arm arm, int num_arms) {
    if (arm.id() < 1 || arm.id() > num_arms) {
        throw ArgumentError("arm " + std::to_string(arm.id()) + " out of range [1, " +
                            std::to_string(num_arms) + "]");
    }
}

}  // namespace mabsec
