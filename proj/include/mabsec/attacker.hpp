#pragma once

#include <string>

#include "mabsec/arm.hpp"
#include "mabsec/history.hpp"

namespace mabsec {

// Sits between environment and learner. Called after the learner's pull and
// before it observes; `history` holds rounds 1..t-1. Returns alpha_t, the
// amount subtracted from the pre-attack reward.
class Attacker {
public:
    virtual ~Attacker() = default;

    virtual double manipulate(long t, Arm arm, double pre_reward, const History& history) = 0;
    virtual std::string name() const = 0;
};

class NoAttack : public Attacker {
public:
    double manipulate(long, Arm, double, const History&) override { return 0.0; }
    std::string name() const override { return "none"; }
};

}  // namespace mabsec
