#pragma once

#include <string>

#include "mabsec/arm.hpp"
#include "mabsec/rng.hpp"

namespace mabsec {

// Victim policy. It only ever sees post-attack rewards. The rng is the
// learner's own exploration stream; deterministic policies ignore it.
class Learner {
public:
    virtual ~Learner() = default;

    virtual Arm select(long t, RngStream& rng) = 0;
    virtual void observe(long t, Arm arm, double post_reward) = 0;
    virtual std::string name() const = 0;
};

}  // namespace mabsec
