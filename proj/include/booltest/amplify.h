// Copyright 2026 The booltest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOOLTEST_AMPLIFY_H
#define BOOLTEST_AMPLIFY_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "booltest/boolean_function.h"
#include "booltest/oracle.h"
#include "booltest/state_vector.h"

namespace booltest {

/// The predicate chi marking "good" basis states.
class GoodPredicate {
   public:
    enum class Kind { nonzero, zero, table };

    /// chi(z) = 1 iff z != 0.
    static GoodPredicate nonzero() {
        return GoodPredicate(Kind::nonzero, std::nullopt);
    }
    /// chi(z) = 1 iff z == 0.
    static GoodPredicate zero() {
        return GoodPredicate(Kind::zero, std::nullopt);
    }
    static GoodPredicate from_function(BooleanFunction chi) {
        return GoodPredicate(Kind::table, std::move(chi));
    }

    bool operator()(uint64_t z) const {
        switch (kind_) {
            case Kind::nonzero:
                return z != 0;
            case Kind::zero:
                return z == 0;
            default:
                return (*table_)(z);
        }
    }
    Kind kind() const {
        return kind_;
    }
    std::string name() const;

    bool operator==(const GoodPredicate &other) const = default;

   private:
    GoodPredicate(Kind kind, std::optional<BooleanFunction> table) : kind_(kind), table_(std::move(table)) {
    }
    Kind kind_;
    std::optional<BooleanFunction> table_;
};

/// How the iteration count is chosen: from the epsilon-only lower bound on the
/// initial success probability (bound), or from the true probability (oracle).
enum class PlanMode { bound, oracle };

const char *mode_name(PlanMode mode);
std::optional<PlanMode> parse_mode(const std::string &text);

/// Parameters of Q(A, phi_0, phi_chi, chi)^m.
struct AmplificationPlan {
    double epsilon;
    GoodPredicate good;
    uint64_t iterations;
    /// Phase applied by S_0 to the all-zero state.
    double phase_s0;
    /// Phase applied by S_chi to good states.
    double phase_schi;
    PlanMode mode;
    /// Non-fatal notes, e.g. epsilon outside the regime where the success guarantee holds.
    std::vector<std::string> warnings;

    /// Throws std::invalid_argument unless phases lie in (-pi, pi] and epsilon in [0, 1).
    void validate() const;
};

/// The state-preparation unitary A = H^n . D_k ... D_1 . H^n built from phase oracles.
///
/// A^-1 = H^n . D_1 ... D_k . H^n: the diagonals are involutions and H^n is
/// self-inverse, so no numerical inversion is involved. Each application of A or
/// A^-1 charges one quantum query per oracle.
class StatePreparation {
   public:
    explicit StatePreparation(std::vector<std::reference_wrapper<OracleHandle>> oracles);

    size_t arity() const {
        return arity_;
    }
    uint64_t queries_per_application() const {
        return oracles_.size();
    }
    void apply(StateVector &state) const;
    void apply_inverse(StateVector &state) const;

   private:
    std::vector<std::reference_wrapper<OracleHandle>> oracles_;
    size_t arity_;
};

/// A|0...0>. For oracles f and g this is sum_z W_{f xor g}(z) |z>.
StateVector prepare_A(const StatePreparation &prep);

/// amps[x] *= (-1)^f(x), charged to the handle.
void apply_phase_oracle(StateVector &state, OracleHandle &oracle);
/// S_chi(phi): multiplies good amplitudes by e^{i phi}.
void apply_S_chi(StateVector &state, const GoodPredicate &good, double phi);
/// S_0(phi): multiplies the all-zero amplitude by e^{i phi}.
void apply_S_0(StateVector &state, double phi);

/// One application of Q = -A S_0(phase_s0) A^-1 S_chi(phase_schi).
/// With both phases equal to pi this is the sign-flip iterate -A S_0 A^-1 S_chi.
void apply_Q(StateVector &state, const StatePreparation &prep, const GoodPredicate &good, double phase_s0,
             double phase_schi);
void apply_Q(StateVector &state, const StatePreparation &prep, const AmplificationPlan &plan);

/// Q^m A |0...0> for the plan's m.
StateVector amplified_state(const StatePreparation &prep, const AmplificationPlan &plan);

/// sum over good z of |amps[z]|^2.
double good_probability(const StateVector &state, const GoodPredicate &good);
std::vector<double> measure_distribution(const StateVector &state);
uint64_t sample(const StateVector &state, Rng &rng);

/// Iteration count floor(pi / (4 theta)) for sin^2(theta) = a, a in (0, 1].
/// Returns 0 when a == 0 (nothing to amplify).
uint64_t iterations_for_probability(double a);

}  // namespace booltest

#endif
