// Copyright 2026 The seqwit Authors
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

#include "seqwit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seqwit/channels.hpp"
#include "seqwit/errors.hpp"
#include "seqwit/witness.hpp"

namespace seqwit {

namespace {

double min_pt_eigenvalue(const DensityMatrix &rho) {
    return hermitian_eigenvalues(partial_transpose(rho, Side::B))[0];
}

}  // namespace

double negativity(const DensityMatrix &rho) { return std::max(0.0, -min_pt_eigenvalue(rho)); }

bool is_entangled_ppt(const DensityMatrix &rho) { return min_pt_eigenvalue(rho) < -kPptThreshold; }

double horodecki_m(const DensityMatrix &rho) {
    const Eigen::Matrix3d t = hs_decompose(rho).t;
    const Eigen::Matrix3d gram = t.transpose() * t;
    const auto system =
        hermitian_eigensystem<3>(Eigen::Matrix<Complex, 3, 3>(gram.cast<Complex>()));
    return system.values(1) + system.values(2);
}

std::string_view to_string(Engines engines) {
    switch (engines) {
        case Engines::Closed:
            return "closed";
        case Engines::Sim:
            return "sim";
        case Engines::Both:
            return "both";
    }
    return "unknown";
}

VerificationReport verify_sequence(const FamilySpec &family, const SequencePlan &plan,
                                   Engines engines, int pairs_requested) {
    validate(family);
    if (!(plan.family == family)) {
        throw Error(ErrorCode::InvalidFamilyParams, "plan was generated for family '" +
                                                        family_name(plan.family) +
                                                        "' with different parameters");
    }

    VerificationReport report{family,
                              plan.epsilon,
                              plan.lambda1_sq,
                              engines,
                              engines != Engines::Closed &&
                                  plan.lambda1_sq >= kSimulationLambdaFloor,
                              pairs_requested > 0 ? pairs_requested : plan.feasible_horizon,
                              plan.truncation,
                              {}};

    CorrelationState closed = CorrelationState::for_family(family);
    std::optional<DensityMatrix> rho;
    if (report.simulated) rho = make_state(family);

    for (int k = 1; k <= plan.feasible_horizon; ++k) {
        const double lambda_sq = plan.values[static_cast<std::size_t>(k - 1)];
        VerificationRow row{k, lambda_sq, closed_form_witness_value_squared(closed, lambda_sq),
                            {}, {}, {}, {}, false};
        row.detected = row.witness_closed < 0.0;

        const double lambda = std::sqrt(lambda_sq);
        if (rho) {
            row.witness_sim = witness_value(*rho, lambda);
            row.negativity = negativity(*rho);
            row.chsh_m = horodecki_m(*rho);
            row.ppt_entangled = is_entangled_ppt(*rho);
            const double gap = std::abs(row.witness_closed - *row.witness_sim);
            if (!(gap <= kEngineMismatchTolerance)) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "pair " << k << ": closed-form witness " << row.witness_closed
                    << " vs matrix engine " << *row.witness_sim;
                throw Error(ErrorCode::EngineMismatch, msg.str());
            }
            rho = pair_round(*rho, RoundPolicy(lambda));
        }
        closed = advance_squared(closed, lambda_sq);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace seqwit
