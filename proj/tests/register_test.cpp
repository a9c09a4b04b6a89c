// Copyright 2026 The phasebit Authors
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

#include "phasebit/register.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "phasebit/phase.hpp"
#include "phasebit/signal.hpp"
#include "test_util.hpp"

namespace phasebit {
namespace {

using testing::kSigmas;
using testing::PropertyRng;

PhaseStream iid(std::uint64_t seed) { return make_phase_stream({PhaseKind::IidUniform, seed}); }

TEST(QubitState, Construction) {
    EXPECT_TRUE(QubitState::definite(0).is_definite());
    EXPECT_EQ(QubitState::definite(1).bit(), 1);
    EXPECT_THROW(QubitState::definite(2), DomainError);
    EXPECT_THROW(QubitState::definite(-1), DomainError);
    const QubitState b = QubitState::balanced(Angle(3 * kPi));
    EXPECT_TRUE(b.is_balanced());
    EXPECT_NEAR(b.alpha().radians(), kPi, 1e-12);  // stored wrapped
    EXPECT_THROW((void)b.bit(), UsageError);
    EXPECT_THROW((void)QubitState::definite(0).alpha(), UsageError);
}

TEST(VirtualRegister, ConstructionErrors) {
    EXPECT_THROW(VirtualRegister({}, iid(1)), UsageError);
    EXPECT_THROW(VirtualRegister({QubitState::definite(0)}, iid(1), 1), UsageError);
    EXPECT_THROW(VirtualRegister({QubitState::definite(0)}, iid(1), 0, {Angle(0), Angle(1)}),
                 UsageError);
}

TEST(MeasureTrial, AllDefiniteZero) {
    VirtualRegister reg({QubitState::definite(0), QubitState::definite(0), QubitState::definite(0)},
                        iid(1));
    for (int i = 0; i < 100; ++i) {
        const TrialRecord rec = measure_trial(reg);
        EXPECT_EQ(rec.t, static_cast<std::uint64_t>(i));
        EXPECT_EQ(rec.bits, (std::vector<std::uint8_t>{0, 0, 0}));
        EXPECT_TRUE(rec.accepted);
    }
}

TEST(MeasureTrial, DefiniteQubitsIgnorePhase) {
    VirtualRegister reg({QubitState::balanced(Angle(0)), QubitState::definite(1)}, iid(2));
    for (int i = 0; i < 1000; ++i) {
        EXPECT_EQ(measure_trial(reg).bits[1], 1);
    }
}

TEST(MeasureTrial, AntipodalTargetIsAlwaysRedWhenAccepted) {
    VirtualRegister reg = VirtualRegister::balanced({Angle(0), Angle(kPi)}, iid(3));
    int accepted = 0;
    for (int i = 0; i < 20000; ++i) {
        const TrialRecord rec = measure_trial(reg);
        EXPECT_EQ(rec.accepted, rec.bits[0] == 0);
        if (rec.accepted) {
            ++accepted;
            ASSERT_EQ(rec.bits[1], 1);
        } else {
            ASSERT_EQ(rec.bits[1], 0);
        }
    }
    EXPECT_GT(accepted, 0);
}

TEST(MeasureTrial, AcceptanceFollowsSignalIndex) {
    VirtualRegister reg = VirtualRegister::balanced({Angle(0), Angle(1.0), Angle(2.0)}, iid(4), 2);
    for (int i = 0; i < 1000; ++i) {
        const TrialRecord rec = measure_trial(reg);
        ASSERT_EQ(rec.accepted, rec.bits[2] == 0);
    }
}

TEST(MeasureTrial, ConditionalAgreementAtQuarterTurn) {
    // 1e5 accepted trials; expected 0.75 = conditional_same_color_probability(pi/4),
    // itself checked against quadrature in signal_test.
    VirtualRegister reg = VirtualRegister::balanced({Angle(0), Angle(kPi / 4)}, iid(42));
    std::uint64_t accepted = 0;
    std::uint64_t target_zero = 0;
    while (accepted < 100000) {
        const TrialRecord rec = measure_trial(reg);
        if (rec.accepted) {
            ++accepted;
            target_zero += rec.bits[1] == 0;
        }
    }
    const double p = static_cast<double>(target_zero) / accepted;
    const double se = std::sqrt(p * (1 - p) / accepted);
    EXPECT_LE(std::abs(p - 0.75), kSigmas * se) << "p = " << p;
}

TEST(MeasureTrial, SharedPhaseCorrelationMatchesAnalytic) {
    const std::vector<Angle> alphas = {Angle(0.0), Angle(0.7), Angle(2.0), Angle(-1.2)};
    VirtualRegister reg = VirtualRegister::balanced(alphas, iid(42));
    constexpr int n = 100000;
    std::vector<std::vector<long long>> sums(alphas.size(), std::vector<long long>(alphas.size()));
    for (int i = 0; i < n; ++i) {
        const TrialRecord rec = measure_trial(reg);
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            for (std::size_t l = k + 1; l < alphas.size(); ++l) {
                sums[k][l] += rec.bits[k] == rec.bits[l] ? 1 : -1;
            }
        }
    }
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        for (std::size_t l = k + 1; l < alphas.size(); ++l) {
            const auto e = CorrelationEstimate::from_sum(sums[k][l], n);
            EXPECT_LE(std::abs(e.mean - analytic_correlation(alphas[k] - alphas[l])),
                      kSigmas * e.std_error)
                << "pair " << k << "," << l;
        }
    }
}

TEST(Initialize, ForcedAcceptanceAndRejection) {
    VirtualRegister yes({QubitState::definite(0), QubitState::balanced(Angle(1))}, iid(5));
    EXPECT_EQ(initialize(yes, 1000).size(), 1000u);
    VirtualRegister no({QubitState::definite(1), QubitState::balanced(Angle(1))}, iid(5));
    EXPECT_TRUE(initialize(no, 1000).empty());
}

TEST(Initialize, RejectsZeroTrials) {
    VirtualRegister reg({QubitState::definite(0)}, iid(5));
    EXPECT_THROW(initialize(reg, 0), UsageError);
}

TEST(Initialize, AcceptanceRateIsOneHalf) {
    constexpr std::uint64_t trials = 100000;
    for (double alpha : {0.0, 0.9, -2.2}) {
        VirtualRegister reg = VirtualRegister::balanced({Angle(alpha), Angle(0.3)}, iid(42));
        const auto records = initialize(reg, trials);
        for (const auto& rec : records) {
            ASSERT_TRUE(rec.accepted);
            ASSERT_EQ(rec.bits[0], 0);
        }
        const double rate = static_cast<double>(records.size()) / trials;
        EXPECT_LE(std::abs(rate - 0.5), kSigmas * 0.5 / std::sqrt(double(trials)));
        EXPECT_EQ(reg.stream().position(), trials);
    }
}

TEST(Initialize, WorkerCountDoesNotChangeRecords) {
    VirtualRegister a = VirtualRegister::balanced({Angle(0), Angle(1), Angle(2)}, iid(6));
    VirtualRegister b = a;
    const auto serial = initialize(a, 10001, 1);
    const auto parallel = initialize(b, 10001, 4);
    EXPECT_EQ(serial, parallel);
}

TEST(Initialize, MatchesRepeatedMeasureTrial) {
    VirtualRegister a = VirtualRegister::balanced({Angle(0), Angle(1)}, iid(7));
    VirtualRegister b = a;
    const auto records = initialize(a, 500);
    std::vector<TrialRecord> manual;
    for (int i = 0; i < 500; ++i) {
        TrialRecord rec = measure_trial(b);
        if (rec.accepted) {
            manual.push_back(rec);
        }
    }
    EXPECT_EQ(records, manual);
}

TEST(Hadamard, StateMachineRules) {
    EXPECT_EQ(hadamard(QubitState::balanced(Angle(0.7))), QubitState::definite(0));
    EXPECT_EQ(hadamard(QubitState::definite(0), Angle(0.3)), QubitState::balanced(Angle(0.3)));
    EXPECT_EQ(hadamard(QubitState::definite(1), Angle(0.3)), QubitState::balanced(Angle(0.3)));
    EXPECT_EQ(hadamard(QubitState::definite(0)), QubitState::balanced(Angle(0.0)));
}

TEST(Hadamard, NotAnInvolution) {
    const QubitState d1 = QubitState::definite(1);
    EXPECT_EQ(hadamard(hadamard(d1)), QubitState::definite(0));
    EXPECT_NE(hadamard(hadamard(d1)), d1);
}

TEST(Hadamard, BalancedAlwaysCollapsesToZero) {
    PropertyRng rng(21);
    for (int i = 0; i < 1000; ++i) {
        const Angle a(rng.uniform(-100.0, 100.0));
        ASSERT_EQ(hadamard(QubitState::balanced(a), rng.angle()), QubitState::definite(0));
    }
}

TEST(Hadamard, RegisterUsesHomeAngle) {
    VirtualRegister reg({QubitState::definite(1), QubitState::definite(0)}, iid(1), 0,
                        {Angle(0.0), Angle(1.25)});
    reg.apply_hadamard(1);
    EXPECT_EQ(reg.qubit(1), QubitState::balanced(Angle(1.25)));
    reg.apply_hadamard(1);
    EXPECT_EQ(reg.qubit(1), QubitState::definite(0));
}

TEST(Cnot, TruthTable) {
    EXPECT_EQ(cnot(1, 0), 1);
    EXPECT_EQ(cnot(0, 1), 1);
    EXPECT_EQ(cnot(1, 1), 0);
    EXPECT_EQ(cnot(0, 0), 0);
}

TEST(Cnot, RejectsNonBits) {
    EXPECT_THROW(cnot(2, 0), DomainError);
    EXPECT_THROW(cnot(0, -1), DomainError);
}

TEST(ApplyCnotToRecords, Examples) {
    const std::vector<TrialRecord> in = {{0, {1, 0}, false}, {1, {0, 1}, true}};
    const auto out = apply_cnot_to_records(in, 0, 1);
    EXPECT_EQ(out[0].bits, (std::vector<std::uint8_t>{1, 1}));
    EXPECT_EQ(out[1].bits, (std::vector<std::uint8_t>{0, 1}));
    EXPECT_EQ(out[0].t, 0u);
    EXPECT_EQ(out[1].accepted, true);
}

TEST(ApplyCnotToRecords, Errors) {
    const std::vector<TrialRecord> in = {{0, {1, 0}, false}};
    EXPECT_THROW(apply_cnot_to_records(in, 1, 1), UsageError);
    EXPECT_THROW(apply_cnot_to_records(in, 0, 2), UsageError);
}

TEST(ApplyCnotToRecords, InvolutionAndControlUntouched) {
    VirtualRegister reg =
        VirtualRegister::balanced({Angle(0), Angle(0.5), Angle(2.5)}, iid(9));
    std::vector<TrialRecord> records;
    for (int i = 0; i < 2000; ++i) {
        records.push_back(measure_trial(reg));
    }
    for (auto [control, target] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
        const auto once = apply_cnot_to_records(records, control, target);
        for (std::size_t i = 0; i < records.size(); ++i) {
            ASSERT_EQ(once[i].bits[control], records[i].bits[control]);
        }
        EXPECT_EQ(apply_cnot_to_records(once, control, target), records);
    }
}

}  // namespace
}  // namespace phasebit
