// Copyright 2026 The Qubus Authors
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

#include "qubus/sequence_json.h"

#include <gtest/gtest.h>

#include "qubus/controlled.h"
#include "qubus/executor.h"
#include "test_util.h"

namespace qubus {
namespace {

GateSequence sample() {
    GateSequence seq = build_cnot(3, 0, 2, CnotForm::Exact);
    seq.barrier("end");
    return seq;
}

TEST(SequenceJson, FieldNames) {
    nlohmann::json j = sequence_to_json(sample());
    EXPECT_EQ(j["version"], 1);
    EXPECT_EQ(j["num_qubits"], 3);
    EXPECT_TRUE(j.contains("strategy"));
    EXPECT_EQ(j["counts"]["bus"], 4);
    EXPECT_EQ(j["counts"]["local"], 3);
    const auto &ins = j["instructions"];
    ASSERT_EQ(ins.size(), 8u);
    bool saw_disp = false;
    bool saw_local = false;
    for (const auto &i : ins) {
        if (i["op"] == "disp") {
            saw_disp = true;
            EXPECT_EQ(i["beta"].size(), 2u);
            EXPECT_TRUE(i.contains("q"));
        } else if (i["op"] == "local") {
            saw_local = true;
            EXPECT_EQ(i["u"].size(), 2u);
            EXPECT_EQ(i["u"][0].size(), 2u);
            EXPECT_EQ(i["u"][0][0].size(), 2u);
            EXPECT_TRUE(i.contains("label"));
        }
    }
    EXPECT_TRUE(saw_disp);
    EXPECT_TRUE(saw_local);
    EXPECT_EQ(ins.back()["op"], "barrier");
    EXPECT_EQ(ins.back()["label"], "end");
}

TEST(SequenceJson, RoundTripPreservesBehaviour) {
    GateSequence seq = sample();
    GateSequence back = sequence_from_json(nlohmann::json::parse(sequence_to_json(seq).dump()));
    EXPECT_EQ(count_ops(back), count_ops(seq));
    EXPECT_EQ(back.strategy(), seq.strategy());
    EXPECT_EQ(back.instructions().size(), seq.instructions().size());
    EXPECT_LT((effective_unitary(back) - effective_unitary(seq)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(sequence_to_json(back).dump(), sequence_to_json(seq).dump());
}

TEST(SequenceJson, CountMismatchRejected) {
    nlohmann::json j = sequence_to_json(sample());
    j["counts"]["bus"] = 5;
    EXPECT_THROW(sequence_from_json(j), SequenceFormatError);
}

TEST(SequenceJson, MalformedInputsRejected) {
    nlohmann::json base = sequence_to_json(sample());
    nlohmann::json j = base;
    j["version"] = 2;
    EXPECT_THROW(sequence_from_json(j), SequenceFormatError);
    j = base;
    j["instructions"][0]["op"] = "swap";
    EXPECT_THROW(sequence_from_json(j), SequenceFormatError);
    j = base;
    j["instructions"][0]["q"] = 7;
    EXPECT_THROW(sequence_from_json(j), SequenceFormatError);
    j = base;
    j.erase("counts");
    EXPECT_THROW(sequence_from_json(j), SequenceFormatError);
    size_t disp = 0;
    while (base["instructions"][disp]["op"] != "disp") {
        disp++;
    }
    j = base;
    j["instructions"][disp]["beta"] = nlohmann::json::array({1.0});
    EXPECT_THROW(sequence_from_json(j), SequenceFormatError);
    j = base;
    j["instructions"][disp]["beta"] = "0.5";
    EXPECT_THROW(sequence_from_json(j), SequenceFormatError);
}

TEST(SequenceJson, NonUnitaryLocalRejected) {
    nlohmann::json j = sequence_to_json(sample());
    for (auto &i : j["instructions"]) {
        if (i["op"] == "local") {
            i["u"][0][0] = {2.0, 0.0};
            break;
        }
    }
    EXPECT_THROW(sequence_from_json(j), std::invalid_argument);
}

}  // namespace
}  // namespace qubus
