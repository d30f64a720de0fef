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

#pragma once

#include <utility>

#include "gtest/gtest.h"
#include "seqwit/errors.hpp"

namespace seqwit::testing {

/// Runs fn and returns the code of the seqwit::Error it throws. Records a
/// test failure when nothing (or something else) is thrown.
template <typename Fn>
ErrorCode error_code_of(Fn &&fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const Error &e) {
        return e.code();
    } catch (...) {
        ADD_FAILURE() << "unexpected exception type";
        return ErrorCode::InvalidState;
    }
    ADD_FAILURE() << "no seqwit::Error thrown";
    return ErrorCode::InvalidState;
}

}  // namespace seqwit::testing
