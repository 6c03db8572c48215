// Copyright 2026 The estimand-algebra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "estimand/error.hpp"

namespace estimand {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::size_limit: return "size_limit";
    case ErrorKind::argument: return "argument";
    case ErrorKind::not_invariant: return "not_invariant";
    case ErrorKind::domain: return "domain";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

}  // namespace estimand
