// Copyright 2026 The nilrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILREC_ERROR_HPP_
#define NILREC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nilrec {

enum class Errc {
  kRange,
  kSizeCap,
  kCertification,
  kStructure,
  kDimension,
  kShape,
  kDomain,
  kParse,
  kConsistency,
};

const char* ErrcName(Errc code);

// All library failures are reported as nilrec::Error; code() tells callers
// (notably the CLI exit-code mapping) which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nilrec

#endif  // NILREC_ERROR_HPP_
