/*
   Copyright 2026 The bchatlas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ATLAS_ERRORS_HPP
#define ATLAS_ERRORS_HPP

#include <stdexcept>

namespace atlas {

// Input lies outside every range a closed-form statement decides.
class OutOfTheoremRange : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// m ≡ 0 (mod 8), or the family parameter t is below its floor.
class UnsupportedLength : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class ParityError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

// The requested generator would have degree n (zero-dimensional code).
class DegenerateCode : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace atlas

#endif  // ATLAS_ERRORS_HPP
