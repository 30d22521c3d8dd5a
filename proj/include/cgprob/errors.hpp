/*
   Copyright 2026 The cgprob Authors

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

#ifndef CGPROB_ERRORS_HPP
#define CGPROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cgprob {

/// A series operation needs a valuation that the operand does not have.
class valuation_error : public std::domain_error {
public:
    valuation_error(const std::string& what, int offending_degree)
        : std::domain_error(what), degree_(offending_degree)
    {
    }
    int offending_degree() const noexcept { return degree_; }

private:
    int degree_;
};

/// A coefficient that must be even is odd (or not an integer at all).
class parity_error : public std::domain_error {
public:
    parity_error(const std::string& what, int index) : std::domain_error(what), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

/// A theorem-backed invariant failed; always a bug in this library.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cgprob

#endif
