// SPDX-License-Identifier: Apache-2.0
//
// arched: spatial correlation and degrees of freedom of arched antenna arrays
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ARCHED_ERRORS_HPP
#define ARCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arched
{
    // Argument outside the supported domain (orders, angles, sizes, indices)
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Non-finite samples, failed convergence, PSD violations
    class NumericError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Requested problem exceeds a hard size guard
    class ResourceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
