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

#ifndef ARCHED_ARCHED_HPP
#define ARCHED_ARCHED_HPP

#include "arched/correlation_closed.hpp"
#include "arched/correlation_oracle.hpp"
#include "arched/errors.hpp"
#include "arched/geometry.hpp"
#include "arched/numerics.hpp"
#include "arched/spectrum.hpp"
#include "arched/wavefield.hpp"

#endif
