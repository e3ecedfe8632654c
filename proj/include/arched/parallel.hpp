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

#ifndef ARCHED_PARALLEL_HPP
#define ARCHED_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace arched
{
    // 0 means "all hardware threads"
    inline std::size_t resolve_threads(std::size_t requested)
    {
        if (requested == 0)
            return std::max<std::size_t>(1, std::thread::hardware_concurrency());
        return requested;
    }

    // Calls fn(i) for i in [0, count). Work item i goes to worker i % threads, so
    // every item is computed by exactly one call regardless of the thread count.
    // The first exception thrown by any worker is rethrown on the caller.
    template <typename Fn>
    void parallel_for(std::size_t count, std::size_t threads, Fn &&fn)
    {
        threads = std::min(resolve_threads(threads), std::max<std::size_t>(count, 1));
        if (threads <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }

        std::exception_ptr failure;
        std::mutex failure_lock;
        {
            std::vector<std::jthread> pool;
            pool.reserve(threads);
            for (std::size_t t = 0; t < threads; ++t)
            {
                pool.emplace_back([&, t]
                {
                    try
                    {
                        for (std::size_t i = t; i < count; i += threads)
                            fn(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(failure_lock);
                        if (!failure)
                            failure = std::current_exception();
                    }
                });
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    }
}

#endif
