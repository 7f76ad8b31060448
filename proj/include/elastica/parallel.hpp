#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace elastica
{
	/// Worker cap: ELASTICA_THREADS if set to a positive integer, otherwise the
	/// hardware concurrency.
	inline unsigned thread_count()
	{
		if (const char *env = std::getenv("ELASTICA_THREADS"))
		{
			const int n = std::atoi(env);
			if (n > 0)
				return static_cast<unsigned>(n);
		}
		return std::max(1u, std::thread::hardware_concurrency());
	}

	/// Runs fn(i) for i in [begin, end). Each index writes only its own output, so
	/// results do not depend on the schedule.
	template <typename Index, typename Fn>
	void parallel_for(Index begin, Index end, Fn &&fn)
	{
		const Index count = end - begin;
		const unsigned workers = static_cast<unsigned>(std::min<Index>(static_cast<Index>(thread_count()), count));
		if (workers <= 1)
		{
			for (Index i = begin; i < end; ++i)
				fn(i);
			return;
		}
		std::exception_ptr failure;
		std::mutex failure_mutex;
		std::vector<std::jthread> pool;
		pool.reserve(workers);
		for (unsigned w = 0; w < workers; ++w)
		{
			pool.emplace_back([&, w] {
				for (Index i = begin + static_cast<Index>(w); i < end; i += static_cast<Index>(workers))
				{
					try
					{
						fn(i);
					}
					catch (...)
					{
						std::lock_guard lock(failure_mutex);
						if (!failure)
							failure = std::current_exception();
						return;
					}
				}
			});
		}
		pool.clear();
		if (failure)
			std::rethrow_exception(failure);
	}
} // namespace elastica
