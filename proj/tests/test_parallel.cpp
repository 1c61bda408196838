#include <atomic>
#include <stdexcept>
#include <vector>

#include "superconf/parallel.hpp"
#include "test_util.hpp"

using namespace superconf;

TEST(Parallel, VisitsEveryIndexOnce) {
    set_thread_count(4);
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
    set_thread_count(0);
}

TEST(Parallel, RethrowsTheLowestIndexException) {
    for (unsigned t : {1u, 2u, 7u}) {
        set_thread_count(t);
        try {
            parallel_for(200, [](std::size_t i) {
                if (i % 37 == 5) throw std::runtime_error(std::to_string(i));
            });
            ADD_FAILURE() << "expected an exception";
        } catch (const std::runtime_error& e) {
            EXPECT_STREQ(e.what(), "5");
        }
    }
    set_thread_count(0);
}

TEST(Parallel, ThreadCountOverride) {
    set_thread_count(3);
    EXPECT_EQ(thread_count(), 3u);
    set_thread_count(0);
    EXPECT_GE(thread_count(), 1u);
}

TEST(Parallel, EmptyRange) {
    bool called = false;
    parallel_for(0, [&](std::size_t) { called = true; });
    EXPECT_FALSE(called);
}
