#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mvis
{

using Vertex = std::uint32_t;

/// Malformed user input: bad edge lists, family specs, CNF files, coloring files.
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain (disconnected graph,
/// non-tree input, a triangle where none is allowed, ...).
class PreconditionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An exact search ran out of its node budget. Carries the best bounds known at
/// the time so callers never mistake a partial search for an answer.
class BudgetExhausted : public std::runtime_error
{
public:
    BudgetExhausted(const std::string & what, long lower, long upper, std::uint64_t nodes);

    long lower() const noexcept { return lower_; }
    long upper() const noexcept { return upper_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    long lower_;
    long upper_;
    std::uint64_t nodes_;
};

/// Reads MV_NODE_BUDGET, falling back to 10^8 search nodes.
std::uint64_t default_node_budget();

struct SearchOptions
{
    std::uint64_t node_budget = default_node_budget();
};

namespace detail
{
    struct BudgetHit
    {
        std::uint64_t nodes;
    };

    class NodeCounter
    {
    public:
        explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}

        void tick()
        {
            if (++nodes_ > budget_)
                throw BudgetHit{nodes_};
        }

        std::uint64_t nodes() const { return nodes_; }

    private:
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
    };
}

}
