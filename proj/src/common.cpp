#include "mvis/common.hpp"

#include <cstdlib>
#include <string>

namespace mvis
{

BudgetExhausted::BudgetExhausted(const std::string & what, long lower, long upper, std::uint64_t nodes) :
    std::runtime_error(what + ": node budget exhausted after " + std::to_string(nodes) + " nodes (bounds "
                       + std::to_string(lower) + ".." + std::to_string(upper) + ")"),
    lower_(lower),
    upper_(upper),
    nodes_(nodes)
{
}

std::uint64_t default_node_budget()
{
    if (const char * env = std::getenv("MV_NODE_BUDGET")) {
        char * end = nullptr;
        auto value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            return value;
    }
    return 100'000'000ULL;
}

}
