#include "gtcount/testhooks.hpp"

#include <atomic>
#include <utility>

namespace gtc::testhooks {

namespace {
std::atomic<Fault> g_fault{Fault::none};

constexpr std::pair<Fault, const char*> kNames[] = {
    {Fault::none, "none"},
    {Fault::o_formula_denominator, "o-formula-denominator"},
    {Fault::e_formula_denominator, "e-formula-denominator"},
    {Fault::o_det_exponent, "o-det-exponent"},
    {Fault::e_det_exponent, "e-det-exponent"},
    {Fault::o_det_denominator, "o-det-denominator"},
    {Fault::e_det_denominator, "e-det-denominator"},
};
}  // namespace

void inject(Fault f) { g_fault.store(f, std::memory_order_relaxed); }
void clear() { g_fault.store(Fault::none, std::memory_order_relaxed); }
Fault active() { return g_fault.load(std::memory_order_relaxed); }

std::optional<Fault> fault_from_name(const std::string& name) {
    for (const auto& [f, n] : kNames)
        if (name == n) return f;
    return std::nullopt;
}

const char* fault_name(Fault f) {
    for (const auto& [fault, n] : kNames)
        if (fault == f) return n;
    return "?";
}

}  // namespace gtc::testhooks
